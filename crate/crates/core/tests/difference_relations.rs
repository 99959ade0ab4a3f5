//! The difference relations (difference families) and differential
//! relations (differential families) that follow from combining the
//! expansion identity with the factored forward pair, plus the factored
//! pair identities themselves.

use askey_core::christoffel::{alpha_closed_form, verify_forward_pair_on_pn};
use askey_core::families::bindings::default_bindings;
use askey_core::families::{catalog, family, Class, FamilyId};
use askey_core::laurent::{LaurentPoly, Var};
use askey_core::operators::{
    verify_difference_relation, verify_differential_relation, verify_forward_pair_on_monomial,
    verify_phi_halfshift_sum, OperatorContext,
};
use askey_core::scalar::Scalar;

const N_MAX: i64 = 4;

#[test]
fn phi_halfshift_sum_identity() {
    for spec in catalog() {
        if !spec.class.is_difference() {
            continue;
        }
        for binding in default_bindings(spec.id) {
            let ctx = OperatorContext::new(&spec, &binding).unwrap();
            let out = verify_phi_halfshift_sum(&ctx).unwrap();
            assert!(out.passed, "{}: {:?}", spec.id, out.residual);
        }
    }
}

#[test]
fn forward_pair_operator_identity_on_monomials() {
    for spec in catalog() {
        if !spec.class.is_difference() {
            continue;
        }
        let binding = &default_bindings(spec.id)[0];
        let ctx = OperatorContext::new(&spec, binding).unwrap();
        for k in 0..=10u32 {
            let out = verify_forward_pair_on_monomial(&ctx, k).unwrap();
            assert!(out.passed, "{} η^{k}: {:?}", spec.id, out.residual);
        }
    }
}

#[test]
fn forward_pair_on_polynomials() {
    for spec in catalog() {
        if !spec.class.is_difference() {
            continue;
        }
        let binding = &default_bindings(spec.id)[0];
        let ctx = OperatorContext::new(&spec, binding).unwrap();
        for n in 0..=N_MAX {
            let out = verify_forward_pair_on_pn(&ctx, n).unwrap();
            assert!(out.passed, "{} n={n}: {:?}", spec.id, out.residual);
        }
    }
}

#[test]
fn difference_relations_zero_residual() {
    for spec in catalog() {
        if !spec.class.is_difference() || spec.m_degree == 0 {
            continue;
        }
        for binding in default_bindings(spec.id) {
            let ctx = OperatorContext::new(&spec, &binding).unwrap();
            for n in 0..=N_MAX {
                let coeffs = alpha_closed_form(&spec, &binding, n).unwrap();
                let alpha = |k: usize| Ok(coeffs.alpha[k].clone());
                let out =
                    verify_difference_relation(&ctx, n, &alpha, &coeffs.beta_f).unwrap();
                assert!(
                    out.passed,
                    "{} [{}] n={n}: {:?}",
                    spec.id,
                    binding.digest(),
                    out.residual
                );
            }
        }
    }
}

#[test]
fn differential_relations_zero_residual() {
    for spec in catalog() {
        if spec.class != Class::Differential || spec.m_degree == 0 {
            continue;
        }
        for binding in default_bindings(spec.id) {
            let ctx = OperatorContext::new(&spec, &binding).unwrap();
            for n in 0..=N_MAX {
                let coeffs = alpha_closed_form(&spec, &binding, n).unwrap();
                let alpha = |k: usize| Ok(coeffs.alpha[k].clone());
                let out =
                    verify_differential_relation(&ctx, n, &alpha, &coeffs.beta_f).unwrap();
                assert!(
                    out.passed,
                    "{} [{}] n={n}: {:?}",
                    spec.id,
                    binding.digest(),
                    out.residual
                );
            }
        }
    }
}

#[test]
fn laguerre_differential_instance_by_hand() {
    // n=0, g=1:  (4/c_F)c₂P'₁ = 2η·(-1) = -2η  and
    // β^F₀ Σ α_{0,k}P_k = 2((3/2-η) - 3/2) = -2η
    let spec = family(FamilyId::L);
    let binding = &default_bindings(FamilyId::L)[0];
    let ctx = OperatorContext::new(&spec, binding).unwrap();
    let coeffs = alpha_closed_form(&spec, binding, 0).unwrap();
    assert_eq!(coeffs.beta_f, Scalar::int(2));
    let alpha = |k: usize| Ok(coeffs.alpha[k].clone());
    let out = verify_differential_relation(&ctx, 0, &alpha, &coeffs.beta_f).unwrap();
    assert!(out.passed);
    // and the left side really is -2η
    let p1 = askey_core::families::build_pn(&spec, binding, 1).unwrap();
    let oqm = spec.oqm.as_ref().unwrap();
    let c2 = (oqm.c2)(binding).unwrap();
    let cf = (oqm.c_f)(binding).unwrap();
    let lhs = c2
        .try_mul(&p1.derivative())
        .unwrap()
        .scale(&(&Scalar::int(4) * &cf.inv().unwrap()));
    assert_eq!(lhs, LaurentPoly::monomial(Var::X, Scalar::int(-2), 1));
}
