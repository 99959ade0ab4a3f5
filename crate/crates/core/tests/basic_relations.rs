//! Cross-checks of the polynomial constructions against the operator
//! structure, for every family and every bundled binding: the eigen
//! relation is the independent oracle certifying each build.

use askey_core::families::bindings::default_bindings;
use askey_core::families::{
    build_pn, catalog, eval_at_special_point, leading_coefficient_check,
    representation_of, spectral_data, Class,
};
use askey_core::laurent::LaurentPoly;
use askey_core::operators::{
    verify_backward_relation, verify_eigen, verify_factorization, verify_forward_relation,
    OperatorContext,
};

const N_MAX: i64 = 6;

#[test]
fn eigen_relation_certifies_every_build() {
    for spec in catalog() {
        for binding in default_bindings(spec.id) {
            let ctx = OperatorContext::new(&spec, &binding).unwrap();
            for n in 0..=N_MAX {
                let outcome = verify_eigen(&ctx, n)
                    .unwrap_or_else(|e| panic!("{} n={n}: {e}", spec.id));
                assert!(
                    outcome.passed,
                    "{} [{}] n={n}: residual {:?}",
                    spec.id,
                    binding.digest(),
                    outcome.residual
                );
            }
        }
    }
}

#[test]
fn forward_and_backward_shift_relations() {
    for spec in catalog() {
        for binding in default_bindings(spec.id) {
            let ctx = OperatorContext::new(&spec, &binding).unwrap();
            for n in 0..=N_MAX {
                let fwd = verify_forward_relation(&ctx, n).unwrap();
                assert!(fwd.passed, "{} forward n={n}: {:?}", spec.id, fwd.residual);
                if n >= 1 {
                    let bwd = verify_backward_relation(&ctx, n).unwrap();
                    assert!(bwd.passed, "{} backward n={n}: {:?}", spec.id, bwd.residual);
                }
            }
        }
    }
}

#[test]
fn hamiltonian_factorizes_through_shifts() {
    for spec in catalog() {
        let binding = &default_bindings(spec.id)[0];
        let ctx = OperatorContext::new(&spec, binding).unwrap();
        for n in 0..=N_MAX {
            let out = verify_factorization(&ctx, n).unwrap();
            assert!(out.passed, "{} n={n}: {:?}", spec.id, out.residual);
        }
    }
}

#[test]
fn spectral_cross_identity() {
    // f_n(λ)·b_{n-1}(λ) = E_n(λ) for n ≥ 1
    for spec in catalog() {
        for binding in default_bindings(spec.id) {
            for n in 1..=N_MAX {
                let (energy, f, _) = spectral_data(&spec, &binding, n).unwrap();
                let (_, _, b_prev) = spectral_data(&spec, &binding, n - 1).unwrap();
                assert_eq!(&f * &b_prev, energy, "{} n={n}", spec.id);
                if n == 1 {
                    let (e0, ..) = spectral_data(&spec, &binding, 0).unwrap();
                    assert!(e0.is_zero(), "{} ground energy", spec.id);
                }
            }
        }
    }
}

#[test]
fn leading_coefficients_match() {
    for spec in catalog() {
        for binding in default_bindings(spec.id) {
            for n in 0..=N_MAX {
                assert!(
                    leading_coefficient_check(&spec, &binding, n).unwrap(),
                    "{} [{}] n={n}",
                    spec.id,
                    binding.digest()
                );
            }
        }
    }
}

#[test]
fn unit_degree_zero_polynomial() {
    for spec in catalog() {
        let binding = &default_bindings(spec.id)[0];
        let rep = representation_of(&spec, binding).unwrap();
        let p0 = build_pn(&spec, binding, 0).unwrap();
        assert_eq!(p0, LaurentPoly::one(rep.var), "{}", spec.id);
        assert!(build_pn(&spec, binding, -1).unwrap().is_zero());
    }
}

#[test]
fn special_point_closed_forms() {
    for spec in catalog() {
        if spec.zeros.is_none() {
            continue;
        }
        for binding in default_bindings(spec.id) {
            let zeros = (spec.zeros.unwrap())(&binding).unwrap();
            for n in 0..=N_MAX {
                for j in 0..zeros.len() {
                    // errors if built value and closed form disagree
                    eval_at_special_point(&spec, &binding, n, j).unwrap_or_else(|e| {
                        panic!("{} [{}] n={n} j={j}: {e}", spec.id, binding.digest())
                    });
                }
            }
        }
    }
}

#[test]
fn circle_polynomials_are_reflection_symmetric() {
    for spec in catalog() {
        if !matches!(spec.class, Class::III | Class::IV) {
            continue;
        }
        let binding = &default_bindings(spec.id)[0];
        let rep = representation_of(&spec, binding).unwrap();
        for n in 0..=N_MAX {
            let pn = build_pn(&spec, binding, n).unwrap();
            let untwisted = pn.substitute_scale(&rep.twist.inv().unwrap()).unwrap();
            assert_eq!(
                untwisted.invert_variable(),
                untwisted,
                "{} n={n} not symmetric",
                spec.id
            );
        }
    }
}
