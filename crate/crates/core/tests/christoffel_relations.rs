//! The central cross-check of the catalog: for every family with a
//! nontrivial `Φ̌`, the determinant route and the closed-form route to the
//! expansion coefficients agree exactly, and the expansion identity itself
//! has zero residual with both coefficient sets.

use askey_core::christoffel::{
    alpha_closed_form, alpha_from_determinants, composition_check_aw, compute_phi,
    d_matrix_det, diagonal_nonvanishing, single_shift_aw, single_shift_product_aw,
    verify_degree_bookkeeping, verify_expansion,
};
use askey_core::families::bindings::default_bindings;
use askey_core::families::{catalog, family, FamilyId};

const N_MAX: i64 = 6;

#[test]
fn determinant_alphas_equal_closed_forms_everywhere() {
    for spec in catalog() {
        if spec.m_degree == 0 {
            continue;
        }
        for binding in default_bindings(spec.id) {
            for n in 0..=N_MAX {
                let det_route = alpha_from_determinants(&spec, &binding, n)
                    .unwrap_or_else(|e| panic!("{} [{}] n={n}: {e}", spec.id, binding.digest()));
                let closed = alpha_closed_form(&spec, &binding, n).unwrap();
                assert_eq!(
                    det_route,
                    closed,
                    "{} [{}] n={n}",
                    spec.id,
                    binding.digest()
                );
                assert!(closed.alpha[spec.m_degree].is_one(), "{} α_m ≠ 1", spec.id);
            }
        }
    }
}

#[test]
fn base_determinant_closed_forms() {
    // D_n^{(0,…,m-1)} (derivative-normalized for the double-root family,
    // where the printed form starts at n = 1)
    for spec in catalog() {
        let Some(d_closed) = spec.d_lead else { continue };
        let ells: Vec<i64> = (0..spec.m_degree as i64).collect();
        let n_start = if spec.id == FamilyId::B { 1 } else { 0 };
        for binding in default_bindings(spec.id) {
            for n in n_start..=N_MAX {
                let det = d_matrix_det(&spec, &binding, n, &ells).unwrap();
                let expect = d_closed(&binding, n).unwrap();
                assert_eq!(det, expect, "{} [{}] n={n}", spec.id, binding.digest());
            }
        }
    }
}

#[test]
fn expansion_identity_zero_residual_both_routes() {
    for spec in catalog() {
        if spec.m_degree == 0 {
            continue;
        }
        for binding in default_bindings(spec.id) {
            let phi = compute_phi(&spec, &binding).unwrap();
            for n in 0..=N_MAX {
                let closed = alpha_closed_form(&spec, &binding, n).unwrap();
                let out = verify_expansion(&spec, &binding, &phi, &closed).unwrap();
                assert!(
                    out.passed,
                    "{} [{}] n={n} closed-form route: {:?}",
                    spec.id,
                    binding.digest(),
                    out.residual
                );
                let det_route = alpha_from_determinants(&spec, &binding, n).unwrap();
                let out = verify_expansion(&spec, &binding, &phi, &det_route).unwrap();
                assert!(out.passed, "{} n={n} determinant route", spec.id);
                let bk = verify_degree_bookkeeping(&spec, &binding, &phi, n).unwrap();
                assert!(bk.passed, "{} n={n} degree bookkeeping: {:?}", spec.id, bk.residual);
            }
        }
    }
}

#[test]
fn surjectivity_surrogate_nonvanishing() {
    for spec in catalog() {
        if spec.m_degree == 0 {
            continue;
        }
        for binding in default_bindings(spec.id) {
            for n in 0..=N_MAX {
                assert!(
                    diagonal_nonvanishing(&spec, &binding, n).unwrap(),
                    "{} [{}] n={n}: β_n·α_{{n,0}} vanished",
                    spec.id,
                    binding.digest()
                );
            }
        }
    }
}

#[test]
fn askey_wilson_single_shift_ladder() {
    let spec = family(FamilyId::AW);
    for binding in default_bindings(FamilyId::AW) {
        let all_real = ["a1", "a2", "a3", "a4"]
            .iter()
            .all(|s| binding.get(s).unwrap().is_real());
        if !all_real {
            continue;
        }
        let prod = single_shift_product_aw(&spec, &binding).unwrap();
        assert!(prod.passed, "Φ̌ ≠ ∏ Φ̌^{{(j)}}: {:?}", prod.residual);
        for n in 0..=N_MAX {
            for j in 0..4 {
                let out = single_shift_aw(&spec, &binding, j, n).unwrap();
                assert!(
                    out.passed,
                    "single shift j={} n={n} [{}]: {:?}",
                    j + 1,
                    binding.digest(),
                    out.residual
                );
            }
            let comp = composition_check_aw(&spec, &binding, n).unwrap();
            assert!(comp.passed, "composition n={n}: {:?}", comp.residual);
        }
    }
}
