//! Floating-point suite over the four weight archetypes: ratio identities,
//! Gram matrices, the transformed-measure orthogonality, and truncation
//! convergence of the q-product weight.

use askey_core::families::bindings::default_bindings;
use askey_core::families::{family, FamilyId};
use askey_core::numeric::{
    christoffel_orthogonality_check, default_samples, gram_check, orthogonality_check,
    weight_ratio_check, weight_ratio_residual, NumericConfig, NUMERIC_FAMILIES,
};

#[test]
fn weight_ratio_identities() {
    let cfg = NumericConfig::default();
    for id in NUMERIC_FAMILIES {
        let spec = family(id);
        let binding = &default_bindings(id)[0];
        let samples = default_samples(id);
        assert!(samples.len() >= 5);
        let out = weight_ratio_check(&spec, binding, &samples, &cfg).unwrap();
        assert!(out.passed, "{id}: {:?}", out.residual);
    }
}

#[test]
fn q_product_truncation_converges_monotonically() {
    let spec = family(FamilyId::AW);
    let binding = &default_bindings(FamilyId::AW)[0];
    let samples = default_samples(FamilyId::AW);
    let coarse = NumericConfig::new(100, 32, 1e-8).unwrap();
    let fine = NumericConfig::new(200, 32, 1e-8).unwrap();
    let r_coarse = weight_ratio_residual(&spec, binding, &samples, &coarse).unwrap();
    let r_fine = weight_ratio_residual(&spec, binding, &samples, &fine).unwrap();
    assert!(
        r_fine <= r_coarse,
        "residual did not shrink: {r_coarse:e} → {r_fine:e}"
    );
    assert!(r_fine <= 1e-8);
}

#[test]
fn gram_matrices_are_diagonal() {
    let cfg = NumericConfig::new(200, 32, 1e-6).unwrap();
    for id in NUMERIC_FAMILIES {
        let spec = family(id);
        let binding = &default_bindings(id)[0];
        let out = gram_check(&spec, binding, 4, &cfg).unwrap();
        assert!(out.passed, "{id}: {:?}", out.residual);
    }
}

#[test]
fn pairwise_orthogonality() {
    let cfg = NumericConfig::new(200, 32, 1e-6).unwrap();
    for id in NUMERIC_FAMILIES {
        let spec = family(id);
        let binding = &default_bindings(id)[0];
        for (n, m) in [(0, 0), (2, 2), (0, 3), (1, 4)] {
            let out = orthogonality_check(&spec, binding, n, m, &cfg).unwrap();
            assert!(out.passed, "{id} ({n},{m}): {:?}", out.residual);
        }
    }
}

#[test]
fn transformed_measure_orthogonality() {
    let cfg = NumericConfig::new(200, 32, 1e-6).unwrap();
    for id in NUMERIC_FAMILIES {
        let spec = family(id);
        let binding = &default_bindings(id)[0];
        let out = christoffel_orthogonality_check(&spec, binding, 3, &cfg).unwrap();
        assert!(out.passed, "{id}: {:?}", out.residual);
    }
}
