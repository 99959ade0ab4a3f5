//! Acceptance suite: the exit gate of the crate.
//!
//! Twelve criteria, each printed as one pass/fail line (run with
//! `cargo test --test acceptance -- --nocapture` to see them). Exact checks
//! carry no tolerance at all; the floating-point criteria carry the pinned
//! tolerances stated next to them.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::time::Instant;

use askey_core::christoffel::{
    alpha_closed_form, alpha_from_determinants, composition_check_aw, compute_phi,
    d_matrix_det, diagonal_nonvanishing, single_shift_aw, trivial_phi_check,
    verify_expansion,
};
use askey_core::families::bindings::default_bindings;
use askey_core::families::{catalog, family, spectral_data, FamilyId};
use askey_core::laurent::{LaurentPoly, Var};
use askey_core::numeric::{
    default_samples, gram_check, norm_value, weight_ratio_check, NumericConfig,
    NUMERIC_FAMILIES,
};
use askey_core::operators::{
    verify_backward_relation, verify_difference_relation, verify_differential_relation,
    verify_eigen, verify_forward_pair_on_monomial, verify_forward_relation,
    verify_phi_halfshift_sum, OperatorContext,
};
use askey_core::scalar::Scalar;
use askey_core::suite::{run, Mutation, MutationTarget, SuiteKind, SuiteSpec};

const N_DEPTH: i64 = 8;

struct Gate {
    failures: Vec<String>,
}

impl Gate {
    fn new() -> Self {
        Gate { failures: Vec::new() }
    }

    fn criterion(&mut self, index: usize, description: &str, result: Result<(), String>) {
        match result {
            Ok(()) => println!("criterion {index:2}: PASS — {description}"),
            Err(why) => {
                println!("criterion {index:2}: FAIL — {description}: {why}");
                self.failures.push(format!("criterion {index}: {why}"));
            }
        }
    }

    fn finish(self) {
        assert!(self.failures.is_empty(), "failed criteria:\n{}", self.failures.join("\n"));
    }
}

fn criterion_1_eigen_oracle() -> Result<(), String> {
    let start = Instant::now();
    for spec in catalog() {
        for binding in default_bindings(spec.id) {
            let ctx = OperatorContext::new(&spec, &binding).map_err(|e| e.to_string())?;
            for n in 0..=N_DEPTH {
                let out = verify_eigen(&ctx, n).map_err(|e| e.to_string())?;
                if !out.passed {
                    return Err(format!("{} n={n}: residual {:?}", spec.id, out.residual));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed.as_secs_f64() >= 30.0 {
        return Err(format!("runtime {:.1}s exceeds the 30s target", elapsed.as_secs_f64()));
    }
    Ok(())
}

fn criterion_2_shift_relations() -> Result<(), String> {
    for spec in catalog() {
        for binding in default_bindings(spec.id) {
            let ctx = OperatorContext::new(&spec, &binding).map_err(|e| e.to_string())?;
            for n in 0..=N_DEPTH {
                let fwd = verify_forward_relation(&ctx, n).map_err(|e| e.to_string())?;
                if !fwd.passed {
                    return Err(format!("{} forward n={n}", spec.id));
                }
                if n >= 1 {
                    let bwd = verify_backward_relation(&ctx, n).map_err(|e| e.to_string())?;
                    if !bwd.passed {
                        return Err(format!("{} backward n={n}", spec.id));
                    }
                    let (energy, f, _) = spectral_data(&spec, &binding, n).unwrap();
                    let (_, _, b_prev) = spectral_data(&spec, &binding, n - 1).unwrap();
                    if &f * &b_prev != energy {
                        return Err(format!("{} f_n·b_(n-1) ≠ E_n at n={n}", spec.id));
                    }
                }
            }
        }
    }
    Ok(())
}

fn criterion_3_coefficient_cross_check() -> Result<(), String> {
    let mut nontrivial = 0;
    for spec in catalog() {
        if spec.m_degree == 0 {
            continue;
        }
        nontrivial += 1;
        for binding in default_bindings(spec.id) {
            for n in 0..=N_DEPTH {
                let det_route =
                    alpha_from_determinants(&spec, &binding, n).map_err(|e| e.to_string())?;
                let closed =
                    alpha_closed_form(&spec, &binding, n).map_err(|e| e.to_string())?;
                if det_route != closed {
                    return Err(format!("{} n={n}: routes disagree", spec.id));
                }
            }
        }
    }
    if nontrivial != 16 {
        return Err(format!("expected 16 nontrivial families, saw {nontrivial}"));
    }
    // the double-root variant against the frozen printed form
    // D'^(0,1) = (2n-2h+1)/(n(n-2h))
    let bessel = family(FamilyId::B);
    for binding in default_bindings(FamilyId::B) {
        let h = binding.get("h").unwrap().clone();
        for n in 1..=N_DEPTH {
            let det = d_matrix_det(&bessel, &binding, n, &[0, 1]).map_err(|e| e.to_string())?;
            let expect = (&Scalar::int(2 * n + 1) - &(&Scalar::int(2) * &h))
                .try_div(
                    &(&Scalar::int(n) * &(&Scalar::int(n) - &(&Scalar::int(2) * &h))),
                )
                .unwrap();
            if det != expect {
                return Err(format!("Bessel D'(0,1) mismatch at n={n}"));
            }
        }
    }
    Ok(())
}

fn criterion_4_expansion_identities() -> Result<(), String> {
    for spec in catalog() {
        if spec.m_degree == 0 {
            continue;
        }
        for binding in default_bindings(spec.id) {
            let phi = compute_phi(&spec, &binding).map_err(|e| e.to_string())?;
            for n in 0..=N_DEPTH {
                let coeffs =
                    alpha_closed_form(&spec, &binding, n).map_err(|e| e.to_string())?;
                let out =
                    verify_expansion(&spec, &binding, &phi, &coeffs).map_err(|e| e.to_string())?;
                if !out.passed {
                    return Err(format!("{} n={n}: residual {:?}", spec.id, out.residual));
                }
            }
        }
    }
    Ok(())
}

fn criterion_5_difference_relations() -> Result<(), String> {
    let mut covered = 0;
    for spec in catalog() {
        if !spec.class.is_difference() || spec.m_degree == 0 {
            continue;
        }
        covered += 1;
        for binding in default_bindings(spec.id) {
            let ctx = OperatorContext::new(&spec, &binding).map_err(|e| e.to_string())?;
            for n in 0..=6 {
                let coeffs =
                    alpha_closed_form(&spec, &binding, n).map_err(|e| e.to_string())?;
                let alpha = |k: usize| Ok(coeffs.alpha[k].clone());
                let out = verify_difference_relation(&ctx, n, &alpha, &coeffs.beta_f)
                    .map_err(|e| e.to_string())?;
                if !out.passed {
                    return Err(format!("{} n={n}: residual {:?}", spec.id, out.residual));
                }
            }
        }
    }
    if covered != 12 {
        return Err(format!("expected 12 nontrivial difference families, saw {covered}"));
    }
    Ok(())
}

fn criterion_6_differential_relations() -> Result<(), String> {
    for id in [FamilyId::L, FamilyId::J, FamilyId::B, FamilyId::PJ] {
        let spec = family(id);
        for binding in default_bindings(id) {
            let ctx = OperatorContext::new(&spec, &binding).map_err(|e| e.to_string())?;
            for n in 0..=N_DEPTH {
                let coeffs =
                    alpha_closed_form(&spec, &binding, n).map_err(|e| e.to_string())?;
                let alpha = |k: usize| Ok(coeffs.alpha[k].clone());
                let out = verify_differential_relation(&ctx, n, &alpha, &coeffs.beta_f)
                    .map_err(|e| e.to_string())?;
                if !out.passed {
                    return Err(format!("{id} n={n}"));
                }
            }
        }
    }
    // the hand-derived instance: n=0, g=1 has both sides equal to -2η
    let spec = family(FamilyId::L);
    let binding = &default_bindings(FamilyId::L)[0];
    let p1 = askey_core::families::build_pn(&spec, binding, 1).unwrap();
    let oqm = spec.oqm.as_ref().unwrap();
    let lhs = (oqm.c2)(binding)
        .unwrap()
        .try_mul(&p1.derivative())
        .unwrap()
        .scale(&(&Scalar::int(4) * &(oqm.c_f)(binding).unwrap().inv().unwrap()));
    let expect = LaurentPoly::monomial(Var::X, Scalar::int(-2), 1);
    if lhs != expect {
        return Err("hand-derived instance is not -2η".into());
    }
    Ok(())
}

fn criterion_7_single_parameter_shifts() -> Result<(), String> {
    let spec = family(FamilyId::AW);
    let mut real_bindings = 0;
    for binding in default_bindings(FamilyId::AW) {
        let all_real = ["a1", "a2", "a3", "a4"]
            .iter()
            .all(|s| binding.get(s).unwrap().is_real());
        if !all_real {
            continue;
        }
        real_bindings += 1;
        for n in 0..=6 {
            for j in 0..4 {
                let out =
                    single_shift_aw(&spec, &binding, j, n).map_err(|e| e.to_string())?;
                if !out.passed {
                    return Err(format!("single shift a{} n={n}", j + 1));
                }
            }
            let comp = composition_check_aw(&spec, &binding, n).map_err(|e| e.to_string())?;
            if !comp.passed {
                return Err(format!("composition n={n}: {:?}", comp.residual));
            }
        }
    }
    if real_bindings == 0 {
        return Err("no all-real bindings available".into());
    }
    Ok(())
}

fn criterion_8_forward_pair_identities() -> Result<(), String> {
    let mut classes_seen = Vec::new();
    for spec in catalog() {
        if !spec.class.is_difference() {
            continue;
        }
        if !classes_seen.contains(&format!("{:?}", spec.class)) {
            classes_seen.push(format!("{:?}", spec.class));
        }
        let binding = &default_bindings(spec.id)[0];
        let ctx = OperatorContext::new(&spec, binding).map_err(|e| e.to_string())?;
        let sum = verify_phi_halfshift_sum(&ctx).map_err(|e| e.to_string())?;
        if !sum.passed {
            return Err(format!("{} φ half-shift sum", spec.id));
        }
        for k in 0..=10u32 {
            let out = verify_forward_pair_on_monomial(&ctx, k).map_err(|e| e.to_string())?;
            if !out.passed {
                return Err(format!("{} monomial degree {k}", spec.id));
            }
        }
    }
    if classes_seen.len() != 4 {
        return Err(format!("expected 4 sinusoidal classes, saw {classes_seen:?}"));
    }
    Ok(())
}

fn criterion_9_nonvanishing_surrogate() -> Result<(), String> {
    for spec in catalog() {
        if spec.m_degree == 0 {
            continue;
        }
        let bindings = default_bindings(spec.id);
        if bindings.len() < 3 {
            return Err(format!("{} has fewer than 3 physical bindings", spec.id));
        }
        for binding in bindings {
            for n in 0..=N_DEPTH {
                match diagonal_nonvanishing(&spec, &binding, n) {
                    Ok(true) => {}
                    Ok(false) => return Err(format!("{} n={n}: vanished", spec.id)),
                    Err(e) => return Err(format!("{} n={n}: {e}", spec.id)),
                }
            }
        }
    }
    Ok(())
}

fn criterion_10_trivial_cases() -> Result<(), String> {
    for id in [FamilyId::CqHe, FamilyId::He] {
        let spec = family(id);
        for binding in default_bindings(id) {
            if !trivial_phi_check(&spec, &binding).map_err(|e| e.to_string())? {
                return Err(format!("{id}: Φ̌ ≠ 1"));
            }
        }
    }
    Ok(())
}

fn criterion_11_numeric_checks() -> Result<(), String> {
    // ratio tolerance 1e-8, truncation 200 (AW at s = 1/2); Gram n,m ≤ 4
    // within 1e-6 relative; J(g=h=1) h₀ = π/16 within 1e-8
    let ratio_cfg = NumericConfig::new(200, 32, 1e-8).unwrap();
    let gram_cfg = NumericConfig::new(200, 32, 1e-6).unwrap();
    for id in NUMERIC_FAMILIES {
        let spec = family(id);
        let binding = &default_bindings(id)[0];
        if id == FamilyId::AW {
            let s = binding.s().unwrap();
            if s != &Scalar::ratio(1, 2) {
                return Err("AW numeric binding must have s = 1/2".into());
            }
        }
        let samples = default_samples(id);
        if samples.len() < 5 {
            return Err(format!("{id}: fewer than 5 sample points"));
        }
        let ratio =
            weight_ratio_check(&spec, binding, &samples, &ratio_cfg).map_err(|e| e.to_string())?;
        if !ratio.passed {
            return Err(format!("{id} weight ratio: {:?}", ratio.residual));
        }
        let gram = gram_check(&spec, binding, 4, &gram_cfg).map_err(|e| e.to_string())?;
        if !gram.passed {
            return Err(format!("{id} Gram: {:?}", gram.residual));
        }
    }
    let jacobi = family(FamilyId::J);
    let j_binding = &default_bindings(FamilyId::J)[0];
    let h0 = norm_value(&jacobi, j_binding, 0, &ratio_cfg).map_err(|e| e.to_string())?;
    let reference = PI / 16.0;
    if ((h0 - reference) / reference).abs() > 1e-8 {
        return Err(format!("J h₀ = {h0}, reference π/16 = {reference}"));
    }
    // and the quadrature itself reproduces it
    let model_cfg = NumericConfig::new(200, 32, 1e-8).unwrap();
    let quad = {
        use askey_core::numeric::weight_model;
        use askey_core::numeric::quad::integrate_adaptive;
        let model = weight_model(&jacobi, j_binding, &model_cfg).unwrap();
        integrate_adaptive(
            &|x| model.weight_at(x),
            model.support.0,
            model.support.1,
            32,
            1e-10,
            reference,
        )
        .map_err(|e| e.to_string())?
    };
    if ((quad - reference) / reference).abs() > 1e-8 {
        return Err(format!("quadrature h₀ = {quad} vs π/16"));
    }
    Ok(())
}

fn criterion_12_determinism_and_mutation() -> Result<(), String> {
    let base = SuiteSpec {
        families: vec![FamilyId::MP, FamilyId::AW, FamilyId::L],
        suites: vec![SuiteKind::Basic, SuiteKind::Christoffel],
        n_max: 3,
        bindings: BTreeMap::new(),
        numeric: NumericConfig::default(),
        jobs: None,
        seed: 7,
        mutation: None,
    };
    let first = run(&base).map_err(|e| e.to_string())?.to_structured();
    let second = run(&base).map_err(|e| e.to_string())?.to_structured();
    if first != second {
        return Err("structured reports differ between identical runs".into());
    }
    for (fam, target) in [
        (FamilyId::MP, MutationTarget::AlphaZero),
        (FamilyId::AW, MutationTarget::Beta),
        (FamilyId::L, MutationTarget::AlphaZero),
    ] {
        let mut spec = base.clone();
        spec.mutation = Some(Mutation { family: fam, target });
        let report = run(&spec).map_err(|e| e.to_string())?;
        if report.counts().1 == 0 {
            return Err(format!("mutation {target:?} on {fam} went undetected"));
        }
    }
    Ok(())
}

#[test]
fn acceptance() {
    let mut gate = Gate::new();
    gate.criterion(
        1,
        "eigen relation H̃P̌_n = E_nP̌_n across all 18 families, 3 bindings, n ≤ 8, under 30 s",
        criterion_1_eigen_oracle(),
    );
    gate.criterion(
        2,
        "forward/backward shift relations and f_n·b_{n-1} = E_n on the same grid",
        criterion_2_shift_relations(),
    );
    gate.criterion(
        3,
        "determinant-route coefficients equal closed forms (16 families incl. double-root variant)",
        criterion_3_coefficient_cross_check(),
    );
    gate.criterion(
        4,
        "expansion identities Φ̌·P̌_n(λ+shift) = β_nΣα_{n,k}P̌_{n+k} with zero residual",
        criterion_4_expansion_identities(),
    );
    gate.criterion(
        5,
        "difference relations for the 12 nontrivial difference families, n ≤ 6",
        criterion_5_difference_relations(),
    );
    gate.criterion(
        6,
        "differential relations for L, J, B, pJ, n ≤ 8, with the hand-derived -2η instance",
        criterion_6_differential_relations(),
    );
    gate.criterion(
        7,
        "Askey-Wilson one-parameter ladders and their composition, n ≤ 6",
        criterion_7_single_parameter_shifts(),
    );
    gate.criterion(
        8,
        "φ half-shift identity and factored forward pair on monomials up to degree 10",
        criterion_8_forward_pair_identities(),
    );
    gate.criterion(
        9,
        "β_n·α_{n,0} ≠ 0 at ≥3 physical bindings per family, n ≤ 8",
        criterion_9_nonvanishing_surrogate(),
    );
    gate.criterion(10, "trivial cases reduce to Φ̌ = 1 exactly", criterion_10_trivial_cases());
    gate.criterion(
        11,
        "numeric weight ratios (1e-8), Gram diagonality (1e-6), J h₀ = π/16 (1e-8)",
        criterion_11_numeric_checks(),
    );
    gate.criterion(
        12,
        "byte-identical structured reports and mutation smoke detection",
        criterion_12_determinism_and_mutation(),
    );
    gate.finish();
}
