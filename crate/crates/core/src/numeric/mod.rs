//! Floating-point verification of the identities that involve
//! non-polynomial objects: ground-state weight ratios and orthogonality
//! norms. Everything exact stays exact until the last moment — polynomial
//! coefficients are converted to doubles once per check; the weights
//! (Gamma functions, infinite q-products) are the only natively floating
//! objects.
//!
//! One family per weight archetype is wired up: Meixner-Pollaczek
//! (Gamma-product weight on the line), Askey-Wilson (q-product weight on
//! the circle), Jacobi (beta-type weight) and Laguerre (gamma-type weight).

pub mod gamma;
pub mod quad;

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::christoffel::compute_phi;
use crate::error::{Error, Result};
use crate::families::{build_pn, Binding, FamilyId, FamilySpec};
use crate::laurent::LaurentPoly;
use crate::operators::Outcome;
use crate::scalar::Scalar;

use gamma::{gamma as cgamma, gamma_abs_sq};
use quad::integrate_adaptive;

/// Float width of the numeric suite. Only IEEE double is implemented;
/// requesting extended precision is reported as a configuration error
/// rather than silently downgraded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Precision {
    Double,
    Extended,
}

/// Knobs of the floating-point suite.
#[derive(Clone, Debug)]
pub struct NumericConfig {
    pub precision: Precision,
    /// Number of factors kept in `(a;q)_∞`.
    pub qpoch_truncation: u32,
    /// Gauss-Legendre points per panel.
    pub quad_points: usize,
    /// Relative tolerance of all comparisons.
    pub tol_rel: f64,
}

impl NumericConfig {
    pub fn new(qpoch_truncation: u32, quad_points: usize, tol_rel: f64) -> Result<Self> {
        Self::with_precision(Precision::Double, qpoch_truncation, quad_points, tol_rel)
    }

    pub fn with_precision(
        precision: Precision,
        qpoch_truncation: u32,
        quad_points: usize,
        tol_rel: f64,
    ) -> Result<Self> {
        if precision == Precision::Extended {
            return Err(Error::Config {
                message: "extended precision is not available in this build".into(),
            });
        }
        if qpoch_truncation < 50 {
            return Err(Error::Config {
                message: "qpoch_truncation must be at least 50".into(),
            });
        }
        if !(tol_rel > 0.0 && tol_rel <= 1e-4) {
            return Err(Error::Config { message: "tol_rel must lie in (0, 1e-4]".into() });
        }
        Ok(NumericConfig { precision, qpoch_truncation, quad_points, tol_rel })
    }
}

impl Default for NumericConfig {
    fn default() -> Self {
        NumericConfig {
            precision: Precision::Double,
            qpoch_truncation: 200,
            quad_points: 32,
            tol_rel: 1e-8,
        }
    }
}

/// Families with a numeric weight model.
pub const NUMERIC_FAMILIES: [FamilyId; 4] =
    [FamilyId::MP, FamilyId::AW, FamilyId::J, FamilyId::L];

fn scalar_f64(s: &Scalar) -> f64 {
    s.to_f64().0
}

fn to_complex(s: &Scalar) -> Complex64 {
    let (re, im) = s.to_f64();
    Complex64::new(re, im)
}

fn poly_at(p: &LaurentPoly, v: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for (k, c) in p.terms() {
        acc += to_complex(c) * v.powi(k as i32);
    }
    acc
}

fn qpoch_f64(a: Complex64, q: f64, n: i64) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    let mut aq = a * q.powi(n as i32 - n as i32); // a·q⁰
    for _ in 0..n {
        acc *= Complex64::new(1.0, 0.0) - aq;
        aq *= q;
    }
    acc
}

fn qpoch_inf(a: Complex64, q: f64, terms: u32) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    let mut aq = a;
    for _ in 0..terms {
        acc *= Complex64::new(1.0, 0.0) - aq;
        aq *= q;
    }
    acc
}

fn factorial_f64(n: i64) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// The weight data of one family at one binding: support, `φ₀(x)²`, the
/// sinusoidal coordinate, the representation point for polynomial
/// evaluation, and the norm `h_n`.
pub struct WeightModel {
    pub support: (f64, f64),
    weight: Box<dyn Fn(f64) -> f64>,
    eta: Box<dyn Fn(f64) -> f64>,
    rep_point: Box<dyn Fn(f64) -> Complex64>,
    norm: Box<dyn Fn(i64) -> f64>,
}

impl WeightModel {
    pub fn weight_at(&self, x: f64) -> f64 {
        (self.weight)(x)
    }

    pub fn eta_at(&self, x: f64) -> f64 {
        (self.eta)(x)
    }

    pub fn rep_at(&self, x: f64) -> Complex64 {
        (self.rep_point)(x)
    }

    pub fn norm(&self, n: i64) -> f64 {
        (self.norm)(n)
    }
}

/// Builds the weight model; `Config` error for families outside the
/// numeric set.
pub fn weight_model(spec: &FamilySpec, b: &Binding, cfg: &NumericConfig) -> Result<WeightModel> {
    if !(spec.physical)(b)? {
        return Err(Error::NotPhysical);
    }
    match spec.id {
        FamilyId::MP => {
            let a = scalar_f64(b.get("a")?);
            let w = to_complex(b.w()?);
            let phi0 = w.im.atan2(w.re);
            let two_sin = 2.0 * phi0.sin();
            Ok(WeightModel {
                support: (-40.0, 40.0),
                weight: Box::new(move |x| ((2.0 * phi0 - PI) * x).exp() * gamma_abs_sq(a, x)),
                eta: Box::new(|x| x),
                rep_point: Box::new(|x| Complex64::new(x, 0.0)),
                norm: Box::new(move |n| {
                    2.0 * PI * cgamma(Complex64::new(n as f64 + 2.0 * a, 0.0)).re
                        / (factorial_f64(n) * two_sin.powf(2.0 * a))
                }),
            })
        }
        FamilyId::AW => {
            let q = scalar_f64(&b.q()?);
            let a: Vec<f64> = ["a1", "a2", "a3", "a4"]
                .iter()
                .map(|s| {
                    let v = b.get(s)?;
                    if !v.is_real() {
                        return Err(Error::Config {
                            message: "numeric weight model needs real parameters".into(),
                        });
                    }
                    Ok(scalar_f64(v))
                })
                .collect::<Result<_>>()?;
            let b4: f64 = a.iter().product();
            let terms = cfg.qpoch_truncation;
            let a_w = a.clone();
            Ok(WeightModel {
                support: (0.0, PI),
                weight: Box::new(move |x| {
                    let z = Complex64::new(x.cos(), x.sin());
                    let num = qpoch_inf(z * z, q, terms) * qpoch_inf((z * z).conj(), q, terms);
                    let mut den = Complex64::new(1.0, 0.0);
                    for aj in &a_w {
                        den *= qpoch_inf(z * aj, q, terms) * qpoch_inf(z.conj() * aj, q, terms);
                    }
                    (num / den).re
                }),
                eta: Box::new(|x| x.cos()),
                rep_point: Box::new(|x| Complex64::new(x.cos(), x.sin())),
                norm: Box::new(move |n| {
                    let one = Complex64::new(1.0, 0.0);
                    let mut pairs = one;
                    for j in 0..4 {
                        for k in (j + 1)..4 {
                            pairs *= qpoch_inf(
                                Complex64::new(a[j] * a[k] * q.powi(n as i32), 0.0),
                                q,
                                terms,
                            );
                        }
                    }
                    let num = 2.0
                        * PI
                        * qpoch_f64(Complex64::new(b4 * q.powi(n as i32 - 1), 0.0), q, n).re
                        * qpoch_inf(Complex64::new(b4 * q.powi(2 * n as i32), 0.0), q, terms).re;
                    let den =
                        qpoch_inf(Complex64::new(q.powi(n as i32 + 1), 0.0), q, terms).re
                            * pairs.re;
                    num / den
                }),
            })
        }
        FamilyId::J => {
            let g = scalar_f64(b.get("g")?);
            let h = scalar_f64(b.get("h")?);
            Ok(WeightModel {
                support: (0.0, PI / 2.0),
                weight: Box::new(move |x| {
                    x.sin().powf(2.0 * g) * x.cos().powf(2.0 * h)
                }),
                eta: Box::new(|x| (2.0 * x).cos()),
                rep_point: Box::new(|x| Complex64::new((2.0 * x).cos(), 0.0)),
                norm: Box::new(move |n| {
                    let nf = n as f64;
                    let g1 = cgamma(Complex64::new(nf + g + 0.5, 0.0)).re;
                    let g2 = cgamma(Complex64::new(nf + h + 0.5, 0.0)).re;
                    let g3 = cgamma(Complex64::new(nf + g + h, 0.0)).re;
                    g1 * g2 / (2.0 * factorial_f64(n) * (2.0 * nf + g + h) * g3)
                }),
            })
        }
        FamilyId::L => {
            let g = scalar_f64(b.get("g")?);
            Ok(WeightModel {
                support: (0.0, 12.0),
                weight: Box::new(move |x: f64| x.powf(2.0 * g) * (-x * x).exp()),
                eta: Box::new(|x| x * x),
                rep_point: Box::new(|x| Complex64::new(x * x, 0.0)),
                norm: Box::new(move |n| {
                    cgamma(Complex64::new(n as f64 + g + 0.5, 0.0)).re
                        / (2.0 * factorial_f64(n))
                }),
            })
        }
        other => Err(Error::Config {
            message: format!("family {other} has no numeric weight model"),
        }),
    }
}

/// Default interior sample points for the ratio check.
pub fn default_samples(id: FamilyId) -> Vec<f64> {
    match id {
        FamilyId::MP => vec![-2.0, -0.8, 0.3, 1.1, 2.2],
        FamilyId::AW => (1..=5).map(|k| k as f64 * PI / 6.0).collect(),
        FamilyId::J => (1..=5).map(|k| k as f64 * PI / 12.0).collect(),
        FamilyId::L => vec![0.3, 0.7, 1.2, 1.9, 2.6],
        _ => Vec::new(),
    }
}

/// Largest relative residual of
/// `φ₀(x;λ+shift)²/φ₀(x;λ)² - Φ̌(x;λ)` over the samples.
pub fn weight_ratio_residual(
    spec: &FamilySpec,
    b: &Binding,
    samples: &[f64],
    cfg: &NumericConfig,
) -> Result<f64> {
    let phi = compute_phi(spec, b)?;
    let base = weight_model(spec, b, cfg)?;
    let shifted_binding = spec.expansion_shift(b)?;
    let shifted = weight_model(spec, &shifted_binding, cfg)?;
    let mut worst: f64 = 0.0;
    for &x in samples {
        let ratio = shifted.weight_at(x) / base.weight_at(x);
        let eta = base.eta_at(x);
        let expect = poly_at(&phi.in_eta, Complex64::new(eta, 0.0)).re;
        worst = worst.max((ratio - expect).abs() / expect.abs());
    }
    Ok(worst)
}

/// The ratio identity `Φ̌·φ₀(λ)² = φ₀(λ+shift)²` at the sample points.
pub fn weight_ratio_check(
    spec: &FamilySpec,
    b: &Binding,
    samples: &[f64],
    cfg: &NumericConfig,
) -> Result<Outcome> {
    let worst = weight_ratio_residual(spec, b, samples, cfg)?;
    if worst <= cfg.tol_rel {
        Ok(Outcome::pass())
    } else {
        Ok(Outcome {
            passed: false,
            residual: Some(format!("max relative residual {worst:e} > {:e}", cfg.tol_rel)),
        })
    }
}

/// The orthogonality norm `h_n` of the family at this binding.
pub fn norm_value(spec: &FamilySpec, b: &Binding, n: i64, cfg: &NumericConfig) -> Result<f64> {
    Ok(weight_model(spec, b, cfg)?.norm(n))
}

fn quadrature_inner_product(
    spec: &FamilySpec,
    poly_binding: &Binding,
    model: &WeightModel,
    extra: Option<&LaurentPoly>,
    n: i64,
    m: i64,
    cfg: &NumericConfig,
    scale: f64,
) -> Result<f64> {
    let pn = build_pn(spec, poly_binding, n)?;
    let pm = build_pn(spec, poly_binding, m)?;
    let f = |x: f64| {
        let v = model.rep_at(x);
        let mut val = model.weight_at(x) * (poly_at(&pn, v) * poly_at(&pm, v)).re;
        if let Some(e) = extra {
            val *= poly_at(e, Complex64::new(model.eta_at(x), 0.0)).re;
        }
        val
    };
    integrate_adaptive(&f, model.support.0, model.support.1, cfg.quad_points, cfg.tol_rel / 4.0, scale)
}

/// `∫ φ₀² P̌_n P̌_m dx = h_n δ_{nm}` within the relative tolerance.
pub fn orthogonality_check(
    spec: &FamilySpec,
    b: &Binding,
    n: i64,
    m: i64,
    cfg: &NumericConfig,
) -> Result<Outcome> {
    let model = weight_model(spec, b, cfg)?;
    let hn = model.norm(n);
    let hm = model.norm(m);
    let scale = (hn * hm).sqrt();
    let value = quadrature_inner_product(spec, b, &model, None, n, m, cfg, scale)?;
    let deviation = if n == m { (value - hn).abs() / hn } else { value.abs() / scale };
    if deviation <= cfg.tol_rel {
        Ok(Outcome::pass())
    } else {
        Ok(Outcome {
            passed: false,
            residual: Some(format!("({n},{m}): relative deviation {deviation:e}")),
        })
    }
}

/// Gram matrix of `P̌_0..P̌_{n_max}`: diagonal to tolerance with entries
/// `h_n`. Returns the worst relative deviation on failure.
pub fn gram_check(
    spec: &FamilySpec,
    b: &Binding,
    n_max: i64,
    cfg: &NumericConfig,
) -> Result<Outcome> {
    let mut worst = (0.0f64, 0i64, 0i64);
    let model = weight_model(spec, b, cfg)?;
    for n in 0..=n_max {
        for m in n..=n_max {
            let hn = model.norm(n);
            let hm = model.norm(m);
            let scale = (hn * hm).sqrt();
            let value = quadrature_inner_product(spec, b, &model, None, n, m, cfg, scale)?;
            let dev = if n == m { (value - hn).abs() / hn } else { value.abs() / scale };
            if dev > worst.0 {
                worst = (dev, n, m);
            }
        }
    }
    if worst.0 <= cfg.tol_rel {
        Ok(Outcome::pass())
    } else {
        Ok(Outcome {
            passed: false,
            residual: Some(format!(
                "worst Gram deviation {:e} at ({}, {})",
                worst.0, worst.1, worst.2
            )),
        })
    }
}

/// The transformed-measure orthogonality: quadrature of
/// `Φ̌·φ₀(λ)²·P̌_n(λ+shift)P̌_m(λ+shift)` equals `h_n(λ+shift)·δ_{nm}`.
pub fn christoffel_orthogonality_check(
    spec: &FamilySpec,
    b: &Binding,
    n_max: i64,
    cfg: &NumericConfig,
) -> Result<Outcome> {
    let phi = compute_phi(spec, b)?;
    let model = weight_model(spec, b, cfg)?;
    let shifted_binding = spec.expansion_shift(b)?;
    let shifted_model = weight_model(spec, &shifted_binding, cfg)?;
    let mut worst = (0.0f64, 0i64, 0i64);
    for n in 0..=n_max {
        for m in n..=n_max {
            let hn = shifted_model.norm(n);
            let hm = shifted_model.norm(m);
            let scale = (hn * hm).sqrt();
            let value = quadrature_inner_product(
                spec,
                &shifted_binding,
                &model,
                Some(&phi.in_eta),
                n,
                m,
                cfg,
                scale,
            )?;
            let dev = if n == m { (value - hn).abs() / hn } else { value.abs() / scale };
            if dev > worst.0 {
                worst = (dev, n, m);
            }
        }
    }
    if worst.0 <= cfg.tol_rel {
        Ok(Outcome::pass())
    } else {
        Ok(Outcome {
            passed: false,
            residual: Some(format!(
                "worst transformed-Gram deviation {:e} at ({}, {})",
                worst.0, worst.1, worst.2
            )),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::bindings::default_bindings;
    use crate::families::family;

    #[test]
    fn mp_ratio_is_gamma_recurrence() {
        // a = 1, x = 2: Γ(2+2i)Γ(2-2i)/(Γ(1+2i)Γ(1-2i)) = |1+2i|² = 5 = a²+x²
        let spec = family(FamilyId::MP);
        let b = &default_bindings(FamilyId::MP)[0];
        let cfg = NumericConfig::default();
        let res = weight_ratio_residual(&spec, b, &[2.0], &cfg).unwrap();
        assert!(res < 1e-12, "residual {res}");
        let direct = gamma_abs_sq(2.0, 2.0) / gamma_abs_sq(1.0, 2.0);
        assert!((direct - 5.0).abs() < 1e-12);
    }

    #[test]
    fn laguerre_ratio_is_x_squared() {
        let spec = family(FamilyId::L);
        let b = &default_bindings(FamilyId::L)[0];
        let cfg = NumericConfig::default();
        let res = weight_ratio_residual(&spec, b, &[2.0], &cfg).unwrap();
        assert!(res < 1e-14, "residual {res}");
    }

    #[test]
    fn jacobi_norm_reference_value() {
        // g = h = 1, n = 0: h₀ = π/16
        let spec = family(FamilyId::J);
        let b = &default_bindings(FamilyId::J)[0];
        let cfg = NumericConfig::default();
        let h0 = norm_value(&spec, b, 0, &cfg).unwrap();
        assert!((h0 - PI / 16.0).abs() < 1e-12, "h0 = {h0}");
    }

    #[test]
    fn mp_norm_reference_value() {
        // a = 1, φ = π/2, n = 0: h₀ = π/2
        let spec = family(FamilyId::MP);
        let b = &default_bindings(FamilyId::MP)[0];
        let cfg = NumericConfig::default();
        let h0 = norm_value(&spec, b, 0, &cfg).unwrap();
        assert!((h0 - PI / 2.0).abs() < 1e-10, "h0 = {h0}");
    }
}
