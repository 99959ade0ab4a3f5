//! Differential families, working directly in the sinusoidal coordinate.
//!
//! Hermite, Laguerre, Jacobi, Bessel and pseudo Jacobi. The operator data
//! is the coefficient pair `(c₁(η;λ), c₂(η))` of `H̃ = -4c₂∂² - 4c₁∂`
//! together with the constant `c_F` of the forward operator `F = c_F·d/dη`.

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Var};
use crate::scalar::{factorial, rising_factorial as rf, Scalar};

use super::hyper::f_series;
use super::util::*;
use super::{Binding, Class, FamilyId, FamilySpec, OqmData, ZeroPoint};

fn eta_poly(terms: &[(i64, Scalar)]) -> LaurentPoly {
    LaurentPoly::from_terms(Var::X, terms)
}

fn real_gt(b: &Binding, slot: &str, threshold: (i64, i64)) -> Result<bool> {
    let v = b.get(slot)?;
    Ok(v.is_real() && (v - &Scalar::ratio(threshold.0, threshold.1)).re().is_positive())
}

// ---------------------------------------------------------------------------
// Hermite (trivial Φ̌)
// ---------------------------------------------------------------------------

pub fn hermite() -> FamilySpec {
    FamilySpec {
        id: FamilyId::He,
        class: Class::Differential,
        m_degree: 0,
        slots: &[],
        needs_s: false,
        needs_w: false,
        validate: |_b| Ok(()),
        physical: |_b| Ok(true),
        shift: |b| Ok(b.clone()),
        energy: |_b, n| Ok(int(2 * n)),
        f_const: |_b, n| Ok(int(2 * n)),
        b_const: |_b, _n| Ok(int(1)),
        c_lead: |_b, n| int(2).pow(n),
        build: |_b, n| {
            // H_n(η) = n! Σ_k (-1)^k (2η)^{n-2k} / (k!(n-2k)!)
            let mut p = LaurentPoly::zero(Var::X);
            let nf = factorial(n as u32);
            for k in 0..=(n / 2) {
                let sign = int(-1).pow(k)?;
                let coeff = &(&nf * &sign)
                    * &(&int(2).pow(n - 2 * k)?
                        * &(&factorial(k as u32) * &factorial((n - 2 * k) as u32)).inv()?);
                p = &p + &LaurentPoly::monomial(Var::X, coeff, n - 2 * k);
            }
            Ok(p)
        },
        potential: None,
        oqm: Some(OqmData {
            c1: |_b| Ok(eta_poly(&[(1, Scalar::ratio(-1, 2))])),
            c2: |_b| Ok(eta_poly(&[(0, Scalar::ratio(1, 4))])),
            c_f: |_b| Ok(Scalar::one()),
        }),
        zeros: None,
        pn_at_zero: None,
        pn_deriv_at_zero: None,
        c_phi: None,
        d_lead: None,
        alpha: None,
        beta: None,
        beta_f: None,
    }
}

// ---------------------------------------------------------------------------
// Laguerre
// ---------------------------------------------------------------------------

pub fn laguerre() -> FamilySpec {
    FamilySpec {
        id: FamilyId::L,
        class: Class::Differential,
        m_degree: 1,
        slots: &["g"],
        needs_s: false,
        needs_w: false,
        validate: |b| {
            if !b.get("g")?.is_real() {
                return Err(Error::InvalidBinding { reason: "g must be real".into() });
            }
            Ok(())
        },
        physical: |b| real_gt(b, "g", (1, 2)),
        shift: |b| Ok(b.with("g", b.get("g")? + &Scalar::one())),
        energy: |_b, n| Ok(int(4 * n)),
        f_const: |_b, _n| Ok(int(-2)),
        b_const: |_b, n| Ok(int(-2 * (n + 1))),
        c_lead: |_b, n| int(-1).pow(n)?.try_div(&factorial(n as u32)),
        build: |b, n| {
            let g = b.get("g")?.clone();
            let n32 = n as u32;
            let gh = &g + &half();
            let pre = rf(&gh, n32).try_div(&factorial(n32))?;
            let eta = eta_poly(&[(1, Scalar::one())]);
            Ok(f_series(n32, &[], &[], &[gh], &eta, Var::X)?.scale(&pre))
        },
        potential: None,
        oqm: Some(OqmData {
            c1: |b| {
                let g = b.get("g")?.clone();
                Ok(eta_poly(&[(0, &g + &half()), (1, int(-1))]))
            },
            c2: |_b| Ok(eta_poly(&[(1, Scalar::one())])),
            c_f: |_b| Ok(int(2)),
        }),
        zeros: Some(|_b| {
            Ok(vec![ZeroPoint { eta: Scalar::zero(), rep: Scalar::zero(), multiplicity: 1 }])
        }),
        pn_at_zero: Some(|b, n, j| {
            if j != 0 {
                return Err(Error::IndexOutOfRange);
            }
            let g = b.get("g")?.clone();
            rf(&(&g + &half()), n as u32).try_div(&factorial(n as u32))
        }),
        pn_deriv_at_zero: None,
        c_phi: Some(|_b| Ok(Scalar::one())),
        d_lead: Some(|_b, _n| Ok(Scalar::one())),
        alpha: Some(|b, n, k| {
            let g = b.get("g")?.clone();
            match k {
                1 => Ok(Scalar::one()),
                0 => {
                    let num = -(&(&int(n) + &g) + &half());
                    num.try_div(&int(n + 1))
                }
                _ => Err(Error::IndexOutOfRange),
            }
        }),
        beta: Some(|_b, n| Ok(int(-(n + 1)))),
        beta_f: Some(|_b, n| Ok(int(2 * (n + 1)))),
    }
}

// ---------------------------------------------------------------------------
// Jacobi
// ---------------------------------------------------------------------------

fn j_params(b: &Binding) -> Result<(Scalar, Scalar)> {
    Ok((b.get("g")?.clone(), b.get("h")?.clone()))
}

pub fn jacobi() -> FamilySpec {
    FamilySpec {
        id: FamilyId::J,
        class: Class::Differential,
        m_degree: 2,
        slots: &["g", "h"],
        needs_s: false,
        needs_w: false,
        validate: |b| {
            let (g, h) = j_params(b)?;
            if !g.is_real() || !h.is_real() {
                return Err(Error::InvalidBinding { reason: "g, h must be real".into() });
            }
            Ok(())
        },
        physical: |b| Ok(real_gt(b, "g", (1, 2))? && real_gt(b, "h", (1, 2))?),
        shift: |b| {
            let (g, h) = j_params(b)?;
            Ok(b.with("g", &g + &Scalar::one()).with("h", &h + &Scalar::one()))
        },
        energy: |b, n| {
            let (g, h) = j_params(b)?;
            Ok(&int(4 * n) * &(&int(n) + &(&g + &h)))
        },
        f_const: |b, n| {
            let (g, h) = j_params(b)?;
            Ok(&int(-2) * &(&int(n) + &(&g + &h)))
        },
        b_const: |_b, n| Ok(int(-2 * (n + 1))),
        c_lead: |b, n| {
            let (g, h) = j_params(b)?;
            let num = rf(&(&int(n) + &(&g + &h)), n as u32);
            num.try_div(&(&int(2).pow(n)? * &factorial(n as u32)))
        },
        build: |b, n| {
            let (g, h) = j_params(b)?;
            let n32 = n as u32;
            let gh = &g + &half();
            let pre = rf(&gh, n32).try_div(&factorial(n32))?;
            // argument (1-η)/2
            let arg = eta_poly(&[(0, half()), (1, -half())]);
            let series =
                f_series(n32, &[&int(n) + &(&g + &h)], &[], &[gh], &arg, Var::X)?;
            Ok(series.scale(&pre))
        },
        potential: None,
        oqm: Some(OqmData {
            c1: |b| {
                let (g, h) = j_params(b)?;
                Ok(eta_poly(&[
                    (0, &h - &g),
                    (1, -(&(&g + &h) + &Scalar::one())),
                ]))
            },
            c2: |_b| Ok(eta_poly(&[(0, Scalar::one()), (2, int(-1))])),
            c_f: |_b| Ok(int(-4)),
        }),
        zeros: Some(|_b| {
            Ok(vec![
                ZeroPoint { eta: Scalar::one(), rep: Scalar::one(), multiplicity: 1 },
                ZeroPoint { eta: int(-1), rep: int(-1), multiplicity: 1 },
            ])
        }),
        pn_at_zero: Some(|b, n, j| {
            let (g, h) = j_params(b)?;
            let n32 = n as u32;
            match j {
                0 => rf(&(&g + &half()), n32).try_div(&factorial(n32)),
                1 => {
                    let v = rf(&(&h + &half()), n32).try_div(&factorial(n32))?;
                    Ok(&int(-1).pow(n)? * &v)
                }
                _ => Err(Error::IndexOutOfRange),
            }
        }),
        pn_deriv_at_zero: None,
        c_phi: Some(|_b| Ok(Scalar::ratio(-1, 4))),
        d_lead: Some(|b, n| {
            let (g, h) = j_params(b)?;
            let num = -(&int(2 * n + 1) + &(&g + &h));
            num.try_div(&int(n + 1))
        }),
        alpha: Some(|b, n, k| {
            let (g, h) = j_params(b)?;
            let gh = &g + &h;
            match k {
                2 => Ok(Scalar::one()),
                1 => {
                    let num = &-(&g - &h) * &(&int(2 * n + 2) + &gh);
                    let den = &int(n + 2) * &(&int(2 * n + 1) + &gh);
                    num.try_div(&den)
                }
                0 => {
                    let num = &(&(&(&int(n) + &g) + &half())
                        * &(&(&int(n) + &h) + &half()))
                        * &(&int(2 * n + 3) + &gh);
                    let den = &rf(&int(n + 1), 2) * &(&int(2 * n + 1) + &gh);
                    (-num).try_div(&den)
                }
                _ => Err(Error::IndexOutOfRange),
            }
        }),
        beta: Some(|b, n| {
            let (g, h) = j_params(b)?;
            let num = -rf(&int(n + 1), 2);
            num.try_div(&rf(&(&int(2 * n + 2) + &(&g + &h)), 2))
        }),
        beta_f: Some(|b, n| {
            let (g, h) = j_params(b)?;
            let num = &(&int(2) * &rf(&int(n + 1), 2))
                * &(&int(n + 1) + &(&g + &h));
            num.try_div(&rf(&(&int(2 * n + 2) + &(&g + &h)), 2))
        }),
    }
}

// ---------------------------------------------------------------------------
// Bessel
// ---------------------------------------------------------------------------

pub fn bessel() -> FamilySpec {
    FamilySpec {
        id: FamilyId::B,
        class: Class::Differential,
        m_degree: 2,
        slots: &["h"],
        needs_s: false,
        needs_w: false,
        validate: |b| {
            if !b.get("h")?.is_real() {
                return Err(Error::InvalidBinding { reason: "h must be real".into() });
            }
            Ok(())
        },
        physical: |b| real_gt(b, "h", (0, 1)),
        shift: |b| Ok(b.with("h", b.get("h")? - &Scalar::one())),
        energy: |b, n| {
            let h = b.get("h")?.clone();
            Ok(&int(n) * &(&(&int(2) * &h) - &int(n)))
        },
        f_const: |b, n| {
            let h = b.get("h")?.clone();
            Ok(&-half() * &(&int(n) * &(&(&int(2) * &h) - &int(n))))
        },
        b_const: |_b, _n| Ok(int(-2)),
        c_lead: |b, n| {
            let h = b.get("h")?.clone();
            let num = rf(&(&int(n) - &(&int(2) * &h)), n as u32);
            num.try_div(&int(2).pow(n)?)
        },
        build: |b, n| {
            let h = b.get("h")?.clone();
            let n32 = n as u32;
            // ₂F₀(-n, n-2h; — | -η/2)
            let arg = eta_poly(&[(1, -half())]);
            f_series(n32, &[&int(n) - &(&int(2) * &h)], &[], &[], &arg, Var::X)
        },
        potential: None,
        oqm: Some(OqmData {
            c1: |b| {
                let h = b.get("h")?.clone();
                Ok(eta_poly(&[
                    (0, half()),
                    (1, &(&Scalar::one() - &(&int(2) * &h)) * &Scalar::ratio(1, 4)),
                ]))
            },
            c2: |_b| Ok(eta_poly(&[(2, Scalar::ratio(1, 4))])),
            c_f: |_b| Ok(Scalar::one()),
        }),
        zeros: Some(|_b| {
            Ok(vec![ZeroPoint { eta: Scalar::zero(), rep: Scalar::zero(), multiplicity: 2 }])
        }),
        pn_at_zero: Some(|_b, _n, j| {
            if j != 0 {
                return Err(Error::IndexOutOfRange);
            }
            Ok(Scalar::one())
        }),
        pn_deriv_at_zero: Some(|b, n, j| {
            if j != 0 {
                return Err(Error::IndexOutOfRange);
            }
            let h = b.get("h")?.clone();
            Ok(&half() * &(&int(n) * &(&int(n) - &(&int(2) * &h))))
        }),
        c_phi: Some(|_b| Ok(Scalar::one())),
        d_lead: Some(|b, n| {
            // the derivative-normalized base determinant, defined for n ≥ 1
            let h = b.get("h")?.clone();
            let two_h = &int(2) * &h;
            let num = &int(2 * n + 1) - &two_h;
            num.try_div(&(&int(n) * &(&int(n) - &two_h)))
        }),
        alpha: Some(|b, n, k| {
            let h = b.get("h")?.clone();
            let two_h = &int(2) * &h;
            match k {
                2 => Ok(Scalar::one()),
                1 => {
                    let num = &int(-4) * &(&(&int(n) - &h) + &Scalar::one());
                    num.try_div(&(&int(2 * n + 1) - &two_h))
                }
                0 => {
                    let num = &int(2 * n + 3) - &two_h;
                    num.try_div(&(&int(2 * n + 1) - &two_h))
                }
                _ => Err(Error::IndexOutOfRange),
            }
        }),
        beta: Some(|b, n| {
            let h = b.get("h")?.clone();
            let base = &int(2 * n + 2) - &(&int(2) * &h);
            int(4).try_div(&rf(&base, 2))
        }),
        beta_f: Some(|b, n| {
            let h = b.get("h")?.clone();
            let base = &int(2 * n + 2) - &(&int(2) * &h);
            let num = &int(2 * (n + 1)) * &(&int(n + 1) - &(&int(2) * &h));
            num.try_div(&rf(&base, 2))
        }),
    }
}

// ---------------------------------------------------------------------------
// pseudo Jacobi
// ---------------------------------------------------------------------------

fn pj_params(b: &Binding) -> Result<(Scalar, Scalar)> {
    Ok((b.get("h")?.clone(), b.get("mu")?.clone()))
}

pub fn pseudo_jacobi() -> FamilySpec {
    FamilySpec {
        id: FamilyId::PJ,
        class: Class::Differential,
        m_degree: 2,
        slots: &["h", "mu"],
        needs_s: false,
        needs_w: false,
        validate: |b| {
            let (h, mu) = pj_params(b)?;
            if !h.is_real() || !mu.is_real() {
                return Err(Error::InvalidBinding { reason: "h, mu must be real".into() });
            }
            Ok(())
        },
        physical: |b| Ok(real_gt(b, "h", (0, 1))? && real_gt(b, "mu", (0, 1))?),
        shift: |b| Ok(b.with("h", b.get("h")? - &Scalar::one())),
        energy: |b, n| {
            let (h, _) = pj_params(b)?;
            Ok(&int(n) * &(&(&int(2) * &h) - &int(n)))
        },
        f_const: |_b, n| Ok(int(n)),
        b_const: |b, n| {
            let (h, _) = pj_params(b)?;
            Ok(&(&int(2) * &h) - &int(n + 1))
        },
        c_lead: |_b, _n| Ok(Scalar::one()),
        build: |b, n| {
            let (h, mu) = pj_params(b)?;
            let n32 = n as u32;
            // (-2i)ⁿ(-h+1/2-iμ)_n / (n-2h)_n · ₂F₁(-n, n-2h; -h+1/2-iμ | (1-iη)/2)
            let lower = &(&-h.clone() + &half()) - &(&Scalar::i() * &mu);
            let den = rf(&(&int(n) - &(&int(2) * &h)), n32);
            let pre = (&(&int(-2) * &Scalar::i()).pow(n)? * &rf(&lower, n32))
                .try_div(&den)
                .map_err(|_| Error::ZeroDenominator {
                    context: "(n-2h)_n vanished in the pseudo Jacobi prefactor".into(),
                })?;
            let arg = eta_poly(&[(0, half()), (1, &-half() * &Scalar::i())]);
            let series = f_series(
                n32,
                &[&int(n) - &(&int(2) * &h)],
                &[],
                &[lower],
                &arg,
                Var::X,
            )?;
            Ok(series.scale(&pre))
        },
        potential: None,
        oqm: Some(OqmData {
            c1: |b| {
                let (h, mu) = pj_params(b)?;
                Ok(eta_poly(&[
                    (0, &-half() * &mu),
                    (1, &(&Scalar::one() - &(&int(2) * &h)) * &Scalar::ratio(1, 4)),
                ]))
            },
            c2: |_b| Ok(eta_poly(&[(0, Scalar::ratio(1, 4)), (2, Scalar::ratio(1, 4))])),
            c_f: |_b| Ok(Scalar::one()),
        }),
        zeros: Some(|_b| {
            Ok(vec![
                ZeroPoint { eta: Scalar::i(), rep: Scalar::i(), multiplicity: 1 },
                ZeroPoint { eta: -Scalar::i(), rep: -Scalar::i(), multiplicity: 1 },
            ])
        }),
        pn_at_zero: Some(|b, n, j| {
            let (h, mu) = pj_params(b)?;
            let n32 = n as u32;
            let sign = match j {
                0 => Scalar::one(),
                1 => int(-1),
                _ => return Err(Error::IndexOutOfRange),
            };
            let base = &(&-h.clone() + &half()) + &(&(&sign * &Scalar::i()) * &mu);
            let num = &(&(&int(2) * &sign) * &Scalar::i()).pow(n)? * &rf(&base, n32);
            num.try_div(&rf(&(&int(n) - &(&int(2) * &h)), n32))
        }),
        pn_deriv_at_zero: None,
        c_phi: Some(|_b| Ok(Scalar::one())),
        d_lead: Some(|b, n| {
            let (h, _) = pj_params(b)?;
            let num = &-Scalar::i() * &(&(&int(2) * &h) - &int(n));
            num.try_div(&(&h - &int(n)))
        }),
        alpha: Some(|b, n, k| {
            let (h, mu) = pj_params(b)?;
            let two_h = &int(2) * &h;
            match k {
                2 => Ok(Scalar::one()),
                1 => {
                    let num = &(&int(-4) * &mu) * &(&two_h - &int(n + 1));
                    let den = &(&two_h - &int(2 * n + 1)) * &(&two_h - &int(2 * n + 3));
                    num.try_div(&den)
                }
                0 => {
                    let d1 = &two_h - &int(2 * n + 1);
                    let num = &rf(&(&two_h - &int(n + 1)), 2)
                        * &(&(&d1 * &d1) + &(&int(4) * &(&mu * &mu)));
                    let den = &(&int(4) * &rf(&(&h - &int(n + 1)), 2)) * &(&d1 * &d1);
                    num.try_div(&den)
                }
                _ => Err(Error::IndexOutOfRange),
            }
        }),
        beta: Some(|_b, _n| Ok(Scalar::one())),
        beta_f: Some(|_b, n| Ok(int(n + 1))),
    }
}
