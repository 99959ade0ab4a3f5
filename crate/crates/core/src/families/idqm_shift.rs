//! Difference families with imaginary half-unit shifts: classes (i) and (ii).
//!
//! Class (i), `η = x`: continuous Hahn, Meixner-Pollaczek.
//! Class (ii), `η = x²`: Wilson, continuous dual Hahn.

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Var};
use crate::rational::RationalFn;
use crate::scalar::{factorial, rising_factorial as rf, Scalar};

use super::hyper::f_series;
use super::util::*;
use super::{Binding, Class, FamilyId, FamilySpec, ZeroPoint};

fn x_poly(terms: &[(i64, Scalar)]) -> LaurentPoly {
    LaurentPoly::from_terms(Var::X, terms)
}

/// `a + i·x` as a linear slot.
fn a_plus_ix(a: &Scalar) -> LaurentPoly {
    x_poly(&[(0, a.clone()), (1, Scalar::i())])
}

/// `a - i·x` as a linear slot.
fn a_minus_ix(a: &Scalar) -> LaurentPoly {
    x_poly(&[(0, a.clone()), (1, -Scalar::i())])
}

// ---------------------------------------------------------------------------
// continuous Hahn
// ---------------------------------------------------------------------------

fn ch_params(b: &Binding) -> Result<[Scalar; 4]> {
    let a1 = b.get("a1")?.clone();
    let a2 = b.get("a2")?.clone();
    let a3 = a1.conj();
    let a4 = a2.conj();
    Ok([a1, a2, a3, a4])
}

pub fn continuous_hahn() -> FamilySpec {
    FamilySpec {
        id: FamilyId::CH,
        class: Class::I,
        m_degree: 4,
        slots: &["a1", "a2"],
        needs_s: false,
        needs_w: false,
        validate: |_b| Ok(()),
        physical: |b| {
            let a = ch_params(b)?;
            Ok(re_positive(&a[0]) && re_positive(&a[1]))
        },
        shift: |b| {
            let a = ch_params(b)?;
            Ok(b.with("a1", &a[0] + &half()).with("a2", &a[1] + &half()))
        },
        energy: |b, n| {
            let (b1, ..) = esym4(&ch_params(b)?);
            Ok(&int(n) * &(&int(n) + &(&b1 - &int(1))))
        },
        f_const: |b, n| {
            let (b1, ..) = esym4(&ch_params(b)?);
            Ok(&int(n) + &(&b1 - &int(1)))
        },
        b_const: |_b, n| Ok(int(n + 1)),
        c_lead: |b, n| {
            let (b1, ..) = esym4(&ch_params(b)?);
            rf(&(&int(n) + &(&b1 - &int(1))), n as u32).try_div(&factorial(n as u32))
        },
        build: |b, n| {
            let a = ch_params(b)?;
            let (b1, ..) = esym4(&a);
            let n32 = n as u32;
            let pre = &Scalar::i().pow(n)?
                * &rf(&(&a[0] + &a[2]), n32)
                    .try_mul_div(&rf(&(&a[0] + &a[3]), n32), &factorial(n32))?;
            let series = f_series(
                n32,
                &[&int(n) + &(&b1 - &int(1))],
                &[a_plus_ix(&a[0])],
                &[&a[0] + &a[2], &a[0] + &a[3]],
                &LaurentPoly::one(Var::X),
                Var::X,
            )?;
            Ok(series.scale(&pre))
        },
        potential: Some(|b| {
            let a = ch_params(b)?;
            let num = a_plus_ix(&a[0]).try_mul(&a_plus_ix(&a[1]))?;
            RationalFn::new(num, LaurentPoly::one(Var::X))
        }),
        oqm: None,
        zeros: Some(|b| {
            let a = ch_params(b)?;
            let mut out = Vec::new();
            for (j, aj) in a.iter().enumerate() {
                let x = if j < 2 { &Scalar::i() * aj } else { &-Scalar::i() * aj };
                out.push(ZeroPoint { eta: x.clone(), rep: x, multiplicity: 1 });
            }
            Ok(out)
        }),
        pn_at_zero: Some(|b, n, j| {
            let a = ch_params(b)?;
            let n32 = n as u32;
            if j > 3 {
                return Err(Error::IndexOutOfRange);
            }
            let (sign, range) = if j < 2 { (Scalar::i(), [2, 3]) } else { (-Scalar::i(), [0, 1]) };
            let prod = &rf(&(&a[j] + &a[range[0]]), n32) * &rf(&(&a[j] + &a[range[1]]), n32);
            (&sign.pow(n)? * &prod).try_div(&factorial(n32))
        }),
        pn_deriv_at_zero: None,
        c_phi: Some(|_b| Ok(Scalar::one())),
        d_lead: Some(|b, n| {
            let a = ch_params(b)?;
            let (b1, ..) = esym4(&a);
            let mut cross = Scalar::one();
            for j in 0..2 {
                for k in 2..4 {
                    cross = &cross * &(&(&a[j] + &a[k]) + &int(n));
                }
            }
            let num = &(&(&a[0] - &a[1]) * &(&a[2] - &a[3]))
                * &(&cross
                    * &(&rf(&(&b1 + &int(2 * n)), 3) * &rf(&(&b1 + &int(2 * n + 2)), 3)));
            let den = &(&rf(&int(n + 1), 3) * &rf(&int(n + 1), 2)) * &int(n + 1);
            num.try_div(&den)
        }),
        alpha: Some(|b, n, k| {
            let a = ch_params(b)?;
            let (b1, b2, b3, b4) = esym4(&a);
            let diff_sum = &(&a[0] - &a[1]) + &(&a[2] - &a[3]);
            let diff_diff = &(&a[0] - &a[1]) - &(&a[2] - &a[3]);
            match k {
                4 => Ok(Scalar::one()),
                3 => {
                    let num = &(&-Scalar::i() * &(&diff_sum * &diff_diff))
                        * &(&b1 + &int(2 * n + 5));
                    num.try_div(&(&int(n + 4) * &(&b1 + &int(2 * n + 2))))
                }
                2 => {
                    let pre_num = &(&b1 + &int(2 * n + 3)) * &(&b1 + &int(2 * n + 6));
                    let pre_den =
                        &rf(&int(n + 3), 2) * &rf(&(&b1 + &int(2 * n + 1)), 2);
                    let np1 = int(n + 1);
                    let bracket = {
                        let mut acc = &int(2 * n + 3) * &rf(&(&b1 + &int(n)), 3);
                        acc = &acc
                            - &(&(&np1 * &int(2 * n + 1)) * &rf(&(&b1 + &int(n + 1)), 2));
                        acc = &acc
                            + &(&(&rf(&np1, 2) * &int(2 * n + 3)) * &(&b1 + &int(n + 2)));
                        acc = &acc - &rf(&np1, 3);
                        acc = &acc - &(&int(6) * &(&b2 * &b2));
                        acc = &acc + &(&b3 * &(&(&int(3) * &b1) + &int(4 * n + 6)));
                        acc = &acc + &(&int(4) * &b4);
                        let inner = &(&rf(&(&b1 + &int(n)), 2)
                            - &(&(&int(4) * &np1) * &(&b1 + &int(n + 1))))
                            + &(&int(n) * &np1);
                        acc = &acc + &(&int(2) * &(&inner * &b2));
                        let cube = |s: &Scalar| s * &(s * s);
                        let sq = |s: &Scalar| s * s;
                        acc = &acc
                            - &(&(&cube(&a[0]) + &cube(&a[1])) * &(&a[2] + &a[3]));
                        acc = &acc
                            - &(&(&a[0] + &a[1]) * &(&cube(&a[2]) + &cube(&a[3])));
                        acc = &acc
                            - &(&(&sq(&a[0]) + &sq(&a[1])) * &(&a[2] * &a[3]));
                        acc = &acc
                            - &(&(&a[0] * &a[1]) * &(&sq(&a[2]) + &sq(&a[3])));
                        acc = &acc
                            + &(&int(4)
                                * &(&(&sq(&a[0]) + &sq(&a[1])) * &(&sq(&a[2]) + &sq(&a[3]))));
                        let mixed = &(&(&sq(&a[0]) + &sq(&a[1])) * &(&a[2] + &a[3]))
                            + &(&(&a[0] + &a[1]) * &(&sq(&a[2]) + &sq(&a[3])));
                        acc = &acc + &(&int(2 * n + 3) * &mixed);
                        acc = &acc
                            + &(&(&int(2) * &rf(&np1, 2))
                                * &(&(&a[0] + &a[1]) * &(&a[2] + &a[3])));
                        acc
                    };
                    (&pre_num * &bracket).try_div(&pre_den)
                }
                1 => {
                    let mut cross = Scalar::one();
                    for j in 0..2 {
                        for l in 2..4 {
                            cross = &cross * &(&(&a[j] + &a[l]) + &int(n + 1));
                        }
                    }
                    let num = &(&(&Scalar::i() * &(&diff_sum * &diff_diff))
                        * &rf(&(&b1 + &int(2 * n + 5)), 2))
                        * &cross;
                    let den = &(&rf(&int(n + 2), 3) * &(&b1 + &int(2 * n)))
                        * &(&b1 + &int(2 * n + 2));
                    num.try_div(&den)
                }
                0 => {
                    let mut cross = Scalar::one();
                    for j in 0..2 {
                        for l in 2..4 {
                            cross = &cross * &rf(&(&(&a[j] + &a[l]) + &int(n)), 2);
                        }
                    }
                    let num = &cross * &rf(&(&b1 + &int(2 * n + 4)), 3);
                    let den = &rf(&int(n + 1), 4) * &rf(&(&b1 + &int(2 * n)), 3);
                    num.try_div(&den)
                }
                _ => Err(Error::IndexOutOfRange),
            }
        }),
        beta: Some(|b, n| {
            let (b1, ..) = esym4(&ch_params(b)?);
            rf(&int(n + 1), 4).try_div(&rf(&(&b1 + &int(2 * n + 3)), 4))
        }),
        beta_f: Some(|b, n| {
            let (b1, ..) = esym4(&ch_params(b)?);
            let num = &rf(&int(n + 1), 4) * &rf(&(&b1 + &int(n + 1)), 2);
            num.try_div(&rf(&(&b1 + &int(2 * n + 3)), 4))
        }),
    }
}

// ---------------------------------------------------------------------------
// Meixner-Pollaczek
// ---------------------------------------------------------------------------

/// `2sinφ = -i(w - w̄)` and `2cosφ = w + w̄`, both exact.
fn two_sin(w: &Scalar) -> Scalar {
    &-Scalar::i() * &(w - &w.conj())
}

fn two_cos(w: &Scalar) -> Scalar {
    w + &w.conj()
}

pub fn meixner_pollaczek() -> FamilySpec {
    FamilySpec {
        id: FamilyId::MP,
        class: Class::I,
        m_degree: 2,
        slots: &["a"],
        needs_s: false,
        needs_w: true,
        validate: |b| {
            validate_w(b)?;
            if !b.get("a")?.is_real() {
                return Err(Error::InvalidBinding { reason: "a must be real".into() });
            }
            Ok(())
        },
        physical: |b| {
            use num_traits::Signed;
            let a = b.get("a")?;
            let w = b.w()?;
            Ok(is_real_positive(a) && w.im().is_positive())
        },
        shift: |b| Ok(b.with("a", b.get("a")? + &half())),
        energy: |b, n| Ok(&int(n) * &two_sin(b.w()?)),
        f_const: |b, _n| Ok(two_sin(b.w()?)),
        b_const: |_b, n| Ok(int(n + 1)),
        c_lead: |b, n| two_sin(b.w()?).pow(n)?.try_div(&factorial(n as u32)),
        build: |b, n| {
            let a = b.get("a")?.clone();
            let w = b.w()?.clone();
            let n32 = n as u32;
            let pre = (&rf(&(&a + &a), n32) * &w.pow(n)?).try_div(&factorial(n32))?;
            let arg = &Scalar::one() - &w.conj().pow(2)?;
            let series = f_series(
                n32,
                &[],
                &[a_plus_ix(&a)],
                &[&a + &a],
                &LaurentPoly::constant(Var::X, arg),
                Var::X,
            )?;
            Ok(series.scale(&pre))
        },
        potential: Some(|b| {
            let a = b.get("a")?.clone();
            let w = b.w()?.clone();
            let num = a_plus_ix(&a).scale(&(&Scalar::i() * &w.conj()));
            RationalFn::new(num, LaurentPoly::one(Var::X))
        }),
        oqm: None,
        zeros: Some(|b| {
            let a = b.get("a")?.clone();
            let p = &Scalar::i() * &a;
            Ok(vec![
                ZeroPoint { eta: p.clone(), rep: p.clone(), multiplicity: 1 },
                ZeroPoint { eta: -&p, rep: -&p, multiplicity: 1 },
            ])
        }),
        pn_at_zero: Some(|b, n, j| {
            let a = b.get("a")?.clone();
            let w = b.w()?.clone();
            let n32 = n as u32;
            let phase = match j {
                0 => w.pow(n)?,
                1 => w.conj().pow(n)?,
                _ => return Err(Error::IndexOutOfRange),
            };
            (&rf(&(&a + &a), n32) * &phase).try_div(&factorial(n32))
        }),
        pn_deriv_at_zero: None,
        c_phi: Some(|_b| Ok(Scalar::one())),
        d_lead: Some(|b, n| {
            let a = b.get("a")?.clone();
            let w = b.w()?;
            // -2i sinφ (2a+n)/(n+1)
            let num = &(&-Scalar::one() * &(w - &w.conj())) * &(&(&a + &a) + &int(n));
            num.try_div(&int(n + 1))
        }),
        alpha: Some(|b, n, k| {
            let a = b.get("a")?.clone();
            match k {
                2 => Ok(Scalar::one()),
                1 => {
                    let num = &-two_cos(b.w()?) * &(&(&a + &a) + &int(n + 1));
                    num.try_div(&int(n + 2))
                }
                0 => rf(&(&(&a + &a) + &int(n)), 2).try_div(&rf(&int(n + 1), 2)),
                _ => Err(Error::IndexOutOfRange),
            }
        }),
        beta: Some(|b, n| {
            let s2 = two_sin(b.w()?);
            rf(&int(n + 1), 2).try_div(&(&s2 * &s2))
        }),
        beta_f: Some(|_b, n| Ok(rf(&int(n + 1), 2))),
    }
}

// ---------------------------------------------------------------------------
// Wilson
// ---------------------------------------------------------------------------

fn w_params(b: &Binding) -> Result<[Scalar; 4]> {
    Ok([
        b.get("a1")?.clone(),
        b.get("a2")?.clone(),
        b.get("a3")?.clone(),
        b.get("a4")?.clone(),
    ])
}

/// Denominator `2ix(2ix+1) = 2i·x - 4x²`.
fn wilson_den() -> LaurentPoly {
    x_poly(&[(1, &Scalar::int(2) * &Scalar::i()), (2, Scalar::int(-4))])
}

pub fn wilson() -> FamilySpec {
    FamilySpec {
        id: FamilyId::W,
        class: Class::II,
        m_degree: 4,
        slots: &["a1", "a2", "a3", "a4"],
        needs_s: false,
        needs_w: false,
        validate: |b| {
            if !conj_closed(&w_params(b)?) {
                return Err(Error::InvalidBinding {
                    reason: "{a*} must equal {a} as a set".into(),
                });
            }
            Ok(())
        },
        physical: |b| Ok(w_params(b)?.iter().all(re_positive)),
        shift: |b| {
            let a = w_params(b)?;
            Ok(b
                .with("a1", &a[0] + &half())
                .with("a2", &a[1] + &half())
                .with("a3", &a[2] + &half())
                .with("a4", &a[3] + &half()))
        },
        energy: |b, n| {
            let (b1, ..) = esym4(&w_params(b)?);
            Ok(&int(n) * &(&int(n) + &(&b1 - &int(1))))
        },
        f_const: |b, n| {
            let (b1, ..) = esym4(&w_params(b)?);
            Ok(&int(-n) * &(&int(n) + &(&b1 - &int(1))))
        },
        b_const: |_b, _n| Ok(int(-1)),
        c_lead: |b, n| {
            let (b1, ..) = esym4(&w_params(b)?);
            Ok(&int(-1).pow(n)? * &rf(&(&int(n) + &(&b1 - &int(1))), n as u32))
        },
        build: |b, n| {
            let a = w_params(b)?;
            let (b1, ..) = esym4(&a);
            let n32 = n as u32;
            let pre = &(&rf(&(&a[0] + &a[1]), n32) * &rf(&(&a[0] + &a[2]), n32))
                * &rf(&(&a[0] + &a[3]), n32);
            let series = f_series(
                n32,
                &[&int(n) + &(&b1 - &int(1))],
                &[a_plus_ix(&a[0]), a_minus_ix(&a[0])],
                &[&a[0] + &a[1], &a[0] + &a[2], &a[0] + &a[3]],
                &LaurentPoly::one(Var::X),
                Var::X,
            )?;
            Ok(series.scale(&pre))
        },
        potential: Some(|b| {
            let a = w_params(b)?;
            let mut num = LaurentPoly::one(Var::X);
            for aj in &a {
                num = num.try_mul(&a_plus_ix(aj))?;
            }
            RationalFn::new(num, wilson_den())
        }),
        oqm: None,
        zeros: Some(|b| {
            let a = w_params(b)?;
            Ok(a.iter()
                .map(|aj| ZeroPoint {
                    eta: -(aj * aj),
                    rep: &Scalar::i() * aj,
                    multiplicity: 1,
                })
                .collect())
        }),
        pn_at_zero: Some(|b, n, j| {
            let a = w_params(b)?;
            if j > 3 {
                return Err(Error::IndexOutOfRange);
            }
            let mut acc = Scalar::one();
            for (k, ak) in a.iter().enumerate() {
                if k != j {
                    acc = &acc * &rf(&(&a[j] + ak), n as u32);
                }
            }
            Ok(acc)
        }),
        pn_deriv_at_zero: None,
        c_phi: Some(|_b| Ok(Scalar::one())),
        d_lead: Some(|b, n| {
            let a = w_params(b)?;
            let (b1, ..) = esym4(&a);
            let pairs = pair_product(&a, |x, y| &(x - y) * &(&(x + y) + &int(n)));
            Ok(&pairs * &(&rf(&(&b1 + &int(2 * n)), 3) * &rf(&(&b1 + &int(2 * n + 2)), 3)))
        }),
        alpha: Some(|b, n, k| {
            let a = w_params(b)?;
            let (b1, b2, b3, b4) = esym4(&a);
            let np1 = int(n + 1);
            match k {
                4 => Ok(Scalar::one()),
                3 => {
                    let bracket = &(&(&rf(&(&b1 + &int(n + 1)), 3)
                        + &(&int(3 * n * n + 12 * n + 11) * &b1))
                        + &(&int(3) * &rf(&np1, 3)))
                        + &(&(&int(4) * &b3) - &(&(&int(2) * &b1) * &b2));
                    let num = &-(&b1 + &int(2 * n + 5)) * &bracket;
                    num.try_div(&(&b1 + &int(2 * n + 2)))
                }
                2 => {
                    let pre_num = &(&b1 + &int(2 * n + 3)) * &(&b1 + &int(2 * n + 6));
                    let pre_den = rf(&(&b1 + &int(2 * n + 1)), 2);
                    let b1n = |j: i64, len: u32| rf(&(&b1 + &int(n + j)), len);
                    let bracket = {
                        let mut acc = &int(3 * n * n + 9 * n + 7) * &b1n(0, 4);
                        acc = &acc
                            + &(&(&b3 + &(&int(2 * n + 3) * &(&(&int(2) * &b2) - &int(1))))
                                * &b1n(0, 3));
                        let c2 = &(&(&int(2) * &b4) - &(&int(5 * n + 6) * &b3))
                            + &(&(&b2 * &(&b2 - &int(2 * (n + 1) * (2 * n + 1))))
                                + &(&(&int(3) * &np1)
                                    * &int(n * n * n + 5 * n * n + 10 * n + 7)));
                        acc = &acc + &(&c2 * &b1n(0, 2));
                        let c1 = &(&(&(&int(2 * (2 * n + 5)) * &b4)
                            + &(&(&int(5 * n * (n + 1)) - &(&int(6) * &b2)) * &b3))
                            - &(&(&(&int(2) * &np1) * &b2)
                                * &(&(&int(2) * &b2) - &int(2 * n * n + 3 * n + 4))))
                            + &(&np1 * &int(6 * n * n * n + 28 * n * n + 53 * n + 36));
                        acc = &acc + &(&c1 * &(&b1 + &int(n)));
                        acc = &acc + &(&int(2 * (n + 2) * (n + 4)) * &b4);
                        acc = &acc
                            + &(&b3
                                * &(&(&(&int(6) * &b3) + &(&int(6 * n) * &b2))
                                    - &int(n * (n + 1) * (n - 4))));
                        acc = &acc
                            + &(&(&np1 * &b2)
                                * &(&(&int(n - 4) * &b2) + &int(2 * (3 * n * n + 5 * n + 4))));
                        acc = &acc
                            + &(&np1 * &int(7 * n * n * n + 32 * n * n + 57 * n + 36));
                        acc
                    };
                    (&pre_num * &bracket).try_div(&pre_den)
                }
                1 => {
                    let pairs = pair_product(&a, |x, y| &(x + y) + &int(n + 1));
                    let bracket = &(&(&(&(&int(3) * &np1) * &rf(&(&b1 + &int(n)), 2))
                        + &(&int(3 * n + 1) * &b1))
                        + &int(n * (n + 1) * (n + 5)))
                        + &(&(&(&int(2) * &b1) * &b2) - &(&int(4) * &b3));
                    let num = &(&-pairs * &rf(&(&b1 + &int(2 * n + 5)), 2)) * &bracket;
                    let den = &(&b1 + &int(2 * n)) * &(&b1 + &int(2 * n + 2));
                    num.try_div(&den)
                }
                0 => {
                    let pairs = pair_product(&a, |x, y| rf(&(&(x + y) + &int(n)), 2));
                    let num = &pairs * &rf(&(&b1 + &int(2 * n + 4)), 3);
                    num.try_div(&rf(&(&b1 + &int(2 * n)), 3))
                }
                _ => Err(Error::IndexOutOfRange),
            }
        }),
        beta: Some(|b, n| {
            let (b1, ..) = esym4(&w_params(b)?);
            Scalar::one().try_div(&rf(&(&b1 + &int(2 * n + 3)), 4))
        }),
        beta_f: Some(|b, n| {
            let (b1, ..) = esym4(&w_params(b)?);
            let num = &rf(&int(n + 1), 2) * &rf(&(&b1 + &int(n + 1)), 2);
            num.try_div(&rf(&(&b1 + &int(2 * n + 3)), 4))
        }),
    }
}

// ---------------------------------------------------------------------------
// continuous dual Hahn
// ---------------------------------------------------------------------------

fn cdh_params(b: &Binding) -> Result<[Scalar; 3]> {
    Ok([b.get("a1")?.clone(), b.get("a2")?.clone(), b.get("a3")?.clone()])
}

pub fn continuous_dual_hahn() -> FamilySpec {
    FamilySpec {
        id: FamilyId::CdH,
        class: Class::II,
        m_degree: 3,
        slots: &["a1", "a2", "a3"],
        needs_s: false,
        needs_w: false,
        validate: |b| {
            if !conj_closed(&cdh_params(b)?) {
                return Err(Error::InvalidBinding {
                    reason: "{a*} must equal {a} as a set".into(),
                });
            }
            Ok(())
        },
        physical: |b| Ok(cdh_params(b)?.iter().all(re_positive)),
        shift: |b| {
            let a = cdh_params(b)?;
            Ok(b
                .with("a1", &a[0] + &half())
                .with("a2", &a[1] + &half())
                .with("a3", &a[2] + &half()))
        },
        energy: |_b, n| Ok(int(n)),
        f_const: |_b, n| Ok(int(-n)),
        b_const: |_b, _n| Ok(int(-1)),
        c_lead: |_b, n| int(-1).pow(n),
        build: |b, n| {
            let a = cdh_params(b)?;
            let n32 = n as u32;
            let pre = &rf(&(&a[0] + &a[1]), n32) * &rf(&(&a[0] + &a[2]), n32);
            let series = f_series(
                n32,
                &[],
                &[a_plus_ix(&a[0]), a_minus_ix(&a[0])],
                &[&a[0] + &a[1], &a[0] + &a[2]],
                &LaurentPoly::one(Var::X),
                Var::X,
            )?;
            Ok(series.scale(&pre))
        },
        potential: Some(|b| {
            let a = cdh_params(b)?;
            let mut num = LaurentPoly::one(Var::X);
            for aj in &a {
                num = num.try_mul(&a_plus_ix(aj))?;
            }
            RationalFn::new(num, wilson_den())
        }),
        oqm: None,
        zeros: Some(|b| {
            let a = cdh_params(b)?;
            Ok(a.iter()
                .map(|aj| ZeroPoint {
                    eta: -(aj * aj),
                    rep: &Scalar::i() * aj,
                    multiplicity: 1,
                })
                .collect())
        }),
        pn_at_zero: Some(|b, n, j| {
            let a = cdh_params(b)?;
            if j > 2 {
                return Err(Error::IndexOutOfRange);
            }
            let mut acc = Scalar::one();
            for (k, ak) in a.iter().enumerate() {
                if k != j {
                    acc = &acc * &rf(&(&a[j] + ak), n as u32);
                }
            }
            Ok(acc)
        }),
        pn_deriv_at_zero: None,
        c_phi: Some(|_b| Ok(Scalar::one())),
        d_lead: Some(|b, n| {
            let a = cdh_params(b)?;
            Ok(-pair_product(&a, |x, y| &(x - y) * &(&(x + y) + &int(n))))
        }),
        alpha: Some(|b, n, k| {
            let a = cdh_params(b)?;
            let (b1, b2, _) = esym3(&a);
            match k {
                3 => Ok(Scalar::one()),
                2 => {
                    let acc = &(&b2 + &rf(&(&b1 + &int(n)), 2))
                        + &(&(&int(2 * n + 5) * &(&b1 + &int(n + 1))) + &int(n + 2));
                    Ok(-acc)
                }
                1 => {
                    let pairs = pair_product(&a, |x, y| &(x + y) + &int(n + 1));
                    Ok(&pairs * &(&(&int(2) * &b1) + &int(3 * (n + 1))))
                }
                0 => Ok(-pair_product(&a, |x, y| rf(&(&(x + y) + &int(n)), 2))),
                _ => Err(Error::IndexOutOfRange),
            }
        }),
        beta: Some(|_b, _n| Ok(int(-1))),
        beta_f: Some(|_b, n| Ok(-rf(&int(n + 1), 2))),
    }
}

trait MulDiv {
    fn try_mul_div(&self, m: &Scalar, d: &Scalar) -> Result<Scalar>;
}

impl MulDiv for Scalar {
    fn try_mul_div(&self, m: &Scalar, d: &Scalar) -> Result<Scalar> {
        (self * m).try_div(d)
    }
}
