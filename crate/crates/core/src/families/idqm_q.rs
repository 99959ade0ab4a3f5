//! Difference families on the unit circle: classes (iii) and (iv).
//!
//! Class (iii), `η = cos x`: Askey-Wilson, continuous dual q-Hahn,
//! Al-Salam-Chihara, continuous big q-Hermite, continuous q-Hermite,
//! continuous q-Jacobi, continuous q-Laguerre.
//! Class (iv), `η = cos(x+φ)`: continuous q-Hahn, q-Meixner-Pollaczek.
//!
//! Parameters are stored as the `q^λ` values themselves; the shift `δ`
//! multiplies them by powers of `s = q^{1/2}`. The q-Jacobi/q-Laguerre
//! quarter powers are stored directly (`t = q^{(α+1/2)/2}`, `u = q^{(β+1/2)/2}`)
//! so that every printed formula lands in the rational field.

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Var};
use crate::rational::RationalFn;
use crate::scalar::{qpochhammer as qp, qpochhammer_multi as qpm, Scalar};

use super::hyper::phi_series;
use super::util::*;
use super::{Binding, Class, FamilyId, FamilySpec, ZeroPoint};

fn z_poly(terms: &[(i64, Scalar)]) -> LaurentPoly {
    LaurentPoly::from_terms(Var::Z, terms)
}

/// `1 - c·z^e`.
fn one_minus(c: &Scalar, e: i64) -> LaurentPoly {
    z_poly(&[(0, Scalar::one()), (e, -c)])
}

/// Class (iii) denominator `(1 - z²)(1 - qz²)`.
fn circle_den(q: &Scalar) -> LaurentPoly {
    one_minus(&Scalar::one(), 2).try_mul(&one_minus(q, 2)).unwrap()
}

/// Class (iv) denominator `(1 - w²z²)(1 - q w²z²)`.
fn twisted_den(q: &Scalar, w: &Scalar) -> LaurentPoly {
    let w2 = w * w;
    one_minus(&w2, 2).try_mul(&one_minus(&(q * &w2), 2)).unwrap()
}

fn eta_of(rep: &Scalar, w: &Scalar) -> Result<Scalar> {
    let zeta = rep * w;
    Ok(&(&zeta + &zeta.inv()?) * &Scalar::ratio(1, 2))
}

/// `E_n = q^{-n} - 1`.
fn q_energy(b: &Binding, n: i64) -> Result<Scalar> {
    Ok(&b.q()?.pow(-n)? - &Scalar::one())
}

/// `f_n = q^{n/2}(q^{-n} - 1)`.
fn q_f(b: &Binding, n: i64) -> Result<Scalar> {
    Ok(&b.s()?.pow(n)? * &q_energy(b, n)?)
}

/// `b_n = q^{-(n+1)/2}`.
fn q_b(b: &Binding, n: i64) -> Result<Scalar> {
    b.s()?.pow(-(n + 1))
}

fn two() -> Scalar {
    Scalar::int(2)
}

// ---------------------------------------------------------------------------
// Askey-Wilson
// ---------------------------------------------------------------------------

fn aw_params(b: &Binding) -> Result<[Scalar; 4]> {
    Ok([
        b.get("a1")?.clone(),
        b.get("a2")?.clone(),
        b.get("a3")?.clone(),
        b.get("a4")?.clone(),
    ])
}

pub fn askey_wilson() -> FamilySpec {
    FamilySpec {
        id: FamilyId::AW,
        class: Class::III,
        m_degree: 4,
        slots: &["a1", "a2", "a3", "a4"],
        needs_s: true,
        needs_w: false,
        validate: |b| {
            validate_s(b)?;
            if !conj_closed(&aw_params(b)?) {
                return Err(Error::InvalidBinding {
                    reason: "{a*} must equal {a} as a set".into(),
                });
            }
            Ok(())
        },
        physical: |b| Ok(aw_params(b)?.iter().all(abs_lt_one)),
        shift: |b| {
            let a = aw_params(b)?;
            let s = b.s()?.clone();
            Ok(b
                .with("a1", &a[0] * &s)
                .with("a2", &a[1] * &s)
                .with("a3", &a[2] * &s)
                .with("a4", &a[3] * &s))
        },
        energy: |b, n| {
            let (.., b4) = esym4(&aw_params(b)?);
            let q = b.q()?;
            Ok(&q_energy(b, n)? * &(&Scalar::one() - &(&b4 * &q.pow(n - 1)?)))
        },
        f_const: |b, n| {
            let (.., b4) = esym4(&aw_params(b)?);
            let q = b.q()?;
            Ok(&q_f(b, n)? * &(&Scalar::one() - &(&b4 * &q.pow(n - 1)?)))
        },
        b_const: q_b,
        c_lead: |b, n| {
            let (.., b4) = esym4(&aw_params(b)?);
            let q = b.q()?;
            Ok(&two().pow(n)? * &qp(&(&b4 * &q.pow(n - 1)?), &q, n as u32))
        },
        build: |b, n| {
            let a = aw_params(b)?;
            let (.., b4) = esym4(&a);
            let q = b.q()?;
            let n32 = n as u32;
            let a12 = &a[0] * &a[1];
            let a13 = &a[0] * &a[2];
            let a14 = &a[0] * &a[3];
            let pre = (&(&qp(&a12, &q, n32) * &qp(&a13, &q, n32)) * &qp(&a14, &q, n32))
                .try_div(&a[0].pow(n)?)?;
            let series = phi_series(
                n32,
                &[&b4 * &q.pow(n - 1)?],
                &[(a[0].clone(), 1), (a[0].clone(), -1)],
                &[a12, a13, a14],
                0,
                (&q, 0),
                &q,
                Var::Z,
            )?;
            Ok(series.scale(&pre))
        },
        potential: Some(|b| {
            let a = aw_params(b)?;
            let q = b.q()?;
            let mut num = LaurentPoly::one(Var::Z);
            for aj in &a {
                num = num.try_mul(&one_minus(aj, 1))?;
            }
            RationalFn::new(num, circle_den(&q))
        }),
        oqm: None,
        zeros: Some(|b| {
            let a = aw_params(b)?;
            a.iter()
                .map(|aj| {
                    Ok(ZeroPoint {
                        eta: &(aj + &aj.inv()?) * &Scalar::ratio(1, 2),
                        rep: aj.clone(),
                        multiplicity: 1,
                    })
                })
                .collect()
        }),
        pn_at_zero: Some(|b, n, j| {
            let a = aw_params(b)?;
            let q = b.q()?;
            if j > 3 {
                return Err(Error::IndexOutOfRange);
            }
            let mut acc = Scalar::one();
            for (k, ak) in a.iter().enumerate() {
                if k != j {
                    acc = &acc * &qp(&(&a[j] * ak), &q, n as u32);
                }
            }
            acc.try_div(&a[j].pow(n)?)
        }),
        pn_deriv_at_zero: None,
        c_phi: Some(|b| {
            let (.., b4) = esym4(&aw_params(b)?);
            Ok(&Scalar::int(16) * &b4)
        }),
        d_lead: Some(|b, n| {
            let a = aw_params(b)?;
            let (.., b4) = esym4(&a);
            let q = b.q()?;
            let qn = q.pow(n)?;
            let pairs = pair_product(&a, |x, y| {
                &(x - y) * &(&Scalar::one() - &(&(x * y) * &qn))
            });
            let tail = &qp(&(&b4 * &q.pow(2 * n)?), &q, 3)
                * &qp(&(&b4 * &q.pow(2 * n + 2)?), &q, 3);
            (&pairs * &tail).try_div(&b4.pow(3)?)
        }),
        alpha: Some(aw_alpha),
        beta: Some(|b, n| {
            let (.., b4) = esym4(&aw_params(b)?);
            let q = b.q()?;
            b4.try_div(&qp(&(&b4 * &q.pow(2 * n + 3)?), &q, 4))
        }),
        beta_f: Some(|b, n| {
            let (.., b4) = esym4(&aw_params(b)?);
            let q = b.q()?;
            let s = b.s()?;
            // b₄ q^{-n-3/2} (q^{n+1}, b₄q^{n+1}; q)₂ / (b₄q^{2n+3}; q)₄
            let pair = qpm(&[&q.pow(n + 1)?, &(&b4 * &q.pow(n + 1)?)], &q, 2);
            let num = &(&b4 * &s.pow(-2 * n - 3)?) * &pair;
            num.try_div(&qp(&(&b4 * &q.pow(2 * n + 3)?), &q, 4))
        }),
    }
}

fn aw_alpha(b: &Binding, n: i64, k: usize) -> Result<Scalar> {
    let a = aw_params(b)?;
    let (b1, b2, b3, b4) = esym4(&a);
    let q = b.q()?;
    let one = Scalar::one();
    let qq = |e: i64| q.pow(e);
    match k {
        4 => Ok(one),
        3 => {
            let bracket = &(&b3
                - &(&(&(&one + &(&q + &(&q * &q)))
                    * &(&b1 - &(&b3 * &qq(n + 2)?)))
                    * &(&b4 * &qq(n + 1)?)))
                - &(&(&b1 * &(&b4 * &b4)) * &qq(3 * n + 6)?);
            let num = &-(&one - &(&b4 * &qq(2 * n + 5)?)) * &bracket;
            let den = &(&one - &(&b4 * &qq(2 * n + 2)?)) * &b4;
            num.try_div(&den)
        }
        2 => {
            let q2 = &q * &q;
            let one_pq = &one + &q;
            let one_pqq2 = &(&one + &q) + &q2;
            let pre_num = &(&one - &(&b4 * &qq(2 * n + 3)?))
                * &(&one - &(&b4 * &qq(2 * n + 6)?));
            let pre_den = &(&(&one - &(&b4 * &qq(2 * n + 1)?))
                * &(&one - &(&b4 * &qq(2 * n + 2)?)))
                * &b4;
            let t1 = &(&b2 * &(&one - &(&b4 * &qq(2 * n + 2)?)))
                * &(&(&one + &(&b4 * &qq(2 * n + 3)?))
                    * &(&one - &(&b4 * &qq(2 * n + 4)?)));
            let t2 = &(&one_pqq2 * &(&(&b3 * &b3) + &(&(&b1 * &b1) * &b4)))
                * &(&(&one + &(&b4 * &qq(2 * n + 3)?)) * &qq(2 * n + 2)?);
            let t3 = &(&one_pq
                * &(&(&q * &(&b1 * &b3)) + &(&(&one + &q2) * &b4)))
                * &(&(&one + &(&(&b4 * &b4) * &qq(4 * n + 6)?)) * &qq(n)?);
            let t4 = &(&one_pq
                * &(&(&(&q * &(&one_pq * &one_pq)) * &(&b1 * &b3))
                    - &(&(&(&one + &q2) * &(&one + &q2)) * &b4)))
                * &(&b4 * &qq(3 * n + 2)?);
            let bracket = &(&(&t1 + &t2) - &t3) - &t4;
            (&pre_num * &bracket).try_div(&pre_den)
        }
        1 => {
            let qn1 = qq(n + 1)?;
            let pairs = pair_product(&a, |x, y| &one - &(&(x * y) * &qn1));
            let one_pqq2 = &(&one + &q) + &(&q * &q);
            let bracket = &(&b1
                - &(&(&one_pqq2 * &(&b3 - &(&(&b1 * &b4) * &qn1))) * &qq(n)?))
                - &(&(&b3 * &b4) * &qq(3 * n + 3)?);
            let num = &(&-pairs
                * &(&(&one - &(&b4 * &qq(2 * n + 5)?))
                    * &(&one - &(&b4 * &qq(2 * n + 6)?))))
                * &bracket;
            let den = &(&(&one - &(&b4 * &qq(2 * n)?))
                * &(&one - &(&b4 * &qq(2 * n + 2)?)))
                * &b4;
            num.try_div(&den)
        }
        0 => {
            let qn = qq(n)?;
            let pairs = pair_product(&a, |x, y| qp(&(&(x * y) * &qn), &q, 2));
            let num = &pairs * &qp(&(&b4 * &qq(2 * n + 4)?), &q, 3);
            let den = &qp(&(&b4 * &qq(2 * n)?), &q, 3) * &b4;
            num.try_div(&den)
        }
        _ => Err(Error::IndexOutOfRange),
    }
}

// ---------------------------------------------------------------------------
// continuous dual q-Hahn
// ---------------------------------------------------------------------------

fn cdqh_params(b: &Binding) -> Result<[Scalar; 3]> {
    Ok([b.get("a1")?.clone(), b.get("a2")?.clone(), b.get("a3")?.clone()])
}

pub fn continuous_dual_q_hahn() -> FamilySpec {
    FamilySpec {
        id: FamilyId::CdqH,
        class: Class::III,
        m_degree: 3,
        slots: &["a1", "a2", "a3"],
        needs_s: true,
        needs_w: false,
        validate: |b| {
            validate_s(b)?;
            if !conj_closed(&cdqh_params(b)?) {
                return Err(Error::InvalidBinding {
                    reason: "{a*} must equal {a} as a set".into(),
                });
            }
            Ok(())
        },
        physical: |b| Ok(cdqh_params(b)?.iter().all(abs_lt_one)),
        shift: |b| {
            let a = cdqh_params(b)?;
            let s = b.s()?.clone();
            Ok(b
                .with("a1", &a[0] * &s)
                .with("a2", &a[1] * &s)
                .with("a3", &a[2] * &s))
        },
        energy: q_energy,
        f_const: q_f,
        b_const: q_b,
        c_lead: |_b, n| two().pow(n),
        build: |b, n| {
            let a = cdqh_params(b)?;
            let q = b.q()?;
            let n32 = n as u32;
            let a12 = &a[0] * &a[1];
            let a13 = &a[0] * &a[2];
            let pre = (&qp(&a12, &q, n32) * &qp(&a13, &q, n32)).try_div(&a[0].pow(n)?)?;
            let series = phi_series(
                n32,
                &[],
                &[(a[0].clone(), 1), (a[0].clone(), -1)],
                &[a12, a13],
                0,
                (&q, 0),
                &q,
                Var::Z,
            )?;
            Ok(series.scale(&pre))
        },
        potential: Some(|b| {
            let a = cdqh_params(b)?;
            let q = b.q()?;
            let mut num = LaurentPoly::one(Var::Z);
            for aj in &a {
                num = num.try_mul(&one_minus(aj, 1))?;
            }
            RationalFn::new(num, circle_den(&q))
        }),
        oqm: None,
        zeros: Some(|b| {
            let a = cdqh_params(b)?;
            a.iter()
                .map(|aj| {
                    Ok(ZeroPoint {
                        eta: &(aj + &aj.inv()?) * &Scalar::ratio(1, 2),
                        rep: aj.clone(),
                        multiplicity: 1,
                    })
                })
                .collect()
        }),
        pn_at_zero: Some(|b, n, j| {
            let a = cdqh_params(b)?;
            let q = b.q()?;
            if j > 2 {
                return Err(Error::IndexOutOfRange);
            }
            let mut acc = Scalar::one();
            for (k, ak) in a.iter().enumerate() {
                if k != j {
                    acc = &acc * &qp(&(&a[j] * ak), &q, n as u32);
                }
            }
            acc.try_div(&a[j].pow(n)?)
        }),
        pn_deriv_at_zero: None,
        c_phi: Some(|b| {
            let (.., b3) = esym3(&cdqh_params(b)?);
            Ok(&Scalar::int(-8) * &b3)
        }),
        d_lead: Some(|b, n| {
            let a = cdqh_params(b)?;
            let (.., b3) = esym3(&a);
            let qn = b.q()?.pow(n)?;
            let pairs = pair_product(&a, |x, y| {
                &(x - y) * &(&Scalar::one() - &(&(x * y) * &qn))
            });
            pairs.try_div(&(&b3 * &b3))
        }),
        alpha: Some(|b, n, k| {
            let a = cdqh_params(b)?;
            let (b1, b2, b3) = esym3(&a);
            let q = b.q()?;
            let one = Scalar::one();
            match k {
                3 => Ok(one),
                2 => {
                    let bracket = &(&b2
                        - &(&(&(&one + &q) * &(&b1 * &b3)) * &q.pow(n + 1)?))
                        + &(&(&(&(&one + &q) + &(&q * &q)) * &(&b3 * &b3))
                            * &q.pow(2 * n + 2)?);
                    (-bracket).try_div(&b3)
                }
                1 => {
                    let qn1 = q.pow(n + 1)?;
                    let pairs = pair_product(&a, |x, y| &one - &(&(x * y) * &qn1));
                    let bracket = &b1
                        - &(&(&(&(&one + &q) + &(&q * &q)) * &b3) * &q.pow(n)?);
                    (&pairs * &bracket).try_div(&b3)
                }
                0 => {
                    let qn = q.pow(n)?;
                    let pairs = pair_product(&a, |x, y| qp(&(&(x * y) * &qn), &q, 2));
                    (-pairs).try_div(&b3)
                }
                _ => Err(Error::IndexOutOfRange),
            }
        }),
        beta: Some(|b, _n| {
            let (.., b3) = esym3(&cdqh_params(b)?);
            Ok(-b3)
        }),
        beta_f: Some(|b, n| {
            let (.., b3) = esym3(&cdqh_params(b)?);
            let q = b.q()?;
            Ok(&(&-b3 * &b.s()?.pow(-2 * n - 3)?) * &qp(&q.pow(n + 1)?, &q, 2))
        }),
    }
}

// ---------------------------------------------------------------------------
// Al-Salam-Chihara
// ---------------------------------------------------------------------------

pub fn al_salam_chihara() -> FamilySpec {
    FamilySpec {
        id: FamilyId::ASC,
        class: Class::III,
        m_degree: 2,
        slots: &["a1", "a2"],
        needs_s: true,
        needs_w: false,
        validate: |b| {
            validate_s(b)?;
            let a = [b.get("a1")?.clone(), b.get("a2")?.clone()];
            if !conj_closed(&a) {
                return Err(Error::InvalidBinding {
                    reason: "{a*} must equal {a} as a set".into(),
                });
            }
            Ok(())
        },
        physical: |b| Ok(abs_lt_one(b.get("a1")?) && abs_lt_one(b.get("a2")?)),
        shift: |b| {
            let s = b.s()?.clone();
            Ok(b
                .with("a1", b.get("a1")? * &s)
                .with("a2", b.get("a2")? * &s))
        },
        energy: q_energy,
        f_const: q_f,
        b_const: q_b,
        c_lead: |_b, n| two().pow(n),
        build: |b, n| {
            let a1 = b.get("a1")?.clone();
            let a2 = b.get("a2")?.clone();
            let q = b.q()?;
            let n32 = n as u32;
            let a12 = &a1 * &a2;
            let pre = qp(&a12, &q, n32).try_div(&a1.pow(n)?)?;
            let series = phi_series(
                n32,
                &[],
                &[(a1.clone(), 1), (a1.clone(), -1)],
                &[a12, Scalar::zero()],
                0,
                (&q, 0),
                &q,
                Var::Z,
            )?;
            Ok(series.scale(&pre))
        },
        potential: Some(|b| {
            let q = b.q()?;
            let num =
                one_minus(b.get("a1")?, 1).try_mul(&one_minus(b.get("a2")?, 1))?;
            RationalFn::new(num, circle_den(&q))
        }),
        oqm: None,
        zeros: Some(|b| {
            [b.get("a1")?.clone(), b.get("a2")?.clone()]
                .iter()
                .map(|aj| {
                    Ok(ZeroPoint {
                        eta: &(aj + &aj.inv()?) * &Scalar::ratio(1, 2),
                        rep: aj.clone(),
                        multiplicity: 1,
                    })
                })
                .collect()
        }),
        pn_at_zero: Some(|b, n, j| {
            let a = [b.get("a1")?.clone(), b.get("a2")?.clone()];
            if j > 1 {
                return Err(Error::IndexOutOfRange);
            }
            let a12 = &a[0] * &a[1];
            qp(&a12, &b.q()?, n as u32).try_div(&a[j].pow(n)?)
        }),
        pn_deriv_at_zero: None,
        c_phi: Some(|b| Ok(&Scalar::int(4) * &(b.get("a1")? * b.get("a2")?))),
        d_lead: Some(|b, n| {
            let a1 = b.get("a1")?.clone();
            let a2 = b.get("a2")?.clone();
            let a12 = &a1 * &a2;
            let num = &(&a1 - &a2) * &(&Scalar::one() - &(&a12 * &b.q()?.pow(n)?));
            num.try_div(&a12)
        }),
        alpha: Some(|b, n, k| {
            let a1 = b.get("a1")?.clone();
            let a2 = b.get("a2")?.clone();
            let a12 = &a1 * &a2;
            let q = b.q()?;
            match k {
                2 => Ok(Scalar::one()),
                1 => {
                    let num = &-(&a1 + &a2)
                        * &(&Scalar::one() - &(&a12 * &q.pow(n + 1)?));
                    num.try_div(&a12)
                }
                0 => qp(&(&a12 * &q.pow(n)?), &q, 2).try_div(&a12),
                _ => Err(Error::IndexOutOfRange),
            }
        }),
        beta: Some(|b, _n| Ok(b.get("a1")? * b.get("a2")?)),
        beta_f: Some(|b, n| {
            let q = b.q()?;
            Ok(&(&(b.get("a1")? * b.get("a2")?) * &b.s()?.pow(-2 * n - 3)?)
                * &qp(&q.pow(n + 1)?, &q, 2))
        }),
    }
}

// ---------------------------------------------------------------------------
// continuous big q-Hermite
// ---------------------------------------------------------------------------

pub fn continuous_big_q_hermite() -> FamilySpec {
    FamilySpec {
        id: FamilyId::CbqHe,
        class: Class::III,
        m_degree: 1,
        slots: &["a"],
        needs_s: true,
        needs_w: false,
        validate: |b| {
            validate_s(b)?;
            if !b.get("a")?.is_real() {
                return Err(Error::InvalidBinding { reason: "a must be real".into() });
            }
            Ok(())
        },
        physical: |b| Ok(abs_lt_one(b.get("a")?)),
        shift: |b| Ok(b.with("a", b.get("a")? * b.s()?)),
        energy: q_energy,
        f_const: q_f,
        b_const: q_b,
        c_lead: |_b, n| two().pow(n),
        build: |b, n| {
            let a = b.get("a")?.clone();
            let q = b.q()?;
            let n32 = n as u32;
            let series = phi_series(
                n32,
                &[],
                &[(a.clone(), 1), (a.clone(), -1)],
                &[Scalar::zero(), Scalar::zero()],
                0,
                (&q, 0),
                &q,
                Var::Z,
            )?;
            Ok(series.scale(&a.pow(-n)?))
        },
        potential: Some(|b| {
            RationalFn::new(one_minus(b.get("a")?, 1), circle_den(&b.q()?))
        }),
        oqm: None,
        zeros: Some(|b| {
            let a = b.get("a")?.clone();
            Ok(vec![ZeroPoint {
                eta: &(&a + &a.inv()?) * &Scalar::ratio(1, 2),
                rep: a,
                multiplicity: 1,
            }])
        }),
        pn_at_zero: Some(|b, n, j| {
            if j != 0 {
                return Err(Error::IndexOutOfRange);
            }
            b.get("a")?.pow(-n)
        }),
        pn_deriv_at_zero: None,
        c_phi: Some(|b| Ok(&Scalar::int(-2) * b.get("a")?)),
        d_lead: Some(|_b, _n| Ok(Scalar::one())),
        alpha: Some(|b, _n, k| match k {
            1 => Ok(Scalar::one()),
            0 => Ok(-b.get("a")?.inv()?),
            _ => Err(Error::IndexOutOfRange),
        }),
        beta: Some(|b, _n| Ok(-b.get("a")?.clone())),
        beta_f: Some(|b, n| {
            let q = b.q()?;
            Ok(&(&-b.get("a")?.clone() * &b.s()?.pow(-2 * n - 3)?)
                * &qp(&q.pow(n + 1)?, &q, 2))
        }),
    }
}

// ---------------------------------------------------------------------------
// continuous q-Hermite (trivial Φ̌)
// ---------------------------------------------------------------------------

pub fn continuous_q_hermite() -> FamilySpec {
    FamilySpec {
        id: FamilyId::CqHe,
        class: Class::III,
        m_degree: 0,
        slots: &[],
        needs_s: true,
        needs_w: false,
        validate: validate_s,
        physical: |_b| Ok(true),
        shift: |b| Ok(b.clone()),
        energy: q_energy,
        f_const: q_f,
        b_const: q_b,
        c_lead: |_b, n| two().pow(n),
        build: |b, n| {
            let q = b.q()?;
            let n32 = n as u32;
            // e^{inx}·₂φ₀(q^{-n}, 0; — | q, qⁿ e^{-2ix})
            let series = phi_series(
                n32,
                &[Scalar::zero()],
                &[],
                &[],
                -1,
                (&q.pow(n)?, -2),
                &q,
                Var::Z,
            )?;
            series.try_mul(&LaurentPoly::monomial(Var::Z, Scalar::one(), n))
        },
        potential: Some(|b| {
            RationalFn::new(LaurentPoly::one(Var::Z), circle_den(&b.q()?))
        }),
        oqm: None,
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
// continuous q-Jacobi
// ---------------------------------------------------------------------------

/// Stored parameters: `t = q^{(α+1/2)/2}`, `u = q^{(β+1/2)/2}` (and `s`).
fn cqj_params(b: &Binding) -> Result<(Scalar, Scalar, Scalar, Scalar)> {
    let t = b.get("t")?.clone();
    let u = b.get("u")?.clone();
    let s = b.s()?.clone();
    let q = &s * &s;
    Ok((t, u, s, q))
}

pub fn continuous_q_jacobi() -> FamilySpec {
    FamilySpec {
        id: FamilyId::CqJ,
        class: Class::III,
        m_degree: 4,
        slots: &["t", "u"],
        needs_s: true,
        needs_w: false,
        validate: |b| {
            validate_s(b)?;
            for slot in ["t", "u"] {
                let v = b.get(slot)?;
                if !is_real_positive(v) {
                    return Err(Error::InvalidBinding {
                        reason: format!("{slot} must be real and positive"),
                    });
                }
            }
            Ok(())
        },
        physical: |b| {
            // α, β ≥ -1/2  ⇔  0 < t, u ≤ 1
            use num_traits::Signed;
            let (t, u, ..) = cqj_params(b)?;
            let le_one = |v: &Scalar| !(v.re() - &num_rational::BigRational::from_integer(1.into())).is_positive();
            Ok(le_one(&t) && le_one(&u))
        },
        shift: |b| {
            let (t, u, s, _) = cqj_params(b)?;
            Ok(b.with("t", &t * &s).with("u", &u * &s))
        },
        energy: |b, n| {
            let (t, u, _, q) = cqj_params(b)?;
            let tu = &t * &u;
            Ok(&q_energy(b, n)?
                * &(&Scalar::one() - &(&(&tu * &tu) * &q.pow(n)?)))
        },
        f_const: |b, n| {
            let (t, u, s, q) = cqj_params(b)?;
            let tu = &t * &u;
            let num = &(&(&t * &s) * &q.pow(-n)?)
                * &(&Scalar::one() - &(&(&tu * &tu) * &q.pow(n)?));
            let den = &(&Scalar::one() + &tu) * &(&Scalar::one() + &(&tu * &s));
            num.try_div(&den)
        },
        b_const: |b, n| {
            let (t, u, s, q) = cqj_params(b)?;
            let tu = &t * &u;
            let num = &(&q.pow(n + 1)? * &(&q.pow(-n - 1)? - &Scalar::one()))
                * &(&(&Scalar::one() + &tu) * &(&Scalar::one() + &(&tu * &s)));
            num.try_div(&(&t * &s))
        },
        c_lead: |b, n| {
            let (t, u, s, q) = cqj_params(b)?;
            let tu = &t * &u;
            let n32 = n as u32;
            let num = &(&two().pow(n)? * &t.pow(n)?)
                * &qp(&(&(&tu * &tu) * &q.pow(n)?), &q, n32);
            let den = &(&qp(&q, &q, n32) * &qp(&-tu.clone(), &q, n32))
                * &qp(&-(&tu * &s), &q, n32);
            num.try_div(&den)
        },
        build: |b, n| {
            let (t, u, s, q) = cqj_params(b)?;
            let tu = &t * &u;
            let n32 = n as u32;
            let t2s = &(&t * &t) * &s;
            let pre = qp(&t2s, &q, n32).try_div(&qp(&q, &q, n32))?;
            let series = phi_series(
                n32,
                &[&(&tu * &tu) * &q.pow(n)?],
                &[(t.clone(), 1), (t.clone(), -1)],
                &[t2s, -tu.clone(), -(&tu * &s)],
                0,
                (&q, 0),
                &q,
                Var::Z,
            )?;
            Ok(series.scale(&pre))
        },
        potential: Some(|b| {
            let (t, u, s, q) = cqj_params(b)?;
            let num = one_minus(&t, 1)
                .try_mul(&one_minus(&(&t * &s), 1))?
                .try_mul(&one_minus(&-u.clone(), 1))?
                .try_mul(&one_minus(&-(&u * &s), 1))?;
            RationalFn::new(num, circle_den(&q))
        }),
        oqm: None,
        zeros: Some(|b| {
            let (t, u, s, _) = cqj_params(b)?;
            let points = [t.clone(), &t * &s, -u.clone(), -(&u * &s)];
            points
                .iter()
                .map(|zj| {
                    Ok(ZeroPoint {
                        eta: &(zj + &zj.inv()?) * &Scalar::ratio(1, 2),
                        rep: zj.clone(),
                        multiplicity: 1,
                    })
                })
                .collect()
        }),
        pn_at_zero: Some(|b, n, j| {
            let (t, u, s, q) = cqj_params(b)?;
            let tu = &t * &u;
            let n32 = n as u32;
            let qfac = qp(&q, &q, n32);
            let balance = (&Scalar::one() + &(&tu * &q.pow(n)?))
                .try_div(&(&Scalar::one() + &tu))?;
            match j {
                0 => qp(&(&(&t * &t) * &s), &q, n32).try_div(&qfac),
                1 => {
                    let base = qp(&(&(&t * &t) * &s), &q, n32).try_div(&qfac)?;
                    Ok(&(&base * &s.pow(-n)?) * &balance)
                }
                2 => {
                    let base = qp(&(&(&u * &u) * &s), &q, n32).try_div(&qfac)?;
                    Ok(&base * &(-(&t.try_div(&u)?)).pow(n)?)
                }
                3 => {
                    let base = qp(&(&(&u * &u) * &s), &q, n32).try_div(&qfac)?;
                    Ok(&(&base * &(-(&t.try_div(&(&u * &s))?)).pow(n)?) * &balance)
                }
                _ => Err(Error::IndexOutOfRange),
            }
        }),
        pn_deriv_at_zero: None,
        c_phi: Some(|b| {
            let (t, u, s, _) = cqj_params(b)?;
            let tus = &(&t * &u) * &s;
            Ok(&Scalar::int(16) * &(&tus * &tus))
        }),
        d_lead: Some(|b, n| {
            let (t, u, s, q) = cqj_params(b)?;
            let one = Scalar::one();
            let tu = &t * &u;
            let qn = q.pow(n)?;
            let pre = {
                let num = &(&t * &(&(&one - &s) * &(&one - &s)))
                    * &(&(&(&t + &u) * &(&t + &u))
                        * &(&(&t + &(&u * &s)) * &(&(&t * &s) + &u)));
                num.try_div(&(&u.pow(5)? * &s.pow(5)?))?
            };
            let num = &(&(&one - &(&(&(&t * &t) * &s) * &qn))
                * &(&one - &(&(&(&u * &u) * &s) * &qn)))
                * &(&qp(&(&(&tu * &s) * &qn), &s, 3)
                    * &qp(&(&(&tu * &s.pow(3)?) * &qn), &s, 3));
            let den = {
                let d1 = (&one - &q.pow(n + 1)?).pow(3)?;
                let d2 = (&one - &q.pow(n + 2)?).pow(2)?;
                let d3 = &one - &q.pow(n + 3)?;
                let d4 = (&one + &(&tu * &qn)).pow(2)?;
                &(&d1 * &d2) * &(&d3 * &d4)
            };
            (&-pre * &num).try_div(&den)
        }),
        alpha: Some(cqj_alpha),
        beta: Some(|b, n| {
            let (t, u, s, q) = cqj_params(b)?;
            let tu = &t * &u;
            let qn = q.pow(n)?;
            let num = &(&qp(&q.pow(n + 1)?, &q, 4) * &qp(&-tu.clone(), &s, 4))
                * &(&(&(&u * &u) * &(&s * &s)) * &qn);
            let den = &(&t * &t) * &qp(&(&(&tu * &s.pow(4)?) * &qn), &s, 4);
            num.try_div(&den)
        }),
        beta_f: Some(|b, n| {
            let (t, u, s, q) = cqj_params(b)?;
            let tu = &t * &u;
            let qn = q.pow(n)?;
            let t2u2 = &(&t * &t) * &(&u * &u);
            let num = &(&(&u * &u) * &qp(&q.pow(n + 1)?, &q, 4))
                * &qp(&(&(&t2u2 * &s.pow(4)?) * &qn), &q, 2);
            let den = &(&s * &qn) * &qp(&(&(&tu * &s.pow(4)?) * &qn), &s, 4);
            num.try_div(&den)
        }),
    }
}

fn cqj_alpha(b: &Binding, n: i64, k: usize) -> Result<Scalar> {
    let (t, u, s, q) = cqj_params(b)?;
    let one = Scalar::one();
    let tu = &t * &u;
    let qn = q.pow(n)?;
    match k {
        4 => Ok(one),
        3 => {
            // q^{-(β+1)/2}(1+q^{1/2})(q^{α/2}-q^{β/2}) = (1+s)(t-u)/(us)
            let pre = (&(&one + &s) * &(&t - &u)).try_div(&(&u * &s))?;
            let num = &(&one + &(&(&tu * &s.pow(5)?) * &qn))
                * &(&one - &(&(&tu * &s.pow(6)?) * &qn));
            let den = &(&one - &q.pow(n + 4)?)
                * &(&one - &(&(&tu * &s.pow(3)?) * &qn));
            (&pre * &num).try_div(&den)
        }
        2 => {
            let a5 = &(&tu * &s.pow(4)?) * &qn; // q^{(α+β+5)/2+n}
            let pre_num = &(&s * &(&(&one - &a5) * &(&one - &(&(&tu * &s.pow(7)?) * &qn))))
                * &(&u * &u).inv()?;
            let pre_den = &qp(&q.pow(n + 3)?, &q, 2)
                * &qp(&(&(&tu * &(&s * &s)) * &qn), &s, 2);
            let mid = &(&tu * &s.pow(3)?) * &qn; // q^{(α+β)/2+n+2}
            let t1 = &(&(&one + &q) * &tu.try_div(&s.pow(3)?)?)
                * &(&(&(&(&one + &s) * &(&one + &s)) * &mid)
                    - &(&(&one + &a5) * &(&one + &a5)));
            let t2 = &(&(&t - &u) * &(&t - &u)).try_div(&(&s * &s))?
                * &(&(&(&one + &q) * &mid) + &(&(&one + &a5) * &(&one + &a5)));
            let bracket = &t1 + &t2;
            (&pre_num * &bracket).try_div(&pre_den)
        }
        1 => {
            // -q^{α/2-β-1}(1+q^{1/2})(q^{α/2}-q^{β/2}) = -(1+s)·t(t-u)/(u²s²)
            let pre = (&(&(&one + &s) * &t) * &(&t - &u))
                .try_div(&(&(&u * &u) * &(&s * &s)))?;
            let num = &(&(&one - &(&(&(&t * &t) * &s.pow(3)?) * &qn))
                * &(&one - &(&(&(&u * &u) * &s.pow(3)?) * &qn)))
                * &(&(&one + &(&(&tu * &s.pow(3)?) * &qn))
                    * &qp(&(&(&tu * &s.pow(6)?) * &qn), &s, 2));
            let den = &qp(&q.pow(n + 2)?, &q, 3) * &qp(&(&(&tu * &s) * &qn), &q, 2);
            (&(&-pre * &num)).try_div(&den)
        }
        0 => {
            // q^{α-β-1} = t²/(u²s²)
            let pre = (&t * &t).try_div(&(&(&u * &u) * &(&s * &s)))?;
            let num = &(&qp(&(&(&(&t * &t) * &s) * &qn), &q, 2)
                * &qp(&(&(&(&u * &u) * &s) * &qn), &q, 2))
                * &qp(&(&(&tu * &s.pow(5)?) * &qn), &s, 3);
            let den = &qp(&q.pow(n + 1)?, &q, 4) * &qp(&(&(&tu * &s) * &qn), &s, 3);
            (&pre * &num).try_div(&den)
        }
        _ => Err(Error::IndexOutOfRange),
    }
}

// ---------------------------------------------------------------------------
// continuous q-Laguerre
// ---------------------------------------------------------------------------

pub fn continuous_q_laguerre() -> FamilySpec {
    FamilySpec {
        id: FamilyId::CqL,
        class: Class::III,
        m_degree: 2,
        slots: &["t"],
        needs_s: true,
        needs_w: false,
        validate: |b| {
            validate_s(b)?;
            if !is_real_positive(b.get("t")?) {
                return Err(Error::InvalidBinding {
                    reason: "t must be real and positive".into(),
                });
            }
            Ok(())
        },
        physical: |b| {
            use num_traits::Signed;
            let t = b.get("t")?;
            Ok(!(t.re() - &num_rational::BigRational::from_integer(1.into())).is_positive())
        },
        shift: |b| Ok(b.with("t", b.get("t")? * b.s()?)),
        energy: q_energy,
        f_const: |b, n| {
            let t = b.get("t")?.clone();
            let s = b.s()?.clone();
            Ok(&(&t * &s) * &b.q()?.pow(-n)?)
        },
        b_const: |b, n| {
            let t = b.get("t")?.clone();
            let s = b.s()?.clone();
            let q = b.q()?;
            let num = &q.pow(n + 1)? * &(&q.pow(-n - 1)? - &Scalar::one());
            num.try_div(&(&t * &s))
        },
        c_lead: |b, n| {
            let t = b.get("t")?.clone();
            let q = b.q()?;
            (&two().pow(n)? * &t.pow(n)?).try_div(&qp(&q, &q, n as u32))
        },
        build: |b, n| {
            let t = b.get("t")?.clone();
            let s = b.s()?.clone();
            let q = b.q()?;
            let n32 = n as u32;
            let t2s = &(&t * &t) * &s;
            let pre = qp(&t2s, &q, n32).try_div(&qp(&q, &q, n32))?;
            let series = phi_series(
                n32,
                &[],
                &[(t.clone(), 1), (t.clone(), -1)],
                &[t2s, Scalar::zero()],
                0,
                (&q, 0),
                &q,
                Var::Z,
            )?;
            Ok(series.scale(&pre))
        },
        potential: Some(|b| {
            let t = b.get("t")?.clone();
            let s = b.s()?.clone();
            let num = one_minus(&t, 1).try_mul(&one_minus(&(&t * &s), 1))?;
            RationalFn::new(num, circle_den(&b.q()?))
        }),
        oqm: None,
        zeros: Some(|b| {
            let t = b.get("t")?.clone();
            let s = b.s()?.clone();
            [t.clone(), &t * &s]
                .iter()
                .map(|zj| {
                    Ok(ZeroPoint {
                        eta: &(zj + &zj.inv()?) * &Scalar::ratio(1, 2),
                        rep: zj.clone(),
                        multiplicity: 1,
                    })
                })
                .collect()
        }),
        pn_at_zero: Some(|b, n, j| {
            let t = b.get("t")?.clone();
            let q = b.q()?;
            let n32 = n as u32;
            let base =
                qp(&(&(&t * &t) * b.s()?), &q, n32).try_div(&qp(&q, &q, n32))?;
            match j {
                0 => Ok(base),
                1 => Ok(&base * &b.s()?.pow(-n)?),
                _ => Err(Error::IndexOutOfRange),
            }
        }),
        pn_deriv_at_zero: None,
        c_phi: Some(|b| {
            let t = b.get("t")?.clone();
            Ok(&Scalar::int(4) * &(&(&t * &t) * b.s()?))
        }),
        d_lead: Some(|b, n| {
            let t = b.get("t")?.clone();
            let s = b.s()?.clone();
            let q = b.q()?;
            let one = Scalar::one();
            let num = &(&one - &s)
                * &(&one - &(&(&(&t * &t) * &s) * &q.pow(n)?));
            num.try_div(&(&s * &(&one - &q.pow(n + 1)?)))
        }),
        alpha: Some(|b, n, k| {
            let t = b.get("t")?.clone();
            let s = b.s()?.clone();
            let q = b.q()?;
            let one = Scalar::one();
            let t2s = &(&t * &t) * &s;
            match k {
                2 => Ok(one),
                1 => {
                    let num = &-(&one + &s)
                        * &(&one - &(&t2s * &q.pow(n + 1)?));
                    num.try_div(&(&s * &(&one - &q.pow(n + 2)?)))
                }
                0 => {
                    let num = qp(&(&t2s * &q.pow(n)?), &q, 2);
                    num.try_div(&(&s * &qp(&q.pow(n + 1)?, &q, 2)))
                }
                _ => Err(Error::IndexOutOfRange),
            }
        }),
        beta: Some(|b, n| {
            let q = b.q()?;
            Ok(&(b.s()? * &q.pow(n)?) * &qp(&q.pow(n + 1)?, &q, 2))
        }),
        beta_f: Some(|b, n| {
            let t = b.get("t")?.clone();
            let s = b.s()?.clone();
            let q = b.q()?;
            // q^{α - n - 1/2} = t²/(s²qⁿ)
            let pre = (&t * &t).try_div(&(&(&s * &s) * &q.pow(n)?))?;
            Ok(&pre * &qp(&q.pow(n + 1)?, &q, 2))
        }),
    }
}

// ---------------------------------------------------------------------------
// continuous q-Hahn
// ---------------------------------------------------------------------------

fn cqh_params(b: &Binding) -> Result<(Scalar, Scalar, Scalar, Scalar)> {
    Ok((
        b.get("a1")?.clone(),
        b.get("a2")?.clone(),
        b.w()?.clone(),
        b.q()?,
    ))
}

pub fn continuous_q_hahn() -> FamilySpec {
    FamilySpec {
        id: FamilyId::CqH,
        class: Class::IV,
        m_degree: 4,
        slots: &["a1", "a2"],
        needs_s: true,
        needs_w: true,
        validate: |b| {
            validate_s(b)?;
            validate_w(b)?;
            let a = [b.get("a1")?.clone(), b.get("a2")?.clone()];
            if !conj_closed(&a) {
                return Err(Error::InvalidBinding {
                    reason: "{a*} must equal {a} as a set".into(),
                });
            }
            Ok(())
        },
        physical: |b| Ok(abs_lt_one(b.get("a1")?) && abs_lt_one(b.get("a2")?)),
        shift: |b| {
            let s = b.s()?.clone();
            Ok(b
                .with("a1", b.get("a1")? * &s)
                .with("a2", b.get("a2")? * &s))
        },
        energy: |b, n| {
            let (a1, a2, _, q) = cqh_params(b)?;
            let b4 = (&a1 * &a2).pow(2)?;
            Ok(&q_energy(b, n)? * &(&Scalar::one() - &(&b4 * &q.pow(n - 1)?)))
        },
        f_const: |b, n| {
            let (a1, a2, _, q) = cqh_params(b)?;
            let b4 = (&a1 * &a2).pow(2)?;
            Ok(&q_f(b, n)? * &(&Scalar::one() - &(&b4 * &q.pow(n - 1)?)))
        },
        b_const: q_b,
        c_lead: |b, n| {
            let (a1, a2, _, q) = cqh_params(b)?;
            let b4 = (&a1 * &a2).pow(2)?;
            Ok(&two().pow(n)? * &qp(&(&b4 * &q.pow(n - 1)?), &q, n as u32))
        },
        build: |b, n| {
            let (a1, a2, w, q) = cqh_params(b)?;
            let n32 = n as u32;
            let w2 = &w * &w;
            let a12 = &a1 * &a2;
            let b4 = (&a12).pow(2)?;
            let lower = [&a1 * &a1, a12.clone(), &a12 * &w2];
            let pre_num = &(&qp(&lower[0], &q, n32) * &qp(&lower[1], &q, n32))
                * &qp(&lower[2], &q, n32);
            let pre = pre_num.try_div(&(&a1.pow(n)? * &w.pow(n)?))?;
            let series = phi_series(
                n32,
                &[&b4 * &q.pow(n - 1)?],
                &[(&a1 * &w2, 1), (a1.clone(), -1)],
                &lower,
                0,
                (&q, 0),
                &q,
                Var::Z,
            )?;
            Ok(series.scale(&pre))
        },
        potential: Some(|b| {
            let (a1, a2, w, q) = cqh_params(b)?;
            let w2 = &w * &w;
            let num = one_minus(&a1, 1)
                .try_mul(&one_minus(&a2, 1))?
                .try_mul(&one_minus(&(&a1 * &w2), 1))?
                .try_mul(&one_minus(&(&a2 * &w2), 1))?;
            RationalFn::new(num, twisted_den(&q, &w))
        }),
        oqm: None,
        zeros: Some(|b| {
            let (a1, a2, w, _) = cqh_params(b)?;
            let wbar2 = w.conj().pow(2)?;
            let points = [a1.clone(), a2.clone(), &a1 * &wbar2, &a2 * &wbar2];
            points
                .iter()
                .map(|zj| {
                    Ok(ZeroPoint { eta: eta_of(zj, &w)?, rep: zj.clone(), multiplicity: 1 })
                })
                .collect()
        }),
        pn_at_zero: Some(|b, n, j| {
            let (a1, a2, w, q) = cqh_params(b)?;
            let n32 = n as u32;
            let a12 = &a1 * &a2;
            let w2 = &w * &w;
            let wbar2 = w.conj().pow(2)?;
            let (sq, phase) = match j {
                0 => (&a1 * &a1, w.pow(n)?),
                1 => (&a2 * &a2, w.pow(n)?),
                2 => (&a1 * &a1, w.conj().pow(n)?),
                3 => (&a2 * &a2, w.conj().pow(n)?),
                _ => return Err(Error::IndexOutOfRange),
            };
            let twist = if j < 2 { &a12 * &w2 } else { &a12 * &wbar2 };
            let base = if j % 2 == 0 { a1.clone() } else { a2.clone() };
            let num = &(&qp(&sq, &q, n32) * &qp(&a12, &q, n32)) * &qp(&twist, &q, n32);
            num.try_div(&(&base.pow(n)? * &phase))
        }),
        pn_deriv_at_zero: None,
        c_phi: Some(|b| {
            let (a1, a2, ..) = cqh_params(b)?;
            Ok(&Scalar::int(16) * &(&a1 * &a2).pow(2)?)
        }),
        d_lead: Some(|b, n| {
            let (a1, a2, w, q) = cqh_params(b)?;
            let one = Scalar::one();
            let w2 = &w * &w;
            let wbar2 = w.conj().pow(2)?;
            let a12 = &a1 * &a2;
            let b4 = (&a12).pow(2)?;
            let qn = q.pow(n)?;
            // 4 sin²φ = -(w - w̄)²
            let sin_sq = -(&(&w - &w.conj()) * &(&w - &w.conj()));
            let geom = &(&(&a1 - &a2) * &(&a1 - &a2))
                * &(&(&a1 - &(&a2 * &w2)) * &(&a1 - &(&a2 * &wbar2)));
            let roots = &(&(&one - &(&(&a1 * &a1) * &qn))
                * &(&one - &(&(&a2 * &a2) * &qn)))
                * &(&(&one - &(&a12 * &qn)).pow(2)?
                    * &(&(&one - &(&(&a12 * &w2) * &qn))
                        * &(&one - &(&(&a12 * &wbar2) * &qn))));
            let tail = &qp(&(&b4 * &q.pow(2 * n)?), &q, 3)
                * &qp(&(&b4 * &q.pow(2 * n + 2)?), &q, 3);
            let num = &(&sin_sq * &geom) * &(&roots * &tail);
            num.try_div(&a12.pow(5)?)
        }),
        alpha: Some(cqh_alpha),
        beta: Some(|b, n| {
            let (a1, a2, _, q) = cqh_params(b)?;
            let b4 = (&a1 * &a2).pow(2)?;
            b4.clone().try_div(&qp(&(&b4 * &q.pow(2 * n + 3)?), &q, 4))
        }),
        beta_f: Some(|b, n| {
            let (a1, a2, _, q) = cqh_params(b)?;
            let b4 = (&a1 * &a2).pow(2)?;
            let pair = qpm(&[&q.pow(n + 1)?, &(&b4 * &q.pow(n + 1)?)], &q, 2);
            let num = &(&b4 * &b.s()?.pow(-2 * n - 3)?) * &pair;
            num.try_div(&qp(&(&b4 * &q.pow(2 * n + 3)?), &q, 4))
        }),
    }
}

fn cqh_alpha(b: &Binding, n: i64, k: usize) -> Result<Scalar> {
    let (a1, a2, w, q) = cqh_params(b)?;
    let one = Scalar::one();
    let a12 = &a1 * &a2;
    let b4 = (&a12).pow(2)?;
    let w2 = &w * &w;
    let wbar2 = w.conj().pow(2)?;
    let two_cos = &w + &w.conj();
    let cos2 = &(&w2 + &wbar2) * &Scalar::ratio(1, 2);
    let qn = q.pow(n)?;
    match k {
        4 => Ok(one),
        3 => {
            let num = &(&-two_cos.clone() * &(&a1 + &a2))
                * &(&(&one - &(&b4 * &q.pow(2 * n + 5)?))
                    * &qp(&(&a12 * &q.pow(n + 1)?), &q, 3));
            let den = &a12 * &(&one - &(&b4 * &q.pow(2 * n + 2)?));
            num.try_div(&den)
        }
        2 => {
            let q3 = q.pow(3)?;
            let pre_num = &qp_base(&(&b4 * &q.pow(2 * n + 3)?), &q3, 2)
                * &qp(&(&a12 * &q.pow(n + 1)?), &q, 2);
            let pre_den = &b4 * &qp(&(&b4 * &q.pow(2 * n + 1)?), &q, 2);
            let mid = &b4 * &q.pow(2 * n + 3)?;
            let t1 = {
                let head = &a12 * &qp(&-(&a12 * &q.pow(n + 1)?), &q, 2);
                let inner = &(&(&two() * &(&one + &mid)) * &cos2)
                    - &(&(&(&one + &q) * &(&one + &(&q * &q))) * &(&a12 * &qn));
                &head * &inner
            };
            let t2 = {
                let head = (&a1 + &a2).pow(2)?;
                let part1 = &one
                    - &(&(&(&(&one + &q) * &q.pow(n + 1)?)
                        * &(&one + &(&two() * &cos2)))
                        * &(&a12 * &(&one + &mid)));
                let part2 = &(&b4 * &q.pow(2 * n + 2)?)
                    * &(&(&(&two() * &q)
                        + &(&(&two() * &(&one + &(&q * &q))) * &(&one + &cos2)))
                        + &(&b4 * &q.pow(2 * n + 4)?));
                &head * &(&part1 + &part2)
            };
            (&pre_num * &(&t1 + &t2)).try_div(&pre_den)
        }
        1 => {
            let q2 = q.pow(2)?;
            let roots = &(&(&one - &(&(&a1 * &a1) * &q.pow(n + 1)?))
                * &(&one - &(&(&a2 * &a2) * &q.pow(n + 1)?)))
                * &(&(&one - &(&(&a12 * &w2) * &q.pow(n + 1)?))
                    * &(&one - &(&(&a12 * &wbar2) * &q.pow(n + 1)?)));
            let num = &(&(&-two_cos.clone() * &(&a1 + &a2))
                * &(&qp(&(&b4 * &q.pow(2 * n + 5)?), &q, 2)
                    * &(&qp(&(&a12 * &qn), &q, 3)
                        * &(&one - &(&a12 * &q.pow(n + 1)?)).pow(2)?)))
                * &roots;
            let den = &b4 * &qp_base(&(&b4 * &q.pow(2 * n)?), &q2, 2);
            num.try_div(&den)
        }
        0 => {
            let roots = &(&qp(&(&(&a1 * &a1) * &qn), &q, 2)
                * &qp(&(&(&a2 * &a2) * &qn), &q, 2))
                * &(&qp(&(&(&a12 * &w2) * &qn), &q, 2)
                    * &qp(&(&(&a12 * &wbar2) * &qn), &q, 2));
            let num = &(&qp(&(&b4 * &q.pow(2 * n + 4)?), &q, 3)
                * &qp(&(&a12 * &qn), &q, 2).pow(2)?)
                * &roots;
            let den = &b4 * &qp(&(&b4 * &q.pow(2 * n)?), &q, 3);
            num.try_div(&den)
        }
        _ => Err(Error::IndexOutOfRange),
    }
}

/// `(x; base)_n` for a non-q base (`q²`, `q³`).
fn qp_base(x: &Scalar, base: &Scalar, n: u32) -> Scalar {
    qp(x, base, n)
}

// ---------------------------------------------------------------------------
// q-Meixner-Pollaczek
// ---------------------------------------------------------------------------

pub fn q_meixner_pollaczek() -> FamilySpec {
    FamilySpec {
        id: FamilyId::QMP,
        class: Class::IV,
        m_degree: 2,
        slots: &["a"],
        needs_s: true,
        needs_w: true,
        validate: |b| {
            validate_s(b)?;
            validate_w(b)?;
            if !b.get("a")?.is_real() {
                return Err(Error::InvalidBinding { reason: "a must be real".into() });
            }
            Ok(())
        },
        physical: |b| Ok(is_real_positive(b.get("a")?) && abs_lt_one(b.get("a")?)),
        shift: |b| Ok(b.with("a", b.get("a")? * b.s()?)),
        energy: q_energy,
        f_const: |b, n| b.s()?.pow(-n),
        b_const: |b, n| {
            let q = b.q()?;
            Ok(&b.s()?.pow(-(n + 1))? * &(&Scalar::one() - &q.pow(n + 1)?))
        },
        c_lead: |b, n| two().pow(n)?.try_div(&qp(&b.q()?, &b.q()?, n as u32)),
        build: |b, n| {
            let a = b.get("a")?.clone();
            let w = b.w()?.clone();
            let q = b.q()?;
            let n32 = n as u32;
            let a2 = &a * &a;
            let pre = qp(&a2, &q, n32)
                .try_div(&(&(&a.pow(n)? * &w.pow(n)?) * &qp(&q, &q, n32)))?;
            let series = phi_series(
                n32,
                &[],
                &[(&a * &(&w * &w), 1), (a.clone(), -1)],
                &[a2, Scalar::zero()],
                0,
                (&q, 0),
                &q,
                Var::Z,
            )?;
            Ok(series.scale(&pre))
        },
        potential: Some(|b| {
            let a = b.get("a")?.clone();
            let w = b.w()?.clone();
            let num = one_minus(&a, 1).try_mul(&one_minus(&(&a * &(&w * &w)), 1))?;
            RationalFn::new(num, twisted_den(&b.q()?, &w))
        }),
        oqm: None,
        zeros: Some(|b| {
            let a = b.get("a")?.clone();
            let w = b.w()?.clone();
            let points = [a.clone(), &a * &w.conj().pow(2)?];
            points
                .iter()
                .map(|zj| {
                    Ok(ZeroPoint { eta: eta_of(zj, &w)?, rep: zj.clone(), multiplicity: 1 })
                })
                .collect()
        }),
        pn_at_zero: Some(|b, n, j| {
            let a = b.get("a")?.clone();
            let w = b.w()?.clone();
            let q = b.q()?;
            let n32 = n as u32;
            let phase = match j {
                0 => w.pow(n)?,
                1 => w.conj().pow(n)?,
                _ => return Err(Error::IndexOutOfRange),
            };
            qp(&(&a * &a), &q, n32).try_div(&(&(&a.pow(n)? * &phase) * &qp(&q, &q, n32)))
        }),
        pn_deriv_at_zero: None,
        c_phi: Some(|b| {
            let a = b.get("a")?.clone();
            Ok(&Scalar::int(4) * &(&a * &a))
        }),
        d_lead: Some(|b, n| {
            let a = b.get("a")?.clone();
            let w = b.w()?.clone();
            let q = b.q()?;
            let num = &(&w - &w.conj())
                * &(&Scalar::one() - &(&(&a * &a) * &q.pow(n)?));
            num.try_div(&(&a * &(&Scalar::one() - &q.pow(n + 1)?)))
        }),
        alpha: Some(|b, n, k| {
            let a = b.get("a")?.clone();
            let w = b.w()?.clone();
            let q = b.q()?;
            let one = Scalar::one();
            let a2 = &a * &a;
            match k {
                2 => Ok(one),
                1 => {
                    let num = &-(&w + &w.conj())
                        * &(&one - &(&a2 * &q.pow(n + 1)?));
                    num.try_div(&(&a * &(&one - &q.pow(n + 2)?)))
                }
                0 => {
                    let num = qp(&(&a2 * &q.pow(n)?), &q, 2);
                    num.try_div(&(&a2 * &qp(&q.pow(n + 1)?, &q, 2)))
                }
                _ => Err(Error::IndexOutOfRange),
            }
        }),
        beta: Some(|b, n| {
            let a = b.get("a")?.clone();
            let q = b.q()?;
            Ok(&(&a * &a) * &qp(&q.pow(n + 1)?, &q, 2))
        }),
        beta_f: Some(|b, n| {
            let a = b.get("a")?.clone();
            let q = b.q()?;
            Ok(&(&(&a * &a) * &b.s()?.pow(-2 * n - 3)?) * &qp(&q.pow(n + 1)?, &q, 2))
        }),
    }
}
