//! Terminating hypergeometric sums, evaluated term by term with exact
//! ratios between consecutive terms.

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Var};
use crate::scalar::Scalar;

/// Terminating generalized hypergeometric sum
///
/// ```text
/// Σ_{k=0}^{n} (-n)_k ∏(a_i)_k ∏(ℓ_j(u))_k / (∏(b_i)_k · k!) · arg^k
/// ```
///
/// where the `ℓ_j` are degree-one (or constant-free polynomial) slots whose
/// rising factorial steps by 1, and `arg` may itself be a polynomial.
/// The `(-n)_k / k!` factors are supplied automatically.
pub fn f_series(
    n: u32,
    upper: &[Scalar],
    upper_linear: &[LaurentPoly],
    lower: &[Scalar],
    argument: &LaurentPoly,
    var: Var,
) -> Result<LaurentPoly> {
    let mut sum = LaurentPoly::zero(var);
    let mut term = LaurentPoly::one(var);
    for k in 0..=n {
        sum = sum.try_add(&term)?;
        if k == n {
            break;
        }
        let kk = Scalar::int(i64::from(k));
        // scalar part of t_{k+1}/t_k
        let mut num = &Scalar::int(-i64::from(n)) + &kk;
        for a in upper {
            num = &num * &(a + &kk);
        }
        let mut den = &kk + &Scalar::one();
        for b in lower {
            den = &den * &(b + &kk);
        }
        let ratio = num.try_div(&den).map_err(|_| Error::ZeroDenominator {
            context: format!("hypergeometric lower parameter at step {k}"),
        })?;
        term = term.scale(&ratio).try_mul(argument)?;
        for slot in upper_linear {
            let shifted = slot.try_add(&LaurentPoly::constant(var, kk.clone()))?;
            term = term.try_mul(&shifted)?;
        }
    }
    Ok(sum)
}

/// Terminating basic hypergeometric sum
///
/// ```text
/// Σ_{k=0}^{n} (q^{-n};q)_k ∏(a_i;q)_k ∏(c_j z^{e_j};q)_k /
///             ((q;q)_k ∏(b_i;q)_k) · [(-1)^k q^{k(k-1)/2}]^{p} · (c_a z^{e_a})^k
/// ```
///
/// `upper` are scalar slots beyond the automatic `q^{-n}`, `upper_z` are
/// monomial slots `(c, e)` standing for `c·z^e`, `extra_power` is the
/// exponent `p = 1 + s - r`, and the argument is a monomial.
pub fn phi_series(
    n: u32,
    upper: &[Scalar],
    upper_z: &[(Scalar, i64)],
    lower: &[Scalar],
    extra_power: i32,
    argument: (&Scalar, i64),
    q: &Scalar,
    var: Var,
) -> Result<LaurentPoly> {
    let q_neg_n = q.pow(-i64::from(n))?;
    let mut sum = LaurentPoly::zero(var);
    let mut term = LaurentPoly::one(var);
    let mut qk = Scalar::one();
    for k in 0..=n {
        sum = sum.try_add(&term)?;
        if k == n {
            break;
        }
        let one = Scalar::one();
        // scalar part of t_{k+1}/t_k
        let mut num = &one - &(&q_neg_n * &qk);
        for a in upper {
            num = &num * &(&one - &(a * &qk));
        }
        let mut den = &one - &(q * &qk);
        for b in lower {
            den = &den * &(&one - &(b * &qk));
        }
        let mut ratio = num.try_div(&den).map_err(|_| Error::ZeroDenominator {
            context: format!("basic hypergeometric lower parameter at step {k}"),
        })?;
        ratio = &ratio * argument.0;
        if extra_power != 0 {
            let base = &-Scalar::one() * &qk;
            ratio = &ratio * &base.pow(i64::from(extra_power))?;
        }
        term = term.scale(&ratio);
        if argument.1 != 0 {
            term = term.try_mul(&LaurentPoly::monomial(var, Scalar::one(), argument.1))?;
        }
        for (c, e) in upper_z {
            let factor = LaurentPoly::from_terms(
                var,
                &[(0, Scalar::one()), (*e, -(c * &qk))],
            );
            term = term.try_mul(&factor)?;
        }
        qk = &qk * q;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_sums_are_one() {
        let one = f_series(0, &[], &[], &[], &LaurentPoly::one(Var::X), Var::X).unwrap();
        assert_eq!(one, LaurentPoly::one(Var::X));
        let q = Scalar::ratio(1, 4);
        let onep = phi_series(0, &[], &[], &[], 0, (&q, 0), &q, Var::Z).unwrap();
        assert_eq!(onep, LaurentPoly::one(Var::Z));
    }

    #[test]
    fn binomial_via_1f0() {
        // ₁F₀(-n; —; -x) would be (1+x)^n; with our automatic (-n)_k this is
        // f_series(n, [], [], [], arg = -x).
        let x = LaurentPoly::monomial(Var::X, Scalar::int(-1), 1);
        let p = f_series(3, &[], &[], &[], &x, Var::X).unwrap();
        // (1+x)³
        let onepx = LaurentPoly::from_terms(Var::X, &[(0, Scalar::one()), (1, Scalar::one())]);
        assert_eq!(p, onepx.pow(3));
    }

    #[test]
    fn q_binomial_theorem_check() {
        // (z;q)_n = Σ_k (q^{-n};q)_k/(q;q)_k q^k · ... : spot check against the
        // direct product for n = 3 via the ₁φ₀ form:
        // ₁φ₀(q^{-n}; —; q, q^n z)  (extra_power = 0 for r=1, s=0)
        let q = Scalar::ratio(1, 4);
        let n = 3u32;
        let qn = q.pow(i64::from(n)).unwrap();
        let series =
            phi_series(n, &[], &[], &[], 0, (&qn, 1), &q, Var::Z).unwrap();
        let mut product = LaurentPoly::one(Var::Z);
        let mut qk = Scalar::one();
        for _ in 0..n {
            let f = LaurentPoly::from_terms(Var::Z, &[(0, Scalar::one()), (1, -&qk)]);
            product = product.try_mul(&f).unwrap();
            qk = &qk * &q;
        }
        assert_eq!(series, product);
    }
}
