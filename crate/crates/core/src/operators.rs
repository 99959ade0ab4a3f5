//! Forward/backward shift operators and the square-root-free Hamiltonian
//! as exact maps on representation polynomials, plus the difference and
//! differential relation checks built from them.
//!
//! Difference families: `F = iφ⁻¹(e^{γp/2} - e^{-γp/2})`,
//! `B = -i(V e^{γp/2} - V* e^{-γp/2})φ`, `H̃ = V(e^{γp}-1) + V*(e^{-γp}-1)`,
//! realized through half-shift substitutions followed by exact division.
//! Differential families: `F = c_F d/dη`, `B = -4c_F⁻¹(c₂ d/dη + c₁)`,
//! `H̃ = -4c₂ d²/dη² - 4c₁ d/dη`.

use crate::error::{Error, Result};
use crate::families::{
    build_pn, representation_of, Binding, FamilySpec, Representation,
};
use crate::laurent::LaurentPoly;
use crate::scalar::Scalar;

/// Context holding a family, a binding, and the bound representation.
pub struct OperatorContext<'a> {
    pub spec: &'a FamilySpec,
    pub binding: Binding,
    pub rep: Representation,
}

impl<'a> OperatorContext<'a> {
    pub fn new(spec: &'a FamilySpec, binding: &Binding) -> Result<Self> {
        (spec.validate)(binding)?;
        let rep = representation_of(spec, binding)?;
        Ok(OperatorContext { spec, binding: binding.clone(), rep })
    }

    fn potential_parts(&self) -> Result<(LaurentPoly, LaurentPoly, LaurentPoly, LaurentPoly)> {
        let pot = self.spec.potential.ok_or(Error::NotIdQm)?(&self.binding)?;
        let num = pot.num().clone();
        let den = pot.den().clone();
        let star = pot.star_conjugate();
        Ok((num, den, star.num().clone(), star.den().clone()))
    }

    /// `F(λ)p`: for difference families `i(p₋ - p₊)/φ` with exact division,
    /// for differential families `c_F·dp/dη`.
    pub fn forward_shift(&self, p: &LaurentPoly) -> Result<LaurentPoly> {
        if let Some(oqm) = &self.spec.oqm {
            let cf = (oqm.c_f)(&self.binding)?;
            return Ok(p.derivative().scale(&cf));
        }
        let minus = self.rep.half_shift(p, 1)?;
        let plus = self.rep.half_shift(p, -1)?;
        let diff = minus.try_sub(&plus)?.scale(&Scalar::i());
        diff.exact_divide(&self.rep.varphi).map_err(|_| Error::NotDivisible {
            context: format!("forward shift image not divisible by φ ({})", self.spec.id),
        })
    }

    /// `B(λ)p`: the half-shifted combination with `V`, `V*`, asserted to be
    /// a polynomial.
    pub fn backward_shift(&self, p: &LaurentPoly) -> Result<LaurentPoly> {
        if let Some(oqm) = &self.spec.oqm {
            let cf = (oqm.c_f)(&self.binding)?;
            let c1 = (oqm.c1)(&self.binding)?;
            let c2 = (oqm.c2)(&self.binding)?;
            let combo = c2.try_mul(&p.derivative())?.try_add(&c1.try_mul(p)?)?;
            return Ok(combo.scale(&(&Scalar::int(-4) * &cf.inv()?)));
        }
        let (vn, vd, sn, sd) = self.potential_parts()?;
        let phi_p = self.rep.varphi.try_mul(p)?;
        let term_plus = vn.try_mul(&sd)?.try_mul(&self.rep.half_shift(&phi_p, 1)?)?;
        let term_minus = sn.try_mul(&vd)?.try_mul(&self.rep.half_shift(&phi_p, -1)?)?;
        let num = term_plus.try_sub(&term_minus)?.scale(&-Scalar::i());
        let den = vd.try_mul(&sd)?;
        num.exact_divide(&den).map_err(|_| Error::NotDivisible {
            context: format!("backward shift image not polynomial ({})", self.spec.id),
        })
    }

    /// `H̃p = V(p(x-iγ) - p) + V*(p(x+iγ) - p)`, exact-divided to a polynomial
    /// (differential families: `-4c₂p'' - 4c₁p'`).
    pub fn apply_htilde(&self, p: &LaurentPoly) -> Result<LaurentPoly> {
        if let Some(oqm) = &self.spec.oqm {
            let c1 = (oqm.c1)(&self.binding)?;
            let c2 = (oqm.c2)(&self.binding)?;
            let dp = p.derivative();
            let combo = c2.try_mul(&dp.derivative())?.try_add(&c1.try_mul(&dp)?)?;
            return Ok(combo.scale(&Scalar::int(-4)));
        }
        let (vn, vd, sn, sd) = self.potential_parts()?;
        let down = self.rep.half_shift(p, 2)?.try_sub(p)?;
        let up = self.rep.half_shift(p, -2)?.try_sub(p)?;
        let num = vn.try_mul(&sd)?.try_mul(&down)?.try_add(&sn.try_mul(&vd)?.try_mul(&up)?)?;
        let den = vd.try_mul(&sd)?;
        num.exact_divide(&den).map_err(|_| Error::NotDivisible {
            context: format!("Hamiltonian image not polynomial ({})", self.spec.id),
        })
    }
}

/// Zero-residual outcome of one identity check.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub passed: bool,
    /// Exact rendering of the residual when the identity fails.
    pub residual: Option<String>,
}

impl Outcome {
    pub fn pass() -> Self {
        Outcome { passed: true, residual: None }
    }

    pub fn from_residual(r: &LaurentPoly) -> Self {
        if r.is_zero() {
            Outcome::pass()
        } else {
            Outcome { passed: false, residual: Some(r.to_string()) }
        }
    }

    pub fn from_scalar_residual(r: &Scalar) -> Self {
        if r.is_zero() {
            Outcome::pass()
        } else {
            Outcome { passed: false, residual: Some(r.to_string()) }
        }
    }
}

/// `H̃P̌_n = E_n P̌_n` (the eigen-oracle certifying polynomial construction).
pub fn verify_eigen(ctx: &OperatorContext, n: i64) -> Result<Outcome> {
    let pn = build_pn(ctx.spec, &ctx.binding, n)?;
    let lhs = ctx.apply_htilde(&pn)?;
    let energy = (ctx.spec.energy)(&ctx.binding, n)?;
    let residual = lhs.try_sub(&pn.scale(&energy))?;
    Ok(Outcome::from_residual(&residual))
}

/// `F(λ)P̌_n(λ) = f_n(λ)P̌_{n-1}(λ+δ)`.
pub fn verify_forward_relation(ctx: &OperatorContext, n: i64) -> Result<Outcome> {
    let pn = build_pn(ctx.spec, &ctx.binding, n)?;
    let lhs = ctx.forward_shift(&pn)?;
    let shifted = (ctx.spec.shift)(&ctx.binding)?;
    let rhs = if n == 0 {
        LaurentPoly::zero(ctx.rep.var)
    } else {
        build_pn(ctx.spec, &shifted, n - 1)?.scale(&(ctx.spec.f_const)(&ctx.binding, n)?)
    };
    Ok(Outcome::from_residual(&lhs.try_sub(&rhs)?))
}

/// `B(λ)P̌_{n-1}(λ+δ) = b_{n-1}(λ)P̌_n(λ)` for `n ≥ 1`.
pub fn verify_backward_relation(ctx: &OperatorContext, n: i64) -> Result<Outcome> {
    if n < 1 {
        return Err(Error::IndexOutOfRange);
    }
    let shifted = (ctx.spec.shift)(&ctx.binding)?;
    let p_prev = build_pn(ctx.spec, &shifted, n - 1)?;
    let lhs = ctx.backward_shift(&p_prev)?;
    let rhs =
        build_pn(ctx.spec, &ctx.binding, n)?.scale(&(ctx.spec.b_const)(&ctx.binding, n - 1)?);
    Ok(Outcome::from_residual(&lhs.try_sub(&rhs)?))
}

/// `H̃ = B∘F` on `P̌_n`.
pub fn verify_factorization(ctx: &OperatorContext, n: i64) -> Result<Outcome> {
    let pn = build_pn(ctx.spec, &ctx.binding, n)?;
    let via_ops = ctx.backward_shift(&ctx.forward_shift(&pn)?)?;
    let direct = ctx.apply_htilde(&pn)?;
    Ok(Outcome::from_residual(&via_ops.try_sub(&direct)?))
}

/// The φ half-shift sum identity
/// `φ(x-iγ/2) + φ(x+iγ/2) = (κ^{1/2}+κ^{-1/2})φ(x)` (difference families).
pub fn verify_phi_halfshift_sum(ctx: &OperatorContext) -> Result<Outcome> {
    if ctx.spec.oqm.is_some() {
        return Err(Error::NotIdQm);
    }
    let phi = &ctx.rep.varphi;
    let lhs = ctx.rep.half_shift(phi, 1)?.try_add(&ctx.rep.half_shift(phi, -1)?)?;
    let factor = &ctx.rep.kappa_sqrt + &ctx.rep.kappa_sqrt.inv()?;
    Ok(Outcome::from_residual(&lhs.try_sub(&phi.scale(&factor))?))
}

/// The factored forward-pair identity on an η-monomial of degree `k`:
/// `F(λ+δ)F(λ)·η^k` computed operationally must equal the closed operator
/// form applied to `η^k`, cross-multiplied by `φ·φ₋·φ₊`.
pub fn verify_forward_pair_on_monomial(ctx: &OperatorContext, k: u32) -> Result<Outcome> {
    if ctx.spec.oqm.is_some() {
        return Err(Error::NotIdQm);
    }
    let monomial = ctx.rep.eta.pow(k);
    let shifted_binding = (ctx.spec.shift)(&ctx.binding)?;
    let shifted_ctx = OperatorContext::new(ctx.spec, &shifted_binding)?;
    let ff = shifted_ctx.forward_shift(&ctx.forward_shift(&monomial)?)?;

    let phi = &ctx.rep.varphi;
    let phi_minus = ctx.rep.half_shift(phi, 1)?;
    let phi_plus = ctx.rep.half_shift(phi, -1)?;
    let factor = &ctx.rep.kappa_sqrt + &ctx.rep.kappa_sqrt.inv()?;
    let down = ctx.rep.half_shift(&monomial, 2)?;
    let up = ctx.rep.half_shift(&monomial, -2)?;
    // (κ^½+κ^-½)φ·η^k − φ₊·η^k(x-iγ) − φ₋·η^k(x+iγ)  ==  FF(η^k)·φφ₋φ₊
    let rhs_num = phi
        .scale(&factor)
        .try_mul(&monomial)?
        .try_sub(&phi_plus.try_mul(&down)?)?
        .try_sub(&phi_minus.try_mul(&up)?)?;
    let lhs = ff.try_mul(phi)?.try_mul(&phi_minus)?.try_mul(&phi_plus)?;
    Ok(Outcome::from_residual(&lhs.try_sub(&rhs_num)?))
}

/// The difference relation for `P̌_{n+2}`, cross-multiplied by the potential
/// denominators:
///
/// ```text
/// κ⁻¹ φ V V* ((κ^½+κ^-½)φ P̌_{n+2} − φ₊ P̌_{n+2}(x-iγ) − φ₋ P̌_{n+2}(x+iγ))
///   = β^F_n Σ_k α_{n,k} P̌_{n+k}
/// ```
pub fn verify_difference_relation(
    ctx: &OperatorContext,
    n: i64,
    alpha: &dyn Fn(usize) -> Result<Scalar>,
    beta_f: &Scalar,
) -> Result<Outcome> {
    if ctx.spec.oqm.is_some() {
        return Err(Error::NotIdQm);
    }
    let m = ctx.spec.m_degree;
    let (vn, vd, sn, sd) = ctx.potential_parts()?;
    let p_top = build_pn(ctx.spec, &ctx.binding, n + 2)?;

    let phi = &ctx.rep.varphi;
    let phi_minus = ctx.rep.half_shift(phi, 1)?;
    let phi_plus = ctx.rep.half_shift(phi, -1)?;
    let factor = &ctx.rep.kappa_sqrt + &ctx.rep.kappa_sqrt.inv()?;
    let bracket = phi
        .scale(&factor)
        .try_mul(&p_top)?
        .try_sub(&phi_plus.try_mul(&ctx.rep.half_shift(&p_top, 2)?)?)?
        .try_sub(&phi_minus.try_mul(&ctx.rep.half_shift(&p_top, -2)?)?)?;
    let kappa_inv = ctx.rep.kappa_sqrt.pow(-2)?;
    let lhs = phi
        .scale(&kappa_inv)
        .try_mul(&vn)?
        .try_mul(&sn)?
        .try_mul(&bracket)?;

    let mut rhs = LaurentPoly::zero(ctx.rep.var);
    for k in 0..=m {
        let coeff = alpha(k)?;
        let p = build_pn(ctx.spec, &ctx.binding, n + k as i64)?;
        rhs = rhs.try_add(&p.scale(&coeff))?;
    }
    let rhs = rhs.scale(beta_f).try_mul(&vd)?.try_mul(&sd)?;
    Ok(Outcome::from_residual(&lhs.try_sub(&rhs)?))
}

/// The differential relation `(4/c_F)c₂ P'_{n+1} = β^F_n Σ_k α_{n,k} P_{n+k}`.
pub fn verify_differential_relation(
    ctx: &OperatorContext,
    n: i64,
    alpha: &dyn Fn(usize) -> Result<Scalar>,
    beta_f: &Scalar,
) -> Result<Outcome> {
    let oqm = ctx.spec.oqm.as_ref().ok_or(Error::NotIdQm)?;
    let m = ctx.spec.m_degree;
    let cf = (oqm.c_f)(&ctx.binding)?;
    let c2 = (oqm.c2)(&ctx.binding)?;
    let p_top = build_pn(ctx.spec, &ctx.binding, n + 1)?;
    let lhs = c2
        .try_mul(&p_top.derivative())?
        .scale(&(&Scalar::int(4) * &cf.inv()?));
    let mut rhs = LaurentPoly::zero(ctx.rep.var);
    for k in 0..=m {
        let coeff = alpha(k)?;
        let p = build_pn(ctx.spec, &ctx.binding, n + k as i64)?;
        rhs = rhs.try_add(&p.scale(&coeff))?;
    }
    Ok(Outcome::from_residual(&lhs.try_sub(&rhs.scale(beta_f))?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{family, FamilyId};

    fn mp_binding() -> Binding {
        // a = 1, w = i (φ = π/2)
        Binding::new(FamilyId::MP, &[("a", Scalar::one()), ("w", Scalar::i())])
    }

    #[test]
    fn forward_kills_constants() {
        let spec = family(FamilyId::MP);
        let ctx = OperatorContext::new(&spec, &mp_binding()).unwrap();
        let p0 = build_pn(&spec, &ctx.binding, 0).unwrap();
        assert!(ctx.forward_shift(&p0).unwrap().is_zero());
    }

    #[test]
    fn htilde_kills_constants() {
        let spec = family(FamilyId::L);
        let b = Binding::new(FamilyId::L, &[("g", Scalar::one())]);
        let ctx = OperatorContext::new(&spec, &b).unwrap();
        let one = LaurentPoly::one(crate::laurent::Var::X);
        assert!(ctx.apply_htilde(&one).unwrap().is_zero());
    }

    #[test]
    fn laguerre_forward_instance() {
        // F P₁ = -2 = f₁ P₀(λ+δ) with f₁ = -2
        let spec = family(FamilyId::L);
        let b = Binding::new(FamilyId::L, &[("g", Scalar::one())]);
        let ctx = OperatorContext::new(&spec, &b).unwrap();
        let p1 = build_pn(&spec, &b, 1).unwrap();
        let image = ctx.forward_shift(&p1).unwrap();
        assert_eq!(
            image,
            LaurentPoly::constant(crate::laurent::Var::X, Scalar::int(-2))
        );
    }
}
