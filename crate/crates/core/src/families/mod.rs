//! The family catalog: one declarative descriptor per polynomial family.
//!
//! Each descriptor packages everything the engines need — parameter slots
//! and their validity conditions, the parameter shift, the potential (for
//! difference families) or the coordinate coefficients (for differential
//! families), the exact polynomial constructor, spectral constants, the
//! roots of `Φ̌` with closed-form evaluations, and the closed-form expansion
//! coefficients. Adding a family means adding a descriptor; no engine code
//! changes.
//!
//! Representation conventions:
//! - class (i): variable `x`, `η = x`, `φ = 1`, half shift `x → x ∓ i/2`
//! - class (ii): variable `x`, `η = x²`, `φ = 2x`, same half shift
//! - class (iii): variable `z = e^{ix}`, `η = (z+z⁻¹)/2`, `φ = -i(z-z⁻¹)`,
//!   half shift `z → s^{±1}z` with `s² = q`
//! - class (iv): as (iii) with the twist `ζ = wz`, `w = e^{iφ₀}` a
//!   unit-modulus Gaussian rational
//! - differential families work directly in the sinusoidal coordinate

pub mod bindings;
mod hyper;
mod idqm_q;
mod idqm_shift;
mod oqm;
mod util;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Var};
use crate::rational::RationalFn;
use crate::scalar::Scalar;

pub use hyper::{f_series, phi_series};

/// Tags for the eighteen families.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum FamilyId {
    CH,
    MP,
    W,
    CdH,
    AW,
    CdqH,
    ASC,
    CbqHe,
    CqHe,
    CqJ,
    CqL,
    CqH,
    QMP,
    He,
    L,
    J,
    B,
    PJ,
}

impl FamilyId {
    pub const ALL: [FamilyId; 18] = [
        FamilyId::CH,
        FamilyId::MP,
        FamilyId::W,
        FamilyId::CdH,
        FamilyId::AW,
        FamilyId::CdqH,
        FamilyId::ASC,
        FamilyId::CbqHe,
        FamilyId::CqHe,
        FamilyId::CqJ,
        FamilyId::CqL,
        FamilyId::CqH,
        FamilyId::QMP,
        FamilyId::He,
        FamilyId::L,
        FamilyId::J,
        FamilyId::B,
        FamilyId::PJ,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            FamilyId::CH => "cH",
            FamilyId::MP => "MP",
            FamilyId::W => "W",
            FamilyId::CdH => "cdH",
            FamilyId::AW => "AW",
            FamilyId::CdqH => "cdqH",
            FamilyId::ASC => "ASC",
            FamilyId::CbqHe => "cbqHe",
            FamilyId::CqHe => "cqHe",
            FamilyId::CqJ => "cqJ",
            FamilyId::CqL => "cqL",
            FamilyId::CqH => "cqH",
            FamilyId::QMP => "qMP",
            FamilyId::He => "He",
            FamilyId::L => "L",
            FamilyId::J => "J",
            FamilyId::B => "B",
            FamilyId::PJ => "pJ",
        }
    }

    pub fn from_tag(tag: &str) -> Option<FamilyId> {
        FamilyId::ALL.iter().copied().find(|f| f.tag().eq_ignore_ascii_case(tag))
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())
    }
}

/// Sinusoidal-coordinate class (difference families) or the differential tag.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Class {
    I,
    II,
    III,
    IV,
    Differential,
}

impl Class {
    pub fn is_difference(&self) -> bool {
        !matches!(self, Class::Differential)
    }
}

/// One bound parameter set: slot name → exact value.
///
/// Reserved slots: `s` (with `q = s²`) for the q-families, `w` (unit-modulus
/// phase `e^{iφ}`) for class (iv) and Meixner-Pollaczek.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Binding {
    family: FamilyId,
    values: BTreeMap<String, Scalar>,
}

impl Binding {
    pub fn new(family: FamilyId, pairs: &[(&str, Scalar)]) -> Self {
        Binding {
            family,
            values: pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
        }
    }

    pub fn family(&self) -> FamilyId {
        self.family
    }

    pub fn get(&self, slot: &str) -> Result<&Scalar> {
        self.values.get(slot).ok_or_else(|| Error::UnboundParameter { slot: slot.to_string() })
    }

    /// `s = q^{1/2}`.
    pub fn s(&self) -> Result<&Scalar> {
        self.get("s")
    }

    /// `q = s²`.
    pub fn q(&self) -> Result<Scalar> {
        let s = self.s()?;
        Ok(s * s)
    }

    /// Unit-modulus phase `w = e^{iφ}`.
    pub fn w(&self) -> Result<&Scalar> {
        self.get("w")
    }

    pub fn with(&self, slot: &str, value: Scalar) -> Self {
        let mut out = self.clone();
        out.values.insert(slot.to_string(), value);
        out
    }

    pub fn slots(&self) -> impl Iterator<Item = (&str, &Scalar)> {
        self.values.iter().map(|(k, v)| (k.as_str(), v))
    }

    /// Deterministic one-line rendering, used as the binding digest in reports.
    pub fn digest(&self) -> String {
        let parts: Vec<String> =
            self.values.iter().map(|(k, v)| format!("{k}={v}")).collect();
        parts.join(",")
    }
}

/// A root of `Φ̌` together with its location in the representation variable.
#[derive(Clone, Debug)]
pub struct ZeroPoint {
    /// The root `η_j` in the sinusoidal coordinate.
    pub eta: Scalar,
    /// Where to evaluate the representation polynomial (`x_j`, `z_j = e^{ix_j}`,
    /// or `η_j` itself for differential families).
    pub rep: Scalar,
    pub multiplicity: usize,
}

/// Coordinate data of a differential (oQM) family: `H̃ = -4c₂∂² - 4c₁∂`.
pub struct OqmData {
    pub c1: fn(&Binding) -> Result<LaurentPoly>,
    pub c2: fn(&Binding) -> Result<LaurentPoly>,
    pub c_f: fn(&Binding) -> Result<Scalar>,
}

/// Declarative descriptor of one family. See the module docs.
pub struct FamilySpec {
    pub id: FamilyId,
    pub class: Class,
    /// Degree of `Φ̌` in the sinusoidal coordinate; 0 for the trivial cases.
    pub m_degree: usize,
    /// Parameter slots expected in a binding (not counting `s`/`w` helpers).
    pub slots: &'static [&'static str],
    pub needs_s: bool,
    pub needs_w: bool,
    /// Structural validity: conjugation closures, unit modulus, `0 < s < 1`.
    pub validate: fn(&Binding) -> Result<()>,
    /// Physical parameter range (hermiticity / normalizability).
    pub physical: fn(&Binding) -> Result<bool>,
    /// `λ → λ + δ`.
    pub shift: fn(&Binding) -> Result<Binding>,
    pub energy: fn(&Binding, i64) -> Result<Scalar>,
    pub f_const: fn(&Binding, i64) -> Result<Scalar>,
    pub b_const: fn(&Binding, i64) -> Result<Scalar>,
    /// Leading coefficient `c_n` of `P_n` in the sinusoidal coordinate.
    pub c_lead: fn(&Binding, i64) -> Result<Scalar>,
    /// `P̌_n` in the representation variable (`P̌_{-1} = 0`).
    pub build: fn(&Binding, i64) -> Result<LaurentPoly>,
    /// Potential `V` (difference families only).
    pub potential: Option<fn(&Binding) -> Result<RationalFn>>,
    pub oqm: Option<OqmData>,
    /// Roots of `Φ̌`; `None` for the trivial families.
    pub zeros: Option<fn(&Binding) -> Result<Vec<ZeroPoint>>>,
    /// Closed form `P̌_n(x_j)`.
    pub pn_at_zero: Option<fn(&Binding, i64, usize) -> Result<Scalar>>,
    /// Closed form `P'_n(η_j)` where a multiple root needs derivative rows.
    pub pn_deriv_at_zero: Option<fn(&Binding, i64, usize) -> Result<Scalar>>,
    /// Leading coefficient `c^Φ` of `Φ̌`.
    pub c_phi: Option<fn(&Binding) -> Result<Scalar>>,
    /// Closed form of the base determinant `D_n^{(0,…,m-1)}` (the
    /// derivative-normalized variant where the root is multiple).
    pub d_lead: Option<fn(&Binding, i64) -> Result<Scalar>>,
    /// Closed-form `α_{n,k}`, `k = 0..=m`.
    pub alpha: Option<fn(&Binding, i64, usize) -> Result<Scalar>>,
    pub beta: Option<fn(&Binding, i64) -> Result<Scalar>>,
    pub beta_f: Option<fn(&Binding, i64) -> Result<Scalar>>,
}

impl FamilySpec {
    pub fn is_difference(&self) -> bool {
        self.class.is_difference()
    }

    /// `κ`: 1 for classes (i)/(ii) and differential families, `q⁻¹` otherwise.
    pub fn kappa(&self, b: &Binding) -> Result<Scalar> {
        match self.class {
            Class::III | Class::IV => b.q()?.inv(),
            _ => Ok(Scalar::one()),
        }
    }

    /// `λ → λ + 2δ`.
    pub fn shift_twice(&self, b: &Binding) -> Result<Binding> {
        (self.shift)(&(self.shift)(b)?)
    }

    /// Shift appearing in the Christoffel expansion: `2δ` for difference
    /// families, `δ` for differential ones.
    pub fn expansion_shift(&self, b: &Binding) -> Result<Binding> {
        if self.is_difference() {
            self.shift_twice(b)
        } else {
            (self.shift)(b)
        }
    }
}

/// How the half-step shift operator `e^{γp/2}` acts on the representation.
#[derive(Clone, Debug)]
pub enum ShiftStep {
    /// `x → x - i/2` (γ = 1).
    Imaginary,
    /// `z → s·z` (γ = log q).
    Scale(Scalar),
    /// Differential family: no shift structure.
    None,
}

/// Representation data bound to concrete parameters.
#[derive(Clone, Debug)]
pub struct Representation {
    pub var: Var,
    pub class: Class,
    /// `η` as a polynomial in the representation variable.
    pub eta: LaurentPoly,
    /// `φ` as a polynomial in the representation variable (`0` for
    /// differential families, where it is not used).
    pub varphi: LaurentPoly,
    pub step: ShiftStep,
    /// `κ^{1/2}` (1, or `s⁻¹`).
    pub kappa_sqrt: Scalar,
    /// Class (iv) twist `w`; 1 elsewhere.
    pub twist: Scalar,
}

impl Representation {
    /// Applies `e^{kγp/2}`, i.e. `f(x) → f(x - k·iγ/2)`.
    pub fn half_shift(&self, p: &LaurentPoly, k: i32) -> Result<LaurentPoly> {
        match &self.step {
            ShiftStep::Imaginary => {
                let c = &Scalar::int(-i64::from(k)) * &Scalar::gaussian(0, 1, 1, 2);
                p.substitute_shift(&c)
            }
            ShiftStep::Scale(s) => p.substitute_scale(&s.pow(i64::from(k))?),
            ShiftStep::None => Err(Error::NotIdQm),
        }
    }

    /// Re-expresses a representation polynomial in powers of `η`.
    /// The result is an ordinary polynomial tagged [`Var::X`].
    pub fn to_eta_basis(&self, p: &LaurentPoly) -> Result<LaurentPoly> {
        match self.class {
            Class::I | Class::Differential => {
                if p.valuation().unwrap_or(0) < 0 {
                    return Err(Error::ConversionFailure {
                        context: "negative exponents in an η-variable polynomial".into(),
                    });
                }
                Ok(retag(p, Var::X))
            }
            Class::II => {
                let mut out = LaurentPoly::zero(Var::X);
                for (k, c) in p.terms() {
                    if k < 0 || k % 2 != 0 {
                        return Err(Error::ConversionFailure {
                            context: format!("odd or negative exponent {k} for η = x²"),
                        });
                    }
                    out = &out + &LaurentPoly::monomial(Var::X, c.clone(), k / 2);
                }
                Ok(out)
            }
            Class::III => symmetric_to_eta(p),
            Class::IV => {
                let unwisted = p.substitute_scale(&self.twist.inv()?)?;
                symmetric_to_eta(&unwisted)
            }
        }
    }

    /// Evaluates `η` at a representation point.
    pub fn eta_at(&self, rep: &Scalar) -> Result<Scalar> {
        self.eta.eval(rep)
    }
}

fn retag(p: &LaurentPoly, var: Var) -> LaurentPoly {
    LaurentPoly::from_terms(var, &p.terms().map(|(k, c)| (k, c.clone())).collect::<Vec<_>>())
}

/// Reduces a `z → z⁻¹`-symmetric Laurent polynomial to a polynomial in
/// `η = (z + z⁻¹)/2` by repeated subtraction of `(z + z⁻¹)^d`.
fn symmetric_to_eta(p: &LaurentPoly) -> Result<LaurentPoly> {
    let zpz = LaurentPoly::from_terms(
        Var::Z,
        &[(1, Scalar::one()), (-1, Scalar::one())],
    );
    let mut rem = p.clone();
    let mut out = LaurentPoly::zero(Var::X);
    while !rem.is_zero() {
        let d = rem.degree().unwrap();
        let v = rem.valuation().unwrap();
        if d == 0 && v == 0 {
            out = &out + &LaurentPoly::constant(Var::X, rem.coeff(0));
            break;
        }
        if d <= 0 || -v > d {
            return Err(Error::ConversionFailure {
                context: format!("not symmetric under z → z⁻¹ (degree {d}, valuation {v})"),
            });
        }
        let c = rem.coeff(d);
        rem = &rem - &zpz.pow(d as u32).scale(&c);
        out = &out + &LaurentPoly::monomial(Var::X, &c * &Scalar::int(2).pow(d).unwrap(), d);
    }
    Ok(out)
}

/// The representation of a family at a bound parameter set.
pub fn representation_of(spec: &FamilySpec, b: &Binding) -> Result<Representation> {
    let x = |k: i64| LaurentPoly::monomial(Var::X, Scalar::one(), k);
    let z = |k: i64| LaurentPoly::monomial(Var::Z, Scalar::one(), k);
    match spec.class {
        Class::I => Ok(Representation {
            var: Var::X,
            class: Class::I,
            eta: x(1),
            varphi: LaurentPoly::one(Var::X),
            step: ShiftStep::Imaginary,
            kappa_sqrt: Scalar::one(),
            twist: Scalar::one(),
        }),
        Class::II => Ok(Representation {
            var: Var::X,
            class: Class::II,
            eta: x(2),
            varphi: x(1).scale(&Scalar::int(2)),
            step: ShiftStep::Imaginary,
            kappa_sqrt: Scalar::one(),
            twist: Scalar::one(),
        }),
        Class::III => {
            let s = b.s()?.clone();
            if s.is_zero() {
                return Err(Error::InvalidBinding { reason: "s must be nonzero".into() });
            }
            let half = Scalar::ratio(1, 2);
            Ok(Representation {
                var: Var::Z,
                class: Class::III,
                eta: &z(1).scale(&half) + &z(-1).scale(&half),
                varphi: &z(1).scale(&-Scalar::i()) + &z(-1).scale(&Scalar::i()),
                step: ShiftStep::Scale(s.clone()),
                kappa_sqrt: s.inv()?,
                twist: Scalar::one(),
            })
        }
        Class::IV => {
            let s = b.s()?.clone();
            let w = b.w()?.clone();
            if !(&w * &w.conj()).is_one() {
                return Err(Error::InvalidBinding { reason: "w must have unit modulus".into() });
            }
            let half = Scalar::ratio(1, 2);
            let wbar = w.conj();
            Ok(Representation {
                var: Var::Z,
                class: Class::IV,
                eta: &z(1).scale(&(&w * &half)) + &z(-1).scale(&(&wbar * &half)),
                varphi: &z(1).scale(&(&-Scalar::i() * &w)) + &z(-1).scale(&(&Scalar::i() * &wbar)),
                step: ShiftStep::Scale(s.clone()),
                kappa_sqrt: s.inv()?,
                twist: w,
            })
        }
        Class::Differential => Ok(Representation {
            var: Var::X,
            class: Class::Differential,
            eta: x(1),
            varphi: LaurentPoly::zero(Var::X),
            step: ShiftStep::None,
            kappa_sqrt: Scalar::one(),
            twist: Scalar::one(),
        }),
    }
}

/// `P̌_n` with the convention `P̌_{-1} = 0`.
///
/// Construction is memoized per (family, binding, n): the suites evaluate
/// the same polynomials in many checks. The memo is guarded by a mutex and
/// shared across threads.
pub fn build_pn(spec: &FamilySpec, b: &Binding, n: i64) -> Result<LaurentPoly> {
    use std::collections::HashMap;
    use std::sync::{LazyLock, Mutex};
    static MEMO: LazyLock<Mutex<HashMap<(FamilyId, String, i64), LaurentPoly>>> =
        LazyLock::new(|| Mutex::new(HashMap::new()));

    if n < 0 {
        let rep = representation_of(spec, b)?;
        return Ok(LaurentPoly::zero(rep.var));
    }
    let key = (spec.id, b.digest(), n);
    if let Some(hit) = MEMO.lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let built = (spec.build)(b, n)?;
    MEMO.lock().unwrap().insert(key, built.clone());
    Ok(built)
}

/// Checks that the coefficient of `η^n` in `P_n` equals the family's `c_n`.
pub fn leading_coefficient_check(spec: &FamilySpec, b: &Binding, n: i64) -> Result<bool> {
    let rep = representation_of(spec, b)?;
    let pn = build_pn(spec, b, n)?;
    let in_eta = rep.to_eta_basis(&pn)?;
    if in_eta.degree() != Some(n.max(0)) {
        return Ok(false);
    }
    Ok(in_eta.coeff(n) == (spec.c_lead)(b, n)?)
}

/// Spectral constants `(E_n, f_n, b_n)`.
pub fn spectral_data(spec: &FamilySpec, b: &Binding, n: i64) -> Result<(Scalar, Scalar, Scalar)> {
    Ok(((spec.energy)(b, n)?, (spec.f_const)(b, n)?, (spec.b_const)(b, n)?))
}

/// Evaluates the built `P̌_n` at the `j`-th root of `Φ̌` and cross-checks the
/// appendix closed form. Returns the value.
pub fn eval_at_special_point(spec: &FamilySpec, b: &Binding, n: i64, j: usize) -> Result<Scalar> {
    let zeros_fn = spec.zeros.ok_or(Error::IndexOutOfRange)?;
    let zeros = zeros_fn(b)?;
    let zero = zeros.get(j).ok_or(Error::IndexOutOfRange)?;
    let pn = build_pn(spec, b, n)?;
    let value = pn.eval(&zero.rep)?;
    if let Some(closed) = spec.pn_at_zero {
        let expect = closed(b, n, j)?;
        if value != expect {
            return Err(Error::ConversionFailure {
                context: format!(
                    "P_{n}(x_{j}) mismatch for {}: built {value}, closed form {expect}",
                    spec.id
                ),
            });
        }
    }
    Ok(value)
}

/// The full catalog, in declaration order.
pub fn catalog() -> Vec<FamilySpec> {
    vec![
        idqm_shift::continuous_hahn(),
        idqm_shift::meixner_pollaczek(),
        idqm_shift::wilson(),
        idqm_shift::continuous_dual_hahn(),
        idqm_q::askey_wilson(),
        idqm_q::continuous_dual_q_hahn(),
        idqm_q::al_salam_chihara(),
        idqm_q::continuous_big_q_hermite(),
        idqm_q::continuous_q_hermite(),
        idqm_q::continuous_q_jacobi(),
        idqm_q::continuous_q_laguerre(),
        idqm_q::continuous_q_hahn(),
        idqm_q::q_meixner_pollaczek(),
        oqm::hermite(),
        oqm::laguerre(),
        oqm::jacobi(),
        oqm::bessel(),
        oqm::pseudo_jacobi(),
    ]
}

/// Looks up one family.
pub fn family(id: FamilyId) -> FamilySpec {
    catalog().into_iter().find(|f| f.id == id).expect("family in catalog")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_complete() {
        let cat = catalog();
        assert_eq!(cat.len(), 18);
        for id in FamilyId::ALL {
            assert!(cat.iter().any(|f| f.id == id), "missing {id}");
            assert_eq!(FamilyId::from_tag(id.tag()), Some(id));
        }
    }

    #[test]
    fn symmetric_reduction_roundtrip() {
        // (z+z⁻¹)² + 3(z+z⁻¹) + 1 → 4η² + 6η − 1 as a polynomial in η
        let zpz = LaurentPoly::from_terms(
            Var::Z,
            &[(1, Scalar::one()), (-1, Scalar::one())],
        );
        let p = &(&zpz.pow(2) + &zpz.scale(&Scalar::int(3)))
            - &LaurentPoly::one(Var::Z);
        let eta = symmetric_to_eta(&p).unwrap();
        let expect = LaurentPoly::from_terms(
            Var::X,
            &[(2, Scalar::int(4)), (1, Scalar::int(6)), (0, Scalar::int(-1))],
        );
        assert_eq!(eta, expect);
        // non-symmetric input fails
        let bad = LaurentPoly::monomial(Var::Z, Scalar::one(), 1);
        assert!(symmetric_to_eta(&bad).is_err());
    }
}
