//! Bundled parameter bindings: the regression grid.
//!
//! Three generic rational bindings per family (one suffices for the
//! parameter-free Hermite case), all inside the physical range. The first
//! binding of each family doubles as the default for the numeric suite.
//! Values are chosen with distinct, nonzero parameters so every determinant
//! denominator in the engines stays away from zero for n up to the
//! verification depth.

use crate::scalar::Scalar;

use super::{Binding, FamilyId};

fn r(p: i64, q: i64) -> Scalar {
    Scalar::ratio(p, q)
}

fn g(p: i64, q: i64, rr: i64, ss: i64) -> Scalar {
    Scalar::gaussian(p, q, rr, ss)
}

/// `w = e^{iφ}` from a Pythagorean pair: `((m²-n²) + 2mn·i)/(m²+n²)`.
pub fn pythagorean_phase(m: i64, n: i64) -> Scalar {
    let m2 = m * m;
    let n2 = n * n;
    let den = m2 + n2;
    Scalar::gaussian(m2 - n2, den, 2 * m * n, den)
}

/// The bundled verification bindings for one family.
pub fn default_bindings(id: FamilyId) -> Vec<Binding> {
    let b = |pairs: &[(&str, Scalar)]| Binding::new(id, pairs);
    match id {
        FamilyId::CH => vec![
            b(&[("a1", g(1, 1, 1, 2)), ("a2", r(1, 2))]),
            b(&[("a1", g(1, 2, 1, 3)), ("a2", g(1, 3, 1, 5))]),
            b(&[("a1", r(2, 3)), ("a2", g(3, 4, 1, 7))]),
        ],
        FamilyId::MP => vec![
            b(&[("a", r(1, 1)), ("w", pythagorean_phase(1, 1))]),
            b(&[("a", r(1, 2)), ("w", pythagorean_phase(2, 1))]),
            b(&[("a", r(3, 5)), ("w", pythagorean_phase(3, 2))]),
        ],
        FamilyId::W => vec![
            b(&[("a1", r(1, 2)), ("a2", r(3, 4)), ("a3", g(1, 1, 1, 3)), ("a4", g(1, 1, -1, 3))]),
            b(&[("a1", r(1, 2)), ("a2", r(1, 3)), ("a3", r(3, 4)), ("a4", r(5, 7))]),
            b(&[("a1", g(1, 3, 1, 2)), ("a2", g(1, 3, -1, 2)), ("a3", r(2, 5)), ("a4", r(4, 5))]),
        ],
        FamilyId::CdH => vec![
            b(&[("a1", r(1, 2)), ("a2", r(1, 3)), ("a3", r(5, 7))]),
            b(&[("a1", r(1, 2)), ("a2", g(1, 1, 1, 4)), ("a3", g(1, 1, -1, 4))]),
            b(&[("a1", r(3, 5)), ("a2", g(2, 3, 1, 5)), ("a3", g(2, 3, -1, 5))]),
        ],
        FamilyId::AW => vec![
            b(&[("s", r(1, 2)), ("a1", r(1, 2)), ("a2", r(1, 3)), ("a3", r(-1, 5)), ("a4", r(1, 7))]),
            b(&[("s", r(1, 2)), ("a1", r(3, 5)), ("a2", r(-1, 4)), ("a3", r(1, 6)), ("a4", r(2, 7))]),
            b(&[("s", r(1, 3)), ("a1", g(1, 2, 1, 3)), ("a2", g(1, 2, -1, 3)), ("a3", r(1, 4)), ("a4", r(-1, 5))]),
        ],
        FamilyId::CdqH => vec![
            b(&[("s", r(1, 2)), ("a1", r(1, 2)), ("a2", r(1, 3)), ("a3", r(-1, 5))]),
            b(&[("s", r(1, 2)), ("a1", r(2, 5)), ("a2", r(1, 7)), ("a3", r(3, 4))]),
            b(&[("s", r(1, 3)), ("a1", g(1, 3, 1, 4)), ("a2", g(1, 3, -1, 4)), ("a3", r(1, 2))]),
        ],
        FamilyId::ASC => vec![
            b(&[("s", r(1, 2)), ("a1", r(1, 2)), ("a2", r(1, 3))]),
            b(&[("s", r(1, 2)), ("a1", r(-2, 5)), ("a2", r(3, 7))]),
            b(&[("s", r(1, 3)), ("a1", g(1, 4, 1, 3)), ("a2", g(1, 4, -1, 3))]),
        ],
        FamilyId::CbqHe => vec![
            b(&[("s", r(1, 2)), ("a", r(1, 2))]),
            b(&[("s", r(1, 2)), ("a", r(-3, 5))]),
            b(&[("s", r(1, 3)), ("a", r(2, 7))]),
        ],
        FamilyId::CqHe => vec![
            b(&[("s", r(1, 2))]),
            b(&[("s", r(1, 3))]),
            b(&[("s", r(2, 5))]),
        ],
        FamilyId::CqJ => vec![
            b(&[("s", r(1, 2)), ("t", r(1, 2)), ("u", r(1, 3))]),
            b(&[("s", r(1, 2)), ("t", r(2, 3)), ("u", r(1, 5))]),
            b(&[("s", r(1, 3)), ("t", r(3, 4)), ("u", r(1, 2))]),
        ],
        FamilyId::CqL => vec![
            b(&[("s", r(1, 2)), ("t", r(1, 2))]),
            b(&[("s", r(1, 2)), ("t", r(2, 3))]),
            b(&[("s", r(1, 3)), ("t", r(1, 5))]),
        ],
        FamilyId::CqH => vec![
            b(&[("s", r(1, 2)), ("w", pythagorean_phase(2, 1)), ("a1", r(1, 2)), ("a2", r(1, 3))]),
            b(&[("s", r(1, 2)), ("w", pythagorean_phase(1, 1)), ("a1", r(2, 5)), ("a2", r(3, 7))]),
            b(&[("s", r(1, 3)), ("w", pythagorean_phase(3, 2)), ("a1", g(1, 3, 1, 5)), ("a2", g(1, 3, -1, 5))]),
        ],
        FamilyId::QMP => vec![
            b(&[("s", r(1, 2)), ("w", pythagorean_phase(2, 1)), ("a", r(1, 2))]),
            b(&[("s", r(1, 2)), ("w", pythagorean_phase(1, 1)), ("a", r(1, 3))]),
            b(&[("s", r(1, 3)), ("w", pythagorean_phase(3, 2)), ("a", r(3, 4))]),
        ],
        FamilyId::He => vec![b(&[])],
        FamilyId::L => vec![
            b(&[("g", r(1, 1))]),
            b(&[("g", r(7, 3))]),
            b(&[("g", r(12, 5))]),
        ],
        FamilyId::J => vec![
            b(&[("g", r(1, 1)), ("h", r(1, 1))]),
            b(&[("g", r(7, 3)), ("h", r(4, 5))]),
            b(&[("g", r(5, 4)), ("h", r(9, 7))]),
        ],
        FamilyId::B => vec![
            b(&[("h", r(1, 3))]),
            b(&[("h", r(16, 3))]),
            b(&[("h", r(25, 7))]),
        ],
        FamilyId::PJ => vec![
            b(&[("h", r(1, 3)), ("mu", r(1, 1))]),
            b(&[("h", r(16, 3)), ("mu", r(2, 5))]),
            b(&[("h", r(25, 7)), ("mu", r(3, 2))]),
        ],
    }
}
