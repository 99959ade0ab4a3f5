//! Exact determinants of small scalar matrices.
//!
//! The expansion coefficients come from determinants of size at most 5,
//! so cofactor expansion is entirely adequate.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Determinant by cofactor expansion along the first row.
pub fn det(m: &[Vec<Scalar>]) -> Result<Scalar> {
    let n = m.len();
    if n == 0 || m.iter().any(|row| row.len() != n) {
        return Err(Error::NotSquare);
    }
    Ok(det_inner(m))
}

fn det_inner(m: &[Vec<Scalar>]) -> Scalar {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    if n == 2 {
        return &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]);
    }
    let mut acc = Scalar::zero();
    for (j, pivot) in m[0].iter().enumerate() {
        if pivot.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Scalar>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = pivot * &det_inner(&minor);
        if j % 2 == 0 {
            acc = &acc + &term;
        } else {
            acc = &acc - &term;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::int(n)
    }

    #[test]
    fn small_determinants() {
        let id3 = vec![
            vec![s(1), s(0), s(0)],
            vec![s(0), s(1), s(0)],
            vec![s(0), s(0), s(1)],
        ];
        assert_eq!(det(&id3).unwrap(), s(1));
        let m = vec![vec![s(1), s(2)], vec![s(3), s(4)]];
        assert_eq!(det(&m).unwrap(), s(-2));
        let repeated = vec![
            vec![s(1), s(2), s(3)],
            vec![s(1), s(2), s(3)],
            vec![s(7), s(-1), s(5)],
        ];
        assert_eq!(det(&repeated).unwrap(), s(0));
    }

    #[test]
    fn shape_errors() {
        assert_eq!(det(&[]), Err(Error::NotSquare));
        assert_eq!(det(&[vec![s(1), s(2)]]), Err(Error::NotSquare));
    }
}
