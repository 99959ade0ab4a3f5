//! Complex gamma function via the Lanczos approximation (g = 7, 9 terms),
//! with the reflection formula for the left half plane.

use num_complex::Complex64;
use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

pub fn gamma(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // Γ(z)Γ(1-z) = π/sin(πz)
        let pi_z = Complex64::new(PI, 0.0) * z;
        return Complex64::new(PI, 0.0) / (pi_z.sin() * gamma(Complex64::new(1.0, 0.0) - z));
    }
    let z = z - 1.0;
    let mut acc = Complex64::new(LANCZOS_COEFFS[0], 0.0);
    for (i, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += Complex64::new(*c, 0.0) / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powc(z + 0.5) * (-t).exp() * acc
}

/// `|Γ(a+ix)|²` for real `a, x`.
pub fn gamma_abs_sq(a: f64, x: f64) -> f64 {
    gamma(Complex64::new(a, x)).norm_sqr()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_values() {
        assert!((gamma(Complex64::new(5.0, 0.0)).re - 24.0).abs() < 1e-10);
        let half = gamma(Complex64::new(0.5, 0.0)).re;
        assert!((half - PI.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn recurrence_on_the_line() {
        // Γ(z+1) = zΓ(z) at z = 1 + 2i
        let z = Complex64::new(1.0, 2.0);
        let lhs = gamma(z + 1.0);
        let rhs = z * gamma(z);
        assert!((lhs - rhs).norm() < 1e-12 * rhs.norm());
    }

    #[test]
    fn modulus_identity() {
        // |Γ(1+ix)|² = πx/sinh(πx)
        let x = 0.7;
        let expect = PI * x / (PI * x).sinh();
        assert!((gamma_abs_sq(1.0, x) - expect).abs() < 1e-12);
    }
}
