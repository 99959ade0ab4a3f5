//! Property tests for the exact-arithmetic substrate.

use proptest::prelude::*;

use askey_core::det::det;
use askey_core::laurent::{LaurentPoly, Var};
use askey_core::scalar::Scalar;

fn arb_scalar() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=8, -20i64..=20, 1i64..=8)
        .prop_map(|(p, q, r, s)| Scalar::gaussian(p, q, r, s))
}

fn arb_nonzero_scalar() -> impl Strategy<Value = Scalar> {
    arb_scalar().prop_filter("nonzero", |s| !s.is_zero())
}

fn arb_poly(var: Var) -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec((-6i64..=6, arb_scalar()), 0..6)
        .prop_map(move |terms| LaurentPoly::from_terms(var, &terms))
}

fn arb_nonzero_poly(var: Var) -> impl Strategy<Value = LaurentPoly> {
    arb_poly(var).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(a in arb_poly(Var::Z), b in arb_poly(Var::Z), c in arb_poly(Var::Z)) {
        let ab_c = (&(&a + &b) + &c).clone();
        let a_bc = (&a + &(&b + &c)).clone();
        prop_assert_eq!(&ab_c, &a_bc);
        prop_assert_eq!(&(&a * &b), &(&b * &a));
        let dist_l = &a * &(&b + &c);
        let dist_r = &(&a * &b) + &(&a * &c);
        prop_assert_eq!(&dist_l, &dist_r);
        let assoc_l = &(&a * &b) * &c;
        let assoc_r = &a * &(&b * &c);
        prop_assert_eq!(assoc_l, assoc_r);
    }

    #[test]
    fn exact_division_inverts_multiplication(
        p in arb_poly(Var::Z),
        d in arb_nonzero_poly(Var::Z),
    ) {
        let product = &p * &d;
        prop_assert_eq!(product.exact_divide(&d).unwrap(), p);
    }

    #[test]
    fn star_is_a_twisted_ring_homomorphism(
        p in arb_poly(Var::Z),
        r in arb_poly(Var::Z),
        px in arb_poly(Var::X),
        rx in arb_poly(Var::X),
    ) {
        let lhs_z = (&p * &r).star_conjugate();
        let rhs_z = &p.star_conjugate() * &r.star_conjugate();
        prop_assert_eq!(lhs_z, rhs_z);
        prop_assert_eq!(p.star_conjugate().star_conjugate(), p);
        let lhs_x = (&px * &rx).star_conjugate();
        let rhs_x = &px.star_conjugate() * &rx.star_conjugate();
        prop_assert_eq!(lhs_x, rhs_x);
    }

    #[test]
    fn scale_substitution_composes(
        p in arb_poly(Var::Z),
        c1 in arb_nonzero_scalar(),
        c2 in arb_nonzero_scalar(),
    ) {
        let joint = p.substitute_scale(&(&c1 * &c2)).unwrap();
        let staged = p.substitute_scale(&c1).unwrap().substitute_scale(&c2).unwrap();
        prop_assert_eq!(joint, staged);
    }

    #[test]
    fn shift_substitution_composes(
        p in proptest::collection::vec((0i64..=5, arb_scalar()), 0..5)
            .prop_map(|t| LaurentPoly::from_terms(Var::X, &t)),
        c1 in arb_scalar(),
        c2 in arb_scalar(),
    ) {
        let joint = p.substitute_shift(&(&c1 + &c2)).unwrap();
        let staged = p.substitute_shift(&c1).unwrap().substitute_shift(&c2).unwrap();
        prop_assert_eq!(joint, staged);
    }

    #[test]
    fn determinant_is_multilinear_and_alternating(
        r1 in proptest::collection::vec(arb_scalar(), 3),
        r2 in proptest::collection::vec(arb_scalar(), 3),
        r3 in proptest::collection::vec(arb_scalar(), 3),
        extra in proptest::collection::vec(arb_scalar(), 3),
        factor in arb_scalar(),
    ) {
        // alternating: repeated row → 0
        let repeated = vec![r1.clone(), r1.clone(), r3.clone()];
        prop_assert!(det(&repeated).unwrap().is_zero());

        // swap changes sign
        let base = vec![r1.clone(), r2.clone(), r3.clone()];
        let swapped = vec![r2.clone(), r1.clone(), r3.clone()];
        prop_assert_eq!(det(&base).unwrap(), -det(&swapped).unwrap());

        // linear in the first row: det(c·r1 + extra, …) = c·det(r1, …) + det(extra, …)
        let combined: Vec<Scalar> = r1
            .iter()
            .zip(&extra)
            .map(|(a, b)| &(&factor * a) + b)
            .collect();
        let lhs = det(&[combined, r2.clone(), r3.clone()]).unwrap();
        let rhs = &(&factor * &det(&base).unwrap())
            + &det(&[extra, r2, r3]).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn scalar_field_properties(a in arb_nonzero_scalar(), b in arb_scalar()) {
        prop_assert_eq!(&(&a * &a.inv().unwrap()), &Scalar::one());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!(a.conj().conj(), a);
    }
}
