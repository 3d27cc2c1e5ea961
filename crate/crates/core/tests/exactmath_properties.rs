use proptest::prelude::*;

use gtskew::exactmath::{is_squarefree, Expansion, Field, Matrix, Poly, RatFn, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

fn poly(max_deg: usize) -> impl Strategy<Value = Poly<Rational>> {
    prop::collection::vec(rational(), 0..=max_deg + 1).prop_map(Poly::from_coeffs)
}

fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = Poly<Rational>> {
    poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfn() -> impl Strategy<Value = RatFn> {
    (poly(3), nonzero_poly(3)).prop_map(|(n, d)| RatFn::new(n, d).unwrap())
}

fn square_matrix(n: usize) -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(-4i64..=4, n * n)
        .prop_map(move |v| Matrix::from_fn(n, n, |i, j| Rational::from_i64(v[i * n + j])))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ratfn_field_axioms(a in ratfn(), b in ratfn(), c in ratfn()) {
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!(a.clone() - a.clone(), RatFn::zero());
        if !a.is_zero() {
            prop_assert!((a.clone() / a.clone()).is_one());
        }
    }

    #[test]
    fn division_with_remainder(a in poly(6), b in nonzero_poly(3)) {
        let (q, r) = a.div_rem(&b);
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn gcd_divides_and_is_maximal(a in nonzero_poly(3), b in nonzero_poly(3), c in nonzero_poly(2)) {
        let (ac, bc) = (&a * &c, &b * &c);
        let g = ac.gcd(&bc);
        prop_assert!(ac.exact_div(&g).is_some());
        prop_assert!(bc.exact_div(&g).is_some());
        prop_assert!(g.exact_div(&c.monic()).is_some());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in ratfn(), b in ratfn(), x in rational()) {
        if let (Some(fa), Some(fb)) = (a.try_eval(&x), b.try_eval(&x)) {
            prop_assert_eq!((a.clone() * b.clone()).try_eval(&x), Some(fa.clone() * fb.clone()));
            prop_assert_eq!((a + b).try_eval(&x), Some(fa + fb));
        }
    }

    #[test]
    fn series_are_multiplicative(a in ratfn(), b in ratfn()) {
        for dir in [Expansion::AtZero, Expansion::AtInfinity] {
            if let (Ok(sa), Ok(sb)) = (a.series(dir, 5), b.series(dir, 5)) {
                let prod = (a.clone() * b.clone()).series(dir, 5).unwrap();
                prop_assert_eq!(sa.mul(&sb).unwrap(), prod);
            }
        }
    }

    #[test]
    fn squares_are_not_squarefree(p in nonzero_poly(3), roots in prop::collection::btree_set(-6i64..=6, 1..4)) {
        if p.degree() > Some(0) {
            prop_assert!(!is_squarefree(&(&p * &p)).unwrap());
        }
        let distinct = roots
            .iter()
            .fold(Poly::one(), |acc, &r| &acc * &Poly::linear(Rational::from_i64(r)));
        prop_assert!(is_squarefree(&distinct).unwrap());
    }

    #[test]
    fn inverse_and_minimal_polynomial(a in square_matrix(3)) {
        if let Some(inv) = a.inverse() {
            prop_assert_eq!(&a * &inv, Matrix::identity(3));
        } else {
            prop_assert!(a.rank() < 3);
        }
        let mp = a.minimal_polynomial();
        let value = mp
            .coeffs()
            .iter()
            .rev()
            .fold(Matrix::zeros(3, 3), |acc: Matrix<Rational>, c| &(&acc * &a) + &Matrix::scalar(3, c.clone()));
        prop_assert!(value.is_zero());
        prop_assert!(mp.degree() <= Some(3));
    }
}
