use braidalg::scalar::{q_binomial, q_integer, LaurentPoly};
use braidalg::Scalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i32..=3, -4i64..=4), 0..4).prop_map(|terms| {
        LaurentPoly::from_terms(
            terms
                .into_iter()
                .map(|(e, c)| (e, BigRational::from_integer(BigInt::from(c)))),
        )
    })
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (laurent(), laurent()).prop_map(|(n, d)| {
        if d.is_zero() {
            Scalar::from_laurent(n)
        } else {
            Scalar::from_fraction(n, d).unwrap()
        }
    })
}

fn binom(n: i64, r: i64) -> i64 {
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

proptest! {
    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.add_ref(&b), b.add_ref(&a));
        prop_assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
        prop_assert_eq!(a.add_ref(&b).add_ref(&c), a.add_ref(&b.add_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b.add_ref(&c)), a.mul_ref(&b).add_ref(&a.mul_ref(&c)));
        prop_assert!(a.sub_ref(&a).is_zero());
        if !a.is_zero() {
            prop_assert!(a.mul_ref(&a.inv().unwrap()).is_one());
            prop_assert_eq!(b.mul_ref(&a).div(&a).unwrap(), b.clone());
        }
    }

    #[test]
    fn display_round_trips(a in scalar()) {
        prop_assert_eq!(Scalar::parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn q_integer_closed_form(n in 0i64..=12) {
        let q = Scalar::q();
        let closed = Scalar::q_pow(n as i32)
            .sub_ref(&Scalar::q_pow(-(n as i32)))
            .div(&q.sub_ref(&Scalar::q_pow(-1)))
            .unwrap();
        prop_assert_eq!(q_integer(n, &q).unwrap(), closed);
    }

    #[test]
    fn q_binomial_symmetry(n in 0i64..=10, r in 0i64..=10) {
        prop_assume!(r <= n);
        let q = Scalar::q();
        let b = q_binomial(n, r, &q).unwrap();
        prop_assert!(b.is_laurent());
        prop_assert_eq!(&b, &q_binomial(n, n - r, &q).unwrap());
        let one = BigRational::from_integer(BigInt::from(1));
        prop_assert_eq!(b.eval(&one).unwrap(), BigRational::from_integer(BigInt::from(binom(n, r))));
    }

    #[test]
    fn q_binomial_pascal(n in 1i64..=8, r in 1i64..=8) {
        prop_assume!(r < n);
        let q = Scalar::q();
        let b = |n, r| q_binomial(n, r, &q).unwrap();
        let rhs = Scalar::q_pow(-(r as i32)).mul_ref(&b(n - 1, r))
            .add_ref(&Scalar::q_pow((n - r) as i32).mul_ref(&b(n - 1, r - 1)));
        prop_assert_eq!(b(n, r), rhs);
    }
}
