use super::Scalar;
use crate::error::{Error, Result};

/// Balanced q-integer `[n]_base = base^{n-1} + base^{n-3} + ... + base^{1-n}`.
///
/// Kept in expanded form so that evaluation at `q = 1` has no pole.
pub fn q_integer(n: i64, base: &Scalar) -> Result<Scalar> {
    if n < 0 {
        return Err(Error::InvalidArgument(format!("q-integer of negative n = {n}")));
    }
    let mut acc = Scalar::zero();
    for k in 0..n {
        acc += &base.pow(n - 1 - 2 * k)?;
    }
    Ok(acc)
}

pub fn q_factorial(n: i64, base: &Scalar) -> Result<Scalar> {
    if n < 0 {
        return Err(Error::InvalidArgument(format!("q-factorial of negative n = {n}")));
    }
    let mut acc = Scalar::one();
    for k in 1..=n {
        acc = acc.mul_ref(&q_integer(k, base)?);
    }
    Ok(acc)
}

/// `[n]! / ([r]! [n-r]!)` at the given base, fully cancelled.
pub fn q_binomial(n: i64, r: i64, base: &Scalar) -> Result<Scalar> {
    if r < 0 || r > n {
        return Err(Error::InvalidArgument(format!(
            "q-binomial index r = {r} outside 0..={n}"
        )));
    }
    let den = q_factorial(r, base)?.mul_ref(&q_factorial(n - r, base)?);
    q_factorial(n, base)?.div(&den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::One;

    fn s(t: &str) -> Scalar {
        Scalar::parse(t).unwrap()
    }

    #[test]
    fn small_q_integers() {
        let q = Scalar::q();
        assert_eq!(q_integer(0, &q).unwrap(), Scalar::zero());
        assert_eq!(q_integer(1, &q).unwrap(), Scalar::one());
        assert_eq!(q_integer(2, &q).unwrap(), s("q + q^-1"));
        let four = q_integer(4, &q).unwrap();
        assert_eq!(four, s("q^3+q+q^-1+q^-3"));
        assert_eq!(four, s("(q^4-q^-4)/(q-q^-1)"));
        assert!(q_integer(-1, &q).is_err());
    }

    #[test]
    fn base_q_squared() {
        let q2 = Scalar::q_pow(2);
        assert_eq!(q_integer(2, &q2).unwrap(), s("q^2 + q^-2"));
    }

    #[test]
    fn binomials() {
        let q = Scalar::q();
        for n in 0..6 {
            assert!(q_binomial(n, 0, &q).unwrap().is_one());
        }
        assert_eq!(q_binomial(2, 1, &q).unwrap(), s("q + q^-1"));
        let b42 = q_binomial(4, 2, &q).unwrap();
        assert!(b42.is_laurent());
        assert_eq!(b42, s("q^4+q^2+2+q^-2+q^-4"));
        assert!(q_binomial(3, 4, &q).is_err());
        assert!(q_binomial(3, -1, &q).is_err());
    }

    #[test]
    fn classical_limits() {
        let q = Scalar::q();
        let one = BigRational::one();
        assert_eq!(
            q_integer(3, &q).unwrap().eval(&one).unwrap(),
            BigRational::from_integer(3.into())
        );
        assert_eq!(
            q_binomial(4, 2, &q).unwrap().eval(&one).unwrap(),
            BigRational::from_integer(6.into())
        );
    }
}
