//! Exact arithmetic in Q(q), the field of rational functions in the
//! deformation parameter with rational coefficients.

mod laurent;
mod qnum;
mod upoly;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::expr;

pub(crate) use laurent::fmt_rational;
pub use laurent::LaurentPoly;
pub use qnum::{q_binomial, q_factorial, q_integer};
pub use upoly::UniPoly;

use laurent::{dense_divrem, dense_gcd};

/// An element of Q(q) in canonical form.
///
/// The denominator is an ordinary polynomial in `q` with nonzero constant
/// term, coprime integer content and positive leading coefficient, and it
/// shares no factor with the numerator. A denominator of `1` is stored as
/// `None`, so the common case of Laurent polynomials never allocates one.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    num: LaurentPoly,
    den: Option<LaurentPoly>,
}

impl Scalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn q_pow(k: i32) -> Self {
        Self::from_laurent(LaurentPoly::q_pow(k))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_laurent(LaurentPoly::from_int(n))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_laurent(LaurentPoly::monomial(c, 0))
    }

    pub fn from_laurent(num: LaurentPoly) -> Self {
        Self { num, den: None }
    }

    /// Build `num / den` and bring it to canonical form.
    pub fn from_fraction(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(canonicalize(num, den))
    }

    pub fn parse(text: &str) -> Result<Self> {
        expr::parse(text)?.eval_scalar()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> LaurentPoly {
        self.den.clone().unwrap_or_else(LaurentPoly::one)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_none() && self.num.is_one()
    }

    /// True when the value is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_none()
    }

    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        if self.den.is_none() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.den.is_none() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(canonicalize(self.denominator(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if other.den.is_none() && other.num.is_monomial() {
            // cheap path: dividing by c q^k
            let (e, c) = other.num.terms().next().unwrap();
            let num = self.num.shift(-e).scale(&c.recip());
            return Ok(Self {
                num,
                den: self.den.clone(),
            });
        }
        Ok(self.mul_ref(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = e as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            base = base.mul_ref(&base);
            k >>= 1;
        }
        Ok(acc)
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        match (&self.den, &other.den) {
            (None, None) => Self::from_laurent(self.num.add(&other.num)),
            (Some(a), Some(b)) if a == b => canonicalize(self.num.add(&other.num), a.clone()),
            _ => {
                let (bd, db) = (other.denominator(), self.denominator());
                canonicalize(self.num.mul(&bd).add(&other.num.mul(&db)), db.mul(&bd))
            }
        }
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn neg_ref(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        match (&self.den, &other.den) {
            (None, None) => Self::from_laurent(self.num.mul(&other.num)),
            _ => canonicalize(
                self.num.mul(&other.num),
                self.denominator().mul(&other.denominator()),
            ),
        }
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// `q -> q^k`; used to form `q_i = q^{d_i}` variants of q-numbers.
    pub fn substitute_power(&self, k: i32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument("substitution q -> q^0".into()));
        }
        Self::from_fraction(
            self.num.substitute_power(k),
            self.denominator().substitute_power(k),
        )
    }

    /// Exact substitution `q = q0`.
    pub fn eval(&self, q0: &BigRational) -> Result<BigRational> {
        let pole = || Error::Pole(fmt_rational(q0));
        let d = match &self.den {
            None => BigRational::one(),
            Some(d) => d.eval(q0).ok_or_else(pole)?,
        };
        if d.is_zero() {
            return Err(pole());
        }
        let n = self.num.eval(q0).ok_or_else(pole)?;
        Ok(n / d)
    }
}

fn canonicalize(num: LaurentPoly, den: LaurentPoly) -> Scalar {
    if num.is_zero() {
        return Scalar::zero();
    }
    let dlo = den.min_exp().expect("nonzero denominator");
    let mut den = den.shift(-dlo);
    let mut num = num.shift(-dlo);
    if let Some(c) = den.as_constant() {
        return Scalar::from_laurent(num.scale(&c.recip()));
    }
    // remove common factors; den has nonzero constant term so powers of q
    // never divide it
    let (nlo, ndense) = num.to_dense();
    let (_, ddense) = den.to_dense();
    let g = dense_gcd(&ndense, &ddense);
    if g.len() > 1 {
        let (nq, nr) = dense_divrem(&ndense, &g);
        let (dq, dr) = dense_divrem(&ddense, &g);
        debug_assert!(nr.is_empty() && dr.is_empty());
        num = LaurentPoly::from_dense(nlo, &nq);
        den = LaurentPoly::from_dense(0, &dq);
    }
    // integer content normalisation of the denominator
    let mut lcm = BigInt::one();
    for (_, c) in den.terms() {
        lcm = lcm.lcm(c.denom());
    }
    let mut content = BigInt::zero();
    for (_, c) in den.terms() {
        let scaled = c * BigRational::from_integer(lcm.clone());
        content = content.gcd(&scaled.to_integer());
    }
    let mut factor = BigRational::new(lcm, content);
    if den.leading_coeff().unwrap().is_negative() {
        factor = -factor;
    }
    let den = den.scale(&factor);
    let num = num.scale(&factor);
    if den.is_one() {
        Scalar::from_laurent(num)
    } else {
        Scalar { num, den: Some(den) }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.den {
            None => write!(f, "{}", self.num),
            Some(d) => {
                if self.num.len() > 1 {
                    write!(f, "({})/({})", self.num, d)
                } else {
                    write!(f, "{}/({})", self.num, d)
                }
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

impl std::str::FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        self.add_ref(&rhs)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.add_ref(rhs)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        self.sub_ref(&rhs)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.sub_ref(rhs)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        self.mul_ref(&rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.mul_ref(rhs)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if rhs.is_zero() {
            return;
        }
        if self.den.is_none() && rhs.den.is_none() {
            for (e, c) in rhs.num.terms() {
                self.num.add_term(e, c.clone());
            }
        } else {
            *self = self.add_ref(rhs);
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        if rhs.is_zero() {
            return;
        }
        if self.den.is_none() && rhs.den.is_none() {
            for (e, c) in rhs.num.terms() {
                self.num.add_term(e, -c.clone());
            }
        } else {
            *self = self.sub_ref(rhs);
        }
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        let mut acc = Scalar::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}
