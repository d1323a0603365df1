use std::fmt;

use super::Scalar;
use crate::error::{Error, Result};
use crate::expr;

/// A univariate polynomial in `x` with coefficients in Q(q); index = power.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Scalar) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn x() -> Self {
        Self::from_coeffs(vec![Scalar::zero(), Scalar::one()])
    }

    /// `x - root`.
    pub fn linear(root: Scalar) -> Self {
        Self::from_coeffs(vec![-root, Scalar::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Parse an expression in `x` (and `q`); `x` may not appear in a divisor.
    pub fn parse(text: &str) -> Result<Self> {
        expr::parse(text)?.eval_unipoly()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|i| self.coeff(i).add_ref(&other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..n).map(|i| self.coeff(i).sub_ref(&other.coeff(i))).collect())
    }

    pub fn neg(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(Scalar::neg_ref).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &a.mul_ref(b);
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(Scalar::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn monic(&self) -> Result<Self> {
        let lead = self.coeffs.last().ok_or(Error::DivisionByZero)?;
        let inv = lead.inv()?;
        Ok(self.scale(&inv))
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x).add_ref(c);
        }
        acc
    }

    /// Exact division by `x - root`; `None` when `root` is not a root.
    pub fn divide_linear(&self, root: &Scalar) -> Option<Self> {
        let d = self.degree()?;
        if d == 0 {
            return None;
        }
        // synthetic division
        let mut quot = vec![Scalar::zero(); d];
        let mut carry = Scalar::zero();
        for k in (0..=d).rev() {
            let v = self.coeffs[k].add_ref(&carry.mul_ref(root));
            if k == 0 {
                return if v.is_zero() {
                    Some(Self::from_coeffs(quot))
                } else {
                    None
                };
            }
            quot[k - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// Factor into linear factors `x - c q^k` with `c = ±1` and `|k| <= 6`
    /// when possible; returns the roots in the order they were split off.
    pub fn split_into_signed_q_powers(&self) -> Option<Vec<Scalar>> {
        let mut rest = self.monic().ok()?;
        let mut roots = Vec::new();
        let candidates: Vec<Scalar> = (-6..=6)
            .flat_map(|k| [Scalar::q_pow(k), Scalar::q_pow(k).neg_ref()])
            .collect();
        while rest.degree()? > 0 {
            let mut found = false;
            for c in &candidates {
                if let Some(qt) = rest.divide_linear(c) {
                    roots.push(c.clone());
                    rest = qt;
                    found = true;
                    break;
                }
            }
            if !found {
                return None;
            }
        }
        Some(roots)
    }

    /// Factored display `(x - r1)(x - r2)...` when the polynomial splits
    /// over signed powers of `q`.
    pub fn factored_display(&self) -> Option<String> {
        let mut roots = self.split_into_signed_q_powers()?;
        if roots.is_empty() {
            return None;
        }
        roots.sort_by_key(|r| std::cmp::Reverse(r.to_string()));
        let lead = self.coeffs.last()?;
        let mut out = String::new();
        if !lead.is_one() {
            out.push_str(&format!("({lead})"));
        }
        for r in roots {
            let neg = r.neg_ref();
            let s = neg.to_string();
            if let Some(stripped) = s.strip_prefix('-') {
                out.push_str(&format!("(x - {stripped})"));
            } else {
                out.push_str(&format!("(x + {s})"));
            }
        }
        Some(out)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let var = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            let cs = c.to_string();
            let simple = c.numerator().len() == 1 && c.is_laurent();
            let (neg, body) = match cs.strip_prefix('-') {
                Some(rest) if simple => (true, rest.to_string()),
                _ => (false, cs.clone()),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            if var.is_empty() {
                if simple {
                    write!(f, "{body}")?;
                } else {
                    write!(f, "({body})")?;
                }
            } else if body == "1" {
                write!(f, "{var}")?;
            } else if simple {
                write!(f, "{body}*{var}")?;
            } else {
                write!(f, "({body})*{var}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p = UniPoly::parse("x - q").unwrap();
        assert_eq!(p.to_string(), "x - q");
        let h = UniPoly::parse("(x - q)(x + q^-1)").unwrap();
        assert_eq!(h, UniPoly::parse(&h.to_string()).unwrap());
        assert_eq!(h.coeff(0), Scalar::from_int(-1));
    }

    #[test]
    fn factors_hecke_polynomial() {
        let h = UniPoly::parse("(x - q)(x + q^-1)").unwrap();
        assert_eq!(h.factored_display().unwrap(), "(x - q)(x + q^-1)");
        let flip = UniPoly::parse("x^2 - 1").unwrap();
        assert_eq!(flip.factored_display().unwrap(), "(x - 1)(x + 1)");
    }

    #[test]
    fn x_in_divisor_rejected() {
        assert!(UniPoly::parse("1/x").is_err());
    }
}
