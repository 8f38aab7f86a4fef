//! Univariate polynomials in the weight variable `t` with exact
//! arbitrary-precision integer coefficients.
//!
//! This is the ground ring for the whole crate: sequence values, matrix
//! entries and determinants are all elements of Z[t]. Coefficients are stored
//! ascending (index `d` holds the coefficient of `t^d`) with no trailing
//! zeros; the zero polynomial is the empty list.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros to keep the canonical form.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Poly::new(vec![BigInt::zero(), BigInt::one()])
    }

    /// `1 + t`, the factor every normalizer in this crate is a power of.
    pub fn one_plus_t() -> Self {
        Poly::from_ints(&[1, 1])
    }

    pub fn constant(c: BigInt) -> Self {
        Poly::new(vec![c])
    }

    /// `c * t^d`.
    pub fn monomial(c: BigInt, d: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = c;
        Poly { coeffs }
    }

    /// Convenience constructor for literals in tests and examples.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Exact division: returns `q` with `self == q * divisor`, or
    /// `NonExactDivision` if any intermediate coefficient division leaves a
    /// remainder or the final remainder is nonzero.
    ///
    /// Panics if `divisor` is zero; callers always divide by known-nonzero
    /// normalizers or pivots.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        let err = || Error::NonExactDivision {
            num: self.to_string(),
            den: divisor.to_string(),
        };
        let (deg_n, deg_d) = (self.coeffs.len() - 1, divisor.coeffs.len() - 1);
        if deg_n < deg_d {
            return Err(err());
        }
        let lead = divisor.leading_coeff().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); deg_n - deg_d + 1];
        for d in (0..quot.len()).rev() {
            let head = std::mem::take(&mut rem[d + deg_d]);
            if head.is_zero() {
                continue;
            }
            let (q, r) = num_integer::Integer::div_rem(&head, lead);
            if !r.is_zero() {
                return Err(err());
            }
            for (offset, dc) in divisor.coeffs.iter().enumerate().take(deg_d) {
                rem[d + offset] -= &q * dc;
            }
            quot[d] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(err());
        }
        Ok(Poly::new(quot))
    }

    /// Exact evaluation at an integer point (Horner).
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `self^e` by repeated squaring; `self^0 == 1`.
    pub fn pow(&self, e: usize) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn scale(&self, factor: &BigInt) -> Poly {
        if factor.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Coefficient array as a JSON value, ascending. Coefficients outside the
    /// 53-bit safe-integer range are rendered as decimal strings so JSON
    /// consumers never see a rounded value.
    pub fn coeffs_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(bigint_json).collect())
    }
}

/// A single exact integer as JSON: a number while it fits in the 53-bit safe
/// range, a decimal string beyond that.
pub fn bigint_json(v: &BigInt) -> serde_json::Value {
    const SAFE: i64 = (1 << 53) - 1;
    if v.abs() <= BigInt::from(SAFE) {
        serde_json::Value::from(v.to_i64().expect("within safe range"))
    } else {
        serde_json::Value::from(v.to_string())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::new(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        Poly::new(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        // No trailing zero possible: leading coefficients are nonzero and
        // BigInt products of nonzeros are nonzero.
        Poly { coeffs }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                $trait::$method(self, &rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add::add, Sub::sub, Mul::mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |acc, p| &acc + &p)
    }
}

impl fmt::Display for Poly {
    /// Human-readable form, descending: `t^2 + 3*t + 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            match (d, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{d}")?,
                (_, false) => write!(f, "{mag}*t^{d}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_ints(coeffs)
    }

    #[test]
    fn add_examples() {
        assert_eq!(&p(&[1, 1]) + &p(&[1, 1]), p(&[2, 2]));
        let q = p(&[7, 0, -3]);
        assert_eq!(&q + &Poly::zero(), q);
        // cancellation restores canonical form
        let sum = &p(&[2, 3, 1]) + &p(&[0, 0, -1]);
        assert_eq!(sum, p(&[2, 3]));
        assert_eq!(sum.degree(), Some(1));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p(&[1, 1]) * &p(&[2, 1]), p(&[2, 3, 1]));
        assert_eq!(&p(&[4, 2]) * &Poly::zero(), Poly::zero());
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1]), p(&[1, 2, 1]));
    }

    #[test]
    fn div_exact_examples() {
        assert_eq!(p(&[2, 3, 1]).div_exact(&p(&[1, 1])).unwrap(), p(&[2, 1]));
        let q = p(&[5, -2, 7]);
        assert_eq!(q.div_exact(&Poly::one()).unwrap(), q);
        // degree-0 remainder 1 forces failure
        assert!(matches!(
            p(&[1, 1]).div_exact(&p(&[2, 1])),
            Err(Error::NonExactDivision { .. })
        ));
    }

    #[test]
    fn div_exact_rejects_non_integer_quotient() {
        // (2t) / (3t): degree works out but the coefficient division does not
        assert!(p(&[0, 2]).div_exact(&p(&[0, 3])).is_err());
        // zero divided by anything nonzero is zero
        assert_eq!(Poly::zero().div_exact(&p(&[2, 1])).unwrap(), Poly::zero());
    }

    #[test]
    fn eval_examples() {
        let one = BigInt::from(1);
        assert_eq!(p(&[1, 1]).eval(&one), BigInt::from(2));
        assert_eq!(Poly::zero().eval(&BigInt::from(17)), BigInt::zero());
        assert_eq!(p(&[2, 3, 1]).eval(&one), BigInt::from(6));
        assert_eq!(p(&[2, 3, 1]).eval(&BigInt::from(-3)), BigInt::from(2));
    }

    #[test]
    fn pow_examples() {
        let lt = Poly::one_plus_t();
        assert_eq!(lt.pow(0), Poly::one());
        assert_eq!(lt.pow(1), lt);
        assert_eq!(lt.pow(3), p(&[1, 3, 3, 1]));
    }

    #[test]
    fn zero_degree_sentinel() {
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(Poly::one().degree(), Some(0));
        assert_eq!(Poly::new(vec![BigInt::zero(); 4]), Poly::zero());
    }

    #[test]
    fn display_pretty_form() {
        assert_eq!(p(&[2, 3, 1]).to_string(), "t^2 + 3*t + 2");
        assert_eq!(p(&[0, -1, 2]).to_string(), "2*t^2 - t");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(p(&[-5]).to_string(), "-5");
    }

    #[test]
    fn json_switches_to_strings_past_safe_range() {
        let big = BigInt::from(1i64 << 53);
        let poly = Poly::new(vec![BigInt::from(3), big.clone()]);
        let json = poly.coeffs_json();
        assert_eq!(json[0], serde_json::json!(3));
        assert_eq!(json[1], serde_json::json!(big.to_string()));
    }
}
