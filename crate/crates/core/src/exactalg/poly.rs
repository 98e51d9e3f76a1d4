use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A univariate polynomial in `t` with exact rational coefficients.
///
/// Coefficients are stored in ascending order of powers and the vector never
/// ends in a zero, so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Poly::constant(BigRational::from_integer(BigInt::from(c)))
    }

    /// `c * t^e`.
    pub fn monomial(c: BigRational, e: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); e];
        coeffs.push(c);
        Poly::from_coeffs(coeffs)
    }

    /// `sign * t^e` with `sign` an integer, the common shape of presentation entries.
    pub fn signed_power(sign: i64, e: usize) -> Self {
        Poly::monomial(BigRational::from_integer(BigInt::from(sign)), e)
    }

    pub fn t() -> Self {
        Poly::signed_power(1, 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Builds a polynomial from small integer coefficients, lowest power first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
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

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Constant term, i.e. the value at `t = 0`.
    pub fn constant_term(&self) -> BigRational {
        self.coeffs
            .first()
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides by the leading coefficient; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            None => Poly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Euclidean division, `self = q * d + r` with `deg r < deg d`.
    ///
    /// Panics if `d` is zero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lc_inv = d.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if sd < dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); sd - dd + 1];
        for i in (0..=sd - dd).rev() {
            let c = &rem[i + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) | (None, Some(a)) => a.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
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

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !abs.is_one() || e == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_has_no_degree() {
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(Poly::from_ints(&[0, 0, 0]), Poly::zero());
        assert_eq!(Poly::from_ints(&[3]).degree(), Some(0));
    }

    #[test]
    fn division_round_trips() {
        let a = Poly::from_ints(&[-1, 0, 0, 2, 5]);
        let d = Poly::from_ints(&[1, 3]);
        let (q, r) = a.div_rem(&d);
        assert_eq!(&(&q * &d) + &r, a);
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn gcd_is_monic() {
        // (t - 1)(t + 2) and (t - 1)(3t)
        let a = &Poly::from_ints(&[-1, 1]) * &Poly::from_ints(&[2, 1]);
        let b = &Poly::from_ints(&[-1, 1]) * &Poly::from_ints(&[0, 3]);
        assert_eq!(Poly::gcd(&a, &b), Poly::from_ints(&[-1, 1]));
        assert_eq!(Poly::gcd(&Poly::zero(), &Poly::zero()), Poly::zero());
    }

    #[test]
    fn display() {
        assert_eq!(Poly::from_ints(&[1, 0, -2]).to_string(), "-2t^2 + 1");
        assert_eq!(Poly::t().to_string(), "t");
    }
}
