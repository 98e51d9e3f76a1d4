use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type Monomial = Vec<u16>;

/// Integer polynomial in the initial cluster variables, terms keyed by
/// exponent vector (lexicographic order, so the last key leads).
pub type Numerator = BTreeMap<Monomial, BigInt>;

/// `numerator / x^denominator` with no cancellable variable left.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentExpr {
    num: Numerator,
    den: Monomial,
}

fn mono_mul(a: &[u16], b: &[u16]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn mono_divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn poly_mul(a: &Numerator, b: &Numerator) -> Numerator {
    let mut out = Numerator::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m = mono_mul(ma, mb);
            let e = out.entry(m).or_insert_with(BigInt::zero);
            *e += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn poly_add_assign(a: &mut Numerator, b: &Numerator) {
    for (m, c) in b {
        let e = a.entry(m.clone()).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            a.remove(m);
        }
    }
}

fn poly_shift(a: &Numerator, by: &[u16]) -> Numerator {
    a.iter()
        .map(|(m, c)| (mono_mul(m, by), c.clone()))
        .collect()
}

/// Exact division `p / d`; fails unless `d` divides `p`.
fn poly_div_exact(p: &Numerator, d: &Numerator) -> Result<Numerator> {
    let (lm, lc) = d
        .last_key_value()
        .ok_or_else(|| Error::Arithmetic("division by zero".into()))?;
    let mut rem = p.clone();
    let mut quot = Numerator::new();
    while let Some((rm, rc)) = rem.last_key_value() {
        if !mono_divides(lm, rm) {
            return Err(Error::Arithmetic("leading monomial not divisible".into()));
        }
        let (qc, r) = rc.div_rem(lc);
        if !r.is_zero() {
            return Err(Error::Arithmetic(
                "leading coefficient not divisible".into(),
            ));
        }
        let qm: Monomial = rm.iter().zip(lm).map(|(a, b)| a - b).collect();
        for (dm, dc) in d {
            let m = mono_mul(&qm, dm);
            let e = rem.entry(m.clone()).or_insert_with(BigInt::zero);
            *e -= &qc * dc;
            if e.is_zero() {
                rem.remove(&m);
            }
        }
        quot.insert(qm, qc);
    }
    Ok(quot)
}

/// Componentwise minimum exponent over all terms.
fn monomial_content(p: &Numerator, nvars: usize) -> Monomial {
    let mut it = p.keys();
    let Some(first) = it.next() else {
        return vec![0; nvars];
    };
    let mut g = first.clone();
    for m in it {
        for (a, b) in g.iter_mut().zip(m) {
            *a = (*a).min(*b);
        }
    }
    g
}

pub(crate) const P61: u64 = (1 << 61) - 1;

pub(crate) fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P61 as u128) as u64
}

pub(crate) fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

pub(crate) fn invmod(a: u64) -> u64 {
    powmod(a, P61 - 2)
}

impl LaurentExpr {
    pub fn one(nvars: usize) -> Self {
        let mut num = Numerator::new();
        num.insert(vec![0; nvars], BigInt::one());
        LaurentExpr {
            num,
            den: vec![0; nvars],
        }
    }

    /// The initial variable `x_i`.
    pub fn variable(i: usize, nvars: usize) -> Self {
        let mut m = vec![0; nvars];
        m[i] = 1;
        let mut num = Numerator::new();
        num.insert(m, BigInt::one());
        LaurentExpr {
            num,
            den: vec![0; nvars],
        }
    }

    pub fn nvars(&self) -> usize {
        self.den.len()
    }

    pub fn numerator(&self) -> &Numerator {
        &self.num
    }

    pub fn denominator(&self) -> &[u16] {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// True if the denominator is trivial.
    pub fn is_polynomial(&self) -> bool {
        self.den.iter().all(|&e| e == 0)
    }

    fn reduced(mut self) -> Self {
        let g = monomial_content(&self.num, self.nvars());
        let cut: Monomial = g.iter().zip(&self.den).map(|(a, b)| *a.min(b)).collect();
        if cut.iter().any(|&c| c > 0) {
            self.num = self
                .num
                .into_iter()
                .map(|(m, c)| (m.iter().zip(&cut).map(|(a, b)| a - b).collect(), c))
                .collect();
            for (d, c) in self.den.iter_mut().zip(&cut) {
                *d -= c;
            }
        }
        self
    }

    pub fn mul(&self, other: &LaurentExpr) -> LaurentExpr {
        LaurentExpr {
            num: poly_mul(&self.num, &other.num),
            den: mono_mul(&self.den, &other.den),
        }
        .reduced()
    }

    pub fn pow(&self, e: u32) -> LaurentExpr {
        (0..e).fold(LaurentExpr::one(self.nvars()), |acc, _| acc.mul(self))
    }

    pub fn add(&self, other: &LaurentExpr) -> LaurentExpr {
        let den: Monomial = self
            .den
            .iter()
            .zip(&other.den)
            .map(|(a, b)| *a.max(b))
            .collect();
        let lift =
            |e: &LaurentExpr| -> Monomial { den.iter().zip(&e.den).map(|(d, x)| d - x).collect() };
        let mut num = poly_shift(&self.num, &lift(self));
        poly_add_assign(&mut num, &poly_shift(&other.num, &lift(other)));
        LaurentExpr { num, den }.reduced()
    }

    /// Exact quotient; an error means the result is not a Laurent polynomial.
    pub fn div(&self, d: &LaurentExpr) -> Result<LaurentExpr> {
        let g = monomial_content(&d.num, d.nvars());
        let stripped: Numerator = d
            .num
            .iter()
            .map(|(m, c)| (m.iter().zip(&g).map(|(a, b)| a - b).collect(), c.clone()))
            .collect();
        let num = poly_div_exact(&poly_shift(&self.num, &d.den), &stripped)?;
        let den = mono_mul(&self.den, &g);
        Ok(LaurentExpr { num, den }.reduced())
    }

    /// Value mod `2^61 - 1` at the given point.
    pub fn eval_mod(&self, point: &[u64]) -> Result<u64> {
        let mut acc = 0u64;
        for (m, c) in &self.num {
            let cm = c
                .mod_floor(&BigInt::from(P61))
                .to_u64()
                .expect("reduced mod p");
            let mut t = cm;
            for (x, &e) in point.iter().zip(m) {
                if e > 0 {
                    t = mulmod(t, powmod(*x, e as u64));
                }
            }
            acc = (acc + t) % P61;
        }
        let mut d = 1u64;
        for (x, &e) in point.iter().zip(&self.den) {
            if e > 0 {
                d = mulmod(d, powmod(*x, e as u64));
            }
        }
        if d == 0 {
            return Err(Error::Arithmetic(
                "denominator vanishes at the sample point".into(),
            ));
        }
        Ok(mulmod(acc, invmod(d)))
    }

    /// The exponent vector of every term as a Laurent monomial (numerator minus denominator).
    pub fn laurent_monomials(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        self.num.keys().map(|m| {
            m.iter()
                .zip(&self.den)
                .map(|(&a, &b)| a as i64 - b as i64)
                .collect()
        })
    }

    pub fn all_coefficients_positive(&self) -> bool {
        self.num.values().all(Signed::is_positive)
    }

    pub fn term_count(&self) -> usize {
        self.num.len()
    }

    /// Renders with the given variable names.
    pub fn display_with(&self, names: &[String]) -> String {
        let mono = |m: &[u16]| -> String {
            m.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        names[i].clone()
                    } else {
                        format!("{}^{e}", names[i])
                    }
                })
                .collect::<Vec<_>>()
                .join("*")
        };
        let terms: Vec<String> = self
            .num
            .iter()
            .rev()
            .map(|(m, c)| {
                let mm = mono(m);
                match (c.is_one(), mm.is_empty()) {
                    (_, true) => c.to_string(),
                    (true, false) => mm,
                    (false, false) => format!("{c}*{mm}"),
                }
            })
            .collect();
        let num = if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ").replace("+ -", "- ")
        };
        if self.is_polynomial() {
            num
        } else {
            let paren = if terms.len() > 1 {
                format!("({num})")
            } else {
                num
            };
            format!("{paren}/({})", mono(&self.den))
        }
    }
}

impl fmt::Display for LaurentExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars()).map(|i| format!("x{i}")).collect();
        write!(f, "{}", self.display_with(&names))
    }
}

impl fmt::Debug for LaurentExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentExpr({self})")
    }
}

impl Serialize for LaurentExpr {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<(&Monomial, String)> =
            self.num.iter().map(|(m, c)| (m, c.to_string())).collect();
        let mut st = s.serialize_struct("LaurentExpr", 2)?;
        st.serialize_field("numerator", &terms)?;
        st.serialize_field("denominator", &self.den)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> LaurentExpr {
        LaurentExpr::variable(i, 4)
    }

    #[test]
    fn exchange_a1() {
        // x0 * x0' = x1 x3 + x2
        let rhs = x(1).mul(&x(3)).add(&x(2));
        let new = rhs.div(&x(0)).unwrap();
        assert_eq!(new.to_string(), "(x2*x4 + x3)/(x1)");
        // mutating back recovers x0
        assert_eq!(rhs.div(&new).unwrap(), x(0));
    }

    #[test]
    fn cancellation_and_failure() {
        let a = x(0).mul(&x(1)).add(&x(0).mul(&x(2)));
        assert_eq!(a.div(&x(0)).unwrap(), x(1).add(&x(2)));
        let b = x(1).add(&x(2));
        assert_eq!(a.div(&b).unwrap(), x(0));
        assert!(x(1).div(&x(1).add(&x(2))).is_err());
    }

    #[test]
    fn fingerprints_agree_with_arithmetic() {
        let pt = [3, 5, 7, 11];
        let e = x(1).mul(&x(3)).add(&x(2)).div(&x(0)).unwrap();
        let direct = mulmod((5 * 11 + 7) % P61, invmod(3));
        assert_eq!(e.eval_mod(&pt).unwrap(), direct);
    }
}
