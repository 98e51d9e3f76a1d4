//! The lattice `Z^n(k) = { x in Z^n : k | sum x }` with grading `delta`,
//! quadratic form `q`, the bases `alpha_j`, `beta_I` and root enumeration.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::profiles::Profile;
use crate::subsets::{cyclic_interval, KSubset};

/// An element of `Z^n(k)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    k: usize,
    x: Vec<i64>,
}

impl Weight {
    pub fn new(k: usize, x: Vec<i64>) -> Result<Self> {
        let sum: i64 = x.iter().sum();
        if k == 0 || sum.rem_euclid(k as i64) != 0 {
            return Err(Error::NotInLattice { sum, k });
        }
        Ok(Weight { k, x })
    }

    pub fn zero(k: usize, n: usize) -> Self {
        Weight { k, x: vec![0; n] }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.x
    }

    pub fn delta(&self) -> i64 {
        self.x.iter().sum::<i64>() / self.k as i64
    }

    pub fn qform(&self) -> i64 {
        self.x.iter().map(|v| v * v).sum::<i64>() + (2 - self.k as i64) * self.delta().pow(2)
    }

    /// The symmetric bilinear form with `bilinear(x, x) = q(x)`.
    pub fn bilinear(&self, other: &Weight) -> i64 {
        let dot: i64 = self.x.iter().zip(&other.x).map(|(a, b)| a * b).sum();
        dot + (2 - self.k as i64) * self.delta() * other.delta()
    }

    fn zip_with(&self, other: &Weight, f: impl Fn(i64, i64) -> i64) -> Weight {
        assert_eq!(
            (self.k, self.n()),
            (other.k, other.n()),
            "weights from different lattices"
        );
        Weight {
            k: self.k,
            x: self
                .x
                .iter()
                .zip(&other.x)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, s: i64) -> Weight {
        Weight {
            k: self.k,
            x: self.x.iter().map(|v| v * s).collect(),
        }
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scale(-1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.x.iter().join(","))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight{self}/k={}", self.k)
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.x.serialize(s)
    }
}

/// `beta_I = sum_{i in I} e_i`.
pub fn beta(i: &KSubset) -> Weight {
    let mut x = vec![0; i.n()];
    for &e in i.elements() {
        x[e - 1] = 1;
    }
    Weight { k: i.k(), x }
}

/// `alpha_j = e_{j+1} - e_j` for `1 <= j <= n-1`.
pub fn alpha(j: usize, k: usize, n: usize) -> Result<Weight> {
    if j == 0 || j >= n {
        return Err(Error::OutOfRange {
            value: j as i64,
            lo: 1,
            hi: n as i64 - 1,
        });
    }
    let mut x = vec![0; n];
    x[j - 1] = -1;
    x[j] = 1;
    Ok(Weight { k, x })
}

/// `beta` of the cyclic interval `[n] = {1..k}`.
pub fn beta_base(k: usize, n: usize) -> Weight {
    beta(&cyclic_interval(n, k, n).expect("n is a valid index"))
}

/// Coordinates in the basis `alpha_1, ..., alpha_{n-1}, beta_{[n]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootBasisCoords {
    pub a: Vec<i64>,
    pub d: i64,
}

pub fn to_root_basis(w: &Weight) -> RootBasisCoords {
    let d = w.delta();
    let y = w - &beta_base(w.k, w.n()).scale(d);
    let a = y.x[..w.n() - 1]
        .iter()
        .scan(0, |acc, v| {
            *acc -= v;
            Some(*acc)
        })
        .collect();
    RootBasisCoords { a, d }
}

pub fn from_root_basis(c: &RootBasisCoords, k: usize, n: usize) -> Result<Weight> {
    if c.a.len() + 1 != n {
        return Err(Error::OutOfRange {
            value: c.a.len() as i64,
            lo: n as i64 - 1,
            hi: n as i64 - 1,
        });
    }
    let mut w = beta_base(k, n).scale(c.d);
    for (j, &aj) in c.a.iter().enumerate() {
        w = &w + &alpha(j + 1, k, n)?.scale(aj);
    }
    Ok(w)
}

/// Sum of `beta` over the layers of a profile.
pub fn class_of_profile(p: &Profile) -> Weight {
    p.layers()
        .iter()
        .fold(Weight::zero(p.k(), p.n()), |acc, l| &acc + &beta(l))
}

/// `beta_I - beta_{[n]}`.
pub fn class_in_b(i: &KSubset) -> Weight {
    &beta(i) - &beta_base(i.k(), i.n())
}

/// Gram matrix of the bilinear form on `alpha_1, ..., alpha_{n-1}, beta_{[n]}`.
pub fn gram_matrix(k: usize, n: usize) -> Vec<Vec<i64>> {
    let mut basis: Vec<Weight> = (1..n).map(|j| alpha(j, k, n).expect("in range")).collect();
    basis.push(beta_base(k, n));
    basis
        .iter()
        .map(|u| basis.iter().map(|v| u.bilinear(v)).collect())
        .collect()
}

/// Cartan matrix of the chain `v_1 - ... - v_{n-1}` with `v_n` attached at `v_k`.
pub fn cartan_matrix_jkn(k: usize, n: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    for i in 0..n.saturating_sub(2) {
        c[i][i + 1] = -1;
        c[i + 1][i] = -1;
    }
    if (1..n).contains(&k) {
        c[k - 1][n - 1] = -1;
        c[n - 1][k - 1] = -1;
    }
    c
}

/// `(k, n)` for which the form is positive definite: `min(k, n-k) <= 2`, or `3` with `n <= 8`.
pub fn finite_type(k: usize, n: usize) -> bool {
    if k == 0 || k >= n {
        return false;
    }
    let m = k.min(n - k);
    m <= 2 || (m == 3 && n <= 8)
}

/// All `x` in `Z^n(k)` with `q(x) = 2` and `delta(x) = d`, in lexicographic order.
pub fn enumerate_roots(k: usize, n: usize, d: i64) -> Result<Vec<Weight>> {
    if !finite_type(k, n) {
        return Err(Error::NotFiniteType { k, n });
    }
    // q = 2 with delta = d forces sum x^2 = 2 + (k - 2) d^2.
    let sq = 2 + (k as i64 - 2) * d * d;
    if sq < 0 {
        return Ok(Vec::new());
    }
    let bound = (sq as f64).sqrt().floor() as i64;
    let target = k as i64 * d;
    let mut out = Vec::new();
    let mut x = Vec::with_capacity(n);
    search(n, bound, target, sq, &mut x, &mut out, k);
    Ok(out)
}

fn search(
    n: usize,
    bound: i64,
    sum_left: i64,
    sq_left: i64,
    x: &mut Vec<i64>,
    out: &mut Vec<Weight>,
    k: usize,
) {
    let slots = (n - x.len()) as i64;
    if slots == 0 {
        if sum_left == 0 && sq_left == 0 {
            out.push(Weight { k, x: x.clone() });
        }
        return;
    }
    // remaining entries must realise sum_left with sum of squares sq_left;
    // by Cauchy-Schwarz sum_left^2 <= slots * sq_left
    if sum_left * sum_left > slots * sq_left {
        return;
    }
    for v in -bound..=bound {
        let s = v * v;
        if s > sq_left {
            continue;
        }
        x.push(v);
        search(n, bound, sum_left - v, sq_left - s, x, out, k);
        x.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str, n: usize) -> KSubset {
        KSubset::parse(x, n).unwrap()
    }

    #[test]
    fn membership() {
        assert!(Weight::new(3, vec![1, 1, 0, 0]).is_err());
        assert_eq!(Weight::new(4, vec![1; 8]).unwrap().delta(), 2);
        assert_eq!(Weight::new(4, vec![1; 8]).unwrap().qform(), 0);
    }

    #[test]
    fn beta_and_alpha() {
        assert_eq!(beta(&s("123", 6)).coords(), &[1, 1, 1, 0, 0, 0]);
        assert_eq!(alpha(1, 2, 4).unwrap().coords(), &[-1, 1, 0, 0]);
        assert_eq!(alpha(2, 2, 4).unwrap().qform(), 2);
        assert!(alpha(4, 2, 4).is_err());
        let w = &beta(&s("135", 6)) + &beta(&s("246", 6));
        assert_eq!(w.qform(), 2);
        assert_eq!(beta(&s("246", 6)).delta(), 1);
    }

    #[test]
    fn root_basis() {
        let c = to_root_basis(&beta_base(3, 6));
        assert_eq!(
            c,
            RootBasisCoords {
                a: vec![0; 5],
                d: 1
            }
        );
        let c = to_root_basis(&alpha(2, 3, 6).unwrap());
        assert_eq!(c.a, vec![0, 1, 0, 0, 0]);
        let sn = Weight::new(3, vec![1, 0, 0, 0, 0, -1]).unwrap();
        assert_eq!(
            to_root_basis(&sn),
            RootBasisCoords {
                a: vec![-1; 5],
                d: 0
            }
        );
    }

    #[test]
    fn class_in_b_examples() {
        assert_eq!(class_in_b(&s("124", 6)).coords(), &[0, 0, -1, 1, 0, 0]);
        assert_eq!(class_in_b(&s("123", 6)), Weight::zero(3, 6));
    }

    #[test]
    fn cartan() {
        for (k, n) in [(2, 5), (3, 6), (3, 8), (4, 9)] {
            assert_eq!(gram_matrix(k, n), cartan_matrix_jkn(k, n));
        }
    }

    #[test]
    fn root_counts() {
        assert_eq!(enumerate_roots(3, 6, 1).unwrap().len(), 20);
        assert_eq!(enumerate_roots(3, 8, 3).unwrap().len(), 8);
        assert_eq!(enumerate_roots(2, 6, 2).unwrap().len(), 0);
        assert!(enumerate_roots(3, 9, 1).is_err());
    }
}
