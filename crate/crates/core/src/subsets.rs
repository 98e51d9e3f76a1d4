//! k-subsets of `{1..n}`: weak separation, cyclic intervals, short Pluecker
//! relations and maximal weakly separated collections.

use std::fmt;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A k-element subset of `{1..n}`, stored ascending.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KSubset {
    n: usize,
    elems: Vec<usize>,
}

impl KSubset {
    /// Sorts and validates `elems`.
    pub fn new(n: usize, elems: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut elems: Vec<usize> = elems.into_iter().collect();
        elems.sort_unstable();
        if let Some(w) = elems.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidSubset(format!("repeated element {}", w[0])));
        }
        if let Some(&e) = elems.iter().find(|&&e| e == 0 || e > n) {
            return Err(Error::InvalidSubset(format!("element {e} outside 1..={n}")));
        }
        Ok(KSubset { n, elems })
    }

    /// Parses `"1,3,5"` or, when `n <= 9`, the compact form `"135"`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let s = s.trim();
        let elems: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|e| Error::Parse(format!("{p:?}: {e}")))
                })
                .collect::<Result<_>>()?
        } else if s.is_empty() {
            Vec::new()
        } else if n <= 9 {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("not a digit: {c:?}")))
                })
                .collect::<Result<_>>()?
        } else if let Ok(v) = s.parse::<usize>() {
            vec![v]
        } else {
            return Err(Error::Parse(format!("use a comma list for n = {n}: {s:?}")));
        };
        KSubset::new(n, elems)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.elems.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elems
    }

    /// Membership of a label, taken mod `n` into `1..=n`.
    pub fn contains(&self, a: i64) -> bool {
        let a = crate::wrap(a, self.n);
        self.elems.binary_search(&a).is_ok()
    }

    pub fn difference(&self, other: &KSubset) -> Vec<usize> {
        self.elems
            .iter()
            .copied()
            .filter(|e| other.elems.binary_search(e).is_err())
            .collect()
    }

    pub fn intersection(&self, other: &KSubset) -> Vec<usize> {
        self.elems
            .iter()
            .copied()
            .filter(|e| other.elems.binary_search(e).is_ok())
            .collect()
    }

    /// Adds `s` to every label mod `n`.
    pub fn rotate(&self, s: i64) -> KSubset {
        let elems = self
            .elems
            .iter()
            .map(|&e| crate::wrap(e as i64 + s, self.n));
        KSubset::new(self.n, elems).expect("rotation preserves validity")
    }

    fn check_compatible(&self, other: &KSubset) -> Result<()> {
        if self.n != other.n || self.k() != other.k() {
            return Err(Error::Mismatch {
                k1: self.k(),
                n1: self.n,
                k2: other.k(),
                n2: other.n,
            });
        }
        Ok(())
    }

    /// All k-subsets of `{1..n}` in lexicographic order.
    pub fn all(k: usize, n: usize) -> Vec<KSubset> {
        (1..=n)
            .combinations(k)
            .map(|elems| KSubset { n, elems })
            .collect()
    }
}

impl fmt::Display for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n <= 9 {
            for e in &self.elems {
                write!(f, "{e}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.elems.iter().join(","))
        }
    }
}

impl fmt::Debug for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}/{}", self.elems.iter().join(","), self.n)
    }
}

impl Serialize for KSubset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.elems.serialize(s)
    }
}

/// True iff no cyclically ordered `a, b, c, d` has `a, c` in `I \ J` and `b, d` in `J \ I`.
///
/// Walks the symmetric difference in circular order; the pair crosses exactly
/// when the membership labels change more than twice around the circle.
pub fn weakly_separated(i: &KSubset, j: &KSubset) -> Result<bool> {
    i.check_compatible(j)?;
    Ok(ws_unchecked(i, j))
}

pub(crate) fn ws_unchecked(i: &KSubset, j: &KSubset) -> bool {
    let labels: Vec<bool> = (1..=i.n)
        .filter_map(|a| {
            let in_i = i.elems.binary_search(&a).is_ok();
            let in_j = j.elems.binary_search(&a).is_ok();
            (in_i != in_j).then_some(in_i)
        })
        .collect();
    let Some(&last) = labels.last() else {
        return true;
    };
    let mut prev = last;
    let mut changes = 0;
    for &l in &labels {
        if l != prev {
            changes += 1;
        }
        prev = l;
    }
    changes <= 2
}

/// The cyclic interval `[j] = {j+1, ..., j+k}` taken mod `n`.
pub fn cyclic_interval(j: usize, k: usize, n: usize) -> Result<KSubset> {
    if j == 0 || j > n {
        return Err(Error::OutOfRange {
            value: j as i64,
            lo: 1,
            hi: n as i64,
        });
    }
    if k > n {
        return Err(Error::InvalidSubset(format!("k={k} exceeds n={n}")));
    }
    KSubset::new(n, (1..=k).map(|s| crate::wrap((j + s) as i64, n)))
}

pub fn is_cyclic_interval(i: &KSubset) -> bool {
    let n = i.n;
    (1..=n).any(|j| cyclic_interval(j, i.k(), n).is_ok_and(|c| &c == i))
}

/// One three-term Pluecker relation `P_lhs0 P_lhs1 = P_t10 P_t11 + P_t20 P_t21`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PluckerTriple {
    pub lhs: (KSubset, KSubset),
    pub term1: (KSubset, KSubset),
    pub term2: (KSubset, KSubset),
}

impl fmt::Display for PluckerTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "P{}*P{} = P{}*P{} + P{}*P{}",
            self.lhs.0, self.lhs.1, self.term1.0, self.term1.1, self.term2.0, self.term2.1
        )
    }
}

/// The short Pluecker relation `P_Jac P_Jbd = P_Jab P_Jcd + P_Jad P_Jbc`.
pub fn short_plucker(
    jset: &[usize],
    [a, b, c, d]: [usize; 4],
    k: usize,
    n: usize,
) -> Result<PluckerTriple> {
    if jset.len() + 2 != k {
        return Err(Error::Plucker(format!(
            "J has {} elements, expected k - 2 = {}",
            jset.len(),
            k as i64 - 2
        )));
    }
    let abcd = [a, b, c, d];
    if abcd.iter().any(|&x| x == 0 || x > n) {
        return Err(Error::Plucker(format!("indices {abcd:?} outside 1..={n}")));
    }
    if abcd.iter().any(|x| jset.contains(x)) {
        return Err(Error::Plucker("J meets {a,b,c,d}".into()));
    }
    let descents = (0..4).filter(|&s| abcd[s] >= abcd[(s + 1) % 4]).count();
    if descents != 1 {
        return Err(Error::Plucker(format!(
            "{abcd:?} is not cyclically ordered"
        )));
    }
    let mk = |x: usize, y: usize| KSubset::new(n, jset.iter().copied().chain([x, y]));
    Ok(PluckerTriple {
        lhs: (mk(a, c)?, mk(b, d)?),
        term1: (mk(a, b)?, mk(c, d)?),
        term2: (mk(a, d)?, mk(b, c)?),
    })
}

/// Greedy lexicographic completion of `seed` to a maximal weakly separated collection.
///
/// The result is sorted. Maximality is certified by a final scan over all k-subsets.
pub fn extend_to_maximal_ws(seed: &[KSubset], k: usize, n: usize) -> Result<Vec<KSubset>> {
    for s in seed {
        if s.n != n || s.k() != k {
            return Err(Error::Mismatch {
                k1: s.k(),
                n1: s.n,
                k2: k,
                n2: n,
            });
        }
    }
    for (x, y) in seed.iter().tuple_combinations() {
        if !ws_unchecked(x, y) {
            return Err(Error::NotWeaklySeparated(x.to_string(), y.to_string()));
        }
    }
    let mut coll: Vec<KSubset> = seed.iter().cloned().sorted().dedup().collect();
    for cand in KSubset::all(k, n) {
        if coll.contains(&cand) {
            continue;
        }
        if coll.iter().all(|c| ws_unchecked(c, &cand)) {
            coll.push(cand);
        }
    }
    coll.sort();
    debug_assert!(KSubset::all(k, n)
        .iter()
        .all(|c| coll.contains(c) || coll.iter().any(|x| !ws_unchecked(x, c))));
    Ok(coll)
}

/// All `n` cyclic intervals, in order `[1], ..., [n]` with duplicates removed.
pub fn cyclic_intervals(k: usize, n: usize) -> Vec<KSubset> {
    (1..=n)
        .map(|j| cyclic_interval(j, k, n).expect("j in range"))
        .unique()
        .collect()
}
