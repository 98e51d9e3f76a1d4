//! Rank-one Cohen-Macaulay modules `L_I`: Hom spaces, the projective
//! presentation `D`, its Hom-dual `D*`, Ext computations and syzygies.
//!
//! Vertices of the circle are `1..=n` with vertex `n` identified with `0`;
//! edge `a` joins vertex `a - 1` to vertex `a`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{rank_at_zero, torsion_dimension, Poly, PolyMatrix};
use crate::profiles::{height, profile_of, DimWindow, Profile};
use crate::subsets::{cyclic_interval, KSubset};
use crate::wrap;

/// The module `L_I`: `x_a` acts as 1 when `a` is in `I` and as `t` otherwise,
/// `y_a` the other way round.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RankOneModule {
    pub label: KSubset,
}

impl RankOneModule {
    /// Exponent of `t` by which `x_a` acts.
    pub fn x_exponent(&self, a: usize) -> u32 {
        u32::from(!self.label.contains(a as i64))
    }

    /// Exponent of `t` by which `y_a` acts.
    pub fn y_exponent(&self, a: usize) -> u32 {
        u32::from(self.label.contains(a as i64))
    }

    pub fn is_projective(&self) -> bool {
        crate::subsets::is_cyclic_interval(&self.label)
    }
}

pub fn make_rank_one(i: &KSubset) -> RankOneModule {
    RankOneModule { label: i.clone() }
}

/// Exponents `alpha` at vertices `1..=n` with `Hom(L_I, L_J) = Z t^alpha`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentVector {
    pub alpha: Vec<u32>,
}

/// Solves `alpha_a - alpha_{a-1} = [a in J] - [a in I]` around the circle,
/// normalised to minimum 0.
pub fn hom_min_exponent(i: &KSubset, j: &KSubset) -> Result<ExponentVector> {
    crate::subsets::weakly_separated(i, j)?;
    let n = i.n();
    let mut raw = Vec::with_capacity(n);
    let mut acc = 0i64;
    for a in 1..=n {
        acc += i64::from(j.contains(a as i64)) - i64::from(i.contains(a as i64));
        raw.push(acc);
    }
    let min = *raw.iter().min().expect("n > 0");
    Ok(ExponentVector {
        alpha: raw.into_iter().map(|v| (v - min) as u32).collect(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Arrow {
    X,
    Y,
}

/// One nonzero entry `sign * arrow^exponent` of `D`, row `rels[row]`, column `gens[col]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DEntry {
    pub row: usize,
    pub col: usize,
    pub sign: i8,
    pub arrow: Arrow,
    pub exponent: usize,
}

/// The minimal projective presentation `(+)_{v in V} P_v -> (+)_{u in U} P_u -> L_I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Presentation {
    pub label: KSubset,
    /// `U`: vertices `u` with `u` not in `I` and `u + 1` in `I`.
    pub gens: Vec<usize>,
    /// `V`: vertices `v` with `v` in `I` and `v + 1` not in `I`.
    pub rels: Vec<usize>,
    pub d: Vec<DEntry>,
}

impl Presentation {
    /// Rank of the first syzygy.
    pub fn m(&self) -> usize {
        self.gens.len() - 1
    }

    /// `D` with the arrows acting on `L_J`, rows `V`, columns `U`.
    pub fn specialize(&self, j: &KSubset) -> PolyMatrix {
        let size = self.gens.len();
        let mut out = PolyMatrix::zeros(size, size);
        for e in &self.d {
            let (start, arrow_j) = match e.arrow {
                Arrow::X => (self.gens[e.col], true),
                Arrow::Y => (self.rels[e.row], false),
            };
            // edges start+1 ..= start+exponent
            let power = (1..=e.exponent)
                .filter(|s| j.contains((start + s) as i64) != arrow_j)
                .count();
            let term = Poly::signed_power(i64::from(e.sign), power);
            out[(e.row, e.col)] = &out[(e.row, e.col)] + &term;
        }
        out
    }
}

fn cyc_dist(from: usize, to: usize, n: usize) -> usize {
    (to + n - from) % n
}

pub fn presentation(i: &KSubset) -> Presentation {
    let n = i.n();
    let inside = |a: usize| i.contains(a as i64);
    let gens: Vec<usize> = (1..=n).filter(|&u| !inside(u) && inside(u + 1)).collect();
    let rels: Vec<usize> = (1..=n).filter(|&v| inside(v) && !inside(v + 1)).collect();
    let mut d = Vec::new();
    for (row, &v) in rels.iter().enumerate() {
        // the generator just before v and the one just after it
        let (before, _) = gens
            .iter()
            .enumerate()
            .min_by_key(|(_, &u)| {
                let dist = cyc_dist(u, v, n);
                if dist == 0 {
                    n
                } else {
                    dist
                }
            })
            .expect("a proper nonempty subset has a generator");
        let (after, _) = gens
            .iter()
            .enumerate()
            .min_by_key(|(_, &u)| {
                let dist = cyc_dist(v, u, n);
                if dist == 0 {
                    n
                } else {
                    dist
                }
            })
            .expect("a proper nonempty subset has a generator");
        d.push(DEntry {
            row,
            col: before,
            sign: 1,
            arrow: Arrow::X,
            exponent: cyc_dist(gens[before], v, n),
        });
        d.push(DEntry {
            row,
            col: after,
            sign: -1,
            arrow: Arrow::Y,
            exponent: cyc_dist(v, gens[after], n),
        });
    }
    Presentation {
        label: i.clone(),
        gens,
        rels,
        d,
    }
}

/// `D*` for the pair: entries `t^a` and `-t^b` with `a = #({u+1..v} \ J)`
/// and `b = #(J & {v+1..u})`, rows indexed by `V(I)`, columns by `U(I)`.
pub fn dstar(i: &KSubset, j: &KSubset) -> Result<PolyMatrix> {
    crate::subsets::weakly_separated(i, j)?;
    Ok(presentation(i).specialize(j))
}

/// `Ext^1(L_I, L_J) = 0` iff `D*` has rank `m` at `t = 0`.
pub fn ext_vanishes(i: &KSubset, j: &KSubset) -> Result<bool> {
    let m = dstar(i, j)?;
    Ok(rank_at_zero(&m) == m.rows() - 1)
}

/// Dimension of `Ext^1(L_I, L_J)`, read off as the torsion of `coker D*`.
pub fn ext_dim(i: &KSubset, j: &KSubset) -> Result<usize> {
    Ok(torsion_dimension(&dstar(i, j)?))
}

/// The label of the projective `P_j`, the cyclic interval `[j]`.
pub fn projective_label(j: usize, k: usize, n: usize) -> Result<KSubset> {
    cyclic_interval(j, k, n)
}

/// `(A e_i)^dual = e_{i-k} A`: returns `i - k` in `1..=n`.
pub fn dual_projective_index(i: usize, k: usize, n: usize) -> Result<usize> {
    if i == 0 || i > n {
        return Err(Error::OutOfRange {
            value: i as i64,
            lo: 1,
            hi: n as i64,
        });
    }
    Ok(wrap(i as i64 - k as i64, n))
}

/// Kernel dimensions of `(+)_{u in U} P_u -> L_I` on a window of the cover.
///
/// `P_u` is the cone of shape `[u]` whose peak sits on the contour of `I` at
/// `u`; a vertex covered by `N` cones carries a kernel of dimension `N - 1`.
pub fn syzygy_window(i: &KSubset) -> Result<DimWindow> {
    let (k, n) = (i.k(), i.n());
    let p = presentation(i);
    let base = cyclic_interval(n, k, n)?;
    let depth_of = |shape: &KSubset, lift: i64, c: usize| -> i64 {
        (height(&base, c as i64) - (height(shape, c as i64) - lift)) / 2
    };
    let cones: Vec<Vec<i64>> = p
        .gens
        .iter()
        .map(|&u| {
            let shape = cyclic_interval(u, k, n).expect("u in range");
            // shift the cone so it agrees with the contour of I at u
            let lift = height(&shape, u as i64) - height(i, u as i64);
            (0..n).map(|c| depth_of(&shape, lift, c)).collect()
        })
        .collect();
    for c in 0..n {
        let top = cones.iter().map(|d| d[c]).min().expect("at least one cone");
        if top != depth_of(i, 0, c) {
            return Err(Error::Invariant(format!(
                "cones do not cover L_{i} at column {c}"
            )));
        }
    }
    let lo = cones.iter().flatten().min().expect("nonempty");
    let hi = cones.iter().flatten().max().expect("nonempty");
    let s = 1 - lo;
    let rows = (hi + s + 2) as usize;
    let values: Vec<Vec<u32>> = (0..rows)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let covered = cones.iter().filter(|d| d[c] + s <= r as i64).count();
                    covered.saturating_sub(1) as u32
                })
                .collect()
        })
        .collect();
    let w = DimWindow::new(k, n, values)?;
    let m = p.m() as u32;
    if w.values()[0].iter().any(|&v| v != 0) || w.rank()? != m {
        return Err(Error::Window(format!(
            "syzygy window for {i} does not stabilise to 0 on top and {m} at the bottom"
        )));
    }
    Ok(w)
}

/// Profile of `Omega L_I`; empty for projectives.
pub fn syzygy_profile(i: &KSubset) -> Result<Profile> {
    let p = profile_of(&syzygy_window(i)?)?;
    let m = presentation(i).m();
    if p.rank() != m {
        return Err(Error::Invariant(format!(
            "syzygy of {i} has rank {}, expected {m}",
            p.rank()
        )));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str, n: usize) -> KSubset {
        KSubset::parse(x, n).unwrap()
    }

    #[test]
    fn action() {
        let l = make_rank_one(&s("124", 5));
        let xs: Vec<u32> = (1..=5).map(|a| l.x_exponent(a)).collect();
        assert_eq!(xs, [0, 0, 1, 0, 1]);
        assert_eq!(xs.iter().filter(|&&e| e == 0).count(), 3);
        assert!(make_rank_one(&s("123", 6)).is_projective());
    }

    #[test]
    fn hom_examples() {
        let a = hom_min_exponent(&s("12", 5), &s("34", 5)).unwrap();
        assert_eq!(a.alpha, [1, 0, 1, 2, 2]);
        let a = hom_min_exponent(&s("12", 5), &s("13", 5)).unwrap();
        assert_eq!(a.alpha, [1, 0, 1, 1, 1]);
        let a = hom_min_exponent(&s("24", 5), &s("24", 5)).unwrap();
        assert_eq!(a.alpha, [0; 5]);
    }

    #[test]
    fn presentation_examples() {
        let p = presentation(&s("135", 6));
        assert_eq!(
            (p.gens.clone(), p.rels.clone(), p.m()),
            (vec![2, 4, 6], vec![1, 3, 5], 2)
        );
        let p = presentation(&s("236", 6));
        assert_eq!(
            (p.gens.clone(), p.rels.clone(), p.m()),
            (vec![1, 5], vec![3, 6], 1)
        );
        let p = presentation(&s("345", 6));
        assert_eq!(p.m(), 0);
    }

    #[test]
    fn dstar_examples() {
        let m = dstar(&s("135", 6), &s("246", 6)).unwrap();
        let nonzero: Vec<&Poly> = m.entries().iter().filter(|e| !e.is_zero()).collect();
        assert_eq!(nonzero.len(), 6);
        assert!(nonzero.iter().all(|e| e.degree() == Some(1)));

        let m = dstar(&s("135", 6), &s("135", 6)).unwrap();
        assert!(m
            .entries()
            .iter()
            .all(|e| e.is_zero() || e.degree() == Some(0)));

        // rows V = (3, 6), columns U = (1, 5)
        let m = dstar(&s("236", 6), &s("124", 6)).unwrap();
        let expected = PolyMatrix::from_rows(vec![
            vec![Poly::signed_power(1, 1), Poly::signed_power(-1, 1)],
            vec![Poly::signed_power(-1, 1), Poly::signed_power(1, 1)],
        ]);
        assert_eq!(m, expected);
    }

    #[test]
    fn ext_examples() {
        assert!(!ext_vanishes(&s("135", 6), &s("246", 6)).unwrap());
        assert_eq!(ext_dim(&s("135", 6), &s("246", 6)).unwrap(), 2);
        assert!(ext_vanishes(&s("125", 6), &s("134", 6)).unwrap());
        assert!(ext_vanishes(&s("236", 6), &s("236", 6)).unwrap());
        assert_eq!(ext_dim(&s("236", 6), &s("236", 6)).unwrap(), 0);
    }

    #[test]
    fn projective_labels() {
        assert_eq!(projective_label(6, 3, 6).unwrap(), s("123", 6));
        assert_eq!(projective_label(1, 3, 6).unwrap(), s("234", 6));
        assert_eq!(projective_label(4, 2, 5).unwrap(), s("15", 5));
        assert_eq!(dual_projective_index(3, 2, 5).unwrap(), 1);
        assert_eq!(dual_projective_index(2, 2, 7).unwrap(), 7);
        assert_eq!(dual_projective_index(1, 3, 8).unwrap(), 6);
    }

    #[test]
    fn syzygies() {
        assert_eq!(syzygy_profile(&s("236", 6)).unwrap().to_string(), "124");
        assert_eq!(syzygy_profile(&s("234", 6)).unwrap().rank(), 0);
        let p = syzygy_profile(&s("135", 6)).unwrap();
        assert_eq!(p.to_string_with_offsets(), "246:0|135:0");
    }
}
