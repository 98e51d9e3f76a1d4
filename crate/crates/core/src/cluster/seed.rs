use std::collections::BTreeMap;

use serde::Serialize;

use super::laurent::LaurentExpr;
use crate::error::{Error, Result};
use crate::subsets::{is_cyclic_interval, KSubset};
use crate::weights::{beta, Weight};

/// A labelled quiver with an exact cluster variable and a weight at every vertex.
///
/// `b[i][j] > 0` counts arrows `i -> j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Seed {
    pub k: usize,
    pub n: usize,
    /// Plücker labels of the initial seed's vertices.
    pub labels: Vec<KSubset>,
    pub frozen: Vec<bool>,
    pub b: Vec<Vec<i64>>,
    pub vars: Vec<LaurentExpr>,
    pub degrees: Vec<Weight>,
}

/// Grid label `{1..i} | {i+j+1 .. j+k}`.
fn grid_label(i: usize, j: usize, k: usize, n: usize) -> KSubset {
    KSubset::new(n, (1..=i).chain(i + j + 1..=j + k)).expect("grid labels are k-subsets")
}

/// Labels, frozen flags and exchange matrix.
pub(crate) type Quiver = (Vec<KSubset>, Vec<bool>, Vec<Vec<i64>>);

/// Vertex labels and exchange matrix of the rectangular grid seed.
pub(crate) fn initial_quiver(k: usize, n: usize) -> Result<Quiver> {
    if k < 2 || k + 2 > n {
        return Err(Error::OutOfRange {
            value: k as i64,
            lo: 2,
            hi: n as i64 - 2,
        });
    }
    let mut labels: Vec<KSubset> = Vec::new();
    let mut index: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for i in 0..=k {
        for j in 0..=n - k {
            let l = grid_label(i, j, k, n);
            let v = match labels.iter().position(|x| *x == l) {
                Some(v) => v,
                None => {
                    labels.push(l);
                    labels.len() - 1
                }
            };
            index.insert((i, j), v);
        }
    }
    let size = labels.len();
    let mut b = vec![vec![0i64; size]; size];
    let mut arrow = |from: (usize, usize), to: (usize, usize)| {
        if let (Some(&s), Some(&t)) = (index.get(&from), index.get(&to)) {
            if s != t {
                b[s][t] += 1;
                b[t][s] -= 1;
            }
        }
    };
    for i in 0..=k {
        for j in 0..=n - k {
            arrow((i, j), (i + 1, j));
            if j > 0 {
                arrow((i, j), (i, j - 1));
                arrow((i + 1, j - 1), (i, j));
            }
        }
    }
    let frozen: Vec<bool> = labels.iter().map(is_cyclic_interval).collect();
    for s in 0..size {
        for t in 0..size {
            if frozen[s] && frozen[t] {
                b[s][t] = 0;
            }
        }
    }
    Ok((labels, frozen, b))
}

/// The initial grid seed of `Gr(k, n)`, checked against the short Plücker relations.
pub fn initial_seed(k: usize, n: usize) -> Result<Seed> {
    let (labels, frozen, b) = initial_quiver(k, n)?;
    let size = labels.len();
    let seed = Seed {
        k,
        n,
        vars: (0..size).map(|v| LaurentExpr::variable(v, size)).collect(),
        degrees: labels.iter().map(beta).collect(),
        labels,
        frozen,
        b,
    };
    // Vertices with two in- and two out-neighbours pin the orientation.
    if exchange_patterns(&seed)
        .iter()
        .any(|&(_, ok)| ok == Some(false))
    {
        return Err(Error::Invariant(
            "initial quiver does not realise short Plücker exchanges".into(),
        ));
    }
    seed.check_balance()?;
    Ok(seed)
}

/// Standard matrix mutation at `m`.
pub(crate) fn mutate_matrix(b: &[Vec<i64>], m: usize) -> Vec<Vec<i64>> {
    let size = b.len();
    let mut out = b.to_vec();
    for i in 0..size {
        for j in 0..size {
            out[i][j] = if i == m || j == m {
                -b[i][j]
            } else {
                b[i][j] + (b[i][m].abs() * b[m][j] + b[i][m] * b[m][j].abs()) / 2
            };
        }
    }
    out
}

impl Seed {
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn mutable_vertices(&self) -> Vec<usize> {
        (0..self.size()).filter(|&v| !self.frozen[v]).collect()
    }

    /// In-weight `sum_{i -> m} b_im d_i` at `m`.
    pub fn in_weight(&self, m: usize) -> Weight {
        self.side_weight(m, 1)
    }

    pub fn out_weight(&self, m: usize) -> Weight {
        self.side_weight(m, -1)
    }

    fn side_weight(&self, m: usize, sign: i64) -> Weight {
        let mut acc = Weight::zero(self.k, self.n);
        for i in 0..self.size() {
            let c = sign * self.b[i][m];
            if c > 0 {
                acc = &acc + &self.degrees[i].scale(c);
            }
        }
        acc
    }

    /// The balance equation at every mutable vertex.
    pub fn check_balance(&self) -> Result<()> {
        for m in self.mutable_vertices() {
            if self.in_weight(m) != self.out_weight(m) {
                return Err(Error::Invariant(format!(
                    "unbalanced at vertex {m}: in {} out {}",
                    self.in_weight(m),
                    self.out_weight(m)
                )));
            }
        }
        Ok(())
    }

    /// Every variable's monomials all carry its tracked weight.
    pub fn check_eigenfunctions(&self) -> Result<()> {
        let initial: Vec<Weight> = self.labels.iter().map(beta).collect();
        for (v, var) in self.vars.iter().enumerate() {
            check_homogeneous(var, &initial, &self.degrees[v])?;
        }
        Ok(())
    }
}

/// Weight of a Laurent monomial given the weights of the initial variables.
pub(crate) fn monomial_weight(exps: &[i64], initial: &[Weight]) -> Weight {
    let zero = Weight::zero(initial[0].k(), initial[0].n());
    exps.iter()
        .zip(initial)
        .filter(|(e, _)| **e != 0)
        .fold(zero, |acc, (&e, w)| &acc + &w.scale(e))
}

pub(crate) fn check_homogeneous(
    var: &LaurentExpr,
    initial: &[Weight],
    expected: &Weight,
) -> Result<()> {
    for exps in var.laurent_monomials() {
        let w = monomial_weight(&exps, initial);
        if &w != expected {
            return Err(Error::Invariant(format!(
                "monomial of weight {w} in a variable of weight {expected}"
            )));
        }
    }
    Ok(())
}

/// The exchange binomial `prod_{b_im > 0} x_i^b_im + prod_{b_im < 0} x_i^-b_im`.
pub(crate) fn exchange_binomial(b: &[Vec<i64>], m: usize, vars: &[&LaurentExpr]) -> LaurentExpr {
    let nv = vars[0].nvars();
    let mut plus = LaurentExpr::one(nv);
    let mut minus = LaurentExpr::one(nv);
    for (i, row) in b.iter().enumerate() {
        let c = row[m];
        if c > 0 {
            plus = plus.mul(&vars[i].pow(c as u32));
        } else if c < 0 {
            minus = minus.mul(&vars[i].pow((-c) as u32));
        }
    }
    plus.add(&minus)
}

/// Mutation at a mutable vertex; the new variable is computed exactly.
pub fn mutate(s: &Seed, m: usize) -> Result<Seed> {
    if m >= s.size() || s.frozen[m] {
        return Err(Error::NotMutable(m));
    }
    let refs: Vec<&LaurentExpr> = s.vars.iter().collect();
    let new_var = exchange_binomial(&s.b, m, &refs).div(&s.vars[m])?;
    let new_deg = &s.in_weight(m) - &s.degrees[m];
    let mut out = s.clone();
    out.b = mutate_matrix(&s.b, m);
    out.vars[m] = new_var;
    out.degrees[m] = new_deg;
    out.check_balance()?;
    Ok(out)
}

/// Checks that each mutable vertex `Jac` of an initial seed has neighbours
/// `{Jab, Jcd}` on one side and `{Jad, Jbc}` on the other.
pub fn verify_initial_exchanges(s: &Seed) -> bool {
    exchange_patterns(s).iter().all(|&(_, ok)| ok == Some(true))
}

/// Per mutable vertex: `None` unless it has exactly two simple arrows in and
/// two out, otherwise whether they form a short Plücker relation.
pub fn exchange_patterns(s: &Seed) -> Vec<(usize, Option<bool>)> {
    let side = |m: usize, sign: i64| -> Option<Vec<&KSubset>> {
        let mut out = Vec::new();
        for i in 0..s.size() {
            let c = sign * s.b[i][m];
            if c > 1 {
                return None;
            }
            if c == 1 {
                out.push(&s.labels[i]);
            }
        }
        (out.len() == 2).then_some(out)
    };
    s.mutable_vertices()
        .into_iter()
        .map(|m| match (side(m, 1), side(m, -1)) {
            (Some(ins), Some(outs)) => (
                m,
                Some(plucker_pattern(
                    &s.labels[m],
                    [ins[0], ins[1]],
                    [outs[0], outs[1]],
                    s.k,
                )),
            ),
            _ => (m, None),
        })
        .collect()
}

fn plucker_pattern(center: &KSubset, ins: [&KSubset; 2], outs: [&KSubset; 2], k: usize) -> bool {
    let all = [center, ins[0], ins[1], outs[0], outs[1]];
    let j: Vec<usize> = center
        .elements()
        .iter()
        .copied()
        .filter(|e| all.iter().all(|s| s.contains(*e as i64)))
        .collect();
    if j.len() + 2 != k {
        return false;
    }
    let mut w: Vec<usize> = all
        .iter()
        .flat_map(|s| s.elements().iter().copied())
        .filter(|e| !j.contains(e))
        .collect();
    w.sort_unstable();
    w.dedup();
    if w.len() != 4 {
        return false;
    }
    let n = center.n();
    let mk = |a: usize, b: usize| KSubset::new(n, j.iter().copied().chain([a, b])).ok();
    let c_rest = center.difference(&KSubset::new(n, j.iter().copied()).expect("subset"));
    if c_rest != [w[0], w[2]] && c_rest != [w[1], w[3]] {
        return false;
    }
    let same = |pair: [&KSubset; 2], x: Option<KSubset>, y: Option<KSubset>| match (x, y) {
        (Some(x), Some(y)) => (pair[0] == &x && pair[1] == &y) || (pair[0] == &y && pair[1] == &x),
        _ => false,
    };
    let p1 = (mk(w[0], w[1]), mk(w[2], w[3]));
    let p2 = (mk(w[0], w[3]), mk(w[1], w[2]));
    (same(ins, p1.0.clone(), p1.1.clone()) && same(outs, p2.0.clone(), p2.1.clone()))
        || (same(ins, p2.0, p2.1) && same(outs, p1.0, p1.1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str, n: usize) -> KSubset {
        KSubset::parse(x, n).unwrap()
    }

    #[test]
    fn gr24() {
        let seed = initial_seed(2, 4).unwrap();
        assert_eq!(seed.size(), 5);
        let m = seed.mutable_vertices();
        assert_eq!(m.len(), 1);
        let m = m[0];
        assert_eq!(seed.labels[m], s("13", 4));
        let next = mutate(&seed, m).unwrap();
        assert_eq!(next.degrees[m].coords(), &[0, 1, 0, 1]);
        // x13 * x' = x12 x34 + x14 x23
        let idx = |l: &str| seed.labels.iter().position(|x| *x == s(l, 4)).unwrap();
        let expected = LaurentExpr::variable(idx("12"), 5)
            .mul(&LaurentExpr::variable(idx("34"), 5))
            .add(&LaurentExpr::variable(idx("14"), 5).mul(&LaurentExpr::variable(idx("23"), 5)))
            .div(&LaurentExpr::variable(m, 5))
            .unwrap();
        assert_eq!(next.vars[m], expected);
        assert_eq!(mutate(&next, m).unwrap(), seed);
    }

    #[test]
    fn sizes() {
        let seed = initial_seed(3, 6).unwrap();
        assert_eq!(seed.size(), 10);
        assert_eq!(seed.mutable_vertices().len(), 4);
        assert_eq!(seed.frozen.iter().filter(|&&f| f).count(), 6);
        for (k, n) in [(2, 5), (2, 8), (3, 7), (3, 8), (4, 8)] {
            let seed = initial_seed(k, n).unwrap();
            assert_eq!(seed.size(), k * (n - k) + 1);
            assert_eq!(seed.frozen.iter().filter(|&&f| f).count(), n);
        }
        assert!(initial_seed(1, 4).is_err());
    }

    #[test]
    fn flipped_arrow_breaks_pattern() {
        let mut seed = initial_seed(2, 5).unwrap();
        assert!(verify_initial_exchanges(&seed));
        let m = seed.mutable_vertices()[0];
        let i = (0..seed.size()).find(|&i| seed.b[i][m] > 0).unwrap();
        seed.b[i][m] = -seed.b[i][m];
        seed.b[m][i] = -seed.b[m][i];
        assert!(!verify_initial_exchanges(&seed));
    }

    #[test]
    fn hexagonal_vertices_for_k3() {
        let seed = initial_seed(3, 6).unwrap();
        let pats = exchange_patterns(&seed);
        assert!(pats.iter().any(|&(_, p)| p.is_none()));
        assert!(pats.iter().all(|&(_, p)| p != Some(false)));
        assert!(!verify_initial_exchanges(&seed));
    }

    #[test]
    fn mutation_keeps_balance_and_homogeneity() {
        let mut seed = initial_seed(3, 6).unwrap();
        for &m in &[3, 5, 3, 6, 8, 5] {
            if seed.frozen[m] {
                continue;
            }
            seed = mutate(&seed, m).unwrap();
            seed.check_balance().unwrap();
            seed.check_eigenfunctions().unwrap();
        }
    }
}
