use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::laurent::{invmod, mulmod, powmod, LaurentExpr, P61};
use super::seed::{check_homogeneous, exchange_binomial, initial_quiver, mutate_matrix};
use crate::error::{Error, Result};
use crate::subsets::KSubset;
use crate::weights::{beta, enumerate_roots, finite_type, Weight};

/// A cluster variable with its exact Laurent expansion in the initial seed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VariableRecord {
    pub canonical: LaurentExpr,
    pub weight: Weight,
    pub degree: i64,
    pub frozen: bool,
}

#[derive(Clone, Debug)]
pub struct EnumerateOptions {
    /// Maximum number of distinct clusters before giving up.
    pub budget: usize,
    /// Seed for the random evaluation points used as variable fingerprints.
    pub rng_seed: u64,
    /// Re-derive the exact expansion on every `stride`-th mutation that lands
    /// on an already known variable. `None` picks 1 for small ranks and 97 otherwise.
    pub exact_stride: Option<usize>,
}

impl EnumerateOptions {
    pub fn with_budget(budget: usize) -> Self {
        EnumerateOptions {
            budget,
            ..Default::default()
        }
    }
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            budget: 30_000,
            rng_seed: 0x5eed_c1a5,
            exact_stride: None,
        }
    }
}

/// Default budgets: 2,000 seeds, 30,000 for `Gr(3,8)` and its dual.
pub fn default_budget(k: usize, n: usize) -> usize {
    if n == 8 && (k == 3 || k == 5) {
        30_000
    } else {
        2_000
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EnumerationStats {
    pub clusters: usize,
    pub mutations: usize,
    /// Seeds at which the balance equation was checked at every mutable vertex.
    pub balance_checks: usize,
    /// Exact expansions whose monomials were all checked to share one weight.
    pub eigen_checks: usize,
    pub exact_discoveries: usize,
    pub exact_rederivations: usize,
    pub exact_stride: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Enumeration {
    pub k: usize,
    pub n: usize,
    pub initial_labels: Vec<KSubset>,
    pub records: Vec<VariableRecord>,
    /// Unordered pairs of record indices exchanged by some mutation.
    pub exchanges: BTreeSet<(u32, u32)>,
    pub stats: EnumerationStats,
}

struct Node {
    b: Vec<Vec<i64>>,
    ids: Vec<u32>,
}

struct Var {
    fp: [u64; 2],
    weight: Weight,
    exact: LaurentExpr,
}

/// Breadth-first closure of the initial seed under mutation.
///
/// Variables are identified by their values at two random points mod
/// `2^61 - 1`; the exact Laurent expansion of each new variable is computed
/// once, from the seed where it first appears, and checked against its
/// fingerprint. Clusters are deduplicated by their sets of variables.
pub fn enumerate(k: usize, n: usize, opts: &EnumerateOptions) -> Result<Enumeration> {
    if !finite_type(k, n) {
        return Err(Error::NotFiniteType { k, n });
    }
    let (labels, frozen, b0) = initial_quiver(k, n)?;
    let size = labels.len();
    let mutable: Vec<usize> = (0..size).filter(|&v| !frozen[v]).collect();
    let stride = opts
        .exact_stride
        .unwrap_or(if mutable.len() <= 6 { 1 } else { 97 })
        .max(1);
    let initial_weights: Vec<Weight> = labels.iter().map(beta).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(opts.rng_seed);
    let points: [Vec<u64>; 2] =
        [0, 1].map(|_| (0..size).map(|_| rng.random_range(1..P61)).collect());

    let mut vars: Vec<Var> = (0..size)
        .map(|v| Var {
            fp: [points[0][v], points[1][v]],
            weight: initial_weights[v].clone(),
            exact: LaurentExpr::variable(v, size),
        })
        .collect();
    let mut by_fp: HashMap<[u64; 2], u32> = vars
        .iter()
        .enumerate()
        .map(|(i, v)| (v.fp, i as u32))
        .collect();

    let mut stats = EnumerationStats {
        exact_stride: stride,
        ..Default::default()
    };
    let key_of = |ids: &[u32]| -> Vec<u32> {
        let mut key: Vec<u32> = mutable.iter().map(|&v| ids[v]).collect();
        key.sort_unstable();
        key
    };
    let balance = |b: &[Vec<i64>], ids: &[u32], vars: &[Var]| -> Result<()> {
        for &m in &mutable {
            let (mut win, mut wout) = (Weight::zero(k, n), Weight::zero(k, n));
            for i in 0..size {
                let c = b[i][m];
                if c > 0 {
                    win = &win + &vars[ids[i] as usize].weight.scale(c);
                } else if c < 0 {
                    wout = &wout + &vars[ids[i] as usize].weight.scale(-c);
                }
            }
            if win != wout {
                return Err(Error::Invariant(format!(
                    "balance fails at vertex {m}: in {win}, out {wout}"
                )));
            }
        }
        Ok(())
    };

    let start = Node {
        b: b0,
        ids: (0..size as u32).collect(),
    };
    balance(&start.b, &start.ids, &vars)?;
    stats.balance_checks += 1;
    let mut visited: HashSet<Vec<u32>> = HashSet::new();
    visited.insert(key_of(&start.ids));
    let mut queue = VecDeque::from([start]);
    let mut exchanges = BTreeSet::new();

    while let Some(node) = queue.pop_front() {
        for &m in &mutable {
            stats.mutations += 1;
            let mut fp = [0u64; 2];
            for (t, pt) in fp.iter_mut().enumerate() {
                let (mut plus, mut minus) = (1u64, 1u64);
                for i in 0..size {
                    let c = node.b[i][m];
                    let x = vars[node.ids[i] as usize].fp[t];
                    if c > 0 {
                        plus = mulmod(plus, powmod(x, c as u64));
                    } else if c < 0 {
                        minus = mulmod(minus, powmod(x, (-c) as u64));
                    }
                }
                let xm = vars[node.ids[m] as usize].fp[t];
                if xm == 0 {
                    return Err(Error::Arithmetic("fingerprint vanished".into()));
                }
                *pt = mulmod((plus + minus) % P61, invmod(xm));
            }
            let mut win = Weight::zero(k, n);
            for i in 0..size {
                if node.b[i][m] > 0 {
                    win = &win + &vars[node.ids[i] as usize].weight.scale(node.b[i][m]);
                }
            }
            let weight = &win - &vars[node.ids[m] as usize].weight;

            let exact_here = |vars: &[Var]| -> Result<LaurentExpr> {
                let refs: Vec<&LaurentExpr> =
                    node.ids.iter().map(|&i| &vars[i as usize].exact).collect();
                exchange_binomial(&node.b, m, &refs).div(refs[m])
            };

            let id = match by_fp.get(&fp) {
                Some(&id) => {
                    if vars[id as usize].weight != weight {
                        return Err(Error::Invariant(format!(
                            "variable {id} reached with weight {weight}, recorded {}",
                            vars[id as usize].weight
                        )));
                    }
                    if stats.mutations.is_multiple_of(stride) {
                        let exact = exact_here(&vars)?;
                        if exact != vars[id as usize].exact {
                            return Err(Error::Invariant(format!(
                                "re-derived expansion of variable {id} differs"
                            )));
                        }
                        check_homogeneous(&exact, &initial_weights, &weight)?;
                        stats.exact_rederivations += 1;
                        stats.eigen_checks += 1;
                    }
                    id
                }
                None => {
                    let exact = exact_here(&vars)?;
                    if [exact.eval_mod(&points[0])?, exact.eval_mod(&points[1])?] != fp {
                        return Err(Error::Invariant(
                            "exact expansion disagrees with its fingerprint".into(),
                        ));
                    }
                    check_homogeneous(&exact, &initial_weights, &weight)?;
                    stats.exact_discoveries += 1;
                    stats.eigen_checks += 1;
                    let id = vars.len() as u32;
                    vars.push(Var { fp, weight, exact });
                    by_fp.insert(fp, id);
                    id
                }
            };

            let old = node.ids[m];
            exchanges.insert((old.min(id), old.max(id)));
            let mut ids = node.ids.clone();
            ids[m] = id;
            if visited.insert(key_of(&ids)) {
                if visited.len() > opts.budget {
                    return Err(Error::BudgetExhausted(opts.budget));
                }
                let b = mutate_matrix(&node.b, m);
                balance(&b, &ids, &vars)?;
                stats.balance_checks += 1;
                queue.push_back(Node { b, ids });
            }
        }
    }
    stats.clusters = visited.len();

    let records = vars
        .into_iter()
        .enumerate()
        .map(|(i, v)| VariableRecord {
            degree: v.weight.delta(),
            weight: v.weight,
            canonical: v.exact,
            frozen: i < size && frozen[i],
        })
        .collect();
    Ok(Enumeration {
        k,
        n,
        initial_labels: labels,
        records,
        exchanges,
        stats,
    })
}

/// All cluster variables, frozen ones included.
pub fn enumerate_variables(k: usize, n: usize, budget: usize) -> Result<Vec<VariableRecord>> {
    Ok(enumerate(k, n, &EnumerateOptions::with_budget(budget))?.records)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DegreeCensus {
    pub count: usize,
    pub weights: BTreeMap<Weight, usize>,
}

/// Variables per degree, with per-weight multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Census {
    pub degrees: BTreeMap<i64, DegreeCensus>,
    /// Weights with `q != 2`.
    pub non_roots: Vec<Weight>,
    pub total: usize,
}

impl Census {
    pub fn counts(&self) -> BTreeMap<i64, usize> {
        self.degrees.iter().map(|(d, c)| (*d, c.count)).collect()
    }
}

pub fn census(records: &[VariableRecord]) -> Census {
    let mut out = Census {
        total: records.len(),
        ..Default::default()
    };
    for r in records {
        let e = out.degrees.entry(r.degree).or_default();
        e.count += 1;
        *e.weights.entry(r.weight.clone()).or_default() += 1;
        if r.weight.qform() != 2 && !out.non_roots.contains(&r.weight) {
            out.non_roots.push(r.weight.clone());
        }
    }
    out
}

impl Serialize for DegreeCensus {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Weights<'a>(&'a BTreeMap<Weight, usize>);
        impl Serialize for Weights<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for (w, c) in self.0 {
                    let key: Vec<String> = w.coords().iter().map(i64::to_string).collect();
                    m.serialize_entry(&key.join(","), c)?;
                }
                m.end()
            }
        }
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("count", &self.count)?;
        m.serialize_entry("weights", &Weights(&self.weights))?;
        m.end()
    }
}

impl Serialize for Census {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let degrees: BTreeMap<String, &DegreeCensus> = self
            .degrees
            .iter()
            .map(|(d, c)| (d.to_string(), c))
            .collect();
        let mut m = s.serialize_map(Some(3))?;
        m.serialize_entry("degrees", &degrees)?;
        m.serialize_entry("non_roots", &self.non_roots)?;
        m.serialize_entry("total", &self.total)?;
        m.end()
    }
}

/// Per degree `d`: does the weight multiset equal `d` copies of every root of degree `d`?
pub fn census_matches_roots(c: &Census, k: usize, n: usize) -> Result<BTreeMap<i64, bool>> {
    let mut out = BTreeMap::new();
    for (&d, dc) in &c.degrees {
        let roots = enumerate_roots(k, n, d)?;
        let ok = roots.len() == dc.weights.len()
            && roots
                .iter()
                .all(|r| dc.weights.get(r).copied() == Some(d as usize));
        out.insert(d, ok);
    }
    Ok(out)
}
