use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use serde_json::{json, Value};

use super::fixtures::*;
use crate::cluster::{
    census, census_matches_roots, default_budget, enumerate, Census, EnumerateOptions,
};
use crate::error::{Error, Result};
use crate::profiles::{
    cyclic_reorderings, dimvec_of, is_close_packed, pinch_decompose, profile_of, DimWindow, Profile,
};
use crate::rankone::{ext_dim, ext_vanishes, syzygy_profile};
use crate::subsets::{is_cyclic_interval, weakly_separated, KSubset};
use crate::weights::{beta, class_of_profile, Weight};

#[derive(Clone, Debug, Serialize)]
pub struct Assertion {
    pub name: String,
    pub ok: bool,
    pub detail: Value,
}

/// Outcome of one fixture check: `ok` iff every assertion holds.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub fixture: String,
    pub ok: bool,
    pub assertions: Vec<Assertion>,
}

impl Report {
    fn new(fixture: &str) -> Self {
        Report {
            fixture: fixture.to_string(),
            ok: true,
            assertions: Vec::new(),
        }
    }

    fn check(&mut self, name: &str, ok: bool, detail: impl Serialize) {
        self.ok &= ok;
        self.assertions.push(Assertion {
            name: name.to_string(),
            ok,
            detail: serde_json::to_value(detail).unwrap_or(Value::Null),
        });
    }

    /// Records a failed assertion when a computation errors out.
    fn attempt<T>(&mut self, name: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(name, false, json!({ "error": e.to_string() }));
                None
            }
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Assertion> {
        self.assertions.iter().filter(|a| !a.ok)
    }
}

pub const FIXTURES: [&str; 7] = [
    "gr25",
    "gr36",
    "gr37",
    "gr38",
    "gr38-triples",
    "contours",
    "counterexample",
];

/// Runs the named fixture check.
pub fn run_check(name: &str) -> Result<Report> {
    Ok(match name {
        "gr25" => check_gr25(),
        "gr36" => check_gr36(),
        "gr37" => check_gr37(),
        "gr38" => check_gr38(),
        "gr38-triples" => check_gr38_triples(),
        "contours" => check_contours(),
        "counterexample" => check_counterexample(),
        _ => {
            return Err(Error::Parse(format!(
                "unknown fixture {name:?}; expected one of {}",
                FIXTURES.join(", ")
            )))
        }
    })
}

/// Distinct profiles of a figure, in order of first appearance.
pub(crate) fn figure_profiles(nodes: &[(u32, &str)], n: usize) -> Result<Vec<Profile>> {
    let mut out: Vec<Profile> = Vec::new();
    for (_, s) in nodes {
        let p = Profile::parse(s, n)?;
        if !out.contains(&p) {
            out.push(p);
        }
    }
    Ok(out)
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(T::to_string).collect()
}

fn window(fig: &FigureCells) -> Result<DimWindow> {
    DimWindow::from_lattice_points(fig.k, fig.n, &fig.lattice_points())
}

fn run_census(k: usize, n: usize) -> Result<Census> {
    let e = enumerate(k, n, &EnumerateOptions::with_budget(default_budget(k, n)))?;
    Ok(census(&e.records))
}

/// Multiplicity of each class among a list of profiles.
fn class_counts(ps: &[Profile]) -> BTreeMap<Weight, usize> {
    let mut m = BTreeMap::new();
    for p in ps {
        *m.entry(class_of_profile(p)).or_default() += 1;
    }
    m
}

fn census_counts(c: &Census) -> BTreeMap<Weight, usize> {
    c.degrees
        .values()
        .flat_map(|d| d.weights.iter().map(|(w, m)| (w.clone(), *m)))
        .collect()
}

pub fn check_gr25() -> Report {
    let mut r = Report::new("gr25");
    let Some(ps) = r.attempt("parse", figure_profiles(AR_GR25_NODES, 5)) else {
        return r;
    };
    let labels: Vec<KSubset> = ps.iter().map(|p| p.layers()[0].clone()).collect();
    r.check("label count", labels.len() == 10, labels.len());
    let all: BTreeSet<_> = KSubset::all(2, 5).into_iter().collect();
    let got: BTreeSet<_> = labels.iter().cloned().collect();
    r.check("labels are all 2-subsets", got == all, strings(&labels));

    let mut mismatches = Vec::new();
    for i in &labels {
        for j in &labels {
            match (ext_vanishes(i, j), weakly_separated(i, j)) {
                (Ok(a), Ok(b)) if a == b => {}
                _ => mismatches.push(format!("{i},{j}")),
            }
        }
    }
    r.check(
        "ext vanishing matches weak separation",
        mismatches.is_empty(),
        mismatches,
    );

    let proj: Vec<&KSubset> = labels
        .iter()
        .filter(|i| labels.iter().all(|j| ext_vanishes(i, j) == Ok(true)))
        .collect();
    let intervals: Vec<&KSubset> = labels.iter().filter(|i| is_cyclic_interval(i)).collect();
    r.check(
        "projective-injectives are the cyclic intervals",
        proj == intervals && proj.len() == 5,
        strings(&proj),
    );
    let rigid = labels.iter().all(|i| ext_dim(i, i) == Ok(0));
    r.check("all labels rigid", rigid, rigid);

    if let Some(g) = r.attempt("graph", super::dot::fixture_graph("gr25")) {
        r.check(
            "graph size",
            g.nodes.len() == 10 && g.edges.len() == 18,
            json!({ "nodes": g.nodes.len(), "edges": g.edges.len() }),
        );
    }
    r
}

pub fn check_gr36() -> Report {
    let mut r = Report::new("gr36");
    let Some(ps) = r.attempt("parse", figure_profiles(AR_GR36_NODES, 6)) else {
        return r;
    };
    r.check("total", ps.len() == 22, ps.len());
    let singles: BTreeSet<KSubset> = ps
        .iter()
        .filter(|p| p.rank() == 1)
        .map(|p| p.layers()[0].clone())
        .collect();
    let all: BTreeSet<_> = KSubset::all(3, 6).into_iter().collect();
    r.check(
        "singletons are all 3-subsets",
        singles == all,
        singles.len(),
    );
    let doubles: Vec<&Profile> = ps.iter().filter(|p| p.rank() == 2).collect();
    let names: BTreeSet<String> = doubles.iter().map(|p| p.to_string()).collect();
    r.check(
        "rank-2 profiles",
        doubles.len() == 2 && names == BTreeSet::from(["135|246".into(), "246|135".into()]),
        &names,
    );
    let classes: Vec<Weight> = doubles.iter().map(|p| class_of_profile(p)).collect();
    let ones = Weight::new(3, vec![1; 6]).expect("in lattice");
    r.check(
        "rank-2 classes equal (1,...,1)",
        classes.iter().all(|c| *c == ones),
        strings(&classes),
    );
    let bad_q: Vec<String> = ps
        .iter()
        .filter(|p| class_of_profile(p).qform() != 2)
        .map(|p| p.to_string())
        .collect();
    r.check("q = 2 on every class", bad_q.is_empty(), bad_q);

    if let Some(c) = r.attempt("census", run_census(3, 6)) {
        r.check(
            "census",
            c.counts() == BTreeMap::from([(1, 20), (2, 2)]),
            c.counts(),
        );
        r.check(
            "fixture classes match census multiplicities",
            class_counts(&ps) == census_counts(&c),
            c.total,
        );
    }

    let (a, [b1, b2], c) = ASS_GR36;
    let labels: Result<Vec<KSubset>> = [a, b1, b2, c]
        .iter()
        .map(|x| KSubset::parse(x, 6))
        .collect();
    if let Some([a, b1, b2, c]) = r
        .attempt("ass labels", labels)
        .and_then(|v| <[KSubset; 4]>::try_from(v).ok())
    {
        let lhs = &beta(&a) + &beta(&c);
        let rhs = &beta(&b1) + &beta(&b2);
        r.check(
            "almost-split sequence is additive",
            lhs == rhs,
            lhs.to_string(),
        );
        if let Some(om) = r.attempt("syzygy", syzygy_profile(&a)) {
            r.check("syzygy of 236", om.to_string() == "124", om.to_string());
        }
    }

    if let Some(g) = r.attempt("graph", super::dot::fixture_graph("gr36")) {
        r.check("graph nodes", g.nodes.len() == 22, g.nodes.len());
    }
    r
}

/// Closure of the figure's profiles under adding `shift` to every label.
fn shift_closure(ps: &[Profile], shift: i64) -> Result<Vec<Profile>> {
    let mut out: Vec<Profile> = Vec::new();
    let mut frontier = ps.to_vec();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in frontier {
            if out.contains(&p) {
                continue;
            }
            let moved = Profile::stacked(p.layers().iter().map(|l| l.rotate(shift)).collect())?;
            out.push(p);
            next.push(moved);
        }
        frontier = next;
    }
    Ok(out)
}

/// Checks for the partial figures of `Gr(3,7)` and `Gr(3,8)` against a census.
pub fn check_ar_window(
    name: &str,
    nodes: &[(u32, &str)],
    k: usize,
    n: usize,
    c: &Census,
) -> Report {
    let mut r = Report::new(name);
    let Some(ps) = r.attempt("parse", figure_profiles(nodes, n)) else {
        return r;
    };
    r.check("window profiles", true, ps.len());
    let bad: Vec<String> = ps
        .iter()
        .filter(|p| {
            let w = class_of_profile(p);
            w.qform() != 2 || w.delta() != p.rank() as i64
        })
        .map(|p| p.to_string())
        .collect();
    r.check("q = 2 and degree = rank", bad.is_empty(), bad);
    let packed = ps.iter().all(is_close_packed);
    r.check("close-packed", packed, packed);
    let weights = census_counts(c);
    let missing: Vec<String> = ps
        .iter()
        .filter(|p| !weights.contains_key(&class_of_profile(p)))
        .map(|p| p.to_string())
        .collect();
    r.check(
        "classes are cluster-variable weights",
        missing.is_empty(),
        missing,
    );
    if let Some(all) = r.attempt("shift", shift_closure(&ps, AR_WINDOW_SHIFT)) {
        let counts = class_counts(&all);
        let over: Vec<String> = counts
            .iter()
            .filter(|(w, m)| weights.get(*w).is_none_or(|x| *m > x))
            .map(|(w, m)| format!("{w} x{m}"))
            .collect();
        r.check(
            "shifted labels stay within the census",
            over.is_empty(),
            json!({ "profiles": all.len(), "excess": over }),
        );
        r.check(
            "shift closure reproduces the census",
            counts == weights,
            json!({ "profiles": all.len(), "census": c.total }),
        );
    }
    let degrees = census_matches_roots(c, k, n);
    let ok = degrees.as_ref().is_ok_and(|m| m.values().all(|&b| b));
    r.check("census matches roots", ok, c.counts());
    r
}

pub fn check_gr37() -> Report {
    match run_census(3, 7) {
        Ok(c) => check_ar_window("gr37", AR_GR37_NODES, 3, 7, &c),
        Err(e) => {
            let mut r = Report::new("gr37");
            r.check("census", false, e.to_string());
            r
        }
    }
}

pub fn check_gr38() -> Report {
    match run_census(3, 8) {
        Ok(c) => check_ar_window("gr38", AR_GR38_NODES, 3, 8, &c),
        Err(e) => {
            let mut r = Report::new("gr38");
            r.check("census", false, e.to_string());
            r
        }
    }
}

pub fn check_gr38_triples() -> Report {
    let mut r = Report::new("gr38-triples");
    let parsed: Result<Vec<Profile>> = TWO_EIGHTS.iter().map(|s| Profile::parse(s, 8)).collect();
    let Some(ps) = r.attempt("parse", parsed) else {
        return r;
    };
    let classes: Vec<Weight> = ps.iter().map(class_of_profile).collect();
    r.check(
        "classes equal",
        classes.iter().all(|c| *c == classes[0]),
        strings(&classes),
    );
    r.check(
        "q of the class",
        classes[0].qform() == 2,
        classes[0].qform(),
    );
    let names: BTreeSet<String> = ps.iter().map(|p| p.to_string()).collect();
    for p in &ps {
        let got: BTreeSet<String> = cyclic_reorderings(p)
            .iter()
            .map(|q| q.to_string())
            .collect();
        r.check(&format!("reorderings of {p}"), got == names, &got);
    }
    let mut seen = BTreeSet::new();
    for (i, fig) in FIG_3CONTOURS.iter().enumerate() {
        let Some(w) = r.attempt("window", window(fig)) else {
            continue;
        };
        if let Some(p) = r.attempt("profile", profile_of(&w)) {
            seen.insert(p.to_string());
            r.check(
                &format!("figure {} close-packed", i + 1),
                is_close_packed(&p),
                p.to_string_with_offsets(),
            );
            r.check(
                &format!("figure {} round trip", i + 1),
                dimvec_of(&p, w.rows()).as_ref() == Ok(&w),
                p.to_string_with_offsets(),
            );
        }
    }
    r.check("figures show the three stacks", seen == names, &seen);
    r
}

pub fn check_contours() -> Report {
    let mut r = Report::new("contours");
    let Some(w) = r.attempt("window", window(&FIG_CONTOURS)) else {
        return r;
    };
    let Some(p) = r.attempt("profile", profile_of(&w)) else {
        return r;
    };
    r.check(
        "profile",
        p.to_string() == FIG_CONTOURS_PROFILE,
        p.to_string_with_offsets(),
    );
    r.check(
        "round trip",
        dimvec_of(&p, w.rows()).as_ref() == Ok(&w),
        w.rows(),
    );
    r.check(
        "not close-packed",
        !is_close_packed(&p),
        is_close_packed(&p),
    );
    if let Some(parts) = r.attempt("pinch", pinch_decompose(&w)) {
        let names: Vec<String> = parts
            .iter()
            .map(|d| profile_of(d).map(|p| p.to_string()).unwrap_or_default())
            .collect();
        r.check("pinch summands", names == FIG_CONTOURS_PINCH, &names);
        r.check(
            "summands add up",
            DimWindow::sum(&parts).as_ref() == Some(&w),
            parts.len(),
        );
    }
    r
}

pub fn check_counterexample() -> Report {
    let mut r = Report::new("counterexample");
    let Some(w) = r.attempt("window", window(&FIG_COUNTEREXAMPLE)) else {
        return r;
    };
    let Some(p) = r.attempt("profile", profile_of(&w)) else {
        return r;
    };
    r.check(
        "profile",
        p.to_string() == COUNTEREXAMPLE_PROFILE,
        p.to_string_with_offsets(),
    );
    let c = class_of_profile(&p);
    r.check("class (1,...,1)", c.coords() == [1; 8], c.to_string());
    r.check("q = 0", c.qform() == 0, c.qform());
    r.check("degree 2", c.delta() == 2, c.delta());
    r.check(
        "close-packed",
        is_close_packed(&p),
        p.to_string_with_offsets(),
    );
    r
}
