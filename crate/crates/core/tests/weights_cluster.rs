use std::collections::BTreeSet;

use grasscat::catalog::{check_gr38, run_check, FIXTURES};
use grasscat::cluster::{census, enumerate, initial_seed, mutate, EnumerateOptions};
use grasscat::weights::{
    beta, cartan_matrix_jkn, finite_type, from_root_basis, gram_matrix, to_root_basis,
};
use grasscat::{KSubset, Weight};
use proptest::prelude::*;

fn lattice_point() -> impl Strategy<Value = Weight> {
    (3usize..=9)
        .prop_flat_map(|n| (1..n, prop::collection::vec(-4i64..=4, n)))
        .prop_map(|(k, mut x)| {
            let r = x.iter().sum::<i64>().rem_euclid(k as i64);
            x[0] -= r;
            Weight::new(k, x).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn root_basis_round_trip(w in lattice_point()) {
        let c = to_root_basis(&w);
        prop_assert_eq!(from_root_basis(&c, w.k(), w.n()).unwrap(), w);
    }

    #[test]
    fn qform_is_the_bilinear_square(w in lattice_point(), v in lattice_point()) {
        prop_assert_eq!(w.bilinear(&w), w.qform());
        if v.k() == w.k() && v.n() == w.n() {
            prop_assert_eq!(w.bilinear(&v), v.bilinear(&w));
            let s = &w + &v;
            prop_assert_eq!(s.qform(), w.qform() + v.qform() + 2 * w.bilinear(&v));
        }
    }

    #[test]
    fn qform_matches_cartan_in_root_coordinates(w in lattice_point()) {
        let c = to_root_basis(&w);
        let mut coords = c.a.clone();
        coords.push(c.d);
        let g = cartan_matrix_jkn(w.k(), w.n());
        let mut q = 0;
        for (i, x) in coords.iter().enumerate() {
            for (j, y) in coords.iter().enumerate() {
                q += x * g[i][j] * y;
            }
        }
        prop_assert_eq!(q, w.qform());
    }
}

#[test]
fn gram_is_cartan() {
    for n in 3..=9 {
        for k in 1..n {
            assert_eq!(gram_matrix(k, n), cartan_matrix_jkn(k, n), "Gr({k},{n})");
        }
    }
}

#[test]
fn plucker_weights_are_roots() {
    for n in 3..=9 {
        for k in 1..n {
            assert!(KSubset::all(k, n).iter().all(|i| beta(i).qform() == 2));
        }
    }
}

#[test]
fn degree_one_variables_are_plucker_labels() {
    for (k, n) in [(2, 5), (2, 6), (2, 7), (3, 6), (3, 7)] {
        assert!(finite_type(k, n));
        let e = enumerate(k, n, &EnumerateOptions::with_budget(5000)).unwrap();
        let got: BTreeSet<Weight> = e
            .records
            .iter()
            .filter(|r| r.degree == 1)
            .map(|r| r.weight.clone())
            .collect();
        let want: BTreeSet<Weight> = KSubset::all(k, n).iter().map(beta).collect();
        assert_eq!(got, want, "Gr({k},{n})");
        assert_eq!(
            e.records.iter().filter(|r| r.degree == 1).count(),
            want.len()
        );
        assert!(e
            .records
            .iter()
            .all(|r| r.canonical.all_coefficients_positive()));
        assert_eq!(e.records.iter().filter(|r| r.frozen).count(), n);
    }
}

#[test]
fn enumeration_is_deterministic_and_seed_independent() {
    let a = enumerate(3, 6, &EnumerateOptions::with_budget(100)).unwrap();
    let b = enumerate(
        3,
        6,
        &EnumerateOptions {
            rng_seed: 7,
            ..EnumerateOptions::with_budget(100)
        },
    )
    .unwrap();
    assert_eq!(a.records, b.records);
    assert_eq!(census(&a.records), census(&b.records));
    assert_eq!(a.exchanges, b.exchanges);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_mutation_walks(path in prop::collection::vec(0usize..16, 1..12)) {
        let mut seed = initial_seed(3, 7).unwrap();
        let mutable = seed.mutable_vertices();
        for step in path {
            let m = mutable[step % mutable.len()];
            let next = mutate(&seed, m).unwrap();
            next.check_balance().unwrap();
            next.check_eigenfunctions().unwrap();
            prop_assert_eq!(&mutate(&next, m).unwrap(), &seed);
            seed = next;
        }
    }
}

#[test]
fn every_fixture_report_is_idempotent_json() {
    for name in FIXTURES.iter().filter(|n| !["gr37", "gr38"].contains(n)) {
        let a = run_check(name).unwrap();
        let b = run_check(name).unwrap();
        let ja = serde_json::to_value(&a).unwrap();
        assert_eq!(ja, serde_json::to_value(&b).unwrap());
        assert_eq!(ja["ok"], serde_json::Value::Bool(true), "{name}: {ja}");
        assert!(ja["assertions"].as_array().is_some_and(|v| !v.is_empty()));
    }
}

#[test]
fn gr38_window_matches_census() {
    let r = check_gr38();
    assert!(r.ok, "{}", serde_json::to_string_pretty(&r).unwrap());
}
