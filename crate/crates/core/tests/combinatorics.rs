use grasscat::profiles::{
    contours_of, dimvec_of, height, is_close_packed, pinch_decompose, profile_of, rows_needed,
};
use grasscat::rankone::{
    ext_dim, ext_vanishes, hom_min_exponent, presentation, projective_label, syzygy_profile,
};
use grasscat::subsets::{cyclic_intervals, extend_to_maximal_ws, short_plucker, weakly_separated};
use grasscat::weights::{beta, class_of_profile, enumerate_roots, finite_type};
use grasscat::{DimWindow, KSubset, Profile, Weight};
use proptest::prelude::*;

/// Crossing definition: no `a < b < c < d` in cyclic order with `a, c` in
/// `I \ J` and `b, d` in `J \ I`, or the other way round.
fn crossing_free(i: &KSubset, j: &KSubset) -> bool {
    let a: Vec<usize> = i.difference(j);
    let b: Vec<usize> = j.difference(i);
    let crosses = |x: &[usize], y: &[usize]| {
        x.iter().any(|&p| {
            x.iter().any(|&r| {
                p < r && y.iter().any(|&q| p < q && q < r) && y.iter().any(|&s| s < p || s > r)
            })
        })
    };
    !crosses(&a, &b) && !crosses(&b, &a)
}

fn small_grassmannians() -> Vec<(usize, usize)> {
    (1..=3)
        .flat_map(|k| (k + 1..=8).map(move |n| (k, n)))
        .collect()
}

#[test]
fn weak_separation_against_crossing_oracle() {
    for (k, n) in small_grassmannians() {
        let all = KSubset::all(k, n);
        for i in &all {
            for j in &all {
                assert_eq!(
                    weakly_separated(i, j).unwrap(),
                    crossing_free(i, j),
                    "{i} {j}"
                );
            }
        }
    }
}

#[test]
fn ext_criterion_exhaustive() {
    for (k, n) in small_grassmannians() {
        let all = KSubset::all(k, n);
        for i in &all {
            for j in &all {
                let v = ext_vanishes(i, j).unwrap();
                let d = ext_dim(i, j).unwrap();
                assert_eq!(v, weakly_separated(i, j).unwrap(), "{i} {j}");
                assert_eq!(v, d == 0, "{i} {j}");
                assert_eq!(d, ext_dim(j, i).unwrap(), "{i} {j}");
            }
        }
    }
}

#[test]
fn hom_reciprocity_for_separated_pairs() {
    for (k, n) in small_grassmannians() {
        let all = KSubset::all(k, n);
        for i in &all {
            for j in all.iter().filter(|j| weakly_separated(i, j).unwrap()) {
                let a = hom_min_exponent(i, j).unwrap().alpha;
                let b = hom_min_exponent(j, i).unwrap().alpha;
                let want = i.difference(j).len() as u32;
                assert!(a.iter().zip(&b).all(|(x, y)| x + y == want), "{i} {j}");
            }
        }
    }
}

#[test]
fn hom_reciprocity_fails_for_crossing_pairs() {
    let i = KSubset::parse("135", 6).unwrap();
    let j = KSubset::parse("246", 6).unwrap();
    let a = hom_min_exponent(&i, &j).unwrap().alpha;
    let b = hom_min_exponent(&j, &i).unwrap().alpha;
    let sum: Vec<u32> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
    assert_eq!(sum, vec![1; 6]);
    assert_eq!(i.difference(&j).len(), 3);
}

#[test]
fn maximal_collections() {
    for (k, n) in small_grassmannians() {
        let coll = extend_to_maximal_ws(&cyclic_intervals(k, n), k, n).unwrap();
        assert_eq!(coll.len(), k * (n - k) + 1, "Gr({k},{n})");
        assert!(cyclic_intervals(k, n).iter().all(|c| coll.contains(c)));
        for i in &coll {
            for j in &coll {
                assert!(ext_vanishes(i, j).unwrap());
            }
        }
    }
}

#[test]
fn presentation_classes() {
    for (k, n) in small_grassmannians() {
        for i in KSubset::all(k, n) {
            let p = presentation(&i);
            let top = p.gens.iter().fold(Weight::zero(k, n), |acc, &u| {
                &acc + &beta(&projective_label(u, k, n).unwrap())
            });
            let omega = class_of_profile(&syzygy_profile(&i).unwrap());
            assert_eq!(top, &omega + &beta(&i), "{i}");
        }
    }
}

#[test]
fn short_plucker_is_homogeneous() {
    let t = short_plucker(&[2], [1, 3, 4, 6], 3, 6).unwrap();
    assert_eq!(t.to_string(), "P124*P236 = P123*P246 + P126*P234");
    let w = |(a, b): &(KSubset, KSubset)| &beta(a) + &beta(b);
    assert_eq!(w(&t.lhs), w(&t.term1));
    assert_eq!(w(&t.lhs), w(&t.term2));
}

#[test]
fn degree_one_roots_are_labels() {
    for (k, n) in small_grassmannians()
        .into_iter()
        .filter(|&(k, n)| k >= 2 && finite_type(k, n))
    {
        let mut roots = enumerate_roots(k, n, 1).unwrap();
        let mut labels: Vec<Weight> = KSubset::all(k, n).iter().map(beta).collect();
        roots.sort();
        labels.sort();
        assert_eq!(roots, labels, "Gr({k},{n})");
    }
}

fn subset(k: usize, n: usize) -> impl Strategy<Value = KSubset> {
    prop::sample::subsequence((1..=n).collect::<Vec<_>>(), k)
        .prop_map(move |e| KSubset::new(n, e).unwrap())
}

fn grassmannian() -> impl Strategy<Value = (usize, usize)> {
    (2usize..=9).prop_flat_map(|n| (1..n, Just(n)))
}

fn pair() -> impl Strategy<Value = (KSubset, KSubset)> {
    grassmannian().prop_flat_map(|(k, n)| (subset(k, n), subset(k, n)))
}

/// Random profile: random layers stacked minimally, then pushed apart.
fn profile() -> impl Strategy<Value = Profile> {
    (4usize..=8)
        .prop_flat_map(|n| (2..n - 1, Just(n)))
        .prop_flat_map(|(k, n)| {
            (
                prop::collection::vec(subset(k, n), 1..=4),
                prop::collection::vec(0i64..=2, 4),
            )
        })
        .prop_map(|(layers, extra)| {
            let p = Profile::stacked(layers.clone()).unwrap();
            let mut push = 0;
            let offsets: Vec<i64> = p
                .offsets()
                .iter()
                .zip(&extra)
                .map(|(o, e)| {
                    push += e;
                    o + push - extra[0]
                })
                .collect();
            Profile::new(layers, offsets).unwrap()
        })
}

fn rotate_profile(p: &Profile, s: i64) -> Profile {
    let base = height(&p.layers()[0], -s);
    let layers = p.layers().iter().map(|l| l.rotate(s)).collect();
    let offsets = p
        .layers()
        .iter()
        .zip(p.offsets())
        .map(|(l, o)| o - (height(l, -s) - base) / 2)
        .collect();
    Profile::new(layers, offsets).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn weak_separation_symmetric_and_rotation_invariant((i, j) in pair(), s in 0i64..9) {
        prop_assert!(weakly_separated(&i, &i).unwrap());
        prop_assert_eq!(weakly_separated(&i, &j).unwrap(), weakly_separated(&j, &i).unwrap());
        prop_assert_eq!(
            weakly_separated(&i, &j).unwrap(),
            weakly_separated(&i.rotate(s), &j.rotate(s)).unwrap()
        );
    }

    #[test]
    fn hom_exponents_are_normalised((i, j) in pair()) {
        let a = hom_min_exponent(&i, &j).unwrap().alpha;
        prop_assert_eq!(a.len(), i.n());
        prop_assert_eq!(*a.iter().min().unwrap(), 0);
        if i == j {
            prop_assert!(a.iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn profile_round_trip(p in profile()) {
        let w = dimvec_of(&p, rows_needed(&p)).unwrap();
        prop_assert_eq!(&profile_of(&w).unwrap(), &p);
        prop_assert_eq!(contours_of(&w).unwrap().len(), p.rank());
        let bigger = dimvec_of(&p, rows_needed(&p) + 2).unwrap();
        prop_assert_eq!(&profile_of(&bigger).unwrap(), &p);
    }

    #[test]
    fn pinch_summands_add_up(p in profile()) {
        let w = dimvec_of(&p, rows_needed(&p)).unwrap();
        let parts = pinch_decompose(&w).unwrap();
        prop_assert_eq!(DimWindow::sum(&parts), Some(w));
        let mut total = Weight::zero(p.k(), p.n());
        for part in &parts {
            let q = profile_of(part).unwrap();
            prop_assert!(is_close_packed(&q), "{}", q.to_string_with_offsets());
            total = &total + &class_of_profile(&q);
        }
        prop_assert_eq!(total, class_of_profile(&p));
        prop_assert_eq!(parts.len() == 1, is_close_packed(&p));
    }

    #[test]
    fn close_packing_rotation_invariant(p in profile(), s in 1i64..8) {
        let r = rotate_profile(&p, s);
        prop_assert_eq!(is_close_packed(&r), is_close_packed(&p));
        prop_assert_eq!(rotate_profile(&r, p.n() as i64 - s), p);
    }
}
