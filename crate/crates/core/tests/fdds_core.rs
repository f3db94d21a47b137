mod common;

use common::*;
use fdds::oracle::{brute_isomorphic, enumerate_fdds_up_to};
use fdds::{Fdds, FunctionalGraph};
use num_integer::Integer;
use proptest::prelude::*;
use rand::Rng;

#[test]
fn canonical_form_decides_isomorphism() {
    let mut rng = rng(3);
    let (mut same, mut different) = (0, 0);
    for _ in 0..3000 {
        let n = rng.gen_range(1..=7);
        let a = random_graph(&mut rng, n);
        let b = if rng.gen_bool(0.5) {
            shuffle_graph(&mut rng, &a)
        } else {
            random_graph(&mut rng, n)
        };
        let canonical_equal = Fdds::from_graph(&a) == Fdds::from_graph(&b);
        assert_eq!(
            canonical_equal,
            brute_isomorphic(&a, &b),
            "{:?} vs {:?}",
            a.succ,
            b.succ
        );
        if canonical_equal {
            same += 1;
        } else {
            different += 1;
        }
    }
    assert!(same > 1000 && different > 500);
}

#[test]
fn enumerated_classes_are_pairwise_distinct() {
    let all = enumerate_fdds_up_to(5).unwrap();
    let graphs: Vec<FunctionalGraph> = all.iter().map(Fdds::to_graph).collect();
    for (i, a) in graphs.iter().enumerate() {
        assert_eq!(Fdds::from_graph(a), all[i]);
        for (j, b) in graphs.iter().enumerate() {
            if a.len() == b.len() {
                assert_eq!(brute_isomorphic(a, b), i == j);
            }
        }
    }
}

#[test]
fn products_match_explicit_graphs() {
    let mut rng = rng(5);
    for _ in 0..300 {
        let (a, b) = (random_graph(&mut rng, 6), random_graph(&mut rng, 5));
        let (x, y) = (Fdds::from_graph(&a), Fdds::from_graph(&b));
        assert_eq!(x.product(&y), Fdds::from_graph(&a.product(&b)));
        assert_eq!(x.sum(&y), Fdds::from_graph(&a.disjoint_union(&b)));
        assert_eq!(x.product(&y).node_count(), x.node_count() * y.node_count());
    }
}

#[test]
fn cycle_products_follow_gcd_and_lcm() {
    for a in 1..=12usize {
        for b in 1..=12usize {
            let expected = Fdds::cycle(a.lcm(&b)).scale(a.gcd(&b) as u64);
            assert_eq!(Fdds::cycle(a).product(&Fdds::cycle(b)), expected);
        }
    }
}

#[test]
fn set_dive_is_an_endomorphism() {
    let mut rng = rng(9);
    for _ in 0..200 {
        let x = random_fdds(&mut rng, 8);
        let y = random_fdds(&mut rng, 8);
        for p in 1..=6 {
            assert_eq!(x.sum(&y).set_dive(p), x.set_dive(p).sum(&y.set_dive(p)));
            assert_eq!(x.product(&y).set_dive(p), x.set_dive(p).product(&y.set_dive(p)));
            assert!(x.set_dive(p).contains(&x.set_size(p)));
        }
    }
}

#[test]
fn cancelable_coefficients_cancel() {
    let small = enumerate_fdds_up_to(4).unwrap();
    for a in enumerate_fdds_up_to(3).unwrap().iter().filter(|a| a.is_cancelable()) {
        let mut products: Vec<Fdds> = small.iter().map(|x| a.product(x)).collect();
        products.sort();
        products.dedup();
        assert_eq!(products.len(), small.len(), "{a}");
    }
    // C₂ is not cancelable: C₂·2C₁ = C₂·C₂
    let c2 = Fdds::cycle(2);
    assert!(!c2.is_cancelable());
    assert_eq!(c2.product(&Fdds::one().scale(2)), c2.product(&c2));
}

#[test]
fn subtraction_inverts_sum() {
    let mut rng = rng(13);
    for _ in 0..200 {
        let x = random_fdds(&mut rng, 7);
        let y = random_fdds(&mut rng, 7);
        let s = x.sum(&y);
        assert_eq!(s.checked_sub(&y), Some(x.clone()));
        assert!(s.contains(&x));
        if !x.is_empty() && x != y {
            assert!(y.checked_sub(&s).is_none());
        }
    }
}

#[test]
fn parse_rejects_bad_input_with_position() {
    let err = Fdds::parse("a b\nb a\nc").unwrap_err().to_string();
    assert!(err.contains("line 3"), "{err}");
    let err = Fdds::parse("1*2:[(),()]\n1*2:[(),(]").unwrap_err().to_string();
    assert!(err.contains("line 2"), "{err}");
    // a state with two successors is not a function
    assert!(Fdds::parse("a b\na c\nb b\nc c").is_err());
    assert_eq!(Fdds::parse("0").unwrap(), Fdds::new());
}

proptest! {
    #[test]
    fn canonicalize_is_idempotent_and_label_free(seed in any::<u64>(), n in 0usize..30) {
        let mut rng = rng(seed);
        let g = random_graph(&mut rng, n);
        let x = Fdds::from_graph(&g);
        prop_assert_eq!(x.canonicalize(), x.clone());
        prop_assert_eq!(Fdds::from_graph(&shuffle_graph(&mut rng, &g)), x.clone());
        prop_assert_eq!(x.node_count(), n as u64);
        prop_assert_eq!(x.to_string().parse::<Fdds>().unwrap(), x);
    }

    #[test]
    fn semiring_laws(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let x = random_fdds(&mut rng, 6);
        let y = random_fdds(&mut rng, 6);
        let z = random_fdds(&mut rng, 5);
        prop_assert_eq!(x.product(&y), y.product(&x));
        prop_assert_eq!(x.product(&y.sum(&z)), x.product(&y).sum(&x.product(&z)));
        prop_assert_eq!(x.product(&y).product(&z), x.product(&y.product(&z)));
        prop_assert_eq!(x.product(&Fdds::one()), x.clone());
        prop_assert_eq!(x.pow(2), x.product(&x));
    }
}
