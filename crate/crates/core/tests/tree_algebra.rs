mod common;

use common::*;
use fdds::oracle::{brute_trees_isomorphic, enumerate_trees, enumerate_trees_up_to};
use fdds::{kth_root, tree_compare, tree_divide, Forest, Tree};
use proptest::prelude::*;
use rand::seq::SliceRandom;

#[test]
fn codes_identify_isomorphism_classes() {
    let trees = enumerate_trees_up_to(8).unwrap();
    let parents: Vec<Vec<usize>> = trees.iter().map(parents_of).collect();
    for (i, a) in trees.iter().enumerate() {
        assert_eq!(tree_from_parents(&parents[i]), *a);
        for (j, b) in trees.iter().enumerate() {
            if a.size() != b.size() {
                continue;
            }
            let same_code = a.canonical_code() == b.canonical_code();
            assert_eq!(
                same_code,
                brute_trees_isomorphic(&parents[i], &parents[j]),
                "{a} vs {b}"
            );
            assert_eq!(same_code, i == j);
        }
    }
}

#[test]
fn code_shape_invariants() {
    for t in enumerate_trees_up_to(8).unwrap() {
        let code = t.canonical_code();
        assert_eq!(code.len() as u64, 2 * t.size());
        assert_eq!(code.nesting_depth() as u32, t.depth() + 1);
        assert_eq!(Tree::from_code(&code).unwrap(), t);
        assert_eq!(t.to_string().parse::<Tree>().unwrap(), t);
    }
}

#[test]
fn order_is_total_and_matches_codes() {
    let trees = enumerate_trees_up_to(7).unwrap();
    for a in &trees {
        for b in &trees {
            let ord = tree_compare(a, b);
            assert_eq!(ord, b.cmp(a).reverse());
            assert_eq!(ord.is_eq(), a == b);
            assert_eq!(ord, a.canonical_code().cmp(&b.canonical_code()));
        }
    }
}

#[test]
fn cut_is_a_product_homomorphism() {
    let trees = enumerate_trees_up_to(7).unwrap();
    for a in &trees {
        for b in &trees {
            let ab = a.product(b);
            assert_eq!(ab.depth(), a.depth().min(b.depth()));
            for k in 0..=4 {
                assert_eq!(ab.cut(k), a.cut(k).product(&b.cut(k)));
            }
        }
    }
}

#[test]
fn division_agrees_with_brute_force() {
    let targets = enumerate_trees_up_to(8).unwrap();
    let divisors = enumerate_trees_up_to(5).unwrap();
    for t in &targets {
        for a in &divisors {
            // |a × x| ≥ |x| when depth(x) ≤ depth(a), so quotients are no larger than t
            let brute: Vec<Tree> = targets
                .iter()
                .filter(|x| x.size() <= t.size() && x.depth() == t.depth() && a.product(x) == *t)
                .cloned()
                .collect();
            assert_eq!(tree_divide(t, a), brute, "{t} / {a}");
        }
    }
}

#[test]
fn division_and_root_roundtrips() {
    let trees = enumerate_trees_up_to(7).unwrap();
    for a in &trees {
        for x in trees.iter().filter(|x| x.depth() <= a.depth()) {
            assert!(tree_divide(&a.product(x), a).contains(x), "{a} × {x}");
        }
    }
    for x in &trees {
        for k in 1..=3 {
            assert_eq!(kth_root(&x.pow(k), k).as_ref(), Some(x));
        }
    }
}

#[test]
fn roots_are_unique() {
    let trees = enumerate_trees_up_to(8).unwrap();
    for t in &trees {
        for k in 2..=3 {
            let brute: Vec<&Tree> = trees
                .iter()
                .filter(|x| x.depth() == t.depth() && x.pow(k) == *t)
                .collect();
            assert!(brute.len() <= 1);
            assert_eq!(kth_root(t, k).as_ref(), brute.first().copied(), "root {k} of {t}");
        }
    }
}

#[test]
fn forest_semiring_laws() {
    let mut rng = rng(11);
    for _ in 0..200 {
        let depth = 3;
        let gen = |rng: &mut TestRng| -> Forest { (0..3).map(|_| random_tree_of_depth(rng, depth, 3)).collect() };
        let (a, b, c) = (gen(&mut rng), gen(&mut rng), gen(&mut rng));
        assert_eq!(a.sum(&b), b.sum(&a));
        assert_eq!(a.product(&b), b.product(&a));
        assert_eq!(a.product(&b).product(&c), a.product(&b.product(&c)));
        assert_eq!(a.product(&b.sum(&c)), a.product(&b).sum(&a.product(&c)));
        assert_eq!(a.product(&Forest::singleton(Tree::path(depth))), a);
        assert_eq!(a.sum(&Forest::new()), a);
        assert_eq!(a.product(&b).len(), a.len() * b.len());
    }
}

#[test]
fn tree_counts_match_rooted_tree_sequence() {
    let counts: Vec<usize> = (1..=10).map(|n| enumerate_trees(n).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 4, 9, 20, 48, 115, 286, 719]);
}

proptest! {
    #[test]
    fn relabeling_does_not_change_the_tree(seed in any::<u64>(), n in 1usize..40) {
        let mut rng = rng(seed);
        let parents = random_parents(&mut rng, n);
        // relabel the non-root vertices, keeping parents numbered first
        let mut order: Vec<usize> = (1..n).collect();
        order.shuffle(&mut rng);
        let mut depth_first = vec![0];
        let mut label = vec![0usize; n];
        let mut placed = vec![false; n];
        placed[0] = true;
        while depth_first.len() < n {
            for &v in &order {
                if !placed[v] && placed[parents[v]] {
                    label[v] = depth_first.len();
                    depth_first.push(v);
                    placed[v] = true;
                }
            }
        }
        let relabeled: Vec<usize> = depth_first.iter().map(|&v| label[parents[v]]).collect();
        prop_assert_eq!(tree_from_parents(&relabeled), tree_from_parents(&parents));
    }

    #[test]
    fn power_monotonicity_random(seed in any::<u64>(), depth in 1u32..5) {
        let mut rng = rng(seed);
        let x = random_tree_of_depth(&mut rng, depth, 6);
        let y = random_tree_of_depth(&mut rng, depth, 6);
        for k in 1..=3 {
            prop_assert_eq!(x.pow(k).cmp(&y.pow(k)), x.cmp(&y));
        }
    }
}
