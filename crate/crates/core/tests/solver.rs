mod common;

use common::*;
use fdds::oracle::{brute_forest_solve, brute_solve};
use fdds::{
    is_injective, solve_fdds, solve_forest, solve_unroll, solve_unroll_at, unroll_cut, verify, Error, Fdds,
    FddsPolynomial, Forest, ForestPolynomial, Status, Tree,
};
use rand::Rng;

#[test]
fn fdds_solver_agrees_with_brute_force_on_images() {
    let mut rng = rng(31);
    for _ in 0..60 {
        let p = random_injective_poly(&mut rng, 2, 2);
        let size = rng.gen_range(0..=5);
        let x = random_fdds(&mut rng, size);
        let b = p.evaluate(&x);
        let out = solve_fdds(&p, &b).unwrap();
        assert_eq!(out.value.as_ref(), Some(&x), "P = {p}, b = {b}");
        assert!(verify(&p, &x, &b));
        if b.node_count() <= 40 {
            assert_eq!(brute_solve(&p, &b, 6).unwrap(), vec![x]);
        }
    }
}

#[test]
fn fdds_solver_agrees_with_brute_force_on_arbitrary_targets() {
    let mut rng = rng(37);
    let mut unsolvable = 0;
    for _ in 0..150 {
        let p = random_injective_poly(&mut rng, 2, 2);
        let size = rng.gen_range(1..=7);
        let b = random_fdds(&mut rng, size);
        // |P(X)| ≥ |X| for any X, so no solution has more states than b
        let brute = brute_solve(&p, &b, size).unwrap();
        let out = solve_fdds(&p, &b).unwrap();
        assert!(brute.len() <= 1);
        assert_eq!(out.value, brute.first().cloned(), "P = {p}, b = {b}");
        if out.status == Status::NoSolution {
            unsolvable += 1;
        }
    }
    assert!(unsolvable > 50);
}

#[test]
fn non_injective_inputs_are_refused() {
    let c2 = Fdds::cycle(2);
    let p = FddsPolynomial::monomial(c2.clone(), 1);
    assert!(!is_injective(&p).unwrap());
    assert!(matches!(
        solve_fdds(&p, &c2.scale(6)),
        Err(Error::NotSupportedNonInjective)
    ));
    let constant = FddsPolynomial::new([(0, c2.clone())]).unwrap();
    assert!(solve_fdds(&constant, &c2).is_err());
}

#[test]
fn unroll_solutions_cover_every_fdds_solution() {
    // over unrolls every polynomial is injective, so all FDDS solutions of a
    // non-injective equation share one unroll, and solve_unroll finds it
    let mut rng = rng(41);
    let mut multiple = 0;
    for _ in 0..60 {
        let cycles: Vec<usize> = (0..rng.gen_range(1..=2)).map(|_| rng.gen_range(2..=3)).collect();
        let coefficient: Fdds = cycles
            .iter()
            .map(|&c| Fdds::cycle(c))
            .fold(Fdds::new(), |a, c| a.sum(&c));
        let k = rng.gen_range(1..=2);
        let p = FddsPolynomial::monomial(coefficient, k);
        let size = rng.gen_range(1..=4);
        let x = random_fdds(&mut rng, size);
        let b = p.evaluate(&x);
        let brute = brute_solve(&p, &b, 6).unwrap();
        assert!(brute.contains(&x));
        if brute.len() > 1 {
            multiple += 1;
        }
        let n = b.depth() + 12;
        for y in &brute {
            assert_eq!(unroll_cut(y, n), unroll_cut(&x, n));
        }
        let out = solve_unroll(&p, &b).unwrap();
        let found = out.value.expect("unroll equation with a known solution");
        assert_eq!(unroll_cut(&p.evaluate(&found), n), unroll_cut(&b, n));
        assert_eq!(unroll_cut(&found, n), unroll_cut(&x, n));
    }
    assert!(multiple > 5, "{multiple}");
}

#[test]
fn unroll_solver_is_stable_in_the_cut_depth() {
    let mut rng = rng(43);
    for _ in 0..30 {
        let p = random_injective_poly(&mut rng, 2, 3);
        let size = rng.gen_range(1..=5);
        let b = p.evaluate(&random_fdds(&mut rng, size));
        let default = solve_unroll(&p, &b).unwrap();
        assert!(default.is_solution());
        let x = default.value.unwrap();
        let n = fdds::default_cut_depth(&p, &b);
        let deeper = solve_unroll_at(&p, &b, n + 3).unwrap();
        let deep_x = deeper.value.unwrap();
        assert_eq!(unroll_cut(&deep_x, n + 3), unroll_cut(&x, n + 3));
    }
}

fn random_small_forest(rng: &mut TestRng, max_depth: u32, budget: usize) -> Forest {
    let mut f = Forest::new();
    let mut used = 0;
    while used < budget && rng.gen_bool(0.7) {
        let d = rng.gen_range(0..=max_depth);
        let extra = rng.gen_range(0..=1);
        let t = random_tree_of_depth(rng, d, extra);
        if used + t.size() as usize > budget {
            break;
        }
        used += t.size() as usize;
        f.insert(t, 1);
    }
    f
}

#[test]
fn forest_solver_agrees_with_brute_force() {
    let mut rng = rng(47);
    let mut solved = 0;
    for round in 0..80 {
        let p = random_forest_poly(&mut rng, 2, 2);
        let d_max = p.non_constant().iter().filter_map(|(_, a)| a.depth()).max().unwrap();
        let b = if round % 2 == 0 {
            p.evaluate(&random_small_forest(&mut rng, d_max, 6))
        } else {
            random_small_forest(&mut rng, 3, 8)
        };
        let out = solve_forest(&p, &b).unwrap();
        let brute = brute_forest_solve(&p, &b, d_max, 7).unwrap();
        if let Some(x) = &out.value {
            assert_eq!(p.evaluate(x), b);
            assert!(x.depth().is_none_or(|d| d <= d_max));
            solved += 1;
        }
        if out.value.as_ref().is_none_or(|x| x.size() <= 7) {
            assert_eq!(
                brute,
                out.value.iter().cloned().collect::<Vec<_>>(),
                "P = {p:?}, b = {b:?}"
            );
        }
    }
    assert!(solved >= 40);
}

#[test]
fn forest_solver_examples() {
    // {•}X + {•}X² over paths: X = {path 2} gives {path 2, path 2}
    let one = Forest::singleton(Tree::path(2));
    let p = ForestPolynomial::new([(1, one.clone()), (2, one.clone())]).unwrap();
    let b = Forest::with_count(Tree::path(2), 2);
    assert_eq!(solve_forest(&p, &b).unwrap().value, Some(one));
    let out = solve_forest(&p, &Forest::with_count(Tree::path(2), 3)).unwrap();
    assert_eq!(out.status, Status::NoSolution);
    assert!(!out.trace.is_empty());
}
