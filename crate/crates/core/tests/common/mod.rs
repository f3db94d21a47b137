#![allow(dead_code)]

use fdds::{Fdds, FddsPolynomial, Forest, ForestPolynomial, FunctionalGraph, Tree};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random recursive tree: vertex `i > 0` hangs below a uniform earlier vertex.
pub fn random_parents(rng: &mut TestRng, n: usize) -> Vec<usize> {
    (0..n).map(|i| if i == 0 { 0 } else { rng.gen_range(0..i) }).collect()
}

pub fn tree_from_parents(parents: &[usize]) -> Tree {
    let n = parents.len();
    let mut children: Vec<Vec<Tree>> = vec![Vec::new(); n];
    let mut built: Vec<Option<Tree>> = vec![None; n];
    for v in (0..n).rev() {
        let t = Tree::from_children(std::mem::take(&mut children[v]));
        if v > 0 {
            children[parents[v]].push(t);
        } else {
            built[0] = Some(t);
        }
    }
    built[0].take().expect("non-empty tree")
}

/// Parent array of `t` in preorder, root first.
pub fn parents_of(t: &Tree) -> Vec<usize> {
    let mut parents = vec![0];
    let mut stack = vec![(t.clone(), 0usize)];
    while let Some((node, id)) = stack.pop() {
        for c in node.children() {
            let cid = parents.len();
            parents.push(id);
            stack.push((c.clone(), cid));
        }
    }
    parents
}

pub fn random_tree(rng: &mut TestRng, n: usize) -> Tree {
    tree_from_parents(&random_parents(rng, n))
}

/// Random tree of depth exactly `depth` with about `extra` further nodes.
pub fn random_tree_of_depth(rng: &mut TestRng, depth: u32, extra: usize) -> Tree {
    let mut parents = vec![0];
    let mut level = vec![0u32];
    for d in 1..=depth {
        parents.push(parents.len() - 1);
        level.push(d);
    }
    for _ in 0..extra {
        let candidates: Vec<usize> = (0..parents.len()).filter(|&v| level[v] < depth).collect();
        if candidates.is_empty() {
            break;
        }
        let p = candidates[rng.gen_range(0..candidates.len())];
        parents.push(p);
        level.push(level[p] + 1);
    }
    tree_from_parents(&parents)
}

pub fn random_forest(rng: &mut TestRng, trees: usize, max_nodes: usize) -> Forest {
    (0..trees)
        .map(|_| {
            let n = rng.gen_range(1..=max_nodes);
            random_tree(rng, n)
        })
        .collect()
}

pub fn random_graph(rng: &mut TestRng, n: usize) -> FunctionalGraph {
    FunctionalGraph::new((0..n).map(|_| rng.gen_range(0..n)).collect())
}

/// Uniformly random function on `n` states, up to isomorphism.
pub fn random_fdds(rng: &mut TestRng, n: usize) -> Fdds {
    Fdds::from_graph(&random_graph(rng, n))
}

/// Random relabeling of the states of `g`.
pub fn shuffle_graph(rng: &mut TestRng, g: &FunctionalGraph) -> FunctionalGraph {
    use rand::seq::SliceRandom;
    let mut perm: Vec<usize> = (0..g.len()).collect();
    perm.shuffle(rng);
    let mut succ = vec![0; g.len()];
    for (v, &w) in g.succ.iter().enumerate() {
        succ[perm[v]] = perm[w];
    }
    FunctionalGraph::new(succ)
}

/// Random polynomial of degree at most `max_degree` with coefficients of at
/// most `coef_nodes` states; some non-constant coefficient is cancelable.
pub fn random_injective_poly(rng: &mut TestRng, max_degree: u32, coef_nodes: usize) -> FddsPolynomial {
    loop {
        let mut terms = Vec::new();
        for k in 0..=max_degree {
            if rng.gen_bool(if k == 0 { 0.3 } else { 0.6 }) {
                let n = rng.gen_range(1..=coef_nodes);
                terms.push((k, random_fdds(rng, n)));
            }
        }
        let p = FddsPolynomial::new(terms).unwrap();
        if p.non_constant().iter().any(|(_, a)| a.is_cancelable()) {
            return p;
        }
    }
}

/// Random forest polynomial with coefficient trees of depth at most
/// `max_depth`.
pub fn random_forest_poly(rng: &mut TestRng, max_degree: u32, max_depth: u32) -> ForestPolynomial {
    loop {
        let mut terms = Vec::new();
        for k in 0..=max_degree {
            if rng.gen_bool(if k == 0 { 0.3 } else { 0.6 }) {
                let count = rng.gen_range(1..=2);
                let f: Forest = (0..count)
                    .map(|_| {
                        let d = rng.gen_range(0..=max_depth);
                        let extra = rng.gen_range(0..=3);
                        random_tree_of_depth(rng, d, extra)
                    })
                    .collect();
                terms.push((k, f));
            }
        }
        let p = ForestPolynomial::new(terms).unwrap();
        if !p.non_constant().is_empty() {
            return p;
        }
    }
}
