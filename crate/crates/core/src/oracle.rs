//! Exhaustive enumerations and brute-force reference answers for small
//! sizes.

use std::collections::BTreeSet;

use crate::component::Component;
use crate::error::{Error, Result};
use crate::forest::Forest;
use crate::graph::FunctionalGraph;
use crate::poly::Polynomial;
use crate::system::Fdds;
use crate::tree::Tree;

/// Largest node count the enumerators accept.
pub const MAX_NODES: usize = 10;

fn check_limit(n: usize) -> Result<()> {
    if n > MAX_NODES {
        Err(Error::LimitExceeded(format!("{n} nodes (at most {MAX_NODES})")))
    } else {
        Ok(())
    }
}

/// Multisets of items drawn from `by_size[s]` (items of weight `s`) with
/// total weight exactly `total`. Items are picked in non-increasing
/// `(size, index)` order so each multiset is produced once.
fn multisets<T: Clone>(by_size: &[Vec<T>], total: usize) -> Vec<Vec<T>> {
    fn go<T: Clone>(
        by_size: &[Vec<T>],
        remaining: usize,
        bound: (usize, usize),
        current: &mut Vec<T>,
        out: &mut Vec<Vec<T>>,
    ) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for size in (1..=remaining.min(bound.0)).rev() {
            let top = if size == bound.0 {
                bound.1 + 1
            } else {
                by_size[size].len()
            };
            for index in (0..top.min(by_size[size].len())).rev() {
                current.push(by_size[size][index].clone());
                go(by_size, remaining - size, (size, index), current, out);
                current.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(by_size, total, (total, usize::MAX - 1), &mut Vec::new(), &mut out);
    out
}

fn trees_by_size(max: usize) -> Vec<Vec<Tree>> {
    let mut by_size: Vec<Vec<Tree>> = vec![Vec::new(); max + 1];
    for n in 1..=max {
        let mut level: Vec<Tree> = multisets(&by_size, n - 1)
            .into_iter()
            .map(Tree::from_children)
            .collect();
        level.sort();
        by_size[n] = level;
    }
    by_size
}

/// One tree per isomorphism class with exactly `n` nodes, ascending.
pub fn enumerate_trees(n: usize) -> Result<Vec<Tree>> {
    check_limit(n)?;
    Ok(trees_by_size(n).pop().unwrap_or_default())
}

/// All trees with 1 to `max_nodes` nodes, by size then ascending.
pub fn enumerate_trees_up_to(max_nodes: usize) -> Result<Vec<Tree>> {
    check_limit(max_nodes)?;
    Ok(trees_by_size(max_nodes).into_iter().flatten().collect())
}

/// Sequences of trees of length `p` with total size `total`.
fn tree_sequences(trees: &[Vec<Tree>], p: usize, total: usize, out: &mut Vec<Vec<Tree>>, cur: &mut Vec<Tree>) {
    if cur.len() == p {
        if total == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let slots_left = p - cur.len();
    if total < slots_left {
        return;
    }
    for size in 1..=total - (slots_left - 1) {
        for t in &trees[size] {
            cur.push(t.clone());
            tree_sequences(trees, p, total - size, out, cur);
            cur.pop();
        }
    }
}

fn components_by_size(max: usize) -> Vec<Vec<Component>> {
    let trees = trees_by_size(max);
    let mut by_size = vec![Vec::new(); max + 1];
    for (n, slot) in by_size.iter_mut().enumerate().skip(1) {
        let mut set = BTreeSet::new();
        for p in 1..=n {
            let mut seqs = Vec::new();
            tree_sequences(&trees, p, n, &mut seqs, &mut Vec::new());
            set.extend(seqs.into_iter().map(Component::new));
        }
        *slot = set.into_iter().collect();
    }
    by_size
}

/// One connected FDDS per isomorphism class with exactly `n` nodes.
pub fn enumerate_components(n: usize) -> Result<Vec<Component>> {
    check_limit(n)?;
    Ok(components_by_size(n).pop().unwrap_or_default())
}

/// One FDDS per isomorphism class with exactly `n` nodes, ascending.
pub fn enumerate_fdds(n: usize) -> Result<Vec<Fdds>> {
    check_limit(n)?;
    let comps = components_by_size(n);
    let mut out: Vec<Fdds> = multisets(&comps, n)
        .into_iter()
        .map(|cs| cs.into_iter().collect())
        .collect();
    out.sort();
    Ok(out)
}

/// All FDDS with at most `max_nodes` nodes, the empty one included, by size.
pub fn enumerate_fdds_up_to(max_nodes: usize) -> Result<Vec<Fdds>> {
    check_limit(max_nodes)?;
    let mut out = Vec::new();
    for n in 0..=max_nodes {
        out.extend(enumerate_fdds(n)?);
    }
    Ok(out)
}

/// Every FDDS `X` with at most `max_nodes` nodes and `P(X) = b`.
pub fn brute_solve(p: &Polynomial<Fdds>, b: &Fdds, max_nodes: usize) -> Result<Vec<Fdds>> {
    Ok(enumerate_fdds_up_to(max_nodes)?
        .into_iter()
        .filter(|x| p.evaluate(x) == *b)
        .collect())
}

/// Every forest `X` of trees of depth at most `max_depth`, with at most
/// `max_nodes` nodes in total, such that `P(X) = b`.
pub fn brute_forest_solve(p: &Polynomial<Forest>, b: &Forest, max_depth: u32, max_nodes: usize) -> Result<Vec<Forest>> {
    check_limit(max_nodes)?;
    let by_size: Vec<Vec<Tree>> = trees_by_size(max_nodes)
        .into_iter()
        .map(|ts| ts.into_iter().filter(|t| t.depth() <= max_depth).collect())
        .collect();
    let mut out = Vec::new();
    for n in 0..=max_nodes {
        for trees in multisets(&by_size, n) {
            let x: Forest = trees.into_iter().collect();
            if p.evaluate(&x) == *b {
                out.push(x);
            }
        }
    }
    Ok(out)
}

/// Isomorphism of functional graphs by backtracking over vertex bijections,
/// pruned only by in-degree. Meant for graphs of at most a few nodes.
pub fn brute_isomorphic(a: &FunctionalGraph, b: &FunctionalGraph) -> bool {
    fn indegrees(g: &FunctionalGraph) -> Vec<usize> {
        let mut d = vec![0; g.len()];
        for &w in &g.succ {
            d[w] += 1;
        }
        d
    }
    fn extend(
        a: &FunctionalGraph,
        b: &FunctionalGraph,
        da: &[usize],
        db: &[usize],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let v = map.len();
        if v == a.len() {
            return (0..v).all(|u| map[a.succ[u]] == b.succ[map[u]]);
        }
        for w in 0..b.len() {
            if used[w] || da[v] != db[w] {
                continue;
            }
            // edges between already mapped vertices must agree
            let consistent = (0..v).all(|u| (a.succ[u] == v) == (b.succ[map[u]] == w))
                && (a.succ[v] >= v || map[a.succ[v]] == b.succ[w]);
            if !consistent {
                continue;
            }
            map.push(w);
            used[w] = true;
            if extend(a, b, da, db, map, used) {
                return true;
            }
            used[w] = false;
            map.pop();
        }
        false
    }
    if a.len() != b.len() {
        return false;
    }
    let (da, db) = (indegrees(a), indegrees(b));
    extend(a, b, &da, &db, &mut Vec::new(), &mut vec![false; b.len()])
}

/// Isomorphism of rooted trees given as parent arrays (`parent[0]` is
/// ignored; vertex 0 is the root), by backtracking over bijections.
pub fn brute_trees_isomorphic(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    // a rooted tree is a functional graph once the root maps to itself
    let close = |p: &[usize]| {
        let mut succ = p.to_vec();
        if !succ.is_empty() {
            succ[0] = 0;
        }
        FunctionalGraph::new(succ)
    };
    brute_isomorphic(&close(a), &close(b))
}
