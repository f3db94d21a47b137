//! Cuts of unrolls. The unroll tree of a periodic state `u` has as nodes the
//! finite paths ending in `u`; it is infinite, so only its restriction to a
//! given depth is ever built.

use std::cmp::Ordering;

use crate::component::Component;
use crate::error::{Error, Result};
use crate::forest::{Forest, Multiplicity};
use crate::poly::Polynomial;
use crate::system::Fdds;
use crate::tree::Tree;

/// Unroll trees of `c` cut at depth `n`, indexed like `c.trees()`.
pub fn unroll_trees(c: &Component, n: u32) -> Vec<Tree> {
    let p = c.cycle_length();
    let transients = c.trees();
    let mut level: Vec<Tree> = vec![Tree::leaf(); p];
    for m in 1..=n {
        let prev = level;
        level = (0..p)
            .map(|i| {
                let mut children: Vec<Tree> = transients[i].children().iter().map(|t| t.cut(m - 1)).collect();
                // state i is the image of periodic state i - 1
                children.push(prev[(i + p - 1) % p].clone());
                Tree::from_children(children)
            })
            .collect();
    }
    level
}

/// One tree per periodic state of `x`, each cut at depth `n`.
pub fn unroll_cut(x: &Fdds, n: u32) -> Forest {
    let mut out = Forest::new();
    for (c, &k) in x.iter() {
        out = out.sum(&component_unroll(c, n).scale(k));
    }
    out
}

fn component_unroll(c: &Component, n: u32) -> Forest {
    unroll_trees(c, n).into_iter().collect()
}

/// Depth at which the minimal unroll tree of `c` is looked up by default.
pub fn default_min_tree_depth(c: &Component) -> u32 {
    c.depth() + c.cycle_length() as u32
}

/// The least unroll tree of `c` cut at `n` (default: depth plus cycle
/// length).
pub fn min_unroll_tree_cut(c: &Component, n: Option<u32>) -> Tree {
    let n = n.unwrap_or_else(|| default_min_tree_depth(c));
    unroll_trees(c, n)
        .into_iter()
        .min()
        .expect("components have at least one periodic state")
}

/// Index into `c.trees()` of the periodic state whose unroll tree is least
/// at depth `n`; the first such index on ties.
pub fn min_unroll_index(c: &Component, n: u32) -> usize {
    let trees = unroll_trees(c, n);
    (0..trees.len()).min_by(|&i, &j| trees[i].cmp(&trees[j])).unwrap()
}

fn comparison_depth(c1: &Component, c2: &Component) -> u32 {
    c1.depth().max(c2.depth()) + (c1.cycle_length() + c2.cycle_length()) as u32
}

/// Cycle length first, then least unroll tree.
pub fn compare_cyclefirst(c1: &Component, c2: &Component) -> Ordering {
    c1.cycle_length().cmp(&c2.cycle_length()).then_with(|| {
        let n = comparison_depth(c1, c2);
        min_unroll_tree_cut(c1, Some(n)).cmp(&min_unroll_tree_cut(c2, Some(n)))
    })
}

/// Least unroll tree first, then cycle length.
pub fn compare_treefirst(c1: &Component, c2: &Component) -> Ordering {
    let n = comparison_depth(c1, c2);
    min_unroll_tree_cut(c1, Some(n))
        .cmp(&min_unroll_tree_cut(c2, Some(n)))
        .then_with(|| c1.cycle_length().cmp(&c2.cycle_length()))
}

/// `2α² + depth(b)` where `α` is the number of periodic states of `b`. The
/// polynomial does not enter the bound.
///
/// # Panics
/// If the bound does not fit in a `u32`.
pub fn default_cut_depth(_p: &Polynomial<Fdds>, b: &Fdds) -> u32 {
    let alpha = b.periodic_count();
    alpha
        .checked_mul(alpha)
        .and_then(|a| a.checked_mul(2))
        .and_then(|a| a.checked_add(b.depth() as u64))
        .and_then(|a| u32::try_from(a).ok())
        .expect("cut depth exceeds u32")
}

/// Rebuilds the component of cycle length `p` and transient depth at most `d`
/// one of whose unroll trees cut at `depth(t)` is `t`.
///
/// The spine is the path from the root through the deepest child; the
/// subtrees hanging off it at distance `j` from the root are the transient
/// tree of the state `j` steps before the root's state. Requires
/// `depth(t) ≥ d + 2p` so that two periods can be compared.
pub fn reroll(t: &Tree, p: usize, d: u32) -> Result<Component> {
    let not_periodic = Error::NotPeriodic { period: p };
    let n = t.depth();
    if p == 0 || (n as u64) < d as u64 + 2 * p as u64 {
        return Err(not_periodic);
    }
    let window = (n - d) as usize;
    let mut decorations: Vec<Tree> = Vec::with_capacity(window);
    let mut node = t;
    for j in 0..window {
        let expected = n - j as u32 - 1;
        let children = node.children();
        let spine = match children {
            [first, rest @ ..] if first.depth() == expected && rest.first().is_none_or(|r| r.depth() < expected) => {
                first
            }
            _ => return Err(not_periodic),
        };
        let decoration = Tree::from_children(children[1..].to_vec());
        if decoration.depth() > d {
            return Err(not_periodic);
        }
        if j >= p && decoration != decorations[j - p] {
            return Err(not_periodic);
        }
        decorations.push(decoration);
        node = spine;
    }
    // the state j steps upstream of the root holds decoration j
    let cycle: Vec<Tree> = decorations[..p].iter().rev().cloned().collect();
    let c = Component::new(cycle);
    if unroll_trees(&c, n).contains(t) {
        Ok(c)
    } else {
        Err(not_periodic)
    }
}

/// Rebuilds an FDDS whose unroll cut at `n` is `forest`, trying for each
/// least remaining tree the candidate periods in ascending order.
pub fn reroll_forest(forest: &Forest, periods: &[usize], d: u32) -> Result<Fdds> {
    let mut rest = forest.clone();
    let mut out = Fdds::new();
    while let Some(t) = rest.least().cloned() {
        let n = t.depth();
        let mut found = None;
        for &p in periods {
            let Ok(c) = reroll(&t, p, d) else { continue };
            let trees = component_unroll(&c, n);
            let copies: Multiplicity = rest.count(&t) / trees.count(&t);
            if let Some(r) = rest.checked_sub(&trees.scale(copies)) {
                found = Some((c, copies, r));
                break;
            }
        }
        let Some((c, copies, r)) = found else {
            return Err(Error::NotPeriodic {
                period: periods.first().copied().unwrap_or(0),
            });
        };
        out.insert(c, copies);
        rest = r;
    }
    Ok(out)
}
