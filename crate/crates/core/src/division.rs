//! Exact division and roots of trees, by reduction to a forest equation on
//! the children of the root.

use dashmap::DashMap;
use once_cell::sync::Lazy;

use crate::forest::Forest;
use crate::solver::solve_terms;
use crate::tree::{Tree, RED_ZONE, STACK_SEGMENT};

static QUOTIENTS: Lazy<DashMap<(u64, u64), Option<Tree>>> = Lazy::new(DashMap::new);
static ROOTS: Lazy<DashMap<(u64, u32), Option<Tree>>> = Lazy::new(DashMap::new);

/// All `x` with `depth(x) = depth(t)` and `a × x = t`.
///
/// The product of same-depth trees is cancelable, so at most one quotient
/// exists; the result is a `Vec` only to make "not divisible" a plain value.
pub fn tree_divide(t: &Tree, a: &Tree) -> Vec<Tree> {
    quotient(t, a).into_iter().collect()
}

fn quotient(t: &Tree, a: &Tree) -> Option<Tree> {
    if t.is_leaf() {
        return Some(Tree::leaf());
    }
    if a.depth() < t.depth() {
        return None;
    }
    if a.is_path() {
        return Some(t.clone());
    }
    let key = (t.id(), a.id());
    if let Some(hit) = QUOTIENTS.get(&key) {
        return hit.clone();
    }
    let result = stacker::maybe_grow(RED_ZONE, STACK_SEGMENT, || {
        // a × x = t  ⇔  children(a) · children(x) = children(t), with a cut
        // to the depth of t
        let a_children: Forest = a.cut(t.depth()).children().iter().cloned().collect();
        let t_children: Forest = t.children().iter().cloned().collect();
        let x_children = solve_terms(&[(1, a_children)], &t_children, None)?;
        let x = Tree::from_children(x_children.trees().cloned().collect());
        (x.depth() == t.depth() && a.product(&x) == *t).then_some(x)
    });
    QUOTIENTS.insert(key, result.clone());
    result
}

/// The tree `x` with `x^k = t`, if any. `k` must be positive.
pub fn kth_root(t: &Tree, k: u32) -> Option<Tree> {
    assert!(k > 0, "root of order 0");
    if k == 1 || t.is_path() {
        return Some(t.clone());
    }
    let key = (t.id(), k);
    if let Some(hit) = ROOTS.get(&key) {
        return hit.clone();
    }
    let result = stacker::maybe_grow(RED_ZONE, STACK_SEGMENT, || {
        // the children of x^k are the k-fold products of children of x, and
        // the path one level shorter is the identity on them
        let identity = Forest::singleton(Tree::path(t.depth() - 1));
        let t_children: Forest = t.children().iter().cloned().collect();
        let x_children = solve_terms(&[(k, identity)], &t_children, None)?;
        let x = Tree::from_children(x_children.trees().cloned().collect());
        (x.pow(k) == *t).then_some(x)
    });
    ROOTS.insert(key, result.clone());
    result
}
