//! Finite rooted unordered trees.
//!
//! Trees are hash-consed: every structurally distinct tree exists once in a
//! process-wide table, so isomorphism is pointer identity and deep trees that
//! share subtrees (cuts of unroll trees in particular) cost memory
//! proportional to their number of distinct subtrees, not to their size.
//!
//! Children are stored in non-increasing order of the tree order. The order
//! itself is the lexicographic order of [`CanonicalCode`]s with `)` < `(`,
//! which amounts to: deeper trees are larger, and trees of equal depth compare
//! their child sequences lexicographically, a proper prefix being smaller.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::Arc;

use dashmap::DashMap;
use once_cell::sync::Lazy;

use crate::error::{Error, Result};

/// Stack left untouched before a recursive call spills to a fresh segment.
pub(crate) const RED_ZONE: usize = 128 * 1024;
/// Size of each extra stack segment allocated for deep recursions.
pub(crate) const STACK_SEGMENT: usize = 8 * 1024 * 1024;

static NEXT_ID: AtomicU64 = AtomicU64::new(0);
static INTERNER: Lazy<DashMap<Box<[u64]>, Tree>> = Lazy::new(DashMap::new);
static PRODUCTS: Lazy<DashMap<(u64, u64), Tree>> = Lazy::new(DashMap::new);
static CUTS: Lazy<DashMap<(u64, u32), Tree>> = Lazy::new(DashMap::new);

struct Node {
    id: u64,
    children: Box<[Tree]>,
    depth: u32,
    size: u64,
    path: bool,
}

/// A finite rooted unordered tree, up to isomorphism.
#[derive(Clone)]
pub struct Tree(Arc<Node>);

impl Tree {
    /// The tree with a single node.
    pub fn leaf() -> Tree {
        Tree::from_children(Vec::new())
    }

    /// The path with `depth` edges, identity of the product on trees of
    /// depth at most `depth`.
    pub fn path(depth: u32) -> Tree {
        let mut t = Tree::leaf();
        for _ in 0..depth {
            t = Tree::from_children(vec![t]);
        }
        t
    }

    /// A root with `n` leaf children.
    pub fn star(n: usize) -> Tree {
        Tree::from_children(vec![Tree::leaf(); n])
    }

    /// Builds the tree whose root has the given subtrees, in any order.
    pub fn from_children(mut children: Vec<Tree>) -> Tree {
        children.sort_unstable_by(|a, b| b.cmp(a));
        let key: Box<[u64]> = children.iter().map(|c| c.0.id).collect();
        if let Some(t) = INTERNER.get(&key) {
            return t.clone();
        }
        INTERNER
            .entry(key)
            .or_insert_with(|| {
                let depth = children.iter().map(|c| c.depth() + 1).max().unwrap_or(0);
                let size = 1 + children.iter().map(|c| c.size()).sum::<u64>();
                let path = match children.as_slice() {
                    [] => true,
                    [only] => only.is_path(),
                    _ => false,
                };
                Tree(Arc::new(Node {
                    id: NEXT_ID.fetch_add(1, AtomicOrdering::Relaxed),
                    children: children.into_boxed_slice(),
                    depth,
                    size,
                    path,
                }))
            })
            .clone()
    }

    /// Subtrees of the root, in non-increasing order.
    pub fn children(&self) -> &[Tree] {
        &self.0.children
    }

    /// Number of edges on a longest root-to-leaf path.
    pub fn depth(&self) -> u32 {
        self.0.depth
    }

    /// Number of nodes.
    pub fn size(&self) -> u64 {
        self.0.size
    }

    pub fn is_leaf(&self) -> bool {
        self.0.children.is_empty()
    }

    pub fn is_path(&self) -> bool {
        self.0.path
    }

    /// Process-wide identifier of this isomorphism class.
    pub(crate) fn id(&self) -> u64 {
        self.0.id
    }

    /// Levelwise product: vertices are pairs of equal-depth vertices and
    /// edges are pairs of edges, so the result has the smaller depth.
    pub fn product(&self, other: &Tree) -> Tree {
        if self.is_leaf() || other.is_leaf() {
            return Tree::leaf();
        }
        if self.is_path() && self.depth() >= other.depth() {
            return other.clone();
        }
        if other.is_path() && other.depth() >= self.depth() {
            return self.clone();
        }
        let key = if self.id() <= other.id() {
            (self.id(), other.id())
        } else {
            (other.id(), self.id())
        };
        if let Some(t) = PRODUCTS.get(&key) {
            return t.clone();
        }
        let result = stacker::maybe_grow(RED_ZONE, STACK_SEGMENT, || {
            let mut children = Vec::with_capacity(self.children().len() * other.children().len());
            for a in self.children() {
                for b in other.children() {
                    children.push(a.product(b));
                }
            }
            Tree::from_children(children)
        });
        PRODUCTS.insert(key, result.clone());
        result
    }

    /// `self` multiplied by itself `k` times; the 0-th power is the path of
    /// the same depth.
    pub fn pow(&self, k: u32) -> Tree {
        let mut acc = Tree::path(self.depth());
        for _ in 0..k {
            acc = acc.product(self);
        }
        acc
    }

    /// Restriction to the vertices at depth at most `k`.
    pub fn cut(&self, k: u32) -> Tree {
        if self.depth() <= k {
            return self.clone();
        }
        if k == 0 {
            return Tree::leaf();
        }
        let key = (self.id(), k);
        if let Some(t) = CUTS.get(&key) {
            return t.clone();
        }
        let result = stacker::maybe_grow(RED_ZONE, STACK_SEGMENT, || {
            Tree::from_children(self.children().iter().map(|c| c.cut(k - 1)).collect())
        });
        CUTS.insert(key, result.clone());
        result
    }

    pub fn canonical_code(&self) -> CanonicalCode {
        let mut word = Vec::with_capacity(2 * self.size() as usize);
        // explicit stack: unroll cuts can be far deeper than the call stack
        let mut stack: Vec<(&Tree, usize)> = vec![(self, 0)];
        word.push(Paren::Open);
        while let Some((node, next)) = stack.last_mut() {
            if let Some(child) = node.children().get(*next) {
                *next += 1;
                word.push(Paren::Open);
                stack.push((child, 0));
            } else {
                word.push(Paren::Close);
                stack.pop();
            }
        }
        CanonicalCode(word)
    }

    /// Rebuilds a tree from a balanced-parenthesis word.
    pub fn from_code(code: &CanonicalCode) -> Result<Tree> {
        parse_word(code.0.iter().copied())
    }
}

impl PartialEq for Tree {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}

impl Eq for Tree {}

impl Hash for Tree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.id.hash(state);
    }
}

impl Ord for Tree {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        self.depth().cmp(&other.depth()).then_with(|| {
            stacker::maybe_grow(RED_ZONE, STACK_SEGMENT, || {
                let (a, b) = (self.children(), other.children());
                a.iter()
                    .zip(b)
                    .find(|(x, y)| x != y)
                    .map(|(x, y)| x.cmp(y))
                    .unwrap_or_else(|| a.len().cmp(&b.len()))
            })
        })
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.canonical_code().fmt(f)
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.size() <= 64 {
            write!(f, "Tree({self})")
        } else {
            write!(f, "Tree(size={}, depth={})", self.size(), self.depth())
        }
    }
}

impl FromStr for Tree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Tree> {
        let s = s.trim();
        let word = s
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                '(' => Ok(Paren::Open),
                ')' => Ok(Paren::Close),
                other => Err(Error::malformed(
                    format!("unexpected character {other:?} at column {}", i + 1),
                    s,
                )),
            })
            .collect::<Result<Vec<_>>>()?;
        parse_word(word.into_iter()).map_err(|e| match e {
            Error::MalformedInput { message, .. } => Error::malformed(message, s),
            other => other,
        })
    }
}

fn parse_word(word: impl Iterator<Item = Paren>) -> Result<Tree> {
    let mut stack: Vec<Vec<Tree>> = Vec::new();
    let mut done: Option<Tree> = None;
    for p in word {
        if done.is_some() {
            return Err(Error::malformed("trailing symbols after a complete tree", ""));
        }
        match p {
            Paren::Open => stack.push(Vec::new()),
            Paren::Close => {
                let children = stack.pop().ok_or_else(|| Error::malformed("unbalanced ')'", ""))?;
                let t = Tree::from_children(children);
                match stack.last_mut() {
                    Some(parent) => parent.push(t),
                    None => done = Some(t),
                }
            }
        }
    }
    done.ok_or_else(|| Error::malformed("unbalanced or empty tree literal", ""))
}

/// Symbol of a canonical code. `Close` sorts before `Open`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Paren {
    Close,
    Open,
}

/// Balanced-parenthesis word of a tree with children emitted in
/// non-increasing order. Equal codes iff isomorphic trees, and the derived
/// lexicographic order is the tree order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(pub Vec<Paren>);

impl CanonicalCode {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Maximum number of simultaneously open parentheses.
    pub fn nesting_depth(&self) -> usize {
        let mut level = 0usize;
        let mut max = 0;
        for p in &self.0 {
            match p {
                Paren::Open => {
                    level += 1;
                    max = max.max(level);
                }
                Paren::Close => level -= 1,
            }
        }
        max
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self
            .0
            .iter()
            .map(|p| match p {
                Paren::Open => '(',
                Paren::Close => ')',
            })
            .collect();
        f.write_str(&s)
    }
}

/// Total order on trees, see the module documentation.
pub fn tree_compare(t1: &Tree, t2: &Tree) -> Ordering {
    t1.cmp(t2)
}
