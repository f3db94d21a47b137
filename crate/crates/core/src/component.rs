//! Connected FDDS: a cycle with an in-tree hanging on every periodic state.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::tree::Tree;

/// A connected functional digraph. `trees()[i]` is the transient tree rooted
/// at periodic state `i`, and state `i` maps to state `i + 1 (mod p)`. The
/// sequence is stored as its lexicographically least rotation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Component {
    trees: Box<[Tree]>,
}

impl Component {
    /// Canonical component from the trees met along the cycle, in any
    /// rotation.
    ///
    /// # Panics
    /// If `trees` is empty.
    pub fn new(mut trees: Vec<Tree>) -> Component {
        assert!(!trees.is_empty(), "a component needs a cycle of length at least 1");
        let k = least_rotation(&trees);
        trees.rotate_left(k);
        Component {
            trees: trees.into_boxed_slice(),
        }
    }

    /// Bare cycle of length `p`.
    pub fn cycle(p: usize) -> Component {
        Component::new(vec![Tree::leaf(); p])
    }

    pub fn trees(&self) -> &[Tree] {
        &self.trees
    }

    pub fn cycle_length(&self) -> usize {
        self.trees.len()
    }

    /// Longest transient path.
    pub fn depth(&self) -> u32 {
        self.trees.iter().map(Tree::depth).max().unwrap_or(0)
    }

    /// Number of states.
    pub fn size(&self) -> u64 {
        self.trees.iter().map(Tree::size).sum()
    }

    pub fn is_dendron(&self) -> bool {
        self.trees.len() == 1
    }

    /// No transient state.
    pub fn is_bare_cycle(&self) -> bool {
        self.trees.iter().all(Tree::is_leaf)
    }
}

impl Ord for Component {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cycle_length()
            .cmp(&other.cycle_length())
            .then_with(|| self.trees.cmp(&other.trees))
    }
}

impl PartialOrd for Component {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `p:[code0,code1,...]`
impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:[", self.cycle_length())?;
        for (i, t) in self.trees.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.size() <= 64 {
            write!(f, "{self}")
        } else {
            write!(f, "Component(p={}, size={})", self.cycle_length(), self.size())
        }
    }
}

impl FromStr for Component {
    type Err = Error;

    fn from_str(s: &str) -> Result<Component> {
        let s = s.trim();
        let (p, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::malformed("expected `p:[...]`", s))?;
        let p: usize = p
            .trim()
            .parse()
            .map_err(|_| Error::malformed("invalid cycle length", p.trim()))?;
        let body = rest
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::malformed("expected bracketed tree list", rest.trim()))?;
        let trees = body.split(',').map(|c| c.parse::<Tree>()).collect::<Result<Vec<_>>>()?;
        if p == 0 || trees.len() != p {
            return Err(Error::malformed(
                format!("cycle length {p} but {} trees listed", trees.len()),
                s,
            ));
        }
        Ok(Component::new(trees))
    }
}

/// Start index of the lexicographically least rotation of `s` (Booth's
/// failure-function scan over the doubled sequence, linear time).
pub fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let at = |i: usize| &s[i % n];
    let mut fail: Vec<isize> = vec![-1; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = at(j);
        let mut i = fail[j - k - 1];
        while i != -1 && sj != at(k + i as usize + 1) {
            if sj < at(k + i as usize + 1) {
                k = j - i as usize - 1;
            }
            i = fail[i as usize];
        }
        // here i == -1 or the symbols match
        if i == -1 && sj != at(k) {
            if sj < at(k) {
                k = j;
            }
            fail[j - k] = -1;
        } else {
            fail[j - k] = i + 1;
        }
    }
    k
}
