//! Forests: finite multisets of trees.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::tree::Tree;

/// Number of copies of an element in a multiset.
pub type Multiplicity = u64;

pub(crate) fn mul_count(a: Multiplicity, b: Multiplicity) -> Multiplicity {
    a.checked_mul(b).expect("multiplicity overflow")
}

/// A multiset of trees, kept sorted by the tree order.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Forest {
    trees: BTreeMap<Tree, Multiplicity>,
}

impl Forest {
    pub fn new() -> Forest {
        Forest::default()
    }

    pub fn singleton(t: Tree) -> Forest {
        Forest::with_count(t, 1)
    }

    pub fn with_count(t: Tree, n: Multiplicity) -> Forest {
        let mut f = Forest::new();
        f.insert(t, n);
        f
    }

    pub fn insert(&mut self, t: Tree, n: Multiplicity) {
        if n > 0 {
            *self.trees.entry(t).or_insert(0) += n;
        }
    }

    /// Total number of trees, counted with multiplicity.
    pub fn len(&self) -> Multiplicity {
        self.trees.values().sum()
    }

    pub fn distinct(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn count(&self, t: &Tree) -> Multiplicity {
        self.trees.get(t).copied().unwrap_or(0)
    }

    /// Maximum depth of the trees, `None` for the empty forest.
    pub fn depth(&self) -> Option<u32> {
        self.trees.keys().map(Tree::depth).max()
    }

    /// Total number of nodes.
    pub fn size(&self) -> u64 {
        self.trees.iter().map(|(t, n)| t.size() * n).sum()
    }

    pub fn least(&self) -> Option<&Tree> {
        self.trees.keys().next()
    }

    pub fn greatest(&self) -> Option<&Tree> {
        self.trees.keys().next_back()
    }

    /// Distinct trees with their multiplicities, in ascending order.
    pub fn iter(&self) -> btree_map::Iter<'_, Tree, Multiplicity> {
        self.trees.iter()
    }

    /// Every tree repeated according to its multiplicity, ascending.
    pub fn trees(&self) -> impl Iterator<Item = &Tree> + '_ {
        self.trees.iter().flat_map(|(t, &n)| std::iter::repeat_n(t, n as usize))
    }

    pub fn sum(&self, other: &Forest) -> Forest {
        let mut out = self.clone();
        for (t, &n) in &other.trees {
            out.insert(t.clone(), n);
        }
        out
    }

    /// Multiset of pairwise tree products.
    pub fn product(&self, other: &Forest) -> Forest {
        let mut out = Forest::new();
        for (a, &m) in &self.trees {
            for (b, &n) in &other.trees {
                out.insert(a.product(b), mul_count(m, n));
            }
        }
        out
    }

    /// Every multiplicity multiplied by `n`.
    pub fn scale(&self, n: Multiplicity) -> Forest {
        if n == 0 {
            return Forest::new();
        }
        Forest {
            trees: self.trees.iter().map(|(t, &m)| (t.clone(), mul_count(m, n))).collect(),
        }
    }

    /// `self^k`. The 0-th power is the path of depth `depth(self)`, and the
    /// empty forest for the empty forest.
    pub fn pow(&self, k: u32) -> Forest {
        let Some(d) = self.depth() else {
            return Forest::new();
        };
        let mut acc = Forest::singleton(Tree::path(d));
        for _ in 0..k {
            acc = acc.product(self);
        }
        acc
    }

    pub fn cut(&self, k: u32) -> Forest {
        let mut out = Forest::new();
        for (t, &n) in &self.trees {
            out.insert(t.cut(k), n);
        }
        out
    }

    /// Sub-multiset of the trees of depth at least `d`.
    pub fn gamma(&self, d: u32) -> Forest {
        Forest {
            trees: self
                .trees
                .iter()
                .filter(|(t, _)| t.depth() >= d)
                .map(|(t, &n)| (t.clone(), n))
                .collect(),
        }
    }

    /// Trees of depth exactly `d`.
    pub fn at_depth(&self, d: u32) -> Forest {
        Forest {
            trees: self
                .trees
                .iter()
                .filter(|(t, _)| t.depth() == d)
                .map(|(t, &n)| (t.clone(), n))
                .collect(),
        }
    }

    /// Whether `other` is a sub-multiset of `self`.
    pub fn contains(&self, other: &Forest) -> bool {
        other.trees.iter().all(|(t, &n)| self.count(t) >= n)
    }

    /// Multiset difference `self − other`, or `None` when `other` is not a
    /// sub-multiset of `self`.
    pub fn checked_sub(&self, other: &Forest) -> Option<Forest> {
        let mut out = self.clone();
        for (t, &n) in &other.trees {
            let slot = out.trees.get_mut(t)?;
            match (*slot).cmp(&n) {
                std::cmp::Ordering::Less => return None,
                std::cmp::Ordering::Equal => {
                    out.trees.remove(t);
                }
                std::cmp::Ordering::Greater => *slot -= n,
            }
        }
        Some(out)
    }

    /// Removes one copy of `t`; false if absent.
    pub fn remove_one(&mut self, t: &Tree) -> bool {
        match self.trees.get_mut(t) {
            None => false,
            Some(n) if *n == 1 => {
                self.trees.remove(t);
                true
            }
            Some(n) => {
                *n -= 1;
                true
            }
        }
    }

    /// Parses a forest file: one tree literal per line, `#` comments and
    /// blank lines ignored.
    pub fn parse_lines(text: &str) -> Result<Forest> {
        let mut f = Forest::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let t: Tree = line.parse().map_err(|e: Error| e.at_line(i + 1))?;
            f.insert(t, 1);
        }
        Ok(f)
    }

    /// One canonical tree literal per line, ascending, repeated by
    /// multiplicity.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for t in self.trees() {
            out.push_str(&t.to_string());
            out.push('\n');
        }
        out
    }
}

impl FromIterator<Tree> for Forest {
    fn from_iter<I: IntoIterator<Item = Tree>>(iter: I) -> Self {
        let mut f = Forest::new();
        for t in iter {
            f.insert(t, 1);
        }
        f
    }
}

impl<'a> Add for &'a Forest {
    type Output = Forest;
    fn add(self, rhs: &'a Forest) -> Forest {
        self.sum(rhs)
    }
}

impl<'a> Mul for &'a Forest {
    type Output = Forest;
    fn mul(self, rhs: &'a Forest) -> Forest {
        self.product(rhs)
    }
}

/// Inline literal: tree literals joined by `+`, optionally prefixed by a
/// multiplicity `n*`; `0` is the empty forest.
impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (t, &n) in &self.trees {
            if !first {
                f.write_str("+")?;
            }
            first = false;
            if n > 1 {
                write!(f, "{n}*")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.size() <= 256 {
            write!(f, "Forest({self})")
        } else {
            write!(
                f,
                "Forest(len={}, distinct={}, depth={:?})",
                self.len(),
                self.distinct(),
                self.depth()
            )
        }
    }
}

impl FromStr for Forest {
    type Err = Error;

    fn from_str(s: &str) -> Result<Forest> {
        let s = s.trim();
        let mut f = Forest::new();
        if s == "0" {
            return Ok(f);
        }
        for part in s.split('+') {
            let (n, lit) = split_multiplicity(part)?;
            f.insert(lit.parse()?, n);
        }
        Ok(f)
    }
}

/// Splits an optional `n*` prefix off a literal.
pub(crate) fn split_multiplicity(part: &str) -> Result<(Multiplicity, &str)> {
    let part = part.trim();
    match part.split_once('*') {
        Some((n, rest)) => {
            let n = n
                .trim()
                .parse::<Multiplicity>()
                .map_err(|_| Error::malformed("invalid multiplicity", n.trim()))?;
            Ok((n, rest.trim()))
        }
        None => Ok((1, part)),
    }
}
