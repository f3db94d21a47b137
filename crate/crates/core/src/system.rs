//! Finite discrete dynamical systems up to isomorphism: multisets of
//! connected components, with disjoint union and direct product.

use std::collections::btree_map::{self, BTreeMap};
use std::collections::HashMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use dashmap::DashMap;
use once_cell::sync::Lazy;

use crate::component::Component;
use crate::error::{Error, Result};
use crate::forest::{mul_count, split_multiplicity, Multiplicity};
use crate::graph::FunctionalGraph;

type ProductTable = DashMap<(Component, Component), Vec<(Component, Multiplicity)>>;

static COMPONENT_PRODUCTS: Lazy<ProductTable> = Lazy::new(DashMap::new);

/// An FDDS in canonical form. Two values are equal iff the underlying
/// functional digraphs are isomorphic.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fdds {
    components: BTreeMap<Component, Multiplicity>,
}

impl Fdds {
    /// The empty FDDS, neutral for the sum.
    pub fn new() -> Fdds {
        Fdds::default()
    }

    /// The fixed point `C₁`, neutral for the product.
    pub fn one() -> Fdds {
        Fdds::cycle(1)
    }

    pub fn cycle(p: usize) -> Fdds {
        Fdds::from(Component::cycle(p))
    }

    pub fn with_count(c: Component, n: Multiplicity) -> Fdds {
        let mut x = Fdds::new();
        x.insert(c, n);
        x
    }

    pub fn insert(&mut self, c: Component, n: Multiplicity) {
        if n > 0 {
            *self.components.entry(c).or_insert(0) += n;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Distinct components with multiplicities, ascending.
    pub fn iter(&self) -> btree_map::Iter<'_, Component, Multiplicity> {
        self.components.iter()
    }

    /// Every component repeated by multiplicity.
    pub fn components(&self) -> impl Iterator<Item = &Component> + '_ {
        self.components
            .iter()
            .flat_map(|(c, &n)| std::iter::repeat_n(c, n as usize))
    }

    pub fn count(&self, c: &Component) -> Multiplicity {
        self.components.get(c).copied().unwrap_or(0)
    }

    pub fn component_count(&self) -> Multiplicity {
        self.components.values().sum()
    }

    /// Number of states.
    pub fn node_count(&self) -> u64 {
        self.components.iter().map(|(c, &n)| c.size() * n).sum()
    }

    /// Number of periodic states, i.e. of unroll trees.
    pub fn periodic_count(&self) -> u64 {
        self.components.iter().map(|(c, &n)| c.cycle_length() as u64 * n).sum()
    }

    /// Maximum transient depth; 0 for the empty FDDS.
    pub fn depth(&self) -> u32 {
        self.components.keys().map(Component::depth).max().unwrap_or(0)
    }

    /// Distinct cycle lengths, ascending.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.components.keys().map(Component::cycle_length).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn sum(&self, other: &Fdds) -> Fdds {
        let mut out = self.clone();
        for (c, &n) in &other.components {
            out.insert(c.clone(), n);
        }
        out
    }

    pub fn scale(&self, n: Multiplicity) -> Fdds {
        let mut out = Fdds::new();
        for (c, &m) in &self.components {
            out.insert(c.clone(), mul_count(m, n));
        }
        out
    }

    /// Direct product.
    pub fn product(&self, other: &Fdds) -> Fdds {
        let mut out = Fdds::new();
        for (a, &m) in &self.components {
            for (b, &n) in &other.components {
                let mn = mul_count(m, n);
                for (c, k) in component_product(a, b) {
                    out.insert(c, mul_count(mn, k));
                }
            }
        }
        out
    }

    /// `self^k`, with `self^0 = C₁`.
    pub fn pow(&self, k: u32) -> Fdds {
        let mut acc = Fdds::one();
        for _ in 0..k {
            acc = acc.product(self);
        }
        acc
    }

    /// Multiset difference, `None` unless `other` is a sub-multiset.
    pub fn checked_sub(&self, other: &Fdds) -> Option<Fdds> {
        let mut out = self.clone();
        for (c, &n) in &other.components {
            let slot = out.components.get_mut(c)?;
            if *slot < n {
                return None;
            }
            *slot -= n;
            if *slot == 0 {
                out.components.remove(c);
            }
        }
        Some(out)
    }

    pub fn contains(&self, other: &Fdds) -> bool {
        other.components.iter().all(|(c, &n)| self.count(c) >= n)
    }

    /// Components whose cycle length divides `p`.
    pub fn set_dive(&self, p: usize) -> Fdds {
        self.filter(|c| p.is_multiple_of(c.cycle_length()))
    }

    /// Components whose cycle length is `p`.
    pub fn set_size(&self, p: usize) -> Fdds {
        self.filter(|c| c.cycle_length() == p)
    }

    fn filter(&self, keep: impl Fn(&Component) -> bool) -> Fdds {
        Fdds {
            components: self
                .components
                .iter()
                .filter(|(c, _)| keep(c))
                .map(|(c, &n)| (c.clone(), n))
                .collect(),
        }
    }

    /// Cancelable iff some component is a dendron.
    pub fn is_cancelable(&self) -> bool {
        self.components.keys().any(Component::is_dendron)
    }

    /// Explicit graph; components are laid out in canonical order.
    pub fn to_graph(&self) -> FunctionalGraph {
        let mut g = FunctionalGraph::new(Vec::new());
        for c in self.components() {
            g = g.disjoint_union(&FunctionalGraph::from_component(c));
        }
        g
    }

    pub fn from_graph(g: &FunctionalGraph) -> Fdds {
        let mut x = Fdds::new();
        for c in g.components() {
            x.insert(c, 1);
        }
        x
    }

    /// Rebuilds the canonical form from the explicit graph.
    pub fn canonicalize(&self) -> Fdds {
        Fdds::from_graph(&self.to_graph())
    }

    /// Parses either an edge list (`u v` per line, meaning `f(u) = v`) or a
    /// component literal (`n*p:[code,...]` joined by `+`, `0` for empty).
    /// `#` starts a comment in both.
    pub fn parse(text: &str) -> Result<Fdds> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        let literal = lines.first().is_some_and(|(_, l)| l.contains(':') || *l == "0");
        if literal {
            let mut x = Fdds::new();
            for (n, line) in lines {
                let part: Fdds = line.parse().map_err(|e: Error| e.at_line(n))?;
                x = x.sum(&part);
            }
            Ok(x)
        } else {
            parse_edge_list(&lines)
        }
    }

    /// Graphviz rendering: periodic states are double circles joined by bold
    /// edges, transient states are points.
    pub fn to_dot(&self, name: &str) -> String {
        let g = self.to_graph();
        let periodic = g.periodic_states();
        let mut out = String::new();
        writeln!(out, "digraph {name} {{").unwrap();
        for (v, &p) in periodic.iter().enumerate() {
            if p {
                writeln!(out, "  s{v} [shape=doublecircle, label=\"\"];").unwrap();
            } else {
                writeln!(out, "  s{v} [shape=point];").unwrap();
            }
        }
        for (v, &w) in g.succ.iter().enumerate() {
            if periodic[v] {
                writeln!(out, "  s{v} -> s{w} [style=bold];").unwrap();
            } else {
                writeln!(out, "  s{v} -> s{w};").unwrap();
            }
        }
        out.push_str("}\n");
        out
    }
}

impl From<Component> for Fdds {
    fn from(c: Component) -> Fdds {
        Fdds::with_count(c, 1)
    }
}

impl FromIterator<Component> for Fdds {
    fn from_iter<I: IntoIterator<Item = Component>>(iter: I) -> Self {
        let mut x = Fdds::new();
        for c in iter {
            x.insert(c, 1);
        }
        x
    }
}

/// Product of two connected FDDS, computed on explicit vertex pairs.
pub fn component_product(a: &Component, b: &Component) -> Vec<(Component, Multiplicity)> {
    let key = if a <= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    if let Some(hit) = COMPONENT_PRODUCTS.get(&key) {
        return hit.clone();
    }
    let g = FunctionalGraph::from_component(a).product(&FunctionalGraph::from_component(b));
    let mut counts: BTreeMap<Component, Multiplicity> = BTreeMap::new();
    for c in g.components() {
        *counts.entry(c).or_insert(0) += 1;
    }
    let result: Vec<_> = counts.into_iter().collect();
    COMPONENT_PRODUCTS.insert(key, result.clone());
    result
}

fn parse_edge_list(lines: &[(usize, &str)]) -> Result<Fdds> {
    let mut index: HashMap<&str, usize> = HashMap::new();
    let mut edges: Vec<(usize, &str, &str)> = Vec::new();
    for &(n, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = tokens[..] else {
            return Err(Error::malformed("expected two vertex names `u v`", line).at_line(n));
        };
        if index.insert(u, index.len()).is_some() {
            return Err(Error::malformed("vertex has out-degree greater than 1", u).at_line(n));
        }
        edges.push((n, u, v));
    }
    let mut succ = vec![0; edges.len()];
    for &(n, u, v) in &edges {
        let Some(&target) = index.get(v) else {
            return Err(Error::malformed("unknown vertex (it has no outgoing edge)", v).at_line(n));
        };
        succ[index[u]] = target;
    }
    Ok(Fdds::from_graph(&FunctionalGraph::new(succ)))
}

impl FromStr for Fdds {
    type Err = Error;

    /// Single-line component literal.
    fn from_str(s: &str) -> Result<Fdds> {
        let s = s.trim();
        let mut x = Fdds::new();
        if s == "0" {
            return Ok(x);
        }
        for part in s.split('+') {
            let (n, lit) = split_multiplicity(part)?;
            x.insert(lit.parse()?, n);
        }
        Ok(x)
    }
}

impl fmt::Display for Fdds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        for (i, (c, &n)) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            if n > 1 {
                write!(f, "{n}*")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Fdds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.node_count() <= 256 || self.components.len() <= 8 {
            write!(f, "Fdds({self})")
        } else {
            write!(
                f,
                "Fdds(nodes={}, distinct={})",
                self.node_count(),
                self.components.len()
            )
        }
    }
}
