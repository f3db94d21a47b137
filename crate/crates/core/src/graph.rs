//! Explicit functional digraphs on `0..n`, used to compute direct products
//! and to decompose arbitrary inputs into canonical components.

use crate::component::Component;
use crate::tree::Tree;

/// `succ[v]` is the image of state `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionalGraph {
    pub succ: Vec<usize>,
}

impl FunctionalGraph {
    pub fn new(succ: Vec<usize>) -> FunctionalGraph {
        debug_assert!(succ.iter().all(|&v| v < succ.len()));
        FunctionalGraph { succ }
    }

    pub fn len(&self) -> usize {
        self.succ.len()
    }

    pub fn is_empty(&self) -> bool {
        self.succ.is_empty()
    }

    /// Explicit graph of a component. Periodic states are `0..p` in cycle
    /// order; transient states follow.
    pub fn from_component(c: &Component) -> FunctionalGraph {
        let p = c.cycle_length();
        let mut succ: Vec<usize> = (0..p).map(|i| (i + 1) % p).collect();
        let mut stack: Vec<(usize, &Tree)> = c.trees().iter().enumerate().collect();
        while let Some((v, t)) = stack.pop() {
            for child in t.children() {
                let u = succ.len();
                succ.push(v);
                stack.push((u, child));
            }
        }
        FunctionalGraph { succ }
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.len()`.
    pub fn disjoint_union(&self, other: &FunctionalGraph) -> FunctionalGraph {
        let shift = self.len();
        let mut succ = self.succ.clone();
        succ.extend(other.succ.iter().map(|v| v + shift));
        FunctionalGraph { succ }
    }

    /// Direct product: state `(u, v)` is `u * other.len() + v` and maps to
    /// the pair of images.
    pub fn product(&self, other: &FunctionalGraph) -> FunctionalGraph {
        let m = other.len();
        let mut succ = Vec::with_capacity(self.len() * m);
        for &a in &self.succ {
            for &b in &other.succ {
                succ.push(a * m + b);
            }
        }
        FunctionalGraph { succ }
    }

    /// Whether each state lies on a cycle.
    pub fn periodic_states(&self) -> Vec<bool> {
        let n = self.len();
        // 0 = unvisited, 1 = on the current walk, 2 = done
        let mut state = vec![0u8; n];
        let mut periodic = vec![false; n];
        let mut walk = Vec::new();
        for start in 0..n {
            if state[start] != 0 {
                continue;
            }
            let mut v = start;
            while state[v] == 0 {
                state[v] = 1;
                walk.push(v);
                v = self.succ[v];
            }
            if state[v] == 1 {
                // closed a new cycle at v
                let mut u = v;
                loop {
                    periodic[u] = true;
                    u = self.succ[u];
                    if u == v {
                        break;
                    }
                }
            }
            for w in walk.drain(..) {
                state[w] = 2;
            }
        }
        periodic
    }

    /// Connected components in canonical form, one entry per component.
    pub fn components(&self) -> Vec<Component> {
        let n = self.len();
        let periodic = self.periodic_states();
        let mut preimages: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (v, &w) in self.succ.iter().enumerate() {
            if !periodic[v] {
                preimages[w].push(v);
            }
        }
        // transient states, parents before children
        let mut order: Vec<usize> = (0..n).filter(|&v| periodic[v]).collect();
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            order.extend(preimages[v].iter().copied());
        }
        let mut trees: Vec<Option<Tree>> = vec![None; n];
        for &v in order.iter().rev() {
            let children = preimages[v]
                .iter()
                .map(|&u| trees[u].take().expect("children are built first"))
                .collect();
            trees[v] = Some(Tree::from_children(children));
        }
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for v in 0..n {
            if !periodic[v] || seen[v] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut u = v;
            while !seen[u] {
                seen[u] = true;
                cycle.push(trees[u].take().expect("tree of a periodic state"));
                u = self.succ[u];
            }
            out.push(Component::new(cycle));
        }
        out
    }
}
