//! The semiring of finite discrete dynamical systems (FDDS) under disjoint
//! union and direct product, its semiring of unrolls, and polynomial
//! equations over them.
//!
//! An FDDS is a finite set with a map to itself, i.e. a functional digraph.
//! Up to isomorphism it is a multiset of connected [`Component`]s, each a
//! cycle with a finite in-tree hanging from every cyclic state. Unrolling a
//! periodic state gives an infinite tree; cutting it at a depth gives a
//! [`Tree`], and the trees of all periodic states form a [`Forest`].
//!
//! ```
//! use fdds::{Fdds, FddsPolynomial, solve_fdds};
//!
//! let c2 = Fdds::cycle(2);
//! assert_eq!(c2.product(&Fdds::cycle(3)), Fdds::cycle(6));
//!
//! // X + X² = 3·C₂ has the unique solution C₂
//! let p = FddsPolynomial::new([(1, Fdds::one()), (2, Fdds::one())]).unwrap();
//! let outcome = solve_fdds(&p, &c2.scale(3)).unwrap();
//! assert_eq!(outcome.value, Some(c2));
//! ```

pub mod component;
pub mod division;
pub mod error;
pub mod forest;
pub mod graph;
pub mod injectivity;
pub mod oracle;
pub mod poly;
pub mod solver;
pub mod system;
pub mod tree;
pub mod unroll;

pub use component::Component;
pub use division::{kth_root, tree_divide};
pub use error::{Error, Result};
pub use forest::{Forest, Multiplicity};
pub use graph::FunctionalGraph;
pub use injectivity::{counterexample, counterexample_monomial, is_injective, Coefficient};
pub use poly::{Polynomial, Semiring};
pub use solver::{
    find_min_divisible, solve_fdds, solve_forest, solve_unroll, solve_unroll_at, verify, SolveOutcome, Status,
    TraceStep,
};
pub use system::Fdds;
pub use tree::{tree_compare, CanonicalCode, Paren, Tree};
pub use unroll::{compare_cyclefirst, compare_treefirst, default_cut_depth, min_unroll_tree_cut, reroll, unroll_cut};

pub type FddsPolynomial = Polynomial<Fdds>;
pub type ForestPolynomial = Polynomial<Forest>;
