//! Polynomial equations `P(X) = B` over forests, over unrolls and over FDDS.
//!
//! The forest solver works from the deepest populated depth of `B` down.
//! At depth `d`, with `Y` the trees of `X` already known (all deeper than
//! `d`), the trees of `B` at depth `d` that are not explained by `Y` are
//! exactly `Σ_t E_t Z^t`, where `Z` are the trees of `X` of depth `d` and
//! `E_t = Σ_i C(k_i, t) A_i Y^{k_i - t}` after cutting everything to depth
//! `d`. All trees in that level equation have the same depth, where the
//! product is cancelable and monotone, so `Z` is read off its least tree
//! by a division and a root, then peeled one tree at a time.

use std::collections::hash_map::Entry;
use std::collections::{BTreeSet, HashMap};

use num_integer::binomial;

use crate::component::Component;
use crate::division::{kth_root, tree_divide};
use crate::error::{Error, Result};
use crate::forest::{Forest, Multiplicity};
use crate::poly::Polynomial;
use crate::system::Fdds;
use crate::tree::Tree;
use crate::unroll::{default_cut_depth, reroll, reroll_forest, unroll_cut, unroll_trees};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Solution,
    NoSolution,
}

/// One attempt of the level solver: at `depth`, the least tree of the
/// remainder was assumed to come from the level term of exponent `term`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub depth: u32,
    pub term: u32,
    pub accepted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOutcome<V> {
    pub status: Status,
    pub value: Option<V>,
    pub trace: Vec<TraceStep>,
}

impl<V> SolveOutcome<V> {
    fn solution(value: V, trace: Vec<TraceStep>) -> Self {
        SolveOutcome {
            status: Status::Solution,
            value: Some(value),
            trace,
        }
    }

    fn no_solution(trace: Vec<TraceStep>) -> Self {
        SolveOutcome {
            status: Status::NoSolution,
            value: None,
            trace,
        }
    }

    pub fn is_solution(&self) -> bool {
        self.status == Status::Solution
    }
}

/// Whether `P(x) = b`.
pub fn verify(p: &Polynomial<Fdds>, x: &Fdds, b: &Fdds) -> bool {
    p.evaluate(x) == *b
}

/// Scans `b` in ascending order for the first tree with a quotient by `a1`
/// that has a `k`-th root; returns that tree and the root.
pub fn find_min_divisible(b: &Forest, a1: &Tree, k: u32) -> Option<(Tree, Tree)> {
    b.iter().find_map(|(t, _)| {
        tree_divide(t, a1)
            .into_iter()
            .find_map(|q| kth_root(&q, k))
            .map(|x| (t.clone(), x))
    })
}

/// Solves `P(X) = b` over forests. A returned solution is the unique one of
/// depth at most the largest coefficient depth.
pub fn solve_forest(p: &Polynomial<Forest>, b: &Forest) -> Result<SolveOutcome<Forest>> {
    p.require_non_constant()?;
    let mut trace = Vec::new();
    let rhs = match p.constant() {
        Some(a0) => match b.checked_sub(a0) {
            Some(r) => r,
            None => return Ok(SolveOutcome::no_solution(trace)),
        },
        None => b.clone(),
    };
    match solve_terms(p.non_constant(), &rhs, Some(&mut trace)) {
        Some(x) if p.evaluate(&x) == *b => Ok(SolveOutcome::solution(x, trace)),
        _ => Ok(SolveOutcome::no_solution(trace)),
    }
}

/// `x^k` for `k ≥ 1`, and the identity of depth `d` for `k = 0`.
fn power_at(x: &Forest, k: u32, d: u32) -> Forest {
    if k == 0 {
        Forest::singleton(Tree::path(d))
    } else {
        x.pow(k)
    }
}

fn binom(n: u32, k: u32) -> Multiplicity {
    binomial(n as Multiplicity, k as Multiplicity)
}

/// `Σ A_i X^{k_i} = rhs` with every `k_i ≥ 1`. Returns the solution of depth
/// at most the largest coefficient depth, checked by evaluation.
pub(crate) fn solve_terms(
    terms: &[(u32, Forest)],
    rhs: &Forest,
    mut trace: Option<&mut Vec<TraceStep>>,
) -> Option<Forest> {
    debug_assert!(terms.iter().all(|(k, _)| *k > 0));
    if rhs.is_empty() {
        return Some(Forest::new());
    }
    let d_max = terms.iter().filter_map(|(_, a)| a.depth()).max()?;
    if rhs.depth()? > d_max {
        return None;
    }
    let depths: BTreeSet<u32> = rhs.iter().map(|(t, _)| t.depth()).collect();
    let mut y = Forest::new();
    for &d in depths.iter().rev() {
        let mut r = rhs.gamma(d);
        for (k, a) in terms {
            r = r.checked_sub(&a.gamma(d).product(&y.pow(*k)))?;
        }
        if r.is_empty() {
            continue;
        }
        if r.depth() != Some(d) {
            return None;
        }
        let level = level_terms(terms, &y.cut(d), d);
        let z = solve_level(&level, &r, d, trace.as_deref_mut())?;
        y = y.sum(&z);
    }
    let mut check = Forest::new();
    for (k, a) in terms {
        check = check.sum(&a.product(&y.pow(*k)));
    }
    (check == *rhs).then_some(y)
}

/// `E_t` for `t = 1..=max k_i`, dropping empty ones.
fn level_terms(terms: &[(u32, Forest)], y: &Forest, d: u32) -> Vec<(u32, Forest)> {
    let a: Vec<(u32, Forest)> = terms
        .iter()
        .map(|(k, a)| (*k, a.gamma(d).cut(d)))
        .filter(|(_, a)| !a.is_empty())
        .collect();
    let top = a.iter().map(|(k, _)| *k).max().unwrap_or(0);
    let y_pows: Vec<Forest> = (0..top).map(|j| power_at(y, j, d)).collect();
    (1..=top)
        .map(|t| {
            let mut e = Forest::new();
            for (k, ak) in a.iter().filter(|(k, _)| *k >= t) {
                e = e.sum(&ak.product(&y_pows[(k - t) as usize]).scale(binom(*k, t)));
            }
            (t, e)
        })
        .filter(|(_, e)| !e.is_empty())
        .collect()
}

/// `Σ_t E_t Z^t = r` where every tree involved has depth `d`.
fn solve_level(level: &[(u32, Forest)], r: &Forest, d: u32, mut trace: Option<&mut Vec<TraceStep>>) -> Option<Forest> {
    for (t, e) in level {
        let attempt = peel(level, r, e.least().expect("level terms are non-empty"), *t, d);
        if let Some(trace) = trace.as_deref_mut() {
            trace.push(TraceStep {
                depth: d,
                term: *t,
                accepted: attempt.is_some(),
            });
        }
        if attempt.is_some() {
            return attempt;
        }
    }
    None
}

/// Peels the trees of `Z` in ascending order, assuming the least tree of `r`
/// is `a1 · x1^t` with `x1` the least tree of `Z`. Each further least
/// remaining tree is then `a1 · x1^{t-1} · x` for the next tree `x`.
fn peel(level: &[(u32, Forest)], r: &Forest, a1: &Tree, t: u32, d: u32) -> Option<Forest> {
    let (_, x1) = find_min_divisible(r, a1, t)?;
    let top = level.last().map(|(k, _)| *k).unwrap_or(0);
    let divisor = a1.product(&x1.pow(t - 1));
    // pows[j] = Z^j for the trees peeled so far
    let mut pows: Vec<Forest> = vec![Forest::new(); top as usize + 1];
    pows[0] = Forest::singleton(Tree::path(d));
    let mut z = Forest::new();
    let mut remaining = r.clone();
    let mut x = x1;
    loop {
        let x_pows: Vec<Forest> = (0..=top).map(|s| Forest::singleton(x.pow(s))).collect();
        // (Z + x)^j - Z^j = Σ_{s ≥ 1} C(j, s) Z^{j-s} x^s
        let inc: Vec<Forest> = (0..=top)
            .map(|j| {
                let mut f = Forest::new();
                for s in 1..=j {
                    f = f.sum(&pows[(j - s) as usize].product(&x_pows[s as usize]).scale(binom(j, s)));
                }
                f
            })
            .collect();
        let mut delta = Forest::new();
        for (k, e) in level {
            delta = delta.sum(&e.product(&inc[*k as usize]));
        }
        remaining = remaining.checked_sub(&delta)?;
        for j in 1..=top as usize {
            pows[j] = pows[j].sum(&inc[j]);
        }
        z.insert(x, 1);
        let Some(m) = remaining.least() else {
            return Some(z);
        };
        x = tree_divide(m, &divisor).into_iter().next()?;
    }
}

fn cut_terms(p: &Polynomial<Fdds>, n: u32) -> Vec<(u32, Forest)> {
    p.non_constant().iter().map(|(k, a)| (*k, unroll_cut(a, n))).collect()
}

/// Divisors of the cycle lengths of `b`, ascending.
fn candidate_periods(b: &Fdds) -> Vec<usize> {
    let mut out = BTreeSet::new();
    for l in b.cycle_lengths() {
        for p in 1..=l {
            if l % p == 0 {
                out.insert(p);
            }
        }
    }
    out.into_iter().collect()
}

/// Solves `P(X) = b` over unrolls: finds an FDDS `X` whose unroll satisfies
/// the equation, cutting at the default depth.
pub fn solve_unroll(p: &Polynomial<Fdds>, b: &Fdds) -> Result<SolveOutcome<Fdds>> {
    solve_unroll_at(p, b, default_cut_depth(p, b))
}

/// [`solve_unroll`] with an explicit cut depth `n`.
pub fn solve_unroll_at(p: &Polynomial<Fdds>, b: &Fdds, n: u32) -> Result<SolveOutcome<Fdds>> {
    p.require_non_constant()?;
    let mut trace = Vec::new();
    let b_cut = unroll_cut(b, n);
    let rhs = match p.constant() {
        Some(a0) => b_cut.checked_sub(&unroll_cut(a0, n)),
        None => Some(b_cut.clone()),
    };
    let Some(rhs) = rhs else {
        return Ok(SolveOutcome::no_solution(trace));
    };
    let Some(y) = solve_terms(&cut_terms(p, n), &rhs, Some(&mut trace)) else {
        return Ok(SolveOutcome::no_solution(trace));
    };
    let Ok(x) = reroll_forest(&y, &candidate_periods(b), b.depth()) else {
        return Ok(SolveOutcome::no_solution(trace));
    };
    if unroll_cut(&p.evaluate(&x), n) == b_cut {
        Ok(SolveOutcome::solution(x, trace))
    } else {
        Ok(SolveOutcome::no_solution(trace))
    }
}

/// Cut depth for the sub-equation of cycle lengths dividing `period`.
///
/// The forest equation over cut unrolls has a unique solution at every
/// depth, and it is the cut unroll of `X` whenever `X` exists. Rerolling its
/// trees back to period `period` only needs two full periods below the
/// transient depth, so the much larger bound that certifies solvability of
/// unroll equations is not needed here; the final evaluation check keeps
/// the result sound.
pub fn restriction_depth(sub_b: &Fdds, period: usize) -> u32 {
    let two_periods = u32::try_from(2 * period).expect("cut depth exceeds u32");
    sub_b.depth().checked_add(two_periods).expect("cut depth exceeds u32")
}

/// The unroll solution of the sub-equation restricted to cycle lengths
/// dividing `p`, minus the unrolls of the components found so far.
struct Restriction {
    n: u32,
    d: u32,
    rest: Forest,
}

impl Restriction {
    fn new(p: &Polynomial<Fdds>, b: &Fdds, x: &Fdds, period: usize, trace: &mut Vec<TraceStep>) -> Option<Restriction> {
        let terms: Vec<(u32, Fdds)> = p
            .non_constant()
            .iter()
            .map(|(k, a)| (*k, a.set_dive(period)))
            .filter(|(_, a)| !a.is_empty())
            .collect();
        let sub_b = b.set_dive(period);
        let sub_p = Polynomial::new(terms).expect("exponents are distinct");
        let n = restriction_depth(&sub_b, period);
        let y = if sub_p.terms().is_empty() {
            Forest::new()
        } else {
            solve_terms(&cut_terms(&sub_p, n), &unroll_cut(&sub_b, n), Some(trace))?
        };
        let rest = y.checked_sub(&unroll_cut(&x.set_dive(period), n))?;
        Some(Restriction {
            n,
            d: sub_b.depth(),
            rest,
        })
    }
}

/// Solves `P(X) = b` over FDDS. `P` must have a cancelable non-constant
/// coefficient, which makes the solution unique when it exists.
///
/// Components of `X` are recovered by increasing cycle length: if `R` is
/// what remains of `b` once the known components are accounted for, its
/// shortest cycle length `p` is the shortest cycle length among the missing
/// components of `X`, and all missing components with a cycle length
/// dividing `p` have cycle length exactly `p`. Their unrolls are what is left
/// of the unroll solution of the equation restricted to cycle lengths
/// dividing `p`.
pub fn solve_fdds(p: &Polynomial<Fdds>, b: &Fdds) -> Result<SolveOutcome<Fdds>> {
    p.require_non_constant()?;
    if !p.non_constant().iter().any(|(_, a)| a.is_cancelable()) {
        return Err(Error::NotSupportedNonInjective);
    }
    let mut trace = Vec::new();
    let b1 = match p.constant() {
        Some(a0) => b.checked_sub(a0),
        None => Some(b.clone()),
    };
    let Some(b1) = b1 else {
        return Ok(SolveOutcome::no_solution(trace));
    };
    let p1 = p.without_constant();
    let mut x = Fdds::new();
    let mut restrictions: HashMap<usize, Restriction> = HashMap::new();
    for _ in 0..=b1.component_count() {
        let Some(r) = b1.checked_sub(&p1.evaluate(&x)) else {
            return Ok(SolveOutcome::no_solution(trace));
        };
        // components are ordered by cycle length first
        let Some((least, _)) = r.iter().next() else {
            break;
        };
        let period = least.cycle_length();
        if let Entry::Vacant(slot) = restrictions.entry(period) {
            match Restriction::new(&p1, &b1, &x, period, &mut trace) {
                Some(level) => slot.insert(level),
                None => return Ok(SolveOutcome::no_solution(trace)),
            };
        }
        let level = &restrictions[&period];
        let Some((c, copies)) = next_component(level, period) else {
            return Ok(SolveOutcome::no_solution(trace));
        };
        for (&q, level) in restrictions.iter_mut() {
            if q % period != 0 {
                continue;
            }
            let trees: Forest = unroll_trees(&c, level.n).into_iter().collect();
            match level.rest.checked_sub(&trees.scale(copies)) {
                Some(rest) => level.rest = rest,
                None => return Ok(SolveOutcome::no_solution(trace)),
            }
        }
        x.insert(c, copies);
    }
    if verify(p, &x, b) {
        Ok(SolveOutcome::solution(x, trace))
    } else {
        Ok(SolveOutcome::no_solution(trace))
    }
}

/// Rerolls the least remaining tree to `period`; every remaining copy of it
/// belongs to a copy of the same component.
fn next_component(level: &Restriction, period: usize) -> Option<(Component, Multiplicity)> {
    let t = level.rest.least()?;
    let c = reroll(t, period, level.d).ok()?;
    let per_copy = unroll_trees(&c, level.n).iter().filter(|u| *u == t).count() as Multiplicity;
    let copies = level.rest.count(t) / per_copy;
    (copies > 0).then_some((c, copies))
}
