//! Injectivity of univariate polynomials over FDDS, and explicit pairs
//! `X ≠ Y` with `P(X) = P(Y)` when it fails.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::component::Component;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::system::Fdds;

/// Exact integer type of the construction coefficients.
pub type Coefficient = BigInt;

/// `δ_∅ = 1` and `δ_{J∪{a}} = gcd(a, lcm J) · δ_J`, inserting the members of
/// `j` in ascending order.
pub fn delta<T: Integer + Clone>(j: &[T]) -> T {
    let mut sorted = j.to_vec();
    sorted.sort();
    let mut lcm = T::one();
    let mut acc = T::one();
    for a in sorted {
        acc = acc * a.gcd(&lcm);
        lcm = lcm.lcm(&a);
    }
    acc
}

fn product<T: Integer + Clone>(xs: impl IntoIterator<Item = T>) -> T {
    xs.into_iter().fold(T::one(), |acc, x| acc * x)
}

/// Which reading of the `α_I` formula to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlphaVariant {
    /// `α_I = δ_𝒜 ∏_{a∈𝒜} a`, the same for every `I`.
    Uniform,
    /// `α_I = δ_I ∏_{a∈𝒜−I} a + δ_𝒜 ∏_{a∈𝒜} a`.
    SubsetDependent,
}

/// `(α_I, β_I)` with `β_I = α_I + (−1)^{|I|} δ_I ∏_{a∈𝒜−I} a`. `subset` must
/// be contained in `set`.
pub fn alpha_beta<T: Integer + Clone>(subset: &[T], set: &[T], variant: AlphaVariant) -> (T, T) {
    debug_assert!(subset.iter().all(|a| set.contains(a)));
    let outside: Vec<T> = set.iter().filter(|a| !subset.contains(a)).cloned().collect();
    let term = delta(subset) * product(outside);
    let base = delta(set) * product(set.iter().cloned());
    let alpha = match variant {
        AlphaVariant::Uniform => base,
        AlphaVariant::SubsetDependent => base + term.clone(),
    };
    let beta = if subset.len().is_multiple_of(2) {
        alpha.clone() + term
    } else {
        alpha.clone() - term
    };
    (alpha, beta)
}

fn to_count(n: &Coefficient) -> Result<u64> {
    n.to_u64()
        .ok_or_else(|| Error::ConstructionFailed(format!("coefficient {n} is not a machine-size count")))
}

/// `X = Σ_I α_I C_{lcm I}` and `Y = Σ_I β_I C_{lcm I}` over all `I ⊆ set`.
fn build(set: &[u64], variant: AlphaVariant) -> Result<(Fdds, Fdds)> {
    let big: Vec<Coefficient> = set.iter().map(|&a| Coefficient::from(a)).collect();
    let mut x = Fdds::new();
    let mut y = Fdds::new();
    for mask in 0u32..(1 << set.len()) {
        let subset: Vec<Coefficient> = (0..set.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| big[i].clone())
            .collect();
        let lcm = subset.iter().fold(Coefficient::from(1), |l, a| l.lcm(a));
        let (alpha, beta) = alpha_beta(&subset, &big, variant);
        if alpha.is_zero() || beta < Coefficient::zero() {
            return Err(Error::ConstructionFailed(format!(
                "negative or zero count for subset {subset:?}"
            )));
        }
        let length = lcm
            .to_usize()
            .ok_or_else(|| Error::ConstructionFailed(format!("cycle length {lcm} too large")))?;
        x.insert(Component::cycle(length), to_count(&alpha)?);
        y.insert(Component::cycle(length), to_count(&beta)?);
    }
    Ok((x, y))
}

/// Every multiplicity in `C_b X^k` is at most its number of states
/// `b·|X|^k`, so this bound keeps the verification products in range.
fn check_size(set: &[u64], k: u32, x: &Fdds, y: &Fdds) -> Result<()> {
    let states = x.node_count().max(y.node_count());
    let largest = set.iter().copied().max().unwrap_or(1);
    states
        .checked_pow(k)
        .and_then(|s| s.checked_mul(largest))
        .map(|_| ())
        .ok_or_else(|| Error::LimitExceeded(format!("C_{largest}·X^{k} with |X| = {states}")))
}

fn check_monomial(set: &[u64], k: u32, x: &Fdds, y: &Fdds) -> bool {
    let (xk, yk) = (x.pow(k), y.pow(k));
    x != y
        && set.iter().all(|&b| {
            let cb = Fdds::cycle(b as usize);
            cb.product(&xk) == cb.product(&yk)
        })
}

/// Two distinct FDDS with `C_b X^k = C_b Y^k` for every `b` in `set`.
///
/// Every member of `set` must be at least 2 and `k` positive. The pair is
/// checked by exact products before it is returned.
pub fn counterexample_monomial(set: &[u64], k: u32) -> Result<(Fdds, Fdds)> {
    let mut set = set.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.is_empty() || set[0] < 2 || k == 0 {
        return Err(Error::ConstructionFailed(
            "cycle lengths must be non-empty and at least 2, and k positive".into(),
        ));
    }
    if set.len() >= 32 {
        return Err(Error::LimitExceeded(format!("{} cycle lengths", set.len())));
    }
    let (x, y) = build(&set, AlphaVariant::Uniform)?;
    check_size(&set, k, &x, &y)?;
    if check_monomial(&set, k, &x, &y) {
        return Ok((x, y));
    }
    log::warn!("uniform coefficients failed verification for {set:?}, k = {k}; trying subset-dependent ones");
    let (x, y) = build(&set, AlphaVariant::SubsetDependent)?;
    check_size(&set, k, &x, &y)?;
    if check_monomial(&set, k, &x, &y) {
        Ok((x, y))
    } else {
        Err(Error::ConstructionFailed(format!(
            "no verified pair for {set:?}, k = {k}"
        )))
    }
}

/// Injective iff some non-constant coefficient has a dendron component.
pub fn is_injective(p: &Polynomial<Fdds>) -> Result<bool> {
    p.require_non_constant()?;
    Ok(p.non_constant().iter().any(|(_, a)| a.is_cancelable()))
}

/// `None` when `P` is injective, otherwise a verified pair `X ≠ Y` with
/// `P(X) = P(Y)`.
pub fn counterexample(p: &Polynomial<Fdds>) -> Result<Option<(Fdds, Fdds)>> {
    if is_injective(p)? {
        return Ok(None);
    }
    let mut set: Vec<u64> = p
        .non_constant()
        .iter()
        .flat_map(|(_, a)| a.cycle_lengths())
        .map(|l| l as u64)
        .collect();
    set.sort_unstable();
    set.dedup();
    let (x, y) = counterexample_monomial(&set, 1)?;
    if x != y && p.evaluate(&x) == p.evaluate(&y) {
        Ok(Some((x, y)))
    } else {
        Err(Error::ConstructionFailed(format!("pair does not collide under {p}")))
    }
}
