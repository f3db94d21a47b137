//! Sparse univariate polynomials over a commutative semiring carrier.

use std::fmt;

use crate::error::{Error, Result};
use crate::forest::Forest;
use crate::system::Fdds;

/// Carrier of polynomial coefficients and values.
pub trait Semiring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
}

impl Semiring for Fdds {
    fn zero() -> Self {
        Fdds::new()
    }
    fn is_zero(&self) -> bool {
        self.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        self.sum(rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.product(rhs)
    }
}

impl Semiring for Forest {
    fn zero() -> Self {
        Forest::new()
    }
    fn is_zero(&self) -> bool {
        self.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        self.sum(rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.product(rhs)
    }
}

/// `Σ A_i X^{k_i}` with strictly increasing exponents and no zero
/// coefficient stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<C> {
    terms: Vec<(u32, C)>,
}

impl<C: Semiring> Polynomial<C> {
    /// Builds a polynomial from `(exponent, coefficient)` pairs in any order.
    /// Zero coefficients are dropped; a repeated exponent is an error.
    pub fn new(terms: impl IntoIterator<Item = (u32, C)>) -> Result<Self> {
        let mut terms: Vec<(u32, C)> = terms.into_iter().collect();
        terms.sort_by_key(|(k, _)| *k);
        if let Some(w) = terms.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::MalformedPolynomial(format!("exponent {} appears twice", w[0].0)));
        }
        terms.retain(|(_, c)| !c.is_zero());
        Ok(Polynomial { terms })
    }

    /// `coefficient · X^exponent`.
    pub fn monomial(coefficient: C, exponent: u32) -> Self {
        Polynomial::new([(exponent, coefficient)]).expect("single term")
    }

    pub fn terms(&self) -> &[(u32, C)] {
        &self.terms
    }

    pub fn constant(&self) -> Option<&C> {
        self.terms.first().filter(|(k, _)| *k == 0).map(|(_, c)| c)
    }

    /// Terms with a positive exponent.
    pub fn non_constant(&self) -> &[(u32, C)] {
        match self.terms.first() {
            Some((0, _)) => &self.terms[1..],
            _ => &self.terms,
        }
    }

    pub fn without_constant(&self) -> Self {
        Polynomial {
            terms: self.non_constant().to_vec(),
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(|(k, _)| *k)
    }

    pub fn coefficient(&self, exponent: u32) -> Option<&C> {
        self.terms.iter().find(|(k, _)| *k == exponent).map(|(_, c)| c)
    }

    /// Fails with `MalformedPolynomial` unless some term is non-constant.
    pub fn require_non_constant(&self) -> Result<()> {
        if self.non_constant().is_empty() {
            Err(Error::MalformedPolynomial("no non-constant term".into()))
        } else {
            Ok(())
        }
    }

    /// `P(x)`; the constant term is added as is.
    pub fn evaluate(&self, x: &C) -> C {
        let mut acc = C::zero();
        let mut power: Option<(u32, C)> = None;
        for (k, a) in &self.terms {
            if *k == 0 {
                acc = acc.add(a);
                continue;
            }
            let (mut e, mut p) = power.take().unwrap_or_else(|| (1, x.clone()));
            while e < *k {
                p = p.mul(x);
                e += 1;
            }
            acc = acc.add(&a.mul(&p));
            power = Some((e, p));
        }
        acc
    }

    pub fn map<D: Semiring>(&self, mut f: impl FnMut(&C) -> D) -> Polynomial<D> {
        Polynomial::new(self.terms.iter().map(|(k, c)| (*k, f(c)))).expect("exponents already distinct")
    }
}

impl<C: fmt::Display> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match k {
                0 => write!(f, "[{c}]")?,
                1 => write!(f, "[{c}]·X")?,
                _ => write!(f, "[{c}]·X^{k}")?,
            }
        }
        Ok(())
    }
}

impl<C: fmt::Debug> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.terms.iter()).finish()
    }
}
