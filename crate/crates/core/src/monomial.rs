//! Dense exponent-vector monomials and the lexicographic orders used on the
//! edge ring.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

/// A monomial as a dense vector of exponents. Variable 0 is the largest
/// variable of every order in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u16>,
}

/// Monomials of `k[E(G)]`; variable `i` is edge `i`.
pub type EdgeMonomial = Monomial;

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        Monomial { exps }
    }

    /// Product of the given variables, with repetition.
    pub fn from_vars(nvars: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        let mut m = Self::one(nvars);
        for v in vars {
            m.exps[v] += 1;
        }
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> u16 {
        self.exps[var]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u32 {
        self.exps.iter().zip(weights).map(|(&e, &w)| e as u32 * w).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Indices of variables with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// Bit `i % 64` is set when variable `i` occurs; a cheap divisibility
    /// pre-filter.
    pub fn mask(&self) -> u64 {
        self.support().fold(0u64, |m, i| m | 1 << (i % 64))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }

    /// `self / other`; the caller guarantees divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect() }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect() }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect() }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Replaces `self` by `self / divisor * factor` in place.
    pub(crate) fn substitute(&mut self, divisor: &Monomial, factor: &Monomial) {
        for ((e, d), f) in self.exps.iter_mut().zip(&divisor.exps).zip(&factor.exps) {
            *e = *e - d + f;
        }
    }

    /// Restriction to the variable range `from..`.
    pub fn tail_vars(&self, from: usize) -> Monomial {
        Monomial { exps: self.exps[from..].to_vec() }
    }

    /// Renders with variables named `{prefix}{i+1}`, e.g. `e1^2*e3`.
    pub fn render(&self, prefix: &str) -> String {
        let parts: Vec<String> = self
            .support()
            .map(|i| match self.exps[i] {
                1 => format!("{prefix}{}", i + 1),
                k => format!("{prefix}{}^{k}", i + 1),
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("e"))
    }
}

impl Serialize for Monomial {
    /// `{variable_index: exponent, ...}` over the support.
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(None)?;
        for i in self.support() {
            map.serialize_entry(&i.to_string(), &self.exps[i])?;
        }
        map.end()
    }
}

/// Lexicographic order with variable 0 largest. `eliminated` counts the
/// leading block of variables (vertex variables in elimination rings) that
/// sit above every edge variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MonomialOrder {
    pub nvars: usize,
    pub eliminated: usize,
}

impl MonomialOrder {
    pub fn lex(nvars: usize) -> Self {
        MonomialOrder { nvars, eliminated: 0 }
    }

    pub fn elimination(eliminated: usize, kept: usize) -> Self {
        MonomialOrder { nvars: eliminated + kept, eliminated }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        lex_cmp(a, b)
    }
}

pub fn lex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exps.iter().zip(&b.exps) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}
