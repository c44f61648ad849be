//! Buchberger's algorithm for ideals generated by pure-difference binomials.
//!
//! Every S-polynomial and every reduction step of such binomials is again a
//! pure difference of two monomials (or zero), so the engine never needs
//! coefficients.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use crate::binomial::Binomial;
use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// Default cap on the total degree of an S-pair lcm.
pub const DEFAULT_DEGREE_CAP: u32 = 24;

#[derive(Debug, Clone)]
pub(crate) struct Engine {
    weights: Vec<u32>,
    /// Cancel common factors after each reduction. Only valid for prime
    /// ideals containing no monomials.
    saturate: bool,
    degree_cap: u32,
    elems: Vec<Elem>,
    pairs: BinaryHeap<Reverse<(u32, usize, usize)>>,
    pending: HashSet<(usize, usize)>,
}

#[derive(Debug, Clone)]
struct Elem {
    b: Binomial,
    mask: u64,
}

impl Engine {
    pub fn new(nvars: usize, saturate: bool, degree_cap: u32) -> Self {
        Self::weighted(vec![1; nvars], saturate, degree_cap)
    }

    pub fn weighted(weights: Vec<u32>, saturate: bool, degree_cap: u32) -> Self {
        Engine {
            weights,
            saturate,
            degree_cap,
            elems: Vec::new(),
            pairs: BinaryHeap::new(),
            pending: HashSet::new(),
        }
    }

    /// Reduces `b` against the current basis and, if it survives, adds it
    /// together with its new S-pairs.
    pub fn add(&mut self, b: Binomial) -> Result<()> {
        if let Some(r) = self.reduce(b) {
            self.insert(r)?;
        }
        Ok(())
    }

    fn insert(&mut self, b: Binomial) -> Result<()> {
        let j = self.elems.len();
        let mask = b.plus().mask();
        for i in 0..j {
            if self.elems[i].b.plus().is_coprime(b.plus()) {
                continue;
            }
            let lcm = self.elems[i].b.plus().lcm(b.plus());
            let deg = lcm.degree();
            if deg > self.degree_cap {
                return Err(Error::Resource(format!(
                    "S-pair of total degree {deg} exceeds the degree cap {}",
                    self.degree_cap
                )));
            }
            self.pairs.push(Reverse((lcm.weighted_degree(&self.weights), i, j)));
            self.pending.insert((i, j));
        }
        self.elems.push(Elem { b, mask });
        Ok(())
    }

    /// Processes S-pairs whose weighted lcm degree is at most `limit`.
    pub fn advance(&mut self, limit: u32) -> Result<()> {
        while let Some(&Reverse((deg, i, j))) = self.pairs.peek() {
            if deg > limit {
                break;
            }
            self.pairs.pop();
            self.pending.remove(&(i, j));
            if self.chain_criterion(i, j) {
                continue;
            }
            let s = self.s_pair(i, j);
            if let Some(s) = s {
                self.add(s)?;
            }
        }
        Ok(())
    }

    pub fn complete(&mut self) -> Result<()> {
        self.advance(u32::MAX)
    }

    fn chain_criterion(&self, i: usize, j: usize) -> bool {
        let lcm = self.elems[i].b.plus().lcm(self.elems[j].b.plus());
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        self.elems.iter().enumerate().any(|(k, e)| {
            k != i
                && k != j
                && e.b.plus().divides(&lcm)
                && !self.pending.contains(&key(i, k))
                && !self.pending.contains(&key(j, k))
        })
    }

    fn s_pair(&self, i: usize, j: usize) -> Option<Binomial> {
        let (f, g) = (&self.elems[i].b, &self.elems[j].b);
        let lcm = f.plus().lcm(g.plus());
        let a = lcm.div(f.plus()).mul(f.minus());
        let b = lcm.div(g.plus()).mul(g.minus());
        Binomial::new(a, b)
    }

    fn find_reducer(&self, m: &Monomial) -> Option<&Binomial> {
        let mask = m.mask();
        self.elems.iter().find(|e| e.mask & !mask == 0 && e.b.plus().divides(m)).map(|e| &e.b)
    }

    /// Top-reduces until the leading monomial is irreducible. Returns `None`
    /// when the binomial reduces to zero.
    pub fn reduce(&self, b: Binomial) -> Option<Binomial> {
        let mut b = if self.saturate { b.cancelled() } else { b };
        loop {
            let Some(r) = self.find_reducer(b.plus()) else {
                return Some(b);
            };
            let (mut plus, minus) = b.into_parts();
            plus.substitute(r.plus(), r.minus());
            b = Binomial::new(plus, minus)?;
            if self.saturate {
                b = b.cancelled();
            }
        }
    }

    /// Normal form of a monomial: the unique standard monomial it rewrites to
    /// once the basis is a Gröbner basis in the relevant degree.
    pub fn normal_form(&self, m: &Monomial) -> Monomial {
        let mut m = m.clone();
        while let Some(r) = self.find_reducer(&m) {
            m.substitute(r.plus(), r.minus());
        }
        m
    }

    /// The reduced Gröbner basis, sorted by decreasing leading monomial.
    /// Call after [`Engine::complete`].
    pub fn reduced_basis(&self) -> Vec<Binomial> {
        let mut elems: Vec<&Binomial> = self.elems.iter().map(|e| &e.b).collect();
        elems.sort_by(|a, b| a.plus().cmp(b.plus()).then(a.minus().cmp(b.minus())));
        let mut kept: Vec<&Binomial> = Vec::new();
        for e in elems {
            if !kept.iter().any(|k| k.plus().divides(e.plus())) {
                kept.push(e);
            }
        }
        let leads = Engine {
            weights: self.weights.clone(),
            saturate: false,
            degree_cap: self.degree_cap,
            elems: kept.iter().map(|b| Elem { b: (*b).clone(), mask: b.plus().mask() }).collect(),
            pairs: BinaryHeap::new(),
            pending: HashSet::new(),
        };
        let mut out: Vec<Binomial> = kept
            .iter()
            .map(|b| {
                let minus = leads.normal_form(b.minus());
                Binomial::new(b.plus().clone(), minus).expect("reduced tail differs from lead")
            })
            .collect();
        out.sort_by(|a, b| b.plus().cmp(a.plus()));
        out
    }
}

/// Whether every S-pair of `basis` reduces to zero modulo `basis` (without
/// cancellation).
pub fn is_groebner_basis(basis: &[Binomial]) -> bool {
    let Some(first) = basis.first() else {
        return true;
    };
    let mut engine = Engine::new(first.nvars(), false, u32::MAX);
    for b in basis {
        engine.elems.push(Elem { b: b.clone(), mask: b.plus().mask() });
    }
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if let Some(s) = engine.s_pair(i, j) {
                if engine.reduce(s).is_some() {
                    return false;
                }
            }
        }
    }
    true
}
