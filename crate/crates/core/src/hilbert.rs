//! Hilbert functions of monomial ideals and h-vectors of edge algebras.

use serde::Serialize;

use crate::binomial::{self, BinomialIdealBasis};
use crate::cycles;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::groebner::DEFAULT_DEGREE_CAP;
use crate::monomial::Monomial;
use crate::oracle;

/// Minimal monomial generators, kept as an antichain under divisibility.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialIdeal {
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        all.sort_by_key(Monomial::degree);
        all.dedup();
        let mut generators: Vec<Monomial> = Vec::new();
        for m in all {
            if !generators.iter().any(|g| g.divides(&m)) {
                generators.push(m);
            }
        }
        MonomialIdeal { generators }
    }

    /// Leading monomials of a Gröbner basis.
    pub fn initial(gb: &BinomialIdealBasis) -> Self {
        Self::new(gb.elements.iter().map(|b| b.plus().clone()))
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }
}

/// `H(i)` for `0 <= i <= max_deg`: the number of degree-`i` monomials in
/// `nvars` variables outside `ideal`.
pub fn hilbert_function(ideal: &MonomialIdeal, nvars: usize, max_deg: usize) -> Vec<u64> {
    let mut counts = vec![0u64; max_deg + 1];
    let mut m = Monomial::one(nvars);
    let masks: Vec<u64> = ideal.generators.iter().map(Monomial::mask).collect();

    // standard monomials form an order ideal, so a divisible monomial prunes
    // its whole subtree
    fn grow(
        ideal: &MonomialIdeal,
        masks: &[u64],
        m: &mut Monomial,
        mask: u64,
        from: usize,
        deg: usize,
        counts: &mut [u64],
    ) {
        counts[deg] += 1;
        if deg + 1 == counts.len() {
            return;
        }
        for v in from..m.nvars() {
            let x = Monomial::from_vars(m.nvars(), [v]);
            let next = m.mul(&x);
            let nmask = mask | 1 << (v % 64);
            let divisible =
                ideal.generators.iter().zip(masks).any(|(g, &gm)| gm & !nmask == 0 && g.divides(&next));
            if divisible {
                continue;
            }
            let saved = std::mem::replace(m, next);
            grow(ideal, masks, m, nmask, v, deg + 1, counts);
            *m = saved;
        }
    }

    grow(ideal, &masks, &mut m, 0, 0, 0, &mut counts);
    counts
}

/// `h_i = sum_j (-1)^(i-j) C(d, i-j) H(j)`, the coefficients of
/// `(1-t)^d * sum H(j) t^j` up to the length of `hilbert`.
pub fn h_from_hilbert(hilbert: &[u64], d: usize) -> Vec<i64> {
    (0..hilbert.len())
        .map(|i| {
            (0..=i.min(d))
                .map(|k| {
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    sign * binom(d as u64, k as u64) as i64 * hilbert[i - k] as i64
                })
                .sum()
        })
        .collect()
}

/// Binomial coefficient, zero when `k > n`, saturating at `u64::MAX`.
pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc becomes C(n, i + 1); the product fits since acc < 2^64 and n < 2^64
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return u64::MAX;
        }
    }
    acc as u64
}

/// `C(n, k)` extended by `C(-1, -1) = 1` and zero for other negative
/// arguments, the convention under which `h_i = C(c+i-1, c-1)` holds for a
/// polynomial ring (`c = 0`).
fn binom_signed(n: i64, k: i64) -> i64 {
    match (n, k) {
        (-1, -1) => 1,
        _ if n < 0 || k < 0 => 0,
        _ => binom(n as u64, k as u64) as i64,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HVector {
    /// Krull dimension.
    pub d: usize,
    /// Half the length of a shortest minimal even closed walk with nonzero
    /// binomial.
    #[serde(rename = "L")]
    pub l: Option<usize>,
    pub h: Vec<i64>,
    #[serde(rename = "H")]
    pub hilbert: Vec<u64>,
}

/// Reduced lex Gröbner basis of the toric ideal: from the chordless cycles
/// for bipartite graphs, by elimination otherwise.
pub fn toric_basis(g: &Graph) -> Result<BinomialIdealBasis> {
    if g.is_bipartite().is_some() {
        binomial::toric_groebner(&binomial::cycle_generators(g)?, DEFAULT_DEGREE_CAP)
    } else {
        binomial::elimination_generators(g)
    }
}

/// h-vector of `k[G]` truncated at `max_deg`.
pub fn h_vector(g: &Graph, max_deg: usize) -> Result<HVector> {
    let components = g.component_count();
    if components > 1 {
        return Err(Error::Disconnected { components });
    }
    let gb = toric_basis(g)?;
    let ideal = MonomialIdeal::initial(&gb);
    let hilbert = hilbert_function(&ideal, g.edge_count(), max_deg);
    let d = g.krull_dim();
    let h = h_from_hilbert(&hilbert, d);
    let l = cycles::smallest_even_walk_length(g).map(|len| len / 2);
    Ok(HVector { d, l, h, hilbert })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HPrefixReport {
    pub d: usize,
    #[serde(rename = "L")]
    pub l: usize,
    pub h: Vec<i64>,
    /// `C(e-d+i-1, e-d-1)` for `0 <= i <= L`.
    pub expected: Vec<i64>,
    pub prefix_ok: bool,
    /// `C(e-d+L-1, e-d-1) - h_L`.
    pub defect: i64,
    /// Minimal generators of degree `L`.
    pub generators_at_l: usize,
    /// Minimal closed walks of length `2L` up to rotation and reversal,
    /// recorded for comparison only.
    pub raw_walks_at_l: usize,
    pub defect_ok: bool,
}

impl HPrefixReport {
    pub fn passed(&self) -> bool {
        self.prefix_ok && self.defect_ok
    }
}

/// Checks that `h_i` is the free value `C(e-d+i-1, e-d-1)` below `L` and
/// that the shortfall at `L` equals the number of degree-`L` minimal
/// generators.
pub fn verify_h_prefix(g: &Graph) -> Result<HPrefixReport> {
    let len = cycles::smallest_even_walk_length(g)
        .ok_or_else(|| Error::Domain("graph has no minimal even closed walk".into()))?;
    let l = len / 2;
    let hv = h_vector(g, l)?;
    let c = g.edge_count() as i64 - hv.d as i64;
    let expected: Vec<i64> = (0..=l as i64).map(|i| binom_signed(c + i - 1, c - 1)).collect();
    let prefix_ok = hv.h[..l] == expected[..l];
    let defect = expected[l] - hv.h[l];
    let census = oracle::minimal_generator_census(g, l, oracle::DEFAULT_MONOMIAL_CAP)?;
    let generators_at_l = census.degrees.get(&l).copied().unwrap_or(0);
    let raw_walks_at_l = cycles::count_minimal_closed_walks(g, len);
    Ok(HPrefixReport {
        d: hv.d,
        l,
        h: hv.h,
        expected,
        prefix_ok,
        defect,
        generators_at_l,
        raw_walks_at_l,
        defect_ok: defect == generators_at_l as i64,
    })
}
