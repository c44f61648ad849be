//! Brute-force minimal generator counts of the toric ideal from fiber
//! connectivity, independent of any Gröbner basis computation.
//!
//! The edge monomials of degree `d` are grouped by their vertex-degree
//! vector. Within one group two monomials are linked when they share a
//! variable, and the number of minimal generators in that multidegree is the
//! number of connected components minus one.

use std::collections::BTreeMap;

use rustc_hash::FxHashMap;
use serde::Serialize;
use smallvec::SmallVec;

use crate::cycles;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::monomial::Monomial;

/// Default limit on the number of monomials a census may enumerate.
pub const DEFAULT_MONOMIAL_CAP: u64 = 10_000_000;

/// Edge monomials sharing one vertex-degree vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fiber {
    pub multidegree: Vec<u32>,
    pub monomials: Vec<Monomial>,
}

impl Fiber {
    pub fn degree(&self) -> usize {
        self.multidegree.iter().sum::<u32>() as usize / 2
    }

    pub fn graph(&self) -> FiberGraph {
        let n = self.monomials.len();
        let mut links = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !self.monomials[i].is_coprime(&self.monomials[j]) {
                    links.push((i, j));
                }
            }
        }
        FiberGraph { nodes: n, links }
    }
}

/// Members of a fiber linked when they have a common variable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberGraph {
    pub nodes: usize,
    pub links: Vec<(usize, usize)>,
}

impl FiberGraph {
    pub fn component_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.nodes).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut count = self.nodes;
        for &(a, b) in &self.links {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                count -= 1;
            }
        }
        count
    }
}

/// Minimal generator counts per degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorCensus {
    pub degrees: BTreeMap<usize, usize>,
    pub total: usize,
    /// `e - dim k[G]`
    pub height: usize,
    /// Largest degree examined.
    pub complete_up_to: usize,
    /// Whether no minimal generator can exist beyond `complete_up_to`.
    pub complete: bool,
}

impl GeneratorCensus {
    /// Per-degree counts expanded into a sorted list of degrees.
    pub fn degree_multiset(&self) -> Vec<usize> {
        self.degrees.iter().flat_map(|(&d, &c)| std::iter::repeat_n(d, c)).collect()
    }
}

fn total_monomials(e: usize, max_deg: usize) -> u64 {
    (1..=max_deg)
        .map(|d| crate::hilbert::binom((e + d - 1) as u64, d as u64))
        .fold(0u64, u64::saturating_add)
}

fn check_cap(g: &Graph, max_deg: usize, cap: u64) -> Result<()> {
    if g.edge_count() == 0 {
        return Ok(());
    }
    let n = total_monomials(g.edge_count(), max_deg);
    if n > cap {
        return Err(Error::Resource(format!(
            "census to degree {max_deg} needs {n} monomials, cap is {cap}"
        )));
    }
    Ok(())
}

/// Calls `visit(edge_list)` for every multiset of `d` edges, as a
/// nondecreasing edge-index sequence.
fn for_each_multiset(e: usize, d: usize, visit: &mut impl FnMut(&[usize])) {
    fn go(e: usize, d: usize, from: usize, cur: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
        if cur.len() == d {
            visit(cur);
            return;
        }
        for i in from..e {
            cur.push(i);
            go(e, d, i, cur, visit);
            cur.pop();
        }
    }
    go(e, d, 0, &mut Vec::with_capacity(d), visit);
}

/// All degree-`d` edge monomials grouped by vertex-degree vector.
fn fiber_groups(g: &Graph, d: usize) -> BTreeMap<Vec<u32>, Vec<Monomial>> {
    let e = g.edge_count();
    let mut groups: BTreeMap<Vec<u32>, Vec<Monomial>> = BTreeMap::new();
    for_each_multiset(e, d, &mut |edges| {
        let mut b = vec![0u32; g.vertex_count()];
        for &k in edges {
            let (x, y) = g.edge(k);
            b[x] += 1;
            b[y] += 1;
        }
        groups.entry(b).or_default().push(Monomial::from_vars(e, edges.iter().copied()));
    });
    groups
}

/// All fibers of size at least two in degrees `1..=max_deg`, ordered by
/// degree and then multidegree.
pub fn fibers_up_to(g: &Graph, max_deg: usize, cap: u64) -> Result<Vec<Fiber>> {
    if max_deg == 0 {
        return Err(Error::Domain("max_deg must be at least 1".into()));
    }
    check_cap(g, max_deg, cap)?;
    let mut out = Vec::new();
    for d in 1..=max_deg {
        out.extend(
            fiber_groups(g, d)
                .into_iter()
                .filter(|(_, ms)| ms.len() >= 2)
                .map(|(multidegree, monomials)| Fiber { multidegree, monomials }),
        );
    }
    Ok(out)
}

#[derive(Default)]
struct Bucket {
    /// Union of variable supports of each connected class.
    classes: SmallVec<[u64; 2]>,
}

impl Bucket {
    fn insert(&mut self, support: u64) {
        let mut merged = support;
        self.classes.retain(|c| {
            if *c & support != 0 {
                merged |= *c;
                false
            } else {
                true
            }
        });
        self.classes.push(merged);
    }
}

/// Minimal generators per degree, for degrees `1..=max_deg`, streaming over
/// monomials without storing fibers.
pub fn minimal_generator_census(g: &Graph, max_deg: usize, cap: u64) -> Result<GeneratorCensus> {
    let (e, v) = (g.edge_count(), g.vertex_count());
    check_cap(g, max_deg, cap)?;
    if e > 64 {
        return Err(Error::Resource(format!("census supports at most 64 edges, graph has {e}")));
    }
    let bits = (usize::BITS - max_deg.leading_zeros()).max(1) as usize;
    if v * bits > 128 {
        return Err(Error::Resource(format!(
            "multidegree of {v} vertices at degree {max_deg} does not fit in 128 bits"
        )));
    }
    let unit: Vec<u128> = g.edges().iter().map(|&(a, b)| (1u128 << (a * bits)) + (1u128 << (b * bits))).collect();

    let mut degrees = BTreeMap::new();
    let mut total = 0;
    let mut buckets: FxHashMap<u128, Bucket> = FxHashMap::default();
    for d in 2..=max_deg {
        buckets.clear();
        fn go(
            unit: &[u128],
            d: usize,
            from: usize,
            depth: usize,
            key: u128,
            mask: u64,
            buckets: &mut FxHashMap<u128, Bucket>,
        ) {
            if depth == d {
                buckets.entry(key).or_default().insert(mask);
                return;
            }
            for i in from..unit.len() {
                go(unit, d, i, depth + 1, key + unit[i], mask | 1 << i, buckets);
            }
        }
        go(&unit, d, 0, 0, 0, 0, &mut buckets);
        let count: usize = buckets.values().map(|b| b.classes.len() - 1).sum();
        if count > 0 {
            degrees.insert(d, count);
            total += count;
        }
    }
    let bound = generator_degree_bound(g);
    Ok(GeneratorCensus {
        degrees,
        total,
        height: g.toric_height(),
        complete_up_to: max_deg,
        complete: max_deg >= bound,
    })
}

/// Upper bound on the degree of any minimal generator.
///
/// Two members of different fiber-graph components form a primitive
/// binomial, so minimal generators occur only in degrees of primitive
/// binomials. For a bipartite component these are even cycles, bounding the
/// degree by half the longest cycle; otherwise every edge is used at most
/// twice by a primitive walk, bounding the degree by the edge count.
pub fn generator_degree_bound(g: &Graph) -> usize {
    g.component_graphs()
        .iter()
        .map(|c| {
            if c.is_bipartite().is_some() {
                cycles::longest_cycle_length(c) / 2
            } else {
                c.edge_count()
            }
        })
        .max()
        .unwrap_or(0)
}

/// Default census degree: the proven bound for bipartite components, and
/// for non-bipartite ones half the longest chordless cycle plus two, capped
/// by the proven bound.
pub fn default_max_degree(g: &Graph) -> Result<usize> {
    let mut best = 1;
    for c in g.component_graphs() {
        let d = if c.is_bipartite().is_some() {
            cycles::longest_cycle_length(&c) / 2
        } else {
            let longest = cycles::chordless_cycles(&c)?.iter().map(|x| x.len()).max().unwrap_or(0);
            (longest / 2 + 2).min(c.edge_count())
        };
        best = best.max(d);
    }
    Ok(best)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleVerdict {
    Ci,
    NotCi,
    /// The census was not complete and found no more generators than the
    /// height.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub verdict: OracleVerdict,
    pub census: GeneratorCensus,
}

/// Complete-intersection verdict from the census: more generators than the
/// height settles "no" at any depth, equality needs a complete census.
pub fn ci_oracle(g: &Graph, max_deg: usize, cap: u64) -> Result<OracleReport> {
    let census = minimal_generator_census(g, max_deg, cap)?;
    let verdict = if census.total > census.height {
        OracleVerdict::NotCi
    } else if census.complete && census.total == census.height {
        OracleVerdict::Ci
    } else {
        OracleVerdict::Inconclusive
    };
    Ok(OracleReport { verdict, census })
}
