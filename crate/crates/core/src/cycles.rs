//! Closed walks, cycles and chordless-cycle combinatorics.

use std::collections::{BTreeSet, HashSet};
use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::monomial::Monomial;

/// Default limit on the number of chordless cycles enumerated.
pub const DEFAULT_CYCLE_CAP: usize = 1_000_000;

/// A walk `v_1 e_1 v_2 ... e_l v_{l+1}`; `vertices` has one more entry than
/// `edges`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Walk {
    edges: Vec<usize>,
    vertices: Vec<usize>,
}

impl Walk {
    /// Walk through the given vertex sequence.
    pub fn from_vertices(g: &Graph, vertices: &[usize]) -> Result<Walk> {
        if vertices.is_empty() {
            return Err(Error::Domain("walk needs at least one vertex".into()));
        }
        let mut edges = Vec::with_capacity(vertices.len() - 1);
        for w in vertices.windows(2) {
            let e = g.edge_between(w[0], w[1]).ok_or_else(|| {
                Error::Domain(format!("no edge between {} and {}", g.label(w[0]), g.label(w[1])))
            })?;
            edges.push(e);
        }
        Ok(Walk { edges, vertices: vertices.to_vec() })
    }

    /// Closed walk along the given edge sequence. The start vertex is the
    /// first endpoint of `edges[0]` that lets the sequence close up.
    pub fn closed_from_edges(g: &Graph, edges: &[usize]) -> Result<Walk> {
        if edges.is_empty() {
            return Err(Error::Domain("closed walk needs at least one edge".into()));
        }
        for &e in edges {
            g.check_edge(e)?;
        }
        let (a, b) = g.edge(edges[0]);
        'start: for start in [a, b] {
            let mut vertices = vec![start];
            let mut cur = start;
            for &e in edges {
                let (x, y) = g.edge(e);
                cur = if x == cur {
                    y
                } else if y == cur {
                    x
                } else {
                    continue 'start;
                };
                vertices.push(cur);
            }
            if cur == start {
                return Ok(Walk { edges: edges.to_vec(), vertices });
            }
        }
        Err(Error::Domain(format!("edge sequence {edges:?} is not a closed walk")))
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn is_closed(&self) -> bool {
        self.vertices.first() == self.vertices.last()
    }

    /// Closed, and no two cyclically consecutive edges coincide.
    pub fn is_minimal(&self) -> bool {
        let l = self.edges.len();
        self.is_closed() && l > 0 && (0..l).all(|i| self.edges[i] != self.edges[(i + 1) % l])
    }

    /// Some rotation of the edge sequence reads `f1 f1 f2 f2 ...`.
    pub fn is_trivial(&self) -> bool {
        let l = self.edges.len();
        if l == 0 || l % 2 == 1 || !self.is_closed() {
            return false;
        }
        (0..2).any(|shift| (0..l / 2).all(|i| self.edges[(2 * i + shift) % l] == self.edges[(2 * i + 1 + shift) % l]))
    }

    /// Each vertex is visited once (a closed walk of length at least 3).
    pub fn is_cycle(&self) -> bool {
        let l = self.edges.len();
        if l < 3 || !self.is_closed() {
            return false;
        }
        let distinct: HashSet<usize> = self.vertices[..l].iter().copied().collect();
        distinct.len() == l
    }

    /// Products of the odd-position and even-position edges (positions
    /// counted from 1), before any ordering or cancellation.
    pub fn alternating_products(&self, nvars: usize) -> (Monomial, Monomial) {
        let odd = Monomial::from_vars(nvars, self.edges.iter().step_by(2).copied());
        let even = Monomial::from_vars(nvars, self.edges.iter().skip(1).step_by(2).copied());
        (odd, even)
    }

    /// Lexicographically least edge sequence among all rotations and
    /// reversals of this closed walk.
    pub fn canonical(&self, g: &Graph) -> Walk {
        let seq = canonical_sequence(&self.edges);
        if seq == self.edges {
            return self.clone();
        }
        Walk::closed_from_edges(g, &seq).expect("rotations of a closed walk are closed")
    }
}

fn canonical_sequence(edges: &[usize]) -> Vec<usize> {
    let l = edges.len();
    let mut best: Option<Vec<usize>> = None;
    let rev: Vec<usize> = edges.iter().rev().copied().collect();
    for seq in [edges, &rev[..]] {
        for r in 0..l {
            let cand: Vec<usize> = seq[r..].iter().chain(&seq[..r]).copied().collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

/// A cycle in canonical position: its least edge first, followed by the
/// smaller of that edge's two neighbours on the cycle.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle(Walk);

impl Cycle {
    /// Builds the canonical cycle through the given vertex loop
    /// `v_1, ..., v_l` (without repeating `v_1`).
    pub fn from_vertex_loop(g: &Graph, verts: &[usize]) -> Result<Cycle> {
        let mut closed = verts.to_vec();
        closed.push(verts[0]);
        let walk = Walk::from_vertices(g, &closed)?;
        if !walk.is_cycle() {
            return Err(Error::Domain("vertex loop is not a cycle".into()));
        }
        Ok(Cycle(walk.canonical(g)))
    }

    pub fn walk(&self) -> &Walk {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn edges(&self) -> &[usize] {
        self.0.edges()
    }

    /// The `l` distinct vertices in walk order.
    pub fn vertices(&self) -> &[usize] {
        &self.0.vertices()[..self.len()]
    }

    pub fn edge_set(&self) -> BTreeSet<usize> {
        self.edges().iter().copied().collect()
    }

    /// Edges of `g` joining two non-consecutive vertices of the cycle.
    pub fn chords(&self, g: &Graph) -> Vec<usize> {
        let on: HashSet<usize> = self.vertices().iter().copied().collect();
        let own: HashSet<usize> = self.edges().iter().copied().collect();
        (0..g.edge_count())
            .filter(|e| {
                let (a, b) = g.edge(*e);
                on.contains(&a) && on.contains(&b) && !own.contains(e)
            })
            .collect()
    }
}

impl Serialize for Cycle {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.edges().serialize(s)
    }
}

struct Adjacency {
    rows: Vec<Vec<u64>>,
}

impl Adjacency {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let words = n.div_ceil(64).max(1);
        let mut rows = vec![vec![0u64; words]; n];
        for &(a, b) in g.edges() {
            rows[a][b / 64] |= 1 << (b % 64);
            rows[b][a / 64] |= 1 << (a % 64);
        }
        Adjacency { rows }
    }

    fn has(&self, a: usize, b: usize) -> bool {
        self.rows[a][b / 64] >> (b % 64) & 1 == 1
    }
}

/// All chordless cycles of `g`, canonical and sorted by length and then
/// edge sequence.
pub fn chordless_cycles(g: &Graph) -> Result<Vec<Cycle>> {
    chordless_cycles_capped(g, DEFAULT_CYCLE_CAP)
}

/// Grows induced paths from each start vertex `s` through vertices larger
/// than `s`; a path closes into a chordless cycle exactly when its new end is
/// adjacent to `s` and to no interior vertex.
pub fn chordless_cycles_capped(g: &Graph, cap: usize) -> Result<Vec<Cycle>> {
    let adj = Adjacency::new(g);
    let n = g.vertex_count();
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut on_path = vec![false; n];

    fn extend(
        g: &Graph,
        adj: &Adjacency,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        found: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> Result<()> {
        let s = path[0];
        let last = *path.last().unwrap();
        for &(w, _) in g.neighbors(last) {
            if w <= s || on_path[w] {
                continue;
            }
            if path[1..path.len() - 1].iter().any(|&p| adj.has(p, w)) {
                continue;
            }
            if adj.has(s, w) {
                if path[1] < w {
                    let mut cycle = path.clone();
                    cycle.push(w);
                    found.push(cycle);
                    if found.len() > cap {
                        return Err(Error::Resource(format!("more than {cap} chordless cycles")));
                    }
                }
                continue;
            }
            path.push(w);
            on_path[w] = true;
            extend(g, adj, path, on_path, found, cap)?;
            on_path[w] = false;
            path.pop();
        }
        Ok(())
    }

    for s in 0..n {
        on_path[s] = true;
        for &(p1, _) in g.neighbors(s) {
            if p1 <= s {
                continue;
            }
            let mut path = vec![s, p1];
            on_path[p1] = true;
            extend(g, &adj, &mut path, &mut on_path, &mut found, cap)?;
            on_path[p1] = false;
        }
        on_path[s] = false;
    }
    let mut cycles: Vec<Cycle> =
        found.iter().map(|vs| Cycle::from_vertex_loop(g, vs)).collect::<Result<_>>()?;
    cycles.sort_by(|a, b| (a.len(), a.edges()).cmp(&(b.len(), b.edges())));
    Ok(cycles)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SharedEdgesWitness {
    pub first: Cycle,
    pub second: Cycle,
    pub shared_edges: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CiGraphVerdict {
    pub is_ci: bool,
    pub chordless_cycles: usize,
    pub witness: Option<SharedEdgesWitness>,
}

/// Whether every two chordless cycles of a bipartite graph share at most
/// one edge. The first offending pair (in enumeration order) is returned as
/// a witness.
pub fn is_ci_graph(g: &Graph) -> Result<CiGraphVerdict> {
    if g.is_bipartite().is_none() {
        return Err(Error::NotBipartite);
    }
    let cycles = chordless_cycles(g)?;
    Ok(ci_verdict_from(&cycles))
}

pub(crate) fn ci_verdict_from(cycles: &[Cycle]) -> CiGraphVerdict {
    let witness = pair_sharing_two_edges(cycles);
    CiGraphVerdict { is_ci: witness.is_none(), chordless_cycles: cycles.len(), witness }
}

/// First pair of cycles (in list order) with at least two common edges.
pub fn pair_sharing_two_edges(cycles: &[Cycle]) -> Option<SharedEdgesWitness> {
    let sets: Vec<BTreeSet<usize>> = cycles.iter().map(Cycle::edge_set).collect();
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            let shared: Vec<usize> = sets[i].intersection(&sets[j]).copied().collect();
            if shared.len() >= 2 {
                return Some(SharedEdgesWitness {
                    first: cycles[i].clone(),
                    second: cycles[j].clone(),
                    shared_edges: shared,
                });
            }
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundRelation {
    Equal,
    Strict,
    Violated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChordlessCount {
    pub count: usize,
    /// `e - v + 1`
    pub bound: i64,
    pub relation: BoundRelation,
}

impl ChordlessCount {
    pub fn new(count: usize, bound: i64) -> Self {
        let relation = match (count as i64).cmp(&bound) {
            std::cmp::Ordering::Equal => BoundRelation::Equal,
            std::cmp::Ordering::Greater => BoundRelation::Strict,
            std::cmp::Ordering::Less => BoundRelation::Violated,
        };
        ChordlessCount { count, bound, relation }
    }
}

/// Compares the number of chordless cycles of a connected graph with
/// `e - v + 1`.
pub fn chordless_count_check(g: &Graph) -> Result<ChordlessCount> {
    let components = g.component_count();
    if components > 1 {
        return Err(Error::Disconnected { components });
    }
    let count = chordless_cycles(g)?.len();
    Ok(ChordlessCount::new(count, g.edge_count() as i64 - g.vertex_count() as i64 + 1))
}

/// Visits every minimal closed walk of length `2..=max_len` whose first edge
/// is its least edge, in both traversal directions. The visitor sees raw
/// edge sequences; rotations and reversals of one walk may be visited more
/// than once.
fn for_each_minimal_closed_walk<F>(g: &Graph, max_len: usize, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    fn grow<F: FnMut(&[usize]) -> ControlFlow<()>>(
        g: &Graph,
        start: usize,
        cur: usize,
        edges: &mut Vec<usize>,
        max_len: usize,
        visit: &mut F,
    ) -> ControlFlow<()> {
        let first = edges[0];
        let last = *edges.last().unwrap();
        if edges.len() >= 2 && cur == start && last != first {
            visit(edges)?;
        }
        if edges.len() == max_len {
            return ControlFlow::Continue(());
        }
        for &(w, e) in g.neighbors(cur) {
            if e < first || e == last {
                continue;
            }
            edges.push(e);
            grow(g, start, w, edges, max_len, visit)?;
            edges.pop();
        }
        ControlFlow::Continue(())
    }

    for e0 in 0..g.edge_count() {
        let (a, b) = g.edge(e0);
        for (start, next) in [(a, b), (b, a)] {
            let mut edges = vec![e0];
            grow(g, start, next, &mut edges, max_len, &mut visit)?;
        }
    }
    ControlFlow::Continue(())
}

fn psi_is_zero(edges: &[usize], nvars: usize) -> bool {
    let odd = Monomial::from_vars(nvars, edges.iter().step_by(2).copied());
    let even = Monomial::from_vars(nvars, edges.iter().skip(1).step_by(2).copied());
    odd == even
}

/// Minimal closed walks of even length `4..=max_len`, up to rotation and
/// reversal, whose alternating products differ. Walks inducing the same
/// pair of alternating products are reported once, by the least
/// representative.
pub fn minimal_even_walks(g: &Graph, max_len: usize) -> Result<Vec<Walk>> {
    if max_len < 4 || max_len % 2 == 1 {
        return Err(Error::Domain(format!("max_len must be even and at least 4, got {max_len}")));
    }
    let nvars = g.edge_count();
    let mut canon: BTreeSet<Vec<usize>> = BTreeSet::new();
    let _ = for_each_minimal_closed_walk(g, max_len, |edges| {
        if edges.len() % 2 == 0 && !psi_is_zero(edges, nvars) {
            canon.insert(canonical_sequence(edges));
        }
        ControlFlow::Continue(())
    });
    let mut ordered: Vec<Vec<usize>> = canon.into_iter().collect();
    ordered.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for seq in ordered {
        let odd = Monomial::from_vars(nvars, seq.iter().step_by(2).copied());
        let even = Monomial::from_vars(nvars, seq.iter().skip(1).step_by(2).copied());
        let key = if odd < even { (odd, even) } else { (even, odd) };
        if seen.insert(key) {
            out.push(Walk::closed_from_edges(g, &seq)?);
        }
    }
    Ok(out)
}

/// Number of minimal closed walks of exactly `len` edges up to rotation and
/// reversal, without any further identification.
pub fn count_minimal_closed_walks(g: &Graph, len: usize) -> usize {
    let mut canon: HashSet<Vec<usize>> = HashSet::new();
    let _ = for_each_minimal_closed_walk(g, len, |edges| {
        if edges.len() == len {
            canon.insert(canonical_sequence(edges));
        }
        ControlFlow::Continue(())
    });
    canon.len()
}

/// Length `2L` of the shortest minimal even closed walk with nonzero
/// alternating binomial; `None` when the toric ideal is zero.
pub fn smallest_even_walk_length(g: &Graph) -> Option<usize> {
    if g.toric_height() == 0 {
        return None;
    }
    let nvars = g.edge_count();
    let mut len = 4;
    while len <= 2 * g.edge_count() {
        let hit = for_each_minimal_closed_walk(g, len, |edges| {
            if edges.len() == len && !psi_is_zero(edges, nvars) {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if hit.is_break() {
            return Some(len);
        }
        len += 2;
    }
    None
}

/// Visits each simple cycle once as a vertex loop starting at its least
/// vertex.
pub fn for_each_cycle<F>(g: &Graph, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    fn grow<F: FnMut(&[usize]) -> ControlFlow<()>>(
        g: &Graph,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        visit: &mut F,
    ) -> ControlFlow<()> {
        let s = path[0];
        let last = *path.last().unwrap();
        for &(w, _) in g.neighbors(last) {
            if w == s && path.len() >= 3 && path[1] < last {
                visit(path)?;
            }
            if w <= s || on_path[w] {
                continue;
            }
            path.push(w);
            on_path[w] = true;
            grow(g, path, on_path, visit)?;
            on_path[w] = false;
            path.pop();
        }
        ControlFlow::Continue(())
    }
    let mut on_path = vec![false; g.vertex_count()];
    for s in 0..g.vertex_count() {
        let mut path = vec![s];
        on_path[s] = true;
        grow(g, &mut path, &mut on_path, &mut visit)?;
        on_path[s] = false;
    }
    ControlFlow::Continue(())
}

/// Length of a longest simple cycle, 0 for forests.
pub fn longest_cycle_length(g: &Graph) -> usize {
    let mut best = 0;
    let _ = for_each_cycle(g, |c| {
        best = best.max(c.len());
        ControlFlow::Continue(())
    });
    best
}

pub fn has_at_most_one_odd_cycle(g: &Graph) -> bool {
    let mut odd = 0;
    for_each_cycle(g, |c| {
        if c.len() % 2 == 1 {
            odd += 1;
        }
        if odd > 1 {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })
    .is_continue()
}
