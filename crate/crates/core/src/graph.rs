//! Simple undirected graphs with stably indexed edges.
//!
//! Vertices carry non-negative integer labels but are addressed internally by
//! their position in the sorted label list. Edges keep the order in which they
//! were supplied: edge `i` is the variable `e_{i+1}` of the edge ring, and that
//! order fixes the lexicographic monomial order used everywhere downstream
//! (`e_1 > e_2 > ...`).

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};

pub type VertexId = u64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<VertexId>,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    Left,
    Right,
}

/// A proper 2-colouring, chosen per connected component so that the
/// smallest vertex of each component sits on the left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    side_of: Vec<Side>,
}

impl Bipartition {
    pub fn side(&self, v: usize) -> Side {
        self.side_of[v]
    }

    pub fn sides(&self) -> &[Side] {
        &self.side_of
    }

    pub fn left(&self) -> Vec<usize> {
        self.members(Side::Left)
    }

    pub fn right(&self) -> Vec<usize> {
        self.members(Side::Right)
    }

    fn members(&self, side: Side) -> Vec<usize> {
        (0..self.side_of.len()).filter(|&v| self.side_of[v] == side).collect()
    }
}

impl Graph {
    /// Builds a graph from explicit vertex labels and labelled edges. Endpoints
    /// missing from `vertices` are added.
    pub fn new(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self> {
        let edges: Vec<(VertexId, VertexId)> = edges.into_iter().collect();
        let mut set: BTreeSet<VertexId> = vertices.into_iter().collect();
        for &(a, b) in &edges {
            set.insert(a);
            set.insert(b);
        }
        let labels: Vec<VertexId> = set.into_iter().collect();
        let index: HashMap<VertexId, usize> =
            labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(edges.len());
        for &(a, b) in &edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            let (i, j) = (index[&a], index[&b]);
            if !seen.insert((i.min(j), i.max(j))) {
                return Err(Error::InvalidGraph(format!("duplicate edge {a} {b}")));
            }
            out.push((i, j));
        }
        Ok(Self::from_indexed(labels, out))
    }

    pub fn from_edges(edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self> {
        Self::new(std::iter::empty(), edges)
    }

    fn from_indexed(labels: Vec<VertexId>, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); labels.len()];
        for (k, &(a, b)) in edges.iter().enumerate() {
            adj[a].push((b, k));
            adj[b].push((a, k));
        }
        Graph { labels, edges, adj }
    }

    /// Parses the edge-list format: one edge per line given as two
    /// whitespace-separated non-negative integers, `#` starting a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut edges = Vec::new();
        let mut seen: HashMap<(VertexId, VertexId), usize> = HashMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line_no = n + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |message: String| Error::Parse { line: line_no, message };
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != 2 {
                return Err(parse_err(format!(
                    "expected two vertex ids, found {} tokens",
                    tokens.len()
                )));
            }
            let mut ids = [0 as VertexId; 2];
            for (slot, tok) in ids.iter_mut().zip(&tokens) {
                *slot = tok
                    .parse()
                    .map_err(|_| parse_err(format!("invalid vertex id `{tok}`")))?;
            }
            let [a, b] = ids;
            if a == b {
                return Err(parse_err(format!("loop at vertex {a}")));
            }
            if let Some(first) = seen.insert((a.min(b), a.max(b)), line_no) {
                return Err(parse_err(format!(
                    "duplicate edge {a} {b} (first given on line {first})"
                )));
            }
            edges.push((a, b));
        }
        if edges.is_empty() {
            return Err(Error::Parse { line: 0, message: "document contains no edges".into() });
        }
        Self::from_edges(edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[VertexId] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> VertexId {
        self.labels[v]
    }

    pub fn index_of(&self, label: VertexId) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn labelled_edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.edges.iter().map(|&(a, b)| (self.labels[a], self.labels[b]))
    }

    /// `(neighbour, edge index)` pairs at `v`.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_between(&self, a: usize, b: usize) -> Option<usize> {
        let (small, other) = if self.adj[a].len() <= self.adj[b].len() { (a, b) } else { (b, a) };
        self.adj[small].iter().find(|&&(w, _)| w == other).map(|&(_, e)| e)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edge_between(a, b).is_some()
    }

    /// The endpoint of `e` other than `v`.
    pub fn opposite(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    pub(crate) fn check_edge(&self, e: usize) -> Result<()> {
        if e < self.edges.len() {
            Ok(())
        } else {
            Err(Error::InvalidEdge { index: e, edges: self.edges.len() })
        }
    }

    /// Component id per vertex and the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &(w, _) in &self.adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn component_count(&self) -> usize {
        self.components().1
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// The connected components as standalone graphs, isolated vertices
    /// included, in order of their smallest vertex.
    pub fn component_graphs(&self) -> Vec<Graph> {
        let (comp, count) = self.components();
        let mut edge_sets = vec![Vec::new(); count];
        for (k, &(a, _)) in self.edges.iter().enumerate() {
            edge_sets[comp[a]].push(k);
        }
        let mut vertex_sets = vec![Vec::new(); count];
        for v in 0..self.vertex_count() {
            vertex_sets[comp[v]].push(self.labels[v]);
        }
        (0..count)
            .map(|c| {
                let mut g = self.edge_subgraph(&edge_sets[c]);
                if g.vertex_count() == 0 {
                    g = Graph::from_indexed(vertex_sets[c].clone(), Vec::new());
                }
                g
            })
            .collect()
    }

    /// The subgraph formed by the given edges and their endpoints. Edge order
    /// follows `edge_ids`.
    pub fn edge_subgraph(&self, edge_ids: &[usize]) -> Graph {
        let mut verts = BTreeSet::new();
        for &k in edge_ids {
            let (a, b) = self.edges[k];
            verts.insert(self.labels[a]);
            verts.insert(self.labels[b]);
        }
        let labels: Vec<VertexId> = verts.into_iter().collect();
        let edges = edge_ids
            .iter()
            .map(|&k| {
                let (a, b) = self.edges[k];
                let ia = labels.binary_search(&self.labels[a]).unwrap();
                let ib = labels.binary_search(&self.labels[b]).unwrap();
                (ia, ib)
            })
            .collect();
        Graph::from_indexed(labels, edges)
    }

    /// The graph with one edge removed (vertices are kept).
    pub fn without_edge(&self, e: usize) -> Result<Graph> {
        self.check_edge(e)?;
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != e)
            .map(|(_, &p)| p)
            .collect();
        Ok(Graph::from_indexed(self.labels.clone(), edges))
    }

    pub fn is_bipartite(&self) -> Option<Bipartition> {
        let n = self.vertex_count();
        let mut side: Vec<Option<Side>> = vec![None; n];
        let mut stack = Vec::new();
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(Side::Left);
            stack.push(s);
            while let Some(v) = stack.pop() {
                let here = side[v].unwrap();
                let there = match here {
                    Side::Left => Side::Right,
                    Side::Right => Side::Left,
                };
                for &(w, _) in &self.adj[v] {
                    match side[w] {
                        None => {
                            side[w] = Some(there);
                            stack.push(w);
                        }
                        Some(s) if s == here => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(Bipartition { side_of: side.into_iter().map(Option::unwrap).collect() })
    }

    /// Biconnected components (blocks) as edge-index lists, each sorted
    /// ascending; blocks are ordered by their smallest edge index. Every edge
    /// lies in exactly one block.
    pub fn block_edge_sets(&self) -> Vec<Vec<usize>> {
        struct State<'a> {
            g: &'a Graph,
            disc: Vec<usize>,
            low: Vec<usize>,
            time: usize,
            stack: Vec<usize>,
            blocks: Vec<Vec<usize>>,
        }
        fn visit(st: &mut State, v: usize, parent_edge: Option<usize>) {
            st.time += 1;
            st.disc[v] = st.time;
            st.low[v] = st.time;
            for i in 0..st.g.adj[v].len() {
                let (w, e) = st.g.adj[v][i];
                if Some(e) == parent_edge {
                    continue;
                }
                if st.disc[w] == 0 {
                    st.stack.push(e);
                    visit(st, w, Some(e));
                    st.low[v] = st.low[v].min(st.low[w]);
                    if st.low[w] >= st.disc[v] {
                        let mut block = Vec::new();
                        while let Some(top) = st.stack.pop() {
                            block.push(top);
                            if top == e {
                                break;
                            }
                        }
                        block.sort_unstable();
                        st.blocks.push(block);
                    }
                } else if st.disc[w] < st.disc[v] {
                    st.stack.push(e);
                    st.low[v] = st.low[v].min(st.disc[w]);
                }
            }
        }
        let n = self.vertex_count();
        let mut st = State {
            g: self,
            disc: vec![0; n],
            low: vec![0; n],
            time: 0,
            stack: Vec::new(),
            blocks: Vec::new(),
        };
        for v in 0..n {
            if st.disc[v] == 0 {
                visit(&mut st, v, None);
            }
        }
        let mut blocks = st.blocks;
        blocks.sort_by_key(|b| b[0]);
        blocks
    }

    /// Blocks as standalone graphs.
    pub fn blocks(&self) -> Vec<Graph> {
        self.block_edge_sets().iter().map(|b| self.edge_subgraph(b)).collect()
    }

    /// Contracts edge `e`: its second endpoint is merged into the first,
    /// resulting loops are dropped and parallel edges merged (the first
    /// occurrence keeps its place in the edge order).
    pub fn shrink_edge(&self, e: usize) -> Result<Graph> {
        self.check_edge(e)?;
        let (keep, gone) = self.edges[e];
        let remap = |v: usize| if v == gone { keep } else { v };
        let mut seen = HashSet::new();
        let mut labelled = Vec::new();
        for (k, &(a, b)) in self.edges.iter().enumerate() {
            if k == e {
                continue;
            }
            let (a, b) = (remap(a), remap(b));
            if a == b || !seen.insert((a.min(b), a.max(b))) {
                continue;
            }
            labelled.push((self.labels[a], self.labels[b]));
        }
        let gone_label = self.labels[gone];
        Graph::new(self.labels.iter().copied().filter(|&l| l != gone_label), labelled)
    }

    /// Number of triangles containing edge `e`.
    pub fn triangle_count_at(&self, e: usize) -> Result<usize> {
        self.check_edge(e)?;
        let (a, b) = self.edges[e];
        Ok(self.adj[a].iter().filter(|&&(w, _)| w != b && self.has_edge(w, b)).count())
    }

    /// Krull dimension of the edge algebra: per component `v - 1` when the
    /// component is bipartite and `v` otherwise.
    pub fn krull_dim(&self) -> usize {
        self.component_graphs()
            .iter()
            .map(|c| {
                let v = c.vertex_count();
                if c.is_bipartite().is_some() {
                    v - 1
                } else {
                    v
                }
            })
            .sum()
    }

    /// Height of the toric edge ideal, `e(G) - dim k[G]`.
    pub fn toric_height(&self) -> usize {
        self.edge_count() - self.krull_dim()
    }

    /// Sum over components of `e - v + 1`.
    pub fn cycle_rank(&self) -> usize {
        self.edge_count() + self.component_count() - self.vertex_count()
    }

    /// Undirected DOT rendering with decimal vertex ids, edge order kept.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        for v in 0..self.vertex_count() {
            if self.adj[v].is_empty() {
                let _ = writeln!(out, "  {};", self.labels[v]);
            }
        }
        for (a, b) in self.labelled_edges() {
            let _ = writeln!(out, "  {a} -- {b};");
        }
        out.push_str("}\n");
        out
    }

    /// Edge-list rendering accepted by [`Graph::parse`].
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (a, b) in self.labelled_edges() {
            let _ = writeln!(out, "{a} {b}");
        }
        out
    }
}
