//! Shared generators and brute-force oracles for the integration tests.
#![allow(dead_code)]

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::hash::{Hash, Hasher};

use edgealg::{Binomial, Graph, Monomial};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn graph(text: &str) -> Graph {
    Graph::parse(text).unwrap()
}

pub fn square() -> Graph {
    graph("1 2\n2 3\n3 4\n4 1")
}

pub fn bowtie() -> Graph {
    graph("1 2\n2 3\n3 1\n1 4\n4 5\n5 1")
}

pub fn k23() -> Graph {
    graph("1 3\n1 4\n1 5\n2 3\n2 4\n2 5")
}

pub fn k33() -> Graph {
    graph("1 4\n1 5\n1 6\n2 4\n2 5\n2 6\n3 4\n3 5\n3 6")
}

fn from_pairs(pairs: &[(usize, usize)]) -> Graph {
    Graph::from_edges(pairs.iter().map(|&(a, b)| (a as u64, b as u64))).unwrap()
}

#[derive(Clone)]
struct Small {
    n: usize,
    side: Vec<bool>,
    edges: Vec<(usize, usize)>,
}

impl Small {
    fn adj(&self) -> Vec<u32> {
        let mut adj = vec![0u32; self.n];
        for &(a, b) in &self.edges {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        adj
    }
}

/// Colour refinement with hashed colours; equal for isomorphic graphs.
fn refined_colours(adj: &[u32]) -> Vec<u64> {
    let n = adj.len();
    let mut colour: Vec<u64> = adj.iter().map(|m| m.count_ones() as u64).collect();
    for _ in 0..n {
        colour = (0..n)
            .map(|v| {
                let mut nbr: Vec<u64> = (0..n).filter(|&w| adj[v] >> w & 1 == 1).map(|w| colour[w]).collect();
                nbr.sort_unstable();
                let mut h = DefaultHasher::new();
                (colour[v], nbr).hash(&mut h);
                h.finish()
            })
            .collect();
    }
    colour
}

fn isomorphic(a: &[u32], ca: &[u64], b: &[u32], cb: &[u64]) -> bool {
    let n = a.len();
    // map vertices of `a` in BFS order so adjacency constraints bite early
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        order.push(s);
        let mut i = order.len() - 1;
        while i < order.len() {
            let v = order[i];
            for w in 0..n {
                if a[v] >> w & 1 == 1 && !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    fn go(k: usize, order: &[usize], map: &mut [usize], used: &mut [bool], a: &[u32], ca: &[u64], b: &[u32], cb: &[u64]) -> bool {
        if k == order.len() {
            return true;
        }
        let v = order[k];
        for t in 0..b.len() {
            if used[t] || cb[t] != ca[v] {
                continue;
            }
            let ok = order[..k].iter().all(|&u| (a[v] >> u & 1) == (b[t] >> map[u] & 1));
            if !ok {
                continue;
            }
            map[v] = t;
            used[t] = true;
            if go(k + 1, order, map, used, a, ca, b, cb) {
                return true;
            }
            used[t] = false;
        }
        false
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    go(0, &order, &mut map, &mut used, a, ca, b, cb)
}

/// Every connected bipartite graph with `1..=max_e` edges, one per
/// isomorphism class, ordered by edge count.
pub fn connected_bipartite_graphs(max_e: usize) -> Vec<Graph> {
    let mut level = vec![Small { n: 2, side: vec![false, true], edges: vec![(0, 1)] }];
    let mut out: Vec<Graph> = level.iter().map(|s| from_pairs(&s.edges)).collect();
    for _ in 2..=max_e {
        let mut classes: HashMap<(usize, Vec<u64>), Vec<(Vec<u32>, Vec<u64>)>> = HashMap::new();
        let mut next = Vec::new();
        for g in &level {
            let mut candidates = Vec::new();
            for a in 0..g.n {
                let mut h = g.clone();
                h.n += 1;
                h.side.push(!g.side[a]);
                h.edges.push((a, g.n));
                candidates.push(h);
            }
            let adj = g.adj();
            for a in 0..g.n {
                for b in a + 1..g.n {
                    if g.side[a] != g.side[b] && adj[a] >> b & 1 == 0 {
                        let mut h = g.clone();
                        h.edges.push((a, b));
                        candidates.push(h);
                    }
                }
            }
            for h in candidates {
                let adj = h.adj();
                let colours = refined_colours(&adj);
                let mut key = colours.clone();
                key.sort_unstable();
                let bucket = classes.entry((h.n, key)).or_default();
                if bucket.iter().any(|(b, cb)| isomorphic(&adj, &colours, b, cb)) {
                    continue;
                }
                bucket.push((adj, colours));
                next.push(h);
            }
        }
        out.extend(next.iter().map(|s| from_pairs(&s.edges)));
        level = next;
    }
    out
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A random connected bipartite graph with at most `max_e` edges and at
/// most five vertices per side.
pub fn random_connected_bipartite(rng: &mut StdRng, max_e: usize) -> Graph {
    loop {
        let left = rng.gen_range(1..=5usize);
        let right = rng.gen_range(1..=5usize);
        let n = left + right;
        let e = rng.gen_range(n - 1..=max_e.max(n - 1));
        if n - 1 > max_e || e > left * right {
            continue;
        }
        let side = |v: usize| v < left;
        let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
        // random spanning tree by attaching each new vertex to an earlier
        // vertex of the other side
        let mut order: Vec<usize> = (0..n).collect();
        shuffle(rng, &mut order);
        let mut placed: Vec<usize> = vec![order[0]];
        let mut pending: Vec<usize> = order[1..].to_vec();
        while !pending.is_empty() {
            let pos = pending.iter().position(|&v| placed.iter().any(|&p| side(p) != side(v)));
            let Some(pos) = pos else { break };
            let v = pending.remove(pos);
            let opts: Vec<usize> = placed.iter().copied().filter(|&p| side(p) != side(v)).collect();
            let p = opts[rng.gen_range(0..opts.len())];
            edges.insert((p.min(v), p.max(v)));
            placed.push(v);
        }
        if !pending.is_empty() {
            continue;
        }
        while edges.len() < e {
            let a = rng.gen_range(0..left);
            let b = left + rng.gen_range(0..right);
            edges.insert((a, b));
        }
        let mut list: Vec<(usize, usize)> = edges.into_iter().collect();
        shuffle(rng, &mut list);
        return from_pairs(&list);
    }
}

/// A random connected graph of any parity with at most `max_e` edges.
pub fn random_connected(rng: &mut StdRng, max_e: usize) -> Graph {
    loop {
        let n = rng.gen_range(2..=8usize);
        if n - 1 > max_e {
            continue;
        }
        let e = rng.gen_range(n - 1..=max_e.min(n * (n - 1) / 2));
        let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
        for v in 1..n {
            let p = rng.gen_range(0..v);
            edges.insert((p, v));
        }
        while edges.len() < e {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            if a != b {
                edges.insert((a.min(b), a.max(b)));
            }
        }
        let mut list: Vec<(usize, usize)> = edges.into_iter().collect();
        shuffle(rng, &mut list);
        return from_pairs(&list);
    }
}

fn shuffle<T>(rng: &mut StdRng, xs: &mut [T]) {
    for i in (1..xs.len()).rev() {
        let j = rng.gen_range(0..=i);
        xs.swap(i, j);
    }
}

/// Chordless cycles as edge sets, found as vertex subsets inducing a
/// connected 2-regular subgraph.
pub fn brute_chordless_edge_sets(g: &Graph) -> BTreeSet<BTreeSet<usize>> {
    let n = g.vertex_count();
    assert!(n <= 20, "subset oracle is exponential");
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() < 3 {
            continue;
        }
        let inside = |v: usize| mask >> v & 1 == 1;
        let induced: Vec<usize> = (0..g.edge_count())
            .filter(|&e| {
                let (a, b) = g.edge(e);
                inside(a) && inside(b)
            })
            .collect();
        if induced.len() != mask.count_ones() as usize {
            continue;
        }
        let mut deg = vec![0; n];
        for &e in &induced {
            let (a, b) = g.edge(e);
            deg[a] += 1;
            deg[b] += 1;
        }
        if (0..n).any(|v| inside(v) && deg[v] != 2) {
            continue;
        }
        if g.edge_subgraph(&induced).is_connected() {
            out.insert(induced.into_iter().collect());
        }
    }
    out
}

/// Whether some closed walk of odd length exists, by breadth-first search on
/// (vertex, parity) states.
pub fn has_odd_closed_walk(g: &Graph) -> bool {
    (0..g.vertex_count()).any(|s| {
        let mut seen = HashSet::from([(s, 0u8)]);
        let mut queue = vec![(s, 0u8)];
        while let Some((v, p)) = queue.pop() {
            for &(w, _) in g.neighbors(v) {
                let state = (w, 1 - p);
                if state == (s, 1) {
                    return true;
                }
                if seen.insert(state) {
                    queue.push(state);
                }
            }
        }
        false
    })
}

/// Components of `g` with vertex `skip` deleted.
fn components_without(g: &Graph, skip: Option<usize>) -> usize {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if Some(s) == skip || seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &(w, _) in g.neighbors(v) {
                if Some(w) != skip && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

/// Cut vertices by deletion.
pub fn brute_articulation_points(g: &Graph) -> Vec<usize> {
    let base = components_without(g, None);
    (0..g.vertex_count())
        .filter(|&v| g.degree(v) > 0 && components_without(g, Some(v)) > base)
        .collect()
}

/// Degree-`d` edge monomials as sorted edge lists.
pub fn monomials_of_degree(e: usize, d: usize) -> Vec<Vec<usize>> {
    fn go(e: usize, d: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for i in from..e {
            cur.push(i);
            go(e, d, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(e, d, 0, &mut Vec::new(), &mut out);
    out
}

/// Number of distinct vertex-degree vectors of degree-`d` edge monomials,
/// which is the Hilbert function of the edge algebra in degree `d`.
pub fn distinct_multidegrees(g: &Graph, d: usize) -> usize {
    let mut seen = HashSet::new();
    for m in monomials_of_degree(g.edge_count(), d) {
        let mut b = vec![0u8; g.vertex_count()];
        for e in m {
            let (x, y) = g.edge(e);
            b[x] += 1;
            b[y] += 1;
        }
        seen.insert(b);
    }
    seen.len()
}

/// Rewrites `m` by leading terms of `gb` until no lead divides it.
pub fn normal_form(m: &Monomial, gb: &[Binomial]) -> Monomial {
    let mut m = m.clone();
    while let Some(b) = gb.iter().find(|b| b.plus().divides(&m)) {
        m = m.div(b.plus()).mul(b.minus());
    }
    m
}

/// Whether `b` reduces to zero modulo the Gröbner basis `gb`.
pub fn in_ideal(b: &Binomial, gb: &[Binomial]) -> bool {
    normal_form(b.plus(), gb) == normal_form(b.minus(), gb)
}

/// Triangles through edge `e`, by checking every third vertex.
pub fn brute_triangles_at(g: &Graph, e: usize) -> usize {
    let (a, b) = g.edge(e);
    (0..g.vertex_count()).filter(|&w| g.has_edge(a, w) && g.has_edge(b, w)).count()
}
