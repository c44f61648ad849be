//! Planarity testing with certificates.
//!
//! Each block is tested with the path-addition algorithm of Demoucron,
//! Malgrange and Pertuiset; a planar graph is returned with the face cycles
//! of every block, and a non-planar graph with a Kuratowski subdivision
//! obtained by deleting edges while non-planarity persists.

use std::collections::{BTreeMap, HashSet, VecDeque};

use serde::Serialize;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// Faces of one block, each a cyclic sequence of vertex indices of the
/// parent graph. A bridge block has the single face `[a, b]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockFaces {
    pub edges: Vec<usize>,
    pub faces: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub blocks: Vec<BlockFaces>,
}

/// Edge set of a subdivision of `K5` or `K3,3`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub edges: Vec<usize>,
    pub branch_vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Planarity {
    Planar(Embedding),
    NonPlanar(KuratowskiWitness),
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }
}

pub fn is_planar(g: &Graph) -> Planarity {
    match embed(g) {
        Some(embedding) => Planarity::Planar(embedding),
        None => Planarity::NonPlanar(kuratowski_witness(g)),
    }
}

fn embed(g: &Graph) -> Option<Embedding> {
    let mut blocks = Vec::new();
    for edges in g.block_edge_sets() {
        let sub = g.edge_subgraph(&edges);
        let faces = embed_block(&sub)?;
        let to_parent = |v: usize| g.index_of(sub.label(v)).unwrap();
        let faces = faces.into_iter().map(|f| f.into_iter().map(to_parent).collect()).collect();
        blocks.push(BlockFaces { edges, faces });
    }
    Some(Embedding { blocks })
}

/// A cycle through edge 0, found as a shortest path between its endpoints
/// that avoids the edge itself.
fn find_cycle(g: &Graph) -> Vec<usize> {
    let (a, b) = g.edge(0);
    let mut prev = vec![usize::MAX; g.vertex_count()];
    prev[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(v) = queue.pop_front() {
        for &(w, e) in g.neighbors(v) {
            if e == 0 || prev[w] != usize::MAX {
                continue;
            }
            prev[w] = v;
            if w == b {
                let mut cycle = vec![b];
                let mut x = b;
                while x != a {
                    x = prev[x];
                    cycle.push(x);
                }
                return cycle;
            }
            queue.push_back(w);
        }
    }
    Vec::new()
}

struct Fragment {
    contacts: Vec<usize>,
    interior: Vec<usize>,
    single_edge: Option<usize>,
}

/// Path-addition embedding of a biconnected graph. Returns `None` when the
/// block is not planar.
fn embed_block(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    let m = g.edge_count();
    if m == 1 {
        let (a, b) = g.edge(0);
        return Some(vec![vec![a, b]]);
    }
    if n >= 3 && m > 3 * n - 6 {
        return None;
    }
    // every edge of a block with two or more edges lies on a cycle
    let cycle = find_cycle(g);
    debug_assert!(cycle.len() >= 3);
    let mut placed_v = vec![false; n];
    let mut placed_e = vec![false; m];
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        placed_v[a] = true;
        placed_e[g.edge_between(a, b).unwrap()] = true;
    }
    let mut faces = vec![cycle.clone(), cycle.into_iter().rev().collect::<Vec<_>>()];
    let mut remaining = placed_e.iter().filter(|&&p| !p).count();

    while remaining > 0 {
        let fragments = fragments(g, &placed_v, &placed_e);
        let face_sets: Vec<HashSet<usize>> =
            faces.iter().map(|f| f.iter().copied().collect()).collect();
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&k| frag.contacts.iter().all(|c| face_sets[k].contains(c)))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice?;
        let path = fragment_path(g, &fragments[fi], &placed_v);
        for w in path.windows(2) {
            let e = g.edge_between(w[0], w[1]).unwrap();
            placed_e[e] = true;
            remaining -= 1;
        }
        for &v in &path {
            placed_v[v] = true;
        }
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
    }
    Some(faces)
}

fn fragments(g: &Graph, placed_v: &[bool], placed_e: &[bool]) -> Vec<Fragment> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if !placed_e[e] && placed_v[a] && placed_v[b] {
            out.push(Fragment { contacts: vec![a.min(b), a.max(b)], interior: vec![], single_edge: Some(e) });
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if placed_v[s] || seen[s] {
            continue;
        }
        let mut interior = vec![s];
        let mut contacts = std::collections::BTreeSet::new();
        seen[s] = true;
        let mut i = 0;
        while i < interior.len() {
            let v = interior[i];
            i += 1;
            for &(w, _) in g.neighbors(v) {
                if placed_v[w] {
                    contacts.insert(w);
                } else if !seen[w] {
                    seen[w] = true;
                    interior.push(w);
                }
            }
        }
        out.push(Fragment { contacts: contacts.into_iter().collect(), interior, single_edge: None });
    }
    out
}

/// A path through the fragment joining two distinct contact vertices.
fn fragment_path(g: &Graph, frag: &Fragment, placed_v: &[bool]) -> Vec<usize> {
    if let Some(e) = frag.single_edge {
        let (a, b) = g.edge(e);
        return vec![a, b];
    }
    let inside: HashSet<usize> = frag.interior.iter().copied().collect();
    let start = frag.contacts[0];
    let mut prev: BTreeMap<usize, usize> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for &(w, _) in g.neighbors(start) {
        if inside.contains(&w) && !prev.contains_key(&w) {
            prev.insert(w, start);
            queue.push_back(w);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &(w, _) in g.neighbors(v) {
            if placed_v[w] && w != start {
                let mut path = vec![w, v];
                let mut x = v;
                while let Some(&p) = prev.get(&x) {
                    path.push(p);
                    if p == start {
                        break;
                    }
                    x = p;
                }
                path.reverse();
                return path;
            }
            if inside.contains(&w) && !prev.contains_key(&w) {
                prev.insert(w, v);
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragment of a block has at least two contacts")
}

fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let len = face.len();
    let (u, v) = (path[0], *path.last().unwrap());
    let i = face.iter().position(|&x| x == u).unwrap();
    let j = face.iter().position(|&x| x == v).unwrap();
    let interior = &path[1..path.len() - 1];
    let mut first = Vec::new();
    let mut k = i;
    loop {
        first.push(face[k]);
        if k == j {
            break;
        }
        k = (k + 1) % len;
    }
    first.extend(interior.iter().rev());
    let mut second = Vec::new();
    let mut k = j;
    loop {
        second.push(face[k]);
        if k == i {
            break;
        }
        k = (k + 1) % len;
    }
    second.extend(interior.iter());
    (first, second)
}

fn kuratowski_witness(g: &Graph) -> KuratowskiWitness {
    let mut kept: Vec<usize> = (0..g.edge_count()).collect();
    let mut k = 0;
    while k < kept.len() {
        let mut trial = kept.clone();
        trial.remove(k);
        if embed(&g.edge_subgraph(&trial)).is_none() {
            kept = trial;
        } else {
            k += 1;
        }
    }
    let mut degree = vec![0usize; g.vertex_count()];
    for &e in &kept {
        let (a, b) = g.edge(e);
        degree[a] += 1;
        degree[b] += 1;
    }
    let branch_vertices: Vec<usize> = (0..degree.len()).filter(|&v| degree[v] >= 3).collect();
    let kind = if branch_vertices.len() == 5 { KuratowskiKind::K5 } else { KuratowskiKind::K33 };
    KuratowskiWitness { kind, edges: kept, branch_vertices }
}

impl Embedding {
    /// Checks that every block's faces use each block edge exactly twice and
    /// satisfy Euler's formula `V - E + F = 2`.
    pub fn verify(&self, g: &Graph) -> bool {
        let mut covered = vec![0usize; g.edge_count()];
        for block in &self.blocks {
            let mut uses: BTreeMap<usize, usize> = BTreeMap::new();
            let mut verts = HashSet::new();
            for face in &block.faces {
                for i in 0..face.len() {
                    let (a, b) = (face[i], face[(i + 1) % face.len()]);
                    verts.insert(a);
                    match g.edge_between(a, b) {
                        Some(e) => *uses.entry(e).or_default() += 1,
                        None => return false,
                    }
                }
            }
            let mut block_edges = block.edges.clone();
            block_edges.sort_unstable();
            if uses.keys().copied().collect::<Vec<_>>() != block_edges || uses.values().any(|&c| c != 2)
            {
                return false;
            }
            let euler = verts.len() as i64 - block.edges.len() as i64 + block.faces.len() as i64;
            if euler != 2 {
                return false;
            }
            for &e in &block.edges {
                covered[e] += 1;
            }
        }
        covered.iter().all(|&c| c == 1)
    }
}

impl KuratowskiWitness {
    /// Checks that the edge set is a subdivision of `K5` or `K3,3` in `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &e in &self.edges {
            if e >= g.edge_count() {
                return false;
            }
            let (a, b) = g.edge(e);
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        let branch: Vec<usize> =
            adj.iter().filter(|(_, ns)| ns.len() >= 3).map(|(&v, _)| v).collect();
        if adj.iter().any(|(v, ns)| ns.len() != 2 && !branch.contains(v)) {
            return false;
        }
        // smooth degree-2 vertices into branch-to-branch links
        let mut links: Vec<(usize, usize)> = Vec::new();
        let mut walked = 0usize;
        for &b in &branch {
            for &first in &adj[&b] {
                let (mut prev, mut cur) = (b, first);
                let mut steps = 1;
                while !branch.contains(&cur) {
                    let ns = &adj[&cur];
                    let next = if ns[0] == prev { ns[1] } else { ns[0] };
                    prev = cur;
                    cur = next;
                    steps += 1;
                }
                if cur == b {
                    return false;
                }
                if b < cur {
                    links.push((b, cur));
                    walked += steps;
                }
            }
        }
        if walked != self.edges.len() {
            return false;
        }
        links.sort_unstable();
        let distinct = {
            let mut d = links.clone();
            d.dedup();
            d.len() == links.len()
        };
        if !distinct {
            return false;
        }
        match self.kind {
            KuratowskiKind::K5 => {
                branch.len() == 5 && links.len() == 10 && branch.iter().all(|v| adj[v].len() == 4)
            }
            KuratowskiKind::K33 => {
                if branch.len() != 6 || links.len() != 9 || branch.iter().any(|v| adj[v].len() != 3) {
                    return false;
                }
                // the link graph must be 2-colourable with sides of size 3
                let mut side: BTreeMap<usize, bool> = BTreeMap::new();
                side.insert(branch[0], false);
                let mut changed = true;
                while changed {
                    changed = false;
                    for &(a, b) in &links {
                        match (side.get(&a).copied(), side.get(&b).copied()) {
                            (Some(x), None) => {
                                side.insert(b, !x);
                                changed = true;
                            }
                            (None, Some(y)) => {
                                side.insert(a, !y);
                                changed = true;
                            }
                            (Some(x), Some(y)) if x == y => return false,
                            _ => {}
                        }
                    }
                }
                side.len() == 6 && side.values().filter(|&&s| s).count() == 3
            }
        }
    }
}
