//! Pure-difference binomials in the edge ring and the generating sets of the
//! toric ideal built from them.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::cycles::{self, Walk};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::groebner::{Engine, DEFAULT_DEGREE_CAP};
use crate::monomial::{Monomial, MonomialOrder};

/// `plus - minus` with `plus > minus` in lex order. Zero is never
/// represented.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Binomial {
    plus: Monomial,
    minus: Monomial,
}

impl Binomial {
    /// Orders the two monomials; `None` when they coincide.
    pub fn new(a: Monomial, b: Monomial) -> Option<Binomial> {
        match a.cmp(&b) {
            std::cmp::Ordering::Greater => Some(Binomial { plus: a, minus: b }),
            std::cmp::Ordering::Less => Some(Binomial { plus: b, minus: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn plus(&self) -> &Monomial {
        &self.plus
    }

    pub fn minus(&self) -> &Monomial {
        &self.minus
    }

    pub fn into_parts(self) -> (Monomial, Monomial) {
        (self.plus, self.minus)
    }

    pub fn nvars(&self) -> usize {
        self.plus.nvars()
    }

    /// Degree of the leading monomial (both terms agree for homogeneous
    /// binomials).
    pub fn degree(&self) -> u32 {
        self.plus.degree()
    }

    /// Divides out the common factor of the two terms.
    pub fn cancelled(self) -> Binomial {
        let g = self.plus.gcd(&self.minus);
        if g.is_one() {
            return self;
        }
        Binomial { plus: self.plus.div(&g), minus: self.minus.div(&g) }
    }

    pub fn is_coprime(&self) -> bool {
        self.plus.is_coprime(&self.minus)
    }

    pub fn render(&self, prefix: &str) -> String {
        format!("{} - {}", self.plus.render(prefix), self.minus.render(prefix))
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("e"))
    }
}

/// A list of binomials together with the order they were computed under.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BinomialIdealBasis {
    pub elements: Vec<Binomial>,
    pub order: MonomialOrder,
    pub reduced: bool,
}

impl BinomialIdealBasis {
    pub fn new(nvars: usize, elements: Vec<Binomial>) -> Self {
        BinomialIdealBasis { elements, order: MonomialOrder::lex(nvars), reduced: false }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Number of elements in each degree.
    pub fn degree_counts(&self) -> BTreeMap<u32, usize> {
        let mut out = BTreeMap::new();
        for b in &self.elements {
            *out.entry(b.degree()).or_insert(0) += 1;
        }
        out
    }
}

/// Alternating binomial of an even closed walk: odd-position edges against
/// even-position edges, common factors cancelled. `None` when the two
/// products agree.
pub fn psi(w: &Walk, ord: MonomialOrder) -> Result<Option<Binomial>> {
    if !w.is_closed() || w.is_empty() {
        return Err(Error::Domain("psi needs a closed walk".into()));
    }
    if w.len() % 2 == 1 {
        return Err(Error::Domain(format!("psi needs an even walk, got length {}", w.len())));
    }
    let (odd, even) = w.alternating_products(ord.nvars);
    Ok(Binomial::new(odd, even).map(Binomial::cancelled))
}

/// Vertex-degree vector of an edge monomial, i.e. the exponent vector of
/// its image under `e -> uv`.
pub fn vertex_degrees(g: &Graph, m: &Monomial) -> Vec<u32> {
    let mut deg = vec![0u32; g.vertex_count()];
    for e in m.support() {
        let (a, b) = g.edge(e);
        deg[a] += m.exponent(e) as u32;
        deg[b] += m.exponent(e) as u32;
    }
    deg
}

/// Whether `b` lies in the toric ideal of `g`.
pub fn kernel_membership(b: &Binomial, g: &Graph) -> bool {
    b.nvars() == g.edge_count() && vertex_degrees(g, b.plus()) == vertex_degrees(g, b.minus())
}

/// Alternating binomials of the chordless cycles of a bipartite graph.
pub fn cycle_generators(g: &Graph) -> Result<BinomialIdealBasis> {
    if g.is_bipartite().is_none() {
        return Err(Error::NotBipartite);
    }
    let ord = MonomialOrder::lex(g.edge_count());
    let mut elements = Vec::new();
    for c in cycles::chordless_cycles(g)? {
        elements.extend(psi(c.walk(), ord)?);
    }
    Ok(BinomialIdealBasis { elements, order: ord, reduced: false })
}

fn check_members(basis: &BinomialIdealBasis, g: &Graph) -> Result<()> {
    for b in &basis.elements {
        if !kernel_membership(b, g) {
            return Err(Error::Domain(format!("{b} is not in the toric ideal of the graph")));
        }
    }
    Ok(())
}

/// Reduced Gröbner basis of the ideal generated by `basis`, under lex.
pub fn buchberger(basis: &BinomialIdealBasis) -> Result<BinomialIdealBasis> {
    buchberger_capped(basis, DEFAULT_DEGREE_CAP)
}

pub fn buchberger_capped(basis: &BinomialIdealBasis, degree_cap: u32) -> Result<BinomialIdealBasis> {
    groebner_with(basis, false, degree_cap)
}

/// Like [`buchberger`] but cancels common factors during reduction, which is
/// sound only when `basis` generates a prime ideal without monomials (such
/// as a full generating set of a toric ideal).
pub(crate) fn toric_groebner(basis: &BinomialIdealBasis, degree_cap: u32) -> Result<BinomialIdealBasis> {
    groebner_with(basis, true, degree_cap)
}

fn groebner_with(basis: &BinomialIdealBasis, saturate: bool, degree_cap: u32) -> Result<BinomialIdealBasis> {
    let mut engine = Engine::new(basis.order.nvars, saturate, degree_cap);
    for b in &basis.elements {
        engine.add(b.clone())?;
    }
    engine.complete()?;
    Ok(BinomialIdealBasis { elements: engine.reduced_basis(), order: basis.order, reduced: true })
}

/// Generators of the toric ideal by eliminating vertex variables from
/// `<e - uv>`; returns its reduced lex Gröbner basis.
pub fn elimination_generators(g: &Graph) -> Result<BinomialIdealBasis> {
    elimination_generators_capped(g, DEFAULT_DEGREE_CAP)
}

pub fn elimination_generators_capped(g: &Graph, degree_cap: u32) -> Result<BinomialIdealBasis> {
    let (nv, ne) = (g.vertex_count(), g.edge_count());
    // vertices weigh 1 and edges 2, which makes every e - uv homogeneous
    let weights: Vec<u32> = (0..nv).map(|_| 1).chain((0..ne).map(|_| 2)).collect();
    let mut engine = Engine::weighted(weights, true, degree_cap);
    for (k, &(a, b)) in g.edges().iter().enumerate() {
        let uv = Monomial::from_vars(nv + ne, [a, b]);
        let e = Monomial::from_vars(nv + ne, [nv + k]);
        engine.add(Binomial::new(uv, e).expect("distinct monomials"))?;
    }
    engine.complete()?;
    let elements: Vec<Binomial> = engine
        .reduced_basis()
        .into_iter()
        .filter(|b| b.plus().exponents()[..nv].iter().chain(&b.minus().exponents()[..nv]).all(|&x| x == 0))
        .map(|b| Binomial::new(b.plus().tail_vars(nv), b.minus().tail_vars(nv)).expect("nonzero"))
        .collect();
    Ok(BinomialIdealBasis { elements, order: MonomialOrder::lex(ne), reduced: true })
}

/// Extracts a minimal generating subset. Elements are processed by
/// increasing degree; in degree `d` an element is kept exactly when it is not
/// in the span of the lower-degree kept elements and the same-degree
/// elements already kept.
pub fn minimalize(basis: &BinomialIdealBasis, g: &Graph) -> Result<BinomialIdealBasis> {
    check_members(basis, g)?;
    let mut by_degree: BTreeMap<u32, Vec<&Binomial>> = BTreeMap::new();
    for b in &basis.elements {
        by_degree.entry(b.degree()).or_default().push(b);
    }
    let mut engine = Engine::new(basis.order.nvars, false, u32::MAX);
    let mut kept = Vec::new();
    for (d, elems) in by_degree {
        engine.advance(d)?;
        // normal forms are standard monomials; an element is new exactly when
        // it joins two classes not yet joined
        let mut classes = UnionFind::default();
        let mut fresh = Vec::new();
        for b in elems {
            let p = engine.normal_form(b.plus());
            let m = engine.normal_form(b.minus());
            if p == m {
                continue;
            }
            if classes.union(p.clone(), m.clone()) {
                kept.push(b.clone());
                fresh.extend(Binomial::new(p, m));
            }
        }
        for b in fresh {
            engine.add(b)?;
        }
    }
    kept.sort_by(|a, b| a.degree().cmp(&b.degree()).then(b.plus().cmp(a.plus())));
    Ok(BinomialIdealBasis { elements: kept, order: basis.order, reduced: false })
}

#[derive(Default)]
struct UnionFind {
    index: std::collections::HashMap<Monomial, usize>,
    parent: Vec<usize>,
}

impl UnionFind {
    fn id(&mut self, m: Monomial) -> usize {
        let next = self.parent.len();
        let id = *self.index.entry(m).or_insert(next);
        if id == next {
            self.parent.push(next);
        }
        id
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Joins the classes of `a` and `b`; false if already joined.
    fn union(&mut self, a: Monomial, b: Monomial) -> bool {
        let (x, y) = (self.id(a), self.id(b));
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        self.parent[rx] = ry;
        true
    }
}

/// One Gröbner basis element and the walk realising it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WalkMatch {
    pub binomial: Binomial,
    /// Edge sequence of the closed walk.
    pub walk: Vec<usize>,
    pub is_cycle: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WalkSubsetReport {
    pub matched: Vec<WalkMatch>,
    pub unmatched: Vec<Binomial>,
    /// Whether matches were required to be even cycles.
    pub cycles_required: bool,
}

impl WalkSubsetReport {
    pub fn all_matched(&self) -> bool {
        self.unmatched.is_empty()
    }
}

/// Realises each basis element as the alternating binomial of a minimal
/// even closed walk, and as an even cycle when `g` has at most one odd
/// cycle.
pub fn groebner_walk_subset(g: &Graph, gb: &BinomialIdealBasis) -> WalkSubsetReport {
    let cycles_required = cycles::has_at_most_one_odd_cycle(g);
    let mut matched = Vec::new();
    let mut unmatched = Vec::new();
    for b in &gb.elements {
        match find_walk(g, b, cycles_required) {
            Some(walk) => {
                let is_cycle = Walk::closed_from_edges(g, &walk).map(|w| w.is_cycle()).unwrap_or(false);
                matched.push(WalkMatch { binomial: b.clone(), walk, is_cycle });
            }
            None => unmatched.push(b.clone()),
        }
    }
    WalkSubsetReport { matched, unmatched, cycles_required }
}

/// Backtracking search for a closed walk whose odd-position edges multiply
/// to `plus` and even-position edges to `minus`.
fn find_walk(g: &Graph, b: &Binomial, simple: bool) -> Option<Vec<usize>> {
    if b.nvars() != g.edge_count() || !b.is_coprime() {
        return None;
    }
    let mut left: [Vec<u16>; 2] = [b.plus().exponents().to_vec(), b.minus().exponents().to_vec()];
    let len = 2 * b.degree() as usize;
    let e0 = b.plus().support().next()?;
    left[0][e0] -= 1;

    #[allow(clippy::too_many_arguments)]
    fn grow(
        g: &Graph,
        start: usize,
        cur: usize,
        walk: &mut Vec<usize>,
        visited: &mut Vec<bool>,
        left: &mut [Vec<u16>; 2],
        len: usize,
        simple: bool,
    ) -> bool {
        if walk.len() == len {
            return cur == start;
        }
        let side = walk.len() % 2;
        for &(w, e) in g.neighbors(cur) {
            if left[side][e] == 0 {
                continue;
            }
            let closing = walk.len() + 1 == len;
            if simple && (if closing { w != start } else { visited[w] }) {
                continue;
            }
            left[side][e] -= 1;
            walk.push(e);
            if !closing {
                visited[w] = true;
            }
            if grow(g, start, w, walk, visited, left, len, simple) {
                return true;
            }
            if !closing {
                visited[w] = false;
            }
            walk.pop();
            left[side][e] += 1;
        }
        false
    }

    let (a, c) = g.edge(e0);
    for (start, next) in [(a, c), (c, a)] {
        let mut visited = vec![false; g.vertex_count()];
        visited[start] = true;
        visited[next] = true;
        let mut walk = vec![e0];
        if grow(g, start, next, &mut walk, &mut visited, &mut left, len, simple) {
            return Some(walk);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn g(text: &str) -> Graph {
        Graph::parse(text).unwrap()
    }

    fn square() -> Graph {
        g("1 2\n2 3\n3 4\n4 1")
    }

    fn k23() -> Graph {
        g("1 3\n1 4\n1 5\n2 3\n2 4\n2 5")
    }

    #[test]
    fn psi_of_square() {
        let sq = square();
        let w = Walk::closed_from_edges(&sq, &[0, 1, 2, 3]).unwrap();
        let b = psi(&w, MonomialOrder::lex(4)).unwrap().unwrap();
        assert_eq!(b.to_string(), "e1*e3 - e2*e4");
        let t = Walk::closed_from_edges(&sq, &[0, 0]).unwrap();
        assert_eq!(psi(&t, MonomialOrder::lex(4)).unwrap(), None);
        let odd = Walk::closed_from_edges(&g("1 2\n2 3\n3 1"), &[0, 1, 2]).unwrap();
        assert!(psi(&odd, MonomialOrder::lex(3)).is_err());
        let open = Walk::from_vertices(&sq, &[0, 1, 2]).unwrap();
        assert!(psi(&open, MonomialOrder::lex(4)).is_err());
    }

    #[test]
    fn psi_of_bowtie_walk() {
        let bt = g("1 2\n2 3\n3 1\n1 4\n4 5\n5 1");
        let w = Walk::closed_from_edges(&bt, &[0, 1, 2, 3, 4, 5]).unwrap();
        let b = psi(&w, MonomialOrder::lex(6)).unwrap().unwrap();
        assert_eq!(b.to_string(), "e1*e3*e5 - e2*e4*e6");
        assert!(kernel_membership(&b, &bt));
    }

    #[test]
    fn kernel_membership_examples() {
        let path = g("1 2\n2 3");
        let b = Binomial::new(Monomial::from_vars(2, [0]), Monomial::from_vars(2, [1])).unwrap();
        assert!(!kernel_membership(&b, &path));
        let sq = square();
        let b = Binomial::new(Monomial::from_vars(4, [0, 2]), Monomial::from_vars(4, [1, 3])).unwrap();
        assert!(kernel_membership(&b, &sq));
    }

    #[test]
    fn json_shape() {
        let b = Binomial::new(Monomial::from_vars(4, [0, 2]), Monomial::from_vars(4, [1, 3])).unwrap();
        let json = serde_json::to_string(&b).unwrap();
        assert_eq!(json, r#"{"plus":{"0":1,"2":1},"minus":{"1":1,"3":1}}"#);
    }

    #[test]
    fn cycle_generators_examples() {
        assert_eq!(cycle_generators(&square()).unwrap().len(), 1);
        assert_eq!(cycle_generators(&k23()).unwrap().len(), 3);
        assert_eq!(cycle_generators(&families::cube()).unwrap().len(), 10);
        assert_eq!(cycle_generators(&g("1 2\n2 3\n3 1")), Err(Error::NotBipartite));
    }

    #[test]
    fn buchberger_examples() {
        let sq = cycle_generators(&square()).unwrap();
        let gb = buchberger(&sq).unwrap();
        assert_eq!(gb.elements, sq.elements);
        assert!(gb.reduced);
        let gb = buchberger(&cycle_generators(&k23()).unwrap()).unwrap();
        assert_eq!(gb.len(), 3);
        let cube = families::cube();
        let gb = buchberger(&cycle_generators(&cube).unwrap()).unwrap();
        assert_eq!(gb.len(), 14);
        assert!(crate::groebner::is_groebner_basis(&gb.elements));
        assert!(gb.elements.iter().all(|b| kernel_membership(b, &cube)));
    }

    #[test]
    fn elimination_examples() {
        assert!(elimination_generators(&g("1 2\n2 3\n3 1")).unwrap().is_empty());
        let sq = elimination_generators(&square()).unwrap();
        assert_eq!(sq.elements.len(), 1);
        assert_eq!(sq.elements[0].to_string(), "e1*e3 - e2*e4");
        let cube = families::cube();
        let elim = elimination_generators(&cube).unwrap();
        let gb = buchberger(&cycle_generators(&cube).unwrap()).unwrap();
        assert_eq!(elim.elements, gb.elements, "reduced bases are unique");
        assert_eq!(minimalize(&elim, &cube).unwrap().len(), 10);
    }

    #[test]
    fn minimalize_examples() {
        let k = k23();
        assert_eq!(minimalize(&cycle_generators(&k).unwrap(), &k).unwrap().len(), 3);
        let sq = square();
        assert_eq!(minimalize(&elimination_generators(&sq).unwrap(), &sq).unwrap().len(), 1);
        // duplicates and multiples are dropped
        let mut basis = cycle_generators(&sq).unwrap();
        let b = basis.elements[0].clone();
        let twice = Binomial::new(b.plus().mul(b.plus()), b.minus().mul(b.minus())).unwrap();
        basis.elements.extend([b, twice]);
        assert_eq!(minimalize(&basis, &sq).unwrap().len(), 1);
        let bad = BinomialIdealBasis::new(
            2,
            vec![Binomial::new(Monomial::from_vars(2, [0]), Monomial::from_vars(2, [1])).unwrap()],
        );
        assert!(minimalize(&bad, &g("1 2\n2 3")).is_err());
    }

    #[test]
    fn walk_subset_examples() {
        let sq = square();
        let r = groebner_walk_subset(&sq, &elimination_generators(&sq).unwrap());
        assert!(r.all_matched() && r.cycles_required);
        assert_eq!(r.matched[0].walk, vec![0, 1, 2, 3]);
        let g2 = families::g_n(2);
        let r = groebner_walk_subset(&g2, &elimination_generators(&g2).unwrap());
        assert!(r.all_matched());
        assert!(r.matched.iter().all(|m| m.is_cycle));
    }

    #[test]
    fn non_bipartite_elimination_matches_walks() {
        let bt = g("1 2\n2 3\n3 1\n1 4\n4 5\n5 1");
        let gb = elimination_generators(&bt).unwrap();
        assert_eq!(gb.len(), 1);
        assert_eq!(gb.elements[0].degree(), 3);
        let r = groebner_walk_subset(&bt, &gb);
        assert!(r.all_matched() && !r.cycles_required);
    }
}
