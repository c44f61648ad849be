//! Named example graphs with fixed vertex labels and edge orders.
//!
//! * `g_n(n)`: vertices `x = 1`, `y = 2`, `u_i = 2i + 1`, `v_i = 2i + 2`;
//!   edges `(x, y)`, then `(x, u_i)`, `(y, v_i)`, `(u_i, v_i)` for
//!   `i = 1..n`, each group in increasing `i`.
//! * `h_n(n)`: `g_n(n)` without the edge `(x, y)`.
//! * `cube()`: the 3-cube on `1..=8`, 12 edges.
//! * `octagon()`: an 8-cycle on `1..=8` with a triangle hung on each odd
//!   vertex, 16 vertices and 20 edges.
//! * `remark()`: a non-bipartite, non-planar graph on 8 vertices and 12
//!   edges whose edge algebra is a complete intersection.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn build(edges: &[(u64, u64)]) -> Graph {
    Graph::from_edges(edges.iter().copied()).expect("family graphs are simple")
}

pub fn g_n(n: usize) -> Graph {
    family_edges(n, true)
}

pub fn h_n(n: usize) -> Graph {
    family_edges(n, false)
}

fn family_edges(n: usize, with_xy: bool) -> Graph {
    let (x, y) = (1u64, 2u64);
    let u = |i: usize| 2 * i as u64 + 1;
    let v = |i: usize| 2 * i as u64 + 2;
    let mut edges = Vec::new();
    if with_xy {
        edges.push((x, y));
    }
    edges.extend((1..=n).map(|i| (x, u(i))));
    edges.extend((1..=n).map(|i| (y, v(i))));
    edges.extend((1..=n).map(|i| (u(i), v(i))));
    build(&edges)
}

pub fn cube() -> Graph {
    build(&[
        (1, 2),
        (1, 4),
        (1, 5),
        (2, 3),
        (2, 6),
        (3, 4),
        (3, 7),
        (4, 8),
        (5, 6),
        (8, 5),
        (6, 7),
        (7, 8),
    ])
}

pub fn octagon() -> Graph {
    let mut edges: Vec<(u64, u64)> = (1..=8).map(|i| (i, i % 8 + 1)).collect();
    for (k, hub) in [1u64, 3, 5, 7].into_iter().enumerate() {
        let a = 9 + 2 * k as u64;
        edges.extend([(hub, a), (hub, a + 1), (a, a + 1)]);
    }
    build(&edges)
}

pub fn remark() -> Graph {
    build(&[
        (1, 4),
        (1, 5),
        (1, 7),
        (2, 4),
        (2, 5),
        (2, 8),
        (8, 7),
        (6, 4),
        (6, 3),
        (3, 5),
        (6, 7),
        (3, 8),
    ])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Gn,
    Hn,
    Cube,
    Octagon,
    Remark,
}

impl Family {
    pub fn takes_n(self) -> bool {
        matches!(self, Family::Gn | Family::Hn)
    }

    pub fn generate(self, n: Option<usize>) -> Result<Graph> {
        match (self, n) {
            (Family::Gn | Family::Hn, None) => Err(Error::Domain(format!("{self} needs n"))),
            (Family::Gn | Family::Hn, Some(0)) => Err(Error::Domain("n must be at least 1".into())),
            (Family::Gn, Some(n)) => Ok(g_n(n)),
            (Family::Hn, Some(n)) => Ok(h_n(n)),
            (_, Some(_)) => Err(Error::Domain(format!("{self} takes no n"))),
            (Family::Cube, None) => Ok(cube()),
            (Family::Octagon, None) => Ok(octagon()),
            (Family::Remark, None) => Ok(remark()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Gn => "gn",
            Family::Hn => "hn",
            Family::Cube => "cube",
            Family::Octagon => "octagon",
            Family::Remark => "remark",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gn" => Ok(Family::Gn),
            "hn" => Ok(Family::Hn),
            "cube" => Ok(Family::Cube),
            "octagon" => Ok(Family::Octagon),
            "remark" => Ok(Family::Remark),
            _ => Err(Error::Domain(format!("unknown family {s:?}"))),
        }
    }
}

/// Identifies `g` as `h_n(n)` when its edge list is literally that of the
/// generator output.
pub fn as_h_n(g: &Graph) -> Option<usize> {
    let e = g.edge_count();
    if e == 0 || !e.is_multiple_of(3) {
        return None;
    }
    let n = e / 3;
    h_n(n).labelled_edges().eq(g.labelled_edges()).then_some(n)
}
