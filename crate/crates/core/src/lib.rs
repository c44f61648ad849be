//! Toric edge ideals of graphs and complete-intersection tests.
//!
//! The edge algebra `k[G]` is the monomial subalgebra generated by `uv` for
//! the edges `uv` of `G`. Its presentation ideal `K_G` is generated by
//! pure-difference binomials attached to even closed walks. This crate
//! decides whether `K_G` is a complete intersection in three independent
//! ways:
//!
//! * combinatorially, from the chordless cycles of a bipartite graph
//!   ([`cycles::is_ci_graph`]);
//! * by brute force, counting minimal generators through fiber connectivity
//!   ([`oracle::ci_oracle`]);
//! * algebraically, by eliminating vertex variables with Buchberger's
//!   algorithm and extracting a minimal generating set
//!   ([`binomial::elimination_generators`], [`binomial::minimalize`]).
//!
//! ```
//! use edgealg::{families, cycles, oracle};
//!
//! let g = families::g_n(3);
//! assert!(cycles::is_ci_graph(&g).unwrap().is_ci);
//! let census = oracle::minimal_generator_census(&g, 3, oracle::DEFAULT_MONOMIAL_CAP).unwrap();
//! assert_eq!(census.total, g.toric_height());
//! ```

pub mod binomial;
pub mod cycles;
pub mod error;
pub mod families;
pub mod graph;
pub mod groebner;
pub mod hilbert;
pub mod monomial;
pub mod oracle;
pub mod planarity;
pub mod report;

pub use binomial::{Binomial, BinomialIdealBasis};
pub use cycles::{Cycle, Walk};
pub use error::{Error, Result};
pub use graph::Graph;
pub use monomial::{EdgeMonomial, Monomial, MonomialOrder};
