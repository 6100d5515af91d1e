//! Exact combinatorial invariants of graph picture spaces.
//!
//! A picture of a graph places a point for every vertex and a line for every
//! edge in projective `d`-space, with each point lying on the lines of its
//! incident edges. The space of all pictures decomposes into smooth pieces
//! ("cellules") indexed by set partitions of the vertex set, and essentially
//! everything one wants to know about its component structure can be computed
//! combinatorially. This crate provides those computations with exact
//! big-integer arithmetic:
//!
//! * [`graph`]: multigraphs, graphic-matroid rank/nullity, girth,
//!   contraction, connectivity, and family generators;
//! * [`polynomial`]: dense `q`-polynomials and sparse bivariate polynomials
//!   over arbitrary-precision integers;
//! * [`tutte`]: the Tutte polynomial by two independent routes, and the
//!   Poincaré polynomial of the picture space with its irreducibility test;
//! * [`partition`] and [`cellule`]: set partitions, cellule dimensions,
//!   `d`-heaviness, the ball-box model for complete multipartite graphs, and
//!   component classifications;
//! * [`order`]: the computable part of the cellule order, with certificates;
//! * [`mcd`]: the minimum constraint dimension by three cross-validating
//!   algorithms, with witnesses;
//! * [`enumerate`] and [`suites`]: exhaustive small-graph generation and the
//!   self-check suites exposed by the CLI.
//!
//! All types are immutable after construction and all operations are pure
//! functions, so everything is safe to call from multiple threads.

pub mod cellule;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod mcd;
pub mod order;
pub mod partition;
pub mod polynomial;
pub mod suites;
pub mod tutte;

pub use error::{Error, Result};
pub use graph::{ColoredVertexSet, EdgeSet, ExtNat, Graph};
pub use partition::SetPartition;

// Big integers appear in the public API (polynomial coefficients), so the
// crates defining them are re-exported for version-matched downstream use.
pub use num_bigint;
pub use num_traits;
