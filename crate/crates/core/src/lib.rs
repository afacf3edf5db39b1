//! Exact counting of proper colorings of graph products `G × P_n` and `G × C_n`
//! through a symmetry-compactified transfer matrix whose entries are integer
//! polynomials in the number of colors, together with monomial transition
//! matrices that count order-preserving maps on stacked posets.
//!
//! Every fast route has a brute-force counterpart in [`oracle`] (and, for
//! posets, in [`markov::brute_force_order_preserving`]).

pub mod eigen;
pub mod error;
pub mod graph;
pub mod markov;
pub mod oracle;
pub mod orbits;
pub mod poly;
pub mod transfer;

pub use error::{Error, Result};
pub use graph::{Graph, Permutation};
pub use poly::{BivarPolynomial, IntPolynomial, PolyMatrix, RationalGenFun};
pub use markov::{build_transition_matrix, BasePoset, TransitionMatrix};
pub use oracle::PartialColoring;
pub use orbits::{IndependentPartition, OrbitSet};
pub use transfer::{build_l, CompactTransferMatrix};
