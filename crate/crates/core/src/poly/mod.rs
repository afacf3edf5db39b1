//! Exact polynomial arithmetic: `Z[k]`, square matrices over `Z[k]`,
//! `Z[k][z]`, and rational functions in `z` over `Z[k]`.

mod bivar;
mod int_poly;
mod interp;
mod matrix;
mod ratfun;
pub mod ring;

pub use bivar::BivarPolynomial;
pub use int_poly::IntPolynomial;
pub use interp::{interpolate, interpolate_rational};
pub use matrix::{adjugate_apply, adjugate_i_minus_z_l, det_i_minus_z_l, PolyMatrix};
pub use ratfun::RationalGenFun;
