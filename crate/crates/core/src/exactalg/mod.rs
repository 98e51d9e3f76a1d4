//! Exact univariate polynomials over `Q`, polynomial matrices and their Smith normal form.

mod matrix;
mod poly;
mod snf;

pub use matrix::{rational_rank, PolyMatrix};
pub use poly::Poly;
pub use snf::{rank_at_zero, smith_normal_form, torsion_dimension};
