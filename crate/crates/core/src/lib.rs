//! Exact computations in the Grassmannian cluster category.
//!
//! The crate covers rank-one Cohen-Macaulay modules `L_I` and their Hom/Ext
//! spaces, profiles of graded lifts on the lattice cylinder, Grothendieck
//! classes in `Z^n(k)` with the quadratic form `q`, and the cluster-mutation
//! side (weak separation, exact Laurent mutation, multidegree census).
//!
//! Profiles are always listed top contour first, as in `"135|246"`.

pub mod catalog;
pub mod cluster;
pub mod error;
pub mod exactalg;
pub mod profiles;
pub mod rankone;
pub mod subsets;
pub mod weights;

pub use error::{Error, Result};
pub use exactalg::{Poly, PolyMatrix};
pub use profiles::{Contour, DimWindow, Profile};
pub use rankone::{ExponentVector, Presentation, RankOneModule};
pub use subsets::{KSubset, PluckerTriple};
pub use weights::{RootBasisCoords, Weight};

/// Reduces `a` into `1..=n`.
pub(crate) fn wrap(a: i64, n: usize) -> usize {
    (a - 1).rem_euclid(n as i64) as usize + 1
}
