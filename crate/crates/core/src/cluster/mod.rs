//! Exact cluster mutation for the Grassmannian cluster structure.

mod enumerate;
mod laurent;
mod seed;

pub use enumerate::{
    census, census_matches_roots, default_budget, enumerate, enumerate_variables, Census,
    DegreeCensus, EnumerateOptions, Enumeration, EnumerationStats, VariableRecord,
};
pub use laurent::{LaurentExpr, Monomial, Numerator};
pub use seed::{exchange_patterns, initial_seed, mutate, verify_initial_exchanges, Seed};
