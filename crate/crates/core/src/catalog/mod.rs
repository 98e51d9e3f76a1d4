//! Fixtures transcribed from published figures and the checks run against them.

mod checks;
mod dot;
mod fixtures;

pub use checks::{
    check_ar_window, check_contours, check_counterexample, check_gr25, check_gr36, check_gr37,
    check_gr38, check_gr38_triples, run_check, Assertion, Report, FIXTURES,
};
pub use dot::{exchange_graph, export_dot, fixture_graph, Graph};
