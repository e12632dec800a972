//! Exact completion counts for small grids, and log-space bounds on the
//! number of Sudoku squares built from perfect-matching bounds.

mod bounds;
mod enumerate;

pub use bounds::{
    asymptotic_table, ln_factorial, matching_bounds, render_bounds_kv, render_bounds_table,
    stirling_upper_ln, sudoku_bounds, AsymptoticRow, BoundsError, BoundsReport, MatchingBounds,
};
pub use enumerate::{count_completions, CountCaps, CountResult};
