//! Explicit rectangles: cyclic building blocks, non-completable
//! rectangles for every shape where completion is not guaranteed, and a
//! small order-9 fixture.

mod counterexample;
mod lemma2;

use thiserror::Error;

use crate::completion::{CompletionError, GuaranteeReason};
use crate::grid::{GridError, Order, SudokuGrid};

pub use counterexample::{
    construct_counterexample, ConstructionCase, CounterexampleReport, SpecialElements,
};
pub use lemma2::{construct_lemma2, PartitionScheme};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error(transparent)]
    Completion(#[from] CompletionError),
    #[error("constructions need k ≥ 3 for a non-completable shape; got k = {0}")]
    OrderTooSmall(usize),
    #[error("m is guaranteed-completable (k={k}, m={m}, {reason})")]
    Guaranteed { k: usize, m: usize, reason: GuaranteeReason },
    #[error("a = {a} and b = {b} must not exceed k = {k}")]
    DimensionTooLarge { a: usize, b: usize, k: usize },
    #[error("expected {expected} parts, found {found}")]
    PartCount { expected: usize, found: usize },
    #[error("part {part} has {len} elements, expected {k}")]
    PartSize { part: usize, len: usize, k: usize },
    #[error("value {value} is zero or appears in two parts")]
    PartsOverlap { value: usize },
    #[error("value {value} is outside 1..={n}")]
    ValueOutOfRange { value: usize, n: usize },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

const FIGURE1: [[usize; 9]; 5] = [
    [1, 2, 3, 4, 5, 6, 7, 8, 9],
    [4, 5, 6, 7, 8, 9, 1, 2, 3],
    [7, 8, 9, 1, 2, 3, 4, 5, 6],
    [8, 3, 2, 5, 6, 1, 9, 4, 7],
    [9, 6, 5, 8, 4, 7, 2, 3, 1],
];

/// A valid 5 × 9 rectangle of order 9 that has no completion.
///
/// ```
/// use sudoku_rect::constructions::figure1_fixture;
/// use sudoku_rect::completion::complete;
///
/// let g = figure1_fixture();
/// assert!(g.validate().is_valid());
/// assert!(!complete(&g).unwrap().is_completed());
/// ```
pub fn figure1_fixture() -> SudokuGrid {
    SudokuGrid::from_filled_rows(Order::new(3).expect("k = 3"), &FIGURE1)
        .expect("fixture is in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_rows() {
        let g = figure1_fixture();
        assert_eq!(g.rect_shape().unwrap().m, 5);
        let row4: Vec<_> = (1..=9).map(|c| g.get(4, c).unwrap()).collect();
        assert_eq!(row4, [8, 3, 2, 5, 6, 1, 9, 4, 7]);
    }

    #[test]
    fn guaranteed_message() {
        let e = construct_counterexample(3, 6).unwrap_err();
        assert!(e.to_string().starts_with("m is guaranteed-completable"));
    }
}
