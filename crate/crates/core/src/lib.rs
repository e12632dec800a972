//! Completion of Sudoku rectangles of general order `n = k²`.
//!
//! An `m × n` Sudoku rectangle has its first `m` rows filled and the rest
//! empty. This crate decides whether every such rectangle completes to a
//! full square, completes a given rectangle or reports why it cannot,
//! builds non-completable rectangles for every shape where completion is
//! not guaranteed, and counts squares exactly (small orders) or by bounds.
//!
//! ```
//! use sudoku_rect::completion::{complete, decide_guaranteed, CompletionOutcome};
//! use sudoku_rect::format;
//!
//! assert!(!decide_guaranteed(3, 5).unwrap().is_guaranteed());
//!
//! let grid = format::parse("k=2\n1 2 3 4\n3 4 1 2\n. . . .\n. . . .\n").unwrap();
//! let CompletionOutcome::Completed(square) = complete(&grid).unwrap() else { panic!() };
//! assert!(square.is_full() && square.extends(&grid));
//! ```

pub mod bipartite;
pub mod completion;
pub mod constructions;
pub mod counting;
pub mod format;
pub mod grid;

pub use grid::{BlockIndex, CellRef, ConflictKind, GridError, Order, RectShape, SudokuGrid, Validity};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;
    #[doc = include_str!("../../../book/src/grids.md")]
    struct Grids;
    #[doc = include_str!("../../../book/src/kernels.md")]
    struct Kernels;
    #[doc = include_str!("../../../book/src/completion.md")]
    struct Completion;
    #[doc = include_str!("../../../book/src/constructions.md")]
    struct Constructions;
    #[doc = include_str!("../../../book/src/counting.md")]
    struct Counting;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
}
