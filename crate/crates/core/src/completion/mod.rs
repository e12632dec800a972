//! Completion of `m × n` Sudoku rectangles.
//!
//! A rectangle is completed one row block at a time. For the first row
//! block that is not full, each of its `k` blocks independently assigns
//! `k − r` new values to each of its columns by a one-to-many bipartite
//! matching (stage 1). The column/value graph built from all those
//! assignments is `(k − r)`-regular, and a König edge coloring with `k − r`
//! colors says which empty row each value goes to (stage 2). Later row
//! blocks are empty and always complete the same way with `r = 0`.
//!
//! Stage 1 on the first partial row block is also the decision procedure:
//! it fails exactly when the rectangle has no completion, and the failing
//! block yields a Hall-deficient set of columns as a certificate.

mod complete;
mod extend;
mod predicate;
mod row_block;

use thiserror::Error;

use crate::bipartite::KernelError;
use crate::grid::{BlockIndex, GridError, Validity};

pub use complete::{complete, complete_seeded, CompletionOutcome};
pub use extend::extend_column_blocks;
pub use predicate::{decide_guaranteed, Completability, GuaranteeReason};
pub use row_block::{
    assign_block_columns, place_row_block, BlockAssignment, BlockObstruction, Placement,
    RowBlockAssignment, Stage1,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompletionError {
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error("grid is not a valid partial square: {0:?}")]
    Invalid(Validity),
    #[error("grid is not an m×n rectangle (first rows full, the rest empty)")]
    NotRectangle,
    #[error("grid is not an (m,k,n) rectangle (first m rows of the first k columns)")]
    NotColumnBlock,
    #[error("rectangle is already complete")]
    AlreadyComplete,
    #[error("block {block} is not in the first incomplete row block {expected}")]
    WrongBlock { block: BlockIndex, expected: usize },
    #[error("column/value graph is not {expected}-regular")]
    NotRegular { expected: usize },
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}
