use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::grid::{BlockIndex, SudokuGrid};

use super::row_block::{assign_block_columns_with, place_row_block_with};
use super::{BlockObstruction, CompletionError, RowBlockAssignment, Stage1};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CompletionOutcome {
    /// A full square extending the input.
    Completed(SudokuGrid),
    /// Stage 1 failed in the first incomplete row block.
    NotCompletable(BlockObstruction),
}

impl CompletionOutcome {
    pub fn is_completed(&self) -> bool {
        matches!(self, CompletionOutcome::Completed(_))
    }
}

/// Completes an `m × n` Sudoku rectangle or proves that no completion
/// exists.
///
/// Deterministic: the same input always yields the same square.
pub fn complete(grid: &SudokuGrid) -> Result<CompletionOutcome, CompletionError> {
    complete_with(grid, None)
}

/// Like [`complete`], but shuffles every matching and coloring input with a
/// seeded generator. Useful for sampling varied squares; the answer to
/// "is it completable" never depends on the seed.
pub fn complete_seeded(grid: &SudokuGrid, seed: u64) -> Result<CompletionOutcome, CompletionError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    complete_with(grid, Some(&mut rng))
}

fn complete_with(
    grid: &SudokuGrid,
    mut rng: Option<&mut ChaCha8Rng>,
) -> Result<CompletionOutcome, CompletionError> {
    let validity = grid.validate();
    if !validity.is_valid() {
        return Err(CompletionError::Invalid(validity));
    }
    let mut shape = grid.rect_shape().ok_or(CompletionError::NotRectangle)?;
    let order = grid.order();
    let (k, n) = (order.k(), order.n());
    let first_partial = shape.l + 1;

    let mut work = grid.clone();
    while shape.m < n {
        let block_row = shape.l + 1;
        let mut assignment = RowBlockAssignment::new(order, block_row);
        for block_col in 1..=k {
            let block = BlockIndex::new(block_row, block_col);
            match assign_block_columns_with(&work, shape, block, rng.as_deref_mut())? {
                Stage1::Assigned(a) => assignment.insert(a),
                Stage1::Infeasible(obstruction) if block_row == first_partial => {
                    return Ok(CompletionOutcome::NotCompletable(obstruction));
                }
                Stage1::Infeasible(obstruction) => {
                    return Err(CompletionError::Internal(format!(
                        "empty row block {block_row} failed stage 1: {obstruction:?}"
                    )));
                }
            }
        }
        for p in place_row_block_with(&assignment, shape, rng.as_deref_mut())? {
            work.put(p.row - 1, p.col - 1, p.value);
        }
        shape = order.shape(block_row * k)?;
    }

    if !work.is_full() || !work.validate().is_valid() || !work.extends(grid) {
        return Err(CompletionError::Internal(
            "completed square failed verification".into(),
        ));
    }
    Ok(CompletionOutcome::Completed(work))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::figure1_fixture;
    use crate::grid::Order;

    #[test]
    fn figure1_is_rejected_at_block_2_1() {
        let g = figure1_fixture();
        let CompletionOutcome::NotCompletable(obs) = complete(&g).unwrap() else {
            panic!("figure 1 has no completion");
        };
        assert_eq!(obs.block, BlockIndex::new(2, 1));
        assert!(obs.columns.contains(&1));
        assert!(obs.replay(&g));
    }

    #[test]
    fn prefix_completes_to_a_square() {
        let prefix = figure1_fixture().truncate_rows(3).unwrap();
        let CompletionOutcome::Completed(sq) = complete(&prefix).unwrap() else {
            panic!("r = 0 always completes");
        };
        assert!(sq.is_full());
        assert!(sq.validate().is_valid());
        assert!(sq.extends(&prefix));
    }

    #[test]
    fn five_rows_of_a_square_complete() {
        let prefix = figure1_fixture().truncate_rows(3).unwrap();
        let CompletionOutcome::Completed(sq) = complete(&prefix).unwrap() else { panic!() };
        let five = sq.truncate_rows(5).unwrap();
        assert!(complete(&five).unwrap().is_completed());
    }

    #[test]
    fn empty_grid_is_deterministic() {
        let empty = SudokuGrid::new(Order::new(2).unwrap());
        let a = complete(&empty).unwrap();
        let b = complete(&empty).unwrap();
        assert_eq!(a, b);
        let CompletionOutcome::Completed(sq) = a else { panic!() };
        assert!(sq.is_full() && sq.validate().is_valid());
    }

    #[test]
    fn full_square_is_returned_unchanged() {
        let empty = SudokuGrid::new(Order::new(3).unwrap());
        let CompletionOutcome::Completed(sq) = complete(&empty).unwrap() else { panic!() };
        assert_eq!(complete(&sq).unwrap(), CompletionOutcome::Completed(sq.clone()));
    }

    #[test]
    fn seeds_vary_but_reproduce() {
        let empty = SudokuGrid::new(Order::new(3).unwrap());
        let a = complete_seeded(&empty, 1).unwrap();
        assert_eq!(a, complete_seeded(&empty, 1).unwrap());
        let distinct: std::collections::HashSet<_> = (0..8)
            .map(|s| complete_seeded(&empty, s).unwrap())
            .collect();
        assert!(distinct.len() > 1);
    }

    #[test]
    fn k_one() {
        let empty = SudokuGrid::new(Order::new(1).unwrap());
        let CompletionOutcome::Completed(sq) = complete(&empty).unwrap() else { panic!() };
        assert_eq!(sq.get(1, 1), Some(1));
    }

    #[test]
    fn rejects_non_rectangles_and_invalid_grids() {
        let mut g = SudokuGrid::new(Order::new(2).unwrap());
        g.set(2, 2, 1).unwrap();
        assert_eq!(complete(&g), Err(CompletionError::NotRectangle));
        let mut bad = SudokuGrid::from_filled_rows(Order::new(2).unwrap(), &[[1, 2, 3, 4]]).unwrap();
        bad.set(1, 4, 1).unwrap();
        assert!(matches!(complete(&bad), Err(CompletionError::Invalid(_))));
    }
}
