use rand::seq::SliceRandom;
use rand_chacha::ChaCha8Rng;

use crate::bipartite::{degree_matching, edge_color, BipartiteGraph, DegreeDemand, MatchOutcome};
use crate::grid::{BlockIndex, Order, RectShape, SudokuGrid};

use super::CompletionError;

/// Values assigned to the `k` columns of one block by stage 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockAssignment {
    pub block: BlockIndex,
    /// `columns[j]` holds the sorted values for grid column
    /// `(block_col − 1)·k + j + 1`.
    pub columns: Vec<Vec<usize>>,
}

/// A set of columns in one block that cannot each receive `per_column`
/// distinct new values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockObstruction {
    pub block: BlockIndex,
    /// 1-based grid columns.
    pub columns: Vec<usize>,
    /// Values placeable in at least one of `columns`: absent from the
    /// block and absent from that column.
    pub candidates: Vec<usize>,
    pub per_column: usize,
}

impl BlockObstruction {
    /// Re-derives the candidate set from the grid's cells and checks
    /// `|candidates| < per_column · |columns|`.
    pub fn replay(&self, grid: &SudokuGrid) -> bool {
        let order = grid.order();
        let (k, n) = (order.k(), order.n());
        if self.block.block_row == 0
            || self.block.block_row > k
            || self.block.block_col == 0
            || self.block.block_col > k
            || self.columns.is_empty()
        {
            return false;
        }
        let rows = self.block.rows(order);
        let cols = self.block.cols(order);
        if !self.columns.iter().all(|c| cols.contains(c)) {
            return false;
        }
        let filled_rows = rows
            .clone()
            .filter(|&r| cols.clone().all(|c| grid.get(r, c).is_some()))
            .count();
        if self.per_column != k - filled_rows {
            return false;
        }
        let in_block: Vec<usize> = rows
            .flat_map(|r| cols.clone().filter_map(move |c| grid.get(r, c)))
            .collect();
        let mut candidates = Vec::new();
        for v in 1..=n {
            if in_block.contains(&v) {
                continue;
            }
            let somewhere = self
                .columns
                .iter()
                .any(|&c| (1..=n).all(|r| grid.get(r, c) != Some(v)));
            if somewhere {
                candidates.push(v);
            }
        }
        candidates == self.candidates && candidates.len() < self.per_column * self.columns.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Stage1 {
    Assigned(BlockAssignment),
    Infeasible(BlockObstruction),
}

/// Stage-1 output for a whole row block.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RowBlockAssignment {
    pub order: Order,
    /// 1-based row block.
    pub block_row: usize,
    /// `columns[c]` holds the values assigned to grid column `c + 1`.
    pub columns: Vec<Vec<usize>>,
}

impl RowBlockAssignment {
    pub fn new(order: Order, block_row: usize) -> Self {
        RowBlockAssignment {
            order,
            block_row,
            columns: vec![Vec::new(); order.n()],
        }
    }

    pub fn insert(&mut self, block: BlockAssignment) {
        let k = self.order.k();
        for (j, vals) in block.columns.into_iter().enumerate() {
            self.columns[(block.block.block_col - 1) * k + j] = vals;
        }
    }
}

/// A 1-based cell write.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Placement {
    pub row: usize,
    pub col: usize,
    pub value: usize,
}

/// Stage 1 for one block of the first incomplete row block: give each of
/// the block's columns `k − r` values that are absent from the block and
/// from the column, with no value used twice in the block.
pub fn assign_block_columns(
    grid: &SudokuGrid,
    shape: RectShape,
    block: BlockIndex,
) -> Result<Stage1, CompletionError> {
    if grid.rect_shape() != Some(shape) {
        return Err(CompletionError::NotRectangle);
    }
    assign_block_columns_with(grid, shape, block, None)
}

pub(super) fn assign_block_columns_with(
    grid: &SudokuGrid,
    shape: RectShape,
    block: BlockIndex,
    rng: Option<&mut ChaCha8Rng>,
) -> Result<Stage1, CompletionError> {
    let order = grid.order();
    let (k, n) = (order.k(), order.n());
    if shape.m >= n {
        return Err(CompletionError::AlreadyComplete);
    }
    if block.block_row != shape.l + 1 || block.block_col == 0 || block.block_col > k {
        return Err(CompletionError::WrongBlock {
            block,
            expected: shape.l + 1,
        });
    }
    let per_column = k - shape.r;
    let c0 = (block.block_col - 1) * k;
    let eligible: Vec<usize> = (1..=n)
        .filter(|&v| {
            (shape.l * k..shape.m).all(|r| (c0..c0 + k).all(|c| grid.at(r, c) != v))
        })
        .collect();

    let mut edges = Vec::new();
    for j in 0..k {
        for (e, &v) in eligible.iter().enumerate() {
            if grid.free_in_col(c0 + j, v) {
                edges.push((j, e));
            }
        }
    }
    if let Some(rng) = rng {
        edges.shuffle(rng);
    }
    let graph = BipartiteGraph::with_edges(k, eligible.len(), edges)?;
    let demand = DegreeDemand::one_to_many(k, eligible.len(), per_column);
    match degree_matching(&graph, &demand)? {
        MatchOutcome::Matched(matching) => {
            let mut columns = vec![Vec::with_capacity(per_column); k];
            for e in matching.edges {
                let (j, v) = graph.edges()[e];
                columns[j].push(eligible[v]);
            }
            columns.iter_mut().for_each(|c| c.sort_unstable());
            Ok(Stage1::Assigned(BlockAssignment { block, columns }))
        }
        MatchOutcome::Infeasible(cert) => Ok(Stage1::Infeasible(BlockObstruction {
            block,
            columns: cert.violating_set.iter().map(|&j| c0 + j + 1).collect(),
            candidates: cert.neighborhood.iter().map(|&v| eligible[v]).collect(),
            per_column,
        })),
    }
}

/// Stage 2: distributes each column's assigned values over the row block's
/// `k − r` empty rows so that no row repeats a value.
pub fn place_row_block(
    assignment: &RowBlockAssignment,
    shape: RectShape,
) -> Result<Vec<Placement>, CompletionError> {
    place_row_block_with(assignment, shape, None)
}

pub(super) fn place_row_block_with(
    assignment: &RowBlockAssignment,
    shape: RectShape,
    rng: Option<&mut ChaCha8Rng>,
) -> Result<Vec<Placement>, CompletionError> {
    let (k, n) = (assignment.order.k(), assignment.order.n());
    let degree = k - shape.r;
    let regular_error = CompletionError::NotRegular { expected: degree };
    if assignment.columns.len() != n || assignment.block_row != shape.l + 1 {
        return Err(regular_error);
    }
    let mut edges = Vec::with_capacity(n * degree);
    for (c, vals) in assignment.columns.iter().enumerate() {
        if vals.len() != degree || vals.iter().any(|&v| v == 0 || v > n) {
            return Err(regular_error);
        }
        edges.extend(vals.iter().map(|&v| (c, v - 1)));
    }
    if let Some(rng) = rng {
        edges.shuffle(rng);
    }
    let graph = BipartiteGraph::with_edges(n, n, edges)?;
    if graph.right_degrees().iter().any(|&d| d != degree) {
        return Err(regular_error);
    }
    let coloring = edge_color(&graph);
    debug_assert_eq!(coloring.num_colors, degree);
    let first_empty = shape.l * k + shape.r + 1;
    let mut placements: Vec<Placement> = graph
        .edges()
        .iter()
        .zip(&coloring.colors)
        .map(|(&(c, v), &color)| Placement {
            row: first_empty + color,
            col: c + 1,
            value: v + 1,
        })
        .collect();
    placements.sort_unstable_by_key(|p| (p.row, p.col));
    Ok(placements)
}
