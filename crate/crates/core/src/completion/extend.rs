use crate::bipartite::{degree_matching, edge_color, BipartiteGraph, DegreeDemand, MatchOutcome};
use crate::grid::SudokuGrid;

use super::CompletionError;

/// Extends an `(m, k, n)` rectangle (first `m` rows of the first column
/// block filled) to an `m × n` rectangle with the same first column block.
///
/// The partial last row block is first padded with `k − r` scratch rows
/// holding the values missing from its filled rows, in increasing order.
/// Each further column block is then added in two stages: per row block, a
/// matching gives every row `k` values it lacks, disjoint within the row
/// block; a `k`-edge-coloring of the row/value graph then assigns those
/// values to the block's `k` columns. The scratch rows are dropped at the
/// end. Scratch rows may repeat values down the first columns, which is
/// harmless because they never reach the output.
pub fn extend_column_blocks(grid: &SudokuGrid) -> Result<SudokuGrid, CompletionError> {
    let validity = grid.validate();
    if !validity.is_valid() {
        return Err(CompletionError::Invalid(validity));
    }
    let order = grid.order();
    let (k, n) = (order.k(), order.n());
    let m = match grid.pq_shape() {
        Some((0, _)) => return Ok(grid.clone()),
        Some((p, q)) if q == k => p,
        _ => return Err(CompletionError::NotColumnBlock),
    };
    let shape = order.shape(m)?;
    let total = if shape.r == 0 { m } else { (shape.l + 1) * k };

    let mut work: Vec<Vec<usize>> = (0..total)
        .map(|r| (0..n).map(|c| if r < m { grid.at(r, c) } else { 0 }).collect())
        .collect();
    if shape.r > 0 {
        let block_start = shape.l * k;
        let present: Vec<usize> = (block_start..m)
            .flat_map(|r| work[r][..k].to_vec())
            .collect();
        let mut missing = (1..=n).filter(|v| !present.contains(v));
        for row in work.iter_mut().take(total).skip(m) {
            for cell in row.iter_mut().take(k) {
                *cell = missing.next().expect("exactly n − rk values are missing");
            }
        }
    }

    for col_block in 1..k {
        let mut stage2 = BipartiteGraph::new(total, n);
        for row_block in 0..total / k {
            let rows = row_block * k..row_block * k + k;
            let mut g = BipartiteGraph::new(k, n);
            for (i, r) in rows.clone().enumerate() {
                for v in 1..=n {
                    if !work[r].contains(&v) {
                        g.add_edge(i, v - 1);
                    }
                }
            }
            let demand = DegreeDemand::one_to_many(k, n, k);
            let MatchOutcome::Matched(matching) = degree_matching(&g, &demand)? else {
                return Err(CompletionError::Internal(format!(
                    "no row/value matching for row block {} at column block {}",
                    row_block + 1,
                    col_block + 1
                )));
            };
            for e in matching.edges {
                let (i, v) = g.edges()[e];
                stage2.add_edge(rows.start + i, v);
            }
        }
        let coloring = edge_color(&stage2);
        if coloring.num_colors != k {
            return Err(CompletionError::Internal(format!(
                "row/value graph needs {} colors, expected {k}",
                coloring.num_colors
            )));
        }
        for (&(r, v), &color) in stage2.edges().iter().zip(&coloring.colors) {
            work[r][col_block * k + color] = v + 1;
        }
    }

    let out = SudokuGrid::from_filled_rows(order, &work[..m])?;
    if !out.validate().is_valid() {
        return Err(CompletionError::Internal(
            "column-block extension produced an invalid rectangle".into(),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::completion::{complete, CompletionOutcome};
    use crate::constructions::{construct_lemma2, PartitionScheme};
    use crate::grid::Order;

    fn first_cols_match(out: &SudokuGrid, input: &SudokuGrid, m: usize) {
        for r in 1..=m {
            for c in 1..=input.k() {
                assert_eq!(out.get(r, c), input.get(r, c));
            }
        }
    }

    #[test]
    fn lemma2_block_extends() {
        let parts = PartitionScheme::canonical(3, 3);
        let input = construct_lemma2(1, 3, 3, &parts).unwrap();
        // a=1, b=3: one row block, three columns; transpose-like column block.
        assert_eq!(input.pq_shape(), Some((3, 3)));
        let out = extend_column_blocks(&input).unwrap();
        assert_eq!(out.rect_shape().unwrap().m, 3);
        first_cols_match(&out, &input, 3);
    }

    #[test]
    fn partial_row_block_extends() {
        let order = Order::new(3).unwrap();
        let full = match complete(&SudokuGrid::new(order)).unwrap() {
            CompletionOutcome::Completed(sq) => sq,
            other => panic!("{other:?}"),
        };
        for m in 1..=9 {
            let mut block = SudokuGrid::new(order);
            for r in 1..=m {
                for c in 1..=3 {
                    block.set(r, c, full.get(r, c).unwrap()).unwrap();
                }
            }
            let out = extend_column_blocks(&block).unwrap();
            assert_eq!(out.rect_shape().unwrap().m, m);
            first_cols_match(&out, &block, m);
            if m == 9 {
                assert!(out.is_full());
            }
        }
    }

    #[test]
    fn figure1_column_block_stays_non_completable() {
        let fig = crate::constructions::figure1_fixture();
        let mut block = SudokuGrid::new(fig.order());
        for r in 1..=5 {
            for c in 1..=3 {
                block.set(r, c, fig.get(r, c).unwrap()).unwrap();
            }
        }
        let out = extend_column_blocks(&block).unwrap();
        assert!(!complete(&out).unwrap().is_completed());
    }

    #[test]
    fn rejects_other_patterns() {
        let fig = crate::constructions::figure1_fixture();
        assert_eq!(extend_column_blocks(&fig), Err(CompletionError::NotColumnBlock));
        let empty = SudokuGrid::new(Order::new(2).unwrap());
        assert_eq!(extend_column_blocks(&empty).unwrap(), empty);
    }
}
