use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::grid::SudokuGrid;

/// Limits for [`count_completions`]. `None` means unlimited.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct CountCaps {
    /// Maximum number of value assignments tried.
    pub max_nodes: Option<u64>,
    /// Stop after this many completions.
    pub max_solutions: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CountResult {
    pub count: BigUint,
    /// True when the search finished; then `count` is exact.
    pub exhausted: bool,
    pub nodes_visited: u64,
}

/// Counts full squares extending `grid` by backtracking.
///
/// Always fills the empty cell with the fewest candidates (first in
/// row-major order on ties) and tries values in increasing order, so node
/// counts are reproducible. An invalid grid has no completions.
///
/// ```
/// use sudoku_rect::counting::{count_completions, CountCaps};
/// use sudoku_rect::grid::{Order, SudokuGrid};
///
/// let empty = SudokuGrid::new(Order::new(2).unwrap());
/// let res = count_completions(&empty, CountCaps::default());
/// assert_eq!(res.count, 288u32.into());
/// assert!(res.exhausted);
/// ```
pub fn count_completions(grid: &SudokuGrid, caps: CountCaps) -> CountResult {
    if !grid.validate().is_valid() {
        return CountResult { count: BigUint::zero(), exhausted: true, nodes_visited: 0 };
    }
    let mut search = Search::new(grid, caps);
    let finished = search.run();
    CountResult {
        count: search.count,
        exhausted: finished,
        nodes_visited: search.nodes,
    }
}

struct Search {
    k: usize,
    n: usize,
    cells: Vec<usize>,
    /// `used[unit][v]` for rows `0..n`, columns `n..2n`, blocks `2n..3n`.
    used: Vec<Vec<bool>>,
    empties: usize,
    count: BigUint,
    solutions: u64,
    nodes: u64,
    caps: CountCaps,
}

impl Search {
    fn new(grid: &SudokuGrid, caps: CountCaps) -> Self {
        let (k, n) = (grid.k(), grid.n());
        let mut s = Search {
            k,
            n,
            cells: vec![0; n * n],
            used: vec![vec![false; n + 1]; 3 * n],
            empties: 0,
            count: BigUint::zero(),
            solutions: 0,
            nodes: 0,
            caps,
        };
        for r in 0..n {
            for c in 0..n {
                let v = grid.at(r, c);
                if v == 0 {
                    s.empties += 1;
                } else {
                    s.mark(r * n + c, v, true);
                }
            }
        }
        s
    }

    fn units(&self, idx: usize) -> [usize; 3] {
        let (r, c) = (idx / self.n, idx % self.n);
        [r, self.n + c, 2 * self.n + (r / self.k) * self.k + c / self.k]
    }

    fn mark(&mut self, idx: usize, v: usize, on: bool) {
        for u in self.units(idx) {
            self.used[u][v] = on;
        }
        self.cells[idx] = if on { v } else { 0 };
    }

    fn free(&self, idx: usize, v: usize) -> bool {
        self.units(idx).iter().all(|&u| !self.used[u][v])
    }

    /// The most constrained empty cell and its candidate count.
    fn pick(&self) -> (usize, usize) {
        let mut best = (usize::MAX, usize::MAX);
        for idx in (0..self.cells.len()).filter(|&i| self.cells[i] == 0) {
            let options = (1..=self.n).filter(|&v| self.free(idx, v)).count();
            if options < best.1 {
                best = (idx, options);
                if options <= 1 {
                    break;
                }
            }
        }
        best
    }

    /// Returns false when a cap interrupted the search.
    fn run(&mut self) -> bool {
        if self.empties == 0 {
            self.count += BigUint::one();
            self.solutions += 1;
            return self.caps.max_solutions.is_none_or(|cap| self.solutions < cap);
        }
        let (idx, options) = self.pick();
        if options == 0 {
            return true;
        }
        for v in 1..=self.n {
            if !self.free(idx, v) {
                continue;
            }
            if self.caps.max_nodes.is_some_and(|cap| self.nodes >= cap) {
                return false;
            }
            self.nodes += 1;
            self.mark(idx, v, true);
            self.empties -= 1;
            let go_on = self.run();
            self.empties += 1;
            self.mark(idx, v, false);
            if !go_on {
                return false;
            }
        }
        true
    }
}
