//! Partial Sudoku squares of order `n = k²`.
//!
//! All public indices are 1-based: rows and columns run over `1..=n`, block
//! coordinates over `1..=k`, values over `1..=n`. Storage is 0-based and a
//! zero cell is empty.

use std::fmt;
use std::ops::RangeInclusive;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    #[error("block side k must be at least 1")]
    ZeroOrder,
    #[error("block side k = {0} is too large")]
    OrderTooLarge(usize),
    #[error("value {value} is outside 1..={n}")]
    ValueOutOfRange { value: usize, n: usize },
    #[error("row count {m} is outside 0..={n}")]
    RowsOutOfRange { m: usize, n: usize },
    #[error("expected {expected} rows of {expected} cells, got {found}")]
    Shape { expected: usize, found: usize },
}

/// Largest supported block side. Keeps `n` and every value within `u16`.
pub const MAX_K: usize = 255;

/// The pair `(k, n = k²)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Order {
    k: usize,
    n: usize,
}

impl Order {
    pub fn new(k: usize) -> Result<Self, GridError> {
        if k == 0 {
            return Err(GridError::ZeroOrder);
        }
        if k > MAX_K {
            return Err(GridError::OrderTooLarge(k));
        }
        Ok(Order { k, n: k * k })
    }

    /// Block side.
    pub fn k(self) -> usize {
        self.k
    }

    /// Grid side, `k²`.
    pub fn n(self) -> usize {
        self.n
    }

    /// Block containing a cell.
    pub fn block_of(self, cell: CellRef) -> BlockIndex {
        BlockIndex {
            block_row: (cell.row - 1) / self.k + 1,
            block_col: (cell.col - 1) / self.k + 1,
        }
    }

    /// Decomposes `m` filled rows as `m = l·k + r`.
    pub fn shape(self, m: usize) -> Result<RectShape, GridError> {
        if m > self.n {
            return Err(GridError::RowsOutOfRange { m, n: self.n });
        }
        Ok(RectShape {
            m,
            l: m / self.k,
            r: m % self.k,
        })
    }
}

/// A 1-based cell coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellRef {
    pub row: usize,
    pub col: usize,
}

impl CellRef {
    pub fn new(row: usize, col: usize) -> Self {
        CellRef { row, col }
    }
}

impl fmt::Display for CellRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// 1-based block coordinates. Block `(i, j)` covers rows `(i−1)k+1..=ik`
/// and columns `(j−1)k+1..=jk`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockIndex {
    pub block_row: usize,
    pub block_col: usize,
}

impl BlockIndex {
    pub fn new(block_row: usize, block_col: usize) -> Self {
        BlockIndex {
            block_row,
            block_col,
        }
    }

    pub fn rows(self, order: Order) -> RangeInclusive<usize> {
        let k = order.k();
        (self.block_row - 1) * k + 1..=self.block_row * k
    }

    pub fn cols(self, order: Order) -> RangeInclusive<usize> {
        let k = order.k();
        (self.block_col - 1) * k + 1..=self.block_col * k
    }
}

impl fmt::Display for BlockIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.block_row, self.block_col)
    }
}

/// Shape of an `m × n` rectangle: `m = l·k + r` with `0 ≤ r < k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RectShape {
    pub m: usize,
    pub l: usize,
    pub r: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConflictKind {
    Row,
    Column,
    Block,
}

impl fmt::Display for ConflictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConflictKind::Row => "row",
            ConflictKind::Column => "column",
            ConflictKind::Block => "block",
        })
    }
}

/// Result of [`SudokuGrid::validate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Validity {
    Valid,
    /// `second` is the first cell in row-major order that repeats a value
    /// already seen at `first` in the same row, column or block (checked in
    /// that order).
    Violation {
        kind: ConflictKind,
        value: usize,
        first: CellRef,
        second: CellRef,
    },
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }
}

/// An `n × n` partial Sudoku square.
///
/// The grid may hold conflicting values; [`validate`](Self::validate) reports
/// them. Per-row, per-column and per-block value counts are kept up to date
/// on every mutation so membership queries are constant time.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SudokuGrid {
    order: Order,
    cells: Vec<u16>,
    row_count: Vec<u16>,
    col_count: Vec<u16>,
    block_count: Vec<u16>,
}

impl SudokuGrid {
    pub fn new(order: Order) -> Self {
        let n = order.n();
        let units = n * (n + 1);
        SudokuGrid {
            order,
            cells: vec![0; n * n],
            row_count: vec![0; units],
            col_count: vec![0; units],
            block_count: vec![0; units],
        }
    }

    /// Builds a grid from `n` rows of `n` optional values.
    pub fn from_rows<R: AsRef<[Option<usize>]>>(order: Order, rows: &[R]) -> Result<Self, GridError> {
        let n = order.n();
        if rows.len() != n {
            return Err(GridError::Shape {
                expected: n,
                found: rows.len(),
            });
        }
        let mut grid = SudokuGrid::new(order);
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(GridError::Shape {
                    expected: n,
                    found: row.len(),
                });
            }
            for (c, &v) in row.iter().enumerate() {
                if let Some(v) = v {
                    grid.set(r + 1, c + 1, v)?;
                }
            }
        }
        Ok(grid)
    }

    /// Builds a grid whose first rows are the given fully filled rows.
    pub fn from_filled_rows<R: AsRef<[usize]>>(order: Order, rows: &[R]) -> Result<Self, GridError> {
        let n = order.n();
        if rows.len() > n {
            return Err(GridError::RowsOutOfRange { m: rows.len(), n });
        }
        let mut grid = SudokuGrid::new(order);
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(GridError::Shape {
                    expected: n,
                    found: row.len(),
                });
            }
            for (c, &v) in row.iter().enumerate() {
                grid.set(r + 1, c + 1, v)?;
            }
        }
        Ok(grid)
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn k(&self) -> usize {
        self.order.k()
    }

    pub fn n(&self) -> usize {
        self.order.n()
    }

    /// Value at a 1-based cell.
    ///
    /// # Panics
    ///
    /// Panics if the cell lies outside the grid.
    pub fn get(&self, row: usize, col: usize) -> Option<usize> {
        self.check_cell(row, col);
        match self.at(row - 1, col - 1) {
            0 => None,
            v => Some(v),
        }
    }

    /// Writes a value, returning the previous one. Conflicts are allowed;
    /// use [`is_allowed`](Self::is_allowed) to test first.
    pub fn set(&mut self, row: usize, col: usize, value: usize) -> Result<Option<usize>, GridError> {
        self.check_cell(row, col);
        if value == 0 || value > self.n() {
            return Err(GridError::ValueOutOfRange {
                value,
                n: self.n(),
            });
        }
        let old = self.put(row - 1, col - 1, value);
        Ok((old != 0).then_some(old))
    }

    pub fn clear(&mut self, row: usize, col: usize) -> Option<usize> {
        self.check_cell(row, col);
        let old = self.put(row - 1, col - 1, 0);
        (old != 0).then_some(old)
    }

    /// True if writing `value` at the cell creates no row, column or block
    /// repeat (ignoring whatever the cell currently holds).
    pub fn is_allowed(&self, row: usize, col: usize, value: usize) -> bool {
        self.check_cell(row, col);
        if value == 0 || value > self.n() {
            return false;
        }
        let (r, c) = (row - 1, col - 1);
        let own = usize::from(self.at(r, c) == value) as u16;
        self.row_count[self.unit(r, value)] == own
            && self.col_count[self.unit(c, value)] == own
            && self.block_count[self.unit(self.block_id(r, c), value)] == own
    }

    pub fn row_contains(&self, row: usize, value: usize) -> bool {
        value >= 1 && value <= self.n() && self.row_count[self.unit(row - 1, value)] > 0
    }

    pub fn col_contains(&self, col: usize, value: usize) -> bool {
        value >= 1 && value <= self.n() && self.col_count[self.unit(col - 1, value)] > 0
    }

    pub fn block_contains(&self, block: BlockIndex, value: usize) -> bool {
        let id = (block.block_row - 1) * self.k() + (block.block_col - 1);
        value >= 1 && value <= self.n() && self.block_count[self.unit(id, value)] > 0
    }

    pub fn filled_count(&self) -> usize {
        self.cells.iter().filter(|&&v| v != 0).count()
    }

    pub fn is_full(&self) -> bool {
        self.cells.iter().all(|&v| v != 0)
    }

    pub fn is_empty(&self) -> bool {
        self.cells.iter().all(|&v| v == 0)
    }

    /// Checks the row, column and block conditions, scanning cells in
    /// row-major order and reporting the first repeat found.
    pub fn validate(&self) -> Validity {
        let n = self.n();
        for r in 0..n {
            for c in 0..n {
                let v = self.at(r, c);
                if v == 0 {
                    continue;
                }
                let second = CellRef::new(r + 1, c + 1);
                if let Some(c0) = (0..c).find(|&c0| self.at(r, c0) == v) {
                    return Validity::Violation {
                        kind: ConflictKind::Row,
                        value: v,
                        first: CellRef::new(r + 1, c0 + 1),
                        second,
                    };
                }
                if let Some(r0) = (0..r).find(|&r0| self.at(r0, c) == v) {
                    return Validity::Violation {
                        kind: ConflictKind::Column,
                        value: v,
                        first: CellRef::new(r0 + 1, c + 1),
                        second,
                    };
                }
                let k = self.k();
                let (br, bc) = (r / k * k, c / k * k);
                let earlier = (br..=r)
                    .flat_map(|r0| (bc..bc + k).map(move |c0| (r0, c0)))
                    .filter(|&(r0, c0)| (r0, c0) < (r, c))
                    .find(|&(r0, c0)| self.at(r0, c0) == v);
                if let Some((r0, c0)) = earlier {
                    return Validity::Violation {
                        kind: ConflictKind::Block,
                        value: v,
                        first: CellRef::new(r0 + 1, c0 + 1),
                        second,
                    };
                }
            }
        }
        Validity::Valid
    }

    /// Recounts occupancy from the cells and compares with the incremental
    /// counters.
    pub fn audit(&self) -> bool {
        let fresh = {
            let mut g = SudokuGrid::new(self.order);
            let n = self.n();
            for r in 0..n {
                for c in 0..n {
                    g.put(r, c, self.at(r, c));
                }
            }
            g
        };
        fresh.row_count == self.row_count
            && fresh.col_count == self.col_count
            && fresh.block_count == self.block_count
    }

    /// `Some(shape)` iff rows `1..=m` are full and all other rows empty.
    pub fn rect_shape(&self) -> Option<RectShape> {
        let n = self.n();
        let full_rows = (0..n)
            .take_while(|&r| (0..n).all(|c| self.at(r, c) != 0))
            .count();
        let rest_empty = (full_rows..n).all(|r| (0..n).all(|c| self.at(r, c) == 0));
        if rest_empty {
            self.order.shape(full_rows).ok()
        } else {
            None
        }
    }

    /// `Some((p, q))` iff exactly the top-left `p × q` region is filled.
    /// An empty grid reports `(0, n)`, matching the `m`-rectangle case.
    pub fn pq_shape(&self) -> Option<(usize, usize)> {
        let n = self.n();
        let p = (0..n).take_while(|&r| self.at(r, 0) != 0).count();
        if p == 0 {
            return self.is_empty().then_some((0, n));
        }
        let q = (0..n).take_while(|&c| self.at(0, c) != 0).count();
        let exact = (0..n).all(|r| (0..n).all(|c| (self.at(r, c) != 0) == (r < p && c < q)));
        exact.then_some((p, q))
    }

    /// Copy with rows `m+1..=n` cleared.
    pub fn truncate_rows(&self, m: usize) -> Result<SudokuGrid, GridError> {
        let n = self.n();
        if m > n {
            return Err(GridError::RowsOutOfRange { m, n });
        }
        let mut out = self.clone();
        for r in m..n {
            for c in 0..n {
                out.put(r, c, 0);
            }
        }
        Ok(out)
    }

    /// True if every filled cell of `base` holds the same value here.
    pub fn extends(&self, base: &SudokuGrid) -> bool {
        self.order == base.order
            && self
                .cells
                .iter()
                .zip(&base.cells)
                .all(|(&a, &b)| b == 0 || a == b)
    }

    /// Iterates over `(cell, value)` for filled cells in row-major order.
    pub fn filled_cells(&self) -> impl Iterator<Item = (CellRef, usize)> + '_ {
        let n = self.n();
        self.cells
            .iter()
            .enumerate()
            .filter(|&(_, &v)| v != 0)
            .map(move |(i, &v)| (CellRef::new(i / n + 1, i % n + 1), v as usize))
    }

    // 0-based internals.

    pub(crate) fn at(&self, r: usize, c: usize) -> usize {
        self.cells[r * self.n() + c] as usize
    }

    /// Writes `v` (0 clears) and returns the previous value.
    pub(crate) fn put(&mut self, r: usize, c: usize, v: usize) -> usize {
        let n = self.n();
        let idx = r * n + c;
        let old = self.cells[idx] as usize;
        if old == v {
            return old;
        }
        let b = self.block_id(r, c);
        if old != 0 {
            let (ru, cu, bu) = (self.unit(r, old), self.unit(c, old), self.unit(b, old));
            self.row_count[ru] -= 1;
            self.col_count[cu] -= 1;
            self.block_count[bu] -= 1;
        }
        if v != 0 {
            let (ru, cu, bu) = (self.unit(r, v), self.unit(c, v), self.unit(b, v));
            self.row_count[ru] += 1;
            self.col_count[cu] += 1;
            self.block_count[bu] += 1;
        }
        self.cells[idx] = v as u16;
        old
    }

    pub(crate) fn free_in_col(&self, c: usize, v: usize) -> bool {
        self.col_count[self.unit(c, v)] == 0
    }

    fn block_id(&self, r: usize, c: usize) -> usize {
        let k = self.k();
        (r / k) * k + c / k
    }

    fn unit(&self, index: usize, value: usize) -> usize {
        index * (self.n() + 1) + value
    }

    fn check_cell(&self, row: usize, col: usize) {
        let n = self.n();
        assert!(
            (1..=n).contains(&row) && (1..=n).contains(&col),
            "cell ({row},{col}) outside a grid of side {n}"
        );
    }
}

impl fmt::Debug for SudokuGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SudokuGrid(\n{})", crate::format::render(self))
    }
}

impl fmt::Display for SudokuGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::render(self))
    }
}
