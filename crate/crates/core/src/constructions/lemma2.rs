use crate::grid::{Order, SudokuGrid};

use super::ConstructionError;

/// An ordered family of disjoint `k`-element value sets.
///
/// The order matters: part `i` is the one placed at offset `i` of the
/// cyclic layout.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionScheme {
    k: usize,
    parts: Vec<Vec<usize>>,
}

impl PartitionScheme {
    /// Checks sizes and disjointness. Each part is stored sorted.
    pub fn new(k: usize, parts: Vec<Vec<usize>>) -> Result<Self, ConstructionError> {
        let mut seen = std::collections::HashSet::new();
        let mut sorted = Vec::with_capacity(parts.len());
        for (i, mut part) in parts.into_iter().enumerate() {
            if part.len() != k {
                return Err(ConstructionError::PartSize { part: i, len: part.len(), k });
            }
            for &v in &part {
                if v == 0 || !seen.insert(v) {
                    return Err(ConstructionError::PartsOverlap { value: v });
                }
            }
            part.sort_unstable();
            sorted.push(part);
        }
        Ok(PartitionScheme { k, parts: sorted })
    }

    /// `count` consecutive parts `{ik+1, …, ik+k}`.
    pub fn canonical(k: usize, count: usize) -> Self {
        Self::consecutive(k, 1, count)
    }

    /// `count` consecutive parts starting at `first`:
    /// `{first + ik, …, first + ik + k − 1}`.
    pub fn consecutive(k: usize, first: usize, count: usize) -> Self {
        PartitionScheme {
            k,
            parts: (0..count)
                .map(|i| (first + i * k..first + (i + 1) * k).collect())
                .collect(),
        }
    }

    /// Same parts, reordered so that new part `i` is old part `order[i]`.
    pub fn permuted(&self, order: &[usize]) -> Self {
        PartitionScheme {
            k: self.k,
            parts: order.iter().map(|&i| self.parts[i].clone()).collect(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> &[usize] {
        &self.parts[i]
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// Builds an `(ak, b, n)` rectangle: column `j + 1` of row block `i + 1`
/// holds part `(i + j) mod c` in increasing order, `c = max(a, b)`.
pub fn construct_lemma2(
    a: usize,
    b: usize,
    k: usize,
    parts: &PartitionScheme,
) -> Result<SudokuGrid, ConstructionError> {
    let order = Order::new(k)?;
    let n = order.n();
    if a > k || b > k {
        return Err(ConstructionError::DimensionTooLarge { a, b, k });
    }
    if parts.k() != k {
        return Err(ConstructionError::PartSize { part: 0, len: parts.k(), k });
    }
    if let Some(&v) = parts.parts().iter().flatten().find(|&&v| v > n) {
        return Err(ConstructionError::ValueOutOfRange { value: v, n });
    }
    let raw = lemma2_raw(a, b, parts)?;
    let mut grid = SudokuGrid::new(order);
    for (r, row) in raw.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            grid.put(r, c, v);
        }
    }
    Ok(grid)
}

/// Matrix form of [`construct_lemma2`] with no bound on the values.
pub(super) fn lemma2_raw(
    a: usize,
    b: usize,
    parts: &PartitionScheme,
) -> Result<Vec<Vec<usize>>, ConstructionError> {
    let k = parts.k();
    let c = a.max(b);
    if parts.len() != c {
        return Err(ConstructionError::PartCount { expected: c, found: parts.len() });
    }
    let mut rows = vec![vec![0; b]; a * k];
    for i in 0..a {
        for (t, row) in rows[i * k..(i + 1) * k].iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = parts.part((i + j) % c)[t];
            }
        }
    }
    Ok(rows)
}
