use std::fmt;

use crate::completion::{
    complete, decide_guaranteed, extend_column_blocks, BlockObstruction, CompletionOutcome,
};
use crate::format;
use crate::grid::{Order, SudokuGrid};

use super::lemma2::{lemma2_raw, PartitionScheme};
use super::ConstructionError;

type Matrix = Vec<Vec<usize>>;

/// Which of the three constructions produced a rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstructionCase {
    /// `l < k/2`: two side-by-side building blocks over low and high values.
    A,
    /// `l ≥ k/2`, `k` even: four blocks over two halves, plus swaps.
    B,
    /// `l ≥ k/2`, `k` odd: four blocks with a placeholder part, plus swaps.
    C,
}

impl fmt::Display for ConstructionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConstructionCase::A => "a",
            ConstructionCase::B => "b",
            ConstructionCase::C => "c",
        })
    }
}

/// The values moved by the swaps in cases b and c. `x1` ends up in row
/// `lk + 1` of the first of the two overwritten columns, `x2` in the second.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpecialElements {
    pub x: usize,
    pub x1: usize,
    pub x2: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CounterexampleReport {
    pub k: usize,
    pub m: usize,
    /// The full `m × n` rectangle.
    pub rectangle: SudokuGrid,
    /// The `(m, k, n)` rectangle it was extended from.
    pub column_block: SudokuGrid,
    pub case: ConstructionCase,
    pub special_elements: Option<SpecialElements>,
    /// Replayable witness from [`complete`].
    pub obstruction: BlockObstruction,
}

impl CounterexampleReport {
    /// The rectangle in grid text format, preceded by `#` comment lines
    /// recording the case, the shape and the special elements.
    pub fn render(&self) -> String {
        let (l, r) = (self.m / self.k, self.m % self.k);
        let mut out = format!(
            "# non-completable rectangle: case={} k={} m={} l={l} r={r}\n",
            self.case, self.k, self.m
        );
        if let Some(s) = self.special_elements {
            out.push_str(&format!("# special elements: x={} x1={} x2={}\n", s.x, s.x1, s.x2));
        }
        out.push_str(&format::render(&self.rectangle));
        out
    }
}

/// Builds an `m × n` rectangle with no completion, for any `(k, m)` where
/// completability is not guaranteed.
///
/// The first column block is built by one of three constructions, extended
/// with [`extend_column_blocks`], and the result is checked with
/// [`complete`] before it is returned.
pub fn construct_counterexample(k: usize, m: usize) -> Result<CounterexampleReport, ConstructionError> {
    if k < 3 {
        return Err(ConstructionError::OrderTooSmall(k));
    }
    let verdict = decide_guaranteed(k, m)?;
    if let Some(reason) = verdict.reason {
        return Err(ConstructionError::Guaranteed { k, m, reason });
    }
    let (l, r) = (verdict.shape.l, verdict.shape.r);
    let (case, block, special) = if 2 * l < k {
        (ConstructionCase::A, case_a(k, l, r)?, None)
    } else if k.is_multiple_of(2) {
        let (mat, s) = case_b(k, l, r)?;
        (ConstructionCase::B, mat, Some(s))
    } else {
        let (mat, s) = case_c(k, l, r)?;
        (ConstructionCase::C, mat, Some(s))
    };
    finish(k, m, case, block, special)
}

fn finish(
    k: usize,
    m: usize,
    case: ConstructionCase,
    block: Matrix,
    special: Option<SpecialElements>,
) -> Result<CounterexampleReport, ConstructionError> {
    let order = Order::new(k)?;
    let n = order.n();
    if block.len() != m || !raw_valid(&block, k) {
        return Err(internal(format!("case {case} column block is not a valid {m}×{k} rectangle")));
    }
    let mut column_block = SudokuGrid::new(order);
    for (r, row) in block.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            if v == 0 || v > n {
                return Err(internal(format!("case {case} left value {v} at ({}, {})", r + 1, c + 1)));
            }
            column_block.put(r, c, v);
        }
    }
    if !column_block.validate().is_valid() || column_block.pq_shape() != Some((m, k)) {
        return Err(internal(format!("case {case} column block failed validation")));
    }
    let rectangle = extend_column_blocks(&column_block)?;
    match complete(&rectangle)? {
        CompletionOutcome::NotCompletable(obstruction) if obstruction.replay(&rectangle) => {
            Ok(CounterexampleReport {
                k,
                m,
                rectangle,
                column_block,
                case,
                special_elements: special,
                obstruction,
            })
        }
        CompletionOutcome::NotCompletable(_) => {
            Err(internal(format!("case {case} obstruction does not replay")))
        }
        CompletionOutcome::Completed(_) => {
            Err(internal(format!("case {case} rectangle for k={k}, m={m} completes")))
        }
    }
}

fn case_a(k: usize, l: usize, r: usize) -> Result<Matrix, ConstructionError> {
    let lk = l * k;
    let m = lk + r;
    let mut left = lemma2_raw(l, l, &PartitionScheme::canonical(k, l))?;
    let mut right = lemma2_raw(l + 1, k - l, &PartitionScheme::consecutive(k, lk + 1, k - l))?;

    let e: Vec<usize> = right.drain(m..).flatten().collect();
    check(e.len() == (k - r) * (k - l), "|E| = (k-r)(k-l)")?;
    left.extend((0..r).map(|_| vec![0; l]));

    let slots: Vec<(usize, usize)> = (lk..m).flat_map(|row| (0..l).map(move |c| (row, c))).collect();
    let mut moved = e.into_iter().take(slots.len()).collect::<Vec<_>>();
    let mut vacated = Vec::new();
    if moved.len() < slots.len() {
        let deficit = slots.len() - moved.len();
        check(l + r > k && deficit == k * (l + r - k), "|E'| = k(l+r-k)")?;
        check((k - l) * r > deficit, "(k-l)r > k(l+r-k)")?;
        for (row, cells) in right.iter_mut().enumerate().take(m).skip(lk) {
            for (c, cell) in cells.iter_mut().enumerate().take(k - l) {
                if vacated.len() < deficit {
                    moved.push(*cell);
                    *cell = 0;
                    vacated.push((row, l + c));
                }
            }
        }
        check(vacated.len() == deficit, "enough elements to transfer")?;
    }
    for (&(row, c), &v) in slots.iter().zip(&moved) {
        left[row][c] = v;
    }

    let mut mat = hstack(left, right);
    for (row, c) in vacated {
        let v = (1..=lk)
            .find(|&v| {
                !mat[row].contains(&v)
                    && mat.iter().all(|other| other[c] != v)
                    && mat[lk..].iter().all(|other| !other.contains(&v))
            })
            .ok_or_else(|| internal("no backfill value for a vacated cell".into()))?;
        mat[row][c] = v;
    }
    Ok(mat)
}

fn case_b(k: usize, l: usize, r: usize) -> Result<(Matrix, SpecialElements), ConstructionError> {
    let h = k / 2;
    let lk = l * k;
    let f = PartitionScheme::canonical(k, h);
    let g = PartitionScheme::consecutive(k, k * h + 1, h);
    let a3 = l + 1 - h;
    let last = |p: &[usize]| p[p.len() - 1];

    let (g3, x, x1, x2, partner0, partner1) = if h == 2 {
        // With only two G-parts the listed permutation degenerates, so the
        // bottom-left block uses a mixed partition that keeps two values of
        // G_1 at part ends, where truncation always drops them.
        let (g0, g1) = (g.part(0), g.part(1));
        let p0 = vec![g0[3], g1[0], g1[1], g1[3]];
        let p1 = vec![g0[0], g0[1], g0[2], g1[2]];
        let scheme = PartitionScheme::new(k, vec![p0, p1])?;
        let (x1, x2) = (g1[2], g1[3]);
        (scheme, last(f.part(0)), x1, x2, x2, x1)
    } else {
        let mut order = vec![1];
        order.extend(3..h);
        order.extend([2, 0]);
        let (x1, x2) = (last(g.part(0)), last(g.part(2)));
        (g.permuted(&order), last(f.part(0)), x1, x2, x1, x2)
    };
    let reversed: Vec<usize> = (0..h).rev().collect();

    let top = hstack(lemma2_raw(h, h, &f)?, lemma2_raw(h, h, &g)?);
    let bottom = hstack(lemma2_raw(a3, h, &g3)?, lemma2_raw(a3, h, &f.permuted(&reversed))?);
    let mut mat = vstack(top, bottom);
    mat.truncate(lk + r);

    check(!in_column(&mat, h, x) && !in_column(&mat, h + 1, x), "x absent from the overwritten columns")?;
    check(!in_rows(&mat[lk..], x1) && !in_rows(&mat[lk..], x2), "x1, x2 absent from the last row block")?;
    swap_in_block(&mut mat, k, 0, x, partner0)?;
    swap_in_block(&mut mat, k, 1, x, partner1)?;
    check(!in_column(&mat, h, x1) && !in_column(&mat, h + 1, x2), "columns free for x1, x2")?;
    mat[lk][h] = x1;
    mat[lk][h + 1] = x2;
    Ok((mat, SpecialElements { x, x1, x2 }))
}

fn case_c(k: usize, l: usize, r: usize) -> Result<(Matrix, SpecialElements), ConstructionError> {
    let (hc, hf) = (k.div_ceil(2), k / 2);
    let (n, lk) = (k * k, l * k);
    check(hf >= 2, "case c needs k ≥ 5")?;
    let f = PartitionScheme::canonical(k, hc);
    let g = PartitionScheme::consecutive(k, k * hc + 1, hf);
    let mut with_h = vec![(n + 1..=n + k).collect::<Vec<_>>()];
    with_h.extend(g.parts().iter().cloned());
    let with_h = PartitionScheme::new(k, with_h)?;

    let mut r2 = lemma2_raw(hc, hc, &with_h)?;
    for (i, rows) in r2.chunks_mut(k).enumerate() {
        let sub = f.part((i + hc - 1) % hc);
        for v in rows.iter_mut().flatten() {
            if *v > n {
                *v = sub[*v - n - 1];
            }
        }
    }
    let rev_g: Vec<usize> = (0..hf).rev().collect();
    let rev_f: Vec<usize> = (0..hc).rev().collect();
    let r3 = lemma2_raw(l + 1 - hc, hf, &g.permuted(&rev_g))?;
    let mut r4 = lemma2_raw(l + 2 - hc, hc, &f.permuted(&rev_f))?;
    r4.drain(..k);

    let mut mat = vstack(hstack(lemma2_raw(hc, hf, &f)?, r2), hstack(r3, r4));
    mat.truncate(lk + r);

    let last = |p: &[usize]| p[p.len() - 1];
    let (x, x1, x2) = (last(f.part(1)), last(g.part(hf - 1)), last(g.part(0)));
    check(!in_column(&mat, k - 1, x) && !in_column(&mat, hc - 1, x), "x absent from the overwritten columns")?;
    check(!in_rows(&mat[lk..], x1) && !in_rows(&mat[lk..], x2), "x1, x2 absent from the last row block")?;
    swap_in_block(&mut mat, k, 0, x, x1)?;
    swap_in_block(&mut mat, k, 1, x, x2)?;
    check(!in_column(&mat, k - 1, x1) && !in_column(&mat, hc - 1, x2), "columns free for x1, x2")?;
    mat[lk][k - 1] = x1;
    mat[lk][hc - 1] = x2;
    Ok((mat, SpecialElements { x, x1, x2 }))
}

fn hstack(left: Matrix, right: Matrix) -> Matrix {
    left.into_iter()
        .zip(right)
        .map(|(mut a, b)| {
            a.extend(b);
            a
        })
        .collect()
}

fn vstack(mut top: Matrix, bottom: Matrix) -> Matrix {
    top.extend(bottom);
    top
}

fn in_column(mat: &Matrix, c: usize, v: usize) -> bool {
    mat.iter().any(|row| row[c] == v)
}

fn in_rows(rows: &[Vec<usize>], v: usize) -> bool {
    rows.iter().any(|row| row.contains(&v))
}

/// Exchanges the cells holding `a` and `b` inside row block `block`
/// (0-based), after checking that neither value already sits in the
/// column it moves into.
fn swap_in_block(mat: &mut Matrix, k: usize, block: usize, a: usize, b: usize) -> Result<(), ConstructionError> {
    let find = |mat: &Matrix, v: usize| {
        (block * k..(block + 1) * k)
            .find_map(|r| mat[r].iter().position(|&x| x == v).map(|c| (r, c)))
    };
    let (pa, pb) = match (find(mat, a), find(mat, b)) {
        (Some(pa), Some(pb)) => (pa, pb),
        _ => return Err(internal(format!("swap values {a}, {b} not both in row block {}", block + 1))),
    };
    check(!in_column(mat, pb.1, a) && !in_column(mat, pa.1, b), "swap keeps columns distinct")?;
    mat[pa.0][pa.1] = b;
    mat[pb.0][pb.1] = a;
    Ok(())
}

/// Distinct nonzero values per row, column and `k × k` block.
fn raw_valid(mat: &Matrix, k: usize) -> bool {
    let mut units: Vec<Vec<usize>> = Vec::new();
    units.extend(mat.iter().cloned());
    let width = mat.first().map_or(0, Vec::len);
    units.extend((0..width).map(|c| mat.iter().map(|row| row[c]).collect()));
    for rows in mat.chunks(k) {
        for c0 in (0..width).step_by(k) {
            units.push(rows.iter().flat_map(|row| row[c0..(c0 + k).min(width)].to_vec()).collect());
        }
    }
    units.into_iter().all(|mut unit| {
        let len = unit.len();
        unit.sort_unstable();
        unit.dedup();
        unit.len() == len && unit.first() != Some(&0)
    })
}

fn check(cond: bool, what: &str) -> Result<(), ConstructionError> {
    if cond {
        Ok(())
    } else {
        Err(internal(format!("construction check failed: {what}")))
    }
}

fn internal(msg: String) -> ConstructionError {
    ConstructionError::Internal(msg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::completion::GuaranteeReason;

    fn non_guaranteed(k: usize) -> Vec<usize> {
        (0..=k * k)
            .filter(|&m| !decide_guaranteed(k, m).unwrap().is_guaranteed())
            .collect()
    }

    #[test]
    fn order_nine() {
        let rep = construct_counterexample(3, 5).unwrap();
        assert_eq!(rep.case, ConstructionCase::A);
        assert_eq!(rep.rectangle.rect_shape().unwrap().m, 5);
        assert!(rep.obstruction.replay(&rep.rectangle));
        assert_eq!(rep.special_elements, None);
    }

    #[test]
    fn order_sixteen_uses_cases_a_and_b() {
        let cases: Vec<_> = non_guaranteed(4)
            .into_iter()
            .map(|m| construct_counterexample(4, m).unwrap().case)
            .collect();
        assert_eq!(cases, [ConstructionCase::A, ConstructionCase::B, ConstructionCase::B, ConstructionCase::B]);
        let rep = construct_counterexample(4, 11).unwrap();
        assert_eq!(rep.special_elements, Some(SpecialElements { x: 4, x1: 15, x2: 16 }));
    }

    #[test]
    fn order_twenty_five_uses_case_c() {
        for m in [16, 17, 18, 19] {
            let rep = construct_counterexample(5, m).unwrap();
            assert_eq!(rep.case, ConstructionCase::C);
            assert!(rep.rectangle.validate().is_valid());
        }
    }

    #[test]
    fn case_a_with_transfer() {
        // l + r > k exercises the transfer and backfill path.
        for (k, m) in [(5, 14), (6, 17)] {
            let rep = construct_counterexample(k, m).unwrap();
            assert_eq!(rep.case, ConstructionCase::A);
            assert!(rep.column_block.validate().is_valid());
        }
    }

    #[test]
    fn rejects_guaranteed_and_small_orders() {
        assert!(matches!(
            construct_counterexample(3, 6),
            Err(ConstructionError::Guaranteed { reason: GuaranteeReason::FullRowBlocks, .. })
        ));
        assert!(matches!(construct_counterexample(2, 1), Err(ConstructionError::OrderTooSmall(2))));
        assert!(matches!(construct_counterexample(1, 0), Err(ConstructionError::OrderTooSmall(1))));
        assert!(construct_counterexample(3, 10).is_err());
    }

    #[test]
    fn render_has_header() {
        let rep = construct_counterexample(4, 10).unwrap();
        let text = rep.render();
        assert!(text.starts_with("# non-completable rectangle: case=b k=4 m=10 l=2 r=2\n"));
        assert_eq!(format::parse(&text).unwrap(), rep.rectangle);
    }

    #[test]
    fn raw_valid_spots_duplicates() {
        assert!(raw_valid(&vec![vec![1, 2], vec![3, 4]], 2));
        assert!(!raw_valid(&vec![vec![1, 2], vec![1, 4]], 2));
        assert!(!raw_valid(&vec![vec![1, 2], vec![2, 1]], 2));
    }
}
