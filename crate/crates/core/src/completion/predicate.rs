use std::fmt;

use crate::grid::{Order, RectShape};

use super::CompletionError;

/// Which sufficient condition guarantees completability.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GuaranteeReason {
    /// `r = 0`: only whole row blocks are filled.
    FullRowBlocks,
    /// `l = k − 1`: only the last row block is incomplete.
    LastRowBlock,
    /// `(k − r)(k − l) ≥ l·k`.
    HallSlack,
}

impl fmt::Display for GuaranteeReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GuaranteeReason::FullRowBlocks => "r=0",
            GuaranteeReason::LastRowBlock => "l=k-1",
            GuaranteeReason::HallSlack => "(k-r)(k-l)>=lk",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Completability {
    pub k: usize,
    pub shape: RectShape,
    /// The first condition that holds, in the order `r = 0`, `l = k − 1`,
    /// product inequality; `None` when every `m × n` rectangle of this shape
    /// is not guaranteed completable.
    pub reason: Option<GuaranteeReason>,
}

impl Completability {
    pub fn is_guaranteed(&self) -> bool {
        self.reason.is_some()
    }
}

/// Decides whether every `m × n` Sudoku rectangle with `n = k²` completes.
pub fn decide_guaranteed(k: usize, m: usize) -> Result<Completability, CompletionError> {
    let order = Order::new(k)?;
    let shape = order.shape(m)?;
    let RectShape { l, r, .. } = shape;
    let reason = if r == 0 {
        Some(GuaranteeReason::FullRowBlocks)
    } else if l + 1 == k {
        Some(GuaranteeReason::LastRowBlock)
    } else if (k - r) * (k - l) >= l * k {
        Some(GuaranteeReason::HallSlack)
    } else {
        None
    };
    Ok(Completability { k, shape, reason })
}
