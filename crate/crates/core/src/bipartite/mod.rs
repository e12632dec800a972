//! Bipartite kernels: degree-constrained matching by integral max-flow,
//! Hall-condition certificates, and König edge coloring.
//!
//! Vertex indices here are 0-based on each side. Graphs are multigraphs and
//! the order of the edge list is significant: every algorithm scans edges
//! in stored order and breaks ties toward the lowest index, so equal inputs
//! give equal outputs.

mod coloring;
mod flow;
mod matching;

use thiserror::Error;

pub use coloring::{edge_color, EdgeColoring};
pub use matching::{
    degree_matching, hall_check, hall_check_with_limit, HallOutcome, MatchOutcome, Matching,
    DEFAULT_HALL_LIMIT,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("edge ({left},{right}) outside a {left_count}×{right_count} bipartite graph")]
    VertexOutOfRange {
        left: usize,
        right: usize,
        left_count: usize,
        right_count: usize,
    },
    #[error("quota vectors have lengths {left}/{right}, graph sides are {left_count}/{right_count}")]
    QuotaLength {
        left: usize,
        right: usize,
        left_count: usize,
        right_count: usize,
    },
    #[error("left quotas sum to {left}, right quotas to {right}")]
    QuotaSumMismatch { left: usize, right: usize },
    #[error("Hall multiplier must be at least 1")]
    ZeroMultiplier,
    #[error("exhaustive Hall check refused: {count} left vertices exceeds the limit of {limit}")]
    TooManyLeftVertices { count: usize, limit: usize },
}

/// A bipartite multigraph given by an ordered edge list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    left_count: usize,
    right_count: usize,
    edges: Vec<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn new(left_count: usize, right_count: usize) -> Self {
        BipartiteGraph {
            left_count,
            right_count,
            edges: Vec::new(),
        }
    }

    pub fn with_edges(
        left_count: usize,
        right_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, KernelError> {
        let mut g = BipartiteGraph::new(left_count, right_count);
        for (l, r) in edges {
            g.try_add_edge(l, r)?;
        }
        Ok(g)
    }

    pub fn try_add_edge(&mut self, left: usize, right: usize) -> Result<usize, KernelError> {
        if left >= self.left_count || right >= self.right_count {
            return Err(KernelError::VertexOutOfRange {
                left,
                right,
                left_count: self.left_count,
                right_count: self.right_count,
            });
        }
        self.edges.push((left, right));
        Ok(self.edges.len() - 1)
    }

    /// Appends an edge and returns its index.
    ///
    /// # Panics
    ///
    /// Panics if either endpoint is out of range.
    pub fn add_edge(&mut self, left: usize, right: usize) -> usize {
        self.try_add_edge(left, right)
            .unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn left_count(&self) -> usize {
        self.left_count
    }

    pub fn right_count(&self) -> usize {
        self.right_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn left_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.left_count];
        self.edges.iter().for_each(|&(l, _)| d[l] += 1);
        d
    }

    pub fn right_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.right_count];
        self.edges.iter().for_each(|&(_, r)| d[r] += 1);
        d
    }

    pub fn max_degree(&self) -> usize {
        let l = self.left_degrees().into_iter().max().unwrap_or(0);
        let r = self.right_degrees().into_iter().max().unwrap_or(0);
        l.max(r)
    }

    /// Right vertices adjacent to at least one vertex of `set`, ascending.
    pub fn neighborhood(&self, set: &[usize]) -> Vec<usize> {
        let mut in_set = vec![false; self.left_count];
        set.iter().for_each(|&l| in_set[l] = true);
        let mut hit = vec![false; self.right_count];
        for &(l, r) in &self.edges {
            if in_set[l] {
                hit[r] = true;
            }
        }
        (0..self.right_count).filter(|&r| hit[r]).collect()
    }
}

/// Required matched degree of every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeDemand {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl DegreeDemand {
    pub fn new(left: Vec<usize>, right: Vec<usize>) -> Self {
        DegreeDemand { left, right }
    }

    /// Every left vertex matched `per_left` times, every right vertex once.
    pub fn one_to_many(left_count: usize, right_count: usize, per_left: usize) -> Self {
        DegreeDemand {
            left: vec![per_left; left_count],
            right: vec![1; right_count],
        }
    }
}

/// A set `S` of left vertices that cannot receive its demand.
///
/// `available` bounds from above how many matched edges `S` can obtain:
/// the sum over `y ∈ N(S)` of `min(quota(y), edges between S and y)`. In the
/// one-to-many case every right quota is 1 and `available = |N(S)|`, so the
/// certificate reads `|N(S)| < t·|S|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HallCertificate {
    pub violating_set: Vec<usize>,
    pub neighborhood: Vec<usize>,
    pub required: usize,
    pub available: usize,
}

impl HallCertificate {
    /// Recomputes `N(S)`, the demand of `S` and the capacity toward `S` from
    /// the graph and checks the deficiency.
    pub fn replay(&self, g: &BipartiteGraph, demand: &DegreeDemand) -> bool {
        if self.violating_set.is_empty()
            || self.violating_set.iter().any(|&l| l >= g.left_count())
        {
            return false;
        }
        let nbhd = g.neighborhood(&self.violating_set);
        if nbhd != self.neighborhood {
            return false;
        }
        let required: usize = self.violating_set.iter().map(|&l| demand.left[l]).sum();
        let available = certificate_capacity(g, &self.violating_set, &demand.right);
        required == self.required && available == self.available && available < required
    }
}

pub(crate) fn certificate_capacity(g: &BipartiteGraph, set: &[usize], right_quota: &[usize]) -> usize {
    let mut in_set = vec![false; g.left_count()];
    set.iter().for_each(|&l| in_set[l] = true);
    let mut mult = vec![0usize; g.right_count()];
    for &(l, r) in g.edges() {
        if in_set[l] {
            mult[r] += 1;
        }
    }
    mult.iter()
        .zip(right_quota)
        .map(|(&m, &q)| m.min(q))
        .sum()
}
