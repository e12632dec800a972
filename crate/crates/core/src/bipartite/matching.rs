use super::flow::FlowNetwork;
use super::{certificate_capacity, BipartiteGraph, DegreeDemand, HallCertificate, KernelError};

/// Default left-side bound for the exhaustive [`hall_check`].
pub const DEFAULT_HALL_LIMIT: usize = 20;

/// Indices into the graph's edge list, ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    pub edges: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MatchOutcome {
    Matched(Matching),
    Infeasible(HallCertificate),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum HallOutcome {
    Satisfied,
    Violated(HallCertificate),
}

/// Finds an edge subset giving every vertex exactly its quota.
///
/// The problem is solved as a flow `source → left (quota) → right (one unit
/// per edge) → sink (quota)`. When the flow falls short, the left vertices
/// on the source side of the minimum cut form a deficient set.
pub fn degree_matching(g: &BipartiteGraph, demand: &DegreeDemand) -> Result<MatchOutcome, KernelError> {
    let (nl, nr) = (g.left_count(), g.right_count());
    if demand.left.len() != nl || demand.right.len() != nr {
        return Err(KernelError::QuotaLength {
            left: demand.left.len(),
            right: demand.right.len(),
            left_count: nl,
            right_count: nr,
        });
    }
    let left_sum: usize = demand.left.iter().sum();
    let right_sum: usize = demand.right.iter().sum();
    if left_sum != right_sum {
        return Err(KernelError::QuotaSumMismatch {
            left: left_sum,
            right: right_sum,
        });
    }

    let source = nl + nr;
    let sink = source + 1;
    let mut net = FlowNetwork::new(nl + nr + 2);
    for (l, &q) in demand.left.iter().enumerate() {
        net.add_arc(source, l, q as u64);
    }
    let arcs: Vec<_> = g
        .edges()
        .iter()
        .map(|&(l, r)| net.add_arc(l, nl + r, 1))
        .collect();
    for (r, &q) in demand.right.iter().enumerate() {
        net.add_arc(nl + r, sink, q as u64);
    }

    let flow = net.max_flow(source, sink);
    if flow as usize == left_sum {
        let edges = arcs
            .iter()
            .enumerate()
            .filter(|(_, &a)| net.flow(a) == 1)
            .map(|(i, _)| i)
            .collect();
        return Ok(MatchOutcome::Matched(Matching { edges }));
    }

    let reach = net.residual_reachable(source);
    let violating_set: Vec<usize> = (0..nl).filter(|&l| reach[l]).collect();
    let neighborhood = g.neighborhood(&violating_set);
    let required = violating_set.iter().map(|&l| demand.left[l]).sum();
    let available = certificate_capacity(g, &violating_set, &demand.right);
    debug_assert!(available < required);
    Ok(MatchOutcome::Infeasible(HallCertificate {
        violating_set,
        neighborhood,
        required,
        available,
    }))
}

/// Exhaustive check of `|N(S)| ≥ multiplier·|S|` over all left subsets,
/// refusing graphs with more than [`DEFAULT_HALL_LIMIT`] left vertices.
pub fn hall_check(g: &BipartiteGraph, multiplier: usize) -> Result<HallOutcome, KernelError> {
    hall_check_with_limit(g, multiplier, DEFAULT_HALL_LIMIT)
}

/// [`hall_check`] with an explicit left-side limit. Subsets are visited in
/// increasing bitmask order, so the reported set is the lowest violating
/// mask.
pub fn hall_check_with_limit(
    g: &BipartiteGraph,
    multiplier: usize,
    limit: usize,
) -> Result<HallOutcome, KernelError> {
    if multiplier == 0 {
        return Err(KernelError::ZeroMultiplier);
    }
    let nl = g.left_count();
    if nl > limit || nl >= usize::BITS as usize {
        return Err(KernelError::TooManyLeftVertices {
            count: nl,
            limit: limit.min(usize::BITS as usize - 1),
        });
    }
    let words = g.right_count().div_ceil(64);
    let mut adj = vec![vec![0u64; words]; nl];
    for &(l, r) in g.edges() {
        adj[l][r / 64] |= 1 << (r % 64);
    }
    let mut union = vec![0u64; words];
    for mask in 1usize..(1 << nl) {
        union.iter_mut().for_each(|w| *w = 0);
        for (l, row) in adj.iter().enumerate() {
            if mask >> l & 1 == 1 {
                union.iter_mut().zip(row).for_each(|(u, a)| *u |= a);
            }
        }
        let size: usize = union.iter().map(|w| w.count_ones() as usize).sum();
        let set_size = mask.count_ones() as usize;
        if size < multiplier * set_size {
            let violating_set: Vec<usize> = (0..nl).filter(|&l| mask >> l & 1 == 1).collect();
            let neighborhood = g.neighborhood(&violating_set);
            return Ok(HallOutcome::Violated(HallCertificate {
                violating_set,
                neighborhood,
                required: multiplier * set_size,
                available: size,
            }));
        }
    }
    Ok(HallOutcome::Satisfied)
}
