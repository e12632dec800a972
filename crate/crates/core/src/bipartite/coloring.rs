use super::flow::FlowNetwork;
use super::BipartiteGraph;

/// A proper edge coloring. `colors[e]` is the 0-based color of edge `e`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    pub colors: Vec<usize>,
    pub num_colors: usize,
}

impl EdgeColoring {
    /// Edge indices of one color class, ascending.
    pub fn class(&self, color: usize) -> Vec<usize> {
        (0..self.colors.len())
            .filter(|&e| self.colors[e] == color)
            .collect()
    }

    pub fn is_proper(&self, g: &BipartiteGraph) -> bool {
        if self.colors.len() != g.edges().len() {
            return false;
        }
        let mut left_seen = vec![vec![false; self.num_colors]; g.left_count()];
        let mut right_seen = vec![vec![false; self.num_colors]; g.right_count()];
        for (&(l, r), &c) in g.edges().iter().zip(&self.colors) {
            if c >= self.num_colors || left_seen[l][c] || right_seen[r][c] {
                return false;
            }
            left_seen[l][c] = true;
            right_seen[r][c] = true;
        }
        true
    }
}

/// Colors the edges of a bipartite multigraph with exactly `Δ` colors.
///
/// The graph is first padded to a `Δ`-regular multigraph with dummy
/// vertices and edges. A regular graph of even degree is split by an Euler
/// partition into two regular halves of half the degree; odd degree peels a
/// perfect matching first. Dummy edges are discarded at the end.
pub fn edge_color(g: &BipartiteGraph) -> EdgeColoring {
    let delta = g.max_degree();
    let m = g.edges().len();
    if delta == 0 {
        return EdgeColoring {
            colors: Vec::new(),
            num_colors: 0,
        };
    }

    let side = g.left_count().max(g.right_count());
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    let mut ldef: Vec<usize> = g.left_degrees().iter().map(|d| delta - d).collect();
    let mut rdef: Vec<usize> = g.right_degrees().iter().map(|d| delta - d).collect();
    ldef.resize(side, delta);
    rdef.resize(side, delta);
    let (mut i, mut j) = (0, 0);
    loop {
        while i < side && ldef[i] == 0 {
            i += 1;
        }
        while j < side && rdef[j] == 0 {
            j += 1;
        }
        if i == side || j == side {
            break;
        }
        let t = ldef[i].min(rdef[j]);
        edges.extend(std::iter::repeat_n((i, j), t));
        ldef[i] -= t;
        rdef[j] -= t;
    }
    debug_assert_eq!(edges.len(), side * delta);

    let mut colors = vec![usize::MAX; edges.len()];
    let ids: Vec<usize> = (0..edges.len()).collect();
    color_regular(&edges, side, &ids, delta, 0, &mut colors);
    colors.truncate(m);
    EdgeColoring {
        colors,
        num_colors: delta,
    }
}

fn color_regular(
    all: &[(usize, usize)],
    side: usize,
    ids: &[usize],
    degree: usize,
    offset: usize,
    colors: &mut [usize],
) {
    match degree {
        0 => {}
        1 => ids.iter().for_each(|&e| colors[e] = offset),
        d if d % 2 == 1 => {
            let matched = perfect_matching(all, side, ids);
            let mut rest = Vec::with_capacity(ids.len() - side);
            for (&e, &in_matching) in ids.iter().zip(&matched) {
                if in_matching {
                    colors[e] = offset;
                } else {
                    rest.push(e);
                }
            }
            color_regular(all, side, &rest, d - 1, offset + 1, colors);
        }
        d => {
            let (a, b) = euler_split(all, side, ids);
            color_regular(all, side, &a, d / 2, offset, colors);
            color_regular(all, side, &b, d / 2, offset + d / 2, colors);
        }
    }
}

/// Splits a regular bipartite multigraph of even degree into two regular
/// halves by labeling edges alternately along closed trails.
fn euler_split(all: &[(usize, usize)], side: usize, ids: &[usize]) -> (Vec<usize>, Vec<usize>) {
    // Vertices: left 0..side, right side..2*side. Incidences hold positions in `ids`.
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); 2 * side];
    for (pos, &e) in ids.iter().enumerate() {
        let (l, r) = all[e];
        incident[l].push(pos);
        incident[side + r].push(pos);
    }
    let mut used = vec![false; ids.len()];
    let mut cursor = vec![0usize; 2 * side];
    let mut half = vec![false; ids.len()];

    let mut next_unused = |v: usize, used: &[bool]| -> Option<usize> {
        while cursor[v] < incident[v].len() {
            let pos = incident[v][cursor[v]];
            if !used[pos] {
                return Some(pos);
            }
            cursor[v] += 1;
        }
        None
    };

    for start in 0..2 * side {
        while let Some(first) = next_unused(start, &used) {
            let mut pos = first;
            let mut v = start;
            let mut parity = false;
            loop {
                used[pos] = true;
                half[pos] = parity;
                parity = !parity;
                let (l, r) = all[ids[pos]];
                v = if v == l { side + r } else { l };
                if v == start {
                    break;
                }
                pos = next_unused(v, &used).expect("even degrees close every trail");
            }
        }
    }
    let mut a = Vec::with_capacity(ids.len() / 2);
    let mut b = Vec::with_capacity(ids.len() / 2);
    for (pos, &e) in ids.iter().enumerate() {
        if half[pos] {
            b.push(e);
        } else {
            a.push(e);
        }
    }
    (a, b)
}

fn perfect_matching(all: &[(usize, usize)], side: usize, ids: &[usize]) -> Vec<bool> {
    let source = 2 * side;
    let sink = source + 1;
    let mut net = FlowNetwork::new(2 * side + 2);
    for v in 0..side {
        net.add_arc(source, v, 1);
    }
    let arcs: Vec<_> = ids
        .iter()
        .map(|&e| {
            let (l, r) = all[e];
            net.add_arc(l, side + r, 1)
        })
        .collect();
    for v in 0..side {
        net.add_arc(side + v, sink, 1);
    }
    let flow = net.max_flow(source, sink);
    assert_eq!(flow as usize, side, "regular bipartite graphs have perfect matchings");
    arcs.iter().map(|&a| net.flow(a) == 1).collect()
}
