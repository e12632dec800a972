//! Integral max-flow by blocking flows on a level graph (Dinic).
//!
//! Arcs are stored in insertion order and every search visits them in that
//! order, so results depend only on the order arcs were added.

use std::collections::VecDeque;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    rev: usize,
    cap: u64,
}

#[derive(Debug, Clone)]
pub(crate) struct FlowNetwork {
    adj: Vec<Vec<Arc>>,
    level: Vec<u32>,
    next: Vec<usize>,
}

/// Handle to an arc, usable to read back its flow.
#[derive(Debug, Clone, Copy)]
pub(crate) struct ArcId {
    from: usize,
    index: usize,
}

const UNSEEN: u32 = u32::MAX;

impl FlowNetwork {
    pub(crate) fn new(nodes: usize) -> Self {
        FlowNetwork {
            adj: vec![Vec::new(); nodes],
            level: vec![UNSEEN; nodes],
            next: vec![0; nodes],
        }
    }

    pub(crate) fn add_arc(&mut self, from: usize, to: usize, cap: u64) -> ArcId {
        let index = self.adj[from].len();
        let rev = self.adj[to].len() + usize::from(from == to);
        self.adj[from].push(Arc { to, rev, cap });
        self.adj[to].push(Arc {
            to: from,
            rev: index,
            cap: 0,
        });
        ArcId { from, index }
    }

    /// Flow currently pushed through an arc (the residual capacity of its
    /// reverse twin).
    pub(crate) fn flow(&self, id: ArcId) -> u64 {
        let arc = &self.adj[id.from][id.index];
        self.adj[arc.to][arc.rev].cap
    }

    pub(crate) fn max_flow(&mut self, source: usize, sink: usize) -> u64 {
        let mut total = 0;
        while self.build_levels(source, sink) {
            self.next.iter_mut().for_each(|x| *x = 0);
            loop {
                let pushed = self.augment(source, sink, u64::MAX);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
        total
    }

    /// Nodes reachable from `source` in the residual network. After
    /// [`max_flow`](Self::max_flow) this is the source side of a minimum cut.
    pub(crate) fn residual_reachable(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        let mut queue = VecDeque::from([source]);
        seen[source] = true;
        while let Some(v) = queue.pop_front() {
            for arc in &self.adj[v] {
                if arc.cap > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    queue.push_back(arc.to);
                }
            }
        }
        seen
    }

    fn build_levels(&mut self, source: usize, sink: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = UNSEEN);
        self.level[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for arc in &self.adj[v] {
                if arc.cap > 0 && self.level[arc.to] == UNSEEN {
                    self.level[arc.to] = self.level[v] + 1;
                    queue.push_back(arc.to);
                }
            }
        }
        self.level[sink] != UNSEEN
    }

    fn augment(&mut self, v: usize, sink: usize, limit: u64) -> u64 {
        if v == sink {
            return limit;
        }
        while self.next[v] < self.adj[v].len() {
            let i = self.next[v];
            let Arc { to, cap, .. } = self.adj[v][i];
            if cap > 0 && self.level[to] == self.level[v] + 1 {
                let pushed = self.augment(to, sink, limit.min(cap));
                if pushed > 0 {
                    self.adj[v][i].cap -= pushed;
                    let rev = self.adj[v][i].rev;
                    self.adj[to][rev].cap += pushed;
                    return pushed;
                }
            }
            self.next[v] += 1;
        }
        0
    }
}
