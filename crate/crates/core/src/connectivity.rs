//! Vertex connectivity via unit-capacity max-flow on the node-split graph.
//!
//! A hypergraph is k-connected when its incidence bipartite graph is.

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, NodeId};
use crate::hypergraph::{EdgeId, Hypergraph, IncidenceGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConnectivityError {
    #[error("graph has fewer than two nodes")]
    EmptyGraph,
}

/// A node of the incidence graph, decoded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IncidenceNode {
    Vertex(VertexId),
    Edge(EdgeId),
}

impl IncidenceGraph {
    pub fn decode(&self, node: NodeId) -> IncidenceNode {
        if node < self.left {
            IncidenceNode::Vertex(node)
        } else {
            IncidenceNode::Edge(node - self.left)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConnectivityWitness {
    /// No separator smaller than `k` exists; `value` is the exact connectivity.
    ConnectedK { k: usize, value: usize },
    /// Removing `separator` (incidence-graph node ids) disconnects the graph.
    Separator {
        separator: Vec<NodeId>,
        value: usize,
    },
    /// The graph has no separator at all but at most `k` nodes.
    TooSmall { nodes: usize, value: usize },
}

impl ConnectivityWitness {
    pub fn is_connected(&self) -> bool {
        matches!(self, ConnectivityWitness::ConnectedK { .. })
    }

    pub fn value(&self) -> usize {
        match *self {
            ConnectivityWitness::ConnectedK { value, .. }
            | ConnectivityWitness::Separator { value, .. }
            | ConnectivityWitness::TooSmall { value, .. } => value,
        }
    }
}

const INF: u32 = u32::MAX / 2;

struct SplitNetwork {
    // arcs: (head, capacity); arc i ^ 1 is its reverse
    head: Vec<usize>,
    cap: Vec<u32>,
    orig: Vec<u32>,
    out: Vec<Vec<usize>>,
}

impl SplitNetwork {
    /// Node `v` becomes `2v` (in) and `2v + 1` (out). Graph edges get
    /// capacity `edge_cap`; it must be unbounded for cut extraction.
    fn new(g: &Graph, s: NodeId, t: NodeId, edge_cap: u32) -> Self {
        let n = g.node_count();
        let mut net = SplitNetwork {
            head: Vec::new(),
            cap: Vec::new(),
            orig: Vec::new(),
            out: vec![Vec::new(); 2 * n],
        };
        for v in 0..n {
            let c = if v == s || v == t { INF } else { 1 };
            net.add_arc(2 * v, 2 * v + 1, c);
        }
        for v in 0..n {
            for &w in g.neighbors(v) {
                net.add_arc(2 * v + 1, 2 * w, edge_cap);
            }
        }
        // lowest-id augmenting paths first
        let head = &net.head;
        for arcs in net.out.iter_mut() {
            arcs.sort_by_key(|&a| (head[a], a));
        }
        net
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        self.out[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.orig.push(cap);
        self.out[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
        self.orig.push(0);
    }

    /// Splits the current flow into `source -> sink` node sequences.
    fn decompose(&self, source: usize, sink: usize) -> Vec<Vec<NodeId>> {
        let mut flow: Vec<u32> = (0..self.cap.len())
            .map(|a| self.orig[a].saturating_sub(self.cap[a]))
            .collect();
        let mut paths = Vec::new();
        loop {
            let mut x = source;
            let mut path = vec![source / 2];
            while x != sink {
                let Some(&a) = self.out[x].iter().find(|&&a| a % 2 == 0 && flow[a] > 0) else {
                    return paths;
                };
                flow[a] -= 1;
                x = self.head[a];
                if path.last() != Some(&(x / 2)) {
                    path.push(x / 2);
                }
            }
            paths.push(path);
        }
    }

    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let mut pred = vec![usize::MAX; self.out.len()];
        let mut seen = vec![false; self.out.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for &a in &self.out[x] {
                let y = self.head[a];
                if self.cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    pred[y] = a;
                    queue.push_back(y);
                }
            }
        }
        if !seen[sink] {
            return false;
        }
        let mut x = sink;
        while x != source {
            let a = pred[x];
            self.cap[a] -= 1;
            self.cap[a ^ 1] += 1;
            x = self.head[a ^ 1];
        }
        true
    }

    fn residual_reach(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            for &a in &self.out[x] {
                let y = self.head[a];
                if self.cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }
}

/// Maximum number of internally disjoint `s`–`t` paths, for non-adjacent `s != t`,
/// together with a minimum separator. Stops once `limit` paths are found, in
/// which case no separator is returned.
pub fn local_connectivity(
    g: &Graph,
    s: NodeId,
    t: NodeId,
    limit: usize,
) -> (usize, Option<Vec<NodeId>>) {
    debug_assert!(s != t && !g.has_edge(s, t));
    let mut net = SplitNetwork::new(g, s, t, INF);
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    while flow < limit && net.augment(source, sink) {
        flow += 1;
    }
    if flow >= limit {
        return (flow, None);
    }
    let reach = net.residual_reach(source);
    let cut = (0..g.node_count())
        .filter(|&v| reach[2 * v] && !reach[2 * v + 1])
        .collect();
    (flow, Some(cut))
}

/// Up to `limit` internally disjoint `s`–`t` paths (node sequences from `s` to `t`).
pub fn disjoint_paths(g: &Graph, s: NodeId, t: NodeId, limit: usize) -> Vec<Vec<NodeId>> {
    let mut net = SplitNetwork::new(g, s, t, 1);
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    while flow < limit && net.augment(source, sink) {
        flow += 1;
    }
    net.decompose(source, sink)
}

/// Exact vertex connectivity and a minimum separator (`None` when the graph
/// has no non-adjacent pair).
///
/// Sources are swept in id order; a minimum separator of size κ misses one of
/// the first κ + 1 nodes, so the sweep stops after that many sources.
pub fn minimum_separator(g: &Graph) -> Result<(usize, Option<Vec<NodeId>>), ConnectivityError> {
    let n = g.node_count();
    if n < 2 {
        return Err(ConnectivityError::EmptyGraph);
    }
    if !g.is_connected() {
        return Ok((0, Some(Vec::new())));
    }
    let mut best = n - 1;
    let mut best_cut = None;
    let mut s = 0;
    while s < n && s <= best {
        for t in 0..n {
            if t == s || g.has_edge(s, t) {
                continue;
            }
            let (flow, cut) = local_connectivity(g, s, t, best);
            if flow < best {
                best = flow;
                best_cut = cut;
            }
        }
        s += 1;
    }
    Ok((best, best_cut))
}

pub fn graph_connectivity(g: &Graph) -> Result<usize, ConnectivityError> {
    minimum_separator(g).map(|(k, _)| k)
}

pub fn vertex_connectivity(ig: &IncidenceGraph) -> Result<usize, ConnectivityError> {
    graph_connectivity(&ig.to_graph())
}

pub fn is_k_connected(h: &Hypergraph, k: usize) -> ConnectivityWitness {
    let g = h.incidence_graph().to_graph();
    let nodes = g.node_count();
    // a lone node has nothing to separate
    let (value, cut) = minimum_separator(&g).unwrap_or_default();
    if value >= k && nodes > k {
        return ConnectivityWitness::ConnectedK { k, value };
    }
    match cut {
        Some(separator) => ConnectivityWitness::Separator { separator, value },
        None => ConnectivityWitness::TooSmall { nodes, value },
    }
}

/// Fast 2-connectivity test for the incidence graph (no max-flow).
pub fn is_two_connected(h: &Hypergraph) -> bool {
    h.incidence_graph().to_graph().is_biconnected()
}
