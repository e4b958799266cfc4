//! Small undirected simple graph used for connectivity and path lemmas.

use std::collections::VecDeque;

pub type NodeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<NodeId>>,
}

impl Graph {
    pub fn new(nodes: usize) -> Self {
        Self {
            adj: vec![Vec::new(); nodes],
        }
    }

    pub fn from_edges(nodes: usize, edges: &[(NodeId, NodeId)]) -> Self {
        let mut g = Self::new(nodes);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    /// Inserts `a-b`, keeping adjacency lists sorted. Loops and repeats are ignored.
    pub fn add_edge(&mut self, a: NodeId, b: NodeId) {
        if a == b {
            return;
        }
        for (x, y) in [(a, b), (b, a)] {
            if let Err(pos) = self.adj[x].binary_search(&y) {
                self.adj[x].insert(pos, y);
            }
        }
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: NodeId, b: NodeId) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(a, ns)| ns.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
    }

    /// Number of connected components after deleting the `removed` nodes.
    pub fn components_without(&self, removed: &[bool]) -> usize {
        let n = self.node_count();
        let mut seen = removed.to_vec();
        seen.resize(n, false);
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.components_without(&[]) <= 1
    }

    /// Whether deleting `set` leaves at least two components.
    pub fn separates(&self, set: &[NodeId]) -> bool {
        let mut removed = vec![false; self.node_count()];
        for &v in set {
            removed[v] = true;
        }
        self.components_without(&removed) >= 2
    }

    /// Cut vertices, ascending.
    pub fn articulation_points(&self) -> Vec<NodeId> {
        let n = self.node_count();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut is_cut = vec![false; n];
        let mut timer = 0;
        // (node, parent, next neighbor index)
        let mut stack: Vec<(NodeId, NodeId, usize)> = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut root_children = 0;
            stack.push((root, usize::MAX, 0));
            while let Some(frame) = stack.last_mut() {
                let (v, parent, idx) = *frame;
                if idx < self.adj[v].len() {
                    frame.2 += 1;
                    let w = self.adj[v][idx];
                    if w == parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, v, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[v]);
                        if parent != root && low[v] >= disc[parent] {
                            is_cut[parent] = true;
                        }
                    }
                }
            }
            if root_children >= 2 {
                is_cut[root] = true;
            }
        }
        (0..n).filter(|&v| is_cut[v]).collect()
    }

    /// Connected, at least three nodes, and no cut vertex.
    pub fn is_biconnected(&self) -> bool {
        self.node_count() >= 3 && self.is_connected() && self.articulation_points().is_empty()
    }
}
