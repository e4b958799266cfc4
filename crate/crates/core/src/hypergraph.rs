//! Uniform hypergraphs and their incidence bipartite graphs.
//!
//! Vertices are dense ids `0..n`. Edges are stored as sorted vertex lists and
//! are identified by their position in the edge list.

use std::collections::HashMap;

use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("uniformity r = {r} must be at least 2")]
    BadUniformity { r: usize },
    #[error("vertex count n = {n} is smaller than uniformity r = {r}")]
    TooFewVertices { n: usize, r: usize },
    #[error("edge {edge} has {found} distinct vertices, expected {expected}")]
    NonUniformEdge {
        edge: EdgeId,
        found: usize,
        expected: usize,
    },
    #[error("edge {edge} duplicates edge {first}")]
    DuplicateEdge { edge: EdgeId, first: EdgeId },
    #[error("vertex {vertex} outside 0..{n}{}", edge.map(|e| format!(" (edge {e})")).unwrap_or_default())]
    VertexOutOfRange {
        edge: Option<EdgeId>,
        vertex: VertexId,
        n: usize,
    },
}

/// An `r`-uniform hypergraph on the vertex set `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    r: usize,
    edges: Vec<Vec<VertexId>>,
    incident: Vec<Vec<EdgeId>>,
}

impl Hypergraph {
    /// Validates and builds a hypergraph. Edge ids are the input positions.
    pub fn new<I, E>(n: usize, r: usize, edges: I) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = E>,
        E: IntoIterator<Item = VertexId>,
    {
        if r < 2 {
            return Err(HypergraphError::BadUniformity { r });
        }
        if n < r {
            return Err(HypergraphError::TooFewVertices { n, r });
        }
        let mut stored: Vec<Vec<VertexId>> = Vec::new();
        let mut seen: HashMap<Vec<VertexId>, EdgeId> = HashMap::new();
        for (id, edge) in edges.into_iter().enumerate() {
            let mut verts: Vec<VertexId> = edge.into_iter().collect();
            if let Some(&v) = verts.iter().find(|&&v| v >= n) {
                return Err(HypergraphError::VertexOutOfRange {
                    edge: Some(id),
                    vertex: v,
                    n,
                });
            }
            verts.sort_unstable();
            verts.dedup();
            if verts.len() != r {
                return Err(HypergraphError::NonUniformEdge {
                    edge: id,
                    found: verts.len(),
                    expected: r,
                });
            }
            if let Some(&first) = seen.get(&verts) {
                return Err(HypergraphError::DuplicateEdge { edge: id, first });
            }
            seen.insert(verts.clone(), id);
            stored.push(verts);
        }
        let mut incident = vec![Vec::new(); n];
        for (id, e) in stored.iter().enumerate() {
            for &v in e {
                incident[v].push(id);
            }
        }
        Ok(Self {
            n,
            r,
            edges: stored,
            incident,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<VertexId>] {
        &self.edges
    }

    /// Sorted vertex list of edge `e`. Panics if `e` is out of range.
    pub fn edge(&self, e: EdgeId) -> &[VertexId] {
        &self.edges[e]
    }

    pub fn contains(&self, e: EdgeId, v: VertexId) -> bool {
        self.edges[e].binary_search(&v).is_ok()
    }

    /// Edge ids containing `v`, ascending.
    pub fn incident_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.incident[v]
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), HypergraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(HypergraphError::VertexOutOfRange {
                edge: None,
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, HypergraphError> {
        self.check_vertex(v)?;
        Ok(self.incident[v].len())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incident.iter().map(Vec::len).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.incident.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Open neighborhood: vertices sharing at least one edge with `v`.
    pub fn neighborhood(&self, v: VertexId) -> Result<Vec<VertexId>, HypergraphError> {
        self.check_vertex(v)?;
        let mut mark = vec![false; self.n];
        for &e in &self.incident[v] {
            for &u in &self.edges[e] {
                mark[u] = true;
            }
        }
        mark[v] = false;
        Ok((0..self.n).filter(|&u| mark[u]).collect())
    }

    /// Closed neighborhood `N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: VertexId) -> Result<Vec<VertexId>, HypergraphError> {
        let mut out = self.neighborhood(v)?;
        let pos = out.partition_point(|&u| u < v);
        out.insert(pos, v);
        Ok(out)
    }

    /// Id of the edge with exactly this vertex set, if present.
    pub fn find_edge(&self, verts: &[VertexId]) -> Option<EdgeId> {
        let mut sorted = verts.to_vec();
        sorted.sort_unstable();
        let v = *sorted.first()?;
        if v >= self.n {
            return None;
        }
        self.incident[v]
            .iter()
            .copied()
            .find(|&e| self.edges[e] == sorted)
    }

    pub fn incidence_graph(&self) -> IncidenceGraph {
        IncidenceGraph {
            left: self.n,
            right: self.edges.len(),
            adjacency: self.edges.clone(),
        }
    }
}

/// Bipartite graph on `V(H) ∪ E(H)` with adjacency given by containment.
///
/// Node ids in the flattened [`Graph`](crate::graph::Graph) view are the
/// vertex ids `0..left` followed by `left + e` for every edge `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceGraph {
    pub left: usize,
    pub right: usize,
    /// For each edge node, its incident vertex nodes (sorted).
    pub adjacency: Vec<Vec<VertexId>>,
}

impl IncidenceGraph {
    pub fn node_count(&self) -> usize {
        self.left + self.right
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum()
    }

    pub fn edge_node(&self, e: EdgeId) -> usize {
        self.left + e
    }

    /// Graph-degree of a vertex node.
    pub fn vertex_node_degree(&self, v: VertexId) -> usize {
        self.adjacency.iter().filter(|adj| adj.contains(&v)).count()
    }

    pub fn to_graph(&self) -> crate::graph::Graph {
        let mut g = crate::graph::Graph::new(self.node_count());
        for (e, adj) in self.adjacency.iter().enumerate() {
            for &v in adj {
                g.add_edge(v, self.left + e);
            }
        }
        g
    }
}
