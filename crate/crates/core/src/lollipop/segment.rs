use crate::hypergraph::{EdgeId, VertexId};
use crate::search::{BergeCycle, BergePath};

use super::LollipopError;

/// An element of a cycle a segment is attached to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Anchor {
    Vertex(VertexId),
    Edge(EdgeId),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Pos {
    Vertex(usize),
    Edge(usize),
}

fn resolve(c: &BergeCycle, a: Anchor) -> Result<Pos, LollipopError> {
    match a {
        Anchor::Vertex(v) => c.position_of_vertex(v).map(Pos::Vertex),
        Anchor::Edge(e) => c.position_of_edge(e).map(Pos::Edge),
    }
    .ok_or(LollipopError::AnchorNotOnCycle(a))
}

/// Minimum vertex count of the longer segment between two anchors on a cycle
/// of length `c`: `⌈c/2⌉`, `⌈(c+1)/2⌉` or `⌈(c+2)/2⌉` for edge–edge,
/// edge–vertex and vertex–vertex anchors.
pub fn segment_guarantee(c: usize, a: Anchor, b: Anchor) -> usize {
    let vertex_ends = [a, b]
        .iter()
        .filter(|x| matches!(x, Anchor::Vertex(_)))
        .count();
    (c + vertex_ends).div_ceil(2)
}

/// The longer of the two arcs of `c` joining anchors `a` and `b`, as a Berge
/// path from the `a` side to the `b` side. Anchor edges are never used; an
/// edge anchor contributes the endpoint on the arc's side. Ties go to the
/// forward (increasing index) arc.
pub fn long_segment(c: &BergeCycle, a: Anchor, b: Anchor) -> Result<BergePath, LollipopError> {
    let pa = resolve(c, a)?;
    let pb = resolve(c, b)?;
    if pa == pb {
        return Err(LollipopError::SameAnchor);
    }
    let fwd = arc(c, pa, pb, true);
    let bwd = arc(c, pa, pb, false);
    Ok(if bwd.vertices.len() > fwd.vertices.len() {
        bwd
    } else {
        fwd
    })
}

/// Both arcs, forward first.
pub fn segments(c: &BergeCycle, a: Anchor, b: Anchor) -> Result<[BergePath; 2], LollipopError> {
    let pa = resolve(c, a)?;
    let pb = resolve(c, b)?;
    if pa == pb {
        return Err(LollipopError::SameAnchor);
    }
    Ok([arc(c, pa, pb, true), arc(c, pa, pb, false)])
}

fn arc(c: &BergeCycle, a: Pos, b: Pos, forward: bool) -> BergePath {
    let len = c.len();
    // edge i joins vertex i and vertex i + 1
    let (start, end) = if forward {
        let s = match a {
            Pos::Vertex(j) => j,
            Pos::Edge(i) => (i + 1) % len,
        };
        let t = match b {
            Pos::Vertex(j) => j,
            Pos::Edge(i) => i,
        };
        (s, t)
    } else {
        let s = match a {
            Pos::Vertex(j) => j,
            Pos::Edge(i) => i,
        };
        let t = match b {
            Pos::Vertex(j) => j,
            Pos::Edge(i) => (i + 1) % len,
        };
        (s, t)
    };
    let steps = if forward {
        (end + len - start) % len
    } else {
        (start + len - end) % len
    };
    let mut vertices = Vec::with_capacity(steps + 1);
    let mut edges = Vec::with_capacity(steps);
    let mut cur = start;
    vertices.push(c.vertices[cur]);
    for _ in 0..steps {
        if forward {
            edges.push(c.edges[cur]);
            cur = (cur + 1) % len;
        } else {
            cur = (cur + len - 1) % len;
            edges.push(c.edges[cur]);
        }
        vertices.push(c.vertices[cur]);
    }
    BergePath::new(vertices, edges)
}
