//! The improvement move catalog.
//!
//! Moves are tried in a fixed order and edges are scanned by id; the first
//! candidate that is a valid lollipop with a strictly larger score wins.
//! Rewirings that break an invariant are dropped.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::hypergraph::{EdgeId, Hypergraph, VertexId};
use crate::search::{BergeCycle, BergePath, PartialBergePath};

use super::grow::attach;
use super::segment::{long_segment, Anchor};
use super::{Lollipop, LollipopError, LollipopScore, Tail};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Move {
    PathExtension,
    CycleSplice,
    EdgeSwap,
    SuffixReversal,
    Upgrade,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Move::PathExtension => "path-extension",
            Move::CycleSplice => "cycle-splice",
            Move::EdgeSwap => "edge-swap",
            Move::SuffixReversal => "suffix-reversal",
            Move::Upgrade => "p-to-o",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    Improved {
        lollipop: Lollipop,
        score: LollipopScore,
        mv: Move,
    },
    Fixpoint,
}

/// Membership tables for one lollipop.
struct Marks {
    on_cycle: Vec<bool>,
    on_tail: Vec<bool>,
    cycle_edge: Vec<bool>,
    tail_edge: Vec<bool>,
}

impl Marks {
    fn new(h: &Hypergraph, l: &Lollipop) -> Self {
        let mut m = Marks {
            on_cycle: vec![false; h.n()],
            on_tail: vec![false; h.n()],
            cycle_edge: vec![false; h.num_edges()],
            tail_edge: vec![false; h.num_edges()],
        };
        for &v in &l.cycle.vertices {
            m.on_cycle[v] = true;
        }
        for &v in l.tail.vertices() {
            m.on_tail[v] = true;
        }
        for &e in &l.cycle.edges {
            m.cycle_edge[e] = true;
        }
        for &e in l.tail.edges() {
            m.tail_edge[e] = true;
        }
        m
    }

    /// Edge of `H'`: on neither the cycle nor the path.
    fn free(&self, e: EdgeId) -> bool {
        !self.cycle_edge[e] && !self.tail_edge[e]
    }
}

/// Returns the candidate, normalized, if it is valid and strictly better.
fn better(
    h: &Hypergraph,
    base: LollipopScore,
    cand: Lollipop,
) -> Option<(Lollipop, LollipopScore)> {
    let cand = cand.normalized();
    let score = cand.score(h).ok()?;
    (score > base).then_some((cand, score))
}

fn with_tail(l: &Lollipop, vertices: Vec<VertexId>, edges: Vec<EdgeId>) -> Lollipop {
    let tail = match l.tail {
        Tail::O(_) => Tail::O(BergePath::new(vertices, edges)),
        Tail::P(_) => Tail::P(PartialBergePath::new(edges, vertices)),
    };
    Lollipop {
        cycle: l.cycle.clone(),
        tail,
    }
}

/// One improvement step.
pub fn improve(h: &Hypergraph, l: &Lollipop) -> Result<Step, LollipopError> {
    let base = l.score(h)?;
    type Gen = fn(&Hypergraph, &Lollipop, LollipopScore) -> Option<(Lollipop, LollipopScore)>;
    let catalog: [(Move, Gen); 5] = [
        (Move::PathExtension, path_extension),
        (Move::CycleSplice, cycle_splice),
        (Move::EdgeSwap, edge_swap),
        (Move::SuffixReversal, suffix_reversal),
        (Move::Upgrade, upgrade),
    ];
    for (mv, gen) in catalog {
        if let Some((lollipop, score)) = gen(h, l, base) {
            assert!(score > base, "move {mv} did not improve the score");
            return Ok(Step::Improved {
                lollipop,
                score,
                mv,
            });
        }
    }
    Ok(Step::Fixpoint)
}

/// Extends the path at its tip by a free edge and a fresh vertex.
fn path_extension(
    h: &Hypergraph,
    l: &Lollipop,
    base: LollipopScore,
) -> Option<(Lollipop, LollipopScore)> {
    let m = Marks::new(h, l);
    let tip = l.tail.tip();
    for &g in h.incident_edges(tip) {
        if !m.free(g) {
            continue;
        }
        for &y in h.edge(g) {
            if m.on_cycle[y] || m.on_tail[y] {
                continue;
            }
            let mut vertices = l.tail.vertices().to_vec();
            let mut edges = l.tail.edges().to_vec();
            vertices.push(y);
            edges.push(g);
            if let Some(hit) = better(h, base, with_tail(l, vertices, edges)) {
                return Some(hit);
            }
        }
    }
    None
}

/// Closes the path prefix up to some `u_m` back onto the cycle through a
/// connector edge, keeping the long segment of the cycle between root and
/// connector.
fn cycle_splice(
    h: &Hypergraph,
    l: &Lollipop,
    base: LollipopScore,
) -> Option<(Lollipop, LollipopScore)> {
    let m = Marks::new(h, l);
    let c = l.cycle.len();
    let verts = l.tail.vertices();
    let edges = l.tail.edges();
    let (root, first_off) = match &l.tail {
        Tail::O(p) => (Anchor::Vertex(p.vertices[0]), 1),
        Tail::P(p) => (Anchor::Edge(p.edges[0]), 0),
    };
    for j in first_off..verts.len() {
        let u = verts[j];
        // prefix edges from the root to u
        let prefix_edges = match &l.tail {
            Tail::O(_) => &edges[..j],
            Tail::P(_) => &edges[..=j],
        };
        let back_vertices: Vec<VertexId> = verts[first_off..=j].iter().rev().copied().collect();
        let back_edges: Vec<EdgeId> = prefix_edges.iter().rev().copied().collect();
        for &g in h.incident_edges(u) {
            let anchors: Vec<Anchor> = if m.cycle_edge[g] {
                if root == Anchor::Edge(g) {
                    continue;
                }
                vec![Anchor::Edge(g)]
            } else {
                if prefix_edges.contains(&g) {
                    continue;
                }
                h.edge(g)
                    .iter()
                    .filter(|&&v| m.on_cycle[v])
                    .map(|&v| Anchor::Vertex(v))
                    .collect()
            };
            for b in anchors {
                let cycle = if b == root {
                    // the path prefix and g close a cycle by themselves
                    let mut vertices = vec![verts[0]];
                    vertices.extend_from_slice(&verts[1..=j]);
                    let mut es = prefix_edges.to_vec();
                    es.push(g);
                    BergeCycle::new(vertices, es)
                } else {
                    let Ok(seg) = long_segment(&l.cycle, root, b) else {
                        continue;
                    };
                    let mut vertices = seg.vertices;
                    let mut es = seg.edges;
                    vertices.extend_from_slice(&back_vertices);
                    es.push(g);
                    es.extend_from_slice(&back_edges);
                    BergeCycle::new(vertices, es)
                };
                if cycle.len() <= c {
                    continue;
                }
                let Ok(cand) = attach(h, &cycle) else {
                    continue;
                };
                if let Some(hit) = better(h, base, cand) {
                    return Some(hit);
                }
            }
        }
    }
    None
}

/// Replaces a cycle edge by another edge through the same two cycle
/// vertices, or a path edge by a free edge through the same two path
/// vertices.
fn edge_swap(
    h: &Hypergraph,
    l: &Lollipop,
    base: LollipopScore,
) -> Option<(Lollipop, LollipopScore)> {
    let m = Marks::new(h, l);
    let c = l.cycle.len();
    let f1 = l.tail.edges().first().copied();
    for i in 0..c {
        let (a, b) = (l.cycle.vertices[i], l.cycle.vertices[(i + 1) % c]);
        let old = l.cycle.edges[i];
        for &g in h.incident_edges(a) {
            if m.cycle_edge[g] || !h.contains(g, b) {
                continue;
            }
            let mut cycle = l.cycle.clone();
            cycle.edges[i] = g;
            let tail = match &l.tail {
                Tail::O(p) if m.tail_edge[g] => {
                    // only f_1 may move into the cycle; the path loses u_1
                    if Some(g) != f1 {
                        continue;
                    }
                    Tail::P(PartialBergePath::new(
                        p.edges.clone(),
                        p.vertices[1..].to_vec(),
                    ))
                }
                Tail::O(p) => Tail::O(p.clone()),
                Tail::P(_) if m.tail_edge[g] => continue,
                Tail::P(p) if Some(old) == f1 => {
                    let mut edges = p.edges.clone();
                    edges[0] = g;
                    Tail::P(PartialBergePath::new(edges, p.vertices.clone()))
                }
                Tail::P(p) => Tail::P(p.clone()),
            };
            if let Some(hit) = better(h, base, Lollipop { cycle, tail }) {
                return Some(hit);
            }
        }
    }
    let verts = l.tail.vertices();
    let edges = l.tail.edges();
    for k in 0..edges.len() {
        let (a, b) = match &l.tail {
            Tail::O(_) => (verts[k], verts[k + 1]),
            Tail::P(_) if k == 0 => continue,
            Tail::P(_) => (verts[k - 1], verts[k]),
        };
        for &g in h.incident_edges(a) {
            if !m.free(g) || !h.contains(g, b) {
                continue;
            }
            let mut es = edges.to_vec();
            es[k] = g;
            if let Some(hit) = better(h, base, with_tail(l, verts.to_vec(), es)) {
                return Some(hit);
            }
        }
    }
    None
}

/// Path rewirings that keep the off-cycle vertex set: if the tip lies in
/// `f_m` (or a free edge holds the tip and `u_m`), walk `u_m`, then the tip,
/// then back down to `u_{m+1}`.
fn rewirings(h: &Hypergraph, l: &Lollipop) -> Vec<Lollipop> {
    let m = Marks::new(h, l);
    let verts = l.tail.vertices();
    let edges = l.tail.edges();
    let ell = edges.len();
    let tip = l.tail.tip();
    let off = match l.tail {
        Tail::O(_) => 1,
        Tail::P(_) => 0,
    };
    let mut out = Vec::new();
    for k in 0..ell.saturating_sub(1) {
        let before = &verts[..k + off];
        let rest = &verts[k + off..];
        let mut vertices = before.to_vec();
        vertices.push(tip);
        vertices.extend(rest[..rest.len() - 1].iter().rev());
        let mut swapped: Vec<EdgeId> = Vec::new();
        if h.contains(edges[k], tip) {
            swapped.push(edges[k]);
        }
        // a free edge through u_m and the tip can stand in for f_m
        if let Some(&um) = before.last() {
            for &g in h.incident_edges(tip) {
                if m.free(g) && h.contains(g, um) {
                    swapped.push(g);
                }
            }
        }
        for g in swapped {
            let mut es = edges[..k].to_vec();
            es.push(g);
            es.extend(edges[k + 1..].iter().rev());
            out.push(with_tail(l, vertices.clone(), es));
        }
    }
    out
}

fn suffix_reversal(
    h: &Hypergraph,
    l: &Lollipop,
    base: LollipopScore,
) -> Option<(Lollipop, LollipopScore)> {
    for r in rewirings(h, l) {
        if r.validate(h).is_err() {
            continue;
        }
        let r = r.normalized();
        if let Some(hit) = better(h, base, r.clone()) {
            return Some(hit);
        }
        for gen in [path_extension, cycle_splice, edge_swap] {
            if let Some(hit) = gen(h, &r, base) {
                return Some(hit);
            }
        }
    }
    None
}

/// Re-roots a partial path at a cycle vertex through a free edge at either
/// end of its vertex chain.
fn upgrade(h: &Hypergraph, l: &Lollipop, base: LollipopScore) -> Option<(Lollipop, LollipopScore)> {
    let Tail::P(p) = &l.tail else {
        return None;
    };
    let m = Marks::new(h, l);
    let first = p.vertices[0];
    let tip = p.last_vertex();
    let mut gs: Vec<EdgeId> = h
        .incident_edges(first)
        .iter()
        .chain(h.incident_edges(tip))
        .copied()
        .filter(|&g| m.free(g))
        .collect();
    gs.sort_unstable();
    gs.dedup();
    for g in gs {
        for &v in h.edge(g) {
            if !m.on_cycle[v] {
                continue;
            }
            let mut tails = Vec::new();
            if h.contains(g, first) {
                let mut vertices = vec![v];
                vertices.extend_from_slice(&p.vertices);
                let mut edges = vec![g];
                edges.extend_from_slice(&p.edges[1..]);
                tails.push(BergePath::new(vertices, edges));
            }
            if h.contains(g, tip) {
                let mut vertices = vec![v];
                vertices.extend(p.vertices.iter().rev());
                let mut edges = vec![g];
                edges.extend(p.edges[1..].iter().rev());
                tails.push(BergePath::new(vertices, edges));
            }
            for t in tails {
                if let Some(hit) = better(h, base, Lollipop::ordinary(l.cycle.clone(), t)) {
                    return Some(hit);
                }
            }
        }
    }
    None
}
