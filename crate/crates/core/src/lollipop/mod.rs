//! Lollipops: a Berge cycle with a Berge path hanging off it.
//!
//! An o-lollipop's path starts at a cycle vertex and shares nothing else with
//! the cycle. A p-lollipop's path starts with a cycle edge and shares no
//! vertex with the cycle. Lollipops are ranked lexicographically by cycle
//! length, path length, crossings, kind and contained path edges; the
//! improvement moves in [`improve`] climb that order.

mod aligned;
mod grow;
mod independent;
mod moves;
mod segment;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::{EdgeId, Hypergraph, VertexId};
use crate::search::{
    validate_cycle, validate_partial_path, validate_path, BergeCycle, BergePath, PartialBergePath,
};

pub use aligned::{
    aligned_disjoint_paths, check_aligned_paths, is_aligned, is_graph_path, AlignedPaths,
};
pub use grow::{attach, default_seed, grow_long_cycle, GrowOutcome, MAX_MOVES};
pub use independent::{independent_set_bound, tight_condition_holds, IndependentSetError};
pub use moves::{improve, Move, Step};
pub use segment::{long_segment, segment_guarantee, segments, Anchor};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LollipopError {
    #[error("invalid lollipop: {0}")]
    InvalidLollipop(String),
    #[error("anchor {0:?} is not on the cycle")]
    AnchorNotOnCycle(Anchor),
    #[error("segment anchors must differ")]
    SameAnchor,
    #[error("hypergraph has no Berge cycle")]
    NoCycle,
    #[error("not 2-connected")]
    NotTwoConnected,
    #[error("seed is not a Berge cycle of the hypergraph")]
    InvalidSeed,
    #[error("no fixpoint after {0} moves")]
    MoveLimit(usize),
    #[error("node {0} is not on the path")]
    NodeNotOnPath(usize),
    #[error("not a simple path of the graph")]
    InvalidGraphPath,
    #[error("target node is the path's far end")]
    TargetIsPathEnd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    O,
    P,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::O => "o",
            Kind::P => "p",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Tail {
    /// `u_1, f_1, ..., f_l, u_{l+1}` with `u_1` on the cycle.
    O(BergePath),
    /// `f_1, u_2, ..., f_l, u_{l+1}` with `f_1` a cycle edge.
    P(PartialBergePath),
}

impl Tail {
    pub fn kind(&self) -> Kind {
        match self {
            Tail::O(_) => Kind::O,
            Tail::P(_) => Kind::P,
        }
    }

    pub fn edges(&self) -> &[EdgeId] {
        match self {
            Tail::O(p) => &p.edges,
            Tail::P(p) => &p.edges,
        }
    }

    /// All path vertices, `u_1` included for o-tails.
    pub fn vertices(&self) -> &[VertexId] {
        match self {
            Tail::O(p) => &p.vertices,
            Tail::P(p) => &p.vertices,
        }
    }

    /// Path vertices off the cycle: `u_2, ..., u_{l+1}`.
    pub fn off_cycle(&self) -> &[VertexId] {
        match self {
            Tail::O(p) => &p.vertices[1..],
            Tail::P(p) => &p.vertices,
        }
    }

    pub fn tip(&self) -> VertexId {
        *self.vertices().last().expect("tail has a vertex")
    }

    pub fn len(&self) -> usize {
        self.edges().len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges().is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Lollipop {
    pub cycle: BergeCycle,
    pub tail: Tail,
}

/// Lexicographic score; larger is better.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LollipopScore {
    pub c_len: usize,
    pub p_len: usize,
    pub cross: usize,
    pub kind_rank: usize,
    pub contained: usize,
}

impl fmt::Display for LollipopScore {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{},{})",
            self.c_len, self.p_len, self.cross, self.kind_rank, self.contained
        )
    }
}

/// `H'` drops cycle and path edges; `H''` puts `f_1` back for o-lollipops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedEdgeSets {
    pub h_prime: BTreeSet<EdgeId>,
    pub h_dprime: BTreeSet<EdgeId>,
}

impl Lollipop {
    pub fn ordinary(cycle: BergeCycle, path: BergePath) -> Self {
        Self {
            cycle,
            tail: Tail::O(path),
        }
    }

    pub fn partial(cycle: BergeCycle, path: PartialBergePath) -> Self {
        Self {
            cycle,
            tail: Tail::P(path),
        }
    }

    pub fn kind(&self) -> Kind {
        self.tail.kind()
    }

    /// Checks the cycle, the path and how they meet.
    pub fn validate(&self, h: &Hypergraph) -> Result<(), LollipopError> {
        let bad = |msg: String| Err(LollipopError::InvalidLollipop(msg));
        if self.cycle.len() < 2 {
            return bad("cycle shorter than 2".into());
        }
        if let Err(v) = validate_cycle(h, &self.cycle) {
            return bad(format!("cycle: {}", v[0]));
        }
        let on_cycle = |v: &VertexId| self.cycle.vertices.contains(v);
        let cycle_edge = |e: &EdgeId| self.cycle.edges.contains(e);
        match &self.tail {
            Tail::O(p) => {
                if let Err(v) = validate_path(h, p) {
                    return bad(format!("path: {}", v[0]));
                }
                if !on_cycle(&p.vertices[0]) {
                    return bad("o-path does not start on the cycle".into());
                }
                if p.vertices[1..].iter().any(on_cycle) {
                    return bad("o-path meets the cycle in more than one vertex".into());
                }
                if p.edges.iter().any(cycle_edge) {
                    return bad("o-path uses a cycle edge".into());
                }
            }
            Tail::P(p) => {
                if p.edges.is_empty() {
                    return bad("partial path is empty".into());
                }
                if let Err(v) = validate_partial_path(h, p) {
                    return bad(format!("path: {}", v[0]));
                }
                if !cycle_edge(&p.edges[0]) {
                    return bad("partial path does not start with a cycle edge".into());
                }
                if p.edges[1..].iter().any(cycle_edge) {
                    return bad("partial path uses more than one cycle edge".into());
                }
                if p.vertices.iter().any(on_cycle) {
                    return bad("partial path meets the cycle in a vertex".into());
                }
            }
        }
        Ok(())
    }

    /// Rotates the cycle so that `u_1 = v_c` (o) or `f_1 = e_c` (p).
    pub fn normalize(&mut self) {
        let c = self.cycle.len();
        let k = match &self.tail {
            Tail::O(p) => self
                .cycle
                .position_of_vertex(p.vertices[0])
                .map(|i| (i + 1) % c),
            Tail::P(p) => self.cycle.position_of_edge(p.edges[0]).map(|i| (i + 1) % c),
        };
        if let Some(k) = k {
            self.cycle.rotate_to(k);
        }
    }

    pub fn normalized(mut self) -> Self {
        self.normalize();
        self
    }

    pub fn score(&self, h: &Hypergraph) -> Result<LollipopScore, LollipopError> {
        self.validate(h)?;
        Ok(self.raw_score(h))
    }

    pub(crate) fn raw_score(&self, h: &Hypergraph) -> LollipopScore {
        let off = self.tail.off_cycle();
        let cross = self
            .cycle
            .edges
            .iter()
            .map(|&e| off.iter().filter(|&&u| h.contains(e, u)).count())
            .sum();
        let contained = self
            .tail
            .edges()
            .iter()
            .filter(|e| !self.cycle.edges.contains(e))
            .filter(|&&e| h.edge(e).iter().all(|v| off.contains(v)))
            .count();
        LollipopScore {
            c_len: self.cycle.len(),
            p_len: self.tail.len(),
            cross,
            kind_rank: match self.kind() {
                Kind::O => 1,
                Kind::P => 0,
            },
            contained,
        }
    }

    pub fn reduced_edge_sets(&self, h: &Hypergraph) -> ReducedEdgeSets {
        let h_prime: BTreeSet<EdgeId> = (0..h.num_edges())
            .filter(|e| !self.cycle.edges.contains(e) && !self.tail.edges().contains(e))
            .collect();
        let mut h_dprime = h_prime.clone();
        if let Tail::O(p) = &self.tail {
            if let Some(&f1) = p.edges.first() {
                h_dprime.insert(f1);
            }
        }
        ReducedEdgeSets { h_prime, h_dprime }
    }

    /// Whether `self` is strictly better than `other`.
    pub fn is_better(&self, h: &Hypergraph, other: &Lollipop) -> Result<bool, LollipopError> {
        Ok(self.score(h)? > other.score(h)?)
    }
}
