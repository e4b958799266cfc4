//! Iterated improvement from a seed cycle.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::connectivity::is_two_connected;
use crate::hypergraph::Hypergraph;
use crate::search::{validate_cycle, BergeCycle, BergePath, PartialBergePath};

use super::moves::{improve, Move, Step};
use super::{Lollipop, LollipopError, LollipopScore};

/// Hard cap on improvement steps.
pub const MAX_MOVES: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowOutcome {
    pub cycle: BergeCycle,
    pub lollipop: Lollipop,
    pub score: LollipopScore,
    /// Moves applied, in order.
    pub trace: Vec<Move>,
}

/// Best one-edge attachment of a path to `cycle`, or an o-lollipop with an
/// empty path when nothing attaches.
pub fn attach(h: &Hypergraph, cycle: &BergeCycle) -> Result<Lollipop, LollipopError> {
    if validate_cycle(h, cycle).is_err() {
        return Err(LollipopError::InvalidSeed);
    }
    let mut on_cycle = vec![false; h.n()];
    for &v in &cycle.vertices {
        on_cycle[v] = true;
    }
    let mut best: Option<(LollipopScore, Lollipop)> = None;
    let mut offer = |l: Lollipop| {
        let l = l.normalized();
        let s = l.raw_score(h);
        if best.as_ref().is_none_or(|(b, _)| s > *b) {
            best = Some((s, l));
        }
    };
    for &v in &cycle.vertices {
        for &g in h.incident_edges(v) {
            if cycle.edges.contains(&g) {
                continue;
            }
            if let Some(&y) = h.edge(g).iter().find(|&&y| !on_cycle[y]) {
                offer(Lollipop::ordinary(
                    cycle.clone(),
                    BergePath::new(vec![v, y], vec![g]),
                ));
            }
        }
    }
    for &e in &cycle.edges {
        if let Some(&y) = h.edge(e).iter().find(|&&y| !on_cycle[y]) {
            offer(Lollipop::partial(
                cycle.clone(),
                PartialBergePath::new(vec![e], vec![y]),
            ));
        }
    }
    let l = match best {
        Some((_, l)) => l,
        None => Lollipop::ordinary(
            cycle.clone(),
            BergePath::new(vec![*cycle.vertices.last().unwrap()], vec![]),
        ),
    };
    debug_assert!(l.validate(h).is_ok());
    Ok(l)
}

/// Whether the incidence graph contains a cycle.
fn has_berge_cycle(h: &Hypergraph) -> bool {
    let g = h.incidence_graph().to_graph();
    let comps = g.components_without(&vec![false; g.node_count()]);
    g.edge_count() + comps > g.node_count()
}

/// Smallest-id pair of edges sharing two vertices; otherwise a shortest
/// cycle of the incidence graph.
pub fn default_seed(h: &Hypergraph) -> Option<BergeCycle> {
    for i in 0..h.num_edges() {
        for j in i + 1..h.num_edges() {
            let shared: Vec<usize> = h
                .edge(i)
                .iter()
                .copied()
                .filter(|&v| h.contains(j, v))
                .take(2)
                .collect();
            if shared.len() == 2 {
                return Some(BergeCycle::new(shared, vec![i, j]));
            }
        }
    }
    shortest_incidence_cycle(h)
}

fn shortest_incidence_cycle(h: &Hypergraph) -> Option<BergeCycle> {
    let g = h.incidence_graph().to_graph();
    let nodes = g.node_count();
    let mut best: Option<Vec<usize>> = None;
    for s in 0..h.n() {
        let mut dist = vec![usize::MAX; nodes];
        let mut parent = vec![usize::MAX; nodes];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w && w > u {
                    let len = dist[u] + dist[w] + 1;
                    if best.as_ref().is_some_and(|b| b.len() <= len) {
                        continue;
                    }
                    let climb = |mut x: usize| {
                        let mut out = vec![x];
                        while x != s {
                            x = parent[x];
                            out.push(x);
                        }
                        out
                    };
                    let mut a = climb(u);
                    let b = climb(w);
                    a.reverse();
                    // a: s..u, b: w..s; a simple cycle only if they meet just at s
                    let mut seen = vec![false; nodes];
                    let mut cyc = Vec::with_capacity(len);
                    let mut simple = true;
                    for &x in a.iter().chain(&b[..b.len() - 1]) {
                        simple &= !std::mem::replace(&mut seen[x], true);
                        cyc.push(x);
                    }
                    if simple {
                        best = Some(cyc);
                    }
                }
            }
        }
    }
    let cyc = best?;
    // s is a vertex node, so vertex and edge nodes alternate from index 0
    let vertices = cyc.iter().step_by(2).copied().collect();
    let edges = cyc.iter().skip(1).step_by(2).map(|&x| x - h.n()).collect();
    Some(BergeCycle::new(vertices, edges))
}

/// Runs [`improve`] to a fixpoint. A heuristic: the result is a Berge cycle,
/// not necessarily a longest one.
pub fn grow_long_cycle(
    h: &Hypergraph,
    seed: Option<&BergeCycle>,
) -> Result<GrowOutcome, LollipopError> {
    if !has_berge_cycle(h) {
        return Err(LollipopError::NoCycle);
    }
    if !is_two_connected(h) {
        return Err(LollipopError::NotTwoConnected);
    }
    let seed = match seed {
        Some(c) => {
            if validate_cycle(h, c).is_err() {
                return Err(LollipopError::InvalidSeed);
            }
            c.clone()
        }
        None => default_seed(h).ok_or(LollipopError::NoCycle)?,
    };
    let mut l = attach(h, &seed)?;
    let mut score = l.score(h)?;
    let mut trace = Vec::new();
    loop {
        if trace.len() >= MAX_MOVES {
            return Err(LollipopError::MoveLimit(MAX_MOVES));
        }
        match improve(h, &l)? {
            Step::Improved {
                lollipop,
                score: next,
                mv,
            } => {
                assert!(next > score, "score did not increase");
                lollipop
                    .validate(h)
                    .expect("improvement produced an invalid lollipop");
                log::trace!("{mv}: {score} -> {next}");
                l = lollipop;
                score = next;
                trace.push(mv);
            }
            Step::Fixpoint => break,
        }
    }
    Ok(GrowOutcome {
        cycle: l.cycle.clone(),
        lollipop: l,
        score,
        trace,
    })
}
