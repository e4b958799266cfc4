//! Exact longest Berge cycles and paths by branch-and-bound.
//!
//! The search walks alternating vertex/edge sequences of the incidence graph.
//! A Berge cycle of length `c` is a cycle of length `2c` there, so the longest
//! Berge cycle is the longest such alternating closed walk with distinct
//! elements.
//!
//! Pruning:
//! * the start vertex is the minimum of the cycle in the static
//!   (degree, id) order, and the first edge id is below the closing edge id;
//! * resource bound: vertices and edges still reachable from the tip through
//!   unused edges cap the final length;
//! * block bound: the rest of the walk runs from the tip to its goal, so it
//!   stays inside the blocks on the block-cut-tree path between them;
//! * alternation bound: consecutive cycle vertices share an edge, so a fixed
//!   independent set of the 2-section can fill at most every other slot;
//! * incumbent: a branch survives only if its bound beats the best so far.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::{EdgeId, Hypergraph, HypergraphError, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BergeCycle {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl BergeCycle {
    pub fn new(vertices: Vec<VertexId>, edges: Vec<EdgeId>) -> Self {
        Self { vertices, edges }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Rotates so that `vertices[k]` becomes the first vertex.
    pub fn rotate_to(&mut self, k: usize) {
        self.vertices.rotate_left(k);
        self.edges.rotate_left(k);
    }

    /// Same cycle traversed in the opposite direction, starting at the same vertex.
    pub fn reversed(&self) -> Self {
        let c = self.len();
        let mut vertices = Vec::with_capacity(c);
        let mut edges = Vec::with_capacity(c);
        for i in 0..c {
            vertices.push(self.vertices[(c - i) % c]);
            edges.push(self.edges[(2 * c - i - 1) % c]);
        }
        Self { vertices, edges }
    }

    pub fn position_of_vertex(&self, v: VertexId) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }

    pub fn position_of_edge(&self, e: EdgeId) -> Option<usize> {
        self.edges.iter().position(|&x| x == e)
    }
}

/// `vertices[0], edges[0], vertices[1], ..., edges[l-1], vertices[l]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BergePath {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl BergePath {
    pub fn new(vertices: Vec<VertexId>, edges: Vec<EdgeId>) -> Self {
        Self { vertices, edges }
    }

    /// Length is the number of edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn last_vertex(&self) -> VertexId {
        *self.vertices.last().expect("path has a vertex")
    }
}

/// `edges[0], vertices[0], edges[1], vertices[1], ..., edges[l-1], vertices[l-1]`:
/// a Berge path that begins with an edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartialBergePath {
    pub edges: Vec<EdgeId>,
    pub vertices: Vec<VertexId>,
}

impl PartialBergePath {
    pub fn new(edges: Vec<EdgeId>, vertices: Vec<VertexId>) -> Self {
        Self { edges, vertices }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn last_vertex(&self) -> VertexId {
        *self.vertices.last().expect("partial path has a vertex")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    TooShort,
    LengthMismatch,
    UnknownVertex,
    UnknownEdge,
    VerticesNotDistinct,
    EdgesNotDistinct,
    NotContained,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::TooShort => "too short",
            Rule::LengthMismatch => "vertex and edge counts disagree",
            Rule::UnknownVertex => "vertex out of range",
            Rule::UnknownEdge => "edge id out of range",
            Rule::VerticesNotDistinct => "vertices not distinct",
            Rule::EdgesNotDistinct => "edges not distinct",
            Rule::NotContained => "edge does not contain its flanking vertices",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub index: usize,
    pub rule: Rule,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "index {}: {}", self.index, self.rule)
    }
}

fn check_elements(
    h: &Hypergraph,
    vertices: &[VertexId],
    edges: &[EdgeId],
    out: &mut Vec<Violation>,
) -> bool {
    let mut ok = true;
    let mut seen_v = vec![false; h.n()];
    for (i, &v) in vertices.iter().enumerate() {
        if v >= h.n() {
            out.push(Violation {
                index: i,
                rule: Rule::UnknownVertex,
            });
            ok = false;
        } else if std::mem::replace(&mut seen_v[v], true) {
            out.push(Violation {
                index: i,
                rule: Rule::VerticesNotDistinct,
            });
        }
    }
    let mut seen_e = vec![false; h.num_edges()];
    for (i, &e) in edges.iter().enumerate() {
        if e >= h.num_edges() {
            out.push(Violation {
                index: i,
                rule: Rule::UnknownEdge,
            });
            ok = false;
        } else if std::mem::replace(&mut seen_e[e], true) {
            out.push(Violation {
                index: i,
                rule: Rule::EdgesNotDistinct,
            });
        }
    }
    ok
}

pub fn validate_cycle(h: &Hypergraph, c: &BergeCycle) -> Result<(), Vec<Violation>> {
    let mut out = Vec::new();
    let len = c.vertices.len();
    if len < 2 {
        out.push(Violation {
            index: 0,
            rule: Rule::TooShort,
        });
    }
    if c.edges.len() != len {
        out.push(Violation {
            index: len.min(c.edges.len()),
            rule: Rule::LengthMismatch,
        });
    }
    let ids_ok = check_elements(h, &c.vertices, &c.edges, &mut out);
    if ids_ok && len >= 1 && c.edges.len() == len {
        for i in 0..len {
            let e = c.edges[i];
            if !h.contains(e, c.vertices[i]) || !h.contains(e, c.vertices[(i + 1) % len]) {
                out.push(Violation {
                    index: i,
                    rule: Rule::NotContained,
                });
            }
        }
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

pub fn validate_path(h: &Hypergraph, p: &BergePath) -> Result<(), Vec<Violation>> {
    let mut out = Vec::new();
    if p.vertices.len() != p.edges.len() + 1 {
        out.push(Violation {
            index: 0,
            rule: Rule::LengthMismatch,
        });
    }
    let ids_ok = check_elements(h, &p.vertices, &p.edges, &mut out);
    if ids_ok && p.vertices.len() == p.edges.len() + 1 {
        for (i, &e) in p.edges.iter().enumerate() {
            if !h.contains(e, p.vertices[i]) || !h.contains(e, p.vertices[i + 1]) {
                out.push(Violation {
                    index: i,
                    rule: Rule::NotContained,
                });
            }
        }
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

pub fn validate_partial_path(h: &Hypergraph, p: &PartialBergePath) -> Result<(), Vec<Violation>> {
    let mut out = Vec::new();
    if p.edges.is_empty() {
        out.push(Violation {
            index: 0,
            rule: Rule::TooShort,
        });
    }
    if p.vertices.len() != p.edges.len() {
        out.push(Violation {
            index: 0,
            rule: Rule::LengthMismatch,
        });
    }
    let ids_ok = check_elements(h, &p.vertices, &p.edges, &mut out);
    if ids_ok && !p.edges.is_empty() && p.vertices.len() == p.edges.len() {
        if !h.contains(p.edges[0], p.vertices[0]) {
            out.push(Violation {
                index: 0,
                rule: Rule::NotContained,
            });
        }
        for i in 1..p.edges.len() {
            let e = p.edges[i];
            if !h.contains(e, p.vertices[i - 1]) || !h.contains(e, p.vertices[i]) {
                out.push(Violation {
                    index: i,
                    rule: Rule::NotContained,
                });
            }
        }
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchOptions {
    /// Maximum number of search-tree nodes; `None` is unlimited.
    pub node_budget: Option<u64>,
    /// Stop as soon as a solution of at least this length is found.
    pub target: Option<usize>,
}

impl SearchOptions {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn with_budget(budget: u64) -> Self {
        Self {
            node_budget: Some(budget),
            target: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError<T: fmt::Debug> {
    #[error("search budget of {budget} nodes exhausted")]
    BudgetExhausted { budget: u64, incumbent: Option<T> },
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error("path endpoints must differ")]
    SameEndpoints,
}

impl<T: fmt::Debug> SearchError<T> {
    pub fn incumbent(&self) -> Option<&T> {
        match self {
            SearchError::BudgetExhausted { incumbent, .. } => incumbent.as_ref(),
            _ => None,
        }
    }
}

/// Static branching order: ascending degree, ties by id.
pub fn static_order(h: &Hypergraph) -> Vec<VertexId> {
    let deg = h.degrees();
    let mut order: Vec<VertexId> = (0..h.n()).collect();
    order.sort_by_key(|&v| (deg[v], v));
    order
}

/// Greedy maximal independent set of the 2-section, low degree first.
fn shadow_independent_set(h: &Hypergraph) -> Vec<bool> {
    let n = h.n();
    let mut adj = vec![vec![false; n]; n];
    for e in h.edges() {
        for &a in e {
            for &b in e {
                adj[a][b] |= a != b;
            }
        }
    }
    let mut order: Vec<VertexId> = (0..n).collect();
    order.sort_by_key(|&v| (adj[v].iter().filter(|&&x| x).count(), v));
    let mut indep = vec![false; n];
    for v in order {
        if !(0..n).any(|u| indep[u] && adj[u][v]) {
            indep[v] = true;
        }
    }
    indep
}

/// Most vertices a walk can add between two fixed ends when `ends` of them
/// lie in the independent set and `inner`/`outer` candidates are available
/// inside/outside it.
fn alternation_cap(inner: usize, outer: usize, ends: usize) -> usize {
    inner.min((outer + 3).saturating_sub(2 * ends)) + outer
}

struct Walker<'a> {
    h: &'a Hypergraph,
    indep: Vec<bool>,
    allowed: Vec<bool>,
    used_v: Vec<bool>,
    used_e: Vec<bool>,
    path_v: Vec<VertexId>,
    path_e: Vec<EdgeId>,
    // scratch for the reachability bound
    stamp: u32,
    seen_v: Vec<u32>,
    seen_e: Vec<u32>,
    queue: Vec<VertexId>,
    blocks: BlockScratch,
    nodes: u64,
    budget: Option<u64>,
    aborted: bool,
}

/// Scratch for Tarjan's block decomposition over incidence-graph nodes
/// (vertex `v` is node `v`, edge `e` is node `n + e`).
struct BlockScratch {
    stamp: u32,
    mark: Vec<u32>,
    disc: Vec<u32>,
    low: Vec<u32>,
    parent: Vec<usize>,
    owner: Vec<usize>,
    on_goal_path: Vec<u32>,
    calls: Vec<(usize, usize)>,
    stack: Vec<usize>,
}

impl BlockScratch {
    fn new(nodes: usize) -> Self {
        Self {
            stamp: 0,
            mark: vec![0; nodes],
            disc: vec![0; nodes],
            low: vec![0; nodes],
            parent: vec![0; nodes],
            owner: vec![0; nodes],
            on_goal_path: vec![0; nodes],
            calls: Vec::new(),
            stack: Vec::new(),
        }
    }
}

struct Reach {
    vertices: usize,
    /// Those of `vertices` in the independent set.
    indep: usize,
    edges: usize,
    goal: bool,
}

impl<'a> Walker<'a> {
    fn new(h: &'a Hypergraph, budget: Option<u64>) -> Self {
        Self {
            h,
            indep: shadow_independent_set(h),
            allowed: vec![true; h.n()],
            used_v: vec![false; h.n()],
            used_e: vec![false; h.num_edges()],
            path_v: Vec::new(),
            path_e: Vec::new(),
            stamp: 0,
            seen_v: vec![0; h.n()],
            seen_e: vec![0; h.num_edges()],
            queue: Vec::new(),
            blocks: BlockScratch::new(h.n() + h.num_edges()),
            nodes: 0,
            budget,
            aborted: false,
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if let Some(b) = self.budget {
            if self.nodes > b {
                self.aborted = true;
            }
        }
        !self.aborted
    }

    /// Unused allowed vertices and unused edges reachable from the tip, and
    /// whether `goal` lies in one of those edges.
    fn reach(&mut self, goal: VertexId) -> Reach {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.seen_v.fill(0);
            self.seen_e.fill(0);
            self.stamp = 1;
        }
        let stamp = self.stamp;
        let tip = *self.path_v.last().expect("non-empty walk");
        let mut res = Reach {
            vertices: 0,
            indep: 0,
            edges: 0,
            goal: false,
        };
        self.queue.clear();
        self.queue.push(tip);
        self.seen_v[tip] = stamp;
        let mut head = 0;
        while head < self.queue.len() {
            let x = self.queue[head];
            head += 1;
            for &e in self.h.incident_edges(x) {
                if self.used_e[e] || self.seen_e[e] == stamp {
                    continue;
                }
                self.seen_e[e] = stamp;
                res.edges += 1;
                for &y in self.h.edge(e) {
                    if y == goal {
                        res.goal = true;
                    }
                    if self.allowed[y] && !self.used_v[y] && self.seen_v[y] != stamp {
                        self.seen_v[y] = stamp;
                        res.vertices += 1;
                        res.indep += self.indep[y] as usize;
                        self.queue.push(y);
                    }
                }
            }
        }
        res
    }

    /// Like [`Walker::reach`], but counting only vertices and edges in the
    /// blocks between the tip and `goal`; `None` if `goal` is cut off.
    fn block_reach(&mut self, goal: VertexId) -> Option<Reach> {
        let h = self.h;
        let n = h.n();
        let tip = *self.path_v.last().expect("non-empty walk");
        let b = &mut self.blocks;
        b.stamp = b.stamp.wrapping_add(1);
        if b.stamp == 0 {
            b.mark.fill(0);
            b.on_goal_path.fill(0);
            b.stamp = 1;
        }
        let stamp = b.stamp;
        let eligible = |x: usize| {
            if x >= n {
                !self.used_e[x - n]
            } else {
                x == goal || x == tip || (self.allowed[x] && !self.used_v[x])
            }
        };
        let mut timer = 0u32;
        b.calls.clear();
        b.stack.clear();
        b.mark[tip] = stamp;
        b.disc[tip] = timer;
        b.low[tip] = timer;
        b.parent[tip] = usize::MAX;
        b.calls.push((tip, 0));
        let mut next_block = 0usize;
        while let Some(&mut (x, ref mut i)) = b.calls.last_mut() {
            let neighbors: &[usize] = if x < n {
                h.incident_edges(x)
            } else {
                h.edge(x - n)
            };
            if *i < neighbors.len() {
                let raw = neighbors[*i];
                *i += 1;
                // vertices list edge ids and edges list vertex ids
                let y = if x < n { n + raw } else { raw };
                if !eligible(y) {
                    continue;
                }
                if b.mark[y] != stamp {
                    timer += 1;
                    b.mark[y] = stamp;
                    b.disc[y] = timer;
                    b.low[y] = timer;
                    b.parent[y] = x;
                    b.stack.push(y);
                    b.calls.push((y, 0));
                } else if y != b.parent[x] {
                    b.low[x] = b.low[x].min(b.disc[y]);
                }
            } else {
                b.calls.pop();
                if let Some(&(p, _)) = b.calls.last() {
                    b.low[p] = b.low[p].min(b.low[x]);
                    if b.low[x] >= b.disc[p] {
                        while let Some(z) = b.stack.pop() {
                            b.owner[z] = next_block;
                            if z == x {
                                break;
                            }
                        }
                        next_block += 1;
                    }
                }
            }
        }
        if b.mark[goal] != stamp || goal == tip {
            return None;
        }
        let mut c = goal;
        while c != tip {
            b.on_goal_path[b.owner[c]] = stamp;
            c = b.parent[c];
        }
        let mut res = Reach {
            vertices: 0,
            indep: 0,
            edges: 0,
            goal: true,
        };
        for x in 0..n + h.num_edges() {
            if x == tip || b.mark[x] != stamp || b.on_goal_path[b.owner[x]] != stamp {
                continue;
            }
            if x >= n {
                res.edges += 1;
            } else if !self.used_v[x] {
                res.vertices += 1;
                res.indep += self.indep[x] as usize;
            }
        }
        Some(res)
    }

    fn push(&mut self, e: EdgeId, v: VertexId) {
        self.used_e[e] = true;
        self.used_v[v] = true;
        self.path_e.push(e);
        self.path_v.push(v);
    }

    fn pop(&mut self) {
        let v = self.path_v.pop().expect("pop on empty walk");
        let e = self.path_e.pop().expect("pop on empty walk");
        self.used_v[v] = false;
        self.used_e[e] = false;
    }
}

struct CycleSearch<'a> {
    w: Walker<'a>,
    rank: Vec<usize>,
    start: VertexId,
    best: Option<BergeCycle>,
    best_len: usize,
    stop_at: usize,
    #[cfg(test)]
    audit: bool,
}

impl<'a> CycleSearch<'a> {
    fn bound(&mut self) -> Option<usize> {
        let t = self.w.path_v.len();
        let reach = if t == 1 {
            Some(self.w.reach(self.start)).filter(|r| r.goal)
        } else {
            self.w.block_reach(self.start)
        }?;
        let tip = *self.w.path_v.last().unwrap();
        let outer = reach.vertices - reach.indep;
        let alternating = if t == 1 {
            let s = self.w.indep[self.start] as usize;
            reach.indep.min((outer + 1).saturating_sub(2 * s)) + outer
        } else {
            let ends = self.w.indep[self.start] as usize + self.w.indep[tip] as usize;
            alternation_cap(reach.indep, outer, ends)
        };
        Some(
            (t + reach.vertices)
                .min(t - 1 + reach.edges)
                .min(t + alternating),
        )
    }

    fn closable(&self) -> bool {
        let first = self.w.path_e.first().copied();
        self.w
            .h
            .incident_edges(self.start)
            .iter()
            .any(|&e| !self.w.used_e[e] && first.is_none_or(|f| e > f))
    }

    fn dfs(&mut self) {
        if !self.w.tick() || self.best_len >= self.stop_at {
            return;
        }
        if !self.closable() {
            return;
        }
        let bound = match self.bound() {
            Some(b) => b,
            None => return,
        };
        #[cfg(test)]
        if self.audit {
            let exact = oracle::best_cycle_completion(&self.w, self.start);
            assert!(
                bound >= exact,
                "bound {bound} below best completion {exact}"
            );
        }
        if bound <= self.best_len {
            return;
        }
        let h = self.w.h;
        let tip = *self.w.path_v.last().unwrap();
        let t = self.w.path_v.len();
        for &e in h.incident_edges(tip) {
            if self.w.used_e[e] {
                continue;
            }
            if t >= 2 && e > self.w.path_e[0] && h.contains(e, self.start) && t > self.best_len {
                let mut edges = self.w.path_e.clone();
                edges.push(e);
                self.best = Some(BergeCycle::new(self.w.path_v.clone(), edges));
                self.best_len = t;
                if self.best_len >= self.stop_at {
                    return;
                }
            }
            let mut next: Vec<VertexId> = h
                .edge(e)
                .iter()
                .copied()
                .filter(|&v| self.w.allowed[v] && !self.w.used_v[v])
                .collect();
            next.sort_by_key(|&v| self.rank[v]);
            for v in next {
                self.w.push(e, v);
                self.dfs();
                self.w.pop();
                if self.w.aborted || self.best_len >= self.stop_at {
                    return;
                }
            }
        }
    }
}

fn run_cycle_search(
    h: &Hypergraph,
    opts: SearchOptions,
    #[cfg(test)] audit: bool,
) -> Result<Option<BergeCycle>, SearchError<BergeCycle>> {
    let max_possible = h.n().min(h.num_edges());
    let stop_at = opts.target.map_or(max_possible, |t| t.min(max_possible));
    let order = static_order(h);
    let mut rank = vec![0; h.n()];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let mut search = CycleSearch {
        w: Walker::new(h, opts.node_budget),
        rank,
        start: 0,
        best: None,
        best_len: 0,
        stop_at: stop_at.max(2),
        #[cfg(test)]
        audit,
    };
    for (i, &start) in order.iter().enumerate() {
        // cycles whose minimum is `start` use only the n - i vertices from here on
        if h.n() - i <= search.best_len || search.best_len >= search.stop_at {
            break;
        }
        for v in 0..h.n() {
            search.w.allowed[v] = search.rank[v] > i;
        }
        search.start = start;
        search.w.used_v[start] = true;
        search.w.path_v.push(start);
        search.dfs();
        search.w.path_v.pop();
        search.w.used_v[start] = false;
        if search.w.aborted {
            break;
        }
    }
    if let Some(c) = &search.best {
        if let Err(v) = validate_cycle(h, c) {
            panic!("search produced an invalid cycle {c:?}: {v:?}");
        }
    }
    log::debug!(
        "cycle search: {} nodes, best {}",
        search.w.nodes,
        search.best_len
    );
    if search.w.aborted {
        return Err(SearchError::BudgetExhausted {
            budget: opts.node_budget.unwrap_or(0),
            incumbent: search.best,
        });
    }
    Ok(search.best)
}

/// A longest Berge cycle, or `None` when `h` has none.
///
/// With `opts.target` set the search stops at the first cycle of that length,
/// which then need not be longest.
pub fn longest_berge_cycle(
    h: &Hypergraph,
    opts: SearchOptions,
) -> Result<Option<BergeCycle>, SearchError<BergeCycle>> {
    run_cycle_search(
        h,
        opts,
        #[cfg(test)]
        false,
    )
}

pub fn circumference(h: &Hypergraph) -> usize {
    circumference_with(h, SearchOptions::unlimited()).expect("unlimited search cannot run out")
}

pub fn circumference_with(
    h: &Hypergraph,
    opts: SearchOptions,
) -> Result<usize, SearchError<BergeCycle>> {
    longest_berge_cycle(h, opts).map(|c| c.map_or(0, |c| c.len()))
}

struct PathSearch<'a> {
    w: Walker<'a>,
    rank: Vec<usize>,
    target: VertexId,
    best: Option<BergePath>,
    best_len: Option<usize>,
    stop_at: usize,
}

impl<'a> PathSearch<'a> {
    fn dfs(&mut self) {
        if !self.w.tick() || self.done() {
            return;
        }
        let t = self.w.path_v.len();
        let Some(reach) = self.w.block_reach(self.target) else {
            return;
        };
        let tip = *self.w.path_v.last().unwrap();
        let target_in = self.w.indep[self.target] as usize;
        let ends = self.w.indep[tip] as usize + target_in;
        // the target is among the reached vertices
        let alternating = 1 + alternation_cap(
            reach.indep - target_in,
            reach.vertices - reach.indep - (1 - target_in),
            ends,
        );
        let bound = t - 1 + reach.vertices.min(reach.edges).min(alternating);
        if self.best_len.is_some_and(|b| bound <= b) {
            return;
        }
        let h = self.w.h;
        let tip = *self.w.path_v.last().unwrap();
        for &e in h.incident_edges(tip) {
            if self.w.used_e[e] {
                continue;
            }
            if h.contains(e, self.target) && self.best_len.is_none_or(|b| t > b) {
                let mut vertices = self.w.path_v.clone();
                vertices.push(self.target);
                let mut edges = self.w.path_e.clone();
                edges.push(e);
                self.best = Some(BergePath::new(vertices, edges));
                self.best_len = Some(t);
                if self.done() {
                    return;
                }
            }
            let mut next: Vec<VertexId> = h
                .edge(e)
                .iter()
                .copied()
                .filter(|&v| v != self.target && !self.w.used_v[v])
                .collect();
            next.sort_by_key(|&v| self.rank[v]);
            for v in next {
                self.w.push(e, v);
                self.dfs();
                self.w.pop();
                if self.w.aborted || self.done() {
                    return;
                }
            }
        }
    }

    fn done(&self) -> bool {
        self.best_len.is_some_and(|b| b >= self.stop_at)
    }
}

/// A longest Berge path from `u` to `v` (length = number of edges).
pub fn longest_berge_path_between(
    h: &Hypergraph,
    u: VertexId,
    v: VertexId,
    opts: SearchOptions,
) -> Result<Option<BergePath>, SearchError<BergePath>> {
    h.degree(u)?;
    h.degree(v)?;
    if u == v {
        return Err(SearchError::SameEndpoints);
    }
    let max_possible = (h.n() - 1).min(h.num_edges());
    let stop_at = opts.target.map_or(max_possible, |t| t.min(max_possible));
    let order = static_order(h);
    let mut rank = vec![0; h.n()];
    for (i, &x) in order.iter().enumerate() {
        rank[x] = i;
    }
    let mut search = PathSearch {
        w: Walker::new(h, opts.node_budget),
        rank,
        target: v,
        best: None,
        best_len: None,
        stop_at,
    };
    search.w.used_v[u] = true;
    search.w.path_v.push(u);
    search.dfs();
    if let Some(p) = &search.best {
        if let Err(viol) = validate_path(h, p) {
            panic!("search produced an invalid path {p:?}: {viol:?}");
        }
    }
    if search.w.aborted {
        return Err(SearchError::BudgetExhausted {
            budget: opts.node_budget.unwrap_or(0),
            incumbent: search.best,
        });
    }
    Ok(search.best)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codiameter {
    pub value: usize,
    /// A pair attaining the minimum, with its longest path (if connected).
    pub witness: Option<(VertexId, VertexId, Option<BergePath>)>,
}

/// Minimum over vertex pairs of the longest Berge path length; 0 when some
/// pair is disconnected.
pub fn codiameter(h: &Hypergraph) -> usize {
    codiameter_with(h, SearchOptions::unlimited())
        .expect("unlimited search cannot run out")
        .value
}

/// Codiameter with a per-pair node budget. Each pair only needs to be searched
/// until it reaches the current minimum. With a target `t` the result is
/// `min(t, codiameter)`.
pub fn codiameter_with(
    h: &Hypergraph,
    opts: SearchOptions,
) -> Result<Codiameter, SearchError<BergePath>> {
    let n = h.n();
    let comp = components(h);
    let cap = (n - 1).min(h.num_edges());
    let mut best = Codiameter {
        value: opts.target.map_or(cap, |t| t.min(cap)),
        witness: None,
    };
    for u in 0..n {
        for v in u + 1..n {
            if comp[u] != comp[v] {
                return Ok(Codiameter {
                    value: 0,
                    witness: Some((u, v, None)),
                });
            }
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            let pair_opts = SearchOptions {
                node_budget: opts.node_budget,
                target: Some(best.value),
            };
            let path = longest_berge_path_between(h, u, v, pair_opts)?;
            let len = path.as_ref().map_or(0, BergePath::len);
            if len < best.value || best.witness.is_none() {
                best = Codiameter {
                    value: len.min(best.value),
                    witness: Some((u, v, path)),
                };
            }
            if best.value == 0 {
                return Ok(best);
            }
        }
    }
    Ok(best)
}

/// Component id of every vertex (isolated vertices get their own).
pub fn components(h: &Hypergraph) -> Vec<usize> {
    let mut comp = vec![usize::MAX; h.n()];
    let mut next = 0;
    for s in 0..h.n() {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = next;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &e in h.incident_edges(x) {
                for &y in h.edge(e) {
                    if comp[y] == usize::MAX {
                        comp[y] = next;
                        stack.push(y);
                    }
                }
            }
        }
        next += 1;
    }
    comp
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_runiform, h1, h2, h3};

    fn audited(h: &Hypergraph) -> usize {
        run_cycle_search(h, SearchOptions::unlimited(), true)
            .unwrap()
            .map_or(0, |c| c.len())
    }

    #[test]
    fn two_cycle_is_valid() {
        let h = Hypergraph::new(4, 3, [[0, 1, 2], [0, 1, 3]]).unwrap();
        let c = BergeCycle::new(vec![0, 1], vec![0, 1]);
        assert_eq!(validate_cycle(&h, &c), Ok(()));
        assert_eq!(circumference(&h), 2);
    }

    #[test]
    fn repeated_edge_is_reported() {
        let h = Hypergraph::new(4, 3, [[0, 1, 2], [0, 1, 3]]).unwrap();
        let c = BergeCycle::new(vec![0, 1], vec![0, 0]);
        let err = validate_cycle(&h, &c).unwrap_err();
        assert!(err
            .iter()
            .any(|v| v.rule == Rule::EdgesNotDistinct && v.index == 1));
        assert_eq!(Rule::EdgesNotDistinct.to_string(), "edges not distinct");
    }

    #[test]
    fn containment_violation_names_index() {
        let h = Hypergraph::new(5, 3, [[0, 1, 2], [2, 3, 4], [0, 3, 4]]).unwrap();
        let c = BergeCycle::new(vec![0, 2, 4], vec![0, 1, 2]);
        assert_eq!(validate_cycle(&h, &c), Ok(()));
        let bad = BergeCycle::new(vec![0, 1, 4], vec![0, 1, 2]);
        let err = validate_cycle(&h, &bad).unwrap_err();
        assert_eq!(
            err,
            vec![Violation {
                index: 1,
                rule: Rule::NotContained
            }]
        );
    }

    #[test]
    fn reversal_keeps_validity() {
        let h = complete_runiform(5, 3).unwrap();
        let c = longest_berge_cycle(&h, SearchOptions::unlimited())
            .unwrap()
            .unwrap();
        let r = c.reversed();
        assert_eq!(r.vertices[0], c.vertices[0]);
        assert_eq!(validate_cycle(&h, &r), Ok(()));
    }

    #[test]
    fn single_edge_has_no_cycle() {
        let h = Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        assert_eq!(
            longest_berge_cycle(&h, SearchOptions::unlimited()).unwrap(),
            None
        );
        assert_eq!(circumference(&h), 0);
    }

    #[test]
    fn small_circumferences() {
        assert_eq!(audited(&complete_runiform(5, 3).unwrap()), 5);
        assert_eq!(audited(&complete_runiform(4, 3).unwrap()), 4);
        assert_eq!(audited(&h3(3, 2).unwrap()), 4);
        assert_eq!(audited(&h3(3, 3).unwrap()), 4);
        // a triangle as a 2-graph
        let tri = Hypergraph::new(3, 2, [[0, 1], [1, 2], [0, 2]]).unwrap();
        assert_eq!(audited(&tri), 3);
    }

    #[test]
    fn sharpness_circumferences() {
        assert_eq!(circumference(&h1(5, 3, 3).unwrap()), 8);
        assert_eq!(circumference(&h2(5, 3, 9).unwrap()), 8);
    }

    #[test]
    fn budget_exhaustion_reports_incumbent() {
        let h = h1(5, 3, 3).unwrap();
        let err = longest_berge_cycle(&h, SearchOptions::with_budget(20)).unwrap_err();
        match err {
            SearchError::BudgetExhausted { budget, incumbent } => {
                assert_eq!(budget, 20);
                if let Some(c) = incumbent {
                    assert_eq!(validate_cycle(&h, &c), Ok(()));
                }
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn target_stops_early() {
        let h = complete_runiform(6, 3).unwrap();
        let c = longest_berge_cycle(
            &h,
            SearchOptions {
                node_budget: None,
                target: Some(3),
            },
        )
        .unwrap()
        .unwrap();
        assert!(c.len() >= 3);
    }

    #[test]
    fn paths() {
        let h = Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        let p = longest_berge_path_between(&h, 0, 1, SearchOptions::unlimited())
            .unwrap()
            .unwrap();
        assert_eq!(p.len(), 1);
        let k5 = complete_runiform(5, 3).unwrap();
        let p = longest_berge_path_between(&k5, 1, 3, SearchOptions::unlimited())
            .unwrap()
            .unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p.vertices.first(), Some(&1));
        assert_eq!(p.last_vertex(), 3);
        assert!(matches!(
            longest_berge_path_between(&k5, 1, 1, SearchOptions::unlimited()),
            Err(SearchError::SameEndpoints)
        ));
        assert!(longest_berge_path_between(&k5, 1, 9, SearchOptions::unlimited()).is_err());
    }

    #[test]
    fn disconnected_pair_has_no_path() {
        let h = Hypergraph::new(6, 3, [[0, 1, 2], [3, 4, 5]]).unwrap();
        assert_eq!(
            longest_berge_path_between(&h, 0, 4, SearchOptions::unlimited()).unwrap(),
            None
        );
        assert_eq!(codiameter(&h), 0);
    }

    #[test]
    fn codiameters() {
        assert_eq!(codiameter(&Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap()), 1);
        assert_eq!(codiameter(&complete_runiform(5, 3).unwrap()), 4);
        let h = h1(5, 3, 3).unwrap();
        let p = longest_berge_path_between(&h, 0, 1, SearchOptions::unlimited())
            .unwrap()
            .unwrap();
        assert_eq!(p.len(), 4);
    }

    #[test]
    fn partial_path_validation() {
        let h = Hypergraph::new(5, 3, [[0, 1, 2], [2, 3, 4]]).unwrap();
        let p = PartialBergePath::new(vec![0, 1], vec![2, 3]);
        assert_eq!(validate_partial_path(&h, &p), Ok(()));
        let bad = PartialBergePath::new(vec![1, 0], vec![3, 2]);
        assert!(validate_partial_path(&h, &bad).is_err());
    }
}
