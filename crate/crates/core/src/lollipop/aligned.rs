//! Two paths out of `x`, disjoint apart from `x`, that respect the order of a
//! reference path.
//!
//! A path `Q` from `x` is aligned with `P` when the nodes they share appear in
//! the same relative order in both. Given an `x`–`y` path `P` in a 2-connected
//! graph and a node `z` on it, there are an `x`–`z` path and an `x`–`y` path
//! that meet only in `x` and are both aligned with `P`.
//!
//! Construction: a Menger fan from `x` to `{z, y}`, then alignment repair by
//! chord shortcuts and by splicing in segments of `P`. Whatever the repair
//! produces is checked; if the checks fail, an exhaustive aligned search
//! (fine at the graph sizes this is used for) takes over.

use crate::connectivity::disjoint_paths;
use crate::graph::{Graph, NodeId};

use super::LollipopError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlignedPaths {
    /// `x`–`z` path.
    pub to_z: Vec<NodeId>,
    /// `x`–`y` path.
    pub to_y: Vec<NodeId>,
    /// Whether the exhaustive fallback produced the answer.
    pub exhaustive: bool,
}

/// Whether `q` (starting at the same origin as `p`) is aligned with `p`.
pub fn is_aligned(q: &[NodeId], p: &[NodeId], nodes: usize) -> bool {
    if q.first() != p.first() {
        return false;
    }
    let index = path_index(p, nodes);
    let mut last = None;
    for &v in q {
        if let Some(i) = index[v] {
            if last.is_some_and(|l| i <= l) {
                return false;
            }
            last = Some(i);
        }
    }
    true
}

/// A simple path of `g`: distinct nodes, consecutive ones adjacent.
pub fn is_graph_path(g: &Graph, p: &[NodeId]) -> bool {
    let mut seen = vec![false; g.node_count()];
    for &v in p {
        if v >= g.node_count() || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    p.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

fn path_index(p: &[NodeId], nodes: usize) -> Vec<Option<usize>> {
    let mut index = vec![None; nodes];
    for (i, &v) in p.iter().enumerate() {
        index[v] = Some(i);
    }
    index
}

/// Checks both postconditions: endpoints, disjointness at `x`, alignment.
pub fn check_aligned_paths(g: &Graph, p: &[NodeId], z: NodeId, out: &AlignedPaths) -> bool {
    let n = g.node_count();
    let (x, y) = (p[0], *p.last().unwrap());
    let ends_ok = out.to_z.first() == Some(&x)
        && out.to_z.last() == Some(&z)
        && out.to_y.first() == Some(&x)
        && out.to_y.last() == Some(&y);
    if !ends_ok || !is_graph_path(g, &out.to_z) || !is_graph_path(g, &out.to_y) {
        return false;
    }
    let mut mark = vec![false; n];
    for &v in &out.to_z[1..] {
        mark[v] = true;
    }
    if out.to_y[1..].iter().any(|&v| mark[v]) {
        return false;
    }
    is_aligned(&out.to_z, p, n) && is_aligned(&out.to_y, p, n)
}

pub fn aligned_disjoint_paths(
    g: &Graph,
    p: &[NodeId],
    z: NodeId,
) -> Result<AlignedPaths, LollipopError> {
    if p.len() < 2 || !is_graph_path(g, p) {
        return Err(LollipopError::InvalidGraphPath);
    }
    let Some(zi) = p.iter().position(|&v| v == z) else {
        return Err(LollipopError::NodeNotOnPath(z));
    };
    if !g.is_biconnected() {
        return Err(LollipopError::NotTwoConnected);
    }
    let (x, y) = (p[0], *p.last().unwrap());
    if z == y {
        return Err(LollipopError::TargetIsPathEnd);
    }
    if zi == 0 {
        return Ok(AlignedPaths {
            to_z: vec![x],
            to_y: p.to_vec(),
            exhaustive: false,
        });
    }

    if let Some((to_z, to_y)) = fan(g, x, y, z) {
        let mut out = AlignedPaths {
            to_z,
            to_y,
            exhaustive: false,
        };
        repair(g, p, &mut out);
        if check_aligned_paths(g, p, z, &out) {
            return Ok(out);
        }
    }
    log::debug!("alignment repair failed, falling back to exhaustive search");
    exhaustive(g, p, z).ok_or(LollipopError::NotTwoConnected)
}

/// Two paths from `x`, to `z` and to `y`, disjoint apart from `x`.
fn fan(g: &Graph, x: NodeId, y: NodeId, z: NodeId) -> Option<(Vec<NodeId>, Vec<NodeId>)> {
    let n = g.node_count();
    let sink = n;
    let mut aug = Graph::new(n + 1);
    for (a, b) in g.edges() {
        aug.add_edge(a, b);
    }
    aug.add_edge(z, sink);
    aug.add_edge(y, sink);
    let paths = disjoint_paths(&aug, x, sink, 2);
    if paths.len() < 2 {
        return None;
    }
    let mut to_z = None;
    let mut to_y = None;
    for mut q in paths {
        q.pop();
        match q.last() {
            Some(&v) if v == z => to_z = Some(q),
            Some(&v) if v == y => to_y = Some(q),
            _ => return None,
        }
    }
    Some((to_z?, to_y?))
}

fn repair(g: &Graph, p: &[NodeId], out: &mut AlignedPaths) {
    let n = g.node_count();
    let index = path_index(p, n);
    for _ in 0..4 * n {
        let mut changed = false;
        for which in 0..2 {
            let (q, other) = if which == 0 {
                (&mut out.to_z, &out.to_y)
            } else {
                (&mut out.to_y, &out.to_z)
            };
            if is_aligned(q, p, n) {
                continue;
            }
            changed |= shortcut(g, q);
            if is_aligned(q, p, n) {
                continue;
            }
            changed |= splice_reference(p, &index, q, other);
        }
        if !changed {
            break;
        }
    }
}

/// Replaces `q` by an induced path on its own nodes (jump to the farthest
/// later neighbor). Never adds nodes, so disjointness is preserved.
fn shortcut(g: &Graph, q: &mut Vec<NodeId>) -> bool {
    let mut out = vec![q[0]];
    let mut i = 0;
    while i + 1 < q.len() {
        let j = (i + 1..q.len())
            .rev()
            .find(|&j| g.has_edge(q[i], q[j]))
            .expect("consecutive nodes are adjacent");
        out.push(q[j]);
        i = j;
    }
    let changed = out.len() != q.len();
    *q = out;
    changed
}

/// Finds the first order inversion in `q` and tries to reroute between two
/// of its reference nodes along `p`.
fn splice_reference(
    p: &[NodeId],
    index: &[Option<usize>],
    q: &mut Vec<NodeId>,
    other: &[NodeId],
) -> bool {
    let n = index.len();
    let mut blocked = vec![false; n];
    for &v in &other[1..] {
        blocked[v] = true;
    }
    // reference positions visited by q, with their position in q
    let marks: Vec<(usize, usize)> = q
        .iter()
        .enumerate()
        .filter_map(|(qi, &v)| index[v].map(|pi| (qi, pi)))
        .collect();
    for (a, &(_, pa)) in marks.iter().enumerate() {
        for &(qb, pb) in &marks[a + 1..] {
            if pb > pa {
                continue;
            }
            // inversion between q[qa] and q[qb]: try q[..=qa'] + p[pa'..=pb'] + q[qb'..]
            for &(qc, pc) in marks[..=a].iter().rev() {
                for &(qd, pd) in marks.iter().skip(a + 1) {
                    if qd <= qc || pd <= pc || qd < qb {
                        continue;
                    }
                    let mid = &p[pc..=pd];
                    let mut keep = vec![false; n];
                    for &v in q[..qc].iter().chain(&q[qd + 1..]) {
                        keep[v] = true;
                    }
                    if mid.iter().any(|&v| blocked[v] || keep[v]) {
                        continue;
                    }
                    let mut next = q[..qc].to_vec();
                    next.extend_from_slice(mid);
                    next.extend_from_slice(&q[qd + 1..]);
                    *q = next;
                    return true;
                }
            }
            return false;
        }
    }
    false
}

fn exhaustive(g: &Graph, p: &[NodeId], z: NodeId) -> Option<AlignedPaths> {
    let n = g.node_count();
    let index = path_index(p, n);
    let x = p[0];
    let y = *p.last().unwrap();
    let mut used = vec![false; n];
    used[x] = true;
    let mut first = vec![x];
    let mut found = None;
    search(g, &index, z, &mut used, &mut first, None, &mut |to_z| {
        let mut blocked = vec![false; n];
        for &v in &to_z[1..] {
            blocked[v] = true;
        }
        blocked[x] = true;
        let mut second = vec![x];
        let mut hit = None;
        search(g, &index, y, &mut blocked, &mut second, None, &mut |to_y| {
            hit = Some(to_y.to_vec());
            true
        });
        if let Some(to_y) = hit {
            found = Some(AlignedPaths {
                to_z: to_z.to_vec(),
                to_y,
                exhaustive: true,
            });
            true
        } else {
            false
        }
    });
    found
}

/// DFS over aligned simple paths from `path[0]` to `goal`; `visit` returns
/// true to stop.
fn search(
    g: &Graph,
    index: &[Option<usize>],
    goal: NodeId,
    used: &mut Vec<bool>,
    path: &mut Vec<NodeId>,
    last: Option<usize>,
    visit: &mut dyn FnMut(&[NodeId]) -> bool,
) -> bool {
    let tip = *path.last().unwrap();
    if tip == goal {
        return visit(path);
    }
    let last = if last.is_none() { index[path[0]] } else { last };
    for &w in g.neighbors(tip) {
        if used[w] {
            continue;
        }
        if let (Some(i), Some(l)) = (index[w], last) {
            if i <= l {
                continue;
            }
        }
        used[w] = true;
        path.push(w);
        let next = index[w].or(last);
        let stop = search(g, index, goal, used, path, next, visit);
        path.pop();
        used[w] = false;
        if stop {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_cycle() {
        // x = 0, a = 1, y = 2, b = 3
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let out = aligned_disjoint_paths(&g, &[0, 1, 2], 1).unwrap();
        assert_eq!(out.to_z, vec![0, 1]);
        assert_eq!(out.to_y, vec![0, 3, 2]);
        assert!(check_aligned_paths(&g, &[0, 1, 2], 1, &out));
    }

    #[test]
    fn complete_graph_middle_node() {
        let edges: Vec<_> = (0..4)
            .flat_map(|a| (a + 1..4).map(move |b| (a, b)))
            .collect();
        let g = Graph::from_edges(4, &edges);
        let p = [0, 1, 2, 3];
        for z in [1, 2] {
            let out = aligned_disjoint_paths(&g, &p, z).unwrap();
            assert!(check_aligned_paths(&g, &p, z, &out));
        }
    }

    #[test]
    fn z_at_origin() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]);
        let out = aligned_disjoint_paths(&g, &[0, 1, 2], 0).unwrap();
        assert_eq!(out.to_z, vec![0]);
        assert_eq!(out.to_y, vec![0, 1, 2]);
    }

    #[test]
    fn errors() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(
            aligned_disjoint_paths(&g, &[0, 1, 2], 3),
            Err(LollipopError::NodeNotOnPath(3))
        );
        assert_eq!(
            aligned_disjoint_paths(&g, &[0, 2], 0),
            Err(LollipopError::InvalidGraphPath)
        );
        assert_eq!(
            aligned_disjoint_paths(&g, &[0, 1, 2], 2),
            Err(LollipopError::TargetIsPathEnd)
        );
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert_eq!(
            aligned_disjoint_paths(&path, &[0, 1, 2], 1),
            Err(LollipopError::NotTwoConnected)
        );
    }

    #[test]
    fn alignment_predicate() {
        assert!(is_aligned(&[0, 5, 2, 3], &[0, 1, 2, 3], 6));
        assert!(!is_aligned(&[0, 3, 2], &[0, 1, 2, 3], 6));
        assert!(!is_aligned(&[1, 2], &[0, 1, 2], 6));
    }
}
