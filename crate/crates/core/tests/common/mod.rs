//! Independent reference implementations used by the integration tests.
//! Everything here is deliberately naive: plain enumeration, no pruning.

#![allow(dead_code)]

use berge_core::graph::Graph;
use berge_core::hypergraph::Hypergraph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Longest Berge cycle by unpruned DFS from every start vertex.
pub fn naive_circumference(h: &Hypergraph) -> usize {
    fn dfs(
        h: &Hypergraph,
        start: usize,
        tip: usize,
        len: usize,
        used_v: &mut [bool],
        used_e: &mut [bool],
        best: &mut usize,
    ) {
        for e in 0..h.num_edges() {
            if used_e[e] || !h.contains(e, tip) {
                continue;
            }
            // close the cycle through e (needs at least two vertices)
            if len >= 2 && h.contains(e, start) {
                *best = (*best).max(len);
            }
            used_e[e] = true;
            for &w in h.edge(e) {
                if !used_v[w] {
                    used_v[w] = true;
                    dfs(h, start, w, len + 1, used_v, used_e, best);
                    used_v[w] = false;
                }
            }
            used_e[e] = false;
        }
    }
    let mut best = 0;
    for s in 0..h.n() {
        let mut used_v = vec![false; h.n()];
        let mut used_e = vec![false; h.num_edges()];
        used_v[s] = true;
        dfs(h, s, s, 1, &mut used_v, &mut used_e, &mut best);
    }
    best
}

/// Longest Berge path from `u` to `v` (in edges), `None` if there is none.
pub fn naive_longest_path(h: &Hypergraph, u: usize, v: usize) -> Option<usize> {
    fn dfs(
        h: &Hypergraph,
        v: usize,
        tip: usize,
        len: usize,
        used_v: &mut [bool],
        used_e: &mut [bool],
        best: &mut Option<usize>,
    ) {
        if tip == v {
            *best = Some(best.map_or(len, |b| b.max(len)));
            return;
        }
        for e in 0..h.num_edges() {
            if used_e[e] || !h.contains(e, tip) {
                continue;
            }
            used_e[e] = true;
            for &w in h.edge(e) {
                if !used_v[w] {
                    used_v[w] = true;
                    dfs(h, v, w, len + 1, used_v, used_e, best);
                    used_v[w] = false;
                }
            }
            used_e[e] = false;
        }
    }
    let mut best = None;
    let mut used_v = vec![false; h.n()];
    let mut used_e = vec![false; h.num_edges()];
    used_v[u] = true;
    dfs(h, v, u, 0, &mut used_v, &mut used_e, &mut best);
    best
}

pub fn naive_codiameter(h: &Hypergraph) -> usize {
    let mut best = usize::MAX;
    for u in 0..h.n() {
        for v in u + 1..h.n() {
            best = best.min(naive_longest_path(h, u, v).unwrap_or(0));
        }
    }
    best
}

fn connected_without(g: &Graph, removed: &[bool]) -> bool {
    let n = g.node_count();
    let Some(start) = (0..n).find(|&v| !removed[v]) else {
        return true;
    };
    let mut seen = removed.to_vec();
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &y in g.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// Smallest node set whose removal disconnects the graph, by enumerating
/// subsets in order of size; `n - 1` if no such set exists.
pub fn brute_connectivity(g: &Graph) -> usize {
    let n = g.node_count();
    for size in 0..n.saturating_sub(1) {
        for set in subsets_of_size(n, size) {
            let mut removed = vec![false; n];
            for &v in &set {
                removed[v] = true;
            }
            if !connected_without(g, &removed) {
                return size;
            }
        }
    }
    n - 1
}

pub fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Random hypergraph with `n` vertices, uniformity `r`, up to `max_edges`
/// distinct edges.
pub fn random_hypergraph(rng: &mut ChaCha8Rng, n: usize, r: usize, max_edges: usize) -> Hypergraph {
    let m = rng.gen_range(0..=max_edges);
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for _ in 0..4 * m {
        if edges.len() == m {
            break;
        }
        let mut vs: Vec<usize> = (0..n).collect();
        vs.shuffle(rng);
        let mut e = vs[..r].to_vec();
        e.sort_unstable();
        if !edges.contains(&e) {
            edges.push(e);
        }
    }
    Hypergraph::new(n, r, edges).unwrap()
}

/// Random graph on `n` nodes with edge probability `p`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(a, b);
            }
        }
    }
    g
}

/// Random 2-connected graph: a shuffled Hamiltonian cycle plus random chords.
pub fn random_biconnected(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut g = Graph::new(n);
    for i in 0..n {
        g.add_edge(order[i], order[(i + 1) % n]);
    }
    let p = rng.gen_range(0.0..0.5);
    for a in 0..n {
        for b in a + 1..n {
            if !g.has_edge(a, b) && rng.gen_bool(p) {
                g.add_edge(a, b);
            }
        }
    }
    g
}

/// All simple paths of `g` with at least two nodes, up to `cap` of them, in
/// DFS order from each start node.
pub fn simple_paths(g: &Graph, cap: usize) -> Vec<Vec<usize>> {
    fn dfs(
        g: &Graph,
        path: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
        cap: usize,
    ) {
        if out.len() >= cap {
            return;
        }
        if path.len() >= 2 {
            out.push(path.clone());
        }
        let tip = *path.last().unwrap();
        for &w in g.neighbors(tip) {
            if !used[w] {
                used[w] = true;
                path.push(w);
                dfs(g, path, used, out, cap);
                path.pop();
                used[w] = false;
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..g.node_count() {
        let mut used = vec![false; g.node_count()];
        used[s] = true;
        dfs(g, &mut vec![s], &mut used, &mut out, cap);
    }
    out
}

/// Largest independent set of path vertices `1..=s` avoiding the endpoints
/// of forbidden edges (edge `i` joins `i` and `i + 1`), and every set that
/// attains it.
pub fn independent_sets(s: usize, forbidden: u32) -> Vec<Vec<usize>> {
    let touched = |v: usize| (v > 0 && forbidden >> (v - 1) & 1 == 1) || forbidden >> v & 1 == 1;
    let mut out = Vec::new();
    for mask in 1u32..(1 << s) {
        let set: Vec<usize> = (0..s)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| i + 1)
            .collect();
        let independent = set.windows(2).all(|w| w[1] > w[0] + 1);
        if independent && set.iter().all(|&v| !touched(v)) {
            out.push(set);
        }
    }
    out
}
