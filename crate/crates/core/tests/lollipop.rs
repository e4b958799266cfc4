use std::collections::BTreeSet;

use berge_core::constructions::{complete_runiform, h1, h3};
use berge_core::graph::Graph;
use berge_core::hypergraph::Hypergraph;
use berge_core::lollipop::{
    aligned_disjoint_paths, attach, grow_long_cycle, improve, independent_set_bound, AlignedPaths,
    Kind, Lollipop, LollipopError, LollipopScore, Move, Step, Tail,
};
use berge_core::search::{
    circumference, longest_berge_cycle, validate_cycle, BergeCycle, BergePath, PartialBergePath,
    SearchOptions,
};

/// Five counts straight from the raw sets.
fn recount(h: &Hypergraph, l: &Lollipop) -> LollipopScore {
    let cycle_vertices: BTreeSet<usize> = l.cycle.vertices.iter().copied().collect();
    let cycle_edges: BTreeSet<usize> = l.cycle.edges.iter().copied().collect();
    let off: BTreeSet<usize> = l
        .tail
        .vertices()
        .iter()
        .copied()
        .filter(|v| !cycle_vertices.contains(v))
        .collect();
    let cross = cycle_edges
        .iter()
        .map(|&e| h.edge(e).iter().filter(|v| off.contains(v)).count())
        .sum();
    let contained = l
        .tail
        .edges()
        .iter()
        .filter(|e| !cycle_edges.contains(e))
        .filter(|&&e| h.edge(e).iter().all(|v| off.contains(v)))
        .count();
    LollipopScore {
        c_len: l.cycle.vertices.len(),
        p_len: l.tail.edges().len(),
        cross,
        kind_rank: if matches!(l.tail, Tail::O(_)) { 1 } else { 0 },
        contained,
    }
}

/// Every Berge cycle of `h` as a vertex/edge sequence, in all rotations and
/// both directions.
fn all_cycles(h: &Hypergraph) -> Vec<BergeCycle> {
    fn dfs(h: &Hypergraph, vs: &mut Vec<usize>, es: &mut Vec<usize>, out: &mut Vec<BergeCycle>) {
        let tip = *vs.last().unwrap();
        for e in 0..h.num_edges() {
            if es.contains(&e) || !h.contains(e, tip) {
                continue;
            }
            if vs.len() >= 2 && h.contains(e, vs[0]) {
                let mut edges = es.clone();
                edges.push(e);
                out.push(BergeCycle::new(vs.clone(), edges));
            }
            for &w in h.edge(e) {
                if !vs.contains(&w) {
                    vs.push(w);
                    es.push(e);
                    dfs(h, vs, es, out);
                    vs.pop();
                    es.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..h.n() {
        dfs(h, &mut vec![s], &mut Vec::new(), &mut out);
    }
    out
}

/// Paths continuing from `vs`/`es` through edges off the cycle and vertices
/// off the cycle, every prefix included.
fn extend_tails(
    h: &Hypergraph,
    c: &BergeCycle,
    vs: &mut Vec<usize>,
    es: &mut Vec<usize>,
    out: &mut Vec<(Vec<usize>, Vec<usize>)>,
) {
    out.push((vs.clone(), es.clone()));
    let tip = *vs.last().unwrap();
    for e in 0..h.num_edges() {
        if es.contains(&e) || c.edges.contains(&e) || !h.contains(e, tip) {
            continue;
        }
        for &w in h.edge(e) {
            if !vs.contains(&w) && !c.vertices.contains(&w) {
                vs.push(w);
                es.push(e);
                extend_tails(h, c, vs, es, out);
                vs.pop();
                es.pop();
            }
        }
    }
}

fn all_lollipops(h: &Hypergraph) -> Vec<Lollipop> {
    let mut out = Vec::new();
    for c in all_cycles(h) {
        let mut tails = Vec::new();
        for &u1 in &c.vertices {
            extend_tails(h, &c, &mut vec![u1], &mut Vec::new(), &mut tails);
        }
        for (vs, es) in tails.drain(..) {
            out.push(Lollipop::ordinary(c.clone(), BergePath::new(vs, es)).normalized());
        }
        for &f1 in &c.edges {
            for &u2 in h.edge(f1) {
                if !c.vertices.contains(&u2) {
                    extend_tails(h, &c, &mut vec![u2], &mut vec![f1], &mut tails);
                }
            }
        }
        for (vs, es) in tails {
            out.push(Lollipop::partial(c.clone(), PartialBergePath::new(es, vs)).normalized());
        }
    }
    out
}

/// Four 3-edges around 0,1,2,3 with private third vertices, and a tail edge.
fn square_with_tail() -> Hypergraph {
    Hypergraph::new(
        10,
        3,
        [[0, 1, 4], [1, 2, 5], [2, 3, 6], [0, 3, 7], [3, 8, 9]],
    )
    .unwrap()
}

#[test]
fn score_of_a_short_tail() {
    let h = square_with_tail();
    let cycle = BergeCycle::new(vec![0, 1, 2, 3], vec![0, 1, 2, 3]);
    let l = Lollipop::ordinary(cycle, BergePath::new(vec![3, 8], vec![4]));
    let s = l.score(&h).unwrap();
    assert_eq!(
        s,
        LollipopScore {
            c_len: 4,
            p_len: 1,
            cross: 0,
            kind_rank: 1,
            contained: 0
        }
    );
    assert_eq!(s, recount(&h, &l));
    assert_eq!(s.to_string(), "(4,1,0,1,0)");
    let sets = l.reduced_edge_sets(&h);
    assert!(sets.h_prime.is_empty());
    assert_eq!(sets.h_dprime, BTreeSet::from([4]));
}

#[test]
fn contained_edges_break_the_last_tie() {
    let a = LollipopScore {
        c_len: 5,
        p_len: 2,
        cross: 3,
        kind_rank: 1,
        contained: 2,
    };
    let b = LollipopScore { contained: 1, ..a };
    assert!(a > b);
    // earlier components dominate later ones
    assert!(
        LollipopScore {
            c_len: 6,
            p_len: 0,
            cross: 0,
            kind_rank: 0,
            contained: 0
        } > a
    );
    assert!(
        LollipopScore {
            kind_rank: 0,
            contained: 9,
            ..a
        } < a
    );
}

#[test]
fn invalid_lollipops_have_no_score() {
    let h = square_with_tail();
    let cycle = BergeCycle::new(vec![0, 1, 2, 3], vec![0, 1, 2, 3]);
    // the path reuses a cycle edge
    let l = Lollipop::ordinary(cycle.clone(), BergePath::new(vec![3, 6], vec![2]));
    assert!(matches!(
        l.score(&h),
        Err(LollipopError::InvalidLollipop(_))
    ));
    // a partial path must open with a cycle edge
    let l = Lollipop::partial(cycle, PartialBergePath::new(vec![4], vec![8]));
    assert!(matches!(
        l.score(&h),
        Err(LollipopError::InvalidLollipop(_))
    ));
}

#[test]
fn scores_recount_on_h1() {
    let h = h1(5, 3, 3).unwrap();
    let best = longest_berge_cycle(&h, SearchOptions::unlimited())
        .unwrap()
        .unwrap();
    let attached = attach(&h, &best).unwrap();
    let grown = grow_long_cycle(&h, None).unwrap().lollipop;
    for l in [&attached, &grown] {
        assert_eq!(l.score(&h).unwrap(), recount(&h, l));
    }
    let (a, b) = (recount(&h, &attached), recount(&h, &grown));
    assert_eq!(attached.is_better(&h, &grown).unwrap(), a > b);
    assert_eq!(grown.is_better(&h, &attached).unwrap(), b > a);
}

#[test]
fn extension_then_splice() {
    // 4-cycle 0-1-2-3 with tail 3-4 and edges 4-5, 5-1
    let h = Hypergraph::new(
        6,
        2,
        [[0, 1], [1, 2], [2, 3], [0, 3], [3, 4], [4, 5], [1, 5]],
    )
    .unwrap();
    let cycle = BergeCycle::new(vec![0, 1, 2, 3], vec![0, 1, 2, 3]);
    let l = Lollipop::ordinary(cycle, BergePath::new(vec![3, 4], vec![4]));
    let base = l.score(&h).unwrap();

    let Step::Improved {
        lollipop,
        score,
        mv,
    } = improve(&h, &l).unwrap()
    else {
        panic!("expected a path extension");
    };
    assert_eq!(mv, Move::PathExtension);
    assert_eq!(score.p_len, base.p_len + 1);
    assert_eq!(lollipop.tail.vertices(), &[3, 4, 5]);

    let Step::Improved {
        lollipop,
        score,
        mv,
    } = improve(&h, &lollipop).unwrap()
    else {
        panic!("expected a splice");
    };
    assert_eq!(mv, Move::CycleSplice);
    assert_eq!(score.c_len, base.c_len + 1);
    assert!(validate_cycle(&h, &lollipop.cycle).is_ok());
    assert!(lollipop.validate(&h).is_ok());
    assert_eq!(score.c_len, circumference(&h));
}

#[test]
fn h3_fixpoint_is_the_global_maximum() {
    let h = h3(3, 2).unwrap();
    let all = all_lollipops(&h);
    assert!(!all.is_empty());
    let mut best = None;
    for l in &all {
        let s = l.score(&h).unwrap();
        assert_eq!(s, recount(&h, l), "{l:?}");
        best = best.max(Some(s));
    }
    let best = best.unwrap();
    assert_eq!(best.c_len, 4);

    let out = grow_long_cycle(&h, None).unwrap();
    assert_eq!(out.cycle.len(), 4);
    assert_eq!(out.score, best);
    assert_eq!(improve(&h, &out.lollipop).unwrap(), Step::Fixpoint);
    for l in all.iter().filter(|l| l.score(&h).unwrap() == best) {
        assert_eq!(improve(&h, l).unwrap(), Step::Fixpoint);
    }
}

#[test]
fn improve_is_strictly_monotone_on_every_lollipop() {
    for h in [h3(3, 2).unwrap(), complete_runiform(5, 3).unwrap()] {
        for l in all_lollipops(&h) {
            let base = l.score(&h).unwrap();
            if let Step::Improved {
                lollipop, score, ..
            } = improve(&h, &l).unwrap()
            {
                assert!(score > base);
                assert_eq!(lollipop.score(&h).unwrap(), score);
            }
        }
    }
}

#[test]
fn grow_reaches_the_optimum_on_small_families() {
    assert_eq!(
        grow_long_cycle(&h3(3, 2).unwrap(), None)
            .unwrap()
            .cycle
            .len(),
        4
    );
    assert_eq!(
        grow_long_cycle(&complete_runiform(5, 3).unwrap(), None)
            .unwrap()
            .cycle
            .len(),
        5
    );
    let single = Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
    assert_eq!(
        grow_long_cycle(&single, None).unwrap_err(),
        LollipopError::NoCycle
    );
}

#[test]
fn grow_trace_scores_climb() {
    let h = h1(5, 3, 3).unwrap();
    let out = grow_long_cycle(&h, None).unwrap();
    assert!(out.cycle.len() <= 8);
    assert!(out.trace.len() < 100_000);
    assert!(out.lollipop.validate(&h).is_ok());
    assert_eq!(out.lollipop.kind() == Kind::O, out.score.kind_rank == 1);
}

/// Postconditions checked without the library's own checker.
fn check(g: &Graph, p: &[usize], z: usize, out: &AlignedPaths) {
    let (x, y) = (p[0], *p.last().unwrap());
    for (q, end) in [(&out.to_z, z), (&out.to_y, y)] {
        assert_eq!(q[0], x);
        assert_eq!(*q.last().unwrap(), end);
        assert!(
            q.windows(2).all(|w| g.has_edge(w[0], w[1])),
            "{q:?} is not a path"
        );
        let distinct: BTreeSet<_> = q.iter().collect();
        assert_eq!(distinct.len(), q.len());
        // nodes shared with P appear in P's order
        let positions: Vec<usize> = q
            .iter()
            .filter_map(|v| p.iter().position(|w| w == v))
            .collect();
        assert!(
            positions.windows(2).all(|w| w[0] < w[1]),
            "{q:?} not aligned with {p:?}"
        );
    }
    let common: Vec<_> = out.to_z.iter().filter(|v| out.to_y.contains(v)).collect();
    assert_eq!(common, vec![&x]);
}

#[test]
fn aligned_paths_on_a_square() {
    let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
    let out = aligned_disjoint_paths(&g, &[0, 1, 2], 1).unwrap();
    assert_eq!(out.to_z, vec![0, 1]);
    assert_eq!(out.to_y, vec![0, 3, 2]);
    check(&g, &[0, 1, 2], 1, &out);
}

#[test]
fn aligned_paths_on_k4() {
    let edges: Vec<(usize, usize)> = (0..4)
        .flat_map(|a| (a + 1..4).map(move |b| (a, b)))
        .collect();
    let g = Graph::from_edges(4, &edges);
    let p = [2, 0, 3, 1];
    for z in [0, 3] {
        let out = aligned_disjoint_paths(&g, &p, z).unwrap();
        check(&g, &p, z, &out);
    }
}

#[test]
fn aligned_paths_on_an_incidence_graph() {
    let h = h3(3, 2).unwrap();
    let ig = h.incidence_graph();
    let g = ig.to_graph();
    let l = all_lollipops(&h)
        .into_iter()
        .find(|l| l.kind() == Kind::P && l.tail.len() >= 2)
        .expect("h3 has a p-lollipop with a two-edge tail");
    let Tail::P(tail) = &l.tail else {
        unreachable!()
    };
    let mut p = Vec::new();
    for (&e, &v) in tail.edges.iter().zip(&tail.vertices) {
        p.push(ig.edge_node(e));
        p.push(v);
    }
    let out = aligned_disjoint_paths(&g, &p, p[1]).unwrap();
    check(&g, &p, p[1], &out);
}

#[test]
fn aligned_paths_reject_bad_input() {
    let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
    assert_eq!(
        aligned_disjoint_paths(&g, &[0, 1, 2], 3).unwrap_err(),
        LollipopError::NodeNotOnPath(3)
    );
    let path = Graph::from_edges(3, &[(0, 1), (1, 2)]);
    assert_eq!(
        aligned_disjoint_paths(&path, &[0, 1, 2], 1).unwrap_err(),
        LollipopError::NotTwoConnected
    );
}

#[test]
fn independent_set_examples() {
    assert_eq!(independent_set_bound(5, 2).unwrap(), 2);
    assert_eq!(independent_set_bound(4, 0).unwrap(), 2);
    assert!(independent_set_bound(3, 5).is_err());
}
