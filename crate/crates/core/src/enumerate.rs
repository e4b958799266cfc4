//! Edge subsets of the complete `r`-graph as bitmasks.
//!
//! Bit `i` of a mask is the `i`-th `r`-subset of `0..n` in lexicographic
//! order, so listing set bits from low to high gives a sorted edge list.

use itertools::Itertools;
use thiserror::Error;

use crate::constructions::binomial;
use crate::hypergraph::Hypergraph;

/// Masks are `u64`, and exhaustive runs over more than 2^32 subsets are not
/// desk scale anyway.
pub const MAX_UNIVERSE: usize = 32;
/// Canonical forms try all `n!` relabelings.
pub const MAX_CANON_N: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("C({n},{r}) = {edges} possible edges, at most {MAX_UNIVERSE} supported")]
    TooLarge { n: usize, r: usize, edges: usize },
    #[error("canonical forms need n <= {MAX_CANON_N}, got {0}")]
    CanonTooLarge(usize),
}

#[derive(Debug, Clone)]
pub struct EdgeUniverse {
    n: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
    /// For each vertex, the mask of edges containing it.
    vertex_masks: Vec<u64>,
}

impl EdgeUniverse {
    pub fn new(n: usize, r: usize) -> Result<Self, EnumerateError> {
        let total = binomial(n, r);
        if total > MAX_UNIVERSE {
            return Err(EnumerateError::TooLarge { n, r, edges: total });
        }
        let edges: Vec<Vec<usize>> = (0..n).combinations(r).collect();
        let mut vertex_masks = vec![0u64; n];
        for (i, e) in edges.iter().enumerate() {
            for &v in e {
                vertex_masks[v] |= 1 << i;
            }
        }
        Ok(Self {
            n,
            r,
            edges,
            vertex_masks,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Number of subsets, `2^len`.
    pub fn subsets(&self) -> u64 {
        1u64 << self.len()
    }

    pub fn edge(&self, i: usize) -> &[usize] {
        &self.edges[i]
    }

    pub fn index_of(&self, edge: &[usize]) -> Option<usize> {
        self.edges.binary_search_by(|e| e.as_slice().cmp(edge)).ok()
    }

    pub fn min_degree(&self, mask: u64) -> usize {
        self.vertex_masks
            .iter()
            .map(|m| (m & mask).count_ones() as usize)
            .min()
            .unwrap_or(0)
    }

    pub fn hypergraph(&self, mask: u64) -> Hypergraph {
        let edges = (0..self.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| self.edges[i].clone());
        Hypergraph::new(self.n, self.r, edges).expect("universe edges are valid")
    }

    pub fn mask_of(&self, h: &Hypergraph) -> Option<u64> {
        let mut mask = 0;
        for e in h.edges() {
            mask |= 1 << self.index_of(e)?;
        }
        Some(mask)
    }
}

/// Canonical representatives under vertex relabeling.
#[derive(Debug, Clone)]
pub struct Canonizer {
    /// For each permutation, the image of every edge index.
    maps: Vec<Vec<u8>>,
}

/// Whether `a`'s sorted edge list is lexicographically before `b`'s. Both
/// masks must have the same number of edges.
pub fn lex_less(a: u64, b: u64) -> bool {
    let d = a ^ b;
    d != 0 && a & d & d.wrapping_neg() != 0
}

impl Canonizer {
    pub fn new(u: &EdgeUniverse) -> Result<Self, EnumerateError> {
        if u.n() > MAX_CANON_N {
            return Err(EnumerateError::CanonTooLarge(u.n()));
        }
        let maps = (0..u.n())
            .permutations(u.n())
            .map(|p| {
                (0..u.len())
                    .map(|i| {
                        let mut img: Vec<usize> = u.edge(i).iter().map(|&v| p[v]).collect();
                        img.sort_unstable();
                        u.index_of(&img).expect("image of an edge is an edge") as u8
                    })
                    .collect()
            })
            .collect();
        Ok(Self { maps })
    }

    /// Relabeling of `mask` whose sorted edge list is lexicographically least.
    pub fn canonical(&self, mask: u64) -> u64 {
        let mut best = mask;
        for map in &self.maps {
            let mut img = 0u64;
            let mut m = mask;
            while m != 0 {
                let i = m.trailing_zeros() as usize;
                img |= 1 << map[i];
                m &= m - 1;
            }
            if lex_less(img, best) {
                best = img;
            }
        }
        best
    }
}
