//! Generators for the extremal families showing the degree threshold is sharp.
//!
//! * `h1(k, r, q)`: `q` cliques on `V_i ∪ {x, y}` with `|V_i| = k - 2`, glued at `x = 0`, `y = 1`.
//! * `h2(k, r, n)`: all `r`-sets with at most one vertex outside `X = {0, .., k-2}`.
//! * `h3(r, s)`: edges `U_i ∪ {v_j}` for `i = 1..s`, `j = 1, 2`, with `v_1 = 0`, `v_2 = 1`.
//! * `complete_runiform(n, r)`: every `r`-subset of `0..n`.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::{Hypergraph, HypergraphError, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("bad parameters for {family}: {reason}")]
    BadParams { family: Family, reason: String },
    #[error(transparent)]
    Build(#[from] HypergraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    H1,
    H2,
    H3,
    Complete,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::H1 => "h1",
            Family::H2 => "h2",
            Family::H3 => "h3",
            Family::Complete => "complete",
        })
    }
}

/// A family together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum ConstructionSpec {
    H1 { k: usize, r: usize, q: usize },
    H2 { k: usize, r: usize, n: usize },
    H3 { r: usize, s: usize },
    Complete { n: usize, r: usize },
}

impl ConstructionSpec {
    pub fn family(&self) -> Family {
        match self {
            ConstructionSpec::H1 { .. } => Family::H1,
            ConstructionSpec::H2 { .. } => Family::H2,
            ConstructionSpec::H3 { .. } => Family::H3,
            ConstructionSpec::Complete { .. } => Family::Complete,
        }
    }

    pub fn generate(&self) -> Result<Hypergraph, ConstructionError> {
        match *self {
            ConstructionSpec::H1 { k, r, q } => h1(k, r, q),
            ConstructionSpec::H2 { k, r, n } => h2(k, r, n),
            ConstructionSpec::H3 { r, s } => h3(r, s),
            ConstructionSpec::Complete { n, r } => complete_runiform(n, r),
        }
    }
}

fn bad(family: Family, reason: impl Into<String>) -> ConstructionError {
    ConstructionError::BadParams {
        family,
        reason: reason.into(),
    }
}

pub fn h1(k: usize, r: usize, q: usize) -> Result<Hypergraph, ConstructionError> {
    if r < 3 || k < r + 2 {
        return Err(bad(
            Family::H1,
            format!("need k >= r + 2 and r >= 3, got k = {k}, r = {r}"),
        ));
    }
    if q < 2 {
        return Err(bad(Family::H1, format!("need q >= 2, got {q}")));
    }
    if q == 2 {
        log::warn!("h1 with q = 2 has n = 2k - 2 = min(2k, n): sharpness is not strict");
    }
    let block = k - 2;
    let n = q * block + 2;
    let mut edges: Vec<Vec<VertexId>> = Vec::new();
    for i in 0..q {
        let start = 2 + i * block;
        let clique: Vec<VertexId> = [0, 1].into_iter().chain(start..start + block).collect();
        // every r-subset here meets V_i since r >= 3, so blocks never repeat an edge
        edges.extend(clique.into_iter().combinations(r));
    }
    Ok(Hypergraph::new(n, r, edges)?)
}

pub fn h2(k: usize, r: usize, n: usize) -> Result<Hypergraph, ConstructionError> {
    if r < 3 || k < r + 2 || n < k {
        return Err(bad(
            Family::H2,
            format!("need n >= k >= r + 2 and r >= 3, got k = {k}, r = {r}, n = {n}"),
        ));
    }
    let x_size = k - 1;
    let edges = (0..n)
        .combinations(r)
        .filter(|e| e.iter().filter(|&&v| v >= x_size).count() <= 1);
    Ok(Hypergraph::new(n, r, edges)?)
}

pub fn h3(r: usize, s: usize) -> Result<Hypergraph, ConstructionError> {
    if r < 3 || s < 2 {
        return Err(bad(
            Family::H3,
            format!("need r >= 3 and s >= 2, got r = {r}, s = {s}"),
        ));
    }
    let n = 2 + s * (r - 1);
    let mut edges = Vec::with_capacity(2 * s);
    for i in 0..s {
        let start = 2 + i * (r - 1);
        for v in [0, 1] {
            let mut e: Vec<VertexId> = (start..start + r - 1).collect();
            e.push(v);
            edges.push(e);
        }
    }
    Ok(Hypergraph::new(n, r, edges)?)
}

pub fn complete_runiform(n: usize, r: usize) -> Result<Hypergraph, ConstructionError> {
    if r < 2 || n < r {
        return Err(bad(
            Family::Complete,
            format!("need n >= r >= 2, got n = {n}, r = {r}"),
        ));
    }
    Ok(Hypergraph::new(n, r, (0..n).combinations(r))?)
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
