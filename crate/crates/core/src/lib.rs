//! Berge cycles in `r`-uniform hypergraphs.
//!
//! Exact circumference and codiameter by branch-and-bound, connectivity of the
//! incidence bipartite graph, the lollipop improvement engine, the extremal
//! constructions, and verification campaigns for the Dirac-type bound
//! `δ(H) ≥ C(k-1, r-1) + 1 ⇒ circumference ≥ min(2k, n)`.

pub mod campaign;
pub mod connectivity;
pub mod constructions;
pub mod enumerate;
pub mod graph;
pub mod hypergraph;
pub mod io;
pub mod lollipop;
pub mod search;

pub use campaign::{run_campaign, CampaignSpec, Claim, Mode, VerificationReport};
pub use connectivity::{is_k_connected, vertex_connectivity, ConnectivityWitness};
pub use constructions::{complete_runiform, h1, h2, h3, ConstructionSpec};
pub use hypergraph::{EdgeId, Hypergraph, HypergraphError, IncidenceGraph, VertexId};
pub use lollipop::{grow_long_cycle, improve, Lollipop, LollipopScore};
pub use search::{
    circumference, codiameter, longest_berge_cycle, longest_berge_path_between, validate_cycle,
    BergeCycle, BergePath, PartialBergePath, SearchOptions,
};
