//! Centrality metrics for competition networks.
//!
//! Competition networks are directed graphs whose edges record adversarial
//! interactions: a vote against a player, a conflict event between actors,
//! a predation link in a food web. This crate computes the common-out-
//! neighbor (CON) family of scores and directed closeness over such
//! networks, the comparison baselines (PageRank on the reversed-edge
//! network, Jaccard similarity, Spearman rank correlation), parsers for the
//! three supported data families, and the leader-prediction evaluation
//! protocols.
//!
//! ```
//! use connet::centrality::{score_table, Metric};
//! use connet::graph::CompetitionNetwork;
//!
//! let net = CompetitionNetwork::build(
//!     ["ann", "bob", "cal"],
//!     [("ann", "cal", 2.0), ("bob", "cal", 1.0), ("ann", "bob", 1.0)],
//! )
//! .unwrap();
//! let con = score_table(&net, Metric::Con);
//! let top = con.ranking()[0];
//! assert_eq!(con.label(top), "ann");
//! ```

pub mod centrality;
pub mod comparators;
mod error;
pub mod evaluation;
pub mod graph;
pub mod ingest;

pub use error::{Error, Result};
pub use graph::{CompetitionNetwork, NodeId};
