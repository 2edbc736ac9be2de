//! A laboratory for word-order constraints.
//!
//! A head word and its `n` dependents can be linearized in many ways, and the
//! choice is pulled in incompatible directions: keeping dependency lengths
//! short favors a central head, while making the head predictable favors a
//! late head and making the dependents predictable favors an early one.  This
//! crate turns those pressures into executable models:
//!
//! - [`cost`]: online memory cost of a head placement, at the constituent
//!   level and at the word level for layouts with multi-word constituents.
//! - [`predictability`]: how predictable the head or its dependents are,
//!   given the head position.
//! - [`ordering`]: the six orders of {S, V, O}, their objective scores,
//!   Pareto fronts, and a scalarized energy.
//! - [`dynamics`]: Metropolis dynamics on the ring of adjacent
//!   transpositions, exact stationary distributions, and trajectory
//!   statistics such as reversion counts.
//! - [`typology`]: ingestion and summarization of dominant-order tables.
//! - [`verify`]: brute-force sweeps that recheck the closed-form claims.
//!
//! Runnable walkthroughs live in `examples/`; try
//! `cargo run --example pareto_front`.  The `wordlab` binary exposes the same
//! functionality as subcommands (`costs`, `pareto`, `dynamics`, `ingest`,
//! `verify`).
//!
//! ```
//! use word_order_lab::cost::{memory_cost_constituents, optimal_head_positions, CostFunction};
//!
//! let g = CostFunction::linear(8);
//! let edge = memory_cost_constituents(4, 1, &g).unwrap();
//! let center = memory_cost_constituents(4, 3, &g).unwrap();
//! assert!(center < edge);
//! assert!(optimal_head_positions(4).unwrap().contains(&3));
//! ```

pub mod cli;
pub mod cost;
pub mod dynamics;
pub mod error;
pub mod layout;
pub mod ordering;
pub mod predictability;
pub mod typology;
pub mod verify;

pub use error::{Error, Result};
