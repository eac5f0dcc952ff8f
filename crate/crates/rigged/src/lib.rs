//! Rigged configuration models for crystals of symmetrizable Kac-Moody algebras.
//!
//! The crate provides the highest-weight crystal `RC(lambda)` and the
//! infinity crystal `RC(inf)` realized on rigged configurations, together
//! with the auxiliary one-element and elementary crystals, tensor products,
//! virtualization along diagram foldings, projection from the infinity model
//! onto highest-weight crystals, and depth-bounded crystal-graph generation
//! with DOT/JSON export.
//!
//! Entry points:
//! - [`cartan::build_cartan`] for Cartan data by type name or explicit matrix,
//! - [`rigged::RiggedConfiguration`] for elements and their vacancy numbers,
//! - Kashiwara operators as methods `e`, `f`, `epsilon`, `phi` on elements,
//! - [`cartan::folding::folding_for`] and [`virtualization`] for foldings,
//! - [`graph::generate`] for crystal graphs,
//! - the `rc` binary for the command-line interface.

pub mod axioms;
pub mod cartan;
pub mod cli;
pub mod combinators;
pub mod display;
pub mod error;
pub mod graph;
pub mod kashiwara;
pub mod rigged;
pub mod verify;
pub mod virtualization;
pub mod weight;

pub use cartan::{build_cartan, CartanDatum, Label, TypeClass};
pub use error::Error;
pub use rigged::{Mode, MultiplicityArray, RiggedConfiguration, RiggedPartition};
pub use weight::Weight;
