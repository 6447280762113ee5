//! Finite unit-ball packings on the hexagonal close packing lattice.
//!
//! Balls sit on lattice sites given in integer hexagonal coordinates
//! `[i, j, k]`; two balls touch exactly when their integer distance form is 12.
//! On top of that the crate provides contact graphs and canonical forms
//! ([`packing`]), a set of reference configurations for 20 to 27 balls with a
//! verifier ([`corpus`]), exact and heuristic maximal-contact search
//! ([`search`]), summary metrics ([`report`]) and the `hcpack` command line
//! ([`cli`]).

pub mod cli;
pub mod corpus;
pub mod hexlattice;
pub mod packing;
pub mod report;
pub mod search;

pub use hexlattice::{is_contact, pair_form, to_cartesian, CartPoint, HexCoord, Window};
pub use packing::{build_contact_graph, canonicalize, contact_count, CanonicalForm, Configuration, ContactGraph};
