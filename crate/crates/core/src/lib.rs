//! Anyon algebra, symmetries, boundaries and stabilizer-code constructions
//! for the two-dimensional color code.
//!
//! The crate is organized around three layers:
//!
//! * [`anyon`], [`symmetry`] and [`boundary`] implement the abstract anyon
//!   data of the color code, the toric code and the three-fermion model:
//!   fusion, spin, monodromy, the 72-element symmetry group, Lagrangian
//!   subgroups and the unfolding isomorphisms.
//! * [`pauli`] is the symplectic GF(2) engine: Pauli operators as bit
//!   vectors, stabilizer groups, logical operators and exact bounded-weight
//!   distance search.
//! * [`factory`] compiles lattice descriptions of the code families
//!   (triangular, Pauli-boundary, stellated, torus with walls/twists) into
//!   stabilizer codes backed by [`pauli`].
//!
//! [`claims`] collects the regression checks surfaced by the CLI's
//! `verify-paper` subcommand.

pub mod anyon;
pub mod boundary;
pub mod claims;
pub mod factory;
pub mod pauli;
pub mod symmetry;

pub use anyon::{AnyonModel, Charge, ModelName, Phase};
pub use pauli::{PauliOperator, StabilizerCode};
pub use symmetry::{Automorphism, SymmetryGroup};
