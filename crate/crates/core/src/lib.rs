//! Blind cops-and-robber games on small graphs.
//!
//! The crate covers the radius-`r` blind cop-width game, the inspection (search),
//! hunters-and-rabbit and zero-visibility variants, and the flip game. It provides
//! exact solvers for tiny graphs, strategy verification, strategy transformers
//! between the games, subdivision-based strategy synthesis from tree
//! decompositions, balanced-minor constructions, and lower-bound certificates.
//!
//! Everything here is `no_std` + `alloc`; file formats and the CLI live in the
//! `blindcop` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bitset;
pub mod bounds;
pub mod constructions;
pub mod error;
pub mod flip;
pub mod game;
pub mod generators;
pub mod graph;
pub mod minors;
pub mod naf;
pub mod solver;
pub mod transforms;
pub mod treedec;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use game::{CopStrategy, GameKind, GameTrace, Radius, Verdict};
pub use graph::{Diameter, Graph, SubdivisionMap};
