//! Reflexive lattice polytopes, Batyrev Hodge numbers, toric extremal
//! transitions and transition webs, with an exact verification of the
//! two-parameter octic model and its mirror map.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod hodge;
pub mod io;
pub mod lattice;
pub mod mirror_map;
pub mod reflexive;
pub mod transitions;
mod util;
pub mod worked_example;

pub use error::{Error, Result};
