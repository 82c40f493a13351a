//! Exact arithmetic for character-bound exponents of finite groups of Lie
//! type, unipotent class geometry, and conjugacy-class random walks on small
//! matrix groups.
//!
//! The crate is organised around a pipeline:
//!
//! * [`partitions`] — integer partition arithmetic (Jordan types);
//! * [`classgeom`] — dimension formulas for classical groups and their
//!   unipotent classes;
//! * [`alphabeta`] — the exponents `alpha(L)` and `beta(n_1,...,n_m)` by
//!   exhaustive exact search, plus closed forms and bound checks;
//! * [`exceptdata`] — curated alpha tables for exceptional groups;
//! * [`ffgroup`] — concrete finite matrix groups GL_n(q)/SL_n(q): conjugacy
//!   classes, centralizers, structure constants, supports;
//! * [`spectra`] — numerical character tables via class-sum diagonalisation
//!   and the character-level identity checks built on them;
//! * [`walks`] — exact conjugacy-class random walks, mixing times and
//!   covering numbers;
//! * [`acceptance`] — the end-to-end verification suite driven by the CLI
//!   `verify` subcommand and the integration tests.

pub mod acceptance;
pub mod alphabeta;
pub mod classgeom;
pub mod exceptdata;
pub mod ffgroup;
pub mod partitions;
pub mod spectra;
pub mod walks;
