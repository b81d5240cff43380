//! Exact enumeration, statistics and bijections for Dellac configurations
//! and their extended relatives.
//!
//! The crate is organised bottom-up: [`grid`] holds the tableau types,
//! [`enumerate`] generates them, [`stats`] computes inversions and path
//! statistics, [`poly`] and [`seq`] provide the exact polynomial side,
//! [`bijections`] implements the maps between families and [`sums`] runs the
//! exhaustive generating-function checks (in parallel with the default
//! `parallel` feature).

pub mod error;
pub mod grid;
pub mod enumerate;
pub mod stats;
pub mod poly;
pub mod seq;
pub mod bijections;
pub mod census;
pub mod sums;
pub mod json;
pub mod verify;

pub use error::{Error, Result};
pub use grid::{
    validate, Cell, DellacConfig, EvenExtended, Extended, Kind, Labeled, LabeledEven, LabeledOdd,
    OddExtended, SymmetricDellac, Tableau, Violation,
};
