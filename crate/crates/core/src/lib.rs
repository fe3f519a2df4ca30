//! Principal d-fixed monomial ideals: closed formulas for socle and regularity,
//! together with independent routes that check them.
//!
//! Modules by capability, each with a runnable example under `examples/`:
//!
//! * [`dseq`]: d-sequences, digit decomposition, the digitwise order (`decomposition`).
//! * [`fixed`]: ⟨u⟩_d as a product, closure, d-fixed / stable / Borel-type tests (`expansion`, `closure`).
//! * [`socle`]: socle components and dimensions, checked by enumeration (`socle`).
//! * [`regularity`]: the closed formula, sequential, stability and Betti routes (`regularity`).
//! * [`chain`]: the sequential chain of saturations (`chain`).
//! * [`betti`]: certified graded Betti numbers via Koszul homology (`betti`).
//! * [`verify`]: every formula-versus-oracle comparison in one report (`verify`).
//!
//! The `dfixed` binary exposes the same operations on the command line.

pub mod betti;
pub mod chain;
pub mod cli;
pub mod dseq;
pub mod error;
pub mod fixed;
pub mod ideal;
pub mod io;
pub mod linalg;
pub mod monomial;
pub mod regularity;
pub mod socle;
pub mod verify;

pub use error::{Error, Result};
