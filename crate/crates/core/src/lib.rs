//! Duflo-Serganova reduction for `osp(m|2n)` computed with weight and arc diagrams.
//!
//! Runnable tours of each capability live in `examples/`:
//!
//! ```text
//! cargo run --example weight_diagrams
//! cargo run --example howl_and_tau
//! cargo run --example stabilization
//! cargo run --example arc_diagrams
//! cargo run --example ds_reduction
//! cargo run --example recursion_oracle
//! cargo run --example osp_group
//! cargo run --example superdimension
//! cargo run --example ehrig_stroppel
//! ```
//!
//! The `ospds` binary exposes the same operations on the command line.

pub mod arcs;
pub mod cli;
pub mod diagram;
pub mod ds;
pub mod enumerate;
pub mod error;
pub mod howl;
pub mod oracle;
pub mod sdim;
pub mod translate;
pub mod weightmap;

pub use diagram::{BlockType, Series, Sign, Symbol, WeightDiagram};
pub use error::{Error, Result};
