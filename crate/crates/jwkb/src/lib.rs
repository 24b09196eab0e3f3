//! Configuration, orchestration and CSV output for `jwkb-core`: the
//! published tables and figure data, plus single-stage reports.

#![warn(missing_docs)]

pub mod config;
pub mod figures;
pub mod output;
pub mod pipeline;
pub mod reference;
pub mod reports;
pub mod tables;

pub use config::RunConfig;
pub use figures::emit_figure_data;
pub use output::{Cell, Table};
pub use tables::{run_table, HarnessError};
