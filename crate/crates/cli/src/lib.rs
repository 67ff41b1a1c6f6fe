//! Expression front end and command dispatch for the `pivotal` tool.
//!
//! Argument indices on the command line are 1-based; the library is
//! 0-based.

pub mod app;
pub mod expr;
