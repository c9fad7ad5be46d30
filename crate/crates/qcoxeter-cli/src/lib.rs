//! Command-line surface for the qcoxeter library.

pub mod certdoc;
pub mod commands;
pub mod config;
pub mod element;
pub mod svg;
