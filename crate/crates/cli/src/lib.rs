//! File formats, reports, drawings, and command implementations for the
//! `mmnfa` command-line tool.

pub mod app;
pub mod commands;
pub mod files;
pub mod report;
pub mod svg;
