//! Command-line front end for `permsym`: argument and file parsing, the
//! subcommands, and report rendering.

pub mod commands;
pub mod format;
pub mod input;
