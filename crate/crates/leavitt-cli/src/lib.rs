//! Library half of the command-line front end: the expression language and
//! the plain-text reports behind each subcommand.

pub mod commands;
pub mod expr;
