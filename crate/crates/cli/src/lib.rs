//! Library surface of the command-line tool, exposed so integration tests
//! can exercise the document schema directly.

pub mod commands;
pub mod schema;
pub mod suite;
