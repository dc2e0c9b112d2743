//! Command-line front end for the `antiramsey` library.

pub mod commands;
pub mod expr;

pub use expr::{parse_graph, parse_graph_expr, GraphExpr, ParseError};
