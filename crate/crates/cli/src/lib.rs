//! Library layer of the `multalg` command-line tool: the definition-file
//! and formula parsers plus the command runner, kept separate from the
//! binary so tests can drive commands in-process.

pub mod commands;
pub mod parser;

pub use commands::{run, Command, CommandResult, GlobalOpts, OutputFormat, Status};
pub use parser::{parse_formula, parse_source, print_formula, NamedFormula, ParseError, SourceFile};
