//! Game documents, table rendering and bundled datasets.

mod document;
pub mod ecuador;
mod rational;
mod render;

pub use document::{parse_game, DocumentError, GameDocument, Metadata, NamedGame, NumberText};
pub use rational::{format_decimal, format_exact, parse_rational, RationalParseError};
pub use render::{render_table, OutputFormat, RenderOptions, UnknownFormat, DEFAULT_DIGITS};
