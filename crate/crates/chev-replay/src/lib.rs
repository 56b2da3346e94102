pub mod conditions;
pub mod error;
pub mod fixtures;
pub mod g2;
pub mod golden;
pub mod lemma2;
pub mod pattern;
pub mod runner;
pub mod shapes;
pub mod system76;

pub use error::{ReplayError, Result};
pub use pattern::SymbolicPattern;
pub use shapes::build_pattern;
