//! Rank-based complementation of nondeterministic Büchi automata.

pub mod bench;
pub mod complement;
pub mod nba;
pub mod ranking;
pub mod rundag;
pub mod stateset;
pub mod verify;

pub use complement::{complement, ComplementResult, Method};
pub use nba::{Alphabet, Nba, NbaError, UpWord};
pub use stateset::StateSet;
