//! Code constructions: named families, lexicodes, searches and replayable
//! recipes certifying lower bounds on the best minimum distance.

pub(crate) mod bitset;
pub mod best_known;
pub mod lexicode;
pub mod named;
pub mod recipe;
pub mod search;

pub use best_known::{best_known_lower_bound, best_known_with, BestKnownOptions, BEST_KNOWN_MAX_N};
pub use lexicode::{lexicode, LEXICODE_MAX_N};
pub use named::{named_code, NamedCode};
pub use recipe::{certified_min_distance, Base, ConstructionRecipe, Derivation};
pub use search::{parity_check_search, random_search, ColumnSearchConfig, DEFAULT_SEED};
