//! Named verification checks behind a common trait, registered and selected
//! by name. `registry()` lists every check in a fixed order; the CLI `verify`
//! command runs one by name or the whole battery.

pub mod rng;

mod battery;

pub use battery::{check_by_name, check_names, registry, Check, CheckContext, CheckOutcome};
