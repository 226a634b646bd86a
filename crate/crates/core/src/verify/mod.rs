//! Ground truth for the recognizers: Dynkin seeds, the brute-force type
//! oracle, transition tables and the checks that run them over enumerated
//! classes.

mod closure;
mod oracle;
mod report;
pub mod rules;
mod sample;
mod seeds;
mod shrink;
mod theorem;

pub use closure::{check_closure, transition_targets, Decision};
pub use oracle::classify_by_enumeration;
pub use report::{DiagramSketch, Failure, VerificationReport};
pub use rules::{TransitionRule, RULES};
pub use sample::random_member;
pub use seeds::dynkin_seed;
pub use shrink::{shrink_cycle, ShrinkOutcome};
pub use theorem::{run_theorem_check, TheoremOptions};
