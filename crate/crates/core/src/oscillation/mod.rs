//! Classification of a recurrence or a root-form spectrum by sign behaviour.

pub mod classify;
pub mod exact;
pub mod period;
pub mod positive;
pub mod simulate;
pub mod special;
pub mod verdict;

pub use classify::{classify, classify_recurrence, classify_spectrum, ClassifyOptions, Input};
pub use simulate::{simulate_main_term, simulate_spectrum, IntervalSimulation};
pub use special::{oscillation_witnesses_case3, special_theta_oscillates, Case3Witnesses};
pub use verdict::{
    Comparison, PositiveRealAnalysis, Report, ResidueClasses, SimulationCheck, TouchCongruence, Verdict, VerdictKind,
    Witnesses,
};
