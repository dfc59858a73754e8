//! Recurrences, their closed forms, and the terms of maximal growth.

pub mod form;
pub mod recurrence;
pub mod spectrum;

pub use form::{binomial, to_power_sum, PowerSumForm, PowerSumTerm};
pub use recurrence::{Recurrence, Sign, SignSummary};
pub use spectrum::{
    dominating_spectrum, from_root_form, multiple_turns, pow_rat, three_two_two, Coefficient, DominantSpectrum, DominantTerm, LowerTerm, Phase, RemainderModel,
    RemainderReport, RootCoefficient, RootForm, RootSpec, SpectrumReport, TermKind, TermReport,
};
