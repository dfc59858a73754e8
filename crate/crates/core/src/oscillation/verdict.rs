//! Verdicts and the report attached to them.

use serde::{Deserialize, Serialize};

use crate::kronecker::{HitVerdict, RelationReport};
use crate::powersum::{SignSummary, SpectrumReport};
use crate::unitlattice::certify::RationalRoute;

/// Where the sign of `a(n)` is witnessed.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Witnesses {
    /// Residues are taken modulo this period; `None` means plain indices.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub period: Option<u64>,
    pub positive: Vec<u64>,
    pub negative: Vec<u64>,
    /// `|b(n)| >= delta` on the listed classes.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<String>,
    /// Margin from the square-hitting argument.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<String>,
    /// `false` when the argument is by density and the indices are only evidence.
    pub effective: bool,
}

impl Witnesses {
    /// Shifts residues and indices from the core sequence back to `a`.
    pub fn shifted(mut self, offset: u64) -> Self {
        let shift = |v: &mut Vec<u64>, p: Option<u64>| {
            for x in v.iter_mut() {
                *x = match p {
                    Some(p) => (*x + offset) % p,
                    None => *x + offset,
                };
            }
            v.sort();
            v.dedup();
        };
        shift(&mut self.positive, self.period);
        shift(&mut self.negative, self.period);
        self
    }

    fn swapped(mut self) -> Self {
        std::mem::swap(&mut self.positive, &mut self.negative);
        self
    }
}

/// Residue classes `n = r (mod modulus)`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ResidueClasses {
    pub modulus: u64,
    pub residues: Vec<u64>,
}

impl ResidueClasses {
    pub fn contains(&self, n: u64) -> bool {
        self.residues.contains(&(n % self.modulus))
    }

    pub fn shifted(&self, offset: u64) -> Self {
        let mut residues: Vec<u64> = self.residues.iter().map(|r| (r + offset) % self.modulus).collect();
        residues.sort();
        ResidueClasses { modulus: self.modulus, residues }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictKind {
    Oscillates,
    EventuallyPositive,
    EventuallyNegative,
    IdenticallyZero,
    ConjecturedOscillates,
    TouchingZeros,
    Inconclusive,
}

impl VerdictKind {
    /// The serialized name.
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictKind::Oscillates => "oscillates",
            VerdictKind::EventuallyPositive => "eventually_positive",
            VerdictKind::EventuallyNegative => "eventually_negative",
            VerdictKind::IdenticallyZero => "identically_zero",
            VerdictKind::ConjecturedOscillates => "conjectured_oscillates",
            VerdictKind::TouchingZeros => "touching_zeros",
            VerdictKind::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    Oscillates {
        theorem: String,
        witnesses: Witnesses,
    },
    EventuallyPositive {
        theorem: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        bound_hint: Option<u64>,
    },
    EventuallyNegative {
        theorem: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        bound_hint: Option<u64>,
    },
    /// Every term from some index on is zero.
    IdenticallyZero,
    ConjecturedOscillates {
        evidence: String,
    },
    TouchingZeros {
        classes: ResidueClasses,
        note: String,
    },
    Inconclusive {
        reason: String,
    },
}

impl Verdict {
    pub fn kind(&self) -> VerdictKind {
        match self {
            Verdict::Oscillates { .. } => VerdictKind::Oscillates,
            Verdict::EventuallyPositive { .. } => VerdictKind::EventuallyPositive,
            Verdict::EventuallyNegative { .. } => VerdictKind::EventuallyNegative,
            Verdict::IdenticallyZero => VerdictKind::IdenticallyZero,
            Verdict::ConjecturedOscillates { .. } => VerdictKind::ConjecturedOscillates,
            Verdict::TouchingZeros { .. } => VerdictKind::TouchingZeros,
            Verdict::Inconclusive { .. } => VerdictKind::Inconclusive,
        }
    }

    /// Eventual sign `s` with the given theorem name.
    pub fn eventually(sign: i8, theorem: impl Into<String>, bound_hint: Option<u64>) -> Verdict {
        if sign > 0 {
            Verdict::EventuallyPositive { theorem: theorem.into(), bound_hint }
        } else {
            Verdict::EventuallyNegative { theorem: theorem.into(), bound_hint }
        }
    }

    pub fn theorem(&self) -> Option<&str> {
        match self {
            Verdict::Oscillates { theorem, .. }
            | Verdict::EventuallyPositive { theorem, .. }
            | Verdict::EventuallyNegative { theorem, .. } => Some(theorem),
            _ => None,
        }
    }

    pub fn witnesses(&self) -> Option<&Witnesses> {
        match self {
            Verdict::Oscillates { witnesses, .. } => Some(witnesses),
            _ => None,
        }
    }

    /// The verdict for `-a`.
    pub fn negated(self) -> Verdict {
        match self {
            Verdict::EventuallyPositive { theorem, bound_hint } => Verdict::EventuallyNegative { theorem, bound_hint },
            Verdict::EventuallyNegative { theorem, bound_hint } => Verdict::EventuallyPositive { theorem, bound_hint },
            Verdict::Oscillates { theorem, witnesses } => Verdict::Oscillates { theorem, witnesses: witnesses.swapped() },
            v => v,
        }
    }

    pub(crate) fn shifted(self, offset: u64) -> Verdict {
        if offset == 0 {
            return self;
        }
        match self {
            Verdict::Oscillates { theorem, witnesses } => Verdict::Oscillates { theorem, witnesses: witnesses.shifted(offset) },
            Verdict::TouchingZeros { classes, note } => Verdict::TouchingZeros { classes: classes.shifted(offset), note },
            Verdict::EventuallyPositive { theorem, bound_hint } => {
                Verdict::EventuallyPositive { theorem, bound_hint: bound_hint.map(|b| b + offset) }
            }
            Verdict::EventuallyNegative { theorem, bound_hint } => {
                Verdict::EventuallyNegative { theorem, bound_hint: bound_hint.map(|b| b + offset) }
            }
            v => v,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Comparison {
    Less,
    Equal,
    Greater,
}

/// One linear congruence `coefficient * n = rhs (mod modulus)` for a term
/// reaching its minimum, with the data it came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TouchCongruence {
    /// `xi = a / b`.
    pub a: i64,
    pub b: i64,
    /// `phi / 2 pi = c / d`.
    pub c: i64,
    pub d: i64,
    /// `3` when the normalized amplitude is positive, `1` otherwise.
    #[serde(rename = "A")]
    pub big_a: i64,
    pub coefficient: i64,
    pub rhs: i64,
    pub modulus: i64,
    /// The congruence solved for `n`, when solvable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solution: Option<(i64, i64)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PositiveRealAnalysis {
    /// Enclosure of `W = sum |w_k|` after dividing by `c0`.
    pub w_total: crate::exactnum::interval::IntervalReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w_exact: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w_vs_one: Option<Comparison>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s_vs_one: Option<Comparison>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub period: Option<u64>,
    /// Residues in one period where the main term vanishes exactly.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub touching: Option<ResidueClasses>,
    pub congruences: Vec<TouchCongruence>,
    /// Sign of `c0`.
    pub main_sign: i8,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulationCheck {
    pub terms: usize,
    pub summary: SignSummary,
    /// `consistent`, `unconfirmed` or `not_applicable`.
    pub status: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub verdict: Verdict,
    /// Certifying steps, in the order they were applied.
    pub theorem_chain: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub offset: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<SpectrumReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relation: Option<RelationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub route: Option<RationalRoute>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub hits: Vec<HitVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub positive_real: Option<PositiveRealAnalysis>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simulation: Option<SimulationCheck>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(verdict: Verdict) -> Self {
        Report {
            verdict,
            theorem_chain: vec![],
            offset: None,
            spectrum: None,
            relation: None,
            route: None,
            hits: vec![],
            positive_real: None,
            simulation: None,
            notes: vec![],
        }
    }
}
