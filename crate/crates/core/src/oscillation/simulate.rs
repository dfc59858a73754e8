//! Sign tables from interval evaluation of root-form data.

use std::collections::HashMap;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::exact::main_term_is_zero;
use crate::error::Result;
use crate::exactnum::interval::Interval;
use crate::powersum::{pow_rat, DominantSpectrum, RemainderModel};

const BITS: u32 = 64;

/// Like a sign summary, with `?` where an enclosure straddles zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalSimulation {
    pub count: usize,
    pub pattern: String,
    pub positives: usize,
    pub negatives: usize,
    pub zeros: usize,
    pub unknown: usize,
    pub sign_changes: usize,
    pub last_negative: Option<usize>,
    pub last_positive: Option<usize>,
    /// Whether the remainder was simulated exactly.
    pub complete: bool,
}

impl IntervalSimulation {
    fn from_symbols(symbols: Vec<char>, complete: bool) -> Self {
        let count = |c: char| symbols.iter().filter(|&&s| s == c).count();
        let last = |c: char| symbols.iter().rposition(|&s| s == c);
        let definite: Vec<char> = symbols.iter().copied().filter(|&s| s == '+' || s == '-').collect();
        IntervalSimulation {
            count: symbols.len(),
            positives: count('+'),
            negatives: count('-'),
            zeros: count('0'),
            unknown: count('?'),
            sign_changes: definite.windows(2).filter(|w| w[0] != w[1]).count(),
            last_negative: last('-'),
            last_positive: last('+'),
            pattern: symbols.into_iter().collect(),
            complete,
        }
    }

    /// Negative entries at indices `>= from`.
    pub fn negatives_from(&self, from: usize) -> usize {
        self.pattern.chars().skip(from).filter(|&c| c == '-').count()
    }

    pub fn positives_from(&self, from: usize) -> usize {
        self.pattern.chars().skip(from).filter(|&c| c == '+').count()
    }
}

fn symbol(v: &Interval) -> char {
    if v.is_point() && v.lo().is_zero() {
        '0'
    } else if v.lo().is_positive() {
        '+'
    } else if v.hi().is_negative() {
        '-'
    } else {
        '?'
    }
}

/// Main term values, reused across a period when every angle is rational.
struct MainTerm<'a> {
    spec: &'a DominantSpectrum,
    period: Option<u64>,
    seen: HashMap<u64, Interval>,
}

impl<'a> MainTerm<'a> {
    fn new(spec: &'a DominantSpectrum, count: usize) -> Self {
        let period = spec.period().filter(|&p| p < count as u64);
        MainTerm { spec, period, seen: HashMap::new() }
    }

    /// `b(n)`, the point zero when it vanishes exactly.
    fn at(&mut self, n: u64) -> Result<Interval> {
        let key = self.period.map(|p| n % p);
        if let Some(v) = key.and_then(|k| self.seen.get(&k)) {
            return Ok(v.clone());
        }
        let mut v = self.spec.value(n, BITS)?;
        if v.contains_zero() && main_term_is_zero(self.spec, n) == Some(true) {
            v = Interval::zero();
        }
        if let Some(k) = key {
            self.seen.insert(k, v.clone());
        }
        Ok(v)
    }
}

/// Signs of the normalized main term `b(n)` for `n < count`.
pub fn simulate_main_term(spec: &DominantSpectrum, count: usize) -> Result<IntervalSimulation> {
    let mut main = MainTerm::new(spec, count);
    let mut out = Vec::with_capacity(count);
    for n in 0..count as u64 {
        out.push(symbol(&main.at(n)?));
    }
    Ok(IntervalSimulation::from_symbols(out, true))
}

/// Signs of `a(n) / rho^n` including smaller roots and an exactly known remainder.
pub fn simulate_spectrum(spec: &DominantSpectrum, count: usize) -> Result<IntervalSimulation> {
    let mut main = MainTerm::new(spec, count);
    let mut out = Vec::with_capacity(count);
    for n in 0..count as u64 {
        let mut v = main.at(n)?;
        for l in &spec.lower {
            let s = l.term.value(n, BITS)?.scale(&pow_rat(&l.ratio, n));
            v = &v + &s;
        }
        if let Some(r) = spec.remainder.exact_value(n) {
            v = &v + &Interval::point(r);
        }
        out.push(symbol(&v.rounded(BITS + 16)));
    }
    let complete = spec.remainder_from_lower
        || matches!(spec.remainder, RemainderModel::Vanishing | RemainderModel::Geometric { .. });
    Ok(IntervalSimulation::from_symbols(out, complete))
}
