//! Certified signs of the main term over one period.

use num_traits::Signed;

use super::exact::{closed_main_term_is_zero, main_term_is_zero};
use crate::error::{Error, Result};
use crate::exactnum::rational::Rational;
use crate::exactnum::roots::precision_budget;
use crate::powersum::{Coefficient, DominantSpectrum};

const FIRST_BITS: u32 = 48;

#[derive(Debug, Clone, PartialEq)]
pub enum PointSign {
    /// The sign and a lower bound for `|b(n)|`.
    Positive(Rational),
    Negative(Rational),
    Zero,
}

impl PointSign {
    pub fn sign(&self) -> i8 {
        match self {
            PointSign::Positive(_) => 1,
            PointSign::Negative(_) => -1,
            PointSign::Zero => 0,
        }
    }

    pub fn margin(&self) -> Option<&Rational> {
        match self {
            PointSign::Positive(m) | PointSign::Negative(m) => Some(m),
            PointSign::Zero => None,
        }
    }
}

/// Decides exact vanishing of the main term at a residue.
pub struct ZeroOracle<'a> {
    spec: &'a DominantSpectrum,
    period: u64,
}

impl<'a> ZeroOracle<'a> {
    pub fn new(spec: &'a DominantSpectrum, period: u64) -> Self {
        ZeroOracle { spec, period }
    }

    pub fn is_zero(&self, n: u64) -> Result<Option<bool>> {
        if let Some(z) = main_term_is_zero(self.spec, n) {
            return Ok(Some(z));
        }
        let closed = self.spec.terms.iter().all(|t| matches!(t.coeff, Coefficient::Closed { .. }));
        if let (true, Some(form), Some(root)) = (closed, &self.spec.form, &self.spec.modulus_root) {
            if let Some(core) = form.core() {
                return closed_main_term_is_zero(core, root, self.spec.degree, n % self.period, self.period).map(Some);
            }
        }
        Ok(None)
    }
}

fn sign_at(spec: &DominantSpectrum, n: u64, bits: u32) -> Result<Option<PointSign>> {
    let v = match spec.value(n, bits) {
        Ok(v) => v,
        Err(Error::PrecisionExhausted(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    Ok(if v.lo().is_positive() {
        Some(PointSign::Positive(v.lo().clone()))
    } else if v.hi().is_negative() {
        Some(PointSign::Negative(-v.hi()))
    } else {
        None
    })
}

/// Sign of `b(n)`, refining until certified or proven zero.
pub fn certified_sign(spec: &DominantSpectrum, n: u64, oracle: &ZeroOracle) -> Result<PointSign> {
    let mut bits = FIRST_BITS;
    let mut asked = false;
    loop {
        if let Some(s) = sign_at(spec, n, bits)? {
            return Ok(s);
        }
        if !asked {
            asked = true;
            if oracle.is_zero(n)? == Some(true) {
                return Ok(PointSign::Zero);
            }
        }
        bits *= 2;
        if bits > precision_budget() {
            return Err(Error::PrecisionExhausted(format!("sign of the main term at n = {n}")));
        }
    }
}

/// Signs of `b(0), ..., b(period - 1)`. With `stop_when_mixed`, returns as soon
/// as both signs are certified; entries not examined are `None`.
pub fn scan_period(spec: &DominantSpectrum, period: u64, stop_when_mixed: bool) -> Result<Vec<Option<PointSign>>> {
    let oracle = ZeroOracle::new(spec, period);
    let mut out: Vec<Option<PointSign>> = Vec::with_capacity(period as usize);
    // a cheap pass first, so that exact zeros are only chased when needed
    for n in 0..period {
        out.push(sign_at(spec, n, FIRST_BITS)?);
    }
    let mixed = |v: &[Option<PointSign>]| {
        v.iter().any(|s| matches!(s, Some(PointSign::Positive(_)))) && v.iter().any(|s| matches!(s, Some(PointSign::Negative(_))))
    };
    if stop_when_mixed && mixed(&out) {
        return Ok(out);
    }
    for n in 0..period {
        if out[n as usize].is_none() {
            out[n as usize] = Some(certified_sign(spec, n, &oracle)?);
            if stop_when_mixed && mixed(&out) {
                break;
            }
        }
    }
    Ok(out)
}

/// Residues of each certified sign, and the least margin among them.
pub fn sign_classes(signs: &[Option<PointSign>]) -> (Vec<u64>, Vec<u64>, Option<Rational>) {
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    let mut delta: Option<Rational> = None;
    for (n, s) in signs.iter().enumerate() {
        let Some(s) = s else { continue };
        match s {
            PointSign::Positive(_) => pos.push(n as u64),
            PointSign::Negative(_) => neg.push(n as u64),
            PointSign::Zero => continue,
        }
        let m = s.margin().expect("nonzero sign");
        if delta.as_ref().is_none_or(|d| m < d) {
            delta = Some(m.clone());
        }
    }
    (pos, neg, delta)
}
