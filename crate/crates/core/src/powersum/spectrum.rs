//! The terms of maximal growth: after dividing by `n^D rho^n`,
//! `a(n) = c0 + c_neg (-1)^n + sum_k w_k sin(2 pi (n xi_k + phi_k)) + r(n)`.

use std::cmp::Ordering;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::form::PowerSumForm;
use crate::error::{Error, Result};
use crate::exactnum::interval::{ComplexBox, Interval, IntervalReport};
use crate::exactnum::rational::{format_rational, frac, int, rat, sqrt_exact, Rational};
use crate::exactnum::roots::{compare_modulus, precision_budget, AlgebraicRoot};
use crate::exactnum::trig::{arg_turns, arg_turns_point, sin_cos_turns, unit_turns};
use crate::kronecker::angle::{angle_of_root, AngleDescriptor, AngleReport};

/// A phase `phi / 2 pi`, in turns.
#[derive(Debug, Clone)]
pub enum Phase {
    Exact(Rational),
    Approx(Interval),
}

impl Phase {
    pub fn enclosure(&self) -> Interval {
        match self {
            Phase::Exact(q) => Interval::point(q.clone()),
            Phase::Approx(i) => i.clone(),
        }
    }
}

/// Where the coefficient of a dominating root comes from.
#[derive(Debug, Clone)]
pub enum Coefficient {
    /// `c = re + i im`, given exactly.
    Exact { re: Rational, im: Rational },
    /// A pair contributing `w sin(2 pi (n xi + phase))` directly.
    Trig { w: Rational, phase: Phase },
    /// Leading coefficient of a term of a closed form.
    Closed { form: Arc<PowerSumForm>, index: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TermKind {
    PositiveReal,
    NegativeReal,
    Pair,
}

#[derive(Debug, Clone)]
pub struct DominantTerm {
    pub kind: TermKind,
    /// `xi` of the root with `Im c >= 0` when that sign is known.
    pub angle: AngleDescriptor,
    pub coeff: Coefficient,
}

/// `r(n)` after normalization.
#[derive(Debug, Clone, PartialEq)]
pub enum RemainderModel {
    /// Nothing is known beyond `r(n) -> 0`.
    Unknown,
    /// `r(n) = 0` for all large `n`.
    Vanishing,
    /// `|r(n)| <= K omega^n` with `0 < omega < 1`.
    Exponential { omega: Rational },
    /// `|r(n)| <= K / n`.
    Polynomial,
    /// `r(n) = scale * ratio^n` exactly, `|ratio| < 1`.
    Geometric { scale: Rational, ratio: Rational },
    /// Sampled values `r(0), r(1), ...`; says nothing about later terms.
    Sequence { values: Vec<Rational> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RemainderReport {
    Unknown,
    Vanishing,
    Exponential { omega: String },
    Polynomial,
    Geometric { scale: String, ratio: String },
    Sequence { samples: usize },
}

impl RemainderModel {
    pub fn validate(&self) -> Result<()> {
        match self {
            RemainderModel::Exponential { omega } if !(omega.is_positive() && omega < &int(1)) => {
                Err(Error::InvalidInput(format!("remainder rate {} must lie in (0, 1)", format_rational(omega))))
            }
            RemainderModel::Geometric { ratio, .. } if ratio.abs() >= int(1) => {
                Err(Error::InvalidInput(format!("geometric ratio {} must have modulus below 1", format_rational(ratio))))
            }
            _ => Ok(()),
        }
    }

    /// Exact `r(n)` where the model determines it.
    pub fn exact_value(&self, n: u64) -> Option<Rational> {
        match self {
            RemainderModel::Vanishing => Some(Rational::zero()),
            RemainderModel::Geometric { scale, ratio } => Some(scale * pow_rat(ratio, n)),
            RemainderModel::Sequence { values } => values.get(n as usize).cloned(),
            _ => None,
        }
    }

    /// Sign of `r(n)` on `n = r (mod p)` for all large `n`, if the model fixes it.
    pub fn eventual_sign_on_class(&self, r: u64, p: u64) -> Option<i8> {
        match self {
            RemainderModel::Vanishing => Some(0),
            RemainderModel::Geometric { scale, ratio } => {
                if scale.is_zero() || ratio.is_zero() {
                    return Some(0);
                }
                let s = if scale.is_positive() { 1 } else { -1 };
                if ratio.is_positive() {
                    Some(s)
                } else if p % 2 == 0 {
                    Some(if r % 2 == 0 { s } else { -s })
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// An `n0` with `|r(n)| < delta` for all `n >= n0`, when computable.
    pub fn tail_bound(&self, delta: &Rational) -> Option<u64> {
        match self {
            RemainderModel::Vanishing => Some(0),
            RemainderModel::Geometric { scale, ratio } => {
                let mut n = 0u64;
                let mut v = scale.abs();
                let q = ratio.abs();
                while &v >= delta {
                    if q.is_zero() {
                        return Some(n + 1);
                    }
                    v *= &q;
                    n += 1;
                    if n > 1 << 20 {
                        return None;
                    }
                }
                Some(n)
            }
            _ => None,
        }
    }

    pub fn report(&self) -> RemainderReport {
        match self {
            RemainderModel::Unknown => RemainderReport::Unknown,
            RemainderModel::Vanishing => RemainderReport::Vanishing,
            RemainderModel::Exponential { omega } => RemainderReport::Exponential { omega: format_rational(omega) },
            RemainderModel::Polynomial => RemainderReport::Polynomial,
            RemainderModel::Geometric { scale, ratio } => {
                RemainderReport::Geometric { scale: format_rational(scale), ratio: format_rational(ratio) }
            }
            RemainderModel::Sequence { values } => RemainderReport::Sequence { samples: values.len() },
        }
    }
}

pub fn pow_rat(q: &Rational, n: u64) -> Rational {
    let mut r = Rational::one();
    let mut b = q.clone();
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            r *= &b;
        }
        b = &b * &b;
        e >>= 1;
    }
    r
}

fn target(bits: u32) -> Rational {
    Rational::new(1.into(), num_bigint::BigInt::one() << bits as usize)
}

/// `n xi mod 1`, exact for rational angles.
pub fn multiple_turns(angle: &AngleDescriptor, n: u64, bits: u32) -> Result<Interval> {
    if let Some((k, m)) = angle.as_rational() {
        let r = ((n as i128 * k as i128).rem_euclid(m as i128)) as i64;
        return Ok(Interval::point(rat(r, m)));
    }
    let extra = 64 - n.leading_zeros();
    let t = angle.turns(bits + extra + 4)?.scale(&int(n as i64));
    let shift = t.mid().floor();
    Ok(&t - &Interval::point(shift))
}

impl DominantTerm {
    /// `c`, or for real roots the real coefficient.
    pub fn c_box(&self, bits: u32) -> Result<ComplexBox> {
        match &self.coeff {
            Coefficient::Exact { re, im } => Ok(ComplexBox::point(re.clone(), im.clone())),
            Coefficient::Trig { w, phase } => {
                let u = unit_turns(&(&phase.enclosure() - &Interval::point(rat(1, 4))), bits + 8);
                Ok(u.scale(&(w / int(2))))
            }
            Coefficient::Closed { form, index } => form.leading_coefficient(*index, bits),
        }
    }

    /// The coefficient is exactly real: always for real roots, and for pairs
    /// given by an exact real `c`.
    fn real_coefficient(&self) -> bool {
        match &self.coeff {
            Coefficient::Exact { im, .. } => im.is_zero(),
            _ => false,
        }
    }

    /// Sign of the real coefficient of a real root, refined up to the budget.
    pub fn real_sign(&self) -> Result<i8> {
        if let Coefficient::Exact { re, .. } = &self.coeff {
            return Ok(if re.is_positive() { 1 } else if re.is_negative() { -1 } else { 0 });
        }
        let mut bits = 32;
        loop {
            if let Some(s) = self.c_box(bits)?.re.sign() {
                if s != 0 {
                    return Ok(s);
                }
            }
            bits *= 2;
            if bits > precision_budget() {
                return Err(Error::PrecisionExhausted("coefficient sign uncertified".into()));
            }
        }
    }

    /// `w`: `-2|c|`, or `2c` for real `c`.
    pub fn w(&self, bits: u32) -> Result<Interval> {
        if let Coefficient::Trig { w, .. } = &self.coeff {
            return Ok(Interval::point(w.clone()));
        }
        if let Some(w) = self.w_exact() {
            return Ok(Interval::point(w));
        }
        let c = self.c_box(bits)?;
        Ok(c.abs(bits + 8).scale(&int(-2)))
    }

    pub fn w_exact(&self) -> Option<Rational> {
        match &self.coeff {
            Coefficient::Trig { w, .. } => Some(w.clone()),
            Coefficient::Exact { re, im } if im.is_zero() => Some(re * int(2)),
            Coefficient::Exact { re, im } => sqrt_exact(&(re * re + im * im)).map(|s| s * int(-2)),
            Coefficient::Closed { .. } => None,
        }
    }

    /// `phi / 2 pi`: `arg(c)/2 pi - 1/4`, or `1/4` for real `c`.
    pub fn phase(&self, bits: u32) -> Result<Interval> {
        if let Some(p) = self.phase_exact() {
            return Ok(Interval::point(p));
        }
        let quarter = Interval::point(rat(1, 4));
        match &self.coeff {
            Coefficient::Trig { phase, .. } => Ok(phase.enclosure()),
            Coefficient::Exact { re, im } => Ok(&arg_turns_point(re, im, bits + 8) - &quarter),
            Coefficient::Closed { .. } => {
                let mut b = bits;
                loop {
                    let c = self.c_box(b)?;
                    if let Some(t) = arg_turns(&c, bits + 8) {
                        if t.width() < target(bits) {
                            return Ok(&t - &quarter);
                        }
                    }
                    b *= 2;
                    if b > precision_budget() {
                        return Err(Error::PrecisionExhausted("coefficient argument".into()));
                    }
                }
            }
        }
    }

    pub fn phase_exact(&self) -> Option<Rational> {
        match &self.coeff {
            Coefficient::Trig { phase: Phase::Exact(p), .. } => Some(frac(p)),
            Coefficient::Exact { re, im } => {
                let psi = if im.is_zero() {
                    return Some(rat(1, 4));
                } else if re.is_zero() {
                    if im.is_positive() { rat(1, 4) } else { rat(3, 4) }
                } else if re.abs() == im.abs() {
                    match (re.is_positive(), im.is_positive()) {
                        (true, true) => rat(1, 8),
                        (false, true) => rat(3, 8),
                        (false, false) => rat(5, 8),
                        (true, false) => rat(7, 8),
                    }
                } else {
                    return None;
                };
                Some(frac(&(psi - rat(1, 4))))
            }
            _ => None,
        }
    }

    /// Contribution to the normalized sequence at `n`.
    pub fn value(&self, n: u64, bits: u32) -> Result<Interval> {
        let prec = bits + 16;
        match self.kind {
            TermKind::PositiveReal => self.real_part(bits),
            TermKind::NegativeReal => {
                let c = self.real_part(bits)?;
                Ok(if n % 2 == 0 { c } else { -c })
            }
            TermKind::Pair => {
                let t = multiple_turns(&self.angle, n, bits)?;
                if let Coefficient::Trig { w, phase } = &self.coeff {
                    let (s, _) = sin_cos_turns(&(&t + &phase.enclosure()), prec);
                    return Ok(s.scale(w).rounded(prec));
                }
                let c = self.c_box(bits)?;
                let (s, co) = sin_cos_turns(&t, prec);
                let v = &(&c.re * &co) - &(&c.im * &s);
                Ok(v.scale(&int(2)).rounded(prec))
            }
        }
    }

    fn real_part(&self, bits: u32) -> Result<Interval> {
        Ok(self.c_box(bits)?.re)
    }

    pub fn report(&self) -> TermReport {
        let bits = 64;
        let c = self.c_box(bits).ok();
        TermReport {
            kind: self.kind,
            angle: self.angle.report(),
            c_re: c.as_ref().map(|c| IntervalReport::from(&c.re)),
            c_im: c.as_ref().map(|c| IntervalReport::from(&c.im)),
            w: self.w(bits).ok().map(|w| IntervalReport::from(&w)),
            phi_turns: self.phase(bits).ok().map(|p| IntervalReport::from(&p)),
            real_coefficient: self.real_coefficient(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermReport {
    pub kind: TermKind,
    pub angle: AngleReport,
    pub c_re: Option<IntervalReport>,
    pub c_im: Option<IntervalReport>,
    pub w: Option<IntervalReport>,
    pub phi_turns: Option<IntervalReport>,
    pub real_coefficient: bool,
}

/// A root of smaller modulus in root-form input, kept for simulation.
#[derive(Debug, Clone)]
pub struct LowerTerm {
    /// `|beta| / rho`.
    pub ratio: Rational,
    pub term: DominantTerm,
}

#[derive(Debug, Clone)]
pub struct DominantSpectrum {
    /// Enclosure of the dominating modulus `rho`.
    pub modulus: Interval,
    pub modulus_exact: Option<Rational>,
    /// One dominating root, when the spectrum comes from a recurrence.
    pub modulus_root: Option<AlgebraicRoot>,
    pub degree: usize,
    /// Positive real first, then negative real, then pairs.
    pub terms: Vec<DominantTerm>,
    /// Dominating roots of lower coefficient degree moved into the remainder.
    pub folded: usize,
    pub remainder: RemainderModel,
    /// The remainder is exactly the sum of the `lower` terms.
    pub remainder_from_lower: bool,
    pub lower: Vec<LowerTerm>,
    pub form: Option<Arc<PowerSumForm>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub modulus: IntervalReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modulus_exact: Option<String>,
    pub degree: usize,
    /// Number of dominating roots counted with conjugates.
    pub root_count: usize,
    pub terms: Vec<TermReport>,
    pub folded: usize,
    pub remainder: RemainderReport,
}

impl DominantSpectrum {
    pub fn positive_real(&self) -> Option<&DominantTerm> {
        self.terms.iter().find(|t| t.kind == TermKind::PositiveReal)
    }

    pub fn negative_real(&self) -> Option<&DominantTerm> {
        self.terms.iter().find(|t| t.kind == TermKind::NegativeReal)
    }

    pub fn pairs(&self) -> Vec<&DominantTerm> {
        self.terms.iter().filter(|t| t.kind == TermKind::Pair).collect()
    }

    /// Number of dominating roots, conjugates counted separately.
    pub fn root_count(&self) -> usize {
        self.terms.iter().map(|t| if t.kind == TermKind::Pair { 2 } else { 1 }).sum()
    }

    /// Normalized main term `b(n)`.
    pub fn value(&self, n: u64, bits: u32) -> Result<Interval> {
        let mut v = Interval::zero();
        for t in &self.terms {
            v = &v + &t.value(n, bits)?;
        }
        Ok(v)
    }

    /// Period of `b(n)` when every angle is rational.
    pub fn period(&self) -> Option<u64> {
        let mut p: u64 = 1;
        for t in &self.terms {
            let (_, m) = match t.kind {
                TermKind::PositiveReal => (0, 1),
                TermKind::NegativeReal => (1, 2),
                TermKind::Pair => t.angle.as_rational()?,
            };
            p = p.lcm(&(m as u64));
        }
        Some(p)
    }

    pub fn report(&self) -> SpectrumReport {
        SpectrumReport {
            modulus: IntervalReport::from(&self.modulus),
            modulus_exact: self.modulus_exact.as_ref().map(format_rational),
            degree: self.degree,
            root_count: self.root_count(),
            terms: self.terms.iter().map(|t| t.report()).collect(),
            folded: self.folded,
            remainder: self.remainder.report(),
        }
    }
}

/// Groups the terms of maximal modulus and, among them, those of maximal
/// coefficient degree. `None` when the sequence is eventually zero.
pub fn dominating_spectrum(form: &Arc<PowerSumForm>) -> Result<Option<DominantSpectrum>> {
    let terms = form.terms();
    if terms.is_empty() {
        return Ok(None);
    }
    let p = form.reduced_char_poly();
    let mut best = 0usize;
    let mut group = vec![0usize];
    for k in 1..terms.len() {
        if group.contains(&k) {
            continue;
        }
        if terms[best].conjugate == Some(k) || group.iter().any(|&g| terms[g].conjugate == Some(k)) {
            group.push(k);
            continue;
        }
        match compare_modulus(&terms[k].root, &terms[best].root, &p)? {
            Ordering::Greater => {
                best = k;
                group = vec![k];
            }
            Ordering::Equal => group.push(k),
            Ordering::Less => {}
        }
    }
    // conjugates of members that were reached before their partner
    let extra: Vec<usize> = group.iter().filter_map(|&g| terms[g].conjugate).filter(|j| !group.contains(j)).collect();
    group.extend(extra);
    group.sort();
    group.dedup();

    let top_m = group.iter().map(|&k| terms[k].multiplicity).max().unwrap();
    let top: Vec<usize> = group.iter().copied().filter(|&k| terms[k].multiplicity == top_m).collect();
    let folded = group.len() - top.len();

    let mut dom = Vec::new();
    for &k in &top {
        let t = &terms[k];
        if t.root.is_real() {
            let positive = t.root.enclosure().re.is_positive();
            dom.push(DominantTerm {
                kind: if positive { TermKind::PositiveReal } else { TermKind::NegativeReal },
                angle: AngleDescriptor::rational(if positive { 0 } else { 1 }, if positive { 1 } else { 2 })?,
                coeff: Coefficient::Closed { form: form.clone(), index: k },
            });
            continue;
        }
        let j = t.conjugate.ok_or_else(|| Error::Contradiction("unpaired non-real root".into()))?;
        if j < k {
            continue;
        }
        // keep the member of the pair whose coefficient has Im c >= 0 when certified
        let mut pick = if t.root.enclosure().im.is_positive() { k } else { j };
        let c = form.leading_coefficient(pick, 48)?;
        if c.im.is_negative() {
            pick = if pick == k { j } else { k };
        }
        dom.push(DominantTerm {
            kind: TermKind::Pair,
            angle: angle_of_root(&terms[pick].root)?,
            coeff: Coefficient::Closed { form: form.clone(), index: pick },
        });
    }
    dom.sort_by_key(|t| t.kind as u8);

    let mut rho_root = terms[best].root.clone();
    let modulus = rho_root.enclosure_at(64)?.abs(72);
    let modulus_exact = rho_root.exact().map(|q| q.abs());
    let remainder = if top_m > 1 || folded > 0 {
        RemainderModel::Polynomial
    } else if group.len() == terms.len() {
        RemainderModel::Vanishing
    } else {
        RemainderModel::Exponential { omega: decay_rate(form, &group, &mut rho_root)? }
    };
    Ok(Some(DominantSpectrum {
        modulus,
        modulus_exact,
        modulus_root: Some(rho_root),
        degree: top_m - 1,
        terms: dom,
        folded,
        remainder,
        remainder_from_lower: false,
        lower: vec![],
        form: Some(form.clone()),
    }))
}

/// A rational `omega < 1` above `|beta| / rho` for every non-dominating root.
fn decay_rate(form: &PowerSumForm, group: &[usize], rho: &mut AlgebraicRoot) -> Result<Rational> {
    let mut bits = 32u32;
    loop {
        let r = rho.enclosure_at(bits)?.norm_sqr();
        let mut worst = Rational::zero();
        for (k, t) in form.terms().iter().enumerate() {
            if group.contains(&k) {
                continue;
            }
            let b = t.root.clone().enclosure_at(bits)?.norm_sqr();
            let q = b.hi() / r.lo();
            if q > worst {
                worst = q;
            }
        }
        if worst < int(1) {
            // omega^2 above the squared ratio: take the midpoint towards 1
            let w2 = (&worst + int(1)) / int(2);
            let w = crate::exactnum::rational::sqrt_upper(&w2, bits);
            if w < int(1) {
                return Ok(crate::exactnum::rational::round_up(&w, bits));
            }
        }
        bits *= 2;
        if bits > precision_budget() {
            return Err(Error::PrecisionExhausted("remainder decay rate".into()));
        }
    }
}

/// One root of root-form input.
#[derive(Debug, Clone)]
pub struct RootSpec {
    pub modulus: Rational,
    pub angle: AngleDescriptor,
    pub coeff: RootCoefficient,
}

#[derive(Debug, Clone)]
pub enum RootCoefficient {
    Complex { re: Rational, im: Rational },
    Trig { w: Rational, phase: Phase },
}

impl RootCoefficient {
    pub fn real(c: Rational) -> Self {
        RootCoefficient::Complex { re: c, im: Rational::zero() }
    }

    fn is_zero(&self) -> bool {
        match self {
            RootCoefficient::Complex { re, im } => re.is_zero() && im.is_zero(),
            RootCoefficient::Trig { w, .. } => w.is_zero(),
        }
    }
}

/// Dominant data supplied directly. A root with angle `0` or `1/2` is real; any
/// other angle stands for a conjugate pair.
#[derive(Debug, Clone)]
pub struct RootForm {
    pub degree: usize,
    pub roots: Vec<RootSpec>,
    pub remainder: Option<RemainderModel>,
}

fn spec_term(s: &RootSpec) -> Result<DominantTerm> {
    let kind = if s.angle.is_zero() {
        TermKind::PositiveReal
    } else if s.angle.is_half() {
        TermKind::NegativeReal
    } else {
        TermKind::Pair
    };
    let (angle, coeff) = match (&s.coeff, kind) {
        (RootCoefficient::Complex { re, im }, TermKind::Pair) => {
            if im.is_negative() {
                (s.angle.negated(), Coefficient::Exact { re: re.clone(), im: -im })
            } else {
                (s.angle.clone(), Coefficient::Exact { re: re.clone(), im: im.clone() })
            }
        }
        (RootCoefficient::Complex { re, im }, _) => {
            if !im.is_zero() {
                return Err(Error::InvalidInput("a real root needs a real coefficient".into()));
            }
            (s.angle.clone(), Coefficient::Exact { re: re.clone(), im: Rational::zero() })
        }
        (RootCoefficient::Trig { w, phase }, TermKind::Pair) => {
            (s.angle.clone(), Coefficient::Trig { w: w.clone(), phase: phase.clone() })
        }
        (RootCoefficient::Trig { .. }, _) => {
            return Err(Error::InvalidInput("trigonometric coefficients need a non-real root".into()));
        }
    };
    Ok(DominantTerm { kind, angle, coeff })
}

/// Two angles that certainly describe the same conjugate pair.
fn same_pair(a: &AngleDescriptor, b: &AngleDescriptor) -> bool {
    match (a, b) {
        (AngleDescriptor::Rational { .. }, AngleDescriptor::Rational { .. }) => {
            a.as_rational() == b.as_rational() || a.as_rational() == b.negated().as_rational()
        }
        (
            AngleDescriptor::QuadraticIrrational { a: a1, b: b1, r: r1 },
            AngleDescriptor::QuadraticIrrational { a: a2, b: b2, r: r2 },
        ) => {
            r1 == r2 && ((b1 == b2 && frac(&(a1 - a2)).is_zero()) || (b1 == &-b2 && frac(&(a1 + a2)).is_zero()))
        }
        _ => false,
    }
}

/// Builds the spectrum of root-form input. `None` when every coefficient is zero.
pub fn from_root_form(rf: &RootForm) -> Result<Option<DominantSpectrum>> {
    if let Some(r) = &rf.remainder {
        r.validate()?;
    }
    for s in &rf.roots {
        if !s.modulus.is_positive() {
            return Err(Error::InvalidInput("root moduli must be positive".into()));
        }
    }
    let live: Vec<&RootSpec> = rf.roots.iter().filter(|s| !s.coeff.is_zero()).collect();
    for (i, a) in live.iter().enumerate() {
        for b in &live[i + 1..] {
            if a.modulus == b.modulus && (same_pair(&a.angle, &b.angle) || (a.angle.is_zero() && b.angle.is_zero()) || (a.angle.is_half() && b.angle.is_half())) {
                return Err(Error::InvalidInput("the same root is listed twice".into()));
            }
        }
    }
    let Some(rho) = live.iter().map(|s| s.modulus.clone()).max() else {
        return Ok(None);
    };
    let mut terms = Vec::new();
    let mut lower = Vec::new();
    for s in &live {
        let t = spec_term(s)?;
        if s.modulus == rho {
            terms.push(t);
        } else {
            lower.push(LowerTerm { ratio: &s.modulus / &rho, term: t });
        }
    }
    terms.sort_by_key(|t| t.kind as u8);
    let remainder = match &rf.remainder {
        Some(r) => r.clone(),
        None => match lower.iter().map(|l| l.ratio.clone()).max() {
            Some(w) => RemainderModel::Exponential { omega: w },
            None => RemainderModel::Unknown,
        },
    };
    Ok(Some(DominantSpectrum {
        modulus: Interval::point(rho.clone()),
        modulus_exact: Some(rho),
        modulus_root: None,
        degree: rf.degree,
        terms,
        folded: 0,
        remainder_from_lower: rf.remainder.is_none(),
        remainder,
        lower,
        form: None,
    }))
}

/// Root-form data with moduli `3, 2, 2`: `c0` at `3`, and `c1`, `c2` at
/// `2 e^{2 pi i 7/10}` and `2 e^{2 pi i/5}`.
pub fn three_two_two(c0: Rational, c1: (Rational, Rational), c2: (Rational, Rational)) -> RootForm {
    let spec = |m: i64, k: i64, n: i64, c: (Rational, Rational)| RootSpec {
        modulus: int(m),
        angle: AngleDescriptor::rational(k, n).expect("valid angle"),
        coeff: RootCoefficient::Complex { re: c.0, im: c.1 },
    };
    RootForm {
        degree: 0,
        roots: vec![spec(3, 0, 1, (c0, Rational::zero())), spec(2, 7, 10, c1), spec(2, 1, 5, c2)],
        remainder: None,
    }
}
