//! Arguments of characteristic roots, measured in turns: `xi = arg(alpha) / 2 pi`.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::interval::{ComplexBox, Interval, IntervalReport};
use crate::exactnum::rational::{format_rational, frac, int, rat, sqrt_exact, sqrt_lower, sqrt_upper, Rational};
use crate::exactnum::roots::{isolate_squarefree_to, locate, precision_budget, quotient_poly, root_of_unity, AlgebraicRoot};
use crate::exactnum::trig::arg_turns;

/// `xi` for one dominating root.
#[derive(Debug, Clone)]
pub enum AngleDescriptor {
    /// `xi = k/n` in lowest terms, `0 <= k < n`.
    Rational { k: i64, n: i64 },
    /// Argument of an algebraic number whose unit ratio `alpha / conj(alpha)` is
    /// certified not to be a root of unity.
    Algebraic { root: AlgebraicRoot, ratio: AlgebraicRoot, certificate: String },
    /// `xi = a + b sqrt(r)` with `r` a positive non-square rational and `b != 0`.
    QuadraticIrrational { a: Rational, b: Rational, r: Rational },
    /// Known only to lie in an interval; no exactness claim.
    Approximate(Interval),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AngleKind {
    Rational,
    Algebraic,
    QuadraticIrrational,
    Approximate,
}

/// Serializable view of an angle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AngleReport {
    pub kind: AngleKind,
    /// `"k/n"` for rational angles, a closed form for quadratic irrationals.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
    pub turns: IntervalReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
}

impl AngleDescriptor {
    pub fn rational(k: i64, n: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidInput(format!("angle denominator {n} must be positive")));
        }
        let k = k.rem_euclid(n);
        let g = k.gcd(&n).max(1);
        Ok(AngleDescriptor::Rational { k: k / g, n: n / g })
    }

    pub fn from_rational(q: &Rational) -> Result<Self> {
        let f = frac(q);
        let k: i64 = f.numer().try_into().map_err(|_| Error::InvalidInput("angle numerator too large".into()))?;
        let n: i64 = f.denom().try_into().map_err(|_| Error::InvalidInput("angle denominator too large".into()))?;
        Self::rational(k, n)
    }

    /// `a + b sqrt(r)`; collapses to a rational angle when `sqrt(r)` is rational.
    pub fn quadratic(a: Rational, b: Rational, r: Rational) -> Result<Self> {
        if r.is_negative() {
            return Err(Error::InvalidInput("radicand must be non-negative".into()));
        }
        if b.is_zero() {
            return Self::from_rational(&a);
        }
        if let Some(s) = sqrt_exact(&r) {
            return Self::from_rational(&(a + b * s));
        }
        Ok(AngleDescriptor::QuadraticIrrational { a, b, r })
    }

    pub fn kind(&self) -> AngleKind {
        match self {
            AngleDescriptor::Rational { .. } => AngleKind::Rational,
            AngleDescriptor::Algebraic { .. } => AngleKind::Algebraic,
            AngleDescriptor::QuadraticIrrational { .. } => AngleKind::QuadraticIrrational,
            AngleDescriptor::Approximate(_) => AngleKind::Approximate,
        }
    }

    pub fn as_rational(&self) -> Option<(i64, i64)> {
        match self {
            AngleDescriptor::Rational { k, n } => Some((*k, *n)),
            _ => None,
        }
    }

    pub fn as_fraction(&self) -> Option<Rational> {
        self.as_rational().map(|(k, n)| rat(k, n))
    }

    /// Certified to be irrational (rational multiples of a turn excluded).
    pub fn is_certified_irrational(&self) -> bool {
        matches!(self, AngleDescriptor::Algebraic { .. } | AngleDescriptor::QuadraticIrrational { .. })
    }

    /// `xi = 1/2` exactly.
    pub fn is_half(&self) -> bool {
        self.as_rational() == Some((1, 2))
    }

    pub fn is_zero(&self) -> bool {
        self.as_rational() == Some((0, 1))
    }

    /// Enclosure of `xi mod 1` with width below about `2^-bits`. The enclosure
    /// may extend slightly outside `[0, 1)` when `xi` is close to an integer.
    pub fn turns(&self, bits: u32) -> Result<Interval> {
        match self {
            AngleDescriptor::Rational { k, n } => Ok(Interval::point(rat(*k, *n))),
            AngleDescriptor::Algebraic { root, .. } => {
                let target = Rational::new(1.into(), num_bigint::BigInt::one() << bits as usize);
                let mut r = root.clone();
                let mut b = bits + 4;
                loop {
                    if let Some(t) = arg_turns(&r.enclosure_at(b)?, bits + 8) {
                        if t.width() <= target {
                            return Ok(reduce_unit(t));
                        }
                    }
                    b = 2 * b;
                    if b > precision_budget() {
                        return Err(Error::PrecisionExhausted("angle enclosure".into()));
                    }
                }
            }
            AngleDescriptor::QuadraticIrrational { a, b, r } => {
                let p = bits + 8 + b.abs().numer().bits() as u32;
                let lo = sqrt_lower(r, p);
                let hi = sqrt_upper(r, p);
                let s = Interval::new(lo, hi);
                let v = &Interval::point(a.clone()) + &s.scale(b);
                Ok(reduce_unit(v))
            }
            AngleDescriptor::Approximate(i) => Ok(reduce_unit(i.clone())),
        }
    }

    /// The angle of the conjugate root: `-xi mod 1`.
    pub fn negated(&self) -> AngleDescriptor {
        match self {
            AngleDescriptor::Rational { k, n } => AngleDescriptor::Rational { k: (-k).rem_euclid(*n), n: *n },
            AngleDescriptor::Algebraic { root, ratio, certificate } => {
                AngleDescriptor::Algebraic { root: root.conj(), ratio: ratio.conj(), certificate: certificate.clone() }
            }
            AngleDescriptor::QuadraticIrrational { a, b, r } => AngleDescriptor::QuadraticIrrational { a: -a, b: -b, r: r.clone() },
            AngleDescriptor::Approximate(i) => AngleDescriptor::Approximate(-i),
        }
    }

    pub fn report(&self) -> AngleReport {
        let turns = self.turns(64).unwrap_or_else(|_| Interval::new(int(0), int(1)));
        let (exact, certificate) = match self {
            AngleDescriptor::Rational { k, n } => (Some(format!("{k}/{n}")), None),
            AngleDescriptor::Algebraic { certificate, .. } => (None, Some(certificate.clone())),
            AngleDescriptor::QuadraticIrrational { a, b, r } => {
                (Some(format!("{} + {}*sqrt({})", format_rational(a), format_rational(b), format_rational(r))), None)
            }
            AngleDescriptor::Approximate(_) => (None, None),
        };
        AngleReport { kind: self.kind(), exact, turns: IntervalReport::from(&turns), certificate }
    }
}

/// Shifts an interval by an integer so that its midpoint lies in `[0, 1)`.
fn reduce_unit(t: Interval) -> Interval {
    let shift = t.mid().floor();
    if shift.is_zero() {
        return t;
    }
    &t - &Interval::point(shift)
}

/// Classifies the argument of a non-real algebraic number `alpha`.
///
/// The unit ratio `beta = alpha / conj(alpha)` has argument `2 theta` and is a
/// root of `Res_x(f(x), f(t x))` for the defining polynomial `f` of `alpha`.
/// If `beta = e^{2 pi i k/n}` then `xi` is `k/(2n)` or `k/(2n) + 1/2`, and the
/// enclosure of `arg alpha` picks one.
pub fn angle_of_root(alpha: &AlgebraicRoot) -> Result<AngleDescriptor> {
    if let Some(q) = alpha.exact() {
        return if q.is_positive() {
            AngleDescriptor::rational(0, 1)
        } else if q.is_negative() {
            AngleDescriptor::rational(1, 2)
        } else {
            Err(Error::InvalidInput("angle of zero".into()))
        };
    }
    let f = alpha.defining();
    let q = quotient_poly(f)?.squarefree_part();
    let candidates = isolate_squarefree_to(&q, 0)?;
    let mut a = alpha.clone();
    let mut ac = alpha.conj();
    let idx = locate(
        |bits| {
            let x = a.enclosure_at(bits + 4)?;
            let y = ac.enclosure_at(bits + 4)?;
            x.div(&y).map(|b| b.rounded(bits + 16)).ok_or_else(|| Error::PrecisionExhausted("unit ratio".into()))
        },
        &candidates,
    )?;
    let beta = candidates[idx].clone();
    match root_of_unity(&beta)? {
        Some((k, n)) => {
            let (k, n) = (k as i64, n as i64);
            let c1 = rat(k, 2 * n);
            let c2 = frac(&(&c1 + rat(1, 2)));
            let mut bits = 8u32;
            loop {
                let t = AngleDescriptor::Algebraic { root: alpha.clone(), ratio: beta.clone(), certificate: String::new() }.turns(bits)?;
                let near = |c: &Rational| t.contains(c) || t.contains(&(c + int(1))) || t.contains(&(c - int(1)));
                match (near(&c1), near(&c2)) {
                    (true, false) => return AngleDescriptor::from_rational(&c1),
                    (false, true) => return AngleDescriptor::from_rational(&c2),
                    (false, false) => return Err(Error::Contradiction("root-of-unity angle not in enclosure".into())),
                    _ => bits *= 2,
                }
                if bits > precision_budget() {
                    return Err(Error::PrecisionExhausted("angle disambiguation".into()));
                }
            }
        }
        None => Ok(AngleDescriptor::Algebraic {
            root: alpha.clone(),
            ratio: beta.clone(),
            certificate: format!(
                "alpha/conj(alpha) is a root of {} with no cyclotomic factor among orders of totient <= {}",
                beta.defining(),
                beta.defining().deg()
            ),
        }),
    }
}

/// Enclosure of `e^{2 pi i xi}` for a root given as a box.
pub fn unit_of(b: &ComplexBox, bits: u32) -> Option<ComplexBox> {
    let n = b.abs(bits + 8).recip()?;
    Some(b.mul_real(&n))
}
