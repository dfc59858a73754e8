//! Helpers around arbitrary-precision rationals.
//!
//! `Rational` is `num_rational::BigRational`, which keeps values reduced with a
//! positive denominator.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Parses `"p/q"` or `"p"`. Rejects zero and negative denominators and
/// fractions that are not in lowest terms.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = |why: &str| Error::InvalidInput(format!("bad rational {s:?}: {why}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad("numerator is not an integer"))?;
    let den: BigInt = den.parse().map_err(|_| bad("denominator is not an integer"))?;
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    if den.is_negative() {
        return Err(bad("negative denominator"));
    }
    if !num.gcd(&den).is_one() && !(num.is_zero() && den.is_one()) {
        return Err(bad("not reduced"));
    }
    Ok(Rational::new(num, den))
}

/// Parses a finite decimal such as `"-0.4142"` into the exact rational it denotes.
pub fn parse_decimal(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::InvalidInput(format!("bad decimal {s:?}"));
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (ip, fp) = body.split_once('.').unwrap_or((body, ""));
    if ip.is_empty() && fp.is_empty() {
        return Err(bad());
    }
    if !ip.chars().chain(fp.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{ip}{fp}");
    let n: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().map_err(|_| bad())? };
    let d = num_traits::pow(BigInt::from(10), fp.len());
    let v = Rational::new(n, d);
    Ok(if neg { -v } else { v })
}

pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Serde adapter writing rationals as `"p/q"` strings.
pub mod as_string {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(|e| serde::de::Error::custom(e.detail()))
    }
}

/// [`as_string`] for optional values.
pub mod opt_as_string {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(q: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match q {
            Some(q) => s.serialize_some(&format_rational(q)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        Option::<String>::deserialize(d)?.map(|s| parse_rational(&s).map_err(|e| serde::de::Error::custom(e.detail()))).transpose()
    }
}

/// [`as_string`] for lists.
pub mod vec_as_string {
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    use super::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for q in v {
            seq.serialize_element(&format_rational(q))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Vec::<String>::deserialize(d)?.iter().map(|s| parse_rational(s).map_err(|e| serde::de::Error::custom(e.detail()))).collect()
    }
}

/// Fractional part in `[0, 1)`.
pub fn frac(q: &Rational) -> Rational {
    q - q.floor()
}

/// `floor(log2 |q|)` up to an error of one; `None` for zero.
pub fn ilog2_approx(q: &Rational) -> Option<i64> {
    if q.is_zero() {
        return None;
    }
    Some(q.numer().bits() as i64 - q.denom().bits() as i64)
}

/// Rounds toward `-inf` to a dyadic with about `prec` significant bits.
pub fn round_down(q: &Rational, prec: u32) -> Rational {
    round_dyadic(q, prec, false)
}

/// Rounds toward `+inf` to a dyadic with about `prec` significant bits.
pub fn round_up(q: &Rational, prec: u32) -> Rational {
    round_dyadic(q, prec, true)
}

#[derive(Clone, Copy)]
enum Mode {
    Down,
    Up,
    Near,
}

/// `m * 2^e` in lowest terms.
fn dyadic(m: BigInt, e: i64) -> Rational {
    let Some(tz) = m.trailing_zeros() else {
        return Rational::zero();
    };
    let e = e + tz as i64;
    let m = m >> (tz as usize);
    if e >= 0 {
        Rational::from_integer(m << (e as usize))
    } else {
        Rational::new_raw(m, BigInt::one() << ((-e) as usize))
    }
}

/// `q` rounded to a multiple of `2^(ilog2_approx(q) - prec)`.
fn round_to_quantum(q: &Rational, prec: u32, mode: Mode) -> Rational {
    let Some(e) = ilog2_approx(q) else {
        return Rational::zero();
    };
    let shift = e - prec as i64;
    let (num, den) = if shift <= 0 {
        (q.numer() << ((-shift) as usize), q.denom().clone())
    } else {
        (q.numer().clone(), q.denom() << (shift as usize))
    };
    let k = match mode {
        Mode::Down => num.div_floor(&den),
        Mode::Up => num.div_ceil(&den),
        Mode::Near => ((num << 1usize) + &den).div_floor(&(den << 1usize)),
    };
    dyadic(k, shift)
}

fn round_dyadic(q: &Rational, prec: u32, up: bool) -> Rational {
    if q.denom().is_one() && q.numer().bits() <= prec as u64 {
        return q.clone();
    }
    round_to_quantum(q, prec, if up { Mode::Up } else { Mode::Down })
}

/// Nearest dyadic with about `prec` significant bits (no direction guarantee).
pub fn round_near(q: &Rational, prec: u32) -> Rational {
    round_to_quantum(q, prec, Mode::Near)
}

/// A dyadic `r` with `r <= sqrt(q)` and relative error about `2^-prec`.
pub fn sqrt_lower(q: &Rational, prec: u32) -> Rational {
    assert!(!q.is_negative(), "sqrt of negative rational");
    if q.is_zero() {
        return Rational::zero();
    }
    // sqrt(n/d) = sqrt(n*d*4^k)/(d*2^k)
    let k = (prec as u64 + q.denom().bits() + 2) as usize;
    let nd = q.numer() * q.denom() * (BigInt::one() << (2 * k));
    let s = nd.sqrt();
    Rational::new(s, q.denom() * (BigInt::one() << k))
}

/// A dyadic `r` with `r >= sqrt(q)`.
pub fn sqrt_upper(q: &Rational, prec: u32) -> Rational {
    let lo = sqrt_lower(q, prec);
    if &(&lo * &lo) == q {
        return lo;
    }
    let k = (prec as u64 + q.denom().bits() + 2) as usize;
    lo + Rational::new(BigInt::one(), q.denom() * (BigInt::one() << k))
}

/// Exact rational square root, if it exists.
pub fn sqrt_exact(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

pub fn to_f64(q: &Rational) -> f64 {
    match (q.numer().to_f64(), q.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // scale down both sides
            let shift = q.numer().bits().max(q.denom().bits()).saturating_sub(900) as usize;
            let n = (q.numer() >> shift).to_f64().unwrap_or(0.0);
            let d = (q.denom() >> shift).to_f64().unwrap_or(1.0);
            if d == 0.0 {
                if q.numer().sign() == Sign::Minus { f64::NEG_INFINITY } else { f64::INFINITY }
            } else {
                n / d
            }
        }
    }
}

/// Exact rational value of a finite `f64`.
pub fn from_f64(x: f64) -> Rational {
    Rational::from_float(x).unwrap_or_else(Rational::zero)
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

pub fn lcm_i64(a: i64, b: i64) -> i64 {
    a.lcm(&b)
}

pub fn mod_floor(a: i64, m: i64) -> i64 {
    a.mod_floor(&m)
}

/// Euler's totient.
pub fn totient(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_rejects_unreduced_and_zero_denominator() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert!(parse_rational("2/4").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(parse_rational("0").unwrap(), int(0));
    }

    #[test]
    fn decimal_parse() {
        assert_eq!(parse_decimal("-0.25").unwrap(), rat(-1, 4));
        assert_eq!(parse_decimal("3").unwrap(), int(3));
        assert!(parse_decimal("1.2.3").is_err());
    }

    #[test]
    fn rounding_brackets() {
        let q = rat(1, 3);
        for p in [8, 30, 100] {
            let lo = round_down(&q, p);
            let hi = round_up(&q, p);
            assert!(lo <= q && q <= hi);
            assert!(&hi - &lo <= rat(1, 1 << 6));
        }
        let big = int(-123456789);
        assert!(round_down(&big, 10) <= big && big <= round_up(&big, 10));
    }

    #[test]
    fn sqrt_bounds() {
        let two = int(2);
        let lo = sqrt_lower(&two, 60);
        let hi = sqrt_upper(&two, 60);
        assert!(&lo * &lo <= two && &hi * &hi >= two);
        assert!(&hi - &lo < rat(1, 1 << 40));
        assert_eq!(sqrt_exact(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(sqrt_exact(&rat(2, 1)), None);
    }

    #[test]
    fn totients() {
        let t: Vec<u64> = (1..=12).map(totient).collect();
        assert_eq!(t, vec![1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }
}
