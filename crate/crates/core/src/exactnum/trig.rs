//! Certified enclosures of pi, sine, cosine and arctangent.
//!
//! Angles measured in turns (`x = 2 pi t`) are reduced exactly before any
//! series is evaluated, so rational turns such as `k/n` lose nothing to the
//! reduction.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_traits::{One, Signed, Zero};

use super::interval::{ComplexBox, Interval};
use super::rational::{int, rat, round_down, round_near, round_up, sqrt_lower, Rational};

/// Rational enclosure `3.14159265358979 < pi < 3.14159265358980` used for the
/// lattice comparisons.
pub fn pi_fixed() -> Interval {
    Interval::new(
        Rational::new(314159265358979u64.into(), 100000000000000u64.into()),
        Rational::new(314159265358980u64.into(), 100000000000000u64.into()),
    )
}

/// `atan(x)` for `|x| <= 1/2` by the alternating Taylor series.
fn atan_small(x: &Rational, prec: u32) -> Interval {
    debug_assert!(x.abs() <= rat(1, 2));
    if x.is_zero() {
        return Interval::zero();
    }
    let eps = Rational::new(1.into(), num_bigint::BigInt::one() << (prec as usize + 4));
    // powers are rounded; the accumulated rounding error stays below eps
    let work = prec + 40 + (32 - prec.leading_zeros());
    let x2 = x * x;
    let mut pw = x.clone();
    let mut sum = Rational::zero();
    let mut k = 0i64;
    loop {
        let term = &pw / int(2 * k + 1);
        if term.abs() < eps {
            // alternating series with decreasing terms: remainder bounded by this term
            let r = term.abs() + &eps;
            return Interval::new(round_down(&(&sum - &r), prec + 4), round_up(&(&sum + &r), prec + 4));
        }
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        pw = round_near(&(&pw * &x2), work);
        k += 1;
    }
}

/// Enclosure of `pi` with about `prec` bits (Machin's formula), cached per
/// precision.
pub fn pi(prec: u32) -> Interval {
    static CACHE: OnceLock<Mutex<HashMap<u32, Interval>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&prec) {
        return v.clone();
    }
    let v = machin_pi(prec);
    cache.lock().unwrap().insert(prec, v.clone());
    v
}

fn machin_pi(prec: u32) -> Interval {
    let p = prec + 8;
    let a = atan_small(&rat(1, 5), p);
    let b = atan_small(&rat(1, 239), p);
    let v = &a.scale(&int(16)) - &b.scale(&int(4));
    Interval::new(round_down(v.lo(), prec + 4), round_up(v.hi(), prec + 4))
}

/// `atan(x)` for any rational `x`.
pub fn atan(x: &Rational, prec: u32) -> Interval {
    if x.is_negative() {
        return -atan(&-x, prec);
    }
    if x > &Rational::one() {
        // atan(x) = pi/2 - atan(1/x)
        let half_pi = pi(prec + 4).scale(&rat(1, 2));
        return &half_pi - &atan(&x.recip(), prec);
    }
    if x > &rat(1, 2) {
        // atan(x) = atan(1/2) + atan((x - 1/2)/(1 + x/2)), the new argument lies in (0, 1/3]
        let y = (x - rat(1, 2)) / (Rational::one() + x / int(2));
        return &atan_small(&rat(1, 2), prec + 2) + &atan_small(&y, prec + 2);
    }
    atan_small(x, prec)
}

/// `(sin m, cos m)` for rational `|m| <= 1`, Taylor series in fixed point
/// with `P` fraction bits.
///
/// With `T_k` the computed `k`-th term in units of `2^-P`, each step
/// truncates twice, so `|T_k - 2^P m'^k / k!| <= 2k` where `m' = M / 2^P`.
fn sin_cos_point(m: &Rational, prec: u32) -> (Interval, Interval) {
    use num_bigint::BigInt;
    let p = prec as usize + 24;
    let one = BigInt::one() << p;
    let mm = (m * Rational::from_integer(one.clone())).round().to_integer();
    let delta = (m - Rational::new(mm.clone(), one.clone())).abs();
    let eps = BigInt::one() << 18;
    let mut s = BigInt::zero();
    let mut c = BigInt::zero();
    let mut term = one.clone();
    let mut k = 0i64;
    loop {
        match k % 4 {
            0 => c += &term,
            1 => s += &term,
            2 => c -= &term,
            _ => s -= &term,
        }
        k += 1;
        term = ((&term * &mm) >> p) / k;
        if term.abs() < eps {
            break;
        }
    }
    // accumulated truncation, then the tail (at most twice its first term)
    let ulps = BigInt::from(k * (k + 1)) + (term.abs() + BigInt::from(2 * k)) * 2;
    let err = Rational::new(ulps, one.clone()) + delta;
    let enclose = |v: BigInt| {
        let v = Rational::new(v, one.clone());
        Interval::new(round_down(&(&v - &err), prec + 4), round_up(&(&v + &err), prec + 4))
    };
    (clamp_unit(enclose(s)), clamp_unit(enclose(c)))
}

fn clamp_unit(x: Interval) -> Interval {
    let lo = x.lo().clone().max(int(-1));
    let hi = x.hi().clone().min(int(1));
    Interval::new(lo.min(hi.clone()), hi)
}

/// `(sin x, cos x)` for an interval `x` of small magnitude, via the midpoint
/// and the Lipschitz bound 1.
pub fn sin_cos(x: &Interval, prec: u32) -> (Interval, Interval) {
    let m = round_near(&x.mid(), prec + 8);
    let r = (x.hi() - &m).abs().max((x.lo() - &m).abs());
    let (s, c) = if m.abs() <= Rational::one() {
        sin_cos_point(&m, prec)
    } else {
        // halve until small, then double-angle back up
        let mut halvings = 0u32;
        let mut h = m.clone();
        while h.abs() > Rational::one() {
            h /= int(2);
            halvings += 1;
        }
        let p = prec + 2 * halvings + 8;
        let (mut s, mut c) = sin_cos_point(&h, p);
        for _ in 0..halvings {
            let ns = (&s * &c).scale(&int(2)).rounded(p);
            let nc = (&(&c * &c) - &(&s * &s)).rounded(p);
            s = clamp_unit(ns);
            c = clamp_unit(nc);
        }
        (s, c)
    };
    let widen = |v: Interval| clamp_unit(Interval::new(v.lo() - &r, v.hi() + &r));
    (widen(s), widen(c))
}

/// `(sin 2 pi t, cos 2 pi t)` for `t` in turns.
pub fn sin_cos_turns(t: &Interval, prec: u32) -> (Interval, Interval) {
    // exact reduction by the nearest quarter turn
    let q = (t.mid() * int(4) + rat(1, 2)).floor();
    let r = t - &Interval::point(&q / int(4));
    let quadrant = q.to_integer() % num_bigint::BigInt::from(4);
    let quadrant: i64 = ((i64::try_from(quadrant).unwrap_or(0)) % 4 + 4) % 4;
    let x = (&pi(prec + 8) * &r).scale(&int(2));
    let (s, c) = if r.is_point() && r.lo().is_zero() { (Interval::zero(), Interval::one()) } else { sin_cos(&x, prec) };
    match quadrant {
        0 => (s, c),
        1 => (c, -s),
        2 => (-s, -c),
        _ => (-c, s),
    }
}

/// `e^{2 pi i t}` as a box.
pub fn unit_turns(t: &Interval, prec: u32) -> ComplexBox {
    let (s, c) = sin_cos_turns(t, prec);
    ComplexBox::new(c, s)
}

/// Argument of the point `(re, im) != 0`, in turns, in `(-1/2, 1/2]`.
pub fn arg_turns_point(re: &Rational, im: &Rational, prec: u32) -> Interval {
    assert!(!(re.is_zero() && im.is_zero()), "argument of zero");
    let two_pi = pi(prec + 8).scale(&int(2));
    let inv_two_pi = two_pi.recip().unwrap();
    let quarter = Interval::point(rat(1, 4));
    let half = Interval::point(rat(1, 2));
    let ang = if re.abs() >= im.abs() {
        let base = &atan(&(im / re), prec + 4) * &inv_two_pi;
        if re.is_positive() {
            base
        } else if im.is_negative() {
            &base - &half
        } else {
            &base + &half
        }
    } else {
        // arg = sign(im) * pi/2 - atan(re/im)
        let base = &atan(&(re / im), prec + 4) * &inv_two_pi;
        if im.is_positive() {
            &quarter - &base
        } else {
            &(-&quarter) - &base
        }
    };
    ang.rounded(prec + 4)
}

/// Argument of every point of a box not containing zero, in turns (not reduced
/// modulo 1). `None` if the box is too close to the origin.
pub fn arg_turns(z: &ComplexBox, prec: u32) -> Option<Interval> {
    let (cr, ci) = z.center();
    let rho = (z.re.width() + z.im.width()) / int(2);
    let n2 = &cr * &cr + &ci * &ci;
    if n2.is_zero() {
        return None;
    }
    let len = sqrt_lower(&n2, prec + 8);
    if len <= rho {
        return None;
    }
    let base = arg_turns_point(&cr, &ci, prec);
    if rho.is_zero() {
        return Some(base);
    }
    // |arg z - arg c| <= asin(rho/|c|) <= (pi/2) rho/|c|, i.e. rho/(4|c|) turns
    let spread = &rho / (len * int(4));
    Some(Interval::new(base.lo() - &spread, base.hi() + &spread))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::to_f64;

    #[test]
    fn pi_enclosures_are_consistent() {
        for p in [32, 64, 200] {
            let v = pi(p);
            assert!(v.intersects(&pi_fixed()));
            let (a, b) = v.to_f64();
            assert!(a <= std::f64::consts::PI + 1e-15 && b >= std::f64::consts::PI - 1e-15);
            assert!(to_f64(&v.width()) < 2f64.powi(-(p as i32) + 2));
        }
    }

    #[test]
    fn sine_at_rational_turns() {
        for (t, sv, cv) in [(rat(1, 4), 1.0, 0.0), (rat(1, 12), 0.5, 0.866_025_403_784_438_6), (rat(7, 10), -0.951_056_516_295_153_5, -0.309_016_994_374_947_5)] {
            let (s, c) = sin_cos_turns(&Interval::point(t), 80);
            assert!(s.contains(&crate::exactnum::rational::from_f64(sv)) || to_f64(&s.width()) < 1e-20 && (to_f64(&s.mid()) - sv).abs() < 1e-15);
            assert!((to_f64(&c.mid()) - cv).abs() < 1e-15);
            assert!(to_f64(&s.width()) < 1e-20);
        }
        let (s, _) = sin_cos_turns(&Interval::point(rat(1, 2)), 64);
        assert!(s.contains_zero());
        let (s, _) = sin_cos_turns(&Interval::point(rat(37, 8)), 64);
        assert!((to_f64(&s.mid()) - (37.0 * std::f64::consts::PI / 4.0).sin()).abs() < 1e-14);
    }

    #[test]
    fn large_argument_sine() {
        let (s, c) = sin_cos(&Interval::point(int(10)), 64);
        assert!((to_f64(&s.mid()) - 10f64.sin()).abs() < 1e-13);
        assert!((to_f64(&c.mid()) - 10f64.cos()).abs() < 1e-13);
    }

    #[test]
    fn arctangent_and_argument() {
        let a = atan(&int(1), 64);
        let q = &pi(64).scale(&rat(1, 4)) - &a;
        assert!(q.contains_zero());
        let t = arg_turns_point(&int(-1), &int(-1), 64);
        assert!(t.contains(&rat(-3, 8)));
        let t = arg_turns_point(&int(0), &int(2), 64);
        assert!(t.contains(&rat(1, 4)));
        let t = arg_turns_point(&int(3), &int(-4), 64);
        assert!((to_f64(&t.mid()) - (-4f64).atan2(3.0) / std::f64::consts::TAU).abs() < 1e-15);
    }
}
