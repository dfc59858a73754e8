//! Closed intervals and axis-parallel complex boxes with rational endpoints.
//!
//! Arithmetic is exact; callers bound denominator growth with `rounded`,
//! which widens outward to dyadic endpoints.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{format_rational, round_down, round_up, sqrt_lower, sqrt_upper, to_f64, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Interval { lo, hi }
    }

    pub fn point(q: Rational) -> Self {
        Interval { lo: q.clone(), hi: q }
    }

    pub fn zero() -> Self {
        Self::point(Rational::zero())
    }

    pub fn one() -> Self {
        Self::point(Rational::one())
    }

    /// `[c - r, c + r]`.
    pub fn around(c: &Rational, r: &Rational) -> Self {
        Interval::new(c - r, c + r)
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn mid(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// Upper bound on the distance from the midpoint to an endpoint.
    pub fn radius(&self) -> Rational {
        self.width() / Rational::from_integer(2.into())
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, q: &Rational) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    /// `Some(sign)` when the sign is certified; exact zero only for the point `[0,0]`.
    pub fn sign(&self) -> Option<i8> {
        if self.is_positive() {
            Some(1)
        } else if self.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn subset_of(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        if !self.intersects(other) {
            return None;
        }
        Some(Interval {
            lo: self.lo.clone().max(other.lo.clone()),
            hi: self.hi.clone().min(other.hi.clone()),
        })
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
        }
    }

    pub fn certainly_lt(&self, other: &Interval) -> bool {
        self.hi < other.lo
    }

    pub fn certainly_gt(&self, other: &Interval) -> bool {
        self.lo > other.hi
    }

    pub fn abs(&self) -> Interval {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            -self.clone()
        } else {
            Interval { lo: Rational::zero(), hi: self.hi.clone().max(-self.lo.clone()) }
        }
    }

    pub fn square(&self) -> Interval {
        let a = self.abs();
        Interval { lo: &a.lo * &a.lo, hi: &a.hi * &a.hi }
    }

    pub fn scale(&self, q: &Rational) -> Interval {
        let a = &self.lo * q;
        let b = &self.hi * q;
        if a <= b { Interval { lo: a, hi: b } } else { Interval { lo: b, hi: a } }
    }

    /// `1/x`; `None` when the interval contains zero.
    pub fn recip(&self) -> Option<Interval> {
        if self.contains_zero() {
            return None;
        }
        Some(Interval { lo: self.hi.recip(), hi: self.lo.recip() })
    }

    pub fn sqrt(&self, prec: u32) -> Interval {
        let lo = if self.lo.is_positive() { sqrt_lower(&self.lo, prec) } else { Rational::zero() };
        let hi = if self.hi.is_positive() { sqrt_upper(&self.hi, prec) } else { Rational::zero() };
        Interval { lo, hi }
    }

    pub fn pow(&self, n: u32, prec: u32) -> Interval {
        let mut result = Interval::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = (&result * &base).rounded(prec);
            }
            base = (&base * &base).rounded(prec);
            e >>= 1;
        }
        result
    }

    /// Outward rounding to dyadic endpoints with about `prec` significant bits.
    pub fn rounded(&self, prec: u32) -> Interval {
        Interval { lo: round_down(&self.lo, prec), hi: round_up(&self.hi, prec) }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (to_f64(&self.lo), to_f64(&self.hi))
    }
}

impl From<Rational> for Interval {
    fn from(q: Rational) -> Self {
        Interval::point(q)
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.to_f64();
        write!(f, "[{a:.6e}, {b:.6e}]")
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", format_rational(&self.lo), format_rational(&self.hi))
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval { lo: -self.hi, hi: -self.lo }
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        -self.clone()
    }
}

impl Add for &Interval {
    type Output = Interval;
    fn add(self, o: &Interval) -> Interval {
        Interval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }
}

impl Sub for &Interval {
    type Output = Interval;
    fn sub(self, o: &Interval) -> Interval {
        Interval { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo }
    }
}

impl Mul for &Interval {
    type Output = Interval;
    fn mul(self, o: &Interval) -> Interval {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let mut lo = c[0].clone();
        let mut hi = c[0].clone();
        for v in &c[1..] {
            if *v < lo {
                lo = v.clone();
            }
            if *v > hi {
                hi = v.clone();
            }
        }
        Interval { lo, hi }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident, $t:ty) => {
        impl $tr for $t {
            type Output = $t;
            fn $m(self, o: $t) -> $t {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add, Interval);
forward_owned!(Sub, sub, Interval);
forward_owned!(Mul, mul, Interval);

/// Axis-parallel box in the complex plane.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ComplexBox {
    pub re: Interval,
    pub im: Interval,
}

impl ComplexBox {
    pub fn new(re: Interval, im: Interval) -> Self {
        ComplexBox { re, im }
    }

    pub fn point(re: Rational, im: Rational) -> Self {
        ComplexBox { re: Interval::point(re), im: Interval::point(im) }
    }

    pub fn real(x: Interval) -> Self {
        ComplexBox { re: x, im: Interval::zero() }
    }

    pub fn zero() -> Self {
        Self::real(Interval::zero())
    }

    pub fn one() -> Self {
        Self::real(Interval::one())
    }

    /// Bounding box of the closed disk with centre `(re, im)` and radius `r`.
    pub fn disk_hull(re: &Rational, im: &Rational, r: &Rational) -> Self {
        ComplexBox { re: Interval::around(re, r), im: Interval::around(im, r) }
    }

    pub fn center(&self) -> (Rational, Rational) {
        (self.re.mid(), self.im.mid())
    }

    /// Largest side length.
    pub fn width(&self) -> Rational {
        self.re.width().max(self.im.width())
    }

    pub fn conj(&self) -> ComplexBox {
        ComplexBox { re: self.re.clone(), im: -&self.im }
    }

    pub fn intersects(&self, o: &ComplexBox) -> bool {
        self.re.intersects(&o.re) && self.im.intersects(&o.im)
    }

    pub fn intersect(&self, o: &ComplexBox) -> Option<ComplexBox> {
        Some(ComplexBox { re: self.re.intersect(&o.re)?, im: self.im.intersect(&o.im)? })
    }

    pub fn subset_of(&self, o: &ComplexBox) -> bool {
        self.re.subset_of(&o.re) && self.im.subset_of(&o.im)
    }

    pub fn contains_point(&self, re: &Rational, im: &Rational) -> bool {
        self.re.contains(re) && self.im.contains(im)
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    /// Enclosure of `|z|^2`.
    pub fn norm_sqr(&self) -> Interval {
        &self.re.square() + &self.im.square()
    }

    pub fn abs(&self, prec: u32) -> Interval {
        self.norm_sqr().sqrt(prec)
    }

    pub fn scale(&self, q: &Rational) -> ComplexBox {
        ComplexBox { re: self.re.scale(q), im: self.im.scale(q) }
    }

    pub fn mul_real(&self, x: &Interval) -> ComplexBox {
        ComplexBox { re: &self.re * x, im: &self.im * x }
    }

    /// `1/z`; `None` if the box touches zero.
    pub fn recip(&self) -> Option<ComplexBox> {
        let n = self.norm_sqr().recip()?;
        Some(ComplexBox { re: &self.re * &n, im: -(&self.im * &n) })
    }

    pub fn div(&self, o: &ComplexBox) -> Option<ComplexBox> {
        Some(self * &o.recip()?)
    }

    pub fn pow(&self, n: u32, prec: u32) -> ComplexBox {
        let mut result = ComplexBox::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = (&result * &base).rounded(prec);
            }
            base = (&base * &base).rounded(prec);
            e >>= 1;
        }
        result
    }

    pub fn rounded(&self, prec: u32) -> ComplexBox {
        ComplexBox { re: self.re.rounded(prec), im: self.im.rounded(prec) }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (to_f64(&self.re.mid()), to_f64(&self.im.mid()))
    }
}

impl fmt::Debug for ComplexBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} + i{:?}", self.re, self.im)
    }
}

impl Add for &ComplexBox {
    type Output = ComplexBox;
    fn add(self, o: &ComplexBox) -> ComplexBox {
        ComplexBox { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl Sub for &ComplexBox {
    type Output = ComplexBox;
    fn sub(self, o: &ComplexBox) -> ComplexBox {
        ComplexBox { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl Mul for &ComplexBox {
    type Output = ComplexBox;
    fn mul(self, o: &ComplexBox) -> ComplexBox {
        ComplexBox {
            re: &(&self.re * &o.re) - &(&self.im * &o.im),
            im: &(&self.re * &o.im) + &(&self.im * &o.re),
        }
    }
}

impl Neg for &ComplexBox {
    type Output = ComplexBox;
    fn neg(self) -> ComplexBox {
        ComplexBox { re: -&self.re, im: -&self.im }
    }
}

forward_owned!(Add, add, ComplexBox);
forward_owned!(Sub, sub, ComplexBox);
forward_owned!(Mul, mul, ComplexBox);

/// Serializable snapshot of an interval, endpoints as `"p/q"` strings plus a float preview.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntervalReport {
    pub lo: String,
    pub hi: String,
    pub approx: f64,
}

impl From<&Interval> for IntervalReport {
    fn from(x: &Interval) -> Self {
        let lo = super::rational::round_down(x.lo(), 64);
        let hi = super::rational::round_up(x.hi(), 64);
        IntervalReport { lo: format_rational(&lo), hi: format_rational(&hi), approx: to_f64(&x.mid()) }
    }
}

#[cfg(test)]
mod tests {
    use super::super::rational::{int, rat};
    use super::*;

    #[test]
    fn arithmetic_contains_exact_results() {
        let a = Interval::new(rat(-1, 2), rat(3, 2));
        let b = Interval::new(rat(2, 1), rat(5, 2));
        let p = &a * &b;
        assert_eq!(p, Interval::new(rat(-5, 4), rat(15, 4)));
        assert!(a.contains_zero());
        assert_eq!(a.sign(), None);
        assert_eq!(b.sign(), Some(1));
        assert_eq!(a.abs(), Interval::new(int(0), rat(3, 2)));
        assert!(b.recip().unwrap().contains(&rat(4, 9)));
    }

    #[test]
    fn complex_division_encloses() {
        let z = ComplexBox::point(int(3), int(4));
        let w = ComplexBox::point(int(3), int(-4));
        let q = z.div(&w).unwrap();
        // (3+4i)/(3-4i) = (-7+24i)/25
        assert!(q.contains_point(&rat(-7, 25), &rat(24, 25)));
    }

    #[test]
    fn rounding_widens() {
        let x = Interval::point(rat(1, 3));
        let r = x.rounded(20);
        assert!(x.subset_of(&r));
        let z = ComplexBox::point(rat(1, 7), rat(-2, 7)).pow(9, 40);
        let (re, im) = z.to_f64();
        let exact = num_complex_pow(1.0 / 7.0, -2.0 / 7.0, 9);
        assert!((re - exact.0).abs() < 1e-9 && (im - exact.1).abs() < 1e-9);
    }

    fn num_complex_pow(a: f64, b: f64, n: u32) -> (f64, f64) {
        let (mut x, mut y) = (1.0, 0.0);
        for _ in 0..n {
            (x, y) = (x * a - y * b, x * b + y * a);
        }
        (x, y)
    }
}
