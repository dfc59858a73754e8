//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::interval::{ComplexBox, Interval};
use super::rational::{int, Rational};

/// Coefficients lowest degree first; the leading coefficient is nonzero
/// unless the polynomial is zero (empty coefficient list).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// `x - r`.
    pub fn linear_root(r: &Rational) -> Self {
        Self::new(vec![-r.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * q).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().recip())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, n: usize) -> Self {
        (0..n).fold(self.clone(), |p, _| p.derivative())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_interval(&self, x: &Interval, prec: u32) -> Interval {
        self.coeffs
            .iter()
            .rev()
            .fold(Interval::zero(), |acc, c| (&(&acc * x) + &Interval::point(c.clone())).rounded(prec))
    }

    pub fn eval_box(&self, z: &ComplexBox, prec: u32) -> ComplexBox {
        self.coeffs.iter().rev().fold(ComplexBox::zero(), |acc, c| {
            let mut v = &acc * z;
            v.re = &v.re + &Interval::point(c.clone());
            v.rounded(prec)
        })
    }

    /// Exact evaluation at the complex rational `re + i im`.
    pub fn eval_complex(&self, re: &Rational, im: &Rational) -> (Rational, Rational) {
        let mut a = Rational::zero();
        let mut b = Rational::zero();
        for c in self.coeffs.iter().rev() {
            let na = &a * re - &b * im + c;
            let nb = &a * im + &b * re;
            a = na;
            b = nb;
        }
        (a, b)
    }

    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.deg();
        if self.degree().is_none_or(|n| n < dd) {
            return (RatPoly::zero(), self.clone());
        }
        let mut r = self.coeffs.clone();
        let n = self.deg();
        let mut q = vec![Rational::zero(); n - dd + 1];
        let inv = d.lc().recip();
        for k in (0..=n - dd).rev() {
            let c = &r[k + dd] * &inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (RatPoly::new(q), RatPoly::new(r))
    }

    pub fn rem(&self, d: &RatPoly) -> RatPoly {
        self.div_rem(d).1
    }

    /// Quotient, asserting the division is exact.
    pub fn exact_div(&self, d: &RatPoly) -> RatPoly {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, p: &RatPoly) -> bool {
        p.rem(self).is_zero()
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.primitive_form();
        }
        a.monic()
    }

    /// Rescaled to integer coefficients with content 1 and positive leading coefficient.
    pub fn primitive_form(&self) -> RatPoly {
        if self.is_zero() {
            return self.clone();
        }
        let ints = self.integer_coeffs();
        RatPoly::new(ints.into_iter().map(Rational::from_integer).collect())
    }

    /// Integer coefficients of the primitive form.
    pub fn integer_coeffs(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return vec![];
        }
        let l = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let neg = ints.last().unwrap().is_negative();
        for c in &mut ints {
            *c = &*c / &g;
            if neg {
                *c = -&*c;
            }
        }
        ints
    }

    /// Yun's square-free decomposition: factors `f_i` (monic, pairwise coprime)
    /// with `self = lc * prod f_i^i`; only nonconstant factors are returned.
    pub fn squarefree_decomposition(&self) -> Vec<(RatPoly, usize)> {
        let mut out = Vec::new();
        if self.deg() == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a = f.gcd(&fp);
        let mut b = f.exact_div(&a);
        let c = fp.exact_div(&a);
        let mut d = &c - &b.derivative();
        let mut i = 1;
        loop {
            let g = b.gcd(&d);
            if g.deg() > 0 {
                out.push((g.clone(), i));
            }
            b = b.exact_div(&g);
            if b.deg() == 0 {
                break;
            }
            let c = d.exact_div(&g);
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    pub fn squarefree_part(&self) -> RatPoly {
        if self.deg() == 0 {
            return self.monic();
        }
        self.monic().exact_div(&self.gcd(&self.derivative()))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).deg() == 0
    }

    /// `x^n p(1/x)` with `n >= deg p`.
    pub fn reversed(&self, n: usize) -> RatPoly {
        assert!(self.degree().is_none_or(|d| d <= n));
        let mut v = self.coeffs.clone();
        v.resize(n + 1, Rational::zero());
        v.reverse();
        RatPoly::new(v)
    }

    /// `p(t x)`.
    pub fn scale_var(&self, t: &Rational) -> RatPoly {
        let mut pw = Rational::one();
        let mut v = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            v.push(c * &pw);
            pw *= t;
        }
        RatPoly::new(v)
    }

    /// `p(-x)`.
    pub fn negate_var(&self) -> RatPoly {
        self.scale_var(&int(-1))
    }

    pub fn pow(&self, n: u32) -> RatPoly {
        (0..n).fold(RatPoly::one(), |acc, _| &acc * self)
    }

    /// Resultant by the Euclidean remainder sequence.
    pub fn resultant(f: &RatPoly, g: &RatPoly) -> Rational {
        if f.is_zero() || g.is_zero() {
            return Rational::zero();
        }
        let (m, n) = (f.deg(), g.deg());
        if n == 0 {
            return num_traits::pow(g.lc(), m);
        }
        if m == 0 {
            return num_traits::pow(f.lc(), n);
        }
        if m < n {
            let r = RatPoly::resultant(g, f);
            return if (m * n) % 2 == 1 { -r } else { r };
        }
        // res(f, g) = (-1)^{mn} lc(g)^{m - deg r} res(g, r), r = f mod g
        let r = f.rem(g);
        if r.is_zero() {
            return Rational::zero();
        }
        let sign = if (m * n) % 2 == 1 { -Rational::one() } else { Rational::one() };
        sign * num_traits::pow(g.lc(), m - r.deg()) * RatPoly::resultant(g, &r)
    }

    /// Newton-form interpolation through `(x_i, y_i)` with distinct `x_i`.
    pub fn interpolate(points: &[(Rational, Rational)]) -> RatPoly {
        let n = points.len();
        let mut coef: Vec<Rational> = points.iter().map(|p| p.1.clone()).collect();
        for j in 1..n {
            for i in (j..n).rev() {
                coef[i] = (&coef[i] - &coef[i - 1]) / (&points[i].0 - &points[i - j].0);
            }
        }
        let mut result = RatPoly::zero();
        for i in (0..n).rev() {
            result = &(&result * &RatPoly::linear_root(&points[i].0)) + &RatPoly::constant(coef[i].clone());
        }
        result
    }

    /// Cauchy bound: every root has modulus `< 1 + max |a_i / a_n|`.
    pub fn root_bound(&self) -> Rational {
        let lc = self.lc().abs();
        let m = self.coeffs[..self.deg()].iter().map(|c| c.abs() / &lc).max().unwrap_or_else(Rational::zero);
        Rational::one() + m
    }

    /// Exact sign of `p(x)`.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        let v = self.eval(x);
        if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        }
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, o: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, o: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, o: &RatPoly) -> RatPoly {
        if self.is_zero() || o.is_zero() {
            return RatPoly::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        RatPoly::new(v)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let cs = super::rational::format_rational(&a);
            match (i, a.is_one()) {
                (0, _) => write!(f, "{cs}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{cs}*z")?,
                (_, true) => write!(f, "z^{i}")?,
                (_, false) => write!(f, "{cs}*z^{i}")?,
            }
        }
        Ok(())
    }
}
