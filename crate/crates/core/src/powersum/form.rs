//! Closed forms `a(n) = sum_k C_k(n) alpha_k^n` from the generating function.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::interval::{ComplexBox, Interval};
use crate::exactnum::poly::RatPoly;
use crate::exactnum::rational::{int, Rational};
use crate::exactnum::roots::{isolate_roots, locate, precision_budget, AlgebraicRoot};

use super::recurrence::Recurrence;

/// One characteristic root with a nonzero coefficient polynomial.
#[derive(Debug, Clone)]
pub struct PowerSumTerm {
    pub root: AlgebraicRoot,
    /// `deg C_k + 1`.
    pub multiplicity: usize,
    /// Index of the term at the conjugate root, for non-real roots.
    pub conjugate: Option<usize>,
}

/// `a(n)` for `n >= offset` equals `sum_k C_k(n - offset) alpha_k^(n - offset)`.
///
/// The generating function of the shifted sequence is `num / den` in lowest
/// terms with `den(0) = 1`, so the `alpha_k` are exactly the reciprocals of the
/// roots of `den` and `deg C_k` is one less than the pole order. Roots whose
/// coefficient vanishes have been cancelled exactly by the gcd.
#[derive(Debug, Clone)]
pub struct PowerSumForm {
    prefix: Vec<Rational>,
    num: RatPoly,
    den: RatPoly,
    terms: Vec<PowerSumTerm>,
    core: Option<Recurrence>,
}

/// Binomial coefficient as a rational.
pub fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let mut r = Rational::one();
    for i in 0..k {
        r = r * int((n - i) as i64) / int((i + 1) as i64);
    }
    r
}

/// Splits the sequence into its transient prefix and a power sum.
pub fn to_power_sum(rec: &Recurrence) -> Result<PowerSumForm> {
    let (prefix, core) = rec.core();
    let Some(core) = core else {
        return Ok(PowerSumForm { prefix, num: RatPoly::zero(), den: RatPoly::one(), terms: vec![], core: None });
    };
    let d = core.order();
    let mut q = vec![int(1)];
    q.extend(core.coeffs().iter().map(|s| -s));
    let q = RatPoly::new(q);
    let init = RatPoly::new(core.initials().to_vec());
    let full = &init * &q;
    let p = RatPoly::new(full.coeffs().iter().take(d).cloned().collect());
    if p.is_zero() {
        return Ok(PowerSumForm { prefix, num: RatPoly::zero(), den: RatPoly::one(), terms: vec![], core: Some(core) });
    }
    let g = p.gcd(&q);
    let mut num = p.exact_div(&g);
    let mut den = q.exact_div(&g);
    let c0 = den.coeff(0);
    num = num.scale(&c0.recip());
    den = den.scale(&c0.recip());
    let e = den.deg();
    let reduced = den.reversed(e);
    let roots = isolate_roots(&reduced)?;
    let mut terms: Vec<PowerSumTerm> =
        roots.into_iter().map(|r| PowerSumTerm { multiplicity: r.multiplicity(), root: r, conjugate: None }).collect();
    pair_conjugates(&mut terms)?;
    Ok(PowerSumForm { prefix, num, den, terms, core: Some(core) })
}

fn pair_conjugates(terms: &mut [PowerSumTerm]) -> Result<()> {
    for i in 0..terms.len() {
        if terms[i].root.is_real() || terms[i].conjugate.is_some() {
            continue;
        }
        let idx: Vec<usize> =
            (0..terms.len()).filter(|&j| !terms[j].root.is_real() && terms[j].multiplicity == terms[i].multiplicity).collect();
        let cands: Vec<AlgebraicRoot> = idx.iter().map(|&j| terms[j].root.clone()).collect();
        let mut c = terms[i].root.conj();
        let j = idx[locate(|bits| c.enclosure_at(bits), &cands)?];
        if j == i {
            return Err(Error::Contradiction("non-real root equal to its conjugate".into()));
        }
        terms[i].conjugate = Some(j);
        terms[j].conjugate = Some(i);
    }
    Ok(())
}

impl PowerSumForm {
    pub fn offset(&self) -> usize {
        self.prefix.len()
    }

    pub fn prefix(&self) -> &[Rational] {
        &self.prefix
    }

    /// The recurrence satisfied by `a(offset + n)`.
    pub fn core(&self) -> Option<&Recurrence> {
        self.core.as_ref()
    }

    pub fn terms(&self) -> &[PowerSumTerm] {
        &self.terms
    }

    /// Eventually zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn numerator(&self) -> &RatPoly {
        &self.num
    }

    pub fn denominator(&self) -> &RatPoly {
        &self.den
    }

    /// Monic polynomial whose roots are the `alpha_k` with multiplicity.
    pub fn reduced_char_poly(&self) -> RatPoly {
        self.den.reversed(self.den.deg())
    }

    /// Coefficients `e_1, ..., e_m` of `sum_j e_j / (1 - alpha z)^j` in the
    /// partial fraction expansion; then `C(n) = sum_j e_j binom(n + j - 1, j - 1)`.
    pub fn partial_fractions(&self, k: usize, bits: u32) -> Result<Vec<ComplexBox>> {
        let term = &self.terms[k];
        let m = term.multiplicity;
        let prec = bits + 48;
        let mut root = term.root.clone();
        let alpha = root.enclosure_at(bits + 8)?;
        let inv = alpha.recip().ok_or_else(|| Error::Contradiction("zero characteristic root".into()))?;
        // coefficients of u^t in r((1 - u)/alpha) for t < limit
        let shifted = |r: &RatPoly, limit: usize| -> Vec<ComplexBox> {
            let mut out = vec![ComplexBox::zero(); limit];
            let mut pw = ComplexBox::one();
            for i in 0..=r.deg() {
                let ci = r.coeff(i);
                if !ci.is_zero() {
                    let base = pw.scale(&ci);
                    for (t, slot) in out.iter_mut().enumerate().take(limit.min(i + 1)) {
                        let b = binomial(i, t) * if t % 2 == 0 { int(1) } else { int(-1) };
                        *slot = (&*slot + &base.scale(&b)).rounded(prec);
                    }
                }
                pw = (&pw * &inv).rounded(prec);
            }
            out
        };
        let qh = shifted(&self.den, 2 * m);
        let ph = shifted(&self.num, m);
        let h: Vec<ComplexBox> = qh[m..].to_vec();
        let h0 = h[0].recip().ok_or_else(|| Error::PrecisionExhausted("partial fraction denominator".into()))?;
        let mut f: Vec<ComplexBox> = Vec::with_capacity(m);
        for t in 0..m {
            let mut acc = ph[t].clone();
            for s in 1..=t {
                acc = &acc - &(&h[s] * &f[t - s]);
            }
            f.push((&acc * &h0).rounded(prec));
        }
        Ok((1..=m).map(|j| f[m - j].clone()).collect())
    }

    /// Leading coefficient `c_k` of `C_k(n)`, as a box of width below `2^-bits`.
    pub fn leading_coefficient(&self, k: usize, bits: u32) -> Result<ComplexBox> {
        let m = self.terms[k].multiplicity;
        let fact: Rational = (1..m).map(|i| int(i as i64)).product();
        let target = Rational::new(1.into(), num_bigint::BigInt::one() << bits as usize);
        let mut b = bits + 16;
        loop {
            if let Ok(e) = self.partial_fractions(k, b) {
                let c = e[m - 1].scale(&fact.recip());
                if c.width() < target {
                    return Ok(c);
                }
            }
            b *= 2;
            if b > precision_budget() {
                return Err(Error::PrecisionExhausted("leading coefficient".into()));
            }
        }
    }

    /// Enclosure of `a(n)` from the closed form.
    pub fn eval(&self, n: usize, bits: u32) -> Result<Interval> {
        if n < self.offset() {
            return Ok(Interval::point(self.prefix[n].clone()));
        }
        let n = n - self.offset();
        let prec = bits + 48;
        let mut total = Interval::zero();
        for (k, term) in self.terms.iter().enumerate() {
            if term.conjugate.is_some_and(|j| j < k) {
                continue;
            }
            let e = self.partial_fractions(k, bits)?;
            let mut c = ComplexBox::zero();
            for (j, ej) in e.iter().enumerate() {
                c = &c + &ej.scale(&binomial(n + j, j));
            }
            let mut root = term.root.clone();
            let p = root.enclosure_at(bits + 8)?.pow(n as u32, prec);
            let v = (&c * &p).rounded(prec).re;
            total = &total + &if term.conjugate.is_some() { v.scale(&int(2)) } else { v };
        }
        Ok(total)
    }
}
