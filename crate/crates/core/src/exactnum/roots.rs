//! Certified isolation of the complex roots of rational polynomials.
//!
//! Approximations come from floating-point Aberth iteration and, where needed,
//! Weierstrass (Durand-Kerner) steps in rounded rational arithmetic. They are
//! certified by the inclusion theorem for Weierstrass corrections: with
//! `W_i = f(z_i) / prod_{j != i} (z_i - z_j)` for monic square-free `f` of
//! degree `n`, pairwise disjoint disks `D(z_i, n |W_i|)` each hold exactly one
//! root. Every returned enclosure is a box holding exactly one root of its
//! defining polynomial, and the boxes of one isolation are pairwise disjoint.

use std::cmp::Ordering;
use std::sync::atomic::{AtomicU32, Ordering as AtomicOrdering};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use super::cyclotomic::{cyclotomic, orders_up_to_degree};
use super::interval::{ComplexBox, Interval};
use super::poly::RatPoly;
use super::rational::{from_f64, gcd_i64, int, round_near, sqrt_upper, to_f64, Rational};
use super::trig::arg_turns;
use crate::error::{Error, Result};

const DEFAULT_BUDGET: u32 = 4096;
static BUDGET: AtomicU32 = AtomicU32::new(0);

/// Maximum working precision in bits. Defaults to `OSC_PRECISION_BUDGET` or 4096.
pub fn precision_budget() -> u32 {
    let b = BUDGET.load(AtomicOrdering::Relaxed);
    if b != 0 {
        return b;
    }
    let b = std::env::var("OSC_PRECISION_BUDGET")
        .ok()
        .and_then(|s| s.trim().parse::<u32>().ok())
        .filter(|&b| b >= 64)
        .unwrap_or(DEFAULT_BUDGET);
    BUDGET.store(b, AtomicOrdering::Relaxed);
    b
}

pub fn set_precision_budget(bits: u32) {
    BUDGET.store(bits.max(64), AtomicOrdering::Relaxed);
}

fn exhausted(what: &str) -> Error {
    Error::PrecisionExhausted(format!("{what} (budget {} bits)", precision_budget()))
}

type C = (Rational, Rational);

fn c_sub(a: &C, b: &C) -> C {
    (&a.0 - &b.0, &a.1 - &b.1)
}

fn c_mul(a: &C, b: &C) -> C {
    (&a.0 * &b.0 - &a.1 * &b.1, &a.0 * &b.1 + &a.1 * &b.0)
}

fn c_norm2(a: &C) -> Rational {
    &a.0 * &a.0 + &a.1 * &a.1
}

fn c_div(a: &C, b: &C) -> Option<C> {
    let n = c_norm2(b);
    if n.is_zero() {
        return None;
    }
    let num = c_mul(a, &(b.0.clone(), -&b.1));
    Some((num.0 / &n, num.1 / n))
}

fn c_round(a: &C, prec: u32) -> C {
    (round_near(&a.0, prec), round_near(&a.1, prec))
}

/// `-log2 |x|`, roughly; large for zero.
fn neg_log2(x: &Rational) -> i64 {
    match super::rational::ilog2_approx(x) {
        Some(e) => -e,
        None => i64::MAX / 4,
    }
}

/// One algebraic number: a simple root of `defining` inside `enclosure`.
#[derive(Clone, Debug)]
pub struct AlgebraicRoot {
    defining: RatPoly,
    enclosure: ComplexBox,
    multiplicity: usize,
    real: bool,
    exact: Option<Rational>,
}

impl AlgebraicRoot {
    pub fn rational(q: Rational, multiplicity: usize) -> Self {
        AlgebraicRoot {
            defining: RatPoly::linear_root(&q),
            enclosure: ComplexBox::point(q.clone(), Rational::zero()),
            multiplicity,
            real: true,
            exact: Some(q),
        }
    }

    /// Monic square-free polynomial vanishing at this number.
    pub fn defining(&self) -> &RatPoly {
        &self.defining
    }

    pub fn enclosure(&self) -> &ComplexBox {
        &self.enclosure
    }

    /// Multiplicity in the polynomial it was isolated from.
    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    pub fn with_multiplicity(mut self, m: usize) -> Self {
        self.multiplicity = m;
        self
    }

    pub fn is_real(&self) -> bool {
        self.real
    }

    pub fn exact(&self) -> Option<&Rational> {
        self.exact.as_ref()
    }

    pub fn approx(&self) -> (f64, f64) {
        self.enclosure.to_f64()
    }

    pub fn approx_abs(&self) -> f64 {
        let (a, b) = self.approx();
        a.hypot(b)
    }

    /// Complex conjugate; shares the defining polynomial.
    pub fn conj(&self) -> AlgebraicRoot {
        AlgebraicRoot { enclosure: self.enclosure.conj(), ..self.clone() }
    }

    /// Shrinks the enclosure below width `2^-bits`.
    pub fn refine(&mut self, bits: u32) -> Result<()> {
        let target = Rational::new(BigInt::one(), BigInt::one() << bits as usize);
        if self.enclosure.width() < target {
            return Ok(());
        }
        if bits > precision_budget() {
            return Err(exhausted("root refinement"));
        }
        if self.real {
            self.refine_real(&target)
        } else {
            self.refine_complex(bits, &target)
        }
    }

    /// Enclosure of width below `2^-bits`.
    pub fn enclosure_at(&mut self, bits: u32) -> Result<ComplexBox> {
        self.refine(bits)?;
        Ok(self.enclosure.clone())
    }

    fn refine_real(&mut self, target: &Rational) -> Result<()> {
        let f = &self.defining;
        let mut lo = self.enclosure.re.lo().clone();
        let mut hi = self.enclosure.re.hi().clone();
        let slo = f.sign_at(&lo);
        if slo == 0 {
            self.set_exact(lo);
            return Ok(());
        }
        if f.sign_at(&hi) == 0 {
            self.set_exact(hi);
            return Ok(());
        }
        while &(&hi - &lo) >= target {
            let w = &hi - &lo;
            let p = (neg_log2(&w).max(0) as u32) + 8 + super::rational::ilog2_approx(&(lo.abs() + hi.abs() + Rational::one())).unwrap_or(0).max(0) as u32;
            let mut mid = round_near(&((&lo + &hi) / int(2)), p);
            if mid <= lo || mid >= hi {
                mid = (&lo + &hi) / int(2);
            }
            let s = f.sign_at(&mid);
            if s == 0 {
                self.set_exact(mid);
                return Ok(());
            }
            if s == slo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        self.enclosure = ComplexBox::real(Interval::new(lo, hi));
        Ok(())
    }

    fn set_exact(&mut self, q: Rational) {
        self.defining = RatPoly::linear_root(&q);
        self.enclosure = ComplexBox::point(q.clone(), Rational::zero());
        self.exact = Some(q);
    }

    fn refine_complex(&mut self, bits: u32, target: &Rational) -> Result<()> {
        let f = self.defining.clone();
        let fp = f.derivative();
        let n = int(f.deg() as i64);
        let (mut z_re, mut z_im) = self.enclosure.center();
        let mut stalls = 0;
        while &self.enclosure.width() >= target {
            let acc = neg_log2(&self.enclosure.width()).max(0) as u32;
            let p = (2 * acc + 32).min(precision_budget() + 64);
            let fz = f.eval_complex(&z_re, &z_im);
            let dz = fp.eval_complex(&z_re, &z_im);
            let Some(c) = c_div(&fz, &dz) else {
                break;
            };
            let r = &n * sqrt_upper(&c_norm2(&c), p + 8);
            let disk = ComplexBox::disk_hull(&z_re, &z_im, &r);
            let mut improved = false;
            if disk.subset_of(&self.enclosure) {
                let before = self.enclosure.width();
                if let Some(b) = self.enclosure.intersect(&disk) {
                    improved = b.width() < before;
                    self.enclosure = b;
                }
            }
            if fz.0.is_zero() && fz.1.is_zero() {
                self.enclosure = ComplexBox::point(z_re, z_im);
                return Ok(());
            }
            let next = c_round(&c_sub(&(z_re.clone(), z_im.clone()), &c), p);
            z_re = next.0;
            z_im = next.1;
            if improved {
                stalls = 0;
            } else {
                stalls += 1;
                if stalls > 6 {
                    break;
                }
            }
        }
        if &self.enclosure.width() < target {
            return Ok(());
        }
        // Newton did not settle: isolate again with tighter boxes
        let mut extra = bits;
        loop {
            let fresh = isolate_squarefree_to(&f, extra)?;
            let hits: Vec<&AlgebraicRoot> = fresh.iter().filter(|r| r.enclosure.intersects(&self.enclosure)).collect();
            if hits.len() == 1 {
                if let Some(b) = hits[0].enclosure.intersect(&self.enclosure) {
                    self.enclosure = b;
                }
                if &self.enclosure.width() < target {
                    return Ok(());
                }
            }
            extra = extra.saturating_mul(2);
            if extra > precision_budget() * 2 {
                return Err(exhausted("root refinement"));
            }
        }
    }
}

/// Floating-point Aberth iteration for the roots of a monic polynomial.
fn aberth_f64(f: &RatPoly) -> Vec<Complex64> {
    let n = f.deg();
    let a: Vec<Complex64> = f.coeffs().iter().map(|c| Complex64::new(to_f64(c), 0.0)).collect();
    let da: Vec<Complex64> = (1..=n).map(|i| a[i] * i as f64).collect();
    let horner = |cs: &[Complex64], z: Complex64| cs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c);
    // Fujiwara-style radius
    let mut radius: f64 = 0.0;
    for k in 1..=n {
        let c = a[n - k].norm();
        if c > 0.0 {
            radius = radius.max(c.powf(1.0 / k as f64));
        }
    }
    if !radius.is_finite() || radius == 0.0 {
        radius = 1.0;
    }
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, std::f64::consts::TAU * k as f64 / n as f64 + 0.4))
        .collect();
    for _ in 0..2000 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let fz = horner(&a, z[i]);
            let dfz = horner(&da, z[i]);
            if fz.norm() == 0.0 {
                continue;
            }
            let w = fz / dfz;
            let s: Complex64 = (0..n).filter(|&j| j != i).map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j])).sum();
            let corr = w / (Complex64::new(1.0, 0.0) - w * s);
            if corr.re.is_finite() && corr.im.is_finite() {
                z[i] -= corr;
                moved = moved.max(corr.norm() / (1.0 + z[i].norm()));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

/// Weierstrass corrections; `None` if two approximations coincide.
fn weierstrass(f: &RatPoly, z: &[C]) -> Option<Vec<C>> {
    let mut out = Vec::with_capacity(z.len());
    for i in 0..z.len() {
        let mut den: C = (Rational::one(), Rational::zero());
        for j in 0..z.len() {
            if j != i {
                den = c_mul(&den, &c_sub(&z[i], &z[j]));
            }
        }
        out.push(c_div(&f.eval_complex(&z[i].0, &z[i].1), &den)?);
    }
    Some(out)
}

/// Tries to certify the approximations; returns one root per approximation.
fn certify(f: &RatPoly, z: &[C], w: &[C], prec: u32) -> Option<Vec<AlgebraicRoot>> {
    let n = int(z.len() as i64);
    let radii: Vec<Rational> = w.iter().map(|wi| &n * sqrt_upper(&c_norm2(wi), prec)).collect();
    let boxes: Vec<ComplexBox> = z.iter().zip(&radii).map(|(zi, r)| ComplexBox::disk_hull(&zi.0, &zi.1, r)).collect();
    for i in 0..boxes.len() {
        for j in i + 1..boxes.len() {
            if boxes[i].intersects(&boxes[j]) {
                return None;
            }
        }
    }
    let mut out = Vec::with_capacity(z.len());
    for i in 0..boxes.len() {
        // the conjugate of the root in box i lies in conj(box i); if that meets
        // no other box, the root is its own conjugate
        let cb = boxes[i].conj();
        let real = (0..boxes.len()).all(|j| j == i || !cb.intersects(&boxes[j]));
        let enclosure = if real {
            ComplexBox::real(Interval::around(&z[i].0, &radii[i]))
        } else {
            boxes[i].clone()
        };
        out.push(AlgebraicRoot { defining: f.clone(), enclosure, multiplicity: 1, real, exact: None });
    }
    Some(out)
}

/// Isolates all roots of a square-free polynomial with enclosures narrower than
/// `2^-bits`.
pub fn isolate_squarefree_to(f: &RatPoly, bits: u32) -> Result<Vec<AlgebraicRoot>> {
    let f = f.monic();
    let n = f.deg();
    if n == 0 {
        return Ok(vec![]);
    }
    if n == 1 {
        let q = -f.coeff(0);
        return Ok(vec![AlgebraicRoot::rational(q, 1)]);
    }
    let target = Rational::new(BigInt::one(), BigInt::one() << bits as usize);
    let approx = aberth_f64(&f);
    let mut z: Vec<C> = approx
        .iter()
        .enumerate()
        .map(|(k, c)| {
            if c.re.is_finite() && c.im.is_finite() {
                (from_f64(c.re), from_f64(c.im))
            } else {
                (int(k as i64 + 1), int(1))
            }
        })
        .collect();
    let cap = precision_budget() + 64;
    let mut prec = 64u32;
    for _ in 0..(64 + 4 * cap) {
        let w = match weierstrass(&f, &z) {
            Some(w) => w,
            None => {
                // perturb coincident approximations
                for (k, zk) in z.iter_mut().enumerate() {
                    zk.1 += Rational::new(BigInt::from(k as i64 + 1), BigInt::one() << (prec as usize / 2));
                }
                continue;
            }
        };
        if let Some(roots) = certify(&f, &z, &w, prec + 8) {
            if roots.iter().all(|r| r.enclosure.width() < target) {
                return Ok(roots);
            }
        }
        let worst = w.iter().map(c_norm2).max().unwrap_or_else(Rational::zero);
        let acc = (neg_log2(&worst) / 2).max(0) as u32;
        prec = prec.max((2 * acc + 48).min(cap));
        if acc > cap && prec >= cap {
            return Err(exhausted("root isolation"));
        }
        z = z.iter().zip(&w).map(|(zi, wi)| c_round(&c_sub(zi, wi), prec)).collect();
    }
    Err(exhausted("root isolation did not converge"))
}

/// Isolates the roots of a square-free polynomial; rational roots are detected
/// and returned exactly, the others carry the cofactor as defining polynomial.
pub fn isolate_squarefree(f: &RatPoly) -> Result<Vec<AlgebraicRoot>> {
    let f = f.monic();
    if f.deg() == 0 {
        return Ok(vec![]);
    }
    let mut roots = isolate_squarefree_to(&f, 0)?;
    // distinct rationals with denominators dividing lc differ by at least 1/lc
    let ints = f.integer_coeffs();
    let lc = ints.last().unwrap().abs();
    let lc_bits = lc.bits() as u32 + 1;
    let mut cofactor = f.clone();
    for r in roots.iter_mut() {
        if !r.real || r.exact.is_some() {
            continue;
        }
        r.refine(lc_bits)?;
        if r.exact.is_some() {
            cofactor = cofactor.exact_div(r.defining());
            continue;
        }
        let l = Rational::from_integer(lc.clone());
        let lo = (r.enclosure.re.lo() * &l).ceil();
        let hi = (r.enclosure.re.hi() * &l).floor();
        if lo == hi {
            let q = lo / &l;
            if f.eval(&q).is_zero() {
                r.set_exact(q);
                cofactor = cofactor.exact_div(r.defining());
            }
        }
    }
    for r in roots.iter_mut() {
        if r.exact.is_none() {
            r.defining = cofactor.clone();
        }
    }
    sort_roots(&mut roots);
    Ok(roots)
}

/// Deterministic order: decreasing modulus, then increasing argument.
fn sort_roots(roots: &mut [AlgebraicRoot]) {
    roots.sort_by(|a, b| {
        let (ar, ai) = a.approx();
        let (br, bi) = b.approx();
        let ka = (a.approx_abs(), ai.atan2(ar));
        let kb = (b.approx_abs(), bi.atan2(br));
        kb.0.partial_cmp(&ka.0).unwrap_or(Ordering::Equal).then(ka.1.partial_cmp(&kb.1).unwrap_or(Ordering::Equal))
    });
}

/// All distinct roots of `p` with their multiplicities.
pub fn isolate_roots(p: &RatPoly) -> Result<Vec<AlgebraicRoot>> {
    if p.is_zero() {
        return Err(Error::InvalidInput("roots of the zero polynomial".into()));
    }
    let mut out = Vec::new();
    for (factor, m) in p.squarefree_decomposition() {
        for r in isolate_squarefree(&factor)? {
            out.push(r.with_multiplicity(m));
        }
    }
    sort_roots(&mut out);
    Ok(out)
}

/// Index of the candidate equal to a value, given that the value is known to be
/// one of the candidates. `value(bits)` must enclose the value with width
/// shrinking as `bits` grows; the candidate boxes must be pairwise disjoint.
pub fn locate<F>(mut value: F, candidates: &[AlgebraicRoot]) -> Result<usize>
where
    F: FnMut(u32) -> Result<ComplexBox>,
{
    if candidates.len() == 1 {
        return Ok(0);
    }
    let mut bits = 16u32;
    loop {
        let b = value(bits)?;
        let hits: Vec<usize> = (0..candidates.len()).filter(|&i| candidates[i].enclosure.intersects(&b)).collect();
        if hits.len() == 1 {
            return Ok(hits[0]);
        }
        if hits.is_empty() {
            return Err(Error::Contradiction("value matches none of its candidate roots".into()));
        }
        bits *= 2;
        if bits > precision_budget() {
            return Err(exhausted("root identification"));
        }
    }
}

/// Position of `a` among the isolated roots of a polynomial that `a` is a root of.
pub fn index_among(a: &AlgebraicRoot, roots: &[AlgebraicRoot]) -> Result<usize> {
    let mut t = a.clone();
    locate(|bits| t.enclosure_at(bits), roots)
}

/// Whether `g(a) = 0`.
pub fn is_root_of(a: &AlgebraicRoot, g: &RatPoly) -> Result<bool> {
    if let Some(q) = &a.exact {
        return Ok(g.eval(q).is_zero());
    }
    let h = a.defining.gcd(g);
    if h.deg() == 0 {
        return Ok(false);
    }
    if h.deg() == a.defining.deg() {
        return Ok(true);
    }
    let all = isolate_squarefree_to(&a.defining, 0)?;
    let ia = index_among(a, &all)?;
    for r in isolate_squarefree_to(&h, 0)? {
        if index_among(&r, &all)? == ia {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Exact equality of two algebraic numbers.
pub fn same_number(a: &AlgebraicRoot, b: &AlgebraicRoot) -> Result<bool> {
    if let (Some(x), Some(y)) = (&a.exact, &b.exact) {
        return Ok(x == y);
    }
    if !a.enclosure.intersects(&b.enclosure) {
        return Ok(false);
    }
    let g = a.defining.gcd(&b.defining);
    if g.deg() == 0 {
        return Ok(false);
    }
    let p = (&a.defining * &b.defining).exact_div(&g);
    let all = isolate_squarefree_to(&p, 0)?;
    Ok(index_among(a, &all)? == index_among(b, &all)?)
}

/// `Some((k, n))` with `gcd(k, n) = 1`, `0 <= k < n`, if `a = e^{2 pi i k/n}`.
pub fn root_of_unity(a: &AlgebraicRoot) -> Result<Option<(u64, u64)>> {
    if let Some(q) = &a.exact {
        return Ok(if q.is_one() {
            Some((0, 1))
        } else if q == &int(-1) {
            Some((1, 2))
        } else {
            None
        });
    }
    let mut t = a.clone();
    let nb = t.enclosure_at(24)?.norm_sqr();
    if !nb.contains(&Rational::one()) {
        return Ok(None);
    }
    let d = a.defining.deg() as u64;
    for n in orders_up_to_degree(d) {
        let phi = cyclotomic(n);
        if a.defining.gcd(&phi).deg() == 0 || !is_root_of(a, &phi)? {
            continue;
        }
        // a is a primitive n-th root of unity; pin down k from the argument
        let mut bits = 16u32;
        loop {
            let b = t.enclosure_at(bits)?;
            if let Some(arg) = arg_turns(&b, bits + 8) {
                let nq = int(n as i64);
                let lo = (arg.lo() * &nq).ceil();
                let hi = (arg.hi() * &nq).floor();
                let cands: Vec<i64> = num_iter(&lo, &hi)
                    .into_iter()
                    .filter(|k| gcd_i64(k.rem_euclid(n as i64), n as i64) == 1)
                    .collect();
                if cands.len() == 1 {
                    return Ok(Some((cands[0].rem_euclid(n as i64) as u64, n)));
                }
            }
            bits *= 2;
            if bits > precision_budget() {
                return Err(exhausted("root of unity index"));
            }
        }
    }
    Ok(None)
}

fn num_iter(lo: &Rational, hi: &Rational) -> Vec<i64> {
    let lo: i64 = lo.to_integer().try_into().unwrap_or(i64::MIN / 2);
    let hi: i64 = hi.to_integer().try_into().unwrap_or(i64::MAX / 2);
    if hi < lo || hi - lo > 64 {
        return if hi < lo { vec![] } else { (lo..lo + 65).collect() };
    }
    (lo..=hi).collect()
}

/// Polynomial in `t` whose roots are the products `alpha_i alpha_j` of roots of `p`:
/// `Res_x(p(x), x^n p(t/x))`.
pub fn product_poly(p: &RatPoly) -> RatPoly {
    let n = p.deg();
    let pts: Vec<(Rational, Rational)> = (0..=(n * n))
        .map(|j| {
            let t = int(j as i64);
            let mut cs = vec![Rational::zero(); n + 1];
            let mut tp = Rational::one();
            for i in 0..=n {
                cs[n - i] = p.coeff(i) * &tp;
                tp *= &t;
            }
            (t, RatPoly::resultant(p, &RatPoly::new(cs)))
        })
        .collect();
    RatPoly::interpolate(&pts)
}

/// Polynomial in `t` whose roots are the quotients `alpha_j / alpha_i` of roots
/// of `p`: `Res_x(p(x), p(t x))`. Requires `p(0) != 0`.
pub fn quotient_poly(p: &RatPoly) -> Result<RatPoly> {
    if p.coeff(0).is_zero() {
        return Err(Error::Hypothesis("quotient polynomial needs p(0) != 0".into()));
    }
    let n = p.deg();
    let pts: Vec<(Rational, Rational)> = (1..=(n * n + 1))
        .map(|j| {
            let t = int(j as i64);
            (t.clone(), RatPoly::resultant(p, &p.scale_var(&t)))
        })
        .collect();
    Ok(RatPoly::interpolate(&pts))
}

/// Compares `|a|` and `|b|` exactly, for roots `a`, `b` of the real polynomial `p`.
pub fn compare_modulus(a: &AlgebraicRoot, b: &AlgebraicRoot, p: &RatPoly) -> Result<Ordering> {
    let mut ta = a.clone();
    let mut tb = b.clone();
    for bits in [16u32, 32, 64] {
        let na = ta.enclosure_at(bits)?.norm_sqr();
        let nb = tb.enclosure_at(bits)?.norm_sqr();
        if na.certainly_lt(&nb) {
            return Ok(Ordering::Less);
        }
        if na.certainly_gt(&nb) {
            return Ok(Ordering::Greater);
        }
    }
    // |a|^2 = a conj(a) and |b|^2 are both products of two roots of p
    let m = product_poly(&p.squarefree_part()).squarefree_part();
    let all = isolate_squarefree_to(&m, 0)?;
    let ia = locate(|bits| Ok(ta.enclosure_at(bits + 4)?.norm_sqr().rounded(bits + 16).into()), &all)?;
    let ib = locate(|bits| Ok(tb.enclosure_at(bits + 4)?.norm_sqr().rounded(bits + 16).into()), &all)?;
    if ia == ib {
        return Ok(Ordering::Equal);
    }
    let mut bits = 128u32;
    loop {
        let na = ta.enclosure_at(bits)?.norm_sqr();
        let nb = tb.enclosure_at(bits)?.norm_sqr();
        if na.certainly_lt(&nb) {
            return Ok(Ordering::Less);
        }
        if na.certainly_gt(&nb) {
            return Ok(Ordering::Greater);
        }
        bits *= 2;
        if bits > precision_budget() {
            return Err(exhausted("modulus comparison"));
        }
    }
}

impl From<Interval> for ComplexBox {
    fn from(x: Interval) -> Self {
        ComplexBox::real(x)
    }
}
