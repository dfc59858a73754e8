//! Exact decisions about the main term at rational angles.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::verdict::TouchCongruence;
use crate::error::Result;
use crate::exactnum::cyclotomic::cyclotomic;
use crate::exactnum::poly::RatPoly;
use crate::exactnum::rational::{frac, int, rat, Rational};
use crate::kronecker::relation::power_root;
use crate::powersum::{to_power_sum, Coefficient, DominantSpectrum, DominantTerm, Phase, Recurrence, TermKind};
use crate::exactnum::roots::{is_root_of, AlgebraicRoot};
use crate::unitlattice::torus::crt_solve;

/// `sum coef * e^{2 pi i turn}` with rational turns.
type Monomials = Vec<(Rational, Rational)>;

fn term_monomials(t: &DominantTerm, n: u64) -> Option<Monomials> {
    let q = rat(1, 4);
    match (&t.coeff, t.kind) {
        (Coefficient::Exact { re, .. }, TermKind::PositiveReal) => Some(vec![(re.clone(), Rational::zero())]),
        (Coefficient::Exact { re, .. }, TermKind::NegativeReal) => {
            Some(vec![(if n % 2 == 0 { re.clone() } else { -re }, Rational::zero())])
        }
        (Coefficient::Exact { re, im }, TermKind::Pair) => {
            let s = t.angle.as_fraction()? * int(n as i64);
            // c e^{2 pi i s} + conj(c) e^{-2 pi i s}, with i = e^{2 pi i / 4}
            Some(vec![(re.clone(), s.clone()), (im.clone(), &s + &q), (re.clone(), -&s), (-im, -&s - &q)])
        }
        (Coefficient::Trig { w, phase: Phase::Exact(p) }, TermKind::Pair) => {
            let s = t.angle.as_fraction()? * int(n as i64) + p;
            // w sin(2 pi s) = (w/2) (e^{2 pi i (s - 1/4)} - e^{2 pi i (-s - 1/4)})
            let h = w / int(2);
            Some(vec![(h.clone(), &s - &q), (-h, -&s - &q)])
        }
        _ => None,
    }
}

/// Whether `sum coef e^{2 pi i turn}` is zero, by reduction modulo the
/// cyclotomic polynomial of the common denominator.
pub fn monomials_vanish(m: &Monomials) -> bool {
    let l = m.iter().fold(num_bigint::BigInt::from(1), |acc, (_, t)| acc.lcm(t.denom()));
    let l: u64 = match u64::try_from(l) {
        Ok(l) if l <= 1 << 16 => l,
        _ => return false,
    };
    let mut coeffs = vec![Rational::zero(); l as usize];
    for (c, t) in m {
        let e = (frac(t) * int(l as i64)).to_integer();
        let e: usize = e.try_into().expect("exponent below l");
        coeffs[e] += c;
    }
    RatPoly::new(coeffs).rem(&cyclotomic(l)).is_zero()
}

/// Exact zero test for the main term at `n`, when every coefficient and phase
/// is an exact rational and every angle is rational. `None` otherwise.
pub fn main_term_is_zero(spec: &DominantSpectrum, n: u64) -> Option<bool> {
    let mut all = Vec::new();
    for t in &spec.terms {
        all.extend(term_monomials(t, n)?);
    }
    Some(monomials_vanish(&all))
}

/// Exact zero test for the main term of a recurrence at residue `r` of period
/// `p`: the subsequence `a(r + k p)` has the root `rho^p` with multiplicity
/// `degree + 1` exactly when the main term does not vanish there.
pub fn closed_main_term_is_zero(core: &Recurrence, dominant: &AlgebraicRoot, degree: usize, r: u64, p: u64) -> Result<bool> {
    let gamma = power_root(dominant, p as i64)?;
    let sub = core.subsequence(r as usize, p as usize)?;
    let form = to_power_sum(&sub)?;
    if form.is_zero() {
        return Ok(true);
    }
    let red = form.reduced_char_poly();
    for (f, mult) in red.squarefree_decomposition() {
        if is_root_of(&gamma, &f)? {
            return Ok(mult <= degree);
        }
    }
    Ok(true)
}

fn to_i64(q: &num_bigint::BigInt) -> Option<i64> {
    i64::try_from(q.clone()).ok()
}

/// Solves `a n = b (mod m)`, returning `(r, m')` with `n = r (mod m')`.
pub fn solve_linear(a: i64, b: i64, m: i64) -> Option<(i64, i64)> {
    let g = a.gcd(&m);
    if b.rem_euclid(g) != 0 {
        return None;
    }
    let (a, b, m) = (a / g, b / g, m / g);
    if m == 1 {
        return Some((0, 1));
    }
    let inv = crate::unitlattice::lattice::mod_inverse(a.rem_euclid(m), m)?;
    Some(((b.rem_euclid(m) as i128 * inv as i128).rem_euclid(m as i128) as i64, m))
}

/// The system of congruences under which every oscillating term reaches its
/// minimum at once, after normalizing by the positive real coefficient `c0`.
/// Only meaningful when every angle and phase is rational; `None` otherwise.
pub fn touching_congruences(spec: &DominantSpectrum, c0_sign: i8) -> Option<(Vec<TouchCongruence>, Option<(i64, i64)>)> {
    let mut out = Vec::new();
    for t in spec.terms.iter().filter(|t| t.kind != TermKind::PositiveReal) {
        let xi = t.angle.as_fraction()?;
        let phase = t.phase_exact()?;
        let w = t.w_exact()?;
        if w.is_zero() {
            continue;
        }
        let positive = w.is_positive() == (c0_sign > 0);
        let big_a = if positive { 3 } else { 1 };
        let (a, b) = (to_i64(xi.numer())?, to_i64(xi.denom())?);
        let (c, d) = (to_i64(phase.numer())?, to_i64(phase.denom())?);
        // n a/b + c/d = A/4 (mod 1), times 4 d b
        let coefficient = 4 * d * a;
        let rhs = b * (big_a * d - 4 * c);
        let modulus = 4 * d * b;
        let solution = solve_linear(coefficient, rhs, modulus);
        out.push(TouchCongruence { a, b, c, d, big_a, coefficient, rhs, modulus, solution });
    }
    let mut rs = Vec::new();
    let mut ms = Vec::new();
    for c in &out {
        let (r, m) = c.solution?;
        rs.push(r);
        ms.push(m);
    }
    if out.iter().any(|c| c.solution.is_none()) {
        return Some((out, None));
    }
    if rs.is_empty() {
        return Some((out, Some((0, 1))));
    }
    let lcm = ms.iter().fold(1i64, |acc, m| acc.lcm(m));
    let sol = crt_solve(&rs, &ms).map(|r| (r, lcm));
    Some((out, sol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kronecker::AngleDescriptor;
    use crate::powersum::{from_root_form, RootCoefficient, RootForm, RootSpec};

    fn trig(k: i64, n: i64, w: Rational, phase: Rational) -> RootSpec {
        RootSpec {
            modulus: int(1),
            angle: AngleDescriptor::rational(k, n).unwrap(),
            coeff: RootCoefficient::Trig { w, phase: Phase::Exact(phase) },
        }
    }

    fn one() -> RootSpec {
        RootSpec { modulus: int(1), angle: AngleDescriptor::rational(0, 1).unwrap(), coeff: RootCoefficient::real(int(1)) }
    }

    #[test]
    fn quarter_angle_touching() {
        let rf = RootForm { degree: 0, roots: vec![one(), trig(1, 4, int(1), int(0))], remainder: None };
        let s = from_root_form(&rf).unwrap().unwrap();
        let zeros: Vec<u64> = (0..8).filter(|&n| main_term_is_zero(&s, n).unwrap()).collect();
        assert_eq!(zeros, vec![3, 7]);
        let (cs, sol) = touching_congruences(&s, 1).unwrap();
        assert_eq!((cs[0].coefficient, cs[0].rhs, cs[0].modulus), (4, 12, 16));
        assert_eq!(sol, Some((3, 4)));
    }

    #[test]
    fn cyclotomic_zero_test() {
        // cos(2 pi/5) + cos(4 pi/5) = -1/2
        let m = vec![(rat(1, 2), rat(1, 5)), (rat(1, 2), rat(4, 5)), (rat(1, 2), rat(2, 5)), (rat(1, 2), rat(3, 5)), (rat(1, 2), int(0))];
        assert!(monomials_vanish(&m));
        let m = vec![(int(1), rat(1, 5)), (int(1), int(0))];
        assert!(!monomials_vanish(&m));
    }

    #[test]
    fn subsequence_zero_test() {
        // a(n) = 1 + cos(pi n / 2) + (1/2)^n has main term zero at n = 2 (mod 4)
        // char poly (z - 1)(z^2 + 1)(z - 1/2)
        let rec = Recurrence::new(
            vec![rat(3, 2), rat(-3, 2), rat(3, 2), rat(-1, 2)],
            vec![int(3), rat(3, 2), rat(1, 4), rat(9, 8)],
        )
        .unwrap();
        let form = std::sync::Arc::new(to_power_sum(&rec).unwrap());
        let s = crate::powersum::dominating_spectrum(&form).unwrap().unwrap();
        let rho = s.modulus_root.clone().unwrap();
        let core = form.core().unwrap();
        let zero: Vec<u64> = (0..4).filter(|&r| closed_main_term_is_zero(core, &rho, 0, r, 4).unwrap()).collect();
        assert_eq!(zero, vec![2]);
    }

    #[test]
    fn linear_congruences() {
        assert_eq!(solve_linear(4, 12, 16), Some((3, 4)));
        assert_eq!(solve_linear(2, 1, 4), None);
        assert_eq!(solve_linear(3, 0, 3), Some((0, 1)));
    }
}
