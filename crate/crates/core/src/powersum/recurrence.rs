//! Linear recurrences with constant rational coefficients.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::poly::RatPoly;
use crate::exactnum::rational::{int, Rational};

/// `a(n+d) = s1 a(n+d-1) + ... + sd a(n)` with `a(0), ..., a(d-1)` given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recurrence {
    coeffs: Vec<Rational>,
    initials: Vec<Rational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "-")]
    Negative,
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "+")]
    Positive,
}

impl Sign {
    pub fn of(q: &Rational) -> Sign {
        if q.is_positive() {
            Sign::Positive
        } else if q.is_negative() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Negative => '-',
            Sign::Zero => '0',
            Sign::Positive => '+',
        }
    }
}

/// Signs of `a(0..N)` with a few landmarks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignSummary {
    pub count: usize,
    pub pattern: String,
    pub positives: usize,
    pub negatives: usize,
    pub zeros: usize,
    pub first_negative: Option<usize>,
    pub last_negative: Option<usize>,
    pub first_positive: Option<usize>,
    pub last_positive: Option<usize>,
    /// Sign changes between consecutive nonzero terms.
    pub sign_changes: usize,
}

impl SignSummary {
    pub fn from_signs(signs: &[Sign]) -> SignSummary {
        let idx = |s: Sign| signs.iter().enumerate().filter(move |(_, &x)| x == s).map(|(i, _)| i);
        let nonzero: Vec<Sign> = signs.iter().copied().filter(|&s| s != Sign::Zero).collect();
        SignSummary {
            count: signs.len(),
            pattern: signs.iter().map(|s| s.symbol()).collect(),
            positives: idx(Sign::Positive).count(),
            negatives: idx(Sign::Negative).count(),
            zeros: idx(Sign::Zero).count(),
            first_negative: idx(Sign::Negative).next(),
            last_negative: idx(Sign::Negative).last(),
            first_positive: idx(Sign::Positive).next(),
            last_positive: idx(Sign::Positive).last(),
            sign_changes: nonzero.windows(2).filter(|w| w[0] != w[1]).count(),
        }
    }
}

impl Recurrence {
    pub fn new(coeffs: Vec<Rational>, initials: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidInput("a recurrence needs order at least 1".into()));
        }
        if initials.len() != coeffs.len() {
            return Err(Error::InvalidInput(format!(
                "order {} needs {} initial values, got {}",
                coeffs.len(),
                coeffs.len(),
                initials.len()
            )));
        }
        Ok(Recurrence { coeffs, initials })
    }

    pub fn from_i64(coeffs: &[i64], initials: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| int(c)).collect(), initials.iter().map(|&c| int(c)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn initials(&self) -> &[Rational] {
        &self.initials
    }

    /// `z^d - s1 z^{d-1} - ... - sd`.
    pub fn char_poly(&self) -> RatPoly {
        let d = self.order();
        let mut v = vec![Rational::zero(); d + 1];
        v[d] = int(1);
        for (i, s) in self.coeffs.iter().enumerate() {
            v[d - 1 - i] = -s;
        }
        RatPoly::new(v)
    }

    /// Splits off leading terms while the last coefficient vanishes: returns the
    /// transient prefix and the recurrence satisfied by `a(t + n)`, `t` the
    /// prefix length. The core is `None` when the sequence is eventually zero.
    pub fn core(&self) -> (Vec<Rational>, Option<Recurrence>) {
        let mut coeffs = self.coeffs.clone();
        let mut initials = self.initials.clone();
        let mut prefix = Vec::new();
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
            // a(n+d) no longer depends on a(n), so a(1), a(2), ... satisfy the shorter recurrence
            prefix.push(initials.remove(0));
            if coeffs.is_empty() {
                return (prefix, None);
            }
        }
        (prefix, Some(Recurrence { coeffs, initials }))
    }

    /// Terms `a(0), ..., a(count - 1)`.
    pub fn terms(&self, count: usize) -> Vec<Rational> {
        let mut out: Vec<Rational> = self.initials.iter().take(count).cloned().collect();
        while out.len() < count {
            let n = out.len();
            let v: Rational = self.coeffs.iter().enumerate().map(|(i, s)| s * &out[n - 1 - i]).sum();
            out.push(v);
        }
        out
    }

    pub fn eval_exact(&self, n: usize) -> Rational {
        self.window_at(n)[0].clone()
    }

    /// `a(n), ..., a(n + d - 1)` by repeated squaring of the companion step.
    fn window_at(&self, n: usize) -> Vec<Rational> {
        let d = self.order();
        if n < 4 * d + 64 {
            return self.terms(n + d)[n..].to_vec();
        }
        // x^n mod char_poly gives a(n) as a combination of a(0..d)
        let c = self.char_poly();
        let x = RatPoly::monomial(int(1), 1);
        let mut result = RatPoly::one();
        let mut base = x;
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = (&result * &base).rem(&c);
            }
            base = (&base * &base).rem(&c);
            e >>= 1;
        }
        let first = self.terms(2 * d);
        (0..d)
            .map(|k| {
                // x^{n+k} = x^k * x^n
                let r = (&RatPoly::monomial(int(1), k) * &result).rem(&c);
                (0..d).map(|i| r.coeff(i) * &first[i]).sum()
            })
            .collect()
    }

    pub fn signs(&self, count: usize) -> Vec<Sign> {
        self.terms(count).iter().map(Sign::of).collect()
    }

    pub fn sign_summary(&self, count: usize) -> SignSummary {
        SignSummary::from_signs(&self.signs(count))
    }

    /// The recurrence satisfied by `k -> a(r + k p)`.
    ///
    /// Its characteristic polynomial has the `p`-th powers of the roots of the
    /// original one, counted with multiplicity: `Res_y(c(y), z - y^p)`.
    pub fn subsequence(&self, r: usize, p: usize) -> Result<Recurrence> {
        if p == 0 {
            return Err(Error::InvalidInput("subsequence step must be positive".into()));
        }
        let d = self.order();
        let c = self.char_poly();
        let pts: Vec<(Rational, Rational)> = (0..=d)
            .map(|j| {
                let z = int(j as i64);
                let mut g = vec![Rational::zero(); p + 1];
                g[0] = z.clone();
                g[p] = int(-1);
                (z, RatPoly::resultant(&c, &RatPoly::new(g)))
            })
            .collect();
        let cp = RatPoly::interpolate(&pts).monic();
        let coeffs: Vec<Rational> = (1..=d).map(|i| -cp.coeff(d - i)).collect();
        let initials: Vec<Rational> = (0..d).map(|k| self.eval_exact(r + k * p)).collect();
        Recurrence::new(coeffs, initials)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibonacci_terms() {
        let f = Recurrence::from_i64(&[1, 1], &[0, 1]).unwrap();
        assert_eq!(f.terms(10), [0, 1, 1, 2, 3, 5, 8, 13, 21, 34].map(int).to_vec());
        assert_eq!(f.eval_exact(100).to_string(), "354224848179261915075");
        assert_eq!(f.char_poly(), RatPoly::from_i64(&[-1, -1, 1]));
    }

    #[test]
    fn core_strips_trailing_zeros() {
        // a(n+3) = 2 a(n+2): a = 5, 1, 3, 6, 12, ...
        let r = Recurrence::from_i64(&[2, 0, 0], &[5, 1, 3]).unwrap();
        let (prefix, core) = r.core();
        assert_eq!(prefix, vec![int(5), int(1)]);
        let core = core.unwrap();
        assert_eq!(core.order(), 1);
        let full = r.terms(12);
        let tail = core.terms(10);
        assert_eq!(&full[2..], &tail[..]);
        let z = Recurrence::from_i64(&[0, 0], &[4, 7]).unwrap();
        assert_eq!(z.core(), (vec![int(4), int(7)], None));
    }

    #[test]
    fn subsequences() {
        let f = Recurrence::from_i64(&[1, 1], &[0, 1]).unwrap();
        let s = f.subsequence(1, 3).unwrap();
        let all = f.terms(40);
        let sub = s.terms(12);
        for k in 0..12 {
            assert_eq!(sub[k], all[1 + 3 * k]);
        }
        let summary = Recurrence::from_i64(&[0, -1], &[1, 0]).unwrap().sign_summary(8);
        assert_eq!(summary.pattern, "+0-0+0-0");
        assert_eq!(summary.sign_changes, 3);
    }
}
