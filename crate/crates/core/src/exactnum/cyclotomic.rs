//! Cyclotomic polynomials.

use std::collections::HashMap;
use std::sync::Mutex;

use super::poly::RatPoly;
use super::rational::{divisors, Rational};

static CACHE: Mutex<Option<HashMap<u64, RatPoly>>> = Mutex::new(None);

/// `Phi_n`, computed as `(x^n - 1) / prod_{d | n, d < n} Phi_d`.
pub fn cyclotomic(n: u64) -> RatPoly {
    assert!(n >= 1, "cyclotomic index must be positive");
    if let Some(p) = CACHE.lock().unwrap().as_ref().and_then(|c| c.get(&n)) {
        return p.clone();
    }
    let mut num = RatPoly::monomial(Rational::from_integer(1.into()), n as usize);
    num = &num - &RatPoly::one();
    for d in divisors(n) {
        if d < n {
            num = num.exact_div(&cyclotomic(d));
        }
    }
    CACHE.lock().unwrap().get_or_insert_with(HashMap::new).insert(n, num.clone());
    num
}

/// Indices `n` with `phi(n) == k`; all such `n` satisfy `n <= 2 k^2` for `k >= 1`
/// (a crude but valid bound), so the search is finite.
pub fn indices_with_totient(k: u64) -> Vec<u64> {
    let bound = 2 * k * k + 6;
    (1..=bound).filter(|&n| super::rational::totient(n) == k).collect()
}

/// Orders `n` whose cyclotomic polynomial has degree at most `d`.
pub fn orders_up_to_degree(d: u64) -> Vec<u64> {
    let bound = 2 * d * d + 6;
    (1..=bound).filter(|&n| super::rational::totient(n) <= d).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::totient;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), RatPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic(6), RatPoly::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), RatPoly::from_i64(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic(105).coeff(7), crate::exactnum::rational::int(-2));
    }

    #[test]
    fn product_over_divisors_is_x_n_minus_one() {
        for n in 1..=50u64 {
            let mut prod = RatPoly::one();
            for d in divisors(n) {
                let c = cyclotomic(d);
                assert_eq!(c.deg() as u64, totient(d));
                prod = &prod * &c;
            }
            let target = &RatPoly::monomial(Rational::from_integer(1.into()), n as usize) - &RatPoly::one();
            assert_eq!(prod, target, "n = {n}");
        }
    }

    #[test]
    fn totient_preimages() {
        assert_eq!(indices_with_totient(2), vec![3, 4, 6]);
        assert_eq!(indices_with_totient(4), vec![5, 8, 10, 12]);
    }
}
