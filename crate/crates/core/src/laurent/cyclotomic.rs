use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use super::LaurentPoly;

fn cache() -> &'static RwLock<HashMap<u64, LaurentPoly>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, LaurentPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
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

/// The `n`-th cyclotomic polynomial, via
/// `phi_n = (t^n - 1) / prod_{d | n, d < n} phi_d`.
///
/// Results are memoized in a process-wide cache.
pub fn cyclotomic(n: u64) -> LaurentPoly {
    assert!(n >= 1, "cyclotomic index must be positive");
    if let Some(p) = cache().read().expect("cyclotomic cache poisoned").get(&n) {
        return p.clone();
    }
    let mut num = LaurentPoly::t_pow(n as i64) - LaurentPoly::one();
    for d in divisors(n) {
        if d < n {
            num = num
                .exact_div(&cyclotomic(d))
                .expect("cyclotomic factors divide t^n - 1");
        }
    }
    cache()
        .write()
        .expect("cyclotomic cache poisoned")
        .insert(n, num.clone());
    num
}

/// Writes `p` as `±t^k ∏ phi_n` and returns the indices `n` (with
/// multiplicity, ascending), or `None` if `p` is not of that shape.
pub fn cyclotomic_factorization(p: &LaurentPoly) -> Option<Vec<u64>> {
    if p.is_zero() {
        return None;
    }
    let mut rest = p.normalize_unit();
    let mut out = Vec::new();
    // phi(n) >= sqrt(n / 2), so every candidate index is at most 2 d^2
    let bound = 2 * (rest.degree().unwrap_or(0) as u64).pow(2) + 2;
    let mut n = 1;
    while n <= bound {
        let deg = rest.degree().unwrap_or(0) as u64;
        if deg == 0 {
            break;
        }
        if totient(n) <= deg {
            if let Ok(q) = rest.exact_div(&cyclotomic(n)) {
                out.push(n);
                rest = q.normalize_unit();
                continue;
            }
        }
        n += 1;
    }
    (rest == LaurentPoly::one()).then_some(out)
}

/// Euler's totient, which is also `deg phi_n`.
pub fn totient(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}
