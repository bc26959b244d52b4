use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::PolyError;

/// An integer Laurent polynomial in one variable `t`.
///
/// Coefficients are stored densely starting at exponent `low`. The first and
/// last stored coefficients are nonzero; the zero polynomial has no
/// coefficients and `low == 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * t^exp`.
    pub fn monomial<C: Into<BigInt>>(c: C, exp: i64) -> Self {
        Self::from_coeffs(exp, vec![c.into()])
    }

    /// `t^exp`.
    pub fn t_pow(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    /// Builds `sum coeffs[i] * t^(low + i)`, trimming zeros at both ends.
    pub fn from_coeffs(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(low: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(low, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
            return;
        }
        self.coeffs.drain(..lead_zeros);
        self.low += lead_zeros as i64;
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient; `None` for zero.
    pub fn low_degree(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient; `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Coefficient of `t^exp`.
    pub fn coeff(&self, exp: i64) -> BigInt {
        let idx = exp - self.low;
        if idx < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_default()
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn exponents(&self) -> Vec<i64> {
        self.terms().map(|(e, _)| e).collect()
    }

    /// True when no negative powers of `t` occur.
    pub fn is_polynomial(&self) -> bool {
        self.is_zero() || self.low >= 0
    }

    /// Value at `t = 0`, defined only when there are no negative powers.
    pub fn eval_at_zero(&self) -> Option<BigInt> {
        self.is_polynomial().then(|| self.coeff(0))
    }

    /// Value at `t = 1`, i.e. the sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Value at an integer point. Negative powers require `x = ±1`.
    pub fn eval_int(&self, x: &BigInt) -> Option<BigInt> {
        if self.low < 0 && !(x.is_one() || (-x).is_one()) {
            return None;
        }
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        let shift = self.low;
        Some(if shift >= 0 {
            acc * x.pow(shift as u32)
        } else {
            // x is ±1 here, so x^shift == x^|shift|
            acc * x.pow(shift.unsigned_abs() as u32)
        })
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// The substitution `t -> t^-1`.
    pub fn reverse(&self) -> Self {
        match self.degree() {
            None => Self::zero(),
            Some(d) => LaurentPoly {
                low: -d,
                coeffs: self.coeffs.iter().rev().cloned().collect(),
            },
        }
    }

    /// The substitution `t -> t^k` for `k >= 1`.
    pub fn substitute_power(&self, k: u32) -> Self {
        assert!(k >= 1, "power substitution needs k >= 1");
        if self.is_zero() {
            return Self::zero();
        }
        let k = k as usize;
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::from_coeffs(self.low * k as i64, coeffs)
    }

    pub fn scale<C: Into<BigInt>>(&self, c: C) -> Self {
        let c = c.into();
        Self::from_coeffs(self.low, self.coeffs.iter().map(|x| x * &c).collect())
    }

    /// Exact quotient `self / divisor` in `Z[t, t^-1]`.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly, PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // Both sides are units times polynomials with nonzero constant term;
        // divide those from the top degree down.
        let num = &self.coeffs;
        let den = &divisor.coeffs;
        if num.len() < den.len() {
            return Err(PolyError::InexactDivision);
        }
        let mut rem = num.clone();
        let qlen = num.len() - den.len() + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        let lead = den.last().expect("nonzero divisor");
        for qi in (0..qlen).rev() {
            let top = &rem[qi + den.len() - 1];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(PolyError::InexactDivision);
            }
            for (j, d) in den.iter().enumerate() {
                rem[qi + j] -= &q * d;
            }
            quot[qi] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(PolyError::InexactDivision);
        }
        Ok(Self::from_coeffs(self.low - divisor.low, quot))
    }

    /// Multiplies by `±t^k` so that the lowest term is a positive constant.
    pub fn normalize_unit(&self) -> Self {
        let Some(low) = self.low_degree() else {
            return Self::zero();
        };
        let p = self.shift(-low);
        if p.coeffs[0].is_negative() {
            -p
        } else {
            p
        }
    }

    /// `1 + t + ... + t^(n-1)`.
    pub fn geometric(n: usize) -> Self {
        Self::from_coeffs(0, vec![BigInt::one(); n])
    }

    /// Renders with ascending powers and explicit signs, e.g.
    /// `1 - t + t^3 - t^5 + t^6`.
    pub fn render(&self) -> String {
        self.render_in("t")
    }

    pub fn render_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (exp, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let unit = mag.is_one();
            if exp == 0 {
                out.push_str(&mag.to_string());
                continue;
            }
            if !unit {
                out.push_str(&mag.to_string());
            }
            out.push_str(var);
            if exp != 1 {
                out.push('^');
                out.push_str(&exp.to_string());
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self.render())
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

fn add_into(acc: &mut LaurentPoly, other: &LaurentPoly, negate: bool) {
    if other.is_zero() {
        return;
    }
    if acc.is_zero() {
        *acc = if negate { -other.clone() } else { other.clone() };
        return;
    }
    let low = acc.low.min(other.low);
    let high = acc.degree().unwrap().max(other.degree().unwrap());
    let len = (high - low + 1) as usize;
    if acc.low > low {
        let pad = (acc.low - low) as usize;
        let mut v = vec![BigInt::zero(); pad];
        v.append(&mut acc.coeffs);
        acc.coeffs = v;
        acc.low = low;
    }
    acc.coeffs.resize(len, BigInt::zero());
    let off = (other.low - low) as usize;
    for (i, c) in other.coeffs.iter().enumerate() {
        if negate {
            acc.coeffs[off + i] -= c;
        } else {
            acc.coeffs[off + i] += c;
        }
    }
    acc.trim();
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        add_into(self, rhs, false);
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        add_into(&mut out, rhs, false);
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        add_into(&mut self, &rhs, false);
        self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        add_into(&mut out, rhs, true);
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        add_into(&mut self, &rhs, true);
        self
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_coeffs(self.low + rhs.low, coeffs)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Arbitrary but total order (by exponent range, then coefficients), used
/// only to keep collections deterministic.
impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.low, self.coeffs.len())
            .cmp(&(other.low, other.coeffs.len()))
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64s(low, c)
    }

    #[test]
    fn difference_of_squares() {
        let a = p(0, &[1, -1]);
        let b = p(0, &[1, 1]);
        assert_eq!(&a * &b, p(0, &[1, 0, -1]));
    }

    #[test]
    fn eval_at_zero_cases() {
        assert_eq!(p(1, &[-1, 0, 1]).eval_at_zero(), Some(BigInt::zero()));
        assert_eq!(p(0, &[1, -1, 0, 1]).eval_at_zero(), Some(BigInt::one()));
        assert_eq!(p(-1, &[1, 1]).eval_at_zero(), None);
    }

    #[test]
    fn trimming_and_zero() {
        let z = p(3, &[0, 0]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        let q = p(-2, &[0, 5, 0]);
        assert_eq!(q.low_degree(), Some(-1));
        assert_eq!(q.degree(), Some(-1));
        assert_eq!(&p(0, &[1, 1]) - &p(0, &[1, 1]), LaurentPoly::zero());
    }

    #[test]
    fn exact_division() {
        let q = p(0, &[1, 0, 0, -1]).exact_div(&p(0, &[1, -1])).unwrap();
        assert_eq!(q, p(0, &[1, 1, 1]));
        let q = p(0, &[1, 0, 0, 0, 1, 0, 0, 0, 1])
            .exact_div(&p(0, &[1, 1, 1]))
            .unwrap();
        assert_eq!(q, p(0, &[1, -1, 0, 1, 0, -1, 1]));
        assert_eq!(
            p(0, &[1, 0, -1]).exact_div(&p(0, &[1, 1, 1])),
            Err(PolyError::InexactDivision)
        );
        // Laurent shifts on both sides
        let q = p(-3, &[2, 2]).exact_div(&p(5, &[1, 1])).unwrap();
        assert_eq!(q, p(-8, &[2]));
        assert_eq!(
            p(0, &[1]).exact_div(&LaurentPoly::zero()),
            Err(PolyError::DivisionByZero)
        );
    }

    #[test]
    fn rendering() {
        assert_eq!(p(0, &[1, -1, 0, 1, 0, -1, 1]).render(), "1 - t + t^3 - t^5 + t^6");
        assert_eq!(p(3, &[2]).render(), "2t^3");
        assert_eq!(p(1, &[-1]).render(), "-t");
        assert_eq!(p(-2, &[1, 0, -3]).render(), "t^-2 - 3");
        assert_eq!(LaurentPoly::zero().render(), "0");
    }

    #[test]
    fn normalize_and_reverse() {
        let a = p(-4, &[-1, 1, -1]);
        assert_eq!(a.normalize_unit(), p(0, &[1, -1, 1]));
        assert_eq!(p(2, &[1, 2, 3]).reverse(), p(-4, &[3, 2, 1]));
        assert_eq!(p(0, &[1, -1, 1]).substitute_power(2), p(0, &[1, 0, -1, 0, 1]));
    }

    #[test]
    fn integer_evaluation() {
        let a = p(0, &[1, -1, 1]);
        assert_eq!(a.eval_int(&BigInt::from(2)), Some(BigInt::from(3)));
        assert_eq!(p(-1, &[1, 1]).eval_int(&BigInt::from(-1)), Some(BigInt::zero()));
        assert_eq!(p(-1, &[1]).eval_int(&BigInt::from(2)), None);
    }
}
