//! The reduced Burau representation and the Alexander-polynomial checks
//! built on it.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::braid::{self, BraidWord};
use crate::laurent::{cyclotomic, divisors, LaurentPoly, PolyError, PolyMatrix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BurauError {
    #[error("closure of {braid} has {components} components, expected a knot")]
    NotAKnot { braid: String, components: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("torus parameters ({p}, {q}) are not coprime integers >= 2")]
    BadTorusParameters { p: u64, q: u64 },
    #[error("internal arithmetic error: {0}")]
    Arithmetic(#[from] PolyError),
}

/// Alexander polynomial normalized to nonnegative degrees with constant term
/// positive.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct AlexanderPoly {
    poly: LaurentPoly,
}

impl AlexanderPoly {
    pub fn new(poly: LaurentPoly) -> Self {
        AlexanderPoly {
            poly: poly.normalize_unit(),
        }
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.poly
    }

    /// Degrees with nonzero coefficient, ascending.
    pub fn exponents(&self) -> Vec<i64> {
        self.poly.exponents()
    }

    pub fn degree(&self) -> i64 {
        self.poly.degree().unwrap_or(0)
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.poly.coeff(exp)
    }

    /// Coefficient list equals its own reversal.
    pub fn is_symmetric(&self) -> bool {
        self.poly.reverse().normalize_unit() == self.poly
    }

    pub fn render(&self) -> String {
        self.poly.render()
    }
}

impl fmt::Display for AlexanderPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for AlexanderPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ({})", self.render())
    }
}

impl From<AlexanderPoly> for String {
    fn from(a: AlexanderPoly) -> String {
        a.render()
    }
}

impl TryFrom<String> for AlexanderPoly {
    type Error = String;
    fn try_from(s: String) -> Result<Self, String> {
        parse_poly(&s).map(AlexanderPoly::new)
    }
}

/// Parses the rendering produced by [`LaurentPoly::render`].
pub fn parse_poly(s: &str) -> Result<LaurentPoly, String> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact == "0" {
        return Ok(LaurentPoly::zero());
    }
    let mut acc = LaurentPoly::zero();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let (neg, body) = match rest.as_bytes()[0] {
            b'-' => (true, &rest[1..]),
            b'+' => (false, &rest[1..]),
            _ => (false, rest),
        };
        let end = body[1..]
            .find(['+', '-'])
            .map(|i| i + 1)
            .unwrap_or(body.len());
        // a '-' right after '^' belongs to the exponent
        let end = {
            let mut e = end;
            while e < body.len() && body.as_bytes()[e - 1] == b'^' {
                e = body[e + 1..].find(['+', '-']).map(|i| i + e + 1).unwrap_or(body.len());
            }
            e
        };
        let term = &body[..end];
        rest = &body[end..];
        let (coeff, exp) = match term.find('t') {
            None => (term.parse::<BigInt>().map_err(|e| e.to_string())?, 0),
            Some(i) => {
                let c = if i == 0 {
                    BigInt::one()
                } else {
                    term[..i].parse::<BigInt>().map_err(|e| e.to_string())?
                };
                let e = match term[i + 1..].strip_prefix('^') {
                    None if i + 1 == term.len() => 1,
                    None => return Err(format!("bad term {term}")),
                    Some(x) => x.parse::<i64>().map_err(|e| e.to_string())?,
                };
                (c, e)
            }
        };
        let coeff = if neg { -coeff } else { coeff };
        acc += &LaurentPoly::monomial(coeff, exp);
    }
    Ok(acc)
}

/// The reduced Burau matrix of `σ_i^{±1}` on `n` strands.
///
/// `σ_i(t)` is the identity except in row `i`, which reads
/// `(…, t, -t, 1, …)` on columns `i-1, i, i+1` (truncated at the ends).
/// The inverse has row `(…, 1, -t^-1, t^-1, …)`.
pub fn generator_matrix(n: usize, i: usize, positive: bool) -> PolyMatrix {
    let d = n - 1;
    let r = i - 1;
    let mut m = PolyMatrix::identity(d);
    let (left, diag, right) = if positive {
        (LaurentPoly::t_pow(1), LaurentPoly::monomial(-1, 1), LaurentPoly::one())
    } else {
        (LaurentPoly::one(), LaurentPoly::monomial(-1, -1), LaurentPoly::t_pow(-1))
    };
    if r >= 1 {
        m.set(r, r - 1, left);
    }
    m.set(r, r, diag);
    if r + 1 < d {
        m.set(r, r + 1, right);
    }
    m
}

/// Product of generator matrices in letter order.
pub fn reduced_burau(word: &BraidWord) -> PolyMatrix {
    let d = word.strands() - 1;
    let mut b = PolyMatrix::identity(d);
    let t = LaurentPoly::t_pow(1);
    let t_inv = LaurentPoly::t_pow(-1);
    for l in word.letters() {
        // right multiplication only touches columns i-1, i, i+1
        let c = l.index - 1;
        for row in 0..d {
            let mid = b.get(row, c).clone();
            if mid.is_zero() {
                continue;
            }
            let (left, diag, right) = if l.positive {
                (&mid * &t, -(&mid * &t), mid.clone())
            } else {
                (mid.clone(), -(&mid * &t_inv), &mid * &t_inv)
            };
            if c >= 1 {
                let v = b.get(row, c - 1) + &left;
                b.set(row, c - 1, v);
            }
            if c + 1 < d {
                let v = b.get(row, c + 1) + &right;
                b.set(row, c + 1, v);
            }
            b.set(row, c, diag);
        }
    }
    b
}

/// `det(I - B(t))` for the reduced Burau matrix of `word`.
pub fn burau_det_i_minus(word: &BraidWord) -> LaurentPoly {
    let b = reduced_burau(word);
    let i = PolyMatrix::identity(b.dim());
    (&i - &b).det()
}

fn require_knot(word: &BraidWord) -> Result<(), BurauError> {
    let components = word.closure_components();
    if components != 1 {
        return Err(BurauError::NotAKnot {
            braid: word.format(),
            components,
        });
    }
    Ok(())
}

/// Alexander polynomial of the closure:
/// `det(I - B(t)) / (1 + t + ⋯ + t^{n-1})`, normalized.
pub fn alexander(word: &BraidWord) -> Result<AlexanderPoly, BurauError> {
    require_knot(word)?;
    let det = burau_det_i_minus(word);
    let quotient = det.exact_div(&LaurentPoly::geometric(word.strands()))?;
    Ok(AlexanderPoly::new(quotient))
}

/// `∏_{h | p, l | q, h, l ≠ 1} φ_{lh}(t)`.
pub fn torus_alexander(p: u64, q: u64) -> Result<AlexanderPoly, BurauError> {
    let indices = torus_cyclotomic_indices(p, q)?;
    let mut acc = LaurentPoly::one();
    for n in indices {
        acc = &acc * &cyclotomic(n);
    }
    Ok(AlexanderPoly::new(acc))
}

/// The multiset `{l·h : h | p, l | q, h, l ≠ 1}` indexing the cyclotomic
/// factors of the torus knot `T(p, q)`, sorted.
pub fn torus_cyclotomic_indices(p: u64, q: u64) -> Result<Vec<u64>, BurauError> {
    if p < 2 || q < 2 || num_integer::gcd(p, q) != 1 {
        return Err(BurauError::BadTorusParameters { p, q });
    }
    let mut out = Vec::new();
    for h in divisors(p).into_iter().filter(|&h| h != 1) {
        for l in divisors(q).into_iter().filter(|&l| l != 1) {
            out.push(l * h);
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Evaluates `tr B(0)` for a positive knot word and reports whether it
/// vanishes.
pub fn trace_at_zero_is_zero(word: &BraidWord) -> Result<bool, BurauError> {
    if !word.is_positive() {
        return Err(BurauError::Precondition(format!(
            "{} is not a positive word",
            word.format()
        )));
    }
    require_knot(word)?;
    let tr = reduced_burau(word).trace();
    let at_zero = tr
        .eval_at_zero()
        .ok_or_else(|| BurauError::Precondition("trace has negative powers".into()))?;
    Ok(at_zero.is_zero())
}

/// Coefficient pattern `1 - t + 0·t^2 + ⋯ + 0·t^{n-1} + t^n + O(t^{n+1})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormReport {
    pub braid: BraidWord,
    pub n: usize,
    pub alexander: AlexanderPoly,
    pub constant_is_one: bool,
    pub linear_is_minus_one: bool,
    pub middle_vanishes: bool,
    pub degree_n_is_one: bool,
}

impl FormReport {
    pub fn passed(&self) -> bool {
        self.constant_is_one && self.linear_is_minus_one && self.middle_vanishes && self.degree_n_is_one
    }
}

/// Low-degree pattern of the Alexander polynomial of a twist positive knot.
pub fn check_twist_positive_form(word: &BraidWord) -> Result<FormReport, BurauError> {
    if !braid::is_twist_positive(word) {
        return Err(BurauError::Precondition(format!(
            "{} is not twist positive",
            word.format()
        )));
    }
    let a = alexander(word)?;
    let n = word.strands();
    let c = |e: usize| a.coeff(e as i64);
    Ok(FormReport {
        braid: word.clone(),
        n,
        constant_is_one: c(0).is_one(),
        linear_is_minus_one: (-c(1)).is_one(),
        middle_vanishes: (2..n).all(|e| c(e).is_zero()),
        degree_n_is_one: c(n).is_one(),
        alexander: a,
    })
}

/// Consecutive differences of the exponent set and their maximum (0 when
/// there are fewer than two exponents).
pub fn exponent_gaps(a: &AlexanderPoly) -> (Vec<i64>, i64) {
    let exps = a.exponents();
    let gaps: Vec<i64> = exps.windows(2).map(|w| w[1] - w[0]).collect();
    let max = gaps.iter().copied().max().unwrap_or(0);
    (gaps, max)
}

/// Nonzero coefficients are ±1, alternate in sign, and start and end at +1.
pub fn lspace_admissible(a: &AlexanderPoly) -> bool {
    let coeffs: Vec<&BigInt> = a.poly().terms().map(|(_, c)| c).collect();
    let Some(first) = coeffs.first() else {
        return false;
    };
    if a.poly().low_degree() != Some(0) || !first.is_one() || !coeffs.last().unwrap().is_one() {
        return false;
    }
    coeffs.iter().all(|c| c.abs().is_one())
        && coeffs.windows(2).all(|w| w[0].is_positive() != w[1].is_positive())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Pass,
    Fail,
    Assumed,
    Discrepancy,
}

/// One line of a certificate: what was checked and how it came out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conclusion {
    pub claim: String,
    pub status: ClaimStatus,
    /// Short tag naming the result the claim rests on.
    #[serde(rename = "paper_ref")]
    pub reference: String,
}

impl Conclusion {
    pub fn new(claim: impl Into<String>, status: ClaimStatus, reference: &str) -> Self {
        Conclusion {
            claim: claim.into(),
            status,
            reference: reference.to_string(),
        }
    }

    pub fn check(claim: impl Into<String>, ok: bool, reference: &str) -> Self {
        Self::new(claim, if ok { ClaimStatus::Pass } else { ClaimStatus::Fail }, reference)
    }
}

/// Bridge-index certificate: records the exponent gaps of Δ and the
/// resulting conclusion about bridge and braid index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub braid: BraidWord,
    pub n: usize,
    pub writhe: i64,
    pub alexander: AlexanderPoly,
    pub exponents: Vec<i64>,
    pub max_gap: i64,
    /// `Some(n)` when the chain of inequalities closes and forces
    /// bridge index = braid index = n.
    pub bridge_equals_braid_index: Option<usize>,
    pub conclusions: Vec<Conclusion>,
}

impl Certificate {
    pub fn all_pass(&self) -> bool {
        self.conclusions.iter().all(|c| c.status != ClaimStatus::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

fn gap_chain(
    word: &BraidWord,
    a: AlexanderPoly,
    n: usize,
    mut conclusions: Vec<Conclusion>,
) -> Certificate {
    let (_, max_gap) = exponent_gaps(&a);
    let bound = n as i64 - 1;
    let closes = max_gap >= bound;
    conclusions.push(Conclusion::check(
        format!("max exponent gap {max_gap} >= n - 1 = {bound}, so torsion order >= n - 1"),
        closes,
        "torsion-order-gap",
    ));
    conclusions.push(Conclusion::check(
        format!("max exponent gap {max_gap} <= n - 1 = {bound}, consistent with torsion order <= br - 1 <= n - 1"),
        max_gap <= bound,
        "torsion-order-bridge-bound",
    ));
    if closes {
        conclusions.push(Conclusion::new(
            format!("bridge index = braid index = {n}"),
            ClaimStatus::Pass,
            "index-inequality-chain",
        ));
    }
    Certificate {
        braid: word.clone(),
        n,
        writhe: word.writhe(),
        exponents: a.exponents(),
        max_gap,
        alexander: a,
        bridge_equals_braid_index: closes.then_some(n),
        conclusions,
    }
}

/// Certificate for a twist positive braid whose closure is assumed to be an
/// L-space knot. The L-space property is an input, not computed.
pub fn bridge_braid_certificate(
    word: &BraidWord,
    lspace_assumed: bool,
) -> Result<Certificate, BurauError> {
    if !lspace_assumed {
        return Err(BurauError::Precondition(
            "the bridge-index argument needs the L-space assumption".into(),
        ));
    }
    let form = check_twist_positive_form(word)?;
    let n = form.n;
    let conclusions = vec![
        Conclusion::new("closure is an L-space knot", ClaimStatus::Assumed, "lspace-input"),
        Conclusion::new(
            format!("braid index = {n} for a twist positive braid on {n} strands"),
            ClaimStatus::Assumed,
            "franks-williams",
        ),
        Conclusion::check(
            format!("Δ = 1 - t + t^{n} + O(t^{})", n + 1),
            form.passed(),
            "twist-positive-alexander-form",
        ),
        Conclusion::check(
            "coefficients in {-1, 0, 1}, alternating",
            lspace_admissible(&form.alexander),
            "lspace-alexander-shape",
        ),
    ];
    Ok(gap_chain(word, form.alexander, n, conclusions))
}

/// Certificate for the Baker–Kegel knot `K_n`, computed through the signed
/// Burau matrix. The braid is not positive, so the gap of 3 is read off the
/// computed polynomial rather than from the twist positive form.
pub fn baker_kegel_certificate(n: usize) -> Result<Certificate, BurauError> {
    let word = braid::make_baker_kegel_braid(n)
        .map_err(|e| BurauError::Precondition(e.to_string()))?;
    let a = alexander(&word)?;
    let exps = a.exponents();
    let head_ok = exps.len() >= 4 && exps[..4] == [0, 1, 4, 5];
    let printed_degree = 8 * n as i64 + 2;
    let mut conclusions = vec![
        Conclusion::new("closure is an L-space knot", ClaimStatus::Assumed, "lspace-input"),
        Conclusion::check(
            "exponents begin 0, 1, 4, 5 (Δ = 1 - t + t^4 + t^5 + ⋯)",
            head_ok,
            "baker-kegel-alexander",
        ),
        Conclusion::check(
            "coefficients in {-1, 0, 1}, alternating",
            lspace_admissible(&a),
            "lspace-alexander-shape",
        ),
        Conclusion::check("Δ is symmetric", a.is_symmetric(), "alexander-symmetry"),
    ];
    if a.degree() != printed_degree {
        conclusions.push(Conclusion::new(
            format!(
                "printed tail ends at t^{printed_degree}; computed degree is {} (top terms {} t^{} {} t^{})",
                a.degree(),
                a.coeff(a.degree() - 1),
                a.degree() - 1,
                a.coeff(a.degree()),
                a.degree()
            ),
            ClaimStatus::Discrepancy,
            "baker-kegel-alexander",
        ));
    }
    Ok(gap_chain(&word, a, 4, conclusions))
}
