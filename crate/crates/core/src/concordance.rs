//! Genus and τ bookkeeping, the same-τ families of three-strand twisted
//! torus knots, and the pipeline that separates their concordance classes.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::braid::{self, BraidWord};
use crate::burau::{self, AlexanderPoly, BurauError};
use crate::goeritz::{self, GoeritzError};
use crate::laurent::{cyclotomic_factorization, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConcordanceError {
    #[error("{0} is not a positive braid word")]
    NotPositive(String),
    #[error("writhe - n + 1 = {0} is odd; the closure is not a knot")]
    GenusParity(i64),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("signature ledger for q = {q} breaks the expected pattern: {detail}")]
    LedgerPattern { q: usize, detail: String },
    #[error("signature mismatch for {label}: closed form {closed}, Goeritz {engine}")]
    SignatureMismatch { label: String, closed: i64, engine: i64 },
    #[error(transparent)]
    Burau(#[from] BurauError),
    #[error(transparent)]
    Goeritz(#[from] GoeritzError),
}

/// `(genus, τ)` of a positive braid knot, from `2g - 1 = writhe - n`.
pub fn genus_tau(word: &BraidWord) -> Result<(i64, i64), ConcordanceError> {
    if !word.is_positive() {
        return Err(ConcordanceError::NotPositive(word.format()));
    }
    let twice = word.writhe() - word.strands() as i64 + 1;
    if twice % 2 != 0 {
        return Err(ConcordanceError::GenusParity(twice));
    }
    let g = twice / 2;
    Ok((g, g))
}

/// `T(3, k; 2m)` in standard form (`k ≡ 1 mod 3`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FamilyMember {
    pub k: usize,
    pub m: usize,
}

impl FamilyMember {
    pub fn word(&self) -> BraidWord {
        braid::twisted_torus_word(self.k, self.m)
    }

    /// Index of the Goeritz family, `k = 3·index + 1`.
    pub fn goeritz_index(&self) -> usize {
        (self.k - 1) / 3
    }

    pub fn signature(&self) -> i64 {
        goeritz::signature_closed_form(self.goeritz_index(), self.m)
    }
}

impl fmt::Display for FamilyMember {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T(3,{};{})", self.k, 2 * self.m)
    }
}

fn check_q(q: usize) -> Result<(), ConcordanceError> {
    if q < 4 || q.is_multiple_of(3) {
        return Err(ConcordanceError::InvalidParameters(format!(
            "need q >= 4 and q ≢ 0 mod 3, got q = {q}"
        )));
    }
    Ok(())
}

/// Twisted torus knots on three strands with the writhe, hence genus and τ,
/// of `T(3, q)`. The first entry is `T(3, q)` itself in standard form.
pub fn same_tau_family(q: usize) -> Result<Vec<FamilyMember>, ConcordanceError> {
    check_q(q)?;
    let r = q / 3;
    let offset = if q % 3 == 1 { 0 } else { 1 };
    Ok((0..r)
        .map(|s| FamilyMember {
            k: 3 * (r - s) + 1,
            m: offset + 3 * s,
        })
        .collect())
}

/// Signatures of the family in order, checked against the pattern: strictly
/// descending by 2 when `⌊q/3⌋` is even; first two equal, then descending by
/// 2, when it is odd.
pub fn signature_ledger(q: usize) -> Result<Vec<(FamilyMember, i64)>, ConcordanceError> {
    let family = same_tau_family(q)?;
    let ledger: Vec<(FamilyMember, i64)> = family.iter().map(|f| (*f, f.signature())).collect();
    let r = q / 3;
    for (i, w) in ledger.windows(2).enumerate() {
        let drop = w[0].1 - w[1].1;
        let expected = if r % 2 == 1 && i == 0 { 0 } else { 2 };
        if drop != expected {
            return Err(ConcordanceError::LedgerPattern {
                q,
                detail: format!(
                    "σ({}) - σ({}) = {drop}, expected {expected}",
                    w[0].0, w[1].0
                ),
            });
        }
    }
    Ok(ledger)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "kebab-case")]
pub enum FoxMilnor {
    /// The Alexander polynomials differ and the first one is square-free
    /// cyclotomic, so the connected sum cannot have a Fox–Milnor factorization.
    Obstructed { trace1: String, trace2: String },
    Inconclusive { reason: String },
}

impl FoxMilnor {
    pub fn is_obstructed(&self) -> bool {
        matches!(self, FoxMilnor::Obstructed { .. })
    }
}

/// Compares Burau traces of two positive braids of equal writhe on the same
/// number of strands. Never concludes that the closures are concordant.
pub fn fox_milnor_trace_obstruction(
    b1: &BraidWord,
    b2: &BraidWord,
) -> Result<FoxMilnor, ConcordanceError> {
    for b in [b1, b2] {
        if !b.is_positive() {
            return Err(ConcordanceError::NotPositive(b.format()));
        }
    }
    if b1.strands() != b2.strands() {
        return Err(ConcordanceError::Precondition(format!(
            "strand counts differ ({} vs {})",
            b1.strands(),
            b2.strands()
        )));
    }
    if b1.writhe() != b2.writhe() {
        return Err(ConcordanceError::Precondition(format!(
            "writhes differ ({} vs {})",
            b1.writhe(),
            b2.writhe()
        )));
    }
    let m1 = burau::reduced_burau(b1);
    let m2 = burau::reduced_burau(b2);
    // det B = (-t)^writhe for positive words; checked rather than assumed
    if m1.det() != m2.det() {
        return Err(ConcordanceError::Precondition(
            "Burau determinants differ despite equal writhe".into(),
        ));
    }
    let (tr1, tr2) = (m1.trace(), m2.trace());
    if tr1 == tr2 {
        return Ok(FoxMilnor::Inconclusive {
            reason: "traces agree".into(),
        });
    }
    if b1.strands() == 3 {
        // for 2×2 matrices det(I - B) = 1 - tr B + det B
        let one = LaurentPoly::one();
        let lhs = &(&one - &tr1) + &m1.det();
        if lhs != burau::burau_det_i_minus(b1) {
            return Err(ConcordanceError::Precondition(
                "det(I - B) does not match 1 - tr B + det B".into(),
            ));
        }
    }
    let a1 = burau::alexander(b1)?;
    let a2 = burau::alexander(b2)?;
    if a1 == a2 {
        return Ok(FoxMilnor::Inconclusive {
            reason: "traces differ but Alexander polynomials agree".into(),
        });
    }
    match cyclotomic_factorization(a1.poly()) {
        Some(f) if f.windows(2).all(|w| w[0] != w[1]) => Ok(FoxMilnor::Obstructed {
            trace1: tr1.render(),
            trace2: tr2.render(),
        }),
        Some(_) => Ok(FoxMilnor::Inconclusive {
            reason: "first Alexander polynomial has a repeated cyclotomic factor".into(),
        }),
        None => Ok(FoxMilnor::Inconclusive {
            reason: "first Alexander polynomial is not a product of cyclotomics".into(),
        }),
    }
}

/// True when the cyclotomic indices `{l·h}` of `T(p, q)` are all distinct.
pub fn torus_factors_square_free(p: u64, q: u64) -> Result<bool, ConcordanceError> {
    let idx = burau::torus_cyclotomic_indices(p, q)?;
    Ok(idx.windows(2).all(|w| w[0] != w[1]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Signature,
    FoxMilnorTrace,
    Genus,
    BraidIndex,
    SameKnot,
    Undistinguished,
}

impl Verdict {
    pub fn distinguishes(self) -> bool {
        !matches!(self, Verdict::SameKnot | Verdict::Undistinguished)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Signature => "signature",
            Verdict::FoxMilnorTrace => "fox-milnor-trace",
            Verdict::Genus => "genus",
            Verdict::BraidIndex => "braid-index",
            Verdict::SameKnot => "same-knot",
            Verdict::Undistinguished => "undistinguished",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Compares positive torus knots `T(p1, q1)` and `T(p2, q2)`. The braid
/// index of `T(p, q)` is `min(p, q)`; knots of equal braid index are told
/// apart by genus. The braid-index verdict rests on a cited minimality
/// result rather than a computation.
pub fn torus_distinctness(p1: u64, q1: u64, p2: u64, q2: u64) -> Verdict {
    let norm = |p: u64, q: u64| (p.min(q), p.max(q));
    let (a, b) = (norm(p1, q1), norm(p2, q2));
    if a == b {
        return Verdict::SameKnot;
    }
    if a.0 != b.0 {
        return Verdict::BraidIndex;
    }
    let genus = |(p, q): (u64, u64)| (p - 1) * (q - 1) / 2;
    if genus(a) != genus(b) {
        Verdict::Genus
    } else {
        Verdict::Undistinguished
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub twist_positive: bool,
    /// L-space status is taken from the literature, not computed.
    pub lspace_assumed: bool,
    pub torus_knot: bool,
    /// Non-torus members are hyperbolic by a cited classification; only the
    /// link test on the satellite braids is computed.
    pub hyperbolic_cited: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantRecord {
    pub label: String,
    pub q: usize,
    pub k: usize,
    pub m: usize,
    pub braid: BraidWord,
    pub writhe: i64,
    pub genus: i64,
    pub tau: i64,
    pub signature: i64,
    pub alexander: AlexanderPoly,
    pub flags: Flags,
}

impl InvariantRecord {
    pub fn build(q: usize, member: FamilyMember) -> Result<Self, ConcordanceError> {
        let braid = member.word();
        let (genus, tau) = genus_tau(&braid)?;
        let closed = member.signature();
        let engine = goeritz::signature_gordon_litherland(member.goeritz_index(), member.m)?;
        if closed != engine {
            return Err(ConcordanceError::SignatureMismatch {
                label: member.to_string(),
                closed,
                engine,
            });
        }
        let torus = member.m == 0 || (q % 3 == 2 && member.k + 1 == q);
        Ok(InvariantRecord {
            label: member.to_string(),
            q,
            k: member.k,
            m: member.m,
            writhe: braid.writhe(),
            genus,
            tau,
            signature: closed,
            alexander: burau::alexander(&braid)?,
            flags: Flags {
                twist_positive: braid::is_twist_positive(&braid),
                lspace_assumed: true,
                torus_knot: torus,
                hyperbolic_cited: !torus,
            },
            braid,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairVerdict {
    pub first: usize,
    pub second: usize,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fox_milnor: Option<FoxMilnor>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistinctnessReport {
    pub q: usize,
    pub genus: i64,
    pub members: Vec<InvariantRecord>,
    pub pairs: Vec<PairVerdict>,
    pub verdict: String,
}

pub const PAIRWISE_DISTINCT: &str = "pairwise distinct";

impl DistinctnessReport {
    pub fn pairwise_distinct(&self) -> bool {
        self.pairs.iter().all(|p| p.verdict.distinguishes())
    }

    /// Distinct verdicts on pairs involving member `i`, sorted.
    pub fn obstructions_for(&self, i: usize) -> Vec<Verdict> {
        let set: BTreeSet<Verdict> = self
            .pairs
            .iter()
            .filter(|p| p.first == i || p.second == i)
            .map(|p| p.verdict)
            .collect();
        set.into_iter().collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn csv_header() -> [&'static str; 10] {
        [
            "label",
            "q",
            "k",
            "m",
            "writhe",
            "genus",
            "tau",
            "signature",
            "verdict",
            "obstruction_used",
        ]
    }

    /// One row per member; `k` and `m` are the standard-form parameters of
    /// `T(3, k; 2m)`.
    pub fn csv_rows(&self) -> Vec<[String; 10]> {
        let row_verdict = if self.pairwise_distinct() {
            "distinct"
        } else {
            "undistinguished"
        };
        self.members
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let used: Vec<&str> = self.obstructions_for(i).iter().map(|v| v.as_str()).collect();
                [
                    r.label.clone(),
                    r.q.to_string(),
                    r.k.to_string(),
                    r.m.to_string(),
                    r.writhe.to_string(),
                    r.genus.to_string(),
                    r.tau.to_string(),
                    r.signature.to_string(),
                    row_verdict.to_string(),
                    if used.is_empty() { "none".into() } else { used.join(";") },
                ]
            })
            .collect()
    }

    pub fn write_csv<W: std::io::Write>(
        reports: &[DistinctnessReport],
        out: W,
    ) -> Result<(), csv::Error> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(Self::csv_header())?;
        for r in reports {
            for row in r.csv_rows() {
                w.write_record(&row)?;
            }
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        Self::write_csv(std::slice::from_ref(self), &mut buf).expect("writing to a Vec");
        String::from_utf8(buf).expect("csv is utf-8")
    }

    pub fn render(&self) -> String {
        let mut out = format!(
            "q = {}  genus = tau = {}  members = {}\n",
            self.q,
            self.genus,
            self.members.len()
        );
        for (i, r) in self.members.iter().enumerate() {
            out.push_str(&format!(
                "  K{i} {:<12} writhe {:>3}  signature {:>4}  Δ = {}\n",
                r.label, r.writhe, r.signature, r.alexander
            ));
        }
        for p in &self.pairs {
            out.push_str(&format!("  (K{}, K{}): {}\n", p.first, p.second, p.verdict));
        }
        out.push_str(&format!("verdict: {}\n", self.verdict));
        out
    }
}

/// Builds the same-τ family of `T(3, q)`, computes its invariants, and
/// assigns every pair a distinguishing verdict. Pairs with equal signature
/// go through the Fox–Milnor trace obstruction. A pair that nothing
/// separates gets [`Verdict::Undistinguished`] and the report verdict says so.
pub fn distinctness_report(q: usize) -> Result<DistinctnessReport, ConcordanceError> {
    let ledger = signature_ledger(q)?;
    let members = ledger
        .iter()
        .map(|(f, _)| InvariantRecord::build(q, *f))
        .collect::<Result<Vec<_>, _>>()?;
    let genus = members[0].genus;
    if members.iter().any(|r| r.genus != genus) {
        return Err(ConcordanceError::Precondition(format!(
            "members of the family for q = {q} have different genera"
        )));
    }
    if burau::torus_alexander(3, q as u64)? != members[0].alexander {
        return Err(ConcordanceError::Precondition(format!(
            "base member does not have the Alexander polynomial of T(3,{q})"
        )));
    }
    let mut pairs = Vec::new();
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            let (a, b) = (&members[i], &members[j]);
            let pair = if a.signature != b.signature {
                PairVerdict {
                    first: i,
                    second: j,
                    verdict: Verdict::Signature,
                    fox_milnor: None,
                }
            } else {
                let fm = if a.flags.torus_knot && torus_factors_square_free(3, q as u64)? {
                    fox_milnor_trace_obstruction(&a.braid, &b.braid)?
                } else {
                    FoxMilnor::Inconclusive {
                        reason: "first knot is not a torus knot with square-free factors".into(),
                    }
                };
                PairVerdict {
                    first: i,
                    second: j,
                    verdict: if fm.is_obstructed() {
                        Verdict::FoxMilnorTrace
                    } else {
                        Verdict::Undistinguished
                    },
                    fox_milnor: Some(fm),
                }
            };
            pairs.push(pair);
        }
    }
    let mut report = DistinctnessReport {
        q,
        genus,
        members,
        pairs,
        verdict: String::new(),
    };
    report.verdict = if report.pairwise_distinct() {
        PAIRWISE_DISTINCT.to_string()
    } else {
        "not separated".to_string()
    };
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CableBounds {
    /// `p · br(K)`, a lower bound for the bridge index of the cable.
    pub bridge_lower: u64,
    /// `p · i(K)`, the braid index of the cable.
    pub braid_index: u64,
    /// Bridge and braid index of the cable agree whenever they agree for `K`.
    pub indices_agree: bool,
}

pub fn cable_index_bounds(
    p: u64,
    q: i64,
    br_k: u64,
    i_k: u64,
) -> Result<CableBounds, ConcordanceError> {
    if p < 2 {
        return Err(ConcordanceError::InvalidParameters(format!("cable needs p >= 2, got {p}")));
    }
    if br_k == 0 || br_k > i_k {
        return Err(ConcordanceError::InvalidParameters(format!(
            "need 1 <= br(K) <= i(K), got {br_k} and {i_k}"
        )));
    }
    if num_integer::gcd(p as i64, q) != 1 {
        return Err(ConcordanceError::InvalidParameters(format!(
            "cable parameters must be coprime, got ({p}, {q})"
        )));
    }
    Ok(CableBounds {
        bridge_lower: p * br_k,
        braid_index: p * i_k,
        indices_agree: br_k == i_k,
    })
}

/// `Δ = 1 - t + t^n + ⋯ + t^{2g-n} - t^{2g-1} + t^{2g}` at both ends, with
/// zeros strictly between degrees 1 and n and between 2g-n and 2g-1.
pub fn conjecture_form_check(a: &AlexanderPoly, n: usize, genus: usize) -> bool {
    let (n, top) = (n as i64, 2 * genus as i64);
    if n < 2 || top < 2 * n || a.degree() != top {
        return false;
    }
    let c = |e: i64| a.coeff(e);
    let one = num_bigint::BigInt::from(1);
    let minus = num_bigint::BigInt::from(-1);
    c(0) == one
        && c(1) == minus
        && c(n) == one
        && (2..n).all(|e| c(e) == 0.into())
        && c(top - n) == one
        && (top - n + 1..top - 1).all(|e| c(e) == 0.into())
        && c(top - 1) == minus
        && c(top) == one
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;

    fn fm(k: usize, m: usize) -> FamilyMember {
        FamilyMember { k, m }
    }

    #[test]
    fn genus_examples() {
        assert_eq!(genus_tau(&parse_braid("2: 1 1 1").unwrap()).unwrap(), (1, 1));
        assert_eq!(genus_tau(&fm(10, 0).word()).unwrap().0, 9);
        assert_eq!(genus_tau(&fm(7, 3).word()).unwrap().0, 9);
        assert!(matches!(
            genus_tau(&parse_braid("2: 1 1").unwrap()),
            Err(ConcordanceError::GenusParity(_))
        ));
        assert!(genus_tau(&parse_braid("3: 1 -2").unwrap()).is_err());
    }

    #[test]
    fn families() {
        assert_eq!(same_tau_family(7).unwrap(), vec![fm(7, 0), fm(4, 3)]);
        assert_eq!(same_tau_family(10).unwrap(), vec![fm(10, 0), fm(7, 3), fm(4, 6)]);
        assert_eq!(same_tau_family(5).unwrap(), vec![fm(4, 1)]);
        assert_eq!(same_tau_family(8).unwrap(), vec![fm(7, 1), fm(4, 4)]);
        assert!(same_tau_family(9).is_err());
        assert!(same_tau_family(2).is_err());
        assert_eq!(fm(7, 3).to_string(), "T(3,7;6)");
    }

    #[test]
    fn ledgers() {
        let sig = |q| signature_ledger(q).unwrap().into_iter().map(|(_, s)| s).collect::<Vec<_>>();
        assert_eq!(sig(10), vec![-14, -14, -16]);
        assert_eq!(sig(7), vec![-8, -10]);
        assert_eq!(sig(13), vec![-16, -18, -20, -22]);
        assert_eq!(sig(11), vec![-16, -16, -18]);
    }

    #[test]
    fn fox_milnor_cases() {
        let r = fox_milnor_trace_obstruction(&fm(10, 0).word(), &fm(7, 3).word()).unwrap();
        assert!(r.is_obstructed(), "{r:?}");
        let r = fox_milnor_trace_obstruction(&fm(10, 1).word(), &fm(7, 4).word()).unwrap();
        assert!(r.is_obstructed(), "{r:?}");
        let b = fm(10, 0).word();
        assert!(!fox_milnor_trace_obstruction(&b, &b).unwrap().is_obstructed());
        assert!(fox_milnor_trace_obstruction(&fm(10, 0).word(), &fm(7, 2).word()).is_err());
    }

    #[test]
    fn torus_verdicts() {
        assert_eq!(torus_distinctness(3, 4, 3, 5), Verdict::Genus);
        assert_eq!(torus_distinctness(3, 4, 4, 3), Verdict::SameKnot);
        assert_eq!(torus_distinctness(2, 7, 3, 4), Verdict::BraidIndex);
    }

    #[test]
    fn reports() {
        let r = distinctness_report(10).unwrap();
        assert_eq!(r.verdict, PAIRWISE_DISTINCT);
        assert_eq!(r.members.len(), 3);
        assert_eq!(r.pairs[0].verdict, Verdict::FoxMilnorTrace);
        assert!(r.pairs[1..].iter().all(|p| p.verdict == Verdict::Signature));
        let r = distinctness_report(7).unwrap();
        assert_eq!(r.pairs.len(), 1);
        assert_eq!(r.pairs[0].verdict, Verdict::Signature);
        let r = distinctness_report(4).unwrap();
        assert!(r.pairs.is_empty());
        assert_eq!(r.verdict, PAIRWISE_DISTINCT);
        assert_eq!(r.csv_rows()[0][9], "none");
    }

    #[test]
    fn csv_shape() {
        let csv = distinctness_report(10).unwrap().to_csv();
        let mut lines = csv.lines();
        assert_eq!(
            lines.next().unwrap(),
            "label,q,k,m,writhe,genus,tau,signature,verdict,obstruction_used"
        );
        assert_eq!(
            lines.next().unwrap(),
            "\"T(3,10;0)\",10,10,0,20,9,9,-14,distinct,signature;fox-milnor-trace"
        );
    }

    #[test]
    fn cable_bounds() {
        let b = cable_index_bounds(2, 3, 3, 3).unwrap();
        assert_eq!((b.bridge_lower, b.braid_index, b.indices_agree), (6, 6, true));
        let b = cable_index_bounds(3, 2, 2, 3).unwrap();
        assert_eq!((b.bridge_lower, b.braid_index, b.indices_agree), (6, 9, false));
        let b = cable_index_bounds(2, 1, 1, 1).unwrap();
        assert_eq!((b.bridge_lower, b.braid_index, b.indices_agree), (2, 2, true));
        assert!(cable_index_bounds(1, 1, 1, 1).is_err());
        assert!(cable_index_bounds(2, 1, 3, 2).is_err());
        assert!(cable_index_bounds(2, 4, 1, 1).is_err());
    }

    #[test]
    fn conjecture_form() {
        let a = burau::alexander(&fm(7, 2).word()).unwrap();
        assert!(conjecture_form_check(&a, 3, 8));
        let cable = AlexanderPoly::new(LaurentPoly::from_i64s(0, &[1, -1, 0, 1, 0, -1, 1]));
        assert!(!conjecture_form_check(&cable, 2, 3));
        assert!(!conjecture_form_check(&cable, 4, 3));
        // torus knots are not hyperbolic; T(2,5) happens to fit anyway
        let t25 = burau::torus_alexander(2, 5).unwrap();
        assert!(conjecture_form_check(&t25, 2, 2));
    }
}
