//! The full check suite behind `braidknot verify`. Every check is an exact
//! comparison; output is deterministic for a given configuration.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::braid::{self, BraidWord, Letter};
use crate::burau;
use crate::concordance::{self, PAIRWISE_DISTINCT};
use crate::goeritz::{self, PnKind, SymMatrix};
use crate::laurent::{LaurentPoly, PolyMatrix};

pub const GOLDEN_FULL_2_2: &str = include_str!("../tests/golden/goeritz_full_2_2.txt");
pub const GOLDEN_REDUCED_2_2: &str = include_str!("../tests/golden/goeritz_2_2.txt");

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub q_max: usize,
    pub k_max: usize,
    pub m_max: usize,
    pub n_max: usize,
    pub fail_fast: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            q_max: 40,
            k_max: 8,
            m_max: 8,
            n_max: 3,
            fail_fast: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: &'static str,
    pub name: &'static str,
    pub passed: bool,
    /// Tag naming the claim under test.
    #[serde(rename = "paper_ref")]
    pub reference: &'static str,
    pub detail: String,
}

impl CheckResult {
    pub fn line(&self) -> String {
        format!(
            "{} [{}] {} ({}): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.reference,
            self.detail
        )
    }
}

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// The checks run by [`run_all`], in order.
pub const CHECKS: [(&str, &str, &str); 12] = [
    ("1", "burau-golden", "burau-display-matrices"),
    ("2", "twist-positive-alexander-form", "twist-positive-alexander-form"),
    ("3", "burau-trace-at-zero", "positive-braid-trace-vanishes"),
    ("4", "goeritz-golden", "goeritz-entry-rules"),
    ("5", "signature-closed-form", "signature-closed-form"),
    ("6", "pn-recursion", "pn-block-recursion"),
    ("7", "same-tau-family-count", "same-tau-count"),
    ("8", "distinctness", "distinct-concordance-classes"),
    ("9", "burau-char-poly-invariance", "burau-char-poly-invariant"),
    ("10a", "baker-kegel-gaps", "baker-kegel-alexander"),
    ("10b", "baker-kegel-degree", "baker-kegel-alexander"),
    ("11", "torus-oracle", "torus-alexander-cyclotomic"),
];

/// Runs every check. With `fail_fast` the run stops after the first failure.
pub fn run_all(cfg: &VerifyConfig) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for (id, name, reference) in CHECKS {
        let res = run_one(id, cfg);
        let (passed, detail) = match res {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        out.push(CheckResult {
            id,
            name,
            passed,
            reference,
            detail,
        });
        if cfg.fail_fast && !passed {
            break;
        }
    }
    out
}

pub fn run_one(id: &str, cfg: &VerifyConfig) -> Outcome {
    match id {
        "1" => check_burau_golden(),
        "2" => check_twist_positive_form(),
        "3" => check_trace_at_zero(500, 0x5eed),
        "4" => check_goeritz_golden(),
        "5" => check_signatures(cfg.k_max, cfg.m_max),
        "6" => check_pn_recursion(6, -3..=5),
        "7" => check_family_counts(cfg.q_max),
        "8" => check_distinctness(cfg.q_max),
        "9" => check_char_poly_invariance(16, 4),
        "10a" => check_baker_kegel_gaps(cfg.n_max),
        "10b" => check_baker_kegel_degree(cfg.n_max),
        "11" => check_torus_oracle(),
        other => Err(format!("unknown check {other}")),
    }
}

fn poly(low: i64, c: &[i64]) -> LaurentPoly {
    LaurentPoly::from_i64s(low, c)
}

fn word(s: &str) -> BraidWord {
    braid::parse_braid(s).expect("built-in braid text parses")
}

pub fn check_burau_golden() -> Outcome {
    for k in 1..=6i64 {
        let b = burau::reduced_burau(&braid::twisted_torus_word(3 * k as usize + 1, 0));
        let expected = PolyMatrix::from_rows(vec![
            vec![poly(3 * k + 1, &[-1]), poly(3 * k, &[1])],
            vec![poly(3 * k + 2, &[-1]), LaurentPoly::zero()],
        ]);
        ensure(b == expected, || format!("(σ2σ1)^{} gives {}", 3 * k + 1, b.render()))?;
    }
    for n in 2..=5usize {
        let b = burau::reduced_burau(&braid::full_twist(n));
        let expected = PolyMatrix::scalar(n - 1, LaurentPoly::t_pow(n as i64));
        ensure(b == expected, || format!("Δ² on {n} strands gives {}", b.render()))?;
    }
    // the two partner matrices displayed for the Fox–Milnor step, k = 3
    let k = 3usize;
    let b2 = burau::reduced_burau(&word(&format!("3: (2 1)x{} (1)x6", 3 * (k - 1) + 1)));
    let s = 3 * (k as i64 - 1);
    let expected = PolyMatrix::from_rows(vec![
        vec![poly(s + 7, &[-1]), poly(s, &[1, -1, 1, -1, 1, -1, 1])],
        vec![poly(s + 8, &[-1]), poly(s + 2, &[-1, 1, -1, 1, -1, 1])],
    ]);
    ensure(b2 == expected, || format!("partner matrix is {}", b2.render()))?;
    let b1 = burau::reduced_burau(&word(&format!("3: (2 1)x{}", 3 * k + 2)));
    let t = 3 * k as i64;
    let expected = PolyMatrix::from_rows(vec![
        vec![LaurentPoly::zero(), poly(t + 1, &[-1])],
        vec![poly(t + 3, &[1]), poly(t + 2, &[-1])],
    ]);
    ensure(b1 == expected, || format!("(σ2σ1)^{} gives {}", 3 * k + 2, b1.render()))?;
    Ok("6 torus blocks, 4 full twists, 2 partner matrices".into())
}

/// Twist positive knot words drawn from the families the form theorem
/// covers: twisted torus knots, T-links, 1-bridge braids with extra full
/// twists, and twisted torus braids in the L-space range.
pub fn twist_positive_corpus() -> Vec<(String, BraidWord)> {
    let mut out = Vec::new();
    for k in 4..=16usize {
        if k % 3 == 0 {
            continue;
        }
        for m in 0..=4 {
            out.push((format!("T(3,{k};{})", 2 * m), braid::twisted_torus_word(k, m)));
        }
    }
    let mut pair_lists: Vec<Vec<(usize, usize)>> = Vec::new();
    for p in 2..=5 {
        for q in 1..=p + 3 {
            pair_lists.push(vec![(p, q)]);
        }
    }
    for len in 2..=3 {
        let mut next = Vec::new();
        for list in pair_lists.iter().filter(|l| l.len() == len - 1) {
            let last = list.last().unwrap().0;
            for p in last..=5 {
                for q in 1..=3 {
                    let mut l = list.clone();
                    l.push((p, q));
                    next.push(l);
                }
            }
        }
        pair_lists.extend(next);
    }
    for pairs in pair_lists {
        if let Ok(b) = braid::make_tlink_braid(&pairs) {
            out.push((format!("T-link {pairs:?}"), b));
        }
    }
    for w in 3..=5 {
        for b in 1..=w - 2 {
            for t in 1..=2 * w + 1 {
                out.push((
                    format!("1-bridge ({w},{b},{t})"),
                    braid::make_one_bridge_braid(w, b, t).unwrap(),
                ));
            }
        }
    }
    for w in 3..=5 {
        for t in w + 1..=3 * w + 1 {
            for k in 1..w {
                for s in 1..=2 {
                    if braid::vafaee_lspace_range(w, t, k, s) {
                        out.push((
                            format!("twisted ({w},{t},{k},{s})"),
                            braid::make_vafaee_braid(w, t, k, s).unwrap(),
                        ));
                    }
                }
            }
        }
    }
    out.retain(|(_, b)| b.closure_is_knot() && braid::is_twist_positive(b));
    out
}

pub fn check_twist_positive_form() -> Outcome {
    let corpus = twist_positive_corpus();
    let bad: Vec<String> = corpus
        .par_iter()
        .filter_map(|(label, b)| match burau::check_twist_positive_form(b) {
            Ok(r) if r.passed() => None,
            Ok(r) => Some(format!("{label}: Δ = {}", r.alexander)),
            Err(e) => Some(format!("{label}: {e}")),
        })
        .collect();
    ensure(bad.is_empty(), || bad.join("; "))?;
    Ok(format!("{} twist positive knots", corpus.len()))
}

/// Positive words on at most 4 strands with at most 16 letters whose
/// closures are knots, from a seeded generator.
pub fn random_positive_knot_words(count: usize, seed: u64) -> Vec<BraidWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(2..=4);
        let len = rng.gen_range(1..=16);
        let letters: Vec<Letter> = (0..len).map(|_| Letter::pos(rng.gen_range(1..n))).collect();
        let w = BraidWord::new(n, letters).expect("generated in range");
        if w.closure_is_knot() {
            out.push(w);
        }
    }
    out
}

pub fn check_trace_at_zero(count: usize, seed: u64) -> Outcome {
    let words = random_positive_knot_words(count, seed);
    for w in &words {
        let ok = burau::trace_at_zero_is_zero(w).map_err(|e| e.to_string())?;
        ensure(ok, || format!("tr B(0) ≠ 0 for {w}"))?;
    }
    Ok(format!("{} random positive knot words", words.len()))
}

pub fn check_goeritz_golden() -> Outcome {
    let fam = goeritz::goeritz_family_matrix(2, 2).map_err(|e| e.to_string())?;
    let full = SymMatrix::parse_dump(GOLDEN_FULL_2_2).map_err(|e| e.to_string())?;
    let reduced = SymMatrix::parse_dump(GOLDEN_REDUCED_2_2).map_err(|e| e.to_string())?;
    ensure(fam.full == full, || format!("G' differs:\n{}", fam.full))?;
    ensure(fam.reduced == reduced, || format!("G differs:\n{}", fam.reduced))?;
    ensure(fam.mu == 11, || format!("μ = {}", fam.mu))?;
    Ok("G' 8×8, G 7×7 and μ = 11 match".into())
}

pub fn check_signatures(k_max: usize, m_max: usize) -> Outcome {
    let grid: Vec<(usize, usize)> = (1..=k_max)
        .flat_map(|k| (0..=m_max).map(move |m| (k, m)))
        .collect();
    let bad: Vec<String> = grid
        .par_iter()
        .filter_map(|&(k, m)| {
            let closed = goeritz::signature_closed_form(k, m);
            match goeritz::signature_gordon_litherland(k, m) {
                Ok(gl) if gl == closed => None,
                Ok(gl) => Some(format!("(k,m)=({k},{m}): closed {closed}, Goeritz {gl}")),
                Err(e) => Some(format!("(k,m)=({k},{m}): {e}")),
            }
        })
        .collect();
    ensure(bad.is_empty(), || bad.join("; "))?;
    // T(3,4), T(3,5) and T(3,8) through their standard forms
    for (q, expected) in [(4usize, -6i64), (5, -8), (8, -10)] {
        let (k, m) = braid::standard_form(q, 0).map_err(|e| e.to_string())?;
        let s = goeritz::signature_gordon_litherland((k - 1) / 3, m).map_err(|e| e.to_string())?;
        ensure(s == expected, || format!("σ(T(3,{q})) = {s}, expected {expected}"))?;
    }
    Ok(format!("{} parameter pairs agree; spot values -6, -8, -10", grid.len()))
}

pub fn check_pn_recursion(l_max: usize, eps: std::ops::RangeInclusive<i64>) -> Outcome {
    let mut n = 0;
    for l in 1..=l_max {
        for e in eps.clone() {
            for kind in [PnKind::P, PnKind::N] {
                let red = goeritz::pn_reduce(l, e, kind).map_err(|err| err.to_string())?;
                let direct = goeritz::inertia(&goeritz::make_pn(kind, l, e));
                ensure(red.inertia() == direct, || {
                    format!("{kind:?}_({l},{e}): recursion {} vs direct {direct}", red.inertia())
                })?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} matrices"))
}

fn valid_qs(q_max: usize) -> Vec<usize> {
    (4..=q_max).filter(|q| q % 3 != 0).collect()
}

pub fn check_family_counts(q_max: usize) -> Outcome {
    let qs = valid_qs(q_max);
    for &q in &qs {
        let fam = concordance::same_tau_family(q).map_err(|e| e.to_string())?;
        ensure(fam.len() == q / 3, || format!("q = {q}: {} members", fam.len()))?;
        let w0 = fam[0].word().writhe();
        ensure(fam.iter().all(|f| f.word().writhe() == w0), || {
            format!("q = {q}: writhes differ")
        })?;
        ensure(w0 == 2 * q as i64, || format!("q = {q}: writhe {w0}, expected {}", 2 * q))?;
    }
    Ok(format!("{} values of q", qs.len()))
}

pub fn check_distinctness(q_max: usize) -> Outcome {
    let qs = valid_qs(q_max);
    let results: Vec<Result<usize, String>> = qs
        .par_iter()
        .map(|&q| {
            let r = concordance::distinctness_report(q).map_err(|e| format!("q = {q}: {e}"))?;
            if r.verdict != PAIRWISE_DISTINCT {
                return Err(format!("q = {q}: {}", r.verdict));
            }
            let fm = r
                .pairs
                .iter()
                .filter(|p| p.verdict == concordance::Verdict::FoxMilnorTrace)
                .count();
            let expect_fm = usize::from((q / 3) % 2 == 1 && q / 3 >= 2);
            if fm != expect_fm {
                return Err(format!("q = {q}: {fm} Fox–Milnor pairs, expected {expect_fm}"));
            }
            Ok(fm)
        })
        .collect();
    let mut fm_total = 0;
    for r in results {
        fm_total += r?;
    }
    Ok(format!(
        "{} genus classes pairwise distinct; {fm_total} equal-signature pairs separated by traces",
        qs.len()
    ))
}

pub fn check_char_poly_invariance(q_max: usize, m_max: usize) -> Outcome {
    let mut n = 0;
    for q in (4..=q_max).filter(|q| q % 3 == 1) {
        for m in 1..=m_max {
            let a = burau::reduced_burau(&braid::twisted_torus_word(q, m)).char_poly();
            let b = burau::reduced_burau(&braid::twisted_torus_word(q + 1, m - 1)).char_poly();
            ensure(a == b, || format!("T(3,{q};{}) vs T(3,{};{})", 2 * m, q + 1, 2 * m - 2))?;
            n += 1;
        }
    }
    Ok(format!("{n} isotopic pairs"))
}

pub fn check_baker_kegel_gaps(n_max: usize) -> Outcome {
    for n in 1..=n_max {
        let cert = burau::baker_kegel_certificate(n).map_err(|e| e.to_string())?;
        ensure(cert.exponents.starts_with(&[0, 1, 4, 5]), || {
            format!("n = {n}: exponents {:?}", cert.exponents)
        })?;
        ensure(cert.max_gap == 3, || format!("n = {n}: max gap {}", cert.max_gap))?;
        ensure(burau::lspace_admissible(&cert.alexander), || {
            format!("n = {n}: Δ = {} is not L-space shaped", cert.alexander)
        })?;
        ensure(cert.bridge_equals_braid_index == Some(4), || {
            format!("n = {n}: certificate does not conclude br = i = 4")
        })?;
    }
    Ok(format!("n = 1..{n_max}: starts 0,1,4,5, gap 3, br = i = 4"))
}

pub fn check_baker_kegel_degree(n_max: usize) -> Outcome {
    let mut degrees = Vec::new();
    for n in 1..=n_max {
        let a = burau::alexander(&braid::make_baker_kegel_braid(n).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        degrees.push((n, a.degree()));
    }
    let bad: Vec<String> = degrees
        .iter()
        .filter(|&&(n, d)| d != 8 * n as i64 + 2)
        .map(|&(n, d)| format!("n = {n}: degree {d}, expected 8n+2 = {}", 8 * n + 2))
        .collect();
    ensure(bad.is_empty(), || bad.join("; "))?;
    Ok("degree 8n+2".into())
}

pub fn check_torus_oracle() -> Outcome {
    let mut n = 0;
    for p in 2..=4usize {
        for q in p + 1..=13 {
            if num_integer::gcd(p, q) != 1 {
                continue;
            }
            let b = braid::make_torus_braid(p, q).map_err(|e| e.to_string())?;
            let a = burau::alexander(&b).map_err(|e| e.to_string())?;
            let oracle = burau::torus_alexander(p as u64, q as u64).map_err(|e| e.to_string())?;
            ensure(a == oracle, || format!("T({p},{q}): Burau {a}, cyclotomic {oracle}"))?;
            if p == 3 {
                let (_, gap) = burau::exponent_gaps(&a);
                ensure(gap == 2, || format!("T(3,{q}): max gap {gap}"))?;
            }
            n += 1;
        }
    }
    Ok(format!("{n} torus knots"))
}
