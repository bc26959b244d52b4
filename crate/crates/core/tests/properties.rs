use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use braidknot::braid::{self, BraidWord, Letter};
use braidknot::burau;
use braidknot::concordance;
use braidknot::goeritz::{self, SymMatrix};
use braidknot::laurent::{cyclotomic, divisors, LaurentPoly, PolyMatrix};

fn letters(n: usize, max_len: usize, signed: bool) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..n, any::<bool>()), 0..=max_len).prop_map(move |v| {
        let ls = v
            .into_iter()
            .map(|(i, s)| if s || !signed { Letter::pos(i) } else { Letter::neg(i) })
            .collect();
        BraidWord::new(n, ls).unwrap()
    })
}

fn signed_word() -> impl Strategy<Value = BraidWord> {
    (2usize..=5).prop_flat_map(|n| letters(n, 12, true))
}

fn positive_knot_word() -> impl Strategy<Value = BraidWord> {
    (2usize..=4)
        .prop_flat_map(|n| letters(n, 16, false))
        .prop_filter("closure is a knot", |w| w.closure_is_knot())
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    (-3i64..=3, prop::collection::vec(-3i64..=3, 0..5))
        .prop_map(|(low, c)| LaurentPoly::from_i64s(low, &c))
}

fn poly_matrix(d: usize) -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec(laurent(), d * d).prop_map(move |v| {
        PolyMatrix::from_rows(v.chunks(d).map(|r| r.to_vec()).collect())
    })
}

fn sym_int_matrix(max_d: usize) -> impl Strategy<Value = SymMatrix> {
    (1..=max_d).prop_flat_map(|d| {
        prop::collection::vec(-5i64..=5, d * d).prop_map(move |v| {
            let mut m = SymMatrix::zero(d);
            for i in 0..d {
                for j in i..d {
                    m.set_int(i, j, v[i * d + j]);
                }
            }
            m
        })
    })
}

/// Rewrites one position of `w` with a braid relation, if one applies.
fn apply_relation(w: &BraidWord, at: usize, choice: u8) -> BraidWord {
    let mut ls = w.letters().to_vec();
    let n = w.strands();
    if ls.is_empty() {
        return w.clone();
    }
    let at = at % ls.len();
    match choice % 3 {
        // insert σ_i σ_i^{-1}
        0 => {
            let i = 1 + at % (n - 1);
            ls.insert(at, Letter::pos(i));
            ls.insert(at + 1, Letter::neg(i));
        }
        // commute far generators
        1 => {
            if at + 1 < ls.len() && ls[at].index.abs_diff(ls[at + 1].index) >= 2 {
                ls.swap(at, at + 1);
            }
        }
        // σ_i σ_j σ_i = σ_j σ_i σ_j for |i - j| = 1, same signs
        _ => {
            if at + 2 < ls.len() {
                let (a, b, c) = (ls[at], ls[at + 1], ls[at + 2]);
                if a == c && a.positive == b.positive && a.index.abs_diff(b.index) == 1 {
                    ls[at] = b;
                    ls[at + 1] = a;
                    ls[at + 2] = b;
                }
            }
        }
    }
    BraidWord::new(n, ls).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn normal_form_is_invariant_under_relations(
        w in signed_word(),
        moves in prop::collection::vec((0usize..64, 0u8..3), 0..6),
    ) {
        let nf = braid::garside_normal_form(&w);
        let mut v = w.clone();
        for (at, c) in moves {
            v = apply_relation(&v, at, c);
        }
        prop_assert_eq!(braid::garside_normal_form(&v), nf);
    }

    #[test]
    fn normal_form_word_has_the_same_burau_matrix(w in signed_word()) {
        let nf = braid::garside_normal_form(&w);
        prop_assert_eq!(burau::reduced_burau(&nf.to_word()), burau::reduced_burau(&w));
        prop_assert_eq!(braid::garside_normal_form(&nf.to_word()), nf);
    }

    #[test]
    fn normal_form_multiplication(a in signed_word(), extra in prop::collection::vec((1usize..5, any::<bool>()), 0..8)) {
        let n = a.strands();
        let b = BraidWord::new(
            n,
            extra.into_iter()
                .map(|(i, s)| {
                    let i = 1 + (i - 1) % (n - 1);
                    if s { Letter::pos(i) } else { Letter::neg(i) }
                })
                .collect(),
        ).unwrap();
        let direct = braid::garside_normal_form(&a.concat(&b).unwrap());
        let via = braid::garside_normal_form(&a).multiply(&braid::garside_normal_form(&b));
        prop_assert_eq!(via, direct);
    }

    #[test]
    fn inverse_word_cancels(w in signed_word()) {
        let id = braid::garside_normal_form(&w.concat(&w.inverse()).unwrap());
        prop_assert_eq!(id.infimum(), 0);
        prop_assert!(id.factors().is_empty());
    }

    #[test]
    fn format_and_parse_round_trip(w in signed_word()) {
        prop_assert_eq!(braid::parse_braid(&w.format()).unwrap(), w);
    }

    #[test]
    fn trace_at_zero_vanishes(w in positive_knot_word()) {
        prop_assert!(burau::trace_at_zero_is_zero(&w).unwrap());
    }

    #[test]
    fn alexander_is_a_conjugacy_invariant(w in positive_knot_word(), k in -20i64..20) {
        let a = burau::alexander(&w).unwrap();
        prop_assert_eq!(&burau::alexander(&w.cyclic_rotate(k)).unwrap(), &a);
        prop_assert_eq!(&burau::alexander(&w.conjugate_by_garside()).unwrap(), &a);
        prop_assert!(a.is_symmetric());
        prop_assert_eq!(a.poly().eval_at_one().abs(), BigInt::one());
    }

    #[test]
    fn twist_positive_words_have_the_form(w in positive_knot_word()) {
        let n = w.strands();
        let tw = braid::full_twist(n).concat(&w).unwrap();
        if tw.closure_is_knot() {
            let r = burau::check_twist_positive_form(&tw).unwrap();
            prop_assert!(r.passed(), "{}", r.alexander);
        }
    }

    #[test]
    fn det_is_multiplicative(a in poly_matrix(3), b in poly_matrix(3)) {
        prop_assert_eq!((&a * &b).det(), &a.det() * &b.det());
        prop_assert_eq!((&a + &b).trace(), &a.trace() + &b.trace());
        prop_assert_eq!(a.det_bareiss(), a.det_cofactor());
    }

    #[test]
    fn division_undoes_multiplication(a in laurent(), b in laurent()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn inertia_is_a_congruence_invariant(
        m in sym_int_matrix(8),
        ops in prop::collection::vec((0usize..8, 0usize..8, -3i64..=3), 0..12),
    ) {
        // product of elementary unimodular row operations
        let d = m.dim();
        let mut s: Vec<Vec<BigRational>> = (0..d)
            .map(|i| (0..d).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
            .collect();
        for (i, j, c) in ops {
            let (i, j) = (i % d, j % d);
            if i == j {
                continue;
            }
            let row_j = s[j].clone();
            for (x, y) in s[i].iter_mut().zip(row_j) {
                *x += y * BigRational::from_integer(c.into());
            }
        }
        prop_assert_eq!(goeritz::inertia(&m.congruent(&s)), goeritz::inertia(&m));
    }

    #[test]
    fn inertia_matches_descartes_oracle(m in sym_int_matrix(6)) {
        prop_assert_eq!(goeritz::inertia(&m), descartes_inertia(&m));
    }
}

/// Characteristic polynomial `det(xI - M)` by Faddeev–LeVerrier, highest
/// degree first.
fn char_poly_rational(m: &SymMatrix) -> Vec<BigRational> {
    let n = m.dim();
    let a: Vec<Vec<BigRational>> = m.rows().map(|r| r.to_vec()).collect();
    let mul = |x: &Vec<Vec<BigRational>>, y: &Vec<Vec<BigRational>>| {
        let mut out = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                for j in 0..n {
                    out[i][j] += &x[i][k] * &y[k][j];
                }
            }
        }
        out
    };
    let mut coeffs = vec![BigRational::one()];
    let mut mk = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{k-1} I ; c_k = -tr(A M_k) / k
        let mut next = mul(&a, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += coeffs[k - 1].clone();
        }
        mk = next;
        let am = mul(&a, &mk);
        let tr: BigRational = (0..n).map(|i| am[i][i].clone()).sum();
        coeffs.push(-tr / BigRational::from_integer(BigInt::from(k)));
    }
    coeffs
}

fn sign_changes(c: &[BigRational]) -> usize {
    let signs: Vec<bool> = c.iter().filter(|x| !x.is_zero()).map(|x| x.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Real-rooted polynomials: Descartes' rule counts positive roots exactly.
fn descartes_inertia(m: &SymMatrix) -> goeritz::Inertia {
    let p = char_poly_rational(m);
    let n = p.len() - 1;
    let zeros = p.iter().rev().take_while(|c| c.is_zero()).count();
    let flipped: Vec<BigRational> = p
        .iter()
        .enumerate()
        .map(|(i, c)| if (n - i) % 2 == 1 { -c.clone() } else { c.clone() })
        .collect();
    goeritz::Inertia {
        n_pos: sign_changes(&p),
        n_neg: sign_changes(&flipped),
        n_zero: zeros,
    }
}

#[test]
fn cyclotomic_product_identity() {
    for n in 1..=200u64 {
        let prod = divisors(n)
            .into_iter()
            .fold(LaurentPoly::one(), |acc, d| &acc * &cyclotomic(d));
        assert_eq!(prod, LaurentPoly::t_pow(n as i64) - LaurentPoly::one(), "n = {n}");
    }
}

#[test]
fn goeritz_family_is_p_matrix() {
    for k in 1..=8 {
        for m in 0..=8usize {
            let fam = goeritz::goeritz_family_matrix(k, m).unwrap();
            assert_eq!(fam.reduced, goeritz::make_p(k, 2 * m as i64 - 1), "k = {k}, m = {m}");
            assert_eq!(fam.mu, (3 * k + 1 + 2 * m) as i64);
            assert!(fam.full.row_sums().iter().all(|s| s.is_zero()));
        }
    }
}

#[test]
fn pn_tail_gives_the_goeritz_signature() {
    for k in 1..=8usize {
        for m in 0..=8usize {
            let red = goeritz::pn_reduce(k, 2 * m as i64 - 1, goeritz::PnKind::P).unwrap();
            let expected = if k % 2 == 1 && m <= 1 { -(k as i64) - 1 } else { -(k as i64) + 1 };
            assert_eq!(red.inertia().signature(), expected, "k = {k}, m = {m}");
        }
    }
}

#[test]
fn family_writhe_and_ledger_shape() {
    for q in (4..=40).filter(|q| q % 3 != 0) {
        let ledger = concordance::signature_ledger(q).unwrap();
        let writhes: Vec<i64> = ledger.iter().map(|(f, _)| f.word().writhe()).collect();
        assert!(writhes.iter().all(|&w| w == writhes[0]), "q = {q}");
        let repeats: Vec<usize> = ledger
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0].1 == w[1].1)
            .map(|(i, _)| i)
            .collect();
        if (q / 3) % 2 == 1 && q / 3 >= 2 {
            assert_eq!(repeats, vec![0], "q = {q}");
        } else {
            assert!(repeats.is_empty(), "q = {q}");
        }
    }
}

#[test]
fn torus_genus_cross_check() {
    for q in (4..=40).filter(|q| q % 3 != 0) {
        let b = braid::make_torus_braid(3, q).unwrap();
        let (g, tau) = concordance::genus_tau(&b).unwrap();
        assert_eq!(g, (q as i64 - 1), "q = {q}");
        assert_eq!(tau, g);
    }
}

#[test]
fn fox_milnor_trace_identities() {
    // tr B for the torus member is -t^{3k+1}; the case-(1) partner has
    // t^{3(k-1)} (-t^6 + t^5 - t^4 + t^3 - t^2)
    for k in (1..=7i64).step_by(2) {
        let base = braid::twisted_torus_word(3 * k as usize + 1, 0);
        assert_eq!(burau::reduced_burau(&base).trace(), LaurentPoly::monomial(-1, 3 * k + 1));
        if k >= 3 {
            let partner = braid::parse_braid(&format!("3: (2 1)x{} (1)x6", 3 * (k - 1) + 1)).unwrap();
            assert_eq!(
                burau::reduced_burau(&partner).trace(),
                LaurentPoly::from_i64s(3 * (k - 1) + 2, &[-1, 1, -1, 1, -1])
            );
        }
    }
}
