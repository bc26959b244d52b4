//! Goeritz matrices of the twisted torus knots `T(3, 3k+1; 2m)`, exact
//! inertia of symmetric matrices, and the P/N block recursion.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GoeritzError {
    #[error("matrix is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("rows have inconsistent lengths")]
    Ragged,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("leading block is singular; cannot split")]
    SingularBlock,
    #[error("cannot parse matrix entry {0:?}")]
    BadEntry(String),
}

/// Symmetric square matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymMatrix {
    dim: usize,
    entries: Vec<BigRational>,
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl SymMatrix {
    pub fn zero(dim: usize) -> Self {
        SymMatrix {
            dim,
            entries: vec![BigRational::zero(); dim * dim],
        }
    }

    pub fn diagonal(diag: &[i64]) -> Self {
        let mut m = Self::zero(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.entries[i * diag.len() + i] = q(d);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self, GoeritzError> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(GoeritzError::Ragged);
        }
        let m = SymMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        };
        for i in 0..dim {
            for j in i + 1..dim {
                if m.get(i, j) != m.get(j, i) {
                    return Err(GoeritzError::Asymmetric(i, j));
                }
            }
        }
        Ok(m)
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self, GoeritzError> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.dim + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.entries[j * self.dim + i] = v.clone();
        self.entries[i * self.dim + j] = v;
    }

    pub fn set_int(&mut self, i: usize, j: usize, v: i64) {
        self.set(i, j, q(v));
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigRational]> {
        self.entries.chunks(self.dim.max(1)).take(self.dim)
    }

    /// Entries as integers, if every entry is integral.
    pub fn to_int_rows(&self) -> Option<Vec<Vec<i64>>> {
        self.rows()
            .map(|r| {
                r.iter()
                    .map(|v| {
                        if v.is_integer() {
                            i64::try_from(v.to_integer()).ok()
                        } else {
                            None
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Deletes row and column `k`.
    pub fn minor(&self, k: usize) -> SymMatrix {
        let keep: Vec<usize> = (0..self.dim).filter(|&i| i != k).collect();
        self.submatrix(&keep)
    }

    /// The principal submatrix on `idx`.
    pub fn submatrix(&self, idx: &[usize]) -> SymMatrix {
        let mut m = SymMatrix::zero(idx.len());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                m.entries[a * idx.len() + b] = self.get(i, j).clone();
            }
        }
        m
    }

    /// `S · M · Sᵀ` for an arbitrary square `S` given by rows.
    pub fn congruent(&self, s: &[Vec<BigRational>]) -> SymMatrix {
        let n = self.dim;
        let mut sm = vec![BigRational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                if s[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    sm[i * n + j] += &s[i][k] * self.get(k, j);
                }
            }
        }
        let mut out = SymMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = BigRational::zero();
                for k in 0..n {
                    acc += &sm[i * n + k] * &s[j][k];
                }
                out.entries[i * n + j] = acc;
            }
        }
        out
    }

    pub fn row_sums(&self) -> Vec<BigRational> {
        self.rows().map(|r| r.iter().sum()).collect()
    }

    /// Block direct sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &SymMatrix) -> SymMatrix {
        let n = self.dim + other.dim;
        let mut m = SymMatrix::zero(n);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m.entries[i * n + j] = self.get(i, j).clone();
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                m.entries[(i + self.dim) * n + j + self.dim] = other.get(i, j).clone();
            }
        }
        m
    }

    /// One row per line, entries space separated, rationals as `p/q`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for r in self.rows() {
            let line: Vec<String> = r.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the [`dump`](Self::dump) format. Blank lines are ignored.
    pub fn parse_dump(text: &str) -> Result<SymMatrix, GoeritzError> {
        let rows = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                l.split_whitespace()
                    .map(|tok| {
                        tok.trim_start_matches('+')
                            .parse::<BigRational>()
                            .map_err(|_| GoeritzError::BadEntry(tok.to_string()))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_rows(rows)
    }
}

impl fmt::Display for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.dump())
    }
}

impl fmt::Debug for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymMatrix({}x{})\n{}", self.dim, self.dim, self.dump())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize)]
pub struct Inertia {
    pub n_pos: usize,
    pub n_neg: usize,
    pub n_zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.n_pos as i64 - self.n_neg as i64
    }

    pub fn dim(&self) -> usize {
        self.n_pos + self.n_neg + self.n_zero
    }

    pub fn of_value(v: &BigRational) -> Inertia {
        let mut i = Inertia::default();
        i.add_value(v);
        i
    }

    fn add_value(&mut self, v: &BigRational) {
        if v.is_positive() {
            self.n_pos += 1;
        } else if v.is_negative() {
            self.n_neg += 1;
        } else {
            self.n_zero += 1;
        }
    }
}

impl std::ops::Add for Inertia {
    type Output = Inertia;
    fn add(self, o: Inertia) -> Inertia {
        Inertia {
            n_pos: self.n_pos + o.n_pos,
            n_neg: self.n_neg + o.n_neg,
            n_zero: self.n_zero + o.n_zero,
        }
    }
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.n_pos, self.n_neg, self.n_zero)
    }
}

/// Diagonal of a matrix congruent to `m`, found by symmetric elimination.
///
/// Pivots are taken in index order. A zero pivot whose row is nonzero is
/// repaired by adding `±` a later row and column, which makes the pivot
/// `2a_pj + a_jj` or `-2a_pj + a_jj`; at least one of these is nonzero.
pub fn congruence_diagonal(m: &SymMatrix) -> Vec<BigRational> {
    let n = m.dim;
    let mut a = m.entries.clone();
    let at = |i: usize, j: usize| i * n + j;
    let mut diag = Vec::with_capacity(n);
    for p in 0..n {
        if a[at(p, p)].is_zero() {
            if let Some(j) = (p + 1..n).find(|&j| !a[at(p, j)].is_zero()) {
                let two_apj = &a[at(p, j)] + &a[at(p, j)];
                let sign = if (&two_apj + &a[at(j, j)]).is_zero() {
                    -BigRational::one()
                } else {
                    BigRational::one()
                };
                // row p += sign·row j, then column p += sign·column j
                for c in p..n {
                    let v = &sign * &a[at(j, c)];
                    a[at(p, c)] += v;
                }
                for r in p..n {
                    let v = &sign * &a[at(r, j)];
                    a[at(r, p)] += v;
                }
            }
        }
        let pivot = a[at(p, p)].clone();
        if !pivot.is_zero() {
            for i in p + 1..n {
                if a[at(i, p)].is_zero() {
                    continue;
                }
                let f = &a[at(i, p)] / &pivot;
                for j in p + 1..n {
                    let v = &f * &a[at(p, j)];
                    a[at(i, j)] -= v;
                }
            }
            for i in p + 1..n {
                a[at(i, p)] = BigRational::zero();
                a[at(p, i)] = BigRational::zero();
            }
        }
        diag.push(pivot);
    }
    diag
}

/// Sign counts of `m`, via [`congruence_diagonal`].
pub fn inertia(m: &SymMatrix) -> Inertia {
    let mut out = Inertia::default();
    for d in congruence_diagonal(m) {
        out.add_value(&d);
    }
    out
}

/// `G'(K)`, `G(K)` and `μ` for `T(3, 3k+1; 2m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoeritzFamily {
    pub k: usize,
    pub m: usize,
    pub full: SymMatrix,
    pub reduced: SymMatrix,
    pub mu: i64,
}

/// Builds `G'(K)` from the region incidences of the braid
/// `(σ_2 σ_1)^q (σ_1)^{2m}`, `q = 3k + 1`, then deletes region 0.
pub fn goeritz_family_matrix(k: usize, m: usize) -> Result<GoeritzFamily, GoeritzError> {
    if k < 1 {
        return Err(GoeritzError::InvalidParameters(format!(
            "Goeritz family needs k >= 1, got k = {k}"
        )));
    }
    let qn = 3 * k + 1;
    let m_i = m as i64;
    let mut g = SymMatrix::zero(qn + 1);
    for i in 1..qn {
        g.set_int(0, i, -1);
    }
    g.set_int(0, qn, -(2 * m_i + 1));
    for i in 1..=qn {
        for j in i + 1..=qn {
            let d = (j - i) % qn;
            if d == 1 || d == qn - 1 {
                g.set_int(i, j, 1);
            }
        }
    }
    for i in 0..=qn {
        let off: BigRational = (0..=qn).filter(|&j| j != i).map(|j| g.get(i, j).clone()).sum();
        g.set(i, i, -off);
    }
    Ok(GoeritzFamily {
        k,
        m,
        reduced: g.minor(0),
        full: g,
        mu: (qn + 2 * m) as i64,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PnKind {
    P,
    N,
}

impl PnKind {
    pub fn flip(self) -> PnKind {
        match self {
            PnKind::P => PnKind::N,
            PnKind::N => PnKind::P,
        }
    }
}

/// `(3l+1) × (3l+1)` matrix: `-1` on the diagonal except the last entry
/// `eps`, `+1` on the off-diagonals, and corner `(1, 3l+1)` equal to `+1`
/// for `P` and `-1` for `N`.
pub fn make_pn(kind: PnKind, l: usize, eps: i64) -> SymMatrix {
    assert!(l >= 1, "P/N matrices need l >= 1");
    let d = 3 * l + 1;
    let mut m = SymMatrix::zero(d);
    for i in 0..d {
        m.set_int(i, i, -1);
        if i + 1 < d {
            m.set_int(i, i + 1, 1);
        }
    }
    m.set_int(d - 1, d - 1, eps);
    m.set_int(0, d - 1, if kind == PnKind::P { 1 } else { -1 });
    m
}

pub fn make_p(l: usize, eps: i64) -> SymMatrix {
    make_pn(PnKind::P, l, eps)
}

pub fn make_n(l: usize, eps: i64) -> SymMatrix {
    make_pn(PnKind::N, l, eps)
}

/// The 3×3 block `diag(-1, -1, +1)`.
pub fn b_block() -> SymMatrix {
    SymMatrix::diagonal(&[-1, -1, 1])
}

fn invert3(a: &SymMatrix) -> Option<[[BigRational; 3]; 3]> {
    let e = |i: usize, j: usize| a.get(i, j).clone();
    let mut cof: [[BigRational; 3]; 3] = Default::default();
    for (i, row) in cof.iter_mut().enumerate() {
        for (j, c) in row.iter_mut().enumerate() {
            let r: Vec<usize> = (0..3).filter(|&x| x != i).collect();
            let s: Vec<usize> = (0..3).filter(|&x| x != j).collect();
            let minor = e(r[0], s[0]) * e(r[1], s[1]) - e(r[0], s[1]) * e(r[1], s[0]);
            *c = if (i + j) % 2 == 0 { minor } else { -minor };
        }
    }
    let det: BigRational = (0..3).map(|j| e(0, j) * &cof[0][j]).sum();
    if det.is_zero() {
        return None;
    }
    let mut inv: [[BigRational; 3]; 3] = Default::default();
    for i in 0..3 {
        for j in 0..3 {
            inv[i][j] = &cof[j][i] / &det;
        }
    }
    Some(inv)
}

/// Splits `M = [[A, C], [Cᵀ, D]]` with `A` the leading 3×3 block into the
/// congruent `A ⊕ (D - Cᵀ A⁻¹ C)`.
pub fn peel_block(m: &SymMatrix) -> Result<(SymMatrix, SymMatrix), GoeritzError> {
    if m.dim < 4 {
        return Err(GoeritzError::InvalidParameters("peel_block needs dimension >= 4".into()));
    }
    let head = m.submatrix(&[0, 1, 2]);
    let inv = invert3(&head).ok_or(GoeritzError::SingularBlock)?;
    let rest = m.dim - 3;
    let mut schur = SymMatrix::zero(rest);
    for i in 0..rest {
        for j in i..rest {
            let mut v = m.get(i + 3, j + 3).clone();
            for a in 0..3 {
                for b in 0..3 {
                    let c = m.get(a, i + 3) * &inv[a][b] * m.get(b, j + 3);
                    v -= c;
                }
            }
            schur.set(i, j, v);
        }
    }
    Ok((head, schur))
}

fn ser_display<S: serde::Serializer, T: fmt::Display>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// Outcome of running the P/N recursion to the end.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PnReduction {
    /// Number of 3×3 blocks split off, each congruent to `B`.
    pub blocks: usize,
    /// The final 1×1 entry.
    #[serde(serialize_with = "ser_display")]
    pub tail: BigRational,
    /// Kind of each intermediate matrix, starting with the input.
    pub chain: Vec<PnKind>,
}

impl PnReduction {
    pub fn inertia(&self) -> Inertia {
        let b = Inertia {
            n_pos: 1,
            n_neg: 2,
            n_zero: 0,
        };
        (0..self.blocks).fold(Inertia::of_value(&self.tail), |acc, _| acc + b)
    }
}

/// Repeatedly splits the leading 3×3 block off `P_{l,ε}` or `N_{l,ε}`.
///
/// Each step is checked: the split-off block must have the inertia of `B`
/// and the remainder must be exactly `N_{l-1,ε}` after `P_{l,ε}` (or
/// `P_{l-1,ε}` after `N_{l,ε}`). A failed check is reported as an error.
pub fn pn_reduce(l: usize, eps: i64, kind: PnKind) -> Result<PnReduction, GoeritzError> {
    if l < 1 {
        return Err(GoeritzError::InvalidParameters("pn_reduce needs l >= 1".into()));
    }
    let mut current = make_pn(kind, l, eps);
    let mut level = l;
    let mut k = kind;
    let mut chain = vec![kind];
    let b_inertia = inertia(&b_block());
    loop {
        let (head, rest) = peel_block(&current)?;
        if inertia(&head) != b_inertia {
            return Err(GoeritzError::InvalidParameters(format!(
                "split-off block at level {level} has inertia {}",
                inertia(&head)
            )));
        }
        level -= 1;
        if level == 0 {
            return Ok(PnReduction {
                blocks: l,
                tail: rest.get(0, 0).clone(),
                chain,
            });
        }
        k = k.flip();
        if rest != make_pn(k, level, eps) {
            return Err(GoeritzError::InvalidParameters(format!(
                "remainder at level {level} is not the expected {k:?} matrix"
            )));
        }
        chain.push(k);
        current = rest;
    }
}

/// `σ(T(3, 3k+1; 2m))` in closed form.
pub fn signature_closed_form(k: usize, m: usize) -> i64 {
    let (k, m) = (k as i64, m as i64);
    if k % 2 == 1 && m <= 1 {
        -4 * k - 2 * m - 2
    } else {
        -4 * k - 2 * m
    }
}

/// `sign(G(K)) - μ(K)` computed by exact elimination.
pub fn signature_gordon_litherland(k: usize, m: usize) -> Result<i64, GoeritzError> {
    let fam = goeritz_family_matrix(k, m)?;
    Ok(inertia(&fam.reduced).signature() - fam.mu)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_2_2_entries() {
        let fam = goeritz_family_matrix(2, 2).unwrap();
        assert_eq!(fam.mu, 11);
        let full = fam.full.to_int_rows().unwrap();
        assert_eq!(full[0], vec![11, -1, -1, -1, -1, -1, -1, -5]);
        assert_eq!(full[7], vec![-5, 1, 0, 0, 0, 0, 1, 3]);
        assert!(fam.full.row_sums().iter().all(|s| s.is_zero()));
        assert_eq!(fam.reduced, make_p(2, 3));
    }

    #[test]
    fn small_inertias() {
        assert_eq!(inertia(&b_block()), Inertia { n_pos: 1, n_neg: 2, n_zero: 0 });
        assert_eq!(inertia(&SymMatrix::zero(3)).n_zero, 3);
        // zero diagonal needs the add-row-and-column repair
        let h = SymMatrix::from_int_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(inertia(&h), Inertia { n_pos: 1, n_neg: 1, n_zero: 0 });
        // a_pp + 2a_pj + a_jj = 0 forces the minus sign
        let h = SymMatrix::from_int_rows(&[vec![0, -1], vec![-1, 2]]).unwrap();
        assert_eq!(inertia(&h).signature(), 0);
        let h = SymMatrix::from_int_rows(&[vec![0, 0, 0], vec![0, 0, 2], vec![0, 2, 0]]).unwrap();
        assert_eq!(inertia(&h), Inertia { n_pos: 1, n_neg: 1, n_zero: 1 });
        let fam = goeritz_family_matrix(2, 2).unwrap();
        assert_eq!(inertia(&fam.reduced).signature(), -1);
    }

    #[test]
    fn asymmetric_rejected() {
        let e = SymMatrix::from_int_rows(&[vec![0, 1], vec![2, 0]]).unwrap_err();
        assert_eq!(e, GoeritzError::Asymmetric(0, 1));
    }

    #[test]
    fn pn_small_cases() {
        assert_eq!(
            make_n(1, 7).to_int_rows().unwrap(),
            vec![vec![-1, 1, 0, -1], vec![1, -1, 1, 0], vec![0, 1, -1, 1], vec![-1, 0, 1, 7]]
        );
        assert_eq!(
            make_p(1, 7).to_int_rows().unwrap(),
            vec![vec![-1, 1, 0, 1], vec![1, -1, 1, 0], vec![0, 1, -1, 1], vec![1, 0, 1, 7]]
        );
        for eps in -3..=5 {
            assert_eq!(pn_reduce(1, eps, PnKind::P).unwrap().tail, q(eps - 2));
            assert_eq!(pn_reduce(1, eps, PnKind::N).unwrap().tail, q(eps + 2));
            let two = pn_reduce(2, eps, PnKind::P).unwrap();
            assert_eq!((two.blocks, two.tail), (2, q(eps + 2)));
            assert_eq!(two.chain, vec![PnKind::P, PnKind::N]);
        }
    }

    #[test]
    fn signature_spot_values() {
        assert_eq!(signature_closed_form(1, 0), -6);
        assert_eq!(signature_closed_form(1, 1), -8);
        assert_eq!(signature_closed_form(2, 2), -12);
        assert_eq!(signature_gordon_litherland(2, 2).unwrap(), -12);
        assert_eq!(signature_gordon_litherland(1, 0).unwrap(), -6);
        assert_eq!(signature_gordon_litherland(3, 0).unwrap(), -14);
        assert!(signature_gordon_litherland(0, 0).is_err());
    }

    #[test]
    fn dump_round_trip() {
        let mut m = SymMatrix::zero(2);
        m.set(0, 1, BigRational::new(BigInt::from(-3), BigInt::from(4)));
        m.set_int(1, 1, 5);
        let text = m.dump();
        assert_eq!(text, "0 -3/4\n-3/4 5\n");
        assert_eq!(SymMatrix::parse_dump(&text).unwrap(), m);
        assert_eq!(SymMatrix::parse_dump("+1 0\n0 -1").unwrap(), SymMatrix::diagonal(&[1, -1]));
    }

    #[test]
    fn congruence_preserves_inertia() {
        let m = goeritz_family_matrix(1, 3).unwrap().reduced;
        let s: Vec<Vec<BigRational>> = vec![
            vec![q(1), q(2), q(0), q(0)],
            vec![q(0), q(1), q(0), q(-1)],
            vec![q(0), q(0), q(1), q(0)],
            vec![q(3), q(0), q(0), q(1)],
        ];
        assert_eq!(inertia(&m.congruent(&s)), inertia(&m));
    }
}
