use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::LaurentPoly;

/// A square matrix over `Z[t, t^-1]`, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    dim: usize,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn zero(dim: usize) -> Self {
        PolyMatrix {
            dim,
            entries: vec![LaurentPoly::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, LaurentPoly::one())
    }

    /// `p * I`.
    pub fn scalar(dim: usize, p: LaurentPoly) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = p.clone();
        }
        m
    }

    /// Panics unless `rows` is square.
    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        PolyMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.entries[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: LaurentPoly) {
        self.entries[r * self.dim + c] = p;
    }

    pub fn rows(&self) -> Vec<Vec<LaurentPoly>> {
        self.entries.chunks(self.dim.max(1)).map(<[_]>::to_vec).collect()
    }

    pub fn trace(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        for i in 0..self.dim {
            acc += self.get(i, i);
        }
        acc
    }

    pub fn scale(&self, p: &LaurentPoly) -> Self {
        PolyMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e * p).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::identity(self.dim);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        result
    }

    /// Square submatrix on the given (sorted) row/column indices.
    pub fn principal_minor(&self, idx: &[usize]) -> Self {
        let k = idx.len();
        let mut m = Self::zero(k);
        for (a, &r) in idx.iter().enumerate() {
            for (b, &c) in idx.iter().enumerate() {
                m.entries[a * k + b] = self.get(r, c).clone();
            }
        }
        m
    }

    /// Determinant. Cofactor expansion up to dimension 4, fraction-free
    /// (Bareiss) elimination above that.
    pub fn det(&self) -> LaurentPoly {
        if self.dim <= 4 {
            self.det_cofactor()
        } else {
            self.det_bareiss()
        }
    }

    pub fn det_cofactor(&self) -> LaurentPoly {
        match self.dim {
            0 => LaurentPoly::one(),
            1 => self.entries[0].clone(),
            2 => &(self.get(0, 0) * self.get(1, 1)) - &(self.get(0, 1) * self.get(1, 0)),
            n => {
                let mut acc = LaurentPoly::zero();
                let rest: Vec<usize> = (1..n).collect();
                for c in 0..n {
                    let a = self.get(0, c);
                    if a.is_zero() {
                        continue;
                    }
                    let cols: Vec<usize> = (0..n).filter(|&x| x != c).collect();
                    let mut minor = Self::zero(n - 1);
                    for (i, &r) in rest.iter().enumerate() {
                        for (j, &cc) in cols.iter().enumerate() {
                            minor.entries[i * (n - 1) + j] = self.get(r, cc).clone();
                        }
                    }
                    let term = a * &minor.det_cofactor();
                    if c % 2 == 0 {
                        acc += &term;
                    } else {
                        acc = acc - term;
                    }
                }
                acc
            }
        }
    }

    pub fn det_bareiss(&self) -> LaurentPoly {
        let n = self.dim;
        if n == 0 {
            return LaurentPoly::one();
        }
        let mut a = self.rows();
        let mut sign_flip = false;
        let mut prev = LaurentPoly::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign_flip = !sign_flip;
                    }
                    None => return LaurentPoly::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num
                        .exact_div(&prev)
                        .expect("Bareiss division is exact over an integral domain");
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if sign_flip {
            -d
        } else {
            d
        }
    }

    /// Coefficients of `det(xI - M)` and `det(I - xM)`.
    pub fn char_poly(&self) -> CharPoly {
        CharPoly::of(self)
    }

    /// Dump with one row per line, entries separated by ` | `.
    pub fn render(&self) -> String {
        self.rows()
            .iter()
            .map(|r| r.iter().map(LaurentPoly::render).collect::<Vec<_>>().join(" | "))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{} [", self.dim, self.dim)?;
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(LaurentPoly::render).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Mul for &PolyMatrix {
    type Output = PolyMatrix;
    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = PolyMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += &(a * b);
                    }
                }
            }
        }
        out
    }
}

impl Add for &PolyMatrix {
    type Output = PolyMatrix;
    fn add(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        PolyMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &PolyMatrix {
    type Output = PolyMatrix;
    fn sub(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        PolyMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

/// The polynomials `q_M(x) = det(I - xM) = 1 + a_1 x + ... + a_d x^d` and
/// `p_M(x) = det(xI - M)`, with coefficients in `Z[t, t^-1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharPoly {
    /// `[1, a_1, ..., a_d]`
    q: Vec<LaurentPoly>,
}

impl CharPoly {
    fn of(m: &PolyMatrix) -> Self {
        // a_k = (-1)^k * (sum of k x k principal minors)
        let d = m.dim();
        let mut q = vec![LaurentPoly::zero(); d + 1];
        q[0] = LaurentPoly::one();
        for mask in 1u32..(1u32 << d) {
            let idx: Vec<usize> = (0..d).filter(|&i| mask & (1 << i) != 0).collect();
            let k = idx.len();
            let minor = m.principal_minor(&idx).det();
            if k.is_multiple_of(2) {
                q[k] += &minor;
            } else {
                q[k] = &q[k] - &minor;
            }
        }
        CharPoly { q }
    }

    pub fn dim(&self) -> usize {
        self.q.len() - 1
    }

    /// Coefficients of `det(I - xM)` in increasing powers of `x`.
    pub fn q_coeffs(&self) -> &[LaurentPoly] {
        &self.q
    }

    /// Coefficients of `det(xI - M)` in increasing powers of `x`; the
    /// reversal of [`CharPoly::q_coeffs`].
    pub fn p_coeffs(&self) -> Vec<LaurentPoly> {
        self.q.iter().rev().cloned().collect()
    }

    /// `a_k` for `0 <= k <= d`.
    pub fn a(&self, k: usize) -> &LaurentPoly {
        &self.q[k]
    }

    /// Evaluates `q_M` at `x = value`.
    pub fn eval_q(&self, value: &LaurentPoly) -> LaurentPoly {
        horner(&self.q, value)
    }

    /// Evaluates `p_M` at `x = value`.
    pub fn eval_p(&self, value: &LaurentPoly) -> LaurentPoly {
        horner(&self.p_coeffs(), value)
    }

    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        for (k, c) in self.q.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let body = if c.terms().count() > 1 {
                format!("({})", c.render())
            } else {
                c.render()
            };
            parts.push(match k {
                0 => body,
                1 => format!("{body}*x"),
                _ => format!("{body}*x^{k}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

fn horner(coeffs: &[LaurentPoly], x: &LaurentPoly) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64s(low, c)
    }

    fn sigma2_sigma1() -> PolyMatrix {
        PolyMatrix::from_rows(vec![
            vec![p(1, &[-1]), p(0, &[1])],
            vec![p(2, &[-1]), LaurentPoly::zero()],
        ])
    }

    #[test]
    fn trace_of_scalar_matrix() {
        let m = PolyMatrix::scalar(2, LaurentPoly::t_pow(3));
        assert_eq!(m.trace(), p(3, &[2]));
    }

    #[test]
    fn two_by_two_det_and_cube() {
        let m = sigma2_sigma1();
        assert_eq!(m.det(), LaurentPoly::t_pow(2));
        assert_eq!(m.pow(3), PolyMatrix::scalar(2, LaurentPoly::t_pow(3)));
    }

    #[test]
    fn char_poly_cases() {
        let m = PolyMatrix::scalar(2, LaurentPoly::t_pow(3));
        let cp = m.char_poly();
        assert_eq!(cp.q_coeffs(), &[LaurentPoly::one(), p(3, &[-2]), p(6, &[1])]);
        let z = PolyMatrix::zero(2).char_poly();
        assert_eq!(z.q_coeffs(), &[LaurentPoly::one(), LaurentPoly::zero(), LaurentPoly::zero()]);
        let m = sigma2_sigma1();
        let cp = m.char_poly();
        assert_eq!(cp.a(1), &-m.trace());
        assert_eq!(cp.a(2), &m.det());
    }

    #[test]
    fn bareiss_agrees_with_cofactor() {
        let rows: Vec<Vec<LaurentPoly>> = (0..5)
            .map(|i| {
                (0..5)
                    .map(|j| p((i as i64) - (j as i64), &[(i * 3 + j) as i64 % 5 - 2, 1]))
                    .collect()
            })
            .collect();
        let m = PolyMatrix::from_rows(rows);
        assert_eq!(m.det_bareiss(), m.det_cofactor());
    }
}
