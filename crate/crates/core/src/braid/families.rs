//! Braid words for the knot families used throughout the crate.

use super::{BraidError, BraidWord, Letter};

fn ascending(from: usize, to: usize) -> Vec<usize> {
    (from..=to).collect()
}

fn descending(from: usize, to: usize) -> Vec<usize> {
    (to..=from).rev().collect()
}

fn invalid(constraint: impl Into<String>) -> BraidError {
    BraidError::InvalidParameters(constraint.into())
}

/// `(σ_1 σ_2 ⋯ σ_{p-1})^q` on `p` strands; closes to `T(p, q)`.
pub fn make_torus_braid(p: usize, q: usize) -> Result<BraidWord, BraidError> {
    if p < 2 {
        return Err(invalid(format!("torus braid needs p >= 2, got p = {p}")));
    }
    if q < 1 {
        return Err(invalid("torus braid needs q >= 1"));
    }
    BraidWord::positive(p, &ascending(1, p - 1).repeat(q))
}

/// `(σ_2 σ_1)^k (σ_2)^{2m}` on three strands, without any range check on `k`.
/// For `k ≡ 0 mod 3` the closure is a link.
pub fn twisted_torus_word(k: usize, m: usize) -> BraidWord {
    let mut idx = [2, 1].repeat(k);
    idx.extend(std::iter::repeat_n(2, 2 * m));
    BraidWord::positive(3, &idx).expect("indices in range")
}

/// The twisted torus knot `T(3, k; 2m)`: closure of `(σ_2 σ_1)^k (σ_2)^{2m}`,
/// with `k >= 4`, `k ≢ 0 mod 3` and `m >= 0`.
pub fn make_twisted_torus_braid(k: usize, m: usize) -> Result<BraidWord, BraidError> {
    if k < 4 {
        return Err(invalid(format!("T(3,k;2m) needs k >= 4, got k = {k}")));
    }
    if k.is_multiple_of(3) {
        return Err(invalid(format!("T(3,k;2m) needs k ≢ 0 mod 3, got k = {k}")));
    }
    Ok(twisted_torus_word(k, m))
}

/// T-link braid `∏ (σ_1 ⋯ σ_{p_i - 1})^{q_i}` on `p_s` strands, where
/// `2 <= p_1 <= ... <= p_s` and every `q_i > 0`.
pub fn make_tlink_braid(pairs: &[(usize, usize)]) -> Result<BraidWord, BraidError> {
    let Some(&(last_p, _)) = pairs.last() else {
        return Err(invalid("T-link needs at least one (p, q) pair"));
    };
    if pairs[0].0 < 2 {
        return Err(invalid("T-link needs p_1 >= 2"));
    }
    if pairs.windows(2).any(|w| w[0].0 > w[1].0) {
        return Err(invalid("T-link needs p_1 <= p_2 <= ... <= p_s"));
    }
    if pairs.iter().any(|&(_, q)| q == 0) {
        return Err(invalid("T-link needs every q_i > 0"));
    }
    let mut idx = Vec::new();
    for &(p, q) in pairs {
        idx.extend(ascending(1, p - 1).repeat(q));
    }
    BraidWord::positive(last_p, &idx)
}

/// 1-bridge braid `(σ_b σ_{b-1} ⋯ σ_1)(σ_{w-1} σ_{w-2} ⋯ σ_1)^t` on `w`
/// strands, with `1 <= b <= w - 2` and `t >= 1`. Values `t >= w` append
/// full twists.
pub fn make_one_bridge_braid(w: usize, b: usize, t: usize) -> Result<BraidWord, BraidError> {
    if w < 3 {
        return Err(invalid(format!("1-bridge braid needs w >= 3, got w = {w}")));
    }
    if b < 1 || b > w - 2 {
        return Err(invalid(format!("1-bridge braid needs 1 <= b <= w - 2, got b = {b}")));
    }
    if t < 1 {
        return Err(invalid("1-bridge braid needs t >= 1"));
    }
    let mut idx = descending(b, 1);
    idx.extend(descending(w - 1, 1).repeat(t));
    BraidWord::positive(w, &idx)
}

/// Twisted torus braid `(σ_{w-1} ⋯ σ_1)^t (σ_{w-1} ⋯ σ_{w-k})^{sk}` on `w`
/// strands, with `1 <= k <= w - 1`, `t >= 1` and `s >= 0`.
pub fn make_vafaee_braid(w: usize, t: usize, k: usize, s: usize) -> Result<BraidWord, BraidError> {
    if w < 2 {
        return Err(invalid(format!("twisted torus braid needs w >= 2, got w = {w}")));
    }
    if k < 1 || k > w - 1 {
        return Err(invalid(format!("twisted torus braid needs 1 <= k <= w - 1, got k = {k}")));
    }
    if t < 1 {
        return Err(invalid("twisted torus braid needs t >= 1"));
    }
    let mut idx = descending(w - 1, 1).repeat(t);
    idx.extend(descending(w - 1, w - k).repeat(s * k));
    BraidWord::positive(w, &idx)
}

/// Parameter range in which the twisted torus braid above is assumed to
/// close to an L-space knot: `t ≡ ±1 mod w` with `t > w`, and either
/// `k = w - 1`, or `k ∈ {2, w - 2}` with `s = 1`.
pub fn vafaee_lspace_range(w: usize, t: usize, k: usize, s: usize) -> bool {
    let residue_ok = t > w && (t % w == 1 || t % w == w - 1);
    let twist_ok = k == w - 1 || ((k == 2 || k + 2 == w) && s == 1);
    w >= 2 && s >= 1 && residue_ok && twist_ok
}

/// Baker–Kegel 4-braid `(σ_2 σ_1 σ_3 σ_2)^{2n+1} σ_1^{-1} σ_2 σ_1 σ_1 σ_2`.
pub fn make_baker_kegel_braid(n: usize) -> Result<BraidWord, BraidError> {
    if n < 1 {
        return Err(invalid("Baker–Kegel braid needs n >= 1"));
    }
    let mut letters: Vec<Letter> = [2, 1, 3, 2]
        .repeat(2 * n + 1)
        .into_iter()
        .map(Letter::pos)
        .collect();
    letters.push(Letter::neg(1));
    letters.extend([2, 1, 1, 2].into_iter().map(Letter::pos));
    BraidWord::new(4, letters)
}

/// `(σ_2)^p (σ_1 σ_2 σ_2 σ_1)^q` on three strands.
pub fn make_satellite_gamma(p: usize, q: usize) -> BraidWord {
    let mut idx = vec![2; p];
    idx.extend([1, 2, 2, 1].repeat(q));
    BraidWord::positive(3, &idx).expect("indices in range")
}

/// Rewrites `T(3, k; 2m)` to an isotopic `T(3, k'; 2m')` with
/// `k' ≡ 1 mod 3`, using `T(3, 3r+2; 2m) ≅ T(3, 3r+1; 2m+2)`.
pub fn standard_form(k: usize, m: usize) -> Result<(usize, usize), BraidError> {
    if k < 4 || k.is_multiple_of(3) {
        return Err(invalid(format!(
            "standard form needs k >= 4 and k ≢ 0 mod 3, got k = {k}"
        )));
    }
    Ok(if k % 3 == 2 { (k - 1, m + 1) } else { (k, m) })
}
