//! Left normal form in the braid group via permutation braids.
//!
//! A positive braid in which every pair of strands crosses at most once is
//! determined by its permutation. Words map to permutations by
//! `σ_{i1}…σ_{ik} ↦ s_{i1} ∘ … ∘ s_{ik}`, where `s_i` swaps positions
//! `i-1` and `i` (0-based). With this convention appending `σ_i` on the
//! right swaps two entries of the image array, and the length of a
//! permutation braid is its inversion count.

use std::fmt;

use super::{BraidWord, Letter};

/// A simple element of the positive braid monoid, stored as a permutation
/// of `0..n` (`images[x] = π(x)`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationBraid {
    images: Vec<usize>,
}

impl PermutationBraid {
    pub fn identity(n: usize) -> Self {
        PermutationBraid {
            images: (0..n).collect(),
        }
    }

    /// The half twist Δ, `x ↦ n - 1 - x`.
    pub fn delta(n: usize) -> Self {
        PermutationBraid {
            images: (0..n).rev().collect(),
        }
    }

    /// The generator `σ_i` (1-based).
    pub fn generator(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        p
    }

    /// Panics unless `images` is a permutation of `0..images.len()`.
    pub fn from_images(images: Vec<usize>) -> Self {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            assert!(x < images.len() && !seen[x], "not a permutation");
            seen[x] = true;
        }
        PermutationBraid { images }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn strands(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn is_delta(&self) -> bool {
        let n = self.images.len();
        self.images.iter().enumerate().all(|(i, &x)| x == n - 1 - i)
    }

    /// Number of crossings, i.e. inversions.
    pub fn length(&self) -> usize {
        let n = self.images.len();
        let mut inv = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// `σ_i` right-divides this braid.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// `σ_i` left-divides this braid.
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.position_of(i - 1) > self.position_of(i)
    }

    fn position_of(&self, value: usize) -> usize {
        self.images.iter().position(|&x| x == value).expect("value in range")
    }

    /// Indices `i` with `σ_i` a right divisor (the finishing set).
    pub fn finishing_set(&self) -> Vec<usize> {
        (1..self.strands()).filter(|&i| self.has_right_descent(i)).collect()
    }

    /// Indices `i` with `σ_i` a left divisor (the starting set).
    pub fn starting_set(&self) -> Vec<usize> {
        (1..self.strands()).filter(|&i| self.has_left_descent(i)).collect()
    }

    /// `self · σ_i`; only a permutation braid when `σ_i` is not a right divisor.
    fn push_right(&mut self, i: usize) {
        self.images.swap(i - 1, i);
    }

    /// `σ_i^{-1} · self`; valid when `σ_i` is a left divisor.
    fn pop_left(&mut self, i: usize) {
        for x in &mut self.images {
            if *x == i - 1 {
                *x = i;
            } else if *x == i {
                *x = i - 1;
            }
        }
    }

    /// Conjugation by Δ: `σ_i ↦ σ_{n-i}`.
    pub fn flip(&self) -> Self {
        let n = self.images.len();
        PermutationBraid {
            images: (0..n).map(|x| n - 1 - self.images[n - 1 - x]).collect(),
        }
    }

    /// `Δ · σ_i^{-1}`, the simple element with `(Δσ_i^{-1}) · σ_i = Δ`.
    pub fn delta_without(n: usize, i: usize) -> Self {
        let mut d = Self::delta(n);
        d.images.swap(i - 1, i);
        d
    }

    /// A positive word for this permutation braid (of length `self.length()`).
    pub fn word(&self) -> Vec<usize> {
        let mut p = self.clone();
        let mut rev = Vec::new();
        while let Some(i) = (1..p.strands()).find(|&i| p.has_right_descent(i)) {
            p.push_right(i);
            rev.push(i);
        }
        rev.reverse();
        rev
    }
}

impl fmt::Debug for PermutationBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images)
    }
}

/// `Δ^infimum · x_1 ⋯ x_k` with every adjacent pair left-weighted and no
/// factor equal to the identity or Δ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalForm {
    strands: usize,
    infimum: i64,
    factors: Vec<PermutationBraid>,
}

impl NormalForm {
    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn infimum(&self) -> i64 {
        self.infimum
    }

    pub fn supremum(&self) -> i64 {
        self.infimum + self.factors.len() as i64
    }

    pub fn factors(&self) -> &[PermutationBraid] {
        &self.factors
    }

    /// Product of two normal forms, computed on the factor level:
    /// `Δ^p X · Δ^q Y = Δ^{p+q} τ^q(X) Y`.
    pub fn multiply(&self, other: &NormalForm) -> NormalForm {
        assert_eq!(self.strands, other.strands, "strand mismatch");
        let mut factors: Vec<PermutationBraid> = if other.infimum.rem_euclid(2) == 1 {
            self.factors.iter().map(PermutationBraid::flip).collect()
        } else {
            self.factors.clone()
        };
        factors.extend(other.factors.iter().cloned());
        finish(self.strands, self.infimum + other.infimum, factors)
    }

    /// A word for the element this form represents. Negative Δ powers are
    /// written with inverse letters.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let delta = PermutationBraid::delta(n).word();
        let mut letters = Vec::new();
        if self.infimum >= 0 {
            for _ in 0..self.infimum {
                letters.extend(delta.iter().map(|&i| Letter::pos(i)));
            }
        } else {
            for _ in 0..-self.infimum {
                letters.extend(delta.iter().rev().map(|&i| Letter::neg(i)));
            }
        }
        for f in &self.factors {
            letters.extend(f.word().into_iter().map(Letter::pos));
        }
        BraidWord::new(n, letters).expect("indices in range")
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|f| {
                let w: Vec<String> = f.word().iter().map(ToString::to_string).collect();
                format!("[{}]", w.join(" "))
            })
            .collect();
        format!("Δ^{} {}", self.infimum, parts.join(" "))
            .trim_end()
            .to_string()
    }
}

/// Left normal form of an arbitrary braid word.
pub fn garside_normal_form(word: &BraidWord) -> NormalForm {
    let n = word.strands();
    let mut infimum = 0i64;
    let mut factors: Vec<PermutationBraid> = Vec::with_capacity(word.len());
    for l in word.letters() {
        if l.positive {
            factors.push(PermutationBraid::generator(n, l.index));
        } else {
            // w σ_i^{-1} = Δ^{-1} τ(w) (Δ σ_i^{-1})
            for f in &mut factors {
                *f = f.flip();
            }
            infimum -= 1;
            factors.push(PermutationBraid::delta_without(n, l.index));
        }
    }
    finish(n, infimum, factors)
}

fn finish(n: usize, infimum: i64, mut factors: Vec<PermutationBraid>) -> NormalForm {
    left_weight(&mut factors);
    let deltas = factors.iter().take_while(|f| f.is_delta()).count();
    factors.drain(..deltas);
    NormalForm {
        strands: n,
        infimum: infimum + deltas as i64,
        factors,
    }
}

/// Makes `(a, b)` left-weighted by moving left divisors of `b` into `a`.
/// Returns whether anything moved.
fn slide(a: &mut PermutationBraid, b: &mut PermutationBraid) -> bool {
    let mut moved = false;
    let n = a.strands();
    loop {
        let Some(i) = (1..n).find(|&i| b.has_left_descent(i) && !a.has_right_descent(i)) else {
            return moved;
        };
        a.push_right(i);
        b.pop_left(i);
        moved = true;
    }
}

/// Repeats right-to-left sliding passes until every adjacent pair is
/// left-weighted, dropping identity factors. Δ factors end up in front.
fn left_weight(factors: &mut Vec<PermutationBraid>) {
    loop {
        let mut changed = false;
        for j in (0..factors.len().saturating_sub(1)).rev() {
            let (head, tail) = factors.split_at_mut(j + 1);
            if slide(&mut head[j], &mut tail[0]) {
                changed = true;
            }
        }
        let before = factors.len();
        factors.retain(|f| !f.is_identity());
        if !changed && factors.len() == before {
            return;
        }
    }
}

/// All letters positive and Δ² left-divides the braid.
pub fn is_twist_positive(word: &BraidWord) -> bool {
    word.is_positive() && garside_normal_form(word).infimum() >= 2
}

/// For a twist positive word, a positive word `γ` with `word = Δ² γ`.
pub fn twist_certificate(word: &BraidWord) -> Option<BraidWord> {
    if !word.is_positive() {
        return None;
    }
    let nf = garside_normal_form(word);
    if nf.infimum() < 2 {
        return None;
    }
    let rest = NormalForm {
        strands: nf.strands,
        infimum: nf.infimum - 2,
        factors: nf.factors.clone(),
    };
    Some(rest.to_word())
}

/// `Δ²` as the positive word `(σ_{n-1} ⋯ σ_1)^n`.
pub fn full_twist(n: usize) -> BraidWord {
    let block: Vec<usize> = (1..n).rev().collect();
    BraidWord::positive(n, &block.repeat(n)).expect("indices in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;

    fn w(s: &str) -> BraidWord {
        parse_braid(s).unwrap()
    }

    #[test]
    fn half_twist_is_delta() {
        let nf = garside_normal_form(&w("3: 1 2 1"));
        assert_eq!(nf.infimum(), 1);
        assert!(nf.factors().is_empty());
    }

    #[test]
    fn full_twist_on_three_strands() {
        let nf = garside_normal_form(&w("3: (2 1)x3"));
        assert_eq!(nf.infimum(), 2);
        assert!(nf.factors().is_empty());
        assert_eq!(garside_normal_form(&full_twist(5)).infimum(), 2);
    }

    #[test]
    fn one_factor_past_full_twist() {
        // Δ² is central, so (σ2σ1)^4 = Δ²·σ2σ1 and σ2σ1 is simple
        let nf = garside_normal_form(&w("3: (2 1)x4"));
        assert_eq!(nf.infimum(), 2);
        assert_eq!(nf.factors().len(), 1);
        assert_eq!(nf.factors()[0].word(), vec![2, 1]);
    }

    #[test]
    fn braid_relation_gives_equal_forms() {
        assert_eq!(
            garside_normal_form(&w("4: 1 2 1 3")),
            garside_normal_form(&w("4: 2 1 2 3"))
        );
        assert_eq!(garside_normal_form(&w("4: 1 3")), garside_normal_form(&w("4: 3 1")));
        assert_ne!(garside_normal_form(&w("3: 1 2")), garside_normal_form(&w("3: 2 1")));
    }

    #[test]
    fn inverse_letters() {
        let nf = garside_normal_form(&w("3: 1 -1"));
        assert_eq!(nf.infimum(), 0);
        assert!(nf.factors().is_empty());
        let nf = garside_normal_form(&w("3: -1"));
        assert_eq!(nf.infimum(), -1);
        assert_eq!(nf.factors().len(), 1);
        let back = garside_normal_form(&nf.to_word());
        assert_eq!(back, nf);
    }

    #[test]
    fn twist_positivity() {
        assert!(is_twist_positive(&w("3: (2 1)x4")));
        assert!(!is_twist_positive(&w("3: 1 2")));
        assert!(!is_twist_positive(&w("4: (2 1 3 2)x3 -1 2 1 1 2")));
        // contains Δ² only after rewriting
        assert!(is_twist_positive(&w("3: 1 2 1 1 2 1")));
    }

    #[test]
    fn certificate_reproduces_word() {
        let b = w("3: (2 1)x7 (2)x4");
        let gamma = twist_certificate(&b).unwrap();
        assert!(gamma.is_positive());
        let rebuilt = full_twist(3).concat(&gamma).unwrap();
        assert_eq!(garside_normal_form(&rebuilt), garside_normal_form(&b));
    }

    #[test]
    fn descents_of_delta() {
        let d = PermutationBraid::delta(4);
        assert_eq!(d.starting_set(), vec![1, 2, 3]);
        assert_eq!(d.finishing_set(), vec![1, 2, 3]);
        assert_eq!(d.length(), 6);
        assert_eq!(d.flip(), d);
        let s1 = PermutationBraid::generator(4, 1);
        assert_eq!(s1.flip(), PermutationBraid::generator(4, 3));
    }
}
