use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{BraidError, ParseError};

/// One Artin generator `σ_i` (positive) or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    /// Generator index, `1 <= index <= n - 1`.
    pub index: usize,
    pub positive: bool,
}

impl Letter {
    pub fn pos(index: usize) -> Self {
        Letter { index, positive: true }
    }

    pub fn neg(index: usize) -> Self {
        Letter { index, positive: false }
    }

    pub fn sign(&self) -> i64 {
        if self.positive {
            1
        } else {
            -1
        }
    }

    pub fn inverse(&self) -> Self {
        Letter {
            index: self.index,
            positive: !self.positive,
        }
    }

    /// The signed token used in the text format.
    pub fn token(&self) -> i64 {
        self.sign() * self.index as i64
    }
}

/// A word in the Artin generators of the braid group on `strands` strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self, BraidError> {
        if strands < 2 {
            return Err(BraidError::TooFewStrands(strands));
        }
        if let Some(l) = letters.iter().find(|l| l.index == 0 || l.index >= strands) {
            return Err(BraidError::GeneratorOutOfRange {
                index: l.index,
                strands,
            });
        }
        Ok(BraidWord { strands, letters })
    }

    /// Positive word from 1-based generator indices.
    pub fn positive(strands: usize, indices: &[usize]) -> Result<Self, BraidError> {
        Self::new(strands, indices.iter().map(|&i| Letter::pos(i)).collect())
    }

    /// Word from signed tokens (`+i` is `σ_i`, `-i` is its inverse).
    pub fn from_tokens(strands: usize, tokens: &[i64]) -> Result<Self, BraidError> {
        let mut letters = Vec::with_capacity(tokens.len());
        for &tok in tokens {
            if tok == 0 {
                return Err(BraidError::GeneratorOutOfRange { index: 0, strands });
            }
            let index = tok.unsigned_abs() as usize;
            letters.push(Letter { index, positive: tok > 0 });
        }
        Self::new(strands, letters)
    }

    pub fn identity(strands: usize) -> Result<Self, BraidError> {
        Self::new(strands, Vec::new())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.positive)
    }

    pub fn tokens(&self) -> Vec<i64> {
        self.letters.iter().map(Letter::token).collect()
    }

    /// Exponent sum.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(Letter::sign).sum()
    }

    /// Concatenation; both words must live on the same number of strands.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn repeat(&self, times: usize) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.repeat(times),
        }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(Letter::inverse).collect(),
        }
    }

    /// The permutation of `0..n` induced on strand positions; `perm[x]` is
    /// where the strand starting at position `x` ends.
    pub fn permutation(&self) -> Vec<usize> {
        // track which strand sits at each position
        let mut at: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            at.swap(l.index - 1, l.index);
        }
        let mut end = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            end[strand] = pos;
        }
        end
    }

    /// Number of components of the closure.
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = perm[x];
            }
        }
        cycles
    }

    pub fn closure_is_knot(&self) -> bool {
        self.closure_components() == 1
    }

    /// Conjugation by the half twist: `σ_i ↦ σ_{n-i}` letterwise.
    pub fn conjugate_by_garside(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self
                .letters
                .iter()
                .map(|l| Letter {
                    index: self.strands - l.index,
                    positive: l.positive,
                })
                .collect(),
        }
    }

    /// Moves the first `k` letters (mod length) to the end.
    pub fn cyclic_rotate(&self, k: i64) -> BraidWord {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let shift = k.rem_euclid(letters.len() as i64) as usize;
            letters.rotate_left(shift);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Canonical text form `<n>: <tok> <tok> ...`.
    pub fn format(&self) -> String {
        let mut s = format!("{}:", self.strands);
        for tok in self.tokens() {
            s.push(' ');
            s.push_str(&tok.to_string());
        }
        s
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

impl FromStr for BraidWord {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_braid(s)
    }
}

impl Serialize for BraidWord {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.format())
    }
}

impl<'de> Deserialize<'de> for BraidWord {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_braid(&s).map_err(serde::de::Error::custom)
    }
}

/// Parses `<n>: <tok> <tok> ...`, where each token is a nonzero integer
/// (`+i` for `σ_i`, `-i` for its inverse). Groups may be repeated with
/// `(...)×k`; `x` and `^` are accepted in place of `×`.
pub fn parse_braid(text: &str) -> Result<BraidWord, ParseError> {
    let mut p = Parser {
        src: text,
        pos: 0,
    };
    p.skip_ws();
    let strands_at = p.pos;
    let strands = p
        .unsigned()
        .ok_or_else(|| p.error("expected strand count"))?;
    p.skip_ws();
    if !p.eat(':') {
        return Err(p.error("expected ':' after strand count"));
    }
    let tokens = p.sequence(0)?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected character"));
    }
    if strands < 2 {
        return Err(ParseError::Syntax {
            position: strands_at,
            message: format!("strand count must be at least 2, got {strands}"),
        });
    }
    let mut letters = Vec::with_capacity(tokens.len());
    for (pos, tok) in tokens {
        let index = tok.unsigned_abs() as usize;
        if index >= strands {
            return Err(ParseError::GeneratorOutOfRange {
                position: pos,
                index,
                strands,
            });
        }
        letters.push(Letter {
            index,
            positive: tok > 0,
        });
    }
    Ok(BraidWord { strands, letters })
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() || c == ',' {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn error(&self, message: &str) -> ParseError {
        ParseError::Syntax {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn unsigned(&mut self) -> Option<usize> {
        let digits: String = self.rest().chars().take_while(char::is_ascii_digit).collect();
        if digits.is_empty() {
            return None;
        }
        self.pos += digits.len();
        digits.parse().ok()
    }

    /// Tokens up to end of input or a closing paren at `depth > 0`.
    fn sequence(&mut self, depth: usize) -> Result<Vec<(usize, i64)>, ParseError> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                None => {
                    if depth > 0 {
                        return Err(self.error("unclosed '('"));
                    }
                    return Ok(out);
                }
                Some(')') => {
                    if depth == 0 {
                        return Err(self.error("unmatched ')'"));
                    }
                    return Ok(out);
                }
                Some('(') => {
                    self.pos += 1;
                    let inner = self.sequence(depth + 1)?;
                    if !self.eat(')') {
                        return Err(self.error("expected ')'"));
                    }
                    self.skip_ws();
                    let times = if self.eat('×') || self.eat('x') || self.eat('^') {
                        self.skip_ws();
                        self.unsigned()
                            .ok_or_else(|| self.error("expected repetition count"))?
                    } else {
                        1
                    };
                    for _ in 0..times {
                        out.extend_from_slice(&inner);
                    }
                }
                Some(c) if c == '-' || c == '+' || c.is_ascii_digit() => {
                    let at = self.pos;
                    let negative = self.eat('-');
                    if !negative {
                        self.eat('+');
                    }
                    let v = self
                        .unsigned()
                        .ok_or_else(|| self.error("expected generator index"))?;
                    if v == 0 {
                        return Err(ParseError::Syntax {
                            position: at,
                            message: "generator index 0 is not allowed".into(),
                        });
                    }
                    let v = v as i64;
                    out.push((at, if negative { -v } else { v }));
                }
                Some(_) => return Err(self.error("unexpected character")),
            }
        }
    }
}
