//! Braid words, the Garside left normal form, and the braid families whose
//! closures the rest of the crate studies.

mod families;
mod garside;
mod word;

pub use families::{
    make_baker_kegel_braid, make_one_bridge_braid, make_satellite_gamma, make_tlink_braid,
    make_torus_braid, make_twisted_torus_braid, make_vafaee_braid, standard_form,
    twisted_torus_word, vafaee_lspace_range,
};
pub use garside::{
    full_twist, garside_normal_form, is_twist_positive, twist_certificate, NormalForm,
    PermutationBraid,
};
pub use word::{parse_braid, BraidWord, Letter};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("generator {index} at byte {position} is out of range for {strands} strands")]
    GeneratorOutOfRange {
        position: usize,
        index: usize,
        strands: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BraidError {
    #[error("a braid needs at least 2 strands, got {0}")]
    TooFewStrands(usize),
    #[error("generator {index} is out of range for {strands} strands")]
    GeneratorOutOfRange { index: usize, strands: usize },
    #[error("words live on different strand counts ({0} vs {1})")]
    StrandMismatch(usize, usize),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

/// Exponent sum of the word.
pub fn writhe(word: &BraidWord) -> i64 {
    word.writhe()
}

/// Number of cycles of the induced permutation.
pub fn closure_components(word: &BraidWord) -> usize {
    word.closure_components()
}

pub fn conjugate_by_garside(word: &BraidWord) -> BraidWord {
    word.conjugate_by_garside()
}

pub fn cyclic_rotate(word: &BraidWord, k: i64) -> BraidWord {
    word.cyclic_rotate(k)
}
