//! Constructions of NP1CCs of all three types from perfect codes.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::code::Code;
use crate::error::{Error, Result};
use crate::perfect::{
    classify_extended_translate, extend_even, hamming, is_perfect, odd_translate, vasiliev,
    ExtendedKind, Lambda, PerfectCode,
};

/// {(c,0) : c ∈ C₁} ∪ {(c,1) : c ∈ C₂}. Both inputs must be perfect codes
/// of the same length; the glued coordinate is appended last.
pub fn glue(c1: &Code, c2: &Code) -> Result<Code> {
    crate::word::check_lengths(c1.length(), c2.length())?;
    for (name, c) in [("first", c1), ("second", c2)] {
        if !is_perfect(c) {
            return Err(Error::NotPerfect(format!("{name} glue input")));
        }
    }
    let words = c1
        .words()
        .iter()
        .map(|w| w.push(false))
        .chain(c2.words().iter().map(|w| w.push(true)))
        .collect::<Result<Vec<_>>>()?;
    Code::new(c1.length() + 1, words)
}

/// Union of an even-weight extended perfect code (zeroed or an even
/// translate) with an odd translate of an extended perfect code.
///
/// A zeroed first argument yields a zeroed Type A code; an even translate
/// yields a non-zeroed translate of one.
pub fn type_a_union(ext: &Code, odd_t: &Code) -> Result<Code> {
    let first = classify_extended_translate(ext)?;
    if first == ExtendedKind::OddTranslate {
        return Err(Error::KindMismatch("first argument is an odd translate".into()));
    }
    let second = classify_extended_translate(odd_t)?;
    if second != ExtendedKind::OddTranslate {
        return Err(Error::KindMismatch(format!("second argument is {second:?}")));
    }
    ext.union(odd_t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum LinearVariant {
    A,
    B,
}

/// Kernel of an r × 2^r parity-check matrix. Variant A uses every column
/// 0, 1, …, 2^r − 1 in order; variant B replaces the zero column by a
/// second copy of column 1.
pub fn linear_np1cc(r: usize, variant: LinearVariant) -> Result<Code> {
    if !(1..=4).contains(&r) {
        return Err(Error::InvalidParameters(format!("linear_np1cc r={r} outside 1..=4")));
    }
    let n = 1usize << r;
    let columns: Vec<u32> = (0..n as u32)
        .map(|j| match (variant, j) {
            (LinearVariant::B, 0) => 1,
            _ => j,
        })
        .collect();
    let words = (0..1u64 << n).map(|x| x as u32).filter(|&x| {
        let mut s = 0;
        let mut rest = x;
        while rest != 0 {
            s ^= columns[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        s == 0
    });
    Code::from_masks(n, words)
}

/// Named construction recipes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Recipe {
    GlueA,
    GlueB,
    GlueC,
    UnionA,
    LinearA,
    LinearB,
    Balanced,
}

impl Recipe {
    pub const ALL: [Recipe; 7] = [
        Recipe::GlueA,
        Recipe::GlueB,
        Recipe::GlueC,
        Recipe::UnionA,
        Recipe::LinearA,
        Recipe::LinearB,
        Recipe::Balanced,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Recipe::GlueA => "glue-a",
            Recipe::GlueB => "glue-b",
            Recipe::GlueC => "glue-c",
            Recipe::UnionA => "union-a",
            Recipe::LinearA => "linear-a",
            Recipe::LinearB => "linear-b",
            Recipe::Balanced => "balanced",
        }
    }

    /// Values of `r` the recipe accepts.
    pub fn supported_r(&self) -> std::ops::RangeInclusive<usize> {
        match self {
            Recipe::GlueA | Recipe::GlueB | Recipe::UnionA => 2..=4,
            Recipe::GlueC | Recipe::Balanced => 3..=4,
            Recipe::LinearA | Recipe::LinearB => 1..=4,
        }
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Recipe {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Recipe::ALL
            .into_iter()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown recipe {s:?}")))
    }
}

/// The two Vasil'ev codes used by `glue-c`: λ ≡ 0 and `lambda` (by default
/// λ flipped on the first nonzero base codeword). Both are zeroed when
/// `lambda` vanishes on the zero word.
pub fn vasiliev_pair(r: usize, lambda: Option<&Lambda>) -> Result<(PerfectCode, PerfectCode)> {
    if !(3..=4).contains(&r) {
        return Err(Error::InvalidParameters(format!("vasiliev pair r={r} outside 3..=4")));
    }
    let base = hamming(r - 1)?;
    let zero = Lambda::zero(base.code());
    let other = match lambda {
        Some(l) => l.clone(),
        None => Lambda::flipping(base.code(), &base.code().words()[1..2])?,
    };
    Ok((vasiliev(&base, &zero)?, vasiliev(&base, &other)?))
}

/// Builds the code of length 2^r for `recipe`.
pub fn build(recipe: Recipe, r: usize, lambda: Option<&Lambda>) -> Result<Code> {
    if !recipe.supported_r().contains(&r) {
        return Err(Error::InvalidParameters(format!(
            "recipe {recipe} does not support r={r} (range {:?})",
            recipe.supported_r()
        )));
    }
    if lambda.is_some() && recipe != Recipe::GlueC {
        return Err(Error::InvalidParameters(format!("recipe {recipe} takes no lambda table")));
    }
    match recipe {
        Recipe::GlueA => {
            let h = hamming(r)?;
            glue(h.code(), h.code())
        }
        Recipe::GlueB => {
            let h = hamming(r)?;
            let shifted = crate::code::translate(h.code(), &crate::Word::unit(h.code().length(), 1)?)?;
            glue(h.code(), &shifted)
        }
        Recipe::GlueC => {
            let (c1, c2) = vasiliev_pair(r, lambda)?;
            glue(c1.code(), c2.code())
        }
        Recipe::UnionA => {
            let ext = extend_even(hamming(r)?.code())?;
            type_a_union(&ext, &odd_translate(&ext, 1)?)
        }
        Recipe::LinearA => linear_np1cc(r, LinearVariant::A),
        Recipe::LinearB => linear_np1cc(r, LinearVariant::B),
        Recipe::Balanced => crate::balanced::build_balanced(r),
    }
}
