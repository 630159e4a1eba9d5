//! Perfect single-error-correcting codes, their parity extensions and
//! translates, and Vasil'ev-style nonlinear perfect codes.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::code::{translate, Code};
use crate::error::{Error, Result};
use crate::np1cc::covering_radius;
use crate::word::{delete_bit, full_mask, Word};

/// Largest `r` for which perfect codes are fully enumerated (length 15).
pub const MAX_PERFECT_R: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerfectCode {
    code: Code,
    r: usize,
    zeroed: bool,
}

impl PerfectCode {
    /// Wraps `code` after checking it is perfect.
    pub fn new(code: Code) -> Result<Self> {
        let r = perfect_r(&code).ok_or_else(|| {
            Error::NotPerfect(format!("length {} size {}", code.length(), code.size()))
        })?;
        let zeroed = code.is_zeroed();
        Ok(Self { code, r, zeroed })
    }

    pub fn code(&self) -> &Code {
        &self.code
    }

    pub fn into_code(self) -> Code {
        self.code
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn is_zeroed(&self) -> bool {
        self.zeroed
    }
}

/// Returns `r` when `c` is perfect, `None` otherwise.
fn perfect_r(c: &Code) -> Option<usize> {
    let n = c.length();
    let r = (n + 1).trailing_zeros() as usize;
    if (n + 1) != 1 << r || n > 16 {
        return None;
    }
    if c.size() != 1 << (n - r) {
        return None;
    }
    (covering_radius(c).ok()? == 1).then_some(r)
}

/// True iff `c` has length 2^r − 1, size 2^(n−r) and covering radius 1.
///
/// Decided by exhaustive scan, so lengths above 16 report `false`.
pub fn is_perfect(c: &Code) -> bool {
    perfect_r(c).is_some()
}

/// The Hamming code of redundancy `r`: the null space of the parity-check
/// matrix whose columns are 1, 2, …, 2^r − 1 in that order.
pub fn hamming(r: usize) -> Result<PerfectCode> {
    if !(2..=MAX_PERFECT_R).contains(&r) {
        return Err(Error::InvalidParameters(format!(
            "hamming r={r} outside 2..={MAX_PERFECT_R}"
        )));
    }
    let n = (1usize << r) - 1;
    let words = (0..1u32 << n).filter(|&x| syndrome(x) == 0);
    let code = Code::from_masks(n, words)?;
    Ok(PerfectCode { code, r, zeroed: true })
}

/// XOR of the column labels (coordinate index) of the set bits.
fn syndrome(mut x: u32) -> u32 {
    let mut s = 0;
    while x != 0 {
        let j = x.trailing_zeros();
        s ^= j + 1;
        x &= x - 1;
    }
    s
}

/// Appends an even-parity coordinate.
pub fn extend_even(c: &Code) -> Result<Code> {
    let n = c.length();
    let words = c
        .words()
        .iter()
        .map(|w| w.push(w.weight() % 2 == 1))
        .collect::<Result<Vec<_>>>()?;
    Code::new(n + 1, words)
}

/// Deletes coordinate `coord` from every codeword.
pub fn puncture(c: &Code, coord: usize) -> Result<Code> {
    let n = c.length();
    if coord == 0 || coord > n || n == 1 {
        return Err(Error::CoordinateOutOfRange { coord, length: n });
    }
    let mut masks: Vec<u32> = c.words().iter().map(|w| delete_bit(w.bits(), coord - 1)).collect();
    masks.sort_unstable();
    if let Some(p) = masks.windows(2).find(|p| p[0] == p[1]) {
        return Err(Error::Collision(Word::new(n - 1, p[0])?.to_string()));
    }
    Code::from_masks(n - 1, masks)
}

pub fn intersection_size(c1: &Code, c2: &Code) -> Result<usize> {
    crate::word::check_lengths(c1.length(), c2.length())?;
    Ok(c1.words().iter().filter(|w| c2.contains(w)).count())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtendedKind {
    ZeroedExtended,
    OddTranslate,
    EvenTranslate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedPerfectCode {
    pub code: Code,
    pub kind: ExtendedKind,
}

/// Classifies a translate of an extended zeroed perfect code by its weight
/// signature.
pub fn classify_extended_translate(c: &Code) -> Result<ExtendedKind> {
    let n = c.length();
    let r = n.trailing_zeros() as usize;
    let unknown = |why: String| Err(Error::UnknownKind(why));
    if n < 2 || n != 1 << r {
        return unknown(format!("length {n} is not a power of two"));
    }
    if c.size() != 1 << (n - r - 1) {
        return unknown(format!("size {} is not 2^{}", c.size(), n - r - 1));
    }
    if c.size() > 1 && c.minimum_distance().unwrap_or(0) < 4 {
        return unknown("minimum distance below 4".into());
    }
    let all_even = c.words().iter().all(|w| w.weight() % 2 == 0);
    let all_odd = c.words().iter().all(|w| w.weight() % 2 == 1);
    let count_weight = |k: usize| c.words().iter().filter(|w| w.weight() == k).count();
    if all_even && c.is_zeroed() {
        Ok(ExtendedKind::ZeroedExtended)
    } else if all_odd && count_weight(1) == 1 {
        Ok(ExtendedKind::OddTranslate)
    } else if all_even && count_weight(2) == 1 << (r - 1) {
        Ok(ExtendedKind::EvenTranslate)
    } else {
        unknown("mixed parity or wrong low-weight counts".into())
    }
}

impl ExtendedPerfectCode {
    pub fn new(code: Code) -> Result<Self> {
        let kind = classify_extended_translate(&code)?;
        Ok(Self { code, kind })
    }
}

/// Translate of `ext` by the unit word at `coord`.
pub fn odd_translate(ext: &Code, coord: usize) -> Result<Code> {
    translate(ext, &Word::unit(ext.length(), coord)?)
}

/// Translate of `ext` by the canonically first weight-2 non-codeword.
pub fn even_translate(ext: &Code) -> Result<Code> {
    let n = ext.length();
    let mut candidates: Vec<Word> = crate::word::masks_of_weight(n, 2)
        .map(|m| Word::new(n, m))
        .collect::<Result<_>>()?;
    candidates.sort();
    let e = candidates
        .into_iter()
        .find(|e| !ext.contains(e))
        .ok_or_else(|| Error::InvalidParameters("no weight-2 non-codeword".into()))?;
    translate(ext, &e)
}

/// A table assigning one bit to every codeword of a base code.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Lambda(BTreeMap<Word, bool>);

impl Lambda {
    pub fn zero(base: &Code) -> Self {
        Lambda(base.words().iter().map(|w| (*w, false)).collect())
    }

    /// Zero everywhere except on `flipped`.
    pub fn flipping(base: &Code, flipped: &[Word]) -> Result<Self> {
        let mut table = Self::zero(base);
        for w in flipped {
            match table.0.get_mut(w) {
                Some(v) => *v = true,
                None => return Err(Error::IncompleteLambda(format!("{w} is not a base codeword"))),
            }
        }
        Ok(table)
    }

    pub fn get(&self, w: &Word) -> Option<bool> {
        self.0.get(w).copied()
    }

    pub fn set(&mut self, w: Word, value: bool) {
        self.0.insert(w, value);
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of words on which the two tables disagree.
    pub fn disagreements(&self, other: &Lambda) -> usize {
        self.0
            .iter()
            .filter(|(w, v)| other.get(w) != Some(**v))
            .count()
    }

    /// Lines of `<codeword> <0|1>`.
    pub fn to_text(&self) -> String {
        self.0
            .iter()
            .map(|(w, v)| format!("{w} {}\n", *v as u8))
            .collect()
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut table = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |message: String| Error::Parse { line: idx + 1, message };
            let mut parts = line.split_whitespace();
            let (Some(word), Some(bit), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(bad(format!("expected `<word> <0|1>`, got {line:?}")));
            };
            let word: Word = word.parse().map_err(|e: Error| bad(e.to_string()))?;
            let bit = match bit {
                "0" => false,
                "1" => true,
                other => return Err(bad(format!("bit must be 0 or 1, got {other:?}"))),
            };
            if table.insert(word, bit).is_some() {
                return Err(bad(format!("duplicate entry for {word}")));
            }
        }
        Ok(Lambda(table))
    }
}

/// The code {(x, x+c, π(x)+λ(c)) : x ∈ F₂^m, c ∈ base}, π being parity.
pub fn vasiliev(base: &PerfectCode, lambda: &Lambda) -> Result<PerfectCode> {
    let base_code = base.code();
    let m = base_code.length();
    if 2 * m + 1 > 15 {
        return Err(Error::InvalidParameters(format!(
            "vasiliev output length {} exceeds the enumeration cap 15",
            2 * m + 1
        )));
    }
    if lambda.len() != base_code.size() {
        return Err(Error::IncompleteLambda(format!(
            "{} entries for {} base codewords",
            lambda.len(),
            base_code.size()
        )));
    }
    let mut flips = Vec::with_capacity(base_code.size());
    for c in base_code.words() {
        let bit = lambda
            .get(c)
            .ok_or_else(|| Error::IncompleteLambda(format!("missing {c}")))?;
        flips.push((c.bits(), bit));
    }
    let mut words = Vec::with_capacity(flips.len() << m);
    for x in 0..=full_mask(m) {
        let parity = x.count_ones() & 1;
        for &(c, bit) in &flips {
            let last = parity ^ bit as u32;
            words.push(x | (x ^ c) << m | last << (2 * m));
        }
    }
    let code = Code::from_masks(2 * m + 1, words)?;
    let out = PerfectCode::new(code)?;
    Ok(out)
}
