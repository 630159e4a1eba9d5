//! Balanced Type A NP1CCs from cyclic self-dual sequences.
//!
//! A pair of self-dual sequences of length 2n whose halves agree except in
//! the last symbol yields 4n cyclic windows of width n. For n = 8 the base
//! pair below gives a translate of a Type A code; one recursion step with
//! every admissible V gives the length-16 code.

use std::fmt;
use std::str::FromStr;

use crate::code::{translate, Code};
use crate::error::{Error, Result};
use crate::np1cc::{pair_partition, CodeType};
use crate::word::Word;

/// A cyclic binary sequence equal to its complement shifted by half its length.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SelfDualSequence {
    bits: Vec<bool>,
}

/// Cyclic self-duality test: `s[i + L/2] != s[i]` for all `i`.
pub fn is_self_dual(bits: &[bool]) -> Result<bool> {
    if bits.is_empty() || bits.len() % 2 != 0 {
        return Err(Error::InvalidLength(bits.len()));
    }
    let half = bits.len() / 2;
    Ok((0..half).all(|i| bits[i] != bits[i + half]))
}

impl SelfDualSequence {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if !is_self_dual(&bits)? {
            return Err(Error::NotSelfDual(render(&bits)));
        }
        Ok(Self { bits })
    }

    /// The sequence `[X X̄]`.
    pub fn from_half(half: &[bool]) -> Result<Self> {
        let bits = half.iter().copied().chain(half.iter().map(|b| !b)).collect();
        Self::new(bits)
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// First half X.
    pub fn half(&self) -> &[bool] {
        &self.bits[..self.bits.len() / 2]
    }
}

fn render(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

impl fmt::Display for SelfDualSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.bits))
    }
}

impl FromStr for SelfDualSequence {
    type Err = Error;

    /// Accepts plain bitstrings as well as the bracketed, space-grouped form
    /// `[00011011 11100100]`.
    fn from_str(s: &str) -> Result<Self> {
        let mut bits = Vec::new();
        for ch in s.chars() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                '[' | ']' => {}
                c if c.is_whitespace() => {}
                c => {
                    return Err(Error::Parse { line: 1, message: format!("unexpected {c:?}") });
                }
            }
        }
        Self::new(bits)
    }
}

/// Two self-dual sequences whose halves both start with 0 and differ only
/// in their last symbol. `window` is half the sequence length.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SelfDualPair {
    pub first: SelfDualSequence,
    pub second: SelfDualSequence,
}

impl SelfDualPair {
    pub fn new(first: SelfDualSequence, second: SelfDualSequence) -> Result<Self> {
        if first.len() != second.len() {
            return Err(Error::LengthMismatch { left: first.len(), right: second.len() });
        }
        let (x, y) = (first.half(), second.half());
        let n = x.len();
        let diffs: Vec<usize> = (0..n).filter(|&i| x[i] != y[i]).collect();
        if x[0] || y[0] || diffs != [n - 1] {
            return Err(Error::InvalidParameters(format!(
                "halves {} and {} must start with 0 and differ only in the last symbol",
                render(x),
                render(y)
            )));
        }
        Ok(Self { first, second })
    }

    fn parse(a: &str, b: &str) -> Result<Self> {
        Self::new(a.parse()?, b.parse()?)
    }

    pub fn window(&self) -> usize {
        self.first.len() / 2
    }

    /// All windows of both sequences, first sequence first.
    pub fn windows(&self) -> Result<Vec<Word>> {
        let w = self.window();
        let mut out = windows(&self.first, w)?;
        out.extend(windows(&self.second, w)?);
        Ok(out)
    }
}

impl fmt::Display for SelfDualPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.first, self.second)
    }
}

/// The four length-16 pairs usable as the starting point.
pub fn base_pairs() -> Vec<SelfDualPair> {
    [
        ("00011011 11100100", "00011010 11100101"),
        ("01001111 10110000", "01001110 10110001"),
        ("01110111 10001000", "01110110 10001001"),
        ("00100010 11011101", "00100011 11011100"),
    ]
    .into_iter()
    .map(|(a, b)| SelfDualPair::parse(a, b).expect("base pair is self-dual"))
    .collect()
}

/// All cyclic windows of width `w = L/2`, by start index.
pub fn windows(s: &SelfDualSequence, w: usize) -> Result<Vec<Word>> {
    let len = s.len();
    if w != len / 2 {
        return Err(Error::InvalidParameters(format!(
            "window width {w} must be half the sequence length {len}"
        )));
    }
    (0..len)
        .map(|start| {
            let bits = (0..w).fold(0u32, |acc, i| acc | (s.bits[(start + i) % len] as u32) << i);
            Word::new(w, bits)
        })
        .collect()
}

fn word_bits(v: &Word) -> Vec<bool> {
    (0..v.len()).map(|i| v.bits() >> i & 1 == 1).collect()
}

fn is_admissible(v: &Word) -> bool {
    v.weight() % 2 == 0 && v.bits() & 1 == 0
}

/// Even-weight words of length `n` starting with 0, in lexicographic order.
pub fn admissible_vs(n: usize) -> Result<Vec<Word>> {
    if !(2..=20).contains(&n) {
        return Err(Error::InvalidParameters(format!("admissible V length {n} outside 2..=20")));
    }
    let mut vs: Vec<Word> = (0..1u32 << n)
        .map(|m| Word::new(n, m))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(is_admissible)
        .collect();
    vs.sort_unstable();
    Ok(vs)
}

/// P_V = ([V, X+V, V̄, X+V̄], [V, X′+V, V̄, X′+V̄]).
pub fn recursion_step(p: &SelfDualPair, v: &Word) -> Result<SelfDualPair> {
    let n = p.window();
    if v.len() != n || !is_admissible(v) {
        return Err(Error::InvalidParameters(format!(
            "V = {v} must have length {n}, even weight and a leading 0"
        )));
    }
    let vb = word_bits(v);
    let lift = |x: &[bool]| {
        let half: Vec<bool> = vb
            .iter()
            .copied()
            .chain(x.iter().zip(&vb).map(|(a, b)| a ^ b))
            .collect();
        SelfDualSequence::from_half(&half)
    };
    SelfDualPair::new(lift(p.first.half())?, lift(p.second.half())?)
}

/// One recursion step over every admissible V, in lexicographic order of V.
pub fn recursion_pairs(p: &SelfDualPair) -> Result<Vec<SelfDualPair>> {
    admissible_vs(p.window())?
        .iter()
        .map(|v| recursion_step(p, v))
        .collect()
}

/// The balanced code of length 2^r. It is a translate of a Type A NP1CC
/// that need not contain the zero word.
pub fn build_balanced(r: usize) -> Result<Code> {
    let base = base_pairs().swap_remove(0);
    let pairs = match r {
        3 => vec![base],
        4 => recursion_pairs(&base)?,
        _ => {
            return Err(Error::InvalidParameters(format!("balanced code needs r in 3..=4, got {r}")))
        }
    };
    let mut words = Vec::with_capacity(pairs.len() * 4 << r);
    for p in &pairs {
        words.extend(p.windows()?);
    }
    Code::new(1 << r, words)
}

/// Translate by the smallest codeword.
pub fn zero_translate(c: &Code) -> Result<Code> {
    let first = c.first().ok_or(Error::EmptyCode)?;
    translate(c, &first)
}

/// For a (translate of a) Type A code, the number of pairs whose partners
/// differ in each coordinate, indexed from coordinate 1.
pub fn type1_coordinate_counts(c: &Code) -> Result<Vec<usize>> {
    let partition = pair_partition(c)?;
    if partition.code_type() != CodeType::A {
        return Err(Error::NotTypeA);
    }
    let mut counts = vec![0; c.length()];
    for p in &partition.pairs {
        counts[p.difference().trailing_zeros() as usize] += 1;
    }
    Ok(counts)
}

/// Every coordinate carries the same number of pairs, M / (2n).
pub fn is_balanced(c: &Code) -> Result<bool> {
    let counts = type1_coordinate_counts(c)?;
    let target = c.size() / (2 * c.length());
    Ok(counts.iter().all(|&k| k == target))
}
