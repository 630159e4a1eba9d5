//! Binary words of length 1..=32 and the Hamming geometry on them.
//!
//! A word stores coordinate `i` (1-based) in bit `i - 1` of a `u32`. The
//! textual form lists coordinate 1 first, so `"1000"` has only bit 0 set.
//! Ordering follows the textual form read as a binary number (coordinate 1
//! most significant), which is also lexicographic order on the strings.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const MAX_LENGTH: usize = 32;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Word {
    len: u8,
    bits: u32,
}

/// Mask with the low `len` bits set.
#[inline]
pub fn full_mask(len: usize) -> u32 {
    if len >= 32 {
        u32::MAX
    } else {
        (1u32 << len) - 1
    }
}

impl Word {
    pub fn new(len: usize, bits: u32) -> Result<Self> {
        if len == 0 || len > MAX_LENGTH {
            return Err(Error::InvalidLength(len));
        }
        if bits & !full_mask(len) != 0 {
            return Err(Error::InvalidParameters(format!(
                "bits {bits:#x} exceed length {len}"
            )));
        }
        Ok(Self { len: len as u8, bits })
    }

    /// Caller guarantees `1 <= len <= 32` and no bits above `len`.
    #[inline]
    pub(crate) fn from_raw(len: usize, bits: u32) -> Self {
        debug_assert!(len >= 1 && len <= MAX_LENGTH);
        debug_assert_eq!(bits & !full_mask(len), 0);
        Self { len: len as u8, bits }
    }

    pub fn zero(len: usize) -> Result<Self> {
        Self::new(len, 0)
    }

    /// The weight-one word with a single `1` at `coord` (1-based).
    pub fn unit(len: usize, coord: usize) -> Result<Self> {
        if coord == 0 || coord > len {
            return Err(Error::CoordinateOutOfRange { coord, length: len });
        }
        Self::new(len, 1 << (coord - 1))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Value of coordinate `coord` (1-based).
    pub fn get(&self, coord: usize) -> Result<bool> {
        if coord == 0 || coord > self.len() {
            return Err(Error::CoordinateOutOfRange { coord, length: self.len() });
        }
        Ok(self.bits >> (coord - 1) & 1 == 1)
    }

    #[inline]
    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn add(&self, other: &Word) -> Result<Word> {
        check_lengths(self.len(), other.len())?;
        Ok(Word::from_raw(self.len(), self.bits ^ other.bits))
    }

    pub fn complement(&self) -> Word {
        Word::from_raw(self.len(), !self.bits & full_mask(self.len()))
    }

    /// Canonical sort key: the textual form read as a binary number.
    #[inline]
    pub fn canonical_key(&self) -> u32 {
        canonical_key(self.len(), self.bits)
    }

    /// Appends one coordinate with value `bit` at position `len + 1`.
    pub fn push(&self, bit: bool) -> Result<Word> {
        Word::new(self.len() + 1, self.bits | (bit as u32) << self.len())
    }

    /// Concatenation, `self` occupying the leading coordinates.
    pub fn concat(&self, tail: &Word) -> Result<Word> {
        let len = self.len() + tail.len();
        if len > MAX_LENGTH {
            return Err(Error::InvalidLength(len));
        }
        Ok(Word::from_raw(len, self.bits | tail.bits << self.len()))
    }

    /// Removes coordinate `coord` (1-based), shifting later coordinates down.
    pub fn delete(&self, coord: usize) -> Result<Word> {
        if coord == 0 || coord > self.len() || self.len() == 1 {
            return Err(Error::CoordinateOutOfRange { coord, length: self.len() });
        }
        Ok(Word::from_raw(self.len() - 1, delete_bit(self.bits, coord - 1)))
    }
}

#[inline]
pub(crate) fn canonical_key(len: usize, bits: u32) -> u32 {
    bits.reverse_bits() >> (32 - len)
}

#[inline]
pub(crate) fn delete_bit(bits: u32, index: usize) -> u32 {
    let low = bits & ((1u32 << index) - 1);
    let high = if index + 1 >= 32 { 0 } else { bits >> (index + 1) };
    low | high << index
}

pub(crate) fn check_lengths(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::LengthMismatch { left, right });
    }
    Ok(())
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.canonical_key().cmp(&other.canonical_key()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            f.write_str(if self.bits >> i & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let len = s.len();
        if len == 0 || len > MAX_LENGTH {
            return Err(Error::InvalidLength(len));
        }
        let mut bits = 0u32;
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => bits |= 1 << i,
                other => {
                    return Err(Error::Parse {
                        line: 0,
                        message: format!("unexpected character {other:?} in word {s:?}"),
                    })
                }
            }
        }
        Ok(Word::from_raw(len, bits))
    }
}

impl serde::Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn weight(w: &Word) -> usize {
    w.weight()
}

pub fn distance(x: &Word, y: &Word) -> Result<usize> {
    check_lengths(x.len(), y.len())?;
    Ok((x.bits ^ y.bits).count_ones() as usize)
}

/// All `len`-bit masks of weight exactly `t`, in increasing numeric order.
pub(crate) fn masks_of_weight(len: usize, t: usize) -> impl Iterator<Item = u32> {
    let limit = if len >= 32 { 1u64 << 32 } else { 1u64 << len };
    let first: u64 = if t == 0 { 0 } else { (1u64 << t) - 1 };
    let mut next = if t > len { None } else { Some(first) };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let n = (((r ^ cur) >> 2) / c) | r;
            (n < limit).then_some(n)
        };
        Some(cur as u32)
    })
}

/// Offsets of every word at distance at most `t` from zero.
pub(crate) fn ball_offsets(len: usize, t: usize) -> Vec<u32> {
    (0..=t.min(len)).flat_map(|i| masks_of_weight(len, i)).collect()
}

/// Words within distance `t` of `x`, canonically ordered.
pub fn ball(x: &Word, t: usize) -> Result<Vec<Word>> {
    if t > x.len() {
        return Err(Error::RadiusOutOfRange { radius: t, length: x.len() });
    }
    let mut out: Vec<Word> = ball_offsets(x.len(), t)
        .into_iter()
        .map(|m| Word::from_raw(x.len(), x.bits ^ m))
        .collect();
    out.sort();
    Ok(out)
}

/// Words at distance exactly `t` from `x`, canonically ordered.
pub fn sphere(x: &Word, t: usize) -> Result<Vec<Word>> {
    if t > x.len() {
        return Err(Error::RadiusOutOfRange { radius: t, length: x.len() });
    }
    let mut out: Vec<Word> = masks_of_weight(x.len(), t)
        .map(|m| Word::from_raw(x.len(), x.bits ^ m))
        .collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn weights() {
        assert_eq!(weight(&w("0000")), 0);
        assert_eq!(weight(&w("1110")), 3);
        assert_eq!(weight(&w("11111111")), 8);
    }

    #[test]
    fn distances() {
        assert_eq!(distance(&w("0000"), &w("0000")).unwrap(), 0);
        assert_eq!(distance(&w("1110"), &w("0111")).unwrap(), 2);
        assert_eq!(distance(&w("1001"), &w("0110")).unwrap(), 4);
        assert_eq!(
            distance(&w("10"), &w("100")),
            Err(Error::LengthMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn coordinate_one_is_leftmost() {
        let x = w("1000");
        assert_eq!(x.bits(), 1);
        assert!(x.get(1).unwrap());
        assert!(!x.get(4).unwrap());
        assert!(w("0111") < w("1000"));
        assert_eq!(Word::unit(4, 4).unwrap().to_string(), "0001");
    }

    #[test]
    fn balls_and_spheres() {
        assert_eq!(ball(&w("0000"), 0).unwrap(), vec![w("0000")]);
        let b = ball(&w("0000"), 1).unwrap();
        assert_eq!(b, vec![w("0000"), w("0001"), w("0010"), w("0100"), w("1000")]);
        assert_eq!(ball(&w("00"), 2).unwrap().len(), 4);
        assert_eq!(sphere(&w("0000"), 1).unwrap().len(), 4);
        assert_eq!(sphere(&w("0000"), 0).unwrap(), vec![w("0000")]);
        assert_eq!(sphere(&w("111"), 3).unwrap(), vec![w("000")]);
        assert!(ball(&w("00"), 3).is_err());
        assert!(sphere(&w("00"), 3).is_err());
    }

    #[test]
    fn ball_and_sphere_sizes() {
        for n in 1..=16 {
            let x = Word::zero(n).unwrap();
            for t in 0..=3.min(n) {
                let expected: usize = (0..=t).map(|i| binom(n, i)).sum();
                assert_eq!(ball(&x, t).unwrap().len(), expected, "n={n} t={t}");
                assert_eq!(sphere(&x, t).unwrap().len(), binom(n, t));
            }
        }
    }

    #[test]
    fn full_length_words() {
        let x = Word::new(32, u32::MAX).unwrap();
        assert_eq!(x.weight(), 32);
        assert_eq!(x.complement(), Word::zero(32).unwrap());
        assert_eq!(masks_of_weight(32, 32).count(), 1);
        assert_eq!(sphere(&x, 1).unwrap().len(), 32);
    }

    #[test]
    fn triangle_inequality_exhaustive() {
        for n in 1..=8usize {
            let words: Vec<Word> = (0..1u32 << n).map(|b| Word::new(n, b).unwrap()).collect();
            // all triples up to n=6, then a stride for n in 7..=8
            let step = if n <= 6 { 1 } else { 7 };
            for x in words.iter().step_by(1) {
                for y in words.iter().step_by(step) {
                    for z in words.iter().step_by(step) {
                        let dxz = distance(x, z).unwrap();
                        assert!(dxz <= distance(x, y).unwrap() + distance(y, z).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn delete_and_concat() {
        assert_eq!(w("1011").delete(2).unwrap(), w("111"));
        assert_eq!(w("1011").delete(4).unwrap(), w("101"));
        assert_eq!(w("10").concat(&w("011")).unwrap(), w("10011"));
        assert_eq!(w("101").push(true).unwrap(), w("1011"));
        assert!(w("1").delete(1).is_err());
    }

    #[test]
    fn rejects_bad_text() {
        assert!("10a1".parse::<Word>().is_err());
        assert!("".parse::<Word>().is_err());
        assert!("0".repeat(33).parse::<Word>().is_err());
    }

    proptest::proptest! {
        #[test]
        fn text_round_trip(len in 1usize..=32, raw in proptest::prelude::any::<u32>()) {
            let x = Word::new(len, raw & full_mask(len)).unwrap();
            let back: Word = x.to_string().parse().unwrap();
            proptest::prop_assert_eq!(x, back);
        }

        #[test]
        fn ordering_matches_text(len in 1usize..=32, a in proptest::prelude::any::<u32>(), b in proptest::prelude::any::<u32>()) {
            let x = Word::new(len, a & full_mask(len)).unwrap();
            let y = Word::new(len, b & full_mask(len)).unwrap();
            proptest::prop_assert_eq!(x.cmp(&y), x.to_string().cmp(&y.to_string()));
        }
    }
}
