//! Binary codes: duplicate-free, canonically ordered sets of equal-length words.
//!
//! The `.code` text format is an optional `# n=<int>` header followed by one
//! codeword per line. Blank lines and other `#` lines are ignored; a
//! duplicated codeword is an error.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::word::{canonical_key, check_lengths, Word, MAX_LENGTH};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Code {
    length: usize,
    words: Vec<Word>,
}

impl Code {
    /// Builds a code from words of length `length`. Duplicates are rejected.
    pub fn new(length: usize, words: impl IntoIterator<Item = Word>) -> Result<Self> {
        if length == 0 || length > MAX_LENGTH {
            return Err(Error::InvalidLength(length));
        }
        let mut words: Vec<Word> = words.into_iter().collect();
        for w in &words {
            check_lengths(length, w.len())?;
        }
        words.sort_unstable();
        if let Some(pair) = words.windows(2).find(|p| p[0] == p[1]) {
            return Err(Error::DuplicateWord(pair[0].to_string()));
        }
        Ok(Self { length, words })
    }

    /// Builds a code from raw masks. Duplicates are rejected.
    pub fn from_masks(length: usize, masks: impl IntoIterator<Item = u32>) -> Result<Self> {
        if length == 0 || length > MAX_LENGTH {
            return Err(Error::InvalidLength(length));
        }
        let words = masks
            .into_iter()
            .map(|m| Word::new(length, m))
            .collect::<Result<Vec<_>>>()?;
        Self::new(length, words)
    }

    /// Parses textual codewords, all of the same length.
    pub fn from_strs<S: AsRef<str>>(words: &[S]) -> Result<Self> {
        let parsed = words
            .iter()
            .map(|s| s.as_ref().parse::<Word>())
            .collect::<Result<Vec<_>>>()?;
        let length = parsed.first().map(Word::len).ok_or(Error::EmptyCode)?;
        Self::new(length, parsed)
    }

    /// The whole space F₂ⁿ.
    pub fn full_space(length: usize) -> Result<Self> {
        if length > 24 {
            return Err(Error::TooLongForExhaustive(length));
        }
        Self::from_masks(length, 0..1u32 << length)
    }

    #[inline]
    pub fn length(&self) -> usize {
        self.length
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.words.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn masks(&self) -> Vec<u32> {
        self.words.iter().map(Word::bits).collect()
    }

    pub fn contains(&self, w: &Word) -> bool {
        w.len() == self.length && self.contains_mask(w.bits())
    }

    pub(crate) fn contains_mask(&self, mask: u32) -> bool {
        let key = canonical_key(self.length, mask);
        self.words
            .binary_search_by_key(&key, Word::canonical_key)
            .is_ok()
    }

    /// True if the all-zero word is a codeword.
    pub fn is_zeroed(&self) -> bool {
        self.contains_mask(0)
    }

    /// Membership table over F₂ⁿ, indexed by mask.
    pub fn indicator(&self) -> Result<Vec<bool>> {
        if self.length > 24 {
            return Err(Error::TooLongForExhaustive(self.length));
        }
        let mut table = vec![false; 1 << self.length];
        for w in &self.words {
            table[w.bits() as usize] = true;
        }
        Ok(table)
    }

    /// Numerically smallest codeword under the canonical order.
    pub fn first(&self) -> Option<Word> {
        self.words.first().copied()
    }

    pub fn to_code_string(&self) -> String {
        let mut out = String::with_capacity((self.length + 1) * (self.size() + 1) + 8);
        let _ = writeln!(out, "# n={}", self.length);
        for w in &self.words {
            let _ = writeln!(out, "{w}");
        }
        out
    }

    pub fn parse_code(text: &str) -> Result<Self> {
        let mut header: Option<usize> = None;
        let mut words = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                if let Some(value) = comment.trim().strip_prefix("n=") {
                    let n = value.trim().parse::<usize>().map_err(|_| Error::Parse {
                        line: line_no,
                        message: format!("bad header {line:?}"),
                    })?;
                    if header.is_some() || !words.is_empty() {
                        return Err(Error::Parse {
                            line: line_no,
                            message: "header must precede all codewords".into(),
                        });
                    }
                    header = Some(n);
                }
                continue;
            }
            let word: Word = line.parse().map_err(|e| match e {
                Error::Parse { message, .. } => Error::Parse { line: line_no, message },
                other => Error::Parse { line: line_no, message: other.to_string() },
            })?;
            let expected = header.or_else(|| words.first().map(Word::len));
            if let Some(n) = expected {
                if word.len() != n {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("codeword has length {}, expected {n}", word.len()),
                    });
                }
            }
            if !seen.insert(word) {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("duplicate codeword {word}"),
                });
            }
            words.push(word);
        }
        let length = header
            .or_else(|| words.first().map(Word::len))
            .ok_or(Error::EmptyCode)?;
        Code::new(length, words)
    }

    /// Words of even weight, as a code of the same length.
    pub fn even_part(&self) -> Code {
        self.filter(|w| w.weight() % 2 == 0)
    }

    pub fn odd_part(&self) -> Code {
        self.filter(|w| w.weight() % 2 == 1)
    }

    pub(crate) fn filter(&self, keep: impl Fn(&Word) -> bool) -> Code {
        Code {
            length: self.length,
            words: self.words.iter().copied().filter(|w| keep(w)).collect(),
        }
    }

    /// Set union; both codes must share a length.
    pub fn union(&self, other: &Code) -> Result<Code> {
        check_lengths(self.length, other.length)?;
        let mut words: Vec<Word> = self.words.iter().chain(&other.words).copied().collect();
        words.sort_unstable();
        words.dedup();
        Ok(Code { length: self.length, words })
    }

    pub fn minimum_distance(&self) -> Option<usize> {
        let masks = self.masks();
        let mut best: Option<usize> = None;
        for (i, a) in masks.iter().enumerate() {
            for b in &masks[i + 1..] {
                let d = (a ^ b).count_ones() as usize;
                best = Some(best.map_or(d, |cur| cur.min(d)));
            }
        }
        best
    }
}

/// The translate `e + C`.
pub fn translate(c: &Code, e: &Word) -> Result<Code> {
    check_lengths(c.length(), e.len())?;
    let mut words: Vec<Word> = c
        .words()
        .iter()
        .map(|w| Word::from_raw(c.length(), w.bits() ^ e.bits()))
        .collect();
    words.sort_unstable();
    Ok(Code { length: c.length(), words })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(ws: &[&str]) -> Code {
        Code::from_strs(ws).unwrap()
    }

    #[test]
    fn canonical_order_and_membership() {
        let c = code(&["111", "000", "100"]);
        let text: Vec<String> = c.words().iter().map(|w| w.to_string()).collect();
        assert_eq!(text, ["000", "100", "111"]);
        assert!(c.contains(&"100".parse().unwrap()));
        assert!(!c.contains(&"010".parse().unwrap()));
        assert!(c.is_zeroed());
    }

    #[test]
    fn duplicates_and_mixed_lengths_rejected() {
        assert!(matches!(Code::from_strs(&["01", "01"]), Err(Error::DuplicateWord(_))));
        assert!(matches!(
            Code::from_strs(&["01", "011"]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn translates() {
        let c = code(&["000", "111"]);
        assert_eq!(translate(&c, &"000".parse().unwrap()).unwrap(), c);
        assert_eq!(
            translate(&c, &"100".parse().unwrap()).unwrap(),
            code(&["100", "011"])
        );
        assert!(translate(&c, &"10".parse().unwrap()).is_err());
    }

    #[test]
    fn code_format_round_trip() {
        let c = code(&["0000", "0001", "1110", "1111"]);
        let text = c.to_code_string();
        assert!(text.starts_with("# n=4\n"));
        assert_eq!(Code::parse_code(&text).unwrap(), c);
    }

    #[test]
    fn code_format_parsing() {
        let c = Code::parse_code("# a comment\n\n0110\n# another\n1001\n").unwrap();
        assert_eq!(c.size(), 2);
        assert_eq!(c.length(), 4);
        let dup = Code::parse_code("# n=2\n01\n01\n");
        assert!(matches!(dup, Err(Error::Parse { line: 3, .. })));
        let wrong = Code::parse_code("# n=3\n01\n");
        assert!(matches!(wrong, Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Code::parse_code("0x\n"), Err(Error::Parse { line: 1, .. })));
        let empty = Code::parse_code("# n=5\n").unwrap();
        assert!(empty.is_empty());
        assert_eq!(empty.length(), 5);
        assert!(matches!(Code::parse_code(""), Err(Error::EmptyCode)));
    }

    #[test]
    fn minimum_distance_scan() {
        assert_eq!(code(&["0000", "1111"]).minimum_distance(), Some(4));
        assert_eq!(code(&["0000"]).minimum_distance(), None);
    }

    proptest::proptest! {
        #[test]
        fn translate_is_involutive_and_isometric(
            raw in proptest::collection::btree_set(0u32..256, 1..20),
            e in 0u32..256,
        ) {
            let c = Code::from_masks(8, raw).unwrap();
            let e = Word::new(8, e).unwrap();
            let t = translate(&c, &e).unwrap();
            proptest::prop_assert_eq!(t.size(), c.size());
            proptest::prop_assert_eq!(translate(&t, &e).unwrap(), c.clone());
            let mut before: Vec<u32> = Vec::new();
            let mut after: Vec<u32> = Vec::new();
            for a in c.words() {
                for b in c.words() {
                    before.push((a.bits() ^ b.bits()).count_ones());
                    let ta = a.add(&e).unwrap();
                    let tb = b.add(&e).unwrap();
                    proptest::prop_assert!(t.contains(&ta));
                    after.push((ta.bits() ^ tb.bits()).count_ones());
                }
            }
            proptest::prop_assert_eq!(before, after);
        }
    }
}
