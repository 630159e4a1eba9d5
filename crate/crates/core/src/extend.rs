//! Extended NP1CCs (ENP1CCs): an even-parity coordinate appended to an
//! NP1CC. Puncturing an ENP1CC on any coordinate gives back an NP1CC, and
//! the type of that NP1CC depends only on how the partner pairs behave on
//! the punctured coordinate.

use rayon::prelude::*;
use serde::Serialize;

use crate::code::{translate, Code};
use crate::error::{Error, Result};
use crate::np1cc::{verify_np1cc, CodeType};
use crate::perfect::{extend_even, hamming, puncture, vasiliev, Lambda};
use crate::word::{masks_of_weight, Word};

/// Appends even parity. The input must be an NP1CC.
pub fn extend_np1cc(c: &Code) -> Result<Code> {
    extend_at(c, c.length() + 1)
}

fn insert_bit(bits: u32, index: usize, bit: bool) -> u32 {
    let low = bits & ((1u32 << index) - 1);
    let high = (bits >> index) << (index + 1);
    low | high | (bit as u32) << index
}

/// Inserts the parity bit so that it becomes coordinate `coord` of the
/// extended code; `coord = n + 1` is ordinary extension.
pub fn extend_at(c: &Code, coord: usize) -> Result<Code> {
    let n = c.length();
    if coord == 0 || coord > n + 1 {
        return Err(Error::CoordinateOutOfRange { coord, length: n + 1 });
    }
    let report = verify_np1cc(c);
    if !report.is_np1cc {
        return Err(Error::NotNp1cc(report.failures.join("; ")));
    }
    let masks = c
        .words()
        .iter()
        .map(|w| insert_bit(w.bits(), coord - 1, w.weight() % 2 == 1));
    Code::from_masks(n + 1, masks)
}

/// The partner pairs of an ENP1CC, each as `(c, c′)` with `c < c′`.
///
/// Checks length `2^r + 1`, size `2^{2^r − r}`, even weights, and exactly
/// one codeword at distance 2 from every codeword.
pub fn enp1cc_pairs(ec: &Code) -> Result<Vec<(Word, Word)>> {
    let len = ec.length();
    let n = len.saturating_sub(1);
    if n < 2 || !n.is_power_of_two() {
        return Err(Error::NotEnp1cc(format!("length {len} is not 2^r + 1")));
    }
    let r = n.trailing_zeros() as usize;
    if ec.size() != 1 << (n - r) {
        return Err(Error::NotEnp1cc(format!("size {} differs from {}", ec.size(), 1u64 << (n - r))));
    }
    if let Some(w) = ec.words().iter().find(|w| w.weight() % 2 == 1) {
        return Err(Error::NotEnp1cc(format!("codeword {w} has odd weight")));
    }
    let offsets: Vec<u32> = masks_of_weight(len, 2).collect();
    let mut pairs = Vec::with_capacity(ec.size() / 2);
    for w in ec.words() {
        let near: Vec<u32> = offsets
            .iter()
            .map(|o| w.bits() ^ o)
            .filter(|&m| ec.contains_mask(m))
            .collect();
        if near.len() != 1 {
            return Err(Error::NotEnp1cc(format!(
                "codeword {w} has {} codewords at distance 2",
                near.len()
            )));
        }
        let other = Word::new(len, near[0])?;
        if *w < other {
            pairs.push((*w, other));
        }
    }
    Ok(pairs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PunctureProfile {
    pub length: usize,
    /// Tag of coordinate `j` at index `j − 1`.
    pub tags: Vec<CodeType>,
    #[serde(rename = "nA")]
    pub n_a: usize,
    #[serde(rename = "nB")]
    pub n_b: usize,
    #[serde(rename = "nC")]
    pub n_c: usize,
}

impl PunctureProfile {
    fn from_tags(tags: Vec<CodeType>) -> Self {
        let count = |t| tags.iter().filter(|&&x| x == t).count();
        Self {
            length: tags.len(),
            n_a: count(CodeType::A),
            n_b: count(CodeType::B),
            n_c: count(CodeType::C),
            tags,
        }
    }

    /// Compact form such as `AABBBBBBB`.
    pub fn tag_string(&self) -> String {
        self.tags.iter().map(|t| t.to_string()).collect()
    }

    /// `(nA, nB, nC)`.
    pub fn counts(&self) -> (usize, usize, usize) {
        (self.n_a, self.n_b, self.n_c)
    }
}

/// Tags every coordinate by how the partner pairs behave there: A if all
/// pairs disagree, B if all agree, C otherwise. Each punctured code is
/// verified and must have the tagged type.
pub fn puncture_scan(ec: &Code) -> Result<PunctureProfile> {
    let pairs = enp1cc_pairs(ec)?;
    let len = ec.length();
    let tags = (1..=len)
        .into_par_iter()
        .map(|coord| {
            let bit = 1u32 << (coord - 1);
            let disagree = pairs
                .iter()
                .filter(|(a, b)| (a.bits() ^ b.bits()) & bit != 0)
                .count();
            let tag = match disagree {
                d if d == pairs.len() => CodeType::A,
                0 => CodeType::B,
                _ => CodeType::C,
            };
            let report = verify_np1cc(&puncture(ec, coord)?);
            if !report.is_np1cc || report.code_type != tag {
                return Err(Error::NotEnp1cc(format!(
                    "puncturing coordinate {coord} gives {} (expected Type {tag})",
                    if report.is_np1cc {
                        format!("Type {}", report.code_type)
                    } else {
                        "a non-NP1CC".to_string()
                    }
                )));
            }
            Ok(tag)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PunctureProfile::from_tags(tags))
}

/// Canonical text of the extension with the parity bit placed at `coord`.
/// The punctures of one ENP1CC at `j` all map back to the same key when
/// `coord = j`.
pub fn equivalence_key_at(c: &Code, coord: usize) -> Result<String> {
    Ok(extend_at(c, coord)?.to_code_string())
}

/// Canonical text of the ordinary extension.
pub fn equivalence_key(c: &Code) -> Result<String> {
    equivalence_key_at(c, c.length() + 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassMember {
    pub coord: usize,
    pub code_type: CodeType,
    pub code: Code,
}

/// All punctures of an ENP1CC, in coordinate order.
pub fn puncture_class(ec: &Code) -> Result<Vec<ClassMember>> {
    let profile = puncture_scan(ec)?;
    profile
        .tags
        .iter()
        .enumerate()
        .map(|(i, &code_type)| {
            Ok(ClassMember { coord: i + 1, code_type, code: puncture(ec, i + 1)? })
        })
        .collect()
}

/// Length-16 code whose extension has all three puncture types: the
/// extended Vasil'ev code with λ ≡ 0, together with the extended Vasil'ev
/// code with λ flipped on one base codeword shifted by the unit vector of
/// coordinate 16.
pub fn build_abc_fixture() -> Result<Code> {
    let base = hamming(3)?;
    let l0 = Lambda::zero(base.code());
    let l1 = Lambda::flipping(base.code(), &base.code().words()[1..2])?;
    let e0 = extend_even(vasiliev(&base, &l0)?.code())?;
    let e1 = extend_even(vasiliev(&base, &l1)?.code())?;
    let c = e0.union(&translate(&e1, &Word::unit(16, 16)?)?)?;
    let report = verify_np1cc(&c);
    if !report.is_np1cc {
        return Err(Error::NotNp1cc(report.failures.join("; ")));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balanced::{build_balanced, zero_translate};
    use crate::construct::{type_a_union, linear_np1cc, LinearVariant};
    use crate::perfect::odd_translate;

    fn code(ws: &[&str]) -> Code {
        Code::from_strs(ws).unwrap()
    }

    #[test]
    fn small_extensions() {
        let a = extend_np1cc(&code(&["0000", "0001", "1110", "1111"])).unwrap();
        assert_eq!(a, code(&["00000", "00011", "11101", "11110"]));
        assert_eq!(enp1cc_pairs(&a).unwrap().len(), 2);
        let b = extend_np1cc(&code(&["0000", "1001", "1110", "0111"])).unwrap();
        assert_eq!(b, code(&["00000", "10010", "11101", "01111"]));
        assert_eq!(enp1cc_pairs(&b).unwrap().len(), 2);
        assert!(extend_np1cc(&code(&["0000", "1111"])).is_err());
    }

    #[test]
    fn insert_positions() {
        let c = code(&["0000", "0001", "1110", "1111"]);
        let first = extend_at(&c, 1).unwrap();
        assert_eq!(first, code(&["00000", "10001", "11110", "01111"]));
        assert_eq!(puncture(&first, 1).unwrap(), c);
        assert!(extend_at(&c, 6).is_err());
    }

    #[test]
    fn pe_ab_profile() {
        let ext = extend_even(hamming(3).unwrap().code()).unwrap();
        for j in 1..=8 {
            let c = type_a_union(&ext, &odd_translate(&ext, j).unwrap()).unwrap();
            let p = puncture_scan(&extend_np1cc(&c).unwrap()).unwrap();
            assert_eq!(p.counts(), (2, 7, 0));
            assert_eq!(p.tags[j - 1], CodeType::A);
            assert_eq!(p.tags[8], CodeType::A);
        }
    }

    #[test]
    fn balanced_profile() {
        let c = zero_translate(&build_balanced(3).unwrap()).unwrap();
        let p = puncture_scan(&extend_np1cc(&c).unwrap()).unwrap();
        assert_eq!(p.counts(), (1, 0, 8));
        assert_eq!(p.tag_string(), "CCCCCCCCA");
    }

    #[test]
    fn abc_profile() {
        let c = build_abc_fixture().unwrap();
        let ec = extend_np1cc(&c).unwrap();
        let p = puncture_scan(&ec).unwrap();
        assert_eq!(p.n_a, 1);
        assert!(p.n_b >= 1 && p.n_c >= 1);
        assert_eq!(p.tags[16], CodeType::A);
        assert_eq!(puncture(&ec, 17).unwrap(), c);
    }

    #[test]
    fn linear_b_profile_has_no_all_b() {
        let c = linear_np1cc(3, LinearVariant::B).unwrap();
        let p = puncture_scan(&extend_np1cc(&c).unwrap()).unwrap();
        assert!(p.n_b < p.length && p.n_a < p.length);
    }

    #[test]
    fn class_grouping() {
        let ext = extend_even(hamming(3).unwrap().code()).unwrap();
        let c = type_a_union(&ext, &odd_translate(&ext, 3).unwrap()).unwrap();
        let ec = extend_np1cc(&c).unwrap();
        let class = puncture_class(&ec).unwrap();
        let key = ec.to_code_string();
        assert_eq!(class.iter().filter(|m| m.code_type == CodeType::A).count(), 2);
        assert_eq!(class.iter().filter(|m| m.code_type == CodeType::B).count(), 7);
        for m in &class {
            assert_eq!(equivalence_key_at(&m.code, m.coord).unwrap(), key);
        }
        assert_eq!(equivalence_key(&c).unwrap(), equivalence_key(&c.clone()).unwrap());
    }

    #[test]
    fn rejects_non_extended() {
        let c = code(&["0000", "0001", "1110", "1111"]);
        assert!(matches!(enp1cc_pairs(&c), Err(Error::NotEnp1cc(_))));
        let odd = code(&["00000", "00011", "11101", "11111"]);
        assert!(matches!(puncture_scan(&odd), Err(Error::NotEnp1cc(_))));
    }
}
