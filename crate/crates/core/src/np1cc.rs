//! Verification and structure of nearly perfect 1-covering codes.
//!
//! An NP1CC has length n = 2^r, size M = 2^(n−r) and covering radius 1.
//! Every codeword then has exactly one other codeword (its partner) within
//! distance 2, and the partner pairs split into Type I (distance 1) and
//! Type II (distance 2) pairs.
//!
//! Exhaustive routines work over a 2^n table and are capped at n = 16.

use std::fmt;

use serde::Serialize;

use crate::code::Code;
use crate::error::{Error, Result};
use crate::word::{ball_offsets, Word};

pub const MAX_EXHAUSTIVE_LENGTH: usize = 16;

fn check_exhaustive(c: &Code) -> Result<()> {
    if c.length() > MAX_EXHAUSTIVE_LENGTH {
        return Err(Error::TooLongForExhaustive(c.length()));
    }
    Ok(())
}

/// Largest distance from a word of F₂ⁿ to the code, found by growing
/// radius-t balls around all codewords at once.
pub fn covering_radius(c: &Code) -> Result<usize> {
    if c.is_empty() {
        return Err(Error::EmptyCode);
    }
    check_exhaustive(c)?;
    let n = c.length();
    let mut seen = vec![false; 1 << n];
    let mut frontier: Vec<u32> = c.words().iter().map(Word::bits).collect();
    for &x in &frontier {
        seen[x as usize] = true;
    }
    let mut marked = frontier.len();
    let mut radius = 0;
    while marked < seen.len() {
        let mut next = Vec::new();
        for &x in &frontier {
            for j in 0..n {
                let y = x ^ (1 << j);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    next.push(y);
                }
            }
        }
        marked += next.len();
        frontier = next;
        radius += 1;
    }
    Ok(radius)
}

/// `|B_t(x) ∩ C|` for every word `x`, indexed by mask.
pub fn ball_counts(c: &Code, t: usize) -> Result<Vec<u16>> {
    check_exhaustive(c)?;
    let n = c.length();
    let offsets = ball_offsets(n, t);
    let mut counts = vec![0u16; 1 << n];
    for w in c.words() {
        for &o in &offsets {
            counts[(w.bits() ^ o) as usize] += 1;
        }
    }
    Ok(counts)
}

/// `r` with n = 2^r and M = 2^(n−r), if the parameters fit.
pub fn np1cc_parameters(c: &Code) -> Option<usize> {
    let n = c.length();
    let r = n.trailing_zeros() as usize;
    if n != 1 << r || r == 0 || n - r >= usize::BITS as usize {
        return None;
    }
    (c.size() == 1 << (n - r)).then_some(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PairKind {
    #[serde(rename = "I")]
    TypeI,
    #[serde(rename = "II")]
    TypeII,
}

impl fmt::Display for PairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairKind::TypeI => "I",
            PairKind::TypeII => "II",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CodeType {
    A,
    B,
    C,
    #[serde(rename = "not_applicable")]
    NotApplicable,
}

impl fmt::Display for CodeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CodeType::A => "A",
            CodeType::B => "B",
            CodeType::C => "C",
            CodeType::NotApplicable => "not_applicable",
        })
    }
}

/// Two partners, stored with `first < second`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Pair {
    pub first: Word,
    pub second: Word,
    pub kind: PairKind,
}

impl Pair {
    /// Bits on which the partners disagree.
    pub fn difference(&self) -> u32 {
        self.first.bits() ^ self.second.bits()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairPartition {
    pub pairs: Vec<Pair>,
}

impl PairPartition {
    pub fn type1_count(&self) -> usize {
        self.pairs.iter().filter(|p| p.kind == PairKind::TypeI).count()
    }

    pub fn type2_count(&self) -> usize {
        self.pairs.len() - self.type1_count()
    }

    pub fn code_type(&self) -> CodeType {
        match (self.type1_count(), self.type2_count()) {
            (_, 0) => CodeType::A,
            (0, _) => CodeType::B,
            _ => CodeType::C,
        }
    }
}

/// The unique codeword other than `cw` within distance 2.
pub fn partner(c: &Code, cw: &Word) -> Result<Word> {
    if !c.contains(cw) {
        return Err(Error::NotCodeword(cw.to_string()));
    }
    let found = near_codewords(c, cw.bits(), 2);
    match found.as_slice() {
        [p] => Ok(Word::new(c.length(), *p)?),
        _ => Err(Error::PartnerCount { word: cw.to_string(), count: found.len() }),
    }
}

/// Codewords other than `x` within distance 1..=t of `x`.
fn near_codewords(c: &Code, x: u32, t: usize) -> Vec<u32> {
    ball_offsets(c.length(), t)
        .into_iter()
        .filter(|&o| o != 0 && c.contains_mask(x ^ o))
        .map(|o| x ^ o)
        .collect()
}

/// Splits the code into partner pairs.
///
/// Fails if some codeword has no partner or more than one candidate.
pub fn pair_partition(c: &Code) -> Result<PairPartition> {
    if c.is_empty() {
        return Err(Error::EmptyCode);
    }
    let n = c.length();
    let offsets: Vec<u32> = ball_offsets(n, 2).into_iter().filter(|&o| o != 0).collect();
    let mut pairs = Vec::with_capacity(c.size() / 2);
    for w in c.words() {
        let mut found = offsets.iter().filter(|&&o| c.contains_mask(w.bits() ^ o));
        let (Some(&o), None) = (found.next(), found.next()) else {
            let count = offsets.iter().filter(|&&o| c.contains_mask(w.bits() ^ o)).count();
            return Err(Error::PartnerCount { word: w.to_string(), count });
        };
        let other = Word::new(n, w.bits() ^ o)?;
        if *w < other {
            let kind = if o.count_ones() == 1 { PairKind::TypeI } else { PairKind::TypeII };
            pairs.push(Pair { first: *w, second: other, kind });
        }
    }
    Ok(PairPartition { pairs })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Np1ccReport {
    pub n: usize,
    pub m: usize,
    pub is_np1cc: bool,
    pub r: Option<usize>,
    pub code_type: CodeType,
    pub covering_radius: Option<usize>,
    pub pair_partition: Option<PairPartition>,
    /// Number of Type I pairs.
    pub k: usize,
    pub midwords: Vec<Word>,
    pub failures: Vec<String>,
}

/// Checks the NP1CC parameters and covering radius; on success fills in the
/// pairing, type, Type I count and midwords.
pub fn verify_np1cc(c: &Code) -> Np1ccReport {
    let mut report = Np1ccReport {
        n: c.length(),
        m: c.size(),
        is_np1cc: false,
        r: None,
        code_type: CodeType::NotApplicable,
        covering_radius: None,
        pair_partition: None,
        k: 0,
        midwords: Vec::new(),
        failures: Vec::new(),
    };
    let n = c.length();
    let r = n.trailing_zeros() as usize;
    if n != 1 << r || r == 0 {
        report.failures.push(format!("length {n} is not a power of two >= 2"));
        return report;
    }
    report.r = Some(r);
    if np1cc_parameters(c).is_none() {
        report
            .failures
            .push(format!("size {} differs from 2^(n-r) = {}", c.size(), 1u64 << (n - r)));
    }
    match covering_radius(c) {
        Ok(radius) => {
            report.covering_radius = Some(radius);
            if radius > 1 {
                report.failures.push(format!("covering radius {radius} exceeds 1"));
            }
        }
        Err(e) => report.failures.push(e.to_string()),
    }
    if !report.failures.is_empty() {
        return report;
    }
    match pair_partition(c) {
        Ok(partition) => {
            report.code_type = partition.code_type();
            report.k = partition.type1_count();
            report.pair_partition = Some(partition);
        }
        Err(e) => {
            report.failures.push(e.to_string());
            return report;
        }
    }
    match scan_midwords(c) {
        Ok(mids) => report.midwords = mids,
        Err(e) => {
            report.failures.push(e.to_string());
            return report;
        }
    }
    report.is_np1cc = true;
    report
}

pub fn is_np1cc(c: &Code) -> bool {
    verify_np1cc(c).is_np1cc
}

fn require_np1cc(c: &Code) -> Result<()> {
    let report = verify_np1cc(c);
    if report.is_np1cc {
        Ok(())
    } else {
        Err(Error::NotNp1cc(report.failures.join("; ")))
    }
}

fn scan_midwords(c: &Code) -> Result<Vec<Word>> {
    let counts = ball_counts(c, 1)?;
    let n = c.length();
    let mut out = Vec::new();
    for (x, &count) in counts.iter().enumerate() {
        if count == 2 && !c.contains_mask(x as u32) {
            out.push(Word::new(n, x as u32)?);
        }
    }
    out.sort();
    Ok(out)
}

/// Non-codewords covered by exactly two codewords.
pub fn midwords(c: &Code) -> Result<Vec<Word>> {
    require_np1cc(c)?;
    scan_midwords(c)
}

/// Σ_{y∈Y} (|B₁(y) ∩ C| − 1). Every `y` must be covered.
pub fn over_covering(c: &Code, ys: &[Word]) -> Result<usize> {
    let offsets = ball_offsets(c.length(), 1);
    let mut total = 0;
    for y in ys {
        crate::word::check_lengths(c.length(), y.len())?;
        let count = offsets.iter().filter(|&&o| c.contains_mask(y.bits() ^ o)).count();
        if count == 0 {
            return Err(Error::InvalidParameters(format!("{y} is not covered")));
        }
        total += count - 1;
    }
    Ok(total)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Capsule {
    pub pair: Pair,
    /// B₁(c) ∪ B₁(c′), canonically ordered.
    pub cells: Vec<Word>,
}

/// The capsule of every partner pair; checks that they tile F₂ⁿ.
pub fn capsules(c: &Code) -> Result<Vec<Capsule>> {
    check_exhaustive(c)?;
    let partition = pair_partition(c)?;
    let n = c.length();
    let offsets = ball_offsets(n, 1);
    let mut owner = vec![false; 1 << n];
    let mut out = Vec::with_capacity(partition.pairs.len());
    for pair in partition.pairs {
        let mut cells: Vec<u32> = offsets
            .iter()
            .flat_map(|&o| [pair.first.bits() ^ o, pair.second.bits() ^ o])
            .collect();
        cells.sort_unstable();
        cells.dedup();
        for &x in &cells {
            if std::mem::replace(&mut owner[x as usize], true) {
                return Err(Error::CapsuleOverlap(Word::new(n, x)?.to_string()));
            }
        }
        let mut cells = cells
            .into_iter()
            .map(|x| Word::new(n, x))
            .collect::<Result<Vec<_>>>()?;
        cells.sort();
        out.push(Capsule { pair, cells });
    }
    if let Some(x) = owner.iter().position(|&o| !o) {
        return Err(Error::NotNp1cc(format!(
            "capsules miss {}",
            Word::new(n, x as u32)?
        )));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Radius2Census {
    pub codeword_min: usize,
    pub codeword_max: usize,
    pub noncodeword_min: usize,
    pub noncodeword_max: usize,
    /// Codewords whose radius-2 ball does not hold exactly 2 codewords.
    pub codeword_discrepancies: usize,
    /// Non-codewords whose radius-2 ball does not hold exactly n/2+1 codewords.
    pub noncodeword_discrepancies: usize,
}

/// Ranges of |B₂(x) ∩ C| over codewords and over non-codewords.
pub fn radius2_census(c: &Code) -> Result<Radius2Census> {
    let counts = ball_counts(c, 2)?;
    let n = c.length();
    let mut census = Radius2Census {
        codeword_min: usize::MAX,
        codeword_max: 0,
        noncodeword_min: usize::MAX,
        noncodeword_max: 0,
        codeword_discrepancies: 0,
        noncodeword_discrepancies: 0,
    };
    for (x, &count) in counts.iter().enumerate() {
        let count = count as usize;
        if c.contains_mask(x as u32) {
            census.codeword_min = census.codeword_min.min(count);
            census.codeword_max = census.codeword_max.max(count);
            census.codeword_discrepancies += (count != 2) as usize;
        } else {
            census.noncodeword_min = census.noncodeword_min.min(count);
            census.noncodeword_max = census.noncodeword_max.max(count);
            census.noncodeword_discrepancies += (count != n / 2 + 1) as usize;
        }
    }
    Ok(census)
}

/// One failed structural statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub check: &'static str,
    pub detail: String,
}

impl Violation {
    pub(crate) fn new(check: &'static str, detail: impl Into<String>) -> Self {
        Self { check, detail: detail.into() }
    }
}

pub const CHECK_COVER_BALL: &str = "cover_ball_x";
pub const CHECK_RADIUS2: &str = "radius2";
pub const CHECK_NO_D3: &str = "no_d3";
pub const CHECK_ADJACENT: &str = "adjacent_codewords";
pub const CHECK_COVERED_TWICE: &str = "covered_twice";
pub const CHECK_CAPSULES: &str = "capsule_tiling";
pub const CHECK_EVEN_WEIGHT: &str = "even_weight";
pub const CHECK_EVEN_PAIRS: &str = "even_pairs";

const REPORT_LIMIT: usize = 8;

fn push_limited(out: &mut Vec<Violation>, seen: &mut usize, v: Violation) {
    *seen += 1;
    if *seen <= REPORT_LIMIT {
        out.push(v);
    }
}

/// Every non-codeword ball holds exactly one twice-covered word and none
/// covered three or more times.
pub fn check_cover_ball(c: &Code) -> Result<Vec<Violation>> {
    let counts = ball_counts(c, 1)?;
    let n = c.length();
    let mut out = Vec::new();
    let mut seen = 0;
    for x in 0..1u32 << n {
        if c.contains_mask(x) {
            continue;
        }
        let (mut twice, mut more) = (0, 0);
        for o in std::iter::once(0).chain((0..n).map(|j| 1u32 << j)) {
            match counts[(x ^ o) as usize] {
                2 => twice += 1,
                k if k > 2 => more += 1,
                _ => {}
            }
        }
        if twice != 1 || more != 0 {
            let detail = format!(
                "{}: {twice} twice-covered and {more} over-covered words in B1",
                Word::new(n, x)?
            );
            push_limited(&mut out, &mut seen, Violation::new(CHECK_COVER_BALL, detail));
        }
    }
    Ok(out)
}

/// Non-codeword radius-2 balls hold n/2+1 codewords.
pub fn check_radius2(c: &Code) -> Result<Vec<Violation>> {
    let census = radius2_census(c)?;
    let mut out = Vec::new();
    if census.noncodeword_discrepancies > 0 {
        out.push(Violation::new(
            CHECK_RADIUS2,
            format!(
                "{} non-codewords off n/2+1 (range {}..={})",
                census.noncodeword_discrepancies, census.noncodeword_min, census.noncodeword_max
            ),
        ));
    }
    Ok(out)
}

/// Codeword radius-2 balls hold at least 2 codewords.
pub fn check_no_d3(c: &Code) -> Result<Vec<Violation>> {
    let census = radius2_census(c)?;
    let mut out = Vec::new();
    if census.codeword_min < 2 {
        out.push(Violation::new(CHECK_NO_D3, "some codeword is isolated at distance <= 2"));
    }
    Ok(out)
}

/// Codeword radius-2 balls hold exactly 2 codewords.
pub fn check_adjacent(c: &Code) -> Result<Vec<Violation>> {
    let census = radius2_census(c)?;
    let mut out = Vec::new();
    if census.codeword_discrepancies > 0 {
        out.push(Violation::new(
            CHECK_ADJACENT,
            format!(
                "{} codewords without exactly one partner (range {}..={})",
                census.codeword_discrepancies, census.codeword_min, census.codeword_max
            ),
        ));
    }
    Ok(out)
}

/// Exactly M words are covered twice and none more.
pub fn check_covered_twice(c: &Code) -> Result<Vec<Violation>> {
    let counts = ball_counts(c, 1)?;
    let twice = counts.iter().filter(|&&k| k == 2).count();
    let more = counts.iter().filter(|&&k| k > 2).count();
    let mut out = Vec::new();
    if twice != c.size() || more != 0 {
        out.push(Violation::new(
            CHECK_COVERED_TWICE,
            format!("{twice} twice-covered (expected {}), {more} covered 3+ times", c.size()),
        ));
    }
    Ok(out)
}

/// M/2 disjoint capsules of 2n words cover F₂ⁿ.
pub fn check_capsule_tiling(c: &Code) -> Result<Vec<Violation>> {
    let n = c.length();
    let mut out = Vec::new();
    match capsules(c) {
        Ok(caps) => {
            if caps.len() * 2 != c.size() {
                out.push(Violation::new(CHECK_CAPSULES, "pair count differs from M/2"));
            }
            if let Some(cap) = caps.iter().find(|cap| cap.cells.len() != 2 * n) {
                out.push(Violation::new(
                    CHECK_CAPSULES,
                    format!("capsule of {} has {} cells", cap.pair.first, cap.cells.len()),
                ));
            }
        }
        Err(e) => out.push(Violation::new(CHECK_CAPSULES, e.to_string())),
    }
    Ok(out)
}

/// For n > 2, half the codewords have even weight.
pub fn check_even_weight(c: &Code) -> Vec<Violation> {
    if c.length() <= 2 {
        return Vec::new();
    }
    let even = c.even_part().size();
    if 2 * even == c.size() {
        Vec::new()
    } else {
        vec![Violation::new(
            CHECK_EVEN_WEIGHT,
            format!("{even} of {} codewords have even weight", c.size()),
        )]
    }
}

/// For n > 2, k is even and half the Type II pairs are even-weight.
pub fn check_even_pairs(c: &Code) -> Vec<Violation> {
    if c.length() <= 2 {
        return Vec::new();
    }
    let partition = match pair_partition(c) {
        Ok(p) => p,
        Err(e) => return vec![Violation::new(CHECK_EVEN_PAIRS, e.to_string())],
    };
    let mut out = Vec::new();
    let k = partition.type1_count();
    if k % 2 != 0 {
        out.push(Violation::new(CHECK_EVEN_PAIRS, format!("k = {k} is odd")));
    }
    let type2 = partition.type2_count();
    let even2 = partition
        .pairs
        .iter()
        .filter(|p| p.kind == PairKind::TypeII && p.first.weight() % 2 == 0)
        .count();
    if 2 * even2 != type2 {
        out.push(Violation::new(
            CHECK_EVEN_PAIRS,
            format!("{even2} of {type2} Type II pairs have even weight"),
        ));
    }
    out
}

/// All structural checks on the code.
pub fn structure_violations(c: &Code) -> Result<Vec<Violation>> {
    let mut out = check_cover_ball(c)?;
    out.extend(check_radius2(c)?);
    out.extend(check_no_d3(c)?);
    out.extend(check_adjacent(c)?);
    out.extend(check_covered_twice(c)?);
    out.extend(check_capsule_tiling(c)?);
    out.extend(check_even_weight(c));
    out.extend(check_even_pairs(c));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(ws: &[&str]) -> Code {
        Code::from_strs(ws).unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn type_a4() -> Code {
        code(&["0000", "0001", "1110", "1111"])
    }

    fn type_b4() -> Code {
        code(&["0000", "1001", "1110", "0111"])
    }

    /// Direct max-min distance scan.
    fn radius_oracle(c: &Code) -> usize {
        let n = c.length();
        (0..1u32 << n)
            .map(|x| c.words().iter().map(|w| (w.bits() ^ x).count_ones() as usize).min().unwrap())
            .max()
            .unwrap()
    }

    #[test]
    fn covering_radius_examples() {
        assert_eq!(covering_radius(&code(&["00", "01"])).unwrap(), 1);
        assert_eq!(covering_radius(&code(&["0000"])).unwrap(), 4);
        assert_eq!(covering_radius(&type_a4()).unwrap(), 1);
        assert_eq!(covering_radius(&Code::parse_code("# n=3\n").unwrap()), Err(Error::EmptyCode));
        let long = Code::new(17, [Word::zero(17).unwrap()]).unwrap();
        assert_eq!(covering_radius(&long), Err(Error::TooLongForExhaustive(17)));
    }

    proptest::proptest! {
        #[test]
        fn covering_radius_matches_scan(
            n in 1usize..=7,
            raw in proptest::collection::vec(proptest::prelude::any::<u32>(), 1..12),
        ) {
            let masks: std::collections::BTreeSet<u32> =
                raw.into_iter().map(|x| x & ((1 << n) - 1)).collect();
            let c = Code::from_masks(n, masks).unwrap();
            proptest::prop_assert_eq!(covering_radius(&c).unwrap(), radius_oracle(&c));
        }
    }

    #[test]
    fn verify_examples() {
        let a = verify_np1cc(&type_a4());
        assert!(a.is_np1cc);
        assert_eq!(a.code_type, CodeType::A);
        assert_eq!(a.k, 2);
        let b = verify_np1cc(&type_b4());
        assert!(b.is_np1cc);
        assert_eq!(b.code_type, CodeType::B);
        assert_eq!(b.k, 0);
        let bad = verify_np1cc(&code(&["0000", "0001", "0010", "0011"]));
        assert!(!bad.is_np1cc);
        assert_eq!(bad.covering_radius, Some(2));
        let wrong_size = verify_np1cc(&code(&["0000", "1111"]));
        assert!(!wrong_size.is_np1cc);
        assert!(!verify_np1cc(&code(&["000", "111"])).is_np1cc);
    }

    #[test]
    fn partners() {
        assert_eq!(partner(&type_a4(), &w("0000")).unwrap(), w("0001"));
        assert_eq!(partner(&type_b4(), &w("0000")).unwrap(), w("1001"));
        assert_eq!(partner(&type_a4(), &w("1110")).unwrap(), w("1111"));
        assert!(matches!(partner(&type_a4(), &w("1000")), Err(Error::NotCodeword(_))));
        let crowded = code(&["0000", "0001", "0010", "1111"]);
        assert!(matches!(
            partner(&crowded, &w("0000")),
            Err(Error::PartnerCount { count: 2, .. })
        ));
        for c in [type_a4(), type_b4()] {
            for cw in c.words() {
                assert_eq!(partner(&c, &partner(&c, cw).unwrap()).unwrap(), *cw);
            }
        }
    }

    #[test]
    fn midword_examples() {
        assert!(midwords(&type_a4()).unwrap().is_empty());
        let mids = midwords(&type_b4()).unwrap();
        assert_eq!(mids.len(), 4);
        assert!(mids.contains(&w("1000")));
        assert!(mids.contains(&w("0001")));
        assert!(midwords(&code(&["0000", "0001", "0010", "0011"])).is_err());
    }

    #[test]
    fn over_covering_examples() {
        let a = type_a4();
        let full: Vec<Word> = (0..16).map(|x| Word::new(4, x).unwrap()).collect();
        assert_eq!(over_covering(&a, &full).unwrap(), 4);
        assert_eq!(over_covering(&type_b4(), &full).unwrap(), 4);
        for x in &full {
            if !a.contains(x) {
                let ball = crate::word::ball(x, 1).unwrap();
                assert_eq!(over_covering(&a, &ball).unwrap(), 1);
            }
        }
        assert_eq!(over_covering(&type_b4(), &[w("0000")]).unwrap(), 0);
        let sparse = code(&["0000"]);
        assert!(over_covering(&sparse, &[w("1100")]).is_err());
    }

    #[test]
    fn capsule_examples() {
        let caps = capsules(&type_a4()).unwrap();
        assert_eq!(caps.len(), 2);
        assert!(caps.iter().all(|c| c.cells.len() == 8));
        let caps = capsules(&type_b4()).unwrap();
        let first = caps.iter().find(|c| c.pair.first == w("0000")).unwrap();
        assert_eq!(first.pair.kind, PairKind::TypeII);
        assert!(first.cells.contains(&w("1000")));
        assert!(first.cells.contains(&w("0001")));
        assert_eq!(first.cells.len(), 8);
    }

    #[test]
    fn radius2_on_type_a4() {
        let c = type_a4();
        let counts = ball_counts(&c, 2).unwrap();
        assert_eq!(counts[w("1000").bits() as usize], 3);
        let census = radius2_census(&c).unwrap();
        assert_eq!((census.codeword_min, census.codeword_max), (2, 2));
        assert_eq!((census.noncodeword_min, census.noncodeword_max), (3, 3));
    }

    #[test]
    fn structure_checks_pass_and_fail() {
        for c in [type_a4(), type_b4()] {
            assert!(structure_violations(&c).unwrap().is_empty());
        }
        let mutated = code(&["1000", "0001", "1110", "1111"]);
        assert!(!structure_violations(&mutated).unwrap().is_empty());
    }
}
