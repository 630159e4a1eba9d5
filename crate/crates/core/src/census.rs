//! Exhaustive enumeration of all NP1CCs of length 2 and 4, with every
//! structural statement audited on each code.
//!
//! Length 8 would mean choosing 32 of 256 words and is out of reach of
//! subset enumeration.

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::code::Code;
use crate::error::{Error, Result};
use crate::extend::{extend_np1cc, puncture_scan};
use crate::np1cc::{structure_violations, verify_np1cc, CodeType, Violation};
use crate::spectra::{
    closed_form_weight_distribution, dual_distance_distribution,
    dual_distance_distribution_macwilliams, WeightCase,
};
use crate::word::Word;

pub const CHECK_EXTERNAL_DISTANCE: &str = "external_distance";
pub const CHECK_WEIGHT_ENUMERATOR: &str = "weight_enumerator";
pub const CHECK_TABLE_TYPES: &str = "table_types";
pub const CHECK_NOT_NP1CC: &str = "not_np1cc";

/// Checks every structural statement on `c`: ball and radius-2 counts,
/// partner structure, capsule tiling, the even-weight statements (n > 2),
/// the support of B′ (computed two ways), and the weight distribution and
/// `(A₀, A₁)` case of every translate `e + C`.
pub fn audit(c: &Code) -> Vec<Violation> {
    let report = verify_np1cc(c);
    if !report.is_np1cc {
        return vec![Violation::new(CHECK_NOT_NP1CC, report.failures.join("; "))];
    }
    let mut out = match structure_violations(c) {
        Ok(v) => v,
        Err(e) => return vec![Violation::new(CHECK_NOT_NP1CC, e.to_string())],
    };
    out.extend(external_distance_violations(c));
    out.extend(translate_violations(c, report.code_type));
    out
}

fn external_distance_violations(c: &Code) -> Vec<Violation> {
    let n = c.length();
    let (direct, mac) = match (dual_distance_distribution(c), dual_distance_distribution_macwilliams(c)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return vec![Violation::new(CHECK_EXTERNAL_DISTANCE, e.to_string())],
    };
    let mut out = Vec::new();
    if direct != mac {
        out.push(Violation::new(CHECK_EXTERNAL_DISTANCE, "char-sum and MacWilliams routes disagree"));
    }
    let support: Vec<usize> = (1..=n).filter(|&i| !direct[i].is_zero()).collect();
    if support.iter().any(|&i| i != n / 2 && i != n / 2 + 1) {
        out.push(Violation::new(
            CHECK_EXTERNAL_DISTANCE,
            format!("B' support {support:?} outside {{0, n/2, n/2+1}}"),
        ));
    }
    out
}

fn translate_violations(c: &Code, code_type: CodeType) -> Vec<Violation> {
    let n = c.length();
    let masks = c.masks();
    let mut expected: BTreeMap<WeightCase, Vec<u64>> = BTreeMap::new();
    for case in WeightCase::ALL {
        let (a0, a1) = case.a0_a1();
        match closed_form_weight_distribution(n, a0, a1) {
            Ok(v) => {
                expected.insert(case, v);
            }
            Err(e) => return vec![Violation::new(CHECK_WEIGHT_ENUMERATOR, e.to_string())],
        }
    }
    let failures: Vec<Violation> = (0..1u32 << n)
        .into_par_iter()
        .filter_map(|e| {
            let mut a = vec![0u64; n + 1];
            for m in &masks {
                a[(m ^ e).count_ones() as usize] += 1;
            }
            let word = Word::new(n, e).ok()?;
            let case = match WeightCase::from_a0_a1(a[0] as i64, a[1] as i64) {
                Ok(case) => case,
                Err(err) => return Some(Violation::new(CHECK_WEIGHT_ENUMERATOR, format!("{word}: {err}"))),
            };
            if !case.types().contains(&code_type) {
                return Some(Violation::new(
                    CHECK_TABLE_TYPES,
                    format!("{word}: case {case:?} cannot occur in Type {code_type}"),
                ));
            }
            (expected[&case] != a).then(|| {
                Violation::new(CHECK_WEIGHT_ENUMERATOR, format!("{word}: distribution {a:?}"))
            })
        })
        .collect();
    failures.into_iter().take(8).collect()
}

/// Every M-subset of F₂ⁿ with covering radius 1, in lexicographic order
/// of the (canonically sorted) subsets.
pub fn enumerate_np1cc(n: usize, threads: usize) -> Result<Vec<Code>> {
    if n != 2 && n != 4 {
        return Err(Error::InvalidParameters(format!("census supports n in {{2, 4}}, got {n}")));
    }
    let r = n.trailing_zeros() as usize;
    let m = 1usize << (n - r);
    let space: Vec<u32> = {
        let mut words: Vec<Word> = (0..1u32 << n).map(|x| Word::new(n, x)).collect::<Result<_>>()?;
        words.sort_unstable();
        words.iter().map(Word::bits).collect()
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Error::InvalidParameters(e.to_string()))?;
    let chunks: Vec<Vec<Vec<u32>>> = pool.install(|| {
        (0..space.len())
            .into_par_iter()
            .map(|first| {
                let mut found = Vec::new();
                let mut chosen = vec![space[first]];
                search(&space, first + 1, m, &mut chosen, &mut found);
                found
            })
            .collect()
    });
    chunks
        .into_iter()
        .flatten()
        .filter_map(|masks| {
            let c = Code::from_masks(n, masks);
            match c {
                Ok(c) if verify_np1cc(&c).is_np1cc => Some(Ok(c)),
                Ok(_) => None,
                Err(e) => Some(Err(e)),
            }
        })
        .collect()
}

/// Some member would have two others within distance 2.
fn crowded(chosen: &[u32]) -> bool {
    chosen.iter().any(|&a| {
        chosen
            .iter()
            .filter(|&&b| b != a && (a ^ b).count_ones() <= 2)
            .count()
            >= 2
    })
}

fn search(space: &[u32], from: usize, m: usize, chosen: &mut Vec<u32>, found: &mut Vec<Vec<u32>>) {
    if crowded(chosen) {
        return;
    }
    if chosen.len() == m {
        found.push(chosen.clone());
        return;
    }
    let needed = m - chosen.len();
    for i in from..=space.len().saturating_sub(needed) {
        chosen.push(space[i]);
        search(space, i + 1, m, chosen, found);
        chosen.pop();
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusEntry {
    pub words: Vec<Word>,
    #[serde(rename = "type")]
    pub code_type: CodeType,
    pub k: usize,
    pub profile: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusResult {
    pub n: usize,
    pub total: usize,
    pub by_type: BTreeMap<String, usize>,
    /// Type I pair count → number of codes.
    pub k_histogram: BTreeMap<usize, usize>,
    /// Puncture profile of the extension, as `nA/nB/nC` → number of codes.
    pub profile_histogram: BTreeMap<String, usize>,
    pub theorem_violations: Vec<String>,
    pub codes: Vec<CensusEntry>,
}

pub fn census(n: usize, threads: usize) -> Result<CensusResult> {
    let codes = enumerate_np1cc(n, threads)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Error::InvalidParameters(e.to_string()))?;
    let audited: Vec<(CensusEntry, Vec<String>)> = pool.install(|| {
        codes
            .par_iter()
            .enumerate()
            .map(|(idx, c)| {
                let report = verify_np1cc(c);
                let mut problems: Vec<String> = audit(c)
                    .into_iter()
                    .map(|v| format!("code {idx}: {}: {}", v.check, v.detail))
                    .collect();
                let profile = match extend_np1cc(c).and_then(|ec| puncture_scan(&ec)) {
                    Ok(p) => {
                        if p.n_a == p.length || p.n_b == p.length {
                            problems.push(format!("code {idx}: profile {} is uniform", p.tag_string()));
                        }
                        if p.n_b > 0 && p.n_c > 0 && p.n_a != 1 {
                            problems.push(format!("code {idx}: profile {} has B and C but nA != 1", p.tag_string()));
                        }
                        format!("{}/{}/{}", p.n_a, p.n_b, p.n_c)
                    }
                    Err(e) => {
                        problems.push(format!("code {idx}: extension: {e}"));
                        String::new()
                    }
                };
                let entry = CensusEntry {
                    words: c.words().to_vec(),
                    code_type: report.code_type,
                    k: report.k,
                    profile,
                };
                (entry, problems)
            })
            .collect()
    });
    let mut result = CensusResult {
        n,
        total: codes.len(),
        by_type: ["A", "B", "C"].iter().map(|t| (t.to_string(), 0)).collect(),
        k_histogram: BTreeMap::new(),
        profile_histogram: BTreeMap::new(),
        theorem_violations: Vec::new(),
        codes: Vec::with_capacity(codes.len()),
    };
    for (entry, problems) in audited {
        *result.by_type.entry(entry.code_type.to_string()).or_default() += 1;
        *result.k_histogram.entry(entry.k).or_default() += 1;
        *result.profile_histogram.entry(entry.profile.clone()).or_default() += 1;
        result.theorem_violations.extend(problems);
        result.codes.push(entry);
    }
    Ok(result)
}
