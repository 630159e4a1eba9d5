use std::collections::BTreeSet;

use np1cc::census::{census, enumerate_np1cc};
use np1cc::construct::{glue, linear_np1cc, LinearVariant};
use np1cc::perfect::{hamming, is_perfect};
use np1cc::{Code, Word};

/// All M-subsets of F₂ⁿ whose radius-1 balls cover the space, by plain
/// combination counting with no pruning.
fn naive_np1ccs(n: usize) -> BTreeSet<Vec<u32>> {
    let m = 1usize << (n - n.trailing_zeros() as usize);
    let size = 1u32 << n;
    let mut out = BTreeSet::new();
    let mut idx: Vec<u32> = (0..m as u32).collect();
    loop {
        let covered = (0..size).all(|x| idx.iter().any(|&c| (c ^ x).count_ones() <= 1));
        if covered {
            let mut v = idx.clone();
            v.sort_unstable();
            out.insert(v);
        }
        let mut i = m;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < size - (m - i) as u32 {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..m {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn mask_set(codes: &[Code]) -> BTreeSet<Vec<u32>> {
    codes
        .iter()
        .map(|c| {
            let mut v = c.masks();
            v.sort_unstable();
            v
        })
        .collect()
}

#[test]
fn enumeration_matches_naive_oracle() {
    for n in [2, 4] {
        let fast = enumerate_np1cc(n, 2).unwrap();
        let oracle = naive_np1ccs(n);
        assert_eq!(fast.len(), oracle.len(), "n={n}");
        assert_eq!(mask_set(&fast), oracle, "n={n}");
    }
}

#[test]
fn length_four_census() {
    let res = census(4, 4).unwrap();
    println!(
        "n=4: total {} by_type {:?} k {:?} profiles {:?}",
        res.total, res.by_type, res.k_histogram, res.profile_histogram
    );
    assert!(res.theorem_violations.is_empty(), "{:?}", res.theorem_violations);
    assert_eq!(res.by_type.values().sum::<usize>(), res.total);
    assert_eq!(res.k_histogram.values().sum::<usize>(), res.total);
    for (&k, _) in &res.k_histogram {
        assert!(k <= 2);
    }
    if res.by_type["C"] > 0 {
        assert!(res.k_histogram.keys().all(|k| k % 2 == 0));
    }

    let codes = enumerate_np1cc(4, 1).unwrap();
    let set = mask_set(&codes);
    let sorted = |c: &Code| {
        let mut v = c.masks();
        v.sort_unstable();
        v
    };
    assert!(set.contains(&sorted(&linear_np1cc(2, LinearVariant::A).unwrap())));
    assert!(set.contains(&sorted(&linear_np1cc(2, LinearVariant::B).unwrap())));

    // every glue of two length-3 perfect codes
    let perfect3: Vec<Code> = (0..8u32)
        .map(|e| np1cc::translate(hamming(2).unwrap().code(), &Word::new(3, e).unwrap()).unwrap())
        .collect();
    for c1 in &perfect3 {
        assert!(is_perfect(c1));
        for c2 in &perfect3 {
            assert!(set.contains(&sorted(&glue(c1, c2).unwrap())));
        }
    }
}

#[test]
fn census_is_thread_count_independent() {
    let one = debug_text(&census(4, 1).unwrap());
    for threads in [2, 3, 8] {
        assert_eq!(debug_text(&census(4, threads).unwrap()), one);
    }
}

fn debug_text(res: &np1cc::census::CensusResult) -> String {
    format!("{res:?}")
}
