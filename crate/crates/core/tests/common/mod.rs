#![allow(dead_code)]

use np1cc::balanced::{build_balanced, zero_translate};
use np1cc::construct::{build, glue, vasiliev_pair, Recipe};
use np1cc::extend::build_abc_fixture;
use np1cc::np1cc::CodeType;
use np1cc::perfect::{hamming, Lambda};
use np1cc::{Code, Word};

pub struct Fixture {
    pub name: String,
    pub code: Code,
    pub expected: CodeType,
}

fn predicted(recipe: Recipe) -> CodeType {
    match recipe {
        Recipe::GlueA | Recipe::UnionA | Recipe::LinearA | Recipe::Balanced => CodeType::A,
        Recipe::GlueB | Recipe::LinearB => CodeType::B,
        Recipe::GlueC => CodeType::C,
    }
}

/// Every recipe at every supported r, balanced codes zero-translated.
pub fn recipe_fixtures() -> Vec<Fixture> {
    let mut out = Vec::new();
    for recipe in Recipe::ALL {
        for r in recipe.supported_r() {
            let mut code = build(recipe, r, None).unwrap();
            if recipe == Recipe::Balanced {
                code = zero_translate(&code).unwrap();
            }
            out.push(Fixture { name: format!("{recipe} r={r}"), code, expected: predicted(recipe) });
        }
    }
    out
}

/// Length-16 glue of two Vasil'ev codes whose λ tables disagree on the
/// first `t` nonzero base codewords.
pub fn type_c16(t: usize) -> Code {
    let base = hamming(3).unwrap();
    let l = Lambda::flipping(base.code(), &base.code().words()[1..=t]).unwrap();
    let (c1, c2) = vasiliev_pair(4, Some(&l)).unwrap();
    glue(c1.code(), c2.code()).unwrap()
}

pub fn all_fixtures() -> Vec<Fixture> {
    let mut out = recipe_fixtures();
    for t in [2, 4, 8] {
        out.push(Fixture { name: format!("glue-c t={t}"), code: type_c16(t), expected: CodeType::C });
    }
    out.push(Fixture { name: "abc".into(), code: build_abc_fixture().unwrap(), expected: CodeType::A });
    out.push(Fixture {
        name: "balanced r=3 raw".into(),
        code: build_balanced(3).unwrap(),
        expected: CodeType::A,
    });
    out
}

/// `c` with coordinate `coord` of codeword `idx` flipped, if that gives a
/// code of the same size.
pub fn mutate(c: &Code, idx: usize, coord: usize) -> Option<Code> {
    let mut words = c.words().to_vec();
    words[idx] = words[idx].add(&Word::unit(c.length(), coord).unwrap()).unwrap();
    Code::new(c.length(), words).ok()
}

pub fn brute_weight_distribution(c: &Code, e: u32) -> Vec<u64> {
    let mut a = vec![0u64; c.length() + 1];
    for w in c.words() {
        a[(w.bits() ^ e).count_ones() as usize] += 1;
    }
    a
}

pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
