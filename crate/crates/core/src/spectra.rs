//! Weight and distance distributions, Krawtchouk transforms, character
//! sums and the closed-form enumerators of NP1CCs and their extensions.
//!
//! Every distribution that can carry a 1/M or 1/n factor is kept as an
//! exact `BigRational`; integer vectors are produced only after checking
//! integrality.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::code::{translate, Code};
use crate::error::{Error, Result};
use crate::np1cc::{CodeType, MAX_EXHAUSTIVE_LENGTH};
use crate::word::{check_lengths, Word};

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn frac(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Renders `p/q`, or just `p` when the value is an integer.
pub fn rational_text(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn serialize_rationals<S: Serializer>(v: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(rational_text))
}

/// `A_i = |C ∩ S_i|`.
pub fn weight_distribution(c: &Code) -> Vec<u64> {
    let mut a = vec![0u64; c.length() + 1];
    for w in c.words() {
        a[w.weight()] += 1;
    }
    a
}

fn weight_distribution_of_masks(n: usize, masks: &[u32], shift: u32) -> Vec<u64> {
    let mut a = vec![0u64; n + 1];
    for m in masks {
        a[(m ^ shift).count_ones() as usize] += 1;
    }
    a
}

fn pair_histogram(n: usize, masks: &[u32]) -> Vec<u64> {
    let row = |i: usize| {
        let mut h = vec![0u64; n + 1];
        let a = masks[i];
        for b in &masks[i + 1..] {
            h[(a ^ b).count_ones() as usize] += 1;
        }
        h
    };
    let add = |mut x: Vec<u64>, y: Vec<u64>| {
        x.iter_mut().zip(y).for_each(|(p, q)| *p += q);
        x
    };
    let zero = || vec![0u64; n + 1];
    if masks.len() >= 512 {
        (0..masks.len()).into_par_iter().map(row).reduce(zero, add)
    } else {
        (0..masks.len()).map(row).fold(zero(), add)
    }
}

/// `B_i = |{(c, c′) ∈ C² : d(c, c′) = i}| / M`, from a pairwise histogram.
pub fn distance_distribution(c: &Code) -> Result<Vec<BigRational>> {
    if c.is_empty() {
        return Err(Error::EmptyCode);
    }
    let m = c.size() as i64;
    let mut counts = pair_histogram(c.length(), &c.masks());
    counts.iter_mut().for_each(|x| *x *= 2);
    counts[0] += m as u64;
    Ok(counts.iter().map(|&x| frac(x as i64, m)).collect())
}

/// `B = (1/M) Σ_{e∈C} A(e + C)`, one translate at a time.
pub fn distance_distribution_by_translates(c: &Code) -> Result<Vec<BigRational>> {
    if c.is_empty() {
        return Err(Error::EmptyCode);
    }
    let n = c.length();
    let masks = c.masks();
    let mut total = vec![0u64; n + 1];
    for &e in &masks {
        let a = weight_distribution_of_masks(n, &masks, e);
        total.iter_mut().zip(a).for_each(|(t, x)| *t += x);
    }
    let m = masks.len() as i64;
    Ok(total.iter().map(|&x| frac(x as i64, m)).collect())
}

/// `P_i(w) = Σ_j (−1)^j C(w, j) C(n − w, i − j)`.
pub fn krawtchouk(n: usize, i: usize, w: usize) -> Result<i64> {
    if i > n || w > n {
        return Err(Error::InvalidParameters(format!("krawtchouk needs i, w <= n (n={n}, i={i}, w={w})")));
    }
    let (n, i, w) = (n as i64, i as i64, w as i64);
    Ok((0..=i)
        .map(|j| {
            let t = binom(w, j) * binom(n - w, i - j);
            if j % 2 == 0 { t } else { -t }
        })
        .sum())
}

fn krawtchouk_table(n: usize) -> Vec<Vec<i64>> {
    (0..=n)
        .map(|i| (0..=n).map(|w| krawtchouk(n, i, w).expect("in range")).collect())
        .collect()
}

/// `χ_u(C) = Σ_{v∈C} (−1)^{⟨u,v⟩}`.
pub fn char_sum(c: &Code, u: &Word) -> Result<i64> {
    check_lengths(c.length(), u.len())?;
    Ok(c
        .words()
        .iter()
        .map(|v| if (u.bits() & v.bits()).count_ones() % 2 == 0 { 1 } else { -1 })
        .sum())
}

/// `χ_u(C)` for every `u`, indexed by mask, by a fast Walsh–Hadamard transform.
pub fn char_sums(c: &Code) -> Result<Vec<i64>> {
    let n = c.length();
    if n > MAX_EXHAUSTIVE_LENGTH {
        return Err(Error::TooLongForExhaustive(n));
    }
    let mut f = vec![0i64; 1 << n];
    for w in c.words() {
        f[w.bits() as usize] = 1;
    }
    let mut h = 1;
    while h < f.len() {
        for block in f.chunks_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        h *= 2;
    }
    Ok(f)
}

/// `A′_i = (1/M) Σ_w A_w P_i(w)`.
pub fn transform(dist: &[BigRational], m: &BigRational) -> Result<Vec<BigRational>> {
    if dist.is_empty() || m.is_zero() {
        return Err(Error::InvalidParameters("transform needs a nonempty vector and M != 0".into()));
    }
    let n = dist.len() - 1;
    let p = krawtchouk_table(n);
    Ok((0..=n)
        .map(|i| {
            let s: BigRational = dist.iter().zip(&p[i]).map(|(a, &k)| a * rat(k)).sum();
            s / m
        })
        .collect())
}

/// `A_i = (M / 2ⁿ) Σ_w A′_w P_i(w)`; the inverse of [`transform`].
pub fn inverse_transform(dist: &[BigRational], m: &BigRational) -> Result<Vec<BigRational>> {
    if dist.is_empty() {
        return Err(Error::InvalidParameters("inverse transform needs a nonempty vector".into()));
    }
    let n = dist.len() - 1;
    let scale = m / BigRational::from_integer(BigInt::one() << n);
    let p = krawtchouk_table(n);
    Ok((0..=n)
        .map(|i| {
            let s: BigRational = dist.iter().zip(&p[i]).map(|(a, &k)| a * rat(k)).sum();
            s * &scale
        })
        .collect())
}

fn to_rationals(v: &[u64]) -> Vec<BigRational> {
    v.iter().map(|&x| rat(x as i64)).collect()
}

/// `B′_i = (1/M²) Σ_{u∈S_i} χ_u(C)²`.
pub fn dual_distance_distribution(c: &Code) -> Result<Vec<BigRational>> {
    if c.is_empty() {
        return Err(Error::EmptyCode);
    }
    let sums = char_sums(c)?;
    let mut acc = vec![0i64; c.length() + 1];
    for (u, s) in sums.iter().enumerate() {
        acc[(u as u32).count_ones() as usize] += s * s;
    }
    let m2 = (c.size() * c.size()) as i64;
    Ok(acc.iter().map(|&x| frac(x, m2)).collect())
}

/// The same vector through the MacWilliams transform of `B`.
pub fn dual_distance_distribution_macwilliams(c: &Code) -> Result<Vec<BigRational>> {
    transform(&distance_distribution(c)?, &rat(c.size() as i64))
}

/// Number of nonzero `B′_i` with `i > 0`.
pub fn external_distance(c: &Code) -> Result<usize> {
    let bp = dual_distance_distribution(c)?;
    Ok(bp.iter().skip(1).filter(|x| !x.is_zero()).count())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Spectrum {
    pub n: usize,
    pub m: usize,
    pub a: Vec<u64>,
    #[serde(serialize_with = "serialize_rationals")]
    pub b: Vec<BigRational>,
    #[serde(serialize_with = "serialize_rationals")]
    pub a_prime: Vec<BigRational>,
    #[serde(serialize_with = "serialize_rationals")]
    pub b_prime: Vec<BigRational>,
    pub external_distance: usize,
}

pub fn spectrum(c: &Code) -> Result<Spectrum> {
    let m = rat(c.size() as i64);
    let a = weight_distribution(c);
    let b = distance_distribution(c)?;
    let a_prime = transform(&to_rationals(&a), &m)?;
    let b_prime = dual_distance_distribution(c)?;
    let external_distance = b_prime.iter().skip(1).filter(|x| !x.is_zero()).count();
    Ok(Spectrum { n: c.length(), m: c.size(), a, b, a_prime, b_prime, external_distance })
}

/// Polynomial in `y` with rational coefficients, constant term first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumeratorPoly {
    coeffs: Vec<BigRational>,
}

impl EnumeratorPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigRational::zero());
        }
        Self { coeffs }
    }

    pub fn from_integers(v: &[i64]) -> Self {
        Self::new(v.iter().map(|&x| rat(x)).collect())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `(a + b·y)^k`.
    pub fn binomial(a: i64, b: i64, k: usize) -> Self {
        let base = Self::from_integers(&[a, b]);
        (0..k).fold(Self::from_integers(&[1]), |acc, _| acc.mul(&base))
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn eval(&self, y: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * y + c)
    }

    /// Coefficients `0..=len-1` as nonnegative integers.
    pub fn to_counts(&self, len: usize) -> Result<Vec<u64>> {
        if self.degree() >= len && !self.coeffs[len..].iter().all(Zero::is_zero) {
            return Err(Error::InvalidParameters(format!("degree exceeds {}", len - 1)));
        }
        (0..len).map(|i| integral_count(&self.coeff(i), i)).collect()
    }
}

impl fmt::Display for EnumeratorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => rational_text(c),
                1 => format!("{}y", rational_text(c)),
                _ => format!("{}y^{i}", rational_text(c)),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

fn integral_count(x: &BigRational, index: usize) -> Result<u64> {
    if !x.is_integer() {
        return Err(Error::NonInteger(index));
    }
    if x.is_negative() {
        return Err(Error::InvalidParameters(format!("negative coefficient {x} at index {index}")));
    }
    x.to_integer().to_u64().ok_or(Error::NonInteger(index))
}

/// The four `(A₀, A₁)` cases a translate `e + C` of a zeroed NP1CC can take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WeightCase {
    /// e ∈ C with a codeword at distance 1.
    CodewordWithNeighbour,
    /// e ∈ C with no codeword at distance 1.
    IsolatedCodeword,
    /// e ∉ C covered by two codewords (a midword).
    Midword,
    /// e ∉ C covered once.
    CoveredOnce,
}

impl WeightCase {
    pub const ALL: [WeightCase; 4] = [
        WeightCase::CodewordWithNeighbour,
        WeightCase::IsolatedCodeword,
        WeightCase::Midword,
        WeightCase::CoveredOnce,
    ];

    pub fn a0_a1(&self) -> (i64, i64) {
        match self {
            WeightCase::CodewordWithNeighbour => (1, 1),
            WeightCase::IsolatedCodeword => (1, 0),
            WeightCase::Midword => (0, 2),
            WeightCase::CoveredOnce => (0, 1),
        }
    }

    pub fn from_a0_a1(a0: i64, a1: i64) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.a0_a1() == (a0, a1))
            .ok_or(Error::InvalidCase { a0, a1 })
    }

    /// Code types in which the case can occur.
    pub fn types(&self) -> &'static [CodeType] {
        match self {
            WeightCase::CodewordWithNeighbour => &[CodeType::A, CodeType::C],
            WeightCase::IsolatedCodeword | WeightCase::Midword => &[CodeType::B, CodeType::C],
            WeightCase::CoveredOnce => &[CodeType::A, CodeType::B, CodeType::C],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub case: WeightCase,
    pub a0: i64,
    pub a1: i64,
    #[serde(serialize_with = "serialize_rational")]
    pub aprime_half: BigRational,
    #[serde(serialize_with = "serialize_rational")]
    pub aprime_half_plus1: BigRational,
    pub types: Vec<CodeType>,
}

fn serialize_rational<S: Serializer>(v: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rational_text(v))
}

/// `(A′_{n/2}, A′_{n/2+1}) = (nA₀ − (n/2)(1 − A₁) − 1, (n/2)(1 − A₁))`.
pub fn solve_aprime(a0: i64, a1: i64, n: usize) -> Result<(BigRational, BigRational)> {
    WeightCase::from_a0_a1(a0, a1)?;
    check_even_length(n)?;
    let n = n as i64;
    let half = frac(n, 2) * rat(1 - a1);
    Ok((rat(n * a0) - &half - rat(1), half))
}

pub fn table1(n: usize) -> Result<Vec<Table1Row>> {
    WeightCase::ALL
        .into_iter()
        .map(|case| {
            let (a0, a1) = case.a0_a1();
            let (aprime_half, aprime_half_plus1) = solve_aprime(a0, a1, n)?;
            Ok(Table1Row { case, a0, a1, aprime_half, aprime_half_plus1, types: case.types().to_vec() })
        })
        .collect()
}

fn check_even_length(n: usize) -> Result<()> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::InvalidParameters(format!("length {n} must be even and at least 2")));
    }
    Ok(())
}

fn check_power_of_two(n: usize) -> Result<()> {
    if n < 2 || !n.is_power_of_two() || n > 32 {
        return Err(Error::InvalidParameters(format!("length {n} is not a power of two in 2..=32")));
    }
    Ok(())
}

/// `Δ_i = (−1)^⌈i/2⌉ C(n/2 − 1, ⌊i/2⌋)`, the coefficients of `(1 − y)(1 − y²)^{n/2−1}`.
pub fn delta(n: usize) -> Result<Vec<i64>> {
    check_even_length(n)?;
    let h = (n / 2) as i64 - 1;
    Ok((0..=n as i64)
        .map(|i| {
            let b = binom(h, i / 2);
            if ((i + 1) / 2) % 2 == 0 { b } else { -b }
        })
        .collect())
}

/// `A_i = C(n,i)/n + (A₀ − 1/n)Δ_i + (A₀ + A₁ − 1 − 1/n)Δ_{i−1}`.
pub fn closed_form_weight_distribution(n: usize, a0: i64, a1: i64) -> Result<Vec<u64>> {
    WeightCase::from_a0_a1(a0, a1)?;
    check_power_of_two(n)?;
    let d = delta(n)?;
    let inv_n = frac(1, n as i64);
    let c0 = rat(a0) - &inv_n;
    let c1 = rat(a0 + a1 - 1) - &inv_n;
    (0..=n)
        .map(|i| {
            let mut v = rat(binom(n as i64, i as i64)) * &inv_n + &c0 * rat(d[i]);
            if i > 0 {
                v += &c1 * rat(d[i - 1]);
            }
            integral_count(&v, i)
        })
        .collect()
}

/// Weight distribution shared by every zeroed extended NP1CC of length n + 1:
/// `(1/(2n))((1 + y)^{n+1} + (1 − y)^{n+1}) + (1 − 1/n)(1 − y²)^{n/2}`.
pub fn enp1cc_weight_distribution(n: usize) -> Result<Vec<u64>> {
    check_power_of_two(n)?;
    let ni = n as i64;
    let first = EnumeratorPoly::binomial(1, 1, n + 1)
        .add(&EnumeratorPoly::binomial(1, -1, n + 1))
        .scale(&frac(1, 2 * ni));
    let second = EnumeratorPoly::binomial(1, 1, n / 2)
        .mul(&EnumeratorPoly::binomial(1, -1, n / 2))
        .scale(&frac(ni - 1, ni));
    first.add(&second).to_counts(n + 2)
}

/// `(A₀, A₁)` of `e + C`.
pub fn translate_case(c: &Code, e: &Word) -> Result<WeightCase> {
    check_lengths(c.length(), e.len())?;
    let mut a0 = 0;
    let mut a1 = 0;
    for w in c.words() {
        match (w.bits() ^ e.bits()).count_ones() {
            0 => a0 += 1,
            1 => a1 += 1,
            _ => {}
        }
    }
    WeightCase::from_a0_a1(a0, a1)
}

/// Weight distribution of `e + C`.
pub fn translate_weight_distribution(c: &Code, e: &Word) -> Result<Vec<u64>> {
    Ok(weight_distribution(&translate(c, e)?))
}

/// True iff every translate by a codeword has the weight distribution of `c`.
pub fn is_distance_invariant(c: &Code) -> Result<bool> {
    if !c.is_zeroed() {
        return Err(Error::NotZeroed);
    }
    let n = c.length();
    let masks = c.masks();
    let reference = weight_distribution_of_masks(n, &masks, 0);
    Ok(masks
        .par_iter()
        .all(|&e| weight_distribution_of_masks(n, &masks, e) == reference))
}

/// Distance distribution of a Type C code: `B₁·A_A + (1 − B₁)·A_B`, where
/// `A_A`, `A_B` are the Type A and Type B weight distributions and `B₁`
/// is the fraction of codewords lying in a Type I pair.
pub fn mixed_distance_distribution(n: usize, b1: &BigRational) -> Result<Vec<BigRational>> {
    let a = closed_form_weight_distribution(n, 1, 1)?;
    let b = closed_form_weight_distribution(n, 1, 0)?;
    let rest = BigRational::one() - b1;
    Ok(a.iter()
        .zip(&b)
        .map(|(&x, &y)| b1 * rat(x as i64) + &rest * rat(y as i64))
        .collect())
}
