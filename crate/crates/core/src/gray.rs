//! The Gray map from Z4^n to binary 2n-tuples and the binary side of the
//! picture.
//!
//! Entrywise, `α`, `β` and `γ` send `0, 1, 2, 3` to
//!
//! ```text
//! i  α  β  γ
//! 0  0  0  0
//! 1  1  0  1
//! 2  0  1  1
//! 3  1  1  0
//! ```
//!
//! and the Gray map is `φ(a) = (β(a), γ(a))`. It carries Lee distance to
//! Hamming distance, and it is additive up to a carry term:
//! `φ(a + b) = φ(a) ⊕ φ(b) ⊕ (α(a)∗α(b), α(a)∗α(b))`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::code::{QuaternaryCode, Z4Vector};
use crate::error::{Error, Result};

const ALPHA: [u8; 4] = [0, 1, 0, 1];
const BETA: [u8; 4] = [0, 0, 1, 1];
const GAMMA: [u8; 4] = [0, 1, 1, 0];

/// Fixed-length bit vector, 64 bits per word.
///
/// Ordered lexicographically by bit string (bit 0 first), then by length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryVector {
    len: usize,
    words: Vec<u64>,
}

impl Ord for BinaryVector {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        for (a, b) in self.words.iter().zip(&other.words) {
            let diff = a ^ b;
            if diff != 0 {
                let bit = 1u64 << diff.trailing_zeros();
                return (a & bit).cmp(&(b & bit));
            }
        }
        self.len.cmp(&other.len)
    }
}

impl PartialOrd for BinaryVector {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl BinaryVector {
    pub fn zeros(len: usize) -> Self {
        BinaryVector {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = BinaryVector::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b & 1 == 1 {
                v.set(i, true);
            }
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, bit: bool) {
        assert!(i < self.len, "bit index {i} out of range");
        let mask = 1u64 << (i % 64);
        if bit {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(|i| self.get(i))
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor(&self, other: &BinaryVector) -> BinaryVector {
        debug_assert_eq!(self.len, other.len);
        BinaryVector {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a ^ b)
                .collect(),
        }
    }

    /// Componentwise product.
    pub fn and(&self, other: &BinaryVector) -> BinaryVector {
        debug_assert_eq!(self.len, other.len);
        BinaryVector {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn distance(&self, other: &BinaryVector) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    /// `(self, other)` as one vector.
    pub fn concat(&self, other: &BinaryVector) -> BinaryVector {
        let mut out = BinaryVector::zeros(self.len + other.len);
        for (i, b) in self.bits().chain(other.bits()).enumerate() {
            if b {
                out.set(i, true);
            }
        }
        out
    }

    /// Interchanges the left and right halves; the length must be even.
    pub fn swap_halves(&self) -> BinaryVector {
        let half = self.len / 2;
        let mut out = BinaryVector::zeros(self.len);
        for i in (0..self.len).filter(|&i| self.get(i)) {
            out.set((i + half) % self.len, true);
        }
        out
    }

    pub fn to_bit_string(&self) -> String {
        self.bits().map(|b| if b { '1' } else { '0' }).collect()
    }
}

impl fmt::Display for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}

impl FromStr for BinaryVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .bytes()
            .map(|b| match b {
                b'0' | b'1' => Ok(b - b'0'),
                _ => Err(Error::Parse(format!(
                    "invalid bit {:?} in {s:?}",
                    char::from(b)
                ))),
            })
            .collect::<Result<Vec<u8>>>()
            .map(|bits| BinaryVector::from_bits(&bits))
    }
}

/// Binary linear code held as a reduced row-echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearBinaryCode {
    len: usize,
    /// `(pivot column, row)`; each pivot column is zero in every other row.
    basis: Vec<(usize, BinaryVector)>,
}

impl LinearBinaryCode {
    /// Span of `generators` (dependent or zero rows are fine).
    pub fn span(len: usize, generators: impl IntoIterator<Item = BinaryVector>) -> Result<Self> {
        let mut basis: Vec<(usize, BinaryVector)> = Vec::new();
        for g in generators {
            if g.len() != len {
                return Err(Error::LengthMismatch {
                    expected: len,
                    actual: g.len(),
                });
            }
            let mut r = g;
            for (p, b) in &basis {
                if r.get(*p) {
                    r = r.xor(b);
                }
            }
            let Some(p) = (0..len).find(|&i| r.get(i)) else {
                continue;
            };
            for (_, b) in basis.iter_mut() {
                if b.get(p) {
                    *b = b.xor(&r);
                }
            }
            basis.push((p, r));
        }
        basis.sort_by_key(|(p, _)| *p);
        Ok(LinearBinaryCode { len, basis })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> impl Iterator<Item = &BinaryVector> {
        self.basis.iter().map(|(_, b)| b)
    }

    pub fn contains(&self, v: &BinaryVector) -> Result<bool> {
        if v.len() != self.len {
            return Err(Error::LengthMismatch {
                expected: self.len,
                actual: v.len(),
            });
        }
        let mut r = v.clone();
        for (p, b) in &self.basis {
            if r.get(*p) {
                r = r.xor(b);
            }
        }
        Ok(r.is_zero())
    }

    /// The orthogonal complement.
    pub fn dual(&self) -> LinearBinaryCode {
        let mut is_pivot = vec![false; self.len];
        for (p, _) in &self.basis {
            is_pivot[*p] = true;
        }
        let rows = (0..self.len).filter(|&f| !is_pivot[f]).map(|f| {
            let mut x = BinaryVector::zeros(self.len);
            x.set(f, true);
            for (p, b) in &self.basis {
                if b.get(f) {
                    x.set(*p, true);
                }
            }
            x
        });
        LinearBinaryCode::span(self.len, rows.collect::<Vec<_>>()).expect("rows have length len")
    }

    /// Every codeword, when `2^k <= cap`.
    pub fn codewords(&self, cap: u64) -> Result<Vec<BinaryVector>> {
        let k = self.dimension();
        match 1u64.checked_shl(k as u32) {
            Some(size) if size <= cap => {}
            _ => {
                return Err(Error::TooLarge {
                    size: format!("2^{k}"),
                    cap,
                })
            }
        }
        let mut out = vec![BinaryVector::zeros(self.len)];
        for (_, b) in &self.basis {
            let extra: Vec<_> = out.iter().map(|w| w.xor(b)).collect();
            out.extend(extra);
        }
        Ok(out)
    }

    /// Smallest nonzero weight `<= limit`, by syndrome search over vectors
    /// of increasing weight. `None` if there is none (or the code is zero).
    pub fn min_weight_search(&self, limit: usize) -> Option<usize> {
        if self.dimension() == 0 {
            return None;
        }
        let checks: Vec<BinaryVector> = self.dual().basis().cloned().collect();
        let words = checks.len().div_ceil(64);
        let columns: Vec<Vec<u64>> = (0..self.len)
            .map(|j| {
                let mut col = vec![0u64; words];
                for (r, c) in checks.iter().enumerate() {
                    if c.get(j) {
                        col[r / 64] |= 1 << (r % 64);
                    }
                }
                col
            })
            .collect();
        let best = AtomicUsize::new(usize::MAX);
        (0..self.len).into_par_iter().for_each(|first| {
            let mut stack = vec![0u64; words * limit.max(1)];
            stack[..words].copy_from_slice(&columns[first]);
            if stack[..words].iter().all(|&w| w == 0) {
                best.fetch_min(1, Ordering::Relaxed);
                return;
            }
            descend_binary(&columns, first + 1, 1, limit, words, &mut stack, &best);
        });
        match best.into_inner() {
            usize::MAX => None,
            w => Some(w),
        }
    }
}

fn descend_binary(
    columns: &[Vec<u64>],
    start: usize,
    weight: usize,
    limit: usize,
    words: usize,
    stack: &mut [u64],
    best: &AtomicUsize,
) {
    let next = weight + 1;
    if next > limit || next >= best.load(Ordering::Relaxed) {
        return;
    }
    for (pos, col) in columns.iter().enumerate().skip(start) {
        let (head, tail) = stack.split_at_mut(weight * words);
        let cur = &head[(weight - 1) * words..];
        let out = &mut tail[..words];
        for ((o, &c), &x) in out.iter_mut().zip(cur).zip(col) {
            *o = c ^ x;
        }
        if out.iter().all(|&w| w == 0) {
            best.fetch_min(next, Ordering::Relaxed);
            return;
        }
        descend_binary(columns, pos + 1, next, limit, words, stack, best);
        if next >= best.load(Ordering::Relaxed) {
            return;
        }
    }
}

/// A binary code: an explicit (possibly nonlinear) word set, a linear code,
/// or an implicit Gray image too large to list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BinaryCode {
    /// Sorted, duplicate-free words of a common length.
    Explicit {
        len: usize,
        words: Vec<BinaryVector>,
    },
    Linear(LinearBinaryCode),
    /// `φ(D)` for a quaternary code `D`, never materialised.
    GrayImage(QuaternaryCode),
}

/// Result of a bounded minimum distance computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceVerdict {
    Exact(usize),
    /// Every nonzero distance exceeds the search limit.
    AboveLimit(usize),
    /// Fewer than two codewords.
    Undefined,
}

impl fmt::Display for DistanceVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DistanceVerdict::Exact(d) => write!(f, "{d}"),
            DistanceVerdict::AboveLimit(l) => write!(f, "distance > {l}"),
            DistanceVerdict::Undefined => f.write_str("undefined"),
        }
    }
}

impl BinaryCode {
    /// Explicit code from arbitrary words; duplicates are dropped.
    pub fn explicit(len: usize, mut words: Vec<BinaryVector>) -> Result<Self> {
        if let Some(bad) = words.iter().find(|w| w.len() != len) {
            return Err(Error::LengthMismatch {
                expected: len,
                actual: bad.len(),
            });
        }
        words.sort();
        words.dedup();
        Ok(BinaryCode::Explicit { len, words })
    }

    pub fn linear(len: usize, generators: impl IntoIterator<Item = BinaryVector>) -> Result<Self> {
        LinearBinaryCode::span(len, generators).map(BinaryCode::Linear)
    }

    pub fn len(&self) -> usize {
        match self {
            BinaryCode::Explicit { len, .. } => *len,
            BinaryCode::Linear(c) => c.len(),
            BinaryCode::GrayImage(d) => 2 * d.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn size(&self) -> BigUint {
        match self {
            BinaryCode::Explicit { words, .. } => BigUint::from(words.len()),
            BinaryCode::Linear(c) => BigUint::from(1u8) << c.dimension(),
            BinaryCode::GrayImage(d) => d.size(),
        }
    }

    pub fn as_linear(&self) -> Option<&LinearBinaryCode> {
        match self {
            BinaryCode::Linear(c) => Some(c),
            _ => None,
        }
    }

    /// The word list, materialising linear codes up to `cap` words.
    pub fn words(&self, cap: u64) -> Result<Vec<BinaryVector>> {
        match self {
            BinaryCode::Explicit { words, .. } => Ok(words.clone()),
            BinaryCode::Linear(c) => {
                let mut w = c.codewords(cap)?;
                w.sort();
                Ok(w)
            }
            BinaryCode::GrayImage(d) => match gray_image(d, cap)? {
                BinaryCode::Explicit { words, .. } => Ok(words),
                _ => unreachable!("gray_image is explicit"),
            },
        }
    }

    pub fn contains(&self, v: &BinaryVector) -> Result<bool> {
        match self {
            BinaryCode::Explicit { words, .. } => Ok(words.binary_search(v).is_ok()),
            BinaryCode::Linear(c) => c.contains(v),
            BinaryCode::GrayImage(d) => {
                if v.len() != 2 * d.len() {
                    return Err(Error::LengthMismatch {
                        expected: 2 * d.len(),
                        actual: v.len(),
                    });
                }
                d.contains(&gray_preimage(v))
            }
        }
    }

    /// Set equality; explicit codes are compared word for word, up to `cap`.
    pub fn equal_as_sets(&self, other: &BinaryCode, cap: u64) -> Result<bool> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                actual: other.len(),
            });
        }
        match (self, other) {
            (BinaryCode::Linear(a), BinaryCode::Linear(b)) => Ok(a.dimension() == b.dimension()
                && a.basis()
                    .try_fold(true, |ok, v| Ok::<_, Error>(ok && b.contains(v)?))?),
            (BinaryCode::GrayImage(a), BinaryCode::GrayImage(b)) => a.equal_as_sets(b),
            _ => {
                if self.size() != other.size() {
                    return Ok(false);
                }
                Ok(self.words(cap)? == other.words(cap)?)
            }
        }
    }
}

/// `(α(a), β(a), γ(a))`.
pub fn component_maps(a: &Z4Vector) -> (BinaryVector, BinaryVector, BinaryVector) {
    let map = |table: &[u8; 4]| {
        BinaryVector::from_bits(
            &a.entries()
                .iter()
                .map(|&e| table[e as usize])
                .collect::<Vec<_>>(),
        )
    };
    (map(&ALPHA), map(&BETA), map(&GAMMA))
}

/// `φ(a) = (β(a), γ(a))`, of length `2n`.
pub fn gray_map(a: &Z4Vector) -> BinaryVector {
    let n = a.len();
    let mut out = BinaryVector::zeros(2 * n);
    for (i, &e) in a.entries().iter().enumerate() {
        if BETA[e as usize] == 1 {
            out.set(i, true);
        }
        if GAMMA[e as usize] == 1 {
            out.set(n + i, true);
        }
    }
    out
}

/// Inverse of [`gray_map`] on vectors of even length.
pub fn gray_preimage(v: &BinaryVector) -> Z4Vector {
    let n = v.len() / 2;
    Z4Vector::new(
        (0..n)
            .map(|i| match (v.get(i), v.get(n + i)) {
                (false, false) => 0,
                (false, true) => 1,
                (true, true) => 2,
                (true, false) => 3,
            })
            .collect(),
    )
}

/// `φ(D)` as an explicit word set.
pub fn gray_image(code: &QuaternaryCode, cap: u64) -> Result<BinaryCode> {
    let words = code.codewords(cap)?.map(|c| gray_map(&c)).collect();
    BinaryCode::explicit(2 * code.len(), words)
}

/// `2 α(a) ∗ α(b)` as a Z4 vector.
fn doubled_alpha_product(a: &Z4Vector, b: &Z4Vector) -> Z4Vector {
    Z4Vector::new(
        a.entries()
            .iter()
            .zip(b.entries())
            .map(|(&x, &y)| 2 * (ALPHA[x as usize] & ALPHA[y as usize]))
            .collect(),
    )
}

/// Whether `φ(D)` is linear: `2 α(a) ∗ α(b) ∈ D` for all `a, b ∈ D`.
///
/// Checked on pairs of reduced generators only; `(a, b) ↦ 2 α(a) ∗ α(b)`
/// is biadditive because doubling kills the carry.
pub fn image_is_linear(code: &QuaternaryCode) -> bool {
    let gens: Vec<&Z4Vector> = code.reduced_rows().collect();
    gens.iter().enumerate().all(|(i, a)| {
        gens[i..].iter().all(|b| {
            code.contains(&doubled_alpha_product(a, b))
                .expect("same length")
        })
    })
}

/// The same criterion checked over every pair of codewords.
pub fn image_is_linear_exhaustive(code: &QuaternaryCode, cap: u64) -> Result<bool> {
    let words: Vec<Z4Vector> = code.codewords(cap)?.collect();
    for (i, a) in words.iter().enumerate() {
        for b in &words[i..] {
            if !code.contains(&doubled_alpha_product(a, b))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `(u + s(u)) ∗ (v + s(v)) ∈ C` for all basis pairs, in the given
/// coordinate order. No coordinate permutation is searched.
pub fn swap_condition_holds(code: &LinearBinaryCode) -> Result<bool> {
    if code.len() % 2 == 1 {
        return Err(Error::OddLength(code.len()));
    }
    let folded: Vec<BinaryVector> = code.basis().map(|u| u.xor(&u.swap_halves())).collect();
    for (i, a) in folded.iter().enumerate() {
        for b in &folded[i..] {
            if !code.contains(&a.and(b))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The swap condition checked over every pair of codewords.
pub fn swap_condition_exhaustive(code: &LinearBinaryCode, cap: u64) -> Result<bool> {
    if code.len() % 2 == 1 {
        return Err(Error::OddLength(code.len()));
    }
    let folded: Vec<BinaryVector> = code
        .codewords(cap)?
        .iter()
        .map(|u| u.xor(&u.swap_halves()))
        .collect();
    for (i, a) in folded.iter().enumerate() {
        for b in &folded[i..] {
            if !code.contains(&a.and(b))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Reed-Muller code `RM(r, m)`: evaluations of all monomials of degree
/// `<= r` at the points of `{0,1}^m`.
///
/// Coordinate `t` is the point whose variable `x_i` is bit `i` of `t`, so
/// the top variable `x_(m-1)` splits the left and right halves and the swap
/// map complements it.
pub fn reed_muller(r: usize, m: usize) -> Result<LinearBinaryCode> {
    if r > m || m > 24 {
        return Err(Error::OrderOutOfRange { r, m });
    }
    let len = 1usize << m;
    let monomials = (0..len).filter(|mask: &usize| mask.count_ones() as usize <= r);
    let rows: Vec<BinaryVector> = monomials
        .map(|mask| {
            let mut v = BinaryVector::zeros(len);
            for t in (0..len).filter(|t| t & mask == mask) {
                v.set(t, true);
            }
            v
        })
        .collect();
    LinearBinaryCode::span(len, rows)
}

/// Binary linear span of `φ(D)`, without enumerating `D`.
///
/// Generated by `φ(g_i)` and `(α(g_i)∗α(g_j), α(g_i)∗α(g_j))` for `i <= j`.
pub fn gray_image_linear_span(code: &QuaternaryCode) -> LinearBinaryCode {
    let gens: Vec<&Z4Vector> = code.reduced_rows().collect();
    let alphas: Vec<BinaryVector> = gens.iter().map(|g| component_maps(g).0).collect();
    let mut rows: Vec<BinaryVector> = gens.iter().map(|g| gray_map(g)).collect();
    for (i, a) in alphas.iter().enumerate() {
        for b in &alphas[i..] {
            let prod = a.and(b);
            rows.push(prod.concat(&prod));
        }
    }
    LinearBinaryCode::span(2 * code.len(), rows).expect("rows have length 2n")
}

/// Minimum distance: exact pairwise for explicit codes (at most `cap`
/// words), weight search up to `limit` for linear codes and Gray images.
pub fn min_distance_binary(code: &BinaryCode, cap: u64, limit: usize) -> Result<DistanceVerdict> {
    match code {
        BinaryCode::Explicit { words, .. } => {
            if words.len() as u64 > cap {
                return Err(Error::TooLarge {
                    size: words.len().to_string(),
                    cap,
                });
            }
            let d = (0..words.len())
                .into_par_iter()
                .filter_map(|i| words[i + 1..].iter().map(|w| words[i].distance(w)).min())
                .min();
            Ok(d.map_or(DistanceVerdict::Undefined, DistanceVerdict::Exact))
        }
        BinaryCode::Linear(c) => {
            if c.dimension() == 0 {
                return Ok(DistanceVerdict::Undefined);
            }
            Ok(c.min_weight_search(limit)
                .map_or(DistanceVerdict::AboveLimit(limit), DistanceVerdict::Exact))
        }
        BinaryCode::GrayImage(d) => {
            if d.log2_size() == 0 {
                return Ok(DistanceVerdict::Undefined);
            }
            Ok(d.min_lee_weight_search(limit)
                .map_or(DistanceVerdict::AboveLimit(limit), DistanceVerdict::Exact))
        }
    }
}

/// True iff every codeword sees the same multiset of distances to the code
/// as the first codeword does.
pub fn is_distance_invariant(code: &BinaryCode, cap: u64) -> Result<bool> {
    let words = match code {
        BinaryCode::Explicit { words, .. } if words.len() as u64 <= cap => words,
        BinaryCode::Explicit { words, .. } => {
            return Err(Error::TooLarge {
                size: words.len().to_string(),
                cap,
            })
        }
        // Translation invariance.
        BinaryCode::Linear(_) | BinaryCode::GrayImage(_) => return Ok(true),
    };
    let Some(reference) = words.first() else {
        return Ok(true);
    };
    let profile = |c: &BinaryVector| {
        let mut h: HashMap<usize, usize> = HashMap::new();
        for w in words {
            *h.entry(c.distance(w)).or_default() += 1;
        }
        h
    };
    let expected = profile(reference);
    Ok(words.par_iter().all(|c| profile(c) == expected))
}
