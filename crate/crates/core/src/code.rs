//! Quaternary linear codes: additive subgroups of Z4^n.
//!
//! A [`QuaternaryCode`] keeps the generator rows it was built from and a
//! reduced form with `k1` unit-pivot rows (pivot entry 1, column cleared)
//! and `k2` two-pivot rows (all entries even, pivot entry 2), so that
//! `|D| = 4^k1 * 2^k2`.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::Z4Poly;

/// Default enumeration cap (words).
pub const DEFAULT_CAP: u64 = 1 << 24;

/// Codes up to this size are searched for low Lee weight by enumeration.
const DIRECT_SEARCH_LIMIT: u64 = 1 << 16;

/// Vector over Z4.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Z4Vector(Vec<u8>);

impl Z4Vector {
    /// Builds a vector, reducing entries mod 4.
    pub fn new(entries: Vec<u8>) -> Self {
        Z4Vector(entries.into_iter().map(|e| e & 3).collect())
    }

    pub fn zeros(n: usize) -> Self {
        Z4Vector(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u8] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &Z4Vector) -> Z4Vector {
        Z4Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| (a + b) & 3)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Z4Vector) -> Z4Vector {
        Z4Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| (a + 4 - b) & 3)
                .collect(),
        )
    }

    pub fn scale(&self, c: u8) -> Z4Vector {
        Z4Vector(self.0.iter().map(|&a| (a * (c & 3)) & 3).collect())
    }

    /// Inner product mod 4.
    pub fn dot(&self, other: &Z4Vector) -> u8 {
        self.0
            .iter()
            .zip(&other.0)
            .fold(0u8, |acc, (a, b)| (acc + a * b) & 3)
    }

    /// `(N0, N1, N2)`: entries congruent to 0, ±1 and 2 mod 4.
    pub fn symmetrized_counts(&self) -> (usize, usize, usize) {
        let mut counts = [0usize; 3];
        for &e in &self.0 {
            counts[[0, 1, 2, 1][e as usize]] += 1;
        }
        (counts[0], counts[1], counts[2])
    }

    /// `N1 + 2 N2`.
    pub fn lee_weight(&self) -> usize {
        self.0.iter().map(|&e| [0, 1, 2, 1][e as usize]).sum()
    }

    pub fn coordinate_sum(&self) -> u8 {
        self.0.iter().fold(0u8, |acc, &e| (acc + e) & 3)
    }

    pub fn to_digits(&self) -> String {
        self.0.iter().map(|&c| char::from(b'0' + c)).collect()
    }

    fn add_assign(&mut self, other: &Z4Vector) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a = (*a + b) & 3;
        }
    }

    fn sub_scaled_assign(&mut self, c: u8, other: &Z4Vector) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a = (*a + 12 - c * b) & 3;
        }
    }
}

impl fmt::Display for Z4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_digits())
    }
}

impl FromStr for Z4Vector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .bytes()
            .map(|b| match b {
                b'0'..=b'3' => Ok(b - b'0'),
                _ => Err(Error::Parse(format!(
                    "invalid Z4 digit {:?} in {s:?}",
                    char::from(b)
                ))),
            })
            .collect::<Result<Vec<u8>>>()
            .map(Z4Vector)
    }
}

impl From<Vec<u8>> for Z4Vector {
    fn from(v: Vec<u8>) -> Self {
        Z4Vector::new(v)
    }
}

/// A row of the reduced form together with its pivot column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PivotRow {
    pub pivot: usize,
    pub row: Z4Vector,
}

/// Quaternary linear code of length `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuaternaryCode {
    n: usize,
    rows: Vec<Z4Vector>,
    units: Vec<PivotRow>,
    twos: Vec<PivotRow>,
}

impl QuaternaryCode {
    /// Code spanned by `rows`, each of length `n`.
    pub fn from_rows(n: usize, rows: Vec<Z4Vector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: bad.len(),
            });
        }
        let (units, twos) = row_reduce(n, &rows);
        Ok(QuaternaryCode {
            n,
            rows,
            units,
            twos,
        })
    }

    pub fn zero(n: usize) -> Self {
        QuaternaryCode {
            n,
            rows: Vec::new(),
            units: Vec::new(),
            twos: Vec::new(),
        }
    }

    /// All of Z4^n.
    pub fn full(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                Z4Vector(v)
            })
            .collect();
        QuaternaryCode::from_rows(n, rows).expect("rows have length n")
    }

    /// Cyclic code of length `n` generated by `g`.
    ///
    /// Coordinate `i` holds the coefficient of `X^i`. When `g` has a unit
    /// leading coefficient and divides `X^n - 1` the generators are
    /// `g, Xg, …, X^(n-1-deg g) g`; otherwise all `n` cyclic shifts are used.
    pub fn cyclic(g: &Z4Poly, n: usize) -> Result<Self> {
        let Some(deg) = g.degree() else {
            return Ok(QuaternaryCode::zero(n));
        };
        if deg >= n {
            return Err(Error::GeneratorTooLong { degree: deg, n });
        }
        let divides = g.leading_coeff() % 2 == 1 && Z4Poly::x_pow_minus_one(n).rem(g)?.is_zero();
        let shifts = if divides { n - deg } else { n };
        let rows = (0..shifts)
            .map(|s| {
                let mut v = vec![0u8; n];
                for (i, &c) in g.coeffs().iter().enumerate() {
                    v[(i + s) % n] = (v[(i + s) % n] + c) & 3;
                }
                Z4Vector(v)
            })
            .collect();
        QuaternaryCode::from_rows(n, rows)
    }

    /// Appends an overall parity digit making every coordinate sum `0 mod 4`.
    pub fn extend_parity(&self) -> QuaternaryCode {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut v = r.0.clone();
                v.push((4 - r.coordinate_sum()) & 3);
                Z4Vector(v)
            })
            .collect();
        QuaternaryCode::from_rows(self.n + 1, rows).expect("consistent lengths")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// The generator rows as supplied.
    pub fn rows(&self) -> &[Z4Vector] {
        &self.rows
    }

    pub fn unit_rows(&self) -> &[PivotRow] {
        &self.units
    }

    pub fn two_rows(&self) -> &[PivotRow] {
        &self.twos
    }

    /// Reduced generators, unit rows first.
    pub fn reduced_rows(&self) -> impl Iterator<Item = &Z4Vector> {
        self.units.iter().chain(&self.twos).map(|p| &p.row)
    }

    pub fn k1(&self) -> usize {
        self.units.len()
    }

    pub fn k2(&self) -> usize {
        self.twos.len()
    }

    /// `log2 |D| = 2 k1 + k2`.
    pub fn log2_size(&self) -> usize {
        2 * self.k1() + self.k2()
    }

    pub fn size(&self) -> BigUint {
        BigUint::from(1u8) << self.log2_size()
    }

    /// `|D|` when it fits in a `u64`.
    pub fn size_u64(&self) -> Option<u64> {
        1u64.checked_shl(self.log2_size() as u32)
    }

    /// Membership by reduction against the reduced rows.
    pub fn contains(&self, v: &Z4Vector) -> Result<bool> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                actual: v.len(),
            });
        }
        let mut r = v.clone();
        for u in &self.units {
            let c = r.0[u.pivot];
            if c != 0 {
                r.sub_scaled_assign(c, &u.row);
            }
        }
        for t in &self.twos {
            match r.0[t.pivot] {
                0 => {}
                2 => r.sub_scaled_assign(1, &t.row),
                _ => return Ok(false),
            }
        }
        Ok(r.is_zero())
    }

    /// `{v : v · d = 0 (mod 4) for all d in D}`.
    pub fn dual(&self) -> QuaternaryCode {
        let n = self.n;
        let mut is_pivot = vec![false; n];
        for p in self.units.iter().chain(&self.twos) {
            is_pivot[p.pivot] = true;
        }
        let mut rows = Vec::with_capacity(n - self.k1());
        for f in (0..n).filter(|&f| !is_pivot[f]) {
            let mut x = vec![0u8; n];
            x[f] = 1;
            for t in &self.twos {
                x[t.pivot] = t.row.0[f] / 2;
            }
            for u in &self.units {
                let mut s = u.row.0[f];
                for t in &self.twos {
                    s += (t.row.0[f] / 2) * u.row.0[t.pivot];
                }
                x[u.pivot] = (4 - (s & 3)) & 3;
            }
            rows.push(Z4Vector(x));
        }
        for t in &self.twos {
            let mut y = vec![0u8; n];
            y[t.pivot] = 2;
            for u in &self.units {
                y[u.pivot] = (2 * u.row.0[t.pivot]) & 3;
            }
            rows.push(Z4Vector(y));
        }
        QuaternaryCode::from_rows(n, rows).expect("rows have length n")
    }

    /// Same length, same size, and every generator of `self` lies in `other`.
    pub fn equal_as_sets(&self, other: &QuaternaryCode) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                actual: other.n,
            });
        }
        if self.log2_size() != other.log2_size() {
            return Ok(false);
        }
        for r in self.reduced_rows() {
            if !other.contains(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Iterates every codeword exactly once; fails if `|D| > cap`.
    pub fn codewords(&self, cap: u64) -> Result<Codewords<'_>> {
        match self.size_u64() {
            Some(size) if size <= cap => Ok(Codewords {
                code: self,
                current: Z4Vector::zeros(self.n),
                counters: vec![0; self.k1() + self.k2()],
                remaining: size,
            }),
            _ => Err(Error::TooLarge {
                size: self.size().to_string(),
                cap,
            }),
        }
    }

    /// Smallest nonzero Lee weight `<= w_max`, or `None`.
    ///
    /// Small codes are enumerated; larger ones are searched over all vectors
    /// of Lee weight `<= w_max`, testing membership against the dual.
    pub fn min_lee_weight_search(&self, w_max: usize) -> Option<usize> {
        match self.size_u64() {
            Some(size) if size <= DIRECT_SEARCH_LIMIT => self
                .min_lee_weight_by_enumeration(DIRECT_SEARCH_LIMIT)
                .expect("size checked")
                .filter(|&w| w <= w_max),
            _ => self.min_lee_weight_by_syndrome(w_max),
        }
    }

    /// Minimum nonzero Lee weight over all codewords (`None` for the zero code).
    pub fn min_lee_weight_by_enumeration(&self, cap: u64) -> Result<Option<usize>> {
        Ok(self
            .codewords(cap)?
            .filter(|c| !c.is_zero())
            .map(|c| c.lee_weight())
            .min())
    }

    /// Low-weight search over vectors of Lee weight `<= w_max` with the dual
    /// code as parity checks. Work is split across the current rayon pool
    /// by leading support position; the result does not depend on the split.
    pub fn min_lee_weight_by_syndrome(&self, w_max: usize) -> Option<usize> {
        let checks = SyndromeTable::new(&self.dual());
        let best = AtomicUsize::new(usize::MAX);
        (0..self.n).into_par_iter().for_each(|first| {
            let mut stack = vec![0u64; checks.words * (w_max + 1)];
            for (value, weight) in [(1u8, 1usize), (3, 1), (2, 2)] {
                if weight > w_max.min(best.load(Ordering::Relaxed)) {
                    continue;
                }
                stack[..checks.words].copy_from_slice(checks.column(first, value));
                if checks.is_zero(&stack[..checks.words]) {
                    best.fetch_min(weight, Ordering::Relaxed);
                    continue;
                }
                checks.descend(first + 1, weight, 0, w_max, &mut stack, &best);
            }
        });
        match best.into_inner() {
            usize::MAX => None,
            w => Some(w),
        }
    }
}

/// Parity-check columns packed eight checks per `u64`, one byte lane each,
/// pre-multiplied by every nonzero scalar.
struct SyndromeTable {
    n: usize,
    words: usize,
    // Indexed by (position * 3 + value - 1) * words.
    columns: Vec<u64>,
}

const LANE_MASK: u64 = 0x0303_0303_0303_0303;

impl SyndromeTable {
    fn new(dual: &QuaternaryCode) -> Self {
        let checks: Vec<&Z4Vector> = dual.reduced_rows().collect();
        let n = dual.len();
        let words = checks.len().div_ceil(8);
        let mut columns = vec![0u64; n * 3 * words];
        for pos in 0..n {
            for value in 1..4u8 {
                let base = (pos * 3 + value as usize - 1) * words;
                for (r, check) in checks.iter().enumerate() {
                    let lane = u64::from((check.0[pos] * value) & 3);
                    columns[base + r / 8] |= lane << (8 * (r % 8));
                }
            }
        }
        SyndromeTable { n, words, columns }
    }

    fn column(&self, pos: usize, value: u8) -> &[u64] {
        let base = (pos * 3 + value as usize - 1) * self.words;
        &self.columns[base..base + self.words]
    }

    fn is_zero(&self, syn: &[u64]) -> bool {
        syn.iter().all(|&w| w == 0)
    }

    /// Extends the partial vector whose syndrome sits at `stack[depth]`.
    fn descend(
        &self,
        start: usize,
        weight: usize,
        depth: usize,
        w_max: usize,
        stack: &mut [u64],
        best: &AtomicUsize,
    ) {
        let w = self.words;
        for pos in start..self.n {
            for (value, step) in [(1u8, 1usize), (3, 1), (2, 2)] {
                let next = weight + step;
                if next > w_max || next >= best.load(Ordering::Relaxed) {
                    continue;
                }
                let (head, tail) = stack.split_at_mut((depth + 1) * w);
                let cur = &head[depth * w..];
                let out = &mut tail[..w];
                for ((o, &c), &col) in out.iter_mut().zip(cur).zip(self.column(pos, value)) {
                    *o = (c + col) & LANE_MASK;
                }
                if self.is_zero(out) {
                    best.fetch_min(next, Ordering::Relaxed);
                    continue;
                }
                self.descend(pos + 1, next, depth + 1, w_max, stack, best);
            }
        }
    }
}

/// Odometer over the `4^k1 * 2^k2` combinations of the reduced rows.
pub struct Codewords<'a> {
    code: &'a QuaternaryCode,
    current: Z4Vector,
    counters: Vec<u8>,
    remaining: u64,
}

impl Iterator for Codewords<'_> {
    type Item = Z4Vector;

    fn next(&mut self) -> Option<Z4Vector> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let out = self.current.clone();
        if self.remaining > 0 {
            let k1 = self.code.k1();
            for (i, row) in self.code.reduced_rows().enumerate() {
                let radix = if i < k1 { 4 } else { 2 };
                self.current.add_assign(row);
                self.counters[i] += 1;
                if self.counters[i] < radix {
                    break;
                }
                // `radix` additions of the row wrapped back to zero.
                self.counters[i] = 0;
            }
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (r, Some(r))
    }
}

/// Z4 Gaussian elimination: unit pivots first, then the remaining (even)
/// rows reduced as binary rows scaled by 2.
fn row_reduce(n: usize, rows: &[Z4Vector]) -> (Vec<PivotRow>, Vec<PivotRow>) {
    let mut pending: Vec<Z4Vector> = rows.iter().filter(|r| !r.is_zero()).cloned().collect();
    let mut units: Vec<PivotRow> = Vec::new();
    for col in 0..n {
        let Some(idx) = pending.iter().position(|r| r.0[col] % 2 == 1) else {
            continue;
        };
        let mut pivot = pending.swap_remove(idx);
        if pivot.0[col] == 3 {
            pivot = pivot.scale(3);
        }
        for r in pending
            .iter_mut()
            .chain(units.iter_mut().map(|u| &mut u.row))
        {
            let c = r.0[col];
            if c != 0 {
                r.sub_scaled_assign(c, &pivot);
            }
        }
        pending.retain(|r| !r.is_zero());
        units.push(PivotRow {
            pivot: col,
            row: pivot,
        });
    }

    // Everything left is even: work with the halves over the binary field.
    let mut halves: Vec<Vec<u8>> = pending
        .iter()
        .map(|r| {
            debug_assert!(r.0.iter().all(|&e| e % 2 == 0));
            r.0.iter().map(|&e| e / 2).collect()
        })
        .collect();
    let mut twos: Vec<(usize, Vec<u8>)> = Vec::new();
    for col in 0..n {
        let Some(idx) = halves.iter().position(|r| r[col] == 1) else {
            continue;
        };
        let pivot = halves.swap_remove(idx);
        for r in halves.iter_mut().chain(twos.iter_mut().map(|t| &mut t.1)) {
            if r[col] == 1 {
                for (a, b) in r.iter_mut().zip(&pivot) {
                    *a ^= b;
                }
            }
        }
        twos.push((col, pivot));
    }
    let twos: Vec<PivotRow> = twos
        .into_iter()
        .map(|(pivot, half)| PivotRow {
            pivot,
            row: Z4Vector(half.into_iter().map(|b| 2 * b).collect()),
        })
        .collect();

    // Bring unit-row entries in two-pivot columns down to {0, 1}.
    for u in &mut units {
        for t in &twos {
            if u.row.0[t.pivot] >= 2 {
                u.row.sub_scaled_assign(1, &t.row);
            }
        }
    }
    (units, twos)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn v(s: &str) -> Z4Vector {
        s.parse().unwrap()
    }

    fn code(rows: &[&str]) -> QuaternaryCode {
        let rows: Vec<Z4Vector> = rows.iter().map(|r| v(r)).collect();
        QuaternaryCode::from_rows(rows[0].len(), rows).unwrap()
    }

    fn all_vectors(n: usize) -> impl Iterator<Item = Z4Vector> {
        (0..1usize << (2 * n))
            .map(move |idx| Z4Vector((0..n).map(|i| ((idx >> (2 * i)) & 3) as u8).collect()))
    }

    #[test]
    fn reduce_sizes() {
        let c = code(&["11"]);
        assert_eq!((c.k1(), c.k2()), (1, 0));
        let c = code(&["22"]);
        assert_eq!((c.k1(), c.k2()), (0, 1));
        let c = code(&["1230", "2222", "0213", "1023"]);
        let words: HashSet<_> = c.codewords(1 << 20).unwrap().collect();
        assert_eq!(words.len() as u64, c.size_u64().unwrap());
    }

    #[test]
    fn reduced_form_shape() {
        let c = code(&["1230", "2222", "0213", "3021", "0202"]);
        for u in c.unit_rows() {
            assert_eq!(u.row.0[u.pivot], 1);
            for other in c.unit_rows().iter().filter(|o| o.pivot != u.pivot) {
                assert_eq!(other.row.0[u.pivot], 0);
            }
        }
        for t in c.two_rows() {
            assert_eq!(t.row.0[t.pivot], 2);
            assert!(t.row.0.iter().all(|e| e % 2 == 0));
        }
    }

    #[test]
    fn cyclic_x_minus_one() {
        let c = QuaternaryCode::cyclic(&"31".parse().unwrap(), 3).unwrap();
        assert_eq!(c.size_u64(), Some(16));
        let oracle: Vec<_> = all_vectors(3).filter(|x| x.coordinate_sum() == 0).collect();
        assert_eq!(oracle.len(), 16);
        for x in &oracle {
            assert!(c.contains(x).unwrap());
        }
    }

    #[test]
    fn cyclic_unit_generator_is_everything() {
        let c = QuaternaryCode::cyclic(&Z4Poly::one(), 4).unwrap();
        assert_eq!(c.size_u64(), Some(256));
    }

    #[test]
    fn cyclic_rejects_long_generator() {
        assert_eq!(
            QuaternaryCode::cyclic(&"1111".parse().unwrap(), 3),
            Err(Error::GeneratorTooLong { degree: 3, n: 3 })
        );
    }

    #[test]
    fn cyclic_non_divisor_uses_all_shifts() {
        // 1 + X + X^2 + 2X^3 does not divide X^5 - 1; the ideal is still cyclic.
        let c = QuaternaryCode::cyclic(&"1112".parse().unwrap(), 5).unwrap();
        for r in c.rows() {
            let mut shifted = r.0.clone();
            shifted.rotate_right(1);
            assert!(c.contains(&Z4Vector(shifted)).unwrap());
        }
    }

    #[test]
    fn parity_extension() {
        let c = code(&["123"]).extend_parity();
        assert_eq!(c.rows()[0], v("1232"));
        let z = QuaternaryCode::zero(3).extend_parity();
        assert_eq!((z.len(), z.log2_size()), (4, 0));
    }

    #[test]
    fn dual_small() {
        let c = code(&["11"]);
        let d = c.dual();
        assert!(d.equal_as_sets(&code(&["13"])).unwrap());
        let oracle: Vec<_> = all_vectors(2)
            .filter(|x| c.codewords(16).unwrap().all(|w| w.dot(x) == 0))
            .collect();
        assert_eq!(oracle.len() as u64, d.size_u64().unwrap());
        assert!(oracle.iter().all(|x| d.contains(x).unwrap()));
        assert_eq!(QuaternaryCode::full(3).dual().log2_size(), 0);
    }

    #[test]
    fn dual_matches_brute_force_mixed_types() {
        for rows in [
            vec!["1022", "0120"],
            vec!["2020", "0202", "1111"],
            vec!["1300", "0022"],
            vec!["2200", "0022", "2002"],
        ] {
            let c = code(&rows);
            let d = c.dual();
            let words: Vec<_> = c.codewords(1 << 10).unwrap().collect();
            let oracle: Vec<_> = all_vectors(4)
                .filter(|x| words.iter().all(|w| w.dot(x) == 0))
                .collect();
            assert_eq!(oracle.len() as u64, d.size_u64().unwrap(), "{rows:?}");
            assert!(oracle.iter().all(|x| d.contains(x).unwrap()));
        }
    }

    #[test]
    fn membership() {
        let c = code(&["11"]);
        assert!(c.contains(&v("22")).unwrap());
        assert!(!c.contains(&v("12")).unwrap());
        assert!(matches!(
            c.contains(&v("123")),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn enumeration_edges() {
        let z = QuaternaryCode::zero(5);
        let words: Vec<_> = z.codewords(1).unwrap().collect();
        assert_eq!(words, vec![Z4Vector::zeros(5)]);
        assert!(matches!(
            QuaternaryCode::full(4).codewords(255),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn set_equality() {
        let c = code(&["11"]);
        assert!(c.equal_as_sets(&c).unwrap());
        assert!(c.equal_as_sets(&code(&["33"])).unwrap());
        assert!(!c.equal_as_sets(&code(&["13"])).unwrap());
        assert!(c.equal_as_sets(&code(&["111"])).is_err());
    }

    #[test]
    fn lee_search_routes_agree() {
        let full = QuaternaryCode::full(6);
        assert_eq!(full.min_lee_weight_search(1), Some(1));
        assert_eq!(full.min_lee_weight_by_syndrome(1), Some(1));
        for rows in [vec!["1111", "0123"], vec!["2200", "0222"], vec!["1232"]] {
            let c = code(&rows);
            let direct = c.min_lee_weight_by_enumeration(1 << 10).unwrap();
            assert_eq!(c.min_lee_weight_by_syndrome(8), direct, "{rows:?}");
        }
        let c = code(&["1232"]);
        assert_eq!(c.min_lee_weight_search(5), Some(4));
        assert_eq!(c.min_lee_weight_by_syndrome(3), None);
        assert_eq!(c.min_lee_weight_search(3), None);
    }
}
