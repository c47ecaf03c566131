//! Weight enumerators with exact integer coefficients.
//!
//! [`TrivariateWeightEnumerator`] is the symmetrized weight enumerator
//! `swe_D(x, y, z) = Σ x^N0(a) y^N1(a) z^N2(a)` of a quaternary code, where
//! `N_i(a)` counts coordinates congruent to `±i` mod 4. Its MacWilliams
//! transform gives the enumerator of the dual:
//!
//! ```text
//! swe_D⊥(x, y, z) = swe_D(x + 2y + z, x - z, x - 2y + z) / |D|
//! ```
//!
//! Substituting `(x², xy, y²)` gives the Hamming enumerator of the Gray
//! image, which obeys the binary transform `W(x + y, x - y) / |C|`.
//!
//! All arithmetic is exact; intermediate expansions are signed.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::code::QuaternaryCode;
use crate::error::{Error, Result};
use crate::gray::BinaryVector;

/// Exponent triple `(n0, n1, n2)` with `n0 + n1 + n2 = n`.
pub type Triple = (usize, usize, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrivariateWeightEnumerator {
    n: usize,
    terms: BTreeMap<Triple, BigUint>,
}

impl TrivariateWeightEnumerator {
    /// Enumerator from explicit terms; zero coefficients are dropped.
    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (Triple, BigUint)>,
    ) -> Result<Self> {
        let mut map: BTreeMap<Triple, BigUint> = BTreeMap::new();
        for ((a, b, c), coeff) in terms {
            if a + b + c != n {
                return Err(Error::InvalidEnumerator(format!(
                    "term ({a}, {b}, {c}) is not of degree {n}"
                )));
            }
            *map.entry((a, b, c)).or_default() += coeff;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(TrivariateWeightEnumerator { n, terms: map })
    }

    /// The symmetrized weight enumerator of `code` (at most `cap` words).
    pub fn of_code(code: &QuaternaryCode, cap: u64) -> Result<Self> {
        let mut counts: HashMap<Triple, u64> = HashMap::new();
        for c in code.codewords(cap)? {
            *counts.entry(c.symmetrized_counts()).or_default() += 1;
        }
        Self::from_terms(
            code.len(),
            counts.into_iter().map(|(t, c)| (t, BigUint::from(c))),
        )
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Triple, BigUint> {
        &self.terms
    }

    pub fn coeff(&self, t: Triple) -> BigUint {
        self.terms.get(&t).cloned().unwrap_or_default()
    }

    /// Value at `(1, 1, 1)`: the code size.
    pub fn mass(&self) -> BigUint {
        self.terms.values().sum()
    }

    /// Smallest nonzero Lee weight `n1 + 2 n2` among the terms.
    pub fn min_lee_weight(&self) -> Option<usize> {
        self.terms
            .keys()
            .map(|&(_, b, c)| b + 2 * c)
            .filter(|&w| w > 0)
            .min()
    }

    /// `swe(x + 2y + z, x - z, x - 2y + z) / size`.
    pub fn macwilliams(&self, size: &BigUint) -> Result<Self> {
        if size.is_zero() || self.mass() != *size {
            return Err(Error::InvalidEnumerator(format!(
                "size {size} differs from the enumerator mass {}",
                self.mass()
            )));
        }
        let n = self.n;
        let l1 = [1i8, 2, 1];
        let l2 = [1i8, 0, -1];
        let l3 = [1i8, -2, 1];
        let mut l3_powers = vec![Dense::constant(BigInt::one())];
        for k in 1..=n {
            let next = l3_powers[k - 1].mul_linear(l3);
            l3_powers.push(next);
        }

        // S = Σ_a L1^a T_a with T_a = Σ_b c(a, b, N - b) L2^b L3^(N - b), N = n - a.
        let mut acc = Dense::constant(BigInt::zero());
        for a in (0..=n).rev() {
            acc = if a == n { acc } else { acc.mul_linear(l1) };
            let big_n = n - a;
            let coeff = |b: usize| -> BigInt {
                self.terms
                    .get(&(a, b, big_n - b))
                    .map(|c| BigInt::from_biguint(Sign::Plus, c.clone()))
                    .unwrap_or_default()
            };
            if !(0..=big_n).any(|b| self.terms.contains_key(&(a, b, big_n - b))) {
                // T_a = 0; only the degree needs to catch up.
                acc = acc.with_degree(big_n);
                continue;
            }
            let mut t = Dense::constant(coeff(big_n));
            for (k, power) in l3_powers.iter().enumerate().take(big_n + 1).skip(1) {
                t = t.mul_linear(l2);
                t.add_scaled(power, &coeff(big_n - k));
            }
            acc = acc.with_degree(big_n);
            acc.add_scaled(&t, &BigInt::one());
        }

        let size = BigInt::from_biguint(Sign::Plus, size.clone());
        let mut terms = Vec::new();
        for j in 0..=n {
            for k in 0..=n - j {
                let c = acc.get(j, k);
                if c.is_zero() {
                    continue;
                }
                let (q, r) = (c / &size, c % &size);
                if !r.is_zero() || q.sign() == Sign::Minus {
                    return Err(Error::InvalidEnumerator(format!(
                        "coefficient of x^{} y^{j} z^{k} is {c}, not a nonnegative multiple of {size}",
                        n - j - k
                    )));
                }
                terms.push(((n - j - k, j, k), q.magnitude().clone()));
            }
        }
        Self::from_terms(n, terms)
    }

    /// Hamming enumerator of the Gray image: `swe(x², xy, y²)`.
    pub fn to_hamming(&self) -> BivariateWeightEnumerator {
        let mut terms: BTreeMap<usize, BigUint> = BTreeMap::new();
        for (&(_, b, c), coeff) in &self.terms {
            *terms.entry(b + 2 * c).or_default() += coeff;
        }
        BivariateWeightEnumerator {
            n: 2 * self.n,
            terms,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<TrivariateTermJson> = self
            .terms
            .iter()
            .map(|(&(n0, n1, n2), c)| TrivariateTermJson {
                n0,
                n1,
                n2,
                coeff: c.to_string(),
            })
            .collect();
        serde_json::to_value(TrivariateJson { n: self.n, terms }).expect("serialisable")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let parsed: TrivariateJson = serde_json::from_value(value.clone())
            .map_err(|e| Error::Parse(format!("trivariate enumerator JSON: {e}")))?;
        let terms = parsed
            .terms
            .into_iter()
            .map(|t| Ok(((t.n0, t.n1, t.n2), parse_coeff(&t.coeff)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(parsed.n, terms)
    }
}

/// Hamming weight enumerator `Σ A_w x^(n-w) y^w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariateWeightEnumerator {
    n: usize,
    /// Weight `w` to `A_w`, zero coefficients absent.
    terms: BTreeMap<usize, BigUint>,
}

impl BivariateWeightEnumerator {
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (usize, BigUint)>) -> Result<Self> {
        let mut map: BTreeMap<usize, BigUint> = BTreeMap::new();
        for (w, c) in terms {
            if w > n {
                return Err(Error::InvalidEnumerator(format!(
                    "weight {w} exceeds length {n}"
                )));
            }
            *map.entry(w).or_default() += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(BivariateWeightEnumerator { n, terms: map })
    }

    /// Weight census of an explicit word list of length `n`.
    pub fn of_words<'a>(n: usize, words: impl IntoIterator<Item = &'a BinaryVector>) -> Self {
        let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
        for w in words {
            *counts.entry(w.weight()).or_default() += 1;
        }
        BivariateWeightEnumerator {
            n,
            terms: counts
                .into_iter()
                .map(|(w, c)| (w, BigUint::from(c)))
                .collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<usize, BigUint> {
        &self.terms
    }

    /// `A_w`.
    pub fn coeff(&self, w: usize) -> BigUint {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    pub fn mass(&self) -> BigUint {
        self.terms.values().sum()
    }

    pub fn min_weight(&self) -> Option<usize> {
        self.terms.keys().copied().find(|&w| w > 0)
    }

    /// `W(x + y, x - y) / size`.
    pub fn macwilliams(&self, size: &BigUint) -> Result<Self> {
        if size.is_zero() || self.mass() != *size {
            return Err(Error::InvalidEnumerator(format!(
                "not a distance-invariant-consistent enumerator: size {size} differs from mass {}",
                self.mass()
            )));
        }
        let n = self.n;
        // Polynomials in y with x implied; index = power of y.
        let mul_linear = |p: &[BigInt], cy: i8| -> Vec<BigInt> {
            let mut out = vec![BigInt::zero(); p.len() + 1];
            for (i, c) in p.iter().enumerate() {
                out[i] += c;
                out[i + 1] += c * cy;
            }
            out
        };
        let mut plus_powers: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for k in 1..=n {
            let next = mul_linear(&plus_powers[k - 1], 1);
            plus_powers.push(next);
        }
        let coeff = |w: usize| -> BigInt {
            self.terms
                .get(&w)
                .map(|c| BigInt::from_biguint(Sign::Plus, c.clone()))
                .unwrap_or_default()
        };
        // Σ_w A_w (x - y)^w (x + y)^(n - w), Horner in (x - y).
        let mut acc = vec![coeff(n)];
        for (k, power) in plus_powers.iter().enumerate().take(n + 1).skip(1) {
            acc = mul_linear(&acc, -1);
            let c = coeff(n - k);
            if !c.is_zero() {
                for (a, p) in acc.iter_mut().zip(power) {
                    *a += &c * p;
                }
            }
        }
        let size = BigInt::from_biguint(Sign::Plus, size.clone());
        let mut terms = Vec::new();
        for (w, c) in acc.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !(&c % &size).is_zero() || c.sign() == Sign::Minus {
                return Err(Error::InvalidEnumerator(format!(
                    "not a distance-invariant-consistent enumerator: A_{w} = {c} / {size}"
                )));
            }
            terms.push((w, (c / &size).magnitude().clone()));
        }
        Self::from_terms(n, terms)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<BivariateTermJson> = self
            .terms
            .iter()
            .rev()
            .map(|(&w, c)| BivariateTermJson {
                x: self.n - w,
                y: w,
                coeff: c.to_string(),
            })
            .collect();
        serde_json::to_value(BivariateJson { n: self.n, terms }).expect("serialisable")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let parsed: BivariateJson = serde_json::from_value(value.clone())
            .map_err(|e| Error::Parse(format!("bivariate enumerator JSON: {e}")))?;
        let terms = parsed
            .terms
            .into_iter()
            .map(|t| {
                if t.x + t.y != parsed.n {
                    return Err(Error::InvalidEnumerator(format!(
                        "term x^{} y^{} is not of degree {}",
                        t.x, t.y, parsed.n
                    )));
                }
                Ok((t.y, parse_coeff(&t.coeff)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(parsed.n, terms)
    }
}

fn parse_coeff(s: &str) -> Result<BigUint> {
    s.parse().map_err(|_| {
        Error::Parse(format!(
            "coefficient {s:?} is not a nonnegative decimal integer"
        ))
    })
}

#[derive(Serialize, Deserialize)]
struct TrivariateJson {
    n: usize,
    terms: Vec<TrivariateTermJson>,
}

#[derive(Serialize, Deserialize)]
struct TrivariateTermJson {
    n0: usize,
    n1: usize,
    n2: usize,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct BivariateJson {
    n: usize,
    terms: Vec<BivariateTermJson>,
}

#[derive(Serialize, Deserialize)]
struct BivariateTermJson {
    x: usize,
    y: usize,
    coeff: String,
}

/// Homogeneous polynomial in `x, y, z` of a fixed degree, stored densely by
/// the exponents of `y` and `z`.
struct Dense {
    deg: usize,
    coeffs: Vec<BigInt>,
}

impl Dense {
    fn constant(c: BigInt) -> Self {
        Dense {
            deg: 0,
            coeffs: vec![c],
        }
    }

    fn stride(&self) -> usize {
        self.deg + 1
    }

    fn get(&self, j: usize, k: usize) -> &BigInt {
        &self.coeffs[j * self.stride() + k]
    }

    /// Multiplies by `cx·x + cy·y + cz·z`.
    fn mul_linear(&self, [cx, cy, cz]: [i8; 3]) -> Dense {
        let deg = self.deg + 1;
        let stride = deg + 1;
        let mut out = vec![BigInt::zero(); stride * stride];
        for j in 0..=self.deg {
            for k in 0..=self.deg - j {
                let c = self.get(j, k);
                if c.is_zero() {
                    continue;
                }
                if cx != 0 {
                    out[j * stride + k] += c * cx;
                }
                if cy != 0 {
                    out[(j + 1) * stride + k] += c * cy;
                }
                if cz != 0 {
                    out[j * stride + k + 1] += c * cz;
                }
            }
        }
        Dense { deg, coeffs: out }
    }

    /// Re-labels a zero polynomial with a new degree; nonzero ones must
    /// already have it.
    fn with_degree(self, deg: usize) -> Dense {
        if self.deg == deg {
            return self;
        }
        debug_assert!(self.coeffs.iter().all(Zero::is_zero));
        Dense {
            deg,
            coeffs: vec![BigInt::zero(); (deg + 1) * (deg + 1)],
        }
    }

    fn add_scaled(&mut self, other: &Dense, c: &BigInt) {
        debug_assert_eq!(self.deg, other.deg);
        if c.is_zero() {
            return;
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }
}
