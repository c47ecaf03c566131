//! Polynomials over Z4 and over the two-element field.
//!
//! Coefficients are stored lowest degree first, and the digit-string form
//! follows the same order: `"323001"` is `3 + 2X + 3X^2 + X^5`.
//!
//! The centrepiece is [`hensel_lift`], which lifts a binary primitive
//! polynomial `h2` of degree `m` to the unique monic `h` over Z4 with
//! `h = h2 (mod 2)` and `h | X^n - 1`, `n = 2^m - 1`, and
//! [`generator_poly_g`], the reciprocal of `(X^n - 1) / ((X - 1) h)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Polynomial with coefficients in Z4, lowest degree first.
///
/// Always canonical: no trailing zero coefficients, so the zero polynomial
/// has an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Z4Poly {
    coeffs: Vec<u8>,
}

impl Z4Poly {
    /// Builds a polynomial from integer coefficients, reducing them mod 4.
    pub fn new<I: IntoIterator<Item = u8>>(coeffs: I) -> Self {
        let mut coeffs: Vec<u8> = coeffs.into_iter().map(|c| c & 3).collect();
        trim(&mut coeffs);
        Z4Poly { coeffs }
    }

    pub fn zero() -> Self {
        Z4Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Z4Poly { coeffs: vec![1] }
    }

    /// `c * X^degree`.
    pub fn monomial(c: u8, degree: usize) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c;
        Z4Poly::new(coeffs)
    }

    /// `X^n - 1`, i.e. `X^n + 3` over Z4.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = 3;
        coeffs[n] = 1;
        Z4Poly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    /// Coefficient of `X^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> u8 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> u8 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == 1
    }

    pub fn scale(&self, c: u8) -> Self {
        Z4Poly::new(self.coeffs.iter().map(|&a| a * (c & 3)))
    }

    /// Reduction mod 2.
    pub fn to_binary(&self) -> BinPoly {
        BinPoly::new(self.coeffs.iter().map(|&c| c & 1))
    }

    /// Polynomial long division by a divisor with unit leading coefficient.
    ///
    /// Returns `(q, r)` with `self = divisor * q + r` and `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Z4Poly) -> Result<(Z4Poly, Z4Poly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead = divisor.leading_coeff();
        if lead.is_multiple_of(2) {
            return Err(Error::NonUnitLeadingCoefficient);
        }
        // 1 and 3 are their own inverses mod 4.
        let lead_inv = lead;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Z4Poly::zero(), self.clone()));
        }
        let mut quot = vec![0u8; rem.len() - dd];
        for shift in (0..quot.len()).rev() {
            let c = (rem[shift + dd] * lead_inv) & 3;
            if c == 0 {
                continue;
            }
            quot[shift] = c;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = (rem[shift + i] + 4 * 4 - c * d) & 3;
            }
        }
        rem.truncate(dd);
        Ok((Z4Poly::new(quot), Z4Poly::new(rem)))
    }

    pub fn rem(&self, divisor: &Z4Poly) -> Result<Z4Poly> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// `X^deg * p(1/X)`: the coefficient sequence reversed.
    pub fn reciprocal(&self) -> Result<Z4Poly> {
        if self.coeff(0) == 0 {
            return Err(Error::ReciprocalUndefined);
        }
        Ok(Z4Poly::new(self.coeffs.iter().rev().copied()))
    }

    /// Digit string, lowest degree first. The zero polynomial is `"0"`.
    pub fn to_digits(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs.iter().map(|&c| char::from(b'0' + c)).collect()
    }
}

fn trim(coeffs: &mut Vec<u8>) {
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
}

impl fmt::Display for Z4Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_digits())
    }
}

impl FromStr for Z4Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial digit string".into()));
        }
        s.bytes()
            .map(|b| match b {
                b'0'..=b'3' => Ok(b - b'0'),
                _ => Err(Error::Parse(format!(
                    "invalid Z4 digit {:?} in {s:?}",
                    char::from(b)
                ))),
            })
            .collect::<Result<Vec<u8>>>()
            .map(Z4Poly::new)
    }
}

impl Add for &Z4Poly {
    type Output = Z4Poly;

    fn add(self, rhs: &Z4Poly) -> Z4Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Z4Poly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)))
    }
}

impl Sub for &Z4Poly {
    type Output = Z4Poly;

    fn sub(self, rhs: &Z4Poly) -> Z4Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Z4Poly::new((0..len).map(|i| self.coeff(i) + 4 - rhs.coeff(i)))
    }
}

impl Neg for &Z4Poly {
    type Output = Z4Poly;

    fn neg(self) -> Z4Poly {
        self.scale(3)
    }
}

impl Mul for &Z4Poly {
    type Output = Z4Poly;

    fn mul(self, rhs: &Z4Poly) -> Z4Poly {
        if self.is_zero() || rhs.is_zero() {
            return Z4Poly::zero();
        }
        let mut out = vec![0u8; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) & 3;
            }
        }
        Z4Poly::new(out)
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr for Z4Poly {
            type Output = Z4Poly;
            fn $f(self, rhs: Z4Poly) -> Z4Poly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

/// Polynomial over the two-element field, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct BinPoly {
    coeffs: Vec<u8>,
}

impl BinPoly {
    pub fn new<I: IntoIterator<Item = u8>>(coeffs: I) -> Self {
        let mut coeffs: Vec<u8> = coeffs.into_iter().map(|c| c & 1).collect();
        trim(&mut coeffs);
        BinPoly { coeffs }
    }

    /// Polynomial whose bit `i` of `mask` is the coefficient of `X^i`.
    pub fn from_mask(mask: u64) -> Self {
        BinPoly::new((0..64).map(|i| ((mask >> i) & 1) as u8))
    }

    /// Inverse of [`BinPoly::from_mask`]; `None` above degree 63.
    pub fn to_mask(&self) -> Option<u64> {
        if self.coeffs.len() > 64 {
            return None;
        }
        Some(
            self.coeffs
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, &c)| acc | (u64::from(c) << i)),
        )
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u8 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, rhs: &BinPoly) -> BinPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        BinPoly::new((0..len).map(|i| self.coeff(i) ^ rhs.coeff(i)))
    }

    pub fn mul(&self, rhs: &BinPoly) -> BinPoly {
        if self.is_zero() || rhs.is_zero() {
            return BinPoly::default();
        }
        let mut out = vec![0u8; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, _) in self.coeffs.iter().enumerate().filter(|(_, &a)| a == 1) {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] ^= b;
            }
        }
        BinPoly::new(out)
    }

    /// Remainder of division by a nonzero `divisor`.
    pub fn rem(&self, divisor: &BinPoly) -> BinPoly {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let mut rem = self.coeffs.clone();
        while rem.len() > dd {
            let top = rem.len() - 1;
            if rem[top] == 1 {
                for (i, &d) in divisor.coeffs.iter().enumerate() {
                    rem[top - dd + i] ^= d;
                }
            }
            rem.pop();
        }
        BinPoly::new(rem)
    }

    pub fn gcd(&self, rhs: &BinPoly) -> BinPoly {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    /// `self^e mod modulus` by square-and-multiply.
    pub fn pow_mod(&self, mut e: u64, modulus: &BinPoly) -> BinPoly {
        let mut base = self.rem(modulus);
        let mut acc = BinPoly::new([1]).rem(modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
            e >>= 1;
        }
        acc
    }

    /// Irreducibility over the two-element field (Ben-Or test).
    pub fn is_irreducible(&self) -> bool {
        let Some(m) = self.degree() else {
            return false;
        };
        if m == 0 {
            return false;
        }
        let x = BinPoly::new([0, 1]);
        let mut frob = x.rem(self);
        for _ in 0..m / 2 {
            frob = frob.mul(&frob).rem(self);
            if self.gcd(&frob.add(&x)).degree() != Some(0) {
                return false;
            }
        }
        true
    }

    /// True iff irreducible and `X` has multiplicative order `2^m - 1`.
    pub fn is_primitive(&self) -> bool {
        let Some(m) = self.degree() else {
            return false;
        };
        if m == 0 || m > 62 || self.coeff(0) == 0 || !self.is_irreducible() {
            return false;
        }
        let n = (1u64 << m) - 1;
        let one = BinPoly::new([1]).rem(self);
        let x = BinPoly::new([0, 1]);
        if x.pow_mod(n, self) != one {
            return false;
        }
        prime_factors(n)
            .into_iter()
            .all(|p| x.pow_mod(n / p, self) != one)
    }

    /// Digit string of 0/1, lowest degree first.
    pub fn to_digits(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs.iter().map(|&c| char::from(b'0' + c)).collect()
    }

    /// Lifts the 0/1 coefficients into Z4.
    pub fn to_z4(&self) -> Z4Poly {
        Z4Poly::new(self.coeffs.iter().copied())
    }
}

impl fmt::Display for BinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_digits())
    }
}

impl FromStr for BinPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial digit string".into()));
        }
        s.bytes()
            .map(|b| match b {
                b'0' | b'1' => Ok(b - b'0'),
                _ => Err(Error::Parse(format!(
                    "invalid binary digit {:?} in {s:?}",
                    char::from(b)
                ))),
            })
            .collect::<Result<Vec<u8>>>()
            .map(BinPoly::new)
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// All primitive polynomials of degree `m`, in increasing order of their
/// bit mask (bit `i` = coefficient of `X^i`).
pub fn primitive_polys(m: usize) -> impl Iterator<Item = BinPoly> {
    assert!((1..=62).contains(&m), "degree out of range");
    let lo = 1u64 << m;
    (lo..lo << 1)
        .filter(|mask| mask & 1 == 1)
        .map(BinPoly::from_mask)
        .filter(BinPoly::is_primitive)
}

/// The primitive polynomial of degree `m` with the smallest bit mask.
///
/// `X^3 + X + 1` for `m = 3`, `X^5 + X^2 + 1` for `m = 5`.
pub fn default_primitive(m: usize) -> Result<BinPoly> {
    if !(1..=62).contains(&m) {
        return Err(Error::InvalidArgument(format!(
            "degree m = {m} out of range"
        )));
    }
    primitive_polys(m)
        .next()
        .ok_or_else(|| Error::NotPrimitive(format!("no primitive polynomial of degree {m}")))
}

/// Lifts a binary primitive polynomial to Z4 by one Graeffe root-squaring step.
///
/// Writing `h2(X) = e(X^2) + X d(X^2)`, the lift satisfies
/// `h(X^2) = ±(e(X^2)^2 - X^2 d(X^2)^2)`, so its roots are the squares of the
/// roots of `h2` taken in Z4. The sign is fixed so that `h` is monic.
pub fn hensel_lift(h2: &BinPoly) -> Result<Z4Poly> {
    let m = h2.degree().unwrap_or(0);
    if m < 2 {
        return Err(Error::NotPrimitive(format!(
            "{h2}: degree must be at least 2"
        )));
    }
    if !h2.is_primitive() {
        return Err(Error::NotPrimitive(h2.to_digits()));
    }
    let even = Z4Poly::new(h2.coeffs().iter().step_by(2).copied());
    let odd = Z4Poly::new(h2.coeffs().iter().skip(1).step_by(2).copied());
    let shifted = &Z4Poly::monomial(1, 1) * &(&odd * &odd);
    let h = &(&even * &even) - &shifted;
    let h = if h.is_monic() { h } else { -&h };
    debug_assert_eq!(h.degree(), Some(m));
    debug_assert!(h.is_monic());
    Ok(h)
}

/// Reciprocal of `(X^n - 1) / ((X - 1) h(X))`, `n = 2^m - 1`.
///
/// Fails with [`Error::InexactDivision`] if `h` is not a divisor of
/// `X^n - 1`, which signals a bad lift.
pub fn generator_poly_g(h: &Z4Poly, m: usize) -> Result<Z4Poly> {
    if h.degree() != Some(m) || !(2..=30).contains(&m) {
        return Err(Error::InvalidArgument(format!(
            "h = {h} is not of degree m = {m}"
        )));
    }
    let n = (1usize << m) - 1;
    let x_minus_one = Z4Poly::new([3, 1]);
    let (q, r) = Z4Poly::x_pow_minus_one(n).div_rem(&(&x_minus_one * h))?;
    if !r.is_zero() {
        return Err(Error::InexactDivision);
    }
    q.reciprocal()
}
