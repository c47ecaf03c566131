//! The Galois ring `Z4[ξ] = Z4[X] / (h(X))` for a Hensel lift `h`.
//!
//! Elements are residues of degree `< m` in the basis `1, ξ, …, ξ^(m-1)`.
//! The Frobenius map is the Z4-linear extension of `ξ^i ↦ ξ^(2i)`, and the
//! relative trace to Z4 is `Tr(a) = a + σ(a) + … + σ^(m-1)(a)`.

use crate::code::Z4Vector;
use crate::error::{Error, Result};
use crate::poly::{hensel_lift, BinPoly, Z4Poly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisRing {
    m: usize,
    n: usize,
    h: Z4Poly,
    /// `frobenius[i]` holds the coordinates of `ξ^(2i) mod h`.
    frobenius: Vec<Vec<u8>>,
}

impl GaloisRing {
    /// Builds the ring from a Hensel lift `h`.
    ///
    /// `h` must be monic with a primitive reduction mod 2 and must divide
    /// `X^n - 1` for `n = 2^m - 1`.
    pub fn new(h: Z4Poly) -> Result<Self> {
        let m = h
            .degree()
            .filter(|&m| (2..=20).contains(&m))
            .ok_or_else(|| Error::InvalidArgument(format!("h = {h} has unsupported degree")))?;
        if !h.is_monic() || !h.to_binary().is_primitive() {
            return Err(Error::NotPrimitive(h.to_digits()));
        }
        let n = (1usize << m) - 1;
        if !Z4Poly::x_pow_minus_one(n).rem(&h)?.is_zero() {
            return Err(Error::InexactDivision);
        }
        let frobenius = (0..m)
            .map(|i| {
                let r = Z4Poly::monomial(1, 2 * i).rem(&h)?;
                Ok((0..m).map(|k| r.coeff(k)).collect())
            })
            .collect::<Result<_>>()?;
        Ok(GaloisRing { m, n, h, frobenius })
    }

    /// Ring over the Hensel lift of a binary primitive polynomial.
    pub fn from_primitive(h2: &BinPoly) -> Result<Self> {
        GaloisRing::new(hensel_lift(h2)?)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `2^m - 1`, the multiplicative order of `ξ`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> &Z4Poly {
        &self.h
    }

    /// Element with the given basis coordinates (reduced mod 4, padded to `m`).
    pub fn element(&self, coeffs: &[u8]) -> Result<GaloisRingElement<'_>> {
        if coeffs.len() > self.m {
            return Err(Error::LengthMismatch {
                expected: self.m,
                actual: coeffs.len(),
            });
        }
        let mut c: Vec<u8> = coeffs.iter().map(|&x| x & 3).collect();
        c.resize(self.m, 0);
        Ok(GaloisRingElement {
            ring: self,
            coeffs: c,
        })
    }

    /// Residue of an arbitrary polynomial mod `h`.
    pub fn reduce(&self, p: &Z4Poly) -> GaloisRingElement<'_> {
        let r = p.rem(&self.h).expect("h is monic");
        GaloisRingElement {
            ring: self,
            coeffs: (0..self.m).map(|i| r.coeff(i)).collect(),
        }
    }

    pub fn constant(&self, c: u8) -> GaloisRingElement<'_> {
        self.reduce(&Z4Poly::new([c]))
    }

    pub fn zero(&self) -> GaloisRingElement<'_> {
        self.constant(0)
    }

    pub fn one(&self) -> GaloisRingElement<'_> {
        self.constant(1)
    }

    /// `ξ^k`, with `k` taken mod `n`.
    pub fn xi_pow(&self, k: usize) -> GaloisRingElement<'_> {
        self.reduce(&Z4Poly::monomial(1, k % self.n))
    }

    /// All `4^m` elements, indexed by their base-4 coordinate digits.
    pub fn elements(&self) -> impl Iterator<Item = GaloisRingElement<'_>> + '_ {
        (0..1usize << (2 * self.m)).map(move |idx| GaloisRingElement {
            ring: self,
            coeffs: (0..self.m).map(|i| ((idx >> (2 * i)) & 3) as u8).collect(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisRingElement<'r> {
    ring: &'r GaloisRing,
    coeffs: Vec<u8>,
}

impl<'r> GaloisRingElement<'r> {
    pub fn ring(&self) -> &'r GaloisRing {
        self.ring
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if std::ptr::eq(self.ring, other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::IncompatibleRings)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(GaloisRingElement {
            ring: self.ring,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| (a + b) & 3)
                .collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let product =
            &Z4Poly::new(self.coeffs.iter().copied()) * &Z4Poly::new(other.coeffs.iter().copied());
        Ok(self.ring.reduce(&product))
    }

    pub fn scale(&self, c: u8) -> Self {
        GaloisRingElement {
            ring: self.ring,
            coeffs: self.coeffs.iter().map(|&a| (a * (c & 3)) & 3).collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same ring");
            }
            base = base.mul(&base).expect("same ring");
            e >>= 1;
        }
        acc
    }

    /// The Frobenius automorphism, `ξ^i ↦ ξ^(2i)` extended Z4-linearly.
    pub fn frobenius(&self) -> Self {
        let m = self.ring.m;
        let mut out = vec![0u8; m];
        for (a, image) in self.coeffs.iter().zip(&self.ring.frobenius) {
            for (o, &b) in out.iter_mut().zip(image) {
                *o = (*o + a * b) & 3;
            }
        }
        GaloisRingElement {
            ring: self.ring,
            coeffs: out,
        }
    }

    /// Relative trace to Z4.
    ///
    /// Errors if the sum of conjugates has a non-constant coordinate.
    pub fn trace(&self) -> Result<u8> {
        let mut acc = self.clone();
        let mut conj = self.clone();
        for _ in 1..self.ring.m {
            conj = conj.frobenius();
            acc = acc.add(&conj)?;
        }
        if acc.coeffs[1..].iter().any(|&c| c != 0) {
            return Err(Error::TraceNotScalar);
        }
        Ok(acc.coeffs[0])
    }
}

/// The code `{(ε, ε + Tr(λ), ε + Tr(λξ), …, ε + Tr(λξ^(n-1)))}` over all
/// `λ` in the ring and `ε` in Z4.
///
/// The leading coordinate is the extended position. Vectors are produced in
/// order of `λ`'s base-4 index, then `ε`.
///
/// Moving the leading coordinate to the end gives exactly the extended
/// cyclic code generated by the Kerdock generator polynomial of the same
/// `h`, coordinate `t` matching `X^t`.
pub fn kerdock_via_trace(ring: &GaloisRing) -> Result<Vec<Z4Vector>> {
    let n = ring.n();
    let powers: Vec<_> = (0..n).map(|t| ring.xi_pow(t)).collect();
    let mut out = Vec::with_capacity(4 << (2 * ring.m()));
    for lambda in ring.elements() {
        let traces = powers
            .iter()
            .map(|p| lambda.mul(p)?.trace())
            .collect::<Result<Vec<u8>>>()?;
        for eps in 0..4u8 {
            let mut v = Vec::with_capacity(n + 1);
            v.push(eps);
            v.extend(traces.iter().map(|&t| (t + eps) & 3));
            out.push(Z4Vector::new(v));
        }
    }
    Ok(out)
}
