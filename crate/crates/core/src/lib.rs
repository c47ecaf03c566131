//! Linear codes over Z4, the integers mod 4, and the binary codes they map to.
//!
//! The crate covers the whole pipeline from a binary primitive polynomial to
//! the Kerdock and Preparata codes:
//!
//! - [`poly`]: polynomials over Z4 and GF(2), the Hensel lift of a primitive
//!   polynomial and the Kerdock generator polynomial.
//! - [`galois`]: the Galois ring `Z4[ξ]`, its Frobenius map and trace.
//! - [`code`]: quaternary linear codes, duals, membership, enumeration and
//!   low Lee weight search.
//! - [`gray`]: the Gray map to binary codes, Lee/Hamming isometry, the two
//!   Z4-linearity criteria and Reed-Muller codes.
//! - [`enumerator`]: symmetrized and Hamming weight enumerators with exact
//!   MacWilliams transforms.
//! - [`families`]: Kerdock, Preparata, octacode and Nordstrom-Robinson.
//! - [`io`]: text file formats for codes.
//!
//! ```
//! use z4codes::poly::{generator_poly_g, hensel_lift, BinPoly};
//!
//! let h2: BinPoly = "101001".parse().unwrap(); // X^5 + X^2 + 1
//! let h = hensel_lift(&h2).unwrap();
//! assert_eq!(h.to_digits(), "323001");
//! let g = generator_poly_g(&h, 5).unwrap();
//! assert_eq!(g.to_digits(), "11120122010303133013212213");
//! ```

pub mod code;
pub mod enumerator;
pub mod error;
pub mod families;
pub mod galois;
pub mod gray;
pub mod io;
pub mod poly;

pub use code::{QuaternaryCode, Z4Vector, DEFAULT_CAP};
pub use enumerator::{BivariateWeightEnumerator, TrivariateWeightEnumerator};
pub use error::{Error, Result};
pub use galois::{GaloisRing, GaloisRingElement};
pub use gray::{BinaryCode, BinaryVector};
pub use poly::{BinPoly, Z4Poly};
