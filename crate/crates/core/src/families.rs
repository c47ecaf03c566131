//! Kerdock, Preparata, octacode and Nordstrom-Robinson.
//!
//! For a binary primitive `h2` of degree `m` with Hensel lift `h` and
//! generator `g`:
//!
//! - the quaternary Kerdock code `D` is the extended cyclic code of length
//!   `2^m` generated by `g`, with `4^(m+1)` words;
//! - the quaternary Preparata code is the extended cyclic code generated by
//!   `h`, and equals `D⊥`;
//! - their Gray images `K` and `P` have length `2^(m+1)`; for odd `m >= 3`
//!   `K` has minimum distance `2^m - 2^((m-1)/2)` and `P` has distance 6.
//!
//! At `m = 3` both collapse to the octacode, whose image is the
//! Nordstrom-Robinson code.

use num_bigint::BigUint;
use serde::Serialize;

use crate::code::QuaternaryCode;
use crate::enumerator::{BivariateWeightEnumerator, TrivariateWeightEnumerator};
use crate::error::{Error, Result};
use crate::galois::{kerdock_via_trace, GaloisRing};
use crate::gray::{gray_image, min_distance_binary, BinaryCode, DistanceVerdict};
use crate::poly::{default_primitive, generator_poly_g, hensel_lift, BinPoly};

/// Largest `m` for which [`verify_family`] computes distances.
pub const DISTANCE_BUDGET_M: usize = 5;

/// `X^3 + X^2 + 1`, whose lift `X^3 + 3X^2 + 2X + 3` generates the octacode.
pub const OCTACODE_H2: &str = "1011";

/// `h2` if given (checked to be primitive of degree `m`), else the default
/// primitive polynomial of degree `m`.
pub fn resolve_primitive(m: usize, h2: Option<&BinPoly>) -> Result<BinPoly> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!(
            "m = {m} must be at least 2"
        )));
    }
    match h2 {
        None => default_primitive(m),
        Some(p) if p.degree() != Some(m) => Err(Error::InvalidArgument(format!(
            "h2 = {p} does not have degree m = {m}"
        ))),
        Some(p) if !p.is_primitive() => Err(Error::NotPrimitive(p.to_digits())),
        Some(p) => Ok(p.clone()),
    }
}

fn block_length(m: usize) -> Result<usize> {
    if m > 20 {
        return Err(Error::InvalidArgument(format!("m = {m} is too large")));
    }
    Ok((1usize << m) - 1)
}

/// Extended cyclic code generated by `g`; `4^(m+1)` words.
pub fn kerdock_quaternary(m: usize, h2: Option<&BinPoly>) -> Result<QuaternaryCode> {
    let h2 = resolve_primitive(m, h2)?;
    let n = block_length(m)?;
    let g = generator_poly_g(&hensel_lift(&h2)?, m)?;
    Ok(QuaternaryCode::cyclic(&g, n)?.extend_parity())
}

/// Extended cyclic code generated by `h`; the dual of [`kerdock_quaternary`].
pub fn preparata_quaternary(m: usize, h2: Option<&BinPoly>) -> Result<QuaternaryCode> {
    let h2 = resolve_primitive(m, h2)?;
    let n = block_length(m)?;
    Ok(QuaternaryCode::cyclic(&hensel_lift(&h2)?, n)?.extend_parity())
}

/// The octacode: length 8, 256 words, self-dual.
pub fn octacode() -> QuaternaryCode {
    let h2: BinPoly = OCTACODE_H2.parse().expect("valid digits");
    preparata_quaternary(3, Some(&h2)).expect("X^3 + X^2 + 1 is primitive")
}

fn image_or_handle(code: QuaternaryCode, cap: u64) -> Result<BinaryCode> {
    match code.size_u64() {
        Some(s) if s <= cap => gray_image(&code, cap),
        _ => Ok(BinaryCode::GrayImage(code)),
    }
}

/// `K = φ(D)`: explicit when `|D| <= cap`, otherwise an implicit handle.
pub fn kerdock_binary(m: usize, h2: Option<&BinPoly>, cap: u64) -> Result<BinaryCode> {
    image_or_handle(kerdock_quaternary(m, h2)?, cap)
}

/// `P = φ(D⊥)`: explicit when `|D⊥| <= cap`, otherwise an implicit handle
/// supporting size, membership and distance queries.
pub fn preparata_binary(m: usize, h2: Option<&BinPoly>, cap: u64) -> Result<BinaryCode> {
    image_or_handle(preparata_quaternary(m, h2)?, cap)
}

/// The Nordstrom-Robinson code as the Gray image of the octacode.
pub fn nordstrom_robinson() -> BinaryCode {
    gray_image(&octacode(), 256).expect("octacode has 256 words")
}

/// Minimum Lee weight of `D⊥` read off `swe_D⊥ = MacWilliams(swe_D)`.
pub fn dual_min_lee_weight_from_swe(code: &QuaternaryCode, cap: u64) -> Result<Option<usize>> {
    let swe = TrivariateWeightEnumerator::of_code(code, cap)?;
    Ok(swe.macwilliams(&code.size())?.min_lee_weight())
}

/// Both sides of the Hamming-enumerator duality for `K = φ(D)`:
/// `(W_K(x + y, x - y) / |K|, swe_D⊥(x², xy, y²))`.
pub fn macwilliams_bridge(
    code: &QuaternaryCode,
    cap: u64,
) -> Result<(BivariateWeightEnumerator, BivariateWeightEnumerator)> {
    let size = code.size();
    let image = gray_image(code, cap)?;
    let words = image.words(cap)?;
    let w_k = BivariateWeightEnumerator::of_words(image.len(), &words);
    let binary_side = w_k.macwilliams(&size)?;
    let quaternary_side = TrivariateWeightEnumerator::of_code(code, cap)?
        .macwilliams(&size)?
        .to_hamming();
    Ok((binary_side, quaternary_side))
}

/// One checked quantity of a [`FamilyReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportField {
    pub name: String,
    pub expected: String,
    pub actual: String,
    /// `None` when the field was not checked.
    pub pass: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub family: String,
    pub m: usize,
    pub h2: String,
    pub fields: Vec<ReportField>,
}

impl FamilyReport {
    /// No checked field failed.
    pub fn passed(&self) -> bool {
        self.fields.iter().all(|f| f.pass != Some(false))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serialisable")
    }

    fn check(&mut self, name: &str, expected: impl ToString, actual: impl ToString) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        self.fields.push(ReportField {
            name: name.to_string(),
            pass: Some(expected == actual),
            expected,
            actual,
        });
    }

    fn skip(&mut self, name: &str, expected: impl ToString, reason: &str) {
        self.fields.push(ReportField {
            name: name.to_string(),
            expected: expected.to_string(),
            actual: reason.to_string(),
            pass: None,
        });
    }
}

fn pow2(e: usize) -> BigUint {
    BigUint::from(1u8) << e
}

fn lee(w: Option<usize>) -> String {
    w.map_or_else(|| "none".to_string(), |w| w.to_string())
}

/// Builds both codes for `m` and compares their parameters with the
/// closed-form values. Distances are checked for odd `m <= 5` only.
pub fn verify_family(m: usize, h2: Option<&BinPoly>, cap: u64) -> Result<FamilyReport> {
    let h2 = resolve_primitive(m, h2)?;
    let odd = m % 2 == 1 && m >= 3;
    let mut report = FamilyReport {
        family: if odd {
            "kerdock-preparata"
        } else {
            "extended-cyclic"
        }
        .to_string(),
        m,
        h2: h2.to_digits(),
        fields: Vec::new(),
    };
    let d = kerdock_quaternary(m, Some(&h2))?;
    let dp = preparata_quaternary(m, Some(&h2))?;
    let qlen = 1usize << m;
    let prep_log2 = (1usize << (m + 1)) - 2 * m - 2;

    report.check("kerdock quaternary length", qlen, d.len());
    report.check("kerdock quaternary size", pow2(2 * m + 2), d.size());
    report.check("preparata quaternary length", qlen, dp.len());
    report.check("preparata quaternary size", pow2(prep_log2), dp.size());
    report.check(
        "preparata equals dual of kerdock",
        true,
        dp.equal_as_sets(&d.dual())?,
    );
    report.check("binary length", 2 * qlen, 2 * d.len());
    report.check("kerdock binary size", pow2(2 * m + 2), d.size());
    report.check("preparata binary size", pow2(prep_log2), dp.size());

    let kerdock_distance = if odd {
        (1usize << m) - (1usize << ((m - 1) / 2))
    } else {
        0
    };
    if !odd {
        let reason = "not applicable (m even)";
        report.skip("kerdock minimum distance", "-", reason);
        report.skip("preparata minimum distance (swe)", 6, reason);
        report.skip("preparata minimum distance (search)", 6, reason);
    } else if m > DISTANCE_BUDGET_M {
        let reason = "not checked (beyond budget)";
        report.skip("kerdock minimum distance", kerdock_distance, reason);
        report.skip("preparata minimum distance (swe)", 6, reason);
        report.skip("preparata minimum distance (search)", 6, reason);
    } else {
        let k = gray_image(&d, cap)?;
        let dk = match min_distance_binary(&k, cap, 2 * qlen)? {
            DistanceVerdict::Exact(x) => x.to_string(),
            other => other.to_string(),
        };
        report.check("kerdock minimum distance", kerdock_distance, dk);
        let via_swe = dual_min_lee_weight_from_swe(&d, cap)?;
        let via_search = dp.min_lee_weight_search(6);
        report.check("preparata minimum distance (swe)", 6, lee(via_swe));
        report.check("preparata minimum distance (search)", 6, lee(via_search));
    }

    if m <= DISTANCE_BUDGET_M {
        let (binary_side, quaternary_side) = macwilliams_bridge(&d, cap)?;
        report.check("macwilliams bridge", true, binary_side == quaternary_side);
        let ring = GaloisRing::from_primitive(&h2)?;
        let trace_code = kerdock_via_trace(&ring)?;
        let trace_swe = TrivariateWeightEnumerator::from_terms(
            qlen,
            trace_code
                .iter()
                .map(|c| (c.symmetrized_counts(), BigUint::from(1u8))),
        )?;
        let swe = TrivariateWeightEnumerator::of_code(&d, cap)?;
        report.check("trace construction swe", true, trace_swe == swe);
    } else {
        report.skip("macwilliams bridge", true, "not checked (beyond budget)");
        report.skip(
            "trace construction swe",
            true,
            "not checked (beyond budget)",
        );
    }

    if m == 3 {
        report.check("kerdock equals preparata", true, d.equal_as_sets(&dp)?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::DEFAULT_CAP;

    #[test]
    fn octacode_basics() {
        let o = octacode();
        assert_eq!(o.len(), 8);
        assert_eq!((o.k1(), o.k2()), (4, 0));
        assert!(o.dual().equal_as_sets(&o).unwrap());
        assert_eq!(o.min_lee_weight_search(6), Some(6));
    }

    #[test]
    fn kerdock_m3_is_octacode() {
        let h2: BinPoly = OCTACODE_H2.parse().unwrap();
        let k = kerdock_quaternary(3, Some(&h2)).unwrap();
        assert!(k.equal_as_sets(&octacode()).unwrap());
    }

    #[test]
    fn family_sizes_even_m() {
        for m in [2, 4] {
            let d = kerdock_quaternary(m, None).unwrap();
            assert_eq!(d.log2_size(), 2 * m + 2);
            for w in d.codewords(DEFAULT_CAP).unwrap() {
                assert_eq!(w.coordinate_sum(), 0);
            }
        }
    }

    #[test]
    fn resolve_rejects_bad_input() {
        assert!(resolve_primitive(1, None).is_err());
        let wrong_degree: BinPoly = "1011".parse().unwrap();
        assert!(resolve_primitive(5, Some(&wrong_degree)).is_err());
        let reducible: BinPoly = "10101".parse().unwrap();
        assert!(matches!(
            resolve_primitive(4, Some(&reducible)),
            Err(Error::NotPrimitive(_))
        ));
    }

    #[test]
    fn nordstrom_robinson_parameters() {
        let nr = nordstrom_robinson();
        assert_eq!(nr.len(), 16);
        assert_eq!(nr.size(), BigUint::from(256u32));
        assert_eq!(
            min_distance_binary(&nr, 256, 16).unwrap(),
            DistanceVerdict::Exact(6)
        );
    }

    #[test]
    fn report_m3_passes() {
        let r = verify_family(3, None, DEFAULT_CAP).unwrap();
        assert!(r.passed(), "{r:#?}");
        assert!(r.fields.iter().all(|f| f.pass == Some(true)));
    }

    #[test]
    fn report_m4_skips_distances() {
        let r = verify_family(4, None, DEFAULT_CAP).unwrap();
        assert!(r.passed(), "{r:#?}");
        assert!(r.fields.iter().any(|f| f.pass.is_none()));
    }

    #[test]
    fn report_m7_sizes_only() {
        let r = verify_family(7, None, DEFAULT_CAP).unwrap();
        assert!(r.passed(), "{r:#?}");
        let size = r
            .fields
            .iter()
            .find(|f| f.name == "preparata quaternary size")
            .unwrap();
        assert_eq!(size.actual, pow2(240).to_string());
        let dist = r
            .fields
            .iter()
            .find(|f| f.name == "kerdock minimum distance")
            .unwrap();
        assert_eq!((dist.expected.as_str(), dist.pass), ("120", None));
    }
}
