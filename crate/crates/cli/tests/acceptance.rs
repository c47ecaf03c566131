//! Acceptance suite: twelve criteria, one PASS/FAIL line each, with wall
//! clock bounds. All comparisons are exact.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use z4codes::families::{
    dual_min_lee_weight_from_swe, kerdock_binary, kerdock_quaternary, macwilliams_bridge,
    nordstrom_robinson, octacode, preparata_binary, preparata_quaternary,
};
use z4codes::galois::kerdock_via_trace;
use z4codes::gray::{
    gray_image, gray_image_linear_span, gray_map, image_is_linear, is_distance_invariant,
    min_distance_binary, reed_muller, swap_condition_holds, DistanceVerdict,
};
use z4codes::poly::{generator_poly_g, hensel_lift};
use z4codes::{
    BinPoly, BinaryVector, BivariateWeightEnumerator, GaloisRing, QuaternaryCode,
    TrivariateWeightEnumerator, Z4Poly, Z4Vector, DEFAULT_CAP,
};

type Outcome = Result<(), String>;

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(what: &str, expected: T, actual: T) -> Outcome {
    ensure(expected == actual, || {
        format!("{what}: expected {expected:?}, got {actual:?}")
    })
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn poly(s: &str) -> BinPoly {
    s.parse().expect("valid digit string")
}

fn pow2(e: usize) -> BigUint {
    BigUint::from(1u8) << e
}

fn c1_lift() -> Outcome {
    eq(
        "lift(1011)",
        "3231".to_string(),
        ok(hensel_lift(&poly("1011")))?.to_digits(),
    )?;
    eq(
        "lift(101001)",
        "323001".to_string(),
        ok(hensel_lift(&poly("101001")))?.to_digits(),
    )
}

fn c2_genpoly() -> Outcome {
    let h = ok(hensel_lift(&poly("101001")))?;
    let g = ok(generator_poly_g(&h, 5))?;
    eq("g", "11120122010303133013212213".to_string(), g.to_digits())
}

fn c3_octacode() -> Outcome {
    let o = octacode();
    eq("length", 8, o.len())?;
    eq("size", BigUint::from(256u32), o.size())?;
    eq("self-dual", true, ok(o.equal_as_sets(&o.dual()))?)?;
    let image = ok(gray_image(&o, DEFAULT_CAP))?;
    eq(
        "Gray image distance",
        DistanceVerdict::Exact(6),
        ok(min_distance_binary(&image, DEFAULT_CAP, 16))?,
    )?;
    let swe = ok(TrivariateWeightEnumerator::of_code(&o, DEFAULT_CAP))?;
    eq(
        "swe fixed by transform",
        &swe,
        &ok(swe.macwilliams(&o.size()))?,
    )
}

fn c4_nordstrom_robinson() -> Outcome {
    let nr = nordstrom_robinson();
    eq("length", 16, nr.len())?;
    eq("size", BigUint::from(256u32), nr.size())?;
    eq(
        "distance",
        DistanceVerdict::Exact(6),
        ok(min_distance_binary(&nr, DEFAULT_CAP, 16))?,
    )?;
    eq(
        "distance invariant",
        true,
        ok(is_distance_invariant(&nr, DEFAULT_CAP))?,
    )?;
    let hwe = BivariateWeightEnumerator::of_words(16, &ok(nr.words(DEFAULT_CAP))?);
    let from_swe = ok(TrivariateWeightEnumerator::of_code(
        &octacode(),
        DEFAULT_CAP,
    ))?
    .to_hamming();
    eq("hwe from swe", &from_swe, &hwe)?;
    eq(
        "hwe fixed by transform",
        &hwe,
        &ok(hwe.macwilliams(&nr.size()))?,
    )
}

fn c5_kerdock_m5() -> Outcome {
    let d = ok(kerdock_quaternary(5, Some(&poly("101001"))))?;
    eq("quaternary length", 32, d.len())?;
    eq("quaternary size", BigUint::from(4096u32), d.size())?;
    let k = ok(kerdock_binary(5, Some(&poly("101001")), DEFAULT_CAP))?;
    eq("binary length", 64, k.len())?;
    eq("binary size", BigUint::from(4096u32), k.size())?;
    eq(
        "distance",
        DistanceVerdict::Exact(28),
        ok(min_distance_binary(&k, DEFAULT_CAP, 64))?,
    )
}

fn c6_preparata_m5() -> Outcome {
    let h2 = poly("101001");
    let d = ok(kerdock_quaternary(5, Some(&h2)))?;
    let p = ok(preparata_quaternary(5, Some(&h2)))?;
    eq("P equals dual of K", true, ok(p.equal_as_sets(&d.dual()))?)?;
    eq("size", pow2(52), p.size())?;
    eq("k", 2 * 32 - 2 * 5 - 2, p.log2_size())?;
    let via_swe = ok(dual_min_lee_weight_from_swe(&d, DEFAULT_CAP))?;
    let via_search = p.min_lee_weight_by_syndrome(6);
    eq("Lee weight via swe", Some(6), via_swe)?;
    eq("Lee weight via search", Some(6), via_search)?;
    eq("routes agree", via_swe, via_search)
}

fn c7_bridge() -> Outcome {
    for (m, h2) in [(3, "1011"), (5, "101001")] {
        let d = ok(kerdock_quaternary(m, Some(&poly(h2))))?;
        let (binary_side, quaternary_side) = ok(macwilliams_bridge(&d, DEFAULT_CAP))?;
        eq(&format!("bridge m={m}"), quaternary_side, binary_side)?;
    }
    Ok(())
}

fn c8_linear_span() -> Outcome {
    let p = ok(preparata_quaternary(5, Some(&poly("101001"))))?;
    let span = gray_image_linear_span(&p);
    let n = span.len();
    eq("span length", 64, n)?;
    let mut weight1 = 0;
    for i in 0..n {
        let mut v = BinaryVector::zeros(n);
        v.set(i, true);
        weight1 += usize::from(ok(span.contains(&v))?);
    }
    let mut weight2 = 0;
    let mut candidates = 0;
    for i in 0..n {
        for j in i + 1..n {
            let mut v = BinaryVector::zeros(n);
            v.set(i, true);
            v.set(j, true);
            candidates += 1;
            weight2 += usize::from(ok(span.contains(&v))?);
        }
    }
    eq("weight-2 candidates", 2016, candidates)?;
    eq("weight-1 members", 0, weight1)?;
    ensure(weight2 > 0, || "no weight-2 member".into())?;
    eq("search agrees", Some(2), span.min_weight_search(2))
}

fn c9_m3_coincidence() -> Outcome {
    let h2 = poly("1011");
    let k = ok(kerdock_binary(3, Some(&h2), DEFAULT_CAP))?;
    let p = ok(preparata_binary(3, Some(&h2), DEFAULT_CAP))?;
    eq("K = P", true, ok(k.equal_as_sets(&p, DEFAULT_CAP))?)
}

fn c10_swap() -> Outcome {
    for m in 2..=6 {
        for r in [0, 1, 2, m - 1, m] {
            let rm = ok(reed_muller(r, m))?;
            eq(
                &format!("RM({r},{m})"),
                true,
                ok(swap_condition_holds(&rm))?,
            )?;
        }
    }
    eq(
        "RM(3,6)",
        false,
        ok(swap_condition_holds(&ok(reed_muller(3, 6))?))?,
    )
}

fn random_vector(rng: &mut StdRng, n: usize) -> Z4Vector {
    Z4Vector::new((0..n).map(|_| rng.gen_range(0..4)).collect())
}

fn random_code(rng: &mut StdRng, max_n: usize) -> Result<QuaternaryCode, String> {
    let n = rng.gen_range(1..=max_n);
    let rows = rng.gen_range(0..=4);
    ok(QuaternaryCode::from_rows(
        n,
        (0..rows).map(|_| random_vector(rng, n)).collect(),
    ))
}

fn all_vectors(n: usize) -> Vec<Z4Vector> {
    (0..1usize << (2 * n))
        .map(|i| Z4Vector::new((0..n).map(|k| ((i >> (2 * k)) & 3) as u8).collect()))
        .collect()
}

fn c11_properties() -> Outcome {
    let mut rng = StdRng::seed_from_u64(2024);
    for n in 1..=4 {
        let vs = all_vectors(n);
        for a in &vs {
            for b in &vs {
                let (d, w) = (gray_map(a).distance(&gray_map(b)), a.sub(b).lee_weight());
                ensure(d == w, || format!("isometry fails at {a}, {b}"))?;
            }
        }
    }
    for _ in 0..10_000 {
        let (a, b) = (random_vector(&mut rng, 32), random_vector(&mut rng, 32));
        let (d, w) = (gray_map(&a).distance(&gray_map(&b)), a.sub(&b).lee_weight());
        ensure(d == w, || format!("isometry fails at {a}, {b}"))?;
    }
    for _ in 0..100 {
        let d = random_code(&mut rng, 8)?;
        let dual = d.dual();
        eq("|D||D⊥|", 2 * d.len(), d.log2_size() + dual.log2_size())?;
        eq("dual involution", true, ok(dual.dual().equal_as_sets(&d))?)?;
    }
    for _ in 0..100 {
        let d = random_code(&mut rng, 6)?;
        let swe = ok(TrivariateWeightEnumerator::of_code(&d, DEFAULT_CAP))?;
        let transformed = ok(swe.macwilliams(&d.size()))?;
        let dual_swe = ok(TrivariateWeightEnumerator::of_code(&d.dual(), DEFAULT_CAP))?;
        eq("transform of swe(D) = swe(D⊥)", &dual_swe, &transformed)?;
        eq(
            "involution",
            &swe,
            &ok(transformed.macwilliams(&d.dual().size()))?,
        )?;
    }
    for n in 1..=4usize {
        for g in 0..1usize << (2 * n) {
            let g = Z4Poly::new((0..n).map(|k| ((g >> (2 * k)) & 3) as u8));
            let d = ok(QuaternaryCode::cyclic(&g, n))?;
            let words = ok(ok(gray_image(&d, DEFAULT_CAP))?.words(DEFAULT_CAP))?;
            let set: BTreeSet<&BinaryVector> = words.iter().collect();
            let closed = words
                .iter()
                .all(|a| words.iter().all(|b| set.contains(&a.xor(b))));
            eq(
                &format!("image linearity g={g} n={n}"),
                closed,
                image_is_linear(&d),
            )?;
        }
    }
    Ok(())
}

fn c12_trace() -> Outcome {
    let mut rng = StdRng::seed_from_u64(12);
    for (m, h2) in [(3, "1011"), (5, "101001")] {
        let ring = ok(GaloisRing::from_primitive(&poly(h2)))?;
        let words = ok(kerdock_via_trace(&ring))?;
        let trace_swe = ok(TrivariateWeightEnumerator::from_terms(
            1 << m,
            words
                .iter()
                .map(|w| (w.symmetrized_counts(), BigUint::from(1u8))),
        ))?;
        let d = ok(kerdock_quaternary(m, Some(&poly(h2))))?;
        let swe = ok(TrivariateWeightEnumerator::of_code(&d, DEFAULT_CAP))?;
        eq(&format!("trace swe m={m}"), &swe, &trace_swe)?;
        let distinct: BTreeSet<&Z4Vector> = words.iter().collect();
        eq("trace code size", d.size(), BigUint::from(distinct.len()))?;

        let random = |rng: &mut StdRng| {
            let c: Vec<u8> = (0..m).map(|_| rng.gen_range(0..4)).collect();
            ring.element(&c).expect("m coordinates")
        };
        for _ in 0..100 {
            let (a, b, c) = (random(&mut rng), random(&mut rng), rng.gen_range(0..4u8));
            let ab = ok(a.mul(&b))?;
            eq(
                "σ(ab)",
                ab.frobenius(),
                ok(a.frobenius().mul(&b.frobenius()))?,
            )?;
            eq(
                "σ(a+b)",
                ok(a.add(&b))?.frobenius(),
                ok(a.frobenius().add(&b.frobenius()))?,
            )?;
            let mut x = a.clone();
            for _ in 0..m {
                x = x.frobenius();
            }
            eq("σ^m", &a, &x)?;
            let (ta, tb) = (ok(a.trace())?, ok(b.trace())?);
            eq("Tr(a+b)", (ta + tb) % 4, ok(ok(a.add(&b))?.trace())?)?;
            eq("Tr(ca)", (c * ta) % 4, ok(a.scale(c).trace())?)?;
        }
        for c in 0..4 {
            eq("σ fixes Z4", ring.constant(c), ring.constant(c).frobenius())?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    type Criterion = (&'static str, Duration, fn() -> Outcome);
    let criteria: [Criterion; 12] = [
        (
            "Hensel lift golden values",
            Duration::from_millis(1),
            c1_lift,
        ),
        (
            "generator polynomial golden value",
            Duration::from_millis(10),
            c2_genpoly,
        ),
        ("octacode", Duration::from_secs(1), c3_octacode),
        (
            "Nordstrom-Robinson",
            Duration::from_secs(1),
            c4_nordstrom_robinson,
        ),
        ("Kerdock m=5", Duration::from_secs(30), c5_kerdock_m5),
        ("Preparata m=5", Duration::from_secs(600), c6_preparata_m5),
        (
            "MacWilliams bridge m=3,5",
            Duration::from_secs(10),
            c7_bridge,
        ),
        (
            "linear span of Preparata m=5",
            Duration::from_secs(1),
            c8_linear_span,
        ),
        (
            "Kerdock = Preparata at m=3",
            Duration::from_secs(1),
            c9_m3_coincidence,
        ),
        (
            "swap condition on Reed-Muller codes",
            Duration::from_secs(5),
            c10_swap,
        ),
        ("property suites", Duration::from_secs(60), c11_properties),
        ("trace cross-validation", Duration::from_secs(30), c12_trace),
    ];
    let mut failures = 0;
    for (i, (name, bound, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let outcome = match result {
            Ok(()) if elapsed <= *bound => Ok(()),
            Ok(()) => Err(format!("took {elapsed:?}, bound {bound:?}")),
            Err(e) => Err(e),
        };
        match outcome {
            Ok(()) => println!(
                "criterion {:2} PASS  {name} ({elapsed:.2?} <= {bound:?})",
                i + 1
            ),
            Err(e) => {
                failures += 1;
                println!("criterion {:2} FAIL  {name} ({elapsed:.2?}): {e}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
