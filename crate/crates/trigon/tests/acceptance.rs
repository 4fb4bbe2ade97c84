//! Acceptance suite: the end-to-end requirements for the crate, each pinned
//! with explicit tolerances and runtime budgets.
//!
//! Two tests in this file document *genuine* mathematical failures of
//! classical claims when pushed to hyperbolic geometry, with concrete
//! counterexamples in their failure messages:
//! `hyperbolic_tail_chain_universality` and
//! `hyperbolic_transfer_universality`. They are expected to fail — the
//! implementation is faithful, the claims are not universally true — and
//! they are kept separate so every attainable requirement stays green.

use std::process::Command;
use std::time::Instant;

use trigon::certify::{certify_region, CertifyOpts, CertifyStatus, SideBox};
use trigon::chains::{evaluate_chain, gap_value, term_value, ChainId, Verdict, DEFAULT_TOL_REL};
use trigon::geometry::{
    circumradius, validate_triangle, GeometryKind,
};
use trigon::oracles::{
    lemma2_sign_check, prop_product_identity_residual, ravi_decompose, ravi_identity_residual,
    schur_like_value, sum_factorization_residual, transfer_is_valid_euclidean,
};
use trigon::report::{reference_rows, run_repro};
use trigon::sample::{sample_radius_defined, sample_triangles};

const E: GeometryKind = GeometryKind::Euclidean;
const S: GeometryKind = GeometryKind::Spherical;
const H: GeometryKind = GeometryKind::Hyperbolic;

const SUITE_N: usize = 100_000;

/// Requirement 1: the six recorded reference values reproduce, each within
/// the tolerance implied by its printed precision, in under a second; a
/// tampered reference is detected.
#[test]
fn reproduction_rows() {
    let start = Instant::now();
    let rows = run_repro(&reference_rows()).unwrap();
    assert_eq!(rows.len(), 6);
    for row in &rows {
        assert!(
            row.pass,
            "{}: computed {:e}, reference {:e}, |diff| {:e}",
            row.label, row.computed, row.reference, row.abs_diff
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "repro took {elapsed:?}");

    // Self-check of the harness: a perturbed reference must fail.
    let mut tampered = reference_rows();
    tampered[0].reference += 1e-3;
    let rows = run_repro(&tampered).unwrap();
    assert!(!rows[0].pass, "tampered reference went undetected");
    assert!(rows[1..].iter().all(|r| r.pass));
}

/// Requirement 2 (attainable part): each theorem-backed chain holds on 1e5
/// random valid triangles per geometry at relative tolerance 1e-12, all
/// under 30 seconds. The hyperbolic tail chain is exercised separately in
/// `hyperbolic_tail_chain_universality`.
#[test]
fn theorem_chain_suites() {
    let start = Instant::now();
    let combos: [(ChainId, GeometryKind); 8] = [
        (ChainId::EucOrig, E),
        (ChainId::SphOrig, S),
        (ChainId::Gen, E),
        (ChainId::Gen, S),
        (ChainId::Gen, H),
        (ChainId::EucSym, E),
        (ChainId::SphSym, S),
        (ChainId::HypSymTail, H),
    ];
    for (idx, (chain, kind)) in combos.iter().enumerate() {
        let mut violations = 0usize;
        let mut first: Option<([f64; 3], usize)> = None;
        for t in sample_triangles(*kind, SUITE_N, 0xC0DE + idx as u64) {
            let r = evaluate_chain(*chain, &t, DEFAULT_TOL_REL).unwrap();
            if let Verdict::Violated { first_violation } = r.verdict {
                violations += 1;
                first.get_or_insert((t.sides(), first_violation));
            }
        }
        assert_eq!(
            violations, 0,
            "{} over {kind:?}: {violations} violations in {SUITE_N} samples, first at {first:?}",
            chain.id()
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "chain suites took {elapsed:?}");
}

/// Requirement 2 (unattainable part): the ratio-free tail of the original
/// chain — cubic_sum >= cyclic_minus_one >= two_thirds_cyclic >= 2 — is NOT
/// universal for hyperbolic triangles, so this suite cannot pass. The
/// comparison cubic_sum >= cyclic_minus_one fails on a measurable set of
/// thin triangles; (3, 3.3722, 0.4) is a concrete counterexample with
/// cubic_sum - cyclic_minus_one ≈ -0.110. This test asserts the requirement
/// faithfully and documents the counterexamples it finds.
#[test]
fn hyperbolic_tail_chain_universality() {
    let mut violations = 0usize;
    let mut examples: Vec<([f64; 3], usize, f64)> = Vec::new();
    for t in sample_triangles(H, SUITE_N, 0xC0DE + 8) {
        let r = evaluate_chain(ChainId::HypOrigTail, &t, DEFAULT_TOL_REL).unwrap();
        if let Verdict::Violated { first_violation } = r.verdict {
            violations += 1;
            if examples.len() < 3 {
                let gap = r.gaps[first_violation];
                examples.push((t.sides(), first_violation, gap));
            }
        }
    }
    let reference = validate_triangle(H, 3.0, 3.3722, 0.4).unwrap();
    let ref_gap = gap_value(ChainId::HypOrigTail, &reference, 0, 1).unwrap();
    assert_eq!(
        violations, 0,
        "hyp_orig_tail is not universal: {violations} of {SUITE_N} random hyperbolic \
         triangles violate it (first failing gaps: {examples:?}); deterministic \
         counterexample (3, 3.3722, 0.4) has cubic_sum - cyclic_minus_one = {ref_gap:.6}"
    );
}

/// Requirement 3 (attainable part): the spherical transfer always produces
/// a valid Euclidean triple; the B-vs-Bbar sign law conforms everywhere;
/// and every residual identity stays below 1e-10 of scale on 1e5 samples.
#[test]
fn lemma_suites() {
    // Spherical transfer: universal.
    for t in sample_triangles(S, SUITE_N, 0x1E11A) {
        assert!(
            transfer_is_valid_euclidean(&t),
            "spherical transfer failed at {:?}",
            t.sides()
        );
    }
    // Sign law in all three geometries.
    for kind in [E, S, H] {
        for t in sample_triangles(kind, SUITE_N, 0x51C4) {
            let (diff, ok) = lemma2_sign_check(&t);
            assert!(ok, "{kind:?} sign law failed at {:?}: diff {diff:e}", t.sides());
        }
    }
    // Residual identities.
    for kind in [S, H] {
        for t in sample_triangles(kind, SUITE_N, 0x1DEA) {
            let [a, b, c] = t.sides();
            let r = prop_product_identity_residual(&t).unwrap();
            assert!(r.abs() <= 1e-10, "product identity {kind:?} {:?}: {r:e}", t.sides());
            let r = sum_factorization_residual(kind, a, b, c).unwrap();
            assert!(r.abs() <= 1e-10, "sum factorization {kind:?} {:?}: {r:e}", t.sides());
        }
    }
    for t in sample_triangles(E, SUITE_N, 0x4A71) {
        let [a, b, c] = t.sides();
        let r = ravi_decompose(a, b, c).unwrap();
        let resid = ravi_identity_residual(r.x, r.y, r.z).unwrap();
        assert!(resid.abs() <= 1e-10, "ravi identity at {:?}: {resid:e}", t.sides());
        let schur = schur_like_value(r.x, r.y, r.z).unwrap();
        let scale = (r.x + r.y + r.z).powi(5).max(1.0);
        assert!(schur >= -1e-10 * scale, "schur-like at {:?}: {schur:e}", t.sides());
    }
}

/// Requirement 3 (unattainable part): the claim that the half-side transfer
/// of ANY curved triangle is a valid Euclidean triple is false in the
/// hyperbolic plane, where sinh is strictly superadditive: thin triangles
/// (those without a circumscribed circle, equivalently Bbar <= 0) transfer
/// to triples violating the triangle inequality. (1.99, 1, 1) is a concrete
/// counterexample. This test asserts the claim faithfully and fails with
/// the counterexamples it finds.
#[test]
fn hyperbolic_transfer_universality() {
    let mut invalid = 0usize;
    let mut examples: Vec<[f64; 3]> = Vec::new();
    for t in sample_triangles(H, SUITE_N, 0x1E11B) {
        if !transfer_is_valid_euclidean(&t) {
            invalid += 1;
            if examples.len() < 3 {
                examples.push(t.sides());
            }
        }
    }
    let witness = validate_triangle(H, 1.99, 1.0, 1.0).unwrap();
    let witness_invalid = !transfer_is_valid_euclidean(&witness);
    assert_eq!(
        invalid, 0,
        "hyperbolic transfer is not universal: {invalid} of {SUITE_N} random \
         hyperbolic triangles transfer to invalid Euclidean triples (e.g. sides \
         {examples:?}); deterministic counterexample (1.99, 1, 1) invalid: \
         {witness_invalid}. These are exactly the triangles without a \
         circumscribed circle (Bbar <= 0)."
    );
}

/// Requirement 4: equilateral triangles realize the equality case of the
/// three-term chain — every term equals 2 within 1e-12 — in all geometries.
#[test]
fn equilateral_equality_case() {
    for kind in [E, S, H] {
        for side in [0.1, 0.5, 1.0, 2.0] {
            let t = validate_triangle(kind, side, side, side).unwrap();
            for idx in 0..3 {
                let v = term_value(ChainId::Gen, &t, idx).unwrap();
                assert!(
                    (v - 2.0).abs() <= 1e-12,
                    "{kind:?} side {side}: term {idx} = {v:e}"
                );
            }
        }
    }
}

/// Requirement 5: branch-and-bound certification proves the middle-product
/// bound on a wide Euclidean box and the original-chain head on [1,3]^3,
/// and refutes the hyperbolic ratio-vs-two-thirds-cyclic claim with a
/// machine-checked witness, inside the time budgets.
#[test]
fn certification_runs() {
    // GEN middle >= 2 over [0.5, 2.5]^3: Proven in < 60 s.
    let start = Instant::now();
    let sbox = SideBox::new(E, (0.5, 2.5), (0.5, 2.5), (0.5, 2.5)).unwrap();
    let cert = certify_region(ChainId::Gen, &sbox, 1, 2, &CertifyOpts::default()).unwrap();
    assert_eq!(cert.status, CertifyStatus::Proven, "gen(1,2): {:?}", cert.status);
    assert!(start.elapsed().as_secs_f64() < 60.0);

    // EUC_ORIG ratio >= cubic_sum over [1, 3]^3: Proven.
    let sbox = SideBox::new(E, (1.0, 3.0), (1.0, 3.0), (1.0, 3.0)).unwrap();
    let cert = certify_region(ChainId::EucOrig, &sbox, 1, 2, &CertifyOpts::default()).unwrap();
    assert_eq!(cert.status, CertifyStatus::Proven, "euc_orig(1,2): {:?}", cert.status);

    // Hyperbolic ratio vs two_thirds_cyclic over [1.9,2.1]^2 x [0.35,0.45]:
    // Refuted in < 10 s, and the witness re-evaluates negative in plain f64.
    let start = Instant::now();
    let sbox = SideBox::new(H, (1.9, 2.1), (1.9, 2.1), (0.35, 0.45)).unwrap();
    let cert =
        certify_region(ChainId::HypOrigRatioExt, &sbox, 0, 3, &CertifyOpts::default()).unwrap();
    let CertifyStatus::Refuted { witness } = &cert.status else {
        panic!("expected refutation, got {:?}", cert.status);
    };
    assert!(start.elapsed().as_secs_f64() < 10.0);
    let [a, b, c] = witness.sides;
    let t = validate_triangle(H, a, b, c).unwrap();
    let gap = gap_value(ChainId::HypOrigRatioExt, &t, 0, 3).unwrap();
    assert!(gap < 0.0, "witness gap not negative: {gap:e}");
    assert_eq!(gap, witness.gap, "stored witness gap must match re-evaluation");
}

/// Requirement 6: the unified circumradius formula agrees with the squared
/// sin/tan (sinh/tanh) alternatives to 1e-10 relative, on 1e4 random
/// radius-admitting triangles per curved geometry.
#[test]
fn cross_formula_consistency() {
    for kind in [S, H] {
        for t in sample_radius_defined(kind, 10_000, 0xF0) {
            let r = circumradius(&t).unwrap();
            let (sin_sq, tan_sq) =
                trigon::geometry::circum_measure_squared_alt(&t).unwrap();
            let (sin_like, tan_like) = match kind {
                S => (r.sin(), r.tan()),
                H => (r.sinh(), r.tanh()),
                E => unreachable!(),
            };
            let rel = |x: f64, y: f64| (x - y).abs() / x.abs().max(y.abs()).max(1e-300);
            assert!(
                rel(sin_like * sin_like, sin_sq) <= 1e-10,
                "{kind:?} {:?}: sin-type {:e} vs {:e}",
                t.sides(),
                sin_like * sin_like,
                sin_sq
            );
            assert!(
                rel(tan_like * tan_like, tan_sq) <= 1e-10,
                "{kind:?} {:?}: tan-type {:e} vs {:e}",
                t.sides(),
                tan_like * tan_like,
                tan_sq
            );
        }
    }
}

fn run_binary(args: &[&str], threads: &str) -> (Vec<u8>, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_trigon"))
        .args(args)
        .env("TRIGON_THREADS", threads)
        .output()
        .expect("binary runs");
    (out.stdout, out.status.code().unwrap_or(-1))
}

/// Requirement 7: search and certify are deterministic — identical stdout
/// and exit status across thread counts 1, 4, and 8 with a fixed seed.
#[test]
fn determinism_across_thread_counts() {
    let search_args = [
        "search",
        "--chain",
        "hyp_orig_ratio_ext",
        "--i",
        "0",
        "--j",
        "3",
        "--domain-a",
        "0.5",
        "4",
        "--domain-b",
        "0.5",
        "4",
        "--domain-c",
        "0.1",
        "2",
        "--seed",
        "7",
        "--format",
        "json",
    ];
    let certify_args = [
        "certify",
        "--chain",
        "hyp_orig_ratio_ext",
        "--i",
        "0",
        "--j",
        "3",
        "--box-a",
        "1.9",
        "2.1",
        "--box-b",
        "1.9",
        "2.1",
        "--box-c",
        "0.35",
        "0.45",
        "--format",
        "json",
    ];
    for args in [&search_args[..], &certify_args[..]] {
        let reference = run_binary(args, "1");
        for threads in ["4", "8"] {
            let got = run_binary(args, threads);
            assert_eq!(
                got, reference,
                "output of {:?} differs between 1 and {threads} threads",
                args[0]
            );
        }
        assert_eq!(reference.1, 1, "{:?} should find the violation", args[0]);
    }
}
