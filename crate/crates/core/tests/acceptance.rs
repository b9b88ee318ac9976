//! Acceptance suite: the end-to-end checks this artifact must pass, run in
//! one sequential test so the wall-clock budget covers everything. Each
//! criterion prints a PASS line (`--nocapture` to see them live).
//!
//! Independent oracles used here and nowhere in the library:
//! - a valence-band Berry-phase (plaquette field strength) Chern number for
//!   the two-band models, and
//! - closed-form expectations for the clock/shift algebra.

use anyon_core::algebra::{AlgebraElement, Coeff, GroupWord, SL2Z};
use anyon_core::band::convention::{QWZ_DEGREE_AT_M_PLUS_1, VALENCE_CHERN_SIGN};
use anyon_core::band::{hopf_degree, sample_model, TwoBandModel};
use anyon_core::braid::BraidWord;
use anyon_core::link::{
    detect_format, parse_gauss_code, parse_link_text, CrossingRecord, FramedLinkDiagram,
    LinkFormat, Sign,
};
use anyon_core::rep::{build_rep, find_intertwiner, modular_relations, Level, Sector};
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::time::Instant;

#[test]
fn acceptance_criteria() {
    let suite_start = Instant::now();
    criterion_1_fig3_links();
    criterion_2_defining_relation();
    criterion_3_algebra_exactness();
    criterion_4_representation_homomorphism();
    criterion_5_modular_data();
    criterion_6_braid_link_consistency();
    criterion_7_chern_degrees();
    criterion_8_expectation_properties();
    let elapsed = suite_start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 60.0,
        "criterion 9 FAIL: suite took {elapsed:?}"
    );
    println!("criterion 9 PASS: full suite in {elapsed:?} (< 60 s)");
}

fn load_shipped(name: &str) -> FramedLinkDiagram {
    let path = format!("{}/../cli/examples/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("cannot read shipped example {path}: {e}"));
    match detect_format(&text).unwrap() {
        LinkFormat::CrossingList => parse_link_text(&text).unwrap(),
        LinkFormat::GaussCode => parse_gauss_code(&text).unwrap(),
    }
}

fn criterion_1_fig3_links() {
    let cases = [
        ("fig3_left.lnk", -2i64),
        ("fig3_trefoil.gauss", 3),
        ("fig3_fig8.gauss", 0),
    ];
    for (file, expected) in cases {
        let got = load_shipped(file).invariants().unwrap().total_crossing_number;
        assert_eq!(got, expected, "criterion 1 FAIL: {file}");
    }
    println!("criterion 1 PASS: shipped links give #L = -2, +3, 0");
}

fn criterion_2_defining_relation() {
    let start = Instant::now();
    let mut worst_relation = 0.0f64;
    let mut worst_unitarity = 0.0f64;
    for k in 1..=32 {
        let rep = build_rep(Level::new(k).unwrap(), Sector::zero());
        worst_relation = worst_relation.max(rep.uv_relation_residual());
        worst_unitarity = worst_unitarity
            .max(rep.u().unitarity_residual())
            .max(rep.v().unitarity_residual());
    }
    let elapsed = start.elapsed();
    assert!(worst_relation < 1e-12, "criterion 2 FAIL: UV-qVU residual {worst_relation:e}");
    assert!(worst_unitarity < 1e-9, "criterion 2 FAIL: unitarity {worst_unitarity:e}");
    assert!(elapsed.as_secs_f64() < 1.0, "criterion 2 FAIL: took {elapsed:?}");
    println!(
        "criterion 2 PASS: K=1..32 max|UV-qVU| = {worst_relation:.2e}, \
         unitarity {worst_unitarity:.2e}, in {elapsed:?}"
    );
}

fn random_word(rng: &mut StdRng, span: i64) -> GroupWord {
    GroupWord::new(
        rng.gen_range(-span..=span),
        rng.gen_range(-span..=span),
        rng.gen_range(-span..=span),
    )
}

fn random_element(rng: &mut StdRng) -> AlgebraElement {
    let mut e = AlgebraElement::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let coeff = Coeff::from_integer(rng.gen_range(-9..=9))
            + Coeff::from_integer(rng.gen_range(-9..=9))
                * Coeff::Exact(anyon_core::algebra::GaussianRational::i());
        e = e.add(&AlgebraElement::from_term(random_word(rng, 6), coeff));
    }
    e
}

fn random_modular(rng: &mut StdRng) -> SL2Z {
    let mut g = SL2Z::IDENTITY;
    for _ in 0..rng.gen_range(0..=6) {
        let factor = match rng.gen_range(0..4) {
            0 => SL2Z::S,
            1 => SL2Z::T,
            2 => SL2Z::S.inverse(),
            _ => SL2Z::T.inverse(),
        };
        g = g.compose(&factor).unwrap();
    }
    g
}

fn criterion_3_algebra_exactness() {
    let mut rng = StdRng::seed_from_u64(1001);
    for _ in 0..200 {
        let (x, y, z) = (random_element(&mut rng), random_element(&mut rng), random_element(&mut rng));
        let left = x.mul(&y).unwrap().mul(&z).unwrap();
        let right = x.mul(&y.mul(&z).unwrap()).unwrap();
        assert_eq!(left, right, "criterion 3 FAIL: associativity");
    }
    for _ in 0..200 {
        let g = random_modular(&mut rng);
        let (x, y) = (random_element(&mut rng), random_element(&mut rng));
        let lhs = g.act(&x.mul(&y).unwrap()).unwrap();
        let rhs = g.act(&x).unwrap().mul(&g.act(&y).unwrap()).unwrap();
        assert_eq!(lhs, rhs, "criterion 3 FAIL: substitution automorphism for {g}");
    }
    for _ in 0..100 {
        let (x, y) = (random_element(&mut rng), random_element(&mut rng));
        let image_product = x.mul(&y).unwrap().stabilize();
        let of_images = x.stabilize().mul(&y.stabilize()).unwrap().stabilize();
        assert_eq!(image_product, of_images, "criterion 3 FAIL: stabilize homomorphism");
    }
    println!("criterion 3 PASS: 200 associativity + 200 automorphism + 100 stabilize cases, exact");
}

fn criterion_4_representation_homomorphism() {
    let mut rng = StdRng::seed_from_u64(1002);
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let k = rng.gen_range(1u32..=16);
        let rep = build_rep(Level::new(k).unwrap(), Sector::zero());
        let (w1, w2) = (random_word(&mut rng, 8), random_word(&mut rng, 8));
        let lhs = rep.word_matrix(&w1.mul(&w2).unwrap());
        let rhs = rep.word_matrix(&w1).mul(&rep.word_matrix(&w2));
        worst = worst.max(lhs.sub(&rhs).max_abs());
    }
    assert!(worst < 1e-9, "criterion 4 FAIL: residual {worst:e}");
    println!("criterion 4 PASS: 200 random word pairs, K<=16, residual {worst:.2e}");
}

fn criterion_5_modular_data() {
    for k in [1u32, 2, 4, 6, 8, 12] {
        let rep = build_rep(Level::new(k).unwrap(), Sector::zero());
        let s = find_intertwiner(&rep, &SL2Z::S)
            .found()
            .unwrap_or_else(|| panic!("criterion 5 FAIL: no S intertwiner at K={k}"))
            .clone();
        assert!(s.residual < 1e-9, "criterion 5 FAIL: S residual {0:e} at K={k}", s.residual);
        let t_outcome = find_intertwiner(&rep, &SL2Z::T);
        if t_outcome.found().is_some() {
            let report = modular_relations(&rep).expect("both intertwiners exist");
            assert!(
                report.s_fourth.residual < 1e-9,
                "criterion 5 FAIL: S^4 residual {:e} at K={k}",
                report.s_fourth.residual
            );
            assert!(
                report.st_cubed.residual < 1e-9,
                "criterion 5 FAIL: (S T)^3 residual {:e} at K={k}",
                report.st_cubed.residual
            );
            println!(
                "criterion 5: K={k} S ok ({:.1e}); T ok, mu=[{:.3}, {:.3}]; \
                 S^4 phase {:.4}, (S T)^3 phase {:.4}",
                s.residual,
                report.t.mu[0],
                report.t.mu[1],
                report.s_fourth.phase,
                report.st_cubed.phase
            );
        } else {
            println!("criterion 5: K={k} S ok ({:.1e}); T absent on sector (0,0)", s.residual);
        }
    }
    // Odd levels: outcomes are recorded, not asserted.
    for k in [3u32, 5, 7] {
        let rep = build_rep(Level::new(k).unwrap(), Sector::zero());
        match find_intertwiner(&rep, &SL2Z::T) {
            outcome if outcome.found().is_some() => {
                let i = outcome.found().unwrap();
                println!(
                    "criterion 5 (record): K={k} T intertwiner exists with central phase \
                     mu=[{:.4}, {:.4}]",
                    i.mu[0], i.mu[1]
                );
            }
            _ => {
                println!("criterion 5 (record): K={k} T intertwiner absent on sector (0,0)");
            }
        }
    }
    println!("criterion 5 PASS: modular data for K in {{1,2,4,6,8,12}}, odd-K outcomes recorded");
}

fn criterion_6_braid_link_consistency() {
    let mut rng = StdRng::seed_from_u64(1003);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let strands = rng.gen_range(1usize..=5);
        let length = if strands == 1 { 0 } else { rng.gen_range(0..=20) };
        let letters: Vec<i32> = (0..length)
            .map(|_| {
                let k = rng.gen_range(1..strands as i32);
                if rng.gen_bool(0.5) {
                    k
                } else {
                    -k
                }
            })
            .collect();
        let word = BraidWord::new(strands, letters).unwrap();
        let closure_invariants = word.closure().invariants().unwrap();
        for k in [2.0, 3.0, 4.0, 5.0] {
            let phase = word.abelian_phase(k).unwrap();
            let expectation = closure_invariants.expectation(k).unwrap();
            worst = worst.max((phase - expectation).norm());
        }
    }
    assert!(worst < 1e-12, "criterion 6 FAIL: max deviation {worst:e}");
    println!("criterion 6 PASS: 100 braids x K in {{2,3,4,5}}, max deviation {worst:.2e}");
}

/// Valence-band Chern number from plaquette Berry phases, the band oracle.
fn berry_phase_chern(m: f64, n: usize) -> f64 {
    let tau = std::f64::consts::TAU;
    let lower_state = |jx: usize, jy: usize| -> [Complex64; 2] {
        let kx = tau * jx as f64 / n as f64;
        let ky = tau * jy as f64 / n as f64;
        let d = [kx.sin(), ky.sin(), m + kx.cos() + ky.cos()];
        let r = (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt();
        // Eigenvector of d·σ with eigenvalue −r, gauge chosen away from its
        // pole; per-point gauge does not matter for the plaquette product.
        let (a, b) = if d[2] <= 0.0 {
            (Complex64::new(d[2] - r, 0.0), Complex64::new(d[0], d[1]))
        } else {
            (Complex64::new(-d[0], d[1]), Complex64::new(d[2] + r, 0.0))
        };
        let norm = (a.norm_sqr() + b.norm_sqr()).sqrt();
        [a / norm, b / norm]
    };
    let overlap = |u: &[Complex64; 2], v: &[Complex64; 2]| u[0].conj() * v[0] + u[1].conj() * v[1];
    let mut total = 0.0;
    for jx in 0..n {
        for jy in 0..n {
            let u00 = lower_state(jx, jy);
            let u10 = lower_state((jx + 1) % n, jy);
            let u11 = lower_state((jx + 1) % n, (jy + 1) % n);
            let u01 = lower_state(jx, (jy + 1) % n);
            let plaquette = overlap(&u00, &u10)
                * overlap(&u10, &u11)
                * overlap(&u11, &u01)
                * overlap(&u01, &u00);
            total += plaquette.arg();
        }
    }
    total / tau
}

fn criterion_7_chern_degrees() {
    let cases = [
        (1.0, QWZ_DEGREE_AT_M_PLUS_1),
        (-1.0, -QWZ_DEGREE_AT_M_PLUS_1),
        (3.0, 0),
        (-3.0, 0),
    ];
    for (m, expected) in cases {
        let start = Instant::now();
        let map = sample_model(&TwoBandModel::qwz(m), 64).unwrap();
        let result = hopf_degree(&map).unwrap();
        let elapsed = start.elapsed();
        assert_eq!(result.degree, expected, "criterion 7 FAIL: qwz m={m} at N=64");
        assert!(result.residual < 0.05, "criterion 7 FAIL: residual {0} at m={m}", result.residual);
        assert!(elapsed.as_secs_f64() < 1.0, "criterion 7 FAIL: {elapsed:?} for m={m}");
        // Stability across resolutions.
        for n in [32, 128] {
            let deg = hopf_degree(&sample_model(&TwoBandModel::qwz(m), n).unwrap()).unwrap();
            assert_eq!(deg.degree, expected, "criterion 7 FAIL: m={m} unstable at N={n}");
        }
        // Independent oracle: fine-grid valence-band Berry phases.
        let oracle = berry_phase_chern(m, 512);
        let predicted = (VALENCE_CHERN_SIGN * expected) as f64;
        assert!(
            (oracle - predicted).abs() < 1e-6,
            "criterion 7 FAIL: oracle {oracle} vs frozen {predicted} at m={m}"
        );
    }
    println!(
        "criterion 7 PASS: qwz degrees ({}, {}, 0, 0) for m=(1,-1,3,-3), \
         stable over N in {{32,64,128}}, oracle-confirmed at N=512",
        QWZ_DEGREE_AT_M_PLUS_1, -QWZ_DEGREE_AT_M_PLUS_1
    );
}

fn random_diagram(rng: &mut StdRng) -> FramedLinkDiagram {
    let n = rng.gen_range(1usize..=4);
    let mut crossings = Vec::new();
    for _ in 0..rng.gen_range(0..=6) {
        let c = rng.gen_range(0..n);
        let sign = if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
        crossings.push(CrossingRecord { over: c, under: c, sign });
    }
    for _ in 0..rng.gen_range(0..=5) {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        let s1 = if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
        crossings.push(CrossingRecord { over: i, under: j, sign: s1 });
        if i != j {
            // Keep inter-component parity even, as closed curves do.
            let s2 = if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
            crossings.push(CrossingRecord { over: j, under: i, sign: s2 });
        }
    }
    let offsets = (0..n).map(|_| rng.gen_range(-4..=4)).collect();
    FramedLinkDiagram::new(n, crossings, Some(offsets)).unwrap()
}

fn criterion_8_expectation_properties() {
    let mut rng = StdRng::seed_from_u64(1004);
    let mut worst_modulus = 0.0f64;
    let mut worst_mirror = 0.0f64;
    for _ in 0..100 {
        let d = random_diagram(&mut rng);
        let k = loop {
            let k: f64 = rng.gen_range(-8.0..8.0);
            if k.abs() > 0.5 {
                break k;
            }
        };
        let e = d.invariants().unwrap().expectation(k).unwrap();
        worst_modulus =
            worst_modulus.max((e * e.conj() - Complex64::new(1.0, 0.0)).norm());
        let em = d.mirror().invariants().unwrap().expectation(k).unwrap();
        worst_mirror = worst_mirror.max((em - e.conj()).norm());
    }
    assert!(worst_modulus <= 1e-15, "criterion 8 FAIL: modulus {worst_modulus:e}");
    assert!(worst_mirror <= 1e-12, "criterion 8 FAIL: mirror {worst_mirror:e}");
    println!(
        "criterion 8 PASS: 100 diagrams, |<L><L>* - 1| <= {worst_modulus:.2e}, \
         mirror conjugation <= {worst_mirror:.2e}"
    );
}
