//! Acceptance suite: one test per criterion, each printing a PASS line when it
//! holds. Criteria needing hours-scale enumeration are `#[ignore]` and run
//! with `cargo test --test acceptance -- --ignored`.

use conjucode::acc::{
    acp_rank_check, conj_shift, gray_weight, phi_inv, psi, trace_inner, trace_mat_mul, AccCode,
    F4Matrix, MinDistance,
};
use conjucode::bits::BitVec;
use conjucode::eaqec::{ebit_count, eaqec_from_trace, eaqec_wilde_brun, parity_matrix};
use conjucode::f4::{F4Vector, F4, ONE, ZERO};
use conjucode::factor::{divisor_count, divisors_of_xn_plus_1, factor_xn_plus_1};
use conjucode::fixtures::{self, Tier};
use conjucode::matrix::BinMatrix;
use conjucode::poly::{format_factored, BinPoly};
use conjucode::tracecode::{self, CyclicCode};
use conjucode::weight;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn p(s: &str) -> BinPoly {
    s.parse().unwrap()
}

fn v(s: &str) -> F4Vector {
    s.parse().unwrap()
}

fn acc_from(g: &str, n: usize) -> AccCode {
    AccCode::from_gen_poly(&p(g), n).unwrap()
}

fn random_bits(rng: &mut ChaCha8Rng, len: usize) -> BitVec {
    BitVec::from_bools(&(0..len).map(|_| rng.gen()).collect::<Vec<_>>())
}

fn fixture(id: &str) -> fixtures::FixtureCase {
    fixtures::builtin_cases()
        .into_iter()
        .find(|c| c.id == id)
        .unwrap_or_else(|| panic!("fixture {id} missing"))
}

fn assert_fixture_passes(id: &str) {
    let result = fixtures::run_case(&fixture(id));
    assert!(
        result.passed(),
        "fixture {id} failed: {:?}",
        result
            .outcomes
            .iter()
            .filter(|o| !o.passed)
            .collect::<Vec<_>>()
    );
}

#[test]
fn criterion_01_factorization_of_x14_plus_1() {
    let factors = factor_xn_plus_1(14);
    assert_eq!(
        format_factored(&factors),
        "(1+x)^2*(1+x+x^3)^2*(1+x^2+x^3)^2"
    );
    assert_eq!(divisor_count(14), 27);
    println!("criterion 01: PASS - x^14+1 factors into the three squared irreducibles");
}

#[test]
fn criterion_02_generator_vector_images() {
    let eta1 = psi(&p("(1+x)^2*(1+x+x^3)^2").to_bitvec(14).unwrap()).unwrap();
    assert_eq!(eta1, v("W,w,0,0,W,0,W"));
    let eta2 = psi(&p("(1+x)^2*(1+x+x^3)").to_bitvec(14).unwrap()).unwrap();
    assert_eq!(eta2, v("W,W,W,0,0,W,0"));
    println!("criterion 02: PASS - both worked generator vectors reproduced bit-exactly");
}

#[test]
fn criterion_03_dual_containing_length3_example() {
    let code = AccCode::from_rows(
        3,
        vec![v("W,W,W"), v("w,W,W"), v("w,w,W"), v("w,w,w")],
    )
    .unwrap();
    assert_eq!(code.dim(), 4);
    let dual = code.trace_dual();
    let hm = dual.generator_matrix();
    assert!(trace_mat_mul(&hm, &hm.transpose()).unwrap().is_zero());
    let expected = AccCode::from_rows(3, vec![v("1,1,0"), v("0,1,1")]).unwrap();
    assert!(dual.same_code(&expected));
    assert!(code.duality_class().dual_containing);
    println!("criterion 03: PASS - (3,2^4) code is dual containing with H = [[1,1,0],[0,1,1]]");
}

#[test]
fn criterion_04_acp_rank_pair() {
    let check = acp_rank_check(&p("(1+x)^2*(1+x+x^3)^2"), 7).unwrap();
    assert_eq!((check.rank1, check.rank2), (6, 8));
    assert!(check.necessary_condition_met);
    println!("criterion 04: PASS - complementary-pair ranks (6, 8) at n = 7");
}

#[test]
fn criterion_05_hull_dimensions_agree() {
    let code = acc_from("(1+x)^2*(1+x+x^3)", 7);
    assert_eq!(code.dim(), 9);
    let hull = code.hull().unwrap();
    assert_eq!(hull.dim(), 3);
    let gm = code.generator_matrix();
    let rank = trace_mat_mul(&gm, &gm.transpose()).unwrap().rank();
    assert_eq!(rank, 6);
    assert_eq!(code.hull_dim_via_rank(), 3);
    assert_eq!(code.hull_dim_via_rank(), hull.dim());
    println!("criterion 05: PASS - hull dim 3 by lcm route, rank 6 = k - p by rank route");
}

#[test]
fn criterion_06_trace_code_examples() {
    // strict inclusion
    let report = tracecode::duality_report(&acc_from("(1+x)^2*(1+x+x^3)", 7)).unwrap();
    assert_eq!(report.r, p("(1+x)*(1+x+x^3)"));
    assert_eq!(report.t, p("(1+x+x^3)*(1+x^2+x^3)"));
    assert_eq!(report.dual_gen, p("1+x+x^3"));
    assert!(report.inclusion_strict && !report.equality_condition);
    // equality
    let report = tracecode::duality_report(&acc_from("1+x^2+x^4+x^8", 7)).unwrap();
    assert_eq!(report.r, p("(1+x)*(1+x^2+x^3)"));
    assert_eq!(report.t, p("1+x^2+x^3"));
    assert!(report.equality_condition && !report.inclusion_strict);
    assert!(report.t.divides(&report.dual_gen));
    println!("criterion 06: PASS - r and t match both worked examples, strict then equal");
}

#[test]
fn criterion_07_lcd_trace_code() {
    let code = acc_from("(1+x+x^2+x^3+x^4)^2", 5);
    let report = tracecode::duality_report(&code).unwrap();
    assert_eq!(report.r, p("1+x+x^2+x^3+x^4"));
    assert!(report.r.is_self_reciprocal());
    assert!(report.lcd);
    assert!(report.equality_condition);
    assert!(code.is_acd());
    println!("criterion 07: PASS - n = 5 squared-generator code has a self-reciprocal LCD trace code");
}

struct Table1Row {
    vector: &'static str,
    n: usize,
    acc_dim: usize,
    acc_d: usize,
    trace_dim: usize,
    trace_d: usize,
}

/// Rows 1-4 of the trace-code table; rows 4 and 5 use corrected generator
/// vectors (the printed ones do not reproduce the published parameters).
const TABLE1_FAST: [Table1Row; 4] = [
    Table1Row {
        vector: "W,0,W,W,W,0,0",
        n: 7,
        acc_dim: 10,
        acc_d: 2,
        trace_dim: 3,
        trace_d: 4,
    },
    Table1Row {
        vector: "W,W,0,0,0,W,W,0,0,0",
        n: 10,
        acc_dim: 14,
        acc_d: 2,
        trace_dim: 4,
        trace_d: 4,
    },
    Table1Row {
        vector: "W,0,0,W,W,W,0,0,0,0,0,0,0,0",
        n: 14,
        acc_dim: 23,
        acc_d: 2,
        trace_dim: 9,
        trace_d: 4,
    },
    Table1Row {
        vector: "W,0,W,W,0,W,W,0,W,0,0,0,0,0,0,0,0,0",
        n: 18,
        acc_dim: 28,
        acc_d: 2,
        trace_dim: 10,
        trace_d: 4,
    },
];

#[test]
fn criterion_08_table1_rows_1_to_4_fast_parts() {
    for (i, row) in TABLE1_FAST.iter().enumerate() {
        let code = AccCode::from_vector(&v(row.vector));
        assert_eq!((code.n(), code.dim()), (row.n, row.acc_dim), "row {}", i + 1);
        let trace = tracecode::trace_code_of(&code).unwrap();
        assert_eq!(trace.dim(), row.trace_dim, "row {}", i + 1);
        assert_eq!(
            tracecode::min_distance(&trace, trace.dim()),
            MinDistance::Value(row.trace_d),
            "row {}",
            i + 1
        );
        // image distances for the small rows; rows 3-4 run in the extended part
        if code.dim() <= 16 {
            assert_eq!(
                code.min_gray_distance(16),
                MinDistance::Value(row.acc_d),
                "row {}",
                i + 1
            );
        }
    }
    println!("criterion 08 (fast): PASS - rows 1-4 dims and trace distances, rows 1-2 image distances");
}

#[test]
#[ignore = "extended tier: enumerates 2^23 and 2^28 codewords"]
fn criterion_08_extended_table1_rows_3_4_image_distances() {
    for row in &TABLE1_FAST[2..] {
        let code = AccCode::from_vector(&v(row.vector));
        assert_eq!(
            code.min_gray_distance(code.dim()),
            MinDistance::Value(row.acc_d)
        );
    }
    println!("criterion 08 (extended): PASS - rows 3-4 image distances by exhaustive enumeration");
}

struct Table2Row {
    vector: &'static str,
    n: usize,
    trace_dim: usize,
    trace_d: usize,
    eaqec: &'static str,
}

/// Rows 1-5 of the EAQEC table; row 4 uses the corrected (full-period)
/// generator vector.
const TABLE2_FAST: [Table2Row; 5] = [
    Table2Row { vector: "W,w,0", n: 3, trace_dim: 2, trace_d: 2, eaqec: "[[3,2,2;1]]" },
    Table2Row {
        vector: "W,W,0,W,W,0,W,W,0",
        n: 9,
        trace_dim: 2,
        trace_d: 6,
        eaqec: "[[9,2,6;7]]",
    },
    Table2Row {
        vector: "W,w,0,W,w,0,W,w,0,W,w,0,W,w,0",
        n: 15,
        trace_dim: 2,
        trace_d: 10,
        eaqec: "[[15,2,10;13]]",
    },
    Table2Row {
        vector: "W,0,w,0,0,0,W,0,w,0,0,0,W,0,w,0,0,0,W,0,w,0,0,0,W,0,w,0,0,0",
        n: 30,
        trace_dim: 4,
        trace_d: 10,
        eaqec: "[[30,4,10;26]]",
    },
    Table2Row {
        vector: "W,0,0,0,0,0,w,0,W,0,W,0,W,0,0,0,0,0,W,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0",
        n: 34,
        trace_dim: 16,
        trace_d: 6,
        eaqec: "[[34,16,6;18]]",
    },
];

#[test]
fn criterion_09_table2_rows_1_to_5_and_row6_trace_code() {
    for (i, row) in TABLE2_FAST.iter().enumerate() {
        let code = AccCode::from_vector(&v(row.vector));
        assert_eq!(code.n(), row.n, "row {}", i + 1);
        let trace = tracecode::trace_code_of(&code).unwrap();
        assert_eq!(trace.dim(), row.trace_dim, "row {}", i + 1);
        let d = tracecode::min_distance(&trace, 16);
        assert_eq!(d, MinDistance::Value(row.trace_d), "row {}", i + 1);
        let params = eaqec_from_trace(&trace, d.value());
        assert_eq!(params.to_string(), row.eaqec, "row {}", i + 1);
        assert!(params.is_maximal_entanglement(), "row {}", i + 1);
    }
    // row 6: the printed vector does reproduce the published trace code
    let code = AccCode::from_vector(&v(
        "W,w,0,0,W,w,0,W,0,W,0,W,W,w,0,0,0,W,w,0,W,0,W,0,W,w,0,W,0,0,0,0,0,0,0,0,0,0,0",
    ));
    let trace = tracecode::trace_code_of(&code).unwrap();
    assert_eq!((trace.n(), trace.dim()), (39, 12));
    assert_eq!(tracecode::min_distance(&trace, 16), MinDistance::Value(12));
    println!("criterion 09 (rows 1-5 + row 6 trace code): PASS - parameters and maximal flags reproduced");
}

/// The published quantum parameters of row 6 are recorded as stated. They are
/// not producible by the construction: every [39,12,12] binary cyclic code is
/// self-orthogonal (hull 12), so the derived parameters are [[39,0,12;15]],
/// and the only hull-free [39,12] cyclic code has distance 6. This test is
/// the honest red for that row; the sibling test covers everything else.
#[test]
fn criterion_09_table2_row6_eaqec_as_published() {
    let code = AccCode::from_vector(&v(
        "W,w,0,0,W,w,0,W,0,W,0,W,W,w,0,0,0,W,w,0,W,0,W,0,W,w,0,W,0,0,0,0,0,0,0,0,0,0,0",
    ));
    let trace = tracecode::trace_code_of(&code).unwrap();
    let d = tracecode::min_distance(&trace, 16);
    let params = eaqec_from_trace(&trace, d.value());
    println!(
        "criterion 09 (row 6 as published): computed {} maximal={}, published [[39,12,12;27]] maximal=true",
        params,
        params.is_maximal_entanglement()
    );
    assert_eq!(
        params.to_string(),
        "[[39,12,12;27]]",
        "published row-6 parameters are unreachable: the trace code is self-orthogonal \
         (hull 12), which forces [[39,0,12;15]]; no hull-free [39,12,12] cyclic code exists"
    );
    assert!(params.is_maximal_entanglement());
}

#[test]
#[ignore = "extended tier: enumerations up to 2^33 codewords"]
fn criterion_10_extended_rows_and_bounded_checks() {
    // row 5 (corrected vector): image [23,33,4] by exhaustive 2^33 enumeration,
    // trace [23,11,8]
    let row5 = AccCode::from_vector(&v("W,W,W,W,0,W,W,0,W,0,0,0,0,W,0,0,0,0,0,0,0,0,0"));
    assert_eq!(row5.dim(), 33);
    assert_eq!(row5.min_gray_distance(33), MinDistance::Value(4));
    let trace5 = tracecode::trace_code_of(&row5).unwrap();
    assert_eq!(trace5.dim(), 11);
    assert_eq!(tracecode::min_distance(&trace5, 11), MinDistance::Value(8));

    // trace distances of rows 6-9
    for (vector, dim, d) in [
        ("W,0,0,0,0,0,W,W,0,0,0,W,0,0,W,W,W,W,0,0,0,0,0,0,0,0,0,0,0,0,0", 15, 8),
        ("W,0,w,w,W,0,w,w,W,0,w,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0", 24, 4),
        ("W,0,0,w,w,0,W,W,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0", 28, 4),
        ("W,W,w,0,W,0,0,0,W,0,0,W,0,0,W,w,0,0,W,0,0,W,0,0,0,W,0,W,W,w,0,0,0,0,0,0,0,0,0,0,0,0,0", 14, 14),
    ] {
        let code = AccCode::from_vector(&v(vector));
        let trace = tracecode::trace_code_of(&code).unwrap();
        assert_eq!(trace.dim(), dim);
        assert_eq!(tracecode::min_distance(&trace, 33), MinDistance::Value(d));
    }

    // EAQEC rows 7-8 (corrected inputs): k and c exact, distances exhaustive
    let row7 = AccCode::from_vector(&v(
        "W,0,W,W,W,0,0,W,W,0,0,W,W,W,0,W,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0",
    ));
    let trace7 = tracecode::trace_code_of(&row7).unwrap();
    let d7 = tracecode::min_distance(&trace7, 33);
    let p7 = eaqec_from_trace(&trace7, d7.value());
    assert_eq!(p7.to_string(), "[[43,28,6;15]]");
    assert!(p7.is_maximal_entanglement());
    let row8 = AccCode::from_vector(&v(
        "W,0,W,W,0,0,0,0,W,W,W,0,0,0,W,0,0,0,W,W,W,0,0,0,0,W,W,0,W,0,0,0,0,0,0,0,0,0,0,0,0,0,0",
    ));
    let trace8 = tracecode::trace_code_of(&row8).unwrap();
    let d8 = tracecode::min_distance(&trace8, 33);
    let p8 = eaqec_from_trace(&trace8, d8.value());
    assert_eq!(p8.to_string(), "[[43,15,13;28]]");
    assert!(p8.is_maximal_entanglement());

    // beyond-enumeration rows: exact low-weight scans where the published
    // distance is at most 4, sampled upper bounds otherwise; the one row whose
    // published distance is refuted by the scan is checked for its computed
    // value here and recorded as a known discrepancy in the fixtures
    let checks: [(&str, usize, usize); 4] = [
        // (vector id is in fixtures; here: generator vector, 2n, published d)
        ("W,0,0,0,0,0,W,W,0,0,0,W,0,0,W,W,W,W,0,0,0,0,0,0,0,0,0,0,0,0,0", 62, 4),
        ("W,0,0,w,w,0,W,W,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0", 70, 2),
        ("W,W,w,0,W,0,0,0,W,0,0,W,0,0,W,w,0,0,W,0,0,W,0,0,0,W,0,W,W,w,0,0,0,0,0,0,0,0,0,0,0,0,0", 86, 4),
        ("W,0,0,0,W,W,0,W,0,W,0,W,W,W,W,W,0,0,W,0,0,0,0,W,W,W,0,W,0,W,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0", 146, 4),
    ];
    for (vector, big_n, d) in checks {
        let code = AccCode::from_vector(&v(vector));
        let g = code.image_gen().unwrap();
        assert_eq!(weight::cyclic_weight_at_most(g, big_n, 4), Some(d));
    }
    // published distance 2 for the [34,56] image is refuted; computed value is 4
    let row7t1 = AccCode::from_vector(&v(
        "W,0,w,w,W,0,w,w,W,0,w,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0",
    ));
    assert_eq!(
        weight::cyclic_weight_at_most(row7t1.image_gen().unwrap(), 68, 4),
        Some(4)
    );
    // sampled upper-bound consistency for the unverifiable trace code [73,45,10]
    let row10 = AccCode::from_vector(&v(
        "W,0,0,0,W,W,0,W,0,W,0,W,W,W,W,W,0,0,W,0,0,0,0,W,W,W,0,W,0,W,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0",
    ));
    let trace10 = tracecode::trace_code_of(&row10).unwrap();
    assert_eq!(trace10.dim(), 45);
    let rows: Vec<BitVec> = (0..trace10.dim())
        .map(|i| trace10.generator_matrix().row(i).clone())
        .collect();
    let bound = weight::min_weight_sampled(&rows, 1_000_000, 0xACC0).unwrap();
    assert!(bound >= 10, "sampled bound {bound} undercuts the published 10");
    println!("criterion 10 (extended): PASS - rows 5-9 distances exact, large rows bounded; see fixtures for the recorded row-7 image-distance discrepancy");
}

#[test]
fn criterion_11_theorem_sweeps_all_divisors_to_n10() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for n in 1..=10usize {
        let big_n = 2 * n;
        for g1 in divisors_of_xn_plus_1(big_n) {
            let code = AccCode::from_gen_poly(&g1, n).unwrap();
            // (a) hull dimension by rank equals hull dimension by lcm
            assert_eq!(
                code.hull_dim_via_rank(),
                code.hull().unwrap().dim(),
                "n={n} g={g1}"
            );
            // (b)-(c) divisibility and equality of the trace duality report
            let report = tracecode::duality_report(&code).unwrap();
            assert!(report.dual_gen.divides(&report.t), "n={n} g={g1}");
            assert_eq!(
                report.equality_condition,
                report.t == report.dual_gen,
                "n={n} g={g1}"
            );
            // (d) Tr(C) embeds into C
            assert!(tracecode::tr_subset_check(&code), "n={n} g={g1}");
            // (e) the trace of a shifted codeword is the shifted trace
            for row in code.gen_rows() {
                assert_eq!(
                    conjucode::acc::trace_vec(row).cyclic_shift(),
                    conjucode::acc::trace_vec(&conj_shift(row)),
                    "n={n} g={g1}"
                );
            }
            // (f) parity-rank identity for the binary image and the trace code
            for cyclic in [
                CyclicCode::new(big_n, g1.clone()).unwrap(),
                tracecode::trace_code_of(&code).unwrap(),
            ] {
                let h = parity_matrix(&cyclic);
                assert_eq!(
                    ebit_count(&h, &h).unwrap(),
                    (cyclic.n() - cyclic.dim()) - cyclic.hull_dim(),
                    "n={n} g={g1}"
                );
            }
            // (g) reciprocal pairing of generator and parity polynomials
            let g2 = BinPoly::xn_plus_1(big_n).divmod(&g1).unwrap().0;
            let h1 = g2.clone(); // h1 = (x^2n+1)/g1
            let h2 = g1.clone();
            if !g1.is_zero() && !g2.is_zero() {
                assert_eq!(
                    h2.reciprocal().unwrap(),
                    g1.reciprocal().unwrap(),
                    "n={n} g={g1}"
                );
                assert_eq!(
                    h1.reciprocal().unwrap(),
                    g2.reciprocal().unwrap(),
                    "n={n} g={g1}"
                );
            }
            let _ = &mut rng;
        }
    }
    println!("criterion 11: PASS - seven theorem sweeps over every divisor, n = 1..10");
}

#[test]
fn criterion_12_micro_scale_oracle_equivalence() {
    // exhaustive set-theoretic duals, hulls and ACD flags for n <= 3
    for n in 1..=3usize {
        for g in divisors_of_xn_plus_1(2 * n) {
            let code = AccCode::from_gen_poly(&g, n).unwrap();
            let words = enumerate_codewords(&code);
            let dual_words = brute_trace_dual(&code);
            let dual = code.trace_dual();
            assert_eq!(dual_words.len(), 1 << dual.dim(), "n={n} g={g}");
            for w in &dual_words {
                assert!(dual.contains(w), "n={n} g={g}");
            }
            let hull_words: Vec<_> = words
                .iter()
                .filter(|w| dual_words.contains(w))
                .collect();
            let hull = code.hull().unwrap();
            assert_eq!(hull_words.len(), 1 << hull.dim(), "n={n} g={g}");
            assert_eq!(code.is_acd(), hull.dim() == 0, "n={n} g={g}");
        }
    }
    // minimum distances against full codebooks for 2n <= 12
    for big_n in [2usize, 4, 6, 8, 10, 12] {
        for g in divisors_of_xn_plus_1(big_n) {
            let code = CyclicCode::new(big_n, g.clone()).unwrap();
            if code.dim() == 0 {
                continue;
            }
            let oracle = code
                .codewords()
                .into_iter()
                .filter(|w| !w.is_zero())
                .map(|w| w.weight())
                .min()
                .unwrap();
            assert_eq!(
                tracecode::min_distance(&code, 12),
                MinDistance::Value(oracle),
                "N={big_n} g={g}"
            );
        }
    }
    println!("criterion 12: PASS - duals, hulls, ACD flags and distances match exhaustive oracles");
}

fn enumerate_codewords(code: &AccCode) -> Vec<F4Vector> {
    let mut words = Vec::new();
    for mask in 0..1usize << code.dim() {
        let mut acc = F4Vector::zero(code.n());
        for (j, row) in code.gen_rows().iter().enumerate() {
            if (mask >> j) & 1 == 1 {
                acc = acc.add(row).unwrap();
            }
        }
        words.push(acc);
    }
    words
}

fn brute_trace_dual(code: &AccCode) -> Vec<F4Vector> {
    let n = code.n();
    let words = enumerate_codewords(code);
    let mut dual = Vec::new();
    for idx in 0..4usize.pow(n as u32) {
        let cand = F4Vector::new((0..n).map(|i| F4::all()[(idx >> (2 * i)) & 3]).collect());
        if words.iter().all(|w| !trace_inner(&cand, w).unwrap()) {
            dual.push(cand);
        }
    }
    dual
}

#[test]
fn criterion_13_randomized_identity_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    // psi linearity, bijectivity, inverse, and inner-product preservation
    for _ in 0..200 {
        let n = rng.gen_range(1..=8);
        let a = random_bits(&mut rng, 2 * n);
        let b = random_bits(&mut rng, 2 * n);
        let pa = psi(&a).unwrap();
        let pb = psi(&b).unwrap();
        let mut sum = a.clone();
        sum.xor_assign(&b);
        assert_eq!(psi(&sum).unwrap(), pa.add(&pb).unwrap());
        assert_eq!(phi_inv(&pa), a);
        assert_eq!(trace_inner(&pa, &pb).unwrap(), a.dot(&b));
        assert_eq!(gray_weight(&pa), a.weight());
    }
    // a (.)_Tr b = Tr(a) . b for binary right factors
    for _ in 0..200 {
        let n = rng.gen_range(1..=8);
        let a = F4Vector::new((0..n).map(|_| F4::all()[rng.gen_range(0..4)]).collect());
        let bbits = random_bits(&mut rng, n);
        let b = F4Vector::new(
            bbits
                .iter()
                .map(|bit| if bit { ONE } else { ZERO })
                .collect(),
        );
        assert_eq!(
            trace_inner(&a, &b).unwrap(),
            conjucode::acc::trace_vec(&a).dot(&bbits)
        );
    }
    // B (.)_Tr (A * E) = (B (.)_Tr A) * E for binary E
    for _ in 0..200 {
        let (m, l, q) = (
            rng.gen_range(1..=4),
            rng.gen_range(1..=4),
            rng.gen_range(1..=4),
        );
        let bmat = random_f4_matrix(&mut rng, m, l);
        let amat = random_f4_matrix(&mut rng, l, q);
        let mut e = BinMatrix::zero(q, 3);
        for r in 0..q {
            for c in 0..3 {
                e.set(r, c, rng.gen());
            }
        }
        let ae = f4_times_binary(&amat, &e);
        let lhs = trace_mat_mul(&bmat, &ae).unwrap();
        let rhs = trace_mat_mul(&bmat, &amat).unwrap().mul(&e).unwrap();
        assert_eq!(lhs, rhs);
    }
    // T^i(psi(a)) (.)_Tr T^j(psi(b)) = sigma^i(a) . sigma^j(b)
    for _ in 0..200 {
        let n = rng.gen_range(1..=6);
        let a = random_bits(&mut rng, 2 * n);
        let b = random_bits(&mut rng, 2 * n);
        let (i, j) = (rng.gen_range(0..2 * n), rng.gen_range(0..2 * n));
        let (mut ta, mut sa) = (psi(&a).unwrap(), a.clone());
        for _ in 0..i {
            ta = conj_shift(&ta);
            sa = sa.cyclic_shift();
        }
        let (mut tb, mut sb) = (psi(&b).unwrap(), b.clone());
        for _ in 0..j {
            tb = conj_shift(&tb);
            sb = sb.cyclic_shift();
        }
        assert_eq!(trace_inner(&ta, &tb).unwrap(), sa.dot(&sb));
    }
    println!("criterion 13: PASS - randomized identity suite, 200 instances per identity");
}

fn random_f4_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> F4Matrix {
    F4Matrix::from_rows(
        (0..rows)
            .map(|_| F4Vector::new((0..cols).map(|_| F4::all()[rng.gen_range(0..4)]).collect()))
            .collect(),
        cols,
    )
}

/// A * E with A over GF(4) and E binary.
fn f4_times_binary(a: &F4Matrix, e: &BinMatrix) -> F4Matrix {
    let mut rows = Vec::with_capacity(a.n_rows());
    for i in 0..a.n_rows() {
        let mut row = vec![ZERO; e.n_cols()];
        for k in 0..a.n_cols() {
            if !a.row(i).get(k).is_zero() {
                for (j, slot) in row.iter_mut().enumerate() {
                    if e.get(k, j) {
                        *slot = *slot + a.row(i).get(k);
                    }
                }
            }
        }
        rows.push(F4Vector::new(row));
    }
    F4Matrix::from_rows(rows, e.n_cols())
}

#[test]
fn wilde_brun_reduces_to_single_code_construction() {
    for n in 1..=16usize {
        for g in divisors_of_xn_plus_1(n) {
            let code = CyclicCode::new(n, g.clone()).unwrap();
            let single = eaqec_from_trace(&code, None);
            let double = eaqec_wilde_brun(&code, None, &code, None).unwrap();
            assert_eq!(single, double, "n={n} g={g}");
            assert_eq!(
                single.is_maximal_entanglement(),
                code.hull_dim() == 0,
                "n={n} g={g}"
            );
        }
    }
    println!("reduction sweep: PASS - two-code construction collapses to the single-code one, n <= 16");
}

#[test]
fn fast_tier_fixtures_pass() {
    let results = fixtures::run_tier(Tier::Fast);
    let mut known = 0;
    for r in &results {
        if r.expected_fail.is_some() {
            known += 1;
        }
        assert!(
            r.passed(),
            "fixture {} failed: {:?}",
            r.id,
            r.outcomes.iter().filter(|o| !o.passed).collect::<Vec<_>>()
        );
    }
    assert!(results.len() >= 25);
    println!(
        "fixtures: PASS - fast tier, {} cases, {known} recorded discrepancies",
        results.len()
    );
}

#[test]
fn worked_example_fixture_ids_present() {
    for id in [
        "factor.x14",
        "eta.acp",
        "eta.hull",
        "dualcontain.3",
        "acp.ranks",
        "hull.lcm-vs-rank",
        "trace.strict",
        "trace.equal",
        "lcd.5",
    ] {
        assert_fixture_passes(id);
    }
    println!("fixtures: PASS - all worked-example cases");
}

#[test]
#[ignore = "extended tier: runs every fixture including 2^33 enumerations and sampling"]
fn all_tier_fixtures_pass() {
    let results = fixtures::run_tier(Tier::DimsOnly);
    for r in &results {
        assert!(
            r.passed(),
            "fixture {} failed: {:?}",
            r.id,
            r.outcomes.iter().filter(|o| !o.passed).collect::<Vec<_>>()
        );
    }
    println!("fixtures: PASS - all tiers, {} cases", results.len());
}
