//! Acceptance suite: every exit criterion as one test, each printing a
//! final pass line. All checks are exact; no tolerances anywhere.

use num_bigint::BigInt;

use ehrkit::builders::{bar_kk, boolean, chain, diamond, ferrers, v_poset};
use ehrkit::extensions::{
    count_order_maps, count_order_maps_with_caps, crosscheck, ehr_series, extension_stats,
};
use ehrkit::ferrers::{catalan_hankel, ferrers_det, narayana_hstar, plane_partition_count};
use ehrkit::fixture::SequenceFixture;
use ehrkit::grids::{grid_square_count, tower_series};
use ehrkit::lgv::{lgv_count, PathSystem};
use ehrkit::multiset::{multiset_descent_poly, multiset_descent_poly_enumerated, MultisetSpec};
use ehrkit::ops::{direct_product, direct_sum, dual, glue, ordinal_sum};
use ehrkit::partitions::{partitions_up_to, Partition};
use ehrkit::poly::IntPoly;
use ehrkit::poset::Poset;
use ehrkit::products::{macmahon_box, rect_hook_content, rect_product_1409};
use ehrkit::series::{series_hadamard, series_mul, EhrSeries};
use ehrkit::stirling::{second_order_eulerian_row, stirling_bar};
use ehrkit::tableaux::{jacobi_trudi, rssyt_count, schur_principal, syt_descent_count};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::path::{Path, PathBuf};

fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn fixture(id: &str) -> SequenceFixture {
    SequenceFixture::load(&fixtures_dir(), id).unwrap()
}

fn random_poset(rng: &mut ChaCha8Rng, max_size: usize) -> Poset {
    let size = rng.random_range(0..=max_size);
    let mut relations = Vec::new();
    for a in 0..size {
        for b in a + 1..size {
            if rng.random_range(0..10) < 3 {
                relations.push((a, b));
            }
        }
    }
    Poset::from_relations(size, &relations).unwrap()
}

#[test]
fn acceptance_01_hstar_goldens() {
    let b3 = ehr_series(&boolean(3).unwrap()).unwrap();
    assert_eq!(b3.hstar, IntPoly::from_i64(&[1, 11, 24, 11, 1]));
    assert_eq!(b3.denom_exp, 9);

    let i2d = ehr_series(&direct_product(&chain(2), &diamond())).unwrap();
    assert_eq!(i2d, b3);

    let i3d = ehr_series(&direct_product(&chain(3), &diamond())).unwrap();
    assert_eq!(i3d.hstar, IntPoly::from_i64(&[1, 37, 315, 873, 873, 315, 37, 1]));
    assert_eq!(i3d.denom_exp, 13);
    println!("acceptance 01 (h* goldens): PASS");
}

#[test]
fn acceptance_02_algebra_laws() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xE4247);
    for case in 0..50 {
        let p = random_poset(&mut rng, 7);
        let q = random_poset(&mut rng, 7);
        let (sp, sq) = (ehr_series(&p).unwrap(), ehr_series(&q).unwrap());

        // direct sum = Hadamard product
        let sum = ehr_series(&direct_sum(&p, &q)).unwrap();
        assert_eq!(sum, series_hadamard(&sp, &sq), "hadamard case {case}");

        // ordinal sum = product with one (1-x) cancelled
        let osum = ehr_series(&ordinal_sum(&p, &q)).unwrap();
        assert_eq!(osum, series_mul(&sp, &sq, 1).unwrap(), "ordinal case {case}");

        // glue = product with two (1-x) cancelled; adjoin extremal elements
        // so the precondition holds
        let p_top = ordinal_sum(&p, &chain(1));
        let q_bot = ordinal_sum(&chain(1), &q);
        let glued = ehr_series(&glue(&p_top, &q_bot).unwrap()).unwrap();
        let expect = series_mul(
            &ehr_series(&p_top).unwrap(),
            &ehr_series(&q_bot).unwrap(),
            2,
        )
        .unwrap();
        assert_eq!(glued, expect, "glue case {case}");

        // dual invariance
        assert_eq!(sp, ehr_series(&dual(&p)).unwrap(), "dual case {case}");
    }
    println!("acceptance 02 (algebra laws on 50 random poset pairs): PASS");
}

#[test]
fn acceptance_03_determinant_enumeration_engine() {
    let mut shapes = 0;
    for shape in partitions_up_to(8) {
        let poset = ferrers(&shape);
        let series = ehr_series(&poset).unwrap();
        for n in 0..=4usize {
            let det = ferrers_det(&shape, n).unwrap();
            let pp = plane_partition_count(&shape, n).unwrap();
            let paths1 = lgv_count(&PathSystem::plane_partition_rows(&shape, n)).unwrap();
            let paths2 = lgv_count(&PathSystem::reverse_plane_partition_rows(&shape, n)).unwrap();
            let engine = series.coefficient(n);
            assert_eq!(det, pp, "det vs fillings: {shape} n={n}");
            assert_eq!(det, paths1, "det vs path model 1: {shape} n={n}");
            assert_eq!(det, paths2, "det vs path model 2: {shape} n={n}");
            assert_eq!(det, engine, "det vs engine: {shape} n={n}");
        }
        shapes += 1;
    }
    assert_eq!(shapes, 66); // partitions of 1..=8
    println!("acceptance 03 (determinant = fillings = both path models = engine, {shapes} shapes): PASS");
}

#[test]
fn acceptance_04_rectangular_tower() {
    for t in 1..=6usize {
        for k in 1..=6usize {
            for n in 0..=12usize {
                let box_count = macmahon_box(t, k, n).unwrap();
                assert_eq!(box_count, rect_product_1409(t, k, n).unwrap(), "t={t} k={k} n={n}");
                assert_eq!(box_count, rect_hook_content(t, k, n).unwrap(), "t={t} k={k} n={n}");
                assert_eq!(
                    box_count,
                    ferrers_det(&Partition::rectangle(t, k).unwrap(), n).unwrap(),
                    "t={t} k={k} n={n}"
                );
            }
        }
    }
    for t in 1..=3usize {
        for k in 1..=3usize {
            let poset = ferrers(&Partition::rectangle(t, k).unwrap());
            let series = ehr_series(&poset).unwrap();
            for n in 0..=5usize {
                let want = macmahon_box(t, k, n).unwrap();
                assert_eq!(series.coefficient(n), want, "engine t={t} k={k} n={n}");
                assert_eq!(count_order_maps(&poset, n).unwrap(), want, "oracle t={t} k={k} n={n}");
            }
        }
    }
    println!("acceptance 04 (rectangular tower of four formulas, engine and oracle): PASS");
}

#[test]
fn acceptance_05_narayana() {
    for k in 1..=5usize {
        let engine = ehr_series(&ferrers(&Partition::rectangle(2, k).unwrap())).unwrap();
        assert_eq!(engine.hstar, narayana_hstar(k).unwrap(), "k={k}");
        assert_eq!(engine.denom_exp, 2 * k + 1);
    }
    // the k = 11 numerator, digit for digit
    assert_eq!(
        narayana_hstar(11).unwrap(),
        IntPoly::from_i64(&[1, 55, 825, 4950, 13860, 19404, 13860, 4950, 825, 55, 1])
    );
    // 20-term series prefix against the fixture
    let fx = fixture("A140934");
    let series = EhrSeries::new(narayana_hstar(11).unwrap(), 23);
    for n in 0..20usize {
        assert_eq!(&series.coefficient(n), fx.get(n as i64).unwrap(), "n={n}");
    }
    println!("acceptance 05 (Narayana numerators, k=11 golden and fixture prefix): PASS");
}

#[test]
fn acceptance_06_catalan_hankel() {
    for k in 1..=4usize {
        let shape = Partition::staircase(k).unwrap();
        for n in 0..=8usize {
            assert_eq!(
                catalan_hankel(k, n).unwrap(),
                ferrers_det(&shape, n).unwrap(),
                "k={k} n={n}"
            );
        }
    }
    // fixture prefixes, respecting each fixture's recorded offset
    let a330 = fixture("A000330");
    for n in 0..=10usize {
        assert_eq!(&catalan_hankel(2, n).unwrap(), a330.get(n as i64 + 1).unwrap(), "n={n}");
    }
    let a6858 = fixture("A006858");
    for n in 0..=10usize {
        assert_eq!(&catalan_hankel(3, n).unwrap(), a6858.get(n as i64).unwrap(), "n={n}");
    }
    println!("acceptance 06 (Catalan Hankel determinants vs staircase and fixtures): PASS");
}

#[test]
fn acceptance_07_multiset_descents() {
    fn compositions(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in 1..=n {
            for mut rest in compositions(n - first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    let mut cases = 0;
    for n in 1..=10usize {
        for comp in compositions(n) {
            let spec = MultisetSpec::new(&comp).unwrap();
            // multiset_descent_poly runs both paths internally and errors on
            // disagreement; compare explicitly anyway
            let a = multiset_descent_poly(&spec).unwrap();
            let b = multiset_descent_poly_enumerated(&spec).unwrap();
            assert_eq!(a, b, "composition {comp:?}");
            cases += 1;
        }
    }
    assert_eq!(cases, 1023);
    // (k, k) rows are squared binomials, matching the fixture triangle
    let fx = fixture("A008459");
    for k in 1..=8usize {
        let poly = multiset_descent_poly(&MultisetSpec::uniform(2, k).unwrap()).unwrap();
        let row_start = (k * (k + 1) / 2) as i64;
        for i in 0..=k {
            let b = ehrkit::binom::binomial(k as i64, i as i64);
            assert_eq!(poly.coeff(i), &b * &b, "k={k} i={i}");
            assert_eq!(&poly.coeff(i), fx.get(row_start + i as i64).unwrap(), "fixture k={k} i={i}");
        }
    }
    println!("acceptance 07 (multiset descent paths agree on {cases} compositions, squared-binomial rows): PASS");
}

#[test]
fn acceptance_08_stirling_and_second_order_eulerian() {
    for k in 1..=4usize {
        let poset = bar_kk(k).unwrap();
        for n in 0..=6usize {
            assert_eq!(
                stirling_bar(k, n),
                count_order_maps_with_caps(&poset, n, 12, 12).unwrap(),
                "k={k} n={n}"
            );
        }
    }
    let fx = fixture("A008517");
    for k in 1..=6usize {
        let row = second_order_eulerian_row(k).unwrap();
        let row_start = (1 + k * (k - 1) / 2) as i64;
        for (i, v) in row.iter().enumerate() {
            assert_eq!(v, fx.get(row_start + i as i64).unwrap(), "fixture k={k} i={i}");
        }
        // Gessel identity: the shifted row generates S(n+k, n)
        let mut shifted = vec![BigInt::ZERO];
        shifted.extend(row);
        let series = EhrSeries::new(IntPoly::new(shifted), 2 * k + 1);
        for n in 0..=12usize {
            assert_eq!(
                series.coefficient(n),
                ehrkit::binom::stirling2((n + k) as u64, n as u64),
                "gessel k={k} n={n}"
            );
        }
    }
    println!("acceptance 08 (Stirling ladder counts and second-order Eulerian rows): PASS");
}

#[test]
fn acceptance_09_grid_squares() {
    assert_eq!(grid_square_count(2, 2), BigInt::from(43));
    assert_eq!(grid_square_count(3, 2), BigInt::from(88));
    for m in 0..=5usize {
        let series = tower_series(m);
        for n in 0..=10usize {
            assert_eq!(grid_square_count(m, n), series.coefficient(n), "m={m} n={n}");
        }
    }
    println!("acceptance 09 (grid square counts and tower series): PASS");
}

#[test]
fn acceptance_10_riordan_rows() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_ehrkit"))
        .args(["triangle", "--family", "riordan(1/(1-x), x(1+x)/(1-x)^3)", "--rows", "8"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let want = "\
1
1 1
1 5 1
1 14 9 1
1 30 43 13 1
1 55 147 88 17 1
1 91 406 416 149 21 1
1 140 966 1550 901 226 25 1
";
    assert_eq!(String::from_utf8(out.stdout).unwrap(), want);
    println!("acceptance 10 (Riordan triangle rows via the CLI): PASS");
}

#[test]
fn acceptance_11_schur_layer() {
    for shape in partitions_up_to(6) {
        for n in 0..=5usize {
            let a = schur_principal(&shape, n).unwrap();
            assert_eq!(a, jacobi_trudi(&shape, n).unwrap(), "jacobi-trudi {shape} n={n}");
            assert_eq!(a, rssyt_count(&shape, n).unwrap(), "rssyt {shape} n={n}");
            assert_eq!(a, syt_descent_count(&shape, n).unwrap(), "syt {shape} n={n}");
        }
    }
    // non-rectangular shapes break the row-shift correspondence: for (2,1)
    // at n = 1 the plane-partition count is 5 but s_(2,1)(1^3) = 8, which is
    // why the hook-content route only accepts rectangles
    let shape = Partition::new(&[2, 1]).unwrap();
    let pp = plane_partition_count(&shape, 1).unwrap();
    let schur = schur_principal(&shape, 1 + shape.len()).unwrap();
    assert_eq!(pp, BigInt::from(5));
    assert_eq!(schur, BigInt::from(8));
    assert_ne!(pp, schur);
    println!("acceptance 11 (Schur layer four-way agreement and the non-rectangular counterexample): PASS");
}

#[test]
fn acceptance_12_exclusions_documented() {
    // Skipped by design, not failures:
    // - posets defined only by figures whose Hasse diagrams are not
    //   recoverable from text (the five-extension example poset, the
    //   diagonal building blocks, and the four product examples); the
    //   staircase shape (3,3) carries the same numerator 1+3x+x^2 and is
    //   covered by acceptance 03/05;
    // - the two infinite-sum identities evaluating to expressions in pi^2
    //   and log 2 (symbolic analysis, not finite lattice-point counting).
    let series = ehr_series(&ferrers(&Partition::new(&[3, 3]).unwrap())).unwrap();
    assert_eq!(series.hstar, IntPoly::from_i64(&[1, 3, 1]));
    assert_eq!(series.denom_exp, 7);
    println!("acceptance 12 (out-of-scope items documented; stand-in checks pass): PASS");
}

#[test]
fn acceptance_engine_oracle_spotchecks() {
    // supporting sweep used by several criteria: every named builder with
    // at most 10 elements agrees with the oracle
    for poset in [
        chain(5),
        v_poset(),
        diamond(),
        boolean(3).unwrap(),
        bar_kk(3).unwrap(),
        ferrers(&Partition::new(&[3, 2, 1]).unwrap()),
        ferrers(&Partition::new(&[4, 4]).unwrap()),
    ] {
        let report = crosscheck(&poset, 5).unwrap();
        assert!(report.all_match(), "poset {}", poset.dump());
    }
    let stats = extension_stats(&boolean(3).unwrap()).unwrap();
    assert_eq!(stats.total, BigInt::from(48));
    println!("acceptance supplement (engine vs oracle on named builders): PASS");
}
