//! Hand-entered reference data: root lists, table rows and closed forms.

use std::collections::BTreeSet;

use weylkit::classify::{
    appendix_table, trace_polynomials, two_object_rank2, two_object_rank3, verify_standard_rank4,
    verify_two_object_rank3_exceptionals,
};
use weylkit::coset::coset_scheme;
use weylkit::coxeter::identify_coxeter_type;
use weylkit::groupoid::generate_groupoid;
use weylkit::roots::{root_closure, RootVerdict};
use weylkit::{CartanScheme, Root};

fn positive(s: &CartanScheme, a: usize) -> BTreeSet<Root> {
    match root_closure(s, 512) {
        RootVerdict::Finite(r) => r.positive_roots(a).iter().cloned().collect(),
        other => panic!("not finite: {other:?}"),
    }
}

fn set(list: &[[i64; 2]]) -> BTreeSet<Root> {
    list.iter().map(|v| v.to_vec()).collect()
}

#[test]
fn two_object_root_lists_minus_four() {
    let s = two_object_rank2(-4);
    let x = set(&[[1, 0], [0, 1], [1, 1], [1, 2], [1, 3], [2, 3], [3, 4], [3, 5]]);
    let y = set(&[[1, 0], [0, 1], [1, 1], [1, 2], [1, 3], [1, 4], [2, 3], [2, 5]]);
    assert_eq!(positive(&s, 0), x);
    assert_eq!(positive(&s, 1), y);
}

#[test]
fn two_object_root_lists_minus_five() {
    let s = two_object_rank2(-5);
    let x = set(&[
        [1, 0],
        [0, 1],
        [1, 1],
        [1, 2],
        [1, 3],
        [2, 3],
        [3, 4],
        [3, 5],
        [4, 5],
        [4, 7],
        [5, 7],
        [5, 8],
    ]);
    let y = set(&[
        [1, 0],
        [0, 1],
        [1, 1],
        [1, 2],
        [1, 3],
        [1, 4],
        [1, 5],
        [2, 3],
        [2, 5],
        [2, 7],
        [3, 7],
        [3, 8],
    ]);
    assert_eq!(positive(&s, 0), x);
    assert_eq!(positive(&s, 1), y);
}

#[test]
fn table_rows_are_exact() {
    let expected = [
        (2, 2, 32, 8, "B2"),
        (2, 2, 48, 12, "G2"),
        (2, 3, 192, 13, "B3"),
        (2, 3, 192, 13, "B3"),
        (3, 2, 36, 6, "A1×A1"),
        (3, 2, 72, 12, "B2"),
        (3, 2, 72, 12, "B2"),
        (3, 2, 108, 18, "G2"),
        (3, 2, 108, 18, "G2"),
    ];
    let rows = appendix_table().unwrap();
    assert_eq!(rows.len(), 9);
    for (row, e) in rows.iter().zip(expected) {
        assert_eq!(
            (row.objects, row.rank, row.groupoid_size, row.positive_roots, row.stabilizer.as_str()),
            e
        );
    }
}

#[test]
fn rank_three_two_object_pairs() {
    for variant in 0..2 {
        let s = two_object_rank3(variant);
        assert_eq!(positive(&s, 0).len(), 13);
        assert_eq!(positive(&s, 1).len(), 13);
        let w = generate_groupoid(&s, 100_000);
        assert_eq!(w.total_size().unwrap(), 192);
        let g = w.stabilizer(0).unwrap();
        assert_eq!(g.order(), 48);
        assert_eq!(identify_coxeter_type(&g).label(), "B3");
    }
    let report = verify_two_object_rank3_exceptionals();
    assert!(report.all_passed(), "{report}");
}

#[test]
fn rank_four_standard_schemes() {
    // classical counts: n^2 for B_n and C_n, n(n-1) for D_n, 24 for F4
    let report = verify_standard_rank4();
    assert!(report.all_passed(), "{report}");
    for (label, s, count) in weylkit::classify::rank4_standard_schemes() {
        let classical = match label {
            "B4" | "C4" => 4 * 4,
            "D4" => 4 * 3,
            _ => 24,
        };
        assert_eq!(count, classical);
        for a in 0..3 {
            assert_eq!(positive(&s, a).len(), classical, "{label}");
        }
    }
}

#[test]
fn coset_scheme_of_double_transposition() {
    let s = coset_scheme(3, &[vec![2, 1, 4, 3]]).unwrap();
    assert_eq!(s.object_count(), 12);
    assert!(s.is_connected());
    let w = generate_groupoid(&s, 100_000);
    assert_eq!(w.hom_size(0, 0).unwrap(), 2);
    // α_i + … + α_j for 1 ≤ i ≤ j ≤ 3
    let mut expected = BTreeSet::new();
    for i in 0..3 {
        for j in i..3 {
            expected.insert((0..3).map(|k| i64::from(i <= k && k <= j)).collect::<Root>());
        }
    }
    assert_eq!(expected.len(), 6);
    for a in 0..12 {
        assert_eq!(positive(&s, a), expected);
    }
}

/// `t` from plain 2×2 arithmetic, one reflection per step of the loop.
fn loop_product(a: i64, b: i64, c: i64, d: i64) -> [[i64; 2]; 2] {
    let mul = |p: [[i64; 2]; 2], q: [[i64; 2]; 2]| {
        let mut r = [[0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                r[i][j] = p[i][0] * q[0][j] + p[i][1] * q[1][j];
            }
        }
        r
    };
    // σ_1 with c_12 = -p: α_1 ↦ -α_1, α_2 ↦ α_2 + p α_1
    let s1 = |p: i64| [[-1, p], [0, 1]];
    // σ_2 with c_21 = -q: α_1 ↦ α_1 + q α_2, α_2 ↦ -α_2
    let s2 = |q: i64| [[1, 0], [q, -1]];
    // x -1-> y -2-> z -1-> z -2-> y -1-> x -2-> x, matrices at the source
    let steps = [s1(a), s2(d), s1(b), s2(d), s1(a), s2(c)];
    steps.iter().fold([[1, 0], [0, 1]], |acc, m| mul(*m, acc))
}

#[test]
fn trace_closed_forms_on_the_full_grid() {
    let start = std::time::Instant::now();
    let mut mismatches = 0;
    for a in 1..=9 {
        for b in 1..=9 {
            for c in 1..=9 {
                for d in 1..=9 {
                    match trace_polynomials(a, b, c, d) {
                        Ok(r) if r.t == loop_product(a, b, c, d) => {}
                        _ => mismatches += 1,
                    }
                }
            }
        }
    }
    assert_eq!(mismatches, 0);
    assert!(start.elapsed().as_secs_f64() < 5.0);
}
