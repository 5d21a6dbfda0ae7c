use weylkit::classify::{
    classify, rank2_three_object_parameters, standard_matrix, standard_three_object, two_object_rank2,
    two_object_rank3, ClassificationReport, ReflectionPattern, SearchOptions, SearchSpace, ID3, XY, XZ, YZ,
};
use weylkit::scheme::schemes_equivalent;
use weylkit::{CartanMatrix, CartanScheme};

fn run(space: SearchSpace, keep: bool) -> ClassificationReport {
    classify(&space, &SearchOptions { keep_reducible: keep, ..Default::default() })
}

fn equivalent(s: &CartanScheme, t: &CartanScheme) -> bool {
    matches!(schemes_equivalent(s, t), Ok(Some(_)))
}

/// Every record matches exactly one expected scheme and vice versa.
fn assert_same_classes(report: &ClassificationReport, expected: &[CartanScheme]) {
    assert_eq!(report.records.len(), expected.len(), "{report}");
    for e in expected {
        let hits = report.records.iter().filter(|r| equivalent(&r.scheme, e)).count();
        assert_eq!(hits, 1, "expected {:?}", e.to_raw());
    }
}

fn two_standard(rows: &[Vec<i64>], reflections: [[usize; 2]; 2]) -> CartanScheme {
    CartanScheme::standard(
        CartanMatrix::new(rows).unwrap(),
        vec!["x".into(), "y".into()],
        reflections.iter().map(|r| r.to_vec()).collect(),
    )
    .unwrap()
}

#[test]
fn rank_two_three_objects() {
    let report = run(SearchSpace::new(2, 3, 8), false);
    assert_eq!(report.inconclusive(), 0);
    let mut found: Vec<((i64, i64, i64, i64), usize)> = report
        .records
        .iter()
        .map(|r| (rank2_three_object_parameters(&r.scheme).unwrap(), r.positive_roots))
        .collect();
    found.sort();
    let mut expected = vec![
        ((1, 1, 1, 1), 3),
        ((1, 1, 3, 3), 6),
        ((1, 2, 4, 2), 6),
        ((1, 3, 6, 2), 12),
        ((1, 4, 5, 2), 12),
        ((1, 3, 7, 2), 18),
        ((1, 5, 5, 2), 18),
    ];
    expected.sort();
    assert_eq!(found, expected);
}

#[test]
fn rank_two_bound_twelve_adds_nothing() {
    let a = run(SearchSpace::new(2, 3, 8), false);
    let b = run(SearchSpace::new(2, 3, 12), false);
    assert_eq!(b.inconclusive(), 0);
    let keys = |r: &ClassificationReport| r.records.iter().map(|x| x.key.clone()).collect::<Vec<_>>();
    assert_eq!(keys(&a), keys(&b));
}

#[test]
fn two_objects_one_swap() {
    let report = run(SearchSpace::new(2, 2, 8).with_kappa(1), true);
    assert_eq!(report.inconclusive(), 0);
    let swap_first = [[1, 0], [0, 1]];
    let expected = vec![
        two_standard(&[vec![2, 0], vec![0, 2]], swap_first),
        two_standard(&[vec![2, -2], vec![-1, 2]], swap_first),
        two_standard(&[vec![2, -1], vec![-2, 2]], swap_first),
        two_standard(&[vec![2, -3], vec![-1, 2]], swap_first),
        two_standard(&[vec![2, -1], vec![-3, 2]], swap_first),
        two_object_rank2(-4),
        two_object_rank2(-5),
    ];
    assert_same_classes(&report, &expected);
    // the A2 product is absent
    let a2 = two_standard(&[vec![2, -1], vec![-1, 2]], swap_first);
    assert!(report.records.iter().all(|r| !equivalent(&r.scheme, &a2)));
}

#[test]
fn two_objects_two_swaps() {
    let report = run(SearchSpace::new(2, 2, 8).with_kappa(2), true);
    assert_eq!(report.inconclusive(), 0);
    let both = [[1, 0], [1, 0]];
    let expected = vec![
        two_standard(&[vec![2, 0], vec![0, 2]], both),
        two_standard(&[vec![2, -1], vec![-1, 2]], both),
        two_standard(&[vec![2, -2], vec![-1, 2]], both),
        two_standard(&[vec![2, -3], vec![-1, 2]], both),
    ];
    assert_same_classes(&report, &expected);
}

#[test]
fn rank_three_two_objects_non_standard() {
    let report = run(SearchSpace::new(3, 2, 4), false);
    assert_eq!(report.inconclusive(), 0);
    let odd: Vec<&CartanScheme> = report.records.iter().filter(|r| !r.standard).map(|r| &r.scheme).collect();
    assert_eq!(odd.len(), 2);
    for variant in 0..2 {
        let e = two_object_rank3(variant);
        assert_eq!(odd.iter().filter(|s| equivalent(s, &e)).count(), 1);
    }
}

#[test]
fn nine_non_standard_up_to_three_objects() {
    let spaces = [
        (SearchSpace::new(2, 2, 8), false),
        (SearchSpace::new(2, 3, 8), false),
        (SearchSpace::new(3, 2, 4), false),
        (SearchSpace::new(3, 3, 3), false),
    ];
    let mut odd: Vec<CartanScheme> = Vec::new();
    for (space, keep) in spaces {
        odd.extend(run(space, keep).records.into_iter().filter(|r| !r.standard).map(|r| r.scheme));
    }
    for (k, s) in odd.iter().enumerate() {
        for t in &odd[k + 1..] {
            assert!(!equivalent(s, t));
        }
    }
    assert_eq!(odd.len(), 9);
}

#[test]
fn rank_three_three_objects_small_bound() {
    let report = run(SearchSpace::new(3, 3, 3), false);
    assert_eq!(report.inconclusive(), 0);
    let expected = vec![
        standard_three_object(&standard_matrix("A3").unwrap(), &[XY, YZ, XY]),
        standard_three_object(&standard_matrix("B3").unwrap(), &[XY, YZ, ID3]),
        standard_three_object(&standard_matrix("C3").unwrap(), &[XY, YZ, ID3]),
    ];
    assert_same_classes(&report, &expected);
    assert!(report.records.iter().all(|r| r.standard));
    let case3 = ReflectionPattern { objects: 3, maps: vec![XY.to_vec(), YZ.to_vec(), XZ.to_vec()] };
    let summary = report.patterns.iter().find(|p| p.pattern == case3).unwrap();
    assert_eq!(summary.records, 0);
    assert_eq!(summary.raw_count, 0);
}

#[test]
fn output_is_independent_of_order_and_workers() {
    let space = SearchSpace::new(3, 2, 3);
    let base = classify(&space, &SearchOptions { jobs: 1, ..Default::default() });
    for options in [
        SearchOptions { jobs: 2, ..Default::default() },
        SearchOptions { jobs: 3, reverse: true, ..Default::default() },
    ] {
        let other = classify(&space, &options);
        assert_eq!(base.to_string(), other.to_string());
        assert_eq!(base.records, other.records);
    }
}
