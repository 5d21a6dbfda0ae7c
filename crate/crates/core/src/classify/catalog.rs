//! Named schemes, the table of non-standard finite groupoids, and fixed
//! verification runs.

use std::fmt;

use thiserror::Error;

use crate::coxeter::identify_coxeter_type;
use crate::groupoid::{generate_groupoid, DEFAULT_HOM_CAP};
use crate::roots::{root_closure, RootVerdict, Witness, DEFAULT_ROOT_CAP};
use crate::scheme::{for_each_permutation, CartanMatrix, CartanScheme};

use super::{decide, Caps, Decision, Infinite};

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn matrix(rows: &[[i64; 4]], n: usize) -> CartanMatrix {
    let rows: Vec<Vec<i64>> = rows.iter().take(n).map(|r| r[..n].to_vec()).collect();
    CartanMatrix::new(&rows).expect("catalog matrices are valid")
}

/// Standard matrices of the types used below.
pub fn standard_matrix(label: &str) -> Option<CartanMatrix> {
    let m = match label {
        "A2" => matrix(&[[2, -1, 0, 0], [-1, 2, 0, 0]], 2),
        "B2" => matrix(&[[2, -2, 0, 0], [-1, 2, 0, 0]], 2),
        "G2" => matrix(&[[2, -1, 0, 0], [-3, 2, 0, 0]], 2),
        "A3" => matrix(&[[2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, 0]], 3),
        "B3" => matrix(&[[2, -1, 0, 0], [-1, 2, -1, 0], [0, -2, 2, 0]], 3),
        "C3" => matrix(&[[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, 0]], 3),
        "A4" => matrix(&[[2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -1, 2]], 4),
        "B4" => matrix(&[[2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -2, 2]], 4),
        "C4" => matrix(&[[2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -2], [0, 0, -1, 2]], 4),
        "D4" => matrix(&[[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]], 4),
        "F4" => matrix(&[[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]], 4),
        _ => return None,
    };
    Some(m)
}

/// Transpositions on `x, y, z` as reflection maps.
pub const XY: [usize; 3] = [1, 0, 2];
pub const YZ: [usize; 3] = [0, 2, 1];
pub const XZ: [usize; 3] = [2, 1, 0];
pub const ID3: [usize; 3] = [0, 1, 2];

/// Standard scheme of `m` on `x, y, z` with the given reflection maps.
pub fn standard_three_object(m: &CartanMatrix, maps: &[[usize; 3]]) -> CartanScheme {
    CartanScheme::standard(m.clone(), names(&["x", "y", "z"]), maps.iter().map(|r| r.to_vec()).collect())
        .expect("reflection maps are involutions")
}

/// The rank-two scheme on `x –1– y –2– z` with
/// `C^x = [[2,−a],[−c,2]]`, `C^y = [[2,−a],[−d,2]]`, `C^z = [[2,−b],[−d,2]]`.
pub fn rank2_three_object_scheme(a: i64, b: i64, c: i64, d: i64) -> CartanScheme {
    CartanScheme::new(
        names(&["x", "y", "z"]),
        vec![XY.to_vec(), YZ.to_vec()],
        vec![vec![vec![2, -a], vec![-c, 2]], vec![vec![2, -a], vec![-d, 2]], vec![vec![2, -b], vec![-d, 2]]],
    )
    .expect("positive parameters give a Cartan scheme")
}

/// The lexicographically least `(a, b, c, d)` such that `s` is a relabeling
/// of [`rank2_three_object_scheme`]`(a, b, c, d)`.
pub fn rank2_three_object_parameters(s: &CartanScheme) -> Option<(i64, i64, i64, i64)> {
    if s.rank() != 2 || s.object_count() != 3 {
        return None;
    }
    let mut best = None;
    for_each_permutation(2, |im| {
        for_each_permutation(3, |om| {
            let t = s.relabeled(im, om);
            if t.reflections() == [XY.to_vec(), YZ.to_vec()] {
                let q = (-t.entry(0, 0, 1), -t.entry(2, 0, 1), -t.entry(0, 1, 0), -t.entry(1, 1, 0));
                if q.0 > 0 && q.1 > 0 && q.2 > 0 && q.3 > 0 && best.is_none_or(|b| q < b) {
                    best = Some(q);
                }
            }
            false
        });
        false
    });
    best
}

/// Two objects, `ρ_1` swapping them, `ρ_2` fixing them, with
/// `c^x_{12} = c^y_{12} = −1`, `c^x_{21} = −3` and `c^y_{21} = cy21`.
pub fn two_object_rank2(cy21: i64) -> CartanScheme {
    CartanScheme::new(
        names(&["x", "y"]),
        vec![vec![1, 0], vec![0, 1]],
        vec![vec![vec![2, -1], vec![-3, 2]], vec![vec![2, -1], vec![cy21, 2]]],
    )
    .expect("valid two-object scheme")
}

/// The two exceptional rank-three pairs on two objects (`variant` 0 or 1),
/// `ρ_1` swapping `x, y` and `ρ_2, ρ_3` fixing both.
pub fn two_object_rank3(variant: usize) -> CartanScheme {
    let (x, y) = match variant {
        0 => (
            vec![vec![2, -1, 0], vec![-2, 2, -1], vec![0, -1, 2]],
            vec![vec![2, -1, 0], vec![-2, 2, -2], vec![0, -1, 2]],
        ),
        _ => (
            vec![vec![2, -2, 0], vec![-1, 2, -1], vec![0, -1, 2]],
            vec![vec![2, -2, 0], vec![-1, 2, -2], vec![0, -1, 2]],
        ),
    };
    CartanScheme::new(names(&["x", "y"]), vec![vec![1, 0], vec![0, 1], vec![0, 1]], vec![x, y])
        .expect("valid two-object scheme")
}

/// One row of the table: `(|A|, |I|, |W|, |R^a_+|, Hom(a))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub name: &'static str,
    pub objects: usize,
    pub rank: usize,
    pub groupoid_size: usize,
    pub positive_roots: usize,
    pub stabilizer: String,
}

impl fmt::Display for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.name, self.objects, self.rank, self.groupoid_size, self.positive_roots, self.stabilizer
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("row {name}: expected {expected:?}, computed {found:?}")]
    RowMismatch {
        name: &'static str,
        expected: (usize, usize, usize, usize, &'static str),
        found: (usize, usize, usize, usize, String),
    },
}

/// Expected (objects, rank, |W|, |R+|, stabilizer) of a table row.
pub type ExpectedRow = (usize, usize, usize, usize, &'static str);

/// The non-standard connected irreducible finite Weyl groupoids with at most
/// three objects, with their expected rows.
pub fn table_schemes() -> Vec<(&'static str, CartanScheme, ExpectedRow)> {
    vec![
        ("2 objects, rank 2, c^y_21=-4", two_object_rank2(-4), (2, 2, 32, 8, "B2")),
        ("2 objects, rank 2, c^y_21=-5", two_object_rank2(-5), (2, 2, 48, 12, "G2")),
        ("2 objects, rank 3, c^x_21=-2", two_object_rank3(0), (2, 3, 192, 13, "B3")),
        ("2 objects, rank 3, c^x_12=-2", two_object_rank3(1), (2, 3, 192, 13, "B3")),
        ("3 objects, rank 2, (1,2,4,2)", rank2_three_object_scheme(1, 2, 4, 2), (3, 2, 36, 6, "A1×A1")),
        ("3 objects, rank 2, (1,3,6,2)", rank2_three_object_scheme(1, 3, 6, 2), (3, 2, 72, 12, "B2")),
        ("3 objects, rank 2, (1,4,5,2)", rank2_three_object_scheme(1, 4, 5, 2), (3, 2, 72, 12, "B2")),
        ("3 objects, rank 2, (1,3,7,2)", rank2_three_object_scheme(1, 3, 7, 2), (3, 2, 108, 18, "G2")),
        ("3 objects, rank 2, (1,5,5,2)", rank2_three_object_scheme(1, 5, 5, 2), (3, 2, 108, 18, "G2")),
    ]
}

/// Computes the row of a finite connected scheme at its first object.
pub fn table_row(name: &'static str, s: &CartanScheme) -> Option<TableRow> {
    let w = generate_groupoid(s, DEFAULT_HOM_CAP);
    let roots = root_closure(s, DEFAULT_ROOT_CAP);
    let roots = roots.system()?;
    let stabilizer = w.stabilizer(0).ok()?;
    Some(TableRow {
        name,
        objects: s.object_count(),
        rank: s.rank(),
        groupoid_size: w.total_size().ok()?,
        positive_roots: roots.positive_count(0),
        stabilizer: identify_coxeter_type(&stabilizer).label(),
    })
}

/// Builds all nine table rows, failing on the first row that differs from
/// its expected value.
pub fn appendix_table() -> Result<Vec<TableRow>, TableError> {
    let mut rows = Vec::new();
    for (name, s, expected) in table_schemes() {
        let row = table_row(name, &s);
        let found = row.as_ref().map_or((0, 0, 0, 0, "not finite".to_string()), |r| {
            (r.objects, r.rank, r.groupoid_size, r.positive_roots, r.stabilizer.clone())
        });
        let ok = found.0 == expected.0
            && found.1 == expected.1
            && found.2 == expected.2
            && found.3 == expected.3
            && found.4 == expected.4;
        if !ok {
            return Err(TableError::RowMismatch { name, expected, found });
        }
        rows.push(row.expect("checked above"));
    }
    Ok(rows)
}

/// A named pass/fail check with detail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "ok" } else { "FAILED" };
            writeln!(f, "{status}: {} ({})", c.name, c.detail)?;
        }
        Ok(())
    }
}

/// Checks both exceptional rank-three two-object pairs: finite, 13 positive
/// roots, 192 morphisms, stabilizer of order 48 and type B3. Also checks that
/// changing `c^y_23` to −3 destroys finiteness.
pub fn verify_two_object_rank3_exceptionals() -> VerificationReport {
    let mut report = VerificationReport::default();
    for variant in 0..2 {
        let s = two_object_rank3(variant);
        let name = format!("rank-3 two-object pair {}", variant + 1);
        match table_row("pair", &s) {
            Some(row) => {
                let w = generate_groupoid(&s, DEFAULT_HOM_CAP);
                let order = w.stabilizer(0).map(|g| g.order()).unwrap_or(0);
                let detail = format!(
                    "|R+|={} |W|={} |Hom(x)|={} type={}",
                    row.positive_roots, row.groupoid_size, order, row.stabilizer
                );
                let passed = row.positive_roots == 13
                    && row.groupoid_size == 192
                    && order == 48
                    && row.stabilizer == "B3";
                report.push(name, passed, detail);
            }
            None => report.push(name, false, "root closure is not finite"),
        }

        let mut raw = s.to_raw();
        raw.matrices[1][1][2] = -3;
        let modified = raw.validate().expect("still a Cartan scheme");
        let (not_finite, detail) = match decide(&modified, &Caps::default()) {
            Decision::NotFinite(Infinite::Witness(w)) => (w.replay(&modified), w.to_string()),
            Decision::NotFinite(Infinite::Loop(l)) => (true, format!("loop of infinite order {:?}", l.word)),
            Decision::Finite(_) => (false, "finite".to_string()),
            Decision::Inconclusive => (false, "inconclusive".to_string()),
        };
        report.push(format!("rank-3 two-object pair {} with c^y_23=-3", variant + 1), not_finite, detail);
    }
    report
}

/// The rank-four standard schemes on three objects with their reflection
/// maps. B4/C4 use `x ={1,3}= y –2– z`, D4 `x ={1,3,4}= y –2– z`, F4
/// `x –1– y –2– z`.
pub fn rank4_standard_schemes() -> Vec<(&'static str, CartanScheme, usize)> {
    let b_c = [XY, YZ, XY, ID3];
    let d = [XY, YZ, XY, XY];
    let f = [XY, YZ, ID3, ID3];
    vec![
        ("B4", standard_three_object(&standard_matrix("B4").unwrap(), &b_c), 16),
        ("C4", standard_three_object(&standard_matrix("C4").unwrap(), &b_c), 16),
        ("D4", standard_three_object(&standard_matrix("D4").unwrap(), &d), 12),
        ("F4", standard_three_object(&standard_matrix("F4").unwrap(), &f), 24),
    ]
}

/// Checks the rank-four standard schemes (finite, axioms hold, expected
/// root counts) and that `A4` under every index labeling fails R4 on each
/// of the three diagrams.
pub fn verify_standard_rank4() -> VerificationReport {
    let mut report = VerificationReport::default();
    for (label, s, expected) in rank4_standard_schemes() {
        match root_closure(&s, DEFAULT_ROOT_CAP) {
            RootVerdict::Finite(r) => {
                let axioms = r.check().all_pass();
                let count = r.positive_count(0);
                report.push(
                    format!("{label} on three objects"),
                    axioms && count == expected && s.is_connected(),
                    format!("|R+|={count}, axioms {}", if axioms { "hold" } else { "fail" }),
                );
            }
            other => report.push(format!("{label} on three objects"), false, format!("{other:?}")),
        }
    }
    let a4 = standard_matrix("A4").unwrap();
    let diagrams: [(&str, [[usize; 3]; 4]); 3] = [
        ("x={1,3}=y-2-z", [XY, YZ, XY, ID3]),
        ("x={1,3,4}=y-2-z", [XY, YZ, XY, XY]),
        ("x-1-y-2-z", [XY, YZ, ID3, ID3]),
    ];
    for (name, maps) in diagrams {
        let mut all_r4 = true;
        let mut labelings = 0;
        for_each_permutation(4, |perm| {
            let s = standard_three_object(&a4.permuted(perm), &maps);
            labelings += 1;
            if !matches!(
                root_closure(&s, DEFAULT_ROOT_CAP),
                RootVerdict::NoFiniteSystem(Witness::R4Violation { .. })
            ) {
                all_r4 = false;
            }
            false
        });
        report.push(format!("A4 on {name}"), all_r4, format!("{labelings} labelings, all violate R4"));
    }
    report
}
