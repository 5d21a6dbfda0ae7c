//! Structural checks run on every finite scheme found by the searches.
//! Each check recomputes what it needs from the scheme and its root
//! closure, so it does not trust the search bookkeeping.

#![allow(dead_code)]

use std::collections::BTreeSet;

use weylkit::classify::{
    classify, rank4_standard_schemes, standard_matrix, standard_three_object, table_schemes, SearchOptions,
    SearchSpace, ID3, XY, YZ,
};
use weylkit::groupoid::{generate_groupoid, reflection_matrix, WeylGroupoid};
use weylkit::roots::{root_closure, RootSystem, RootVerdict};
use weylkit::{CartanScheme, Root};

pub const ROOT_CAP: usize = 512;
pub const HOM_CAP: usize = 100_000;

/// Finite schemes from the small searches, the table and the named
/// standard schemes of rank three and four.
pub fn finite_schemes(rank3_bound: i64) -> Vec<CartanScheme> {
    let keep = SearchOptions { keep_reducible: true, ..Default::default() };
    let spaces = [
        (SearchSpace::new(2, 2, 8).with_kappa(1), &keep),
        (SearchSpace::new(2, 2, 8).with_kappa(2), &keep),
        (SearchSpace::new(2, 3, 8), &keep),
        (SearchSpace::new(3, 2, 4), &keep),
        (SearchSpace::new(3, 3, rank3_bound), &keep),
    ];
    let mut out: Vec<CartanScheme> = Vec::new();
    for (space, options) in spaces {
        out.extend(classify(&space, options).records.into_iter().map(|r| r.scheme));
    }
    out.extend(table_schemes().into_iter().map(|(_, s, _)| s));
    out.extend(rank4_standard_schemes().into_iter().map(|(_, s, _)| s));
    out.push(standard_three_object(&standard_matrix("A3").unwrap(), &[XY, YZ, XY]));
    out.push(standard_three_object(&standard_matrix("B3").unwrap(), &[XY, YZ, ID3]));
    out.push(standard_three_object(&standard_matrix("C3").unwrap(), &[XY, YZ, ID3]));
    out
}

pub struct Finite {
    pub scheme: CartanScheme,
    pub roots: RootSystem,
    pub groupoid: WeylGroupoid,
}

pub fn prepare(s: &CartanScheme) -> Result<Finite, String> {
    let roots = match root_closure(s, ROOT_CAP) {
        RootVerdict::Finite(r) => r,
        other => return Err(format!("closure not finite: {other:?}")),
    };
    let groupoid = generate_groupoid(s, HOM_CAP);
    if !groupoid.is_finite() {
        return Err("groupoid exceeded its cap".into());
    }
    Ok(Finite { scheme: s.clone(), roots, groupoid })
}

fn simple(n: usize, i: usize) -> Root {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Positive roots at `a` supported on `{i, j}`.
fn rank2_part(f: &Finite, a: usize, i: usize, j: usize) -> BTreeSet<Root> {
    f.roots
        .positive_roots(a)
        .iter()
        .filter(|r| r.iter().enumerate().all(|(k, &x)| x == 0 || k == i || k == j))
        .cloned()
        .collect()
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
}

/// `c_ij = c_ji = 0` iff the `{i,j}` roots are just the simple ones iff
/// `m_ij = 2`; `c_ij = c_ji = −1` iff they are `α_i, α_i+α_j, α_j` iff
/// `m_ij = 3`.
pub fn zero_and_minus_one_entries(f: &Finite) -> Result<(), String> {
    let s = &f.scheme;
    let n = s.rank();
    for a in 0..s.object_count() {
        for (i, j) in pairs(n) {
            let part = rank2_part(f, a, i, j);
            let m = f.roots.m_value(a, i, j).map_err(|e| e.to_string())?;
            let first: BTreeSet<Root> = [simple(n, i), simple(n, j)].into();
            let zero = s.entry(a, i, j) == 0 && s.entry(a, j, i) == 0;
            if zero != (part == first) || zero != (m == 2) {
                return Err(format!("m=2 equivalence fails at object {a}, pair ({i},{j})"));
            }
            let mut sum = simple(n, i);
            sum[j] = 1;
            let second: BTreeSet<Root> = [simple(n, i), simple(n, j), sum].into();
            let minus_one = s.entry(a, i, j) == -1 && s.entry(a, j, i) == -1;
            if minus_one != (part == second) || minus_one != (m == 3) {
                return Err(format!("m=3 equivalence fails at object {a}, pair ({i},{j})"));
            }
        }
    }
    Ok(())
}

/// `c^a_ij = 0` implies row `j` of `C^a` and `C^{ρ_i(a)}` agree.
pub fn zero_entry_keeps_row(f: &Finite) -> Result<(), String> {
    let s = &f.scheme;
    for a in 0..s.object_count() {
        for (i, j) in pairs(s.rank()) {
            if s.entry(a, i, j) == 0 {
                let b = s.reflect(i, a);
                if s.matrix(a).rows()[j] != s.matrix(b).rows()[j] {
                    return Err(format!("row {j} differs between objects {a} and {b}"));
                }
            }
        }
    }
    Ok(())
}

/// `m^a_ij = 3` implies `c^{ρ_i a}_il + c^{ρ_i a}_jl = c^{ρ_iρ_j a}_il + c^{ρ_iρ_j a}_jl`.
pub fn m3_column_sums(f: &Finite) -> Result<(), String> {
    let s = &f.scheme;
    for a in 0..s.object_count() {
        for (i, j) in pairs(s.rank()) {
            if f.roots.m_value(a, i, j).unwrap() != 3 {
                continue;
            }
            let b = s.reflect(i, a);
            let c = s.reflect(i, s.reflect(j, a));
            for l in 0..s.rank() {
                if s.entry(b, i, l) + s.entry(b, j, l) != s.entry(c, i, l) + s.entry(c, j, l) {
                    return Err(format!("column sums differ at object {a}, ({i},{j}), l={l}"));
                }
            }
        }
    }
    Ok(())
}

/// If `ρ_i(a) = ρ_j(a) ≠ a` and `ρ_l(a) = a` then `c^a_ij c^a_il c^a_jl = 0`.
pub fn triangle_product_vanishes(f: &Finite) -> Result<(), String> {
    let s = &f.scheme;
    let n = s.rank();
    for a in 0..s.object_count() {
        for (i, j) in pairs(n) {
            let b = s.reflect(i, a);
            if b == a || s.reflect(j, a) != b {
                continue;
            }
            for l in (0..n).filter(|&l| s.reflect(l, a) == a) {
                if s.entry(a, i, j) * s.entry(a, i, l) * s.entry(a, j, l) != 0 {
                    return Err(format!("nonzero product at object {a}, ({i},{j},{l})"));
                }
            }
        }
    }
    Ok(())
}

/// For two objects with `ρ_l` swapping and `ρ_i, ρ_j` fixing them, and at
/// least two fixing indices: `c^x_li c^x_lj = 0`.
pub fn swap_row_single_link(f: &Finite) -> Result<(), String> {
    let s = &f.scheme;
    if s.object_count() != 2 {
        return Ok(());
    }
    let n = s.rank();
    let swapping: Vec<usize> = (0..n).filter(|&i| s.reflect(i, 0) != 0).collect();
    let fixing: Vec<usize> = (0..n).filter(|&i| s.reflect(i, 0) == 0).collect();
    if swapping.is_empty() || fixing.len() < 2 {
        return Ok(());
    }
    for &l in &swapping {
        for (&i, &j) in fixing.iter().flat_map(|i| fixing.iter().map(move |j| (i, j))) {
            if i != j && s.entry(0, l, i) * s.entry(0, l, j) != 0 {
                return Err(format!("c_{l}{i} c_{l}{j} != 0"));
            }
        }
    }
    Ok(())
}

/// On standard two-object schemes, `c^x_ij c^x_ji != 1` whenever `ρ_i`
/// swaps the objects and `ρ_j` fixes them.
pub fn swap_fix_product_not_one(f: &Finite) -> Result<(), String> {
    let s = &f.scheme;
    if s.object_count() != 2 || !s.is_standard() {
        return Ok(());
    }
    for (i, j) in pairs(s.rank()) {
        if s.reflect(i, 0) != 0 && s.reflect(j, 0) == 0 && s.entry(0, i, j) * s.entry(0, j, i) == 1 {
            return Err(format!("c_{i}{j} c_{j}{i} = 1"));
        }
    }
    Ok(())
}

/// The longest morphism from `a` has length `|R^a_+|`, and the roots
/// `β_n = σ_{i_1} ⋯ σ_{i_{n−1}}(α_{i_n})` along its reduced word are
/// distinct and exhaust `R^a_+`.
pub fn longest_word_roots(f: &Finite) -> Result<(), String> {
    let s = &f.scheme;
    let n = s.rank();
    for a in 0..s.object_count() {
        let (_, longest) = f.groupoid.longest_from(a).map_err(|e| e.to_string())?;
        let positive: BTreeSet<Root> = f.roots.positive_roots(a).iter().cloned().collect();
        if longest.length != positive.len() {
            return Err(format!("longest length {} vs {} roots at {a}", longest.length, positive.len()));
        }
        let mut prefix = weylkit::IntMatrix::identity(n);
        let mut object = a;
        let mut betas = BTreeSet::new();
        for &i in &longest.word {
            betas.insert(prefix.apply(&simple(n, i)));
            prefix = prefix.mul(&reflection_matrix(s, i, object));
            object = s.reflect(i, object);
        }
        if betas != positive {
            return Err(format!("beta roots differ from R^a_+ at object {a}"));
        }
    }
    Ok(())
}

pub fn groupoid_size_identity(f: &Finite) -> Result<(), String> {
    let s = &f.scheme;
    let total = f.groupoid.total_size().map_err(|e| e.to_string())?;
    let k = s.object_count();
    for a in 0..k {
        let hom = f.groupoid.hom_size(a, a).unwrap();
        if total != k * k * hom {
            return Err(format!("|W| = {total} but |A|^2 |Hom({a})| = {}", k * k * hom));
        }
    }
    Ok(())
}

/// Every root is real: `R^a` equals the set of `w(α_i)` over morphisms
/// `w` into `a`, and closing again changes nothing.
pub fn all_roots_real(f: &Finite) -> Result<(), String> {
    let s = &f.scheme;
    let n = s.rank();
    for a in 0..s.object_count() {
        let mut real = BTreeSet::new();
        for b in 0..s.object_count() {
            for e in f.groupoid.hom(b, a).unwrap() {
                for i in 0..n {
                    real.insert(e.matrix.apply(&simple(n, i)));
                }
            }
        }
        let roots: BTreeSet<Root> = f.roots.roots(a).into_iter().collect();
        if real != roots {
            return Err(format!("real roots at {a} differ from the closure"));
        }
    }
    match root_closure(s, ROOT_CAP) {
        RootVerdict::Finite(again) if again == f.roots => Ok(()),
        _ => Err("second closure differs".into()),
    }
}

/// Closure finite iff groupoid generation terminates.
pub fn closure_matches_groupoid(s: &CartanScheme, hom_cap: usize) -> Result<(), String> {
    let closure = root_closure(s, ROOT_CAP).is_finite();
    let groupoid = generate_groupoid(s, hom_cap).is_finite();
    if closure == groupoid {
        Ok(())
    } else {
        Err(format!("closure finite = {closure}, groupoid finite = {groupoid}"))
    }
}

pub type LemmaCheck = fn(&Finite) -> Result<(), String>;

pub const LEMMA_CHECKS: [(&str, LemmaCheck); 9] = [
    ("zero and minus-one entries", zero_and_minus_one_entries),
    ("zero entry keeps row", zero_entry_keeps_row),
    ("m=3 column sums", m3_column_sums),
    ("triangle product vanishes", triangle_product_vanishes),
    ("swap row single link", swap_row_single_link),
    ("swap-fix product not one", swap_fix_product_not_one),
    ("longest word roots", longest_word_roots),
    ("groupoid size identity", groupoid_size_identity),
    ("all roots real", all_roots_real),
];

/// Runs every check on every scheme; returns the failures.
pub fn run_all(schemes: &[CartanScheme]) -> Vec<String> {
    let mut failures = Vec::new();
    for s in schemes {
        let f = match prepare(s) {
            Ok(f) => f,
            Err(e) => {
                failures.push(e);
                continue;
            }
        };
        for (name, check) in LEMMA_CHECKS {
            if let Err(e) = check(&f) {
                failures.push(format!("{name}: {e} in {:?}", s.to_raw()));
            }
        }
        if let Err(e) = closure_matches_groupoid(s, HOM_CAP) {
            failures.push(e);
        }
    }
    failures
}
