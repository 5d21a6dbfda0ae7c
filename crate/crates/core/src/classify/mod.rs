//! Bounded exhaustive classification of finite Weyl groupoids.
//!
//! A search fixes the number of objects, the rank, a pattern of reflection
//! maps and a bound `B`; off-diagonal entries range over `0, −1, …, −B`.
//! Entries are attached to `(i, ρ_i-orbit, j)`, which builds (C2) into the
//! enumeration. For rank three and more, the entries of every index pair are
//! first filtered by deciding the rank-two restriction, since a restriction
//! of a finite root system is finite.

pub mod catalog;
pub mod dynkin;
pub mod trace;

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::coxeter::identify_coxeter_type;
use crate::groupoid::{find_infinite_loop, generate_groupoid, InfiniteLoop, DEFAULT_HOM_CAP};
use crate::roots::{root_closure, RootSystem, RootVerdict, Witness, DEFAULT_ROOT_CAP};
use crate::scheme::{canonical_form, canonical_object_names, for_each_permutation, CartanScheme};

pub use catalog::*;
pub use dynkin::{dynkin_type, DynkinType};
pub use trace::{trace_polynomials, TraceReport};

/// Resource bounds for deciding a single scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Positive roots per object in the real-root closure.
    pub roots: usize,
    /// Morphisms per hom-set when generating a groupoid.
    pub hom: usize,
    /// Morphisms inspected per object when looking for a loop of infinite
    /// order.
    pub certificate: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { roots: DEFAULT_ROOT_CAP, hom: DEFAULT_HOM_CAP, certificate: 20_000 }
    }
}

/// Why a scheme has no finite root system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Infinite {
    Witness(Witness),
    Loop(InfiniteLoop),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Finite(RootSystem),
    NotFinite(Infinite),
    Inconclusive,
}

/// Decides whether `s` admits a finite root system.
///
/// The real-root closure settles most schemes. When it runs past the cap,
/// a loop of infinite order in the Weyl groupoid proves the groupoid (and so
/// any root system) infinite; without one the scheme is inconclusive.
pub fn decide(s: &CartanScheme, caps: &Caps) -> Decision {
    match root_closure(s, caps.roots) {
        RootVerdict::Finite(r) => Decision::Finite(r),
        RootVerdict::NoFiniteSystem(w) => Decision::NotFinite(Infinite::Witness(w)),
        RootVerdict::CapExceeded => match find_infinite_loop(s, caps.certificate) {
            Some(l) => Decision::NotFinite(Infinite::Loop(l)),
            None => Decision::Inconclusive,
        },
    }
}

/// Reflection maps `ρ_i` on a fixed number of objects.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReflectionPattern {
    pub objects: usize,
    pub maps: Vec<Vec<usize>>,
}

impl ReflectionPattern {
    pub fn rank(&self) -> usize {
        self.maps.len()
    }

    fn components_with(&self, indices: usize) -> usize {
        let mut parent: Vec<usize> = (0..self.objects).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        for map in self.maps.iter().take(indices) {
            for (a, &b) in map.iter().enumerate() {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        (0..self.objects).filter(|&a| find(&mut parent, a) == a).count()
    }

    pub fn is_connected(&self) -> bool {
        self.components_with(self.rank()) == 1
    }

    /// Orbits of `ρ_i` as an orbit id per object, ids in order of first
    /// appearance.
    fn orbit_ids(&self, i: usize) -> (Vec<usize>, usize) {
        let mut id = vec![usize::MAX; self.objects];
        let mut count = 0;
        for a in 0..self.objects {
            if id[a] == usize::MAX {
                id[a] = count;
                id[self.maps[i][a]] = count;
                count += 1;
            }
        }
        (id, count)
    }

    fn relabeled(&self, index_map: &[usize], object_map: &[usize]) -> ReflectionPattern {
        let mut maps = vec![vec![0; self.objects]; self.rank()];
        for (i, map) in self.maps.iter().enumerate() {
            for (a, &b) in map.iter().enumerate() {
                maps[index_map[i]][object_map[a]] = object_map[b];
            }
        }
        ReflectionPattern { objects: self.objects, maps }
    }

    /// Minimized over relabelings: fewest components spanned by all but the
    /// last index, then transposition lists `(q−p, p)` lexicographically,
    /// identity last.
    fn preference_key(&self) -> (usize, Vec<Vec<(usize, usize)>>) {
        let codes = self
            .maps
            .iter()
            .map(|map| {
                let mut code: Vec<(usize, usize)> =
                    (0..self.objects).filter(|&p| map[p] > p).map(|p| (map[p] - p, p)).collect();
                if code.is_empty() {
                    code.push((usize::MAX, 0));
                }
                code
            })
            .collect();
        (self.components_with(self.rank().saturating_sub(1)), codes)
    }

    /// Short text form such as `1:(x y) 2:(y z) 3:id`.
    pub fn describe(&self) -> String {
        let names = canonical_object_names(self.objects);
        self.maps
            .iter()
            .enumerate()
            .map(|(i, map)| {
                let cycles: Vec<String> = (0..self.objects)
                    .filter(|&p| map[p] > p)
                    .map(|p| format!("({} {})", names[p], names[map[p]]))
                    .collect();
                let body = if cycles.is_empty() { "id".to_string() } else { cycles.join("") };
                format!("{}:{body}", i + 1)
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn involutions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn build(map: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        let Some(p) = map.iter().position(|&x| x == usize::MAX) else {
            out.push(map.clone());
            return;
        };
        map[p] = p;
        build(map, n, out);
        for q in p + 1..n {
            if map[q] == usize::MAX {
                map[p] = q;
                map[q] = p;
                build(map, n, out);
                map[q] = usize::MAX;
            }
        }
        map[p] = usize::MAX;
    }
    build(&mut vec![usize::MAX; n], n, &mut out);
    out
}

/// Connected reflection patterns up to relabeling of indices and objects,
/// one preferred representative each, sorted by preference.
pub fn reflection_patterns(rank: usize, objects: usize) -> Vec<ReflectionPattern> {
    let invs = involutions(objects);
    // Keyed by (preference rank, canonical orbit structure).
    type PatternKey = (usize, Vec<Vec<(usize, usize)>>);
    let mut reps: BTreeMap<PatternKey, ReflectionPattern> = BTreeMap::new();
    let mut choice = vec![0usize; rank];
    loop {
        let p = ReflectionPattern { objects, maps: choice.iter().map(|&k| invs[k].clone()).collect() };
        if p.is_connected() {
            let best = best_relabeling(&p);
            reps.entry(best.preference_key()).or_insert(best);
        }
        // next tuple
        let mut k = 0;
        loop {
            if k == rank {
                return reps.into_values().collect();
            }
            choice[k] += 1;
            if choice[k] < invs.len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

fn best_relabeling(p: &ReflectionPattern) -> ReflectionPattern {
    let mut best: Option<(_, ReflectionPattern)> = None;
    for_each_permutation(p.rank(), |im| {
        for_each_permutation(p.objects, |om| {
            let q = p.relabeled(im, om);
            let key = q.preference_key();
            if best.as_ref().is_none_or(|(k, _)| key < *k) {
                best = Some((key, q));
            }
            false
        });
        false
    });
    best.expect("nonempty").1
}

/// Two objects with `ρ_i` swapping them for `i ≤ κ` and fixing them
/// otherwise.
pub fn kappa_pattern(rank: usize, kappa: usize) -> ReflectionPattern {
    ReflectionPattern {
        objects: 2,
        maps: (0..rank).map(|i| if i < kappa { vec![1, 0] } else { vec![0, 1] }).collect(),
    }
}

/// What to enumerate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpace {
    pub rank: usize,
    pub objects: usize,
    /// Off-diagonal entries range over `0..=bound` in absolute value.
    pub bound: i64,
    /// For two objects: the number of reflections swapping them.
    pub kappa: Option<usize>,
    /// Explicit patterns; when `None`, every connected pattern (or the
    /// κ pattern) is searched.
    pub patterns: Option<Vec<ReflectionPattern>>,
}

impl SearchSpace {
    pub fn new(rank: usize, objects: usize, bound: i64) -> Self {
        SearchSpace { rank, objects, bound, kappa: None, patterns: None }
    }

    pub fn with_kappa(mut self, kappa: usize) -> Self {
        self.kappa = Some(kappa);
        self
    }

    pub fn resolved_patterns(&self) -> Vec<ReflectionPattern> {
        if let Some(p) = &self.patterns {
            return p.clone();
        }
        match self.kappa {
            Some(k) if self.objects == 2 => vec![kappa_pattern(self.rank, k)],
            _ => reflection_patterns(self.rank, self.objects),
        }
    }
}

/// How to run a search.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchOptions {
    pub caps: Caps,
    /// Worker threads; 0 means the rayon default.
    pub jobs: usize,
    /// Keep records whose Cartan matrices decompose.
    pub keep_reducible: bool,
    /// Enumerate candidates in reverse order (the output must not change).
    pub reverse: bool,
}

/// One finite connected Weyl groupoid found by a search, in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationRecord {
    pub key: Vec<i64>,
    pub scheme: CartanScheme,
    pub objects: usize,
    pub rank: usize,
    pub groupoid_size: usize,
    /// `|R^a_+|` at the first object.
    pub positive_roots: usize,
    pub stabilizer_order: usize,
    pub stabilizer_type: String,
    pub diagram: String,
    pub standard: bool,
    pub source_cell: String,
}

impl ClassificationRecord {
    /// Builds the record of a scheme with a finite root system.
    pub fn from_scheme(s: &CartanScheme, source_cell: String, caps: &Caps) -> Option<Self> {
        let (key, canon) = canonical_form(s);
        let w = generate_groupoid(&canon, caps.hom);
        if !w.is_finite() {
            return None;
        }
        let roots = root_closure(&canon, caps.roots);
        let roots = roots.system()?;
        let stabilizer = w.stabilizer(0).ok()?;
        Some(ClassificationRecord {
            key,
            objects: canon.object_count(),
            rank: canon.rank(),
            groupoid_size: w.total_size().ok()?,
            positive_roots: roots.positive_count(0),
            stabilizer_order: stabilizer.order(),
            stabilizer_type: identify_coxeter_type(&stabilizer).label(),
            diagram: canon.object_change_diagram().signature(),
            standard: canon.is_standard(),
            source_cell,
            scheme: canon,
        })
    }

    /// `(|A|, |I|, |W|, |R+|, stabilizer type)`.
    pub fn row(&self) -> (usize, usize, usize, usize, String) {
        (self.objects, self.rank, self.groupoid_size, self.positive_roots, self.stabilizer_type.clone())
    }

    pub const CSV_HEADER: &'static str = "|A|,|I|,|W|,|R+|,stabilizer,standard,diagram,source_cell";

    pub fn csv_line(&self) -> String {
        let quote = |s: &str| {
            if s.contains(',') || s.contains('"') {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.to_string()
            }
        };
        format!(
            "{},{},{},{},{},{},{},{}",
            self.objects,
            self.rank,
            self.groupoid_size,
            self.positive_roots,
            quote(&self.stabilizer_type),
            self.standard,
            quote(&self.diagram),
            quote(&self.source_cell)
        )
    }
}

/// Per-pattern counts of a search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternSummary {
    pub pattern: ReflectionPattern,
    /// Candidate schemes fully decided.
    pub cells: u64,
    /// Rank-two pair assignments decided during pruning.
    pub pair_cells: u64,
    pub inconclusive: u64,
    /// Finite candidates before deduplication.
    pub raw_count: u64,
    /// Distinct records contributed by this pattern.
    pub records: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub space: SearchSpace,
    pub records: Vec<ClassificationRecord>,
    pub patterns: Vec<PatternSummary>,
}

impl ClassificationReport {
    pub fn raw_count(&self) -> u64 {
        self.patterns.iter().map(|p| p.raw_count).sum()
    }

    pub fn cells(&self) -> u64 {
        self.patterns.iter().map(|p| p.cells).sum()
    }

    pub fn inconclusive(&self) -> u64 {
        self.patterns.iter().map(|p| p.inconclusive).sum()
    }
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", ClassificationRecord::CSV_HEADER)?;
        for r in &self.records {
            writeln!(f, "{}", r.csv_line())?;
        }
        Ok(())
    }
}

/// Entry slot `(i, orbit of ρ_i, j)` holding `−c^a_{ij}`.
#[derive(Debug, Clone, Copy)]
struct Slot {
    i: usize,
    orbit: usize,
    j: usize,
}

struct PatternLayout {
    pattern: ReflectionPattern,
    orbit_id: Vec<Vec<usize>>,
    /// For each index pair `i < j`, its slots (all `(i,·,j)` then `(j,·,i)`).
    pairs: Vec<((usize, usize), Vec<Slot>)>,
}

impl PatternLayout {
    fn new(pattern: ReflectionPattern) -> Self {
        let theta = pattern.rank();
        let orbits: Vec<(Vec<usize>, usize)> = (0..theta).map(|i| pattern.orbit_ids(i)).collect();
        let mut pairs = Vec::new();
        for i in 0..theta {
            for j in i + 1..theta {
                let mut slots = Vec::new();
                for o in 0..orbits[i].1 {
                    slots.push(Slot { i, orbit: o, j });
                }
                for o in 0..orbits[j].1 {
                    slots.push(Slot { i: j, orbit: o, j: i });
                }
                pairs.push(((i, j), slots));
            }
        }
        PatternLayout { pattern, orbit_id: orbits.into_iter().map(|o| o.0).collect(), pairs }
    }

    /// All assignments of `0..=bound` to the pair's slots satisfying (M2)
    /// at every object.
    fn pair_assignments(&self, pair: usize, bound: i64) -> Vec<Vec<i64>> {
        let ((i, j), slots) = &self.pairs[pair];
        let n_ij = slots.iter().filter(|s| s.i == *i).count();
        let mut out = Vec::new();
        let mut values = vec![0i64; slots.len()];
        loop {
            let m2 = (0..self.pattern.objects).all(|a| {
                let x = values[self.orbit_id[*i][a]];
                let y = values[n_ij + self.orbit_id[*j][a]];
                (x == 0) == (y == 0)
            });
            if m2 {
                out.push(values.clone());
            }
            let mut k = 0;
            loop {
                if k == values.len() {
                    return out;
                }
                values[k] += 1;
                if values[k] <= bound {
                    break;
                }
                values[k] = 0;
                k += 1;
            }
        }
    }

    /// Scheme on all objects for the given per-pair assignments (indices of
    /// `pairs`), restricted to the indices those pairs cover.
    fn build(&self, chosen: &[(usize, &[i64])], indices: &[usize]) -> CartanScheme {
        let theta = indices.len();
        let pos = |i: usize| indices.iter().position(|&k| k == i).expect("index covered");
        let n = self.pattern.objects;
        let mut matrices = vec![vec![vec![0i64; theta]; theta]; n];
        for m in &mut matrices {
            for (k, row) in m.iter_mut().enumerate() {
                row[k] = 2;
            }
        }
        for &(pair, values) in chosen {
            for (slot, &v) in self.pairs[pair].1.iter().zip(values) {
                for (a, m) in matrices.iter_mut().enumerate() {
                    if self.orbit_id[slot.i][a] == slot.orbit {
                        m[pos(slot.i)][pos(slot.j)] = -v;
                    }
                }
            }
        }
        let reflections = indices.iter().map(|&i| self.pattern.maps[i].clone()).collect();
        CartanScheme::new(canonical_object_names(n), reflections, matrices)
            .expect("enumerated data satisfies the scheme axioms")
    }
}

/// Runs a bounded search. Output is sorted by canonical key and does not
/// depend on `jobs` or `reverse`.
pub fn classify(space: &SearchSpace, options: &SearchOptions) -> ClassificationReport {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(options.jobs).build().expect("thread pool");
    pool.install(|| classify_in_pool(space, options))
}

fn classify_in_pool(space: &SearchSpace, options: &SearchOptions) -> ClassificationReport {
    let caps = options.caps;
    let mut unique: BTreeMap<Vec<i64>, (CartanScheme, usize)> = BTreeMap::new();
    let mut summaries = Vec::new();
    for (pattern_index, pattern) in space.resolved_patterns().into_iter().enumerate() {
        let layout = PatternLayout::new(pattern.clone());
        let theta = space.rank;
        let mut pair_cells = 0u64;
        let mut inconclusive = 0u64;

        let mut options_per_pair: Vec<Vec<Vec<i64>>> = Vec::new();
        for p in 0..layout.pairs.len() {
            let all = layout.pair_assignments(p, space.bound);
            if theta == 2 {
                options_per_pair.push(all);
                continue;
            }
            let (i, j) = layout.pairs[p].0;
            pair_cells += all.len() as u64;
            let decided: Vec<(Vec<i64>, Decision)> = all
                .into_par_iter()
                .map(|values| {
                    let s = layout.build(&[(p, &values)], &[i, j]);
                    let d = decide(&s, &caps);
                    (values, d)
                })
                .collect();
            let mut kept = Vec::new();
            for (values, d) in decided {
                match d {
                    Decision::Finite(_) => kept.push(values),
                    Decision::NotFinite(_) => {}
                    Decision::Inconclusive => inconclusive += 1,
                }
            }
            options_per_pair.push(kept);
        }

        let radix: Vec<u64> = options_per_pair.iter().map(|o| o.len() as u64).collect();
        let total: u64 = radix.iter().product();
        let all_indices: Vec<usize> = (0..theta).collect();
        let outcomes: Vec<Outcome> = (0..total)
            .into_par_iter()
            .map(|n| {
                let mut rest = if options.reverse { total - 1 - n } else { n };
                let mut chosen = Vec::with_capacity(radix.len());
                for (p, &r) in radix.iter().enumerate() {
                    chosen.push((p, options_per_pair[p][(rest % r) as usize].as_slice()));
                    rest /= r;
                }
                let s = layout.build(&chosen, &all_indices);
                if !options.keep_reducible && s.decompose().len() > 1 {
                    return Outcome::Skipped;
                }
                match decide(&s, &caps) {
                    Decision::Finite(_) if s.is_connected() => Outcome::Finite(canonical_form(&s).0, s),
                    Decision::Finite(_) | Decision::NotFinite(_) => Outcome::Rejected,
                    Decision::Inconclusive => Outcome::Inconclusive,
                }
            })
            .collect();

        let mut raw_count = 0;
        let mut found: BTreeMap<Vec<i64>, CartanScheme> = BTreeMap::new();
        for o in outcomes {
            match o {
                Outcome::Finite(key, s) => {
                    raw_count += 1;
                    found.entry(key).or_insert(s);
                }
                Outcome::Inconclusive => inconclusive += 1,
                Outcome::Skipped | Outcome::Rejected => {}
            }
        }
        let records = found.len();
        for (key, s) in found {
            unique.entry(key).or_insert((s, pattern_index));
        }
        summaries.push(PatternSummary {
            pattern,
            cells: total,
            pair_cells,
            inconclusive,
            raw_count,
            records,
        });
    }

    let cell_name = |pattern: &ReflectionPattern| {
        let mut name = format!(
            "rank={} objects={} bound={} pattern={}",
            space.rank,
            space.objects,
            space.bound,
            pattern.describe()
        );
        if let Some(k) = space.kappa {
            name.push_str(&format!(" kappa={k}"));
        }
        name
    };
    let entries: Vec<(CartanScheme, usize)> = unique.into_values().collect();
    let records: Vec<ClassificationRecord> = entries
        .par_iter()
        .map(|(s, p)| {
            ClassificationRecord::from_scheme(s, cell_name(&summaries[*p].pattern), &caps)
                .expect("finite candidates give finite groupoids")
        })
        .collect();
    ClassificationReport { space: space.clone(), records, patterns: summaries }
}

enum Outcome {
    Finite(Vec<i64>, CartanScheme),
    Rejected,
    Skipped,
    Inconclusive,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn involution_counts() {
        assert_eq!(involutions(1).len(), 1);
        assert_eq!(involutions(2).len(), 2);
        assert_eq!(involutions(3).len(), 4);
        assert_eq!(involutions(4).len(), 10);
    }

    #[test]
    fn rank_two_three_object_pattern_is_a_path() {
        let p = reflection_patterns(2, 3);
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].maps, vec![vec![1, 0, 2], vec![0, 2, 1]]);
        assert_eq!(p[0].describe(), "1:(x y) 2:(y z)");
    }

    #[test]
    fn rank_three_three_object_patterns() {
        let p = reflection_patterns(3, 3);
        let described: Vec<String> = p.iter().map(ReflectionPattern::describe).collect();
        assert_eq!(
            described,
            vec!["1:(x y) 2:(y z) 3:(x y)", "1:(x y) 2:(y z) 3:(x z)", "1:(x y) 2:(y z) 3:id",]
        );
    }

    #[test]
    fn two_object_patterns_are_kappa_patterns() {
        let p = reflection_patterns(3, 2);
        assert_eq!(p, vec![kappa_pattern(3, 3), kappa_pattern(3, 2), kappa_pattern(3, 1)]);
    }

    #[test]
    fn decide_settles_affine_by_loop() {
        let s = CartanScheme::single(crate::scheme::CartanMatrix::new(&[vec![2, -2], vec![-2, 2]]).unwrap());
        assert!(matches!(decide(&s, &Caps::default()), Decision::NotFinite(Infinite::Loop(_))));
    }

    #[test]
    fn small_search_rank_one() {
        let report = classify(&SearchSpace::new(1, 2, 3), &SearchOptions::default());
        assert_eq!(report.records.len(), 1);
        assert_eq!(report.records[0].groupoid_size, 4);
        assert_eq!(report.inconclusive(), 0);
    }
}
