//! Real-root closures and root systems of type C.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::groupoid::reflection_matrix;
use crate::matrix::{format_root, Root};
use crate::scheme::{find_equivalence, CartanMatrix, CartanScheme, Equivalence, RawScheme, RestrictError};

/// Default bound on the number of positive roots per object.
pub const DEFAULT_ROOT_CAP: usize = 512;

/// Finite root sets `R^a` for every object of a scheme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    scheme: CartanScheme,
    /// Positive roots per object, sorted lexicographically.
    positive: Vec<Vec<Root>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("m-values need two distinct indices")]
    IndexEqual,
    #[error(transparent)]
    Restrict(#[from] RestrictError),
    #[error("root supports disagree with the matrix decomposition")]
    InconsistentDecomposition,
    #[error("restricted root sets fail the axioms: {0}")]
    AxiomFailure(String),
}

fn is_nonneg(v: &[i64]) -> bool {
    v.iter().all(|&x| x >= 0)
}

fn is_nonpos(v: &[i64]) -> bool {
    v.iter().all(|&x| x <= 0)
}

fn negate(v: &[i64]) -> Root {
    v.iter().map(|&x| -x).collect()
}

fn simple_root(rank: usize, i: usize) -> Root {
    let mut v = vec![0; rank];
    v[i] = 1;
    v
}

impl RootSystem {
    pub fn scheme(&self) -> &CartanScheme {
        &self.scheme
    }

    /// `R^a_+`, sorted.
    pub fn positive_roots(&self, a: usize) -> &[Root] {
        &self.positive[a]
    }

    /// `R^a = R^a_+ ∪ −R^a_+`, sorted.
    pub fn roots(&self, a: usize) -> Vec<Root> {
        let mut all: Vec<Root> = self.positive[a].iter().map(|r| negate(r)).collect();
        all.extend(self.positive[a].iter().cloned());
        all.sort();
        all
    }

    pub fn positive_count(&self, a: usize) -> usize {
        self.positive[a].len()
    }

    /// `m^a_{ij}`: positive roots supported on `{i, j}`.
    pub fn m_value(&self, a: usize, i: usize, j: usize) -> Result<usize, RootError> {
        if i == j {
            return Err(RootError::IndexEqual);
        }
        Ok(self.positive[a]
            .iter()
            .filter(|r| r.iter().enumerate().all(|(k, &x)| x == 0 || k == i || k == j))
            .count())
    }

    /// Positive roots at `a` in the `1^m 2^n` shorthand.
    /// Positive roots at `a` in the `12^2` notation, by height and then
    /// with higher coefficients on earlier indices first.
    pub fn formatted_positive(&self, a: usize) -> Vec<String> {
        let mut roots: Vec<&Root> = self.positive[a].iter().collect();
        roots.sort_by_key(|r| (r.iter().sum::<i64>(), std::cmp::Reverse(*r)));
        roots.iter().map(|r| format_root(r)).collect()
    }

    /// Reducibility: the finest matrix decomposition of the index set,
    /// cross-checked against the supports of all roots.
    pub fn irreducibility(&self) -> Result<Irreducibility, RootError> {
        let blocks = self.scheme.decompose();
        let mut block_of = vec![0; self.scheme.rank()];
        for (k, b) in blocks.iter().enumerate() {
            for &i in b {
                block_of[i] = k;
            }
        }
        for set in &self.positive {
            for r in set {
                let mut support = r.iter().enumerate().filter(|(_, &x)| x != 0).map(|(k, _)| block_of[k]);
                let first = support.next().expect("roots are nonzero");
                if support.any(|b| b != first) {
                    return Err(RootError::InconsistentDecomposition);
                }
            }
        }
        Ok(if blocks.len() == 1 { Irreducibility::Irreducible } else { Irreducibility::Reducible(blocks) })
    }

    pub fn is_irreducible(&self) -> bool {
        matches!(self.irreducibility(), Ok(Irreducibility::Irreducible))
    }

    /// The root system of the restriction to `indices`, coordinates
    /// renumbered in ascending index order.
    pub fn restrict(&self, indices: &[usize]) -> Result<RootSystem, RootError> {
        let scheme = self.scheme.restrict(indices)?;
        let keep: Vec<usize> = indices.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        let positive: Vec<Vec<Root>> = self
            .positive
            .iter()
            .map(|set| {
                let mut out: Vec<Root> = set
                    .iter()
                    .filter(|r| r.iter().enumerate().all(|(k, &x)| x == 0 || keep.contains(&k)))
                    .map(|r| keep.iter().map(|&k| r[k]).collect())
                    .collect();
                out.sort();
                out
            })
            .collect();
        let restricted = RootSystem { scheme, positive };
        let report = restricted.check();
        match report.first_failure() {
            None => Ok(restricted),
            Some(msg) => Err(RootError::AxiomFailure(msg)),
        }
    }

    /// Runs [`check_axioms`] on this system's own data.
    pub fn check(&self) -> AxiomReport {
        let all: Vec<Vec<Root>> = (0..self.scheme.object_count()).map(|a| self.roots(a)).collect();
        check_axioms(&self.scheme.to_raw(), &all)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible,
    Reducible(Vec<Vec<usize>>),
}

/// Evidence that no finite root system of type C exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `vector` is obtained from `α_simple` at `start` by applying the
    /// reflections `steps` in order, ending at `end`; it has coordinates of
    /// both signs.
    MixedSign { start: usize, simple: usize, steps: Vec<usize>, end: usize, vector: Root },
    /// A real root at `object` that is a multiple `≠ ±1` of `α_index`.
    R2Violation { object: usize, index: usize, vector: Root },
    /// `(ρ_i ρ_j)^m (object) ≠ object` for `m = m^object_{ij}`.
    R4Violation { object: usize, i: usize, j: usize, m: usize },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::MixedSign { start, simple, steps, end, vector } => {
                let steps: Vec<String> = steps.iter().map(|i| (i + 1).to_string()).collect();
                write!(
                    f,
                    "mixed-sign vector {vector:?} at object #{}: alpha_{} at object #{}, reflections [{}]",
                    end + 1,
                    simple + 1,
                    start + 1,
                    steps.join(",")
                )
            }
            Witness::R2Violation { object, index, vector } => {
                write!(
                    f,
                    "R2 fails at object #{}: {vector:?} is a multiple of alpha_{}",
                    object + 1,
                    index + 1
                )
            }
            Witness::R4Violation { object, i, j, m } => write!(
                f,
                "R4 fails at object #{}: (rho_{} rho_{})^{m} does not fix it",
                object + 1,
                i + 1,
                j + 1
            ),
        }
    }
}

impl Witness {
    /// Re-derives the witness from the scheme alone; true iff it holds.
    pub fn replay(&self, s: &CartanScheme) -> bool {
        match self {
            Witness::MixedSign { start, simple, steps, end, vector } => {
                let mut a = *start;
                let mut v = simple_root(s.rank(), *simple);
                for &i in steps {
                    match reflection_matrix(s, i, a).checked_apply(&v) {
                        Some(w) => v = w,
                        None => return false,
                    }
                    a = s.reflect(i, a);
                }
                a == *end && v == *vector && !is_nonneg(&v) && !is_nonpos(&v)
            }
            Witness::R2Violation { object, index, vector } => {
                let k = vector[*index];
                k.abs() > 1
                    && vector.iter().enumerate().all(|(t, &x)| t == *index || x == 0)
                    && *object < s.object_count()
            }
            Witness::R4Violation { object, i, j, m } => {
                let mut a = *object;
                for _ in 0..*m {
                    a = s.reflect(*i, s.reflect(*j, a));
                }
                a != *object
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootVerdict {
    Finite(RootSystem),
    NoFiniteSystem(Witness),
    /// Some object exceeded the root cap (or coordinates overflowed).
    CapExceeded,
}

impl RootVerdict {
    pub fn system(&self) -> Option<&RootSystem> {
        match self {
            RootVerdict::Finite(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, RootVerdict::Finite(_))
    }
}

/// Closes `{α_i}` under the simple reflections, transporting vectors along
/// the objects, and checks the result against R1–R4.
///
/// Vectors with mixed signs are rejected as soon as they appear. Each
/// object keeps at most `cap` positive roots.
pub fn root_closure(s: &CartanScheme, cap: usize) -> RootVerdict {
    let n = s.object_count();
    let theta = s.rank();
    let gens: Vec<Vec<_>> =
        (0..n).map(|a| (0..theta).map(|i| reflection_matrix(s, i, a)).collect()).collect();

    // Per object: positive roots, their index, and how each was reached
    // (parent object, parent slot, reflection) or seeded (simple index).
    let mut roots: Vec<Vec<Root>> = vec![Vec::new(); n];
    let mut index: Vec<HashMap<Root, usize>> = vec![HashMap::new(); n];
    let mut origin: Vec<Vec<Origin>> = vec![Vec::new(); n];
    let mut queue = VecDeque::new();
    for a in 0..n {
        for i in 0..theta {
            let v = simple_root(theta, i);
            index[a].insert(v.clone(), roots[a].len());
            roots[a].push(v);
            origin[a].push(Origin::Seed(i));
            queue.push_back((a, roots[a].len() - 1));
        }
    }
    while let Some((a, k)) = queue.pop_front() {
        for i in 0..theta {
            let b = s.reflect(i, a);
            let Some(w) = gens[a][i].checked_apply(&roots[a][k]) else {
                return RootVerdict::CapExceeded;
            };
            let w = if is_nonneg(&w) {
                w
            } else if is_nonpos(&w) {
                negate(&w)
            } else {
                return RootVerdict::NoFiniteSystem(mixed_witness(s, &origin, a, k, i));
            };
            if index[b].contains_key(&w) {
                continue;
            }
            index[b].insert(w.clone(), roots[b].len());
            roots[b].push(w);
            origin[b].push(Origin::Step { object: a, slot: k, index: i });
            if roots[b].len() > cap {
                return RootVerdict::CapExceeded;
            }
            queue.push_back((b, roots[b].len() - 1));
        }
    }

    for (a, set) in roots.iter().enumerate() {
        for r in set {
            let support: Vec<usize> = (0..theta).filter(|&k| r[k] != 0).collect();
            if support.len() == 1 && r[support[0]] != 1 {
                return RootVerdict::NoFiniteSystem(Witness::R2Violation {
                    object: a,
                    index: support[0],
                    vector: r.clone(),
                });
            }
        }
    }
    for set in &mut roots {
        set.sort();
    }
    let system = RootSystem { scheme: s.clone(), positive: roots };
    for a in 0..n {
        for i in 0..theta {
            for j in 0..theta {
                if i == j {
                    continue;
                }
                let m = system.m_value(a, i, j).expect("distinct");
                let mut b = a;
                for _ in 0..m {
                    b = s.reflect(i, s.reflect(j, b));
                }
                if b != a {
                    return RootVerdict::NoFiniteSystem(Witness::R4Violation { object: a, i, j, m });
                }
            }
        }
    }
    RootVerdict::Finite(system)
}

#[derive(Debug, Clone, Copy)]
enum Origin {
    Seed(usize),
    Step { object: usize, slot: usize, index: usize },
}

fn mixed_witness(s: &CartanScheme, origin: &[Vec<Origin>], a: usize, k: usize, i: usize) -> Witness {
    let mut steps = vec![i];
    let (mut obj, mut slot) = (a, k);
    let simple = loop {
        match origin[obj][slot] {
            Origin::Seed(j) => break j,
            Origin::Step { object, slot: parent, index } => {
                steps.push(index);
                obj = object;
                slot = parent;
            }
        }
    };
    steps.reverse();
    let start = obj;
    // Replay exactly: stored roots are sign-normalized, the witness is not.
    let mut v = simple_root(s.rank(), simple);
    let mut at = start;
    for &t in &steps {
        v = reflection_matrix(s, t, at).apply(&v);
        at = s.reflect(t, at);
    }
    Witness::MixedSign { start, simple, steps, end: at, vector: v }
}

/// Outcome of a single axiom check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomOutcome {
    pub name: &'static str,
    pub failure: Option<String>,
}

impl AxiomOutcome {
    fn new(name: &'static str, failure: Option<String>) -> Self {
        AxiomOutcome { name, failure }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Per-axiom results, each with its first counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub outcomes: Vec<AxiomOutcome>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.outcomes.iter().all(AxiomOutcome::passed)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomOutcome> {
        self.outcomes.iter().find(|o| o.name == name)
    }

    pub fn passed(&self, name: &str) -> bool {
        self.get(name).is_some_and(AxiomOutcome::passed)
    }

    pub fn first_failure(&self) -> Option<String> {
        self.outcomes.iter().find_map(|o| o.failure.as_ref().map(|f| format!("{}: {f}", o.name)))
    }
}

/// Checks candidate root sets against R1–R4 (and `0 ∉ R^a`), then the
/// scheme data against M1, M2 and C2.
///
/// `raw` must have the right shape with `c_ii = 2` and involutive
/// reflections; nothing else about it is assumed. `roots[a]` is the full
/// candidate set `R^a`.
pub fn check_axioms(raw: &RawScheme, roots: &[Vec<Root>]) -> AxiomReport {
    let n = raw.objects.len();
    let theta = raw.rank;
    let sets: Vec<BTreeSet<&Root>> = roots.iter().map(|r| r.iter().collect()).collect();
    let name = |a: usize| raw.objects[a].as_str();
    let reflect = |i: usize, a: usize| raw.reflections[i][a];
    let sigma = |i: usize, a: usize, v: &[i64]| -> Option<Root> {
        // σ_i(v) = v − (Σ_j c_ij v_j) α_i
        let mut pairing = 0i64;
        for (j, &x) in v.iter().enumerate() {
            pairing = pairing.checked_add(raw.matrices[a][i][j].checked_mul(x)?)?;
        }
        let mut w = v.to_vec();
        w[i] = w[i].checked_sub(pairing)?;
        Some(w)
    };

    let mut outcomes = Vec::new();

    let zero = (0..n).find_map(|a| {
        sets[a].iter().any(|r| r.iter().all(|&x| x == 0)).then(|| format!("0 in R^{}", name(a)))
    });
    outcomes.push(AxiomOutcome::new("nonzero", zero));

    let r1 = (0..n).find_map(|a| {
        sets[a].iter().find_map(|r| {
            if !is_nonneg(r) && !is_nonpos(r) {
                Some(format!("{r:?} in R^{} has mixed signs", name(a)))
            } else if !sets[a].contains(&negate(r)) {
                Some(format!("{r:?} in R^{} but not its negative", name(a)))
            } else {
                None
            }
        })
    });
    outcomes.push(AxiomOutcome::new("R1", r1));

    let r2 = (0..n).find_map(|a| {
        (0..theta).find_map(|i| {
            let on_line: Vec<&&Root> = sets[a]
                .iter()
                .filter(|r| r.iter().enumerate().all(|(k, &x)| k == i || x == 0))
                .filter(|r| r[i] != 0)
                .collect();
            let e = simple_root(theta, i);
            let ok = on_line.len() == 2 && sets[a].contains(&e) && sets[a].contains(&negate(&e));
            (!ok).then(|| format!("R^{} meets Z alpha_{} in {on_line:?}", name(a), i + 1))
        })
    });
    outcomes.push(AxiomOutcome::new("R2", r2));

    let r3 = (0..n).find_map(|a| {
        (0..theta).find_map(|i| {
            let b = reflect(i, a);
            let image: Option<BTreeSet<Root>> = sets[a].iter().map(|r| sigma(i, a, r)).collect();
            match image {
                None => Some(format!("overflow reflecting R^{}", name(a))),
                Some(img) => {
                    let target: BTreeSet<Root> = sets[b].iter().map(|r| (*r).clone()).collect();
                    (img != target).then(|| {
                        format!("sigma_{}^{}(R^{}) differs from R^{}", i + 1, name(a), name(a), name(b))
                    })
                }
            }
        })
    });
    outcomes.push(AxiomOutcome::new("R3", r3));

    let r4 = (0..n).find_map(|a| {
        (0..theta).find_map(|i| {
            (0..theta).filter(|&j| j != i).find_map(|j| {
                let m = sets[a]
                    .iter()
                    .filter(|r| is_nonneg(r))
                    .filter(|r| r.iter().enumerate().all(|(k, &x)| x == 0 || k == i || k == j))
                    .count();
                let mut b = a;
                for _ in 0..m {
                    b = reflect(i, reflect(j, b));
                }
                (b != a).then(|| format!("(rho_{} rho_{})^{m} moves {}", i + 1, j + 1, name(a)))
            })
        })
    });
    outcomes.push(AxiomOutcome::new("R4", r4));

    let m1 = (0..n).find_map(|a| {
        (0..theta).find_map(|i| {
            (0..theta).find_map(|j| {
                let c = raw.matrices[a][i][j];
                let bad = if i == j { c != 2 } else { c > 0 };
                bad.then(|| format!("c^{}_{}{} = {c}", name(a), i + 1, j + 1))
            })
        })
    });
    outcomes.push(AxiomOutcome::new("M1", m1));

    let m2 = (0..n).find_map(|a| {
        (0..theta).find_map(|i| {
            (0..theta).find_map(|j| {
                let m = &raw.matrices[a];
                (m[i][j] == 0 && m[j][i] != 0).then(|| {
                    format!("c^{}_{}{} = 0 but c^{}_{}{} != 0", name(a), i + 1, j + 1, name(a), j + 1, i + 1)
                })
            })
        })
    });
    outcomes.push(AxiomOutcome::new("M2", m2));

    let c2 = raw.check_c2().err().map(|e| e.to_string());
    outcomes.push(AxiomOutcome::new("C2", c2));

    AxiomReport { outcomes }
}

/// Checks only the data needed to define reflections: shape, `c_ii = 2`
/// and (C1).
pub fn check_weak_scheme(raw: &RawScheme) -> bool {
    raw.check_shape().is_ok()
        && raw.check_c1().is_ok()
        && raw.matrices.iter().all(|m| (0..raw.rank).all(|i| m[i][i] == 2))
}

/// A scheme equivalence that also carries `R^a` onto `R'^{φ1(a)}`.
pub fn root_systems_equivalent(r: &RootSystem, t: &RootSystem) -> Option<Equivalence> {
    find_equivalence(r.scheme(), t.scheme(), |w| {
        (0..r.scheme().object_count()).all(|a| {
            let mut mapped: Vec<Root> = r.positive[a]
                .iter()
                .map(|root| {
                    let mut out = vec![0; root.len()];
                    for (i, &x) in root.iter().enumerate() {
                        out[w.index_map[i]] = x;
                    }
                    out
                })
                .collect();
            mapped.sort();
            mapped == t.positive[w.object_map[a]]
        })
    })
    .ok()
    .flatten()
}

/// Root closure of the one-object scheme of `m`.
pub fn matrix_root_closure(m: &CartanMatrix, cap: usize) -> RootVerdict {
    root_closure(&CartanScheme::single(m.clone()), cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::parse_root;

    fn single(rows: &[Vec<i64>]) -> CartanScheme {
        CartanScheme::single(CartanMatrix::new(rows).unwrap())
    }

    fn two_object(cy21: i64) -> CartanScheme {
        CartanScheme::new(
            vec!["x".into(), "y".into()],
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![vec![2, -1], vec![-3, 2]], vec![vec![2, -1], vec![cy21, 2]]],
        )
        .unwrap()
    }

    fn parse_set(list: &[&str]) -> Vec<Root> {
        let mut v: Vec<Root> = list.iter().map(|t| parse_root(t, 2).unwrap()).collect();
        v.sort();
        v
    }

    #[test]
    fn a2_closure() {
        let r = root_closure(&single(&[vec![2, -1], vec![-1, 2]]), DEFAULT_ROOT_CAP);
        let r = r.system().unwrap();
        assert_eq!(r.positive_roots(0), &[vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert!(r.check().all_pass());
        assert_eq!(r.m_value(0, 0, 1), Ok(3));
        assert_eq!(r.m_value(0, 1, 1), Err(RootError::IndexEqual));
    }

    #[test]
    fn two_object_exceptional_roots() {
        let r = root_closure(&two_object(-4), DEFAULT_ROOT_CAP);
        let r = r.system().unwrap();
        assert_eq!(
            r.positive_roots(0),
            parse_set(&["1", "2", "12", "12^2", "12^3", "1^2 2^3", "1^3 2^4", "1^3 2^5"])
        );
        assert_eq!(
            r.positive_roots(1),
            parse_set(&["1", "2", "12", "12^2", "12^3", "1 2^4", "1^2 2^3", "1^2 2^5"])
        );
        assert_eq!(r.m_value(0, 0, 1), Ok(8));
    }

    #[test]
    fn affine_block_exceeds_cap() {
        let s = single(&[vec![2, -2, 0, 0], vec![-2, 2, 0, 0], vec![0, 0, 2, -1], vec![0, 0, -1, 2]]);
        assert_eq!(root_closure(&s, DEFAULT_ROOT_CAP), RootVerdict::CapExceeded);
    }

    #[test]
    fn mixed_sign_witness_replays() {
        let s = single(&[vec![2, -1], vec![-4, 2]]);
        match root_closure(&s, DEFAULT_ROOT_CAP) {
            RootVerdict::NoFiniteSystem(w @ Witness::MixedSign { .. }) => assert!(w.replay(&s)),
            RootVerdict::CapExceeded => {}
            other => panic!("unexpected verdict {other:?}"),
        }
        // c^y_21 = -2 in the two-object family
        match root_closure(&two_object(-2), DEFAULT_ROOT_CAP) {
            RootVerdict::NoFiniteSystem(w @ Witness::MixedSign { .. }) => {
                assert!(w.replay(&two_object(-2)))
            }
            other => panic!("unexpected verdict {other:?}"),
        }
    }

    #[test]
    fn r4_witness() {
        let a2 = CartanMatrix::new(&[vec![2, -1], vec![-1, 2]]).unwrap();
        let objects = vec!["x".to_string(), "y".to_string()];
        // both reflections swap: ρ1ρ2 = id
        let both = CartanScheme::standard(a2.clone(), objects.clone(), vec![vec![1, 0], vec![1, 0]]).unwrap();
        assert!(root_closure(&both, DEFAULT_ROOT_CAP).is_finite());
        // only ρ1 swaps: (ρ1ρ2)^3 = ρ1
        let one = CartanScheme::standard(a2, objects, vec![vec![1, 0], vec![0, 1]]).unwrap();
        match root_closure(&one, DEFAULT_ROOT_CAP) {
            RootVerdict::NoFiniteSystem(w @ Witness::R4Violation { m: 3, .. }) => {
                assert!(w.replay(&one))
            }
            other => panic!("unexpected verdict {other:?}"),
        }
    }

    #[test]
    fn axiom_report_catches_broken_sets() {
        let s = single(&[vec![2, -1], vec![-1, 2]]);
        let raw = s.to_raw();
        let full = vec![vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![-1, 0], vec![0, -1], vec![-1, -1]]];
        assert!(check_axioms(&raw, &full).all_pass());
        let missing = vec![vec![vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1], vec![-1, -1]]];
        assert!(!check_axioms(&raw, &missing).passed("R3"));
        let mut extra = full.clone();
        extra[0].push(vec![1, -1]);
        assert!(!check_axioms(&raw, &extra).passed("R1"));
    }

    #[test]
    fn irreducibility_and_restriction() {
        let r = root_closure(&single(&[vec![2, 0], vec![0, 2]]), DEFAULT_ROOT_CAP);
        assert_eq!(
            r.system().unwrap().irreducibility(),
            Ok(Irreducibility::Reducible(vec![vec![0], vec![1]]))
        );
        let a3 = single(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        let r = root_closure(&a3, DEFAULT_ROOT_CAP);
        let r = r.system().unwrap();
        assert!(r.is_irreducible());
        assert_eq!(r.restrict(&[0, 1]).unwrap().positive_count(0), 3);
        assert_eq!(r.restrict(&[0, 1, 2]).unwrap(), *r);
    }

    #[test]
    fn equivalence_of_root_systems() {
        let r = root_closure(&two_object(-4), DEFAULT_ROOT_CAP);
        let r = r.system().unwrap();
        assert!(root_systems_equivalent(r, r).is_some());
        let t = root_closure(&two_object(-5), DEFAULT_ROOT_CAP);
        assert!(root_systems_equivalent(r, t.system().unwrap()).is_none());
    }
}
