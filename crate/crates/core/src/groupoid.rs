//! Weyl groupoids as explicit integer matrices.
//!
//! Words are stored in application order: `[i_1, …, i_m]` from `a` means
//! `σ_{i_m} ⋯ σ_{i_1}` with `σ_{i_1}` taken at `a`.

use std::collections::{HashMap, HashSet};

use thiserror::Error;

use crate::matrix::{matrix_order, IntMatrix, OrderTest};
use crate::roots::RootSystem;
use crate::scheme::CartanScheme;

/// Default bound on the size of a single hom-set.
pub const DEFAULT_HOM_CAP: usize = 100_000;

/// A morphism `source → target` given by its matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub source: usize,
    pub target: usize,
    pub matrix: IntMatrix,
}

impl Morphism {
    pub fn identity(s: &CartanScheme, a: usize) -> Morphism {
        Morphism { source: a, target: a, matrix: IntMatrix::identity(s.rank()) }
    }

    /// `g ∘ self`; `None` if the endpoints do not match.
    pub fn then(&self, g: &Morphism) -> Option<Morphism> {
        (self.target == g.source).then(|| Morphism {
            source: self.source,
            target: g.target,
            matrix: g.matrix.mul(&self.matrix),
        })
    }
}

/// Matrix of `σ_i^a`: `α_j ↦ α_j − c^a_{ij} α_i`.
pub fn reflection_matrix(s: &CartanScheme, i: usize, a: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(s.rank());
    for j in 0..s.rank() {
        m.set(i, j, i64::from(i == j) - s.entry(a, i, j));
    }
    m
}

/// The generator `σ_i^a ∈ Hom(a, ρ_i(a))`.
pub fn simple_reflection(s: &CartanScheme, i: usize, a: usize) -> Morphism {
    Morphism { source: a, target: s.reflect(i, a), matrix: reflection_matrix(s, i, a) }
}

/// Evaluates a word starting at `start`; returns the target and the matrix.
pub fn evaluate_word(s: &CartanScheme, start: usize, word: &[usize]) -> (usize, IntMatrix) {
    let mut object = start;
    let mut matrix = IntMatrix::identity(s.rank());
    for &i in word {
        matrix = reflection_matrix(s, i, object).mul(&matrix);
        object = s.reflect(i, object);
    }
    (object, matrix)
}

/// Object reached from `start` along a word.
pub fn word_target(s: &CartanScheme, start: usize, word: &[usize]) -> usize {
    word.iter().fold(start, |a, &i| s.reflect(i, a))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomElement {
    pub matrix: IntMatrix,
    /// Length: the least number of generators composing to this morphism.
    pub length: usize,
    /// Lexicographically first reduced word, in application order.
    pub word: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupoidStatus {
    Finite,
    /// Some hom-set grew past the cap, or entries overflowed.
    CapExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupoidError {
    #[error("the groupoid was not generated completely (cap exceeded)")]
    NotFinite,
    #[error("the scheme is not connected")]
    NotConnected,
}

/// The Weyl groupoid, grouped by hom-set.
#[derive(Debug, Clone)]
pub struct WeylGroupoid {
    scheme: CartanScheme,
    hom: Vec<Vec<Vec<HomElement>>>,
    status: GroupoidStatus,
}

/// Generates all morphisms by breadth-first search from every object,
/// trying generators in ascending index order.
pub fn generate_groupoid(s: &CartanScheme, cap: usize) -> WeylGroupoid {
    let n = s.object_count();
    let mut hom = Vec::with_capacity(n);
    let mut status = GroupoidStatus::Finite;
    for a in 0..n {
        match generate_from(s, a, cap) {
            Some(sets) => hom.push(sets),
            None => {
                status = GroupoidStatus::CapExceeded;
                hom.push(vec![Vec::new(); n]);
            }
        }
        if status == GroupoidStatus::CapExceeded {
            break;
        }
    }
    hom.resize(n, vec![Vec::new(); n]);
    WeylGroupoid { scheme: s.clone(), hom, status }
}

fn generate_from(s: &CartanScheme, a: usize, cap: usize) -> Option<Vec<Vec<HomElement>>> {
    let n = s.object_count();
    let gens: Vec<Vec<IntMatrix>> =
        (0..n).map(|b| (0..s.rank()).map(|i| reflection_matrix(s, i, b)).collect()).collect();
    let mut sets: Vec<Vec<HomElement>> = vec![Vec::new(); n];
    let mut seen: Vec<HashSet<IntMatrix>> = vec![HashSet::new(); n];
    let identity = IntMatrix::identity(s.rank());
    seen[a].insert(identity.clone());
    sets[a].push(HomElement { matrix: identity, length: 0, word: Vec::new() });
    // queue of (target, index into sets[target])
    let mut queue = std::collections::VecDeque::from([(a, 0usize)]);
    while let Some((b, k)) = queue.pop_front() {
        for i in 0..s.rank() {
            let c = s.reflect(i, b);
            let matrix = gens[b][i].checked_mul(&sets[b][k].matrix)?;
            if seen[c].contains(&matrix) {
                continue;
            }
            let mut word = sets[b][k].word.clone();
            word.push(i);
            let length = sets[b][k].length + 1;
            seen[c].insert(matrix.clone());
            sets[c].push(HomElement { matrix, length, word });
            if sets[c].len() > cap {
                return None;
            }
            queue.push_back((c, sets[c].len() - 1));
        }
    }
    Some(sets)
}

impl WeylGroupoid {
    pub fn scheme(&self) -> &CartanScheme {
        &self.scheme
    }

    pub fn status(&self) -> GroupoidStatus {
        self.status
    }

    pub fn is_finite(&self) -> bool {
        self.status == GroupoidStatus::Finite
    }

    fn require_finite(&self) -> Result<(), GroupoidError> {
        if self.is_finite() {
            Ok(())
        } else {
            Err(GroupoidError::NotFinite)
        }
    }

    /// Morphisms `a → b` in discovery order (non-decreasing length).
    pub fn hom(&self, a: usize, b: usize) -> Result<&[HomElement], GroupoidError> {
        self.require_finite()?;
        Ok(&self.hom[a][b])
    }

    pub fn hom_size(&self, a: usize, b: usize) -> Result<usize, GroupoidError> {
        Ok(self.hom(a, b)?.len())
    }

    pub fn total_size(&self) -> Result<usize, GroupoidError> {
        self.require_finite()?;
        Ok(self.hom.iter().flatten().map(Vec::len).sum())
    }

    /// Looks up the element of `Hom(a, b)` with the given matrix.
    pub fn find(&self, a: usize, b: usize, matrix: &IntMatrix) -> Option<&HomElement> {
        self.hom[a][b].iter().find(|e| e.matrix == *matrix)
    }

    /// A morphism of maximal length with source `a` (the first discovered).
    pub fn longest_from(&self, a: usize) -> Result<(usize, &HomElement), GroupoidError> {
        self.require_finite()?;
        let mut best: Option<(usize, &HomElement)> = None;
        for (b, set) in self.hom[a].iter().enumerate() {
            for e in set {
                if best.is_none_or(|(_, x)| e.length > x.length) {
                    best = Some((b, e));
                }
            }
        }
        Ok(best.expect("identity is always present"))
    }

    pub fn max_length_from(&self, a: usize) -> Result<usize, GroupoidError> {
        Ok(self.longest_from(a)?.1.length)
    }

    /// `Hom(a) = Hom(a, a)` as a matrix group.
    pub fn stabilizer(&self, a: usize) -> Result<MatrixGroup, GroupoidError> {
        let elements = self.hom(a, a)?.iter().map(|e| e.matrix.clone()).collect();
        Ok(MatrixGroup::from_elements(self.scheme.rank(), elements))
    }
}

/// A finite group of integer matrices, identity first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixGroup {
    dim: usize,
    elements: Vec<IntMatrix>,
    index: HashMap<IntMatrix, usize>,
}

impl MatrixGroup {
    /// Wraps a list of matrices assumed to form a group.
    pub fn from_elements(dim: usize, mut elements: Vec<IntMatrix>) -> MatrixGroup {
        let identity = IntMatrix::identity(dim);
        if let Some(p) = elements.iter().position(|m| *m == identity) {
            elements.swap(0, p);
        } else {
            elements.insert(0, identity);
        }
        let index = elements.iter().enumerate().map(|(k, m)| (m.clone(), k)).collect();
        MatrixGroup { dim, elements, index }
    }

    /// The group generated by `gens`, or `None` if it exceeds `limit`
    /// elements.
    pub fn generated_by(dim: usize, gens: &[IntMatrix], limit: usize) -> Option<MatrixGroup> {
        let mut elements = vec![IntMatrix::identity(dim)];
        let mut index: HashMap<IntMatrix, usize> = HashMap::from([(elements[0].clone(), 0)]);
        let mut head = 0;
        while head < elements.len() {
            for g in gens {
                let next = g.checked_mul(&elements[head])?;
                if !index.contains_key(&next) {
                    if elements.len() >= limit {
                        return None;
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
            head += 1;
        }
        Some(MatrixGroup { dim, elements, index })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn elements(&self) -> &[IntMatrix] {
        &self.elements
    }

    pub fn position(&self, m: &IntMatrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn contains(&self, m: &IntMatrix) -> bool {
        self.index.contains_key(m)
    }

    /// True iff the element set is closed under multiplication.
    pub fn is_closed(&self) -> bool {
        self.elements.iter().all(|x| self.elements.iter().all(|y| self.contains(&x.mul(y))))
    }
}

/// One generator `F(σ_i^b) = X_{ρ_i(b)}^{-1} σ_i^b X_b` of `Hom(a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationGenerator {
    pub object: usize,
    pub index: usize,
    pub matrix: IntMatrix,
}

/// A relation: a word at `object` that closes up, and the value of its
/// image under `F` (the identity for every valid relation).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub object: usize,
    pub word: Vec<usize>,
    pub value: IntMatrix,
}

/// Generators and relations for `Hom(a)` obtained from the Coxeter
/// presentation of the groupoid via a spanning choice of paths `X_b`.
#[derive(Debug, Clone)]
pub struct StabilizerPresentation {
    pub base: usize,
    /// The chosen path `X_b` from the base to each object `b`.
    pub spanning: Vec<Vec<usize>>,
    pub generators: Vec<PresentationGenerator>,
    pub relations: Vec<Relation>,
}

impl StabilizerPresentation {
    pub fn relations_hold(&self) -> bool {
        self.relations.iter().all(|r| r.value.is_identity())
    }

    /// The group generated by the generator images.
    pub fn evaluated_group(&self, limit: usize) -> Option<MatrixGroup> {
        let dim = self.generators.first().map_or(0, |g| g.matrix.dim());
        let gens: Vec<IntMatrix> = self.generators.iter().map(|g| g.matrix.clone()).collect();
        MatrixGroup::generated_by(dim, &gens, limit)
    }
}

/// Builds the presentation of `Hom(a)` with `X_b` the first shortest word
/// from `a` to `b`, and relation exponents `m^b_{jk}` from `roots`.
pub fn stabilizer_presentation(
    w: &WeylGroupoid,
    a: usize,
    roots: &RootSystem,
) -> Result<StabilizerPresentation, GroupoidError> {
    w.require_finite()?;
    let s = w.scheme();
    if !s.is_connected() {
        return Err(GroupoidError::NotConnected);
    }
    let n = s.object_count();
    let spanning: Vec<Vec<usize>> = (0..n).map(|b| w.hom[a][b][0].word.clone()).collect();
    let x: Vec<IntMatrix> = (0..n).map(|b| w.hom[a][b][0].matrix.clone()).collect();
    // X_b^{-1} is the reversed word evaluated from b.
    let x_inv: Vec<IntMatrix> = (0..n)
        .map(|b| {
            let rev: Vec<usize> = spanning[b].iter().rev().copied().collect();
            evaluate_word(s, b, &rev).1
        })
        .collect();
    let functor = |b: usize, word: &[usize]| {
        let (c, g) = evaluate_word(s, b, word);
        x_inv[c].mul(&g).mul(&x[b])
    };

    let mut generators = Vec::with_capacity(n * s.rank());
    for b in 0..n {
        for i in 0..s.rank() {
            generators.push(PresentationGenerator { object: b, index: i, matrix: functor(b, &[i]) });
        }
    }
    let mut relations = Vec::new();
    for b in 0..n {
        for i in 0..s.rank() {
            let word = vec![i, i];
            relations.push(Relation { object: b, value: functor(b, &word), word });
        }
        for j in 0..s.rank() {
            for k in 0..s.rank() {
                if j == k {
                    continue;
                }
                let m = roots.m_value(b, j, k).expect("distinct indices");
                let word: Vec<usize> = (0..2 * m).map(|t| if t % 2 == 0 { k } else { j }).collect();
                relations.push(Relation { object: b, value: functor(b, &word), word });
            }
        }
    }
    Ok(StabilizerPresentation { base: a, spanning, generators, relations })
}

/// A loop at `object` whose matrix has infinite order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfiniteLoop {
    pub object: usize,
    pub word: Vec<usize>,
}

/// Searches breadth-first for a loop of infinite order, inspecting at most
/// `budget` morphisms per source object. Such a loop proves that the
/// groupoid is infinite.
pub fn find_infinite_loop(s: &CartanScheme, budget: usize) -> Option<InfiniteLoop> {
    (0..s.object_count()).find_map(|a| infinite_loop_from(s, a, budget))
}

fn infinite_loop_from(s: &CartanScheme, a: usize, budget: usize) -> Option<InfiniteLoop> {
    let n = s.object_count();
    let gens: Vec<Vec<IntMatrix>> =
        (0..n).map(|b| (0..s.rank()).map(|i| reflection_matrix(s, i, b)).collect()).collect();
    let mut nodes: Vec<(usize, IntMatrix, usize, usize)> = Vec::new(); // object, matrix, parent, index
    let mut seen: Vec<HashSet<IntMatrix>> = vec![HashSet::new(); n];
    let identity = IntMatrix::identity(s.rank());
    seen[a].insert(identity.clone());
    nodes.push((a, identity, usize::MAX, usize::MAX));
    let mut head = 0;
    while head < nodes.len() && nodes.len() < budget {
        for i in 0..s.rank() {
            let b = nodes[head].0;
            let c = s.reflect(i, b);
            let Some(g) = gens[b][i].checked_mul(&nodes[head].1) else {
                continue;
            };
            if seen[c].contains(&g) {
                continue;
            }
            seen[c].insert(g.clone());
            if c == a && matrix_order(&g) == OrderTest::Infinite {
                let mut word = vec![i];
                let mut k = head;
                while nodes[k].2 != usize::MAX {
                    word.push(nodes[k].3);
                    k = nodes[k].2;
                }
                word.reverse();
                return Some(InfiniteLoop { object: a, word });
            }
            nodes.push((c, g, head, i));
        }
        head += 1;
    }
    None
}
