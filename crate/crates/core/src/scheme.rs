//! Generalized Cartan matrices and Cartan schemes.
//!
//! Indices and objects are addressed by position (`0..rank`, `0..objects`)
//! throughout the API. Error values and all printed output use the 1-based
//! index labels `1..=rank`.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::matrix::IntMatrix;

/// Violation of the generalized Cartan matrix axioms. Indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix has no rows")]
    Empty,
    #[error("matrix is not square: row {row} has {len} entries, expected {rank}")]
    NotSquare { row: usize, len: usize, rank: usize },
    #[error("diagonal entry ({0},{0}) is not 2")]
    DiagonalNotTwo(usize),
    #[error("off-diagonal entry ({0},{1}) is positive")]
    PositiveOffDiagonal(usize, usize),
    #[error("entry ({0},{1}) is zero but ({1},{0}) is not")]
    AsymmetricZero(usize, usize),
}

/// A generalized Cartan matrix: `c_ii = 2`, `c_ij ≤ 0` off the diagonal and
/// `c_ij = 0 ⇔ c_ji = 0`. Entry `(i, j)` is `c_ij`, so row `i` drives the
/// simple reflection `σ_i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanMatrix {
    inner: IntMatrix,
}

impl CartanMatrix {
    pub fn new(rows: &[Vec<i64>]) -> Result<Self, MatrixError> {
        validate_cartan_matrix(rows)
    }

    /// Wraps a matrix whose axioms the caller already guarantees.
    pub(crate) fn from_trusted(inner: IntMatrix) -> Self {
        Self { inner }
    }

    pub fn rank(&self) -> usize {
        self.inner.dim()
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.inner.get(i, j)
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.inner.rows()
    }

    pub fn as_matrix(&self) -> &IntMatrix {
        &self.inner
    }

    /// Principal submatrix on the given (sorted, distinct) indices.
    pub fn submatrix(&self, indices: &[usize]) -> CartanMatrix {
        let rows: Vec<Vec<i64>> =
            indices.iter().map(|&i| indices.iter().map(|&j| self.entry(i, j)).collect()).collect();
        CartanMatrix::from_trusted(IntMatrix::from_rows(&rows))
    }

    /// The matrix with rows and columns renamed by `perm` (old index `i`
    /// becomes new index `perm[i]`).
    pub fn permuted(&self, perm: &[usize]) -> CartanMatrix {
        let n = self.rank();
        let mut m = IntMatrix::identity(n);
        for i in 0..n {
            for j in 0..n {
                m.set(perm[i], perm[j], self.entry(i, j));
            }
        }
        CartanMatrix::from_trusted(m)
    }
}

impl fmt::Debug for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

/// Checks (M1) and (M2), scanning entries row by row.
pub fn validate_cartan_matrix(rows: &[Vec<i64>]) -> Result<CartanMatrix, MatrixError> {
    let rank = rows.len();
    if rank == 0 {
        return Err(MatrixError::Empty);
    }
    for (r, row) in rows.iter().enumerate() {
        if row.len() != rank {
            return Err(MatrixError::NotSquare { row: r + 1, len: row.len(), rank });
        }
    }
    for i in 0..rank {
        for j in 0..rank {
            let c = rows[i][j];
            if i == j {
                if c != 2 {
                    return Err(MatrixError::DiagonalNotTwo(i + 1));
                }
            } else if c > 0 {
                return Err(MatrixError::PositiveOffDiagonal(i + 1, j + 1));
            } else if c == 0 && rows[j][i] != 0 {
                return Err(MatrixError::AsymmetricZero(i + 1, j + 1));
            }
        }
    }
    Ok(CartanMatrix::from_trusted(IntMatrix::from_rows(rows)))
}

/// Violation of the Cartan scheme axioms. Indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemeError {
    #[error("a Cartan scheme needs at least one object")]
    NoObjects,
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("object {0:?} is listed twice")]
    DuplicateObject(String),
    #[error("expected {expected} reflection maps, found {found}")]
    ReflectionCount { expected: usize, found: usize },
    #[error("reflection {index} does not map every object into the object set")]
    ReflectionOutOfRange { index: usize },
    #[error("expected one Cartan matrix per object ({expected}), found {found}")]
    MatrixCount { expected: usize, found: usize },
    #[error("Cartan matrix of object {object:?} has rank {found}, expected {expected}")]
    RankMismatch { object: String, expected: usize, found: usize },
    #[error("Cartan matrix of object {object:?}: {source}")]
    Matrix {
        object: String,
        #[source]
        source: MatrixError,
    },
    #[error("reflection {0} is not an involution")]
    ReflectionNotInvolutive(usize),
    #[error("c^{object}_{i}{j} differs from its value at the reflected object")]
    C2Violation { object: String, i: usize, j: usize },
}

/// Unvalidated scheme data: the shape of a Cartan scheme without any of its
/// axioms enforced. `reflections[i][a]` is `ρ_i(a)`, `matrices[a]` the rows
/// of `C^a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawScheme {
    pub rank: usize,
    pub objects: Vec<String>,
    pub reflections: Vec<Vec<usize>>,
    pub matrices: Vec<Vec<Vec<i64>>>,
}

impl RawScheme {
    /// Runs the full validation: shape, (M1), (M2), (C1), (C2).
    pub fn validate(self) -> Result<CartanScheme, SchemeError> {
        self.check_shape()?;
        let mut matrices = Vec::with_capacity(self.objects.len());
        for (a, rows) in self.matrices.iter().enumerate() {
            let m = validate_cartan_matrix(rows)
                .map_err(|source| SchemeError::Matrix { object: self.objects[a].clone(), source })?;
            matrices.push(m);
        }
        self.check_c1()?;
        self.check_c2()?;
        Ok(CartanScheme { rank: self.rank, objects: self.objects, reflections: self.reflections, matrices })
    }

    pub(crate) fn check_shape(&self) -> Result<(), SchemeError> {
        let n = self.objects.len();
        if n == 0 {
            return Err(SchemeError::NoObjects);
        }
        if self.rank == 0 {
            return Err(SchemeError::ZeroRank);
        }
        let mut seen = BTreeSet::new();
        for name in &self.objects {
            if !seen.insert(name.as_str()) {
                return Err(SchemeError::DuplicateObject(name.clone()));
            }
        }
        if self.reflections.len() != self.rank {
            return Err(SchemeError::ReflectionCount { expected: self.rank, found: self.reflections.len() });
        }
        for (i, map) in self.reflections.iter().enumerate() {
            if map.len() != n || map.iter().any(|&b| b >= n) {
                return Err(SchemeError::ReflectionOutOfRange { index: i + 1 });
            }
        }
        if self.matrices.len() != n {
            return Err(SchemeError::MatrixCount { expected: n, found: self.matrices.len() });
        }
        for (a, rows) in self.matrices.iter().enumerate() {
            if rows.len() != self.rank || rows.iter().any(|r| r.len() != self.rank) {
                return Err(SchemeError::RankMismatch {
                    object: self.objects[a].clone(),
                    expected: self.rank,
                    found: rows.len(),
                });
            }
        }
        Ok(())
    }

    pub(crate) fn check_c1(&self) -> Result<(), SchemeError> {
        for (i, map) in self.reflections.iter().enumerate() {
            if (0..map.len()).any(|a| map[map[a]] != a) {
                return Err(SchemeError::ReflectionNotInvolutive(i + 1));
            }
        }
        Ok(())
    }

    pub(crate) fn check_c2(&self) -> Result<(), SchemeError> {
        for a in 0..self.objects.len() {
            for i in 0..self.rank {
                let b = self.reflections[i][a];
                for j in 0..self.rank {
                    if self.matrices[a][i][j] != self.matrices[b][i][j] {
                        return Err(SchemeError::C2Violation {
                            object: self.objects[a].clone(),
                            i: i + 1,
                            j: j + 1,
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

/// A validated Cartan scheme `C(I, A, (ρ_i), (C^a))`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CartanScheme {
    rank: usize,
    objects: Vec<String>,
    reflections: Vec<Vec<usize>>,
    matrices: Vec<CartanMatrix>,
}

impl fmt::Debug for CartanScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CartanScheme")
            .field("objects", &self.objects)
            .field("reflections", &self.reflections)
            .field("matrices", &self.matrices)
            .finish()
    }
}

impl CartanScheme {
    /// Validates the given data; see [`RawScheme::validate`].
    pub fn new(
        objects: Vec<String>,
        reflections: Vec<Vec<usize>>,
        matrices: Vec<Vec<Vec<i64>>>,
    ) -> Result<Self, SchemeError> {
        let rank = matrices.first().map_or(reflections.len(), Vec::len);
        RawScheme { rank, objects, reflections, matrices }.validate()
    }

    /// The one-object scheme of a single matrix, all reflections trivial.
    pub fn single(matrix: CartanMatrix) -> Self {
        let rank = matrix.rank();
        CartanScheme {
            rank,
            objects: vec!["x".to_string()],
            reflections: vec![vec![0]; rank],
            matrices: vec![matrix],
        }
    }

    /// A standard scheme: every object carries `matrix`.
    pub fn standard(
        matrix: CartanMatrix,
        objects: Vec<String>,
        reflections: Vec<Vec<usize>>,
    ) -> Result<Self, SchemeError> {
        let rows = matrix.rows();
        let matrices = vec![rows; objects.len()];
        Self::new(objects, reflections, matrices)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn object_name(&self, a: usize) -> &str {
        &self.objects[a]
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    /// `ρ_i(a)`.
    #[inline]
    pub fn reflect(&self, i: usize, a: usize) -> usize {
        self.reflections[i][a]
    }

    pub fn reflections(&self) -> &[Vec<usize>] {
        &self.reflections
    }

    pub fn matrix(&self, a: usize) -> &CartanMatrix {
        &self.matrices[a]
    }

    pub fn matrices(&self) -> &[CartanMatrix] {
        &self.matrices
    }

    /// `c^a_{ij}`.
    #[inline]
    pub fn entry(&self, a: usize, i: usize, j: usize) -> i64 {
        self.matrices[a].entry(i, j)
    }

    pub fn to_raw(&self) -> RawScheme {
        RawScheme {
            rank: self.rank,
            objects: self.objects.clone(),
            reflections: self.reflections.clone(),
            matrices: self.matrices.iter().map(CartanMatrix::rows).collect(),
        }
    }

    /// Objects reachable from `a` by the reflections, in BFS order with
    /// indices ascending.
    pub fn orbit(&self, a: usize) -> Vec<usize> {
        let mut seen = vec![false; self.object_count()];
        let mut order = vec![a];
        seen[a] = true;
        let mut head = 0;
        while head < order.len() {
            let b = order[head];
            head += 1;
            for i in 0..self.rank {
                let c = self.reflect(i, b);
                if !seen[c] {
                    seen[c] = true;
                    order.push(c);
                }
            }
        }
        order
    }

    /// Connected components of the object set, each in BFS order, ordered by
    /// their first object.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.object_count()];
        let mut out = Vec::new();
        for a in 0..self.object_count() {
            if !assigned[a] {
                let orbit = self.orbit(a);
                for &b in &orbit {
                    assigned[b] = true;
                }
                out.push(orbit);
            }
        }
        out
    }

    /// True iff the reflections act transitively on the objects.
    pub fn is_connected(&self) -> bool {
        self.orbit(0).len() == self.object_count()
    }

    /// True iff all objects carry the same Cartan matrix.
    pub fn is_standard(&self) -> bool {
        self.matrices.windows(2).all(|w| w[0] == w[1])
    }

    /// Restriction to the index subset `indices` (0-based, any order;
    /// duplicates are ignored). The restricted indices are renumbered in
    /// ascending order.
    pub fn restrict(&self, indices: &[usize]) -> Result<CartanScheme, RestrictError> {
        let subset: BTreeSet<usize> = indices.iter().copied().collect();
        if subset.is_empty() {
            return Err(RestrictError::EmptySubset);
        }
        if let Some(&bad) = subset.iter().find(|&&i| i >= self.rank) {
            return Err(RestrictError::IndexOutOfRange(bad + 1));
        }
        let keep: Vec<usize> = subset.into_iter().collect();
        Ok(CartanScheme {
            rank: keep.len(),
            objects: self.objects.clone(),
            reflections: keep.iter().map(|&i| self.reflections[i].clone()).collect(),
            matrices: self.matrices.iter().map(|m| m.submatrix(&keep)).collect(),
        })
    }

    /// Sub-scheme on a set of objects closed under all reflections.
    pub fn sub_scheme(&self, objects: &[usize]) -> CartanScheme {
        let mut position = vec![usize::MAX; self.object_count()];
        for (k, &a) in objects.iter().enumerate() {
            position[a] = k;
        }
        CartanScheme {
            rank: self.rank,
            objects: objects.iter().map(|&a| self.objects[a].clone()).collect(),
            reflections: self
                .reflections
                .iter()
                .map(|map| {
                    objects
                        .iter()
                        .map(|&a| {
                            let p = position[map[a]];
                            assert!(p != usize::MAX, "object set not closed under reflections");
                            p
                        })
                        .collect()
                })
                .collect(),
            matrices: objects.iter().map(|&a| self.matrices[a].clone()).collect(),
        }
    }

    /// Renames objects; `names` must have one distinct entry per object.
    pub fn with_object_names(&self, names: Vec<String>) -> CartanScheme {
        assert_eq!(names.len(), self.object_count());
        CartanScheme { objects: names, ..self.clone() }
    }

    /// Applies an index/object relabeling: old index `i` becomes
    /// `index_map[i]`, old object `a` becomes position `object_map[a]`.
    /// The new object at position `object_map[a]` keeps `a`'s name.
    pub fn relabeled(&self, index_map: &[usize], object_map: &[usize]) -> CartanScheme {
        let n = self.object_count();
        let mut objects = vec![String::new(); n];
        let mut reflections = vec![vec![0; n]; self.rank];
        let mut matrices = vec![self.matrices[0].clone(); n];
        for a in 0..n {
            objects[object_map[a]] = self.objects[a].clone();
            matrices[object_map[a]] = self.matrices[a].permuted(index_map);
            for i in 0..self.rank {
                reflections[index_map[i]][object_map[a]] = object_map[self.reflect(i, a)];
            }
        }
        CartanScheme { rank: self.rank, objects, reflections, matrices }
    }

    /// The finest partition of the index set such that `c^a_{ij} = 0` for
    /// all objects whenever `i` and `j` lie in different blocks. Blocks are
    /// sorted and listed by their least index.
    pub fn decompose(&self) -> Vec<Vec<usize>> {
        let n = self.rank;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        for m in &self.matrices {
            for i in 0..n {
                for j in 0..n {
                    if i != j && m.entry(i, j) != 0 {
                        let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                        if ri != rj {
                            parent[ri.max(rj)] = ri.min(rj);
                        }
                    }
                }
            }
        }
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_of_root = vec![usize::MAX; n];
        for i in 0..n {
            let r = find(&mut parent, i);
            if block_of_root[r] == usize::MAX {
                block_of_root[r] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[block_of_root[r]].push(i);
        }
        blocks
    }

    /// The object change diagram: an edge `(a, b, i)` for every `a < b`
    /// with `ρ_i(a) = b`.
    pub fn object_change_diagram(&self) -> ObjectChangeDiagram {
        let mut edges = Vec::new();
        for a in 0..self.object_count() {
            for i in 0..self.rank {
                let b = self.reflect(i, a);
                if a < b {
                    edges.push(DiagramEdge { a, b, label: i });
                }
            }
        }
        edges.sort();
        ObjectChangeDiagram { vertices: self.objects.clone(), edges }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RestrictError {
    #[error("cannot restrict to the empty index set")]
    EmptySubset,
    #[error("index {0} is out of range")]
    IndexOutOfRange(usize),
}

/// Renders a partition of `0..rank` with 1-based labels, e.g. `{1,2} {3,4}`.
pub fn format_partition(blocks: &[Vec<usize>]) -> String {
    blocks
        .iter()
        .map(|b| {
            let inner: Vec<String> = b.iter().map(|i| (i + 1).to_string()).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Edge of an object change diagram; `a < b` are object positions and
/// `label` the 0-based reflection index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiagramEdge {
    pub a: usize,
    pub b: usize,
    pub label: usize,
}

/// Labeled undirected multigraph of non-trivial reflections between objects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObjectChangeDiagram {
    pub vertices: Vec<String>,
    pub edges: Vec<DiagramEdge>,
}

impl ObjectChangeDiagram {
    /// Labels (1-based) on the edges between two vertices.
    pub fn labels_between(&self, a: usize, b: usize) -> Vec<usize> {
        let (a, b) = (a.min(b), a.max(b));
        self.edges.iter().filter(|e| e.a == a && e.b == b).map(|e| e.label + 1).collect()
    }

    /// Compact text form, e.g. `x-y:1,3;y-z:2`. Isolated vertices are not
    /// listed; a diagram without edges renders as `-`.
    pub fn signature(&self) -> String {
        let mut pairs: Vec<(usize, usize)> = self.edges.iter().map(|e| (e.a, e.b)).collect();
        pairs.dedup();
        if pairs.is_empty() {
            return "-".to_string();
        }
        pairs
            .iter()
            .map(|&(a, b)| {
                let labels: Vec<String> = self.labels_between(a, b).iter().map(ToString::to_string).collect();
                format!("{}-{}:{}", self.vertices[a], self.vertices[b], labels.join(","))
            })
            .collect::<Vec<_>>()
            .join(";")
    }

    /// Vertex degrees counted with edge multiplicity, sorted descending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for e in &self.edges {
            deg[e.a] += 1;
            deg[e.b] += 1;
        }
        deg.sort_unstable_by(|x, y| y.cmp(x));
        deg
    }

    /// Sorted multiset of edge multiplicities between adjacent vertex pairs.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut pairs: Vec<(usize, usize)> = self.edges.iter().map(|e| (e.a, e.b)).collect();
        pairs.sort();
        let mut out = Vec::new();
        let mut k = 0;
        while k < pairs.len() {
            let mut m = 1;
            while k + m < pairs.len() && pairs[k + m] == pairs[k] {
                m += 1;
            }
            out.push(m);
            k += m;
        }
        out.sort_unstable();
        out
    }
}

/// Witness of an equivalence: index `i` maps to `index_map[i]`, object `a`
/// to `object_map[a]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equivalence {
    pub index_map: Vec<usize>,
    pub object_map: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EquivalenceError {
    #[error("ranks differ ({0} vs {1})")]
    RankMismatch(usize, usize),
    #[error("object counts differ ({0} vs {1})")]
    ObjectCountMismatch(usize, usize),
}

/// Searches for bijections `φ0: I → I'`, `φ1: A → A'` with
/// `φ1(ρ_i(a)) = ρ'_{φ0(i)}(φ1(a))` and `c'^{φ1(a)}_{φ0(i)φ0(j)} = c^a_{ij}`.
pub fn schemes_equivalent(
    s: &CartanScheme,
    t: &CartanScheme,
) -> Result<Option<Equivalence>, EquivalenceError> {
    find_equivalence(s, t, |_| true)
}

/// Like [`schemes_equivalent`], but only returns a witness accepted by
/// `accept`; every scheme equivalence is offered to it until one passes.
pub fn find_equivalence(
    s: &CartanScheme,
    t: &CartanScheme,
    mut accept: impl FnMut(&Equivalence) -> bool,
) -> Result<Option<Equivalence>, EquivalenceError> {
    if s.rank() != t.rank() {
        return Err(EquivalenceError::RankMismatch(s.rank(), t.rank()));
    }
    if s.object_count() != t.object_count() {
        return Err(EquivalenceError::ObjectCountMismatch(s.object_count(), t.object_count()));
    }
    // Matrices compared as multisets, invariant under any index permutation.
    let mut ms: Vec<Vec<i64>> = s.matrices().iter().map(matrix_invariant).collect();
    let mut mt: Vec<Vec<i64>> = t.matrices().iter().map(matrix_invariant).collect();
    ms.sort();
    mt.sort();
    if ms != mt {
        return Ok(None);
    }
    let mut found = None;
    for_each_permutation(s.rank(), |index_map| {
        let permuted: Vec<CartanMatrix> = s.matrices().iter().map(|m| m.permuted(index_map)).collect();
        let mut object_map = vec![usize::MAX; s.object_count()];
        let mut used = vec![false; t.object_count()];
        extend_object_map(s, t, index_map, &permuted, &mut object_map, &mut used, &mut |om| {
            let w = Equivalence { index_map: index_map.to_vec(), object_map: om.to_vec() };
            if accept(&w) {
                found = Some(w);
                true
            } else {
                false
            }
        });
        found.is_some()
    });
    Ok(found)
}

fn matrix_invariant(m: &CartanMatrix) -> Vec<i64> {
    let n = m.rank();
    let mut rows: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut r: Vec<i64> = (0..n).filter(|&j| j != i).map(|j| m.entry(i, j)).collect();
            r.sort();
            r
        })
        .collect();
    rows.sort();
    rows.concat()
}

/// Backtracking over object bijections; assignments are propagated along
/// reflections so a connected component is fixed by its first object.
/// `done` returns true to stop the search.
fn extend_object_map(
    s: &CartanScheme,
    t: &CartanScheme,
    index_map: &[usize],
    permuted: &[CartanMatrix],
    object_map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    done: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let Some(start) = object_map.iter().position(|&x| x == usize::MAX) else {
        return done(object_map);
    };
    for target in 0..t.object_count() {
        if used[target] || permuted[start] != *t.matrix(target) {
            continue;
        }
        let saved_map = object_map.clone();
        let saved_used = used.clone();
        if propagate(s, t, index_map, permuted, object_map, used, start, target)
            && extend_object_map(s, t, index_map, permuted, object_map, used, done)
        {
            return true;
        }
        *object_map = saved_map;
        *used = saved_used;
    }
    false
}

#[allow(clippy::too_many_arguments)]
fn propagate(
    s: &CartanScheme,
    t: &CartanScheme,
    index_map: &[usize],
    permuted: &[CartanMatrix],
    object_map: &mut [usize],
    used: &mut [bool],
    start: usize,
    target: usize,
) -> bool {
    object_map[start] = target;
    used[target] = true;
    let mut stack = vec![start];
    while let Some(a) = stack.pop() {
        for i in 0..s.rank() {
            let b = s.reflect(i, a);
            let image = t.reflect(index_map[i], object_map[a]);
            if object_map[b] == usize::MAX {
                if used[image] || permuted[b] != *t.matrix(image) {
                    return false;
                }
                object_map[b] = image;
                used[image] = true;
                stack.push(b);
            } else if object_map[b] != image {
                return false;
            }
        }
    }
    true
}

/// Calls `f` with every permutation of `0..n` in lexicographic order until
/// it returns true.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize]) -> bool) {
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if f(&perm) {
            return;
        }
        // next lexicographic permutation
        let Some(k) = (0..n.saturating_sub(1)).rev().find(|&k| perm[k] < perm[k + 1]) else {
            return;
        };
        let l = (k + 1..n).rev().find(|&l| perm[k] < perm[l]).expect("successor exists");
        perm.swap(k, l);
        perm[k + 1..].reverse();
    }
}

/// Lexicographically minimal encoding of a scheme over all index and object
/// relabelings, together with the relabeled scheme.
///
/// The key lists, for each new index, the image of every object under the
/// reflection, followed by every object's matrix in row-major order. The
/// returned scheme's objects are renamed `x, y, z` (or `o1, o2, …` beyond
/// three objects). Cost is `θ!·|A|!` and meant for small schemes.
pub fn canonical_form(s: &CartanScheme) -> (Vec<i64>, CartanScheme) {
    let n = s.object_count();
    let mut best: Option<(Vec<i64>, Vec<usize>, Vec<usize>)> = None;
    for_each_permutation(s.rank(), |index_map| {
        for_each_permutation(n, |object_map| {
            let key = relabel_key(s, index_map, object_map);
            if best.as_ref().is_none_or(|(k, _, _)| key < *k) {
                best = Some((key, index_map.to_vec(), object_map.to_vec()));
            }
            false
        });
        false
    });
    let (key, index_map, object_map) = best.expect("at least one permutation");
    let relabeled = s.relabeled(&index_map, &object_map);
    let names = canonical_object_names(n);
    (key, relabeled.with_object_names(names))
}

pub fn canonical_object_names(n: usize) -> Vec<String> {
    if n <= 3 {
        ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|k| format!("o{k}")).collect()
    }
}

fn relabel_key(s: &CartanScheme, index_map: &[usize], object_map: &[usize]) -> Vec<i64> {
    let n = s.object_count();
    let theta = s.rank();
    let mut inverse_obj = vec![0; n];
    for (a, &b) in object_map.iter().enumerate() {
        inverse_obj[b] = a;
    }
    let mut inverse_idx = vec![0; theta];
    for (i, &j) in index_map.iter().enumerate() {
        inverse_idx[j] = i;
    }
    let mut key = Vec::with_capacity(theta * n + n * theta * theta);
    for new_i in 0..theta {
        let i = inverse_idx[new_i];
        for new_a in 0..n {
            let a = inverse_obj[new_a];
            key.push(object_map[s.reflect(i, a)] as i64);
        }
    }
    for new_a in 0..n {
        let a = inverse_obj[new_a];
        for new_i in 0..theta {
            for new_j in 0..theta {
                key.push(s.entry(a, inverse_idx[new_i], inverse_idx[new_j]));
            }
        }
    }
    key
}
