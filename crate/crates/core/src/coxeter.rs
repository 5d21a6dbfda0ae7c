//! Identification of finite matrix groups with finite Coxeter groups.
//!
//! The catalog holds the irreducible finite types of rank at most four and
//! all their products of total rank at most four. A group is matched against
//! every entry of its order: the entry wins if `G` contains involutions
//! whose pairwise products have the orders prescribed by the Coxeter matrix
//! and which generate `G`. Such involutions give a surjection from the
//! Coxeter group onto `G`, and equal orders make it an isomorphism.

use std::collections::HashMap;
use std::fmt;

use crate::groupoid::MatrixGroup;
use crate::matrix::IntMatrix;

/// An irreducible finite Coxeter type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Irreducible {
    A(usize),
    B(usize),
    D(usize),
    F4,
    G2,
}

impl Irreducible {
    pub fn rank(self) -> usize {
        match self {
            Irreducible::A(n) | Irreducible::B(n) | Irreducible::D(n) => n,
            Irreducible::F4 => 4,
            Irreducible::G2 => 2,
        }
    }

    pub fn order(self) -> u64 {
        let fact = |n: usize| (1..=n as u64).product::<u64>();
        match self {
            Irreducible::A(n) => fact(n + 1),
            Irreducible::B(n) => (1u64 << n) * fact(n),
            Irreducible::D(n) => (1u64 << (n - 1)) * fact(n),
            Irreducible::F4 => 1152,
            Irreducible::G2 => 12,
        }
    }

    /// Coxeter matrix `m_{ij}` in the usual node order.
    pub fn coxeter_matrix(self) -> Vec<Vec<u64>> {
        let n = self.rank();
        let mut m = vec![vec![2u64; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        let mut bond = |i: usize, j: usize, v: u64| {
            m[i][j] = v;
            m[j][i] = v;
        };
        match self {
            Irreducible::A(n) => (1..n).for_each(|i| bond(i - 1, i, 3)),
            Irreducible::B(n) => {
                (1..n - 1).for_each(|i| bond(i - 1, i, 3));
                bond(n - 2, n - 1, 4);
            }
            Irreducible::D(n) => {
                (1..n - 1).for_each(|i| bond(i - 1, i, 3));
                bond(n - 3, n - 1, 3);
            }
            Irreducible::F4 => {
                bond(0, 1, 3);
                bond(1, 2, 4);
                bond(2, 3, 3);
            }
            Irreducible::G2 => bond(0, 1, 6),
        }
        m
    }
}

impl fmt::Display for Irreducible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Irreducible::A(n) => write!(f, "A{n}"),
            Irreducible::B(n) => write!(f, "B{n}"),
            Irreducible::D(n) => write!(f, "D{n}"),
            Irreducible::F4 => write!(f, "F4"),
            Irreducible::G2 => write!(f, "G2"),
        }
    }
}

/// A product of irreducible types, components in descending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterType {
    pub components: Vec<Irreducible>,
}

impl CoxeterType {
    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank()).sum()
    }

    pub fn order(&self) -> u64 {
        self.components.iter().map(|c| c.order()).product()
    }

    /// Block-diagonal Coxeter matrix of the product.
    pub fn coxeter_matrix(&self) -> Vec<Vec<u64>> {
        let n = self.rank();
        let mut m = vec![vec![2u64; n]; n];
        let mut offset = 0;
        for c in &self.components {
            let block = c.coxeter_matrix();
            for (i, row) in block.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    m[offset + i][offset + j] = v;
                }
            }
            offset += c.rank();
        }
        m
    }

    /// Label such as `B3` or `A1×A1`; components in ascending order.
    pub fn label(&self) -> String {
        let mut parts = self.components.clone();
        parts.sort();
        parts.iter().map(ToString::to_string).collect::<Vec<_>>().join("×")
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Result of [`identify_coxeter_type`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Identification {
    Known(CoxeterType),
    Unknown { order: usize },
}

impl Identification {
    pub fn label(&self) -> String {
        match self {
            Identification::Known(t) => t.label(),
            Identification::Unknown { order } => format!("unknown(order {order})"),
        }
    }
}

/// Catalog entries in matching priority: fewer components first, then the
/// component list in descending order.
pub fn catalog() -> Vec<CoxeterType> {
    let irreducible = [
        Irreducible::F4,
        Irreducible::G2,
        Irreducible::D(4),
        Irreducible::B(4),
        Irreducible::B(3),
        Irreducible::B(2),
        Irreducible::A(4),
        Irreducible::A(3),
        Irreducible::A(2),
        Irreducible::A(1),
    ];
    let mut out = Vec::new();
    fn extend(
        prefix: &mut Vec<Irreducible>,
        start: usize,
        rank_left: usize,
        pool: &[Irreducible],
        out: &mut Vec<CoxeterType>,
    ) {
        if !prefix.is_empty() {
            out.push(CoxeterType { components: prefix.clone() });
        }
        for (k, &c) in pool.iter().enumerate().skip(start) {
            if c.rank() <= rank_left {
                prefix.push(c);
                extend(prefix, k, rank_left - c.rank(), pool, out);
                prefix.pop();
            }
        }
    }
    extend(&mut Vec::new(), 0, 4, &irreducible, &mut out);
    out.sort_by_key(|t| t.components.len());
    out
}

/// Identifies a finite matrix group as one of the catalog Coxeter groups.
pub fn identify_coxeter_type(g: &MatrixGroup) -> Identification {
    let order = g.order();
    let table = GroupTable::new(g);
    for candidate in catalog() {
        if candidate.order() == order as u64 && table.realizes(&candidate.coxeter_matrix()) {
            return Identification::Known(candidate);
        }
    }
    Identification::Unknown { order }
}

/// Multiplication data of a small finite group, by element position.
struct GroupTable {
    elements: Vec<IntMatrix>,
    position: HashMap<IntMatrix, usize>,
    involutions: Vec<usize>,
}

impl GroupTable {
    fn new(g: &MatrixGroup) -> GroupTable {
        let elements = g.elements().to_vec();
        let position: HashMap<IntMatrix, usize> =
            elements.iter().enumerate().map(|(k, m)| (m.clone(), k)).collect();
        let involutions = (0..elements.len())
            .filter(|&k| !elements[k].is_identity() && elements[k].mul(&elements[k]).is_identity())
            .collect();
        GroupTable { elements, position, involutions }
    }

    fn mul(&self, x: usize, y: usize) -> usize {
        self.position[&self.elements[x].mul(&self.elements[y])]
    }

    fn element_order(&self, x: usize) -> u64 {
        let mut p = x;
        let mut k = 1;
        while !self.elements[p].is_identity() {
            p = self.mul(p, x);
            k += 1;
        }
        k
    }

    /// One involution from each conjugacy class.
    fn involution_class_representatives(&self) -> Vec<usize> {
        let mut seen = vec![false; self.elements.len()];
        let mut reps = Vec::new();
        for &t in &self.involutions {
            if seen[t] {
                continue;
            }
            reps.push(t);
            for g in 0..self.elements.len() {
                let inv = self.inverse(g);
                seen[self.mul(self.mul(g, t), inv)] = true;
            }
        }
        reps
    }

    fn inverse(&self, x: usize) -> usize {
        let mut p = x;
        loop {
            let next = self.mul(p, x);
            if self.elements[next].is_identity() {
                return p;
            }
            p = next;
        }
    }

    fn generates(&self, gens: &[usize]) -> bool {
        let mut seen = vec![false; self.elements.len()];
        let identity = self.position[&IntMatrix::identity(self.elements[0].dim())];
        seen[identity] = true;
        let mut stack = vec![identity];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(g, x);
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == self.elements.len()
    }

    fn realizes(&self, m: &[Vec<u64>]) -> bool {
        let r = m.len();
        if r == 0 {
            return false;
        }
        let firsts = self.involution_class_representatives();
        let mut chosen = Vec::with_capacity(r);
        firsts.into_iter().any(|t| {
            chosen.clear();
            chosen.push(t);
            self.extend(m, &mut chosen)
        })
    }

    fn extend(&self, m: &[Vec<u64>], chosen: &mut Vec<usize>) -> bool {
        let k = chosen.len();
        if k == m.len() {
            return self.generates(chosen);
        }
        for &t in &self.involutions {
            if chosen.contains(&t) {
                continue;
            }
            let fits = chosen.iter().enumerate().all(|(j, &u)| self.element_order(self.mul(u, t)) == m[j][k]);
            if fits {
                chosen.push(t);
                if self.extend(m, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
}
