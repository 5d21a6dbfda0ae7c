//! Square integer matrices acting on `Z^I`.
//!
//! Column `j` of a matrix is the image of the simple root `α_j`, so applying
//! a matrix to a coordinate vector is ordinary matrix-vector multiplication.
//! All arithmetic that can grow without bound is checked; callers get `None`
//! on overflow instead of a silently wrapped value.

use std::fmt;

/// A vector in `Z^I`, stored by coordinates in index order.
pub type Root = Vec<i64>;

/// Dense square integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        Self { dim, entries }
    }

    /// Builds a matrix from rows. Panics if the rows are not square.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            assert_eq!(row.len(), dim, "matrix rows must be square");
            entries.extend_from_slice(row);
        }
        Self { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries[row * self.dim + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: i64) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.dim).map(<[i64]>::to_vec).collect()
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        (0..self.dim).all(|r| (0..self.dim).all(|c| self.get(r, c) == i64::from(r == c)))
    }

    pub fn is_neg_identity(&self) -> bool {
        (0..self.dim).all(|r| (0..self.dim).all(|c| self.get(r, c) == -i64::from(r == c)))
    }

    pub fn trace(&self) -> i64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Product `self · rhs`, or `None` on overflow.
    pub fn checked_mul(&self, rhs: &IntMatrix) -> Option<IntMatrix> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut entries = vec![0i64; n * n];
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..n {
                    let b = rhs.get(k, c);
                    if b == 0 {
                        continue;
                    }
                    let slot = &mut entries[r * n + c];
                    *slot = slot.checked_add(a.checked_mul(b)?)?;
                }
            }
        }
        Some(IntMatrix { dim: n, entries })
    }

    /// Product `self · rhs`. Panics on overflow; use for matrices known to
    /// lie in a finite group.
    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_mul(rhs).expect("integer overflow in matrix product")
    }

    /// `self · v`, or `None` on overflow.
    pub fn checked_apply(&self, v: &[i64]) -> Option<Root> {
        assert_eq!(v.len(), self.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = vec![0i64; n];
        for (r, slot) in out.iter_mut().enumerate() {
            for (c, &x) in v.iter().enumerate() {
                let a = self.get(r, c);
                if a != 0 && x != 0 {
                    *slot = slot.checked_add(a.checked_mul(x)?)?;
                }
            }
        }
        Some(out)
    }

    pub fn apply(&self, v: &[i64]) -> Root {
        self.checked_apply(v).expect("integer overflow in matrix action")
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> i128 {
        let n = self.dim;
        if n == 0 {
            return 1;
        }
        let mut m: Vec<i128> = self.entries.iter().map(|&x| i128::from(x)).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if m[k * n + k] == 0 {
                let Some(swap) = (k + 1..n).find(|&r| m[r * n + k] != 0) else {
                    return 0;
                };
                for c in 0..n {
                    m.swap(k * n + c, swap * n + c);
                }
                sign = -sign;
            }
            let pivot = m[k * n + k];
            for r in k + 1..n {
                for c in k + 1..n {
                    m[r * n + c] = (m[r * n + c] * pivot - m[r * n + k] * m[k * n + c]) / prev;
                }
                m[r * n + k] = 0;
            }
            prev = pivot;
        }
        sign * m[n * n - 1]
    }

    pub fn transpose(&self) -> IntMatrix {
        let n = self.dim;
        let mut out = IntMatrix { dim: n, entries: vec![0; n * n] };
        for r in 0..n {
            for c in 0..n {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

/// Result of testing whether an integer matrix has finite order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderTest {
    Finite(u64),
    Infinite,
    /// Entries overflowed before either conclusion was reached.
    Unknown,
}

/// Least common multiple of every possible order of a finite-order element
/// of `GL_n(Z)`.
///
/// Each eigenvalue of such an element is a primitive `d`-th root of unity
/// with `φ(d) ≤ n`, so the order divides the lcm of all those `d`.
pub fn finite_order_exponent(n: usize) -> u64 {
    let n = n as u64;
    let mut l = 1u64;
    for d in 1..=(2 * n * n + 2) {
        if euler_phi(d) <= n {
            l = lcm(l, d);
        }
    }
    l
}

/// Decides whether `m ∈ GL_n(Z)` has finite order.
///
/// Walks the powers `m, m², …, m^L` with `L` from [`finite_order_exponent`].
/// An identity power gives the order; a power with `|tr| > n` cannot have
/// root-of-unity eigenvalues, and reaching `L` without the identity rules out
/// every admissible order. Both of the latter prove infinite order.
pub fn matrix_order(m: &IntMatrix) -> OrderTest {
    let n = m.dim();
    let limit = finite_order_exponent(n);
    let mut power = m.clone();
    for k in 1..=limit {
        if power.is_identity() {
            return OrderTest::Finite(k);
        }
        if power.trace().unsigned_abs() > n as u64 {
            return OrderTest::Infinite;
        }
        match power.checked_mul(m) {
            Some(next) => power = next,
            None => return OrderTest::Unknown,
        }
    }
    OrderTest::Infinite
}

fn euler_phi(mut d: u64) -> u64 {
    let mut result = d;
    let mut p = 2;
    while p * p <= d {
        if d.is_multiple_of(p) {
            while d.is_multiple_of(p) {
                d /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if d > 1 {
        result -= result / d;
    }
    result
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Formats a root in the exponent shorthand `1^m 2^n` for `m α_1 + n α_2`.
///
/// Exponents equal to one and factors with exponent zero are omitted; negative
/// roots get a leading minus. A factor carrying an exponent is followed by a
/// space, and ranks above nine separate every factor.
pub fn format_root(root: &[i64]) -> String {
    let negative = root.iter().any(|&x| x < 0);
    let mut out = String::new();
    let mut need_space = false;
    for (i, &x) in root.iter().enumerate() {
        let x = x.abs();
        if x == 0 {
            continue;
        }
        if need_space {
            out.push(' ');
        }
        out.push_str(&(i + 1).to_string());
        need_space = root.len() > 9;
        if x != 1 {
            out.push('^');
            out.push_str(&x.to_string());
            need_space = true;
        }
    }
    if out.is_empty() {
        "0".to_string()
    } else if negative {
        format!("-{out}")
    } else {
        out
    }
}

/// Parses the shorthand produced by [`format_root`].
pub fn parse_root(text: &str, rank: usize) -> Option<Root> {
    let mut root = vec![0i64; rank];
    let (sign, body) = match text.trim().strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, text.trim()),
    };
    if body == "0" {
        return Some(root);
    }
    for token in body.split_whitespace() {
        let (factors, exp) = match token.split_once('^') {
            Some((f, e)) => (f, e.parse::<i64>().ok()?),
            None => (token, 1),
        };
        let indices: Vec<usize> = if rank > 9 {
            vec![factors.parse().ok()?]
        } else {
            factors.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect::<Option<_>>()?
        };
        let last = indices.len().checked_sub(1)?;
        for (k, &idx) in indices.iter().enumerate() {
            if idx == 0 || idx > rank {
                return None;
            }
            root[idx - 1] += sign * if k == last { exp } else { 1 };
        }
    }
    Some(root)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_of_small_matrices() {
        assert_eq!(IntMatrix::identity(3).determinant(), 1);
        let m = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(m.determinant(), -1);
        let m = IntMatrix::from_rows(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        assert_eq!(m.determinant(), 4);
        let m = IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(m.determinant(), 0);
    }

    #[test]
    fn exponent_for_small_ranks() {
        assert_eq!(finite_order_exponent(1), 2);
        assert_eq!(finite_order_exponent(2), 12);
        assert_eq!(finite_order_exponent(3), 12);
        assert_eq!(finite_order_exponent(4), 120);
    }

    #[test]
    fn order_of_rotations_and_shears() {
        // Coxeter element of A2 has order 3.
        let c = IntMatrix::from_rows(&[vec![0, -1], vec![1, -1]]);
        assert_eq!(matrix_order(&c), OrderTest::Finite(3));
        // Unipotent shear: trace stays 2, never reaches the identity.
        let shear = IntMatrix::from_rows(&[vec![1, 1], vec![0, 1]]);
        assert_eq!(matrix_order(&shear), OrderTest::Infinite);
        // Hyperbolic element: trace grows.
        let hyp = IntMatrix::from_rows(&[vec![2, 1], vec![1, 1]]);
        assert_eq!(matrix_order(&hyp), OrderTest::Infinite);
        assert_eq!(matrix_order(&IntMatrix::identity(2)), OrderTest::Finite(1));
    }

    #[test]
    fn root_shorthand() {
        assert_eq!(format_root(&[1, 2]), "12^2");
        assert_eq!(format_root(&[3, 5]), "1^3 2^5");
        assert_eq!(format_root(&[0, 1]), "2");
        assert_eq!(format_root(&[-1, -1]), "-12");
        assert_eq!(parse_root("1^2 2^3", 2), Some(vec![2, 3]));
        assert_eq!(parse_root("12^4", 2), Some(vec![1, 4]));
        assert_eq!(parse_root("3", 2), None);
    }
}
