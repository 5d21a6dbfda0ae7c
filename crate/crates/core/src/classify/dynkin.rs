//! Finite-type recognition for single generalized Cartan matrices.

use crate::groupoid::find_infinite_loop;
use crate::roots::{root_closure, RootVerdict};
use crate::scheme::{CartanMatrix, CartanScheme};

use super::Caps;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DynkinType {
    /// Finite type, e.g. `B3` or `A1×A2` (blocks in index order).
    Finite {
        label: String,
        positive_roots: usize,
    },
    NotFiniteType,
    /// The closure hit its cap and no infinite-order element was found.
    Inconclusive,
}

/// Decides finite type by root closure and names the type.
pub fn dynkin_type(m: &CartanMatrix) -> DynkinType {
    let caps = Caps::default();
    let s = CartanScheme::single(m.clone());
    let roots = match root_closure(&s, caps.roots) {
        RootVerdict::Finite(r) => r,
        RootVerdict::NoFiniteSystem(_) => return DynkinType::NotFiniteType,
        RootVerdict::CapExceeded => {
            return match find_infinite_loop(&s, caps.certificate) {
                Some(_) => DynkinType::NotFiniteType,
                None => DynkinType::Inconclusive,
            }
        }
    };
    let mut labels = Vec::new();
    let mut expected = 0;
    for block in s.decompose() {
        let sub = m.submatrix(&block);
        match component_label(&sub) {
            Some((label, count)) => {
                labels.push(label);
                expected += count;
            }
            None => return DynkinType::Inconclusive,
        }
    }
    let positive_roots = roots.positive_count(0);
    if positive_roots != expected {
        return DynkinType::Inconclusive;
    }
    DynkinType::Finite { label: labels.join("×"), positive_roots }
}

/// Label and positive-root count of an indecomposable finite-type matrix,
/// read off its Dynkin diagram.
fn component_label(m: &CartanMatrix) -> Option<(String, usize)> {
    let n = m.rank();
    if n == 1 {
        return Some(("A1".into(), 1));
    }
    let mut neighbours = vec![Vec::new(); n];
    let mut multiple = None;
    for i in 0..n {
        for j in i + 1..n {
            let product = m.entry(i, j) * m.entry(j, i);
            if product == 0 {
                continue;
            }
            neighbours[i].push(j);
            neighbours[j].push(i);
            match product {
                1 => {}
                2 | 3 if multiple.is_none() => multiple = Some((i, j, product)),
                _ => return None,
            }
        }
    }
    let edges: usize = neighbours.iter().map(Vec::len).sum::<usize>() / 2;
    if edges != n - 1 {
        return None;
    }
    let ends: Vec<usize> = (0..n).filter(|&i| neighbours[i].len() == 1).collect();
    let branch: Vec<usize> = (0..n).filter(|&i| neighbours[i].len() >= 3).collect();

    match multiple {
        Some((_, _, 3)) => (n == 2).then(|| ("G2".into(), 6)),
        Some((i, j, _)) => {
            if !branch.is_empty() {
                return None;
            }
            if n == 2 {
                return Some(("B2".into(), 4));
            }
            let end_i = neighbours[i].len() == 1;
            let end_j = neighbours[j].len() == 1;
            if !end_i && !end_j {
                return (n == 4).then(|| ("F4".into(), 24));
            }
            let (end, inner) = if end_i { (i, j) } else { (j, i) };
            // α_end is short iff c_{end,inner} = −2.
            let short_end = m.entry(end, inner) == -2;
            let family = if short_end { "B" } else { "C" };
            Some((format!("{family}{n}"), n * n))
        }
        None => match branch.len() {
            0 => Some((format!("A{n}"), n * (n + 1) / 2)),
            1 => {
                let centre = branch[0];
                if neighbours[centre].len() != 3 || ends.len() != 3 {
                    return None;
                }
                let mut arms: Vec<usize> =
                    neighbours[centre].iter().map(|&k| arm_length(&neighbours, centre, k)).collect();
                arms.sort_unstable();
                match arms.as_slice() {
                    [1, 1, _] => Some((format!("D{n}"), n * (n - 1))),
                    [1, 2, 2] => Some(("E6".into(), 36)),
                    [1, 2, 3] => Some(("E7".into(), 63)),
                    [1, 2, 4] => Some(("E8".into(), 120)),
                    _ => None,
                }
            }
            _ => None,
        },
    }
}

fn arm_length(neighbours: &[Vec<usize>], from: usize, start: usize) -> usize {
    let (mut prev, mut cur, mut len) = (from, start, 1);
    loop {
        let next: Vec<usize> = neighbours[cur].iter().copied().filter(|&k| k != prev).collect();
        match next.as_slice() {
            [k] => {
                prev = cur;
                cur = *k;
                len += 1;
            }
            _ => return len,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label(rows: &[Vec<i64>]) -> DynkinType {
        dynkin_type(&CartanMatrix::new(rows).unwrap())
    }

    fn finite(name: &str, count: usize) -> DynkinType {
        DynkinType::Finite { label: name.into(), positive_roots: count }
    }

    #[test]
    fn rank_two() {
        assert_eq!(label(&[vec![2, -1], vec![-1, 2]]), finite("A2", 3));
        assert_eq!(label(&[vec![2, -1], vec![-3, 2]]), finite("G2", 6));
        assert_eq!(label(&[vec![2, -2], vec![-1, 2]]), finite("B2", 4));
        assert_eq!(label(&[vec![2, 0], vec![0, 2]]), finite("A1×A1", 2));
        assert_eq!(label(&[vec![2, -2], vec![-2, 2]]), DynkinType::NotFiniteType);
        assert_eq!(label(&[vec![2, -1], vec![-5, 2]]), DynkinType::NotFiniteType);
    }

    #[test]
    fn rank_three_and_four() {
        assert_eq!(label(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]), finite("B3", 9));
        assert_eq!(label(&[vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]]), finite("C3", 9));
        let d4 = [vec![2, -1, 0, 0], vec![-1, 2, -1, -1], vec![0, -1, 2, 0], vec![0, -1, 0, 2]];
        assert_eq!(label(&d4), finite("D4", 12));
        let f4 = [vec![2, -1, 0, 0], vec![-1, 2, -2, 0], vec![0, -1, 2, -1], vec![0, 0, -1, 2]];
        assert_eq!(label(&f4), finite("F4", 24));
        let a4 = [vec![2, -1, 0, 0], vec![-1, 2, -1, 0], vec![0, -1, 2, -1], vec![0, 0, -1, 2]];
        assert_eq!(label(&a4), finite("A4", 10));
    }
}
