//! Standard `A_n` schemes on the left cosets of a subgroup of `S_{n+1}`.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::matrix::IntMatrix;
use crate::scheme::{CartanMatrix, CartanScheme};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CosetError {
    #[error("n must be at least 1")]
    ZeroRank,
    #[error("{0:?} is not a permutation of 1..={1}")]
    InvalidPermutation(Vec<usize>, usize),
}

/// A permutation of `1..=m` in one-line notation.
type Perm = Vec<usize>;

fn compose(p: &[usize], q: &[usize]) -> Perm {
    // (p ∘ q)(k) = p(q(k)), 1-based values
    q.iter().map(|&k| p[k - 1]).collect()
}

fn is_permutation(p: &[usize], m: usize) -> bool {
    let mut seen = vec![false; m];
    p.len() == m && p.iter().all(|&k| (1..=m).contains(&k) && !std::mem::replace(&mut seen[k - 1], true))
}

/// The subgroup generated by `gens`.
fn generated_subgroup(gens: &[Perm], m: usize) -> BTreeSet<Perm> {
    let identity: Perm = (1..=m).collect();
    let mut group = BTreeSet::from([identity.clone()]);
    let mut frontier = vec![identity];
    while let Some(g) = frontier.pop() {
        for h in gens {
            let gh = compose(&g, h);
            if group.insert(gh.clone()) {
                frontier.push(gh);
            }
        }
    }
    group
}

fn all_permutations(m: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    crate::scheme::for_each_permutation(m, |p| {
        out.push(p.iter().map(|&k| k + 1).collect());
        false
    });
    out
}

fn perm_name(p: &[usize]) -> String {
    let sep = if p.len() > 9 { "," } else { "" };
    p.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

/// The standard `A_n` matrix: 2 on the diagonal, −1 between neighbours.
pub fn type_a_matrix(n: usize) -> CartanMatrix {
    let mut m = IntMatrix::identity(n);
    for i in 0..n {
        m.set(i, i, 2);
        if i + 1 < n {
            m.set(i, i + 1, -1);
            m.set(i + 1, i, -1);
        }
    }
    CartanMatrix::from_trusted(m)
}

/// Builds the scheme whose objects are the left cosets `gH ⊂ S_{n+1}` with
/// `ρ_i(gH) = (i, i+1)·gH`, every object carrying the `A_n` matrix.
///
/// `generators` are permutations of `1..=n+1` in one-line notation. Each
/// coset is named by its lexicographically least element; objects are
/// sorted by name, so the coset `eH` comes first.
pub fn coset_scheme(n: usize, generators: &[Vec<usize>]) -> Result<CartanScheme, CosetError> {
    if n == 0 {
        return Err(CosetError::ZeroRank);
    }
    let m = n + 1;
    if let Some(bad) = generators.iter().find(|p| !is_permutation(p, m)) {
        return Err(CosetError::InvalidPermutation(bad.clone(), m));
    }
    let subgroup: Vec<Perm> = generated_subgroup(generators, m).into_iter().collect();

    // coset representative (least element) of every permutation
    let mut rep_of: BTreeMap<Perm, Perm> = BTreeMap::new();
    for g in all_permutations(m) {
        if rep_of.contains_key(&g) {
            continue;
        }
        let coset: Vec<Perm> = subgroup.iter().map(|h| compose(&g, h)).collect();
        let rep = coset.iter().min().expect("nonempty coset").clone();
        for x in coset {
            rep_of.insert(x, rep.clone());
        }
    }
    let reps: Vec<Perm> = rep_of.values().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let position: BTreeMap<&Perm, usize> = reps.iter().enumerate().map(|(k, r)| (r, k)).collect();

    let reflections: Vec<Vec<usize>> = (1..=n)
        .map(|i| {
            let mut s: Perm = (1..=m).collect();
            s.swap(i - 1, i);
            reps.iter().map(|g| position[&rep_of[&compose(&s, g)]]).collect()
        })
        .collect();
    let objects = reps.iter().map(|r| perm_name(r)).collect();
    Ok(CartanScheme::standard(type_a_matrix(n), objects, reflections).expect("coset action is involutive"))
}
