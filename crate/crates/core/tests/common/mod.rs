//! A second hull oracle that shares nothing with the library's elimination
//! code: orientations come from cofactor-expanded determinants.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use galebrax::realization::Realization;
use galebrax::Face;

fn det(m: &[Vec<BigRational>]) -> BigRational {
    match m.len() {
        0 => BigRational::from_integer(1.into()),
        1 => m[0][0].clone(),
        n => {
            let mut acc = BigRational::zero();
            for col in 0..n {
                if m[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<BigRational>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(j, _)| j != col)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][col] * det(&minor);
                if col % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}

/// Sign of the orientation of `base ∪ {q}` (|base| = d).
fn orientation(r: &Realization, base: &[usize], q: usize) -> i32 {
    let pts = r.points();
    let origin = pts[base[0]].coords();
    let rows: Vec<Vec<BigRational>> = base[1..]
        .iter()
        .chain(std::iter::once(&q))
        .map(|&i| {
            pts[i]
                .coords()
                .iter()
                .zip(origin)
                .map(|(a, b)| a - b)
                .collect()
        })
        .collect();
    let v = det(&rows);
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Facet vertex sets of the hull of a full-dimensional point set.
pub fn oracle_facets(r: &Realization) -> BTreeSet<Face> {
    let d = r.dim();
    let n = r.len();
    let mut facets = BTreeSet::new();
    for base in subsets(n, d) {
        let signs: Vec<(usize, i32)> = (0..n)
            .filter(|q| !base.contains(q))
            .map(|q| (q, orientation(r, &base, q)))
            .collect();
        let pos = signs.iter().any(|&(_, s)| s > 0);
        let neg = signs.iter().any(|&(_, s)| s < 0);
        if pos != neg {
            let on = signs.iter().filter(|&&(_, s)| s == 0).map(|&(q, _)| q);
            facets.insert(Face::from_unsorted(base.iter().copied().chain(on)));
        }
    }
    facets
}
