//! Closed-form facet families: cyclic polytopes via Gale's evenness
//! condition, braxtopes, and multiplexes.
//!
//! The braxtope and multiplex formulas index vertices outside `0..=n`; those
//! indices are clamped to the first or last vertex. Clamping can repeat a
//! vertex inside a face (collapsed by set semantics), repeat a whole face
//! (collapsed), or produce a face contained in another one (dropped).

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::comb::{is_gale_subset, CombPolytope, Face};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Cyclic,
    Braxtope,
    Multiplex,
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cyclic" => Ok(Family::Cyclic),
            "braxtope" => Ok(Family::Braxtope),
            "multiplex" => Ok(Family::Multiplex),
            other => Err(Error::InvalidInput(format!("unknown family {other:?}"))),
        }
    }
}

/// A family together with its dimension and vertex count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub dim: usize,
    pub num_vertices: usize,
}

impl FamilySpec {
    pub fn new(family: Family, dim: usize, num_vertices: usize) -> Result<Self> {
        if num_vertices < dim + 1 {
            return Err(Error::InvalidInput(format!(
                "{family:?} of dimension {dim} needs at least {} vertices",
                dim + 1
            )));
        }
        Ok(FamilySpec {
            family,
            dim,
            num_vertices,
        })
    }

    pub fn generate(&self) -> Result<CombPolytope> {
        match self.family {
            Family::Cyclic => cyclic_facets(self.num_vertices, self.dim),
            Family::Multiplex => multiplex_facets(self.num_vertices, self.dim),
            Family::Braxtope => braxtope_facets(self.num_vertices - 1, self.dim),
        }
    }
}

fn clamp(t: isize, last: usize) -> usize {
    t.clamp(0, last as isize) as usize
}

/// Removes faces strictly contained in another face of the family.
fn drop_dominated(faces: BTreeSet<Face>) -> Vec<Face> {
    faces
        .iter()
        .filter(|f| !faces.iter().any(|g| f.is_strict_subset(g)))
        .cloned()
        .collect()
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn k_subsets(n: usize, k: usize) -> Vec<Face> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(Face::from_unsorted(idx.iter().copied()));
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// The cyclic `d`-polytope on `num_vertices` vertices: every `d`-subset
/// satisfying Gale's evenness condition is a facet.
pub fn cyclic_facets(num_vertices: usize, d: usize) -> Result<CombPolytope> {
    if d < 2 || num_vertices < d + 1 {
        return Err(Error::InvalidInput(format!(
            "cyclic polytope needs d >= 2 and at least d+1 vertices (d={d}, vertices={num_vertices})"
        )));
    }
    let mut facets = Vec::new();
    for f in k_subsets(num_vertices, d) {
        if is_gale_subset(&f, num_vertices)? {
            facets.push(f);
        }
    }
    CombPolytope::new(d, num_vertices, facets)
}

/// The `e`-braxtope on vertices `0..=m`.
///
/// For `e ≤ 2` a braxtope is a simplex, so `m` must equal `e` there.
pub fn braxtope_facets(m: usize, e: usize) -> Result<CombPolytope> {
    if m < e {
        return Err(Error::InvalidInput(format!(
            "braxtope needs m >= e (m={m}, e={e})"
        )));
    }
    if m == e {
        return Ok(CombPolytope::simplex(e));
    }
    if e <= 2 {
        return Err(Error::InvalidInput(format!(
            "an {e}-braxtope is a simplex and has exactly {} vertices, not {}",
            e + 1,
            m + 1
        )));
    }
    let (mi, ei) = (m as isize, e as isize);
    let mut faces = BTreeSet::new();
    for i in 0..=(mi - ei + 1) {
        faces.insert(Face::from_unsorted((i..i + ei).map(|t| clamp(t, m))));
    }
    for j in 2..=mi {
        let left = (j - ei + 2)..j;
        let right = (j + 1)..=(j + ei - 2);
        faces.insert(Face::from_unsorted(
            std::iter::once(0)
                .chain(left.map(|t| clamp(t, m)))
                .chain(right.map(|t| clamp(t, m))),
        ));
    }
    CombPolytope::new(e, m + 1, drop_dominated(faces))
}

/// Edges of the `e`-braxtope on `0..=m`, read off the closed-form adjacency
/// rules rather than from the face lattice.
pub fn braxtope_edges(m: usize, e: usize) -> Result<BTreeSet<Face>> {
    if e < 3 || m < e {
        return Err(Error::InvalidInput(format!(
            "braxtope edge rules need m >= e >= 3 (m={m}, e={e})"
        )));
    }
    let (mi, ei) = (m as isize, e as isize);
    let mut edges = BTreeSet::new();
    let mut add = |a: usize, b: usize| {
        if a != b {
            edges.insert(Face::from([a, b]));
        }
    };
    // y_0 sees every vertex.
    for t in 1..=m {
        add(0, t);
    }
    // y_1 sees y_0, y_2, …, y_e.
    for t in 2..=e.min(m) {
        add(1, t);
    }
    // y_m sees y_0 and y_{m-e+1}, …, y_{m-1}.
    for t in (mi - ei + 1)..mi {
        add(clamp(t, m), m);
    }
    // y_s, 2 ≤ s ≤ m-1, sees y_0 and y_{s-e+1}, …, y_{s+e-1}.
    for s in 2..mi {
        for t in (s - ei + 1)..=(s + ei - 1) {
            if t != s {
                add(s as usize, clamp(t, m));
            }
        }
    }
    Ok(edges)
}

/// The `d`-multiplex on `num_vertices` vertices: facet `i` drops `x_i` from
/// the window `x_{i-d+1}, …, x_{i+d-1}`.
pub fn multiplex_facets(num_vertices: usize, d: usize) -> Result<CombPolytope> {
    if d < 2 || num_vertices < d + 1 {
        return Err(Error::InvalidInput(format!(
            "multiplex needs d >= 2 and at least d+1 vertices (d={d}, vertices={num_vertices})"
        )));
    }
    let n = num_vertices - 1;
    let di = d as isize;
    let mut faces = BTreeSet::new();
    for i in 0..=(n as isize) {
        let left = (i - di + 1)..i;
        let right = (i + 1)..=(i + di - 1);
        faces.insert(Face::from_unsorted(
            left.chain(right).map(|t| clamp(t, n)),
        ));
    }
    CombPolytope::new(d, num_vertices, drop_dominated(faces))
}
