//! Property predicates over the vertex array, vertex stars, the Gale-braxial
//! classifier, periodic-cyclicity, and the structure-theorem report.

mod classify;
mod report;
mod theorems;

use std::collections::{BTreeMap, BTreeSet};

pub use classify::{classify_gale_braxial, Classification, ClassificationResult};
pub use report::{CheckOutcome, TheoremReport};
pub use theorems::{check_structure_theorems, structure_report};

use crate::comb::{edges_of, face_lattice, is_gale_subset, ridges, CombPolytope, Face, InducedFace};
use crate::error::{Error, Result};
use crate::families::{braxtope_facets, multiplex_facets};
use crate::realization::{hull_facet_family, Realization};

/// Every facet is a Gale subset of the vertex array.
pub fn is_gale_polytope(p: &CombPolytope) -> bool {
    p.facets()
        .iter()
        .all(|f| is_gale_subset(f, p.num_vertices()).unwrap_or(false))
}

/// Every facet has exactly `d` vertices.
pub fn is_simplicial(p: &CombPolytope) -> bool {
    p.is_simplicial()
}

/// Ridges of `p` grouped by facet, each mapped to the facet's local order.
fn local_ridge_families(p: &CombPolytope) -> Result<Vec<(InducedFace, Vec<Face>)>> {
    let mut per_facet: BTreeMap<usize, Vec<Face>> = BTreeMap::new();
    for r in ridges(p)? {
        for i in r.facets {
            per_facet.entry(i).or_default().push(r.face.clone());
        }
    }
    p.facets()
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let induced = InducedFace::new(f.clone());
            let mut local: Vec<Face> = per_facet
                .remove(&i)
                .unwrap_or_default()
                .iter()
                .map(|g| induced.localize(g).expect("ridge inside its facet"))
                .collect();
            local.sort();
            Ok((induced, local))
        })
        .collect()
}

fn every_facet_matches<F>(p: &CombPolytope, reference: F) -> bool
where
    F: Fn(usize, usize) -> Result<CombPolytope>,
{
    let Ok(families) = local_ridge_families(p) else {
        return false;
    };
    let e = p.dim().saturating_sub(1);
    families.iter().all(|(facet, local)| {
        reference(facet.last_local(), e).is_ok_and(|q| q.facets() == local.as_slice())
    })
}

/// Every facet, in its induced order, is a `(d-1)`-braxtope.
pub fn is_braxial(p: &CombPolytope) -> bool {
    p.dim() >= 1 && every_facet_matches(p, braxtope_facets)
}

/// Every facet, in its induced order, is a `(d-1)`-multiplex.
pub fn is_multiplicial(p: &CombPolytope) -> bool {
    p.dim() >= 1
        && every_facet_matches(p, |m, e| {
            if e <= 1 {
                if m == e {
                    Ok(CombPolytope::simplex(e))
                } else {
                    Err(Error::InvalidInput("low-dimensional multiplex is a simplex".into()))
                }
            } else {
                multiplex_facets(m + 1, e)
            }
        })
}

pub fn edge_set(p: &CombPolytope) -> Result<BTreeSet<Face>> {
    Ok(edges_of(&face_lattice(p)?))
}

/// Vertices joined to `i` by an edge; for `i ≥ 1` vertex 0 is left out.
pub fn vertex_star(p: &CombPolytope, i: usize) -> Result<BTreeSet<usize>> {
    star_from_edges(&edge_set(p)?, i)
}

pub(crate) fn star_from_edges(edges: &BTreeSet<Face>, i: usize) -> Result<BTreeSet<usize>> {
    Ok(edges
        .iter()
        .filter(|e| e.contains(i))
        .flat_map(|e| e.iter())
        .filter(|&j| j != i && (i == 0 || j != 0))
        .collect())
}

/// Whether the sub-realization on `range` is a cyclic polytope in its
/// induced vertex order: every point a vertex, simplicial, Gale.
fn window_is_cyclic(r: &Realization, range: std::ops::Range<usize>) -> Result<bool> {
    let w = r.window(range);
    let facets = hull_facet_family(&w)?;
    let d = w.dim();
    let covered: BTreeSet<usize> = facets.iter().flat_map(|f| f.iter()).collect();
    if covered.len() != w.len() {
        return Ok(false);
    }
    Ok(facets
        .iter()
        .all(|f| f.len() == d && is_gale_subset(f, w.len()).unwrap_or(false)))
}

fn check_period_range(r: &Realization, k: usize) -> Result<usize> {
    let n = r
        .len()
        .checked_sub(1)
        .ok_or_else(|| Error::InvalidInput("empty realization".into()))?;
    let d = r.dim();
    if k < d + 2 || k > n + 1 {
        return Err(Error::InvalidInput(format!(
            "period k={k} outside d+2={}..=n+1={}",
            d + 2,
            n + 1
        )));
    }
    Ok(n)
}

/// Every window of `k` consecutive points spans a cyclic polytope and no
/// window of `k + 1` consecutive points does. Cyclicity of a window is tested
/// in its induced order only.
pub fn is_periodically_cyclic(r: &Realization, k: usize) -> Result<bool> {
    Ok(periodicity_report(r, k)?.all_passed())
}

/// The per-window breakdown behind [`is_periodically_cyclic`].
pub fn periodicity_report(r: &Realization, k: usize) -> Result<TheoremReport> {
    let n = check_period_range(r, k)?;
    let mut report = TheoremReport::new();
    report.note("cyclicity of windows is tested in the induced vertex order only");

    let mut failing = None;
    for start in 0..=(n + 1 - k) {
        if !window_is_cyclic(r, start..start + k)? {
            failing = Some(start);
            break;
        }
    }
    report.push(
        format!("windows-of-{k}-cyclic"),
        failing.is_none(),
        failing.map(|s| format!("window {}..={} is not cyclic", s, s + k - 1)),
    );

    let mut cyclic_long = None;
    if k <= n {
        for start in 0..=(n - k) {
            if window_is_cyclic(r, start..start + k + 1)? {
                cyclic_long = Some(start);
                break;
            }
        }
    }
    report.push(
        format!("windows-of-{}-not-cyclic", k + 1),
        cyclic_long.is_none(),
        cyclic_long.map(|s| format!("window {}..={} is cyclic", s, s + k)),
    );
    Ok(report)
}

/// For every facet with induced array `y_0 < … < y_m`, each run
/// `y_t, …, y_{t+d-1}` of `d` consecutive facet vertices is affinely
/// independent.
pub fn facet_windows_affinely_independent(p: &CombPolytope, r: &Realization) -> bool {
    let d = p.dim();
    p.facets().iter().all(|f| {
        let v = f.vertices();
        v.len() < d
            || v.windows(d)
                .all(|w| r.affine_rank_of(&Face::from(w)) == d - 1)
    })
}
