//! Face lattices by intersection closure of the facet family.
//!
//! Every nonempty proper face of a polytope is an intersection of facets,
//! so closing the facet family under intersection (and adding the empty
//! face and the polytope itself) recovers the whole lattice. Ranks come from
//! longest chains above the empty face; a facet family that does not yield a
//! graded lattice with ridges in exactly two facets is rejected.

use std::collections::{BTreeMap, BTreeSet};

use crate::comb::face::Face;
use crate::comb::polytope::CombPolytope;
use crate::error::{Error, Result};

/// All faces of a polytope grouped by dimension, with covering relations
/// between consecutive dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceLattice {
    dim: usize,
    // levels[r + 1] holds the faces of dimension r, for r = -1..=dim.
    levels: Vec<Vec<Face>>,
    // up[l][i] lists the indices in levels[l + 1] of faces covering levels[l][i].
    up: Vec<Vec<Vec<usize>>>,
}

impl FaceLattice {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Faces of dimension `rank` (`-1` is the empty face, `dim` the polytope).
    pub fn faces(&self, rank: isize) -> &[Face] {
        let idx = rank + 1;
        if idx < 0 || idx as usize >= self.levels.len() {
            return &[];
        }
        &self.levels[idx as usize]
    }

    /// `(f_0, …, f_{d-1})`.
    pub fn f_vector(&self) -> Vec<usize> {
        (0..self.dim as isize).map(|r| self.faces(r).len()).collect()
    }

    /// `Σ (-1)^i f_i` over `0 ≤ i < d`.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }

    pub fn rank_of(&self, face: &Face) -> Option<isize> {
        self.levels
            .iter()
            .position(|level| level.binary_search(face).is_ok())
            .map(|idx| idx as isize - 1)
    }

    pub fn contains(&self, face: &Face, rank: isize) -> bool {
        self.faces(rank).binary_search(face).is_ok()
    }

    /// Faces of dimension `rank + 1` covering `face`.
    pub fn covers(&self, face: &Face, rank: isize) -> Vec<&Face> {
        let idx = (rank + 1) as usize;
        match self.levels.get(idx).and_then(|l| l.binary_search(face).ok()) {
            Some(i) => self.up[idx][i]
                .iter()
                .map(|&j| &self.levels[idx + 1][j])
                .collect(),
            None => Vec::new(),
        }
    }

    pub fn num_faces(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }
}

/// Builds the face lattice of `p`, failing with [`Error::NotPolytopal`] when
/// the facet family cannot come from a polytope.
pub fn face_lattice(p: &CombPolytope) -> Result<FaceLattice> {
    let d = p.dim();
    let top = Face::range(0, p.num_vertices());

    let mut all: BTreeSet<Face> = p.facets().iter().cloned().collect();
    let mut frontier: Vec<Face> = p.facets().to_vec();
    while let Some(g) = frontier.pop() {
        for f in p.facets() {
            let h = g.intersection(f);
            if !all.contains(&h) {
                all.insert(h.clone());
                frontier.push(h);
            }
        }
    }
    all.insert(Face::empty());
    all.insert(top.clone());

    let mut by_size: Vec<Face> = all.into_iter().collect();
    by_size.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let index: BTreeMap<&Face, usize> = by_size.iter().enumerate().map(|(i, f)| (f, i)).collect();

    // Covers of g are the minimal closures of g + v.
    let mut covers: Vec<Vec<usize>> = vec![Vec::new(); by_size.len()];
    for (gi, g) in by_size.iter().enumerate() {
        if *g == top {
            continue;
        }
        let mut cands: BTreeSet<usize> = BTreeSet::new();
        for v in 0..p.num_vertices() {
            if g.contains(v) {
                continue;
            }
            let h = p.closure(&g.with_vertex(v));
            let hi = *index.get(&h).ok_or_else(|| {
                Error::NotPolytopal(format!("closure {h} missing from intersection family"))
            })?;
            cands.insert(hi);
        }
        let minimal: Vec<usize> = cands
            .iter()
            .copied()
            .filter(|&a| {
                !cands
                    .iter()
                    .any(|&b| b != a && by_size[b].is_strict_subset(&by_size[a]))
            })
            .collect();
        covers[gi] = minimal;
    }

    let mut rank: Vec<isize> = vec![isize::MIN; by_size.len()];
    rank[0] = -1;
    for gi in 0..by_size.len() {
        let r = rank[gi];
        for &hi in &covers[gi] {
            rank[hi] = rank[hi].max(r + 1);
        }
    }
    for (gi, g) in by_size.iter().enumerate() {
        for &hi in &covers[gi] {
            if rank[hi] != rank[gi] + 1 {
                return Err(Error::NotPolytopal(format!(
                    "lattice not graded: {} (rank {}) covers {} (rank {})",
                    by_size[hi], rank[hi], g, rank[gi]
                )));
            }
        }
    }
    let top_rank = rank[index[&top]];
    if top_rank != d as isize {
        return Err(Error::NotPolytopal(format!(
            "lattice has rank {top_rank}, expected {d}"
        )));
    }

    let mut levels: Vec<Vec<Face>> = vec![Vec::new(); d + 2];
    for (gi, g) in by_size.iter().enumerate() {
        levels[(rank[gi] + 1) as usize].push(g.clone());
    }
    for level in &mut levels {
        level.sort();
    }
    let expected_vertices: Vec<Face> = (0..p.num_vertices()).map(|v| Face::from([v])).collect();
    if d > 0 && levels[1] != expected_vertices {
        return Err(Error::NotPolytopal(
            "rank-0 faces are not exactly the vertices".into(),
        ));
    }
    if d >= 1 {
        for ridge in &levels[d - 1] {
            let count = p.facets_containing(ridge).count();
            if count != 2 {
                return Err(Error::NotPolytopal(format!(
                    "ridge {ridge} lies in {count} facets"
                )));
            }
        }
    }

    let mut up: Vec<Vec<Vec<usize>>> = levels.iter().map(|l| vec![Vec::new(); l.len()]).collect();
    for (gi, g) in by_size.iter().enumerate() {
        let l = (rank[gi] + 1) as usize;
        let i = levels[l].binary_search(g).expect("face placed at its rank");
        let mut ups: Vec<usize> = covers[gi]
            .iter()
            .map(|&hi| {
                levels[l + 1]
                    .binary_search(&by_size[hi])
                    .expect("cover placed at next rank")
            })
            .collect();
        ups.sort_unstable();
        up[l][i] = ups;
    }

    Ok(FaceLattice { dim: d, levels, up })
}

/// A ridge together with the two facets (indices into `facets()`) meeting
/// in it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Ridge {
    pub face: Face,
    pub facets: [usize; 2],
}

/// Ridges as the maximal pairwise facet intersections.
pub fn ridges(p: &CombPolytope) -> Result<Vec<Ridge>> {
    let facets = p.facets();
    let mut found: BTreeMap<Face, [usize; 2]> = BTreeMap::new();
    for (i, f) in facets.iter().enumerate() {
        let meets: BTreeSet<Face> = facets
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| f.intersection(g))
            .collect();
        for g in &meets {
            if meets.iter().any(|h| g.is_strict_subset(h)) || found.contains_key(g) {
                continue;
            }
            let holders: Vec<usize> = facets
                .iter()
                .enumerate()
                .filter(|(_, h)| g.is_subset(h))
                .map(|(j, _)| j)
                .collect();
            if holders.len() != 2 {
                return Err(Error::NotPolytopal(format!(
                    "ridge {g} lies in {} facets",
                    holders.len()
                )));
            }
            found.insert(g.clone(), [holders[0], holders[1]]);
        }
    }
    Ok(found
        .into_iter()
        .map(|(face, facets)| Ridge { face, facets })
        .collect())
}

/// Edges: the rank-1 faces.
pub fn edges_of(lattice: &FaceLattice) -> BTreeSet<Face> {
    lattice.faces(1).iter().cloned().collect()
}
