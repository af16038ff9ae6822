use std::collections::BTreeSet;

use crate::comb::face::Face;
use crate::error::{Error, Result};

/// A polytope given by its dimension and its facet family over the fixed
/// vertex array `0 < 1 < … < num_vertices - 1`.
///
/// The facet family is kept canonical (sorted, duplicate-free), so two
/// values are equal exactly when their facet families coincide as sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CombPolytope {
    dim: usize,
    num_vertices: usize,
    facets: Vec<Face>,
}

impl CombPolytope {
    /// Validates and canonicalizes a facet family.
    ///
    /// Dimension 0 is accepted only as the single point, whose facet family
    /// is `{∅}`; dimension 1 covers segments, which arise as facets of
    /// polygons.
    pub fn new<I: IntoIterator<Item = Face>>(
        dim: usize,
        num_vertices: usize,
        facets: I,
    ) -> Result<Self> {
        let facets: Vec<Face> = facets
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if dim == 0 {
            if num_vertices == 1 && facets == [Face::empty()] {
                return Ok(CombPolytope {
                    dim,
                    num_vertices,
                    facets,
                });
            }
            return Err(Error::InvalidInput(
                "a 0-polytope is a single vertex with facet family {∅}".into(),
            ));
        }
        if num_vertices < dim + 1 {
            return Err(Error::InvalidInput(format!(
                "a {dim}-polytope needs at least {} vertices, got {num_vertices}",
                dim + 1
            )));
        }
        if facets.len() < dim + 1 {
            return Err(Error::InvalidInput(format!(
                "a {dim}-polytope needs at least {} facets, got {}",
                dim + 1,
                facets.len()
            )));
        }
        let mut seen = vec![false; num_vertices];
        for f in &facets {
            if f.len() < dim {
                return Err(Error::InvalidInput(format!(
                    "facet {f} has fewer than {dim} vertices"
                )));
            }
            for v in f.iter() {
                if v >= num_vertices {
                    return Err(Error::InvalidInput(format!(
                        "facet {f} references vertex {v} >= {num_vertices}"
                    )));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidInput(format!("vertex {v} lies in no facet")));
        }
        for (i, a) in facets.iter().enumerate() {
            for b in &facets[i + 1..] {
                if a.is_subset(b) || b.is_subset(a) {
                    return Err(Error::InvalidInput(format!(
                        "facet {a} and facet {b} are nested"
                    )));
                }
            }
        }
        Ok(CombPolytope {
            dim,
            num_vertices,
            facets,
        })
    }

    /// The `dim`-simplex on vertices `0..=dim`.
    pub fn simplex(dim: usize) -> Self {
        let all = Face::range(0, dim + 1);
        let facets: BTreeSet<Face> = (0..=dim).map(|i| all.without_vertex(i)).collect();
        CombPolytope {
            dim,
            num_vertices: dim + 1,
            facets: facets.into_iter().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    /// Largest vertex index `n`.
    pub fn last_vertex(&self) -> usize {
        self.num_vertices - 1
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn has_facet(&self, face: &Face) -> bool {
        self.facets.binary_search(face).is_ok()
    }

    pub fn facets_containing<'a>(&'a self, face: &'a Face) -> impl Iterator<Item = &'a Face> + 'a {
        self.facets.iter().filter(move |f| face.is_subset(f))
    }

    /// Intersection of all facets containing `set`, or the full vertex set
    /// when no facet contains it.
    pub fn closure(&self, set: &Face) -> Face {
        let mut acc: Option<Face> = None;
        for f in self.facets_containing(set) {
            acc = Some(match acc {
                None => f.clone(),
                Some(a) => a.intersection(f),
            });
        }
        acc.unwrap_or_else(|| Face::range(0, self.num_vertices))
    }

    pub fn is_simplicial(&self) -> bool {
        self.facets.iter().all(|f| f.len() == self.dim)
    }
}
