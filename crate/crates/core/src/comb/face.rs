use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A set of vertex indices, stored strictly increasing.
///
/// Faces are compared lexicographically on their sorted indices, which is
/// the order facet families are canonicalized in.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Face(Vec<usize>);

impl Face {
    pub fn empty() -> Self {
        Face(Vec::new())
    }

    /// Builds a face from indices that must already be strictly increasing.
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput(format!(
                "face {vertices:?} is not strictly increasing"
            )));
        }
        Ok(Face(vertices))
    }

    /// Builds a face from arbitrary indices, sorting and dropping repeats.
    pub fn from_unsorted<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        let mut v: Vec<usize> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Face(v)
    }

    /// The contiguous run `start..end`.
    pub fn range(start: usize, end: usize) -> Self {
        Face((start..end).collect())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, vertex: usize) -> bool {
        self.0.binary_search(&vertex).is_ok()
    }

    pub fn max_vertex(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        if self.0.len() > other.0.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                if w == v {
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn is_strict_subset(&self, other: &Face) -> bool {
        self.0.len() < other.0.len() && self.is_subset(other)
    }

    pub fn intersection(&self, other: &Face) -> Face {
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::with_capacity(self.0.len().min(other.0.len()));
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        Face(out)
    }

    pub fn union(&self, other: &Face) -> Face {
        Face::from_unsorted(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn with_vertex(&self, vertex: usize) -> Face {
        let mut v = self.0.clone();
        if let Err(pos) = v.binary_search(&vertex) {
            v.insert(pos, vertex);
        }
        Face(v)
    }

    pub fn without_vertex(&self, vertex: usize) -> Face {
        Face(self.0.iter().copied().filter(|&v| v != vertex).collect())
    }

    /// Applies `i ↦ num_vertices - 1 - i` to every index.
    pub fn reversed(&self, num_vertices: usize) -> Face {
        Face::from_unsorted(self.0.iter().map(|&v| num_vertices - 1 - v))
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }
}

impl<'de> Deserialize<'de> for Face {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(deserializer)?;
        Face::new(v).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl From<&[usize]> for Face {
    fn from(v: &[usize]) -> Self {
        Face::from_unsorted(v.iter().copied())
    }
}

impl<const N: usize> From<[usize; N]> for Face {
    fn from(v: [usize; N]) -> Self {
        Face::from_unsorted(v)
    }
}

/// A face viewed through its own induced vertex array: the global vertex
/// `global[i]` is local vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedFace {
    global: Face,
}

impl InducedFace {
    pub fn new(global: Face) -> Self {
        InducedFace { global }
    }

    pub fn global(&self) -> &Face {
        &self.global
    }

    /// Index `m` of the last local vertex.
    pub fn last_local(&self) -> usize {
        self.global.len().saturating_sub(1)
    }

    pub fn local_of(&self, vertex: usize) -> Option<usize> {
        self.global.0.binary_search(&vertex).ok()
    }

    pub fn global_of(&self, local: usize) -> Option<usize> {
        self.global.0.get(local).copied()
    }

    /// Maps a subface given in global indices to local positions.
    pub fn localize(&self, sub: &Face) -> Option<Face> {
        sub.iter()
            .map(|v| self.local_of(v))
            .collect::<Option<Vec<_>>>()
            .map(Face)
    }

    /// Maps a face given in local positions back to global indices.
    pub fn globalize(&self, local: &Face) -> Option<Face> {
        local
            .iter()
            .map(|i| self.global_of(i))
            .collect::<Option<Vec<_>>>()
            .map(Face)
    }
}

/// Gale's evenness test: every two indices of `0..num_vertices` outside
/// `subset` are separated by an even number of members of `subset`.
pub fn is_gale_subset(subset: &Face, num_vertices: usize) -> Result<bool> {
    if let Some(max) = subset.max_vertex() {
        if max >= num_vertices {
            return Err(Error::InvalidInput(format!(
                "vertex {max} out of range for {num_vertices} vertices"
            )));
        }
    }
    // Checking consecutive outside indices suffices: gaps add up.
    let mut between = 0usize;
    let mut seen_outside = false;
    for v in 0..num_vertices {
        if subset.contains(v) {
            between += 1;
        } else {
            if seen_outside && between % 2 == 1 {
                return Ok(false);
            }
            seen_outside = true;
            between = 0;
        }
    }
    Ok(true)
}

/// Whether `subset` is a disjoint union of pairs `{i, i+1}`.
pub fn is_paired_set(subset: &Face) -> bool {
    let v = subset.vertices();
    if v.len() % 2 == 1 {
        return false;
    }
    v.chunks(2).all(|pair| pair[1] == pair[0] + 1)
}
