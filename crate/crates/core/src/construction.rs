//! Incremental beneath/beyond construction of Gale-braxial polytopes.
//!
//! Starting from the cyclic polytope `P_{k-1}`, each step adds the vertex
//! `x_n`, placed in the affine hull of `x_0, x_{n-k+1}, x_{n-k+2}, x_{n-1}`.
//! Which facets `x_n` lies beyond, beneath, or in the hyperplane of is decided
//! purely by vertex membership, and the next facet family follows from the
//! beneath/beyond face rules:
//!
//! * a facet `x_n` is beneath survives unchanged;
//! * a facet whose hyperplane contains `x_n` gains `x_n`;
//! * a ridge between a beneath facet and a beyond facet, joined with `x_n`,
//!   becomes a new facet;
//! * beyond facets disappear.

use serde::{Deserialize, Serialize};

use crate::comb::{ridges, CombPolytope, Face};
use crate::error::{Error, Result};
use crate::families::cyclic_facets;

/// Position of the incoming vertex relative to one facet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PositionClass {
    Beyond,
    Beneath,
    InAffineHull,
}

/// Classifies facet `F` of `P_{n-1}` against the incoming vertex `x_n`:
///
/// * in the affine hull iff `{x_0, x_{n-k+1}, x_{n-k+2}, x_{n-1}} ⊆ F`;
/// * beyond iff `x_0, x_{n-1} ∈ F` and `x_{n-k+1} ∉ F`;
/// * beneath otherwise.
pub fn classify_position(facet: &Face, n: usize, k: usize) -> PositionClass {
    debug_assert!(n >= k, "incoming vertex {n} precedes period {k}");
    let first = n + 1 - k;
    let has = |v| facet.contains(v);
    if has(0) && has(first) && has(first + 1) && has(n - 1) {
        PositionClass::InAffineHull
    } else if has(0) && has(n - 1) && !has(first) {
        PositionClass::Beyond
    } else {
        PositionClass::Beneath
    }
}

/// The partition of the facets of `P_{n-1}` made when adding vertex `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub n: usize,
    pub beyond: Vec<Face>,
    pub beneath: Vec<Face>,
    pub affine: Vec<Face>,
}

impl Step {
    /// Reassembles `P_{n-1}` from the three groups.
    pub fn previous_polytope(&self, d: usize) -> Result<CombPolytope> {
        CombPolytope::new(
            d,
            self.n,
            self.beyond
                .iter()
                .chain(&self.beneath)
                .chain(&self.affine)
                .cloned(),
        )
    }

    pub fn class_of(&self, facet: &Face) -> Option<PositionClass> {
        if self.beyond.binary_search(facet).is_ok() {
            Some(PositionClass::Beyond)
        } else if self.beneath.binary_search(facet).is_ok() {
            Some(PositionClass::Beneath)
        } else if self.affine.binary_search(facet).is_ok() {
            Some(PositionClass::InAffineHull)
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionState {
    d: usize,
    k: usize,
    polytope: CombPolytope,
    log: Vec<Step>,
}

fn check_parameters(d: usize, k: usize) -> Result<()> {
    if d % 2 == 1 || d < 4 {
        return Err(Error::Unsupported(format!(
            "the construction needs even d >= 4, got d={d}"
        )));
    }
    if k < d + 2 {
        return Err(Error::InvalidInput(format!(
            "period k={k} must be at least d+2={}",
            d + 2
        )));
    }
    Ok(())
}

impl ConstructionState {
    /// `P_{k-1}`: the cyclic `d`-polytope on `k` vertices.
    pub fn initial(d: usize, k: usize) -> Result<Self> {
        check_parameters(d, k)?;
        Ok(ConstructionState {
            d,
            k,
            polytope: cyclic_facets(k, d)?,
            log: Vec::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn period(&self) -> usize {
        self.k
    }

    /// Index of the current last vertex.
    pub fn n(&self) -> usize {
        self.polytope.last_vertex()
    }

    pub fn polytope(&self) -> &CombPolytope {
        &self.polytope
    }

    pub fn log(&self) -> &[Step] {
        &self.log
    }

    /// The step that added vertex `n`, if it was added by the construction.
    pub fn step_adding(&self, n: usize) -> Option<&Step> {
        n.checked_sub(self.k)
            .and_then(|i| self.log.get(i))
            .filter(|s| s.n == n)
    }

    /// `P_j` for `k - 1 ≤ j ≤ n`, read back from the log.
    pub fn polytope_at(&self, j: usize) -> Option<CombPolytope> {
        if j == self.n() {
            return Some(self.polytope.clone());
        }
        self.step_adding(j + 1)
            .and_then(|s| s.previous_polytope(self.d).ok())
    }

    /// Adds the next vertex.
    pub fn extend(&self) -> Result<Self> {
        let n = self.n() + 1;
        let facets = self.polytope.facets();
        let classes: Vec<PositionClass> = facets
            .iter()
            .map(|f| classify_position(f, n, self.k))
            .collect();

        let mut step = Step {
            n,
            beyond: Vec::new(),
            beneath: Vec::new(),
            affine: Vec::new(),
        };
        for (f, class) in facets.iter().zip(&classes) {
            match class {
                PositionClass::Beyond => step.beyond.push(f.clone()),
                PositionClass::Beneath => step.beneath.push(f.clone()),
                PositionClass::InAffineHull => step.affine.push(f.clone()),
            }
        }
        if step.beyond.is_empty() || step.beneath.is_empty() {
            return Err(Error::DegenerateStep {
                vertex: n,
                beyond: step.beyond.len(),
                beneath: step.beneath.len(),
            });
        }

        let mut next: Vec<Face> = step.beneath.clone();
        next.extend(step.affine.iter().map(|f| f.with_vertex(n)));
        for ridge in ridges(&self.polytope)? {
            let [a, b] = ridge.facets;
            let horizon = matches!(
                (classes[a], classes[b]),
                (PositionClass::Beneath, PositionClass::Beyond)
                    | (PositionClass::Beyond, PositionClass::Beneath)
            );
            if horizon {
                next.push(ridge.face.with_vertex(n));
            }
        }

        let polytope = CombPolytope::new(self.d, n + 1, next)?;
        let mut log = self.log.clone();
        log.push(step);
        Ok(ConstructionState {
            d: self.d,
            k: self.k,
            polytope,
            log,
        })
    }

    /// Replays a recorded log and checks it against a fresh construction.
    ///
    /// An empty log carries no parameters, so the final polytope (the cyclic
    /// `P_{k-1}`) must be supplied in that case.
    pub fn from_log(log: &[Step], polytope: Option<&CombPolytope>) -> Result<Self> {
        let state = match log.first() {
            None => {
                let p = polytope.ok_or_else(|| {
                    Error::InvalidInput("an empty construction log needs the polytope".into())
                })?;
                ConstructionState::initial(p.dim(), p.num_vertices())?
            }
            Some(first) => {
                let d = first
                    .beyond
                    .iter()
                    .chain(&first.beneath)
                    .chain(&first.affine)
                    .map(Face::len)
                    .min()
                    .ok_or_else(|| Error::Parse("first step lists no facets".into()))?;
                let last = log.last().map(|s| s.n).unwrap_or(first.n);
                build(d, first.n, last)?
            }
        };
        if state.log != log {
            return Err(Error::InvalidInput(
                "log does not match the construction it claims to record".into(),
            ));
        }
        if let Some(p) = polytope {
            if *p != state.polytope {
                return Err(Error::InvalidInput(
                    "polytope does not match the construction log".into(),
                ));
            }
        }
        Ok(state)
    }
}

/// Builds `P_n` from the cyclic `P_{k-1}`.
pub fn build(d: usize, k: usize, n: usize) -> Result<ConstructionState> {
    check_parameters(d, k)?;
    if n + 1 < k {
        return Err(Error::InvalidInput(format!(
            "last vertex n={n} must be at least k-1={}",
            k - 1
        )));
    }
    let mut state = ConstructionState::initial(d, k)?;
    while state.n() < n {
        state = state.extend()?;
    }
    Ok(state)
}

/// Free-function form of [`ConstructionState::extend`].
pub fn extend(state: &ConstructionState) -> Result<ConstructionState> {
    state.extend()
}
