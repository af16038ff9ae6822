//! Exact rational realizations: moment-curve points, a brute-force hull
//! oracle, beneath/beyond tests, and placement of each construction point.

mod feasibility;
mod linalg;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

pub use feasibility::{solve_strict, solve_strict_with, Method, StrictInequality};
pub use linalg::{Hyperplane, Rational};

use crate::comb::{CombPolytope, Face};
use crate::construction::{classify_position, ConstructionState, PositionClass};
use crate::error::{Error, Result};
use crate::families::k_subsets;

/// A point with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPoint {
    coords: Vec<Rational>,
}

impl RationalPoint {
    pub fn new(coords: Vec<Rational>) -> Self {
        RationalPoint { coords }
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        RationalPoint::new(
            coords
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    fn sub(&self, other: &RationalPoint) -> Vec<Rational> {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect()
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Points aligned with the vertex array: `points[i]` realizes vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    dim: usize,
    points: Vec<RationalPoint>,
}

impl Realization {
    pub fn new(dim: usize, points: Vec<RationalPoint>) -> Result<Self> {
        if let Some((i, p)) = points.iter().enumerate().find(|(_, p)| p.dim() != dim) {
            return Err(Error::InvalidInput(format!(
                "point {i} has {} coordinates, expected {dim}",
                p.dim()
            )));
        }
        let distinct: BTreeSet<&RationalPoint> = points.iter().collect();
        if distinct.len() != points.len() {
            return Err(Error::InvalidInput("duplicate points".into()));
        }
        Ok(Realization { dim, points })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[RationalPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The sub-realization on the vertices `range`, renumbered from 0.
    pub fn window(&self, range: std::ops::Range<usize>) -> Realization {
        Realization {
            dim: self.dim,
            points: self.points[range].to_vec(),
        }
    }

    pub fn push(&mut self, p: RationalPoint) -> Result<()> {
        if p.dim() != self.dim {
            return Err(Error::InvalidInput("point dimension mismatch".into()));
        }
        if self.points.contains(&p) {
            return Err(Error::InvalidInput(format!("duplicate point {p}")));
        }
        self.points.push(p);
        Ok(())
    }

    pub fn centroid(&self) -> RationalPoint {
        let n = Rational::from_integer(BigInt::from(self.points.len()));
        let mut sum = vec![Rational::zero(); self.dim];
        for p in &self.points {
            for (s, c) in sum.iter_mut().zip(&p.coords) {
                *s += c;
            }
        }
        RationalPoint::new(sum.into_iter().map(|s| s / &n).collect())
    }

    fn coords_of(&self, face: &Face) -> Vec<&[Rational]> {
        face.iter().map(|v| self.points[v].coords()).collect()
    }

    /// The hyperplane spanned by `face`, oriented so `inside` is negative.
    pub fn facet_hyperplane(&self, face: &Face, inside: &RationalPoint) -> Result<Hyperplane> {
        Hyperplane::through(&self.coords_of(face), self.dim)
            .ok_or_else(|| Error::Degenerate(format!("{face} does not span a hyperplane")))?
            .oriented_away_from(inside.coords())
            .ok_or_else(|| Error::Degenerate(format!("reference point lies on the hyperplane of {face}")))
    }

    /// Affine rank of the vertices in `face`.
    pub fn affine_rank_of(&self, face: &Face) -> usize {
        linalg::affine_rank(&self.coords_of(face))
    }
}

/// Points `(t, t², …, t^d)` for `t = 0, 1, …, num_vertices - 1`.
pub fn moment_points(num_vertices: usize, d: usize) -> Realization {
    let points = (0..num_vertices)
        .map(|t| {
            let t = BigInt::from(t);
            let mut coords = Vec::with_capacity(d);
            let mut acc = t.clone();
            for _ in 0..d {
                coords.push(Rational::from_integer(acc.clone()));
                acc *= &t;
            }
            RationalPoint::new(coords)
        })
        .collect();
    Realization {
        dim: d,
        points,
    }
}

/// Facets of the convex hull by brute force over `d`-subsets: a spanning
/// subset whose hyperplane leaves every other point strictly on one side
/// yields the facet made of all points on that hyperplane.
pub fn hull_facets(r: &Realization) -> Result<CombPolytope> {
    CombPolytope::new(r.dim(), r.len(), hull_facet_family(r)?)
}

/// The vertex sets of the hull's facets, without requiring every point to be
/// a vertex.
pub fn hull_facet_family(r: &Realization) -> Result<BTreeSet<Face>> {
    let d = r.dim();
    let n = r.len();
    let all: Vec<&[Rational]> = r.points.iter().map(|p| p.coords()).collect();
    if n < d + 1 || linalg::affine_rank(&all) < d {
        return Err(Error::Degenerate(format!(
            "{n} points do not span {d}-space"
        )));
    }
    let mut facets: BTreeSet<Face> = BTreeSet::new();
    for subset in k_subsets(n, d) {
        if facets.iter().any(|f| subset.is_subset(f)) {
            continue;
        }
        let Some(h) = Hyperplane::through(&r.coords_of(&subset), d) else {
            continue;
        };
        let mut pos = false;
        let mut neg = false;
        let mut on = Vec::new();
        for (i, p) in all.iter().enumerate() {
            let v = h.eval(p);
            if v.is_zero() {
                on.push(i);
            } else if v.is_positive() {
                pos = true;
            } else {
                neg = true;
            }
            if pos && neg {
                break;
            }
        }
        if !(pos && neg) {
            facets.insert(Face::from_unsorted(on));
        }
    }
    Ok(facets)
}

/// Position of a query point relative to a facet hyperplane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Beyond,
    Beneath,
    On,
}

impl From<Side> for PositionClass {
    fn from(s: Side) -> Self {
        match s {
            Side::Beyond => PositionClass::Beyond,
            Side::Beneath => PositionClass::Beneath,
            Side::On => PositionClass::InAffineHull,
        }
    }
}

fn side_from(h: &Hyperplane, query: &RationalPoint) -> Side {
    let v = h.eval(query.coords());
    if v.is_zero() {
        Side::On
    } else if v.is_positive() {
        Side::Beyond
    } else {
        Side::Beneath
    }
}

/// Side of `query` relative to the hyperplane through `facet_points`, with
/// `reference_interior` counted as beneath.
pub fn side_of(
    facet_points: &[RationalPoint],
    reference_interior: &RationalPoint,
    query: &RationalPoint,
) -> Result<Side> {
    let dim = reference_interior.dim();
    let coords: Vec<&[Rational]> = facet_points.iter().map(|p| p.coords()).collect();
    let h = Hyperplane::through(&coords, dim)
        .ok_or_else(|| Error::Degenerate("facet points do not span a hyperplane".into()))?
        .oriented_away_from(reference_interior.coords())
        .ok_or_else(|| Error::Degenerate("reference point lies on the facet hyperplane".into()))?;
    Ok(side_from(&h, query))
}

/// Places `x_n` in the affine hull of `x_0, x_{n-k+1}, x_{n-k+2}, x_{n-1}` so
/// that it is beyond exactly the facets classified beyond and beneath exactly
/// those classified beneath.
pub fn realize_next_point(
    r: &Realization,
    n: usize,
    k: usize,
    facets: &CombPolytope,
) -> Result<RationalPoint> {
    if r.len() != n || facets.num_vertices() != n {
        return Err(Error::InvalidInput(format!(
            "realization has {} points and polytope {} vertices, expected {n}",
            r.len(),
            facets.num_vertices()
        )));
    }
    if n < k || k < 3 {
        return Err(Error::InvalidInput(format!("need n >= k >= 3 (n={n}, k={k})")));
    }
    let base = &r.points[0];
    let spans = [
        r.points[n + 1 - k].sub(base),
        r.points[n + 2 - k].sub(base),
        r.points[n - 1].sub(base),
    ];
    let inside = r.centroid();

    let mut system = Vec::new();
    let mut planes = Vec::with_capacity(facets.num_facets());
    for f in facets.facets() {
        let class = classify_position(f, n, k);
        let h = r.facet_hyperplane(f, &inside)?;
        let sign = match class {
            PositionClass::Beyond => Rational::from_integer(1.into()),
            PositionClass::Beneath => Rational::from_integer((-1).into()),
            PositionClass::InAffineHull => {
                planes.push((h, class));
                continue;
            }
        };
        let coef = spans.clone().map(|s| &sign * h.eval_linear(&s));
        system.push(StrictInequality::new(coef, &sign * h.eval(base.coords())));
        planes.push((h, class));
    }

    let [a, b, c] = solve_strict(&system)?;
    let point = RationalPoint::new(
        (0..r.dim())
            .map(|i| &base.coords[i] + &a * &spans[0][i] + &b * &spans[1][i] + &c * &spans[2][i])
            .collect(),
    );
    for ((h, class), f) in planes.iter().zip(facets.facets()) {
        let got: PositionClass = side_from(h, &point).into();
        if got != *class {
            return Err(Error::Infeasible(format!(
                "placed point is {got:?} facet {f}, expected {class:?}"
            )));
        }
    }
    Ok(point)
}

/// Realizes every polytope of a construction: moment-curve points for
/// `P_{k-1}`, then one placed point per step.
pub fn realize_construction(state: &ConstructionState) -> Result<Realization> {
    let d = state.dim();
    let k = state.period();
    let mut r = moment_points(k, d);
    for step in state.log() {
        let previous = step.previous_polytope(d)?;
        let x = realize_next_point(&r, step.n, k, &previous)?;
        r.push(x)?;
    }
    let hull = hull_facets(&r)?;
    if hull != *state.polytope() {
        return Err(Error::Infeasible(
            "realized hull differs from the constructed facet family".into(),
        ));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::build;
    use crate::families::cyclic_facets;

    #[test]
    fn moment_curve_coordinates() {
        let r = moment_points(4, 2);
        let want: Vec<RationalPoint> = [[0, 0], [1, 1], [2, 4], [3, 9]]
            .iter()
            .map(|p| RationalPoint::from_integers(p))
            .collect();
        assert_eq!(r.points(), &want[..]);
        let r = moment_points(3, 3);
        assert_eq!(r.points()[2], RationalPoint::from_integers(&[2, 4, 8]));
    }

    #[test]
    fn hull_of_plane_quadrilateral() {
        let hull = hull_facets(&moment_points(4, 2)).unwrap();
        let want: Vec<Face> = vec![[0, 1].into(), [0, 3].into(), [1, 2].into(), [2, 3].into()];
        assert_eq!(hull.facets(), &want[..]);
    }

    #[test]
    fn hull_matches_gale_evenness() {
        assert_eq!(hull_facets(&moment_points(6, 4)).unwrap(), cyclic_facets(6, 4).unwrap());
        assert_eq!(hull_facets(&moment_points(8, 6)).unwrap().num_facets(), 16);
    }

    #[test]
    fn hull_of_square_has_non_simplicial_facet() {
        // Square pyramid: the base is one facet with four vertices.
        let pts = [[0, 0, 0], [1, 0, 0], [1, 1, 0], [0, 1, 0], [0, 0, 1]]
            .iter()
            .map(|p| RationalPoint::from_integers(p))
            .collect();
        let hull = hull_facets(&Realization::new(3, pts).unwrap()).unwrap();
        assert_eq!(hull.num_facets(), 5);
        assert!(hull.has_facet(&Face::from([0, 1, 2, 3])));
    }

    #[test]
    fn hull_errors() {
        let flat = [[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0]]
            .iter()
            .map(|p| RationalPoint::from_integers(p))
            .collect();
        let r = Realization::new(3, flat).unwrap();
        assert!(matches!(hull_facets(&r), Err(Error::Degenerate(_))));
        let dup = vec![RationalPoint::from_integers(&[1, 2]); 2];
        assert!(matches!(Realization::new(2, dup), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn side_of_basics() {
        let r = moment_points(8, 6);
        let c = r.centroid();
        let facet: Vec<RationalPoint> = [0, 3, 4, 5, 6, 7].iter().map(|&i| r.points()[i].clone()).collect();
        assert_eq!(side_of(&facet, &c, &r.points()[3]).unwrap(), Side::On);
        assert_eq!(side_of(&facet, &c, &c).unwrap(), Side::Beneath);
        assert_eq!(side_of(&facet, &c, &r.points()[1]).unwrap(), Side::Beneath);
        assert!(matches!(
            side_of(&facet[..3], &c, &c),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn first_construction_point() {
        let s = build(6, 8, 8).unwrap();
        let r = realize_construction(&s).unwrap();
        let x8 = &r.points()[8];
        let prefix = r.window(0..8);
        let facet: Vec<RationalPoint> = [0, 3, 4, 5, 6, 7].iter().map(|&i| r.points()[i].clone()).collect();
        assert_eq!(side_of(&facet, &prefix.centroid(), x8).unwrap(), Side::Beyond);
        // x_8 lies in the affine hull of x_0, x_1, x_2, x_7.
        let span = Face::from([0, 1, 2, 7, 8]);
        assert_eq!(r.affine_rank_of(&span), 3);
    }

    #[test]
    fn realization_without_steps() {
        let s = build(6, 8, 7).unwrap();
        assert_eq!(realize_construction(&s).unwrap(), moment_points(8, 6));
    }
}
