//! Exact solver for small systems of strict linear inequalities in three
//! unknowns.
//!
//! The closed region `{g_i ≥ 0}` is cut down to a box and its vertices are
//! enumerated from all triples of bounding planes; the barycenter of those
//! vertices is tried first. If it is not strictly feasible, the minimum
//! slack is maximized by an exact simplex with Bland's rule. A strictly
//! feasible answer is finally rounded to the coarsest dyadic grid on which
//! it stays strictly feasible, which keeps coordinates small over long
//! construction runs.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::linalg::Rational;
use crate::error::{Error, Result};

/// `coef · x + constant`, required to be strictly positive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct StrictInequality {
    pub coef: [Rational; 3],
    pub constant: Rational,
}

impl StrictInequality {
    pub fn new(coef: [Rational; 3], constant: Rational) -> Self {
        StrictInequality { coef, constant }
    }

    pub fn eval(&self, x: &[Rational; 3]) -> Rational {
        &self.coef[0] * &x[0] + &self.coef[1] * &x[1] + &self.coef[2] * &x[2] + &self.constant
    }

    pub fn holds(&self, x: &[Rational; 3]) -> bool {
        self.eval(x).is_positive()
    }

    /// Positive rescaling with the first nonzero coefficient at ±1.
    fn normalized(&self) -> Option<Self> {
        let lead = self.coef.iter().find(|c| !c.is_zero())?.abs();
        Some(StrictInequality {
            coef: [
                &self.coef[0] / &lead,
                &self.coef[1] / &lead,
                &self.coef[2] / &lead,
            ],
            constant: &self.constant / &lead,
        })
    }
}

/// Which stage produced the solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Barycenter,
    Simplex,
}

fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

const BOXES: [i64; 3] = [16, 1 << 12, 1 << 30];

/// Finds `x` with every inequality strictly positive.
pub fn solve_strict(system: &[StrictInequality]) -> Result<[Rational; 3]> {
    solve_strict_with(system).map(|(x, _)| x)
}

pub fn solve_strict_with(system: &[StrictInequality]) -> Result<([Rational; 3], Method)> {
    let mut reduced: BTreeSet<StrictInequality> = BTreeSet::new();
    for ineq in system {
        match ineq.normalized() {
            Some(n) => {
                reduced.insert(n);
            }
            None if ineq.constant.is_positive() => {}
            None => {
                return Err(Error::Infeasible(format!(
                    "constant inequality {} > 0 fails",
                    ineq.constant
                )))
            }
        }
    }
    let reduced: Vec<StrictInequality> = reduced.into_iter().collect();
    let feasible = |x: &[Rational; 3]| reduced.iter().all(|g| g.holds(x));

    for bound in BOXES {
        let b = int(bound);
        let found = box_vertex_barycenter(&reduced, &b)
            .filter(|x| feasible(x))
            .map(|x| (x, Method::Barycenter))
            .or_else(|| max_min_slack(&reduced, &b).map(|x| (x, Method::Simplex)));
        if let Some((x, method)) = found {
            debug_assert!(feasible(&x));
            return Ok((simplify(x, &feasible), method));
        }
    }
    Err(Error::Infeasible(format!(
        "no strictly feasible point among {} inequalities",
        reduced.len()
    )))
}

/// Solves a 3×3 system by Cramer's rule.
fn solve3(rows: [&[Rational; 3]; 3], rhs: [&Rational; 3]) -> Option<[Rational; 3]> {
    let det3 = |m: [[&Rational; 3]; 3]| -> Rational {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let a = |i: usize, j: usize| &rows[i][j];
    let base = [
        [a(0, 0), a(0, 1), a(0, 2)],
        [a(1, 0), a(1, 1), a(1, 2)],
        [a(2, 0), a(2, 1), a(2, 2)],
    ];
    let det = det3(base);
    if det.is_zero() {
        return None;
    }
    let mut out: [Rational; 3] = [Rational::zero(), Rational::zero(), Rational::zero()];
    for (col, slot) in out.iter_mut().enumerate() {
        let mut m = base;
        for r in 0..3 {
            m[r][col] = rhs[r];
        }
        *slot = det3(m) / &det;
    }
    Some(out)
}

/// Barycenter of the vertices of `{g ≥ 0} ∩ [-b, b]^3`, if that region is
/// nonempty.
fn box_vertex_barycenter(system: &[StrictInequality], b: &Rational) -> Option<[Rational; 3]> {
    let zero = Rational::zero();
    let one = Rational::one();
    let mut planes: Vec<([Rational; 3], Rational)> = system
        .iter()
        .map(|g| (g.coef.clone(), -g.constant.clone()))
        .collect();
    for axis in 0..3 {
        let mut e = [zero.clone(), zero.clone(), zero.clone()];
        e[axis] = one.clone();
        planes.push((e.clone(), b.clone()));
        planes.push((e, -b.clone()));
    }
    let inside = |x: &[Rational; 3]| {
        x.iter().all(|c| c.abs() <= *b) && system.iter().all(|g| !g.eval(x).is_negative())
    };
    let mut vertices: BTreeSet<[Rational; 3]> = BTreeSet::new();
    for i in 0..planes.len() {
        for j in i + 1..planes.len() {
            for k in j + 1..planes.len() {
                let rows = [&planes[i].0, &planes[j].0, &planes[k].0];
                let rhs = [&planes[i].1, &planes[j].1, &planes[k].1];
                if let Some(x) = solve3(rows, rhs) {
                    if inside(&x) {
                        vertices.insert(x);
                    }
                }
            }
        }
    }
    if vertices.is_empty() {
        return None;
    }
    let count = int(vertices.len() as i64);
    let mut sum = [zero.clone(), zero.clone(), zero];
    for v in &vertices {
        for c in 0..3 {
            sum[c] += &v[c];
        }
    }
    Some(sum.map(|s| s / &count))
}

/// Maximizes `t` subject to `g_i(x) ≥ t`, `|x_j| ≤ b`, `t ≤ 1` and returns
/// the maximizer when the optimum is positive.
///
/// Shifted variables `y = x + b ≥ 0` and `u = t + big ≥ 0` make the origin a
/// basic feasible solution, so a single simplex phase suffices.
fn max_min_slack(system: &[StrictInequality], b: &Rational) -> Option<[Rational; 3]> {
    let zero = Rational::zero();
    let one = Rational::one();
    // big ≥ b·Σcoef - constant for every row keeps all right-hand sides ≥ 0.
    let mut big = zero.clone();
    for g in system {
        let need = g.coef.iter().fold(zero.clone(), |acc, c| acc + c * b) - &g.constant;
        if need > big {
            big = need;
        }
    }
    big += &one;

    // Rows: a · (y, u) ≤ rhs. Columns: y0 y1 y2 u | slacks | rhs.
    let mut rows: Vec<(Vec<Rational>, Rational)> = Vec::new();
    for g in system {
        let rhs = &g.constant - g.coef.iter().fold(zero.clone(), |acc, c| acc + c * b) + &big;
        rows.push((
            vec![-g.coef[0].clone(), -g.coef[1].clone(), -g.coef[2].clone(), one.clone()],
            rhs,
        ));
    }
    for axis in 0..3 {
        let mut a = vec![zero.clone(); 4];
        a[axis] = one.clone();
        rows.push((a, b * int(2)));
    }
    rows.push((vec![zero.clone(), zero.clone(), zero.clone(), one.clone()], &big + &one));

    let m = rows.len();
    let width = 4 + m;
    let mut tab: Vec<Vec<Rational>> = rows
        .into_iter()
        .enumerate()
        .map(|(i, (a, rhs))| {
            let mut row = a;
            row.resize(width, zero.clone());
            row[4 + i] = one.clone();
            row.push(rhs);
            row
        })
        .collect();
    // Reduced costs for maximizing u: objective row holds -c.
    let mut obj = vec![zero.clone(); width + 1];
    obj[3] = -one.clone();
    let mut basis: Vec<usize> = (4..4 + m).collect();

    loop {
        // Bland: lowest-index column with negative reduced cost.
        let Some(enter) = (0..width).find(|&j| obj[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Rational)> = None;
        for (i, row) in tab.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[width] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // u ≤ big + 1 bounds the objective, so the program is never unbounded.
        let (r, _) = leave?;
        let inv = tab[r][enter].recip();
        for x in tab[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = tab[r].clone();
        for (i, row) in tab.iter_mut().enumerate() {
            if i != r && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for (x, p) in obj.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        basis[r] = enter;
    }

    let mut z = vec![zero.clone(); 4];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < 4 {
            z[bv] = tab[i][width].clone();
        }
    }
    let t = &z[3] - &big;
    if !t.is_positive() {
        return None;
    }
    Some([&z[0] - b, &z[1] - b, &z[2] - b])
}

/// Rounds to the coarsest grid `2^-j ℤ^3` that keeps `x` strictly feasible.
fn simplify(x: [Rational; 3], feasible: &dyn Fn(&[Rational; 3]) -> bool) -> [Rational; 3] {
    let mut scale = Rational::one();
    for _ in 0..=64 {
        let cand = x.clone().map(|c| (&c * &scale).round() / &scale);
        if feasible(&cand) {
            return cand;
        }
        scale *= int(2);
    }
    x
}
