use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// Gauss-Jordan elimination in place; returns the pivot columns.
pub(crate) fn row_reduce(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut().skip(c) {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                let (head, tail) = if i < r {
                    let (a, b) = m.split_at_mut(r);
                    (&mut a[i], &b[0])
                } else {
                    let (a, b) = m.split_at_mut(i);
                    (&mut b[0], &a[r])
                };
                for j in c..cols {
                    if !tail[j].is_zero() {
                        head[j] -= &factor * &tail[j];
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub(crate) fn rank(mut m: Vec<Vec<Rational>>) -> usize {
    row_reduce(&mut m).len()
}

/// Affine rank of a point set: the dimension of its affine hull.
pub(crate) fn affine_rank(points: &[&[Rational]]) -> usize {
    let Some((first, rest)) = points.split_first() else {
        return 0;
    };
    let diffs: Vec<Vec<Rational>> = rest
        .iter()
        .map(|p| p.iter().zip(first.iter()).map(|(a, b)| a - b).collect())
        .collect();
    rank(diffs)
}

pub(crate) fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// The hyperplane `{x : normal · x = offset}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperplane {
    normal: Vec<Rational>,
    offset: Rational,
}

impl Hyperplane {
    /// The unique hyperplane through `points`, if their affine hull has
    /// codimension one in `dim`-space.
    pub fn through(points: &[&[Rational]], dim: usize) -> Option<Hyperplane> {
        if points.len() < dim {
            return None;
        }
        let mut m: Vec<Vec<Rational>> = points
            .iter()
            .map(|p| {
                let mut row = p.to_vec();
                row.push(Rational::one());
                row
            })
            .collect();
        let pivots = row_reduce(&mut m);
        if pivots.len() != dim {
            return None;
        }
        let free = (0..=dim).find(|c| !pivots.contains(c))?;
        let mut v = vec![Rational::zero(); dim + 1];
        v[free] = Rational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[row][free].clone();
        }
        let constant = v.pop().expect("dim + 1 entries");
        if v.iter().all(Zero::is_zero) {
            return None;
        }
        Some(Hyperplane {
            normal: v,
            offset: -constant,
        })
    }

    pub fn normal(&self) -> &[Rational] {
        &self.normal
    }

    /// `normal · x - offset`.
    pub fn eval(&self, x: &[Rational]) -> Rational {
        dot(&self.normal, x) - &self.offset
    }

    /// `normal · x`, the linear part alone.
    pub fn eval_linear(&self, x: &[Rational]) -> Rational {
        dot(&self.normal, x)
    }

    /// Flips the orientation so that `inside` evaluates negative; `None` when
    /// `inside` lies on the hyperplane.
    pub fn oriented_away_from(mut self, inside: &[Rational]) -> Option<Hyperplane> {
        let v = self.eval(inside);
        if v.is_zero() {
            return None;
        }
        if v.is_positive() {
            for c in &mut self.normal {
                *c = -c.clone();
            }
            self.offset = -self.offset;
        }
        Some(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    fn pt(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(rank(vec![pt(&[1, 2]), pt(&[2, 4])]), 1);
        assert_eq!(rank(vec![pt(&[1, 2]), pt(&[2, 5])]), 2);
        assert_eq!(rank(vec![pt(&[0, 0, 0])]), 0);
    }

    #[test]
    fn affine_rank_of_collinear_points() {
        let a = pt(&[0, 0]);
        let b = pt(&[1, 1]);
        let c = pt(&[3, 3]);
        let d = pt(&[1, 0]);
        assert_eq!(affine_rank(&[&a, &b, &c]), 1);
        assert_eq!(affine_rank(&[&a, &b, &d]), 2);
    }

    #[test]
    fn hyperplane_through_points() {
        let a = pt(&[1, 0, 0]);
        let b = pt(&[0, 1, 0]);
        let c = pt(&[0, 0, 1]);
        let h = Hyperplane::through(&[&a, &b, &c], 3).unwrap();
        assert!(h.eval(&a).is_zero());
        assert!(h.eval(&b).is_zero());
        assert!(h.eval(&c).is_zero());
        let h = h.oriented_away_from(&pt(&[0, 0, 0])).unwrap();
        assert!(h.eval(&pt(&[1, 1, 1])).is_positive());
        let extra = pt(&[1, 1, -1]);
        assert!(Hyperplane::through(&[&a, &b, &c, &extra], 3).is_some());
        assert!(Hyperplane::through(&[&a, &b], 3).is_none());
        let on_line = pt(&[2, -1, 0]);
        assert!(Hyperplane::through(&[&a, &b, &on_line], 3).is_none());
    }
}
