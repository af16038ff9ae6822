use std::fmt;

use serde::Serialize;

use super::{is_braxial, is_gale_polytope, vertex_star};
use crate::comb::CombPolytope;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Classification {
    Cyclic,
    PeriodicallyCyclic { period: usize },
    BraxtopeClass,
    NotGaleBraxial,
    HypothesisNotMet(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationResult {
    pub class: Classification,
    /// Smallest `j ≥ 1` with `{x_j, x_n}` an edge, when computed.
    pub s: Option<usize>,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Cyclic => write!(f, "Cyclic"),
            Classification::PeriodicallyCyclic { period } => {
                write!(f, "PeriodicallyCyclic period={period}")
            }
            Classification::BraxtopeClass => write!(f, "BraxtopeClass"),
            Classification::NotGaleBraxial => write!(f, "NotGaleBraxial"),
            Classification::HypothesisNotMet(why) => write!(f, "HypothesisNotMet {why}"),
        }
    }
}

impl fmt::Display for ClassificationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.class)?;
        if let Some(s) = self.s {
            write!(f, "\ns={s}")?;
        }
        Ok(())
    }
}

/// Sorts a Gale-braxial polytope by `s`, the first non-zero neighbour of
/// the last vertex.
///
/// For even `d ≥ 6` and `n ≥ d + 1`: `s = 1` is cyclic, `2 ≤ s ≤ n - d` is
/// periodically cyclic with period `n - s + 2`, and `s = n - d + 1` is the
/// braxtope. Outside that range a simplicial polytope is reported cyclic and
/// anything else as not meeting the hypotheses.
pub fn classify_gale_braxial(p: &CombPolytope) -> ClassificationResult {
    if !(is_gale_polytope(p) && is_braxial(p)) {
        return ClassificationResult {
            class: Classification::NotGaleBraxial,
            s: None,
        };
    }
    let d = p.dim();
    let n = p.last_vertex();
    let s = vertex_star(p, n)
        .ok()
        .and_then(|star| star.into_iter().find(|&j| j >= 1));

    let class = if d % 2 == 0 && d >= 6 && n > d {
        match s {
            Some(1) => Classification::Cyclic,
            Some(s) if s >= 2 && s <= n - d => Classification::PeriodicallyCyclic { period: n - s + 2 },
            Some(s) if s == n - d + 1 => Classification::BraxtopeClass,
            Some(s) => Classification::HypothesisNotMet(format!("s={s} exceeds n-d+1={}", n - d + 1)),
            None => Classification::HypothesisNotMet("last vertex has no neighbour".into()),
        }
    } else if p.is_simplicial() {
        Classification::Cyclic
    } else if d % 2 == 1 {
        Classification::HypothesisNotMet(format!("odd d={d} and not simplicial"))
    } else {
        Classification::HypothesisNotMet(format!("needs even d >= 6 and n >= d+1 (d={d}, n={n})"))
    };
    ClassificationResult { class, s }
}
