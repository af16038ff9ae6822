//! Structural facts about Gale-braxial polytopes, checked on one instance.

use std::collections::BTreeSet;

use super::report::TheoremReport;
use super::{is_braxial, is_gale_polytope, star_from_edges};
use crate::comb::{edges_of, face_lattice, is_paired_set, CombPolytope, Face};
use crate::construction::{classify_position, ConstructionState, PositionClass};
use crate::error::{Error, Result};
use crate::families::k_subsets;
use crate::realization::{hull_facets, side_of, Realization};

fn fmt_set(s: &BTreeSet<usize>) -> String {
    Face::from_unsorted(s.iter().copied()).to_string()
}

/// Checks the structure theorems on the last polytope of a construction,
/// cross-checking the truncation against the construction log.
pub fn check_structure_theorems(state: &ConstructionState, r: &Realization) -> Result<TheoremReport> {
    let n = state.n();
    let truncation = n.checked_sub(1).and_then(|j| state.polytope_at(j));
    structure_report(state.polytope(), r, truncation.as_ref())
}

/// Checks the structure theorems on `p` realized by `r`.
///
/// `truncation`, when given, must equal the hull of `x_0, …, x_{n-1}`.
/// Checks whose hypotheses need `2 ≤ s ≤ n - d + 1` pass vacuously outside
/// that range, with a note saying so.
pub fn structure_report(
    p: &CombPolytope,
    r: &Realization,
    truncation: Option<&CombPolytope>,
) -> Result<TheoremReport> {
    let lattice = face_lattice(p)?;
    if r.len() != p.num_vertices() || r.dim() != p.dim() {
        return Err(Error::InvalidInput(format!(
            "realization has {} points in dimension {}, polytope {} vertices in dimension {}",
            r.len(),
            r.dim(),
            p.num_vertices(),
            p.dim()
        )));
    }
    if hull_facets(r)? != *p {
        return Err(Error::InvalidInput(
            "realization hull does not match the polytope".into(),
        ));
    }

    let d = p.dim();
    let n = p.last_vertex();
    let edges = edges_of(&lattice);
    let star = |i| star_from_edges(&edges, i).expect("edges are well formed");
    let mut report = TheoremReport::new();

    if !(is_gale_polytope(p) && is_braxial(p)) {
        report.note("polytope is not Gale-braxial; the checks below assume it is");
    }
    if d % 2 == 1 || n < d + 1 {
        report.note(format!("hypotheses want even d and n >= d+1 (d={d}, n={n})"));
    }

    let star_n = star(n);
    let s = star_n.iter().copied().find(|&j| j >= 1).unwrap_or(0);
    report.note(format!("s={s}"));
    let periodic = s >= 2 && s + d <= n + 1;
    if !periodic {
        report.note("s outside 2..=n-d+1; checks depending on s pass vacuously");
    }

    // Facets avoiding x_0 are simplices.
    let bad = p.facets().iter().find(|f| !f.contains(0) && f.len() != d);
    report.push(
        "x0-free-facets-are-simplices",
        bad.is_none(),
        bad.map(|f| format!("facet {f} has {} vertices", f.len())),
    );

    // x_0 is joined to every other vertex.
    let star0 = star(0);
    let all: BTreeSet<usize> = (1..=n).collect();
    let missing: BTreeSet<usize> = all.difference(&star0).copied().collect();
    report.push(
        "x0-adjacent-to-all",
        missing.is_empty(),
        (!missing.is_empty()).then(|| format!("not adjacent to {}", fmt_set(&missing))),
    );

    // An edge {x_a, x_b} with 1 ≤ a forces the edges {x_a, x_q}, {x_q, x_b}
    // for every a < q < b.
    let mut gap = None;
    'edges: for e in &edges {
        let (a, b) = (e.vertices()[0], e.vertices()[1]);
        if a == 0 {
            continue;
        }
        for q in a + 1..b {
            for pair in [Face::from([a, q]), Face::from([q, b])] {
                if !edges.contains(&pair) {
                    gap = Some(format!("edge {e} but no edge {pair}"));
                    break 'edges;
                }
            }
        }
    }
    report.push("edges-span-intervals", gap.is_none(), gap);

    // Stars of the endpoints are intervals.
    let star1 = star(1);
    let hi = star1.iter().copied().max().unwrap_or(0);
    let ok1 = hi >= d && hi <= n && star1 == (2..=hi).collect::<BTreeSet<_>>();
    let okn = s >= 1 && s + d <= n + 1 && star_n == (s..n).collect::<BTreeSet<_>>();
    report.push(
        "endpoint-stars-are-intervals",
        ok1 && okn,
        (!(ok1 && okn)).then(|| format!("V_1={} V_n={}", fmt_set(&star1), fmt_set(&star_n))),
    );

    // Paired d-subsets of {x_s, …, x_n} are facets, and
    // {x_0, x_{s-1}, x_s, x_{n-1}, x_n} is a 3-face.
    let mut witness = None;
    if s >= 1 && n + 1 >= s + d {
        for sub in k_subsets(n + 1 - s, d) {
            let g = Face::from_unsorted(sub.iter().map(|v| v + s));
            if is_paired_set(&g) && !p.has_facet(&g) {
                witness = Some(format!("paired set {g} is not a facet"));
                break;
            }
        }
    }
    if witness.is_none() && s >= 1 && d >= 4 {
        let g = Face::from_unsorted([0, s - 1, s, n - 1, n]);
        if !lattice.contains(&g, 3) {
            witness = Some(format!("{g} is not a 3-face"));
        }
    }
    report.push("paired-facets-and-three-face", witness.is_none(), witness);

    // The second-to-last vertex sees exactly x_{s-1}, …, x_{n-2} and x_n.
    let star_prev = star(n - 1);
    let expected: BTreeSet<usize> = (s.saturating_sub(1)..=n - 2).chain([n]).collect();
    let ok = !periodic || star_prev == expected;
    report.push(
        "second-last-star",
        ok,
        (!ok).then(|| format!("V_(n-1)={} expected {}", fmt_set(&star_prev), fmt_set(&expected))),
    );

    // Dropping x_n leaves a Gale-braxial polytope in which x_{n-1} sees
    // exactly x_{s-1}, …, x_{n-2}.
    let prefix = r.window(0..n);
    let truncated = hull_facets(&prefix)?;
    let mut witness = None;
    if let Some(t) = truncation {
        if *t != truncated {
            witness = Some("hull of the prefix differs from the recorded predecessor".to_string());
        }
    }
    if witness.is_none() && !(is_gale_polytope(&truncated) && is_braxial(&truncated)) {
        witness = Some("truncation is not Gale-braxial".to_string());
    }
    let truncated_lattice = face_lattice(&truncated)?;
    let truncated_edges = edges_of(&truncated_lattice);
    if witness.is_none() && periodic {
        let got = star_from_edges(&truncated_edges, n - 1)?;
        let want: BTreeSet<usize> = (s - 1..=n - 2).collect();
        if got != want {
            witness = Some(format!("V_(n-1)={} expected {}", fmt_set(&got), fmt_set(&want)));
        }
    }
    report.push("truncation-gale-braxial", witness.is_none(), witness);

    // The position of x_n relative to each facet of the truncation follows
    // the membership rule with period n - s + 2.
    let mut witness = None;
    if periodic {
        let k = n - s + 2;
        let interior = prefix.centroid();
        for f in truncated.facets() {
            let pts: Vec<_> = f.iter().map(|v| prefix.points()[v].clone()).collect();
            let got: PositionClass = side_of(&pts, &interior, &r.points()[n])?.into();
            let want = classify_position(f, n, k);
            if got != want {
                witness = Some(format!("facet {f}: {got:?}, rule says {want:?}"));
                break;
            }
        }
    }
    report.push("positions-follow-membership-rule", witness.is_none(), witness);

    Ok(report)
}
