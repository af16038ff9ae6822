//! Acceptance criteria. Each test prints one `ACCEPTANCE <n> PASS|FAIL` line
//! (plus indented detail lines) straight to stdout so the verdicts survive
//! output capture, then asserts.
//!
//! Tolerances: all geometry is exact rational arithmetic, so every equality
//! below is exact (zero tolerance). Wall-clock limits: 30 s for criterion 1,
//! 120 s for criterion 4.

use std::io::Write;
use std::time::{Duration, Instant};

use galebrax::comb::{edges_of, face_lattice};
use galebrax::construction::{build, classify_position};
use galebrax::families::{braxtope_edges, braxtope_facets, cyclic_facets};
use galebrax::realization::{hull_facets, moment_points, realize_construction, side_of};
use galebrax::verify::{
    check_structure_theorems, classify_gale_braxial, is_braxial, is_gale_polytope,
    is_periodically_cyclic, is_simplicial, Classification,
};
use galebrax::{CombPolytope, Error, Face};

const ORACLE_LIMIT: Duration = Duration::from_secs(30);
const CONSTRUCTION_LIMIT: Duration = Duration::from_secs(120);

struct Verdict {
    id: &'static str,
    title: &'static str,
    details: Vec<(bool, String)>,
}

impl Verdict {
    fn new(id: &'static str, title: &'static str) -> Self {
        Verdict {
            id,
            title,
            details: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        self.details.push((ok, what.into()));
    }

    fn passed(&self) -> bool {
        self.details.iter().all(|(ok, _)| *ok)
    }

    /// Prints the verdict and fails the test if any detail failed.
    fn finish(self) {
        let tag = |ok: bool| if ok { "PASS" } else { "FAIL" };
        let mut text = format!("ACCEPTANCE {} {} {}\n", self.id, tag(self.passed()), self.title);
        for (ok, what) in &self.details {
            text.push_str(&format!("    {} {what}\n", tag(*ok)));
        }
        let mut out = std::io::stdout().lock();
        out.write_all(text.as_bytes()).unwrap();
        out.flush().unwrap();
        drop(out);
        assert!(self.passed(), "criterion {} failed:\n{text}", self.id);
    }
}

#[test]
fn criterion_1_cyclic_oracle_equivalence() {
    let mut v = Verdict::new("1", "cyclic facets equal moment-curve hulls, d=2..6, n=d+1..d+5");
    let start = Instant::now();
    let mut mismatches = Vec::new();
    let mut cases = 0;
    for d in 2..=6 {
        for n in d + 1..=d + 5 {
            cases += 1;
            let gen = cyclic_facets(n, d).unwrap();
            let hull = hull_facets(&moment_points(n, d)).unwrap();
            if gen != hull {
                mismatches.push(format!("(n={n}, d={d})"));
            }
        }
    }
    let elapsed = start.elapsed();
    v.check(
        mismatches.is_empty(),
        format!("{cases} cases, exact set equality, mismatches: [{}]", mismatches.join(" ")),
    );
    v.check(
        elapsed < ORACLE_LIMIT,
        format!("runtime {:.2?} < {:?}", elapsed, ORACLE_LIMIT),
    );
    v.finish();
}

#[test]
fn criterion_2_cyclic_counts() {
    let mut v = Verdict::new("2", "cyclic facet counts");
    for n in 5..=10 {
        let count = cyclic_facets(n, 4).unwrap().num_facets();
        let hull = hull_facets(&moment_points(n, 4)).unwrap().num_facets();
        v.check(
            count == n * (n - 3) / 2 && hull == count,
            format!("cyclic(n={n}, d=4): {count} facets, oracle {hull}, expected {}", n * (n - 3) / 2),
        );
    }
    let c = cyclic_facets(8, 6).unwrap().num_facets();
    v.check(c == 16, format!("cyclic(n=8, d=6): {c} facets, expected 16"));
    v.finish();
}

#[test]
fn criterion_3_braxtope_structure() {
    let mut v = Verdict::new("3", "braxtope structure, e=3..5, m=e..e+5");
    let mut bad_counts = Vec::new();
    let mut bad_edges = Vec::new();
    let mut bad_quintuples = Vec::new();
    let mut bad_pairs = Vec::new();
    for e in 3..=5 {
        for m in e..=e + 5 {
            let p = braxtope_facets(m, e).unwrap();
            let l = face_lattice(&p).unwrap();

            let expected = if m == e { e + 1 } else { 2 * m - e + 1 };
            if p.num_facets() != expected {
                bad_counts.push(format!("(e={e},m={m}):{}!={expected}", p.num_facets()));
            }

            if edges_of(&l) != braxtope_edges(m, e).unwrap() {
                bad_edges.push(format!("(e={e},m={m})"));
            }

            for t in 1..=m - e {
                let q = Face::from_unsorted([0, t, t + 1, t + e - 1, t + e]);
                if !l.contains(&q, 3) {
                    bad_quintuples.push(format!("(e={e},m={m},t={t})"));
                }
            }

            // The facets with one vertex more than a simplex should be
            // exactly E_3 and E_{m-2}.
            if m > e {
                let wide: Vec<&Face> = p.facets().iter().filter(|f| f.len() == e + 1).collect();
                if wide.len() != 2 {
                    bad_pairs.push(format!("(e={e},m={m}):{}", wide.len()));
                }
            }
        }
    }
    let list = |v: &[String]| if v.is_empty() { "none".to_string() } else { v.join(" ") };
    v.check(
        bad_counts.is_empty(),
        format!("facet count e+1 (m=e) or 2m-e+1; failures: {}", list(&bad_counts)),
    );
    v.check(
        bad_edges.is_empty(),
        format!("lattice edges equal the closed-form edge rules; failures: {}", list(&bad_edges)),
    );
    v.check(
        bad_quintuples.is_empty(),
        format!(
            "{{y0,yt,yt+1,yt+e-1,yt+e}} is a rank-3 face, 1<=t<=m-e; failures: {}",
            list(&bad_quintuples)
        ),
    );
    v.check(
        bad_pairs.is_empty(),
        format!(
            "exactly two facets with e+1 vertices when m>e; failures (count): {}",
            list(&bad_pairs)
        ),
    );
    v.finish();
}

#[test]
fn criterion_4_construction_end_to_end() {
    let mut v = Verdict::new("4", "construction (d=6, k=8), n=8..12, realized exactly");
    let start = Instant::now();
    let state = build(6, 8, 12).unwrap();
    let mut bad_props = Vec::new();
    let mut bad_hulls = Vec::new();
    let mut bad_sides = Vec::new();
    let r = realize_construction(&state);
    v.check(r.is_ok(), format!("realize_construction: {:?}", r.as_ref().err()));
    for n in 8..=12 {
        let p = state.polytope_at(n).unwrap();
        if !(is_gale_polytope(&p) && is_braxial(&p)) {
            bad_props.push(format!("P_{n}"));
        }
        let Ok(r) = &r else { continue };
        let prefix = r.window(0..n + 1);
        if hull_facets(&prefix).unwrap() != p {
            bad_hulls.push(format!("P_{n}"));
        }
        let before = r.window(0..n);
        let interior = before.centroid();
        let previous = state.polytope_at(n - 1).unwrap();
        for f in previous.facets() {
            let pts: Vec<_> = f.iter().map(|i| before.points()[i].clone()).collect();
            let side = side_of(&pts, &interior, &r.points()[n]).unwrap();
            if galebrax::construction::PositionClass::from(side) != classify_position(f, n, 8) {
                bad_sides.push(format!("x_{n} vs {f}"));
            }
        }
    }
    let elapsed = start.elapsed();
    let list = |v: &[String]| if v.is_empty() { "none".to_string() } else { v.join(" ") };
    v.check(bad_props.is_empty(), format!("every P_n Gale and braxial; failures: {}", list(&bad_props)));
    v.check(
        bad_hulls.is_empty(),
        format!("hull of x_0..x_n equals P_n at every step; failures: {}", list(&bad_hulls)),
    );
    v.check(
        bad_sides.is_empty(),
        format!("side_of agrees with the membership rule on every facet; failures: {}", list(&bad_sides)),
    );
    v.check(
        elapsed < CONSTRUCTION_LIMIT,
        format!("runtime {:.2?} < {:?}", elapsed, CONSTRUCTION_LIMIT),
    );
    v.finish();
}

#[test]
fn criterion_5_periodicity() {
    let mut v = Verdict::new("5", "realized constructions have period 8, n=9..12");
    for n in 9..=12 {
        let state = build(6, 8, n).unwrap();
        let r = realize_construction(&state).unwrap();
        let p8 = is_periodically_cyclic(&r, 8).unwrap();
        let p9 = is_periodically_cyclic(&r, 9).unwrap();
        let c = classify_gale_braxial(state.polytope());
        let class_ok = c.class == Classification::PeriodicallyCyclic { period: 8 } && c.s == Some(n - 6);
        v.check(
            p8 && !p9 && class_ok,
            format!("n={n}: period 8 {p8}, period 9 {p9}, classified {} (s={:?})", c.class, c.s),
        );
    }
    v.finish();
}

#[test]
fn criterion_6_structure_theorems() {
    let mut v = Verdict::new("6", "all eight structure checks on the construction, n=9..12");
    for n in 9..=12 {
        let state = build(6, 8, n).unwrap();
        let r = realize_construction(&state).unwrap();
        let report = check_structure_theorems(&state, &r).unwrap();
        let failed: Vec<String> = report
            .checks()
            .iter()
            .filter(|c| !c.passed)
            .map(ToString::to_string)
            .collect();
        v.check(
            report.checks().len() == 8 && failed.is_empty(),
            format!("n={n}: {} checks, failed: [{}]", report.checks().len(), failed.join("; ")),
        );
    }
    v.finish();
}

#[test]
fn criterion_7_dimension_four_is_not_periodic() {
    let mut v = Verdict::new("7", "d=4 construction (k=6, n=10) is Gale-braxial but has no period");
    let state = build(4, 6, 10).unwrap();
    let p = state.polytope();
    v.check(
        is_gale_polytope(p) && is_braxial(p),
        "P_10 is Gale and braxial".to_string(),
    );
    let r = realize_construction(&state).unwrap();
    for k in 6..=10 {
        let periodic = is_periodically_cyclic(&r, k).unwrap();
        v.check(!periodic, format!("period {k}: {periodic}"));
    }
    v.finish();
}

#[test]
fn criterion_8_odd_dimension() {
    let mut v = Verdict::new("8", "odd-dimensional cyclic polytopes are Gale, braxial, simplicial, Cyclic");
    for d in [3, 5] {
        for num_vertices in d + 1..=d + 6 {
            let p = cyclic_facets(num_vertices, d).unwrap();
            let props = is_gale_polytope(&p) && is_braxial(&p) && is_simplicial(&p);
            let c = classify_gale_braxial(&p);
            v.check(
                props && c.class == Classification::Cyclic,
                format!("d={d}, n={}: properties {props}, classified {}", num_vertices - 1, c.class),
            );
        }
    }
    v.finish();
}

#[test]
fn criterion_9_negative_controls() {
    let mut v = Verdict::new("9", "negative controls");
    let relabeled = CombPolytope::new(
        3,
        6,
        [[0, 1, 3].as_slice(), &[2, 4, 5], &[0, 1, 2, 4], &[1, 3, 4, 5], &[0, 2, 3, 5]]
            .map(Face::from),
    )
    .unwrap();
    v.check(!is_gale_polytope(&relabeled), "relabeled prism fails the Gale test");

    let natural = CombPolytope::new(
        3,
        6,
        [[0, 1, 2].as_slice(), &[3, 4, 5], &[0, 1, 3, 4], &[1, 2, 4, 5], &[0, 2, 3, 5]]
            .map(Face::from),
    )
    .unwrap();
    v.check(!is_braxial(&natural), "natural-order prism fails the braxial test");

    let sheets = CombPolytope::new(
        3,
        5,
        [[0, 1, 2].as_slice(), &[0, 1, 3], &[0, 1, 4], &[2, 3, 4], &[0, 2, 3], &[1, 3, 4]]
            .map(Face::from),
    )
    .unwrap();
    let err = face_lattice(&sheets).err();
    v.check(
        matches!(err, Some(Error::NotPolytopal(_))),
        format!("ridge {{0,1}} in three facets: {err:?}"),
    );
    v.finish();
}
