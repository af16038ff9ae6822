use std::collections::BTreeSet;

use proptest::prelude::*;

use galebrax::comb::{face_lattice, is_gale_subset, ridges};
use galebrax::construction::build;
use galebrax::families::{braxtope_facets, cyclic_facets, multiplex_facets, Family, FamilySpec};
use galebrax::verify::{is_braxial, is_gale_polytope, is_simplicial, vertex_star};
use galebrax::{CombPolytope, Face};

fn family_instance() -> impl Strategy<Value = CombPolytope> {
    prop_oneof![
        (2usize..=6, 1usize..=4).prop_map(|(d, extra)| cyclic_facets(d + extra, d).unwrap()),
        (3usize..=5, 0usize..=4).prop_map(|(e, extra)| braxtope_facets(e + extra, e).unwrap()),
        (2usize..=5, 1usize..=4).prop_map(|(d, extra)| multiplex_facets(d + extra, d).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gale_is_invariant_under_reversal(n in 2usize..14, bits in any::<u16>()) {
        let f = Face::from_unsorted((0..n).filter(|i| bits >> i & 1 == 1));
        prop_assert_eq!(
            is_gale_subset(&f, n).unwrap(),
            is_gale_subset(&f.reversed(n), n).unwrap()
        );
    }

    #[test]
    fn euler_relation(p in family_instance()) {
        let l = face_lattice(&p).unwrap();
        let d = p.dim() as i64;
        let chi: i64 = l
            .f_vector()
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum();
        prop_assert_eq!(chi, 1 - (-1i64).pow(d as u32));
    }

    #[test]
    fn ridges_are_the_codimension_two_faces(p in family_instance()) {
        let l = face_lattice(&p).unwrap();
        let from_pairs: BTreeSet<Face> = ridges(&p).unwrap().into_iter().map(|r| r.face).collect();
        let from_lattice: BTreeSet<Face> = l.faces(p.dim() as isize - 2).iter().cloned().collect();
        prop_assert_eq!(from_pairs, from_lattice);
    }

    #[test]
    fn braxtopes_are_braxial_and_gale_in_even_dimension(e in 3usize..=5, extra in 0usize..=5) {
        let b = braxtope_facets(e + extra, e).unwrap();
        // T_1 = {1, …, e} sits strictly inside the array, so it needs e even.
        prop_assert_eq!(is_gale_polytope(&b), e % 2 == 0 || extra == 0);
        prop_assert!(is_braxial(&b));
        let expected = if extra == 0 { e + 1 } else { 2 * (e + extra) - e + 1 };
        prop_assert_eq!(b.num_facets(), expected);
    }

    #[test]
    fn braxtope_drops_to_its_predecessor(e in 3usize..=5, extra in 1usize..=5) {
        let m = e + extra;
        let big = braxtope_facets(m, e).unwrap();
        let small = braxtope_facets(m - 1, e).unwrap();
        for f in big.facets().iter().filter(|f| !f.contains(m)) {
            prop_assert!(small.has_facet(f), "{} missing from braxtope({}, {})", f, m - 1, e);
        }
    }

    #[test]
    fn multiplex_has_one_facet_per_vertex(d in 2usize..=5, extra in 1usize..=5) {
        let p = FamilySpec::new(Family::Multiplex, d, d + extra).unwrap().generate().unwrap();
        prop_assert_eq!(p.num_facets(), d + extra);
    }

    #[test]
    fn constructions_stay_gale_and_braxial(half in 2usize..=3, slack in 2usize..=3, steps in 0usize..=3) {
        let d = 2 * half;
        let k = d + slack;
        let s = build(d, k, k - 1 + steps).unwrap();
        let p = s.polytope();
        prop_assert!(is_gale_polytope(p));
        prop_assert!(is_braxial(p));
        prop_assert_eq!(vertex_star(p, 0).unwrap(), (1..p.num_vertices()).collect());
        prop_assert_eq!(is_simplicial(p), steps == 0);
    }
}

#[test]
fn cyclic_facet_count_for_even_dimension() {
    // n/(n-m) * C(n-m, m) facets for d = 2m.
    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
    for m in 1..=3 {
        for n in 2 * m + 1..=2 * m + 6 {
            let expected = n * binom(n - m, m) / (n - m);
            assert_eq!(cyclic_facets(n, 2 * m).unwrap().num_facets(), expected, "n={n} d={}", 2 * m);
        }
    }
}
