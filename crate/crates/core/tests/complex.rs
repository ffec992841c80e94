mod common;

use proptest::prelude::*;
use shellkit::face::binomial;
use shellkit::{load_builtin, Complex, Face};

fn arb_complex() -> impl Strategy<Value = Complex> {
    (4u32..=8, 0usize..=3).prop_flat_map(|(n, d)| {
        let d = d.min(n as usize - 1);
        let all: Vec<Face> = Face::range(n).k_subsets(d + 1).collect();
        let len = all.len();
        proptest::sample::subsequence(all, 1..=len.min(16))
            .prop_map(move |facets| Complex::new(n, d, facets).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn complement_is_an_involution(c in arb_complex()) {
        let comp = c.complement();
        prop_assert_eq!(
            comp.facet_count() as u64 + c.facet_count() as u64,
            binomial(c.n() as u64, c.rank() as u64)
        );
        prop_assert_eq!(comp.complement(), c);
    }

    #[test]
    fn f_vector_routes_agree(c in arb_complex()) {
        let f = c.f_vector();
        let counted = common::f_vector_by_count(&c);
        prop_assert_eq!(f.entries(), counted.as_slice());
        prop_assert_eq!(f.get(c.dim()), c.facet_count() as u64);
    }

    #[test]
    fn h_vector_basic_identities(c in arb_complex()) {
        let f = c.f_vector();
        let h = c.h_vector();
        prop_assert_eq!(h.entries()[0], 1);
        prop_assert_eq!(h.entries().iter().sum::<i64>(), c.facet_count() as i64);
        if c.rank() >= 1 {
            prop_assert_eq!(h.entries()[1], f.get(0) as i64 - c.rank() as i64);
        }
        prop_assert_eq!(
            h.last() * if c.rank() % 2 == 1 { 1 } else { -1 },
            f.reduced_euler_characteristic::<i64>()
        );
        let wide = shellkit::h_vector::<i128>(&f, c.dim());
        prop_assert!(wide.entries().iter().zip(h.entries()).all(|(&a, &b)| a == b as i128));
    }

    #[test]
    fn minimal_nonfaces_match_scan(c in arb_complex()) {
        prop_assert_eq!(c.minimal_nonfaces(), common::minimal_nonfaces_by_scan(&c));
    }

    #[test]
    fn link_facets_are_facets_through_the_face(c in arb_complex(), pick in 0usize..16, v in 1u32..=8) {
        let f = c.facets()[pick % c.facet_count()];
        let face = if f.contains(v) { Face::vertex(v) } else { f.without(f.min_vertex().unwrap()) };
        let link = c.link(face).unwrap();
        let through = c.facets().iter().filter(|g| face.is_subset(**g)).count();
        prop_assert_eq!(link.facet_count(), through);
        prop_assert_eq!(link.dim(), c.dim() - face.len() as isize);
        prop_assert!(link.facets().iter().all(|g| g.intersection(face).is_empty()));
    }
}

#[test]
fn skeleton_counts() {
    assert_eq!(Complex::skeleton(3, 16).unwrap().facet_count(), 1820);
    let s = Complex::skeleton(2, 8).unwrap();
    let f = s.f_vector();
    for i in -1..=2isize {
        assert_eq!(f.get(i), binomial(8, (i + 1) as u64));
    }
}

#[test]
fn echo_complement_and_codimension_one_skeleton() {
    let e = load_builtin("echo16_shelling").unwrap().complex;
    assert_eq!(e.complement().facet_count(), 1540);
    assert_eq!(
        e.sub_skeleton(1).unwrap(),
        Complex::skeleton(1, 16).unwrap()
    );
}

#[test]
fn builtin_f_vectors_agree_with_counting() {
    for name in shellkit::builtin_names() {
        let c = load_builtin(name).unwrap().complex;
        assert_eq!(
            c.f_vector().entries(),
            common::f_vector_by_count(&c).as_slice(),
            "{name}"
        );
        assert_eq!(
            c.minimal_nonfaces(),
            common::minimal_nonfaces_by_scan(&c),
            "{name}"
        );
    }
}

#[test]
fn cone_link_at_apex_recovers_complex() {
    let q = load_builtin("quiet8").unwrap().complex;
    let cone = q.cone().unwrap();
    assert_eq!(cone.dim(), q.dim() + 1);
    assert_eq!(cone.link(Face::vertex(9)).unwrap(), q);
}
