mod common;

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use shellkit::face::binomial;
use shellkit::format::Tag;
use shellkit::{
    classify_steps, echo, echo_shelling, is_quiet, load_builtin, verify_shelling,
    verify_shelling_bruteforce, Complex, Error, Face, ShellingOrder, StepClass,
};

/// Echo facets by testing every 4-subset of `[2k]` against the definition.
fn echo_by_scan(g: &Complex) -> Vec<Face> {
    let k = g.n();
    let class = |i: u32| Face::of(&[2 * i - 1, 2 * i]);
    let is_edge = |a: u32, b: u32| g.is_face(Face::of(&[a, b]));
    let mut out = Vec::new();
    for s in Face::range(2 * k).k_subsets(4) {
        let full: Vec<u32> = (1..=k).filter(|&i| class(i).is_subset(s)).collect();
        let hit: Vec<u32> = (1..=k)
            .filter(|&i| !class(i).intersection(s).is_empty())
            .collect();
        let keep = match (full.len(), hit.len()) {
            (2, 2) => is_edge(full[0], full[1]),
            (1, 3) => {
                let t = Face::from_vertices(hit.clone()).unwrap();
                g.has_facet(t)
            }
            _ => false,
        };
        if keep {
            out.push(s);
        }
    }
    out.sort();
    out
}

/// Random shelling of a 2-complex on `n` vertices in which every step adds a new edge.
fn random_contractible_order(rng: &mut ChaCha8Rng, n: u32) -> Option<ShellingOrder> {
    let order = common::random_grown_order(rng, n, 2);
    let report = verify_shelling(&order);
    (report.valid && report.boundary_glued_steps.is_empty()).then_some(order)
}

#[test]
fn echo_facets_match_definition() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for k in 3..=8u32 {
        for _ in 0..6 {
            let g = common::random_order(&mut rng, k, 2).span();
            let e = echo(&g).unwrap();
            assert_eq!(e.facets(), echo_by_scan(&g).as_slice());
            let edges = g.faces_of_size(2).len();
            assert_eq!(e.facet_count(), edges + 12 * g.facet_count());
        }
    }
}

#[test]
fn transcribed_k4_example_is_an_echo() {
    let g = Complex::new(4, 2, common::faces(&[&[1, 2, 3], &[2, 3, 4]])).unwrap();
    let e = echo(&g).unwrap();
    assert_eq!(load_builtin("echo_k4_example").unwrap().complex, e);
    assert_eq!(e.facet_count(), 5 + 24);
}

#[test]
fn quiet8_step_classes_follow_tags() {
    let ds = load_builtin("quiet8_shelling").unwrap();
    let order = ds.shelling.unwrap();
    let classes = classify_steps(&order).unwrap();
    assert_eq!(classes[0], StepClass::FirstFacet);
    assert!(matches!(classes[1], StepClass::TwoNewEdges { .. }));
    for (i, (class, entry)) in classes.iter().zip(&ds.listing.entries).enumerate() {
        let tag: Tag = class.color().parse().unwrap();
        assert_eq!(entry.tag, Some(tag), "step {i}");
    }
    assert!(is_quiet(&order.span()).unwrap().quiet);
}

#[test]
fn quiet_complexes_have_closed_form_h_vector() {
    let q = load_builtin("quiet8").unwrap().complex;
    let k = q.n() as i64;
    let f2 = q.facet_count() as i64;
    let c = |n: i64, r: u64| binomial(n as u64, r) as i64;
    assert_eq!(
        q.h_vector().entries(),
        &[1, k - 3, c(k - 2, 2), f2 - c(k - 1, 2)]
    );
    assert_eq!(q.h_vector().entries(), &[1, 5, 15, 0]);
}

#[test]
fn k4_triangles_are_crowded() {
    let g = Complex::new(4, 2, common::faces(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4]])).unwrap();
    let v = is_quiet(&g).unwrap();
    assert!(!v.quiet);
    assert_eq!(v.witness(), Some(Face::of(&[1, 2, 3, 4])));
}

#[test]
fn echo_shellings_of_random_contractible_complexes() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut built = 0;
    for _ in 0..200 {
        let n = 5 + built % 3;
        let Some(order) = random_contractible_order(&mut rng, n as u32) else {
            continue;
        };
        let generated = echo_shelling(&order).unwrap();
        let e = echo(order.complex()).unwrap();
        assert_eq!(generated.order.complex(), &e);
        assert!(generated.order.is_complete());
        let report = verify_shelling_bruteforce(&generated.order);
        assert!(report.valid);
        assert_eq!(report.boundary_glued_steps, generated.boundary_glued_steps);
        assert_eq!(
            generated.boundary_glued_steps.len() as i64,
            e.h_vector().last()
        );
        built += 1;
    }
    assert!(built > 30, "only {built} contractible shellings drawn");
}

#[test]
fn glued_step_blocks_the_echo_shelling() {
    let tetra = load_builtin("tetra_gamma").unwrap();
    let order = ShellingOrder::new(tetra.complex.clone(), tetra.listing.faces()).unwrap();
    assert!(verify_shelling(&order).valid);
    match echo_shelling(&order) {
        Err(Error::NotContractible { step, .. }) => assert_eq!(step, 3),
        other => panic!("{other:?}"),
    }
}

#[test]
fn generated_blocks_match_transcription() {
    let base = load_builtin("quiet8_shelling").unwrap().shelling.unwrap();
    let generated = echo_shelling(&base).unwrap();
    let ds = load_builtin("echo16_shelling").unwrap();
    let transcribed = ds.shelling.unwrap();
    assert_eq!(generated.order.complex(), transcribed.complex());
    assert_eq!(ds.listing.blocks.len(), generated.blocks.len());

    for (i, (mark, block)) in ds.listing.blocks.iter().zip(&generated.blocks).enumerate() {
        assert_eq!(mark.source, block.source);
        assert_eq!(mark.start, block.start);
        assert_eq!(
            mark.tag.map(|t| t.to_string()).as_deref(),
            Some(block.class.color())
        );
        let range = block.start..block.start + block.len;
        let ours = &generated.order.steps()[range.clone()];
        let theirs = &transcribed.steps()[range];
        if i == 0 {
            let a: BTreeSet<_> = ours.iter().collect();
            let b: BTreeSet<_> = theirs.iter().collect();
            assert_eq!(a, b);
        } else {
            assert_eq!(ours, theirs, "block {i}");
        }
    }
    let first = generated.blocks[0].len;
    let theirs = verify_shelling(&transcribed).boundary_glued_steps;
    assert_eq!(theirs.len(), generated.boundary_glued_steps.len());
    let after = |v: &[usize]| {
        v.iter()
            .copied()
            .filter(|&i| i >= first)
            .collect::<Vec<_>>()
    };
    assert_eq!(after(&theirs), after(&generated.boundary_glued_steps));
}
