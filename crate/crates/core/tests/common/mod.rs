//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use shellkit::face::binomial;
use shellkit::{Complex, Face, ShellingOrder};

/// Minimal non-faces by classifying every subset of the ambient set with at
/// most `d + 2` vertices, using only facet containment.
pub fn minimal_nonfaces_by_scan(c: &Complex) -> Vec<Face> {
    let is_face = |s: Face| c.facets().iter().any(|&f| s.is_subset(f));
    let mut out: Vec<Face> = c
        .ambient()
        .subsets()
        .filter(|s| s.len() <= c.rank() + 1)
        .filter(|&s| !is_face(s) && s.vertices().all(|v| is_face(s.without(v))))
        .collect();
    out.sort();
    out
}

/// Minimal non-faces of the complex spanned by `prior` that lie inside `f`.
pub fn minimal_nonfaces_inside(prior: &[Face], f: Face) -> Vec<Face> {
    let is_face = |s: Face| !prior.is_empty() && prior.iter().any(|&g| s.is_subset(g));
    f.subsets()
        .filter(|&s| !is_face(s) && s.vertices().all(|v| is_face(s.without(v))))
        .collect()
}

/// f-vector by counting subsets of each facet with a hash set per size.
pub fn f_vector_by_count(c: &Complex) -> Vec<u64> {
    let mut sets: Vec<std::collections::HashSet<Face>> = vec![Default::default(); c.rank() + 1];
    sets[0].insert(Face::EMPTY);
    for &f in c.facets() {
        for s in f.subsets() {
            sets[s.len()].insert(s);
        }
    }
    sets.iter().map(|s| s.len() as u64).collect()
}

/// Reduced Betti numbers of `S_{d,n}`: zero below `d`, `C(n-1, d+1)` in degree `d`.
pub fn skeleton_betti(d: usize, n: u32) -> Vec<u64> {
    let mut v = vec![0u64; d + 2];
    v[d + 1] = binomial(n as u64 - 1, d as u64 + 1);
    v
}

/// Random pure sub-complex of `S_{d,n}` with a random facet order.
pub fn random_order<R: Rng>(rng: &mut R, n: u32, d: usize) -> ShellingOrder {
    let mut all: Vec<Face> = Face::range(n).k_subsets(d + 1).collect();
    all.shuffle(rng);
    let take = rng.gen_range(1..=all.len().min(12));
    all.truncate(take);
    ShellingOrder::spanning(n, all).unwrap()
}

/// Random order biased towards valid shellings: grows a sequence by
/// preferring facets that share a ridge with an earlier one.
pub fn random_grown_order<R: Rng>(rng: &mut R, n: u32, d: usize) -> ShellingOrder {
    let all: Vec<Face> = Face::range(n).k_subsets(d + 1).collect();
    let target = rng.gen_range(1..=all.len().min(14));
    let mut steps = vec![*all.choose(rng).unwrap()];
    while steps.len() < target {
        let adjacent: Vec<Face> = all
            .iter()
            .copied()
            .filter(|f| !steps.contains(f))
            .filter(|f| steps.iter().any(|g| f.intersection(*g).len() == d))
            .collect();
        match adjacent.choose(rng) {
            Some(&f) => steps.push(f),
            None => break,
        }
    }
    ShellingOrder::spanning(n, steps).unwrap()
}

pub fn faces(list: &[&[u32]]) -> Vec<Face> {
    list.iter().map(|f| Face::of(f)).collect()
}
