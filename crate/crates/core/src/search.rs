//! Exhaustive backtracking search for a shelling of a small complex.
//!
//! Whether a facet may be appended depends only on the set of facets placed
//! so far, so the search memoizes failed sets as `u64` masks over facet
//! indices. Branches are tried fewest-appendable-first.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use dashmap::DashSet;
use rayon::prelude::*;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::shelling::ShellingOrder;

/// Result of a bounded search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(ShellingOrder),
    /// The search space was exhausted: the complex is not shellable.
    NoShelling {
        explored: u64,
    },
    /// The node budget ran out before a verdict.
    Inconclusive {
        explored: u64,
    },
}

#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    pub budget: u64,
    pub workers: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: 1_000_000,
            workers: 1,
        }
    }
}

struct Problem {
    facets: Vec<Face>,
    /// `ridge_owners[g][t]`: facets (other than `g`) containing `g` minus its
    /// `t`-th vertex.
    ridge_owners: Vec<Vec<(u32, u64)>>,
    full: u64,
}

impl Problem {
    fn new(facets: Vec<Face>) -> Problem {
        let ridge_owners = facets
            .iter()
            .enumerate()
            .map(|(gi, &g)| {
                g.vertices()
                    .map(|v| {
                        let ridge = g.without(v);
                        let owners = facets
                            .iter()
                            .enumerate()
                            .filter(|&(hi, &h)| hi != gi && ridge.is_subset(h))
                            .fold(0u64, |m, (hi, _)| m | 1 << hi);
                        (v, owners)
                    })
                    .collect()
            })
            .collect();
        let r = facets.len();
        let full = if r == 64 { u64::MAX } else { (1u64 << r) - 1 };
        Problem {
            facets,
            ridge_owners,
            full,
        }
    }

    fn appendable(&self, placed: u64, g: usize) -> bool {
        if placed == 0 {
            return true;
        }
        let present = self.ridge_owners[g]
            .iter()
            .filter(|(_, owners)| owners & placed != 0)
            .fold(Face::EMPTY, |acc, &(v, _)| acc.with(v));
        if present.is_empty() {
            return false;
        }
        let fg = self.facets[g];
        bits(placed).all(|j| {
            !fg.difference(self.facets[j])
                .intersection(present)
                .is_empty()
        })
    }

    fn candidates(&self, placed: u64) -> Vec<usize> {
        bits(self.full & !placed)
            .filter(|&g| self.appendable(placed, g))
            .collect()
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

struct Shared<'a> {
    problem: &'a Problem,
    failed: DashSet<u64>,
    nodes: AtomicU64,
    budget: u64,
    stop: AtomicBool,
    exhausted: AtomicBool,
}

enum Step {
    Found,
    Dead,
    Abort,
}

impl Shared<'_> {
    fn dfs(&self, placed: u64, path: &mut Vec<usize>) -> Step {
        if placed == self.problem.full {
            return Step::Found;
        }
        if self.stop.load(Ordering::Relaxed) {
            return Step::Abort;
        }
        if self.failed.contains(&placed) {
            return Step::Dead;
        }
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
            self.exhausted.store(true, Ordering::Relaxed);
            self.stop.store(true, Ordering::Relaxed);
            return Step::Abort;
        }
        let mut cands: Vec<(usize, usize)> = self
            .problem
            .candidates(placed)
            .into_iter()
            .map(|g| (self.problem.candidates(placed | 1 << g).len(), g))
            .collect();
        cands.sort_unstable();
        for (_, g) in cands {
            path.push(g);
            match self.dfs(placed | 1 << g, path) {
                Step::Found => return Step::Found,
                Step::Abort => return Step::Abort,
                Step::Dead => {
                    path.pop();
                }
            }
        }
        self.failed.insert(placed);
        Step::Dead
    }
}

/// Searches for a complete shelling of `c` within a node budget.
///
/// With `workers > 1` the top-level branches run on a thread pool sharing the
/// failed-set memo; the returned witness is then not deterministic.
pub fn find_shelling(c: &Complex, config: SearchConfig) -> Result<SearchOutcome> {
    c.require_nonvoid()?;
    if c.facet_count() > 64 {
        return Err(Error::TooManyFacets(c.facet_count()));
    }
    let problem = Problem::new(c.facets().to_vec());
    let shared = Shared {
        problem: &problem,
        failed: DashSet::new(),
        nodes: AtomicU64::new(0),
        budget: config.budget,
        stop: AtomicBool::new(false),
        exhausted: AtomicBool::new(false),
    };

    let found: Option<Vec<usize>> = if config.workers <= 1 {
        let mut path = Vec::new();
        match shared.dfs(0, &mut path) {
            Step::Found => Some(path),
            _ => None,
        }
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.workers)
            .build()
            .map_err(|e| Error::Internal(e.to_string()))?;
        pool.install(|| {
            (0..problem.facets.len())
                .into_par_iter()
                .find_map_any(|first| {
                    let mut path = vec![first];
                    match shared.dfs(1 << first, &mut path) {
                        Step::Found => {
                            shared.stop.store(true, Ordering::Relaxed);
                            Some(path)
                        }
                        _ => None,
                    }
                })
        })
    };

    let explored = shared.nodes.load(Ordering::Relaxed).min(config.budget);
    match found {
        Some(path) => {
            let steps = path.into_iter().map(|i| problem.facets[i]).collect();
            Ok(SearchOutcome::Found(ShellingOrder::new(c.clone(), steps)?))
        }
        None if shared.exhausted.load(Ordering::Relaxed) => {
            Ok(SearchOutcome::Inconclusive { explored })
        }
        None => Ok(SearchOutcome::NoShelling { explored }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shelling::verify_shelling;

    fn cx(n: u32, d: usize, facets: &[&[u32]]) -> Complex {
        Complex::new(n, d, facets.iter().map(|f| Face::of(f))).unwrap()
    }

    #[test]
    fn finds_shelling_of_sphere() {
        let sphere = cx(4, 2, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]);
        match find_shelling(&sphere, SearchConfig::default()).unwrap() {
            SearchOutcome::Found(o) => {
                assert!(o.is_complete());
                assert!(verify_shelling(&o).valid);
            }
            other => panic!("expected a shelling, got {other:?}"),
        }
    }

    #[test]
    fn disconnected_complex_has_none() {
        let c = cx(6, 2, &[&[1, 2, 3], &[4, 5, 6]]);
        assert!(matches!(
            find_shelling(&c, SearchConfig::default()).unwrap(),
            SearchOutcome::NoShelling { .. }
        ));
    }

    #[test]
    fn tiny_budget_is_inconclusive() {
        let c = Complex::skeleton(2, 6).unwrap();
        let out = find_shelling(
            &c,
            SearchConfig {
                budget: 3,
                workers: 1,
            },
        )
        .unwrap();
        assert!(matches!(out, SearchOutcome::Inconclusive { .. }));
    }

    #[test]
    fn parallel_search_finds_valid_shelling() {
        let c = Complex::skeleton(2, 6).unwrap();
        let out = find_shelling(
            &c,
            SearchConfig {
                budget: 1_000_000,
                workers: 4,
            },
        )
        .unwrap();
        match out {
            SearchOutcome::Found(o) => assert!(verify_shelling(&o).valid && o.is_complete()),
            other => panic!("{other:?}"),
        }
    }
}
