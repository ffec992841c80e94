//! Shelling verification, restriction faces and extension candidates.

use std::collections::HashSet;

use serde::Serialize;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::face::Face;

/// An ordered sequence of distinct facets of one complex.
///
/// The order may cover only some of the facets; partial shellings are
/// verified the same way as complete ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingOrder {
    complex: Complex,
    steps: Vec<Face>,
}

impl ShellingOrder {
    pub fn new(complex: Complex, steps: Vec<Face>) -> Result<ShellingOrder> {
        if steps.is_empty() {
            return Err(Error::EmptyOrder);
        }
        let mut seen = HashSet::with_capacity(steps.len());
        for &f in &steps {
            if f.len() != complex.rank() {
                return Err(Error::NotPure {
                    facet: f,
                    expected: complex.rank(),
                    found: f.len(),
                });
            }
            if !complex.has_facet(f) {
                return Err(Error::NotAFacet(f));
            }
            if !seen.insert(f) {
                return Err(Error::DuplicateFacet(f));
            }
        }
        Ok(ShellingOrder { complex, steps })
    }

    /// Order over the complex spanned by `steps` inside `[n]`.
    pub fn spanning(n: u32, steps: Vec<Face>) -> Result<ShellingOrder> {
        let first = *steps.first().ok_or(Error::EmptyOrder)?;
        if first.is_empty() {
            return Err(Error::EmptyComplex);
        }
        let complex = Complex::new(n, first.len() - 1, steps.iter().copied())?;
        ShellingOrder::new(complex, steps)
    }

    pub fn complex(&self) -> &Complex {
        &self.complex
    }

    pub fn steps(&self) -> &[Face] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.steps.len() == self.complex.facet_count()
    }

    /// Complex spanned by the listed steps.
    pub fn span(&self) -> Complex {
        Complex::with_ambient(
            self.complex.ambient(),
            self.complex.rank(),
            self.steps.iter().copied(),
        )
        .expect("steps are distinct facets of a pure complex")
    }
}

/// Outcome of checking a facet order step by step. Step indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShellingReport {
    pub valid: bool,
    pub failing_step: Option<usize>,
    /// Per step, the minimal face of `F_i` that is new at that step.
    pub restriction_faces: Vec<Face>,
    /// Steps whose facet is glued along its whole boundary.
    pub boundary_glued_steps: Vec<usize>,
}

impl ShellingReport {
    fn from_steps(
        steps: &[Face],
        restriction_faces: Vec<Face>,
        failing_step: Option<usize>,
    ) -> Self {
        let boundary_glued_steps = restriction_faces
            .iter()
            .zip(steps)
            .enumerate()
            .filter(|(_, (r, f))| r == f)
            .map(|(i, _)| i)
            .collect();
        ShellingReport {
            valid: failing_step.is_none(),
            failing_step,
            restriction_faces,
            boundary_glued_steps,
        }
    }
}

/// Verifies a shelling using the codimension-one faces already present.
///
/// For step `i`, `N_i` is the set of `v` in `F_i` with `F_i \ {v}` contained
/// in an earlier facet. The step is valid iff `(F_i \ F_j) ∩ N_i` is non-empty
/// for every `j < i`; `N_i` is then the restriction face.
pub fn verify_shelling(order: &ShellingOrder) -> ShellingReport {
    let steps = order.steps();
    let mut ridges: HashSet<Face> = HashSet::new();
    let mut restriction = Vec::with_capacity(steps.len());
    let mut failing = None;
    for (i, &f) in steps.iter().enumerate() {
        let present = f
            .vertices()
            .filter(|&v| ridges.contains(&f.without(v)))
            .fold(Face::EMPTY, |acc, v| acc.with(v));
        if failing.is_none()
            && steps[..i]
                .iter()
                .any(|&g| f.difference(g).intersection(present).is_empty())
        {
            failing = Some(i);
        }
        restriction.push(present);
        ridges.extend(f.facets_of_boundary());
    }
    ShellingReport::from_steps(steps, restriction, failing)
}

/// Literal form of the definition: for every `j < i` there is
/// `v ∈ F_i \ F_j` and `k < i` with `F_i \ F_k = {v}`.
pub fn verify_shelling_bruteforce(order: &ShellingOrder) -> ShellingReport {
    let steps = order.steps();
    let mut restriction = Vec::with_capacity(steps.len());
    let mut failing = None;
    for (i, &fi) in steps.iter().enumerate() {
        let ok = (0..i).all(|j| {
            fi.difference(steps[j])
                .vertices()
                .any(|v| (0..i).any(|k| fi.difference(steps[k]) == Face::vertex(v)))
        });
        if !ok && failing.is_none() {
            failing = Some(i);
        }
        let mut r = Face::EMPTY;
        for k in 0..i {
            let diff = fi.difference(steps[k]);
            if diff.len() == 1 {
                r = r.union(diff);
            }
        }
        restriction.push(r);
    }
    ShellingReport::from_steps(steps, restriction, failing)
}

/// Verdict of the austerity test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AustereVerdict {
    pub austere: bool,
    /// A complement facet containing exactly one minimal non-face.
    pub witness: Option<Face>,
}

/// Is every complement facet host to at least two minimal non-faces?
pub fn is_austere(c: &Complex) -> Result<AustereVerdict> {
    c.require_nonvoid()?;
    let complement = c.complement();
    if complement.is_void() {
        return Err(Error::NotProperSubcomplex);
    }
    let faces = c.face_set();
    let witness = complement
        .facets()
        .iter()
        .copied()
        .find(|&g| faces.minimal_nonfaces_within(g) < 2);
    Ok(AustereVerdict {
        austere: witness.is_none(),
        witness,
    })
}

/// Complement facets that contain exactly one minimal non-face of `c`.
///
/// These are exactly the facets that extend any shelling of `c` by one valid
/// step. `pool` restricts the candidates; it defaults to the complement.
pub fn extension_candidates(c: &Complex, pool: Option<&[Face]>) -> Result<Vec<Face>> {
    c.require_nonvoid()?;
    let pool: Vec<Face> = match pool {
        Some(p) => {
            for &g in p {
                if c.has_facet(g) {
                    return Err(Error::AlreadyAFacet(g));
                }
                if g.len() != c.rank() {
                    return Err(Error::NotPure {
                        facet: g,
                        expected: c.rank(),
                        found: g.len(),
                    });
                }
                if !g.is_subset(c.ambient()) {
                    return Err(Error::OutsideAmbient {
                        facet: g,
                        ambient: c.ambient(),
                    });
                }
            }
            p.to_vec()
        }
        None => c.complement().facets().to_vec(),
    };
    let faces = c.face_set();
    let mut out: Vec<Face> = pool
        .into_iter()
        .filter(|&g| faces.minimal_nonfaces_within(g) == 1)
        .collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Drops every boundary-glued step from a complete shelling.
///
/// The result is checked: the remaining order is a shelling, the reduced
/// complex has `h_{d+1} = 0`, and its `(d-1)`-skeleton is unchanged.
pub fn remove_boundary_glued(order: &ShellingOrder) -> Result<(Complex, ShellingOrder)> {
    let report = verify_shelling(order);
    if let Some(step) = report.failing_step {
        return Err(Error::InvalidShelling { step });
    }
    if !order.is_complete() {
        return Err(Error::IncompleteShelling {
            covered: order.len(),
            total: order.complex().facet_count(),
        });
    }
    let glued: HashSet<usize> = report.boundary_glued_steps.iter().copied().collect();
    let kept: Vec<Face> = order
        .steps()
        .iter()
        .enumerate()
        .filter(|(i, _)| !glued.contains(i))
        .map(|(_, &f)| f)
        .collect();
    let original = order.complex();
    let reduced = Complex::with_ambient(original.ambient(), original.rank(), kept.iter().copied())?;
    let reduced_order = ShellingOrder::new(reduced.clone(), kept)?;

    let check = verify_shelling(&reduced_order);
    if !check.valid || !check.boundary_glued_steps.is_empty() {
        return Err(Error::Internal(
            "order without boundary-glued steps no longer verifies".into(),
        ));
    }
    if reduced.h_vector().last() != 0 {
        return Err(Error::Internal(
            "reduced complex has nonzero top h-entry".into(),
        ));
    }
    if original.rank() >= 2 {
        let k = original.rank() - 2;
        if reduced.sub_skeleton(k)? != original.sub_skeleton(k)? {
            return Err(Error::Internal("codimension-one skeleton changed".into()));
        }
    }
    Ok((reduced, reduced_order))
}

/// Shelling of `link(c, face)` induced by a shelling of `c`.
pub fn induced_link_shelling(order: &ShellingOrder, face: Face) -> Result<ShellingOrder> {
    let link = order.complex().link(face)?;
    let steps: Vec<Face> = order
        .steps()
        .iter()
        .filter(|&&f| face.is_subset(f))
        .map(|&f| f.difference(face))
        .collect();
    ShellingOrder::new(link, steps)
}
