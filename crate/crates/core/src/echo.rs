//! Quiet complexes, the echo construction and its block shelling order.
//!
//! The echo of a 2-complex `g` on `[k]` doubles each vertex `i` into the pair
//! class `C_i = {2i-1, 2i}` and keeps a 4-subset of `[2k]` exactly when the
//! set of classes it meets is a face of `g`.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::face::{Face, MAX_VERTEX};
use crate::shelling::{verify_shelling, ShellingOrder};

/// The partition of `[2k]` into pair classes `C_i = {2i-1, 2i}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairPartition {
    k: u32,
}

impl PairPartition {
    pub fn new(k: u32) -> Result<PairPartition> {
        if 2 * k > MAX_VERTEX {
            return Err(Error::AmbientTooLarge { n: 2 * k as u64 });
        }
        Ok(PairPartition { k })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn class(&self, i: u32) -> Face {
        debug_assert!((1..=self.k).contains(&i));
        Face::of(&[2 * i - 1, 2 * i])
    }

    pub fn class_of(&self, v: u32) -> u32 {
        v.div_ceil(2)
    }

    /// Indices of the classes meeting `f`.
    pub fn support(&self, f: Face) -> Face {
        f.vertices()
            .fold(Face::EMPTY, |acc, v| acc.with(self.class_of(v)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum QuietViolation {
    /// The complex is all of `S_{2,n}`.
    NotProper,
    MissingEdge {
        edge: Face,
    },
    /// A 4-set containing three or more facets.
    CrowdedQuadruple {
        quadruple: Face,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuietVerdict {
    pub quiet: bool,
    pub violation: Option<QuietViolation>,
}

impl QuietVerdict {
    pub fn witness(&self) -> Option<Face> {
        match self.violation {
            Some(QuietViolation::MissingEdge { edge }) => Some(edge),
            Some(QuietViolation::CrowdedQuadruple { quadruple }) => Some(quadruple),
            _ => None,
        }
    }
}

fn require_two_dimensional(g: &Complex) -> Result<()> {
    if g.dim() != 2 {
        return Err(Error::WrongDimension {
            expected: 2,
            found: g.dim(),
        });
    }
    g.require_nonvoid()
}

/// Complete 1-skeleton, and every 4-set of vertices holds at most two facets.
pub fn is_quiet(g: &Complex) -> Result<QuietVerdict> {
    require_two_dimensional(g)?;
    let verdict = |violation| QuietVerdict {
        quiet: false,
        violation: Some(violation),
    };
    if g.complement().is_void() {
        return Ok(verdict(QuietViolation::NotProper));
    }
    if let Some(edge) = g.ambient().k_subsets(2).filter(|&e| !g.is_face(e)).min() {
        return Ok(verdict(QuietViolation::MissingEdge { edge }));
    }
    let crowded = g
        .ambient()
        .k_subsets(4)
        .filter(|&q| q.facets_of_boundary().filter(|&t| g.has_facet(t)).count() >= 3)
        .min();
    if let Some(quadruple) = crowded {
        return Ok(verdict(QuietViolation::CrowdedQuadruple { quadruple }));
    }
    Ok(QuietVerdict {
        quiet: true,
        violation: None,
    })
}

/// Builds the echo of a pure 2-complex on `[k]`, a 3-complex on `[2k]`.
pub fn echo(g: &Complex) -> Result<Complex> {
    require_two_dimensional(g)?;
    let k = g.n();
    let pairs = PairPartition::new(k)?;
    let mut facets = Vec::new();
    for edge in g.faces_of_size(2) {
        let ends = edge.to_vec();
        facets.push(pairs.class(ends[0]).union(pairs.class(ends[1])));
    }
    for &t in g.facets() {
        for x in t.vertices() {
            let others = t.without(x).to_vec();
            facets.extend(cross_block(&pairs, x, others[0], others[1]));
        }
    }
    Complex::new(2 * k, 3, facets)
}

/// `{C_x ∪ {i, j} : i ∈ C_y, j ∈ C_z}` in lexicographic order.
fn cross_block(pairs: &PairPartition, x: u32, y: u32, z: u32) -> Vec<Face> {
    let base = pairs.class(x);
    let mut block: Vec<Face> = pairs
        .class(y)
        .vertices()
        .flat_map(|i| pairs.class(z).vertices().map(move |j| base.with(i).with(j)))
        .collect();
    block.sort_unstable();
    block
}

/// How a shelling step of a 2-complex meets the edges placed before it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StepClass {
    /// First facet: all three edges are new.
    FirstFacet,
    /// Two new edges; `old_edge` was already present.
    TwoNewEdges { old_edge: Face },
    /// One new edge; the other two were already present.
    OneNewEdge {
        new_edge: Face,
        old_edges: [Face; 2],
    },
    /// No new edge: the facet closes up a hole.
    BoundaryGlued,
}

impl StepClass {
    /// Colour tag used in annotated shelling listings.
    pub fn color(&self) -> &'static str {
        match self {
            StepClass::FirstFacet => "red",
            StepClass::TwoNewEdges { .. } => "green",
            StepClass::OneNewEdge { .. } => "black",
            StepClass::BoundaryGlued => "blue",
        }
    }
}

impl fmt::Display for StepClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepClass::FirstFacet => f.write_str("first facet"),
            StepClass::TwoNewEdges { old_edge } => write!(f, "two new edges, old edge {old_edge}"),
            StepClass::OneNewEdge { new_edge, .. } => write!(f, "one new edge {new_edge}"),
            StepClass::BoundaryGlued => f.write_str("boundary glued"),
        }
    }
}

/// Classifies each step of a valid shelling of a 2-complex by its new edges.
pub fn classify_steps(order: &ShellingOrder) -> Result<Vec<StepClass>> {
    require_two_dimensional(order.complex())?;
    if let Some(step) = verify_shelling(order).failing_step {
        return Err(Error::InvalidShelling { step });
    }
    let mut seen: HashSet<Face> = HashSet::new();
    let mut out = Vec::with_capacity(order.len());
    for &t in order.steps() {
        let (old, new): (Vec<Face>, Vec<Face>) = t.k_subsets(2).partition(|e| seen.contains(e));
        let class = match new.len() {
            3 => StepClass::FirstFacet,
            2 => StepClass::TwoNewEdges { old_edge: old[0] },
            1 => {
                let mut old_edges = [old[0], old[1]];
                old_edges.sort_unstable();
                StepClass::OneNewEdge {
                    new_edge: new[0],
                    old_edges,
                }
            }
            _ => StepClass::BoundaryGlued,
        };
        seen.extend(new);
        out.push(class);
    }
    Ok(out)
}

/// One block of the generated echo shelling, arising from a single step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EchoBlock {
    pub source: Face,
    pub class: StepClass,
    pub start: usize,
    pub len: usize,
}

#[derive(Clone, Debug)]
pub struct EchoShelling {
    pub order: ShellingOrder,
    pub blocks: Vec<EchoBlock>,
    pub boundary_glued_steps: Vec<usize>,
}

/// Facets of the echo contributed by step `t`, in shelling order.
fn block_for(pairs: &PairPartition, t: Face, class: &StepClass) -> Vec<Face> {
    let c = |i: u32| pairs.class(i);
    let mut out = Vec::new();
    match *class {
        StepClass::FirstFacet => {
            let v = t.to_vec();
            let (a, b, cc) = (v[0], v[1], v[2]);
            out.extend(cross_block(pairs, a, b, cc));
            out.extend(cross_block(pairs, b, a, cc));
            out.extend(cross_block(pairs, cc, a, b));
            out.push(c(a).union(c(b)));
            out.push(c(a).union(c(cc)));
            out.push(c(b).union(c(cc)));
        }
        StepClass::TwoNewEdges { old_edge } => {
            let ab = old_edge.to_vec();
            let (a, b) = (ab[0], ab[1]);
            let cc = t.difference(old_edge).to_vec()[0];
            out.extend(cross_block(pairs, a, b, cc));
            out.extend(cross_block(pairs, b, a, cc));
            out.extend(cross_block(pairs, cc, a, b));
            out.push(c(a).union(c(cc)));
            out.push(c(b).union(c(cc)));
        }
        StepClass::OneNewEdge { new_edge, .. } => {
            let ac = new_edge.to_vec();
            let (a, cc) = (ac[0], ac[1]);
            let b = t.difference(new_edge).to_vec()[0];
            out.extend(cross_block(pairs, b, a, cc));
            out.extend(cross_block(pairs, a, b, cc));
            out.extend(cross_block(pairs, cc, a, b));
            out.push(c(a).union(c(cc)));
        }
        StepClass::BoundaryGlued => unreachable!("rejected before block generation"),
    }
    out
}

/// Shelling of `echo(g)` assembled block by block from a shelling of a
/// contractible 2-complex `g`.
///
/// Fails with [`Error::NotContractible`] at the first step that adds no new
/// edge. The generated order is verified before it is returned.
pub fn echo_shelling(order: &ShellingOrder) -> Result<EchoShelling> {
    let classes = classify_steps(order)?;
    if let Some(step) = classes.iter().position(|c| *c == StepClass::BoundaryGlued) {
        return Err(Error::NotContractible {
            step,
            facet: order.steps()[step],
        });
    }
    let g = order.complex();
    let pairs = PairPartition::new(g.n())?;
    let target = echo(g)?;

    let mut steps = Vec::with_capacity(target.facet_count());
    let mut blocks = Vec::with_capacity(classes.len());
    for (&t, class) in order.steps().iter().zip(&classes) {
        let block = block_for(&pairs, t, class);
        blocks.push(EchoBlock {
            source: t,
            class: *class,
            start: steps.len(),
            len: block.len(),
        });
        steps.extend(block);
    }

    let generated = ShellingOrder::new(target, steps)
        .map_err(|e| Error::Internal(format!("echo block generation: {e}")))?;
    let report = verify_shelling(&generated);
    if !report.valid {
        return Err(Error::Internal(format!(
            "generated echo order fails at step {:?}",
            report.failing_step
        )));
    }
    Ok(EchoShelling {
        order: generated,
        blocks,
        boundary_glued_steps: report.boundary_glued_steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(n: u32, d: usize, facets: &[&[u32]]) -> Complex {
        Complex::new(n, d, facets.iter().map(|f| Face::of(f))).unwrap()
    }

    #[test]
    fn echo_of_triangle() {
        let g = cx(3, 2, &[&[1, 2, 3]]);
        let e = echo(&g).unwrap();
        assert_eq!(e.facet_count(), 15);
        let brute: Vec<Face> = Face::range(6)
            .k_subsets(4)
            .filter(|&f| g.is_face(PairPartition::new(3).unwrap().support(f)))
            .collect();
        assert_eq!(brute.len(), 15);
    }

    #[test]
    fn echo_rejects_wrong_dimension() {
        let g = cx(4, 1, &[&[1, 2]]);
        assert!(matches!(echo(&g), Err(Error::WrongDimension { .. })));
        let big = Complex::new(33, 2, [Face::of(&[1, 2, 33])]).unwrap();
        assert!(matches!(echo(&big), Err(Error::AmbientTooLarge { .. })));
    }

    #[test]
    fn quiet_examples() {
        let three = cx(4, 2, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4]]);
        let v = is_quiet(&three).unwrap();
        assert!(!v.quiet);
        assert_eq!(v.witness(), Some(Face::of(&[1, 2, 3, 4])));
        let single = cx(3, 2, &[&[1, 2, 3]]);
        let v = is_quiet(&single).unwrap();
        assert_eq!(v.violation, Some(QuietViolation::NotProper));
        let path = cx(4, 2, &[&[1, 2, 3]]);
        assert!(matches!(
            is_quiet(&path).unwrap().violation,
            Some(QuietViolation::MissingEdge { .. })
        ));
    }

    #[test]
    fn sphere_classification_and_failure() {
        let g = cx(4, 2, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]);
        let o = ShellingOrder::new(g.clone(), g.facets().to_vec()).unwrap();
        let classes = classify_steps(&o).unwrap();
        assert_eq!(classes[0], StepClass::FirstFacet);
        assert_eq!(
            classes[1],
            StepClass::TwoNewEdges {
                old_edge: Face::of(&[1, 2])
            }
        );
        assert_eq!(classes[3], StepClass::BoundaryGlued);
        assert!(matches!(
            echo_shelling(&o),
            Err(Error::NotContractible { step: 3, .. })
        ));
    }

    #[test]
    fn triangle_echo_shelling() {
        let g = cx(3, 2, &[&[1, 2, 3]]);
        let o = ShellingOrder::new(g.clone(), g.facets().to_vec()).unwrap();
        let s = echo_shelling(&o).unwrap();
        assert_eq!(s.order.len(), 15);
        assert!(s.order.is_complete());
        assert_eq!(s.blocks.len(), 1);
    }
}
