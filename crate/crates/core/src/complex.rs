//! Pure simplicial complexes inside a skeleton `S_{d,n}`.

use std::collections::HashSet;
use std::fmt;

use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::face::{binomial, Face, MAX_VERTEX};

/// Below this ambient size the f-vector is computed by testing every small
/// subset of the ambient set; above it, by deduplicating facet powersets.
const SUBSET_SCAN_LIMIT: u32 = 24;

/// A pure simplicial complex given by its facets.
///
/// Every facet has `rank` vertices (dimension `rank - 1`) and lies inside the
/// ambient vertex set. The ambient set is `[n]` for complexes built with
/// [`Complex::new`]; links keep the original ids and drop the link face from
/// the ambient set instead of relabelling.
///
/// A complex with zero facets is representable (a complement may be empty)
/// but rejected by operations that need a pure operand.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Complex {
    ambient: Face,
    rank: usize,
    facets: Vec<Face>,
}

impl Complex {
    /// Complex on `[n]` of dimension `d`.
    pub fn new<I>(n: u32, d: usize, facets: I) -> Result<Complex>
    where
        I: IntoIterator<Item = Face>,
    {
        if n > MAX_VERTEX {
            return Err(Error::AmbientTooLarge { n: n as u64 });
        }
        if d >= n as usize {
            return Err(Error::DimensionTooLarge { d, n: n as usize });
        }
        Complex::with_ambient(Face::range(n), d + 1, facets)
    }

    /// Complex on an arbitrary ambient vertex set with facets of `rank` vertices.
    pub fn with_ambient<I>(ambient: Face, rank: usize, facets: I) -> Result<Complex>
    where
        I: IntoIterator<Item = Face>,
    {
        let mut facets: Vec<Face> = facets.into_iter().collect();
        for &f in &facets {
            if f.len() != rank {
                return Err(Error::NotPure {
                    facet: f,
                    expected: rank,
                    found: f.len(),
                });
            }
            if !f.is_subset(ambient) {
                return Err(Error::OutsideAmbient { facet: f, ambient });
            }
        }
        facets.sort_unstable();
        if let Some(w) = facets.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateFacet(w[0]));
        }
        Ok(Complex {
            ambient,
            rank,
            facets,
        })
    }

    pub fn ambient(&self) -> Face {
        self.ambient
    }

    /// Ambient vertex count `n` for complexes on `[n]`; in general the
    /// largest ambient id.
    pub fn n(&self) -> u32 {
        self.ambient.max_vertex()
    }

    /// Number of vertices per facet (`d + 1`).
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> isize {
        self.rank as isize - 1
    }

    /// Facets in lexicographic order.
    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn has_facet(&self, f: Face) -> bool {
        self.facets.binary_search(&f).is_ok()
    }

    pub fn is_face(&self, f: Face) -> bool {
        self.facets.iter().any(|&g| f.is_subset(g))
    }

    /// Vertices actually used by some facet.
    pub fn support(&self) -> Face {
        self.facets.iter().fold(Face::EMPTY, |acc, &f| acc.union(f))
    }

    pub(crate) fn require_nonvoid(&self) -> Result<()> {
        if self.is_void() {
            Err(Error::EmptyComplex)
        } else {
            Ok(())
        }
    }

    /// Every face, including the empty one, in a hash set.
    pub fn face_set(&self) -> FaceSet {
        let mut faces = HashSet::new();
        faces.insert(Face::EMPTY);
        for &f in &self.facets {
            faces.extend(f.subsets());
        }
        FaceSet { faces }
    }

    /// Faces with exactly `size` vertices, in lexicographic order.
    pub fn faces_of_size(&self, size: usize) -> Vec<Face> {
        let mut out: Vec<Face> = if size == self.rank {
            self.facets.clone()
        } else {
            let mut seen = HashSet::new();
            for &f in &self.facets {
                seen.extend(f.k_subsets(size));
            }
            seen.into_iter().collect()
        };
        out.sort_unstable();
        out
    }

    /// The `d`-skeleton `S_{d,n}` of the `(n-1)`-simplex.
    pub fn skeleton(d: usize, n: u32) -> Result<Complex> {
        if n > MAX_VERTEX {
            return Err(Error::AmbientTooLarge { n: n as u64 });
        }
        if d >= n as usize {
            return Err(Error::DimensionTooLarge { d, n: n as usize });
        }
        Complex::with_ambient(Face::range(n), d + 1, Face::range(n).k_subsets(d + 1))
    }

    pub fn f_vector(&self) -> FVector {
        if self.ambient.max_vertex() <= SUBSET_SCAN_LIMIT {
            self.f_vector_by_subset_scan()
        } else {
            self.f_vector_by_powersets()
        }
    }

    pub(crate) fn f_vector_by_subset_scan(&self) -> FVector {
        let mut entries = vec![1u64];
        for size in 1..=self.rank {
            let count = self
                .ambient
                .k_subsets(size)
                .filter(|&s| self.is_face(s))
                .count();
            entries.push(count as u64);
        }
        FVector(entries)
    }

    pub(crate) fn f_vector_by_powersets(&self) -> FVector {
        let mut entries = vec![0u64; self.rank + 1];
        for f in self.face_set().faces {
            entries[f.len()] += 1;
        }
        entries[0] = 1;
        FVector(entries)
    }

    pub fn h_vector(&self) -> HVector {
        h_vector(&self.f_vector(), self.dim())
    }

    /// Inclusion-minimal subsets of the ambient set that are not faces.
    ///
    /// Every `(d+2)`-set is a non-face, so no minimal non-face is larger;
    /// candidates of size `s` are grown from faces of size `s - 1`.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        let faces = self.face_set();
        let mut out: Vec<Face> = self
            .ambient
            .vertices()
            .map(Face::vertex)
            .filter(|&v| !faces.contains(v))
            .collect();
        let mut layer: Vec<Face> = faces.iter().filter(|f| f.len() == 1).collect();
        for _size in 2..=self.rank + 1 {
            let mut next = Vec::new();
            for &base in &layer {
                let top = base.max_vertex();
                for v in self.ambient.vertices().filter(|&v| v > top) {
                    let cand = base.with(v);
                    if faces.contains(cand) {
                        next.push(cand);
                    } else if cand.facets_of_boundary().all(|b| faces.contains(b)) {
                        out.push(cand);
                    }
                }
            }
            layer = next;
        }
        out.sort_unstable();
        out
    }

    /// Complement complex: facets of `S_{d,n}` that are not facets of `self`.
    pub fn complement(&self) -> Complex {
        let facets = self
            .ambient
            .k_subsets(self.rank)
            .filter(|&f| !self.has_facet(f));
        Complex::with_ambient(self.ambient, self.rank, facets)
            .expect("complement facets are pure and distinct")
    }

    /// Link of `face`; vertices keep their ids and `face` leaves the ambient set.
    pub fn link(&self, face: Face) -> Result<Complex> {
        self.require_nonvoid()?;
        if !self.is_face(face) {
            return Err(Error::NotAFace(face));
        }
        let facets = self
            .facets
            .iter()
            .filter(|&&f| face.is_subset(f))
            .map(|&f| f.difference(face));
        Complex::with_ambient(
            self.ambient.difference(face),
            self.rank - face.len(),
            facets,
        )
    }

    /// Cone with apex `n + 1`.
    pub fn cone(&self) -> Result<Complex> {
        self.require_nonvoid()?;
        let apex = self.n() + 1;
        if apex > MAX_VERTEX {
            return Err(Error::AmbientTooLarge { n: apex as u64 });
        }
        let facets = self.facets.iter().map(|&f| f.with(apex));
        Complex::with_ambient(self.ambient.with(apex), self.rank + 1, facets)
    }

    /// Pure `k`-dimensional complex of all `k`-faces.
    pub fn sub_skeleton(&self, k: usize) -> Result<Complex> {
        self.require_nonvoid()?;
        if k as isize > self.dim() {
            return Err(Error::SkeletonOutOfRange { k, d: self.dim() });
        }
        Complex::with_ambient(self.ambient, k + 1, self.faces_of_size(k + 1))
    }
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Complex")
            .field("ambient", &self.ambient)
            .field("dim", &self.dim())
            .field("facets", &self.facets)
            .finish()
    }
}

/// Hash set of all faces of a complex, empty face included.
#[derive(Clone, Debug)]
pub struct FaceSet {
    faces: HashSet<Face>,
}

impl FaceSet {
    pub fn contains(&self, f: Face) -> bool {
        self.faces.contains(&f)
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Face> + '_ {
        self.faces.iter().copied()
    }

    /// Is `n` a minimal non-face: not a face, yet every maximal proper subset is?
    pub fn is_minimal_nonface(&self, n: Face) -> bool {
        !self.contains(n) && n.facets_of_boundary().all(|b| self.contains(b))
    }

    /// Number of minimal non-faces contained in `g`.
    pub fn minimal_nonfaces_within(&self, g: Face) -> usize {
        g.subsets().filter(|&s| self.is_minimal_nonface(s)).count()
    }
}

/// Face counts `(f_{-1}, f_0, ..., f_d)`; `f_{-1} = 1` counts the empty face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    /// `f_i` for `i >= -1`.
    pub fn get(&self, i: isize) -> u64 {
        self.0.get((i + 1) as usize).copied().unwrap_or(0)
    }

    /// Top dimension `d`.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 2
    }

    /// `sum_i (-1)^i f_i` over `i >= -1`, the reduced Euler characteristic.
    pub fn reduced_euler_characteristic<T>(&self) -> T
    where
        T: Signed + Copy + From<i64>,
    {
        self.0.iter().enumerate().fold(T::zero(), |acc, (idx, &f)| {
            let term = T::from(f as i64);
            // idx = i + 1
            if idx % 2 == 1 {
                acc + term
            } else {
                acc - term
            }
        })
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.0.iter())
    }
}

/// `(h_0, ..., h_{d+1})`, generic over a signed integer scalar.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct HVector<T = i64>(pub Vec<T>);

impl<T: Copy> HVector<T> {
    pub fn entries(&self) -> &[T] {
        &self.0
    }

    /// `h_{d+1}`, the number of steps glued along their whole boundary in any shelling.
    pub fn last(&self) -> T {
        *self.0.last().expect("h-vector has at least one entry")
    }
}

impl<T: fmt::Display> fmt::Display for HVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, self.0.iter())
    }
}

fn write_tuple<I: Iterator<Item = D>, D: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    items: I,
) -> fmt::Result {
    f.write_str("(")?;
    for (i, x) in items.enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

/// `h_i = sum_{j=0}^{i} (-1)^{i-j} C(d+1-j, i-j) f_{j-1}` for `0 <= i <= d+1`.
pub fn h_vector<T>(f: &FVector, d: isize) -> HVector<T>
where
    T: Signed + Copy + From<i64>,
{
    let top = (d + 1) as usize;
    let h = (0..=top)
        .map(|i| {
            (0..=i).fold(T::zero(), |acc, j| {
                let c = T::from(binomial((top - j) as u64, (i - j) as u64) as i64);
                let term = c * T::from(f.get(j as isize - 1) as i64);
                if (i - j) % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect();
    HVector(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(n: u32, d: usize, facets: &[&[u32]]) -> Complex {
        Complex::new(n, d, facets.iter().map(|f| Face::of(f))).unwrap()
    }

    #[test]
    fn skeleton_examples() {
        let s = Complex::skeleton(1, 3).unwrap();
        assert_eq!(
            s.facets(),
            &[Face::of(&[1, 2]), Face::of(&[1, 3]), Face::of(&[2, 3])]
        );
        assert_eq!(Complex::skeleton(3, 16).unwrap().facet_count(), 1820);
        assert_eq!(Complex::skeleton(2, 4).unwrap().facet_count(), 4);
        assert!(matches!(
            Complex::skeleton(3, 3),
            Err(Error::DimensionTooLarge { .. })
        ));
        assert!(matches!(
            Complex::skeleton(1, 65),
            Err(Error::AmbientTooLarge { .. })
        ));
    }

    #[test]
    fn construction_rejects_bad_input() {
        let mixed = Complex::new(4, 2, [Face::of(&[1, 2, 3]), Face::of(&[1, 4])]);
        assert!(matches!(mixed, Err(Error::NotPure { .. })));
        let dup = Complex::new(4, 2, [Face::of(&[1, 2, 3]), Face::of(&[3, 2, 1])]);
        assert!(matches!(dup, Err(Error::DuplicateFacet(_))));
        let outside = Complex::new(4, 2, [Face::of(&[1, 2, 5])]);
        assert!(matches!(outside, Err(Error::OutsideAmbient { .. })));
    }

    #[test]
    fn f_vector_of_simplex() {
        assert_eq!(cx(3, 2, &[&[1, 2, 3]]).f_vector().0, vec![1, 3, 3, 1]);
    }

    #[test]
    fn f_vector_routes_agree() {
        let c = cx(7, 2, &[&[1, 2, 3], &[2, 3, 4], &[4, 5, 7], &[1, 6, 7]]);
        assert_eq!(c.f_vector_by_subset_scan(), c.f_vector_by_powersets());
    }

    #[test]
    fn h_vector_examples() {
        let h: HVector = h_vector(&FVector(vec![1, 16, 120, 280, 280]), 3);
        assert_eq!(h.0, vec![1, 12, 78, 84, 105]);
        let h: HVector = h_vector(&FVector(vec![1, 8, 28, 21]), 2);
        assert_eq!(h.0, vec![1, 5, 15, 0]);
        let h: HVector<i128> = h_vector(&FVector(vec![1, 4, 6, 4]), 2);
        assert_eq!(h.0, vec![1, 1, 1, 1]);
    }

    #[test]
    fn minimal_nonfaces_examples() {
        assert!(cx(3, 2, &[&[1, 2, 3]]).minimal_nonfaces().is_empty());
        assert_eq!(
            cx(4, 2, &[&[1, 2, 3]]).minimal_nonfaces(),
            vec![Face::of(&[4])]
        );
        let austere = cx(6, 3, &[&[1, 2, 3, 4], &[1, 2, 5, 6], &[3, 4, 5, 6]]);
        let sizes: Vec<usize> = austere.minimal_nonfaces().iter().map(|f| f.len()).collect();
        assert!(!sizes.is_empty());
        assert!(sizes.iter().all(|&s| (2..=5).contains(&s) && s != 4));
    }

    #[test]
    fn complement_examples() {
        assert!(Complex::skeleton(3, 16).unwrap().complement().is_void());
        let c = cx(4, 2, &[&[1, 2, 3]]).complement();
        assert_eq!(
            c.facets(),
            &[
                Face::of(&[1, 2, 4]),
                Face::of(&[1, 3, 4]),
                Face::of(&[2, 3, 4])
            ]
        );
        assert_eq!(c.complement(), cx(4, 2, &[&[1, 2, 3]]));
    }

    #[test]
    fn link_examples() {
        let c = cx(4, 2, &[&[1, 2, 3], &[1, 2, 4]]);
        assert_eq!(c.link(Face::EMPTY).unwrap(), c);
        let l = c.link(Face::of(&[1])).unwrap();
        assert_eq!(l.facets(), &[Face::of(&[2, 3]), Face::of(&[2, 4])]);
        assert_eq!(l.ambient(), Face::of(&[2, 3, 4]));
        assert!(matches!(c.link(Face::of(&[3, 4])), Err(Error::NotAFace(_))));
        let facet_link = c.link(Face::of(&[1, 2, 3])).unwrap();
        assert_eq!(facet_link.dim(), -1);
        assert_eq!(facet_link.facets(), &[Face::EMPTY]);
    }

    #[test]
    fn cone_and_link_round_trip() {
        let c = cx(4, 2, &[&[1, 2, 3], &[2, 3, 4]]);
        let k = c.cone().unwrap();
        assert_eq!(k.n(), 5);
        assert_eq!(k.dim(), 3);
        assert_eq!(k.link(Face::of(&[5])).unwrap(), c);
        let void = Complex::new(4, 2, []).unwrap();
        assert!(matches!(void.cone(), Err(Error::EmptyComplex)));
        let top = Complex::skeleton(1, 64).unwrap();
        assert!(matches!(top.cone(), Err(Error::AmbientTooLarge { .. })));
    }

    #[test]
    fn sub_skeleton_examples() {
        let s = Complex::skeleton(3, 16).unwrap();
        assert_eq!(
            s.sub_skeleton(1).unwrap(),
            Complex::skeleton(1, 16).unwrap()
        );
        assert_eq!(s.sub_skeleton(3).unwrap(), s);
        assert!(s.sub_skeleton(4).is_err());
    }
}
