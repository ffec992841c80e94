//! Faces as fixed-width vertex sets.
//!
//! Vertex ids are 1-based and capped at [`MAX_VERTEX`]; vertex `v` lives in
//! bit `v - 1` of a `u64`, so every set operation is a single word operation.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest admissible vertex id.
pub const MAX_VERTEX: u32 = 64;

/// A finite set of vertex ids drawn from `1..=64`.
///
/// Faces order lexicographically by their ascending vertex tuples, so
/// `(1,2,7,15) < (1,2,8) < (1,3)`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    /// Builds a face from vertex ids, rejecting ids outside `1..=64` and repeats.
    pub fn from_vertices<I>(vertices: I) -> Result<Face>
    where
        I: IntoIterator<Item = u32>,
    {
        let mut bits = 0u64;
        for v in vertices {
            if v == 0 || v > MAX_VERTEX {
                return Err(Error::VertexOutOfRange { vertex: v as u64 });
            }
            let bit = 1u64 << (v - 1);
            if bits & bit != 0 {
                return Err(Error::DuplicateVertex { vertex: v });
            }
            bits |= bit;
        }
        Ok(Face(bits))
    }

    /// Panicking constructor for literals in tests and built-in tables.
    pub fn of(vertices: &[u32]) -> Face {
        Face::from_vertices(vertices.iter().copied()).expect("invalid face literal")
    }

    pub const fn from_bits(bits: u64) -> Face {
        Face(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The vertex set `[n] = {1, ..., n}`.
    pub fn range(n: u32) -> Face {
        assert!(n <= MAX_VERTEX, "ambient bound exceeded");
        if n == 64 {
            Face(u64::MAX)
        } else {
            Face((1u64 << n) - 1)
        }
    }

    pub fn vertex(v: u32) -> Face {
        assert!((1..=MAX_VERTEX).contains(&v), "vertex id out of range");
        Face(1u64 << (v - 1))
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: u32) -> bool {
        (1..=MAX_VERTEX).contains(&v) && self.0 & (1u64 << (v - 1)) != 0
    }

    pub const fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub const fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub const fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn with(self, v: u32) -> Face {
        self.union(Face::vertex(v))
    }

    pub fn without(self, v: u32) -> Face {
        self.difference(Face::vertex(v))
    }

    /// Largest vertex id, or 0 for the empty face.
    pub const fn max_vertex(self) -> u32 {
        64 - self.0.leading_zeros()
    }

    pub const fn min_vertex(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() + 1)
        }
    }

    /// Vertex ids in ascending order.
    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.vertices().collect()
    }

    /// Faces obtained by deleting exactly one vertex.
    pub fn facets_of_boundary(self) -> impl Iterator<Item = Face> {
        self.vertices().map(move |v| self.without(v))
    }

    /// Every subset, including `self` and the empty face.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// All `k`-element subsets, in colexicographic order.
    pub fn k_subsets(self, k: usize) -> KSubsets {
        KSubsets::new(self, k)
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vertices().cmp(other.vertices())
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Face {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.vertices())
    }
}

impl<'de> Deserialize<'de> for Face {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let ids = Vec::<u32>::deserialize(deserializer)?;
        Face::from_vertices(ids).map_err(serde::de::Error::custom)
    }
}

/// Ascending vertex iterator over a [`Face`].
#[derive(Clone)]
pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(v + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

/// Submask enumeration in increasing numeric order.
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(Face(cur))
    }
}

/// `k`-subsets of a ground set via Gosper's hack over positions.
pub struct KSubsets {
    ground: Vec<u32>,
    state: Option<u64>,
}

impl KSubsets {
    fn new(ground: Face, k: usize) -> Self {
        let ground: Vec<u32> = ground.vertices().collect();
        let state = if k > ground.len() {
            None
        } else if k == 0 {
            Some(0)
        } else {
            Some(u64::MAX >> (64 - k))
        };
        KSubsets { ground, state }
    }
}

impl Iterator for KSubsets {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        let cur = self.state?;
        let m = self.ground.len();
        let mut bits = 0u64;
        let mut rest = cur;
        while rest != 0 {
            let pos = rest.trailing_zeros() as usize;
            bits |= 1u64 << (self.ground[pos] - 1);
            rest &= rest - 1;
        }
        self.state = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let (r, overflow) = cur.overflowing_add(c);
            let next = if overflow || r == 0 {
                None
            } else {
                Some((((r ^ cur) >> 2) / c) | r)
            };
            next.filter(|&x| m == 64 || x >> m == 0)
        };
        Some(Face(bits))
    }
}

/// `C(n, k)` as `u64`; exact for every `n <= 64`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}
