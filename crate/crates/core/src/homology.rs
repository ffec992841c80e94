//! Reduced simplicial homology over prime fields and Reisner's criterion.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::face::Face;

/// Largest supported characteristic.
pub const MAX_PRIME: u32 = 251;

/// The field `F_p` with elements stored as `u32` residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<PrimeField> {
        if p < 2
            || (2..p)
                .take_while(|q| q * q <= p)
                .any(|q| p.is_multiple_of(q))
        {
            return Err(Error::NotPrime(p));
        }
        if p > MAX_PRIME {
            return Err(Error::PrimeTooLarge(p));
        }
        Ok(PrimeField { p })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn reduce(&self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        (a + b) % self.p
    }

    fn sub(&self, a: u32, b: u32) -> u32 {
        (a + self.p - b) % self.p
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        a * b % self.p
    }

    fn inv(&self, a: u32) -> u32 {
        debug_assert!(a != 0);
        // a^(p-2)
        let (mut base, mut exp, mut acc) = (a, self.p - 2, 1u32);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Rank of a dense row-major matrix by Gaussian elimination.
    pub fn rank(&self, rows: usize, cols: usize, mut data: Vec<u32>) -> usize {
        debug_assert_eq!(data.len(), rows * cols);
        let mut rank = 0;
        for col in 0..cols {
            let Some(pivot) = (rank..rows).find(|&r| data[r * cols + col] != 0) else {
                continue;
            };
            if pivot != rank {
                for c in 0..cols {
                    data.swap(pivot * cols + c, rank * cols + c);
                }
            }
            let inv = self.inv(data[rank * cols + col]);
            for c in col..cols {
                data[rank * cols + c] = self.mul(data[rank * cols + c], inv);
            }
            for r in rank + 1..rows {
                let factor = data[r * cols + col];
                if factor == 0 {
                    continue;
                }
                for c in col..cols {
                    let v = self.mul(factor, data[rank * cols + c]);
                    data[r * cols + c] = self.sub(data[r * cols + c], v);
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }
}

/// Sparse column: `(row, coefficient)` pairs.
type Column = Vec<(usize, u32)>;

/// Augmented simplicial chain complex over `F_p`.
///
/// `bases[k]` lists the faces with `k` vertices (degree `k - 1`) in
/// lexicographic order; `boundaries[k]` maps degree `k - 1` to degree `k - 2`
/// for `k >= 1`, with `boundaries[0]` empty.
#[derive(Clone, Debug)]
pub struct ChainComplexFp {
    field: PrimeField,
    bases: Vec<Vec<Face>>,
    boundaries: Vec<Vec<Column>>,
}

impl ChainComplexFp {
    pub fn new(c: &Complex, field: PrimeField) -> ChainComplexFp {
        let mut bases: Vec<Vec<Face>> = vec![Vec::new(); c.rank() + 1];
        for f in c.face_set().iter() {
            bases[f.len()].push(f);
        }
        for b in &mut bases {
            b.sort_unstable();
        }
        let mut boundaries = vec![Vec::new()];
        for k in 1..bases.len() {
            let index: HashMap<Face, usize> = bases[k - 1]
                .iter()
                .enumerate()
                .map(|(i, &f)| (f, i))
                .collect();
            let cols = bases[k]
                .iter()
                .map(|&f| {
                    f.vertices()
                        .enumerate()
                        .map(|(pos, v)| {
                            let sign = if pos % 2 == 0 { 1 } else { -1 };
                            (index[&f.without(v)], field.reduce(sign))
                        })
                        .collect()
                })
                .collect();
            boundaries.push(cols);
        }
        ChainComplexFp {
            field,
            bases,
            boundaries,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// Basis of chains in degree `deg >= -1`.
    pub fn basis(&self, deg: isize) -> &[Face] {
        self.bases
            .get((deg + 1) as usize)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Rank of the boundary map out of degree `deg`.
    pub fn boundary_rank(&self, deg: isize) -> usize {
        let k = (deg + 1) as usize;
        if k == 0 || k >= self.bases.len() {
            return 0;
        }
        let rows = self.bases[k - 1].len();
        let cols = self.bases[k].len();
        let mut dense = vec![0u32; rows * cols];
        for (c, col) in self.boundaries[k].iter().enumerate() {
            for &(r, x) in col {
                dense[r * cols + c] = x;
            }
        }
        self.field.rank(rows, cols, dense)
    }

    /// Checks that every composite of consecutive boundary maps vanishes.
    pub fn boundary_squares_to_zero(&self) -> bool {
        (2..self.bases.len()).all(|k| {
            self.boundaries[k].iter().all(|col| {
                let mut acc: HashMap<usize, u32> = HashMap::new();
                for &(mid, x) in col {
                    for &(row, y) in &self.boundaries[k - 1][mid] {
                        let e = acc.entry(row).or_insert(0);
                        *e = self.field.add(*e, self.field.mul(x, y));
                    }
                }
                acc.values().all(|&v| v == 0)
            })
        })
    }

    pub fn betti(&self) -> BettiVector {
        let top = self.bases.len() as isize - 2;
        let values = (-1..=top)
            .map(|deg| {
                let dim = self.basis(deg).len();
                (dim - self.boundary_rank(deg) - self.boundary_rank(deg + 1)) as u64
            })
            .collect();
        BettiVector {
            prime: self.field.p,
            values,
        }
    }
}

/// Reduced Betti numbers `(β_{-1}, β_0, ..., β_d)` over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiVector {
    pub prime: u32,
    pub values: Vec<u64>,
}

impl BettiVector {
    /// `β_i` for `i >= -1`; zero outside the stored range.
    pub fn get(&self, i: isize) -> u64 {
        if i < -1 {
            return 0;
        }
        self.values.get((i + 1) as usize).copied().unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.values.iter().all(|&b| b == 0)
    }

    /// `sum_i (-1)^i β_i` over `i >= -1`.
    pub fn euler_characteristic(&self) -> i64 {
        self.values
            .iter()
            .enumerate()
            .map(|(idx, &b)| if idx % 2 == 1 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(u64::to_string).collect();
        write!(f, "({}) over F_{}", parts.join(","), self.prime)
    }
}

pub fn betti_reduced(c: &Complex, p: u32) -> Result<BettiVector> {
    let field = PrimeField::new(p)?;
    let chain = ChainComplexFp::new(c, field);
    debug_assert!(chain.boundary_squares_to_zero());
    Ok(chain.betti())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmVerdict {
    pub cohen_macaulay: bool,
    /// A face whose link has homology below its top degree, and that degree.
    pub witness: Option<(Face, isize)>,
}

/// Reisner's test: every link has vanishing reduced homology below its dimension.
pub fn reisner_cm(c: &Complex, p: u32) -> Result<CmVerdict> {
    let field = PrimeField::new(p)?;
    c.require_nonvoid()?;
    let mut faces: Vec<Face> = c
        .face_set()
        .iter()
        .filter(|&f| f.len() < c.rank())
        .collect();
    faces.sort_unstable_by_key(|&f| (f.len(), f));
    for f in faces {
        let link = c.link(f)?;
        let betti = ChainComplexFp::new(&link, field).betti();
        if let Some(deg) = (-1..link.dim()).find(|&i| betti.get(i) != 0) {
            return Ok(CmVerdict {
                cohen_macaulay: false,
                witness: Some((f, deg)),
            });
        }
    }
    Ok(CmVerdict {
        cohen_macaulay: true,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(251).is_ok());
        assert!(matches!(PrimeField::new(1), Err(Error::NotPrime(1))));
        assert!(matches!(PrimeField::new(9), Err(Error::NotPrime(9))));
        assert!(matches!(
            PrimeField::new(257),
            Err(Error::PrimeTooLarge(257))
        ));
    }

    #[test]
    fn inverses() {
        let f = PrimeField::new(251).unwrap();
        for a in 1..251 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn simplex_is_acyclic_and_cm() {
        let c = Complex::new(4, 3, [Face::of(&[1, 2, 3, 4])]).unwrap();
        for p in [2, 3, 7] {
            assert!(betti_reduced(&c, p).unwrap().is_acyclic());
            assert!(reisner_cm(&c, p).unwrap().cohen_macaulay);
        }
    }

    #[test]
    fn circle_has_one_loop() {
        let c = Complex::skeleton(1, 3).unwrap();
        let b = betti_reduced(&c, 2).unwrap();
        assert_eq!(b.values, vec![0, 0, 1]);
    }

    #[test]
    fn two_points_are_disconnected() {
        let c = Complex::new(2, 0, [Face::of(&[1]), Face::of(&[2])]).unwrap();
        assert_eq!(betti_reduced(&c, 3).unwrap().values, vec![0, 1]);
        assert!(reisner_cm(&c, 3).unwrap().cohen_macaulay);
    }

    #[test]
    fn bowtie_is_not_cm() {
        let c = Complex::new(5, 2, [Face::of(&[1, 2, 3]), Face::of(&[3, 4, 5])]).unwrap();
        let v = reisner_cm(&c, 2).unwrap();
        assert!(!v.cohen_macaulay);
        assert_eq!(v.witness, Some((Face::of(&[3]), 0)));
    }

    #[test]
    fn rejects_composite_modulus() {
        let c = Complex::skeleton(1, 3).unwrap();
        assert!(matches!(betti_reduced(&c, 4), Err(Error::NotPrime(4))));
        assert!(matches!(reisner_cm(&c, 6), Err(Error::NotPrime(6))));
    }
}
