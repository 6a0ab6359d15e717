//! Subspaces of Q^n with canonical bases.
//!
//! A subspace is stored as the RREF of any spanning set, with zero rows
//! dropped. Two subspaces are equal as sets if and only if they are equal as
//! values, so subspace identities (modular law, series stabilization, lattice
//! arguments) reduce to structural equality.

use crate::error::HyperlieError;
use crate::matrix::Matrix;
use crate::rational::Rational;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    /// dim x ambient, in RREF with full row rank.
    basis: Matrix,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
        }
    }

    /// Span of a list of vectors, canonicalized. Errors if any vector has the
    /// wrong length.
    pub fn span(vectors: &[Vec<Rational>], ambient: usize) -> Result<Self, HyperlieError> {
        for v in vectors {
            if v.len() != ambient {
                return Err(HyperlieError::VectorLength {
                    expected: ambient,
                    got: v.len(),
                });
            }
        }
        Ok(Self::from_rows(Matrix::from_rows(vectors.to_vec(), ambient)))
    }

    /// Row space of a matrix, canonicalized.
    pub fn from_rows(m: Matrix) -> Self {
        let ambient = m.cols();
        let red = m.rref();
        let rows: Vec<Vec<Rational>> = (0..red.rank).map(|i| red.matrix.row_vec(i)).collect();
        Subspace {
            ambient,
            basis: Matrix::from_rows(rows, ambient),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// The canonical (RREF) basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        (0..self.dim()).map(|i| self.basis.row_vec(i)).collect()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), HyperlieError> {
        if self.ambient != other.ambient {
            return Err(HyperlieError::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, HyperlieError> {
        self.check_ambient(other)?;
        Ok(Subspace::from_rows(self.basis.vstack(&other.basis)))
    }

    /// Intersection via the kernel of [A^T | -B^T]: a kernel vector (x, y)
    /// satisfies A^T x = B^T y, and that common value ranges over the
    /// intersection.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, HyperlieError> {
        self.check_ambient(other)?;
        let p = self.dim();
        let q = other.dim();
        if p == 0 || q == 0 {
            return Ok(Subspace::zero(self.ambient));
        }
        let mut m = Matrix::zeros(self.ambient, p + q);
        for i in 0..p {
            for c in 0..self.ambient {
                m[(c, i)] = self.basis[(i, c)].clone();
            }
        }
        for j in 0..q {
            for c in 0..self.ambient {
                m[(c, p + j)] = -other.basis[(j, c)].clone();
            }
        }
        let mut vectors = Vec::new();
        for w in m.kernel_basis() {
            let mut v = vec![Rational::zero(); self.ambient];
            for (i, coeff) in w[..p].iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                for c in 0..self.ambient {
                    let b = &self.basis[(i, c)];
                    if !b.is_zero() {
                        v[c] += b * coeff;
                    }
                }
            }
            vectors.push(v);
        }
        Subspace::span(&vectors, self.ambient)
    }

    /// Reduces `v` modulo the basis: subtracts, for each pivot column, the
    /// pivot row scaled by the coordinate. The result is zero exactly when
    /// `v` lies in the subspace.
    pub fn reduce(&self, v: &[Rational]) -> Result<Vec<Rational>, HyperlieError> {
        if v.len() != self.ambient {
            return Err(HyperlieError::VectorLength {
                expected: self.ambient,
                got: v.len(),
            });
        }
        let mut r = v.to_vec();
        for (row, &pivot) in self.pivot_columns().iter().enumerate() {
            let c = r[pivot].clone();
            if c.is_zero() {
                continue;
            }
            for j in 0..self.ambient {
                let b = &self.basis[(row, j)];
                if !b.is_zero() {
                    r[j] -= b * &c;
                }
            }
        }
        Ok(r)
    }

    pub fn contains_vec(&self, v: &[Rational]) -> Result<bool, HyperlieError> {
        Ok(self.reduce(v)?.iter().all(|x| x.is_zero()))
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool, HyperlieError> {
        self.check_ambient(other)?;
        for v in other.basis_vectors() {
            if !self.contains_vec(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Pivot columns of the canonical basis, in row order.
    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut pivots = Vec::with_capacity(self.dim());
        for i in 0..self.dim() {
            let p = (0..self.ambient)
                .find(|&j| !self.basis[(i, j)].is_zero())
                .expect("canonical basis has no zero rows");
            pivots.push(p);
        }
        pivots
    }

    /// A surjection Q^ambient -> Q^(ambient - dim) whose kernel is exactly
    /// this subspace: reduce modulo the basis, then keep the non-pivot
    /// coordinates.
    pub fn quotient_map(&self) -> Matrix {
        let pivots = self.pivot_columns();
        let is_pivot = {
            let mut v = vec![false; self.ambient];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut q = Matrix::zeros(self.ambient - self.dim(), self.ambient);
        let mut row = 0;
        for c in 0..self.ambient {
            if is_pivot[c] {
                continue;
            }
            q[(row, c)] = Rational::from_integer(1.into());
            for (brow, &p) in pivots.iter().enumerate() {
                let val = &self.basis[(brow, c)];
                if !val.is_zero() {
                    q[(row, p)] = -val.clone();
                }
            }
            row += 1;
        }
        q
    }

    /// Image of this subspace under a linear map given by a matrix acting on
    /// column vectors.
    pub fn map_through(&self, m: &Matrix) -> Result<Subspace, HyperlieError> {
        if m.cols() != self.ambient {
            return Err(HyperlieError::MatrixShape {
                rows: m.rows(),
                cols: m.cols(),
                expected_rows: m.rows(),
                expected_cols: self.ambient,
            });
        }
        let vectors: Vec<Vec<Rational>> = self
            .basis_vectors()
            .iter()
            .map(|v| m.apply(v))
            .collect();
        Subspace::span(&vectors, m.rows())
    }

    /// Null space of a matrix, canonicalized.
    pub fn kernel_of(m: &Matrix) -> Subspace {
        Subspace::span(&m.kernel_basis(), m.cols()).expect("kernel vectors have ambient length")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn v(entries: &[i64]) -> Vec<Rational> {
        entries.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn canonical_basis_is_order_independent() {
        let a = Subspace::span(&[v(&[1, 1, 0]), v(&[0, 1, 1])], 3).unwrap();
        let b = Subspace::span(&[v(&[0, 1, 1]), v(&[1, 2, 1]), v(&[1, 1, 0])], 3).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn kernel_is_canonical() {
        let m = Matrix::from_int_rows(&[&[1, 1]]);
        let k = Subspace::kernel_of(&m);
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis().row(0), &[int(1), int(-1)]);
    }

    #[test]
    fn sum_and_intersection() {
        let a = Subspace::span(&[v(&[1, 0, 0]), v(&[0, 1, 0])], 3).unwrap();
        let b = Subspace::span(&[v(&[0, 1, 0]), v(&[0, 0, 1])], 3).unwrap();
        let s = a.sum(&b).unwrap();
        assert!(s.is_full());
        let i = a.intersect(&b).unwrap();
        assert_eq!(i, Subspace::span(&[v(&[0, 1, 0])], 3).unwrap());
        assert_eq!(a.dim() + b.dim(), s.dim() + i.dim());
    }

    #[test]
    fn containment() {
        let a = Subspace::span(&[v(&[1, 2, 3]), v(&[0, 0, 1])], 3).unwrap();
        assert!(a.contains_vec(&v(&[2, 4, 7])).unwrap());
        assert!(!a.contains_vec(&v(&[0, 1, 0])).unwrap());
        let b = Subspace::span(&[v(&[1, 2, 0])], 3).unwrap();
        assert!(a.contains(&b).unwrap());
        assert!(!b.contains(&a).unwrap());
    }

    #[test]
    fn ambient_mismatch_is_rejected() {
        let a = Subspace::zero(3);
        let b = Subspace::zero(4);
        assert!(matches!(
            a.sum(&b),
            Err(HyperlieError::AmbientMismatch { left: 3, right: 4 })
        ));
        assert!(a.contains_vec(&v(&[1, 2])).is_err());
    }

    #[test]
    fn quotient_map_kernel_is_the_subspace() {
        let a = Subspace::span(&[v(&[1, 2, 0, 1]), v(&[0, 0, 1, 3])], 4).unwrap();
        let q = a.quotient_map();
        assert_eq!(q.rows(), 2);
        assert_eq!(Subspace::kernel_of(&q), a);
    }

    #[test]
    fn quotient_map_of_extremes() {
        let z = Subspace::zero(3);
        assert_eq!(z.quotient_map(), Matrix::identity(3));
        let f = Subspace::full(3);
        assert_eq!(f.quotient_map().rows(), 0);
    }

    #[test]
    fn map_through_a_projection() {
        let a = Subspace::span(&[v(&[1, 1, 0]), v(&[0, 0, 1])], 3).unwrap();
        let p = Matrix::from_int_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]]);
        let img = a.map_through(&p).unwrap();
        assert_eq!(img, Subspace::span(&[v(&[1, 1, 0])], 3).unwrap());
    }
}
