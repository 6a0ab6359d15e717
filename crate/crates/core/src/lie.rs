//! Lie algebras presented by structure constants.
//!
//! A Lie algebra of dimension n is the tensor c[i][j][k] with
//! [e_i, e_j] = sum_k c[i][j][k] e_k. Antisymmetry is maintained by
//! construction (`set_bracket` writes both orientations); the Jacobi identity
//! is checked on demand and reported as data, so candidate inputs that fail
//! it can still be inspected.

use crate::error::HyperlieError;
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::subspace::Subspace;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    /// Flat n^3 tensor, index (i*n + j)*n + k.
    c: Vec<Rational>,
}

/// Outcome of a descending-series computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Nilpotency {
    /// The series reaches zero; the value is the number of nonzero terms
    /// (abelian algebras have step 1).
    Step(usize),
    /// The series stabilizes at a nonzero subspace.
    NotNilpotent,
}

impl Nilpotency {
    pub fn step(self) -> Option<usize> {
        match self {
            Nilpotency::Step(k) => Some(k),
            Nilpotency::NotNilpotent => None,
        }
    }
}

impl LieAlgebra {
    /// The abelian algebra of dimension n; fill in brackets with
    /// `set_bracket`.
    pub fn new(dim: usize) -> Self {
        LieAlgebra {
            dim,
            c: vec![Rational::zero(); dim * dim * dim],
        }
    }

    /// Builds from a full tensor, validating antisymmetry (including zero
    /// diagonal [e_i, e_i] = 0).
    pub fn from_tensor(dim: usize, c: Vec<Vec<Vec<Rational>>>) -> Result<Self, HyperlieError> {
        if c.len() != dim || c.iter().any(|p| p.len() != dim || p.iter().any(|q| q.len() != dim)) {
            return Err(HyperlieError::VectorLength {
                expected: dim,
                got: c.len(),
            });
        }
        for i in 0..dim {
            for j in 0..=i {
                for k in 0..dim {
                    if c[i][j][k] != -c[j][i][k].clone() {
                        return Err(HyperlieError::Antisymmetry { i, j, k });
                    }
                }
            }
        }
        let mut g = LieAlgebra::new(dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let at = g.idx(i, j, k);
                    g.c[at] = c[i][j][k].clone();
                }
            }
        }
        Ok(g)
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[self.idx(i, j, k)]
    }

    /// Sets [e_i, e_j] = sum of coeff * e_k, overwriting both orientations.
    /// All indices 0-based; i == j is rejected by assertion.
    pub fn set_bracket(&mut self, i: usize, j: usize, coeffs: &[(usize, Rational)]) {
        assert!(i != j, "cannot set a bracket [e_i, e_i]");
        assert!(i < self.dim && j < self.dim, "basis index out of range");
        for k in 0..self.dim {
            let idx_ij = self.idx(i, j, k);
            let idx_ji = self.idx(j, i, k);
            self.c[idx_ij] = Rational::zero();
            self.c[idx_ji] = Rational::zero();
        }
        for (k, v) in coeffs {
            assert!(*k < self.dim, "target index out of range");
            let idx_ij = self.idx(i, j, *k);
            let idx_ji = self.idx(j, i, *k);
            self.c[idx_ij] = v.clone();
            self.c[idx_ji] = -v.clone();
        }
    }

    /// [e_i, e_j] as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        (0..self.dim).map(|k| self.c(i, j, k).clone()).collect()
    }

    /// [x, y] for arbitrary coordinate vectors, bilinear in both arguments.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>, HyperlieError> {
        if x.len() != self.dim {
            return Err(HyperlieError::VectorLength {
                expected: self.dim,
                got: x.len(),
            });
        }
        if y.len() != self.dim {
            return Err(HyperlieError::VectorLength {
                expected: self.dim,
                got: y.len(),
            });
        }
        let mut out = vec![Rational::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let f = xi * yj;
                for k in 0..self.dim {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        out[k] += c * &f;
                    }
                }
            }
        }
        Ok(out)
    }

    /// The matrix of ad(x) = [x, -], columns ad(x) e_j = [x, e_j].
    pub fn ad(&self, x: &[Rational]) -> Result<Matrix, HyperlieError> {
        if x.len() != self.dim {
            return Err(HyperlieError::VectorLength {
                expected: self.dim,
                got: x.len(),
            });
        }
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        m[(k, j)] += c * xi;
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for k in 0..self.dim {
                let c = self.c(i, j, k);
                if !c.is_zero() {
                    m[(k, j)] = c.clone();
                }
            }
        }
        m
    }

    /// All basis triples i < j < k violating the Jacobi identity, 0-based.
    /// An empty list means the bracket is a Lie bracket.
    pub fn jacobi_violations(&self) -> Vec<(usize, usize, usize)> {
        let mut bad = Vec::new();
        let basis: Vec<Vec<Rational>> = (0..self.dim)
            .map(|i| {
                let mut v = vec![Rational::zero(); self.dim];
                v[i] = Rational::from_integer(1.into());
                v
            })
            .collect();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let bij = self.bracket_basis(i, j);
                for k in (j + 1)..self.dim {
                    let bjk = self.bracket_basis(j, k);
                    let bki = self.bracket_basis(k, i);
                    let t1 = self.bracket(&bij, &basis[k]).unwrap();
                    let t2 = self.bracket(&bjk, &basis[i]).unwrap();
                    let t3 = self.bracket(&bki, &basis[j]).unwrap();
                    let ok = (0..self.dim)
                        .all(|m| (t1[m].clone() + &t2[m] + &t3[m]).is_zero());
                    if !ok {
                        bad.push((i, j, k));
                    }
                }
            }
        }
        bad
    }

    pub fn satisfies_jacobi(&self) -> bool {
        self.jacobi_violations().is_empty()
    }

    /// Span of [a, b] over basis pairs of the two subspaces.
    pub fn bracket_subspaces(
        &self,
        a: &Subspace,
        b: &Subspace,
    ) -> Result<Subspace, HyperlieError> {
        if a.ambient_dim() != self.dim || b.ambient_dim() != self.dim {
            return Err(HyperlieError::AmbientMismatch {
                left: a.ambient_dim(),
                right: b.ambient_dim(),
            });
        }
        let mut vectors = Vec::new();
        for x in a.basis_vectors() {
            for y in b.basis_vectors() {
                vectors.push(self.bracket(&x, &y)?);
            }
        }
        Subspace::span(&vectors, self.dim)
    }

    /// The commutator ideal [g, g].
    pub fn commutator_ideal(&self) -> Subspace {
        let full = Subspace::full(self.dim);
        self.bracket_subspaces(&full, &full)
            .expect("full subspaces have the right ambient")
    }

    /// The center, computed as the joint kernel of all ad(e_i).
    pub fn center(&self) -> Subspace {
        let mut stacked = Matrix::zeros(0, self.dim);
        for i in 0..self.dim {
            stacked = stacked.vstack(&self.ad_basis(i));
        }
        Subspace::kernel_of(&stacked)
    }

    /// Lower central series g^0 = g, g^k = [g, g^(k-1)], listed until it
    /// reaches zero or stabilizes. The returned list always starts with the
    /// full space and ends with the first repeated or zero term.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.dim);
        let mut series = vec![full.clone()];
        loop {
            let prev = series.last().unwrap();
            if prev.is_zero() {
                break;
            }
            let next = self
                .bracket_subspaces(&full, prev)
                .expect("series terms live in the algebra");
            let stabilized = &next == prev;
            series.push(next);
            if stabilized {
                break;
            }
        }
        series
    }

    /// Nilpotency step: the first k with g^k = 0 in the lower central
    /// series. Abelian algebras have step 1.
    pub fn nilpotency_step(&self) -> Nilpotency {
        let series = self.lower_central_series();
        match series.last() {
            Some(last) if last.is_zero() => Nilpotency::Step(series.len() - 1),
            _ => Nilpotency::NotNilpotent,
        }
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim];
        v[i] = Rational::from_integer(1.into());
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    /// The 3-dimensional Heisenberg algebra: [e_0, e_1] = e_2.
    fn heisenberg() -> LieAlgebra {
        let mut g = LieAlgebra::new(3);
        g.set_bracket(0, 1, &[(2, int(1))]);
        g
    }

    #[test]
    fn bracket_is_antisymmetric_by_construction() {
        let g = heisenberg();
        assert_eq!(g.bracket_basis(0, 1), vec![int(0), int(0), int(1)]);
        assert_eq!(g.bracket_basis(1, 0), vec![int(0), int(0), int(-1)]);
        let x = vec![int(1), int(2), int(0)];
        let y = vec![int(3), int(4), int(5)];
        let xy = g.bracket(&x, &y).unwrap();
        let yx = g.bracket(&y, &x).unwrap();
        for k in 0..3 {
            assert_eq!(xy[k], -yx[k].clone());
        }
        assert_eq!(xy, vec![int(0), int(0), int(-2)]);
    }

    #[test]
    fn heisenberg_invariants() {
        let g = heisenberg();
        assert!(g.satisfies_jacobi());
        assert_eq!(g.commutator_ideal().dim(), 1);
        assert_eq!(g.center().dim(), 1);
        assert_eq!(g.nilpotency_step(), Nilpotency::Step(2));
        let series = g.lower_central_series();
        assert_eq!(series.len(), 3);
        assert_eq!(
            series.iter().map(Subspace::dim).collect::<Vec<_>>(),
            vec![3, 1, 0]
        );
    }

    #[test]
    fn abelian_is_one_step() {
        let g = LieAlgebra::new(4);
        assert_eq!(g.nilpotency_step(), Nilpotency::Step(1));
        assert!(g.center().is_full());
        assert!(g.commutator_ideal().is_zero());
    }

    #[test]
    fn sl2_is_not_nilpotent() {
        // h, e, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
        let mut g = LieAlgebra::new(3);
        g.set_bracket(0, 1, &[(1, int(2))]);
        g.set_bracket(0, 2, &[(2, int(-2))]);
        g.set_bracket(1, 2, &[(0, int(1))]);
        assert!(g.satisfies_jacobi());
        assert_eq!(g.nilpotency_step(), Nilpotency::NotNilpotent);
        assert!(g.center().is_zero());
    }

    #[test]
    fn jacobi_violation_is_reported() {
        // [[e0,e1],e2] + [[e1,e2],e0] + [[e2,e0],e1] = 0 + 0 - [e0,e1] != 0.
        let mut g = LieAlgebra::new(3);
        g.set_bracket(0, 1, &[(2, int(1))]);
        g.set_bracket(0, 2, &[(0, int(1))]);
        assert_eq!(g.jacobi_violations(), vec![(0, 1, 2)]);
    }

    #[test]
    fn ad_is_a_bracket_homomorphism() {
        let g = heisenberg();
        let x = vec![int(1), int(-2), int(3)];
        let y = vec![int(0), int(1), int(5)];
        let lhs = g.ad(&g.bracket(&x, &y).unwrap()).unwrap();
        let rhs = g.ad(&x).unwrap().commutator(&g.ad(&y).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn from_tensor_validates_antisymmetry() {
        let n = 2;
        let mut c = vec![vec![vec![int(0); n]; n]; n];
        c[0][1][0] = int(1);
        assert!(matches!(
            LieAlgebra::from_tensor(n, c),
            Err(HyperlieError::Antisymmetry { .. })
        ));
    }
}
