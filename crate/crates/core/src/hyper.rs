//! Complex and hypercomplex structures on Lie algebras.
//!
//! A hypercomplex structure is a triple (J_1, J_2, J_3) of integrable complex
//! structures satisfying the quaternion relations J_1 J_2 = -J_2 J_1 = J_3.
//! Candidates are plain data; `validate` reports every violated condition
//! instead of erroring, so invalid inputs can be diagnosed. Operations that
//! are only meaningful on valid structures check first and reject.

use crate::error::HyperlieError;
use crate::lie::{LieAlgebra, Nilpotency};
use crate::matrix::Matrix;
use crate::rational::{format_rational, Rational};
use crate::subspace::Subspace;
use num_traits::{One, Zero};
use std::fmt;

/// An almost complex structure candidate: any square matrix. Validity
/// (J^2 = -I and vanishing Nijenhuis tensor) is checked against an algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypercomplexStructure {
    pub j: [Matrix; 3],
}

/// A Lie algebra with a hypercomplex structure candidate attached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypercomplexLieAlgebra {
    pub name: String,
    pub algebra: LieAlgebra,
    pub structure: HypercomplexStructure,
}

/// A violated validity condition, reported as data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// J_alpha is not dim x dim.
    Shape { alpha: usize },
    /// J_alpha^2 != -I.
    NotInvolution { alpha: usize },
    /// J_1 J_2 != J_3 or J_2 J_1 != -J_3.
    Quaternion { relation: &'static str },
    /// The Nijenhuis tensor of J_alpha is nonzero at basis pair (i, j),
    /// 0-based.
    NotIntegrable { alpha: usize, i: usize, j: usize },
    /// The Jacobi identity fails at basis triple (i, j, k), 0-based.
    Jacobi { i: usize, j: usize, k: usize },
    /// The dimension is not a multiple of 4.
    Dimension { dim: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Shape { alpha } => write!(f, "J_{alpha} has the wrong shape"),
            Violation::NotInvolution { alpha } => write!(f, "J_{alpha}^2 != -I"),
            Violation::Quaternion { relation } => {
                write!(f, "quaternion relation {relation} fails")
            }
            Violation::NotIntegrable { alpha, i, j } => write!(
                f,
                "Nijenhuis tensor of J_{alpha} is nonzero at (e{}, e{})",
                i + 1,
                j + 1
            ),
            Violation::Jacobi { i, j, k } => write!(
                f,
                "Jacobi identity fails at (e{}, e{}, e{})",
                i + 1,
                j + 1,
                k + 1
            ),
            Violation::Dimension { dim } => {
                write!(f, "dimension {dim} is not a multiple of 4")
            }
        }
    }
}

impl HypercomplexStructure {
    pub fn new(j1: Matrix, j2: Matrix, j3: Matrix) -> Self {
        HypercomplexStructure { j: [j1, j2, j3] }
    }

    /// J_alpha for alpha in 1..=3.
    pub fn j(&self, alpha: usize) -> &Matrix {
        &self.j[alpha - 1]
    }

    /// J_y = y1 J_1 + y2 J_2 + y3 J_3 for a rational point on the unit
    /// sphere. Off-sphere points are rejected since J_y^2 = -I would fail.
    pub fn sphere_structure(&self, y: &[Rational; 3]) -> Result<Matrix, HyperlieError> {
        let norm: Rational = y.iter().map(|c| c * c).sum();
        if !norm.is_one() {
            return Err(HyperlieError::NotUnitSphere(
                format_rational(&y[0]),
                format_rational(&y[1]),
                format_rational(&y[2]),
            ));
        }
        let mut m = self.j[0].scale(&y[0]);
        m = m.add(&self.j[1].scale(&y[1]));
        m = m.add(&self.j[2].scale(&y[2]));
        Ok(m)
    }
}

/// N_J(x, y) = [x,y] + J([Jx,y] + [x,Jy]) - [Jx,Jy].
pub fn nijenhuis(
    g: &LieAlgebra,
    j: &Matrix,
    x: &[Rational],
    y: &[Rational],
) -> Result<Vec<Rational>, HyperlieError> {
    let jx = j.apply(x);
    let jy = j.apply(y);
    let mut out = g.bracket(x, y)?;
    let mut inner = g.bracket(&jx, y)?;
    let t = g.bracket(x, &jy)?;
    for (a, b) in inner.iter_mut().zip(t) {
        *a += b;
    }
    let jinner = j.apply(&inner);
    let jxjy = g.bracket(&jx, &jy)?;
    for k in 0..out.len() {
        out[k] += &jinner[k];
        out[k] -= &jxjy[k];
    }
    Ok(out)
}

impl HypercomplexLieAlgebra {
    pub fn new(name: impl Into<String>, algebra: LieAlgebra, structure: HypercomplexStructure) -> Self {
        HypercomplexLieAlgebra {
            name: name.into(),
            algebra,
            structure,
        }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Checks every validity condition and returns the violations: Jacobi,
    /// shapes, J_alpha^2 = -I, the quaternion relations, integrability of
    /// each J_alpha, and dim divisible by 4. Empty result = valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let n = self.dim();
        if n % 4 != 0 {
            out.push(Violation::Dimension { dim: n });
        }
        for (i, j, k) in self.algebra.jacobi_violations() {
            out.push(Violation::Jacobi { i, j, k });
        }
        let mut shapes_ok = true;
        for alpha in 1..=3 {
            let j = self.structure.j(alpha);
            if j.rows() != n || j.cols() != n {
                out.push(Violation::Shape { alpha });
                shapes_ok = false;
            }
        }
        if !shapes_ok {
            return out;
        }
        let minus_id = Matrix::identity(n).neg();
        for alpha in 1..=3 {
            let j = self.structure.j(alpha);
            if j.mul(j) != minus_id {
                out.push(Violation::NotInvolution { alpha });
            }
        }
        let [j1, j2, j3] = &self.structure.j;
        if j1.mul(j2) != *j3 {
            out.push(Violation::Quaternion {
                relation: "J1 J2 = J3",
            });
        }
        if j2.mul(j1) != j3.neg() {
            out.push(Violation::Quaternion {
                relation: "J2 J1 = -J3",
            });
        }
        for alpha in 1..=3 {
            let j = self.structure.j(alpha);
            'pairs: for i in 0..n {
                for jj in (i + 1)..n {
                    let x = self.algebra.basis_vector(i);
                    let y = self.algebra.basis_vector(jj);
                    let nij = nijenhuis(&self.algebra, j, &x, &y)
                        .expect("basis vectors have the right length");
                    if nij.iter().any(|c| !c.is_zero()) {
                        out.push(Violation::NotIntegrable { alpha, i, j: jj });
                        break 'pairs;
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Errors with the first violation if the structure is invalid.
    pub fn require_valid(&self) -> Result<(), HyperlieError> {
        let violations = self.validate();
        if let Some(first) = violations.first() {
            return Err(HyperlieError::InvalidHypercomplex(format!(
                "{} ({} violation(s) total)",
                first,
                violations.len()
            )));
        }
        Ok(())
    }
}

/// Ascending central series adapted to a complex structure J:
/// a_0 = 0, a_k = { x : [x, g] and [Jx, g] both lie in a_(k-1) }.
/// The list starts with the zero subspace and ends at the first repeated
/// term or at the full space.
pub fn ascending_j_series(g: &LieAlgebra, j: &Matrix, max_iter: usize) -> Vec<Subspace> {
    let n = g.dim();
    let mut series = vec![Subspace::zero(n)];
    for _ in 0..max_iter {
        let prev = series.last().unwrap();
        if prev.is_full() {
            break;
        }
        let q = prev.quotient_map();
        // x is in a_k iff q [x, e_i] = 0 and q [Jx, e_i] = 0 for all i;
        // [x, e_i] = -ad(e_i) x, and the sign does not change the kernel.
        let mut stacked = Matrix::zeros(0, n);
        for i in 0..n {
            let ad_i = g.ad_basis(i);
            let qa = q.mul(&ad_i);
            stacked = stacked.vstack(&qa);
            stacked = stacked.vstack(&qa.mul(j));
        }
        let next = Subspace::kernel_of(&stacked);
        let stabilized = &next == prev;
        series.push(next);
        if stabilized {
            break;
        }
    }
    series
}

/// J-nilpotency step: the first k with a_k = g in the ascending series, or
/// NotNilpotent if the series stabilizes below the full space.
pub fn j_nilpotency_step(g: &LieAlgebra, j: &Matrix) -> Nilpotency {
    let series = ascending_j_series(g, j, g.dim() + 1);
    match series.last() {
        Some(last) if last.is_full() => Nilpotency::Step(series.len() - 1),
        _ => Nilpotency::NotNilpotent,
    }
}

/// For a 2-step nilpotent algebra, J is 2-step (a_2 = g) if and only if
/// J g^1 lies in the center. Errors if the algebra is not 2-step.
pub fn two_step_criterion(g: &LieAlgebra, j: &Matrix) -> Result<bool, HyperlieError> {
    if g.nilpotency_step() != Nilpotency::Step(2) {
        return Err(HyperlieError::NotTwoStep);
    }
    let g1 = g.commutator_ideal();
    let jg1 = g1.map_through(j)?;
    g.center().contains(&jg1)
}

/// True when J_alpha [g, g] lies in the center for every alpha.
pub fn j_commutator_central(h: &HypercomplexLieAlgebra) -> Result<bool, HyperlieError> {
    let g1 = h.algebra.commutator_ideal();
    let z = h.algebra.center();
    for alpha in 1..=3 {
        let jg1 = g1.map_through(h.structure.j(alpha))?;
        if !z.contains(&jg1)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// H-solvable series: g_0 = g, and g_k is the quaternionic span
/// B + J_1 B + J_2 B + J_3 B of B = [g_(k-1), g_(k-1)]. The list ends at the
/// first zero or repeated term.
pub fn h_solvable_series(
    g: &LieAlgebra,
    h: &HypercomplexStructure,
    max_iter: usize,
) -> Vec<Subspace> {
    let n = g.dim();
    let mut series = vec![Subspace::full(n)];
    for _ in 0..max_iter {
        let prev = series.last().unwrap();
        if prev.is_zero() {
            break;
        }
        let b = g
            .bracket_subspaces(prev, prev)
            .expect("series terms live in the algebra");
        let mut next = b.clone();
        for alpha in 1..=3 {
            let jb = b.map_through(h.j(alpha)).expect("J has ambient shape");
            next = next.sum(&jb).expect("same ambient");
        }
        let stabilized = &next == prev;
        series.push(next);
        if stabilized {
            break;
        }
    }
    series
}

/// Outcome of the H-solvable series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HSolvability {
    /// Number of nonzero terms before the series hits zero.
    Step(usize),
    /// The series stabilizes at a nonzero subspace.
    NotHSolvable,
}

impl HSolvability {
    pub fn step(self) -> Option<usize> {
        match self {
            HSolvability::Step(k) => Some(k),
            HSolvability::NotHSolvable => None,
        }
    }
}

pub fn h_solvability_step(g: &LieAlgebra, h: &HypercomplexStructure) -> HSolvability {
    let series = h_solvable_series(g, h, g.dim() + 1);
    match series.last() {
        Some(last) if last.is_zero() => HSolvability::Step(series.len() - 1),
        _ => HSolvability::NotHSolvable,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rational::{int, rat};

    #[test]
    fn standard_quaternions_on_r4_are_valid() {
        let h = catalog::torus(1);
        assert!(h.validate().is_empty());
    }

    #[test]
    fn swapping_j2_j3_breaks_quaternion_relations() {
        let mut h = catalog::entry("n8").unwrap();
        h.structure.j.swap(1, 2);
        let violations = h.validate();
        assert!(violations
            .iter()
            .any(|v| matches!(v, Violation::Quaternion { .. })));
    }

    #[test]
    fn sphere_structure_requires_unit_norm() {
        let h = catalog::torus(1);
        assert!(h
            .structure
            .sphere_structure(&[int(1), int(1), int(0)])
            .is_err());
        // A Pythagorean point: (3/5, 4/5, 0).
        let jy = h
            .structure
            .sphere_structure(&[rat(3, 5), rat(4, 5), int(0)])
            .unwrap();
        assert_eq!(jy.mul(&jy), Matrix::identity(4).neg());
    }

    #[test]
    fn ascending_series_of_abelian_fills_in_one_step() {
        let h = catalog::torus(2);
        let series = ascending_j_series(&h.algebra, h.structure.j(1), 10);
        assert_eq!(series.len(), 2);
        assert!(series[1].is_full());
        assert_eq!(
            j_nilpotency_step(&h.algebra, h.structure.j(1)),
            Nilpotency::Step(1)
        );
    }

    #[test]
    fn h_series_of_abelian_terminates_immediately() {
        let h = catalog::torus(1);
        assert_eq!(
            h_solvability_step(&h.algebra, &h.structure),
            HSolvability::Step(1)
        );
    }
}
