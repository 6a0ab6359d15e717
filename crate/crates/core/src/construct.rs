//! Constructions producing new hypercomplex Lie algebras from old ones.
//!
//! Two constructions are implemented:
//!
//! * Central extension of a hypercomplex algebra n by R^(4k) along a
//!   vector-valued 2-form mu vanishing on the commutator ideal:
//!   [x, y]' = ([x, y], mu(x, y)), with J'_a = J_a + I_a block-diagonally.
//!   The extension is hypercomplex exactly when mu satisfies the linear
//!   integrability condition
//!     I_a mu(x, y) = mu(J_a x, y) + mu(x, J_a y) + I_a mu(J_a x, J_a y)
//!   for all a, which is checked on all basis pairs before building.
//!
//! * Semidirect product g x_rho R^(4k) along a representation rho that is a
//!   Lie algebra homomorphism with every rho(x) commuting with the standard
//!   quaternionic structure I_a of the fiber.

use crate::error::HyperlieError;
use crate::hyper::{HypercomplexLieAlgebra, HypercomplexStructure};
use crate::lie::{LieAlgebra, Nilpotency};
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::subspace::Subspace;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Antisymmetric bilinear form on the base algebra with values in Q^r.
/// Entries are stored for i < j only; evaluation resolves orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuForm {
    base_dim: usize,
    fiber_dim: usize,
    values: BTreeMap<(usize, usize), Vec<Rational>>,
}

impl MuForm {
    pub fn new(base_dim: usize, fiber_dim: usize) -> Self {
        MuForm {
            base_dim,
            fiber_dim,
            values: BTreeMap::new(),
        }
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn fiber_dim(&self) -> usize {
        self.fiber_dim
    }

    /// Sets mu(e_i, e_j) = value (0-based, i != j); the reversed orientation
    /// is implied. Zero values drop the entry.
    pub fn set(&mut self, i: usize, j: usize, value: Vec<Rational>) {
        assert!(i != j, "mu(e_i, e_i) is identically zero");
        assert!(i < self.base_dim && j < self.base_dim, "index out of range");
        assert_eq!(value.len(), self.fiber_dim, "value has wrong fiber length");
        let (key, value) = if i < j {
            ((i, j), value)
        } else {
            ((j, i), value.into_iter().map(|c| -c).collect())
        };
        if value.iter().all(|c| c.is_zero()) {
            self.values.remove(&key);
        } else {
            self.values.insert(key, value);
        }
    }

    /// mu(e_i, e_j), 0-based.
    pub fn get(&self, i: usize, j: usize) -> Vec<Rational> {
        if i == j {
            return vec![Rational::zero(); self.fiber_dim];
        }
        let (key, flip) = if i < j { ((i, j), false) } else { ((j, i), true) };
        match self.values.get(&key) {
            None => vec![Rational::zero(); self.fiber_dim],
            Some(v) if flip => v.iter().map(|c| -c.clone()).collect(),
            Some(v) => v.clone(),
        }
    }

    /// Stored entries (i, j, value) with i < j, in index order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Vec<Rational>)> {
        self.values.iter().map(|(&(i, j), v)| (i, j, v))
    }

    /// Bilinear evaluation mu(x, y).
    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>, HyperlieError> {
        if x.len() != self.base_dim || y.len() != self.base_dim {
            return Err(HyperlieError::VectorLength {
                expected: self.base_dim,
                got: if x.len() != self.base_dim { x.len() } else { y.len() },
            });
        }
        let mut out = vec![Rational::zero(); self.fiber_dim];
        for (&(i, j), v) in &self.values {
            let coeff = x[i].clone() * &y[j] - x[j].clone() * &y[i];
            if coeff.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(v) {
                if !c.is_zero() {
                    *o += c * &coeff;
                }
            }
        }
        Ok(out)
    }

    /// True when mu(v, e_j) = 0 for all j, i.e. v is in the kernel.
    pub fn annihilates(&self, v: &[Rational]) -> Result<bool, HyperlieError> {
        for j in 0..self.base_dim {
            let mut e_j = vec![Rational::zero(); self.base_dim];
            e_j[j] = Rational::from_integer(1.into());
            if self.eval(v, &e_j)?.iter().any(|c| !c.is_zero()) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Representation of the base algebra on the fiber R^(4k): one matrix per
/// basis vector, extended linearly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    base_dim: usize,
    fiber_dim: usize,
    gens: Vec<Matrix>,
}

impl Representation {
    /// The zero representation (all generators map to 0).
    pub fn zero(base_dim: usize, fiber_dim: usize) -> Self {
        Representation {
            base_dim,
            fiber_dim,
            gens: vec![Matrix::zeros(fiber_dim, fiber_dim); base_dim],
        }
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn fiber_dim(&self) -> usize {
        self.fiber_dim
    }

    /// Sets rho(e_i), 0-based.
    pub fn set_generator(&mut self, i: usize, m: Matrix) {
        assert!(i < self.base_dim, "index out of range");
        assert!(
            m.rows() == self.fiber_dim && m.cols() == self.fiber_dim,
            "generator has wrong shape"
        );
        self.gens[i] = m;
    }

    pub fn generator(&self, i: usize) -> &Matrix {
        &self.gens[i]
    }

    /// rho(x) for an arbitrary vector.
    pub fn of(&self, x: &[Rational]) -> Result<Matrix, HyperlieError> {
        if x.len() != self.base_dim {
            return Err(HyperlieError::VectorLength {
                expected: self.base_dim,
                got: x.len(),
            });
        }
        let mut m = Matrix::zeros(self.fiber_dim, self.fiber_dim);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&self.gens[i].scale(c));
            }
        }
        Ok(m)
    }

    /// Kernel of rho as a subspace of the base.
    pub fn kernel(&self) -> Subspace {
        let f2 = self.fiber_dim * self.fiber_dim;
        let mut m = Matrix::zeros(f2, self.base_dim);
        for (i, g) in self.gens.iter().enumerate() {
            for (row, v) in g.flatten().into_iter().enumerate() {
                if !v.is_zero() {
                    m[(row, i)] = v;
                }
            }
        }
        Subspace::kernel_of(&m)
    }

    /// Joint kernel of all rho(e_i) inside the fiber.
    pub fn fiber_fixed_space(&self) -> Subspace {
        let mut stacked = Matrix::zeros(0, self.fiber_dim);
        for g in &self.gens {
            stacked = stacked.vstack(g);
        }
        Subspace::kernel_of(&stacked)
    }

    /// Column span of all rho(e_i), the subspace rho(g) R^(4k) of the fiber.
    pub fn image_span(&self) -> Subspace {
        let mut columns = Vec::new();
        for g in &self.gens {
            for j in 0..self.fiber_dim {
                columns.push(g.column(j));
            }
        }
        Subspace::span(&columns, self.fiber_dim).expect("columns have fiber length")
    }
}

/// The standard quaternionic structure (I_1, I_2, I_3) on R^(4k):
/// block-diagonal copies of the 4x4 structure
/// I_1: v1 -> v2, v3 -> v4; I_2: v1 -> v3, v2 -> -v4; I_3: v1 -> v4, v2 -> v3.
pub fn standard_structure(dim: usize) -> HypercomplexStructure {
    assert!(dim % 4 == 0, "standard structure needs dim divisible by 4");
    let mut j1 = Matrix::zeros(dim, dim);
    let mut j2 = Matrix::zeros(dim, dim);
    let mut j3 = Matrix::zeros(dim, dim);
    for b in (0..dim).step_by(4) {
        set_j_pair(&mut j1, b, b + 1, 1);
        set_j_pair(&mut j1, b + 2, b + 3, 1);
        set_j_pair(&mut j2, b, b + 2, 1);
        set_j_pair(&mut j2, b + 1, b + 3, -1);
        set_j_pair(&mut j3, b, b + 3, 1);
        set_j_pair(&mut j3, b + 1, b + 2, 1);
    }
    HypercomplexStructure::new(j1, j2, j3)
}

/// J e_i = sign * e_j and J e_j = -sign * e_i (0-based).
pub(crate) fn set_j_pair(m: &mut Matrix, i: usize, j: usize, sign: i64) {
    m[(j, i)] = Rational::from_integer(sign.into());
    m[(i, j)] = Rational::from_integer((-sign).into());
}

/// Block-diagonal sum of two square matrices.
pub fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.rows();
    let r = b.rows();
    let mut m = Matrix::zeros(n + r, n + r);
    for i in 0..n {
        for j in 0..n {
            if !a[(i, j)].is_zero() {
                m[(i, j)] = a[(i, j)].clone();
            }
        }
    }
    for i in 0..r {
        for j in 0..r {
            if !b[(i, j)].is_zero() {
                m[(n + i, n + j)] = b[(i, j)].clone();
            }
        }
    }
    m
}

/// Checks the integrability condition of mu against the base structure for
/// every alpha and every basis pair; returns the first failure as
/// (alpha, i, j), 0-based indices.
pub fn mu_integrability_failure(
    base: &HypercomplexLieAlgebra,
    mu: &MuForm,
) -> Result<Option<(usize, usize, usize)>, HyperlieError> {
    let n = base.dim();
    let fiber = standard_structure(mu.fiber_dim());
    for alpha in 1..=3 {
        let j = base.structure.j(alpha);
        let i_a = fiber.j(alpha);
        for a in 0..n {
            for b in (a + 1)..n {
                let ea = base.algebra.basis_vector(a);
                let eb = base.algebra.basis_vector(b);
                let ja_ea = j.apply(&ea);
                let ja_eb = j.apply(&eb);
                let lhs = i_a.apply(&mu.eval(&ea, &eb)?);
                let mut rhs = mu.eval(&ja_ea, &eb)?;
                let t2 = mu.eval(&ea, &ja_eb)?;
                let t3 = i_a.apply(&mu.eval(&ja_ea, &ja_eb)?);
                for k in 0..rhs.len() {
                    rhs[k] += &t2[k];
                    rhs[k] += &t3[k];
                }
                if lhs != rhs {
                    return Ok(Some((alpha, a, b)));
                }
            }
        }
    }
    Ok(None)
}

/// Central extension of `base` by R^(4k) along `mu`. The new basis is the
/// base basis followed by the fiber basis; brackets gain the mu component
/// and the complex structures extend block-diagonally by the standard fiber
/// structure.
pub fn mu_extension(
    base: &HypercomplexLieAlgebra,
    mu: &MuForm,
) -> Result<HypercomplexLieAlgebra, HyperlieError> {
    let n = base.dim();
    let r = mu.fiber_dim();
    if mu.base_dim() != n {
        return Err(HyperlieError::AmbientMismatch {
            left: mu.base_dim(),
            right: n,
        });
    }
    if r == 0 || r % 4 != 0 {
        return Err(HyperlieError::FiberDimension(r));
    }
    base.require_valid()?;
    for v in base.algebra.commutator_ideal().basis_vectors() {
        if !mu.annihilates(&v)? {
            let pivot = v
                .iter()
                .position(|c| !c.is_zero())
                .expect("basis vectors are nonzero");
            return Err(HyperlieError::CocycleKernel { index: pivot + 1 });
        }
    }
    if let Some((alpha, i, j)) = mu_integrability_failure(base, mu)? {
        return Err(HyperlieError::CocycleIntegrability {
            alpha,
            i: i + 1,
            j: j + 1,
        });
    }

    let dim = n + r;
    let mut g = LieAlgebra::new(dim);
    for i in 0..n {
        for j in (i + 1)..n {
            let mut coeffs: Vec<(usize, Rational)> = Vec::new();
            for (k, c) in base.algebra.bracket_basis(i, j).into_iter().enumerate() {
                if !c.is_zero() {
                    coeffs.push((k, c));
                }
            }
            for (t, c) in mu.get(i, j).into_iter().enumerate() {
                if !c.is_zero() {
                    coeffs.push((n + t, c));
                }
            }
            if !coeffs.is_empty() {
                g.set_bracket(i, j, &coeffs);
            }
        }
    }
    let fiber = standard_structure(r);
    let structure = HypercomplexStructure::new(
        block_diag(base.structure.j(1), fiber.j(1)),
        block_diag(base.structure.j(2), fiber.j(2)),
        block_diag(base.structure.j(3), fiber.j(3)),
    );
    Ok(HypercomplexLieAlgebra::new(
        format!("{}+mu", base.name),
        g,
        structure,
    ))
}

/// Predicts the nilpotency step of J'_alpha on the extension without
/// building it: 3 when mu(J_alpha v, .) is nonzero for some v in the
/// commutator ideal of the base, else 2. Requires the base to be 2-step
/// with every J_alpha 2-step.
pub fn step_of_extension(
    base: &HypercomplexLieAlgebra,
    mu: &MuForm,
    alpha: usize,
) -> Result<usize, HyperlieError> {
    if base.algebra.nilpotency_step() != Nilpotency::Step(2) {
        return Err(HyperlieError::NotTwoStep);
    }
    for a in 1..=3 {
        if !crate::hyper::two_step_criterion(&base.algebra, base.structure.j(a))? {
            return Err(HyperlieError::Unsupported(format!(
                "J_{a} of the base is not 2-step"
            )));
        }
    }
    let j = base.structure.j(alpha);
    for v in base.algebra.commutator_ideal().basis_vectors() {
        if !mu.annihilates(&j.apply(&v))? {
            return Ok(3);
        }
    }
    Ok(2)
}

/// Reports the first violated representation invariant against `base`:
/// a non-homomorphism pair or a generator that fails to commute with the
/// fiber structure.
pub fn representation_failure(
    base: &LieAlgebra,
    rho: &Representation,
) -> Result<Option<HyperlieError>, HyperlieError> {
    if rho.base_dim() != base.dim() {
        return Err(HyperlieError::AmbientMismatch {
            left: rho.base_dim(),
            right: base.dim(),
        });
    }
    if rho.fiber_dim() == 0 || rho.fiber_dim() % 4 != 0 {
        return Err(HyperlieError::FiberDimension(rho.fiber_dim()));
    }
    let fiber = standard_structure(rho.fiber_dim());
    for i in 0..base.dim() {
        for alpha in 1..=3 {
            let ia = fiber.j(alpha);
            if rho.generator(i).mul(ia) != ia.mul(rho.generator(i)) {
                return Ok(Some(HyperlieError::RhoQuaternionic { i: i + 1, alpha }));
            }
        }
    }
    for i in 0..base.dim() {
        for j in (i + 1)..base.dim() {
            let lhs = rho.of(&base.bracket_basis(i, j))?;
            let rhs = rho.generator(i).commutator(rho.generator(j));
            if lhs != rhs {
                return Ok(Some(HyperlieError::RhoHomomorphism { i: i + 1, j: j + 1 }));
            }
        }
    }
    Ok(None)
}

/// Semidirect product of `base` with the fiber R^(4k) along `rho`:
/// [(x, v), (y, w)] = ([x, y], rho(x) w - rho(y) v), with complex
/// structures extended block-diagonally by the standard fiber structure.
pub fn semidirect(
    base: &HypercomplexLieAlgebra,
    rho: &Representation,
) -> Result<HypercomplexLieAlgebra, HyperlieError> {
    base.require_valid()?;
    if let Some(err) = representation_failure(&base.algebra, rho)? {
        return Err(err);
    }
    let n = base.dim();
    let r = rho.fiber_dim();
    let dim = n + r;
    let mut g = LieAlgebra::new(dim);
    for i in 0..n {
        for j in (i + 1)..n {
            let coeffs: Vec<(usize, Rational)> = base
                .algebra
                .bracket_basis(i, j)
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            if !coeffs.is_empty() {
                g.set_bracket(i, j, &coeffs);
            }
        }
    }
    for i in 0..n {
        let gen = rho.generator(i);
        for f in 0..r {
            // [e_i, fiber_f] = rho(e_i) fiber_f
            let coeffs: Vec<(usize, Rational)> = (0..r)
                .filter(|&m| !gen[(m, f)].is_zero())
                .map(|m| (n + m, gen[(m, f)].clone()))
                .collect();
            if !coeffs.is_empty() {
                g.set_bracket(i, n + f, &coeffs);
            }
        }
    }
    let fiber = standard_structure(r);
    let structure = HypercomplexStructure::new(
        block_diag(base.structure.j(1), fiber.j(1)),
        block_diag(base.structure.j(2), fiber.j(2)),
        block_diag(base.structure.j(3), fiber.j(3)),
    );
    Ok(HypercomplexLieAlgebra::new(
        format!("{}|x", base.name),
        g,
        structure,
    ))
}

/// Closed-form predictions for the semidirect product, to be compared with
/// direct computation on the constructed algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemidirectPrediction {
    /// Predicted center: (x, v) with x central in the base and rho(x) = 0,
    /// v annihilated by every rho(y).
    pub center: Subspace,
    /// Predicted commutator ideal: base commutator plus the column span of
    /// rho.
    pub commutator: Subspace,
    /// Minimal j with all j-fold products rho(x_1)...rho(x_j) = 0, or None
    /// when no power of the product algebra vanishes.
    pub m_rho: Option<usize>,
    /// Predicted nilpotency step max(step(base), m_rho); None when either
    /// ingredient is undefined.
    pub step: Option<usize>,
}

/// Span of a list of matrices as a subspace of flattened matrix space,
/// together with matrices realizing the canonical basis.
fn matrix_span(mats: &[Matrix], n: usize) -> (Subspace, Vec<Matrix>) {
    let flat: Vec<Vec<Rational>> = mats.iter().map(Matrix::flatten).collect();
    let space = Subspace::span(&flat, n * n).expect("flattened matrices have length n^2");
    let basis = space
        .basis_vectors()
        .into_iter()
        .map(|v| Matrix::from_flat(n, n, v))
        .collect();
    (space, basis)
}

/// Minimal j such that every product of j generator images vanishes,
/// computed through the associative algebra A generated by the images:
/// A is built by a product closure, then the descending chain A >= A^2 >= ...
/// either hits zero (giving m_rho) or stabilizes nonzero (None).
pub fn product_nilpotency_index(rho: &Representation) -> Option<usize> {
    let r = rho.fiber_dim();
    let gens: Vec<Matrix> = (0..rho.base_dim())
        .map(|i| rho.generator(i).clone())
        .filter(|m| !m.is_zero())
        .collect();
    if gens.is_empty() {
        return Some(1);
    }
    // Associative closure.
    let (mut a_space, mut a_basis) = matrix_span(&gens, r);
    loop {
        let mut products = Vec::new();
        for m in &a_basis {
            for g in &gens {
                products.push(m.mul(g));
            }
        }
        let flat: Vec<Vec<Rational>> = products.iter().map(Matrix::flatten).collect();
        let extended = a_space
            .sum(&Subspace::span(&flat, r * r).expect("flat products"))
            .expect("same ambient");
        if extended == a_space {
            break;
        }
        a_space = extended;
        a_basis = a_space
            .basis_vectors()
            .into_iter()
            .map(|v| Matrix::from_flat(r, r, v))
            .collect();
    }
    // Descending powers A^j; A^(j+1) = A * A^j is contained in A^j.
    let mut power_space = a_space.clone();
    let mut power_basis = a_basis.clone();
    let mut j = 1;
    loop {
        if power_space.is_zero() {
            return Some(j);
        }
        let mut products = Vec::new();
        for a in &a_basis {
            for p in &power_basis {
                products.push(a.mul(p));
            }
        }
        let (next_space, next_basis) = matrix_span(&products, r);
        if next_space == power_space {
            return None;
        }
        power_space = next_space;
        power_basis = next_basis;
        j += 1;
    }
}

/// Embeds a subspace of the base (resp. fiber) into the product space by
/// zero-padding on the right (resp. left).
fn embed(sub: &Subspace, before: usize, after: usize) -> Subspace {
    let vectors: Vec<Vec<Rational>> = sub
        .basis_vectors()
        .into_iter()
        .map(|v| {
            let mut w = vec![Rational::zero(); before];
            w.extend(v);
            w.extend(vec![Rational::zero(); after]);
            w
        })
        .collect();
    Subspace::span(&vectors, before + sub.ambient_dim() + after).expect("padded lengths agree")
}

/// Closed-form center, commutator ideal, and step of the semidirect
/// product, computed from the base and rho alone.
pub fn predict_semidirect_invariants(
    base: &HypercomplexLieAlgebra,
    rho: &Representation,
) -> Result<SemidirectPrediction, HyperlieError> {
    if let Some(err) = representation_failure(&base.algebra, rho)? {
        return Err(err);
    }
    let n = base.dim();
    let r = rho.fiber_dim();
    let base_part = base
        .algebra
        .center()
        .intersect(&rho.kernel())?;
    let center = embed(&base_part, 0, r)
        .sum(&embed(&rho.fiber_fixed_space(), n, 0))?;
    let commutator = embed(&base.algebra.commutator_ideal(), 0, r)
        .sum(&embed(&rho.image_span(), n, 0))?;
    let m_rho = product_nilpotency_index(rho);
    let step = match (base.algebra.nilpotency_step(), m_rho) {
        (Nilpotency::Step(l), Some(m)) => Some(l.max(m)),
        _ => None,
    };
    Ok(SemidirectPrediction {
        center,
        commutator,
        m_rho,
        step,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rational::int;

    fn e(r: usize, k: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); r];
        v[k] = int(1);
        v
    }

    #[test]
    fn mu_form_is_antisymmetric() {
        let mut mu = MuForm::new(8, 4);
        mu.set(0, 4, e(4, 0));
        assert_eq!(mu.get(4, 0), vec![int(-1), int(0), int(0), int(0)]);
        let x = vec![int(0), int(0), int(0), int(0), int(1), int(0), int(0), int(0)];
        let y = vec![int(1), int(0), int(0), int(0), int(0), int(0), int(0), int(0)];
        assert_eq!(mu.eval(&x, &y).unwrap()[0], int(-1));
    }

    #[test]
    fn zero_mu_gives_direct_product() {
        let n8 = catalog::entry("n8").unwrap();
        let mu = MuForm::new(8, 4);
        let ext = mu_extension(&n8, &mu).unwrap();
        assert_eq!(ext.dim(), 12);
        assert!(ext.validate().is_empty());
        assert_eq!(ext.algebra.nilpotency_step(), Nilpotency::Step(2));
        for alpha in 1..=3 {
            assert_eq!(step_of_extension(&n8, &mu, alpha).unwrap(), 2);
        }
    }

    #[test]
    fn non_integrable_mu_is_rejected_with_location() {
        let n8 = catalog::entry("n8").unwrap();
        let mut mu = MuForm::new(8, 4);
        // mu = e^{12} x fiber_1 violates the integrability condition.
        mu.set(0, 1, e(4, 0));
        let err = mu_extension(&n8, &mu).unwrap_err();
        assert!(matches!(err, HyperlieError::CocycleIntegrability { .. }));
    }

    #[test]
    fn mu_touching_the_commutator_is_rejected() {
        let n8 = catalog::entry("n8").unwrap();
        let mut mu = MuForm::new(8, 4);
        // e_8 spans the commutator ideal of the base.
        mu.set(7, 0, e(4, 0));
        let err = mu_extension(&n8, &mu).unwrap_err();
        assert!(matches!(err, HyperlieError::CocycleKernel { index: 8 }));
    }

    #[test]
    fn zero_rho_gives_direct_product_with_abelian_factor() {
        let n8 = catalog::entry("n8").unwrap();
        let rho = Representation::zero(8, 4);
        let h = semidirect(&n8, &rho).unwrap();
        assert_eq!(h.dim(), 12);
        assert!(h.validate().is_empty());
        let pred = predict_semidirect_invariants(&n8, &rho).unwrap();
        assert_eq!(pred.m_rho, Some(1));
        assert_eq!(pred.step, Some(2));
        assert_eq!(pred.center, h.algebra.center());
        assert_eq!(pred.commutator, h.algebra.commutator_ideal());
    }

    #[test]
    fn non_quaternionic_rho_is_rejected() {
        let n8 = catalog::entry("n8").unwrap();
        let mut rho = Representation::zero(8, 4);
        let mut m = Matrix::zeros(4, 4);
        m[(1, 0)] = int(1);
        rho.set_generator(0, m);
        let err = semidirect(&n8, &rho).unwrap_err();
        assert!(matches!(
            err,
            HyperlieError::RhoQuaternionic { i: 1, alpha: 1 }
        ));
    }

    #[test]
    fn non_homomorphism_rho_is_rejected() {
        // On n8, [e1, e2] = -e8, so rho(e1) and rho(e2) commuting with
        // everything but rho(e8) nonzero breaks the homomorphism law.
        let n8 = catalog::entry("n8").unwrap();
        let mut rho = Representation::zero(8, 8);
        let mut m = Matrix::zeros(8, 8);
        for f in 0..4 {
            m[(4 + f, f)] = int(1);
        }
        rho.set_generator(7, m);
        let err = semidirect(&n8, &rho).unwrap_err();
        assert!(matches!(err, HyperlieError::RhoHomomorphism { .. }));
    }

    #[test]
    fn product_nilpotency_of_a_jordan_block() {
        let mut rho = Representation::zero(8, 12);
        let mut m = Matrix::zeros(12, 12);
        for b in 0..2 {
            for f in 0..4 {
                m[(4 * (b + 1) + f, 4 * b + f)] = int(1);
            }
        }
        rho.set_generator(0, m);
        assert_eq!(product_nilpotency_index(&rho), Some(3));
    }

    #[test]
    fn non_nilpotent_rho_has_no_index() {
        let mut rho = Representation::zero(4, 4);
        rho.set_generator(0, Matrix::identity(4));
        assert_eq!(product_nilpotency_index(&rho), None);
    }
}
