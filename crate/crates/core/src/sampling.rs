//! Randomized generation of valid construction data for property tests.
//!
//! The admissible mu forms for a central extension are cut out by linear
//! equations: vanishing on the commutator ideal plus the integrability
//! condition, both over the entries mu(e_i, e_j)_t with i < j. The whole
//! solution set is therefore the kernel of one exact matrix, and sampling
//! reduces to drawing small integer combinations of a kernel basis.
//!
//! Representations are sampled as strictly block-lower-triangular matrices
//! whose 4x4 blocks commute with the standard fiber structure, assigned to
//! a single basis vector that has no component in the bracket image; with
//! all other generators zero, the homomorphism identity holds trivially.

use rand::Rng;

use crate::construct::{standard_structure, MuForm, Representation};
use crate::error::HyperlieError;
use crate::hyper::HypercomplexLieAlgebra;
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::rational::{int, Rational};
use crate::subspace::Subspace;
use num_traits::Zero;

/// The linear space of admissible mu forms for a fixed base and fiber,
/// optionally restricted so that a chosen J'_alpha of the extension stays
/// 2-step. Vectors list the entries mu(e_i, e_j)_t for i < j in
/// lexicographic pair order, fiber coordinates innermost.
#[derive(Debug, Clone)]
pub struct MuSpace {
    base_dim: usize,
    fiber_dim: usize,
    space: Subspace,
}

fn pair_offset(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

impl MuSpace {
    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn fiber_dim(&self) -> usize {
        self.fiber_dim
    }

    /// Dimension of the solution space.
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Coordinates of a mu form in the variable order of this space.
    pub fn vector_of(&self, mu: &MuForm) -> Vec<Rational> {
        assert_eq!(mu.base_dim(), self.base_dim, "base dimension mismatch");
        assert_eq!(mu.fiber_dim(), self.fiber_dim, "fiber dimension mismatch");
        let pairs = self.base_dim * (self.base_dim - 1) / 2;
        let mut v = vec![Rational::zero(); pairs * self.fiber_dim];
        for (i, j, value) in mu.entries() {
            let base = pair_offset(self.base_dim, i, j) * self.fiber_dim;
            for (t, c) in value.iter().enumerate() {
                v[base + t] = c.clone();
            }
        }
        v
    }

    /// Whether a mu form satisfies all defining equations of this space.
    pub fn contains(&self, mu: &MuForm) -> Result<bool, HyperlieError> {
        self.space.contains_vec(&self.vector_of(mu))
    }

    fn form_from_vector(&self, v: &[Rational]) -> MuForm {
        let mut mu = MuForm::new(self.base_dim, self.fiber_dim);
        for i in 0..self.base_dim {
            for j in (i + 1)..self.base_dim {
                let at = pair_offset(self.base_dim, i, j) * self.fiber_dim;
                mu.set(i, j, v[at..at + self.fiber_dim].to_vec());
            }
        }
        mu
    }

    /// A random element: a small integer combination of the kernel basis,
    /// resampled a few times to avoid the zero form when the space allows.
    pub fn sample(&self, rng: &mut impl Rng) -> MuForm {
        let basis = self.space.basis_vectors();
        let vars = self.space.ambient_dim();
        for _ in 0..32 {
            let mut v = vec![Rational::zero(); vars];
            for b in &basis {
                let c = rng.random_range(-2..=2i64);
                if c == 0 {
                    continue;
                }
                let c = int(c);
                for (slot, coeff) in v.iter_mut().zip(b) {
                    if !coeff.is_zero() {
                        *slot += coeff * &c;
                    }
                }
            }
            if v.iter().any(|c| !c.is_zero()) {
                return self.form_from_vector(&v);
            }
        }
        self.form_from_vector(&vec![Rational::zero(); vars])
    }
}

/// Computes the space of mu forms that vanish on the commutator ideal and
/// satisfy the integrability condition for every alpha. Each alpha listed
/// in `two_step_alphas` adds the requirement that mu vanish on J_alpha of
/// the commutator ideal, which keeps J'_alpha of the extension 2-step.
pub fn mu_solution_space(
    base: &HypercomplexLieAlgebra,
    fiber_dim: usize,
    two_step_alphas: &[usize],
) -> Result<MuSpace, HyperlieError> {
    base.require_valid()?;
    if fiber_dim == 0 || fiber_dim % 4 != 0 {
        return Err(HyperlieError::FiberDimension(fiber_dim));
    }
    let n = base.dim();
    let r = fiber_dim;
    let pairs = n * (n - 1) / 2;
    let vars = pairs * r;
    let fiber = standard_structure(r);

    let add = |row: &mut Vec<Rational>, a: usize, b: usize, t: usize, coeff: Rational| {
        if a == b || coeff.is_zero() {
            return;
        }
        let (idx, sign) = if a < b {
            (pair_offset(n, a, b) * r + t, coeff)
        } else {
            (pair_offset(n, b, a) * r + t, -coeff)
        };
        row[idx] += sign;
    };

    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for alpha in 1..=3 {
        let j = base.structure.j(alpha);
        let i_a = fiber.j(alpha);
        for p in 0..n {
            for q in (p + 1)..n {
                for t in 0..r {
                    let mut row = vec![Rational::zero(); vars];
                    for s in 0..r {
                        add(&mut row, p, q, s, i_a[(t, s)].clone());
                    }
                    for a in 0..n {
                        let c = &j[(a, p)];
                        if !c.is_zero() {
                            add(&mut row, a, q, t, -c.clone());
                        }
                    }
                    for b in 0..n {
                        let c = &j[(b, q)];
                        if !c.is_zero() {
                            add(&mut row, p, b, t, -c.clone());
                        }
                    }
                    for a in 0..n {
                        let ca = &j[(a, p)];
                        if ca.is_zero() {
                            continue;
                        }
                        for b in 0..n {
                            let cb = &j[(b, q)];
                            if cb.is_zero() {
                                continue;
                            }
                            for s in 0..r {
                                let ci = &i_a[(t, s)];
                                if !ci.is_zero() {
                                    add(&mut row, a, b, s, -(ca.clone() * cb * ci));
                                }
                            }
                        }
                    }
                    rows.push(row);
                }
            }
        }
    }

    let g1 = base.algebra.commutator_ideal();
    let mut annihilated = g1.basis_vectors();
    for &alpha in two_step_alphas {
        annihilated.extend(
            g1.map_through(base.structure.j(alpha))?
                .basis_vectors(),
        );
    }
    for v in &annihilated {
        for q in 0..n {
            for t in 0..r {
                let mut row = vec![Rational::zero(); vars];
                for (a, c) in v.iter().enumerate() {
                    if !c.is_zero() {
                        add(&mut row, a, q, t, c.clone());
                    }
                }
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }

    let constraints = Matrix::from_rows(rows, vars);
    Ok(MuSpace {
        base_dim: n,
        fiber_dim: r,
        space: Subspace::kernel_of(&constraints),
    })
}

/// Basis of the 4x4 matrices commuting with all three blocks of the
/// standard fiber structure, computed as an exact kernel.
fn quaternionic_block_basis() -> Vec<Matrix> {
    let fiber = standard_structure(4);
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for alpha in 1..=3 {
        let i_a = fiber.j(alpha);
        for p in 0..4 {
            for q in 0..4 {
                let mut row = vec![Rational::zero(); 16];
                for s in 0..4 {
                    row[p * 4 + s] += &i_a[(s, q)];
                    row[s * 4 + q] -= &i_a[(p, s)];
                }
                rows.push(row);
            }
        }
    }
    let constraints = Matrix::from_rows(rows, 16);
    let basis: Vec<Matrix> = Subspace::kernel_of(&constraints)
        .basis_vectors()
        .into_iter()
        .map(|v| Matrix::from_flat(4, 4, v))
        .collect();
    assert_eq!(basis.len(), 4, "fiber block commutant has dimension 4");
    basis
}

/// Basis indices with no component in any bracket value; assigning the
/// only nonzero generator of a representation to such an index makes the
/// homomorphism identity hold with both sides zero.
pub fn bracket_free_indices(g: &LieAlgebra) -> Vec<usize> {
    let n = g.dim();
    (0..n)
        .filter(|&k| (0..n).all(|i| (i + 1..n).all(|j| g.c(i, j, k).is_zero())))
        .collect()
}

/// A random quaternionic representation on R^(4 * blocks): one strictly
/// block-lower-triangular matrix on a random bracket-free basis index, all
/// other generators zero.
pub fn sample_representation(
    g: &LieAlgebra,
    blocks: usize,
    rng: &mut impl Rng,
) -> Result<Representation, HyperlieError> {
    if blocks == 0 {
        return Err(HyperlieError::FiberDimension(0));
    }
    let eligible = bracket_free_indices(g);
    if eligible.is_empty() {
        return Err(HyperlieError::Unsupported(
            "every basis index meets the bracket image".to_string(),
        ));
    }
    let fiber = 4 * blocks;
    let block_basis = quaternionic_block_basis();
    let mut rho = Representation::zero(g.dim(), fiber);
    let target = eligible[rng.random_range(0..eligible.len())];
    for _ in 0..32 {
        let mut m = Matrix::zeros(fiber, fiber);
        for big in 1..blocks {
            for small in 0..big {
                for basis in &block_basis {
                    let c = rng.random_range(-2..=2i64);
                    if c == 0 {
                        continue;
                    }
                    let c = int(c);
                    for p in 0..4 {
                        for q in 0..4 {
                            if !basis[(p, q)].is_zero() {
                                m[(4 * big + p, 4 * small + q)] += basis[(p, q)].clone() * &c;
                            }
                        }
                    }
                }
            }
        }
        if !m.is_zero() || blocks == 1 {
            rho.set_generator(target, m);
            return Ok(rho);
        }
    }
    Ok(rho)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::construct;
    use crate::hyper;
    use crate::lie::Nilpotency;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn catalog_mu_data_lies_in_the_solution_space() {
        let base = catalog::n8();
        let space = mu_solution_space(&base, 4, &[]).unwrap();
        assert!(space.dim() > 0);
        for mu in [
            catalog::mu_2_2_3(),
            catalog::mu_2_3_3(),
            catalog::mu_nonflat(),
        ] {
            assert_eq!(space.contains(&mu), Ok(true));
        }
    }

    #[test]
    fn sampled_mu_forms_build_valid_extensions() {
        let base = catalog::n8();
        let space = mu_solution_space(&base, 4, &[]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let mu = space.sample(&mut rng);
            let h = construct::mu_extension(&base, &mu).unwrap();
            assert!(h.is_valid());
            assert_eq!(h.dim(), 12);
        }
    }

    #[test]
    fn two_step_restriction_keeps_the_chosen_structure_two_step() {
        let base = catalog::n8();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for alpha in 1..=3 {
            let space = mu_solution_space(&base, 4, &[alpha]).unwrap();
            assert!(space.dim() > 0);
            let mu = space.sample(&mut rng);
            let h = construct::mu_extension(&base, &mu).unwrap();
            let step = hyper::j_nilpotency_step(&h.algebra, h.structure.j(alpha));
            assert_eq!(step, Nilpotency::Step(2));
        }
    }

    #[test]
    fn sampled_representations_pass_the_construction_checks() {
        let base = catalog::n8();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for blocks in [2, 3] {
            let rho = sample_representation(&base.algebra, blocks, &mut rng).unwrap();
            assert_eq!(
                construct::representation_failure(&base.algebra, &rho),
                Ok(None)
            );
            let h = construct::semidirect(&base, &rho).unwrap();
            assert!(h.is_valid());
        }
    }

    #[test]
    fn bracket_free_indices_avoid_the_commutator_support() {
        let g = catalog::n8().algebra;
        assert_eq!(bracket_free_indices(&g), vec![0, 1, 2, 3, 4, 5, 6]);
    }
}
