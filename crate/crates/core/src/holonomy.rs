//! Infinitesimal holonomy of a left-invariant connection.
//!
//! For a left-invariant connection the holonomy algebra at the identity is
//! the smallest subspace of gl(g) that contains every curvature operator
//! R(x, y), is stable under commutators with the connection matrices D_i,
//! and is closed under its own Lie bracket. Stability under [D_i, -]
//! subsumes the covariant derivatives of the curvature: (D_z R)(x, y)
//! differs from [D_z, R(x, y)] by curvature operators, which are already in
//! the space.
//!
//! The closure runs over the flattened matrix space Q^(n^2) with exact rank
//! tracking: a candidate enters the generating set only when it enlarges
//! the span, so the generator list is always a basis and the loop
//! terminates after at most n^2 additions. Each generator carries a
//! provenance string recording how it arose.

use crate::error::HyperlieError;
use crate::hyper::{HypercomplexLieAlgebra, HypercomplexStructure};
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::obata::{self, Connection, Curvature};
use crate::subspace::Subspace;
use num_traits::Zero;

/// The holonomy algebra as a subspace of gl(n) = Q^(n^2), together with the
/// generators that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HolonomyAlgebra {
    n: usize,
    space: Subspace,
    generators: Vec<(Matrix, String)>,
}

impl HolonomyAlgebra {
    /// Size of the matrices (the dimension of the underlying algebra).
    pub fn matrix_dim(&self) -> usize {
        self.n
    }

    /// Dimension of the holonomy algebra as a vector space.
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_trivial(&self) -> bool {
        self.space.is_zero()
    }

    /// The canonical subspace of flattened matrices.
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    /// The canonical basis, reshaped to matrices.
    pub fn basis_matrices(&self) -> Vec<Matrix> {
        self.space
            .basis_vectors()
            .into_iter()
            .map(|v| Matrix::from_flat(self.n, self.n, v))
            .collect()
    }

    /// Generators in discovery order with provenance: "R(ei, ej)" for a
    /// curvature operator, "[D(ei), hk]" for a bracket with a connection
    /// direction, "[ha, hb]" for a bracket of earlier generators. Indices in
    /// the strings are 1-based; hk names the k-th generator of this list.
    pub fn generators(&self) -> &[(Matrix, String)] {
        &self.generators
    }

    pub fn contains(&self, m: &Matrix) -> Result<bool, HyperlieError> {
        self.space.contains_vec(&m.flatten())
    }

    /// True when all pairs of basis elements commute.
    pub fn is_abelian(&self) -> bool {
        let basis = self.basis_matrices();
        for (a, ma) in basis.iter().enumerate() {
            for mb in &basis[(a + 1)..] {
                if !ma.commutator(mb).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// True when the product (not just the commutator) of any two basis
    /// elements vanishes. Implies abelian.
    pub fn has_trivial_product(&self) -> bool {
        let basis = self.basis_matrices();
        for ma in &basis {
            for mb in &basis {
                if !ma.mul(mb).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// True when every element is traceless and commutes with J_1, J_2, J_3,
    /// i.e. the algebra lies in sl(n/4, H) for the given structure.
    pub fn in_sl_n_h(&self, structure: &HypercomplexStructure) -> bool {
        self.basis_matrices().iter().all(|m| {
            m.trace().is_zero()
                && (1..=3).all(|alpha| {
                    let j = structure.j(alpha);
                    m.mul(j) == j.mul(m)
                })
        })
    }
}

fn try_add(
    space: &mut Subspace,
    generators: &mut Vec<(Matrix, String)>,
    candidate: Matrix,
    provenance: String,
) -> bool {
    let flat = candidate.flatten();
    if space
        .contains_vec(&flat)
        .expect("flattened matrices have ambient length")
    {
        return false;
    }
    *space = space
        .sum(&Subspace::span(&[flat], space.ambient_dim()).expect("length checked above"))
        .expect("same ambient");
    generators.push((candidate, provenance));
    true
}

/// Holonomy closure from an explicit connection and curvature.
pub fn holonomy_from(g: &LieAlgebra, conn: &Connection, curv: &Curvature) -> HolonomyAlgebra {
    let n = g.dim();
    let mut space = Subspace::zero(n * n);
    let mut generators: Vec<(Matrix, String)> = Vec::new();
    for (i, j, m) in curv.pairs() {
        if m.is_zero() {
            continue;
        }
        try_add(
            &mut space,
            &mut generators,
            m.clone(),
            format!("R(e{}, e{})", i + 1, j + 1),
        );
    }
    // Worklist closure: every generator is bracketed with each connection
    // direction and each earlier generator; bilinearity of the bracket makes
    // generator-level closure equivalent to closure of the whole span.
    let mut next = 0;
    while next < generators.len() {
        let current = generators[next].0.clone();
        for i in 0..n {
            let c = conn.matrix(i).commutator(&current);
            try_add(
                &mut space,
                &mut generators,
                c,
                format!("[D(e{}), h{}]", i + 1, next + 1),
            );
        }
        for a in 0..next {
            let c = generators[a].0.commutator(&current);
            try_add(
                &mut space,
                &mut generators,
                c,
                format!("[h{}, h{}]", a + 1, next + 1),
            );
        }
        next += 1;
    }
    HolonomyAlgebra {
        n,
        space,
        generators,
    }
}

/// Holonomy algebra of the Obata connection. Rejects invalid structures.
pub fn holonomy_algebra(h: &HypercomplexLieAlgebra) -> Result<HolonomyAlgebra, HyperlieError> {
    let conn = obata::obata_connection(h)?;
    let curv = obata::curvature(&h.algebra, &conn);
    Ok(holonomy_from(&h.algebra, &conn, &curv))
}

/// Span of { ad(v) : v in sub } inside the flattened matrix space Q^(n^2).
pub fn ad_image_span(g: &LieAlgebra, sub: &Subspace) -> Result<Subspace, HyperlieError> {
    let n = g.dim();
    if sub.ambient_dim() != n {
        return Err(HyperlieError::AmbientMismatch {
            left: sub.ambient_dim(),
            right: n,
        });
    }
    let vectors: Vec<Vec<crate::rational::Rational>> = sub
        .basis_vectors()
        .iter()
        .map(|v| g.ad(v).map(|m| m.flatten()))
        .collect::<Result<_, _>>()?;
    Subspace::span(&vectors, n * n)
}

/// True when R(e_i, e_j) = -ad([e_i, e_j]) for all basis pairs.
pub fn curvature_is_minus_ad(g: &LieAlgebra, curv: &Curvature) -> bool {
    for (i, j, m) in curv.pairs() {
        let ad = g
            .ad(&g.bracket_basis(i, j))
            .expect("bracket values have the right length");
        if *m != ad.neg() {
            return false;
        }
    }
    true
}

/// Compares a holonomy algebra with span{ ad(z) : z in [g, g] }.
///
/// The comparison requires J_alpha [g, g] to lie in the center for every
/// alpha; the first alpha breaking that containment is reported as an error.
pub fn compare_with_ad(
    hol: &HolonomyAlgebra,
    h: &HypercomplexLieAlgebra,
) -> Result<bool, HyperlieError> {
    let g1 = h.algebra.commutator_ideal();
    let z = h.algebra.center();
    for alpha in 1..=3 {
        let jg1 = g1.map_through(h.structure.j(alpha))?;
        if !z.contains(&jg1)? {
            return Err(HyperlieError::CommutatorNotCentralized(alpha));
        }
    }
    Ok(hol.space() == &ad_image_span(&h.algebra, &g1)?)
}

/// Image of a subspace of gl(m) under the block inclusion
/// gl(m) -> gl(total), A -> diag(A, 0).
pub fn embed_block(space: &Subspace, m: usize, total: usize) -> Subspace {
    assert_eq!(space.ambient_dim(), m * m, "not a subspace of gl(m)");
    assert!(total >= m);
    let vectors: Vec<Vec<crate::rational::Rational>> = space
        .basis_vectors()
        .into_iter()
        .map(|v| {
            let a = Matrix::from_flat(m, m, v);
            let mut big = Matrix::zeros(total, total);
            for i in 0..m {
                for j in 0..m {
                    if !a[(i, j)].is_zero() {
                        big[(i, j)] = a[(i, j)].clone();
                    }
                }
            }
            big.flatten()
        })
        .collect();
    Subspace::span(&vectors, total * total).expect("padded matrices have ambient length")
}
