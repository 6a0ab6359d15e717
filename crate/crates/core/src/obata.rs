//! The Obata connection and its curvature.
//!
//! On a hypercomplex Lie algebra the Obata connection is the unique
//! torsion-free connection with parallel J_1, J_2, J_3. For left-invariant
//! structures it is the bilinear map
//!
//!   D_x y = 1/2 ( [x,y] + J_a [J_a x, y] - J_b [x, J_b y] + J_c [J_a x, J_b y] )
//!
//! for any cyclic permutation (a, b, c) of (1, 2, 3); all three give the same
//! connection, which the test suite verifies. Curvature is
//! R(x,y) = [D_x, D_y] - D_[x,y], stored per basis pair. For 2-step algebras
//! an expanded closed form of 4 R(x,y)z is provided as an independent
//! cross-check of the curvature path.

use crate::error::HyperlieError;
use crate::hyper::HypercomplexLieAlgebra;
use crate::lie::{LieAlgebra, Nilpotency};
use crate::matrix::Matrix;
use crate::rational::{rat, Rational};
use num_traits::Zero;

/// Cyclic permutation (a, b, c) of (1, 2, 3) used to write the connection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CyclicPermutation {
    /// (1, 2, 3)
    P1,
    /// (2, 3, 1)
    P2,
    /// (3, 1, 2)
    P3,
}

impl CyclicPermutation {
    pub fn from_index(i: usize) -> Result<Self, HyperlieError> {
        match i {
            1 => Ok(CyclicPermutation::P1),
            2 => Ok(CyclicPermutation::P2),
            3 => Ok(CyclicPermutation::P3),
            _ => Err(HyperlieError::Unsupported(format!(
                "permutation index {i} (expected 1, 2, or 3)"
            ))),
        }
    }

    /// The triple (a, b, c), 1-based.
    pub fn triple(self) -> (usize, usize, usize) {
        match self {
            CyclicPermutation::P1 => (1, 2, 3),
            CyclicPermutation::P2 => (2, 3, 1),
            CyclicPermutation::P3 => (3, 1, 2),
        }
    }

    pub fn all() -> [CyclicPermutation; 3] {
        [
            CyclicPermutation::P1,
            CyclicPermutation::P2,
            CyclicPermutation::P3,
        ]
    }
}

/// A left-invariant connection: one matrix D_i per basis direction, acting
/// on the second argument, so D_x y = (sum_i x_i D_i) y.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Connection {
    nabla: Vec<Matrix>,
}

impl Connection {
    pub fn dim(&self) -> usize {
        self.nabla.len()
    }

    /// The matrix of D_(e_i), 0-based.
    pub fn matrix(&self, i: usize) -> &Matrix {
        &self.nabla[i]
    }

    /// The matrix of D_x for an arbitrary direction x.
    pub fn direction(&self, x: &[Rational]) -> Result<Matrix, HyperlieError> {
        let n = self.dim();
        if x.len() != n {
            return Err(HyperlieError::VectorLength {
                expected: n,
                got: x.len(),
            });
        }
        let mut m = Matrix::zeros(n, n);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&self.nabla[i].scale(c));
            }
        }
        Ok(m)
    }

    /// D_x y.
    pub fn apply(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>, HyperlieError> {
        Ok(self.direction(x)?.apply(y))
    }
}

/// Curvature stored per basis pair i < j; R(e_j, e_i) = -R(e_i, e_j) and
/// R(e_i, e_i) = 0 are resolved by the accessor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curvature {
    n: usize,
    r: Vec<Matrix>,
}

impl Curvature {
    fn pair_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.n);
        // Position of (i, j) in the lexicographic list of pairs.
        i * self.n - i * (i + 1) / 2 + (j - i - 1)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// R(e_i, e_j) as a fresh matrix, any i, j (0-based).
    pub fn get(&self, i: usize, j: usize) -> Matrix {
        if i == j {
            return Matrix::zeros(self.n, self.n);
        }
        if i < j {
            self.r[self.pair_index(i, j)].clone()
        } else {
            self.r[self.pair_index(j, i)].neg()
        }
    }

    /// Borrowed access for i < j.
    pub fn get_upper(&self, i: usize, j: usize) -> &Matrix {
        &self.r[self.pair_index(i, j)]
    }

    /// All pairs i < j with the curvature matrix.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, &Matrix)> {
        let n = self.n;
        (0..n)
            .flat_map(move |i| ((i + 1)..n).map(move |j| (i, j)))
            .map(move |(i, j)| (i, j, self.get_upper(i, j)))
    }

    pub fn is_zero(&self) -> bool {
        self.r.iter().all(Matrix::is_zero)
    }

    /// Pairs i < j with nonzero curvature, 0-based.
    pub fn nonzero_pairs(&self) -> Vec<(usize, usize)> {
        self.pairs()
            .filter(|(_, _, m)| !m.is_zero())
            .map(|(i, j, _)| (i, j))
            .collect()
    }
}

/// D_x y evaluated directly on vectors with the default permutation,
/// without building the connection matrices and without re-validating the
/// structure. Meaningful only on valid hypercomplex input.
pub fn obata_apply(
    h: &HypercomplexLieAlgebra,
    x: &[Rational],
    y: &[Rational],
) -> Result<Vec<Rational>, HyperlieError> {
    let g = &h.algebra;
    let j1 = h.structure.j(1);
    let j2 = h.structure.j(2);
    let j3 = h.structure.j(3);
    let j1x = j1.apply(x);
    let j2y = j2.apply(y);
    let mut out = g.bracket(x, y)?;
    let t2 = j1.apply(&g.bracket(&j1x, y)?);
    let t3 = j2.apply(&g.bracket(x, &j2y)?);
    let t4 = j3.apply(&g.bracket(&j1x, &j2y)?);
    for k in 0..out.len() {
        out[k] += &t2[k];
        out[k] -= &t3[k];
        out[k] += &t4[k];
    }
    let half = rat(1, 2);
    for v in out.iter_mut() {
        *v *= &half;
    }
    Ok(out)
}

/// R(x, y) z evaluated directly on vectors, without building matrices.
pub fn curvature_apply(
    h: &HypercomplexLieAlgebra,
    x: &[Rational],
    y: &[Rational],
    z: &[Rational],
) -> Result<Vec<Rational>, HyperlieError> {
    let g = &h.algebra;
    let mut out = obata_apply(h, x, &obata_apply(h, y, z)?)?;
    let t2 = obata_apply(h, y, &obata_apply(h, x, z)?)?;
    let t3 = obata_apply(h, &g.bracket(x, y)?, z)?;
    for k in 0..out.len() {
        out[k] -= &t2[k];
        out[k] -= &t3[k];
    }
    Ok(out)
}

fn obata_matrices(h: &HypercomplexLieAlgebra, perm: CyclicPermutation) -> Vec<Matrix> {
    let g = &h.algebra;
    let n = g.dim();
    let (a, b, _c) = perm.triple();
    let ja = h.structure.j(a);
    let jb = h.structure.j(b);
    let jc = ja.mul(jb);
    let half = rat(1, 2);
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let e_i = g.basis_vector(i);
        let ja_ei = ja.apply(&e_i);
        let ad_i = g.ad_basis(i);
        let ad_ja_ei = g.ad(&ja_ei).expect("J e_i has the right length");
        // 2 D_i = ad(e_i) + J_a ad(J_a e_i) - J_b ad(e_i) J_b + J_c ad(J_a e_i) J_b
        let mut m = ad_i.clone();
        m = m.add(&ja.mul(&ad_ja_ei));
        m = m.sub(&jb.mul(&ad_i).mul(jb));
        m = m.add(&jc.mul(&ad_ja_ei).mul(jb));
        out.push(m.scale(&half));
    }
    out
}

/// The Obata connection, built with the given cyclic permutation. Rejects
/// invalid hypercomplex structures.
pub fn obata_connection_with(
    h: &HypercomplexLieAlgebra,
    perm: CyclicPermutation,
) -> Result<Connection, HyperlieError> {
    h.require_valid()?;
    Ok(Connection {
        nabla: obata_matrices(h, perm),
    })
}

/// The Obata connection with the default permutation (1, 2, 3).
pub fn obata_connection(h: &HypercomplexLieAlgebra) -> Result<Connection, HyperlieError> {
    obata_connection_with(h, CyclicPermutation::P1)
}

/// True when all three cyclic permutations produce identical connection
/// matrices. Holds for every valid hypercomplex structure.
pub fn cyclic_forms_agree(h: &HypercomplexLieAlgebra) -> Result<bool, HyperlieError> {
    h.require_valid()?;
    let p1 = obata_matrices(h, CyclicPermutation::P1);
    let p2 = obata_matrices(h, CyclicPermutation::P2);
    let p3 = obata_matrices(h, CyclicPermutation::P3);
    Ok(p1 == p2 && p2 == p3)
}

/// True when D_x y - D_y x = [x, y] on all basis pairs.
pub fn is_torsion_free(g: &LieAlgebra, conn: &Connection) -> bool {
    let n = g.dim();
    for i in 0..n {
        for j in (i + 1)..n {
            let lhs: Vec<Rational> = conn.matrix(i).column(j);
            let rhs: Vec<Rational> = conn.matrix(j).column(i);
            let bracket = g.bracket_basis(i, j);
            for k in 0..n {
                if lhs[k].clone() - &rhs[k] != bracket[k] {
                    return false;
                }
            }
        }
    }
    true
}

/// True when every D_i commutes with the matrix J (i.e. D J = 0 for the
/// induced covariant derivative on endomorphisms).
pub fn preserves_structure(conn: &Connection, j: &Matrix) -> bool {
    (0..conn.dim()).all(|i| conn.matrix(i).mul(j) == j.mul(conn.matrix(i)))
}

/// Curvature R(e_i, e_j) = D_i D_j - D_j D_i - D_([e_i, e_j]), using
/// bilinearity of D in the direction argument for the last term.
pub fn curvature(g: &LieAlgebra, conn: &Connection) -> Curvature {
    let n = g.dim();
    let mut r = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            let mut m = conn.matrix(i).commutator(conn.matrix(j));
            for k in 0..n {
                let c = g.c(i, j, k);
                if !c.is_zero() {
                    m = m.sub(&conn.matrix(k).scale(c));
                }
            }
            r.push(m);
        }
    }
    Curvature { n, r }
}

/// First Bianchi identity: the cyclic sum R(x,y)z + R(y,z)x + R(z,x)y
/// vanishes on all basis triples. Holds for any torsion-free connection.
pub fn first_bianchi_holds(curv: &Curvature) -> bool {
    let n = curv.dim();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let mut s = curv.get_upper(i, j).column(k);
                let t = curv.get_upper(j, k).column(i);
                // R(e_k, e_i) = -R(e_i, e_k)
                let u = curv.get_upper(i, k).column(j);
                for m in 0..n {
                    s[m] += &t[m];
                    s[m] -= &u[m];
                    if !s[m].is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// True when every curvature matrix commutes with J.
pub fn curvature_commutes_with(curv: &Curvature, j: &Matrix) -> bool {
    curv.pairs().all(|(_, _, m)| m.mul(j) == j.mul(m))
}

/// Whether the Obata connection of `h` is flat (all curvature matrices
/// vanish).
pub fn is_flat(h: &HypercomplexLieAlgebra) -> Result<bool, HyperlieError> {
    let conn = obata_connection(h)?;
    Ok(curvature(&h.algebra, &conn).is_zero())
}

/// Expanded closed form of the curvature for 2-step nilpotent algebras:
/// computes 4 R(x,y)z as the 18-term bracket expression obtained by
/// unfolding the connection, then divides by 4. Terms 9 to 16 are terms
/// 1 to 8 with x and y exchanged and signs flipped, which is how they are
/// evaluated here. Rejects algebras that are not 2-step.
pub fn curvature_two_step(
    h: &HypercomplexLieAlgebra,
    perm: CyclicPermutation,
    x: &[Rational],
    y: &[Rational],
    z: &[Rational],
) -> Result<Vec<Rational>, HyperlieError> {
    let g = &h.algebra;
    if g.nilpotency_step() != Nilpotency::Step(2) {
        return Err(HyperlieError::NotTwoStep);
    }
    let (a, b, _c) = perm.triple();
    let ja = h.structure.j(a);
    let jb = h.structure.j(b);
    let jc = ja.mul(jb);
    two_step_value(g, ja, jb, &jc, x, y, z)
}

/// Closed form of the curvature on every basis triple at once, with the
/// nilpotency check and the composite structure hoisted out of the loops;
/// agrees with [`curvature_two_step`] entry by entry.
pub fn curvature_two_step_tensor(
    h: &HypercomplexLieAlgebra,
    perm: CyclicPermutation,
) -> Result<Curvature, HyperlieError> {
    let g = &h.algebra;
    if g.nilpotency_step() != Nilpotency::Step(2) {
        return Err(HyperlieError::NotTwoStep);
    }
    let (a, b, _c) = perm.triple();
    let ja = h.structure.j(a);
    let jb = h.structure.j(b);
    let jc = ja.mul(jb);
    let n = g.dim();
    let mut r = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        let x = g.basis_vector(i);
        for j in (i + 1)..n {
            let y = g.basis_vector(j);
            let mut m = Matrix::zeros(n, n);
            for k in 0..n {
                let v = two_step_value(g, ja, jb, &jc, &x, &y, &g.basis_vector(k))?;
                m.set_column(k, &v);
            }
            r.push(m);
        }
    }
    Ok(Curvature { n, r })
}

/// The 18-term expression 4 R(x,y)z divided by 4.
fn two_step_value(
    g: &LieAlgebra,
    ja: &Matrix,
    jb: &Matrix,
    jc: &Matrix,
    x: &[Rational],
    y: &[Rational],
    z: &[Rational],
) -> Result<Vec<Rational>, HyperlieError> {
    let n = g.dim();
    let mut total = vec![Rational::zero(); n];
    let half = asym_half(g, ja, jb, jc, x, y, z)?;
    add_into(&mut total, &half, 1);
    let swapped = asym_half(g, ja, jb, jc, y, x, z)?;
    add_into(&mut total, &swapped, -1);

    // -2 [J_b [x,y], J_b z] + 2 J_c [J_b [x,y], J_a z]
    let jbxy = jb.apply(&g.bracket(x, y)?);
    let t17 = g.bracket(&jbxy, &jb.apply(z))?;
    add_into(&mut total, &t17, -2);
    let t18 = jc.apply(&g.bracket(&jbxy, &ja.apply(z))?);
    add_into(&mut total, &t18, 2);

    let quarter = rat(1, 4);
    for v in total.iter_mut() {
        *v *= &quarter;
    }
    Ok(total)
}

/// Terms 1-8 of the expanded form:
///   - J_b [x, J_b [y,z]]         + J_c [J_a x, J_b [y,z]]
///   - J_c [x, J_b [J_a y, z]]    - J_b [J_a x, J_b [J_a y, z]]
///   - [x, J_b [y, J_b z]]        - J_a [J_a x, J_b [y, J_b z]]
///   + J_a [x, J_b [J_a y, J_b z]] - [J_a x, J_b [J_a y, J_b z]]
fn asym_half(
    g: &LieAlgebra,
    ja: &Matrix,
    jb: &Matrix,
    jc: &Matrix,
    x: &[Rational],
    y: &[Rational],
    z: &[Rational],
) -> Result<Vec<Rational>, HyperlieError> {
    let n = g.dim();
    let jax = ja.apply(x);
    let jay = ja.apply(y);
    let jbz = jb.apply(z);

    let u1 = jb.apply(&g.bracket(y, z)?);
    let u2 = jb.apply(&g.bracket(&jay, z)?);
    let u3 = jb.apply(&g.bracket(y, &jbz)?);
    let u4 = jb.apply(&g.bracket(&jay, &jbz)?);

    let mut out = vec![Rational::zero(); n];
    add_into(&mut out, &jb.apply(&g.bracket(x, &u1)?), -1);
    add_into(&mut out, &jc.apply(&g.bracket(&jax, &u1)?), 1);
    add_into(&mut out, &jc.apply(&g.bracket(x, &u2)?), -1);
    add_into(&mut out, &jb.apply(&g.bracket(&jax, &u2)?), -1);
    add_into(&mut out, &g.bracket(x, &u3)?, -1);
    add_into(&mut out, &ja.apply(&g.bracket(&jax, &u3)?), -1);
    add_into(&mut out, &ja.apply(&g.bracket(x, &u4)?), 1);
    add_into(&mut out, &g.bracket(&jax, &u4)?, -1);
    Ok(out)
}

fn add_into(acc: &mut [Rational], v: &[Rational], sign: i64) {
    let s = Rational::from_integer(sign.into());
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += b * &s;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rational::{int, rat};

    #[test]
    fn torus_connection_vanishes() {
        let h = catalog::torus(1);
        let conn = obata_connection(&h).unwrap();
        for i in 0..4 {
            assert!(conn.matrix(i).is_zero());
        }
        assert!(is_flat(&h).unwrap());
    }

    #[test]
    fn connection_invariants_on_n8() {
        let h = catalog::entry("n8").unwrap();
        let conn = obata_connection(&h).unwrap();
        assert!(is_torsion_free(&h.algebra, &conn));
        for alpha in 1..=3 {
            assert!(preserves_structure(&conn, h.structure.j(alpha)));
        }
        assert!(cyclic_forms_agree(&h).unwrap());
    }

    #[test]
    fn n8_is_flat() {
        let h = catalog::entry("n8").unwrap();
        assert!(is_flat(&h).unwrap());
    }

    #[test]
    fn nonflat_curvature_value() {
        let h = catalog::entry("ex_nonflat").unwrap();
        let conn = obata_connection(&h).unwrap();
        let curv = curvature(&h.algebra, &conn);
        // R(e8, e1) e1 = -1/4 e9 (0-based: R(e_7, e_0) e_0).
        let r = curv.get(7, 0);
        let mut expected = vec![int(0); 12];
        expected[8] = rat(-1, 4);
        assert_eq!(r.column(0), expected);
    }

    #[test]
    fn two_step_form_agrees_with_direct_curvature_on_nonflat() {
        let h = catalog::entry("ex_nonflat").unwrap();
        let conn = obata_connection(&h).unwrap();
        let curv = curvature(&h.algebra, &conn);
        let n = h.dim();
        for perm in CyclicPermutation::all() {
            for (i, j) in [(7, 0), (0, 1), (4, 6), (2, 9)] {
                for k in 0..n {
                    let x = h.algebra.basis_vector(i);
                    let y = h.algebra.basis_vector(j);
                    let z = h.algebra.basis_vector(k);
                    let closed = curvature_two_step(&h, perm, &x, &y, &z).unwrap();
                    assert_eq!(closed, curv.get(i, j).column(k), "perm {perm:?} ({i},{j},{k})");
                }
            }
        }
    }

    #[test]
    fn two_step_tensor_matches_direct_curvature() {
        let h = catalog::entry("ex_nonflat").unwrap();
        let conn = obata_connection(&h).unwrap();
        let curv = curvature(&h.algebra, &conn);
        for perm in CyclicPermutation::all() {
            assert_eq!(curvature_two_step_tensor(&h, perm).unwrap(), curv);
        }
    }

    #[test]
    fn two_step_form_rejects_higher_step() {
        let h = catalog::entry("ex_3step_16").unwrap();
        let x = h.algebra.basis_vector(0);
        let err = curvature_two_step(&h, CyclicPermutation::P1, &x, &x, &x);
        assert!(matches!(err, Err(HyperlieError::NotTwoStep)));
        assert!(matches!(
            curvature_two_step_tensor(&h, CyclicPermutation::P1),
            Err(HyperlieError::NotTwoStep)
        ));
    }
}
