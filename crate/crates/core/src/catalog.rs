//! Built-in catalog of hypercomplex nilpotent Lie algebras.
//!
//! Every entry is constructed from its structure equations in the
//! Chevalley-Eilenberg convention d a(x, y) = -a([x, y]): a term
//! m e^{ij} in de^k contributes c[i][j][k] = -m. The convention is pinned
//! by a build-time self-check on `ex_nonflat` that reproduces the known
//! curvature value R(e8, e1) e1 = -1/4 e9; a wrong sign convention cannot
//! produce a catalog.
//!
//! Entries:
//!
//! * `torus(n)`: abelian R^(4n) with the standard quaternionic structure.
//! * `n8`: the 8-dimensional 2-step algebra de^8 = e^12 - e^34 with its
//!   standard hypercomplex structure; every J_alpha is 2-step.
//! * `ex_2_2_3`, `ex_2_3_3`: central extensions of n8 by R^4 whose
//!   J-nilpotency steps are (2,2,3) and (2,3,3); both Obata-flat.
//! * `ex_nonflat`: a central extension of n8 by R^4 with all three
//!   structures 3-step and non-vanishing Obata curvature.
//! * `ex_semidirect`: the 20-dimensional semidirect product of ex_nonflat
//!   with R^8, still 2-step, non-flat.
//! * `ex_kstep(k)`: semidirect products of ex_nonflat with R^(4k) of
//!   nilpotency step exactly k, for k >= 3.
//! * `ex_3step_16`: a 16-dimensional 3-step algebra with J_alpha g^1
//!   central for every alpha, whose curvature operators are -ad_[x,y].

use crate::construct::{
    block_diag, mu_extension, semidirect, set_j_pair, standard_structure, MuForm, Representation,
};
use crate::error::HyperlieError;
use crate::hyper::{HypercomplexLieAlgebra, HypercomplexStructure};
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::obata;
use crate::rational::{int, rat, Rational};
use std::collections::BTreeMap;

/// Accumulates structure equations with 1-based indices: `de(k, terms)`
/// records de^k = sum of m e^{ij} over `terms` = [(i, j, m), ...].
struct StructureEquations {
    dim: usize,
    // (i, j) 0-based with i < j -> coefficient list for [e_i, e_j].
    brackets: BTreeMap<(usize, usize), Vec<(usize, Rational)>>,
}

impl StructureEquations {
    fn new(dim: usize) -> Self {
        StructureEquations {
            dim,
            brackets: BTreeMap::new(),
        }
    }

    fn de(&mut self, k: usize, terms: &[(usize, usize, i64)]) {
        assert!(k >= 1 && k <= self.dim);
        for &(i, j, m) in terms {
            assert!(i != j && i >= 1 && j >= 1 && i <= self.dim && j <= self.dim);
            // e^{ji} = -e^{ij}, and a term m e^{ij} means c[i][j][k] = -m.
            let (a, b, m) = if i < j { (i, j, m) } else { (j, i, -m) };
            self.brackets
                .entry((a - 1, b - 1))
                .or_default()
                .push((k - 1, int(-m)));
        }
    }

    fn build(self) -> LieAlgebra {
        let mut g = LieAlgebra::new(self.dim);
        for ((i, j), coeffs) in self.brackets {
            g.set_bracket(i, j, &coeffs);
        }
        g
    }
}

/// `J e_i = sign e_j` with 1-based indices, as displayed in the structure
/// tables; `J e_j = -sign e_i` is implied.
fn jmap(m: &mut Matrix, i: usize, j: usize, sign: i64) {
    set_j_pair(m, i - 1, j - 1, sign);
}

/// The hypercomplex structure of n8, from its displayed table:
/// J1: e1->e2, e3->e4, e5->e6, e7->e8;
/// J2: e1->e3, e2->-e4, e5->e7, e6->-e8;
/// J3: e1->e4, e2->e3, e5->e8, e6->e7.
fn n8_structure() -> HypercomplexStructure {
    let mut j1 = Matrix::zeros(8, 8);
    jmap(&mut j1, 1, 2, 1);
    jmap(&mut j1, 3, 4, 1);
    jmap(&mut j1, 5, 6, 1);
    jmap(&mut j1, 7, 8, 1);
    let mut j2 = Matrix::zeros(8, 8);
    jmap(&mut j2, 1, 3, 1);
    jmap(&mut j2, 2, 4, -1);
    jmap(&mut j2, 5, 7, 1);
    jmap(&mut j2, 6, 8, -1);
    let mut j3 = Matrix::zeros(8, 8);
    jmap(&mut j3, 1, 4, 1);
    jmap(&mut j3, 2, 3, 1);
    jmap(&mut j3, 5, 8, 1);
    jmap(&mut j3, 6, 7, 1);
    HypercomplexStructure::new(j1, j2, j3)
}

/// Extends a structure block-diagonally by the standard structure on R^r.
fn extend_structure(base: &HypercomplexStructure, r: usize) -> HypercomplexStructure {
    let fiber = standard_structure(r);
    HypercomplexStructure::new(
        block_diag(base.j(1), fiber.j(1)),
        block_diag(base.j(2), fiber.j(2)),
        block_diag(base.j(3), fiber.j(3)),
    )
}

/// Abelian R^(4 blocks) with the standard quaternionic structure.
pub fn torus(blocks: usize) -> HypercomplexLieAlgebra {
    assert!(blocks >= 1, "torus needs at least one quaternionic block");
    let dim = 4 * blocks;
    HypercomplexLieAlgebra::new(
        format!("torus({blocks})"),
        LieAlgebra::new(dim),
        standard_structure(dim),
    )
}

/// The 2-step algebra de^8 = e^12 - e^34 with its hypercomplex structure.
pub fn n8() -> HypercomplexLieAlgebra {
    let mut eq = StructureEquations::new(8);
    eq.de(8, &[(1, 2, 1), (3, 4, -1)]);
    HypercomplexLieAlgebra::new("n8", eq.build(), n8_structure())
}

/// The extension form with de^9 = -e^15, de^10 = -e^25, de^11 = -e^35,
/// de^12 = -e^45, i.e. mu(e_i, e_5) = e_(8+i).
pub fn mu_2_2_3() -> MuForm {
    let mut mu = MuForm::new(8, 4);
    for i in 0..4 {
        let mut v = vec![int(0); 4];
        v[i] = int(1);
        mu.set(i, 4, v);
    }
    mu
}

/// The extension form with mu(e_i, e_5) = mu(e_i, e_6) = e_(8+i).
pub fn mu_2_3_3() -> MuForm {
    let mut mu = MuForm::new(8, 4);
    for i in 0..4 {
        let mut v = vec![int(0); 4];
        v[i] = int(1);
        mu.set(i, 4, v.clone());
        mu.set(i, 5, v);
    }
    mu
}

/// The extension form with mu(e5, e6) = e9, mu(e6, e7) = -e11,
/// mu(e5, e7) = e12, matching the structure equations de^9 = -e^56,
/// de^10 = 0, de^11 = e^67, de^12 = -e^57.
pub fn mu_nonflat() -> MuForm {
    let mut mu = MuForm::new(8, 4);
    let unit = |k: usize, s: i64| {
        let mut v = vec![int(0); 4];
        v[k] = int(s);
        v
    };
    mu.set(4, 5, unit(0, 1));
    mu.set(5, 6, unit(2, -1));
    mu.set(4, 6, unit(3, 1));
    mu
}

/// 12-dimensional extension of n8 with J-steps (2, 2, 3); Obata-flat.
pub fn ex_2_2_3() -> HypercomplexLieAlgebra {
    let mut eq = StructureEquations::new(12);
    eq.de(8, &[(1, 2, 1), (3, 4, -1)]);
    eq.de(9, &[(1, 5, -1)]);
    eq.de(10, &[(2, 5, -1)]);
    eq.de(11, &[(3, 5, -1)]);
    eq.de(12, &[(4, 5, -1)]);
    HypercomplexLieAlgebra::new("ex_2_2_3", eq.build(), extend_structure(&n8_structure(), 4))
}

/// 12-dimensional extension of n8 with J-steps (2, 3, 3); Obata-flat.
pub fn ex_2_3_3() -> HypercomplexLieAlgebra {
    let mut eq = StructureEquations::new(12);
    eq.de(8, &[(1, 2, 1), (3, 4, -1)]);
    eq.de(9, &[(1, 5, -1), (1, 6, -1)]);
    eq.de(10, &[(2, 5, -1), (2, 6, -1)]);
    eq.de(11, &[(3, 5, -1), (3, 6, -1)]);
    eq.de(12, &[(4, 5, -1), (4, 6, -1)]);
    HypercomplexLieAlgebra::new("ex_2_3_3", eq.build(), extend_structure(&n8_structure(), 4))
}

/// 12-dimensional extension of n8 where every J_alpha is 3-step and the
/// Obata connection is not flat. Construction asserts the pinned curvature
/// value R(e8, e1) e1 = -1/4 e9, which fixes the sign convention.
pub fn ex_nonflat() -> HypercomplexLieAlgebra {
    let mut eq = StructureEquations::new(12);
    eq.de(8, &[(1, 2, 1), (3, 4, -1)]);
    eq.de(9, &[(5, 6, -1)]);
    eq.de(11, &[(6, 7, 1)]);
    eq.de(12, &[(5, 7, -1)]);
    let h = HypercomplexLieAlgebra::new(
        "ex_nonflat",
        eq.build(),
        extend_structure(&n8_structure(), 4),
    );
    let r = obata::curvature_apply(
        &h,
        &h.algebra.basis_vector(7),
        &h.algebra.basis_vector(0),
        &h.algebra.basis_vector(0),
    )
    .expect("basis vectors have the right length");
    let mut expected = vec![int(0); 12];
    expected[8] = rat(-1, 4);
    assert_eq!(
        r, expected,
        "sign-convention self-check failed: R(e8, e1) e1 != -1/4 e9"
    );
    h
}

/// rho(e1) = [[0, 0], [I4, 0]] acting on R^8, all other generators zero.
pub fn rho_semidirect() -> Representation {
    let mut rho = Representation::zero(12, 8);
    let mut m = Matrix::zeros(8, 8);
    for f in 0..4 {
        m[(4 + f, f)] = int(1);
    }
    rho.set_generator(0, m);
    rho
}

/// rho(e1) with identity blocks on the 4x4 subdiagonal of a k-block matrix,
/// all other generators zero; k-fold products vanish, (k-1)-fold do not.
pub fn rho_kstep(k: usize) -> Representation {
    let mut rho = Representation::zero(12, 4 * k);
    let mut m = Matrix::zeros(4 * k, 4 * k);
    for b in 0..(k - 1) {
        for f in 0..4 {
            m[(4 * (b + 1) + f, 4 * b + f)] = int(1);
        }
    }
    rho.set_generator(0, m);
    rho
}

/// 20-dimensional 2-step semidirect product of ex_nonflat with R^8;
/// non-flat, holonomy isomorphic to that of ex_nonflat.
pub fn ex_semidirect() -> HypercomplexLieAlgebra {
    let mut h = semidirect(&ex_nonflat(), &rho_semidirect())
        .expect("catalog representation data is valid");
    h.name = "ex_semidirect".to_string();
    h
}

/// Semidirect product of ex_nonflat with R^(4k) of nilpotency step exactly
/// k; requires k >= 3 (k = 2 is `ex_semidirect`).
pub fn ex_kstep(k: usize) -> Result<HypercomplexLieAlgebra, HyperlieError> {
    if k < 3 {
        return Err(HyperlieError::Unsupported(format!(
            "ex_kstep needs k >= 3, got {k}"
        )));
    }
    let mut h = semidirect(&ex_nonflat(), &rho_kstep(k))?;
    h.name = format!("ex_kstep({k})");
    Ok(h)
}

/// 16-dimensional 3-step algebra with J_alpha g^1 central for every alpha.
pub fn ex_3step_16() -> HypercomplexLieAlgebra {
    let mut eq = StructureEquations::new(16);
    eq.de(5, &[(1, 2, 1), (3, 4, -1)]);
    eq.de(9, &[(1, 3, 1), (4, 2, -1)]);
    eq.de(13, &[(2, 5, -1), (3, 9, 1)]);
    eq.de(14, &[(1, 5, 1), (4, 9, 1)]);
    eq.de(15, &[(4, 5, 1), (1, 9, -1)]);
    eq.de(16, &[(3, 5, -1), (2, 9, -1)]);

    let mut j1 = Matrix::zeros(16, 16);
    jmap(&mut j1, 1, 2, 1);
    jmap(&mut j1, 3, 4, 1);
    jmap(&mut j1, 5, 6, 1);
    jmap(&mut j1, 7, 8, 1);
    jmap(&mut j1, 9, 10, 1);
    jmap(&mut j1, 11, 12, 1);
    jmap(&mut j1, 13, 14, 1);
    jmap(&mut j1, 15, 16, 1);
    let mut j2 = Matrix::zeros(16, 16);
    jmap(&mut j2, 1, 3, 1);
    jmap(&mut j2, 2, 4, -1);
    jmap(&mut j2, 5, 7, 1);
    jmap(&mut j2, 6, 8, -1);
    jmap(&mut j2, 9, 11, 1);
    jmap(&mut j2, 10, 12, -1);
    jmap(&mut j2, 13, 15, 1);
    jmap(&mut j2, 14, 16, -1);
    let mut j3 = Matrix::zeros(16, 16);
    jmap(&mut j3, 1, 4, 1);
    jmap(&mut j3, 2, 3, 1);
    jmap(&mut j3, 5, 8, 1);
    jmap(&mut j3, 6, 7, 1);
    jmap(&mut j3, 9, 12, 1);
    jmap(&mut j3, 10, 11, 1);
    jmap(&mut j3, 13, 16, 1);
    jmap(&mut j3, 14, 15, 1);

    HypercomplexLieAlgebra::new(
        "ex_3step_16",
        eq.build(),
        HypercomplexStructure::new(j1, j2, j3),
    )
}

/// The default entry names, in presentation order. `torus` and `ex_kstep`
/// are parametric; the listed instances are representatives.
pub fn names() -> Vec<String> {
    vec![
        "torus(1)".to_string(),
        "torus(2)".to_string(),
        "n8".to_string(),
        "ex_2_2_3".to_string(),
        "ex_2_3_3".to_string(),
        "ex_nonflat".to_string(),
        "ex_semidirect".to_string(),
        "ex_kstep(3)".to_string(),
        "ex_3step_16".to_string(),
    ]
}

/// Looks up an entry by name; `torus(n)` and `ex_kstep(k)` accept any
/// n >= 1 and k >= 3.
pub fn entry(name: &str) -> Result<HypercomplexLieAlgebra, HyperlieError> {
    match name {
        "n8" => return Ok(n8()),
        "ex_2_2_3" => return Ok(ex_2_2_3()),
        "ex_2_3_3" => return Ok(ex_2_3_3()),
        "ex_nonflat" => return Ok(ex_nonflat()),
        "ex_semidirect" => return Ok(ex_semidirect()),
        "ex_3step_16" => return Ok(ex_3step_16()),
        _ => {}
    }
    if let Some(arg) = parse_parametric(name, "torus") {
        let blocks = arg.map_err(|_| HyperlieError::UnknownCatalog(name.to_string()))?;
        if blocks < 1 {
            return Err(HyperlieError::Unsupported(
                "torus needs at least one block".to_string(),
            ));
        }
        return Ok(torus(blocks));
    }
    if let Some(arg) = parse_parametric(name, "ex_kstep") {
        let k = arg.map_err(|_| HyperlieError::UnknownCatalog(name.to_string()))?;
        return ex_kstep(k);
    }
    Err(HyperlieError::UnknownCatalog(name.to_string()))
}

fn parse_parametric(name: &str, family: &str) -> Option<Result<usize, ()>> {
    let rest = name.strip_prefix(family)?;
    let inner = rest.strip_prefix('(')?.strip_suffix(')')?;
    Some(inner.trim().parse::<usize>().map_err(|_| ()))
}

/// Construction cross-checks used by the test suite: the mu and rho data
/// rebuild the corresponding catalog entries.
pub fn rebuild_from_mu(name: &str) -> Result<HypercomplexLieAlgebra, HyperlieError> {
    let base = n8();
    let mu = match name {
        "ex_2_2_3" => mu_2_2_3(),
        "ex_2_3_3" => mu_2_3_3(),
        "ex_nonflat" => mu_nonflat(),
        _ => return Err(HyperlieError::UnknownCatalog(name.to_string())),
    };
    let mut h = mu_extension(&base, &mu)?;
    h.name = name.to_string();
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::Nilpotency;

    #[test]
    fn every_entry_is_valid() {
        for name in names() {
            let h = entry(&name).unwrap();
            assert_eq!(h.name, name);
            assert!(h.validate().is_empty(), "{name} failed validation");
        }
    }

    #[test]
    fn dimensions_and_steps() {
        let expect: &[(&str, usize, Option<usize>)] = &[
            ("torus(1)", 4, Some(1)),
            ("torus(2)", 8, Some(1)),
            ("n8", 8, Some(2)),
            ("ex_2_2_3", 12, Some(2)),
            ("ex_2_3_3", 12, Some(2)),
            ("ex_nonflat", 12, Some(2)),
            ("ex_semidirect", 20, Some(2)),
            ("ex_kstep(3)", 24, Some(3)),
            ("ex_3step_16", 16, Some(3)),
        ];
        for &(name, dim, step) in expect {
            let h = entry(name).unwrap();
            assert_eq!(h.dim(), dim, "{name} dimension");
            assert_eq!(h.algebra.nilpotency_step().step(), step, "{name} step");
        }
    }

    #[test]
    fn extension_entries_rebuild_from_their_mu_data() {
        for name in ["ex_2_2_3", "ex_2_3_3", "ex_nonflat"] {
            let direct = entry(name).unwrap();
            let rebuilt = rebuild_from_mu(name).unwrap();
            assert_eq!(direct, rebuilt, "{name} structure constants differ");
        }
    }

    #[test]
    fn kstep_has_step_k() {
        for k in 3..=5 {
            let h = ex_kstep(k).unwrap();
            assert_eq!(h.dim(), 12 + 4 * k);
            assert_eq!(h.algebra.nilpotency_step(), Nilpotency::Step(k));
        }
        assert!(ex_kstep(2).is_err());
    }

    #[test]
    fn unknown_names_are_rejected() {
        assert!(matches!(
            entry("no_such_entry"),
            Err(HyperlieError::UnknownCatalog(_))
        ));
        assert!(entry("torus(x)").is_err());
        assert!(entry("torus(0)").is_err());
    }

    #[test]
    fn sixteen_dim_entry_centralizes_j_of_commutator() {
        let h = ex_3step_16();
        let g1 = h.algebra.commutator_ideal();
        assert_eq!(g1.dim(), 6);
        let z = h.algebra.center();
        assert_eq!(z.dim(), 10);
        for alpha in 1..=3 {
            let jg1 = g1.map_through(h.structure.j(alpha)).unwrap();
            assert!(z.contains(&jg1).unwrap(), "J_{alpha} g^1 not central");
        }
    }
}
