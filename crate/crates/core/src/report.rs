//! Analysis reports in text and JSON form.
//!
//! A report bundles the validity check with the derived invariants:
//! nilpotency data, connection identities, curvature, and holonomy. Every
//! number is tagged with the operation that produced it, both inline in the
//! text rendering and as a `provenance` map in the JSON rendering. The JSON
//! form is a superset of the text form; only it carries full matrices.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::error::HyperlieError;
use crate::holonomy;
use crate::hyper::{self, HypercomplexLieAlgebra};
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::obata::{self, Curvature, CyclicPermutation};
use crate::rational::{format_combination, format_rational};

/// Options for `analyze`.
#[derive(Debug, Clone, Copy)]
pub struct AnalyzeOptions {
    /// Cyclic permutation used to build the connection matrices.
    pub permutation: CyclicPermutation,
    /// Iteration cap for the ascending and H-solvable series. Defaults to
    /// dim + 1, which always suffices.
    pub max_iter: Option<usize>,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            permutation: CyclicPermutation::P1,
            max_iter: None,
        }
    }
}

/// One nonzero curvature value R(e_i, e_j) e_k, 1-based, rendered as a
/// basis combination.
#[derive(Debug, Clone, Serialize)]
pub struct CurvatureSample {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: String,
}

/// One nonzero curvature operator R(e_i, e_j), 1-based, with its full
/// matrix.
#[derive(Debug, Clone, Serialize)]
pub struct CurvatureEntry {
    pub i: usize,
    pub j: usize,
    pub matrix: Vec<Vec<String>>,
}

/// Summary of the holonomy algebra inside an analysis report.
#[derive(Debug, Clone, Serialize)]
pub struct HolonomySummary {
    pub dim: usize,
    pub abelian: bool,
    pub trivial_product: bool,
    pub in_sl_n_h: bool,
    /// Provenance of each basis element of the holonomy algebra.
    pub generators: Vec<String>,
}

/// Invariants computed for a valid hypercomplex Lie algebra.
#[derive(Debug, Clone, Serialize)]
pub struct Analysis {
    pub nilpotency_step: Option<usize>,
    pub j_steps: [Option<usize>; 3],
    pub h_series_dims: Vec<usize>,
    pub h_solvability_step: Option<usize>,
    pub j_commutator_central: bool,
    pub permutation: (usize, usize, usize),
    pub cyclic_forms_agree: bool,
    pub torsion_free: bool,
    pub preserves_j: [bool; 3],
    pub first_bianchi: bool,
    pub curvature_commutes_j: [bool; 3],
    pub flat: bool,
    pub curvature_nonzero_pairs: usize,
    pub curvature_pairs_total: usize,
    pub curvature_samples: Vec<CurvatureSample>,
    /// Sparse curvature: nonzero operators only.
    pub curvature: Vec<CurvatureEntry>,
    pub holonomy: HolonomySummary,
}

/// Validity plus, for valid input, the full analysis.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub name: String,
    pub dim: usize,
    pub valid: bool,
    pub violations: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub analysis: Option<Analysis>,
    pub provenance: BTreeMap<&'static str, &'static str>,
}

/// Standalone holonomy report with basis matrices.
#[derive(Debug, Clone, Serialize)]
pub struct HolonomyReport {
    pub name: String,
    pub dim: usize,
    pub holonomy_dim: usize,
    pub abelian: bool,
    pub trivial_product: bool,
    pub in_sl_n_h: bool,
    pub basis: Vec<HolonomyGenerator>,
    pub provenance: BTreeMap<&'static str, &'static str>,
}

/// One basis element of the holonomy algebra and how it arose.
#[derive(Debug, Clone, Serialize)]
pub struct HolonomyGenerator {
    pub produced_by: String,
    pub matrix: Vec<Vec<String>>,
}

fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| format_rational(&m[(i, j)])).collect())
        .collect()
}

fn violation_strings(h: &HypercomplexLieAlgebra) -> Vec<String> {
    h.validate().iter().map(|v| v.to_string()).collect()
}

fn base_provenance() -> BTreeMap<&'static str, &'static str> {
    BTreeMap::from([("violations", "hyper::HypercomplexLieAlgebra::validate")])
}

fn analysis_provenance() -> BTreeMap<&'static str, &'static str> {
    let mut p = base_provenance();
    p.extend([
        ("nilpotency_step", "lie::LieAlgebra::nilpotency_step"),
        ("j_steps", "hyper::ascending_j_series"),
        ("h_series_dims", "hyper::h_solvable_series"),
        ("h_solvability_step", "hyper::h_solvable_series"),
        ("j_commutator_central", "hyper::j_commutator_central"),
        ("cyclic_forms_agree", "obata::cyclic_forms_agree"),
        ("torsion_free", "obata::is_torsion_free"),
        ("preserves_j", "obata::preserves_structure"),
        ("first_bianchi", "obata::first_bianchi_holds"),
        ("curvature_commutes_j", "obata::curvature_commutes_with"),
        ("flat", "obata::curvature"),
        ("curvature", "obata::curvature"),
        ("curvature_samples", "obata::curvature"),
        ("holonomy", "holonomy::holonomy_algebra"),
    ]);
    p
}

/// Validity-only report: the violation list without any derived data.
pub fn validation_report(h: &HypercomplexLieAlgebra) -> Report {
    let violations = violation_strings(h);
    Report {
        name: h.name.clone(),
        dim: h.dim(),
        valid: violations.is_empty(),
        violations,
        analysis: None,
        provenance: base_provenance(),
    }
}

/// Validity-only report for a plain Lie algebra: only the Jacobi identity
/// is checked.
pub fn lie_validation_report(name: &str, g: &LieAlgebra) -> Report {
    let violations: Vec<String> = g
        .jacobi_violations()
        .into_iter()
        .map(|(i, j, k)| hyper::Violation::Jacobi { i, j, k }.to_string())
        .collect();
    Report {
        name: name.to_string(),
        dim: g.dim(),
        valid: violations.is_empty(),
        violations,
        analysis: None,
        provenance: BTreeMap::from([("violations", "lie::LieAlgebra::jacobi_violations")]),
    }
}

fn series_step_if<F: Fn(&crate::subspace::Subspace) -> bool>(
    series: &[crate::subspace::Subspace],
    done: F,
) -> Option<usize> {
    match series.last() {
        Some(last) if done(last) => Some(series.len() - 1),
        _ => None,
    }
}

fn collect_samples(curv: &Curvature, limit: usize) -> Vec<CurvatureSample> {
    let mut samples = Vec::new();
    for (i, j, m) in curv.pairs() {
        if m.is_zero() {
            continue;
        }
        for k in 0..curv.dim() {
            let value = m.column(k);
            if value.iter().all(|c| c.is_zero()) {
                continue;
            }
            samples.push(CurvatureSample {
                i: i + 1,
                j: j + 1,
                k: k + 1,
                value: format_combination(&value),
            });
            if samples.len() == limit {
                return samples;
            }
        }
    }
    samples
}

/// Full analysis of a hypercomplex Lie algebra. Invalid input produces a
/// violations-only report with `analysis` absent.
pub fn analyze(h: &HypercomplexLieAlgebra, opts: &AnalyzeOptions) -> Report {
    let violations = violation_strings(h);
    if !violations.is_empty() {
        return Report {
            name: h.name.clone(),
            dim: h.dim(),
            valid: false,
            violations,
            analysis: None,
            provenance: base_provenance(),
        };
    }

    let g = &h.algebra;
    let n = g.dim();
    let max_iter = opts.max_iter.unwrap_or(n + 1);

    let mut j_steps = [None; 3];
    for alpha in 1..=3 {
        let series = hyper::ascending_j_series(g, h.structure.j(alpha), max_iter);
        j_steps[alpha - 1] = series_step_if(&series, |s| s.is_full());
    }

    let h_series = hyper::h_solvable_series(g, &h.structure, max_iter);
    let h_series_dims: Vec<usize> = h_series.iter().map(|s| s.dim()).collect();
    let h_solvability_step = series_step_if(&h_series, |s| s.is_zero());

    let conn = obata::obata_connection_with(h, opts.permutation)
        .expect("validated structure admits the connection");
    let curv = obata::curvature(g, &conn);
    let nonzero = curv.nonzero_pairs();

    let hol = holonomy::holonomy_from(g, &conn, &curv);
    let holonomy_summary = HolonomySummary {
        dim: hol.dim(),
        abelian: hol.is_abelian(),
        trivial_product: hol.has_trivial_product(),
        in_sl_n_h: hol.in_sl_n_h(&h.structure),
        generators: hol.generators().iter().map(|(_, s)| s.clone()).collect(),
    };

    let analysis = Analysis {
        nilpotency_step: g.nilpotency_step().step(),
        j_steps,
        h_series_dims,
        h_solvability_step,
        j_commutator_central: hyper::j_commutator_central(h)
            .expect("validated structure has matching shapes"),
        permutation: opts.permutation.triple(),
        cyclic_forms_agree: obata::cyclic_forms_agree(h)
            .expect("validated structure admits the connection"),
        torsion_free: obata::is_torsion_free(g, &conn),
        preserves_j: [1, 2, 3].map(|a| obata::preserves_structure(&conn, h.structure.j(a))),
        first_bianchi: obata::first_bianchi_holds(&curv),
        curvature_commutes_j: [1, 2, 3].map(|a| obata::curvature_commutes_with(&curv, h.structure.j(a))),
        flat: curv.is_zero(),
        curvature_nonzero_pairs: nonzero.len(),
        curvature_pairs_total: n * (n - 1) / 2,
        curvature_samples: collect_samples(&curv, 3),
        curvature: curv
            .pairs()
            .filter(|(_, _, m)| !m.is_zero())
            .map(|(i, j, m)| CurvatureEntry {
                i: i + 1,
                j: j + 1,
                matrix: matrix_strings(m),
            })
            .collect(),
        holonomy: holonomy_summary,
    };

    Report {
        name: h.name.clone(),
        dim: h.dim(),
        valid: true,
        violations: Vec::new(),
        analysis: Some(analysis),
        provenance: analysis_provenance(),
    }
}

/// Holonomy report with full basis matrices. Rejects invalid input.
pub fn holonomy_report(h: &HypercomplexLieAlgebra) -> Result<HolonomyReport, HyperlieError> {
    let hol = holonomy::holonomy_algebra(h)?;
    Ok(HolonomyReport {
        name: h.name.clone(),
        dim: h.dim(),
        holonomy_dim: hol.dim(),
        abelian: hol.is_abelian(),
        trivial_product: hol.has_trivial_product(),
        in_sl_n_h: hol.in_sl_n_h(&h.structure),
        basis: hol
            .generators()
            .iter()
            .map(|(m, s)| HolonomyGenerator {
                produced_by: s.clone(),
                matrix: matrix_strings(m),
            })
            .collect(),
        provenance: BTreeMap::from([
            ("basis", "holonomy::holonomy_algebra"),
            ("abelian", "holonomy::HolonomyAlgebra::is_abelian"),
            ("trivial_product", "holonomy::HolonomyAlgebra::has_trivial_product"),
            ("in_sl_n_h", "holonomy::HolonomyAlgebra::in_sl_n_h"),
        ]),
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn step_text(s: Option<usize>) -> String {
    match s {
        Some(k) => k.to_string(),
        None => "none".to_string(),
    }
}

fn triple_text<T: ToString>(values: impl IntoIterator<Item = T>) -> String {
    values
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

impl Report {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("name: {}\n", self.name));
        out.push_str(&format!("dim: {}\n", self.dim));
        if self.valid {
            out.push_str("validity: ok\n");
        } else {
            out.push_str(&format!("validity: {} violation(s)\n", self.violations.len()));
            for v in &self.violations {
                out.push_str(&format!("  - {v}\n"));
            }
        }
        let Some(a) = &self.analysis else {
            return out;
        };
        out.push_str(&format!(
            "nilpotency step: {}  [{}]\n",
            step_text(a.nilpotency_step),
            self.provenance["nilpotency_step"]
        ));
        out.push_str(&format!(
            "J steps: {}  [{}]\n",
            triple_text(a.j_steps.iter().map(|s| step_text(*s))),
            self.provenance["j_steps"]
        ));
        out.push_str(&format!(
            "H-solvable series dims: {}  [{}]\n",
            triple_text(a.h_series_dims.iter()),
            self.provenance["h_series_dims"]
        ));
        out.push_str(&format!(
            "H-solvability step: {}  [{}]\n",
            step_text(a.h_solvability_step),
            self.provenance["h_solvability_step"]
        ));
        out.push_str(&format!(
            "J[g, g] central: {}  [{}]\n",
            yes_no(a.j_commutator_central),
            self.provenance["j_commutator_central"]
        ));
        let (p, q, r) = a.permutation;
        out.push_str(&format!("connection permutation: ({p}, {q}, {r})\n"));
        out.push_str(&format!(
            "cyclic forms agree: {}  [{}]\n",
            yes_no(a.cyclic_forms_agree),
            self.provenance["cyclic_forms_agree"]
        ));
        out.push_str(&format!(
            "torsion-free: {}  [{}]\n",
            yes_no(a.torsion_free),
            self.provenance["torsion_free"]
        ));
        out.push_str(&format!(
            "preserves J1, J2, J3: {}  [{}]\n",
            triple_text(a.preserves_j.iter().map(|b| yes_no(*b))),
            self.provenance["preserves_j"]
        ));
        out.push_str(&format!(
            "first Bianchi identity: {}  [{}]\n",
            yes_no(a.first_bianchi),
            self.provenance["first_bianchi"]
        ));
        out.push_str(&format!(
            "curvature commutes with J1, J2, J3: {}  [{}]\n",
            triple_text(a.curvature_commutes_j.iter().map(|b| yes_no(*b))),
            self.provenance["curvature_commutes_j"]
        ));
        out.push_str(&format!(
            "flat: {}  [{}]\n",
            yes_no(a.flat),
            self.provenance["flat"]
        ));
        out.push_str(&format!(
            "nonzero curvature pairs: {} of {}  [{}]\n",
            a.curvature_nonzero_pairs, a.curvature_pairs_total, self.provenance["curvature"]
        ));
        for s in &a.curvature_samples {
            out.push_str(&format!(
                "sample: R(e{}, e{}) e{} = {}  [{}]\n",
                s.i, s.j, s.k, s.value, self.provenance["curvature_samples"]
            ));
        }
        out.push_str(&format!(
            "holonomy dim: {}  [{}]\n",
            a.holonomy.dim, self.provenance["holonomy"]
        ));
        out.push_str(&format!("holonomy abelian: {}\n", yes_no(a.holonomy.abelian)));
        out.push_str(&format!(
            "holonomy products vanish: {}\n",
            yes_no(a.holonomy.trivial_product)
        ));
        out.push_str(&format!(
            "holonomy in sl(n, H): {}\n",
            yes_no(a.holonomy.in_sl_n_h)
        ));
        if !a.holonomy.generators.is_empty() {
            out.push_str(&format!(
                "holonomy basis: {}\n",
                a.holonomy.generators.join("; ")
            ));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

impl HolonomyReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("name: {}\n", self.name));
        out.push_str(&format!("dim: {}\n", self.dim));
        out.push_str(&format!(
            "holonomy dim: {}  [{}]\n",
            self.holonomy_dim, self.provenance["basis"]
        ));
        out.push_str(&format!("abelian: {}\n", yes_no(self.abelian)));
        out.push_str(&format!(
            "products vanish: {}\n",
            yes_no(self.trivial_product)
        ));
        out.push_str(&format!("in sl(n, H): {}\n", yes_no(self.in_sl_n_h)));
        for g in &self.basis {
            out.push_str(&format!("basis element: {}\n", g.produced_by));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn analysis_of_the_nonflat_extension_has_the_expected_numbers() {
        let h = catalog::entry("ex_nonflat").unwrap();
        let report = analyze(&h, &AnalyzeOptions::default());
        assert!(report.valid);
        let a = report.analysis.as_ref().unwrap();
        assert_eq!(a.nilpotency_step, Some(2));
        assert_eq!(a.j_steps, [Some(3), Some(3), Some(3)]);
        assert_eq!(a.h_series_dims, vec![12, 8, 4, 0]);
        assert_eq!(a.h_solvability_step, Some(3));
        assert!(!a.flat);
        assert!(a.torsion_free);
        assert!(a.cyclic_forms_agree);
        assert!(a.first_bianchi);
        assert_eq!(a.preserves_j, [true, true, true]);
        assert_eq!(a.curvature_commutes_j, [true, true, true]);
        assert_eq!(a.holonomy.dim, 5);
        assert!(a.holonomy.abelian);
        assert_eq!(a.curvature.len(), a.curvature_nonzero_pairs);
        assert_eq!(a.curvature_samples.len(), 3);

        let text = report.render_text();
        assert!(text.contains("nilpotency step: 2"));
        assert!(text.contains("J steps: 3, 3, 3"));
        assert!(text.contains("flat: no"));
        assert!(text.contains("holonomy dim: 5"));
    }

    #[test]
    fn every_text_line_has_a_json_counterpart() {
        let h = catalog::entry("n8").unwrap();
        let report = analyze(&h, &AnalyzeOptions::default());
        let json = report.to_json();
        for key in report.provenance.keys() {
            assert!(json.contains(key), "JSON misses field {key}");
        }
        assert!(json.contains("\"flat\": true"));
        assert_eq!(json, report.to_json());
    }

    #[test]
    fn invalid_input_gets_a_violations_only_report() {
        let mut h = catalog::entry("n8").unwrap();
        h.structure.j[2] = h.structure.j[2].neg();
        let report = analyze(&h, &AnalyzeOptions::default());
        assert!(!report.valid);
        assert!(report.analysis.is_none());
        assert!(!report.violations.is_empty());
        assert!(report.render_text().contains("violation"));
    }

    #[test]
    fn holonomy_report_lists_dimension_and_basis() {
        let h = catalog::entry("ex_nonflat").unwrap();
        let report = holonomy_report(&h).unwrap();
        assert_eq!(report.holonomy_dim, 5);
        assert_eq!(report.basis.len(), 5);
        assert!(report.render_text().contains("holonomy dim: 5"));

        let flat = catalog::entry("n8").unwrap();
        let report = holonomy_report(&flat).unwrap();
        assert_eq!(report.holonomy_dim, 0);
        assert!(report.basis.is_empty());
    }
}
