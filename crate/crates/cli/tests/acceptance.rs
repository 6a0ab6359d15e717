//! Acceptance suite: one test per numbered criterion. Each test prints a
//! single `acceptance criterion NN: PASS ...` line (visible with
//! `--nocapture`) or panics with the collected violations, so the harness
//! emits exactly one pass or fail line per criterion.

use hyperlie_core::construct::{self, block_diag};
use hyperlie_core::dsl::{self, AlgebraSpec};
use hyperlie_core::hyper::HypercomplexLieAlgebra;
use hyperlie_core::lie::Nilpotency;
use hyperlie_core::obata::{self, CyclicPermutation};
use hyperlie_core::rational::{format_combination, rat};
use hyperlie_core::{catalog, holonomy, hyper, sampling, Matrix};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::path::PathBuf;
use std::process::Command;

fn check(failures: &mut Vec<String>, ok: bool, detail: impl FnOnce() -> String) {
    if !ok {
        failures.push(detail());
    }
}

fn finish(number: usize, summary: &str, failures: Vec<String>) {
    assert!(
        failures.is_empty(),
        "acceptance criterion {number:02}: FAIL ({summary}): {}",
        failures.join("; ")
    );
    println!("acceptance criterion {number:02}: PASS ({summary})");
}

/// The catalog entries of nilpotency step exactly 2.
fn strictly_two_step() -> Vec<HypercomplexLieAlgebra> {
    ["n8", "ex_2_2_3", "ex_2_3_3", "ex_nonflat", "ex_semidirect"]
        .iter()
        .map(|name| catalog::entry(name).expect("catalog names resolve"))
        .collect()
}

/// The catalog entries of nilpotency step at most 2.
fn at_most_two_step() -> Vec<HypercomplexLieAlgebra> {
    let mut entries = vec![catalog::torus(1), catalog::torus(2)];
    entries.extend(strictly_two_step());
    entries
}

/// Randomized valid central extensions of n8 by R^4.
fn random_extensions(count: usize, seed: u64) -> Vec<HypercomplexLieAlgebra> {
    let base = catalog::n8();
    let space = sampling::mu_solution_space(&base, 4, &[]).expect("n8 is a valid base");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            construct::mu_extension(&base, &space.sample(&mut rng))
                .expect("sampled forms satisfy the extension checks")
        })
        .collect()
}

#[test]
fn criterion_01_pinned_curvature_value() {
    let mut failures = Vec::new();
    let h = catalog::entry("ex_nonflat").unwrap();
    let conn = obata::obata_connection(&h).unwrap();
    let curv = obata::curvature(&h.algebra, &conn);
    let e1 = h.algebra.basis_vector(0);
    let e8 = h.algebra.basis_vector(7);
    let mut expected = vec![rat(0, 1); 12];
    expected[8] = rat(-1, 4);
    let direct = curv.get(7, 0).apply(&e1);
    check(&mut failures, direct == expected, || {
        format!("direct R(e8, e1) e1 = {}", format_combination(&direct))
    });
    for perm in CyclicPermutation::all() {
        let closed = obata::curvature_two_step(&h, perm, &e8, &e1, &e1).unwrap();
        check(&mut failures, closed == expected, || {
            format!(
                "closed form with {:?} gives {}",
                perm.triple(),
                format_combination(&closed)
            )
        });
    }
    finish(
        1,
        "R(e8, e1) e1 = -1/4 e9 directly and under all three cyclic forms",
        failures,
    );
}

#[test]
fn criterion_02_flatness_table() {
    let mut failures = Vec::new();
    let flat = ["n8", "ex_2_2_3", "ex_2_3_3", "torus(1)", "torus(2)"];
    let nonflat = ["ex_nonflat", "ex_semidirect", "ex_kstep(3)", "ex_3step_16"];
    for name in flat {
        let h = catalog::entry(name).unwrap();
        check(&mut failures, obata::is_flat(&h).unwrap(), || {
            format!("{name} should be flat")
        });
    }
    for name in nonflat {
        let h = catalog::entry(name).unwrap();
        check(&mut failures, !obata::is_flat(&h).unwrap(), || {
            format!("{name} should not be flat")
        });
    }
    finish(2, "flat and non-flat entries match the table", failures);
}

#[test]
fn criterion_03_j_step_table() {
    let mut failures = Vec::new();
    let table: [(&str, [usize; 3]); 4] = [
        ("n8", [2, 2, 2]),
        ("ex_2_2_3", [2, 2, 3]),
        ("ex_2_3_3", [2, 3, 3]),
        ("ex_nonflat", [3, 3, 3]),
    ];
    for (name, steps) in table {
        let h = catalog::entry(name).unwrap();
        for alpha in 1..=3 {
            let j = h.structure.j(alpha);
            let step = hyper::j_nilpotency_step(&h.algebra, j).step();
            check(&mut failures, step == Some(steps[alpha - 1]), || {
                format!("{name}: J{alpha} step {step:?}, expected {}", steps[alpha - 1])
            });
            let by_criterion = hyper::two_step_criterion(&h.algebra, j).unwrap();
            check(
                &mut failures,
                by_criterion == (steps[alpha - 1] == 2),
                || format!("{name}: 2-step criterion disagrees for J{alpha}"),
            );
        }
    }
    finish(
        3,
        "J-step table holds via the series and the 2-step criterion",
        failures,
    );
}

#[test]
fn criterion_04_closed_form_equals_curvature() {
    let mut failures = Vec::new();
    let mut targets = strictly_two_step();
    targets.extend(random_extensions(20, 40));
    for h in &targets {
        let conn = obata::obata_connection(h).unwrap();
        let curv = obata::curvature(&h.algebra, &conn);
        for perm in CyclicPermutation::all() {
            let closed = obata::curvature_two_step_tensor(h, perm).unwrap();
            check(&mut failures, closed == curv, || {
                format!("{}: closed form differs under {:?}", h.name, perm.triple())
            });
        }
    }
    // The triple-at-a-time form, swept over every triple of one entry.
    let h = catalog::entry("n8").unwrap();
    let conn = obata::obata_connection(&h).unwrap();
    let curv = obata::curvature(&h.algebra, &conn);
    for perm in CyclicPermutation::all() {
        for i in 0..8 {
            for j in (i + 1)..8 {
                for k in 0..8 {
                    let closed = obata::curvature_two_step(
                        &h,
                        perm,
                        &h.algebra.basis_vector(i),
                        &h.algebra.basis_vector(j),
                        &h.algebra.basis_vector(k),
                    )
                    .unwrap();
                    check(
                        &mut failures,
                        closed == curv.get_upper(i, j).column(k),
                        || format!("n8 triple ({i}, {j}, {k}) differs under {:?}", perm.triple()),
                    );
                }
            }
        }
    }
    let rejected = obata::curvature_two_step_tensor(
        &catalog::entry("ex_3step_16").unwrap(),
        CyclicPermutation::P1,
    );
    check(&mut failures, rejected.is_err(), || {
        "the closed form accepted a 3-step algebra".to_string()
    });
    finish(
        4,
        "closed form equals the curvature on all triples of 5 catalog entries and 20 random extensions",
        failures,
    );
}

#[test]
fn criterion_05_h_solvability_chain() {
    let mut failures = Vec::new();
    for h in at_most_two_step() {
        let g = &h.algebra;
        let series = hyper::h_solvable_series(g, &h.structure, g.dim() + 1);
        let step = hyper::h_solvability_step(g, &h.structure).step();
        check(
            &mut failures,
            step.is_some_and(|s| s <= 3),
            || format!("{}: H-solvability step {step:?}", h.name),
        );
        check(
            &mut failures,
            series.len() >= 2 && !series[1].is_full(),
            || format!("{}: the first H-term is not proper", h.name),
        );
        for (t, w) in series.windows(2).enumerate() {
            let (prev, cur) = (&w[0], &w[1]);
            check(&mut failures, prev.contains(cur).unwrap(), || {
                format!("{}: term {} does not contain term {}", h.name, t, t + 1)
            });
            let self_bracket = g.bracket_subspaces(cur, cur).unwrap();
            check(&mut failures, cur.contains(&self_bracket).unwrap(), || {
                format!("{}: term {} is not a subalgebra", h.name, t + 1)
            });
            let mixed = g.bracket_subspaces(prev, cur).unwrap();
            check(&mut failures, cur.contains(&mixed).unwrap(), || {
                format!("{}: term {} is not an ideal in term {}", h.name, t + 1, t)
            });
        }
    }
    finish(
        5,
        "H-solvability step <= 3 with a proper chain of subalgebras and ideals",
        failures,
    );
}

#[test]
fn criterion_06_holonomy_shape_of_two_step() {
    let mut failures = Vec::new();
    let mut targets = at_most_two_step();
    targets.extend(random_extensions(10, 60));
    for h in &targets {
        let hol = holonomy::holonomy_algebra(h).unwrap();
        check(&mut failures, hol.is_abelian(), || {
            format!("{}: holonomy is not abelian", h.name)
        });
        check(&mut failures, hol.has_trivial_product(), || {
            format!("{}: holonomy products do not vanish", h.name)
        });
        check(&mut failures, hol.in_sl_n_h(&h.structure), || {
            format!("{}: holonomy leaves sl(n, H)", h.name)
        });
    }
    let dim = holonomy::holonomy_algebra(&catalog::entry("ex_nonflat").unwrap())
        .unwrap()
        .dim();
    check(&mut failures, dim == 5, || {
        format!("ex_nonflat holonomy dimension is {dim}, expected 5")
    });
    finish(
        6,
        "abelian trivial-product holonomy inside sl(n, H); ex_nonflat has dimension 5",
        failures,
    );
}

#[test]
fn criterion_07_semidirect_block_structure() {
    let mut failures = Vec::new();
    let base = catalog::entry("ex_nonflat").unwrap();
    let rho = catalog::rho_semidirect();
    let product = construct::semidirect(&base, &rho).unwrap();
    let n = base.dim();
    let r = product.dim() - n;

    let conn_base = obata::obata_connection(&base).unwrap();
    let conn_prod = obata::obata_connection(&product).unwrap();
    for i in 0..n {
        let expected = block_diag(conn_base.matrix(i), rho.generator(i));
        check(&mut failures, conn_prod.matrix(i) == &expected, || {
            format!("connection in direction e{} is not diag(nabla, rho)", i + 1)
        });
    }
    for f in 0..r {
        check(&mut failures, conn_prod.matrix(n + f).is_zero(), || {
            format!("connection in fiber direction e{} is nonzero", n + f + 1)
        });
    }

    let curv_base = obata::curvature(&base.algebra, &conn_base);
    let curv_prod = obata::curvature(&product.algebra, &conn_prod);
    for (i, j, m) in curv_prod.pairs() {
        let expected = if j < n {
            block_diag(curv_base.get_upper(i, j), &Matrix::zeros(r, r))
        } else {
            Matrix::zeros(n + r, n + r)
        };
        check(&mut failures, m == &expected, || {
            format!("curvature at pair ({}, {}) is not the embedded block", i + 1, j + 1)
        });
    }

    let hol_base = holonomy::holonomy_algebra(&base).unwrap();
    let hol_prod = holonomy::holonomy_algebra(&product).unwrap();
    check(&mut failures, hol_prod.dim() == 5, || {
        format!("semidirect holonomy dimension is {}, expected 5", hol_prod.dim())
    });
    let embedded = holonomy::embed_block(hol_base.space(), n, n + r);
    check(&mut failures, hol_prod.space() == &embedded, || {
        "semidirect holonomy is not the block embedding of the base holonomy".to_string()
    });

    for k in 3..=10 {
        let hk = catalog::ex_kstep(k).unwrap();
        let m_rho = construct::product_nilpotency_index(&catalog::rho_kstep(k));
        check(&mut failures, m_rho == Some(k), || {
            format!("rho for k = {k} has product index {m_rho:?}")
        });
        let step = hk.algebra.nilpotency_step();
        let predicted = m_rho.map(|m| m.max(2));
        check(
            &mut failures,
            step.step() == Some(k) && step.step() == predicted,
            || format!("ex_kstep({k}) has step {:?}, expected {k}", step.step()),
        );
    }
    finish(
        7,
        "semidirect connection, curvature, and holonomy embed blockwise; ex_kstep(k) has step k for k = 3..10",
        failures,
    );
}

#[test]
fn criterion_08_three_step_curvature_is_minus_ad() {
    let mut failures = Vec::new();
    let h = catalog::entry("ex_3step_16").unwrap();
    let conn = obata::obata_connection(&h).unwrap();
    let curv = obata::curvature(&h.algebra, &conn);
    check(
        &mut failures,
        holonomy::curvature_is_minus_ad(&h.algebra, &curv),
        || "some R(e_i, e_j) differs from -ad([e_i, e_j])".to_string(),
    );
    let hol = holonomy::holonomy_algebra(&h).unwrap();
    check(
        &mut failures,
        holonomy::compare_with_ad(&hol, &h).unwrap(),
        || "holonomy differs from the span of ad over [g, g]".to_string(),
    );
    check(&mut failures, hol.is_abelian(), || {
        "holonomy is not abelian".to_string()
    });
    check(&mut failures, hol.in_sl_n_h(&h.structure), || {
        "holonomy leaves sl(n, H)".to_string()
    });
    check(
        &mut failures,
        h.algebra.nilpotency_step() == Nilpotency::Step(3),
        || format!("nilpotency step is {:?}", h.algebra.nilpotency_step()),
    );
    check(
        &mut failures,
        hyper::j_commutator_central(&h).unwrap(),
        || "some J_alpha [g, g] leaves the center".to_string(),
    );
    finish(
        8,
        "ex_3step_16: R = -ad on [g, g], holonomy = ad-span, abelian, in sl(n, H)",
        failures,
    );
}

#[test]
fn criterion_09_two_step_structures_force_flatness() {
    let mut failures = Vec::new();
    let base = catalog::n8();
    let mut rng = ChaCha8Rng::seed_from_u64(90);
    let mut total = 0usize;
    let mut with_two_step = 0usize;
    let mut examine = |h: &HypercomplexLieAlgebra, failures: &mut Vec<String>| {
        total += 1;
        let any_two_step = (1..=3).any(|alpha| {
            hyper::j_nilpotency_step(&h.algebra, h.structure.j(alpha)).step() == Some(2)
        });
        if any_two_step {
            with_two_step += 1;
            check(failures, obata::is_flat(h).unwrap(), || {
                format!("extension {total} has a 2-step structure but is not flat")
            });
        }
    };
    for alpha in 1..=3 {
        let space = sampling::mu_solution_space(&base, 4, &[alpha]).unwrap();
        for _ in 0..10 {
            let h = construct::mu_extension(&base, &space.sample(&mut rng)).unwrap();
            let step = hyper::j_nilpotency_step(&h.algebra, h.structure.j(alpha)).step();
            check(&mut failures, step == Some(2), || {
                format!("restricted sampling for alpha = {alpha} gave step {step:?}")
            });
            examine(&h, &mut failures);
        }
    }
    let space = sampling::mu_solution_space(&base, 4, &[]).unwrap();
    for _ in 0..20 {
        let h = construct::mu_extension(&base, &space.sample(&mut rng)).unwrap();
        examine(&h, &mut failures);
    }
    check(&mut failures, total >= 50, || {
        format!("only {total} extensions were sampled")
    });
    check(&mut failures, with_two_step >= 30, || {
        format!("only {with_two_step} extensions had a 2-step structure")
    });
    finish(
        9,
        &format!("{with_two_step} of {total} random extensions had a 2-step structure; every one was flat"),
        failures,
    );
}

#[test]
fn criterion_10_connection_invariants_on_every_entry() {
    let mut failures = Vec::new();
    for name in catalog::names() {
        let h = catalog::entry(&name).unwrap();
        let conn = obata::obata_connection(&h).unwrap();
        check(
            &mut failures,
            obata::is_torsion_free(&h.algebra, &conn),
            || format!("{name}: torsion does not vanish"),
        );
        for alpha in 1..=3 {
            check(
                &mut failures,
                obata::preserves_structure(&conn, h.structure.j(alpha)),
                || format!("{name}: nabla J{alpha} != 0"),
            );
        }
        check(&mut failures, obata::cyclic_forms_agree(&h).unwrap(), || {
            format!("{name}: the cyclic forms disagree")
        });
        let curv = obata::curvature(&h.algebra, &conn);
        check(&mut failures, obata::first_bianchi_holds(&curv), || {
            format!("{name}: the first Bianchi identity fails")
        });
        for alpha in 1..=3 {
            check(
                &mut failures,
                obata::curvature_commutes_with(&curv, h.structure.j(alpha)),
                || format!("{name}: curvature does not commute with J{alpha}"),
            );
        }
    }
    finish(
        10,
        "torsion-free, structure-preserving, cyclic-form-independent, Bianchi, J-commuting on every entry",
        failures,
    );
}

// The displayed structure-equation blocks, transcribed term for term.

const N8_DE: &str = "\
de1 = 0
de2 = 0
de3 = 0
de4 = 0
de5 = 0
de6 = 0
de7 = 0
de8 = e12 - e34
";

const EX_2_2_3_DE: &str = "\
de1 = 0
de2 = 0
de3 = 0
de4 = 0
de5 = 0
de6 = 0
de7 = 0
de8 = e12 - e34
de9 = -e15
de10 = -e25
de11 = -e35
de12 = -e45
";

const EX_2_3_3_DE: &str = "\
de1 = 0
de2 = 0
de3 = 0
de4 = 0
de5 = 0
de6 = 0
de7 = 0
de8 = e12 - e34
de9 = -e15 - e16
de10 = -e25 - e26
de11 = -e35 - e36
de12 = -e45 - e46
";

const EX_NONFLAT_DE: &str = "\
de1 = 0
de2 = 0
de3 = 0
de4 = 0
de5 = 0
de6 = 0
de7 = 0
de8 = e12 - e34
de9 = -e56
de10 = 0
de11 = e67
de12 = -e57
";

const EX_3STEP_16_DE: &str = "\
de1 = 0
de2 = 0
de3 = 0
de4 = 0
de5 = e12 - e34
de6 = 0
de7 = 0
de8 = 0
de9 = e13 - e42
de10 = 0
de11 = 0
de12 = 0
de13 = -e25 + e39
de14 = e15 + e49
de15 = e45 - e19
de16 = -e35 - e29
";

/// The displayed structure tables: within each block {f1, f2, f3, f4},
/// J1 f1 = f2, J1 f3 = f4; J2 f1 = f3, J2 f2 = -f4; J3 f1 = f4, J3 f2 = f3;
/// the remaining columns are the ones implied by J^2 = -1.
fn standard_j_lines(dim: usize) -> String {
    let table: [[(usize, i64); 4]; 3] = [
        [(1, 1), (0, -1), (3, 1), (2, -1)],
        [(2, 1), (3, -1), (0, -1), (1, 1)],
        [(3, 1), (2, 1), (1, -1), (0, -1)],
    ];
    let mut out = String::new();
    for (a, cols) in table.iter().enumerate() {
        for block in (0..dim).step_by(4) {
            for (c, &(image, sign)) in cols.iter().enumerate() {
                let sign = if sign < 0 { "-" } else { "" };
                out.push_str(&format!(
                    "J{} e{} = {sign}e{}\n",
                    a + 1,
                    block + c + 1,
                    block + image + 1
                ));
            }
        }
    }
    out
}

fn fixture(name: &str, dim: usize, de_block: &str) -> String {
    format!("name {name}\ndim {dim}\n{de_block}{}", standard_j_lines(dim))
}

struct TempFile {
    path: PathBuf,
}

impl TempFile {
    fn new(name: &str, contents: &str) -> TempFile {
        let path =
            std::env::temp_dir().join(format!("hyperlie-acceptance-{}-{name}", std::process::id()));
        std::fs::write(&path, contents).expect("temp files are writable");
        TempFile { path }
    }

    fn path(&self) -> &str {
        self.path.to_str().expect("temp paths are unicode")
    }
}

impl Drop for TempFile {
    fn drop(&mut self) {
        let _ = std::fs::remove_file(&self.path);
    }
}

fn run_binary(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hyperlie"))
        .args(args)
        .output()
        .expect("the binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn criterion_11_parser_contract() {
    let mut failures = Vec::new();

    let displayed: [(&str, usize, &str); 5] = [
        ("n8", 8, N8_DE),
        ("ex_2_2_3", 12, EX_2_2_3_DE),
        ("ex_2_3_3", 12, EX_2_3_3_DE),
        ("ex_nonflat", 12, EX_NONFLAT_DE),
        ("ex_3step_16", 16, EX_3STEP_16_DE),
    ];
    for (name, dim, de_block) in displayed {
        let text = fixture(name, dim, de_block);
        match dsl::parse_dsl(&text) {
            Ok(parsed) => {
                let expected =
                    AlgebraSpec::from_hypercomplex(&catalog::entry(name).unwrap());
                check(&mut failures, parsed == expected, || {
                    format!("the displayed block for {name} parses to a different algebra")
                });
            }
            Err(e) => failures.push(format!("the displayed block for {name} fails to parse: {e}")),
        }
    }

    for name in catalog::names() {
        let spec = AlgebraSpec::from_hypercomplex(&catalog::entry(&name).unwrap());
        check(
            &mut failures,
            dsl::parse_dsl(&spec.to_dsl()).as_ref() == Ok(&spec),
            || format!("{name}: text round trip is not the identity"),
        );
        check(
            &mut failures,
            dsl::parse_json(&spec.to_json()).as_ref() == Ok(&spec),
            || format!("{name}: JSON round trip is not the identity"),
        );
    }

    let malformed: [(&str, &str); 6] = [
        ("truncated-pair.dsl", "name broken\ndim 4\nde1 = e1\n"),
        ("stray-token.dsl", "name broken\ndim 4\nde1 = e12 @\n"),
        ("range.dsl", "name broken\ndim 4\nde9 = 0\n"),
        ("duplicate.dsl", "name broken\ndim 4\nde1 = 0\nde1 = 0\n"),
        ("missing-column.dsl", "name broken\ndim 4\nJ1 e1 = e2\n"),
        ("truncated.json", "{ \"dim\": 4, \"name\": \"x\", "),
    ];
    for (name, contents) in malformed {
        let file = TempFile::new(name, contents);
        let (code, _, stderr) = run_binary(&["validate", file.path()]);
        check(&mut failures, code == 1, || {
            format!("{name}: exit code {code}, expected 1")
        });
        check(
            &mut failures,
            stderr.contains("line ") && stderr.contains("column "),
            || format!("{name}: no position diagnostic in {stderr:?}"),
        );
    }

    let valid = TempFile::new(
        "valid.dsl",
        &AlgebraSpec::from_hypercomplex(&catalog::n8()).to_dsl(),
    );
    let (code, _, _) = run_binary(&["validate", valid.path()]);
    check(&mut failures, code == 0, || {
        format!("valid input exits with {code}, expected 0")
    });

    let broken_jacobi = TempFile::new(
        "jacobi.dsl",
        &format!(
            "name broken\ndim 4\nde3 = -e12\nde1 = -e13\n{}",
            standard_j_lines(4)
        ),
    );
    let (code, stdout, _) = run_binary(&["validate", broken_jacobi.path()]);
    check(&mut failures, code == 2, || {
        format!("Jacobi-violating input exits with {code}, expected 2")
    });
    check(&mut failures, stdout.contains("Jacobi"), || {
        "the violation report does not mention the Jacobi identity".to_string()
    });

    finish(
        11,
        "displayed blocks parse bit-exactly, round trips are identities, malformed inputs exit 1 with positions",
        failures,
    );
}
