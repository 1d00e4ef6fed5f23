//! Acceptance criteria, one test each. Every test prints a single
//! `criterion N: PASS|FAIL` line (followed by any mismatches) before
//! asserting. All comparisons are exact.

use std::process::Command;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hhsl2::catalog::predict::{ext2_step, predicted_dim, DimFamily};
use hhsl2::catalog::relations::{relations, verify_relation};
use hhsl2::catalog::span::{presentation_hilbert, span_check, HhGroup};
use hhsl2::catalog::{build_cocycle, CocycleName};
use hhsl2::complex::{differential, differential_matrix, GradedCell};
use hhsl2::poly::monomials_of;
use hhsl2::sl2::{act, phi_map};
use hhsl2::{BiGradedPoly, ExtEngine, LieBasis, ModuleSpec, Prime, VarSet};

fn prime(n: u64) -> Prime {
    Prime::new(n).unwrap()
}

fn verdict(n: u32, title: &str, problems: &[String]) {
    let tag = if problems.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {n} ({title}): {tag}");
    for m in problems {
        println!("  {m}");
    }
}

fn finish(n: u32, title: &str, problems: Vec<String>) {
    verdict(n, title, &problems);
    assert!(
        problems.is_empty(),
        "criterion {n} failed at {} point(s)",
        problems.len()
    );
}

#[test]
fn criterion_1_natural_module_dimensions() {
    let mut problems = Vec::new();
    for pn in [3u64, 5, 7] {
        let p = prime(pn);
        let engine = ExtEngine::new(p);
        let (mut long_form, mut short_form) = (0, 0);
        for n in 0..=3 * p.get() {
            let m = ModuleSpec::SymNatural(2 * n);
            let dim = |i| engine.ext_dim(i, m).unwrap() as i64;
            for (i, fam) in [(1, DimFamily::Ext1Natural), (3, DimFamily::Ext3Natural)] {
                let want = predicted_dim(fam, n, p);
                if dim(i) != want {
                    problems.push(format!(
                        "p={pn} 2n={}: Ext^{i} = {} but formula gives {want}",
                        2 * n,
                        dim(i)
                    ));
                }
            }
            let stated = predicted_dim(DimFamily::Ext2Natural, n, p);
            let alt = predicted_dim(DimFamily::Ext2NaturalAlt, n, p);
            let got = dim(2);
            if stated != alt {
                long_form += usize::from(got == stated);
                short_form += usize::from(got == alt);
            }
            if got != stated && got != alt {
                problems.push(format!(
                    "p={pn} 2n={}: Ext^2 = {got}, stated form gives {stated}, other form {alt}",
                    2 * n
                ));
            }
        }
        println!(
            "  p={pn}: in the r=p-2 branch Ext^2 agrees with 2q+2 at {long_form} points and with 2q at {short_form}; discrepancy reported for {}",
            if long_form >= short_form { "2q" } else { "2q+2" }
        );
    }
    finish(1, "natural-module Ext dimensions", problems);
}

#[test]
fn criterion_2_adjoint_module_dimensions() {
    let mut problems = Vec::new();
    for pn in [3u64, 5, 7] {
        let p = prime(pn);
        let engine = ExtEngine::new(p);
        let top = 4 * p.get();
        let dims: Vec<[i64; 4]> = (0..=top)
            .map(|n| {
                let mut row = [0; 4];
                for (i, v) in row.iter_mut().enumerate() {
                    *v = engine.ext_dim(i, ModuleSpec::SymAdjoint(n)).unwrap() as i64;
                }
                row
            })
            .collect();
        for n in 0..=top {
            let row = dims[n as usize];
            for (i, fam) in [
                (0, DimFamily::FN),
                (1, DimFamily::Ext1AdjointCorollary),
                (3, DimFamily::Ext3Adjoint),
            ] {
                let want = predicted_dim(fam, n, p);
                if row[i] != want {
                    problems.push(format!(
                        "p={pn} n={n}: Ext^{i} = {} but {} gives {want}",
                        row[i], fam
                    ));
                }
            }
            let (want, got) = if n < 2 {
                (0, row[2])
            } else {
                (ext2_step(n, p), row[2] - dims[n as usize - 2][2])
            };
            if want != got {
                problems.push(format!(
                    "p={pn} n={n}: Ext^2 step is {got}, recurrence gives {want}"
                ));
            }
        }
    }
    finish(2, "adjoint-module Ext dimensions", problems);
}

#[test]
fn criterion_3_cocycle_certification() {
    let mut problems = Vec::new();
    for pn in [3u64, 5, 7, 11] {
        let p = prime(pn);
        for name in CocycleName::ALL {
            let a = build_cocycle(name, p).unwrap();
            let cell = a.cell();
            let v = cell.to_vector(&a).unwrap();
            let image = differential_matrix(&cell).apply(&v);
            if image.iter().any(|&x| x != 0) || !differential(&a).is_zero() {
                problems.push(format!("p={pn}: d({name}) != 0"));
            }
        }
    }
    finish(3, "cocycle certification", problems);
}

#[test]
fn criterion_4_relations() {
    let mut problems = Vec::new();
    for pn in [3u64, 5, 7] {
        let p = prime(pn);
        let engine = ExtEngine::new(p);
        for rel in relations(p) {
            let r = verify_relation(&engine, &rel).unwrap();
            if !r.passed() {
                problems.push(format!(
                    "p={pn} {}: expected {:?}, found {:?} ({})",
                    rel.id, rel.expected, r.status, rel.citation
                ));
            }
        }
    }
    finish(4, "relations", problems);
}

#[test]
fn criterion_5_connecting_homomorphisms() {
    let mut problems = Vec::new();
    for pn in [3u64, 5, 7] {
        let p = prime(pn);
        let engine = ExtEngine::new(p);
        for n in 2..=3 * p.get() {
            for i in 0..=2 {
                let want = usize::from(i == 2 && n == p.get() - 1);
                let got = engine.connecting_cokernel_dim(i, n).unwrap();
                if got != want {
                    problems.push(format!(
                        "p={pn} n={n}: coker(phi* on Ext^{i}) = {got}, expected {want}"
                    ));
                }
            }
            let want = usize::from(n == p.get() - 1);
            let got = engine.times_c_kernel_dim(3, n).unwrap();
            if got != want {
                problems.push(format!(
                    "p={pn} n={n}: ker(xc on Ext^3) = {got}, expected {want}"
                ));
            }
        }
    }
    finish(5, "connecting homomorphisms", problems);
}

#[test]
fn criterion_6_generation() {
    let mut problems = Vec::new();
    for pn in [3u64, 5] {
        let p = prime(pn);
        let engine = ExtEngine::new(p);
        for i in 1..=3 {
            for row in span_check(&engine, i, 4 * p.get()).unwrap() {
                if !row.spans() {
                    problems.push(format!(
                        "p={pn} i={i} n={}: span {} of {}",
                        row.n, row.span_dim, row.ext_dim
                    ));
                }
            }
        }
    }
    finish(6, "generation", problems);
}

#[test]
fn criterion_7_presentations() {
    let mut problems = Vec::new();
    for pn in [3u64, 5, 7] {
        let p = prime(pn);
        let engine = ExtEngine::new(p);
        let mut printed_divergence = Vec::new();
        for n in 0..=4 * p.get() {
            for g in HhGroup::ALL {
                let got = engine
                    .ext_dim(g.degree(), ModuleSpec::SymAdjoint(n))
                    .unwrap() as i64;
                let want = presentation_hilbert(g, n, p);
                if got != want {
                    problems.push(format!(
                        "p={pn} n={n} {}: dim {got}, presentation gives {want}",
                        g.id()
                    ));
                }
                if g == HhGroup::HH1 {
                    let printed = predicted_dim(DimFamily::HilbCn, n, p);
                    if printed != got {
                        printed_divergence.push(format!("n={n}: {printed} vs {got}"));
                    }
                }
            }
        }
        if !printed_divergence.is_empty() {
            println!(
                "  p={pn}: HH1 with second sum up to (p-1)/2 diverges (discrepancy) at {}",
                printed_divergence.join(", ")
            );
        }
    }
    finish(7, "presentations", problems);
}

fn random_poly(rng: &mut ChaCha8Rng, p: Prime, vars: VarSet, degree: u32) -> BiGradedPoly {
    let max_w = match vars {
        VarSet::Adjoint => 2 * degree as i64,
        VarSet::Natural => degree as i64,
    };
    let mut terms = Vec::new();
    let mut w = -max_w;
    while w <= max_w {
        for m in monomials_of(vars, degree, w) {
            if rng.gen_bool(0.5) {
                terms.push((m, rng.gen_range(0..p.get())));
            }
        }
        w += 2;
    }
    BiGradedPoly::from_terms(p, vars, terms)
}

fn bracket_act(x: LieBasis, y: LieBasis, a: &BiGradedPoly) -> BiGradedPoly {
    match x.bracket(y) {
        None => BiGradedPoly::zero(a.prime(), a.vars()),
        Some((k, z)) => act(z, a).scale_int(k),
    }
}

#[test]
fn criterion_8_structural_properties() {
    let mut problems = Vec::new();
    for pn in [3u64, 5, 7] {
        let p = prime(pn);
        let engine = ExtEngine::new(p);
        let mut rng = ChaCha8Rng::seed_from_u64(0x5e12 + pn);

        // d∘d = 0, Euler characteristic, natural-module weight support
        let mut modules: Vec<ModuleSpec> = (0..=3 * p.get()).map(ModuleSpec::SymAdjoint).collect();
        modules.extend((0..=3 * p.get()).map(|n| ModuleSpec::SymNatural(2 * n)));
        for m in modules {
            let mut weights: Vec<i64> = (0..=3).flat_map(|i| GradedCell::weights(m, i)).collect();
            weights.sort_unstable();
            weights.dedup();
            for w in weights {
                let (mut chi_chain, mut chi_coh) = (0i64, 0i64);
                for i in 0..=3 {
                    let cell = GradedCell::new(p, m, i, w).unwrap();
                    if i < 3 {
                        let dd = differential_matrix(&cell.next()).mul(&differential_matrix(&cell));
                        if !dd.is_zero() {
                            problems.push(format!("p={pn} {m} i={i} w={w}: d∘d != 0"));
                        }
                    }
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    let h = engine.ext_dim_at_weight(i, m, w).unwrap() as i64;
                    chi_chain += sign * cell.dim() as i64;
                    chi_coh += sign * h;
                    if matches!(m, ModuleSpec::SymNatural(_))
                        && w.rem_euclid(p.get() as i64) != 0
                        && h != 0
                    {
                        problems.push(format!(
                            "p={pn} {m} i={i} w={w}: Ext^{i} = {h} at weight prime to p"
                        ));
                    }
                }
                if chi_chain != chi_coh {
                    problems.push(format!("p={pn} {m} w={w}: Euler {chi_chain} vs {chi_coh}"));
                }
            }
        }

        // equivariance, derivation rule, bracket compatibility
        for _ in 0..500 {
            let n = rng.gen_range(0..=3 * p.get());
            let a = random_poly(&mut rng, p, VarSet::Adjoint, n);
            let (db, du) = (rng.gen_range(0..=p.get()), rng.gen_range(0..=2 * p.get()));
            let b = random_poly(&mut rng, p, VarSet::Adjoint, db);
            let u = random_poly(&mut rng, p, VarSet::Natural, du);
            let pa = phi_map(n, &a).unwrap();
            for g in LieBasis::ALL {
                if phi_map(n, &act(g, &a)).unwrap() != act(g, &pa) {
                    problems.push(format!("p={pn}: phi({g}·a) != {g}·phi(a) for a = {a}"));
                }
                let lhs = act(g, &(&a * &b));
                let rhs = &(&act(g, &a) * &b) + &(&a * &act(g, &b));
                if lhs != rhs {
                    problems.push(format!("p={pn}: Leibniz fails for {g} on {a} and {b}"));
                }
                for h in LieBasis::ALL {
                    for v in [&a, &u] {
                        let lhs = &act(g, &act(h, v)) - &act(h, &act(g, v));
                        if lhs != bracket_act(g, h, v) {
                            problems.push(format!("p={pn}: [{g},{h}] acts wrongly on {v}"));
                        }
                    }
                }
            }
        }
    }
    problems.truncate(20);
    finish(8, "structural properties", problems);
}

#[test]
fn criterion_9_determinism() {
    let exe = env!("CARGO_BIN_EXE_hhsl2");
    let mut problems = Vec::new();
    for format in ["json", "text", "csv"] {
        let run = || {
            Command::new(exe)
                .args(["report", "--p", "5", "--format", format])
                .env("HHSL2_THREADS", "0")
                .output()
                .unwrap()
        };
        let (a, b) = (run(), run());
        if a.stdout.is_empty() || a.stdout != b.stdout || a.stderr != b.stderr {
            problems.push(format!("report --format {format} differs between runs"));
        }
    }
    let dirs = [tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap()];
    for (k, d) in dirs.iter().enumerate() {
        let threads = if k == 0 { "1" } else { "4" };
        Command::new(exe)
            .args(["report", "--p", "3", "--format", "csv", "--out"])
            .arg(d.path())
            .env("HHSL2_THREADS", threads)
            .status()
            .unwrap();
    }
    let list = |d: &std::path::Path| {
        let mut v: Vec<_> = std::fs::read_dir(d)
            .unwrap()
            .map(|e| e.unwrap().file_name())
            .collect();
        v.sort();
        v
    };
    let names = list(dirs[0].path());
    if names != list(dirs[1].path()) || names.len() < 2 {
        problems.push("csv report file sets differ".into());
    }
    for name in names {
        let a = std::fs::read(dirs[0].path().join(&name)).unwrap();
        let b = std::fs::read(dirs[1].path().join(&name)).unwrap();
        if a != b {
            problems.push(format!("{} differs between runs", name.to_string_lossy()));
        }
    }
    finish(9, "determinism", problems);
}
