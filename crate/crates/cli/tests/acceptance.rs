//! Acceptance run: one line per criterion, exits nonzero on an unexpected result.

use std::path::PathBuf;
use std::process::{Command, ExitCode};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use pseudalg::bialgebra::{dual_coalgebra, InfBialgebra};
use pseudalg::cohomology::{d0, is_cocycle1};
use pseudalg::hopf::{check_hopf_axioms, HTensor, HopfSpec};
use pseudalg::lie::{
    check_balanceator_zero, check_coboundary_lie, check_lie_coalgebra, check_lie_cocycle, check_thm56, delta_lie,
};
use pseudalg::lincomb::{int, LinComb};
use pseudalg::literal::{parse_literal, render, render_pseudo};
use pseudalg::module::{FreeModule, Mono};
use pseudalg::pseudotensor::{fourier, fourier_inv, normalize_last, PseudoTensor};
use pseudalg::sample;
use pseudalg::ybe::{coassoc_equiv_check, delta_r, two_tensor};
use pseudalg_cli::specfile::{parse_spec, AlgebraSection, SpecFile};

/// Criteria expected to fail; see the README.
const KNOWN_FAILURES: &[usize] = &[3];

const BUNDLED: &[&str] = &["twisted-square.spec", "coboundary.spec", "coboundary-dual.spec", "cur-twisted-square.spec"];

const EXTRA: &[&str] = &["twisted-square-at-k.spec", "commutative-at-k.spec", "cur-commutative.spec"];

type Outcome = Result<String, String>;

fn spec_path(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../specs").join(name).to_str().unwrap().to_string()
}

fn read(name: &str) -> String {
    std::fs::read_to_string(spec_path(name)).unwrap()
}

fn load(name: &str) -> SpecFile {
    parse_spec(&read(name)).unwrap()
}

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_pseudalg")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn twisted_square_variant(dir: &tempfile::TempDir) -> String {
    let path = dir.path().join("g-squared.spec");
    std::fs::write(&path, read("twisted-square.spec").replace("[d1 # 1]", "[d1 # d1^2]")).unwrap();
    path.to_str().unwrap().to_string()
}

fn criterion_1() -> Outcome {
    let (code, out) = run(&["deltar", &spec_path("coboundary.spec")]);
    ensure(code == 0, || format!("exit {code}"))?;
    for line in ["delta e1 = (e1, e1)", "delta e2 = (e2, e1)"] {
        ensure(out.lines().any(|l| l == line), || format!("missing `{line}` in\n{out}"))?;
    }
    let spec = load("coboundary.spec");
    let s = &spec.algebras[0];
    let dr = delta_r(&s.algebra, s.r.as_ref().unwrap());
    let m = s.module();
    ensure(dr.value(0) == two_tensor(m, &[(0, 0, 1)]) && dr.value(1) == two_tensor(m, &[(1, 0, 1)]), || {
        "library values differ".into()
    })?;
    Ok("delta e1 = (e1, e1), delta e2 = (e2, e1)".into())
}

fn criterion_2() -> Outcome {
    let file = spec_path("coboundary.spec");
    for (cmd, line) in [("aybe", "A(r) = 0"), ("cybe", "[[r, r]] = 0")] {
        let (code, out) = run(&[cmd, &file]);
        ensure(code == 0 && out.lines().any(|l| l == line), || format!("{cmd}: exit {code}\n{out}"))?;
    }
    let spec = load("coboundary.spec");
    let lie = spec.algebras[0].algebra.lie_ify();
    let m = lie.module().clone();
    let one = m.hopf().one();
    let e1 = |c: i64| PseudoTensor::from_decorated(&LinComb::term((one.clone(), vec![Mono::new(0, one.clone())]), int(c)));
    // [e2*e1] is the skew partner of [e1*e2]
    let expected = [((0, 0), PseudoTensor::zero(2)), ((0, 1), e1(-1)), ((1, 0), e1(1)), ((1, 1), PseudoTensor::zero(2))];
    for ((i, j), want) in expected {
        let got = lie.product(i, j);
        ensure(got == want, || format!("[{}*{}] = {}", m.label(i), m.label(j), render_pseudo(&m, &got)))?;
    }
    Ok(format!("A(r) = 0, [[r, r]] = 0, [e1*e2] = {}", render_pseudo(&m, &lie.product(0, 1))))
}

fn criterion_3() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let runs = [("g = 1", spec_path("twisted-square.spec")), ("g = d^2", twisted_square_variant(&dir))];
    let mut failed = Vec::new();
    for (label, file) in &runs {
        for suite in ["assoc", "coassoc", "compat"] {
            let (code, out) = run(&["check", file, "--suite", suite]);
            if code != 0 {
                let witness = out.lines().find(|l| l.trim_start().starts_with("at ")).unwrap_or("").trim();
                failed.push(format!("{label} {suite} exit {code} {witness}"));
            }
        }
    }
    ensure(failed.is_empty(), || failed.join("; "))?;
    Ok("assoc, coassoc and compat pass for g = 1 and g = d^2".into())
}

fn criterion_4() -> Outcome {
    let spec = load("coboundary.spec");
    let alg = &spec.algebras[0].algebra;
    let mut rng = StdRng::seed_from_u64(7);
    let mut coassociative = 0;
    for i in 0..50 {
        let r = sample::random_sparse_tensor(&mut rng, alg.module(), 2, 1, 3);
        let eq = coassoc_equiv_check(alg, &r);
        ensure(eq.agree(), || format!("sample {i}: verdicts disagree"))?;
        coassociative += usize::from(eq.coassociative.passed());
        let b = InfBialgebra::new(alg.clone(), delta_r(alg, &r)).unwrap();
        ensure(b.check_compat().passed(), || format!("sample {i}: compat defect nonzero"))?;
    }
    Ok(format!("50 samples agree, {coassociative} coassociative, compat defect 0 throughout"))
}

fn valid_bialgebras() -> Vec<(String, InfBialgebra)> {
    let mut out = Vec::new();
    for name in BUNDLED.iter().chain(EXTRA) {
        for s in load(name).algebras {
            if let Some(b) = s.bialgebra() {
                out.push((format!("{name}:{}", s.name), b));
            }
        }
    }
    out
}

fn criterion_5() -> Outcome {
    let all = valid_bialgebras();
    for (name, b) in &all {
        ensure(b.is_valid(), || format!("{name} is not a valid bialgebra"))?;
        ensure(check_thm56(b).passed(), || format!("{name}: residual nonzero"))?;
    }
    Ok(format!("residual 0 on {} bialgebras", all.len()))
}

fn criterion_6() -> Outcome {
    for name in ["cur-commutative.spec", "coboundary.spec"] {
        let b = load(name).algebras[0].bialgebra().unwrap();
        ensure(check_balanceator_zero(&b).passed(), || format!("{name}: balanceator nonzero"))?;
    }
    Ok("balanceator 0 on cur-commutative and coboundary".into())
}

fn criterion_7() -> Outcome {
    let spec = load("coboundary.spec");
    let s = &spec.algebras[0];
    let bracket = s.algebra.lie_ify();
    let cobracket = delta_lie(&s.comultiplication().unwrap());
    let mut reports = vec![bracket.check_skew(), bracket.check_jacobi()];
    reports.extend(check_lie_coalgebra(&cobracket));
    reports.push(check_lie_cocycle(&bracket, &cobracket));
    reports.push(check_coboundary_lie(&bracket, &cobracket, s.r.as_ref().unwrap()));
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).map(|r| r.name.clone()).collect();
    ensure(failed.is_empty(), || failed.join(", "))?;
    Ok(format!("{} Lie checks pass", reports.len()))
}

fn criterion_8() -> Outcome {
    let text = read("coboundary.spec");
    let alg = &parse_spec(&text).unwrap().algebras[0].algebra;
    let dual = dual_coalgebra(alg);
    let dm = dual.module().clone();
    ensure(dm.labels() == ["a1", "a2"], || format!("labels {:?}", dm.labels()))?;
    ensure(dual.value(0) == two_tensor(&dm, &[(1, 0, 1)]), || "delta a1".into())?;
    ensure(dual.value(1) == two_tensor(&dm, &[(1, 1, 1)]), || "delta a2".into())?;
    ensure(dual.check_coassoc().passed(), || "dual not coassociative".into())?;

    let broken = text.replace("product e2 e2 = [1 # 1] @H e2", "product e2 e2 = [1 # 1] @H e1");
    let broken = &parse_spec(&broken).unwrap().algebras[0].algebra;
    ensure(!broken.check_structure_associativity().passed(), || "structure defect stayed 0".into())?;
    ensure(!dual_coalgebra(broken).check_coassoc().passed(), || "dual coassoc defect stayed 0".into())?;
    Ok("delta a1 = (a2, a1), delta a2 = (a2, a2), violation detected on both sides".into())
}

fn random_h_tensor(rng: &mut StdRng, hopf: &HopfSpec, degree: u32) -> HTensor {
    let mut out = HTensor::zero();
    for _ in 0..rng.gen_range(1..=4) {
        let key = (0..2).map(|_| sample::random_basis(rng, hopf, degree)).collect();
        out.add_term(key, int(rng.gen_range(-3..=3)));
    }
    out
}

fn criterion_9() -> Outcome {
    let hopfs = [HopfSpec::polynomial(1).unwrap(), HopfSpec::polynomial(2).unwrap(), HopfSpec::cyclic(2), HopfSpec::cyclic(3)];
    let mut rng = StdRng::seed_from_u64(9);
    for h in &hopfs {
        let report = check_hopf_axioms(h, 4);
        ensure(report.passed(), || format!("{}: {:?}", h.describe(), report.failures))?;
        for _ in 0..20 {
            let x = random_h_tensor(&mut rng, h, 3);
            ensure(fourier_inv(h, &fourier(h, &x)) == x, || format!("{}: fourier round trip", h.describe()))?;
        }
    }
    for i in 0..100 {
        let h = &hopfs[i % hopfs.len()];
        let m = FreeModule::new(h.clone(), vec!["e1".into(), "e2".into()]).unwrap();
        let arity = 1 + i % 3;
        let (moved, acted) = sample::random_rewrite(&mut rng, &m, arity, 1 + i % 2, 2);
        ensure(normalize_last(&m, arity, &moved) == normalize_last(&m, arity, &acted), || format!("rewrite {i}"))?;
    }
    let spec = load("coboundary.spec");
    let alg = &spec.algebras[0].algebra;
    for i in 0..50 {
        let t = sample::random_sparse_tensor(&mut rng, alg.module(), 2, 2, 4);
        let gamma = d0(alg, &t, 2).unwrap();
        ensure(is_cocycle1(alg, &gamma).unwrap().passed(), || format!("d1 d0 nonzero on sample {i}"))?;
    }
    Ok("hopf axioms at bound 4, fourier round trip, 100 rewrites, 50 d1 d0 values".into())
}

/// Parses `text` in `module` and renders it back.
fn fixpoint(module: &FreeModule, text: &str) -> Result<(), String> {
    let lit = parse_literal(module, text, 1, 1).map_err(|e| format!("`{text}`: {e}"))?;
    let again = render(module, &lit);
    ensure(again == text, || format!("`{text}` renders as `{again}`"))
}

fn section<'a>(spec: &'a SpecFile, name: &str) -> &'a AlgebraSection {
    spec.algebras.iter().find(|s| s.name == name).unwrap()
}

/// Right-hand sides of `product`, `delta` and `r` lines, with their section.
fn spec_literals(text: &str) -> Vec<(String, String)> {
    let mut current = String::new();
    let mut out = Vec::new();
    for line in text.lines() {
        let words: Vec<&str> = line.split_whitespace().collect();
        match words.first() {
            Some(&"algebra") => current = words[1].to_string(),
            Some(&("product" | "delta" | "r")) => {
                let (_, rhs) = line.split_once(" = ").unwrap();
                out.push((current.clone(), rhs.to_string()));
            }
            _ => {}
        }
    }
    out
}

fn criterion_10() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let coboundary = spec_path("coboundary.spec");
    let spec = load("coboundary.spec");
    let m = section(&spec, "A").module();
    let mut count = 0;

    let mut printed = Vec::new();
    for cmd in ["deltar", "aybe", "cybe"] {
        printed.push(run(&[cmd, &coboundary]).1);
    }
    for element in ["(e2, e1) - (e1, e2)", "e2", "(e1, e1, e2)"] {
        printed.push(run(&["d0", &coboundary, "--element", element]).1);
    }
    for out in &printed {
        for line in out.lines().filter(|l| !l.starts_with('#') && l.contains(" = ")) {
            fixpoint(m, line.split_once(" = ").unwrap().1)?;
            count += 1;
        }
    }

    let variant = twisted_square_variant(&dir);
    let vm = load("twisted-square.spec").algebras[0].module().clone();
    let mutated = dir.path().join("mutated.spec");
    std::fs::write(&mutated, read("coboundary.spec").replace("@H e2\n", "@H e1\n")).unwrap();
    for (file, module) in [(variant.as_str(), &vm), (mutated.to_str().unwrap(), m)] {
        let (_, json) = run(&["check", file, "--json"]);
        let value: serde_json::Value = serde_json::from_str(&json).map_err(|e| e.to_string())?;
        for check in value["checks"].as_array().unwrap() {
            if let Some(defect) = check["defect"].as_str().filter(|_| check["verdict"] != "skip") {
                if check["name"].as_str().is_some_and(|n| n.starts_with("hopf")) {
                    continue;
                }
                fixpoint(module, defect)?;
                count += 1;
            }
        }
    }

    let dual = dir.path().join("dual.spec");
    let cur = dir.path().join("cur.spec");
    let (code, _) = run(&["dual", &coboundary, "-o", dual.to_str().unwrap()]);
    ensure(code == 0, || format!("dual exit {code}"))?;
    let (code, _) = run(&["cur", &spec_path("twisted-square-at-k.spec"), "--target-hopf", "polynomial 2", "-o", cur.to_str().unwrap()]);
    ensure(code == 0, || format!("cur exit {code}"))?;
    for path in [&dual, &cur] {
        let text = std::fs::read_to_string(path).unwrap();
        let emitted = parse_spec(&text).map_err(|e| e.to_string())?;
        for (name, rhs) in spec_literals(&text) {
            fixpoint(section(&emitted, &name).module(), &rhs)?;
            count += 1;
        }
    }

    let bad = dir.path().join("bad.spec");
    std::fs::write(&bad, "hopf polynomial 1\nalgebra A generators e1\nproduct e1 e1 = [d1 # 1 e1\n").unwrap();
    let codes = [
        (run(&["check", &coboundary]).0, 0),
        (run(&["check", &variant, "--suite", "compat"]).0, 1),
        (run(&["check", bad.to_str().unwrap()]).0, 2),
        (run(&["check", &coboundary, "--suite", "nope"]).0, 2),
        (run(&["check", "/nonexistent.spec"]).0, 2),
    ];
    for (got, want) in codes {
        ensure(got == want, || format!("exit {got}, expected {want}"))?;
    }
    for name in BUNDLED {
        let (code, out) = run(&["check", &spec_path(name), "--suite", "all"]);
        ensure(code == 0, || format!("{name}: exit {code}\n{out}"))?;
    }
    Ok(format!("{count} literals are render fixpoints, exit codes 0/1/2, bundled files pass"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("coboundary comultiplication", criterion_1),
        ("Yang-Baxter equations and Lie table", criterion_2),
        ("twisted square bialgebra", criterion_3),
        ("coassociativity criterion", criterion_4),
        ("cocycle residual", criterion_5),
        ("balanceator vanishes", criterion_6),
        ("Lie pseudobialgebra", criterion_7),
        ("dual coalgebra", criterion_8),
        ("kernel properties", criterion_9),
        ("command-line contract", criterion_10),
    ];
    let mut unexpected = Vec::new();
    for (i, (title, check)) in criteria.iter().enumerate() {
        let n = i + 1;
        let outcome = check();
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!("criterion {n}: {tag} {title}: {detail}");
        let known = KNOWN_FAILURES.contains(&n);
        if outcome.is_ok() == known {
            unexpected.push(n);
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: all results as expected (known failures: {KNOWN_FAILURES:?})");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected results for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
