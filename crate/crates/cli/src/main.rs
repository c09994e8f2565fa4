use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use pseudalg::bialgebra::{cur_from_infbialgebra, dual_coalgebra, InfBialgebra};
use pseudalg::cohomology::d0;
use pseudalg::hopf::HopfSpec;
use pseudalg::literal::{self, parse_literal, Literal};
use pseudalg::module::FreeModule;
use pseudalg::ybe::{aybe, cybe, delta_r};
use pseudalg::{Error, Result};
use pseudalg_cli::report::Report;
use pseudalg_cli::specfile::{emit_spec, parse_spec, AlgebraSection, SpecFile};
use pseudalg_cli::suite::{run_suite, DEFAULT_DEGREE_BOUND};

#[derive(Parser)]
#[command(name = "pseudalg", version, about = "Check identities of H-pseudoalgebras and pseudobialgebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Common {
    /// Spec file to read.
    file: PathBuf,
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
    /// H-degree bound for Hopf axiom checks (default 4).
    #[arg(long)]
    degree_bound: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named check suite.
    Check {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Print the coboundary comultiplication Δ_r.
    Deltar {
        #[command(flatten)]
        common: Common,
    },
    /// Print A(r), the associative pseudo Yang-Baxter expression.
    Aybe {
        #[command(flatten)]
        common: Common,
    },
    /// Print [[r, r]] on the Lie-ification.
    Cybe {
        #[command(flatten)]
        common: Common,
    },
    /// Compare coassociativity of Δ_r with the bullet condition on A(r).
    Thm44 {
        #[command(flatten)]
        common: Common,
    },
    /// Check that a (skew-)symmetric solution of the AYBE solves the CYBE.
    Thm61 {
        #[command(flatten)]
        common: Common,
    },
    /// Check that the comultiplication is a 1-cocycle.
    Cocycle1 {
        #[command(flatten)]
        common: Common,
    },
    /// Write the dual coalgebra of each algebra to a new spec file.
    Dual {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Write the current bialgebra over another Hopf algebra.
    Cur {
        file: PathBuf,
        /// `trivial`, `polynomial <m>` or `cyclic <n>`.
        #[arg(long)]
        target_hopf: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Print the differential of the 0-cochain 1 ⊗_H m.
    D0 {
        file: PathBuf,
        /// Tensor literal, e.g. `(e2, e1) - (e1, e2)`.
        #[arg(long)]
        element: String,
    },
}

fn read_spec(path: &Path) -> std::result::Result<SpecFile, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_spec(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn degree_bound(common: &Common, spec: &SpecFile) -> u32 {
    common.degree_bound.or(spec.degree_bound).unwrap_or(DEFAULT_DEGREE_BOUND)
}

fn print_report(report: &Report, json: bool) {
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_human());
    }
}

fn verdict(report: &Report) -> ExitCode {
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn suite_command(common: &Common, suite: &str) -> std::result::Result<ExitCode, String> {
    let spec = read_spec(&common.file)?;
    let report = run_suite(&spec, suite, degree_bound(common, &spec)).map_err(|e| e.to_string())?;
    print_report(&report, common.json);
    Ok(verdict(&report))
}

fn sections_with_r(spec: &SpecFile) -> Result<Vec<&AlgebraSection>> {
    let found: Vec<_> = spec.algebras.iter().filter(|s| s.r.is_some()).collect();
    if found.is_empty() {
        return Err(Error::Missing("no algebra section has an `r` line".into()));
    }
    Ok(found)
}

fn parse_target_hopf(text: &str) -> std::result::Result<HopfSpec, String> {
    let words: Vec<&str> = text.split_whitespace().collect();
    let count = |w: &str| w.parse::<usize>().map_err(|_| format!("`{w}` is not a number"));
    match words.as_slice() {
        ["trivial"] => Ok(HopfSpec::Trivial),
        ["polynomial", m] => HopfSpec::polynomial(count(m)?).map_err(|e| e.to_string()),
        ["cyclic", n] if count(n)? > 0 => Ok(HopfSpec::cyclic(count(n)?)),
        _ => Err(format!("unknown Hopf algebra `{text}`; use `trivial`, `polynomial <m>` or `cyclic <n>`")),
    }
}

/// Prints each value as `<head> <label> = <literal>`, then runs `suite`.
fn value_command(common: &Common, suite: &str, head: &str, values: impl Fn(&AlgebraSection) -> Vec<(String, Literal)>) -> std::result::Result<ExitCode, String> {
    let spec = read_spec(&common.file)?;
    let sections = sections_with_r(&spec).map_err(|e| e.to_string())?;
    let report = run_suite(&spec, suite, degree_bound(common, &spec)).map_err(|e| e.to_string())?;
    if common.json {
        println!("{}", report.to_json());
    } else {
        for s in sections {
            println!("# algebra {}", s.name);
            for (label, value) in values(s) {
                println!("{head}{label} = {}", literal::render(s.module(), &value));
            }
        }
        print!("{}", report.to_human());
    }
    Ok(verdict(&report))
}

fn tensor_literal(t: pseudalg::module::TensorElement) -> Literal {
    if t.is_zero() {
        Literal::Zero
    } else {
        Literal::Tensor(t)
    }
}

fn run(cli: Cli) -> std::result::Result<ExitCode, String> {
    match cli.command {
        Command::Check { common, suite } => suite_command(&common, &suite),
        Command::Cocycle1 { common } => suite_command(&common, "cocycle"),
        Command::Thm44 { common } => suite_command(&common, "thm44"),
        Command::Thm61 { common } => suite_command(&common, "thm61"),
        Command::Deltar { common } => value_command(&common, "deltar", "delta ", |s| {
            let dr = delta_r(&s.algebra, s.r.as_ref().expect("filtered"));
            s.module().gens().map(|g| (s.module().label(g).to_string(), tensor_literal(dr.value(g)))).collect()
        }),
        Command::Aybe { common } => value_command(&common, "aybe", "A(r)", |s| {
            vec![(String::new(), tensor_literal(aybe(&s.algebra, s.r.as_ref().expect("filtered"))))]
        }),
        Command::Cybe { common } => value_command(&common, "cybe", "[[r, r]]", |s| {
            vec![(String::new(), tensor_literal(cybe(&s.algebra.lie_ify(), s.r.as_ref().expect("filtered"))))]
        }),
        Command::Dual { file, output } => {
            let spec = read_spec(&file)?;
            let mut out = SpecFile { hopf: spec.hopf.clone(), algebras: Vec::new(), degree_bound: spec.degree_bound };
            for s in &spec.algebras {
                let delta = dual_coalgebra(&s.algebra);
                let algebra = pseudalg::algebra::PseudoAlgebra::new(delta.module().clone());
                out.algebras.push(AlgebraSection { name: format!("{}_dual", s.name), algebra, delta: Some(delta), r: None });
            }
            write_spec(&output, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Cur { file, target_hopf, output } => {
            let spec = read_spec(&file)?;
            let target = parse_target_hopf(&target_hopf)?;
            let mut out = SpecFile { hopf: target.clone(), algebras: Vec::new(), degree_bound: spec.degree_bound };
            for s in &spec.algebras {
                let delta = s.comultiplication().ok_or_else(|| format!("algebra {} has no comultiplication", s.name))?;
                let b = InfBialgebra::new(s.algebra.clone(), delta).map_err(|e| e.to_string())?;
                let cur = cur_from_infbialgebra(&b, &target).map_err(|e| format!("algebra {}: {e}", s.name))?;
                out.algebras.push(AlgebraSection {
                    name: format!("Cur_{}", s.name),
                    algebra: cur.algebra,
                    delta: Some(cur.delta),
                    r: None,
                });
            }
            write_spec(&output, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::D0 { file, element } => {
            let spec = read_spec(&file)?;
            for s in &spec.algebras {
                let m: &FreeModule = s.module();
                let value = parse_literal(m, &element, 1, 1).map_err(|e| format!("--element: {e}"))?;
                let rank = match &value {
                    Literal::Tensor(t) => t.keys().next().map_or(2, Vec::len),
                    _ => 2,
                };
                let t = value.into_tensor(rank, 1).map_err(|e| format!("--element: {e}"))?;
                let d = d0(&s.algebra, &t, rank).map_err(|e| e.to_string())?;
                println!("# algebra {}", s.name);
                for g in m.gens() {
                    println!("d0 {} = {}", m.label(g), literal::render_tensor(m, &d.value(g)));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn write_spec(path: &Path, spec: &SpecFile) -> std::result::Result<(), String> {
    std::fs::write(path, emit_spec(spec)).map_err(|e| format!("{}: {e}", path.display()))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
