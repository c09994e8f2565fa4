//! Named check suites over the sections of a spec file.

use pseudalg::bialgebra::CoalgebraMap;
use pseudalg::check::CheckReport;
use pseudalg::cohomology::is_cocycle1;
use pseudalg::hopf::check_hopf_axioms;
use pseudalg::lie::{check_balanceator_symmetric, check_coboundary_lie, check_lie_coalgebra, check_lie_cocycle, check_thm56, delta_lie};
use pseudalg::module::TensorElement;
use pseudalg::ybe::{aybe, coassoc_equiv_check, cybe, delta_r, thm61_suite};
use pseudalg::{Error, Result};

use crate::report::{CheckEntry, Report, Verdict};
use crate::specfile::{AlgebraSection, SpecFile};

pub const SUITES: &[&str] = &[
    "hopf", "assoc", "commut", "coassoc", "cocommut", "compat", "lie", "balanceator", "thm56", "deltar", "aybe",
    "thm44", "cybe", "thm61", "cocycle", "all",
];

/// Members of `all`. Commutativity and cocommutativity are properties, not
/// axioms, so they only run when asked for.
const ALL: &[&str] = &[
    "hopf", "assoc", "coassoc", "compat", "cocycle", "lie", "balanceator", "thm56", "deltar", "aybe", "thm44", "cybe",
    "thm61",
];

pub const DEFAULT_DEGREE_BOUND: u32 = 4;

/// Samples for the H-coefficient guard in `assoc`.
const ASSOC_SAMPLES: usize = 10;
const ASSOC_SAMPLE_DEGREE: u32 = 2;

struct Ctx<'a> {
    section: &'a AlgebraSection,
    prefix: String,
    /// Missing data is an error when the suite was named directly.
    strict: bool,
    out: Vec<CheckEntry>,
}

impl Ctx<'_> {
    fn push(&mut self, check: &CheckReport) {
        self.out.push(CheckEntry::from_check(&self.prefix, check, self.section.module()));
    }

    fn missing(&mut self, what: &str, check: &str) -> Result<()> {
        if self.strict {
            return Err(Error::Missing(format!("algebra {} has no {what}", self.section.name)));
        }
        self.out.push(CheckEntry::skipped(format!("{}{check}", self.prefix), format!("no {what}")));
        Ok(())
    }

    fn delta(&mut self, check: &str) -> Result<Option<CoalgebraMap>> {
        let delta = self.section.comultiplication();
        if delta.is_none() {
            self.missing("comultiplication", check)?;
        }
        Ok(delta)
    }

    fn r(&mut self, check: &str) -> Result<Option<TensorElement>> {
        let r = self.section.r.clone();
        if r.is_none() {
            self.missing("r", check)?;
        }
        Ok(r)
    }
}

fn run_member(ctx: &mut Ctx, suite: &str) -> Result<()> {
    let s = ctx.section;
    let alg = &s.algebra;
    match suite {
        "assoc" => {
            ctx.push(&alg.check_associativity());
            ctx.push(&alg.check_structure_associativity());
            ctx.push(&alg.check_associativity_sampled(0, ASSOC_SAMPLES, ASSOC_SAMPLE_DEGREE));
        }
        "commut" => ctx.push(&alg.check_commutativity()),
        "coassoc" => {
            if let Some(d) = ctx.delta("coassociativity")? {
                ctx.push(&d.check_coassoc());
            }
        }
        "cocommut" => {
            if let Some(d) = ctx.delta("cocommutativity")? {
                ctx.push(&d.check_cocommutativity());
            }
        }
        "compat" => {
            if ctx.delta("compatibility")?.is_some() {
                ctx.push(&s.bialgebra().expect("comultiplication exists").check_compat());
            }
        }
        "cocycle" => {
            if let Some(d) = ctx.delta("1-cocycle")? {
                ctx.push(&is_cocycle1(alg, &d)?);
            }
        }
        "lie" => {
            let bracket = alg.lie_ify();
            ctx.push(&bracket.check_skew());
            ctx.push(&bracket.check_jacobi());
            // the cobracket parts need a comultiplication but the bracket parts do not
            match s.comultiplication() {
                Some(d) => {
                    let cobracket = delta_lie(&d);
                    for report in check_lie_coalgebra(&cobracket) {
                        ctx.push(&report);
                    }
                    ctx.push(&check_lie_cocycle(&bracket, &cobracket));
                    if let Some(r) = &s.r {
                        ctx.push(&check_coboundary_lie(&bracket, &cobracket, r));
                    }
                }
                None => {
                    let name = format!("{}Lie coalgebra", ctx.prefix);
                    ctx.out.push(CheckEntry::skipped(name, "no comultiplication"));
                }
            }
        }
        "balanceator" => {
            if ctx.delta("balanceator symmetry")?.is_some() {
                ctx.push(&check_balanceator_symmetric(&s.bialgebra().expect("comultiplication exists")));
            }
        }
        "thm56" => {
            if ctx.delta("cocycle residual identity")?.is_some() {
                ctx.push(&check_thm56(&s.bialgebra().expect("comultiplication exists")));
            }
        }
        "deltar" => {
            if let Some(r) = ctx.r("coboundary")? {
                let dr = delta_r(alg, &r);
                let mut report = is_cocycle1(alg, &dr)?;
                report.name = "coboundary is a 1-cocycle".into();
                ctx.push(&report);
                if let Some(d) = &s.delta {
                    let m = s.module();
                    let mut same = CheckReport::new("delta equals the coboundary");
                    for g in m.gens() {
                        same.push_tensor(vec![m.label(g).to_string()], d.value(g) - dr.value(g));
                    }
                    ctx.push(&same);
                }
            }
        }
        "aybe" => {
            if let Some(r) = ctx.r("pseudo-AYBE")? {
                let mut report = CheckReport::new("pseudo-AYBE");
                report.push_tensor(vec!["r".into()], aybe(alg, &r));
                ctx.push(&report);
            }
        }
        "cybe" => {
            if let Some(r) = ctx.r("pseudo-CYBE")? {
                let mut report = CheckReport::new("pseudo-CYBE");
                report.push_tensor(vec!["r".into()], cybe(&alg.lie_ify(), &r));
                ctx.push(&report);
            }
        }
        "thm44" => {
            if let Some(r) = ctx.r("coassociativity criterion")? {
                let eq = coassoc_equiv_check(alg, &r);
                let yes = |ok: bool| if ok { "yes" } else { "no" };
                let note = format!(
                    "coboundary coassociative: {}, bullet condition holds: {}",
                    yes(eq.coassociative.passed()),
                    yes(eq.condition.passed())
                );
                let mut entry = CheckEntry::from_check(&ctx.prefix, &CheckReport::new("coassociativity criterion"), s.module());
                if !eq.agree() {
                    let witness = if eq.coassociative.passed() { &eq.condition } else { &eq.coassociative };
                    entry = CheckEntry { name: entry.name, ..CheckEntry::from_check("", witness, s.module()) };
                }
                ctx.out.push(entry.with_note(note));
            }
        }
        "thm61" => {
            if let Some(r) = ctx.r("pseudo-CYBE transfer")? {
                let outcome = thm61_suite(alg, &r);
                let mut entry = CheckEntry::from_check(&ctx.prefix, &outcome.to_report(), s.module());
                let mut note = format!("r is {}", outcome.symmetry.as_str());
                if !outcome.hypotheses_hold() {
                    note.push_str(", hypotheses not met");
                    entry.verdict = Verdict::Skip;
                }
                ctx.out.push(entry.with_note(note));
            }
        }
        other => return Err(Error::UnknownSuite(other.to_string())),
    }
    Ok(())
}

fn hopf_entry(spec: &SpecFile, degree_bound: u32) -> CheckEntry {
    let report = check_hopf_axioms(&spec.hopf, degree_bound);
    let first = report.failures.first();
    CheckEntry {
        name: "hopf axioms".into(),
        inputs: first.map(|f| vec![f.axiom.clone()]).unwrap_or_default(),
        verdict: if first.is_some() { Verdict::Fail } else { Verdict::Pass },
        defect: first.map(|f| f.detail.clone()),
        note: Some(format!("{} at degree bound {degree_bound}, {} checks", spec.hopf.describe(), report.checked)),
    }
}

/// Runs `suite` on every algebra section of `spec`.
pub fn run_suite(spec: &SpecFile, suite: &str, degree_bound: u32) -> Result<Report> {
    if !SUITES.contains(&suite) {
        return Err(Error::UnknownSuite(suite.to_string()));
    }
    let members: Vec<&str> = if suite == "all" { ALL.to_vec() } else { vec![suite] };
    let mut checks = Vec::new();
    for member in members {
        if member == "hopf" {
            checks.push(hopf_entry(spec, degree_bound));
            continue;
        }
        for section in &spec.algebras {
            let mut ctx =
                Ctx { section, prefix: format!("{}/", section.name), strict: suite != "all", out: Vec::new() };
            run_member(&mut ctx, member)?;
            checks.extend(ctx.out);
        }
    }
    Ok(Report::new(suite, checks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfile::parse_spec;

    const COBOUNDARY: &str = "\
hopf polynomial 1
algebra A generators e1 e2
product e2 e1 = [1 # 1] @H e1
product e2 e2 = [1 # 1] @H e2
r = (e2, e1) - (e1, e2)
";

    #[test]
    fn unknown_suite() {
        let spec = parse_spec(COBOUNDARY).unwrap();
        assert_eq!(run_suite(&spec, "bogus", 4), Err(Error::UnknownSuite("bogus".into())));
    }

    #[test]
    fn every_suite_runs_on_the_coboundary_file() {
        let spec = parse_spec(COBOUNDARY).unwrap();
        for suite in SUITES {
            let report = run_suite(&spec, suite, 2).unwrap();
            assert!(!report.checks.is_empty(), "{suite}");
            assert_eq!(report.suite, *suite);
        }
    }

    #[test]
    fn missing_r_is_an_error_only_when_asked_for() {
        let spec = parse_spec("hopf polynomial 1\nalgebra A generators e1\n").unwrap();
        assert!(matches!(run_suite(&spec, "aybe", 2), Err(Error::Missing(_))));
        let all = run_suite(&spec, "all", 2).unwrap();
        assert!(all.passed());
        assert!(all.checks.iter().any(|c| c.verdict == Verdict::Skip));
    }

    #[test]
    fn mutated_associativity_fails_with_a_witness_triple() {
        let text = COBOUNDARY.replace("product e2 e2 = [1 # 1] @H e2", "product e2 e2 = [1 # 1] @H e1");
        let spec = parse_spec(&text).unwrap();
        let report = run_suite(&spec, "assoc", 2).unwrap();
        assert!(!report.passed());
        let first = report.checks.iter().find(|c| c.verdict == Verdict::Fail).unwrap();
        assert_eq!(first.inputs.len(), 3);
        assert!(first.defect.is_some());
    }
}
