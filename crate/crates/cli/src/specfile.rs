//! Line-oriented spec files.
//!
//! ```text
//! hopf polynomial 1
//! algebra A generators e1 e2
//! product e2 e1 = [1 # 1] @H e1     # absent pairs are zero
//! product e2 e2 = [1 # 1] @H e2
//! r = (e2, e1) - (e1, e2)
//! ```
//!
//! A group Hopf algebra is followed by its multiplication table (1-based
//! indices, one row per line) and an `identity <k>` line.

use std::collections::BTreeMap;

use pseudalg::algebra::PseudoAlgebra;
use pseudalg::bialgebra::{CoalgebraMap, HLinearMap, InfBialgebra};
use pseudalg::hopf::{GroupTable, HopfSpec};
use pseudalg::literal::{self, parse_literal};
use pseudalg::module::{FreeModule, Gen, TensorElement};
use pseudalg::ybe::delta_r;
use pseudalg::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSection {
    pub name: String,
    pub algebra: PseudoAlgebra,
    /// Comultiplication given by `delta` lines.
    pub delta: Option<CoalgebraMap>,
    pub r: Option<TensorElement>,
}

impl AlgebraSection {
    pub fn module(&self) -> &FreeModule {
        self.algebra.module()
    }

    /// The explicit comultiplication, else `Δ_r` when `r` is given.
    pub fn comultiplication(&self) -> Option<CoalgebraMap> {
        self.delta.clone().or_else(|| self.r.as_ref().map(|r| delta_r(&self.algebra, r)))
    }

    pub fn bialgebra(&self) -> Option<InfBialgebra> {
        let delta = self.comultiplication()?;
        Some(InfBialgebra::new(self.algebra.clone(), delta).expect("delta is built on the algebra's module"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecFile {
    pub hopf: HopfSpec,
    pub algebras: Vec<AlgebraSection>,
    pub degree_bound: Option<u32>,
}

impl SpecFile {
    pub fn single(section: AlgebraSection) -> Self {
        Self { hopf: section.module().hopf().clone(), algebras: vec![section], degree_bound: None }
    }
}

/// Drops a trailing `#` comment; `#` inside square brackets separates slots.
fn strip_comment(line: &str) -> &str {
    let mut depth = 0i32;
    for (i, c) in line.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            '#' if depth <= 0 => return &line[..i],
            _ => {}
        }
    }
    line
}

/// Whitespace-separated words of `text` with 1-based columns.
fn words(text: &str, column: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (n, (i, c)) in text.char_indices().enumerate() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some((n, i)),
            (true, Some((sn, si))) => {
                out.push((column + sn, &text[si..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((sn, si)) = start {
        out.push((column + sn, &text[si..]));
    }
    out
}

fn syntax(line: usize, column: usize, expected: &str, found: Option<&str>) -> Error {
    Error::Syntax {
        line,
        column,
        expected: expected.into(),
        found: found.map_or_else(|| "end of line".into(), |w| format!("`{w}`")),
    }
}

fn number(line: usize, word: Option<&(usize, &str)>, end: usize, what: &str) -> Result<usize> {
    match word {
        Some((col, w)) => w.parse().map_err(|_| syntax(line, *col, what, Some(w))),
        None => Err(syntax(line, end, what, None)),
    }
}

struct Pending {
    name: String,
    algebra: PseudoAlgebra,
    products: BTreeMap<(Gen, Gen), usize>,
    delta: Option<HLinearMap>,
    delta_lines: BTreeMap<Gen, usize>,
    r: Option<(TensorElement, usize)>,
}

impl Pending {
    fn finish(self) -> AlgebraSection {
        AlgebraSection { name: self.name, algebra: self.algebra, delta: self.delta, r: self.r.map(|(r, _)| r) }
    }
}

enum HopfState {
    Missing,
    Table { n: usize, rows: Vec<Vec<usize>>, line: usize },
    Done(HopfSpec),
}

pub fn parse_spec(text: &str) -> Result<SpecFile> {
    let mut hopf = HopfState::Missing;
    let mut sections: Vec<AlgebraSection> = Vec::new();
    let mut current: Option<Pending> = None;
    let mut degree_bound = None;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let body = strip_comment(raw);
        let ws = words(body, 1);
        let end = body.chars().count() + 1;
        let Some(&(col0, keyword)) = ws.first() else { continue };

        if let HopfState::Table { n, rows, line: hline } = &mut hopf {
            if rows.len() < *n {
                if ws.len() != *n {
                    let col = ws.get(*n).map_or(end, |w| w.0);
                    return Err(syntax(line, col, &format!("a table row of {n} element indices"), ws.get(*n).map(|w| w.1)));
                }
                let mut row = Vec::with_capacity(*n);
                for w in &ws {
                    let k = number(line, Some(w), end, "an element index")?;
                    if k == 0 || k > *n {
                        return Err(Error::Semantic { line, message: format!("element index {k} is outside 1..={n}") });
                    }
                    row.push(k - 1);
                }
                rows.push(row);
                continue;
            }
            if keyword != "identity" {
                return Err(syntax(line, col0, "`identity`", Some(keyword)));
            }
            let k = number(line, ws.get(1), end, "an element index")?;
            if ws.len() > 2 {
                return Err(syntax(line, ws[2].0, "end of line", Some(ws[2].1)));
            }
            if k == 0 || k > *n {
                return Err(Error::Semantic { line, message: format!("identity index {k} is outside 1..={n}") });
            }
            let table = GroupTable::new(std::mem::take(rows), k - 1)
                .map_err(|e| Error::Semantic { line: *hline, message: e.to_string() })?;
            hopf = HopfState::Done(HopfSpec::group(table));
            continue;
        }

        match keyword {
            "hopf" => {
                if !matches!(hopf, HopfState::Missing) {
                    return Err(Error::Semantic { line, message: "the Hopf algebra is declared twice".into() });
                }
                let kind = ws.get(1);
                let extra = match kind.map(|w| w.1) {
                    Some("trivial") => {
                        hopf = HopfState::Done(HopfSpec::Trivial);
                        2
                    }
                    Some("polynomial") => {
                        let m = number(line, ws.get(2), end, "a number of generators")?;
                        let spec = HopfSpec::polynomial(m).map_err(|e| Error::Semantic { line, message: e.to_string() })?;
                        hopf = HopfState::Done(spec);
                        3
                    }
                    Some("group") => {
                        let n = number(line, ws.get(2), end, "a group order")?;
                        if n == 0 {
                            return Err(Error::Semantic { line, message: "a group has at least one element".into() });
                        }
                        hopf = HopfState::Table { n, rows: Vec::new(), line };
                        3
                    }
                    other => return Err(syntax(line, kind.map_or(end, |w| w.0), "`trivial`, `polynomial` or `group`", other)),
                };
                if let Some(w) = ws.get(extra) {
                    return Err(syntax(line, w.0, "end of line", Some(w.1)));
                }
            }
            "algebra" => {
                let HopfState::Done(h) = &hopf else {
                    return Err(Error::Semantic { line, message: "`algebra` before the Hopf algebra is declared".into() });
                };
                let name = ws.get(1).ok_or_else(|| syntax(line, end, "an algebra name", None))?;
                match ws.get(2) {
                    Some((_, "generators")) => {}
                    other => return Err(syntax(line, other.map_or(end, |w| w.0), "`generators`", other.map(|w| w.1))),
                }
                if ws.len() < 4 {
                    return Err(syntax(line, end, "a generator label", None));
                }
                let mut labels = Vec::new();
                for &(col, label) in &ws[3..] {
                    if !literal::is_identifier(label) {
                        return Err(syntax(line, col, "a generator label", Some(label)));
                    }
                    if literal::clashes_with_h(h, label) {
                        return Err(Error::Semantic { line, message: format!("generator {label} clashes with an element of H") });
                    }
                    labels.push(label.to_string());
                }
                let module = FreeModule::new(h.clone(), labels).map_err(|e| Error::Semantic { line, message: e.to_string() })?;
                if let Some(p) = current.take() {
                    sections.push(p.finish());
                }
                current = Some(Pending {
                    name: name.1.to_string(),
                    algebra: PseudoAlgebra::new(module),
                    products: BTreeMap::new(),
                    delta: None,
                    delta_lines: BTreeMap::new(),
                    r: None,
                });
            }
            "product" | "delta" | "r" => {
                let Some(p) = current.as_mut() else {
                    return Err(Error::Semantic { line, message: format!("`{keyword}` outside an algebra section") });
                };
                let eq = body.find('=').ok_or_else(|| syntax(line, end, "`=`", None))?;
                let head = words(&body[..eq], 1);
                let lit_col = body[..=eq].chars().count() + 1;
                let eq_col = lit_col - 1;
                let module = p.algebra.module().clone();
                let gen_at = |k: usize, what: &str| -> Result<Gen> {
                    match head.get(k) {
                        Some(&(col, label)) => module.gen_index(label).ok_or_else(|| Error::Semantic {
                            line,
                            message: format!("column {col}: unknown generator {label}"),
                        }),
                        None => Err(syntax(line, eq_col, what, Some("="))),
                    }
                };
                let arity = match keyword {
                    "product" => 3,
                    "delta" => 2,
                    _ => 1,
                };
                if let Some(w) = head.get(arity) {
                    return Err(syntax(line, w.0, "`=`", Some(w.1)));
                }
                let value = parse_literal(&module, &body[eq + 1..], line, lit_col)?;
                match keyword {
                    "product" => {
                        let (i, j) = (gen_at(1, "a generator")?, gen_at(2, "a generator")?);
                        if let Some(first) = p.products.insert((i, j), line) {
                            return Err(Error::Semantic {
                                line,
                                message: format!("product {} {} already given on line {first}", module.label(i), module.label(j)),
                            });
                        }
                        let x = value.into_pseudo(2, 1, line)?;
                        p.algebra.set_product(i, j, x).map_err(|e| Error::Semantic { line, message: e.to_string() })?;
                    }
                    "delta" => {
                        let g = gen_at(1, "a generator")?;
                        if let Some(first) = p.delta_lines.insert(g, line) {
                            return Err(Error::Semantic {
                                line,
                                message: format!("delta {} already given on line {first}", module.label(g)),
                            });
                        }
                        let t = value.into_tensor(2, line)?;
                        let d = p.delta.get_or_insert_with(|| HLinearMap::zero(module.clone(), 2));
                        d.set(g, t).map_err(|e| Error::Semantic { line, message: e.to_string() })?;
                    }
                    _ => {
                        if let Some((_, first)) = &p.r {
                            return Err(Error::Semantic { line, message: format!("r already given on line {first}") });
                        }
                        p.r = Some((value.into_tensor(2, line)?, line));
                    }
                }
            }
            "option" => {
                match ws.get(1) {
                    Some((_, "degree-bound")) => {}
                    other => return Err(syntax(line, other.map_or(end, |w| w.0), "`degree-bound`", other.map(|w| w.1))),
                }
                degree_bound = Some(number(line, ws.get(2), end, "a degree bound")? as u32);
                if let Some(w) = ws.get(3) {
                    return Err(syntax(line, w.0, "end of line", Some(w.1)));
                }
            }
            other => {
                return Err(syntax(line, col0, "`hopf`, `algebra`, `product`, `delta`, `r` or `option`", Some(other)));
            }
        }
    }
    let hopf = match hopf {
        HopfState::Done(h) => h,
        HopfState::Missing => return Err(Error::Semantic { line: last_line.max(1), message: "no `hopf` line".into() }),
        HopfState::Table { .. } => {
            return Err(syntax(last_line + 1, 1, "the rest of the group table and an `identity` line", None))
        }
    };
    if let Some(p) = current.take() {
        sections.push(p.finish());
    }
    if sections.is_empty() {
        return Err(Error::Semantic { line: last_line.max(1), message: "no `algebra` section".into() });
    }
    Ok(SpecFile { hopf, algebras: sections, degree_bound })
}

/// Writes `spec` back in the spec-file grammar.
pub fn emit_spec(spec: &SpecFile) -> String {
    let mut out = format!("hopf {}\n", spec.hopf.describe());
    if let HopfSpec::Group(t) = &spec.hopf {
        for row in t.rows() {
            let row: Vec<String> = row.iter().map(|k| (k + 1).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out.push_str(&format!("identity {}\n", t.identity() + 1));
    }
    if let Some(k) = spec.degree_bound {
        out.push_str(&format!("option degree-bound {k}\n"));
    }
    for s in &spec.algebras {
        let m = s.module();
        out.push_str(&format!("\nalgebra {} generators {}\n", s.name, m.labels().join(" ")));
        for ((i, j), x) in s.algebra.entries() {
            if !x.is_zero() {
                out.push_str(&format!("product {} {} = {}\n", m.label(*i), m.label(*j), literal::render_pseudo(m, x)));
            }
        }
        if let Some(d) = &s.delta {
            for g in m.gens() {
                out.push_str(&format!("delta {} = {}\n", m.label(g), literal::render_tensor(m, &d.value(g))));
            }
        }
        if let Some(r) = &s.r {
            out.push_str(&format!("r = {}\n", literal::render_tensor(m, r)));
        }
    }
    out
}
