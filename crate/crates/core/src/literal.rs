//! Text form of H-elements, tensors and pseudotensors.
//!
//! ```text
//! literal := '0' | ['+'|'-'] term (('+'|'-') term)*
//! term    := [scalar ['*']] body
//! body    := '[' hexpr ('#' hexpr)* ']' ('@H' | '@') target | target
//! target  := mono | '(' mono (',' mono)* ')'
//! mono    := [scalar ['*']] [factor+ '*'] gen
//! hexpr   := ['+'|'-'] hterm (('+'|'-') hterm)*
//! hterm   := scalar factor* | factor+
//! factor  := 'd'<i> ['^' <n>] | 'g'<k>
//! scalar  := <n> ['/' <n>]
//! ```
//!
//! `@H` is the tensor product over H (the value is normalized so the last
//! slot is 1), `@` the plain tensor product `H^{⊗n} ⊗ M^{⊗p}`.

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::hopf::{Basis, HElement, HopfSpec};
use crate::lincomb::{LinComb, Scalar};
use crate::module::{FreeModule, Mono, TensorElement};
use crate::pseudotensor::{normalize_last, PseudoTensor, RawTensor};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Literal {
    Zero,
    Tensor(TensorElement),
    Pseudo(PseudoTensor),
    /// Unreduced `H^{⊗n} ⊗ M^{⊗p}`, keyed like a [`RawTensor`].
    Plain(RawTensor),
}

impl Literal {
    /// The value as an element of `M^{⊗rank}`.
    pub fn into_tensor(self, rank: usize, line: usize) -> Result<TensorElement> {
        match self {
            Literal::Zero => Ok(TensorElement::zero()),
            Literal::Tensor(t) if t.keys().all(|k| k.len() == rank) => Ok(t),
            other => Err(Error::Semantic { line, message: format!("expected a tensor of rank {rank}, found {}", other.kind()) }),
        }
    }

    /// The value as a pseudotensor of the given arity over `M^{⊗rank}`.
    pub fn into_pseudo(self, arity: usize, rank: usize, line: usize) -> Result<PseudoTensor> {
        match self {
            Literal::Zero => Ok(PseudoTensor::zero(arity)),
            Literal::Pseudo(x) if x.arity() == arity && x.terms().keys().all(|(_, t)| t.len() == rank) => Ok(x),
            other => Err(Error::Semantic {
                line,
                message: format!("expected a pseudotensor of arity {arity} over rank {rank}, found {}", other.kind()),
            }),
        }
    }

    fn kind(&self) -> String {
        match self {
            Literal::Zero => "0".into(),
            Literal::Tensor(t) => format!("a tensor of rank {}", t.keys().next().map_or(0, Vec::len)),
            Literal::Pseudo(x) => format!(
                "a pseudotensor of arity {} over rank {}",
                x.arity(),
                x.terms().keys().next().map_or(0, |(_, t)| t.len())
            ),
            Literal::Plain(_) => "an unreduced tensor".into(),
        }
    }
}

// ---------------------------------------------------------------- lexing

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(String),
    Ident(String),
    Sym(char),
    AtH,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(n) => format!("`{n}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Sym(c) => format!("`{c}`"),
            Tok::AtH => "`@H`".into(),
            Tok::End => "end of line".into(),
        }
    }
}

/// Splits `text` into tokens with 1-based columns, starting at `column`.
fn lex(text: &str, line: usize, column: usize) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = column + i;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Num(chars[start..i].iter().collect()), col));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if c == '@' {
            if chars.get(i + 1) == Some(&'H') {
                out.push((Tok::AtH, col));
                i += 2;
            } else {
                out.push((Tok::Sym('@'), col));
                i += 1;
            }
        } else if "+-*/^[]#(),".contains(c) {
            out.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(Error::Syntax { line, column: col, expected: "a literal".into(), found: format!("`{c}`") });
        }
    }
    out.push((Tok::End, column + chars.len()));
    Ok(out)
}

// ---------------------------------------------------------------- parsing

enum Factor {
    Var(usize),
    Elem(usize),
}

enum Body {
    Tensor(Vec<Mono>),
    Bracket { slots: Vec<HElement>, reduced: bool, target: Vec<Mono> },
}

struct Parser<'a> {
    module: &'a FreeModule,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
}

impl<'a> Parser<'a> {
    fn at(&self) -> &(Tok, usize) {
        &self.toks[self.pos.min(self.toks.len() - 1)]
    }

    fn peek(&self) -> &Tok {
        &self.at().0
    }

    fn column(&self) -> usize {
        self.at().1
    }

    fn bump(&mut self) -> Tok {
        let t = self.peek().clone();
        self.pos += 1;
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, expected: &str) -> Error {
        Error::Syntax { line: self.line, column: self.column(), expected: expected.into(), found: self.peek().describe() }
    }

    fn semantic(&self, message: String) -> Error {
        Error::Semantic { line: self.line, message }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("`{c}`")))
        }
    }

    fn number(&mut self) -> Result<u64> {
        match self.bump() {
            Tok::Num(n) => n.parse().map_err(|_| self.semantic(format!("number {n} is too large"))),
            _ => {
                self.pos -= 1;
                Err(self.error("a number"))
            }
        }
    }

    fn scalar(&mut self) -> Result<Option<Scalar>> {
        let Tok::Num(num) = self.peek().clone() else { return Ok(None) };
        self.pos += 1;
        let mut text = num;
        if self.eat('/') {
            let column = self.column();
            match self.bump() {
                Tok::Num(den) if den.trim_start_matches('0').is_empty() => {
                    return Err(Error::Semantic { line: self.line, message: format!("zero denominator at column {column}") })
                }
                Tok::Num(den) => text = format!("{text}/{den}"),
                _ => {
                    self.pos -= 1;
                    return Err(self.error("a denominator"));
                }
            }
        }
        Ok(Some(text.parse().expect("digits form a rational")))
    }

    fn factor(&self, name: &str) -> Option<Factor> {
        if !clashes_with_h(self.module.hopf(), name) {
            return None;
        }
        let (head, digits) = name.split_at(1);
        let k: usize = digits.parse().ok()?;
        match (self.module.hopf(), head) {
            (HopfSpec::Polynomial { .. }, "d") => Some(Factor::Var(k)),
            (HopfSpec::Group(_), "g") => Some(Factor::Elem(k)),
            _ => None,
        }
    }

    /// Product of H-factors; `None` when the next token is not a factor.
    fn factors(&mut self) -> Result<Option<Basis>> {
        let hopf = self.module.hopf();
        let mut acc: Option<Basis> = None;
        while let Tok::Ident(name) = self.peek().clone() {
            let Some(f) = self.factor(&name) else { break };
            let column = self.column();
            self.pos += 1;
            let basis = match (hopf, f) {
                (HopfSpec::Polynomial { vars }, Factor::Var(i)) => {
                    if i == 0 || i > *vars {
                        return Err(self.semantic(format!("column {column}: d{i} is not a generator of {}", hopf.describe())));
                    }
                    let exp = if self.eat('^') { self.number()? as u32 } else { 1 };
                    let mut e = vec![0; *vars];
                    e[i - 1] = exp;
                    Basis::Mono(e)
                }
                (HopfSpec::Group(t), Factor::Elem(k)) => {
                    if k == 0 || k > t.order() {
                        return Err(self.semantic(format!("column {column}: g{k} is not an element of {}", hopf.describe())));
                    }
                    Basis::Elem(k - 1)
                }
                _ => unreachable!("factor() filters by Hopf family"),
            };
            acc = Some(match acc {
                Some(a) => hopf.basis_mul(&a, &basis),
                None => basis,
            });
        }
        Ok(acc)
    }

    fn hexpr(&mut self) -> Result<HElement> {
        let mut out = HElement::zero();
        let mut first = true;
        loop {
            let sign = if self.eat('+') {
                Scalar::one()
            } else if self.eat('-') {
                -Scalar::one()
            } else if first {
                Scalar::one()
            } else {
                return Ok(out);
            };
            first = false;
            let c = self.scalar()?;
            let b = self.factors()?;
            if c.is_none() && b.is_none() {
                return Err(self.error("an H-monomial"));
            }
            out.add_term(b.unwrap_or_else(|| self.module.hopf().one()), sign * c.unwrap_or_else(Scalar::one));
        }
    }

    fn mono(&mut self) -> Result<(Scalar, Mono)> {
        let c = self.scalar()?;
        let b = self.factors()?;
        if b.is_some() {
            self.expect('*')?;
        } else if c.is_some() {
            self.eat('*');
        }
        let column = self.column();
        match self.bump() {
            Tok::Ident(name) => {
                let gen = self
                    .module
                    .gen_index(&name)
                    .ok_or_else(|| self.semantic(format!("column {column}: unknown generator {name}")))?;
                Ok((c.unwrap_or_else(Scalar::one), Mono::new(gen, b.unwrap_or_else(|| self.module.hopf().one()))))
            }
            _ => {
                self.pos -= 1;
                Err(self.error("a generator"))
            }
        }
    }

    fn target(&mut self) -> Result<(Scalar, Vec<Mono>)> {
        let mut c = Scalar::one();
        let mut monos = Vec::new();
        if self.eat('(') {
            loop {
                let (k, m) = self.mono()?;
                c *= k;
                monos.push(m);
                if !self.eat(',') {
                    break;
                }
            }
            self.expect(')')?;
        } else {
            let (k, m) = self.mono()?;
            c *= k;
            monos.push(m);
        }
        Ok((c, monos))
    }

    fn term(&mut self) -> Result<(Scalar, Body)> {
        let mut c = self.scalar()?.unwrap_or_else(Scalar::one);
        self.eat('*');
        if self.eat('[') {
            let mut slots = vec![self.hexpr()?];
            while self.eat('#') {
                slots.push(self.hexpr()?);
            }
            self.expect(']')?;
            let reduced = match self.bump() {
                Tok::AtH => true,
                Tok::Sym('@') => false,
                _ => {
                    self.pos -= 1;
                    return Err(self.error("`@H` or `@`"));
                }
            };
            let (k, target) = self.target()?;
            c *= k;
            return Ok((c, Body::Bracket { slots, reduced, target }));
        }
        let (k, target) = self.target()?;
        c *= k;
        Ok((c, Body::Tensor(target)))
    }
}

/// Parses one literal occupying the whole of `text`; `column` is the column
/// of the first character of `text` on `line` for error reporting.
pub fn parse_literal(module: &FreeModule, text: &str, line: usize, column: usize) -> Result<Literal> {
    let toks = lex(text, line, column)?;
    let mut p = Parser { module, toks, pos: 0, line };
    if matches!(p.toks.as_slice(), [(Tok::Num(n), _), (Tok::End, _)] if n.bytes().all(|b| b == b'0')) {
        return Ok(Literal::Zero);
    }
    let mut tensors = TensorElement::zero();
    let mut raw = RawTensor::zero();
    // (is bracket, reduced, arity, rank) of the first term
    let mut shape: Option<(bool, bool, usize, usize)> = None;
    let mut first = true;
    loop {
        let column = p.column();
        let sign = if p.eat('+') {
            Scalar::one()
        } else if p.eat('-') {
            -Scalar::one()
        } else if first {
            Scalar::one()
        } else if *p.peek() == Tok::End {
            break;
        } else {
            return Err(p.error("`+`, `-` or end of line"));
        };
        first = false;
        let (c, body) = p.term()?;
        let c = sign * c;
        let this = match &body {
            Body::Tensor(t) => (false, false, 0, t.len()),
            Body::Bracket { slots, reduced, target } => (true, *reduced, slots.len(), target.len()),
        };
        match shape {
            None => shape = Some(this),
            Some(s) if s != this => {
                return Err(p.semantic(format!("column {column}: term does not match the shape of the first term")))
            }
            _ => {}
        }
        match body {
            Body::Tensor(t) => tensors.add_term(t, c),
            Body::Bracket { slots, target, .. } => {
                let mut hs: LinComb<Vec<Basis>> = LinComb::basis(Vec::new());
                for h in &slots {
                    hs = hs.flat_map(|k| {
                        h.iter()
                            .map(|(b, x)| {
                                let mut k = k.clone();
                                k.push(b.clone());
                                (k, x.clone())
                            })
                            .collect()
                    });
                }
                for (k, x) in &hs {
                    raw.add_term((k.clone(), target.clone()), &c * x);
                }
            }
        }
    }
    Ok(match shape {
        Some((false, _, _, _)) if tensors.is_zero() => Literal::Zero,
        Some((false, _, _, _)) => Literal::Tensor(tensors),
        Some((true, true, arity, _)) => {
            let x = normalize_last(module, arity, &raw);
            if x.is_zero() {
                Literal::Zero
            } else {
                Literal::Pseudo(x)
            }
        }
        Some((true, false, _, _)) if raw.is_zero() => Literal::Zero,
        Some((true, false, _, _)) => Literal::Plain(raw),
        None => return Err(p.error("a literal")),
    })
}

/// Parses an H-expression such as `d1^2 - 2 d1 d2 + 1/3`.
pub fn parse_h(module: &FreeModule, text: &str, line: usize, column: usize) -> Result<HElement> {
    let toks = lex(text, line, column)?;
    let mut p = Parser { module, toks, pos: 0, line };
    let h = p.hexpr()?;
    if *p.peek() != Tok::End {
        return Err(p.error("`+`, `-` or end of line"));
    }
    Ok(h)
}

/// Returns true when `label` would read as an H-factor over `hopf`.
pub fn clashes_with_h(hopf: &HopfSpec, label: &str) -> bool {
    let (head, digits) = label.split_at(label.chars().next().map_or(0, char::len_utf8));
    let numeric = !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit());
    numeric && matches!((hopf, head), (HopfSpec::Polynomial { .. }, "d") | (HopfSpec::Group(_), "g"))
}

/// Returns true when `label` is usable as a generator name.
pub fn is_identifier(label: &str) -> bool {
    let mut chars = label.chars();
    chars.next().is_some_and(|c| c.is_alphabetic() || c == '_') && chars.all(|c| c.is_alphanumeric() || c == '_')
}

// ---------------------------------------------------------------- rendering

pub fn render_basis(b: &Basis) -> String {
    match b {
        Basis::Unit => "1".into(),
        Basis::Mono(e) => {
            let parts: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, &a)| if a == 1 { format!("d{}", i + 1) } else { format!("d{}^{a}", i + 1) })
                .collect();
            if parts.is_empty() {
                "1".into()
            } else {
                parts.join(" ")
            }
        }
        Basis::Elem(k) => format!("g{}", k + 1),
    }
}

fn render_basis_in(hopf: &HopfSpec, b: &Basis) -> String {
    if *b == hopf.one() {
        "1".into()
    } else {
        render_basis(b)
    }
}

/// Joins signed terms as `a + b - c`, with a bare leading `-`.
fn join_signed(terms: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (negative, body) in terms {
        match (out.is_empty(), negative) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn with_coeff(c: &Scalar, body: String) -> (bool, String) {
    let abs = c.abs();
    let body = if abs.is_one() { body } else { format!("{abs} {body}") };
    (c.is_negative(), body)
}

pub fn render_h(hopf: &HopfSpec, h: &HElement) -> String {
    join_signed(h.iter().map(|(b, c)| {
        if *b == hopf.one() {
            (c.is_negative(), c.abs().to_string())
        } else {
            with_coeff(c, render_basis(b))
        }
    }))
}

fn render_mono(module: &FreeModule, m: &Mono) -> String {
    let label = module.label(m.gen);
    if m.basis == module.hopf().one() {
        label.to_string()
    } else {
        format!("{}*{label}", render_basis(&m.basis))
    }
}

fn render_target(module: &FreeModule, t: &[Mono]) -> String {
    let parts: Vec<String> = t.iter().map(|m| render_mono(module, m)).collect();
    if parts.len() == 1 {
        parts[0].clone()
    } else {
        format!("({})", parts.join(", "))
    }
}

fn render_bracket(module: &FreeModule, slots: &[Basis], at: &str, target: &[Mono]) -> String {
    let hopf = module.hopf();
    let slots: Vec<String> = slots.iter().map(|b| render_basis_in(hopf, b)).collect();
    format!("[{}] {at} {}", slots.join(" # "), render_target(module, target))
}

pub fn render_tensor(module: &FreeModule, t: &TensorElement) -> String {
    join_signed(t.iter().map(|(k, c)| with_coeff(c, render_target(module, k))))
}

pub fn render_pseudo(module: &FreeModule, x: &PseudoTensor) -> String {
    let one = module.hopf().one();
    join_signed(x.terms().iter().map(|((slots, t), c)| {
        let mut full = slots.clone();
        full.push(one.clone());
        with_coeff(c, render_bracket(module, &full, "@H", t))
    }))
}

/// Renders an unreduced `H^{⊗n} ⊗ M^{⊗p}` value with `@`.
pub fn render_plain(module: &FreeModule, x: &RawTensor) -> String {
    join_signed(x.iter().map(|((slots, t), c)| with_coeff(c, render_bracket(module, slots, "@", t))))
}

pub fn render(module: &FreeModule, lit: &Literal) -> String {
    match lit {
        Literal::Zero => "0".into(),
        Literal::Tensor(t) => render_tensor(module, t),
        Literal::Pseudo(x) => render_pseudo(module, x),
        Literal::Plain(x) => render_plain(module, x),
    }
}
