//! Concrete cocommutative Hopf algebras with exact arithmetic.
//!
//! Three families are supported: the ground field `k`, the polynomial
//! algebra `k[d1, .., dm]` with primitive generators (the enveloping
//! algebra of an abelian Lie algebra), and group algebras `kG` of finite
//! groups given by a multiplication table. In all three the product of two
//! basis elements is again a single basis element, which keeps the kernel
//! small.

use num_integer::binomial;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lincomb::{int, LinComb, Scalar};

/// Element of the fixed k-basis of H.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    /// The only basis element of the trivial Hopf algebra `k`.
    Unit,
    /// Monomial `d1^a1 ... dm^am` of `k[d1, .., dm]`, stored as exponents.
    Mono(Vec<u32>),
    /// Group element (0-based row of the multiplication table).
    Elem(usize),
}

pub type HElement = LinComb<Basis>;

/// Element of `H^{⊗n}`; every key has length `n`.
pub type HTensor = LinComb<Vec<Basis>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomFailure {
    pub axiom: String,
    pub detail: String,
}

impl AxiomFailure {
    fn new(axiom: &str, detail: impl Into<String>) -> Self {
        Self { axiom: axiom.to_string(), detail: detail.into() }
    }
}

/// Multiplication table of a finite group, 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    rows: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupTable {
    /// Validates the table; the first failing axiom is reported.
    pub fn new(rows: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        if let Some(fail) = Self::audit(&rows, identity).into_iter().next() {
            return Err(Error::InvalidGroup { axiom: fail.axiom, detail: fail.detail });
        }
        let n = rows.len();
        let inverse = (0..n)
            .map(|a| (0..n).find(|&b| rows[a][b] == identity).expect("audited"))
            .collect();
        Ok(Self { rows, identity, inverse })
    }

    /// The cyclic group `Z_n` with identity 0.
    pub fn cyclic(n: usize) -> Self {
        let rows = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::new(rows, 0).expect("cyclic groups are groups")
    }

    /// Checks shape, closure, identity, associativity and two-sided
    /// inverses of a raw table.
    pub fn audit(rows: &[Vec<usize>], identity: usize) -> Vec<AxiomFailure> {
        let n = rows.len();
        let mut fails = Vec::new();
        if n == 0 {
            fails.push(AxiomFailure::new("shape", "empty table"));
            return fails;
        }
        if let Some(i) = rows.iter().position(|r| r.len() != n) {
            fails.push(AxiomFailure::new("shape", format!("row {} has {} entries, expected {n}", i + 1, rows[i].len())));
            return fails;
        }
        if let Some((i, j)) = pairs(n).find(|&(i, j)| rows[i][j] >= n) {
            fails.push(AxiomFailure::new("closure", format!("entry ({}, {}) = {} is not an element", i + 1, j + 1, rows[i][j] + 1)));
            return fails;
        }
        if identity >= n {
            fails.push(AxiomFailure::new("identity", format!("identity index {} out of range", identity + 1)));
            return fails;
        }
        if let Some(a) = (0..n).find(|&a| rows[identity][a] != a || rows[a][identity] != a) {
            fails.push(AxiomFailure::new("identity", format!("g{} is not fixed by the identity", a + 1)));
        }
        'assoc: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if rows[rows[a][b]][c] != rows[a][rows[b][c]] {
                        fails.push(AxiomFailure::new(
                            "associativity",
                            format!("(g{} g{}) g{} != g{} (g{} g{})", a + 1, b + 1, c + 1, a + 1, b + 1, c + 1),
                        ));
                        break 'assoc;
                    }
                }
            }
        }
        for a in 0..n {
            let two_sided = (0..n).any(|b| rows[a][b] == identity && rows[b][a] == identity);
            if !two_sided {
                fails.push(AxiomFailure::new("inverse", format!("g{} has no two-sided inverse", a + 1)));
                break;
            }
        }
        fails
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.rows[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HopfSpec {
    Trivial,
    Polynomial { vars: usize },
    Group(GroupTable),
}

impl HopfSpec {
    pub fn polynomial(vars: usize) -> Result<Self> {
        if vars == 0 {
            return Err(Error::HopfMismatch("polynomial Hopf algebra needs at least one generator".into()));
        }
        Ok(Self::Polynomial { vars })
    }

    pub fn group(table: GroupTable) -> Self {
        Self::Group(table)
    }

    pub fn cyclic(n: usize) -> Self {
        Self::Group(GroupTable::cyclic(n))
    }

    /// Header line used by the spec-file grammar.
    pub fn describe(&self) -> String {
        match self {
            Self::Trivial => "trivial".into(),
            Self::Polynomial { vars } => format!("polynomial {vars}"),
            Self::Group(t) => format!("group {}", t.order()),
        }
    }

    pub fn is_finite_dimensional(&self) -> bool {
        !matches!(self, Self::Polynomial { .. })
    }

    /// The full basis of a finite-dimensional H; `None` for polynomial H.
    pub fn finite_basis(&self) -> Option<Vec<Basis>> {
        match self {
            Self::Trivial => Some(vec![Basis::Unit]),
            Self::Polynomial { .. } => None,
            Self::Group(t) => Some((0..t.order()).map(Basis::Elem).collect()),
        }
    }

    pub fn one(&self) -> Basis {
        match self {
            Self::Trivial => Basis::Unit,
            Self::Polynomial { vars } => Basis::Mono(vec![0; *vars]),
            Self::Group(t) => Basis::Elem(t.identity()),
        }
    }

    pub fn unit(&self) -> HElement {
        HElement::basis(self.one())
    }

    pub fn scalar(&self, c: Scalar) -> HElement {
        HElement::term(self.one(), c)
    }

    /// The polynomial generator `d_i` (1-based).
    pub fn generator(&self, i: usize) -> Result<HElement> {
        match self {
            Self::Polynomial { vars } if (1..=*vars).contains(&i) => {
                let mut e = vec![0; *vars];
                e[i - 1] = 1;
                Ok(HElement::basis(Basis::Mono(e)))
            }
            _ => Err(Error::HopfMismatch(format!("no polynomial generator d{i} in {}", self.describe()))),
        }
    }

    /// Group element `g_k` (1-based).
    pub fn group_element(&self, k: usize) -> Result<HElement> {
        match self {
            Self::Group(t) if (1..=t.order()).contains(&k) => Ok(HElement::basis(Basis::Elem(k - 1))),
            _ => Err(Error::HopfMismatch(format!("no group element g{k} in {}", self.describe()))),
        }
    }

    pub fn check_basis(&self, b: &Basis) -> Result<()> {
        let ok = match (self, b) {
            (Self::Trivial, Basis::Unit) => true,
            (Self::Polynomial { vars }, Basis::Mono(e)) => e.len() == *vars,
            (Self::Group(t), Basis::Elem(g)) => *g < t.order(),
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::HopfMismatch(format!("{b:?} is not a basis element of {}", self.describe())))
        }
    }

    pub fn check_element(&self, h: &HElement) -> Result<()> {
        h.keys().try_for_each(|b| self.check_basis(b))
    }

    pub fn degree(&self, b: &Basis) -> u32 {
        match b {
            Basis::Mono(e) => e.iter().sum(),
            _ => 0,
        }
    }

    pub fn basis_mul(&self, a: &Basis, b: &Basis) -> Basis {
        match (self, a, b) {
            (Self::Trivial, _, _) => Basis::Unit,
            (Self::Polynomial { .. }, Basis::Mono(x), Basis::Mono(y)) => {
                Basis::Mono(x.iter().zip(y).map(|(p, q)| p + q).collect())
            }
            (Self::Group(t), Basis::Elem(x), Basis::Elem(y)) => Basis::Elem(t.mul(*x, *y)),
            _ => panic!("basis elements {a:?}, {b:?} do not belong to {}", self.describe()),
        }
    }

    /// `S` on a basis element is a signed basis element.
    pub fn basis_antipode(&self, b: &Basis) -> (Basis, Scalar) {
        match (self, b) {
            (Self::Trivial, _) => (Basis::Unit, Scalar::one()),
            (Self::Polynomial { .. }, Basis::Mono(e)) => {
                let sign = if self.degree(b) % 2 == 0 { 1 } else { -1 };
                (Basis::Mono(e.clone()), int(sign))
            }
            (Self::Group(t), Basis::Elem(g)) => (Basis::Elem(t.inverse(*g)), Scalar::one()),
            _ => panic!("basis element {b:?} does not belong to {}", self.describe()),
        }
    }

    pub fn basis_counit(&self, b: &Basis) -> Scalar {
        match b {
            Basis::Mono(_) if self.degree(b) > 0 => Scalar::zero(),
            _ => Scalar::one(),
        }
    }

    /// Iterated coproduct of a basis element into `factors` tensor factors.
    /// `factors == 1` is the identity and `factors == 0` is the counit.
    pub fn basis_coproduct(&self, b: &Basis, factors: usize) -> Vec<(Vec<Basis>, Scalar)> {
        match factors {
            0 => vec![(Vec::new(), self.basis_counit(b))],
            1 => vec![(vec![b.clone()], Scalar::one())],
            _ => match b {
                Basis::Mono(e) => {
                    let mut out = Vec::new();
                    split_exponents(e, factors, &mut Vec::new(), Scalar::one(), &mut out);
                    out
                }
                other => vec![(vec![other.clone(); factors], Scalar::one())],
            },
        }
    }

    pub fn mul(&self, a: &HElement, b: &HElement) -> Result<HElement> {
        self.check_element(a)?;
        self.check_element(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    pub(crate) fn mul_unchecked(&self, a: &HElement, b: &HElement) -> HElement {
        let mut out = HElement::zero();
        for (x, cx) in a {
            for (y, cy) in b {
                out.add_term(self.basis_mul(x, y), cx * cy);
            }
        }
        out
    }

    pub fn comul(&self, a: &HElement) -> HTensor {
        self.iterated_comul(a, 2)
    }

    /// `Δ^{(factors-1)}`, with `Δ^{(-1)} = ε` landing in `H^{⊗0} = k`.
    pub fn iterated_comul(&self, a: &HElement, factors: usize) -> HTensor {
        let mut out = HTensor::zero();
        for (b, c) in a {
            for (legs, k) in self.basis_coproduct(b, factors) {
                out.add_term(legs, c * k);
            }
        }
        out
    }

    pub fn antipode(&self, a: &HElement) -> HElement {
        a.iter()
            .map(|(b, c)| {
                let (s, sign) = self.basis_antipode(b);
                (s, c * sign)
            })
            .collect()
    }

    pub fn counit(&self, a: &HElement) -> Scalar {
        a.iter().map(|(b, c)| c * self.basis_counit(b)).fold(Scalar::zero(), |acc, x| acc + x)
    }

    /// Slotwise product in `H^{⊗n}`.
    pub fn tensor_mul(&self, x: &HTensor, y: &HTensor) -> HTensor {
        let mut out = HTensor::zero();
        for (kx, cx) in x {
            for (ky, cy) in y {
                assert_eq!(kx.len(), ky.len(), "tensor arity mismatch");
                let key = kx.iter().zip(ky).map(|(a, b)| self.basis_mul(a, b)).collect();
                out.add_term(key, cx * cy);
            }
        }
        out
    }

    /// Applies `S` in every slot.
    pub fn tensor_antipode(&self, x: &HTensor) -> HTensor {
        x.iter()
            .map(|(key, c)| {
                let mut coeff = c.clone();
                let legs = key
                    .iter()
                    .map(|b| {
                        let (s, sign) = self.basis_antipode(b);
                        coeff *= sign;
                        s
                    })
                    .collect();
                (legs, coeff)
            })
            .collect()
    }

    /// Basis elements used for bounded axiom checks: monomials of total
    /// degree at most `bound`, or the whole basis when H is finite.
    pub fn bounded_basis(&self, bound: u32) -> Vec<Basis> {
        match self {
            Self::Polynomial { vars } => {
                let mut out = Vec::new();
                monomials(*vars, bound, &mut Vec::new(), &mut out);
                out
            }
            _ => self.finite_basis().expect("finite"),
        }
    }
}

fn split_exponents(e: &[u32], factors: usize, acc: &mut Vec<Basis>, coeff: Scalar, out: &mut Vec<(Vec<Basis>, Scalar)>) {
    if factors == 1 {
        acc.push(Basis::Mono(e.to_vec()));
        out.push((acc.clone(), coeff));
        acc.pop();
        return;
    }
    let mut first = vec![0u32; e.len()];
    loop {
        let weight = e
            .iter()
            .zip(&first)
            .map(|(&n, &k)| binomial(n as u64, k as u64))
            .product::<u64>();
        let rest: Vec<u32> = e.iter().zip(&first).map(|(n, k)| n - k).collect();
        acc.push(Basis::Mono(first.clone()));
        split_exponents(&rest, factors - 1, acc, &coeff * int(weight as i64), out);
        acc.pop();
        // odometer over 0..=e[i]
        let mut i = 0;
        loop {
            if i == e.len() {
                return;
            }
            if first[i] < e[i] {
                first[i] += 1;
                break;
            }
            first[i] = 0;
            i += 1;
        }
    }
}

fn monomials(vars: usize, budget: u32, prefix: &mut Vec<u32>, out: &mut Vec<Basis>) {
    if prefix.len() == vars {
        out.push(Basis::Mono(prefix.clone()));
        return;
    }
    for k in 0..=budget {
        prefix.push(k);
        monomials(vars, budget - k, prefix, out);
        prefix.pop();
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HopfReport {
    pub checked: usize,
    pub failures: Vec<AxiomFailure>,
}

impl HopfReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn expect(&mut self, ok: bool, axiom: &str, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(AxiomFailure::new(axiom, detail()));
        }
    }
}

/// Checks the bialgebra and Hopf axioms, plus cocommutativity, on the
/// bounded basis.
pub fn check_hopf_axioms(spec: &HopfSpec, degree_bound: u32) -> HopfReport {
    let mut report = HopfReport::default();
    if let HopfSpec::Group(t) = spec {
        for fail in GroupTable::audit(t.rows(), t.identity()) {
            report.checked += 1;
            report.failures.push(fail);
        }
    }
    let basis = spec.bounded_basis(degree_bound);
    let one = spec.unit();
    let elem = |b: &Basis| HElement::basis(b.clone());

    for a in &basis {
        let x = elem(a);
        report.expect(spec.mul_unchecked(&one, &x) == x && spec.mul_unchecked(&x, &one) == x, "unit", || {
            format!("1 is not a two-sided unit on {a:?}")
        });

        let d = spec.comul(&x);
        let left = apply_in_slot(spec, &d, 0);
        let right = apply_in_slot(spec, &d, 1);
        report.expect(left == right, "coassociativity", || format!("(Δ⊗id)Δ != (id⊗Δ)Δ on {a:?}"));

        let counit_left: HElement = d
            .iter()
            .map(|(k, c)| (k[1].clone(), c * spec.basis_counit(&k[0])))
            .collect();
        let counit_right: HElement = d
            .iter()
            .map(|(k, c)| (k[0].clone(), c * spec.basis_counit(&k[1])))
            .collect();
        report.expect(counit_left == x && counit_right == x, "counit", || {
            format!("(ε⊗id)Δ or (id⊗ε)Δ differs from id on {a:?}")
        });

        let eps = spec.scalar(spec.basis_counit(a));
        let mut s_left = HElement::zero();
        let mut s_right = HElement::zero();
        for (k, c) in &d {
            let (s0, sign0) = spec.basis_antipode(&k[0]);
            let (s1, sign1) = spec.basis_antipode(&k[1]);
            s_left.add_term(spec.basis_mul(&s0, &k[1]), c * sign0);
            s_right.add_term(spec.basis_mul(&k[0], &s1), c * sign1);
        }
        report.expect(s_left == eps && s_right == eps, "antipode", || {
            format!("S(a1)a2 = {s_left:?}, a1S(a2) = {s_right:?}, ε(a)1 = {eps:?} on {a:?}")
        });

        let swapped: HTensor = d.map_keys(|k| vec![k[1].clone(), k[0].clone()]);
        report.expect(swapped == d, "cocommutativity", || format!("τΔ != Δ on {a:?}"));
    }

    for a in &basis {
        for b in &basis {
            let ab = HElement::basis(spec.basis_mul(a, b));
            let lhs = spec.comul(&ab);
            let rhs = spec.tensor_mul(&spec.comul(&elem(a)), &spec.comul(&elem(b)));
            report.expect(lhs == rhs, "multiplicativity", || format!("Δ(ab) != Δ(a)Δ(b) on ({a:?}, {b:?})"));

            let s_ab = spec.antipode(&ab);
            let sb_sa = spec.mul_unchecked(&spec.antipode(&elem(b)), &spec.antipode(&elem(a)));
            report.expect(s_ab == sb_sa, "antipode anti-homomorphism", || {
                format!("S(ab) != S(b)S(a) on ({a:?}, {b:?})")
            });

            if !matches!(spec, HopfSpec::Group(_)) {
                report.expect(spec.basis_mul(a, b) == spec.basis_mul(b, a), "commutativity", || {
                    format!("ab != ba on ({a:?}, {b:?})")
                });
            }

            for c in &basis {
                let l = spec.basis_mul(&spec.basis_mul(a, b), c);
                let r = spec.basis_mul(a, &spec.basis_mul(b, c));
                report.expect(l == r, "associativity", || format!("(ab)c != a(bc) on ({a:?}, {b:?}, {c:?})"));
            }
        }
    }
    report
}

/// Applies Δ to slot `pos` of a tensor, producing one more factor.
pub fn apply_in_slot(spec: &HopfSpec, x: &HTensor, pos: usize) -> HTensor {
    let mut out = HTensor::zero();
    for (key, c) in x {
        for (legs, k) in spec.basis_coproduct(&key[pos], 2) {
            let mut new_key = key[..pos].to_vec();
            new_key.extend(legs);
            new_key.extend_from_slice(&key[pos + 1..]);
            out.add_term(new_key, c * k);
        }
    }
    out
}
