//! Coboundary comultiplications and the pseudo Yang-Baxter equations.

use serde::Serialize;

use crate::algebra::PseudoAlgebra;
use crate::bialgebra::{CoalgebraMap, HLinearMap};
use crate::check::{CheckReport, Defect};
use crate::module::{FreeModule, Gen, ModuleElement, Mono, TensorElement};
use crate::pseudotensor::{bracket_of, mu3, mu_operator, right_form, Decorated, MuOp};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Symmetry {
    Symmetric,
    AntiSymmetric,
    Neither,
}

impl Symmetry {
    pub fn as_str(self) -> &'static str {
        match self {
            Symmetry::Symmetric => "symmetric",
            Symmetry::AntiSymmetric => "anti-symmetric",
            Symmetry::Neither => "neither",
        }
    }
}

/// Compares `τ(r)` with `±r`. Zero counts as symmetric.
pub fn classify(module: &FreeModule, r: &TensorElement) -> Symmetry {
    let flipped = module.permute(r, &[1, 0]);
    if &flipped == r {
        Symmetry::Symmetric
    } else if (&flipped + r).is_zero() {
        Symmetry::AntiSymmetric
    } else {
        Symmetry::Neither
    }
}

fn element(m: &Mono) -> ModuleElement {
    ModuleElement::basis(m.clone())
}

/// `Δ_r(a) = Σ h^{a,u_i}·(c_{a,u_i} ⊗ v_i) - l^{v_i,a}·(u_i ⊗ e_{v_i,a})`.
pub fn delta_r_apply(alg: &PseudoAlgebra, r: &TensorElement, a: &ModuleElement) -> TensorElement {
    let m = alg.module();
    let mut out = TensorElement::zero();
    for (key, c) in r {
        let (u, v) = (&key[0], &key[1]);
        for ((h, t), ct) in alg.star(a, &element(u)).terms() {
            out.add_scaled(&m.basis_act_diag(&h[0], &[t[0].clone(), v.clone()]), &(c * ct));
        }
        for ((l, e), ce) in &right_form(m, &alg.star(&element(v), a)) {
            out.add_scaled(&m.basis_act_diag(l, &[u.clone(), e[0].clone()]), &-(c * ce));
        }
    }
    out
}

/// `Δ_r` on generators.
pub fn delta_r(alg: &PseudoAlgebra, r: &TensorElement) -> CoalgebraMap {
    let m = alg.module();
    let mut out = HLinearMap::zero(m.clone(), 2);
    for g in m.gens() {
        out.set(g, delta_r_apply(alg, r, &m.generator(g))).expect("values lie in A ⊗ A");
    }
    out
}

/// `{x, y}` as a list of `(h, c)` pieces.
fn brace(alg: &PseudoAlgebra, x: &Mono, y: &Mono) -> Decorated {
    bracket_of(&alg.star(&element(x), &element(y)))
}

fn terms(r: &TensorElement) -> impl Iterator<Item = (&Mono, &Mono, &crate::lincomb::Scalar)> {
    r.iter().map(|(k, c)| (&k[0], &k[1], c))
}

/// `A(r) = μ_{-1}^4({u_i,u_j} ⊗ v_j ⊗ v_i) - μ_2^{3,4}(u_i ⊗ {v_i,u_j} ⊗ v_j)
///        + μ_3^{1,4}(u_i ⊗ u_j ⊗ {v_j,v_i})`.
pub fn aybe(alg: &PseudoAlgebra, r: &TensorElement) -> TensorElement {
    let m = alg.module();
    let (mut t1, mut t2, mut t3) = (Decorated::zero(), Decorated::zero(), Decorated::zero());
    for (ui, vi, ci) in terms(r) {
        for (uj, vj, cj) in terms(r) {
            let c = ci * cj;
            for ((h, x), cx) in &brace(alg, ui, uj) {
                t1.add_term((h.clone(), vec![x[0].clone(), vj.clone(), vi.clone()]), &c * cx);
            }
            for ((h, x), cx) in &brace(alg, vi, uj) {
                t2.add_term((h.clone(), vec![ui.clone(), x[0].clone(), vj.clone()]), &c * cx);
            }
            for ((h, x), cx) in &brace(alg, vj, vi) {
                t3.add_term((h.clone(), vec![ui.clone(), uj.clone(), x[0].clone()]), &c * cx);
            }
        }
    }
    let apply = |op: MuOp, x: &Decorated| mu_operator(m, &op, x).expect("descriptor fits four places");
    apply(MuOp::antipodal(1, &[4]), &t1) - apply(MuOp::plain(2, &[3, 4]), &t2) + apply(MuOp::plain(3, &[1, 4]), &t3)
}

/// `μ_3(a • A(r) - A(r) • a)`.
pub fn thm44_condition(alg: &PseudoAlgebra, r: &TensorElement, a: &ModuleElement) -> TensorElement {
    let ar = aybe(alg, r);
    let x = alg.bullet_left(a, &ar) - alg.bullet_right(&ar, a);
    mu3(alg.module(), &x)
}

pub fn check_thm44_condition(alg: &PseudoAlgebra, r: &TensorElement) -> CheckReport {
    let m = alg.module();
    let mut report = CheckReport::new("bullet condition");
    for g in m.gens() {
        report.push_tensor(vec![m.label(g).to_string()], thm44_condition(alg, r, &m.generator(g)));
    }
    report
}

/// Both sides of the coassociativity criterion for `Δ_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoassocEquivalence {
    pub coassociative: CheckReport,
    pub condition: CheckReport,
}

impl CoassocEquivalence {
    pub fn agree(&self) -> bool {
        self.coassociative.passed() == self.condition.passed()
    }
}

pub fn coassoc_equiv_check(alg: &PseudoAlgebra, r: &TensorElement) -> CoassocEquivalence {
    CoassocEquivalence {
        coassociative: delta_r(alg, r).check_coassoc(),
        condition: check_thm44_condition(alg, r),
    }
}

/// `[[r, r]] = μ_{-1}^3([u_j,u_i] ⊗ v_j ⊗ v_i) - μ_{-2}^4(u_i ⊗ [u_j,v_i] ⊗ v_j)
///            - μ_{-3}^2(u_i ⊗ u_j ⊗ [v_j,v_i])`, with `[x, y]` the bracket
/// read off the table entry `[x * y]`.
pub fn cybe(bracket: &PseudoAlgebra, r: &TensorElement) -> TensorElement {
    let m = bracket.module();
    let (mut t1, mut t2, mut t3) = (Decorated::zero(), Decorated::zero(), Decorated::zero());
    for (ui, vi, ci) in terms(r) {
        for (uj, vj, cj) in terms(r) {
            let c = ci * cj;
            for ((h, x), cx) in &brace(bracket, uj, ui) {
                t1.add_term((h.clone(), vec![x[0].clone(), vj.clone(), vi.clone()]), &c * cx);
            }
            for ((h, x), cx) in &brace(bracket, uj, vi) {
                t2.add_term((h.clone(), vec![ui.clone(), x[0].clone(), vj.clone()]), &c * cx);
            }
            for ((h, x), cx) in &brace(bracket, vj, vi) {
                t3.add_term((h.clone(), vec![ui.clone(), uj.clone(), x[0].clone()]), &c * cx);
            }
        }
    }
    let apply = |op: MuOp, x: &Decorated| mu_operator(m, &op, x).expect("descriptor fits four places");
    apply(MuOp::antipodal(1, &[3]), &t1) - apply(MuOp::antipodal(2, &[4]), &t2) - apply(MuOp::antipodal(3, &[2]), &t3)
}

/// Outcome of the symmetric/anti-symmetric transfer from AYBE to CYBE.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thm61Outcome {
    pub symmetry: Symmetry,
    pub aybe: TensorElement,
    pub cybe: TensorElement,
}

impl Thm61Outcome {
    pub fn hypotheses_hold(&self) -> bool {
        self.symmetry != Symmetry::Neither && self.aybe.is_zero()
    }

    /// The implication "hypotheses ⟹ CYBE" is witnessed.
    pub fn passed(&self) -> bool {
        !self.hypotheses_hold() || self.cybe.is_zero()
    }

    pub fn to_report(&self) -> CheckReport {
        let mut report = CheckReport::new("pseudo-CYBE transfer");
        let defect = if self.passed() {
            None
        } else {
            Some(Defect::Tensor(self.cybe.clone()))
        };
        report.push(vec![self.symmetry.as_str().to_string()], defect);
        report
    }
}

pub fn thm61_suite(alg: &PseudoAlgebra, r: &TensorElement) -> Thm61Outcome {
    Thm61Outcome {
        symmetry: classify(alg.module(), r),
        aybe: aybe(alg, r),
        cybe: cybe(&alg.lie_ify(), r),
    }
}

/// `r = Σ c (u ⊗ v)` built from generator index pairs.
pub fn two_tensor(module: &FreeModule, terms: &[(Gen, Gen, i64)]) -> TensorElement {
    let one = module.hopf().one();
    terms
        .iter()
        .map(|&(u, v, c)| (vec![Mono::new(u, one.clone()), Mono::new(v, one.clone())], crate::lincomb::int(c)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::HopfSpec;
    use crate::lincomb::LinComb;

    fn coboundary_algebra() -> PseudoAlgebra {
        let m = FreeModule::new(HopfSpec::polynomial(1).unwrap(), vec!["e1".into(), "e2".into()]).unwrap();
        let mut alg = PseudoAlgebra::new(m.clone());
        let one = m.hopf().one();
        for (i, j, k) in [(1, 0, 0), (1, 1, 1)] {
            alg.set_product_raw(i, j, &LinComb::basis((vec![one.clone(), one.clone()], vec![Mono::new(k, one.clone())])))
                .unwrap();
        }
        alg
    }

    #[test]
    fn delta_r_reproduces_example() {
        let alg = coboundary_algebra();
        let m = alg.module().clone();
        let r = two_tensor(&m, &[(1, 0, 1), (0, 1, -1)]);
        let dr = delta_r(&alg, &r);
        assert_eq!(dr.value(0), two_tensor(&m, &[(0, 0, 1)]));
        assert_eq!(dr.value(1), two_tensor(&m, &[(1, 0, 1)]));
        assert!(delta_r(&alg, &TensorElement::zero()).is_zero());
    }

    #[test]
    fn aybe_examples() {
        let alg = coboundary_algebra();
        let m = alg.module().clone();
        assert!(aybe(&alg, &two_tensor(&m, &[(1, 0, 1), (0, 1, -1)])).is_zero());
        assert!(aybe(&alg, &TensorElement::zero()).is_zero());
        let r = two_tensor(&m, &[(1, 1, 1)]);
        let one = m.hopf().one();
        let e2 = Mono::new(1, one);
        assert_eq!(aybe(&alg, &r), TensorElement::basis(vec![e2.clone(), e2.clone(), e2]));
    }

    #[test]
    fn bullet_condition_example() {
        let alg = coboundary_algebra();
        let m = alg.module().clone();
        let r = two_tensor(&m, &[(1, 1, 1)]);
        let one = m.hopf().one();
        let (e1, e2) = (Mono::new(0, one.clone()), Mono::new(1, one));
        let got = thm44_condition(&alg, &r, &m.gen("e1"));
        assert_eq!(got, TensorElement::term(vec![e2.clone(), e2, e1], crate::lincomb::int(-1)));
        let eq = coassoc_equiv_check(&alg, &r);
        assert!(eq.agree());
        assert!(!eq.condition.passed());
    }

    #[test]
    fn symmetry_classes() {
        let m = coboundary_algebra().module().clone();
        assert_eq!(classify(&m, &two_tensor(&m, &[(1, 0, 1), (0, 1, -1)])), Symmetry::AntiSymmetric);
        assert_eq!(classify(&m, &two_tensor(&m, &[(1, 0, 1), (0, 1, 1)])), Symmetry::Symmetric);
        assert_eq!(classify(&m, &two_tensor(&m, &[(1, 0, 1)])), Symmetry::Neither);
    }

    #[test]
    fn neither_symmetric_is_vacuous() {
        let alg = coboundary_algebra();
        let m = alg.module().clone();
        let out = thm61_suite(&alg, &two_tensor(&m, &[(1, 0, 1)]));
        assert_eq!(out.symmetry, Symmetry::Neither);
        assert!(!out.hypotheses_hold());
        assert!(out.passed());
    }
}
