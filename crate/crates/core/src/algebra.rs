//! Pseudoalgebras given by generator tables.
//!
//! A [`PseudoAlgebra`] stores `e_i * e_j` for generators and extends it
//! H-bilinearly: `f e_i * g e_j = ((f ⊗ g) ⊗_H 1)(e_i * e_j)`. The same type
//! carries Lie pseudobrackets; the Lie-specific checkers read the table as
//! `[e_i * e_j]`.

use std::collections::BTreeMap;

use crate::check::{CheckReport, Defect};
use crate::error::{Error, Result};
use crate::hopf::{Basis, HElement, HopfSpec};
use crate::lincomb::{LinComb, Scalar};
use crate::module::{FreeModule, Gen, ModuleElement, Mono, TensorElement};
use crate::pseudotensor::{
    self, bracket_of, normalize_last, right_form, sigma_swap, Decorated, PseudoTensor, RawTensor,
};

/// Structure constants in plain-target form: `Σ (h_1 ⊗ .. ⊗ h_n) a_s`.
pub type Plain = LinComb<(Vec<Basis>, Gen)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoAlgebra {
    module: FreeModule,
    table: BTreeMap<(Gen, Gen), PseudoTensor>,
}

impl PseudoAlgebra {
    /// The zero product on `module`.
    pub fn new(module: FreeModule) -> Self {
        Self { module, table: BTreeMap::new() }
    }

    pub fn module(&self) -> &FreeModule {
        &self.module
    }

    pub fn hopf(&self) -> &HopfSpec {
        self.module.hopf()
    }

    /// Sets `e_i * e_j`; the value must be a canonical two-slot pseudotensor
    /// over a single module factor.
    pub fn set_product(&mut self, i: Gen, j: Gen, value: PseudoTensor) -> Result<()> {
        for g in [i, j] {
            if g >= self.module.rank() {
                return Err(Error::ModuleMismatch(format!("generator index {g} out of range")));
            }
        }
        if value.arity() != 2 {
            return Err(Error::ModuleMismatch(format!("products take values in H⊗H, got arity {}", value.arity())));
        }
        for (slots, target) in value.terms().keys() {
            slots.iter().try_for_each(|b| self.hopf().check_basis(b))?;
            if target.len() != 1 {
                return Err(Error::ModuleMismatch("product values must have a single module factor".into()));
            }
            self.module.check_mono(&target[0])?;
        }
        if value.is_zero() {
            self.table.remove(&(i, j));
        } else {
            self.table.insert((i, j), value);
        }
        Ok(())
    }

    /// Sets `e_i * e_j` from a raw representative, normalizing it.
    pub fn set_product_raw(&mut self, i: Gen, j: Gen, raw: &RawTensor) -> Result<()> {
        let value = pseudotensor::try_normalize_last(&self.module, 2, raw)?;
        self.set_product(i, j, value)
    }

    pub fn product(&self, i: Gen, j: Gen) -> PseudoTensor {
        self.table.get(&(i, j)).cloned().unwrap_or_else(|| PseudoTensor::zero(2))
    }

    /// Nonzero table entries in generator order.
    pub fn entries(&self) -> impl Iterator<Item = (&(Gen, Gen), &PseudoTensor)> {
        self.table.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_empty()
    }

    fn label(&self, g: Gen) -> String {
        self.module.label(g).to_string()
    }

    pub(crate) fn mono_star(&self, x: &Mono, y: &Mono) -> PseudoTensor {
        let entry = match self.table.get(&(x.gen, y.gen)) {
            Some(e) => e,
            None => return PseudoTensor::zero(2),
        };
        let one = self.hopf().one();
        if x.basis == one && y.basis == one {
            return entry.clone();
        }
        let hs = [HElement::basis(x.basis.clone()), HElement::basis(y.basis.clone())];
        pseudotensor::slot_mul_unchecked(&self.module, &hs, entry)
    }

    /// `a * b` for arbitrary module elements.
    pub fn pstar(&self, a: &ModuleElement, b: &ModuleElement) -> Result<PseudoTensor> {
        self.module.check_element(a)?;
        self.module.check_element(b)?;
        Ok(self.star(a, b))
    }

    pub(crate) fn star(&self, a: &ModuleElement, b: &ModuleElement) -> PseudoTensor {
        let mut out = PseudoTensor::zero(2);
        for (x, cx) in a {
            for (y, cy) in b {
                out += &self.mono_star(x, y).scale(&(cx * cy));
            }
        }
        out
    }

    fn mono_element(m: &Mono) -> ModuleElement {
        ModuleElement::basis(m.clone())
    }

    /// `(a * b) * c` in `H^{⊗3} ⊗_H A`.
    pub fn comp_left(&self, a: &ModuleElement, b: &ModuleElement, c: &ModuleElement) -> PseudoTensor {
        let hopf = self.hopf();
        let mut out = LinComb::zero();
        for ((f, e), ce) in self.star(a, b).terms() {
            for ((p, t), ct) in self.star(&Self::mono_element(&e[0]), c).terms() {
                for (legs, k) in hopf.basis_coproduct(&p[0], 2) {
                    let slots = vec![hopf.basis_mul(&f[0], &legs[0]), legs[1].clone()];
                    out.add_term((slots, t.clone()), ce * ct * k);
                }
            }
        }
        PseudoTensor::from_canonical(3, out)
    }

    /// `a * (b * c)` in `H^{⊗3} ⊗_H A`.
    pub fn comp_right(&self, a: &ModuleElement, b: &ModuleElement, c: &ModuleElement) -> PseudoTensor {
        let mut out = LinComb::zero();
        for ((f, e), ce) in self.star(b, c).terms() {
            for ((p, t), ct) in self.star(a, &Self::mono_element(&e[0])).terms() {
                out.add_term((vec![p[0].clone(), f[0].clone()], t.clone()), ce * ct);
            }
        }
        PseudoTensor::from_canonical(3, out)
    }

    pub fn check_associativity(&self) -> CheckReport {
        let mut report = CheckReport::new("associativity");
        for i in self.module.gens() {
            for j in self.module.gens() {
                for l in self.module.gens() {
                    let (a, b, c) = (self.module.generator(i), self.module.generator(j), self.module.generator(l));
                    let defect = self.comp_left(&a, &b, &c) - self.comp_right(&a, &b, &c);
                    report.push_pseudo(vec![self.label(i), self.label(j), self.label(l)], defect);
                }
            }
        }
        report
    }

    /// Associativity on random elements whose H-coefficients have degree at
    /// most `degree`; a guard on the H-bilinear extension.
    pub fn check_associativity_sampled(&self, seed: u64, samples: usize, degree: u32) -> CheckReport {
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let m = &self.module;
        let mut report = CheckReport::new("associativity on sampled elements");
        for _ in 0..samples {
            let [a, b, c] = [(); 3].map(|_| crate::sample::random_element(&mut rng, m, degree));
            let defect = self.comp_left(&a, &b, &c) - self.comp_right(&a, &b, &c);
            let inputs = [&a, &b, &c].map(|x| crate::literal::render_tensor(m, &m.to_tensor(x))).to_vec();
            report.push_pseudo(inputs, defect);
        }
        report
    }

    /// Plain-target structure constants of `e_i * e_j`.
    pub fn structure_constants(&self, i: Gen, j: Gen) -> Plain {
        pseudotensor::to_plain(&self.module, &self.product(i, j))
    }

    /// Difference of the two sides of the generator-level associativity
    /// identity written purely in structure constants:
    /// `Σ f_k^{ij}(f_s^{kl})_1 ⊗ g_k^{ij}(f_s^{kl})_2 ⊗ g_s^{kl} a_s
    ///  - Σ f_s^{ik} ⊗ f_k^{jl}(g_s^{ik})_1 ⊗ g_k^{jl}(g_s^{ik})_2 a_s`.
    pub fn structure_associativity_defect(&self, i: Gen, j: Gen, l: Gen) -> Plain {
        let hopf = self.hopf();
        let mut out = Plain::zero();
        for ((fg, k), c1) in &self.structure_constants(i, j) {
            for ((fg2, s), c2) in &self.structure_constants(*k, l) {
                for (legs, m) in hopf.basis_coproduct(&fg2[0], 2) {
                    let key = vec![
                        hopf.basis_mul(&fg[0], &legs[0]),
                        hopf.basis_mul(&fg[1], &legs[1]),
                        fg2[1].clone(),
                    ];
                    out.add_term((key, *s), c1 * c2 * m);
                }
            }
        }
        for ((fg, k), c1) in &self.structure_constants(j, l) {
            for ((fg2, s), c2) in &self.structure_constants(i, *k) {
                for (legs, m) in hopf.basis_coproduct(&fg2[1], 2) {
                    let key = vec![
                        fg2[0].clone(),
                        hopf.basis_mul(&fg[0], &legs[0]),
                        hopf.basis_mul(&fg[1], &legs[1]),
                    ];
                    out.add_term((key, *s), -(c1 * c2 * m));
                }
            }
        }
        out
    }

    pub fn check_structure_associativity(&self) -> CheckReport {
        let mut report = CheckReport::new("associativity (structure constants)");
        for i in self.module.gens() {
            for j in self.module.gens() {
                for l in self.module.gens() {
                    let d = self.structure_associativity_defect(i, j, l);
                    let defect = (!d.is_zero()).then_some(Defect::Plain(d));
                    report.push(vec![self.label(i), self.label(j), self.label(l)], defect);
                }
            }
        }
        report
    }

    pub fn check_commutativity(&self) -> CheckReport {
        let mut report = CheckReport::new("commutativity");
        for i in self.module.gens() {
            for j in self.module.gens() {
                let defect = self.product(i, j) - sigma_swap(&self.module, &self.product(j, i));
                report.push_pseudo(vec![self.label(i), self.label(j)], defect);
            }
        }
        report
    }

    /// `a * (w_1 ⊗ .. ⊗ w_p) = (h ⊗ 1) ⊗_H (c ⊗ w_2 ⊗ .. ⊗ w_p)` where
    /// `a * w_1 = (h ⊗ 1) ⊗_H c`.
    pub fn act_left(&self, a: &ModuleElement, w: &TensorElement) -> PseudoTensor {
        let mut out = LinComb::zero();
        for (key, cw) in w {
            let (first, rest) = key.split_first().expect("empty tensor factor");
            for ((h, c), cc) in self.star(a, &Self::mono_element(first)).terms() {
                let mut target = c.clone();
                target.extend(rest.iter().cloned());
                out.add_term((h.clone(), target), cw * cc);
            }
        }
        PseudoTensor::from_canonical(2, out)
    }

    /// `(w_1 ⊗ .. ⊗ w_p) * a` in the `(1 ⊗ l)` view: `Σ l ⊗ (w_1 ⊗ .. ⊗ e)`
    /// where `w_p * a = (1 ⊗ l) ⊗_H e`.
    pub fn act_right_form(&self, w: &TensorElement, a: &ModuleElement) -> Decorated {
        let mut out = Decorated::zero();
        for (key, cw) in w {
            let (last, init) = key.split_last().expect("empty tensor factor");
            let prod = self.star(&Self::mono_element(last), a);
            for ((l, e), ce) in &right_form(&self.module, &prod) {
                let mut target = init.to_vec();
                target.extend(e.iter().cloned());
                out.add_term((l.clone(), target), cw * ce);
            }
        }
        out
    }

    /// `(w_1 ⊗ .. ⊗ w_p) * a` in normal form.
    pub fn act_right(&self, w: &TensorElement, a: &ModuleElement) -> PseudoTensor {
        let one = self.hopf().one();
        let raw: RawTensor = self
            .act_right_form(w, a)
            .map_keys(|(l, t)| (vec![one.clone(), l.clone()], t.clone()));
        normalize_last(&self.module, 2, &raw)
    }

    /// `a • w`: the left action with its unit slot dropped.
    pub fn bullet_left(&self, a: &ModuleElement, w: &TensorElement) -> Decorated {
        bracket_of(&self.act_left(a, w))
    }

    /// `w • a`: the right action read off its `(1 ⊗ l)` form.
    pub fn bullet_right(&self, w: &TensorElement, a: &ModuleElement) -> Decorated {
        self.act_right_form(w, a)
    }

    /// The x-product `a ∘_x b = Σ ⟨S(x), h_i⟩ c_i` for the dual-basis
    /// functional `x = δ_basis`. Needs finite-dimensional H.
    pub fn x_product(&self, a: &ModuleElement, b: &ModuleElement, x: &Basis) -> Result<ModuleElement> {
        if !self.hopf().is_finite_dimensional() {
            return Err(Error::InfiniteDimensional);
        }
        self.hopf().check_basis(x)?;
        // ⟨S(δ_x), h⟩ = ⟨δ_x, S(h)⟩; S permutes the group basis.
        let mut out = ModuleElement::zero();
        for ((h, c), coeff) in self.pstar(a, b)?.terms() {
            let (s, sign) = self.hopf().basis_antipode(&h[0]);
            if &s == x {
                out.add_term(c[0].clone(), coeff * sign);
            }
        }
        Ok(out)
    }

    /// `[a * b]_lie = a * b - (σ ⊗_H id)(b * a)` on generators.
    pub fn lie_ify(&self) -> PseudoAlgebra {
        let mut table = BTreeMap::new();
        for i in self.module.gens() {
            for j in self.module.gens() {
                let v = self.product(i, j) - sigma_swap(&self.module, &self.product(j, i));
                if !v.is_zero() {
                    table.insert((i, j), v);
                }
            }
        }
        PseudoAlgebra { module: self.module.clone(), table }
    }

    pub fn lie_bracket(&self, a: &ModuleElement, b: &ModuleElement) -> PseudoTensor {
        self.star(a, b) - sigma_swap(&self.module, &self.star(b, a))
    }

    /// `[a, w]_⋆ = a * w - (σ ⊗ id)(w * a)`.
    pub fn star_bracket(&self, a: &ModuleElement, w: &TensorElement) -> PseudoTensor {
        self.act_left(a, w) - sigma_swap(&self.module, &self.act_right(w, a))
    }

    /// Reading the table as a bracket: `[a * b] + (σ ⊗ id)[b * a]`.
    pub fn check_skew(&self) -> CheckReport {
        let mut report = CheckReport::new("skew-commutativity");
        for i in self.module.gens() {
            for j in self.module.gens() {
                let defect = self.product(i, j) + sigma_swap(&self.module, &self.product(j, i));
                report.push_pseudo(vec![self.label(i), self.label(j)], defect);
            }
        }
        report
    }

    /// Reading the table as a bracket:
    /// `[a * [b * c]] - (σ_12 ⊗ id)[b * [a * c]] - [[a * b] * c]`.
    pub fn check_jacobi(&self) -> CheckReport {
        let mut report = CheckReport::new("Jacobi identity");
        for i in self.module.gens() {
            for j in self.module.gens() {
                for l in self.module.gens() {
                    let (a, b, c) = (self.module.generator(i), self.module.generator(j), self.module.generator(l));
                    let swapped = pseudotensor::permute_slots(&self.module, &self.comp_right(&b, &a, &c), &[1, 0, 2]);
                    let defect = self.comp_right(&a, &b, &c) - swapped - self.comp_left(&a, &b, &c);
                    report.push_pseudo(vec![self.label(i), self.label(j), self.label(l)], defect);
                }
            }
        }
        report
    }

    /// The Lie action of `a` on `A ⊗ A`, reading the table as a bracket:
    /// `[a * (w_1 ⊗ w_2)] = [a * w_1] ⊗ w_2 + w_1 ⊗ [a * w_2]`.
    pub fn lie_act(&self, a: &ModuleElement, w: &TensorElement) -> PseudoTensor {
        let mut out = LinComb::zero();
        for (key, cw) in w {
            assert_eq!(key.len(), 2, "the Lie action is defined on A ⊗ A");
            for ((h, c), cc) in self.star(a, &Self::mono_element(&key[0])).terms() {
                out.add_term((h.clone(), vec![c[0].clone(), key[1].clone()]), cw * cc);
            }
            for ((h, c), cc) in self.star(a, &Self::mono_element(&key[1])).terms() {
                out.add_term((h.clone(), vec![key[0].clone(), c[0].clone()]), cw * cc);
            }
        }
        PseudoTensor::from_canonical(2, out)
    }

    /// Scalar multiple of the table.
    pub fn scaled(&self, c: &Scalar) -> PseudoAlgebra {
        let table = self
            .table
            .iter()
            .map(|(k, v)| (*k, v.scale(c)))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        PseudoAlgebra { module: self.module.clone(), table }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::int;

    fn d(k: u32) -> Basis {
        Basis::Mono(vec![k])
    }

    fn unit_product(m: &FreeModule, target: Gen) -> PseudoTensor {
        PseudoTensor::from_canonical(2, LinComb::basis((vec![m.hopf().one()], vec![Mono::new(target, m.hopf().one())])))
    }

    /// e2 * e1 = (1⊗1)⊗_H e1, e2 * e2 = (1⊗1)⊗_H e2, others zero.
    fn coboundary_algebra(hopf: HopfSpec) -> PseudoAlgebra {
        let m = FreeModule::new(hopf, vec!["e1".into(), "e2".into()]).unwrap();
        let mut alg = PseudoAlgebra::new(m.clone());
        alg.set_product(1, 0, unit_product(&m, 0)).unwrap();
        alg.set_product(1, 1, unit_product(&m, 1)).unwrap();
        alg
    }

    fn kd() -> HopfSpec {
        HopfSpec::polynomial(1).unwrap()
    }

    fn e(gen: Gen, k: u32) -> Mono {
        Mono::new(gen, d(k))
    }

    #[test]
    fn pstar_examples() {
        let alg = coboundary_algebra(kd());
        let m = alg.module().clone();
        assert_eq!(alg.pstar(&m.gen("e2"), &m.gen("e1")).unwrap(), unit_product(&m, 0));
        assert!(alg.pstar(&m.gen("e1"), &m.gen("e2")).unwrap().is_zero());
        let de2 = m.element(&[(1, HElement::basis(d(1)))]);
        let got = alg.pstar(&de2, &m.gen("e1")).unwrap();
        assert_eq!(got, PseudoTensor::from_canonical(2, LinComb::basis((vec![d(1)], vec![e(0, 0)]))));
    }

    #[test]
    fn h_bilinearity_in_second_argument() {
        let alg = coboundary_algebra(kd());
        let m = alg.module().clone();
        let de1 = m.element(&[(0, HElement::basis(d(1)))]);
        let got = alg.pstar(&m.gen("e2"), &de1).unwrap();
        let expected = pseudotensor::slot_mul(
            &m,
            &[m.hopf().unit(), HElement::basis(d(1))],
            &alg.pstar(&m.gen("e2"), &m.gen("e1")).unwrap(),
        )
        .unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn triple_products() {
        let alg = coboundary_algebra(kd());
        let m = alg.module().clone();
        let (e1, e2) = (m.gen("e1"), m.gen("e2"));
        let one = PseudoTensor::from_canonical(3, LinComb::basis((vec![d(0), d(0)], vec![e(0, 0)])));
        assert_eq!(alg.comp_left(&e2, &e2, &e1), one);
        assert_eq!(alg.comp_right(&e2, &e2, &e1), one);
        assert!(alg.check_associativity().passed());
        assert!(alg.check_structure_associativity().passed());
    }

    #[test]
    fn mutated_table_fails_on_witness() {
        let mut alg = coboundary_algebra(kd());
        let m = alg.module().clone();
        alg.set_product(1, 0, unit_product(&m, 1)).unwrap();
        alg.set_product(1, 1, unit_product(&m, 0)).unwrap();
        let report = alg.check_associativity();
        assert!(!report.passed());
        assert!(report.failures().any(|c| c.inputs == ["e2", "e2", "e1"]));
        assert!(!alg.check_structure_associativity().passed());
    }

    #[test]
    fn commutativity_examples() {
        let alg = coboundary_algebra(kd());
        assert!(!alg.check_commutativity().passed());
        assert!(PseudoAlgebra::new(alg.module().clone()).check_commutativity().passed());
    }

    #[test]
    fn actions_on_tensors() {
        let alg = coboundary_algebra(kd());
        let m = alg.module().clone();
        let (e1, e2) = (m.gen("e1"), m.gen("e2"));
        let w = m.pair(&e1, &e2);
        let left = alg.act_left(&e2, &w);
        assert_eq!(left, PseudoTensor::from_canonical(2, LinComb::basis((vec![d(0)], vec![e(0, 0), e(1, 0)]))));
        let right = alg.act_right(&w, &e1);
        assert_eq!(right, PseudoTensor::from_canonical(2, LinComb::basis((vec![d(0)], vec![e(0, 0), e(0, 0)]))));
        let w3 = m.tensor(&m.pair(&e1, &e1), &m.to_tensor(&e2));
        assert_eq!(alg.bullet_left(&e2, &w3), Decorated::basis((d(0), vec![e(0, 0), e(0, 0), e(1, 0)])));
        let w3 = m.tensor(&m.pair(&e1, &e1), &m.to_tensor(&e1));
        assert!(alg.bullet_right(&w3, &e2).is_zero());
        assert!(alg.bullet_left(&e2, &TensorElement::zero()).is_zero());
    }

    #[test]
    fn x_products_over_group_algebra() {
        let alg = coboundary_algebra(HopfSpec::cyclic(2));
        let m = alg.module().clone();
        let (e1, e2) = (m.gen("e1"), m.gen("e2"));
        assert_eq!(alg.x_product(&e2, &e1, &Basis::Elem(0)).unwrap(), e1);
        assert!(alg.x_product(&e2, &e1, &Basis::Elem(1)).unwrap().is_zero());
        assert!(alg.x_product(&e1, &e1, &Basis::Elem(0)).unwrap().is_zero());
        let poly = coboundary_algebra(kd());
        assert_eq!(poly.x_product(&e2, &e1, &d(0)), Err(Error::InfiniteDimensional));
    }

    #[test]
    fn lie_ification_of_example() {
        let alg = coboundary_algebra(kd());
        let lie = alg.lie_ify();
        let m = alg.module().clone();
        assert_eq!(lie.product(0, 1), -unit_product(&m, 0));
        assert!(lie.product(1, 1).is_zero());
        assert!(lie.product(0, 0).is_zero());
        assert!(lie.check_skew().passed());
        assert!(lie.check_jacobi().passed());
    }

    #[test]
    fn skew_failure_is_detected() {
        let m = FreeModule::new(kd(), vec!["e1".into(), "e2".into()]).unwrap();
        let mut bad = PseudoAlgebra::new(m.clone());
        bad.set_product(0, 1, unit_product(&m, 0)).unwrap();
        bad.set_product(1, 0, unit_product(&m, 0)).unwrap();
        assert!(!bad.check_skew().passed());
    }

    #[test]
    fn star_bracket_examples() {
        let alg = coboundary_algebra(kd());
        let m = alg.module().clone();
        let (e1, e2) = (m.gen("e1"), m.gen("e2"));
        let got = alg.star_bracket(&e2, &m.pair(&e1, &e1));
        assert_eq!(got, PseudoTensor::from_canonical(2, LinComb::basis((vec![d(0)], vec![e(0, 0), e(0, 0)]))));
        let got = alg.star_bracket(&e1, &m.pair(&e1, &e2));
        let expected = PseudoTensor::from_canonical(2, LinComb::term((vec![d(0)], vec![e(0, 0), e(0, 0)]), int(-1)));
        assert_eq!(got, expected);
        assert!(alg.star_bracket(&e1, &TensorElement::zero()).is_zero());
    }
}
