//! H-linear maps out of a free module, coalgebras, and infinitesimal
//! H-pseudobialgebras.

use std::collections::BTreeMap;

use crate::algebra::PseudoAlgebra;
use crate::check::CheckReport;
use crate::error::{Error, Result};
use crate::hopf::{Basis, HopfSpec};
use crate::module::{FreeModule, Gen, ModuleElement, Mono, TensorElement};
use crate::pseudotensor::{apply_to_target, PseudoTensor};

/// An H-linear map `M → M^{⊗p}` given on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HLinearMap {
    module: FreeModule,
    rank: usize,
    values: BTreeMap<Gen, TensorElement>,
}

/// A comultiplication `A → A ⊗ A`.
pub type CoalgebraMap = HLinearMap;

impl HLinearMap {
    pub fn zero(module: FreeModule, rank: usize) -> Self {
        Self { module, rank, values: BTreeMap::new() }
    }

    pub fn module(&self) -> &FreeModule {
        &self.module
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn set(&mut self, g: Gen, value: TensorElement) -> Result<()> {
        if g >= self.module.rank() {
            return Err(Error::ModuleMismatch(format!("generator index {g} out of range")));
        }
        self.module.check_tensor(&value)?;
        if let Some(k) = value.keys().find(|k| k.len() != self.rank) {
            return Err(Error::ModuleMismatch(format!("expected {} tensor factors, found {}", self.rank, k.len())));
        }
        if value.is_zero() {
            self.values.remove(&g);
        } else {
            self.values.insert(g, value);
        }
        Ok(())
    }

    pub fn value(&self, g: Gen) -> TensorElement {
        self.values.get(&g).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Nonzero generator values in order.
    pub fn values(&self) -> impl Iterator<Item = (&Gen, &TensorElement)> {
        self.values.iter()
    }

    pub fn apply_mono(&self, m: &Mono) -> TensorElement {
        match self.values.get(&m.gen) {
            Some(v) if m.basis == self.module.hopf().one() => v.clone(),
            Some(v) => {
                let mut out = TensorElement::zero();
                for (key, c) in v {
                    out.add_scaled(&self.module.basis_act_diag(&m.basis, key), c);
                }
                out
            }
            None => TensorElement::zero(),
        }
    }

    /// `φ(Σ h_i e_i) = Σ h_i · φ(e_i)` with H acting diagonally.
    pub fn apply(&self, m: &ModuleElement) -> Result<TensorElement> {
        self.module.check_element(m)?;
        Ok(self.apply_unchecked(m))
    }

    pub(crate) fn apply_unchecked(&self, m: &ModuleElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (mono, c) in m {
            out.add_scaled(&self.apply_mono(mono), c);
        }
        out
    }

    /// Applies the map to tensor factor `pos`, splicing its output in place.
    pub fn apply_at(&self, t: &TensorElement, pos: usize) -> TensorElement {
        let mut out = TensorElement::zero();
        for (key, c) in t {
            for (inner, ci) in self.apply_mono(&key[pos]) {
                let mut k = key[..pos].to_vec();
                k.extend(inner);
                k.extend(key[pos + 1..].iter().cloned());
                out.add_term(k, c * ci);
            }
        }
        out
    }

    /// `(id - τ) ∘ φ` for a map into `M ⊗ M`.
    pub fn antisymmetrized(&self) -> Self {
        assert_eq!(self.rank, 2);
        let mut out = Self::zero(self.module.clone(), 2);
        for (g, v) in &self.values {
            let value = v - &self.module.permute(v, &[1, 0]);
            if !value.is_zero() {
                out.values.insert(*g, value);
            }
        }
        out
    }

    /// `φ - ψ` on generators.
    pub fn difference(&self, other: &Self) -> Self {
        assert_eq!(self.rank, other.rank);
        let mut out = self.clone();
        for g in self.module.gens() {
            let v = self.value(g) - other.value(g);
            if v.is_zero() {
                out.values.remove(&g);
            } else {
                out.values.insert(g, v);
            }
        }
        out
    }

    pub fn check_coassoc(&self) -> CheckReport {
        assert_eq!(self.rank, 2);
        let mut report = CheckReport::new("coassociativity");
        for g in self.module.gens() {
            report.push_tensor(vec![self.module.label(g).to_string()], self.coassoc_defect(g));
        }
        report
    }

    /// `(id ⊗ Δ)Δ(e_g) - (Δ ⊗ id)Δ(e_g)`.
    pub fn coassoc_defect(&self, g: Gen) -> TensorElement {
        let v = self.value(g);
        self.apply_at(&v, 1) - self.apply_at(&v, 0)
    }

    pub fn check_cocommutativity(&self) -> CheckReport {
        assert_eq!(self.rank, 2);
        let mut report = CheckReport::new("cocommutativity");
        for g in self.module.gens() {
            let v = self.value(g);
            let defect = &v - &self.module.permute(&v, &[1, 0]);
            report.push_tensor(vec![self.module.label(g).to_string()], defect);
        }
        report
    }
}

/// An associative pseudoalgebra together with a comultiplication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfBialgebra {
    pub algebra: PseudoAlgebra,
    pub delta: CoalgebraMap,
}

impl InfBialgebra {
    pub fn new(algebra: PseudoAlgebra, delta: CoalgebraMap) -> Result<Self> {
        if algebra.module() != delta.module() || delta.rank() != 2 {
            return Err(Error::ModuleMismatch("comultiplication is not defined on the algebra's module".into()));
        }
        Ok(Self { algebra, delta })
    }

    pub fn module(&self) -> &FreeModule {
        self.algebra.module()
    }

    /// `Δ(a * b) - a * Δ(b) - Δ(a) * b`.
    pub fn compat_defect(&self, a: &ModuleElement, b: &ModuleElement) -> PseudoTensor {
        let alg = &self.algebra;
        let lhs = apply_to_target(&alg.star(a, b), |t| self.delta.apply_mono(&t[0]));
        let left = alg.act_left(a, &self.delta.apply_unchecked(b));
        let right = alg.act_right(&self.delta.apply_unchecked(a), b);
        lhs - left - right
    }

    pub fn check_compat(&self) -> CheckReport {
        let m = self.module();
        let mut report = CheckReport::new("compatibility");
        for i in m.gens() {
            for j in m.gens() {
                let defect = self.compat_defect(&m.generator(i), &m.generator(j));
                report.push_pseudo(vec![m.label(i).to_string(), m.label(j).to_string()], defect);
            }
        }
        report
    }

    /// Associativity, coassociativity and compatibility.
    pub fn checks(&self) -> Vec<CheckReport> {
        vec![self.algebra.check_associativity(), self.delta.check_coassoc(), self.check_compat()]
    }

    pub fn is_valid(&self) -> bool {
        self.checks().iter().all(CheckReport::passed)
    }
}

/// Labels `a1 .. aN` for the dual basis.
pub fn dual_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("a{i}")).collect()
}

/// The coalgebra on the dual module `⊕ H a^k`:
/// `Δ(a^k) = Σ S(f_k^{ij}) a^i ⊗ S(g_k^{ij}) a^j`.
pub fn dual_coalgebra(alg: &PseudoAlgebra) -> CoalgebraMap {
    let hopf = alg.hopf();
    let dual = FreeModule::new(hopf.clone(), dual_labels(alg.module().rank())).expect("labels are distinct");
    let mut values: BTreeMap<Gen, TensorElement> = BTreeMap::new();
    for i in alg.module().gens() {
        for j in alg.module().gens() {
            for ((fg, k), c) in &alg.structure_constants(i, j) {
                let (sf, s1) = hopf.basis_antipode(&fg[0]);
                let (sg, s2) = hopf.basis_antipode(&fg[1]);
                values
                    .entry(*k)
                    .or_default()
                    .add_term(vec![Mono::new(i, sf), Mono::new(j, sg)], c * s1 * s2);
            }
        }
    }
    values.retain(|_, v| !v.is_zero());
    HLinearMap { module: dual, rank: 2, values }
}

/// The current construction over `target`: the ordinary infinitesimal
/// bialgebra `b` (over the trivial Hopf algebra) becomes
/// `e_i * e_j = (1 ⊗ 1) ⊗_H e_i e_j` with the same comultiplication.
pub fn cur_from_infbialgebra(b: &InfBialgebra, target: &HopfSpec) -> Result<InfBialgebra> {
    if b.module().hopf() != &HopfSpec::Trivial {
        return Err(Error::InvalidBialgebra("the input must be defined over the trivial Hopf algebra".into()));
    }
    if let Some(failed) = b.checks().iter().find(|r| !r.passed()) {
        return Err(Error::InvalidBialgebra(format!("{} fails", failed.name)));
    }
    let one = target.one();
    let lift = |m: &Mono| {
        debug_assert_eq!(m.basis, Basis::Unit);
        Mono::new(m.gen, one.clone())
    };
    let module = FreeModule::new(target.clone(), b.module().labels().to_vec())?;
    let mut algebra = PseudoAlgebra::new(module.clone());
    for ((i, j), value) in b.algebra.entries() {
        let terms = value
            .terms()
            .map_keys(|(_, t)| (vec![one.clone()], t.iter().map(lift).collect::<Vec<_>>()));
        algebra.set_product(*i, *j, PseudoTensor::from_canonical(2, terms))?;
    }
    let mut delta = HLinearMap::zero(module, 2);
    for (g, v) in b.delta.values() {
        delta.set(*g, v.map_keys(|k| k.iter().map(lift).collect()))?;
    }
    InfBialgebra::new(algebra, delta)
}

/// Builds a pseudotensor `Σ (h ⊗ 1) ⊗_H t` from plain pieces.
#[cfg(test)]
pub(crate) fn pseudo_from_pairs(pairs: impl IntoIterator<Item = ((Basis, Vec<Mono>), crate::lincomb::Scalar)>) -> PseudoTensor {
    let terms: crate::lincomb::LinComb<(Vec<Basis>, Vec<Mono>)> = pairs.into_iter().map(|((h, t), c)| ((vec![h], t), c)).collect();
    PseudoTensor::from_canonical(2, terms)
}
