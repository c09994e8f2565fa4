//! Finite free left H-modules and their tensor powers.
//!
//! A free module `⊕ H e_i` has k-basis `{h_b e_i}`; elements are stored as
//! combinations of such pairs ([`Mono`]). Tensor powers are stored fully
//! expanded in the product k-basis, with H acting diagonally through the
//! iterated coproduct.

use crate::error::{Error, Result};
use crate::hopf::{Basis, HElement, HopfSpec};
use crate::lincomb::LinComb;

/// Index of a generator inside its module.
pub type Gen = usize;

/// The k-basis vector `basis · e_gen`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono {
    pub gen: Gen,
    pub basis: Basis,
}

impl Mono {
    pub fn new(gen: Gen, basis: Basis) -> Self {
        Self { gen, basis }
    }
}

pub type ModuleElement = LinComb<Mono>;

/// Element of a tensor power `M^{⊗p}`; every key has length `p`.
pub type TensorElement = LinComb<Vec<Mono>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModule {
    hopf: HopfSpec,
    labels: Vec<String>,
}

impl FreeModule {
    pub fn new(hopf: HopfSpec, labels: Vec<String>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::ModuleMismatch("a free module needs at least one generator".into()));
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(Error::ModuleMismatch("empty generator label".into()));
            }
            if labels[..i].contains(l) {
                return Err(Error::ModuleMismatch(format!("duplicate generator label `{l}`")));
            }
        }
        Ok(Self { hopf, labels })
    }

    pub fn hopf(&self) -> &HopfSpec {
        &self.hopf
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn gens(&self) -> std::ops::Range<Gen> {
        0..self.labels.len()
    }

    pub fn label(&self, g: Gen) -> &str {
        &self.labels[g]
    }

    pub fn gen_index(&self, label: &str) -> Option<Gen> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn generator(&self, g: Gen) -> ModuleElement {
        ModuleElement::basis(Mono::new(g, self.hopf.one()))
    }

    /// Generator looked up by label; panics on unknown labels.
    pub fn gen(&self, label: &str) -> ModuleElement {
        let g = self.gen_index(label).unwrap_or_else(|| panic!("unknown generator {label}"));
        self.generator(g)
    }

    /// `Σ h_i e_i` from an explicit coefficient table.
    pub fn element(&self, coeffs: &[(Gen, HElement)]) -> ModuleElement {
        let mut out = ModuleElement::zero();
        for (g, h) in coeffs {
            for (b, c) in h {
                out.add_term(Mono::new(*g, b.clone()), c.clone());
            }
        }
        out
    }

    /// The H-coefficient of generator `g`.
    pub fn coefficient(&self, m: &ModuleElement, g: Gen) -> HElement {
        m.iter()
            .filter(|(mono, _)| mono.gen == g)
            .map(|(mono, c)| (mono.basis.clone(), c.clone()))
            .collect()
    }

    pub fn check_mono(&self, mono: &Mono) -> Result<()> {
        if mono.gen >= self.rank() {
            return Err(Error::ModuleMismatch(format!("generator index {} outside module of rank {}", mono.gen, self.rank())));
        }
        self.hopf.check_basis(&mono.basis)
    }

    pub fn check_element(&self, m: &ModuleElement) -> Result<()> {
        m.keys().try_for_each(|mono| self.check_mono(mono))
    }

    pub fn check_tensor(&self, t: &TensorElement) -> Result<()> {
        t.keys().flatten().try_for_each(|mono| self.check_mono(mono))
    }

    /// Left H-action on the free module.
    pub fn h_act(&self, h: &HElement, m: &ModuleElement) -> Result<ModuleElement> {
        self.hopf.check_element(h)?;
        self.check_element(m)?;
        Ok(self.act_unchecked(h, m))
    }

    pub(crate) fn act_unchecked(&self, h: &HElement, m: &ModuleElement) -> ModuleElement {
        let mut out = ModuleElement::zero();
        for (b, cb) in h {
            for (mono, cm) in m {
                out.add_term(Mono::new(mono.gen, self.hopf.basis_mul(b, &mono.basis)), cb * cm);
            }
        }
        out
    }

    /// Diagonal action of a basis element on one product basis vector.
    pub fn basis_act_diag(&self, b: &Basis, monos: &[Mono]) -> TensorElement {
        let mut out = TensorElement::zero();
        for (legs, c) in self.hopf.basis_coproduct(b, monos.len()) {
            let key = legs
                .iter()
                .zip(monos)
                .map(|(leg, m)| Mono::new(m.gen, self.hopf.basis_mul(leg, &m.basis)))
                .collect();
            out.add_term(key, c);
        }
        out
    }

    /// `h · (m_1 ⊗ .. ⊗ m_p) = h_1 m_1 ⊗ .. ⊗ h_p m_p`.
    pub fn diagonal_act(&self, h: &HElement, t: &TensorElement) -> Result<TensorElement> {
        self.hopf.check_element(h)?;
        self.check_tensor(t)?;
        Ok(self.diag_unchecked(h, t))
    }

    pub(crate) fn diag_unchecked(&self, h: &HElement, t: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (b, cb) in h {
            for (key, ct) in t {
                out.add_scaled(&self.basis_act_diag(b, key), &(cb * ct));
            }
        }
        out
    }

    pub fn to_tensor(&self, m: &ModuleElement) -> TensorElement {
        m.map_keys(|mono| vec![mono.clone()])
    }

    /// Inverse of [`to_tensor`](Self::to_tensor) on rank-one tensors.
    pub fn from_tensor(&self, t: &TensorElement) -> ModuleElement {
        t.map_keys(|key| {
            assert_eq!(key.len(), 1, "expected a rank-one tensor");
            key[0].clone()
        })
    }

    pub fn tensor(&self, x: &TensorElement, y: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (kx, cx) in x {
            for (ky, cy) in y {
                let mut key = kx.clone();
                key.extend(ky.iter().cloned());
                out.add_term(key, cx * cy);
            }
        }
        out
    }

    /// `m_1 ⊗ m_2` of two module elements.
    pub fn pair(&self, a: &ModuleElement, b: &ModuleElement) -> TensorElement {
        self.tensor(&self.to_tensor(a), &self.to_tensor(b))
    }

    /// The flip `τ(x ⊗ y) = y ⊗ x`.
    pub fn tau_swap(&self, t: &TensorElement) -> Result<TensorElement> {
        if let Some(key) = t.keys().find(|k| k.len() != 2) {
            return Err(Error::ModuleMismatch(format!("τ needs two tensor factors, found {}", key.len())));
        }
        Ok(self.permute(t, &[1, 0]))
    }

    /// Reorders factors: factor `i` of the result is factor `perm[i]` of `t`.
    pub fn permute(&self, t: &TensorElement, perm: &[usize]) -> TensorElement {
        t.map_keys(|key| perm.iter().map(|&i| key[i].clone()).collect())
    }
}
