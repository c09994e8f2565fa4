//! Outcomes of the generator-level checkers.

use crate::hopf::Basis;
use crate::lincomb::LinComb;
use crate::literal;
use crate::module::{FreeModule, Gen, Mono, TensorElement};
use crate::pseudotensor::{Decorated, PseudoTensor, RawTensor};

/// A nonzero value witnessing the failure of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Defect {
    Pseudo(PseudoTensor),
    Tensor(TensorElement),
    Decorated(Decorated),
    /// Structure-constant form `Σ (h_1 ⊗ .. ⊗ h_n) a_s` with plain targets.
    Plain(LinComb<(Vec<Basis>, Gen)>),
    Text(String),
}

impl Defect {
    /// The defect in the literal grammar; `module` is where its targets live.
    pub fn render(&self, module: &FreeModule) -> String {
        match self {
            Defect::Pseudo(x) => literal::render_pseudo(module, x),
            Defect::Tensor(t) => literal::render_tensor(module, t),
            Defect::Decorated(x) => {
                let raw: RawTensor = x.map_keys(|(h, t)| (vec![h.clone()], t.clone()));
                literal::render_plain(module, &raw)
            }
            Defect::Plain(x) => {
                let one = module.hopf().one();
                let raw: RawTensor = x.map_keys(|(hs, g)| (hs.clone(), vec![Mono::new(*g, one.clone())]));
                literal::render_plain(module, &raw)
            }
            Defect::Text(s) => s.clone(),
        }
    }
}

/// One evaluated instance of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case {
    pub inputs: Vec<String>,
    pub defect: Option<Defect>,
}

impl Case {
    pub fn passed(&self) -> bool {
        self.defect.is_none()
    }
}

/// All instances of one identity, usually indexed by generator tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub cases: Vec<Case>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        Self { name: name.into(), cases: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.cases.iter().all(Case::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.passed())
    }

    pub fn push(&mut self, inputs: Vec<String>, defect: Option<Defect>) {
        self.cases.push(Case { inputs, defect });
    }

    pub fn push_pseudo(&mut self, inputs: Vec<String>, x: PseudoTensor) {
        let defect = (!x.is_zero()).then_some(Defect::Pseudo(x));
        self.push(inputs, defect);
    }

    pub fn push_tensor(&mut self, inputs: Vec<String>, x: TensorElement) {
        let defect = (!x.is_zero()).then_some(Defect::Tensor(x));
        self.push(inputs, defect);
    }
}
