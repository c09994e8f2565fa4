//! Random elements for property checks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::hopf::{Basis, HElement, HopfSpec};
use crate::lincomb::int;
use crate::module::{FreeModule, ModuleElement, Mono, TensorElement};
use crate::pseudotensor::{PseudoTensor, RawTensor};

/// Basis elements of degree at most `degree` (all of them for finite H).
pub fn basis_pool(hopf: &HopfSpec, degree: u32) -> Vec<Basis> {
    hopf.finite_basis().unwrap_or_else(|| hopf.bounded_basis(degree))
}

/// A random element with integer coefficients in `-2..=2`.
pub fn random_h<R: Rng>(rng: &mut R, hopf: &HopfSpec, degree: u32) -> HElement {
    basis_pool(hopf, degree)
        .into_iter()
        .map(|b| (b, int(rng.gen_range(-2..=2))))
        .collect()
}

pub fn random_basis<R: Rng>(rng: &mut R, hopf: &HopfSpec, degree: u32) -> Basis {
    basis_pool(hopf, degree).choose(rng).expect("nonempty basis pool").clone()
}

/// All `h e_g` with `h` from the bounded basis.
pub fn mono_pool(module: &FreeModule, degree: u32) -> Vec<Mono> {
    let pool = basis_pool(module.hopf(), degree);
    module
        .gens()
        .flat_map(|g| pool.iter().map(move |b| Mono::new(g, b.clone())))
        .collect()
}

pub fn random_element<R: Rng>(rng: &mut R, module: &FreeModule, degree: u32) -> ModuleElement {
    mono_pool(module, degree)
        .into_iter()
        .map(|m| (m, int(rng.gen_range(-2..=2))))
        .collect()
}

/// A random element of `M^{⊗rank}` with coefficients in `-1..=1` on every
/// product basis vector whose factors have degree at most `degree`.
pub fn random_tensor<R: Rng>(rng: &mut R, module: &FreeModule, rank: usize, degree: u32) -> TensorElement {
    let pool = mono_pool(module, degree);
    let mut keys: Vec<Vec<Mono>> = vec![Vec::new()];
    for _ in 0..rank {
        keys = keys
            .into_iter()
            .flat_map(|k| {
                pool.iter().map(move |m| {
                    let mut k = k.clone();
                    k.push(m.clone());
                    k
                })
            })
            .collect();
    }
    keys.into_iter().map(|k| (k, int(rng.gen_range(-1..=1)))).collect()
}

/// A random canonical pseudotensor of the given arity over `M^{⊗rank}`.
pub fn random_pseudo<R: Rng>(
    rng: &mut R,
    module: &FreeModule,
    arity: usize,
    rank: usize,
    degree: u32,
    terms: usize,
) -> PseudoTensor {
    let hopf = module.hopf();
    let pool = mono_pool(module, degree);
    let one = hopf.one();
    let mut raw = RawTensor::zero();
    for _ in 0..terms {
        let mut slots: Vec<Basis> = (1..arity).map(|_| random_basis(rng, hopf, degree)).collect();
        slots.push(one.clone());
        let target = (0..rank).map(|_| pool.choose(rng).expect("nonempty").clone()).collect();
        raw.add_term((slots, target), int(rng.gen_range(-2..=2)));
    }
    crate::pseudotensor::normalize_last(module, arity, &raw)
}

/// Like [`random_tensor`] but with at most `max_terms` nonzero coefficients,
/// each `±1`.
pub fn random_sparse_tensor<R: Rng>(
    rng: &mut R,
    module: &FreeModule,
    rank: usize,
    degree: u32,
    max_terms: usize,
) -> TensorElement {
    let pool = mono_pool(module, degree);
    let count = rng.gen_range(1..=max_terms.max(1));
    let mut out = TensorElement::zero();
    for _ in 0..count {
        let key = (0..rank).map(|_| pool.choose(rng).expect("nonempty").clone()).collect();
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        out.add_term(key, int(sign));
    }
    out
}

/// Two representatives of one class in `H^{⊗arity} ⊗_H M^{⊗rank}`:
/// `(x · Δ^{(arity)}(h)) ⊗ m` and `x ⊗ h·m` for random `x`, `h` and `m`.
pub fn random_rewrite<R: Rng>(
    rng: &mut R,
    module: &FreeModule,
    arity: usize,
    rank: usize,
    degree: u32,
) -> (RawTensor, RawTensor) {
    let hopf = module.hopf();
    let pool = mono_pool(module, degree);
    let x: Vec<Basis> = (0..arity).map(|_| random_basis(rng, hopf, degree)).collect();
    let m: Vec<Mono> = (0..rank).map(|_| pool.choose(rng).expect("nonempty").clone()).collect();
    let h = random_basis(rng, hopf, degree);
    let mut moved = RawTensor::zero();
    for (legs, k) in hopf.basis_coproduct(&h, arity) {
        let slots = x.iter().zip(&legs).map(|(a, b)| hopf.basis_mul(a, b)).collect();
        moved.add_term((slots, m.clone()), k);
    }
    let mut acted = RawTensor::zero();
    for (t, c) in module.basis_act_diag(&h, &m) {
        acted.add_term((x.clone(), t), c);
    }
    (moved, acted)
}
