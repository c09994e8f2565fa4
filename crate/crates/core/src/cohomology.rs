//! Low-degree cochains of the reduced complex with coefficients in a tensor
//! power `M = A^{⊗p}` (an A-bimodule through the left action on the first
//! factor and the right action on the last).

use crate::algebra::PseudoAlgebra;
use crate::bialgebra::HLinearMap;
use crate::check::CheckReport;
use crate::error::{Error, Result};
use crate::module::{Gen, ModuleElement, Mono, TensorElement};
use crate::pseudotensor::{apply_to_target, PseudoTensor};

/// Canonical representative of the class of `t` in `M / H_+ M`: every
/// factor but the last is a bare generator. Uses
/// `α x ⊗ W ≡ x ⊗ S(α) · W`, which holds modulo `H_+ M` because
/// `α x ⊗ W = α_1 · (x ⊗ S(α_2) · W)`.
pub fn cochain0_canonical(alg: &PseudoAlgebra, t: &TensorElement) -> TensorElement {
    let m = alg.module();
    let hopf = m.hopf();
    let one = hopf.one();
    let mut current = t.clone();
    let rank = match t.keys().next() {
        Some(k) => k.len(),
        None => return TensorElement::zero(),
    };
    for pos in 0..rank {
        let mut next = TensorElement::zero();
        for (key, c) in &current {
            if pos + 1 == rank {
                // the last factor only sees S(α) from the left; for a lone
                // factor the class is ε(α) e.
                if rank == 1 {
                    let scale = hopf.basis_counit(&key[0].basis);
                    next.add_term(vec![Mono::new(key[0].gen, one.clone())], c * scale);
                } else {
                    next.add_term(key.clone(), c.clone());
                }
                continue;
            }
            let (s, sign) = hopf.basis_antipode(&key[pos].basis);
            let mut head = key[..pos].to_vec();
            head.push(Mono::new(key[pos].gen, one.clone()));
            for (tail, ct) in m.basis_act_diag(&s, &key[pos + 1..]) {
                let mut k = head.clone();
                k.extend(tail);
                next.add_term(k, c * &sign * ct);
            }
        }
        current = next;
    }
    current
}

fn check_rank(t: &TensorElement, rank: usize) -> Result<()> {
    if rank == 0 || t.keys().any(|k| k.len() != rank) {
        return Err(Error::ModuleMismatch(format!("cochain values must lie in the tensor power of rank {rank}")));
    }
    Ok(())
}

/// `(d(1 ⊗_H m))(a) = Σ (1⊗ε)(h_i) m_i - Σ (ε⊗1)(f_j) n_j` where
/// `a * m = Σ h_i ⊗_H m_i` and `m * a = Σ f_j ⊗_H n_j`.
pub fn d0_apply(alg: &PseudoAlgebra, m: &TensorElement, a: &ModuleElement) -> TensorElement {
    let module = alg.module();
    let hopf = module.hopf();
    let mut out = TensorElement::zero();
    // normal form (h ⊗ 1): (1⊗ε) leaves h, (ε⊗1) leaves ε(h)
    for ((h, t), c) in alg.act_left(a, m).terms() {
        out.add_scaled(&module.basis_act_diag(&h[0], t), c);
    }
    for ((f, t), c) in alg.act_right(m, a).terms() {
        out.add_term(t.clone(), -(c * hopf.basis_counit(&f[0])));
    }
    out
}

/// `d: C^0 → C^1` evaluated on generators, for `m ∈ A^{⊗rank}`.
pub fn d0(alg: &PseudoAlgebra, m: &TensorElement, rank: usize) -> Result<HLinearMap> {
    alg.module().check_tensor(m)?;
    check_rank(m, rank)?;
    let module = alg.module();
    let mut out = HLinearMap::zero(module.clone(), rank);
    for g in module.gens() {
        out.set(g, d0_apply(alg, m, &module.generator(g)))?;
    }
    Ok(out)
}

/// `dγ(a, b) = a * γ(b) - γ(a * b) + γ(a) * b` for `γ ∈ C^1`.
pub fn d1_apply(alg: &PseudoAlgebra, gamma: &HLinearMap, a: &ModuleElement, b: &ModuleElement) -> PseudoTensor {
    let left = alg.act_left(a, &gamma.apply_unchecked(b));
    let middle = apply_to_target(&alg.star(a, b), |t| gamma.apply_mono(&t[0]));
    let right = alg.act_right(&gamma.apply_unchecked(a), b);
    left - middle + right
}

/// `dγ` on all generator pairs.
pub fn d1(alg: &PseudoAlgebra, gamma: &HLinearMap) -> Result<Vec<((Gen, Gen), PseudoTensor)>> {
    if gamma.module() != alg.module() {
        return Err(Error::ModuleMismatch("cochain is not defined on the algebra's module".into()));
    }
    let m = alg.module();
    let mut out = Vec::new();
    for i in m.gens() {
        for j in m.gens() {
            out.push(((i, j), d1_apply(alg, gamma, &m.generator(i), &m.generator(j))));
        }
    }
    Ok(out)
}

pub fn is_cocycle1(alg: &PseudoAlgebra, gamma: &HLinearMap) -> Result<CheckReport> {
    let m = alg.module();
    let mut report = CheckReport::new("1-cocycle");
    for ((i, j), value) in d1(alg, gamma)? {
        report.push_pseudo(vec![m.label(i).to_string(), m.label(j).to_string()], value);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::InfBialgebra;
    use crate::hopf::{Basis, HElement, HopfSpec};
    use crate::lincomb::{int, LinComb};
    use crate::module::FreeModule;
    use crate::sample;
    use crate::ybe::{delta_r, two_tensor};
    use rand::rngs::StdRng;
    use rand::SeedableRng;

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
    fn d0_of_r_is_delta_r() {
        let alg = coboundary_algebra();
        let m = alg.module().clone();
        let r = two_tensor(&m, &[(1, 0, 1), (0, 1, -1)]);
        let d = d0(&alg, &r, 2).unwrap();
        assert_eq!(d.value(0), two_tensor(&m, &[(0, 0, 1)]));
        assert_eq!(d.value(1), two_tensor(&m, &[(1, 0, 1)]));
        assert!(d0(&alg, &TensorElement::zero(), 2).unwrap().is_zero());
    }

    #[test]
    fn d0_with_coefficients_in_a() {
        let alg = coboundary_algebra();
        let m = alg.module().clone();
        let e2 = m.to_tensor(&m.gen("e2"));
        let d = d0(&alg, &e2, 1).unwrap();
        assert!(d.value(1).is_zero());
        assert_eq!(d.value(0), m.to_tensor(&m.gen("e1")).scale(&int(-1)));
    }

    #[test]
    fn d0_depends_only_on_the_class() {
        let alg = coboundary_algebra();
        let m = alg.module().clone();
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..10 {
            let t = sample::random_tensor(&mut rng, &m, 2, 1);
            let h = sample::random_h(&mut rng, m.hopf(), 2);
            let ht = m.diagonal_act(&h, &t).unwrap();
            let eps = m.hopf().counit(&h);
            assert_eq!(d0(&alg, &ht, 2).unwrap(), d0(&alg, &t.scale(&eps), 2).unwrap());
            assert_eq!(cochain0_canonical(&alg, &ht), cochain0_canonical(&alg, &t).scale(&eps));
            assert_eq!(d0(&alg, &cochain0_canonical(&alg, &t), 2).unwrap(), d0(&alg, &t, 2).unwrap());
        }
    }

    #[test]
    fn canonical_representative_moves_coefficients_right() {
        let alg = coboundary_algebra();
        let m = alg.module().clone();
        let d = Basis::Mono(vec![1]);
        let t = TensorElement::basis(vec![Mono::new(0, d.clone()), Mono::new(1, m.hopf().one())]);
        let expected = TensorElement::term(vec![Mono::new(0, m.hopf().one()), Mono::new(1, d)], int(-1));
        assert_eq!(cochain0_canonical(&alg, &t), expected);
        let single = m.to_tensor(&m.element(&[(0, HElement::basis(Basis::Mono(vec![2])))]));
        assert!(cochain0_canonical(&alg, &single).is_zero());
    }

    #[test]
    fn d_squared_vanishes() {
        let alg = coboundary_algebra();
        let m = alg.module().clone();
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..10 {
            let t = sample::random_tensor(&mut rng, &m, 2, 1);
            let gamma = d0(&alg, &t, 2).unwrap();
            assert!(is_cocycle1(&alg, &gamma).unwrap().passed());
        }
    }

    #[test]
    fn cocycle_matches_compatibility() {
        let alg = coboundary_algebra();
        let m = alg.module().clone();
        let r = two_tensor(&m, &[(1, 0, 1), (0, 1, -1)]);
        assert!(is_cocycle1(&alg, &delta_r(&alg, &r)).unwrap().passed());
        let mut bad = HLinearMap::zero(m.clone(), 2);
        bad.set(0, two_tensor(&m, &[(1, 1, 1)])).unwrap();
        let report = is_cocycle1(&alg, &bad).unwrap();
        assert!(!report.passed());
        let b = InfBialgebra::new(alg.clone(), bad.clone()).unwrap();
        for ((i, j), value) in d1(&alg, &bad).unwrap() {
            assert_eq!(value, -b.compat_defect(&m.generator(i), &m.generator(j)));
        }
        assert!(is_cocycle1(&alg, &HLinearMap::zero(m, 2)).unwrap().passed());
    }
}
