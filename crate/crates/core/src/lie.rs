//! Lie H-coalgebras, the cocycle condition, and the balanceator.

use crate::algebra::PseudoAlgebra;
use crate::bialgebra::{CoalgebraMap, InfBialgebra};
use crate::check::CheckReport;
use crate::module::{ModuleElement, TensorElement};
use crate::pseudotensor::{apply_to_target, bracket_of, sigma_swap, PseudoTensor};

/// `δ_lie = (id - τ)Δ`.
pub fn delta_lie(delta: &CoalgebraMap) -> CoalgebraMap {
    delta.antisymmetrized()
}

/// Anti-symmetry `τδ = -δ` and the co-Jacobi identity
/// `(id ⊗ δ)δ - σ_12 (id ⊗ δ)δ = (δ ⊗ id)δ` on generators.
pub fn check_lie_coalgebra(delta: &CoalgebraMap) -> Vec<CheckReport> {
    let m = delta.module();
    let mut skew = CheckReport::new("cobracket anti-symmetry");
    let mut jacobi = CheckReport::new("co-Jacobi identity");
    for g in m.gens() {
        let v = delta.value(g);
        skew.push_tensor(vec![m.label(g).to_string()], &v + &m.permute(&v, &[1, 0]));
        let right = delta.apply_at(&v, 1);
        let defect = &right - &m.permute(&right, &[1, 0, 2]) - delta.apply_at(&v, 0);
        jacobi.push_tensor(vec![m.label(g).to_string()], defect);
    }
    vec![skew, jacobi]
}

/// `δ([a * b]) - [a * δ(b)] + (σ ⊗_H id)[b * δ(a)]` for a bracket table.
pub fn lie_cocycle_defect(bracket: &PseudoAlgebra, delta: &CoalgebraMap, a: &ModuleElement, b: &ModuleElement) -> PseudoTensor {
    let m = bracket.module();
    let lhs = apply_to_target(&bracket.star(a, b), |t| delta.apply_mono(&t[0]));
    let ab = bracket.lie_act(a, &delta.apply_unchecked(b));
    let ba = bracket.lie_act(b, &delta.apply_unchecked(a));
    lhs - ab + sigma_swap(m, &ba)
}

pub fn check_lie_cocycle(bracket: &PseudoAlgebra, delta: &CoalgebraMap) -> CheckReport {
    let m = bracket.module();
    let mut report = CheckReport::new("cocycle condition");
    for i in m.gens() {
        for j in m.gens() {
            let defect = lie_cocycle_defect(bracket, delta, &m.generator(i), &m.generator(j));
            report.push_pseudo(vec![m.label(i).to_string(), m.label(j).to_string()], defect);
        }
    }
    report
}

/// `(σ ⊗ τ)`: swap the H slots and the two tensor factors.
fn sigma_tau(b: &InfBialgebra, x: &PseudoTensor) -> PseudoTensor {
    let m = b.module();
    let flipped = apply_to_target(x, |t| TensorElement::basis(vec![t[1].clone(), t[0].clone()]));
    sigma_swap(m, &flipped)
}

/// `B(a, b) = [a, Δ^op(b)]_⋆ + (σ ⊗ τ)[b, Δ^op(a)]_⋆`.
pub fn balanceator(b: &InfBialgebra, x: &ModuleElement, y: &ModuleElement) -> PseudoTensor {
    let m = b.module();
    let op = |z: &ModuleElement| m.permute(&b.delta.apply_unchecked(z), &[1, 0]);
    let first = b.algebra.star_bracket(x, &op(y));
    let second = b.algebra.star_bracket(y, &op(x));
    first + sigma_tau(b, &second)
}

/// `B(a, b) - (σ ⊗_H id)B(b, a)` on generator pairs.
pub fn check_balanceator_symmetric(b: &InfBialgebra) -> CheckReport {
    let m = b.module();
    let mut report = CheckReport::new("balanceator symmetry");
    for i in m.gens() {
        for j in m.gens() {
            let (x, y) = (m.generator(i), m.generator(j));
            let defect = balanceator(b, &x, &y) - sigma_swap(m, &balanceator(b, &y, &x));
            report.push_pseudo(vec![m.label(i).to_string(), m.label(j).to_string()], defect);
        }
    }
    report
}

/// `B ≡ 0` on generator pairs.
pub fn check_balanceator_zero(b: &InfBialgebra) -> CheckReport {
    let m = b.module();
    let mut report = CheckReport::new("balanceator vanishes");
    for i in m.gens() {
        for j in m.gens() {
            let value = balanceator(b, &m.generator(i), &m.generator(j));
            report.push_pseudo(vec![m.label(i).to_string(), m.label(j).to_string()], value);
        }
    }
    report
}

/// Left side minus right side of
/// `δ_lie([a*b]_lie) = [a*δ_lie(b)]_lie - (σ⊗id)[b*δ_lie(a)]_lie + B(a,b) - (σ⊗id)B(b,a)`.
pub fn thm56_residual(b: &InfBialgebra, x: &ModuleElement, y: &ModuleElement) -> PseudoTensor {
    let m = b.module();
    let lie = b.algebra.lie_ify();
    let delta = delta_lie(&b.delta);
    let lhs = apply_to_target(&lie.star(x, y), |t| delta.apply_mono(&t[0]));
    let act_xy = lie.lie_act(x, &delta.apply_unchecked(y));
    let act_yx = lie.lie_act(y, &delta.apply_unchecked(x));
    let bal = balanceator(b, x, y) - sigma_swap(m, &balanceator(b, y, x));
    lhs - (act_xy - sigma_swap(m, &act_yx) + bal)
}

pub fn check_thm56(b: &InfBialgebra) -> CheckReport {
    let m = b.module();
    let mut report = CheckReport::new("cocycle residual identity");
    for i in m.gens() {
        for j in m.gens() {
            let defect = thm56_residual(b, &m.generator(i), &m.generator(j));
            report.push_pseudo(vec![m.label(i).to_string(), m.label(j).to_string()], defect);
        }
    }
    report
}

/// `Σ_i μ([a, u_i] ⊗ v_i + σ_12(u_i ⊗ [a, v_i]))` where `[a, u]` is the
/// bracket `{a, u}` of the table entry `[a * u]`.
pub fn coboundary_lie_rhs(bracket: &PseudoAlgebra, r: &TensorElement, a: &ModuleElement) -> TensorElement {
    let m = bracket.module();
    let mut out = TensorElement::zero();
    for (key, c) in r {
        let (u, v) = (&key[0], &key[1]);
        for ((h, x), cx) in &bracket_of(&bracket.star(a, &ModuleElement::basis(u.clone()))) {
            out.add_scaled(&m.basis_act_diag(h, &[x[0].clone(), v.clone()]), &(c * cx));
        }
        for ((h, x), cx) in &bracket_of(&bracket.star(a, &ModuleElement::basis(v.clone()))) {
            out.add_scaled(&m.basis_act_diag(h, &[u.clone(), x[0].clone()]), &(c * cx));
        }
    }
    out
}

pub fn check_coboundary_lie(bracket: &PseudoAlgebra, delta: &CoalgebraMap, r: &TensorElement) -> CheckReport {
    let m = bracket.module();
    let mut report = CheckReport::new("coboundary cobracket");
    for g in m.gens() {
        let defect = delta.value(g) - coboundary_lie_rhs(bracket, r, &m.generator(g));
        report.push_tensor(vec![m.label(g).to_string()], defect);
    }
    report
}
