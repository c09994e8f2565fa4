//! Elements of `H^{⊗n} ⊗_H M` in normal form.
//!
//! The tensor product over H identifies `(x · Δ^{(n-1)}(h)) ⊗ m` with
//! `x ⊗ h·m`. Because `H^{⊗n}` is free as a right H-module on
//! `H^{⊗(n-1)} ⊗ 1`, every class has a unique representative whose last
//! slot is `1`; that is the stored form of a [`PseudoTensor`]. The target
//! `M` is always a tensor power of a free module, acted on diagonally.

use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use crate::error::{Error, Result};
use crate::hopf::{Basis, HElement, HTensor, HopfSpec};
use crate::lincomb::{LinComb, Scalar};
use crate::module::{FreeModule, Gen, Mono, TensorElement};

/// Unnormalized `Σ (h_1 ⊗ .. ⊗ h_n) ⊗ m` with all `n` slots explicit.
pub type RawTensor = LinComb<(Vec<Basis>, Vec<Mono>)>;

/// Element of `H ⊗ M^{⊗p}` (no tensor over H): Fourier brackets,
/// `•`-actions and the `(1⊗l)` view of pseudotensors all live here.
pub type Decorated = LinComb<(Basis, Vec<Mono>)>;

/// Canonical element of `H^{⊗n} ⊗_H M^{⊗p}`. Keys hold the first `n-1`
/// slots; the last slot is implicitly `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoTensor {
    arity: usize,
    terms: LinComb<(Vec<Basis>, Vec<Mono>)>,
}

impl PseudoTensor {
    pub fn zero(arity: usize) -> Self {
        assert!(arity >= 1, "pseudotensors have at least one H slot");
        Self { arity, terms: LinComb::zero() }
    }

    /// Wraps terms already in normal form.
    pub(crate) fn from_canonical(arity: usize, terms: LinComb<(Vec<Basis>, Vec<Mono>)>) -> Self {
        debug_assert!(terms.keys().all(|(s, _)| s.len() + 1 == arity));
        Self { arity, terms }
    }

    /// `(h ⊗ 1) ⊗_H m` read off an element of `H ⊗ M`.
    pub fn from_decorated(x: &Decorated) -> Self {
        Self { arity: 2, terms: x.map_keys(|(h, m)| (vec![h.clone()], m.clone())) }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &LinComb<(Vec<Basis>, Vec<Mono>)> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self { arity: self.arity, terms: self.terms.scale(c) }
    }

    /// The stored representative with its unit last slot made explicit.
    pub fn representative(&self, hopf: &HopfSpec) -> RawTensor {
        let one = hopf.one();
        self.terms.map_keys(|(slots, m)| {
            let mut s = slots.clone();
            s.push(one.clone());
            (s, m.clone())
        })
    }

    fn check_arity(&self, other: &Self) {
        assert_eq!(self.arity, other.arity, "adding pseudotensors of different arity");
    }
}

impl AddAssign<&PseudoTensor> for PseudoTensor {
    fn add_assign(&mut self, rhs: &PseudoTensor) {
        self.check_arity(rhs);
        self.terms += &rhs.terms;
    }
}

impl SubAssign<&PseudoTensor> for PseudoTensor {
    fn sub_assign(&mut self, rhs: &PseudoTensor) {
        self.check_arity(rhs);
        self.terms -= &rhs.terms;
    }
}

impl Add for PseudoTensor {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl Sub for PseudoTensor {
    type Output = Self;

    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl Neg for PseudoTensor {
    type Output = Self;

    fn neg(self) -> Self {
        Self { arity: self.arity, terms: -self.terms }
    }
}

/// Brings a raw `n`-slot tensor to last-slot-`1` form using
/// `(f_1 ⊗ .. ⊗ f_n) ⊗ m = Σ (f_1 S(f_n^{(1)}) ⊗ .. ⊗ f_{n-1} S(f_n^{(n-1)}) ⊗ 1) ⊗ f_n^{(n)} m`.
pub fn normalize_last(module: &FreeModule, arity: usize, raw: &RawTensor) -> PseudoTensor {
    let hopf = module.hopf();
    let mut out = LinComb::zero();
    for ((slots, target), c) in raw {
        assert_eq!(slots.len(), arity, "raw tensor arity mismatch");
        let (head, last) = slots.split_at(arity - 1);
        for (legs, k) in hopf.basis_coproduct(&last[0], arity) {
            let mut coeff = c * k;
            let new_slots: Vec<Basis> = head
                .iter()
                .zip(&legs)
                .map(|(f, leg)| {
                    let (s, sign) = hopf.basis_antipode(leg);
                    coeff *= sign;
                    hopf.basis_mul(f, &s)
                })
                .collect();
            for (m, cm) in module.basis_act_diag(&legs[arity - 1], target) {
                out.add_term((new_slots.clone(), m), &coeff * cm);
            }
        }
    }
    PseudoTensor::from_canonical(arity, out)
}

/// Checked variant of [`normalize_last`].
pub fn try_normalize_last(module: &FreeModule, arity: usize, raw: &RawTensor) -> Result<PseudoTensor> {
    for (slots, target) in raw.keys() {
        if slots.len() != arity {
            return Err(Error::HopfMismatch(format!("expected {arity} H slots, found {}", slots.len())));
        }
        slots.iter().try_for_each(|b| module.hopf().check_basis(b))?;
        target.iter().try_for_each(|m| module.check_mono(m))?;
    }
    Ok(normalize_last(module, arity, raw))
}

/// The `(1 ⊗ l)` normal form of a two-slot raw tensor:
/// `(f ⊗ g) ⊗ m = Σ (1 ⊗ g S(f_1)) ⊗ f_2 m`. Returned as `Σ l ⊗ m`.
pub fn normalize_first(module: &FreeModule, raw: &RawTensor) -> Decorated {
    let hopf = module.hopf();
    let mut out = Decorated::zero();
    for ((slots, target), c) in raw {
        assert_eq!(slots.len(), 2, "normalize_first works on two slots");
        for (legs, k) in hopf.basis_coproduct(&slots[0], 2) {
            let (s, sign) = hopf.basis_antipode(&legs[0]);
            let l = hopf.basis_mul(&slots[1], &s);
            let coeff = c * k * sign;
            for (m, cm) in module.basis_act_diag(&legs[1], target) {
                out.add_term((l.clone(), m), &coeff * cm);
            }
        }
    }
    out
}

/// `(1 ⊗ l)`-form view of a canonical two-slot pseudotensor.
pub fn right_form(module: &FreeModule, x: &PseudoTensor) -> Decorated {
    assert_eq!(x.arity(), 2);
    normalize_first(module, &x.representative(module.hopf()))
}

/// Inverse of [`right_form`]: reads `Σ l ⊗ m` as `Σ (1 ⊗ l) ⊗_H m`.
pub fn from_right_form(module: &FreeModule, y: &Decorated) -> PseudoTensor {
    let one = module.hopf().one();
    let raw: RawTensor = y.map_keys(|(l, m)| (vec![one.clone(), l.clone()], m.clone()));
    normalize_last(module, 2, &raw)
}

/// Multiplies slot `i` by `hs[i]` on a representative and renormalizes.
pub fn slot_mul(module: &FreeModule, hs: &[HElement], x: &PseudoTensor) -> Result<PseudoTensor> {
    if hs.len() != x.arity() {
        return Err(Error::HopfMismatch(format!("{} slot factors for arity {}", hs.len(), x.arity())));
    }
    hs.iter().try_for_each(|h| module.hopf().check_element(h))?;
    Ok(slot_mul_unchecked(module, hs, x))
}

pub(crate) fn slot_mul_unchecked(module: &FreeModule, hs: &[HElement], x: &PseudoTensor) -> PseudoTensor {
    let hopf = module.hopf();
    let factor: HTensor = hs.iter().fold(HTensor::basis(Vec::new()), |acc, h| {
        let mut out = HTensor::zero();
        for (k, c) in &acc {
            for (b, cb) in h {
                let mut key = k.clone();
                key.push(b.clone());
                out.add_term(key, c * cb);
            }
        }
        out
    });
    let mut raw = RawTensor::zero();
    for ((slots, target), c) in &x.representative(hopf) {
        for (f, cf) in &factor {
            let key = f.iter().zip(slots).map(|(a, b)| hopf.basis_mul(a, b)).collect();
            raw.add_term((key, target.clone()), c * cf);
        }
    }
    normalize_last(module, x.arity(), &raw)
}

/// Permutes the H slots: slot `i` of the result is slot `perm[i]` of `x`.
pub fn permute_slots(module: &FreeModule, x: &PseudoTensor, perm: &[usize]) -> PseudoTensor {
    assert_eq!(perm.len(), x.arity());
    let raw = x
        .representative(module.hopf())
        .map_keys(|(s, m)| (perm.iter().map(|&i| s[i].clone()).collect(), m.clone()));
    normalize_last(module, x.arity(), &raw)
}

/// `σ ⊗_H id` on `(H ⊗ H) ⊗_H M`.
pub fn sigma_swap(module: &FreeModule, x: &PseudoTensor) -> PseudoTensor {
    permute_slots(module, x, &[1, 0])
}

/// Applies an H-linear map to the target, factor tuple by factor tuple.
/// H-linearity of `f` keeps the result in normal form.
pub fn apply_to_target(x: &PseudoTensor, mut f: impl FnMut(&[Mono]) -> TensorElement) -> PseudoTensor {
    let mut out = LinComb::zero();
    for ((slots, target), c) in x.terms() {
        for (m, cm) in f(target) {
            out.add_term((slots.clone(), m), c * cm);
        }
    }
    PseudoTensor::from_canonical(x.arity(), out)
}

/// Fourier transform `F(f ⊗ g) = f S(g_1) ⊗ g_2` on `H ⊗ H`.
pub fn fourier(hopf: &HopfSpec, x: &HTensor) -> HTensor {
    let mut out = HTensor::zero();
    for (key, c) in x {
        for (legs, k) in hopf.basis_coproduct(&key[1], 2) {
            let (s, sign) = hopf.basis_antipode(&legs[0]);
            out.add_term(vec![hopf.basis_mul(&key[0], &s), legs[1].clone()], c * k * sign);
        }
    }
    out
}

/// Inverse Fourier transform `F^{-1}(f ⊗ g) = f g_1 ⊗ g_2`.
pub fn fourier_inv(hopf: &HopfSpec, x: &HTensor) -> HTensor {
    let mut out = HTensor::zero();
    for (key, c) in x {
        for (legs, k) in hopf.basis_coproduct(&key[1], 2) {
            out.add_term(vec![hopf.basis_mul(&key[0], &legs[0]), legs[1].clone()], c * k);
        }
    }
    out
}

/// `{a, b} = Σ h_i ⊗ c_i` when `a*b = Σ (h_i ⊗ 1) ⊗_H c_i`.
pub fn bracket_of(x: &PseudoTensor) -> Decorated {
    assert_eq!(x.arity(), 2, "brackets are read off two-slot pseudotensors");
    x.terms().map_keys(|(s, m)| (s[0].clone(), m.clone()))
}

/// Converts a canonical pseudotensor over a rank-one target into the
/// unique form with plain generators as targets.
pub fn to_plain(module: &FreeModule, x: &PseudoTensor) -> LinComb<(Vec<Basis>, Gen)> {
    let hopf = module.hopf();
    let one = hopf.one();
    let mut out = LinComb::zero();
    for ((slots, target), c) in x.terms() {
        assert_eq!(target.len(), 1, "plain form needs a rank-one target");
        for (legs, k) in hopf.basis_coproduct(&target[0].basis, x.arity()) {
            let key = slots
                .iter()
                .chain(std::iter::once(&one))
                .zip(&legs)
                .map(|(s, l)| hopf.basis_mul(s, l))
                .collect();
            out.add_term((key, target[0].gen), c * k);
        }
    }
    out
}

/// Descriptor of a `μ` operator: the H factor sitting at `h_pos` (1-based,
/// counting every tensor place) is removed and acts on the module factors
/// at `targets`, through `S` first when `antipode` is set. With several
/// targets the action is split by the iterated coproduct in increasing
/// target order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuOp {
    pub h_pos: usize,
    pub antipode: bool,
    pub targets: Vec<usize>,
}

impl MuOp {
    pub fn plain(h_pos: usize, targets: &[usize]) -> Self {
        Self { h_pos, antipode: false, targets: targets.to_vec() }
    }

    pub fn antipodal(h_pos: usize, targets: &[usize]) -> Self {
        Self { h_pos, antipode: true, targets: targets.to_vec() }
    }

    fn validate(&self, places: usize) -> Result<()> {
        if self.targets.is_empty() {
            return Err(Error::MalformedMu("no target position".into()));
        }
        for &p in std::iter::once(&self.h_pos).chain(&self.targets) {
            if p == 0 || p > places {
                return Err(Error::PositionOutOfRange { position: p, len: places });
            }
        }
        if self.targets.contains(&self.h_pos) {
            return Err(Error::MalformedMu("the H factor cannot act on itself".into()));
        }
        let mut sorted = self.targets.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != self.targets.len() {
            return Err(Error::MalformedMu("repeated target position".into()));
        }
        Ok(())
    }
}

/// Applies `op` to `x ∈ H ⊗ M^{⊗p}` where the H factor is understood to sit
/// at place `op.h_pos` among the `p + 1` places.
pub fn mu_operator(module: &FreeModule, op: &MuOp, x: &Decorated) -> Result<TensorElement> {
    let places = match x.keys().next() {
        Some((_, m)) => m.len() + 1,
        None => {
            op.validate(op.targets.iter().copied().chain([op.h_pos]).max().unwrap_or(1))?;
            return Ok(TensorElement::zero());
        }
    };
    op.validate(places)?;
    let hopf = module.hopf();
    let mut targets: Vec<usize> = op
        .targets
        .iter()
        .map(|&t| if t > op.h_pos { t - 2 } else { t - 1 })
        .collect();
    targets.sort_unstable();
    let mut out = TensorElement::zero();
    for ((h, monos), c) in x {
        if monos.len() + 1 != places {
            return Err(Error::MalformedMu("mixed tensor ranks in argument".into()));
        }
        let (h, sign) = if op.antipode { hopf.basis_antipode(h) } else { (h.clone(), Scalar::from_integer(1.into())) };
        for (legs, k) in hopf.basis_coproduct(&h, targets.len()) {
            let mut key = monos.clone();
            for (leg, &t) in legs.iter().zip(&targets) {
                key[t] = Mono::new(key[t].gen, hopf.basis_mul(leg, &key[t].basis));
            }
            out.add_term(key, c * &sign * k);
        }
    }
    Ok(out)
}

/// `μ_3(h ⊗ a ⊗ b ⊗ c) = ((Δ ⊗ id)Δ(h)) (a ⊗ b ⊗ c)`; more generally the
/// diagonal action of the H factor on all module factors.
pub fn mu3(module: &FreeModule, x: &Decorated) -> TensorElement {
    let mut out = TensorElement::zero();
    for ((h, monos), c) in x {
        out.add_scaled(&module.basis_act_diag(h, monos), c);
    }
    out
}
