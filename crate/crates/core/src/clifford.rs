//! The Clifford algebra C(p) of p with respect to the trace form.
//!
//! Generators satisfy `v·w + w·v = −2 B(v, w)`. Basis monomials are ordered
//! products of distinct generators, stored as masks in the order
//! E1 < E2 < F1 < F2. The basis E1, E2, F1, F2 is isotropic (B pairs E_i
//! with F_i), so products are normalized by rewriting rather than by a
//! sign-only rule.

use std::fmt;
use std::sync::LazyLock;

use num::{One, Zero};
use thiserror::Error;

use crate::lie::{self, bracket, Basis, GVector};
use crate::linear::{int, Combination, Monomial, Scalar};
use crate::sparse::SparseMatrix;
use crate::sym::{wedge_masks, ExtMonomial};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CliffMonomial(pub u8);

impl CliffMonomial {
    pub fn var(b: Basis) -> Self {
        Self(ExtMonomial::var(b).0)
    }

    pub fn degree(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn factors(&self) -> Vec<Basis> {
        ExtMonomial(self.0).factors()
    }

    pub fn all() -> impl Iterator<Item = CliffMonomial> {
        (0u8..16).map(CliffMonomial)
    }
}

impl fmt::Debug for CliffMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        let names: Vec<&str> = self.factors().iter().map(|b| b.symbol()).collect();
        f.write_str(&names.join("*"))
    }
}

pub type CElement = Combination<CliffMonomial>;

/// Exterior-algebra elements, used as input to the Chevalley map.
pub type ExtElement = Combination<ExtMonomial>;

impl Monomial for ExtMonomial {
    fn mul_monomial(&self, rhs: &Self) -> Combination<Self> {
        match wedge_masks(self.0, rhs.0) {
            None => Combination::zero(),
            Some((m, neg)) => Combination::term(ExtMonomial(m), if neg { -Scalar::one() } else { Scalar::one() }),
        }
    }

    fn one() -> Self {
        ExtMonomial(0)
    }
}

fn form_slots(i: usize, j: usize) -> Scalar {
    lie::trace_form(&Basis::from_p_slot(i).vector(), &Basis::from_p_slot(j).vector())
}

/// `mask · generator(slot)` brought to normal order.
fn mul_mask_generator(mask: u8, slot: usize) -> CElement {
    if mask == 0 {
        return CElement::from_key(CliffMonomial(1 << slot));
    }
    let top = 7 - mask.leading_zeros() as usize;
    let rest = mask & !(1 << top);
    if top < slot {
        return CElement::from_key(CliffMonomial(mask | (1 << slot)));
    }
    if top == slot {
        // v·v = −B(v, v)
        return CElement::term(CliffMonomial(rest), -form_slots(slot, slot));
    }
    // rest·w·v = −(rest·v)·w − 2B(w, v)·rest
    let mut out = CElement::zero();
    for (m, c) in &mul_mask_generator(rest, slot) {
        out.add_scaled(&mul_mask_generator(m.0, top), &-c.clone());
    }
    out.add_term(CliffMonomial(rest), int(-2) * form_slots(top, slot));
    out
}

static PRODUCTS: LazyLock<Vec<Vec<CElement>>> = LazyLock::new(|| {
    (0u8..16)
        .map(|a| {
            (0u8..16)
                .map(|b| {
                    let mut acc = CElement::from_key(CliffMonomial(a));
                    for v in CliffMonomial(b).factors() {
                        let slot = v.p_slot().unwrap();
                        acc = acc.map_linear(|m| mul_mask_generator(m.0, slot));
                    }
                    acc
                })
                .collect()
        })
        .collect()
});

impl Monomial for CliffMonomial {
    fn mul_monomial(&self, rhs: &Self) -> Combination<Self> {
        PRODUCTS[self.0 as usize][rhs.0 as usize].clone()
    }

    fn one() -> Self {
        CliffMonomial(0)
    }
}

pub fn cliff_multiply(x: &CElement, y: &CElement) -> CElement {
    x.product(y)
}

pub fn cliff_commutator(x: &CElement, y: &CElement) -> CElement {
    x.commutator(y)
}

pub fn c_var(b: Basis) -> CElement {
    CElement::from_key(CliffMonomial::var(b))
}

/// Embeds `x ∈ p` in C(p).
pub fn c_vector(x: &GVector) -> CElement {
    assert!(lie::in_p(x), "only p embeds in C(p)");
    x.map_keys(|b| CliffMonomial::var(*b))
}

/// The product of the given p-generators in the given order.
pub fn c_word(word: &[Basis]) -> CElement {
    word.iter().fold(CElement::one(), |acc, b| acc.product(&c_var(*b)))
}

pub fn filtration_degree(x: &CElement) -> Option<usize> {
    x.keys().map(CliffMonomial::degree).max()
}

static CHEVALLEY: LazyLock<Vec<CElement>> = LazyLock::new(|| {
    let mut table: Vec<CElement> = vec![CElement::zero(); 16];
    let mut masks: Vec<u8> = (0..16).collect();
    masks.sort_by_key(|m| m.count_ones());
    for m in masks {
        table[m as usize] = chevalley_recursive(m, &table);
    }
    table
});

/// τ(y1∧⋯∧yk) = (1/k) Σ_i (−1)^(i−1) y_i · τ(y1∧⋯ŷi⋯∧yk), using smaller masks from `done`.
fn chevalley_recursive(mask: u8, done: &[CElement]) -> CElement {
    let k = mask.count_ones() as i64;
    if k == 0 {
        return CElement::one();
    }
    let mut out = CElement::zero();
    for (i, v) in ExtMonomial(mask).factors().into_iter().enumerate() {
        let rest = mask & !ExtMonomial::var(v).0;
        let sign = if i % 2 == 0 { int(1) } else { int(-1) };
        out.add_scaled(&c_var(v).product(&done[rest as usize]), &sign);
    }
    out.scale(&Scalar::new(1.into(), k.into()))
}

/// The Chevalley map on a wedge monomial.
pub fn chevalley(m: ExtMonomial) -> CElement {
    CHEVALLEY[m.0 as usize].clone()
}

pub fn chevalley_element(x: &ExtElement) -> CElement {
    x.map_linear(|m| chevalley(*m))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliffordError {
    #[error("alpha is only defined on k")]
    NotInK,
    #[error("no element of τ(Λ²p) realizes ad({0}) on p")]
    NoSolution(String),
    #[error("the realization of ad({0}) on p is not unique")]
    NotUnique(String),
}

fn lambda2_images() -> Vec<CElement> {
    (0u8..16).filter(|m| m.count_ones() == 2).map(|m| chevalley(ExtMonomial(m))).collect()
}

/// Finds the element of τ(Λ²p) whose Clifford commutator with every v ∈ p
/// equals [z, v].
fn solve_alpha(z: &GVector) -> Result<CElement, CliffordError> {
    if !lie::in_k(z) {
        return Err(CliffordError::NotInK);
    }
    let unknowns = lambda2_images();
    // equation rows indexed by (v, mask)
    let row = |v: usize, m: CliffMonomial| v * 16 + m.0 as usize;
    let mut matrix = SparseMatrix::new(64, unknowns.len());
    let mut rhs = vec![Scalar::zero(); 64];
    for (vi, v) in Basis::P.iter().enumerate() {
        let cv = c_var(*v);
        for (k, x) in unknowns.iter().enumerate() {
            for (m, c) in &x.commutator(&cv) {
                matrix.add_entry(row(vi, *m), k, c.clone());
            }
        }
        for (m, c) in &c_vector(&bracket(z, &v.vector())) {
            rhs[row(vi, *m)] += c;
        }
    }
    let name = format!("{z:?}");
    let sol = matrix.solve(&rhs).ok_or_else(|| CliffordError::NoSolution(name.clone()))?;
    if sol.nullity != 0 {
        return Err(CliffordError::NotUnique(name));
    }
    let mut out = CElement::zero();
    for (c, x) in sol.x.iter().zip(&unknowns) {
        out.add_scaled(x, c);
    }
    Ok(out)
}

static ALPHA_BASIS: LazyLock<Result<Vec<CElement>, CliffordError>> =
    LazyLock::new(|| Basis::K.iter().map(|b| solve_alpha(&b.vector())).collect());

/// The map k → so(p) ≅ τ(Λ²p) ⊂ C(p).
pub fn alpha(z: &GVector) -> Result<CElement, CliffordError> {
    if !lie::in_k(z) {
        return Err(CliffordError::NotInK);
    }
    let images = ALPHA_BASIS.as_ref().map_err(Clone::clone)?;
    let mut out = CElement::zero();
    for (b, c) in z {
        out.add_scaled(&images[b.index()], c);
    }
    Ok(out)
}
