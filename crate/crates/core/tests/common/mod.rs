//! Random elements and property bodies shared by the property tests and the
//! acceptance harness.

#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use su21_invariants::clifford::{chevalley, CElement, CliffMonomial};
use su21_invariants::enveloping::{self, symmetrize, u_var, u_word, PbwMonomial, UElement};
use su21_invariants::lie::{self, Basis};
use su21_invariants::linear::{q, Scalar};
use su21_invariants::parse::{parse_element, Context, Element};
use su21_invariants::sym::{self, ExtMonomial, SymKey, SymMonomial, SymTensorElement};
use su21_invariants::ugcp::{self, UCElement, UCKey};

pub fn runner(cases: u32) -> TestRunner {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

pub fn basis() -> impl Strategy<Value = Basis> {
    prop::sample::select(Basis::ALL.to_vec())
}

pub fn k_basis() -> impl Strategy<Value = Basis> {
    prop::sample::select(Basis::K.to_vec())
}

pub fn scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

fn exponents(max_degree: usize) -> impl Strategy<Value = [u8; 8]> {
    prop::collection::vec(basis(), 0..=max_degree).prop_map(|word| {
        let mut e = [0u8; 8];
        for b in word {
            e[b.index()] += 1;
        }
        e
    })
}

pub fn sym_element(max_degree: usize) -> impl Strategy<Value = SymTensorElement> {
    prop::collection::vec((exponents(max_degree), 0u8..16, scalar()), 0..4)
        .prop_map(|terms| terms.into_iter().map(|(e, m, c)| (SymKey::new(SymMonomial(e), ExtMonomial(m)), c)).collect())
}

pub fn u_element(max_degree: usize) -> impl Strategy<Value = UElement> {
    prop::collection::vec((exponents(max_degree), scalar()), 0..4)
        .prop_map(|terms| terms.into_iter().map(|(e, c)| (PbwMonomial(e), c)).collect())
}

pub fn c_element() -> impl Strategy<Value = CElement> {
    prop::collection::vec((0u8..16, scalar()), 0..5)
        .prop_map(|terms| terms.into_iter().map(|(m, c)| (CliffMonomial(m), c)).collect())
}

pub fn uc_element(max_degree: usize) -> impl Strategy<Value = UCElement> {
    prop::collection::vec((exponents(max_degree), 0u8..16, scalar()), 0..3).prop_map(|terms| {
        terms.into_iter().map(|(e, m, c)| (UCKey::new(PbwMonomial(e), CliffMonomial(m)), c)).collect()
    })
}

fn sign_of_degree(x: &SymTensorElement, parity: usize) -> SymTensorElement {
    x.filter(|k| k.ext.degree() % 2 == parity)
}

pub fn sym_associative((x, y, z): (SymTensorElement, SymTensorElement, SymTensorElement)) -> Result<(), TestCaseError> {
    prop_assert_eq!(x.product(&y).product(&z), x.product(&y.product(&z)));
    Ok(())
}

/// xy = (−1)^(|x||y|) yx for exterior-homogeneous parts.
pub fn sym_graded_commutative((x, y): (SymTensorElement, SymTensorElement)) -> Result<(), TestCaseError> {
    for px in 0..2 {
        for py in 0..2 {
            let (a, b) = (sign_of_degree(&x, px), sign_of_degree(&y, py));
            let ba = b.product(&a);
            let expected = if px * py == 1 { -ba } else { ba };
            prop_assert_eq!(a.product(&b), expected);
        }
    }
    Ok(())
}

pub fn ad_is_derivation((z, x, y): (Basis, SymTensorElement, SymTensorElement)) -> Result<(), TestCaseError> {
    let lhs = sym::ad_basis(z, &x.product(&y));
    let rhs = &sym::ad_basis(z, &x).product(&y) + &x.product(&sym::ad_basis(z, &y));
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

pub fn ad_is_representation((z, w, x): (Basis, Basis, SymTensorElement)) -> Result<(), TestCaseError> {
    let lhs = sym::ad_action(lie::bracket_basis(z, w), &x);
    let rhs = sym::ad_basis(z, &sym::ad_basis(w, &x)) - sym::ad_basis(w, &sym::ad_basis(z, &x));
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

pub fn pbw_associative((x, y, z): (UElement, UElement, UElement)) -> Result<(), TestCaseError> {
    prop_assert_eq!(x.product(&y).product(&z), x.product(&y.product(&z)));
    Ok(())
}

pub fn pbw_filtration_additive((x, y): (UElement, UElement)) -> Result<(), TestCaseError> {
    let xy = x.product(&y);
    match (enveloping::filtration_degree(&x), enveloping::filtration_degree(&y)) {
        (Some(a), Some(b)) => prop_assert_eq!(enveloping::filtration_degree(&xy), Some(a + b)),
        _ => prop_assert!(xy.is_zero()),
    }
    Ok(())
}

fn sigma(x: &SymTensorElement) -> UElement {
    let mut out = UElement::zero();
    for (k, c) in x {
        out.add_scaled(&symmetrize(&k.sym), c);
    }
    out
}

/// σ(ad(z) m) = [z, σ(m)] on S(g).
pub fn sigma_equivariant((z, x): (Basis, SymTensorElement)) -> Result<(), TestCaseError> {
    let x = x.filter(|k| k.ext.degree() == 0);
    prop_assert_eq!(sigma(&sym::ad_basis(z, &x)), u_var(z).commutator(&sigma(&x)));
    Ok(())
}

/// σ(m) agrees with the product of m's factors in PBW order up to lower filtration.
pub fn sigma_leading_term(e: [u8; 8]) -> Result<(), TestCaseError> {
    let m = SymMonomial(e);
    let naive = u_word(&m.factors());
    let diff = &symmetrize(&m) - &naive;
    prop_assert!(enveloping::filtration_degree(&diff).is_none_or(|d| d < m.degree()));
    Ok(())
}

/// τ(ad(z) ω) = [α(z), τ(ω)] on Λ(p).
pub fn tau_equivariant((z, mask): (Basis, u8)) -> Result<(), TestCaseError> {
    let w = SymTensorElement::from_key(SymKey::new(SymMonomial::one(), ExtMonomial(mask)));
    let image = sym::ad_basis(z, &w);
    let lhs: CElement = image.iter().fold(CElement::zero(), |mut acc, (k, c)| {
        acc.add_scaled(&chevalley(k.ext), c);
        acc
    });
    let a = su21_invariants::clifford::alpha(&z.vector()).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(lhs, a.commutator(&chevalley(ExtMonomial(mask))));
    Ok(())
}

/// (σ⊗τ)(ad(z) x) = [Δ(z), (σ⊗τ)(x)].
pub fn sigma_tau_equivariant((z, x): (Basis, SymTensorElement)) -> Result<(), TestCaseError> {
    let lhs = ugcp::sigma_tau(&sym::ad_basis(z, &x));
    let rhs =
        ugcp::diagonal_action(&z.vector(), &ugcp::sigma_tau(&x)).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

pub fn uc_associative((x, y, z): (UCElement, UCElement, UCElement)) -> Result<(), TestCaseError> {
    prop_assert_eq!(x.product(&y).product(&z), x.product(&y.product(&z)));
    Ok(())
}

pub fn clifford_associative((x, y, z): (CElement, CElement, CElement)) -> Result<(), TestCaseError> {
    prop_assert_eq!(x.product(&y).product(&z), x.product(&y.product(&z)));
    Ok(())
}

fn round_trip(x: Element) -> Result<(), TestCaseError> {
    let text = x.to_string();
    let back = parse_element(&text, x.context()).map_err(|e| TestCaseError::fail(format!("{text}: {e}")))?;
    prop_assert_eq!(back, x, "text was {}", text);
    Ok(())
}

pub fn round_trip_symmetric(x: SymTensorElement) -> Result<(), TestCaseError> {
    round_trip(Element::Symmetric(x.filter(|k| k.ext.degree() == 0)))
}

pub fn round_trip_tensor(x: SymTensorElement) -> Result<(), TestCaseError> {
    round_trip(Element::Tensor(x))
}

pub fn round_trip_enveloping(x: UElement) -> Result<(), TestCaseError> {
    round_trip(Element::Enveloping(x))
}

pub fn round_trip_clifford(x: CElement) -> Result<(), TestCaseError> {
    round_trip(Element::Clifford(x))
}

pub fn round_trip_uc(x: UCElement) -> Result<(), TestCaseError> {
    round_trip(Element::Uc(x))
}

pub fn context_strategy() -> impl Strategy<Value = Context> {
    prop::sample::select(vec![Context::Symmetric, Context::Enveloping, Context::Clifford, Context::Tensor, Context::Uc])
}
