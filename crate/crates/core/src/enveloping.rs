//! U(g) in PBW normal form.
//!
//! A [`PbwMonomial`] with exponents `n` denotes the ordered product
//! H1^n0 H2^n1 E^n2 F^n3 E1^n4 E2^n5 F1^n6 F2^n7. Products are brought back
//! to this order by moving one generator at a time past the generators that
//! are larger than it, inserting the bracket at each swap.

use std::collections::HashMap;
use std::fmt;
use std::sync::{LazyLock, RwLock};

use crate::lie::{self, bracket_basis, Basis, GVector};
use crate::linear::{int, q, Combination, Monomial};
use crate::sym::{write_powers, SymMonomial};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PbwMonomial(pub [u8; 8]);

impl PbwMonomial {
    pub fn var(b: Basis) -> Self {
        let mut e = [0; 8];
        e[b.index()] = 1;
        Self(e)
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&n| n as usize).sum()
    }

    pub fn exponent(&self, b: Basis) -> u8 {
        self.0[b.index()]
    }

    /// Factors in PBW order, with repetition.
    pub fn factors(&self) -> Vec<Basis> {
        SymMonomial(self.0).factors()
    }

    /// Whether every factor lies in k.
    pub fn in_uk(&self) -> bool {
        self.0[4..].iter().all(|&n| n == 0)
    }

    fn last(&self) -> Option<Basis> {
        (0..8).rev().find(|&i| self.0[i] > 0).map(Basis::from_index)
    }
}

impl fmt::Debug for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_powers(f, &self.0, "*")
    }
}

pub type UElement = Combination<PbwMonomial>;

static MONO_GEN: LazyLock<RwLock<HashMap<(PbwMonomial, Basis), UElement>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// Normal form of `m · z`.
pub fn mul_monomial_generator(m: &PbwMonomial, z: Basis) -> UElement {
    let Some(w) = m.last() else {
        return UElement::from_key(PbwMonomial::var(z));
    };
    if w <= z {
        let mut out = *m;
        out.0[z.index()] += 1;
        return UElement::from_key(out);
    }
    if let Some(hit) = MONO_GEN.read().unwrap().get(&(*m, z)) {
        return hit.clone();
    }
    // m = m'·w with w > z:  m'·w·z = (m'·z)·w + m'·[w, z]
    let mut rest = *m;
    rest.0[w.index()] -= 1;
    let mut out = UElement::zero();
    for (t, c) in &mul_monomial_generator(&rest, z) {
        out.add_scaled(&mul_monomial_generator(t, w), c);
    }
    for (y, c) in bracket_basis(w, z) {
        out.add_scaled(&mul_monomial_generator(&rest, *y), c);
    }
    MONO_GEN.write().unwrap().insert((*m, z), out.clone());
    out
}

/// Right multiplication of an element by a single generator.
pub fn mul_generator(x: &UElement, z: Basis) -> UElement {
    x.map_linear(|m| mul_monomial_generator(m, z))
}

impl Monomial for PbwMonomial {
    fn mul_monomial(&self, rhs: &Self) -> Combination<Self> {
        rhs.factors().into_iter().fold(UElement::from_key(*self), |acc, z| mul_generator(&acc, z))
    }

    fn one() -> Self {
        PbwMonomial::default()
    }
}

pub fn pbw_multiply(x: &UElement, y: &UElement) -> UElement {
    x.product(y)
}

pub fn u_commutator(x: &UElement, y: &UElement) -> UElement {
    x.commutator(y)
}

/// Embeds `x ∈ g` as a degree-one element of U(g).
pub fn u_vector(x: &GVector) -> UElement {
    x.map_keys(|b| PbwMonomial::var(*b))
}

pub fn u_var(b: Basis) -> UElement {
    UElement::from_key(PbwMonomial::var(b))
}

/// The product of the given generators in the given order.
pub fn u_word(word: &[Basis]) -> UElement {
    word.iter().fold(UElement::one(), |acc, z| mul_generator(&acc, *z))
}

pub fn filtration_degree(x: &UElement) -> Option<usize> {
    x.keys().map(PbwMonomial::degree).max()
}

static SYMMETRIZED: LazyLock<RwLock<HashMap<SymMonomial, UElement>>> = LazyLock::new(|| RwLock::new(HashMap::new()));

/// The symmetrization σ(x1⋯xn) = (1/n!) Σ x_{π(1)}⋯x_{π(n)}.
///
/// Grouping the permutations by their first factor gives
/// σ(m) = (1/n) Σ_j m_j · x_j · σ(m / x_j), which is evaluated with memoization.
pub fn symmetrize(m: &SymMonomial) -> UElement {
    let n = m.degree();
    if n <= 1 {
        return UElement::from_key(PbwMonomial(m.0));
    }
    if let Some(hit) = SYMMETRIZED.read().unwrap().get(m) {
        return hit.clone();
    }
    let mut out = UElement::zero();
    for b in Basis::ALL {
        let mult = m.exponent(b);
        if mult == 0 {
            continue;
        }
        let mut rest = *m;
        rest.0[b.index()] -= 1;
        let tail = symmetrize(&rest);
        out.add_scaled(&u_var(b).product(&tail), &int(mult as i64));
    }
    let out = out.scale(&q(1, n as i64));
    SYMMETRIZED.write().unwrap().insert(*m, out.clone());
    out
}

/// First tensor factors of the U(g)-side invariants ã, b̃, c̃, d̃.
pub fn u_a() -> UElement {
    u_vector(&lie::a())
}

pub fn u_b() -> UElement {
    use Basis::*;
    let hh = u_vector(&lie::h());
    &hh.product(&hh) + &(&u_word(&[E, F]) + &u_word(&[F, E])).scale(&int(2))
}

pub fn u_c() -> UElement {
    use Basis::*;
    &u_word(&[E1, F1]) + &u_word(&[E2, F2])
}

pub fn u_d() -> UElement {
    use Basis::*;
    let hh = u_vector(&lie::h());
    let two = int(2);
    u_word(&[E, E2, F1]).scale(&two) + hh.product(&u_word(&[E1, F1])) - hh.product(&u_word(&[E2, F2]))
        + u_word(&[F, E1, F2]).scale(&two)
}

/// Ω = ½(H1 − H2)² + 3/2(H1 + H2)² + EF + FE + E1F1 + E2F2 + F1E1 + F2E2.
pub fn casimir_omega() -> UElement {
    use Basis::*;
    let hh = u_vector(&lie::h());
    let aa = u_a();
    let mut out = hh.product(&hh).scale(&q(1, 2)) + aa.product(&aa).scale(&q(3, 2));
    for w in [[E, F], [F, E], [E1, F1], [E2, F2], [F1, E1], [F2, E2]] {
        out += &u_word(&w);
    }
    out
}

/// Σ x_i x^i over B-dual bases of g.
pub fn casimir_from_dual_basis(basis: &[GVector]) -> Option<UElement> {
    let dual = lie::dual_basis(basis)?;
    let mut out = UElement::zero();
    for (x, y) in basis.iter().zip(&dual) {
        out += &u_vector(x).product(&u_vector(y));
    }
    Some(out)
}

/// cub = −3/2 ã³ + 3/2 ã b̃ − 3 ã c̃ + 9/2 ã² − 3 ã + 3 d̃ − 3/2 b̃, read in U(g).
pub fn cubic_element() -> UElement {
    let (a, b, c, d) = (u_a(), u_b(), u_c(), u_d());
    let a2 = a.product(&a);
    let mut out = a2.product(&a).scale(&q(-3, 2));
    out += &a.product(&b).scale(&q(3, 2));
    out += &a.product(&c).scale(&int(-3));
    out += &a2.scale(&q(9, 2));
    out += &a.scale(&int(-3));
    out += &d.scale(&int(3));
    out += &b.scale(&q(-3, 2));
    out
}

/// Whether `x` commutes with all eight generators.
pub fn is_central(x: &UElement) -> bool {
    central_defects(x).is_empty()
}

/// The nonzero commutators `[x, z]` over the eight generators `z`.
pub fn central_defects(x: &UElement) -> Vec<(Basis, UElement)> {
    Basis::ALL.iter().map(|b| (*b, u_commutator(x, &u_var(*b)))).filter(|(_, c)| !c.is_zero()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use Basis::*;

    #[test]
    fn reorders_out_of_order_pairs() {
        // F·E = E·F − [E, F] = E·F − H1 + H2
        let fe = u_word(&[F, E]);
        assert_eq!(fe, &(&u_word(&[E, F]) - &u_var(H1)) + &u_var(H2));
        assert_eq!(u_word(&[H1, H2]), UElement::from_key(PbwMonomial([1, 1, 0, 0, 0, 0, 0, 0])));
        let f1e1 = u_word(&[F1, E1]);
        assert_eq!(f1e1, &(&u_word(&[E1, F1]) - &u_var(H1).scale(&int(2))) - &u_var(H2));
    }

    #[test]
    fn commutator_examples() {
        assert_eq!(u_commutator(&u_var(E), &u_var(F)), u_vector(&lie::h()));
        assert!(u_commutator(&u_var(H1), &u_var(H2)).is_zero());
        assert!(u_commutator(&casimir_omega(), &u_var(E1)).is_zero());
    }

    #[test]
    fn symmetrize_examples() {
        let h1_cubed = SymMonomial::from_powers(&[(H1, 3)]);
        assert_eq!(symmetrize(&h1_cubed), UElement::from_key(PbwMonomial(h1_cubed.0)));
        let ef = SymMonomial::from_powers(&[(E, 1), (F, 1)]);
        let expected = &(&u_word(&[E, F]) - &u_var(H1).scale(&q(1, 2))) + &u_var(H2).scale(&q(1, 2));
        assert_eq!(symmetrize(&ef), expected);
    }

    #[test]
    fn casimir_matches_dual_basis_construction() {
        let basis: Vec<GVector> = Basis::ALL.iter().map(|b| b.vector()).collect();
        assert_eq!(casimir_from_dual_basis(&basis).unwrap(), casimir_omega());
        assert!(is_central(&casimir_omega()));
    }

    #[test]
    fn cubic_is_central() {
        let cub = cubic_element();
        assert_eq!(filtration_degree(&cub), Some(3));
        assert!(central_defects(&cub).is_empty(), "{:?}", central_defects(&cub));
    }
}
