//! U(g) ⊗ C(p): the tilde elements, the Dirac operator, σ⊗τ and the identities
//! relating them.
//!
//! The two tensor factors commute with each other; each is multiplied in its
//! own normal form.

use std::sync::LazyLock;

use crate::clifford::{self, alpha, c_var, c_word, chevalley, CElement, CliffMonomial, CliffordError};
use crate::enveloping::{self, symmetrize, u_var, u_vector, u_word, PbwMonomial, UElement};
use crate::lie::{self, Basis, GVector};
use crate::linear::{int, q, Combination, Monomial, Scalar};
use crate::report::{Check, VerificationReport};
use crate::sym::{self, named_invariants, SymTensorElement};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Debug)]
pub struct UCKey {
    pub u: PbwMonomial,
    pub c: CliffMonomial,
}

impl UCKey {
    pub fn new(u: PbwMonomial, c: CliffMonomial) -> Self {
        Self { u, c }
    }

    /// PBW degree plus Clifford degree.
    pub fn degree(&self) -> usize {
        self.u.degree() + self.c.degree()
    }
}

impl Monomial for UCKey {
    fn mul_monomial(&self, rhs: &Self) -> Combination<Self> {
        let cs = self.c.mul_monomial(&rhs.c);
        if cs.is_zero() {
            return Combination::zero();
        }
        let us = self.u.mul_monomial(&rhs.u);
        let mut out = Combination::zero();
        for (u, a) in &us {
            for (c, b) in &cs {
                out.add_term(UCKey::new(*u, *c), a * b);
            }
        }
        out
    }

    fn one() -> Self {
        UCKey::default()
    }
}

pub type UCElement = Combination<UCKey>;

pub fn uc_multiply(x: &UCElement, y: &UCElement) -> UCElement {
    x.product(y)
}

pub fn uc_commutator(x: &UCElement, y: &UCElement) -> UCElement {
    x.commutator(y)
}

pub fn tensor(u: &UElement, c: &CElement) -> UCElement {
    let mut out = UCElement::zero();
    for (m, a) in u {
        for (w, b) in c {
            out.add_term(UCKey::new(*m, *w), a * b);
        }
    }
    out
}

/// `x ⊗ 1`
pub fn left(x: &UElement) -> UCElement {
    x.map_keys(|m| UCKey::new(*m, CliffMonomial::default()))
}

/// `1 ⊗ x`
pub fn right(x: &CElement) -> UCElement {
    x.map_keys(|w| UCKey::new(PbwMonomial::default(), *w))
}

pub fn filtration_degree(x: &UCElement) -> Option<usize> {
    x.keys().map(UCKey::degree).max()
}

/// z ⊗ 1 + 1 ⊗ α(z), the diagonal copy of `z ∈ k`.
pub fn diagonal_embedding(z: &GVector) -> Result<UCElement, CliffordError> {
    Ok(left(&u_vector(z)) + right(&alpha(z)?))
}

/// The commutator of `x` with the diagonal copy of `z`.
pub fn diagonal_action(z: &GVector, x: &UCElement) -> Result<UCElement, CliffordError> {
    Ok(diagonal_embedding(z)?.commutator(x))
}

/// Annihilated by the diagonal action of the four basis vectors of k.
pub fn is_k_invariant(x: &UCElement) -> bool {
    Basis::K.iter().all(|b| diagonal_action(&b.vector(), x).map(|r| r.is_zero()).unwrap_or(false))
}

/// σ on the S(g) factor and τ on the Λ(p) factor.
pub fn sigma_tau(x: &SymTensorElement) -> UCElement {
    let mut out = UCElement::zero();
    for (k, c) in x {
        out.add_scaled(&tensor(&symmetrize(&k.sym), &chevalley(k.ext)), c);
    }
    out
}

/// Σ b_i ⊗ d_i for a basis `b` of p and its B-dual basis `d`.
pub fn dirac_from_basis(basis: &[GVector]) -> Option<UCElement> {
    if basis.len() != 4 || !basis.iter().all(lie::in_p) {
        return None;
    }
    let dual = lie::dual_basis(basis)?;
    let mut out = UCElement::zero();
    for (b, d) in basis.iter().zip(&dual) {
        out += &tensor(&u_vector(b), &clifford::c_vector(d));
    }
    Some(out)
}

/// D = E1 ⊗ F1 + E2 ⊗ F2 + F1 ⊗ E1 + F2 ⊗ E2
pub fn dirac_operator() -> UCElement {
    use Basis::*;
    [(E1, F1), (E2, F2), (F1, E1), (F2, E2)]
        .iter()
        .map(|(x, y)| tensor(&u_var(*x), &c_var(*y)))
        .fold(UCElement::zero(), |acc, t| acc + t)
}

/// The basis (E, F, H, a) of k and its dual (F, E, ½H, 3/2 a).
pub fn k_dual_pairs() -> [(GVector, GVector); 4] {
    use Basis::*;
    [
        (E.vector(), F.vector()),
        (F.vector(), E.vector()),
        (lie::h(), lie::h().scale(&q(1, 2))),
        (lie::a(), lie::a().scale(&q(3, 2))),
    ]
}

/// Σ z_i ⊗ α(ẑ_i) over the given dual pairs of k.
fn dk_from_pairs(pairs: &[(GVector, GVector)]) -> Result<UCElement, CliffordError> {
    let mut out = UCElement::zero();
    for (z, zh) in pairs {
        out += &tensor(&u_vector(z), &alpha(zh)?);
    }
    Ok(out)
}

/// D^k = E ⊗ α(F) + ½H ⊗ α(H) + 3/2 a ⊗ α(a) + F ⊗ α(E).
pub fn dk_element() -> Result<UCElement, CliffordError> {
    dk_from_pairs(&k_dual_pairs())
}

/// D^k built from an arbitrary basis of k and its computed B-dual.
pub fn dk_from_basis(basis: &[GVector]) -> Option<Result<UCElement, CliffordError>> {
    if basis.len() != 4 || !basis.iter().all(lie::in_k) {
        return None;
    }
    let dual = lie::dual_basis(basis)?;
    let pairs: Vec<_> = basis.iter().cloned().zip(dual).collect();
    Some(dk_from_pairs(&pairs))
}

/// Casimir of the diagonal k: Σ Δ(z_i) Δ(ẑ_i) over the dual pairs.
pub fn casimir_k_diagonal() -> Result<UCElement, CliffordError> {
    let mut out = UCElement::zero();
    for (z, zh) in k_dual_pairs() {
        out += &diagonal_embedding(&z)?.product(&diagonal_embedding(&zh)?);
    }
    Ok(out)
}

/// The ten generators ã … j̃ together with D, D^k and Cas_kΔ.
#[derive(Clone, Debug)]
pub struct TildeSet {
    pub a: UCElement,
    pub b: UCElement,
    pub c: UCElement,
    pub d: UCElement,
    pub e: UCElement,
    pub f: UCElement,
    pub g: UCElement,
    pub h: UCElement,
    pub i: UCElement,
    pub j: UCElement,
    pub dirac: UCElement,
    pub dk: UCElement,
    pub cas_k: UCElement,
}

impl TildeSet {
    pub fn by_name(&self, name: char) -> &UCElement {
        match name {
            'a' => &self.a,
            'b' => &self.b,
            'c' => &self.c,
            'd' => &self.d,
            'e' => &self.e,
            'f' => &self.f,
            'g' => &self.g,
            'h' => &self.h,
            'i' => &self.i,
            'j' => &self.j,
            'D' => &self.dirac,
            _ => panic!("no tilde element named {name}"),
        }
    }

    /// Product spelled as a word, e.g. `"fj"`; `"1"` is the unit.
    pub fn word(&self, w: &str) -> UCElement {
        w.chars().filter(|c| *c != '1').fold(UCElement::one(), |acc, c| acc.product(self.by_name(c)))
    }

    pub fn s_monomial(&self, n: [u32; 4]) -> UCElement {
        self.a.pow(n[0]).product(&self.b.pow(n[1])).product(&self.c.pow(n[2])).product(&self.d.pow(n[3]))
    }

    pub fn t_members(&self) -> Vec<(&'static str, UCElement)> {
        sym::T_NAMES.iter().map(|w| (*w, self.word(w))).collect()
    }
}

fn build_tildes() -> TildeSet {
    use Basis::*;
    let hh = u_vector(&lie::h());
    let two = int(2);
    let a = left(&enveloping::u_a());
    let b = left(&enveloping::u_b());
    let c = left(&enveloping::u_c());
    let d = left(&enveloping::u_d());
    let e = tensor(&u_var(F1), &c_var(E1)) + tensor(&u_var(F2), &c_var(E2));
    let f = tensor(&u_var(E1), &c_var(F1)) + tensor(&u_var(E2), &c_var(F2));
    let g = right(&(&c_word(&[E1, F1]) + &c_word(&[E2, F2])));
    let h = tensor(&(u_word(&[E, E2]).scale(&two) + hh.product(&u_var(E1))), &c_var(F1))
        + tensor(&(u_word(&[F, E1]).scale(&two) - hh.product(&u_var(E2))), &c_var(F2));
    let i = tensor(&u_var(E).scale(&two), &c_word(&[E2, F1])) + tensor(&hh, &c_word(&[E1, F1]))
        - tensor(&hh, &c_word(&[E2, F2]))
        + tensor(&u_var(F).scale(&two), &c_word(&[E1, F2]));
    let j = tensor(&(hh.product(&u_var(F1)) + u_word(&[F, F2]).scale(&two)), &c_var(E1))
        + tensor(&(u_word(&[E, F1]).scale(&two) - hh.product(&u_var(F2))), &c_var(E2));
    let dk = dk_element().expect("alpha is defined on k");
    let cas_k = casimir_k_diagonal().expect("alpha is defined on k");
    TildeSet { a, b, c, d, e, f, g, h, i, j, dirac: dirac_operator(), dk, cas_k }
}

static TILDES: LazyLock<TildeSet> = LazyLock::new(build_tildes);

pub fn tildes() -> &'static TildeSet {
    &TILDES
}

fn identity(id: &str, anchor: &str, lhs: &UCElement, rhs: &UCElement) -> Check {
    let residual = lhs - rhs;
    let zero = residual.is_zero();
    Check::identity(id, anchor, &residual, zero)
}

fn scalar(c: Scalar) -> UCElement {
    UCElement::scalar(c)
}

/// The ten images of a … j under σ⊗τ.
pub fn verify_sigma_tau_table() -> VerificationReport {
    let s = named_invariants();
    let t = tildes();
    let h = q(1, 2);
    let h3 = q(3, 2);
    let expected: [(&str, UCElement, &str); 10] = [
        ("a", t.a.clone(), "(σ⊗τ)(a) = ã"),
        ("b", t.b.clone(), "(σ⊗τ)(b) = b̃"),
        ("c", &t.c - &t.a.scale(&h3), "(σ⊗τ)(c) = c̃ − 3/2 ã"),
        ("d", &(&t.d - &t.b.scale(&h)) - &t.a.scale(&h3), "(σ⊗τ)(d) = d̃ − ½ b̃ − 3/2 ã"),
        ("e", t.e.clone(), "(σ⊗τ)(e) = ẽ"),
        ("f", t.f.clone(), "(σ⊗τ)(f) = f̃"),
        ("g", &t.g + &scalar(int(2)), "(σ⊗τ)(g) = g̃ + 2 ⊗ 1"),
        ("h", &t.h - &t.f.scale(&h3), "(σ⊗τ)(h) = h̃ − 3/2 f̃"),
        ("i", t.i.clone(), "(σ⊗τ)(i) = ĩ"),
        ("j", &t.j + &t.e.scale(&h3), "(σ⊗τ)(j) = j̃ + 3/2 ẽ"),
    ];
    let mut report = VerificationReport::new("sigma-tau");
    for (name, rhs, anchor) in expected {
        let x = s.by_name(name.chars().next().unwrap());
        report.push(identity(name, anchor, &sigma_tau(x), &rhs));
    }
    report
}

/// ẽ, f̃, c̃, h̃, j̃, d̃ expressed through D, ã, b̃, g̃, ĩ and each other.
pub fn verify_reduction_identities() -> VerificationReport {
    let t = tildes();
    let p = |x: &UCElement, y: &UCElement| x.product(y);
    let dg = p(&t.dirac, &t.g);
    let gd = p(&t.g, &t.dirac);
    let quarter = q(1, 4);
    let e_rhs = (&(&t.dirac + &dg.scale(&q(1, 2))) - &gd.scale(&q(1, 2))).scale(&q(1, 2));
    let f_rhs = (&(&t.dirac - &dg.scale(&q(1, 2))) + &gd.scale(&q(1, 2))).scale(&q(1, 2));
    let ef_fe = &p(&t.e, &t.f) + &p(&t.f, &t.e);
    let ag = p(&t.a, &t.g);
    let c_rhs = (&(&t.i + &ef_fe.scale(&int(2))) + &ag.scale(&int(3))).scale(&-quarter.clone());
    let h_rhs = (p(&t.f, &t.c) - p(&t.c, &t.f)).scale(&int(2)) - p(&t.a, &t.f).scale(&int(3)) + t.f.scale(&int(6));
    let j_rhs = (p(&t.c, &t.e) - p(&t.e, &t.c)).scale(&int(2)) - p(&t.a, &t.e).scale(&int(3));
    let d_rhs = (-p(&t.h, &t.e) - p(&t.e, &t.h) + p(&t.c, &t.g).scale(&int(2))
        - p(&t.e, &t.f)
        - ag.scale(&int(6))
        - p(&t.b, &t.g).scale(&q(1, 2))
        - t.i.clone()
        - p(&t.a, &t.i).scale(&q(3, 2)))
    .scale(&q(1, 2));
    let mut report = VerificationReport::new("reduction");
    report.push(identity("e", "ẽ = ½(D + ½ D g̃ − ½ g̃ D)", &t.e, &e_rhs));
    report.push(identity("f", "f̃ = ½(D − ½ D g̃ + ½ g̃ D)", &t.f, &f_rhs));
    report.push(identity("c", "c̃ = −¼(ĩ + 2(ẽf̃ + f̃ẽ) + 3ãg̃)", &t.c, &c_rhs));
    report.push(identity("h", "h̃ = 2(f̃c̃ − c̃f̃) − 3ãf̃ + 6f̃", &t.h, &h_rhs));
    report.push(identity("j", "j̃ = 2(c̃ẽ − ẽc̃) − 3ãẽ", &t.j, &j_rhs));
    report.push(identity("d", "d̃ = ½(−h̃ẽ − ẽh̃ + 2c̃g̃ − ẽf̃ − 6ãg̃ − ½b̃g̃ − ĩ − 3/2 ãĩ)", &t.d, &d_rhs));
    report
}

fn invariance_check(id: &str, anchor: &str, x: &UCElement) -> Check {
    let mut failures = Vec::new();
    for b in Basis::K {
        match diagonal_action(&b.vector(), x) {
            Ok(r) if r.is_zero() => {}
            Ok(r) => failures.push(format!("[{b}] {r}")),
            Err(e) => failures.push(format!("[{b}] {e}")),
        }
    }
    let mut c = Check::new(id, anchor, failures.is_empty());
    if !failures.is_empty() {
        c.residual = Some(failures.join("; "));
    }
    c
}

/// D² = −(Ω ⊗ 1 + ‖ρ_g‖²) + (Cas_kΔ + ‖ρ_k‖²), with both norms computed from the trace form.
pub fn verify_dirac_square() -> VerificationReport {
    let t = tildes();
    let rho_g = lie::rho_norm_squared(&lie::POSITIVE_ROOTS_G);
    let rho_k = lie::rho_norm_squared(&lie::POSITIVE_ROOTS_K);
    let mut report = VerificationReport::new("dirac-square");

    let from_dual = dirac_from_basis(&Basis::P.map(|b| b.vector()));
    report.push(Check::new(
        "dirac-displayed",
        "D = Σ b_i ⊗ d_i over B-dual bases of p equals E1⊗F1 + E2⊗F2 + F1⊗E1 + F2⊗E2",
        from_dual.as_ref() == Some(&t.dirac),
    ));
    let skew = [
        Basis::E1.vector() + Basis::F1.vector(),
        Basis::E2.vector() - Basis::F1.vector().scale(&int(3)),
        Basis::F1.vector().scale(&q(1, 2)),
        Basis::F2.vector() + Basis::E2.vector().scale(&int(2)),
    ];
    report.push(Check::new(
        "dirac-basis-independent",
        "D is independent of the choice of basis of p",
        dirac_from_basis(&skew).as_ref() == Some(&t.dirac),
    ));
    report.push(invariance_check("dirac-invariant", "D is K-invariant", &t.dirac));

    let d2 = t.dirac.product(&t.dirac);
    let omega = left(&enveloping::casimir_omega());
    let rhs = &(-&(&omega + &scalar(rho_g.clone()))) + &(&t.cas_k + &scalar(rho_k.clone()));
    report.push(
        identity("square", "D² = −(Cas_g ⊗ 1 + ‖ρ_g‖²) + (Cas_kΔ + ‖ρ_k‖²)", &d2, &rhs)
            .with_detail(format!("‖ρ_g‖² = {rho_g}, ‖ρ_k‖² = {rho_k}")),
    );
    report.push(invariance_check("square-invariant", "D² is K-invariant", &d2));
    report
}

/// D^k = −¼(ĩ + 3ãg̃) − 3/2 ã.
pub fn verify_dk_identity() -> VerificationReport {
    let t = tildes();
    let mut report = VerificationReport::new("dk");
    let rhs = &(&t.i + &t.a.product(&t.g).scale(&int(3))).scale(&q(-1, 4)) - &t.a.scale(&q(3, 2));
    report.push(identity("identity", "D^k = −¼(ĩ + 3ãg̃) − 3/2 ã", &t.dk, &rhs));
    report.push(invariance_check("invariant", "D^k is K-invariant", &t.dk));
    let rescaled = [Basis::E.vector().scale(&int(2)), Basis::F.vector().scale(&q(1, 3)), lie::h() + lie::a(), lie::a()];
    let other = dk_from_basis(&rescaled).and_then(Result::ok);
    report.push(Check::new(
        "basis-independent",
        "Σ z_i ⊗ α(ẑ_i) does not depend on the basis of k",
        other.as_ref() == Some(&t.dk),
    ));
    report
}

/// ã, b̃, g̃, ĩ pairwise commute.
pub fn verify_abelian_commutators() -> VerificationReport {
    let t = tildes();
    let gens = [("a", &t.a), ("b", &t.b), ("g", &t.g), ("i", &t.i)];
    let mut report = VerificationReport::new("abelian");
    for (n, (x, xe)) in gens.iter().enumerate() {
        for (y, ye) in &gens[n + 1..] {
            let r = xe.commutator(ye);
            let zero = r.is_zero();
            report.push(Check::identity(format!("{x}{y}"), format!("[{x}̃, {y}̃] = 0"), &r, zero));
        }
    }
    report
}

fn central_check(id: &str, anchor: &str, x: &UElement) -> Check {
    let defects = enveloping::central_defects(x);
    let mut c = Check::new(id, anchor, defects.is_empty());
    if !defects.is_empty() {
        c.residual = Some(defects.iter().map(|(b, r)| format!("[{b}] {r}")).collect::<Vec<_>>().join("; "));
    }
    c
}

/// The U(g)-factor of an element of U(g) ⊗ 1, or `None` if a Clifford factor occurs.
pub fn left_factor(x: &UCElement) -> Option<UElement> {
    x.iter()
        .map(|(k, c)| (k.c.degree() == 0).then(|| (k.u, c.clone())))
        .collect::<Option<Vec<_>>>()
        .map(|terms| terms.into_iter().collect())
}

/// Ω and cub through the tilde generators, and their centrality.
pub fn verify_casimir_expressions() -> VerificationReport {
    let t = tildes();
    let mut report = VerificationReport::new("casimir");
    let omega = enveloping::casimir_omega();
    let a2 = t.a.product(&t.a);
    let omega_rhs = a2.scale(&q(3, 2)) + t.b.scale(&q(1, 2)) + t.c.scale(&int(2)) - t.a.scale(&int(3));
    report.push(identity("omega", "Ω = 3/2 ã² + b̃/2 + 2c̃ − 3ã", &left(&omega), &omega_rhs));
    report.push(central_check("omega-central", "Ω commutes with g", &omega));

    let cub = a2.product(&t.a).scale(&q(-3, 2)) + t.a.product(&t.b).scale(&q(3, 2)) - t.a.product(&t.c).scale(&int(3))
        + a2.scale(&q(9, 2))
        - t.a.scale(&int(3))
        + t.d.scale(&int(3))
        - t.b.scale(&q(3, 2));
    let cub_u = left_factor(&cub);
    report.push(Check::new(
        "cub-in-ug",
        "cub = −3/2 ã³ + 3/2 ãb̃ − 3ãc̃ + 9/2 ã² − 3ã + 3d̃ − 3/2 b̃ lies in U(g) ⊗ 1",
        cub_u.is_some(),
    ));
    match cub_u {
        Some(u) => {
            report.push(
                central_check("cub-central", "cub commutes with g", &u)
                    .with_detail(format!("filtration degree {}", enveloping::filtration_degree(&u).unwrap_or(0))),
            );
        }
        None => report.push(Check::new("cub-central", "cub commutes with g", false)),
    }
    report
}

/// Every tilde element, D, D^k and Cas_kΔ is annihilated by the diagonal k-action.
pub fn verify_tilde_invariance() -> VerificationReport {
    let t = tildes();
    let mut report = VerificationReport::new("tilde-invariance");
    for name in sym::NAMES {
        let x = t.by_name(name.chars().next().unwrap());
        report.push(invariance_check(name, &format!("{name}̃ is K-invariant"), x));
    }
    report.push(invariance_check("D", "D is K-invariant", &t.dirac));
    report.push(invariance_check("Dk", "D^k is K-invariant", &t.dk));
    report.push(invariance_check("cas-k", "Cas_kΔ is K-invariant", &t.cas_k));
    report
}

/// The Clifford-scalar part of an element.
pub fn clifford_scalar_part(x: &UCElement) -> UElement {
    x.iter().filter(|(k, _)| k.c.degree() == 0).map(|(k, c)| (k.u, c.clone())).collect()
}
