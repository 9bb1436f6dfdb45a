//! K-invariants degree by degree, the decomposition lemmas behind their
//! count, and rank checks of the S·T and S̃·T̃ bases.
//!
//! K is connected, so K-invariants are k-invariants. Within a degree the keys
//! split into blocks of fixed multigrade (see [`SymKey::multigrade`]) and
//! weight; ad(k) preserves the multigrade, and a weight-zero vector killed by
//! ad(E) spans a trivial sl(2)-module. So each block contributes the kernel of
//! ad(E) from its weight-(0,0) part to its weight-(1,−1) part. Killing by ad(F)
//! and the Cartan is checked afterwards, not assumed.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock, Mutex};

use rayon::prelude::*;

use crate::lie::{self, Basis};
use crate::report::{Check, ReportConfig, VerificationReport};
use crate::sparse::{rank_of, reduced_basis, SparseMatrix};
use crate::sym::{
    ad_basis, ad_basis_key, ext_var, is_k_invariant, named_invariants, sym_var, sym_vector, word_degree, Multigrade,
    SymKey, SymTensorElement, S_DEGREES, T_NAMES,
};
use crate::ugcp::{self, UCElement, UCKey};

/// Invariant counts of the harmonic part by degree: 1, 0, 3, then 4, 4, 8 repeating.
pub fn harmonic_count(n: usize) -> usize {
    match n {
        0 => 1,
        1 => 0,
        2 => 3,
        _ => [4, 4, 8][n % 3],
    }
}

/// dim of the degree-n part of C[a, b, c] with degrees 1, 2, 2.
pub fn abc_hilbert(n: usize) -> usize {
    let m = n / 2 + 2;
    m * (m - 1) / 2
}

/// Σ_k harmonic_count(k) · abc_hilbert(n − k).
pub fn expected_dimension(n: usize) -> usize {
    (0..=n).map(|k| harmonic_count(k) * abc_hilbert(n - k)).sum()
}

/// A basis of the K-invariants of one degree.
#[derive(Clone, Debug)]
pub struct InvariantSlice {
    pub degree: usize,
    /// Reduced echelon basis, sorted by leading key.
    pub basis: Vec<SymTensorElement>,
    /// Number of weight-zero multigrade blocks processed.
    pub blocks: usize,
    /// Every basis element is killed by ad(H1), ad(H2), ad(E), ad(F).
    pub sound: bool,
}

fn block_kernel(keys: &[SymKey], permute: bool) -> Vec<SymTensorElement> {
    let mut targets: BTreeMap<SymKey, usize> = BTreeMap::new();
    let images: Vec<SymTensorElement> = keys.iter().map(|k| ad_basis_key(Basis::E, k)).collect();
    for im in &images {
        for k in im.keys() {
            let next = targets.len();
            targets.entry(*k).or_insert(next);
        }
    }
    let cols = keys.len();
    let order: Vec<usize> = if permute { (0..cols).rev().collect() } else { (0..cols).collect() };
    let mut m = SparseMatrix::new(targets.len(), cols);
    for (j, im) in images.iter().enumerate() {
        for (k, c) in im {
            m.add_entry(targets[k], order[j], c.clone());
        }
    }
    let kernel = m.kernel();
    let inverse: HashMap<usize, usize> = order.iter().enumerate().map(|(j, &c)| (c, j)).collect();
    let vectors: Vec<SymTensorElement> =
        kernel.into_iter().map(|v| v.into_iter().map(|(c, x)| (keys[inverse[&c]], x)).collect()).collect();
    reduced_basis(&vectors)
}

fn weight_zero_blocks(n: usize) -> Vec<Vec<SymKey>> {
    let mut blocks: BTreeMap<Multigrade, Vec<SymKey>> = BTreeMap::new();
    for k in SymKey::all_of_degree(n) {
        if k.weight() == (0, 0) {
            blocks.entry(k.multigrade()).or_default().push(k);
        }
    }
    blocks.into_values().collect()
}

fn compute_slice(n: usize, permute: bool) -> InvariantSlice {
    let blocks = weight_zero_blocks(n);
    let mut basis: Vec<SymTensorElement> =
        blocks.par_iter().map(|keys| block_kernel(keys, permute)).collect::<Vec<_>>().into_iter().flatten().collect();
    basis.sort_by(|x, y| x.leading().map(|l| l.0).cmp(&y.leading().map(|l| l.0)));
    let sound = basis.par_iter().all(is_k_invariant);
    InvariantSlice { degree: n, basis, blocks: blocks.len(), sound }
}

static SLICES: LazyLock<Mutex<HashMap<usize, Arc<InvariantSlice>>>> = LazyLock::new(|| Mutex::new(HashMap::new()));

/// The K-invariants of S(g) ⊗ Λ(p) of total degree `n`.
pub fn invariant_subspace(n: usize) -> Arc<InvariantSlice> {
    if let Some(s) = SLICES.lock().unwrap().get(&n) {
        return s.clone();
    }
    let slice = Arc::new(compute_slice(n, false));
    SLICES.lock().unwrap().insert(n, slice.clone());
    slice
}

/// The invariant dimension recomputed with every block's columns in reverse order.
pub fn invariant_dimension_permuted(n: usize) -> usize {
    compute_slice(n, true).basis.len()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeRow {
    pub degree: usize,
    pub computed: usize,
    pub expected: usize,
    pub sound: bool,
}

impl DegreeRow {
    pub fn passed(&self) -> bool {
        self.sound && self.computed == self.expected
    }
}

pub fn dimension_table(max_degree: usize) -> Vec<DegreeRow> {
    (0..=max_degree)
        .map(|n| {
            let s = invariant_subspace(n);
            DegreeRow { degree: n, computed: s.basis.len(), expected: expected_dimension(n), sound: s.sound }
        })
        .collect()
}

pub fn verify_table(max_degree: usize) -> VerificationReport {
    let mut report = VerificationReport::new("table")
        .with_config(ReportConfig { max_degree: Some(max_degree), ..Default::default() });
    for row in dimension_table(max_degree) {
        report.push(
            Check::new(
                format!("degree-{}", row.degree),
                "number of invariants = harmonic table convolved with C[a,b,c]",
                row.passed(),
            )
            .with_detail(format!(
                "computed {}, expected {}, {}",
                row.computed,
                row.expected,
                if row.sound { "killed by all of k" } else { "NOT killed by all of k" }
            )),
        );
    }
    report
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn rank(xs: &[SymTensorElement]) -> usize {
    rank_of(xs.iter())
}

/// The module generated from a highest weight vector by repeated ad(F).
fn lowering_string(v: &SymTensorElement) -> Vec<SymTensorElement> {
    let mut out = Vec::new();
    let mut x = v.clone();
    while !x.is_zero() {
        out.push(x.clone());
        x = ad_basis(Basis::F, &x);
    }
    out
}

fn weight_of_vector(x: &SymTensorElement) -> Option<(i32, i32)> {
    let mut ws = x.keys().map(SymKey::weight);
    let w = ws.next()?;
    ws.all(|v| v == w).then_some(w)
}

fn weight_text(w: (i32, i32)) -> String {
    format!("({}, {})", w.0, w.1)
}

/// S^n(k_s) = V_2n ⊕ b S^(n−2)(k_s), with k_s = span{H, E, F}.
pub fn verify_lemma_sk(n: usize) -> VerificationReport {
    let mut report = VerificationReport::new(format!("lemma-sk-{n}"));
    let hh = sym_vector(&lie::h());
    let monomials = |d: usize| -> Vec<SymTensorElement> {
        let mut out = Vec::new();
        for i in 0..=d {
            for j in 0..=d - i {
                let k = d - i - j;
                out.push(
                    hh.pow(i as u32)
                        .product(&sym_var(Basis::E).pow(j as u32))
                        .product(&sym_var(Basis::F).pow(k as u32)),
                );
            }
        }
        out
    };
    let all = monomials(n);
    let dim = rank(&all);
    report.push(
        Check::new("dim", "dim S^n(k_s) = C(n+2, 2)", dim == binomial(n + 2, 2)).with_detail(format!("rank {dim}")),
    );
    report.push(Check::new(
        "dim-formula",
        "(2n+1) + C(n, 2) = C(n+2, 2)",
        2 * n + 1 + binomial(n, 2) == binomial(n + 2, 2),
    ));
    let top = sym_var(Basis::E).pow(n as u32);
    let w = weight_of_vector(&top);
    let sl2 = w.map(|(a, b)| a - b);
    report.push(
        Check::new(
            "highest-weight",
            "E^n is killed by ad(E) and has weight 2n",
            ad_basis(Basis::E, &top).is_zero() && sl2 == Some(2 * n as i32),
        )
        .with_detail(format!("weight {}", w.map(weight_text).unwrap_or_default())),
    );
    let v = lowering_string(&top);
    let v_rank = rank(&v);
    report.push(
        Check::new("v2n", "dim V_2n = 2n+1", v.len() == 2 * n + 1 && v_rank == 2 * n + 1)
            .with_detail(format!("rank {v_rank}")),
    );
    let b = &named_invariants().b;
    let bs: Vec<SymTensorElement> =
        if n >= 2 { monomials(n - 2).iter().map(|m| b.product(m)).collect() } else { vec![] };
    let b_rank = rank(&bs);
    report.push(
        Check::new("b-part", "dim b S^(n−2)(k_s) = C(n, 2)", b_rank == binomial(n, 2))
            .with_detail(format!("rank {b_rank}")),
    );
    let union: Vec<SymTensorElement> = v.iter().chain(&bs).cloned().collect();
    let total = rank(&union);
    report.push(
        Check::new(
            "direct-sum",
            "V_2n ∩ b S^(n−2)(k_s) = 0 and the sum is S^n(k_s)",
            total == v_rank + b_rank && total == dim,
        )
        .with_detail(format!("rank {total}")),
    );
    report
}

/// S^n(p) = V_(n,0) ⊕ V_(n−1,−1) ⊕ ⋯ ⊕ V_(0,−n) ⊕ c S^(n−2)(p).
pub fn verify_lemma_sp(n: usize) -> VerificationReport {
    let mut report = VerificationReport::new(format!("lemma-sp-{n}"));
    let all: Vec<SymTensorElement> = crate::sym::SymMonomial::all_of_degree(&Basis::P, n)
        .into_iter()
        .map(|m| SymTensorElement::from_key(SymKey::new(m, Default::default())))
        .collect();
    let dim = rank(&all);
    report.push(
        Check::new("dim", "dim S^n(p) = C(n+3, 3)", dim == binomial(n + 3, 3)).with_detail(format!("rank {dim}")),
    );
    report.push(Check::new(
        "dim-formula",
        "(n+1)² + C(n+1, 3) = C(n+3, 3)",
        (n + 1) * (n + 1) + binomial(n + 1, 3) == binomial(n + 3, 3),
    ));
    let mut harmonic = Vec::new();
    for i in 0..=n {
        let v = sym_var(Basis::E1).pow((n - i) as u32).product(&sym_var(Basis::F2).pow(i as u32));
        let w = weight_of_vector(&v);
        let want = (n as i32 - i as i32, -(i as i32));
        let killed = ad_basis(Basis::E, &v).is_zero();
        report.push(
            Check::new(
                format!("highest-weight-{i}"),
                format!("E1^{} F2^{i} is a highest weight vector of weight {}", n - i, weight_text(want)),
                killed && w == Some(want),
            )
            .with_detail(format!("weight {}", w.map(weight_text).unwrap_or_default())),
        );
        let module = lowering_string(&v);
        let r = rank(&module);
        report.push(
            Check::new(format!("module-{i}"), format!("dim V_{} = n+1", weight_text(want)), r == n + 1)
                .with_detail(format!("rank {r}")),
        );
        harmonic.extend(module);
    }
    let h_rank = rank(&harmonic);
    report.push(
        Check::new(
            "harmonic",
            "the n+1 highest weight modules are independent, total (n+1)²",
            h_rank == (n + 1) * (n + 1),
        )
        .with_detail(format!("rank {h_rank}")),
    );
    let c = &named_invariants().c;
    let cs: Vec<SymTensorElement> = if n >= 2 {
        crate::sym::SymMonomial::all_of_degree(&Basis::P, n - 2)
            .into_iter()
            .map(|m| c.product(&SymTensorElement::from_key(SymKey::new(m, Default::default()))))
            .collect()
    } else {
        vec![]
    };
    let c_rank = rank(&cs);
    report.push(
        Check::new("c-part", "dim c S^(n−2)(p) = C(n+1, 3)", c_rank == binomial(n + 1, 3))
            .with_detail(format!("rank {c_rank}")),
    );
    let union: Vec<SymTensorElement> = harmonic.iter().chain(&cs).cloned().collect();
    let total = rank(&union);
    report.push(
        Check::new(
            "direct-sum",
            "the harmonic part meets c S^(n−2)(p) trivially and the sum is S^n(p)",
            total == h_rank + c_rank && total == dim,
        )
        .with_detail(format!("rank {total}")),
    );
    report
}

/// The ten k-submodules of Λ(p), each given by a spanning list and its highest weight.
pub fn extp_submodules() -> Vec<(&'static str, Vec<SymTensorElement>, (i32, i32))> {
    use Basis::*;
    let w = |vars: &[Basis]| vars.iter().fold(SymTensorElement::one(), |acc, b| acc.product(&ext_var(*b)));
    vec![
        ("1", vec![SymTensorElement::one()], (0, 0)),
        ("g", vec![w(&[E1, F1]) + w(&[E2, F2])], (0, 0)),
        ("top", vec![w(&[E1, E2, F1, F2])], (0, 0)),
        ("p+", vec![w(&[E1]), w(&[E2])], (1, 0)),
        ("p+ top", vec![w(&[E1, E2, F2]), w(&[E1, E2, F1])], (1, 0)),
        ("p-", vec![w(&[F2]), w(&[F1])], (0, -1)),
        ("p- top", vec![w(&[E1, F1, F2]), w(&[E2, F1, F2])], (0, -1)),
        ("E1^^E2", vec![w(&[E1, E2])], (1, 1)),
        ("F1^^F2", vec![w(&[F1, F2])], (-1, -1)),
        ("adjoint", vec![w(&[E1, F2]), w(&[E2, F2]) - w(&[E1, F1]), w(&[E2, F1])], (1, -1)),
    ]
}

/// Each listed span is ad(k)-stable and irreducible with the stated highest
/// weight, and together they give all of Λ(p).
pub fn verify_extp_decomposition() -> VerificationReport {
    let mut report = VerificationReport::new("extp");
    let mut everything = Vec::new();
    let mut total_dim = 0;
    for (name, span, hw) in extp_submodules() {
        let dim = rank(&span);
        let mut with_images = span.clone();
        for b in Basis::K {
            with_images.extend(span.iter().map(|x| ad_basis(b, x)));
        }
        let stable = rank(&with_images) == dim;
        report.push(Check::new(format!("{name}/stable"), format!("span {name} is k-stable"), stable));

        let images: Vec<SymTensorElement> = span.iter().map(|x| ad_basis(Basis::E, x)).collect();
        // kernel of ad(E) on the span: solve Σ x_i ad(E) s_i = 0
        let img_table = crate::sparse::CoordinateTable::new(images.iter());
        let mut m = SparseMatrix::new(img_table.keys.len(), span.len());
        for (j, e) in images.iter().enumerate() {
            for (k, c) in e {
                let r = img_table.keys.binary_search(k).unwrap();
                m.add_entry(r, j, c.clone());
            }
        }
        let kernel = m.kernel();
        let hw_vec: Option<SymTensorElement> = (kernel.len() == 1).then(|| {
            let mut v = SymTensorElement::zero();
            for (j, c) in &kernel[0] {
                v.add_scaled(&span[*j], c);
            }
            v
        });
        let found = hw_vec.as_ref().and_then(weight_of_vector);
        let irreducible = (hw.0 - hw.1 + 1) as usize == dim;
        report.push(
            Check::new(
                format!("{name}/highest-weight"),
                format!("span {name} ≅ V_{}", weight_text(hw)),
                found == Some(hw) && irreducible,
            )
            .with_detail(format!(
                "dim {dim}, highest weight {}",
                found.map(weight_text).unwrap_or_else(|| "none".to_string())
            )),
        );
        total_dim += dim;
        everything.extend(span);
    }
    let r = rank(&everything);
    report.push(
        Check::new("sum", "the ten submodules form a direct sum of dimension 16", total_dim == 16 && r == 16)
            .with_detail(format!("sum of dims {total_dim}, rank {r}")),
    );
    report
}

/// Exponents (n1, n2, n3, n4) of a^n1 b^n2 c^n3 d^n4 of the given degree.
pub fn s_exponents(degree: usize) -> Vec<[u32; 4]> {
    let mut out = Vec::new();
    for n4 in 0..=degree / S_DEGREES[3] {
        let r4 = degree - 3 * n4;
        for n3 in 0..=r4 / 2 {
            let r3 = r4 - 2 * n3;
            for n2 in 0..=r3 / 2 {
                let n1 = r3 - 2 * n2;
                out.push([n1 as u32, n2 as u32, n3 as u32, n4 as u32]);
            }
        }
    }
    out.sort();
    out
}

/// Labels (S exponents, T word) of the S·T products of total degree `n`.
pub fn st_labels(n: usize) -> Vec<([u32; 4], &'static str)> {
    let mut out = Vec::new();
    for t in T_NAMES {
        let dt = word_degree(t);
        if dt <= n {
            for s in s_exponents(n - dt) {
                out.push((s, t));
            }
        }
    }
    out
}

/// Labels of all products of nominal degree at most `n`.
pub fn st_labels_up_to(n: usize) -> Vec<([u32; 4], &'static str)> {
    (0..=n).flat_map(st_labels).collect()
}

pub fn verify_st_basis(max_degree: usize) -> VerificationReport {
    let inv = named_invariants();
    let mut report = VerificationReport::new("st-basis")
        .with_config(ReportConfig { max_degree: Some(max_degree), ..Default::default() });
    for n in 0..=max_degree {
        let labels = st_labels(n);
        let products: Vec<SymTensorElement> =
            labels.par_iter().map(|(s, t)| inv.s_monomial(*s).product(&inv.word(t))).collect();
        let expected = expected_dimension(n);
        let invariant = products.par_iter().all(is_k_invariant);
        let r = rank(&products);
        let slice = invariant_subspace(n);
        let joint: Vec<SymTensorElement> = slice.basis.iter().chain(&products).cloned().collect();
        let inside = rank(&joint) == slice.basis.len();
        report.push(
            Check::new(
                format!("degree-{n}"),
                "S·T in degree n: expected count, K-invariant, independent, inside the invariants",
                labels.len() == expected && invariant && r == expected && inside,
            )
            .with_detail(format!(
                "{} products, expected {expected}, rank {r}, invariant {invariant}, inside {inside}",
                labels.len()
            )),
        );
    }
    report
}

fn uc_rank(xs: &[UCElement]) -> usize {
    rank_of(xs.iter())
}

/// T̃ is independent, and so are all S̃·T̃ products of filtration at most `max_filtration`.
pub fn verify_uc_basis_slice(max_filtration: usize) -> VerificationReport {
    let t = ugcp::tildes();
    let mut report = VerificationReport::new("uc-basis")
        .with_config(ReportConfig { max_filtration: Some(max_filtration), ..Default::default() });
    let tt: Vec<UCElement> = t.t_members().into_iter().map(|(_, x)| x).collect();
    let r = uc_rank(&tt);
    report
        .push(Check::new("t-tilde", "the 16 elements of T̃ are independent", r == 16).with_detail(format!("rank {r}")));

    let labels = st_labels_up_to(max_filtration);
    let products: Vec<(usize, UCElement)> = labels
        .par_iter()
        .map(|(s, w)| {
            let deg = s.iter().zip(S_DEGREES).map(|(n, d)| *n as usize * d).sum::<usize>() + word_degree(w);
            (deg, t.s_monomial(*s).product(&t.word(w)))
        })
        .collect();
    let filtration_ok = products.iter().all(|(d, x)| ugcp::filtration_degree(x) == Some(*d));
    report.push(Check::new(
        "filtration",
        "each product has filtration degree equal to its nominal degree",
        filtration_ok,
    ));
    let xs: Vec<UCElement> = products.into_iter().map(|(_, x)| x).collect();
    let r = uc_rank(&xs);
    report.push(
        Check::new("s-tilde-t-tilde", "S̃·T̃ products of filtration ≤ bound are independent", r == xs.len())
            .with_detail(format!("{} products, rank {r}", xs.len())),
    );
    report
}

/// Whether every U-factor of the key involves p.
fn has_p_factor(k: &UCKey) -> bool {
    !k.u.in_uk()
}

/// The span of u·D·v over S̃·T̃ products u, v with deg u + deg v + 2 ≤ bound
/// meets U(k) ⊗ C(p) only in zero.
pub fn ideal_slice_check(max_filtration: usize) -> VerificationReport {
    let t = ugcp::tildes();
    let mut report = VerificationReport::new("ideal-slice")
        .with_config(ReportConfig { max_filtration: Some(max_filtration), ..Default::default() });
    let d_clean = t.dirac.keys().all(has_p_factor);
    report.push(Check::new("dirac", "every summand of D has a p-factor on the left", d_clean));
    if max_filtration < 2 {
        report.push(Check::new("intersection", "span{u·D·v} ∩ U(k)⊗C(p) = 0", true).with_detail("empty span"));
        return report;
    }
    let budget = max_filtration - 2;
    let labels = st_labels_up_to(budget);
    let nominal = |(s, w): &([u32; 4], &str)| -> usize {
        s.iter().zip(S_DEGREES).map(|(n, d)| *n as usize * d).sum::<usize>() + word_degree(w)
    };
    let mut pairs = Vec::new();
    for x in &labels {
        for y in &labels {
            if nominal(x) + nominal(y) <= budget {
                pairs.push((*x, *y));
            }
        }
    }
    let elements: Vec<UCElement> = pairs
        .par_iter()
        .map(|((s1, w1), (s2, w2))| {
            let u = t.s_monomial(*s1).product(&t.word(w1));
            let v = t.s_monomial(*s2).product(&t.word(w2));
            u.product(&t.dirac).product(&v)
        })
        .collect();
    let projected: Vec<UCElement> = elements.iter().map(|x| x.filter(has_p_factor)).collect();
    let full = uc_rank(&elements);
    let outside = uc_rank(&projected);
    report.push(
        Check::new("intersection", "span{u·D·v} ∩ U(k)⊗C(p) = 0", full == outside)
            .with_detail(format!("{} products, rank {full}, rank off U(k)⊗C(p) {outside}", elements.len())),
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expected_values() {
        let v: Vec<usize> = (0..=5).map(expected_dimension).collect();
        assert_eq!(v, vec![1, 1, 6, 10, 23, 39]);
        assert_eq!((0..6).map(abc_hilbert).collect::<Vec<_>>(), vec![1, 1, 3, 3, 6, 6]);
    }

    #[test]
    fn low_degree_invariants() {
        let s0 = invariant_subspace(0);
        assert_eq!(s0.basis, vec![SymTensorElement::one()]);
        let s1 = invariant_subspace(1);
        assert_eq!(s1.basis.len(), 1);
        assert_eq!(rank(&[s1.basis[0].clone(), named_invariants().a]), 1);
        assert_eq!(invariant_subspace(2).basis.len(), 6);
        assert!(invariant_subspace(3).sound);
    }

    #[test]
    fn permuted_elimination_agrees() {
        for n in 0..=4 {
            assert_eq!(invariant_dimension_permuted(n), invariant_subspace(n).basis.len());
        }
    }

    #[test]
    fn lemmas_small() {
        assert!(verify_lemma_sk(2).passed());
        assert!(verify_lemma_sp(2).passed());
        assert!(verify_extp_decomposition().passed());
    }

    #[test]
    fn st_degree_three_members() {
        let labels = st_labels(3);
        assert_eq!(labels.len(), 10);
    }
}
