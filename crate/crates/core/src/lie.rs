//! Structure data of sl(3, C) in the basis H1, H2, E, F, E1, E2, F1, F2.
//!
//! The basis is realized inside 3x3 matrices:
//! H1 = (2e11 - e22 - e33)/3, H2 = (-e11 + 2e22 - e33)/3, E = e12, F = e21,
//! E1 = e13, E2 = e23, F1 = e31, F2 = e32. Brackets and the trace form are
//! computed once from that realization and frozen in a [`StructureTable`].
//! The first four vectors span k = gl(2), the last four span p.

use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::sync::LazyLock;

use num::{One, Zero};

use crate::linear::{int, q, Combination, Scalar};
use crate::report::{Check, VerificationReport};
use crate::sparse::SparseMatrix;

/// One of the eight basis vectors, in PBW order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    H1,
    H2,
    E,
    F,
    E1,
    E2,
    F1,
    F2,
}

impl Basis {
    pub const ALL: [Basis; 8] = [Basis::H1, Basis::H2, Basis::E, Basis::F, Basis::E1, Basis::E2, Basis::F1, Basis::F2];
    pub const K: [Basis; 4] = [Basis::H1, Basis::H2, Basis::E, Basis::F];
    pub const P: [Basis; 4] = [Basis::E1, Basis::E2, Basis::F1, Basis::F2];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Basis {
        Self::ALL[i]
    }

    pub fn in_k(self) -> bool {
        self.index() < 4
    }

    pub fn in_p(self) -> bool {
        !self.in_k()
    }

    /// Position of a p-vector in the order E1 < E2 < F1 < F2.
    pub fn p_slot(self) -> Option<usize> {
        self.index().checked_sub(4)
    }

    pub fn from_p_slot(slot: usize) -> Basis {
        Self::P[slot]
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Basis::H1 => "H1",
            Basis::H2 => "H2",
            Basis::E => "E",
            Basis::F => "F",
            Basis::E1 => "E1",
            Basis::E2 => "E2",
            Basis::F1 => "F1",
            Basis::F2 => "F2",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Basis> {
        Self::ALL.into_iter().find(|b| b.symbol() == s)
    }

    pub fn vector(self) -> GVector {
        GVector::from_key(self)
    }
}

impl fmt::Debug for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

pub type GVector = Combination<Basis>;

/// H = H1 - H2, the Cartan element of k_s = sl(2).
pub fn h() -> GVector {
    &Basis::H1.vector() - &Basis::H2.vector()
}

/// a = H1 + H2, spanning the center of k.
pub fn a() -> GVector {
    &Basis::H1.vector() + &Basis::H2.vector()
}

/// Exact 3x3 matrices, used to realize the basis.
pub mod matrix {
    use super::*;

    #[derive(Clone, PartialEq, Eq, Debug)]
    pub struct Mat3(pub [[Scalar; 3]; 3]);

    impl Mat3 {
        pub fn zero() -> Mat3 {
            Mat3(std::array::from_fn(|_| std::array::from_fn(|_| Scalar::zero())))
        }

        pub fn unit(i: usize, j: usize) -> Mat3 {
            let mut m = Mat3::zero();
            m.0[i][j] = Scalar::one();
            m
        }

        pub fn diag(d: [Scalar; 3]) -> Mat3 {
            let mut m = Mat3::zero();
            for (i, v) in d.into_iter().enumerate() {
                m.0[i][i] = v;
            }
            m
        }

        pub fn trace(&self) -> Scalar {
            (0..3).map(|i| self.0[i][i].clone()).sum()
        }

        pub fn scale(&self, c: &Scalar) -> Mat3 {
            Mat3(std::array::from_fn(|i| std::array::from_fn(|j| &self.0[i][j] * c)))
        }

        pub fn commutator(&self, rhs: &Mat3) -> Mat3 {
            &(self * rhs) - &(rhs * self)
        }
    }

    impl Mul for &Mat3 {
        type Output = Mat3;
        fn mul(self, rhs: &Mat3) -> Mat3 {
            Mat3(std::array::from_fn(|i| std::array::from_fn(|j| (0..3).map(|k| &self.0[i][k] * &rhs.0[k][j]).sum())))
        }
    }

    impl Add for &Mat3 {
        type Output = Mat3;
        fn add(self, rhs: &Mat3) -> Mat3 {
            Mat3(std::array::from_fn(|i| std::array::from_fn(|j| &self.0[i][j] + &rhs.0[i][j])))
        }
    }

    impl Sub for &Mat3 {
        type Output = Mat3;
        fn sub(self, rhs: &Mat3) -> Mat3 {
            Mat3(std::array::from_fn(|i| std::array::from_fn(|j| &self.0[i][j] - &rhs.0[i][j])))
        }
    }

    pub fn of_basis(b: Basis) -> Mat3 {
        match b {
            Basis::H1 => Mat3::diag([q(2, 3), q(-1, 3), q(-1, 3)]),
            Basis::H2 => Mat3::diag([q(-1, 3), q(2, 3), q(-1, 3)]),
            Basis::E => Mat3::unit(0, 1),
            Basis::F => Mat3::unit(1, 0),
            Basis::E1 => Mat3::unit(0, 2),
            Basis::E2 => Mat3::unit(1, 2),
            Basis::F1 => Mat3::unit(2, 0),
            Basis::F2 => Mat3::unit(2, 1),
        }
    }

    pub fn of_vector(x: &GVector) -> Mat3 {
        let mut m = Mat3::zero();
        for (b, c) in x {
            m = &m + &of_basis(*b).scale(c);
        }
        m
    }

    /// Coordinates of a traceless matrix in the basis.
    pub fn to_vector(m: &Mat3) -> GVector {
        assert!(m.trace().is_zero(), "matrix is not traceless");
        let mut v = GVector::zero();
        v.add_term(Basis::H1, &m.0[0][0] - &m.0[2][2]);
        v.add_term(Basis::H2, &m.0[1][1] - &m.0[2][2]);
        for b in [Basis::E, Basis::F, Basis::E1, Basis::E2, Basis::F1, Basis::F2] {
            let u = of_basis(b);
            let (i, j) = (0..9).map(|k| (k / 3, k % 3)).find(|&(i, j)| !u.0[i][j].is_zero()).unwrap();
            v.add_term(b, m.0[i][j].clone());
        }
        v
    }
}

pub struct StructureTable {
    brackets: Vec<Vec<GVector>>,
    form: Vec<Vec<Scalar>>,
}

impl StructureTable {
    fn from_matrices() -> Self {
        let mats: Vec<matrix::Mat3> = Basis::ALL.iter().map(|b| matrix::of_basis(*b)).collect();
        let brackets =
            (0..8).map(|i| (0..8).map(|j| matrix::to_vector(&mats[i].commutator(&mats[j]))).collect()).collect();
        let form = (0..8).map(|i| (0..8).map(|j| (&mats[i] * &mats[j]).trace()).collect()).collect();
        Self { brackets, form }
    }

    pub fn bracket(&self, x: Basis, y: Basis) -> &GVector {
        &self.brackets[x.index()][y.index()]
    }

    pub fn form(&self, x: Basis, y: Basis) -> &Scalar {
        &self.form[x.index()][y.index()]
    }
}

static TABLE: LazyLock<StructureTable> = LazyLock::new(StructureTable::from_matrices);

pub fn structure() -> &'static StructureTable {
    &TABLE
}

pub fn bracket_basis(x: Basis, y: Basis) -> &'static GVector {
    TABLE.bracket(x, y)
}

pub fn bracket(x: &GVector, y: &GVector) -> GVector {
    let mut out = GVector::zero();
    for (bx, cx) in x {
        for (by, cy) in y {
            out.add_scaled(TABLE.bracket(*bx, *by), &(cx * cy));
        }
    }
    out
}

/// B(x, y) = tr(xy).
pub fn trace_form(x: &GVector, y: &GVector) -> Scalar {
    let mut s = Scalar::zero();
    for (bx, cx) in x {
        for (by, cy) in y {
            s += cx * cy * TABLE.form(*bx, *by);
        }
    }
    s
}

/// Conjugation by diag(1, 1, -1): identity on k, minus identity on p.
pub fn cartan_involution(x: &GVector) -> GVector {
    x.iter().map(|(b, c)| (*b, if b.in_k() { c.clone() } else { -c.clone() })).collect()
}

pub fn in_k(x: &GVector) -> bool {
    x.keys().all(|b| b.in_k())
}

pub fn in_p(x: &GVector) -> bool {
    x.keys().all(|b| b.in_p())
}

/// Simultaneous eigenvalues of ad(H1) and ad(H2).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Weight {
    pub h1: Scalar,
    pub h2: Scalar,
}

impl Weight {
    pub fn new(h1: Scalar, h2: Scalar) -> Self {
        Self { h1, h2 }
    }

    pub fn ints(h1: i64, h2: i64) -> Self {
        Self::new(int(h1), int(h2))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// The sl(2) weight, i.e. the eigenvalue of ad(H1 - H2).
    pub fn sl2(&self) -> Scalar {
        &self.h1 - &self.h2
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight::new(&self.h1 + &rhs.h1, &self.h2 + &rhs.h2)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::linear::fmt_scalar;
        write!(f, "({}, {})", fmt_scalar(&self.h1), fmt_scalar(&self.h2))
    }
}

static WEIGHTS: LazyLock<[Weight; 8]> = LazyLock::new(|| {
    std::array::from_fn(|i| {
        let b = Basis::from_index(i);
        let eig = |h: Basis| {
            let v = TABLE.bracket(h, b);
            let c = v.coeff(&b);
            assert_eq!(v, &b.vector().scale(&c), "{b:?} is not an eigenvector of ad({h:?})");
            c
        };
        Weight::new(eig(Basis::H1), eig(Basis::H2))
    })
});

pub fn weight_of(b: Basis) -> Weight {
    WEIGHTS[b.index()].clone()
}

/// Weight as small integers; every basis weight is integral.
pub fn weight_ints(b: Basis) -> (i32, i32) {
    const W: [(i32, i32); 8] = [(0, 0), (0, 0), (1, -1), (-1, 1), (1, 0), (0, 1), (-1, 0), (0, -1)];
    W[b.index()]
}

/// A basis of the B-orthogonal complement pairing: returns `d` with
/// `B(basis[i], d[j]) = δ_ij`, the `d[j]` taken in the span of `basis`.
/// `None` if the form is degenerate on that span.
pub fn dual_basis(basis: &[GVector]) -> Option<Vec<GVector>> {
    let n = basis.len();
    let gram = SparseMatrix::from_rows(
        n,
        (0..n).map(|i| (0..n).map(|j| (j, trace_form(&basis[i], &basis[j]))).collect()).collect(),
    );
    (0..n)
        .map(|j| {
            let rhs: Vec<Scalar> = (0..n).map(|i| if i == j { Scalar::one() } else { Scalar::zero() }).collect();
            let sol = gram.solve(&rhs)?;
            if sol.nullity != 0 {
                return None;
            }
            let mut d = GVector::zero();
            for (c, v) in sol.x.iter().zip(basis) {
                d.add_scaled(v, c);
            }
            Some(d)
        })
        .collect()
}

/// ‖ρ‖² under the trace form for the half-sum of the given positive root vectors.
///
/// Each root α is read off the structure table as a functional on span{H1, H2}
/// and identified with `h_α` via `B(h_α, h) = α(h)`.
pub fn rho_norm_squared(positive_roots: &[Basis]) -> Scalar {
    let cartan = [Basis::H1.vector(), Basis::H2.vector()];
    let gram = SparseMatrix::from_rows(
        2,
        (0..2).map(|i| (0..2).map(|j| (j, trace_form(&cartan[i], &cartan[j]))).collect()).collect(),
    );
    let mut rho = GVector::zero();
    for &root in positive_roots {
        let w = weight_of(root);
        let sol = gram.solve(&[w.h1, w.h2]).expect("nondegenerate Cartan form");
        rho.add_term(Basis::H1, &sol.x[0] * q(1, 2));
        rho.add_term(Basis::H2, &sol.x[1] * q(1, 2));
    }
    trace_form(&rho, &rho)
}

/// Positive roots of g compatible with the positive root E of k.
pub const POSITIVE_ROOTS_G: [Basis; 3] = [Basis::E, Basis::E1, Basis::E2];
pub const POSITIVE_ROOTS_K: [Basis; 1] = [Basis::E];

/// The brackets of the Cartan elements with the root vectors, as tabulated
/// by hand: ([h, x], coefficient of x).
pub const CARTAN_TABLE: [(Basis, Basis, i64); 12] = [
    (Basis::H1, Basis::E1, 1),
    (Basis::H2, Basis::E1, 0),
    (Basis::H1, Basis::E2, 0),
    (Basis::H2, Basis::E2, 1),
    (Basis::H1, Basis::F1, -1),
    (Basis::H2, Basis::F1, 0),
    (Basis::H1, Basis::F2, 0),
    (Basis::H2, Basis::F2, -1),
    (Basis::H1, Basis::E, 1),
    (Basis::H2, Basis::E, -1),
    (Basis::H1, Basis::F, -1),
    (Basis::H2, Basis::F, 1),
];

fn count_check(id: &str, anchor: &str, total: usize, failures: Vec<String>) -> Check {
    let ok = failures.is_empty();
    let mut c = Check::new(id, anchor, ok).with_detail(format!("{}/{total}", total - failures.len()));
    if !ok {
        c.residual = Some(failures.join("; "));
    }
    c
}

/// Antisymmetry, Jacobi, the Cartan table, the matrix oracle, invariance of
/// the form, the Cartan involution and the k/p bracket relations.
pub fn verify_structure() -> VerificationReport {
    let mut report = VerificationReport::new("lie");
    let v = |b: Basis| b.vector();

    let mut bad = Vec::new();
    for x in Basis::ALL {
        for y in Basis::ALL {
            if !(bracket(&v(x), &v(y)) + bracket(&v(y), &v(x))).is_zero() {
                bad.push(format!("[{x},{y}]"));
            }
        }
    }
    report.push(count_check("antisymmetry", "[x, y] + [y, x] = 0", 64, bad));

    let mut bad = Vec::new();
    for x in Basis::ALL {
        for y in Basis::ALL {
            for z in Basis::ALL {
                let j = bracket(&v(x), &bracket(&v(y), &v(z)))
                    + bracket(&v(y), &bracket(&v(z), &v(x)))
                    + bracket(&v(z), &bracket(&v(x), &v(y)));
                if !j.is_zero() {
                    bad.push(format!("({x},{y},{z})"));
                }
            }
        }
    }
    report.push(count_check("jacobi", "[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0", 512, bad));

    let mut bad = Vec::new();
    for (h, x, c) in CARTAN_TABLE {
        if bracket(&v(h), &v(x)) != v(x).scale(&int(c)) {
            bad.push(format!("[{h},{x}]"));
        }
    }
    report.push(count_check("cartan-table", "[H1, E1] = E1, …, [H2, F] = F", CARTAN_TABLE.len(), bad));

    let mut bad = Vec::new();
    for x in Basis::ALL {
        for y in Basis::ALL {
            let (mx, my) = (matrix::of_basis(x), matrix::of_basis(y));
            let want = matrix::to_vector(&mx.commutator(&my));
            if bracket(&v(x), &v(y)) != want || trace_form(&v(x), &v(y)) != (&mx * &my).trace() {
                bad.push(format!("({x},{y})"));
            }
        }
    }
    report.push(count_check("matrix-oracle", "bracket and trace form agree with 3x3 matrix arithmetic", 64, bad));

    let mut bad = Vec::new();
    for x in Basis::ALL {
        for y in Basis::ALL {
            for z in Basis::ALL {
                let s = trace_form(&bracket(&v(x), &v(y)), &v(z)) + trace_form(&v(y), &bracket(&v(x), &v(z)));
                if !s.is_zero() {
                    bad.push(format!("({x},{y},{z})"));
                }
            }
        }
    }
    report.push(count_check("invariance", "B([x,y], z) + B(y, [x,z]) = 0", 512, bad));

    let mut bad = Vec::new();
    for x in Basis::ALL {
        if cartan_involution(&cartan_involution(&v(x))) != v(x) {
            bad.push(format!("θθ{x}"));
        }
        for y in Basis::ALL {
            let lhs = cartan_involution(&bracket(&v(x), &v(y)));
            let rhs = bracket(&cartan_involution(&v(x)), &cartan_involution(&v(y)));
            if lhs != rhs {
                bad.push(format!("θ[{x},{y}]"));
            }
        }
    }
    report.push(count_check("involution", "θ is an involutive automorphism", 72, bad));

    let mut bad = Vec::new();
    for x in Basis::ALL {
        for y in Basis::ALL {
            let z = bracket(&v(x), &v(y));
            let ok = if x.in_k() == y.in_k() { in_k(&z) } else { in_p(&z) };
            let orth = x.in_k() == y.in_k() || trace_form(&v(x), &v(y)).is_zero();
            if !ok || !orth {
                bad.push(format!("({x},{y})"));
            }
        }
    }
    report.push(count_check("cartan-decomposition", "[k,k] ⊆ k, [k,p] ⊆ p, [p,p] ⊆ k and B(k, p) = 0", 64, bad));

    let mut bad = Vec::new();
    for x in Basis::ALL {
        let w = weight_of(x);
        let (a, b) = weight_ints(x);
        if w != Weight::ints(a as i64, b as i64) {
            bad.push(format!("{x}"));
        }
    }
    report.push(count_check("weights", "every basis vector is an (ad H1, ad H2) eigenvector", 8, bad));
    report
}
