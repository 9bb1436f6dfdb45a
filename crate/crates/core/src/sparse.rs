//! Exact sparse rational matrices.
//!
//! Elimination works on integer rows: each row is scaled to a primitive
//! integer vector, and row operations are cross-multiplications followed by
//! content removal, so no rational division happens until a kernel or
//! reduced basis is read out. The echelon form is kept fully reduced as rows
//! are inserted, which makes the result unique for a given column order.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use num::integer::Integer;
use num::{BigInt, One, Signed, Zero};

use crate::linear::{Combination, Scalar};

type IntRow = Vec<(usize, BigInt)>;

#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, Scalar)>>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Vec::new(); rows] }
    }

    /// Builds a matrix from sparse rows; entries must have column `< cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<(usize, Scalar)>>) -> Self {
        let mut m = Self::new(0, cols);
        for r in rows {
            m.push_row(r);
        }
        m
    }

    pub fn push_row(&mut self, mut row: Vec<(usize, Scalar)>) {
        row.retain(|(_, v)| !v.is_zero());
        row.sort_by_key(|(c, _)| *c);
        let mut merged: Vec<(usize, Scalar)> = Vec::with_capacity(row.len());
        for (c, v) in row {
            assert!(c < self.cols, "column {c} out of range {}", self.cols);
            match merged.last_mut() {
                Some((lc, lv)) if *lc == c => *lv += v,
                _ => merged.push((c, v)),
            }
        }
        merged.retain(|(_, v)| !v.is_zero());
        self.data.push(merged);
        self.rows += 1;
    }

    /// Adds `value` at (`row`, `col`).
    pub fn add_entry(&mut self, row: usize, col: usize, value: Scalar) {
        assert!(row < self.rows && col < self.cols);
        let r = &mut self.data[row];
        match r.binary_search_by_key(&col, |(c, _)| *c) {
            Ok(i) => {
                r[i].1 += value;
                if r[i].1.is_zero() {
                    r.remove(i);
                }
            }
            Err(i) => {
                if !value.is_zero() {
                    r.insert(i, (col, value));
                }
            }
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn row(&self, i: usize) -> &[(usize, Scalar)] {
        &self.data[i]
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.cols];
        for (i, r) in self.data.iter().enumerate() {
            for (j, v) in r {
                cols[*j].push((i, v.clone()));
            }
        }
        SparseMatrix { rows: self.cols, cols: self.rows, data: cols }
    }

    /// Reorders columns: column `j` of `self` becomes column `perm[j]`.
    pub fn permute_columns(&self, perm: &[usize]) -> SparseMatrix {
        assert_eq!(perm.len(), self.cols);
        let rows = self.data.iter().map(|r| r.iter().map(|(c, v)| (perm[*c], v.clone())).collect()).collect();
        SparseMatrix::from_rows(self.cols, rows)
    }

    pub fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.cols);
        for r in &self.data {
            e.insert_rational(r);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// A basis of `{x : self * x = 0}`, one vector per free column, each with
    /// a 1 at its free column and zeros at the other free columns.
    pub fn kernel(&self) -> Vec<Vec<(usize, Scalar)>> {
        self.echelon().kernel()
    }

    /// Solves `self * x = rhs`. Returns `None` when inconsistent.
    pub fn solve(&self, rhs: &[Scalar]) -> Option<Solution> {
        assert_eq!(rhs.len(), self.rows);
        let n = self.cols;
        let mut aug = SparseMatrix::new(0, n + 1);
        for (r, b) in self.data.iter().zip(rhs) {
            let mut row = r.clone();
            row.push((n, b.clone()));
            aug.push_row(row);
        }
        let e = aug.echelon();
        if e.pivot_columns().contains(&n) {
            return None;
        }
        let mut x = vec![Scalar::zero(); n];
        for (col, row) in e.pivot_columns().iter().zip(&e.rows) {
            let p = lookup(row, *col).expect("pivot entry");
            let b = lookup(row, n).cloned().unwrap_or_default();
            x[*col] = Scalar::new(b, p.clone());
        }
        Some(Solution { x, nullity: n - e.rank() })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub x: Vec<Scalar>,
    /// Dimension of the solution space; zero means `x` is the unique solution.
    pub nullity: usize,
}

/// Fully reduced echelon form over the integers.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    rows: Vec<IntRow>,
    /// pivot column of each row, parallel to `rows`
    pivots: Vec<usize>,
    by_pivot: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Self { cols, rows: Vec::new(), pivots: Vec::new(), by_pivot: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivots
    }

    /// Inserts a rational row. Returns true if the rank increased.
    pub fn insert_rational(&mut self, row: &[(usize, Scalar)]) -> bool {
        self.insert(to_primitive(row))
    }

    /// Inserts an integer row. Returns true if the rank increased.
    fn insert(&mut self, mut r: IntRow) -> bool {
        r = self.reduce(r);
        if r.is_empty() {
            return false;
        }
        let (pc, pv) = r[0].clone();
        // clear the new pivot column from existing rows
        for i in 0..self.rows.len() {
            if let Some(v) = lookup(&self.rows[i], pc).cloned() {
                self.rows[i] = eliminate(&self.rows[i], &v, &r, &pv);
            }
        }
        self.by_pivot.insert(pc, self.rows.len());
        self.pivots.push(pc);
        self.rows.push(r);
        true
    }

    /// Reduces `r` against every pivot row; the result has no pivot-column entries.
    fn reduce(&self, mut r: IntRow) -> IntRow {
        loop {
            let hit = r.iter().find_map(|(c, v)| self.by_pivot.get(c).map(|&i| (i, *c, v.clone())));
            let Some((i, c, v)) = hit else { break };
            let p = lookup(&self.rows[i], c).expect("pivot entry").clone();
            r = eliminate(&r, &v, &self.rows[i], &p);
        }
        r
    }

    /// Whether `row` lies in the row space.
    pub fn contains(&self, row: &[(usize, Scalar)]) -> bool {
        self.reduce(to_primitive(row)).is_empty()
    }

    /// Rows of the reduced echelon form, normalized to pivot 1, sorted by pivot.
    pub fn reduced_rows(&self) -> Vec<Vec<(usize, Scalar)>> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        order
            .into_iter()
            .map(|i| {
                let p = lookup(&self.rows[i], self.pivots[i]).expect("pivot entry").clone();
                self.rows[i].iter().map(|(c, v)| (*c, Scalar::new(v.clone(), p.clone()))).collect()
            })
            .collect()
    }

    pub fn kernel(&self) -> Vec<Vec<(usize, Scalar)>> {
        let mut free_cols: Vec<usize> = (0..self.cols).filter(|c| !self.by_pivot.contains_key(c)).collect();
        free_cols.sort_unstable();
        // column f -> list of (pivot col, -entry/pivot)
        let mut by_free: BTreeMap<usize, Vec<(usize, Scalar)>> = BTreeMap::new();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let p = lookup(row, pc).expect("pivot entry");
            for (c, v) in row {
                if *c != pc {
                    by_free.entry(*c).or_default().push((pc, -Scalar::new(v.clone(), p.clone())));
                }
            }
        }
        free_cols
            .into_iter()
            .map(|f| {
                let mut v = by_free.remove(&f).unwrap_or_default();
                v.push((f, Scalar::one()));
                v.sort_by_key(|(c, _)| *c);
                v
            })
            .collect()
    }
}

fn lookup(row: &IntRow, col: usize) -> Option<&BigInt> {
    row.binary_search_by_key(&col, |(c, _)| *c).ok().map(|i| &row[i].1)
}

/// `(p/g) * r - (v/g) * pivot_row` made primitive, where `v = r[col]`, `p = pivot_row[col]`.
fn eliminate(r: &IntRow, v: &BigInt, pivot_row: &IntRow, p: &BigInt) -> IntRow {
    let g = v.gcd(p);
    let fr = p / &g;
    let fp = v / &g;
    let mut out = Vec::with_capacity(r.len() + pivot_row.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < pivot_row.len() {
        let ci = r.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cj = pivot_row.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        let (c, val) = if ci < cj {
            i += 1;
            (ci, &r[i - 1].1 * &fr)
        } else if cj < ci {
            j += 1;
            (cj, -(&pivot_row[j - 1].1 * &fp))
        } else {
            i += 1;
            j += 1;
            (ci, &r[i - 1].1 * &fr - &pivot_row[j - 1].1 * &fp)
        };
        if !val.is_zero() {
            out.push((c, val));
        }
    }
    make_primitive(out)
}

fn make_primitive(mut r: IntRow) -> IntRow {
    let mut g = BigInt::zero();
    for (_, v) in &r {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    if r.first().map(|(_, v)| v.is_negative()).unwrap_or(false) {
        g = -g;
    }
    if !g.is_zero() && g != BigInt::one() {
        for (_, v) in r.iter_mut() {
            *v = &*v / &g;
        }
    }
    r
}

fn to_primitive(row: &[(usize, Scalar)]) -> IntRow {
    let mut l = BigInt::one();
    for (_, v) in row {
        l = l.lcm(v.denom());
    }
    let mut r: IntRow =
        row.iter().filter(|(_, v)| !v.is_zero()).map(|(c, v)| (*c, v.numer() * (&l / v.denom()))).collect();
    r.sort_by_key(|(c, _)| *c);
    make_primitive(r)
}

/// Coordinates of a list of combinations against a shared, sorted key index.
pub struct CoordinateTable<K> {
    pub keys: Vec<K>,
    pub matrix: SparseMatrix,
}

impl<K: Ord + Clone + Hash> CoordinateTable<K> {
    /// Rows are the given elements; columns are every key touched, in key order.
    pub fn new<'a>(elements: impl IntoIterator<Item = &'a Combination<K>>) -> Self
    where
        K: 'a,
    {
        let elements: Vec<&Combination<K>> = elements.into_iter().collect();
        let mut keys: Vec<K> = elements.iter().flat_map(|e| e.keys().cloned()).collect();
        keys.sort();
        keys.dedup();
        let index: HashMap<&K, usize> = keys.iter().enumerate().map(|(i, k)| (k, i)).collect();
        let rows = elements.iter().map(|e| e.iter().map(|(k, c)| (index[k], c.clone())).collect()).collect();
        let matrix = SparseMatrix::from_rows(keys.len(), rows);
        Self { keys, matrix }
    }
}

/// Exact rank of a family of combinations.
pub fn rank_of<'a, K: Ord + Clone + Hash + 'a>(elements: impl IntoIterator<Item = &'a Combination<K>>) -> usize {
    CoordinateTable::new(elements).matrix.rank()
}

/// Reduced echelon basis of the span of `elements`, sorted by leading key.
pub fn reduced_basis<K: Ord + Clone + Hash>(elements: &[Combination<K>]) -> Vec<Combination<K>> {
    let table = CoordinateTable::new(elements);
    table
        .matrix
        .echelon()
        .reduced_rows()
        .into_iter()
        .map(|r| r.into_iter().map(|(c, v)| (table.keys[c].clone(), v)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::{int, q};

    fn dense(rows: &[&[i64]]) -> SparseMatrix {
        let cols = rows[0].len();
        SparseMatrix::from_rows(
            cols,
            rows.iter().map(|r| r.iter().enumerate().map(|(c, v)| (c, int(*v))).collect()).collect(),
        )
    }

    fn apply(m: &SparseMatrix, x: &[(usize, Scalar)]) -> Vec<Scalar> {
        let mut dense_x = vec![Scalar::zero(); m.cols()];
        for (c, v) in x {
            dense_x[*c] = v.clone();
        }
        (0..m.rows()).map(|i| m.row(i).iter().map(|(c, v)| v * &dense_x[*c]).sum()).collect()
    }

    #[test]
    fn rank_of_singular_matrix() {
        let m = dense(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(apply(&m, &k[0]).iter().all(Zero::is_zero));
        // kernel normalized at the free column
        assert_eq!(k[0], vec![(0, int(1)), (1, int(-2)), (2, int(1))]);
    }

    #[test]
    fn empty_and_zero_matrices() {
        let m = SparseMatrix::new(3, 4);
        assert_eq!(m.rank(), 0);
        assert_eq!(m.kernel().len(), 4);
        let m = SparseMatrix::new(0, 0);
        assert_eq!(m.rank(), 0);
    }

    #[test]
    fn rank_independent_of_column_order() {
        let m = dense(&[&[0, 2, 0, 1, 3], &[1, 0, 1, 0, 0], &[1, 2, 1, 1, 3], &[0, 0, 5, 0, 1]]);
        let r = m.rank();
        assert_eq!(r, 3);
        let p = m.permute_columns(&[4, 2, 0, 3, 1]);
        assert_eq!(p.rank(), r);
        assert_eq!(m.transpose().rank(), r);
    }

    #[test]
    fn solve_unique_and_inconsistent() {
        let m = SparseMatrix::from_rows(2, vec![vec![(0, q(1, 2)), (1, int(1))], vec![(0, int(1)), (1, int(-1))]]);
        let s = m.solve(&[int(2), int(1)]).unwrap();
        assert_eq!(s.nullity, 0);
        assert_eq!(s.x, vec![int(2), int(1)]);
        let m = dense(&[&[1, 1], &[2, 2]]);
        assert!(m.solve(&[int(1), int(3)]).is_none());
        assert_eq!(m.solve(&[int(1), int(2)]).unwrap().nullity, 1);
    }

    #[test]
    fn reduced_rows_have_unit_pivots() {
        let m = dense(&[&[2, 4, 6], &[1, 3, 5]]);
        let rr = m.echelon().reduced_rows();
        assert_eq!(rr[0], vec![(0, int(1)), (2, int(-1))]);
        assert_eq!(rr[1], vec![(1, int(1)), (2, int(2))]);
    }
}
