//! Sparse matrices over an exact field and exact rank computations.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exact::{Field, Rational};

/// Row-major sparse matrix. Stored entries are never zero.
#[derive(Clone, PartialEq, Debug)]
pub struct SparseMatrix<F> {
    ncols: usize,
    rows: Vec<BTreeMap<usize, F>>,
}

impl<F: Field> SparseMatrix<F> {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { ncols, rows: vec![BTreeMap::new(); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal((0..n).map(|_| F::one()).collect())
    }

    pub fn diagonal(diag: Vec<F>) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, d) in diag.into_iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    pub fn from_dense(dense: &[Vec<F>]) -> Self {
        let ncols = dense.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(dense.len(), ncols);
        for (i, row) in dense.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged dense matrix");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn to_dense(&self) -> Vec<Vec<F>> {
        self.rows
            .iter()
            .map(|row| {
                let mut out = vec![F::zero(); self.ncols];
                for (&j, v) in row {
                    out[j] = v.clone();
                }
                out
            })
            .collect()
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&F> {
        self.rows[i].get(&j)
    }

    /// Entry `(i, j)`, zero if not stored.
    pub fn entry(&self, i: usize, j: usize) -> F {
        self.get(i, j).cloned().unwrap_or_else(F::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        assert!(j < self.ncols, "column {j} out of range");
        if v.is_zero() {
            self.rows[i].remove(&j);
        } else {
            self.rows[i].insert(j, v);
        }
    }

    /// `self[i][j] += v`
    pub fn add_to(&mut self, i: usize, j: usize, v: F) {
        if v.is_zero() {
            return;
        }
        let cur = self.rows[i].remove(&j);
        let new = match cur {
            Some(c) => c + v,
            None => v,
        };
        self.set(i, j, new);
    }

    pub fn row(&self, i: usize) -> &BTreeMap<usize, F> {
        &self.rows[i]
    }

    /// Nonzero entries in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &F)> {
        self.rows.iter().enumerate().flat_map(|(i, row)| row.iter().map(move |(&j, v)| (i, j, v)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn is_diagonal(&self) -> bool {
        self.iter().all(|(i, j, _)| i == j)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.ncols, rhs.nrows(), "dimension mismatch in product");
        let mut out = Self::zeros(self.nrows(), rhs.ncols);
        for (i, row) in self.rows.iter().enumerate() {
            let mut acc: BTreeMap<usize, F> = BTreeMap::new();
            for (&k, a) in row {
                for (&j, b) in &rhs.rows[k] {
                    let p = a.clone() * b.clone();
                    match acc.remove(&j) {
                        Some(c) => {
                            acc.insert(j, c + p);
                        }
                        None => {
                            acc.insert(j, p);
                        }
                    }
                }
            }
            acc.retain(|_, v| !v.is_zero());
            out.rows[i] = acc;
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.ncols, v.len());
        self.rows
            .iter()
            .map(|row| row.iter().fold(F::zero(), |acc, (&j, a)| acc + a.clone() * v[j].clone()))
            .collect()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.nrows(), self.ncols), (rhs.nrows(), rhs.ncols), "dimension mismatch in sum");
        let mut out = self.clone();
        for (i, j, v) in rhs.iter() {
            out.add_to(i, j, v.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&-F::one()))
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zeros(self.nrows(), self.ncols);
        }
        let mut out = Self::zeros(self.nrows(), self.ncols);
        for (i, j, v) in self.iter() {
            out.set(i, j, v.clone() * c.clone());
        }
        out
    }

    /// `self · rhs − rhs · self`
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn pow(&self, e: u32) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.nrows());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.ncols, self.nrows());
        for (i, j, v) in self.iter() {
            out.set(j, i, v.clone());
        }
        out
    }

    /// The block with the given row and column indices, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let pos: BTreeMap<usize, usize> = cols.iter().enumerate().map(|(p, &c)| (c, p)).collect();
        let mut out = Self::zeros(rows.len(), cols.len());
        for (ri, &r) in rows.iter().enumerate() {
            for (c, v) in &self.rows[r] {
                if let Some(&p) = pos.get(c) {
                    out.set(ri, p, v.clone());
                }
            }
        }
        out
    }

    /// Entrywise image under a fallible map; zero images are dropped.
    pub fn try_map<G: Field, E>(&self, mut f: impl FnMut(usize, usize, &F) -> Result<G, E>) -> Result<SparseMatrix<G>, E> {
        let mut out = SparseMatrix::zeros(self.nrows(), self.ncols);
        for (i, j, v) in self.iter() {
            out.set(i, j, f(i, j, v)?);
        }
        Ok(out)
    }

    pub fn map<G: Field>(&self, mut f: impl FnMut(&F) -> G) -> SparseMatrix<G> {
        self.try_map::<G, core::convert::Infallible>(|_, _, v| Ok(f(v))).unwrap_or_else(|e| match e {})
    }

    pub fn rank(&self) -> usize {
        rank(self.to_dense())
    }
}

impl<F: Field> fmt::Display for SparseMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_dense() {
            let mut first = true;
            write!(f, "[")?;
            for v in row {
                if !first {
                    write!(f, ", ")?;
                }
                first = false;
                write!(f, "{v}")?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Reduced row echelon form by Gauss-Jordan elimination. Returns the nonzero
/// rows and their pivot columns.
pub fn rref<F: Field>(mut rows: Vec<Vec<F>>) -> (Vec<Vec<F>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv();
        for v in rows[r].iter_mut() {
            if !v.is_zero() {
                *v = v.clone() * inv.clone();
            }
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for j in c..ncols {
                if !rows[r][j].is_zero() {
                    rows[i][j] = rows[i][j].clone() - f.clone() * rows[r][j].clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Incrementally built row echelon basis of a subspace of `F^dim`.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    dim: usize,
    // each row is normalised to 1 at its pivot
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> Echelon<F> {
    pub fn new(dim: usize) -> Self {
        Echelon { dim, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// `v` minus its projection along the stored pivots.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.dim);
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            if w[*p].is_zero() {
                continue;
            }
            let f = w[*p].clone();
            for (j, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    w[j] = w[j].clone() - f.clone() * x.clone();
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &[F]) -> bool {
        let w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].inv();
        let w: Vec<F> = w.into_iter().map(|x| if x.is_zero() { x } else { x * inv.clone() }).collect();
        // keep earlier rows free of the new pivot
        for (_, row) in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (j, x) in w.iter().enumerate() {
                if !x.is_zero() {
                    row[j] = row[j].clone() - f.clone() * x.clone();
                }
            }
        }
        self.rows.push((p, w));
        true
    }
}

/// Determinant of a square matrix by Gaussian elimination.
pub fn determinant<F: Field>(mut rows: Vec<Vec<F>>) -> F {
    let n = rows.len();
    let mut det = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !rows[i][c].is_zero()) else {
            return F::zero();
        };
        if p != c {
            rows.swap(c, p);
            det = -det;
        }
        let piv = rows[c][c].clone();
        det = det * piv.clone();
        let inv = piv.inv();
        for i in c + 1..n {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone() * inv.clone();
            for j in c..n {
                if !rows[c][j].is_zero() {
                    rows[i][j] = rows[i][j].clone() - f.clone() * rows[c][j].clone();
                }
            }
        }
    }
    det
}

/// Rank over the field by Gaussian elimination.
pub fn rank<F: Field>(rows: Vec<Vec<F>>) -> usize {
    rref(rows).1.len()
}

/// Basis of the right kernel `{v : M v = 0}` of an `nrows × ncols` matrix.
pub fn nullspace<F: Field>(rows: Vec<Vec<F>>, ncols: usize) -> Vec<Vec<F>> {
    let (red, pivots) = rref(rows);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![F::zero(); ncols];
        v[free] = F::one();
        for (row, &p) in red.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Rank of a rational matrix by fraction-free (Bareiss) elimination over the
/// integers, after clearing denominators row by row.
pub fn fraction_free_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..m.len() {
            for j in c + 1..ncols {
                let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                // exact by Sylvester's identity
                debug_assert!((&v % &prev).is_zero());
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}
