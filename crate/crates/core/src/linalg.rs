//! Exact integer and rational matrices.
//!
//! [`IntMatrix`] is a small dense matrix over arbitrary-precision integers,
//! used for incidence matrices and K-theory transitions. [`QMatrix`] is a
//! sparse matrix over exact rationals; elements of the ultramatricial tower
//! and of the Leavitt components are mostly matrix units, so only nonzero
//! entries are stored.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn rational(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Dense square or rectangular matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix rows");
            for (j, v) in row.iter().enumerate() {
                m.data[i * c + j] = v.clone().into();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .filter(|&j| !self.get(i, j).is_zero())
                    .map(|j| self.get(i, j) * &v[j])
                    .sum()
            })
            .collect()
    }

    /// Exact power by repeated squaring.
    pub fn pow(&self, mut e: u32) -> IntMatrix {
        assert_eq!(self.rows, self.cols, "power of a non-square matrix");
        let mut base = self.clone();
        let mut acc = IntMatrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Conjugate by a vertex permutation: entry (σ(i), σ(j)) of the result is entry (i, j).
    pub fn permute(&self, sigma: &[usize]) -> IntMatrix {
        assert_eq!(self.rows, self.cols);
        let mut out = IntMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(sigma[i], sigma[j], self.get(i, j).clone());
            }
        }
        out
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Sparse matrix over exact rationals. Zero entries are never stored, so
/// structural equality is mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries.insert((i, i), Rational::one());
        }
        m
    }

    pub fn unit(rows: usize, cols: usize, r: usize, c: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        m.set(r, c, Rational::one());
        m
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix rows");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn from_ints(rows: &[Vec<i64>]) -> Self {
        let dense: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| rational(v)).collect())
            .collect();
        Self::from_dense(&dense)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        assert!(r < self.rows && c < self.cols, "entry ({r}, {c}) out of range");
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &Rational) {
        if v.is_zero() {
            return;
        }
        let sum = self.get(r, c) + v;
        self.set(r, c, sum);
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::zero(); self.cols]; self.rows];
        for (r, c, v) in self.iter() {
            out[r][c] = v.clone();
        }
        out
    }

    pub fn add(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.shape(), other.shape(), "matrix sum shape mismatch");
        let mut out = self.clone();
        for (r, c, v) in other.iter() {
            out.add_to(r, c, v);
        }
        out
    }

    pub fn sub(&self, other: &QMatrix) -> QMatrix {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> QMatrix {
        if s.is_zero() {
            return QMatrix::zeros(self.rows, self.cols);
        }
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|(&k, v)| (k, v * s)).collect(),
        }
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut by_row: BTreeMap<usize, Vec<(usize, &Rational)>> = BTreeMap::new();
        for (r, c, v) in other.iter() {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for (i, k, a) in self.iter() {
            if let Some(row) = by_row.get(&k) {
                for &(j, b) in row {
                    out.add_to(i, j, &(a * b));
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> QMatrix {
        QMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: self.entries.iter().map(|(&(r, c), v)| ((c, r), v.clone())).collect(),
        }
    }

    /// Copy `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn place(&mut self, r0: usize, c0: usize, block: &QMatrix) {
        assert!(
            r0 + block.rows <= self.rows && c0 + block.cols <= self.cols,
            "block does not fit"
        );
        for (r, c, v) in block.iter() {
            self.set(r0 + r, c0 + c, v.clone());
        }
    }

    pub fn rank(&self) -> usize {
        rank_of_rows(self.to_dense())
    }

    /// A left inverse `g` (so `g * self = I`) of an injective matrix, or `None`.
    pub fn left_inverse(&self) -> Option<QMatrix> {
        let (m, n) = self.shape();
        if n > m {
            return None;
        }
        if n == 0 {
            return Some(QMatrix::zeros(0, m));
        }
        // Choose n independent rows; the inverse of that square submatrix,
        // padded with zero columns, is a left inverse.
        let dense = self.to_dense();
        let mut chosen: Vec<usize> = Vec::new();
        let mut basis: Vec<Vec<Rational>> = Vec::new();
        for (r, row) in dense.iter().enumerate() {
            let mut candidate = basis.clone();
            candidate.push(row.clone());
            if rank_of_rows(candidate.clone()) == candidate.len() {
                basis = candidate;
                chosen.push(r);
                if chosen.len() == n {
                    break;
                }
            }
        }
        if chosen.len() < n {
            return None;
        }
        let inv = QMatrix::from_dense(&basis).inverse()?;
        let mut g = QMatrix::zeros(n, m);
        for (r, c, v) in inv.iter() {
            g.set(r, chosen[c], v.clone());
        }
        Some(g)
    }

    /// Gauss-Jordan inverse of a square matrix.
    pub fn inverse(&self) -> Option<QMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.to_dense();
        let mut inv = QMatrix::identity(n).to_dense();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            for j in 0..n {
                a[col][j] = &a[col][j] / &p;
                inv[col][j] = &inv[col][j] / &p;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for j in 0..n {
                        let t = &a[col][j] * &f;
                        a[r][j] -= t;
                        let t = &inv[col][j] * &f;
                        inv[r][j] -= t;
                    }
                }
            }
        }
        Some(QMatrix::from_dense(&inv))
    }

    pub fn is_identity(&self) -> bool {
        *self == QMatrix::identity(self.rows) && self.rows == self.cols
    }
}

/// Rank of a list of equal-length rational rows, by fraction-exact elimination.
pub fn rank_of_rows(mut rows: Vec<Vec<Rational>>) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let f = &rows[r][col] / &pivot;
            for j in col..width {
                let t = &rows[rank][j] * &f;
                rows[r][j] -= t;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Incremental row-space basis over the rationals for sparse vectors; used
/// to certify spans without materializing large dense systems.
#[derive(Clone, Debug, Default)]
pub struct SparseBasis {
    // pivot column -> reduced row with leading entry 1 at that column
    rows: BTreeMap<usize, BTreeMap<usize, Rational>>,
}

impl SparseBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Insert a vector; returns whether it enlarged the span.
    pub fn insert(&mut self, v: BTreeMap<usize, Rational>) -> bool {
        let mut v: BTreeMap<usize, Rational> = v.into_iter().filter(|(_, x)| !x.is_zero()).collect();
        loop {
            let Some((&lead, coeff)) = v.iter().next() else {
                return false;
            };
            match self.rows.get(&lead) {
                Some(row) => {
                    let f = coeff.clone();
                    for (&j, x) in row {
                        let t = x * &f;
                        let e = v.entry(j).or_insert_with(Rational::zero);
                        *e -= t;
                        if e.is_zero() {
                            v.remove(&j);
                        }
                    }
                }
                None => {
                    let inv = coeff.recip();
                    let row = v.into_iter().map(|(j, x)| (j, x * &inv)).collect();
                    self.rows.insert(lead, row);
                    return true;
                }
            }
        }
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows == 0 || self.cols == 0 {
            return write!(f, "[{}x{}]", self.rows, self.cols);
        }
        for (i, row) in self.to_dense().iter().enumerate() {
            let cells: Vec<String> = row.iter().map(fmt_rational).collect();
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parse "3", "-2", or "1/2".
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(BigRational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

pub fn all_nonnegative(v: &[BigInt]) -> bool {
    v.iter().all(|x| !x.is_negative())
}

/// JSON number when it fits in 64 bits, decimal string otherwise.
pub fn json_int(v: &BigInt) -> serde_json::Value {
    match i64::try_from(v) {
        Ok(x) => serde_json::json!(x),
        Err(_) => serde_json::json!(v.to_string()),
    }
}
