//! Exact rational vectors, matrices and canonical subspaces.
//!
//! Every subspace is stored by its reduced row echelon basis, so two
//! subspaces are equal exactly when their `basis` fields are equal.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact field element used everywhere in the crate.
pub type Scalar = BigRational;

/// Column vector, stored as a plain sequence of entries.
pub type Vector = Vec<Scalar>;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `num/den` as a reduced rational. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn vector_from_ints(values: &[i64]) -> Vector {
    values.iter().map(|&v| int(v)).collect()
}

/// Renders a scalar as `"n"` for integers and `"n/d"` otherwise.
pub fn format_scalar(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `"n"` or `"n/d"` (optional sign on the numerator). Decimal points
/// and exponents are rejected.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not an exact rational: {text:?}"));
    let parse_int = |s: &str| -> Result<BigInt> {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse::<BigInt>().map_err(|_| bad())
    };
    match text.split_once('/') {
        None => Ok(Scalar::from_integer(parse_int(text)?)),
        Some((n, d)) => {
            let num = parse_int(n)?;
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {text:?}")));
            }
            Ok(Scalar::new(num, den))
        }
    }
}

pub fn dot(x: &[Scalar], y: &[Scalar]) -> Scalar {
    debug_assert_eq!(x.len(), y.len());
    x.iter()
        .zip(y)
        .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
}

pub fn add_vectors(x: &[Scalar], y: &[Scalar]) -> Vector {
    debug_assert_eq!(x.len(), y.len());
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn sub_vectors(x: &[Scalar], y: &[Scalar]) -> Vector {
    debug_assert_eq!(x.len(), y.len());
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn scale_vector(c: &Scalar, x: &[Scalar]) -> Vector {
    x.iter().map(|a| c * a).collect()
}

pub fn neg_vector(x: &[Scalar]) -> Vector {
    x.iter().map(|a| -a).collect()
}

pub fn is_zero_vector(x: &[Scalar]) -> bool {
    x.iter().all(Zero::is_zero)
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Scalar::one();
    v
}

/// Dense row-major matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Scalar::one();
        }
        m
    }

    /// Square diagonal matrix.
    pub fn diagonal(values: &[Scalar]) -> Self {
        let n = values.len();
        let mut m = Matrix::zeros(n, n);
        for (i, v) in values.iter().enumerate() {
            m.entries[i * n + i] = v.clone();
        }
        m
    }

    /// Builds a matrix from row vectors. `cols` is needed for the zero-row case.
    pub fn from_rows(rows: Vec<Vector>, cols: usize) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        let n_rows = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Matrix {
            rows: n_rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vector], rows: usize) -> Result<Self> {
        let cols = columns.len();
        let mut m = Matrix::zeros(rows, cols);
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: c.len(),
                });
            }
            for (i, x) in c.iter().enumerate() {
                m.entries[i * cols + j] = x.clone();
            }
        }
        Ok(m)
    }

    /// Integer matrix literal, mostly for fixtures and tests. Panics on ragged input.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows.iter().map(|r| vector_from_ints(r)).collect();
        Matrix::from_rows(data, cols).expect("ragged integer matrix literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column_vectors(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i..self.cols).all(|j| *self.get(i, j) == -self.get(j, i)))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn scaled(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| c * x).collect(),
        }
    }

    /// `self · x`. Panics if the lengths disagree.
    pub fn mul_vec(&self, x: &[Scalar]) -> Vector {
        assert_eq!(self.cols, x.len(), "matrix-vector dimension mismatch");
        (0..self.rows).map(|i| dot(self.row(i), x)).collect()
    }

    /// Sub-block with top-left corner `(r0, c0)` and shape `h × w`.
    pub fn block(&self, r0: usize, c0: usize, h: usize, w: usize) -> Matrix {
        let mut b = Matrix::zeros(h, w);
        for i in 0..h {
            for j in 0..w {
                b.entries[i * w + j] = self.get(r0 + i, c0 + j).clone();
            }
        }
        b
    }

    /// Reduced row echelon form and the pivot column of each nonzero row.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows = self.row_vectors();
        let pivots = rref_in_place(&mut rows, self.cols);
        rows.truncate(pivots.len());
        let mut out = Matrix::zeros(self.rows, self.cols);
        for (i, r) in rows.into_iter().enumerate() {
            for (j, x) in r.into_iter().enumerate() {
                out.entries[i * self.cols + j] = x;
            }
        }
        (out, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.row_vectors();
        rref_in_place(&mut rows, self.cols).len()
    }

    /// Exact inverse by Gauss-Jordan; `None` for singular or non-square input.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut rows: Vec<Vector> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend(unit_vector(n, i));
                r
            })
            .collect();
        let pivots = rref_in_place(&mut rows, 2 * n);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let inv_rows = rows.into_iter().map(|r| r[n..].to_vec()).collect();
        Some(Matrix::from_rows(inv_rows, n).expect("square inverse"))
    }

    /// Determinant via fraction-exact elimination.
    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.row_vectors();
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Scalar::zero();
            };
            if p != col {
                a.swap(p, col);
                det = -det;
            }
            let pivot = a[col][col].clone();
            det *= &pivot;
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let f = &a[r][col] / &pivot;
                for c in col..n {
                    let delta = &f * &a[col][c];
                    a[r][c] -= delta;
                }
            }
        }
        det
    }
}

/// Row-reduces `rows` in place and returns the pivot columns. Zero rows are
/// moved to the end; the first `pivots.len()` rows form the RREF basis.
fn rref_in_place(rows: &mut [Vector], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        if !inv.is_one() {
            for x in rows[r].iter_mut() {
                *x *= &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(format_scalar).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix sum shape mismatch"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix difference shape mismatch"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }
}

/// A linear subspace of `Q^n` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: (0..ambient_dim)
                .map(|i| unit_vector(ambient_dim, i))
                .collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Basis as the rows of a `dim × ambient_dim` matrix.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(self.basis.clone(), self.ambient_dim)
            .expect("basis rows have ambient length")
    }

    /// Membership test by reducing `v` against the echelon basis.
    pub fn contains(&self, v: &[Scalar]) -> bool {
        if v.len() != self.ambient_dim {
            return false;
        }
        let mut r = v.to_vec();
        for b in &self.basis {
            let pivot = b
                .iter()
                .position(|x| !x.is_zero())
                .expect("canonical basis has no zero rows");
            if r[pivot].is_zero() {
                continue;
            }
            let f = r[pivot].clone();
            for (x, y) in r.iter_mut().zip(b) {
                *x -= &f * y;
            }
        }
        is_zero_vector(&r)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|b| other.contains(b))
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.basis.is_empty() {
            return write!(f, "{{0}} in Q^{}", self.ambient_dim);
        }
        let rows: Vec<String> = self
            .basis
            .iter()
            .map(|b| {
                format!(
                    "({})",
                    b.iter().map(format_scalar).collect::<Vec<_>>().join(",")
                )
            })
            .collect();
        write!(f, "span{{{}}}", rows.join(", "))
    }
}

/// Canonical subspace spanned by `vectors`.
pub fn rref_basis(vectors: &[Vector], ambient_dim: usize) -> Result<Subspace> {
    if let Some(bad) = vectors.iter().find(|v| v.len() != ambient_dim) {
        return Err(Error::DimensionMismatch {
            expected: ambient_dim,
            found: bad.len(),
        });
    }
    let mut rows = vectors.to_vec();
    let pivots = rref_in_place(&mut rows, ambient_dim);
    rows.truncate(pivots.len());
    Ok(Subspace {
        ambient_dim,
        basis: rows,
    })
}

/// `{x : Mx = 0}`.
pub fn kernel(m: &Matrix) -> Subspace {
    let (r, pivots) = m.rref();
    let n = m.cols();
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut x = zero_vector(n);
        x[free] = Scalar::one();
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = -r.get(row, free);
        }
        basis.push(x);
    }
    rref_basis(&basis, n).expect("kernel vectors have column length")
}

/// Column space of `m`.
pub fn image(m: &Matrix) -> Subspace {
    rref_basis(&m.column_vectors(), m.rows()).expect("columns have row length")
}

pub fn sum_spaces(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    if a.ambient_dim != b.ambient_dim {
        return Err(Error::DimensionMismatch {
            expected: a.ambient_dim,
            found: b.ambient_dim,
        });
    }
    let mut all = a.basis.clone();
    all.extend(b.basis.iter().cloned());
    rref_basis(&all, a.ambient_dim)
}

/// Intersection from the kernel of the stacked bases `[A^T | -B^T]`.
pub fn intersect_spaces(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    if a.ambient_dim != b.ambient_dim {
        return Err(Error::DimensionMismatch {
            expected: a.ambient_dim,
            found: b.ambient_dim,
        });
    }
    let n = a.ambient_dim;
    let mut columns = a.basis.clone();
    columns.extend(b.basis.iter().map(|v| neg_vector(v)));
    let stacked = Matrix::from_columns(&columns, n)?;
    let coeffs = kernel(&stacked);
    let vectors: Vec<Vector> = coeffs
        .basis()
        .iter()
        .map(|c| {
            a.basis.iter().zip(c).fold(zero_vector(n), |acc, (v, t)| {
                add_vectors(&acc, &scale_vector(t, v))
            })
        })
        .collect();
    rref_basis(&vectors, n)
}

/// Some `x` with `Mx = b`, free variables set to zero; `None` when `b` is not
/// in the image of `M`. Panics if `b` has the wrong length.
pub fn solve_linear(m: &Matrix, b: &[Scalar]) -> Option<Vector> {
    assert_eq!(
        m.rows(),
        b.len(),
        "right-hand side length must equal row count"
    );
    let n = m.cols();
    let mut rows: Vec<Vector> = (0..m.rows())
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let pivots = rref_in_place(&mut rows, n + 1);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = zero_vector(n);
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = rows[row][n].clone();
    }
    Some(x)
}

/// Largest absolute numerator or denominator, handy for bounding entries.
pub fn height(x: &Scalar) -> BigInt {
    x.numer().abs().max(x.denom().clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(values: &[i64]) -> Vector {
        vector_from_ints(values)
    }

    fn a4() -> Matrix {
        Matrix::from_ints(&[&[0, -1, 1, 0], &[0, 0, 0, 1], &[0, 0, 0, 1], &[0, 0, 0, 0]])
    }

    fn span(vs: &[&[i64]], n: usize) -> Subspace {
        rref_basis(&vs.iter().map(|x| v(x)).collect::<Vec<_>>(), n).unwrap()
    }

    #[test]
    fn rref_basis_examples() {
        assert_eq!(span(&[&[2, 0], &[0, 0]], 2).basis(), &[v(&[1, 0])]);
        assert_eq!(
            span(&[&[1, 1], &[1, -1]], 2).basis(),
            &[v(&[1, 0]), v(&[0, 1])]
        );
        let s = span(&[&[0, 1, 1, 0], &[0, 2, 2, 0], &[1, 0, 0, 0]], 4);
        assert_eq!(s.basis(), &[v(&[1, 0, 0, 0]), v(&[0, 1, 1, 0])]);
    }

    #[test]
    fn rref_basis_rejects_ragged_input() {
        let err = rref_basis(&[v(&[1, 2]), v(&[1])], 2).unwrap_err();
        assert!(matches!(
            err,
            Error::DimensionMismatch {
                expected: 2,
                found: 1
            }
        ));
    }

    #[test]
    fn kernel_and_image_examples() {
        assert_eq!(
            kernel(&Matrix::from_ints(&[&[1, 0], &[0, 0]])),
            span(&[&[0, 1]], 2)
        );
        assert_eq!(kernel(&Matrix::zeros(2, 2)), Subspace::full(2));
        let expected = span(&[&[1, 0, 0, 0], &[0, 1, 1, 0]], 4);
        assert_eq!(kernel(&a4()), expected);
        assert_eq!(image(&Matrix::identity(3)), Subspace::full(3));
        assert_eq!(image(&Matrix::zeros(2, 2)), Subspace::zero(2));
        assert_eq!(image(&a4()), expected);
    }

    #[test]
    fn sum_and_intersection_examples() {
        let e12 = span(&[&[1, 0, 0], &[0, 1, 0]], 3);
        let e23 = span(&[&[0, 1, 0], &[0, 0, 1]], 3);
        assert_eq!(
            intersect_spaces(&e12, &e23).unwrap(),
            span(&[&[0, 1, 0]], 3)
        );
        assert_eq!(sum_spaces(&e12, &Subspace::zero(3)).unwrap(), e12);
        assert_eq!(intersect_spaces(&e12, &e12).unwrap(), e12);
        let both = intersect_spaces(&image(&a4()), &kernel(&a4())).unwrap();
        assert_eq!(both, span(&[&[1, 0, 0, 0], &[0, 1, 1, 0]], 4));
        assert!(sum_spaces(&e12, &Subspace::zero(2)).is_err());
        assert!(intersect_spaces(&e12, &Subspace::zero(4)).is_err());
    }

    #[test]
    fn solve_examples() {
        assert_eq!(
            solve_linear(&Matrix::identity(2), &v(&[3, 4])),
            Some(v(&[3, 4]))
        );
        assert_eq!(solve_linear(&Matrix::zeros(2, 2), &v(&[1, 0])), None);
        // canonical solution zeroes the free variables x1 and x3
        let b = v(&[-1, 0, 0, 0]);
        let x = solve_linear(&a4(), &b).unwrap();
        assert_eq!(x, v(&[0, 1, 0, 0]));
        assert_eq!(a4().mul_vec(&x), b);
        let other = v(&[0, 0, -1, 0]);
        assert_eq!(a4().mul_vec(&other), b);
        assert!(kernel(&a4()).contains(&sub_vectors(&x, &other)));
    }

    #[test]
    fn scalar_text_round_trip() {
        assert_eq!(parse_scalar("-3").unwrap(), int(-3));
        assert_eq!(parse_scalar("4/-6").unwrap(), frac(-2, 3));
        assert_eq!(format_scalar(&frac(-2, 3)), "-2/3");
        assert_eq!(format_scalar(&int(7)), "7");
        for bad in ["1.5", "1e3", "", "1/0", "a/2", "--1"] {
            assert!(parse_scalar(bad).is_err(), "{bad} should be rejected");
        }
    }

    #[test]
    fn inverse_and_determinant() {
        let m = Matrix::from_ints(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(2));
        assert_eq!(m.determinant(), int(1));
        assert!(a4().inverse().is_none());
        assert_eq!(a4().determinant(), int(0));
        let g = Matrix::from_ints(&[&[0, 0, 0, 1], &[0, 1, 0, 0], &[0, 0, -1, 0], &[1, 0, 0, 0]]);
        assert_eq!(g.determinant(), int(1));
    }

    #[test]
    fn membership() {
        let s = span(&[&[1, 0, 0, 0], &[0, 1, 1, 0]], 4);
        assert!(s.contains(&v(&[3, -2, -2, 0])));
        assert!(!s.contains(&v(&[0, 1, 0, 0])));
        assert!(!s.contains(&v(&[1, 0, 0])));
        assert!(Subspace::zero(4).is_subspace_of(&s));
        assert!(!Subspace::full(4).is_subspace_of(&s));
    }
}
