//! Exact rational scalars and the rank/kernel engine.
//!
//! Elimination runs on integer rows: every row is cleared of denominators
//! and kept primitive (content divided out) after each update, so entries
//! stay integral and small for the sparse, structured matrices produced by
//! cochain differentials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or `"p"`. A zero denominator is rejected.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let bad = || Error::InvalidScalar(text.to_string());
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Scalar::new(num, den))
}

/// Inverse of [`parse_scalar`]; integers print without a denominator.
pub fn format_scalar(q: &Scalar) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Dense row-major matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
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
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                got: bad.len(),
            });
        }
        let n = rows.len();
        Ok(Matrix {
            rows: n,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
        .expect("ragged integer matrix")
    }

    /// Builds a matrix from its columns; `rows` is needed when there are none.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Result<Self> {
        let mut m = Matrix::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    got: col.len(),
                });
            }
            for (r, x) in col.iter().enumerate() {
                m.set(r, c, x.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.entries)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn scale_row(&mut self, r: usize, factor: &Scalar) {
        for c in 0..self.cols {
            let v = self.get(r, c) * factor;
            self.set(r, c, v);
        }
    }

    /// Sub-matrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                m.set(i, j, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.entries[idx] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }

    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        kernel_basis(self)
    }
}

/// Integer row echelon form: `rows[k]` has its leading entry at `pivots[k]`.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

fn integer_row(row: &[Scalar]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .filter(|x| !x.is_zero())
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut out: Vec<BigInt> = row
        .iter()
        .map(|x| (x * Scalar::from_integer(lcm.clone())).to_integer())
        .collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut [BigInt]) {
    let content = row
        .iter()
        .filter(|x| !x.is_zero())
        .fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if content > BigInt::one() {
        for x in row.iter_mut() {
            if !x.is_zero() {
                *x /= &content;
            }
        }
    }
}

fn nonzero_count(row: &[BigInt]) -> usize {
    row.iter().filter(|x| !x.is_zero()).count()
}

fn echelon(m: &Matrix) -> Echelon {
    let mut work: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|r| integer_row(m.row(r)))
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    let mut rows = Vec::new();
    let mut pivots = Vec::new();
    for c in 0..m.cols {
        if work.is_empty() {
            break;
        }
        // Smallest pivot, then sparsest row, limits fill-in and growth.
        let choice = work
            .iter()
            .enumerate()
            .filter(|(_, r)| !r[c].is_zero())
            .min_by(|(_, a), (_, b)| {
                a[c].abs()
                    .cmp(&b[c].abs())
                    .then(nonzero_count(a).cmp(&nonzero_count(b)))
            })
            .map(|(i, _)| i);
        let Some(p) = choice else { continue };
        let pivot = work.swap_remove(p);
        for row in work.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let g = pivot[c].gcd(&row[c]);
            let keep = &pivot[c] / &g;
            let take = &row[c] / &g;
            for j in c..m.cols {
                let updated = &keep * &row[j] - &take * &pivot[j];
                row[j] = updated;
            }
            make_primitive(row);
        }
        work.retain(|r| r.iter().any(|x| !x.is_zero()));
        rows.push(pivot);
        pivots.push(c);
    }
    Echelon { rows, pivots }
}

pub fn rank(m: &Matrix) -> usize {
    echelon(m).pivots.len()
}

/// Basis of the right null space, one vector per free column with that
/// column's coordinate set to 1.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Scalar>> {
    let ech = echelon(m);
    let mut is_pivot = vec![false; m.cols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    (0..m.cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Scalar::zero(); m.cols];
            v[free] = Scalar::one();
            for (row, &p) in ech.rows.iter().zip(&ech.pivots).rev() {
                let mut s = Scalar::zero();
                for j in p + 1..m.cols {
                    if !row[j].is_zero() && !v[j].is_zero() {
                        s += Scalar::from_integer(row[j].clone()) * &v[j];
                    }
                }
                v[p] = -s / Scalar::from_integer(row[p].clone());
            }
            v
        })
        .collect()
}

/// `dim ker(d_out) - rank(d_in)` for consecutive differentials
/// `d_in: C^{n-1} -> C^n` and `d_out: C^n -> C^{n+1}`.
pub fn cohomology_dims(d_in: &Matrix, d_out: &Matrix) -> Result<usize> {
    if d_out.cols() != d_in.rows() {
        return Err(Error::DimensionMismatch {
            expected: d_out.cols(),
            got: d_in.rows(),
        });
    }
    if !d_out.mul(d_in)?.is_zero() {
        return Err(Error::CompositionNonzero);
    }
    let cocycles = d_out.cols() - rank(d_out);
    let boundaries = rank(d_in);
    Ok(cocycles - boundaries)
}
