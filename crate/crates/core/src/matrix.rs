//! Dense matrices over the rationals with exact, arbitrary-precision entries.
//!
//! Matrices are immutable values: every operation returns a fresh matrix.
//! Indices passed to [`Matrix::get`] are 0-based; anything that talks about
//! vertices (such as [`Matrix::support`]) uses 1-based labels.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational scalar, always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Builds a rational from an integer numerator and denominator.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Builds an integral rational.
pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, order, |i, j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    /// Builds a matrix from a row-major grid; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return Err(Error::Malformed(format!(
                "row {} has {} entries, expected {}",
                bad + 1,
                rows[bad].len(),
                cols
            )));
        }
        let n_rows = rows.len();
        Ok(Matrix {
            rows: n_rows,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_integers<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&v| int(v)).collect())
                .collect(),
        )
    }

    /// Permutation matrix `P` with `P[perm[i]][i] = 1`, so that `P A Pᵀ` moves
    /// entry `(i, j)` of `A` to `(perm[i], perm[j])`.
    ///
    /// `perm` is 0-based and must be a permutation of `0..perm.len()`.
    pub fn permutation(perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Malformed(format!("{perm:?} is not a permutation")));
            }
        }
        Ok(Self::from_fn(n, n, |i, j| {
            if perm[j] == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        }))
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry at 0-based position `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[Rational] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|e| e.is_integer())
    }

    /// Nonzero positions as 1-based `(row, col)` pairs in lexicographic order.
    pub fn support(&self) -> Vec<(usize, usize)> {
        (0..self.rows)
            .flat_map(|i| (0..self.cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.get(i, j).is_zero())
            .map(|(i, j)| (i + 1, j + 1))
            .collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    pub fn trace(&self) -> Result<Rational> {
        self.require_square("trace")?;
        Ok((0..self.rows).map(|i| self.get(i, i)).sum())
    }

    pub fn add(&self, other: &Matrix) -> Result<Self> {
        self.require_same_shape("add", other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Self> {
        self.require_same_shape("sub", other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Exact product `self · other`.
    pub fn mul(&self, other: &Matrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(self.mismatch("mul", other));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let out_row = &mut out.entries[i * other.cols..(i + 1) * other.cols];
            for (k, a) in self.row(i).iter().enumerate() {
                // Adjacency powers are sparse; skipping zeros dominates the cost.
                if a.is_zero() {
                    continue;
                }
                for (slot, b) in out_row.iter_mut().zip(other.row(k)) {
                    if !b.is_zero() {
                        *slot += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self^exponent` by repeated squaring; `self^0` is the identity.
    pub fn pow(&self, exponent: u64) -> Result<Self> {
        self.require_square("pow")?;
        let mut result = Matrix::identity(self.rows);
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Exact rank by fraction-free (Bareiss) elimination on an integer copy.
    pub fn rank(&self) -> usize {
        let mut a = self.integer_rows();
        let (rows, cols) = (self.rows, self.cols);
        let mut prev = BigInt::one();
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, pivot);
            for i in rank + 1..rows {
                let factor = a[i][col].clone();
                for j in col + 1..cols {
                    let value = &a[rank][col] * &a[i][j] - &factor * &a[rank][j];
                    a[i][j] = exact_div(value, &prev);
                }
                a[i][col] = BigInt::zero();
            }
            prev = a[rank][col].clone();
            rank += 1;
        }
        rank
    }

    /// Exact inverse by fraction-free Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        self.require_square("inverse")?;
        let n = self.rows;
        // Row i was scaled by row_scale[i] to clear denominators: A_int = L·A,
        // hence A⁻¹ = A_int⁻¹·L.
        let row_scale: Vec<BigInt> = (0..n).map(|i| row_denominator_lcm(self.row(i))).collect();
        let mut a: Vec<Vec<BigInt>> = self
            .integer_rows()
            .into_iter()
            .enumerate()
            .map(|(i, mut row)| {
                row.extend((0..n).map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                }));
                row
            })
            .collect();

        let mut prev = BigInt::one();
        for k in 0..n {
            let pivot = (k..n)
                .find(|&r| !a[r][k].is_zero())
                .ok_or(Error::Singular)?;
            a.swap(k, pivot);
            for i in (0..n).filter(|&i| i != k) {
                let factor = a[i][k].clone();
                for j in (0..2 * n).filter(|&j| j != k) {
                    let value = &a[k][k] * &a[i][j] - &factor * &a[k][j];
                    a[i][j] = exact_div(value, &prev);
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }

        Ok(Self::from_fn(n, n, |i, j| {
            Rational::new(&a[i][n + j] * &row_scale[j], a[i][i].clone())
        }))
    }

    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = row_denominator_lcm(row);
                row.iter().map(|e| e.numer() * (&l / e.denom())).collect()
            })
            .collect()
    }

    pub(crate) fn require_square(&self, op: &'static str) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                op,
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    fn require_same_shape(&self, op: &'static str, other: &Matrix) -> Result<()> {
        if self.shape() == other.shape() {
            Ok(())
        } else {
            Err(self.mismatch(op, other))
        }
    }

    fn mismatch(&self, op: &'static str, other: &Matrix) -> Error {
        Error::DimensionMismatch {
            op,
            left_rows: self.rows,
            left_cols: self.cols,
            right_rows: other.rows,
            right_cols: other.cols,
        }
    }

    /// JSON form: `rows`, `cols`, and `entries` as strings `"p/q"` or `"p"`.
    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            rows: self.rows,
            cols: self.cols,
            entries: (0..self.rows)
                .map(|i| self.row(i).iter().map(ToString::to_string).collect())
                .collect(),
        }
    }

    pub fn from_json(json: &MatrixJson) -> Result<Self> {
        if json.entries.len() != json.rows {
            return Err(Error::Malformed(format!(
                "declared {} rows but found {}",
                json.rows,
                json.entries.len()
            )));
        }
        let rows = json
            .entries
            .iter()
            .enumerate()
            .map(|(i, row)| {
                if row.len() != json.cols {
                    return Err(Error::Malformed(format!(
                        "row {} has {} entries, declared {} columns",
                        i + 1,
                        row.len(),
                        json.cols
                    )));
                }
                row.iter().map(|s| parse_rational(s)).collect()
            })
            .collect::<Result<Vec<Vec<Rational>>>>()?;
        let mut m = Self::from_rows(rows)?;
        m.cols = json.cols;
        Ok(m)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("matrix JSON is always serializable")
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        Self::from_json(&serde_json::from_str(text)?)
    }

    /// Headerless CSV, one line per row. Only integer matrices can be written.
    pub fn to_csv(&self) -> Result<String> {
        let mut out = String::new();
        for i in 0..self.rows {
            let mut line = Vec::with_capacity(self.cols);
            for (j, e) in self.row(i).iter().enumerate() {
                if !e.is_integer() {
                    return Err(Error::NonIntegerEntry {
                        row: i + 1,
                        col: j + 1,
                        value: e.to_string(),
                    });
                }
                line.push(e.numer().to_string());
            }
            out.push_str(&line.join(","));
            out.push('\n');
        }
        Ok(out)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (row, col): (usize, usize)) -> &Rational {
        self.get(row, col)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Serialized matrix layout shared by every JSON output of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

/// Parses `"p/q"` or `"p"`; the result is reduced to lowest terms.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Malformed(format!("{text:?} is not a rational number"));
    match text.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Malformed(format!("{text:?} has a zero denominator")));
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(text.parse().map_err(|_| bad())?)),
    }
}

fn row_denominator_lcm(row: &[Rational]) -> BigInt {
    row.iter()
        .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()))
        .abs()
}

fn exact_div(value: BigInt, divisor: &BigInt) -> BigInt {
    let (q, r) = value.div_rem(divisor);
    debug_assert!(
        r.is_zero(),
        "fraction-free elimination produced an inexact division"
    );
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn windmill_2_3() -> Matrix {
        // edges (1,2),(2,3),(3,1),(1,4),(4,5),(5,1)
        Matrix::from_integers(&[
            [0, 1, 0, 1, 0],
            [0, 0, 1, 0, 0],
            [1, 0, 0, 0, 0],
            [0, 0, 0, 0, 1],
            [1, 0, 0, 0, 0],
        ])
        .unwrap()
    }

    #[test]
    fn identity_and_zero_products() {
        let a = Matrix::from_integers(&[[1, -2, 3], [0, 4, 5], [7, 0, 9]]).unwrap();
        assert_eq!(Matrix::identity(3).mul(&a).unwrap(), a);
        assert_eq!(a.mul(&Matrix::zeros(3, 3)).unwrap(), Matrix::zeros(3, 3));
    }

    #[test]
    fn mul_rejects_mismatched_shapes() {
        let err = Matrix::zeros(2, 3).mul(&Matrix::zeros(2, 3)).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("2x3"), "{msg}");
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn square_of_small_windmill() {
        // Length-2 walks in D²₃, listed by hand from the edge set.
        let expected: Vec<(usize, usize)> = vec![
            (1, 3),
            (1, 5),
            (2, 1),
            (3, 2),
            (3, 4),
            (4, 1),
            (5, 2),
            (5, 4),
        ];
        let sq = windmill_2_3().pow(2).unwrap();
        assert_eq!(sq.support(), expected);
        assert!(sq.entries().iter().all(|e| e.is_zero() || *e == int(1)));
    }

    #[test]
    fn pow_edge_cases() {
        let m = windmill_2_3();
        assert_eq!(m.pow(0).unwrap(), Matrix::identity(5));
        assert_eq!(m.pow(1).unwrap(), m);
        assert_eq!(m.pow(5).unwrap(), m.pow(2).unwrap().scale(&int(2)));
        assert!(matches!(
            Matrix::zeros(2, 3).pow(2),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::zeros(4, 3).rank(), 0);
        assert_eq!(Matrix::identity(6).rank(), 6);
        assert_eq!(windmill_2_3().rank(), 4);
        let fractional = Matrix::from_rows(vec![
            vec![ratio(1, 2), ratio(1, 3)],
            vec![ratio(3, 2), int(1)],
        ])
        .unwrap();
        assert_eq!(fractional.rank(), 1);
        // zero column in the middle exercises column skipping
        let skip = Matrix::from_integers(&[[1, 0, 2, 3], [2, 0, 4, 7], [3, 0, 6, 10]]).unwrap();
        assert_eq!(skip.rank(), 2);
    }

    #[test]
    fn inverse_of_rational_matrix() {
        let a = Matrix::from_rows(vec![
            vec![ratio(1, 2), int(2), int(0)],
            vec![int(-1), ratio(2, 3), int(4)],
            vec![int(3), int(0), ratio(-5, 7)],
        ])
        .unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(3));
        assert_eq!(inv.mul(&a).unwrap(), Matrix::identity(3));
        assert!(matches!(windmill_2_3().inverse(), Err(Error::Singular)));
    }

    #[test]
    fn permutation_conjugation_moves_entries() {
        let a = windmill_2_3();
        let perm = [2, 0, 4, 1, 3];
        let p = Matrix::permutation(&perm).unwrap();
        let b = p.mul(&a).unwrap().mul(&p.transpose()).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(b[(perm[i], perm[j])], a[(i, j)]);
            }
        }
        assert!(Matrix::permutation(&[0, 0, 1]).is_err());
    }

    #[test]
    fn json_and_csv_formats() {
        let a =
            Matrix::from_rows(vec![vec![ratio(2, 4), int(-3)], vec![int(0), ratio(7, 1)]]).unwrap();
        let json = a.to_json();
        assert_eq!(json.entries, vec![vec!["1/2", "-3"], vec!["0", "7"]]);
        assert_eq!(Matrix::from_json_str(&a.to_json_string()).unwrap(), a);
        assert!(matches!(
            a.to_csv(),
            Err(Error::NonIntegerEntry { row: 1, col: 1, .. })
        ));
        let p = Matrix::from_integers(&[[0, 1, 0], [0, 0, 1], [1, 0, 0]]).unwrap();
        assert_eq!(p.to_csv().unwrap(), "0,1,0\n0,0,1\n1,0,0\n");
    }

    #[test]
    fn json_rejects_bad_input() {
        assert!(Matrix::from_json_str(r#"{"rows":2,"cols":1,"entries":[["1"]]}"#).is_err());
        assert!(Matrix::from_json_str(r#"{"rows":1,"cols":1,"entries":[["1/0"]]}"#).is_err());
        assert!(Matrix::from_json_str(r#"{"rows":1,"cols":2,"entries":[["1","x"]]}"#).is_err());
        let empty = Matrix::from_json_str(r#"{"rows":0,"cols":0,"entries":[]}"#).unwrap();
        assert_eq!(empty.shape(), (0, 0));
    }
}
