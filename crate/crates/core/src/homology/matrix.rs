use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact integer matrix stored column-wise; each column is a row-sorted list
/// of nonzero entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, BigInt)>>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        IntegerMatrix {
            rows: n,
            cols: n,
            columns: (0..n).map(|i| vec![(i, BigInt::one())]).collect(),
        }
    }

    /// Builds from row-major data; all rows must have equal length.
    pub fn from_rows<T: Into<BigInt> + Clone>(data: &[Vec<T>]) -> Result<Self> {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        if data.iter().any(|r| r.len() != cols) {
            return Err(Error::param("ragged matrix rows"));
        }
        let mut m = IntegerMatrix::zeros(rows, cols);
        for (r, row) in data.iter().enumerate() {
            for (c, x) in row.iter().enumerate() {
                let x: BigInt = x.clone().into();
                if !x.is_zero() {
                    m.columns[c].push((r, x));
                }
            }
        }
        Ok(m)
    }

    /// Builds from sparse columns; entries in each column must be strictly
    /// row-sorted and nonzero.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(usize, BigInt)>>) -> Result<Self> {
        for col in &columns {
            if col.windows(2).any(|w| w[0].0 >= w[1].0) {
                return Err(Error::param("column entries not strictly row-sorted"));
            }
            if col.iter().any(|(r, x)| *r >= rows || x.is_zero()) {
                return Err(Error::param("column entry out of range or zero"));
            }
        }
        Ok(IntegerMatrix {
            rows,
            cols: columns.len(),
            columns,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn column(&self, c: usize) -> &[(usize, BigInt)] {
        &self.columns[c]
    }

    pub(crate) fn into_columns(self) -> Vec<Vec<(usize, BigInt)>> {
        self.columns
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        let col = &self.columns[c];
        col.binary_search_by_key(&r, |e| e.0)
            .map_or_else(|_| BigInt::zero(), |i| col[i].1.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        let mut out = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, x) in col {
                out[*r][c] = x.clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &IntegerMatrix) -> Result<IntegerMatrix> {
        if self.cols != other.rows {
            return Err(Error::param(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let columns = other
            .columns
            .iter()
            .map(|ocol| {
                let mut acc = vec![BigInt::zero(); self.rows];
                for (k, y) in ocol {
                    for (r, x) in &self.columns[*k] {
                        acc[*r] += x * y;
                    }
                }
                acc.into_iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .collect()
            })
            .collect();
        Ok(IntegerMatrix {
            rows: self.rows,
            cols: other.cols,
            columns,
        })
    }

    /// Largest absolute entry, zero for an empty matrix.
    pub fn max_abs(&self) -> BigInt {
        self.columns
            .iter()
            .flatten()
            .map(|(_, x)| x.abs())
            .max()
            .unwrap_or_default()
    }
}
