//! Smith normal form over the integers.
//!
//! [`smith_normal_form`] first eliminates unit pivots directly on the sparse
//! columns (boundary matrices are mostly `±1`), then finishes the residual
//! block densely. [`smith_normal_form_with_transforms`] runs the dense
//! algorithm on the whole matrix and records unimodular `U`, `V` with
//! `U * M * V = D`.
//!
//! The dense step always pivots on a nonzero entry of minimum absolute value
//! and reduces by truncated Euclidean division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntegerMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    /// Positive invariant factors `d1 | d2 | ... | dr`.
    pub invariant_factors: Vec<BigInt>,
    pub transforms: Option<SnfTransforms>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfTransforms {
    /// Row transform (`rows x rows`, determinant ±1).
    pub u: IntegerMatrix,
    /// Column transform (`cols x cols`, determinant ±1).
    pub v: IntegerMatrix,
    /// `U * M * V`.
    pub diagonal: IntegerMatrix,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SnfResult {
    let rows = m.rows();
    let (units, residual) = eliminate_unit_pivots(rows, m.clone().into_columns());
    let mut factors = vec![BigInt::one(); units];
    if let Some(mut dense) = residual {
        factors.extend(dense_snf(&mut dense, None, None));
    }
    SnfResult {
        invariant_factors: factors,
        transforms: None,
    }
}

pub fn smith_normal_form_with_transforms(m: &IntegerMatrix) -> SnfResult {
    let mut a = Dense::from_rows(m.to_rows(), m.rows(), m.cols());
    let mut u = Dense::identity(m.rows());
    let mut v = Dense::identity(m.cols());
    let factors = dense_snf(&mut a, Some(&mut u), Some(&mut v));
    SnfResult {
        invariant_factors: factors,
        transforms: Some(SnfTransforms {
            u: u.to_matrix(),
            v: v.to_matrix(),
            diagonal: a.to_matrix(),
        }),
    }
}

type Column = Vec<(usize, BigInt)>;

/// Repeatedly pivots on `±1` entries, choosing the sparsest column first.
/// Each pivot contributes an invariant factor 1 and removes its row and
/// column. Returns the pivot count and the dense remainder (if nonzero).
fn eliminate_unit_pivots(rows: usize, columns: Vec<Column>) -> (usize, Option<Dense>) {
    let mut cols: Vec<Option<Column>> = columns.into_iter().map(Some).collect();
    let mut row_occ: Vec<Vec<usize>> = vec![Vec::new(); rows];
    for (c, col) in cols.iter().enumerate() {
        for (r, _) in col.as_ref().unwrap() {
            row_occ[*r].push(c);
        }
    }
    let has_unit = |col: &Column| col.iter().any(|(_, x)| x.abs().is_one());
    let mut unit_flag: Vec<bool> = cols.iter().map(|c| has_unit(c.as_ref().unwrap())).collect();

    let mut pivots = 0;
    loop {
        let pick = (0..cols.len())
            .filter(|&c| unit_flag[c])
            .min_by_key(|&c| (cols[c].as_ref().map_or(usize::MAX, Vec::len), c));
        let Some(pc) = pick else { break };
        let pivot_col = cols[pc].take().unwrap();
        unit_flag[pc] = false;
        let (pr, pv) = pivot_col
            .iter()
            .filter(|(_, x)| x.abs().is_one())
            .min_by_key(|(r, _)| (row_occ[*r].len(), *r))
            .map(|(r, x)| (*r, x.clone()))
            .unwrap();

        let mut targets = std::mem::take(&mut row_occ[pr]);
        targets.sort_unstable();
        targets.dedup();
        for j in targets {
            let Some(col) = cols[j].as_mut() else {
                continue;
            };
            let Ok(pos) = col.binary_search_by_key(&pr, |e| e.0) else {
                continue;
            };
            // pv is its own inverse
            let factor = &col[pos].1 * &pv;
            let (merged, new_rows) = axpy(col, &pivot_col, &factor);
            for r in new_rows {
                row_occ[r].push(j);
            }
            unit_flag[j] = has_unit(&merged);
            *col = merged;
        }
        pivots += 1;
    }

    let live: Vec<&Column> = cols.iter().flatten().filter(|c| !c.is_empty()).collect();
    if live.is_empty() {
        return (pivots, None);
    }
    let mut used_rows: Vec<usize> = live.iter().flat_map(|c| c.iter().map(|e| e.0)).collect();
    used_rows.sort_unstable();
    used_rows.dedup();
    let mut dense = Dense::zeros(used_rows.len(), live.len());
    for (c, col) in live.iter().enumerate() {
        for (r, x) in col.iter() {
            let rr = used_rows.binary_search(r).unwrap();
            dense.data[rr * dense.cols + c] = x.clone();
        }
    }
    (pivots, Some(dense))
}

/// `col - factor * pivot`, plus the rows that became nonzero.
fn axpy(col: &Column, pivot: &Column, factor: &BigInt) -> (Column, Vec<usize>) {
    let mut out = Vec::with_capacity(col.len() + pivot.len());
    let mut new_rows = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < col.len() || j < pivot.len() {
        let ri = col.get(i).map_or(usize::MAX, |e| e.0);
        let rj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        if ri < rj {
            out.push(col[i].clone());
            i += 1;
        } else if rj < ri {
            out.push((rj, -(factor * &pivot[j].1)));
            new_rows.push(rj);
            j += 1;
        } else {
            let x = &col[i].1 - factor * &pivot[j].1;
            if !x.is_zero() {
                out.push((ri, x));
            }
            i += 1;
            j += 1;
        }
    }
    (out, new_rows)
}

/// Row-major dense matrix used by the Euclidean phase.
#[derive(Debug, Clone)]
struct Dense {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl Dense {
    fn zeros(rows: usize, cols: usize) -> Self {
        Dense {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    fn identity(n: usize) -> Self {
        let mut d = Dense::zeros(n, n);
        for i in 0..n {
            d.data[i * n + i] = BigInt::one();
        }
        d
    }

    fn from_rows(data: Vec<Vec<BigInt>>, rows: usize, cols: usize) -> Self {
        Dense {
            rows,
            cols,
            data: data.into_iter().flatten().collect(),
        }
    }

    fn to_matrix(&self) -> IntegerMatrix {
        if self.rows == 0 || self.cols == 0 {
            return IntegerMatrix::zeros(self.rows, self.cols);
        }
        let rows: Vec<Vec<BigInt>> = self.data.chunks(self.cols).map(<[_]>::to_vec).collect();
        IntegerMatrix::from_rows(&rows).expect("rectangular")
    }

    fn at(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// row[dst] -= q * row[src]
    fn sub_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        for c in 0..self.cols {
            let s = &self.data[src * self.cols + c];
            if !s.is_zero() {
                let delta = q * s;
                self.data[dst * self.cols + c] -= delta;
            }
        }
    }

    /// col[dst] -= q * col[src]
    fn sub_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for r in 0..self.rows {
            let s = &self.data[r * self.cols + src];
            if !s.is_zero() {
                let delta = q * s;
                self.data[r * self.cols + dst] -= delta;
            }
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let x = &mut self.data[r * self.cols + c];
            *x = -std::mem::take(x);
        }
    }
}

/// Diagonalizes `a` in place. Row operations are mirrored on `u` (as
/// `u := E * u`) and column operations on `v` (as `v := v * E`).
fn dense_snf(a: &mut Dense, mut u: Option<&mut Dense>, mut v: Option<&mut Dense>) -> Vec<BigInt> {
    let (rows, cols) = (a.rows, a.cols);
    let mut factors = Vec::new();
    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = min_abs_entry(a, t..rows, t..cols) else {
            break;
        };
        swap_rows(a, &mut u, t, pi);
        swap_cols(a, &mut v, t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !a.at(i, t).is_zero() {
                    let q = a.at(i, t) / a.at(t, t);
                    sub_row(a, &mut u, i, t, &q);
                    clean &= a.at(i, t).is_zero();
                }
            }
            for j in t + 1..cols {
                if !a.at(t, j).is_zero() {
                    let q = a.at(t, j) / a.at(t, t);
                    sub_col(a, &mut v, j, t, &q);
                    clean &= a.at(t, j).is_zero();
                }
            }
            if !clean {
                // a remainder smaller than the pivot is left in row/column t
                let in_col = min_abs_entry(a, t + 1..rows, t..t + 1);
                let in_row = min_abs_entry(a, t..t + 1, t + 1..cols);
                let best = match (in_col, in_row) {
                    (Some(x), Some(y)) => {
                        if a.at(y.0, y.1).abs() < a.at(x.0, x.1).abs() {
                            y
                        } else {
                            x
                        }
                    }
                    (Some(x), None) | (None, Some(x)) => x,
                    (None, None) => unreachable!("unclean pivot row/column without entries"),
                };
                swap_rows(a, &mut u, t, best.0);
                swap_cols(a, &mut v, t, best.1);
                continue;
            }
            let pivot = a.at(t, t).clone();
            let offender =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a.at(i, j).is_multiple_of(&pivot)));
            match offender {
                Some(i) => add_row(a, &mut u, t, i),
                None => break,
            }
        }
        if a.at(t, t).is_negative() {
            a.negate_row(t);
            if let Some(u) = u.as_deref_mut() {
                u.negate_row(t);
            }
        }
        factors.push(a.at(t, t).clone());
    }
    factors
}

fn min_abs_entry(
    a: &Dense,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for r in rows {
        for c in cols.clone() {
            let x = a.at(r, c);
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(_, b)| ax < *b) {
                let unit = ax.is_one();
                best = Some(((r, c), ax));
                if unit {
                    return best.map(|b| b.0);
                }
            }
        }
    }
    best.map(|b| b.0)
}

fn swap_rows(a: &mut Dense, u: &mut Option<&mut Dense>, x: usize, y: usize) {
    a.swap_rows(x, y);
    if let Some(u) = u.as_deref_mut() {
        u.swap_rows(x, y);
    }
}

fn swap_cols(a: &mut Dense, v: &mut Option<&mut Dense>, x: usize, y: usize) {
    a.swap_cols(x, y);
    if let Some(v) = v.as_deref_mut() {
        v.swap_cols(x, y);
    }
}

fn sub_row(a: &mut Dense, u: &mut Option<&mut Dense>, dst: usize, src: usize, q: &BigInt) {
    a.sub_row(dst, src, q);
    if let Some(u) = u.as_deref_mut() {
        u.sub_row(dst, src, q);
    }
}

fn sub_col(a: &mut Dense, v: &mut Option<&mut Dense>, dst: usize, src: usize, q: &BigInt) {
    a.sub_col(dst, src, q);
    if let Some(v) = v.as_deref_mut() {
        v.sub_col(dst, src, q);
    }
}

/// row[dst] += row[src]
fn add_row(a: &mut Dense, u: &mut Option<&mut Dense>, dst: usize, src: usize) {
    let minus_one = -BigInt::one();
    sub_row(a, u, dst, src, &minus_one);
}
