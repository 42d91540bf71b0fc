//! Exact integer and rational matrices: Hermite normal form with transform,
//! Smith invariant factors, rank and null spaces.
//!
//! Nothing here touches floating point. Integer elimination is Euclidean
//! (for HNF/SNF) or fraction-free Bareiss (for rank and determinant);
//! rational elimination works on reduced fractions.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Panics on ragged input.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows_with_cols(rows, cols)
    }

    /// Like [`from_rows`](Self::from_rows) but keeps the column count when
    /// there are no rows.
    pub fn from_rows_with_cols<T: Into<BigInt> + Clone>(rows: &[Vec<T>], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r.iter().cloned().map(Into::into));
        }
        IntMatrix { rows: rows.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_zero_row(&self, i: usize) -> bool {
        self.row(i).iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let p = a * &rhs[(k, j)];
                    out[(i, j)] += p;
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] -= q * row[src]
    fn sub_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = q * &self[(src, j)];
            self[(dst, j)] -= v;
        }
    }

    /// col[dst] -= q * col[src]
    fn sub_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = q * &self[(i, src)];
            self[(i, dst)] -= v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }

    /// Rank over `Q`, by fraction-free elimination.
    pub fn rank(&self) -> usize {
        bareiss(self.clone()).0
    }

    /// Determinant of a square matrix (Bareiss).
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        if self.rows == 0 {
            return BigInt::one();
        }
        let (rank, m, sign) = bareiss(self.clone());
        if rank < self.rows {
            return BigInt::zero();
        }
        let d = m[(self.rows - 1, self.cols - 1)].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| BigRational::from_integer(x.clone())).collect(),
        }
    }

    /// Row Hermite normal form: pivots move strictly right going down, are
    /// positive, entries above a pivot lie in `[0, pivot)`, zero rows last.
    pub fn is_hermite(&self) -> bool {
        let mut last_pivot: Option<usize> = None;
        let mut seen_zero = false;
        for i in 0..self.rows {
            match self.row(i).iter().position(|x| !x.is_zero()) {
                None => seen_zero = true,
                Some(p) => {
                    if seen_zero || last_pivot.is_some_and(|lp| p <= lp) {
                        return false;
                    }
                    let piv = &self[(i, p)];
                    if !piv.is_positive() {
                        return false;
                    }
                    for k in 0..i {
                        let a = &self[(k, p)];
                        if a.is_negative() || a >= piv {
                            return false;
                        }
                    }
                    last_pivot = Some(p);
                }
            }
        }
        true
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Fraction-free forward elimination. Returns the rank, the eliminated
/// matrix and the sign of the row permutation.
fn bareiss(mut m: IntMatrix) -> (usize, IntMatrix, i32) {
    let mut rank = 0;
    let mut prev = BigInt::one();
    let mut sign = 1;
    for col in 0..m.cols {
        if rank == m.rows {
            break;
        }
        let Some(p) = (rank..m.rows).find(|&i| !m[(i, col)].is_zero()) else {
            continue;
        };
        if p != rank {
            m.swap_rows(p, rank);
            sign = -sign;
        }
        for i in rank + 1..m.rows {
            for j in col + 1..m.cols {
                let v = (&m[(rank, col)] * &m[(i, j)] - &m[(i, col)] * &m[(rank, j)]) / &prev;
                m[(i, j)] = v;
            }
            m[(i, col)] = BigInt::zero();
        }
        prev = m[(rank, col)].clone();
        rank += 1;
    }
    (rank, m, sign)
}

/// Row Hermite normal form `H` together with a unimodular `C` such that
/// `C * T = H`.
pub fn hnf_with_transform(t: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = t.clone();
    let mut c = IntMatrix::identity(t.rows);
    let mut pivot_row = 0;
    for col in 0..h.cols {
        if pivot_row == h.rows {
            break;
        }
        // Euclid down the column until one nonzero entry remains.
        loop {
            let best = (pivot_row..h.rows)
                .filter(|&i| !h[(i, col)].is_zero())
                .min_by(|&a, &b| h[(a, col)].abs().cmp(&h[(b, col)].abs()));
            let Some(best) = best else { break };
            h.swap_rows(pivot_row, best);
            c.swap_rows(pivot_row, best);
            let mut done = true;
            for i in pivot_row + 1..h.rows {
                if h[(i, col)].is_zero() {
                    continue;
                }
                let q = h[(i, col)].div_floor(&h[(pivot_row, col)]);
                h.sub_row_multiple(i, pivot_row, &q);
                c.sub_row_multiple(i, pivot_row, &q);
                if !h[(i, col)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(pivot_row, col)].is_zero() {
            continue;
        }
        if h[(pivot_row, col)].is_negative() {
            h.negate_row(pivot_row);
            c.negate_row(pivot_row);
        }
        let pivot = h[(pivot_row, col)].clone();
        for i in 0..pivot_row {
            let q = h[(i, col)].div_floor(&pivot);
            h.sub_row_multiple(i, pivot_row, &q);
            c.sub_row_multiple(i, pivot_row, &q);
        }
        pivot_row += 1;
    }
    (h, c)
}

/// Invariant factors `d_1 | d_2 | ... | d_r` of the Smith normal form,
/// `r` the rank. Units are included.
pub fn snf_invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    let mut a = m.clone();
    let mut factors = Vec::new();
    let mut t = 0;
    while t < a.rows.min(a.cols) {
        // Pivot on the smallest nonzero entry of the trailing block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..a.rows {
            for j in t..a.cols {
                if a[(i, j)].is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);

        let mut clean = true;
        for i in t + 1..a.rows {
            if !a[(i, t)].is_zero() {
                let q = a[(i, t)].div_floor(&a[(t, t)]);
                a.sub_row_multiple(i, t, &q);
                clean &= a[(i, t)].is_zero();
            }
        }
        for j in t + 1..a.cols {
            if !a[(t, j)].is_zero() {
                let q = a[(t, j)].div_floor(&a[(t, t)]);
                a.sub_col_multiple(j, t, &q);
                clean &= a[(t, j)].is_zero();
            }
        }
        if !clean {
            continue;
        }
        // Row and column cleared; enforce divisibility of the rest.
        let piv = a[(t, t)].clone();
        let offender = (t + 1..a.rows).find(|&i| (t + 1..a.cols).any(|j| !a[(i, j)].is_multiple_of(&piv)));
        if let Some(i) = offender {
            for j in t..a.cols {
                let v = a[(i, j)].clone();
                a[(t, j)] += v;
            }
            continue;
        }
        factors.push(piv.abs());
        t += 1;
    }
    factors
}

/// Rank over `Q`.
pub fn rational_rank(m: &IntMatrix) -> usize {
    m.rank()
}

/// Basis of `{v : M v = 0}` as the rows of a `(cols - rank) x cols` matrix.
///
/// One row per free column of the reduced row echelon form of `M`: the row
/// has 1 at its free column, 0 at the other free columns, and the pivot
/// coordinates it forces.
pub fn null_space_basis(m: &IntMatrix) -> RatMatrix {
    m.to_rational().null_space_basis()
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigRational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>, cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r);
        }
        RatMatrix { rows: nrows, cols, data }
    }

    pub fn from_int_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        IntMatrix::from_rows(rows).to_rational()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = RatMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let p = a * &rhs[(k, j)];
                    out[(i, j)] += p;
                }
            }
        }
        out
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a[(i, col)].is_zero()) else {
                continue;
            };
            for j in 0..a.cols {
                a.data.swap(p * a.cols + j, r * a.cols + j);
            }
            let inv = a[(r, col)].recip();
            for j in col..a.cols {
                let v = &a[(r, j)] * &inv;
                a[(r, j)] = v;
            }
            for i in 0..a.rows {
                if i == r || a[(i, col)].is_zero() {
                    continue;
                }
                let f = a[(i, col)].clone();
                for j in col..a.cols {
                    let v = &f * &a[(r, j)];
                    a[(i, j)] -= v;
                }
            }
            pivots.push(col);
            r += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// See [`null_space_basis`].
    pub fn null_space_basis(&self) -> RatMatrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = RatMatrix::zero(free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            basis[(k, f)] = BigRational::one();
            for (pr, &pc) in pivots.iter().enumerate() {
                basis[(k, pc)] = -r[(pr, f)].clone();
            }
        }
        basis
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = BigRational;
    fn index(&self, (i, j): (usize, usize)) -> &BigRational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigRational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows)
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn hnf_identity_and_zero() {
        let (h, c) = hnf_with_transform(&IntMatrix::identity(3));
        assert_eq!(h, IntMatrix::identity(3));
        assert_eq!(c, IntMatrix::identity(3));
        let z = IntMatrix::zero(2, 3);
        let (h, c) = hnf_with_transform(&z);
        assert_eq!(h, z);
        assert_eq!(c, IntMatrix::identity(2));
    }

    #[test]
    fn hnf_two_by_two() {
        let t = int(&[vec![2, 4], vec![1, 3]]);
        let (h, c) = hnf_with_transform(&t);
        // [1, 3] would not have its off-pivot entry reduced modulo 2.
        assert_eq!(h, int(&[vec![1, 1], vec![0, 2]]));
        assert_eq!(c.mul(&t), h);
        assert_eq!(c.determinant().abs(), BigInt::one());
        assert!(h.is_hermite());
    }

    #[test]
    fn hnf_rectangular() {
        let t = int(&[vec![0, 6, 4], vec![0, 9, 6], vec![3, 1, 2], vec![0, 0, 0]]);
        let (h, c) = hnf_with_transform(&t);
        assert!(h.is_hermite());
        assert_eq!(c.mul(&t), h);
        assert_eq!(c.determinant().abs(), BigInt::one());
        assert_eq!(h.rank(), 2);
        assert!(h.is_zero_row(2) && h.is_zero_row(3));
    }

    #[test]
    fn snf_examples() {
        assert_eq!(snf_invariant_factors(&int(&[vec![2, 0], vec![0, 4]])), ints(&[2, 4]));
        assert_eq!(snf_invariant_factors(&int(&[vec![2, 0], vec![0, 3]])), ints(&[1, 6]));
        assert!(snf_invariant_factors(&IntMatrix::zero(3, 2)).is_empty());
        assert_eq!(snf_invariant_factors(&int(&[vec![4, 6], vec![6, 4]])), ints(&[2, 10]));
        assert_eq!(snf_invariant_factors(&IntMatrix::zero(0, 3)), ints(&[]));
    }

    #[test]
    fn rank_and_null_space() {
        assert_eq!(IntMatrix::identity(3).rank(), 3);
        assert_eq!(null_space_basis(&IntMatrix::identity(3)).rows(), 0);
        let z = IntMatrix::zero(2, 3);
        assert_eq!(z.rank(), 0);
        assert_eq!(null_space_basis(&z), RatMatrix::identity(3));
        let m = int(&[vec![1, 1, 0]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(null_space_basis(&m), RatMatrix::from_int_rows(&[vec![-1, 1, 0], vec![0, 0, 1]]));
    }

    #[test]
    fn null_space_with_fractions() {
        let m = int(&[vec![2, 3, 0], vec![0, 0, 5]]);
        let basis = null_space_basis(&m);
        assert_eq!(basis.rows(), 1);
        assert!(m.to_rational().mul(&basis.transpose()).is_zero());
        assert_eq!(basis[(0, 0)], BigRational::new((-3).into(), 2.into()));
    }

    #[test]
    fn determinant_values() {
        assert_eq!(int(&[vec![2, 4], vec![1, 3]]).determinant(), BigInt::from(2));
        assert_eq!(int(&[vec![0, 1], vec![1, 0]]).determinant(), BigInt::from(-1));
        assert_eq!(int(&[vec![1, 2], vec![2, 4]]).determinant(), BigInt::zero());
        assert_eq!(int(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]).determinant(), BigInt::from(4));
    }
}
