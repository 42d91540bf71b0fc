//! Rational cup products `H^1 ∧ H^1 -> H^2` of a presentation 2-complex.
//!
//! After passing to an echelon presentation with Jacobian rank `n - b`, the
//! last `m - n + b` relators `w_k` have zero Jacobian row and their duals
//! span `H^2(K; Q)`. With `A` a `b x n` matrix whose rows span `H^1(K; Q)`,
//!
//! ```text
//! u_i ∪ u_j = Σ_k κ(w_k)_{i,j} β_k,    κ(w)_{i,j} = Σ_{s,t} A[i][s] A[j][t] ε_{s,t}(w).
//! ```

use num_rational::BigRational;
use num_traits::Zero;

use crate::echelon::{echelon_presentation, EchelonPresentation};
use crate::error::Error;
use crate::group_ring::double_fox_matrix;
use crate::intlinalg::RatMatrix;
use crate::word::{Presentation, Word};

/// Rows form a basis of the rational functionals on the generators that
/// vanish on every relator, i.e. of `H^1(K; Q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianizationMatrix {
    pub a: RatMatrix,
}

impl AbelianizationMatrix {
    /// First Betti number.
    pub fn b(&self) -> usize {
        self.a.rows()
    }

    /// Replace the basis by `q * A`. `q` must be invertible for the result to
    /// still be a basis; this is not checked.
    pub fn change_basis(&self, q: &RatMatrix) -> AbelianizationMatrix {
        AbelianizationMatrix { a: q.mul(&self.a) }
    }
}

pub fn abelianization_matrix(e: &EchelonPresentation) -> AbelianizationMatrix {
    AbelianizationMatrix { a: e.jacobian.to_rational().null_space_basis() }
}

/// `b x b` matrix `A E A^T` with `E[s][t] = ε_{s,t}(w)`.
pub fn kappa_matrix(w: &Word, a: &AbelianizationMatrix) -> RatMatrix {
    let n = a.a.cols();
    let e = double_fox_matrix(w, n);
    let e = RatMatrix::from_rows(
        e.into_iter().map(|row| row.into_iter().map(BigRational::from_integer).collect()).collect(),
        n,
    );
    a.a.mul(&e).mul(&a.a.transpose())
}

/// The cup product map in the bases chosen above.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CupMatrix {
    pub b: usize,
    /// `dim H^2(K; Q) = m - n + b`; also the number of rows.
    pub dim_h2: usize,
    /// Row per relator `w_k` in the top range, column per pair `i < j`.
    pub entries: RatMatrix,
    /// Column labels, 0-based, lexicographic.
    pub pairs: Vec<(usize, usize)>,
    pub rank: usize,
    pub nullity: usize,
}

/// The invariant summary of [`CupMatrix`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CupSummary {
    pub b: usize,
    pub dim_h2: usize,
    pub rank: usize,
    pub nullity: usize,
}

impl CupMatrix {
    pub fn summary(&self) -> CupSummary {
        CupSummary { b: self.b, dim_h2: self.dim_h2, rank: self.rank, nullity: self.nullity }
    }
}

/// Cup matrix of an echelon presentation with an explicit `H^1` basis.
pub fn cup_matrix_with_basis(e: &EchelonPresentation, a: &AbelianizationMatrix) -> Result<CupMatrix, Error> {
    let n = e.base.n();
    let m = e.base.m();
    let b = a.b();
    if a.a.cols() != n {
        return Err(Error::Precondition(format!("H^1 basis has {} columns, expected {n}", a.a.cols())));
    }
    let rank_j = n
        .checked_sub(b)
        .ok_or_else(|| Error::Consistency(format!("first Betti number {b} exceeds generator count {n}")))?;
    if rank_j > m {
        return Err(Error::Consistency(format!("Jacobian rank {rank_j} exceeds relator count {m}")));
    }
    for k in rank_j..m {
        if !e.jacobian.is_zero_row(k) {
            return Err(Error::Consistency(format!("echelon Jacobian row {} should vanish (n - b = {rank_j})", k + 1)));
        }
    }
    let pairs: Vec<(usize, usize)> = (0..b).flat_map(|i| (i + 1..b).map(move |j| (i, j))).collect();
    let mut rows = Vec::with_capacity(m - rank_j);
    for w in &e.base.relators()[rank_j..] {
        let kappa = kappa_matrix(w, a);
        for i in 0..b {
            if !kappa[(i, i)].is_zero() {
                return Err(Error::Consistency("κ(w_k) has a nonzero diagonal entry".into()));
            }
        }
        rows.push(pairs.iter().map(|&(i, j)| kappa[(i, j)].clone()).collect());
    }
    let entries = RatMatrix::from_rows(rows, pairs.len());
    let rank = entries.rank();
    Ok(CupMatrix { b, dim_h2: m - rank_j, nullity: pairs.len() - rank, entries, pairs, rank })
}

pub fn cup_matrix(p: &Presentation) -> Result<CupMatrix, Error> {
    let e = echelon_presentation(p)?;
    let a = abelianization_matrix(&e);
    cup_matrix_with_basis(&e, &a)
}

pub fn cup_nullity(p: &Presentation) -> Result<CupSummary, Error> {
    cup_matrix(p).map(|c| c.summary())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    #[test]
    fn abelianization_of_small_groups() {
        let e = echelon_presentation(&Presentation::free(2)).unwrap();
        let a = abelianization_matrix(&e);
        assert_eq!(a.a, RatMatrix::identity(2));
        let e = echelon_presentation(&Presentation::parse("gens: a\nrel: aa").unwrap()).unwrap();
        assert_eq!(abelianization_matrix(&e).b(), 0);
    }

    #[test]
    fn kappa_examples() {
        let a = AbelianizationMatrix { a: RatMatrix::identity(2) };
        assert!(kappa_matrix(&Word::identity(), &a).is_zero());
        let k = kappa_matrix(&parse_word("abAB", 2).unwrap(), &a);
        assert_eq!(k, RatMatrix::from_int_rows(&[vec![0, 1], vec![-1, 0]]));
    }

    #[test]
    fn torus() {
        let c = cup_matrix(&Presentation::parse("gens: a b\nrel: abAB").unwrap()).unwrap();
        assert_eq!((c.b, c.dim_h2, c.rank, c.nullity), (2, 1, 1, 0));
        assert_eq!(c.entries.rows(), 1);
        let v = c.entries[(0, 0)].clone();
        assert!(v == BigRational::from_integer(1.into()) || v == BigRational::from_integer((-1).into()));
    }

    #[test]
    fn degenerate_cases() {
        let s = cup_nullity(&Presentation::free(2)).unwrap();
        assert_eq!(s, CupSummary { b: 2, dim_h2: 0, rank: 0, nullity: 1 });
        let s = cup_nullity(&Presentation::parse("gens: a\nrel: aa").unwrap()).unwrap();
        assert_eq!(s, CupSummary { b: 0, dim_h2: 0, rank: 0, nullity: 0 });
        let s = cup_nullity(&Presentation::parse("gens: a b\nrel: ab").unwrap()).unwrap();
        assert_eq!(s, CupSummary { b: 1, dim_h2: 0, rank: 0, nullity: 0 });
    }

    #[test]
    fn genus_two_surface() {
        // [a,b][c,d]: cup form is nondegenerate of rank 1 onto H^2 = Q.
        let p = Presentation::parse("gens: a b c d\nrel: abABcdCD").unwrap();
        let c = cup_matrix(&p).unwrap();
        assert_eq!((c.b, c.dim_h2, c.rank, c.nullity), (4, 1, 1, 5));
    }
}
