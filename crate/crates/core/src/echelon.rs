//! Fox Jacobians and echelon presentations.
//!
//! A presentation is in echelon form when the augmented Fox Jacobian of its
//! relators is in row echelon form. Any presentation can be brought there by
//! recombining relators along a unimodular matrix: if `C T = H` is the
//! Hermite form of the Jacobian `T`, the relators
//! `w_k = r_1^{C[k][1]} ... r_m^{C[k][m]}` have Jacobian exactly `H`, since
//! `ε∘∂_i` is additive on products and `ε∂_i(r^c) = c ε∂_i(r)`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::Error;
use crate::group_ring::augmented_fox;
use crate::intlinalg::{hnf_with_transform, IntMatrix};
use crate::word::{Presentation, Word};

/// `m x n` matrix of augmented Fox derivatives, one row per relator.
pub fn fox_jacobian(p: &Presentation) -> IntMatrix {
    let rows: Vec<Vec<BigInt>> =
        p.relators().iter().map(|r| (0..p.n()).map(|i| augmented_fox(r, i)).collect()).collect();
    IntMatrix::from_rows_with_cols(&rows, p.n())
}

#[derive(Clone, Debug)]
pub struct EchelonPresentation {
    /// Same generators, recombined relators `w_1..w_m`.
    pub base: Presentation,
    /// Unimodular `C` with `C * fox_jacobian(original) = jacobian`.
    pub transform: IntMatrix,
    /// Jacobian of the new relators, in Hermite normal form.
    pub jacobian: IntMatrix,
}

impl EchelonPresentation {
    /// Number of nonzero Jacobian rows, i.e. `n - b`.
    pub fn rank(&self) -> usize {
        (0..self.jacobian.rows()).take_while(|&i| !self.jacobian.is_zero_row(i)).count()
    }
}

/// Recombine the relators of `p` into an echelon presentation.
///
/// Relators are not freely reduced. Fails only if the recomputed Jacobian
/// disagrees with the Hermite form, which would be a bug.
pub fn echelon_presentation(p: &Presentation) -> Result<EchelonPresentation, Error> {
    let t = fox_jacobian(p);
    let (h, c) = hnf_with_transform(&t);
    let mut relators = Vec::with_capacity(p.m());
    for k in 0..p.m() {
        let mut letters = Vec::new();
        for (l, r) in p.relators().iter().enumerate() {
            let e = &c[(k, l)];
            let e = e
                .to_i64()
                .ok_or_else(|| Error::Consistency(format!("transform entry {e} too large to use as an exponent")))?;
            if e != 0 {
                letters.extend_from_slice(r.power(e).letters());
            }
        }
        relators.push(Word::from(letters));
    }
    let base = p.with_relators(relators);
    let recomputed = fox_jacobian(&base);
    if recomputed != h {
        return Err(Error::Consistency("Jacobian of recombined relators differs from C*T".into()));
    }
    Ok(EchelonPresentation { base, transform: c, jacobian: h })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Signed};

    fn pres(text: &str) -> Presentation {
        Presentation::parse(text).unwrap()
    }

    #[test]
    fn jacobians() {
        assert_eq!(fox_jacobian(&pres("gens: a b\nrel: abAB")), IntMatrix::from_rows(&[vec![0, 0]]));
        assert_eq!(fox_jacobian(&pres("gens: a\nrel: aa")), IntMatrix::from_rows(&[vec![2]]));
        assert_eq!(
            fox_jacobian(&pres("gens: a b\nrel: aabb\nrel: abab")),
            IntMatrix::from_rows(&[vec![2, 2], vec![2, 2]])
        );
        let free = fox_jacobian(&Presentation::free(3));
        assert_eq!((free.rows(), free.cols()), (0, 3));
    }

    #[test]
    fn already_echelon() {
        let p = pres("gens: a b\nrel: aa");
        let e = echelon_presentation(&p).unwrap();
        assert_eq!(e.transform, IntMatrix::identity(1));
        assert_eq!(e.base.relators(), p.relators());
        assert_eq!(e.jacobian, IntMatrix::from_rows(&[vec![2, 0]]));
    }

    #[test]
    fn recombination() {
        let p = pres("gens: a b\nrel: aabb\nrel: abab");
        let e = echelon_presentation(&p).unwrap();
        assert_eq!(e.jacobian, IntMatrix::from_rows(&[vec![2, 2], vec![0, 0]]));
        assert_eq!(e.rank(), 1);
        let w2 = &e.base.relators()[1];
        assert_eq!((w2.exponent_sum(0), w2.exponent_sum(1)), (0, 0));
        // w2 = r1^{±1} r2^{∓1}: one copy of each relator.
        assert_eq!(w2.len(), 8);
        assert!(e.transform.determinant().abs().is_one());
    }

    #[test]
    fn no_relators() {
        let e = echelon_presentation(&Presentation::free(2)).unwrap();
        assert_eq!(e.base.m(), 0);
        assert_eq!(e.jacobian.rows(), 0);
        assert_eq!(e.rank(), 0);
    }
}
