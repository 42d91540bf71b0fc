//! The integral group ring of a free group and Fox free differential calculus.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::word::{Alphabet, Letter, Word};

/// A finite `Z`-linear combination of reduced words. Zero coefficients are
/// never stored; terms iterate in shortlex order of their words.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct GroupRingElement {
    terms: BTreeMap<Word, BigInt>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(Word::identity())
    }

    pub fn from_word(w: Word) -> Self {
        Self::monomial(w, BigInt::one())
    }

    pub fn monomial(w: Word, coeff: BigInt) -> Self {
        let mut e = Self::zero();
        e.add_term(w, coeff);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, w: &Word) -> BigInt {
        self.terms.get(&w.free_reduce()).cloned().unwrap_or_default()
    }

    /// Add `coeff * w`, reducing `w` first.
    pub fn add_term(&mut self, w: Word, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let key = w.free_reduce();
        match self.terms.get_mut(&key) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        GroupRingElement { terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect() }
    }

    /// `u * self` for a group element `u`.
    pub fn left_multiply_by_word(&self, u: &Word) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(u.concat(w), c.clone());
        }
        out
    }

    /// Sum of coefficients.
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let word = alphabet.render(w);
            if i == 0 {
                if c.is_negative() {
                    out.push_str(&format!("-{}*{}", c.abs(), word));
                } else {
                    out.push_str(&format!("{c}*{word}"));
                }
            } else if c.is_negative() {
                out.push_str(&format!(" - {}*{}", c.abs(), word));
            } else {
                out.push_str(&format!(" + {c}*{word}"));
            }
        }
        out
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.terms.keys().filter_map(Word::max_generator).max().map_or(0, |g| g + 1);
        f.write_str(&self.render(&Alphabet::default_for(n)))
    }
}

impl Add for &GroupRingElement {
    type Output = GroupRingElement;
    fn add(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Add for GroupRingElement {
    type Output = GroupRingElement;
    fn add(self, rhs: GroupRingElement) -> GroupRingElement {
        &self + &rhs
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        GroupRingElement { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl Neg for GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        -&self
    }
}

impl Sub for &GroupRingElement {
    type Output = GroupRingElement;
    fn sub(self, rhs: &GroupRingElement) -> GroupRingElement {
        self + &(-rhs)
    }
}

impl Sub for GroupRingElement {
    type Output = GroupRingElement;
    fn sub(self, rhs: GroupRingElement) -> GroupRingElement {
        &self - &rhs
    }
}

/// Fox derivative of a word with respect to the 0-based generator `i`.
///
/// One left-to-right pass: a letter `x_i` at position p contributes
/// `+prefix`, a letter `x_i^{-1}` contributes `-(prefix * x_i^{-1})`.
pub fn fox_derivative(w: &Word, i: usize) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    let mut prefix: Vec<Letter> = Vec::with_capacity(w.len());
    for &l in w.letters() {
        if l.generator() == i {
            if l.is_inverse() {
                push_reduced(&mut prefix, l);
                out.add_term(Word::from(prefix.clone()), -BigInt::one());
                continue;
            }
            out.add_term(Word::from(prefix.clone()), BigInt::one());
        }
        push_reduced(&mut prefix, l);
    }
    out
}

/// Like [`fox_derivative`] but checks `i` against an alphabet of size `n`.
pub fn fox_derivative_checked(w: &Word, i: usize, n: usize) -> Result<GroupRingElement, Error> {
    if i >= n {
        return Err(Error::GeneratorOutOfRange { index: i + 1, n });
    }
    w.check_alphabet(n)?;
    Ok(fox_derivative(w, i))
}

fn push_reduced(prefix: &mut Vec<Letter>, l: Letter) {
    if prefix.last() == Some(&l.inverse()) {
        prefix.pop();
    } else {
        prefix.push(l);
    }
}

/// Linear extension of the Fox derivative to the group ring.
pub fn fox_derivative_elem(v: &GroupRingElement, i: usize) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    for (w, c) in v.terms() {
        for (dw, dc) in fox_derivative(w, i).terms {
            out.add_term(dw, dc * c);
        }
    }
    out
}

/// `ε(∂_i w)`: the signed number of occurrences of `x_i` in `w`.
pub fn augmented_fox(w: &Word, i: usize) -> BigInt {
    BigInt::from(w.exponent_sum(i))
}

/// `ε_{s,t}(w) = ε(∂_s(∂_t w))`. The inner derivative is taken in full,
/// the outer one through the augmented count of each term.
pub fn double_fox(w: &Word, s: usize, t: usize) -> BigInt {
    fox_derivative(w, t).terms().map(|(term, c)| c * augmented_fox(term, s)).sum()
}

/// All `ε_{s,t}(w)` for `s, t < n` at once, row `s`, column `t`.
///
/// Equal entrywise to [`double_fox`], but linear in `|w|`: a letter
/// `x_t^{±1}` adds `±ε_s(prefix)` to column `t`, where the prefix includes
/// the letter itself when it is an inverse.
pub fn double_fox_matrix(w: &Word, n: usize) -> Vec<Vec<BigInt>> {
    // Prefix exponent sums are bounded by the word length.
    let mut counts = vec![0i64; n];
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for &l in w.letters() {
        let t = l.generator();
        if l.is_inverse() {
            counts[t] -= 1;
            for (row, &c) in out.iter_mut().zip(&counts) {
                row[t] -= c;
            }
        } else {
            for (row, &c) in out.iter_mut().zip(&counts) {
                row[t] += c;
            }
            counts[t] += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    fn w(s: &str) -> Word {
        parse_word(s, 26).unwrap()
    }

    fn elem(terms: &[(i64, &str)]) -> GroupRingElement {
        let mut e = GroupRingElement::zero();
        for &(c, s) in terms {
            e.add_term(w(s), BigInt::from(c));
        }
        e
    }

    #[test]
    fn ring_operations() {
        assert_eq!(elem(&[(1, "a"), (-1, "b")]) + elem(&[(1, "b")]), elem(&[(1, "a")]));
        let v = elem(&[(3, "ab"), (-2, "")]);
        assert_eq!(GroupRingElement::zero() + v.clone(), v);
        assert_eq!(elem(&[(1, ""), (-1, "b")]).left_multiply_by_word(&w("a")), elem(&[(1, "a"), (-1, "ab")]));
        assert_eq!(elem(&[(1, "aA")]), GroupRingElement::one());
        assert!((v.clone() - v).is_zero());
    }

    #[test]
    fn augmentation_values() {
        assert_eq!(elem(&[(1, ""), (-1, "abA"), (-1, "abAcA")]).augmentation(), BigInt::from(-1));
        assert_eq!(GroupRingElement::zero().augmentation(), BigInt::zero());
        assert_eq!(elem(&[(5, "aB")]).augmentation(), BigInt::from(5));
    }

    #[test]
    fn fox_derivative_values() {
        assert_eq!(fox_derivative(&w("abAcAB"), 0), elem(&[(1, ""), (-1, "abA"), (-1, "abAcA")]));
        assert_eq!(fox_derivative(&w("A"), 0), elem(&[(-1, "A")]));
        assert_eq!(fox_derivative(&w("aBc"), 0), GroupRingElement::one());
        assert_eq!(fox_derivative(&w("BBc"), 0), GroupRingElement::zero());
        assert!(fox_derivative(&Word::identity(), 0).is_zero());
        for i in 0..5 {
            for j in 0..5 {
                let d = fox_derivative(&Word::letter(Letter::pos(j)), i);
                let expected = if i == j { GroupRingElement::one() } else { GroupRingElement::zero() };
                assert_eq!(d, expected);
            }
        }
        assert!(fox_derivative_checked(&w("ab"), 2, 2).is_err());
    }

    #[test]
    fn fox_derivative_of_elements() {
        let v = elem(&[(1, ""), (-1, "abA")]);
        assert_eq!(fox_derivative_elem(&v, 0), elem(&[(-1, ""), (1, "abA")]));
        assert!(fox_derivative_elem(&GroupRingElement::zero(), 0).is_zero());
        assert!(fox_derivative_elem(&elem(&[(3, "b")]), 0).is_zero());
    }

    #[test]
    fn augmented_counts() {
        assert_eq!(augmented_fox(&w("abAcAB"), 0), BigInt::from(-1));
        assert_eq!(augmented_fox(&w("aa"), 0), BigInt::from(2));
        assert_eq!(augmented_fox(&w("bcB"), 0), BigInt::zero());
    }

    #[test]
    fn double_derivatives() {
        // x_s x_t with s = a, t = b
        assert_eq!(double_fox(&w("ab"), 0, 1), BigInt::one());
        assert_eq!(double_fox(&w("ab"), 1, 0), BigInt::zero());
        assert_eq!(double_fox(&Word::identity(), 0, 1), BigInt::zero());
        assert_eq!(double_fox(&w("abAB"), 0, 1), BigInt::one());
        assert_eq!(double_fox(&w("abAB"), 1, 0), BigInt::from(-1));
        assert_eq!(double_fox(&w("abAB"), 0, 0), BigInt::zero());
    }

    #[test]
    fn double_fox_matrix_agrees() {
        for s in ["abAB", "aabAcAbbC", "AAAbc", "", "aAaA", "cbaABC"] {
            let word = w(s);
            let m = double_fox_matrix(&word, 3);
            for (a, row) in m.iter().enumerate() {
                for (b, x) in row.iter().enumerate() {
                    assert_eq!(*x, double_fox(&word, a, b), "{s} {a} {b}");
                }
            }
        }
    }

    #[test]
    fn render() {
        let e = fox_derivative(&w("abAcAB"), 0);
        assert_eq!(e.render(&Alphabet::default_for(3)), "1*1 - 1*abA - 1*abAcA");
        assert_eq!(GroupRingElement::zero().to_string(), "0");
    }
}
