//! Tietze transformations: a simplifier that only applies
//! isomorphism-preserving moves, and the individual moves themselves.

use std::collections::HashSet;

use crate::word::{Alphabet, Letter, Presentation, Word};

#[derive(Clone, Copy, Debug)]
pub struct TietzeOptions {
    /// Maximum number of generator eliminations.
    pub max_steps: usize,
    /// Skip an elimination if it would push the total relator length past
    /// this.
    pub max_total_length: usize,
}

impl Default for TietzeOptions {
    fn default() -> Self {
        TietzeOptions { max_steps: 10_000, max_total_length: 200_000 }
    }
}

pub fn tietze_simplify(p: &Presentation) -> Presentation {
    tietze_simplify_with(p, TietzeOptions::default())
}

/// Repeat until nothing changes or the step budget runs out:
/// cyclically reduce relators, drop trivial and duplicate ones (up to
/// rotation and inversion), then eliminate one generator that occurs exactly
/// once in some relator by solving for it and substituting.
pub fn tietze_simplify_with(p: &Presentation, opts: TietzeOptions) -> Presentation {
    let mut alphabet = p.alphabet().clone();
    let mut relators = clean_relators(p.relators());
    for _ in 0..opts.max_steps {
        let Some((g, r)) = pick_elimination(&relators, alphabet.len(), opts.max_total_length) else {
            break;
        };
        relators = eliminate(&relators, g, r);
        alphabet = alphabet.without(&HashSet::from([g]));
        relators = clean_relators(&relators);
    }
    Presentation::new(alphabet, relators)
}

fn clean_relators(relators: &[Word]) -> Vec<Word> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for r in relators {
        let c = r.cyclic_reduce();
        if c.is_empty() {
            continue;
        }
        if seen.insert(cyclic_canonical(&c)) {
            out.push(c);
        }
    }
    out
}

/// Least rotation of `w` or of its inverse.
pub fn cyclic_canonical(w: &Word) -> Word {
    let inv = w.inverse();
    (0..w.len()).flat_map(|k| [w.rotate(k), inv.rotate(k)]).min().unwrap_or_default()
}

/// `(generator, relator index)` whose elimination adds the least length.
fn pick_elimination(relators: &[Word], n: usize, max_total: usize) -> Option<(usize, usize)> {
    let total: usize = relators.iter().map(Word::len).sum();
    let mut best: Option<(usize, usize, usize, usize)> = None; // (cost, len, g, r)
    for (ri, r) in relators.iter().enumerate() {
        for g in 0..n {
            if r.occurrences(g) != 1 {
                continue;
            }
            let elsewhere: usize =
                relators.iter().enumerate().filter(|&(k, _)| k != ri).map(|(_, w)| w.occurrences(g)).sum();
            let grown = elsewhere * (r.len() - 1);
            let shrunk = r.len() + elsewhere;
            if total + grown > max_total + shrunk {
                continue;
            }
            let cand = (grown, r.len(), g, ri);
            if best.is_none_or(|b| cand < b) {
                best = Some(cand);
            }
        }
    }
    best.map(|(_, _, g, r)| (g, r))
}

/// Solve relator `r` for generator `g`, substitute elsewhere, drop `r` and
/// renumber the generators above `g`.
fn eliminate(relators: &[Word], g: usize, r: usize) -> Vec<Word> {
    let rel = &relators[r];
    let pos = rel.letters().iter().position(|l| l.generator() == g).unwrap();
    let rotated = rel.rotate(pos);
    // rotated = g^e v, so g^e = v^{-1}
    let rest = Word::from(rotated.letters()[1..].to_vec());
    let value = if rotated.letters()[0].is_inverse() { rest } else { rest.inverse() };
    let value_inv = value.inverse();
    let renumber = |l: Letter| {
        if l.generator() > g {
            Letter::new(l.generator() - 1, l.is_inverse())
        } else {
            l
        }
    };
    relators
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != r)
        .map(|(_, w)| {
            let mut out = Vec::with_capacity(w.len());
            for &l in w.letters() {
                if l.generator() == g {
                    let sub = if l.is_inverse() { &value_inv } else { &value };
                    out.extend(sub.letters().iter().map(|&x| renumber(x)));
                } else {
                    out.push(renumber(l));
                }
            }
            Word::from(out).free_reduce()
        })
        .collect()
}

/// A single Tietze transformation (or a composite that is obviously one).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TietzeMove {
    /// Rotate relator `rel` to start at `shift`.
    CyclicPermute { rel: usize, shift: usize },
    /// Replace relator `rel` by its inverse.
    InvertRelator { rel: usize },
    /// Replace `r_target` by `r_target r_source^{±1}`.
    MultiplyRelator { target: usize, source: usize, inverse: bool },
    /// Replace `r_rel` by `l r_rel l^{-1}`.
    ConjugateRelator { rel: usize, by: Letter },
    /// Append the consequence `r_a r_b`.
    AddConsequence { a: usize, b: usize },
    /// New generator `y` with the relator `y w^{-1}`.
    AddGenerator { word: Word },
}

impl TietzeMove {
    /// Panics on out-of-range indices.
    pub fn apply(&self, p: &Presentation) -> Presentation {
        let mut rels = p.relators().to_vec();
        match self {
            TietzeMove::CyclicPermute { rel, shift } => rels[*rel] = rels[*rel].rotate(*shift),
            TietzeMove::InvertRelator { rel } => rels[*rel] = rels[*rel].inverse(),
            TietzeMove::MultiplyRelator { target, source, inverse } => {
                assert_ne!(target, source, "a relator cannot absorb itself");
                let s = if *inverse { rels[*source].inverse() } else { rels[*source].clone() };
                rels[*target] = rels[*target].concat(&s);
            }
            TietzeMove::ConjugateRelator { rel, by } => {
                let l = Word::letter(*by);
                rels[*rel] = l.concat(&rels[*rel]).concat(&l.inverse());
            }
            TietzeMove::AddConsequence { a, b } => rels.push(rels[*a].concat(&rels[*b])),
            TietzeMove::AddGenerator { word } => {
                let n = p.n();
                let alphabet = extend_alphabet(p.alphabet());
                rels.push(Word::letter(Letter::pos(n)).concat(&word.inverse()));
                return Presentation::new(alphabet, rels);
            }
        }
        p.with_relators(rels)
    }
}

fn extend_alphabet(a: &Alphabet) -> Alphabet {
    match a {
        Alphabet::Letters(names) => match ('a'..='z').find(|c| !names.contains(c)) {
            Some(c) => {
                let mut names = names.clone();
                names.push(c);
                Alphabet::Letters(names)
            }
            None => Alphabet::Numeric(names.len() + 1),
        },
        Alphabet::Numeric(n) => Alphabet::Numeric(n + 1),
    }
}

/// Apply a list of moves in order.
pub fn apply_moves(p: &Presentation, moves: &[TietzeMove]) -> Presentation {
    moves.iter().fold(p.clone(), |acc, m| m.apply(&acc))
}

/// Presentation generators that never occur in any relator.
pub fn unused_generators(p: &Presentation) -> Vec<usize> {
    let mut used = vec![false; p.n()];
    for r in p.relators() {
        for l in r.letters() {
            used[l.generator()] = true;
        }
    }
    used.iter().enumerate().filter(|(_, &u)| !u).map(|(i, _)| i).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    fn pres(text: &str) -> Presentation {
        Presentation::parse(text).unwrap()
    }

    #[test]
    fn eliminates_generator() {
        let q = tietze_simplify(&pres("gens: a b\nrel: b"));
        assert_eq!(q.n(), 1);
        assert_eq!(q.m(), 0);
        assert_eq!(q.to_string(), "gens: a\n");
    }

    #[test]
    fn collapses_to_trivial() {
        let q = tietze_simplify(&pres("gens: a\nrel: aAa"));
        assert_eq!((q.n(), q.m()), (0, 0));
    }

    #[test]
    fn substitution() {
        // b = a^2 in the second relator, leaving <a | a^6>.
        let q = tietze_simplify(&pres("gens: a b\nrel: aaB\nrel: bbb"));
        assert_eq!(q.n(), 1);
        assert_eq!(q.relators(), &[parse_word("aaaaaa", 1).unwrap()]);
    }

    #[test]
    fn duplicates_up_to_rotation_and_inverse() {
        let q = tietze_simplify(&pres("gens: a b\nrel: abAB\nrel: BAba\nrel: baBA"));
        assert_eq!(q.m(), 1);
    }

    #[test]
    fn moves() {
        let p = pres("gens: a b\nrel: abAB\nrel: aa");
        let q = TietzeMove::AddGenerator { word: parse_word("ab", 2).unwrap() }.apply(&p);
        assert_eq!(q.to_string(), "gens: a b c\nrel: abAB\nrel: aa\nrel: cBA\n");
        let q = TietzeMove::MultiplyRelator { target: 0, source: 1, inverse: true }.apply(&p);
        assert_eq!(q.render_word(&q.relators()[0]), "abABAA");
        let q = TietzeMove::ConjugateRelator { rel: 1, by: Letter::neg(1) }.apply(&p);
        assert_eq!(q.render_word(&q.relators()[1]), "Baab");
        assert_eq!(unused_generators(&pres("gens: a b c\nrel: ac")), vec![1]);
    }
}
