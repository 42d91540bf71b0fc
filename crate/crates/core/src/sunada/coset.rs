//! Coset tables of finite-index subgroups and Reidemeister–Schreier
//! rewriting.

use std::collections::VecDeque;

use crate::error::Error;
use crate::sunada::epi::Homomorphism;
use crate::sunada::group::{FiniteGroup, Subgroup};
use crate::word::{Alphabet, Letter, Presentation, Word};

/// Right action of the free group on `0..index`; coset 0 is the subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    index: usize,
    generators: usize,
    /// `action[c * 2n + 2j]` is `c · x_j`, `action[c * 2n + 2j + 1]` is `c · x_j^{-1}`.
    action: Vec<usize>,
}

impl CosetTable {
    /// Build from the action of each generator, `images[j][c] = c · x_j`.
    /// Inverse columns are derived. Checks that every column is a
    /// permutation and that the action is transitive.
    pub fn from_generator_actions(index: usize, images: &[Vec<usize>]) -> Result<CosetTable, Error> {
        if index == 0 {
            return Err(Error::InvalidCosetTable("index must be positive".into()));
        }
        let n = images.len();
        let mut action = vec![usize::MAX; index * 2 * n];
        for (j, col) in images.iter().enumerate() {
            if col.len() != index {
                return Err(Error::InvalidCosetTable(format!("generator {} acts on {} cosets", j + 1, col.len())));
            }
            for (c, &t) in col.iter().enumerate() {
                if t >= index {
                    return Err(Error::InvalidCosetTable(format!("entry {t} out of range")));
                }
                if action[t * 2 * n + 2 * j + 1] != usize::MAX {
                    return Err(Error::InvalidCosetTable(format!("generator {} does not act bijectively", j + 1)));
                }
                action[c * 2 * n + 2 * j] = t;
                action[t * 2 * n + 2 * j + 1] = c;
            }
        }
        let table = CosetTable { index, generators: n, action };
        if !table.is_transitive() {
            return Err(Error::InvalidCosetTable("action is not transitive".into()));
        }
        Ok(table)
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn act(&self, coset: usize, l: Letter) -> usize {
        self.action[coset * 2 * self.generators + 2 * l.generator() + usize::from(l.is_inverse())]
    }

    pub fn trace(&self, coset: usize, w: &Word) -> usize {
        w.letters().iter().fold(coset, |c, &l| self.act(c, l))
    }

    fn is_transitive(&self) -> bool {
        let mut seen = vec![false; self.index];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        let mut count = 1;
        while let Some(c) = queue.pop_front() {
            for j in 0..self.generators {
                let t = self.act(c, Letter::pos(j));
                if !seen[t] {
                    seen[t] = true;
                    count += 1;
                    queue.push_back(t);
                }
            }
        }
        count == self.index
    }

    /// Whether every relator fixes every coset.
    pub fn satisfies(&self, p: &Presentation) -> bool {
        (0..self.index).all(|c| p.relators().iter().all(|r| self.trace(c, r) == c))
    }
}

/// Coset table of `φ^{-1}(H)`: the right cosets `H g` of `H` in `G`,
/// numbered by their least element, with `x` acting as `H g -> H g φ(x)`.
pub fn preimage_coset_table(phi: &Homomorphism, g: &FiniteGroup, h: &Subgroup) -> Result<CosetTable, Error> {
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in 0..g.order() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        for &e in h.elements() {
            coset_of[g.mul(e, x)] = id;
        }
        reps.push(x);
    }
    let images: Vec<Vec<usize>> =
        phi.images.iter().map(|&y| reps.iter().map(|&r| coset_of[g.mul(r, y)]).collect()).collect();
    CosetTable::from_generator_actions(reps.len(), &images)
}

/// Schreier transversal plus the numbering of the surviving generators.
#[derive(Clone, Debug)]
pub struct SchreierData {
    /// Transversal word for each coset; prefix closed.
    pub transversal: Vec<Word>,
    /// `generator_of[c * n + j]`: index of the Schreier generator for the
    /// edge `c --x_j-->`, `None` on spanning-tree edges.
    pub generator_of: Vec<Option<usize>>,
    pub rank: usize,
}

/// Breadth-first spanning tree from coset 0, scanning `x_1, x_1^{-1}, x_2, ...`.
pub fn schreier_transversal(t: &CosetTable) -> SchreierData {
    let n = t.generators();
    let mut transversal: Vec<Option<Word>> = vec![None; t.index()];
    let mut tree = vec![false; t.index() * n];
    transversal[0] = Some(Word::identity());
    let mut queue = VecDeque::from([0]);
    while let Some(c) = queue.pop_front() {
        for j in 0..n {
            for l in [Letter::pos(j), Letter::neg(j)] {
                let target = t.act(c, l);
                if transversal[target].is_some() {
                    continue;
                }
                let word = transversal[c].as_ref().unwrap().concat(&Word::letter(l));
                transversal[target] = Some(word);
                let edge_source = if l.is_inverse() { target } else { c };
                tree[edge_source * n + j] = true;
                queue.push_back(target);
            }
        }
    }
    let mut next = 0;
    let generator_of = tree
        .iter()
        .map(|&is_tree| {
            if is_tree {
                None
            } else {
                next += 1;
                Some(next - 1)
            }
        })
        .collect();
    SchreierData { transversal: transversal.into_iter().map(Option::unwrap).collect(), generator_of, rank: next }
}

/// Presentation of the subgroup with coset table `t`.
///
/// Generators are the Schreier generators of the non-tree edges `(c, x_j)`
/// in order of `(c, j)`; relators are the rewrites of `u r u^{-1}` for each
/// transversal word `u` and relator `r`, coset-major. Nothing is simplified,
/// so `1 - n' + m' = d (1 - n + m)`. The output uses numeric generator names.
pub fn reidemeister_schreier(p: &Presentation, t: &CosetTable) -> Result<Presentation, Error> {
    let n = p.n();
    if t.generators() != n {
        return Err(Error::InvalidCosetTable(format!(
            "table acts with {} generators, presentation has {n}",
            t.generators()
        )));
    }
    let data = schreier_transversal(t);
    let mut relators = Vec::with_capacity(t.index() * p.m());
    for c in 0..t.index() {
        for (k, r) in p.relators().iter().enumerate() {
            let mut cur = c;
            let mut letters = Vec::new();
            for &l in r.letters() {
                let j = l.generator();
                if l.is_inverse() {
                    let prev = t.act(cur, l);
                    if let Some(s) = data.generator_of[prev * n + j] {
                        letters.push(Letter::neg(s));
                    }
                    cur = prev;
                } else {
                    if let Some(s) = data.generator_of[cur * n + j] {
                        letters.push(Letter::pos(s));
                    }
                    cur = t.act(cur, l);
                }
            }
            if cur != c {
                return Err(Error::InvalidCosetTable(format!("relator {} does not close at coset {c}", k + 1)));
            }
            relators.push(Word::from(letters));
        }
    }
    Ok(Presentation::new(Alphabet::Numeric(data.rank), relators))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::h1_integral;
    use crate::sunada::group::semidirect_zn;

    #[test]
    fn index_one() {
        let p = Presentation::parse("gens: a b\nrel: abAB\nrel: aab").unwrap();
        let t = CosetTable::from_generator_actions(1, &[vec![0], vec![0]]).unwrap();
        let q = reidemeister_schreier(&p, &t).unwrap();
        assert_eq!(q.n(), 2);
        assert_eq!(q.relators(), p.relators());
    }

    #[test]
    fn free_group_index_three() {
        // a acts as a 3-cycle, b trivially.
        let t = CosetTable::from_generator_actions(3, &[vec![1, 2, 0], vec![0, 1, 2]]).unwrap();
        let q = reidemeister_schreier(&Presentation::free(2), &t).unwrap();
        assert_eq!(q.n(), 4);
        assert_eq!(q.m(), 0);
    }

    #[test]
    fn torus_double_cover() {
        let p = Presentation::parse("gens: a b\nrel: abAB").unwrap();
        let t = CosetTable::from_generator_actions(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        let q = reidemeister_schreier(&p, &t).unwrap();
        assert_eq!((q.n(), q.m()), (3, 2));
        let h = h1_integral(&q);
        assert_eq!(h.free_rank, 2);
        assert!(h.torsion.is_empty());
    }

    #[test]
    fn invalid_tables() {
        assert!(CosetTable::from_generator_actions(2, &[vec![0, 0]]).is_err());
        assert!(CosetTable::from_generator_actions(2, &[vec![0, 1]]).is_err());
        let t = CosetTable::from_generator_actions(2, &[vec![1, 0]]).unwrap();
        let p = Presentation::parse("gens: a\nrel: aaa").unwrap();
        assert!(!t.satisfies(&p));
        assert!(matches!(reidemeister_schreier(&p, &t), Err(Error::InvalidCosetTable(_))));
    }

    #[test]
    fn preimage_tables() {
        let g = semidirect_zn(8).unwrap();
        let phi = Homomorphism::new(g.generators().to_vec());
        let p = Presentation::free(phi.images.len());
        let whole = preimage_coset_table(&phi, &g, &Subgroup::whole(&g)).unwrap();
        assert_eq!(whole.index(), 1);
        let regular = preimage_coset_table(&phi, &g, &Subgroup::trivial()).unwrap();
        assert_eq!(regular.index(), 32);
        assert!(regular.satisfies(&p));
        let h = Subgroup::generated(&g, &[g.find("(3,0)").unwrap(), g.find("(5,0)").unwrap()]);
        assert_eq!(preimage_coset_table(&phi, &g, &h).unwrap().index(), 8);
    }
}
