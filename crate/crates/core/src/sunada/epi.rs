use crate::error::Error;
use crate::sunada::group::FiniteGroup;
use crate::word::{Presentation, Word};

/// Default cap on search nodes visited by [`find_epimorphisms`].
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// A homomorphism from a presented group to a finite group, given by the
/// images of the generators. The domain and codomain are not stored; every
/// method takes them explicitly.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Homomorphism {
    pub images: Vec<usize>,
}

impl Homomorphism {
    pub fn new(images: Vec<usize>) -> Self {
        Homomorphism { images }
    }

    pub fn evaluate(&self, g: &FiniteGroup, w: &Word) -> usize {
        evaluate(g, &self.images, w)
    }

    /// Every relator maps to the identity.
    pub fn is_well_defined(&self, p: &Presentation, g: &FiniteGroup) -> bool {
        self.images.len() == p.n()
            && self.images.iter().all(|&x| x < g.order())
            && p.relators().iter().all(|r| self.evaluate(g, r) == 0)
    }

    pub fn is_surjective(&self, g: &FiniteGroup) -> bool {
        g.closure(&self.images).len() == g.order()
    }

    /// Checks both conditions, with a readable error.
    pub fn validate(&self, p: &Presentation, g: &FiniteGroup) -> Result<(), Error> {
        if self.images.len() != p.n() {
            return Err(Error::Precondition(format!(
                "{} generator images given for {} generators",
                self.images.len(),
                p.n()
            )));
        }
        if !self.is_well_defined(p, g) {
            return Err(Error::Precondition("generator images do not satisfy the relators".into()));
        }
        if !self.is_surjective(g) {
            return Err(Error::Precondition("homomorphism is not surjective".into()));
        }
        Ok(())
    }
}

fn evaluate(g: &FiniteGroup, images: &[usize], w: &Word) -> usize {
    w.letters().iter().fold(0, |acc, l| {
        let x = images[l.generator()];
        g.mul(acc, if l.is_inverse() { g.inv(x) } else { x })
    })
}

#[derive(Clone, Copy, Debug)]
pub struct EpiSearchOptions {
    /// Maximum number of (partial) assignments to try.
    pub budget: u64,
    pub max_results: usize,
}

impl Default for EpiSearchOptions {
    fn default() -> Self {
        EpiSearchOptions { budget: DEFAULT_BUDGET, max_results: usize::MAX }
    }
}

/// Surjective homomorphisms `P -> G`, in lexicographic order of the image
/// tuples.
///
/// Depth-first over generator images. A relator is checked as soon as every
/// generator it mentions has an image, so failing prefixes of the
/// assignment are cut off early. Exceeding the budget is an error, never a
/// silent truncation.
pub fn find_epimorphisms(
    p: &Presentation,
    g: &FiniteGroup,
    opts: EpiSearchOptions,
) -> Result<Vec<Homomorphism>, Error> {
    let n = p.n();
    // Relators bucketed by the last generator they need.
    let mut checks: Vec<Vec<&Word>> = vec![Vec::new(); n.max(1)];
    for r in p.relators() {
        if let Some(k) = r.max_generator() {
            checks[k].push(r);
        }
    }
    let mut search = Search { g, checks, opts, visited: 0, images: Vec::with_capacity(n), found: Vec::new() };
    if opts.max_results == 0 {
        return Ok(Vec::new());
    }
    if n == 0 {
        if g.order() == 1 {
            search.found.push(Homomorphism::new(Vec::new()));
        }
        return Ok(search.found);
    }
    search.descend(n)?;
    Ok(search.found)
}

struct Search<'a> {
    g: &'a FiniteGroup,
    checks: Vec<Vec<&'a Word>>,
    opts: EpiSearchOptions,
    visited: u64,
    images: Vec<usize>,
    found: Vec<Homomorphism>,
}

impl Search<'_> {
    /// Returns `Ok(true)` once enough results are collected.
    fn descend(&mut self, n: usize) -> Result<bool, Error> {
        let depth = self.images.len();
        for x in 0..self.g.order() {
            self.visited += 1;
            if self.visited > self.opts.budget {
                return Err(Error::BudgetExceeded { budget: self.opts.budget });
            }
            self.images.push(x);
            let ok = self.checks[depth].iter().all(|r| evaluate(self.g, &self.images, r) == 0);
            if ok {
                if depth + 1 == n {
                    if self.g.closure(&self.images).len() == self.g.order() {
                        self.found.push(Homomorphism::new(self.images.clone()));
                        if self.found.len() >= self.opts.max_results {
                            self.images.pop();
                            return Ok(true);
                        }
                    }
                } else if self.descend(n)? {
                    self.images.pop();
                    return Ok(true);
                }
            }
            self.images.pop();
        }
        Ok(false)
    }
}
