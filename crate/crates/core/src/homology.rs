//! Integral first homology (abelianization) of a finitely presented group.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::echelon::fox_jacobian;
use crate::intlinalg::snf_invariant_factors;
use crate::word::Presentation;

/// `Z^free_rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k`, with `1 < d_1 | d_2 | ... | d_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomologyReport {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyReport {
    /// Build from arbitrary cyclic orders (0 meaning `Z`), normalizing to
    /// invariant factors.
    pub fn from_cyclic_orders(orders: &[u64]) -> HomologyReport {
        let free_rank = orders.iter().filter(|&&o| o == 0).count();
        let mut by_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &o in orders.iter().filter(|&&o| o > 1) {
            for (p, e) in factorize(o) {
                by_prime.entry(p).or_default().push(e);
            }
        }
        let len = by_prime.values().map(Vec::len).max().unwrap_or(0);
        let mut torsion = vec![BigInt::one(); len];
        for (p, mut exps) in by_prime {
            exps.sort_unstable();
            let offset = len - exps.len();
            for (k, e) in exps.into_iter().enumerate() {
                torsion[offset + k] *= BigInt::from(p).pow(e);
            }
        }
        HomologyReport { free_rank, torsion }
    }

    /// Multiset of prime powers `p^e` in the primary decomposition, sorted.
    /// Two reports describe isomorphic groups iff their free ranks and
    /// primary parts agree.
    pub fn primary_decomposition(&self) -> Vec<(u64, u32)> {
        let mut out: Vec<(u64, u32)> = Vec::new();
        for d in &self.torsion {
            let d = d.to_u64().expect("torsion coefficient out of u64 range");
            out.extend(factorize(d));
        }
        out.sort_unstable();
        out
    }

    pub fn is_isomorphic(&self, other: &HomologyReport) -> bool {
        self.free_rank == other.free_rank && self.primary_decomposition() == other.primary_decomposition()
    }
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Renders as `Z^3 + Z/2^4 + Z/4^2`, exponents only when above one; the
/// trivial group is `0`.
impl fmt::Display for HomologyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let d = &self.torsion[i];
            let run = self.torsion[i..].iter().take_while(|x| *x == d).count();
            if run == 1 {
                parts.push(format!("Z/{d}"));
            } else {
                parts.push(format!("Z/{d}^{run}"));
            }
            i += run;
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

pub fn h1_integral(p: &Presentation) -> HomologyReport {
    let factors = snf_invariant_factors(&fox_jacobian(p));
    let free_rank = p.n() - factors.len();
    let torsion = factors.into_iter().filter(|d| !d.is_one()).collect();
    HomologyReport { free_rank, torsion }
}
