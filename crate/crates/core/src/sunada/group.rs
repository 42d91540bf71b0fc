//! Finite groups given by multiplication tables, their subgroups and
//! conjugacy data.

use std::collections::{HashMap, VecDeque};

use log::warn;
use num_integer::Integer;

use crate::error::Error;

/// Groups up to this order are checked for associativity exhaustively.
pub const FULL_VALIDATION_LIMIT: usize = 512;

/// Default cap on the order of a group built by closure.
pub const DEFAULT_ORDER_CAP: usize = 4096;

/// A finite group on the elements `0..order`, with 0 the identity.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    generators: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Build from a full multiplication table, `table[a * order + b] = a * b`.
    ///
    /// Checks the group axioms (associativity exhaustively up to
    /// [`FULL_VALIDATION_LIMIT`], by sampling above it) and that the
    /// generators generate.
    pub fn from_table(
        order: usize,
        table: Vec<u32>,
        generators: Vec<usize>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, Error> {
        if order == 0 {
            return Err(Error::InvalidGroup("a group has at least one element".into()));
        }
        if table.len() != order * order {
            return Err(Error::InvalidGroup(format!("table has {} entries, expected {}", table.len(), order * order)));
        }
        if table.iter().any(|&x| x as usize >= order) {
            return Err(Error::InvalidGroup("table entry out of range".into()));
        }
        if let Some(l) = &labels {
            if l.len() != order {
                return Err(Error::InvalidGroup("label count differs from order".into()));
            }
        }
        if let Some(&g) = generators.iter().find(|&&g| g >= order) {
            return Err(Error::InvalidGroup(format!("generator e{g} out of range")));
        }
        for x in 0..order {
            if table[x] as usize != x || table[x * order] as usize != x {
                return Err(Error::InvalidGroup("element 0 is not the identity".into()));
            }
        }
        let mut inverses = vec![u32::MAX; order];
        for x in 0..order {
            let row = &table[x * order..(x + 1) * order];
            let mut inv = None;
            for (y, &p) in row.iter().enumerate() {
                if p == 0 {
                    if inv.is_some() {
                        return Err(Error::InvalidGroup(format!("e{x} has two right inverses")));
                    }
                    inv = Some(y);
                }
            }
            let y = inv.ok_or_else(|| Error::InvalidGroup(format!("e{x} has no inverse")))?;
            if table[y * order + x] != 0 {
                return Err(Error::InvalidGroup(format!("inverse of e{x} is one-sided")));
            }
            inverses[x] = y as u32;
        }
        let group = FiniteGroup { order, table, inverses, generators, labels };
        group.check_associativity()?;
        if group.closure(&group.generators).len() != order {
            return Err(Error::InvalidGroup("generators do not generate the group".into()));
        }
        Ok(group)
    }

    fn check_associativity(&self) -> Result<(), Error> {
        let n = self.order;
        let fail = |a, b, c| Err(Error::InvalidGroup(format!("(e{a} e{b}) e{c} != e{a} (e{b} e{c})")));
        if n <= FULL_VALIDATION_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return fail(a, b, c);
                        }
                    }
                }
            }
        } else {
            warn!("group of order {n} above {FULL_VALIDATION_LIMIT}: associativity only spot-checked");
            // Fixed LCG so validation is reproducible.
            let mut state: u64 = 0x9E37_79B9_7F4A_7C15;
            let mut next = || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((state >> 33) as usize) % n
            };
            for _ in 0..200_000 {
                let (a, b, c) = (next(), next(), next());
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                    return fail(a, b, c);
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// `g x g^{-1}`
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn label(&self, e: usize) -> String {
        match &self.labels {
            Some(l) => l[e].clone(),
            None => format!("e{e}"),
        }
    }

    /// Element with the given label, or `eK` for element K.
    pub fn find(&self, label: &str) -> Option<usize> {
        if let Some(l) = &self.labels {
            if let Some(i) = l.iter().position(|x| x == label) {
                return Some(i);
            }
        }
        let k: usize = label.strip_prefix('e')?.parse().ok()?;
        (k < self.order).then_some(k)
    }

    /// Sorted list of the elements of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut out = vec![0];
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

/// `(Z/n)^* ⋉ Z/n` with `(a, b)(a', b') = (a a', a b' + b)`, elements
/// labelled `(a,b)` and ordered lexicographically, so `(1,0)` comes first.
pub fn semidirect_zn(n: u64) -> Result<FiniteGroup, Error> {
    if n == 0 {
        return Err(Error::InvalidGroup("modulus must be positive".into()));
    }
    let units: Vec<u64> = (0..n).filter(|a| a.gcd(&n) == 1).collect();
    let elems: Vec<(u64, u64)> = units.iter().flat_map(|&a| (0..n).map(move |b| (a, b))).collect();
    let order = elems.len();
    let index: HashMap<(u64, u64), usize> = elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut table = Vec::with_capacity(order * order);
    for &(a, b) in &elems {
        for &(a2, b2) in &elems {
            let prod = ((a * a2) % n, (a * b2 + b) % n);
            table.push(index[&prod] as u32);
        }
    }
    let labels: Vec<String> = elems.iter().map(|(a, b)| format!("({a},{b})")).collect();
    // Greedy generating set in element order.
    let mut gens = Vec::new();
    let mut group = FiniteGroup { order, table, inverses: Vec::new(), generators: Vec::new(), labels: Some(labels) };
    group.inverses =
        (0..order).map(|x| (0..order).find(|&y| group.table[x * order + y] == 0).unwrap() as u32).collect();
    let mut span = group.closure(&gens);
    for x in 0..order {
        if span.len() == order {
            break;
        }
        if span.binary_search(&x).is_err() {
            gens.push(x);
            span = group.closure(&gens);
        }
    }
    let FiniteGroup { table, labels, .. } = group;
    FiniteGroup::from_table(order, table, gens, labels)
}

/// Find the element `(a,b)` of a group built by [`semidirect_zn`].
pub fn semidirect_element(g: &FiniteGroup, a: u64, b: u64) -> Option<usize> {
    g.find(&format!("({a},{b})"))
}

/// A permutation of `0..degree`, stored as its image list.
pub type Permutation = Vec<usize>;

/// Parse cycle notation with 1-based points, e.g. `(1 2 3)(4 5)` or `()`.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation, Error> {
    let mut perm: Permutation = (0..degree).collect();
    let bad = |m: String| Error::InvalidGroup(format!("cycle notation {text:?}: {m}"));
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body_start = rest.strip_prefix('(').ok_or_else(|| bad("expected `(`".into()))?;
        let end = body_start.find(')').ok_or_else(|| bad("unclosed cycle".into()))?;
        let body = &body_start[..end];
        let points: Vec<usize> = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| bad(format!("bad point {t:?}"))))
            .collect::<Result<_, _>>()?;
        for &p in &points {
            if p == 0 || p > degree {
                return Err(bad(format!("point {p} outside 1..={degree}")));
            }
        }
        let mut sorted = points.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != points.len() {
            return Err(bad("repeated point in a cycle".into()));
        }
        // Compose the new cycle after what we have so far.
        let mut cyc: Permutation = (0..degree).collect();
        for k in 0..points.len() {
            cyc[points[k] - 1] = points[(k + 1) % points.len()] - 1;
        }
        perm = perm.iter().map(|&x| cyc[x]).collect();
        rest = body_start[end + 1..].trim_start();
    }
    Ok(perm)
}

/// Cycle notation, 1-based, `()` for the identity.
pub fn format_cycles(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cyc = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cyc.push((x + 1).to_string());
            x = p[x];
        }
        out.push('(');
        out.push_str(&cyc.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Closure of permutation generators. Products compose left to right:
/// `(g h)(x) = h(g(x))`. Elements are numbered in breadth-first discovery
/// order from the identity and labelled in cycle notation.
pub fn group_from_permutations(degree: usize, gens: &[Permutation], cap: usize) -> Result<FiniteGroup, Error> {
    for g in gens {
        let mut sorted = g.clone();
        sorted.sort_unstable();
        if g.len() != degree || sorted.iter().enumerate().any(|(i, &x)| i != x) {
            return Err(Error::InvalidGroup(format!("not a permutation of degree {degree}: {g:?}")));
        }
    }
    let compose = |g: &Permutation, h: &Permutation| -> Permutation { g.iter().map(|&x| h[x]).collect() };
    let identity: Permutation = (0..degree).collect();
    let mut elems = vec![identity.clone()];
    let mut index: HashMap<Permutation, usize> = HashMap::from([(identity, 0)]);
    let mut frontier = 0;
    while frontier < elems.len() {
        for g in gens {
            let y = compose(&elems[frontier], g);
            if !index.contains_key(&y) {
                if elems.len() == cap {
                    return Err(Error::OrderCap { cap });
                }
                index.insert(y.clone(), elems.len());
                elems.push(y);
            }
        }
        frontier += 1;
    }
    let order = elems.len();
    let mut table = Vec::with_capacity(order * order);
    for a in &elems {
        for b in &elems {
            table.push(index[&compose(a, b)] as u32);
        }
    }
    let gen_idx = gens.iter().map(|g| index[g]).collect();
    let labels = elems.iter().map(|p| format_cycles(p)).collect();
    FiniteGroup::from_table(order, table, gen_idx, Some(labels))
}

/// A subgroup, as the sorted list of its elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    pub fn generated(g: &FiniteGroup, gens: &[usize]) -> Subgroup {
        Subgroup { elements: g.closure(gens) }
    }

    pub fn whole(g: &FiniteGroup) -> Subgroup {
        Subgroup { elements: (0..g.order()).collect() }
    }

    pub fn trivial() -> Subgroup {
        Subgroup { elements: vec![0] }
    }

    /// Checks that `elements` is exactly a subgroup.
    pub fn from_elements(g: &FiniteGroup, mut elements: Vec<usize>) -> Result<Subgroup, Error> {
        elements.sort_unstable();
        elements.dedup();
        if elements.first() != Some(&0) {
            return Err(Error::InvalidGroup("subgroup must contain the identity".into()));
        }
        if elements.iter().any(|&x| x >= g.order()) {
            return Err(Error::InvalidGroup("subgroup element out of range".into()));
        }
        let s = Subgroup { elements };
        for &a in &s.elements {
            if !s.contains(g.inv(a)) {
                return Err(Error::InvalidGroup(format!("not closed under inverses at {}", g.label(a))));
            }
            for &b in &s.elements {
                if !s.contains(g.mul(a, b)) {
                    return Err(Error::InvalidGroup(format!(
                        "not closed: {} * {} leaves the set",
                        g.label(a),
                        g.label(b)
                    )));
                }
            }
        }
        Ok(s)
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// `g H g^{-1}`
    pub fn conjugate(&self, group: &FiniteGroup, g: usize) -> Subgroup {
        let mut elements: Vec<usize> = self.elements.iter().map(|&h| group.conjugate(h, g)).collect();
        elements.sort_unstable();
        Subgroup { elements }
    }
}

/// Conjugacy classes, each sorted, ordered by least element.
pub fn conjugacy_classes(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let mut assigned = vec![false; g.order()];
    let mut classes = Vec::new();
    for x in 0..g.order() {
        if assigned[x] {
            continue;
        }
        let mut class: Vec<usize> = (0..g.order()).map(|y| g.conjugate(x, y)).collect();
        class.sort_unstable();
        class.dedup();
        for &c in &class {
            assigned[c] = true;
        }
        classes.push(class);
    }
    classes
}

/// Class index of every element, consistent with [`conjugacy_classes`].
pub fn class_map(g: &FiniteGroup) -> Vec<usize> {
    let mut map = vec![0; g.order()];
    for (k, class) in conjugacy_classes(g).iter().enumerate() {
        for &x in class {
            map[x] = k;
        }
    }
    map
}

/// Whether the subgroups meet every conjugacy class in equally many elements.
pub fn is_almost_conjugate(g: &FiniteGroup, h1: &Subgroup, h2: &Subgroup) -> bool {
    if h1.order() != h2.order() {
        return false;
    }
    let map = class_map(g);
    let classes = map.iter().max().map_or(0, |m| m + 1);
    let mut count = vec![0i64; classes];
    for &x in h1.elements() {
        count[map[x]] += 1;
    }
    for &x in h2.elements() {
        count[map[x]] -= 1;
    }
    count.iter().all(|&c| c == 0)
}

/// Whether some `g` has `g H1 g^{-1} = H2`.
pub fn are_conjugate_subgroups(g: &FiniteGroup, h1: &Subgroup, h2: &Subgroup) -> bool {
    h1.order() == h2.order() && (0..g.order()).any(|x| h1.conjugate(g, x) == *h2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z8() -> FiniteGroup {
        semidirect_zn(8).unwrap()
    }

    fn el(g: &FiniteGroup, a: u64, b: u64) -> usize {
        semidirect_element(g, a, b).unwrap()
    }

    #[test]
    fn semidirect_basics() {
        let g = z8();
        assert_eq!(g.order(), 32);
        assert_eq!(g.label(0), "(1,0)");
        assert_eq!(g.mul(el(&g, 7, 1), el(&g, 7, 0)), el(&g, 1, 1));
        for x in 0..32 {
            assert_eq!(g.mul(0, x), x);
        }
        assert!(!g.is_abelian());
        assert_eq!(semidirect_zn(2).unwrap().order(), 2);
        assert_eq!(semidirect_zn(1).unwrap().order(), 1);
        assert_eq!(semidirect_zn(5).unwrap().order(), 20);
    }

    #[test]
    fn permutation_groups() {
        let s3 =
            group_from_permutations(3, &[parse_cycles("(1 2 3)", 3).unwrap(), parse_cycles("(1 2)", 3).unwrap()], 100)
                .unwrap();
        assert_eq!(s3.order(), 6);
        let trivial = group_from_permutations(4, &[], 100).unwrap();
        assert_eq!(trivial.order(), 1);
        let psl27 = group_from_permutations(
            7,
            &[parse_cycles("(1 2 3 4 5 6 7)", 7).unwrap(), parse_cycles("(2 3)(4 7)", 7).unwrap()],
            1000,
        )
        .unwrap();
        assert_eq!(psl27.order(), 168);
        assert!(matches!(
            group_from_permutations(
                5,
                &[parse_cycles("(1 2 3 4 5)", 5).unwrap(), parse_cycles("(1 2)", 5).unwrap()],
                50
            ),
            Err(Error::OrderCap { cap: 50 })
        ));
    }

    #[test]
    fn cycle_notation() {
        let p = parse_cycles("(1 2 3)(4 5)", 5).unwrap();
        assert_eq!(p, vec![1, 2, 0, 4, 3]);
        assert_eq!(format_cycles(&p), "(1 2 3)(4 5)");
        assert_eq!(format_cycles(&parse_cycles("()", 3).unwrap()), "()");
        assert!(parse_cycles("(1 1)", 3).is_err());
        assert!(parse_cycles("(1 4)", 3).is_err());
    }

    #[test]
    fn bad_tables_rejected() {
        // Z/2 table with a wrong identity row.
        assert!(FiniteGroup::from_table(2, vec![1, 0, 0, 1], vec![1], None).is_err());
        // Latin square that is not associative (order 5 loop).
        let loop5: Vec<u32> = vec![
            0, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 4, 0, 1, 3, //
            3, 2, 4, 0, 1, //
            4, 3, 1, 2, 0,
        ];
        assert!(FiniteGroup::from_table(5, loop5, vec![1, 2], None).is_err());
        let z2 = FiniteGroup::from_table(2, vec![0, 1, 1, 0], vec![], None);
        assert!(z2.is_err(), "empty generator list does not generate Z/2");
    }

    #[test]
    fn classes() {
        let g = z8();
        let classes = conjugacy_classes(&g);
        assert_eq!(classes[0], vec![0]);
        assert_eq!(classes.iter().map(Vec::len).sum::<usize>(), 32);
        let ab = semidirect_zn(3).unwrap(); // S3
        assert_eq!(conjugacy_classes(&ab).len(), 3);
        let z5 = group_from_permutations(5, &[parse_cycles("(1 2 3 4 5)", 5).unwrap()], 10).unwrap();
        assert_eq!(conjugacy_classes(&z5).len(), 5);
    }

    #[test]
    fn example_pair() {
        let g = z8();
        let h1 = Subgroup::from_elements(&g, vec![el(&g, 1, 0), el(&g, 3, 0), el(&g, 5, 0), el(&g, 7, 0)]).unwrap();
        let h2 = Subgroup::from_elements(&g, vec![el(&g, 1, 0), el(&g, 3, 4), el(&g, 5, 4), el(&g, 7, 0)]).unwrap();
        assert!(is_almost_conjugate(&g, &h1, &h2));
        assert!(!are_conjugate_subgroups(&g, &h1, &h2));
        assert!(is_almost_conjugate(&g, &h1, &h1));
        assert!(are_conjugate_subgroups(&g, &h1, &h1));
        let x = el(&g, 3, 5);
        let c = h1.conjugate(&g, x);
        assert!(is_almost_conjugate(&g, &h1, &c));
        assert!(are_conjugate_subgroups(&g, &h1, &c));
        assert!(Subgroup::from_elements(&g, vec![el(&g, 1, 0), el(&g, 3, 0)]).is_ok());
        assert!(Subgroup::from_elements(&g, vec![el(&g, 1, 0), el(&g, 3, 1)]).is_err());
    }
}
