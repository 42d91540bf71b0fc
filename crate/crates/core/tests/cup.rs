use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use proptest::prelude::*;

use fpcup::cup::{abelianization_matrix, cup_matrix_with_basis, kappa_matrix};
use fpcup::intlinalg::null_space_basis;
use fpcup::sunada::tietze::{apply_moves, tietze_simplify, TietzeMove};
use fpcup::{
    cup_matrix, cup_nullity, double_fox, echelon_presentation, fox_jacobian, h1_integral, Letter, Presentation,
    RatMatrix, Word,
};

fn m1() -> Presentation {
    Presentation::parse(include_str!("../../../fixtures/pi1_M1.pres")).unwrap()
}

fn m2() -> Presentation {
    Presentation::parse(include_str!("../../../fixtures/pi1_M2.pres")).unwrap()
}

fn word(n: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..n, any::<bool>()), 0..max_len)
        .prop_map(|v| Word::from(v.into_iter().map(|(g, inv)| Letter::new(g, inv)).collect::<Vec<_>>()))
}

fn commutator(u: &Word, v: &Word) -> Word {
    u.concat(v).concat(&u.inverse()).concat(&v.inverse())
}

/// Presentations on up to four generators whose relators are a mix of
/// random words and products of commutators, so that `b` is often large.
fn presentation() -> impl Strategy<Value = Presentation> {
    (2usize..=4).prop_flat_map(|n| {
        prop::collection::vec((word(n, 4), word(n, 4), word(n, 3), any::<bool>()), 0..4).prop_map(move |parts| {
            let rels = parts
                .into_iter()
                .map(
                    |(u, v, x, plain)| {
                        if plain {
                            u.concat(&x)
                        } else {
                            commutator(&u, &v).concat(&commutator(&x, &v))
                        }
                    },
                )
                .filter(|w| !w.free_reduce().is_empty())
                .collect();
            Presentation::with_generators(n, rels)
        })
    })
}

type Ops = (Vec<(usize, usize, i64)>, Vec<i64>);

fn ops() -> impl Strategy<Value = Ops> {
    (prop::collection::vec((0usize..8, 0usize..8, -2i64..=2), 0..10), prop::collection::vec(1i64..=3, 8))
}

/// Invertible `k x k` matrix: elementary row operations followed by a
/// positive diagonal scaling.
fn invertible(k: usize, (ops, scale): &Ops) -> RatMatrix {
    let mut m: Vec<Vec<i64>> = (0..k).map(|i| (0..k).map(|j| i64::from(i == j)).collect()).collect();
    for &(i, j, q) in ops {
        let (i, j) = (i % k.max(1), j % k.max(1));
        if i != j {
            let src = m[j].clone();
            m[i].iter_mut().zip(src).for_each(|(x, y)| *x += q * y);
        }
    }
    for (row, s) in m.iter_mut().zip(scale) {
        row.iter_mut().for_each(|x| *x *= s);
    }
    RatMatrix::from_int_rows(&m)
}

/// Rank of the cup map computed without echelon presentations: the cochains
/// `r -> Σ_{s,t} u_i(x_s) u_j(x_t) ε_{s,t}(r)` for `i < j`, counted modulo
/// the coboundaries, which are spanned by the Jacobian columns.
fn cup_rank_oracle(p: &Presentation) -> usize {
    let n = p.n();
    let jac = fox_jacobian(p);
    let h1 = null_space_basis(&jac);
    let b = h1.rows();
    let eps: Vec<Vec<Vec<BigInt>>> =
        p.relators().iter().map(|r| (0..n).map(|s| (0..n).map(|t| double_fox(r, s, t)).collect()).collect()).collect();
    let mut columns: Vec<Vec<BigRational>> =
        (0..n).map(|s| (0..p.m()).map(|r| BigRational::from_integer(jac[(r, s)].clone())).collect()).collect();
    let coboundary_rank = RatMatrix::from_rows(columns.clone(), p.m()).rank();
    for i in 0..b {
        for j in i + 1..b {
            let cochain = (0..p.m())
                .map(|r| {
                    let mut v = BigRational::from_integer(BigInt::from(0));
                    for s in 0..n {
                        for t in 0..n {
                            v += h1[(i, s)].clone()
                                * h1[(j, t)].clone()
                                * BigRational::from_integer(eps[r][s][t].clone());
                        }
                    }
                    v
                })
                .collect();
            columns.push(cochain);
        }
    }
    RatMatrix::from_rows(columns, p.m()).rank() - coboundary_rank
}

fn assert_kappa_antisymmetric(p: &Presentation) {
    let e = echelon_presentation(p).unwrap();
    let a = abelianization_matrix(&e);
    for w in &e.base.relators()[e.rank()..] {
        let k = kappa_matrix(w, &a);
        for i in 0..a.b() {
            for j in 0..a.b() {
                assert_eq!(k[(i, j)], -k[(j, i)].clone());
            }
        }
    }
}

#[test]
fn standard_spaces() {
    let cases = [
        ("gens: a b\nrel: abAB", (2, 1, 1, 0)),
        ("gens: a b c\nrel: abAB\nrel: acAC\nrel: bcBC", (3, 3, 3, 0)),
        ("gens: a b c d\nrel: abABcdCD", (4, 1, 1, 5)),
        ("gens: a b c d\nrel: abAB\nrel: cdCD", (4, 2, 2, 4)),
        ("gens: a b\nrel: aa\nrel: abAB", (1, 1, 0, 0)),
        ("gens: a b\nrel: abaB", (1, 0, 0, 0)),
    ];
    for (text, (b, dim_h2, rank, nullity)) in cases {
        let c = cup_nullity(&Presentation::parse(text).unwrap()).unwrap();
        assert_eq!((c.b, c.dim_h2, c.rank, c.nullity), (b, dim_h2, rank, nullity), "{text}");
    }
}

#[test]
fn fixtures_agree_with_oracle() {
    for p in [m1(), m2()] {
        assert_eq!(cup_matrix(&p).unwrap().rank, cup_rank_oracle(&p));
        assert_kappa_antisymmetric(&p);
    }
}

#[test]
fn fixtures_survive_simplification() {
    for p in [m1(), m2()] {
        let q = tietze_simplify(&p);
        assert_eq!(cup_nullity(&q).unwrap().nullity, cup_nullity(&p).unwrap().nullity);
        assert!(h1_integral(&q).is_isomorphic(&h1_integral(&p)));
    }
}

fn random_moves(p: &Presentation, raw: &[(u8, usize, usize, bool, Word)]) -> Vec<TietzeMove> {
    let mut m = p.m();
    let mut n = p.n();
    let mut moves = Vec::new();
    for (kind, x, y, flag, w) in raw {
        let mv = match kind % 6 {
            0 => TietzeMove::CyclicPermute { rel: x % m, shift: *y },
            1 => TietzeMove::InvertRelator { rel: x % m },
            2 if m > 1 && x % m != y % m => {
                TietzeMove::MultiplyRelator { target: x % m, source: y % m, inverse: *flag }
            }
            3 => TietzeMove::ConjugateRelator { rel: x % m, by: Letter::new(y % n, *flag) },
            4 => {
                m += 1;
                TietzeMove::AddConsequence { a: x % (m - 1), b: y % (m - 1) }
            }
            5 => {
                let word = Word::from(
                    w.letters().iter().map(|l| Letter::new(l.generator() % n, l.is_inverse())).collect::<Vec<_>>(),
                );
                n += 1;
                m += 1;
                TietzeMove::AddGenerator { word }
            }
            _ => continue,
        };
        moves.push(mv);
    }
    moves
}

fn fix_rotation(p: &Presentation, moves: Vec<TietzeMove>) -> Vec<TietzeMove> {
    // Clamp rotation offsets to the relator being rotated.
    let mut cur = p.clone();
    let mut out = Vec::new();
    for mv in moves {
        let mv = match mv {
            TietzeMove::CyclicPermute { rel, shift } => {
                TietzeMove::CyclicPermute { rel, shift: shift % cur.relators()[rel].len().max(1) }
            }
            other => other,
        };
        cur = mv.apply(&cur);
        out.push(mv);
    }
    out
}

fn moves_strategy() -> impl Strategy<Value = Vec<(u8, usize, usize, bool, Word)>> {
    prop::collection::vec((any::<u8>(), 0usize..64, 0usize..64, any::<bool>(), word(9, 5)), 1..6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn echelon_invariants(p in presentation()) {
        let e = echelon_presentation(&p).unwrap();
        let t = fox_jacobian(&p);
        prop_assert_eq!(fox_jacobian(&e.base), e.jacobian.clone());
        prop_assert!(e.jacobian.is_hermite());
        prop_assert_eq!(e.transform.mul(&t), e.jacobian.clone());
        prop_assert_eq!(e.transform.determinant().abs(), BigInt::one());
        prop_assert_eq!(e.rank(), t.rank());
        prop_assert!(h1_integral(&e.base).is_isomorphic(&h1_integral(&p)));
    }

    #[test]
    fn cup_rank_matches_oracle(p in presentation()) {
        let c = cup_matrix(&p).unwrap();
        prop_assert_eq!(c.rank, cup_rank_oracle(&p));
        prop_assert_eq!(c.rank + c.nullity, c.b * (c.b.saturating_sub(1)) / 2);
        prop_assert_eq!(c.dim_h2 + p.n(), p.m() + c.b);
        assert_kappa_antisymmetric(&p);
    }

    #[test]
    fn cup_basis_change_invariance(p in presentation(), q in ops()) {
        let e = echelon_presentation(&p).unwrap();
        let a = abelianization_matrix(&e);
        let base = cup_matrix_with_basis(&e, &a).unwrap();
        let changed = cup_matrix_with_basis(&e, &a.change_basis(&invertible(a.b(), &q))).unwrap();
        prop_assert_eq!(changed.summary(), base.summary());
    }

    #[test]
    fn fixture_basis_change_invariance(q in ops(), which in any::<bool>()) {
        let p = if which { m1() } else { m2() };
        let e = echelon_presentation(&p).unwrap();
        let a = abelianization_matrix(&e);
        let c = cup_matrix_with_basis(&e, &a.change_basis(&invertible(3, &q))).unwrap();
        prop_assert_eq!((c.rank, c.nullity), if which { (3, 0) } else { (0, 3) });
    }

    #[test]
    fn fixture_tietze_invariance(raw in moves_strategy(), which in any::<bool>()) {
        let p = if which { m1() } else { m2() };
        let moves = fix_rotation(&p, random_moves(&p, &raw));
        let q = apply_moves(&p, &moves);
        let c = cup_nullity(&q).unwrap();
        prop_assert_eq!((c.rank, c.nullity), if which { (3, 0) } else { (0, 3) });
        prop_assert!(h1_integral(&q).is_isomorphic(&h1_integral(&p)));
    }

    #[test]
    fn random_tietze_invariance(p in presentation().prop_filter("needs a relator", |p| p.m() > 0), raw in moves_strategy()) {
        let moves = fix_rotation(&p, random_moves(&p, &raw));
        let q = apply_moves(&p, &moves);
        let before = cup_nullity(&p).unwrap();
        let after = cup_nullity(&q).unwrap();
        prop_assert_eq!((after.b, after.rank, after.nullity), (before.b, before.rank, before.nullity));
        let s = tietze_simplify(&q);
        let simplified = cup_nullity(&s).unwrap();
        prop_assert_eq!((simplified.b, simplified.nullity), (before.b, before.nullity));
        prop_assert!(h1_integral(&s).is_isomorphic(&h1_integral(&p)));
    }
}
