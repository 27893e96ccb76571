use std::collections::HashMap;

use proptest::prelude::*;
use rational_tetra::algebra::{is_square_up_to_constant, ratio, Rational};
use rational_tetra::cayley_menger::{cm_value, cm_value_by_determinant, realizability, EdgeTuple};
use rational_tetra::points::{edge_permutations, square_class};
use rational_tetra::{MultiPoly, PolyMatrix, RationalMatrix};

const VARS: [&str; 3] = ["x", "y", "z"];

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| ratio(n, d))
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u16..3, 3), small_rational()), 0..6)
        .prop_map(|terms| MultiPoly::from_terms(&VARS, terms).unwrap())
}

/// Homogeneous of degree 1..=3 in x, y, z.
fn homogeneous_poly() -> impl Strategy<Value = MultiPoly> {
    (1u16..=3, prop::collection::vec((0u16..=3, 0u16..=3, small_rational()), 1..5)).prop_map(|(deg, raw)| {
        let terms = raw.into_iter().map(|(i, j, c)| {
            let i = i.min(deg);
            let j = j.min(deg - i);
            (vec![i, j, deg - i - j], c)
        });
        MultiPoly::from_terms(&VARS, terms).unwrap()
    })
}

fn edges() -> impl Strategy<Value = EdgeTuple> {
    prop::array::uniform6(small_rational().prop_map(|r| if r < Rational::from_integer(0.into()) { -r } else { r }))
        .prop_map(EdgeTuple::new)
}

fn permutation_sum(m: &[Vec<Rational>]) -> Rational {
    fn go(m: &[Vec<Rational>], row: usize, used: &mut Vec<bool>, sign: i32) -> Rational {
        let n = m.len();
        if row == n {
            return Rational::from_integer(sign.into());
        }
        let mut total = Rational::from_integer(0.into());
        for j in 0..n {
            if used[j] {
                continue;
            }
            let inversions = (j + 1..n).filter(|&k| used[k]).count() as i32;
            used[j] = true;
            let s = if inversions % 2 == 0 { sign } else { -sign };
            total += &m[row][j] * go(m, row + 1, used, s);
            used[j] = false;
        }
        total
    }
    go(m, 0, &mut vec![false; m.len()], 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in poly(), q in poly(), pt in prop::array::uniform3(small_rational())) {
        let at: HashMap<String, Rational> = VARS.iter().map(|v| v.to_string()).zip(pt).collect();
        let (pv, qv) = (p.evaluate(&at).unwrap(), q.evaluate(&at).unwrap());
        prop_assert_eq!((&p * &q).evaluate(&at).unwrap(), &pv * &qv);
        prop_assert_eq!((&p + &q).evaluate(&at).unwrap(), pv + qv);
    }

    #[test]
    fn canonical_text_round_trips(p in poly()) {
        let text = p.to_canonical_string();
        prop_assert_eq!(MultiPoly::parse(&VARS, &text).unwrap(), p);
    }

    #[test]
    fn determinant_matches_permutation_sum(n in 1usize..5, data in prop::collection::vec(small_rational(), 16)) {
        let rows: Vec<Vec<Rational>> = (0..n).map(|i| data[i * n..(i + 1) * n].to_vec()).collect();
        let expected = permutation_sum(&rows);
        let m = RationalMatrix::from_rows(rows.clone()).unwrap();
        prop_assert_eq!(m.determinant().unwrap(), expected.clone());
        let pm = PolyMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|x| MultiPoly::from_rational(x.clone())).collect()).collect(),
        ).unwrap();
        prop_assert_eq!(pm.determinant().unwrap().constant_value().unwrap_or_default(), expected);
    }

    #[test]
    fn kernel_vectors_are_annihilated(rows in 1usize..5, cols in 1usize..6, data in prop::collection::vec(-3i64..=3, 30)) {
        let entries: Vec<Rational> = data[..rows * cols].iter().map(|&x| Rational::from_integer(x.into())).collect();
        let m = RationalMatrix::new(rows, cols, entries).unwrap();
        let kernel = m.kernel_basis();
        prop_assert_eq!(kernel.len() + m.rank(), cols);
        for v in &kernel {
            prop_assert!(m.mul_vec(v).iter().all(|x| *x == Rational::from_integer(0.into())));
        }
    }

    #[test]
    fn square_times_constant_is_detected(p in homogeneous_poly(), c in small_rational()) {
        prop_assume!(!p.is_zero() && c != Rational::from_integer(0.into()));
        let target = p.square().scale(&c);
        let s = is_square_up_to_constant(&target, &VARS);
        prop_assert!(s.as_ref().is_some_and(|s| s.reproduces(&target)), "{:?}", s);
    }

    #[test]
    fn cm_is_invariant_under_relabeling(d in edges()) {
        let v = cm_value(&d);
        prop_assert_eq!(&v, &cm_value_by_determinant(&d));
        for perm in edge_permutations() {
            let e = EdgeTuple::new(perm.map(|i| d.d[i].clone()));
            prop_assert_eq!(cm_value(&e), v.clone());
        }
    }

    #[test]
    fn cm_scales_with_the_sixth_power(d in edges(), k in small_rational()) {
        let scaled = EdgeTuple::new(d.d.clone().map(|x| x * &k));
        prop_assert_eq!(cm_value(&scaled), cm_value(&d) * k.pow(6));
    }

    #[test]
    fn realizable_tuples_have_positive_cm(d in edges()) {
        let r = realizability(&d).unwrap();
        if r.realizable {
            prop_assert!(r.cm_value > Rational::from_integer(0.into()));
        }
    }

    #[test]
    fn square_class_ignores_square_factors(n in 1i64..5000, d in 1i64..200, k in 1i64..50) {
        let x = ratio(n, d);
        let y = &x * ratio(k * k, 1);
        prop_assert_eq!(square_class(&x).unwrap(), square_class(&y).unwrap());
    }
}
