mod common;

use common::{naive_normal_order, poly, stirling2, to_poly};
use ladder_graphs::coefficient::Coefficient;
use ladder_graphs::ladder::{
    commutator_powers, multiply, multiply_monomials, normal_order_fold, normal_order_rewrite,
    normal_order_word, Letter, NormalMonomial, NormalPolynomial, Word,
};
use ladder_graphs::oracle::{random_word, rng};
use proptest::prelude::*;

fn m(r: u32, s: u32) -> NormalMonomial {
    NormalMonomial::new(r, s)
}

fn word_text(w: &Word) -> String {
    w.letters()
        .iter()
        .map(|l| match l {
            Letter::Annihilator => 'A',
            Letter::Creator => 'C',
        })
        .collect()
}

#[test]
fn associativity_exhaustive_up_to_four() {
    let range: Vec<NormalMonomial> = (0..=4).flat_map(|r| (0..=4).map(move |s| m(r, s))).collect();
    for &a in &range {
        for &b in &range {
            let ab = multiply_monomials(a, b);
            for &c in &range {
                let left = multiply(&ab, &NormalPolynomial::monomial(c));
                let right = multiply(&NormalPolynomial::monomial(a), &multiply_monomials(b, c));
                assert_eq!(left, right, "({}·{})·{}", a, b, c);
            }
        }
    }
}

#[test]
fn unit_laws() {
    for r in 0..6 {
        for s in 0..6 {
            let p = NormalPolynomial::monomial(m(r, s));
            assert_eq!(multiply_monomials(m(0, 0), m(r, s)), p);
            assert_eq!(multiply_monomials(m(r, s), m(0, 0)), p);
        }
    }
}

#[test]
fn strategies_agree_on_seeded_words() {
    let mut rng = rng(42);
    for _ in 0..200 {
        let w = random_word(&mut rng, 8);
        assert_eq!(normal_order_rewrite(&w), normal_order_fold(&w), "word {}", w);
        assert_eq!(
            normal_order_rewrite(&w),
            to_poly(&naive_normal_order(&word_text(&w))),
            "word {}",
            w
        );
    }
}

#[test]
fn commutator_consistency() {
    for s in 0..=5usize {
        for k in 0..=5usize {
            let mut letters = vec![Letter::Annihilator; s];
            letters.extend(vec![Letter::Creator; k]);
            let word = Word::new(letters);
            let expected = &normal_order_word(&word) - &NormalPolynomial::monomial(m(k as u32, s as u32));
            assert_eq!(commutator_powers(s as u32, k as u32), expected, "s={} k={}", s, k);
        }
    }
}

#[test]
fn commutator_two_two() {
    // a²a†² = a†²a² + 4 a†a + 2 by repeated a a† → a† a + 1
    assert_eq!(to_poly(&naive_normal_order("AACC")), poly(&[(1, 2, 2), (4, 1, 1), (2, 0, 0)]));
    assert_eq!(commutator_powers(2, 2), poly(&[(4, 1, 1), (2, 0, 0)]));
}

#[test]
fn stirling_coefficients() {
    let table = stirling2(8);
    for n in 1..=8 {
        let word = Word::new([Letter::Creator, Letter::Annihilator].repeat(n));
        let expected = NormalPolynomial::from_terms(
            (1..=n).map(|k| (Coefficient::from_integer(table[n][k] as i64), m(k as u32, k as u32))),
        );
        assert_eq!(normal_order_word(&word), expected, "n={}", n);
    }
}

#[test]
fn number_operator_squared_matches_rewriting() {
    let n = NormalPolynomial::monomial(m(1, 1));
    assert_eq!(&n * &n, to_poly(&naive_normal_order("CACA")));
    assert_eq!(&n * &n, poly(&[(1, 2, 2), (1, 1, 1)]));
}

fn small_poly() -> impl Strategy<Value = NormalPolynomial> {
    prop::collection::vec((-3i64..=3, 0u32..=3, 0u32..=3), 0..4).prop_map(|terms| {
        NormalPolynomial::from_terms(
            terms
                .into_iter()
                .map(|(c, r, s)| (Coefficient::from_integer(c), m(r, s))),
        )
    })
}

proptest! {
    #[test]
    fn product_shape(r in 0u32..8, s in 0u32..8, k in 0u32..8, l in 0u32..8) {
        let p = multiply_monomials(m(r, s), m(k, l));
        prop_assert_eq!(p.len() as u32, s.min(k) + 1);
        prop_assert!(p.coeff(m(r + k, s + l)).unwrap().is_one());
        prop_assert!(p.iter().all(|(_, c)| c.is_positive_integer()));
    }

    #[test]
    fn polynomial_ring_laws(p in small_poly(), q in small_poly(), t in small_poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&(&p + &q) + &t, &p + &(&q + &t));
        prop_assert_eq!(&(&p * &q) * &t, &p * &(&q * &t));
        prop_assert_eq!(&p * &(&q + &t), &(&p * &q) + &(&p * &t));
        prop_assert_eq!(&(&p - &p), &NormalPolynomial::zero());
        prop_assert!(p.iter().all(|(_, c)| !c.is_zero()));
    }

    #[test]
    fn json_round_trip(p in small_poly()) {
        let text = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<NormalPolynomial>(&text).unwrap(), p);
    }
}
