mod common;

use common::{poly, stirling2};
use ladder_graphs::coefficient::Coefficient;
use ladder_graphs::expr::{evaluate, format, parse, ExprNode};
use ladder_graphs::ladder::{add, multiply, NormalMonomial, NormalPolynomial};
use ladder_graphs::oracle::rng;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

fn eval(s: &str) -> NormalPolynomial {
    evaluate(&parse(s).unwrap())
}

#[test]
fn grammar_document_examples() {
    for (input, output) in [
        ("a ad", "ad a + 1"),
        ("(ad a)^3", "ad^3 a^3 + 3 ad^2 a^2 + ad a"),
        ("3i ad - 1/2 a^2", "-1/2 a^2 + 3i ad"),
        ("a ad - ad a", "1"),
        ("2 + 3i", "2+3i"),
    ] {
        assert_eq!(format(&eval(input)), output, "{}", input);
    }
}

#[test]
fn golden_parse_trees() {
    let cases = [
        ("a ad", "(* a ad)"),
        ("ad^2 a^2 + 3 ad a", "(+ (* (^ ad 2) (^ a 2)) (scale 3 (* ad a)))"),
        ("(a + ad)^2", "(^ (+ a ad) 2)"),
        ("a (ad a) ad", "(* a (* ad a) ad)"),
        ("-1/3 a^2 + 2-1i", "(+ (scale -1/3 (^ a 2)) (scale 2-1i 1))"),
        ("a† a", "(* ad a)"),
        ("((a))", "a"),
    ];
    for (input, tree) in cases {
        assert_eq!(parse(input).unwrap().to_string(), tree, "{}", input);
    }
}

#[test]
fn stirling_through_the_parser() {
    let table = stirling2(8);
    for n in 1..=8usize {
        let expected = NormalPolynomial::from_terms((1..=n).map(|k| {
            (Coefficient::from_integer(table[n][k] as i64), NormalMonomial::new(k as u32, k as u32))
        }));
        assert_eq!(eval(&format!("(ad a)^{}", n)), expected);
    }
    assert_eq!(eval("(ad a)^3"), poly(&[(1, 3, 3), (3, 2, 2), (1, 1, 1)]));
}

#[test]
fn evaluate_is_a_homomorphism() {
    let xs = ["a", "ad^2 a", "1/2 a ad + 1", "(a + ad)^2", "3i ad^3"];
    for x in xs {
        for y in xs {
            let ex = parse(x).unwrap();
            let ey = parse(y).unwrap();
            let prod = ExprNode::Product(vec![ex.clone(), ey.clone()]);
            let sum = ExprNode::Sum(vec![ex.clone(), ey.clone()]);
            assert_eq!(evaluate(&prod), multiply(&evaluate(&ex), &evaluate(&ey)));
            assert_eq!(evaluate(&sum), add(&evaluate(&ex), &evaluate(&ey)));
        }
    }
}

fn random_rational<R: Rng>(rng: &mut R) -> BigRational {
    let num = rng.gen_range(-12i64..=12);
    let den = rng.gen_range(1i64..=5);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn random_poly<R: Rng>(rng: &mut R) -> NormalPolynomial {
    let n = rng.gen_range(0..=5);
    NormalPolynomial::from_terms((0..n).map(|_| {
        let im = if rng.gen_bool(0.3) {
            random_rational(rng)
        } else {
            BigRational::from_integer(0.into())
        };
        (
            Coefficient::new(random_rational(rng), im),
            NormalMonomial::new(rng.gen_range(0..=4), rng.gen_range(0..=4)),
        )
    }))
}

#[test]
fn format_parse_evaluate_round_trip() {
    let mut rng = rng(2024);
    for _ in 0..200 {
        let p = random_poly(&mut rng);
        let text = format(&p);
        let back = evaluate(&parse(&text).unwrap_or_else(|e| panic!("{:?}: {}", text, e)));
        assert_eq!(back, p, "{}", text);
    }
}

#[test]
fn parser_survives_noise() {
    const ALPHABET: &[char] = &[
        'a', 'd', '†', '1', '2', '0', '9', '/', '+', '-', '^', '(', ')', 'i', ' ', 'x', '*', '\n', 'é',
    ];
    let mut rng = rng(10_000);
    let mut accepted = 0;
    for _ in 0..10_000 {
        let len = rng.gen_range(0..24);
        let s: String = if rng.gen_bool(0.2) {
            let bytes: Vec<u8> = (0..len).map(|_| rng.gen()).collect();
            String::from_utf8_lossy(&bytes).into_owned()
        } else {
            (0..len).map(|_| ALPHABET[rng.gen_range(0..ALPHABET.len())]).collect()
        };
        match parse(&s) {
            Ok(_) => accepted += 1,
            Err(e) => assert!(e.position <= s.chars().count(), "{:?}: {}", s, e),
        }
    }
    assert!(accepted > 0);
}
