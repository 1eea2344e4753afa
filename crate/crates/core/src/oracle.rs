//! Cross-checks between the independent routes to a normal form, plus the
//! seeded random generators they share with the test suites.
//!
//! Three routes are compared:
//! - the closed-form monomial product against composing one-vertex graphs and
//!   forgetting their inner structure;
//! - rewriting `a a† → a† a + 1`, folding closed-form products, and folding
//!   graph products, on random words;
//! - the projection of a graph product against the product of projections,
//!   on random multi-vertex graphs.

use std::fmt;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coefficient::Coefficient;
use crate::graph::{
    enumerate_compositions, graph_multiply, project_sum, BuildStep, DiagGraph, GraphBuilder,
    GraphSum, Matching, MatchingChoice,
};
use crate::ladder::{
    multiply, multiply_monomials, normal_order_fold, normal_order_rewrite, Letter, NormalMonomial,
    NormalPolynomial, Word,
};

/// Inclusive upper bounds for the exhaustive product sweep
/// `Γ^(r,s) · Γ^(k,l)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub r: u32,
    pub s: u32,
    pub k: u32,
    pub l: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            r: 4,
            s: 4,
            k: 4,
            l: 4,
        }
    }
}

impl Bounds {
    pub fn product_count(&self) -> usize {
        [self.r, self.s, self.k, self.l]
            .iter()
            .map(|&b| b as usize + 1)
            .product()
    }

    /// All `(r,s,k,l)` within bounds, smallest total first.
    pub fn sweep(&self) -> Vec<[u32; 4]> {
        let mut all = Vec::with_capacity(self.product_count());
        for r in 0..=self.r {
            for s in 0..=self.s {
                for k in 0..=self.k {
                    for l in 0..=self.l {
                        all.push([r, s, k, l]);
                    }
                }
            }
        }
        all.sort_by_key(|q| (q.iter().sum::<u32>(), *q));
        all
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub bounds: Bounds,
    /// Random words, and random multi-vertex graph pairs.
    pub words: usize,
    pub max_word_len: usize,
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            bounds: Bounds::default(),
            words: 200,
            max_word_len: 8,
            seed: 42,
        }
    }
}

/// A disagreement between two routes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mismatch {
    /// Coefficient of the term with `i` joined lines differs.
    Product {
        r: u32,
        s: u32,
        k: u32,
        l: u32,
        i: i64,
        graph: Coefficient,
        formula: Coefficient,
    },
    /// Number of compositions differs from the formula's total weight.
    Count {
        r: u32,
        s: u32,
        k: u32,
        l: u32,
        compositions: usize,
        formula: Coefficient,
    },
    Word {
        word: Word,
        rewrite: NormalPolynomial,
        fold: NormalPolynomial,
        graph: NormalPolynomial,
    },
    Homomorphism {
        pair: usize,
        left: NormalPolynomial,
        right: NormalPolynomial,
    },
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mismatch::Product {
                r,
                s,
                k,
                l,
                i,
                graph,
                formula,
            } => write!(
                f,
                "product (r={}, s={}, k={}, l={}, i={}): graph route gives {}, formula gives {}",
                r, s, k, l, i, graph, formula
            ),
            Mismatch::Count {
                r,
                s,
                k,
                l,
                compositions,
                formula,
            } => write!(
                f,
                "count (r={}, s={}, k={}, l={}): {} compositions, formula weight {}",
                r, s, k, l, compositions, formula
            ),
            Mismatch::Word {
                word,
                rewrite,
                fold,
                graph,
            } => write!(
                f,
                "word `{}`: rewrite {} | fold {} | graph {}",
                word, rewrite, fold, graph
            ),
            Mismatch::Homomorphism { pair, left, right } => write!(
                f,
                "homomorphism pair #{}: project(x·y) = {}, project(x)·project(y) = {}",
                pair, left, right
            ),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleReport {
    pub products: usize,
    pub words: usize,
    pub pairs: usize,
    pub mismatches: Vec<Mismatch>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// One summary line, followed on failure by the smallest counterexample of
/// each kind.
impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ({} exhaustive products, {} words, {} homomorphism pairs, {} mismatches)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.products,
            self.words,
            self.pairs,
            self.mismatches.len()
        )?;
        let mut shown = [false; 4];
        for m in &self.mismatches {
            let kind = match m {
                Mismatch::Product { .. } => 0,
                Mismatch::Count { .. } => 1,
                Mismatch::Word { .. } => 2,
                Mismatch::Homomorphism { .. } => 3,
            };
            if !shown[kind] {
                shown[kind] = true;
                write!(f, "\ncounterexample: {}", m)?;
            }
        }
        Ok(())
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_word<R: Rng>(rng: &mut R, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::new(
        (0..len)
            .map(|_| {
                if rng.gen_bool(0.5) {
                    Letter::Annihilator
                } else {
                    Letter::Creator
                }
            })
            .collect(),
    )
}

/// A graph of `1..=max_vertices` vertices with up to `max_lines` lines of each
/// kind per vertex, each vertex attached by a uniformly chosen matching.
pub fn random_graph<R: Rng>(rng: &mut R, max_vertices: usize, max_lines: u32) -> DiagGraph {
    random_build(rng, max_vertices, max_lines).0
}

/// Like [`random_graph`], also returning the steps that rebuild it.
pub fn random_build<R: Rng>(
    rng: &mut R,
    max_vertices: usize,
    max_lines: u32,
) -> (DiagGraph, Vec<BuildStep>) {
    let n = rng.gen_range(1..=max_vertices.max(1));
    let mut builder = GraphBuilder::new();
    let mut steps = Vec::with_capacity(n);
    for _ in 0..n {
        let creators = rng.gen_range(0..=max_lines);
        let annihilators = rng.gen_range(0..=max_lines);
        let index = rng.gen_range(0..builder.matching_count(creators));
        let step = BuildStep::new(creators, annihilators, MatchingChoice::Index(index));
        builder.push(&step).expect("index drawn within range");
        steps.push(step);
    }
    (builder.finish(), steps)
}

/// A uniformly sized random partial matching, drawn without enumerating all
/// matchings.
pub fn random_matching<R: Rng>(rng: &mut R, first: &DiagGraph, second: &DiagGraph) -> Matching {
    let mut grays = first.dangling_in().to_vec();
    let mut whites = second.dangling_out().to_vec();
    let size = rng.gen_range(0..=grays.len().min(whites.len()));
    let mut pairs = Vec::with_capacity(size);
    for _ in 0..size {
        let g = grays.swap_remove(rng.gen_range(0..grays.len()));
        let w = whites.swap_remove(rng.gen_range(0..whites.len()));
        pairs.push((g, w));
    }
    Matching::from_pairs(pairs)
}

/// Normal ordering by folding graph products of one-vertex graphs and
/// projecting the result.
pub fn normal_order_graph(word: &Word) -> NormalPolynomial {
    let sum = word.letters().iter().fold(GraphSum::unit(), |acc, l| {
        let m = l.monomial();
        let vertex = GraphSum::basis(DiagGraph::make_vertex(m.creators, m.annihilators));
        graph_multiply(&acc, &vertex)
    });
    project_sum(&sum)
}

/// Two small graph sums whose product stays cheap to enumerate: each has up
/// to three vertices, `x` at most four gray spots and `y` at most four white.
pub fn random_sum_pair<R: Rng>(rng: &mut R) -> (GraphSum, GraphSum) {
    fn pick<R: Rng>(rng: &mut R, ok: impl Fn(&DiagGraph) -> bool) -> DiagGraph {
        loop {
            let g = random_graph(rng, 3, 2);
            if ok(&g) {
                return g;
            }
        }
    }
    let sum = |rng: &mut R, ok: &dyn Fn(&DiagGraph) -> bool| {
        let mut s = GraphSum::zero();
        for _ in 0..rng.gen_range(1..=2) {
            let c = Coefficient::from_integer(rng.gen_range(-3i64..=3));
            s.add_term(pick(rng, ok), &c);
        }
        s
    };
    let x = sum(rng, &|g: &DiagGraph| g.dangling_in().len() <= 4);
    let y = sum(rng, &|g: &DiagGraph| g.dangling_out().len() <= 4);
    (x, y)
}

fn check_product(
    q: [u32; 4],
    formula: &dyn Fn(NormalMonomial, NormalMonomial) -> NormalPolynomial,
    out: &mut Vec<Mismatch>,
) {
    let [r, s, k, l] = q;
    let first = DiagGraph::make_vertex(r, s);
    let second = DiagGraph::make_vertex(k, l);
    let compositions = enumerate_compositions(&first, &second);
    let graph = project_sum(&graph_multiply(
        &GraphSum::basis(first),
        &GraphSum::basis(second),
    ));
    let closed = formula(NormalMonomial::new(r, s), NormalMonomial::new(k, l));

    let mut monomials: Vec<NormalMonomial> = graph.iter().chain(closed.iter()).map(|(m, _)| *m).collect();
    monomials.sort();
    monomials.dedup();
    for m in monomials {
        let g = graph.coeff(m).cloned().unwrap_or_default();
        let c = closed.coeff(m).cloned().unwrap_or_default();
        if g != c {
            out.push(Mismatch::Product {
                r,
                s,
                k,
                l,
                i: (r + k) as i64 - m.creators as i64,
                graph: g,
                formula: c,
            });
        }
    }

    let weight = closed
        .iter()
        .fold(Coefficient::zero(), |acc, (_, c)| &acc + c);
    if weight != Coefficient::from_integer(compositions.len() as i64) {
        out.push(Mismatch::Count {
            r,
            s,
            k,
            l,
            compositions: compositions.len(),
            formula: weight,
        });
    }
}

/// Runs every cross-check with the given closed-form product. Tests pass a
/// deliberately wrong formula here to exercise the failure path.
pub fn run_oracle_check_with(
    config: &OracleConfig,
    formula: &dyn Fn(NormalMonomial, NormalMonomial) -> NormalPolynomial,
) -> OracleReport {
    let mut report = OracleReport::default();

    for q in config.bounds.sweep() {
        check_product(q, formula, &mut report.mismatches);
        report.products += 1;
    }

    let mut rng = rng(config.seed);
    let mut word_failures = Vec::new();
    for _ in 0..config.words {
        let word = random_word(&mut rng, config.max_word_len);
        let rewrite = normal_order_rewrite(&word);
        let fold = normal_order_fold(&word);
        let graph = normal_order_graph(&word);
        if rewrite != fold || fold != graph {
            word_failures.push(Mismatch::Word {
                word,
                rewrite,
                fold,
                graph,
            });
        }
        report.words += 1;
    }
    word_failures.sort_by_key(|m| match m {
        Mismatch::Word { word, .. } => (word.len(), word.clone()),
        _ => unreachable!(),
    });
    report.mismatches.extend(word_failures);

    for pair in 0..config.words {
        let (x, y) = random_sum_pair(&mut rng);
        let left = project_sum(&graph_multiply(&x, &y));
        let right = multiply(&project_sum(&x), &project_sum(&y));
        if left != right {
            report
                .mismatches
                .push(Mismatch::Homomorphism { pair, left, right });
        }
        report.pairs += 1;
    }

    report
}

pub fn run_oracle_check(config: &OracleConfig) -> OracleReport {
    run_oracle_check_with(config, &multiply_monomials)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_is_ordered_and_complete() {
        let b = Bounds {
            r: 1,
            s: 2,
            k: 0,
            l: 1,
        };
        let sweep = b.sweep();
        assert_eq!(sweep.len(), 12);
        assert_eq!(sweep[0], [0, 0, 0, 0]);
        assert!(sweep.windows(2).all(|w| w[0].iter().sum::<u32>() <= w[1].iter().sum::<u32>()));
    }

    #[test]
    fn trivial_bounds_pass() {
        let config = OracleConfig {
            bounds: Bounds {
                r: 0,
                s: 0,
                k: 0,
                l: 0,
            },
            words: 0,
            ..OracleConfig::default()
        };
        let report = run_oracle_check(&config);
        assert!(report.passed());
        assert_eq!(report.products, 1);
        assert_eq!(
            report.to_string(),
            "PASS (1 exhaustive products, 0 words, 0 homomorphism pairs, 0 mismatches)"
        );
    }

    #[test]
    fn corrupted_formula_is_caught() {
        let corrupt = |m1: NormalMonomial, m2: NormalMonomial| {
            let p = multiply_monomials(m1, m2);
            let top = m1.annihilators.min(m2.creators);
            if top == 0 {
                return p;
            }
            let last = NormalMonomial::new(
                m1.creators + m2.creators - top,
                m1.annihilators + m2.annihilators - top,
            );
            &p + &NormalPolynomial::monomial(last)
        };
        let config = OracleConfig {
            bounds: Bounds {
                r: 1,
                s: 1,
                k: 1,
                l: 1,
            },
            words: 5,
            ..OracleConfig::default()
        };
        let report = run_oracle_check_with(&config, &corrupt);
        assert!(!report.passed());
        assert_eq!(
            report.mismatches[0],
            Mismatch::Product {
                r: 0,
                s: 1,
                k: 1,
                l: 0,
                i: 1,
                graph: Coefficient::one(),
                formula: Coefficient::from_integer(2),
            }
        );
        let text = report.to_string();
        assert!(text.starts_with("FAIL (16 exhaustive products"));
        assert!(text.contains("counterexample: product (r=0, s=1, k=1, l=0, i=1)"));
        assert!(text.contains("counterexample: count (r=0, s=1, k=1, l=0)"));
    }

    #[test]
    fn random_generators_are_deterministic() {
        let a: Vec<Word> = {
            let mut r = rng(7);
            (0..20).map(|_| random_word(&mut r, 8)).collect()
        };
        let b: Vec<Word> = {
            let mut r = rng(7);
            (0..20).map(|_| random_word(&mut r, 8)).collect()
        };
        assert_eq!(a, b);
        let mut r1 = rng(3);
        let mut r2 = rng(3);
        assert_eq!(random_graph(&mut r1, 6, 3), random_graph(&mut r2, 6, 3));
    }

    #[test]
    fn graph_route_matches_on_small_words() {
        for s in ["a ad", "ad a", "a a ad ad", "a ad a ad", ""] {
            let w: Word = s.parse().unwrap();
            assert_eq!(normal_order_graph(&w), normal_order_fold(&w));
        }
    }
}
