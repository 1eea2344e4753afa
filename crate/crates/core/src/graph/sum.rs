use std::collections::BTreeMap;

use super::compose::enumerate_compositions;
use super::diagram::DiagGraph;
use super::encode::canonical_encode;
use crate::coefficient::Coefficient;
use crate::ladder::NormalPolynomial;

/// A finite linear combination of labeled graphs, keyed by canonical encoding.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphSum {
    terms: BTreeMap<Vec<u8>, (DiagGraph, Coefficient)>,
}

impl GraphSum {
    pub fn zero() -> Self {
        GraphSum::default()
    }

    /// The void graph with coefficient one.
    pub fn unit() -> Self {
        GraphSum::basis(DiagGraph::void())
    }

    pub fn basis(g: DiagGraph) -> Self {
        GraphSum::term(Coefficient::one(), g)
    }

    pub fn term(c: Coefficient, g: DiagGraph) -> Self {
        let mut s = GraphSum::zero();
        s.add_term(g, &c);
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, g: &DiagGraph) -> Option<&Coefficient> {
        self.terms.get(&canonical_encode(g)).map(|(_, c)| c)
    }

    /// Terms ordered by canonical encoding.
    pub fn iter(&self) -> impl Iterator<Item = (&DiagGraph, &Coefficient)> {
        self.terms.values().map(|(g, c)| (g, c))
    }

    pub fn add_term(&mut self, g: DiagGraph, c: &Coefficient) {
        if c.is_zero() {
            return;
        }
        let key = canonical_encode(&g);
        match self.terms.get_mut(&key) {
            Some((_, existing)) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, (g, c.clone()));
            }
        }
    }

    pub fn add(&self, other: &GraphSum) -> GraphSum {
        let mut out = self.clone();
        for (g, c) in other.iter() {
            out.add_term(g.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &Coefficient) -> GraphSum {
        let mut out = GraphSum::zero();
        for (g, gc) in self.iter() {
            out.add_term(g.clone(), &(c * gc));
        }
        out
    }
}

/// Bilinear extension of composition: each composition of two basis graphs
/// contributes with coefficient one.
pub fn graph_multiply(x: &GraphSum, y: &GraphSum) -> GraphSum {
    let mut out = GraphSum::zero();
    for (g1, c1) in x.iter() {
        for (g2, c2) in y.iter() {
            let c = c1 * c2;
            for g in enumerate_compositions(g1, g2) {
                out.add_term(g, &c);
            }
        }
    }
    out
}

/// Linear extension of [`DiagGraph::project`].
pub fn project_sum(x: &GraphSum) -> NormalPolynomial {
    NormalPolynomial::from_terms(x.iter().map(|(g, c)| (c.clone(), g.project())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ladder::NormalMonomial;

    fn vertex(r: u32, s: u32) -> GraphSum {
        GraphSum::basis(DiagGraph::make_vertex(r, s))
    }

    fn poly(terms: &[(i64, u32, u32)]) -> NormalPolynomial {
        NormalPolynomial::from_terms(
            terms
                .iter()
                .map(|&(c, r, s)| (Coefficient::from_integer(c), NormalMonomial::new(r, s))),
        )
    }

    #[test]
    fn worked_example_projects_to_closed_form() {
        let prod = graph_multiply(&vertex(2, 2), &vertex(2, 1));
        assert_eq!(prod.len(), 7);
        assert!(prod.iter().all(|(_, c)| c.is_one()));
        assert_eq!(project_sum(&prod), poly(&[(1, 4, 3), (4, 3, 2), (2, 2, 1)]));
    }

    #[test]
    fn void_is_unit() {
        let x = vertex(3, 1).add(&vertex(0, 2).scale(&Coefficient::i()));
        assert_eq!(graph_multiply(&GraphSum::unit(), &x), x);
        assert_eq!(graph_multiply(&x, &GraphSum::unit()), x);
    }

    #[test]
    fn zero_projects_to_zero() {
        assert!(project_sum(&GraphSum::zero()).is_zero());
        assert!(graph_multiply(&GraphSum::zero(), &vertex(1, 1)).is_zero());
    }

    #[test]
    fn cancellation_prunes() {
        let x = vertex(1, 1);
        let y = x.scale(&Coefficient::from_integer(-1));
        assert!(x.add(&y).is_zero());
    }

    #[test]
    fn noncommutativity_witness() {
        let a = vertex(0, 1);
        let ad = vertex(1, 0);
        let left = project_sum(&graph_multiply(&a, &ad));
        let right = project_sum(&graph_multiply(&ad, &a));
        assert_eq!(&left - &right, NormalPolynomial::one());
    }

    #[test]
    fn triple_number_operator_is_associative() {
        let n = vertex(1, 1);
        let left = graph_multiply(&graph_multiply(&n, &n), &n);
        let right = graph_multiply(&n, &graph_multiply(&n, &n));
        assert_eq!(left, right);
        assert_eq!(project_sum(&left), poly(&[(1, 3, 3), (3, 2, 2), (1, 1, 1)]));
    }
}
