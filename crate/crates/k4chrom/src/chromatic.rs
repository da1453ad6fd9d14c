//! Chromatic polynomials of K4-homeomorphs, by closed form and by an
//! independent deletion-contraction oracle.
//!
//! The closed form routes through the *essential polynomial* Q(G, x): seven
//! positive terms, one per cycle-complement sum (four branch-vertex stars,
//! three matchings), minus `(x + 1)` times one term per path length. Two
//! homeomorphs of equal size are chromatically equivalent iff their
//! essential polynomials coincide, because the transform between the
//! chromatic polynomial and the pair (size, Q) is invertible.
//!
//! The chromatic polynomial itself is recovered from the *reduction
//! bracket* `x^(m-1) - Q(x) - (x+1)(x+2)` via the substitution `x = 1 - k`:
//!
//! ```text
//! P(G, k) = (-1)^m / k^2 * x * [ x^(m-1) - Q(G, x) - (x+1)(x+2) ]
//! ```
//!
//! The sign on Q matters. With Q subtracted the bracket vanishes at
//! `x = 1`, the division by `k^2` is exact, and the result is the monic
//! degree-(m-2) chromatic polynomial. The variant with Q *added* circulates
//! in print but is inconsistent: already for K4 its bracket evaluates to
//! -10 at `x = 1`, so the division by `k^2` fails. Both conventions are
//! exposed so the failure is demonstrable rather than silently corrected.

use std::collections::HashMap;

use num_traits::One;

use crate::k4homeo::{K4Homeomorph, SimpleGraph, OPPOSITE_PAIRS, VERTEX_STARS};
use crate::polyring::IntPolynomial;
use crate::{Error, Result};

/// Which sign the essential polynomial carries inside the reduction bracket.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QSign {
    /// `x^(m-1) - Q - (x+1)(x+2)`: the internally consistent convention.
    Subtracted,
    /// `x^(m-1) + Q - (x+1)(x+2)`: a published variant that breaks the
    /// exactness of the `k^2` division; kept as a checkable witness.
    Added,
}

/// The essential polynomial Q(G, x).
///
/// Term order follows `VERTEX_STARS` then `OPPOSITE_PAIRS`; the negative
/// part is `(x + 1)` times the sum of `x^len` over the six path lengths.
pub fn essential_polynomial(g: &K4Homeomorph) -> IntPolynomial {
    let params = g.params();
    let mut terms: Vec<(i64, i64)> = Vec::with_capacity(7);
    for star in VERTEX_STARS {
        let sum: u64 = star.iter().map(|&i| params[i]).sum();
        terms.push((sum as i64, 1));
    }
    for pair in OPPOSITE_PAIRS {
        let sum: u64 = pair.iter().map(|&i| params[i]).sum();
        terms.push((sum as i64, 1));
    }
    let positive = IntPolynomial::from_terms(terms).expect("sums are nonnegative");
    let path_terms = IntPolynomial::from_terms(params.map(|p| (p as i64, 1i64)))
        .expect("path lengths are nonnegative");
    let x_plus_1 = IntPolynomial::from_terms([(1i64, 1i64), (0, 1)]).expect("static terms");
    &positive - &(&x_plus_1 * &path_terms)
}

/// The reduction bracket `x^(m-1) -/+ Q(x) - (x+1)(x+2)`.
pub fn reduction_bracket(g: &K4Homeomorph, sign: QSign) -> IntPolynomial {
    let m = g.size();
    let lead = IntPolynomial::monomial(m - 1, 1);
    let q = essential_polynomial(g);
    let tail = IntPolynomial::from_terms([(2i64, 1i64), (1, 3), (0, 2)]).expect("static terms");
    match sign {
        QSign::Subtracted => &(&lead - &q) - &tail,
        QSign::Added => &(&lead + &q) - &tail,
    }
}

/// The chromatic polynomial P(G, k), via the consistent bracket sign.
pub fn chromatic_polynomial(g: &K4Homeomorph) -> Result<IntPolynomial> {
    chromatic_polynomial_with_sign(g, QSign::Subtracted)
}

/// The chromatic polynomial under a caller-chosen bracket sign.
///
/// Steps: form `x * bracket`, substitute `x = 1 - k`, flip sign for odd
/// size, divide exactly by `k^2`. A sign convention that is wrong for the
/// graph surfaces as a "not divisible" error; a division that somehow
/// succeeds but yields a non-monic or wrong-degree result is reported as an
/// internal inconsistency.
pub fn chromatic_polynomial_with_sign(g: &K4Homeomorph, sign: QSign) -> Result<IntPolynomial> {
    let (order, size) = g.order_and_size();
    let bracket = reduction_bracket(g, sign);
    let x_bracket = &IntPolynomial::monomial(1, 1) * &bracket;
    let one_minus_k = IntPolynomial::from_terms([(0i64, 1i64), (1, -1)]).expect("static terms");
    let mut in_k = x_bracket.substitute(&one_minus_k);
    if size % 2 == 1 {
        in_k = -&in_k;
    }
    let p = in_k.div_exact(&IntPolynomial::monomial(2, 1))?;
    if p.degree() != Some(order) || !p.coeff(order).is_one() {
        return Err(Error::Inconsistent(format!(
            "chromatic polynomial of {g} should be monic of degree {order}, got {p}"
        )));
    }
    Ok(p)
}

/// Chromatic equivalence: equal size and equal essential polynomial.
///
/// This is exactly equality of chromatic polynomials — P determines the
/// size through its degree, and (size, Q) determine P through the bracket.
pub fn chrom_equivalent(a: &K4Homeomorph, b: &K4Homeomorph) -> bool {
    a.size() == b.size() && essential_polynomial(a) == essential_polynomial(b)
}

// ---- Deletion-contraction oracle ----

/// Memo key: vertex count plus edges relabeled by first appearance.
type GraphKey = (usize, Vec<(usize, usize)>);

/// A from-first-principles chromatic polynomial computer over explicit
/// graphs: `P(G) = P(G - e) - P(G / e)` down to edgeless graphs.
///
/// Shares nothing with the closed form above — no essential polynomial, no
/// bracket — so agreement between the two is meaningful evidence. The
/// recursion memoizes on a canonical relabeling and splits off isolated
/// vertices as factors of `k`. Cost is exponential in edges, hence the
/// explicit budget.
pub struct DeletionContraction {
    budget: usize,
    memo: HashMap<GraphKey, IntPolynomial>,
}

impl DeletionContraction {
    /// Default edge budget: ample for every size the test sweeps use.
    pub const DEFAULT_BUDGET: usize = 14;

    pub fn new() -> Self {
        Self::with_budget(Self::DEFAULT_BUDGET)
    }

    pub fn with_budget(budget: usize) -> Self {
        Self {
            budget,
            memo: HashMap::new(),
        }
    }

    /// The chromatic polynomial of an explicit simple graph, in `k`.
    pub fn chromatic(&mut self, g: &SimpleGraph) -> Result<IntPolynomial> {
        if g.size() > self.budget {
            return Err(Error::OracleBudget {
                edges: g.size(),
                budget: self.budget,
            });
        }
        Ok(self.solve(g.order(), g.edges().to_vec()))
    }

    /// Expands a homeomorph and runs the oracle on the explicit graph.
    pub fn chromatic_of_homeomorph(&mut self, g: &K4Homeomorph) -> Result<IntPolynomial> {
        if g.size() > self.budget as u64 {
            return Err(Error::OracleBudget {
                edges: g.size() as usize,
                budget: self.budget,
            });
        }
        self.chromatic(&g.expand()?)
    }

    /// Core recursion over a multigraph edge list (duplicates tolerated,
    /// collapsed on entry; loops cannot arise from contracting a
    /// deduplicated edge set).
    fn solve(&mut self, order: usize, mut edges: Vec<(usize, usize)>) -> IntPolynomial {
        edges.sort_unstable();
        edges.dedup();
        debug_assert!(edges.iter().all(|&(u, v)| u != v), "loop reached solver");

        // Relabel by first appearance; isolated vertices become k-factors.
        let mut ids: HashMap<usize, usize> = HashMap::new();
        let mut relabeled = Vec::with_capacity(edges.len());
        for &(u, v) in &edges {
            let next = ids.len();
            let a = *ids.entry(u).or_insert(next);
            let next = ids.len();
            let b = *ids.entry(v).or_insert(next);
            relabeled.push((a.min(b), a.max(b)));
        }
        relabeled.sort_unstable();
        let active = ids.len();
        let isolated = order - active;

        let core = self.solve_canonical(active, relabeled);
        if isolated == 0 {
            core
        } else {
            &core * &IntPolynomial::monomial(isolated as u64, 1)
        }
    }

    /// Recursion on an isolated-free, canonically relabeled graph.
    fn solve_canonical(&mut self, order: usize, edges: Vec<(usize, usize)>) -> IntPolynomial {
        if edges.is_empty() {
            return IntPolynomial::monomial(order as u64, 1);
        }
        let key = (order, edges);
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let (order, edges) = (key.0, key.1.clone());

        let (u, v) = edges[0];
        let rest = &edges[1..];

        let deleted = self.solve(order, rest.to_vec());

        let contracted: Vec<(usize, usize)> = rest
            .iter()
            .map(|&(a, b)| {
                let a = if a == v { u } else { a };
                let b = if b == v { u } else { b };
                (a.min(b), a.max(b))
            })
            .collect();
        let merged = self.solve(order - 1, contracted);

        let result = &deleted - &merged;
        self.memo.insert(key, result.clone());
        result
    }
}

impl Default for DeletionContraction {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(params: [i64; 6]) -> K4Homeomorph {
        K4Homeomorph::new(params).unwrap()
    }

    fn p(s: &str) -> IntPolynomial {
        IntPolynomial::parse_text(s).unwrap()
    }

    #[test]
    fn essential_polynomial_of_k4() {
        assert_eq!(
            essential_polynomial(&g([1, 1, 1, 1, 1, 1])),
            p("4x^3 - 3x^2 - 6x")
        );
    }

    #[test]
    fn essential_polynomial_spot_value() {
        // K4(4,2,1,4,4,2): star sums 10,7,7,10; matching sums 8,4,5;
        // minus (x+1)(3x^4 + 2x^2 + x), collected by hand.
        assert_eq!(
            essential_polynomial(&g([4, 2, 1, 4, 4, 2])),
            p("2x^10 + x^8 + 2x^7 - 2x^5 - 2x^4 - 2x^3 - 3x^2 - x")
        );
    }

    #[test]
    fn known_equivalent_pairs_share_q() {
        let triple = [g([4, 2, 1, 4, 4, 2]), g([4, 2, 1, 3, 2, 5]), g([3, 2, 2, 4, 5, 1])];
        let q = essential_polynomial(&triple[0]);
        for h in &triple[1..] {
            assert_eq!(essential_polynomial(h), q);
        }
        // The first tuple is a genuinely different graph from the other
        // two, which are relabelings of one another (so the class has two
        // isomorphism types, not three).
        assert!(!triple[0].is_isomorphic(&triple[1]));
        assert!(!triple[0].is_isomorphic(&triple[2]));
        assert!(triple[1].is_isomorphic(&triple[2]));

        assert!(chrom_equivalent(&g([4, 2, 1, 2, 5, 3]), &g([3, 2, 2, 3, 6, 1])));
    }

    #[test]
    fn brackets_of_k4() {
        let k4 = g([1, 1, 1, 1, 1, 1]);
        let sub = reduction_bracket(&k4, QSign::Subtracted);
        assert_eq!(sub, p("x^5 - 4x^3 + 2x^2 + 3x - 2"));
        assert_eq!(sub.eval_i64(2), 12.into());
        assert_eq!(sub.eval_i64(1), 0.into());

        let add = reduction_bracket(&k4, QSign::Added);
        assert_eq!(add, p("x^5 + 4x^3 - 4x^2 - 9x - 2"));
        assert_eq!(add.eval_i64(1), (-10).into());
    }

    #[test]
    fn chromatic_polynomial_of_k4() {
        let k4 = g([1, 1, 1, 1, 1, 1]);
        let chrom = chromatic_polynomial(&k4).unwrap();
        assert_eq!(chrom, p("x^4 - 6x^3 + 11x^2 - 6x"));
        assert_eq!(chrom.eval_i64(4), 24.into());
        assert_eq!(chrom.eval_i64(3), 0.into());
    }

    #[test]
    fn added_sign_fails_the_division() {
        let k4 = g([1, 1, 1, 1, 1, 1]);
        let err = chromatic_polynomial_with_sign(&k4, QSign::Added).unwrap_err();
        assert!(matches!(err, Error::NotDivisible(_)));
        // The failure is not special to K4.
        for params in [[1, 3, 3, 2, 4, 7], [4, 2, 1, 4, 4, 2], [2, 2, 3, 5, 4, 6]] {
            assert!(chromatic_polynomial_with_sign(&g(params), QSign::Added).is_err());
        }
    }

    #[test]
    fn chromatic_roots_at_zero_and_one() {
        for params in [[1, 1, 1, 1, 1, 1], [2, 1, 1, 1, 1, 1], [1, 3, 3, 2, 4, 7]] {
            let chrom = chromatic_polynomial(&g(params)).unwrap();
            assert_eq!(chrom.eval_i64(0), 0.into());
            assert_eq!(chrom.eval_i64(1), 0.into());
        }
        // A homeomorph with only even cycles is bipartite: two colors work,
        // so k = 2 is *not* always a root.
        let bipartite = g([2, 2, 2, 2, 2, 2]);
        assert_eq!(
            chromatic_polynomial(&bipartite).unwrap().eval_i64(2),
            2.into()
        );
    }

    #[test]
    fn oracle_handles_textbook_graphs() {
        let mut oracle = DeletionContraction::new();
        // Triangle: k(k-1)(k-2).
        let triangle = SimpleGraph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(oracle.chromatic(&triangle).unwrap(), p("x^3 - 3x^2 + 2x"));
        // Path on three vertices: k(k-1)^2.
        let path = SimpleGraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(oracle.chromatic(&path).unwrap(), p("x^3 - 2x^2 + x"));
        // Four-cycle: (k-1)^4 + (k-1).
        let c4 = SimpleGraph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(
            oracle.chromatic(&c4).unwrap(),
            p("x^4 - 4x^3 + 6x^2 - 3x")
        );
        // Edgeless graph with isolated vertices: k^3.
        let empty = SimpleGraph::new(3, []).unwrap();
        assert_eq!(oracle.chromatic(&empty).unwrap(), p("x^3"));
        // Disjoint edge plus isolated vertex: k^2(k-1).
        let sparse = SimpleGraph::new(3, [(1, 2)]).unwrap();
        assert_eq!(oracle.chromatic(&sparse).unwrap(), p("x^3 - x^2"));
    }

    #[test]
    fn oracle_agrees_with_closed_form_on_k4() {
        let mut oracle = DeletionContraction::new();
        let k4 = g([1, 1, 1, 1, 1, 1]);
        assert_eq!(
            oracle.chromatic_of_homeomorph(&k4).unwrap(),
            chromatic_polynomial(&k4).unwrap()
        );
    }

    #[test]
    fn oracle_enforces_budget() {
        let mut oracle = DeletionContraction::with_budget(6);
        let err = oracle.chromatic_of_homeomorph(&g([2, 1, 1, 1, 1, 1])).unwrap_err();
        assert_eq!(
            err,
            Error::OracleBudget {
                edges: 7,
                budget: 6
            }
        );
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_tuple() -> impl Strategy<Value = K4Homeomorph> {
            proptest::collection::vec(1i64..=6, 6).prop_map(|v| {
                K4Homeomorph::new([v[0], v[1], v[2], v[3], v[4], v[5]]).unwrap()
            })
        }

        fn arb_small_tuple() -> impl Strategy<Value = K4Homeomorph> {
            // Sizes stay within the default oracle budget.
            proptest::collection::vec(1i64..=3, 6)
                .prop_map(|v| K4Homeomorph::new([v[0], v[1], v[2], v[3], v[4], v[5]]).unwrap())
                .prop_filter("within oracle budget", |h| {
                    h.size() <= DeletionContraction::DEFAULT_BUDGET as u64
                })
        }

        proptest! {
            #[test]
            fn q_is_isomorphism_invariant(h in arb_tuple()) {
                let q = essential_polynomial(&h);
                for image in h.relabelings() {
                    prop_assert_eq!(essential_polynomial(&image), q.clone());
                }
            }

            #[test]
            fn closed_form_matches_oracle(h in arb_small_tuple()) {
                let mut oracle = DeletionContraction::new();
                let direct = oracle.chromatic_of_homeomorph(&h).unwrap();
                prop_assert_eq!(chromatic_polynomial(&h).unwrap(), direct);
            }

            #[test]
            fn equivalence_iff_equal_chromatic_polynomial(a in arb_small_tuple(), b in arb_small_tuple()) {
                let same_p = chromatic_polynomial(&a).unwrap() == chromatic_polynomial(&b).unwrap();
                prop_assert_eq!(chrom_equivalent(&a, &b), same_p);
            }

            #[test]
            fn chromatic_counts_are_nonnegative(h in arb_small_tuple(), k in 0i64..=6) {
                // P(G, k) counts proper colorings, so small evaluations are
                // nonnegative integers.
                let count = chromatic_polynomial(&h).unwrap().eval_i64(k);
                prop_assert!(count >= 0.into());
            }
        }
    }
}
