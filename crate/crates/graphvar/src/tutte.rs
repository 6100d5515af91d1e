//! Tutte polynomials and the Poincaré polynomial of the picture space.
//!
//! Two independent routes compute the Tutte polynomial: the corank-nullity
//! sum over all edge subsets (the definition; exponential, used as an
//! oracle) and the deletion-contraction recurrence memoized on a canonical
//! form up to isomorphism (the scalable engine). The Poincaré polynomial of
//! the `d`-dimensional picture space of a connected graph `G` is
//!
//! ```text
//! ([d]-1)^(|V|-1) * [d+1] * T_G( [2][d]/([d]-1), [d] )
//! ```
//!
//! where `[d] = 1 + q + ... + q^(d-1)`. Denominators are cleared
//! symbolically: each Tutte term `c * x^i * y^j` contributes
//! `c * ([d]-1)^(|V|-1-i) * ([2][d])^i * [d]^j * [d+1]`, so every
//! intermediate value is an integer polynomial. The picture space is
//! irreducible exactly when the result is monic of degree `d|V|`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{edge_guard, Error, Result};
use crate::graph::{CanonicalKey, EdgeSet, Graph};
use crate::polynomial::{q_integer, QPolynomial, XYPolynomial};

const CORANK_NULLITY_MAX_EDGES: usize = 20;

/// Tutte polynomial by the corank-nullity sum
/// `T_G(x,y) = sum over A of (x-1)^(r(E)-r(A)) * (y-1)^nul(A)`.
///
/// Enumerates all `2^|E|` subsets; guarded at 20 edges.
pub fn tutte_corank_nullity(g: &Graph) -> Result<XYPolynomial> {
    let m = g.edge_count();
    let limit = edge_guard(CORANK_NULLITY_MAX_EDGES);
    if m > limit {
        return Err(Error::SizeLimit {
            operation: "tutte_corank_nullity",
            limit,
            actual: m,
        });
    }
    let full_rank = g.rank_all();
    // counts[corank][nullity] = number of subsets with that profile
    let mut counts = vec![vec![0u64; m + 1]; full_rank + 1];
    for mask in 0u64..(1u64 << m) {
        let a = EdgeSet(mask as u128);
        let r = g.rank(a);
        counts[full_rank - r][a.len() - r] += 1;
    }
    // Expand sum of counts[a][b] * (x-1)^a * (y-1)^b exactly.
    let x_minus_1 = &XYPolynomial::x() + &XYPolynomial::monomial(0, 0, BigInt::from(-1));
    let y_minus_1 = &XYPolynomial::y() + &XYPolynomial::monomial(0, 0, BigInt::from(-1));
    let x_pows = powers(&x_minus_1, full_rank);
    let y_pows = powers(&y_minus_1, m);
    let mut acc = XYPolynomial::zero();
    for (a, row) in counts.iter().enumerate() {
        for (b, &cnt) in row.iter().enumerate() {
            if cnt == 0 {
                continue;
            }
            let term = &x_pows[a] * &y_pows[b];
            acc = &acc + &(&term * &BigInt::from(cnt));
        }
    }
    Ok(acc)
}

fn powers(p: &XYPolynomial, max: usize) -> Vec<XYPolynomial> {
    let mut out = Vec::with_capacity(max + 1);
    out.push(XYPolynomial::one());
    for i in 1..=max {
        let next = &out[i - 1] * p;
        out.push(next);
    }
    out
}

/// Tutte polynomial by deletion-contraction: loops contribute a factor `y`,
/// bridges a factor `x`, and otherwise `T(G) = T(G-e) + T(G/e)`. Subresults
/// are memoized on the canonical isomorphism key, which matters because
/// contractions immediately produce loops and parallel edges.
pub fn tutte_deletion_contraction(g: &Graph) -> XYPolynomial {
    let mut memo: HashMap<CanonicalKey, XYPolynomial> = HashMap::new();
    tutte_rec(&g.without_isolated_vertices(), &mut memo)
}

fn tutte_rec(g: &Graph, memo: &mut HashMap<CanonicalKey, XYPolynomial>) -> XYPolynomial {
    if g.edge_count() == 0 {
        return XYPolynomial::one();
    }
    let key = g.canonical_key();
    if let Some(t) = memo.get(&key) {
        return t.clone();
    }
    let (u, v) = g.edges()[0];
    let result = if u == v {
        &XYPolynomial::y() * &tutte_rec(&g.delete_edge(0).without_isolated_vertices(), memo)
    } else if is_bridge(g, 0) {
        &XYPolynomial::x() * &tutte_rec(&g.contract_edge(0).without_isolated_vertices(), memo)
    } else {
        let del = tutte_rec(&g.delete_edge(0).without_isolated_vertices(), memo);
        let con = tutte_rec(&g.contract_edge(0).without_isolated_vertices(), memo);
        &del + &con
    };
    memo.insert(key, result.clone());
    result
}

fn is_bridge(g: &Graph, index: usize) -> bool {
    let (u, v) = g.edges()[index];
    if u == v {
        return false;
    }
    let mut dsu = crate::graph::Dsu::new(g.vertex_count());
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        if i != index {
            dsu.union(a, b);
        }
    }
    dsu.find(u) != dsu.find(v)
}

/// Number of spanning trees, `T_G(1, 1)`, for connected inputs.
pub fn spanning_tree_count(g: &Graph) -> BigInt {
    tutte_deletion_contraction(g).eval(&BigInt::one(), &BigInt::one())
}

/// Poincaré polynomial of the `d`-dimensional picture space of a connected
/// simple graph, with denominators cleared as described in the module docs.
pub fn poincare_polynomial(g: &Graph, d: u32) -> Result<QPolynomial> {
    if d == 0 {
        return Err(Error::InvalidParameter(
            "poincare_polynomial requires d >= 1".into(),
        ));
    }
    if !g.is_simple() {
        return Err(Error::HypothesisViolation(
            "poincare_polynomial requires a simple graph".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::HypothesisViolation(
            "poincare_polynomial requires a connected graph".into(),
        ));
    }
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::InvalidParameter(
            "poincare_polynomial requires at least one vertex".into(),
        ));
    }
    let tutte = tutte_deletion_contraction(g);

    let qd = q_integer(d)?;
    let qd_minus_1 = &qd - &QPolynomial::one();
    let q2d = &q_integer(2)? * &qd; // [2][d]
    let qd_plus_1 = q_integer(d + 1)?;

    let r = (n - 1) as u32;
    let mut acc = QPolynomial::zero();
    for (&(i, j), c) in tutte.terms() {
        // x-degree of the Tutte polynomial of a connected graph is at most
        // the rank |V|-1, so the cleared exponent below cannot underflow.
        if i > r {
            return Err(Error::Inconsistency(format!(
                "Tutte x-degree {i} exceeds rank {r}"
            )));
        }
        let term = &(&qd_minus_1.pow(r - i) * &q2d.pow(i)) * &qd.pow(j);
        acc = &acc + &term.scale(c);
    }
    Ok(&acc * &qd_plus_1)
}

/// Irreducibility of the picture space via the closed form: true exactly
/// when the Poincaré polynomial is monic of degree `d |V|`.
pub fn is_irreducible_poincare(g: &Graph, d: u32) -> Result<bool> {
    let p = poincare_polynomial(g, d)?;
    let want = d as usize * g.vertex_count();
    Ok(p.degree() == Some(want) && p.is_monic())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn term(i: u32, j: u32, c: i64) -> XYPolynomial {
        XYPolynomial::monomial(i, j, BigInt::from(c))
    }

    #[test]
    fn corank_nullity_examples() {
        let edge = Graph::path(2).unwrap();
        assert_eq!(tutte_corank_nullity(&edge).unwrap(), XYPolynomial::x());

        let tri = Graph::cycle(3).unwrap();
        let expect = &(&term(2, 0, 1) + &term(1, 0, 1)) + &term(0, 1, 1);
        assert_eq!(tutte_corank_nullity(&tri).unwrap(), expect);

        let lp = Graph::new(1, vec![(0, 0)]).unwrap();
        assert_eq!(tutte_corank_nullity(&lp).unwrap(), XYPolynomial::y());
    }

    #[test]
    fn deletion_contraction_examples() {
        // C_4 against the subset-sum oracle.
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(
            tutte_deletion_contraction(&c4),
            tutte_corank_nullity(&c4).unwrap()
        );
        let expect = &(&(&term(3, 0, 1) + &term(2, 0, 1)) + &term(1, 0, 1)) + &term(0, 1, 1);
        assert_eq!(tutte_deletion_contraction(&c4), expect);

        let k4 = Graph::complete(4).unwrap();
        assert_eq!(
            tutte_deletion_contraction(&k4),
            tutte_corank_nullity(&k4).unwrap()
        );

        // Forests: bridges only, so x^(edge count).
        let tree = Graph::new(5, vec![(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(tutte_deletion_contraction(&tree), term(4, 0, 1));

        // Multigraph bases: a parallel pair is x + y.
        let para = Graph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert_eq!(
            tutte_deletion_contraction(&para),
            &XYPolynomial::x() + &XYPolynomial::y()
        );
    }

    #[test]
    fn spanning_trees_by_brute_force() {
        // Oracle: count spanning trees by enumerating (n-1)-subsets.
        fn brute_count(g: &Graph) -> u64 {
            let n = g.vertex_count();
            let m = g.edge_count();
            let mut count = 0;
            for mask in 0u64..(1 << m) {
                let a = EdgeSet(mask as u128);
                if a.len() == n - 1 && g.rank(a) == n - 1 {
                    count += 1;
                }
            }
            count
        }
        for g in [
            Graph::complete(4).unwrap(),
            Graph::complete(5).unwrap(),
            Graph::cycle(6).unwrap(),
            Graph::onion(&[2, 2, 2]).unwrap(),
            Graph::complete_multipartite(&[3, 2]).unwrap(),
        ] {
            assert_eq!(
                spanning_tree_count(&g).to_u64().unwrap(),
                brute_count(&g),
                "graph {:?}",
                g.edges()
            );
        }
    }

    #[test]
    fn corank_nullity_size_guard() {
        let g = Graph::complete(7).unwrap(); // 21 edges
        assert!(matches!(
            tutte_corank_nullity(&g),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn poincare_single_edge_is_product_of_q_integers() {
        // [2] [d] [d+1], monic of degree 2d.
        let edge = Graph::path(2).unwrap();
        for d in 1..=6 {
            let p = poincare_polynomial(&edge, d).unwrap();
            let expect = &(&q_integer(2).unwrap() * &q_integer(d).unwrap())
                * &q_integer(d + 1).unwrap();
            assert_eq!(p, expect);
            assert_eq!(p.degree(), Some(2 * d as usize));
            assert!(p.is_monic());
        }
    }

    #[test]
    fn poincare_triangle_examples() {
        // Independent route: expand [d+1]([2]^2[d]^2 + [2][d]([d]-1) + [d]([d]-1)^2).
        fn triangle_expected(d: u32) -> QPolynomial {
            let qd = q_integer(d).unwrap();
            let q2 = q_integer(2).unwrap();
            let qm = &qd - &QPolynomial::one();
            let t1 = (&q2 * &qd).pow(2);
            let t2 = &(&q2 * &qd) * &qm;
            let t3 = &qd * &qm.pow(2);
            let inner = &(&t1 + &t2) + &t3;
            &inner * &q_integer(d + 1).unwrap()
        }
        let tri = Graph::cycle(3).unwrap();
        for d in 1..=5 {
            assert_eq!(poincare_polynomial(&tri, d).unwrap(), triangle_expected(d));
        }
        let p2 = poincare_polynomial(&tri, 2).unwrap();
        assert_eq!(p2.degree(), Some(6));
        assert!(p2.is_monic());
        let p3 = poincare_polynomial(&tri, 3).unwrap();
        assert_eq!(p3.degree(), Some(9));
        assert_eq!(p3.leading_coeff(), Some(&BigInt::from(2)));
    }

    #[test]
    fn poincare_rejects_bad_inputs() {
        let two = Graph::new(2, vec![]).unwrap();
        assert!(matches!(
            poincare_polynomial(&two, 2),
            Err(Error::HypothesisViolation(_))
        ));
        let lp = Graph::new(1, vec![(0, 0)]).unwrap();
        assert!(poincare_polynomial(&lp, 2).is_err());
        assert!(poincare_polynomial(&Graph::path(2).unwrap(), 0).is_err());
    }

    #[test]
    fn poincare_coefficients_nonnegative() {
        use num_bigint::Sign;
        for g in [
            Graph::cycle(4).unwrap(),
            Graph::complete(4).unwrap(),
            Graph::path(4).unwrap(),
            Graph::complete_multipartite(&[2, 2, 1]).unwrap(),
        ] {
            for d in 1..=4 {
                let p = poincare_polynomial(&g, d).unwrap();
                assert!(p.coeffs().iter().all(|c| c.sign() != Sign::Minus));
            }
        }
    }

    #[test]
    fn irreducibility_examples() {
        let tri = Graph::cycle(3).unwrap();
        assert!(is_irreducible_poincare(&tri, 2).unwrap());
        assert!(!is_irreducible_poincare(&tri, 3).unwrap());
        let path3 = Graph::path(3).unwrap();
        for d in 1..=6 {
            assert!(is_irreducible_poincare(&path3, d).unwrap());
        }
    }
}
