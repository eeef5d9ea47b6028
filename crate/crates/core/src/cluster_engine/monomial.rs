//! Cluster monomials and their denominator vectors.

use std::collections::HashSet;

use serde::Serialize;

use super::explore::Exploration;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClusterMonomial {
    /// A cluster containing every variable of the monomial.
    pub cluster: usize,
    /// Exponents aligned with the seed positions of `cluster`.
    pub exponents: Vec<u32>,
    pub denominator: Vec<i64>,
}

impl ClusterMonomial {
    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    /// Variable ids with multiplicity, sorted.
    pub fn variables(&self, ex: &Exploration) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .exponents
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| std::iter::repeat_n(ex.clusters[self.cluster][i], a as usize))
            .collect();
        v.sort_unstable();
        v
    }
}

fn exponent_vectors(n: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for v in &out {
            let used: u32 = v.iter().sum();
            for a in 0..=max - used {
                let mut w = v.clone();
                w.push(a);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

/// All monomials of degree at most `max_degree` on explored clusters, each
/// variable multiset once.
pub fn enumerate_monomials(ex: &Exploration, max_degree: u32) -> Vec<ClusterMonomial> {
    let n = ex.rank;
    let vectors = exponent_vectors(n, max_degree);
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut out = Vec::new();
    for c in 0..ex.clusters.len() {
        for e in &vectors {
            let m = ClusterMonomial {
                cluster: c,
                exponents: e.clone(),
                denominator: vec![0; n],
            };
            if !seen.insert(m.variables(ex)) {
                continue;
            }
            let mut d = vec![0i64; n];
            for (i, &a) in e.iter().enumerate() {
                for (j, x) in ex.denominators[ex.clusters[c][i]].iter().enumerate() {
                    d[j] += a as i64 * x;
                }
            }
            out.push(ClusterMonomial {
                denominator: d,
                ..m
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster_engine::{explore, ExchangeMatrix, ExploreMode, Seed};

    #[test]
    fn degree_zero_is_the_empty_monomial() {
        let s = Seed::initial(ExchangeMatrix::from_quiver(2, &[(0, 1)]));
        let ex = explore(&s, ExploreMode::Full { cap: 10 }).unwrap();
        let m = enumerate_monomials(&ex, 0);
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].denominator, vec![0, 0]);
    }

    #[test]
    fn a2_degree_one() {
        let s = Seed::initial(ExchangeMatrix::from_quiver(2, &[(0, 1)]));
        let ex = explore(&s, ExploreMode::Full { cap: 10 }).unwrap();
        let m = enumerate_monomials(&ex, 1);
        assert_eq!(m.len(), 6);
        let d: HashSet<&Vec<i64>> = m.iter().map(|x| &x.denominator).collect();
        assert_eq!(d.len(), 6);
    }

    #[test]
    fn exponent_vector_count() {
        // Compositions of at most 3 into 3 parts.
        assert_eq!(exponent_vectors(3, 3).len(), 20);
    }
}
