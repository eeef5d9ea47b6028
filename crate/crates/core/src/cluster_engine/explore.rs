//! Breadth-first exploration of the exchange graph.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use super::laurent::LaurentPolynomial;
use super::matrix::ExchangeMatrix;
use super::seed::Seed;
use super::ClusterError;

pub const DEFAULT_CLUSTER_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ExploreMode {
    /// Until closure; fails once more than `cap` clusters are found.
    Full { cap: usize },
    /// Seeds at most `depth` mutations away from the initial one.
    Depth(usize),
}

/// One mutation: `from` loses variable `out` and gains `inc`, landing on `to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct MutationEdge {
    pub from: usize,
    pub to: usize,
    pub out: usize,
    pub inc: usize,
}

#[derive(Debug, Clone)]
pub struct Exploration {
    pub mode: ExploreMode,
    pub rank: usize,
    pub variables: Vec<LaurentPolynomial>,
    pub denominators: Vec<Vec<i64>>,
    /// Variable ids in seed position order.
    pub clusters: Vec<Vec<usize>>,
    pub matrices: Vec<ExchangeMatrix>,
    pub edges: Vec<MutationEdge>,
    /// Clusters whose neighbors were all computed.
    pub expanded: Vec<bool>,
    /// Mutation distance of each cluster from the initial one.
    pub distance: Vec<usize>,
}

impl Exploration {
    pub fn cluster_count(&self) -> usize {
        self.clusters.len()
    }

    pub fn variable_count(&self) -> usize {
        self.variables.len()
    }

    /// Every expanded cluster has `rank` distinct neighbors.
    pub fn is_regular(&self) -> bool {
        let mut nb: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.clusters.len()];
        for e in &self.edges {
            nb[e.from].insert(e.to);
        }
        (0..self.clusters.len())
            .filter(|&c| self.expanded[c])
            .all(|c| nb[c].len() == self.rank && !nb[c].contains(&c))
    }

    /// Mutating back along the exchanged variable returns to the start.
    pub fn is_involutive(&self) -> bool {
        let set: BTreeSet<(usize, usize, usize, usize)> = self
            .edges
            .iter()
            .map(|e| (e.from, e.to, e.out, e.inc))
            .collect();
        self.edges
            .iter()
            .filter(|e| self.expanded[e.to])
            .all(|e| set.contains(&(e.to, e.from, e.inc, e.out)))
    }

    pub fn cluster_key(&self, c: usize) -> Vec<usize> {
        let mut k = self.clusters[c].clone();
        k.sort_unstable();
        k
    }

    /// Deterministic text dump: variables with d-vectors, clusters, edges.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (i, v) in self.variables.iter().enumerate() {
            s.push_str(&format!("var {i} den {:?} = {v}\n", self.denominators[i]));
        }
        let mut keys: Vec<Vec<usize>> = (0..self.clusters.len())
            .map(|c| self.cluster_key(c))
            .collect();
        keys.sort();
        for k in keys {
            s.push_str(&format!("cluster {k:?}\n"));
        }
        let mut edges: Vec<(Vec<usize>, Vec<usize>)> = self
            .edges
            .iter()
            .map(|e| (self.cluster_key(e.from), self.cluster_key(e.to)))
            .collect();
        edges.sort();
        for (a, b) in edges {
            s.push_str(&format!("edge {a:?} -> {b:?}\n"));
        }
        s
    }
}

/// Explores from `seed`, checking positivity of every new variable.
pub fn explore(seed: &Seed, mode: ExploreMode) -> Result<Exploration, ClusterError> {
    let n = seed.rank();
    let mut ex = Exploration {
        mode,
        rank: n,
        variables: Vec::new(),
        denominators: Vec::new(),
        clusters: Vec::new(),
        matrices: Vec::new(),
        edges: Vec::new(),
        expanded: Vec::new(),
        distance: Vec::new(),
    };
    let mut var_ids: HashMap<LaurentPolynomial, usize> = HashMap::new();
    let mut cluster_ids: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut seeds: Vec<Seed> = Vec::new();

    let mut intern = |ex: &mut Exploration, p: &LaurentPolynomial| -> Result<usize, ClusterError> {
        if let Some(&i) = var_ids.get(p) {
            return Ok(i);
        }
        if !p.has_positive_coefficients() {
            return Err(ClusterError::NotPositive(p.to_string()));
        }
        let i = ex.variables.len();
        ex.denominators.push(p.denominator_vector()?);
        ex.variables.push(p.clone());
        var_ids.insert(p.clone(), i);
        Ok(i)
    };

    let ids: Vec<usize> = seed
        .cluster
        .iter()
        .map(|p| intern(&mut ex, p))
        .collect::<Result<_, _>>()?;
    let mut key = ids.clone();
    key.sort_unstable();
    cluster_ids.insert(key, 0);
    ex.clusters.push(ids);
    ex.matrices.push(seed.matrix.clone());
    ex.expanded.push(false);
    ex.distance.push(0);
    seeds.push(seed.clone());

    let mut queue = VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        if let ExploreMode::Depth(d) = mode {
            if ex.distance[c] >= d {
                continue;
            }
        }
        for k in 0..n {
            let next = seeds[c].mutate(k)?;
            let inc = intern(&mut ex, &next.cluster[k])?;
            let mut ids = ex.clusters[c].clone();
            let out = ids[k];
            ids[k] = inc;
            let mut key = ids.clone();
            key.sort_unstable();
            let to = match cluster_ids.get(&key) {
                Some(&t) => t,
                None => {
                    let t = ex.clusters.len();
                    if let ExploreMode::Full { cap } = mode {
                        if t >= cap {
                            return Err(ClusterError::CapExceeded(cap));
                        }
                    }
                    cluster_ids.insert(key, t);
                    ex.clusters.push(ids);
                    ex.matrices.push(next.matrix.clone());
                    ex.expanded.push(false);
                    ex.distance.push(ex.distance[c] + 1);
                    seeds.push(next);
                    queue.push_back(t);
                    t
                }
            };
            ex.edges.push(MutationEdge {
                from: c,
                to,
                out,
                inc,
            });
        }
        ex.expanded[c] = true;
    }
    Ok(ex)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_closure_has_five_variables() {
        let s = Seed::initial(ExchangeMatrix::from_quiver(2, &[(0, 1)]));
        let ex = explore(&s, ExploreMode::Full { cap: 100 }).unwrap();
        assert_eq!(ex.variable_count(), 5);
        assert_eq!(ex.cluster_count(), 5);
        assert!(ex.is_regular());
        assert!(ex.is_involutive());
    }

    #[test]
    fn cap_is_enforced() {
        let s = Seed::initial(ExchangeMatrix::from_quiver(2, &[(0, 1)]));
        assert_eq!(
            explore(&s, ExploreMode::Full { cap: 3 }).unwrap_err(),
            ClusterError::CapExceeded(3)
        );
    }

    #[test]
    fn kronecker_depth_bounded() {
        // Infinite type: two arrows between two vertices.
        let b = ExchangeMatrix::from_rows(&[vec![0, 2], vec![-2, 0]]);
        let ex = explore(&Seed::initial(b), ExploreMode::Depth(4)).unwrap();
        assert_eq!(ex.cluster_count(), 9);
        assert_eq!(ex.variable_count(), 10);
    }
}
