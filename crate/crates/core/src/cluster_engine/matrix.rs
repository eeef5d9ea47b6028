//! Exchange matrices and their mutation.

use serde::Serialize;

use super::ClusterError;
use crate::arc_model::TaggedTriangulation;
use crate::surface_model::{EdgeId, IdealTriangulation};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ExchangeMatrix {
    n: usize,
    entries: Vec<i32>,
}

impl ExchangeMatrix {
    pub fn zero(n: usize) -> Self {
        ExchangeMatrix {
            n,
            entries: vec![0; n * n],
        }
    }

    pub fn from_rows(rows: &[Vec<i32>]) -> Self {
        let n = rows.len();
        let mut m = Self::zero(n);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), n, "square matrix");
            m.entries[i * n..(i + 1) * n].copy_from_slice(r);
        }
        m
    }

    /// `b_ij = 1, b_ji = -1` for every arrow `i -> j`.
    pub fn from_quiver(n: usize, arrows: &[(usize, usize)]) -> Self {
        let mut m = Self::zero(n);
        for &(i, j) in arrows {
            m.entries[i * n + j] += 1;
            m.entries[j * n + i] -= 1;
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i32 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i32>> {
        self.entries
            .chunks(self.n.max(1))
            .take(self.n)
            .map(|r| r.to_vec())
            .collect()
    }

    pub fn is_skew_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.get(i, j) == -self.get(j, i)))
    }

    pub fn negated(&self) -> Self {
        ExchangeMatrix {
            n: self.n,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }

    pub fn mutate(&self, k: usize) -> Self {
        let n = self.n;
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                let v = if i == k || j == k {
                    -self.get(i, j)
                } else {
                    let (a, b) = (self.get(i, k), self.get(k, j));
                    self.get(i, j) + (a.abs() * b + a * b.abs()) / 2
                };
                out.entries[i * n + j] = v;
            }
        }
        out
    }
}

/// Signed adjacency of a plain ideal triangulation; a radius takes the
/// entries of its enclosing loop.
pub fn ideal_b_matrix(t: &IdealTriangulation) -> ExchangeMatrix {
    let n = t.arc_count();
    let mut pi: Vec<EdgeId> = (0..n as u32).map(EdgeId).collect();
    for s in t.self_folded_triangles() {
        let (r, l, _) = t.self_folded_parts(s).expect("self-folded");
        pi[r.index()] = l;
    }
    let mut m = ExchangeMatrix::zero(n);
    for tri in t.triangles() {
        if tri.is_self_folded() {
            continue;
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..3 {
                    if tri.sides[k] == pi[i] && tri.sides[(k + 1) % 3] == pi[j] {
                        m.entries[i * n + j] += 1;
                        m.entries[j * n + i] -= 1;
                    }
                }
            }
        }
    }
    m
}

/// `B_T`, indexed like the members of `t`.
pub fn b_matrix_of(t: &TaggedTriangulation) -> Result<ExchangeMatrix, ClusterError> {
    if !t.is_admissible() {
        return Err(ClusterError::NotAdmissible);
    }
    Ok(ideal_b_matrix(t.ideal()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mutation_is_an_involution() {
        let b = ExchangeMatrix::from_quiver(4, &[(0, 1), (2, 1), (2, 3), (0, 3), (1, 3)]);
        for k in 0..4 {
            assert_eq!(b.mutate(k).mutate(k), b);
            assert!(b.mutate(k).is_skew_symmetric());
        }
    }

    #[test]
    fn mutation_of_a_path() {
        let b = ExchangeMatrix::from_quiver(3, &[(0, 1), (1, 2)]);
        let m = b.mutate(1);
        assert_eq!(m.get(0, 2), 1);
        assert_eq!(m.get(1, 0), 1);
        assert_eq!(m.get(2, 1), 1);
    }
}
