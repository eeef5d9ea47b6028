//! Seeds and the exchange relation.

use super::laurent::LaurentPolynomial;
use super::matrix::ExchangeMatrix;
use super::ClusterError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Seed {
    pub matrix: ExchangeMatrix,
    pub cluster: Vec<LaurentPolynomial>,
}

impl Seed {
    /// The initial seed `(x_1, ..., x_n)` with matrix `b`.
    pub fn initial(b: ExchangeMatrix) -> Self {
        let n = b.size();
        Seed {
            cluster: (0..n).map(|i| LaurentPolynomial::var(n, i)).collect(),
            matrix: b,
        }
    }

    pub fn rank(&self) -> usize {
        self.matrix.size()
    }

    pub fn mutate(&self, k: usize) -> Result<Seed, ClusterError> {
        let n = self.rank();
        if k >= n {
            return Err(ClusterError::IndexOutOfRange(k));
        }
        let mut plus = LaurentPolynomial::one(self.cluster[k].nvars());
        let mut minus = plus.clone();
        for i in 0..n {
            let b = self.matrix.get(i, k);
            if b > 0 {
                plus = &plus * &self.cluster[i].pow(b as u32);
            } else if b < 0 {
                minus = &minus * &self.cluster[i].pow((-b) as u32);
            }
        }
        let y = (&plus + &minus).div_exact(&self.cluster[k])?;
        let mut cluster = self.cluster.clone();
        cluster[k] = y;
        Ok(Seed {
            matrix: self.matrix.mutate(k),
            cluster,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_exchange() {
        let s = Seed::initial(ExchangeMatrix::from_quiver(2, &[(0, 1)]));
        let m = s.mutate(0).unwrap();
        assert_eq!(m.cluster[0].denominator_vector().unwrap(), vec![1, 0]);
        assert_eq!(m.mutate(0).unwrap(), s);
        let mm = m.mutate(1).unwrap();
        assert_eq!(mm.cluster[1].denominator_vector().unwrap(), vec![1, 1]);
    }

    #[test]
    fn bad_index() {
        let s = Seed::initial(ExchangeMatrix::zero(1));
        assert_eq!(s.mutate(1), Err(ClusterError::IndexOutOfRange(1)));
    }
}
