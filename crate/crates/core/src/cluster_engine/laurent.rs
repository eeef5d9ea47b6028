//! Exact Laurent polynomials with arbitrary-precision integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::ClusterError;

/// Exponent vector, one entry per initial variable.
pub type Exponent = Vec<i32>;

/// Terms keyed by exponent; the map order is the canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPolynomial {
    n: usize,
    terms: BTreeMap<Exponent, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero(n: usize) -> Self {
        LaurentPolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(vec![0; n], BigInt::one())
    }

    /// The initial variable `x_i`.
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self::monomial(e, BigInt::one())
    }

    pub fn monomial(e: Exponent, c: BigInt) -> Self {
        let mut p = Self::zero(e.len());
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    /// Builds from arbitrary terms, merging repeats and dropping zeros.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Exponent, BigInt)>) -> Self {
        let mut p = Self::zero(n);
        for (e, c) in terms {
            assert_eq!(e.len(), n, "exponent length");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exponent, c: BigInt) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn has_positive_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.n);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    fn sub_scaled(&mut self, q: &Exponent, c: &BigInt, d: &LaurentPolynomial) {
        for (e, dc) in &d.terms {
            let s: Exponent = e.iter().zip(q).map(|(a, b)| a + b).collect();
            self.add_term(s, -(dc * c));
        }
    }

    fn bounds(&self) -> (Vec<i32>, Vec<i32>) {
        let mut lo = vec![i32::MAX; self.n];
        let mut hi = vec![i32::MIN; self.n];
        for e in self.terms.keys() {
            for j in 0..self.n {
                lo[j] = lo[j].min(e[j]);
                hi[j] = hi[j].max(e[j]);
            }
        }
        (lo, hi)
    }

    /// Exact quotient `self / d`.
    pub fn div_exact(&self, d: &LaurentPolynomial) -> Result<Self, ClusterError> {
        if d.is_zero() {
            return Err(ClusterError::ZeroPolynomial);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.n));
        }
        // Per-variable degree ranges add under multiplication, which boxes
        // in the exponents of any exact quotient.
        let (alo, ahi) = self.bounds();
        let (dlo, dhi) = d.bounds();
        let lo: Vec<i32> = (0..self.n).map(|j| alo[j] - dlo[j]).collect();
        let hi: Vec<i32> = (0..self.n).map(|j| ahi[j] - dhi[j]).collect();
        let (dl, dc) = d.terms.iter().next_back().expect("non-zero");
        let mut rem = self.clone();
        let mut q = Self::zero(self.n);
        while let Some((rl, rc)) = rem.terms.iter().next_back() {
            let e: Exponent = rl.iter().zip(dl).map(|(a, b)| a - b).collect();
            if (0..self.n).any(|j| e[j] < lo[j] || e[j] > hi[j]) {
                return Err(ClusterError::NonExactDivision);
            }
            let (c, r) = (rc / dc, rc % dc);
            if !r.is_zero() {
                return Err(ClusterError::NonExactDivision);
            }
            rem.sub_scaled(&e, &c, d);
            q.add_term(e, c);
        }
        Ok(q)
    }

    /// `d_i` is minus the least exponent of `x_i`.
    pub fn denominator_vector(&self) -> Result<Vec<i64>, ClusterError> {
        if self.is_zero() {
            return Err(ClusterError::ZeroPolynomial);
        }
        Ok(self.bounds().0.into_iter().map(|m| -(m as i64)).collect())
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{k}", i + 1)
                    }
                })
                .collect();
            match (c.is_one(), vars.is_empty()) {
                (_, true) => write!(f, "{c}")?,
                (true, false) => write!(f, "{}", vars.join("*"))?,
                (false, false) => write!(f, "{c}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> LaurentPolynomial {
        LaurentPolynomial::var(3, i)
    }

    #[test]
    fn division_round_trips() {
        let one = LaurentPolynomial::one(3);
        let a = &(&one + &x(0)) + &x(1);
        let b = &(&x(2) + &x(1).pow(2)) + &one;
        let p = &a * &b;
        assert_eq!(p.div_exact(&b).unwrap(), a);
        assert_eq!(p.div_exact(&a).unwrap(), b);
    }

    #[test]
    fn inexact_division_is_reported() {
        let one = LaurentPolynomial::one(3);
        let a = &one + &x(0);
        let b = &one + &x(1);
        assert_eq!(a.div_exact(&b), Err(ClusterError::NonExactDivision));
        let two = LaurentPolynomial::monomial(vec![0; 3], BigInt::from(2));
        assert_eq!(a.div_exact(&two), Err(ClusterError::NonExactDivision));
    }

    #[test]
    fn cancelling_terms_vanish() {
        let p = &x(0) + &LaurentPolynomial::monomial(vec![1, 0, 0], BigInt::from(-1));
        assert!(p.is_zero());
        assert_eq!(p.denominator_vector(), Err(ClusterError::ZeroPolynomial));
    }

    #[test]
    fn denominators() {
        assert_eq!(x(0).denominator_vector().unwrap(), vec![-1, 0, 0]);
        let one = LaurentPolynomial::one(3);
        let y = (&one + &x(1)).div_exact(&x(0)).unwrap();
        assert_eq!(y.denominator_vector().unwrap(), vec![1, 0, 0]);
        assert_eq!(y.to_string(), "x1^-1*x2 + x1^-1");
    }
}
