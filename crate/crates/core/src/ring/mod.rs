//! Cohomology rings of the toric towers that abelianize flag manifolds.

mod shape;
mod tower;

pub use shape::{FlagShape, Flavor};
pub use tower::{CohClass, RootData, TowerRing, WeylElement};

use crate::algebra::Poly;

/// Integer linear combination of the tower variables, i.e. a divisor class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm(pub Vec<i64>);

impl LinearForm {
    pub fn zero(nvars: usize) -> Self {
        LinearForm(vec![0; nvars])
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut v = vec![0; nvars];
        v[idx] = 1;
        LinearForm(v)
    }

    /// `x_a - x_b`.
    pub fn difference(nvars: usize, a: usize, b: usize) -> Self {
        let mut v = vec![0; nvars];
        v[a] += 1;
        v[b] -= 1;
        LinearForm(v)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn neg(&self) -> Self {
        LinearForm(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        LinearForm(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Pairing with a curve class on the tower, given by the degrees of the
    /// tautological divisors `H_{i,j}`.
    pub fn pair(&self, curve: &[i64]) -> i64 {
        self.0.iter().zip(curve).map(|(a, b)| a * b).sum()
    }

    /// As a polynomial in `nvars` variables (`nvars >= self.nvars()`).
    pub fn to_poly(&self, nvars: usize) -> Poly {
        let mut coeffs = self.0.clone();
        coeffs.resize(nvars, 0);
        Poly::linear(&coeffs, 0)
    }

    /// Variable permutation: variable `i` becomes `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut out = vec![0; self.0.len()];
        for (i, &c) in self.0.iter().enumerate() {
            out[perm[i]] = c;
        }
        LinearForm(out)
    }
}
