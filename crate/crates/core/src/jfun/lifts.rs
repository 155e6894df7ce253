use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::ring::FlagShape;

/// Degree `(d_1, ..., d_l)` of a curve class on the flag manifold.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeVector(pub Vec<i64>);

impl DegreeVector {
    pub fn new(shape: &FlagShape, d: &[i64]) -> Result<Self> {
        if d.len() != shape.levels() {
            return Err(Error::InvalidDegree(format!("{} entries for {} flag steps", d.len(), shape.levels())));
        }
        if let Some(x) = d.iter().find(|&&x| x < 0) {
            return Err(Error::InvalidDegree(format!("negative entry {x}")));
        }
        Ok(DegreeVector(d.to_vec()))
    }

    pub fn zero(shape: &FlagShape) -> Self {
        DegreeVector(vec![0; shape.levels()])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(","))
    }
}

impl FromStr for DegreeVector {
    type Err = Error;
    /// Comma-separated entries, e.g. `1,0` (shape-agnostic; validate with `new`).
    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|x| x.trim().parse::<i64>().map_err(|_| Error::InvalidDegree(s.to_string())))
            .collect::<Result<Vec<_>>>()
            .map(DegreeVector)
    }
}

/// A curve class on the tower: `d_{i,j}` for every Chern root `H_{i,j}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LiftTuple(pub Vec<Vec<i64>>);

impl LiftTuple {
    /// Degrees in tower-variable order.
    pub fn flat(&self) -> Vec<i64> {
        self.0.iter().flatten().copied().collect()
    }

    pub fn lifts(&self, d: &DegreeVector) -> bool {
        self.0.len() == d.0.len() && self.0.iter().zip(&d.0).all(|(row, &di)| row.iter().sum::<i64>() == di)
    }

    /// Applies per-level permutations of the entries (`new[perm[j]] = old[j]`).
    pub fn permute(&self, perm: &[Vec<usize>]) -> LiftTuple {
        LiftTuple(
            self.0
                .iter()
                .zip(perm)
                .map(|(row, p)| {
                    let mut out = vec![0; row.len()];
                    for (j, &x) in row.iter().enumerate() {
                        out[p[j]] = x;
                    }
                    out
                })
                .collect(),
        )
    }
}

/// Integer tuples of length `parts` with entries in `[lo, hi]` summing to `total`.
pub fn bounded_compositions(total: i64, parts: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    fn rec(left: i64, parts: usize, lo: i64, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if parts == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let rest = (parts - 1) as i64;
        let first = lo.max(left - rest * hi);
        let last = hi.min(left - rest * lo);
        for x in first..=last {
            cur.push(x);
            rec(left - x, parts - 1, lo, hi, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, parts, lo, hi, &mut Vec::with_capacity(parts), &mut out);
    out
}

/// All nonnegative lifts: compositions of each `d_i` into `s_i` parts.
pub fn enumerate_lifts(shape: &FlagShape, d: &DegreeVector) -> Result<Vec<LiftTuple>> {
    let d = DegreeVector::new(shape, &d.0)?;
    Ok(lifts_in_window(shape, &d, 0, 0))
}

/// Lifts with every entry in `[lo, d_i + above]` on level `i`.
pub fn lifts_in_window(shape: &FlagShape, d: &DegreeVector, lo: i64, above: i64) -> Vec<LiftTuple> {
    d.0.iter()
        .enumerate()
        .map(|(i, &di)| {
            let hi = if lo >= 0 && above == 0 { di } else { di + above };
            bounded_compositions(di, shape.dims()[i], lo, hi)
        })
        .multi_cartesian_product()
        .map(LiftTuple)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grassmannian_degree_two() {
        let g = FlagShape::grassmannian(2, 4).unwrap();
        let lifts = enumerate_lifts(&g, &DegreeVector(vec![2])).unwrap();
        let rows: Vec<Vec<i64>> = lifts.iter().map(|l| l.0[0].clone()).collect();
        assert_eq!(rows, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
    }

    #[test]
    fn flag_lifts() {
        let f = FlagShape::flag(&[1, 2], 3).unwrap();
        let lifts = enumerate_lifts(&f, &DegreeVector(vec![1, 1])).unwrap();
        assert_eq!(lifts, vec![LiftTuple(vec![vec![1], vec![0, 1]]), LiftTuple(vec![vec![1], vec![1, 0]])]);
        let zero = enumerate_lifts(&f, &DegreeVector::zero(&f)).unwrap();
        assert_eq!(zero, vec![LiftTuple(vec![vec![0], vec![0, 0]])]);
        assert!(enumerate_lifts(&f, &DegreeVector(vec![-1, 0])).is_err());
        assert!(enumerate_lifts(&f, &DegreeVector(vec![1])).is_err());
    }

    #[test]
    fn composition_counts() {
        // C(d + s - 1, s - 1)
        assert_eq!(bounded_compositions(3, 3, 0, 3).len(), 10);
        assert_eq!(bounded_compositions(0, 4, 0, 0).len(), 1);
        // window [-2, d + 2] on three parts of 1
        let w = bounded_compositions(1, 3, -2, 3);
        assert!(w.iter().all(|c| c.iter().sum::<i64>() == 1 && c.iter().all(|&x| (-2..=3).contains(&x))));
        assert!(w.len() > 3);
    }

    #[test]
    fn every_lift_lifts() {
        let f = FlagShape::flag(&[1, 3], 5).unwrap();
        let d = DegreeVector(vec![2, 3]);
        let lifts = enumerate_lifts(&f, &d).unwrap();
        assert_eq!(lifts.len(), 10);
        assert!(lifts.iter().all(|l| l.lifts(&d)));
    }
}
