//! Schur polynomials and Grassmannian integrals through the Schubert basis.
//! Shares no code with the Weyl-group integration formula.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_traits::Zero;

use crate::algebra::{rat, Monomial, Poly, Rational};
use crate::error::{Error, Result};

/// Weakly decreasing parts, trailing zeros dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: &[u32]) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("{parts:?} is not weakly decreasing")));
        }
        let mut v = parts.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        Ok(Partition(v))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn fits(&self, rows: usize, cols: u32) -> bool {
        self.len() <= rows && self.0.iter().all(|&p| p <= cols)
    }

    /// The rectangle `cols^rows`.
    pub fn full_box(rows: usize, cols: u32) -> Self {
        Partition::new(&vec![cols; rows]).expect("constant parts")
    }

    /// Part `i`, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

fn sign_of(perm: &[usize]) -> i64 {
    let inversions = (0..perm.len()).tuple_combinations().filter(|&(i, j)| perm[i] > perm[j]).count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `det[x_j^{e_i}]` expanded over permutations.
fn alternant(exps: &[u32]) -> Poly {
    let s = exps.len();
    let mut out = Poly::zero(s);
    for perm in (0..s).permutations(s) {
        let mut m = vec![0; s];
        for (i, &j) in perm.iter().enumerate() {
            m[j] = exps[i];
        }
        out.add_term(Monomial(m), rat(sign_of(&perm)));
    }
    out
}

/// `s_lambda(x_1, ..., x_s)` as the quotient of alternants.
pub fn schur_polynomial(lambda: &Partition, s: usize) -> Result<Poly> {
    if lambda.len() > s {
        return Err(Error::InvalidShape(format!("{lambda} has more than {s} parts")));
    }
    let shifted: Vec<u32> = (0..s).map(|i| lambda.part(i) + (s - 1 - i) as u32).collect();
    let staircase: Vec<u32> = (0..s).map(|i| (s - 1 - i) as u32).collect();
    alternant(&shifted).div_exact(&alternant(&staircase))
}

fn is_symmetric(p: &Poly) -> bool {
    let s = p.nvars();
    (0..s.saturating_sub(1)).all(|i| {
        let mut perm: Vec<usize> = (0..s).collect();
        perm.swap(i, i + 1);
        p.permute_vars(&perm) == *p
    })
}

/// Schur coefficients of a symmetric polynomial in `s` variables, keeping only
/// partitions inside the `s x (n - s)` box.
pub fn schur_expand(p: &Poly, s: usize, n: usize) -> Result<BTreeMap<Partition, Rational>> {
    if p.nvars() != s {
        return Err(Error::ArityMismatch(p.nvars(), s));
    }
    if !is_symmetric(p) {
        return Err(Error::NotSymmetric);
    }
    let cols = (n - s) as u32;
    let mut rest = p.clone();
    let mut out = BTreeMap::new();
    while let Some((m, c)) = rest.leading_term() {
        let lambda = Partition::new(&m.0)?;
        let c = c.clone();
        let schur = schur_polynomial(&lambda, s)?;
        rest = &rest - &schur.scale(&c);
        if lambda.fits(s, cols) {
            out.insert(lambda, c);
        }
    }
    Ok(out)
}

/// `int_{G(s,n)} p` by Schubert duality: the coefficient of the full box.
pub fn oracle_integrate(s: usize, n: usize, p: &Poly) -> Result<Rational> {
    let top = Partition::full_box(s, (n - s) as u32);
    Ok(schur_expand(p, s, n)?.remove(&top).unwrap_or_else(Rational::zero))
}

/// Monomial symmetric polynomial `m_lambda(x_1, ..., x_s)`.
pub fn monomial_symmetric(lambda: &Partition, s: usize) -> Poly {
    let padded: Vec<u32> = (0..s).map(|i| lambda.part(i)).collect();
    let mut out = Poly::zero(s);
    for perm in padded.iter().copied().permutations(s).unique() {
        out.add_term(Monomial(perm), rat(1));
    }
    out
}

/// `sum_i coeffs[i] * m_{lambda_i}` over the partitions of `degree` with at
/// most `s` parts, in the order `partitions` lists them. Missing coefficients
/// count as zero.
pub fn symmetric_combination(s: usize, degree: u32, coeffs: &[i64]) -> Poly {
    partitions(degree, s)
        .iter()
        .zip(coeffs)
        .fold(Poly::zero(s), |acc, (l, &c)| &acc + &monomial_symmetric(l, s).scale(&rat(c)))
}

/// Partitions of `k` with at most `rows` parts.
pub fn partitions(k: u32, rows: usize) -> Vec<Partition> {
    fn rec(left: u32, max: u32, rows: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if rows == 0 {
            return;
        }
        for p in (1..=max.min(left)).rev() {
            cur.push(p);
            rec(left - p, p, rows - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, k, rows, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts).unwrap()
    }

    fn mono(e: &[u32], c: i64) -> Poly {
        Poly::monomial(Monomial(e.to_vec()), rat(c))
    }

    #[test]
    fn small_schur_polynomials() {
        assert_eq!(schur_polynomial(&p(&[1]), 2).unwrap(), Poly::linear(&[1, 1], 0));
        assert_eq!(schur_polynomial(&p(&[2, 2]), 2).unwrap(), mono(&[2, 2], 1));
        let h2 = &(&mono(&[2, 0], 1) + &mono(&[1, 1], 1)) + &mono(&[0, 2], 1);
        assert_eq!(schur_polynomial(&p(&[2]), 2).unwrap(), h2);
        assert_eq!(schur_polynomial(&p(&[]), 3).unwrap(), Poly::one(3));
        assert!(schur_polynomial(&p(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn expansions() {
        let s1 = Poly::linear(&[1, 1], 0);
        let e = schur_expand(&s1.pow(2), 2, 4).unwrap();
        assert_eq!(e, BTreeMap::from([(p(&[2]), rat(1)), (p(&[1, 1]), rat(1))]));
        let p2 = &mono(&[2, 0], 1) + &mono(&[0, 2], 1);
        let e = schur_expand(&p2, 2, 4).unwrap();
        assert_eq!(e, BTreeMap::from([(p(&[2]), rat(1)), (p(&[1, 1]), rat(-1))]));
        let e = schur_expand(&mono(&[2, 2], 1), 2, 4).unwrap();
        assert_eq!(e, BTreeMap::from([(p(&[2, 2]), rat(1))]));
        assert_eq!(schur_expand(&mono(&[2, 1], 1), 2, 4), Err(Error::NotSymmetric));
        // h_3 leaves the 2x2 box
        let h3 = schur_polynomial(&p(&[3]), 2).unwrap();
        assert!(schur_expand(&h3, 2, 4).unwrap().is_empty());
    }

    #[test]
    fn oracle_integrals() {
        let s1 = Poly::linear(&[1, 1], 0);
        assert_eq!(oracle_integrate(2, 4, &s1.pow(4)).unwrap(), rat(2));
        assert_eq!(oracle_integrate(2, 4, &mono(&[2, 2], 1)).unwrap(), rat(1));
        let s21 = schur_polynomial(&p(&[2, 1]), 2).unwrap();
        assert_eq!(oracle_integrate(2, 4, &s21).unwrap(), rat(0));
        // degree of G(2,5) is 5
        let s1 = Poly::linear(&[1, 1], 0);
        assert_eq!(oracle_integrate(2, 5, &s1.pow(6)).unwrap(), rat(5));
    }

    #[test]
    fn pieri_in_two_by_three_box() {
        let (s, n) = (2, 5);
        let sigma1 = Poly::linear(&[1, 1], 0);
        for k in 0..=6 {
            for lambda in partitions(k, s).into_iter().filter(|l| l.fits(s, 3)) {
                let prod = &sigma1 * &schur_polynomial(&lambda, s).unwrap();
                let mut expect = BTreeMap::new();
                for row in 0..s {
                    let mut parts: Vec<u32> = (0..s).map(|i| lambda.part(i)).collect();
                    parts[row] += 1;
                    if let Ok(mu) = Partition::new(&parts) {
                        if mu.fits(s, 3) {
                            expect.insert(mu, rat(1));
                        }
                    }
                }
                assert_eq!(schur_expand(&prod, s, n).unwrap(), expect, "{lambda}");
            }
        }
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions(4, 2).len(), 3);
        assert_eq!(partitions(9, 3).len(), 12);
        assert_eq!(partitions(0, 2), vec![p(&[])]);
        assert_eq!(monomial_symmetric(&p(&[2, 1]), 3).len(), 6);
        assert_eq!(monomial_symmetric(&p(&[1, 1]), 3).len(), 3);
    }
}
