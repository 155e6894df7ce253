use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Exponent vector, ordered graded-lexicographically: total degree first,
/// then lexicographically with variable 0 most significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut e = vec![0; nvars];
        e[idx] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when every exponent of `other` is at most the one in `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0.iter().zip(&other.0).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial over the rationals in a fixed number of variables.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(Monomial::one(nvars), c)
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        Self::monomial(Monomial::var(nvars, idx), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let nvars = m.arity();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { nvars, terms }
    }

    /// Linear form `sum coeffs[i] * x_i + constant`.
    pub fn linear(coeffs: &[i64], constant: i64) -> Self {
        let nvars = coeffs.len();
        let mut p = Poly::constant(nvars, Rational::from_integer(constant.into()));
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                p.add_term(Monomial::var(nvars, i), Rational::from_integer(c.into()));
            }
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Result<Self> {
        let mut p = Poly::zero(nvars);
        for (m, c) in terms {
            if m.arity() != nvars {
                return Err(Error::ArityMismatch(m.arity(), nvars));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Rational)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        debug_assert_eq!(m.arity(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Maximum total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// `Some(deg)` when all terms share one total degree. The zero polynomial
    /// is homogeneous of every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> std::result::Result<Option<u32>, Error> {
        let mut degs = self.terms.keys().map(Monomial::degree);
        let Some(first) = degs.next() else { return Ok(None) };
        if degs.all(|d| d == first) {
            Ok(Some(first))
        } else {
            Err(Error::Inhomogeneous)
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    fn check_arity(&self, other: &Poly) -> Result<()> {
        if self.nvars != other.nvars {
            Err(Error::ArityMismatch(self.nvars, other.nvars))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_arity(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(self.nvars));
        }
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let prod = ca * cb;
                acc.entry(ma.mul(mb)).and_modify(|c| *c += &prod).or_insert(prod);
            }
        }
        Ok(Poly { nvars: self.nvars, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() })
    }

    /// Product keeping only the monomials accepted by `keep`. Used to truncate
    /// by degree while multiplying.
    pub fn mul_filtered(&self, other: &Poly, keep: impl Fn(&Monomial) -> bool) -> Poly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                if !keep(&m) {
                    continue;
                }
                let prod = ca * cb;
                acc.entry(m).and_modify(|c| *c += &prod).or_insert(prod);
            }
        }
        Poly { nvars: self.nvars, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / divisor` in the free polynomial ring. A nonzero
    /// remainder is an error: it never arises for the divisions this crate
    /// performs unless an anti-symmetry invariant is broken.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        self.check_arity(divisor)?;
        let (lm, lc) = divisor.leading_term().ok_or(Error::DivisionByZero)?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.nvars);
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(&lm).ok_or(Error::NonzeroRemainder)?;
            let qc = c / &lc;
            for (dm, dc) in &divisor.terms {
                rem.add_term(qm.mul(dm), -(dc * &qc));
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// Renames variables: variable `i` becomes `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Poly {
        debug_assert_eq!(perm.len(), self.nvars);
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0; self.nvars];
            for (i, &x) in m.0.iter().enumerate() {
                e[perm[i]] = x;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Drops every term for which `keep` is false.
    pub fn retain(&mut self, mut keep: impl FnMut(&Monomial) -> bool) {
        self.terms.retain(|m, _| keep(m));
    }

    /// Embeds into a ring with more variables, appending zero exponents.
    pub fn extend_vars(&self, nvars: usize) -> Poly {
        assert!(nvars >= self.nvars);
        let mut out = Poly::zero(nvars);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e.resize(nvars, 0);
            out.terms.insert(Monomial(e), c.clone());
        }
        out
    }

    /// Splits off the last variable: returns `(exponent, coefficient)` pairs
    /// with coefficients in the first `nvars - 1` variables.
    pub fn split_last_var(&self) -> BTreeMap<u32, Poly> {
        let n = self.nvars - 1;
        let mut out: BTreeMap<u32, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[n];
            out.entry(e).or_insert_with(|| Poly::zero(n)).terms.insert(Monomial(m.0[..n].to_vec()), c.clone());
        }
        out
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.nvars))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.try_add(rhs).expect("poly add: arity mismatch")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.try_add(&-rhs).expect("poly sub: arity mismatch")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.try_mul(rhs).expect("poly mul: arity mismatch")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Human-readable rendering with variables `x0, x1, ...`, leading term first.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if k > 0 {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            } else if neg {
                write!(f, "-")?;
            }
            let a = c.abs();
            let vars: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| if e == 1 { format!("x{i}") } else { format!("x{i}^{e}") })
                    .collect();
            if vars.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{a}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use proptest::prelude::*;

    fn x() -> Poly {
        Poly::var(2, 0)
    }
    fn y() -> Poly {
        Poly::var(2, 1)
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&x() + &y()) * &(&x() - &y());
        assert_eq!(p, &x().pow(2) - &y().pow(2));
        assert_eq!(&p * &Poly::one(2), p);
    }

    #[test]
    fn coefficient_of_x2y2() {
        // (x+y)^2 (x-y)^2 = (x^2 - y^2)^2
        let p = &(&x() + &y()).pow(2) * &(&x() - &y()).pow(2);
        assert_eq!(p.coeff(&Monomial(vec![2, 2])), rat(-2));
    }

    #[test]
    fn exact_division() {
        let p = &x().pow(2) - &y().pow(2);
        assert_eq!(p.div_exact(&(&x() - &y())).unwrap(), &x() + &y());
        assert_eq!(Poly::zero(2).div_exact(&x()).unwrap(), Poly::zero(2));
        assert_eq!(x().div_exact(&y()), Err(Error::NonzeroRemainder));
        assert_eq!(x().div_exact(&Poly::zero(2)), Err(Error::DivisionByZero));
        assert_eq!(&x() + &y(), (&x() + &y()).div_exact(&Poly::one(2)).unwrap());
    }

    #[test]
    fn two_term_grassmannian_sum_divides() {
        // Lifts (1,0) and (0,1) on G(2,n) with n = 2 for brevity; variables
        // (H1, H2, hbar). Numerators: (H1 - H2 + hbar)(H2 + hbar)^2 and
        // (H1 - H2 - hbar)(H1 + hbar)^2 after clearing the common unit
        // denominator; their difference is antisymmetric.
        let h1 = Poly::var(3, 0);
        let h2 = Poly::var(3, 1);
        let hb = Poly::var(3, 2);
        let a = &(&(&h1 - &h2) + &hb) * &(&h2 + &hb).pow(2);
        let b = &(&(&h1 - &h2) - &hb) * &(&h1 + &hb).pow(2);
        let w = &a + &b;
        let v = &h1 - &h2;
        let q = w.div_exact(&v).unwrap();
        assert_eq!(&q * &v, w);
    }

    #[test]
    fn arity_mismatch_is_reported() {
        assert_eq!(Poly::var(2, 0).try_mul(&Poly::var(3, 0)), Err(Error::ArityMismatch(2, 3)));
    }

    #[test]
    fn graded_lex_order() {
        let a = Monomial(vec![0, 3]);
        let b = Monomial(vec![1, 1]);
        let c = Monomial(vec![2, 1]);
        assert!(a > b);
        assert!(c > a);
        assert!(Monomial(vec![2, 0]) > Monomial(vec![1, 1]));
    }

    fn arb_poly(nvars: usize) -> impl Strategy<Value = Poly> {
        prop::collection::vec((prop::collection::vec(0u32..3, nvars), -4i64..5), 0..5)
            .prop_map(move |ts| Poly::from_terms(nvars, ts.into_iter().map(|(e, c)| (Monomial(e), rat(c)))).unwrap())
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_poly(3), q in arb_poly(3), r in arb_poly(3)) {
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        }

        #[test]
        fn division_inverts_multiplication(p in arb_poly(3), q in arb_poly(3)) {
            prop_assume!(!q.is_zero());
            prop_assert_eq!((&p * &q).div_exact(&q).unwrap(), p);
        }
    }
}
