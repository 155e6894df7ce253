use std::collections::BTreeMap;

use num_traits::One;

use crate::algebra::{rat, Poly, Rational};
use crate::ring::LinearForm;

/// The factor `c + k*hbar`, stored up to sign in a canonical orientation:
/// `k > 0`, or `k == 0` with the first nonzero coefficient of `c` positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearFactor {
    pub form: LinearForm,
    pub k: i64,
}

impl LinearFactor {
    /// Canonical factor together with the sign it absorbed.
    pub fn normalized(form: &LinearForm, k: i64) -> (i64, LinearFactor) {
        let flip = k < 0 || (k == 0 && form.0.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0));
        if flip {
            (-1, LinearFactor { form: form.neg(), k: -k })
        } else {
            (1, LinearFactor { form: form.clone(), k })
        }
    }

    pub fn is_unit(&self) -> bool {
        self.k != 0
    }

    /// As a polynomial in the tower variables plus `hbar` (last).
    pub fn to_poly(&self) -> Poly {
        let mut coeffs = self.form.0.clone();
        coeffs.push(self.k);
        Poly::linear(&coeffs, 0)
    }
}

/// `scalar * prod numerator / (prod unit_denominators * prod nonunit_denominators)`
/// with all factors linear in the Chern roots and `hbar`.
///
/// Unit denominators (`k != 0`) invert in the tower ring; non-unit ones
/// (`k == 0`) must be cleared by exact division.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredFraction {
    pub scalar: Rational,
    pub numerator: Vec<LinearFactor>,
    pub unit_denominators: Vec<LinearFactor>,
    pub nonunit_denominators: Vec<LinearForm>,
}

impl FactoredFraction {
    pub fn one() -> Self {
        FactoredFraction {
            scalar: Rational::one(),
            numerator: Vec::new(),
            unit_denominators: Vec::new(),
            nonunit_denominators: Vec::new(),
        }
    }

    pub fn factor(form: &LinearForm, k: i64) -> Self {
        let (sign, f) = LinearFactor::normalized(form, k);
        FactoredFraction { scalar: rat(sign), numerator: vec![f], ..Self::one() }
    }

    pub fn inverse_factor(form: &LinearForm, k: i64) -> Self {
        Self::factor(form, k).inverse()
    }

    pub fn inverse(&self) -> Self {
        let mut out = FactoredFraction { scalar: rat(1) / &self.scalar, ..Self::one() };
        for f in &self.numerator {
            if f.is_unit() {
                out.unit_denominators.push(f.clone());
            } else {
                out.nonunit_denominators.push(f.form.clone());
            }
        }
        out.numerator.extend(self.unit_denominators.iter().cloned());
        out.numerator.extend(self.nonunit_denominators.iter().map(|c| LinearFactor { form: c.clone(), k: 0 }));
        out.canonicalize();
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = FactoredFraction {
            scalar: &self.scalar * &other.scalar,
            numerator: [self.numerator.clone(), other.numerator.clone()].concat(),
            unit_denominators: [self.unit_denominators.clone(), other.unit_denominators.clone()].concat(),
            nonunit_denominators: [self.nonunit_denominators.clone(), other.nonunit_denominators.clone()].concat(),
        };
        out.canonicalize();
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Cancels common factors between numerator and denominators and sorts.
    fn canonicalize(&mut self) {
        let mut num: BTreeMap<LinearFactor, usize> = BTreeMap::new();
        for f in self.numerator.drain(..) {
            *num.entry(f).or_default() += 1;
        }
        let mut cancel = |f: LinearFactor| -> Option<LinearFactor> {
            match num.get_mut(&f) {
                Some(c) if *c > 0 => {
                    *c -= 1;
                    None
                }
                _ => Some(f),
            }
        };
        let mut units: Vec<LinearFactor> = self.unit_denominators.drain(..).filter_map(&mut cancel).collect();
        let mut nonunits: Vec<LinearForm> = self
            .nonunit_denominators
            .drain(..)
            .filter_map(|c| cancel(LinearFactor { form: c, k: 0 }).map(|f| f.form))
            .collect();
        units.sort();
        nonunits.sort();
        self.numerator = num.into_iter().flat_map(|(f, c)| std::iter::repeat_n(f, c)).collect();
        self.unit_denominators = units;
        self.nonunit_denominators = nonunits;
    }

    /// `scalar * prod numerator` in the tower variables plus `hbar`.
    pub fn poly_part(&self, nvars: usize) -> Poly {
        self.numerator.iter().fold(Poly::constant(nvars + 1, self.scalar.clone()), |acc, f| &acc * &f.to_poly())
    }

    /// Renames variables (`perm[i]` is the new index of variable `i`).
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        let mut out = FactoredFraction { scalar: self.scalar.clone(), ..Self::one() };
        for f in &self.numerator {
            out = out.mul(&Self::factor(&f.form.permute(perm), f.k));
        }
        for f in &self.unit_denominators {
            out = out.mul(&Self::inverse_factor(&f.form.permute(perm), f.k));
        }
        for c in &self.nonunit_denominators {
            out = out.mul(&Self::inverse_factor(&c.permute(perm), 0));
        }
        out
    }

    pub fn is_polynomial(&self) -> bool {
        self.unit_denominators.is_empty() && self.nonunit_denominators.is_empty()
    }
}

/// `prod_{k=-inf}^{m} (c + k hbar) / prod_{k=-inf}^{0} (c + k hbar)`.
pub fn hyperfactor(c: &LinearForm, m: i64) -> FactoredFraction {
    if m >= 0 {
        (1..=m).fold(FactoredFraction::one(), |acc, k| acc.mul(&FactoredFraction::factor(c, k)))
    } else {
        (m + 1..=0).fold(FactoredFraction::one(), |acc, k| acc.mul(&FactoredFraction::inverse_factor(c, k)))
    }
}
