use std::collections::BTreeMap;

use num_traits::Zero;

use super::{rat, Poly, Rational};
use crate::error::{Error, Result};

/// Finite Laurent polynomial in `hbar` with polynomial coefficients.
///
/// Multiplication here is in the free polynomial ring; ring-aware products
/// live on `TowerRing`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HLaurent {
    nvars: usize,
    terms: BTreeMap<i64, Poly>,
}

impl HLaurent {
    pub fn zero(nvars: usize) -> Self {
        HLaurent { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::single(0, Poly::one(nvars))
    }

    pub fn single(hbar: i64, coeff: Poly) -> Self {
        let mut out = Self::zero(coeff.nvars());
        out.add_term(hbar, coeff);
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, hbar: i64, coeff: Poly) {
        assert_eq!(coeff.nvars(), self.nvars, "laurent coefficient arity");
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(hbar).or_insert_with(|| Poly::zero(self.nvars));
        *slot = &*slot + &coeff;
        if slot.is_zero() {
            self.terms.remove(&hbar);
        }
    }

    /// Coefficient of `hbar^e` (zero when absent).
    pub fn coeff(&self, hbar: i64) -> Poly {
        self.terms.get(&hbar).cloned().unwrap_or_else(|| Poly::zero(self.nvars))
    }

    /// `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Poly)> {
        self.terms.iter().map(|(e, p)| (*e, p))
    }

    pub fn exponents(&self) -> Vec<i64> {
        self.terms.keys().copied().collect()
    }

    /// Applies `f` to every coefficient, dropping the ones that vanish.
    pub fn map_coeffs(&self, mut f: impl FnMut(&Poly) -> Poly) -> HLaurent {
        let mut out = HLaurent::zero(self.nvars);
        for (e, p) in &self.terms {
            out.add_term(*e, f(p));
        }
        out
    }

    pub fn add(&self, other: &HLaurent) -> HLaurent {
        let mut out = self.clone();
        for (e, p) in &other.terms {
            out.add_term(*e, p.clone());
        }
        out
    }

    pub fn neg(&self) -> HLaurent {
        self.map_coeffs(|p| -p)
    }

    pub fn sub(&self, other: &HLaurent) -> HLaurent {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> HLaurent {
        self.map_coeffs(|p| p.scale(c))
    }

    /// Product in the free ring (no reduction, no truncation).
    pub fn mul(&self, other: &HLaurent) -> HLaurent {
        let mut out = HLaurent::zero(self.nvars);
        for (ea, pa) in &self.terms {
            for (eb, pb) in &other.terms {
                out.add_term(ea + eb, pa * pb);
            }
        }
        out
    }

    /// Embeds a polynomial in `(vars..., hbar)` with `hbar` the last variable.
    pub fn from_hbar_poly(p: &Poly) -> HLaurent {
        let mut out = HLaurent::zero(p.nvars() - 1);
        for (e, c) in p.split_last_var() {
            out.add_term(e as i64, c);
        }
        out
    }
}

/// Finite expansion of `(c + k*hbar)^{-1}`:
/// `sum_{m < bound} (-1)^m c^m k^{-m-1} hbar^{-m-1}`.
///
/// Exact in any ring where `c^bound = 0`; coefficients are left unreduced.
pub fn laurent_unit_inverse(c: &Poly, k: i64, nilpotency_bound: u32) -> Result<HLaurent> {
    if k == 0 {
        return Err(Error::NotAUnit);
    }
    let kinv = rat(1) / rat(k);
    let mut out = HLaurent::zero(c.nvars());
    let mut cpow = Poly::one(c.nvars());
    let mut scal = kinv.clone();
    for m in 0..nilpotency_bound {
        if cpow.is_zero() {
            break;
        }
        out.add_term(-(m as i64) - 1, cpow.scale(&scal));
        cpow = &cpow * c;
        scal = -(&scal * &kinv);
        if scal.is_zero() {
            break;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat_frac, Monomial};

    fn truncate(l: &HLaurent, bound: u32) -> HLaurent {
        l.map_coeffs(|p| {
            let mut q = p.clone();
            q.retain(|m| m.degree() < bound);
            q
        })
    }

    #[test]
    fn inverse_with_square_zero() {
        let h = Poly::var(1, 0);
        let inv = laurent_unit_inverse(&h, 1, 2).unwrap();
        let mut expect = HLaurent::single(-1, Poly::one(1));
        expect.add_term(-2, -&h);
        assert_eq!(inv, expect);
    }

    #[test]
    fn inverse_of_constant() {
        let inv = laurent_unit_inverse(&Poly::zero(1), 2, 5).unwrap();
        assert_eq!(inv, HLaurent::single(-1, Poly::constant(1, rat_frac(1, 2))));
    }

    #[test]
    fn cube_of_inverse_in_h_cubed_zero() {
        let h = Poly::var(1, 0);
        let inv = laurent_unit_inverse(&h, 1, 3).unwrap();
        let cube = truncate(&inv.mul(&inv).mul(&inv), 3);
        let mut expect = HLaurent::single(-3, Poly::one(1));
        expect.add_term(-4, h.scale(&rat(-3)));
        expect.add_term(-5, h.pow(2).scale(&rat(6)));
        assert_eq!(cube, expect);
        // multiply back by (H + hbar)^3
        let mut lin = HLaurent::single(0, h.clone());
        lin.add_term(1, Poly::one(1));
        let back = truncate(&cube.mul(&lin).mul(&lin).mul(&lin), 3);
        assert_eq!(back, HLaurent::one(1));
    }

    #[test]
    fn zero_k_is_rejected() {
        assert_eq!(laurent_unit_inverse(&Poly::var(1, 0), 0, 3), Err(Error::NotAUnit));
    }

    #[test]
    fn multiply_back_two_variables() {
        // c = 2x - 3y, k = -2, ring x^3 = y^3 = 0 (nilpotency bound 5)
        let c = Poly::linear(&[2, -3], 0);
        let inv = laurent_unit_inverse(&c, -2, 5).unwrap();
        let mut lin = HLaurent::single(0, c.clone());
        lin.add_term(1, Poly::constant(2, rat(-2)));
        let back = inv.mul(&lin).map_coeffs(|p| {
            let mut q = p.clone();
            q.retain(|m: &Monomial| m.0.iter().all(|&e| e < 3));
            q
        });
        assert_eq!(back, HLaurent::one(2));
    }
}
