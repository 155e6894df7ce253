use std::collections::BTreeMap;

use rayon::prelude::*;

use super::factored::{hyperfactor, FactoredFraction, LinearFactor};
use super::lifts::{enumerate_lifts, DegreeVector, LiftTuple};
use crate::algebra::{HLaurent, Monomial, Poly};
use crate::error::{Error, Result};
use crate::ring::{FlagShape, LinearForm, RootData, TowerRing};

/// First Chern classes `c_1(M_i)` of the line bundles a twisted I-function is
/// corrected by.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwistSpec {
    pub twists: Vec<LinearForm>,
}

impl TwistSpec {
    pub fn none() -> Self {
        TwistSpec::default()
    }

    /// `H_i + H_j` for every pair of variables: `wedge^2` of the tautological bundle.
    pub fn pairwise_sums(nvars: usize) -> Self {
        let mut twists = Vec::new();
        for i in 0..nvars {
            for j in i + 1..nvars {
                twists.push(LinearForm::var(nvars, i).add(&LinearForm::var(nvars, j)));
            }
        }
        TwistSpec { twists }
    }
}

/// Invariant divisors of the tower: `H_{i,j} - H_{i+1,j'}`, and each `H_{l,j}`
/// repeated `n` times on the last level.
pub fn toric_divisors(shape: &FlagShape) -> Vec<LinearForm> {
    let nv = shape.num_vars();
    let l = shape.levels();
    let mut out = Vec::new();
    for level in 0..l {
        for a in shape.level_vars(level) {
            if level + 1 < l {
                for b in shape.level_vars(level + 1) {
                    out.push(LinearForm::difference(nv, a, b));
                }
            } else {
                out.extend(std::iter::repeat_n(LinearForm::var(nv, a), shape.ambient()));
            }
        }
    }
    out
}

/// Toric factor `prod_D 1/hyperfactor(D, D.d)` of one lift.
pub fn toric_fraction(shape: &FlagShape, lift: &LiftTuple) -> FactoredFraction {
    let flat = lift.flat();
    toric_divisors(shape)
        .iter()
        .fold(FactoredFraction::one(), |acc, dv| acc.mul(&hyperfactor(dv, dv.pair(&flat)).inverse()))
}

/// Givental's J-function coefficient of the tower at one lift.
pub fn toric_j(shape: &FlagShape, lift: &LiftTuple) -> Result<HLaurent> {
    let ring = TowerRing::new(shape);
    assemble(&ring, &[], &[toric_fraction(shape, lift)])
}

/// A flag-type GIT quotient seen through its abelianization: the tower ring,
/// the positive roots of the nonabelian group and the line-bundle twists.
#[derive(Clone, Debug)]
pub struct AbelianQuotient {
    ring: TowerRing,
    roots: Vec<LinearForm>,
    twists: TwistSpec,
}

impl AbelianQuotient {
    pub fn new(ring: TowerRing, roots: Vec<LinearForm>, twists: TwistSpec) -> Self {
        AbelianQuotient { ring, roots, twists }
    }

    pub fn flag(shape: &FlagShape) -> Self {
        Self::with_twists(shape, TwistSpec::none())
    }

    pub fn with_twists(shape: &FlagShape, twists: TwistSpec) -> Self {
        Self::new(TowerRing::new(shape), RootData::new(shape).positive, twists)
    }

    /// The tower itself, with no roots: the I-function is its toric J-function.
    pub fn trivial_group(shape: &FlagShape, twists: TwistSpec) -> Self {
        Self::new(TowerRing::new(shape), Vec::new(), twists)
    }

    pub fn ring(&self) -> &TowerRing {
        &self.ring
    }

    pub fn shape(&self) -> &FlagShape {
        self.ring.shape()
    }

    pub fn roots(&self) -> &[LinearForm] {
        &self.roots
    }

    pub fn twists(&self) -> &TwistSpec {
        &self.twists
    }

    /// The summand of one lift, before any reduction.
    pub fn summand(&self, lift: &LiftTuple) -> Result<FactoredFraction> {
        let flat = lift.flat();
        let mut f = FactoredFraction::one();
        for r in &self.roots {
            let m = r.pair(&flat);
            f = f.mul(&hyperfactor(r, m)).mul(&hyperfactor(&r.neg(), -m));
        }
        for t in &self.twists.twists {
            let m = t.pair(&flat);
            if m < 0 {
                return Err(Error::NotNef { pairing: m, lift: flat });
            }
            f = f.mul(&hyperfactor(t, m));
        }
        Ok(f.mul(&toric_fraction(self.shape(), lift)))
    }

    /// A lift of `c_1` of the quotient: the toric divisors minus the twists.
    /// The roots sum to zero and drop out.
    pub fn first_chern_form(&self) -> LinearForm {
        let nv = self.ring.nvars();
        let toric = toric_divisors(self.shape()).iter().fold(LinearForm::zero(nv), |a, b| a.add(b));
        self.twists.twists.iter().fold(toric, |a, t| a.add(&t.neg()))
    }

    /// `int_d c_1`, paired against every lift; disagreement between lifts is an error.
    pub fn first_chern_degree(&self, d: &DegreeVector) -> Result<i64> {
        let form = self.first_chern_form();
        let lifts = enumerate_lifts(self.shape(), d)?;
        let values: Vec<i64> = lifts.iter().map(|l| form.pair(&l.flat())).collect();
        match values.split_first() {
            Some((first, rest)) if rest.iter().all(|v| v == first) => Ok(*first),
            Some(_) => Err(Error::InvariantViolation(format!("c1 pairing depends on the lift: {values:?}"))),
            None => Err(Error::InvalidDegree(d.to_string())),
        }
    }

    pub fn i_function(&self, d: &DegreeVector) -> Result<HLaurent> {
        self.i_function_over(&enumerate_lifts(self.shape(), d)?)
    }

    pub fn i_function_over(&self, lifts: &[LiftTuple]) -> Result<HLaurent> {
        let summands: Vec<FactoredFraction> = lifts.par_iter().map(|l| self.summand(l)).collect::<Result<_>>()?;
        assemble(&self.ring, &self.roots, &summands)
    }
}

fn multiply_factors<'a>(
    mut p: Poly,
    factors: impl IntoIterator<Item = &'a LinearFactor>,
    keep: &(impl Fn(&Monomial) -> bool + Sync),
) -> Poly {
    for f in factors {
        if p.is_zero() {
            break;
        }
        p = p.mul_filtered(&f.to_poly(), keep);
    }
    p
}

fn count(factors: &[LinearFactor]) -> BTreeMap<LinearFactor, usize> {
    let mut out = BTreeMap::new();
    for f in factors {
        *out.entry(f.clone()).or_default() += 1;
    }
    out
}

/// Sums fractions whose non-unit denominators divide the product `V` of
/// `vandermonde`, and evaluates the result in the tower ring.
///
/// Every summand is brought over the common denominator `V * C`, with `C` the
/// smallest product of unit factors that all unit denominators divide. The
/// numerators are added in the free ring, the sum is divided exactly by `V`,
/// reduced, and multiplied by the inverse of `C`.
pub fn assemble(ring: &TowerRing, vandermonde: &[LinearForm], summands: &[FactoredFraction]) -> Result<HLaurent> {
    let nv = ring.nvars();
    let v_factors: Vec<LinearFactor> = vandermonde.iter().map(|r| LinearFactor::normalized(r, 0).1).collect();
    let v_count = count(&v_factors);

    let mut common: BTreeMap<LinearFactor, usize> = BTreeMap::new();
    for s in summands {
        for (f, c) in count(&s.unit_denominators) {
            let e = common.entry(f).or_default();
            *e = (*e).max(c);
        }
    }

    // Terms of H-degree above this bound die in the ring after division by V.
    let bound = (ring.dim() + v_factors.len()) as u32;
    let keep = move |m: &Monomial| m.degree() - m.0[nv] <= bound;

    let numerator = |s: &FactoredFraction| -> Result<Poly> {
        let mut cofactor = v_count.clone();
        for c in &s.nonunit_denominators {
            let f = LinearFactor { form: c.clone(), k: 0 };
            match cofactor.get_mut(&f) {
                Some(n) if *n > 0 => *n -= 1,
                _ => {
                    return Err(Error::InvariantViolation(format!(
                        "non-unit denominator {c:?} outside the Vandermonde"
                    )))
                }
            }
        }
        let units = count(&s.unit_denominators);
        let extra = common.iter().flat_map(|(f, &c)| {
            let have = units.get(f).copied().unwrap_or(0);
            std::iter::repeat_n(f, c - have)
        });
        let cof = cofactor.iter().flat_map(|(f, &c)| std::iter::repeat_n(f, c));
        let start = Poly::constant(nv + 1, s.scalar.clone());
        Ok(multiply_factors(start, s.numerator.iter().chain(cof).chain(extra), &keep))
    };

    let w = summands.par_iter().map(numerator).try_reduce(|| Poly::zero(nv + 1), |a, b| Ok(&a + &b))?;

    let v_poly = v_factors.iter().fold(Poly::one(nv + 1), |acc, f| &acc * &f.to_poly());
    let q = w.div_exact(&v_poly)?;
    let q = ring.laurent_reduce(&HLaurent::from_hbar_poly(&q));

    let mut c_inv = HLaurent::one(nv);
    for (f, &c) in &common {
        let inv = ring.unit_inverse(&f.form, f.k)?;
        for _ in 0..c {
            c_inv = ring.laurent_mul(&c_inv, &inv);
        }
    }
    Ok(ring.laurent_mul(&q, &c_inv))
}

/// Checks that the `hbar^e` coefficient has pure degree `total - e` for each `e`.
pub fn check_homogeneous(j: &HLaurent, total: i64) -> Result<()> {
    for (e, c) in j.terms() {
        match c.homogeneous_degree()? {
            Some(deg) if deg as i64 != total - e => {
                return Err(Error::InvariantViolation(format!(
                    "hbar^{e} coefficient has degree {deg}, expected {}",
                    total - e
                )))
            }
            _ => {}
        }
    }
    Ok(())
}
