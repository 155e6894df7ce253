use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use super::engine::{assemble, AbelianQuotient, TwistSpec};
use super::factored::{hyperfactor, FactoredFraction};
use super::lifts::{bounded_compositions, enumerate_lifts, lifts_in_window, DegreeVector, LiftTuple};
use crate::algebra::{rat, HLaurent, Monomial, Poly};
use crate::error::{Error, Result};
use crate::integrate::flag_equal;
use crate::ring::{FlagShape, Flavor, LinearForm, RootData, TowerRing};

/// The quotient presentation used for a shape: plain roots for type A, plus
/// the `wedge^2` twists cutting out the Lagrangian Grassmannian.
pub fn quotient_for(shape: &FlagShape) -> AbelianQuotient {
    match shape.flavor() {
        Flavor::TypeA => AbelianQuotient::flag(shape),
        Flavor::Lagrangian => AbelianQuotient::with_twists(shape, TwistSpec::pairwise_sums(shape.num_vars())),
    }
}

pub fn abelianized_i(shape: &FlagShape, d: &DegreeVector, twist: &TwistSpec) -> Result<HLaurent> {
    AbelianQuotient::with_twists(shape, twist.clone()).i_function(d)
}

fn require_type_a(shape: &FlagShape) -> Result<()> {
    if shape.is_lagrangian() {
        return Err(Error::UnsupportedMethod(format!("{shape} is not a type A flag manifold")));
    }
    Ok(())
}

pub fn flag_j(shape: &FlagShape, d: &DegreeVector) -> Result<HLaurent> {
    require_type_a(shape)?;
    AbelianQuotient::flag(shape).i_function(d)
}

pub fn lagrangian_j(n: usize, d: i64) -> Result<HLaurent> {
    let shape = FlagShape::lagrangian(n)?;
    quotient_for(&shape).i_function(&DegreeVector::new(&shape, &[d])?)
}

/// The Grassmannian J-function as a signed sum over compositions with
/// Vandermonde denominators, evaluated without the hypergeometric machinery.
pub fn grassmannian_j(s: usize, n: usize, d: i64) -> Result<HLaurent> {
    let shape = FlagShape::grassmannian(s, n)?;
    DegreeVector::new(&shape, &[d])?;
    let ring = TowerRing::new(&shape);
    let lin = |coeffs: &[i64], k: i64| {
        let mut c = coeffs.to_vec();
        c.push(k);
        Poly::linear(&c, 0)
    };
    let unit = |j: usize| (0..s).map(|x| i64::from(x == j)).collect::<Vec<_>>();
    let diff = |a: usize, b: usize| (0..s).map(|x| i64::from(x == a) - i64::from(x == b)).collect::<Vec<_>>();
    let bound = (ring.dim() + s * (s - 1) / 2) as u32;
    let keep = |m: &Monomial| m.degree() - m.0[s] <= bound;

    let sign = if (s as i64 - 1) * d % 2 == 0 { 1 } else { -1 };
    let mut w = Poly::zero(s + 1);
    for comp in bounded_compositions(d, s, 0, d) {
        let mut term = Poly::constant(s + 1, rat(sign));
        for (a, b) in (0..s).tuple_combinations() {
            term = term.mul_filtered(&lin(&diff(a, b), comp[a] - comp[b]), keep);
        }
        for (j, &dj) in comp.iter().enumerate() {
            for k in dj + 1..=d {
                for _ in 0..n {
                    term = term.mul_filtered(&lin(&unit(j), k), keep);
                }
            }
        }
        w = &w + &term;
    }
    let v = (0..s).tuple_combinations().fold(Poly::one(s + 1), |acc, (a, b)| &acc * &lin(&diff(a, b), 0));
    let q = ring.laurent_reduce(&HLaurent::from_hbar_poly(&w.div_exact(&v)?));

    let mut c_inv = HLaurent::one(s);
    for j in 0..s {
        for k in 1..=d {
            let inv = ring.unit_inverse(&LinearForm(unit(j)), k)?;
            for _ in 0..n {
                c_inv = ring.laurent_mul(&c_inv, &inv);
            }
        }
    }
    Ok(ring.laurent_mul(&q, &c_inv))
}

/// One summand of the product-of-Grassmannians J-function times the
/// correction for the bundle whose zero locus is the flag manifold.
pub fn product_summand(shape: &FlagShape, lift: &LiftTuple) -> FactoredFraction {
    let nv = shape.num_vars();
    let n = shape.ambient() as u32;
    let flat = lift.flat();
    let mut f = FactoredFraction::one();
    for level in 0..shape.levels() {
        let vars = shape.level_vars(level);
        let di: i64 = lift.0[level].iter().sum();
        if (shape.dims()[level] as i64 - 1) * di % 2 != 0 {
            f.scalar = -f.scalar;
        }
        for (a, b) in vars.clone().tuple_combinations() {
            let r = LinearForm::difference(nv, a, b);
            f = f.mul(&FactoredFraction::factor(&r, flat[a] - flat[b]));
            f = f.mul(&FactoredFraction::inverse_factor(&r, 0));
        }
        for a in vars.clone() {
            for k in 1..=flat[a] {
                f = f.mul(&FactoredFraction::inverse_factor(&LinearForm::var(nv, a), k).pow(n));
            }
        }
        if level + 1 < shape.levels() {
            for a in vars.clone() {
                for b in shape.level_vars(level + 1) {
                    let dv = LinearForm::difference(nv, a, b);
                    f = f.mul(&hyperfactor(&dv, flat[a] - flat[b]).inverse());
                }
                for k in 1..=flat[a] {
                    f = f.mul(&FactoredFraction::factor(&LinearForm::var(nv, a), k).pow(n));
                }
            }
        }
    }
    f
}

pub fn product_grass_twisted_i(shape: &FlagShape, d: &DegreeVector) -> Result<HLaurent> {
    require_type_a(shape)?;
    let ring = TowerRing::new(shape);
    let summands: Vec<FactoredFraction> =
        enumerate_lifts(shape, d)?.iter().map(|l| product_summand(shape, l)).collect();
    let roots = RootData::new(shape).positive;
    assemble(&ring, &roots, &summands)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Auto,
    Theorem1,
    Bck,
    Product,
    Lagrangian,
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "auto" => Method::Auto,
            "theorem1" => Method::Theorem1,
            "bck" => Method::Bck,
            "product" => Method::Product,
            "lagrangian" => Method::Lagrangian,
            other => return Err(Error::UnsupportedMethod(other.to_string())),
        })
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Auto => "auto",
            Method::Theorem1 => "theorem1",
            Method::Bck => "bck",
            Method::Product => "product",
            Method::Lagrangian => "lagrangian",
        })
    }
}

impl Method {
    pub fn resolve(self, shape: &FlagShape) -> Method {
        match (self, shape.flavor()) {
            (Method::Auto, Flavor::TypeA) => Method::Theorem1,
            (Method::Auto, Flavor::Lagrangian) => Method::Lagrangian,
            (m, _) => m,
        }
    }
}

/// `J_d` of the shape by the chosen evaluation path.
pub fn j_function(shape: &FlagShape, d: &DegreeVector, method: Method) -> Result<HLaurent> {
    let d = DegreeVector::new(shape, &d.0)?;
    match (method.resolve(shape), shape.flavor()) {
        (Method::Theorem1, Flavor::TypeA) => flag_j(shape, &d),
        (Method::Product, Flavor::TypeA) => product_grass_twisted_i(shape, &d),
        (Method::Bck, Flavor::TypeA) if shape.levels() == 1 => grassmannian_j(shape.dims()[0], shape.ambient(), d.0[0]),
        (Method::Lagrangian, Flavor::Lagrangian) => lagrangian_j(shape.dims()[0], d.0[0]),
        (m, _) => Err(Error::UnsupportedMethod(format!("{m} does not apply to {shape}"))),
    }
}

/// Lower end and overshoot of the widened lift window.
pub const WINDOW: (i64, i64) = (-2, 2);

/// Whether summing over the widened window of integer lifts leaves every
/// coefficient of `J_d` unchanged as a class on the flag manifold.
pub fn window_stable(shape: &FlagShape, d: &DegreeVector) -> Result<bool> {
    require_type_a(shape)?;
    let q = AbelianQuotient::flag(shape);
    let base = q.i_function(d)?;
    let wide = q.i_function_over(&lifts_in_window(shape, d, WINDOW.0, WINDOW.1))?;
    laurent_flag_equal(q.ring(), &base, &wide)
}

/// Coefficientwise `flag_equal` of two J-function coefficients.
pub fn laurent_flag_equal(ring: &TowerRing, a: &HLaurent, b: &HLaurent) -> Result<bool> {
    let mut exps = a.exponents();
    exps.extend(b.exponents());
    exps.sort_unstable();
    exps.dedup();
    for e in exps {
        if !flag_equal(&ring.reduce(&a.coeff(e)), &ring.reduce(&b.coeff(e)))? {
            return Ok(false);
        }
    }
    Ok(true)
}
