//! Integration over the tower and, through Martin's formula, over the flag
//! manifold itself; Poincaré pairing and equality of flag classes.

use itertools::Itertools;
use num_traits::Zero;

use crate::algebra::{rat, Poly, Rational};
use crate::error::{Error, Result};
use crate::ring::{CohClass, FlagShape, LinearForm, TowerRing};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegrationResult {
    pub value: Rational,
    pub space: FlagShape,
    /// `None` for the zero class or an inhomogeneous one.
    pub class_degree: Option<u32>,
}

/// Coefficient of the top normal-form monomial `prod H_{i,j}^{s_{i+1}-1}`.
pub fn integrate_tower(c: &CohClass) -> Rational {
    c.ring().integrate(c)
}

/// Euler class of `wedge^2 S^dual` on the `G(n, 2n)` tower, cutting out the
/// Lagrangian Grassmannian: `prod_{i<j} (H_i + H_j)`.
pub fn lagrangian_euler_class(ring: &TowerRing) -> Poly {
    let n = ring.nvars();
    (0..n)
        .tuple_combinations()
        .map(|(i, j)| LinearForm::var(n, i).add(&LinearForm::var(n, j)).to_poly(n))
        .fold(Poly::one(n), |acc, f| &acc * &f)
}

/// The class `Delta^+ Delta^-` (times the Lagrangian Euler class for that
/// flavor) that converts tower integrals into integrals over the flag manifold.
pub fn integration_weight(ring: &TowerRing) -> CohClass {
    let roots = ring.roots();
    let n = ring.nvars();
    let mut w = &roots.delta_plus(n) * &roots.delta_minus(n);
    if ring.shape().is_lagrangian() {
        w = &w * &lagrangian_euler_class(ring);
    }
    ring.reduce(&w)
}

fn weighted_integral(lift: &CohClass, weight: &CohClass) -> Rational {
    let w = lift.ring().shape().weyl_order() as i64;
    integrate_tower(&(lift * weight)) / rat(w)
}

/// `(1/|W|) * int_Y lift * Delta^+ * Delta^-` for a Weyl-invariant lift.
pub fn martin_integrate(lift: &CohClass) -> Result<Rational> {
    let ring = lift.ring();
    if !ring.is_weyl_invariant(lift) {
        return Err(Error::NotWeylInvariant);
    }
    Ok(weighted_integral(lift, &integration_weight(ring)))
}

pub fn integrate(class: &CohClass) -> Result<IntegrationResult> {
    let value = martin_integrate(class)?;
    Ok(IntegrationResult { value, space: class.ring().shape().clone(), class_degree: class.degree().ok().flatten() })
}

pub fn flag_pair(a: &CohClass, b: &CohClass) -> Result<Rational> {
    let ring = a.ring();
    if !ring.is_weyl_invariant(a) || !ring.is_weyl_invariant(b) {
        return Err(Error::NotWeylInvariant);
    }
    Ok(weighted_integral(&(a * b), &integration_weight(ring)))
}

/// Weyl-symmetrized normal-form monomials of one degree, deduplicated. Their
/// images span the degree-`k` cohomology of the flag manifold.
pub fn symmetric_spanning_set(ring: &TowerRing, degree: usize) -> Vec<CohClass> {
    let mut out: Vec<CohClass> = Vec::new();
    for m in ring.normal_monomials(degree) {
        let s = ring.symmetrize(&Poly::monomial(m, rat(1)));
        if !s.is_zero() && !out.contains(&s) {
            out.push(s);
        }
    }
    out
}

/// Whether two homogeneous Weyl-invariant lifts define the same class on the
/// flag manifold, tested by pairing their difference against a spanning set
/// of the complementary degree.
pub fn flag_equal(a: &CohClass, b: &CohClass) -> Result<bool> {
    let ring = a.ring();
    let (da, db) = (a.degree()?, b.degree()?);
    let degree = match (da, db) {
        (Some(x), Some(y)) if x != y => return Err(Error::DegreeMismatch(x as i64, y as i64)),
        (Some(x), _) | (None, Some(x)) => x as usize,
        (None, None) => return Ok(true),
    };
    if !ring.is_weyl_invariant(a) || !ring.is_weyl_invariant(b) {
        return Err(Error::NotWeylInvariant);
    }
    let dim = ring.shape().dim();
    if degree > dim {
        return Ok(true);
    }
    let weight = integration_weight(ring);
    let diff = &(a - b) * &weight;
    Ok(symmetric_spanning_set(ring, dim - degree).iter().all(|m| integrate_tower(&(&diff * m)).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Monomial;

    fn grass24() -> TowerRing {
        TowerRing::new(&FlagShape::grassmannian(2, 4).unwrap())
    }

    fn mono(e: &[u32]) -> Poly {
        Poly::monomial(Monomial(e.to_vec()), rat(1))
    }

    #[test]
    fn tower_integrals() {
        let r = grass24();
        assert_eq!(integrate_tower(&r.reduce(&mono(&[3, 3]))), rat(1));
        assert_eq!(integrate_tower(&r.reduce(&mono(&[3, 2]))), rat(0));
        let f = TowerRing::new(&"flag:1,2;3".parse().unwrap());
        assert_eq!(integrate_tower(&f.reduce(&mono(&[1, 2, 2]))), rat(1));
    }

    #[test]
    fn martin_on_grassmannian() {
        let r = grass24();
        let s1 = r.reduce(&Poly::linear(&[1, 1], 0));
        assert_eq!(martin_integrate(&s1.pow(4)).unwrap(), rat(2));
        assert_eq!(martin_integrate(&r.one()).unwrap(), rat(0));
        assert_eq!(martin_integrate(&r.reduce(&mono(&[2, 2]))).unwrap(), rat(1));
        assert_eq!(martin_integrate(&r.reduce(&mono(&[2, 1]))), Err(Error::NotWeylInvariant));
    }

    #[test]
    fn pairings_on_grassmannian() {
        let r = grass24();
        let s1 = r.reduce(&Poly::linear(&[1, 1], 0));
        let s1sq = s1.pow(2);
        assert_eq!(flag_pair(&s1sq, &s1sq).unwrap(), rat(2));
        assert_eq!(flag_pair(&r.one(), &r.one()).unwrap(), rat(0));
        // s_(2) = h_2 and s_(1,1) = e_2 are each self-dual in the 2x2 box
        let s2 = r.reduce(&(&(&mono(&[2, 0]) + &mono(&[1, 1])) + &mono(&[0, 2])));
        let s11 = r.reduce(&mono(&[1, 1]));
        assert_eq!(flag_pair(&s2, &s11).unwrap(), rat(0));
        assert_eq!(flag_pair(&s11, &s2).unwrap(), rat(0));
        assert_eq!(flag_pair(&s2, &s2).unwrap(), rat(1));
        assert_eq!(flag_pair(&s11, &s11).unwrap(), rat(1));
    }

    #[test]
    fn equality_of_flag_classes() {
        let r = grass24();
        let p2 = r.reduce(&(&mono(&[2, 0]) + &mono(&[0, 2])));
        let alt = r.reduce(&(&Poly::linear(&[1, 1], 0).pow(2) - &mono(&[1, 1]).scale(&rat(2))));
        assert!(flag_equal(&p2, &p2).unwrap());
        assert!(flag_equal(&p2, &alt).unwrap());
        let s1sq = r.reduce(&Poly::linear(&[1, 1], 0).pow(2));
        let s2 = r.reduce(&(&(&mono(&[2, 0]) + &mono(&[1, 1])) + &mono(&[0, 2])));
        assert!(!flag_equal(&s1sq, &s2).unwrap());
        // h_3 vanishes on G(2,4) but not on the tower
        let h3 = r.reduce(&(&(&(&mono(&[3, 0]) + &mono(&[2, 1])) + &mono(&[1, 2])) + &mono(&[0, 3])));
        assert!(!h3.is_zero());
        assert!(flag_equal(&h3, &r.zero()).unwrap());
        assert_eq!(flag_equal(&s1sq, &r.one()), Err(Error::DegreeMismatch(2, 0)));
    }

    #[test]
    fn top_degree_matches_flag_dimension() {
        for s in ["flag:1,2;3", "flag:1,2;4", "grass:2,5"] {
            let r = TowerRing::new(&s.parse().unwrap());
            let dim = r.shape().dim();
            assert_eq!(dim, r.dim() - 2 * r.shape().num_positive_roots());
            let nonzero_degrees: Vec<usize> = (0..=r.dim())
                .filter(|&d| symmetric_spanning_set(&r, d).iter().any(|c| !martin_integrate(c).unwrap().is_zero()))
                .collect();
            assert_eq!(nonzero_degrees, vec![dim], "{s}");
        }
    }

    #[test]
    fn lagrangian_integrals() {
        let r = TowerRing::new(&FlagShape::lagrangian(2).unwrap());
        let s1 = r.reduce(&Poly::linear(&[1, 1], 0));
        assert_eq!(martin_integrate(&s1.pow(3)).unwrap(), rat(2));
        assert_eq!(martin_integrate(&s1.pow(2)).unwrap(), rat(0));
        // LG(1,2) = P^1
        let p1 = TowerRing::new(&FlagShape::lagrangian(1).unwrap());
        assert_eq!(martin_integrate(&p1.var(0)).unwrap(), rat(1));
    }
}
