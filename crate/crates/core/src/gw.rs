//! One-point descendant invariants read off from J-function coefficients.

use num_traits::Zero;

use crate::algebra::{HLaurent, Rational};
use crate::error::{Error, Result};
use crate::integrate::{martin_integrate, symmetric_spanning_set};
use crate::jfun::{j_function, quotient_for, DegreeVector, Method};
use crate::ring::{CohClass, FlagShape, TowerRing};

/// `<tau_a(gamma)>_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantRecord {
    pub space: FlagShape,
    pub degree: DegreeVector,
    pub insertion_class: CohClass,
    /// Descendant exponent. At `d = 0` the pairing `int gamma` sits at `a = -2`.
    pub a: i64,
    pub value: Rational,
}

pub fn first_chern_degree(shape: &FlagShape, d: &DegreeVector) -> Result<i64> {
    quotient_for(shape).first_chern_degree(d)
}

/// Records for every `hbar` exponent of `J_d`, computed from `j`.
pub fn invariants_from_j(
    shape: &FlagShape,
    d: &DegreeVector,
    j: &HLaurent,
    gamma: &CohClass,
) -> Result<Vec<InvariantRecord>> {
    let gamma_deg = gamma.degree().map_err(|_| Error::Inhomogeneous)?;
    let ring = gamma.ring();
    let c1 = first_chern_degree(shape, d)?;
    let mut out = Vec::new();
    for (e, coeff) in j.terms().rev() {
        let a = -e - 2;
        let value = martin_integrate(&(&ring.reduce(coeff) * gamma))?;
        if !value.is_zero() {
            if a < 0 && !d.is_zero() {
                return Err(Error::InvariantViolation(format!("nonzero record at a = {a}")));
            }
            let expected = c1 + shape.dim() as i64 - 2 - gamma_deg.map_or(0, i64::from);
            if a != expected {
                return Err(Error::InvariantViolation(format!(
                    "nonzero record at a = {a}, dimension constraint gives {expected}"
                )));
            }
        }
        out.push(InvariantRecord { space: shape.clone(), degree: d.clone(), insertion_class: gamma.clone(), a, value });
    }
    Ok(out)
}

pub fn descendant_invariants(shape: &FlagShape, d: &DegreeVector, gamma: &CohClass) -> Result<Vec<InvariantRecord>> {
    let j = j_function(shape, d, Method::Auto)?;
    invariants_from_j(shape, d, &j, gamma)
}

/// A Weyl-invariant lift of the point class.
pub fn point_class(ring: &TowerRing) -> Result<CohClass> {
    for c in symmetric_spanning_set(ring, ring.shape().dim()) {
        let v = martin_integrate(&c)?;
        if !v.is_zero() {
            return Ok(c.scale(&(Rational::from_integer(1.into()) / v)));
        }
    }
    Err(Error::InvariantViolation("no class of top degree integrates to a nonzero value".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, rat_frac, Poly};

    fn shape(s: &str) -> FlagShape {
        s.parse().unwrap()
    }

    fn nonzero(records: &[InvariantRecord]) -> Vec<(i64, Rational)> {
        records.iter().filter(|r| !r.value.is_zero()).map(|r| (r.a, r.value.clone())).collect()
    }

    #[test]
    fn first_chern_degrees() {
        assert_eq!(first_chern_degree(&shape("grass:1,3"), &DegreeVector(vec![1])).unwrap(), 3);
        assert_eq!(first_chern_degree(&shape("grass:2,4"), &DegreeVector(vec![1])).unwrap(), 4);
        assert_eq!(first_chern_degree(&shape("flag:1,2;3"), &DegreeVector(vec![1, 0])).unwrap(), 2);
        assert_eq!(first_chern_degree(&shape("flag:1,2;3"), &DegreeVector(vec![1, 1])).unwrap(), 4);
        assert_eq!(first_chern_degree(&shape("lagrangian:3"), &DegreeVector(vec![2])).unwrap(), 8);
        for n in 2..6 {
            let p = FlagShape::projective(n).unwrap();
            assert_eq!(first_chern_degree(&p, &DegreeVector(vec![2])).unwrap(), 2 * n as i64);
        }
    }

    #[test]
    fn projective_plane() {
        let p2 = shape("grass:1,3");
        let ring = TowerRing::new(&p2);
        let pt = ring.reduce(&Poly::var(1, 0).pow(2));
        assert_eq!(point_class(&ring).unwrap(), pt);
        let r1 = descendant_invariants(&p2, &DegreeVector(vec![1]), &pt).unwrap();
        assert_eq!(nonzero(&r1), vec![(1, rat(1))]);
        let r2 = descendant_invariants(&p2, &DegreeVector(vec![2]), &pt).unwrap();
        assert_eq!(nonzero(&r2), vec![(4, rat_frac(1, 8))]);
    }

    #[test]
    fn projective_line() {
        let p1 = shape("grass:1,2");
        let ring = TowerRing::new(&p1);
        let r = descendant_invariants(&p1, &DegreeVector(vec![1]), &ring.var(0)).unwrap();
        assert_eq!(nonzero(&r), vec![(0, rat(1))]);
    }

    #[test]
    fn projective_family() {
        for n in 2..=4usize {
            let sh = FlagShape::projective(n).unwrap();
            let ring = TowerRing::new(&sh);
            let pt = point_class(&ring).unwrap();
            for d in 1..=3i64 {
                let r = descendant_invariants(&sh, &DegreeVector(vec![d]), &pt).unwrap();
                let fact: i64 = (1..=d).product();
                let expect = rat(1) / rat(fact.pow(n as u32));
                assert_eq!(nonzero(&r), vec![(n as i64 * d - 2, expect)], "n={n} d={d}");
            }
        }
    }

    #[test]
    fn fiber_lines_on_small_flag() {
        let f = shape("flag:1,2;3");
        let ring = TowerRing::new(&f);
        let pt = point_class(&ring).unwrap();
        // H_{1,1} H_{2,1} H_{2,2} is a lift of the point class
        let m = ring.reduce(&Poly::monomial(crate::algebra::Monomial(vec![1, 1, 1]), rat(1)));
        assert_eq!(martin_integrate(&m).unwrap(), rat(1));
        for d in [[1, 0], [0, 1]] {
            let r = descendant_invariants(&f, &DegreeVector(d.to_vec()), &pt).unwrap();
            assert_eq!(nonzero(&r), vec![(0, rat(1))], "{d:?}");
        }
    }

    #[test]
    fn degree_zero_gives_the_integral() {
        let g = shape("grass:2,4");
        let ring = TowerRing::new(&g);
        let s1 = ring.reduce(&Poly::linear(&[1, 1], 0));
        let top = s1.pow(4);
        let r = descendant_invariants(&g, &DegreeVector(vec![0]), &top).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!((r[0].a, r[0].value.clone()), (-2, martin_integrate(&top).unwrap()));
        let r = descendant_invariants(&g, &DegreeVector(vec![0]), &s1).unwrap();
        assert!(nonzero(&r).is_empty());
    }

    #[test]
    fn inhomogeneous_insertion_is_rejected() {
        let p2 = shape("grass:1,3");
        let ring = TowerRing::new(&p2);
        let g = ring.reduce(&Poly::linear(&[1], 1));
        assert_eq!(descendant_invariants(&p2, &DegreeVector(vec![1]), &g), Err(Error::Inhomogeneous));
    }
}
