use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use itertools::Itertools;
use num_traits::One;

use super::{FlagShape, LinearForm};
use crate::algebra::{laurent_unit_inverse, HLaurent, Monomial, Poly, Rational};
use crate::error::{Error, Result};

/// Normal-form rewriting data for one level: entry `e` expresses `x^e` as
/// `sum x^a * coeff_a` with `a < s_{i+1}` and coefficients in the next level's
/// variables.
type PowerTable = Vec<Vec<(u32, Poly)>>;

struct TowerInner {
    shape: FlagShape,
    nvars: usize,
    dim: usize,
    tables: Vec<PowerTable>,
    top: Monomial,
}

/// Cohomology ring of the tower of product-of-projective-space bundles.
///
/// Variables are `H_{i,j}`; the relation of `H_{i,j}` is
/// `prod_{j'} (H_{i,j} - H_{i+1,j'}) = 0` with `H_{l+1,*} = 0`. Cheap to clone.
#[derive(Clone)]
pub struct TowerRing {
    inner: Arc<TowerInner>,
}

impl fmt::Debug for TowerRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TowerRing({})", self.inner.shape)
    }
}

impl PartialEq for TowerRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.shape == other.inner.shape
    }
}

impl Eq for TowerRing {}

fn elementary_symmetric(nvars: usize, vars: &[usize]) -> Vec<Poly> {
    // coefficients of prod (1 + y t)
    let mut e = vec![Poly::one(nvars)];
    for &v in vars {
        let y = Poly::var(nvars, v);
        let mut next = e.clone();
        next.push(Poly::zero(nvars));
        for k in 1..next.len() {
            next[k] = &next[k] + &(&e[k - 1] * &y);
        }
        e = next;
    }
    e
}

fn truncate(mut p: Poly, dim: usize) -> Poly {
    p.retain(|m| m.degree() as usize <= dim);
    p
}

fn power_table(shape: &FlagShape, level: usize, nvars: usize, dim: usize) -> PowerTable {
    let r = shape.level_size(level + 1) as u32;
    let next_vars: Vec<usize> =
        if level + 1 < shape.levels() { shape.level_vars(level + 1).collect() } else { Vec::new() };
    let e = elementary_symmetric(nvars, &next_vars);
    // x^r = sum_{k=1}^{r} (-1)^{k+1} e_k x^{r-k}
    let mut top: Vec<(u32, Poly)> = Vec::new();
    for k in 1..=r as usize {
        if k < e.len() && !e[k].is_zero() {
            let c = if k % 2 == 1 { e[k].clone() } else { -&e[k] };
            top.push((r - k as u32, c));
        }
    }
    let mut table: PowerTable = Vec::with_capacity(dim + 1);
    for exp in 0..=dim as u32 {
        if exp < r {
            table.push(vec![(exp, Poly::one(nvars))]);
        } else if exp == r {
            table.push(top.clone());
        } else {
            let prev = &table[exp as usize - 1];
            let mut acc: Vec<Poly> = vec![Poly::zero(nvars); r as usize];
            for (a, c) in prev {
                if a + 1 < r {
                    acc[(a + 1) as usize] = &acc[(a + 1) as usize] + c;
                } else {
                    for (b, t) in &top {
                        acc[*b as usize] = &acc[*b as usize] + &(c * t);
                    }
                }
            }
            table.push(
                acc.into_iter()
                    .enumerate()
                    .map(|(a, c)| (a as u32, truncate(c, dim)))
                    .filter(|(_, c)| !c.is_zero())
                    .collect(),
            );
        }
    }
    table
}

impl TowerRing {
    pub fn new(shape: &FlagShape) -> Self {
        let nvars = shape.num_vars();
        let dim = shape.tower_dim();
        let tables = (0..shape.levels()).map(|l| power_table(shape, l, nvars, dim)).collect();
        let mut top = vec![0; nvars];
        for level in 0..shape.levels() {
            for v in shape.level_vars(level) {
                top[v] = shape.level_size(level + 1) as u32 - 1;
            }
        }
        TowerRing { inner: Arc::new(TowerInner { shape: shape.clone(), nvars, dim, tables, top: Monomial(top) }) }
    }

    pub fn shape(&self) -> &FlagShape {
        &self.inner.shape
    }

    pub fn nvars(&self) -> usize {
        self.inner.nvars
    }

    /// Complex dimension of the tower; every class of higher degree is zero.
    pub fn dim(&self) -> usize {
        self.inner.dim
    }

    /// Monomial whose coefficient is the integral over the tower.
    pub fn top_monomial(&self) -> &Monomial {
        &self.inner.top
    }

    /// Exponent bound `s_{i+1}` for a variable.
    pub fn exponent_bound(&self, var: usize) -> u32 {
        let shape = self.shape();
        shape.level_size(shape.level_of(var) + 1) as u32
    }

    pub fn is_normal(&self, p: &Poly) -> bool {
        p.terms().all(|(m, _)| m.0.iter().enumerate().all(|(v, &e)| e < self.exponent_bound(v)))
    }

    /// Relation polynomial of `H_{i,j}` (0-based level, variable index).
    pub fn relation(&self, var: usize) -> Poly {
        let shape = self.shape();
        let level = shape.level_of(var);
        let x = Poly::var(self.nvars(), var);
        let size = shape.level_size(level + 1);
        (0..size).fold(Poly::one(self.nvars()), |acc, jp| {
            let y = if level + 1 < shape.levels() {
                Poly::var(self.nvars(), shape.level_vars(level + 1).start + jp)
            } else {
                Poly::zero(self.nvars())
            };
            &acc * &(&x - &y)
        })
    }

    /// Normal form: every exponent of `H_{i,j}` below `s_{i+1}`.
    ///
    /// Levels are eliminated in increasing order; the relation of a level-`i`
    /// variable only involves level `i + 1`, so one pass per level suffices.
    pub fn reduce_poly(&self, p: &Poly) -> Poly {
        assert_eq!(p.nvars(), self.nvars(), "reduce: arity mismatch");
        let dim = self.dim();
        let shape = self.shape();
        let mut cur = truncate(p.clone(), dim);
        for level in 0..shape.levels() {
            let r = shape.level_size(level + 1) as u32;
            let vars = shape.level_vars(level);
            let overflow = |m: &Monomial| vars.clone().any(|v| m.0[v] >= r);
            if !cur.terms().any(|(m, _)| overflow(m)) {
                continue;
            }
            let table = &self.inner.tables[level];
            let mut next = Poly::zero(self.nvars());
            for (m, c) in cur.into_terms() {
                if !overflow(&m) {
                    next.add_term(m, c);
                    continue;
                }
                let mut base = m.clone();
                let mut partial = Vec::new();
                for v in vars.clone() {
                    if m.0[v] >= r {
                        base.0[v] = 0;
                        partial.push(v);
                    }
                }
                let mut acc = Poly::monomial(base, c);
                for v in partial {
                    let mut sum = Poly::zero(self.nvars());
                    for (a, cp) in &table[m.0[v] as usize] {
                        let mut xv = Monomial::one(self.nvars());
                        xv.0[v] = *a;
                        sum = &sum + &(&Poly::monomial(xv, Rational::one()) * cp);
                    }
                    acc = truncate(&acc * &sum, dim);
                    if acc.is_zero() {
                        break;
                    }
                }
                next = &next + &acc;
            }
            cur = next;
        }
        cur
    }

    pub fn reduce(&self, p: &Poly) -> CohClass {
        CohClass { ring: self.clone(), value: self.reduce_poly(p) }
    }

    pub fn class(&self, p: &Poly) -> CohClass {
        self.reduce(p)
    }

    pub fn one(&self) -> CohClass {
        self.reduce(&Poly::one(self.nvars()))
    }

    pub fn var(&self, idx: usize) -> CohClass {
        self.reduce(&Poly::var(self.nvars(), idx))
    }

    pub fn zero(&self) -> CohClass {
        CohClass { ring: self.clone(), value: Poly::zero(self.nvars()) }
    }

    /// Coefficient of the top normal-form monomial.
    pub fn integrate(&self, c: &CohClass) -> Rational {
        c.value.coeff(self.top_monomial())
    }

    /// All normal-form monomials of a given total degree.
    pub fn normal_monomials(&self, degree: usize) -> Vec<Monomial> {
        let bounds: Vec<u32> = (0..self.nvars()).map(|v| self.exponent_bound(v)).collect();
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.nvars()];
        fn rec(v: usize, left: u32, bounds: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if v == bounds.len() {
                if left == 0 {
                    out.push(Monomial(cur.clone()));
                }
                return;
            }
            for e in 0..bounds[v].min(left + 1) {
                cur[v] = e;
                rec(v + 1, left - e, bounds, cur, out);
            }
            cur[v] = 0;
        }
        rec(0, degree as u32, &bounds, &mut cur, &mut out);
        out
    }

    /// Number of normal-form monomials (rank of the cohomology of the tower).
    pub fn basis_size(&self) -> usize {
        (0..=self.dim()).map(|d| self.normal_monomials(d).len()).sum()
    }

    /// Product of Laurent polynomials followed by reduction of every coefficient.
    pub fn laurent_mul(&self, a: &HLaurent, b: &HLaurent) -> HLaurent {
        let mut out = HLaurent::zero(self.nvars());
        for (ea, pa) in a.terms() {
            for (eb, pb) in b.terms() {
                out.add_term(ea + eb, self.reduce_poly(&(pa * pb)));
            }
        }
        out
    }

    pub fn laurent_reduce(&self, a: &HLaurent) -> HLaurent {
        a.map_coeffs(|p| self.reduce_poly(p))
    }

    /// `(c + k*hbar)^{-1}` in this ring, with nilpotency bound `dim + 1`.
    pub fn unit_inverse(&self, c: &LinearForm, k: i64) -> Result<HLaurent> {
        let inv = laurent_unit_inverse(&c.to_poly(self.nvars()), k, self.dim() as u32 + 1)?;
        Ok(self.laurent_reduce(&inv))
    }

    pub fn weyl_generators(&self) -> Vec<WeylElement> {
        let shape = self.shape();
        let mut gens = Vec::new();
        for level in 0..shape.levels() {
            for j in 0..shape.dims()[level].saturating_sub(1) {
                let mut e = WeylElement::identity(shape);
                e.0[level].swap(j, j + 1);
                gens.push(e);
            }
        }
        gens
    }

    /// Every element of `prod_i S_{s_i}`.
    pub fn weyl_group(&self) -> Vec<WeylElement> {
        self.shape()
            .dims()
            .iter()
            .map(|&s| (0..s).permutations(s).collect::<Vec<_>>())
            .multi_cartesian_product()
            .map(WeylElement)
            .collect()
    }

    pub fn weyl_apply(&self, w: &WeylElement, c: &CohClass) -> Result<CohClass> {
        let perm = w.var_permutation(self.shape())?;
        Ok(self.reduce(&c.value.permute_vars(&perm)))
    }

    pub fn is_weyl_invariant(&self, c: &CohClass) -> bool {
        self.weyl_generators().iter().all(|g| self.weyl_apply(g, c).map(|x| x.value == c.value).unwrap_or(false))
    }

    /// `sum_{w in W} w(p)`.
    pub fn symmetrize(&self, p: &Poly) -> CohClass {
        let mut acc = Poly::zero(self.nvars());
        for w in self.weyl_group() {
            let perm = w.var_permutation(self.shape()).expect("group element");
            acc = &acc + &p.permute_vars(&perm);
        }
        self.reduce(&acc)
    }

    pub fn roots(&self) -> RootData {
        RootData::new(self.shape())
    }
}

/// Per-level permutations of the Chern roots (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement(pub Vec<Vec<usize>>);

impl WeylElement {
    pub fn identity(shape: &FlagShape) -> Self {
        WeylElement(shape.dims().iter().map(|&s| (0..s).collect()).collect())
    }

    /// Flattened permutation of all tower variables.
    pub fn var_permutation(&self, shape: &FlagShape) -> Result<Vec<usize>> {
        if self.0.len() != shape.levels() {
            return Err(Error::MalformedPermutation(format!(
                "expected {} levels, got {}",
                shape.levels(),
                self.0.len()
            )));
        }
        let mut out = Vec::with_capacity(shape.num_vars());
        for (level, p) in self.0.iter().enumerate() {
            let s = shape.dims()[level];
            let mut seen = vec![false; s];
            if p.len() != s {
                return Err(Error::MalformedPermutation(format!("level {} needs {s} entries", level + 1)));
            }
            for &x in p {
                if x >= s || seen[x] {
                    return Err(Error::MalformedPermutation(format!("{p:?} is not a permutation")));
                }
                seen[x] = true;
            }
            let start = shape.level_vars(level).start;
            out.extend(p.iter().map(|x| start + x));
        }
        Ok(out)
    }

    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        // (self ∘ other)(j) = self(other(j))
        WeylElement(self.0.iter().zip(&other.0).map(|(a, b)| b.iter().map(|&x| a[x]).collect()).collect())
    }
}

/// Roots `H_{i,j} - H_{i,j'}` of `prod GL(s_i)`.
#[derive(Clone, Debug)]
pub struct RootData {
    pub positive: Vec<LinearForm>,
    pub weyl_order: u64,
}

impl RootData {
    pub fn new(shape: &FlagShape) -> Self {
        let n = shape.num_vars();
        let mut positive = Vec::new();
        for level in 0..shape.levels() {
            let vars = shape.level_vars(level);
            for (a, b) in vars.tuple_combinations() {
                positive.push(LinearForm::difference(n, a, b));
            }
        }
        RootData { positive, weyl_order: shape.weyl_order() }
    }

    pub fn negative(&self) -> Vec<LinearForm> {
        self.positive.iter().map(LinearForm::neg).collect()
    }

    /// Positive roots followed by their negatives.
    pub fn all(&self) -> Vec<LinearForm> {
        self.positive.iter().cloned().chain(self.negative()).collect()
    }

    /// `Delta^+ = prod_{alpha > 0} c_1(L_alpha)` as a free polynomial.
    pub fn delta_plus(&self, nvars: usize) -> Poly {
        self.positive.iter().fold(Poly::one(nvars), |acc, r| &acc * &r.to_poly(nvars))
    }

    pub fn delta_minus(&self, nvars: usize) -> Poly {
        self.negative().iter().fold(Poly::one(nvars), |acc, r| &acc * &r.to_poly(nvars))
    }
}

/// A class on the tower, stored in normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohClass {
    ring: TowerRing,
    value: Poly,
}

impl CohClass {
    pub fn ring(&self) -> &TowerRing {
        &self.ring
    }

    pub fn value(&self) -> &Poly {
        &self.value
    }

    pub fn into_value(self) -> Poly {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// Homogeneous degree; `Ok(None)` for the zero class.
    pub fn degree(&self) -> Result<Option<u32>> {
        self.value.homogeneous_degree()
    }

    pub fn scale(&self, c: &Rational) -> CohClass {
        CohClass { ring: self.ring.clone(), value: self.value.scale(c) }
    }

    pub fn pow(&self, e: u32) -> CohClass {
        (0..e).fold(self.ring.one(), |acc, _| &acc * self)
    }
}

impl Add for &CohClass {
    type Output = CohClass;
    fn add(self, rhs: &CohClass) -> CohClass {
        CohClass { ring: self.ring.clone(), value: &self.value + &rhs.value }
    }
}

impl Sub for &CohClass {
    type Output = CohClass;
    fn sub(self, rhs: &CohClass) -> CohClass {
        CohClass { ring: self.ring.clone(), value: &self.value - &rhs.value }
    }
}

impl Neg for &CohClass {
    type Output = CohClass;
    fn neg(self) -> CohClass {
        CohClass { ring: self.ring.clone(), value: -&self.value }
    }
}

impl Mul for &CohClass {
    type Output = CohClass;
    fn mul(self, rhs: &CohClass) -> CohClass {
        self.ring.reduce(&(&self.value * &rhs.value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ring(s: &str) -> TowerRing {
        TowerRing::new(&s.parse().unwrap())
    }

    fn mono(e: &[u32]) -> Poly {
        Poly::monomial(Monomial(e.to_vec()), rat(1))
    }

    #[test]
    fn projective_line() {
        let r = TowerRing::new(&FlagShape::projective(2).unwrap());
        assert_eq!(r.nvars(), 1);
        assert_eq!(r.relation(0), mono(&[2]));
        assert!(r.reduce(&mono(&[3])).is_zero());
        assert!(r.reduce(&mono(&[2])).is_zero());
        assert_eq!(r.basis_size(), 2);
    }

    #[test]
    fn grassmannian_tower_relations() {
        let r = ring("grass:2,4");
        assert_eq!(r.relation(0), mono(&[4, 0]));
        assert_eq!(r.relation(1), mono(&[0, 4]));
        assert_eq!(r.basis_size(), 16);
        assert_eq!(r.dim(), 6);
    }

    #[test]
    fn two_step_flag_relation() {
        let r = ring("flag:1,2;3");
        let expected = &(&(&mono(&[2, 0, 0]) - &mono(&[1, 1, 0])) - &mono(&[1, 0, 1])) + &mono(&[0, 1, 1]);
        assert_eq!(r.relation(0), expected);
        assert_eq!(r.relation(1), mono(&[0, 3, 0]));
        let reduced = r.reduce(&mono(&[2, 0, 0]));
        let expect = &(&mono(&[1, 1, 0]) + &mono(&[1, 0, 1])) - &mono(&[0, 1, 1]);
        assert_eq!(reduced.value(), &expect);
        assert_eq!(r.basis_size(), 2 * 3 * 3);
    }

    #[test]
    fn power_of_hyperplane_sum_is_normal() {
        let r = ring("grass:2,4");
        let s1 = Poly::linear(&[1, 1], 0);
        let c = r.reduce(&s1.pow(5));
        assert!(r.is_normal(c.value()));
        // brute force: expand and drop exponents >= 4
        let mut brute = s1.pow(5);
        brute.retain(|m| m.0.iter().all(|&e| e < 4));
        assert_eq!(c.value(), &brute);
        assert_eq!(c.value().coeff(&Monomial(vec![3, 2])), rat(10));
    }

    #[test]
    fn every_relation_reduces_to_zero() {
        for s in ["flag:1,2;3", "flag:1,2;4", "flag:1,3;5", "grass:2,5", "flag:2,3;5"] {
            let r = ring(s);
            for v in 0..r.nvars() {
                assert!(r.reduce(&r.relation(v)).is_zero(), "{s} var {v}");
                let y = Poly::var(r.nvars(), (v + 1) % r.nvars());
                assert!(r.reduce(&(&r.relation(v) * &y)).is_zero());
            }
        }
    }

    /// Independent rewriting: pick a random overflowing variable each step and
    /// subtract a multiple of its relation.
    fn random_order_reduce(r: &TowerRing, p: &Poly, rng: &mut ChaCha8Rng) -> Poly {
        let mut cur = p.clone();
        loop {
            let candidates: Vec<(Monomial, Rational, usize)> = cur
                .terms()
                .flat_map(|(m, c)| {
                    (0..r.nvars()).filter(|&v| m.0[v] >= r.exponent_bound(v)).map(move |v| (m.clone(), c.clone(), v))
                })
                .collect();
            if candidates.is_empty() {
                let mut out = cur;
                out.retain(|m| m.degree() as usize <= r.dim());
                return out;
            }
            let (m, c, v) = candidates[rng.gen_range(0..candidates.len())].clone();
            let mut q = m.clone();
            q.0[v] -= r.exponent_bound(v);
            let rel = r.relation(v);
            cur = &cur - &(&Poly::monomial(q, c) * &rel);
        }
    }

    #[test]
    fn confluence_under_random_rewriting_order() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for s in ["flag:1,2;3", "grass:2,5"] {
            let r = ring(s);
            for _ in 0..25 {
                let mut p = Poly::zero(r.nvars());
                for _ in 0..4 {
                    let e: Vec<u32> = (0..r.nvars()).map(|_| rng.gen_range(0..5)).collect();
                    p.add_term(Monomial(e), rat(rng.gen_range(-3..4)));
                }
                let a = r.reduce_poly(&p);
                let b = random_order_reduce(&r, &p, &mut rng);
                let b = r.reduce_poly(&b);
                assert_eq!(a, b, "{s}: {p}");
            }
        }
    }

    #[test]
    fn reduction_is_idempotent_and_multiplicative() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let r = ring("flag:1,2;4");
        for _ in 0..20 {
            let rand_poly = |rng: &mut ChaCha8Rng| {
                let mut p = Poly::zero(r.nvars());
                for _ in 0..3 {
                    let e: Vec<u32> = (0..r.nvars()).map(|_| rng.gen_range(0..4)).collect();
                    p.add_term(Monomial(e), rat(rng.gen_range(-3..4)));
                }
                p
            };
            let p = rand_poly(&mut rng);
            let q = rand_poly(&mut rng);
            let rp = r.reduce_poly(&p);
            assert_eq!(r.reduce_poly(&rp), rp);
            assert_eq!(r.reduce_poly(&(&p * &q)), r.reduce_poly(&(&rp * &r.reduce_poly(&q))));
        }
    }

    #[test]
    fn weyl_action() {
        let r = ring("grass:2,4");
        let roots = r.roots();
        let dp = r.reduce(&roots.delta_plus(2));
        let swap = WeylElement(vec![vec![1, 0]]);
        assert_eq!(r.weyl_apply(&swap, &dp).unwrap(), -&dp);
        let s1 = r.reduce(&Poly::linear(&[1, 1], 0));
        assert_eq!(r.weyl_apply(&swap, &s1).unwrap(), s1);
        let id = WeylElement::identity(r.shape());
        let c = r.reduce(&(&mono(&[2, 1]) + &mono(&[0, 3])));
        assert_eq!(r.weyl_apply(&id, &c).unwrap(), c);
        assert!(r.weyl_apply(&WeylElement(vec![vec![0, 0]]), &c).is_err());
        assert!(r.weyl_apply(&WeylElement(vec![vec![0, 1], vec![0]]), &c).is_err());
    }

    #[test]
    fn weyl_group_action_is_compatible_with_composition() {
        let r = ring("flag:2,3;5");
        let group = r.weyl_group();
        assert_eq!(group.len(), 12);
        let c = r.reduce(&(&mono(&[2, 0, 1, 0, 3]) + &mono(&[1, 1, 0, 2, 0])));
        for a in group.iter().take(5) {
            for b in group.iter().skip(3).take(5) {
                let ab = a.compose(b);
                let lhs = r.weyl_apply(&ab, &c).unwrap();
                let rhs = r.weyl_apply(a, &r.weyl_apply(b, &c).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn delta_anti_invariance_and_product() {
        for s in ["grass:3,5", "flag:1,3;4", "flag:2,3;5"] {
            let r = ring(s);
            let roots = r.roots();
            let n = r.nvars();
            let dp = r.reduce(&roots.delta_plus(n));
            let dm = r.reduce(&roots.delta_minus(n));
            let sign = if roots.positive.len().is_multiple_of(2) { rat(1) } else { rat(-1) };
            assert_eq!(&dp * &dm, (&dp * &dp).scale(&sign));
            for g in r.weyl_generators() {
                assert_eq!(r.weyl_apply(&g, &dp).unwrap(), -&dp);
            }
            let sym =
                r.symmetrize(&mono(&vec![1; n].iter().enumerate().map(|(i, _)| (i % 2) as u32).collect::<Vec<_>>()));
            assert!(r.is_weyl_invariant(&sym));
        }
    }

    #[test]
    fn top_monomial_integrates_to_one() {
        let r = ring("grass:2,4");
        assert_eq!(r.integrate(&r.reduce(&mono(&[3, 3]))), rat(1));
        assert_eq!(r.integrate(&r.reduce(&mono(&[3, 2]))), rat(0));
        let f = ring("flag:1,2;3");
        assert_eq!(f.integrate(&f.reduce(&mono(&[1, 2, 2]))), rat(1));
    }
}
