//! Built-in verification suites, one per acceptance criterion.

use flagj_core::algebra::{rat, rational_to_string, HLaurent, Poly, Rational};
use flagj_core::gw::{descendant_invariants, point_class};
use flagj_core::integrate::martin_integrate;
use flagj_core::jfun::{
    abelianized_i, check_homogeneous, flag_j, grassmannian_j, j_function, lagrangian_j, laurent_flag_equal,
    product_grass_twisted_i, quotient_for, window_stable, DegreeVector, Method, TwistSpec,
};
use flagj_core::ring::{FlagShape, LinearForm, TowerRing};
use flagj_core::schubert::{oracle_integrate, partitions, symmetric_combination};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cache::{Cache, CacheEntry, CacheKey};

pub const SUITES: [&str; 7] =
    ["projective", "martin-oracle", "cross-paths", "fano", "flag-descendants", "lagrangian-quadric", "structural"];

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub criterion: usize,
    pub pass: bool,
    pub checks: Vec<Check>,
}

fn check(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Check {
    Check { name: name.into(), pass, detail: detail.into() }
}

fn shape(s: &str) -> FlagShape {
    s.parse().expect("built-in shape")
}

fn degrees_up_to(levels: usize, total: i64) -> Vec<DegreeVector> {
    let mut out = vec![vec![]];
    for _ in 0..levels {
        out = out.into_iter().flat_map(|v: Vec<i64>| (0..=total).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out.into_iter().filter(|v| v.iter().sum::<i64>() <= total).map(DegreeVector).collect()
}

fn nonzero_records(
    s: &FlagShape,
    d: &DegreeVector,
    gamma: &flagj_core::ring::CohClass,
) -> Result<Vec<(i64, Rational)>, String> {
    let r = descendant_invariants(s, d, gamma).map_err(|e| e.to_string())?;
    Ok(r.into_iter().filter(|r| !r.value.is_zero()).map(|r| (r.a, r.value)).collect())
}

fn show(records: &[(i64, Rational)]) -> String {
    records.iter().map(|(a, v)| format!("a={a}: {}", rational_to_string(v))).collect::<Vec<_>>().join(", ")
}

pub fn projective() -> Vec<Check> {
    let mut out = Vec::new();
    for n in 2..=5usize {
        let s = FlagShape::projective(n).expect("valid");
        let ring = TowerRing::new(&s);
        let pt = point_class(&ring).expect("point class");
        for d in 1..=3i64 {
            let fact: i64 = (1..=d).product();
            let want = vec![(n as i64 * d - 2, rat(1) / rat(fact.pow(n as u32)))];
            let name = format!("P^{} d={d}", n - 1);
            out.push(match nonzero_records(&s, &DegreeVector(vec![d]), &pt) {
                Ok(got) => check(name, got == want, show(&got)),
                Err(e) => check(name, false, e),
            });
        }
    }
    out
}

pub fn martin_oracle() -> Vec<Check> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for (s, n) in [(2usize, 4usize), (2, 5), (3, 6)] {
        let ring = TowerRing::new(&FlagShape::grassmannian(s, n).expect("valid"));
        let top = (s * (n - s)) as u32;
        let count = partitions(top, s).len();
        let mut agree = 0;
        let mut first_bad = String::new();
        for _ in 0..200 {
            let coeffs: Vec<i64> = (0..count).map(|_| rng.gen_range(-9..=9)).collect();
            let p = symmetric_combination(s, top, &coeffs);
            let lhs = martin_integrate(&ring.reduce(&p));
            let rhs = oracle_integrate(s, n, &p);
            match (lhs, rhs) {
                (Ok(a), Ok(b)) if a == b => agree += 1,
                (a, b) if first_bad.is_empty() => first_bad = format!("{p}: {a:?} vs {b:?}"),
                _ => {}
            }
        }
        out.push(check(format!("G({s},{n}) random symmetric"), agree == 200, format!("{agree}/200 agree {first_bad}")));
    }
    let ring = TowerRing::new(&FlagShape::grassmannian(2, 4).expect("valid"));
    let s1 = Poly::linear(&[1, 1], 0).pow(4);
    let m = martin_integrate(&ring.reduce(&s1)).ok();
    let o = oracle_integrate(2, 4, &s1).ok();
    out.push(check("G(2,4) sigma1^4 = 2", m == Some(rat(2)) && o == Some(rat(2)), format!("{m:?} {o:?}")));
    out
}

pub fn cross_paths() -> Vec<Check> {
    let mut out = Vec::new();
    for sp in ["flag:1,2;3", "flag:1,2;4"] {
        let s = shape(sp);
        let ring = TowerRing::new(&s);
        for d in degrees_up_to(2, 2) {
            let name = format!("{sp} d=({d}) flag formula = product");
            let res = flag_j(&s, &d).and_then(|a| {
                let b = product_grass_twisted_i(&s, &d)?;
                laurent_flag_equal(&ring, &a, &b)
            });
            out.push(match res {
                Ok(ok) => check(name, ok, ""),
                Err(e) => check(name, false, e.to_string()),
            });
        }
    }
    for (sz, n) in [(2usize, 4usize), (2, 5)] {
        let s = FlagShape::grassmannian(sz, n).expect("valid");
        let ring = TowerRing::new(&s);
        for d in 0..=3i64 {
            let name = format!("G({sz},{n}) d={d} flag formula = grassmannian formula");
            let res = flag_j(&s, &DegreeVector(vec![d])).and_then(|a| {
                let b = grassmannian_j(sz, n, d)?;
                laurent_flag_equal(&ring, &a, &b)
            });
            out.push(match res {
                Ok(ok) => check(name, ok, ""),
                Err(e) => check(name, false, e.to_string()),
            });
        }
    }
    out
}

struct Case {
    label: String,
    degree: DegreeVector,
    j: Result<HLaurent, String>,
    c1: i64,
}

/// Every J-function the other criteria compute, with `int_d c_1`.
fn computed_cases() -> Vec<Case> {
    let mut cases = Vec::new();
    let mut push = |label: String, s: FlagShape, d: DegreeVector| {
        let j = j_function(&s, &d, Method::Auto).map_err(|e| e.to_string());
        let c1 = quotient_for(&s).first_chern_degree(&d).unwrap_or(i64::MIN);
        cases.push(Case { label, degree: d, j, c1 });
    };
    for n in 2..=5usize {
        for d in 0..=3 {
            push(format!("P^{} d={d}", n - 1), FlagShape::projective(n).expect("valid"), DegreeVector(vec![d]));
        }
    }
    for sp in ["grass:2,4", "grass:2,5"] {
        for d in 0..=3 {
            push(format!("{sp} d={d}"), shape(sp), DegreeVector(vec![d]));
        }
    }
    for sp in ["flag:1,2;3", "flag:1,2;4"] {
        for d in degrees_up_to(2, 2) {
            push(format!("{sp} d=({d})"), shape(sp), d);
        }
    }
    for d in 0..=2 {
        push(format!("lagrangian:2 d={d}"), shape("lagrangian:2"), DegreeVector(vec![d]));
    }
    cases
}

fn quadric_i(d: i64) -> Result<HLaurent, String> {
    let p4 = FlagShape::projective(5).expect("valid");
    let twist = TwistSpec { twists: vec![LinearForm(vec![2])] };
    abelianized_i(&p4, &DegreeVector(vec![d]), &twist).map_err(|e| e.to_string())
}

fn fano_ok(j: &HLaurent, d: &DegreeVector) -> bool {
    if d.is_zero() {
        j.exponents() == vec![0] && j.coeff(0).is_constant() && j.coeff(0).constant_term() == rat(1)
    } else {
        !j.is_zero() && j.exponents().iter().all(|&e| e <= -2)
    }
}

pub fn fano() -> Vec<Check> {
    let mut out = Vec::new();
    for Case { label, degree: d, j, .. } in computed_cases() {
        out.push(match j {
            Ok(j) => check(label, fano_ok(&j, &d), format!("hbar exponents {:?}", j.exponents())),
            Err(e) => check(label, false, e),
        });
    }
    for d in 0..=2 {
        out.push(match quadric_i(d) {
            Ok(j) => check(
                format!("quadric threefold d={d}"),
                fano_ok(&j, &DegreeVector(vec![d])),
                format!("{:?}", j.exponents()),
            ),
            Err(e) => check(format!("quadric threefold d={d}"), false, e),
        });
    }
    out
}

pub fn flag_descendants() -> Vec<Check> {
    let s = shape("flag:1,2;3");
    let ring = TowerRing::new(&s);
    let pt = match point_class(&ring) {
        Ok(p) => p,
        Err(e) => return vec![check("point class", false, e.to_string())],
    };
    [[1, 0], [0, 1]]
        .iter()
        .map(|d| {
            let name = format!("Fl(1,2;3) <tau_0(pt)>_({},{})", d[0], d[1]);
            match nonzero_records(&s, &DegreeVector(d.to_vec()), &pt) {
                Ok(got) => check(name, got == vec![(0, rat(1))], show(&got)),
                Err(e) => check(name, false, e),
            }
        })
        .collect()
}

pub fn lagrangian_quadric() -> Vec<Check> {
    let lg = shape("lagrangian:2");
    let lg_ring = TowerRing::new(&lg);
    let p4_ring = TowerRing::new(&FlagShape::projective(5).expect("valid"));
    let (j_lg, j_q) = match (lagrangian_j(2, 1), quadric_i(1)) {
        (Ok(a), Ok(b)) => (a, b),
        (a, b) => return vec![check("LG(2,4) d=1", false, format!("{:?} {:?}", a.err(), b.err()))],
    };
    let s1 = lg_ring.reduce(&Poly::linear(&[1, 1], 0));
    let h = p4_ring.var(0);
    let mut exps = j_lg.exponents();
    exps.extend(j_q.exponents());
    exps.sort_unstable();
    exps.dedup();
    (0..=3u32)
        .map(|k| {
            let mut ok = true;
            let mut detail = Vec::new();
            for &e in exps.iter().rev() {
                let a = martin_integrate(&(&lg_ring.reduce(&j_lg.coeff(e)) * &s1.pow(k)));
                let b = martin_integrate(&(&(&p4_ring.reduce(&j_q.coeff(e)) * &h.pow(k)) * &h.scale(&rat(2))));
                match (a, b) {
                    (Ok(a), Ok(b)) => {
                        ok &= a == b;
                        if !a.is_zero() || !b.is_zero() {
                            detail.push(format!("hbar^{e}: {} vs {}", rational_to_string(&a), rational_to_string(&b)));
                        }
                    }
                    (a, b) => {
                        ok = false;
                        detail.push(format!("{a:?} {b:?}"));
                    }
                }
            }
            check(format!("int J_1 sigma1^{k}"), ok, detail.join("; "))
        })
        .collect()
}

fn cli_output(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = crate::run_with(std::iter::once("flagj").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8_lossy(&out).into_owned())
}

pub fn structural() -> Vec<Check> {
    let mut out = Vec::new();
    let cases = computed_cases();
    let mut homogeneous = Vec::new();
    let mut failures = Vec::new();
    for Case { label, j, c1, .. } in &cases {
        match j {
            Ok(j) => {
                if let Err(e) = check_homogeneous(j, -c1) {
                    homogeneous.push(format!("{label}: {e}"));
                }
            }
            Err(e) => failures.push(format!("{label}: {e}")),
        }
    }
    for d in 0..=2 {
        match quadric_i(d) {
            Ok(j) => {
                if let Err(e) = check_homogeneous(&j, -3 * d) {
                    homogeneous.push(format!("quadric d={d}: {e}"));
                }
            }
            Err(e) => failures.push(format!("quadric d={d}: {e}")),
        }
    }
    out.push(check(
        "homogeneity of every J_d",
        homogeneous.is_empty() && failures.is_empty(),
        format!("{} cases checked {}", cases.len() + 3, homogeneous.join("; ")),
    ));
    out.push(check("every Vandermonde division exact", failures.is_empty(), failures.join("; ")));

    let mut window = Vec::new();
    for sp in ["grass:2,4", "grass:2,5", "flag:1,2;3", "flag:1,2;4"] {
        let s = shape(sp);
        for d in degrees_up_to(s.levels(), 2) {
            match window_stable(&s, &d) {
                Ok(true) => {}
                Ok(false) => window.push(format!("{sp} d=({d}) changed")),
                Err(e) => window.push(format!("{sp} d=({d}): {e}")),
            }
        }
    }
    out.push(check("widened lift window changes nothing", window.is_empty(), window.join("; ")));

    let mut threads = Vec::new();
    for (sp, d) in [("grass:2,5", "3"), ("flag:1,2;4", "1,1"), ("lagrangian:3", "1")] {
        let one = cli_output(&["--threads", "1", "jfun", "--space", sp, "--degree", d]);
        let four = cli_output(&["--threads", "4", "jfun", "--space", sp, "--degree", d]);
        let default = cli_output(&["jfun", "--space", sp, "--degree", d]);
        if one.0 != 0 || one != four || one != default {
            threads.push(format!("{sp} d={d}"));
        }
    }
    out.push(check("thread count does not change output", threads.is_empty(), threads.join("; ")));

    out.push(match cache_identity() {
        Ok(()) => check("cache round trip is byte-identical", true, ""),
        Err(e) => check("cache round trip is byte-identical", false, e),
    });
    out
}

fn cache_identity() -> Result<(), String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().to_str().ok_or("non-utf8 temp path")?;
    let args = ["jfun", "--space", "grass:2,4", "--degree", "2"];
    let fresh = cli_output(&args);
    let with_cache: Vec<&str> = ["--cache-dir", path].iter().chain(args.iter()).copied().collect();
    let cold = cli_output(&with_cache);
    let warm = cli_output(&with_cache);
    if fresh.0 != 0 || fresh != cold || cold != warm {
        return Err("cached output differs from a fresh computation".into());
    }
    let cache = Cache::open(dir.path()).map_err(|e| e.to_string())?;
    let key = CacheKey::new("grass:2,4", &[2], Method::Theorem1.to_string());
    let entry = match cache.load(&key) {
        crate::cache::Lookup::Hit(e) => e,
        other => return Err(format!("expected a stored entry, got {other:?}")),
    };
    let back: CacheEntry = cache.roundtrip(&entry).map_err(|e| e.to_string())?;
    if back != entry {
        return Err("store then load changed the entry".into());
    }
    std::fs::write(cache.path(&key), "corrupt").map_err(|e| e.to_string())?;
    if cli_output(&with_cache) != fresh {
        return Err("corrupt entry was not recomputed".into());
    }
    Ok(())
}

type Suite = fn() -> Vec<Check>;

fn criterion(name: &str) -> Option<(usize, Suite)> {
    Some(match name {
        "projective" => (1, projective as Suite),
        "martin-oracle" => (2, martin_oracle),
        "cross-paths" => (3, cross_paths),
        "fano" => (4, fano),
        "flag-descendants" => (5, flag_descendants),
        "lagrangian-quadric" => (6, lagrangian_quadric),
        "structural" => (7, structural),
        _ => return None,
    })
}

pub fn run_one(name: &str) -> Option<SuiteReport> {
    let (criterion, f) = criterion(name)?;
    let checks = f();
    Some(SuiteReport { suite: name.to_string(), criterion, pass: checks.iter().all(|c| c.pass), checks })
}

/// `all` runs every suite in criterion order.
pub fn run_suite(name: &str) -> Option<Vec<SuiteReport>> {
    if name == "all" {
        return Some(SUITES.iter().map(|s| run_one(s).expect("listed suite")).collect());
    }
    run_one(name).map(|r| vec![r])
}
