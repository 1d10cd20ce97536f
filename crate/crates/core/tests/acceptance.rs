//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the report is always printed:
//! `cargo test -p symspace --test acceptance`.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symspace::distinction::check_orbit_with;
use symspace::langlands::{check_conj_symmetry_in, contragredient_param_in, theta_twist_param_in};
use symspace::normalspace::gln_element;
use symspace::rootsys::Family;
use symspace::weyl::twisted_involutions_in;
use symspace::{
    gln_oracle, normal_multiset, solve_fold_equation, Budget, CharacterOfT, LanglandsParameter,
    PairSpec, RootSystem, TwistedInvolution, Weight, WeylGroup, Q,
};

use common::*;

const SEED: u64 = 0x5eed_2024;
const SAMPLES_PER_PAIR: usize = 1000;
const SOLVER_INSTANCES: usize = 200;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

struct Runner {
    failures: usize,
}

impl Runner {
    fn run(&mut self, id: u32, title: &str, limit: Option<Duration>, f: impl FnOnce() -> Check) {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f))
            .unwrap_or_else(|p| {
                let msg = p
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "panic".into());
                Err(format!("panicked: {msg}"))
            });
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(l)) if elapsed > l => Err(format!(
                "took {:.2}s, limit {}s",
                elapsed.as_secs_f64(),
                l.as_secs()
            )),
            (o, _) => o,
        };
        let budget = limit.map_or(String::new(), |l| format!(", limit {}s", l.as_secs()));
        match outcome {
            Ok(detail) => println!(
                "PASS  [{id}] {title}: {detail} ({:.2}s{budget})",
                elapsed.as_secs_f64()
            ),
            Err(detail) => {
                self.failures += 1;
                println!(
                    "FAIL  [{id}] {title}: {detail} ({:.2}s{budget})",
                    elapsed.as_secs_f64()
                )
            }
        }
    }
}

fn main() {
    let mut runner = Runner { failures: 0 };
    let mut sample: Vec<(PairSpec, Vec<(CharacterOfT, bool)>)> = Vec::new();

    runner.run(
        1,
        "gl_n galois-split twisted involutions vs S_n involutions, n = 2..7",
        Some(Duration::from_secs(10)),
        criterion_counts,
    );
    runner.run(
        2,
        "gl_n normal-multiset support equals I_w for every involution, n <= 5",
        None,
        criterion_gln_support,
    );
    runner.run(
        3,
        "property (*) for galois-split A1-A4, B2, B3, C3, D4, G2 at every twisted involution",
        Some(Duration::from_secs(60)),
        criterion_star,
    );
    runner.run(
        4,
        "folded equation on seeded dominant characters, every sample pair and twisted involution",
        Some(Duration::from_secs(120)),
        || criterion_fold(&mut sample),
    );
    runner.run(
        5,
        "bounded solver agrees with naive brute force (sum n_j <= bound + 5)",
        None,
        criterion_solver,
    );
    runner.run(
        6,
        "contragredient and theta-twist are involutions; feasible implies they agree",
        None,
        || criterion_parameters(&sample),
    );
    runner.run(
        7,
        "standard parabolics of A1-A4, B2, B3, G2",
        None,
        criterion_parabolics,
    );
    runner.run(8, "Weyl group orders", None, criterion_orders);

    if runner.failures > 0 {
        println!("{} acceptance criteria failed", runner.failures);
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}

fn criterion_counts() -> Check {
    let expected = [2usize, 4, 10, 26, 76, 232];
    let mut got = Vec::new();
    for (n, &want) in (2..=7).zip(&expected) {
        let pair = PairSpec::galois_split(RootSystem::gl(n).unwrap());
        let count = pair.twisted_involutions(&Budget::default()).unwrap().len();
        let brute = involutions(n).len();
        ensure(count == brute && count == want, || {
            format!("n = {n}: library {count}, brute force {brute}, expected {want}")
        })?;
        got.push(count.to_string());
    }
    Ok(got.join(", "))
}

fn gl_pair_index(rs: &RootSystem, root: usize) -> (usize, usize) {
    let x = rs.roots()[root].coords();
    let i = x.iter().position(|c| *c > Q::zero()).unwrap();
    let j = x.iter().position(|c| *c < Q::zero()).unwrap();
    (i, j)
}

fn criterion_gln_support() -> Check {
    let mut checked = 0;
    for n in 2..=5 {
        let pair = PairSpec::galois_split(RootSystem::gl(n).unwrap());
        let rs = pair.root_system();
        for w in involutions(n) {
            let tw = TwistedInvolution::new(rs, pair.theta(), gln_element(rs, &w).unwrap())
                .map_err(|e| format!("{w:?} rejected: {e}"))?;
            let s = normal_multiset(&pair, &tw).unwrap();
            let support: BTreeSet<(usize, usize)> =
                s.support().into_iter().map(|r| gl_pair_index(rs, r)).collect();
            let oracle: BTreeSet<(usize, usize)> = inversion_pairs(&w).into_iter().collect();
            ensure(support == oracle, || {
                format!("n = {n}, w = {w:?}: support {support:?}, I_w {oracle:?}")
            })?;
            ensure(gln_oracle(n, &w).unwrap() == oracle, || {
                format!("library oracle disagrees at {w:?}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} involutions"))
}

fn criterion_star() -> Check {
    let types = [
        (Family::A, 1),
        (Family::A, 2),
        (Family::A, 3),
        (Family::A, 4),
        (Family::B, 2),
        (Family::B, 3),
        (Family::C, 3),
        (Family::D, 4),
        (Family::G, 2),
    ];
    let mut total = 0;
    for (f, r) in types {
        let pair = PairSpec::galois_split(RootSystem::of_type(f, r).unwrap());
        let rs = pair.root_system();
        let report = pair.verify_star(&Budget::default()).unwrap();
        ensure(report.holds, || format!("{f}{r}: (*) fails"))?;
        for e in &report.entries {
            // Recompute the S3 sum from the matrices.
            let mut sum = vec![Q::zero(); rs.ambient_dim()];
            for a in rs.positive_roots() {
                let theta_a = mat_vec(pair.theta().matrix(), a.coords());
                let image = mat_vec(e.w.element().matrix(), &theta_a);
                let idx = rs.root_index(&Weight::new(image.clone())).unwrap();
                if !rs.is_positive(idx) {
                    for (s, (x, y)) in sum.iter_mut().zip(a.coords().iter().zip(&image)) {
                        *s += x + y;
                    }
                }
            }
            ensure(sum.iter().all(Zero::is_zero) && e.sum.is_zero(), || {
                format!("{f}{r}, w = {}: S3 sum nonzero", e.w.element().word_string())
            })?;
        }
        total += report.entries.len();
    }
    Ok(format!("{total} twisted involutions over 9 types"))
}

/// `fold(χ)` recomputed from the raw matrices: `(λ + wPλ, λ_im + wPλ_im, m + ε wPm)`.
fn fold_oracle(pair: &PairSpec, w: &TwistedInvolution, chi: &CharacterOfT) -> (Vec<Q>, Vec<Q>, Vec<Q>) {
    let p = pair.theta().matrix();
    let wm = w.element().matrix();
    let eps = Q::from_integer(BigInt::from(pair.theta().epsilon()));
    let twist = |x: &[Q]| mat_vec(wm, &mat_vec(p, x));
    let add = |x: &[Q], y: Vec<Q>| x.iter().zip(y).map(|(a, b)| a + b).collect::<Vec<Q>>();
    let re = add(chi.lambda_re.coords(), twist(chi.lambda_re.coords()));
    let im = add(chi.lambda_im.coords(), twist(chi.lambda_im.coords()));
    let m_q: Vec<Q> = chi.m.iter().map(|x| Q::from_integer(x.clone())).collect();
    let m = add(&m_q, twist(&m_q).into_iter().map(|x| x * &eps).collect());
    (re, im, m)
}

fn criterion_fold(sample: &mut Vec<(PairSpec, Vec<(CharacterOfT, bool)>)>) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let budget = Budget::default();
    let mut checks = 0usize;
    let mut feasible_total = 0usize;
    for pair in sample_pairs() {
        let rs = pair.root_system();
        let group = WeylGroup::enumerate(rs, &budget).unwrap();
        let twisted = twisted_involutions_in(rs, pair.theta(), &group).unwrap();
        let chars = dominant_sample(&mut rng, &pair, &group, &twisted, SAMPLES_PER_PAIR);
        let multisets: Vec<_> = twisted.iter().map(|w| normal_multiset(&pair, w).unwrap()).collect();
        let mut recorded = Vec::with_capacity(chars.len());
        let mut feasible_here = 0;
        for chi in chars {
            ensure(chi.is_dominant(rs).unwrap(), || format!("{chi} not dominant"))?;
            let mut any = false;
            for (w, s) in twisted.iter().zip(&multisets) {
                let v = check_orbit_with(&pair, &chi, s.clone(), &budget).map_err(|e| e.to_string())?;
                let ctx = || format!("{} w = {}, chi = {chi}", pair.label(), w.element().word_string());
                let (re, im, m) = fold_oracle(&pair, w, &chi);
                let trivial = re.iter().chain(&im).chain(&m).all(Zero::is_zero);
                // τ vanishes on the root span iff it is orthogonal to every simple root.
                let tau_zero = rs.simple_roots().iter().all(|a| {
                    let fa = mat_vec(rs.form(), a.coords());
                    re.iter().zip(&fa).map(|(x, y)| x * y).sum::<Q>().is_zero()
                });
                ensure(v.solutions.iter().all(|n| n.iter().all(|&x| x == 0)), || {
                    format!("nonzero solution {:?} at {}", v.solutions, ctx())
                })?;
                ensure(v.solutions.is_empty() != tau_zero, || {
                    format!("solution set {:?} but tau zero = {tau_zero} at {}", v.solutions, ctx())
                })?;
                ensure(v.feasible == trivial, || format!("feasibility mismatch at {}", ctx()))?;
                if v.feasible {
                    let inv = chi.invert();
                    let twisted_chi = chi.theta_act(pair.theta()).unwrap().weyl_act(w.element()).unwrap();
                    ensure(v.sym_dimension == 1 && v.symmetry && inv == twisted_chi, || {
                        format!("feasible without symmetry at {}", ctx())
                    })?;
                    any = true;
                    feasible_here += 1;
                } else {
                    ensure(v.sym_dimension == 0, || format!("sym_dimension at {}", ctx()))?;
                }
                ensure(v.violation.is_none(), || format!("{:?} at {}", v.violation, ctx()))?;
                checks += 1;
            }
            recorded.push((chi, any));
        }
        ensure(feasible_here > 0, || format!("{}: sample never feasible", pair.label()))?;
        feasible_total += feasible_here;
        sample.push((pair, recorded));
    }
    Ok(format!(
        "{} pairs x {SAMPLES_PER_PAIR} characters, {checks} (chi, w) checks, {feasible_total} feasible",
        sample.len()
    ))
}

fn criterion_solver() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x501e);
    let budget = Budget::default();
    let pairs = sample_pairs();
    let mut done = 0;
    let mut with_solutions = 0;
    let mut attempts = 0;
    while done < SOLVER_INSTANCES {
        attempts += 1;
        ensure(attempts < 100 * SOLVER_INSTANCES, || "could not draw instances".into())?;
        let pair = &pairs[rng.gen_range(0..pairs.len())];
        let rs = pair.root_system();
        let twisted = pair.twisted_involutions(&budget).unwrap();
        let w = &twisted[rng.gen_range(0..twisted.len())];
        let s = normal_multiset(pair, w).unwrap();
        let vectors: Vec<Vec<i64>> = s.folded_vectors.iter().map(|v| v.simple_coords.clone()).collect();
        let r = rs.rank();
        let target: Vec<i64> = if rng.gen_bool(0.6) && !vectors.is_empty() {
            let mut t = vec![0i64; r];
            for v in &vectors {
                let n = rng.gen_range(0..=2i64);
                for (a, x) in t.iter_mut().zip(v) {
                    *a += n * x;
                }
            }
            t
        } else {
            (0..r).map(|_| rng.gen_range(-5i64..=1)).collect()
        };
        let bound: u64 = target.iter().map(|x| x.unsigned_abs()).sum();
        let cap = bound + 5;
        let k = vectors.len() as u64;
        // C(cap + k, k) assignments; keep the naive scan tractable.
        let size = (1..=k).fold(1f64, |acc, i| acc * (cap + i) as f64 / i as f64);
        if size > 2.0e6 {
            continue;
        }
        let tau = (0..r).fold(Weight::zeros(rs.ambient_dim()), |acc, c| {
            &acc + &rs.simple_roots()[c].scale(&q(target[c]))
        });
        let mut lib = solve_fold_equation(rs, &s, &tau, &budget).map_err(|e| e.to_string())?;
        lib.sort();
        let naive = brute_force_solutions(&vectors, &target, cap);
        ensure(lib == naive, || {
            format!("{}: target {target:?}, solver {lib:?}, brute force {naive:?}", pair.label())
        })?;
        if !lib.is_empty() {
            with_solutions += 1;
        }
        done += 1;
    }
    Ok(format!("{done} instances, {with_solutions} with solutions"))
}

fn criterion_parameters(sample: &[(PairSpec, Vec<(CharacterOfT, bool)>)]) -> Check {
    ensure(!sample.is_empty(), || "criterion 4 produced no sample".into())?;
    let budget = Budget::default();
    let mut checked = 0;
    let mut feasible = 0;
    for (pair, chars) in sample {
        let rs = pair.root_system();
        let theta = pair.theta();
        let group = WeylGroup::enumerate(rs, &budget).unwrap();
        for (chi, any_feasible) in chars {
            let p = LanglandsParameter::new(rs, chi.clone()).unwrap();
            let c = contragredient_param_in(rs, &group, &p).map_err(|e| e.to_string())?;
            let cc = contragredient_param_in(rs, &group, &c).unwrap();
            ensure(cc.equivalent(&group, &p).unwrap(), || format!("contragredient twice moves {chi}"))?;
            let t = theta_twist_param_in(rs, &group, theta, &p).unwrap();
            let tt = theta_twist_param_in(rs, &group, theta, &t).unwrap();
            ensure(tt.equivalent(&group, &p).unwrap(), || format!("theta twice moves {chi}"))?;
            if *any_feasible {
                ensure(c.equivalent(&group, &t).unwrap(), || {
                    format!("{}: feasible {chi} but contragredient != theta-twist", pair.label())
                })?;
                ensure(check_conj_symmetry_in(rs, &group, theta, &p).unwrap().is_some(), || {
                    format!("{}: feasible {chi} without a symmetry witness", pair.label())
                })?;
                feasible += 1;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} parameters, {feasible} with a feasible orbit"))
}

fn criterion_parabolics() -> Check {
    let types = [
        (Family::A, 1),
        (Family::A, 2),
        (Family::A, 3),
        (Family::A, 4),
        (Family::B, 2),
        (Family::B, 3),
        (Family::G, 2),
    ];
    let mut total = 0;
    for (f, r) in types {
        let rs = RootSystem::of_type(f, r).unwrap();
        let all = rs.all_parabolics();
        ensure(all.len() == 1 << r, || format!("{f}{r}: {} parabolics", all.len()))?;
        for d in &all {
            ensure(d.a_f_dim + d.a_mf_dim == r, || format!("{f}{r} F = {:?}: dimensions", d.subset))?;
            ensure(d.n_f.len() + d.n_mf.len() == rs.num_positive(), || {
                format!("{f}{r} F = {:?}: root counts", d.subset)
            })?;
            // Levi roots are the positive roots supported on F.
            let levi = (0..rs.num_positive())
                .filter(|&k| {
                    rs.root_coords(k)
                        .iter()
                        .enumerate()
                        .all(|(i, &c)| c == 0 || d.subset.contains(&i))
                })
                .count();
            ensure(levi == d.n_mf.len() && d.a_mf_dim == d.subset.len(), || {
                format!("{f}{r} F = {:?}: Levi mismatch", d.subset)
            })?;
        }
        total += all.len();
    }
    Ok(format!("{total} parabolics over 7 types"))
}

fn criterion_orders() -> Check {
    let cases = [
        (Family::A, 3, 24usize),
        (Family::B, 3, 48),
        (Family::C, 3, 48),
        (Family::D, 4, 192),
        (Family::G, 2, 12),
        (Family::F, 4, 1152),
    ];
    let mut got = Vec::new();
    for (f, r, want) in cases {
        let rs = RootSystem::of_type(f, r).unwrap();
        let n = WeylGroup::enumerate(&rs, &Budget::default()).unwrap().len();
        ensure(n == want && rs.weyl_order().unwrap() == want as u128, || {
            format!("{f}{r}: enumerated {n}, expected {want}")
        })?;
        got.push(format!("{f}{r}={n}"));
    }
    Ok(got.join(" "))
}
