//! One function per job command.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};
use symspace::distinction::{check_orbit_with, require_dominant, OrbitVerdict};
use symspace::langlands::{
    check_conj_symmetry_in, contragredient_param_in, dominant_representative_in,
    theta_twist_param_in,
};
use symspace::normalspace::{gln_element, sym_eigen_count};
use symspace::weyl::twisted_involutions_in;
use symspace::{
    gln_oracle, normal_multiset, CharacterOfT, DistinctionReport, LanglandsParameter, PairSpec,
    Realization, RootSystem, TwistedInvolution, WeylGroup,
};

use crate::job::{CliError, Job, Outcome};
use crate::render::{self, fields, table, yes_no};
use crate::sampling::dominant_characters;

const ORBIT_COUNT_NOTE: &str = "Q'-orbit representative count: the number of twisted \
    involutions, which bounds the number of orbits; it bounds the multiplicity of \
    distinction for the full fixed-point group, not for a proper open subgroup";

const EIGEN_NOTE: &str = "counts match folded characters only and are upper bounds for \
    the equivariant dimensions";

fn pair_header(pair: &PairSpec) -> Vec<(&'static str, String)> {
    let rs = pair.root_system();
    vec![
        ("pair", format!("{} / {}", rs.label(), pair.label())),
        ("rank", rs.rank().to_string()),
    ]
}

/// Permutation of coordinates for gl_n elements, 1-based.
fn gl_permutation(rs: &RootSystem, w: &TwistedInvolution) -> Option<Vec<usize>> {
    if let Realization::GlN { n } = rs.realization() {
        let m = w.element().matrix();
        let perm = (0..n)
            .map(|j| (0..n).find(|&i| !num_traits::Zero::is_zero(m.get(i, j))).unwrap_or(j) + 1)
            .collect();
        Some(perm)
    } else {
        None
    }
}

pub fn roots(job: &Job) -> Result<Outcome, CliError> {
    let rs = job.root_system()?;
    let positive: Vec<Value> = (0..rs.num_positive()).map(|k| render::root(&rs, k)).collect();
    let parabolics: Vec<Value> = rs
        .all_parabolics()
        .iter()
        .map(|d| {
            json!({
                "subset": render::one_based(d.subset.iter().copied()),
                "a_f_dim": d.a_f_dim,
                "a_mf_dim": d.a_mf_dim,
                "n_f": d.n_f.len(),
                "n_mf": d.n_mf.len(),
            })
        })
        .collect();
    let order = rs.weyl_order()?;
    let result = json!({
        "label": rs.label(),
        "realization": rs.realization(),
        "rank": rs.rank(),
        "ambient_dim": rs.ambient_dim(),
        "cartan_matrix": rs.cartan(),
        "num_roots": rs.num_roots(),
        "num_positive": rs.num_positive(),
        "weyl_order": order.to_string(),
        "simple_roots": rs.simple_roots().iter().map(render::weight).collect::<Vec<_>>(),
        "positive_roots": positive,
        "parabolics": parabolics,
    });
    let mut text = fields(&[
        ("root system", rs.label().to_string()),
        ("rank", rs.rank().to_string()),
        ("ambient dim", rs.ambient_dim().to_string()),
        ("roots", rs.num_roots().to_string()),
        ("Weyl order", order.to_string()),
    ]);
    text.push('\n');
    let rows: Vec<Vec<String>> = (0..rs.num_positive())
        .map(|k| {
            vec![
                (k + 1).to_string(),
                rs.root_name(k),
                rs.roots()[k].to_string(),
                render::simple_coords_text(rs.root_coords(k)),
            ]
        })
        .collect();
    text += &table(&["#", "root", "coords", "simple coords"], &rows);
    Ok(Outcome {
        result,
        table: text,
    })
}

pub fn weyl(job: &Job) -> Result<Outcome, CliError> {
    let rs = job.root_system()?;
    let group = WeylGroup::enumerate(&rs, &job.settings.budget)?;
    let w0 = group.longest();
    let mut result = json!({
        "label": rs.label(),
        "order": group.len(),
        "longest": render::element_with_perm(w0),
    });
    let mut text = fields(&[
        ("root system", rs.label().to_string()),
        ("order", group.len().to_string()),
        ("longest", format!("{} (length {})", w0.word_string(), w0.length())),
    ]);
    if job.settings.list_elements {
        result["elements"] = group.iter().map(render::element_with_perm).collect();
        let rows: Vec<Vec<String>> = group
            .iter()
            .enumerate()
            .map(|(k, w)| vec![(k + 1).to_string(), w.word_string(), w.length().to_string()])
            .collect();
        text.push('\n');
        text += &table(&["#", "w", "length"], &rows);
    }
    Ok(Outcome {
        result,
        table: text,
    })
}

pub fn orbits(job: &Job) -> Result<Outcome, CliError> {
    let pair = job.pair()?;
    let rs = pair.root_system();
    let twisted = pair.twisted_involutions(&job.settings.budget)?;
    let mut items = Vec::new();
    let mut rows = Vec::new();
    for (k, w) in twisted.iter().enumerate() {
        let s = normal_multiset(&pair, w)?;
        let mut item = render::element(w.element());
        item["support_size"] = json!(s.entries.len());
        item["normal_dimension"] = json!(s.total_multiplicity());
        let perm = gl_permutation(rs, w);
        if let Some(p) = &perm {
            item["permutation"] = json!(p);
        }
        items.push(item);
        rows.push(vec![
            (k + 1).to_string(),
            w.element().word_string(),
            w.element().length().to_string(),
            perm.map_or(String::new(), |p| format!("{p:?}")),
            s.entries.len().to_string(),
            s.total_multiplicity().to_string(),
        ]);
    }
    let result = json!({
        "pair": pair.label(),
        "count": twisted.len(),
        "twisted_involutions": items,
    });
    let mut header = pair_header(&pair);
    header.push(("twisted involutions", twisted.len().to_string()));
    let text = fields(&header)
        + "\n"
        + &table(&["#", "w", "length", "permutation", "|S|", "dim N"], &rows);
    Ok(Outcome {
        result,
        table: text,
    })
}

pub fn star(job: &Job) -> Result<Outcome, CliError> {
    let pair = job.pair()?;
    let report = pair.verify_star(&job.settings.budget)?;
    let entries: Vec<Value> = report
        .entries
        .iter()
        .map(|e| {
            json!({
                "w": render::element(e.w.element()),
                "s1": e.s1.len(),
                "s2": e.s2.len(),
                "s3": e.s3.len(),
                "s3_sum": render::weight(&e.sum),
                "s3_closed": e.s3_closed,
                "holds": e.holds,
            })
        })
        .collect();
    let rows: Vec<Vec<String>> = report
        .entries
        .iter()
        .map(|e| {
            vec![
                e.w.element().word_string(),
                e.s1.len().to_string(),
                e.s2.len().to_string(),
                e.s3.len().to_string(),
                e.sum.to_string(),
                yes_no(e.holds),
            ]
        })
        .collect();
    let mut header = pair_header(&pair);
    header.push(("(*) holds", yes_no(report.holds)));
    let text = fields(&header)
        + "\n"
        + &table(&["w", "|S1|", "|S2|", "|S3|", "S3 sum", "holds"], &rows);
    Ok(Outcome {
        result: json!({"pair": pair.label(), "holds": report.holds, "entries": entries}),
        table: text,
    })
}

fn verdict_json(pair: &PairSpec, v: &OrbitVerdict, eigen: Option<&[u128]>) -> Value {
    let rs = pair.root_system();
    let mut out = json!({
        "w": render::element(v.w.element()),
        "support": v.multiset.entries.iter().map(|e| json!({
            "root": rs.root_name(e.root),
            "multiplicity": e.multiplicity,
        })).collect::<Vec<_>>(),
        "support_size": v.support_size(),
        "folded_vectors": v.multiset.folded_vectors.iter()
            .map(|f| json!(f.simple_coords)).collect::<Vec<_>>(),
        "tau": rs.simple_coords(&v.tau).map(|c| render::qs(&c)).unwrap_or(Value::Null),
        "solutions": v.solutions,
        "feasible": v.feasible,
        "symmetry": v.symmetry,
        "sym_dimension": v.sym_dimension,
        "violation": v.violation,
    });
    if let Some(c) = eigen {
        out["eigen_counts"] = json!(c.iter().map(u128::to_string).collect::<Vec<_>>());
    }
    out
}

pub fn distinction(job: &Job) -> Result<Outcome, CliError> {
    let pair = job.pair()?;
    let rs = pair.root_system();
    let group = WeylGroup::enumerate(rs, &job.settings.budget)?;
    let twisted = twisted_involutions_in(rs, pair.theta(), &group)?;
    let multisets = twisted
        .iter()
        .map(|w| normal_multiset(&pair, w))
        .collect::<symspace::Result<Vec<_>>>()?;
    let budget = job.settings.budget;
    let Some(chi) = job.character()? else {
        return distinction_sampled(job, &pair, &group, &twisted);
    };
    require_dominant(rs, &chi)?;
    let k_max = job.settings.k_max;
    let per_orbit = job.settings.in_pool(|| {
        multisets
            .par_iter()
            .map(|s| {
                let v = check_orbit_with(&pair, &chi, s.clone(), &budget)?;
                let eigen = match k_max {
                    Some(k) => Some(sym_eigen_count(&pair, &v.w, &chi, k, &budget)?.counts),
                    None => None,
                };
                Ok((v, eigen))
            })
            .collect::<symspace::Result<Vec<_>>>()
    })??;
    let (verdicts, eigen): (Vec<OrbitVerdict>, Vec<Option<Vec<u128>>>) = per_orbit.into_iter().unzip();
    let report = DistinctionReport::from_verdicts(chi.clone(), verdicts);
    let items: Vec<Value> = report
        .verdicts
        .iter()
        .zip(&eigen)
        .map(|(v, e)| verdict_json(&pair, v, e.as_deref()))
        .collect();
    let mut result = json!({
        "pair": pair.label(),
        "character": render::character(&chi),
        "verdicts": items,
        "feasible_count": report.feasible_count,
        "orbit_representative_count": report.orbit_representative_count,
        "orbit_count_note": ORBIT_COUNT_NOTE,
        "violations": report.violations,
    });
    if k_max.is_some() {
        result["eigen_counts_note"] = json!(EIGEN_NOTE);
    }
    let rows: Vec<Vec<String>> = report
        .verdicts
        .iter()
        .map(|v| {
            vec![
                v.w.element().word_string(),
                v.support_size().to_string(),
                yes_no(v.feasible),
                yes_no(v.symmetry),
                v.sym_dimension.to_string(),
            ]
        })
        .collect();
    let mut header = pair_header(&pair);
    header.push(("character", render::character_text(&chi)));
    header.push(("feasible orbits", report.feasible_count.to_string()));
    header.push((
        "Q'-orbit representative count",
        report.orbit_representative_count.to_string(),
    ));
    header.push(("violations", report.violations.to_string()));
    let text = fields(&header)
        + "\n"
        + &table(&["w", "|S|", "feasible?", "symmetry?", "sym_dim"], &rows);
    Ok(Outcome {
        result,
        table: text,
    })
}

fn distinction_sampled(
    job: &Job,
    pair: &PairSpec,
    group: &WeylGroup,
    twisted: &[TwistedInvolution],
) -> Result<Outcome, CliError> {
    let s = &job.settings;
    let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
    let chars = dominant_characters(&mut rng, pair, group, twisted, s.samples)?;
    let multisets = twisted
        .iter()
        .map(|w| normal_multiset(pair, w))
        .collect::<symspace::Result<Vec<_>>>()?;
    let budget = s.budget;
    let outcomes = s.in_pool(|| {
        chars
            .par_iter()
            .map(|chi| {
                let mut feasible = 0usize;
                let mut problems = Vec::new();
                for m in &multisets {
                    let v = check_orbit_with(pair, chi, m.clone(), &budget)?;
                    feasible += usize::from(v.feasible);
                    if let Some(p) = v.violation {
                        problems.push(format!("{} at w = {}: {p}", chi, v.w.element().word_string()));
                    }
                }
                Ok((feasible, problems))
            })
            .collect::<symspace::Result<Vec<_>>>()
    })??;
    let feasible: usize = outcomes.iter().map(|o| o.0).sum();
    let with_feasible = outcomes.iter().filter(|o| o.0 > 0).count();
    let violations: Vec<String> = outcomes.into_iter().flat_map(|o| o.1).collect();
    let checks = chars.len() * twisted.len();
    let result = json!({
        "pair": pair.label(),
        "mode": "sampled",
        "seed": s.seed,
        "samples": chars.len(),
        "twisted_involutions": twisted.len(),
        "checks": checks,
        "feasible_checks": feasible,
        "characters_with_feasible_orbit": with_feasible,
        "violations": violations,
        "holds": violations.is_empty(),
    });
    let mut header = pair_header(pair);
    header.extend([
        ("mode", "sampled".to_string()),
        ("seed", s.seed.to_string()),
        ("characters", chars.len().to_string()),
        ("(chi, w) checks", checks.to_string()),
        ("feasible checks", feasible.to_string()),
        ("violations", violations.len().to_string()),
    ]);
    Ok(Outcome {
        result,
        table: fields(&header),
    })
}

pub fn langlands(job: &Job) -> Result<Outcome, CliError> {
    let pair = job.pair()?;
    let rs = pair.root_system();
    let theta = pair.theta();
    let group = WeylGroup::enumerate(rs, &job.settings.budget)?;
    let Some(chi) = job.character()? else {
        return langlands_sampled(job, &pair, &group);
    };
    let (p, w) = dominant_representative_in(rs, &group, &chi)?;
    let contra = contragredient_param_in(rs, &group, &p)?;
    let twist = theta_twist_param_in(rs, &group, theta, &p)?;
    let witness = check_conj_symmetry_in(rs, &group, theta, &p)?;
    let agree = contra.equivalent(&group, &twist)?;
    let param = |x: &LanglandsParameter| {
        let mut v = render::character(x.character());
        v["dominant"] = json!(true);
        v
    };
    let result = json!({
        "pair": pair.label(),
        "character": render::character(&chi),
        "parameter": param(&p),
        "dominating_element": render::element(&w),
        "contragredient": param(&contra),
        "theta_twist": param(&twist),
        "conj_symmetry": witness.is_some(),
        "conj_symmetry_witness": witness.as_ref().map(render::element),
        "contragredient_equivalent_to_theta_twist": agree,
    });
    let mut header = pair_header(&pair);
    header.extend([
        ("character", render::character_text(&chi)),
        ("parameter", render::character_text(p.character())),
        ("dominating w", w.word_string()),
        ("contragredient", render::character_text(contra.character())),
        ("theta twist", render::character_text(twist.character())),
        (
            "conj symmetry",
            witness.map_or("no".to_string(), |w| format!("yes, w = {}", w.word_string())),
        ),
        ("contragredient ~ twist", yes_no(agree)),
    ]);
    Ok(Outcome {
        result,
        table: fields(&header),
    })
}

fn langlands_sampled(job: &Job, pair: &PairSpec, group: &WeylGroup) -> Result<Outcome, CliError> {
    let s = &job.settings;
    let rs = pair.root_system();
    let theta = pair.theta();
    let twisted = twisted_involutions_in(rs, theta, group)?;
    let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
    let chars = dominant_characters(&mut rng, pair, group, &twisted, s.samples)?;
    let outcomes = s.in_pool(|| {
        chars
            .par_iter()
            .map(|chi: &CharacterOfT| -> symspace::Result<(bool, Vec<String>)> {
                let p = LanglandsParameter::new(rs, chi.clone())?;
                let c = contragredient_param_in(rs, group, &p)?;
                let t = theta_twist_param_in(rs, group, theta, &p)?;
                let mut problems = Vec::new();
                if !contragredient_param_in(rs, group, &c)?.equivalent(group, &p)? {
                    problems.push(format!("{chi}: contragredient is not an involution"));
                }
                if !theta_twist_param_in(rs, group, theta, &t)?.equivalent(group, &p)? {
                    problems.push(format!("{chi}: theta twist is not an involution"));
                }
                let symmetric = check_conj_symmetry_in(rs, group, theta, &p)?.is_some();
                if symmetric && !c.equivalent(group, &t)? {
                    problems.push(format!("{chi}: symmetric but contragredient differs from twist"));
                }
                Ok((symmetric, problems))
            })
            .collect::<symspace::Result<Vec<_>>>()
    })??;
    let symmetric = outcomes.iter().filter(|o| o.0).count();
    let violations: Vec<String> = outcomes.into_iter().flat_map(|o| o.1).collect();
    let result = json!({
        "pair": pair.label(),
        "mode": "sampled",
        "seed": s.seed,
        "samples": chars.len(),
        "symmetric": symmetric,
        "violations": violations,
        "holds": violations.is_empty(),
    });
    let mut header = pair_header(pair);
    header.extend([
        ("mode", "sampled".to_string()),
        ("seed", s.seed.to_string()),
        ("parameters", chars.len().to_string()),
        ("with conj symmetry", symmetric.to_string()),
        ("violations", violations.len().to_string()),
    ]);
    Ok(Outcome {
        result,
        table: fields(&header),
    })
}

pub fn oracle(job: &Job) -> Result<Outcome, CliError> {
    let (Some(n), Some(w)) = (job.spec.n, job.spec.w.as_ref()) else {
        return Err(CliError::parse("oracle needs \"n\" and \"w\" (0-indexed)".into()));
    };
    let pairs = gln_oracle(n, w)?;
    let one_based: Vec<[usize; 2]> = pairs.iter().map(|&(i, j)| [i + 1, j + 1]).collect();
    // Cross-check against the normal multiset of the split form of gl_n.
    let support = if n >= 2 {
        let pair = PairSpec::galois_split(RootSystem::gl(n)?);
        let rs = pair.root_system();
        let tw = TwistedInvolution::new(rs, pair.theta(), gln_element(rs, w)?)?;
        let s = normal_multiset(&pair, &tw)?;
        let mut names: Vec<[usize; 2]> = s
            .support()
            .into_iter()
            .map(|r| {
                let x = rs.roots()[r].coords();
                let i = x.iter().position(|c| num_traits::Signed::is_positive(c)).unwrap_or(0);
                let j = x.iter().position(|c| num_traits::Signed::is_negative(c)).unwrap_or(0);
                [i + 1, j + 1]
            })
            .collect();
        names.sort();
        Some(names)
    } else {
        None
    };
    let agrees = support.as_ref().map_or(true, |s| *s == one_based);
    let result = json!({
        "n": n,
        "w": render::one_based(w.iter().copied()),
        "inversion_pairs": one_based,
        "normal_multiset_support": support,
        "agrees": agrees,
    });
    let rows: Vec<Vec<String>> = one_based
        .iter()
        .map(|[i, j]| vec![i.to_string(), j.to_string()])
        .collect();
    let text = fields(&[
        ("n", n.to_string()),
        ("w", format!("{:?}", render::one_based(w.iter().copied()))),
        ("|I_w|", one_based.len().to_string()),
        ("agrees with normal multiset", yes_no(agrees)),
    ]) + "\n"
        + &table(&["i", "j"], &rows);
    Ok(Outcome {
        result,
        table: text,
    })
}
