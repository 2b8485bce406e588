use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use cshuffle_core::compat::{
    check_csc, check_csc_shapes, check_equiv, check_f_equiv, check_refines, check_sc, expected_csc,
    expected_equiv, expected_sc, lifting_check, verify_counterexample, CATALOG_NAMES,
};
use cshuffle_core::cyc::ceval;
use cshuffle_core::perm::eval;
use cshuffle_core::shuffle::{cyc_distribution, cyclic_shuffles, distribution, shuffles, shuffles_with_des};
use cshuffle_core::verify::{default_max_size, dims, verify_theorem, verify_theorem_pair, PAIR_THEOREMS};
use cshuffle_core::{CycPerm, CycStatId, Error, Perm, Result, StatId, Symmetry};

use crate::{Command, Global};

const DEFAULT_MAX_N: usize = 6;
const DEFAULT_EQUIV_MAX_N: usize = 7;

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

/// Runs one subcommand; `Ok((verdict_ok, payload))` or a domain error.
pub fn run(cmd: &Command, g: &Global) -> Result<(bool, Value)> {
    match cmd {
        Command::Eval(a) => {
            let st: StatId = a.stat.parse()?;
            let p: Perm = a.perm.parse()?;
            let v = eval(&st, &p);
            Ok((true, json!({"stat": st.name(), "perm": p.to_string(), "value": v.to_string(), "value_json": to_json(&v)})))
        }
        Command::Ceval(a) => {
            let st: CycStatId = a.stat.parse()?;
            let c: CycPerm = a.perm.parse()?;
            let v = ceval(&st, &c);
            Ok((true, json!({"stat": st.name(), "class": c.to_string(), "value": v.to_string(), "value_json": to_json(&v)})))
        }
        Command::Shuffle(a) => {
            let (p, q): (Perm, Perm) = (a.a.parse()?, a.b.parse()?);
            let all = match a.des {
                Some(k) => shuffles_with_des(&p, &q, k)?,
                None => shuffles(&p, &q)?,
            };
            let list: Vec<String> = all.iter().map(|s| s.to_string()).collect();
            Ok((true, json!({"count": list.len(), "shuffles": list})))
        }
        Command::Cshuffle(a) => {
            let (x, y): (CycPerm, CycPerm) = (a.a.parse()?, a.b.parse()?);
            let classes: Vec<String> = cyclic_shuffles(&x, &y)?.iter().map(|c| c.to_string()).collect();
            Ok((true, json!({"count": classes.len(), "classes": classes})))
        }
        Command::Distribute(a) => {
            let dist = if a.cyclic {
                let st: CycStatId = a.stat.parse()?;
                let classes = cyclic_shuffles(&a.a.parse()?, &a.b.parse()?)?;
                cyc_distribution(&st, &classes)
            } else {
                let st: StatId = a.stat.parse()?;
                let all = shuffles(&a.a.parse()?, &a.b.parse()?)?;
                distribution(&st, &all)
            };
            Ok((true, json!({"total": dist.total(), "distribution": to_json(&dist)})))
        }
        Command::CheckSc(a) => {
            let st: StatId = a.stat.parse()?;
            let max_n = g.max_n.unwrap_or(DEFAULT_MAX_N);
            let r = check_sc(&st, max_n);
            Ok(against_claim(r.is_compatible(), expected_sc(&st), to_json(&r)))
        }
        Command::CheckCsc(a) => {
            let st: CycStatId = a.stat.parse()?;
            let r = if a.shape.is_empty() {
                check_csc(&st, g.max_n.unwrap_or(DEFAULT_MAX_N))
            } else {
                let shapes = a.shape.iter().map(|s| parse_shape(s)).collect::<Result<Vec<_>>>()?;
                check_csc_shapes(&st, &shapes)
            };
            Ok(against_claim(r.is_compatible(), expected_csc(&st), to_json(&r)))
        }
        Command::CheckEquiv(a) => {
            let (x, y): (CycStatId, CycStatId) = (a.a.parse()?, a.b.parse()?);
            let max_n = g.max_n.unwrap_or(DEFAULT_EQUIV_MAX_N);
            if a.refines {
                let r = check_refines(&x, &y, max_n);
                Ok((r.holds, to_json(&r)))
            } else {
                let r = check_equiv(&x, &y, max_n);
                Ok(against_claim(r.holds, expected_equiv(&x, &y), to_json(&r)))
            }
        }
        Command::CheckFEquiv(a) => {
            let (x, y): (StatId, StatId) = (a.a.parse()?, a.b.parse()?);
            let f: Symmetry = a.f.parse()?;
            let r = check_f_equiv(&x, &y, f, g.max_n.unwrap_or(DEFAULT_EQUIV_MAX_N));
            Ok((r.holds, to_json(&r)))
        }
        Command::Counterexample(a) => {
            if a.name == "all" {
                let mut rows = Vec::new();
                let mut all_ok = true;
                for name in CATALOG_NAMES {
                    let r = verify_counterexample(name)?;
                    all_ok &= r.confirmed;
                    rows.push(json!({
                        "name": r.name,
                        "stat": r.stat,
                        "literal_ok": r.literal_ok,
                        "repaired": r.repaired,
                        "confirmed": r.confirmed,
                    }));
                }
                Ok((all_ok, json!({"claims": rows})))
            } else {
                let r = verify_counterexample(&a.name)?;
                Ok((r.confirmed, to_json(&r)))
            }
        }
        Command::LiftingCheck(a) => {
            let cst: CycStatId = a.cstat.parse()?;
            let st: StatId = a.stat.parse()?;
            let r = lifting_check(&cst, &st, a.n);
            Ok((r.cond_a && r.cond_b, to_json(&r)))
        }
        Command::VerifyTheorem(a) => {
            let max_size = a.max_size.unwrap_or_else(|| default_max_size(&a.name));
            let r = verify_theorem(&a.name, max_size, g.trunc)?;
            let mut payload = to_json(&r);
            let mut ok = r.holds;
            if a.samples > 0 {
                let size = a.sample_size.unwrap_or(max_size + 2);
                let spot = spot_checks(&a.name, size, a.samples, g.seed.unwrap_or(0), g.trunc)?;
                ok &= spot["failures"].as_array().is_some_and(|f| f.is_empty());
                payload["spot_checks"] = spot;
            }
            Ok((ok, payload))
        }
        Command::Dims(a) => {
            let r = dims(&a.stat, a.n, g.trunc)?;
            Ok((r.holds(), json!({"dimension": r.by_classes, "report": to_json(&r)})))
        }
    }
}

/// Compare a checker outcome with the published claim, if there is one;
/// with no claim, a positive outcome counts as ok.
fn against_claim(outcome: bool, claim: Option<bool>, report: Value) -> (bool, Value) {
    let ok = outcome == claim.unwrap_or(true);
    let mut payload = json!({
        "claim": claim.map(|c| if c { "holds" } else { "fails" }),
        "matches_claim": ok,
        "report": report,
    });
    if claim == Some(false) && outcome {
        payload["note"] = json!("no witness within this bound; a larger --max-n or --shape may be needed");
    }
    (ok, payload)
}

fn parse_shape(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse(format!("shape `{s}` is not of the form m,n"));
    let (m, n) = s.split_once(',').ok_or_else(bad)?;
    let m: usize = m.trim().parse().map_err(|_| bad())?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    if m == 0 || n == 0 {
        return Err(Error::RangeViolation(format!("shape `{s}` has an empty side")));
    }
    Ok((m, n))
}

/// Random disjoint pairs of total length `size`, split at a random point.
fn spot_checks(name: &str, size: usize, samples: usize, seed: u64, trunc: Option<usize>) -> Result<Value> {
    if !PAIR_THEOREMS.contains(&name) {
        return Err(Error::RangeViolation(format!(
            "spot checks need one of {}",
            PAIR_THEOREMS.join(", ")
        )));
    }
    if size < 2 {
        return Err(Error::RangeViolation("sample size must be at least 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for _ in 0..samples {
        let mut letters: Vec<u32> = (1..=size as u32).collect();
        letters.shuffle(&mut rng);
        let m = rng.random_range(1..size);
        let p = Perm::new(letters[..m].to_vec())?;
        let q = Perm::new(letters[m..].to_vec())?;
        if !verify_theorem_pair(name, &p, &q, trunc)? {
            failures.push(format!("{p} {q}"));
        }
    }
    Ok(json!({"seed": seed, "size": size, "samples": samples, "failures": failures}))
}
