use serde::Serialize;

use crate::cyc::{ceval, induced, CycPerm, CycStatId};
use crate::perm::{eval, StatId, StatValue};

use super::refinement_failure;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftingReport {
    pub cyclic_stat: String,
    pub linear_stat: String,
    pub n: usize,
    pub cond_a: bool,
    pub cond_b: bool,
    /// Classes with equal `st(M[·])` but different `cst`.
    pub witness_a: Option<(String, String)>,
    /// Classes with equal `cst` but no matching bijection.
    pub witness_b: Option<(String, String)>,
    /// A bijection `i ↦ f(i)` for the first pair of distinct classes with
    /// equal `cst`, when one exists.
    pub sample_bijection: Option<SampleBijection>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleBijection {
    pub first: String,
    pub second: String,
    pub pairs: Vec<(u32, u32)>,
}

/// Letters of `c` ordered by `(st(S_i[c]), i)`.
fn sorted_lifts(st: &StatId, c: &CycPerm) -> Vec<(StatValue, u32)> {
    let mut out: Vec<(StatValue, u32)> = c
        .rep()
        .letters()
        .iter()
        .map(|&i| (eval(st, &c.lift_s(i).expect("letter of c")), i))
        .collect();
    out.sort();
    out
}

/// A bijection `f` on the letters with `st(S_i[a]) = st(S_{f(i)}[b])`, found
/// by matching letters in order of their lifted values.
pub fn lifting_bijection(st: &StatId, a: &CycPerm, b: &CycPerm) -> Option<Vec<(u32, u32)>> {
    if a.len() != b.len() {
        return None;
    }
    let (la, lb) = (sorted_lifts(st, a), sorted_lifts(st, b));
    let mut pairs: Vec<(u32, u32)> = la
        .iter()
        .zip(&lb)
        .map(|((va, i), (vb, j))| (va == vb).then_some((*i, *j)))
        .collect::<Option<_>>()?;
    pairs.sort_unstable();
    Some(pairs)
}

/// Checks both hypotheses of the lifting lemma for `cst` and `st` over the
/// cyclic permutations of `[n]`.
pub fn lifting_check(cst: &CycStatId, st: &StatId, n: usize) -> LiftingReport {
    let classes: Vec<CycPerm> = CycPerm::all(n).collect();
    let show = |(i, j): (usize, usize)| (classes[i].to_string(), classes[j].to_string());

    let witness_a = refinement_failure(
        &classes,
        |c| eval(st, &c.lift_m().expect("nonempty")),
        |c| ceval(cst, c),
    )
    .map(show);
    // Equal multisets of lifted values are exactly when a bijection exists.
    let witness_b = refinement_failure(&classes, |c| ceval(cst, c), |c| induced(st, c)).map(show);

    let mut sample = None;
    'outer: for (i, a) in classes.iter().enumerate() {
        let va = ceval(cst, a);
        for b in &classes[i + 1..] {
            if ceval(cst, b) == va {
                if let Some(pairs) = lifting_bijection(st, a, b) {
                    sample = Some(SampleBijection {
                        first: a.to_string(),
                        second: b.to_string(),
                        pairs,
                    });
                }
                break 'outer;
            }
        }
    }

    LiftingReport {
        cyclic_stat: cst.name(),
        linear_stat: st.name(),
        n,
        cond_a: witness_a.is_none(),
        cond_b: witness_b.is_none(),
        witness_a,
        witness_b,
        sample_bijection: sample,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    /// Exhaustive search over all bijections of the letters.
    fn brute_force_bijection(st: &StatId, a: &CycPerm, b: &CycPerm) -> bool {
        let la = a.rep().letters().to_vec();
        let lb = b.rep().letters().to_vec();
        lb.iter().permutations(lb.len()).any(|img| {
            la.iter().zip(img).all(|(&i, &j)| {
                eval(st, &a.lift_s(i).unwrap()) == eval(st, &b.lift_s(j).unwrap())
            })
        })
    }

    #[test]
    fn bijection_matches_brute_force() {
        for st in [StatId::DesSet, StatId::Pk, StatId::Maj] {
            for n in 1..=4 {
                let classes: Vec<CycPerm> = CycPerm::all(n).collect();
                for a in &classes {
                    for b in &classes {
                        let fast = lifting_bijection(&st, a, b);
                        assert_eq!(fast.is_some(), brute_force_bijection(&st, a, b));
                        if let Some(pairs) = fast {
                            for (i, j) in pairs {
                                assert_eq!(
                                    eval(&st, &a.lift_s(i).unwrap()),
                                    eval(&st, &b.lift_s(j).unwrap())
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn known_applications() {
        let r = lifting_check(&CycStatId::CDes, &StatId::DesSet, 5);
        assert!(r.cond_a && r.cond_b, "{r:?}");
        let r = lifting_check(&CycStatId::Cpk, &StatId::Pk, 5);
        assert!(r.cond_a && r.cond_b, "{r:?}");
        assert!(r.sample_bijection.is_some());
    }
}
