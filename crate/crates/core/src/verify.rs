//! Exhaustive sweeps over all free trees up to a given order.

use thiserror::Error;

use crate::family::{enumerate_family, recognize, replay_certificate, check_corollary, Recognition, RejectReason};
use crate::graph::{canonical_form, emit_graph6, enumerate_free_trees, Tree};
use crate::solver::{prdf_number, w_set};
use crate::stability::{check_observation1, is_stable, stability_report};

pub const THEOREM_MAX_ORDER: usize = 15;
pub const LEMMA_MAX_ORDER: usize = 15;
pub const OBSERVATION_MAX_ORDER: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{suite} sweep supports orders up to {max}, got {n}")]
pub struct SweepLimit {
    pub suite: &'static str,
    pub n: usize,
    pub max: usize,
}

fn check_limit(suite: &'static str, n: usize, max: usize) -> Result<(), SweepLimit> {
    if n > max {
        Err(SweepLimit { suite, n, max })
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub graph6: String,
    pub detail: String,
}

impl Counterexample {
    fn new(t: &Tree, detail: impl Into<String>) -> Self {
        Counterexample { graph6: emit_graph6(t.graph()), detail: detail.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremRow {
    pub n: usize,
    pub trees: usize,
    pub stable: usize,
    pub recognized: usize,
    pub family: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TheoremSweep {
    pub rows: Vec<TheoremRow>,
    /// Trees where stability, recognition and family membership disagree.
    pub discrepancies: Vec<Counterexample>,
    /// Accepted trees whose certificate does not replay to the input.
    pub certificate_failures: Vec<Counterexample>,
    /// Stable trees violating `n ≡ 0 (mod 3)` and `γ = 2n/3`.
    pub corollary_failures: Vec<Counterexample>,
    /// Stable trees rejected by the degree tests on the longest path.
    pub structural_rejections: Vec<Counterexample>,
}

impl TheoremSweep {
    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty()
            && self.certificate_failures.is_empty()
            && self.corollary_failures.is_empty()
            && self.structural_rejections.is_empty()
    }

    pub fn stable_trees(&self) -> usize {
        self.rows.iter().map(|r| r.stable).sum()
    }
}

/// For every free tree of order `1..=max_n`: definitional stability,
/// recognizer acceptance and family membership must coincide.
pub fn theorem_sweep(max_n: usize) -> Result<TheoremSweep, SweepLimit> {
    check_limit("theorem", max_n, THEOREM_MAX_ORDER)?;
    let mut sweep = TheoremSweep::default();
    for n in 1..=max_n {
        let family = (n % 3 == 0).then(|| enumerate_family(n).expect("order checked"));
        let mut row = TheoremRow { n, trees: 0, stable: 0, recognized: 0, family: family.as_ref().map_or(0, |f| f.len()) };
        let mut members_seen = 0;
        for t in enumerate_free_trees(n).expect("order checked") {
            row.trees += 1;
            let stable = stability_report(&t).stable;
            let recognition = recognize(&t);
            let accepted = recognition.accepted();
            let member = family.as_ref().is_some_and(|f| f.contains(&canonical_form(&t)));
            row.stable += stable as usize;
            row.recognized += accepted as usize;
            members_seen += member as usize;

            if stable != accepted || stable != member {
                sweep.discrepancies.push(Counterexample::new(
                    &t,
                    format!("stable={stable} recognized={accepted} family={member}"),
                ));
            }
            if let Recognition::Accepted { certificate, relabeling } = &recognition {
                let replayed = replay_certificate(certificate);
                let expected = t.relabel(relabeling).expect("relabeling is a permutation");
                if replayed.as_ref() != Ok(&expected) {
                    sweep.certificate_failures.push(Counterexample::new(&t, format!("replay gave {replayed:?}")));
                }
            }
            if stable && !check_corollary(&t) {
                sweep.corollary_failures.push(Counterexample::new(&t, format!("gamma = {}", prdf_number(&t))));
            }
            if let Recognition::Rejected { reason: reason @ (RejectReason::SecondVertexDegree | RejectReason::ThirdVertexDegree), at_order } = recognition {
                if stable {
                    sweep.structural_rejections.push(Counterexample::new(&t, format!("{reason:?} at order {at_order}")));
                }
            }
        }
        if members_seen != row.family {
            sweep.discrepancies.push(Counterexample {
                graph6: String::new(),
                detail: format!("order {n}: family has {} members but {members_seen} free trees matched", row.family),
            });
        }
        sweep.rows.push(row);
    }
    Ok(sweep)
}

/// Free trees of order `1..=max_n` that are stable by definition.
pub fn stable_trees(max_n: usize) -> Result<Vec<Tree>, SweepLimit> {
    check_limit("stable tree", max_n, THEOREM_MAX_ORDER)?;
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_free_trees(n).expect("order checked").filter(is_stable));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LemmaSweep {
    pub stable_trees: usize,
    pub checks: usize,
    pub violations: Vec<Counterexample>,
}

impl LemmaSweep {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// On every stable tree up to `max_n`: a pendant `P3` anywhere adds 2; at a
/// forced-zero vertex a pendant `K1` adds 1, a pendant `P2` adds 2, and the
/// pendant `P3` keeps the tree stable.
pub fn lemma_sweep(max_n: usize) -> Result<LemmaSweep, SweepLimit> {
    check_limit("lemma", max_n, LEMMA_MAX_ORDER)?;
    let mut sweep = LemmaSweep::default();
    for t in stable_trees(max_n)? {
        sweep.stable_trees += 1;
        let base = prdf_number(&t);
        let w = w_set(&t);
        let mut expect = |u: usize, len: usize, delta: u64, also_stable: bool| {
            let grown = t.attach_pendant_path(u, len).expect("vertex in range");
            let got = prdf_number(&grown);
            sweep.checks += 1;
            if got != base + delta {
                sweep.violations.push(Counterexample::new(
                    &t,
                    format!("pendant path of {len} at {u}: gamma {base} -> {got}, expected +{delta}"),
                ));
            }
            if also_stable {
                sweep.checks += 1;
                if !is_stable(&grown) {
                    sweep.violations.push(Counterexample::new(&t, format!("pendant P3 at {u} breaks stability")));
                }
            }
        };
        for u in 0..t.n() {
            let forced_zero = w.contains(u);
            expect(u, 3, 2, forced_zero);
            if forced_zero {
                expect(u, 1, 1, false);
                expect(u, 2, 2, false);
            }
        }
    }
    Ok(sweep)
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ObservationSweep {
    pub stable_trees: usize,
    pub optima: usize,
    /// Pendant-star configurations inspected.
    pub stars: usize,
    pub violations: Vec<Counterexample>,
}

impl ObservationSweep {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Every minimum-weight function of every stable tree up to `max_n` avoids
/// the value 1, never puts 2 on a leaf, and follows the pendant-star pattern.
pub fn observation_sweep(max_n: usize) -> Result<ObservationSweep, SweepLimit> {
    check_limit("observation", max_n, OBSERVATION_MAX_ORDER)?;
    let mut sweep = ObservationSweep::default();
    for t in stable_trees(max_n)? {
        sweep.stable_trees += 1;
        let report = check_observation1(&t).expect("order below oracle cap");
        sweep.optima += report.optima;
        sweep.stars += report.stars.len();
        if !report.passed() {
            sweep.violations.push(Counterexample::new(
                &t,
                format!(
                    "value 1 at {:?}; leaf 2 at {:?}; star violations {:?}",
                    report.value_one, report.leaf_two, report.star_violations
                ),
            ));
        }
    }
    Ok(sweep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        let t = theorem_sweep(9).unwrap();
        assert!(t.passed(), "{t:?}");
        let stable: Vec<usize> = t.rows.iter().map(|r| r.stable).collect();
        assert_eq!(&stable[..6], &[0, 0, 1, 0, 0, 1]);
        assert!(lemma_sweep(9).unwrap().passed());
        assert!(observation_sweep(9).unwrap().passed());
    }

    #[test]
    fn limits() {
        assert_eq!(theorem_sweep(16).unwrap_err(), SweepLimit { suite: "theorem", n: 16, max: 15 });
        assert!(observation_sweep(13).is_err());
        assert!(lemma_sweep(16).is_err());
    }
}
