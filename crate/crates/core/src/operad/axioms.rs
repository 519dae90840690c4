//! A generic checker for the unit and associativity laws of a
//! non-symmetric operad, phrased through partial compositions `f ∘ᵢ g`.
//! With a unit the partial laws are equivalent to the laws for the full
//! composition `f(g₁, …, gₙ)`.

use std::fmt::Debug;

use serde::Serialize;

use crate::error::Result;

pub trait Operad {
    type Op: Clone + Debug;

    fn name(&self) -> String;

    fn arity(&self, op: &Self::Op) -> usize;

    /// Full composition `outer(inners₁, …, innersₙ)`.
    fn compose(&self, outer: &Self::Op, inners: &[Self::Op]) -> Result<Self::Op>;

    /// Partial composition, inserting `inner` at input `slot` (one-based).
    /// Operads without a unit override this.
    fn compose_at(&self, outer: &Self::Op, slot: usize, inner: &Self::Op) -> Result<Self::Op> {
        let unit = self
            .unit()
            .expect("partial composition from full composition needs a unit");
        let mut inners = vec![unit; self.arity(outer)];
        inners[slot - 1] = inner.clone();
        self.compose(outer, &inners)
    }

    fn unit(&self) -> Option<Self::Op>;

    fn equal(&self, a: &Self::Op, b: &Self::Op) -> bool;
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct LawReport {
    pub law: String,
    pub instance: String,
    pub status: Status,
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Bounds for the exhaustive search: every triple `(f, g, h)` drawn from
/// `outers × inners × inners` is tried at every admissible slot pair.
pub struct CheckBounds<Op> {
    pub outers: Vec<Op>,
    pub inners: Vec<Op>,
    /// Skip triples whose total arity would exceed this.
    pub max_result_arity: usize,
}

struct Tally {
    cases: usize,
    witness: Option<String>,
    error: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Self {
            cases: 0,
            witness: None,
            error: None,
        }
    }

    fn record(&mut self, ok: Result<bool>, describe: impl FnOnce() -> String) {
        self.cases += 1;
        match ok {
            Ok(true) => {}
            Ok(false) => {
                if self.witness.is_none() {
                    self.witness = Some(describe());
                }
            }
            Err(e) => {
                if self.error.is_none() {
                    self.error = Some(format!("{}: {e}", describe()));
                }
            }
        }
    }

    fn report(self, law: &str, instance: &str) -> LawReport {
        let witness = self.witness.or(self.error);
        LawReport {
            law: law.to_string(),
            instance: instance.to_string(),
            status: if witness.is_none() {
                Status::Pass
            } else {
                Status::Fail
            },
            cases: self.cases,
            witness,
        }
    }
}

pub fn operad_axioms_check<O: Operad>(operad: &O, bounds: &CheckBounds<O::Op>) -> Vec<LawReport> {
    let instance = operad.name();
    let mut reports = Vec::new();

    match operad.unit() {
        Some(unit) => {
            let mut left = Tally::new();
            let mut right = Tally::new();
            for f in bounds.outers.iter().chain(&bounds.inners) {
                left.record(
                    operad
                        .compose(&unit, std::slice::from_ref(f))
                        .map(|r| operad.equal(&r, f)),
                    || format!("1 ∘ {f:?}"),
                );
                let units = vec![unit.clone(); operad.arity(f)];
                right.record(
                    operad.compose(f, &units).map(|r| operad.equal(&r, f)),
                    || format!("{f:?} ∘ (1, …, 1)"),
                );
            }
            reports.push(left.report("left unit", &instance));
            reports.push(right.report("right unit", &instance));
        }
        None => {
            for law in ["left unit", "right unit"] {
                reports.push(LawReport {
                    law: law.to_string(),
                    instance: instance.clone(),
                    status: Status::Skipped,
                    cases: 0,
                    witness: Some("operad has no unit".to_string()),
                });
            }
        }
    }

    let mut sequential = Tally::new();
    let mut parallel = Tally::new();
    for f in &bounds.outers {
        let p = operad.arity(f);
        for g in &bounds.inners {
            let q = operad.arity(g);
            for h in &bounds.inners {
                let r = operad.arity(h);
                if (p + q + r).saturating_sub(2) > bounds.max_result_arity {
                    continue;
                }
                for i in 1..=p {
                    let fg = match operad.compose_at(f, i, g) {
                        Ok(fg) => fg,
                        Err(e) => {
                            sequential.record(Err(e), || format!("{f:?} ∘{i} {g:?}"));
                            continue;
                        }
                    };
                    // (f ∘ᵢ g) ∘ⱼ h with j inside g's block
                    for j in i..i + q {
                        let lhs = operad.compose_at(&fg, j, h);
                        let rhs = operad
                            .compose_at(g, j - i + 1, h)
                            .and_then(|gh| operad.compose_at(f, i, &gh));
                        sequential
                            .record(lhs.and_then(|l| rhs.map(|r| operad.equal(&l, &r))), || {
                                format!("({f:?} ∘{i} {g:?}) ∘{j} {h:?}")
                            });
                    }
                    // j outside g's block
                    for j in (1..i).chain(i + q..p + q) {
                        let lhs = operad.compose_at(&fg, j, h);
                        let rhs = if j < i {
                            operad
                                .compose_at(f, j, h)
                                .and_then(|fh| operad.compose_at(&fh, i + r - 1, g))
                        } else {
                            operad
                                .compose_at(f, j - q + 1, h)
                                .and_then(|fh| operad.compose_at(&fh, i, g))
                        };
                        parallel
                            .record(lhs.and_then(|l| rhs.map(|r| operad.equal(&l, &r))), || {
                                format!("({f:?} ∘{i} {g:?}) ∘{j} {h:?}")
                            });
                    }
                }
            }
        }
    }
    reports.push(sequential.report("sequential associativity", &instance));
    reports.push(parallel.report("parallel associativity", &instance));
    reports
}

pub fn all_pass(reports: &[LawReport]) -> bool {
    reports.iter().all(|r| r.status != Status::Fail)
}
