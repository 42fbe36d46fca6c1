//! Executable width claims, replayed on small witness complexes.
//!
//! Each [`VerificationCase`] builds its complexes and labelings, measures a
//! handful of integers and compares them exactly with the expected values.
//! Every expected value records whether it is a theorem value or one
//! computed for the particular witness.

use std::fmt;
use std::time::Duration;

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::generators::{
    generate_circle, generate_torus, presentation_complex, product_complex, pullback_labeling, spread_wedge,
    tent_labeling, wedge, LabeledComplex,
};
use crate::homology::{betti1, FieldSpec};
use crate::morse::{hcwr_value, MorseLabeling};
use crate::search::exhaustive_min;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// A width theorem evaluated at this witness.
    Theorem,
    /// A value computed for this particular witness.
    Computed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "==")]
    Equal,
    #[serde(rename = ">=")]
    AtLeast,
}

/// One measured integer against its expected value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub quantity: String,
    pub relation: Relation,
    pub expected: i64,
    pub basis: Basis,
    pub actual: i64,
}

impl Check {
    pub fn holds(&self) -> bool {
        match self.relation {
            Relation::Equal => self.actual == self.expected,
            Relation::AtLeast => self.actual >= self.expected,
        }
    }
}

fn eq(quantity: &str, expected: i64, basis: Basis, actual: impl TryInto<i64>) -> Check {
    let actual = actual.try_into().unwrap_or(i64::MAX);
    Check { quantity: quantity.to_string(), relation: Relation::Equal, expected, basis, actual }
}

fn at_least(quantity: &str, expected: i64, basis: Basis, actual: impl TryInto<i64>) -> Check {
    Check { relation: Relation::AtLeast, ..eq(quantity, expected, basis, actual) }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Not run to completion within the time budget.
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped(budget)",
        })
    }
}

impl Serialize for Status {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Settings shared by all cases.
#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Time allowed to each budgeted exhaustive search.
    pub budget: Duration,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { budget: Duration::from_secs(600) }
    }
}

enum Outcome {
    Checked(Vec<Check>),
    OutOfBudget(Vec<Check>),
}

pub struct VerificationCase {
    pub name: &'static str,
    pub construction: &'static str,
    run: fn(&VerifyOptions) -> Result<Outcome>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    pub name: &'static str,
    pub construction: &'static str,
    pub status: Status,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl VerificationCase {
    pub fn run(&self, opts: &VerifyOptions) -> CaseReport {
        let (status, checks, error) = match (self.run)(opts) {
            Ok(Outcome::Checked(checks)) => {
                let ok = checks.iter().all(Check::holds);
                (if ok { Status::Pass } else { Status::Fail }, checks, None)
            }
            Ok(Outcome::OutOfBudget(checks)) => {
                let ok = checks.iter().all(Check::holds);
                (if ok { Status::Skipped } else { Status::Fail }, checks, None)
            }
            Err(e) => (Status::Fail, Vec::new(), Some(e.to_string())),
        };
        CaseReport { name: self.name, construction: self.construction, status, checks, error }
    }
}

const Q: FieldSpec = FieldSpec::Rationals;

fn f3() -> FieldSpec {
    FieldSpec::prime(3).expect("3 is prime")
}

fn tent_torus(dim: usize, res: usize) -> Result<LabeledComplex> {
    let t = generate_torus(dim, res)?;
    let f = tent_labeling(&t, 0)?;
    LabeledComplex::new(t.into_complex(), Some(f))
}

fn tent_circle(m: usize) -> Result<LabeledComplex> {
    tent_torus(1, m)
}

fn width(l: &LabeledComplex, field: FieldSpec) -> Result<usize> {
    let f = l.labeling.as_ref().ok_or(crate::error::Error::MissingLabels)?;
    Ok(hcwr_value(&l.complex, f, field)?.max_rank)
}

fn moore() -> Result<SimplicialComplex> {
    presentation_complex(1, &[vec![1, 1, 1]])
}

fn torus_k2(_: &VerifyOptions) -> Result<Outcome> {
    let l = tent_torus(2, 4)?;
    let r = hcwr_value(&l.complex, l.labeling.as_ref().expect("tent"), Q)?;
    Ok(Outcome::Checked(vec![
        eq("hcwr(T2 tent, Q)", 1, Basis::Theorem, r.max_rank),
        eq("betti1(Q_f)", 1, Basis::Theorem, r.qf_betti1),
    ]))
}

fn torus_k3(_: &VerifyOptions) -> Result<Outcome> {
    let l = tent_torus(3, 4)?;
    Ok(Outcome::Checked(vec![eq("hcwr(T3 tent, Q)", 2, Basis::Theorem, width(&l, Q)?)]))
}

fn torus_lower_k2(opts: &VerifyOptions) -> Result<Outcome> {
    let mut checks = Vec::new();
    let mut complete = true;
    for res in [3, 4] {
        let t = generate_torus(2, res)?;
        let r = exhaustive_min(t.complex(), Q, Some(opts.budget))?;
        complete &= r.exhaustive;
        checks.push(at_least(&format!("min hcwr(T2 n={res}, Q)"), 1, Basis::Theorem, r.best_value));
        if res == 4 && r.exhaustive {
            checks.push(eq("min hcwr(T2 n=4, Q)", 1, Basis::Computed, r.best_value));
        }
    }
    Ok(if complete { Outcome::Checked(checks) } else { Outcome::OutOfBudget(checks) })
}

fn free_width_zero(_: &VerifyOptions) -> Result<Outcome> {
    let hex = generate_circle(6)?;
    let r = exhaustive_min(&hex, Q, None)?;
    let w = exhaustive_min(&wedge(&hex, 0, &hex, 0)?, Q, None)?;
    let h = tent_circle(6)?;
    let s = spread_wedge(&h, 0, &h, 0, crate::generators::min_arc_len(&h, 0, &h, 0)?)?;
    Ok(Outcome::Checked(vec![
        eq("min hcwr(C6, Q)", 0, Basis::Theorem, r.best_value),
        eq("exhaustive(C6)", 1, Basis::Computed, r.exhaustive as i64),
        eq("min hcwr(C6 v C6, Q)", 0, Basis::Theorem, w.best_value),
        eq("hcwr(spread wedge of tent hexagons, Q)", 0, Basis::Theorem, width(&s, Q)?),
    ]))
}

fn circle3(_: &VerifyOptions) -> Result<Outcome> {
    let r = exhaustive_min(&generate_circle(3)?, Q, None)?;
    Ok(Outcome::Checked(vec![
        eq("min hcwr(C3, Q)", 1, Basis::Computed, r.best_value),
        eq("exhaustive(C3)", 1, Basis::Computed, r.exhaustive as i64),
    ]))
}

fn moore_f3(_: &VerifyOptions) -> Result<Outcome> {
    let k = moore()?;
    let c = hcwr_value(&k, &MorseLabeling::constant(k.vertex_count(), 0), f3())?;
    Ok(Outcome::Checked(vec![
        eq("betti1(M3, F3)", 1, Basis::Computed, betti1(&k, f3())),
        eq("betti1(M3, Q)", 0, Basis::Computed, betti1(&k, Q)),
        eq("hcwr(M3 constant, F3)", 1, Basis::Theorem, c.max_rank),
    ]))
}

fn moore_f3_exhaustive(opts: &VerifyOptions) -> Result<Outcome> {
    let r = exhaustive_min(&moore()?, f3(), Some(opts.budget))?;
    let checks = vec![at_least("min hcwr(M3, F3)", 1, Basis::Theorem, r.best_value)];
    Ok(if r.exhaustive { Outcome::Checked(checks) } else { Outcome::OutOfBudget(checks) })
}

fn free_product_max(_: &VerifyOptions) -> Result<Outcome> {
    let t = tent_torus(2, 4)?;
    let h = tent_circle(6)?;
    let tt = spread_wedge(&t, 0, &t, 0, crate::generators::min_arc_len(&t, 0, &t, 0)?)?;
    let th = spread_wedge(&t, 0, &h, 0, crate::generators::min_arc_len(&t, 0, &h, 0)?)?;
    Ok(Outcome::Checked(vec![
        eq("hcwr(T2 * T2 spread, Q)", 1, Basis::Theorem, width(&tt, Q)?),
        eq("betti1(T2 * T2 spread, Q)", 4, Basis::Computed, betti1(&tt.complex, Q)),
        eq("hcwr(T2 * C6 spread, Q)", 1, Basis::Theorem, width(&th, Q)?),
    ]))
}

fn product_bound(_: &VerifyOptions) -> Result<Outcome> {
    let c4 = tent_circle(4)?;
    let p = product_complex(&c4.complex, &c4.complex);
    let f = pullback_labeling(&p, c4.labeling.as_ref().expect("tent"))?;
    let r = hcwr_value(p.complex(), &f, Q)?;
    Ok(Outcome::Checked(vec![
        eq("hcwr(C4 x C4 pullback tent, Q)", 1, Basis::Theorem, r.max_rank),
        eq("euler(C4 x C4)", 0, Basis::Computed, p.complex().euler_characteristic()),
        eq("betti1(C4 x C4, Q)", 2, Basis::Computed, betti1(p.complex(), Q)),
    ]))
}

fn abelian_infinite_f3(_: &VerifyOptions) -> Result<Outcome> {
    let c4 = tent_circle(4)?;
    let m = moore()?;
    let p = product_complex(&c4.complex, &m);
    let f = pullback_labeling(&p, c4.labeling.as_ref().expect("tent"))?;
    Ok(Outcome::Checked(vec![
        eq("betti1(C4 x M3, F3)", 2, Basis::Computed, betti1(p.complex(), f3())),
        eq("hcwr(C4 x M3 pullback tent, F3)", 1, Basis::Theorem, hcwr_value(p.complex(), &f, f3())?.max_rank),
    ]))
}

/// The full suite in run order.
pub fn cases() -> Vec<VerificationCase> {
    vec![
        VerificationCase {
            name: "torus-k2",
            construction: "torus(2,4), tent labeling on axis 0, field Q",
            run: torus_k2,
        },
        VerificationCase {
            name: "torus-k3",
            construction: "torus(3,4), tent labeling on axis 0, field Q",
            run: torus_k3,
        },
        VerificationCase {
            name: "torus-lower-k2",
            construction: "exhaustive search on torus(2,3) and torus(2,4), field Q",
            run: torus_lower_k2,
        },
        VerificationCase {
            name: "free-width-zero",
            construction: "exhaustive search on C6 and C6 v C6; spread wedge of two tent hexagons",
            run: free_width_zero,
        },
        VerificationCase {
            name: "circle3-subdivision",
            construction: "exhaustive search on the 3-cycle, field Q",
            run: circle3,
        },
        VerificationCase {
            name: "moore-f3",
            construction: "presentation <a | aaa>, constant labeling, fields Q and F3",
            run: moore_f3,
        },
        VerificationCase {
            name: "moore-f3-exhaustive",
            construction: "presentation <a | aaa>, exhaustive search over F3 within the budget",
            run: moore_f3_exhaustive,
        },
        VerificationCase {
            name: "free-product-max",
            construction: "spread wedges of tent torus(2,4) with itself and with a tent hexagon, field Q",
            run: free_product_max,
        },
        VerificationCase {
            name: "product-bound",
            construction: "product of two 4-cycles, tent pulled back from the first factor, field Q",
            run: product_bound,
        },
        VerificationCase {
            name: "abelian-infinite-f3",
            construction: "product of a 4-cycle and <a | aaa>, tent pulled back from the cycle, field F3",
            run: abelian_infinite_f3,
        },
    ]
}

/// Runs the cases whose name equals `filter`, or all of them; `None` if nothing matches.
pub fn run_suite(filter: Option<&str>, opts: &VerifyOptions) -> Option<Vec<CaseReport>> {
    let selected: Vec<VerificationCase> = cases().into_iter().filter(|c| filter.is_none_or(|f| f == c.name)).collect();
    if selected.is_empty() {
        return None;
    }
    Some(selected.iter().map(|c| c.run(opts)).collect())
}

/// JSON summary of a suite run.
pub fn summary_json(reports: &[CaseReport]) -> serde_json::Value {
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    serde_json::json!({
        "passed": count(Status::Pass),
        "failed": count(Status::Fail),
        "skipped": count(Status::Skipped),
        "cases": reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let mut names: Vec<&str> = cases().iter().map(|c| c.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), cases().len());
    }

    #[test]
    fn unknown_filter() {
        assert!(run_suite(Some("no-such-case"), &VerifyOptions::default()).is_none());
    }

    #[test]
    fn quick_cases_pass() {
        for name in ["torus-k2", "moore-f3", "product-bound", "circle3-subdivision"] {
            let r = run_suite(Some(name), &VerifyOptions::default()).unwrap();
            assert_eq!(r[0].status, Status::Pass, "{name}: {:?}", r[0].checks);
        }
    }

    #[test]
    fn at_least_relation() {
        assert!(at_least("x", 1, Basis::Theorem, 2usize).holds());
        assert!(!eq("x", 1, Basis::Theorem, 2usize).holds());
    }
}
