//! Minimizing the homological width over labelings of a fixed complex.
//!
//! [`exhaustive_min`] enumerates every labeling with minimum label 0 under a
//! branch-and-bound prune; [`anneal_min`] is a seeded simulated annealing walk
//! for complexes too large to enumerate. Both are deterministic and independent
//! of the rayon worker count.

mod anneal;
mod exhaustive;
mod rng;

pub use rng::Lcg;

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homology::{FieldSpec, H1Context};
use crate::morse::MorseLabeling;

use exhaustive::{Enumerator, Partial, Visitor};

/// Outcome of a search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub best_value: usize,
    pub certificate: MorseLabeling,
    /// The value is proven minimal over all labelings.
    pub exhaustive: bool,
    pub labelings_visited: u64,
    /// Annealing seed; `None` for exhaustive runs.
    pub seed: Option<u64>,
}

#[derive(Serialize)]
struct ResultJson<'a> {
    field: String,
    mode: &'static str,
    best_value: usize,
    exhaustive: bool,
    labelings_visited: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    labels: &'a [i64],
}

impl SearchResult {
    pub fn to_json(&self, field: FieldSpec) -> serde_json::Value {
        serde_json::to_value(ResultJson {
            field: field.to_string(),
            mode: if self.seed.is_some() { "anneal" } else { "exhaustive" },
            best_value: self.best_value,
            exhaustive: self.exhaustive,
            labelings_visited: self.labelings_visited,
            seed: self.seed,
            labels: self.certificate.labels(),
        })
        .expect("result serializes")
    }
}

/// Positive rational `num / den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fraction {
    pub num: u64,
    pub den: u64,
}

impl Fraction {
    pub const fn new(num: u64, den: u64) -> Self {
        Self { num, den }
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

/// Simulated annealing schedule.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnnealParams {
    /// Proposals per restart.
    pub steps: u64,
    pub initial_temperature: Fraction,
    /// Factor applied to the temperature after every proposal.
    pub cooling_rate: Fraction,
    pub restarts: u32,
    pub seed: u64,
}

impl Default for AnnealParams {
    fn default() -> Self {
        Self {
            steps: 4000,
            initial_temperature: Fraction::new(2, 1),
            cooling_rate: Fraction::new(999, 1000),
            restarts: 4,
            seed: 0,
        }
    }
}

impl AnnealParams {
    pub fn with_seed(seed: u64) -> Self {
        Self { seed, ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        let Fraction { num, den } = self.cooling_rate;
        if self.steps == 0 {
            return Err(Error::BadAnnealParams("steps must be at least 1"));
        }
        if self.restarts == 0 {
            return Err(Error::BadAnnealParams("restarts must be at least 1"));
        }
        if den == 0 || self.initial_temperature.den == 0 {
            return Err(Error::BadAnnealParams("zero denominator"));
        }
        if self.initial_temperature.num == 0 {
            return Err(Error::BadAnnealParams("initial temperature must be positive"));
        }
        if num == 0 || num >= den {
            return Err(Error::BadAnnealParams("cooling rate must lie strictly between 0 and 1"));
        }
        Ok(())
    }
}

fn require_connected(k: &SimplicialComplex) -> Result<()> {
    if k.vertex_count() == 0 || !k.is_connected() {
        return Err(Error::NotConnected);
    }
    Ok(())
}

/// Smallest width over all labelings of `k`, by exhaustive branch and bound.
///
/// When `budget` runs out the best labeling found so far is returned with
/// `exhaustive == false`.
pub fn exhaustive_min(k: &SimplicialComplex, field: FieldSpec, budget: Option<Duration>) -> Result<SearchResult> {
    require_connected(k)?;
    let ctx = H1Context::new(k, field);
    Ok(exhaustive_with(&ctx, budget))
}

/// [`exhaustive_min`] against a prepared context.
pub fn exhaustive_with(ctx: &H1Context<'_>, budget: Option<Duration>) -> SearchResult {
    let deadline = budget.map(|b| Instant::now() + b);
    let out = exhaustive::run(ctx, deadline);
    SearchResult {
        best_value: out.best,
        certificate: MorseLabeling::new(out.certificate),
        exhaustive: out.complete,
        labelings_visited: out.visited,
        seed: None,
    }
}

/// Best width found by simulated annealing from the constant labeling.
pub fn anneal_min(k: &SimplicialComplex, field: FieldSpec, params: &AnnealParams) -> Result<SearchResult> {
    require_connected(k)?;
    params.validate()?;
    let ctx = H1Context::new(k, field);
    Ok(anneal::run(&ctx, params))
}

/// Lower and upper bounds on the minimum width of `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub lower: usize,
    pub upper: usize,
    pub exhaustive: SearchResult,
    /// Present when the exhaustive run did not finish.
    pub anneal: Option<SearchResult>,
}

impl Bounds {
    /// Certificate for `upper`.
    pub fn certificate(&self) -> &MorseLabeling {
        match &self.anneal {
            Some(a) if a.best_value < self.exhaustive.best_value => &a.certificate,
            _ => &self.exhaustive.certificate,
        }
    }
}

/// Exhaustive search within `budget`, falling back to annealing with the
/// default schedule and `seed` if it does not finish.
pub fn certified_bounds(k: &SimplicialComplex, field: FieldSpec, budget: Duration, seed: u64) -> Result<Bounds> {
    require_connected(k)?;
    let ctx = H1Context::new(k, field);
    let exhaustive = exhaustive_with(&ctx, Some(budget));
    if exhaustive.exhaustive {
        let v = exhaustive.best_value;
        return Ok(Bounds { lower: v, upper: v, exhaustive, anneal: None });
    }
    let anneal = anneal::run(&ctx, &AnnealParams::with_seed(seed));
    let upper = exhaustive.best_value.min(anneal.best_value);
    Ok(Bounds { lower: 0, upper, exhaustive, anneal: Some(anneal) })
}

struct Collect(Vec<Vec<i64>>);

impl Visitor for Collect {
    fn enter(&mut self, _: &Partial, _: usize) -> bool {
        true
    }

    fn leaf(&mut self, labels: &[i64]) -> bool {
        self.0.push(labels.to_vec());
        true
    }
}

/// Every valid labeling of the connected complex `k` with minimum label 0, in
/// search order and without pruning.
pub fn enumerate_normalized_labelings(k: &SimplicialComplex) -> Result<Vec<MorseLabeling>> {
    require_connected(k)?;
    let mut c = Collect(Vec::new());
    Enumerator::new(k).walk(&mut c);
    Ok(c.0.into_iter().map(MorseLabeling::new).collect())
}
