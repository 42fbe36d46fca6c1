//! Simulated annealing over labelings.
//!
//! A proposal moves one vertex label by ±1 and is dropped if it breaks the
//! morse constraint. The energy orders labelings by (max rank, number of slab
//! components at the max, sum of all ranks); the last two terms give the walk
//! a slope across the wide plateaus of the max.

use rayon::prelude::*;

use super::rng::Lcg;
use super::{AnnealParams, SearchResult};
use crate::homology::H1Context;
use crate::morse::{slab_ranks, MorseLabeling};

const RESTART_STRIDE: u64 = 0x9E37_79B9_7F4A_7C15;

struct Energy {
    max: usize,
    scalar: f64,
}

fn energy(ctx: &H1Context<'_>, labels: &[i64], weight: f64) -> Energy {
    let ranks = slab_ranks(ctx, &MorseLabeling::new(labels.to_vec()));
    let max = ranks.iter().map(|s| s.rank).max().unwrap_or(0);
    let at_max = ranks.iter().filter(|s| s.rank == max).count();
    let sum: usize = ranks.iter().map(|s| s.rank).sum();
    Energy { max, scalar: (max as f64 * weight + at_max as f64) * weight + sum as f64 }
}

fn admissible(ctx: &H1Context<'_>, labels: &[i64], v: usize) -> bool {
    ctx.complex().neighbors(v).iter().all(|&w| (labels[w] - labels[v]).abs() <= 1)
}

struct Walk {
    best: usize,
    certificate: Vec<i64>,
    evaluated: u64,
}

fn restart(ctx: &H1Context<'_>, params: &AnnealParams, seed: u64, weight: f64) -> Walk {
    let n = ctx.complex().vertex_count();
    let mut rng = Lcg::new(seed);
    let mut labels = vec![0i64; n];
    let mut current = energy(ctx, &labels, weight);
    let mut walk = Walk { best: current.max, certificate: labels.clone(), evaluated: 1 };
    let mut temperature = params.initial_temperature.to_f64();
    let cooling = params.cooling_rate.to_f64();
    for _ in 0..params.steps {
        if walk.best == 0 {
            break;
        }
        let v = rng.below(n);
        let step = if rng.next_u32() & 1 == 0 { -1 } else { 1 };
        let draw = rng.unit();
        temperature *= cooling;
        labels[v] += step;
        if !admissible(ctx, &labels, v) {
            labels[v] -= step;
            continue;
        }
        let next = energy(ctx, &labels, weight);
        walk.evaluated += 1;
        let delta = next.scalar - current.scalar;
        if delta <= 0.0 || draw < (-delta / temperature).exp() {
            current = next;
            if current.max < walk.best {
                walk.best = current.max;
                walk.certificate = labels.clone();
            }
        } else {
            labels[v] -= step;
        }
    }
    walk
}

pub(crate) fn run(ctx: &H1Context<'_>, params: &AnnealParams) -> SearchResult {
    let n = ctx.complex().vertex_count();
    // no slab has more than n components and each rank is at most betti1
    let weight = (2 * n * (ctx.betti1() + 1) + 1) as f64;
    let walks: Vec<Walk> = (0..params.restarts as u64)
        .into_par_iter()
        .map(|r| restart(ctx, params, params.seed.wrapping_add(r.wrapping_mul(RESTART_STRIDE)), weight))
        .collect();
    let evaluated = walks.iter().map(|w| w.evaluated).sum();
    let best = walks
        .into_iter()
        .map(|w| (w.best, MorseLabeling::new(w.certificate).normalized()))
        .min()
        .expect("at least one restart");
    SearchResult {
        best_value: best.0,
        certificate: best.1,
        exhaustive: false,
        labelings_visited: evaluated,
        seed: Some(params.seed),
    }
}
