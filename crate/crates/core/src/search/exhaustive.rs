//! Depth-first enumeration of labelings with minimum label 0.
//!
//! Vertices are assigned in breadth-first order from vertex 0, so every vertex
//! after the root has an assigned neighbour and its label is confined to that
//! neighbour's label ±1. The root label is at most its eccentricity: the root is
//! at most that far from a vertex labeled 0. Each valid labeling with minimum 0
//! is produced exactly once.
//!
//! Pruning uses monotonicity of image rank: a component of the partially
//! labeled part of a slab only grows as more vertices are labeled, so once one
//! reaches the best value found so far the whole subtree can be skipped.

use std::collections::VecDeque;
use std::time::Instant;

use rayon::prelude::*;

use crate::complex::SimplicialComplex;
use crate::homology::H1Context;
use crate::morse::{slab_ranks, MorseLabeling};

/// Subtrees below this many assigned vertices become independent tasks.
const SPLIT_DEPTH: usize = 4;
/// Clock checks happen once per this many search nodes.
const CLOCK_INTERVAL: u64 = 256;

pub(crate) struct Enumerator {
    order: Vec<usize>,
    earlier: Vec<Vec<usize>>,
    root_cap: i64,
}

/// Labels by vertex id, `None` for unassigned.
pub(crate) type Partial = Vec<Option<i64>>;

pub(crate) trait Visitor {
    /// Called after `v` is labeled; false skips the subtree.
    fn enter(&mut self, partial: &Partial, v: usize) -> bool;
    /// Called on each complete labeling with minimum 0; false stops the walk.
    fn leaf(&mut self, labels: &[i64]) -> bool;
    /// Polled between nodes; true aborts the walk.
    fn out_of_time(&mut self) -> bool {
        false
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Walk {
    Finished,
    Stopped,
    Aborted,
}

impl Enumerator {
    /// `complex` must be connected.
    pub(crate) fn new(complex: &SimplicialComplex) -> Self {
        let n = complex.vertex_count();
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in complex.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        let mut pos = vec![usize::MAX; n];
        for (p, &v) in order.iter().enumerate() {
            pos[v] = p;
        }
        let earlier = order
            .iter()
            .map(|&v| complex.neighbors(v).iter().copied().filter(|&w| pos[w] < pos[v]).collect())
            .collect();
        let root_cap = complex.distances_from(0).into_iter().flatten().max().unwrap_or(0) as i64;
        Self { order, earlier, root_cap }
    }

    pub(crate) fn vertex_count(&self) -> usize {
        self.order.len()
    }

    fn candidates(&self, partial: &Partial, depth: usize) -> std::ops::RangeInclusive<i64> {
        if depth == 0 {
            return 0..=self.root_cap;
        }
        let mut lo = 0i64;
        let mut hi = i64::MAX;
        for &w in &self.earlier[depth] {
            let l = partial[w].expect("earlier neighbours are assigned");
            lo = lo.max(l - 1);
            hi = hi.min(l + 1);
        }
        lo..=hi
    }

    /// Assignments of the first `depth` vertices that survive `visitor.enter`.
    pub(crate) fn prefixes(&self, depth: usize, visitor: &mut impl Visitor) -> Vec<Partial> {
        let mut out = Vec::new();
        let mut partial = vec![None; self.vertex_count()];
        self.collect_prefixes(0, depth.min(self.vertex_count()), &mut partial, visitor, &mut out);
        out
    }

    fn collect_prefixes(
        &self,
        d: usize,
        depth: usize,
        partial: &mut Partial,
        visitor: &mut impl Visitor,
        out: &mut Vec<Partial>,
    ) {
        if d == depth {
            out.push(partial.clone());
            return;
        }
        let v = self.order[d];
        for l in self.candidates(partial, d) {
            partial[v] = Some(l);
            if visitor.enter(partial, v) {
                self.collect_prefixes(d + 1, depth, partial, visitor, out);
            }
        }
        partial[v] = None;
    }

    /// Walks every completion of `prefix`, whose first `depth` vertices in order are assigned.
    pub(crate) fn walk_from(&self, prefix: &Partial, depth: usize, visitor: &mut impl Visitor) -> Walk {
        let mut partial = prefix.clone();
        let mut nodes = 0u64;
        self.descend(depth, &mut partial, visitor, &mut nodes)
    }

    /// Walks every labeling with minimum 0.
    pub(crate) fn walk(&self, visitor: &mut impl Visitor) -> Walk {
        self.walk_from(&vec![None; self.vertex_count()], 0, visitor)
    }

    fn descend(&self, d: usize, partial: &mut Partial, visitor: &mut impl Visitor, nodes: &mut u64) -> Walk {
        *nodes += 1;
        if nodes.is_multiple_of(CLOCK_INTERVAL) && visitor.out_of_time() {
            return Walk::Aborted;
        }
        if d == self.vertex_count() {
            if !partial.contains(&Some(0)) {
                return Walk::Finished;
            }
            let labels: Vec<i64> = partial.iter().map(|l| l.expect("complete")).collect();
            return if visitor.leaf(&labels) { Walk::Finished } else { Walk::Stopped };
        }
        let v = self.order[d];
        for l in self.candidates(partial, d) {
            partial[v] = Some(l);
            if visitor.enter(partial, v) {
                let w = self.descend(d + 1, partial, visitor, nodes);
                if w != Walk::Finished {
                    partial[v] = None;
                    return w;
                }
            }
        }
        partial[v] = None;
        Walk::Finished
    }
}

/// Image rank of the component of `v` among labeled vertices with labels in `{s, s+1}`.
fn partial_component_rank(ctx: &H1Context<'_>, partial: &Partial, v: usize, s: i64, limit: usize) -> usize {
    let k = ctx.complex();
    let inside = |w: usize| matches!(partial[w], Some(l) if l == s || l == s + 1);
    if !inside(v) {
        return 0;
    }
    let mut seen = vec![false; k.vertex_count()];
    let mut members = vec![v];
    seen[v] = true;
    let mut head = 0;
    while head < members.len() {
        let u = members[head];
        head += 1;
        for &w in k.neighbors(u) {
            if !seen[w] && inside(w) {
                seen[w] = true;
                members.push(w);
            }
        }
    }
    // fewer than three vertices span no cycle
    if members.len() < 3 {
        return 0;
    }
    ctx.image_rank_of_vertex_set_capped(&members, limit)
}

/// Branch-and-bound visitor tracking the best labeling of one subtree.
pub(crate) struct BestFinder<'c, 'k> {
    ctx: &'c H1Context<'k>,
    pub(crate) best: usize,
    pub(crate) certificate: Vec<i64>,
    pub(crate) visited: u64,
    deadline: Option<Instant>,
}

impl<'c, 'k> BestFinder<'c, 'k> {
    pub(crate) fn new(ctx: &'c H1Context<'k>, best: usize, certificate: Vec<i64>, deadline: Option<Instant>) -> Self {
        Self { ctx, best, certificate, visited: 0, deadline }
    }
}

impl Visitor for BestFinder<'_, '_> {
    fn enter(&mut self, partial: &Partial, v: usize) -> bool {
        let l = partial[v].expect("just assigned");
        (l - 1..=l).all(|s| partial_component_rank(self.ctx, partial, v, s, self.best) < self.best)
    }

    fn leaf(&mut self, labels: &[i64]) -> bool {
        self.visited += 1;
        let f = MorseLabeling::new(labels.to_vec());
        let value = slab_ranks(self.ctx, &f).iter().map(|s| s.rank).max().unwrap_or(0);
        if value < self.best {
            self.best = value;
            self.certificate = labels.to_vec();
        }
        self.best > 0
    }

    fn out_of_time(&mut self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

pub(crate) struct ExhaustiveOutcome {
    pub(crate) best: usize,
    pub(crate) certificate: Vec<i64>,
    pub(crate) complete: bool,
    pub(crate) visited: u64,
}

/// Runs the split search; the constant labeling is the incumbent.
pub(crate) fn run(ctx: &H1Context<'_>, deadline: Option<Instant>) -> ExhaustiveOutcome {
    let k = ctx.complex();
    let n = k.vertex_count();
    let start = ctx.betti1();
    let zeros = vec![0i64; n];
    if start == 0 {
        return ExhaustiveOutcome { best: 0, certificate: zeros, complete: true, visited: 1 };
    }
    let en = Enumerator::new(k);
    let depth = SPLIT_DEPTH.min(n);
    let mut splitter = BestFinder::new(ctx, start, zeros.clone(), None);
    let prefixes = en.prefixes(depth, &mut splitter);

    let results: Vec<(usize, Vec<i64>, Walk, u64)> = prefixes
        .par_iter()
        .map(|prefix| {
            let mut finder = BestFinder::new(ctx, start, zeros.clone(), deadline);
            let walk = en.walk_from(prefix, depth, &mut finder);
            (finder.best, finder.certificate, walk, finder.visited)
        })
        .collect();

    let mut out = ExhaustiveOutcome { best: start, certificate: zeros, complete: true, visited: 1 };
    for (best, cert, walk, visited) in results {
        out.visited += visited;
        if walk == Walk::Aborted {
            out.complete = false;
        }
        if best < out.best {
            out.best = best;
            out.certificate = cert;
        }
    }
    out
}
