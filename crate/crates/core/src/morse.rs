//! Simplicial labelings `f: K → ℝ`, their slabs and levels, the quotient graph
//! `Q_f`, and the homological connected width rank.
//!
//! For a simplicial map to the real line with integer vertices, the preimage of
//! the vertex `i` is the full subcomplex on vertices labeled `i` (a *level*) and
//! the preimage of `[i, i+1]` is the full subcomplex on labels `{i, i+1}` (a
//! *slab*). Slabs are indexed by their lower label and range over
//! `min f - 1 ..= max f`, so the two boundary slabs coincide with the extreme levels.

use serde::Serialize;

use crate::complex::{Simplex, SimplicialComplex, Subcomplex, UnionFind};
use crate::error::{Error, Result};
use crate::homology::{FieldSpec, H1Context};

/// Integer label per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct MorseLabeling(Vec<i64>);

impl MorseLabeling {
    pub fn new(labels: Vec<i64>) -> Self {
        Self(labels)
    }

    pub fn constant(vertex_count: usize, value: i64) -> Self {
        Self(vec![value; vertex_count])
    }

    /// Wraps `labels` after checking them against `k`.
    pub fn checked(k: &SimplicialComplex, labels: Vec<i64>) -> Result<Self> {
        let f = Self(labels);
        let violations = validate_labeling(k, &f)?;
        if violations.is_empty() {
            Ok(f)
        } else {
            Err(Error::InvalidLabeling(violations))
        }
    }

    pub fn labels(&self) -> &[i64] {
        &self.0
    }

    pub fn into_labels(self) -> Vec<i64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> i64 {
        self.0[v]
    }

    pub fn min_label(&self) -> Option<i64> {
        self.0.iter().copied().min()
    }

    pub fn max_label(&self) -> Option<i64> {
        self.0.iter().copied().max()
    }

    /// `f + c`.
    pub fn shifted(&self, c: i64) -> Self {
        Self(self.0.iter().map(|x| x + c).collect())
    }

    /// `-f`.
    pub fn negated(&self) -> Self {
        Self(self.0.iter().map(|x| -x).collect())
    }

    /// The translate with minimum label 0.
    pub fn normalized(&self) -> Self {
        self.shifted(-self.min_label().unwrap_or(0))
    }
}

/// All simplices whose labels span more than one unit.
///
/// Only fails when the labeling has the wrong length; violations are returned as data.
pub fn validate_labeling(k: &SimplicialComplex, f: &MorseLabeling) -> Result<Vec<Simplex>> {
    if f.len() != k.vertex_count() {
        return Err(Error::LabelCountMismatch { expected: k.vertex_count(), got: f.len() });
    }
    let out = k
        .simplices()
        .filter(|s| {
            let lo = s.iter().map(|&v| f.get(v)).min().unwrap_or(0);
            let hi = s.iter().map(|&v| f.get(v)).max().unwrap_or(0);
            hi - lo > 1
        })
        .cloned()
        .collect();
    Ok(out)
}

fn require_valid(k: &SimplicialComplex, f: &MorseLabeling) -> Result<()> {
    let violations = validate_labeling(k, f)?;
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidLabeling(violations))
    }
}

fn mask_where(k: &SimplicialComplex, f: &MorseLabeling, keep: impl Fn(i64) -> bool) -> Vec<bool> {
    (0..k.vertex_count()).map(|v| keep(f.get(v))).collect()
}

/// `f⁻¹(i)`: the full subcomplex on vertices labeled `i`.
pub fn level<'a>(k: &'a SimplicialComplex, f: &MorseLabeling, i: i64) -> Subcomplex<'a> {
    Subcomplex::from_mask(k, &mask_where(k, f, |x| x == i))
}

/// `f⁻¹[i, i+1]`: the full subcomplex on vertices labeled `i` or `i + 1`.
pub fn slab<'a>(k: &'a SimplicialComplex, f: &MorseLabeling, i: i64) -> Subcomplex<'a> {
    Subcomplex::from_mask(k, &mask_where(k, f, |x| x == i || x == i + 1))
}

/// Components of the full subgraph on vertices with `keep(label)`, by smallest member.
fn components_where(k: &SimplicialComplex, f: &MorseLabeling, keep: impl Fn(i64) -> bool) -> Vec<Vec<usize>> {
    let n = k.vertex_count();
    let mut uf = UnionFind::new(n);
    for e in k.edges() {
        if keep(f.get(e[0])) && keep(f.get(e[1])) {
            uf.union(e[0], e[1]);
        }
    }
    uf.groups().into_iter().filter(|g| keep(f.get(g[0]))).collect()
}

/// Slab components of `f⁻¹[i, i+1]`.
pub fn slab_components(k: &SimplicialComplex, f: &MorseLabeling, i: i64) -> Vec<Vec<usize>> {
    components_where(k, f, |x| x == i || x == i + 1)
}

/// Level components of `f⁻¹(i)`.
pub fn level_components(k: &SimplicialComplex, f: &MorseLabeling, i: i64) -> Vec<Vec<usize>> {
    components_where(k, f, |x| x == i)
}

/// A vertex of `Q_f`: one component of a slab.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QVertex {
    pub slab: i64,
    pub component: usize,
    pub members: Vec<usize>,
}

/// An edge of `Q_f`: one component of a level, joining the slab components
/// below (`ends.0`, slab `level - 1`) and above (`ends.1`, slab `level`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QEdge {
    pub level: i64,
    pub component: usize,
    pub members: Vec<usize>,
    pub ends: (usize, usize),
}

/// The quotient graph `Q_f` together with the maps `θ` from vertices of `K`.
#[derive(Clone, Debug)]
pub struct QuotientGraph {
    pub vertices: Vec<QVertex>,
    pub edges: Vec<QEdge>,
    lowest_slab: i64,
    /// `slab_of[s][v]`: index of the q-vertex containing `v` in slab `lowest_slab + s`.
    slab_of: Vec<Vec<Option<usize>>>,
    level_of: Vec<Option<usize>>,
}

impl QuotientGraph {
    /// `θ` on slab `slab`: the q-vertex containing `v`, if `v` lies in that slab.
    pub fn theta_vertex(&self, slab: i64, v: usize) -> Option<usize> {
        let s = usize::try_from(slab - self.lowest_slab).ok()?;
        self.slab_of.get(s)?.get(v).copied().flatten()
    }

    /// `θ` on levels: the q-edge of the level component containing `v`.
    pub fn theta_level(&self, v: usize) -> Option<usize> {
        self.level_of.get(v).copied().flatten()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `#edges - #vertices + #components`.
    pub fn betti1(&self) -> usize {
        let mut uf = UnionFind::new(self.vertices.len());
        let merged = self.edges.iter().filter(|e| uf.union(e.ends.0, e.ends.1)).count();
        let components = self.vertices.len() - merged;
        self.edges.len() + components - self.vertices.len()
    }

    pub fn class(&self) -> QfClass {
        QfClass::from_betti1(self.betti1())
    }
}

/// First Betti number of `Q_f`.
pub fn qf_betti1(q: &QuotientGraph) -> usize {
    q.betti1()
}

/// Builds `Q_f` for a valid labeling of a connected complex.
pub fn quotient_graph(k: &SimplicialComplex, f: &MorseLabeling) -> Result<QuotientGraph> {
    require_valid(k, f)?;
    if !k.is_connected() {
        return Err(Error::NotConnected);
    }
    let (lo, hi) = (f.min_label().unwrap_or(0), f.max_label().unwrap_or(0));
    let n = k.vertex_count();
    let lowest_slab = lo - 1;

    let mut vertices = Vec::new();
    let mut slab_of = Vec::new();
    for i in lowest_slab..=hi {
        let mut lookup = vec![None; n];
        for (c, members) in slab_components(k, f, i).into_iter().enumerate() {
            for &v in &members {
                lookup[v] = Some(vertices.len());
            }
            vertices.push(QVertex { slab: i, component: c, members });
        }
        slab_of.push(lookup);
    }

    let mut edges = Vec::new();
    let mut level_of = vec![None; n];
    for i in lo..=hi {
        for (c, members) in level_components(k, f, i).into_iter().enumerate() {
            let v = members[0];
            let below = slab_of[(i - 1 - lowest_slab) as usize][v].expect("level lies in the slab below");
            let above = slab_of[(i - lowest_slab) as usize][v].expect("level lies in the slab above");
            for &m in &members {
                level_of[m] = Some(edges.len());
            }
            edges.push(QEdge { level: i, component: c, members, ends: (below, above) });
        }
    }
    Ok(QuotientGraph { vertices, edges, lowest_slab, slab_of, level_of })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum QfClass {
    Tree,
    Circle,
    Other,
}

impl QfClass {
    pub fn from_betti1(b: usize) -> Self {
        match b {
            0 => QfClass::Tree,
            1 => QfClass::Circle,
            _ => QfClass::Other,
        }
    }
}

/// Image rank of one slab component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SlabRank {
    #[serde(rename = "i")]
    pub slab: i64,
    pub component: usize,
    pub size: usize,
    pub rank: usize,
}

/// The homological connected width rank of one labeling, with its evidence.
///
/// `max_rank` uses the rank of `H1(C; F) → H1(K; F)` in place of the rank of the
/// image of `π1(C)` in `π1(K)`. The two agree when `π1(K)` is abelian and the
/// field sees all of its torsion; otherwise the homological value is a lower bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WidthReport {
    pub field: FieldSpec,
    pub per_slab: Vec<SlabRank>,
    pub max_rank: usize,
    pub argmax: Vec<(i64, usize)>,
    pub qf_vertices: usize,
    pub qf_edges: usize,
    pub qf_betti1: usize,
    pub qf_class: QfClass,
}

#[derive(Serialize)]
struct QfJson {
    vertices: usize,
    edges: usize,
    betti1: usize,
    class: QfClass,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    field: String,
    max_rank: usize,
    qf: QfJson,
    slabs: &'a [SlabRank],
    measure: &'static str,
}

impl WidthReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ReportJson {
            field: self.field.to_string(),
            max_rank: self.max_rank,
            qf: QfJson {
                vertices: self.qf_vertices,
                edges: self.qf_edges,
                betti1: self.qf_betti1,
                class: self.qf_class,
            },
            slabs: &self.per_slab,
            measure: "homological",
        })
        .expect("report serializes")
    }
}

/// Image ranks of every slab component, ordered by slab then component id.
///
/// Assumes `f` is valid and non-empty.
pub fn slab_ranks(ctx: &H1Context<'_>, f: &MorseLabeling) -> Vec<SlabRank> {
    let k = ctx.complex();
    let (lo, hi) = (f.min_label().unwrap_or(0), f.max_label().unwrap_or(0));
    (lo - 1..=hi)
        .flat_map(|i| {
            slab_components(k, f, i).into_iter().enumerate().map(move |(c, members)| SlabRank {
                slab: i,
                component: c,
                size: members.len(),
                rank: ctx.image_rank_of_vertex_set(&members),
            })
        })
        .collect()
}

/// Evaluates the homological connected width rank of `(k, f)` over `field`.
pub fn hcwr_value(k: &SimplicialComplex, f: &MorseLabeling, field: FieldSpec) -> Result<WidthReport> {
    let ctx = H1Context::new(k, field);
    hcwr_with(&ctx, f)
}

/// [`hcwr_value`] against a prepared context.
pub fn hcwr_with(ctx: &H1Context<'_>, f: &MorseLabeling) -> Result<WidthReport> {
    let k = ctx.complex();
    let q = quotient_graph(k, f)?;
    let per_slab = slab_ranks(ctx, f);
    let max_rank = per_slab.iter().map(|s| s.rank).max().unwrap_or(0);
    let argmax = per_slab.iter().filter(|s| s.rank == max_rank).map(|s| (s.slab, s.component)).collect();
    let qf_betti1 = q.betti1();
    Ok(WidthReport {
        field: ctx.field(),
        per_slab,
        max_rank,
        argmax,
        qf_vertices: q.vertex_count(),
        qf_edges: q.edge_count(),
        qf_betti1,
        qf_class: QfClass::from_betti1(qf_betti1),
    })
}
