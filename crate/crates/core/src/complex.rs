//! Finite abstract simplicial complexes on dense vertex ids.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// A simplex is a strictly increasing tuple of vertex ids.
pub type Simplex = Vec<usize>;

/// An immutable, face-closed simplicial complex on vertices `0..vertex_count`.
///
/// Simplices are grouped by dimension and kept sorted, so two complexes with
/// the same simplices compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    /// `by_dim[d]` holds the sorted d-simplices; `by_dim[0]` is `[[0], [1], ...]`.
    by_dim: Vec<Vec<Simplex>>,
    adjacency: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Builds the face closure of `maximal_simplices` on `vertex_count` vertices.
    ///
    /// Entries of a tuple may come in any order but must be distinct. Vertices
    /// not mentioned by any tuple are kept as isolated 0-simplices.
    pub fn build<S: AsRef<[usize]>>(maximal_simplices: &[S], vertex_count: usize) -> Result<Self> {
        let mut tops: BTreeSet<Simplex> = BTreeSet::new();
        for raw in maximal_simplices {
            let raw = raw.as_ref();
            if raw.is_empty() {
                continue;
            }
            let mut s = raw.to_vec();
            s.sort_unstable();
            if let Some(&v) = s.iter().find(|&&v| v >= vertex_count) {
                return Err(Error::VertexOutOfRange { vertex: v, vertex_count });
            }
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::DegenerateSimplex(raw.to_vec()));
            }
            tops.insert(s);
        }

        let max_len = tops.iter().map(Vec::len).max().unwrap_or(1).max(1);
        let mut sets: Vec<BTreeSet<Simplex>> = vec![BTreeSet::new(); max_len];
        for v in 0..vertex_count {
            sets[0].insert(vec![v]);
        }
        for top in &tops {
            if sets[top.len() - 1].contains(top) {
                continue;
            }
            let n = top.len();
            for mask in 1u64..(1u64 << n) {
                let face: Simplex = (0..n).filter(|&j| mask >> j & 1 == 1).map(|j| top[j]).collect();
                sets[face.len() - 1].insert(face);
            }
        }
        while sets.len() > 1 && sets.last().is_some_and(BTreeSet::is_empty) {
            sets.pop();
        }
        let by_dim: Vec<Vec<Simplex>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        Ok(Self::from_sorted(vertex_count, by_dim))
    }

    /// Assembles a complex from already face-closed, sorted simplex lists.
    pub(crate) fn from_sorted(vertex_count: usize, mut by_dim: Vec<Vec<Simplex>>) -> Self {
        if by_dim.is_empty() {
            by_dim.push(Vec::new());
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        if let Some(edges) = by_dim.get(1) {
            for e in edges {
                adjacency[e[0]].push(e[1]);
                adjacency[e[1]].push(e[0]);
            }
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Self { vertex_count, by_dim, adjacency }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Dimension of the complex; `-1` for the empty complex.
    pub fn dim(&self) -> isize {
        if self.vertex_count == 0 {
            return -1;
        }
        self.by_dim.len() as isize - 1
    }

    /// Sorted simplices of dimension `d` (empty if there are none).
    pub fn simplices_of_dim(&self, d: usize) -> &[Simplex] {
        self.by_dim.get(d).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn edges(&self) -> &[Simplex] {
        self.simplices_of_dim(1)
    }

    pub fn triangles(&self) -> &[Simplex] {
        self.simplices_of_dim(2)
    }

    /// All simplices, lowest dimension first.
    pub fn simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.by_dim.iter().flatten()
    }

    pub fn simplex_count(&self) -> usize {
        self.by_dim.iter().map(Vec::len).sum()
    }

    /// Number of simplices in each dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        if self.vertex_count == 0 {
            return Vec::new();
        }
        self.by_dim.iter().map(Vec::len).collect()
    }

    pub fn contains(&self, simplex: &[usize]) -> bool {
        if simplex.is_empty() {
            return false;
        }
        self.by_dim
            .get(simplex.len() - 1)
            .is_some_and(|list| list.binary_search_by(|s| s.as_slice().cmp(simplex)).is_ok())
    }

    /// Sorted neighbours of `v` in the 1-skeleton.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// The maximal simplices (those that are not a proper face of another).
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        let mut out = Vec::new();
        for d in 0..self.by_dim.len() {
            let cofaces = self.by_dim.get(d + 1);
            for s in &self.by_dim[d] {
                let covered = cofaces.is_some_and(|up| {
                    // a d-simplex is a face of some (d+1)-simplex iff it can be
                    // extended by one vertex that is adjacent to all of it
                    self.adjacency[s[0]].iter().any(|&w| {
                        if s.contains(&w) {
                            return false;
                        }
                        let mut t = s.clone();
                        let pos = t.partition_point(|&x| x < w);
                        t.insert(pos, w);
                        up.binary_search(&t).is_ok()
                    })
                });
                if !covered {
                    out.push(s.clone());
                }
            }
        }
        out
    }

    /// Alternating sum of simplex counts.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().iter().enumerate().map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) }).sum()
    }

    /// Components of the 1-skeleton as sorted vertex sets, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.vertex_count);
        for e in self.edges() {
            uf.union(e[0], e[1]);
        }
        uf.groups()
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count > 0 && self.connected_components().len() == 1
    }

    /// Breadth-first distances from `root` in the 1-skeleton (`None` if unreachable).
    pub fn distances_from(&self, root: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count];
        let mut queue = std::collections::VecDeque::new();
        dist[root] = Some(0);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// The full subcomplex spanned by `vertices` (duplicates and order are ignored).
    pub fn induced_subcomplex(&self, vertices: &[usize]) -> Subcomplex<'_> {
        let mut in_set = vec![false; self.vertex_count];
        for &v in vertices {
            if v < self.vertex_count {
                in_set[v] = true;
            }
        }
        Subcomplex::from_mask(self, &in_set)
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let tops: Vec<Simplex> =
            self.maximal_simplices().into_iter().map(|s| s.into_iter().map(|v| perm[v]).collect()).collect();
        Self::build(&tops, self.vertex_count)
    }
}

/// A full (induced) subcomplex of a parent complex.
///
/// The subcomplex is stored twice: as its parent-id vertex set and as a
/// standalone complex on local ids `0..k`, with `injection[local] = parent id`.
#[derive(Clone, Debug)]
pub struct Subcomplex<'a> {
    parent: &'a SimplicialComplex,
    injection: Vec<usize>,
    local: SimplicialComplex,
}

impl<'a> Subcomplex<'a> {
    pub(crate) fn from_mask(parent: &'a SimplicialComplex, in_set: &[bool]) -> Self {
        let injection: Vec<usize> = (0..parent.vertex_count).filter(|&v| in_set[v]).collect();
        let mut local_id = vec![usize::MAX; parent.vertex_count];
        for (i, &v) in injection.iter().enumerate() {
            local_id[v] = i;
        }
        // the injection is increasing, so mapping preserves sort order
        let by_dim: Vec<Vec<Simplex>> = parent
            .by_dim
            .iter()
            .map(|list| {
                list.iter()
                    .filter(|s| s.iter().all(|&v| in_set[v]))
                    .map(|s| s.iter().map(|&v| local_id[v]).collect())
                    .collect::<Vec<Simplex>>()
            })
            .take_while(|list| !list.is_empty())
            .collect();
        let local = SimplicialComplex::from_sorted(injection.len(), by_dim);
        Self { parent, injection, local }
    }

    pub fn parent(&self) -> &'a SimplicialComplex {
        self.parent
    }

    /// Parent ids of the vertices, increasing.
    pub fn vertices(&self) -> &[usize] {
        &self.injection
    }

    pub fn vertex_injection(&self) -> &[usize] {
        &self.injection
    }

    /// The subcomplex as a standalone complex on local ids.
    pub fn as_complex(&self) -> &SimplicialComplex {
        &self.local
    }

    pub fn is_empty(&self) -> bool {
        self.injection.is_empty()
    }

    /// Simplices in parent vertex ids.
    pub fn parent_simplices(&self) -> impl Iterator<Item = Simplex> + '_ {
        self.local.simplices().map(|s| s.iter().map(|&v| self.injection[v]).collect())
    }

    /// Components as sets of parent vertex ids, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        self.local
            .connected_components()
            .into_iter()
            .map(|c| c.into_iter().map(|v| self.injection[v]).collect())
            .collect()
    }
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    /// Classes as sorted lists, ordered by smallest member.
    pub(crate) fn groups(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut slot = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for v in 0..n {
            let r = self.find(v);
            if slot[r] == usize::MAX {
                slot[r] = out.len();
                out.push(Vec::new());
            }
            out[slot[r]].push(v);
        }
        out
    }
}
