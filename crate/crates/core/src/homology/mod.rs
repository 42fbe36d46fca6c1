//! First homology over ℚ and prime fields: boundary matrices, Betti numbers and
//! the rank of `H1(C) → H1(K)` for subcomplexes `C ⊆ K`.
//!
//! Only the 2-skeleton matters here. The image of `H1(C)` in `H1(K)` is
//! `(Z1(C) + B1(K)) / B1(K)`, so it depends on the edges of `C` alone: a basis
//! of `Z1(C)` is read off a spanning forest (one fundamental cycle per non-tree
//! edge) and reduced against a fixed echelon basis of `B1(K)`.

mod field;
pub mod linalg;

use std::collections::HashMap;
use std::sync::OnceLock;

use num_bigint::BigInt;

pub use field::{FieldSpec, Prime};
pub use linalg::{rank, SparseIntMatrix, SparseVec};

use crate::complex::{SimplicialComplex, Subcomplex};
use crate::error::{Error, Result};
use linalg::{big_echelon, Echelon, FracFree, ModP};

/// The boundary maps `d1: C1 → C0` and `d2: C2 → C1` with their index maps.
///
/// Rows and columns follow the sorted simplex order of the complex; simplices are
/// oriented by increasing vertex order and omitting the j-th vertex carries `(-1)^j`.
#[derive(Clone, Debug)]
pub struct BoundaryPair {
    pub d1: SparseIntMatrix,
    pub d2: SparseIntMatrix,
    pub edge_index: HashMap<(usize, usize), usize>,
    pub triangle_index: HashMap<(usize, usize, usize), usize>,
}

impl BoundaryPair {
    pub fn new(k: &SimplicialComplex) -> Self {
        let edge_index = edge_index(k);
        let triangle_index = k.triangles().iter().enumerate().map(|(i, t)| ((t[0], t[1], t[2]), i)).collect();
        let d1 = SparseIntMatrix::from_columns(
            k.vertex_count(),
            k.edges().iter().map(|e| vec![(e[0], -1), (e[1], 1)]).collect(),
        );
        let d2 = SparseIntMatrix::from_columns(k.edges().len(), triangle_columns(k, &edge_index));
        Self { d1, d2, edge_index, triangle_index }
    }

    /// `d1 · d2 = 0`.
    pub fn chain_condition_holds(&self) -> bool {
        self.d1.mul(&self.d2).is_some_and(|m| m.is_zero())
    }
}

fn edge_index(k: &SimplicialComplex) -> HashMap<(usize, usize), usize> {
    k.edges().iter().enumerate().map(|(i, e)| ((e[0], e[1]), i)).collect()
}

fn triangle_columns(k: &SimplicialComplex, edge_index: &HashMap<(usize, usize), usize>) -> Vec<SparseVec> {
    k.triangles()
        .iter()
        .map(|t| {
            let (a, b, c) = (t[0], t[1], t[2]);
            let mut col = vec![(edge_index[&(b, c)], 1), (edge_index[&(a, c)], -1), (edge_index[&(a, b)], 1)];
            col.sort_unstable_by_key(|&(i, _)| i);
            col
        })
        .collect()
}

/// First Betti number of `k` over `field`.
pub fn betti1(k: &SimplicialComplex, field: FieldSpec) -> usize {
    H1Context::new(k, field).betti1()
}

/// Rank over `field` of the image of `H1(sub)` in `H1(parent)`.
pub fn image_rank_h1(sub: &Subcomplex<'_>, field: FieldSpec) -> Result<usize> {
    H1Context::new(sub.parent(), field).image_rank(sub)
}

enum BoundaryBasis {
    Prime(Echelon<ModP>),
    Rational {
        small: Option<Echelon<FracFree<i128>>>,
        big: OnceLock<Echelon<FracFree<BigInt>>>,
        columns: Vec<SparseVec>,
    },
}

/// Precomputed data for repeated H1 queries against one ambient complex.
///
/// Holds an echelon basis of the boundary space `B1(K)` so each image-rank query
/// only reduces the cycles of the queried piece.
pub struct H1Context<'a> {
    complex: &'a SimplicialComplex,
    field: FieldSpec,
    edge_index: HashMap<(usize, usize), usize>,
    basis: BoundaryBasis,
    betti1: usize,
}

impl<'a> H1Context<'a> {
    pub fn new(complex: &'a SimplicialComplex, field: FieldSpec) -> Self {
        let edge_index = edge_index(complex);
        let width = complex.edges().len();
        let columns = triangle_columns(complex, &edge_index);
        let basis = match field {
            FieldSpec::PrimeField(p) => BoundaryBasis::Prime(
                Echelon::from_vectors(ModP::new(p.get()), width, &columns).expect("no overflow mod p"),
            ),
            FieldSpec::Rationals => {
                let small = Echelon::from_vectors(FracFree::<i128>::new(), width, &columns).ok();
                let big = OnceLock::new();
                if small.is_none() {
                    let _ = big.set(big_echelon(width, &columns));
                }
                BoundaryBasis::Rational { small, big, columns }
            }
        };
        let boundary_rank = match &basis {
            BoundaryBasis::Prime(e) => e.rank(),
            BoundaryBasis::Rational { small: Some(e), .. } => e.rank(),
            BoundaryBasis::Rational { big, .. } => big.get().map_or(0, Echelon::rank),
        };
        // rank d1 = V - #components over every field
        let cycle_dim = width + complex.connected_components().len() - complex.vertex_count();
        let betti1 = cycle_dim - boundary_rank;
        Self { complex, field, edge_index, basis, betti1 }
    }

    pub fn complex(&self) -> &'a SimplicialComplex {
        self.complex
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn betti1(&self) -> usize {
        self.betti1
    }

    /// Image rank of `H1(sub)`; `sub` may come from any complex whose edges all lie in this one.
    pub fn image_rank(&self, sub: &Subcomplex<'_>) -> Result<usize> {
        let n = self.complex.vertex_count();
        let verts = sub.vertices();
        if verts.iter().any(|&v| v >= n) {
            return Err(Error::NotASubcomplex);
        }
        let inj = sub.vertex_injection();
        let mut edges = Vec::with_capacity(sub.as_complex().edges().len());
        for e in sub.as_complex().edges() {
            let (a, b) = (inj[e[0]], inj[e[1]]);
            let key = (a.min(b), a.max(b));
            if !self.edge_index.contains_key(&key) {
                return Err(Error::NotASubcomplex);
            }
            edges.push(key);
        }
        Ok(self.image_rank_of_graph(verts, &edges, usize::MAX))
    }

    /// Image rank of the full subcomplex on `vertices`.
    pub fn image_rank_of_vertex_set(&self, vertices: &[usize]) -> usize {
        self.image_rank_of_vertex_set_capped(vertices, usize::MAX)
    }

    /// Like [`Self::image_rank_of_vertex_set`], but stops counting at `limit`.
    pub fn image_rank_of_vertex_set_capped(&self, vertices: &[usize], limit: usize) -> usize {
        let mut member = vec![false; self.complex.vertex_count()];
        for &v in vertices {
            member[v] = true;
        }
        let mut edges = Vec::new();
        for &v in vertices {
            for &w in self.complex.neighbors(v) {
                if w > v && member[w] {
                    edges.push((v, w));
                }
            }
        }
        self.image_rank_of_graph(vertices, &edges, limit)
    }

    /// Image rank of the graph `(vertices, edges)` whose edges are edges of the
    /// ambient complex given as `(low, high)` pairs.
    pub fn image_rank_of_graph(&self, vertices: &[usize], edges: &[(usize, usize)], limit: usize) -> usize {
        if limit == 0 || self.betti1 == 0 {
            return 0;
        }
        let cycles = self.fundamental_cycles(vertices, edges);
        let limit = limit.min(self.betti1);
        match &self.basis {
            BoundaryBasis::Prime(e) => e.extra_rank(&cycles, limit).expect("no overflow mod p"),
            BoundaryBasis::Rational { small, big, columns } => {
                if let Some(s) = small {
                    if let Ok(r) = s.extra_rank(&cycles, limit) {
                        return r;
                    }
                }
                let width = self.complex.edges().len();
                big.get_or_init(|| big_echelon(width, columns))
                    .extra_rank(&cycles, limit)
                    .expect("arbitrary precision cannot overflow")
            }
        }
    }

    /// One signed cycle per non-tree edge of a breadth-first spanning forest,
    /// in the ambient edge coordinates.
    fn fundamental_cycles(&self, vertices: &[usize], edges: &[(usize, usize)]) -> Vec<SparseVec> {
        let local: HashMap<usize, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let m = vertices.len();
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); m];
        for (ei, &(a, b)) in edges.iter().enumerate() {
            let (la, lb) = (local[&a], local[&b]);
            adj[la].push((lb, ei));
            adj[lb].push((la, ei));
        }
        let mut parent = vec![usize::MAX; m];
        let mut depth = vec![0usize; m];
        let mut tree_edge = vec![false; edges.len()];
        let mut seen = vec![false; m];
        let mut queue = std::collections::VecDeque::new();
        for root in 0..m {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for &(w, ei) in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        parent[w] = u;
                        depth[w] = depth[u] + 1;
                        tree_edge[ei] = true;
                        queue.push_back(w);
                    }
                }
            }
        }

        let signed = |from: usize, to: usize| -> (usize, i64) {
            let (a, b) = (vertices[from], vertices[to]);
            if a < b {
                (self.edge_index[&(a, b)], 1)
            } else {
                (self.edge_index[&(b, a)], -1)
            }
        };
        let mut cycles = Vec::new();
        for (ei, &(a, b)) in edges.iter().enumerate() {
            if tree_edge[ei] {
                continue;
            }
            // a -> b, then b up to the common ancestor, then down to a
            let (mut x, mut y) = (local[&b], local[&a]);
            let mut up = vec![signed(y, x)];
            let mut down = Vec::new();
            while depth[x] > depth[y] {
                up.push(signed(x, parent[x]));
                x = parent[x];
            }
            while depth[y] > depth[x] {
                down.push(signed(parent[y], y));
                y = parent[y];
            }
            while x != y {
                up.push(signed(x, parent[x]));
                x = parent[x];
                down.push(signed(parent[y], y));
                y = parent[y];
            }
            up.extend(down);
            up.sort_unstable_by_key(|&(i, _)| i);
            cycles.push(up);
        }
        cycles
    }
}
