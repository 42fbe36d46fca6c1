use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::morse::MorseLabeling;

/// The staircase triangulation of `|K1| × |K2|`.
///
/// The pair `(x, y)` has id `x * |V(K2)| + y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductComplex {
    complex: SimplicialComplex,
    left_count: usize,
    right_count: usize,
}

impl ProductComplex {
    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn into_complex(self) -> SimplicialComplex {
        self.complex
    }

    pub fn vertex(&self, x: usize, y: usize) -> usize {
        x * self.right_count + y
    }

    pub fn left_of(&self, v: usize) -> usize {
        v / self.right_count
    }

    pub fn right_of(&self, v: usize) -> usize {
        v % self.right_count
    }

    pub fn left_count(&self) -> usize {
        self.left_count
    }

    pub fn right_count(&self) -> usize {
        self.right_count
    }
}

/// Monotone lattice paths from `(0, 0)` to `(p, q)` as index pairs.
fn staircases(p: usize, q: usize) -> Vec<Vec<(usize, usize)>> {
    fn walk(
        i: usize,
        j: usize,
        p: usize,
        q: usize,
        path: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        path.push((i, j));
        if i == p && j == q {
            out.push(path.clone());
        }
        if i < p {
            walk(i + 1, j, p, q, path, out);
        }
        if j < q {
            walk(i, j + 1, p, q, path, out);
        }
        path.pop();
    }
    let mut out = Vec::new();
    walk(0, 0, p, q, &mut Vec::new(), &mut out);
    out
}

/// Triangulates every product cell `σ × τ` of maximal simplices by the
/// monotone paths through the grid of their (increasing) vertex lists.
pub fn product_complex(k1: &SimplicialComplex, k2: &SimplicialComplex) -> ProductComplex {
    let (n1, n2) = (k1.vertex_count(), k2.vertex_count());
    let mut tops: Vec<Simplex> = Vec::new();
    let left = k1.maximal_simplices();
    let right = k2.maximal_simplices();
    for s in &left {
        for t in &right {
            for path in staircases(s.len() - 1, t.len() - 1) {
                tops.push(path.iter().map(|&(i, j)| s[i] * n2 + t[j]).collect());
            }
        }
    }
    let complex = SimplicialComplex::build(&tops, n1 * n2).expect("product vertices are distinct and in range");
    ProductComplex { complex, left_count: n1, right_count: n2 }
}

/// `(x, y) ↦ f1(x)`.
pub fn pullback_labeling(p: &ProductComplex, f1: &MorseLabeling) -> Result<MorseLabeling> {
    if f1.len() != p.left_count {
        return Err(Error::LabelCountMismatch { expected: p.left_count, got: f1.len() });
    }
    let labels = (0..p.complex.vertex_count()).map(|v| f1.get(p.left_of(v))).collect();
    Ok(MorseLabeling::new(labels))
}
