use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::morse::MorseLabeling;

/// All permutations of `0..k` in lexicographic order.
pub(crate) fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        // next lexicographic permutation
        let Some(i) = (1..k).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..k).rev().find(|&j| current[j] > current[i - 1]).expect("pivot has a successor");
        current.swap(i - 1, j);
        current[i..].reverse();
    }
}

/// A triangulated k-torus on the grid `(ℤ/n)^k`.
///
/// Vertex ids are mixed-radix: the vertex with coordinates `(x_0, .., x_{k-1})`
/// has id `Σ x_j n^j`. Every unit cube is cut into `k!` simplices, one per
/// coordinate order, each a chain `x, x + e_{π(0)}, x + e_{π(0)} + e_{π(1)}, ..`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusComplex {
    dim: usize,
    res: usize,
    complex: SimplicialComplex,
}

impl TorusComplex {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn res(&self) -> usize {
        self.res
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn into_complex(self) -> SimplicialComplex {
        self.complex
    }

    pub fn coords(&self, v: usize) -> Vec<usize> {
        let mut x = v;
        (0..self.dim)
            .map(|_| {
                let c = x % self.res;
                x /= self.res;
                c
            })
            .collect()
    }

    /// Recognizes a complex produced by [`generate_torus`] (circles included, as 1-tori).
    pub fn recognize(k: &SimplicialComplex) -> Option<Self> {
        let v = k.vertex_count();
        let top = usize::try_from(k.dim()).ok()?;
        if top == 0 {
            return None;
        }
        let dim = top;
        let res = (3..=v).find(|&n| n.checked_pow(dim as u32) == Some(v))?;
        let t = generate_torus(dim, res).ok()?;
        (t.complex == *k).then_some(t)
    }
}

/// Freudenthal triangulation of the `dim`-torus with `res` vertices per axis.
pub fn generate_torus(dim: usize, res: usize) -> Result<TorusComplex> {
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    if res < 3 {
        return Err(Error::ResolutionTooSmall(res));
    }
    let vertex_count = res.pow(dim as u32);
    let stride: Vec<usize> = (0..dim).map(|j| res.pow(j as u32)).collect();
    let step = |v: usize, axis: usize| -> usize {
        let c = v / stride[axis] % res;
        if c + 1 == res {
            v - c * stride[axis]
        } else {
            v + stride[axis]
        }
    };
    let orders = permutations(dim);
    let mut tops: Vec<Simplex> = Vec::with_capacity(vertex_count * orders.len());
    for base in 0..vertex_count {
        for order in &orders {
            let mut chain = Vec::with_capacity(dim + 1);
            let mut v = base;
            chain.push(v);
            for &axis in order {
                v = step(v, axis);
                chain.push(v);
            }
            tops.push(chain);
        }
    }
    let complex = SimplicialComplex::build(&tops, vertex_count)?;
    Ok(TorusComplex { dim, res, complex })
}

/// The tent `min(r, n - r)` of the coordinate `r` along `axis`.
pub fn tent_labeling(torus: &TorusComplex, axis: usize) -> Result<MorseLabeling> {
    if axis >= torus.dim {
        return Err(Error::BadAxis { axis, dim: torus.dim });
    }
    let n = torus.res;
    let labels = (0..torus.complex.vertex_count())
        .map(|v| {
            let r = torus.coords(v)[axis];
            r.min(n - r) as i64
        })
        .collect();
    Ok(MorseLabeling::new(labels))
}
