//! Slow, simple reference implementations used to cross-check the library.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use groupwidth::{FieldSpec, MorseLabeling, SimplicialComplex};

/// Dense rank over Q by Bareiss elimination on big integers.
pub fn bareiss_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let (nr, nc) = (m.len(), m.first().map_or(0, Vec::len));
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..nc {
        let Some(p) = (r..nr).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        for i in r + 1..nr {
            for j in c + 1..nc {
                let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
        if r == nr {
            break;
        }
    }
    r
}

/// Dense rank modulo a prime.
pub fn rank_mod_p(rows: &[Vec<i64>], p: i64) -> usize {
    let mut m: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|&x| x.rem_euclid(p)).collect()).collect();
    let (nr, nc) = (m.len(), m.first().map_or(0, Vec::len));
    let inv = |a: i64| -> i64 {
        let (mut r, mut b, mut e) = (1i64, a, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    };
    let mut r = 0;
    for c in 0..nc {
        let Some(piv) = (r..nr).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, piv);
        let s = inv(m[r][c]);
        for x in m[r].iter_mut() {
            *x = *x * s % p;
        }
        for i in 0..nr {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(pivot_row) {
                    *x = (*x - f * y).rem_euclid(p);
                }
            }
        }
        r += 1;
    }
    r
}

pub fn rank_over(rows: &[Vec<i64>], field: FieldSpec) -> usize {
    match field {
        FieldSpec::Rationals => bareiss_rank(rows),
        FieldSpec::PrimeField(p) => rank_mod_p(rows, p.get() as i64),
    }
}

/// Edges and triangles of `k` with their boundary rows, built from scratch.
pub struct Chains {
    pub edges: Vec<(usize, usize)>,
    pub triangles: Vec<(usize, usize, usize)>,
    /// `d1` as a V × E matrix.
    pub d1: Vec<Vec<i64>>,
    /// `d2` transposed: one row per triangle, in edge coordinates.
    pub d2_rows: Vec<Vec<i64>>,
}

pub fn chains(k: &SimplicialComplex) -> Chains {
    let mut edges = BTreeSet::new();
    let mut triangles = BTreeSet::new();
    for s in k.simplices() {
        match s.len() {
            2 => {
                edges.insert((s[0], s[1]));
            }
            3 => {
                triangles.insert((s[0], s[1], s[2]));
            }
            _ => {}
        }
    }
    let edges: Vec<_> = edges.into_iter().collect();
    let triangles: Vec<_> = triangles.into_iter().collect();
    let pos: BTreeMap<(usize, usize), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut d1 = vec![vec![0i64; edges.len()]; k.vertex_count()];
    for (j, &(a, b)) in edges.iter().enumerate() {
        d1[a][j] -= 1;
        d1[b][j] += 1;
    }
    let d2_rows = triangles
        .iter()
        .map(|&(a, b, c)| {
            let mut row = vec![0i64; edges.len()];
            row[pos[&(b, c)]] += 1;
            row[pos[&(a, c)]] -= 1;
            row[pos[&(a, b)]] += 1;
            row
        })
        .collect();
    Chains { edges, triangles, d1, d2_rows }
}

pub fn betti1_oracle(k: &SimplicialComplex, field: FieldSpec) -> usize {
    let c = chains(k);
    if c.edges.is_empty() {
        return 0;
    }
    c.edges.len() - rank_over(&c.d1, field) - rank_over(&c.d2_rows, field)
}

/// Nullspace basis of `m` (rows × cols) over Q, scaled to integer vectors.
fn nullspace_q(m: &[Vec<i64>], cols: usize) -> Vec<Vec<i64>> {
    let mut a: Vec<Vec<BigRational>> =
        m.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let lead = a[r][c].clone();
        for x in a[r].iter_mut() {
            *x = &*x / &lead;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pivot_row = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(pivot_row) {
                    *x = &*x - &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![BigRational::zero(); cols];
            v[fc] = BigRational::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[i][fc].clone();
            }
            let den = v.iter().fold(BigInt::one(), |acc, x| num_integer::lcm(acc, x.denom().clone()));
            v.iter()
                .map(|x| {
                    let y = x * BigRational::from_integer(den.clone());
                    i64::try_from(y.to_integer()).expect("small cycle coefficients")
                })
                .collect()
        })
        .collect()
}

/// Nullspace basis of `m` modulo `p`.
fn nullspace_mod_p(m: &[Vec<i64>], cols: usize, p: i64) -> Vec<Vec<i64>> {
    let mut a: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|&x| x.rem_euclid(p)).collect()).collect();
    let inv = |x: i64| (1..p).find(|y| x * y % p == 1).expect("prime modulus");
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..a.len()).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, piv);
        let s = inv(a[r][c]);
        for x in a[r].iter_mut() {
            *x = *x * s % p;
        }
        for i in 0..a.len() {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                let pivot_row = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(pivot_row) {
                    *x = (*x - f * y).rem_euclid(p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|fc| {
            let mut v = vec![0i64; cols];
            v[fc] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = (-a[i][fc]).rem_euclid(p);
            }
            v
        })
        .collect()
}

/// dim of the image of H1 of the full subcomplex on `vertices` in H1(k),
/// from a nullspace basis of the restricted d1 and the rows of d2.
pub fn image_rank_oracle(k: &SimplicialComplex, vertices: &[usize], field: FieldSpec) -> usize {
    let c = chains(k);
    let inside: BTreeSet<usize> = vertices.iter().copied().collect();
    let local: Vec<usize> =
        (0..c.edges.len()).filter(|&j| inside.contains(&c.edges[j].0) && inside.contains(&c.edges[j].1)).collect();
    if local.is_empty() {
        return 0;
    }
    let restricted: Vec<Vec<i64>> = c.d1.iter().map(|row| local.iter().map(|&j| row[j]).collect()).collect();
    let z = match field {
        FieldSpec::Rationals => nullspace_q(&restricted, local.len()),
        FieldSpec::PrimeField(p) => nullspace_mod_p(&restricted, local.len(), p.get() as i64),
    };
    let mut stacked = c.d2_rows.clone();
    let base = rank_over(&stacked, field);
    for cyc in z {
        let mut row = vec![0i64; c.edges.len()];
        for (t, &j) in local.iter().enumerate() {
            row[j] = cyc[t];
        }
        stacked.push(row);
    }
    rank_over(&stacked, field) - base
}

/// Components of the graph induced on `vertices`, found by flood fill over the edge list.
pub fn induced_components(k: &SimplicialComplex, vertices: &[usize]) -> Vec<Vec<usize>> {
    let inside: BTreeSet<usize> = vertices.iter().copied().collect();
    let edges: Vec<(usize, usize)> =
        chains(k).edges.into_iter().filter(|(a, b)| inside.contains(a) && inside.contains(b)).collect();
    let mut left = inside.clone();
    let mut out = Vec::new();
    while let Some(&s) = left.iter().next() {
        left.remove(&s);
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let u = comp[i];
            i += 1;
            for &(a, b) in &edges {
                let w = if a == u {
                    b
                } else if b == u {
                    a
                } else {
                    continue;
                };
                if left.remove(&w) {
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Width of `(k, f)` computed slab by slab with the oracles above.
pub fn hcwr_oracle(k: &SimplicialComplex, f: &[i64], field: FieldSpec) -> usize {
    let (lo, hi) = (*f.iter().min().unwrap(), *f.iter().max().unwrap());
    let mut best = 0;
    for i in lo - 1..=hi {
        let slab: Vec<usize> = (0..f.len()).filter(|&v| f[v] == i || f[v] == i + 1).collect();
        for comp in induced_components(k, &slab) {
            best = best.max(image_rank_oracle(k, &comp, field));
        }
    }
    best
}

pub fn is_valid(k: &SimplicialComplex, f: &[i64]) -> bool {
    k.edges().iter().all(|e| (f[e[0]] - f[e[1]]).abs() <= 1)
}

/// All valid labelings with minimum 0, by assigning vertices in id order with
/// labels `0..n` and no other pruning than edge validity.
pub fn brute_force_labelings(k: &SimplicialComplex) -> Vec<Vec<i64>> {
    let n = k.vertex_count();
    let edges = chains(k).edges;
    let mut out = Vec::new();
    let mut f = vec![0i64; n];
    fn rec(v: usize, n: usize, edges: &[(usize, usize)], f: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if v == n {
            if f.contains(&0) {
                out.push(f.clone());
            }
            return;
        }
        for l in 0..n as i64 {
            f[v] = l;
            if edges.iter().all(|&(a, b)| b != v || (f[a] - l).abs() <= 1) {
                rec(v + 1, n, edges, f, out);
            }
        }
    }
    rec(0, n, &edges, &mut f, &mut out);
    out
}

/// Number of simplices of a `dim`-torus with `n` vertices per axis, by dimension.
pub fn torus_counts(dim: usize, n: usize) -> Vec<usize> {
    let v = n.pow(dim as u32);
    let fact = |m: usize| (1..=m).product::<usize>();
    // a d-face above its lowest vertex is an ordered partition of some j axes into d blocks
    (0..=dim)
        .map(|d| {
            if d == 0 {
                return v;
            }
            let mut total = 0;
            for j in d..=dim {
                let choose = fact(dim) / (fact(j) * fact(dim - j));
                total += choose * surjections(j, d);
            }
            v * total
        })
        .collect()
}

/// Surjections from a j-set onto a d-set.
fn surjections(j: usize, d: usize) -> usize {
    let fact = |m: usize| (1..=m).product::<usize>();
    let mut s: i64 = 0;
    for i in 0..=d {
        let c = (fact(d) / (fact(i) * fact(d - i))) as i64;
        let term = c * ((d - i) as i64).pow(j as u32);
        s += if i % 2 == 0 { term } else { -term };
    }
    s as usize
}

/// All labeled graphs on `n` vertices, as 1-dimensional complexes.
pub fn all_graphs(n: usize) -> impl Iterator<Item = SimplicialComplex> {
    let pairs: Vec<[usize; 2]> = (0..n).flat_map(|a| (a + 1..n).map(move |b| [a, b])).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<[usize; 2]> =
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| *e).collect();
        SimplicialComplex::build(&edges, n).unwrap()
    })
}

/// The clique complex up to dimension 2 of a graph.
pub fn flag_complex(g: &SimplicialComplex) -> SimplicialComplex {
    let n = g.vertex_count();
    let mut tops: Vec<Vec<usize>> = g.edges().to_vec();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.contains(&[a, b]) && g.contains(&[b, c]) && g.contains(&[a, c]) {
                    tops.push(vec![a, b, c]);
                }
            }
        }
    }
    SimplicialComplex::build(&tops, n).unwrap()
}

pub fn labels(f: &MorseLabeling) -> Vec<i64> {
    f.labels().to_vec()
}
