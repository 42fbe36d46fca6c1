//! Exact row echelon forms over prime fields and, fraction-free, over the integers.
//!
//! Rational ranks are computed without division: a vector is cleared against a
//! pivot row by cross-multiplying with the two entries divided by their gcd, and
//! stored rows are kept primitive. Entries live in `i128` first; if any product
//! would overflow, the computation is redone in arbitrary precision.

use std::fmt::Debug;
use std::marker::PhantomData;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, FromPrimitive, Signed};

use super::field::FieldSpec;

/// A sparse integer vector: `(index, value)` pairs with increasing indices.
pub type SparseVec = Vec<(usize, i64)>;

/// Signals that a fixed-width integer computation would overflow.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Overflow;

pub(crate) trait Arith: Send + Sync {
    type Elem: Clone + Send + Sync + Debug;

    fn zero(&self) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    fn embed(&self, x: i64) -> Self::Elem;
    /// Clears the entry of `v` at the leading column of `row`.
    fn eliminate(&self, v: &mut [Self::Elem], row: &[(usize, Self::Elem)]) -> Result<(), Overflow>;
    /// Brings a new basis row into canonical form.
    fn normalize(&self, row: &mut [(usize, Self::Elem)]) -> Result<(), Overflow>;
}

/// Arithmetic in the prime field of order `p`; basis rows have leading entry 1.
#[derive(Clone, Copy, Debug)]
pub(crate) struct ModP {
    p: u64,
}

impl ModP {
    pub(crate) fn new(p: u64) -> Self {
        Self { p }
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        (a as u128 * b as u128 % self.p as u128) as u64
    }

    fn inverse(&self, a: u64) -> u64 {
        let (mut base, mut exp, mut acc) = (a % self.p, self.p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}

impl Arith for ModP {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn is_zero(&self, x: &u64) -> bool {
        *x == 0
    }

    fn embed(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    fn eliminate(&self, v: &mut [u64], row: &[(usize, u64)]) -> Result<(), Overflow> {
        let factor = v[row[0].0];
        for &(j, r) in row {
            let sub = self.mul(factor, r);
            v[j] = (v[j] + self.p - sub) % self.p;
        }
        Ok(())
    }

    fn normalize(&self, row: &mut [(usize, u64)]) -> Result<(), Overflow> {
        let inv = self.inverse(row[0].1);
        for (_, x) in row.iter_mut() {
            *x = self.mul(*x, inv);
        }
        Ok(())
    }
}

/// Fraction-free integer elimination; basis rows are primitive with positive lead.
#[derive(Debug)]
pub(crate) struct FracFree<I>(PhantomData<fn() -> I>);

impl<I> FracFree<I> {
    pub(crate) fn new() -> Self {
        Self(PhantomData)
    }
}

pub(crate) trait ExactInt:
    Integer + Signed + CheckedMul + CheckedSub + FromPrimitive + Clone + Send + Sync + Debug
{
}

impl<T> ExactInt for T where T: Integer + Signed + CheckedMul + CheckedSub + FromPrimitive + Clone + Send + Sync + Debug {}

fn content<I: ExactInt>(values: impl Iterator<Item = I>) -> I {
    values.fold(I::zero(), |g, x| g.gcd(&x))
}

impl<I: ExactInt> Arith for FracFree<I> {
    type Elem = I;

    fn zero(&self) -> I {
        I::zero()
    }

    fn is_zero(&self, x: &I) -> bool {
        x.is_zero()
    }

    fn embed(&self, x: i64) -> I {
        I::from_i64(x).expect("every exact integer type holds an i64")
    }

    fn eliminate(&self, v: &mut [I], row: &[(usize, I)]) -> Result<(), Overflow> {
        let lead = &row[0].1;
        let target = v[row[0].0].clone();
        let g = lead.gcd(&target);
        let scale = lead.clone() / g.clone();
        let factor = target / g;
        let rescaled = !scale.is_one();
        if rescaled {
            for x in v.iter_mut().filter(|x| !x.is_zero()) {
                *x = x.checked_mul(&scale).ok_or(Overflow)?;
            }
        }
        for (j, r) in row {
            let sub = factor.checked_mul(r).ok_or(Overflow)?;
            v[*j] = v[*j].checked_sub(&sub).ok_or(Overflow)?;
        }
        if rescaled {
            let g = content(v.iter().cloned());
            if !g.is_zero() && !g.is_one() {
                for x in v.iter_mut().filter(|x| !x.is_zero()) {
                    *x = x.clone() / g.clone();
                }
            }
        }
        Ok(())
    }

    fn normalize(&self, row: &mut [(usize, I)]) -> Result<(), Overflow> {
        let mut g = content(row.iter().map(|(_, x)| x.clone()));
        if row[0].1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for (_, x) in row.iter_mut() {
                *x = x.clone() / g.clone();
            }
        }
        Ok(())
    }
}

/// A row echelon basis of a subspace of `F^width`, built incrementally.
#[derive(Debug)]
pub(crate) struct Echelon<A: Arith> {
    arith: A,
    width: usize,
    rows: Vec<Vec<(usize, A::Elem)>>,
    pivot_of: Vec<Option<usize>>,
}

impl<A: Arith> Echelon<A> {
    pub(crate) fn new(arith: A, width: usize) -> Self {
        Self { arith, width, rows: Vec::new(), pivot_of: vec![None; width] }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn dense(&self, v: &[(usize, i64)]) -> Vec<A::Elem> {
        let mut out = vec![self.arith.zero(); self.width];
        for &(j, x) in v {
            out[j] = self.arith.embed(x);
        }
        out
    }

    /// Reduces `v` in place against the pivots of every layer, scanning columns
    /// left to right. Layers must have pairwise disjoint pivot columns.
    pub(crate) fn reduce_stack(layers: &[&Self], v: &mut [A::Elem]) -> Result<(), Overflow> {
        let Some(arith) = layers.first().map(|l| &l.arith) else {
            return Ok(());
        };
        for c in 0..v.len() {
            if arith.is_zero(&v[c]) {
                continue;
            }
            for layer in layers {
                if let Some(r) = layer.pivot_of[c] {
                    layer.arith.eliminate(v, &layer.rows[r])?;
                    break;
                }
            }
        }
        Ok(())
    }

    /// Adds an already reduced vector as a basis row; returns false if it is zero.
    pub(crate) fn push_reduced(&mut self, v: &[A::Elem]) -> Result<bool, Overflow> {
        let mut row: Vec<(usize, A::Elem)> =
            v.iter().enumerate().filter(|(_, x)| !self.arith.is_zero(x)).map(|(j, x)| (j, x.clone())).collect();
        if row.is_empty() {
            return Ok(false);
        }
        self.arith.normalize(&mut row)?;
        self.pivot_of[row[0].0] = Some(self.rows.len());
        self.rows.push(row);
        Ok(true)
    }

    /// Reduces and inserts `v`; returns whether the rank grew.
    pub(crate) fn insert(&mut self, v: &[(usize, i64)]) -> Result<bool, Overflow> {
        let mut d = self.dense(v);
        Self::reduce_stack(&[&*self], &mut d)?;
        self.push_reduced(&d)
    }

    pub(crate) fn from_vectors(arith: A, width: usize, vectors: &[SparseVec]) -> Result<Self, Overflow> {
        let mut e = Self::new(arith, width);
        for v in vectors {
            e.insert(v)?;
        }
        Ok(e)
    }

    /// Dimension of `span(base ∪ extra) / span(base)`, stopping early once `limit` is reached.
    pub(crate) fn extra_rank(&self, extra: &[SparseVec], limit: usize) -> Result<usize, Overflow>
    where
        A: Clone,
    {
        let mut local = Self::new(self.arith.clone(), self.width);
        for v in extra {
            if local.rank() >= limit {
                break;
            }
            let mut d = self.dense(v);
            Self::reduce_stack(&[self, &local], &mut d)?;
            local.push_reduced(&d)?;
        }
        Ok(local.rank())
    }
}

impl<I> Clone for FracFree<I> {
    fn clone(&self) -> Self {
        Self::new()
    }
}

/// Rank of the span of `vectors` (each of length `width`) over `field`.
pub fn rank_of_vectors(vectors: &[SparseVec], width: usize, field: FieldSpec) -> usize {
    match field {
        FieldSpec::PrimeField(p) => Echelon::from_vectors(ModP::new(p.get()), width, vectors)
            .expect("prime field elimination cannot overflow")
            .rank(),
        FieldSpec::Rationals => match Echelon::from_vectors(FracFree::<i128>::new(), width, vectors) {
            Ok(e) => e.rank(),
            Err(Overflow) => big_echelon(width, vectors).rank(),
        },
    }
}

pub(crate) fn big_echelon(width: usize, vectors: &[SparseVec]) -> Echelon<FracFree<BigInt>> {
    Echelon::from_vectors(FracFree::<BigInt>::new(), width, vectors)
        .expect("arbitrary precision elimination cannot overflow")
}

/// A sparse integer matrix stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseIntMatrix {
    nrows: usize,
    ncols: usize,
    cols: Vec<SparseVec>,
}

impl SparseIntMatrix {
    /// Builds from columns; each column's entries must have row index < `nrows`.
    pub fn from_columns(nrows: usize, mut cols: Vec<SparseVec>) -> Self {
        for c in &mut cols {
            c.retain(|&(_, x)| x != 0);
            c.sort_unstable_by_key(|&(i, _)| i);
            debug_assert!(c.iter().all(|&(i, _)| i < nrows));
        }
        Self { nrows, ncols: cols.len(), cols }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let cols =
            (0..ncols).map(|j| (0..nrows).filter(|&i| rows[i][j] != 0).map(|i| (i, rows[i][j])).collect()).collect();
        Self { nrows, ncols, cols }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.ncols]; self.nrows];
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, x) in col {
                out[i][j] = x;
            }
        }
        out
    }

    /// `self * rhs`, or `None` if the inner dimensions disagree.
    pub fn mul(&self, rhs: &SparseIntMatrix) -> Option<SparseIntMatrix> {
        if self.ncols != rhs.nrows {
            return None;
        }
        let cols = rhs
            .cols
            .iter()
            .map(|rc| {
                let mut acc = std::collections::BTreeMap::<usize, i64>::new();
                for &(k, y) in rc {
                    for &(i, x) in &self.cols[k] {
                        *acc.entry(i).or_insert(0) += x * y;
                    }
                }
                acc.into_iter().filter(|&(_, x)| x != 0).collect()
            })
            .collect();
        Some(SparseIntMatrix { nrows: self.nrows, ncols: rhs.ncols, cols })
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }
}

/// Exact rank of `m` over `field`.
pub fn rank(m: &SparseIntMatrix, field: FieldSpec) -> usize {
    rank_of_vectors(&m.cols, m.nrows, field)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn f(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn identity_has_full_rank() {
        let id = SparseIntMatrix::from_dense(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        for field in [q(), f(2), f(3), f(7)] {
            assert_eq!(rank(&id, field), 3);
        }
    }

    #[test]
    fn three_vanishes_mod_three() {
        let m = SparseIntMatrix::from_dense(&[vec![3]]);
        assert_eq!(rank(&m, f(3)), 0);
        assert_eq!(rank(&m, q()), 1);
    }

    #[test]
    fn gcd_scaling_keeps_rank() {
        let m = SparseIntMatrix::from_dense(&[vec![2, 4, 6], vec![3, 6, 9], vec![5, 1, 4]]);
        assert_eq!(rank(&m, q()), 2);
        let m = SparseIntMatrix::from_dense(&[vec![2, 3], vec![4, 5]]);
        assert_eq!(rank(&m, q()), 2);
        assert_eq!(rank(&m, f(2)), 1);
    }

    #[test]
    fn wide_and_empty() {
        let m = SparseIntMatrix::from_columns(2, vec![vec![], vec![(1, -1)], vec![(0, 2), (1, 2)]]);
        assert_eq!(rank(&m, q()), 2);
        assert_eq!(rank(&SparseIntMatrix::from_columns(4, vec![]), q()), 0);
    }

    #[test]
    fn small_and_big_integers_agree() {
        // entries large enough that i128 overflows when rows are cross-multiplied
        let big = 1i64 << 62;
        let cols = vec![vec![(0, big), (1, big - 1)], vec![(0, big - 3), (1, big - 7)], vec![(1, 5)]];
        let small = Echelon::from_vectors(FracFree::<i128>::new(), 2, &cols);
        let wide = big_echelon(2, &cols);
        assert_eq!(wide.rank(), 2);
        if let Ok(s) = small {
            assert_eq!(s.rank(), 2);
        }
        assert_eq!(rank_of_vectors(&cols, 2, q()), 2);
    }

    #[test]
    fn extra_rank_counts_new_directions() {
        let base = Echelon::from_vectors(ModP::new(5), 3, &[vec![(0, 1), (1, 1)]]).unwrap();
        let extra = vec![vec![(0, 2), (1, 2)], vec![(2, 1)], vec![(0, 1), (1, 1), (2, 3)]];
        assert_eq!(base.extra_rank(&extra, usize::MAX).unwrap(), 1);
        assert_eq!(base.extra_rank(&extra, 0).unwrap(), 0);
    }

    #[test]
    fn product_of_matrices() {
        let a = SparseIntMatrix::from_dense(&[vec![1, -1], vec![0, 1]]);
        let b = SparseIntMatrix::from_dense(&[vec![1], vec![1]]);
        assert_eq!(a.mul(&b).unwrap().to_dense(), vec![vec![0], vec![1]]);
        assert!(b.mul(&b).is_none());
    }
}
