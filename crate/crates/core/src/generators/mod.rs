//! Witness complexes and labelings: circles, tori with tent labelings, wedges,
//! spread wedges, staircase products and presentation complexes.

mod presentation;
mod product;
mod torus;

pub use presentation::{parse_word, presentation_complex, Word};
pub use product::{product_complex, pullback_labeling, ProductComplex};
pub use torus::{generate_torus, tent_labeling, TorusComplex};

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::morse::MorseLabeling;

/// A complex with an optional labeling that satisfies the morse constraint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledComplex {
    pub complex: SimplicialComplex,
    pub labeling: Option<MorseLabeling>,
}

impl LabeledComplex {
    pub fn new(complex: SimplicialComplex, labeling: Option<MorseLabeling>) -> Result<Self> {
        if let Some(f) = &labeling {
            MorseLabeling::checked(&complex, f.labels().to_vec())?;
        }
        Ok(Self { complex, labeling })
    }

    pub fn unlabeled(complex: SimplicialComplex) -> Self {
        Self { complex, labeling: None }
    }
}

/// The `m`-cycle on vertices `0..m`.
pub fn generate_circle(m: usize) -> Result<SimplicialComplex> {
    if m < 3 {
        return Err(Error::TooFewVertices(m));
    }
    let edges: Vec<[usize; 2]> = (0..m).map(|i| [i, (i + 1) % m]).collect();
    SimplicialComplex::build(&edges, m)
}

/// Tent labeling of a complex laid out exactly as [`generate_torus`] or [`generate_circle`] produce it.
pub fn tent_for(k: &SimplicialComplex, axis: usize) -> Result<MorseLabeling> {
    let t = TorusComplex::recognize(k).ok_or(Error::NotATorus)?;
    tent_labeling(&t, axis)
}

fn check_vertex(k: &SimplicialComplex, v: usize) -> Result<()> {
    if v >= k.vertex_count() {
        return Err(Error::VertexOutOfRange { vertex: v, vertex_count: k.vertex_count() });
    }
    Ok(())
}

/// Disjoint union of `k1` and `k2` with `v2` glued to `v1`.
///
/// `k1` keeps its ids; the other vertices of `k2` follow in order.
pub fn wedge(k1: &SimplicialComplex, v1: usize, k2: &SimplicialComplex, v2: usize) -> Result<SimplicialComplex> {
    check_vertex(k1, v1)?;
    check_vertex(k2, v2)?;
    let n1 = k1.vertex_count();
    let map = |w: usize| -> usize {
        match w.cmp(&v2) {
            std::cmp::Ordering::Equal => v1,
            std::cmp::Ordering::Less => n1 + w,
            std::cmp::Ordering::Greater => n1 + w - 1,
        }
    };
    let mut tops: Vec<Simplex> = k1.maximal_simplices();
    tops.extend(k2.maximal_simplices().into_iter().map(|s| s.into_iter().map(map).collect()));
    SimplicialComplex::build(&tops, n1 + k2.vertex_count() - 1)
}

fn labels_of(l: &LabeledComplex) -> Result<&MorseLabeling> {
    l.labeling.as_ref().ok_or(Error::MissingLabels)
}

/// Shortest arc for [`spread_wedge`]: it climbs one unit per edge from `f1(v1)`
/// to a copy of `L2` lying entirely above `max f1`, and is at least 2 edges long
/// so no slab meets both sides.
pub fn min_arc_len(l1: &LabeledComplex, v1: usize, l2: &LabeledComplex, v2: usize) -> Result<usize> {
    check_vertex(&l1.complex, v1)?;
    check_vertex(&l2.complex, v2)?;
    let (f1, f2) = (labels_of(l1)?, labels_of(l2)?);
    let climb = f1.max_label().unwrap_or(0) - f1.get(v1);
    let drop = f2.get(v2) - f2.min_label().unwrap_or(0);
    Ok(((climb + drop + 1) as usize).max(2))
}

/// Joins `L1` and `L2` by an arc of `arc_len` edges from `v1` to `v2`.
///
/// The arc labels increase by one per edge starting at `f1(v1)`, and `f2` is
/// translated to meet the far end, so the whole of `L2` sits above `L1`.
/// Vertex ids: `L1`, then `L2`, then the `arc_len - 1` interior arc vertices.
pub fn spread_wedge(
    l1: &LabeledComplex,
    v1: usize,
    l2: &LabeledComplex,
    v2: usize,
    arc_len: usize,
) -> Result<LabeledComplex> {
    let needed = min_arc_len(l1, v1, l2, v2)?;
    if arc_len < needed {
        return Err(Error::ArcTooShort { given: arc_len, needed });
    }
    let (f1, f2) = (labels_of(l1)?, labels_of(l2)?);
    let (n1, n2) = (l1.complex.vertex_count(), l2.complex.vertex_count());
    let shift = f1.get(v1) + arc_len as i64 - f2.get(v2);

    let mut tops: Vec<Simplex> = l1.complex.maximal_simplices();
    tops.extend(l2.complex.maximal_simplices().into_iter().map(|s| s.into_iter().map(|w| n1 + w).collect()));
    let mut path = vec![v1];
    path.extend(n1 + n2..n1 + n2 + arc_len - 1);
    path.push(n1 + v2);
    tops.extend(path.windows(2).map(|w| vec![w[0], w[1]]));
    let total = n1 + n2 + arc_len - 1;
    let complex = SimplicialComplex::build(&tops, total)?;

    let mut labels = f1.labels().to_vec();
    labels.extend(f2.labels().iter().map(|x| x + shift));
    labels.extend((1..arc_len as i64).map(|j| f1.get(v1) + j));
    let labeling = MorseLabeling::checked(&complex, labels)?;
    Ok(LabeledComplex { complex, labeling: Some(labeling) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circles() {
        assert_eq!(generate_circle(3).unwrap().f_vector(), vec![3, 3]);
        assert_eq!(generate_circle(6).unwrap().f_vector(), vec![6, 6]);
        assert!(matches!(generate_circle(2), Err(Error::TooFewVertices(2))));
        assert_eq!(&generate_circle(5).unwrap(), generate_torus(1, 5).unwrap().complex());
    }

    #[test]
    fn wedge_of_triangles() {
        let c = generate_circle(3).unwrap();
        let w = wedge(&c, 0, &c, 0).unwrap();
        assert_eq!(w.f_vector(), vec![5, 6]);
        assert!(matches!(wedge(&c, 3, &c, 0), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn wedge_with_point_is_identity() {
        let c = generate_circle(4).unwrap();
        let point = SimplicialComplex::build(&[[0]], 1).unwrap();
        assert_eq!(wedge(&c, 2, &point, 0).unwrap(), c);
    }

    #[test]
    fn spread_wedge_of_hexagons() {
        let hex = generate_circle(6).unwrap();
        let tent = tent_labeling(&TorusComplex::recognize(&hex).unwrap(), 0).unwrap();
        let l = LabeledComplex::new(hex, Some(tent)).unwrap();
        // vertex 0 has the lowest label; climb 3 to clear max label 3
        assert_eq!(min_arc_len(&l, 0, &l, 0).unwrap(), 4);
        assert!(matches!(spread_wedge(&l, 0, &l, 0, 3), Err(Error::ArcTooShort { given: 3, needed: 4 })));
        let s = spread_wedge(&l, 0, &l, 0, 4).unwrap();
        assert_eq!(s.complex.vertex_count(), 15);
        assert_eq!(s.complex.edges().len(), 16);
        let f = s.labeling.unwrap();
        assert_eq!(f.get(6), 4);
        assert_eq!(f.max_label(), Some(7));
    }

    #[test]
    fn tent_from_layout() {
        let t = generate_torus(2, 4).unwrap();
        assert_eq!(tent_for(t.complex(), 1).unwrap(), tent_labeling(&t, 1).unwrap());
        let c = generate_circle(6).unwrap();
        assert_eq!(tent_for(&c, 0).unwrap().labels(), &[0, 1, 2, 3, 2, 1]);
        let w = wedge(&c, 0, &c, 0).unwrap();
        assert!(matches!(tent_for(&w, 0), Err(Error::NotATorus)));
    }

    #[test]
    fn spread_wedge_needs_labels() {
        let l = LabeledComplex::unlabeled(generate_circle(3).unwrap());
        assert!(matches!(min_arc_len(&l, 0, &l, 0), Err(Error::MissingLabels)));
    }
}
