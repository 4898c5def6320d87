//! Connectivity function, separations, vertical and cyclic 3-separations,
//! and sequential orderings.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::matroid::Matroid;

/// λ(X) = r(X) + r(E − X) − r(M).
pub fn lambda(m: &Matroid, x: SubsetMask) -> usize {
    let rest = x.complement(m.size());
    m.rank(x) + m.rank(rest) - m.full_rank()
}

pub fn is_k_separating(m: &Matroid, x: SubsetMask, k: usize) -> bool {
    lambda(m, x) < k
}

pub fn is_exactly_k_separating(m: &Matroid, x: SubsetMask, k: usize) -> bool {
    k >= 1 && lambda(m, x) == k - 1
}

/// `(X, E − X)` is a k-separation: k-separating with both sides of size at least k.
pub fn is_k_separation(m: &Matroid, x: SubsetMask, k: usize) -> bool {
    let rest = x.complement(m.size());
    is_k_separating(m, x, k) && x.len().min(rest.len()) >= k
}

/// One side of every k-separation; the returned side never contains element 0.
pub fn k_separations(m: &Matroid, k: usize) -> Vec<SubsetMask> {
    let n = m.size();
    if n == 0 {
        return Vec::new();
    }
    SubsetMask::full(n)
        .without(0)
        .subsets()
        .filter(|&x| is_k_separation(m, x, k))
        .collect()
}

/// Literal connectivity: no k-separation for any k < `order`.
pub fn is_n_connected(m: &Matroid, order: usize) -> bool {
    (1..order).all(|k| k_separations(m, k).is_empty())
}

/// Same as `is_n_connected(m, 2)` without building separation lists.
pub fn is_connected(m: &Matroid) -> bool {
    first_low_separation(m, 2).is_none()
}

pub fn is_3_connected(m: &Matroid) -> bool {
    first_low_separation(m, 3).is_none()
}

fn first_low_separation(m: &Matroid, order: usize) -> Option<SubsetMask> {
    let n = m.size();
    if n == 0 {
        return None;
    }
    let full = SubsetMask::full(n);
    let r = m.full_rank();
    let ranks = m.rank_table();
    full.without(0).subsets().find(|&x| {
        let rest = full - x;
        let lam = ranks[x.index()] as usize + ranks[rest.index()] as usize - r;
        lam + 1 < order && x.len().min(rest.len()) > lam
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SepKind {
    Vertical,
    Cyclic,
}

/// A partition `(X, {e}, Y)` certified as a vertical or cyclic 3-separation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct VerticalSep3 {
    pub x: SubsetMask,
    pub e: usize,
    pub y: SubsetMask,
    pub kind: SepKind,
}

impl VerticalSep3 {
    /// `Y ∪ {e}`, the side ordered by maximality.
    pub fn y_with_e(&self) -> SubsetMask {
        self.y.with(self.e)
    }

    pub fn x_with_e(&self) -> SubsetMask {
        self.x.with(self.e)
    }
}

/// `(A, B)` is a vertical 3-separation: 3-separating, both sides of size and rank at least 3.
pub fn is_vertical_3_separation_pair(m: &Matroid, a: SubsetMask) -> bool {
    let b = a.complement(m.size());
    is_k_separation(m, a, 3) && m.rank(a).min(m.rank(b)) >= 3
}

/// Checks the vertical 3-separation conditions for `(X, {e}, Y)` in `m`.
pub fn is_vertical_triple(m: &Matroid, x: SubsetMask, e: usize, y: SubsetMask) -> bool {
    let n = m.size();
    let partition = x.is_disjoint(y)
        && !x.contains(e)
        && !y.contains(e)
        && (x | y).with(e) == SubsetMask::full(n);
    partition
        && m.closure(x).contains(e)
        && m.closure(y).contains(e)
        && is_vertical_3_separation_pair(m, x)
        && is_vertical_3_separation_pair(m, y)
}

/// Cyclic 3-separation: the triple is vertical in the dual.
pub fn is_cyclic_triple(m: &Matroid, x: SubsetMask, e: usize, y: SubsetMask) -> bool {
    is_vertical_triple(&m.dual(), x, e, y)
}

fn vertical_triples(m: &Matroid, kind: SepKind) -> Vec<VerticalSep3> {
    let n = m.size();
    let full = SubsetMask::full(n);
    let mut out = Vec::new();
    for e in 0..n {
        let rest = full.without(e);
        for x in rest.subsets() {
            if x.len() < 3 || rest.len() - x.len() < 3 {
                continue;
            }
            let y = rest - x;
            if is_vertical_triple(m, x, e, y) {
                out.push(VerticalSep3 { x, e, y, kind });
            }
        }
    }
    out
}

/// All vertical 3-separations `(X, {e}, Y)` as ordered triples, by centre then `X` mask.
pub fn vertical_3_separations(m: &Matroid) -> Result<Vec<VerticalSep3>> {
    if !is_3_connected(m) {
        return Err(Error::NotThreeConnected);
    }
    Ok(vertical_triples(m, SepKind::Vertical))
}

pub fn cyclic_3_separations(m: &Matroid) -> Result<Vec<VerticalSep3>> {
    if !is_3_connected(m) {
        return Err(Error::NotThreeConnected);
    }
    Ok(vertical_triples(&m.dual(), SepKind::Cyclic))
}

/// The matroid in which a separation of this kind is vertical.
fn host(m: &Matroid, kind: SepKind) -> std::borrow::Cow<'_, Matroid> {
    match kind {
        SepKind::Vertical => std::borrow::Cow::Borrowed(m),
        SepKind::Cyclic => std::borrow::Cow::Owned(m.dual()),
    }
}

pub fn is_valid_sep(m: &Matroid, sep: &VerticalSep3) -> bool {
    is_vertical_triple(&host(m, sep.kind), sep.x, sep.e, sep.y)
}

/// No separation of the same kind has `Y' ∪ {e'}` properly containing `Y ∪ {e}`.
pub fn is_maximal_vertical(m: &Matroid, sep: &VerticalSep3) -> bool {
    let h = host(m, sep.kind);
    let side = sep.y_with_e();
    !vertical_triples(&h, sep.kind)
        .iter()
        .any(|other| side.is_proper_subset_of(other.y_with_e()))
}

/// Maximality test against a precomputed list of separations of the same kind.
pub fn is_maximal_among(sep: &VerticalSep3, all: &[VerticalSep3]) -> bool {
    let side = sep.y_with_e();
    !all.iter().any(|other| side.is_proper_subset_of(other.y_with_e()))
}

/// `(X − cl(Y), {e}, cl(Y) − {e})`, with `cl*` for cyclic separations.
pub fn close_off(m: &Matroid, sep: &VerticalSep3) -> VerticalSep3 {
    let cl = match sep.kind {
        SepKind::Vertical => m.closure(sep.y),
        SepKind::Cyclic => m.coclosure(sep.y),
    };
    VerticalSep3 {
        x: sep.x - cl,
        e: sep.e,
        y: cl.without(sep.e),
        kind: sep.kind,
    }
}

/// ⊓(A, B) = r(A) + r(B) − r(A ∪ B).
pub fn local_connectivity(m: &Matroid, a: SubsetMask, b: SubsetMask) -> usize {
    m.rank(a) + m.rank(b) - m.rank(a | b)
}

/// An ordering of `side` whose every prefix is 3-separating, if one exists.
pub fn sequential_ordering(m: &Matroid, side: SubsetMask) -> Option<Vec<usize>> {
    let mut dead = HashSet::new();
    let mut order = Vec::with_capacity(side.len());
    if extend_sequence(m, side, SubsetMask::EMPTY, &mut order, &mut dead) {
        Some(order)
    } else {
        None
    }
}

fn extend_sequence(
    m: &Matroid,
    side: SubsetMask,
    prefix: SubsetMask,
    order: &mut Vec<usize>,
    dead: &mut HashSet<SubsetMask>,
) -> bool {
    if prefix == side {
        return true;
    }
    if dead.contains(&prefix) {
        return false;
    }
    for e in (side - prefix).iter() {
        let next = prefix.with(e);
        if lambda(m, next) <= 2 {
            order.push(e);
            if extend_sequence(m, side, next, order, dead) {
                return true;
            }
            order.pop();
        }
    }
    dead.insert(prefix);
    false
}

/// `(X, E − X)` is exactly 3-separating and `X` or `E − X` has a sequential ordering.
pub fn is_sequential_3_separation(m: &Matroid, x: SubsetMask) -> bool {
    let y = x.complement(m.size());
    is_exactly_k_separating(m, x, 3)
        && (sequential_ordering(m, x).is_some() || sequential_ordering(m, y).is_some())
}

pub fn has_path_width_three(m: &Matroid) -> bool {
    sequential_ordering(m, m.ground()).is_some()
}

/// `parts` partition E into nonempty sets and every proper prefix union is exactly 3-separating.
pub fn is_path_of_3_separations(m: &Matroid, parts: &[SubsetMask]) -> bool {
    let mut union = SubsetMask::EMPTY;
    for p in parts {
        if p.is_empty() || !p.is_disjoint(union) {
            return false;
        }
        union |= *p;
    }
    if union != m.ground() {
        return false;
    }
    let mut prefix = SubsetMask::EMPTY;
    parts[..parts.len().saturating_sub(1)].iter().all(|p| {
        prefix |= *p;
        is_exactly_k_separating(m, prefix, 3)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{fano, l8, mk4, theta, uniform, wheel, whirl};

    fn m(elements: &[usize]) -> SubsetMask {
        elements.iter().copied().collect()
    }

    #[test]
    fn lambda_examples() {
        let u24 = uniform(2, 4).unwrap();
        assert_eq!(lambda(&u24, SubsetMask::EMPTY), 0);
        assert_eq!(lambda(&u24, m(&[0, 1])), 2);
        let (t2, _) = theta(2).unwrap();
        // w1 = 0, z2 = 3
        assert_eq!(lambda(&t2, m(&[0, 3])), 0);
    }

    #[test]
    fn separations() {
        assert!(k_separations(&uniform(2, 4).unwrap(), 2).is_empty());
        let (t2, _) = theta(2).unwrap();
        assert!(!k_separations(&t2, 1).is_empty());
        assert!(is_exactly_k_separating(&uniform(2, 5).unwrap(), m(&[0, 1]), 3));
        for sep in k_separations(&t2, 1) {
            assert!(!sep.contains(0));
        }
    }

    #[test]
    fn small_uniform_matroids_are_3_connected() {
        for (r, n) in [(0, 0), (0, 1), (1, 1), (1, 2), (1, 3), (2, 3), (2, 4)] {
            let u = uniform(r, n).unwrap();
            assert!(is_n_connected(&u, 3), "U({r},{n})");
            assert!(is_3_connected(&u), "U({r},{n})");
        }
        assert!(!is_3_connected(&uniform(1, 4).unwrap().direct_sum(&uniform(0, 1).unwrap()).unwrap()));
        assert!(!is_3_connected(&uniform(0, 2).unwrap()));
        assert!(!is_3_connected(&uniform(2, 2).unwrap()));
    }

    #[test]
    fn fast_and_literal_connectivity_agree() {
        let samples = [
            uniform(2, 5).unwrap(),
            mk4(),
            fano(),
            l8(),
            theta(2).unwrap().0,
            theta(4).unwrap().0,
            wheel(2).unwrap(),
            uniform(1, 1).unwrap().direct_sum(&uniform(0, 1).unwrap()).unwrap(),
        ];
        for s in &samples {
            assert_eq!(is_3_connected(s), is_n_connected(s, 3));
            assert_eq!(is_connected(s), is_n_connected(s, 2));
        }
        assert!(is_n_connected(&theta(4).unwrap().0, 3));
        assert!(!is_n_connected(&theta(2).unwrap().0, 2));
    }

    #[test]
    fn wheels_and_whirls_are_3_connected() {
        for r in 3..=6 {
            assert!(is_3_connected(&wheel(r).unwrap()), "W({r})");
            assert!(is_3_connected(&whirl(r).unwrap()), "WHIRL({r})");
        }
    }

    #[test]
    fn vertical_separations() {
        assert!(vertical_3_separations(&uniform(2, 4).unwrap()).unwrap().is_empty());
        let (t2, _) = theta(2).unwrap();
        assert!(matches!(vertical_3_separations(&t2), Err(Error::NotThreeConnected)));
        let l = l8();
        let x = m(&[0, 1, 2, 3]);
        let y = m(&[5, 6, 7]);
        let cyc = cyclic_3_separations(&l).unwrap();
        assert!(cyc.contains(&VerticalSep3 { x, e: 4, y, kind: SepKind::Cyclic }));
        assert!(is_cyclic_triple(&l, x, 4, y));
        // a rank-3 matroid has no vertical 3-separations
        assert!(vertical_3_separations(&l).unwrap().is_empty());
    }

    #[test]
    fn fan_end_gives_vertical_separation() {
        // W(4): s1 r1 s2 r2 ...; (s1, r1, s2, r2) is a fan with spoke-end s1
        let w4 = wheel(4).unwrap();
        let f = [0usize, 1, 2, 3];
        let x: SubsetMask = f[1..].iter().copied().collect();
        let y = w4.ground() - x.with(f[0]);
        let seps = vertical_3_separations(&w4).unwrap();
        let sep = VerticalSep3 { x, e: f[0], y, kind: SepKind::Vertical };
        assert!(seps.contains(&sep));
        assert!(is_maximal_vertical(&w4, &sep));
    }

    #[test]
    fn cyclic_is_vertical_in_dual() {
        let l = l8();
        let cyc = cyclic_3_separations(&l).unwrap();
        let vert: Vec<_> = vertical_3_separations(&l.dual()).unwrap();
        assert_eq!(cyc.len(), vert.len());
        for (c, v) in cyc.iter().zip(&vert) {
            assert_eq!((c.x, c.e, c.y), (v.x, v.e, v.y));
        }
    }

    #[test]
    fn close_off_l8() {
        let l = l8();
        let sep = VerticalSep3 {
            x: m(&[0, 1, 2, 3]),
            e: 4,
            y: m(&[5, 6, 7]),
            kind: SepKind::Cyclic,
        };
        let closed = close_off(&l, &sep);
        let cl_star = l.coclosure(sep.y);
        assert_eq!(closed.y, cl_star.without(4));
        assert_eq!(closed.x, sep.x - cl_star);
        assert!(is_valid_sep(&l, &closed));
        assert_eq!(close_off(&l, &closed), closed);
    }

    #[test]
    fn maximality_in_l8_dual() {
        let l = l8();
        let d = l.dual();
        let all = vertical_3_separations(&d).unwrap();
        for sep in cyclic_3_separations(&l).unwrap() {
            let as_vertical = VerticalSep3 { kind: SepKind::Vertical, ..sep };
            assert_eq!(is_maximal_vertical(&l, &sep), is_maximal_among(&as_vertical, &all));
        }
    }

    #[test]
    fn local_connectivity_examples() {
        let u24 = uniform(2, 4).unwrap();
        assert_eq!(local_connectivity(&u24, m(&[0]), SubsetMask::EMPTY), 0);
        assert_eq!(local_connectivity(&u24, m(&[0, 1]), m(&[2, 3])), 2);
    }

    #[test]
    fn sequences() {
        let u25 = uniform(2, 5).unwrap();
        assert!(has_path_width_three(&u25));
        assert!(is_path_of_3_separations(&u25, &[m(&[0, 1]), m(&[2]), m(&[3, 4])]));
        // not a partition of E
        assert!(!is_path_of_3_separations(&u25, &[m(&[0, 1]), m(&[3, 4])]));
        assert!(!is_path_of_3_separations(&u25, &[m(&[0, 1]), SubsetMask::EMPTY, m(&[2, 3, 4])]));
        let f = fano();
        // two-element side of an exact 3-separation is trivially sequential
        assert!(is_sequential_3_separation(&f, m(&[0, 1])));
        assert!(has_path_width_three(&wheel(5).unwrap()));
    }
}
