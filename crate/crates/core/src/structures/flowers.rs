use serde::Serialize;

use crate::connectivity::{is_k_separating, local_connectivity};
use crate::mask::SubsetMask;
use crate::matroid::Matroid;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FlowerKind {
    SwirlLike,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Flower {
    pub petals: Vec<SubsetMask>,
    pub kind: FlowerKind,
}

/// Petals partition E, each has at least two elements, and every `P_i`,
/// `P_i ∪ P_{i+1}` is 3-separating (indices cyclic).
pub fn is_flower(m: &Matroid, petals: &[SubsetMask]) -> bool {
    let k = petals.len();
    if k == 0 {
        return false;
    }
    let mut union = SubsetMask::EMPTY;
    for p in petals {
        if p.len() < 2 || !p.is_disjoint(union) {
            return false;
        }
        union |= *p;
    }
    union == m.ground()
        && (0..k).all(|i| {
            is_k_separating(m, petals[i], 3) && is_k_separating(m, petals[i] | petals[(i + 1) % k], 3)
        })
}

pub fn is_swirl_like(m: &Matroid, petals: &[SubsetMask]) -> bool {
    let k = petals.len();
    if k < 4 || !is_flower(m, petals) {
        return false;
    }
    (0..k).all(|i| {
        (i + 1..k).all(|j| {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            let want = if consecutive { 1 } else { 0 };
            local_connectivity(m, petals[i], petals[j]) == want
        })
    })
}

pub fn classify(m: &Matroid, petals: &[SubsetMask]) -> Option<Flower> {
    if !is_flower(m, petals) {
        return None;
    }
    let kind = if is_swirl_like(m, petals) { FlowerKind::SwirlLike } else { FlowerKind::Other };
    Some(Flower { petals: petals.to_vec(), kind })
}

/// Searches for a swirl-like flower `(A, {f1, f2}, {f3, f4}, B)` over all
/// splits of the remaining elements; the first hit in increasing `A` order.
pub fn find_swirl_like_around_fan(m: &Matroid, f: &[usize]) -> Option<Flower> {
    if f.len() < 4 {
        return None;
    }
    let p1 = SubsetMask::from_elements([f[0], f[1]]);
    let p2 = SubsetMask::from_elements([f[2], f[3]]);
    let rest = m.ground() - p1 - p2;
    rest.subsets().find_map(|a| {
        let b = rest - a;
        let petals = [a, p1, p2, b];
        is_swirl_like(m, &petals).then(|| Flower {
            petals: petals.to_vec(),
            kind: FlowerKind::SwirlLike,
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{uniform, whirl};

    fn m(e: &[usize]) -> SubsetMask {
        e.iter().copied().collect()
    }

    #[test]
    fn whirl_petals_are_swirl_like() {
        // rank-4 whirl: consecutive spoke/rim pairs form a swirl-like flower
        let w = whirl(4).unwrap();
        let petals = [m(&[0, 1]), m(&[2, 3]), m(&[4, 5]), m(&[6, 7])];
        assert!(is_flower(&w, &petals));
        assert!(is_swirl_like(&w, &petals));
        assert_eq!(classify(&w, &petals).unwrap().kind, FlowerKind::SwirlLike);
        assert!(find_swirl_like_around_fan(&w, &[2, 3, 4, 5]).is_some());
    }

    #[test]
    fn rejections() {
        let u = uniform(2, 6).unwrap();
        let three = [m(&[0, 1]), m(&[2, 3]), m(&[4, 5])];
        assert!(is_flower(&u, &three));
        assert!(!is_swirl_like(&u, &three));
        // in a rank-2 matroid consecutive petals have local connectivity 2
        let u8 = uniform(2, 8).unwrap();
        let four = [m(&[0, 1]), m(&[2, 3]), m(&[4, 5]), m(&[6, 7])];
        assert!(!is_swirl_like(&u8, &four));
        assert!(!is_flower(&u, &[m(&[0]), m(&[1, 2, 3, 4, 5])]));
    }
}
