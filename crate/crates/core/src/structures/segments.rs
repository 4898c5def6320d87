use crate::mask::SubsetMask;
use crate::matroid::Matroid;

/// `M|X ≅ U_{2,|X|}`: rank 2 and no element pair dependent.
pub fn is_segment(m: &Matroid, x: SubsetMask) -> bool {
    if m.rank(x) != 2 {
        return false;
    }
    let v = x.to_vec();
    v.iter().enumerate().all(|(i, &a)| {
        v[i + 1..]
            .iter()
            .all(|&b| m.rank(SubsetMask::singleton(a).with(b)) == 2)
    })
}

/// Maximal segments with at least three elements, ascending by mask.
pub fn segments(m: &Matroid) -> Vec<SubsetMask> {
    let all: Vec<SubsetMask> = m
        .ground()
        .subsets()
        .filter(|x| x.len() >= 3 && is_segment(m, *x))
        .collect();
    all.iter()
        .copied()
        .filter(|s| !all.iter().any(|t| s.is_proper_subset_of(*t)))
        .collect()
}

pub fn cosegments(m: &Matroid) -> Vec<SubsetMask> {
    segments(&m.dual())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{l8, theta, uniform};

    #[test]
    fn l8_line() {
        let segs = segments(&l8());
        assert!(segs.contains(&SubsetMask::from_elements([0, 1, 2, 3])));
        assert!(segs.contains(&SubsetMask::from_elements([0, 5, 6, 7])));
    }

    #[test]
    fn no_segments_in_u36() {
        assert!(segments(&uniform(3, 6).unwrap()).is_empty());
    }

    #[test]
    fn theta_segment_and_cosegment() {
        for n in 3..=5 {
            let (t, labels) = theta(n).unwrap();
            assert!(segments(&t).contains(&labels.w_mask()), "n={n}");
            assert!(cosegments(&t).contains(&labels.z_mask()), "n={n}");
        }
    }

    #[test]
    fn parallel_pairs_break_segments() {
        // U(2,3) with element 0 doubled
        let base = uniform(2, 3).unwrap();
        let bases: Vec<SubsetMask> = base
            .bases()
            .into_iter()
            .chain(base.bases().into_iter().filter(|b| b.contains(0)).map(|b| b.without(0).with(3)))
            .collect();
        let m = Matroid::from_bases(4, &bases).unwrap();
        let segs = segments(&m);
        assert_eq!(segs, vec![SubsetMask::from_elements([0, 1, 2]), SubsetMask::from_elements([1, 2, 3])]);
    }
}
