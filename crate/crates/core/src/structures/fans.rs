use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::mask::SubsetMask;
use crate::matroid::Matroid;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TripleKind {
    Triangle,
    Triad,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FanEnd {
    Spoke,
    Rim,
}

/// A fan ordering `(f_1, .., f_k)` with the alternating triangle/triad pattern of its windows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanOrdering {
    pub elements: Vec<usize>,
    pub pattern: Vec<TripleKind>,
}

impl FanOrdering {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn set(&self) -> SubsetMask {
        self.elements.iter().copied().collect()
    }

    /// Classification of `f_1`; only defined for fans with at least four elements.
    pub fn first_end(&self) -> Option<FanEnd> {
        if self.len() < 4 {
            return None;
        }
        Some(match self.pattern[0] {
            TripleKind::Triangle => FanEnd::Spoke,
            TripleKind::Triad => FanEnd::Rim,
        })
    }
}

/// Triangles and triads of a matroid, indexed for window tests.
pub struct TripleIndex {
    triangles: HashSet<SubsetMask>,
    triads: HashSet<SubsetMask>,
}

impl TripleIndex {
    pub fn new(m: &Matroid) -> Self {
        TripleIndex {
            triangles: m.triangles().into_iter().collect(),
            triads: m.triads().into_iter().collect(),
        }
    }

    fn kinds(&self, a: usize, b: usize, c: usize) -> (bool, bool) {
        let t: SubsetMask = [a, b, c].into_iter().collect();
        (self.triangles.contains(&t), self.triads.contains(&t))
    }

    /// Whether `seq` satisfies both fan conditions.
    pub fn is_fan_ordering(&self, seq: &[usize]) -> bool {
        if seq.len() < 3 || seq.iter().copied().collect::<SubsetMask>().len() != seq.len() {
            return false;
        }
        let windows: Vec<(bool, bool)> = seq.windows(3).map(|w| self.kinds(w[0], w[1], w[2])).collect();
        windows.iter().all(|&(t, d)| t || d)
            && windows
                .windows(2)
                .all(|p| (!p[0].0 || p[1].1) && (!p[0].1 || p[1].0))
    }

    fn pattern(&self, seq: &[usize]) -> Vec<TripleKind> {
        let first = self.kinds(seq[0], seq[1], seq[2]);
        let start = if first.0 { TripleKind::Triangle } else { TripleKind::Triad };
        (0..seq.len() - 2)
            .map(|i| match (start, i % 2) {
                (TripleKind::Triangle, 0) | (TripleKind::Triad, 1) => TripleKind::Triangle,
                _ => TripleKind::Triad,
            })
            .collect()
    }
}

/// Every fan ordering of a matroid together with derived fan queries.
pub struct FanIndex {
    triples: TripleIndex,
    orderings: Vec<Vec<usize>>,
}

impl FanIndex {
    pub fn new(m: &Matroid) -> Self {
        let triples = TripleIndex::new(m);
        let mut orderings = Vec::new();
        let mut starts: Vec<SubsetMask> = triples.triangles.iter().chain(&triples.triads).copied().collect();
        starts.sort();
        starts.dedup();
        for t in starts {
            let v = t.to_vec();
            for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
                let mut seq = vec![v[perm[0]], v[perm[1]], v[perm[2]]];
                extend(&triples, m.size(), &mut seq, &mut orderings);
            }
        }
        orderings.sort();
        FanIndex { triples, orderings }
    }

    pub fn triples(&self) -> &TripleIndex {
        &self.triples
    }

    /// All fan orderings (both directions), sorted.
    pub fn orderings(&self) -> &[Vec<usize>] {
        &self.orderings
    }

    pub fn to_fan(&self, seq: &[usize]) -> FanOrdering {
        FanOrdering {
            elements: seq.to_vec(),
            pattern: self.triples.pattern(seq),
        }
    }

    /// Element sets of maximal fans, ascending by mask.
    pub fn maximal_sets(&self) -> Vec<SubsetMask> {
        let mut sets: Vec<SubsetMask> = self.orderings.iter().map(|o| o.iter().copied().collect()).collect();
        sets.sort();
        sets.dedup();
        sets.iter()
            .copied()
            .filter(|s| !sets.iter().any(|t| s.is_proper_subset_of(*t)))
            .collect()
    }

    /// One ordering per maximal fan: the lexicographically least ordering of its set.
    pub fn maximal_fans(&self) -> Vec<FanOrdering> {
        let mut best: BTreeMap<SubsetMask, &Vec<usize>> = BTreeMap::new();
        let maximal: HashSet<SubsetMask> = self.maximal_sets().into_iter().collect();
        for o in &self.orderings {
            let s: SubsetMask = o.iter().copied().collect();
            if maximal.contains(&s) {
                best.entry(s).or_insert(o);
            }
        }
        best.values().map(|o| self.to_fan(o)).collect()
    }

    /// All orderings whose element set is a maximal fan.
    pub fn maximal_orderings(&self) -> Vec<FanOrdering> {
        let maximal: HashSet<SubsetMask> = self.maximal_sets().into_iter().collect();
        self.orderings
            .iter()
            .filter(|o| maximal.contains(&o.iter().copied().collect()))
            .map(|o| self.to_fan(o))
            .collect()
    }

    pub fn has_fan_of_size_at_least(&self, k: usize) -> bool {
        self.orderings.iter().any(|o| o.len() >= k)
    }

    /// `set` has exactly four elements and admits a fan ordering.
    pub fn is_four_element_fan(&self, set: SubsetMask) -> bool {
        set.len() == 4 && self.orderings.iter().any(|o| o.len() == 4 && o.iter().copied().collect::<SubsetMask>() == set)
    }

    /// Largest fan ordering containing `seq` as a contiguous block, read in either direction.
    pub fn extension_size(&self, seq: &[usize]) -> usize {
        let rev: Vec<usize> = seq.iter().rev().copied().collect();
        self.orderings
            .iter()
            .filter(|o| o.windows(seq.len()).any(|w| w == seq || w == rev.as_slice()))
            .map(|o| o.len())
            .max()
            .unwrap_or(0)
    }
}

fn extend(triples: &TripleIndex, n: usize, seq: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let k = seq.len();
    let last = triples.kinds(seq[k - 3], seq[k - 2], seq[k - 1]);
    if !(last.0 || last.1) {
        return;
    }
    out.push(seq.clone());
    let used: SubsetMask = seq.iter().copied().collect();
    for d in 0..n {
        if used.contains(d) {
            continue;
        }
        let next = triples.kinds(seq[k - 2], seq[k - 1], d);
        let ok = (next.0 || next.1) && (!last.0 || next.1) && (!last.1 || next.0);
        if ok {
            seq.push(d);
            extend(triples, n, seq, out);
            seq.pop();
        }
    }
}

/// All maximal fans, one ordering each.
pub fn maximal_fans(m: &Matroid) -> Vec<FanOrdering> {
    FanIndex::new(m).maximal_fans()
}

/// Some fan has at least four elements.
pub fn has_4_element_fan(m: &Matroid) -> bool {
    FanIndex::new(m).has_fan_of_size_at_least(4)
}

pub fn is_fan_ordering(m: &Matroid, seq: &[usize]) -> bool {
    TripleIndex::new(m).is_fan_ordering(seq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{fano, mk4, theta_minus, uniform, wheel};

    #[test]
    fn theta_minus_3_is_a_five_element_fan() {
        let (t, _) = theta_minus(3).unwrap();
        let fans = maximal_fans(&t);
        assert_eq!(fans.len(), 1);
        assert_eq!(fans[0].len(), 5);
    }

    #[test]
    fn wheel_fans_cover_ground_set() {
        let w4 = wheel(4).unwrap();
        let fans = maximal_fans(&w4);
        assert!(!fans.is_empty());
        for f in &fans {
            assert_eq!(f.set(), w4.ground());
        }
        assert!(is_fan_ordering(&w4, &[0, 1, 2, 3, 4, 5, 6, 7]));
        assert!(fans[0].first_end().is_some());
    }

    #[test]
    fn u24_has_four_element_fan() {
        let u = uniform(2, 4).unwrap();
        assert!(has_4_element_fan(&u));
        let idx = FanIndex::new(&u);
        assert!(idx.is_four_element_fan(u.ground()));
        // all 24 orderings are fans
        assert_eq!(idx.orderings().iter().filter(|o| o.len() == 4).count(), 24);
    }

    #[test]
    fn fano_has_no_long_fans() {
        assert!(!has_4_element_fan(&fano()));
        let fans = maximal_fans(&fano());
        assert_eq!(fans.len(), 7);
        assert!(fans.iter().all(|f| f.len() == 3 && f.first_end().is_none()));
    }

    #[test]
    fn ends_and_patterns() {
        let w4 = wheel(4).unwrap();
        let idx = FanIndex::new(&w4);
        let spoke = idx.to_fan(&[0, 1, 2, 3]);
        assert_eq!(spoke.first_end(), Some(FanEnd::Spoke));
        assert_eq!(spoke.pattern, vec![TripleKind::Triangle, TripleKind::Triad]);
        let rim = idx.to_fan(&[1, 2, 3, 4]);
        assert_eq!(rim.first_end(), Some(FanEnd::Rim));
        assert_eq!(idx.extension_size(&[0, 1, 2, 3]), 8);
    }

    #[test]
    fn k4_fans() {
        let k = mk4();
        let idx = FanIndex::new(&k);
        assert!(idx.has_fan_of_size_at_least(6));
        assert!(!idx.is_four_element_fan(k.ground()));
    }

    #[test]
    fn rejects_bad_sequences() {
        let w4 = wheel(4).unwrap();
        assert!(!is_fan_ordering(&w4, &[0, 1]));
        assert!(!is_fan_ordering(&w4, &[0, 0, 1]));
        assert!(!is_fan_ordering(&w4, &[0, 2, 4]));
    }
}
