//! Labelled minor witnesses: the pairs `(C, D)` with `M/C\D` isomorphic to `N`.

use std::collections::HashMap;

use serde::Serialize;

use crate::canonical::canonical_form;
use crate::connectivity::is_3_connected;
use crate::elasticity::minors::{ClassId, MinorOracle};
use crate::mask::SubsetMask;
use crate::matroid::Matroid;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MinorWitness {
    pub contract: SubsetMask,
    pub delete: SubsetMask,
    pub retained: SubsetMask,
}

/// Minors of `M` on a fixed retained set `R` depend on `C` only through
/// `cl(C)`; calls `visit(C, D, minor)` once per distinct minor with every
/// `(C, D)` pair realizing it.
fn for_each_minor<F>(m: &Matroid, retained_filter: impl Fn(SubsetMask) -> bool, mut visit: F)
where
    F: FnMut(SubsetMask, &[SubsetMask], &Matroid),
{
    let ground = m.ground();
    for r in ground.subsets() {
        if !retained_filter(r) {
            continue;
        }
        let outside = ground - r;
        let mut groups: Vec<(SubsetMask, Vec<SubsetMask>)> = Vec::new();
        let mut slot: HashMap<SubsetMask, usize> = HashMap::new();
        for c in outside.subsets() {
            let key = m.closure(c);
            let idx = *slot.entry(key).or_insert_with(|| {
                groups.push((c, Vec::new()));
                groups.len() - 1
            });
            groups[idx].1.push(c);
        }
        for (first, contracts) in &groups {
            let (minor, _) = m.minor(*first, outside - *first);
            visit(outside, contracts, &minor);
        }
    }
}

/// Every witness of `n` in `m`, ordered by retained set then contracted set.
pub fn minor_witnesses(m: &Matroid, n: &Matroid) -> Vec<MinorWitness> {
    let target = canonical_form(n);
    let mut out = Vec::new();
    for_each_minor(
        m,
        |r| r.len() == n.size(),
        |outside, contracts, minor| {
            if minor.full_rank() == n.full_rank() && canonical_form(minor) == target {
                out.extend(contracts.iter().map(|&c| MinorWitness {
                    contract: c,
                    delete: outside - c,
                    retained: m.ground() - outside,
                }));
            }
        },
    );
    out.sort_by_key(|w| (w.retained, w.contract));
    out
}

/// All witnesses of all 3-connected minors of a matroid, grouped by class.
pub struct WitnessIndex {
    by_class: HashMap<ClassId, Vec<MinorWitness>>,
}

impl WitnessIndex {
    pub fn new(m: &Matroid) -> Self {
        Self::with_oracle(m, MinorOracle::global())
    }

    pub fn with_oracle(m: &Matroid, oracle: &MinorOracle) -> Self {
        let mut by_class: HashMap<ClassId, Vec<MinorWitness>> = HashMap::new();
        let ground = m.ground();
        for_each_minor(
            m,
            |_| true,
            |outside, contracts, minor| {
                if !is_3_connected(minor) {
                    return;
                }
                let id = oracle.class_of(minor);
                by_class.entry(id).or_default().extend(contracts.iter().map(|&c| MinorWitness {
                    contract: c,
                    delete: outside - c,
                    retained: ground - outside,
                }));
            },
        );
        for list in by_class.values_mut() {
            list.sort_by_key(|w| (w.retained, w.contract));
        }
        WitnessIndex { by_class }
    }

    pub fn witnesses_of_class(&self, id: ClassId) -> &[MinorWitness] {
        self.by_class.get(&id).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Witnesses for a 3-connected `n` (empty if `n` is not 3-connected).
    pub fn witnesses(&self, n: &Matroid) -> &[MinorWitness] {
        self.witnesses_of_class(MinorOracle::global().class_of(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{l8, mk4, uniform};
    use crate::elasticity::minors::has_minor;

    #[test]
    fn witnesses_realize_target() {
        let u24 = uniform(2, 4).unwrap();
        let host = uniform(2, 5).unwrap();
        let ws = minor_witnesses(&host, &u24);
        // delete any one of five elements
        assert_eq!(ws.len(), 5);
        for w in &ws {
            let (minor, _) = host.minor(w.contract, w.delete);
            assert!(crate::is_isomorphic(&minor, &u24));
            assert!(w.contract.is_empty());
        }
        assert!(minor_witnesses(&mk4(), &u24).is_empty());
    }

    #[test]
    fn index_matches_direct_enumeration() {
        let l = l8();
        let index = WitnessIndex::new(&l);
        for n in [uniform(2, 4).unwrap(), uniform(2, 3).unwrap(), uniform(1, 3).unwrap(), mk4()] {
            let direct = minor_witnesses(&l, &n);
            assert_eq!(index.witnesses(&n), direct.as_slice());
            assert_eq!(!direct.is_empty(), has_minor(&l, &n));
        }
    }

    #[test]
    fn l8_delete_e_has_u24_containing_y() {
        let l = l8();
        let y = SubsetMask::from_elements([5, 6, 7]);
        let ws = minor_witnesses(&l, &uniform(2, 4).unwrap());
        assert!(ws.iter().any(|w| w.delete.contains(4) && y.is_subset_of(w.retained)));
    }
}
