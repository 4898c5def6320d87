//! Per-matroid analysis shared by all checks, computed on first use.

use std::sync::{Arc, OnceLock};

use crate::canonical::CanonicalForm;
use crate::connectivity::{cyclic_3_separations, is_3_connected, vertical_3_separations, VerticalSep3};
use crate::elasticity::{ClassId, ElasticityReport, MinorOracle, MinorWitness, RemovalProfile, WitnessIndex};
use crate::harness::catalog::{encode, CatalogEntry, CatalogFormat};
use crate::mask::SubsetMask;
use crate::matroid::Matroid;
use crate::structures::{theta_separators, FanIndex, ThetaSeparator};

pub struct Instance<'a> {
    pub entry: &'a CatalogEntry,
    conn3: OnceLock<bool>,
    dual: OnceLock<Matroid>,
    fans: OnceLock<FanIndex>,
    dual_fans: OnceLock<FanIndex>,
    thetas: OnceLock<Vec<ThetaSeparator>>,
    vertical: OnceLock<Vec<VerticalSep3>>,
    cyclic: OnceLock<Vec<VerticalSep3>>,
    profile: OnceLock<RemovalProfile>,
    dual_profile: OnceLock<RemovalProfile>,
    minors: OnceLock<Vec<(ClassId, Arc<Matroid>)>>,
    witnesses: OnceLock<WitnessIndex>,
    bases: OnceLock<Vec<SubsetMask>>,
}

impl<'a> Instance<'a> {
    pub fn new(entry: &'a CatalogEntry) -> Self {
        Instance {
            entry,
            conn3: OnceLock::new(),
            dual: OnceLock::new(),
            fans: OnceLock::new(),
            dual_fans: OnceLock::new(),
            thetas: OnceLock::new(),
            vertical: OnceLock::new(),
            cyclic: OnceLock::new(),
            profile: OnceLock::new(),
            dual_profile: OnceLock::new(),
            minors: OnceLock::new(),
            witnesses: OnceLock::new(),
            bases: OnceLock::new(),
        }
    }

    pub fn m(&self) -> &Matroid {
        &self.entry.matroid
    }

    pub fn lex01(&self) -> String {
        encode(self.m(), CatalogFormat::Lex01)
    }

    pub fn size(&self) -> usize {
        self.m().size()
    }

    pub fn rank(&self) -> usize {
        self.m().full_rank()
    }

    pub fn corank(&self) -> usize {
        self.m().full_corank()
    }

    pub fn is_3_connected(&self) -> bool {
        *self.conn3.get_or_init(|| is_3_connected(self.m()))
    }

    pub fn dual(&self) -> &Matroid {
        self.dual.get_or_init(|| self.m().dual())
    }

    pub fn fans(&self) -> &FanIndex {
        self.fans.get_or_init(|| FanIndex::new(self.m()))
    }

    pub fn dual_fans(&self) -> &FanIndex {
        self.dual_fans.get_or_init(|| FanIndex::new(self.dual()))
    }

    pub fn has_4_element_fan(&self) -> bool {
        self.fans().has_fan_of_size_at_least(4)
    }

    pub fn thetas(&self) -> &[ThetaSeparator] {
        self.thetas.get_or_init(|| theta_separators(self.m()))
    }

    /// Vertical 3-separations; empty unless 3-connected.
    pub fn vertical(&self) -> &[VerticalSep3] {
        self.vertical.get_or_init(|| vertical_3_separations(self.m()).unwrap_or_default())
    }

    pub fn cyclic(&self) -> &[VerticalSep3] {
        self.cyclic.get_or_init(|| cyclic_3_separations(self.m()).unwrap_or_default())
    }

    pub fn profile(&self) -> &RemovalProfile {
        self.profile.get_or_init(|| RemovalProfile::new(self.m(), MinorOracle::global()))
    }

    pub fn dual_profile(&self) -> &RemovalProfile {
        self.dual_profile.get_or_init(|| RemovalProfile::new(self.dual(), MinorOracle::global()))
    }

    pub fn elastic(&self) -> SubsetMask {
        self.profile().elastic()
    }

    pub fn report(&self, n: ClassId) -> ElasticityReport {
        self.profile().report(n)
    }

    /// 3-connected minor classes, ordered by canonical form.
    pub fn minors(&self) -> &[(ClassId, Arc<Matroid>)] {
        self.minors.get_or_init(|| MinorOracle::global().three_connected_minors(self.m()))
    }

    /// The 3-connected minors restricted to the given forms (all when `None`).
    pub fn minors_matching(&self, filter: Option<&[CanonicalForm]>) -> Vec<(ClassId, Arc<Matroid>)> {
        let oracle = MinorOracle::global();
        self.minors()
            .iter()
            .filter(|(id, _)| filter.is_none_or(|forms| forms.contains(&oracle.form(*id))))
            .cloned()
            .collect()
    }

    pub fn witnesses(&self) -> &WitnessIndex {
        self.witnesses.get_or_init(|| WitnessIndex::new(self.m()))
    }

    /// A witness of `n` with `e` contracted and at most one retained element in `x`.
    pub fn contract_witness(&self, n: ClassId, e: usize, x: SubsetMask) -> Option<MinorWitness> {
        self.witnesses()
            .witnesses_of_class(n)
            .iter()
            .find(|w| w.contract.contains(e) && (w.retained & x).len() <= 1)
            .copied()
    }

    pub fn delete_witness(&self, n: ClassId, e: usize, x: SubsetMask) -> Option<MinorWitness> {
        self.witnesses()
            .witnesses_of_class(n)
            .iter()
            .find(|w| w.delete.contains(e) && (w.retained & x).len() <= 1)
            .copied()
    }

    pub fn bases(&self) -> &[SubsetMask] {
        self.bases.get_or_init(|| self.m().bases())
    }

    /// Some Θ-separator reveals the minor class `n`.
    ///
    /// `N*`-revealing in `M*` is the same as `N`-revealing in `M`, because
    /// `si(M*/e) = co(M\e)*` and 3-connectivity is invariant under duality, so
    /// both orientations test the stored `z` against `N`-revealing elements of `M`.
    pub fn revealing_thetas(&self, n: ClassId) -> Vec<ThetaSeparator> {
        if self.thetas().is_empty() {
            return Vec::new();
        }
        let revealing = self.report(n).n_revealing;
        self.thetas().iter().filter(|s| !(s.z & revealing).is_empty()).copied().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elasticity::reveals;
    use crate::harness::catalog::{named_constructions, resolve_catalog};

    #[test]
    fn revealing_thetas_agree_with_the_oriented_definition() {
        let mut catalog = named_constructions(8);
        catalog.extend(resolve_catalog("gen:gf3:8", Some(8)).unwrap().into_iter().filter(|e| e.matroid.size() == 8));
        let mut compared = 0;
        for entry in &catalog {
            let inst = Instance::new(entry);
            if inst.thetas().is_empty() {
                continue;
            }
            for (id, n) in inst.minors() {
                let fast = inst.revealing_thetas(*id);
                for sep in inst.thetas() {
                    assert_eq!(fast.contains(sep), reveals(inst.m(), sep, n), "{} {:?}", entry.id, sep);
                    compared += 1;
                }
            }
        }
        assert!(compared > 0);
    }
}
