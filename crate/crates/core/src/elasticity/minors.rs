//! Minor testing up to isomorphism.
//!
//! Isomorphism classes are interned by canonical form. For each class the set
//! of classes of all its minors is computed once, recursively over single
//! deletions and contractions, so `has_minor` is a set lookup. Class ids are
//! internal: they depend on the order of first use and never appear in output.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::canonical::{canonical_form, CanonicalForm};
use crate::connectivity::is_3_connected;
use crate::matroid::Matroid;

pub type ClassId = u32;

#[derive(Default)]
struct State {
    ids: HashMap<CanonicalForm, ClassId>,
    by_table: HashMap<(u8, Vec<u8>), ClassId>,
    forms: Vec<CanonicalForm>,
    representatives: Vec<Arc<Matroid>>,
    minors: Vec<Option<Arc<Vec<ClassId>>>>,
    three_connected: Vec<Option<bool>>,
}

/// Interning table of isomorphism classes plus memoized minor-class sets.
///
/// All memo tables are pure caches: answers do not depend on what has been
/// cached before or on thread interleaving.
#[derive(Default)]
pub struct MinorOracle {
    state: Mutex<State>,
}

impl MinorOracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn global() -> &'static MinorOracle {
        static ORACLE: OnceLock<MinorOracle> = OnceLock::new();
        ORACLE.get_or_init(MinorOracle::new)
    }

    fn lock(&self) -> std::sync::MutexGuard<'_, State> {
        self.state.lock().expect("minor oracle lock")
    }

    pub fn class_of(&self, m: &Matroid) -> ClassId {
        let key = (m.size() as u8, m.rank_table().to_vec());
        if let Some(&id) = self.lock().by_table.get(&key) {
            return id;
        }
        let form = canonical_form(m);
        let mut st = self.lock();
        let id = match st.ids.get(&form) {
            Some(&id) => id,
            None => {
                let id = st.forms.len() as ClassId;
                st.ids.insert(form.clone(), id);
                st.forms.push(form);
                st.representatives.push(Arc::new(m.clone()));
                st.minors.push(None);
                st.three_connected.push(None);
                id
            }
        };
        st.by_table.insert(key, id);
        id
    }

    pub fn form(&self, id: ClassId) -> CanonicalForm {
        self.lock().forms[id as usize].clone()
    }

    pub fn representative(&self, id: ClassId) -> Arc<Matroid> {
        self.lock().representatives[id as usize].clone()
    }

    pub fn is_3_connected_class(&self, id: ClassId) -> bool {
        if let Some(flag) = self.lock().three_connected[id as usize] {
            return flag;
        }
        let flag = is_3_connected(&self.representative(id));
        self.lock().three_connected[id as usize] = Some(flag);
        flag
    }

    /// Sorted classes of all minors of `m`, including `m` itself.
    pub fn minor_classes(&self, m: &Matroid) -> Arc<Vec<ClassId>> {
        let id = self.class_of(m);
        if let Some(set) = &self.lock().minors[id as usize] {
            return set.clone();
        }
        let mut all = vec![id];
        for e in 0..m.size() {
            for child in [m.delete(e), m.contract(e)] {
                all.extend(self.minor_classes(&child).iter().copied());
            }
        }
        all.sort_unstable();
        all.dedup();
        let set = Arc::new(all);
        self.lock().minors[id as usize] = Some(set.clone());
        set
    }

    pub fn has_minor(&self, m: &Matroid, n: &Matroid) -> bool {
        if n.size() > m.size() || n.full_rank() > m.full_rank() || n.full_corank() > m.full_corank() {
            return false;
        }
        let target = self.class_of(n);
        self.minor_classes(m).binary_search(&target).is_ok()
    }

    /// Representatives of the 3-connected minor classes of `m`, ordered by canonical form.
    pub fn three_connected_minors(&self, m: &Matroid) -> Vec<(ClassId, Arc<Matroid>)> {
        let mut out: Vec<(CanonicalForm, ClassId, Arc<Matroid>)> = self
            .minor_classes(m)
            .iter()
            .filter(|&&id| self.is_3_connected_class(id))
            .map(|&id| (self.form(id), id, self.representative(id)))
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out.into_iter().map(|(_, id, rep)| (id, rep)).collect()
    }
}

/// `m` has a minor isomorphic to `n`.
pub fn has_minor(m: &Matroid, n: &Matroid) -> bool {
    MinorOracle::global().has_minor(m, n)
}

/// Reference implementation: brute force over every `(C, D)`, comparing canonical forms.
pub fn has_minor_brute_force(m: &Matroid, n: &Matroid) -> bool {
    let target = canonical_form(n);
    let ground = m.ground();
    ground.subsets().filter(|r| r.len() == n.size()).any(|r| {
        (ground - r).subsets().any(|c| {
            let (minor, _) = m.minor(c, ground - r - c);
            minor.full_rank() == n.full_rank() && canonical_form(&minor) == target
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{fano, mk4, theta, uniform};

    #[test]
    fn examples() {
        let u24 = uniform(2, 4).unwrap();
        assert!(has_minor(&uniform(2, 5).unwrap(), &u24));
        assert!(!has_minor(&mk4(), &u24));
        assert!(has_minor(&theta(3).unwrap().0, &uniform(2, 3).unwrap()));
        assert!(!has_minor(&fano(), &u24));
        assert!(has_minor(&fano(), &mk4()));
    }

    #[test]
    fn agrees_with_brute_force() {
        let hosts = [uniform(2, 5).unwrap(), mk4(), fano(), uniform(3, 5).unwrap()];
        let targets = [
            uniform(0, 1).unwrap(),
            uniform(1, 2).unwrap(),
            uniform(1, 3).unwrap(),
            uniform(2, 3).unwrap(),
            uniform(2, 4).unwrap(),
            mk4(),
            uniform(1, 1).unwrap().direct_sum(&uniform(0, 1).unwrap()).unwrap(),
        ];
        for h in &hosts {
            for t in &targets {
                assert_eq!(has_minor(h, t), has_minor_brute_force(h, t));
            }
        }
    }

    #[test]
    fn three_connected_minors_of_k4() {
        let oracle = MinorOracle::new();
        let classes = oracle.three_connected_minors(&mk4());
        let sizes: Vec<usize> = classes.iter().map(|(_, m)| m.size()).collect();
        // U00, U01, U11, U12, U13, U23, M(K4) and nothing on 4 or 5 elements
        assert!(classes.iter().all(|(_, m)| is_3_connected(m)));
        assert!(!sizes.contains(&4) && !sizes.contains(&5));
        assert_eq!(sizes.iter().filter(|&&s| s == 6).count(), 1);
        assert_eq!(classes.len(), 7);
    }
}
