use std::sync::Arc;

use serde::Serialize;

use crate::connectivity::is_3_connected;
use crate::elasticity::minors::{has_minor, ClassId, MinorOracle};
use crate::mask::SubsetMask;
use crate::matroid::Matroid;
use crate::structures::{Orientation, ThetaSeparator};

/// `si(M/e)`.
pub fn si_contract(m: &Matroid, e: usize) -> Matroid {
    m.contract(e).simplify().0
}

/// `co(M\e)`.
pub fn co_delete(m: &Matroid, e: usize) -> Matroid {
    m.delete(e).cosimplify().0
}

pub fn is_elastic(m: &Matroid, e: usize) -> bool {
    is_3_connected(&si_contract(m, e)) && is_3_connected(&co_delete(m, e))
}

pub fn elastic_elements(m: &Matroid) -> SubsetMask {
    (0..m.size()).filter(|&e| is_elastic(m, e)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ElementDetail {
    pub si_3conn: bool,
    pub co_3conn: bool,
    pub si_has_n: Option<bool>,
    pub co_has_n: Option<bool>,
}

impl ElementDetail {
    pub fn is_elastic(&self) -> bool {
        self.si_3conn && self.co_3conn
    }

    pub fn is_n_elastic(&self) -> bool {
        self.is_elastic() && self.si_has_n == Some(true) && self.co_has_n == Some(true)
    }

    pub fn is_n_revealing(&self) -> bool {
        (self.si_has_n == Some(true) && !self.si_3conn) || (self.co_has_n == Some(true) && !self.co_3conn)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElasticityReport {
    pub elastic: SubsetMask,
    pub n_elastic: SubsetMask,
    pub n_revealing: SubsetMask,
    pub details: Vec<ElementDetail>,
}

impl ElasticityReport {
    fn from_details(details: Vec<ElementDetail>) -> Self {
        let pick = |f: fn(&ElementDetail) -> bool| details.iter().enumerate().filter(|(_, d)| f(d)).map(|(e, _)| e).collect();
        ElasticityReport {
            elastic: pick(ElementDetail::is_elastic),
            n_elastic: pick(ElementDetail::is_n_elastic),
            n_revealing: pick(ElementDetail::is_n_revealing),
            details,
        }
    }
}

/// Per-element data with `N`-minor membership computed directly by `has_minor`.
pub fn analyze(m: &Matroid, n: Option<&Matroid>) -> ElasticityReport {
    let details = (0..m.size())
        .map(|e| {
            let si = si_contract(m, e);
            let co = co_delete(m, e);
            ElementDetail {
                si_3conn: is_3_connected(&si),
                co_3conn: is_3_connected(&co),
                si_has_n: n.map(|n| has_minor(&si, n)),
                co_has_n: n.map(|n| has_minor(&co, n)),
            }
        })
        .collect();
    ElasticityReport::from_details(details)
}

pub fn n_elastic_elements(m: &Matroid, n: &Matroid) -> SubsetMask {
    analyze(m, Some(n)).n_elastic
}

pub fn n_revealing_elements(m: &Matroid, n: &Matroid) -> SubsetMask {
    analyze(m, Some(n)).n_revealing
}

/// The Θ-separator reveals `N`: with `(M', N')` equal to `(M, N)` or
/// `(M*, N*)` by orientation, some cosegment element of the Θ-structure is
/// `N'`-revealing in `M'`.
pub fn reveals(m: &Matroid, sep: &ThetaSeparator, n: &Matroid) -> bool {
    let (host, target) = match sep.orientation {
        Orientation::Primal => (m.clone(), n.clone()),
        Orientation::Dual => (m.dual(), n.dual()),
    };
    let revealing = n_revealing_elements(&host, &target);
    !(revealing & sep.z).is_empty()
}

/// Minor classes of `si(M/e)`, `co(M\e)`, `M/e`, `M\e` for one element.
#[derive(Clone, Debug)]
pub struct ElementMinors {
    pub si_3conn: bool,
    pub co_3conn: bool,
    pub si: Arc<Vec<ClassId>>,
    pub co: Arc<Vec<ClassId>>,
    pub contract: Arc<Vec<ClassId>>,
    pub delete: Arc<Vec<ClassId>>,
}

fn contains(set: &[ClassId], id: ClassId) -> bool {
    set.binary_search(&id).is_ok()
}

/// Everything about single-element removals of `M` needed to answer
/// elasticity and removability questions for any `N` by set lookups.
#[derive(Clone, Debug)]
pub struct RemovalProfile {
    pub elements: Vec<ElementMinors>,
}

impl RemovalProfile {
    pub fn new(m: &Matroid, oracle: &MinorOracle) -> Self {
        let elements = (0..m.size())
            .map(|e| {
                let si = si_contract(m, e);
                let co = co_delete(m, e);
                ElementMinors {
                    si_3conn: is_3_connected(&si),
                    co_3conn: is_3_connected(&co),
                    si: oracle.minor_classes(&si),
                    co: oracle.minor_classes(&co),
                    contract: oracle.minor_classes(&m.contract(e)),
                    delete: oracle.minor_classes(&m.delete(e)),
                }
            })
            .collect();
        RemovalProfile { elements }
    }

    pub fn elastic(&self) -> SubsetMask {
        self.select(|d| d.si_3conn && d.co_3conn)
    }

    pub fn si_3conn(&self) -> SubsetMask {
        self.select(|d| d.si_3conn)
    }

    pub fn co_3conn(&self) -> SubsetMask {
        self.select(|d| d.co_3conn)
    }

    pub fn report(&self, n: ClassId) -> ElasticityReport {
        let details = self
            .elements
            .iter()
            .map(|d| ElementDetail {
                si_3conn: d.si_3conn,
                co_3conn: d.co_3conn,
                si_has_n: Some(contains(&d.si, n)),
                co_has_n: Some(contains(&d.co, n)),
            })
            .collect();
        ElasticityReport::from_details(details)
    }

    /// Elements `e` with `M/e` having an `N`-minor.
    pub fn contract_has(&self, n: ClassId) -> SubsetMask {
        self.select(|d| contains(&d.contract, n))
    }

    pub fn delete_has(&self, n: ClassId) -> SubsetMask {
        self.select(|d| contains(&d.delete, n))
    }

    pub fn si_has(&self, n: ClassId) -> SubsetMask {
        self.select(|d| contains(&d.si, n))
    }

    pub fn co_has(&self, n: ClassId) -> SubsetMask {
        self.select(|d| contains(&d.co, n))
    }

    fn select(&self, f: impl Fn(&ElementMinors) -> bool) -> SubsetMask {
        self.elements.iter().enumerate().filter(|(_, d)| f(d)).map(|(e, _)| e).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{fano, l8, theta, uniform};
    use crate::structures::theta_separators;

    #[test]
    fn l8_elasticity() {
        let l = l8();
        let u24 = uniform(2, 4).unwrap();
        let report = analyze(&l, Some(&u24));
        assert!(report.elastic.contains(0));
        assert!(!report.n_elastic.contains(0));
        assert!(SubsetMask::from_elements([1, 2, 3]).is_subset_of(report.n_elastic));
    }

    #[test]
    fn small_counterexamples() {
        let u13 = uniform(1, 3).unwrap();
        assert!(n_elastic_elements(&uniform(2, 5).unwrap(), &u13).is_empty());
        assert!(n_elastic_elements(&fano(), &u13).is_empty());
        for e in 0..7 {
            assert!(crate::is_isomorphic(&si_contract(&fano(), e), &uniform(2, 3).unwrap()));
        }
    }

    #[test]
    fn theta4_has_no_elastic_elements() {
        let (t, _) = theta(4).unwrap();
        assert!(elastic_elements(&t).is_empty());
        let u23 = uniform(2, 3).unwrap();
        for sep in theta_separators(&t) {
            assert!(reveals(&t, &sep, &u23));
        }
    }

    #[test]
    fn profile_agrees_with_direct_route() {
        let oracle = MinorOracle::global();
        for m in [l8(), fano(), theta(4).unwrap().0] {
            let profile = RemovalProfile::new(&m, oracle);
            for (_, n) in oracle.three_connected_minors(&m) {
                let direct = analyze(&m, Some(&n));
                let fast = profile.report(oracle.class_of(&n));
                assert_eq!(direct, fast);
            }
        }
    }

    #[test]
    fn si_route_matches_contraction_route_for_simple_targets() {
        // N simple: si(M/e) has an N-minor iff M/e does
        let oracle = MinorOracle::global();
        for m in [l8(), fano(), theta(4).unwrap().0] {
            let profile = RemovalProfile::new(&m, oracle);
            for (id, n) in oracle.three_connected_minors(&m) {
                if n.size() >= 4 {
                    assert_eq!(profile.si_has(id), profile.contract_has(id));
                    assert_eq!(profile.co_has(id), profile.delete_has(id));
                }
            }
        }
    }
}
