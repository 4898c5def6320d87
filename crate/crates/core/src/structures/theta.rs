use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use crate::canonical::{canonical_form, CanonicalForm};
use crate::constructions::{theta, theta_minus};
use crate::mask::SubsetMask;
use crate::matroid::Matroid;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ThetaVariant {
    Full,
    Minus,
}

/// Which of `M`, `M*` restricts to Θ_n or Θ_n^- on `W ∪ Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    Primal,
    Dual,
}

/// A Θ-separator. `w` and `z` are the segment and cosegment elements of the
/// Θ-structure in the oriented matroid (`M` for primal, `M*` for dual).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ThetaSeparator {
    pub w: SubsetMask,
    pub z: SubsetMask,
    pub n: usize,
    pub variant: ThetaVariant,
    pub orientation: Orientation,
}

impl ThetaSeparator {
    pub fn set(&self) -> SubsetMask {
        self.w | self.z
    }

    /// The matroid in which this separator is a restriction to Θ_n or Θ_n^-.
    pub fn oriented(&self, m: &Matroid) -> Matroid {
        match self.orientation {
            Orientation::Primal => m.clone(),
            Orientation::Dual => m.dual(),
        }
    }

    /// The rank-2 side in `M` itself (`W` for primal, `Z` for dual orientation).
    pub fn rank_two_side(&self) -> SubsetMask {
        match self.orientation {
            Orientation::Primal => self.w,
            Orientation::Dual => self.z,
        }
    }

    /// The corank-2 side in `M` itself.
    pub fn corank_two_side(&self) -> SubsetMask {
        match self.orientation {
            Orientation::Primal => self.z,
            Orientation::Dual => self.w,
        }
    }
}

fn reference_form(n: usize, variant: ThetaVariant) -> CanonicalForm {
    static FORMS: OnceLock<Mutex<HashMap<(usize, ThetaVariant), CanonicalForm>>> = OnceLock::new();
    let forms = FORMS.get_or_init(Default::default);
    if let Some(f) = forms.lock().expect("theta form cache").get(&(n, variant)) {
        return f.clone();
    }
    let m = match variant {
        ThetaVariant::Full => theta(n).expect("n >= 2").0,
        ThetaVariant::Minus => theta_minus(n).expect("n >= 2").0,
    };
    let form = canonical_form(&m);
    forms.lock().expect("theta form cache").insert((n, variant), form.clone());
    form
}

/// Θ-structures `(W, Z)` of `m` itself (no host rank condition): `W` rank 2,
/// `Z` corank 2, `|Z| = n >= 3`, `|W| ∈ {n-1, n}`, and `m|(W ∪ Z)` isomorphic
/// to Θ_n or Θ_n^- accordingly.
pub fn theta_structures(m: &Matroid) -> Vec<(SubsetMask, SubsetMask, ThetaVariant)> {
    let ground = m.ground();
    let mut out = Vec::new();
    for z in ground.subsets() {
        let n = z.len();
        if n < 3 || m.corank(z) != 2 || 2 * n - 1 > m.size() {
            continue;
        }
        for w in (ground - z).subsets() {
            let variant = if w.len() == n {
                ThetaVariant::Full
            } else if w.len() + 1 == n {
                ThetaVariant::Minus
            } else {
                continue;
            };
            if m.rank(w) != 2 || m.rank(w | z) != n {
                continue;
            }
            if canonical_form(&m.restrict(w | z)) == reference_form(n, variant) {
                out.push((w, z, variant));
            }
        }
    }
    out
}

/// All Θ-separators, primal orientation first; empty unless `r(M), r*(M) >= 4`.
pub fn theta_separators(m: &Matroid) -> Vec<ThetaSeparator> {
    if m.full_rank() < 4 || m.full_corank() < 4 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (orientation, host) in [(Orientation::Primal, m.clone()), (Orientation::Dual, m.dual())] {
        for (w, z, variant) in theta_structures(&host) {
            out.push(ThetaSeparator {
                w,
                z,
                n: z.len(),
                variant,
                orientation,
            });
        }
    }
    out
}

/// Labelling `(w_1..w_k, z_1..z_n)` of a Θ-structure in which `(Z − z_i) ∪ w_i`
/// is a circuit for every `i <= k`; for Θ_n^- the unmatched cosegment element is `z_n`.
pub fn theta_labelling(m: &Matroid, w: SubsetMask, z: SubsetMask) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut ws = Vec::new();
    let mut zs = Vec::new();
    for wi in w.iter() {
        let mut partners = z.iter().filter(|&zi| m.is_circuit(z.without(zi).with(wi)));
        let zi = partners.next()?;
        if partners.next().is_some() || zs.contains(&zi) {
            return None;
        }
        ws.push(wi);
        zs.push(zi);
    }
    zs.extend(z.iter().filter(|zi| !zs.contains(zi)).collect::<Vec<_>>());
    Some((ws, zs))
}

/// Independent route to [`theta_structures`]: builds the labelling and
/// compares the restriction rank table with the relabelled reference.
pub fn matches_theta_labelled(m: &Matroid, w: SubsetMask, z: SubsetMask) -> Option<ThetaVariant> {
    let n = z.len();
    let variant = match w.len() {
        k if k == n => ThetaVariant::Full,
        k if k + 1 == n => ThetaVariant::Minus,
        _ => return None,
    };
    if n < 3 || m.rank(w) != 2 || m.corank(z) != 2 {
        return None;
    }
    let (ws, zs) = theta_labelling(m, w, z)?;
    let reference = match variant {
        ThetaVariant::Full => theta(n).ok()?.0,
        ThetaVariant::Minus => theta_minus(n).ok()?.0,
    };
    // reference element order: w_1..w_k, z_1..z_n
    let order: Vec<usize> = ws.iter().chain(&zs).copied().collect();
    let restricted = m.restrict(w | z);
    let position = |e: usize| (w | z).iter().position(|x| x == e).expect("element of S");
    let perm: Vec<usize> = order.iter().map(|&e| position(e)).collect();
    (restricted.permute(&perm).rank_table() == reference.rank_table()).then_some(variant)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{fano, l8, uniform, wheel};

    #[test]
    fn theta4_has_full_separator() {
        let (t, labels) = theta(4).unwrap();
        let seps = theta_separators(&t);
        assert!(!seps.is_empty());
        assert!(seps.iter().any(|s| s.set() == t.ground()
            && s.w == labels.w_mask()
            && s.orientation == Orientation::Primal
            && s.variant == ThetaVariant::Full));
    }

    #[test]
    fn no_separators_in_low_rank() {
        assert!(theta_separators(&l8()).is_empty());
        assert!(theta_separators(&fano()).is_empty());
        assert!(theta_separators(&uniform(3, 7).unwrap()).is_empty());
    }

    #[test]
    fn labelled_route_agrees() {
        for n in 3..=5 {
            let (t, labels) = theta(n).unwrap();
            assert_eq!(
                matches_theta_labelled(&t, labels.w_mask(), labels.z_mask()),
                Some(ThetaVariant::Full)
            );
            let (tm, ml) = theta_minus(n).unwrap();
            assert_eq!(
                matches_theta_labelled(&tm, ml.w_mask(), ml.z_mask()),
                Some(ThetaVariant::Minus)
            );
        }
        for host in [theta(4).unwrap().0, wheel(4).unwrap(), theta_minus(4).unwrap().0] {
            for (w, z, variant) in theta_structures(&host) {
                assert_eq!(matches_theta_labelled(&host, w, z), Some(variant));
            }
        }
    }

    #[test]
    fn dual_orientation_sides() {
        let (t, _) = theta(4).unwrap();
        let d = t.dual();
        for s in theta_separators(&d) {
            assert_eq!(d.rank(s.rank_two_side()), 2);
            assert_eq!(d.corank(s.corank_two_side()), 2);
        }
        assert!(theta_separators(&d).iter().any(|s| s.orientation == Orientation::Dual));
    }
}
