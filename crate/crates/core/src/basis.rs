//! Fixed-basis removability: removable elements, `(N, B)`-robust and
//! `(N, B)`-strong elements.

use crate::connectivity::is_3_connected;
use crate::elasticity::{co_delete, has_minor, si_contract, ClassId, RemovalProfile};
use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::matroid::Matroid;

/// A basis `B` of a particular matroid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasisContext {
    b: SubsetMask,
}

impl BasisContext {
    pub fn new(m: &Matroid, b: SubsetMask) -> Result<Self> {
        if !b.is_subset_of(m.ground()) || !m.is_basis(b) {
            return Err(Error::InvalidParameter(format!("{b} is not a basis")));
        }
        Ok(BasisContext { b })
    }

    pub fn basis(&self) -> SubsetMask {
        self.b
    }
}

pub fn bases(m: &Matroid) -> Vec<SubsetMask> {
    m.bases()
}

/// `e ∈ B` with `si(M/e)` 3-connected, or `e ∉ B` with `co(M\e)` 3-connected.
pub fn removable_elements(m: &Matroid, ctx: &BasisContext) -> SubsetMask {
    (0..m.size())
        .filter(|&e| {
            if ctx.b.contains(e) {
                is_3_connected(&si_contract(m, e))
            } else {
                is_3_connected(&co_delete(m, e))
            }
        })
        .collect()
}

/// `e ∈ B` with `M/e` having an `N`-minor, or `e ∉ B` with `M\e` having one.
pub fn nb_robust(m: &Matroid, n: &Matroid, ctx: &BasisContext) -> SubsetMask {
    (0..m.size())
        .filter(|&e| {
            if ctx.b.contains(e) {
                has_minor(&m.contract(e), n)
            } else {
                has_minor(&m.delete(e), n)
            }
        })
        .collect()
}

/// `e ∈ B` with `si(M/e)` 3-connected with an `N`-minor, or `e ∉ B` with
/// `co(M\e)` 3-connected with an `N`-minor.
pub fn nb_strong(m: &Matroid, n: &Matroid, ctx: &BasisContext) -> SubsetMask {
    (0..m.size())
        .filter(|&e| {
            let reduced = if ctx.b.contains(e) { si_contract(m, e) } else { co_delete(m, e) };
            is_3_connected(&reduced) && has_minor(&reduced, n)
        })
        .collect()
}

/// Mask-level versions over a precomputed [`RemovalProfile`].
pub struct BasisQueries<'a> {
    profile: &'a RemovalProfile,
    ground: SubsetMask,
}

impl<'a> BasisQueries<'a> {
    pub fn new(m: &Matroid, profile: &'a RemovalProfile) -> Self {
        BasisQueries { profile, ground: m.ground() }
    }

    pub fn removable(&self, b: SubsetMask) -> SubsetMask {
        (b & self.profile.si_3conn()) | ((self.ground - b) & self.profile.co_3conn())
    }

    pub fn robust(&self, n: ClassId, b: SubsetMask) -> SubsetMask {
        (b & self.profile.contract_has(n)) | ((self.ground - b) & self.profile.delete_has(n))
    }

    pub fn strong(&self, n: ClassId, b: SubsetMask) -> SubsetMask {
        let si = self.profile.si_3conn() & self.profile.si_has(n);
        let co = self.profile.co_3conn() & self.profile.co_has(n);
        (b & si) | ((self.ground - b) & co)
    }
}
