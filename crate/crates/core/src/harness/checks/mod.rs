//! Registry of named checks. Each check walks one catalog entry, counts the
//! instances it examined or filtered (hypotheses not met) and records
//! violations with enough data to replay them.

mod lemmas;
mod removal;
mod theorems;

use std::sync::OnceLock;

use serde_json::{json, Value};

use crate::canonical::{canonical_form, CanonicalForm};
use crate::connectivity::VerticalSep3;
use crate::constructions::mk4;
use crate::elasticity::{ClassId, MinorOracle};
use crate::harness::instance::Instance;
use crate::harness::report::Tally;
use crate::mask::SubsetMask;
use crate::matroid::Matroid;
use crate::structures::{find_swirl_like_around_fan, ThetaSeparator};

/// Options that change what a check quantifies over.
#[derive(Clone, Debug, Default)]
pub struct CheckContext {
    /// Restricts `N`-quantified checks to these minor classes.
    pub minors: Option<Vec<CanonicalForm>>,
}

impl CheckContext {
    pub fn minor_filter(&self) -> Option<&[CanonicalForm]> {
        self.minors.as_deref()
    }
}

pub struct Check {
    pub id: &'static str,
    pub scope: &'static str,
    run: fn(&Instance, &CheckContext, &mut Tally),
}

impl Check {
    pub fn run(&self, inst: &Instance, ctx: &CheckContext) -> Tally {
        let mut tally = Tally::default();
        (self.run)(inst, ctx, &mut tally);
        tally
    }
}

macro_rules! check {
    ($id:literal, $scope:literal, $f:path) => {
        Check { id: $id, scope: $scope, run: $f }
    };
}

static REGISTRY: &[Check] = &[
    check!(
        "THM-ELASTIC4",
        "per matroid: 3-connected, |E| >= 4, no 4-element fan, no theta-separator => at least four elastic elements",
        theorems::elastic4
    ),
    check!(
        "THM-MAIN",
        "per (M, N), N a 3-connected minor class: no 4-element fan, no theta-separator revealing N, some N-revealing element => at least two N-elastic elements",
        theorems::main
    ),
    check!(
        "THM-MAXIMAL",
        "per (M, N, vertical 3-separation (X,e,Y)) with a witness of N in M/e meeting X in at most one element: every dominating maximal (X',e',Y') has two N-elastic elements in X', or X' u e' is a 4-element fan, or X' lies in a theta-separator revealing N",
        theorems::maximal
    ),
    check!(
        "THM-FANS",
        "as THM-MAXIMAL with r, r* >= 4, for dominating maximal separations whose X' u e' is a 4-element fan with f1 = e': elastic pattern by fan extension size, and the flower / M(K4) alternative when no element is elastic",
        theorems::fans
    ),
    check!(
        "THM-PW3",
        "per matroid: 3-connected, no 4-element fan, no theta-separator, exactly four elastic elements => path-width three",
        theorems::pw3
    ),
    check!(
        "THM-MINELTS2",
        "per (M, N), |E(N)| >= 4: no 4-element fan, no theta-separator revealing N, exactly two N-elastic elements => the N-revealing set K has an ordering giving a path of 3-separations, and M/e_i, M\\e_i have N-minors for i < k in every such ordering",
        theorems::min_elts2
    ),
    check!(
        "PROP-SMALLN",
        "per (M, N), N in {U(0,1), U(1,1), U(1,2), U(1,3), U(2,3)}: 3-connected, no 4-element fan, no theta-separator, r, r* >= 3, |E| >= 8 => at least four N-elastic elements, path-width three if exactly four",
        theorems::small_n
    ),
    check!(
        "WW-LB4",
        "per (M, B): 3-connected, no 4-element fan, |E| >= 4 => at least four elements removable with respect to B",
        removal::lb4
    ),
    check!(
        "WW-PW3",
        "per (M, B) with exactly four removable elements, hypotheses of WW-LB4 => path-width three",
        removal::pw3
    ),
    check!(
        "WW-EXISTS5",
        "per matroid: 3-connected, no 4-element fan, |E| >= 4 => some basis has at least five removable elements",
        removal::exists5
    ),
    check!(
        "THM-ROBUST-I",
        "per (M, N, B): 3-connected, no 4-element fan, |E| >= 5, two (N,B)-robust elements => two (N,B)-strong elements",
        removal::robust1
    ),
    check!(
        "THM-ROBUST-II",
        "per (M, N, B): hypotheses of THM-ROBUST-I, exactly two (N,B)-strong elements => (P, E - P) is a sequential 3-separation, P the robust set",
        removal::robust2
    ),
    check!(
        "LEM-BIXBY",
        "per (M, e), M 3-connected: si(M/e) or co(M\\e) is 3-connected",
        lemmas::bixby
    ),
    check!(
        "LEM-UNCROSS",
        "per (M, k), k in {1,2,3}, M k-connected: uncrossing of every pair of k-separating sets",
        lemmas::uncross
    ),
    check!(
        "LEM-ORTH",
        "per matroid, all partitions (X,{e},Y): e in cl(X) iff e not in cl*(Y)",
        lemmas::orthogonality
    ),
    check!(
        "LEM-3SEP1",
        "per (M, X, e), M 3-connected, X exactly 3-separating, e not in X: X u e is 3-separating iff e in cl(X) u cl*(X)",
        lemmas::three_sep1
    ),
    check!(
        "LEM-3SEP2",
        "per (M, X, e), M 3-connected, X exactly 3-separating, |X| >= 3, e in X: X - e exactly 3-separating iff e in exactly one of cl(X-e) n cl(Y), cl*(X-e) n cl*(Y)",
        lemmas::three_sep2
    ),
    check!(
        "LEM-VERT1",
        "per (M, e), M 3-connected: si(M/e) not 3-connected iff a vertical 3-separation has centre e; dually for co(M\\e) and cyclic 3-separations",
        lemmas::vertical1
    ),
    check!(
        "LEM-VERT2",
        "per vertical or cyclic 3-separation of a 3-connected matroid: closing Y off gives a separation of the same kind",
        lemmas::vertical2
    ),
    check!(
        "LEM-SEGDEL",
        "per (M, L, l), M 3-connected, L a segment with at least four elements, l in L: M\\l is 3-connected",
        lemmas::segment_delete
    ),
    check!(
        "LEM-TRIANGLE",
        "per (M, C*, e), M 3-connected, C* a rank-3 cocircuit, cl(C*) - e containing a triangle of M/e: si(M/e) is 3-connected",
        lemmas::triangle
    ),
    check!(
        "LEM-2SEP",
        "per (M, 2-separation, N, retained set of a witness), M connected: some side U meets E(N) in at most one element and M/u, M\\u keep N-minors when connected, for u in U",
        lemmas::two_sep
    ),
    check!(
        "LEM-BS45",
        "per (M, N, vertical (X,e,Y)) with Y u e closed and a witness of N in M/e meeting X in at most one element: M/x has an N-minor for x in X, at most one x' in X loses it under deletion, and then x' in cl*(Y), e in cl(X - x')",
        lemmas::bs45
    ),
    check!(
        "LEM-SMALLN1",
        "per (M, N), M 3-connected, r, r* >= 4, |E(N)| <= 3: every elastic element is N-elastic",
        lemmas::small_n1
    ),
    check!(
        "LEM-NELASTIC",
        "per (M, N, vertical (X,e,Y)), r* >= 4, Y u e closed, witness of N in M/e meeting X in at most one element: every elastic element of X is N-elastic",
        lemmas::n_elastic
    ),
    check!(
        "LEM-CORANK3",
        "per (M, N, cyclic (X,e,Y)), M rank 3, witness of N in M\\e meeting X in at most one element, X u e not a 4-element fan: at most one element of X is not N-elastic and it lies in cl(Y)",
        lemmas::corank3
    ),
    check!(
        "LEM-FAN-ELASTIC",
        "per maximal fan ordering of a 3-connected matroid with r, r* >= 4: elastic pattern by fan length, and the flower / M(K4) alternative for 4- and 5-element fans with no elastic element",
        lemmas::fan_elastic
    ),
    check!(
        "LEM-EXCEPTION",
        "per (M, theta-separator, element): segment elements w have si(M'/w) not 3-connected; cosegment elements z have co(M'\\z) not 3-connected unless no x in cl(W) makes (Z - z) u x a circuit",
        lemmas::exception
    ),
    check!(
        "LEM-THETA-ELASTIC",
        "per theta-separator S: no elastic element in a full theta; exactly one in a theta-minus unless S extends to a full theta",
        lemmas::theta_elastic
    ),
    check!(
        "LEM-THETAMAX",
        "per maximal vertical (X,e,Y) with X inside a theta-separator S: X is a rank-3 cocircuit in the dual configuration, or X u e is a circuit inside the cosegment elements",
        lemmas::theta_max
    ),
    check!(
        "LEM-THETA-REVEAL",
        "per (M, theta-separator, N): the three revealing conditions are equivalent, and all hold when |E(N)| <= 3",
        lemmas::theta_reveal
    ),
    check!(
        "LEM-THETA-A",
        "per (M, theta-separator with at least six elements, B): |cl(W) - B| >= |cl(W)| - 2, co(M\\w) 3-connected on cl(W); dually on cl*(Z)",
        removal::theta_a
    ),
    check!(
        "LEM-THETA-B",
        "per (M, theta-separator S with at least six elements revealing N, B): at least |S| - 4 elements of S are (N,B)-strong",
        removal::theta_b
    ),
    check!(
        "LEM-BS61",
        "per partition (X, Y) with |X|, |Y| >= 2: sequential 3-separation iff a path of 3-separations (P0, .., Pk, U) with |P0| = 2, |Pi| = 1 exists for U in {X, Y}",
        lemmas::bs61
    ),
];

pub fn registry() -> &'static [Check] {
    REGISTRY
}

pub fn find(id: &str) -> Option<&'static Check> {
    REGISTRY.iter().find(|c| c.id == id)
}

pub(crate) fn set(x: SubsetMask) -> Value {
    json!(x.to_vec())
}

pub(crate) fn sep_json(s: &VerticalSep3) -> Value {
    json!({ "x": set(s.x), "e": s.e, "y": set(s.y), "kind": s.kind })
}

pub(crate) fn theta_json(s: &ThetaSeparator) -> Value {
    json!({ "w": set(s.w), "z": set(s.z), "n": s.n, "variant": s.variant, "orientation": s.orientation })
}

/// A minor class as a lex01 line of its canonical labelling.
pub(crate) fn minor_json(id: ClassId) -> Value {
    let f = MinorOracle::global().form(id);
    json!(format!("{} {} {}", f.size(), f.rank(), f.to_bitstring()))
}

fn k4_form() -> &'static CanonicalForm {
    static FORM: OnceLock<CanonicalForm> = OnceLock::new();
    FORM.get_or_init(|| canonical_form(&mk4()))
}

/// Some `extra` elements outside `base` make the restriction isomorphic to M(K4).
pub(crate) fn k4_restriction(m: &Matroid, base: SubsetMask, extra: usize) -> Option<SubsetMask> {
    if base.len() + extra != 6 {
        return None;
    }
    (m.ground() - base)
        .subsets()
        .filter(|s| s.len() == extra)
        .map(|s| s | base)
        .find(|&s| m.rank(s) == 3 && canonical_form(&m.restrict(s)) == *k4_form())
}

/// The alternative offered when a fan has no elastic elements: up to duality,
/// a swirl-like flower `(A, {f1, f2}, {f3, f4}, B)` or an M(K4) restriction
/// on the fan plus `extra` further elements. The flower may be read from
/// either end of the fan.
pub(crate) fn fan_alternative(inst: &Instance, ord: &[usize], extra: Option<usize>) -> Option<Value> {
    let rev: Vec<usize> = ord.iter().rev().copied().collect();
    for (label, host) in [("primal", inst.m()), ("dual", inst.dual())] {
        for seq in [ord, rev.as_slice()] {
            if let Some(flower) = find_swirl_like_around_fan(host, seq) {
                let petals: Vec<Value> = flower.petals.iter().map(|p| set(*p)).collect();
                return Some(json!({ "flower": petals, "in": label }));
            }
        }
        if let Some(k) = extra {
            let base: SubsetMask = ord.iter().copied().collect();
            if let Some(s) = k4_restriction(host, base, k) {
                return Some(json!({ "mk4": set(s), "in": label }));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_ids_are_unique() {
        let mut ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), registry().len());
        assert!(find("LEM-BIXBY").is_some());
        assert!(find("NOPE").is_none());
    }
}
