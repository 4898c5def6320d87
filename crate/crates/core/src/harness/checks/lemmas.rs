use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde_json::json;

use super::{fan_alternative, minor_json, sep_json, set, theta_json, CheckContext};
use crate::canonical::canonical_form;
use crate::connectivity::{
    close_off, is_3_connected, is_connected, is_maximal_among, is_n_connected, is_sequential_3_separation,
    is_valid_sep, k_separations, lambda,
};
use crate::constructions::theta;
use crate::elasticity::MinorOracle;
use crate::harness::instance::Instance;
use crate::harness::report::Tally;
use crate::mask::SubsetMask;
use crate::matroid::Matroid;
use crate::structures::{segments, Orientation, ThetaVariant};

pub(super) fn bixby(inst: &Instance, _: &CheckContext, t: &mut Tally) {
    if !inst.is_3_connected() {
        t.filter();
        return;
    }
    let p = inst.profile();
    let either = p.si_3conn() | p.co_3conn();
    for e in 0..inst.size() {
        t.expect(either.contains(e), || json!({ "element": e }));
    }
}

pub(super) fn uncross(inst: &Instance, _: &CheckContext, t: &mut Tally) {
    let m = inst.m();
    let n = m.size();
    for k in 1..=3usize {
        if !is_n_connected(m, k) {
            t.filter();
            continue;
        }
        let separating: Vec<SubsetMask> = m.ground().subsets().filter(|&x| lambda(m, x) < k).collect();
        let mut failure = None;
        'pairs: for (i, &x) in separating.iter().enumerate() {
            for &y in &separating[i..] {
                let union_ok = (x & y).len() + 1 < k || lambda(m, x | y) < k;
                let meet_ok = n - (x | y).len() + 1 < k || lambda(m, x & y) < k;
                if !(union_ok && meet_ok) {
                    failure = Some((x, y));
                    break 'pairs;
                }
            }
        }
        t.expect(failure.is_none(), || {
            let (x, y) = failure.expect("failure recorded");
            json!({ "k": k, "x": set(x), "y": set(y) })
        });
    }
}

pub(super) fn orthogonality(inst: &Instance, _: &CheckContext, t: &mut Tally) {
    let m = inst.m();
    let mut failure = None;
    'all: for e in 0..m.size() {
        let rest = m.ground().without(e);
        for x in rest.subsets() {
            let y = rest - x;
            if m.closure(x).contains(e) == m.coclosure(y).contains(e) {
                failure = Some((x, e));
                break 'all;
            }
        }
    }
    t.expect(failure.is_none(), || {
        let (x, e) = failure.expect("failure recorded");
        json!({ "x": set(x), "e": e })
    });
}

fn exactly_3_separating(m: &Matroid) -> impl Iterator<Item = SubsetMask> + '_ {
    m.ground().subsets().filter(move |&x| lambda(m, x) == 2)
}

pub(super) fn three_sep1(inst: &Instance, _: &CheckContext, t: &mut Tally) {
    if !inst.is_3_connected() {
        t.filter();
        return;
    }
    let m = inst.m();
    for x in exactly_3_separating(m) {
        let spans = m.closure(x) | m.coclosure(x);
        for e in (m.ground() - x).iter() {
            let grows = lambda(m, x.with(e)) <= 2;
            t.expect(grows == spans.contains(e), || json!({ "x": set(x), "e": e, "separating": grows }));
        }
    }
}

pub(super) fn three_sep2(inst: &Instance, _: &CheckContext, t: &mut Tally) {
    if !inst.is_3_connected() {
        t.filter();
        return;
    }
    let m = inst.m();
    for x in exactly_3_separating(m).filter(|x| x.len() >= 3) {
        let y = m.ground() - x;
        for e in x.iter() {
            let smaller = x.without(e);
            let lhs = lambda(m, smaller) == 2;
            let in_cl = (m.closure(smaller) & m.closure(y)).contains(e);
            let in_cocl = (m.coclosure(smaller) & m.coclosure(y)).contains(e);
            t.expect(lhs == (in_cl != in_cocl), || {
                json!({ "x": set(x), "e": e, "exact": lhs, "in_cl": in_cl, "in_cocl": in_cocl })
            });
        }
    }
}

pub(super) fn vertical1(inst: &Instance, _: &CheckContext, t: &mut Tally) {
    if !inst.is_3_connected() {
        t.filter();
        return;
    }
    let p = inst.profile();
    let v_centres: SubsetMask = inst.vertical().iter().map(|s| s.e).collect();
    let c_centres: SubsetMask = inst.cyclic().iter().map(|s| s.e).collect();
    for e in 0..inst.size() {
        let si_bad = !p.si_3conn().contains(e);
        let co_bad = !p.co_3conn().contains(e);
        t.expect(si_bad == v_centres.contains(e) && co_bad == c_centres.contains(e), || {
            json!({
                "element": e,
                "si_not_3connected": si_bad,
                "vertical_centre": v_centres.contains(e),
                "co_not_3connected": co_bad,
                "cyclic_centre": c_centres.contains(e),
            })
        });
    }
}

pub(super) fn vertical2(inst: &Instance, _: &CheckContext, t: &mut Tally) {
    if !inst.is_3_connected() {
        t.filter();
        return;
    }
    for sep in inst.vertical().iter().chain(inst.cyclic()) {
        let closed = close_off(inst.m(), sep);
        t.expect(is_valid_sep(inst.m(), &closed), || json!({ "separation": sep_json(sep), "closed": sep_json(&closed) }));
    }
}

pub(super) fn segment_delete(inst: &Instance, _: &CheckContext, t: &mut Tally) {
    if !inst.is_3_connected() {
        t.filter();
        return;
    }
    let m = inst.m();
    for l in segments(m).into_iter().filter(|l| l.len() >= 4) {
        for e in l.iter() {
            t.expect(is_3_connected(&m.delete(e)), || json!({ "segment": set(l), "deleted": e }));
        }
    }
}

/// `T` is a triangle of `M/e` (`e ∉ T`).
fn is_triangle_after_contracting(m: &Matroid, t: SubsetMask, e: usize) -> bool {
    let with_e = |s: SubsetMask| m.rank(s.with(e));
    t.len() == 3 && with_e(t) == 3 && t.subsets().filter(|s| s.len() == 2).all(|s| with_e(s) == 3)
}

pub(super) fn triangle(inst: &Instance, _: &CheckContext, t: &mut Tally) {
    if !inst.is_3_connected() {
        t.filter();
        return;
    }
    let m = inst.m();
    let si3 = inst.profile().si_3conn();
    for c in m.cocircuits().into_iter().filter(|&c| m.rank(c) == 3) {
        let cl = m.closure(c);
        for e in c.iter() {
            let pool = cl.without(e);
            let found = pool.subsets().find(|&s| is_triangle_after_contracting(m, s, e));
            match found {
                None => t.filter(),
                Some(tri) => t.expect(si3.contains(e), || json!({ "cocircuit": set(c), "e": e, "triangle": set(tri) })),
            }
        }
    }
}

pub(super) fn two_sep(inst: &Instance, ctx: &CheckContext, t: &mut Tally) {
    let m = inst.m();
    if !is_connected(m) {
        t.filter();
        return;
    }
    let seps = k_separations(m, 2);
    if seps.is_empty() {
        return;
    }
    let profile = inst.profile();
    // connectivity of M/u and M\u does not depend on N
    let contract_connected: SubsetMask = (0..m.size()).filter(|&u| is_connected(&m.contract(u))).collect();
    let delete_connected: SubsetMask = (0..m.size()).filter(|&u| is_connected(&m.delete(u))).collect();
    for (id, _) in inst.minors_matching(ctx.minor_filter()) {
        let keep_c = profile.contract_has(id);
        let keep_d = profile.delete_has(id);
        let moreover = |u: SubsetMask| {
            (u & contract_connected).is_subset_of(keep_c) && (u & delete_connected).is_subset_of(keep_d)
        };
        let retained: BTreeSet<SubsetMask> = inst.witnesses().witnesses_of_class(id).iter().map(|w| w.retained).collect();
        for &x in &seps {
            let y = m.ground() - x;
            for &r in &retained {
                let ok = [x, y].into_iter().any(|u| (u & r).len() <= 1 && moreover(u));
                t.expect(ok, || json!({ "minor": minor_json(id), "x": set(x), "y": set(y), "retained": set(r) }));
            }
        }
    }
}

/// Vertical separations with `Y ∪ {e}` closed and a witness of `N` in `M/e`
/// meeting `X` in at most one element, for each minor class.
fn closed_witnessed(
    inst: &Instance,
    ctx: &CheckContext,
    t: &mut Tally,
    mut visit: impl FnMut(crate::elasticity::ClassId, &crate::connectivity::VerticalSep3, &mut Tally),
) {
    let m = inst.m();
    for (id, _) in inst.minors_matching(ctx.minor_filter()) {
        for sep in inst.vertical() {
            let side = sep.y_with_e();
            if m.closure(side) != side || inst.contract_witness(id, sep.e, sep.x).is_none() {
                t.filter();
                continue;
            }
            visit(id, sep, t);
        }
    }
}

pub(super) fn bs45(inst: &Instance, ctx: &CheckContext, t: &mut Tally) {
    if !inst.is_3_connected() {
        t.filter();
        return;
    }
    let m = inst.m();
    let profile = inst.profile();
    closed_witnessed(inst, ctx, t, |id, sep, t| {
        let contract_ok = sep.x.is_subset_of(profile.contract_has(id));
        let lose = sep.x - profile.delete_has(id);
        let exception_ok = match lose.len() {
            0 => true,
            1 => {
                let x = lose.first().expect("one element");
                m.coclosure(sep.y).contains(x) && m.closure(sep.x.without(x)).contains(sep.e)
            }
            _ => false,
        };
        t.expect(contract_ok && exception_ok, || {
            json!({ "minor": minor_json(id), "separation": sep_json(sep), "contract_ok": contract_ok, "deletion_losers": set(lose) })
        });
    });
}

pub(super) fn small_n1(inst: &Instance, ctx: &CheckContext, t: &mut Tally) {
    if !inst.is_3_connected() || inst.rank() < 4 || inst.corank() < 4 {
        t.filter();
        return;
    }
    let elastic = inst.elastic();
    for (id, n) in inst.minors_matching(ctx.minor_filter()) {
        if n.size() > 3 {
            t.filter();
            continue;
        }
        let n_elastic = inst.report(id).n_elastic;
        t.expect(elastic.is_subset_of(n_elastic), || {
            json!({ "minor": minor_json(id), "elastic": set(elastic), "n_elastic": set(n_elastic) })
        });
    }
}

pub(super) fn n_elastic(inst: &Instance, ctx: &CheckContext, t: &mut Tally) {
    if !inst.is_3_connected() || inst.corank() < 4 {
        t.filter();
        return;
    }
    let elastic = inst.elastic();
    closed_witnessed(inst, ctx, t, |id, sep, t| {
        let n_elastic = inst.report(id).n_elastic;
        let missing = (elastic & sep.x) - n_elastic;
        t.expect(missing.is_empty(), || json!({ "minor": minor_json(id), "separation": sep_json(sep), "elastic_not_n_elastic": set(missing) }));
    });
}

pub(super) fn corank3(inst: &Instance, ctx: &CheckContext, t: &mut Tally) {
    if !inst.is_3_connected() || inst.rank() != 3 {
        t.filter();
        return;
    }
    let m = inst.m();
    for (id, _) in inst.minors_matching(ctx.minor_filter()) {
        let n_elastic = inst.report(id).n_elastic;
        for sep in inst.cyclic() {
            if inst.fans().is_four_element_fan(sep.x_with_e()) || inst.delete_witness(id, sep.e, sep.x).is_none() {
                t.filter();
                continue;
            }
            let others = sep.x - n_elastic;
            let ok = match others.first() {
                None => true,
                Some(x) => others.len() == 1 && m.closure(sep.y).contains(x),
            };
            t.expect(ok, || json!({ "minor": minor_json(id), "separation": sep_json(sep), "not_n_elastic": set(others) }));
        }
    }
}

/// Conclusions for one ordering `f` of a maximal fan; `Err` carries the failing part.
fn fan_pattern(inst: &Instance, f: &[usize]) -> Result<(), serde_json::Value> {
    let n = f.len();
    let found = inst.elastic() & f.iter().copied().collect();
    let ok = match n {
        4 => found.is_empty() || found == SubsetMask::from_elements([f[1], f[2]]),
        5 => found.is_empty() || found == SubsetMask::singleton(f[2]),
        _ => found.is_empty(),
    };
    if !ok {
        return Err(json!({ "fan": f, "elastic": set(found) }));
    }
    if n > 5 || !found.is_empty() || fan_alternative(inst, &f[..4], None).is_some() {
        return Ok(());
    }
    let base: SubsetMask = f.iter().copied().collect();
    if n == 5 && [inst.m(), inst.dual()].into_iter().any(|h| super::k4_restriction(h, base, 1).is_some()) {
        return Ok(());
    }
    Err(json!({ "fan": f, "elastic": set(found), "missing": "flower or M(K4) restriction" }))
}

pub(super) fn fan_elastic(inst: &Instance, _: &CheckContext, t: &mut Tally) {
    if !inst.is_3_connected() || inst.rank() < 4 || inst.corank() < 4 {
        t.filter();
        return;
    }
    let mut by_set: BTreeMap<SubsetMask, Vec<Vec<usize>>> = BTreeMap::new();
    for fan in inst.fans().maximal_orderings() {
        by_set.entry(fan.set()).or_default().push(fan.elements);
    }
    for (fan, orderings) in by_set {
        if fan.len() < 4 {
            t.filter();
            continue;
        }
        // the labels f1, .., fn range over every fan ordering of the set
        let outcomes: Vec<_> = orderings.iter().map(|f| fan_pattern(inst, f)).collect();
        let ok = outcomes.iter().any(Result::is_ok);
        t.expect(ok, || {
            let failures: Vec<_> = outcomes.into_iter().filter_map(Result::err).collect();
            json!({ "fan": set(fan), "orderings": failures })
        });
    }
}

pub(super) fn exception(inst: &Instance, _: &CheckContext, t: &mut Tally) {
    if !inst.is_3_connected() {
        t.filter();
        return;
    }
    for sep in inst.thetas() {
        let (host, profile) = match sep.orientation {
            Orientation::Primal => (inst.m(), inst.profile()),
            Orientation::Dual => (inst.dual(), inst.dual_profile()),
        };
        for w in sep.w.iter() {
            t.expect(!profile.si_3conn().contains(w), || json!({ "separator": theta_json(sep), "w": w }));
        }
        let cl_w = host.closure(sep.w);
        for z in sep.z.iter() {
            if !profile.co_3conn().contains(z) {
                t.examine();
                continue;
            }
            let completing = cl_w.iter().find(|&x| !sep.z.contains(x) && host.is_circuit(sep.z.without(z).with(x)));
            t.expect(completing.is_none(), || json!({ "separator": theta_json(sep), "z": z, "completing": completing }));
        }
    }
}

pub(super) fn theta_elastic(inst: &Instance, _: &CheckContext, t: &mut Tally) {
    if !inst.is_3_connected() {
        t.filter();
        return;
    }
    let elastic = inst.elastic();
    for sep in inst.thetas() {
        let s = sep.set();
        let found = elastic & s;
        match sep.variant {
            ThetaVariant::Full => t.expect(found.is_empty(), || json!({ "separator": theta_json(sep), "elastic": set(found) })),
            ThetaVariant::Minus => {
                let host = match sep.orientation {
                    Orientation::Primal => inst.m(),
                    Orientation::Dual => inst.dual(),
                };
                let full = canonical_form(&theta(sep.n).expect("n >= 3").0);
                let completes = (host.ground() - s).iter().any(|e| canonical_form(&host.restrict(s.with(e))) == full);
                if completes {
                    t.filter();
                } else {
                    t.expect(found.len() == 1, || json!({ "separator": theta_json(sep), "elastic": set(found) }));
                }
            }
        }
    }
}

pub(super) fn theta_max(inst: &Instance, _: &CheckContext, t: &mut Tally) {
    if !inst.is_3_connected() {
        t.filter();
        return;
    }
    let m = inst.m();
    let all = inst.vertical();
    for sep in all.iter().filter(|s| is_maximal_among(s, all)) {
        let x = sep.x;
        let mut by_set: BTreeMap<SubsetMask, Vec<_>> = BTreeMap::new();
        for d in inst.thetas().iter().filter(|d| x.is_subset_of(d.set())) {
            by_set.entry(d.set()).or_default().push(*d);
        }
        if by_set.is_empty() {
            t.filter();
            continue;
        }
        let cocircuit = m.rank(x) == 3 && inst.dual().is_circuit(x);
        let circuit = m.is_circuit(sep.x_with_e());
        for (s, detections) in by_set {
            let ok = detections.iter().any(|d| {
                let first = d.orientation == Orientation::Dual
                    && cocircuit
                    && d.n == x.len()
                    && (x & d.w).len() == 1
                    && (x - d.w).with(sep.e) == d.z;
                let second = d.orientation == Orientation::Primal
                    && circuit
                    && (d.n == x.len() || d.n == x.len() + 1)
                    && x.is_subset_of(d.z);
                first || second
            });
            t.expect(ok, || {
                let ds: Vec<_> = detections.iter().map(theta_json).collect();
                json!({ "separation": sep_json(sep), "set": set(s), "detections": ds })
            });
        }
    }
}

pub(super) fn theta_reveal(inst: &Instance, ctx: &CheckContext, t: &mut Tally) {
    if !inst.is_3_connected() || inst.thetas().is_empty() {
        t.filter();
        return;
    }
    let oracle = MinorOracle::global();
    for (id, n) in inst.minors_matching(ctx.minor_filter()) {
        for sep in inst.thetas() {
            let (profile, target) = match sep.orientation {
                Orientation::Primal => (inst.profile(), id),
                Orientation::Dual => (inst.dual_profile(), oracle.class_of(&n.dual())),
            };
            let revealing = profile.report(target).n_revealing;
            let co = profile.co_has(target);
            let si = profile.si_has(target);
            let i = !(sep.z & revealing).is_empty();
            let ii = (sep.z & co).len() >= 2;
            let iii = sep.z.is_subset_of(si & co) && sep.w.is_subset_of(co);
            let ok = i == ii && ii == iii && (n.size() > 3 || i);
            t.expect(ok, || json!({ "minor": minor_json(id), "separator": theta_json(sep), "i": i, "ii": ii, "iii": iii }));
        }
    }
}

/// Orderings `(p, q, e1, .., ek)` of `side` whose prefixes from `{p, q}` on are exactly 3-separating.
fn has_short_path(m: &Matroid, side: SubsetMask) -> bool {
    fn grow(m: &Matroid, side: SubsetMask, prefix: SubsetMask, dead: &mut HashSet<SubsetMask>) -> bool {
        if prefix == side {
            return true;
        }
        if dead.contains(&prefix) {
            return false;
        }
        for e in (side - prefix).iter() {
            let next = prefix.with(e);
            if lambda(m, next) == 2 && grow(m, side, next, dead) {
                return true;
            }
        }
        dead.insert(prefix);
        false
    }
    let mut dead = HashSet::new();
    side.subsets()
        .filter(|p| p.len() == 2 && lambda(m, *p) == 2)
        .any(|p| grow(m, side, p, &mut dead))
}

pub(super) fn bs61(inst: &Instance, _: &CheckContext, t: &mut Tally) {
    let m = inst.m();
    let n = m.size();
    for x in m.ground().without(0).subsets() {
        if x.len() < 2 || n - x.len() < 2 {
            continue;
        }
        let y = m.ground() - x;
        let sequential = is_sequential_3_separation(m, x);
        let path = has_short_path(m, y) || has_short_path(m, x);
        t.expect(sequential == path, || json!({ "x": set(x), "sequential": sequential, "path": path }));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{theta_minus, wheel, whirl};
    use crate::harness::catalog::{decode_line, CatalogEntry, CatalogFormat, Source};

    fn entry(line: &str) -> CatalogEntry {
        let matroid = decode_line(line, CatalogFormat::Lex01, 1).unwrap();
        CatalogEntry { matroid, source: Source::Line(1), id: line.to_string() }
    }

    fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
        if items.is_empty() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for (i, &e) in items.iter().enumerate() {
            let mut rest = items.to_vec();
            rest.remove(i);
            for mut p in permutations(&rest) {
                p.insert(0, e);
                out.push(p);
            }
        }
        out
    }

    fn short_path_by_orderings(m: &Matroid, side: SubsetMask) -> bool {
        permutations(&side.to_vec()).iter().any(|p| {
            (2..=p.len()).all(|k| lambda(m, p[..k].iter().copied().collect()) == 2)
        })
    }

    #[test]
    fn short_paths_match_exhaustive_orderings() {
        let hosts = [wheel(3).unwrap(), whirl(3).unwrap(), theta_minus(3).unwrap().0, wheel(4).unwrap().delete(7)];
        for m in &hosts {
            for side in m.ground().subsets().filter(|s| (2..=6).contains(&s.len())) {
                assert_eq!(has_short_path(m, side), short_path_by_orderings(m, side), "{side}");
            }
        }
    }

    const BS61_HOST: &str = "8 4 1101010100100000101101101101101101001011011011011011010000010010101011";

    #[test]
    fn sequential_without_short_path_needs_a_2_separation() {
        let e = entry(BS61_HOST);
        let m = &e.matroid;
        let x = SubsetMask::from_elements([1, 2, 3, 4]);
        assert!(!is_3_connected(m));
        assert!(is_sequential_3_separation(m, x));
        assert!(!short_path_by_orderings(m, x) && !short_path_by_orderings(m, m.ground() - x));
        let lambdas = |p: &Vec<usize>| (2..p.len()).map(|k| lambda(m, p[..k].iter().copied().collect())).collect::<Vec<_>>();
        let sequential: Vec<Vec<usize>> =
            permutations(&x.to_vec()).into_iter().filter(|p| lambdas(p).iter().all(|&l| l <= 2)).collect();
        assert!(!sequential.is_empty());
        assert!(sequential.iter().all(|p| lambdas(p).contains(&1)));

        let inst = Instance::new(&e);
        let tally = find_check("LEM-BS61").run(&inst, &CheckContext::default());
        assert!(tally.violations.iter().any(|v| v["x"] == json!([1, 2, 3, 4])));
    }

    fn find_check(id: &str) -> &'static super::super::Check {
        super::super::find(id).unwrap()
    }

    #[test]
    fn corank_three_fails_only_for_the_three_element_minor() {
        let e = entry("7 3 11111101110111101101100111101111111");
        let inst = Instance::new(&e);
        assert!(inst.is_3_connected());
        let tally = find_check("LEM-CORANK3").run(&inst, &CheckContext::default());
        assert_eq!(tally.violations.len(), 3);
        assert!(tally.violations.iter().all(|v| v["minor"] == json!("3 1 111")));
        let u13 = MinorOracle::global().class_of(&crate::constructions::uniform(1, 3).unwrap());
        let witness = inst.delete_witness(u13, 0, SubsetMask::from_elements([2, 3, 6])).unwrap();
        assert!(!(witness.contract & SubsetMask::from_elements([2, 3, 6])).is_empty());
    }

    #[test]
    fn theta_elastic_holds_for_theta_5() {
        let (m, _) = theta(5).unwrap();
        let e = CatalogEntry { matroid: m, source: Source::Generator("theta".into()), id: "THETA(5)".into() };
        let inst = Instance::new(&e);
        let tally = find_check("LEM-THETA-ELASTIC").run(&inst, &CheckContext::default());
        assert!(tally.examined > 0);
        assert!(tally.violations.is_empty(), "{:?}", tally.violations);
    }
}
