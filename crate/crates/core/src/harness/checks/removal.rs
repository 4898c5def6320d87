use serde_json::json;

use super::{minor_json, set, theta_json, CheckContext};
use crate::basis::BasisQueries;
use crate::connectivity::{has_path_width_three, is_sequential_3_separation};
use crate::harness::instance::Instance;
use crate::harness::report::Tally;

fn ww_hypotheses(inst: &Instance) -> bool {
    inst.is_3_connected() && !inst.has_4_element_fan() && inst.size() >= 4
}

pub(super) fn lb4(inst: &Instance, _: &CheckContext, t: &mut Tally) {
    if !ww_hypotheses(inst) {
        t.filter();
        return;
    }
    let q = BasisQueries::new(inst.m(), inst.profile());
    for &b in inst.bases() {
        let removable = q.removable(b);
        t.expect(removable.len() >= 4, || json!({ "basis": set(b), "removable": set(removable) }));
    }
}

pub(super) fn pw3(inst: &Instance, _: &CheckContext, t: &mut Tally) {
    if !ww_hypotheses(inst) {
        t.filter();
        return;
    }
    let q = BasisQueries::new(inst.m(), inst.profile());
    let mut pw3 = None;
    for &b in inst.bases() {
        let removable = q.removable(b);
        if removable.len() != 4 {
            t.filter();
            continue;
        }
        let ok = *pw3.get_or_insert_with(|| has_path_width_three(inst.m()));
        t.expect(ok, || json!({ "basis": set(b), "removable": set(removable) }));
    }
}

pub(super) fn exists5(inst: &Instance, _: &CheckContext, t: &mut Tally) {
    if !ww_hypotheses(inst) {
        t.filter();
        return;
    }
    let q = BasisQueries::new(inst.m(), inst.profile());
    let best = inst.bases().iter().map(|&b| q.removable(b).len()).max().unwrap_or(0);
    t.expect(best >= 5, || json!({ "max_removable": best }));
}

fn robust_hypotheses(inst: &Instance) -> bool {
    inst.is_3_connected() && !inst.has_4_element_fan() && inst.size() >= 5
}

pub(super) fn robust1(inst: &Instance, ctx: &CheckContext, t: &mut Tally) {
    if !robust_hypotheses(inst) {
        t.filter();
        return;
    }
    let q = BasisQueries::new(inst.m(), inst.profile());
    for (id, _) in inst.minors_matching(ctx.minor_filter()) {
        for &b in inst.bases() {
            let robust = q.robust(id, b);
            if robust.len() < 2 {
                t.filter();
                continue;
            }
            let strong = q.strong(id, b);
            t.expect(strong.len() >= 2, || {
                json!({ "minor": minor_json(id), "basis": set(b), "robust": set(robust), "strong": set(strong) })
            });
        }
    }
}

pub(super) fn robust2(inst: &Instance, ctx: &CheckContext, t: &mut Tally) {
    if !robust_hypotheses(inst) {
        t.filter();
        return;
    }
    let q = BasisQueries::new(inst.m(), inst.profile());
    for (id, _) in inst.minors_matching(ctx.minor_filter()) {
        for &b in inst.bases() {
            let strong = q.strong(id, b);
            if strong.len() != 2 {
                t.filter();
                continue;
            }
            let robust = q.robust(id, b);
            t.expect(is_sequential_3_separation(inst.m(), robust), || {
                json!({ "minor": minor_json(id), "basis": set(b), "robust": set(robust), "strong": set(strong) })
            });
        }
    }
}

pub(super) fn theta_a(inst: &Instance, _: &CheckContext, t: &mut Tally) {
    if !inst.is_3_connected() {
        t.filter();
        return;
    }
    let m = inst.m();
    let profile = inst.profile();
    for sep in inst.thetas() {
        if sep.set().len() < 6 {
            t.filter();
            continue;
        }
        let cl_w = m.closure(sep.rank_two_side());
        let cl_z = m.coclosure(sep.corank_two_side());
        let co_ok = cl_w.is_subset_of(profile.co_3conn());
        let si_ok = cl_z.is_subset_of(profile.si_3conn());
        for &b in inst.bases() {
            let ok = co_ok && si_ok && (cl_w - b).len() + 2 >= cl_w.len() && (b & cl_z).len() + 2 >= cl_z.len();
            t.expect(ok, || {
                json!({
                    "separator": theta_json(sep),
                    "basis": set(b),
                    "cl_w": set(cl_w),
                    "cocl_z": set(cl_z),
                    "co_3connected_on_cl_w": co_ok,
                    "si_3connected_on_cocl_z": si_ok,
                })
            });
        }
    }
}

pub(super) fn theta_b(inst: &Instance, ctx: &CheckContext, t: &mut Tally) {
    if !inst.is_3_connected() {
        t.filter();
        return;
    }
    let q = BasisQueries::new(inst.m(), inst.profile());
    for (id, _) in inst.minors_matching(ctx.minor_filter()) {
        let revealing = inst.revealing_thetas(id);
        for sep in inst.thetas() {
            let s = sep.set();
            if s.len() < 6 || !revealing.contains(sep) {
                t.filter();
                continue;
            }
            for &b in inst.bases() {
                let strong = q.strong(id, b) & s;
                t.expect(strong.len() + 4 >= s.len(), || {
                    json!({ "minor": minor_json(id), "separator": theta_json(sep), "basis": set(b), "strong": set(strong) })
                });
            }
        }
    }
}
