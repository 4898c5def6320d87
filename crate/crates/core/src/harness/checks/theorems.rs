use serde_json::json;

use super::{fan_alternative, minor_json, sep_json, set, CheckContext};
use crate::connectivity::{has_path_width_three, is_exactly_k_separating, is_maximal_among, VerticalSep3};
use crate::constructions::uniform;
use crate::elasticity::{ClassId, ElasticityReport, MinorOracle};
use crate::harness::instance::Instance;
use crate::harness::report::Tally;
use crate::mask::SubsetMask;

pub(super) fn elastic4(inst: &Instance, _: &CheckContext, t: &mut Tally) {
    if !inst.is_3_connected() || inst.size() < 4 || inst.has_4_element_fan() || !inst.thetas().is_empty() {
        t.filter();
        return;
    }
    let elastic = inst.elastic();
    t.expect(elastic.len() >= 4, || json!({ "elastic": set(elastic) }));
}

pub(super) fn main(inst: &Instance, ctx: &CheckContext, t: &mut Tally) {
    if !inst.is_3_connected() || inst.has_4_element_fan() {
        t.filter();
        return;
    }
    for (id, _) in inst.minors_matching(ctx.minor_filter()) {
        let report = inst.report(id);
        if report.n_revealing.is_empty() || !inst.revealing_thetas(id).is_empty() {
            t.filter();
            continue;
        }
        t.expect(report.n_elastic.len() >= 2, || {
            json!({
                "minor": minor_json(id),
                "n_elastic": set(report.n_elastic),
                "n_revealing": set(report.n_revealing),
            })
        });
    }
}

fn maximal_seps(inst: &Instance) -> Vec<VerticalSep3> {
    let all = inst.vertical();
    all.iter().filter(|s| is_maximal_among(s, all)).copied().collect()
}

pub(super) fn maximal(inst: &Instance, ctx: &CheckContext, t: &mut Tally) {
    if !inst.is_3_connected() {
        t.filter();
        return;
    }
    let maximal = maximal_seps(inst);
    for (id, _) in inst.minors_matching(ctx.minor_filter()) {
        let report = inst.report(id);
        let revealing = inst.revealing_thetas(id);
        for sep in inst.vertical() {
            let Some(witness) = inst.contract_witness(id, sep.e, sep.x) else {
                t.filter();
                continue;
            };
            t.examine();
            for big in maximal.iter().filter(|b| sep.y_with_e().is_subset_of(b.y_with_e())) {
                let found = report.n_elastic & big.x;
                if found.len() >= 2
                    || inst.fans().is_four_element_fan(big.x_with_e())
                    || revealing.iter().any(|s| big.x.is_subset_of(s.set()))
                {
                    continue;
                }
                t.fail(json!({
                    "minor": minor_json(id),
                    "separation": sep_json(sep),
                    "witness": witness,
                    "maximal": sep_json(big),
                    "n_elastic_in_x": set(found),
                }));
            }
        }
    }
}

/// Conclusions (i)-(iii) for a fan ordering `f`, plus the "moreover" clause.
fn fan_cases(inst: &Instance, f: &[usize], report: &ElasticityReport) -> Result<(), serde_json::Value> {
    let fan: SubsetMask = f.iter().copied().collect();
    let extension = inst.fans().extension_size(f);
    let elastic = inst.elastic() & fan;
    let n_elastic = report.n_elastic;
    let ok = match extension {
        e if e >= 6 => elastic.is_empty(),
        5 => elastic.is_empty() || (elastic == SubsetMask::singleton(f[2]) && n_elastic.contains(f[2])),
        _ => {
            let middle = SubsetMask::from_elements([f[1], f[2]]);
            elastic.is_empty() || (elastic == middle && middle.is_subset_of(n_elastic))
        }
    };
    if !ok {
        return Err(json!({ "fan": f, "extension": extension, "elastic": set(elastic), "n_elastic": set(n_elastic & fan) }));
    }
    if elastic.is_empty() && fan_alternative(inst, f, Some(2)).is_none() {
        return Err(json!({ "fan": f, "extension": extension, "missing": "flower or M(K4) restriction" }));
    }
    Ok(())
}

pub(super) fn fans(inst: &Instance, ctx: &CheckContext, t: &mut Tally) {
    if !inst.is_3_connected() || inst.rank() < 4 || inst.corank() < 4 {
        t.filter();
        return;
    }
    let maximal = maximal_seps(inst);
    for (id, _) in inst.minors_matching(ctx.minor_filter()) {
        let report = inst.report(id);
        for sep in inst.vertical() {
            let Some(witness) = inst.contract_witness(id, sep.e, sep.x) else {
                t.filter();
                continue;
            };
            let mut any = false;
            for big in maximal.iter().filter(|b| sep.y_with_e().is_subset_of(b.y_with_e())) {
                let fan = big.x_with_e();
                if fan.len() != 4 {
                    continue;
                }
                let orderings: Vec<&Vec<usize>> = inst
                    .fans()
                    .orderings()
                    .iter()
                    .filter(|o| o.len() == 4 && o[0] == big.e && o.iter().copied().collect::<SubsetMask>() == fan)
                    .collect();
                if orderings.is_empty() {
                    continue;
                }
                any = true;
                // f2 and f3 are interchangeable; the conclusions must hold for one labelling
                let outcomes: Vec<_> = orderings.iter().map(|f| fan_cases(inst, f, &report)).collect();
                if !outcomes.iter().any(Result::is_ok) {
                    let failures: Vec<_> = outcomes.into_iter().filter_map(Result::err).collect();
                    t.fail(json!({
                        "minor": minor_json(id),
                        "separation": sep_json(sep),
                        "witness": witness,
                        "maximal": sep_json(big),
                        "failures": failures,
                    }));
                }
            }
            if any {
                t.examine();
            } else {
                t.filter();
            }
        }
    }
}

pub(super) fn pw3(inst: &Instance, _: &CheckContext, t: &mut Tally) {
    if !inst.is_3_connected() || inst.has_4_element_fan() || !inst.thetas().is_empty() || inst.elastic().len() != 4 {
        t.filter();
        return;
    }
    t.expect(has_path_width_three(inst.m()), || json!({ "elastic": set(inst.elastic()) }));
}

/// Every ordering of `k` for which `(s, {e1}, .., {ek}, rest)` is a path of 3-separations.
fn path_orderings(inst: &Instance, s: SubsetMask, k: SubsetMask) -> Vec<Vec<usize>> {
    fn go(inst: &Instance, k: SubsetMask, prefix: SubsetMask, order: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !is_exactly_k_separating(inst.m(), prefix, 3) {
            return;
        }
        let left = k - prefix;
        if left.is_empty() {
            out.push(order.clone());
            return;
        }
        for e in left.iter() {
            order.push(e);
            go(inst, k, prefix.with(e), order, out);
            order.pop();
        }
    }
    let mut out = Vec::new();
    if (inst.m().ground() - s - k).is_empty() {
        return out;
    }
    go(inst, k | s, s, &mut Vec::new(), &mut out);
    out
}

pub(super) fn min_elts2(inst: &Instance, ctx: &CheckContext, t: &mut Tally) {
    if !inst.is_3_connected() || inst.has_4_element_fan() {
        t.filter();
        return;
    }
    let profile = inst.profile();
    for (id, n) in inst.minors_matching(ctx.minor_filter()) {
        let report = inst.report(id);
        if n.size() < 4 || report.n_elastic.len() != 2 || !inst.revealing_thetas(id).is_empty() {
            t.filter();
            continue;
        }
        t.examine();
        let (s, k) = (report.n_elastic, report.n_revealing);
        let orderings = path_orderings(inst, s, k);
        if orderings.is_empty() {
            t.fail(json!({ "minor": minor_json(id), "s": set(s), "k": set(k), "missing": "ordering" }));
            continue;
        }
        let both = profile.contract_has(id) & profile.delete_has(id);
        for order in orderings {
            let bad: Vec<usize> = order[..order.len().saturating_sub(1)].iter().copied().filter(|&e| !both.contains(e)).collect();
            if !bad.is_empty() {
                t.fail(json!({ "minor": minor_json(id), "s": set(s), "ordering": order, "without_both_minors": bad }));
            }
        }
    }
}

pub(super) fn small_n(inst: &Instance, _: &CheckContext, t: &mut Tally) {
    let small = [(0, 1), (1, 1), (1, 2), (1, 3), (2, 3)];
    if !inst.is_3_connected()
        || inst.has_4_element_fan()
        || !inst.thetas().is_empty()
        || inst.rank() < 3
        || inst.corank() < 3
        || inst.size() < 8
    {
        t.filter();
        return;
    }
    let oracle = MinorOracle::global();
    let mut pw3 = None;
    for (r, n) in small {
        let id: ClassId = oracle.class_of(&uniform(r, n).expect("r <= n"));
        let found = inst.report(id).n_elastic;
        let ok = found.len() > 4 || (found.len() == 4 && *pw3.get_or_insert_with(|| has_path_width_three(inst.m())));
        t.expect(ok, || json!({ "minor": format!("U({r},{n})"), "n_elastic": set(found) }));
    }
}
