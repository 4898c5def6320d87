#![allow(dead_code)]

use elastic_matroid::canonical::canonical_form;
use elastic_matroid::connectivity::lambda;
use elastic_matroid::mask::SubsetMask;
use elastic_matroid::matroid::Matroid;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rank_axioms(m: &Matroid) -> Result<(), String> {
    let ground = m.ground();
    if m.rank(SubsetMask::default()) != 0 {
        return Err("r(empty) != 0".into());
    }
    for x in ground.subsets() {
        for e in (ground - x).iter() {
            let up = m.rank(x.with(e));
            if up < m.rank(x) || up > m.rank(x) + 1 {
                return Err(format!("unit increase fails at {x} + {e}"));
            }
            for f in (ground - x.with(e)).iter() {
                if m.rank(x.with(e)) + m.rank(x.with(f)) < m.rank(x.with(e).with(f)) + m.rank(x) {
                    return Err(format!("submodularity fails at {x}, {e}, {f}"));
                }
            }
        }
    }
    Ok(())
}

pub fn full_submodularity(m: &Matroid) -> bool {
    let subsets: Vec<SubsetMask> = m.ground().subsets().collect();
    subsets
        .iter()
        .all(|&x| subsets.iter().all(|&y| m.rank(x | y) + m.rank(x & y) <= m.rank(x) + m.rank(y)))
}

pub fn kernel_properties(m: &Matroid, permutations: &[Vec<usize>]) -> Result<(), String> {
    rank_axioms(m)?;
    let d = m.dual();
    if d.dual().rank_table() != m.rank_table() {
        return Err("dual is not an involution".into());
    }
    for x in m.ground().subsets() {
        if lambda(m, x) != lambda(&d, x) {
            return Err(format!("lambda differs on {x} between M and M*"));
        }
    }
    let co = canonical_form(&m.cosimplify().0);
    let via_dual = canonical_form(&d.simplify().0.dual());
    if co != via_dual {
        return Err("co(M) and si(M*)* differ".into());
    }
    let rebuilt = Matroid::from_circuits(m.size(), &m.circuits()).map_err(|e| e.to_string())?;
    if rebuilt.rank_table() != m.rank_table() {
        return Err("from_circuits(circuits(M)) differs from M".into());
    }
    let form = canonical_form(m);
    for p in permutations {
        if canonical_form(&m.permute(p)) != form {
            return Err(format!("canonical form changes under {p:?}"));
        }
    }
    Ok(())
}

pub fn shuffles(n: usize, count: usize, seed: u64) -> Vec<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(&mut rng);
            p
        })
        .collect()
}
