use std::time::Instant as Clock;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::harness::catalog::CatalogEntry;
use crate::harness::checks::{find, registry, Check, CheckContext};
use crate::harness::instance::Instance;
use crate::harness::report::{CheckReport, Tally, Violation};

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    pub context: CheckContext,
    /// Worker threads; `None` uses the rayon default.
    pub jobs: Option<usize>,
    /// Stop at the first catalog entry with a violation. Runs sequentially.
    pub fail_fast: bool,
    pub timing: bool,
}

/// Resolves `all` or a single check id.
pub fn select_checks(id: &str) -> Result<Vec<&'static Check>> {
    if id == "all" {
        return Ok(registry().iter().collect());
    }
    find(id).map(|c| vec![c]).ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

fn report(check: &Check, instances: &[Instance], tallies: Vec<Tally>, started: Clock, timing: bool) -> CheckReport {
    let mut out = CheckReport {
        check_id: check.id.to_string(),
        scope: check.scope.to_string(),
        examined: 0,
        filtered: 0,
        violations: Vec::new(),
        elapsed_ms: timing.then(|| started.elapsed().as_millis() as u64),
    };
    for (inst, tally) in instances.iter().zip(tallies) {
        out.examined += tally.examined;
        out.filtered += tally.filtered;
        out.violations.extend(tally.violations.into_iter().map(|detail| Violation {
            matroid_id: inst.entry.id.clone(),
            matroid_lex01: inst.lex01(),
            detail,
        }));
    }
    out
}

fn run_one(check: &Check, instances: &[Instance], options: &VerifyOptions) -> CheckReport {
    let started = Clock::now();
    let ctx = &options.context;
    if options.fail_fast {
        let mut tallies = Vec::new();
        for inst in instances {
            let tally = check.run(inst, ctx);
            let failed = !tally.violations.is_empty();
            tallies.push(tally);
            if failed {
                break;
            }
        }
        return report(check, instances, tallies, started, options.timing);
    }
    let tallies: Vec<Tally> = instances.par_iter().map(|inst| check.run(inst, ctx)).collect();
    report(check, instances, tallies, started, options.timing)
}

/// Runs `checks` over `catalog`. Derived data for each entry is computed once
/// and shared between checks; results are merged in catalog order, so the
/// output does not depend on the number of threads.
pub fn verify(checks: &[&Check], catalog: &[CatalogEntry], options: &VerifyOptions) -> Result<Vec<CheckReport>> {
    let instances: Vec<Instance> = catalog.iter().map(Instance::new).collect();
    let go = || {
        let mut reports = Vec::new();
        for check in checks {
            let r = run_one(check, &instances, options);
            let stop = options.fail_fast && !r.passed();
            reports.push(r);
            if stop {
                break;
            }
        }
        reports
    };
    match options.jobs {
        None => Ok(go()),
        Some(jobs) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.max(1))
                .build()
                .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
            Ok(pool.install(go))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::catalog::named_constructions;

    #[test]
    fn unknown_check_is_rejected() {
        assert!(matches!(select_checks("LEM-NONE"), Err(Error::UnknownCheck(_))));
        assert_eq!(select_checks("all").unwrap().len(), registry().len());
    }

    #[test]
    fn thread_count_does_not_change_reports() {
        let catalog = named_constructions(7);
        let checks = select_checks("LEM-BIXBY").unwrap();
        let one = VerifyOptions { jobs: Some(1), ..Default::default() };
        let many = VerifyOptions { jobs: Some(4), ..Default::default() };
        assert_eq!(verify(&checks, &catalog, &one).unwrap(), verify(&checks, &catalog, &many).unwrap());
    }
}
