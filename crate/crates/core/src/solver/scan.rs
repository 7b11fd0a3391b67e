use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use super::{solve_with, Class, SolveConfig};
use crate::arith::{int, parse_rational, rat, UniPoly};
use crate::realroots::RootReport;
use crate::{Error, Result};

/// `2 <= p <= 2n/5 - 1`, compared exactly as rationals.
pub fn admissible(n: u32, p: u32) -> bool {
    p >= 2 && 5 * (u64::from(p) + 1) <= 2 * u64::from(n)
}

/// Exact signs of `F` at the points where the existence argument needs them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignBattery {
    pub at_zero: i32,
    pub at_quarter: i32,
    pub at_one: i32,
    /// Only evaluated for `p = 2`.
    pub at_2n: Option<i32>,
    /// `F(0) > 0`; `F(1/4) < 0` when admissible; `F(1) > 0` for `p >= 3`;
    /// `F(2n) > 0` for `p = 2`.
    pub holds: bool,
}

impl SignBattery {
    pub fn evaluate(f: &UniPoly, n: u32, p: u32) -> SignBattery {
        let at_zero = f.sign_at(&int(0));
        let at_quarter = f.sign_at(&rat(1, 4));
        let at_one = f.sign_at(&int(1));
        let at_2n = (p == 2).then(|| f.sign_at(&int(2 * i64::from(n))));
        let holds = at_zero > 0
            && (!admissible(n, p) || at_quarter < 0)
            && (p < 3 || at_one > 0)
            && at_2n.is_none_or(|s| s > 0);
        SignBattery { at_zero, at_quarter, at_one, at_2n, holds }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanRow {
    pub n: u32,
    pub p: u32,
    pub admissible: bool,
    pub jensen_count: usize,
    pub new_count: usize,
    /// Distinct positive roots of `F` other than 1.
    pub f_positive_roots: usize,
    /// Of those, the roots that gave a positive certified metric.
    pub surviving: usize,
    pub battery: Option<SignBattery>,
    pub fallback: bool,
    /// Admissible cell where the expected picture fails.
    pub alert: bool,
    pub notes: Vec<String>,
    pub f_roots: Option<RootReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub n_min: u32,
    pub n_max: u32,
    pub rows: Vec<ScanRow>,
    pub alerts: Vec<(u32, u32)>,
}

#[derive(Clone, Debug)]
pub struct ScanConfig {
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
    pub solve: SolveConfig,
    /// Width of the root intervals in each row's `F` report.
    pub root_width: BigRational,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig { threads: None, solve: SolveConfig::default(), root_width: parse_rational("1e-12").expect("literal") }
    }
}

/// Solves every cell `n_min <= n <= n_max`, `p >= 2`, `n - 2p >= 1`.
pub fn scan(n_min: u32, n_max: u32) -> Result<ScanReport> {
    scan_with(n_min, n_max, &ScanConfig::default())
}

pub fn scan_with(n_min: u32, n_max: u32, cfg: &ScanConfig) -> Result<ScanReport> {
    if n_min < 6 || n_min > n_max {
        return Err(Error::Invalid(format!("scan range {n_min}..{n_max}: need 6 <= n_min <= n_max")));
    }
    let cells: Vec<(u32, u32)> = (n_min..=n_max).flat_map(|n| (2..).take_while(move |p| n > 2 * p).map(move |p| (n, p))).collect();
    let run = || cells.par_iter().map(|&(n, p)| row(n, p, cfg)).collect::<Vec<_>>();
    let mut rows = match cfg.threads {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| Error::Invalid(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    };
    rows.sort_by_key(|r| (r.n, r.p));
    let alerts = rows.iter().filter(|r| r.alert).map(|r| (r.n, r.p)).collect();
    Ok(ScanReport { n_min, n_max, rows, alerts })
}

fn row(n: u32, p: u32, cfg: &ScanConfig) -> ScanRow {
    let admissible = admissible(n, p);
    let mut notes = Vec::new();
    if !admissible {
        notes.push(format!("outside the proved range: p = {p} > 2n/5 - 1 = {}", rat(2 * i64::from(n) - 5, 5)));
    }
    match solve_with(n, p, &cfg.solve) {
        Ok(rep) => {
            let battery = SignBattery::evaluate(&rep.cofactor, n, p);
            let jensen_count = rep.count(Class::Jensen);
            let new_count = rep.count(Class::New);
            notes.extend(rep.notes.iter().cloned());
            let mut alert = false;
            if admissible {
                if new_count < 2 {
                    notes.push(format!("COUNTEREXAMPLE ALERT: only {new_count} new metrics"));
                    alert = true;
                }
                if !battery.holds {
                    notes.push("sign battery fails".to_string());
                    alert = true;
                }
                if rep.f_positive_roots < 2 || rep.f_at_one == 0 {
                    notes.push("F has fewer than two positive roots away from 1".to_string());
                    alert = true;
                }
            }
            ScanRow {
                n,
                p,
                admissible,
                jensen_count,
                new_count,
                f_positive_roots: rep.f_positive_roots,
                surviving: rep.surviving,
                battery: Some(battery),
                fallback: rep.fallback,
                alert,
                notes,
                f_roots: Some(RootReport::new("F", &rep.cofactor, &cfg.root_width)),
            }
        }
        Err(e) => {
            notes.push(format!("error: {e}"));
            ScanRow {
                n,
                p,
                admissible,
                jensen_count: 0,
                new_count: 0,
                f_positive_roots: 0,
                surviving: 0,
                battery: None,
                fallback: false,
                alert: admissible,
                notes,
                f_roots: None,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissibility_is_exact() {
        assert!(!admissible(7, 2));
        assert!(admissible(8, 2));
        assert!(!admissible(6, 2));
        assert!(admissible(30, 11));
        assert!(!admissible(31, 12));
        assert!(!admissible(31, 13));
        assert!(admissible(15, 5));
        assert!(!admissible(14, 5));
    }
}
