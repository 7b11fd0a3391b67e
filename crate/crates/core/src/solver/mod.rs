//! End-to-end solving: elimination along `lex z > u0 > u2 > u1`, certified
//! isolation of the `u1` cofactor roots, back-substitution over rational
//! intervals, the Jensen family, verification, and scans over `(n, p)`.

mod record;
mod scan;
mod verify;

pub use record::{classify, Branch, Class, Enclosure, SolutionRecord, DECIMAL_DIGITS};
pub use scan::{admissible, scan, scan_with, ScanConfig, ScanReport, ScanRow, SignBattery};
pub use verify::{verify, verify_box, Checker, VerifyReport};

use num_rational::BigRational;
use num_integer::Roots;
use num_traits::{One, Signed, Zero};

use crate::arith::{int, parse_rational, rat, MultiPoly, UniPoly};
use crate::curvature::jensen_quadratic;
use crate::groebner::{basis_for, eliminant, eliminate, BackSubstitution, EliminationOrder, GroebnerConfig};
use crate::realroots::{eval_multi, eval_uni, isolate_positive, multiplicity, refine, Interval, IsolatingInterval};
use crate::{check_cell, Error, Result};
use record::{residual_decimal, HOMOTHETY_NOTE};

#[derive(Clone, Debug)]
pub struct SolveConfig {
    /// Width of the isolating intervals in the first round.
    pub width: BigRational,
    /// Every record has a residual bound below this.
    pub threshold: BigRational,
    pub groebner: GroebnerConfig,
    /// Skip the basis relations and pair roots of the two eliminants.
    pub force_fallback: bool,
    /// Each further round narrows the root intervals by `10^-20`.
    pub max_rounds: usize,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            width: parse_rational("1e-40").expect("literal"),
            threshold: parse_rational("1e-30").expect("literal"),
            groebner: GroebnerConfig::default(),
            force_fallback: false,
            max_rounds: 6,
        }
    }
}

/// Records of one cell together with the counts behind them.
#[derive(Clone, Debug)]
pub struct SolveReport {
    pub n: u32,
    pub p: u32,
    pub records: Vec<SolutionRecord>,
    /// The `u1` cofactor `F`: primitive, positive leading coefficient.
    pub cofactor: UniPoly,
    pub f_at_one: i32,
    /// Distinct positive roots of `F` other than 1.
    pub f_positive_roots: usize,
    /// Roots of `F` that extended to a positive certified metric.
    pub surviving: usize,
    /// Sign of `4(n-2)^2 - 8(p-1)(n-1)`.
    pub jensen_discriminant: i32,
    pub fallback: bool,
    pub notes: Vec<String>,
}

impl SolveReport {
    pub fn count(&self, class: Class) -> usize {
        self.records.iter().filter(|r| r.class == class).count()
    }
}

/// All certified metrics found at `(n, p)` with root intervals of the given
/// width and the default residual threshold.
pub fn solve(n: u32, p: u32, width: &BigRational) -> Result<Vec<SolutionRecord>> {
    let cfg = SolveConfig { width: width.clone(), ..SolveConfig::default() };
    Ok(solve_with(n, p, &cfg)?.records)
}

enum Step {
    Box([Interval; 3]),
    Reject(String),
    Refine,
}

enum Certified {
    Ok([Interval; 3], VerifyReport),
    Rejected(String),
}

struct Cell<'a> {
    n: u32,
    p: u32,
    cfg: &'a SolveConfig,
    checker: Checker,
}

impl Cell<'_> {
    /// Runs `step` at shrinking widths until it yields a positive box whose
    /// residual bound is below the threshold.
    fn certify(&self, mut step: impl FnMut(&BigRational) -> Result<Step>) -> Result<Certified> {
        let shrink = parse_rational("1e-20").expect("literal");
        let mut width = self.cfg.width.clone();
        for _ in 0..self.cfg.max_rounds {
            match step(&width)? {
                Step::Box(b) => {
                    let [u0, u1, u2] = b.clone();
                    let rep = self.checker.check(&[u0, u1, u2, Interval::point(BigRational::one())])?;
                    if rep.residual_bound < self.cfg.threshold {
                        return Ok(Certified::Ok(b, rep));
                    }
                }
                Step::Reject(why) => return Ok(Certified::Rejected(why)),
                Step::Refine => {}
            }
            width = &width * &shrink;
        }
        Err(Error::Verification(format!("not certified after {} refinement rounds", self.cfg.max_rounds)))
    }

    fn record(
        &self,
        b: [Interval; 3],
        rep: VerifyReport,
        branch: Branch,
        multiplicity: usize,
        provenance: String,
    ) -> SolutionRecord {
        let [u0, u1, u2] = b.each_ref().map(Enclosure::from_interval);
        let mut rec = SolutionRecord {
            n: self.n,
            p: self.p,
            u0,
            u1,
            u2,
            u3: Enclosure::exact(BigRational::one()),
            einstein_constant: rep.einstein_constant,
            class: Class::New,
            residual_bound_decimal: residual_decimal(&rep.residual_bound),
            residual_bound: rep.residual_bound,
            multiplicity,
            branch,
            provenance,
            note: HOMOTHETY_NOTE.to_string(),
        };
        rec.class = classify(&rec);
        rec
    }
}

/// Decides positivity of a box, asking for refinement while undecided.
fn positivity(b: [Interval; 3]) -> Step {
    if let Some(k) = b.iter().position(|x| !x.hi().is_positive()) {
        return Step::Reject(format!("u{k} in {} is not positive", b[k].render(12)));
    }
    if b.iter().all(Interval::is_positive) {
        Step::Box(b)
    } else {
        Step::Refine
    }
}

fn straddles_one(iv: &IsolatingInterval) -> bool {
    let one = BigRational::one();
    !iv.exact && iv.lo < one && one < iv.hi
}

/// The full pipeline at one cell.
pub fn solve_with(n: u32, p: u32, cfg: &SolveConfig) -> Result<SolveReport> {
    check_cell(n, p)?;
    let cell = Cell { n, p, cfg, checker: Checker::new(n, p)? };
    let (gb, res) = eliminate(n, p, EliminationOrder::U1Last, &cfg.groebner)?;
    let f = res.cofactor.clone();
    let one = BigRational::one();
    let mut notes = Vec::new();

    let f_at_one = f.sign_at(&one);
    let mut target = f.squarefree_part()?;
    if f_at_one == 0 {
        notes.push("F(1) = 0; the root u1 = 1 is left to the Jensen branch".to_string());
        target = target.exact_div(&UniPoly::linear_root(f.var(), one.clone()))?;
    }
    let roots = isolate_positive(&target);

    let relations = if cfg.force_fallback { None } else { res.relations.clone() };
    let fallback = relations.is_none();
    if cfg.force_fallback {
        notes.push("fallback path forced: u2-eliminant roots paired with u1 roots".to_string());
    } else if fallback {
        notes.push(format!(
            "BACK-SUBSTITUTION RELATIONS MISSING; using the fallback pairing. Basis leading monomials: {}",
            gb.shapes()
        ));
    }
    let partners = if fallback { Some(fallback_partners(n, p, cfg)?) } else { None };

    let mut records = Vec::new();
    let mut surviving = 0;
    for (k, iv) in roots.iter().enumerate() {
        let mult = multiplicity(&f, iv);
        let found = match (&relations, &partners) {
            (Some(rel), _) => back_substituted(&cell, &target, iv, rel, k, mult).map(|r| vec![r]),
            (None, Some(partners)) => paired(&cell, &target, iv, partners, k, mult),
            (None, None) => unreachable!("partners exist whenever relations are missing"),
        };
        let mut kept = 0;
        for r in found.unwrap_or_else(|e| vec![Err(e.to_string())]) {
            match r {
                Ok(rec) => {
                    records.push(rec);
                    kept += 1;
                }
                Err(why) => notes.push(format!("u1 root #{k}: dropped: {why}")),
            }
        }
        if kept > 0 {
            surviving += 1;
        }
        if kept > 1 {
            notes.push(format!("u1 root #{k} extends to {kept} metrics"));
        }
    }

    let q = jensen_quadratic(n, p);
    let (n_, p_) = (n as i64, p as i64);
    let disc = int(4 * (n_ - 2) * (n_ - 2) - 8 * (p_ - 1) * (n_ - 1));
    let jensen_discriminant = if disc.is_zero() { 0 } else if disc.is_positive() { 1 } else { -1 };
    if jensen_discriminant < 0 {
        notes.push("the Jensen quadratic has no real roots".to_string());
    }
    if jensen_discriminant >= 0 {
        let qs = q.squarefree_part()?;
        let roots = jensen_rational_roots(n, p).unwrap_or_else(|| isolate_positive(&qs));
        for (k, iv) in roots.iter().enumerate() {
            let mult = multiplicity(&q, iv);
            let step = |w: &BigRational| {
                let r = refine(&qs, iv, w);
                Ok(positivity([Interval::point(one.clone()), Interval::point(one.clone()), r.as_interval()]))
            };
            match cell.certify(step) {
                Ok(Certified::Ok(b, rep)) => {
                    let prov = format!("Jensen quadratic 2(p-1)u2^2 - 2(n-2)u2 + (n-1), root #{k}; u0 = u1 = 1 exactly");
                    records.push(cell.record(b, rep, Branch::JensenQuadratic, mult, prov));
                }
                Ok(Certified::Rejected(why)) => notes.push(format!("Jensen root #{k}: dropped: {why}")),
                Err(e) => notes.push(format!("Jensen root #{k}: dropped: {e}")),
            }
        }
    }

    for i in 0..records.len() {
        for j in i + 1..records.len() {
            if !records[i].separated_from(&records[j]) {
                notes.push(format!("records {i} and {j} are not certified distinct"));
            }
        }
    }

    Ok(SolveReport {
        n,
        p,
        records,
        cofactor: f,
        f_at_one,
        f_positive_roots: roots.len(),
        surviving,
        jensen_discriminant,
        fallback,
        notes,
    })
}

/// Both Jensen roots as exact rationals when `(n-2)^2 - 2(p-1)(n-1)` is a
/// perfect square.
fn jensen_rational_roots(n: u32, p: u32) -> Option<Vec<IsolatingInterval>> {
    let (n, p) = (i64::from(n), i64::from(p));
    let d = (n - 2) * (n - 2) - 2 * (p - 1) * (n - 1);
    if d < 0 {
        return None;
    }
    let s = d.sqrt();
    if s * s != d {
        return None;
    }
    let mut roots = vec![rat(n - 2 - s, 2 * (p - 1)), rat(n - 2 + s, 2 * (p - 1))];
    roots.dedup();
    Some(roots.into_iter().map(IsolatingInterval::exact).collect())
}

fn back_substituted(
    cell: &Cell<'_>,
    target: &UniPoly,
    iv: &IsolatingInterval,
    rel: &BackSubstitution,
    k: usize,
    mult: usize,
) -> Result<std::result::Result<SolutionRecord, String>> {
    let step = |w: &BigRational| {
        let r = refine(target, iv, w);
        if straddles_one(&r) {
            return Ok(Step::Refine);
        }
        let u1 = r.as_interval();
        let u0 = eval_uni(&rel.u0.numerator, &u1).scale(&rel.u0.denominator.recip());
        let u2 = eval_uni(&rel.u2.numerator, &u1).scale(&rel.u2.denominator.recip());
        Ok(positivity([u0, u1, u2]))
    };
    Ok(match cell.certify(step)? {
        Certified::Ok(b, rep) => {
            let prov = format!(
                "lex z > u0 > u2 > u1 eliminant, cofactor root #{k}; u0 = X(u1)/b and u2 = Y(u1)/c from the basis (deg X = {}, deg Y = {})",
                rel.u0.numerator.degree().unwrap_or(0),
                rel.u2.numerator.degree().unwrap_or(0)
            );
            Ok(cell.record(b, rep, Branch::BackSubstitution, mult, prov))
        }
        Certified::Rejected(why) => Err(why),
    })
}

/// Positive roots of the squarefree `u2`-eliminant, and the equation
/// linear in `u0` split as `A u0 + B`.
struct Partners {
    e2: UniPoly,
    roots: Vec<IsolatingInterval>,
    a: MultiPoly,
    b: MultiPoly,
}

fn fallback_partners(n: u32, p: u32, cfg: &SolveConfig) -> Result<Partners> {
    let gb = basis_for(n, p, EliminationOrder::U2Last, &cfg.groebner)?;
    let e2 = eliminant(&gb)?.squarefree_part()?;
    let roots = isolate_positive(&e2);
    let sys = crate::curvature::einstein_system(n, p)?;
    let lin = sys
        .f
        .iter()
        .find(|f| f.degree_in(0) == 1)
        .ok_or_else(|| Error::Invalid("no Einstein equation is linear in u0".to_string()))?;
    let cs = lin.coefficients_in(0);
    Ok(Partners { e2, roots, a: cs[1].clone(), b: cs[0].clone() })
}

/// Pairs one `u1` root with every `u2` root; a pair is kept when `u0`
/// solved from the linear equation gives a box that certifies.
fn paired(
    cell: &Cell<'_>,
    target: &UniPoly,
    iv: &IsolatingInterval,
    partners: &Partners,
    k: usize,
    mult: usize,
) -> Result<Vec<std::result::Result<SolutionRecord, String>>> {
    let mut out = Vec::new();
    for (j, iv2) in partners.roots.iter().enumerate() {
        let step = |w: &BigRational| {
            let r1 = refine(target, iv, w);
            if straddles_one(&r1) {
                return Ok(Step::Refine);
            }
            let (u1, u2) = (r1.as_interval(), refine(&partners.e2, iv2, w).as_interval());
            let pt = [Interval::point(BigRational::zero()), u1.clone(), u2.clone()];
            let Some(inv) = eval_multi(&partners.a, &pt).recip() else { return Ok(Step::Refine) };
            let u0 = &(-&eval_multi(&partners.b, &pt)) * &inv;
            Ok(positivity([u0, u1, u2]))
        };
        match cell.certify(step) {
            Ok(Certified::Ok(b, rep)) => {
                let prov = format!(
                    "FALLBACK: lex z > u0 > u2 > u1 cofactor root #{k} paired with u2-eliminant root #{j}; u0 solved from the equation linear in u0; certified by residual only"
                );
                out.push(Ok(cell.record(b, rep, Branch::Fallback, mult, prov)));
            }
            Ok(Certified::Rejected(_)) | Err(Error::Verification(_)) => {}
            Err(e) => return Err(e),
        }
    }
    if out.is_empty() {
        out.push(Err("no u2-eliminant root pairs with it".to_string()));
    }
    Ok(out)
}
