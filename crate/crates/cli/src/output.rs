use std::io::{self, Write};

use serde_json::json;
use stiefel_einstein::arith::{to_decimal, BigRational};
use stiefel_einstein::groebner::{EliminationOrder, EliminationResult, GroebnerBasis};
use stiefel_einstein::solver::{Class, Enclosure, ScanReport, SolutionRecord, VerifyReport, DECIMAL_DIGITS};

use crate::Format;

fn csv_writer() -> csv::Writer<io::Stdout> {
    csv::Writer::from_writer(io::stdout())
}

fn exact(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

fn enclosure_cells(e: &Enclosure) -> [String; 3] {
    [exact(&e.lo), exact(&e.hi), e.decimal.clone()]
}

pub fn records(recs: &[SolutionRecord], format: Format) -> anyhow::Result<()> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(recs)?),
        Format::Csv => {
            let mut w = csv_writer();
            let mut header = vec!["n".to_string(), "p".to_string(), "class".to_string(), "branch".to_string()];
            for v in ["u0", "u1", "u2", "u3", "einstein_constant"] {
                header.extend([format!("{v}_lo"), format!("{v}_hi"), v.to_string()]);
            }
            header.extend(["residual_bound".to_string(), "multiplicity".to_string()]);
            w.write_record(&header)?;
            for r in recs {
                let mut row = vec![r.n.to_string(), r.p.to_string(), r.class.to_string(), branch(r)];
                for e in [&r.u0, &r.u1, &r.u2, &r.u3, &r.einstein_constant] {
                    row.extend(enclosure_cells(e));
                }
                row.extend([r.residual_bound_decimal.clone(), r.multiplicity.to_string()]);
                w.write_record(&row)?;
            }
            w.flush()?;
        }
        Format::Text => {
            let mut out = io::stdout().lock();
            let (jensen, new) = (count(recs, Class::Jensen), count(recs, Class::New));
            if let Some(r) = recs.first() {
                writeln!(out, "(n, p) = ({}, {}): {} metrics, {jensen} jensen and {new} new (u3 = 1)", r.n, r.p, recs.len())?;
            } else {
                writeln!(out, "no metrics found")?;
            }
            for (i, r) in recs.iter().enumerate() {
                writeln!(out, "#{i} {} via {}", r.class, branch(r))?;
                writeln!(out, "  u0     = {}", r.u0.decimal)?;
                writeln!(out, "  u1     = {}", r.u1.decimal)?;
                writeln!(out, "  u2     = {}", r.u2.decimal)?;
                writeln!(out, "  lambda = {}", r.einstein_constant.decimal)?;
                writeln!(out, "  |f_i| <= {}, multiplicity {}", r.residual_bound_decimal, r.multiplicity)?;
            }
        }
    }
    Ok(())
}

fn count(recs: &[SolutionRecord], class: Class) -> usize {
    recs.iter().filter(|r| r.class == class).count()
}

fn branch(r: &SolutionRecord) -> String {
    serde_json::to_value(r.branch).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default()
}

pub fn scan(report: &ScanReport, format: Format) -> anyhow::Result<()> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(report)?),
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record([
                "n",
                "p",
                "admissible",
                "jensen_count",
                "new_count",
                "f_positive_roots",
                "surviving",
                "battery_holds",
                "fallback",
                "alert",
                "notes",
            ])?;
            for r in &report.rows {
                let holds = r.battery.as_ref().map(|b| b.holds.to_string()).unwrap_or_default();
                w.write_record([
                    r.n.to_string(),
                    r.p.to_string(),
                    r.admissible.to_string(),
                    r.jensen_count.to_string(),
                    r.new_count.to_string(),
                    r.f_positive_roots.to_string(),
                    r.surviving.to_string(),
                    holds,
                    r.fallback.to_string(),
                    r.alert.to_string(),
                    r.notes.join("; "),
                ])?;
            }
            w.flush()?;
        }
        Format::Text => {
            let mut out = io::stdout().lock();
            writeln!(out, "{:>4} {:>4} {:>10} {:>6} {:>4} {:>4} {:>5}  notes", "n", "p", "admissible", "jensen", "new", "F+", "alert")?;
            for r in &report.rows {
                writeln!(
                    out,
                    "{:>4} {:>4} {:>10} {:>6} {:>4} {:>4} {:>5}  {}",
                    r.n,
                    r.p,
                    r.admissible,
                    r.jensen_count,
                    r.new_count,
                    r.f_positive_roots,
                    if r.alert { "ALERT" } else { "" },
                    r.notes.join("; ")
                )?;
            }
            writeln!(out, "{} rows, {} alerts", report.rows.len(), report.alerts.len())?;
        }
    }
    Ok(())
}

pub fn verification(
    rows: &[(usize, &SolutionRecord, stiefel_einstein::Result<VerifyReport>)],
    format: Format,
) -> anyhow::Result<()> {
    match format {
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|(i, r, out)| match out {
                    Ok(rep) => json!({ "index": i, "n": r.n, "p": r.p, "passed": true, "report": rep }),
                    Err(e) => json!({ "index": i, "n": r.n, "p": r.p, "passed": false, "error": e.to_string() }),
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&items)?);
        }
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record(["index", "n", "p", "passed", "residual_bound", "einstein_constant", "error"])?;
            for (i, r, out) in rows {
                let (passed, res, lam, err) = match out {
                    Ok(rep) => ("true", rep.residual_bound_decimal.clone(), rep.einstein_constant.decimal.clone(), String::new()),
                    Err(e) => ("false", String::new(), String::new(), e.to_string()),
                };
                w.write_record([i.to_string(), r.n.to_string(), r.p.to_string(), passed.into(), res, lam, err])?;
            }
            w.flush()?;
        }
        Format::Text => {
            let mut out = io::stdout().lock();
            for (i, r, res) in rows {
                match res {
                    Ok(rep) => writeln!(
                        out,
                        "#{i} ({}, {}) {}: PASS |f_i| <= {}, lambda = {}",
                        r.n, r.p, r.class, rep.residual_bound_decimal, rep.einstein_constant.decimal
                    )?,
                    Err(e) => writeln!(out, "#{i} ({}, {}) {}: FAIL {e}", r.n, r.p, r.class)?,
                }
            }
        }
    }
    Ok(())
}

pub fn ricci(n: u32, p: u32, metric: &[BigRational; 4], r: &[BigRational; 4], format: Format) -> anyhow::Result<()> {
    let einstein = r.iter().all(|x| x == &r[0]);
    match format {
        Format::Json => {
            let comps: Vec<_> = r.iter().map(|x| json!({ "exact": exact(x), "decimal": to_decimal(x, DECIMAL_DIGITS) })).collect();
            let metric: Vec<_> = metric.iter().map(exact).collect();
            println!("{}", serde_json::to_string_pretty(&json!({ "n": n, "p": p, "metric": metric, "ricci": comps, "einstein": einstein }))?);
        }
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record(["k", "r_k", "decimal"])?;
            for (k, x) in r.iter().enumerate() {
                w.write_record([k.to_string(), exact(x), to_decimal(x, DECIMAL_DIGITS)])?;
            }
            w.flush()?;
        }
        Format::Text => {
            let mut out = io::stdout().lock();
            for (k, x) in r.iter().enumerate() {
                writeln!(out, "r{k} = {x}  ({})", to_decimal(x, DECIMAL_DIGITS))?;
            }
            writeln!(out, "einstein: {einstein}")?;
        }
    }
    Ok(())
}

pub fn groebner(
    gb: &GroebnerBasis,
    res: &EliminationResult,
    order: EliminationOrder,
    dump: bool,
    format: Format,
) -> anyhow::Result<()> {
    let golden = res.golden.as_ref();
    let relations = res.relations.as_ref().map(|r| {
        json!({
            "u0": { "denominator": r.u0.denominator.to_string(), "numerator": r.u0.numerator.to_string() },
            "u2": { "denominator": r.u2.denominator.to_string(), "numerator": r.u2.numerator.to_string() },
        })
    });
    let s = &gb.stats;
    let summary = json!({
        "n": res.n,
        "p": res.p,
        "order": order.to_string(),
        "basis_size": gb.len(),
        "leading_monomials": gb.shapes(),
        "stats": {
            "pairs_created": s.pairs_created,
            "coprime_skipped": s.coprime_skipped,
            "chain_skipped": s.chain_skipped,
            "reduced_to_zero": s.reduced_to_zero,
            "basis_added": s.basis_added,
        },
        "eliminant_degree": res.eliminant.degree(),
        "known_factor": res.known_factor.to_string(),
        "cofactor": res.cofactor.to_string(),
        "cofactor_squarefree": res.cofactor_squarefree,
        "coprime_to_known_factor": res.shared_with_known.degree() == Some(0),
        "golden": golden.map(|g| json!({
            "name": g.name,
            "matches": g.matches,
            "ratio": g.ratio.as_ref().map(exact),
        })),
        "relations": relations,
        "basis": if dump { Some(gb.elements().iter().map(|g| g.to_string()).collect::<Vec<_>>()) } else { None },
    });
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&summary)?),
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record(["index", "leading_monomial", "element"])?;
            let names = gb.ring().names();
            for (i, (g, m)) in gb.elements().iter().zip(gb.leading_monomials()).enumerate() {
                w.write_record([i.to_string(), m.render(names), if dump { g.to_string() } else { String::new() }])?;
            }
            w.flush()?;
        }
        Format::Text => {
            let mut out = io::stdout().lock();
            writeln!(out, "(n, p) = ({}, {}), lex {}", res.n, res.p, order)?;
            writeln!(out, "basis: {} elements, leading monomials {}", gb.len(), gb.shapes())?;
            writeln!(
                out,
                "pairs: {} created, {} coprime, {} chain, {} to zero",
                s.pairs_created, s.coprime_skipped, s.chain_skipped, s.reduced_to_zero
            )?;
            writeln!(out, "eliminant degree {:?} = {} * {} * cofactor", res.eliminant.degree(), res.constant, res.known_factor)?;
            writeln!(out, "cofactor: {}", res.cofactor)?;
            writeln!(out, "cofactor squarefree: {}, coprime to {}: {}", res.cofactor_squarefree, res.which, res.shared_with_known.degree() == Some(0))?;
            if let Some(g) = golden {
                let ratio = g.ratio.as_ref().map(exact).unwrap_or_else(|| "none".into());
                writeln!(out, "golden {}: matches {} (ratio {ratio})", g.name, g.matches)?;
            }
            if let Some(r) = &res.relations {
                writeln!(out, "u0 = ({}) / {}", r.u0.numerator, r.u0.denominator)?;
                writeln!(out, "u2 = ({}) / {}", r.u2.numerator, r.u2.denominator)?;
            }
            if dump {
                for (i, g) in gb.elements().iter().enumerate() {
                    writeln!(out, "g{i} = {g}")?;
                }
            }
        }
    }
    Ok(())
}
