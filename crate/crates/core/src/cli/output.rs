use std::io::{self, Write};

use serde_json::{json, Value};

use crate::bracket::LaurentPoly;
use crate::cyclotomic::Ring;
use crate::invariant::{LemmaReport, ThetaReport};
use crate::link::catalog::CatalogEntry;
use crate::link::SurgeryPresentation;

fn machine(out: &mut dyn Write, v: &Value) -> io::Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("json values serialize"))
}

pub(super) fn ring_info(ring: &Ring, gauss_valuation: u32, as_machine: bool, out: &mut dyn Write) -> io::Result<()> {
    if as_machine {
        let modulus: Vec<String> = ring.modulus().iter().map(|c| c.to_string()).collect();
        return machine(
            out,
            &json!({
                "p": ring.p(),
                "degree": ring.degree(),
                "u": ring.u(),
                "epsilon": ring.epsilon(),
                "eight_bar": ring.eight_bar(),
                "gauss_sum_valuation": gauss_valuation,
                "modulus": modulus,
            }),
        );
    }
    writeln!(out, "p                    {}", ring.p())?;
    writeln!(out, "degree               {}", ring.degree())?;
    writeln!(out, "u                    {}", ring.u())?;
    writeln!(out, "epsilon              {:+}", ring.epsilon())?;
    writeln!(out, "inverse of 8 mod p   {}", ring.eight_bar())?;
    writeln!(out, "gauss sum valuation  {gauss_valuation}")
}

pub(super) fn reports(
    name: &str,
    pres: &SurgeryPresentation,
    reports: &[ThetaReport],
    as_machine: bool,
    out: &mut dyn Write,
) -> io::Result<()> {
    if as_machine {
        return machine(
            out,
            &json!({
                "input": name,
                "p": pres.p(),
                "framings": pres.framings(),
                "reports": reports.iter().map(ThetaReport::to_json).collect::<Vec<_>>(),
            }),
        );
    }
    writeln!(out, "{name}: p = {}, framings = {:?}", pres.p(), pres.framings())?;
    writeln!(out, "{:<10} {:<6} {:<26} {:<9} {:<7} {:>9}  tau", "theta", "parity", "ideal", "valuation", "verdict", "seconds")?;
    for r in reports {
        let val = r.valuation.map_or_else(|| "-".to_string(), |v| v.to_string());
        writeln!(
            out,
            "{:<10} {:<6} {:<26} {:<9} {:<7} {:>9.3}  {}",
            r.theta.label(),
            r.parity,
            r.ideal.name(),
            val,
            r.verdict,
            r.elapsed.as_secs_f64(),
            r.tau_text()
        )?;
    }
    Ok(())
}

pub(super) fn lemma_report(p: u32, report: &LemmaReport, as_machine: bool, out: &mut dyn Write) -> io::Result<()> {
    if as_machine {
        let entries: Vec<Value> = report
            .entries
            .iter()
            .map(|e| {
                json!({
                    "check": e.kind.name(),
                    "instance": e.instance,
                    "valuation": e.valuation,
                    "bound": e.bound,
                    "ok": e.ok,
                })
            })
            .collect();
        return machine(out, &json!({ "p": p, "all_ok": report.all_ok(), "entries": entries }));
    }
    for e in &report.entries {
        let val = e.valuation.map_or_else(|| "-".to_string(), |v| v.to_string());
        let bound = e.bound.map_or_else(|| "-".to_string(), |v| v.to_string());
        writeln!(
            out,
            "{} {:<22} valuation {:>2} bound {:>2}  {}",
            if e.ok { "PASS" } else { "FAIL" },
            e.kind.name(),
            val,
            bound,
            e.instance
        )?;
    }
    let failed = report.failures().count();
    writeln!(out, "{} checks, {} failed", report.entries.len(), failed)
}

pub(super) fn bracket(poly: &LaurentPoly, as_machine: bool, out: &mut dyn Write) -> io::Result<()> {
    if as_machine {
        let coeffs: Vec<String> = poly.coeffs().iter().map(|c| c.to_string()).collect();
        return machine(out, &json!({ "bracket": poly.to_string(), "low": poly.low(), "coeffs": coeffs }));
    }
    writeln!(out, "{poly}")
}

pub(super) fn catalog(entries: &[CatalogEntry], as_machine: bool, out: &mut dyn Write) -> io::Result<()> {
    if as_machine {
        let list: Vec<Value> = entries
            .iter()
            .map(|e| {
                json!({
                    "name": e.name,
                    "components": e.diagram.num_components(),
                    "crossings": e.diagram.num_crossings(),
                    "framings": e.framings,
                    "split": e.split,
                    "notes": e.notes,
                    "document": e.diagram.to_document(),
                })
            })
            .collect();
        return machine(out, &Value::Array(list));
    }
    writeln!(out, "{:<10} {:>10} {:>9} {:<10} {:<6} notes", "name", "components", "crossings", "framings", "split")?;
    for e in entries {
        writeln!(
            out,
            "{:<10} {:>10} {:>9} {:<10} {:<6} {}",
            e.name,
            e.diagram.num_components(),
            e.diagram.num_crossings(),
            format!("{:?}", e.framings),
            e.split,
            e.notes
        )?;
    }
    Ok(())
}
