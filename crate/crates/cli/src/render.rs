use std::io::{self, Write};

use ksucc::analysis::{Case, CellSource, Status, Table, VerificationReport};
use ksucc::BigInt;
use serde_json::{json, Value};

/// Decimal with `,` every three digits, for human-facing output only.
pub fn with_separators(v: &BigInt) -> String {
    let digits = v.magnitude().to_string();
    let mut out = String::with_capacity(digits.len() + digits.len() / 3 + 1);
    if *v < BigInt::from(0) {
        out.push('-');
    }
    for (i, c) in digits.chars().enumerate() {
        if i > 0 && (digits.len() - i).is_multiple_of(3) {
            out.push(',');
        }
        out.push(c);
    }
    out
}

fn join(values: &[BigInt]) -> String {
    match values {
        [one] => one.to_string(),
        many => format!(
            "[{}]",
            many.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
        ),
    }
}

fn case_line(c: &Case) -> String {
    match c.status {
        Status::Inapplicable => format!("  n={} k={} {}: inapplicable", c.n, c.k, c.label),
        s => format!(
            "  n={} k={} {}: expected {} observed {} [{s}]",
            c.n,
            c.k,
            c.label,
            join(&c.expected),
            join(&c.observed)
        ),
    }
}

pub fn reports_plain(reports: &[VerificationReport], detailed: bool, out: &mut dyn Write) -> io::Result<()> {
    for r in reports {
        writeln!(
            out,
            "{:<28} {:<12} ({} pass, {} fail, {} inapplicable)  {}",
            r.claim.id(),
            r.status.as_str(),
            r.count(Status::Pass),
            r.count(Status::Fail),
            r.count(Status::Inapplicable),
            r.claim.summary()
        )?;
        for c in r
            .cases
            .iter()
            .filter(|c| detailed || c.status == Status::Fail)
        {
            writeln!(out, "{}", case_line(c))?;
        }
        for e in &r.errata {
            writeln!(
                out,
                "  ERRATUM {}({},{}): stated {}, established {} ({}): {}",
                e.family,
                e.n,
                e.k,
                e.stated,
                e.established,
                if e.confirmed { "confirmed by enumeration" } else { "NOT confirmed" },
                e.remark
            )?;
        }
    }
    Ok(())
}

pub fn reports_csv(reports: &[VerificationReport], out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "claim,n,k,label,expected,observed,status")?;
    for r in reports {
        for c in &r.cases {
            let list = |v: &[BigInt]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
            writeln!(
                out,
                "{},{},{},{},{},{},{}",
                r.claim.id(),
                c.n,
                c.k,
                c.label,
                list(&c.expected),
                list(&c.observed),
                c.status
            )?;
        }
    }
    Ok(())
}

pub fn reports_json(reports: &[VerificationReport]) -> Value {
    let strings = |v: &[BigInt]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
    Value::Array(
        reports
            .iter()
            .map(|r| {
                json!({
                    "claim": r.claim.id(),
                    "summary": r.claim.summary(),
                    "n_range": [r.n_range.start(), r.n_range.end()],
                    "k_range": [r.k_range.start(), r.k_range.end()],
                    "status": r.status.as_str(),
                    "cases": r.cases.iter().map(|c| json!({
                        "n": c.n,
                        "k": c.k,
                        "label": c.label,
                        "expected": strings(&c.expected),
                        "observed": strings(&c.observed),
                        "engine": {"expected": "formula", "observed": "oracle"},
                        "status": c.status.as_str(),
                    })).collect::<Vec<_>>(),
                    "errata": r.errata.iter().map(|e| json!({
                        "family": e.family.label(),
                        "n": e.n,
                        "k": e.k,
                        "stated": e.stated.to_string(),
                        "established": e.established.to_string(),
                        "confirmed": e.confirmed,
                        "remark": e.remark,
                    })).collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

pub fn table_csv(table: &Table, out: &mut dyn Write) -> io::Result<()> {
    let headers: Vec<String> = table.spec.columns.iter().map(|c| c.header()).collect();
    writeln!(out, "n,{}", headers.join(","))?;
    for row in &table.rows {
        let cells: Vec<String> = row
            .cells
            .iter()
            .map(|c| c.as_ref().map(|c| c.value.to_string()).unwrap_or_default())
            .collect();
        writeln!(out, "{},{}", row.n, cells.join(","))?;
    }
    Ok(())
}

pub fn table_plain(table: &Table, out: &mut dyn Write) -> io::Result<()> {
    let mut grid: Vec<Vec<String>> = vec![std::iter::once("n".to_string())
        .chain(table.spec.columns.iter().map(|c| c.header()))
        .collect()];
    for row in &table.rows {
        let mut line = vec![row.n.to_string()];
        line.extend(row.cells.iter().map(|c| match c {
            None => String::new(),
            Some(c) if c.source == CellSource::OracleFallback => {
                format!("{}*", with_separators(&c.value))
            }
            Some(c) => with_separators(&c.value),
        }));
        grid.push(line);
    }
    let widths: Vec<usize> = (0..grid[0].len())
        .map(|i| grid.iter().map(|r| r[i].len()).max().unwrap_or(0))
        .collect();
    writeln!(out, "{}: {}", table.spec.id, table.spec.title())?;
    for line in &grid {
        let cells: Vec<String> = line
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:>w$}"))
            .collect();
        writeln!(out, "{}", cells.join("  ").trim_end())?;
    }
    if table.fallback_count() > 0 {
        writeln!(out, "* closed form inapplicable (gcd(n, k) > 1); value from enumeration")?;
    }
    Ok(())
}

pub fn table_json(table: &Table) -> Value {
    json!({
        "table": table.spec.id.as_str(),
        "title": table.spec.title(),
        "columns": table.spec.columns.iter().map(|c| c.header()).collect::<Vec<_>>(),
        "rows": table.rows.iter().map(|r| json!({
            "n": r.n,
            "cells": r.cells.iter().map(|c| match c {
                None => Value::Null,
                Some(c) => json!({"value": c.value.to_string(), "engine": c.source.as_str()}),
            }).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn separators() {
        let s = |v: i64| with_separators(&BigInt::from(v));
        assert_eq!(s(0), "0");
        assert_eq!(s(999), "999");
        assert_eq!(s(16687), "16,687");
        assert_eq!(s(1_000_000), "1,000,000");
        assert_eq!(s(-1234), "-1,234");
    }
}
