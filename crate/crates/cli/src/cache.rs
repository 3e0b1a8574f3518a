//! The persistent zero cache: JSON-lines, one record per line, floats at
//! 17 significant digits so a parsed record equals the written one
//! field-for-field.

use std::fs::OpenOptions;
use std::io::{ErrorKind, Write};
use std::path::Path;

use critline_core::zeros::ZeroRecord;
use critline_core::zeta::PrecisionParams;
use critline_core::Real;

use crate::jsonfmt::real;

pub fn render(record: &ZeroRecord<Real>) -> String {
    format!(
        "{{\"y\":{},\"abs_zeta\":{},\"char_residual\":{},\"reflect_residual\":{},\"iterations\":{},\"engine\":\"{}\",\"params\":{{\"n\":{},\"k\":{},\"pole_radius\":{},\"tol\":{}}}}}",
        real(record.y),
        real(record.abs_zeta),
        real(record.char_residual),
        real(record.reflect_residual),
        record.iterations,
        record.engine.as_str(),
        record.params.n,
        record.params.k,
        real(record.params.pole_radius),
        real(record.params.tol),
    )
}

pub fn parse_line(line: &str) -> Option<ZeroRecord<Real>> {
    let v: serde_json::Value = serde_json::from_str(line).ok()?;
    let p = v.get("params")?;
    Some(ZeroRecord {
        y: v.get("y")?.as_f64()?,
        abs_zeta: v.get("abs_zeta")?.as_f64()?,
        char_residual: v.get("char_residual")?.as_f64()?,
        reflect_residual: v.get("reflect_residual")?.as_f64()?,
        iterations: u32::try_from(v.get("iterations")?.as_u64()?).ok()?,
        engine: v.get("engine")?.as_str()?.parse().ok()?,
        params: PrecisionParams {
            n: p.get("n")?.as_u64()?,
            k: u32::try_from(p.get("k")?.as_u64()?).ok()?,
            pole_radius: p.get("pole_radius")?.as_f64()?,
            tol: p.get("tol")?.as_f64()?,
        },
    })
}

/// Reads every record from `path`; an absent file is an empty cache.
pub fn load(path: &Path) -> Result<Vec<ZeroRecord<Real>>, String> {
    let text = match std::fs::read_to_string(path) {
        Ok(text) => text,
        Err(e) if e.kind() == ErrorKind::NotFound => return Ok(Vec::new()),
        Err(e) => return Err(format!("cannot read {}: {e}", path.display())),
    };
    let mut records = Vec::new();
    for (index, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        match parse_line(line) {
            Some(record) => records.push(record),
            None => {
                return Err(format!(
                    "{} line {}: not a zero record",
                    path.display(),
                    index + 1
                ))
            }
        }
    }
    Ok(records)
}

/// Appends records to `path`, creating the file if absent.
pub fn append(path: &Path, records: &[ZeroRecord<Real>]) -> Result<(), String> {
    let mut file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(|e| format!("cannot open {}: {e}", path.display()))?;
    for record in records {
        writeln!(file, "{}", render(record))
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    Ok(())
}
