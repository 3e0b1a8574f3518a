//! JSON assembly with fixed key order and 17-significant-digit floats so
//! that every serialized double round-trips exactly.

use critline_core::criteria::CriterionReport;
use critline_core::zeta::EvalResult;
use critline_core::zeros::{GridHit, ScanReport};
use critline_core::Real;

/// One float, 17 significant digits: guaranteed lossless for f64.
pub fn real(x: f64) -> String {
    format!("{x:.16e}")
}

/// A JSON string literal with proper escaping.
pub fn jstr(s: &str) -> String {
    serde_json::to_string(s).expect("string serialization is infallible")
}

pub fn eval_object(re: f64, im: f64, r: &EvalResult<Real>) -> String {
    format!(
        "{{\"re\":{},\"im\":{},\"zeta_re\":{},\"zeta_im\":{},\"err_bound\":{},\"engine\":{},\"N\":{},\"K\":{}}}",
        real(re),
        real(im),
        real(r.value.re),
        real(r.value.im),
        real(r.err_bound),
        jstr(r.engine.as_str()),
        r.params.n,
        r.params.k,
    )
}

fn hit_object(hit: &GridHit<Real>) -> String {
    format!(
        "{{\"x\":{},\"y\":{},\"abs_zeta\":{},\"char_residual\":{}}}",
        real(hit.x),
        real(hit.y),
        real(hit.abs_zeta),
        real(hit.char_residual),
    )
}

fn hit_array(hits: &[GridHit<Real>]) -> String {
    let parts: Vec<String> = hits.iter().map(hit_object).collect();
    format!("[{}]", parts.join(","))
}

pub fn scan_object(report: &ScanReport<Real>) -> String {
    format!(
        "{{\"x_min\":{},\"x_max\":{},\"y_min\":{},\"y_max\":{},\"dx\":{},\"dy\":{},\"rows\":{},\"minima\":{},\"off_line_violations\":{}}}",
        real(report.x_min),
        real(report.x_max),
        real(report.y_min),
        real(report.y_max),
        real(report.dx),
        real(report.dy),
        report.rows.len(),
        hit_array(&report.minima),
        hit_array(&report.off_line_violations),
    )
}

pub fn criterion_object(report: &CriterionReport) -> String {
    let items: Vec<String> = report
        .extremal_items
        .iter()
        .map(|item| format!("{{\"n\":{},\"value\":{}}}", item.n, real(item.value)))
        .collect();
    format!(
        "{{\"id\":{},\"range\":{},\"pass\":{},\"min_margin\":{},\"extremal_items\":[{}],\"details\":{},\"wall_time_s\":{}}}",
        jstr(report.id),
        jstr(&report.range),
        report.pass,
        real(report.min_margin),
        items.join(","),
        jstr(&report.details),
        real(report.wall_time_s),
    )
}
