//! Timed enumeration versus facet computation over a directory of
//! instances.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use argfacets::{parse_framework, Budget, Constraints, Format, Semantics};
use argfacets_service::routes::report_within;
use serde::Serialize;

pub const HEADER: [&str; 10] = [
    "instance",
    "semantics",
    "n_args",
    "n_attacks",
    "n_extensions",
    "exhausted",
    "n_facets",
    "t_enum_ms",
    "t_facets_ms",
    "status",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    TimeoutEnum,
    TimeoutFacets,
    Error,
}

/// One CSV row. When `exhausted` is false, `n_extensions` is only a lower
/// bound.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub instance: String,
    pub semantics: Semantics,
    pub n_args: Option<usize>,
    pub n_attacks: Option<usize>,
    pub n_extensions: Option<usize>,
    pub exhausted: Option<bool>,
    pub n_facets: Option<usize>,
    pub t_enum_ms: f64,
    pub t_facets_ms: f64,
    pub status: Status,
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub semantics: Vec<Semantics>,
    pub timeout: Option<Duration>,
    pub max_models: Option<usize>,
}

fn millis(d: Duration) -> f64 {
    (d.as_secs_f64() * 1e6).round() / 1e3
}

/// Framework files directly inside `dir`, sorted by path.
pub fn instances(dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    let mut out: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(Result::ok)
        .map(|e| e.path())
        .filter(|p| p.is_file() && Format::from_path(p).is_some())
        .collect();
    out.sort();
    Ok(out)
}

/// Runs one instance under every configured semantics. Enumeration and
/// facet computation each get the full timeout.
pub fn bench_instance(path: &Path, config: &BenchConfig) -> Vec<BenchRow> {
    let instance = path.display().to_string();
    let parsed = std::fs::read_to_string(path)
        .map_err(|e| e.to_string())
        .and_then(|text| {
            let format = Format::from_path(path).ok_or("unknown format")?;
            parse_framework(&text, format).map_err(|e| e.to_string())
        });
    let af = match parsed {
        Ok(af) => af,
        Err(_) => {
            return config
                .semantics
                .iter()
                .map(|&semantics| BenchRow {
                    instance: instance.clone(),
                    semantics,
                    n_args: None,
                    n_attacks: None,
                    n_extensions: None,
                    exhausted: None,
                    n_facets: None,
                    t_enum_ms: 0.0,
                    t_facets_ms: 0.0,
                    status: Status::Error,
                })
                .collect()
        }
    };

    let none = Constraints::none();
    config
        .semantics
        .iter()
        .map(|&semantics| {
            let budget = Budget {
                max_models: config.max_models,
                timeout: config.timeout,
            };
            let start = Instant::now();
            let result = argfacets::enumerate(&af, semantics, &none, &budget);
            let t_enum = start.elapsed();

            let start = Instant::now();
            let deadline = config.timeout.map(|t| start + t);
            let report = report_within(&af, semantics, &none, deadline);
            let t_facets = start.elapsed();

            let status = if result.timed_out {
                Status::TimeoutEnum
            } else if report.is_err() {
                Status::TimeoutFacets
            } else {
                Status::Ok
            };
            BenchRow {
                instance: instance.clone(),
                semantics,
                n_args: Some(af.len()),
                n_attacks: Some(af.attacks().len()),
                n_extensions: Some(result.extensions.len()),
                exhausted: Some(result.exhausted),
                n_facets: report.ok().map(|r| r.facets.len()),
                t_enum_ms: millis(t_enum),
                t_facets_ms: millis(t_facets),
                status,
            }
        })
        .collect()
}

pub fn run(dir: &Path, config: &BenchConfig) -> std::io::Result<Vec<BenchRow>> {
    Ok(instances(dir)?
        .iter()
        .flat_map(|p| bench_instance(p, config))
        .collect())
}

/// Writes the header row even when `rows` is empty.
pub fn write_csv<W: Write>(out: W, rows: &[BenchRow]) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    w.write_record(HEADER)?;
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}
