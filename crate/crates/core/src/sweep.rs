//! Sweep configuration, execution and CSV emission.
//!
//! Configuration documents are UTF-8 lines of `key = value`; `#` starts a
//! comment. Recognized keys: `delta_a delta_b delta_c g f_a kappa_a kappa_b
//! kappa_c axis start stop points scale`.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use log::warn;
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fock::{build_space, FockSpace, FockTruncation};
use crate::model::{solve_point, DensityMatrix, SystemParams};
use crate::observables::{record, ObservableRecord};

/// Exact CSV header.
pub const CSV_HEADER: &str = "x,g2_a,n_a,n_b,n_c";

/// Default sample count of a detuning sweep.
pub const DEFAULT_DETUNING_POINTS: usize = 401;
/// Default sample count of a coupling sweep.
pub const DEFAULT_COUPLING_POINTS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    DeltaA,
    G,
}

impl Axis {
    pub fn apply(self, base: &SystemParams, x: f64) -> SystemParams {
        let mut p = *base;
        match self {
            Axis::DeltaA => p.delta_a = x,
            Axis::G => p.g = x,
        }
        p
    }
}

impl FromStr for Axis {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "delta_a" => Ok(Axis::DeltaA),
            "g" => Ok(Axis::G),
            other => Err(format!("unknown axis {other:?} (expected delta_a or g)")),
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::DeltaA => "delta_a",
            Axis::G => "g",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    Linear,
    Log,
}

impl FromStr for Scale {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "linear" => Ok(Scale::Linear),
            "log" => Ok(Scale::Log),
            other => Err(format!("unknown scale {other:?} (expected linear or log)")),
        }
    }
}

/// A one-dimensional parameter sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub axis: Axis,
    pub start: f64,
    pub stop: f64,
    pub points: usize,
    pub scale: Scale,
    pub base: SystemParams,
    pub trunc: FockTruncation,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if self.points < 2 {
            return Err(Error::InvalidRange(format!(
                "points = {} (need ≥ 2)",
                self.points
            )));
        }
        if !(self.start < self.stop) || !self.start.is_finite() || !self.stop.is_finite() {
            return Err(Error::InvalidRange(format!(
                "start {} must be below stop {}",
                self.start, self.stop
            )));
        }
        if self.scale == Scale::Log && self.start <= 0.0 {
            return Err(Error::InvalidRange("log scale needs start > 0".into()));
        }
        self.trunc.validate()?;
        self.base.validate()
    }

    /// Strictly increasing sample positions, with both endpoints exact.
    pub fn samples(&self) -> Vec<f64> {
        let n = self.points;
        let last = (n - 1) as f64;
        (0..n)
            .map(|k| {
                if k == n - 1 {
                    return self.stop;
                }
                let t = k as f64 / last;
                match self.scale {
                    Scale::Linear => self.start + (self.stop - self.start) * k as f64 / last,
                    Scale::Log => {
                        let (a, b) = (self.start.ln(), self.stop.ln());
                        if k == 0 {
                            self.start
                        } else {
                            (a + (b - a) * t).exp()
                        }
                    }
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub spec: SweepSpec,
    pub records: Vec<ObservableRecord>,
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses a configuration document. Decay rates default to 1 and the
/// truncation to (5,2,2); `axis`, `start` and `stop` are required.
pub fn parse_config(text: &str) -> Result<(SystemParams, SweepSpec)> {
    let mut params = SystemParams::default();
    let mut axis = None;
    let mut start = None;
    let mut stop = None;
    let mut points = None;
    let mut scale = None;
    let mut seen: Vec<&str> = Vec::new();
    let mut last_line = 0;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content.split_once('=').ok_or_else(|| {
            parse_error(line_no, format!("expected `key = value`, got {content:?}"))
        })?;
        let (key, value) = (key.trim(), value.trim());
        if value.is_empty() {
            return Err(parse_error(line_no, format!("missing value for {key}")));
        }
        if seen.contains(&key) {
            return Err(parse_error(line_no, format!("duplicate key {key}")));
        }

        let number = || -> Result<f64> {
            let v: f64 = value
                .parse()
                .map_err(|_| parse_error(line_no, format!("{key}: {value:?} is not a number")))?;
            if !v.is_finite() {
                return Err(parse_error(line_no, format!("{key}: value must be finite")));
            }
            Ok(v)
        };
        let positive = |v: f64| -> Result<f64> {
            if v > 0.0 {
                Ok(v)
            } else {
                Err(parse_error(
                    line_no,
                    format!("{key} must be positive, got {v}"),
                ))
            }
        };

        match key {
            "delta_a" => params.delta_a = number()?,
            "delta_b" => params.delta_b = number()?,
            "delta_c" => params.delta_c = number()?,
            "g" => params.g = number()?,
            "f_a" => {
                let v = number()?;
                if v < 0.0 {
                    return Err(parse_error(
                        line_no,
                        format!("f_a must be non-negative, got {v}"),
                    ));
                }
                params.f_a = v;
            }
            "kappa_a" => params.kappa_a = positive(number()?)?,
            "kappa_b" => params.kappa_b = positive(number()?)?,
            "kappa_c" => params.kappa_c = positive(number()?)?,
            "axis" => axis = Some(value.parse::<Axis>().map_err(|e| parse_error(line_no, e))?),
            "scale" => {
                scale = Some(
                    value
                        .parse::<Scale>()
                        .map_err(|e| parse_error(line_no, e))?,
                )
            }
            "start" => start = Some((number()?, line_no)),
            "stop" => stop = Some((number()?, line_no)),
            "points" => {
                let n: usize = value.parse().map_err(|_| {
                    parse_error(line_no, format!("points: {value:?} is not a count"))
                })?;
                if n < 2 {
                    return Err(parse_error(
                        line_no,
                        format!("points must be at least 2, got {n}"),
                    ));
                }
                points = Some(n);
            }
            other => return Err(parse_error(line_no, format!("unknown key {other:?}"))),
        }
        seen.push(key);
    }

    let eof = last_line + 1;
    let axis = axis.ok_or_else(|| parse_error(eof, "missing required key `axis`"))?;
    let (start, _) = start.ok_or_else(|| parse_error(eof, "missing required key `start`"))?;
    let (stop, stop_line) = stop.ok_or_else(|| parse_error(eof, "missing required key `stop`"))?;
    if !(start < stop) {
        return Err(parse_error(
            stop_line,
            format!("stop {stop} must exceed start {start}"),
        ));
    }
    let (default_points, default_scale) = match axis {
        Axis::DeltaA => (DEFAULT_DETUNING_POINTS, Scale::Linear),
        Axis::G => (DEFAULT_COUPLING_POINTS, Scale::Log),
    };
    let scale = scale.unwrap_or(default_scale);
    if scale == Scale::Log && start <= 0.0 {
        return Err(parse_error(eof, "log scale requires start > 0"));
    }

    let spec = SweepSpec {
        axis,
        start,
        stop,
        points: points.unwrap_or(default_points),
        scale,
        base: params,
        trunc: FockTruncation::default(),
    };
    Ok((params, spec))
}

/// Steady-state observables at one parameter point.
pub fn solve_record(x: f64, params: &SystemParams, space: &FockSpace) -> Result<ObservableRecord> {
    let rho = solve_point(params, space)?;
    record(x, &rho, space)
}

/// Runs every sample; per-point failures become gap rows.
pub fn run_sweep(spec: &SweepSpec) -> Result<SweepResult> {
    #[cfg(feature = "parallel")]
    return run_sweep_with(spec, true);
    #[cfg(not(feature = "parallel"))]
    return run_sweep_with(spec, false);
}

/// [`run_sweep`] with explicit control over parallel execution. Records are
/// always returned in axis order.
pub fn run_sweep_with(spec: &SweepSpec, parallel: bool) -> Result<SweepResult> {
    run_sweep_inspect(spec, parallel, |_, _| {})
}

/// Like [`run_sweep_with`], additionally handing every solved steady state
/// to `inspect` together with its axis value.
pub fn run_sweep_inspect<F>(spec: &SweepSpec, parallel: bool, inspect: F) -> Result<SweepResult>
where
    F: Fn(f64, &DensityMatrix) + Sync,
{
    spec.validate()?;
    let space = build_space(spec.trunc)?;
    let xs = spec.samples();

    let point = |&x: &f64| {
        let params = spec.axis.apply(&spec.base, x);
        let solved = solve_point(&params, &space).and_then(|rho| {
            inspect(x, &rho);
            record(x, &rho, &space)
        });
        solved.unwrap_or_else(|e| {
            warn!("{} = {x}: {e}; recording a gap", spec.axis);
            ObservableRecord::gap(x)
        })
    };

    #[cfg(feature = "parallel")]
    let records: Vec<ObservableRecord> = if parallel {
        xs.par_iter().map(point).collect()
    } else {
        xs.iter().map(point).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let records: Vec<ObservableRecord> = {
        let _ = parallel;
        xs.iter().map(point).collect()
    };

    Ok(SweepResult {
        spec: spec.clone(),
        records,
    })
}

fn fmt_value(out: &mut String, v: Option<f64>) {
    match v {
        Some(x) if x.is_finite() => write!(out, "{x:.9e}").expect("writing to String"),
        _ => out.push_str("nan"),
    }
}

/// CSV with the exact header, LF endings and 10 significant digits.
pub fn write_records(records: &[ObservableRecord]) -> String {
    let mut out = String::with_capacity(16 + records.len() * 90);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in records {
        fmt_value(&mut out, Some(r.x));
        for v in [r.g2_a, r.n_a, r.n_b, r.n_c] {
            out.push(',');
            fmt_value(&mut out, v);
        }
        out.push('\n');
    }
    out
}

pub fn emit_csv(result: &SweepResult) -> String {
    write_records(&result.records)
}

/// Reads back a document produced by [`emit_csv`].
pub fn parse_csv(text: &str) -> Result<Vec<ObservableRecord>> {
    let mut lines = text.lines();
    match lines.next() {
        Some(CSV_HEADER) => {}
        other => {
            return Err(parse_error(
                1,
                format!("expected header {CSV_HEADER:?}, got {other:?}"),
            ))
        }
    }
    let mut records = Vec::new();
    for (i, line) in lines.enumerate() {
        let line_no = i + 2;
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 5 {
            return Err(parse_error(
                line_no,
                format!("expected 5 fields, got {}", fields.len()),
            ));
        }
        let mut vals = [None; 5];
        for (slot, f) in vals.iter_mut().zip(&fields) {
            if *f != "nan" {
                *slot = Some(
                    f.parse::<f64>()
                        .map_err(|_| parse_error(line_no, format!("bad number {f:?}")))?,
                );
            }
        }
        let x = vals[0].ok_or_else(|| parse_error(line_no, "x must be a number"))?;
        records.push(ObservableRecord {
            x,
            g2_a: vals[1],
            n_a: vals[2],
            n_b: vals[3],
            n_c: vals[4],
        });
    }
    Ok(records)
}
