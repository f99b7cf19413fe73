//! CSV + JSON-sidecar serialization for receiver trace sets.
//!
//! The CSV layout is one header row `t_s,rx_<x1>,rx_<x2>,...` followed by one
//! row per time step. Floats are written in shortest round-trip form, so a
//! write/read cycle reproduces every value exactly. The sidecar stores the
//! metadata the CSV cannot carry (source spec and position, the generating
//! profile, processing tags).

use std::io::{Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::domain::Profile;
use crate::error::{Error, Result};
use crate::fdtd::{SourceSpec, WaveRecordSet};

/// Metadata written next to a traces CSV.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TraceSidecar {
    pub rx_positions: Vec<f64>,
    pub dt_s: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<SourceSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source_position: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub profile: Option<Profile>,
    #[serde(default)]
    pub processing_tags: Vec<String>,
}

impl TraceSidecar {
    pub fn from_json_str(s: &str) -> Result<Self> {
        let sc: TraceSidecar = serde_json::from_str(s)?;
        sc.validate()?;
        Ok(sc)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.dt_s > 0.0) || !self.dt_s.is_finite() {
            return Err(Error::Domain(format!(
                "sidecar dt must be positive, got {}",
                self.dt_s
            )));
        }
        if let Some(p) = &self.profile {
            p.validate()?;
        }
        if let Some(s) = &self.source {
            s.validate()?;
        }
        for &x in &self.rx_positions {
            if !x.is_finite() {
                return Err(Error::Domain("receiver positions must be finite".into()));
            }
        }
        Ok(())
    }
}

pub fn write_csv<W: Write>(records: &WaveRecordSet, mut w: W) -> Result<()> {
    records.validate()?;
    let header: Vec<String> = std::iter::once("t_s".to_string())
        .chain(records.rx_positions.iter().map(|x| format!("rx_{x}")))
        .collect();
    writeln!(w, "{}", header.join(","))?;
    for k in 0..records.nt() {
        let mut row = String::with_capacity(records.traces.len() * 24 + 24);
        row.push_str(&format!("{}", k as f64 * records.dt));
        for trace in &records.traces {
            row.push(',');
            row.push_str(&format!("{}", trace[k]));
        }
        writeln!(w, "{row}")?;
    }
    Ok(())
}

pub fn read_csv<R: Read>(r: R) -> Result<WaveRecordSet> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(r);

    let headers = rdr.headers()?.clone();
    if headers.is_empty() || headers[0] != *"t_s" {
        return Err(Error::Parse("first column must be t_s".into()));
    }
    let rx_positions: Vec<f64> = headers
        .iter()
        .skip(1)
        .map(|h| {
            h.strip_prefix("rx_")
                .ok_or_else(|| Error::Parse(format!("column '{h}' lacks rx_ prefix")))
                .and_then(|p| {
                    p.parse::<f64>()
                        .map_err(|_| Error::Parse(format!("bad receiver position '{p}'")))
                })
        })
        .collect::<Result<Vec<_>>>()?;
    if rx_positions.is_empty() {
        return Err(Error::Parse("no receiver columns".into()));
    }
    if rx_positions.iter().any(|x| !x.is_finite()) {
        return Err(Error::Parse("receiver positions must be finite".into()));
    }

    let n_rx = rx_positions.len();
    let mut times: Vec<f64> = Vec::new();
    let mut traces: Vec<Vec<f64>> = vec![Vec::new(); n_rx];
    for record in rdr.records() {
        let record = record?;
        if record.len() != n_rx + 1 {
            return Err(Error::Parse(format!(
                "row has {} fields, expected {}",
                record.len(),
                n_rx + 1
            )));
        }
        let t: f64 = record[0]
            .parse()
            .map_err(|_| Error::Parse(format!("bad time value '{}'", &record[0])))?;
        times.push(t);
        for (i, field) in record.iter().skip(1).enumerate() {
            let v: f64 = field
                .parse()
                .map_err(|_| Error::Parse(format!("bad sample '{field}'")))?;
            if !v.is_finite() {
                return Err(Error::Parse("non-finite sample".into()));
            }
            traces[i].push(v);
        }
    }
    if times.len() < 2 {
        return Err(Error::Parse("need at least two rows to derive dt".into()));
    }
    let dt = times[1] - times[0];
    if !(dt > 0.0) || !dt.is_finite() {
        return Err(Error::Parse(format!("non-increasing time column (dt = {dt})")));
    }
    for (k, w) in times.windows(2).enumerate() {
        let step = w[1] - w[0];
        if (step - dt).abs() > 1e-9 * dt.abs().max(1e-30) + 1e-18 {
            return Err(Error::Parse(format!(
                "non-uniform time column near row {k} (step {step:.6e} vs dt {dt:.6e})"
            )));
        }
    }

    let set = WaveRecordSet {
        rx_positions,
        dt,
        traces,
        source_position: None,
    };
    set.validate()?;
    Ok(set)
}

/// Parses a traces CSV from an in-memory string.
pub fn read_csv_str(s: &str) -> Result<WaveRecordSet> {
    read_csv(s.as_bytes())
}

/// Writes `records` as `<stem>.csv` plus `<stem>.json` sidecar.
pub fn write_with_sidecar(
    records: &WaveRecordSet,
    sidecar: &TraceSidecar,
    csv_path: &Path,
) -> Result<()> {
    let file = std::fs::File::create(csv_path)?;
    write_csv(records, std::io::BufWriter::new(file))?;
    let json_path = csv_path.with_extension("json");
    std::fs::write(&json_path, serde_json::to_string_pretty(sidecar)?)?;
    Ok(())
}

/// Loads a traces CSV; when a sidecar with the same stem exists, its source
/// position is merged in.
pub fn read_with_sidecar(csv_path: &Path) -> Result<(WaveRecordSet, Option<TraceSidecar>)> {
    let file = std::fs::File::open(csv_path)?;
    let mut records = read_csv(std::io::BufReader::new(file))?;
    let json_path = csv_path.with_extension("json");
    let sidecar = if json_path.exists() {
        let sc = TraceSidecar::from_json_str(&std::fs::read_to_string(&json_path)?)?;
        if sc.rx_positions.len() != records.rx_positions.len() {
            return Err(Error::Parse(format!(
                "sidecar lists {} receivers, CSV has {}",
                sc.rx_positions.len(),
                records.rx_positions.len()
            )));
        }
        records.source_position = sc.source_position;
        Some(sc)
    } else {
        None
    };
    Ok((records, sidecar))
}
