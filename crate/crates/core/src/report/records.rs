// Copyright 2026 The qvf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::injector::{FaultSite, GridPoint, QvfRecord, SimMode};
use crate::{Error, Result};

/// First line of every record file.
pub const RECORD_FILE_VERSION: &str = "# qvf-csv v1";

pub const RECORD_HEADER: [&str; 15] = [
    "circuit_id",
    "site_index",
    "gate_index",
    "qubit",
    "theta_deg",
    "phi_deg",
    "mode",
    "shots",
    "seed",
    "pst",
    "p_b",
    "contrast",
    "qvf",
    "baseline_qvf",
    "improved_flag",
];

#[derive(Debug, Serialize, Deserialize)]
struct Row {
    circuit_id: String,
    site_index: i64,
    gate_index: i64,
    qubit: i64,
    theta_deg: u32,
    phi_deg: u32,
    mode: String,
    shots: u64,
    seed: u64,
    pst: f64,
    p_b: f64,
    contrast: f64,
    qvf: f64,
    baseline_qvf: f64,
    improved_flag: u8,
}

impl From<&QvfRecord> for Row {
    fn from(r: &QvfRecord) -> Row {
        let (site_index, gate_index, qubit) = match (r.site_index, r.site) {
            (Some(i), Some(s)) => (i as i64, s.gate_index as i64, s.qubit as i64),
            _ => (-1, -1, -1),
        };
        Row {
            circuit_id: r.circuit_id.clone(),
            site_index,
            gate_index,
            qubit,
            theta_deg: r.point.theta_deg,
            phi_deg: r.point.phi_deg,
            mode: r.mode.as_str().to_string(),
            shots: r.shots,
            seed: r.seed,
            pst: r.pst,
            p_b: r.p_b,
            contrast: r.contrast,
            qvf: r.qvf,
            baseline_qvf: r.baseline_qvf,
            improved_flag: u8::from(r.improved),
        }
    }
}

impl Row {
    fn into_record(self, line: u64) -> Result<QvfRecord> {
        let bad = |msg: String| Error::RecordFile(format!("line {line}: {msg}"));
        let (site_index, site) = match (self.site_index, self.gate_index, self.qubit) {
            (-1, -1, -1) => (None, None),
            (s, g, q) if s >= 0 && g >= 0 && q >= 0 => {
                (Some(s as usize), Some(FaultSite::new(g as usize, q as usize)))
            }
            (s, g, q) => return Err(bad(format!("inconsistent site columns {s},{g},{q}"))),
        };
        let mode: SimMode = self.mode.parse().map_err(bad)?;
        let improved = match self.improved_flag {
            0 => false,
            1 => true,
            other => return Err(bad(format!("improved_flag must be 0 or 1, got {other}"))),
        };
        Ok(QvfRecord {
            circuit_id: self.circuit_id,
            site_index,
            site,
            point: GridPoint::new(self.theta_deg, self.phi_deg),
            mode,
            shots: self.shots,
            seed: self.seed,
            pst: self.pst,
            p_b: self.p_b,
            contrast: self.contrast,
            qvf: self.qvf,
            baseline_qvf: self.baseline_qvf,
            improved,
        })
    }
}

/// Streams records to a versioned CSV file, one row at a time.
pub struct RecordWriter<W: Write> {
    inner: csv::Writer<W>,
    rows: usize,
}

impl<W: Write> RecordWriter<W> {
    pub fn new(mut out: W) -> Result<Self> {
        writeln!(out, "{RECORD_FILE_VERSION}")?;
        let mut inner = csv::WriterBuilder::new().has_headers(false).from_writer(out);
        inner.write_record(RECORD_HEADER)?;
        Ok(RecordWriter { inner, rows: 0 })
    }

    pub fn write(&mut self, record: &QvfRecord) -> Result<()> {
        self.inner.serialize(Row::from(record))?;
        self.rows += 1;
        Ok(())
    }

    /// Data rows written so far.
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn finish(mut self) -> Result<W> {
        self.inner.flush()?;
        self.inner
            .into_inner()
            .map_err(|e| Error::Io(std::io::Error::other(e.to_string())))
    }
}

impl RecordWriter<BufWriter<File>> {
    pub fn create(path: impl AsRef<Path>) -> Result<Self> {
        RecordWriter::new(BufWriter::new(File::create(path)?))
    }
}

/// Serialize records into an in-memory CSV document.
pub fn write_records(records: &[QvfRecord]) -> Result<String> {
    let mut w = RecordWriter::new(Vec::new())?;
    for r in records {
        w.write(r)?;
    }
    String::from_utf8(w.finish()?).map_err(|e| Error::RecordFile(e.to_string()))
}

/// Parse a record file, checking the version line and header.
pub fn read_records(input: impl Read) -> Result<Vec<QvfRecord>> {
    let mut reader = BufReader::new(input);
    let mut first = String::new();
    reader.read_line(&mut first)?;
    let first = first.trim_end_matches(['\r', '\n']);
    if first != RECORD_FILE_VERSION {
        return Err(Error::RecordFile(format!(
            "unsupported schema line {first:?}, expected {RECORD_FILE_VERSION:?}"
        )));
    }
    let mut csv = csv::ReaderBuilder::new().has_headers(true).from_reader(reader);
    let header = csv.headers()?;
    if header.iter().ne(RECORD_HEADER) {
        return Err(Error::RecordFile(format!(
            "unexpected header {:?}",
            header.iter().collect::<Vec<_>>()
        )));
    }
    let mut out = Vec::new();
    for (i, row) in csv.deserialize::<Row>().enumerate() {
        out.push(row?.into_record(i as u64 + 3)?);
    }
    Ok(out)
}

pub fn read_records_file(path: impl AsRef<Path>) -> Result<Vec<QvfRecord>> {
    read_records(File::open(path)?)
}
