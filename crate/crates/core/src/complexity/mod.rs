//! Cost model: closed-form multiplication counts, the complexity table and
//! an instrumented dispatcher over every algorithm.

mod counting;

use std::fmt::Write as _;

pub use counting::{CostPolicy, NullRecorder, OpCounts, Recorder, Tracked};

use crate::algorithms::{self, Algorithm, BinResult, BinSpec};
use crate::error::Result;
use crate::numtheory::totient;
use crate::polynomial::ComplexPoly;
use crate::streaming;

/// Closed-form real multiplication counts for real input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NominalCosts {
    pub goertzel: u64,
    pub jco: u64,
    pub jco_goertzel: u64,
}

pub fn nominal_costs(n: usize, k: i64) -> Result<NominalCosts> {
    let spec = BinSpec::new(n, k)?;
    let phi = totient(spec.order)?;
    let goertzel = match n {
        0 | 1 => 0,
        _ if CostPolicy::STANDARD.real_cost(spec.a) == 0 => 2,
        _ => n as u64,
    };
    let jco = 2 * (phi - 1);
    let jco_goertzel = if phi > 2 { phi } else { jco };
    Ok(NominalCosts { goertzel, jco, jco_goertzel })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRow {
    pub n: usize,
    pub k: usize,
    pub goertzel: u64,
    pub jco: u64,
    pub jco_goertzel: u64,
    /// Order of the bin.
    pub order: u64,
}

pub const CSV_HEADER: &str = "N,k,goertzel,jco,jco_goertzel,L";

/// The `(N, k)` pairs of the reference comparison table, N = 83 expanded to
/// its four bins.
pub fn paper_table_spec() -> Vec<(usize, Vec<i64>)> {
    [12, 32, 48, 83, 120].into_iter().map(|n| (n, vec![1, 2, 3, 4])).collect()
}

pub fn complexity_table(rows: &[(usize, Vec<i64>)]) -> Result<Vec<TableRow>> {
    let mut out = Vec::new();
    for (n, ks) in rows {
        for &k in ks {
            let spec = BinSpec::new(*n, k)?;
            let c = nominal_costs(*n, k)?;
            out.push(TableRow {
                n: *n,
                k: spec.k,
                goertzel: c.goertzel,
                jco: c.jco,
                jco_goertzel: c.jco_goertzel,
                order: spec.order,
            });
        }
    }
    Ok(out)
}

pub fn render_csv(rows: &[TableRow]) -> String {
    let mut s = String::from(CSV_HEADER);
    s.push('\n');
    for r in rows {
        let _ = writeln!(s, "{},{},{},{},{},{}", r.n, r.k, r.goertzel, r.jco, r.jco_goertzel, r.order);
    }
    s
}

pub fn render_text(rows: &[TableRow]) -> String {
    let header = ["N", "k", "Goertzel", "JCO", "JCO-Goertzel", "L"];
    let cells: Vec<[String; 6]> = rows
        .iter()
        .map(|r| {
            [r.n, r.k, r.goertzel as usize, r.jco as usize, r.jco_goertzel as usize, r.order as usize]
                .map(|x| x.to_string())
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let mut s = String::new();
    let line = |s: &mut String, row: &[&str]| {
        let parts: Vec<String> = row.iter().zip(widths).map(|(c, w)| format!("{c:>w$}")).collect();
        let _ = writeln!(s, "{}", parts.join("  "));
    };
    line(&mut s, &header);
    for row in &cells {
        line(&mut s, &row.each_ref().map(String::as_str));
    }
    s
}

/// Runs one algorithm with a fresh counting recorder.
pub fn measure(alg: Algorithm, v: &ComplexPoly, k: i64) -> Result<BinResult> {
    match alg {
        Algorithm::Naive => algorithms::naive_bin(v, k),
        Algorithm::Goertzel => algorithms::goertzel_bin(v, k),
        Algorithm::Jco => algorithms::jco_bin(v, k),
        Algorithm::JcoGoertzel => algorithms::jco_goertzel_bin(v, k),
        Algorithm::Stream => streaming::stream_bin(v, k),
    }
}

/// Parses the tag, then measures. Unknown tags are an error.
pub fn measure_tag(tag: &str, v: &ComplexPoly, k: i64) -> Result<BinResult> {
    measure(tag.parse()?, v, k)
}
