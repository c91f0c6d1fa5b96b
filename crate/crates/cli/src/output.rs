//! CSV and JSON writers.

use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Context;
use serde::Serialize;

use crate::config::{Format, RunConfig};
use crate::run::Record;

/// Columns of a trajectory record.
pub const RECORD_COLUMNS: [&str; 8] = ["t", "mx", "my", "mz", "pe", "gamma_r", "gamma_e", "gamma_2"];

/// Environment variable naming the default output directory.
pub const OUTPUT_DIR_ENV: &str = "TLSDYN_OUTPUT_DIR";

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Cell {
    Num(f64),
    Text(String),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Num(x) => format!("{x:.14e}"),
            Cell::Text(s) => s.clone(),
        }
    }
}

pub fn record_cells(r: &Record) -> [Cell; 8] {
    [r.t, r.obs.mx, r.obs.my, r.obs.mz, r.obs.pe, r.rates.gamma_r, r.rates.gamma_e, r.rates.gamma_2].map(Cell::Num)
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub warnings: Vec<String>,
}

#[derive(Serialize)]
struct Document<'a> {
    tool: &'static str,
    cli_version: &'static str,
    core_version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    config: Option<&'a RunConfig>,
    columns: &'a [String],
    rows: &'a [Vec<Cell>],
    warnings: &'a [String],
}

pub fn write_csv<W: Write>(table: &Table, out: W) -> anyhow::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(&table.columns)?;
    for row in &table.rows {
        w.write_record(row.iter().map(Cell::render))?;
    }
    w.flush()?;
    Ok(())
}

/// `config` is echoed without its output path so that re-running on the echo
/// does not overwrite the file it came from.
pub fn write_json<W: Write>(table: &Table, config: Option<&RunConfig>, mut out: W) -> anyhow::Result<()> {
    let echo = config.map(|c| {
        let mut c = c.clone();
        c.output.path = None;
        c
    });
    let doc = Document {
        tool: "tlsdyn",
        cli_version: env!("CARGO_PKG_VERSION"),
        core_version: tlsdyn::VERSION,
        config: echo.as_ref(),
        columns: &table.columns,
        rows: &table.rows,
        warnings: &table.warnings,
    };
    serde_json::to_writer_pretty(&mut out, &doc)?;
    writeln!(out)?;
    Ok(())
}

/// Explicit path, else `$TLSDYN_OUTPUT_DIR/<stem>.<ext>`, else stdout (`None`).
pub fn destination(explicit: Option<&Path>, stem: &str, format: Format) -> Option<PathBuf> {
    if let Some(p) = explicit {
        return Some(p.to_path_buf());
    }
    let dir = std::env::var_os(OUTPUT_DIR_ENV).filter(|d| !d.is_empty())?;
    let ext = match format {
        Format::Csv => "csv",
        Format::Json => "json",
    };
    Some(Path::new(&dir).join(format!("{stem}.{ext}")))
}

pub fn emit(table: &Table, config: Option<&RunConfig>, format: Format, dest: Option<&Path>) -> anyhow::Result<()> {
    match dest {
        Some(path) => {
            if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            }
            let file = std::fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
            let buf = std::io::BufWriter::new(file);
            match format {
                Format::Csv => write_csv(table, buf),
                Format::Json => write_json(table, config, buf),
            }
        }
        None => {
            let stdout = std::io::stdout().lock();
            match format {
                Format::Csv => write_csv(table, stdout),
                Format::Json => write_json(table, config, stdout),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_keeps_fifteen_significant_digits() {
        let table = Table {
            columns: vec!["x".into(), "note".into()],
            rows: vec![vec![Cell::Num(std::f64::consts::PI), Cell::Text("a, b".into())]],
            warnings: vec![],
        };
        let mut buf = Vec::new();
        write_csv(&table, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "x,note\n3.14159265358979e0,\"a, b\"\n");
        let back: f64 = "3.14159265358979e0".parse().unwrap();
        assert!((back - std::f64::consts::PI).abs() < 1e-14);
    }
}
