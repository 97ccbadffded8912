use serde::Serialize;
use serde_json::Value;

use qsync::qsc::Certificate;

use crate::args::Format;
use crate::CliError;

/// Flat rows for `--format csv`.
#[derive(Debug, Default)]
pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&'static str]) -> Table {
        Table {
            headers: headers.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }
}

/// What a subcommand produced.
pub struct Output {
    pub meta: Value,
    pub result: Value,
    pub certificates: Vec<Certificate>,
    pub table: Table,
    /// Exit status when the command itself succeeded.
    pub status: i32,
}

#[derive(Serialize)]
struct Envelope<'a> {
    meta: &'a Value,
    result: &'a Value,
    certificates: &'a [Certificate],
}

pub fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

pub fn render(out: &Output, format: Format) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Json => {
            let env = Envelope {
                meta: &out.meta,
                result: &out.result,
                certificates: &out.certificates,
            };
            let mut bytes = serde_json::to_vec_pretty(&env).expect("envelope serializes");
            bytes.push(b'\n');
            Ok(bytes)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| CliError::Io(e.to_string());
            w.write_record(&out.table.headers).map_err(io)?;
            for row in &out.table.rows {
                w.write_record(row).map_err(io)?;
            }
            w.into_inner().map_err(|e| CliError::Io(e.to_string()))
        }
    }
}

pub fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
