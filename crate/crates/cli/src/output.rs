use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use clap::ValueEnum;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Header row, then one row per record.
    Csv,
    /// One JSON object per line.
    Json,
}

pub fn open(out: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

pub fn write_records<T: Serialize>(w: &mut dyn Write, format: Format, records: &[T]) -> io::Result<()> {
    match format {
        Format::Csv => {
            let mut csv = csv::Writer::from_writer(&mut *w);
            for r in records {
                csv.serialize(r)?;
            }
            csv.flush()?;
        }
        Format::Json => {
            for r in records {
                serde_json::to_writer(&mut *w, r)?;
                writeln!(w)?;
            }
        }
    }
    w.flush()
}

pub fn emit<T: Serialize>(out: Option<&Path>, format: Format, records: &[T]) -> io::Result<()> {
    let mut w = open(out)?;
    write_records(&mut *w, format, records)
}
