use std::io::Write;

use serde::Serialize;

use crate::CmdResult;

pub fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> CmdResult {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

pub fn csv_writer(out: &mut dyn Write) -> csv::Writer<&mut dyn Write> {
    csv::Writer::from_writer(out)
}

/// `1,10,...` for a list of big integers.
pub fn joined<T: ToString>(values: &[T]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}
