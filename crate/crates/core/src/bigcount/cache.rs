//! Text cache for triangle rows.
//!
//! One record per line: `family,n,k_min,v_1,...,v_m` where `family` is one
//! of `s`, `sstar`, `t` and every value is a base-10 integer without sign or
//! leading zeros. Records are newline-terminated. Writing a parsed file
//! reproduces it byte for byte.

use std::fs;
use std::path::Path;

use num_bigint::BigUint;

use super::triangle::{CountTriangle, Row, TriangleFamily};
use crate::{Error, Result};

/// A single parsed record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CacheRecord {
    pub family: TriangleFamily,
    pub row: Row,
}

pub fn format_record(family: TriangleFamily, row: &Row) -> String {
    let mut line = format!("{},{},{}", family.tag(), row.n, row.k_min);
    for v in &row.values {
        line.push(',');
        line.push_str(&v.to_str_radix(10));
    }
    line
}

fn parse_u32(field: &str, what: &str, line: usize) -> Result<u32> {
    if field.is_empty() || !field.bytes().all(|b| b.is_ascii_digit()) || (field.len() > 1 && field.starts_with('0')) {
        return Err(Error::Cache { line, message: format!("malformed {what} {field:?}") });
    }
    field.parse().map_err(|_| Error::Cache { line, message: format!("{what} {field:?} out of range") })
}

fn parse_value(field: &str, line: usize) -> Result<BigUint> {
    let canonical =
        !field.is_empty() && field.bytes().all(|b| b.is_ascii_digit()) && !(field.len() > 1 && field.starts_with('0'));
    if !canonical {
        return Err(Error::Cache { line, message: format!("malformed value {field:?}") });
    }
    BigUint::parse_bytes(field.as_bytes(), 10)
        .ok_or_else(|| Error::Cache { line, message: format!("malformed value {field:?}") })
}

/// Parses one record (without its newline). `line` is used for messages.
///
/// The record must describe the family's exact support for row `n`, with
/// every stored value positive.
pub fn parse_record(text: &str, line: usize) -> Result<CacheRecord> {
    let mut fields = text.split(',');
    let tag = fields.next().unwrap_or_default();
    let family = TriangleFamily::from_tag(tag)
        .ok_or_else(|| Error::Cache { line, message: format!("unknown family {tag:?}") })?;
    let n = parse_u32(fields.next().unwrap_or_default(), "row index", line)?;
    let k_min = parse_u32(fields.next().unwrap_or_default(), "k_min", line)?;
    if n < family.first_row() {
        return Err(Error::Cache { line, message: format!("row {n} precedes the first {family} row") });
    }
    let (support_min, support_max) = family.support(n);
    if k_min != support_min {
        return Err(Error::Cache { line, message: format!("k_min {k_min} differs from support start {support_min}") });
    }
    let expected = (support_max + 1).saturating_sub(support_min) as usize;
    let mut values = Vec::with_capacity(expected.min(4096));
    for field in fields {
        if values.len() == expected {
            return Err(Error::Cache { line, message: format!("more than {expected} values") });
        }
        let v = parse_value(field, line)?;
        if v == BigUint::default() {
            return Err(Error::Cache { line, message: "zero inside the support".into() });
        }
        values.push(v);
    }
    if values.len() != expected {
        return Err(Error::Cache { line, message: format!("expected {expected} values, found {}", values.len()) });
    }
    Ok(CacheRecord { family, row: Row { n, k_min, values } })
}

/// Parses a whole cache file. Every line, including the last, must end in
/// `\n`; empty input is an empty cache.
pub fn parse_cache(text: &str) -> Result<Vec<CacheRecord>> {
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let Some(body) = text.strip_suffix('\n') else {
        return Err(Error::Cache { line: text.lines().count(), message: "missing final newline".into() });
    };
    body.split('\n').enumerate().map(|(i, line)| parse_record(line, i + 1)).collect()
}

pub fn write_cache(records: &[CacheRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&format_record(r.family, &r.row));
        out.push('\n');
    }
    out
}

pub fn triangle_records(triangle: &CountTriangle) -> Vec<CacheRecord> {
    triangle.rows().iter().map(|row| CacheRecord { family: triangle.family(), row: row.clone() }).collect()
}

/// Collects the rows of `family` from parsed records into a triangle. Other
/// families are ignored; the selected rows must form the contiguous prefix.
pub fn triangle_from_records(family: TriangleFamily, records: &[CacheRecord]) -> Result<CountTriangle> {
    let rows = records.iter().filter(|r| r.family == family).map(|r| r.row.clone()).collect();
    CountTriangle::from_rows(family, rows)
}

/// Loads `family` from a cache file; a missing file yields an empty triangle.
pub fn load_triangle(path: &Path, family: TriangleFamily) -> Result<CountTriangle> {
    match fs::read_to_string(path) {
        Ok(text) => triangle_from_records(family, &parse_cache(&text)?),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(CountTriangle::new(family)),
        Err(e) => Err(e.into()),
    }
}

/// Writes `triangle` into the cache file, preserving records of the other
/// families already stored there.
pub fn save_triangle(path: &Path, triangle: &CountTriangle) -> Result<()> {
    let mut records: Vec<CacheRecord> = match fs::read_to_string(path) {
        Ok(text) => parse_cache(&text)?,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Vec::new(),
        Err(e) => return Err(e.into()),
    };
    records.retain(|r| r.family != triangle.family());
    records.extend(triangle_records(triangle));
    records.sort_by_key(|r| (r.family.tag(), r.row.n));
    fs::write(path, write_cache(&records))?;
    Ok(())
}

/// Recomputes every cached row from the recurrence and reports the first
/// disagreeing row, if any.
pub fn first_mismatch(triangle: &CountTriangle) -> Option<u32> {
    triangle
        .rows()
        .iter()
        .zip(triangle.family().rows())
        .find(|(cached, fresh)| *cached != fresh)
        .map(|(cached, _)| cached.n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn record_format() {
        let row = TriangleFamily::StirlingStar.row_at(5).unwrap();
        assert_eq!(format_record(TriangleFamily::StirlingStar, &row), "sstar,5,1,1,10");
        let empty = TriangleFamily::StirlingStar.row_at(1).unwrap();
        assert_eq!(format_record(TriangleFamily::StirlingStar, &empty), "sstar,1,1");
    }

    #[test]
    fn rejects_malformed_records() {
        for bad in [
            "",
            "x,3,1,1,3,1",
            "s,3,1,1,3",
            "s,3,1,1,3,1,1",
            "s,3,0,1,3,1",
            "s,3,1,1,03,1",
            "s,3,1,1,+3,1",
            "s,3,1,1,,1",
            "s,3,1,1,0,1",
            "s,0,1",
            "t,1,1",
            "s,99999999999,1",
            "s, 3,1,1,3,1",
        ] {
            assert!(parse_record(bad, 1).is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn file_needs_trailing_newline() {
        assert!(parse_cache("s,1,1,1").is_err());
        assert_eq!(parse_cache("s,1,1,1\n").unwrap().len(), 1);
        assert!(parse_cache("s,1,1,1\n\n").is_err());
    }

    #[test]
    fn cache_file_roundtrip_on_disk() {
        let dir = std::env::temp_dir().join(format!("phylocount-cache-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("rows.csv");
        let _ = fs::remove_file(&path);

        let mut s = CountTriangle::new(TriangleFamily::StirlingS);
        s.extend_to(30);
        let mut t = CountTriangle::new(TriangleFamily::Ttriangle);
        t.extend_to(20);
        save_triangle(&path, &s).unwrap();
        save_triangle(&path, &t).unwrap();

        let text = fs::read_to_string(&path).unwrap();
        assert_eq!(write_cache(&parse_cache(&text).unwrap()), text);

        let loaded = load_triangle(&path, TriangleFamily::StirlingS).unwrap();
        assert_eq!(loaded.rows(), s.rows());
        assert_eq!(first_mismatch(&loaded), None);
        let loaded_t = load_triangle(&path, TriangleFamily::Ttriangle).unwrap();
        assert_eq!(loaded_t.rows(), t.rows());
        let missing = load_triangle(&path, TriangleFamily::StirlingStar).unwrap();
        assert_eq!(missing.max_row(), None);
        fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn tampered_value_is_detected() {
        let mut tri = CountTriangle::new(TriangleFamily::StirlingS);
        tri.extend_to(6);
        let text = write_cache(&triangle_records(&tri)).replace("s,4,1,1,7,6,1", "s,4,1,1,8,6,1");
        let loaded = triangle_from_records(TriangleFamily::StirlingS, &parse_cache(&text).unwrap()).unwrap();
        assert_eq!(first_mismatch(&loaded), Some(4));
    }

    proptest! {
        #[test]
        fn write_then_parse_is_identity(family_idx in 0usize..3, rows in 1u32..25) {
            let family = TriangleFamily::ALL[family_idx];
            let mut tri = CountTriangle::new(family);
            tri.extend_to(family.first_row() + rows - 1);
            let records = triangle_records(&tri);
            let text = write_cache(&records);
            prop_assert_eq!(parse_cache(&text).unwrap(), records);
        }

        #[test]
        fn parser_never_panics(s in "[st,0-9a-z\n]{0,64}") {
            let _ = parse_cache(&s);
        }
    }
}
