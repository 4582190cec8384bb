//! Text formats for truth tables, permutations and element tuples.
//!
//! Truth table:
//!
//! ```text
//! n=<int>
//! <hex string of 2^n / 4 characters>
//! ```
//!
//! read left to right, the most significant bit of each hex digit holding
//! the smallest index. Tables with fewer than four entries use the raw
//! `0`/`1` string on the second line instead.
//!
//! Permutation of GF(2^m):
//!
//! ```text
//! m=<int>
//! <pi(0)> <pi(1)> ... <pi(2^m - 1)>
//! ```
//!
//! with the images written as lowercase hex subfield indices.

use crate::boolfun::{BooleanFunction, MAX_ARITY};
use crate::error::{Error, Result};
use crate::field::FieldElement;

fn header(line: Option<&str>, key: &str) -> Result<u32> {
    let line = line.ok_or_else(|| Error::Parse(format!("missing `{key}=` header")))?;
    let value = line
        .trim()
        .strip_prefix(key)
        .and_then(|r| r.strip_prefix('='))
        .ok_or_else(|| Error::Parse(format!("expected `{key}=<int>`, got {line:?}")))?;
    value
        .trim()
        .parse()
        .map_err(|e| Error::Parse(format!("bad `{key}` value {value:?}: {e}")))
}

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty())
}

pub fn write_truth_table(f: &BooleanFunction) -> String {
    let body = if f.n() < 2 {
        f.to_table_string()
    } else {
        (0..f.len() as u32 / 4)
            .map(|k| {
                let nibble = (0..4).fold(0u32, |acc, j| acc << 1 | u32::from(f.get(4 * k + j)));
                char::from_digit(nibble, 16).unwrap()
            })
            .collect()
    };
    format!("n={}\n{}\n", f.n(), body)
}

pub fn read_truth_table(text: &str) -> Result<BooleanFunction> {
    let mut lines = content_lines(text);
    let n = header(lines.next(), "n")?;
    if n > MAX_ARITY {
        return Err(Error::UnsupportedDegree(n));
    }
    let body = lines.next().unwrap_or("");
    if lines.next().is_some() {
        return Err(Error::Parse("trailing content after table".into()));
    }
    let len = 1usize << n;
    if n < 2 {
        if body.len() != len {
            return Err(Error::Parse(format!(
                "expected {len} binary digits, got {}",
                body.len()
            )));
        }
        return BooleanFunction::from_table_string(body);
    }
    if body.len() != len / 4 {
        return Err(Error::Parse(format!(
            "expected {} hex digits for n={n}, got {}",
            len / 4,
            body.len()
        )));
    }
    let nibbles: Vec<u32> = body
        .chars()
        .map(|c| {
            c.to_digit(16)
                .ok_or_else(|| Error::Parse(format!("bad hex digit {c:?}")))
        })
        .collect::<Result<_>>()?;
    Ok(BooleanFunction::from_fn(n, |x| {
        nibbles[(x / 4) as usize] >> (3 - x % 4) & 1 == 1
    }))
}

pub fn write_permutation(m: u32, table: &[FieldElement]) -> String {
    let images: Vec<String> = table.iter().map(|v| format!("{v:x}")).collect();
    format!("m={}\n{}\n", m, images.join(" "))
}

/// Parses a permutation file; the table is validated as a bijection.
pub fn read_permutation(text: &str) -> Result<(u32, Vec<FieldElement>)> {
    let mut lines = content_lines(text);
    let m = header(lines.next(), "m")?;
    if !(1..=MAX_ARITY).contains(&m) {
        return Err(Error::UnsupportedDegree(m));
    }
    let table: Vec<FieldElement> = lines
        .flat_map(str::split_whitespace)
        .map(|tok| {
            u32::from_str_radix(tok, 16).map_err(|e| Error::Parse(format!("bad image {tok:?}: {e}")))
        })
        .collect::<Result<_>>()?;
    validate_permutation(m, &table)?;
    Ok((m, table))
}

pub fn validate_permutation(m: u32, table: &[FieldElement]) -> Result<()> {
    let size = 1usize << m;
    if table.len() != size {
        return Err(Error::InvalidParameter(format!(
            "permutation of GF(2^{m}) needs {size} images, got {}",
            table.len()
        )));
    }
    let mut seen = vec![false; size];
    for &v in table {
        let slot = seen
            .get_mut(v as usize)
            .ok_or_else(|| Error::InvalidParameter(format!("image {v:x} out of range")))?;
        if std::mem::replace(slot, true) {
            return Err(Error::InvalidParameter(format!("image {v:x} repeated")));
        }
    }
    Ok(())
}

/// One tuple per line, elements as space-separated hex.
pub fn write_tuple(tuple: &[FieldElement]) -> String {
    tuple
        .iter()
        .map(|v| format!("{v:x}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parses a tuple of hex elements separated by commas and/or whitespace.
pub fn read_tuple(s: &str) -> Result<Vec<FieldElement>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            u32::from_str_radix(t.trim_start_matches("0x"), 16)
                .map_err(|e| Error::Parse(format!("bad element {t:?}: {e}")))
        })
        .collect()
}
