//! Array file formats.
//!
//! Two on-disk representations of a real array:
//!
//! - **Text**: an optional header line `# shape: N1,N2,...`, then one row of
//!   comma-separated decimal values per outermost index (1-D writes one value
//!   per line, no header). Values are printed with 17 significant digits so
//!   doubles re-parse losslessly.
//! - **Binary**: magic bytes `RFT1`, a little-endian `u32` rank, `rank`
//!   little-endian `u64` extents, then row-major little-endian IEEE-754
//!   `f64` values.
//!
//! Readers validate that the declared extents match the value count and that
//! every value is finite.

use std::fs;
use std::io::Write as _;
use std::path::Path;

use rft_core::RealArray64;

use crate::CliError;

pub const MAGIC: &[u8; 4] = b"RFT1";

/// On-disk representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Binary,
}

/// Reads an array, sniffing the format from the leading bytes.
pub fn read_array(path: &Path) -> Result<(RealArray64, Format), CliError> {
    let bytes =
        fs::read(path).map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    if bytes.starts_with(MAGIC) {
        Ok((decode_binary(&bytes)?, Format::Binary))
    } else {
        let text = String::from_utf8(bytes)
            .map_err(|_| CliError::Parse(format!("{}: not valid UTF-8 text", path.display())))?;
        Ok((parse_text(&text)?, Format::Text))
    }
}

/// Writes an array in the requested format; `-` writes to standard output.
pub fn write_array(path: &Path, array: &RealArray64, format: Format) -> Result<(), CliError> {
    let bytes = match format {
        Format::Text => render_text(array).into_bytes(),
        Format::Binary => encode_binary(array),
    };
    if path.as_os_str() == "-" {
        let mut out = std::io::stdout().lock();
        out.write_all(&bytes)
            .and_then(|_| out.flush())
            .map_err(|e| CliError::Io(format!("cannot write to stdout: {e}")))
    } else {
        fs::write(path, bytes)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
    }
}

fn build_array(shape: Vec<usize>, data: Vec<f64>) -> Result<RealArray64, CliError> {
    RealArray64::from_vec(shape, data).map_err(|e| match e {
        rft_core::Error::NonFinite { index } => {
            CliError::NonFinite(format!("non-finite value at flat index {index}"))
        }
        other => CliError::Parse(other.to_string()),
    })
}

pub fn decode_binary(bytes: &[u8]) -> Result<RealArray64, CliError> {
    let parse = || -> Option<(Vec<usize>, Vec<f64>, usize)> {
        let mut pos = MAGIC.len();
        let rank = u32::from_le_bytes(bytes.get(pos..pos + 4)?.try_into().ok()?) as usize;
        pos += 4;
        let mut shape = Vec::with_capacity(rank);
        for _ in 0..rank {
            let extent = u64::from_le_bytes(bytes.get(pos..pos + 8)?.try_into().ok()?);
            shape.push(usize::try_from(extent).ok()?);
            pos += 8;
        }
        let total = shape
            .iter()
            .try_fold(1usize, |acc, &n| acc.checked_mul(n))?;
        let mut data = Vec::with_capacity(total);
        for _ in 0..total {
            data.push(f64::from_le_bytes(
                bytes.get(pos..pos + 8)?.try_into().ok()?,
            ));
            pos += 8;
        }
        Some((shape, data, pos))
    };
    let (shape, data, end) =
        parse().ok_or_else(|| CliError::Parse("truncated or oversized binary array".into()))?;
    if end != bytes.len() {
        return Err(CliError::Parse(format!(
            "{} trailing bytes after binary array",
            bytes.len() - end
        )));
    }
    build_array(shape, data)
}

pub fn encode_binary(array: &RealArray64) -> Vec<u8> {
    let mut out = Vec::with_capacity(4 + 4 + array.rank() * 8 + array.len() * 8);
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&(array.rank() as u32).to_le_bytes());
    for &extent in array.shape() {
        out.extend_from_slice(&(extent as u64).to_le_bytes());
    }
    for &value in array.data() {
        out.extend_from_slice(&value.to_le_bytes());
    }
    out
}

pub fn parse_text(text: &str) -> Result<RealArray64, CliError> {
    let mut lines = text.lines().peekable();
    let mut declared_shape: Option<Vec<usize>> = None;

    if let Some(first) = lines.peek() {
        let trimmed = first.trim();
        if let Some(rest) = trimmed.strip_prefix('#') {
            let rest = rest.trim();
            let spec = rest
                .strip_prefix("shape:")
                .ok_or_else(|| CliError::Parse(format!("unrecognized header line `{trimmed}`")))?;
            let shape = spec
                .split(',')
                .map(|tok| tok.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| CliError::Parse(format!("bad shape header `{trimmed}`")))?;
            declared_shape = Some(shape);
            lines.next();
        }
    }

    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (lineno, line) in lines.enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let row = trimmed
            .split(',')
            .map(|tok| tok.trim().parse::<f64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| CliError::Parse(format!("bad value on data line {}", lineno + 1)))?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(CliError::Parse("no data lines".into()));
    }

    let width = rows[0].len();
    if rows.iter().any(|r| r.len() != width) {
        return Err(CliError::Parse("rows have inconsistent widths".into()));
    }
    let data: Vec<f64> = rows.into_iter().flatten().collect();

    let shape = match declared_shape {
        Some(shape) => shape,
        None if width == 1 => vec![data.len()],
        None => vec![data.len() / width, width],
    };
    build_array(shape, data)
}

pub fn render_text(array: &RealArray64) -> String {
    let mut out = String::new();
    if array.rank() == 1 {
        for v in array.data() {
            out.push_str(&format!("{v:.16e}\n"));
        }
        return out;
    }
    let shape = array.shape();
    out.push_str("# shape: ");
    out.push_str(
        &shape
            .iter()
            .map(|n| n.to_string())
            .collect::<Vec<_>>()
            .join(","),
    );
    out.push('\n');
    let row_len = array.len() / shape[0];
    for row in array.data().chunks(row_len) {
        let line = row
            .iter()
            .map(|v| format!("{v:.16e}"))
            .collect::<Vec<_>>()
            .join(",");
        out.push_str(&line);
        out.push('\n');
    }
    out
}
