//! Text grid and ASCII PBM (P1) encodings of 0/1 and ±1 matrices.
//!
//! * `grid01`: one line per row of `0`/`1` characters.
//! * `gridpm`: one line per row of `+`/`-` characters.
//! * PBM P1: black pixels (bit 1) are entries equal to 1; white pixels
//!   (bit 0) are 0 in 0/1 mode and -1 in ±1 mode.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::binary::{Matrix01, MatrixPM1};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PbmMode {
    ZeroOne,
    PlusMinus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Format {
    Grid01,
    GridPm,
    Pbm(PbmMode),
}

impl Format {
    pub const NAMES: [&'static str; 4] = ["grid01", "gridpm", "pbm", "pbm-pm"];

    pub fn name(self) -> &'static str {
        match self {
            Format::Grid01 => "grid01",
            Format::GridPm => "gridpm",
            Format::Pbm(PbmMode::ZeroOne) => "pbm",
            Format::Pbm(PbmMode::PlusMinus) => "pbm-pm",
        }
    }

    /// Whether the format carries ±1 matrices.
    pub fn is_pm1(self) -> bool {
        matches!(self, Format::GridPm | Format::Pbm(PbmMode::PlusMinus))
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "grid01" => Ok(Format::Grid01),
            "gridpm" => Ok(Format::GridPm),
            "pbm" | "pbm01" => Ok(Format::Pbm(PbmMode::ZeroOne)),
            "pbm-pm" | "pbmpm" => Ok(Format::Pbm(PbmMode::PlusMinus)),
            other => Err(format!(
                "unknown format '{other}' (expected one of {})",
                Format::NAMES.join(", ")
            )),
        }
    }
}

/// Matrix read from a file, tagged by its entry alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedMatrix {
    ZeroOne(Matrix01),
    PlusMinus(MatrixPM1),
}

impl ParsedMatrix {
    pub fn order(&self) -> usize {
        match self {
            ParsedMatrix::ZeroOne(m) => m.order(),
            ParsedMatrix::PlusMinus(m) => m.order(),
        }
    }
}

/// Positions are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("matrix is not square: {rows} rows of width {cols}")]
    NonSquare { rows: usize, cols: usize },

    #[error("unexpected symbol {symbol:?} at line {line}, column {col}")]
    BadSymbol { line: usize, col: usize, symbol: char },

    #[error("cannot write a {matrix} matrix as {format}")]
    WrongKind {
        format: &'static str,
        matrix: &'static str,
    },
}

pub fn parse_matrix(bytes: &[u8], format: Format) -> Result<ParsedMatrix, FormatError> {
    let text = std::str::from_utf8(bytes).map_err(|e| {
        let (line, col) = position_of(bytes, e.valid_up_to());
        FormatError::Parse {
            line,
            col,
            msg: "input is not valid UTF-8".into(),
        }
    })?;
    match format {
        Format::Grid01 => {
            let (n, cells) = parse_grid(text, |c| match c {
                '0' => Some(0),
                '1' => Some(1),
                _ => None,
            })?;
            let entries = cells.into_iter().map(|v| v as u8).collect();
            Ok(ParsedMatrix::ZeroOne(
                Matrix01::new(n, entries).expect("validated grid"),
            ))
        }
        Format::GridPm => {
            let (n, cells) = parse_grid(text, |c| match c {
                '+' => Some(1),
                '-' => Some(-1),
                _ => None,
            })?;
            Ok(ParsedMatrix::PlusMinus(
                MatrixPM1::new(n, cells).expect("validated grid"),
            ))
        }
        Format::Pbm(mode) => {
            let (n, bits) = parse_pbm(text)?;
            Ok(match mode {
                PbmMode::ZeroOne => {
                    ParsedMatrix::ZeroOne(Matrix01::new(n, bits).expect("validated bits"))
                }
                PbmMode::PlusMinus => {
                    let entries = bits.into_iter().map(|b| if b == 1 { 1 } else { -1 }).collect();
                    ParsedMatrix::PlusMinus(MatrixPM1::new(n, entries).expect("validated bits"))
                }
            })
        }
    }
}

fn position_of(bytes: &[u8], offset: usize) -> (usize, usize) {
    let before = &bytes[..offset];
    let line = before.iter().filter(|&&b| b == b'\n').count() + 1;
    let col = offset - before.iter().rposition(|&b| b == b'\n').map_or(0, |p| p + 1) + 1;
    (line, col)
}

fn parse_grid(
    text: &str,
    symbol: impl Fn(char) -> Option<i8>,
) -> Result<(usize, Vec<i8>), FormatError> {
    let mut lines: Vec<&str> = text
        .split('\n')
        .map(|l| l.strip_suffix('\r').unwrap_or(l))
        .collect();
    while lines.last().is_some_and(|l| l.trim().is_empty()) {
        lines.pop();
    }
    if lines.is_empty() {
        return Err(FormatError::Parse {
            line: 1,
            col: 1,
            msg: "empty matrix".into(),
        });
    }
    let width = lines[0].chars().count();
    let mut cells = Vec::with_capacity(width * lines.len());
    for (i, line) in lines.iter().enumerate() {
        let mut count = 0;
        for (j, c) in line.chars().enumerate() {
            match symbol(c) {
                Some(v) => cells.push(v),
                None => {
                    return Err(FormatError::BadSymbol {
                        line: i + 1,
                        col: j + 1,
                        symbol: c,
                    })
                }
            }
            count += 1;
        }
        if count != width {
            return Err(FormatError::Parse {
                line: i + 1,
                col: count + 1,
                msg: format!("ragged row: expected {width} symbols, found {count}"),
            });
        }
    }
    if width != lines.len() {
        return Err(FormatError::NonSquare {
            rows: lines.len(),
            cols: width,
        });
    }
    Ok((width, cells))
}

/// Character cursor tracking 1-based line/column.
struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            chars: text.chars().peekable(),
            line: 1,
            col: 1,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    /// Skips whitespace and `#` comments.
    fn skip_blank(&mut self) {
        while let Some(&c) = self.chars.peek() {
            if c == '#' {
                while let Some(c) = self.bump() {
                    if c == '\n' {
                        break;
                    }
                }
            } else if c.is_ascii_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn error(&self, msg: impl Into<String>) -> FormatError {
        FormatError::Parse {
            line: self.line,
            col: self.col,
            msg: msg.into(),
        }
    }

    fn number(&mut self, what: &str) -> Result<usize, FormatError> {
        self.skip_blank();
        let (line, col) = (self.line, self.col);
        let mut digits = String::new();
        while let Some(&c) = self.chars.peek() {
            if c.is_ascii_digit() {
                digits.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if let Some(&c) = self.chars.peek() {
            if !c.is_ascii_whitespace() && c != '#' {
                return Err(FormatError::BadSymbol {
                    line: self.line,
                    col: self.col,
                    symbol: c,
                });
            }
        }
        digits.parse().map_err(|_| FormatError::Parse {
            line,
            col,
            msg: format!("expected {what}"),
        })
    }
}

fn parse_pbm(text: &str) -> Result<(usize, Vec<u8>), FormatError> {
    let mut cur = Cursor::new(text);
    cur.skip_blank();
    if cur.bump() != Some('P') || cur.bump() != Some('1') {
        return Err(FormatError::Parse {
            line: 1,
            col: 1,
            msg: "expected PBM magic number P1".into(),
        });
    }
    if cur.chars.peek().is_some_and(|c| !c.is_ascii_whitespace() && *c != '#') {
        return Err(cur.error("expected whitespace after P1"));
    }
    let width = cur.number("image width")?;
    let height = cur.number("image height")?;
    if width == 0 || height == 0 {
        return Err(cur.error("image dimensions must be positive"));
    }
    if width != height {
        return Err(FormatError::NonSquare {
            rows: height,
            cols: width,
        });
    }
    let mut bits = Vec::with_capacity(width * height);
    while bits.len() < width * height {
        cur.skip_blank();
        let (line, col) = (cur.line, cur.col);
        match cur.bump() {
            Some('0') => bits.push(0),
            Some('1') => bits.push(1),
            Some(symbol) => return Err(FormatError::BadSymbol { line, col, symbol }),
            None => {
                return Err(cur.error(format!(
                    "expected {} pixels, found {}",
                    width * height,
                    bits.len()
                )))
            }
        }
    }
    cur.skip_blank();
    if let Some(symbol) = cur.chars.peek().copied() {
        return Err(FormatError::BadSymbol {
            line: cur.line,
            col: cur.col,
            symbol,
        });
    }
    Ok((width, bits))
}

fn write_grid(n: usize, symbol: impl Fn(usize, usize) -> char) -> Vec<u8> {
    let mut out = String::with_capacity(n * (n + 1));
    for i in 0..n {
        for j in 0..n {
            out.push(symbol(i, j));
        }
        out.push('\n');
    }
    out.into_bytes()
}

/// ASCII PBM with one text line per matrix row.
pub fn export_pbm(n: usize, bit: impl Fn(usize, usize) -> bool) -> Vec<u8> {
    let mut out = format!("P1\n{n} {n}\n");
    for i in 0..n {
        for j in 0..n {
            if j > 0 {
                out.push(' ');
            }
            out.push(if bit(i, j) { '1' } else { '0' });
        }
        out.push('\n');
    }
    out.into_bytes()
}

pub fn export_pbm_01(m: &Matrix01) -> Vec<u8> {
    export_pbm(m.order(), |i, j| m.get(i, j) == 1)
}

pub fn export_pbm_pm1(m: &MatrixPM1) -> Vec<u8> {
    export_pbm(m.order(), |i, j| m.get(i, j) == 1)
}

pub fn serialize_matrix(m: &ParsedMatrix, format: Format) -> Result<Vec<u8>, FormatError> {
    match (m, format) {
        (ParsedMatrix::ZeroOne(m), Format::Grid01) => Ok(write_grid(m.order(), |i, j| {
            if m.get(i, j) == 1 {
                '1'
            } else {
                '0'
            }
        })),
        (ParsedMatrix::PlusMinus(m), Format::GridPm) => Ok(write_grid(m.order(), |i, j| {
            if m.get(i, j) == 1 {
                '+'
            } else {
                '-'
            }
        })),
        (ParsedMatrix::ZeroOne(m), Format::Pbm(PbmMode::ZeroOne)) => Ok(export_pbm_01(m)),
        (ParsedMatrix::PlusMinus(m), Format::Pbm(PbmMode::PlusMinus)) => Ok(export_pbm_pm1(m)),
        (ParsedMatrix::ZeroOne(_), f) => Err(FormatError::WrongKind {
            format: f.name(),
            matrix: "0/1",
        }),
        (ParsedMatrix::PlusMinus(_), f) => Err(FormatError::WrongKind {
            format: f.name(),
            matrix: "±1",
        }),
    }
}
