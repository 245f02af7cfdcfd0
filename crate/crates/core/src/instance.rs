//! TSPLIB instances with the EUC_2D metric.
//!
//! Distances are served from a precomputed `n x n` table for small instances
//! and recomputed from coordinates above [`MATRIX_LIMIT`] cities, so memory
//! stays linear in `n` for the large instances.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::io::BufRead;
use std::path::Path;

use crate::error::{Error, ParseError, ParseErrorKind};

/// Largest instance for which a full distance table is kept in memory.
pub const MATRIX_LIMIT: usize = 5_000;

/// A symmetric TSP instance over 2D points.
#[derive(Debug, Clone)]
pub struct Instance {
    name: String,
    coords: Vec<(f64, f64)>,
    optimum: Option<u64>,
    matrix: Option<Vec<u32>>,
}

/// TSPLIB `nint` of the Euclidean distance, ties rounded up.
#[inline]
pub fn euc_2d(a: (f64, f64), b: (f64, f64)) -> u32 {
    let dx = a.0 - b.0;
    let dy = a.1 - b.1;
    ((dx * dx + dy * dy).sqrt() + 0.5).floor() as u32
}

impl Instance {
    /// Builds an instance from coordinates. Needs at least three finite points.
    pub fn new(name: impl Into<String>, coords: Vec<(f64, f64)>) -> Result<Self, Error> {
        if coords.len() < 3 {
            return Err(Error::InvalidInstance(format!(
                "need at least 3 cities, got {}",
                coords.len()
            )));
        }
        if let Some(i) = coords
            .iter()
            .position(|&(x, y)| !x.is_finite() || !y.is_finite())
        {
            return Err(Error::InvalidInstance(format!(
                "city {i} has a non-finite coordinate"
            )));
        }
        let n = coords.len();
        let matrix = (n <= MATRIX_LIMIT).then(|| {
            let mut m = vec![0u32; n * n];
            for i in 0..n {
                for j in (i + 1)..n {
                    let d = euc_2d(coords[i], coords[j]);
                    m[i * n + j] = d;
                    m[j * n + i] = d;
                }
            }
            m
        });
        Ok(Self {
            name: name.into(),
            coords,
            optimum: None,
            matrix,
        })
    }

    /// Attaches a known optimal (or best known) tour length.
    pub fn with_optimum(mut self, optimum: u64) -> Result<Self, Error> {
        if optimum == 0 {
            return Err(Error::InvalidInstance("optimum must be positive".into()));
        }
        self.optimum = Some(optimum);
        Ok(self)
    }

    pub fn set_optimum(&mut self, optimum: Option<u64>) {
        self.optimum = optimum.filter(|&o| o > 0);
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[(f64, f64)] {
        &self.coords
    }

    pub fn optimum(&self) -> Option<u64> {
        self.optimum
    }

    /// Whether distances come from a precomputed table.
    pub fn has_matrix(&self) -> bool {
        self.matrix.is_some()
    }

    /// EUC_2D distance between cities `i` and `j`.
    #[inline]
    pub fn dist(&self, i: usize, j: usize) -> u32 {
        match &self.matrix {
            Some(m) => m[i * self.coords.len() + j],
            None => euc_2d(self.coords[i], self.coords[j]),
        }
    }

    /// Row `i` of the distance table, when one exists.
    #[inline]
    pub fn matrix_row(&self, i: usize) -> Option<&[u32]> {
        let n = self.coords.len();
        self.matrix.as_deref().map(|m| &m[i * n..(i + 1) * n])
    }

    /// Reads a TSPLIB file from disk.
    pub fn from_path(path: impl AsRef<Path>) -> Result<Self, Error> {
        let path = path.as_ref();
        let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
        parse_tsplib(std::io::BufReader::new(file))
    }

    /// Renders the instance back into TSPLIB text.
    pub fn to_tsplib(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "NAME : {}", self.name);
        let _ = writeln!(out, "TYPE : TSP");
        let _ = writeln!(out, "DIMENSION : {}", self.len());
        let _ = writeln!(out, "EDGE_WEIGHT_TYPE : EUC_2D");
        let _ = writeln!(out, "NODE_COORD_SECTION");
        for (i, (x, y)) in self.coords.iter().enumerate() {
            let _ = writeln!(out, "{} {:?} {:?}", i + 1, x, y);
        }
        out.push_str("EOF\n");
        out
    }
}

fn parse_err(line: usize, kind: ParseErrorKind) -> Error {
    Error::Parse(ParseError { line, kind })
}

/// Parses a TSPLIB `EUC_2D` instance. Node ids are mapped to 0-based indices
/// in file order.
pub fn parse_tsplib<R: BufRead>(reader: R) -> Result<Instance, Error> {
    let mut name = String::from("unnamed");
    let mut dimension: Option<(usize, usize)> = None;
    let mut weight_type: Option<(String, usize)> = None;
    let mut coords: Vec<(f64, f64)> = Vec::new();
    let mut in_coords = false;
    let mut saw_coord_section = false;
    let mut last_line = 0;

    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let line = line.map_err(|e| Error::Io {
            path: None,
            source: e,
        })?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed == "EOF" {
            break;
        }

        if in_coords {
            let first = trimmed.split_whitespace().next().unwrap_or("");
            if first.parse::<u64>().is_err() && first.chars().all(|c| c.is_ascii_uppercase() || c == '_') {
                // another section begins (e.g. DISPLAY_DATA_SECTION)
                in_coords = false;
            } else {
                let mut parts = trimmed.split_whitespace();
                let _id = parts.next();
                let x = parts.next();
                let y = parts.next();
                let (Some(x), Some(y)) = (x, y) else {
                    return Err(parse_err(lineno, ParseErrorKind::MalformedCoordinate));
                };
                let x: f64 = x
                    .parse()
                    .map_err(|_| parse_err(lineno, ParseErrorKind::NonNumericCoordinate(x.into())))?;
                let y: f64 = y
                    .parse()
                    .map_err(|_| parse_err(lineno, ParseErrorKind::NonNumericCoordinate(y.into())))?;
                if !x.is_finite() || !y.is_finite() {
                    return Err(parse_err(lineno, ParseErrorKind::NonNumericCoordinate(trimmed.into())));
                }
                coords.push((x, y));
                continue;
            }
        }

        if trimmed.starts_with("NODE_COORD_SECTION") {
            in_coords = true;
            saw_coord_section = true;
            continue;
        }
        if trimmed.ends_with("_SECTION") {
            return Err(parse_err(
                lineno,
                ParseErrorKind::UnsupportedSection(trimmed.to_string()),
            ));
        }

        let Some((key, value)) = trimmed.split_once(':') else {
            return Err(parse_err(lineno, ParseErrorKind::MalformedHeader(trimmed.to_string())));
        };
        let key = key.trim();
        let value = value.trim();
        match key {
            "NAME" => name = value.to_string(),
            "DIMENSION" => {
                let d = value
                    .parse::<usize>()
                    .map_err(|_| parse_err(lineno, ParseErrorKind::MalformedHeader(trimmed.to_string())))?;
                dimension = Some((d, lineno));
            }
            "EDGE_WEIGHT_TYPE" => weight_type = Some((value.to_string(), lineno)),
            "TYPE" => {
                if value != "TSP" {
                    return Err(parse_err(lineno, ParseErrorKind::UnsupportedType(value.to_string())));
                }
            }
            _ => {}
        }
    }

    let Some((dim, dim_line)) = dimension else {
        return Err(parse_err(last_line, ParseErrorKind::MissingField("DIMENSION")));
    };
    match weight_type {
        None => {
            return Err(parse_err(last_line, ParseErrorKind::MissingField("EDGE_WEIGHT_TYPE")))
        }
        Some((ref t, line)) if t != "EUC_2D" => {
            return Err(parse_err(line, ParseErrorKind::UnsupportedEdgeWeight(t.clone())))
        }
        _ => {}
    }
    if !saw_coord_section {
        return Err(parse_err(last_line, ParseErrorKind::MissingField("NODE_COORD_SECTION")));
    }
    if coords.len() != dim {
        return Err(parse_err(
            dim_line,
            ParseErrorKind::DimensionMismatch {
                declared: dim,
                found: coords.len(),
            },
        ));
    }
    Instance::new(name, coords)
}

/// Known optima keyed by instance name, read from `name length` lines.
/// Blank lines and `#` comments are ignored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Optima(HashMap<String, u64>);

impl Optima {
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut map = HashMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let (Some(name), Some(value), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(parse_err(idx + 1, ParseErrorKind::MalformedHeader(line.to_string())));
            };
            let value: u64 = value
                .parse()
                .ok()
                .filter(|&v| v > 0)
                .ok_or_else(|| parse_err(idx + 1, ParseErrorKind::MalformedHeader(line.to_string())))?;
            map.insert(name.to_string(), value);
        }
        Ok(Self(map))
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self, Error> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text)
    }

    pub fn get(&self, name: &str) -> Option<u64> {
        self.0.get(name).copied()
    }

    pub fn insert(&mut self, name: impl Into<String>, value: u64) {
        self.0.insert(name.into(), value);
    }
}
