//! The RMAP/1 line-oriented text format.
//!
//! A plain rooted map:
//!
//! ```text
//! rmap 1
//! m 3
//! sigma 6 3 2 5 4 1
//! root 2
//! ```
//!
//! `sigma` and `root` are omitted for the vertex-map. Decorated records add
//! optional lines, always in this order:
//!
//! - `orient <m chars of +->` -- per-edge direction, `+` meaning the edge
//!   runs from the vertex of dart `2k-1` to the vertex of dart `2k`;
//! - `poles <s-dart> <t-dart>` -- the outer-boundary darts at the source
//!   and the sink of a plane bipolar orientation (this also pins the outer
//!   face of rootless carriers);
//! - `color <m chars of r,b,x>` -- per-edge color of a transversal
//!   structure, `x` marking the uncolored outer quadrangle.
//!
//! A record with `color` is a transversal structure (root required), one
//! with `poles` but no `color` is a bipolar orientation (root optional),
//! anything else is a plain map. Streams separate records by blank lines.

use crate::bipolar::{BipolarError, BipolarOrientation};
use crate::map::{Dart, MapError, RootedMap};
use crate::transversal::{EdgeColor, TransversalError, TransversalStructure};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodecError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Bipolar(#[from] BipolarError),
    #[error(transparent)]
    Transversal(#[from] TransversalError),
}

/// Any of the three structures carried by the text format.
#[derive(Debug, Clone)]
pub enum Record {
    Map(RootedMap),
    Bipolar(BipolarOrientation),
    Transversal(TransversalStructure),
}

impl Record {
    pub fn kind(&self) -> &'static str {
        match self {
            Record::Map(_) => "rooted map",
            Record::Bipolar(_) => "plane bipolar orientation",
            Record::Transversal(_) => "transversal structure",
        }
    }
}

fn sigma_line(map: &RootedMap) -> String {
    let mut s = String::from("sigma");
    for d in map.darts() {
        s.push(' ');
        s.push_str(&map.sigma(d).to_string());
    }
    s
}

/// Encodes a plain rooted map.
pub fn encode_map(map: &RootedMap) -> String {
    let mut out = format!("rmap 1\nm {}\n", map.n_edges());
    if map.n_edges() > 0 {
        out.push_str(&sigma_line(map));
        out.push('\n');
        if let Some(r) = map.root() {
            out.push_str(&format!("root {r}\n"));
        }
    }
    out
}

/// Encodes a plane bipolar orientation (`orient` + `poles` decorations).
pub fn encode_bipolar(o: &BipolarOrientation) -> String {
    let mut out = encode_map(o.map());
    let orient: String = o.orient().iter().map(|&b| if b { '+' } else { '-' }).collect();
    out.push_str(&format!("orient {orient}\n"));
    out.push_str(&format!("poles {} {}\n", o.s_dart(), o.t_dart()));
    out
}

/// Encodes a transversal structure (`orient` + `color` decorations).
pub fn encode_transversal(x: &TransversalStructure) -> String {
    let mut out = encode_map(x.tri());
    let orient: String = x.orient().iter().map(|&b| if b { '+' } else { '-' }).collect();
    out.push_str(&format!("orient {orient}\n"));
    let color: String = x
        .colors()
        .iter()
        .map(|c| match c {
            None => 'x',
            Some(EdgeColor::Red) => 'r',
            Some(EdgeColor::Blue) => 'b',
        })
        .collect();
    out.push_str(&format!("color {color}\n"));
    out
}

pub fn encode(record: &Record) -> String {
    match record {
        Record::Map(m) => encode_map(m),
        Record::Bipolar(o) => encode_bipolar(o),
        Record::Transversal(x) => encode_transversal(x),
    }
}

struct Lines<'a> {
    lines: Vec<&'a str>,
    at: usize,
}

impl<'a> Lines<'a> {
    fn peek_key(&self) -> Option<&'a str> {
        self.lines.get(self.at).map(|l| l.split_whitespace().next().unwrap_or(""))
    }

    fn take(&mut self, key: &str) -> Result<Vec<&'a str>, CodecError> {
        let line = self
            .lines
            .get(self.at)
            .ok_or_else(|| CodecError::Parse(format!("missing `{key}` line")))?;
        let mut parts = line.split_whitespace();
        let k = parts.next().unwrap_or("");
        if k != key {
            return Err(CodecError::Parse(format!("expected `{key}`, found `{k}`")));
        }
        self.at += 1;
        Ok(parts.collect())
    }

    fn take_optional(&mut self, key: &str) -> Option<Vec<&'a str>> {
        if self.peek_key() == Some(key) {
            Some(self.take(key).unwrap())
        } else {
            None
        }
    }
}

fn parse_u32(s: &str, what: &str) -> Result<u32, CodecError> {
    s.parse::<u32>()
        .map_err(|_| CodecError::Parse(format!("bad {what}: `{s}`")))
}

/// Decodes one record. The structure kind is inferred from the decoration
/// lines present; every structure is fully validated.
pub fn decode(text: &str) -> Result<Record, CodecError> {
    let mut lines = Lines {
        lines: text.lines().map(str::trim).filter(|l| !l.is_empty()).collect(),
        at: 0,
    };
    let version = lines.take("rmap")?;
    if version != ["1"] {
        return Err(CodecError::Parse("unsupported rmap version".into()));
    }
    let m_parts = lines.take("m")?;
    if m_parts.len() != 1 {
        return Err(CodecError::Parse("bad `m` line".into()));
    }
    let m = parse_u32(m_parts[0], "edge count")?;
    if m == 0 {
        if lines.at != lines.lines.len() {
            return Err(CodecError::Parse("vertex-map record has extra lines".into()));
        }
        return Ok(Record::Map(RootedMap::vertex_map()));
    }
    let sigma_parts = lines.take("sigma")?;
    if sigma_parts.len() != 2 * m as usize {
        return Err(MapError::NotAPermutation.into());
    }
    let sigma: Vec<Dart> = sigma_parts
        .iter()
        .map(|s| parse_u32(s, "sigma entry"))
        .collect::<Result<_, _>>()?;
    let root = match lines.take_optional("root") {
        Some(parts) if parts.len() == 1 => Some(parse_u32(parts[0], "root dart")?),
        Some(_) => return Err(CodecError::Parse("bad `root` line".into())),
        None => None,
    };
    let orient_line = lines.take_optional("orient");
    let poles_line = lines.take_optional("poles");
    let color_line = lines.take_optional("color");
    if lines.at != lines.lines.len() {
        return Err(CodecError::Parse(format!(
            "unexpected line: `{}`",
            lines.lines[lines.at]
        )));
    }

    let parse_orient = |parts: &[&str]| -> Result<Vec<bool>, CodecError> {
        if parts.len() != 1 || parts[0].len() != m as usize {
            return Err(CodecError::Parse("bad `orient` line".into()));
        }
        parts[0]
            .chars()
            .map(|c| match c {
                '+' => Ok(true),
                '-' => Ok(false),
                _ => Err(CodecError::Parse(format!("bad orient char `{c}`"))),
            })
            .collect()
    };

    match (orient_line, poles_line, color_line) {
        (None, None, None) => {
            let root = root.ok_or(MapError::BadRoot)?;
            Ok(Record::Map(RootedMap::build(m, &sigma, root)?))
        }
        (Some(orient), Some(poles), None) => {
            let map = RootedMap::build_with_optional_root(m, &sigma, root)?;
            let orient = parse_orient(&orient)?;
            if poles.len() != 2 {
                return Err(CodecError::Parse("bad `poles` line".into()));
            }
            let s_dart = parse_u32(poles[0], "source dart")?;
            let t_dart = parse_u32(poles[1], "sink dart")?;
            if s_dart == 0 || s_dart > 2 * m || t_dart == 0 || t_dart > 2 * m {
                return Err(CodecError::Parse("pole dart out of range".into()));
            }
            let s = map.vertex_of(s_dart);
            let t = map.vertex_of(t_dart);
            let outer = map.face_of(s_dart);
            if map.face_of(t_dart) != outer {
                return Err(CodecError::Parse("pole darts on different faces".into()));
            }
            let o = BipolarOrientation::validate_with_outer(map, orient, s, t, outer)?;
            if o.s_dart() != s_dart || o.t_dart() != t_dart {
                return Err(CodecError::Parse(
                    "pole darts are not the outer-boundary darts at the poles".into(),
                ));
            }
            Ok(Record::Bipolar(o))
        }
        (Some(orient), None, Some(color)) => {
            let root = root.ok_or(MapError::BadRoot)?;
            let map = RootedMap::build(m, &sigma, root)?;
            let orient = parse_orient(&orient)?;
            if color.len() != 1 || color[0].len() != m as usize {
                return Err(CodecError::Parse("bad `color` line".into()));
            }
            let color: Vec<Option<EdgeColor>> = color[0]
                .chars()
                .map(|c| match c {
                    'r' => Ok(Some(EdgeColor::Red)),
                    'b' => Ok(Some(EdgeColor::Blue)),
                    'x' => Ok(None),
                    _ => Err(CodecError::Parse(format!("bad color char `{c}`"))),
                })
                .collect::<Result<_, _>>()?;
            Ok(Record::Transversal(TransversalStructure::validate(
                map, color, orient,
            )?))
        }
        _ => Err(CodecError::Parse(
            "decorations must be `orient`+`poles` (orientation) or `orient`+`color` (transversal)"
                .into(),
        )),
    }
}

/// Decodes a stream of blank-line-separated records.
pub fn decode_stream(text: &str) -> Result<Vec<Record>, CodecError> {
    let mut records = vec![];
    let mut chunk = String::new();
    for line in text.lines().chain(std::iter::once("")) {
        if line.trim().is_empty() {
            if !chunk.trim().is_empty() {
                records.push(decode(&chunk)?);
            }
            chunk.clear();
        } else {
            chunk.push_str(line);
            chunk.push('\n');
        }
    }
    Ok(records)
}

/// Encodes records separated by blank lines.
pub fn encode_stream(records: &[Record]) -> String {
    records.iter().map(encode).collect::<Vec<_>>().join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn emap_fixed_text() {
        assert_eq!(encode_map(&fixtures::emap()), "rmap 1\nm 1\nsigma 1 2\nroot 1\n");
        assert_eq!(encode_map(&RootedMap::vertex_map()), "rmap 1\nm 0\n");
    }

    #[test]
    fn tri_roundtrip() {
        let tri = fixtures::tri();
        let text = encode_map(&tri);
        match decode(&text).unwrap() {
            Record::Map(m) => assert_eq!(m, tri),
            other => panic!("expected map, got {}", other.kind()),
        }
    }

    #[test]
    fn bad_root_detected() {
        let err = decode("rmap 1\nm 1\nsigma 1 2\nroot 3\n").unwrap_err();
        assert_eq!(err, CodecError::Map(MapError::BadRoot));
    }

    #[test]
    fn orientation_roundtrip() {
        let m = fixtures::emap();
        let (s, t) = (m.vertex_of(1), m.vertex_of(2));
        let o = BipolarOrientation::validate(m, vec![true], s, t).unwrap();
        let text = encode_bipolar(&o);
        match decode(&text).unwrap() {
            Record::Bipolar(back) => {
                assert_eq!(back.canonical_encoding(), o.canonical_encoding())
            }
            other => panic!("expected orientation, got {}", other.kind()),
        }
    }

    #[test]
    fn stream_roundtrip() {
        let records = vec![
            Record::Map(fixtures::tri()),
            Record::Map(fixtures::emap()),
            Record::Map(RootedMap::vertex_map()),
        ];
        let text = encode_stream(&records);
        let back = decode_stream(&text).unwrap();
        assert_eq!(back.len(), 3);
    }
}
