//! Facet file formats.
//!
//! Text format: optional `#` comment lines, a header line `n d` (vertex count
//! and dimension), then one facet per line as ascending vertex ids separated by
//! spaces. The complex `{∅}` is written as the header `0 -1` with no facet lines.
//!
//! JSON format: `{"n": 4, "facets": [[0,1],[1,2],[2,3],[0,3]]}`.

use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};

pub fn parse_facets(text: &str) -> Result<SimplicialComplex> {
    let mut header: Option<(usize, isize, usize)> = None;
    let mut facets = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| Error::Parse { line: line_no, message };
        if header.is_none() {
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 2 {
                return Err(parse_err(format!("expected header \"n d\", found {line:?}")));
            }
            let n =
                parts[0].parse::<usize>().map_err(|e| parse_err(format!("bad vertex count {:?}: {e}", parts[0])))?;
            let d = parts[1].parse::<isize>().map_err(|e| parse_err(format!("bad dimension {:?}: {e}", parts[1])))?;
            header = Some((n, d, line_no));
            continue;
        }
        let mut prev: Option<usize> = None;
        let mut ids = Vec::new();
        for tok in line.split_whitespace() {
            let v = tok.parse::<usize>().map_err(|e| parse_err(format!("bad vertex id {tok:?}: {e}")))?;
            if prev.is_some_and(|p| p >= v) {
                return Err(parse_err("vertex ids must be strictly ascending".into()));
            }
            prev = Some(v);
            ids.push(v);
        }
        let face = Face::from_vertices(ids).map_err(|e| parse_err(e.to_string()))?;
        facets.push((face, line_no));
    }
    let (n, d, header_line) = header.ok_or(Error::Parse { line: 0, message: "missing header".into() })?;
    if facets.is_empty() {
        if n == 0 && d == -1 {
            return Ok(SimplicialComplex::empty_face());
        }
        return Err(Error::Parse { line: header_line, message: "no facets".into() });
    }
    let last_line = facets.last().map(|f| f.1).unwrap_or(header_line);
    let complex = SimplicialComplex::new(n, facets.iter().map(|f| f.0).collect()).map_err(|e| {
        let line = match &e {
            Error::NotAntichain { smaller, .. } => {
                facets.iter().filter(|f| f.0 == *smaller).map(|f| f.1).max().unwrap_or(last_line)
            }
            Error::VertexOutOfRange { vertex, .. } => {
                facets.iter().find(|f| f.0.contains(*vertex)).map(|f| f.1).unwrap_or(last_line)
            }
            _ => header_line,
        };
        Error::Parse { line, message: e.to_string() }
    })?;
    if complex.dim() != d {
        return Err(Error::Parse {
            line: header_line,
            message: format!("header declares dimension {d}, facets have dimension {}", complex.dim()),
        });
    }
    Ok(complex)
}

/// Writes the text format, optionally preceded by one comment line.
pub fn write_facets(complex: &SimplicialComplex, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        for line in c.lines() {
            out.push_str("# ");
            out.push_str(line);
            out.push('\n');
        }
    }
    out.push_str(&format!("{} {}\n", complex.vertex_count(), complex.dim()));
    for f in complex.facets() {
        if f.is_empty() {
            continue;
        }
        let ids: Vec<String> = f.vertices().map(|v| v.to_string()).collect();
        out.push_str(&ids.join(" "));
        out.push('\n');
    }
    out
}

#[derive(Serialize, Deserialize)]
struct JsonComplex {
    n: usize,
    facets: Vec<Vec<usize>>,
}

pub fn parse_json(text: &str) -> Result<SimplicialComplex> {
    let raw: JsonComplex = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    for f in &raw.facets {
        if f.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Json(format!("facet {f:?} is not strictly ascending")));
        }
    }
    SimplicialComplex::from_facet_lists(raw.n, &raw.facets).map_err(|e| Error::Json(e.to_string()))
}

pub fn to_json(complex: &SimplicialComplex) -> String {
    let raw = JsonComplex { n: complex.vertex_count(), facets: complex.facet_lists() };
    serde_json::to_string(&raw).expect("plain data serializes")
}

/// Parses either format, choosing JSON when the first non-blank character is `{`.
pub fn parse_any(text: &str) -> Result<SimplicialComplex> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_facets(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let text = "# a square\n4 1\n0 1\n1 2\n2 3\n0 3\n";
        let c = parse_facets(text).unwrap();
        assert_eq!(c.f_vector().counts(), &[1, 4, 4]);
        let written = write_facets(&c, None);
        assert_eq!(written, "4 1\n0 1\n0 3\n1 2\n2 3\n");
        assert_eq!(parse_facets(&written).unwrap(), c);
    }

    #[test]
    fn empty_face_complex() {
        let c = SimplicialComplex::empty_face();
        let text = write_facets(&c, None);
        assert_eq!(text, "0 -1\n");
        assert_eq!(parse_facets(&text).unwrap(), c);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_facets("3 2\n0 1 2\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = parse_facets("# c\n3 1\n1 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = parse_facets("3 1\n0 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = parse_facets("3 2\n0 1\n1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
        assert!(parse_facets("# only comments\n").is_err());
    }

    #[test]
    fn json_round_trip_and_rejection() {
        let c = parse_json(r#"{"n":3,"facets":[[0,1],[1,2]]}"#).unwrap();
        assert_eq!(to_json(&c), r#"{"n":3,"facets":[[0,1],[1,2]]}"#);
        assert!(parse_json(r#"{"n":3,"facets":[[0,1,2],[1,2]]}"#).is_err());
        assert!(parse_json(r#"{"n":3,"facets":[[1,0],[1,2]]}"#).is_err());
        assert_eq!(parse_any(r#" {"n":1,"facets":[[0]]}"#).unwrap().vertex_count(), 1);
    }
}
