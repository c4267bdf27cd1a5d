//! Point files and network files.
//!
//! A point file is the count `n` on the first line followed by `n` lines of
//! two whitespace-separated integers. A network file is JSON:
//! `{"nodes":[{"id","x","y","kind"}],"edges":[{"u","v","weight"}],"total_length"}`.

use std::fmt::Write as _;
use std::path::Path;

use mmnfa_core::model::COORD_LIMIT;
use mmnfa_core::{manhattan_distance, Coord, Network};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid network: {0}")]
    Network(String),
    #[error("network JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

fn parse_err(line: usize, msg: impl Into<String>) -> FileError {
    FileError::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn parse_points(text: &str) -> Result<Vec<Coord>, FileError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let Some((_, first)) = lines.next() else {
        return Ok(Vec::new());
    };
    let first = first.trim();
    if first.is_empty() && text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let n: usize = first
        .parse()
        .map_err(|_| parse_err(1, format!("expected point count, found {first:?}")))?;

    let mut points = Vec::with_capacity(n);
    for k in 0..n {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| parse_err(k + 2, format!("expected {n} points, file ends after {k}")))?;
        let mut tokens = line.split_whitespace();
        let mut coord = || -> Result<i64, FileError> {
            let tok = tokens
                .next()
                .ok_or_else(|| parse_err(line_no, "expected two integers"))?;
            let v: i64 = tok
                .parse()
                .map_err(|_| parse_err(line_no, format!("not an integer: {tok:?}")))?;
            if v.abs() > COORD_LIMIT {
                return Err(parse_err(
                    line_no,
                    format!("coordinate {v} outside ±{COORD_LIMIT}"),
                ));
            }
            Ok(v)
        };
        let x = coord()?;
        let y = coord()?;
        if let Some(extra) = tokens.next() {
            return Err(parse_err(line_no, format!("unexpected token {extra:?}")));
        }
        points.push(Coord::new(x, y));
    }
    for (line_no, line) in lines {
        if !line.trim().is_empty() {
            return Err(parse_err(line_no, "trailing content after the last point"));
        }
    }
    Ok(points)
}

pub fn format_points(points: &[Coord]) -> String {
    let mut out = String::with_capacity(points.len() * 12 + 8);
    writeln!(out, "{}", points.len()).unwrap();
    for p in points {
        writeln!(out, "{} {}", p.x, p.y).unwrap();
    }
    out
}

/// Structural checks on a network read from disk.
pub fn validate_network(net: &Network) -> Result<(), FileError> {
    for (i, p) in net.nodes.iter().enumerate() {
        if p.id != i {
            return Err(FileError::Network(format!("node {i} has id {}", p.id)));
        }
    }
    let mut sum = 0u64;
    for e in &net.edges {
        let (Some(a), Some(b)) = (net.nodes.get(e.u), net.nodes.get(e.v)) else {
            return Err(FileError::Network(format!(
                "edge ({}, {}) references a missing node",
                e.u, e.v
            )));
        };
        if a.x != b.x && a.y != b.y {
            return Err(FileError::Network(format!(
                "edge ({}, {}) is not axis-parallel",
                e.u, e.v
            )));
        }
        let d = manhattan_distance(a.coord(), b.coord());
        if d == 0 || d != e.weight {
            return Err(FileError::Network(format!(
                "edge ({}, {}) has weight {} but endpoints are {d} apart",
                e.u, e.v, e.weight
            )));
        }
        sum += e.weight;
    }
    if sum != net.total_length {
        return Err(FileError::Network(format!(
            "total_length {} does not match edge sum {sum}",
            net.total_length
        )));
    }
    Ok(())
}

pub fn parse_network(text: &str) -> Result<Network, FileError> {
    let net: Network = serde_json::from_str(text)?;
    validate_network(&net)?;
    Ok(net)
}

pub fn format_network(net: &Network) -> String {
    let mut s = serde_json::to_string_pretty(net).expect("network serializes");
    s.push('\n');
    s
}

pub fn read_to_string(path: &Path) -> Result<String, FileError> {
    std::fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn write_string(path: &Path, contents: &str) -> Result<(), FileError> {
    std::fs::write(path, contents).map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn read_points(path: &Path) -> Result<Vec<Coord>, FileError> {
    parse_points(&read_to_string(path)?)
}

pub fn read_network(path: &Path) -> Result<Network, FileError> {
    parse_network(&read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use mmnfa_core::mmnfa;

    #[test]
    fn parses_listing_format() {
        let pts = parse_points("3\n0 0\n4 2\n2 4\n").unwrap();
        assert_eq!(
            pts,
            vec![Coord::new(0, 0), Coord::new(4, 2), Coord::new(2, 4)]
        );
        assert_eq!(
            parse_points("1\n-7   7  \n\n  \n").unwrap(),
            vec![Coord::new(-7, 7)]
        );
    }

    #[test]
    fn empty_file_is_zero_points() {
        assert!(parse_points("").unwrap().is_empty());
        assert!(parse_points("\n  \n").unwrap().is_empty());
        assert!(parse_points("0\n").unwrap().is_empty());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let line = |t: &str| match parse_points(t) {
            Err(FileError::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(line("x\n"), 1);
        assert_eq!(line("2\n0 0\n1\n"), 3);
        assert_eq!(line("2\n0 0\n1 2 3\n"), 3);
        assert_eq!(line("2\n0 0\n"), 3);
        assert_eq!(line("1\n0 0\n5 5\n"), 3);
        assert_eq!(line("1\n0 q\n"), 2);
        assert_eq!(line("1\n0 9999999999\n"), 2);
    }

    #[test]
    fn points_round_trip() {
        let pts = vec![Coord::new(3, -1), Coord::new(0, 0), Coord::new(-5, 12)];
        assert_eq!(parse_points(&format_points(&pts)).unwrap(), pts);
    }

    #[test]
    fn network_round_trip_and_validation() {
        let net = mmnfa(&[Coord::new(0, 0), Coord::new(4, 2), Coord::new(2, 4)]).network;
        let text = format_network(&net);
        assert!(text.contains("\"kind\": \"demo\""));
        assert_eq!(parse_network(&text).unwrap(), net);

        let mut bad = net.clone();
        bad.total_length += 1;
        assert!(matches!(
            parse_network(&format_network(&bad)),
            Err(FileError::Network(_))
        ));

        let mut bad = net.clone();
        bad.edges[0].weight += 1;
        assert!(matches!(
            parse_network(&format_network(&bad)),
            Err(FileError::Network(_))
        ));

        assert!(matches!(
            parse_network("{\"nodes\": 3}"),
            Err(FileError::Json(_))
        ));
    }
}
