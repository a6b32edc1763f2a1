//! The RGF text format, one ribbon graph per file.
//!
//! ```text
//! rgf 1 <pattern|dual|plain> <orientable|signed>
//! v <id> <black|white|none> : <darts in counterclockwise order>
//! e <dart> <dart> [twist]
//! fc <face index> <black|white>
//! ```
//!
//! Vertices are written in order of their smallest dart, each starting there; edges in
//! order of their smaller dart. Face indices follow [`RibbonGraph::trace_faces`]. Blank
//! lines and lines starting with `#` are ignored.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ribbon::{Color, Dart, RibbonGraph, Role};

pub fn to_string(g: &RibbonGraph) -> String {
    let mut out = String::new();
    let kind = if g.has_twists() { "signed" } else { "orientable" };
    writeln!(out, "rgf 1 {} {}", g.role().as_str(), kind).unwrap();
    for (i, orbit) in g.vertices().iter().enumerate() {
        write!(out, "v {} {} :", i, g.vertex_color(orbit[0])).unwrap();
        for d in orbit {
            write!(out, " {d}").unwrap();
        }
        out.push('\n');
    }
    for (a, b) in g.edges() {
        if g.is_twisted(a) {
            writeln!(out, "e {a} {b} twist").unwrap();
        } else {
            writeln!(out, "e {a} {b}").unwrap();
        }
    }
    if g.darts().any(|d| g.face_color(d) != Color::None) {
        for face in g.trace_faces().face_records {
            if let Some(c) = face.color.filter(|&c| c != Color::None) {
                writeln!(out, "fc {} {}", face.index, c).unwrap();
            }
        }
    }
    out
}

fn parse_color(token: &str, line: usize) -> Result<Color> {
    match token {
        "black" => Ok(Color::Black),
        "white" => Ok(Color::White),
        "none" => Ok(Color::None),
        other => Err(Error::Parse {
            line,
            message: format!("unknown color '{other}'"),
        }),
    }
}

fn parse_num(token: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let token = token.ok_or_else(|| Error::Parse {
        line,
        message: format!("missing {what}"),
    })?;
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("bad {what} '{token}'"),
    })
}

pub fn parse(text: &str) -> Result<RibbonGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "empty input".into(),
    })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let perr = |line, message: &str| Error::Parse {
        line,
        message: message.to_string(),
    };
    if fields.len() != 4 || fields[0] != "rgf" {
        return Err(perr(hline, "expected 'rgf 1 <role> <orientable|signed>'"));
    }
    if fields[1] != "1" {
        return Err(perr(hline, "unsupported rgf version"));
    }
    let role = match fields[2] {
        "pattern" => Role::Pattern,
        "dual" => Role::Dual,
        "plain" => Role::Plain,
        _ => return Err(perr(hline, "unknown role")),
    };
    let signed = match fields[3] {
        "orientable" => false,
        "signed" => true,
        _ => return Err(perr(hline, "expected 'orientable' or 'signed'")),
    };

    let mut rotations: Vec<(usize, Color, Vec<Dart>)> = Vec::new();
    let mut edges: Vec<(usize, Dart, Dart, bool)> = Vec::new();
    let mut face_lines: Vec<(usize, usize, Color)> = Vec::new();
    let mut vertex_ids = HashSet::new();

    for (line, text) in lines {
        let mut tokens = text.split_whitespace();
        match tokens.next() {
            Some("v") => {
                let id = parse_num(tokens.next(), line, "vertex id")?;
                if !vertex_ids.insert(id) {
                    return Err(perr(line, "duplicate vertex id"));
                }
                let color = parse_color(tokens.next().unwrap_or(""), line)?;
                if tokens.next() != Some(":") {
                    return Err(perr(line, "expected ':' after vertex color"));
                }
                let darts = tokens
                    .map(|t| parse_num(Some(t), line, "dart"))
                    .collect::<Result<Vec<_>>>()?;
                if darts.is_empty() {
                    return Err(perr(line, "vertex without darts"));
                }
                rotations.push((line, color, darts));
            }
            Some("e") => {
                let a = parse_num(tokens.next(), line, "dart")?;
                let b = parse_num(tokens.next(), line, "dart")?;
                let twist = match tokens.next() {
                    None => false,
                    Some("twist") => true,
                    Some(other) => return Err(perr(line, &format!("unexpected '{other}'"))),
                };
                if twist && !signed {
                    return Err(perr(line, "twisted edge in an 'orientable' file"));
                }
                edges.push((line, a, b, twist));
            }
            Some("fc") => {
                let face = parse_num(tokens.next(), line, "face index")?;
                let color = parse_color(tokens.next().unwrap_or(""), line)?;
                face_lines.push((line, face, color));
            }
            Some(other) => return Err(perr(line, &format!("unknown record '{other}'"))),
            None => unreachable!("blank lines are filtered"),
        }
    }

    let n: usize = rotations.iter().map(|(_, _, d)| d.len()).sum();
    let last = rotations.last().map_or(hline, |r| r.0);
    let mut sigma = vec![usize::MAX; n];
    let mut vcolor = vec![Color::None; n];
    for (line, color, darts) in &rotations {
        for (i, &d) in darts.iter().enumerate() {
            if d >= n {
                return Err(perr(*line, &format!("dart {d} out of range 0..{n}")));
            }
            if sigma[d] != usize::MAX {
                return Err(perr(*line, &format!("dart {d} listed twice")));
            }
            sigma[d] = darts[(i + 1) % darts.len()];
            vcolor[d] = *color;
        }
    }
    let mut alpha = vec![usize::MAX; n];
    let mut twist = vec![false; n];
    for &(line, a, b, t) in &edges {
        for d in [a, b] {
            if d >= n {
                return Err(perr(line, &format!("dart {d} out of range 0..{n}")));
            }
            if alpha[d] != usize::MAX {
                return Err(perr(line, &format!("dart {d} already paired")));
            }
        }
        if a == b {
            return Err(perr(line, "edge pairs a dart with itself"));
        }
        alpha[a] = b;
        alpha[b] = a;
        twist[a] = t;
        twist[b] = t;
    }
    if let Some(d) = alpha.iter().position(|&a| a == usize::MAX) {
        return Err(perr(last, &format!("dart {d} has no edge")));
    }

    let g = RibbonGraph::new(sigma, alpha, twist, role)
        .map_err(|e| perr(last, &e.to_string()))?
        .with_vertex_colors(vcolor)
        .map_err(|e| perr(last, &e.to_string()))?;
    if face_lines.is_empty() {
        return Ok(g);
    }
    let summary = g.trace_faces();
    let mut fcolor = vec![Color::None; n];
    for (line, face, color) in face_lines {
        let record = summary
            .face_records
            .get(face)
            .ok_or_else(|| perr(line, &format!("no face {face}")))?;
        for &d in &record.plus_darts {
            fcolor[d] = color;
        }
    }
    g.with_face_colors(fcolor)
        .map_err(|e| perr(last, &e.to_string()))
}
