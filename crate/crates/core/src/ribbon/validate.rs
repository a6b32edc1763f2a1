use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Color, PatternType, RibbonGraph, Role};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    BlackValence { vertex: usize, valence: usize, expected: usize },
    BlackNeighbor { vertex: usize },
    WhiteValence { vertex: usize, valence: usize, expected: usize },
    WhitePeriodicity { vertex: usize },
    ShortFace { face: usize, length: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BlackValence { vertex, valence, expected } => write!(
                f,
                "black valence ≠ k at vertex {vertex}: {valence} instead of {expected}"
            ),
            Violation::BlackNeighbor { vertex } => {
                write!(f, "black vertex {vertex} has a black neighbor")
            }
            Violation::WhiteValence { vertex, valence, expected } => write!(
                f,
                "white valence ≠ l at vertex {vertex}: {valence} instead of {expected}"
            ),
            Violation::WhitePeriodicity { vertex } => write!(
                f,
                "white vertex {vertex}: black neighbors are not exactly every n-th dart"
            ),
            Violation::ShortFace { face, length } => {
                write!(f, "face {face} has length {length} < 3")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub pattern_type: PatternType,
    pub valid: bool,
    pub violations: Vec<Violation>,
}

/// Checks a colored graph against the incidence rules of a `(k, l, n)` football.
///
/// Pattern-role inputs are dualized first. Vertex indices in the report refer to the
/// dual graph's [`RibbonGraph::vertices`] order.
pub fn validate(g: &RibbonGraph, t: PatternType) -> Result<ValidationReport> {
    let dual;
    let g = if g.role() == Role::Pattern {
        dual = g.dual()?;
        &dual
    } else {
        g
    };
    let vertices = g.vertices();
    for (i, orbit) in vertices.iter().enumerate() {
        if g.vertex_color(orbit[0]) == Color::None {
            return Err(Error::Uncolored { vertex: i });
        }
    }

    let mut violations = Vec::new();
    for (i, orbit) in vertices.iter().enumerate() {
        let neighbors: Vec<Color> = orbit
            .iter()
            .map(|&d| g.vertex_color(g.alpha(d)))
            .collect();
        match g.vertex_color(orbit[0]) {
            Color::Black => {
                if orbit.len() != t.k {
                    violations.push(Violation::BlackValence {
                        vertex: i,
                        valence: orbit.len(),
                        expected: t.k,
                    });
                }
                if neighbors.contains(&Color::Black) {
                    violations.push(Violation::BlackNeighbor { vertex: i });
                }
            }
            Color::White => {
                if orbit.len() != t.l {
                    violations.push(Violation::WhiteValence {
                        vertex: i,
                        valence: orbit.len(),
                        expected: t.l,
                    });
                } else if !periodic(&neighbors, t.n) {
                    violations.push(Violation::WhitePeriodicity { vertex: i });
                }
            }
            Color::None => unreachable!("checked above"),
        }
    }
    for face in g.trace_faces().face_records {
        if face.length < 3 {
            violations.push(Violation::ShortFace {
                face: face.index,
                length: face.length,
            });
        }
    }
    Ok(ValidationReport {
        pattern_type: t,
        valid: violations.is_empty(),
        violations,
    })
}

/// Whether some offset puts black exactly at the positions congruent to it mod `n`.
fn periodic(neighbors: &[Color], n: usize) -> bool {
    (0..n).any(|offset| {
        neighbors
            .iter()
            .enumerate()
            .all(|(i, &c)| (c == Color::Black) == (i % n == offset))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn periodicity_any_offset() {
        use Color::{Black as B, White as W};
        assert!(periodic(&[W, B, W, B, W, B], 2));
        assert!(periodic(&[B, W, B, W, B, W], 2));
        assert!(!periodic(&[B, B, W, W, B, W], 2));
        assert!(periodic(&[W, W, B], 3));
        assert!(periodic(&[B, B, B], 1));
        assert!(!periodic(&[B, W, B], 1));
    }
}
