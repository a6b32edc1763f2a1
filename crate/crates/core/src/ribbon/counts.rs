use serde::{Deserialize, Serialize};

use super::{Color, RibbonGraph};

/// Vertex and edge counts of a colored (dual-role) graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountsReport {
    /// Black vertices.
    pub b: usize,
    /// White vertices.
    pub w: usize,
    pub e: usize,
    /// White-white edges.
    pub e1: usize,
    /// Black-white edges.
    pub e2: usize,
    /// `d` with `b = 6d`, `w = 10d`, if the counts have that form.
    pub d: Option<usize>,
}

impl RibbonGraph {
    pub fn counts(&self) -> CountsReport {
        let mut b = 0;
        let mut w = 0;
        for orbit in self.vertices() {
            match self.vertex_color(orbit[0]) {
                Color::Black => b += 1,
                Color::White => w += 1,
                Color::None => {}
            }
        }
        let mut e1 = 0;
        let mut e2 = 0;
        for (x, y) in self.edges() {
            match (self.vertex_color(x), self.vertex_color(y)) {
                (Color::White, Color::White) => e1 += 1,
                (Color::Black, Color::White) | (Color::White, Color::Black) => e2 += 1,
                _ => {}
            }
        }
        let d = (b > 0 && b % 6 == 0 && w == 10 * (b / 6)).then_some(b / 6);
        CountsReport {
            b,
            w,
            e: self.num_edges(),
            e1,
            e2,
            d,
        }
    }
}
