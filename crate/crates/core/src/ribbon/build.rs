use std::collections::BTreeMap;

use super::{Color, Dart, RibbonGraph, Role};
use crate::error::{Error, Result};

/// Builds an oriented map from polygons listed counterclockwise (seen from outside).
///
/// Every directed edge `u → v` must occur in exactly one polygon and its reverse in exactly
/// one other, and the polygons around each vertex must close up into a single disc.
/// One dart is created per directed edge, numbered in lexicographic order of `(u, v)`.
#[derive(Debug, Clone, Default)]
pub struct FaceListBuilder {
    num_vertices: usize,
    faces: Vec<(Vec<usize>, Color)>,
}

impl FaceListBuilder {
    pub fn new(num_vertices: usize) -> Self {
        FaceListBuilder {
            num_vertices,
            faces: Vec::new(),
        }
    }

    pub fn face(&mut self, corners: impl IntoIterator<Item = usize>, color: Color) -> &mut Self {
        self.faces.push((corners.into_iter().collect(), color));
        self
    }

    pub fn build(&self, role: Role) -> Result<RibbonGraph> {
        let mut directed: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (corners, _) in &self.faces {
            if corners.len() < 2 {
                return Err(Error::Malformed("polygon with fewer than two corners".into()));
            }
            for j in 0..corners.len() {
                let (u, v) = (corners[j], corners[(j + 1) % corners.len()]);
                if u >= self.num_vertices || v >= self.num_vertices || u == v {
                    return Err(Error::Malformed(format!("bad polygon side {u}-{v}")));
                }
                if directed.insert((u, v), 0).is_some() {
                    return Err(Error::Malformed(format!("side {u}->{v} used twice")));
                }
            }
        }
        for (i, slot) in directed.values_mut().enumerate() {
            *slot = i;
        }
        let n = directed.len();
        let dart = |u: usize, v: usize| -> Result<Dart> {
            directed
                .get(&(u, v))
                .copied()
                .ok_or_else(|| Error::Malformed(format!("side {v}->{u} has no partner")))
        };

        let mut alpha = vec![0; n];
        for (&(u, v), &d) in &directed {
            alpha[d] = dart(v, u)?;
        }
        let mut sigma = vec![usize::MAX; n];
        let mut face_color = vec![Color::None; n];
        for (corners, color) in &self.faces {
            let len = corners.len();
            for j in 0..len {
                let a = corners[(j + len - 1) % len];
                let v = corners[j];
                let c = corners[(j + 1) % len];
                let from = dart(v, c)?;
                if sigma[from] != usize::MAX {
                    return Err(Error::Malformed(format!("corner at {v} listed twice")));
                }
                sigma[from] = dart(v, a)?;
                face_color[dart(c, v)?] = *color;
            }
        }
        if sigma.contains(&usize::MAX) {
            return Err(Error::Malformed("polygons do not close up".into()));
        }

        let g = RibbonGraph::from_permutations(sigma, alpha, role)?;
        let mut tails = vec![usize::MAX; n];
        for (&(u, _), &d) in &directed {
            tails[d] = u;
        }
        let mut seen_vertex = vec![false; self.num_vertices];
        for orbit in g.vertices() {
            let u = tails[orbit[0]];
            if orbit.iter().any(|&d| tails[d] != u) || seen_vertex[u] {
                return Err(Error::Malformed(format!("vertex {u} is not a single disc")));
            }
            seen_vertex[u] = true;
        }
        if face_color.iter().all(|&c| c == Color::None) {
            return Ok(g);
        }
        g.with_face_colors(face_color)
    }
}
