//! Map operators: duality, medial and truncation.

use super::{Color, Dart, RibbonGraph, Role};
use crate::error::{Error, Result};

impl RibbonGraph {
    /// The dual map on the same darts: `sigma* = sigma ∘ alpha`, `alpha* = alpha`.
    ///
    /// Vertex and face colors trade places and the role toggles between pattern and dual.
    /// Orientable graphs carrying twists are untwisted first.
    pub fn dual(&self) -> Result<RibbonGraph> {
        let g = if self.has_twists() {
            self.untwist().map_err(|_| Error::NonOrientableDual)?
        } else {
            self.clone()
        };
        let n = g.num_darts();
        let (_, alpha, _, vc, fc) = g.raw_parts();
        let sigma = (0..n).map(|d| g.phi(d)).collect();
        let dual = RibbonGraph::from_permutations(sigma, alpha.to_vec(), g.role().toggled())?;
        let (vc, fc) = (vc.to_vec(), fc.to_vec());
        let mut dual = dual.with_vertex_colors(fc)?;
        dual.set_face_colors_unchecked(vc);
        Ok(dual)
    }

    pub(crate) fn set_face_colors_unchecked(&mut self, colors: Vec<Color>) {
        debug_assert_eq!(colors.len(), self.num_darts());
        self.face_color = colors;
    }

    /// The medial map as a two-colored pattern.
    ///
    /// Each edge becomes a 4-valent vertex and each corner `(d, sigma d)` a medial edge.
    /// Faces around former vertices are black, faces inside former faces are white.
    pub fn medial(&self) -> Result<RibbonGraph> {
        let g = self
            .untwist()
            .map_err(|_| Error::NonOrientable("medial"))?;
        let n = g.num_darts();
        let low = |d: Dart| 2 * d; // corner d, at the edge of d
        let high = |d: Dart| 2 * d + 1; // corner d, at the edge of sigma(d)
        let mut sigma = vec![0; 2 * n];
        let mut alpha = vec![0; 2 * n];
        for d in 0..n {
            alpha[low(d)] = high(d);
            alpha[high(d)] = low(d);
            sigma[low(d)] = high(g.sigma_inv(d));
            sigma[high(d)] = low(g.alpha(g.sigma(d)));
        }
        let mut m = RibbonGraph::from_permutations(sigma, alpha, Role::Pattern)?;
        let colors = (0..2 * n)
            .map(|x| if x % 2 == 1 { Color::Black } else { Color::White })
            .collect();
        m.set_face_colors_unchecked(colors);
        Ok(m)
    }

    /// Truncates the vertices with the given indices (as in [`RibbonGraph::vertices`]).
    ///
    /// Each dart leaving a truncated vertex gets a new 3-valent vertex; the new polygons are
    /// black and all original faces are white.
    pub fn truncate(&self, selected: &[usize]) -> Result<RibbonGraph> {
        let g = self
            .untwist()
            .map_err(|_| Error::NonOrientable("truncation"))?;
        let n = g.num_darts();
        let vertices = g.vertices();
        let mut chosen = vec![false; vertices.len()];
        for &v in selected {
            let orbit = vertices
                .get(v)
                .ok_or_else(|| Error::Malformed(format!("no vertex {v}")))?;
            if orbit.len() < 3 {
                return Err(Error::ValenceTooSmall {
                    vertex: v,
                    valence: orbit.len(),
                });
            }
            chosen[v] = true;
        }
        let vidx = g.vertex_index();

        // p(d): corner edge toward sigma(d); q(d): corner edge toward sigma^-1(d).
        let mut slot = vec![usize::MAX; n];
        let mut next = n;
        for d in 0..n {
            if chosen[vidx[d]] {
                slot[d] = next;
                next += 2;
            }
        }
        let total = next;
        let p = |d: Dart| slot[d];
        let q = |d: Dart| slot[d] + 1;

        let mut sigma: Vec<Dart> = (0..total).collect();
        let mut alpha: Vec<Dart> = (0..total).collect();
        let mut colors = vec![Color::White; total];
        for d in 0..n {
            alpha[d] = g.alpha(d);
            if slot[d] == usize::MAX {
                sigma[d] = g.sigma(d);
                continue;
            }
            sigma[d] = p(d);
            sigma[p(d)] = q(d);
            sigma[q(d)] = d;
            alpha[p(d)] = q(g.sigma(d));
            alpha[q(d)] = p(g.sigma_inv(d));
            colors[q(d)] = Color::Black;
        }
        let mut t = RibbonGraph::from_permutations(sigma, alpha, Role::Pattern)?;
        t.set_face_colors_unchecked(colors);
        Ok(t)
    }

    /// Truncation at every vertex.
    pub fn truncate_all(&self) -> Result<RibbonGraph> {
        let all: Vec<usize> = (0..self.num_vertices()).collect();
        self.truncate(&all)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn dual_is_an_involution() {
        let g = catalog::minimal_realization(catalog::CatalogId::row(10)).unwrap();
        assert_eq!(g.dual().unwrap().dual().unwrap(), g);
    }

    #[test]
    fn dual_rejects_non_orientable() {
        let g = RibbonGraph::new(vec![1, 0], vec![1, 0], vec![true, true], Role::Plain).unwrap();
        assert_eq!(g.dual().unwrap_err(), Error::NonOrientableDual);
    }

    #[test]
    fn truncate_rejects_small_valence() {
        // A single edge between two vertices of valence 1.
        let g = RibbonGraph::from_permutations(vec![0, 1], vec![1, 0], Role::Plain).unwrap();
        assert!(matches!(
            g.truncate(&[0]),
            Err(Error::ValenceTooSmall { valence: 1, .. })
        ));
    }

    #[test]
    fn medial_of_tetrahedron_is_octahedron() {
        let m = catalog::platonic("tetrahedron").unwrap().medial().unwrap();
        let s = m.trace_faces();
        assert_eq!((s.vertices, s.edges, s.faces), (6, 12, 8));
        let black = s
            .face_records
            .iter()
            .filter(|f| f.color == Some(Color::Black))
            .count();
        assert_eq!(black, 4);
        assert!(m.vertices().iter().all(|v| v.len() == 4));
    }

    #[test]
    fn truncated_icosahedron_is_the_football() {
        let t = catalog::platonic("icosahedron").unwrap().truncate_all().unwrap();
        let s = t.trace_faces();
        assert_eq!((s.vertices, s.edges, s.faces), (60, 90, 32));
        assert!(t.vertices().iter().all(|v| v.len() == 3));
        let profile = s.face_profile();
        assert_eq!(profile.get(&5), Some(&12));
        assert_eq!(profile.get(&6), Some(&20));
    }
}
