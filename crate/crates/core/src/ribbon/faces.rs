use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Color, Dart, RibbonGraph};

/// Which side of a ribbon a face-tracing state walks along.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    fn flip_if(self, cond: bool) -> Side {
        match (self, cond) {
            (s, false) => s,
            (Side::Plus, true) => Side::Minus,
            (Side::Minus, true) => Side::Plus,
        }
    }

    fn bit(self) -> usize {
        match self {
            Side::Plus => 0,
            Side::Minus => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub index: usize,
    /// The traced boundary walk, one state per edge traversal.
    pub cycle: Vec<(Dart, Side)>,
    pub length: usize,
    /// Darts `d` whose state `(d, +)` belongs to this face (in either direction).
    pub plus_darts: Vec<Dart>,
    /// Present when the graph carries face colors.
    pub color: Option<Color>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceSummary {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler: i64,
    pub orientable: bool,
    pub components: usize,
    /// Orientable genus, or crosscap number for non-orientable surfaces (summed over components).
    pub genus: usize,
    pub face_records: Vec<Face>,
    /// `d` with `b = 6d` and `w = 10d`, when the vertex coloring has that shape.
    pub d_param: Option<usize>,
    #[serde(skip)]
    state_face: Vec<usize>,
}

impl SurfaceSummary {
    /// Index of the face containing the tracing state `(d, side)`.
    pub fn face_of(&self, d: Dart, side: Side) -> usize {
        self.state_face[2 * d + side.bit()]
    }

    /// Face length → number of faces of that length.
    pub fn face_profile(&self) -> BTreeMap<usize, usize> {
        let mut profile = BTreeMap::new();
        for f in &self.face_records {
            *profile.entry(f.length).or_insert(0) += 1;
        }
        profile
    }

    pub fn is_sphere(&self) -> bool {
        self.components == 1 && self.orientable && self.euler == 2
    }
}

impl RibbonGraph {
    fn step(&self, d: Dart, s: Side) -> (Dart, Side) {
        let a = self.alpha(d);
        let s2 = s.flip_if(self.is_twisted(d));
        match s2 {
            Side::Plus => (self.sigma(a), s2),
            Side::Minus => (self.sigma_inv(a), s2),
        }
    }

    /// The mirror state: it lies on the same face, walked in the opposite direction.
    fn mirror(&self, d: Dart, s: Side) -> (Dart, Side) {
        let flipped = match s {
            Side::Plus => Side::Minus,
            Side::Minus => Side::Plus,
        };
        (self.alpha(d), flipped.flip_if(self.is_twisted(d)))
    }

    /// Traces faces by walking `(dart, side)` states and summarizes the surface.
    /// Plus states are tried first, so untwisted faces come out in `phi_orbits` order.
    pub fn trace_faces(&self) -> SurfaceSummary {
        let n = self.num_darts();
        let mut state_face = vec![usize::MAX; 2 * n];
        let mut faces: Vec<Face> = Vec::new();
        for s0 in [Side::Plus, Side::Minus] {
            for d0 in 0..n {
                if state_face[2 * d0 + s0.bit()] != usize::MAX {
                    continue;
                }
                let index = faces.len();
                let mut cycle = Vec::new();
                let (mut d, mut s) = (d0, s0);
                loop {
                    state_face[2 * d + s.bit()] = index;
                    cycle.push((d, s));
                    (d, s) = self.step(d, s);
                    if (d, s) == (d0, s0) {
                        break;
                    }
                }
                for &(d, s) in &cycle {
                    let (md, ms) = self.mirror(d, s);
                    debug_assert_eq!(state_face[2 * md + ms.bit()], usize::MAX);
                    state_face[2 * md + ms.bit()] = index;
                }
                let mut plus_darts: Vec<Dart> = cycle
                    .iter()
                    .filter(|&&(_, s)| s == Side::Plus)
                    .map(|&(d, _)| d)
                    .chain(cycle.iter().filter_map(|&(d, s)| {
                        let (md, ms) = self.mirror(d, s);
                        (ms == Side::Plus).then_some(md)
                    }))
                    .collect();
                plus_darts.sort_unstable();
                plus_darts.dedup();
                let length = cycle.len();
                faces.push(Face {
                    index,
                    cycle,
                    length,
                    plus_darts,
                    color: None,
                });
            }
        }

        let colored = (0..n).any(|d| self.face_color(d) != Color::None);
        if colored {
            for f in &mut faces {
                f.color = Some(self.face_color(f.plus_darts[0]));
            }
        }

        let vertices = self.num_vertices();
        let edges = self.num_edges();
        let euler = vertices as i64 - edges as i64 + faces.len() as i64;
        let orientable = self.is_orientable();
        let components = self.components().len();
        let deficit = (2 * components as i64 - euler).max(0) as usize;
        let genus = if orientable { deficit / 2 } else { deficit };

        SurfaceSummary {
            vertices,
            edges,
            faces: faces.len(),
            euler,
            orientable,
            components,
            genus,
            face_records: faces,
            d_param: self.counts().d,
            state_face,
        }
    }

    /// Orbits of `sigma ∘ alpha` ordered by smallest dart; the faces of an untwisted graph.
    pub fn phi_orbits(&self) -> Vec<Vec<Dart>> {
        let n = self.num_darts();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                orbit.push(d);
                d = self.phi(d);
            }
            out.push(orbit);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ribbon::Role;

    fn bigon_sphere(k: usize) -> RibbonGraph {
        // Darts 0..k at the north pole, k..2k at the south pole.
        let sigma = (0..2 * k)
            .map(|d| if d < k { (d + 1) % k } else { k + (d - k + k - 1) % k })
            .collect();
        let alpha = (0..2 * k).map(|d| (d + k) % (2 * k)).collect();
        RibbonGraph::from_permutations(sigma, alpha, Role::Plain).unwrap()
    }

    #[test]
    fn bigon_sphere_counts() {
        let s = bigon_sphere(3).trace_faces();
        assert_eq!((s.vertices, s.edges, s.faces), (2, 3, 3));
        assert_eq!(s.euler, 2);
        assert!(s.orientable);
        assert_eq!(s.genus, 0);
        assert!(s.face_records.iter().all(|f| f.length == 2));
    }

    #[test]
    fn plus_faces_match_phi_orbits() {
        let g = bigon_sphere(5);
        let s = g.trace_faces();
        let orbits = g.phi_orbits();
        assert_eq!(orbits.len(), s.faces);
        for (orbit, face) in orbits.iter().zip(&s.face_records) {
            let darts: Vec<_> = face.cycle.iter().map(|&(d, _)| d).collect();
            assert_eq!(&darts, orbit);
            assert!(face.cycle.iter().all(|&(_, side)| side == Side::Plus));
        }
    }

    #[test]
    fn twisted_loop_is_projective_plane() {
        // One vertex, one twisted loop: the Möbius band capped off.
        let g = RibbonGraph::new(vec![1, 0], vec![1, 0], vec![true, true], Role::Plain).unwrap();
        let s = g.trace_faces();
        assert!(!s.orientable);
        assert_eq!((s.vertices, s.edges, s.faces), (1, 1, 1));
        assert_eq!(s.euler, 1);
        assert_eq!(s.genus, 1);
        let untwisted = RibbonGraph::new(vec![1, 0], vec![1, 0], vec![false; 2], Role::Plain)
            .unwrap()
            .trace_faces();
        assert_eq!(untwisted.euler, 2);
    }

    #[test]
    fn face_lengths_sum_to_twice_edges() {
        let g = RibbonGraph::new(
            vec![1, 2, 3, 0],
            vec![2, 3, 0, 1],
            vec![true, false, true, false],
            Role::Plain,
        )
        .unwrap();
        let s = g.trace_faces();
        let total: usize = s.face_records.iter().map(|f| f.length).sum();
        assert_eq!(total, 2 * s.edges);
        assert_eq!(s.vertices as i64 - s.edges as i64 + s.faces as i64, s.euler);
    }
}
