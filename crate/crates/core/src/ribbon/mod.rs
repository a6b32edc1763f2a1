//! Colored ribbon graphs (signed rotation systems).
//!
//! A graph lives on a set of darts `0..n`. `sigma` rotates darts counterclockwise around
//! their vertex, `alpha` pairs the two darts of an edge, and each edge carries a twist
//! flag. Faces are traced from these three pieces of data; without twists they are the
//! orbits of `sigma ∘ alpha`.
//!
//! Colors are stored per dart. A vertex color is constant on a `sigma`-orbit; the face
//! color of dart `d` is the color of the face containing the side state `(d, +)`.

mod build;
mod counts;
mod faces;
mod iso;
mod ops;
mod validate;

pub use build::FaceListBuilder;
pub use counts::CountsReport;
pub use faces::{Face, Side, SurfaceSummary};
pub use iso::{canonical_form, is_isomorphic};
pub use validate::{validate, ValidationReport, Violation};

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Dart = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    None,
    Black,
    White,
}

impl Color {
    pub fn swapped(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
            Color::None => Color::None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Color::None => "none",
            Color::Black => "black",
            Color::White => "white",
        }
    }

    pub(crate) fn code(self) -> u8 {
        match self {
            Color::None => 0,
            Color::Black => 1,
            Color::White => 2,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// What the colors of a graph are attached to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    /// A pattern: colors live on faces.
    Pattern,
    /// The dual of a pattern: colors live on vertices.
    Dual,
    Plain,
}

impl Role {
    pub fn toggled(self) -> Role {
        match self {
            Role::Pattern => Role::Dual,
            Role::Dual => Role::Pattern,
            Role::Plain => Role::Plain,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Role::Pattern => "pattern",
            Role::Dual => "dual",
            Role::Plain => "plain",
        }
    }
}

/// The triple `(k, l, n)`: black `k`-gons, white `l`-gons, every `n`-th white edge meets black.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PatternType {
    pub k: usize,
    pub l: usize,
    pub n: usize,
}

impl PatternType {
    pub fn new(k: usize, l: usize, n: usize) -> Result<Self> {
        let invalid = |reason| Error::InvalidType { k, l, n, reason };
        if k < 3 {
            return Err(invalid("k must be at least 3"));
        }
        if l < 3 {
            return Err(invalid("l must be at least 3"));
        }
        if n == 0 || l % n != 0 {
            return Err(invalid("n must divide l"));
        }
        Ok(PatternType { k, l, n })
    }

    /// The standard football type `(5, 6, 2)`.
    pub fn football() -> Self {
        PatternType { k: 5, l: 6, n: 2 }
    }

    pub fn m(&self) -> usize {
        self.l / self.n
    }
}

impl fmt::Display for PatternType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.k, self.l, self.n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RibbonGraph {
    sigma: Vec<Dart>,
    sigma_inv: Vec<Dart>,
    alpha: Vec<Dart>,
    twist: Vec<bool>,
    vertex_color: Vec<Color>,
    face_color: Vec<Color>,
    role: Role,
}

fn check_permutation(p: &[Dart], what: &str) -> Result<Vec<Dart>> {
    let n = p.len();
    let mut inv = vec![usize::MAX; n];
    for (d, &img) in p.iter().enumerate() {
        if img >= n {
            return Err(Error::Malformed(format!("{what}({d}) = {img} out of range")));
        }
        if inv[img] != usize::MAX {
            return Err(Error::Malformed(format!("{what} is not a permutation at {img}")));
        }
        inv[img] = d;
    }
    Ok(inv)
}

impl RibbonGraph {
    /// Builds an uncolored graph, checking the structural invariants.
    ///
    /// `twist` is indexed by dart and must agree on both darts of every edge.
    pub fn new(sigma: Vec<Dart>, alpha: Vec<Dart>, twist: Vec<bool>, role: Role) -> Result<Self> {
        let n = sigma.len();
        if n < 2 || n % 2 != 0 {
            return Err(Error::Malformed(format!("dart count {n} must be even and at least 2")));
        }
        if alpha.len() != n || twist.len() != n {
            return Err(Error::Malformed("sigma, alpha and twist lengths differ".into()));
        }
        let sigma_inv = check_permutation(&sigma, "sigma")?;
        check_permutation(&alpha, "alpha")?;
        for d in 0..n {
            let a = alpha[d];
            if a == d {
                return Err(Error::Malformed(format!("alpha fixes dart {d}")));
            }
            if alpha[a] != d {
                return Err(Error::Malformed(format!("alpha is not an involution at {d}")));
            }
            if twist[a] != twist[d] {
                return Err(Error::Malformed(format!("twist differs across edge of dart {d}")));
            }
        }
        Ok(RibbonGraph {
            sigma,
            sigma_inv,
            alpha,
            twist,
            vertex_color: vec![Color::None; n],
            face_color: vec![Color::None; n],
            role,
        })
    }

    /// Untwisted graph from a rotation and an edge pairing.
    pub fn from_permutations(sigma: Vec<Dart>, alpha: Vec<Dart>, role: Role) -> Result<Self> {
        let n = sigma.len();
        Self::new(sigma, alpha, vec![false; n], role)
    }

    pub fn num_darts(&self) -> usize {
        self.sigma.len()
    }

    pub fn darts(&self) -> std::ops::Range<Dart> {
        0..self.sigma.len()
    }

    #[inline]
    pub fn sigma(&self, d: Dart) -> Dart {
        self.sigma[d]
    }

    #[inline]
    pub fn sigma_inv(&self, d: Dart) -> Dart {
        self.sigma_inv[d]
    }

    #[inline]
    pub fn alpha(&self, d: Dart) -> Dart {
        self.alpha[d]
    }

    /// `sigma ∘ alpha`, the face permutation of an untwisted graph.
    #[inline]
    pub fn phi(&self, d: Dart) -> Dart {
        self.sigma[self.alpha[d]]
    }

    #[inline]
    pub fn is_twisted(&self, d: Dart) -> bool {
        self.twist[d]
    }

    pub fn has_twists(&self) -> bool {
        self.twist.iter().any(|&t| t)
    }

    pub fn role(&self) -> Role {
        self.role
    }

    #[inline]
    pub fn vertex_color(&self, d: Dart) -> Color {
        self.vertex_color[d]
    }

    #[inline]
    pub fn face_color(&self, d: Dart) -> Color {
        self.face_color[d]
    }

    pub fn sigma_slice(&self) -> &[Dart] {
        &self.sigma
    }

    pub fn alpha_slice(&self) -> &[Dart] {
        &self.alpha
    }

    pub fn with_role(mut self, role: Role) -> Self {
        self.role = role;
        self
    }

    /// Sets vertex colors from a per-dart assignment, which must be constant on vertices.
    pub fn with_vertex_colors(mut self, colors: Vec<Color>) -> Result<Self> {
        if colors.len() != self.num_darts() {
            return Err(Error::Malformed("vertex color length mismatch".into()));
        }
        for d in self.darts() {
            if colors[self.sigma[d]] != colors[d] {
                return Err(Error::Malformed(format!("vertex color not constant at dart {d}")));
            }
        }
        self.vertex_color = colors;
        Ok(self)
    }

    /// Sets face colors from a per-dart assignment (color of the face holding `(d, +)`).
    pub fn with_face_colors(mut self, colors: Vec<Color>) -> Result<Self> {
        if colors.len() != self.num_darts() {
            return Err(Error::Malformed("face color length mismatch".into()));
        }
        let summary = self.trace_faces();
        for face in &summary.face_records {
            let first = colors[face.plus_darts[0]];
            if face.plus_darts.iter().any(|&d| colors[d] != first) {
                return Err(Error::Malformed(format!(
                    "face color not constant on face {}",
                    face.index
                )));
            }
        }
        self.face_color = colors;
        Ok(self)
    }

    /// Colors every face by evaluating `color_of` on the dart list of the face.
    pub fn color_faces_by(mut self, color_of: impl Fn(&Face) -> Color) -> Self {
        let summary = self.trace_faces();
        let mut colors = vec![Color::None; self.num_darts()];
        for face in &summary.face_records {
            let c = color_of(face);
            for &d in &face.plus_darts {
                colors[d] = c;
            }
        }
        self.face_color = colors;
        self
    }

    /// Assigns a color to each vertex (indexed as in [`RibbonGraph::vertices`]).
    pub fn color_vertices_by(mut self, color_of: impl Fn(usize, &[Dart]) -> Color) -> Self {
        let mut colors = vec![Color::None; self.num_darts()];
        for (i, orbit) in self.vertices().iter().enumerate() {
            let c = color_of(i, orbit);
            for &d in orbit {
                colors[d] = c;
            }
        }
        self.vertex_color = colors;
        self
    }

    pub fn clear_colors(mut self) -> Self {
        self.vertex_color.fill(Color::None);
        self.face_color.fill(Color::None);
        self
    }

    /// Exchanges black and white on both vertices and faces.
    pub fn swap_colors(mut self) -> Self {
        for c in self.vertex_color.iter_mut().chain(self.face_color.iter_mut()) {
            *c = c.swapped();
        }
        self
    }

    /// Vertices as `sigma`-orbits, ordered by smallest dart, each starting at its smallest dart.
    pub fn vertices(&self) -> Vec<Vec<Dart>> {
        let n = self.num_darts();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut d = start;
            loop {
                seen[d] = true;
                orbit.push(d);
                d = self.sigma[d];
                if d == start {
                    break;
                }
            }
            out.push(orbit);
        }
        out
    }

    /// Index into [`RibbonGraph::vertices`] for every dart.
    pub fn vertex_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.num_darts()];
        for (i, orbit) in self.vertices().iter().enumerate() {
            for &d in orbit {
                idx[d] = i;
            }
        }
        idx
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices().len()
    }

    pub fn num_edges(&self) -> usize {
        self.num_darts() / 2
    }

    /// Number of darts in the vertex of `d`.
    pub fn valence(&self, d: Dart) -> usize {
        let mut len = 1;
        let mut x = self.sigma[d];
        while x != d {
            len += 1;
            x = self.sigma[x];
        }
        len
    }

    /// Edges as `(smaller dart, larger dart)`, sorted.
    pub fn edges(&self) -> Vec<(Dart, Dart)> {
        self.darts()
            .filter(|&d| d < self.alpha[d])
            .map(|d| (d, self.alpha[d]))
            .collect()
    }

    /// Connected components as sorted dart lists, ordered by smallest dart.
    pub fn components(&self) -> Vec<Vec<Dart>> {
        let n = self.num_darts();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(d) = queue.pop_front() {
                for next in [self.sigma[d], self.alpha[d]] {
                    if comp[next] == usize::MAX {
                        comp[next] = id;
                        members.push(next);
                        queue.push_back(next);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// A local-orientation bit per dart (constant on vertices) such that the bits across an
    /// edge differ exactly when the edge is twisted, or `None` when no such assignment exists.
    pub fn orientation(&self) -> Option<Vec<bool>> {
        let n = self.num_darts();
        let mut bit: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if bit[start].is_some() {
                continue;
            }
            bit[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(d) = queue.pop_front() {
                let b = bit[d].expect("queued darts carry a bit");
                let s = self.sigma[d];
                let a = self.alpha[d];
                for (next, want) in [(s, b), (a, b ^ self.twist[d])] {
                    match bit[next] {
                        None => {
                            bit[next] = Some(want);
                            queue.push_back(next);
                        }
                        Some(have) if have != want => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(bit.into_iter().map(|b| b.unwrap_or(false)).collect())
    }

    pub fn is_orientable(&self) -> bool {
        self.orientation().is_some()
    }

    /// An equivalent graph without twists, obtained by flipping the local orientation of
    /// vertices. Fails on non-orientable graphs. Face colors are carried along.
    pub fn untwist(&self) -> Result<RibbonGraph> {
        if !self.has_twists() {
            return Ok(self.clone());
        }
        let bits = self
            .orientation()
            .ok_or(Error::NonOrientable("untwisting"))?;
        let n = self.num_darts();
        let summary = self.trace_faces();
        let mut sigma = self.sigma.clone();
        for d in 0..n {
            if bits[d] {
                sigma[d] = self.sigma_inv[d];
            }
        }
        let mut g = RibbonGraph::new(sigma, self.alpha.clone(), vec![false; n], self.role)?
            .with_vertex_colors(self.vertex_color.clone())?;
        if self.face_color.iter().any(|&c| c != Color::None) {
            // A flipped dart sees its old (d, -) face on its new + side.
            let mut colors = vec![Color::None; n];
            for d in 0..n {
                let side = if bits[d] { Side::Minus } else { Side::Plus };
                let face = &summary.face_records[summary.face_of(d, side)];
                colors[d] = self.face_color[face.plus_darts[0]];
            }
            g = g.with_face_colors(colors)?;
        }
        Ok(g)
    }

    /// The mirror image: every rotation reversed.
    pub fn reflect(&self) -> RibbonGraph {
        let n = self.num_darts();
        let face_color = (0..n)
            .map(|d| {
                if self.twist[d] {
                    self.face_color[self.phi(d)]
                } else {
                    self.face_color[self.alpha[d]]
                }
            })
            .collect();
        RibbonGraph {
            sigma: self.sigma_inv.clone(),
            sigma_inv: self.sigma.clone(),
            alpha: self.alpha.clone(),
            twist: self.twist.clone(),
            vertex_color: self.vertex_color.clone(),
            face_color,
            role: self.role,
        }
    }

    /// Renames dart `d` to `perm[d]`.
    pub fn relabel(&self, perm: &[Dart]) -> Result<RibbonGraph> {
        let n = self.num_darts();
        if perm.len() != n {
            return Err(Error::Malformed("relabeling has wrong length".into()));
        }
        check_permutation(perm, "relabeling")?;
        let mut sigma = vec![0; n];
        let mut alpha = vec![0; n];
        let mut twist = vec![false; n];
        let mut vc = vec![Color::None; n];
        let mut fc = vec![Color::None; n];
        for d in 0..n {
            let p = perm[d];
            sigma[p] = perm[self.sigma[d]];
            alpha[p] = perm[self.alpha[d]];
            twist[p] = self.twist[d];
            vc[p] = self.vertex_color[d];
            fc[p] = self.face_color[d];
        }
        let sigma_inv = check_permutation(&sigma, "sigma")?;
        Ok(RibbonGraph {
            sigma,
            sigma_inv,
            alpha,
            twist,
            vertex_color: vc,
            face_color: fc,
            role: self.role,
        })
    }

    /// The subgraph on a set of darts closed under `sigma` and `alpha`, renumbered in the
    /// order given. Returns the graph and the map from new darts to old darts.
    pub fn restrict(&self, darts: &[Dart]) -> Result<(RibbonGraph, Vec<Dart>)> {
        let mut new_id = vec![usize::MAX; self.num_darts()];
        for (i, &d) in darts.iter().enumerate() {
            new_id[d] = i;
        }
        let m = darts.len();
        let mut sigma = vec![0; m];
        let mut alpha = vec![0; m];
        let mut twist = vec![false; m];
        let mut vc = vec![Color::None; m];
        let mut fc = vec![Color::None; m];
        for (i, &d) in darts.iter().enumerate() {
            let (s, a) = (new_id[self.sigma[d]], new_id[self.alpha[d]]);
            if s == usize::MAX || a == usize::MAX {
                return Err(Error::Malformed("dart set is not closed".into()));
            }
            sigma[i] = s;
            alpha[i] = a;
            twist[i] = self.twist[d];
            vc[i] = self.vertex_color[d];
            fc[i] = self.face_color[d];
        }
        let mut g = RibbonGraph::new(sigma, alpha, twist, self.role)?;
        g.vertex_color = vc;
        g.face_color = fc;
        Ok((g, darts.to_vec()))
    }

    /// Splits into connected components (see [`RibbonGraph::restrict`]).
    pub fn split_components(&self) -> Vec<(RibbonGraph, Vec<Dart>)> {
        self.components()
            .iter()
            .map(|c| self.restrict(c).expect("components are closed"))
            .collect()
    }

    /// Replaces the rotation, keeping edges, twists and vertex colors. The new rotation
    /// must have the same vertex partition.
    pub fn with_sigma(&self, sigma: Vec<Dart>) -> Result<RibbonGraph> {
        let g = RibbonGraph::new(sigma, self.alpha.clone(), self.twist.clone(), self.role)?;
        g.with_vertex_colors(self.vertex_color.clone())
    }

    /// Replaces the edge pairing and twists, keeping rotation and vertex colors.
    pub fn with_alpha(&self, alpha: Vec<Dart>, twist: Vec<bool>) -> Result<RibbonGraph> {
        let g = RibbonGraph::new(self.sigma.clone(), alpha, twist, self.role)?;
        g.with_vertex_colors(self.vertex_color.clone())
    }

    pub(crate) fn raw_parts(&self) -> (&[Dart], &[Dart], &[bool], &[Color], &[Color]) {
        (
            &self.sigma,
            &self.alpha,
            &self.twist,
            &self.vertex_color,
            &self.face_color,
        )
    }
}
