//! Cut-and-paste operations on football graphs, and the antipodal quotient and orientation
//! double cover relating the sphere to the projective plane.
//!
//! All operations return new graphs.

use serde::{Deserialize, Serialize};

use crate::catalog;
use crate::covers::CoveringMap;
use crate::error::{Error, Result};
use crate::ribbon::{Color, Dart, RibbonGraph};

/// Two white-white darts of [`catalog::gamma0`] whose edges share no endpoint; the
/// [`cross_join`] of their edges is a torus with two hexagonal faces. Found as the first
/// such pair in lexicographic order.
pub const CROSS_JOIN_FIXTURE: (Dart, Dart) = (0, 7);

/// A black vertex of [`catalog::gamma0`] (the one containing its smallest black dart),
/// listed with its second and third darts swapped; [`reorder_black`] with this order
/// merges faces into a single 9-gon on a torus.
pub const REORDER_BLACK_FIXTURE: [Dart; 5] = [61, 121, 91, 99, 71];

/// A surgery together with its arguments.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SurgerySpec {
    CrossJoin { a: Dart, b: Dart },
    ReorderBlack { order: Vec<Dart> },
    RotateWhites,
    HalfTwist { dart: Dart },
    AntipodalQuotient,
    OrientationDoubleCover,
}

impl SurgerySpec {
    /// Applies the surgery. `antipodal_quotient` ignores its input.
    pub fn apply(&self, g: &RibbonGraph) -> Result<RibbonGraph> {
        match self {
            SurgerySpec::CrossJoin { a, b } => cross_join(g, *a, *b),
            SurgerySpec::ReorderBlack { order } => reorder_black(g, order),
            SurgerySpec::RotateWhites => rotate_whites(g),
            SurgerySpec::HalfTwist { dart } => half_twist(g, *dart),
            SurgerySpec::AntipodalQuotient => antipodal_quotient(),
            SurgerySpec::OrientationDoubleCover => Ok(orientation_double_cover(g)?.graph),
        }
    }
}

fn check_dart(g: &RibbonGraph, d: Dart) -> Result<()> {
    if d >= g.num_darts() {
        return Err(Error::Surgery(format!("dart {d} out of range")));
    }
    Ok(())
}

fn alpha_vec(g: &RibbonGraph) -> (Vec<Dart>, Vec<bool>) {
    let alpha = g.alpha_slice().to_vec();
    let twist = g.darts().map(|d| g.is_twisted(d)).collect();
    (alpha, twist)
}

/// Re-pairs the edges `{a, ā}` and `{b, b̄}` as `{a, b̄}` and `{b, ā}`.
///
/// `b` is replaced by `b̄` when needed so that `a` and `b` have tails of the same color.
pub fn cross_join(g: &RibbonGraph, a: Dart, b: Dart) -> Result<RibbonGraph> {
    check_dart(g, a)?;
    check_dart(g, b)?;
    let b = if g.vertex_color(b) == g.vertex_color(a) { b } else { g.alpha(b) };
    let (abar, bbar) = (g.alpha(a), g.alpha(b));
    if b == a || b == abar {
        return Err(Error::Surgery("cross join needs two distinct edges".into()));
    }
    if g.vertex_color(a) != g.vertex_color(b) || g.vertex_color(abar) != g.vertex_color(bbar) {
        return Err(Error::Surgery("edges are of different color types".into()));
    }
    if g.is_twisted(a) != g.is_twisted(b) {
        return Err(Error::Surgery("edges differ in twist".into()));
    }
    let (mut alpha, twist) = alpha_vec(g);
    alpha[a] = bbar;
    alpha[bbar] = a;
    alpha[b] = abar;
    alpha[abar] = b;
    g.with_alpha(alpha, twist)
}

/// Replaces the cyclic order at a black vertex by `order`.
pub fn reorder_black(g: &RibbonGraph, order: &[Dart]) -> Result<RibbonGraph> {
    let first = *order
        .first()
        .ok_or_else(|| Error::Surgery("empty dart order".into()))?;
    check_dart(g, first)?;
    if g.vertex_color(first) != Color::Black {
        return Err(Error::Surgery(format!("dart {first} is not at a black vertex")));
    }
    let mut at_vertex = vec![first];
    let mut d = g.sigma(first);
    while d != first {
        at_vertex.push(d);
        d = g.sigma(d);
    }
    let mut given = order.to_vec();
    given.sort_unstable();
    at_vertex.sort_unstable();
    if given != at_vertex {
        return Err(Error::Surgery(
            "order is not a permutation of the vertex's darts".into(),
        ));
    }
    let mut sigma = g.sigma_slice().to_vec();
    for (i, &d) in order.iter().enumerate() {
        sigma[d] = order[(i + 1) % order.len()];
    }
    g.with_sigma(sigma)
}

/// At every white vertex `e1 … e6` (odd positions leading to black vertices), the new cyclic
/// order is `e1, e4, e3, e6, e5, e2`.
pub fn rotate_whites(g: &RibbonGraph) -> Result<RibbonGraph> {
    let mut sigma = g.sigma_slice().to_vec();
    for orbit in g.vertices() {
        if g.vertex_color(orbit[0]) != Color::White {
            continue;
        }
        let to_black = |d: Dart| g.vertex_color(g.alpha(d)) == Color::Black;
        let start = orbit.iter().position(|&d| to_black(d));
        let ok = orbit.len() == 6
            && start.is_some_and(|s| (0..6).all(|i| to_black(orbit[(s + i) % 6]) == (i % 2 == 0)));
        if !ok {
            return Err(Error::Surgery(format!(
                "white vertex at dart {} is not a football vertex",
                orbit[0]
            )));
        }
        let s = start.unwrap_or(0);
        let e = |i: usize| orbit[(s + i - 1) % 6];
        let new_order = [e(1), e(4), e(3), e(6), e(5), e(2)];
        for i in 0..6 {
            sigma[new_order[i]] = new_order[(i + 1) % 6];
        }
    }
    g.with_sigma(sigma)
}

/// Toggles the twist of the edge containing `dart`.
pub fn half_twist(g: &RibbonGraph, dart: Dart) -> Result<RibbonGraph> {
    check_dart(g, dart)?;
    let (alpha, mut twist) = alpha_vec(g);
    twist[dart] = !twist[dart];
    twist[alpha[dart]] = twist[dart];
    g.with_alpha(alpha, twist)
}

/// Extends `psi(start) = image` to a map with `psi sigma = sigma⁻¹ psi` and
/// `psi alpha = alpha psi` preserving vertex colors.
fn propagate_anti(g: &RibbonGraph, start: Dart, image: Dart) -> Option<Vec<Dart>> {
    let n = g.num_darts();
    let mut psi = vec![usize::MAX; n];
    psi[start] = image;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        let y = psi[x];
        if g.vertex_color(x) != g.vertex_color(y) {
            return None;
        }
        for (xs, ys) in [(g.sigma(x), g.sigma_inv(y)), (g.alpha(x), g.alpha(y))] {
            if psi[xs] == usize::MAX {
                psi[xs] = ys;
                stack.push(xs);
            } else if psi[xs] != ys {
                return None;
            }
        }
    }
    Some(psi)
}

/// Whether `psi` is an involution acting freely on darts, edges, vertices and faces.
fn is_free_involution(g: &RibbonGraph, psi: &[Dart]) -> bool {
    let vertex = g.vertex_index();
    let summary = g.trace_faces();
    let face = |d: Dart| summary.face_of(d, crate::ribbon::Side::Plus);
    g.darts().all(|d| {
        let p = psi[d];
        psi[p] == d
            && p != d
            && p != g.alpha(d)
            && vertex[p] != vertex[d]
            // The face of d is carried, reversed, onto the face containing alpha(psi d).
            && face(g.alpha(p)) != face(d)
    })
}

/// The first free orientation-reversing color-preserving involution of `g`, trying images
/// of dart 0 in increasing order.
pub fn find_antipodal_involution(g: &RibbonGraph) -> Result<Vec<Dart>> {
    if g.has_twists() || !g.is_connected() {
        return Err(Error::NoInvolution);
    }
    g.darts()
        .filter_map(|t| propagate_anti(g, 0, t))
        .find(|psi| is_free_involution(g, psi))
        .ok_or(Error::NoInvolution)
}

/// The quotient of `g` by a free involution reversing orientation.
///
/// Of each pair of swapped vertices, the one containing the smaller dart is kept. Edges
/// whose far end lands on a discarded vertex are redirected through `psi` and twisted.
pub fn quotient_by(g: &RibbonGraph, psi: &[Dart]) -> Result<RibbonGraph> {
    let vertex = g.vertex_index();
    let orbits = g.vertices();
    let keep_vertex: Vec<bool> = orbits
        .iter()
        .map(|orbit| orbit[0] < orbits[vertex[psi[orbit[0]]]][0])
        .collect();
    let kept: Vec<Dart> = g.darts().filter(|&d| keep_vertex[vertex[d]]).collect();
    let mut new_id = vec![usize::MAX; g.num_darts()];
    for (i, &d) in kept.iter().enumerate() {
        new_id[d] = i;
    }
    let m = kept.len();
    let mut sigma = vec![0; m];
    let mut alpha = vec![0; m];
    let mut twist = vec![false; m];
    let mut colors = vec![Color::None; m];
    for (i, &d) in kept.iter().enumerate() {
        sigma[i] = new_id[g.sigma(d)];
        let e = g.alpha(d);
        if keep_vertex[vertex[e]] {
            alpha[i] = new_id[e];
        } else {
            alpha[i] = new_id[psi[e]];
            twist[i] = true;
        }
        colors[i] = g.vertex_color(d);
    }
    if sigma.iter().chain(&alpha).any(|&x| x == usize::MAX) {
        return Err(Error::Surgery("involution does not pair kept and discarded vertices".into()));
    }
    RibbonGraph::new(sigma, alpha, twist, g.role())?.with_vertex_colors(colors)
}

/// The standard football graph divided by its antipodal map: a football graph on the
/// projective plane with `b = 6`, `w = 10`.
pub fn antipodal_quotient() -> Result<RibbonGraph> {
    let g = catalog::gamma0();
    let psi = find_antipodal_involution(&g)?;
    quotient_by(&g, &psi)
}

/// Orientation double cover with its degree-2 projection.
#[derive(Debug, Clone)]
pub struct DoubleCover {
    pub graph: RibbonGraph,
    pub covering: CoveringMap,
    /// False exactly when the base is orientable (the cover is then two copies).
    pub connected: bool,
}

/// Darts `(d, +) = d` and `(d, −) = N + d`; the minus sheet carries the reversed rotation
/// and twisted edges cross between sheets.
pub fn orientation_double_cover(g: &RibbonGraph) -> Result<DoubleCover> {
    let n = g.num_darts();
    let mut sigma = vec![0; 2 * n];
    let mut alpha = vec![0; 2 * n];
    let mut colors = vec![Color::None; 2 * n];
    for d in 0..n {
        let cross = if g.is_twisted(d) { n } else { 0 };
        sigma[d] = g.sigma(d);
        sigma[n + d] = n + g.sigma_inv(d);
        alpha[d] = (g.alpha(d) + cross) % (2 * n);
        alpha[n + d] = (n + g.alpha(d) + cross) % (2 * n);
        colors[d] = g.vertex_color(d);
        colors[n + d] = g.vertex_color(d);
    }
    let graph = RibbonGraph::from_permutations(sigma, alpha, g.role())?.with_vertex_colors(colors)?;
    let connected = graph.is_connected();
    let dart_map = (0..2 * n).map(|x| x % n).collect();
    let reversed = (0..2 * n).map(|x| x >= n).collect();
    let covering = CoveringMap::new(graph.clone(), g.clone(), dart_map, reversed);
    Ok(DoubleCover {
        graph,
        covering,
        connected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covers::verify_covering;

    #[test]
    fn half_twist_is_an_involution() {
        let g = catalog::gamma0();
        let t = half_twist(&g, 5).unwrap();
        assert!(!t.is_orientable());
        assert_eq!(half_twist(&t, g.alpha(5)).unwrap(), g);
    }

    #[test]
    fn identity_reorder_is_unchanged() {
        let g = catalog::gamma0();
        let black = g.vertices().into_iter().find(|v| g.vertex_color(v[0]) == Color::Black).unwrap();
        assert_eq!(reorder_black(&g, &black).unwrap(), g);
        assert!(reorder_black(&g, &black[..4]).is_err());
    }

    #[test]
    fn cross_join_rejects_mixed_types() {
        let g = catalog::gamma0();
        let ww = g
            .darts()
            .find(|&d| g.vertex_color(d) == Color::White && g.vertex_color(g.alpha(d)) == Color::White)
            .unwrap();
        let bw = g.darts().find(|&d| g.vertex_color(d) == Color::Black).unwrap();
        assert!(matches!(cross_join(&g, ww, bw), Err(Error::Surgery(_))));
    }

    #[test]
    fn double_cover_of_orientable_graph_splits() {
        let g = catalog::gamma0();
        let cover = orientation_double_cover(&g).unwrap();
        assert!(!cover.connected);
        assert_eq!(cover.graph.components().len(), 2);
        assert!(verify_covering(&cover.covering).passed);
    }
}
