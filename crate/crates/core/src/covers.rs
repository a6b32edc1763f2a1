//! Covering maps between colored ribbon graphs.
//!
//! A covering of dual graphs is a branched covering of the underlying surfaces, branched
//! only at face centers (the vertices of the pattern). A map is stored at dart level,
//! together with a per-dart flag recording whether it reverses local orientation; the flag
//! is needed for coverings of non-orientable graphs by their orientation double cover.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::ribbon::{Dart, RibbonGraph, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchRecord {
    pub source_face: usize,
    pub target_face: usize,
    pub source_length: usize,
    pub target_length: usize,
    /// `source_length / target_length`, or 0 when that is not an integer.
    pub order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringMap {
    pub source: RibbonGraph,
    pub target: RibbonGraph,
    pub dart_map: Vec<Dart>,
    /// Per source dart, whether the map reverses local orientation there.
    pub reversed: Vec<bool>,
    pub degree: usize,
    pub branches: Vec<BranchRecord>,
}

impl CoveringMap {
    /// Wraps a dart map, deriving degree and the per-face branch report.
    pub fn new(
        source: RibbonGraph,
        target: RibbonGraph,
        dart_map: Vec<Dart>,
        reversed: Vec<bool>,
    ) -> CoveringMap {
        let degree = source.num_darts() / target.num_darts().max(1);
        let src = source.trace_faces();
        let tgt = target.trace_faces();
        let branches = src
            .face_records
            .iter()
            .map(|face| {
                let (d, s) = face.cycle[0];
                let side = match (s, reversed.get(d).copied().unwrap_or(false)) {
                    (Side::Plus, false) | (Side::Minus, true) => Side::Plus,
                    _ => Side::Minus,
                };
                let image = dart_map.get(d).copied().unwrap_or(0).min(target.num_darts() - 1);
                let target_face = tgt.face_of(image, side);
                let target_length = tgt.face_records[target_face].length;
                BranchRecord {
                    source_face: face.index,
                    target_face,
                    source_length: face.length,
                    target_length,
                    order: if face.length % target_length == 0 {
                        face.length / target_length
                    } else {
                        0
                    },
                }
            })
            .collect();
        CoveringMap {
            source,
            target,
            dart_map,
            reversed,
            degree,
            branches,
        }
    }

    /// Source faces with branch order above 1.
    pub fn branch_points(&self) -> Vec<&BranchRecord> {
        self.branches.iter().filter(|b| b.order > 1).collect()
    }

    /// `other ∘ self`, for `self: G → H` and `other: H → K`.
    pub fn then(&self, other: &CoveringMap) -> Result<CoveringMap> {
        if self.target != other.source {
            return Err(Error::Malformed("coverings do not compose".into()));
        }
        let dart_map = self.dart_map.iter().map(|&y| other.dart_map[y]).collect();
        let reversed = self
            .dart_map
            .iter()
            .zip(&self.reversed)
            .map(|(&y, &r)| r ^ other.reversed[y])
            .collect();
        Ok(CoveringMap::new(
            self.source.clone(),
            other.target.clone(),
            dart_map,
            reversed,
        ))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoveringReport {
    pub degree: usize,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl CoveringReport {
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Re-checks every covering invariant and itemizes the results.
pub fn verify_covering(c: &CoveringMap) -> CoveringReport {
    let (src, tgt) = (&c.source, &c.target);
    let n = src.num_darts();
    let mut checks = Vec::new();
    let mut push = |name, failure: Option<String>| {
        checks.push(Check {
            name,
            passed: failure.is_none(),
            detail: failure.unwrap_or_default(),
        })
    };

    let total = c.dart_map.len() == n
        && c.reversed.len() == n
        && c.dart_map.iter().all(|&y| y < tgt.num_darts());
    push("total", (!total).then(|| "dart map is not a total map into the target".into()));
    if !total {
        return CoveringReport {
            degree: c.degree,
            passed: false,
            checks,
        };
    }
    let map = &c.dart_map;
    let rev = &c.reversed;

    let rotate = |y: Dart, reversed: bool| if reversed { tgt.sigma_inv(y) } else { tgt.sigma(y) };
    let bad_sigma = (0..n).find(|&x| {
        rev[src.sigma(x)] != rev[x] || map[src.sigma(x)] != rotate(map[x], rev[x])
    });
    push("sigma", bad_sigma.map(|x| format!("rotation not preserved at dart {x}")));

    let bad_alpha = (0..n).find(|&x| {
        map[src.alpha(x)] != tgt.alpha(map[x])
            || rev[src.alpha(x)] != rev[x] ^ src.is_twisted(x) ^ tgt.is_twisted(map[x])
    });
    push("alpha", bad_alpha.map(|x| format!("edge pairing not preserved at dart {x}")));

    let bad_color = (0..n).find(|&x| src.vertex_color(x) != tgt.vertex_color(map[x]));
    push("colors", bad_color.map(|x| format!("vertex color differs at dart {x}")));

    let mut fiber = vec![0usize; tgt.num_darts()];
    for &y in map {
        fiber[y] += 1;
    }
    let uneven = fiber.iter().position(|&f| f != c.degree);
    push(
        "fibers",
        uneven.map(|y| format!("target dart {y} has {} preimages, expected {}", fiber[y], c.degree)),
    );

    let bad_branch = c.branches.iter().find(|b| b.order == 0);
    push(
        "branch_orders",
        bad_branch.map(|b| {
            format!(
                "face {} of length {} over length {}",
                b.source_face, b.source_length, b.target_length
            )
        }),
    );

    let chi_src = src.trace_faces().euler;
    let chi_tgt = tgt.trace_faces().euler;
    let excess: i64 = c.branches.iter().map(|b| b.order as i64 - 1).sum();
    let expected = c.degree as i64 * chi_tgt - excess;
    push(
        "riemann_hurwitz",
        (chi_src != expected).then(|| format!("χ = {chi_src}, degree·χ' − Σ(order−1) = {expected}")),
    );

    let passed = checks.iter().all(|c| c.passed);
    CoveringReport {
        degree: c.degree,
        passed,
        checks,
    }
}

fn require_searchable(g: &RibbonGraph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.has_twists() {
        return Err(Error::NonOrientable("covering search needs untwisted graphs"));
    }
    Ok(())
}

/// Extends `map[start] = image` equivariantly; `None` on any conflict.
fn propagate(g: &RibbonGraph, h: &RibbonGraph, start: Dart, image: Dart) -> Option<Vec<Dart>> {
    let mut map = vec![usize::MAX; g.num_darts()];
    if g.vertex_color(start) != h.vertex_color(image) {
        return None;
    }
    map[start] = image;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        let y = map[x];
        for (xs, ys) in [(g.sigma(x), h.sigma(y)), (g.alpha(x), h.alpha(y))] {
            if map[xs] == usize::MAX {
                if g.vertex_color(xs) != h.vertex_color(ys) {
                    return None;
                }
                map[xs] = ys;
                stack.push(xs);
            } else if map[xs] != ys {
                return None;
            }
        }
    }
    Some(map)
}

/// Searches for a color-preserving covering `G → H`, trying each image of dart 0 in order.
pub fn find_covering(g: &RibbonGraph, h: &RibbonGraph) -> Result<Option<CoveringMap>> {
    require_searchable(g)?;
    require_searchable(h)?;
    if g.num_darts() % h.num_darts() != 0 {
        return Ok(None);
    }
    for image in h.darts() {
        if let Some(map) = propagate(g, h, 0, image) {
            let n = g.num_darts();
            return Ok(Some(CoveringMap::new(g.clone(), h.clone(), map, vec![false; n])));
        }
    }
    Ok(None)
}

/// The identity covering of a graph onto itself.
pub fn identity_covering(g: &RibbonGraph) -> CoveringMap {
    let n = g.num_darts();
    CoveringMap::new(g.clone(), g.clone(), (0..n).collect(), vec![false; n])
}

fn check_voltages(g: &RibbonGraph, degree: usize, volt: &[Perm]) -> Result<()> {
    if degree == 0 {
        return Err(Error::Voltage("degree must be positive".into()));
    }
    if volt.len() != g.num_darts() {
        return Err(Error::Voltage(format!(
            "{} voltages for {} darts",
            volt.len(),
            g.num_darts()
        )));
    }
    for d in g.darts() {
        if volt[d].len() != degree {
            return Err(Error::Voltage(format!("voltage of dart {d} has wrong degree")));
        }
        if volt[g.alpha(d)] != volt[d].inverse() {
            return Err(Error::Voltage(format!(
                "voltage of dart {} is not the inverse of dart {d}",
                g.alpha(d)
            )));
        }
    }
    Ok(())
}

/// Uniformly random voltages, consistent across each edge.
pub fn random_voltages<R: Rng + ?Sized>(g: &RibbonGraph, degree: usize, rng: &mut R) -> Vec<Perm> {
    let mut volt = vec![Perm::identity(degree); g.num_darts()];
    for (a, b) in g.edges() {
        let p = Perm::random(degree, rng);
        volt[b] = p.inverse();
        volt[a] = p;
    }
    volt
}

/// Voltages that are trivial except for one edge.
pub fn single_edge_voltages(g: &RibbonGraph, dart: Dart, p: Perm) -> Vec<Perm> {
    let mut volt = vec![Perm::identity(p.len()); g.num_darts()];
    volt[g.alpha(dart)] = p.inverse();
    volt[dart] = p;
    volt
}

/// The permutation-voltage lift, split into connected components with their projections.
///
/// Lifted dart `(d, i)` has `sigma (d, i) = (sigma d, i)` and `alpha (d, i) = (alpha d, v_d(i))`.
pub fn voltage_lift(
    g: &RibbonGraph,
    degree: usize,
    volt: &[Perm],
) -> Result<Vec<(RibbonGraph, CoveringMap)>> {
    if g.has_twists() {
        return Err(Error::NonOrientable("voltage lifts need untwisted graphs"));
    }
    check_voltages(g, degree, volt)?;
    let n = g.num_darts();
    let lift = |d: Dart, i: usize| i * n + d;
    let mut sigma = vec![0; n * degree];
    let mut alpha = vec![0; n * degree];
    let mut vcolor = vec![crate::ribbon::Color::None; n * degree];
    for i in 0..degree {
        for d in 0..n {
            sigma[lift(d, i)] = lift(g.sigma(d), i);
            alpha[lift(d, i)] = lift(g.alpha(d), volt[d].apply(i));
            vcolor[lift(d, i)] = g.vertex_color(d);
        }
    }
    let big = RibbonGraph::from_permutations(sigma, alpha, g.role())?.with_vertex_colors(vcolor)?;
    Ok(big
        .split_components()
        .into_iter()
        .map(|(component, old)| {
            let map = old.iter().map(|&x| x % n).collect();
            let m = component.num_darts();
            let cover = CoveringMap::new(component.clone(), g.clone(), map, vec![false; m]);
            (component, cover)
        })
        .collect())
}

/// Per face of `g` (in trace order), the cycle lengths of the voltage product around it.
/// These are the branch orders of the lifted faces above that face.
pub fn face_voltage_branching(g: &RibbonGraph, volt: &[Perm]) -> Vec<Vec<usize>> {
    let degree = volt.first().map_or(0, Perm::len);
    g.phi_orbits()
        .iter()
        .map(|face| {
            let product = face
                .iter()
                .fold(Perm::identity(degree), |acc, &d| volt[d].after(&acc));
            let mut lengths = product.cycle_lengths();
            lengths.sort_unstable();
            lengths
        })
        .collect()
}
