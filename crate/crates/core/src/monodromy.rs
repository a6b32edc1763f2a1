//! Permutation encodings of `(k, 2m, 2)` football graphs.
//!
//! The ground set `X` is the set of black-white edges, indexed by their black darts in
//! increasing order. Three permutations act on it:
//!
//! * `t`: the next edge around the black endpoint (order `k`);
//! * `s`: the edge two steps onward around the white endpoint (order `m`);
//! * `r`: the edge met by crossing the white-white edge that follows (an involution).

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::covers::CoveringMap;
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::ribbon::{validate, Color, Dart, PatternType, RibbonGraph, Role};

/// Largest group enumerated element by element.
pub const ELEMENT_CAP: usize = 200_000;
/// Default cap on `|X|` for group computations.
pub const DEFAULT_POINT_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonodromyEncoding {
    pub k: usize,
    pub m: usize,
    pub r: Perm,
    pub s: Perm,
    pub t: Perm,
}

impl MonodromyEncoding {
    pub fn size(&self) -> usize {
        self.t.len()
    }

    /// Orders of `(r, s, t)`.
    pub fn orders(&self) -> (usize, usize, usize) {
        (self.r.order(), self.s.order(), self.t.order())
    }

    fn generators(&self) -> [&Perm; 3] {
        [&self.r, &self.s, &self.t]
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.size();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for g in self.generators() {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == n
    }

    /// Checks sizes, cycle types and the involution property.
    pub fn check(&self) -> Result<()> {
        let n = self.size();
        if n == 0 || self.r.len() != n || self.s.len() != n {
            return Err(Error::Monodromy("permutations act on different sets".into()));
        }
        if self.r.cycle_lengths().iter().any(|&c| c != 2) {
            return Err(Error::Monodromy("r is not a fixed-point-free involution".into()));
        }
        if self.s.cycle_lengths().iter().any(|&c| c != self.m) {
            return Err(Error::Monodromy(format!("s has a cycle of length other than m = {}", self.m)));
        }
        if self.t.cycle_lengths().iter().any(|&c| c != self.k) {
            return Err(Error::Monodromy(format!("t has a cycle of length other than k = {}", self.k)));
        }
        Ok(())
    }
}

/// Encodes a connected, untwisted, valid `(k, 2m, 2)` dual graph.
pub fn encode(g: &RibbonGraph) -> Result<MonodromyEncoding> {
    if g.has_twists() {
        return Err(Error::NonOrientable("monodromy encoding"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let black = g
        .darts()
        .find(|&d| g.vertex_color(d) == Color::Black)
        .ok_or_else(|| Error::Monodromy("no black vertex".into()))?;
    let white = g
        .darts()
        .find(|&d| g.vertex_color(d) == Color::White)
        .ok_or_else(|| Error::Monodromy("no white vertex".into()))?;
    let k = g.valence(black);
    let l = g.valence(white);
    let t = PatternType::new(k, l, 2)?;
    let report = validate(&g.clone().with_role(Role::Dual), t)?;
    if !report.valid {
        return Err(Error::Monodromy(format!(
            "not a valid {t} graph: {}",
            report.violations[0]
        )));
    }

    let blacks: Vec<Dart> = g.darts().filter(|&d| g.vertex_color(d) == Color::Black).collect();
    let mut index = vec![usize::MAX; g.num_darts()];
    for (x, &d) in blacks.iter().enumerate() {
        index[d] = x;
    }
    let mut r = Vec::with_capacity(blacks.len());
    let mut s = Vec::with_capacity(blacks.len());
    let mut tt = Vec::with_capacity(blacks.len());
    for &b in &blacks {
        let w = g.alpha(b);
        tt.push(index[g.sigma(b)]);
        s.push(index[g.alpha(g.sigma(g.sigma(w)))]);
        let across = g.alpha(g.sigma(w));
        r.push(index[g.alpha(g.sigma_inv(across))]);
    }
    let enc = MonodromyEncoding {
        k,
        m: t.m(),
        r: Perm::from_images(r)?,
        s: Perm::from_images(s)?,
        t: Perm::from_images(tt)?,
    };
    enc.check()?;
    Ok(enc)
}

/// Rebuilds the dual graph: `B_x = x`, `W_x = |X| + x`, `G_x = 2|X| + x`, with black
/// vertices the `t`-cycles and white vertices `W_x, G_x, W_{s x}, G_{s x}, …`.
pub fn decode(enc: &MonodromyEncoding) -> Result<RibbonGraph> {
    enc.check()?;
    if !enc.is_transitive() {
        return Err(Error::Disconnected);
    }
    let n = enc.size();
    let mut sigma = vec![0; 3 * n];
    let mut alpha = vec![0; 3 * n];
    let mut colors = vec![Color::White; 3 * n];
    for x in 0..n {
        sigma[x] = enc.t.apply(x);
        sigma[n + x] = 2 * n + x;
        sigma[2 * n + x] = n + enc.s.apply(x);
        alpha[x] = n + x;
        alpha[n + x] = x;
        alpha[2 * n + x] = 2 * n + enc.r.apply(x);
        colors[x] = Color::Black;
    }
    RibbonGraph::from_permutations(sigma, alpha, Role::Dual)?.with_vertex_colors(colors)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupInfo {
    pub order: usize,
    pub simple: bool,
}

/// All elements of the subgroup generated by `gens`, by breadth-first closure.
fn closure(gens: &[Perm], degree: usize) -> Result<Vec<Perm>> {
    let id = Perm::identity(degree);
    let mut index: HashSet<Perm> = HashSet::new();
    let mut elements = vec![id.clone()];
    index.insert(id);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in gens {
            let p = g.after(&elements[i]);
            if !index.contains(&p) {
                if elements.len() >= ELEMENT_CAP {
                    return Err(Error::CapExceeded {
                        what: "group order",
                        size: elements.len() + 1,
                        cap: ELEMENT_CAP,
                    });
                }
                index.insert(p.clone());
                queue.push_back(elements.len());
                elements.push(p);
            }
        }
    }
    Ok(elements)
}

/// Order of `⟨r, s, t⟩` and whether it is simple.
///
/// Simplicity is decided by checking that the normal closure of one representative of every
/// non-trivial conjugacy class is the whole group.
pub fn group_order(enc: &MonodromyEncoding, cap: usize) -> Result<GroupInfo> {
    let n = enc.size();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "ground set",
            size: n,
            cap,
        });
    }
    let gens: Vec<Perm> = enc.generators().into_iter().cloned().collect();
    let elements = closure(&gens, n)?;
    let order = elements.len();
    if order == 1 {
        return Ok(GroupInfo { order, simple: false });
    }
    let inverses: Vec<Perm> = gens.iter().map(Perm::inverse).collect();
    let mut classified: HashSet<Perm> = HashSet::new();
    for e in &elements {
        if e.is_identity() || classified.contains(e) {
            continue;
        }
        // The conjugacy class of e, closed under conjugation by the generators.
        let mut class = vec![e.clone()];
        let mut seen: HashSet<Perm> = HashSet::from([e.clone()]);
        let mut i = 0;
        while i < class.len() {
            for (g, gi) in gens.iter().zip(&inverses) {
                let c = g.after(&class[i]).after(gi);
                if !seen.contains(&c) {
                    seen.insert(c.clone());
                    class.push(c);
                }
            }
            i += 1;
        }
        classified.extend(class.iter().cloned());
        if closure(&class, n)?.len() != order {
            return Ok(GroupInfo { order, simple: false });
        }
    }
    Ok(GroupInfo { order, simple: true })
}

/// The orbit of a pair under the diagonal action, encoded as a common covering.
#[derive(Debug, Clone)]
pub struct FiberProduct {
    pub encoding: MonodromyEncoding,
    /// Orbit point `i` is the pair `points[i]`.
    pub points: Vec<(usize, usize)>,
    pub degree_left: usize,
    pub degree_right: usize,
    pub left: MonodromyEncoding,
    pub right: MonodromyEncoding,
}

impl FiberProduct {
    pub fn orbit_size(&self) -> usize {
        self.points.len()
    }

    /// The covering of `decode(left)` (`right = false`) or `decode(right)` by the decoded
    /// product.
    pub fn covering(&self, right: bool) -> Result<CoveringMap> {
        let (factor, project): (&MonodromyEncoding, fn(&(usize, usize)) -> usize) = if right {
            (&self.right, |p| p.1)
        } else {
            (&self.left, |p| p.0)
        };
        let source = decode(&self.encoding)?;
        let target = decode(factor)?;
        let (n, nf) = (self.points.len(), factor.size());
        let mut map = vec![0; 3 * n];
        for (i, p) in self.points.iter().enumerate() {
            let x = project(p);
            for layer in 0..3 {
                map[layer * n + i] = layer * nf + x;
            }
        }
        Ok(CoveringMap::new(source, target, map, vec![false; 3 * n]))
    }
}

/// The diagonal orbit of `(x, y)` in `a.X × b.X`.
pub fn fiber_product(
    a: &MonodromyEncoding,
    b: &MonodromyEncoding,
    x: usize,
    y: usize,
) -> Result<FiberProduct> {
    if (a.k, a.m) != (b.k, b.m) {
        return Err(Error::Monodromy(format!(
            "parameters differ: (k, m) = ({}, {}) and ({}, {})",
            a.k, a.m, b.k, b.m
        )));
    }
    if x >= a.size() || y >= b.size() {
        return Err(Error::Monodromy("base point out of range".into()));
    }
    let nb = b.size();
    let key = |p: (usize, usize)| p.0 * nb + p.1;
    let mut index = vec![usize::MAX; a.size() * nb];
    let mut points = vec![(x, y)];
    index[key((x, y))] = 0;
    let mut i = 0;
    while i < points.len() {
        let p = points[i];
        for (ga, gb) in a.generators().into_iter().zip(b.generators()) {
            let q = (ga.apply(p.0), gb.apply(p.1));
            if index[key(q)] == usize::MAX {
                index[key(q)] = points.len();
                points.push(q);
            }
        }
        i += 1;
    }
    let image = |g: &dyn Fn(usize, usize) -> (usize, usize)| {
        Perm::from_images(points.iter().map(|&(u, v)| index[key(g(u, v))]).collect())
    };
    let encoding = MonodromyEncoding {
        k: a.k,
        m: a.m,
        r: image(&|u, v| (a.r.apply(u), b.r.apply(v)))?,
        s: image(&|u, v| (a.s.apply(u), b.s.apply(v)))?,
        t: image(&|u, v| (a.t.apply(u), b.t.apply(v)))?,
    };
    let size = points.len();
    Ok(FiberProduct {
        encoding,
        degree_left: size / a.size(),
        degree_right: size / nb,
        points,
        left: a.clone(),
        right: b.clone(),
    })
}
