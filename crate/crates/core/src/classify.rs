//! Feasibility arithmetic for `(k, l, n)` patterns on the sphere, the generated
//! classification table, and an exhaustive search over small dual rotation systems.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::catalog::{CatalogId, TABLE};
use crate::error::{Error, Result};
use crate::ribbon::{canonical_form, Color, Dart, PatternType, RibbonGraph, Role};

pub const DEFAULT_DART_CAP: usize = 40;

/// Outcome of the counting constraints for one pattern type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Feasibility {
    Feasible { b: usize, w: usize },
    Infeasible { reason: String },
}

impl Feasibility {
    pub fn min_b(&self) -> Option<usize> {
        match self {
            Feasibility::Feasible { b, .. } => Some(*b),
            Feasibility::Infeasible { .. } => None,
        }
    }
}

/// `w` and `e` for a given `b`, when both are integers.
pub fn counts_for(t: PatternType, b: usize) -> Option<(usize, usize)> {
    let m = t.m();
    if (t.k * b) % m != 0 {
        return None;
    }
    let w = t.k * b / m;
    let twice_e = t.k * b + t.l * w;
    (twice_e % 2 == 0).then_some((w, twice_e / 2))
}

/// The smallest `b` allowed by the edge count and the Euler characteristic inequality.
///
/// For `n ≥ 2` the inequality reads `b·(6m + 6k − (n+1)km) ≥ 12m`; for `n = 1`, where at
/// least four polygons meet at each pattern vertex, `b·(2l + 2k − kl) ≥ 4l`.
pub fn arithmetic_min_b(t: PatternType) -> Feasibility {
    let (k, l, n, m) = (t.k as i64, t.l as i64, t.n as i64, t.m() as i64);
    let (c, need, form) = if n >= 2 {
        (6 * m + 6 * k - (n + 1) * k * m, 12 * m, "6m + 6k − (n+1)km")
    } else {
        (2 * l + 2 * k - k * l, 4 * l, "2l + 2k − kl")
    };
    if c <= 0 {
        return Feasibility::Infeasible {
            reason: format!("Euler inequality: {form} = {c} ≤ 0"),
        };
    }
    let lower = ((need + c - 1) / c) as usize;
    let b = (lower..)
        .find(|&b| counts_for(t, b).is_some())
        .expect("b = 2m always satisfies integrality");
    let (w, _) = counts_for(t, b).unwrap_or_default();
    Feasibility::Feasible { b, w }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Certification {
    /// The arithmetic bound is attained by the realization.
    Arithmetic,
    /// Every smaller admissible `b` was excluded by exhaustive search.
    Search,
    /// A smaller admissible `b` exceeds the search cap; the table value is taken as given.
    Table,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRow {
    /// Table row, or `None` for a feasible triple missing from the table.
    pub row: Option<u8>,
    pub name: Option<String>,
    pub k: usize,
    pub l: usize,
    pub m: usize,
    pub n: usize,
    pub arithmetic_b: usize,
    pub minimal_b: usize,
    pub minimal_w: usize,
    pub realization: Option<CatalogId>,
    pub certification: Certification,
}

impl ClassRow {
    pub fn pattern_type(&self) -> PatternType {
        PatternType {
            k: self.k,
            l: self.l,
            n: self.n,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfeasibleTriple {
    pub k: usize,
    pub l: usize,
    pub n: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub k_max: usize,
    pub rows: Vec<ClassRow>,
    pub infeasible: Vec<InfeasibleTriple>,
}

pub const SCAN_L_MAX: usize = 12;
pub const SCAN_N_MAX: usize = 8;

fn table_entry(t: PatternType) -> Option<&'static crate::catalog::TableRow> {
    TABLE
        .iter()
        .find(|r| r.m == t.m() && r.n == t.n && r.k.is_none_or(|k| k == t.k))
}

/// Scans `3 ≤ k ≤ k_max`, `3 ≤ l ≤ 12`, `n | l` with `n ≤ 8`, and certifies the minimal
/// `b` of every feasible triple.
pub fn feasible_rows(k_max: usize) -> Result<Classification> {
    feasible_rows_with_cap(k_max, DEFAULT_DART_CAP)
}

pub fn feasible_rows_with_cap(k_max: usize, dart_cap: usize) -> Result<Classification> {
    let mut rows = Vec::new();
    let mut infeasible = Vec::new();
    for k in 3..=k_max {
        for l in 3..=SCAN_L_MAX {
            for n in (1..=SCAN_N_MAX.min(l)).filter(|n| l % n == 0) {
                let t = PatternType::new(k, l, n)?;
                match arithmetic_min_b(t) {
                    Feasibility::Infeasible { reason } => {
                        infeasible.push(InfeasibleTriple { k, l, n, reason })
                    }
                    Feasibility::Feasible { b, .. } => rows.push(certify(t, b, dart_cap)?),
                }
            }
        }
    }
    rows.sort_by_key(|r| (r.row.unwrap_or(u8::MAX), r.k, r.l, r.n));
    Ok(Classification {
        k_max,
        rows,
        infeasible,
    })
}

fn certify(t: PatternType, arithmetic_b: usize, dart_cap: usize) -> Result<ClassRow> {
    let entry = table_entry(t);
    let table_b = entry.map_or(arithmetic_b, |e| e.b);
    let mut minimal_b = arithmetic_b;
    let mut certification = Certification::Arithmetic;
    if table_b > arithmetic_b {
        certification = Certification::Search;
        for b in arithmetic_b..table_b {
            let Some((_, e)) = counts_for(t, b) else { continue };
            if 2 * e > dart_cap {
                certification = Certification::Table;
                break;
            }
            if !exhaustive_search(t, b, dart_cap)?.is_empty() {
                break;
            }
            minimal_b = b + 1;
        }
        if certification == Certification::Table {
            minimal_b = table_b;
        } else {
            minimal_b = (minimal_b..=table_b)
                .find(|&b| counts_for(t, b).is_some())
                .unwrap_or(table_b);
        }
    }
    let minimal_w = counts_for(t, minimal_b).map_or(0, |(w, _)| w);
    Ok(ClassRow {
        row: entry.map(|e| e.row),
        name: entry.map(|e| e.name.to_string()),
        k: t.k,
        l: t.l,
        m: t.m(),
        n: t.n,
        arithmetic_b,
        minimal_b,
        minimal_w,
        realization: entry.map(|e| {
            if e.is_family() {
                CatalogId::family(e.row, t.k)
            } else {
                CatalogId::row(e.row)
            }
        }),
        certification,
    })
}

/// Search state: a partial edge pairing together with the partial face structure.
///
/// The partial map `phi = sigma ∘ alpha` splits into closed cycles and open paths; each path
/// ends at an unpaired dart.
#[derive(Clone)]
struct State {
    alpha: Vec<Dart>,
    /// For a path end: its start. For a path start: its end.
    start_of: Vec<Dart>,
    end_of: Vec<Dart>,
    /// Length of the path, stored at its start.
    len: Vec<usize>,
    closed: usize,
    touched: Vec<bool>,
}

struct Search<'a> {
    sigma: Vec<Dart>,
    vertex: Vec<usize>,
    /// 0 = black dart, 1 = white slot facing black, 2 = white slot facing white.
    kind: Vec<u8>,
    /// First dart of each vertex, with its color.
    vertex_start: Vec<(Dart, Color)>,
    n: usize,
    /// Rotation period of white vertices.
    period: usize,
    faces_target: usize,
    min_len: usize,
    max_len: usize,
    colors: Vec<Color>,
    found: &'a mut BTreeMap<Vec<u8>, RibbonGraph>,
}

const UNPAIRED: Dart = usize::MAX;

impl Search<'_> {
    fn compatible(&self, u: Dart, v: Dart) -> bool {
        matches!((self.kind[u], self.kind[v]), (0, 1) | (1, 0) | (2, 2))
    }

    /// Appends path ending at `x` to the path starting at `y`. Returns false when a face
    /// closes with a forbidden length.
    fn link(&self, st: &mut State, x: Dart, y: Dart) -> bool {
        let s1 = st.start_of[x];
        if s1 == y {
            st.closed += 1;
            let l = st.len[y];
            return l >= self.min_len && l <= self.max_len;
        }
        let e2 = st.end_of[y];
        st.len[s1] += st.len[y];
        st.end_of[s1] = e2;
        st.start_of[e2] = s1;
        st.len[s1] <= self.max_len
    }

    fn pair(&self, st: &State, u: Dart, v: Dart) -> Option<State> {
        let mut next = st.clone();
        next.alpha[u] = v;
        next.alpha[v] = u;
        next.touched[self.vertex[u]] = true;
        next.touched[self.vertex[v]] = true;
        let ok = self.link(&mut next, u, self.sigma[v]) && self.link(&mut next, v, self.sigma[u]);
        ok.then_some(next)
    }

    fn run(&mut self, st: State, unpaired: usize) {
        if st.closed > self.faces_target || st.closed + unpaired < self.faces_target {
            return;
        }
        // The unpaired dart ending the longest open path.
        let Some(u) = (0..self.n)
            .filter(|&d| st.alpha[d] == UNPAIRED)
            .max_by_key(|&d| (st.len[st.start_of[d]], std::cmp::Reverse(d)))
        else {
            self.finish(&st);
            return;
        };
        let touched = |vi: usize| st.touched[vi] || vi == self.vertex[u];
        let mut candidates: Vec<Dart> = (0..self.n)
            .filter(|&v| v != u && st.alpha[v] == UNPAIRED && touched(self.vertex[v]))
            .filter(|&v| self.compatible(u, v))
            .collect();
        // Untouched vertices of one color are interchangeable: offer only the first, and
        // only its darts that are inequivalent under rotation.
        for color in [Color::Black, Color::White] {
            let fresh = self
                .vertex_start
                .iter()
                .enumerate()
                .find(|&(vi, &(_, c))| c == color && !touched(vi));
            if let Some((_, &(first, _))) = fresh {
                let reps = if color == Color::White { self.period } else { 1 };
                candidates.extend((first..first + reps).filter(|&v| self.compatible(u, v)));
            }
        }
        candidates.sort_unstable();
        candidates.dedup();
        for v in candidates {
            if st.alpha[v] != UNPAIRED {
                continue;
            }
            if let Some(next) = self.pair(&st, u, v) {
                self.run(next, unpaired - 2);
            }
        }
    }

    fn finish(&mut self, st: &State) {
        if st.closed != self.faces_target {
            return;
        }
        let Ok(g) = RibbonGraph::from_permutations(self.sigma.clone(), st.alpha.clone(), Role::Dual)
            .and_then(|g| g.with_vertex_colors(self.colors.clone()))
        else {
            return;
        };
        if !g.is_connected() {
            return;
        }
        if let Ok(code) = canonical_form(&g) {
            self.found.entry(code).or_insert(g);
        }
    }
}

/// All sphere realizations of `t` with `b` black polygons, as colored patterns, up to
/// orientation-preserving isomorphism.
///
/// Works on the dual: black vertices of valence `k`, white vertices of valence `l` whose
/// darts at positions `≡ 0 mod n` face black. Edges are added one at a time, always at the
/// end of the longest open face path, and branches die as soon as a face closes with fewer
/// than 3 sides (4 when `n = 1`), a face grows past the length the Euler count allows, or
/// too few faces remain possible.
pub fn exhaustive_search(t: PatternType, b: usize, dart_cap: usize) -> Result<Vec<RibbonGraph>> {
    let Some((w, e)) = counts_for(t, b) else {
        return Ok(Vec::new());
    };
    if b == 0 {
        return Ok(Vec::new());
    }
    let n = 2 * e;
    if n > dart_cap {
        return Err(Error::CapExceeded {
            what: "dart count",
            size: n,
            cap: dart_cap,
        });
    }
    let faces_target = 2 + e as i64 - (b + w) as i64;
    if faces_target < 1 {
        return Ok(Vec::new());
    }
    let faces_target = faces_target as usize;
    let min_len = if t.n == 1 { 4 } else { 3 };
    let Some(max_len) = n.checked_sub(min_len * (faces_target - 1)) else {
        return Ok(Vec::new());
    };

    let mut sigma = vec![0; n];
    let mut vertex = vec![0; n];
    let mut kind = vec![0u8; n];
    let mut colors = vec![Color::Black; n];
    let mut vertex_start = Vec::with_capacity(b + w);
    let mut d = 0;
    for (count, valence, color) in [(b, t.k, Color::Black), (w, t.l, Color::White)] {
        for _ in 0..count {
            let vi = vertex_start.len();
            vertex_start.push((d, color));
            for p in 0..valence {
                sigma[d + p] = d + (p + 1) % valence;
                vertex[d + p] = vi;
                colors[d + p] = color;
                kind[d + p] = match color {
                    Color::Black => 0,
                    _ if p % t.n == 0 => 1,
                    _ => 2,
                };
            }
            d += valence;
        }
    }

    let state = State {
        alpha: vec![UNPAIRED; n],
        start_of: (0..n).collect(),
        end_of: (0..n).collect(),
        len: vec![1; n],
        closed: 0,
        touched: vec![false; b + w],
    };
    let mut found = BTreeMap::new();
    let mut search = Search {
        sigma,
        vertex,
        kind,
        vertex_start,
        n,
        period: t.n,
        faces_target,
        min_len,
        max_len,
        colors,
        found: &mut found,
    };
    search.run(state, n);
    found.into_values().map(|g| g.dual()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(k: usize, l: usize, n: usize) -> PatternType {
        PatternType::new(k, l, n).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(arithmetic_min_b(t(5, 6, 2)), Feasibility::Feasible { b: 12, w: 20 });
        assert_eq!(arithmetic_min_b(t(3, 10, 2)).min_b(), Some(20));
        assert!(arithmetic_min_b(t(6, 6, 2)).min_b().is_none());
        assert!(arithmetic_min_b(t(3, 12, 2)).min_b().is_none());
        assert!(arithmetic_min_b(t(4, 4, 1)).min_b().is_none());
        assert_eq!(arithmetic_min_b(t(6, 4, 4)).min_b(), Some(1));
    }

    #[test]
    fn integrality_prefilter() {
        assert_eq!(counts_for(t(3, 4, 4), 1), None);
        assert!(exhaustive_search(t(3, 4, 4), 1, 40).unwrap().is_empty());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            exhaustive_search(t(5, 6, 2), 12, 40),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn tetrahedron_is_the_only_333_with_one_black() {
        let found = exhaustive_search(t(3, 3, 3), 1, 40).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].num_vertices(), 4);
    }
}
