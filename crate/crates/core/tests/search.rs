//! Cross-checks `exhaustive_search` against a naive enumeration of edge pairings.

use std::collections::BTreeSet;

use ribbonball::classify::{self, exhaustive_search};
use ribbonball::ribbon::{canonical_form, is_isomorphic};
use ribbonball::{catalog, Color, PatternType, RibbonGraph, Role};

const NONE: usize = usize::MAX;

/// Pairs the smallest unpaired dart with every compatible partner, rejecting a branch only
/// when some face walk (closed or open) leaves the admissible length range.
struct Naive {
    sigma: Vec<usize>,
    sigma_inv: Vec<usize>,
    kind: Vec<u8>,
    colors: Vec<Color>,
    min_len: usize,
    max_len: usize,
    faces: usize,
    found: BTreeSet<Vec<u8>>,
}

impl Naive {
    fn walk_ok(&self, alpha: &[usize], d: usize) -> bool {
        // Back up to the start of the walk through d (or detect a cycle).
        let phi = |x: usize| (alpha[x] != NONE).then(|| self.sigma[alpha[x]]);
        let phi_inv = |x: usize| {
            let y = self.sigma_inv[x];
            (alpha[y] != NONE).then(|| alpha[y])
        };
        let mut start = d;
        let mut steps = 0;
        while let Some(p) = phi_inv(start) {
            start = p;
            steps += 1;
            if start == d {
                return steps >= self.min_len && steps <= self.max_len;
            }
        }
        let mut len = 1;
        let mut x = start;
        while let Some(y) = phi(x) {
            x = y;
            len += 1;
        }
        len <= self.max_len
    }

    fn go(&mut self, alpha: &mut Vec<usize>) {
        let Some(u) = alpha.iter().position(|&a| a == NONE) else {
            let g = RibbonGraph::from_permutations(self.sigma.clone(), alpha.clone(), Role::Dual)
                .unwrap()
                .with_vertex_colors(self.colors.clone())
                .unwrap();
            if g.is_connected() && g.trace_faces().faces == self.faces {
                self.found.insert(canonical_form(&g).unwrap());
            }
            return;
        };
        for v in u + 1..alpha.len() {
            let ok = matches!((self.kind[u], self.kind[v]), (0, 1) | (1, 0) | (2, 2));
            if alpha[v] != NONE || !ok {
                continue;
            }
            alpha[u] = v;
            alpha[v] = u;
            if [u, v, self.sigma[u], self.sigma[v]].iter().all(|&d| self.walk_ok(alpha, d)) {
                self.go(alpha);
            }
            alpha[u] = NONE;
            alpha[v] = NONE;
        }
    }
}

fn naive_search(t: PatternType, b: usize) -> BTreeSet<Vec<u8>> {
    let (w, e) = classify::counts_for(t, b).unwrap();
    let n = 2 * e;
    let faces = 2 + e - b - w;
    let min_len = if t.n == 1 { 4 } else { 3 };
    let mut sigma = vec![0; n];
    let mut kind = vec![0; n];
    let mut colors = vec![Color::Black; n];
    let mut d = 0;
    for (count, valence, color) in [(b, t.k, Color::Black), (w, t.l, Color::White)] {
        for _ in 0..count {
            for p in 0..valence {
                sigma[d + p] = d + (p + 1) % valence;
                colors[d + p] = color;
                kind[d + p] = if color == Color::Black { 0 } else if p % t.n == 0 { 1 } else { 2 };
            }
            d += valence;
        }
    }
    let mut sigma_inv = vec![0; n];
    for (x, &y) in sigma.iter().enumerate() {
        sigma_inv[y] = x;
    }
    let mut naive = Naive {
        sigma,
        sigma_inv,
        kind,
        colors,
        min_len,
        max_len: n - min_len * (faces - 1),
        faces,
        found: BTreeSet::new(),
    };
    naive.go(&mut vec![NONE; n]);
    naive.found
}

fn fast_codes(t: PatternType, b: usize) -> BTreeSet<Vec<u8>> {
    exhaustive_search(t, b, 40)
        .unwrap()
        .iter()
        .map(|p| canonical_form(&p.dual().unwrap()).unwrap())
        .collect()
}

fn t(k: usize, l: usize, n: usize) -> PatternType {
    PatternType::new(k, l, n).unwrap()
}

#[test]
fn agrees_with_naive_enumeration() {
    for (tt, b) in [
        (t(3, 3, 3), 1),
        (t(4, 3, 3), 1),
        (t(5, 3, 3), 1),
        (t(6, 4, 4), 1),
        (t(3, 4, 2), 2),
        (t(4, 4, 2), 2),
    ] {
        assert_eq!(fast_codes(tt, b), naive_search(tt, b), "{tt} b={b}");
    }
}

#[test]
fn tetrahedron_certification() {
    let found = exhaustive_search(t(3, 3, 3), 1, 40).unwrap();
    assert_eq!(found.len(), 1);
    let tetra = catalog::minimal_realization(catalog::CatalogId::family(15, 3)).unwrap();
    assert!(is_isomorphic(&found[0], &tetra).unwrap().is_some());
}

#[test]
fn even_tin_cans_need_two_blacks() {
    assert!(exhaustive_search(t(6, 4, 4), 1, 40).unwrap().is_empty());
    assert!(exhaustive_search(t(8, 4, 4), 1, 40).unwrap().is_empty());
}

#[test]
fn arithmetic_bound_is_a_lower_bound() {
    for (tt, b) in [(t(3, 4, 4), 2), (t(3, 5, 5), 2), (t(3, 6, 2), 4), (t(4, 3, 3), 1)] {
        let found = exhaustive_search(tt, b, 40).unwrap();
        assert!(!found.is_empty());
        assert!(classify::arithmetic_min_b(tt).min_b().unwrap() <= b);
    }
}
