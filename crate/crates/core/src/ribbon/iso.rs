//! Isomorphism testing and canonical forms for connected ribbon graphs.
//!
//! A labeling is grown by breadth-first search from a start dart, visiting `sigma(x)` then
//! `alpha(x)`. The code of a labeling lists, per label, the labels of `sigma` and `alpha`
//! together with twist and colors. The canonical form is the smallest code over starts
//! drawn from a canonically chosen class of darts.

use std::collections::{BTreeMap, VecDeque};

use super::{Dart, RibbonGraph, Side};
use crate::error::{Error, Result};

type DartKey = (u8, u8, bool, usize, usize);

fn dart_keys(g: &RibbonGraph) -> Vec<DartKey> {
    let summary = g.trace_faces();
    g.darts()
        .map(|d| {
            (
                g.vertex_color(d).code(),
                g.face_color(d).code(),
                g.is_twisted(d),
                g.valence(d),
                summary.face_records[summary.face_of(d, Side::Plus)].length,
            )
        })
        .collect()
}

/// The start class: the smallest class of equal keys, ties broken by key order.
fn start_class(keys: &[DartKey]) -> (DartKey, Vec<Dart>) {
    let mut classes: BTreeMap<DartKey, Vec<Dart>> = BTreeMap::new();
    for (d, &k) in keys.iter().enumerate() {
        classes.entry(k).or_default().push(d);
    }
    classes
        .into_iter()
        .min_by(|a, b| a.1.len().cmp(&b.1.len()).then(a.0.cmp(&b.0)))
        .expect("graphs have darts")
}

struct Labeling {
    order: Vec<Dart>,
    code: Vec<u32>,
}

fn label_from(g: &RibbonGraph, start: Dart) -> Labeling {
    let n = g.num_darts();
    let mut label = vec![u32::MAX; n];
    let mut order = Vec::with_capacity(n);
    label[start] = 0;
    order.push(start);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for y in [g.sigma(x), g.alpha(x)] {
            if label[y] == u32::MAX {
                label[y] = order.len() as u32;
                order.push(y);
                queue.push_back(y);
            }
        }
    }
    let mut code = Vec::with_capacity(3 * n);
    for &x in &order {
        code.push(label[g.sigma(x)]);
        code.push(label[g.alpha(x)]);
        code.push(
            (g.is_twisted(x) as u32) << 8
                | (g.vertex_color(x).code() as u32) << 4
                | g.face_color(x).code() as u32,
        );
    }
    Labeling { order, code }
}

fn require_connected(g: &RibbonGraph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// A byte string that is equal for two connected graphs exactly when they are isomorphic.
pub fn canonical_form(g: &RibbonGraph) -> Result<Vec<u8>> {
    require_connected(g)?;
    let keys = dart_keys(g);
    let (_, class) = start_class(&keys);
    let best = class
        .iter()
        .map(|&s| label_from(g, s).code)
        .min()
        .expect("start class is non-empty");
    let mut bytes = Vec::with_capacity(4 + 4 * best.len());
    bytes.extend_from_slice(&(g.num_darts() as u32).to_le_bytes());
    for word in best {
        bytes.extend_from_slice(&word.to_le_bytes());
    }
    Ok(bytes)
}

/// A dart bijection `G → H` preserving rotation, pairing, twists and colors, if one exists.
pub fn is_isomorphic(g: &RibbonGraph, h: &RibbonGraph) -> Result<Option<Vec<Dart>>> {
    require_connected(g)?;
    require_connected(h)?;
    if g.num_darts() != h.num_darts() {
        return Ok(None);
    }
    let (gk, hk) = (dart_keys(g), dart_keys(h));
    let mut gs = gk.clone();
    let mut hs = hk.clone();
    gs.sort_unstable();
    hs.sort_unstable();
    if gs != hs {
        return Ok(None);
    }
    let (key, class) = start_class(&gk);
    let reference = label_from(g, class[0]);
    for t in h.darts().filter(|&t| hk[t] == key) {
        let candidate = label_from(h, t);
        if candidate.code == reference.code {
            let mut map = vec![0; g.num_darts()];
            for (&x, &y) in reference.order.iter().zip(&candidate.order) {
                map[x] = y;
            }
            return Ok(Some(map));
        }
    }
    Ok(None)
}
