//! Base maps and the minimal realization of every row of the football classification.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ribbon::{Color, FaceListBuilder, PatternType, RibbonGraph, Role};

/// One row of the classification of generalized football patterns on the sphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub row: u8,
    /// `None` for the infinite families (any `k ≥ 3`).
    pub k: Option<usize>,
    pub m: usize,
    pub n: usize,
    pub name: &'static str,
    pub b: usize,
    /// `w = w_per_k · k + w_const`.
    pub w_per_k: usize,
    pub w_const: usize,
}

impl TableRow {
    pub fn is_family(&self) -> bool {
        self.k.is_none()
    }

    pub fn w(&self, k: usize) -> usize {
        self.w_per_k * k + self.w_const
    }

    pub fn pattern_type(&self, k: usize) -> PatternType {
        PatternType {
            k,
            l: self.m * self.n,
            n: self.n,
        }
    }
}

const fn sporadic(row: u8, k: usize, m: usize, n: usize, name: &'static str, b: usize, w: usize) -> TableRow {
    TableRow { row, k: Some(k), m, n, name, b, w_per_k: 0, w_const: w }
}

const fn family(row: u8, m: usize, n: usize, name: &'static str, b: usize, w_per_k: usize) -> TableRow {
    TableRow { row, k: None, m, n, name, b, w_per_k, w_const: 0 }
}

/// The classification table, listed as `(k, m, n)` with `l = m·n`.
pub const TABLE: [TableRow; 20] = [
    sporadic(1, 3, 3, 1, "octahedron", 4, 4),
    sporadic(2, 3, 4, 1, "cuboctahedron", 8, 6),
    sporadic(3, 4, 3, 1, "cuboctahedron", 6, 8),
    sporadic(4, 3, 5, 1, "icosidodecahedron", 20, 12),
    sporadic(5, 5, 3, 1, "icosidodecahedron", 12, 20),
    sporadic(6, 3, 3, 2, "truncated tetrahedron", 4, 4),
    sporadic(7, 3, 4, 2, "truncated cube", 8, 6),
    sporadic(8, 4, 3, 2, "truncated octahedron", 6, 8),
    sporadic(9, 3, 5, 2, "truncated dodecahedron", 20, 12),
    sporadic(10, 5, 3, 2, "truncated icosahedron = football", 12, 20),
    family(11, 2, 2, "truncated American football", 2, 1),
    sporadic(12, 3, 2, 3, "variation on the tetrahedron", 4, 6),
    sporadic(13, 4, 2, 3, "variation on the cube", 6, 12),
    sporadic(14, 5, 2, 3, "variation on the dodecahedron", 12, 30),
    family(15, 1, 3, "partially truncated American football", 1, 1),
    family(16, 1, 4, "double tin can", 2, 2),
    family(17, 1, 5, "zigzag tin can", 2, 2),
    sporadic(18, 3, 1, 6, "subdivision of the tetrahedron", 4, 12),
    sporadic(19, 4, 1, 6, "subdivision of the cube", 6, 24),
    sporadic(20, 5, 1, 6, "subdivision of the dodecahedron", 12, 60),
];

pub fn table_row(row: u8) -> Result<&'static TableRow> {
    TABLE
        .iter()
        .find(|r| r.row == row)
        .ok_or_else(|| Error::UnknownCatalog(format!("row {row}")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Solid {
    Tetrahedron,
    Cube,
    Dodecahedron,
    Octahedron,
    Icosahedron,
}

impl Solid {
    pub const ALL: [Solid; 5] = [
        Solid::Tetrahedron,
        Solid::Cube,
        Solid::Dodecahedron,
        Solid::Octahedron,
        Solid::Icosahedron,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Solid::Tetrahedron => "tetrahedron",
            Solid::Cube => "cube",
            Solid::Dodecahedron => "dodecahedron",
            Solid::Octahedron => "octahedron",
            Solid::Icosahedron => "icosahedron",
        }
    }
}

impl FromStr for Solid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Solid::ALL
            .into_iter()
            .find(|solid| solid.name() == s)
            .ok_or_else(|| Error::UnknownCatalog(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CatalogId {
    /// A table row; `k` is required for rows 11, 15, 16, 17 and rejected otherwise.
    Row { row: u8, k: Option<usize> },
    Platonic(Solid),
    AmericanFootball(usize),
    Gamma0,
}

impl CatalogId {
    pub fn row(row: u8) -> Self {
        CatalogId::Row { row, k: None }
    }

    pub fn family(row: u8, k: usize) -> Self {
        CatalogId::Row { row, k: Some(k) }
    }

    /// Parses a row number or a base-map name, with `k` for parametrized entries.
    pub fn parse(name: &str, k: Option<usize>) -> Result<Self> {
        if let Ok(row) = name.parse::<u8>() {
            let id = CatalogId::Row { row, k };
            id.check()?;
            return Ok(id);
        }
        match name {
            "gamma0" | "football_graph" => Ok(CatalogId::Gamma0),
            "american_football" => k
                .map(CatalogId::AmericanFootball)
                .ok_or_else(|| Error::UnknownCatalog("american_football needs k".into())),
            other => Ok(CatalogId::Platonic(other.parse()?)),
        }
    }

    fn check(&self) -> Result<()> {
        match *self {
            CatalogId::Row { row, k } => {
                let entry = table_row(row)?;
                match (entry.is_family(), k) {
                    (true, Some(k)) if k >= 3 => Ok(()),
                    (true, Some(k)) => Err(Error::UnknownCatalog(format!("row {row} with k = {k} < 3"))),
                    (true, None) => Err(Error::UnknownCatalog(format!("row {row} needs k"))),
                    (false, None) => Ok(()),
                    (false, Some(_)) => Err(Error::UnknownCatalog(format!("row {row} takes no k"))),
                }
            }
            CatalogId::AmericanFootball(k) if k < 3 => {
                Err(Error::UnknownCatalog(format!("american_football with k = {k} < 3")))
            }
            _ => Ok(()),
        }
    }

    /// The pattern type of a table row.
    pub fn pattern_type(&self) -> Option<PatternType> {
        match *self {
            CatalogId::Row { row, k } => {
                let entry = table_row(row).ok()?;
                Some(entry.pattern_type(entry.k.or(k)?))
            }
            CatalogId::Gamma0 => Some(PatternType::football()),
            _ => None,
        }
    }

    /// `(b, w)` from the table for a row.
    pub fn table_counts(&self) -> Option<(usize, usize)> {
        match *self {
            CatalogId::Row { row, k } => {
                let entry = table_row(row).ok()?;
                Some((entry.b, entry.w(entry.k.or(k)?)))
            }
            CatalogId::Gamma0 => Some((12, 20)),
            _ => None,
        }
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogId::Row { row, k: None } => write!(f, "row {row}"),
            CatalogId::Row { row, k: Some(k) } => write!(f, "row {row} (k={k})"),
            CatalogId::Platonic(s) => f.write_str(s.name()),
            CatalogId::AmericanFootball(k) => write!(f, "american_football({k})"),
            CatalogId::Gamma0 => f.write_str("gamma0"),
        }
    }
}

/// Counterclockwise polygon lists of the three hardcoded solids.
fn solid_faces(solid: Solid) -> Option<(usize, Vec<Vec<usize>>)> {
    match solid {
        Solid::Tetrahedron => Some((
            4,
            vec![vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 1], vec![1, 3, 2]],
        )),
        // Bottom 0..4 and top 4..8, with 4 + i above i.
        Solid::Cube => Some((
            8,
            vec![
                vec![0, 3, 2, 1],
                vec![4, 5, 6, 7],
                vec![0, 1, 5, 4],
                vec![1, 2, 6, 5],
                vec![2, 3, 7, 6],
                vec![3, 0, 4, 7],
            ],
        )),
        // Top pentagon 0..5, upper ring 5..10, lower ring 10..15, bottom 15..20; the two
        // rings form the zigzag 5, 10, 6, 11, ...
        Solid::Dodecahedron => {
            let mut faces = vec![(0..5).collect::<Vec<_>>()];
            for i in 0..5 {
                let j = (i + 1) % 5;
                faces.push(vec![j, i, 5 + i, 10 + i, 5 + j]);
            }
            for i in 0..5 {
                let j = (i + 1) % 5;
                faces.push(vec![10 + i, 15 + i, 15 + j, 10 + j, 5 + j]);
            }
            faces.push((15..20).rev().collect());
            Some((20, faces))
        }
        Solid::Octahedron | Solid::Icosahedron => None,
    }
}

/// A hardcoded solid with the listed polygons painted black and the rest white.
///
/// Only defined for the tetrahedron, cube and dodecahedron, whose polygons are numbered
/// in the order of the hardcoded lists (cube: bottom, top, four sides; dodecahedron: top,
/// five upper, five lower, bottom).
pub fn painted_solid(solid: Solid, black_faces: &[usize]) -> Result<RibbonGraph> {
    let (nv, faces) =
        solid_faces(solid).ok_or_else(|| Error::UnknownCatalog(format!("painted {}", solid.name())))?;
    let mut b = FaceListBuilder::new(nv);
    for (i, f) in faces.into_iter().enumerate() {
        let c = if black_faces.contains(&i) { Color::Black } else { Color::White };
        b.face(f, c);
    }
    b.build(Role::Pattern)
}

pub fn platonic(name: &str) -> Result<RibbonGraph> {
    platonic_solid(name.parse()?)
}

pub fn platonic_solid(solid: Solid) -> Result<RibbonGraph> {
    match solid {
        Solid::Octahedron => platonic_solid(Solid::Cube)?.dual(),
        Solid::Icosahedron => platonic_solid(Solid::Dodecahedron)?.dual(),
        s => {
            let (nv, faces) = solid_faces(s).expect("hardcoded solid");
            let mut b = FaceListBuilder::new(nv);
            for f in faces {
                b.face(f, Color::None);
            }
            b.build(Role::Plain)
        }
    }
}

/// Two poles joined by `k` meridians: darts `0..k` at the north pole, `k..2k` at the south.
pub fn american_football(k: usize) -> Result<RibbonGraph> {
    if k < 3 {
        return Err(Error::UnknownCatalog(format!("american_football with k = {k} < 3")));
    }
    let sigma = (0..2 * k)
        .map(|d| if d < k { (d + 1) % k } else { k + (d + k - 1) % k })
        .collect();
    let alpha = (0..2 * k).map(|d| (d + k) % (2 * k)).collect();
    RibbonGraph::from_permutations(sigma, alpha, Role::Plain)
}

/// Black inner polygons in every face joined radially to the corners, original edges erased.
fn variation(solid: Solid) -> Result<RibbonGraph> {
    let (nv, faces) = solid_faces(solid).expect("variation needs a hardcoded solid");
    let mut inner_base = Vec::with_capacity(faces.len());
    let mut next = nv;
    for f in &faces {
        inner_base.push(next);
        next += f.len();
    }
    let inner = |f: usize, i: usize| inner_base[f] + i % faces[f].len();
    // directed side u -> v  ↦  (face, position of u)
    let mut side_of = std::collections::HashMap::new();
    for (fi, f) in faces.iter().enumerate() {
        for i in 0..f.len() {
            side_of.insert((f[i], f[(i + 1) % f.len()]), (fi, i));
        }
    }
    let mut b = FaceListBuilder::new(next);
    for (fi, f) in faces.iter().enumerate() {
        b.face((0..f.len()).map(|i| inner(fi, i)), Color::Black);
    }
    for (fi, f) in faces.iter().enumerate() {
        for i in 0..f.len() {
            let (c0, c1) = (f[i], f[(i + 1) % f.len()]);
            if c0 > c1 {
                continue;
            }
            let (fj, a) = side_of[&(c1, c0)];
            b.face(
                [c1, inner(fi, i + 1), inner(fi, i), c0, inner(fj, a + 1), inner(fj, a)],
                Color::White,
            );
        }
    }
    b.build(Role::Pattern)
}

/// Every edge cut in three, a black inner polygon per face, and one hexagon per corner.
fn subdivision(solid: Solid) -> Result<RibbonGraph> {
    let (nv, faces) = solid_faces(solid).expect("subdivision needs a hardcoded solid");
    let mut point = std::collections::HashMap::new();
    let mut next = nv;
    for f in &faces {
        for i in 0..f.len() {
            let (u, v) = (f[i], f[(i + 1) % f.len()]);
            for key in [(u, v), (v, u)] {
                point.entry(key).or_insert_with(|| {
                    next += 1;
                    next - 1
                });
            }
        }
    }
    let mut inner_base = Vec::with_capacity(faces.len());
    for f in &faces {
        inner_base.push(next);
        next += f.len();
    }
    let mut b = FaceListBuilder::new(next);
    for (fi, f) in faces.iter().enumerate() {
        let k = f.len();
        let inner = |i: usize| inner_base[fi] + i % k;
        b.face((0..k).map(inner), Color::Black);
        for i in 0..k {
            let prev = f[(i + k - 1) % k];
            let c = f[i];
            let succ = f[(i + 1) % k];
            let b_prev = point[&(c, prev)];
            let a_i = point[&(c, succ)];
            let b_i = point[&(succ, c)];
            b.face(
                [b_prev, c, a_i, b_i, inner(i), inner(i + k - 1)],
                Color::White,
            );
        }
    }
    b.build(Role::Pattern)
}

/// Layers `t`, `m`, `b` of `k` vertices; black top and bottom polygons, white quadrilaterals.
fn double_tin_can(k: usize) -> Result<RibbonGraph> {
    let t = |i: usize| i % k;
    let m = |i: usize| k + i % k;
    let bot = |i: usize| 2 * k + i % k;
    let mut b = FaceListBuilder::new(3 * k);
    b.face((0..k).map(t), Color::Black);
    b.face((0..k).rev().map(bot), Color::Black);
    for i in 0..k {
        b.face([t(i + 1), t(i), m(i), m(i + 1)], Color::White);
        b.face([m(i + 1), m(i), bot(i), bot(i + 1)], Color::White);
    }
    b.build(Role::Pattern)
}

/// Two rings of a black `k`-gon and `k` pentagons glued along a zigzag.
fn zigzag_tin_can(k: usize) -> Result<RibbonGraph> {
    let t = |i: usize| i % k;
    let x = |i: usize| k + i % k;
    let z = |i: usize| 2 * k + i % k;
    let tb = |i: usize| 3 * k + i % k;
    // The lower ring's zigzag x'_i z'_i is identified with z_i x_{i+1}.
    let xb = z;
    let zb = |i: usize| x(i + 1);
    let mut b = FaceListBuilder::new(4 * k);
    b.face((0..k).map(t), Color::Black);
    b.face((0..k).rev().map(tb), Color::Black);
    for i in 0..k {
        b.face([t(i + 1), t(i), x(i), z(i), x(i + 1)], Color::White);
        b.face([tb(i), tb(i + 1), xb(i + 1), zb(i), xb(i)], Color::White);
    }
    b.build(Role::Pattern)
}

/// The colored minimal realization of a table row (pattern role).
pub fn minimal_realization(id: CatalogId) -> Result<RibbonGraph> {
    let CatalogId::Row { row, k } = id else {
        return Err(Error::UnknownCatalog(format!("{id} is not a table row")));
    };
    id.check()?;
    let k = k.unwrap_or(0);
    use Solid::*;
    match row {
        1 => platonic_solid(Tetrahedron)?.medial(),
        2 => platonic_solid(Cube)?.medial(),
        3 => Ok(platonic_solid(Cube)?.medial()?.swap_colors()),
        4 => platonic_solid(Dodecahedron)?.medial(),
        5 => Ok(platonic_solid(Dodecahedron)?.medial()?.swap_colors()),
        6 => platonic_solid(Tetrahedron)?.truncate_all(),
        7 => platonic_solid(Cube)?.truncate_all(),
        8 => platonic_solid(Octahedron)?.truncate_all(),
        9 => platonic_solid(Dodecahedron)?.truncate_all(),
        10 => platonic_solid(Icosahedron)?.truncate_all(),
        11 => american_football(k)?.truncate(&[0, 1]),
        12 => variation(Tetrahedron),
        13 => variation(Cube),
        14 => variation(Dodecahedron),
        15 => american_football(k)?.truncate(&[0]),
        16 => double_tin_can(k),
        17 => zigzag_tin_can(k),
        18 => subdivision(Tetrahedron),
        19 => subdivision(Cube),
        20 => subdivision(Dodecahedron),
        _ => Err(Error::UnknownCatalog(format!("row {row}"))),
    }
}

/// The dual ribbon graph of the standard football: 12 black and 20 white vertices.
pub fn gamma0() -> RibbonGraph {
    minimal_realization(CatalogId::row(10))
        .and_then(|p| p.dual())
        .expect("the standard football is well formed")
}

/// The octahedron with two opposite faces black and six white, as a pattern.
pub fn painted_octahedron() -> Result<RibbonGraph> {
    // Octahedron faces are cube vertices; 0 and 6 are antipodal.
    let cube = platonic_solid(Solid::Cube)?;
    let dual = cube
        .color_vertices_by(|v, _| if v == 0 || v == 6 { Color::Black } else { Color::White })
        .with_role(Role::Dual);
    dual.dual()
}

/// Builds any catalog entry: rows give colored patterns, base maps are plain, `gamma0` is dual.
pub fn build(id: CatalogId) -> Result<RibbonGraph> {
    id.check()?;
    match id {
        CatalogId::Row { .. } => minimal_realization(id),
        CatalogId::Platonic(s) => platonic_solid(s),
        CatalogId::AmericanFootball(k) => american_football(k),
        CatalogId::Gamma0 => Ok(gamma0()),
    }
}

/// Every row id for `3 ≤ k ≤ k_max` on the families, in table order.
pub fn all_rows(k_max: usize) -> Vec<CatalogId> {
    let mut ids = Vec::new();
    for entry in &TABLE {
        if entry.is_family() {
            ids.extend((3..=k_max).map(|k| CatalogId::family(entry.row, k)));
        } else {
            ids.push(CatalogId::row(entry.row));
        }
    }
    ids
}
