//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and exits non-zero
//! when any criterion fails.

use std::process::ExitCode;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ribbonball::catalog::{self, CatalogId, TABLE};
use ribbonball::classify::{self, Certification};
use ribbonball::covers::{self, verify_covering};
use ribbonball::monodromy::{self, DEFAULT_POINT_CAP};
use ribbonball::ribbon::{is_isomorphic, validate};
use ribbonball::surgery::{self, CROSS_JOIN_FIXTURE, REORDER_BLACK_FIXTURE};
use ribbonball::{PatternType, RibbonGraph};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn all_triangles(g: &RibbonGraph) -> bool {
    g.trace_faces().face_records.iter().all(|f| f.length == 3)
}

fn football_valid(g: &RibbonGraph) -> Result<bool, String> {
    Ok(validate(g, PatternType::football()).map_err(err)?.valid)
}

fn genus24() -> Result<RibbonGraph, String> {
    surgery::rotate_whites(&catalog::gamma0()).map_err(err)
}

fn standard_football() -> Outcome {
    let g = catalog::gamma0();
    let c = g.counts();
    ensure!((c.b, c.w, c.e) == (12, 20, 90), "counts {c:?}");
    let s = g.trace_faces();
    ensure!(s.faces == 60 && all_triangles(&g), "faces {:?}", s.face_profile());
    ensure!(s.euler == 2 && s.genus == 0 && s.orientable, "χ = {}, genus {}", s.euler, s.genus);

    let (a, b) = CROSS_JOIN_FIXTURE;
    let half = surgery::half_twist(&g, 0).map_err(err)?;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let volt = covers::random_voltages(&g, 2, &mut rng);
    let mut corpus = vec![
        ("cross join torus", surgery::cross_join(&g, a, b).map_err(err)?),
        ("reorder torus", surgery::reorder_black(&g, &REORDER_BLACK_FIXTURE).map_err(err)?),
        ("genus 24", genus24()?),
        ("double cover of half twist", surgery::orientation_double_cover(&half).map_err(err)?.graph),
    ];
    for (i, (part, _)) in covers::voltage_lift(&g, 2, &volt).map_err(err)?.into_iter().enumerate() {
        corpus.push(if i == 0 { ("lift", part) } else { ("lift (other component)", part) });
    }
    for (name, h) in &corpus {
        ensure!(football_valid(h)?, "{name} is not a football graph");
        ensure!(!all_triangles(h), "{name} is all triangles");
    }
    // An all-triangle football has d = χ, so RP² admits one as well.
    let rp2 = surgery::antipodal_quotient().map_err(err)?;
    let rp2_note = if all_triangles(&rp2) && !rp2.is_orientable() {
        "; the non-orientable quotient (d = χ = 1) is also triangulated"
    } else {
        ""
    };
    Ok(format!(
        "b=12 w=20 e=90 F=60 triangles, χ=2; {} other orientable corpus graphs are not triangulations{rp2_note}",
        corpus.len()
    ))
}

fn table_reproduction() -> Outcome {
    let c = classify::feasible_rows(7).map_err(err)?;
    let expected = 16 + 4 * 5;
    ensure!(c.rows.len() == expected, "{} rows, expected {expected}", c.rows.len());
    for row in &c.rows {
        let entry = TABLE
            .iter()
            .find(|e| Some(e.row) == row.row)
            .ok_or_else(|| format!("feasible triple ({}, {}, {}) missing from the table", row.k, row.l, row.n))?;
        ensure!(
            (entry.m, entry.n) == (row.m, row.n) && entry.k.is_none_or(|k| k == row.k),
            "row {} has type ({}, {}, {})",
            entry.row,
            row.k,
            row.l,
            row.n
        );
        ensure!(
            (row.minimal_b, row.minimal_w) == (entry.b, entry.w(row.k)),
            "row {} k={}: (b, w) = ({}, {}), table ({}, {})",
            entry.row,
            row.k,
            row.minimal_b,
            row.minimal_w,
            entry.b,
            entry.w(row.k)
        );
    }
    for entry in &TABLE {
        ensure!(c.rows.iter().any(|r| r.row == Some(entry.row)), "row {} not generated", entry.row);
    }
    let row14 = c.rows.iter().find(|r| r.row == Some(14)).ok_or("no row 14")?;
    let row20 = c.rows.iter().find(|r| r.row == Some(20)).ok_or("no row 20")?;
    ensure!((row14.minimal_b, row14.minimal_w) == (12, 30), "row 14 differs");
    ensure!((row20.minimal_b, row20.minimal_w) == (12, 60), "row 20 differs");
    let searched = c.rows.iter().filter(|r| r.certification == Certification::Search).count();
    Ok(format!(
        "{} rows match, {} certified by search, {} triples infeasible",
        c.rows.len(),
        searched,
        c.infeasible.len()
    ))
}

fn catalog_soundness() -> Outcome {
    let ids = catalog::all_rows(7);
    for &id in &ids {
        let p = catalog::minimal_realization(id).map_err(err)?;
        let t = id.pattern_type().ok_or("no type")?;
        let report = validate(&p, t).map_err(err)?;
        ensure!(report.valid, "{id}: {:?}", report.violations);
        ensure!(p.trace_faces().is_sphere(), "{id} is not a sphere");
        let c = p.dual().map_err(err)?.counts();
        ensure!(Some((c.b, c.w)) == id.table_counts(), "{id}: (b, w) = ({}, {})", c.b, c.w);
    }
    Ok(format!("{} realizations valid, spherical, with table counts", ids.len()))
}

fn surgeries() -> Outcome {
    let g = catalog::gamma0();
    let (a, b) = CROSS_JOIN_FIXTURE;
    let torus = surgery::cross_join(&g, a, b).map_err(err)?;
    let s = torus.trace_faces();
    ensure!(s.orientable && s.genus == 1, "cross join genus {}", s.genus);
    ensure!(
        s.face_profile().into_iter().collect::<Vec<_>>() == vec![(3, 56), (6, 2)],
        "cross join profile {:?}",
        s.face_profile()
    );
    ensure!(football_valid(&torus)? && torus.counts().d == Some(2), "cross join invalid");

    let torus9 = surgery::reorder_black(&g, &REORDER_BLACK_FIXTURE).map_err(err)?;
    let s = torus9.trace_faces();
    ensure!(s.orientable && s.genus == 1, "reorder genus {}", s.genus);
    ensure!(
        s.face_profile().into_iter().collect::<Vec<_>>() == vec![(3, 57), (9, 1)],
        "reorder profile {:?}",
        s.face_profile()
    );
    ensure!(football_valid(&torus9)? && torus9.counts().d == Some(2), "reorder invalid");

    let g24 = genus24()?;
    let s = g24.trace_faces();
    ensure!(s.faces == 12 && s.face_records.iter().all(|f| f.length == 15), "profile {:?}", s.face_profile());
    ensure!(s.euler == -46 && s.genus == 24, "χ = {}", s.euler);
    ensure!(football_valid(&g24)?, "genus-24 graph invalid");
    Ok("{3:56, 6:2} torus, {3:57, 9:1} torus, twelve 15-gons with χ=−46 and genus 24".into())
}

fn monodromy_of_gamma0() -> Outcome {
    let enc = monodromy::encode(&catalog::gamma0()).map_err(err)?;
    ensure!(enc.size() == 60, "|X| = {}", enc.size());
    ensure!(enc.orders() == (2, 3, 5), "orders {:?}", enc.orders());
    ensure!(enc.is_transitive(), "not transitive");
    let info = monodromy::group_order(&enc, DEFAULT_POINT_CAP).map_err(err)?;
    ensure!(info.order == 60 && info.simple, "{info:?}");
    Ok("|X|=60, orders (2,3,5), transitive, group of order 60, simple".into())
}

fn sharpness() -> Outcome {
    let a = monodromy::encode(&genus24()?).map_err(err)?;
    let b = monodromy::encode(&catalog::gamma0()).map_err(err)?;
    let fp = monodromy::fiber_product(&a, &b, 0, 0).map_err(err)?;
    ensure!(fp.orbit_size() == 3600, "orbit {}", fp.orbit_size());
    ensure!(fp.degree_left == 60, "degree over the genus-24 graph {}", fp.degree_left);
    Ok(format!("orbit 3600, degrees {} and {}", fp.degree_left, fp.degree_right))
}

fn branched_cover_dictionary() -> Outcome {
    let g = catalog::gamma0();
    let half = surgery::half_twist(&g, 0).map_err(err)?;
    let hs = half.trace_faces();
    ensure!(!hs.orientable && hs.euler == 1, "half twist χ = {}", hs.euler);
    let cover = surgery::orientation_double_cover(&half).map_err(err)?;
    ensure!(cover.connected && verify_covering(&cover.covering).passed, "double cover broken");
    let s = cover.graph.trace_faces();
    ensure!(s.is_sphere() && cover.graph.counts().d == Some(4), "cover χ = {}", s.euler);
    let c = covers::find_covering(&cover.graph, &g).map_err(err)?.ok_or("no covering to Γ0")?;
    ensure!(c.degree == 2 && verify_covering(&c).passed, "degree {}", c.degree);
    let branched: Vec<_> = c.branch_points();
    ensure!(
        branched.len() == 2 && branched.iter().all(|b| b.order == 2 && b.source_length == 6),
        "branch points {branched:?}"
    );
    let quotient = surgery::antipodal_quotient().map_err(err)?;
    let qc = quotient.counts();
    ensure!((qc.b, qc.w, qc.e, qc.d) == (6, 10, 45, Some(1)), "quotient {qc:?}");
    let lifted = surgery::orientation_double_cover(&quotient).map_err(err)?;
    ensure!(is_isomorphic(&lifted.graph, &g).map_err(err)?.is_some(), "double cover of quotient ≇ Γ0");
    Ok("double cover of half twist: sphere, d=4, degree 2 over Γ0 with two order-2 faces; quotient lifts to Γ0".into())
}

fn negative_covering() -> Outcome {
    let octa = catalog::painted_octahedron().and_then(|p| p.dual()).map_err(err)?;
    let tetra = catalog::minimal_realization(CatalogId::family(15, 3))
        .and_then(|p| p.dual())
        .map_err(err)?;
    ensure!(covers::find_covering(&octa, &tetra).map_err(err)?.is_none(), "found a covering");
    Ok("painted octahedron does not cover painted tetrahedron".into())
}

fn property_suite() -> Outcome {
    let bases: Vec<RibbonGraph> = (6..=10)
        .map(|row| catalog::minimal_realization(CatalogId::row(row)).and_then(|p| p.dual()))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    let mut components = 0;
    for seed in 0..100u64 {
        let base = &bases[(seed % 5) as usize];
        let degree = 2 + (seed / 5 % 4) as usize;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let volt = covers::random_voltages(base, degree, &mut rng);
        for (part, cover) in covers::voltage_lift(base, degree, &volt).map_err(err)? {
            components += 1;
            let report = verify_covering(&cover);
            ensure!(report.passed, "seed {seed}: {:?}", report.checks);
            ensure!(
                part.trace_faces().face_records.iter().all(|f| f.length % 3 == 0),
                "seed {seed}: face length not divisible by 3"
            );
            let found = covers::find_covering(&part, base).map_err(err)?;
            ensure!(found.is_some_and(|c| verify_covering(&c).passed), "seed {seed}: no covering found");
        }
    }
    Ok(format!("100 lifts, {components} components, all verified"))
}

fn search_certifications() -> Outcome {
    let t644 = PatternType::new(6, 4, 4).map_err(err)?;
    let t333 = PatternType::new(3, 3, 3).map_err(err)?;
    let none = classify::exhaustive_search(t644, 1, classify::DEFAULT_DART_CAP).map_err(err)?;
    ensure!(none.is_empty(), "(6,4,4) b=1 has {} realizations", none.len());
    let tetra = classify::exhaustive_search(t333, 1, classify::DEFAULT_DART_CAP).map_err(err)?;
    ensure!(tetra.len() == 1, "(3,3,3) b=1 has {} realizations", tetra.len());
    let painted = catalog::minimal_realization(CatalogId::family(15, 3)).map_err(err)?;
    ensure!(is_isomorphic(&tetra[0], &painted).map_err(err)?.is_some(), "not the painted tetrahedron");
    Ok("(6,4,4) b=1: none; (3,3,3) b=1: the painted tetrahedron only".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("standard football", standard_football),
        ("table reproduction", table_reproduction),
        ("catalog soundness", catalog_soundness),
        ("surgeries", surgeries),
        ("monodromy of the standard football", monodromy_of_gamma0),
        ("sharpness of 60", sharpness),
        ("branched-cover dictionary", branched_cover_dictionary),
        ("negative covering", negative_covering),
        ("voltage-lift property suite", property_suite),
        ("search certifications", search_certifications),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
