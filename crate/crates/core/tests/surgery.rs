use ribbonball::catalog;
use ribbonball::covers::verify_covering;
use ribbonball::ribbon::{canonical_form, is_isomorphic, validate};
use ribbonball::surgery::{self, SurgerySpec, CROSS_JOIN_FIXTURE, REORDER_BLACK_FIXTURE};
use ribbonball::{Color, PatternType};

fn profile(g: &ribbonball::RibbonGraph) -> Vec<(usize, usize)> {
    g.trace_faces().face_profile().into_iter().collect()
}

#[test]
fn cross_join_twice_restores_the_graph() {
    let g = catalog::gamma0();
    let (a, b) = CROSS_JOIN_FIXTURE;
    let once = surgery::cross_join(&g, a, b).unwrap();
    let twice = surgery::cross_join(&once, a, b).unwrap();
    assert_eq!(twice, g);
    assert!(validate(&once, PatternType::football()).unwrap().valid);
}

#[test]
fn cross_join_torus_does_not_cover_gamma0() {
    let g = catalog::gamma0();
    let (a, b) = CROSS_JOIN_FIXTURE;
    let torus = surgery::cross_join(&g, a, b).unwrap();
    assert!(ribbonball::covers::find_covering(&torus, &g).unwrap().is_none());
}

#[test]
fn reorder_black_inverse_order_undoes_itself() {
    let g = catalog::gamma0();
    let torus = surgery::reorder_black(&g, &REORDER_BLACK_FIXTURE).unwrap();
    let [a, b, c, d, e] = REORDER_BLACK_FIXTURE;
    let back = surgery::reorder_black(&torus, &[a, c, b, d, e]).unwrap();
    assert_eq!(back, g);
    assert_eq!(torus.counts().d, Some(2));
}

#[test]
fn reorder_black_rejects_foreign_darts() {
    let g = catalog::gamma0();
    let white = g.darts().find(|&d| g.vertex_color(d) == Color::White).unwrap();
    assert!(surgery::reorder_black(&g, &[white]).is_err());
    let mut order = REORDER_BLACK_FIXTURE;
    order[4] = white;
    assert!(surgery::reorder_black(&g, &order).is_err());
}

#[test]
fn rotate_whites_has_order_three() {
    let g = catalog::gamma0();
    let once = surgery::rotate_whites(&g).unwrap();
    let thrice = surgery::rotate_whites(&surgery::rotate_whites(&once).unwrap()).unwrap();
    assert_eq!(canonical_form(&thrice).unwrap(), canonical_form(&g).unwrap());
    // The position map e1 e2 e3 e4 e5 e6 → e1 e4 e3 e6 e5 e2, composed with itself three times.
    let step = [0usize, 3, 2, 5, 4, 1];
    let cubed: Vec<usize> = (0..6).map(|i| step[step[step[i]]]).collect();
    assert_eq!(cubed, (0..6).collect::<Vec<_>>());
    assert_eq!(thrice, g);
    assert!(validate(&once, PatternType::football()).unwrap().valid);
    assert_eq!(once.counts().d, Some(2));
    assert!(is_isomorphic(&g, &once).unwrap().is_none());
}

#[test]
fn rotate_whites_needs_football_input() {
    let other = catalog::minimal_realization(catalog::CatalogId::row(1)).unwrap().dual().unwrap();
    assert!(surgery::rotate_whites(&other).is_err());
}

#[test]
fn half_twist_gives_projective_football() {
    let g = catalog::gamma0();
    let h = surgery::half_twist(&g, 17).unwrap();
    let s = h.trace_faces();
    assert!(!s.orientable);
    assert_eq!((s.euler, s.genus), (1, 1));
    assert_eq!(profile(&h), vec![(3, 58), (6, 1)]);
    let c = h.counts();
    assert_eq!((c.b, c.w, c.d), (12, 20, Some(2)));
    assert!(validate(&h, PatternType::football()).unwrap().valid);
}

#[test]
fn antipodal_quotient_counts() {
    let q = surgery::antipodal_quotient().unwrap();
    let s = q.trace_faces();
    assert_eq!((s.vertices, s.edges, s.faces, s.euler), (16, 45, 30, 1));
    assert!(!s.orientable);
    assert_eq!(s.genus, 1);
    let c = q.counts();
    assert_eq!((c.b, c.w, c.e, c.d), (6, 10, 45, Some(1)));
    assert!(validate(&q, PatternType::football()).unwrap().valid);
}

#[test]
fn double_covers_verify() {
    let g = catalog::gamma0();
    let q = surgery::antipodal_quotient().unwrap();
    let h = surgery::half_twist(&g, 40).unwrap();
    for base in [&g, &q, &h] {
        let cover = surgery::orientation_double_cover(base).unwrap();
        assert_eq!(cover.covering.degree, 2);
        assert!(cover.graph.is_orientable() && !cover.graph.has_twists());
        assert!(verify_covering(&cover.covering).passed);
    }
    let split = surgery::orientation_double_cover(&g).unwrap();
    for (part, _) in split.graph.split_components() {
        assert!(is_isomorphic(&part, &g).unwrap().is_some());
    }
}

#[test]
fn spec_dispatch_matches_functions() {
    let g = catalog::gamma0();
    let spec = SurgerySpec::HalfTwist { dart: 3 };
    assert_eq!(spec.apply(&g).unwrap(), surgery::half_twist(&g, 3).unwrap());
    let spec = SurgerySpec::ReorderBlack {
        order: REORDER_BLACK_FIXTURE.to_vec(),
    };
    assert_eq!(profile(&spec.apply(&g).unwrap()), vec![(3, 57), (9, 1)]);
}
