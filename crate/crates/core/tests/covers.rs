use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ribbonball::catalog::{self, CatalogId};
use ribbonball::covers::{self, find_covering, verify_covering, voltage_lift};
use ribbonball::perm::Perm;
use ribbonball::surgery;

#[test]
fn single_swap_lift_is_a_d4_sphere() {
    let g = catalog::gamma0();
    let volt = covers::single_edge_voltages(&g, 0, Perm::from_images(vec![1, 0]).unwrap());
    let parts = voltage_lift(&g, 2, &volt).unwrap();
    assert_eq!(parts.len(), 1);
    let (lift, cover) = &parts[0];
    let s = lift.trace_faces();
    assert!(s.is_sphere());
    assert_eq!(lift.counts().d, Some(4));
    assert!(verify_covering(cover).passed);
    let branched = cover.branch_points();
    assert_eq!(branched.len(), 2);
    assert!(branched.iter().all(|b| b.order == 2));
    // Riemann–Hurwitz by hand: 2·2 − 2·(2 − 1) = 2.
    assert_eq!(2 * 2 - 2, s.euler);
}

#[test]
fn lift_multiplies_d() {
    let g = catalog::gamma0();
    for degree in 2..=4 {
        let mut rng = ChaCha8Rng::seed_from_u64(degree as u64);
        let volt = covers::random_voltages(&g, degree, &mut rng);
        let total_d: usize = voltage_lift(&g, degree, &volt)
            .unwrap()
            .iter()
            .map(|(p, _)| p.counts().d.unwrap())
            .sum();
        assert_eq!(total_d, 2 * degree);
    }
}

#[test]
fn truncated_octahedron_lifts_are_rediscovered() {
    let base = catalog::minimal_realization(CatalogId::row(8)).unwrap().dual().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let volt = covers::random_voltages(&base, 3, &mut rng);
    for (part, _) in voltage_lift(&base, 3, &volt).unwrap() {
        let found = find_covering(&part, &base).unwrap().expect("lift covers its base");
        assert!(verify_covering(&found).passed);
    }
}

#[test]
fn coverings_compose() {
    let g = catalog::gamma0();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let volt = covers::random_voltages(&g, 2, &mut rng);
    let (mid, down) = voltage_lift(&g, 2, &volt).unwrap().remove(0);
    let volt2 = covers::random_voltages(&mid, 2, &mut rng);
    let (_, up) = voltage_lift(&mid, 2, &volt2).unwrap().remove(0);
    let composite = up.then(&down).unwrap();
    let report = verify_covering(&composite);
    assert!(report.passed, "{report:?}");
    assert_eq!(composite.degree, up.degree * down.degree);
}

#[test]
fn branch_order_is_a_third_of_face_length() {
    let g = catalog::gamma0();
    let half = surgery::half_twist(&g, 11).unwrap();
    let cover = surgery::orientation_double_cover(&half).unwrap();
    let c = find_covering(&cover.graph, &g).unwrap().unwrap();
    for b in &c.branches {
        assert_eq!(b.source_length, 3 * b.order);
    }
}

#[test]
fn twisted_or_disconnected_inputs_are_rejected() {
    let g = catalog::gamma0();
    let half = surgery::half_twist(&g, 0).unwrap();
    assert!(find_covering(&half, &g).is_err());
    let two = surgery::orientation_double_cover(&g).unwrap().graph;
    assert_eq!(find_covering(&two, &g), Err(ribbonball::Error::Disconnected));
}

#[test]
fn every_spherical_n2_example_covers_its_minimal_row() {
    for row in 6..=10 {
        let base = catalog::minimal_realization(CatalogId::row(row)).unwrap().dual().unwrap();
        let volt = covers::single_edge_voltages(&base, 1, Perm::cycle(3));
        for (part, _) in voltage_lift(&base, 3, &volt).unwrap() {
            if part.trace_faces().is_sphere() {
                assert!(find_covering(&part, &base).unwrap().is_some(), "row {row}");
            }
        }
    }
}
