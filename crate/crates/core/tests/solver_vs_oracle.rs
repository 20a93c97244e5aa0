use dismatch_core::census::{connected_graphs_flat, random_graph};
use dismatch_core::restricted::{
    c_disconnected_matching, c_disconnected_matching_number, full_profile, induced_matching,
    oracle_enumerate,
};
use dismatch_core::{Budget, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn assert_agrees(g: &Graph) {
    let oracle = oracle_enumerate(g).unwrap();
    let profile = full_profile(g, Budget::default()).unwrap();
    assert_eq!(profile, oracle, "profile mismatch on {:?}", g);
    // one past the end must be zero
    let past = c_disconnected_matching_number(g, oracle.nu_s + 1, Budget::default()).unwrap();
    assert_eq!(past, 0, "nu_d,c past nu_s on {:?}", g);
    for c in 2..=oracle.nu_s {
        let m = c_disconnected_matching(g, c, Budget::default()).unwrap();
        assert_eq!(m.len(), oracle.nu_dc(c));
        assert!(m.analyze(g).is_c_disconnected(c));
    }
    let ind = induced_matching(g, Budget::default()).unwrap();
    assert!(ind.analyze(g).is_induced);
}

#[test]
fn connected_graphs_up_to_seven_vertices() {
    for g in connected_graphs_flat(7) {
        assert_agrees(&g);
    }
}

#[test]
fn random_graphs_with_isolated_vertices() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..150 {
        let n = rng.gen_range(1..=11);
        let max_m = (n * (n - 1) / 2).min(20);
        let m = rng.gen_range(0..=max_m);
        assert_agrees(&random_graph(n, m, &mut rng));
    }
}

#[test]
fn disjoint_unions_add_up() {
    let parts = [
        Graph::path(5),
        Graph::cycle(5),
        Graph::complete(4),
        Graph::star(3),
    ];
    for a in &parts {
        for b in &parts {
            let u = a.disjoint_union(b);
            let (pa, pb, pu) = (
                oracle_enumerate(a).unwrap(),
                oracle_enumerate(b).unwrap(),
                full_profile(&u, Budget::default()).unwrap(),
            );
            assert_eq!(pu.nu, pa.nu + pb.nu);
            assert_eq!(pu.nu_s, pa.nu_s + pb.nu_s);
        }
    }
}
