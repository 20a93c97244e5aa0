use dismatch_core::census::{connected_graphs_flat, random_graph};
use dismatch_core::deciders::{
    check_bound_chain, compute_s_bound, decide_nu_eq_nudj_diameter2,
    decide_nu_eq_nudj_small_diameter, decide_nud_eq_nus_bounded_degree, recognize_cameron_walker,
};
use dismatch_core::restricted::oracle_enumerate;
use dismatch_core::{Budget, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn diameter_deciders_match_oracle() {
    for g in connected_graphs_flat(7) {
        if g.m() == 0 || !g.diameter().unwrap().at_most(3) {
            continue;
        }
        let o = oracle_enumerate(&g).unwrap();
        for j in [2, 3] {
            let general = decide_nu_eq_nudj_small_diameter(&g, j).unwrap();
            assert_eq!(general.equal, o.nu == o.nu_dc(j), "{g:?} j={j}");
            if g.diameter().unwrap().at_most(2) {
                let fast = decide_nu_eq_nudj_diameter2(&g, j).unwrap();
                assert_eq!(fast.equal, general.equal, "{g:?} j={j}");
            }
        }
    }
}

#[test]
fn cameron_walker_matches_oracle() {
    for g in connected_graphs_flat(7) {
        let o = oracle_enumerate(&g).unwrap();
        let dec = recognize_cameron_walker(&g).unwrap();
        assert_eq!(dec.is_some(), o.nu == o.nu_s, "{g:?}");
        if let Some(d) = dec {
            d.verify(&g).unwrap();
        }
    }
}

#[test]
fn bounded_degree_matches_oracle() {
    for g in connected_graphs_flat(7) {
        let o = oracle_enumerate(&g).unwrap();
        let d = decide_nud_eq_nus_bounded_degree(&g, Budget::default()).unwrap();
        assert_eq!(d.equal, o.nu_d == o.nu_s, "{g:?}");
    }
}

#[test]
fn s_bound_and_chain_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let n = rng.gen_range(2..=9);
        let m = rng.gen_range(1..=(n * (n - 1) / 2).min(18));
        let g = random_graph(n, m, &mut rng);
        let o = oracle_enumerate(&g).unwrap();
        let s = compute_s_bound(&g).unwrap().s_value;
        assert!(o.nu_s <= s);
        let chain = check_bound_chain(&g, Budget::default()).unwrap();
        assert_eq!((chain.nu_s, chain.nu_d), (o.nu_s, o.nu_d));
    }
}

#[test]
fn vacuous_chain_means_small_nu_s() {
    // every residual edgeless: the induced matching number is one
    for g in [
        Graph::complete(5),
        Graph::star(4),
        Graph::cycle(4),
        Graph::path(4),
    ] {
        let r = check_bound_chain(&g, Budget::default()).unwrap();
        assert!(r.right_inequality_vacuous);
        assert_eq!(r.nu_s, 1);
    }
}
