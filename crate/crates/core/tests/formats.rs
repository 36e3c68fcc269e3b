use labelcut::embedding::format::{parse_embedding, write_embedding, EmbedFile};
use labelcut::embedding::Embedder;
use labelcut::gadgets::{parse_gadget_map, reduce_psi_to_dcmc, write_gadget_map};
use labelcut::instances::format::*;
use labelcut::instances::cmc_to_dual;
use labelcut::pipeline::{route_csp, sat_to_csp_g};
use labelcut::verify::generators::{all_psi_hosts, random_cmc, random_cnf, random_max_degree3, random_self_embedding};
use labelcut::{Caps, Graph, RunConfig};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #[test]
    fn cmc_and_dual_round_trip(seed in any::<u64>()) {
        let g = random_cmc(8, 6, &mut rng(seed));
        let text = write_cmc(&g);
        prop_assert_eq!(&parse_cmc(&text).unwrap(), &g);
        let d = cmc_to_dual(&g);
        let dtext = write_dcmc(&d);
        prop_assert_eq!(&parse_dcmc(&dtext).unwrap(), &d);
        prop_assert_eq!(write_dcmc(&parse_dcmc(&dtext).unwrap()), dtext);
    }

    #[test]
    fn cnf_and_csp_round_trip(seed in any::<u64>()) {
        let f = random_cnf(10, &mut rng(seed));
        prop_assert_eq!(&parse_cnf(&write_cnf(&f)).unwrap(), &f);
        let inc = sat_to_csp_g(&f);
        let text = write_csp(&inc.csp);
        prop_assert_eq!(write_csp(&parse_csp(&text).unwrap()), text);
        let g = write_dimacs_graph(&inc.graph);
        prop_assert_eq!(&parse_dimacs_graph(&g).unwrap(), &inc.graph);
    }

    #[test]
    fn routed_csp_round_trips(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = random_cnf(7, &mut r);
        let inc = sat_to_csp_g(&f);
        let sets = random_self_embedding(&inc.graph, 2, &mut r);
        let ctx = route_csp(&inc.csp, &inc.graph, &sets, &Caps::default()).unwrap();
        let text = write_csp(&ctx.routed);
        let back = parse_csp(&text).unwrap();
        prop_assert_eq!(back.domains(), ctx.routed.domains());
        prop_assert_eq!(back.constraints(), ctx.routed.constraints());
    }

    #[test]
    fn embedding_file_round_trips(seed in any::<u64>()) {
        let mut r = rng(seed);
        let total = r.gen_range(20..120);
        let g = random_max_degree3(total, &mut r);
        let k = ((g.vertex_count() + g.edge_count()) as f64).sqrt().ceil() as usize;
        let mut embedder = Embedder::new(RunConfig::default());
        if let Ok(e) = embedder.embed(&g, k, seed) {
            let file = EmbedFile::from(&e);
            let text = write_embedding(&file);
            prop_assert_eq!(&parse_embedding(&text).unwrap(), &file);
        }
    }

    #[test]
    fn parsers_never_panic(text in "[a-z0-9 #=(),.\\-\n]{0,200}") {
        let _ = parse_cmc(&text);
        let _ = parse_dcmc(&text);
        let _ = parse_psi(&text);
        let _ = parse_csp(&text);
        let _ = parse_cnf(&text);
        let _ = parse_dimacs_graph(&text);
        let _ = parse_embedding(&text);
        let _ = parse_gadget_map(&text);
    }
}

#[test]
fn psi_and_gadget_map_round_trip() {
    let pattern = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
    for inst in all_psi_hosts(&pattern, 2).into_iter().step_by(17) {
        let text = write_psi(&inst);
        assert_eq!(parse_psi(&text).unwrap(), inst);
        if inst.host().edge_count() == 0 {
            continue;
        }
        let red = reduce_psi_to_dcmc(&inst, &Caps::default()).unwrap();
        let map = write_gadget_map(&red.labels);
        assert_eq!(parse_gadget_map(&map).unwrap(), red.labels);
    }
}

#[test]
fn comments_and_errors() {
    let g = parse_cmc("# triangle\ncmc 3 3 3 2\ne 0 1 1 # first\ne 1 2 2\ne 0 2 3\n").unwrap();
    assert_eq!(g.edges().len(), 3);
    assert!(matches!(parse_cmc("cmc 3 2 1 0\ne 0 1 1\n"), Err(ParseError::CountMismatch { .. })));
    assert!(parse_cmc("cmc 2 1 1 0\ne 0 0 1\n").is_err());
    assert!(parse_dcmc("dcmc 3 1 1\ng 2\ne 0 1\n").is_err());
    assert!(parse_gadget_map("color 2 = (1, 0, 1)\n").is_err());
    assert!(parse_embedding("host 2 1\nedge 0 5\n").is_err());
    let f = parse_cnf("c comment\np cnf 3 2\n1 -2\n 3 0 -1 0\n").unwrap();
    assert_eq!(f.clauses(), &[vec![1, -2, 3], vec![-1]]);
}
