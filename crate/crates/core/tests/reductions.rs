use ctl_fragments::altgraph::{apath, gen_random, random_gap, reachable, GenParams};
use ctl_fragments::reductions::*;
use ctl_fragments::semantics::check;

fn verdict(out: &ReductionOutput) -> bool {
    check(&out.instance.model, out.instance.start, &out.instance.formula)
}

#[test]
fn slice_constructions_agree_with_apath() {
    for seed in 0..200u64 {
        let slices = 1 + 2 * (seed as usize % 3);
        let general = gen_random(GenParams::new(slices, 4, seed)).unwrap();
        let restricted = gen_random(GenParams::new(slices, 6, seed).restricted()).unwrap();
        let restricted_log =
            gen_random(GenParams::new(slices, 6, seed).restricted().log_depth()).unwrap();
        let general_log = gen_random(GenParams::new(slices, 4, seed).log_depth()).unwrap();
        let cases = [
            (Construction::Eu, &restricted),
            (Construction::ErOr, &restricted),
            (Construction::ErNegGuarded, &general),
            (Construction::ErOnly, &restricted_log),
            (Construction::EgXor, &restricted),
            (Construction::EfXor, &general_log),
        ];
        for (c, g) in cases {
            let out = reduce_slice_graph(c, g).unwrap().unwrap();
            assert_eq!(out.instance.model.validate(), Ok(()), "{c} seed {seed}");
            let expected = apath(g, g.start().unwrap());
            assert_eq!(verdict(&out), expected, "{c} seed {seed}");
        }
    }
}

#[test]
fn gap_constructions_agree_with_reachability() {
    for seed in 0..200u64 {
        let inst = random_gap(1 + seed as usize % 7, 0.25, seed);
        let expected = reachable(&inst.graph, inst.source, inst.target);
        assert_eq!(verdict(&reduce_gap_eg(&inst)), expected, "seed {seed}");
        assert_eq!(verdict(&reduce_gap_ef(&inst)), expected, "seed {seed}");
    }
}

#[test]
fn ef_xor_with_worked_list_phi3_disagrees_with_apath() {
    // the worked list also puts z_1 into phi_3
    let printed = ctl_fragments::syntax::parse_formula(
        "EF (z_0 ^ z_1 ^ z_2 ^ z_3 ^ t ^ EF t ^ AG (z_0 ^ t ^ EF t))",
    )
    .unwrap();
    let (mut depth3, mut disagree) = (0, 0);
    for seed in 0..200u64 {
        let g = gen_random(GenParams::new(3, 4, seed).log_depth()).unwrap();
        let out = reduce_ef_xor(&g).unwrap();
        if out.meta.formulas.len() != 4 {
            continue;
        }
        depth3 += 1;
        let expected = apath(&g, g.start().unwrap());
        assert_eq!(verdict(&out), expected, "seed {seed}");
        if check(&out.instance.model, out.instance.start, &printed) != expected {
            disagree += 1;
        }
    }
    assert!(depth3 > 0);
    assert!(disagree > 0, "{depth3} instances");
}
