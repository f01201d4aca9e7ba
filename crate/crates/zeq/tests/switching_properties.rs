//! Property tests for switchings on randomly constructed valid instances.

use zeq::charpoly::eta_complete;
use zeq::random::{random_switching_instance, Rng64, SwitchingInstance};
use zeq::switching::{build_conjugators, certify, perform_switching, validate_partition};

/// Draws instances until enough small and large ones have been seen.
fn instance_mix(seed: u64, small: usize, large: usize) -> Vec<SwitchingInstance> {
    let mut rng = Rng64::new(seed);
    let mut picked = Vec::new();
    let mut n_small = 0;
    let mut n_large = 0;
    while n_small < small || n_large < large {
        let inst = random_switching_instance(&mut rng, 10);
        if inst.g.n() <= 8 && n_small < small {
            n_small += 1;
            picked.push(inst);
        } else if inst.g.n() >= 9 && n_large < large {
            n_large += 1;
            picked.push(inst);
        }
    }
    picked
}

#[test]
fn switched_instances_preserve_the_completed_polynomial() {
    for inst in instance_mix(2024, 5, 1) {
        let report = validate_partition(&inst.g, &inst.partition).unwrap();
        assert!(report.is_valid(), "{report}");
        let switched = perform_switching(&inst.g, &inst.partition).unwrap();
        assert!(switched.is_simple());
        let pair = build_conjugators(&inst.g, &inst.partition).unwrap();
        let conjugated = pair.q().mul(&adjacency(&inst.g)).mul(pair.q());
        assert_eq!(conjugated, adjacency(&switched), "adjacency conjugation");
        let cert = certify(&inst.g, &switched, &pair);
        assert!(cert.all_hold(), "{}", cert.summary());
        assert_eq!(
            eta_complete(&inst.g).unwrap(),
            eta_complete(&switched).unwrap(),
            "completed polynomials differ on n = {}",
            inst.g.n()
        );
    }
}

fn adjacency(g: &zeq::Digraph) -> zeq::PolyMatrix {
    zeq::PolyMatrix::from_rat_fn(g.n(), g.n(), |i, j| {
        zeq::poly::rat(g.adj(i, j) as i64)
    })
}
