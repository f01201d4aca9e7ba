//! End-to-end acceptance checks, one test per criterion.
//!
//! Every test prints a single verdict line with its runtime and enforces a
//! wall-clock budget, so `cargo test --test acceptance` doubles as a status
//! report for the whole library.

use std::time::{Duration, Instant};

use zeq::charpoly::{
    chi, degree_sequence_from_eta_bar, eta, eta_bar, eta_complete, eta_complete_matrix,
    markov_poly,
};
use zeq::graph::iso_check;
use zeq::invasion::{
    directed_path_invader, invade, invasion_char_poly, symmetric_invade, undirected_path_invader,
    chebyshev_u_half,
};
use zeq::known::{
    graph_pair_partition, verify_digraph_pair_conjugator, zeta_equivalent_digraph_pair,
    zeta_equivalent_graph_pair,
};
use zeq::poly::{det_series_identity_minus_x, eval_points, fingerprint::eval_mod, rat, NVARS, PRIME};
use zeq::random::{
    random_connected_graph, random_graph, random_invader, random_multidigraph, random_point,
    random_reciprocal_digraph, random_simple_digraph, random_weighted_digraph, Rng64,
};
use zeq::search::{enumerate, mine_pairs, SearchConfig, SearchMode};
use zeq::switching::{build_conjugators, certify, perform_switching, validate_partition};
use zeq::zeta::{
    bass_determinant, walks::walk_series_oracle, zeta_closed_form_outgoing,
    zeta_closed_form_reversing, zeta_inverse, zeta_inverse_specialized, EdgeSystem, ZetaSpec,
};
use zeq::{Digraph, MultiPoly, PolyMatrix, Var, WeightedDigraph};

fn finish(criterion: u32, what: &str, start: Instant, budget_secs: u64) {
    let elapsed = start.elapsed();
    println!("criterion {criterion:02} ({what}): PASS in {elapsed:.2?} (budget {budget_secs}s)");
    assert!(
        elapsed <= Duration::from_secs(budget_secs),
        "criterion {criterion} exceeded its {budget_secs}s budget: {elapsed:?}"
    );
}

#[test]
fn criterion_01_digraph_pair_shares_eta_without_isomorphism() {
    let t = Instant::now();
    let (left, right) = zeta_equivalent_digraph_pair();
    assert_eq!(eta(&left).poly, eta(&right).poly);
    assert!(iso_check(&left, &right).unwrap().is_none());
    finish(1, "digraph pair: equal eta, non-isomorphic", t, 1);
}

#[test]
fn criterion_02_explicit_conjugator_certifies_the_digraph_pair() {
    let t = Instant::now();
    let check = verify_digraph_pair_conjugator();
    assert!(check.conjugates);
    assert!(check.det_matches);
    assert!(check.singular_at_degenerate_point);
    finish(2, "digraph pair: explicit conjugator", t, 1);
}

#[test]
fn criterion_03_graph_pair_shares_eta_bar_complements_and_degrees() {
    let t = Instant::now();
    let (left, right) = zeta_equivalent_graph_pair();
    let bl = eta_bar(&left).unwrap();
    let br = eta_bar(&right).unwrap();
    assert_eq!(bl.poly, br.poly);
    assert_eq!(
        eta_bar(&left.complement().unwrap()).unwrap().poly,
        eta_bar(&right.complement().unwrap()).unwrap().poly
    );
    let dl = degree_sequence_from_eta_bar(&bl).unwrap();
    let dr = degree_sequence_from_eta_bar(&br).unwrap();
    assert_eq!(dl, dr);
    assert_eq!(dl, vec![5, 5, 4, 4, 4, 4, 4, 3, 3]);
    finish(3, "graph pair: eta_bar, complements, degrees", t, 5);
}

#[test]
fn criterion_04_switching_pipeline_carries_left_to_right() {
    let t = Instant::now();
    let (left, right) = zeta_equivalent_graph_pair();
    let partition = graph_pair_partition();
    assert!(validate_partition(&left, &partition).unwrap().is_valid());
    let switched = perform_switching(&left, &partition).unwrap();
    assert!(iso_check(&switched, &right).unwrap().is_some());
    let pair = build_conjugators(&left, &partition).unwrap();
    let cert = certify(&left, &switched, &pair);
    assert!(cert.adjacency_conjugated);
    assert!(cert.degree_commutation);
    assert!(cert.bracket_alignment);
    assert!(cert.master_identity);
    assert!(cert.conjugator_invertible);
    finish(4, "switching pipeline with certificate", t, 5);
}

#[test]
fn criterion_05_zeta_closed_forms_and_bump_algebra() {
    let t = Instant::now();
    let mut rng = Rng64::new(0x05);
    let one = rat(1);
    let outgoing_spec = [
        (Var::Tdd, one.clone()),
        (Var::Tud, one.clone()),
        (Var::Tdu, one),
    ];
    for _ in 0..100 {
        let n = rng.range(1, 4) as usize;
        let g = random_reciprocal_digraph(&mut rng, n, 6, 3);
        assert_eq!(
            zeta_closed_form_reversing(&g).unwrap(),
            zeta_inverse(&g, ZetaSpec::Reversing).unwrap()
        );
        assert_eq!(
            zeta_closed_form_outgoing(&g).unwrap(),
            zeta_inverse_specialized(&g, &outgoing_spec).unwrap()
        );
        let sys = EdgeSystem::build(&g).unwrap();
        let up_down = sys.b_matrix(true, false);
        let down_up = sys.b_matrix(false, true);
        let up_up = sys.b_matrix(true, true);
        assert!(up_down.mul(&up_down).is_zero());
        assert!(down_up.mul(&down_up).is_zero());
        assert_eq!(
            up_down.mul(&down_up).add(&down_up.mul(&up_down)),
            PolyMatrix::identity(sys.len())
        );
        assert_eq!(up_up.mul(&up_up).mul(&up_up), up_up);
    }
    finish(5, "closed forms and bump algebra, 100 instances", t, 120);
}

#[test]
fn criterion_06_walk_tallies_match_the_log_determinant_series() {
    let t = Instant::now();
    let mut rng = Rng64::new(0x06);
    let order = 8;
    for _ in 0..20 {
        let n = rng.range(1, 3) as usize;
        let g = random_weighted_digraph(&mut rng, n, 3);
        let tallies = walk_series_oracle(&g, order).unwrap();
        let sys = EdgeSystem::build(&g).unwrap();
        let traces = det_series_identity_minus_x(&sys.m_matrix(), order).neg_log_times_k();
        for k in 1..=order {
            assert_eq!(&traces[k - 1], tallies.tally(k), "length {k}");
        }
    }
    finish(6, "walk tallies vs log det to order 8, 20 instances", t, 120);
}

#[test]
fn criterion_07_ihara_zeta_cross_checks() {
    let t = Instant::now();
    let triangle =
        Digraph::from_edges(3, &[(0, 1), (1, 0), (1, 2), (2, 1), (2, 0), (0, 2)]).unwrap();
    let lifted = WeightedDigraph::from_digraph(&triangle).unwrap();
    let uu3 = &MultiPoly::one() - &MultiPoly::var(Var::Uu).pow(3);
    assert_eq!(zeta_inverse(&lifted, ZetaSpec::Ihara).unwrap(), &uu3 * &uu3);
    // zeta^{-1} = (1 - u^2)^{mbar - n} det(I - uA + u^2(D - I)), cross-multiplied
    // so both sides stay polynomial whatever the sign of mbar - n.
    let unit = &MultiPoly::one() - &MultiPoly::var(Var::Uu).pow(2);
    let mut rng = Rng64::new(0x07);
    for _ in 0..20 {
        let n = rng.range(1, 5) as usize;
        let g = random_connected_graph(&mut rng, n);
        let lifted = WeightedDigraph::from_digraph(&g).unwrap();
        let mut zeta = zeta_inverse(&lifted, ZetaSpec::Ihara).unwrap();
        let mut det = bass_determinant(&g).unwrap();
        let excess = (g.m() / 2) as i64 - g.n() as i64;
        for _ in 0..excess.max(0) {
            det = &det * &unit;
        }
        for _ in 0..(-excess).max(0) {
            zeta = &zeta * &unit;
        }
        assert_eq!(zeta, det);
    }
    finish(7, "ihara zeta vs bass determinant", t, 30);
}

#[test]
fn criterion_08_invasion_formula_paths_and_subdivision() {
    let t = Instant::now();
    let mut rng = Rng64::new(0x08);
    for _ in 0..200 {
        let n_s = rng.range(2, 5) as usize;
        let s = random_invader(&mut rng, n_s, 2);
        let n_g = rng.range(1, 4) as usize;
        let g = random_multidigraph(&mut rng, n_g, 2);
        assert_eq!(invasion_char_poly(&s, &g), chi(&invade(&s, &g)));
    }
    // Path invaders on a fixed host, against both the direct construction
    // and the Chebyshev form of the determinant.
    let host = Digraph::from_edges(3, &[(0, 1), (1, 2), (2, 0), (0, 2)]).unwrap();
    for n_s in 2..=6 {
        let directed = directed_path_invader(n_s);
        assert_eq!(
            invasion_char_poly(&directed, &host),
            chi(&invade(&directed, &host))
        );
        let undirected = undirected_path_invader(n_s);
        assert_eq!(
            invasion_char_poly(&undirected, &host),
            chi(&invade(&undirected, &host))
        );
        let u_c = chebyshev_u_half(n_s as i64 - 2);
        let u_cm1 = chebyshev_u_half(n_s as i64 - 3);
        let dout = host.out_degrees();
        let din = host.in_degrees();
        let mat = PolyMatrix::from_fn(host.n(), host.n(), |i, j| {
            let mut e = MultiPoly::zero();
            if i == j {
                e += &(&MultiPoly::var(Var::X) * &u_c);
                e -= &u_cm1.scale(&rat((dout[i] + din[i]) as i64));
            }
            e -= &MultiPoly::from_int((host.adj(i, j) + host.adj(j, i)) as i64);
            e
        });
        let power = (host.m() - host.n()) as u32;
        assert_eq!(
            invasion_char_poly(&undirected, &host),
            &mat.det_fraction_free() * &u_c.pow(power),
            "chebyshev form at {n_s}"
        );
    }
    // Subdividing the triangle yields the 6-cycle.
    let c3 = Digraph::from_edges(3, &[(0, 1), (1, 0), (1, 2), (2, 1), (2, 0), (0, 2)]).unwrap();
    let subdivided = symmetric_invade(&undirected_path_invader(3), &c3).unwrap();
    let x = MultiPoly::var(Var::X);
    let expected = &(&x.pow(2) - &MultiPoly::from_int(4))
        * &(&x.pow(2) - &MultiPoly::one()).pow(2);
    assert_eq!(chi(&subdivided), expected);
    finish(8, "invasion formula, paths, subdivision", t, 120);
}

/// Determinant over the fingerprint prime field, by Gaussian elimination.
/// Local to this test so the check does not lean on library internals.
fn det_mod_local(k: usize, mut m: Vec<u64>) -> u64 {
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % PRIME as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    let mut det = 1u64;
    for col in 0..k {
        let pivot = (col..k).find(|&r| m[r * k + col] != 0);
        let Some(pivot) = pivot else { return 0 };
        if pivot != col {
            for j in 0..k {
                m.swap(col * k + j, pivot * k + j);
            }
            det = PRIME - det;
        }
        let inv = powmod(m[col * k + col], PRIME - 2);
        det = mulmod(det, m[col * k + col]);
        for r in col + 1..k {
            let factor = mulmod(m[r * k + col], inv);
            if factor == 0 {
                continue;
            }
            for j in col..k {
                let sub = mulmod(factor, m[col * k + j]);
                m[r * k + j] = (m[r * k + j] + PRIME - sub) % PRIME;
            }
        }
    }
    det
}

/// Reversing zeta fingerprint: det(I - M) mod the prime with tuu = tdd = 1
/// and the remaining coordinates taken from the evaluation point.
fn reversing_fingerprint(g: &Digraph, point: &[u64; NVARS]) -> u64 {
    let lifted = WeightedDigraph::from_digraph(g).unwrap();
    let sys = EdgeSystem::build(&lifted).unwrap();
    let mut point = *point;
    point[Var::Tuu.index()] = 1;
    point[Var::Tdd.index()] = 1;
    let k = sys.len();
    let m = sys.m_matrix();
    let mut entries = vec![0u64; k * k];
    for i in 0..k {
        for j in 0..k {
            let v = eval_mod(m.get(i, j), &point);
            let diag = u64::from(i == j);
            entries[i * k + j] = (diag + PRIME - v) % PRIME;
        }
    }
    det_mod_local(k, entries)
}

fn exact_reversing(g: &Digraph) -> MultiPoly {
    let lifted = WeightedDigraph::from_digraph(g).unwrap();
    zeta_inverse(&lifted, ZetaSpec::Reversing).unwrap()
}

#[test]
fn criterion_09_reversing_zeta_equality_coincides_with_eta_equality() {
    let t = Instant::now();
    let points = eval_points(0x09);
    let mut rng = Rng64::new(0x09);
    let mut checked_unequal = 0usize;
    for n in 1..=4 {
        let config = SearchConfig {
            n,
            mode: SearchMode::Digraph,
            connected: true,
            seed: 0x09,
        };
        let reps = enumerate(&config).unwrap();
        let etas: Vec<MultiPoly> = reps.iter().map(|g| eta(g).poly).collect();
        for a in 0..reps.len() {
            for b in a + 1..reps.len() {
                assert_ne!(etas[a], etas[b], "eta-equal pair below 5 vertices");
            }
        }
        // Group by the reversing fingerprint; any collision must be resolved
        // by the exact polynomial, and the theorem demands it splits.
        let prints: Vec<(u64, u64)> = reps
            .iter()
            .map(|g| {
                (
                    reversing_fingerprint(g, &points[0]),
                    reversing_fingerprint(g, &points[1]),
                )
            })
            .collect();
        for a in 0..reps.len() {
            for b in a + 1..reps.len() {
                if prints[a] == prints[b] {
                    assert_ne!(
                        exact_reversing(&reps[a]),
                        exact_reversing(&reps[b]),
                        "reversing-zeta-equal pair with distinct eta at n = {n}"
                    );
                }
            }
        }
        // Explicit exact inequality on sampled eta-unequal pairs.
        if reps.len() >= 2 {
            let sample = if n == 4 { 88 } else { 6 };
            for _ in 0..sample {
                let a = rng.below(reps.len() as u64) as usize;
                let mut b = rng.below(reps.len() as u64) as usize;
                while b == a {
                    b = rng.below(reps.len() as u64) as usize;
                }
                assert_ne!(etas[a], etas[b]);
                if prints[a] == prints[b] {
                    assert_ne!(exact_reversing(&reps[a]), exact_reversing(&reps[b]));
                }
                checked_unequal += 1;
            }
        }
    }
    assert!(checked_unequal >= 100, "only {checked_unequal} pairs sampled");
    finish(9, "reversing zeta equality iff eta equality, n <= 4", t, 300);
}

#[test]
fn criterion_10_markov_identity_and_fixed_point_consistency() {
    let t = Instant::now();
    let mut rng = Rng64::new(0x10);
    for _ in 0..50 {
        let n = rng.range(1, 6) as usize;
        let g = random_graph(&mut rng, n);
        let p = markov_poly(&g).unwrap();
        let degrees = g.out_degrees();
        for _ in 0..50 {
            let point = random_point(&mut rng, &[Var::X, Var::A, Var::B], 6);
            let x = point[&Var::X].clone();
            let ab = &point[&Var::A] + &point[&Var::B];
            // f(a,b) mu_bar = det(x((a+b)I + D) + A + aI) at the point.
            let oracle = PolyMatrix::from_rat_fn(g.n(), g.n(), |i, j| {
                let mut e = rat(g.adj(i, j) as i64);
                if i == j {
                    e += &x * &(&ab + &rat(degrees[i] as i64)) + &point[&Var::A];
                }
                e
            })
            .det_fraction_free();
            assert_eq!(p.eval(&point).unwrap(), oracle.constant_term());
        }
    }
    let (left, right) = zeta_equivalent_graph_pair();
    let ml = markov_poly(&left).unwrap();
    let mr = markov_poly(&right).unwrap();
    assert_eq!(ml, mr);
    let at_one = [(Var::B, rat(1))];
    assert_eq!(ml.assign(&at_one), mr.assign(&at_one));
    finish(10, "markov identity, 50 graphs x 50 points", t, 60);
}

#[test]
fn criterion_11_exhaustive_search_reproduces_the_smallest_pairs() {
    let t = Instant::now();
    for n in 1..=4 {
        let report = mine_pairs(&SearchConfig {
            n,
            mode: SearchMode::Digraph,
            connected: true,
            seed: 0x11,
        })
        .unwrap();
        assert!(report.classes.is_empty(), "digraph classes at n = {n}");
    }
    let at_five = mine_pairs(&SearchConfig {
        n: 5,
        mode: SearchMode::Digraph,
        connected: true,
        seed: 0x11,
    })
    .unwrap();
    assert!(!at_five.classes.is_empty());
    let (left, right) = zeta_equivalent_digraph_pair();
    let found = at_five.classes.iter().any(|class| {
        class.members.len() == 2
            && iso_check(&class.members[0], &left).unwrap().is_some()
                != iso_check(&class.members[0], &right).unwrap().is_some()
            && iso_check(&class.members[1], &left).unwrap().is_some()
                != iso_check(&class.members[1], &right).unwrap().is_some()
    });
    assert!(found, "the bundled digraph pair is missing at n = 5");
    for n in 1..=7 {
        let report = mine_pairs(&SearchConfig {
            n,
            mode: SearchMode::Graph,
            connected: true,
            seed: 0x11,
        })
        .unwrap();
        assert!(report.classes.is_empty(), "graph classes at n = {n}");
    }
    finish(11, "exhaustive search to digraph n=5, graph n=7", t, 1800);
}

#[test]
fn criterion_12_completed_polynomial_is_linear_in_y() {
    let t = Instant::now();
    let mut rng = Rng64::new(0x12);
    for _ in 0..1000 {
        let n = rng.range(1, 5) as usize;
        let g = random_simple_digraph(&mut rng, n);
        let direct = eta_complete_matrix(&g).det_fraction_free();
        assert_eq!(direct.degree_in(Var::Y), 1);
        assert_eq!(direct, eta_complete(&g).unwrap());
    }
    finish(12, "completed polynomial linear in y, 1000 samples", t, 60);
}
