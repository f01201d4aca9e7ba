//! Command line interface for the zeq library.
//!
//! Exit codes follow one convention everywhere: 0 for success or a true
//! predicate, 1 for a false predicate, 2 for usage or input errors.

use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use zeq::charpoly::{
    chi, eta, eta_bar, eta_complete, eta_complete_matrix, markov_poly, zeta_equivalent_digraphs,
    zeta_equivalent_graphs,
};
use zeq::graph::{iso_check, parse_digraph, parse_document, print_digraph, Digraph};
use zeq::invasion::{
    invade, invasion_char_poly, symmetric_invade, symmetric_invasion_char_poly, Invader,
};
use zeq::known::{
    graph_pair_partition, verify_digraph_pair_conjugator, zeta_equivalent_digraph_pair,
    zeta_equivalent_graph_pair,
};
use zeq::poly::{det_series_identity_minus_x, PolyMatrix, Var};
use zeq::random::{
    random_connected_graph, random_graph, random_invader, random_point, random_reciprocal_digraph,
    random_simple_digraph, random_switching_instance, random_weighted_digraph, Rng64,
};
use zeq::search::{mine_pairs, SearchConfig, SearchMode};
use zeq::switching::{build_conjugators, certify, parse_partition, perform_switching};
use zeq::zeta::{
    ihara_matches_bass, walks::walk_series_oracle, zeta_closed_form_outgoing,
    zeta_closed_form_reversing, zeta_inverse, zeta_inverse_specialized, EdgeSystem, ZetaSpec,
};
use zeq::WeightedDigraph;

#[derive(Parser)]
#[command(name = "zeq", version, about = "Exact digraph zeta functions and zeta-equivalence")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Digraph,
    Graph,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpecArg {
    Full,
    Reversing,
    Outgoing,
    Ihara,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CharpolyArg {
    Formula,
    Direct,
    Both,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the generalized characteristic polynomial of a digraph.
    Eta {
        /// Digraph in edge-list format.
        file: PathBuf,
        /// Compute the two-variable graph polynomial (requires a graph).
        #[arg(long)]
        graph: bool,
        /// Compute the completed polynomial with the all-ones perturbation.
        #[arg(long, conflicts_with = "graph")]
        complete: bool,
    },
    /// Decide zeta-equivalence of two digraphs or two graphs.
    Equiv {
        a: PathBuf,
        b: PathBuf,
        /// Compare full polynomials (digraph) or graph polynomials (graph).
        #[arg(long, value_enum)]
        mode: Mode,
    },
    /// Print an inverse zeta function, optionally with walk tallies.
    ZetaInv {
        /// Digraph or weighted digraph in edge-list format.
        file: PathBuf,
        /// Variable specialization to apply before the determinant.
        #[arg(long, value_enum, default_value_t = SpecArg::Full)]
        spec: SpecArg,
        /// Truncation length for the walk tally oracle.
        #[arg(long, requires = "oracle")]
        trunc: Option<usize>,
        /// Print exhaustive closed-walk tallies up to the truncation length.
        #[arg(long, requires = "trunc")]
        oracle: bool,
    },
    /// Attach an invader along every edge of a digraph.
    Invade {
        /// Invader in edge-list format with a `native <t> <h>` line.
        invader: PathBuf,
        /// Host digraph in edge-list format.
        graph: PathBuf,
        /// Replace each undirected edge by one gadget (requires symmetry).
        #[arg(long)]
        symmetric: bool,
        /// Print the characteristic polynomial instead of the digraph.
        #[arg(long, value_enum)]
        charpoly: Option<CharpolyArg>,
    },
    /// Switch a graph along a partition, optionally with a certificate.
    Switch {
        /// Graph in edge-list format.
        graph: PathBuf,
        /// Partition file with V/V'/W/X blocks and a phi map.
        partition: PathBuf,
        /// Verify the conjugation identities and print a summary.
        #[arg(long)]
        certify: bool,
    },
    /// Mine all small digraphs or graphs for zeta-equivalent classes.
    Search {
        /// Vertex count.
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Keep only (weakly) connected instances.
        #[arg(long)]
        connected: bool,
        /// Fingerprint seed; the report does not depend on it.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Write the report to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the randomized identity suites with a reproducible seed.
    VerifyIdentities {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Trials per identity family.
        #[arg(long, default_value_t = 10)]
        trials: usize,
    },
    /// Check the bundled zeta-equivalent pairs end to end.
    ReproduceFigures,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("zeq: {msg}");
            ExitCode::from(2)
        }
    }
}

fn fail<T>(e: impl Display) -> Result<T, String> {
    Err(e.to_string())
}

fn read_file(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_digraph(path: &Path) -> Result<Digraph, String> {
    parse_digraph(&read_file(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_weighted(path: &Path) -> Result<WeightedDigraph, String> {
    let doc = parse_document(&read_file(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    let lifted = if doc.weighted {
        doc.to_weighted().map_err(|e| e.to_string())
    } else {
        doc.to_digraph()
            .map_err(|e| e.to_string())
            .and_then(|g| WeightedDigraph::from_digraph(&g).map_err(|e| e.to_string()))
    };
    lifted.map_err(|e| format!("{}: {e}", path.display()))
}

fn load_invader(path: &Path) -> Result<Invader, String> {
    let doc = parse_document(&read_file(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    let (t, h) = doc
        .natives
        .ok_or_else(|| format!("{}: invader file needs a `native <t> <h>` line", path.display()))?;
    let s = doc.to_digraph().map_err(|e| format!("{}: {e}", path.display()))?;
    Invader::new(&s, t, h).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.cmd {
        Cmd::Eta { file, graph, complete } => {
            let g = load_digraph(&file)?;
            let poly = if graph {
                eta_bar(&g).or_else(fail)?.poly
            } else if complete {
                eta_complete(&g).or_else(fail)?
            } else {
                eta(&g).poly
            };
            println!("{poly}");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Equiv { a, b, mode } => {
            let ga = load_digraph(&a)?;
            let gb = load_digraph(&b)?;
            let equal = match mode {
                Mode::Digraph => zeta_equivalent_digraphs(&ga, &gb),
                Mode::Graph => zeta_equivalent_graphs(&ga, &gb),
            }
            .or_else(fail)?;
            println!("{}", if equal { "equivalent" } else { "not equivalent" });
            Ok(ExitCode::from(u8::from(!equal)))
        }
        Cmd::ZetaInv { file, spec, trunc, oracle } => {
            let g = load_weighted(&file)?;
            let spec = match spec {
                SpecArg::Full => ZetaSpec::Full,
                SpecArg::Reversing => ZetaSpec::Reversing,
                SpecArg::Outgoing => ZetaSpec::Outgoing,
                SpecArg::Ihara => ZetaSpec::Ihara,
            };
            if spec == ZetaSpec::Full && g.m() > 8 {
                return Err(format!(
                    "full zeta needs a {0}x{0} six-variable determinant; \
                     pick --spec reversing, outgoing, or ihara for more than 8 edges",
                    2 * g.m()
                ));
            }
            println!("{}", zeta_inverse(&g, spec).or_else(fail)?);
            if oracle {
                let order = trunc.expect("clap ties --oracle to --trunc");
                let tallies = walk_series_oracle(&g, order).or_else(fail)?;
                for k in 1..=order {
                    println!("tally {k}: {}", tallies.tally(k));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Invade { invader, graph, symmetric, charpoly } => {
            let s = load_invader(&invader)?;
            let g = load_digraph(&graph)?;
            let build = || {
                if symmetric {
                    symmetric_invade(&s, &g).map_err(|e| e.to_string())
                } else {
                    Ok(invade(&s, &g))
                }
            };
            let formula = || {
                if symmetric {
                    symmetric_invasion_char_poly(&s, &g).map_err(|e| e.to_string())
                } else {
                    Ok(invasion_char_poly(&s, &g))
                }
            };
            match charpoly {
                None => {
                    print!("{}", print_digraph(&build()?));
                    Ok(ExitCode::SUCCESS)
                }
                Some(CharpolyArg::Formula) => {
                    println!("{}", formula()?);
                    Ok(ExitCode::SUCCESS)
                }
                Some(CharpolyArg::Direct) => {
                    println!("{}", chi(&build()?));
                    Ok(ExitCode::SUCCESS)
                }
                Some(CharpolyArg::Both) => {
                    let by_formula = formula()?;
                    let direct = chi(&build()?);
                    println!("formula: {by_formula}");
                    println!("direct: {direct}");
                    if by_formula == direct {
                        Ok(ExitCode::SUCCESS)
                    } else {
                        eprintln!("zeq: formula and direct characteristic polynomials disagree");
                        Ok(ExitCode::FAILURE)
                    }
                }
            }
        }
        Cmd::Switch { graph, partition, certify: want_cert } => {
            let g = load_digraph(&graph)?;
            let p = parse_partition(&read_file(&partition)?)
                .map_err(|e| format!("{}: {e}", partition.display()))?;
            let switched = perform_switching(&g, &p).or_else(fail)?;
            print!("{}", print_digraph(&switched));
            if !want_cert {
                return Ok(ExitCode::SUCCESS);
            }
            let pair = build_conjugators(&g, &p).or_else(fail)?;
            let cert = certify(&g, &switched, &pair);
            let line = |name: &str, ok: bool| format!("{name}: {}", if ok { "ok" } else { "FAILED" });
            println!();
            println!("{}", line("adjacency conjugation", cert.adjacency_conjugated));
            println!("{}", line("degree commutation", cert.degree_commutation));
            println!("{}", line("bracket alignment", cert.bracket_alignment));
            println!("{}", line("master identity", cert.master_identity));
            println!("{}", line("conjugator invertible", cert.conjugator_invertible));
            println!("certificate: {}", if cert.all_hold() { "PASS" } else { "FAIL" });
            Ok(ExitCode::from(u8::from(!cert.all_hold())))
        }
        Cmd::Search { n, mode, connected, seed, out } => {
            let config = SearchConfig {
                n,
                mode: match mode {
                    Mode::Digraph => SearchMode::Digraph,
                    Mode::Graph => SearchMode::Graph,
                },
                connected,
                seed,
            };
            let report = mine_pairs(&config).or_else(fail)?;
            match out {
                Some(path) => fs::write(&path, report.to_string())
                    .map_err(|e| format!("{}: {e}", path.display()))?,
                None => print!("{report}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::VerifyIdentities { seed, trials } => verify_identities(seed, trials),
        Cmd::ReproduceFigures => reproduce_figures(),
    }
}

/// Runs one identity family and prints its verdict line.
fn family(
    name: &str,
    seed: u64,
    trials: usize,
    mut check: impl FnMut(&mut Rng64) -> Result<bool, String>,
) -> Result<bool, String> {
    let mut rng = Rng64::new(seed);
    for trial in 1..=trials {
        if !check(&mut rng).map_err(|e| format!("{name}, trial {trial}: {e}"))? {
            println!("FAIL {name}: trial {trial} of {trials}");
            return Ok(false);
        }
    }
    println!("ok   {name}: {trials} trials");
    Ok(true)
}

fn verify_identities(seed: u64, trials: usize) -> Result<ExitCode, String> {
    let mut all = true;
    all &= family("closed forms vs edge determinant", seed ^ 1, trials, |rng| {
        let n = rng.range(1, 4) as usize;
        let g = random_reciprocal_digraph(rng, n, 6, 3);
        let reversing = zeta_closed_form_reversing(&g).or_else(fail)?;
        let outgoing = zeta_closed_form_outgoing(&g).or_else(fail)?;
        let one = zeq::poly::rat(1);
        let outgoing_det = zeta_inverse_specialized(
            &g,
            &[(Var::Tdd, one.clone()), (Var::Tud, one.clone()), (Var::Tdu, one)],
        )
        .or_else(fail)?;
        Ok(reversing == zeta_inverse(&g, ZetaSpec::Reversing).or_else(fail)?
            && outgoing == outgoing_det)
    })?;
    all &= family("bump matrix algebra", seed ^ 2, trials, |rng| {
        let n = rng.range(1, 4) as usize;
        let g = random_reciprocal_digraph(rng, n, 6, 3);
        let sys = EdgeSystem::build(&g).or_else(fail)?;
        let up_down = sys.b_matrix(true, false);
        let down_up = sys.b_matrix(false, true);
        let up_up = sys.b_matrix(true, true);
        let id = PolyMatrix::identity(sys.len());
        Ok(up_down.mul(&up_down).is_zero()
            && down_up.mul(&down_up).is_zero()
            && up_down.mul(&down_up).add(&down_up.mul(&up_down)) == id
            && up_up.mul(&up_up).mul(&up_up) == up_up)
    })?;
    all &= family("walk tallies vs log determinant", seed ^ 3, trials, |rng| {
        let n = rng.range(1, 3) as usize;
        let g = random_weighted_digraph(rng, n, 3);
        let order = 5;
        let tallies = walk_series_oracle(&g, order).or_else(fail)?;
        let sys = EdgeSystem::build(&g).or_else(fail)?;
        let traces = det_series_identity_minus_x(&sys.m_matrix(), order).neg_log_times_k();
        Ok((1..=order).all(|k| &traces[k - 1] == tallies.tally(k)))
    })?;
    all &= family("invasion formula vs direct", seed ^ 4, trials, |rng| {
        let core = 2 + rng.below(3) as usize;
        let s = random_invader(rng, core, 2);
        let n = rng.range(1, 3) as usize;
        let g = random_simple_digraph(rng, n);
        Ok(invasion_char_poly(&s, &g) == chi(&invade(&s, &g)))
    })?;
    all &= family("completed polynomial linear in y", seed ^ 5, trials, |rng| {
        let n = rng.range(1, 5) as usize;
        let g = random_simple_digraph(rng, n);
        let direct = eta_complete_matrix(&g).det_fraction_free();
        Ok(direct.degree_in(Var::Y) <= 1 && direct == eta_complete(&g).or_else(fail)?)
    })?;
    all &= family("switching certificates", seed ^ 6, trials, |rng| {
        let inst = random_switching_instance(rng, 6);
        let switched = perform_switching(&inst.g, &inst.partition).or_else(fail)?;
        let pair = build_conjugators(&inst.g, &inst.partition).or_else(fail)?;
        Ok(certify(&inst.g, &switched, &pair).all_hold())
    })?;
    all &= family("markov identity at random points", seed ^ 7, trials, |rng| {
        let n = rng.range(1, 4) as usize;
        let g = random_graph(rng, n);
        let p = markov_poly(&g).or_else(fail)?;
        let point = random_point(rng, &[Var::X, Var::A, Var::B], 4);
        let x = point[&Var::X].clone();
        let ab = &point[&Var::A] + &point[&Var::B];
        let degrees = g.out_degrees();
        // f(a,b) det(xI + ((a+b)I+D)^{-1}(A+aI)) = det(x((a+b)I+D) + A + aI).
        let oracle = PolyMatrix::from_rat_fn(g.n(), g.n(), |i, j| {
            let mut e = zeq::poly::rat(g.adj(i, j) as i64);
            if i == j {
                e += &x * &(&ab + &zeq::poly::rat(degrees[i] as i64)) + &point[&Var::A];
            }
            e
        })
        .det_fraction_free();
        let value = p.eval(&point).map_err(|v| format!("missing value for {v}"))?;
        Ok(value == oracle.constant_term())
    })?;
    all &= family("ihara vs bass determinant", seed ^ 8, trials, |rng| {
        let n = rng.range(1, 5) as usize;
        let g = random_connected_graph(rng, n);
        ihara_matches_bass(&g).or_else(fail)
    })?;
    Ok(if all { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn reproduce_figures() -> Result<ExitCode, String> {
    let mut all = true;
    let mut report = |name: &str, ok: bool| {
        println!("{} {name}", if ok { "PASS" } else { "FAIL" });
        all &= ok;
    };
    let (left, right) = zeta_equivalent_digraph_pair();
    report(
        "digraph pair: shared eta, non-isomorphic",
        eta(&left).poly == eta(&right).poly
            && iso_check(&left, &right).or_else(fail)?.is_none(),
    );
    report(
        "digraph pair: explicit conjugator certificate",
        verify_digraph_pair_conjugator().all_hold(),
    );
    let (gl, gr) = zeta_equivalent_graph_pair();
    report(
        "graph pair: shared graph polynomial",
        eta_bar(&gl).or_else(fail)?.poly == eta_bar(&gr).or_else(fail)?.poly,
    );
    let switched = perform_switching(&gl, &graph_pair_partition()).or_else(fail)?;
    report(
        "graph pair: switching carries left to right",
        iso_check(&switched, &gr).or_else(fail)?.is_some(),
    );
    report(
        "graph pair: complements share the graph polynomial",
        eta_bar(&gl.complement().or_else(fail)?).or_else(fail)?.poly
            == eta_bar(&gr.complement().or_else(fail)?).or_else(fail)?.poly,
    );
    Ok(if all { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}
