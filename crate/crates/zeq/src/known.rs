//! Bundled reference instances: the smallest zeta-equivalent pairs and
//! the explicit certificates that come with them.

use std::collections::BTreeMap;

use crate::graph::Digraph;
use crate::poly::{MultiPoly, PolyMatrix, Var};
use crate::switching::{self, SwitchingPartition};

/// The smallest weakly connected zeta-equivalent digraph pair (5 vertices).
pub fn zeta_equivalent_digraph_pair() -> (Digraph, Digraph) {
    let left = Digraph::from_edges(5, &[(0, 1), (1, 3), (2, 1), (3, 2), (3, 4)])
        .expect("bundled digraph is well formed");
    let right = Digraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 1), (3, 4)])
        .expect("bundled digraph is well formed");
    (left, right)
}

/// Undirected edges shared by both members of the bundled graph pair.
const SHARED_GRAPH_EDGES: [(usize, usize); 14] = [
    (4, 2),
    (6, 1),
    (0, 7),
    (3, 5),
    (4, 0),
    (0, 1),
    (1, 5),
    (6, 2),
    (2, 3),
    (3, 7),
    (4, 6),
    (0, 2),
    (1, 3),
    (5, 7),
];

fn graph_from_pairs(n: usize, pairs: &[(usize, usize)]) -> Digraph {
    let mut edges = Vec::with_capacity(2 * pairs.len());
    for &(u, v) in pairs {
        edges.push((u, v));
        edges.push((v, u));
    }
    Digraph::from_edges(n, &edges).expect("bundled graph is well formed")
}

/// The smallest connected zeta-equivalent graph pair (9 vertices).
///
/// Both members share fourteen edges on vertices 0..8; they differ only in
/// the neighbourhood of vertex 8, which is switched from one four-set to
/// its partner under the bundled partition.
pub fn zeta_equivalent_graph_pair() -> (Digraph, Digraph) {
    let mut left_pairs = SHARED_GRAPH_EDGES.to_vec();
    let mut right_pairs = SHARED_GRAPH_EDGES.to_vec();
    for v in [2, 3, 6, 7] {
        left_pairs.push((8, v));
    }
    for v in [0, 1, 4, 5] {
        right_pairs.push((8, v));
    }
    (graph_from_pairs(9, &left_pairs), graph_from_pairs(9, &right_pairs))
}

/// Switching partition that carries the left bundled graph to the right one.
pub fn graph_pair_partition() -> SwitchingPartition {
    SwitchingPartition::new(
        vec![vec![0, 1], vec![4, 5]],
        vec![vec![2, 3], vec![6, 7]],
        vec![],
        vec![8],
        vec![(0, 2), (1, 3), (4, 6), (5, 7)],
    )
    .expect("bundled partition is well formed")
}

/// The bundled switching partition in the text format accepted by the parser.
pub fn graph_pair_partition_text() -> &'static str {
    "V1: 1 2\nV1': 3 4\nV2: 5 6\nV2': 7 8\nX: 9\nphi: 1->3 2->4 5->7 6->8\n"
}

/// Explicit conjugator between the generalized Laplacians of the digraph pair.
pub fn digraph_pair_conjugator() -> PolyMatrix {
    let tu = MultiPoly::var(Var::Tu);
    let td = MultiPoly::var(Var::Td);
    let uu = MultiPoly::var(Var::Uu);
    let ud = MultiPoly::var(Var::Ud);
    let uu2 = uu.pow(2);
    let ud2 = ud.pow(2);
    let uud = &uu * &ud;
    let tdud = &td * &ud;
    let tuuu = &tu * &uu;
    let z = MultiPoly::zero();
    let rows = [
        [&uu2 - &tdud, uud.clone(), z.clone(), z.clone(), z.clone()],
        [
            ud2.clone(),
            &uu2 + &tdud,
            ud2.clone(),
            uud.clone(),
            z.clone(),
        ],
        [z.clone(), ud2.clone(), uud.clone(), uu2.clone(), z.clone()],
        [
            z.clone(),
            uud.clone(),
            uu2.clone(),
            &ud2 + &tuuu,
            uu2.clone(),
        ],
        [z.clone(), z.clone(), z.clone(), uud.clone(), &ud2 - &tuuu],
    ];
    PolyMatrix::from_fn(5, 5, |i, j| rows[i][j].clone())
}

/// Closed form of the conjugator determinant.
pub fn digraph_pair_conjugator_det() -> MultiPoly {
    let tu = MultiPoly::var(Var::Tu);
    let td = MultiPoly::var(Var::Td);
    let uu = MultiPoly::var(Var::Uu);
    let ud = MultiPoly::var(Var::Ud);
    let two = MultiPoly::from_int(2);
    let first = &(&uu.pow(5) - &(&two * &(&uu.pow(2) * &ud.pow(3))))
        - &(&(&td.pow(2) * &(&uu * &ud.pow(2))) - &(&td * &ud.pow(4)));
    let second = &(&ud.pow(5) - &(&two * &(&ud.pow(2) * &uu.pow(3))))
        - &(&(&tu.pow(2) * &(&ud * &uu.pow(2))) - &(&tu * &uu.pow(4)));
    &first * &second
}

/// Outcome of checking the bundled conjugator against the digraph pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConjugatorCheck {
    pub conjugates: bool,
    pub det_matches: bool,
    pub singular_at_degenerate_point: bool,
}

impl ConjugatorCheck {
    /// True when every check passed.
    pub fn all_hold(&self) -> bool {
        self.conjugates && self.det_matches && self.singular_at_degenerate_point
    }
}

/// Verifies that the bundled conjugator carries the left generalized
/// Laplacian to the right one, that its determinant matches the closed
/// form, and that it degenerates when only backward adjacency survives.
pub fn verify_digraph_pair_conjugator() -> ConjugatorCheck {
    let (left, right) = zeta_equivalent_digraph_pair();
    let m = digraph_pair_conjugator();
    let det = m.det_fraction_free();
    let closed = digraph_pair_conjugator_det();
    let mut degenerate = BTreeMap::new();
    degenerate.insert(Var::Tu, MultiPoly::zero());
    degenerate.insert(Var::Td, MultiPoly::zero());
    degenerate.insert(Var::Ud, MultiPoly::zero());
    ConjugatorCheck {
        conjugates: switching::verify_explicit_conjugator(&m, &left, &right),
        det_matches: det == closed,
        singular_at_degenerate_point: closed.substitute_all(&degenerate).is_zero(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpoly::{degree_sequence_from_eta_bar, eta, eta_bar};
    use crate::graph::iso_check;
    use crate::switching::{certify, perform_switching, validate_partition};

    #[test]
    fn digraph_pair_is_zeta_equivalent_but_not_isomorphic() {
        let (left, right) = zeta_equivalent_digraph_pair();
        assert_eq!(left.m(), 5);
        assert_eq!(right.m(), 5);
        assert_eq!(eta(&left).poly, eta(&right).poly);
        assert_eq!(iso_check(&left, &right).unwrap(), None);
    }

    #[test]
    fn conjugator_certifies_the_digraph_pair() {
        let check = verify_digraph_pair_conjugator();
        assert!(check.conjugates);
        assert!(check.det_matches);
        assert!(check.singular_at_degenerate_point);
        assert!(check.all_hold());
    }

    #[test]
    fn conjugator_direction_is_left_to_right() {
        let (left, right) = zeta_equivalent_digraph_pair();
        let m = digraph_pair_conjugator();
        assert!(switching::verify_explicit_conjugator(&m, &left, &right));
        assert!(!switching::verify_explicit_conjugator(&m, &right, &left));
    }

    #[test]
    fn graph_pair_shares_eta_bar_and_complement_eta_bar() {
        let (left, right) = zeta_equivalent_graph_pair();
        assert!(left.is_graph() && right.is_graph());
        assert_eq!(left.m(), 36);
        assert_eq!(right.m(), 36);
        let eb_left = eta_bar(&left).unwrap();
        let eb_right = eta_bar(&right).unwrap();
        assert_eq!(eb_left.poly, eb_right.poly);
        let cl = eta_bar(&left.complement().unwrap()).unwrap();
        let cr = eta_bar(&right.complement().unwrap()).unwrap();
        assert_eq!(cl.poly, cr.poly);
        assert_eq!(iso_check(&left, &right).unwrap(), None);
        let degrees = degree_sequence_from_eta_bar(&eb_left).unwrap();
        assert_eq!(degrees, vec![5, 5, 4, 4, 4, 4, 4, 3, 3]);
        assert_eq!(degrees, degree_sequence_from_eta_bar(&eb_right).unwrap());
    }

    #[test]
    fn partition_switches_left_graph_to_right_graph() {
        let (left, right) = zeta_equivalent_graph_pair();
        let partition = graph_pair_partition();
        let report = validate_partition(&left, &partition).unwrap();
        assert!(report.is_valid(), "{report}");
        let switched = perform_switching(&left, &partition).unwrap();
        assert_eq!(switched, right);
        let back = perform_switching(&right, &partition).unwrap();
        assert_eq!(back, left);
    }

    #[test]
    fn partition_text_parses_to_the_bundled_partition() {
        let parsed = switching::parse_partition(graph_pair_partition_text()).unwrap();
        assert_eq!(parsed, graph_pair_partition());
    }

    #[test]
    fn certificate_holds_for_the_graph_pair() {
        let (left, right) = zeta_equivalent_graph_pair();
        let partition = graph_pair_partition();
        let pair = switching::build_conjugators(&left, &partition).unwrap();
        let cert = certify(&left, &right, &pair);
        assert!(cert.all_hold(), "{}", cert.summary());
    }
}
