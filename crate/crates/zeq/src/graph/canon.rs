//! Canonical forms and isomorphism testing for small digraphs.
//!
//! The canonical form minimizes the row-major adjacency string over all
//! relabelings. Vertices are first grouped by (out-degree, in-degree, loops);
//! only permutations respecting these groups can realize the minimum, which
//! prunes the brute force drastically in practice.

use super::digraph::{Digraph, GraphError};
use super::perm::Perm;

/// Largest vertex count accepted by the brute-force canonical form.
pub const MAX_CANON_N: usize = 9;

/// Canonical representative of the isomorphism class, with a relabeling
/// witness mapping `g` onto it.
pub fn canonical_form(g: &Digraph) -> Result<(Digraph, Perm), GraphError> {
    let n = g.n();
    if n > MAX_CANON_N {
        return Err(GraphError::TooLarge { n, bound: MAX_CANON_N });
    }
    if n == 0 {
        return Ok((g.clone(), Perm::identity(0)));
    }
    let blocks = degree_blocks(g);
    let mut best: Option<Vec<u32>> = None;
    let mut best_pos_to_orig: Vec<usize> = Vec::new();
    let mut pos_to_orig = vec![0usize; n];
    search_blocks(g, &blocks, 0, &mut pos_to_orig, &mut best, &mut best_pos_to_orig);
    let flat = best.expect("at least one block-respecting permutation exists");
    let rows: Vec<Vec<u32>> = (0..n).map(|i| flat[i * n..(i + 1) * n].to_vec()).collect();
    let mut images = vec![0usize; n];
    for (pos, &orig) in best_pos_to_orig.iter().enumerate() {
        images[orig] = pos;
    }
    let witness = Perm::from_images(images).expect("position map is a bijection");
    Ok((Digraph::from_matrix(&rows), witness))
}

/// Isomorphism test; returns a permutation carrying `g` onto `h` if one exists.
pub fn iso_check(g: &Digraph, h: &Digraph) -> Result<Option<Perm>, GraphError> {
    if g.n() != h.n() || g.m() != h.m() {
        return Ok(None);
    }
    let mut gk = vertex_keys(g);
    let mut hk = vertex_keys(h);
    gk.sort_unstable();
    hk.sort_unstable();
    if gk != hk {
        return Ok(None);
    }
    let (gc, gp) = canonical_form(g)?;
    let (hc, hp) = canonical_form(h)?;
    if gc != hc {
        return Ok(None);
    }
    let witness = hp.inverse().compose(&gp);
    debug_assert_eq!(witness.relabel(g), *h);
    Ok(Some(witness))
}

fn vertex_keys(g: &Digraph) -> Vec<(u32, u32, u32)> {
    let out = g.out_degrees();
    let inn = g.in_degrees();
    (0..g.n()).map(|v| (out[v], inn[v], g.adj(v, v))).collect()
}

/// Groups vertices by degree key; blocks are sorted by key and occupy
/// consecutive position ranges in the canonical numbering.
fn degree_blocks(g: &Digraph) -> Vec<Vec<usize>> {
    let keys = vertex_keys(g);
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| keys[v]);
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match blocks.last_mut() {
            Some(b) if keys[b[0]] == keys[v] => b.push(v),
            _ => blocks.push(vec![v]),
        }
    }
    blocks
}

fn search_blocks(
    g: &Digraph,
    blocks: &[Vec<usize>],
    depth: usize,
    pos_to_orig: &mut Vec<usize>,
    best: &mut Option<Vec<u32>>,
    best_pos_to_orig: &mut Vec<usize>,
) {
    if depth == blocks.len() {
        consider_candidate(g, pos_to_orig, best, best_pos_to_orig);
        return;
    }
    let start: usize = blocks[..depth].iter().map(|b| b.len()).sum();
    let mut scratch = blocks[depth].clone();
    permute_into(g, blocks, depth, start, 0, &mut scratch, pos_to_orig, best, best_pos_to_orig);
}

#[allow(clippy::too_many_arguments)]
fn permute_into(
    g: &Digraph,
    blocks: &[Vec<usize>],
    depth: usize,
    start: usize,
    k: usize,
    scratch: &mut Vec<usize>,
    pos_to_orig: &mut Vec<usize>,
    best: &mut Option<Vec<u32>>,
    best_pos_to_orig: &mut Vec<usize>,
) {
    if k == scratch.len() {
        search_blocks(g, blocks, depth + 1, pos_to_orig, best, best_pos_to_orig);
        return;
    }
    for i in k..scratch.len() {
        scratch.swap(k, i);
        pos_to_orig[start + k] = scratch[k];
        permute_into(g, blocks, depth, start, k + 1, scratch, pos_to_orig, best, best_pos_to_orig);
        scratch.swap(k, i);
    }
}

fn consider_candidate(
    g: &Digraph,
    pos_to_orig: &[usize],
    best: &mut Option<Vec<u32>>,
    best_pos_to_orig: &mut Vec<usize>,
) {
    let n = g.n();
    match best {
        None => {
            let mut flat = Vec::with_capacity(n * n);
            for &i in pos_to_orig {
                for &j in pos_to_orig {
                    flat.push(g.adj(i, j));
                }
            }
            *best = Some(flat);
            *best_pos_to_orig = pos_to_orig.to_vec();
        }
        Some(current) => {
            let mut idx = 0;
            for &i in pos_to_orig {
                for &j in pos_to_orig {
                    let c = g.adj(i, j);
                    if c < current[idx] {
                        let mut flat = Vec::with_capacity(n * n);
                        for &a in pos_to_orig {
                            for &b in pos_to_orig {
                                flat.push(g.adj(a, b));
                            }
                        }
                        *best = Some(flat);
                        *best_pos_to_orig = pos_to_orig.to_vec();
                        return;
                    }
                    if c > current[idx] {
                        return;
                    }
                    idx += 1;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::perm::for_each_perm;

    fn pair5_left() -> Digraph {
        Digraph::from_edges(5, &[(0, 1), (2, 1), (1, 3), (3, 2), (3, 4)]).unwrap()
    }

    fn pair5_right() -> Digraph {
        Digraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 1), (3, 4)]).unwrap()
    }

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        let g = pair5_left();
        let (canon, witness) = canonical_form(&g).unwrap();
        assert_eq!(witness.relabel(&g), canon);
        for_each_perm(5, |p| {
            let perm = Perm::from_images(p.to_vec()).unwrap();
            let h = perm.relabel(&g);
            let (hc, hw) = canonical_form(&h).unwrap();
            assert_eq!(hc, canon);
            assert_eq!(hw.relabel(&h), hc);
        });
    }

    #[test]
    fn iso_check_finds_witness() {
        let g = pair5_left();
        let perm = Perm::from_images(vec![4, 2, 0, 1, 3]).unwrap();
        let h = perm.relabel(&g);
        let witness = iso_check(&g, &h).unwrap().unwrap();
        assert_eq!(witness.relabel(&g), h);
    }

    #[test]
    fn known_pair_is_not_isomorphic() {
        assert!(iso_check(&pair5_left(), &pair5_right()).unwrap().is_none());
    }

    #[test]
    fn cycle_vs_path_not_isomorphic() {
        let c3 = Digraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let p3 = Digraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(iso_check(&c3, &p3).unwrap().is_none());
        let c3_relabeled = Digraph::from_edges(3, &[(1, 0), (0, 2), (2, 1)]).unwrap();
        assert!(iso_check(&c3, &c3_relabeled).unwrap().is_some());
    }

    #[test]
    fn respects_multiplicities() {
        let g = Digraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        let h = Digraph::from_edges(2, &[(1, 0), (1, 0)]).unwrap();
        assert!(iso_check(&g, &h).unwrap().is_some());
        let k = Digraph::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert!(iso_check(&g, &k).unwrap().is_none());
    }

    #[test]
    fn too_large_is_an_error() {
        let g = Digraph::new(10);
        assert_eq!(
            canonical_form(&g).unwrap_err(),
            GraphError::TooLarge { n: 10, bound: 9 }
        );
    }
}
