//! Permutations of vertex sets and their action on digraphs.

use super::digraph::Digraph;

/// A permutation of {0..n}, stored as the image list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from its image list, if bijective.
    pub fn from_images(images: Vec<usize>) -> Option<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return None;
            }
            seen[v] = true;
        }
        Some(Perm { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.images[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.images.len()];
        for (v, &img) in self.images.iter().enumerate() {
            inv[img] = v;
        }
        Perm { images: inv }
    }

    /// Composition acting as self after other: (self * other)(v) = self(other(v)).
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n());
        Perm {
            images: other.images.iter().map(|&v| self.images[v]).collect(),
        }
    }

    /// Relabels a digraph: edge i -> j becomes perm(i) -> perm(j).
    pub fn relabel(&self, g: &Digraph) -> Digraph {
        assert_eq!(self.n(), g.n());
        let n = g.n();
        let mut rows = vec![vec![0u32; n]; n];
        for i in 0..n {
            for j in 0..n {
                rows[self.apply(i)][self.apply(j)] = g.adj(i, j);
            }
        }
        Digraph::from_matrix(&rows)
    }
}

/// Visits every permutation of {0..n} via Heap's algorithm.
pub fn for_each_perm<F: FnMut(&[usize])>(n: usize, mut f: F) {
    let mut items: Vec<usize> = (0..n).collect();
    f(&items);
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            f(&items);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bijectivity_check() {
        assert!(Perm::from_images(vec![1, 0, 2]).is_some());
        assert!(Perm::from_images(vec![1, 1, 2]).is_none());
        assert!(Perm::from_images(vec![0, 3]).is_none());
    }

    #[test]
    fn inverse_and_compose() {
        let p = Perm::from_images(vec![2, 0, 3, 1]).unwrap();
        assert_eq!(p.compose(&p.inverse()), Perm::identity(4));
        assert_eq!(p.inverse().compose(&p), Perm::identity(4));
        let q = Perm::from_images(vec![1, 2, 3, 0]).unwrap();
        let pq = p.compose(&q);
        for v in 0..4 {
            assert_eq!(pq.apply(v), p.apply(q.apply(v)));
        }
    }

    #[test]
    fn relabel_round_trip() {
        let g = Digraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let p = Perm::from_images(vec![3, 1, 0, 2]).unwrap();
        let h = p.relabel(&g);
        assert_eq!(h.adj(3, 1), 1);
        assert_eq!(p.inverse().relabel(&h), g);
        assert_eq!(h.m(), g.m());
    }

    #[test]
    fn heap_visits_all_permutations() {
        let mut seen = std::collections::BTreeSet::new();
        for_each_perm(4, |p| {
            seen.insert(p.to_vec());
        });
        assert_eq!(seen.len(), 24);
    }

    #[test]
    fn zero_and_one_element_perms() {
        let mut count = 0;
        for_each_perm(0, |_| count += 1);
        assert_eq!(count, 1);
        count = 0;
        for_each_perm(1, |_| count += 1);
        assert_eq!(count, 1);
    }
}
