//! Schwartz-Zippel fingerprints: evaluation at seeded pseudorandom points
//! modulo a fixed 61-bit prime.
//!
//! Equal polynomials always collide; distinct polynomials of total degree d
//! collide with probability at most d/PRIME per point. Fingerprints combine
//! two points. The prime and the point derivation are fixed so that runs are
//! reproducible; there is deliberately no way to override them.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::multipoly::{MultiPoly, Rat};
use super::var::NVARS;

/// The Mersenne prime 2^61 - 1.
pub const PRIME: u64 = (1 << 61) - 1;

/// Number of evaluation points combined into one fingerprint.
pub const POINTS: usize = 2;

#[inline]
pub(crate) fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[inline]
pub(crate) fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

#[inline]
pub(crate) fn addmod(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= PRIME {
        s - PRIME
    } else {
        s
    }
}

#[inline]
pub(crate) fn submod(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + PRIME - b
    }
}

pub(crate) fn powmod(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1u64;
    base %= PRIME;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base);
        }
        base = mulmod(base, base);
        exp >>= 1;
    }
    acc
}

/// Multiplicative inverse mod PRIME; `a` must be nonzero mod PRIME.
pub(crate) fn invmod(a: u64) -> u64 {
    debug_assert!(a % PRIME != 0);
    powmod(a, PRIME - 2)
}

/// Residue of an exact rational mod PRIME.
pub(crate) fn rat_mod(r: &Rat) -> u64 {
    let num = bigint_mod(r.numer());
    let den = bigint_mod(r.denom());
    assert!(den != 0, "coefficient denominator divisible by the fingerprint prime");
    mulmod(num, invmod(den))
}

fn bigint_mod(n: &BigInt) -> u64 {
    let p = BigInt::from(PRIME);
    let mut m = n % &p;
    if m.is_negative() {
        m += &p;
    }
    m.to_u64().expect("reduced residue fits in u64")
}

/// The deterministic evaluation points for a seed: nonzero coordinates in
/// [1, PRIME - 1], one per variable.
pub fn eval_points(seed: u64) -> [[u64; NVARS]; POINTS] {
    let mut state = seed ^ 0x5eed_0f1e_ce1e_b815;
    let mut points = [[0u64; NVARS]; POINTS];
    for point in points.iter_mut() {
        for coord in point.iter_mut() {
            *coord = splitmix64(&mut state) % (PRIME - 1) + 1;
        }
    }
    points
}

/// Exact evaluation of `p` mod PRIME at `point` (one value per variable).
pub fn eval_mod(p: &MultiPoly, point: &[u64; NVARS]) -> u64 {
    let mut acc = 0u64;
    for (m, c) in p.terms() {
        let mut t = rat_mod(c);
        for (v, e) in m.vars() {
            t = mulmod(t, powmod(point[v.index()], e as u64));
        }
        acc = addmod(acc, t);
    }
    acc
}

/// 64-bit fingerprint of a polynomial: a deterministic combination of its
/// values at the two seed-derived points.
pub fn fingerprint(p: &MultiPoly, seed: u64) -> u64 {
    let points = eval_points(seed);
    let e0 = eval_mod(p, &points[0]);
    let e1 = eval_mod(p, &points[1]);
    combine(e0, e1)
}

/// Mixes two point evaluations into one fingerprint word.
pub fn combine(e0: u64, e1: u64) -> u64 {
    e0.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ e1.rotate_left(23)
}

/// Exact determinant of a square matrix over Z/PRIME, row-major entries.
/// Used by the search module to fingerprint without building polynomials.
pub(crate) fn det_mod(n: usize, entries: &mut [u64]) -> u64 {
    debug_assert_eq!(entries.len(), n * n);
    let mut det = 1u64;
    for k in 0..n {
        let pivot_row = match (k..n).find(|&i| entries[i * n + k] % PRIME != 0) {
            Some(i) => i,
            None => return 0,
        };
        if pivot_row != k {
            for j in 0..n {
                entries.swap(pivot_row * n + j, k * n + j);
            }
            det = submod(0, det);
        }
        let pivot = entries[k * n + k] % PRIME;
        det = mulmod(det, pivot);
        let inv = invmod(pivot);
        for i in k + 1..n {
            let factor = mulmod(entries[i * n + k] % PRIME, inv);
            if factor == 0 {
                continue;
            }
            for j in k..n {
                let sub = mulmod(factor, entries[k * n + j] % PRIME);
                entries[i * n + j] = submod(entries[i * n + j] % PRIME, sub);
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::multipoly::{rat, ratio};
    use crate::poly::var::Var;

    #[test]
    fn deterministic() {
        let p = &MultiPoly::var(Var::X).pow(3) - &MultiPoly::var(Var::Uu).scale(&ratio(2, 7));
        assert_eq!(fingerprint(&p, 42), fingerprint(&p, 42));
        assert_ne!(fingerprint(&p, 42), fingerprint(&p, 43), "seed should matter");
    }

    #[test]
    fn structural_equality_collides() {
        // Same polynomial built along different expression trees.
        let x = MultiPoly::var(Var::X);
        let one = MultiPoly::one();
        let a = &(&x + &one) * &(&x - &one);
        let b = &x.pow(2) - &one;
        assert_eq!(fingerprint(&a, 7), fingerprint(&b, 7));
    }

    #[test]
    fn rational_coefficients_reduce_correctly() {
        // 1/2 mod p times 2 is 1.
        let half = rat_mod(&ratio(1, 2));
        assert_eq!(mulmod(half, 2), 1);
        let neg = rat_mod(&rat(-1));
        assert_eq!(addmod(neg, 1), 0);
    }

    #[test]
    fn no_collisions_among_distinct_small_polys() {
        // 10,000 pairwise distinct polynomials, zero observed collisions.
        let mut seen = std::collections::HashMap::new();
        let mut state = 99u64;
        for i in 0..10_000u64 {
            let c0 = (splitmix64(&mut state) % 2001) as i64 - 1000;
            let c1 = (splitmix64(&mut state) % 97) as i64 + 1;
            let e = (i % 20) as u32;
            // i is folded in so all 10k polynomials are pairwise distinct.
            let p = &MultiPoly::var(Var::X).pow(e).scale(&rat(c1))
                + &(&MultiPoly::var(Var::Ud).scale(&rat(c0)) + &MultiPoly::from_int(i as i64));
            let fp = fingerprint(&p, 1234);
            if let Some(prev) = seen.insert(fp, p.clone()) {
                assert_eq!(prev, p, "fingerprint collision between distinct polynomials");
            }
        }
    }

    #[test]
    fn det_mod_matches_poly_det() {
        use crate::poly::matrix::PolyMatrix;
        let m = PolyMatrix::from_fn(3, 3, |i, j| MultiPoly::from_int(((i * 5 + j * 7) % 11) as i64 - 5));
        let exact = m.det_fraction_free();
        let mut entries: Vec<u64> = (0..3)
            .flat_map(|i| (0..3).map(move |j| (i, j)))
            .map(|(i, j)| rat_mod(&m.get(i, j).constant_term()))
            .collect();
        assert_eq!(det_mod(3, &mut entries), rat_mod(&exact.constant_term()));
    }
}
