//! Exponent vectors ordered by graded lexicographic comparison.

use std::cmp::Ordering;
use std::fmt;

use super::var::{Var, NVARS};

/// A power product of the ring variables, stored as an exponent vector.
///
/// `Ord` is the graded-lex order: higher total degree wins, ties are broken
/// lexicographically with [`Var::X`] most significant. This order is
/// multiplicative, which is what makes exact long division by leading terms
/// sound.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial([u32; NVARS]);

impl Monomial {
    /// The empty product.
    pub const ONE: Monomial = Monomial([0; NVARS]);

    /// A single variable to the first power.
    pub fn var(v: Var) -> Monomial {
        Monomial::var_pow(v, 1)
    }

    /// `v^e`.
    pub fn var_pow(v: Var, e: u32) -> Monomial {
        let mut exps = [0; NVARS];
        exps[v.index()] = e;
        Monomial(exps)
    }

    #[inline]
    pub fn exponent(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    #[inline]
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = [0; NVARS];
        for i in 0..NVARS {
            exps[i] = self.0[i] + other.0[i];
        }
        Monomial(exps)
    }

    /// `other / self` when `self` divides `other`.
    pub fn checked_div(other: &Monomial, divisor: &Monomial) -> Option<Monomial> {
        let mut exps = [0; NVARS];
        for i in 0..NVARS {
            exps[i] = other.0[i].checked_sub(divisor.0[i])?;
        }
        Some(Monomial(exps))
    }

    /// Variables with nonzero exponent, in significance order.
    pub fn vars(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        Var::ALL
            .iter()
            .filter_map(move |&v| match self.exponent(v) {
                0 => None,
                e => Some((v, e)),
            })
    }

    /// Exponent vector with the exponents of `a` and `b` swapped.
    pub fn swap_vars(&self, a: Var, b: Var) -> Monomial {
        let mut exps = self.0;
        exps.swap(a.index(), b.index());
        Monomial(exps)
    }

    /// Exponent vector with `v` forced to zero.
    pub fn without_var(&self, v: Var) -> Monomial {
        let mut exps = self.0;
        exps[v.index()] = 0;
        Monomial(exps)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Monomial) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (v, e) in self.vars() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let x2 = Monomial::var_pow(Var::X, 2);
        let uu_ud = Monomial::var(Var::Uu).mul(&Monomial::var(Var::Ud));
        let x3 = Monomial::var_pow(Var::X, 3);
        // Degree dominates, then lex with x most significant.
        assert!(x3 > x2);
        assert!(x2 > uu_ud);
        assert!(Monomial::var(Var::X) > Monomial::var(Var::Y));
        assert!(uu_ud > Monomial::ONE);
    }

    #[test]
    fn division() {
        let m = Monomial::var_pow(Var::X, 2).mul(&Monomial::var(Var::Uu));
        let d = Monomial::var(Var::X);
        let q = Monomial::checked_div(&m, &d).unwrap();
        assert_eq!(q.mul(&d), m);
        assert_eq!(Monomial::checked_div(&d, &m), None);
    }

    #[test]
    fn display() {
        assert_eq!(Monomial::ONE.to_string(), "1");
        let m = Monomial::var_pow(Var::X, 2).mul(&Monomial::var(Var::Ud));
        assert_eq!(m.to_string(), "x^2*ud");
    }
}
