//! Sparse multivariate polynomials over arbitrary-precision rationals.
//!
//! `MultiPoly` carries every characteristic polynomial and zeta function in
//! this crate. Terms live in a `BTreeMap` keyed by the graded-lex
//! [`Monomial`] order, so iteration, structural equality, and text output are
//! all canonical. The invariant throughout: no zero coefficient is stored.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::var::Var;

/// Exact rational scalar type used for all coefficients.
pub type Rat = num_rational::BigRational;

/// Shorthand for an integer scalar.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for the reduced fraction `num/den`.
pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// A sparse polynomial in the fixed 14-variable alphabet.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rat>,
}

impl MultiPoly {
    pub fn zero() -> MultiPoly {
        MultiPoly::default()
    }

    pub fn one() -> MultiPoly {
        MultiPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> MultiPoly {
        MultiPoly::term(Monomial::ONE, c)
    }

    pub fn from_int(n: i64) -> MultiPoly {
        MultiPoly::constant(rat(n))
    }

    pub fn var(v: Var) -> MultiPoly {
        MultiPoly::term(Monomial::var(v), Rat::one())
    }

    /// The single-term polynomial `c * m`; zero coefficients collapse to 0.
    pub fn term(m: Monomial, c: Rat) -> MultiPoly {
        let mut p = MultiPoly::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    /// Coefficient of `m`, zero if absent.
    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&Monomial::ONE)
    }

    /// Leading term in graded-lex order, if any.
    pub fn leading(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Total degree; zero for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// True when every term has total degree `d`.
    pub fn is_homogeneous_of_degree(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.total_degree() == d)
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation; returns the first unassigned variable on failure.
    pub fn eval(&self, point: &BTreeMap<Var, Rat>) -> Result<Rat, Var> {
        for v in Var::ALL {
            if self.degree_in(v) > 0 && !point.contains_key(&v) {
                return Err(v);
            }
        }
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.vars() {
                t *= rat_pow(&point[&v], e);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Simultaneous substitution of polynomials for variables. Variables not
    /// in `map` are left untouched.
    pub fn substitute_all(&self, map: &BTreeMap<Var, MultiPoly>) -> MultiPoly {
        let mut powers: BTreeMap<Var, Vec<MultiPoly>> =
            map.keys().map(|&v| (v, vec![MultiPoly::one()])).collect();
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut residual = *m;
            let mut factor = MultiPoly::one();
            for (v, e) in m.vars() {
                if map.contains_key(&v) {
                    residual = residual.without_var(v);
                    factor = &factor * power_of(&mut powers, map, v, e);
                }
            }
            out += &factor.mul_term(&residual, c);
        }
        out
    }

    /// Substitution of a single variable.
    pub fn substitute(&self, v: Var, p: &MultiPoly) -> MultiPoly {
        let mut map = BTreeMap::new();
        map.insert(v, p.clone());
        self.substitute_all(&map)
    }

    /// Partial evaluation: fixes the listed variables to constants.
    pub fn assign(&self, values: &[(Var, Rat)]) -> MultiPoly {
        let map: BTreeMap<Var, MultiPoly> = values
            .iter()
            .map(|(v, c)| (*v, MultiPoly::constant(c.clone())))
            .collect();
        self.substitute_all(&map)
    }

    /// Renames by swapping two variables in every term.
    pub fn swap_vars(&self, a: Var, b: Var) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.swap_vars(a, b), c.clone()))
                .collect(),
        }
    }

    /// Coefficient of `v^k`, as a polynomial with `v` removed.
    pub fn coeff_in_var(&self, v: Var, k: u32) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            if m.exponent(v) == k {
                out.add_term(m.without_var(v), c.clone());
            }
        }
        out
    }

    /// Product with the single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), tc * c))
                .collect(),
        }
    }

    /// Exact division: `Some(q)` with `self = q * d`, or `None` when `d` does
    /// not divide `self`. Long division by leading terms; sound because the
    /// graded-lex order is multiplicative.
    pub fn exact_div(&self, d: &MultiPoly) -> Option<MultiPoly> {
        let (dm, dc) = d.leading()?;
        let (dm, dc) = (*dm, dc.clone());
        let mut rem = self.clone();
        let mut quo = MultiPoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let qm = Monomial::checked_div(rm, &dm)?;
            let qc = rc / &dc;
            rem = &rem - &d.mul_term(&qm, &qc);
            quo.add_term(qm, qc);
        }
        Some(quo)
    }
}

fn power_of<'a>(
    powers: &'a mut BTreeMap<Var, Vec<MultiPoly>>,
    map: &BTreeMap<Var, MultiPoly>,
    v: Var,
    e: u32,
) -> &'a MultiPoly {
    let table = powers.get_mut(&v).expect("power table for substituted var");
    while table.len() <= e as usize {
        let next = table.last().unwrap() * &map[&v];
        table.push(next);
    }
    &table[e as usize]
}

/// `base^e` by repeated squaring.
pub fn rat_pow(base: &Rat, e: u32) -> Rat {
    let mut acc = Rat::one();
    let mut sq = base.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &sq;
        }
        e >>= 1;
        if e > 0 {
            sq = &sq * &sq;
        }
    }
    acc
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        // Accumulate into a map to merge colliding monomials as we go.
        let mut terms: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for (am, ac) in &self.terms {
            for (bm, bc) in &rhs.terms {
                let m = am.mul(bm);
                let c = ac * bc;
                match terms.entry(m) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += c;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                }
            }
        }
        MultiPoly { terms }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

/// Canonical text form: terms in descending graded-lex order, reduced
/// fractional coefficients, `^` for powers and `*` between factors. Unit
/// coefficients on non-constant terms are omitted, e.g. `x^2 - uu*ud`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> MultiPoly {
        MultiPoly::var(Var::X)
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&x() + &MultiPoly::one()) * &(&x() - &MultiPoly::one());
        let expected = &x().pow(2) - &MultiPoly::one();
        assert_eq!(p, expected);
    }

    #[test]
    fn additive_identity() {
        let p = &x().pow(3) - &MultiPoly::var(Var::Uu);
        assert_eq!(&p + &MultiPoly::zero(), p);
    }

    #[test]
    fn monomial_product() {
        let uu_ud = &MultiPoly::var(Var::Uu) * &MultiPoly::var(Var::Ud);
        let sq = &uu_ud * &uu_ud;
        let expected = MultiPoly::term(
            Monomial::var_pow(Var::Uu, 2).mul(&Monomial::var_pow(Var::Ud, 2)),
            rat(1),
        );
        assert_eq!(sq, expected);
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = &x() - &x();
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }

    #[test]
    fn eval_exact() {
        // (x^2 - uu*ud) at x=3, uu=2, ud=1 is 7.
        let p = &x().pow(2) - &(&MultiPoly::var(Var::Uu) * &MultiPoly::var(Var::Ud));
        let point: BTreeMap<Var, Rat> = [(Var::X, rat(3)), (Var::Uu, rat(2)), (Var::Ud, rat(1))]
            .into_iter()
            .collect();
        assert_eq!(p.eval(&point).unwrap(), rat(7));
        assert_eq!(MultiPoly::from_int(5).eval(&BTreeMap::new()).unwrap(), rat(5));
        assert_eq!(p.eval(&BTreeMap::new()), Err(Var::X));
    }

    #[test]
    fn eval_is_ring_hom() {
        let p = &x().pow(2) + &MultiPoly::var(Var::Uu).scale(&ratio(3, 2));
        let q = &MultiPoly::var(Var::Ud) - &MultiPoly::from_int(4);
        let point: BTreeMap<Var, Rat> = [
            (Var::X, ratio(1, 3)),
            (Var::Uu, rat(-2)),
            (Var::Ud, ratio(7, 5)),
        ]
        .into_iter()
        .collect();
        let lhs = (&p * &q).eval(&point).unwrap();
        let rhs = p.eval(&point).unwrap() * q.eval(&point).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn simultaneous_substitution() {
        // x -> x + uu together with uu -> x must not cascade.
        let p = &x() + &MultiPoly::var(Var::Uu);
        let map: BTreeMap<Var, MultiPoly> = [
            (Var::X, &x() + &MultiPoly::var(Var::Uu)),
            (Var::Uu, x()),
        ]
        .into_iter()
        .collect();
        let got = p.substitute_all(&map);
        let expected = &(&x() + &MultiPoly::var(Var::Uu)) + &x();
        assert_eq!(got, expected);
    }

    #[test]
    fn exact_division() {
        let d = &x() + &MultiPoly::var(Var::Uu);
        let q = &x().pow(2) - &MultiPoly::var(Var::Ud).scale(&ratio(5, 3));
        let p = &d * &q;
        assert_eq!(p.exact_div(&d).unwrap(), q);
        let off = &p + &MultiPoly::one();
        assert_eq!(off.exact_div(&d), None);
    }

    #[test]
    fn display_canonical_form() {
        let p = &x().pow(2) - &(&MultiPoly::var(Var::Uu) * &MultiPoly::var(Var::Ud));
        assert_eq!(p.to_string(), "x^2 - uu*ud");
        assert_eq!(MultiPoly::zero().to_string(), "0");
        assert_eq!(MultiPoly::from_int(-3).to_string(), "-3");
        let q = &MultiPoly::var(Var::Y).scale(&ratio(1, 2)) - &MultiPoly::from_int(2);
        assert_eq!(q.to_string(), "1/2*y - 2");
    }

    #[test]
    fn homogeneity_check() {
        let p = &(&x() * &x()) + &(&MultiPoly::var(Var::Tu) * &MultiPoly::var(Var::Uu));
        assert!(p.is_homogeneous_of_degree(2));
        assert!(!(&p + &MultiPoly::one()).is_homogeneous_of_degree(2));
    }
}
