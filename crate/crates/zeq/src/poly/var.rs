//! The fixed variable alphabet of the polynomial ring.
//!
//! Every polynomial in this crate lives in Q[x, y, tu, td, uu, ud, tuu, tdd,
//! tud, tdu, a, b, su, sd]. The declaration order below doubles as the
//! lexicographic significance for the graded-lex monomial order, with `x`
//! most significant.

/// Number of variables in the fixed alphabet.
pub const NVARS: usize = 14;

/// One of the 14 ring variables.
///
/// Roles: `x`, `y` are the vertex-level characteristic variables, `tu`/`td`
/// weight out-/in-degrees, `uu`/`ud` weight forward/backward adjacency,
/// `tuu`/`tdd`/`tud`/`tdu` weight the four kinds of cyclic bumps in edge
/// walks, `a`/`b` are the lazy/deadly Markov parameters, and `su`/`sd` are
/// shorthands used transiently inside the zeta closed forms.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
#[repr(u8)]
pub enum Var {
    X,
    Y,
    Tu,
    Td,
    Uu,
    Ud,
    Tuu,
    Tdd,
    Tud,
    Tdu,
    A,
    B,
    Su,
    Sd,
}

impl Var {
    /// All variables in significance order.
    pub const ALL: [Var; NVARS] = [
        Var::X,
        Var::Y,
        Var::Tu,
        Var::Td,
        Var::Uu,
        Var::Ud,
        Var::Tuu,
        Var::Tdd,
        Var::Tud,
        Var::Tdu,
        Var::A,
        Var::B,
        Var::Su,
        Var::Sd,
    ];

    /// Position in the significance order; also the exponent-vector index.
    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    /// Canonical text name, used by the polynomial text format.
    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Tu => "tu",
            Var::Td => "td",
            Var::Uu => "uu",
            Var::Ud => "ud",
            Var::Tuu => "tuu",
            Var::Tdd => "tdd",
            Var::Tud => "tud",
            Var::Tdu => "tdu",
            Var::A => "a",
            Var::B => "b",
            Var::Su => "su",
            Var::Sd => "sd",
        }
    }

    /// Inverse of [`Var::name`].
    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == name)
    }
}

impl std::fmt::Display for Var {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}
