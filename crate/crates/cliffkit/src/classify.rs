//! Structure of `Cl(p,q)` and `C_n` as matrix algebras: ring type, periodic
//! table, Brauer–Wall classes, Karoubi factorization and mod-8 periodicity.

use std::fmt;

use serde::Serialize;

use crate::algebra::{GroundField, Signature};
use crate::error::{Error, Result};

/// Ring over which the algebra is a full matrix algebra (doubled rings for
/// the semisimple cases).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Ring {
    R,
    C,
    H,
    /// `²R = R ⊕ R`
    RR,
    /// `²H = H ⊕ H`
    HH,
    /// `²C = C ⊕ C` (odd-dimensional complex algebras)
    CC,
}

impl Ring {
    /// The division ring of one simple summand.
    pub fn division_ring(self) -> Ring {
        match self {
            Ring::RR => Ring::R,
            Ring::HH => Ring::H,
            Ring::CC => Ring::C,
            r => r,
        }
    }

    pub fn is_doubled(self) -> bool {
        matches!(self, Ring::RR | Ring::HH | Ring::CC)
    }

    /// Real dimension of the division ring of one summand.
    pub fn real_dim(self) -> usize {
        match self.division_ring() {
            Ring::R => 1,
            Ring::C => 2,
            _ => 4,
        }
    }

    /// Symbol without the doubling prefix.
    pub fn base_symbol(self) -> &'static str {
        match self.division_ring() {
            Ring::R => "R",
            Ring::C => "C",
            _ => "H",
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Ring::R => "R",
            Ring::C => "C",
            Ring::H => "H",
            Ring::RR => "R+R",
            Ring::HH => "H+H",
            Ring::CC => "C+C",
        };
        write!(f, "{s}")
    }
}

/// Symbolic matrix form such as `H(2)` or `²R(4)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct MatrixForm {
    pub ring: Ring,
    pub dim: usize,
    pub doubled: bool,
}

impl fmt::Display for MatrixForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = if self.doubled { "²" } else { "" };
        if self.dim == 1 {
            write!(f, "{prefix}{}", self.ring.base_symbol())
        } else {
            write!(f, "{prefix}{}({})", self.ring.base_symbol(), self.dim)
        }
    }
}

/// Classification of one algebra.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct AlgebraClass {
    pub sig: Signature,
    pub ring: Ring,
    pub simple: bool,
    pub matrix_form: MatrixForm,
    /// `p − q mod 8` (real) or `n mod 8` (complex).
    pub mod8: usize,
    /// Brauer–Wall class: `q − p mod 8` (real) or `n mod 2` (complex).
    pub bw_class: usize,
}

fn pow2(e: usize) -> usize {
    1usize << e
}

/// Ring type, simplicity and matrix size of `Cl(p,q)` or `C_n`.
pub fn algebra_class(sig: Signature) -> AlgebraClass {
    let n = sig.n();
    let mod8 = sig.mod8();
    let (ring, dim) = match sig.field {
        GroundField::Complex => {
            if n % 2 == 0 {
                (Ring::C, pow2(n / 2))
            } else {
                (Ring::CC, pow2((n - 1) / 2))
            }
        }
        GroundField::Real => match mod8 {
            0 | 2 => (Ring::R, pow2(n / 2)),
            3 | 7 => (Ring::C, pow2((n - 1) / 2)),
            4 | 6 => (Ring::H, pow2(n / 2 - 1)),
            1 => (Ring::RR, pow2((n - 1) / 2)),
            _ => (Ring::HH, pow2((n - 3) / 2)),
        },
    };
    let bw_class = match sig.field {
        GroundField::Real => (sig.q as i64 - sig.p as i64).rem_euclid(8) as usize,
        GroundField::Complex => n % 2,
    };
    AlgebraClass {
        sig,
        ring,
        simple: !ring.is_doubled(),
        matrix_form: MatrixForm { ring: ring.division_ring(), dim, doubled: ring.is_doubled() },
        mod8,
        bw_class,
    }
}

/// Grid of real classes, indexed `[q][p]` for `0 ≤ p ≤ max_p`, `0 ≤ q ≤ max_q`.
pub fn periodic_table(max_p: usize, max_q: usize) -> Vec<Vec<AlgebraClass>> {
    (0..=max_q)
        .map(|q| (0..=max_p).map(|p| algebra_class(Signature::real(p, q))).collect())
        .collect()
}

/// Plain-text rendering of [`periodic_table`]: one row per `q`, one column per `p`.
pub fn periodic_table_text(max_p: usize, max_q: usize) -> String {
    let grid = periodic_table(max_p, max_q);
    let cells: Vec<Vec<String>> = grid.iter().map(|row| row.iter().map(|c| c.matrix_form.to_string()).collect()).collect();
    let width = cells.iter().flatten().map(|c| c.chars().count()).max().unwrap_or(1).max(3);
    let pad = |s: &str| format!("{}{}", " ".repeat(width - s.chars().count()), s);
    let mut out = String::new();
    out.push_str(&pad("q\\p"));
    for p in 0..=max_p {
        out.push_str("  ");
        out.push_str(&pad(&p.to_string()));
    }
    out.push('\n');
    for (q, row) in cells.iter().enumerate() {
        out.push_str(&pad(&q.to_string()));
        for c in row {
            out.push_str("  ");
            out.push_str(&pad(c));
        }
        out.push('\n');
    }
    out
}

/// Brauer–Wall class of the graded tensor product of two algebras.
pub fn bw_compose(c1: &AlgebraClass, c2: &AlgebraClass) -> Result<usize> {
    if c1.sig.field != c2.sig.field {
        return Err(Error::FieldMismatch(format!("{} and {}", c1.sig, c2.sig)));
    }
    let modulus = match c1.sig.field {
        GroundField::Real => 8,
        GroundField::Complex => 2,
    };
    Ok((c1.bw_class + c2.bw_class) % modulus)
}

/// Factor an even-dimensional algebra into two-generator pieces, greedily
/// peeling `Cl(1,1)` while both `p, q > 0`, then `Cl(2,0)` or `Cl(0,2)`.
pub fn karoubi_factorize(sig: Signature) -> Result<Vec<Signature>> {
    if sig.n() % 2 == 1 {
        return Err(Error::OddDimension(sig.n()));
    }
    if sig.is_complex() {
        return Ok(vec![Signature::complex(2); sig.n() / 2]);
    }
    let (mut p, mut q) = (sig.p, sig.q);
    let mut out = Vec::with_capacity(sig.n() / 2);
    while p + q > 0 {
        let f = if p > 0 && q > 0 {
            Signature::real(1, 1)
        } else if p >= 2 {
            Signature::real(2, 0)
        } else if q >= 2 {
            Signature::real(0, 2)
        } else {
            // p + q even, so one of the branches above always applies
            unreachable!("odd remainder in factorization")
        };
        p -= f.p;
        q -= f.q;
        out.push(f);
    }
    Ok(out)
}

/// Bott/ABS shift: `Cl(p+8,q)` has the same ring and simplicity as `Cl(p,q)`
/// with a 16-fold larger matrix size.
pub fn abs_shift_check(sig: Signature) -> bool {
    let a = algebra_class(sig);
    let b = algebra_class(Signature { p: sig.p + 8, ..sig });
    a.ring == b.ring && a.simple == b.simple && b.matrix_form.dim == 16 * a.matrix_form.dim
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_classes() {
        assert_eq!(algebra_class(Signature::real(1, 3)).matrix_form.to_string(), "H(2)");
        assert_eq!(algebra_class(Signature::real(4, 1)).matrix_form.to_string(), "C(4)");
        let c10 = algebra_class(Signature::real(1, 0));
        assert_eq!(c10.matrix_form.to_string(), "²R");
        assert!(!c10.simple);
        assert_eq!(algebra_class(Signature::complex(3)).ring, Ring::CC);
    }

    #[test]
    fn karoubi_examples() {
        assert_eq!(karoubi_factorize(Signature::real(1, 3)).unwrap(), vec![Signature::real(1, 1), Signature::real(0, 2)]);
        assert_eq!(karoubi_factorize(Signature::real(3, 1)).unwrap(), vec![Signature::real(1, 1), Signature::real(2, 0)]);
        assert_eq!(karoubi_factorize(Signature::real(2, 0)).unwrap(), vec![Signature::real(2, 0)]);
        assert_eq!(karoubi_factorize(Signature::real(2, 1)), Err(Error::OddDimension(3)));
    }
}
