//! Salingaros vee groups: the finite groups `G(p,q) = {±e_A}` of signed
//! basis blades, their multiplication tables, abstract identification and
//! centers.

use std::fmt;

use serde::Serialize;

use crate::algebra::{blade_product_unchecked, Blade, Signature};
use crate::error::{Error, Result};

/// Largest `p+q` for which the full multiplication table is built.
pub const VEE_MAX_N: usize = 10;

/// Abstract isomorphism type of a small group.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum GroupId {
    Trivial,
    Z2,
    Z4,
    Z8,
    Z2xZ2,
    Z2xZ4,
    Z2xZ2xZ2,
    D4,
    Q4,
    /// `{I, W, E, C}` taken modulo signs, non-abelian with `(−,−,−)`.
    Q4modZ2,
    /// `{I, W, E, C}` taken modulo signs, non-abelian otherwise.
    D4modZ2,
    /// A vee group of order ≥ 16, named by its Salingaros family and `k = ⌊n/2⌋`.
    Salingaros(SalingarosType, usize),
    /// Any other group, described by order and abelianness.
    Other { order: usize, abelian: bool },
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupId::Trivial => write!(f, "1"),
            GroupId::Z2 => write!(f, "Z2"),
            GroupId::Z4 => write!(f, "Z4"),
            GroupId::Z8 => write!(f, "Z8"),
            GroupId::Z2xZ2 => write!(f, "Z2xZ2"),
            GroupId::Z2xZ4 => write!(f, "Z2xZ4"),
            GroupId::Z2xZ2xZ2 => write!(f, "Z2xZ2xZ2"),
            GroupId::D4 => write!(f, "D4"),
            GroupId::Q4 => write!(f, "Q4"),
            GroupId::Q4modZ2 => write!(f, "Q4/Z2"),
            GroupId::D4modZ2 => write!(f, "D4/Z2"),
            GroupId::Salingaros(t, k) => write!(f, "{t}[k={k}]"),
            GroupId::Other { order, abelian } => {
                write!(f, "order-{order} {}", if *abelian { "abelian" } else { "non-abelian" })
            }
        }
    }
}

/// The five Salingaros families.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum SalingarosType {
    NOdd,
    NEven,
    OmegaOdd,
    OmegaEven,
    S,
}

impl fmt::Display for SalingarosType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SalingarosType::NOdd => "N_odd",
            SalingarosType::NEven => "N_even",
            SalingarosType::OmegaOdd => "Omega_odd",
            SalingarosType::OmegaEven => "Omega_even",
            SalingarosType::S => "S",
        };
        write!(f, "{s}")
    }
}

/// A finite group given by its multiplication table over indices `0..order`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteGroup {
    pub table: Vec<Vec<usize>>,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.table.len()
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    /// Identity element, if the table has one.
    pub fn identity(&self) -> Option<usize> {
        let n = self.order();
        (0..n).find(|&e| (0..n).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    /// Check closure, identity, inverses and (for order ≤ 64) associativity.
    pub fn validate(&self) -> Result<usize> {
        let n = self.order();
        if n == 0 || self.table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::NotAGroup("table is not closed".into()));
        }
        let e = self.identity().ok_or_else(|| Error::NotAGroup("no identity".into()))?;
        for a in 0..n {
            if !(0..n).any(|b| self.mul(a, b) == e && self.mul(b, a) == e) {
                return Err(Error::NotAGroup(format!("element {a} has no inverse")));
            }
        }
        if n <= 64 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                            return Err(Error::NotAGroup("not associative".into()));
                        }
                    }
                }
            }
        }
        Ok(e)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Order of each element.
    pub fn element_orders(&self) -> Vec<usize> {
        let e = self.identity().expect("validated group");
        (0..self.order())
            .map(|a| {
                let mut x = a;
                let mut k = 1;
                while x != e {
                    x = self.mul(x, a);
                    k += 1;
                }
                k
            })
            .collect()
    }

    /// Elements commuting with everything.
    pub fn center(&self) -> Vec<usize> {
        let n = self.order();
        (0..n).filter(|&z| (0..n).all(|x| self.mul(z, x) == self.mul(x, z))).collect()
    }

    /// Restrict to a subset closed under the product.
    pub fn subgroup(&self, elems: &[usize]) -> Result<FiniteGroup> {
        let pos = |x: usize| elems.iter().position(|&y| y == x);
        let table = elems
            .iter()
            .map(|&a| {
                elems
                    .iter()
                    .map(|&b| pos(self.mul(a, b)).ok_or_else(|| Error::NotAGroup("subset not closed".into())))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FiniteGroup { table })
    }

    /// Relabel elements by a permutation (`perm[old] = new`).
    pub fn relabel(&self, perm: &[usize]) -> FiniteGroup {
        let n = self.order();
        let mut table = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a]][perm[b]] = perm[self.mul(a, b)];
            }
        }
        FiniteGroup { table }
    }
}

/// Identify a group of order ≤ 8 from its table (element-order census).
pub fn identify_group(g: &FiniteGroup) -> Result<GroupId> {
    g.validate()?;
    let n = g.order();
    let abelian = g.is_abelian();
    let orders = g.element_orders();
    let count = |k: usize| orders.iter().filter(|&&o| o == k).count();
    let max = orders.iter().copied().max().unwrap_or(1);
    Ok(match (n, abelian) {
        (1, _) => GroupId::Trivial,
        (2, _) => GroupId::Z2,
        (4, _) => {
            if max == 4 {
                GroupId::Z4
            } else {
                GroupId::Z2xZ2
            }
        }
        (8, true) => match max {
            8 => GroupId::Z8,
            4 => GroupId::Z2xZ4,
            _ => GroupId::Z2xZ2xZ2,
        },
        (8, false) => {
            if count(2) == 1 {
                GroupId::Q4
            } else {
                GroupId::D4
            }
        }
        _ => GroupId::Other { order: n, abelian },
    })
}

/// Salingaros vee group of `Cl(p,q)`.
#[derive(Clone, Debug)]
pub struct VeeGroup {
    pub sig: Signature,
    /// Signed blades in the order `1, −1, e1, −e1, e2, −e2, e12, −e12, …`.
    pub elements: Vec<(i8, Blade)>,
    pub group: FiniteGroup,
}

fn signed_label(s: i8, b: Blade) -> String {
    if s > 0 {
        b.to_string()
    } else {
        format!("-{b}")
    }
}

impl VeeGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn labels(&self) -> Vec<String> {
        self.elements.iter().map(|&(s, b)| signed_label(s, b)).collect()
    }

    /// Plain-text multiplication table in the layout `row · column`.
    pub fn table_text(&self) -> String {
        let labels = self.labels();
        labels_table_text(&labels, &self.group.table)
    }
}

/// Render a multiplication table given element labels.
pub fn labels_table_text(labels: &[String], table: &[Vec<usize>]) -> String {
    let width = labels.iter().map(|l| l.chars().count()).max().unwrap_or(1);
    let pad = |s: &str| format!("{}{}", s, " ".repeat(width - s.chars().count()));
    let mut out = format!("{} |", pad(""));
    for l in labels {
        out.push(' ');
        out.push_str(&pad(l));
    }
    out = out.trim_end().to_string();
    out.push('\n');
    for (i, row) in table.iter().enumerate() {
        let mut line = format!("{} |", pad(&labels[i]));
        for &j in row {
            line.push(' ');
            line.push_str(&pad(&labels[j]));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Build `G(p,q)` with its full table.
pub fn build_vee_group(sig: Signature) -> Result<VeeGroup> {
    if sig.n() > VEE_MAX_N {
        return Err(Error::SizeGuard { n: sig.n(), max: VEE_MAX_N });
    }
    let blades = Blade::all_ordered(sig.n());
    let mut index = vec![0usize; 1 << sig.n()];
    let mut elements = Vec::with_capacity(2 * blades.len());
    for (k, b) in blades.iter().enumerate() {
        index[b.0 as usize] = k;
        elements.push((1i8, *b));
        elements.push((-1i8, *b));
    }
    let table = elements
        .iter()
        .map(|&(s1, b1)| {
            elements
                .iter()
                .map(|&(s2, b2)| {
                    let (b, s) = blade_product_unchecked(b1, b2, &sig);
                    let sign = s * s1 * s2;
                    2 * index[b.0 as usize] + usize::from(sign < 0)
                })
                .collect()
        })
        .collect();
    Ok(VeeGroup { sig, elements, group: FiniteGroup { table } })
}

/// Salingaros family from `p − q mod 8`.
pub fn salingaros_type(sig: Signature) -> SalingarosType {
    match sig.mod8() {
        0 | 2 => SalingarosType::NOdd,
        4 | 6 => SalingarosType::NEven,
        1 => SalingarosType::OmegaOdd,
        5 => SalingarosType::OmegaEven,
        _ => SalingarosType::S,
    }
}

/// Abstract type of `G(p,q)`: an explicit name for order ≤ 8, otherwise the
/// Salingaros family with `k = ⌊n/2⌋`.
pub fn vee_group_id(v: &VeeGroup) -> Result<GroupId> {
    if v.order() <= 8 {
        identify_group(&v.group)
    } else {
        Ok(GroupId::Salingaros(salingaros_type(v.sig), v.sig.n() / 2))
    }
}

/// Center of `G(p,q)` from the mod-8 rule.
pub fn vee_center(sig: Signature) -> GroupId {
    match sig.mod8() {
        0 | 2 | 4 | 6 => GroupId::Z2,
        1 | 5 => GroupId::Z2xZ2,
        _ => GroupId::Z4,
    }
}

/// Center of a built vee group, extracted from its table and identified.
pub fn vee_center_bruteforce(v: &VeeGroup) -> Result<GroupId> {
    let c = v.group.center();
    identify_group(&v.group.subgroup(&c)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_vee_groups() {
        let cases = [
            (Signature::real(0, 0), GroupId::Z2),
            (Signature::real(1, 0), GroupId::Z2xZ2),
            (Signature::real(0, 1), GroupId::Z4),
            (Signature::real(2, 0), GroupId::D4),
            (Signature::real(1, 1), GroupId::D4),
            (Signature::real(0, 2), GroupId::Q4),
        ];
        for (sig, id) in cases {
            let v = build_vee_group(sig).unwrap();
            assert_eq!(vee_group_id(&v).unwrap(), id, "{sig}");
        }
    }

    #[test]
    fn rejects_non_group() {
        let g = FiniteGroup { table: vec![vec![0, 0], vec![0, 0]] };
        assert!(identify_group(&g).is_err());
    }
}
