//! Matrices `W`, `E`, `C` of the discrete automorphisms (grade involution,
//! reversion, Clifford conjugation) in a spinor representation, the finite
//! group `{I, W, E, C}` they generate modulo sign, and the Pin double cover
//! labelled by the signature `(a, b, c) = (W², E², C²)`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::algebra::{GroundField, Signature};
use crate::classify::{algebra_class, Ring};
use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::num::{Cq, Entry};
use crate::spinor::{
    enumerate_primitive_idempotents, find_primitive_idempotent, spinor_k_repr, tensor_pauli_rep, AnySpinorRep,
    SpinorRep,
};
use crate::vee::{identify_group, FiniteGroup, GroupId};

/// Signs `(a, b, c)` of `W², E², C²`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Abc(pub i8, pub i8, pub i8);

impl Abc {
    pub const PPP: Abc = Abc(1, 1, 1);
    pub const MMM: Abc = Abc(-1, -1, -1);

    /// Parse `(+,-,-)`.
    pub fn parse(s: &str) -> Option<Abc> {
        let v: Vec<i8> = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(|x| match x.trim() {
                "+" => Some(1),
                "-" => Some(-1),
                _ => None,
            })
            .collect::<Option<_>>()?;
        (v.len() == 3).then(|| Abc(v[0], v[1], v[2]))
    }

    /// All eight signatures, `+` before `−` in each slot.
    pub fn all() -> Vec<Abc> {
        let mut v = Vec::new();
        for a in [1, -1] {
            for b in [1, -1] {
                for c in [1, -1] {
                    v.push(Abc(a, b, c));
                }
            }
        }
        v
    }
}

impl fmt::Display for Abc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |x: i8| if x > 0 { '+' } else { '-' };
        write!(f, "({},{},{})", s(self.0), s(self.1), s(self.2))
    }
}

impl Serialize for Abc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Pin double cover `Pin^{a,b,c}` of the orthogonal group.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct PinCover {
    pub signature: Abc,
    /// The 8-element group covering `{1, P, T, PT}`.
    pub cover: GroupId,
    /// `PT = −TP` (covers `Q4` and `D4`).
    pub cliffordian: bool,
}

impl PinCover {
    pub fn label(&self) -> String {
        let s = |x: i8| if x > 0 { '+' } else { '-' };
        format!("Pin^{{{},{},{}}}", s(self.signature.0), s(self.signature.1), s(self.signature.2))
    }
}

/// Cover group by signature.
pub fn pin_cover(sig: Abc) -> PinCover {
    let minus = [sig.0, sig.1, sig.2].iter().filter(|&&x| x < 0).count();
    let cover = match minus {
        0 => GroupId::Z2xZ2xZ2,
        3 => GroupId::Q4,
        2 => GroupId::Z2xZ4,
        _ => GroupId::D4,
    };
    PinCover { signature: sig, cover, cliffordian: matches!(cover, GroupId::Q4 | GroupId::D4) }
}

/// Name of `{I, W, E, C}` modulo sign from the signature and commutativity.
pub fn quotient_group_name(sig: Abc, abelian: bool) -> GroupId {
    match (abelian, sig) {
        (true, Abc(1, 1, 1)) => GroupId::Z2xZ2,
        (true, _) => GroupId::Z4,
        (false, Abc(-1, -1, -1)) => GroupId::Q4modZ2,
        (false, _) => GroupId::D4modZ2,
    }
}

/// The 8-element group `{±I, ±W, ±E, ±C}` from the relations `W² = a`,
/// `E² = b`, `EW = σWE`, with elements indexed `4·[sign<0] + 2·w + e`.
pub fn signed_closure(a: i8, b: i8, sigma: i8) -> FiniteGroup {
    let idx = |s: i8, w: usize, e: usize| 4 * usize::from(s < 0) + 2 * w + e;
    let mut table = vec![vec![0; 8]; 8];
    for x in 0..8 {
        for y in 0..8 {
            let (s1, w1, e1) = (if x >= 4 { -1 } else { 1 }, (x >> 1) & 1, x & 1);
            let (s2, w2, e2) = (if y >= 4 { -1 } else { 1 }, (y >> 1) & 1, y & 1);
            let mut s = s1 * s2;
            // move E^{e1} past W^{w2}
            if e1 == 1 && w2 == 1 {
                s *= sigma;
            }
            if w1 == 1 && w2 == 1 {
                s *= a;
            }
            if e1 == 1 && e2 == 1 {
                s *= b;
            }
            table[x][y] = idx(s, w1 ^ w2, e1 ^ e2);
        }
    }
    FiniteGroup { table }
}

/// Which generator product was taken as `E`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum EChoice {
    /// Product of the skew-symmetric generators (identity if there are none).
    SkewProduct,
    /// Product of the symmetric generators (identity if there are none).
    SymmetricProduct,
}

/// Symmetric/skew census of generators with their squares.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    /// 1-based indices of symmetric generators.
    pub symmetric: Vec<usize>,
    /// 1-based indices of skew-symmetric generators.
    pub skew: Vec<usize>,
    /// skew with square `+I`
    pub l: usize,
    /// skew with square `−I`
    pub t: usize,
    /// symmetric with square `+I`
    pub h: usize,
    /// symmetric with square `−I`
    pub g: usize,
}

/// Matrices of the automorphisms with their derived invariants.
#[derive(Clone, Debug)]
pub struct ReflectionData<T> {
    pub w: Mat<T>,
    pub e: Mat<T>,
    pub c: Mat<T>,
    pub e_choice: EChoice,
    pub signature: Abc,
    /// `+1` if `EW = WE`, `−1` if `EW = −WE`.
    pub sigma: i8,
    pub group: GroupId,
    pub cover: PinCover,
    pub census: Census,
    /// Whether `W` and `E` were rescaled by `i` (complex normalization).
    pub normalized: bool,
}

impl<T: Entry> ReflectionData<T> {
    pub fn abelian(&self) -> bool {
        self.sigma > 0
    }

    /// 1-based indices of the generators whose product is `E`.
    pub fn e_factors(&self) -> &[usize] {
        match self.e_choice {
            EChoice::SkewProduct => &self.census.skew,
            EChoice::SymmetricProduct => &self.census.symmetric,
        }
    }

    /// `log2` of the matrix size.
    pub fn m(&self) -> usize {
        self.w.rows().trailing_zeros() as usize
    }

    /// Transposition symmetry `(Eᵀ = ±E, Cᵀ = ±C)` expected from `m`:
    /// `E` symmetric iff `m ≡ 0,1 (mod 4)`, `C` symmetric iff `m ≡ 0,3 (mod 4)`.
    pub fn condt_expected(m: usize) -> (i8, i8) {
        let s = |k: usize| if (k / 2) % 2 == 0 { 1 } else { -1 };
        (s(m * m.saturating_sub(1)), s(m * (m + 1)))
    }

    /// Observed transposition signs of `E` and `C` (0 if neither).
    pub fn transpose_signs(&self) -> (i8, i8) {
        let t = |x: &Mat<T>| x.transpose().sign_relative_to(x).unwrap_or(0);
        (t(&self.e), t(&self.c))
    }

    /// Whether the transposition law holds with `m = log2(size)`.
    pub fn condt_holds(&self) -> bool {
        self.transpose_signs() == Self::condt_expected(self.m())
    }

    /// Signed multiplication table of `{I, W, E, C}`: entry `(s, k)` means
    /// `row · column = s · element_k` in the order `I, W, E, C`.
    pub fn sign_table(&self) -> Vec<Vec<(i8, usize)>> {
        let g = signed_closure(self.signature.0, self.signature.1, self.sigma);
        // C = E·W = σ·W·E, i.e. element (σ, w=1, e=1)
        let as_closure = |k: usize| -> usize {
            match k {
                0 => 0,
                1 => 2,
                2 => 1,
                _ => {
                    if self.sigma > 0 {
                        3
                    } else {
                        7
                    }
                }
            }
        };
        let back = |x: usize| -> (i8, usize) {
            let s: i8 = if x >= 4 { -1 } else { 1 };
            let (w, e) = ((x >> 1) & 1, x & 1);
            match (w, e) {
                (0, 0) => (s, 0),
                (1, 0) => (s, 1),
                (0, _) => (s, 2),
                _ => (s * self.sigma, 3),
            }
        };
        (0..4).map(|r| (0..4).map(|c| back(g.table[as_closure(r)][as_closure(c)])).collect()).collect()
    }

    /// The table in text form with labels `I, W, E, C`.
    pub fn table_text(&self) -> String {
        let labels = ["I", "W", "E", "C"];
        let t = self.sign_table();
        let mut out = String::from("   |  I   W   E   C\n");
        for (r, row) in t.iter().enumerate() {
            let cells: Vec<String> =
                row.iter().map(|&(s, k)| format!("{:>3}", format!("{}{}", if s < 0 { "-" } else { "" }, labels[k]))).collect();
            out.push_str(&format!(" {} |{}\n", labels[r], cells.join(" ")));
        }
        out
    }

    /// Check the table against the actual matrices (needs `I, ±W, ±E, ±C` distinct).
    pub fn verify_table_against_matrices(&self) -> Result<bool> {
        let id = Mat::identity(self.w.rows());
        let mats = [&id, &self.w, &self.e, &self.c];
        for (i, a) in mats.iter().enumerate() {
            for b in &mats[i + 1..] {
                if a.sign_relative_to(b).is_some() {
                    return Ok(false);
                }
            }
        }
        for (r, row) in self.sign_table().iter().enumerate() {
            for (c, &(s, k)) in row.iter().enumerate() {
                let prod = mats[r].mul(mats[c]);
                if prod.sign_relative_to(mats[k]) != Some(s) {
                    return Err(Error::Consistency(format!("formal table disagrees with matrices at ({r},{c})")));
                }
            }
        }
        Ok(true)
    }
}

fn product<T: Entry>(gens: &[Mat<T>], idx: &[usize], size: usize) -> Mat<T> {
    idx.iter().fold(Mat::identity(size), |acc, &i| acc.mul(&gens[i - 1]))
}

fn square_sign<T: Entry>(m: &Mat<T>, name: &str) -> Result<i8> {
    m.mul(m).unit_sign().ok_or_else(|| Error::Consistency(format!("{name}² is not ±I")))
}

/// Build `W`, `E`, `C` from generator matrices of an even-dimensional algebra.
///
/// `W` is the product of all generators. `E` is the product of the
/// skew-symmetric generators or, failing that, of the symmetric ones —
/// whichever commutes with every symmetric and anticommutes with every
/// skew-symmetric generator. `C = E·W`, which then anticommutes with the
/// symmetric and commutes with the skew-symmetric generators.
pub fn build_wec<T: Entry>(gens: &[Mat<T>]) -> Result<ReflectionData<T>> {
    let n = gens.len();
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    let size = gens.first().map_or(1, Mat::rows);
    let mut census = Census { symmetric: vec![], skew: vec![], l: 0, t: 0, h: 0, g: 0 };
    for (i, g) in gens.iter().enumerate() {
        let sq = square_sign(g, "generator")?;
        if g.is_symmetric() {
            census.symmetric.push(i + 1);
            if sq > 0 {
                census.h += 1
            } else {
                census.g += 1
            }
        } else if g.is_skew() {
            census.skew.push(i + 1);
            if sq > 0 {
                census.l += 1
            } else {
                census.t += 1
            }
        } else {
            return Err(Error::Consistency(format!("generator {} is neither symmetric nor skew", i + 1)));
        }
    }
    let w = product(gens, &(1..=n).collect::<Vec<_>>(), size);
    let satisfies_commut = |e: &Mat<T>| {
        census.symmetric.iter().all(|&i| e.commutation_sign(&gens[i - 1]) == 1)
            && census.skew.iter().all(|&i| e.commutation_sign(&gens[i - 1]) == -1)
    };
    let skew_e = product(gens, &census.skew, size);
    let (e, e_choice) = if satisfies_commut(&skew_e) {
        (skew_e, EChoice::SkewProduct)
    } else {
        let sym_e = product(gens, &census.symmetric, size);
        if !satisfies_commut(&sym_e) {
            return Err(Error::Consistency("no generator product satisfies the reversion contract".into()));
        }
        (sym_e, EChoice::SymmetricProduct)
    };
    finish(gens, w, e, e_choice, census, false)
}

fn finish<T: Entry>(
    gens: &[Mat<T>],
    w: Mat<T>,
    e: Mat<T>,
    e_choice: EChoice,
    census: Census,
    normalized: bool,
) -> Result<ReflectionData<T>> {
    let c = e.mul(&w);
    for (i, g) in gens.iter().enumerate() {
        let sym = census.symmetric.contains(&(i + 1));
        let want = if sym { -1 } else { 1 };
        if c.commutation_sign(g) != want {
            return Err(Error::Consistency(format!("C violates the conjugation contract at generator {}", i + 1)));
        }
        if w.commutation_sign(g) != -1 {
            return Err(Error::Consistency(format!("W does not anticommute with generator {}", i + 1)));
        }
    }
    let signature = Abc(square_sign(&w, "W")?, square_sign(&e, "E")?, square_sign(&c, "C")?);
    let sigma = e.commutation_sign(&w);
    if sigma == 0 {
        return Err(Error::Consistency("E and W neither commute nor anticommute".into()));
    }
    if signature.2 != sigma * signature.0 * signature.1 {
        return Err(Error::Consistency("C² disagrees with σ·W²·E²".into()));
    }
    let group = quotient_group_name(signature, sigma > 0);
    let cover = pin_cover(signature);
    let closure = identify_group(&signed_closure(signature.0, signature.1, sigma))?;
    if closure != cover.cover {
        return Err(Error::Consistency(format!("signed closure {closure} differs from cover {}", cover.cover)));
    }
    let data = ReflectionData { w, e, c, e_choice, signature, sigma, group, cover, census, normalized };
    data.verify_table_against_matrices()?;
    Ok(data)
}

/// `W`, `E`, `C` for the complex algebra `C_n` in the tensor representation,
/// with `W` and `E` rescaled by `i` so that their squares are `+I` when they
/// commute and `−I` when they anticommute.
pub fn build_wec_complex(rep: &SpinorRep<Cq>) -> Result<ReflectionData<Cq>> {
    let raw = build_wec(&rep.generators)?;
    let i = Cq::i();
    let want = if raw.sigma > 0 { 1 } else { -1 };
    let w = if raw.signature.0 == want { raw.w.clone() } else { raw.w.scale(&i) };
    let e = if raw.signature.1 == want { raw.e.clone() } else { raw.e.scale(&i) };
    let normalized = w != raw.w || e != raw.e;
    finish(&rep.generators, w, e, raw.e_choice, raw.census, normalized)
}

/// Automorphism group type with its signature.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct AutType {
    pub group: GroupId,
    pub signature: Abc,
}

impl AutType {
    pub fn cover(&self) -> PinCover {
        pin_cover(self.signature)
    }
}

fn aut_of<T: Entry>(d: &ReflectionData<T>) -> AutType {
    AutType { group: d.group, signature: d.signature }
}

/// Group of `C_n` for even `n`: `Z2×Z2 (+,+,+)` if `n ≡ 0 (mod 4)`,
/// `Q4/Z2 (−,−,−)` if `n ≡ 2 (mod 4)`; cross-checked against the matrices.
pub fn complex_aut_type(n: usize) -> Result<AutType> {
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    if n == 0 {
        return Err(Error::Invalid("C_0 has no automorphism matrices".into()));
    }
    let rule = if n % 4 == 0 {
        AutType { group: GroupId::Z2xZ2, signature: Abc::PPP }
    } else {
        AutType { group: GroupId::Q4modZ2, signature: Abc::MMM }
    };
    let built = aut_of(&build_wec_complex(&tensor_pauli_rep(n / 2, false)?)?);
    if built != rule {
        return Err(Error::Consistency(format!("C_{n}: matrices give {built:?}, rule gives {rule:?}")));
    }
    Ok(rule)
}

/// Reflection data of any spinor representation (even `n`).
pub fn reflection_of(rep: &AnySpinorRep) -> Result<AutType> {
    Ok(match rep {
        AnySpinorRep::Real(r) => aut_of(&build_wec(&r.generators)?),
        AnySpinorRep::Complex(r) => aut_of(&build_wec(&r.generators)?),
        AnySpinorRep::Quaternion(r) => aut_of(&build_wec(&r.generators)?),
    })
}

/// Result of classifying a real algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum RealAut {
    /// Simple algebra with a single automorphism group.
    Single(AutType),
    /// Semisimple types `p − q ≡ 1, 5 (mod 8)`: one entry per decomposition
    /// `Cl(p,q−1)` and `Cl(q,p−1)` (absent when the signature is invalid).
    Pair { d1: Option<(Signature, AutType)>, d1_prime: Option<(Signature, AutType)> },
}

/// Classify `Cl(p,q)` through its default ideal representation.
///
/// Types 3, 7 (`K ≅ C`) go through `C_{n−1}`; types 1, 5 are reported per
/// summand decomposition.
pub fn real_aut_type(sig: Signature) -> Result<RealAut> {
    if sig.field == GroundField::Complex {
        return complex_aut_type(sig.n()).map(RealAut::Single);
    }
    if sig.n() == 0 {
        return Err(Error::Invalid("Cl(0,0) has no automorphism matrices".into()));
    }
    match sig.mod8() {
        3 | 7 => complex_aut_type(sig.n() - 1).map(RealAut::Single),
        1 | 5 => {
            let part = |s: Option<Signature>| -> Result<Option<(Signature, AutType)>> {
                match s {
                    Some(s) if s.n() > 0 => match real_aut_type(s)? {
                        RealAut::Single(a) => Ok(Some((s, a))),
                        RealAut::Pair { .. } => Err(Error::Consistency("summand is not simple".into())),
                    },
                    _ => Ok(None),
                }
            };
            let d1 = part(sig.q.checked_sub(1).map(|q1| Signature::real(sig.p, q1)))?;
            let d1_prime = part(sig.p.checked_sub(1).map(|p1| Signature::real(sig.q, p1)))?;
            Ok(RealAut::Pair { d1, d1_prime })
        }
        _ => {
            let f = find_primitive_idempotent(sig)?;
            let rep = spinor_k_repr(sig, &f, None)?;
            reflection_of(&rep).map(RealAut::Single)
        }
    }
}

/// Whether a residue counts as `+` in the quaternionic census rule.
fn census_plus(x: i64) -> bool {
    matches!(x.rem_euclid(8), 0 | 1 | 4 | 5)
}

/// Expected signature for the real types 0, 2, 4, 6 from the case table of
/// the classification theorem (independent of the matrices, except that the
/// quaternionic types read the symmetric/skew census).
pub fn tautr_case_table(sig: Signature, census: &Census) -> Result<Abc> {
    let (p, q) = (sig.p % 4, sig.q % 4);
    match sig.mod8() {
        0 | 2 => Ok(match (p, q) {
            (0, 0) => Abc(1, 1, 1),
            (2, 2) => Abc(1, -1, -1),
            (0, 2) => Abc(-1, -1, 1),
            (2, 0) => Abc(-1, 1, -1),
            (3, 3) => Abc(1, -1, 1),
            (1, 1) => Abc(1, 1, -1),
            (3, 1) => Abc(-1, -1, -1),
            (1, 3) => Abc(-1, 1, 1),
            _ => return Err(Error::Consistency(format!("unexpected residues for {sig}"))),
        }),
        t @ (4 | 6) => {
            let lt = census_plus(census.l as i64 - census.t as i64);
            let hg = census_plus(census.h as i64 - census.g as i64);
            let k_even = census.skew.len() % 2 == 0;
            let r = match (t, k_even, lt, hg) {
                (4, true, true, true) => Abc(1, 1, 1),
                (4, true, false, false) => Abc(1, -1, -1),
                (6, true, true, false) => Abc(-1, 1, -1),
                (6, true, false, true) => Abc(-1, -1, 1),
                (4, false, true, false) => Abc(1, -1, 1),
                (4, false, false, true) => Abc(1, 1, -1),
                (6, false, false, false) => Abc(-1, -1, -1),
                (6, false, true, true) => Abc(-1, 1, 1),
                _ => {
                    return Err(Error::Consistency(format!(
                        "census (l,t,h,g) = ({},{},{},{}) of {sig} outside the case table",
                        census.l, census.t, census.h, census.g
                    )))
                }
            };
            Ok(r)
        }
        _ => Err(Error::Invalid(format!("{sig} is not of type 0, 2, 4 or 6"))),
    }
}

/// Verdict of comparing `Pin(p,q)` with `Pin(q,p)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PinComparison {
    pub isomorphic: bool,
    pub covers_pq: Vec<GroupId>,
    pub covers_qp: Vec<GroupId>,
}

/// Covers realized by the representations of an algebra (all enumerated
/// primitive idempotents for even `n ≤ 6`, the default route otherwise).
pub fn realized_covers(sig: Signature) -> Result<Vec<GroupId>> {
    let mut set = BTreeSet::new();
    let mut add = |a: AutType| {
        set.insert(format!("{}", a.cover().cover));
        a.cover().cover
    };
    let mut out = Vec::new();
    if sig.n() % 2 == 0 && sig.n() > 0 && sig.n() <= 6 && matches!(sig.mod8(), 0 | 2 | 4 | 6) {
        for f in enumerate_primitive_idempotents(sig)? {
            let a = reflection_of(&spinor_k_repr(sig, &f, None)?)?;
            let c = add(a);
            if !out.contains(&c) {
                out.push(c);
            }
        }
    } else {
        match real_aut_type(sig)? {
            RealAut::Single(a) => out.push(add(a)),
            RealAut::Pair { d1, d1_prime } => {
                for (_, a) in d1.into_iter().chain(d1_prime) {
                    let c = add(a);
                    if !out.contains(&c) {
                        out.push(c);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `Pin(p,q) ≅ Pin(q,p)` exactly for the neutral types `p − q ≡ 0, 4 (mod 8)`.
pub fn compare_pin(sig: Signature) -> Result<PinComparison> {
    let isomorphic = matches!(sig.mod8(), 0 | 4);
    let covers_pq = realized_covers(sig)?;
    let covers_qp = realized_covers(Signature::real(sig.q, sig.p))?;
    Ok(PinComparison { isomorphic, covers_pq, covers_qp })
}

/// Symmetry of a system of `m` identical particles, modelled by `C_{2m}`.
pub fn many_body_symmetry(m: usize) -> Result<PinCover> {
    if m == 0 {
        return Err(Error::Invalid("particle count must be at least 1".into()));
    }
    Ok(complex_aut_type(2 * m)?.cover())
}

/// Ring type of the algebra whose reflection data is wanted.
pub fn ring_of(sig: Signature) -> Ring {
    algebra_class(sig).ring
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cover_table() {
        assert_eq!(pin_cover(Abc::PPP).cover, GroupId::Z2xZ2xZ2);
        assert!(!pin_cover(Abc::PPP).cliffordian);
        assert_eq!(pin_cover(Abc::MMM).cover, GroupId::Q4);
        assert!(pin_cover(Abc::MMM).cliffordian);
        assert_eq!(pin_cover(Abc(1, -1, -1)).cover, GroupId::Z2xZ4);
        assert_eq!(pin_cover(Abc(-1, 1, 1)).cover, GroupId::D4);
    }

    #[test]
    fn closure_matches_cover_for_consistent_relations() {
        for sigma in [1i8, -1] {
            for a in [1i8, -1] {
                for b in [1i8, -1] {
                    let abc = Abc(a, b, sigma * a * b);
                    let g = identify_group(&signed_closure(a, b, sigma)).unwrap();
                    assert_eq!(g, pin_cover(abc).cover, "{abc}");
                }
            }
        }
    }

    #[test]
    fn abc_parse() {
        assert_eq!(Abc::parse("(-,+,-)"), Some(Abc(-1, 1, -1)));
        assert_eq!(Abc(-1, 1, -1).to_string(), "(-,+,-)");
    }
}
