//! Blade-level arithmetic for `Cl(p,q)` and `C_n`.
//!
//! A blade `e_{i1…ik}` is stored as a bit pattern with bit `i−1` set for
//! generator `e_i`. Generators square to `+1` for `i ≤ p` and `−1` for
//! `p < i ≤ p+q`; in the complex algebra `C_n` every generator squares to
//! `+1`. Coefficients are Gaussian rationals.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::num::{fmt_q, q, Cq, Entry};

/// Largest supported number of generators (blades are stored in a `u32`).
pub const MAX_GENERATORS: usize = 24;

/// Ground field of the algebra.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum GroundField {
    Real,
    Complex,
}

/// Quadratic-form signature `(p, q)` over a ground field.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Signature {
    pub p: usize,
    pub q: usize,
    pub field: GroundField,
}

impl Signature {
    /// Real algebra `Cl(p,q)`.
    pub fn real(p: usize, q: usize) -> Self {
        Signature { p, q, field: GroundField::Real }
    }

    /// Complex algebra `C_n` (all generators square to `+1`).
    pub fn complex(n: usize) -> Self {
        Signature { p: n, q: 0, field: GroundField::Complex }
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    pub fn is_complex(&self) -> bool {
        self.field == GroundField::Complex
    }

    /// `p − q mod 8` (for `C_n` this is `n mod 8`).
    pub fn mod8(&self) -> usize {
        (self.p as i64 - self.q as i64).rem_euclid(8) as usize
    }

    /// Square of generator `e_i` (1-based).
    pub fn generator_square(&self, i: usize) -> i8 {
        if self.is_complex() || i <= self.p {
            1
        } else {
            -1
        }
    }

    fn check(&self) -> Result<()> {
        if self.n() > MAX_GENERATORS {
            return Err(Error::SizeGuard { n: self.n(), max: MAX_GENERATORS });
        }
        Ok(())
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.field {
            GroundField::Real => write!(f, "Cl({},{})", self.p, self.q),
            GroundField::Complex => write!(f, "C_{}", self.n()),
        }
    }
}

/// Basis blade `e_{i1…ik}` encoded as a bit pattern.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Default)]
pub struct Blade(pub u32);

impl Blade {
    pub const ONE: Blade = Blade(0);

    /// Blade from 1-based generator indices, in any order and without repeats.
    pub fn from_indices(indices: &[usize]) -> Result<Self> {
        let mut bits = 0u32;
        for &i in indices {
            if i == 0 || i > MAX_GENERATORS {
                return Err(Error::IndexOutOfRange { index: i, n: MAX_GENERATORS });
            }
            let b = 1u32 << (i - 1);
            if bits & b != 0 {
                return Err(Error::Invalid(format!("repeated generator index {i}")));
            }
            bits |= b;
        }
        Ok(Blade(bits))
    }

    /// Single generator `e_i`.
    pub fn generator(i: usize) -> Self {
        Blade(1 << (i - 1))
    }

    /// Parse `1`, `e12`, `e1,10` or `e[1,10]` (digits are single indices unless commas are used).
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "1" {
            return Ok(Blade::ONE);
        }
        let body = t
            .strip_prefix('e')
            .ok_or_else(|| Error::Invalid(format!("blade must start with 'e': {s}")))?
            .trim_start_matches('[')
            .trim_end_matches(']');
        let idx: Vec<usize> = if body.contains(',') {
            body.split(',').map(|x| x.trim().parse().map_err(|_| Error::Invalid(format!("bad blade {s}")))).collect::<Result<_>>()?
        } else {
            body.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Invalid(format!("bad blade {s}"))))
                .collect::<Result<_>>()?
        };
        Blade::from_indices(&idx)
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Increasing 1-based generator indices.
    pub fn indices(self) -> Vec<usize> {
        (0..32).filter(|b| self.0 >> b & 1 == 1).map(|b| b + 1).collect()
    }

    /// Highest generator index present (0 for the unit blade).
    pub fn max_index(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    /// Whether two blades commute (`+1`) or anticommute (`−1`).
    pub fn commutation(self, other: Blade) -> i8 {
        let k = self.grade() * other.grade() - (self.0 & other.0).count_ones() as usize;
        if k % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Sort key for the deterministic grade-ascending, lexicographic order.
    pub fn order_key(self) -> (usize, Vec<usize>) {
        (self.grade(), self.indices())
    }

    /// All blades of an `n`-generator algebra in grade-ascending lexicographic order.
    pub fn all_ordered(n: usize) -> Vec<Blade> {
        let mut v: Vec<Blade> = (0..1u32 << n).map(Blade).collect();
        v.sort_by_key(|b| b.order_key());
        v
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        let idx = self.indices();
        if idx.iter().all(|&i| i < 10) {
            let s: String = idx.iter().map(|i| i.to_string()).collect();
            write!(f, "e{s}")
        } else {
            let s: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
            write!(f, "e[{}]", s.join(","))
        }
    }
}

/// Sign from reordering the concatenated word `b1 b2` into canonical order.
fn reorder_sign(b1: u32, b2: u32) -> i8 {
    let mut a = b1 >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b2).count_ones();
        a >>= 1;
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Product of two basis blades: the canonical blade of the symmetric
/// difference and a sign (`±1`) combining reordering and generator squares.
pub fn blade_product(b1: Blade, b2: Blade, sig: &Signature) -> Result<(Blade, i8)> {
    let n = sig.n();
    for b in [b1, b2] {
        if b.max_index() > n {
            return Err(Error::IndexOutOfRange { index: b.max_index(), n });
        }
    }
    Ok(blade_product_unchecked(b1, b2, sig))
}

pub(crate) fn blade_product_unchecked(b1: Blade, b2: Blade, sig: &Signature) -> (Blade, i8) {
    let mut sign = reorder_sign(b1.0, b2.0);
    if !sig.is_complex() {
        // generators p+1..p+q square to −1
        let neg_mask: u32 = if sig.q == 0 { 0 } else { ((1u32 << sig.q) - 1) << sig.p };
        if (b1.0 & b2.0 & neg_mask).count_ones() % 2 == 1 {
            sign = -sign;
        }
    }
    (Blade(b1.0 ^ b2.0), sign)
}

/// Square of a blade, `±1`.
pub fn blade_square(b: Blade, sig: &Signature) -> i8 {
    blade_product_unchecked(b, b, sig).1
}

/// Exact element of `Cl(p,q)` or `C_n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Multivector {
    sig: Signature,
    terms: BTreeMap<Blade, Cq>,
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Multivector { sig, terms: BTreeMap::new() }
    }

    pub fn scalar(sig: Signature, c: Cq) -> Self {
        Multivector::from_terms(sig, [(Blade::ONE, c)]).expect("unit blade is always valid")
    }

    pub fn one(sig: Signature) -> Self {
        Multivector::scalar(sig, Cq::one())
    }

    /// Blade with coefficient 1.
    pub fn blade(sig: Signature, b: Blade) -> Result<Self> {
        Multivector::from_terms(sig, [(b, Cq::one())])
    }

    /// Generator `e_i` (1-based).
    pub fn generator(sig: Signature, i: usize) -> Result<Self> {
        if i == 0 || i > sig.n() {
            return Err(Error::IndexOutOfRange { index: i, n: sig.n() });
        }
        Multivector::blade(sig, Blade::generator(i))
    }

    /// Build from (blade, coefficient) pairs; repeated blades are summed.
    pub fn from_terms(sig: Signature, terms: impl IntoIterator<Item = (Blade, Cq)>) -> Result<Self> {
        sig.check()?;
        let mut mv = Multivector::zero(sig);
        for (b, c) in terms {
            if b.max_index() > sig.n() {
                return Err(Error::IndexOutOfRange { index: b.max_index(), n: sig.n() });
            }
            if sig.field == GroundField::Real && !c.is_real() {
                return Err(Error::FieldMismatch(format!("complex coefficient {c} in real algebra {sig}")));
            }
            mv.add_term(b, &c);
        }
        Ok(mv)
    }

    fn add_term(&mut self, b: Blade, c: &Cq) {
        if c.is_zero() {
            return;
        }
        let v = match self.terms.get(&b) {
            Some(x) => x.add(c),
            None => c.clone(),
        };
        if v.is_zero() {
            self.terms.remove(&b);
        } else {
            self.terms.insert(b, v);
        }
    }

    pub fn sig(&self) -> &Signature {
        &self.sig
    }

    /// Nonzero terms in blade bit order.
    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &Cq)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: Blade) -> Cq {
        self.terms.get(&b).cloned().unwrap_or_else(Cq::zero)
    }

    /// Scalar part.
    pub fn scalar_part(&self) -> Cq {
        self.coeff(Blade::ONE)
    }

    /// Part of a given grade.
    pub fn grade_part(&self, k: usize) -> Multivector {
        Multivector {
            sig: self.sig,
            terms: self.terms.iter().filter(|(b, _)| b.grade() == k).map(|(b, c)| (*b, c.clone())).collect(),
        }
    }

    fn check_same(&self, o: &Multivector) -> Result<()> {
        if self.sig != o.sig {
            return Err(Error::SignatureMismatch(self.sig.to_string(), o.sig.to_string()));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Multivector) -> Result<Multivector> {
        self.check_same(o)?;
        let mut out = self.clone();
        for (b, c) in &o.terms {
            out.add_term(*b, c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, o: &Multivector) -> Result<Multivector> {
        self.check_same(o)?;
        let mut acc: BTreeMap<Blade, Cq> = BTreeMap::new();
        for (b1, c1) in &self.terms {
            for (b2, c2) in &o.terms {
                let (b, s) = blade_product_unchecked(*b1, *b2, &self.sig);
                let mut v = c1.mul(c2);
                if s < 0 {
                    v = v.neg();
                }
                let e = acc.entry(b).or_insert_with(Cq::zero);
                *e = e.add(&v);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Multivector { sig: self.sig, terms: acc })
    }

    /// Sum; panics on signature mismatch (use [`Multivector::try_add`] to handle it).
    pub fn add(&self, o: &Multivector) -> Multivector {
        self.try_add(o).expect("signature mismatch in add")
    }

    pub fn sub(&self, o: &Multivector) -> Multivector {
        self.add(&o.neg())
    }

    /// Product; panics on signature mismatch (use [`Multivector::try_mul`] to handle it).
    pub fn mul(&self, o: &Multivector) -> Multivector {
        self.try_mul(o).expect("signature mismatch in mul")
    }

    pub fn neg(&self) -> Multivector {
        self.scale(&Cq::int(-1))
    }

    /// Multiply every coefficient by `s`. Panics if `s` is not real in a real algebra.
    pub fn scale(&self, s: &Cq) -> Multivector {
        assert!(self.sig.is_complex() || s.is_real(), "complex scalar in real algebra");
        let terms = self
            .terms
            .iter()
            .map(|(b, c)| (*b, c.mul(s)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Multivector { sig: self.sig, terms }
    }

    fn map_grades(&self, sign: impl Fn(usize) -> bool) -> Multivector {
        let terms = self
            .terms
            .iter()
            .map(|(b, c)| (*b, if sign(b.grade()) { c.neg() } else { c.clone() }))
            .collect();
        Multivector { sig: self.sig, terms }
    }

    /// Grade involution `A*`: sign `(−1)^k` on grade `k`.
    pub fn grade_involution(&self) -> Multivector {
        self.map_grades(|k| k % 2 == 1)
    }

    /// Reversion `Ã`: sign `(−1)^{k(k−1)/2}`.
    pub fn reversion(&self) -> Multivector {
        self.map_grades(|k| (k * k.saturating_sub(1) / 2) % 2 == 1)
    }

    /// Clifford conjugation: sign `(−1)^{k(k+1)/2}`.
    pub fn conjugation(&self) -> Multivector {
        self.map_grades(|k| (k * (k + 1) / 2) % 2 == 1)
    }

    /// Complex conjugation of every coefficient (identity on real algebras).
    pub fn coeff_conj(&self) -> Multivector {
        let terms = self.terms.iter().map(|(b, c)| (*b, c.conj())).collect();
        Multivector { sig: self.sig, terms }
    }

    /// Coefficients as a dense vector over all `2^n` blades (bit order).
    pub fn dense(&self) -> Vec<Cq> {
        let mut v = vec![Cq::zero(); 1 << self.sig.n()];
        for (b, c) in &self.terms {
            v[b.0 as usize] = c.clone();
        }
        v
    }

    /// Random element with small integer coefficients on roughly `density` of the blades.
    pub fn random<R: Rng + ?Sized>(sig: Signature, rng: &mut R, density: f64) -> Multivector {
        let mut mv = Multivector::zero(sig);
        for bits in 0..(1u32 << sig.n()) {
            if !rng.gen_bool(density.clamp(0.0, 1.0)) {
                continue;
            }
            let re = q(rng.gen_range(-3..=3));
            let im = if sig.is_complex() { q(rng.gen_range(-2..=2)) } else { q(0) };
            mv.add_term(Blade(bits), &Cq::new(re, im));
        }
        mv
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Blade> = self.terms.keys().collect();
        keys.sort_by_key(|b| b.order_key());
        let parts: Vec<String> = keys
            .into_iter()
            .map(|b| {
                let c = &self.terms[b];
                match (b.0, c.is_one(), *c == Cq::int(-1)) {
                    (0, _, _) => c.to_string(),
                    (_, true, _) => b.to_string(),
                    (_, _, true) => format!("-{b}"),
                    _ if c.is_real() => format!("{c}{b}"),
                    _ => format!("({c}){b}"),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

impl Serialize for Multivector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Terms<'a>(&'a Multivector);
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut keys: Vec<&Blade> = self.0.terms.keys().collect();
                keys.sort_by_key(|b| b.order_key());
                let mut seq = s.serialize_seq(Some(keys.len()))?;
                for b in keys {
                    let c = &self.0.terms[b];
                    seq.serialize_element(&serde_json::json!({
                        "blade": b.indices(),
                        "re": fmt_q(&c.re),
                        "im": fmt_q(&c.im),
                    }))?;
                }
                seq.end()
            }
        }
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("sig", &self.sig)?;
        m.serialize_entry("terms", &Terms(self))?;
        m.end()
    }
}

/// Product `A·B` (errors on signature mismatch).
pub fn mv_mul(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    a.try_mul(b)
}

/// Sum `A + B` (errors on signature mismatch).
pub fn mv_add(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    a.try_add(b)
}

/// Scalar multiple `s·A`.
pub fn scalar_mul(s: &Cq, a: &Multivector) -> Result<Multivector> {
    if !a.sig.is_complex() && !s.is_real() {
        return Err(Error::FieldMismatch(format!("complex scalar {s} in real algebra {}", a.sig)));
    }
    Ok(a.scale(s))
}

/// Volume element `ω = e_{12…n}`.
pub fn volume_element(sig: Signature) -> Multivector {
    Multivector::blade(sig, Blade((1u32 << sig.n()) - 1)).expect("volume blade fits signature")
}

/// Sign of `ω²` from the mod-8 rule: `−1` iff `p − q ≡ 2,3,6,7 (mod 8)`.
pub fn volume_square_sign(sig: Signature) -> i8 {
    if matches!(sig.mod8(), 2 | 3 | 6 | 7) {
        -1
    } else {
        1
    }
}

/// Basis of the center: `{1}` for even `n`, `{1, ω}` for odd `n`.
pub fn center_basis(sig: Signature) -> Vec<Multivector> {
    let mut out = vec![Multivector::one(sig)];
    if sig.n() % 2 == 1 {
        out.push(volume_element(sig));
    }
    out
}

/// Whether `a` commutes with every generator.
pub fn commutes_with_generators(a: &Multivector) -> bool {
    let sig = *a.sig();
    (1..=sig.n()).all(|i| {
        let e = Multivector::generator(sig, i).expect("index in range");
        a.mul(&e) == e.mul(a)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_products() {
        let s = Signature::real(2, 0);
        let (e1, e2, e12) = (Blade::generator(1), Blade::generator(2), Blade(3));
        assert_eq!(blade_product(e1, e2, &s).unwrap(), (e12, 1));
        assert_eq!(blade_product(e12, e12, &s).unwrap(), (Blade::ONE, -1));
        assert_eq!(blade_product(e2, e1, &s).unwrap(), (e12, -1));
        assert!(blade_product(Blade::generator(3), e1, &s).is_err());
    }

    #[test]
    fn blade_parse_display() {
        for s in ["1", "e1", "e234", "e[1,10]"] {
            assert_eq!(Blade::parse(s).unwrap().to_string(), s);
        }
        assert_eq!(Blade::parse("e2,1").unwrap(), Blade(3));
    }

    #[test]
    fn involution_signs() {
        let s = Signature::real(3, 0);
        let e123 = Multivector::blade(s, Blade(7)).unwrap();
        let e12 = Multivector::blade(s, Blade(3)).unwrap();
        assert_eq!(e123.grade_involution(), e123.neg());
        assert_eq!(e123.reversion(), e123.neg());
        assert_eq!(e12.conjugation(), e12.neg());
    }

    #[test]
    fn display_is_readable() {
        let s = Signature::real(2, 0);
        let a = Multivector::from_terms(s, [(Blade::ONE, Cq::int(1)), (Blade(1), Cq::int(-2)), (Blade(3), Cq::int(1))]).unwrap();
        assert_eq!(a.to_string(), "1 - 2e1 + e12");
    }
}
