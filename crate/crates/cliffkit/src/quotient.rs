//! Odd-dimensional algebras and their quotients: the ε-homomorphism that
//! sends `εω ↦ 1`, the central idempotents `λ± = (1 ± εω)/2`, which
//! discrete symmetries survive the quotient, the quotient-representation
//! classes, and the matrix `Π` of the pseudoautomorphism (charge conjugation).

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::{volume_element, Blade, GroundField, Multivector, Signature};
use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::num::{qr, Cq, Entry};

/// The ε factor making `(εω)² = 1`.
pub fn epsilon_factor(sig: Signature) -> Result<Cq> {
    let n = sig.n();
    if n % 2 == 0 {
        return Err(Error::EvenDimension(n));
    }
    match sig.field {
        GroundField::Complex => Ok(if n % 4 == 1 { Cq::one() } else { Cq::i() }),
        GroundField::Real => match sig.mod8() {
            1 | 5 => Ok(Cq::one()),
            _ => Err(Error::Invalid(format!("{sig}: ω² = −1, no real ε with (εω)² = 1"))),
        },
    }
}

/// `εω` with its square verified to be `1`.
pub fn epsilon_omega(sig: Signature) -> Result<Multivector> {
    let ew = volume_element(sig).scale(&epsilon_factor(sig)?);
    if ew.mul(&ew) != Multivector::one(sig) {
        return Err(Error::Consistency(format!("(εω)² ≠ 1 in {sig}")));
    }
    Ok(ew)
}

/// Signature of the quotient: the subalgebra on the first `n` generators
/// (`C_n`, or `Cl(p,q−1)` — `Cl(p−1,0)` when `q = 0`).
pub fn quotient_signature(sig: Signature) -> Signature {
    match sig.field {
        GroundField::Complex => Signature::complex(sig.n() - 1),
        GroundField::Real if sig.q > 0 => Signature::real(sig.p, sig.q - 1),
        GroundField::Real => Signature::real(sig.p - 1, 0),
    }
}

/// `ε: A¹ + εω·A² ↦ A¹ + A²`, with `A¹, A²` in the subalgebra generated by
/// `e_1 … e_n` (the last generator is absorbed into `εω`).
pub fn epsilon_map(a: &Multivector) -> Result<Multivector> {
    let sig = *a.sig();
    let ew = epsilon_omega(sig)?;
    let top = Blade::generator(sig.n());
    let (mut low, mut high) = (Vec::new(), Vec::new());
    for (b, c) in a.terms() {
        if b.0 & top.0 == 0 {
            low.push((*b, c.clone()));
        } else {
            high.push((*b, c.clone()));
        }
    }
    // A² = εω · (terms containing e_{n+1}), which lies in the subalgebra.
    let a2 = ew.mul(&Multivector::from_terms(sig, high)?);
    let target = quotient_signature(sig);
    let mut terms: BTreeMap<Blade, Cq> = BTreeMap::new();
    for (b, c) in low.into_iter().chain(a2.terms().map(|(b, c)| (*b, c.clone()))) {
        if b.0 & top.0 != 0 {
            return Err(Error::Consistency("εω·A² left the subalgebra".into()));
        }
        let e = terms.entry(b).or_insert_with(Cq::zero);
        *e = e.add(&c);
    }
    Multivector::from_terms(target, terms)
}

/// Central idempotents `λ± = (1 ± εω)/2`, verified idempotent, orthogonal
/// and complete.
pub fn central_idempotents(sig: Signature) -> Result<(Multivector, Multivector)> {
    let ew = epsilon_omega(sig)?;
    let one = Multivector::one(sig);
    let half = Cq::real(qr(1, 2));
    let plus = one.add(&ew).scale(&half);
    let minus = one.sub(&ew).scale(&half);
    let ok = plus.mul(&plus) == plus
        && minus.mul(&minus) == minus
        && plus.mul(&minus).is_zero()
        && minus.mul(&plus).is_zero()
        && plus.add(&minus) == one;
    if !ok {
        return Err(Error::Consistency(format!("λ± identities fail in {sig}")));
    }
    Ok((plus, minus))
}

/// Pseudoautomorphism `A ↦ Ā` of `C_{p+q}` fixing the real form
/// spanned by `{e_1…e_p, i·e_{p+1}…i·e_{p+q}}`: coefficients are conjugated
/// and every generator beyond `p` changes sign.
pub fn pseudo_conj(a: &Multivector, p: usize) -> Result<Multivector> {
    let low = if p >= 32 { u32::MAX } else { (1u32 << p) - 1 };
    let terms = a.terms().map(|(b, c)| {
        let flips = (b.0 & !low).count_ones();
        let c = c.conj();
        (*b, if flips % 2 == 1 { c.neg() } else { c })
    });
    Multivector::from_terms(*a.sig(), terms.collect::<Vec<_>>())
}

/// Discrete transformation corresponding to an (anti/pseudo)automorphism.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash, Serialize)]
pub enum Transform {
    /// `A ↦ A*` (space inversion `P`)
    P,
    /// `A ↦ Ã` (time reversal `T`)
    T,
    /// `A ↦ Ã*` (full reflection `PT`)
    PT,
    /// `A ↦ Ā` (charge conjugation `C`)
    C,
    CP,
    CT,
    CPT,
}

impl Transform {
    pub const ALL: [Transform; 7] =
        [Transform::P, Transform::T, Transform::PT, Transform::C, Transform::CP, Transform::CT, Transform::CPT];

    /// Name of the algebra map.
    pub fn map_name(self) -> &'static str {
        match self {
            Transform::P => "star",
            Transform::T => "reversion",
            Transform::PT => "conjugation",
            Transform::C => "pseudo",
            Transform::CP => "pseudo_star",
            Transform::CT => "pseudo_reversion",
            Transform::CPT => "pseudo_conjugation",
        }
    }
}

impl fmt::Display for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Transform::P => "P",
            Transform::T => "T",
            Transform::PT => "PT",
            Transform::C => "C",
            Transform::CP => "CP",
            Transform::CT => "CT",
            Transform::CPT => "CPT",
        };
        write!(f, "{s}")
    }
}

/// One evaluated transfer condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransferCheck {
    pub transform: Transform,
    pub map: &'static str,
    /// The image of the tested element, as text.
    pub image: String,
    pub transferred: bool,
}

/// Evaluate which transformations survive `ε` on `C_{p+q}` (complex source)
/// or `Cl(p,q)` (real source), by applying each map to the volume element.
///
/// The linear maps are applied to `εω`; the pseudo family is applied to
/// `ω` itself, whose conjugate relative to the real form is `(−1)^q ω`.
pub fn transfer_report(p: usize, q: usize, field: GroundField) -> Result<Vec<TransferCheck>> {
    let source = match field {
        GroundField::Complex => Signature::complex(p + q),
        GroundField::Real => Signature::real(p, q),
    };
    let ew = epsilon_omega(source)?;
    let cn = Signature::complex(p + q);
    let w = volume_element(cn);
    let mut out = Vec::new();
    for t in Transform::ALL {
        let (image, target) = match t {
            Transform::P => (ew.grade_involution(), ew.clone()),
            Transform::T => (ew.reversion(), ew.clone()),
            Transform::PT => (ew.conjugation(), ew.clone()),
            Transform::C => (pseudo_conj(&w, p)?, w.clone()),
            Transform::CP => (pseudo_conj(&w.grade_involution(), p)?, w.clone()),
            Transform::CT => (pseudo_conj(&w.reversion(), p)?, w.clone()),
            Transform::CPT => (pseudo_conj(&w.conjugation(), p)?, w.clone()),
        };
        out.push(TransferCheck { transform: t, map: t.map_name(), transferred: image == target, image: image.to_string() });
    }
    Ok(out)
}

/// Quotient-representation classes.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum QuotientClass {
    A1,
    A2,
    B,
    C,
    D1,
    D2,
    E1,
    E2,
    F1,
    F2,
}

impl QuotientClass {
    /// Transformations surviving in this class.
    pub fn transfer_set(self) -> Vec<Transform> {
        use Transform as X;
        match self {
            QuotientClass::A1 | QuotientClass::A2 | QuotientClass::E1 | QuotientClass::F1 => vec![X::T, X::C, X::CT],
            QuotientClass::B | QuotientClass::E2 | QuotientClass::F2 => vec![X::T, X::CP, X::CPT],
            QuotientClass::C => vec![X::PT, X::C, X::CPT],
            QuotientClass::D1 | QuotientClass::D2 => vec![X::PT, X::CP, X::CT],
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            QuotientClass::A1 => "a1",
            QuotientClass::A2 => "a2",
            QuotientClass::B => "b",
            QuotientClass::C => "c",
            QuotientClass::D1 => "d1",
            QuotientClass::D2 => "d2",
            QuotientClass::E1 => "e1",
            QuotientClass::E2 => "e2",
            QuotientClass::F1 => "f1",
            QuotientClass::F2 => "f2",
        }
    }
}

impl fmt::Display for QuotientClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())
    }
}

/// Class from the table: source dimension mod 4 and the real form's type.
pub fn class_from_table(p: usize, q: usize, field: GroundField) -> Result<QuotientClass> {
    let n1 = p + q;
    if n1 % 2 == 0 {
        return Err(Error::EvenDimension(n1));
    }
    let t = Signature::real(p, q).mod8();
    Ok(match field {
        GroundField::Complex => match (n1 % 4, t) {
            (1, 1) => QuotientClass::A1,
            (1, 5) => QuotientClass::A2,
            (1, _) => QuotientClass::B,
            (_, 3 | 7) => QuotientClass::C,
            (_, 1) => QuotientClass::D1,
            _ => QuotientClass::D2,
        },
        GroundField::Real => match (t, q % 2) {
            (1, 0) => QuotientClass::E1,
            (1, _) => QuotientClass::E2,
            (5, 0) => QuotientClass::F1,
            (5, _) => QuotientClass::F2,
            _ => return Err(Error::Invalid(format!("Cl({p},{q}) is not of type 1 or 5"))),
        },
    })
}

/// Class from the table, verified against the directly evaluated transfers.
pub fn quotient_class(p: usize, q: usize, field: GroundField) -> Result<QuotientClass> {
    let class = class_from_table(p, q, field)?;
    let evidence: Vec<Transform> =
        transfer_report(p, q, field)?.into_iter().filter(|c| c.transferred).map(|c| c.transform).collect();
    if evidence != class.transfer_set() {
        let show = |v: &[Transform]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        return Err(Error::Consistency(format!(
            "class {class} of ({p},{q}) expects {{{}}} but the transfer conditions give {{{}}}",
            show(&class.transfer_set()),
            show(&evidence)
        )));
    }
    Ok(class)
}

/// Discrete group surviving on the quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientPin {
    pub label: String,
    /// Double cover of the surviving discrete group, when it is a group.
    pub cover: Option<String>,
    pub forms_group: bool,
    pub elements: Vec<String>,
}

/// Quotient Pin group after `ε` for odd-dimensional sources.
pub fn quotient_pin(sig: Signature) -> Result<QuotientPin> {
    let n = sig.n();
    if n % 2 == 0 {
        return Err(Error::EvenDimension(n));
    }
    let pin_b = |label: String| QuotientPin {
        label,
        cover: Some("Z2xZ2".into()),
        forms_group: true,
        elements: vec!["1".into(), "T".into()],
    };
    match sig.field {
        GroundField::Real => match sig.mod8() {
            1 | 5 => {
                let a = if sig.q > 0 { format!("Pin^b({},{})", sig.p, sig.q - 1) } else { String::new() };
                let b = if sig.p > 0 { format!("Pin^b({},{})", sig.q, sig.p - 1) } else { String::new() };
                Ok(pin_b([a, b].into_iter().filter(|s| !s.is_empty()).collect::<Vec<_>>().join(", ")))
            }
            _ => Err(Error::Invalid(format!("{sig} is not of type 1 or 5"))),
        },
        GroundField::Complex => {
            if matches!(n % 8, 1 | 5) {
                Ok(pin_b(format!("Pin^b({},C)", n - 1)))
            } else {
                Ok(QuotientPin {
                    label: format!("Pin^{{b,c}}({},C)", n - 1),
                    cover: None,
                    forms_group: false,
                    elements: vec!["1".into(), "T".into(), "PT".into()],
                })
            }
        }
    }
}

/// Full report for an odd-dimensional source.
#[derive(Clone, Debug, Serialize)]
pub struct QuotientReport {
    pub source: Signature,
    pub real_form: (usize, usize),
    pub target: Signature,
    pub epsilon: String,
    pub lambda_plus: String,
    pub lambda_minus: String,
    pub kernel_sample_checks: usize,
    pub transfers: Vec<TransferCheck>,
    pub class: String,
    pub quotient_pin: QuotientPin,
}

/// Build the report. Kernel checks map `A − εωA` to zero for every blade `A`
/// of the subalgebra.
pub fn quotient_report(p: usize, q: usize, field: GroundField) -> Result<QuotientReport> {
    let source = match field {
        GroundField::Complex => Signature::complex(p + q),
        GroundField::Real => Signature::real(p, q),
    };
    let (lp, lm) = central_idempotents(source)?;
    let ew = epsilon_omega(source)?;
    let mut checks = 0;
    for bits in 0..(1u32 << (source.n() - 1)) {
        let a = Multivector::blade(source, Blade(bits))?;
        if !epsilon_map(&a.sub(&ew.mul(&a)))?.is_zero() {
            return Err(Error::Consistency("kernel element not annihilated by ε".into()));
        }
        checks += 1;
    }
    let class = quotient_class(p, q, field)?;
    Ok(QuotientReport {
        source,
        real_form: (p, q),
        target: quotient_signature(source),
        epsilon: epsilon_factor(source)?.to_string(),
        lambda_plus: lp.to_string(),
        lambda_minus: lm.to_string(),
        kernel_sample_checks: checks,
        transfers: transfer_report(p, q, field)?,
        class: class.tag().into(),
        quotient_pin: quotient_pin(source)?,
    })
}

/// Matrix `Π` of the pseudoautomorphism in a spinor representation.
#[derive(Clone, Debug)]
pub struct PiMatrix {
    pub matrix: Mat<Cq>,
    /// 1-based indices of the spin-basis matrices whose product is `Π`
    /// (empty for `Π = I`).
    pub factors: Vec<usize>,
    /// Number of complex (`Ė = −E`) spin-basis matrices.
    pub a: usize,
    /// Number of real spin-basis matrices.
    pub b: usize,
    /// Sign `s` in `Π·Π̇ = s·I`.
    pub pi_pidot_sign: i8,
    /// Sign predicted by the `a, b mod 4` rule.
    pub rule_sign: i8,
}

/// Sign of `ΠΠ̇` predicted from `a` (when `a` is even) or `b` (when odd):
/// `+` for residues `0, 1 (mod 4)`, `−` for `2, 3`.
pub fn pi_rule_sign(a: usize, b: usize) -> i8 {
    let k = if a % 2 == 0 { a } else { b };
    if k % 4 < 2 {
        1
    } else {
        -1
    }
}

/// Classify a spin-basis matrix as real (`+1`), imaginary (`−1`) or mixed (`0`).
pub fn reality(m: &Mat<Cq>) -> i8 {
    m.conj().sign_relative_to(m).unwrap_or(0)
}

/// Find `Π` with `Π·Ė_i·Π⁻¹ = E_i` for every spin-basis matrix `E_i`,
/// searching all products of spin-basis matrices in grade-ascending,
/// lexicographic order.
pub fn build_pi(spin_basis: &[Mat<Cq>]) -> Result<PiMatrix> {
    let n = spin_basis.len();
    if n == 0 {
        return Err(Error::Invalid("empty spin basis".into()));
    }
    if n > 16 {
        return Err(Error::SizeGuard { n, max: 16 });
    }
    let kinds: Vec<i8> = spin_basis.iter().map(reality).collect();
    if kinds.contains(&0) {
        return Err(Error::Invalid("spin-basis matrices must be real or purely imaginary".into()));
    }
    let a = kinds.iter().filter(|&&k| k < 0).count();
    let b = n - a;
    let size = spin_basis[0].rows();
    let dots: Vec<Mat<Cq>> = spin_basis.iter().map(Mat::conj).collect();
    for blade in Blade::all_ordered(n) {
        let idx = blade.indices();
        let pi = idx.iter().fold(Mat::identity(size), |acc, &i| acc.mul(&spin_basis[i - 1]));
        let ok = spin_basis.iter().zip(&dots).all(|(e, d)| pi.mul(d) == e.mul(&pi));
        if ok {
            let pp = pi.mul(&pi.conj());
            let pi_pidot_sign = pp.unit_sign().ok_or_else(|| Error::Consistency("ΠΠ̇ is not ±I".into()))?;
            return Ok(PiMatrix { matrix: pi, factors: idx, a, b, pi_pidot_sign, rule_sign: pi_rule_sign(a, b) });
        }
    }
    Err(Error::Consistency("no product of spin-basis matrices satisfies Π·Ė·Π⁻¹ = E".into()))
}

/// Sign `s` with `ΠW = s·WΠ` for `W` the product of all spin-basis matrices.
pub fn pi_w_commutation(pi: &PiMatrix, spin_basis: &[Mat<Cq>]) -> i8 {
    let size = spin_basis[0].rows();
    let w = spin_basis.iter().fold(Mat::identity(size), |acc, e| acc.mul(e));
    pi.matrix.commutation_sign(&w)
}

/// Apply the charge conjugation twice to a spinor: `Π·conj(Π·conj(ξ))`.
pub fn twice_conjugated(pi: &PiMatrix, xi: &[Cq]) -> Vec<Cq> {
    let col = |v: &[Cq]| Mat::from_rows(v.iter().map(|x| vec![x.clone()]).collect());
    let once = pi.matrix.mul(&col(xi).conj());
    pi.matrix.mul(&once.conj()).entries().to_vec()
}

/// Real-form spin basis `{E_1…E_p, i·E_{p+1}…i·E_{p+q}}` from `C_n` generators.
pub fn real_form_basis(gens: &[Mat<Cq>], p: usize) -> Vec<Mat<Cq>> {
    let i = Cq::i();
    gens.iter().enumerate().map(|(k, m)| if k < p { m.clone() } else { m.scale(&i) }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn epsilon_kills_kernel_and_fixes_one() {
        let s = Signature::complex(3);
        let ew = epsilon_omega(s).unwrap();
        assert_eq!(epsilon_map(&ew).unwrap(), Multivector::one(Signature::complex(2)));
        assert_eq!(epsilon_map(&Multivector::one(s)).unwrap(), Multivector::one(Signature::complex(2)));
    }

    #[test]
    fn classes_small() {
        assert_eq!(quotient_class(3, 0, GroundField::Complex).unwrap(), QuotientClass::C);
        assert_eq!(quotient_class(4, 1, GroundField::Complex).unwrap(), QuotientClass::B);
        assert_eq!(quotient_class(1, 0, GroundField::Real).unwrap(), QuotientClass::E1);
    }
}
