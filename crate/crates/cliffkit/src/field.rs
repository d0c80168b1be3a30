//! Dirac–Hestenes spinors, helicity projectors and the multivector form of
//! the electromagnetic field.
//!
//! Everything here is plain exact matrix and multivector arithmetic; there is
//! no calculus. Derivatives are caller-supplied numbers, and the physical
//! identifications (electric and magnetic fields, Maxwell residuals) are read
//! off graded parts of genuine Clifford products.
//!
//! Index conventions: the space-time algebra `Cl(1,3)` uses generators
//! `e1..e4` for `γ0..γ3`; the paravector model `Cl(3,0)` uses `e1..e3` with
//! the scalar unit playing the role of `e0`.

use rand::Rng;
use serde::Serialize;

use crate::algebra::{Blade, Multivector, Signature};
use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::num::{q, qr, Cq, Entry, Q};
use crate::spinor::{pauli, real_form_rep, tensor_pauli_rep, Route, SpinorRep};

fn block(a: &Mat<Cq>, b: &Mat<Cq>, c: &Mat<Cq>, d: &Mat<Cq>) -> Mat<Cq> {
    let n = a.rows();
    let mut m = Mat::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, a.get(i, j).clone());
            m.set(i, j + n, b.get(i, j).clone());
            m.set(i + n, j, c.get(i, j).clone());
            m.set(i + n, j + n, d.get(i, j).clone());
        }
    }
    m
}

fn fixed_rep(sig: Signature, generators: Vec<Mat<Cq>>) -> SpinorRep<Cq> {
    let rep = SpinorRep { sig, route: Route::Fixed, generators, idempotent: None, spinor_basis: Vec::new(), k_basis: Vec::new() };
    debug_assert!(rep.check_clifford_relations().is_ok());
    rep
}

/// The γ-basis of `Cl(1,3)`: `γ0 = diag(I, −I)`, `γk = [[0, σk], [−σk, 0]]`.
pub fn gamma_basis() -> SpinorRep<Cq> {
    let z = Mat::zeros(2, 2);
    let id = pauli(0);
    let mut gens = vec![block(&id, &z, &z, &id.neg())];
    for k in 1..=3 {
        let s = pauli(k);
        gens.push(block(&z, &s, &s.neg(), &z));
    }
    fixed_rep(Signature::real(1, 3), gens)
}

/// The canonical Dirac γ-matrices as generators of `C_4` (all squares `+I`).
pub fn dirac_basis() -> SpinorRep<Cq> {
    let (o, i, z) = (Cq::one(), Cq::i(), Cq::zero());
    let r = |v: [&Cq; 4], neg: [bool; 4]| -> Vec<Cq> {
        v.iter().zip(neg).map(|(x, n)| if n { x.neg() } else { (*x).clone() }).collect()
    };
    let f = [false; 4];
    let g1 = Mat::from_rows(vec![
        r([&z, &z, &z, &i], [false, false, false, true]),
        r([&z, &z, &i, &z], [false, false, true, false]),
        r([&z, &i, &z, &z], f),
        r([&i, &z, &z, &z], f),
    ]);
    let g2 = Mat::from_rows(vec![
        r([&z, &z, &z, &o], [false, false, false, true]),
        r([&z, &z, &o, &z], f),
        r([&z, &o, &z, &z], f),
        r([&o, &z, &z, &z], [true, false, false, false]),
    ]);
    let g3 = Mat::from_rows(vec![
        r([&z, &z, &i, &z], [false, false, true, false]),
        r([&z, &z, &z, &i], f),
        r([&i, &z, &z, &z], f),
        r([&z, &i, &z, &z], [false, true, false, false]),
    ]);
    let g4 = Mat::diag(vec![o.clone(), o.clone(), o.neg(), o.neg()]);
    fixed_rep(Signature::complex(4), vec![g1, g2, g3, g4])
}

/// Choice of generator matrices for commands that accept `--basis`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Basis {
    /// The γ-basis of `Cl(1,3)`.
    Gamma,
    /// The Dirac basis of `C_4`.
    Dirac,
    /// Tensor products of Pauli matrices (any even complex dimension, or a
    /// real form inside it).
    PauliTensor,
}

impl Basis {
    pub fn parse(s: &str) -> Option<Basis> {
        match s {
            "gamma" => Some(Basis::Gamma),
            "dirac" => Some(Basis::Dirac),
            "pauli-tensor" => Some(Basis::PauliTensor),
            _ => None,
        }
    }

    /// Generator matrices of `sig` in this basis.
    pub fn rep(self, sig: Signature) -> Result<SpinorRep<Cq>> {
        match self {
            Basis::Gamma if sig == Signature::real(1, 3) => Ok(gamma_basis()),
            Basis::Gamma => Err(Error::Invalid(format!("the gamma basis is defined for Cl(1,3) only, not {sig}"))),
            Basis::Dirac if sig == Signature::complex(4) => Ok(dirac_basis()),
            Basis::Dirac => Err(Error::Invalid(format!("the Dirac basis is defined for C_4 only, not {sig}"))),
            Basis::PauliTensor if sig.is_complex() => {
                let n = sig.n();
                if n == 0 {
                    return Err(Error::Invalid("tensor construction needs n ≥ 1".into()));
                }
                tensor_pauli_rep(n / 2, n % 2 == 1)
            }
            Basis::PauliTensor => real_form_rep(sig),
        }
    }
}

/// An element of the even subalgebra `Cl⁺(1,3) ≅ Cl(3,0)` in coordinates
/// `a⁰, a⁰¹, a⁰², a⁰³, a¹², a¹³, a²³, a⁰¹²³`.
///
/// The coefficient `a¹³` multiplies `γ3γ1`; with this orientation the
/// γ-basis matrix has the biquaternion pattern of [`DHSpinor::pattern_matrix`]
/// exactly. [`DHSpinor::literal_multivector`] uses `γ1γ3` instead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DHSpinor {
    pub a0: Q,
    pub a01: Q,
    pub a02: Q,
    pub a03: Q,
    pub a12: Q,
    pub a13: Q,
    pub a23: Q,
    pub a0123: Q,
}

impl DHSpinor {
    /// From the eight coordinates in the order `a⁰, a⁰¹, a⁰², a⁰³, a¹², a¹³, a²³, a⁰¹²³`.
    pub fn from_coeffs(c: &[Q]) -> Result<DHSpinor> {
        if c.len() != 8 {
            return Err(Error::Invalid(format!("a Dirac–Hestenes spinor has 8 coefficients, got {}", c.len())));
        }
        Ok(DHSpinor {
            a0: c[0].clone(),
            a01: c[1].clone(),
            a02: c[2].clone(),
            a03: c[3].clone(),
            a12: c[4].clone(),
            a13: c[5].clone(),
            a23: c[6].clone(),
            a0123: c[7].clone(),
        })
    }

    pub fn coeffs(&self) -> [Q; 8] {
        [
            self.a0.clone(),
            self.a01.clone(),
            self.a02.clone(),
            self.a03.clone(),
            self.a12.clone(),
            self.a13.clone(),
            self.a23.clone(),
            self.a0123.clone(),
        ]
    }

    /// Random spinor with integer coordinates in `−5..=5`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> DHSpinor {
        let c: Vec<Q> = (0..8).map(|_| q(rng.gen_range(-5..=5))).collect();
        DHSpinor::from_coeffs(&c).expect("eight coefficients")
    }

    /// `φ1 = a⁰ − ia¹²`, `φ2 = a¹³ − ia²³`, `φ3 = a⁰³ − ia⁰¹²³`, `φ4 = a⁰¹ + ia⁰²`.
    pub fn phi(&self) -> [Cq; 4] {
        [
            Cq::new(self.a0.clone(), -&self.a12),
            Cq::new(self.a13.clone(), -&self.a23),
            Cq::new(self.a03.clone(), -&self.a0123),
            Cq::new(self.a01.clone(), self.a02.clone()),
        ]
    }

    fn build(&self, a13_sign: i64) -> Multivector {
        let sig = Signature::real(1, 3);
        let b = |idx: &[usize]| Blade::from_indices(idx).expect("valid blade");
        let terms = [
            (Blade::ONE, self.a0.clone()),
            (b(&[1, 2]), self.a01.clone()),
            (b(&[1, 3]), self.a02.clone()),
            (b(&[1, 4]), self.a03.clone()),
            (b(&[2, 3]), self.a12.clone()),
            (b(&[2, 4]), &self.a13 * q(a13_sign)),
            (b(&[3, 4]), self.a23.clone()),
            (b(&[1, 2, 3, 4]), self.a0123.clone()),
        ];
        Multivector::from_terms(sig, terms.into_iter().map(|(bl, c)| (bl, Cq::real(c)))).expect("Cl(1,3) blades")
    }

    /// The element of `Cl(1,3)` (with `a¹³` on `γ3γ1 = −e2e4`).
    pub fn multivector(&self) -> Multivector {
        self.build(-1)
    }

    /// The expansion with `a¹³` on `γ1γ3 = e2e4`.
    pub fn literal_multivector(&self) -> Multivector {
        self.build(1)
    }

    /// Matrix of [`DHSpinor::multivector`] in the γ-basis.
    pub fn matrix(&self) -> Mat<Cq> {
        gamma_basis().represent(&self.multivector()).expect("complex entries")
    }

    /// The biquaternion pattern
    /// `[[φ1, −φ2*, φ3, φ4*], [φ2, φ1*, φ4, −φ3*], [φ3, φ4*, φ1, −φ2*], [φ4, −φ3*, φ2, φ1*]]`
    /// written out entry by entry.
    pub fn pattern_matrix(&self) -> Mat<Cq> {
        let [p1, p2, p3, p4] = self.phi();
        let c = |x: &Cq| x.conj();
        let n = |x: &Cq| x.conj().neg();
        Mat::from_rows(vec![
            vec![p1.clone(), n(&p2), p3.clone(), c(&p4)],
            vec![p2.clone(), c(&p1), p4.clone(), n(&p3)],
            vec![p3.clone(), c(&p4), p1.clone(), n(&p2)],
            vec![p4, n(&p3), p2, c(&p1)],
        ])
    }
}

/// `½(1+γ0)·½(1+iγ1γ2)` in the γ-basis (a primitive idempotent of `C_4`).
pub fn ideal_projector() -> Mat<Cq> {
    let (p0, p12) = projector_factors();
    p0.mul(&p12)
}

/// The two commuting factors `½(1+γ0)` and `½(1+iγ1γ2)`.
pub fn projector_factors() -> (Mat<Cq>, Mat<Cq>) {
    let g = gamma_basis().generators;
    let half = Cq::real(qr(1, 2));
    let id = Mat::identity(4);
    let p0 = id.add(&g[0]).scale(&half);
    let p12 = id.add(&g[1].mul(&g[2]).scale(&Cq::i())).scale(&half);
    (p0, p12)
}

/// Whether every column but the first is zero.
pub fn is_single_column(m: &Mat<Cq>) -> bool {
    (0..m.rows()).all(|i| (1..m.cols()).all(|j| m.get(i, j).is_zero()))
}

/// A spinor projected onto the minimal left ideal.
#[derive(Clone, Debug)]
pub struct IdealProjection {
    /// `Φ = φ·½(1+γ0)·½(1+iγ12)`.
    pub matrix: Mat<Cq>,
    /// First column of `Φ`.
    pub column: Vec<Cq>,
}

/// Right-multiply a 4×4 matrix by the ideal projector.
pub fn project(m: &Mat<Cq>) -> IdealProjection {
    let matrix = m.mul(&ideal_projector());
    let column = (0..matrix.rows()).map(|i| matrix.get(i, 0).clone()).collect();
    IdealProjection { matrix, column }
}

/// `Φ = φ·½(1+γ0)·½(1+iγ12)` for a Dirac–Hestenes spinor; the column is
/// `(φ1, φ2, φ3, φ4)`.
pub fn ideal_projection(s: &DHSpinor) -> IdealProjection {
    project(&s.matrix())
}

/// `γ5 = −iγ0γ1γ2γ3`.
pub fn gamma5() -> Mat<Cq> {
    let g = gamma_basis().generators;
    g[0].mul(&g[1]).mul(&g[2]).mul(&g[3]).scale(&Cq::i().neg())
}

/// `P± = (1 ± γ5)/2`.
pub fn helicity_projectors() -> (Mat<Cq>, Mat<Cq>) {
    let half = Cq::real(qr(1, 2));
    let id = Mat::identity(4);
    let g5 = gamma5();
    (id.add(&g5).scale(&half), id.sub(&g5).scale(&half))
}

/// The two helicity components `φ± = P±·φ·γ2γ1`.
#[derive(Clone, Debug)]
pub struct HelicitySplit {
    pub plus: Mat<Cq>,
    pub minus: Mat<Cq>,
}

pub fn helicity_split(s: &DHSpinor) -> HelicitySplit {
    let g = gamma_basis().generators;
    let right = s.matrix().mul(&g[2]).mul(&g[1]);
    let (pp, pm) = helicity_projectors();
    HelicitySplit { plus: pp.mul(&right), minus: pm.mul(&right) }
}

/// The split form written in terms of `φ1..φ4`: with two-component columns
/// `ψ1..ψ8`, `φ⁺ = [[ψ1 ψ2 ψ3 ψ4], [−ψ1 −ψ2 −ψ3 −ψ4]]` and
/// `φ⁻ = [[ψ5 ψ6 ψ7 ψ8], [ψ5 ψ6 ψ7 ψ8]]`, each `ψ` carrying a factor `i/2`.
pub fn split_pattern(phi: &[Cq; 4]) -> HelicitySplit {
    let [p1, p2, p3, p4] = phi.clone();
    let (c1, c2, c3, c4) = (p1.conj(), p2.conj(), p3.conj(), p4.conj());
    let half_i = Cq::new(q(0), qr(1, 2));
    let build = |s: &Cq, lower_sign: &Cq| -> Mat<Cq> {
        // columns of the upper half, each a pair (top, bottom)
        let top = [
            (p1.sub(&s.mul(&p3)), p2.sub(&s.mul(&p4))),
            (c2.add(&s.mul(&c4)), c1.neg().sub(&s.mul(&c3))),
            (p3.sub(&s.mul(&p1)), p4.sub(&s.mul(&p2))),
            (c4.neg().sub(&s.mul(&c2)), c3.add(&s.mul(&c1))),
        ];
        let mut m = Mat::zeros(4, 4);
        for (j, (a, b)) in top.iter().enumerate() {
            let (a, b) = (a.mul(&half_i), b.mul(&half_i));
            m.set(2, j, a.mul(lower_sign));
            m.set(3, j, b.mul(lower_sign));
            m.set(0, j, a);
            m.set(1, j, b);
        }
        m
    };
    HelicitySplit { plus: build(&Cq::one(), &Cq::one().neg()), minus: build(&Cq::one().neg(), &Cq::one()) }
}

fn paravector_sig() -> Signature {
    Signature::real(3, 0)
}

/// `v⁰ + v¹e1 + v²e2 + v³e3` in `Cl(3,0)`.
pub fn paravector(v: &[Q; 4]) -> Multivector {
    let terms = (0..4).map(|k| (if k == 0 { Blade::ONE } else { Blade::generator(k) }, Cq::real(v[k].clone())));
    Multivector::from_terms(paravector_sig(), terms).expect("Cl(3,0) blades")
}

/// Electric and magnetic components read off a paravector product, with the
/// scalar (gauge) residue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmField {
    pub scalar: Q,
    pub e: [Q; 3],
    pub h: [Q; 3],
}

fn e_blade(i: usize) -> Blade {
    Blade::generator(i)
}

/// `ω·e_i`: `e23`, `e31`, `e12` as (blade, sign) with blades in ascending order.
fn h_blade(i: usize) -> (Blade, i64) {
    match i {
        1 => (Blade(0b110), 1),
        2 => (Blade(0b101), -1),
        _ => (Blade(0b011), 1),
    }
}

impl EmField {
    pub fn zero() -> EmField {
        EmField { scalar: q(0), e: [q(0), q(0), q(0)], h: [q(0), q(0), q(0)] }
    }

    /// `scalar + Σ (E^i + ωH^i) e_i`, built by multiplying with `ω = e123`.
    pub fn multivector(&self) -> Multivector {
        let sig = paravector_sig();
        let omega = Multivector::blade(sig, Blade(0b111)).expect("volume blade");
        let mut mv = Multivector::scalar(sig, Cq::real(self.scalar.clone()));
        for i in 1..=3 {
            let ei = Multivector::generator(sig, i).expect("generator");
            let coeff = Multivector::scalar(sig, Cq::real(self.e[i - 1].clone()))
                .add(&omega.scale(&Cq::real(self.h[i - 1].clone())));
            mv = mv.add(&coeff.mul(&ei));
        }
        mv
    }

    /// Read `scalar`, `E` (vector part) and `H` (bivector part, `e23, e31, e12`).
    /// Fails if the element has a trivector part or complex coefficients.
    pub fn from_multivector(mv: &Multivector) -> Result<EmField> {
        if *mv.sig() != paravector_sig() {
            return Err(Error::SignatureMismatch(mv.sig().to_string(), paravector_sig().to_string()));
        }
        if mv.terms().any(|(_, c)| !c.is_real()) {
            return Err(Error::Invalid("field multivector has complex coefficients".into()));
        }
        if !mv.coeff(Blade(0b111)).is_zero() {
            return Err(Error::Invalid("field multivector has a trivector part".into()));
        }
        let re = |b: Blade| mv.coeff(b).re;
        let h = |i: usize| {
            let (b, s) = h_blade(i);
            re(b) * q(s)
        };
        Ok(EmField { scalar: re(Blade::ONE), e: [re(e_blade(1)), re(e_blade(2)), re(e_blade(3))], h: [h(1), h(2), h(3)] })
    }
}

/// `∇A` for paravectors `∇ = ∂⁰ + ∂ⁱe_i` and `A = A⁰ + Aⁱe_i`, read off the
/// product's graded parts.
pub fn nabla_a(partials: &[Q; 4], a: &[Q; 4]) -> EmField {
    let prod = paravector(partials).mul(&paravector(a));
    EmField::from_multivector(&prod).expect("a product of two paravectors has no trivector part")
}

/// The same read-off written as vector calculus: scalar `∂·A`,
/// `E^i = ∂⁰Aⁱ + ∂ⁱA⁰`, `H = ∂ × A`.
pub fn nabla_a_componentwise(d: &[Q; 4], a: &[Q; 4]) -> EmField {
    let scalar = (0..4).fold(q(0), |acc, k| acc + &d[k] * &a[k]);
    let e = [1, 2, 3].map(|i| &d[0] * &a[i] + &d[i] * &a[0]);
    let h = [
        &d[2] * &a[3] - &d[3] * &a[2],
        &d[3] * &a[1] - &d[1] * &a[3],
        &d[1] * &a[2] - &d[2] * &a[1],
    ];
    EmField { scalar, e, h }
}

/// Partial derivatives of the field: row `μ` holds
/// `∂_μ(E¹, E², E³, H¹, H², H³)` for `μ = 0..3`.
pub type FieldDerivatives = [[Q; 6]; 4];

/// The four Maxwell left-hand sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxwellResiduals {
    pub div_e: Q,
    /// `curl H − ∂⁰E`
    pub curl_h_minus_dt_e: [Q; 3],
    /// `curl E + ∂⁰H`
    pub curl_e_plus_dt_h: [Q; 3],
    pub div_h: Q,
}

/// `∇F = Σ_μ e_μ·∂_μF` with `F = Σ(Eⁱ + ωHⁱ)e_i`, read off by grade:
/// scalar `div E`, vector `−(curl H − ∂⁰E)`, bivector `curl E + ∂⁰H`
/// (on `e23, e31, e12`), trivector `div H`.
pub fn nabla_f(d: &FieldDerivatives) -> MaxwellResiduals {
    let sig = paravector_sig();
    let mut prod = Multivector::zero(sig);
    for (mu, row) in d.iter().enumerate() {
        let f = EmField {
            scalar: q(0),
            e: [row[0].clone(), row[1].clone(), row[2].clone()],
            h: [row[3].clone(), row[4].clone(), row[5].clone()],
        };
        let e_mu = if mu == 0 { Multivector::one(sig) } else { Multivector::generator(sig, mu).expect("generator") };
        prod = prod.add(&e_mu.mul(&f.multivector()));
    }
    let re = |b: Blade| prod.coeff(b).re;
    MaxwellResiduals {
        div_e: re(Blade::ONE),
        curl_h_minus_dt_e: [1, 2, 3].map(|i| -re(e_blade(i))),
        curl_e_plus_dt_h: [1, 2, 3].map(|i| {
            let (b, s) = h_blade(i);
            re(b) * q(s)
        }),
        div_h: re(Blade(0b111)),
    }
}

/// Maxwell residuals by direct vector calculus (independent of [`nabla_f`]).
pub fn maxwell_componentwise(d: &FieldDerivatives) -> MaxwellResiduals {
    // ∂_j E_i = d[j][i-1], ∂_j H_i = d[j][i+2]
    let de = |j: usize, i: usize| d[j][i - 1].clone();
    let dh = |j: usize, i: usize| d[j][i + 2].clone();
    let curl = |f: &dyn Fn(usize, usize) -> Q| [f(2, 3) - f(3, 2), f(3, 1) - f(1, 3), f(1, 2) - f(2, 1)];
    let curl_h = curl(&dh);
    let curl_e = curl(&de);
    MaxwellResiduals {
        div_e: de(1, 1) + de(2, 2) + de(3, 3),
        curl_h_minus_dt_e: [0, 1, 2].map(|k| &curl_h[k] - de(0, k + 1)),
        curl_e_plus_dt_h: [0, 1, 2].map(|k| &curl_e[k] + dh(0, k + 1)),
        div_h: dh(1, 1) + dh(2, 2) + dh(3, 3),
    }
}

/// The field as `φ = Σ F_i γ0γi` with `F = E + iH`, and its ideal projection.
#[derive(Clone, Debug)]
pub struct FieldBivector {
    pub e: [Q; 3],
    pub h: [Q; 3],
    pub f: [Cq; 3],
    /// `Σ (Eⁱ + ωHⁱ) e_i` in `Cl(3,0)`.
    pub multivector: Multivector,
    /// `Σ F_i γ0γi` in the γ-basis.
    pub matrix: Mat<Cq>,
    pub projection: IdealProjection,
}

impl FieldBivector {
    /// `(0, F1, F2, F3)`, the vector the projected column stands for.
    pub fn slots(&self) -> [Cq; 4] {
        [Cq::zero(), self.f[0].clone(), self.f[1].clone(), self.f[2].clone()]
    }

    /// Reversion in `Cl(3,0)`, which fixes the vector part and negates the
    /// bivector part, i.e. `(E, H) ↦ (E, −H)` and `F ↦ F*`.
    pub fn reversed(&self) -> FieldBivector {
        let rev = EmField::from_multivector(&self.multivector.reversion()).expect("reversion keeps grades");
        field_bivector(&rev.e, &rev.h)
    }
}

pub fn field_bivector(e: &[Q; 3], h: &[Q; 3]) -> FieldBivector {
    let g = gamma_basis().generators;
    let f: [Cq; 3] = [0, 1, 2].map(|i| Cq::new(e[i].clone(), h[i].clone()));
    let mut matrix = Mat::zeros(4, 4);
    for i in 0..3 {
        matrix = matrix.add(&g[0].mul(&g[i + 1]).scale(&f[i]));
    }
    let field = EmField { scalar: q(0), e: e.clone(), h: h.clone() };
    let projection = project(&matrix);
    FieldBivector { e: e.clone(), h: h.clone(), f, multivector: field.multivector(), matrix, projection }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qs(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn bases_satisfy_clifford_relations() {
        gamma_basis().check_clifford_relations().unwrap();
        dirac_basis().check_clifford_relations().unwrap();
    }

    #[test]
    fn dh_matrix_matches_pattern_and_literal_differs_in_a13() {
        let s = DHSpinor::from_coeffs(&qs(&[1, 2, 3, 4, 5, 6, 7, 8])).unwrap();
        assert_eq!(s.matrix(), s.pattern_matrix());
        let lit = gamma_basis().represent(&s.literal_multivector()).unwrap();
        let mut flipped = s.clone();
        flipped.a13 = -flipped.a13.clone();
        assert_eq!(lit, flipped.pattern_matrix());
        assert_ne!(lit, s.pattern_matrix());
    }

    #[test]
    fn projection_is_single_column_with_phi() {
        let s = DHSpinor::from_coeffs(&qs(&[1, -2, 3, 0, 5, -1, 2, 4])).unwrap();
        let p = ideal_projection(&s);
        assert!(is_single_column(&p.matrix));
        assert_eq!(p.column, s.phi().to_vec());
        let (p0, p12) = projector_factors();
        assert_eq!(p0.mul(&p12), p12.mul(&p0));
    }

    #[test]
    fn helicity_split_matches_pattern() {
        let s = DHSpinor::from_coeffs(&qs(&[3, 1, -4, 1, 5, -9, 2, 6])).unwrap();
        let split = helicity_split(&s);
        let pat = split_pattern(&s.phi());
        assert_eq!(split.plus, pat.plus);
        assert_eq!(split.minus, pat.minus);
    }

    #[test]
    fn nabla_a_examples() {
        let f = nabla_a(&[q(1), q(0), q(0), q(0)], &[q(0), q(1), q(0), q(0)]);
        assert_eq!(f.e, [q(1), q(0), q(0)]);
        assert_eq!(f.h, [q(0), q(0), q(0)]);
        let f = nabla_a(&[q(0), q(1), q(0), q(0)], &[q(0), q(0), q(1), q(0)]);
        assert_eq!(f.h, [q(0), q(0), q(1)]);
        assert_eq!(f.e, [q(0), q(0), q(0)]);
    }

    #[test]
    fn nabla_f_dt_e1() {
        let mut d: FieldDerivatives = Default::default();
        for row in d.iter_mut() {
            *row = [0; 6].map(q);
        }
        d[0][0] = q(1);
        let r = nabla_f(&d);
        assert_eq!(r.curl_h_minus_dt_e, [q(-1), q(0), q(0)]);
        assert_eq!(r, maxwell_componentwise(&d));
    }

    #[test]
    fn field_bivector_column_and_reversion() {
        let fb = field_bivector(&[q(1), q(2), q(3)], &[q(4), q(5), q(6)]);
        let col = &fb.projection.column;
        assert!(col[0].is_zero() && col[1].is_zero());
        assert_eq!(col[2], fb.f[2]);
        assert_eq!(col[3], fb.f[0].add(&Cq::i().mul(&fb.f[1])));
        let rev = fb.reversed();
        assert_eq!(rev.h, [q(-4), q(-5), q(-6)]);
        assert_eq!(rev.f, fb.f.clone().map(|x| x.conj()));
    }
}
