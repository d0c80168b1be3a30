//! Spinor representations.
//!
//! Two routes are provided:
//!
//! * the *ideal* route: a primitive idempotent `f = Π (1+t_j)/2` built from
//!   commuting blades of square `+1`, the minimal left ideal `Cl·f` as a right
//!   module over the division ring `K = f·Cl·f`, and the matrices of left
//!   multiplication by each generator with entries in `K` (real, complex or
//!   quaternion);
//! * the *tensor* route: generators of `C_{2k}` (and `C_{2k+1}`) as tensor
//!   products of Pauli matrices.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::{blade_product_unchecked, blade_square, Blade, Multivector, Signature};
use crate::classify::algebra_class;
use crate::error::{Error, Result};
use crate::matrix::{rank, Mat};
use crate::num::{q, qr, Cq, Entry, Quat, Q};

/// Radon–Hurwitz number `r_i`: `r_0..r_7 = 0,1,2,2,3,3,3,3` and `r_{i±8} = r_i ± 4`.
pub fn rh_number(i: i64) -> i64 {
    const R: [i64; 8] = [0, 1, 2, 2, 3, 3, 3, 3];
    R[i.rem_euclid(8) as usize] + 4 * i.div_euclid(8)
}

/// Number of factors `k = q − r_{q−p}` of a primitive idempotent of `Cl(p,q)`.
/// For `C_n` this is `⌊n/2⌋`.
pub fn idempotent_k(sig: Signature) -> usize {
    if sig.is_complex() {
        return sig.n() / 2;
    }
    let k = sig.q as i64 - rh_number(sig.q as i64 - sig.p as i64);
    usize::try_from(k).expect("Radon–Hurwitz count is never negative")
}

/// Signed blade `±e_A`.
pub type SignedBlade = (i8, Blade);

/// Product of two signed blades.
fn sb_mul(a: SignedBlade, b: SignedBlade, sig: &Signature) -> SignedBlade {
    let (bl, s) = blade_product_unchecked(a.1, b.1, sig);
    (a.0 * b.0 * s, bl)
}

/// Primitive idempotent `f = Π (1 + t_j)/2`.
#[derive(Clone, Debug, PartialEq)]
pub struct Idempotent {
    pub sig: Signature,
    pub factors: Vec<SignedBlade>,
    pub element: Multivector,
}

impl Idempotent {
    /// Validate and build from signed commuting blades of square `+1`.
    ///
    /// The factors must pairwise commute and generate a group of order `2^k`
    /// that does not contain `−1` (otherwise the product vanishes).
    pub fn from_blades(sig: Signature, factors: &[SignedBlade]) -> Result<Self> {
        for &(s, b) in factors {
            if s != 1 && s != -1 {
                return Err(Error::Invalid(format!("factor sign must be ±1, got {s}")));
            }
            if b.max_index() > sig.n() {
                return Err(Error::IndexOutOfRange { index: b.max_index(), n: sig.n() });
            }
            if b == Blade::ONE || blade_square(b, &sig) != 1 {
                return Err(Error::Invalid(format!("{b} does not square to +1 in {sig}")));
            }
        }
        for (i, a) in factors.iter().enumerate() {
            for b in &factors[i + 1..] {
                if a.1.commutation(b.1) != 1 {
                    return Err(Error::Invalid(format!("{} and {} do not commute", a.1, b.1)));
                }
            }
        }
        let mut group: BTreeSet<SignedBlade> = BTreeSet::from([(1, Blade::ONE)]);
        for &t in factors {
            let new: Vec<SignedBlade> = group.iter().map(|&g| sb_mul(g, t, &sig)).collect();
            group.extend(new);
        }
        if group.len() != 1 << factors.len() || group.contains(&(-1, Blade::ONE)) {
            return Err(Error::Invalid("factors are not independent".into()));
        }
        let half = Cq::real(qr(1, 2));
        let mut element = Multivector::one(sig);
        for &(s, b) in factors {
            let t = Multivector::from_terms(sig, [(Blade::ONE, half.clone()), (b, Cq::real(qr(s as i64, 2)))])?;
            element = element.mul(&t);
        }
        Ok(Idempotent { sig, factors: factors.to_vec(), element })
    }

    /// Whether a blade commutes with every factor (then `f·b·f = b·f ≠ 0`).
    pub fn commutes_with(&self, b: Blade) -> bool {
        self.factors.iter().all(|t| t.1.commutation(b) == 1)
    }

    /// Human-readable form `½(1+e1)·½(1−e34)`.
    pub fn describe(&self) -> String {
        if self.factors.is_empty() {
            return "1".into();
        }
        self.factors
            .iter()
            .map(|(s, b)| format!("(1{}{b})/2", if *s > 0 { '+' } else { '-' }))
            .collect::<Vec<_>>()
            .join("·")
    }
}

/// Blades with square `+1` (excluding the unit) in grade-ascending lexicographic order.
fn unit_square_blades(sig: &Signature) -> Vec<Blade> {
    Blade::all_ordered(sig.n())
        .into_iter()
        .filter(|&b| b != Blade::ONE && blade_square(b, sig) == 1)
        .collect()
}

fn extends_independently(sig: &Signature, chosen: &[Blade], cand: Blade) -> bool {
    if chosen.iter().any(|c| c.commutation(cand) != 1) {
        return false;
    }
    // cand must not lie (up to sign) in the group generated by `chosen`
    let mut group: BTreeSet<Blade> = BTreeSet::from([Blade::ONE]);
    for &t in chosen {
        let new: Vec<Blade> = group.iter().map(|&g| blade_product_unchecked(g, t, sig).0).collect();
        group.extend(new);
    }
    !group.contains(&cand)
}

/// First set (in grade-ascending lexicographic order) of `k = q − r_{q−p}`
/// commuting, independent `+1`-square blades, with all signs `+`.
pub fn find_primitive_idempotent(sig: Signature) -> Result<Idempotent> {
    let k = idempotent_k(sig);
    let pool = unit_square_blades(&sig);
    fn search(sig: &Signature, pool: &[Blade], start: usize, k: usize, chosen: &mut Vec<Blade>) -> bool {
        if chosen.len() == k {
            return true;
        }
        for i in start..pool.len() {
            if extends_independently(sig, chosen, pool[i]) {
                chosen.push(pool[i]);
                if search(sig, pool, i + 1, k, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    if !search(&sig, &pool, 0, k, &mut chosen) {
        return Err(Error::Consistency(format!("no primitive idempotent found for {sig}")));
    }
    let factors: Vec<SignedBlade> = chosen.into_iter().map(|b| (1, b)).collect();
    let f = Idempotent::from_blades(sig, &factors)?;
    check_primitive(&f)?;
    Ok(f)
}

/// Every primitive idempotent `Π(1 ± t_j)/2` over all sets of `k` commuting
/// independent `+1`-square blades, deduplicated by value. Sets are returned in
/// search order; signs vary fastest.
pub fn enumerate_primitive_idempotents(sig: Signature) -> Result<Vec<Idempotent>> {
    if sig.n() > 6 {
        return Err(Error::SizeGuard { n: sig.n(), max: 6 });
    }
    let k = idempotent_k(sig);
    let pool = unit_square_blades(&sig);
    let mut sets = Vec::new();
    fn collect(sig: &Signature, pool: &[Blade], start: usize, k: usize, chosen: &mut Vec<Blade>, out: &mut Vec<Vec<Blade>>) {
        if chosen.len() == k {
            out.push(chosen.clone());
            return;
        }
        for i in start..pool.len() {
            if extends_independently(sig, chosen, pool[i]) {
                chosen.push(pool[i]);
                collect(sig, pool, i + 1, k, chosen, out);
                chosen.pop();
            }
        }
    }
    collect(&sig, &pool, 0, k, &mut Vec::new(), &mut sets);
    let mut seen: Vec<Multivector> = Vec::new();
    let mut out = Vec::new();
    for set in sets {
        for mask in 0..(1u32 << k) {
            let factors: Vec<SignedBlade> =
                set.iter().enumerate().map(|(j, &b)| (if mask >> j & 1 == 1 { -1 } else { 1 }, b)).collect();
            let f = Idempotent::from_blades(sig, &factors)?;
            if !seen.contains(&f.element) {
                check_primitive(&f)?;
                seen.push(f.element.clone());
                out.push(f);
            }
        }
    }
    Ok(out)
}

/// Incrementally maintained row-echelon basis of dense rational vectors.
#[derive(Default)]
struct Echelon {
    rows: Vec<(usize, Vec<Q>)>,
}

impl Echelon {
    fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if !Entry::is_zero(&v[*p]) {
                let f = v[*p].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    if !Entry::is_zero(y) {
                        *x = &*x - &f * y;
                    }
                }
            }
        }
        v
    }

    /// Add `v`; returns `false` when it was already in the span.
    fn insert(&mut self, v: &[Q]) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !Entry::is_zero(x)) else {
            return false;
        };
        let inv = r[p].recip();
        let r: Vec<Q> = r.iter().map(|x| x * &inv).collect();
        for (_, row) in self.rows.iter_mut() {
            if !Entry::is_zero(&row[p]) {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&r) {
                    *x = &*x - &f * y;
                }
            }
        }
        self.rows.push((p, r));
        true
    }

    fn len(&self) -> usize {
        self.rows.len()
    }
}

fn real_dense(m: &Multivector) -> Vec<Q> {
    m.dense().into_iter().map(|c| c.re).collect()
}

/// Real dimension of `f·Cl·f` (1, 2 or 4 for a primitive idempotent).
pub fn k_dimension(f: &Idempotent) -> usize {
    let mut ech = Echelon::default();
    for b in Blade::all_ordered(f.sig.n()) {
        if f.commutes_with(b) {
            let v = Multivector::blade(f.sig, b).expect("valid blade").mul(&f.element);
            ech.insert(&real_dense(&v));
        }
    }
    ech.len()
}

/// Check primitivity: `dim_R(f·Cl·f)` must equal the real dimension of the division ring.
pub fn check_primitive(f: &Idempotent) -> Result<()> {
    if f.element.mul(&f.element) != f.element {
        return Err(Error::NotIdempotent);
    }
    if f.sig.is_complex() {
        return Ok(());
    }
    let expected = algebra_class(f.sig).ring.real_dim();
    let found = k_dimension(f);
    if found != expected {
        return Err(Error::NotPrimitive { found, expected });
    }
    Ok(())
}

/// Division-ring basis: blades `b` with `f·b·f ≠ 0`, greedily independent,
/// normalized to the form `{1}`, `{1, x}` or `{1, x, y, x·y}`.
pub fn k_field(f: &Idempotent) -> Result<Vec<Blade>> {
    check_primitive(f)?;
    let d = algebra_class(f.sig).ring.real_dim();
    let mut ech = Echelon::default();
    let mut basis = Vec::new();
    for b in Blade::all_ordered(f.sig.n()) {
        if basis.len() == d.min(3) {
            break;
        }
        if !f.commutes_with(b) {
            continue;
        }
        let v = Multivector::blade(f.sig, b)?.mul(&f.element);
        if ech.insert(&real_dense(&v)) {
            basis.push(b);
        }
    }
    if d == 4 {
        let xy = blade_product_unchecked(basis[1], basis[2], &f.sig).0;
        basis.push(xy);
    }
    Ok(basis)
}

/// Q-basis of the minimal left ideal `Cl·f`, as `c_j · m_l · f`.
pub fn minimal_left_ideal(f: &Idempotent) -> Result<Vec<Multivector>> {
    let kb = k_field(f)?;
    let (spinor, units) = spinor_basis(f, &kb)?;
    let mut out = Vec::new();
    for c in &spinor {
        for m in &units {
            out.push(Multivector::blade(f.sig, *c)?.mul(m).mul(&f.element));
        }
    }
    Ok(out)
}

/// Multivectors `m_l` realizing the K-units `1, x, y, x·y` (as products, so
/// that signs follow the algebra).
fn k_units(sig: Signature, kb: &[Blade]) -> Result<Vec<Multivector>> {
    let mut units: Vec<Multivector> = kb.iter().map(|&b| Multivector::blade(sig, b)).collect::<Result<_>>()?;
    if units.len() == 4 {
        units[3] = units[1].mul(&units[2]);
    }
    Ok(units)
}

fn spinor_basis(f: &Idempotent, kb: &[Blade]) -> Result<(Vec<Blade>, Vec<Multivector>)> {
    let sig = f.sig;
    let class = algebra_class(sig);
    let target = class.matrix_form.dim;
    let units = k_units(sig, kb)?;
    let mut ech = Echelon::default();
    let mut basis = Vec::new();
    for c in Blade::all_ordered(sig.n()) {
        if basis.len() == target {
            break;
        }
        let cf = Multivector::blade(sig, c)?.mul(&f.element);
        if ech.reduce(&real_dense(&cf)).iter().all(Entry::is_zero) {
            continue;
        }
        for m in &units {
            ech.insert(&real_dense(&Multivector::blade(sig, c)?.mul(m).mul(&f.element)));
        }
        basis.push(c);
    }
    if basis.len() != target {
        return Err(Error::Consistency(format!("spinor basis of {sig} has {} elements, expected {target}", basis.len())));
    }
    Ok((basis, units))
}

/// How a representation was obtained.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Route {
    IdealBasis,
    TensorPauli,
    /// A fixed, hand-written basis such as the Dirac γ-matrices.
    Fixed,
}

/// Generator matrices of a representation over a fixed entry domain.
#[derive(Clone, Debug)]
pub struct SpinorRep<T> {
    pub sig: Signature,
    pub route: Route,
    pub generators: Vec<Mat<T>>,
    pub idempotent: Option<Idempotent>,
    /// Blades `c_j` with spinor basis `c_j·f` (ideal route).
    pub spinor_basis: Vec<Blade>,
    /// Blades spanning `K = f·Cl·f` (ideal route).
    pub k_basis: Vec<Blade>,
}

impl<T: Entry> SpinorRep<T> {
    pub fn dim(&self) -> usize {
        self.generators.first().map_or(1, Mat::rows)
    }

    /// Check `E_i² = ±I` with the signature's sign and pairwise anticommutation.
    pub fn check_clifford_relations(&self) -> Result<()> {
        let sig = &self.sig;
        for (i, a) in self.generators.iter().enumerate() {
            let sq = a.mul(a).unit_sign();
            if sq != Some(sig.generator_square(i + 1)) {
                return Err(Error::Consistency(format!("generator {} of {sig} has wrong square", i + 1)));
            }
            for b in &self.generators[i + 1..] {
                if !a.anticommutator(b).is_zero() {
                    return Err(Error::Consistency(format!("generators of {sig} do not anticommute")));
                }
            }
        }
        Ok(())
    }

    /// Matrix of a basis blade: ordered product of generator matrices.
    pub fn blade_matrix(&self, b: Blade) -> Mat<T> {
        let mut m = Mat::identity(self.dim());
        for i in b.indices() {
            m = m.mul(&self.generators[i - 1]);
        }
        m
    }

    /// Matrix of a multivector, extended linearly.
    pub fn represent(&self, a: &Multivector) -> Result<Mat<T>> {
        let mut m = Mat::zeros(self.dim(), self.dim());
        for (b, c) in a.terms() {
            let s = T::from_cq(c).ok_or_else(|| Error::FieldMismatch(format!("coefficient {c} not in entry domain")))?;
            m = m.add(&self.blade_matrix(*b).scale(&s));
        }
        Ok(m)
    }
}

/// A representation over whichever domain the division ring requires.
#[derive(Clone, Debug)]
pub enum AnySpinorRep {
    Real(SpinorRep<Q>),
    Complex(SpinorRep<Cq>),
    Quaternion(SpinorRep<Quat>),
}

impl AnySpinorRep {
    pub fn sig(&self) -> Signature {
        match self {
            AnySpinorRep::Real(r) => r.sig,
            AnySpinorRep::Complex(r) => r.sig,
            AnySpinorRep::Quaternion(r) => r.sig,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            AnySpinorRep::Real(r) => r.dim(),
            AnySpinorRep::Complex(r) => r.dim(),
            AnySpinorRep::Quaternion(r) => r.dim(),
        }
    }

    pub fn domain(&self) -> &'static str {
        match self {
            AnySpinorRep::Real(_) => "R",
            AnySpinorRep::Complex(_) => "C",
            AnySpinorRep::Quaternion(_) => "H",
        }
    }

    pub fn check_clifford_relations(&self) -> Result<()> {
        match self {
            AnySpinorRep::Real(r) => r.check_clifford_relations(),
            AnySpinorRep::Complex(r) => r.check_clifford_relations(),
            AnySpinorRep::Quaternion(r) => r.check_clifford_relations(),
        }
    }

    /// Generator matrices as rows of strings (entries in `K`-symbols).
    pub fn generator_strings(&self) -> Vec<Vec<Vec<String>>> {
        fn conv<T: Entry>(ms: &[Mat<T>]) -> Vec<Vec<Vec<String>>> {
            ms.iter().map(|m| m.row_vecs().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()).collect()
        }
        match self {
            AnySpinorRep::Real(r) => conv(&r.generators),
            AnySpinorRep::Complex(r) => conv(&r.generators),
            AnySpinorRep::Quaternion(r) => conv(&r.generators),
        }
    }

    pub fn idempotent(&self) -> Option<&Idempotent> {
        match self {
            AnySpinorRep::Real(r) => r.idempotent.as_ref(),
            AnySpinorRep::Complex(r) => r.idempotent.as_ref(),
            AnySpinorRep::Quaternion(r) => r.idempotent.as_ref(),
        }
    }

    /// Generators over the Gaussian rationals; quaternion entries become
    /// complex 2×2 blocks (doubling the size).
    pub fn complex_generators(&self) -> Vec<Mat<Cq>> {
        match self {
            AnySpinorRep::Real(r) => r.generators.iter().map(|m| m.map(|x| Cq::real(x.clone()))).collect(),
            AnySpinorRep::Complex(r) => r.generators.clone(),
            AnySpinorRep::Quaternion(r) => r.generators.iter().map(Mat::to_complex_blocks).collect(),
        }
    }

    pub fn route(&self) -> Route {
        match self {
            AnySpinorRep::Real(r) => r.route,
            AnySpinorRep::Complex(r) => r.route,
            AnySpinorRep::Quaternion(r) => r.route,
        }
    }
}

/// Left-multiplication matrices on the ideal `Cl·f` over `K = f·Cl·f`.
///
/// `k_basis` may pin the division-ring basis explicitly (it must have the
/// form `{1}`, `{1,x}` or `{1,x,y,xy}`); otherwise [`k_field`] chooses it.
pub fn spinor_k_repr(sig: Signature, f: &Idempotent, k_basis: Option<&[Blade]>) -> Result<AnySpinorRep> {
    if sig.is_complex() {
        return Err(Error::Invalid("ideal route is implemented for real algebras; use tensor_pauli_rep for C_n".into()));
    }
    if f.sig != sig {
        return Err(Error::SignatureMismatch(sig.to_string(), f.sig.to_string()));
    }
    check_primitive(f)?;
    let d = algebra_class(sig).ring.real_dim();
    let kb: Vec<Blade> = match k_basis {
        Some(kb) => {
            validate_k_basis(f, kb, d)?;
            kb.to_vec()
        }
        None => k_field(f)?,
    };
    let (spinor, units) = spinor_basis(f, &kb)?;
    let n_sp = spinor.len();
    // columns w_{kl} = c_k · m_l · f
    let mut cols: Vec<Vec<Q>> = Vec::with_capacity(n_sp * d);
    for c in &spinor {
        for m in &units {
            cols.push(real_dense(&Multivector::blade(sig, *c)?.mul(m).mul(&f.element)));
        }
    }
    let solver = CoordSolver::new(&cols)?;
    let mut coords: Vec<Vec<Vec<Vec<Q>>>> = Vec::new(); // [gen][row k][col j][l]
    for i in 1..=sig.n() {
        let e = Multivector::generator(sig, i)?;
        let mut mat = vec![vec![Vec::new(); n_sp]; n_sp];
        for (j, c) in spinor.iter().enumerate() {
            let v = real_dense(&e.mul(&Multivector::blade(sig, *c)?).mul(&f.element));
            let x = solver.solve(&v)?;
            for k in 0..n_sp {
                mat[k][j] = x[k * d..(k + 1) * d].to_vec();
            }
        }
        coords.push(mat);
    }
    let rep = match d {
        1 => AnySpinorRep::Real(assemble(sig, f, &spinor, &kb, &coords, |x| x[0].clone())),
        2 => AnySpinorRep::Complex(assemble(sig, f, &spinor, &kb, &coords, |x| Cq::new(x[0].clone(), x[1].clone()))),
        _ => AnySpinorRep::Quaternion(assemble(sig, f, &spinor, &kb, &coords, |x| {
            Quat::new(x[0].clone(), x[1].clone(), x[2].clone(), x[3].clone())
        })),
    };
    rep.check_clifford_relations()?;
    Ok(rep)
}

fn assemble<T: Entry>(
    sig: Signature,
    f: &Idempotent,
    spinor: &[Blade],
    kb: &[Blade],
    coords: &[Vec<Vec<Vec<Q>>>],
    conv: impl Fn(&[Q]) -> T,
) -> SpinorRep<T> {
    let generators = coords
        .iter()
        .map(|mat| Mat::from_rows(mat.iter().map(|row| row.iter().map(|x| conv(x)).collect()).collect()))
        .collect();
    SpinorRep {
        sig,
        route: Route::IdealBasis,
        generators,
        idempotent: Some(f.clone()),
        spinor_basis: spinor.to_vec(),
        k_basis: kb.to_vec(),
    }
}

fn validate_k_basis(f: &Idempotent, kb: &[Blade], d: usize) -> Result<()> {
    if kb.len() != d || kb.first() != Some(&Blade::ONE) {
        return Err(Error::Invalid(format!("K-basis must have {d} blades starting with 1")));
    }
    for &b in kb {
        if !f.commutes_with(b) {
            return Err(Error::Invalid(format!("{b} does not commute with the idempotent factors")));
        }
    }
    let sig = &f.sig;
    for &b in &kb[1..] {
        if blade_square(b, sig) != -1 {
            return Err(Error::Invalid(format!("K-unit {b} must square to -1")));
        }
    }
    if d == 4 {
        if kb[1].commutation(kb[2]) != -1 {
            return Err(Error::Invalid("quaternion units must anticommute".into()));
        }
        if blade_product_unchecked(kb[1], kb[2], sig).0 != kb[3] {
            return Err(Error::Invalid(format!("fourth K-unit must be {}·{}", kb[1], kb[2])));
        }
    }
    let units = k_units(*sig, kb)?;
    let vecs: Vec<Vec<Q>> = units.iter().map(|m| real_dense(&m.mul(&f.element))).collect();
    if rank(&vecs) != d {
        return Err(Error::Invalid("K-basis is linearly dependent on f".into()));
    }
    Ok(())
}

/// Solves `Σ x_c w_c = v` for a fixed, independent set of columns `w_c`.
struct CoordSolver {
    cols: Vec<Vec<Q>>,
    pivots: Vec<usize>,
    inv: Mat<Q>,
}

impl CoordSolver {
    fn new(cols: &[Vec<Q>]) -> Result<Self> {
        // choose coordinate rows on which the columns are independent
        let mut ech = Echelon::default();
        let mut pivots = Vec::new();
        for c in cols {
            let before = ech.len();
            ech.insert(c);
            if ech.len() == before {
                return Err(Error::Consistency("ideal basis is linearly dependent".into()));
            }
        }
        for (p, _) in &ech.rows {
            pivots.push(*p);
        }
        let sub = Mat::from_rows(pivots.iter().map(|&r| cols.iter().map(|c| c[r].clone()).collect()).collect());
        let inv = sub.inverse().ok_or_else(|| Error::Consistency("singular coordinate system".into()))?;
        Ok(CoordSolver { cols: cols.to_vec(), pivots, inv })
    }

    fn solve(&self, v: &[Q]) -> Result<Vec<Q>> {
        let rhs = Mat::from_rows(self.pivots.iter().map(|&r| vec![v[r].clone()]).collect());
        let x: Vec<Q> = self.inv.mul(&rhs).row_vecs().into_iter().map(|r| r[0].clone()).collect();
        // verify on every coordinate
        for (r, target) in v.iter().enumerate() {
            let mut s = q(0);
            for (c, xc) in self.cols.iter().zip(&x) {
                if !Entry::is_zero(&c[r]) {
                    s += &c[r] * xc;
                }
            }
            if s != *target {
                return Err(Error::Consistency("vector is not in the ideal".into()));
            }
        }
        Ok(x)
    }
}

/// Pauli matrices `σ0..σ3`.
pub fn pauli(k: usize) -> Mat<Cq> {
    let (o, z, i) = (Cq::one(), Cq::zero(), Cq::i());
    match k {
        0 => Mat::identity(2),
        1 => Mat::from_rows(vec![vec![z.clone(), o.clone()], vec![o, z]]),
        2 => Mat::from_rows(vec![vec![z.clone(), i.neg()], vec![i, z]]),
        3 => Mat::diag(vec![o.clone(), o.neg()]),
        _ => panic!("Pauli index out of range: {k}"),
    }
}

fn tensor(factors: &[usize]) -> Mat<Cq> {
    factors.iter().fold(Mat::identity(1), |acc, &k| acc.kron(&pauli(k)))
}

/// Generators of `C_{2k}` as Pauli tensor products:
/// `E_j = σ3^{⊗(j−1)} ⊗ σ1 ⊗ σ0^{⊗(k−j)}` and
/// `E_{k+j} = σ3^{⊗(j−1)} ⊗ σ2 ⊗ σ0^{⊗(k−j)}`; with `odd_extra` the
/// generator `E_{2k+1} = σ3^{⊗k}` of `C_{2k+1}` is appended.
pub fn tensor_pauli_rep(k: usize, odd_extra: bool) -> Result<SpinorRep<Cq>> {
    if k == 0 {
        return Err(Error::Invalid("tensor construction needs k ≥ 1".into()));
    }
    let mut gens = Vec::with_capacity(2 * k + 1);
    for middle in [1, 2] {
        for j in 1..=k {
            let mut f = vec![3; j - 1];
            f.push(middle);
            f.extend(std::iter::repeat(0).take(k - j));
            gens.push(tensor(&f));
        }
    }
    if odd_extra {
        gens.push(tensor(&vec![3; k]));
    }
    let n = gens.len();
    let rep = SpinorRep {
        sig: Signature::complex(n),
        route: Route::TensorPauli,
        generators: gens,
        idempotent: None,
        spinor_basis: Vec::new(),
        k_basis: Vec::new(),
    };
    rep.check_clifford_relations()?;
    Ok(rep)
}

/// Matrices of the real form `Cl(p,q)` inside `C_{p+q}`:
/// `{E_1, …, E_p, iE_{p+1}, …, iE_{p+q}}` from the tensor construction.
pub fn real_form_rep(sig: Signature) -> Result<SpinorRep<Cq>> {
    let n = sig.n();
    if n == 0 {
        return Err(Error::Invalid("real form needs n ≥ 1".into()));
    }
    let base = if n == 1 {
        SpinorRep {
            sig: Signature::complex(1),
            route: Route::TensorPauli,
            generators: vec![Mat::identity(1)],
            idempotent: None,
            spinor_basis: Vec::new(),
            k_basis: Vec::new(),
        }
    } else {
        tensor_pauli_rep(n / 2, n % 2 == 1)?
    };
    let i = Cq::i();
    let generators = base
        .generators
        .into_iter()
        .enumerate()
        .map(|(j, m)| if j < sig.p { m } else { m.scale(&i) })
        .collect();
    let rep = SpinorRep { sig: Signature::real(sig.p, sig.q), generators, ..base };
    rep.check_clifford_relations()?;
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radon_hurwitz_values() {
        assert_eq!(rh_number(2), 2);
        assert_eq!(rh_number(-3), -1);
        assert_eq!(rh_number(-8), -4);
        assert_eq!(idempotent_k(Signature::real(1, 3)), 1);
        assert_eq!(idempotent_k(Signature::real(4, 1)), 2);
        assert_eq!(idempotent_k(Signature::real(0, 8)), 4);
        assert_eq!(idempotent_k(Signature::real(8, 0)), 4);
    }

    #[test]
    fn rejects_bad_factors() {
        let s = Signature::real(1, 3);
        assert!(Idempotent::from_blades(s, &[(1, Blade::generator(2))]).is_err());
        assert!(Idempotent::from_blades(s, &[(1, Blade::generator(1)), (1, Blade::parse("e12").unwrap())]).is_err());
    }

    #[test]
    fn pauli_k1() {
        let r = tensor_pauli_rep(1, true).unwrap();
        for (j, m) in r.generators.iter().enumerate() {
            assert_eq!(*m, pauli(j + 1));
        }
    }
}
