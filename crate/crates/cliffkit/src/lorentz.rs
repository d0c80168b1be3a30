//! Infinitesimal operators of finite-dimensional representations of the
//! proper Lorentz group, their models by products of spin-basis matrices,
//! and the permutation relations of those operators with the matrices
//! `W`, `E`, `C` of the discrete symmetries.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::algebra::Signature;
use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::num::{fmt_q, q, qr, Cq, Entry, Surd, Q};
use crate::reflect::{build_wec, build_wec_complex, ReflectionData};
use crate::spinor::{find_primitive_idempotent, spinor_k_repr, tensor_pauli_rep};

/// Label `(l0, l1)` of a finite-dimensional representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepLabel {
    pub l0: Q,
    pub l1: Q,
}

impl RepLabel {
    /// Accepts half-integer `l0` with `|l1| − |l0|` a positive integer.
    pub fn new(l0: Q, l1: Q) -> Result<Self> {
        let two = q(2);
        if !(&l0 * &two).is_integer() {
            return Err(Error::Invalid(format!("l0 = {} is not a half-integer", fmt_q(&l0))));
        }
        let gap = l1.abs() - l0.abs();
        if !gap.is_integer() || !gap.is_positive() {
            return Err(Error::Invalid(format!(
                "label ({}, {}) is infinite-dimensional: |l1| − |l0| must be a positive integer",
                fmt_q(&l0),
                fmt_q(&l1)
            )));
        }
        Ok(RepLabel { l0, l1 })
    }

    /// Weights `l = |l0|, |l0|+1, …, |l1|−1` in ascending order.
    pub fn weights(&self) -> Vec<Q> {
        let mut out = Vec::new();
        let mut l = self.l0.abs();
        while l < self.l1.abs() {
            out.push(l.clone());
            l += q(1);
        }
        out
    }

    /// `Σ (2l+1)` over the weights.
    pub fn dim(&self) -> usize {
        self.weights().iter().map(|l| (l * q(2) + q(1)).to_integer().try_into().unwrap_or(0usize)).sum()
    }

    /// All labels with `0 ≤ |l0|`, `|l1| ≤ max_l1` and both signs of `l0`.
    pub fn enumerate(max_dim: usize) -> Vec<RepLabel> {
        let mut out = Vec::new();
        for twice_l0 in -8i64..=8 {
            for twice_l1 in 1i64..=12 {
                if (twice_l1 - twice_l0.abs()) % 2 != 0 {
                    continue;
                }
                if let Ok(label) = RepLabel::new(qr(twice_l0, 2), qr(twice_l1, 2)) {
                    if label.dim() <= max_dim {
                        out.push(label);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for RepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", fmt_q(&self.l0), fmt_q(&self.l1))
    }
}

/// `√x` for `x ≥ 0`, and `i·√(−x)` for `x < 0`.
fn complex_sqrt(x: &Q) -> Surd {
    if x.is_negative() {
        Surd::sqrt(&-x).expect("small radicand").scale(&Cq::i())
    } else {
        Surd::sqrt(x).expect("small radicand")
    }
}

/// Coefficients `A_l = i·l0·l1 / (l(l+1))` and
/// `C_l = (i/l)·√((l²−l0²)(l²−l1²)/(4l²−1))`; both are `0` at `l = 0`, and
/// `C_l = 0` whenever `l² = l0²` or `l² = l1²`.
pub fn gn_coefficients(l: &Q, l0: &Q, l1: &Q) -> (Surd, Surd) {
    if Zero::is_zero(l) {
        return (Surd::zero(), Surd::zero());
    }
    let l2 = l * l;
    let a = Surd::from_cq(Cq::new(q(0), l0 * l1 / (l * (l + q(1)))));
    let num = (&l2 - l0 * l0) * (&l2 - l1 * l1);
    if Zero::is_zero(&num) {
        return (a, Surd::zero());
    }
    let x = num / (&l2 * q(4) - q(1));
    let c = complex_sqrt(&x).scale(&Cq::new(q(0), l.recip()));
    (a, c)
}

/// The six generators of the Lie algebra with the derived rising/lowering
/// combinations.
#[derive(Clone, Debug)]
pub struct InfinitesimalSet<T> {
    pub a23: Mat<T>,
    pub a13: Mat<T>,
    pub a12: Mat<T>,
    pub b1: Mat<T>,
    pub b2: Mat<T>,
    pub b3: Mat<T>,
}

/// Names of the twelve operators in [`InfinitesimalSet::all`] order.
pub const OPERATOR_NAMES: [&str; 12] = ["A23", "A13", "A12", "B1", "B2", "B3", "H+", "H-", "H3", "F+", "F-", "F3"];

impl<T: Entry> InfinitesimalSet<T> {
    fn i() -> T {
        T::imag_unit().expect("complex entries")
    }

    /// `H± = iA23 ∓ A13`, `H3 = iA12`.
    pub fn h(&self) -> [Mat<T>; 3] {
        let ia23 = self.a23.scale(&Self::i());
        [ia23.sub(&self.a13), ia23.add(&self.a13), self.a12.scale(&Self::i())]
    }

    /// `F± = iB1 ∓ B2`, `F3 = iB3`.
    pub fn f(&self) -> [Mat<T>; 3] {
        let ib1 = self.b1.scale(&Self::i());
        [ib1.sub(&self.b2), ib1.add(&self.b2), self.b3.scale(&Self::i())]
    }

    /// `A23, A13, A12, B1, B2, B3, H+, H−, H3, F+, F−, F3`.
    pub fn all(&self) -> Vec<Mat<T>> {
        let mut v = vec![self.a23.clone(), self.a13.clone(), self.a12.clone(), self.b1.clone(), self.b2.clone(), self.b3.clone()];
        v.extend(self.h());
        v.extend(self.f());
        v
    }

    pub fn dim(&self) -> usize {
        self.a12.rows()
    }
}

/// One checked Lie-bracket identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub holds: bool,
}

fn bracket<T: Entry>(x: &Mat<T>, y: &Mat<T>) -> Mat<T> {
    x.commutator(y)
}

fn check<T: Entry>(name: &str, lhs: Mat<T>, rhs: Mat<T>) -> RelationCheck {
    RelationCheck { relation: name.to_string(), holds: lhs == rhs }
}

/// The fifteen brackets of the Lie algebra.
pub fn bcommut_checks<T: Entry>(s: &InfinitesimalSet<T>) -> Vec<RelationCheck> {
    let z = Mat::zeros(s.dim(), s.dim());
    vec![
        check("[A23,A13] = A12", bracket(&s.a23, &s.a13), s.a12.clone()),
        check("[A13,A12] = A23", bracket(&s.a13, &s.a12), s.a23.clone()),
        check("[A12,A23] = A13", bracket(&s.a12, &s.a23), s.a13.clone()),
        check("[B1,B2] = -A12", bracket(&s.b1, &s.b2), s.a12.neg()),
        check("[B2,B3] = A23", bracket(&s.b2, &s.b3), s.a23.clone()),
        check("[B3,B1] = A13", bracket(&s.b3, &s.b1), s.a13.clone()),
        check("[A23,B1] = 0", bracket(&s.a23, &s.b1), z.clone()),
        check("[A13,B2] = 0", bracket(&s.a13, &s.b2), z.clone()),
        check("[A12,B3] = 0", bracket(&s.a12, &s.b3), z),
        check("[A23,B2] = -B3", bracket(&s.a23, &s.b2), s.b3.neg()),
        check("[A23,B3] = B2", bracket(&s.a23, &s.b3), s.b2.clone()),
        check("[A13,B3] = -B1", bracket(&s.a13, &s.b3), s.b1.neg()),
        check("[A13,B1] = B3", bracket(&s.a13, &s.b1), s.b3.clone()),
        check("[A12,B1] = B2", bracket(&s.a12, &s.b1), s.b2.clone()),
        check("[A12,B2] = -B1", bracket(&s.a12, &s.b2), s.b1.neg()),
    ]
}

/// The rotation subalgebra brackets alone (real representations, `B = 0`).
pub fn bcommut3_checks<T: Entry>(s: &InfinitesimalSet<T>) -> Vec<RelationCheck> {
    bcommut_checks(s).into_iter().take(3).collect()
}

/// The fifteen brackets of the rising/lowering combinations.
pub fn bcommut2_checks<T: Entry>(s: &InfinitesimalSet<T>) -> Vec<RelationCheck> {
    let [hp, hm, h3] = s.h();
    let [fp, fm, f3] = s.f();
    let z = Mat::zeros(s.dim(), s.dim());
    let two = T::from_i64(2);
    vec![
        check("[H+,H3] = -H+", bracket(&hp, &h3), hp.neg()),
        check("[H-,H3] = H-", bracket(&hm, &h3), hm.clone()),
        check("[H+,H-] = 2H3", bracket(&hp, &hm), h3.scale(&two)),
        check("[H+,F+] = 0", bracket(&hp, &fp), z.clone()),
        check("[H-,F-] = 0", bracket(&hm, &fm), z.clone()),
        check("[H3,F3] = 0", bracket(&h3, &f3), z),
        check("[F+,F3] = -H+", bracket(&fp, &f3), hp.neg()),
        check("[F-,F3] = H-", bracket(&fm, &f3), hm.clone()),
        check("[F+,F-] = -2H3", bracket(&fp, &fm), h3.scale(&two).neg()),
        check("[H+,F3] = F+", bracket(&hp, &f3), fp.clone()),
        check("[H-,F3] = -F-", bracket(&hm, &f3), fm.neg()),
        check("[H-,F+] = 2F3", bracket(&hm, &fp), f3.scale(&two)),
        check("[H+,F-] = -2F3", bracket(&hp, &fm), f3.scale(&two).neg()),
        check("[F+,H3] = -F+", bracket(&fp, &h3), fp.neg()),
        check("[F-,H3] = F-", bracket(&fm, &h3), fm.clone()),
    ]
}

/// Block operators of the label, basis ordered by ascending `l` and, inside a
/// block, ascending `m = −l … l`.
///
/// Built from the Gel'fand–Naimark action on `ξ_{l,m}`. The hyperbolic
/// generator `B3` is taken with the opposite overall sign to the printed
/// action formula, which is what the bracket relations (and the printed
/// fundamental-representation matrices) require in this basis order.
pub fn build_block_ops(label: &RepLabel) -> Result<InfinitesimalSet<Surd>> {
    let weights = label.weights();
    let mut index: Vec<(Q, Q)> = Vec::new();
    for l in &weights {
        let mut m = -l.clone();
        while &m <= l {
            index.push((l.clone(), m.clone()));
            m += q(1);
        }
    }
    let dim = index.len();
    let pos = |l: &Q, m: &Q| index.iter().position(|(a, b)| a == l && b == m);
    let (l0, l1) = (&label.l0, &label.l1);
    let coeff = |l: &Q| gn_coefficients(l, l0, l1);
    let sq = |x: Q| complex_sqrt(&x);
    let half = Cq::real(qr(1, 2));
    let ihalf = Cq::new(q(0), qr(1, 2));
    let i = Cq::i();
    let one = q(1);

    let mut ops: Vec<Mat<Surd>> = (0..6).map(|_| Mat::zeros(dim, dim)).collect();
    for (col, (l, m)) in index.iter().enumerate() {
        let (al, cl) = coeff(l);
        let (_, cl1) = coeff(&(l + &one));
        let mut add = |op: usize, tl: Q, tm: Q, v: Surd| {
            if v.is_zero() {
                return;
            }
            if let Some(row) = pos(&tl, &tm) {
                let cur = ops[op].get(row, col).clone();
                ops[op].set(row, col, cur.add(&v));
            }
        };
        let (lp, lm) = (l + &one, l - &one);
        let (mp, mm) = (m + &one, m - &one);
        // A23
        add(0, l.clone(), mp.clone(), sq((l + m + &one) * (l - m)).scale(&ihalf.neg()));
        add(0, l.clone(), mm.clone(), sq((l + m) * (l - m + &one)).scale(&ihalf.neg()));
        // A13
        add(1, l.clone(), mm.clone(), sq((l + m) * (l - m + &one)).scale(&half));
        add(1, l.clone(), mp.clone(), sq((l + m + &one) * (l - m)).scale(&half.neg()));
        // A12
        add(2, l.clone(), m.clone(), Surd::from_cq(Cq::new(q(0), -m.clone())));
        // B1
        add(3, lm.clone(), mp.clone(), cl.mul(&sq((l - m) * (l - m - &one))).scale(&ihalf.neg()));
        add(3, l.clone(), mp.clone(), al.mul(&sq((l - m) * (l + m + &one))).scale(&ihalf));
        add(3, lp.clone(), mp.clone(), cl1.mul(&sq((l + m + &one) * (l + m + q(2)))).scale(&ihalf.neg()));
        add(3, lm.clone(), mm.clone(), cl.mul(&sq((l + m) * (l + m - &one))).scale(&ihalf));
        add(3, l.clone(), mm.clone(), al.mul(&sq((l + m) * (l - m + &one))).scale(&ihalf));
        add(3, lp.clone(), mm.clone(), cl1.mul(&sq((l - m + &one) * (l - m + q(2)))).scale(&ihalf));
        // B2
        add(4, lm.clone(), mm.clone(), cl.mul(&sq((l + m) * (l + m - &one))).scale(&half.neg()));
        add(4, l.clone(), mm.clone(), al.mul(&sq((l + m) * (l - m + &one))).scale(&half.neg()));
        add(4, lp.clone(), mm.clone(), cl1.mul(&sq((l - m + &one) * (l - m + q(2)))).scale(&half.neg()));
        add(4, lm.clone(), mp.clone(), cl.mul(&sq((l - m) * (l - m - &one))).scale(&half.neg()));
        add(4, l.clone(), mp.clone(), al.mul(&sq((l - m) * (l + m + &one))).scale(&half));
        add(4, lp.clone(), mp.clone(), cl1.mul(&sq((l + m + &one) * (l + m + q(2)))).scale(&half.neg()));
        // B3, with the overall sign reversed (see above)
        add(5, lm.clone(), m.clone(), cl.mul(&sq(l * l - m * m)).scale(&i));
        add(5, l.clone(), m.clone(), al.scale(&Cq::new(q(0), -m.clone())));
        add(5, lp.clone(), m.clone(), cl1.mul(&sq(&lp * &lp - m * m)).scale(&i.neg()));
    }
    let mut it = ops.into_iter();
    let mut next = || it.next().expect("six operators");
    Ok(InfinitesimalSet { a23: next(), a13: next(), a12: next(), b1: next(), b2: next(), b3: next() })
}

/// Operators modelled by spin-basis matrices `E_c, E_a, E_b`:
/// `A23 = −½E_aE_b`, `A13 = −½E_cE_b`, `A12 = ½E_cE_a`,
/// `B = ∓½(E_c, −E_a, E_b)` (lower sign for the conjugated representation).
///
/// The customary labelling takes `c < a < b`; the bracket relations only use
/// that the three matrices anticommute pairwise, so any three distinct
/// indices are accepted.
pub fn model_ops(e: &[Mat<Cq>], (c, a, b): (usize, usize, usize), conjugated: bool) -> Result<InfinitesimalSet<Cq>> {
    let in_range = |i: usize| (1..=e.len()).contains(&i);
    if !(in_range(c) && in_range(a) && in_range(b) && c != a && a != b && c != b) {
        return Err(Error::Invalid(format!(
            "index triple (c,a,b) = ({c},{a},{b}) needs three distinct indices in 1..={}",
            e.len()
        )));
    }
    let (ec, ea, eb) = (&e[c - 1], &e[a - 1], &e[b - 1]);
    let half = Cq::real(qr(1, 2));
    let s = if conjugated { half.clone() } else { half.neg() };
    Ok(InfinitesimalSet {
        a23: ea.mul(eb).scale(&half.neg()),
        a13: ec.mul(eb).scale(&half.neg()),
        a12: ec.mul(ea).scale(&half),
        b1: ec.scale(&s),
        b2: ea.scale(&s.neg()),
        b3: eb.scale(&s),
    })
}

/// Rotation operators for three spin-basis matrices of square `−I`:
/// `A23 = ½E_aE_b`, `A13 = ½E_cE_b`, `A12 = −½E_cE_a`, with `B = 0`.
pub fn real_model_ops(e: &[Mat<Cq>], (c, a, b): (usize, usize, usize)) -> Result<InfinitesimalSet<Cq>> {
    let mut ops = model_ops(e, (c, a, b), false)?;
    ops.a23 = ops.a23.neg();
    ops.a13 = ops.a13.neg();
    ops.a12 = ops.a12.neg();
    let z = Mat::zeros(ops.dim(), ops.dim());
    ops.b1 = z.clone();
    ops.b2 = z.clone();
    ops.b3 = z;
    Ok(ops)
}

/// Operators of `C_n` in the tensor representation (`n` even). For `n = 2`
/// the index `b = 3` selects the third Pauli matrix.
pub fn tensor_model_ops(n: usize, triple: (usize, usize, usize), conjugated: bool) -> Result<InfinitesimalSet<Cq>> {
    if n % 2 == 1 || n == 0 {
        return Err(Error::OddDimension(n));
    }
    let extra = [triple.0, triple.1, triple.2].contains(&(n + 1));
    let rep = tensor_pauli_rep(n / 2, extra)?;
    model_ops(&rep.generators, triple, conjugated)
}

/// Relation between two operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Commute,
    Anticommute,
    Neither,
}

impl Verdict {
    pub fn of<T: Entry>(x: &Mat<T>, y: &Mat<T>) -> Verdict {
        match x.commutation_sign(y) {
            1 => Verdict::Commute,
            -1 => Verdict::Anticommute,
            _ => Verdict::Neither,
        }
    }

    fn from_sign(s: i8) -> Verdict {
        match s {
            1 => Verdict::Commute,
            -1 => Verdict::Anticommute,
            _ => Verdict::Neither,
        }
    }

    fn symbol(self) -> char {
        match self {
            Verdict::Commute => '+',
            Verdict::Anticommute => '-',
            Verdict::Neither => '0',
        }
    }
}

/// Verdicts against the twelve operators, in [`OPERATOR_NAMES`] order.
pub fn verdicts<T: Entry>(x: &Mat<T>, ops: &InfinitesimalSet<T>) -> Vec<Verdict> {
    ops.all().iter().map(|o| Verdict::of(x, o)).collect()
}

/// Compact `+`/`-`/`0` string of verdicts.
pub fn verdict_string(v: &[Verdict]) -> String {
    v.iter().map(|x| x.symbol()).collect()
}

/// A relation family: the verdict patterns of `E` and `C` against
/// `A23, A13, A12, B1, B2, B3`, with the `H`/`F` patterns when they exist.
#[derive(Clone, Copy, Debug)]
pub struct Family {
    pub tag: &'static str,
    pub e: &'static str,
    pub c: &'static str,
    /// `(tag, E pattern, C pattern)` against `H+, H−, H3, F+, F−, F3`.
    pub hf: Option<(&'static str, &'static str, &'static str)>,
}

/// The eight families, keyed by how `E_a, E_b, E_c` sit in `E`.
pub const FAMILIES: [Family; 8] = [
    Family { tag: "bT1-bT2", e: "+++---", c: "++++++", hf: Some(("bT3-bT4", "+++---", "++++++")) },
    Family { tag: "bT5-bT6", e: "++++++", c: "+++---", hf: Some(("bT7-bT8", "++++++", "+++---")) },
    Family { tag: "bT9-bT10", e: "+--+--", c: "+---++", hf: None },
    Family { tag: "bT11-bT12", e: "+---++", c: "+--+--", hf: None },
    Family { tag: "bT13-bT14", e: "--+++-", c: "--+--+", hf: Some(("bT15-bT16", "--+++-", "--+--+")) },
    Family { tag: "bT17-bT18", e: "-+-+-+", c: "-+--+-", hf: None },
    Family { tag: "bT19-bT20", e: "-+--+-", c: "-+-+-+", hf: None },
    Family { tag: "bT21-bT22", e: "--+--+", c: "--+++-", hf: Some(("bT23-bT24", "--+--+", "--+++-")) },
];

/// Family predicted by parity alone: a product of `k` anticommuting
/// generators commutes with one of its own factors iff `k` is odd and with
/// any other generator iff `k` is even. `C ∝ E·W` is the product of the
/// complementary generators. Membership is given for `(E_a, E_b, E_c)` in `E`.
pub fn predicted_family(n: usize, e_len: usize, (a_in, b_in, c_in): (bool, bool, bool)) -> Option<&'static str> {
    let sign = |inside: bool, k: usize| if (k - usize::from(inside)) % 2 == 0 { 1i8 } else { -1 };
    let line = |(a, b, c): (bool, bool, bool), k: usize| {
        let (sa, sb, sc) = (sign(a, k), sign(b, k), sign(c, k));
        [sa * sb, sc * sb, sc * sa, sc, sa, sb].iter().map(|&s| Verdict::from_sign(s).symbol()).collect::<String>()
    };
    let e = line((a_in, b_in, c_in), e_len);
    let c = line((!a_in, !b_in, !c_in), n - e_len);
    FAMILIES.iter().find(|f| f.e == e && f.c == c).map(|f| f.tag)
}

/// Audit row for one index triple.
#[derive(Clone, Debug, Serialize)]
pub struct AuditRow {
    pub triple: (usize, usize, usize),
    /// Membership of `(E_a, E_b, E_c)` in `E`.
    pub membership: (bool, bool, bool),
    pub w: String,
    pub e: String,
    pub c: String,
    pub w_t0: bool,
    pub family: Option<&'static str>,
    pub hf_family: Option<&'static str>,
    pub predicted: Option<&'static str>,
    /// `H`/`F` verdicts that are neither commuting nor anticommuting.
    pub hf_neither: usize,
    pub matches: bool,
}

/// Summary of all triples sharing one membership pattern.
#[derive(Clone, Debug, Serialize)]
pub struct PatternSummary {
    /// Membership of `(E_a, E_b, E_c)` in `E`.
    pub membership: (bool, bool, bool),
    /// Number of index triples realising the pattern (0: not realisable).
    pub triples: usize,
    /// Distinct observed families over those triples.
    pub observed: Vec<Option<&'static str>>,
    pub predicted: Option<&'static str>,
    /// Realised, a single observed family, equal to the prediction.
    pub consistent: bool,
}

/// Full audit for `C_n`.
#[derive(Clone, Debug, Serialize)]
pub struct PermutationAudit {
    pub n: usize,
    pub group: String,
    pub e_factors: Vec<usize>,
    pub rows: Vec<AuditRow>,
    pub patterns: Vec<PatternSummary>,
    /// Every realised pattern is consistent and `W` obeys the parity
    /// relations in every row.
    pub consistent: bool,
    /// `W` fails the parity relations somewhere (expected only for `n = 2`).
    pub anomaly: bool,
}

const T0: &str = "+++---+++---";

/// Brute-force permutation relations of `W`, `E`, `C` of `C_n` with the
/// operator models, over every ordered triple of distinct generator indices.
/// For `n = 2` the single triple `(c,a,b) = (1,2,3)` uses the third Pauli
/// matrix.
pub fn symmetry_permutation_audit(n: usize) -> Result<PermutationAudit> {
    if n % 2 == 1 || n == 0 {
        return Err(Error::OddDimension(n));
    }
    if n > 10 {
        return Err(Error::SizeGuard { n, max: 10 });
    }
    let rep = tensor_pauli_rep(n / 2, false)?;
    let data = build_wec_complex(&rep)?;
    let mut triples = Vec::new();
    if n == 2 {
        triples.push((1, 2, 3));
    } else {
        for c in 1..=n {
            for a in 1..=n {
                for b in 1..=n {
                    if c != a && a != b && c != b {
                        triples.push((c, a, b));
                    }
                }
            }
        }
    }
    let rows = triples.into_iter().map(|t| audit_row(n, &data, t)).collect::<Result<Vec<_>>>()?;
    let mut patterns = Vec::new();
    for bits in 0..8u8 {
        let membership = (bits & 4 != 0, bits & 2 != 0, bits & 1 != 0);
        let group: Vec<&AuditRow> = rows.iter().filter(|r| r.membership == membership).collect();
        let mut observed: Vec<Option<&'static str>> = Vec::new();
        for r in &group {
            if !observed.contains(&r.family) {
                observed.push(r.family);
            }
        }
        let predicted = if n == 2 { None } else { predicted_family(n, data.e_factors().len(), membership) };
        let consistent = !group.is_empty() && group.iter().all(|r| r.matches);
        patterns.push(PatternSummary { membership, triples: group.len(), observed, predicted, consistent });
    }
    let consistent = rows.iter().all(|r| r.w_t0) && patterns.iter().filter(|p| p.triples > 0).all(|p| p.consistent);
    let anomaly = rows.iter().any(|r| !r.w_t0);
    Ok(PermutationAudit { n, group: data.group.to_string(), e_factors: data.e_factors().to_vec(), rows, patterns, consistent, anomaly })
}

fn audit_row(n: usize, data: &ReflectionData<Cq>, t: (usize, usize, usize)) -> Result<AuditRow> {
    let ops = tensor_model_ops(n, t, false)?;
    if !bcommut_checks(&ops).iter().all(|r| r.holds) {
        return Err(Error::Consistency(format!("operator model {t:?} violates the bracket relations")));
    }
    let (c, a, b) = t;
    let ef = data.e_factors();
    let membership = (ef.contains(&a), ef.contains(&b), ef.contains(&c));
    let w = verdict_string(&verdicts(&data.w, &ops));
    let e = verdict_string(&verdicts(&data.e, &ops));
    let cc = verdict_string(&verdicts(&data.c, &ops));
    let fam = FAMILIES.iter().find(|f| e[..6] == *f.e && cc[..6] == *f.c);
    let hf_family = fam.and_then(|f| f.hf).filter(|(_, he, hc)| e[6..] == **he && cc[6..] == **hc).map(|h| h.0);
    let hf_neither = e[6..].matches('0').count() + cc[6..].matches('0').count();
    let predicted = if n == 2 { None } else { predicted_family(n, ef.len(), membership) };
    let family = fam.map(|f| f.tag);
    // A family with H/F relations must have them hold exactly.
    let hf_ok = fam.map_or(true, |f| f.hf.is_none() || hf_family.is_some());
    Ok(AuditRow {
        triple: t,
        membership,
        w_t0: w == T0,
        w,
        e,
        c: cc,
        family,
        hf_family,
        predicted,
        hf_neither,
        matches: family.is_some() && family == predicted && hf_ok,
    })
}

/// Row of the real-representation audit.
#[derive(Clone, Debug, Serialize)]
pub struct RealAuditRow {
    pub triple: (usize, usize, usize),
    /// `+1` for the model with squares `+I`, `−1` for squares `−I`.
    pub square: i8,
    pub membership: (bool, bool, bool),
    pub w: String,
    pub e: String,
    pub c: String,
    /// Real relation family with `E` and `C` sharing the pattern.
    pub family: Option<&'static str>,
}

/// Real relation families: one common pattern of `E` and `C` against
/// `A23, A13, A12`. The last two are the unlabelled relations listed after
/// the second one.
pub const REAL_FAMILIES: [(&str, &str); 4] = [("TR11", "+++"), ("TR12", "+--"), ("TR12+1", "--+"), ("TR12+2", "-+-")];

/// Real audit: rotation operators only (`B = 0`).
#[derive(Clone, Debug, Serialize)]
pub struct RealAudit {
    pub sig: Signature,
    pub ring_type: usize,
    pub group: String,
    pub e_factors: Vec<usize>,
    pub rows: Vec<RealAuditRow>,
    /// All triples satisfy the rotation brackets.
    pub brackets_hold: bool,
    /// `W`, `E`, `C` commute with every rotation operator in every row.
    pub all_commute: bool,
    /// Every row matches one real family and `W` commutes throughout.
    pub families_matched: bool,
}

/// Permutation relations of `W`, `E`, `C` of a real algebra (even `n`) with
/// the rotation operators built from same-square triples.
pub fn real_permutation_audit(sig: Signature) -> Result<RealAudit> {
    let n = sig.n();
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    if n > 8 {
        return Err(Error::SizeGuard { n, max: 8 });
    }
    let f = find_primitive_idempotent(sig)?;
    let gens = spinor_k_repr(sig, &f, None)?.complex_generators();
    let data = build_wec(&gens)?;
    let size = gens[0].rows();
    let id = Mat::<Cq>::identity(size);
    let mut rows = Vec::new();
    let mut brackets_hold = true;
    for c in 1..=n {
        for a in c + 1..=n {
            for b in a + 1..=n {
                let sq: Vec<Mat<Cq>> = [c, a, b].iter().map(|&i| gens[i - 1].mul(&gens[i - 1])).collect();
                let square = if sq.iter().all(|m| *m == id) {
                    1
                } else if sq.iter().all(|m| *m == id.neg()) {
                    -1
                } else {
                    continue;
                };
                let ops = if square > 0 {
                    let mut o = model_ops(&gens, (c, a, b), false)?;
                    let z = Mat::zeros(size, size);
                    o.b1 = z.clone();
                    o.b2 = z.clone();
                    o.b3 = z;
                    o
                } else {
                    real_model_ops(&gens, (c, a, b))?
                };
                brackets_hold &= bcommut3_checks(&ops).iter().all(|r| r.holds);
                let rot = |m: &Mat<Cq>| verdict_string(&verdicts(m, &ops)[..3]);
                let ef = data.e_factors();
                rows.push(RealAuditRow {
                    triple: (c, a, b),
                    square,
                    membership: (ef.contains(&a), ef.contains(&b), ef.contains(&c)),
                    w: rot(&data.w),
                    e: rot(&data.e),
                    c: rot(&data.c),
                    family: None,
                });
                let row = rows.last_mut().expect("just pushed");
                row.family = REAL_FAMILIES.iter().find(|(_, pat)| row.e == *pat && row.c == *pat).map(|f| f.0);
            }
        }
    }
    let all_commute = rows.iter().all(|r| r.w == "+++" && r.e == "+++" && r.c == "+++");
    let families_matched = rows.iter().all(|r| r.w == "+++" && r.family.is_some());
    Ok(RealAudit {
        sig,
        ring_type: sig.mod8(),
        group: data.group.to_string(),
        e_factors: data.e_factors().to_vec(),
        rows,
        brackets_hold,
        all_commute,
        families_matched,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cq(m: &Mat<Surd>) -> Mat<Cq> {
        m.map(|x| x.as_cq().expect("rational entry"))
    }

    #[test]
    fn fundamental_matches_printed() {
        let ops = build_block_ops(&RepLabel::new(qr(1, 2), qr(3, 2)).unwrap()).unwrap();
        let h = Cq::real(qr(1, 2));
        assert_eq!(cq(&ops.b3), Mat::diag(vec![h.neg(), h.clone()]));
        assert_eq!(cq(&ops.a23), Mat::<Cq>::from_ints(&[&[0, 1], &[1, 0]]).scale(&Cq::new(q(0), qr(-1, 2))));
        assert!(bcommut_checks(&ops).iter().all(|r| r.holds));
    }

    #[test]
    fn brackets_hold_for_small_labels() {
        for label in RepLabel::enumerate(16) {
            let ops = build_block_ops(&label).unwrap();
            for r in bcommut_checks(&ops).into_iter().chain(bcommut2_checks(&ops)) {
                assert!(r.holds, "{label}: {}", r.relation);
            }
        }
    }

    #[test]
    fn pauli_model_equals_block_operators() {
        for (l0, conj) in [(qr(1, 2), false), (qr(-1, 2), true)] {
            let block = build_block_ops(&RepLabel::new(l0, qr(3, 2)).unwrap()).unwrap();
            let model = tensor_model_ops(2, (1, 2, 3), conj).unwrap();
            for (x, y) in block.all().iter().zip(model.all()) {
                assert_eq!(cq(x), y);
            }
        }
    }

    #[test]
    fn audits_consistent_and_n2_anomalous() {
        for n in [4, 6] {
            assert!(symmetry_permutation_audit(n).unwrap().consistent, "n = {n}");
        }
        let a2 = symmetry_permutation_audit(2).unwrap();
        assert!(a2.anomaly && !a2.consistent);
    }

    #[test]
    fn real_types_commute() {
        for (p, q) in [(1, 1), (3, 1), (2, 2), (4, 2), (0, 6), (3, 3)] {
            let a = real_permutation_audit(Signature::real(p, q)).unwrap();
            assert!(a.brackets_hold && a.all_commute, "Cl({p},{q})");
        }
        for (p, q) in [(1, 3), (4, 0), (5, 1), (6, 0)] {
            assert!(real_permutation_audit(Signature::real(p, q)).unwrap().families_matched, "Cl({p},{q})");
        }
    }
}
