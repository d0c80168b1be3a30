//! Acceptance suite: fourteen criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the verdict lines reach stdout.
//! A criterion may fail only with a failure listed in [`KNOWN_FAILURES`];
//! any other failure, or a known failure that no longer occurs, makes the
//! process exit non-zero.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use cliffkit::algebra::{commutes_with_generators, mv_mul, volume_element, volume_square_sign};
use cliffkit::classify::{abs_shift_check, algebra_class, bw_compose, periodic_table};
use cliffkit::field::{
    dirac_basis, gamma5, gamma_basis, helicity_projectors, helicity_split, ideal_projection, is_single_column, nabla_a,
    nabla_a_componentwise, split_pattern, DHSpinor,
};
use cliffkit::lorentz::{bcommut2_checks, bcommut_checks, build_block_ops, symmetry_permutation_audit, RepLabel};
use cliffkit::num::{q, qr, Entry};
use cliffkit::quotient::{
    build_pi, central_idempotents, epsilon_map, pi_rule_sign, pi_w_commutation, quotient_class, real_form_basis,
    transfer_report, QuotientClass, Transform,
};
use cliffkit::reflect::{
    build_wec, compare_pin, complex_aut_type, many_body_symmetry, pin_cover, reflection_of, signed_closure,
    tautr_case_table, Abc,
};
use cliffkit::spinor::{
    check_primitive, enumerate_primitive_idempotents, find_primitive_idempotent, idempotent_k, spinor_k_repr,
    tensor_pauli_rep, Idempotent, SignedBlade,
};
use cliffkit::vee::{build_vee_group, identify_group, vee_center_bruteforce, vee_group_id, FiniteGroup, GroupId};
use cliffkit::{Blade, Cq, GroundField, Mat, Multivector, Signature, Q};

/// Failures that are expected and analysed: `(criterion, detail prefix)`.
const KNOWN_FAILURES: &[(usize, &str)] = &[
    // The deterministic idempotent search picks other (equally valid)
    // factor sets than the printed ones; the printed sets are validated
    // separately and pass.
    (4, "Cl(4,1): found idempotent"),
    (4, "Cl(0,8): found idempotent"),
    (4, "Cl(8,0): found idempotent"),
];

struct Criterion {
    id: usize,
    name: &'static str,
    cases: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Criterion {
    fn new(id: usize, name: &'static str) -> Self {
        Criterion { id, name, cases: 0, failures: Vec::new(), notes: Vec::new() }
    }

    fn expect(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(detail());
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

fn cint(n: i64) -> Cq {
    Cq::int(n)
}

fn real_sigs(max_n: usize) -> Vec<Signature> {
    (0..=max_n).flat_map(|n| (0..=n).map(move |p| Signature::real(p, n - p))).collect()
}

fn blade(idx: &[usize]) -> Blade {
    Blade::from_indices(idx).expect("valid blade")
}

fn factor_set(f: &Idempotent) -> BTreeSet<SignedBlade> {
    f.factors.iter().copied().collect()
}

fn show_factors(f: &BTreeSet<SignedBlade>) -> String {
    f.iter().map(|(s, b)| format!("{}{b}", if *s < 0 { "-" } else { "" })).collect::<Vec<_>>().join(", ")
}

fn fixture(name: &str) -> String {
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

// ---------------------------------------------------------------- 1

fn periodic(c: &mut Criterion) {
    let text = fixture("periodic_table.txt");
    let expected: Vec<Vec<String>> = text
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| l.split_whitespace().map(str::to_string).collect())
        .collect();
    c.expect(expected.len() == 8 && expected.iter().all(|r| r.len() == 8), || "fixture is not 8×8".into());
    let grid = periodic_table(7, 7);
    for (qq, row) in expected.iter().enumerate() {
        for (p, want) in row.iter().enumerate() {
            let got = grid[qq][p].matrix_form.to_string();
            c.expect(&got == want, || format!("Cl({p},{qq}): {got} vs printed {want}"));
        }
    }
}

// ---------------------------------------------------------------- 2

fn volume_law(c: &mut Criterion) {
    for sig in real_sigs(10) {
        let w = volume_element(sig);
        let sq = mv_mul(&w, &w).expect("same algebra");
        let direct = if sq == Multivector::one(sig) {
            1
        } else if sq == Multivector::one(sig).neg() {
            -1
        } else {
            0
        };
        let n = sig.n();
        let formula = if (n * n.saturating_sub(1) / 2 + sig.q) % 2 == 0 { 1 } else { -1 };
        let rule = volume_square_sign(sig);
        c.expect(rule == direct && rule == formula, || format!("{sig}: rule {rule}, product {direct}, formula {formula}"));
    }
}

// ---------------------------------------------------------------- 3

fn vee_groups(c: &mut Criterion) {
    let cases = [
        ((1, 0), GroupId::Z2xZ2, "vee_cl10.txt"),
        ((0, 1), GroupId::Z4, "vee_cl01.txt"),
        ((2, 0), GroupId::D4, "vee_cl20.txt"),
        ((0, 2), GroupId::Q4, "vee_cl02.txt"),
    ];
    for ((p, qq), id, file) in cases {
        let v = build_vee_group(Signature::real(p, qq)).expect("small vee group");
        let got = vee_group_id(&v).expect("identifiable");
        c.expect(got == id, || format!("Cl({p},{qq}): {got} vs {id}"));
        let table = v.table_text();
        let want = fixture(file);
        c.expect(table == want, || format!("Cl({p},{qq}): table differs\n{table}\nvs printed\n{want}"));
    }
    for sig in real_sigs(6).into_iter().filter(|s| s.n() > 0) {
        let v = build_vee_group(sig).expect("vee group");
        c.expect(v.order() == 1 << (sig.n() + 1), || format!("{sig}: order {}", v.order()));
        c.expect(v.group.validate().is_ok(), || format!("{sig}: table is not a group"));
        // ω is central for odd n; its square decides Z2×Z2 versus Z4
        let rule = if sig.n() % 2 == 0 {
            GroupId::Z2
        } else if (sig.p as i64 - sig.q as i64).rem_euclid(4) == 1 {
            GroupId::Z2xZ2
        } else {
            GroupId::Z4
        };
        let brute = vee_center_bruteforce(&v).expect("center");
        c.expect(brute == rule, || format!("{sig}: center {brute} vs rule {rule}"));
    }
}

// ---------------------------------------------------------------- 4

fn radon_hurwitz(c: &mut Criterion) {
    let printed: [((usize, usize), usize, Vec<SignedBlade>); 4] = [
        ((1, 3), 1, vec![(1, blade(&[1]))]),
        ((4, 1), 2, vec![(1, blade(&[1, 2, 3, 4])), (1, blade(&[1, 4, 5]))]),
        ((0, 8), 4, vec![(1, blade(&[1, 2, 4, 8])), (1, blade(&[2, 3, 5, 8])), (1, blade(&[3, 4, 6, 8])), (1, blade(&[4, 5, 7, 8]))]),
        ((8, 0), 4, vec![(1, blade(&[1, 2, 4, 8])), (1, blade(&[2, 3, 5, 8])), (1, blade(&[3, 4, 6, 8])), (1, blade(&[4, 5, 7, 8]))]),
    ];
    for ((p, qq), k, factors) in printed {
        let sig = Signature::real(p, qq);
        c.expect(idempotent_k(sig) == k, || format!("{sig}: k = {} vs {k}", idempotent_k(sig)));
        match Idempotent::from_blades(sig, &factors).and_then(|f| check_primitive(&f).map(|_| f)) {
            Ok(_) => c.expect(true, String::new),
            Err(e) => c.expect(false, || format!("{sig}: printed idempotent rejected: {e}")),
        }
        let found = find_primitive_idempotent(sig).expect("primitive idempotent");
        c.expect(found.factors.len() == k, || format!("{sig}: {} factors found", found.factors.len()));
        let want: BTreeSet<SignedBlade> = factors.into_iter().collect();
        let got = factor_set(&found);
        c.expect(got == want, || {
            format!("{sig}: found idempotent {{{}}} differs from printed {{{}}}", show_factors(&got), show_factors(&want))
        });
    }
}

// ---------------------------------------------------------------- 5

fn dirac_fixtures(c: &mut Criterion) {
    let d = build_wec(&dirac_basis().generators).expect("Dirac reflections");
    let w = Mat::<Cq>::from_ints(&[&[0, 0, -1, 0], &[0, 0, 0, -1], &[-1, 0, 0, 0], &[0, -1, 0, 0]]);
    let e = Mat::<Cq>::from_ints(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
    let cm = Mat::<Cq>::from_ints(&[&[0, 0, 0, 1], &[0, 0, -1, 0], &[0, 1, 0, 0], &[-1, 0, 0, 0]]);
    c.expect(d.w == w, || format!("W = {:?}", d.w.to_strings()));
    c.expect(d.e == e, || format!("E = {:?}", d.e.to_strings()));
    c.expect(d.c == cm, || format!("C = {:?}", d.c.to_strings()));
    // rows/columns I, W, E, C; entries (sign, element)
    let printed: [[(i8, usize); 4]; 4] = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (1, 0), (1, 3), (1, 2)],
        [(1, 2), (1, 3), (-1, 0), (-1, 1)],
        [(1, 3), (1, 2), (-1, 1), (-1, 0)],
    ];
    let table = d.sign_table();
    let printed_rows: Vec<Vec<(i8, usize)>> = printed.iter().map(|r| r.to_vec()).collect();
    c.expect(table == printed_rows, || format!("table {table:?}"));
    c.expect(matches!(d.verify_table_against_matrices(), Ok(true)), || "table disagrees with matrices".into());

    // close {±I, ±W, ±E, ±C} under matrix multiplication
    let id = Mat::identity(4);
    let base = [id, d.w.clone(), d.e.clone(), d.c.clone()];
    let elems: Vec<Mat<Cq>> = base.iter().cloned().chain(base.iter().map(Mat::neg)).collect();
    let lookup = |m: &Mat<Cq>| elems.iter().position(|x| x == m);
    let mut rows = Vec::new();
    let mut closed = true;
    for x in &elems {
        let mut row = Vec::new();
        for y in &elems {
            match lookup(&x.mul(y)) {
                Some(k) => row.push(k),
                None => {
                    closed = false;
                    row.push(0);
                }
            }
        }
        rows.push(row);
    }
    c.expect(closed, || "{±I, ±W, ±E, ±C} is not closed".into());
    let from_matrices = identify_group(&FiniteGroup { table: rows }).expect("group");
    let formal = identify_group(&signed_closure(d.signature.0, d.signature.1, d.sigma)).expect("group");
    c.expect(from_matrices == GroupId::Z2xZ4 && formal == GroupId::Z2xZ4, || {
        format!("closure from matrices {from_matrices}, from relations {formal}")
    });
    c.expect(d.cover.cover == GroupId::Z2xZ4 && d.signature == Abc(1, -1, -1), || {
        format!("cover {} signature {}", d.cover.cover, d.signature)
    });
    c.expect(d.group == GroupId::Z4, || format!("group modulo signs {}", d.group));
}

// ---------------------------------------------------------------- 6

fn pin_census(c: &mut Criterion) {
    let q4 = pin_cover(Abc(-1, -1, -1));
    let s31 = Signature::real(3, 1);
    let reps = enumerate_primitive_idempotents(s31).expect("Cl(3,1) idempotents");
    c.note(format!("Cl(3,1): {} primitive idempotents", reps.len()));
    for f in &reps {
        let a = reflection_of(&spinor_k_repr(s31, f, None).expect("rep")).expect("reflections");
        c.expect(a.group == GroupId::Q4modZ2 && a.cover() == q4, || {
            format!("Cl(3,1) {}: {} {}", f.describe(), a.group, a.signature)
        });
    }
    let s13 = Signature::real(1, 3);
    let reps = enumerate_primitive_idempotents(s13).expect("Cl(1,3) idempotents");
    let mut seen = BTreeSet::new();
    for f in &reps {
        let a = reflection_of(&spinor_k_repr(s13, f, None).expect("rep")).expect("reflections");
        let b = f.factors[0].1;
        seen.insert(b);
        if b == blade(&[2, 3, 4]) {
            c.expect(a.group == GroupId::Z4 && a.signature == Abc(-1, 1, -1) && a.cover().cover == GroupId::Z2xZ4, || {
                format!("Cl(1,3) {}: {} {}", f.describe(), a.group, a.signature)
            });
        } else {
            c.expect(a.group == GroupId::Q4modZ2 && a.cover() == q4, || {
                format!("Cl(1,3) {}: {} {}", f.describe(), a.group, a.signature)
            });
        }
    }
    let expected: BTreeSet<Blade> =
        [blade(&[1]), blade(&[1, 2]), blade(&[1, 3]), blade(&[1, 4]), blade(&[2, 3, 4])].into_iter().collect();
    c.expect(seen == expected, || format!("Cl(1,3) idempotent blades {seen:?}"));
    let cmp = compare_pin(s31).expect("compare");
    c.expect(!cmp.isomorphic && cmp.covers_pq != cmp.covers_qp, || format!("compare_pin(3,1) = {cmp:?}"));
    let cmp = compare_pin(Signature::real(2, 2)).expect("compare");
    c.expect(cmp.isomorphic, || format!("compare_pin(2,2) = {cmp:?}"));
}

// ---------------------------------------------------------------- 7

fn complex_types(c: &mut Criterion) {
    for n in [2, 4, 6, 8] {
        let rule = complex_aut_type(n);
        let built = tensor_pauli_rep(n / 2, false).and_then(|r| cliffkit::reflect::build_wec_complex(&r));
        match (rule, built) {
            (Ok(a), Ok(d)) => {
                let (group, sig) =
                    if n % 4 == 0 { (GroupId::Z2xZ2, Abc(1, 1, 1)) } else { (GroupId::Q4modZ2, Abc(-1, -1, -1)) };
                c.expect(a.group == group && a.signature == sig, || format!("C_{n}: rule gives {} {}", a.group, a.signature));
                c.expect(d.group == group && d.signature == sig, || format!("C_{n}: matrices give {} {}", d.group, d.signature));
            }
            (r, b) => c.expect(false, || format!("C_{n}: {:?} / {:?}", r.err(), b.err())),
        }
    }
}

// ---------------------------------------------------------------- 8

fn tautr(c: &mut Criterion) {
    for sig in real_sigs(6).into_iter().filter(|s| s.n() > 0 && matches!(s.mod8(), 0 | 2 | 4 | 6)) {
        let f = find_primitive_idempotent(sig).expect("idempotent");
        let gens = spinor_k_repr(sig, &f, None).expect("rep").complex_generators();
        let d = match build_wec(&gens) {
            Ok(d) => d,
            Err(e) => {
                c.expect(false, || format!("{sig}: {e}"));
                continue;
            }
        };
        for (i, g) in gens.iter().enumerate() {
            let sym = g.transpose() == *g;
            let skew = g.transpose() == g.neg();
            c.expect(sym || skew, || format!("{sig}: generator {} neither symmetric nor skew", i + 1));
            // commut: E commutes with symmetric, anticommutes with skew generators;
            // commut3: C the other way round
            let ce = d.e.commutation_sign(g);
            let cc = d.c.commutation_sign(g);
            let (want_e, want_c) = if sym { (1, -1) } else { (-1, 1) };
            c.expect(ce == want_e && cc == want_c, || format!("{sig}: generator {}: E {ce}, C {cc}", i + 1));
        }
        let m = sig.n() / 2;
        let sign = |k: usize| if (k / 2) % 2 == 0 { 1 } else { -1 };
        let (te, tc) = (sign(m * m.saturating_sub(1)), sign(m * (m + 1)));
        let e_ok = d.e.transpose() == if te > 0 { d.e.clone() } else { d.e.neg() };
        let c_ok = d.c.transpose() == if tc > 0 { d.c.clone() } else { d.c.neg() };
        c.expect(e_ok && c_ok, || format!("{sig}: transposition law with m = {m}"));
        match tautr_case_table(sig, &d.census) {
            Ok(abc) => c.expect(abc == d.signature, || format!("{sig}: matrices {} vs case table {abc}", d.signature)),
            Err(e) => c.expect(false, || format!("{sig}: {e}")),
        }
    }
}

// ---------------------------------------------------------------- 9

fn lorentz_ops(c: &mut Criterion) {
    let label = RepLabel::new(qr(1, 2), qr(3, 2)).expect("label");
    let ops = build_block_ops(&label).expect("operators");
    let cq = |m: &Mat<cliffkit::Surd>| m.map(|x| x.as_cq().expect("rational entry"));
    let half = Cq::real(qr(1, 2));
    let i_half = Cq::new(q(0), qr(1, 2));
    let m = |rows: [[Cq; 2]; 2]| Mat::from_rows(rows.iter().map(|r| r.to_vec()).collect());
    let (z, one) = (cint(0), cint(1));
    let i = Cq::i();
    let printed = [
        ("A23", m([[z.clone(), one.clone()], [one.clone(), z.clone()]]).scale(&i_half.neg()), &ops.a23),
        ("A13", m([[z.clone(), one.clone()], [one.neg(), z.clone()]]).scale(&half), &ops.a13),
        ("A12", m([[i.clone(), z.clone()], [z.clone(), i.neg()]]).scale(&half), &ops.a12),
        ("B1", m([[z.clone(), one.clone()], [one.clone(), z.clone()]]).scale(&half.neg()), &ops.b1),
        ("B2", m([[z.clone(), i.neg()], [i.clone(), z.clone()]]).scale(&half), &ops.b2),
        ("B3", m([[one.neg(), z.clone()], [z.clone(), one.clone()]]).scale(&half), &ops.b3),
    ];
    for (name, want, got) in printed {
        let got = cq(got);
        c.expect(got == want, || format!("{name} = {:?}", got.to_strings()));
    }
    let labels = RepLabel::enumerate(16);
    c.note(format!("{} labels with dim ≤ 16", labels.len()));
    for label in labels {
        let ops = build_block_ops(&label).expect("operators");
        for r in bcommut_checks(&ops).into_iter().chain(bcommut2_checks(&ops)) {
            c.expect(r.holds, || format!("{label}: {}", r.relation));
        }
    }
    let a2 = symmetry_permutation_audit(2).expect("n = 2 audit");
    c.expect(a2.anomaly && !a2.consistent, || "n = 2: parity anomaly not observed".into());
    c.note("n = 2 parity anomaly observed (expected failure)");
}

// ---------------------------------------------------------------- 10

fn tinf(c: &mut Criterion) {
    for n in [4, 6] {
        let a = symmetry_permutation_audit(n).expect("audit");
        let realised: Vec<_> = a.patterns.iter().filter(|p| p.triples > 0).collect();
        c.note(format!("n = {n}: {} of {} patterns realised", realised.len(), a.patterns.len()));
        for p in realised {
            let single = p.observed.len() == 1 && p.observed[0].is_some();
            c.expect(single && p.observed[0] == p.predicted, || {
                format!("n = {n} {:?}: observed {:?}, predicted {:?}", p.membership, p.observed, p.predicted)
            });
        }
        for r in &a.rows {
            c.expect(r.matches && r.w_t0, || format!("n = {n} {:?}: verdicts {} {}", r.triple, r.e, r.c));
        }
    }
}

// ---------------------------------------------------------------- 11

fn quotients(c: &mut Criterion) {
    let mut rng = StdRng::seed_from_u64(11);
    for sig in [Signature::complex(3), Signature::complex(5), Signature::real(2, 1), Signature::real(3, 2)] {
        for _ in 0..1000 {
            let a = Multivector::random(sig, &mut rng, 0.5);
            let b = Multivector::random(sig, &mut rng, 0.5);
            let lhs = epsilon_map(&a.mul(&b));
            let rhs = epsilon_map(&a).and_then(|x| epsilon_map(&b).map(|y| x.mul(&y)));
            let ok = matches!((&lhs, &rhs), (Ok(l), Ok(r)) if l == r);
            c.expect(ok, || format!("{sig}: ε(ab) ≠ ε(a)ε(b) for a = {a}, b = {b}"));
        }
    }
    let mut odd: Vec<Signature> = (1..=9).step_by(2).map(Signature::complex).collect();
    odd.extend(real_sigs(9).into_iter().filter(|s| s.n() % 2 == 1 && matches!(s.mod8(), 1 | 5)));
    for sig in odd {
        match central_idempotents(sig) {
            Ok((lp, lm)) => {
                let one = Multivector::one(sig);
                let ok = lp.mul(&lp) == lp
                    && lm.mul(&lm) == lm
                    && lp.mul(&lm).is_zero()
                    && lp.add(&lm) == one
                    && commutes_with_generators(&lp)
                    && commutes_with_generators(&lm);
                c.expect(ok, || format!("{sig}: λ± identities"));
            }
            Err(e) => c.expect(false, || format!("{sig}: {e}")),
        }
    }
    for n1 in (1..=9).step_by(2) {
        for p in 0..=n1 {
            let qq = n1 - p;
            for field in [GroundField::Complex, GroundField::Real] {
                if field == GroundField::Real && !matches!(Signature::real(p, qq).mod8(), 1 | 5) {
                    continue;
                }
                let report = match transfer_report(p, qq, field) {
                    Ok(r) => r,
                    Err(e) => {
                        c.expect(false, || format!("({p},{qq}) {field:?}: {e}"));
                        continue;
                    }
                };
                let has = |t: Transform| report.iter().any(|x| x.transform == t && x.transferred);
                c.expect(!has(Transform::P), || format!("({p},{qq}) {field:?}: star transfers"));
                let n = n1 - 1;
                c.expect(has(Transform::T) == (n % 4 == 0), || format!("({p},{qq}) {field:?}: reversion vs n = {n}"));
            }
        }
    }
    match quotient_class(3, 0, GroundField::Complex) {
        Ok(class) => c.expect(class == QuotientClass::C, || format!("C_3 with Cl(3,0): class {class}")),
        Err(e) => c.expect(false, || format!("C_3 with Cl(3,0): {e}")),
    }
    let evidence: Vec<Transform> = transfer_report(3, 0, GroundField::Complex)
        .map(|r| r.into_iter().filter(|x| x.transferred).map(|x| x.transform).collect())
        .unwrap_or_default();
    c.expect(evidence == vec![Transform::PT, Transform::C, Transform::CPT], || format!("evidence {evidence:?}"));
}

// ---------------------------------------------------------------- 12

fn pseudo(c: &mut Criterion) {
    // Π = I for real-ring representations
    for sig in real_sigs(6).into_iter().filter(|s| s.n() > 0 && matches!(s.mod8(), 0 | 2)) {
        let idems = if sig.n() <= 4 {
            enumerate_primitive_idempotents(sig).expect("idempotents")
        } else {
            vec![find_primitive_idempotent(sig).expect("idempotent")]
        };
        for f in idems {
            let gens = spinor_k_repr(sig, &f, None).expect("rep").complex_generators();
            match build_pi(&gens) {
                Ok(pi) => c.expect(pi.matrix == Mat::identity(gens[0].rows()), || format!("{sig} {}: Π ≠ I", f.describe())),
                Err(e) => c.expect(false, || format!("{sig} {}: {e}", f.describe())),
            }
        }
    }
    // Cl(1,3): γ-basis, real form of the tensor-Pauli C_4 basis, ideal representations
    let s13 = Signature::real(1, 3);
    let mut bases: Vec<(String, Vec<Mat<Cq>>)> = vec![
        ("γ-basis".into(), gamma_basis().generators),
        ("tensor-Pauli real form".into(), real_form_basis(&tensor_pauli_rep(2, false).expect("C_4").generators, 1)),
    ];
    for f in enumerate_primitive_idempotents(s13).expect("idempotents") {
        bases.push((f.describe(), spinor_k_repr(s13, &f, None).expect("rep").complex_generators()));
    }
    for (name, basis) in bases {
        let pi = match build_pi(&basis) {
            Ok(pi) => pi,
            Err(e) => {
                c.expect(false, || format!("Cl(1,3) {name}: {e}"));
                continue;
            }
        };
        let inv = pi.matrix.inverse().expect("Π invertible");
        for (i, e) in basis.iter().enumerate() {
            c.expect(pi.matrix.mul(&e.conj()).mul(&inv) == *e, || format!("Cl(1,3) {name}: Π·Ė{}·Π⁻¹ ≠ E{}", i + 1, i + 1));
        }
        let sign = pi.matrix.mul(&pi.matrix.conj()).unit_sign();
        c.expect(sign == Some(pi_rule_sign(pi.a, pi.b)), || {
            format!("Cl(1,3) {name}: ΠΠ̇ = {sign:?}·I, rule {} (a = {}, b = {})", pi_rule_sign(pi.a, pi.b), pi.a, pi.b)
        });
    }
    // ΠW anticommutes iff ab is odd
    for k in 1..=3 {
        let gens = tensor_pauli_rep(k, false).expect("C_2k").generators;
        for p in 0..=2 * k {
            let basis = real_form_basis(&gens, p);
            let pi = build_pi(&basis).expect("Π");
            let anti = pi_w_commutation(&pi, &basis) < 0;
            c.expect(anti == (pi.a * pi.b % 2 == 1), || format!("Cl({p},{}): ΠW anticommutes = {anti}", 2 * k - p));
        }
    }
}

// ---------------------------------------------------------------- 13

fn rand_q(rng: &mut StdRng) -> Q {
    qr(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

fn field_layer(c: &mut Criterion) {
    let mut rng = StdRng::seed_from_u64(13);
    for _ in 0..200 {
        let s = DHSpinor::random(&mut rng);
        let p = ideal_projection(&s);
        c.expect(is_single_column(&p.matrix) && p.column == s.phi().to_vec(), || format!("projection of {s:?}"));
    }
    for _ in 0..200 {
        let d: [Q; 4] = std::array::from_fn(|_| rand_q(&mut rng));
        let a: [Q; 4] = std::array::from_fn(|_| rand_q(&mut rng));
        let got = nabla_a(&d, &a);
        let want = nabla_a_componentwise(&d, &a);
        c.expect(got == want, || format!("∇A with ∂ = {d:?}, A = {a:?}"));
    }
    let g5 = gamma5();
    let id = Mat::identity(4);
    let (pp, pm) = helicity_projectors();
    c.expect(g5.mul(&g5) == id, || "γ5² ≠ I".into());
    for (k, g) in gamma_basis().generators.iter().enumerate() {
        c.expect(g5.anticommutator(g).is_zero(), || format!("γ5 does not anticommute with γ{k}"));
    }
    c.expect(pp.mul(&pp) == pp && pm.mul(&pm) == pm, || "P± not idempotent".into());
    c.expect(pp.mul(&pm).is_zero() && pm.mul(&pp).is_zero(), || "P+P- ≠ 0".into());
    c.expect(pp.add(&pm) == id, || "P+ + P- ≠ I".into());
    let g = gamma_basis().generators;
    for _ in 0..50 {
        let s = DHSpinor::random(&mut rng);
        let split = helicity_split(&s);
        let pat = split_pattern(&s.phi());
        c.expect(split.plus == pat.plus && split.minus == pat.minus, || format!("helicity split of {s:?}"));
        c.expect(split.plus.add(&split.minus) == s.matrix().mul(&g[2]).mul(&g[1]), || format!("φ+ + φ- of {s:?}"));
    }
    for m in 1..=8 {
        match many_body_symmetry(m) {
            Ok(cover) => {
                let want = if m % 2 == 0 { pin_cover(Abc(1, 1, 1)) } else { pin_cover(Abc(-1, -1, -1)) };
                let cliff_ok = cover.cliffordian == (m % 2 == 1);
                c.expect(cover == want && cliff_ok, || format!("m = {m}: {}", cover.label()));
            }
            Err(e) => c.expect(false, || format!("m = {m}: {e}")),
        }
    }
}

// ---------------------------------------------------------------- 14

fn periodicity(c: &mut Criterion) {
    let sigs = real_sigs(4);
    for a in &sigs {
        for b in &sigs {
            let composed = bw_compose(&algebra_class(*a), &algebra_class(*b));
            let direct = algebra_class(Signature::real(a.p + b.p, a.q + b.q)).bw_class;
            c.expect(matches!(composed, Ok(k) if k == direct), || format!("{a} ⊗ {b}: {composed:?} vs {direct}"));
        }
    }
    for sig in real_sigs(6) {
        c.expect(abs_shift_check(sig), || format!("{sig}: ABS shift"));
    }
}

fn main() -> ExitCode {
    let suite: [(usize, &'static str, fn(&mut Criterion)); 14] = [
        (1, "periodic-table", periodic),
        (2, "volume-element", volume_law),
        (3, "vee-groups", vee_groups),
        (4, "radon-hurwitz", radon_hurwitz),
        (5, "dirac-fixtures", dirac_fixtures),
        (6, "pin-census", pin_census),
        (7, "complex-aut-type", complex_types),
        (8, "real-aut-type", tautr),
        (9, "lorentz-operators", lorentz_ops),
        (10, "permutation-audit", tinf),
        (11, "quotients", quotients),
        (12, "pseudoautomorphism", pseudo),
        (13, "field-layer", field_layer),
        (14, "periodicity", periodicity),
    ];
    let started = Instant::now();
    let mut unexpected = 0;
    let mut matched_known = BTreeSet::new();
    for (id, name, run) in suite {
        let t0 = Instant::now();
        let mut c = Criterion::new(id, name);
        run(&mut c);
        let mut fresh = Vec::new();
        for f in &c.failures {
            match KNOWN_FAILURES.iter().position(|&(k, prefix)| k == id && f.starts_with(prefix)) {
                Some(i) => {
                    matched_known.insert(i);
                }
                None => fresh.push(f.clone()),
            }
        }
        let verdict = match (c.failures.is_empty(), fresh.is_empty()) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        };
        println!(
            "{verdict:<12} {:>2} {:<20} {} cases, {} failures, {:.2?}",
            c.id,
            c.name,
            c.cases,
            c.failures.len(),
            t0.elapsed()
        );
        for f in &c.failures {
            println!("      - {f}");
        }
        for n in &c.notes {
            println!("      note: {n}");
        }
        unexpected += fresh.len();
    }
    let stale: Vec<_> =
        KNOWN_FAILURES.iter().enumerate().filter(|(i, _)| !matched_known.contains(i)).map(|(_, k)| k).collect();
    for (id, prefix) in &stale {
        println!("known failure no longer observed: criterion {id}: {prefix}");
    }
    println!("acceptance: {unexpected} unexpected failures, {} stale known failures, {:.2?}", stale.len(), started.elapsed());
    if unexpected == 0 && stale.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
