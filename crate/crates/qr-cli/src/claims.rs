//! The reproduction registry: one claim per reference computational
//! statement about these quandle rings. Each claim re-derives its
//! statement from scratch with the exact engines and reports pass, fail,
//! or evidence-only. A fail carries the computed counterexample; the
//! registry deliberately keeps refuted statements verbatim so the suite
//! documents them.

use crate::report::{ClaimReport, ClaimStatus};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use quandle_rings::caps::Caps;
use quandle_rings::corez;
use quandle_rings::idempotents::{
    build_system, closed_form_family, conjecture_probe, decompose_x6_automorphism,
    enumerate_idempotents, permutation_matrix, search_system, verify_ring_morphism,
    AutDecomposition, Family, Monomial, Poly,
};
use quandle_rings::qring::{
    delta_power, dihedral_e_product, filtration, to_delta, DeltaVector, RingElement,
    RingHom,
};
use quandle_rings::quandle::{
    automorphisms, enumerate_quandles, properties, FiniteGroup, Quandle,
};
use quandle_rings::zlattice::Lattice;
use serde_json::{json, Value};
use std::sync::Arc;
use std::time::Instant;

pub const CLAIM_IDS: &[&str] = &[
    "prop4.8",
    "r4-powers",
    "r4-idem",
    "lemma-sqr",
    "r5-system",
    "c5-powers",
    "c7-powers",
    "c5-idem-families",
    "prop-idx",
    "lemma-atq",
    "psi-example",
    "autx-decompose",
    "thm3.1",
    "corez-commutator",
    "odd-order",
    "latin-center",
    "field-idem",
    "conjecture-2n1",
    "c5-question",
];

struct Ctx {
    detail: Vec<String>,
    failed: bool,
}

impl Ctx {
    fn new() -> Self {
        Ctx {
            detail: Vec::new(),
            failed: false,
        }
    }

    fn check(&mut self, label: impl Into<String>, ok: bool) {
        let label = label.into();
        if ok {
            self.detail.push(format!("ok: {label}"));
        } else {
            self.detail.push(format!("FAIL: {label}"));
            self.failed = true;
        }
    }

    fn note(&mut self, line: impl Into<String>) {
        self.detail.push(line.into());
    }
}

pub fn run_claim(id: &str, caps: &Caps) -> Option<ClaimReport> {
    let start = Instant::now();
    let (status, detail, artifacts) = match id {
        "prop4.8" => claim_prop48(),
        "r4-powers" => claim_r4_powers(),
        "r4-idem" => claim_r4_idem(caps),
        "lemma-sqr" => claim_lemma_sqr(),
        "r5-system" => claim_r5_system(caps),
        "c5-powers" => claim_c5_powers(),
        "c7-powers" => claim_c7_powers(),
        "c5-idem-families" => claim_c5_idem_families(caps),
        "prop-idx" => claim_prop_idx(caps),
        "lemma-atq" => claim_lemma_atq(),
        "psi-example" => claim_psi_example(),
        "autx-decompose" => claim_autx_decompose(caps),
        "thm3.1" => claim_thm31(),
        "corez-commutator" => claim_corez_commutator(),
        "odd-order" => claim_odd_order(caps),
        "latin-center" => claim_latin_center(),
        "field-idem" => claim_field_idem(),
        "conjecture-2n1" => claim_conjecture_2n1(),
        "c5-question" => claim_c5_question(caps),
        _ => return None,
    };
    Some(ClaimReport {
        claim_id: id.to_string(),
        status,
        detail,
        artifacts,
        wall_time_s: start.elapsed().as_secs_f64(),
    })
}

// ----- shared helpers -----

fn lat(rows: &[Vec<i64>], d: usize) -> Lattice {
    Lattice::hnf(
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect()),
        d,
    )
    .unwrap()
}

fn fv(d: usize, terms: &[(i64, usize)]) -> Vec<i64> {
    let mut v = vec![0i64; d];
    for &(c, i) in terms {
        v[i - 1] += c;
    }
    v
}

fn pow(base: i64, e: usize) -> i64 {
    base.pow(e as u32)
}

pub fn lattice_json(l: &Lattice) -> Value {
    json!(l
        .basis()
        .iter()
        .map(|row| row.iter().map(|x| x.to_i64().expect("small entry")).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

pub fn lattice_lines(l: &Lattice, symbol: &str) -> Vec<String> {
    if l.rank() == 0 {
        return vec!["0".to_string()];
    }
    l.basis()
        .iter()
        .map(|row| DeltaVector(row.clone()).display_with(symbol))
        .collect()
}

fn finish(c: Ctx, artifacts: Value) -> (ClaimStatus, Vec<String>, Value) {
    let status = if c.failed {
        ClaimStatus::Fail
    } else {
        ClaimStatus::Pass
    };
    (status, c.detail, artifacts)
}

fn evidence(c: Ctx, artifacts: Value) -> (ClaimStatus, Vec<String>, Value) {
    (ClaimStatus::EvidenceOnly, c.detail, artifacts)
}

// ----- individual claims -----

fn claim_prop48() -> (ClaimStatus, Vec<String>, Value) {
    let mut c = Ctx::new();
    let q = Arc::new(Quandle::dihedral(3));
    let mut bases = serde_json::Map::new();
    for k in 1..=9usize {
        let computed = delta_power(&q, k);
        let expect = if k % 2 == 1 {
            let j = (k - 1) / 2;
            lat(&[vec![pow(3, j), 0], vec![0, pow(3, j)]], 2)
        } else {
            let l = k / 2;
            lat(&[vec![pow(3, l - 1), pow(3, l - 1)], vec![0, pow(3, l)]], 2)
        };
        c.check(
            format!("power {k}: {}", lattice_lines(&computed, "E").join(", ")),
            computed == expect,
        );
        bases.insert(k.to_string(), lattice_json(&computed));
    }
    finish(c, json!({ "bases": bases }))
}

fn claim_r4_powers() -> (ClaimStatus, Vec<String>, Value) {
    let mut c = Ctx::new();
    let q = Arc::new(Quandle::dihedral(4));
    let f = filtration(&q, 8);
    c.check(
        "power 2 = <E1-E2-E3, 2E2>",
        f.powers[1] == lat(&[vec![1, -1, -1], vec![0, 2, 0]], 3),
    );
    for k in 3..=8usize {
        let expect = lat(
            &[
                vec![pow(2, k - 2), -pow(2, k - 2), -pow(2, k - 2)],
                vec![0, pow(2, k - 1), 0],
            ],
            3,
        );
        c.check(format!("power {k} scaled basis"), f.powers[k - 1] == expect);
    }
    c.check(
        "quotient 1: free rank 1, torsion [2]",
        f.quotients[0] == (1, vec![BigInt::from(2)]),
    );
    for k in 2..=7usize {
        c.check(
            format!("quotient {k}: torsion [2, 2]"),
            f.quotients[k - 1] == (0, vec![BigInt::from(2), BigInt::from(2)]),
        );
    }
    let quotients: Vec<Value> = f
        .quotients
        .iter()
        .map(|(free, tors)| {
            json!({
                "free_rank": free,
                "torsion": tors.iter().map(|t| t.to_i64().unwrap()).collect::<Vec<_>>()
            })
        })
        .collect();
    finish(c, json!({ "quotients": quotients }))
}

fn claim_r4_idem(caps: &Caps) -> (ClaimStatus, Vec<String>, Value) {
    let mut c = Ctx::new();
    let q = Quandle::dihedral(4);

    let sys = build_system(&q, 0);
    let sols = search_system(&sys, 10, caps).unwrap();
    c.check(
        "aug-0 system has only the zero solution in box 10",
        sols == vec![vec![0, 0, 0]],
    );

    // the published closed forms, checked as stated
    let fam_a = closed_form_family(Family::R4ReferenceA, -3..=3).unwrap();
    let bad_a: Vec<String> = fam_a
        .iter()
        .filter(|u| !u.is_idempotent())
        .map(|u| u.to_string())
        .collect();
    c.check(
        format!(
            "published family e0 - 2bE1 + bE2 - 2bE3 consists of idempotents \
             ({} of {} members fail, e.g. {})",
            bad_a.len(),
            fam_a.len(),
            bad_a.first().cloned().unwrap_or_default()
        ),
        bad_a.is_empty(),
    );
    let fam_b = closed_form_family(Family::R4ReferenceB, -3..=3).unwrap();
    let bad_b = fam_b.iter().filter(|u| !u.is_idempotent()).count();
    c.check(
        format!(
            "published family e0 + b1E1 + b2E2 + (1-b1)E3 consists of idempotents \
             ({bad_b} of {} members fail; exactly the b2 != 0 part)",
            fam_b.len()
        ),
        bad_b == 0,
    );

    // what the enumeration actually finds
    let set = enumerate_idempotents(&q, 4, caps).unwrap();
    c.note(format!(
        "computed: aug-0 empty = {}, aug-1 has {} members",
        set.aug0.is_empty(),
        set.aug1.len()
    ));
    let mut derived = closed_form_family(Family::R4EvenComponent, -12..=12).unwrap();
    derived.extend(closed_form_family(Family::R4OddComponent, -12..=12).unwrap());
    let derived_ok = derived.iter().all(|u| u.is_idempotent());
    c.note(format!(
        "computed: the aug-1 idempotents are the two trivial-subquandle families \
         (1-b)e0 + b e2 and b e1 + (1-b)e3 (all members idempotent = {derived_ok})"
    ));
    finish(
        c,
        json!({
            "aug0_solutions": sols,
            "aug1_count_bound4": set.aug1.len(),
        }),
    )
}

fn claim_lemma_sqr() -> (ClaimStatus, Vec<String>, Value) {
    let mut c = Ctx::new();
    let q = Arc::new(Quandle::dihedral(5));
    let computed = delta_power(&q, 2);
    let expect = lat(
        &[
            vec![1, -1, 0, -1],
            vec![0, 1, -1, -1],
            vec![0, 0, 1, 3],
            vec![0, 0, 0, 5],
        ],
        4,
    );
    c.check("second power = <F1, F2, F3, F4>", computed == expect);
    // closed product form cross-check for the same ring
    let mut all_match = true;
    for i in 1..5 {
        for j in 1..5 {
            let closed = dihedral_e_product(5, i, j).unwrap();
            let generic = to_delta(
                &RingElement::e_minus_anchor(&q, i).multiply(&RingElement::e_minus_anchor(&q, j)),
            )
            .unwrap();
            all_match &= closed == generic;
        }
    }
    c.check("closed E-product form agrees with generic products", all_match);
    finish(c, json!({ "basis": lattice_json(&computed) }))
}

mod transcriptions {
    use super::{Monomial::Quad, Monomial::Var, Poly};

    fn poly(terms: &[(super::Monomial, i64)]) -> Poly {
        let mut p = Poly::zero();
        for &(m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn r4_aug0() -> Vec<Poly> {
        vec![
            poly(&[(Quad(1, 1), 1), (Quad(3, 3), -1), (Var(1), -1)]),
            poly(&[
                (Quad(1, 1), -1),
                (Quad(3, 3), -1),
                (Quad(1, 3), -2),
                (Quad(1, 2), -2),
                (Quad(2, 3), -2),
                (Var(2), -1),
            ]),
            poly(&[(Quad(1, 1), -1), (Quad(3, 3), 1), (Var(3), -1)]),
        ]
    }

    pub fn r5_aug1() -> Vec<Poly> {
        vec![
            poly(&[
                (Var(3), 1),
                (Var(4), 1),
                (Quad(1, 1), 1),
                (Quad(3, 3), -1),
                (Quad(4, 4), -1),
                (Quad(1, 3), -1),
                (Quad(1, 4), -1),
                (Quad(3, 4), -2),
                (Var(1), -1),
            ]),
            poly(&[
                (Var(1), 1),
                (Var(3), 1),
                (Quad(1, 1), -1),
                (Quad(2, 2), 1),
                (Quad(3, 3), -1),
                (Quad(1, 2), -1),
                (Quad(1, 3), -2),
                (Quad(2, 3), -1),
                (Var(2), -1),
            ]),
            poly(&[
                (Var(2), 1),
                (Var(4), 1),
                (Quad(2, 2), -1),
                (Quad(3, 3), 1),
                (Quad(4, 4), -1),
                (Quad(2, 3), -1),
                (Quad(2, 4), -2),
                (Quad(3, 4), -1),
                (Var(3), -1),
            ]),
            poly(&[
                (Var(1), 1),
                (Var(2), 1),
                (Quad(1, 1), -1),
                (Quad(2, 2), -1),
                (Quad(4, 4), 1),
                (Quad(1, 2), -2),
                (Quad(1, 4), -1),
                (Quad(2, 4), -1),
                (Var(4), -1),
            ]),
        ]
    }

    pub fn c5_aug1() -> Vec<Poly> {
        vec![
            poly(&[
                (Var(2), 2),
                (Quad(1, 1), 1),
                (Quad(2, 2), -2),
                (Quad(1, 2), -2),
                (Quad(2, 3), -2),
                (Quad(2, 4), -2),
                (Quad(3, 4), 2),
                (Var(1), -1),
            ]),
            poly(&[
                (Var(4), 2),
                (Quad(2, 2), 1),
                (Quad(4, 4), -2),
                (Quad(1, 3), 2),
                (Quad(1, 4), -2),
                (Quad(2, 4), -2),
                (Quad(3, 4), -2),
                (Var(2), -1),
            ]),
            poly(&[
                (Var(1), 2),
                (Quad(3, 3), 1),
                (Quad(1, 1), -2),
                (Quad(1, 2), -2),
                (Quad(1, 3), -2),
                (Quad(1, 4), -2),
                (Quad(2, 4), 2),
                (Var(3), -1),
            ]),
            poly(&[
                (Var(3), 2),
                (Quad(4, 4), 1),
                (Quad(3, 3), -2),
                (Quad(1, 2), 2),
                (Quad(1, 3), -2),
                (Quad(2, 3), -2),
                (Quad(3, 4), -2),
                (Var(4), -1),
            ]),
        ]
    }
}

fn claim_r5_system(caps: &Caps) -> (ClaimStatus, Vec<String>, Value) {
    let mut c = Ctx::new();
    let sys = build_system(&Quandle::dihedral(5), 1);
    c.check(
        "aug-1 system matches the reference equations term for term",
        sys.equations == transcriptions::r5_aug1(),
    );
    let sols = search_system(&sys, 5, caps).unwrap();
    let mut expect = vec![
        vec![0, 0, 0, 0],
        vec![1, 0, 0, 0],
        vec![0, 1, 0, 0],
        vec![0, 0, 1, 0],
        vec![0, 0, 0, 1],
    ];
    expect.sort();
    c.check("box 5 finds exactly the five basis solutions", sols == expect);
    let r4 = build_system(&Quandle::dihedral(4), 0);
    c.check(
        "order-4 aug-0 system matches term for term",
        r4.equations == transcriptions::r4_aug0(),
    );
    let c5 = build_system(&Quandle::commutative(5).unwrap(), 1);
    c.check(
        "order-5 commutative aug-1 system matches term for term",
        c5.equations == transcriptions::c5_aug1(),
    );
    finish(c, json!({ "solutions": sols }))
}

fn c5_phase(l: usize) -> Lattice {
    let k = l / 4;
    let rows: Vec<Vec<i64>> = match l % 4 {
        1 => (1..=4).map(|i| fv(4, &[(pow(5, k), i)])).collect(),
        2 => vec![
            fv(4, &[(pow(5, k), 1), (pow(5, k), 4)]),
            fv(4, &[(pow(5, k), 2), (2 * pow(5, k), 4)]),
            fv(4, &[(pow(5, k), 3), (3 * pow(5, k), 4)]),
            fv(4, &[(pow(5, k + 1), 4)]),
        ],
        3 => vec![
            fv(4, &[(pow(5, k), 1), (4 * pow(5, k), 3), (3 * pow(5, k), 4)]),
            fv(4, &[(pow(5, k), 2), (2 * pow(5, k), 3), (3 * pow(5, k), 4)]),
            fv(4, &[(pow(5, k + 1), 3)]),
            fv(4, &[(pow(5, k + 1), 4)]),
        ],
        _ => {
            let mut rows = vec![fv(
                4,
                &[
                    (pow(5, k - 1), 1),
                    (pow(5, k - 1), 2),
                    (pow(5, k - 1), 3),
                    (pow(5, k - 1), 4),
                ],
            )];
            rows.extend((2..=4).map(|i| fv(4, &[(pow(5, k), i)])));
            rows
        }
    };
    lat(&rows, 4)
}

fn c7_phase_published(l: usize) -> Lattice {
    let k = l / 6;
    let p = pow(7, k);
    let rows: Vec<Vec<i64>> = match l % 6 {
        1 => (1..=6).map(|i| fv(6, &[(p, i)])).collect(),
        2 => vec![
            fv(6, &[(p, 1), (p, 6)]),
            fv(6, &[(p, 2), (2 * p, 6)]),
            fv(6, &[(p, 3), (3 * p, 6)]),
            fv(6, &[(p, 4), (4 * p, 6)]),
            fv(6, &[(p, 5), (5 * p, 6)]),
            fv(6, &[(pow(7, k + 1), 6)]),
        ],
        3 => vec![
            fv(6, &[(p, 1), (6 * p, 5), (3 * p, 6)]),
            fv(6, &[(p, 2), (4 * p, 5), (p, 6)]),
            fv(6, &[(p, 3), (p, 5), (p, 6)]),
            fv(6, &[(p, 4), (4 * p, 5), (3 * p, 6)]),
            fv(6, &[(pow(7, k + 1), 5)]),
            fv(6, &[(pow(7, k + 1), 6)]),
        ],
        4 => vec![
            fv(6, &[(p, 1), (p, 4), (3 * p, 5), (6 * p, 6)]),
            fv(6, &[(p, 2), (2 * p, 4), (6 * p, 5), (6 * p, 6)]),
            fv(6, &[(p, 3), (3 * p, 4), (6 * p, 5), (3 * p, 6)]),
            fv(6, &[(p, 4)]),
            fv(6, &[(p, 5)]),
            fv(6, &[(p, 6)]),
        ],
        5 => vec![
            fv(6, &[(p, 1), (6 * p, 3), (5 * p, 4), (4 * p, 5), (3 * p, 6)]),
            fv(6, &[(p, 2), (2 * p, 3), (3 * p, 4), (4 * p, 5), (5 * p, 6)]),
            fv(6, &[(pow(7, k + 1), 3)]),
            fv(6, &[(pow(7, k + 1), 4)]),
            fv(6, &[(pow(7, k + 1), 5)]),
            fv(6, &[(pow(7, k + 1), 6)]),
        ],
        _ => {
            let q = pow(7, k - 1);
            let mut rows = vec![fv(6, &[(q, 1), (q, 2), (q, 3), (q, 4), (q, 5), (q, 6)])];
            rows.extend((2..=6).map(|i| fv(6, &[(p, i)])));
            rows
        }
    };
    lat(&rows, 6)
}

fn c7_phase4_corrected(l: usize) -> Lattice {
    let k = l / 6;
    let p = pow(7, k);
    lat(
        &[
            fv(6, &[(p, 1), (p, 4), (3 * p, 5), (6 * p, 6)]),
            fv(6, &[(p, 2), (4 * p, 4), (6 * p, 5), (6 * p, 6)]),
            fv(6, &[(p, 3), (3 * p, 4), (6 * p, 5), (3 * p, 6)]),
            fv(6, &[(pow(7, k + 1), 4)]),
            fv(6, &[(pow(7, k + 1), 5)]),
            fv(6, &[(pow(7, k + 1), 6)]),
        ],
        6,
    )
}

fn claim_c5_powers() -> (ClaimStatus, Vec<String>, Value) {
    let mut c = Ctx::new();
    let q = Arc::new(Quandle::commutative(5).unwrap());
    let mut bases = serde_json::Map::new();
    for l in 1..=13usize {
        let computed = delta_power(&q, l);
        c.check(format!("power {l} matches its phase formula"), computed == c5_phase(l));
        bases.insert(l.to_string(), lattice_json(&computed));
    }
    finish(c, json!({ "bases": bases }))
}

fn claim_c7_powers() -> (ClaimStatus, Vec<String>, Value) {
    let mut c = Ctx::new();
    let q = Arc::new(Quandle::commutative(7).unwrap());
    let mut bases = serde_json::Map::new();
    for l in 1..=13usize {
        let computed = delta_power(&q, l);
        let ok = computed == c7_phase_published(l);
        c.check(format!("power {l} matches the published phase formula"), ok);
        if !ok {
            c.note(format!(
                "  computed power {l}: {}",
                lattice_lines(&computed, "f").join(", ")
            ));
            if computed == c7_phase4_corrected(l) {
                c.note(
                    "  matches the corrected 6k+4 phase: second generator f2+4f4+6f5+6f6 \
                     and tail scaled by 7^(k+1)"
                        .to_string(),
                );
            }
        }
        bases.insert(l.to_string(), lattice_json(&computed));
    }
    finish(c, json!({ "bases": bases }))
}

fn claim_c5_idem_families(caps: &Caps) -> (ClaimStatus, Vec<String>, Value) {
    let mut c = Ctx::new();
    for order in [5usize, 7] {
        let q = Quandle::commutative(order).unwrap();
        let set = enumerate_idempotents(&q, 3, caps).unwrap();
        c.check(format!("order {order}: no augmentation-zero idempotent in box 3"), set.aug0.is_empty());
        let trivial: Vec<DeltaVector> = (0..order)
            .map(|i| {
                let mut v = vec![0i64; order - 1];
                if i > 0 {
                    v[i - 1] = 1;
                }
                DeltaVector::from_i64(&v)
            })
            .collect();
        let mut trivial = trivial;
        trivial.sort();
        c.check(
            format!("order {order}: aug-1 slice is exactly the basis elements"),
            set.aug1 == trivial,
        );
    }
    finish(c, json!({}))
}

fn claim_prop_idx(caps: &Caps) -> (ClaimStatus, Vec<String>, Value) {
    let mut c = Ctx::new();
    let q = Quandle::x6();
    let p = properties(&q);
    c.check(
        "the order-6 quandle is connected, involutory, 2-almost latin",
        p.connected && p.involutory && p.almost_latin_degree == Some(2),
    );
    let arc = Arc::new(q.clone());
    let r3 = Arc::new(Quandle::dihedral(3));
    let fold = RingHom::new(&arc, &r3, vec![0, 0, 1, 1, 2, 2]).unwrap();
    let kernel_gens: [RingElement<BigInt>; 3] = [
        RingElement::basis(&arc, 0) - RingElement::basis(&arc, 1),
        RingElement::basis(&arc, 2) - RingElement::basis(&arc, 3),
        RingElement::basis(&arc, 4) - RingElement::basis(&arc, 5),
    ];
    c.check(
        "the fold onto the 3-element dihedral quandle kills e1-e2, e3-e4, e5-e6",
        kernel_gens.iter().all(|u| fold.apply(u).is_zero()),
    );
    let set = enumerate_idempotents(&q, 2, caps).unwrap();
    c.check("no augmentation-zero idempotent in box 2", set.aug0.is_empty());
    let mut family_vectors: Vec<DeltaVector> = Vec::new();
    for comp in 0..3usize {
        for u in closed_form_family(Family::X6Component { component: comp }, -6..=7).unwrap() {
            let delta = &u - &RingElement::basis(&arc, 0);
            let coords: Vec<BigInt> = (1..6).map(|i| delta.coeff(i)).collect();
            if coords.iter().all(|x| x.magnitude() <= BigInt::from(2).magnitude()) {
                family_vectors.push(DeltaVector(coords));
            }
        }
    }
    family_vectors.sort();
    family_vectors.dedup();
    c.check(
        format!(
            "box-2 idempotents are exactly the three component families ({} members)",
            set.aug1.len()
        ),
        set.aug1 == family_vectors,
    );
    finish(c, json!({ "bound2_count": set.aug1.len() }))
}

fn claim_lemma_atq() -> (ClaimStatus, Vec<String>, Value) {
    let mut c = Ctx::new();
    let t2 = Quandle::trivial(2);
    // every (alpha, eps) matrix is an automorphism of the 2-element
    // trivial quandle ring
    let mut all_ok = true;
    for alpha in -6i64..=6 {
        for eps in [-1i64, 1] {
            let m = vec![vec![alpha, alpha + eps], vec![1 - alpha, 1 - alpha - eps]];
            all_ok &= verify_ring_morphism(&t2, &m).unwrap();
        }
    }
    c.check("every (alpha, eps in ±1) matrix is a ring automorphism", all_ok);
    // conversely, a box sweep finds nothing outside that shape
    let mut accepted = Vec::new();
    for a in -6i64..=6 {
        for b in -6i64..=6 {
            for d in -6i64..=6 {
                for e in -6i64..=6 {
                    let m = vec![vec![a, b], vec![d, e]];
                    if verify_ring_morphism(&t2, &m).unwrap() {
                        accepted.push((a, b, d, e));
                    }
                }
            }
        }
    }
    let shaped = accepted.iter().all(|&(a, b, d, e)| {
        let alpha = a;
        let eps = b - a;
        (eps == 1 || eps == -1) && d == 1 - alpha && e == 1 - alpha - eps
    });
    c.check(
        format!(
            "all {} box-6 ring automorphisms have the (alpha, eps) form",
            accepted.len()
        ),
        shaped,
    );
    finish(c, json!({ "box6_automorphisms": accepted.len() }))
}

fn reference_psi() -> Vec<Vec<i64>> {
    vec![
        vec![0, -1, 0, 0, 0, 0],
        vec![1, 2, 0, 0, 0, 0],
        vec![0, 0, 0, 1, 0, 0],
        vec![0, 0, 1, 2, 0, 0],
        vec![0, 0, 0, 0, 2, 3],
        vec![0, 0, 0, 0, -1, -2],
    ]
}

fn claim_psi_example() -> (ClaimStatus, Vec<String>, Value) {
    let mut c = Ctx::new();
    let q = Quandle::x6();
    let psi = reference_psi();
    let ok = verify_ring_morphism(&q, &psi).unwrap();
    c.check("the explicit 6x6 matrix is a ring automorphism", ok);
    if !ok {
        c.note(
            "counterexample: psi(e1 e3) = psi(e5) = 2e5 - e6, but psi(e1) psi(e3) = \
             e2 e4 = e5"
                .to_string(),
        );
        c.note(
            "its middle block sends e4 to e3 + 2e4, which has augmentation 3 and is \
             not an idempotent"
                .to_string(),
        );
    }
    finish(c, json!({ "multiplicative": ok }))
}

fn claim_autx_decompose(caps: &Caps) -> (ClaimStatus, Vec<String>, Value) {
    let mut c = Ctx::new();
    let q = Quandle::x6();
    let auts = automorphisms(&q, caps).unwrap();
    c.check("the quandle has 24 automorphisms", auts.len() == 24);
    let mut all_roundtrip = true;
    for sigma in &auts {
        let m = permutation_matrix(sigma);
        let ok = verify_ring_morphism(&q, &m).unwrap()
            && decompose_x6_automorphism(&m).is_ok_and(|d| d.assemble() == m);
        all_roundtrip &= ok;
    }
    c.check("all 24 permutation matrices verify, decompose and round-trip", all_roundtrip);

    // block-form sweep: the only ring automorphisms are those 24
    let mut found = 0usize;
    for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
        for a0 in -3i64..=3 {
            for e0 in [-1i64, 1] {
                for a1 in -3i64..=3 {
                    for e1 in [-1i64, 1] {
                        for a2 in -3i64..=3 {
                            for e2 in [-1i64, 1] {
                                let d = AutDecomposition {
                                    block_permutation: perm,
                                    params: [(a0, e0), (a1, e1), (a2, e2)],
                                };
                                if verify_ring_morphism(&q, &d.assemble()).unwrap() {
                                    found += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    c.check(
        format!("block-form sweep (alpha in [-3,3]) finds exactly 24, all basis maps ({found})"),
        found == 24,
    );

    let psi_result = decompose_x6_automorphism(&reference_psi());
    c.check(
        format!("the explicit 6x6 example decomposes and round-trips (got {psi_result:?})"),
        psi_result.as_ref().is_ok_and(|d| d.assemble() == reference_psi()),
    );
    finish(c, json!({ "block_form_automorphisms": found }))
}

fn claim_thm31() -> (ClaimStatus, Vec<String>, Value) {
    let mut c = Ctx::new();
    let sweep = corez::cz_idempotent_sweep(1000, corez::DEFAULT_SEED);
    c.check(
        format!(
            "1000 seeded elements with support >= 2: u^2 != u with the extremal chain \
             min(u^2) < min(u) <= max(u) < max(u^2) ({} failures)",
            sweep.failures
        ),
        sweep.all_verified,
    );
    let (ok, _) = corez::cz_is_idempotent(&corez::CoreZElement::basis(0));
    c.check("basis elements are idempotent", ok);
    let (ok2, _) = corez::cz_is_idempotent(&corez::CoreZElement::from_pairs([(0i64, 2i64)]));
    c.check("non-unit single-support elements are not", !ok2);
    finish(
        c,
        json!({ "samples": sweep.samples, "seed": sweep.seed, "failures": sweep.failures }),
    )
}

fn claim_corez_commutator() -> (ClaimStatus, Vec<String>, Value) {
    let mut c = Ctx::new();
    let mut all = true;
    let mut a = -30i64;
    while a <= 30 {
        all &= corez::cz_commutator_identity(a).unwrap();
        a += 3;
    }
    c.check("[e(a/3), e(2a/3)] = e(a) - e(0) for a = -30, -27, .., 30", all);
    let probe = corez::cz_order_probe(20);
    c.check(
        format!(
            "window-20 order probe: left multiplication preserves, right reverses \
             ({} checks)",
            probe.checks
        ),
        probe.all_passed,
    );
    finish(c, json!({ "order_checks": probe.checks }))
}

fn claim_odd_order(caps: &Caps) -> (ClaimStatus, Vec<String>, Value) {
    let mut c = Ctx::new();
    let mut counts = serde_json::Map::new();
    for n in 1..=4usize {
        let tables = enumerate_quandles(n, caps).unwrap();
        let commutative = tables
            .iter()
            .filter(|q| properties(q).commutative)
            .count();
        counts.insert(n.to_string(), json!({ "tables": tables.len(), "commutative": commutative }));
        if n % 2 == 0 {
            c.check(
                format!("order {n}: none of the {} tables is commutative", tables.len()),
                commutative == 0,
            );
        } else {
            c.note(format!(
                "order {n}: {} tables, {commutative} commutative",
                tables.len()
            ));
        }
        for q in &tables {
            let p = properties(q);
            if p.commutative && !p.latin {
                c.check("commutative implies latin", false);
            }
        }
    }
    let z3 = FiniteGroup::cyclic(3);
    for (g, expect) in [
        (FiniteGroup::cyclic(3), true),
        (FiniteGroup::cyclic(9), false),
        (FiniteGroup::direct_product(&z3, &z3), true),
        (FiniteGroup::cyclic(4), false),
    ] {
        let commutative = properties(&Quandle::core(&g)).commutative;
        c.check(
            format!(
                "Core({}) commutative iff exponent 3 (expected {expect})",
                g.label()
            ),
            commutative == expect && g.has_exponent_dividing_3() == expect,
        );
    }
    c.check(
        "almost-latin degrees: X6 -> 2, R3 -> 1, R4 -> none",
        properties(&Quandle::x6()).almost_latin_degree == Some(2)
            && properties(&Quandle::dihedral(3)).almost_latin_degree == Some(1)
            && properties(&Quandle::dihedral(4)).almost_latin_degree.is_none(),
    );
    finish(c, json!({ "table_counts": counts }))
}

fn claim_latin_center() -> (ClaimStatus, Vec<String>, Value) {
    let mut c = Ctx::new();
    for q in [
        Quandle::dihedral(3),
        Quandle::dihedral(5),
        Quandle::commutative(5).unwrap(),
        Quandle::commutative(7).unwrap(),
    ] {
        let label = q.label().unwrap_or("?").to_string();
        let arc = Arc::new(q);
        let w: RingElement<BigInt> = RingElement::all_ones(&arc);
        c.check(format!("w central in the {label} ring"), w.is_central());
        let n = arc.order() as i64;
        let wq: RingElement<BigRational> = RingElement::all_ones(&arc);
        let u = wq.scale(&BigRational::new(BigInt::one(), BigInt::from(n)));
        c.check(format!("w/{n} idempotent over the rationals ({label})"), u.is_idempotent());
    }
    let r4 = Arc::new(Quandle::dihedral(4));
    let w: RingElement<BigInt> = RingElement::all_ones(&r4);
    c.check("w is not central in the non-latin order-4 ring", !w.is_central());
    finish(c, json!({}))
}

fn claim_field_idem() -> (ClaimStatus, Vec<String>, Value) {
    let mut c = Ctx::new();
    type Q = RingElement<BigRational>;
    let rat = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    let r3 = Arc::new(Quandle::dihedral(3));
    let u = (Q::e_minus_anchor(&r3, 1) + Q::e_minus_anchor(&r3, 2)).scale(&rat(-1, 3));
    c.check("-1/3 (E1 + E2) is idempotent with augmentation 0", {
        u.is_idempotent() && u.augment().is_zero()
    });
    for n in 1..=5usize {
        let order = 2 * n + 1;
        let q = Arc::new(Quandle::commutative(order).unwrap());
        let sum = (1..order).fold(Q::zero(&q), |acc, i| acc + Q::e_minus_anchor(&q, i));
        let u = sum.scale(&rat(-1, order as i64));
        c.check(
            format!("-1/{order} (f1 + .. + f{}) idempotent in the order-{order} ring", order - 1),
            u.is_idempotent() && u.augment().is_zero(),
        );
    }
    // prime-field check: over Z_2 the inverse of 3 is 1, so E1 + E2 itself
    // is the augmentation-zero idempotent of the order-3 ring
    use quandle_rings::qring::domain::Zp;
    type F2 = RingElement<Zp<2>>;
    let u2 = F2::e_minus_anchor(&r3, 1) + F2::e_minus_anchor(&r3, 2);
    c.check("the same element works over the field with two elements", u2.is_idempotent());
    finish(c, json!({}))
}

fn claim_conjecture_2n1() -> (ClaimStatus, Vec<String>, Value) {
    let mut c = Ctx::new();
    let mut results = serde_json::Map::new();
    for n in 1..=4usize {
        let report = conjecture_probe(n).unwrap();
        c.note(format!(
            "order {}: power {} divisible by {} = {}",
            report.order, report.power, report.order, report.divisible
        ));
        results.insert(report.order.to_string(), json!(report.divisible));
    }
    c.note(corez_interpretation());
    evidence(c, json!({ "divisible_by_order": results }))
}

fn corez_interpretation() -> String {
    quandle_rings::idempotents::DIVISIBILITY_INTERPRETATION.to_string()
}

fn claim_c5_question(caps: &Caps) -> (ClaimStatus, Vec<String>, Value) {
    let mut c = Ctx::new();
    let sys = build_system(&Quandle::commutative(5).unwrap(), 1);
    let sols = search_system(&sys, 5, caps).unwrap();
    let multi = sols
        .iter()
        .filter(|s| s.iter().filter(|&&x| x != 0).count() > 1)
        .count();
    c.note(format!(
        "box 5: {} solutions, {multi} with more than one nonzero component \
         (evidence only; the box does not decide the question)",
        sols.len()
    ));
    evidence(c, json!({ "solutions": sols }))
}
