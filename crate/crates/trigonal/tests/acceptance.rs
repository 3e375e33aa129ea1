//! Acceptance gate: one test per criterion, exact arithmetic, zero
//! tolerance. Every test prints a single `criterion N: PASS/FAIL` line
//! (visible under `--nocapture`, and in the failure output otherwise)
//! before asserting, so a red run still shows the full scoreboard.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use trigonal::diagram::{chain_diagram, radical_generators, DiagramStyle};
use trigonal::f2::{F2Mat, F2Vec, QuadSpace};
use trigonal::geom::{branch_characteristics, branch_characteristics_from, plucker_dual, PluckerCurve, SurfaceChern};
use trigonal::lattice::{milnor_lattice, smith_normal_form, IntMat, LatticeBlock};
use trigonal::reports::{plucker_report, verify_report, VerifyCheck};
use trigonal::report::Status;
use trigonal::sympl::{
    ambient_rep, bridge_check, centrality_checks, full_orthogonal_check, monodromy_rep,
    orthogonal_group_order, transvection_matrix,
};
use trigonal::words::{
    bridge_pairs, delta_words, generator_change, reorder_word, trigonal_presentation,
    weierstrass_presentation, Word,
};
use trigonal::DEFAULT_SEED;

fn verdict(n: usize, ok: bool, what: &str) {
    println!("criterion {n}: {} — {what}", if ok { "PASS" } else { "FAIL" });
}

#[test]
fn criterion_01_trigonal_relators() {
    let mut failures = Vec::new();
    for g in [1u64, 4, 7] {
        let rep = monodromy_rep(g, DiagramStyle::Trigonal).unwrap();
        assert_eq!(rep.dim() as u64, 2 * g);
        for r in rep.verify_presentation(&trigonal_presentation(g).unwrap()) {
            if !r.ok {
                failures.push(format!("g={g}: {}", r.name));
            }
        }
    }
    let ok = failures.is_empty();
    verdict(1, ok, "all chain-presentation relators die in the 2g-dim representation, g in {1, 4, 7}");
    assert!(ok, "failing relators: {failures:?}");
}

#[test]
fn criterion_02_weierstrass_relators() {
    let mut failures = Vec::new();
    for g in [1u64, 4, 7] {
        let pres = weierstrass_presentation(g).unwrap();
        let ambient = ambient_rep(g, DiagramStyle::Weierstrass).unwrap();
        assert_eq!(ambient.dim() as u64, 2 * g + 2);
        for r in ambient.verify_presentation(&pres) {
            // relations (i)-(iii); the slide family only holds after quotienting
            if !r.name.starts_with("slide(") && !r.ok {
                failures.push(format!("ambient g={g}: {}", r.name));
            }
        }
        let quotient = monodromy_rep(g, DiagramStyle::Weierstrass).unwrap();
        for r in quotient.verify_presentation(&pres) {
            if !r.ok {
                failures.push(format!("quotient g={g}: {}", r.name));
            }
        }
    }
    let ok = failures.is_empty();
    verdict(2, ok, "ladder relations (i)-(iii) hold ambiently and (i)-(iv) in the quotient, g in {1, 4, 7}");
    assert!(ok, "failing relators: {failures:?}");
}

#[test]
fn criterion_03_radical() {
    let mut ok = true;
    for g in [1u64, 4, 7, 10, 13] {
        let qs = chain_diagram(g).unwrap().quad_space();
        let rad = qs.radical();
        let (r1, r2) = radical_generators(g).unwrap();
        let in_radical = |v: &F2Vec| qs.gram().mul_vec(v).is_zero();
        ok &= rad.len() == 2
            && r1 != r2
            && !r1.is_zero()
            && !r2.is_zero()
            && in_radical(&r1)
            && in_radical(&r2)
            && !qs.q(&r1)
            && !qs.q(&r2);
    }
    verdict(3, ok, "chain-diagram radical has dimension 2 = span(r1, r2) with q = 0 on it, g in {1, 4, 7, 10, 13}");
    assert!(ok);
}

#[test]
fn criterion_04_milnor_lattices() {
    let mut ok = true;
    for m in 1i64..=20 {
        let blocks = milnor_lattice(m).unwrap();
        ok &= blocks.rank() as i64 == 6 * m - 2;
        ok &= blocks.gram().mod2().kernel_basis().len() == 2;
        let tail: Vec<LatticeBlock> = blocks.blocks().iter().rev().take(2).copied().collect();
        if m % 2 == 1 {
            ok &= tail[0] == LatticeBlock::D4;
        } else {
            ok &= tail == [LatticeBlock::Zero1, LatticeBlock::Zero1];
        }
    }
    verdict(4, ok, "Milnor lattices have rank 6M-2 and mod-2 radical of dimension 2, M in [1, 20]");
    assert!(ok);
}

/// Brute-force count of 2x2 GF(2) matrices preserving pairing and q:
/// the independent oracle for the g = 1 group order.
fn brute_force_o_minus_2() -> u64 {
    let qs = monodromy_rep(1, DiagramStyle::Trigonal).unwrap().space().clone();
    let mut count = 0;
    for bits in 0u32..16 {
        let rows = vec![F2Vec::from_u32(2, bits & 3), F2Vec::from_u32(2, bits >> 2)];
        let m = F2Mat::from_rows(rows);
        if m.rank() != 2 {
            continue;
        }
        let preserves = (1u32..4).all(|vb| {
            let v = F2Vec::from_u32(2, vb);
            qs.q(&m.mul_vec(&v)) == qs.q(&v)
        });
        if preserves {
            count += 1;
        }
    }
    count
}

#[test]
fn criterion_05_full_orthogonal_group() {
    let g1 = full_orthogonal_check(1).unwrap();
    let brute = brute_force_o_minus_2();
    let ok1 = g1.ok() && g1.group_order == 6 && brute == 6 && g1.formula_order == 6;

    let g4 = full_orthogonal_check(4).unwrap();
    let ok4 = g4.ok() && g4.formula_order == orthogonal_group_order(4, g4.arf).unwrap();

    let ok = ok1 && ok4;
    verdict(5, ok, "monodromy generates the full orthogonal group: order 6 at g = 1 (brute-forced), formula order at g = 4");
    assert!(ok, "g1: {g1:?} (brute {brute}), g4: {g4:?}");
}

/// Optional long check: the same statement at g = 7 (14-dim space).
#[test]
#[ignore = "minutes-long: full group order at g = 7"]
fn criterion_05_optional_g7() {
    let out = full_orthogonal_check(7).unwrap();
    let ok = out.ok();
    verdict(5, ok, "optional g = 7 group order matches the closed form");
    assert!(ok, "{out:?}");
}

#[test]
fn criterion_06_bridge() {
    let mut ok = true;
    for g in [1u64, 4, 7] {
        let subst = generator_change(g).unwrap();
        for p in bridge_pairs(g).unwrap() {
            let left = Word::from_letters(vec![p.left.0 as i32, p.left.1 as i32]);
            let right = Word::from_letters(vec![p.right.0 as i32, p.right.1 as i32]);
            ok &= subst.apply(&left) == right;
        }
        ok &= subst.apply(&delta_words(g).unwrap().delta0) == reorder_word(g).unwrap();
        ok &= bridge_check(g).unwrap().ok();
    }
    verdict(6, ok, "pair identities, the reorder word, and the image Gram matrix all match, g in {1, 4, 7}");
    assert!(ok);
}

#[test]
fn criterion_07_centrality() {
    // As written: for g in {1, 4}, rho(delta0) and rho(delta1) commute, and
    // rho(delta0^3 delta1^3), rho(delta0^{2g+2}), rho(delta1^{2g+2}) commute
    // with every generator image.
    let mut all_ok = true;
    for g in [1u64, 4] {
        for c in centrality_checks(g).unwrap() {
            if matches!(c.name.as_str(), "equal(delta0,delta1)" | "identity(delta0^3)") {
                continue; // extra g = 1 facts, not part of the criterion
            }
            println!("  g={g} {}: {}", c.name, if c.ok { "ok" } else { "FAILS" });
            all_ok &= c.ok;
        }
    }
    verdict(7, all_ok, "delta0/delta1 commute and the three distinguished powers are central in the image");
    // The power checks cannot hold: delta0^{g+2} = 1 forces
    // rho(delta0^{2g+2}) = rho(delta0)^{-2}, a nonidentity element of a
    // group with trivial center (rho(delta0) has order exactly g+2).
    // The commutation and delta0^3*delta1^3 rows do hold; the criterion
    // fails honestly on the power rows.
    assert!(all_ok, "the ^{{2g+2}} power checks fail in the quotiented group; see the analysis in the test output");
}

#[test]
fn criterion_08_cokernels() {
    let mut rng = StdRng::seed_from_u64(DEFAULT_SEED);
    let mut ok = true;
    for g in 1i64..=30 {
        let total = g + 2;
        for m in 1..total {
            let n = total - m;
            if n <= m {
                continue;
            }
            let base = smith_normal_form(&IntMat::from_rows(&[&[-m, -n], &[m + 1, n + 1]])).unwrap();
            let expected = if n - m == 1 { vec![] } else { vec![n - m] };
            ok &= base.torsion() == expected;
            // third-column extensions with bottom entry 1 must not move it
            for _ in 0..3 {
                let a = rng.random_range(-50..=50i64);
                let b = rng.random_range(-50..=50i64);
                let ext = smith_normal_form(&IntMat::from_rows(&[
                    &[-m, -n, a],
                    &[m + 1, n + 1, b],
                    &[0, 0, 1],
                ]))
                .unwrap();
                ok &= ext.torsion() == base.torsion() && ext.rank() == base.rank() + 1;
            }
        }
    }
    verdict(8, ok, "Smith torsion of the scroll relation matrix is Z/(n-m), stable under bordering, g <= 30");
    assert!(ok);
}

#[test]
fn criterion_09_plucker() {
    let mut ok = true;
    for g in 1u64..=100 {
        let bc = branch_characteristics(g);
        ok &= bc.b == 8 * g as i64 + 10 && bc.cusps == 27 * g as i64 + 12;
    }

    // Veronese control: the adjunction oracle reproduces the 9-cuspidal,
    // 0-nodal sextic.
    let veronese = branch_characteristics_from(&SurfaceChern::veronese()).unwrap();
    ok &= veronese.b == 6 && veronese.cusps == 9 && veronese.nodes_oracle == 0;

    // the verbatim node formula disagrees (45 here); reports carry it as
    // info, never as a failure
    ok &= veronese.nodes_formula == 45;
    let report = plucker_report(4).unwrap();
    let nodes_row = report.checks().iter().find(|c| c.name == "nodes").unwrap();
    ok &= nodes_row.status == Status::Info && report.passed();

    // 200-case biduality suite
    let mut rng = StdRng::seed_from_u64(DEFAULT_SEED);
    let mut verified = 0;
    while verified < 200 {
        let degree = rng.random_range(2..=24i64);
        let room = (degree - 1) * (degree - 2) / 2;
        let nodes = rng.random_range(0..=room);
        let cusps = rng.random_range(0..=room - nodes);
        let curve = PluckerCurve::new(degree, nodes, cusps).unwrap();
        let Ok(dual) = plucker_dual(&curve) else {
            continue;
        };
        ok &= plucker_dual(&dual).unwrap() == curve;
        verified += 1;
    }

    verdict(9, ok, "b = 8g+10 and cusps = 27g+12 for g <= 100; Veronese control exact; duality involutive on 200 cases");
    assert!(ok);
}

/// Random mod-2 quadratic space: symmetric zero-diagonal Gram plus qdiag.
fn random_space(rng: &mut StdRng, dim: usize) -> QuadSpace {
    let mut gram = F2Mat::zeros(dim, dim);
    for i in 0..dim {
        for j in i + 1..dim {
            let bit = rng.random::<bool>();
            gram.set(i, j, bit);
            gram.set(j, i, bit);
        }
    }
    let mut qdiag = F2Vec::zeros(dim);
    for i in 0..dim {
        qdiag.set(i, rng.random::<bool>());
    }
    QuadSpace::new(gram, qdiag).unwrap()
}

#[test]
fn criterion_10_transvection_axioms() {
    let mut ok = true;

    // exhaustive on the diagram representations themselves
    for g in [1u64, 4] {
        for style in [DiagramStyle::Trigonal, DiagramStyle::Weierstrass] {
            let rep = ambient_rep(g, style).unwrap();
            for i in 1..=rep.ngens() {
                for j in 1..=rep.ngens() {
                    if i == j {
                        continue;
                    }
                    let (ti, tj) = (rep.generator(i), rep.generator(j));
                    let paired = rep.space().pairing(rep.vector(i), rep.vector(j));
                    let braids = ti.mul(tj).mul(ti) == tj.mul(ti).mul(tj);
                    let commutes = ti.mul(tj) == tj.mul(ti);
                    ok &= braids == paired && commutes == !paired;
                }
            }
        }
    }

    // random small instances over arbitrary forms
    let mut rng = StdRng::seed_from_u64(DEFAULT_SEED);
    for _ in 0..40 {
        let dim = rng.random_range(2..=6usize);
        let qs = random_space(&mut rng, dim);
        // q = 1 vectors outside the pairing radical: the transvection at a
        // radical vector is the identity and carries no braid information
        let vectors: Vec<F2Vec> = (1u32..1 << dim)
            .map(|bits| F2Vec::from_u32(dim, bits))
            .filter(|v| qs.q(v) && !qs.gram().mul_vec(v).is_zero())
            .collect();
        let taus: Vec<F2Mat> = vectors.iter().map(|v| transvection_matrix(&qs, v)).collect();
        for (v, t) in vectors.iter().zip(&taus) {
            ok &= t.mul(t).is_identity();
            ok &= (1u32..1 << dim).all(|bits| {
                let x = F2Vec::from_u32(dim, bits);
                qs.q(&t.mul_vec(&x)) == qs.q(&x)
            });
            ok &= t.mul_vec(v) == *v;
        }
        for (a, (va, ta)) in vectors.iter().zip(&taus).enumerate() {
            for (vb, tb) in vectors.iter().zip(&taus).skip(a + 1) {
                if va == vb {
                    continue;
                }
                let paired = qs.pairing(va, vb);
                let braids = ta.mul(tb).mul(ta) == tb.mul(ta).mul(tb);
                let commutes = ta.mul(tb) == tb.mul(ta);
                ok &= braids == paired && commutes == !paired;
            }
        }
    }

    verdict(10, ok, "braid iff pairing 1, commute iff pairing 0, and every transvection is a q-preserving involution");
    assert!(ok);
}

/// The verify command surfaces the same outcomes the criteria pin down:
/// everything passes except the two centrality power rows.
#[test]
fn verify_report_matches_acceptance_surface() {
    let r = verify_report(4, &VerifyCheck::ALL, DEFAULT_SEED).unwrap();
    let failing: Vec<&str> = r
        .checks()
        .iter()
        .filter(|c| c.status == Status::Fail)
        .map(|c| c.name.as_str())
        .collect();
    assert_eq!(failing, ["central(delta0^10)", "central(delta1^10)"]);
}
