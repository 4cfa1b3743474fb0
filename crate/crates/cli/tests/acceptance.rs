//! One line per acceptance criterion; exits nonzero if any fails.

mod support;

use std::process::Command as Process;
use std::sync::Arc;
use std::time::Instant;

use supercochain::crossed::ch_cohomology_table;
use supercochain::random::Sampler;
use supercochain::{
    ch_bracket, ch_bracket_closed_form, ch_mc_residual, check_crossed, circ, d_d_matrix, del_pi_rho, f_membership,
    graph_check, koszul_k, koszul_sign, linear_ch_check, linear_triple_check, mc_residual, nr_bracket,
    triple_coboundary_matrix, triple_cohomology_table, BlockShape, ChDeformation, Cochain, ComplexBasis,
    CrossedHom, DirectSum, GradedSpace, LieSupActTriple, LinearMap, Parity, Permutation, Scalar, Side,
    TripleCochain, TripleDeformation,
};
use supercochain_cli::Report;
use support::oracle::Oracle;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: String) -> Outcome {
    Outcome { passed, detail }
}

fn sign(odd: bool) -> Scalar {
    Scalar::from_integer(if odd { (-1).into() } else { 1.into() })
}

fn zero() -> Scalar {
    Scalar::from_integer(0.into())
}

fn homogeneous(s: &mut Sampler, v: &Arc<GradedSpace>) -> (Cochain, usize, Parity) {
    loop {
        let arity = 1 + s.below(3);
        let p = s.parity();
        let c = s.cochain(v, arity, Some(p));
        if !c.is_zero() {
            return (c, arity - 1, p);
        }
    }
}

fn small_space(s: &mut Sampler) -> Arc<GradedSpace> {
    let (p, q) = [(1, 1), (2, 1), (1, 2), (2, 2), (2, 0), (0, 2)][s.below(6)];
    Arc::new(GradedSpace::with_dims("e", p, q))
}

/// A random element of 𝔉 drawn from one block; `mixed` selects an
/// `h`-valued block.
fn member(s: &mut Sampler, sum: &DirectSum, mixed: bool) -> (Cochain, usize) {
    loop {
        let arity = 1 + s.below(2);
        let shape = if mixed {
            let j = 1 + s.below(arity);
            BlockShape::new(arity - j, j, Side::H)
        } else {
            BlockShape::new(arity, 0, Side::G)
        };
        let p = s.parity();
        let c = s.block(sum, shape, Some(p)).hat_extend(sum);
        if !c.is_zero() {
            return (c, arity - 1);
        }
    }
}

fn criterion_1() -> Outcome {
    let mut s = Sampler::new(101);
    let mut bad = 0;
    let cases = 1000;
    for _ in 0..cases {
        let n = 1 + s.below(6);
        let (a, b) = (s.permutation(n), s.permutation(n));
        let xs = s.parities(n);
        let ab = a.compose(&b);
        let moved = a.act_inverse(&xs);
        let k = koszul_k(&ab, &xs).unwrap() % 2;
        let k2 = (koszul_k(&a, &xs).unwrap() + koszul_k(&b, &moved).unwrap()) % 2;
        let e = koszul_sign(&ab, &xs).unwrap();
        let e2 = koszul_sign(&a, &xs).unwrap() * koszul_sign(&b, &moved).unwrap();
        // Pairwise product over inverted pairs, each giving −(−1)^{|a||b|}.
        let brute = |p: &Permutation| {
            let im = p.images();
            let mut s = 1;
            for i in 0..n {
                for j in i + 1..n {
                    if im[i] > im[j] {
                        s *= if xs[im[i]].is_odd() && xs[im[j]].is_odd() { 1 } else { -1 };
                    }
                }
            }
            s
        };
        if k != k2 || e != e2 || e != brute(&ab) {
            bad += 1;
        }
    }
    outcome(bad == 0, format!("{cases} (σ, σ′, X) with n ≤ 6, {bad} failures"))
}

fn criterion_2() -> Outcome {
    let mut s = Sampler::new(202);
    let cases = 200;
    let mut bad = 0;
    for _ in 0..cases {
        let v = small_space(&mut s);
        let (f, n1, p1) = homogeneous(&mut s, &v);
        let (g, n2, p2) = homogeneous(&mut s, &v);
        let (h, n3, p3) = homogeneous(&mut s, &v);
        let c = |a: &Cochain, b: &Cochain| circ(a, b).unwrap();
        let b = |a: &Cochain, b: &Cochain| nr_bracket(a, b).unwrap();
        let tw = |n: usize, m: usize, p: Parity, q: Parity| sign((n * m) % 2 == 1) * sign((p * q).is_odd());
        // (f∘g)∘h − f∘(g∘h) is graded symmetric in g, h.
        let pre_lie = c(&c(&f, &g), &h).sub(&c(&f, &c(&g, &h))).unwrap()
            == c(&c(&f, &h), &g).sub(&c(&f, &c(&h, &g))).unwrap().scale(&tw(n2, n3, p2, p3));
        let anti = b(&f, &g) == b(&g, &f).scale(&-tw(n1, n2, p1, p2));
        let jacobi =
            b(&f, &b(&g, &h)) == b(&b(&f, &g), &h).add(&b(&g, &b(&f, &h)).scale(&tw(n1, n2, p1, p2))).unwrap();
        if !(pre_lie && anti && jacobi) {
            bad += 1;
        }
    }
    outcome(bad == 0, format!("{cases} homogeneous triples on dims ≤ (2|2), arity ≤ 3, {bad} failures"))
}

fn criterion_3() -> Outcome {
    let mut s = Sampler::new(303);
    let cases = 200;
    let mut bad = 0;
    let mut seen = [0; 3];
    for i in 0..cases {
        let sum = DirectSum::new(s.space(2, 1, "x"), s.space(1, 2, "u"));
        let case = i % 3;
        let (f, _) = member(&mut s, &sum, case == 2);
        let (g, _) = member(&mut s, &sum, case >= 1);
        seen[case] += 1;
        if !f_membership(&sum, &nr_bracket(&f, &g).unwrap()) {
            bad += 1;
        }
    }
    let detail = format!(
        "{cases} pairs (g-g {}, g-mixed {}, mixed-mixed {}), {bad} outside 𝔉",
        seen[0], seen[1], seen[2]
    );
    outcome(bad == 0, detail)
}

fn criterion_4() -> Outcome {
    let mut s = Sampler::new(404);
    let (mut valid, mut perturbed, mut bad, mut broken) = (0, 0, 0, 0);
    while valid < 50 || perturbed < 50 {
        let t = s.valid_triple();
        if valid < 50 {
            valid += 1;
            if !t.check().passed() || !mc_residual(&t).unwrap().is_zero() {
                bad += 1;
            }
        }
        if perturbed < 50 {
            if let Some(p) = s.perturb(&t) {
                perturbed += 1;
                let axioms = p.check().passed();
                broken += !axioms as usize;
                if axioms != mc_residual(&p).unwrap().is_zero() {
                    bad += 1;
                }
            }
        }
    }
    let detail = format!("{valid} valid, {perturbed} perturbed ({broken} break an axiom), {bad} disagreements");
    outcome(bad == 0, detail)
}

fn criterion_5() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for (name, p) in support::fixtures() {
        let t = support::triple(&p);
        if !t.check().passed() {
            continue;
        }
        for n in 1..=3 {
            let a = triple_coboundary_matrix(&t, n);
            let b = triple_coboundary_matrix(&t, n + 1);
            ok &= b.mul(&a).unwrap().is_zero();
        }
        let mut checked = "∂²";
        if let Some(d) = support::crossed(&p) {
            for n in 1..=3 {
                let a = d_d_matrix(&d, n).unwrap();
                let b = d_d_matrix(&d, n + 1).unwrap();
                ok &= b.mul(&a).unwrap().is_zero();
            }
            checked = "∂², d_D²";
        }
        notes.push(format!("{name}: {checked}"));
    }

    let mut s = Sampler::new(505);
    let pairs = 200;
    let (mut bad_pi, mut bad_pr) = (0, 0);
    for _ in 0..pairs {
        let t = s.valid_triple();
        let sum = t.sum();
        let pi = t.mc_element();
        let m1 = s.coin(0.5);
        let m2 = s.coin(0.5);
        let (f, n) = member(&mut s, sum, m1);
        let (g, _) = member(&mut s, sum, m2);
        let d = |c: &Cochain| nr_bracket(&pi, c).unwrap();
        let lhs = d(&nr_bracket(&f, &g).unwrap());
        let rhs = nr_bracket(&d(&f), &g).unwrap().add(&nr_bracket(&f, &d(&g)).unwrap().scale(&sign(n % 2 == 1))).unwrap();
        bad_pi += (lhs != rhs) as usize;
    }
    let bracketed = bracketed_triples();
    for i in 0..pairs {
        let t = &bracketed[i % bracketed.len()];
        let (f1, m, _) = g_to_h(&mut s, t, 2);
        let (f2, _, _) = g_to_h(&mut s, t, 1);
        let d = |f: &Cochain| del_pi_rho(t, f).unwrap();
        let b = |a: &Cochain, c: &Cochain| ch_bracket(t, a, c).unwrap();
        let lhs = d(&b(&f1, &f2));
        let rhs = b(&d(&f1), &f2).add(&b(&f1, &d(&f2)).scale(&sign(m % 2 == 1))).unwrap();
        bad_pr += (lhs != rhs) as usize;
    }
    ok &= bad_pi == 0 && bad_pr == 0;
    let detail = format!(
        "n = 1..3 on [{}]; derivation law {pairs} pairs for ∂_Π ({bad_pi} failures) and ∂_(π+ρ) ({bad_pr} failures)",
        notes.join("; ")
    );
    outcome(ok, detail)
}

fn bracketed_triples() -> Vec<Arc<LieSupActTriple>> {
    support::fixtures()
        .into_iter()
        .map(|(_, p)| support::triple(&p))
        .filter(|t| t.check().passed() && t.h().entries().next().is_some())
        .collect()
}

fn g_to_h(s: &mut Sampler, t: &LieSupActTriple, max_arity: usize) -> (Cochain, usize, Parity) {
    let arity = 1 + s.below(max_arity);
    let p = s.parity();
    (s.cochain_between(t.g().space(), t.h().space(), arity, Some(p)), arity, p)
}

fn criterion_6() -> Outcome {
    let small: Vec<Arc<LieSupActTriple>> = support::fixtures()
        .into_iter()
        .map(|(_, p)| support::triple(&p))
        .filter(|t| {
            let (g, h) = (t.g().space().dims(), t.h().space().dims());
            t.check().passed() && g.0 <= 2 && g.1 <= 1 && h.0 <= 2 && h.1 <= 2
        })
        .collect();
    let mut s = Sampler::new(606);
    let cases = 500;
    let (mut bad, mut crossed) = (0, 0);
    for i in 0..cases {
        let t = &small[i % small.len()];
        let map = if s.coin(0.5) {
            s.even_map(t.g().space(), t.h().space())
        } else {
            // Small entries so that some candidates land on crossed maps.
            let mut m = LinearMap::zero(t.g().space().clone(), t.h().space().clone());
            for c in 0..t.g().dim() {
                for r in 0..t.h().dim() {
                    if t.g().space().parity(c) == t.h().space().parity(r) {
                        m.set_entry(r, c, Scalar::from_integer((s.below(3) as i64 - 1).into()));
                    }
                }
            }
            m
        };
        let d = CrossedHom::candidate(t.clone(), map).unwrap();
        let by_def = check_crossed(&d).passed();
        crossed += by_def as usize;
        if by_def != graph_check(&d) || by_def != ch_mc_residual(&d).unwrap().is_zero() {
            bad += 1;
        }
    }
    let detail = format!(
        "{cases} candidates over {} fixtures ({crossed} crossed), {bad} disagreements",
        small.len()
    );
    outcome(bad == 0, detail)
}

fn total_dim(sum: &DirectSum, crossed: bool) -> usize {
    (1..=4)
        .map(|n| if crossed { ComplexBasis::crossed(sum, n).dim() } else { ComplexBasis::triple(sum, n).dim() })
        .sum()
}

fn criterion_7() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for (name, p) in support::fixtures() {
        let t = support::triple(&p);
        if !t.check().passed() {
            continue;
        }
        let oracle = Oracle::new(t.g(), t.h());
        let as_pairs = |v: Vec<supercochain::ParityDims>| v.into_iter().map(|d| (d.even, d.odd)).collect::<Vec<_>>();
        if total_dim(t.sum(), false) <= 300 {
            let omega = oracle.structure(t.g(), t.h(), t.rho(), true);
            let self_ok = oracle.squares_to_zero(&omega, 1, false) && oracle.squares_to_zero(&omega, 2, false);
            let want = oracle.cohomology(&omega, 3, false);
            let got = as_pairs(triple_cohomology_table(&t, 3).unwrap());
            ok &= self_ok && want == got;
            notes.push(format!("{name} triple {got:?}{}", if want == got { "" } else { " MISMATCH" }));
            let golden = support::crate_dir().join(format!("fixtures/golden/{name}.cohomology.json"));
            if let Ok(text) = std::fs::read_to_string(golden) {
                let rows = Report::from_json(&text).unwrap().cohomology.unwrap().rows;
                let table: Vec<_> = rows.iter().map(|r| (r.even.unwrap(), r.odd.unwrap())).collect();
                ok &= table == want;
                if table != want {
                    notes.push(format!("{name} golden table MISMATCH {table:?}"));
                }
            }
        } else {
            notes.push(format!("{name} triple skipped (dim > 300)"));
        }
        if let Some(d) = support::crossed(&p) {
            if total_dim(t.sum(), true) <= 300 {
                let omega = oracle.twisted(t.g(), t.h(), t.rho(), d.map());
                let self_ok = oracle.squares_to_zero(&omega, 1, true) && oracle.squares_to_zero(&omega, 2, true);
                let want = oracle.cohomology(&omega, 3, true);
                let got = as_pairs(ch_cohomology_table(&d, 3).unwrap());
                ok &= self_ok && want == got;
                notes.push(format!("{name} crossed {got:?}{}", if want == got { "" } else { " MISMATCH" }));
            }
        }
    }
    outcome(ok, format!("H¹..H³ (even, odd): {}", notes.join("; ")))
}

fn even_part(v: &[Scalar], parities: &[Parity]) -> Vec<Scalar> {
    v.iter().zip(parities).map(|(x, p)| if p.is_odd() { zero() } else { x.clone() }).collect()
}

fn criterion_8() -> Outcome {
    let mut s = Sampler::new(808);
    let (mut cocycles, mut non, mut bad) = ([0; 2], [0; 2], 0);
    for (_, p) in support::fixtures() {
        let t = support::triple(&p);
        if !t.check().passed() {
            continue;
        }
        let m = triple_coboundary_matrix(&t, 2);
        let parities = ComplexBasis::triple(t.sum(), 2).parities().to_vec();
        let verdict = |coords: &[Scalar]| {
            let (pi1, rho1, mu1) = TripleCochain::from_coords(&t, 2, coords).unwrap().to_structure(&t).unwrap();
            let by_check = linear_triple_check(&t, &pi1, &rho1, &mu1).unwrap();
            let def = TripleDeformation::linear((*t).clone(), pi1, rho1, mu1).unwrap();
            (by_check, def.residual(1).unwrap().is_zero())
        };
        for v in m.kernel_basis() {
            let v = even_part(&v, &parities);
            if v.iter().all(|x| *x == zero()) {
                continue;
            }
            cocycles[0] += 1;
            bad += (verdict(&v) != (true, true)) as usize;
        }
        let mut found = 0;
        for _ in 0..200 {
            if found == 5 {
                break;
            }
            let v: Vec<Scalar> = parities.iter().map(|q| if q.is_odd() { zero() } else { s.scalar() }).collect();
            if m.mul_vec(&v).unwrap().iter().all(|x| *x == zero()) {
                continue;
            }
            found += 1;
            non[0] += 1;
            bad += (verdict(&v) != (false, false)) as usize;
        }

        let Some(d) = support::crossed(&p) else { continue };
        let m = d_d_matrix(&d, 1).unwrap();
        let parities = ComplexBasis::crossed(t.sum(), 1).parities().to_vec();
        let dh = t.h().dim();
        let as_map = |coords: &[Scalar]| {
            let images: Vec<Vec<Scalar>> = coords.chunks(dh).map(<[Scalar]>::to_vec).collect();
            LinearMap::from_images(t.g().space().clone(), t.h().space().clone(), &images).unwrap()
        };
        let verdict = |coords: &[Scalar]| {
            let d1 = as_map(coords);
            let by_check = linear_ch_check(&d, &d1).unwrap();
            let def = ChDeformation::linear(d.clone(), d1).unwrap();
            (by_check, def.residual(1).unwrap().is_zero())
        };
        for v in m.kernel_basis() {
            let v = even_part(&v, &parities);
            if v.iter().all(|x| *x == zero()) {
                continue;
            }
            cocycles[1] += 1;
            bad += (verdict(&v) != (true, true)) as usize;
        }
        let mut found = 0;
        for _ in 0..200 {
            if found == 10 {
                break;
            }
            let v: Vec<Scalar> = parities.iter().map(|q| if q.is_odd() { zero() } else { s.scalar() }).collect();
            if m.mul_vec(&v).unwrap().iter().all(|x| *x == zero()) {
                continue;
            }
            found += 1;
            non[1] += 1;
            bad += (verdict(&v) != (false, false)) as usize;
        }
    }
    let passed = bad == 0 && non[0] >= 20 && non[1] >= 20;
    let detail = format!(
        "triple: {} kernel cocycles, {} non-cocycles; crossed: {} kernel cocycles, {} non-cocycles; {bad} wrong verdicts",
        cocycles[0], non[0], cocycles[1], non[1]
    );
    outcome(passed, detail)
}

fn criterion_9() -> Outcome {
    let mut s = Sampler::new(909);
    let triples = bracketed_triples();
    let cases = 200;
    let (mut bad, mut nonzero) = (0, 0);
    for i in 0..cases {
        let t = &triples[i % triples.len()];
        let (f1, _, _) = g_to_h(&mut s, t, 2);
        let (f2, _, _) = g_to_h(&mut s, t, 2);
        let by_def = ch_bracket(t, &f1, &f2).unwrap();
        nonzero += !by_def.is_zero() as usize;
        bad += (by_def != ch_bracket_closed_form(t, &f1, &f2).unwrap()) as usize;
    }
    outcome(bad == 0, format!("{cases} pairs ({nonzero} with nonzero bracket), {bad} mismatches"))
}

fn criterion_10() -> Outcome {
    let dir = support::crate_dir();
    let mut goldens: Vec<_> = std::fs::read_dir(dir.join("fixtures/golden"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    goldens.sort();
    let mut bad = Vec::new();
    for g in &goldens {
        let stem = g.file_stem().unwrap().to_string_lossy().into_owned();
        let (fixture, command) = stem.split_once('.').unwrap();
        let run = || {
            Process::new(env!("CARGO_BIN_EXE_supercochain"))
                .current_dir(&dir)
                .args([command, &format!("fixtures/{fixture}.json"), "--format", "json", "--seed", "1"])
                .output()
                .unwrap()
                .stdout
        };
        let (a, b) = (run(), run());
        let golden = std::fs::read(g).unwrap();
        let text = String::from_utf8(a.clone()).unwrap();
        let round_trip = Report::from_json(&text).map(|r| r.to_json() == text).unwrap_or(false);
        if a != b || a != golden || !round_trip {
            bad.push(stem);
        }
    }
    let detail = format!("{} golden reports run twice, {} differ {:?}", goldens.len(), bad.len(), bad);
    outcome(bad.is_empty(), detail)
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("sign laws", criterion_1),
        ("pre-Lie, antisymmetry, Jacobi", criterion_2),
        ("𝔉-closure", criterion_3),
        ("triple Maurer-Cartan equivalence", criterion_4),
        ("differentials square to zero, derivation laws", criterion_5),
        ("crossed homomorphism three-way equivalence", criterion_6),
        ("cohomology against brute-force oracle", criterion_7),
        ("deformation iff-theorems", criterion_8),
        ("closed form of the crossed bracket", criterion_9),
        ("CLI determinism", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = f();
        failed += !o.passed as usize;
        println!(
            "criterion {:>2} [{}] {name}: {} ({:.1}s)",
            i + 1,
            if o.passed { "PASS" } else { "FAIL" },
            o.detail,
            start.elapsed().as_secs_f64()
        );
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
