mod common;

use std::cmp::Ordering;
use std::fs;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use thinpos::bridge::{self, all_matchings, BridgeTrisection, Matching};
use thinpos::decomp::{self, catalog, DecompositionProfile, Level, LevelComponent, SplitData};
use thinpos::kirby::{self, smith_normal_form, AbelianGroup, IntegerMatrix, KirbyDiagram, TwoHandle};
use thinpos::trisect::{self, TrisectionDiagram};
use thinpos::WidthMultiset;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_multiset(rng: &mut ChaCha8Rng) -> Vec<u64> {
    let n = rng.gen_range(0..=12);
    (0..n).map(|_| rng.gen_range(0..=99)).collect()
}

/// Sort descending, pad with zeros to a common length, compare
/// lexicographically.
fn pad_lex(a: &[u64], b: &[u64]) -> Ordering {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_unstable_by(|x, y| y.cmp(x));
    b.sort_unstable_by(|x, y| y.cmp(x));
    let n = a.len().max(b.len());
    a.resize(n, 0);
    b.resize(n, 0);
    a.cmp(&b)
}

fn criterion_1() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..10_000 {
        let (xa, xb, xc) = (random_multiset(&mut rng), random_multiset(&mut rng), random_multiset(&mut rng));
        let (a, b, c) = (
            WidthMultiset::from_entries(xa.clone()),
            WidthMultiset::from_entries(xb.clone()),
            WidthMultiset::from_entries(xc.clone()),
        );
        let ab = a.compare(&b);
        ensure(ab == pad_lex(&xa, &xb), || format!("oracle disagrees on {a} vs {b}"))?;
        ensure(b.compare(&a) == ab.reverse(), || format!("not antisymmetric on {a}, {b}"))?;
        ensure(a.compare(&a) == Ordering::Equal, || format!("not reflexive on {a}"))?;
        if ab != Ordering::Greater && b.compare(&c) != Ordering::Greater {
            ensure(a.compare(&c) != Ordering::Greater, || format!("not transitive on {a}, {b}, {c}"))?;
        }
    }
    Ok("10000 triples".into())
}

fn random_component(rng: &mut ChaCha8Rng) -> LevelComponent {
    let hg = rng.gen_range(0..=5);
    if rng.gen_bool(0.3) {
        LevelComponent::unlinked(hg)
    } else {
        LevelComponent::linked(hg, rng.gen_range(0..=5), rng.gen_range(1..=4)).unwrap()
    }
}

fn random_profile(rng: &mut ChaCha8Rng, max_levels: usize) -> DecompositionProfile {
    let levels = (0..rng.gen_range(0..=max_levels))
        .map(|_| {
            let comps = (0..rng.gen_range(1..=3)).map(|_| random_component(rng)).collect();
            Level::new(rng.gen_range(0..=3), comps, rng.gen_range(0..=3)).unwrap()
        })
        .collect();
    DecompositionProfile::new("random", levels)
}

/// Width from scratch: per-component complexity summed per level, then
/// sorted.
fn width_oracle(p: &DecompositionProfile) -> Vec<u64> {
    let mut w: Vec<u64> = p
        .levels
        .iter()
        .map(|l| {
            l.components()
                .iter()
                .map(|c| match c.tunnel_number() {
                    Some(t) => 2 * t as u64 + 1,
                    None => (2 * c.heegaard_genus() as u64).saturating_sub(1),
                })
                .sum()
        })
        .collect();
    w.sort_unstable_by(|a, b| b.cmp(a));
    w
}

fn criterion_2() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..1000 {
        let p = random_profile(&mut rng, 8);
        let r = decomp::reverse(&p);
        ensure(decomp::width_of(&r) == decomp::width_of(&p), || format!("reverse changed width of {p:?}"))?;
        ensure(decomp::width_of(&r).entries() == width_oracle(&p).as_slice(), || format!("oracle width of {p:?}"))?;
    }
    Ok("1000 profiles".into())
}

fn criterion_3() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..1000 {
        let (pm, pn) = (random_profile(&mut rng, 8), random_profile(&mut rng, 8));
        let joined = decomp::concat_with_reversed(&pm, &pn);
        let mut expected = width_oracle(&pm);
        expected.extend(width_oracle(&pn));
        expected.sort_unstable_by(|a, b| b.cmp(a));
        ensure(decomp::width_of(&joined).entries() == expected.as_slice(), || "concat width".into())?;
        ensure(
            decomp::width_of(&joined) == decomp::width_of(&pm).union(&decomp::width_of(&pn)),
            || "concat is not the union".into(),
        )?;
    }
    let x = catalog::disk_bundle_double_profile(true, 1);
    ensure(x.width().entries() == [5, 5], || format!("D(X_1,n) width {}", x.width()))?;
    Ok("1000 pairs, D(X_{1,n}) = {5,5}".into())
}

fn criterion_4() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut done = 0;
    let mut attempts = 0;
    while done < 1000 {
        attempts += 1;
        if attempts > 100_000 {
            return Err("could not generate enough valid splits".into());
        }
        let p = random_profile(&mut rng, 8);
        if p.levels.is_empty() {
            continue;
        }
        let i = rng.gen_range(0..p.levels.len());
        let level = &p.levels[i];
        let j = rng.gen_range(0..level.components().len());
        let comp = &level.components()[j];
        let (Some(t_star), true) = (comp.tunnel_number(), comp.link_size() >= 2) else {
            continue;
        };
        let side = SplitData {
            component: j,
            hg_b: rng.gen_range(0..=4),
            t_b: rng.gen_range(0..=4),
            hg_a_surgered: rng.gen_range(0..=4),
            t_a: rng.gen_range(0..=4),
            link_size_b: rng.gen_range(1..comp.link_size()),
        };
        let c_i = level.complexity() as i64;
        let c_a = c_i + 2 * (side.hg_b as i64 - side.t_b as i64);
        let c_b = c_i + 2 * (side.hg_a_surgered as i64 - side.t_a as i64);
        let valid = t_star as i64 + side.hg_b as i64 - side.t_b as i64 >= 0
            && t_star as i64 + side.hg_a_surgered as i64 - side.t_a as i64 >= 0;
        let outcome = decomp::split_level(&p, i, &side);
        if !valid {
            ensure(outcome.is_err(), || "negative tunnel number accepted".into())?;
            continue;
        }
        let outcome = outcome.map_err(|e| format!("valid split rejected: {e}"))?;
        ensure(outcome.c_new_a as i64 == c_a && outcome.c_new_b as i64 == c_b, || "split complexities".into())?;
        let mut expected = width_oracle(&p);
        let pos = expected.iter().position(|&x| x as i64 == c_i).expect("c_i present");
        expected.remove(pos);
        expected.push(c_a as u64);
        expected.push(c_b as u64);
        expected.sort_unstable_by(|a, b| b.cmp(a));
        ensure(outcome.profile.width().entries() == expected.as_slice(), || "split width".into())?;
        done += 1;
    }
    Ok(format!("1000 splits ({attempts} draws)"))
}

fn criterion_5() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..1000 {
        let (m, n) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
        let a = IntegerMatrix::from_fn(m, n, |_, _| BigInt::from(rng.gen_range(-20..=20)));
        let s = smith_normal_form(&a);
        ensure(&(&s.u * &a) * &s.v == s.d, || format!("U A V != D for {a:?}"))?;
        ensure(s.u.determinant().abs().is_one() && s.v.determinant().abs().is_one(), || "U or V not unimodular".into())?;
        ensure(s.d.is_diagonal(), || "D not diagonal".into())?;
        let diag = s.diagonal();
        ensure(diag.iter().all(|x| !x.is_negative()), || "negative diagonal".into())?;
        for w in diag.windows(2) {
            let divides = if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() };
            ensure(divides, || format!("divisibility chain broken: {diag:?}"))?;
        }
    }
    Ok("1000 matrices up to 8x8".into())
}

fn group(free: usize, torsion: &[i64]) -> AbelianGroup {
    AbelianGroup::new(free, torsion.iter().map(|&t| BigInt::from(t)).collect()).unwrap()
}

fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> IntegerMatrix {
    let mut rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    for _ in 0..3 * n {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i == j {
            rows[i].iter_mut().for_each(|x| *x = -*x);
            continue;
        }
        let k = rng.gen_range(-2..=2);
        for c in 0..n {
            rows[i][c] += k * rows[j][c];
        }
    }
    IntegerMatrix::from_i64_rows(&rows).unwrap()
}

fn criterion_6() -> Check {
    for n in -10..=10i64 {
        let h = kirby::boundary_first_homology(&kirby::linear_plumbing(&[n])).map_err(|e| e.to_string())?;
        let expected = match n.abs() {
            0 => group(1, &[]),
            1 => group(0, &[]),
            m => group(0, &[m]),
        };
        ensure(h == expected, || format!("L({n},1): got {h}"))?;
    }
    for g in 1..=5u32 {
        for n in [-3, 0, 2] {
            let x = kirby::homology_of_2handlebody(&kirby::disk_bundle(true, g, n).unwrap()).unwrap();
            ensure(
                (x.h0.clone(), x.h1.clone(), x.h2.clone()) == (group(1, &[]), group(2 * g as usize, &[]), group(1, &[])),
                || format!("H_*(X_{g},{n}) = {x:?}"),
            )?;
            let y = kirby::homology_of_2handlebody(&kirby::disk_bundle(false, g, n).unwrap()).unwrap();
            ensure(
                (y.h0.clone(), y.h1.clone(), y.h2.clone()) == (group(1, &[]), group(g as usize - 1, &[2]), group(0, &[])),
                || format!("H_*(Y_{g},{n}) = {y:?}"),
            )?;
            let d = kirby::double(&kirby::disk_bundle(true, g, n).unwrap()).unwrap();
            let chi = kirby::euler_characteristic(&d);
            ensure(chi == 4 - 4 * g as i64, || format!("χ(D(X_{g},{n})) = {chi}"))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..100 {
        let k = rng.gen_range(1..=4);
        let mut handles: Vec<TwoHandle> = (0..k).map(|i| TwoHandle::new(format!("h{i}"), rng.gen_range(-5..=5))).collect();
        for i in 0..k {
            for j in i + 1..k {
                let lk = rng.gen_range(-3..=3);
                let id = handles[j].id.clone();
                handles[i].linking.insert(id, lk);
            }
        }
        let d = KirbyDiagram::new(1, vec![], handles, 0, 0).unwrap();
        let q = kirby::intersection_form(&kirby::double(&d).unwrap()).map_err(|e| e.to_string())?;
        let p = random_unimodular(&mut rng, 2 * k);
        let changed = &(&p.transpose() * &q.matrix) * &p;
        ensure(changed.determinant().abs().is_one(), || format!("double form not unimodular: {changed:?}"))?;
        ensure(changed.signature() == 0, || format!("double form has signature {}", changed.signature()))?;
    }
    Ok("lens spaces, S_g/N_g for g<=5, double χ, 100 double forms".into())
}

fn criterion_7() -> Check {
    let check = |d: &TrisectionDiagram, genus: usize, k: Option<[usize; 3]>, euler: i64, name: &str| {
        let r = trisect::validate_trisection(d);
        ensure(r.is_ok(), || format!("{name}: {:?}", r.diagnostics))?;
        ensure(r.genus == genus, || format!("{name}: genus {}", r.genus))?;
        if let Some(k) = k {
            ensure(r.k() == Some(k), || format!("{name}: k {:?}", r.k()))?;
        }
        ensure(r.euler == Some(euler), || format!("{name}: χ {:?}", r.euler))
    };
    check(&trisect::cp2(true), 1, Some([0, 0, 0]), 3, "CP2")?;
    check(&trisect::cp2(false), 1, Some([0, 0, 0]), 3, "-CP2")?;
    check(&trisect::s1xs3(), 1, Some([1, 1, 1]), 0, "S1xS3")?;
    check(&trisect::s4(), 0, Some([0, 0, 0]), 2, "S4")?;
    let mut gens = vec![trisect::s4(), trisect::s1xs3(), trisect::cp2(true), trisect::cp2(false)];
    for g in 1..=4u32 {
        let x = trisect::sphere_bundle_double_diagram(true, g, 0).map_err(|e| e.to_string())?;
        check(&x, 2 * g as usize + 2, None, 4 - 4 * g as i64, "D(X)")?;
        for n in [-1, 0, 3] {
            let y = trisect::sphere_bundle_double_diagram(false, g, n).map_err(|e| e.to_string())?;
            check(&y, g as usize + 2, None, 4 - 2 * g as i64, "D(Y)")?;
        }
        gens.push(x);
        gens.push(trisect::sphere_bundle_double_diagram(false, g, 1).unwrap());
    }
    let mut pairs = 0;
    for a in &gens {
        for b in &gens {
            let s = trisect::connected_sum(a, b).map_err(|e| e.to_string())?;
            let (ea, eb, es) = (
                trisect::validate_trisection(a).euler.unwrap(),
                trisect::validate_trisection(b).euler.unwrap(),
                trisect::validate_trisection(&s).euler,
            );
            ensure(es == Some(ea + eb - 2), || format!("χ of sum is {es:?}, summands {ea}, {eb}"))?;
            pairs += 1;
        }
    }
    Ok(format!("generators verified, {pairs} connected sums"))
}

/// Cycles of the permutation `m1 ∘ m2` on `2b` points.
fn cycle_count(m1: &Matching, m2: &Matching) -> usize {
    let n = 2 * m1.b();
    let mut seen = vec![false; n + 1];
    let mut count = 0;
    for s in 1..=n {
        if !seen[s] {
            count += 1;
            let mut p = s;
            while !seen[p] {
                seen[p] = true;
                p = m1.partner(m2.partner(p));
            }
        }
    }
    count
}

/// Euler characteristic from Betti numbers of the cell complex with the
/// endpoints as vertices, the arcs of all three tangles as edges, and one
/// disk on each closed curve of `θ_α ∪ θ_γ`.
fn cw_euler(bt: &BridgeTrisection) -> i64 {
    let b = bt.b;
    let n = 2 * b;
    let tangles = [&bt.theta_alpha, &bt.theta_beta, &bt.theta_gamma];
    let arcs: Vec<(usize, usize, usize)> = tangles
        .iter()
        .enumerate()
        .flat_map(|(t, m)| (1..=n).filter(move |&i| i < m.partner(i)).map(move |i| (t, i, m.partner(i))))
        .collect();
    let edge_index = |t: usize, i: usize, j: usize| arcs.iter().position(|&e| e == (t, i.min(j), i.max(j))).unwrap();
    let mut d1 = DMatrix::<f64>::zeros(n, arcs.len());
    for (e, &(_, i, j)) in arcs.iter().enumerate() {
        d1[(i - 1, e)] = -1.0;
        d1[(j - 1, e)] = 1.0;
    }
    // walk each α/γ cycle, recording signed edges
    let mut faces: Vec<Vec<(usize, f64)>> = Vec::new();
    let mut seen = vec![false; n + 1];
    for s in 1..=n {
        if seen[s] {
            continue;
        }
        let mut face = Vec::new();
        let mut p = s;
        loop {
            seen[p] = true;
            let q = bt.theta_alpha.partner(p);
            seen[q] = true;
            face.push((edge_index(0, p, q), if p < q { 1.0 } else { -1.0 }));
            let r = bt.theta_gamma.partner(q);
            face.push((edge_index(2, q, r), if q < r { 1.0 } else { -1.0 }));
            p = r;
            if p == s {
                break;
            }
        }
        faces.push(face);
    }
    let mut d2 = DMatrix::<f64>::zeros(arcs.len(), faces.len());
    for (f, face) in faces.iter().enumerate() {
        for &(e, s) in face {
            d2[(e, f)] += s;
        }
    }
    assert!((&d1 * &d2).iter().all(|x| x.abs() < 1e-9), "not a chain complex");
    let r1 = d1.rank(1e-9) as i64;
    let r2 = if faces.is_empty() { 0 } else { d2.rank(1e-9) as i64 };
    let (c0, c1, c2) = (n as i64, arcs.len() as i64, faces.len() as i64);
    let (b0, b1, b2) = (c0 - r1, c1 - r1 - r2, c2 - r2);
    b0 - b1 + b2
}

fn criterion_8() -> Check {
    let start = Instant::now();
    let mut pairs = 0;
    let mut triples = 0;
    for b in 1..=4 {
        let all = all_matchings(b);
        for x in &all {
            for y in &all {
                pairs += 1;
                let f = bridge::components_of_union(x, y).map_err(|e| e.to_string())?;
                ensure(2 * f == cycle_count(x, y), || format!("components of {x:?} ∪ {y:?}"))?;
                let bt = BridgeTrisection::new(x.clone(), x.clone(), y.clone(), true).unwrap();
                ensure(bridge::branch_surface_euler(&bt).unwrap() == cw_euler(&bt), || "CW Euler".into())?;
                let betas = if b <= 3 { &all[..] } else { std::slice::from_ref(x) };
                for beta in betas {
                    triples += 1;
                    let bt = BridgeTrisection::new(x.clone(), beta.clone(), y.clone(), true).unwrap();
                    let d = bridge::banded_link(&bt).unwrap();
                    ensure(d.bands.len() + f == b, || "|bands| + F != b".into())?;
                }
            }
        }
    }
    ensure(bridge::branched_cover_euler(2, 1, 1) == Ok(1), || "cover over a disk".into())?;
    ensure(bridge::branched_cover_euler(2, 1, 0) == Ok(2), || "cover over an annulus".into())?;
    let p = bridge::poincare_fixture();
    ensure(bridge::branch_surface_euler(&p) == Ok(0), || "worked example is not an annulus".into())?;
    ensure(bridge::boundary_links(&p).map(|l| l.at_one) == Ok(2), || "worked example boundary".into())?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!("{pairs} pairs, {triples} triples in {:.2?}", elapsed))
}

fn criterion_9() -> Check {
    let cases = common::width_one_catalog();
    for (name, profile) in &cases {
        let expected_len = name.strip_prefix("plumbing_").map_or(1, |k| k.parse::<usize>().unwrap());
        ensure(profile.width() == WidthMultiset::from_entries(vec![1; expected_len]), || {
            format!("{name}: width {}", profile.width())
        })?;
        let (code, out) = common::width_report(profile);
        ensure(code == 0, || format!("{name}: exit {code}"))?;
        let path = common::golden_dir().join(format!("{name}.json"));
        let golden = fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
        ensure(out == golden, || format!("{name}: report differs from golden file"))?;
    }
    Ok(format!("{} golden reports", cases.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("width order laws", criterion_1),
        ("reverse invariance", criterion_2),
        ("concat is union", criterion_3),
        ("split identity", criterion_4),
        ("smith normal form", criterion_5),
        ("kirby invariants", criterion_6),
        ("trisection generators", criterion_7),
        ("bridge suite", criterion_8),
        ("width-one catalog", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match f() {
            Ok(detail) => println!("PASS {} {name}: {detail} ({:.2?})", i + 1, start.elapsed()),
            Err(e) => {
                failed += 1;
                println!("FAIL {} {name}: {e}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
