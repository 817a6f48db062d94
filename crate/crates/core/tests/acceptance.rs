//! Acceptance criteria 1-10. Each criterion prints one PASS/FAIL line with its
//! runtime; the process exits nonzero when any criterion fails.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use qsu2::bracket::{contract, naive_bracket, slice, BracketEngine};
use qsu2::cyclotomic::{
    gauss_sum, in_z_half_xi, in_z_xi, init_ring, to_xi_basis, valuation_xi_minus_1, CycloNumber, Ring,
};
use qsu2::invariant::{c_term, parallels_instances, s_term, sigma_km, sigma_lemma23, tau_link, Route};
use qsu2::link::catalog::{catalog, lookup, reidemeister_pairs, skein_triples};
use qsu2::link::{cable, zero_frame_normalize, CohomClass, FramedLink, PdCode};

type Outcome = Result<String, String>;

fn ring(p: u32) -> Ring {
    init_ring(p).unwrap()
}

fn link(name: &str, f: &[i64]) -> FramedLink {
    lookup(name).unwrap().with_framings(f).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// Straight-line oracles.

fn qint(r: &Ring, n: i64) -> CycloNumber {
    let s = CycloNumber::s(r);
    let sinv = s.inverse().unwrap();
    (s.powi(n).unwrap() - sinv.powi(n).unwrap()).div(&(&s - &sinv)).unwrap()
}

fn choose(a: i64, b: i64) -> BigInt {
    if b < 0 || b > a {
        return BigInt::from(0);
    }
    (0..b).fold(BigInt::from(1), |acc, i| acc * (a - i) / (i + 1))
}

fn sign(k: i64) -> BigInt {
    BigInt::from(if k % 2 == 0 { 1 } else { -1 })
}

fn s_folded(r: &Ring, n: i64, f: i64) -> CycloNumber {
    let big_n = r.half() as i64;
    let xi = CycloNumber::xi(r);
    let mut acc = CycloNumber::zero(r);
    for k in n..=big_n {
        let w = if k < big_n { 2 } else { 1 };
        let t = qint(r, 2 * k + 1) * xi.powi((k * k + k) / 2 * f).unwrap();
        acc = acc + t.scale_int(&(choose(k + n, k - n) * sign(k) * w));
    }
    acc
}

fn c_direct(r: &Ring, n: i64, g: i64) -> CycloNumber {
    let s = CycloNumber::s(r);
    let mut acc = CycloNumber::zero(r);
    for k in n..=r.half() as i64 {
        let t = qint(r, 2 * k) * s.powi((4 * k * k - 1) * g).unwrap();
        acc = acc + t.scale_int(&(choose(k + n - 1, k - n) * sign(k)));
    }
    acc
}

fn classes(f: &[i64]) -> Vec<CohomClass> {
    let even: Vec<usize> = (0..f.len()).filter(|&i| f[i] % 2 == 0).collect();
    (0..1u32 << even.len())
        .map(|mask| {
            let members: Vec<usize> = even.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &i)| i).collect();
            CohomClass::new(f, &members).unwrap()
        })
        .collect()
}

fn route_cases(p: u32) -> Vec<(&'static str, Vec<i64>)> {
    let mut v = vec![
        ("unknot", vec![1]),
        ("unknot", vec![2]),
        ("unknot", vec![-3]),
        ("trefoil", vec![1]),
        ("trefoil", vec![2]),
    ];
    if p == 3 {
        v.push(("borromean", vec![2, 2, 2]));
    }
    v
}

fn criterion_1() -> Outcome {
    let engine = BracketEngine::default();
    for p in [3u32, 5] {
        let r = ring(p);
        let t = tau_link(&FramedLink::empty(), &CohomClass::trivial(), &r, Route::Both, &engine).map_err(|e| e.to_string())?;
        ensure(t.tau.is_one(), || format!("tau(empty) != 1 at p={p}"))?;
        for f in [1, -1] {
            let t = tau_link(&link("unknot", &[f]), &CohomClass::trivial(), &r, Route::Both, &engine)
                .map_err(|e| e.to_string())?;
            ensure(t.tau.is_one(), || format!("tau(unknot, {f}) = {} at p={p}", t.tau))?;
        }
    }
    Ok("tau(empty) = tau(unknot, +-1) = 1 for p in {3,5}".into())
}

fn criterion_2() -> Outcome {
    for p in [3u32, 5, 7, 11] {
        let r = ring(p);
        let g = gauss_sum(&r);
        let pi = p as i64;
        let xi = CycloNumber::xi(&r);
        let oracle = (0..pi).fold(CycloNumber::zero(&r), |acc, k| acc + xi.pow((k * k) as u64));
        ensure(g == oracle, || format!("gauss sum differs from direct sum at p={p}"))?;
        let expect = CycloNumber::from_integer(&r, if (p - 1) / 2 % 2 == 0 { pi } else { -pi });
        ensure(&g * &g == expect, || format!("G^2 wrong at p={p}"))?;
        let v = valuation_xi_minus_1(&g).map_err(|e| e.to_string())?;
        ensure(v == (p - 1) / 2, || format!("valuation {v} at p={p}"))?;
    }
    Ok("G^2 = (-1)^((p-1)/2) p and v(G) = (p-1)/2 for p in {3,5,7,11}".into())
}

fn criterion_3() -> Outcome {
    let mut count = 0;
    for p in [3u32, 5, 7] {
        let r = ring(p);
        let half = r.half() as i64;
        for f in (-6i64..=6).filter(|f| f.rem_euclid(p as i64) != 0) {
            for n in 1..=half {
                let v = s_term(n, f, &r).map_err(|e| e.to_string())?;
                ensure(v == s_folded(&r, n, f), || format!("S_{n}({f}) differs from the folded oracle at p={p}"))?;
                ensure(in_z_xi(&v), || format!("S_{n}({f}) not in Z[xi] at p={p}"))?;
                if !v.is_zero() {
                    let val = valuation_xi_minus_1(&v).map_err(|e| e.to_string())? as i64;
                    ensure(val >= half - n, || format!("v(S_{n}({f})) = {val} < {} at p={p}", half - n))?;
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} instances of S_n(f) in Z[xi] with v >= (p-1)/2 - n"))
}

fn criterion_4() -> Outcome {
    let mut count = 0;
    for p in [3u32, 5, 7] {
        let r = ring(p);
        let half = r.half() as i64;
        for g in (-6i64..=6).filter(|g| g.rem_euclid(p as i64) != 0) {
            for n in 1..=half {
                let c = c_term(n, g, &r).map_err(|e| e.to_string())?;
                ensure(c == c_direct(&r, n, g), || format!("C_{n}({g}) differs from the direct oracle at p={p}"))?;
                let v = CycloNumber::i_pow(&r, g + 1) * c;
                ensure(in_z_xi(&v), || format!("i^(g+1) C_{n}({g}) not in Z[xi] at p={p}"))?;
                if !v.is_zero() {
                    let val = valuation_xi_minus_1(&v).map_err(|e| e.to_string())? as i64;
                    ensure(val >= half - n + 1, || format!("v = {val} < {} for C_{n}({g}) at p={p}", half - n + 1))?;
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} instances of i^(g+1) C_n(g) in Z[xi] with v >= (p-1)/2 - n + 1; both forms agree"))
}

fn criterion_5() -> Outcome {
    let r = ring(3);
    let engine = BracketEngine::default();
    let mut count = 0;
    for name in ["unknot", "trefoil", "figure8", "borromean"] {
        let d = zero_frame_normalize(&lookup(name).unwrap().diagram);
        for (theta, n, cab) in parallels_instances(d.num_components(), &r) {
            let sizes: Vec<usize> = cab.iter().map(|&x| x as usize).collect();
            let cabled = cable(&d, &sizes).map_err(|e| e.to_string())?;
            let v = CycloNumber::i_pow(&r, theta.c() as i64 + 1) * engine.jones_v(&cabled, &r).map_err(|e| e.to_string())?;
            ensure(in_z_xi(&v), || format!("{name} cable {cab:?}: not in Z[xi]"))?;
            let bound = n.iter().sum::<i64>() - theta.c() as i64;
            if !v.is_zero() {
                let val = valuation_xi_minus_1(&v).map_err(|e| e.to_string())? as i64;
                ensure(val >= bound, || format!("{name} cable {cab:?}: v = {val} < {bound}"))?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} cables of unknot, trefoil, figure8, borromean at p=3 meet the parallels bound"))
}

fn criterion_6() -> Outcome {
    let engine = BracketEngine::default();
    let mut cases: Vec<PdCode> = Vec::new();
    for e in catalog() {
        cases.push(e.diagram.clone());
        if e.split {
            let z = zero_frame_normalize(&e.diagram);
            let m = z.num_components();
            for d in [vec![2; m], vec![1; m]] {
                cases.push(cable(&z, &d).map_err(|e| e.to_string())?);
            }
        }
    }
    let b = lookup("borromean").unwrap().diagram;
    for d in [[2, 1, 1], [0, 2, 1], [1, 2, 0], [2, 2, 0]] {
        cases.push(cable(&b, &d).map_err(|e| e.to_string())?);
    }
    for (_, x, y) in reidemeister_pairs() {
        cases.extend([x, y]);
    }
    for t in skein_triples() {
        cases.extend([t.plus, t.minus, t.zero]);
    }
    let small: Vec<&PdCode> = cases.iter().filter(|d| d.num_crossings() <= 20).collect();
    for d in &small {
        let sliced = contract(&slice(d), 64).map_err(|e| e.to_string())?;
        ensure(sliced == naive_bracket(d).map_err(|e| e.to_string())?, || format!("contraction differs: {}", d.canonical_text()))?;
    }
    for (name, x, y) in reidemeister_pairs() {
        let (bx, by) = (engine.bracket_mult(&x).map_err(|e| e.to_string())?, engine.bracket_mult(&y).map_err(|e| e.to_string())?);
        ensure(bx == by, || format!("{name}: brackets differ"))?;
    }
    for p in [3u32, 5] {
        let r = ring(p);
        for t in skein_triples() {
            let ok = engine.skein_check(&t.plus, &t.minus, &t.zero, &r).map_err(|e| e.to_string())?;
            ensure(ok, || format!("skein triple {} fails at p={p}", t.name))?;
        }
    }
    let unknot = PdCode::unlink(1);
    let trefoil = zero_frame_normalize(&lookup("trefoil").unwrap().diagram);
    let figure8 = zero_frame_normalize(&lookup("figure8").unwrap().diagram);
    let borromean = lookup("borromean").unwrap().diagram;
    let stored: Vec<(&str, &PdCode, Vec<usize>, Vec<usize>)> = vec![
        ("unknot", &unknot, vec![], vec![0]),
        ("trefoil", &trefoil, vec![], vec![0]),
        ("figure8", &figure8, vec![], vec![0]),
        ("borromean", &borromean, vec![2], vec![0, 1]),
        ("borromean", &borromean, vec![], vec![0, 1, 2]),
        ("borromean", &borromean, vec![0, 1], vec![2]),
    ];
    for (name, d, l1, l2) in &stored {
        let (_, e) = engine.double_parallel_divisibility(d, l1, l2).map_err(|e| e.to_string())?;
        ensure(e as usize >= l2.len(), || format!("{name}: exponent {e} < {}", l2.len()))?;
    }
    Ok(format!(
        "{} diagrams match the naive state sum; {} R2/R3 pairs; {} skein triples; {} double-parallel cases",
        small.len(),
        reidemeister_pairs().len(),
        skein_triples().len(),
        stored.len()
    ))
}

fn criteria_7_to_9() -> (Outcome, Outcome, Outcome, Duration) {
    let start = Instant::now();
    let engine = BracketEngine::default();
    let mut equal = 0;
    let mut route_err = None;
    let mut thm = 0;
    let mut thm_err = None;
    let mut integ = 0;
    let mut integ_err = None;
    for p in [3u32, 5] {
        let r = ring(p);
        let t = CycloNumber::xi(&r) - CycloNumber::one(&r);
        let i = CycloNumber::sqrt_minus_one(&r);
        for (name, f) in route_cases(p) {
            let l = link(name, &f);
            for theta in classes(&f) {
                let tag = format!("p={p} {name} f={f:?} theta={}", theta.label());
                let (a, b) = match (sigma_lemma23(&l, &theta, &r, &engine), sigma_km(&l, &theta, &r, &engine)) {
                    (Ok(a), Ok(b)) => (a, b),
                    (Err(e), _) | (_, Err(e)) => {
                        route_err.get_or_insert(format!("{tag}: {e}"));
                        continue;
                    }
                };
                if a == b {
                    equal += 1;
                } else {
                    route_err.get_or_insert(format!("{tag}: routes differ"));
                }
                let tau = match tau_link(&l, &theta, &r, Route::Lemma, &engine) {
                    Ok(rep) => rep.tau,
                    Err(e) => {
                        thm_err.get_or_insert(format!("{tag}: {e}"));
                        continue;
                    }
                };
                if theta.is_trivial() {
                    if in_z_half_xi(&tau) {
                        integ += 1;
                    } else {
                        integ_err.get_or_insert(format!("{tag}: tau not in Z[1/2,xi]"));
                    }
                } else {
                    let parity = theta.g_values().iter().sum::<i64>().rem_euclid(2);
                    let unit = if parity == 0 { t.clone() } else { &i * &t };
                    let quotient = tau.div(&unit).unwrap();
                    if to_xi_basis(&quotient).is_some() && in_z_half_xi(&quotient) {
                        thm += 1;
                    } else {
                        thm_err.get_or_insert(format!("{tag}: tau outside the parity-{parity} ideal"));
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let seven = match route_err {
        None => Ok(format!("{equal} (presentation, theta, p) cases with Lemma 2.3 sum = Kirby-Melvin sum")),
        Some(e) => Err(e),
    };
    let eight = match thm_err {
        None => Ok(format!("{thm} nontrivial classes with tau in the predicted (xi-1) ideal")),
        Some(e) => Err(e),
    };
    let nine = match integ_err {
        None => Ok(format!("{integ} trivial classes with tau in Z[1/2,xi]")),
        Some(e) => Err(e),
    };
    (seven, eight, nine, elapsed)
}

fn criterion_10() -> Outcome {
    let mut count = 0;
    let mut worst = 0.0f64;
    let values = [-3i64, -2, -1, 1, 2, 3];
    for p in [3u32, 5] {
        let r = ring(p);
        let pf = p as f64;
        for m in 0..=3u32 {
            for idx in 0..values.len().pow(m) {
                let f: Vec<i64> = (0..m).map(|j| values[idx / values.len().pow(j) % values.len()]).collect();
                let sigma: i64 = f.iter().map(|v| v.signum()).sum();
                let modulus = ((1.0 / pf).sqrt() * (std::f64::consts::PI / (2.0 * pf)).sin()).powi(m as i32);
                let phase = -2.0 * std::f64::consts::PI * 3.0 * (pf - 1.0) / (8.0 * pf) * sigma as f64;
                let (re, im) = qsu2::invariant::alpha(&f, &r).map_err(|e| e.to_string())?.to_complex();
                let err = (re - modulus * phase.cos()).hypot(im - modulus * phase.sin());
                worst = worst.max(err);
                ensure(err < 1e-9, || format!("p={p} f={f:?}: |alpha - numeric| = {err:e}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} framing vectors, max deviation {worst:.1e} < 1e-9"))
}

fn report(n: &str, outcome: Outcome, elapsed: Duration, budget: Duration) -> bool {
    let within = elapsed <= budget;
    let (ok, text) = match outcome {
        Ok(t) if within => (true, t),
        Ok(t) => (false, format!("{t}; runtime {:.2} s over budget {:.0} s", elapsed.as_secs_f64(), budget.as_secs_f64())),
        Err(e) => (false, e),
    };
    println!("criterion {n:>2}: {} ({:.3} s) {text}", if ok { "PASS" } else { "FAIL" }, elapsed.as_secs_f64());
    ok
}

fn timed(f: fn() -> Outcome) -> (Outcome, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn main() {
    let secs = Duration::from_secs;
    let mut ok = true;
    let (o, t) = timed(criterion_1);
    ok &= report("1", o, t, secs(1));
    let (o, t) = timed(criterion_2);
    ok &= report("2", o, t, secs(5));
    let (o, t) = timed(criterion_3);
    ok &= report("3", o, t, secs(60));
    let (o, t) = timed(criterion_4);
    ok &= report("4", o, t, secs(60));
    let (o, t) = timed(criterion_5);
    ok &= report("5", o, t, secs(600));
    let (o, t) = timed(criterion_6);
    ok &= report("6", o, t, secs(300));
    let (seven, eight, nine, t) = criteria_7_to_9();
    ok &= report("7", seven, t, secs(1800));
    ok &= report("8", eight, t, secs(1800));
    ok &= report("9", nine, t, secs(1800));
    let (o, t) = timed(criterion_10);
    ok &= report("10", o, t, secs(1));
    if !ok {
        std::process::exit(1);
    }
}
