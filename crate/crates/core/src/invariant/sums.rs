use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::bracket::BracketEngine;
use crate::cyclotomic::{binomial, quantum_int, CycloNumber, Ring};
use crate::link::{cable, zero_frame_normalize, CohomClass, FramedLink, PdCode};

use super::terms::{c_term, s_term};
use super::InvariantError;

/// Every vector in the product of the inclusive ranges, last index fastest.
pub(crate) fn grid(ranges: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::with_capacity(ranges.len())];
    for r in ranges {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                r.iter().map(move |&v| {
                    let mut next = prefix.clone();
                    next.push(v);
                    next
                })
            })
            .collect();
    }
    out
}

fn to_cable(d: &[i64]) -> Vec<usize> {
    d.iter().map(|&v| v as usize).collect()
}

/// Cable vectors of the Lemma 2.3 grid: 2n-1 on θ (n ≥ 1), 2n elsewhere (n ≥ 0).
pub fn lemma_grid(m: usize, theta: &CohomClass, ring: &Ring) -> Vec<Vec<i64>> {
    let half = ring.half() as i64;
    let ranges: Vec<Vec<i64>> =
        (0..m).map(|i| if theta.contains(i) { (1..=half).collect() } else { (0..=half).collect() }).collect();
    grid(&ranges)
}

/// Lemma 2.3 cable vector for a grid point.
pub fn lemma_cable(n: &[i64], theta: &CohomClass) -> Vec<i64> {
    n.iter().enumerate().map(|(i, &v)| if theta.contains(i) { 2 * v - 1 } else { 2 * v }).collect()
}

/// Σ(L) = [2]·2^c Σ_n (-1)^{Σn} V(L^{cable(n)}) ∏_{θ} C_{n_l}(g_l) ∏_{rest} S_{n_l}(f_l).
pub fn sigma_lemma23(
    link: &FramedLink,
    theta: &CohomClass,
    ring: &Ring,
    engine: &BracketEngine,
) -> Result<CycloNumber, InvariantError> {
    let m = link.num_components();
    if m == 0 {
        return Ok(CycloNumber::one(ring));
    }
    let framings = link.framings();
    let half = ring.half() as i64;
    // factor[i][n] is C_n(g_i) on θ and S_n(f_i) elsewhere.
    let mut factor: Vec<Vec<Option<CycloNumber>>> = Vec::with_capacity(m);
    for (i, &f) in framings.iter().enumerate() {
        let mut row = vec![None; half as usize + 1];
        for n in 0..=half {
            row[n as usize] = if theta.contains(i) {
                if n == 0 {
                    None
                } else {
                    Some(c_term(n, f / 2, ring)?)
                }
            } else {
                Some(s_term(n, f, ring)?)
            };
        }
        factor.push(row);
    }
    let zero_framed = zero_frame_normalize(link.diagram());
    let points = lemma_grid(m, theta, ring);
    let values: Vec<CycloNumber> = points
        .par_iter()
        .map(|n| {
            let d = to_cable(&lemma_cable(n, theta));
            Ok(engine.jones_v(&cable(&zero_framed, &d)?, ring)?)
        })
        .collect::<Result<_, InvariantError>>()?;
    let mut acc = CycloNumber::zero(ring);
    for (n, v) in points.iter().zip(values) {
        let mut t = v;
        for (i, &ni) in n.iter().enumerate() {
            t = t * factor[i][ni as usize].as_ref().expect("factor defined on the grid");
        }
        if n.iter().sum::<i64>() % 2 != 0 {
            t = -t;
        }
        acc = acc + t;
    }
    let pre = quantum_int(ring, 2).scale_int(&(num_bigint::BigInt::from(1) << theta.c()));
    Ok(pre * acc)
}

fn check_colors(k: &[i64], p: i64) -> Result<(), InvariantError> {
    match k.iter().position(|&c| c < 1 || c > p) {
        Some(i) => Err(InvariantError::ColorOutOfRange { component: i, color: k[i], p }),
        None => Ok(()),
    }
}

/// Chebyshev expansion of color k: (j, cable size k-1-2j, signed coefficient).
fn expansion(k: i64) -> Vec<(i64, i64, num_bigint::BigInt)> {
    (0..=(k - 1) / 2)
        .map(|j| {
            let b = binomial(k - 1 - j, j);
            (j, k - 1 - 2 * j, if j % 2 == 1 { -b } else { b })
        })
        .collect()
}

/// Framing twist and sign of one colored component: (-1)^{k-1} ζ^{(k²-1)f}.
fn twist(k: i64, f: i64, ring: &Ring) -> CycloNumber {
    let t = CycloNumber::zeta_pow(ring, (k * k - 1) * f);
    if k % 2 == 0 {
        -t
    } else {
        t
    }
}

fn bracket_values(
    zero_framed: &PdCode,
    cables: &BTreeSet<Vec<i64>>,
    ring: &Ring,
    engine: &BracketEngine,
) -> Result<Vec<(Vec<i64>, CycloNumber)>, InvariantError> {
    let list: Vec<&Vec<i64>> = cables.iter().collect();
    list.par_iter()
        .map(|d| {
            let b = engine.bracket_mult(&cable(zero_framed, &to_cable(d))?)?;
            Ok(((*d).clone(), b.evaluate_at_a(ring)))
        })
        .collect()
}

fn cable_set(colors: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    let mut set = BTreeSet::new();
    for k in colors {
        let ranges: Vec<Vec<i64>> = k.iter().map(|&c| expansion(c).into_iter().map(|(_, d, _)| d).collect()).collect();
        set.extend(grid(&ranges));
    }
    set
}

fn jones_from_table(
    link: &FramedLink,
    k: &[i64],
    table: &std::collections::BTreeMap<Vec<i64>, CycloNumber>,
    ring: &Ring,
) -> CycloNumber {
    let exps: Vec<Vec<(i64, i64, num_bigint::BigInt)>> = k.iter().map(|&c| expansion(c)).collect();
    let idx: Vec<Vec<i64>> = exps.iter().map(|e| (0..e.len() as i64).collect()).collect();
    let mut acc = CycloNumber::zero(ring);
    for js in grid(&idx) {
        let mut coeff = num_bigint::BigInt::from(1);
        let mut d = Vec::with_capacity(k.len());
        for (i, &j) in js.iter().enumerate() {
            let (_, size, c) = &exps[i][j as usize];
            coeff *= c;
            d.push(*size);
        }
        acc = acc + table[&d].scale_int(&coeff);
    }
    for (&c, &f) in k.iter().zip(link.framings()) {
        acc = acc * twist(c, f, ring);
    }
    acc
}

/// Colored Jones polynomial J(L, k) by Chebyshev cabling of the zero-framed
/// diagram, with the per-component factor (-1)^{k-1} ζ^{(k²-1)f}.
pub fn colored_jones_km(
    link: &FramedLink,
    k: &[i64],
    ring: &Ring,
    engine: &BracketEngine,
) -> Result<CycloNumber, InvariantError> {
    if k.len() != link.num_components() {
        return Err(InvariantError::ColorLength { got: k.len(), m: link.num_components() });
    }
    check_colors(k, ring.p() as i64)?;
    let zero_framed = zero_frame_normalize(link.diagram());
    let table = bracket_values(&zero_framed, &cable_set(&[k.to_vec()]), ring, engine)?.into_iter().collect();
    Ok(jones_from_table(link, k, &table, ring))
}

/// Color vectors of the Kirby-Melvin sum for θ: even colors on θ, odd elsewhere.
pub fn km_colors(m: usize, theta: &CohomClass, p: i64) -> Vec<Vec<i64>> {
    let ranges: Vec<Vec<i64>> = (0..m)
        .map(|i| {
            let start = if theta.contains(i) { 2 } else { 1 };
            (start..=p).step_by(2).collect()
        })
        .collect();
    grid(&ranges)
}

/// Σ(L) = Σ_k 2^{|T_k|} [k] J(L, k) over colors with even sublink L_θ, [k] = ∏[k_i].
pub fn sigma_km(
    link: &FramedLink,
    theta: &CohomClass,
    ring: &Ring,
    engine: &BracketEngine,
) -> Result<CycloNumber, InvariantError> {
    let m = link.num_components();
    if m == 0 {
        return Ok(CycloNumber::one(ring));
    }
    let p = ring.p() as i64;
    let colors = km_colors(m, theta, p);
    let zero_framed = zero_frame_normalize(link.diagram());
    let table = bracket_values(&zero_framed, &cable_set(&colors), ring, engine)?.into_iter().collect();
    let mut acc = CycloNumber::zero(ring);
    for k in &colors {
        let below = k.iter().filter(|&&c| c < p).count();
        let qk = k.iter().fold(CycloNumber::one(ring), |a, &c| a * quantum_int(ring, c));
        let term = qk * jones_from_table(link, k, &table, ring);
        acc = acc + term.scale_int(&(num_bigint::BigInt::from(1) << below));
    }
    Ok(acc)
}
