use crate::cyclotomic::{binomial, gauss_sum, quantum_int, CycloNumber, Ring};

use super::InvariantError;

/// (σ, σ₋): positives minus negatives, and the number of negatives.
pub fn sigma_stats(framings: &[i64]) -> Result<(i64, i64), InvariantError> {
    if let Some(i) = framings.iter().position(|&f| f == 0) {
        return Err(InvariantError::ZeroFraming(i));
    }
    let neg = framings.iter().filter(|&&f| f < 0).count() as i64;
    let pos = framings.len() as i64 - neg;
    Ok((pos - neg, neg))
}

/// α(L) = (ξ^u+ξ^{-u})^m / (2G(ξ))^m · (-1)^{uσ+σ₋(ε-1)/2} · ξ^{3·8̄·ε·σ}.
pub fn alpha(framings: &[i64], ring: &Ring) -> Result<CycloNumber, InvariantError> {
    let (sigma, sigma_minus) = sigma_stats(framings)?;
    let m = framings.len() as u64;
    let u = ring.u() as i64;
    let eps = ring.epsilon() as i64;
    let num = (CycloNumber::xi_pow(ring, u) + CycloNumber::xi_pow(ring, -u)).pow(m);
    let den = gauss_sum(ring).scale_int(&2.into()).pow(m);
    let mut a = num.div(&den)?;
    if (u * sigma + sigma_minus * (eps - 1) / 2).rem_euclid(2) == 1 {
        a = -a;
    }
    Ok(a * CycloNumber::xi_pow(ring, 3 * ring.eight_bar() as i64 * eps * sigma))
}

/// Floating value of (√(1/p)·sin(π/2p))^m · exp(-2πi·3(p-1)/(8p))^σ as (re, im).
pub fn alpha_numeric(framings: &[i64], p: u32) -> Result<(f64, f64), InvariantError> {
    let (sigma, _) = sigma_stats(framings)?;
    let pf = p as f64;
    let modulus = ((1.0 / pf).sqrt() * (std::f64::consts::PI / (2.0 * pf)).sin()).powi(framings.len() as i32);
    let phase = -2.0 * std::f64::consts::PI * 3.0 * (pf - 1.0) / (8.0 * pf) * sigma as f64;
    Ok((modulus * phase.cos(), modulus * phase.sin()))
}

fn half(ring: &Ring) -> i64 {
    ring.half() as i64
}

fn check_n(n: i64, low: i64, ring: &Ring) -> Result<(), InvariantError> {
    if n < low || n > half(ring) {
        return Err(InvariantError::IndexOutOfRange { n, low, high: half(ring) });
    }
    Ok(())
}

/// S_n(f) = Σ_{k=n}^{p-n-1} (-1)^k [2k+1] ξ^{(k²+k)f/2} binom(k̃+n, k̃-n), k̃ = min(k, p-1-k),
/// for 0 ≤ n ≤ (p-1)/2.
pub fn s_term(n: i64, f: i64, ring: &Ring) -> Result<CycloNumber, InvariantError> {
    check_n(n, 0, ring)?;
    let p = ring.p() as i64;
    let mut acc = CycloNumber::zero(ring);
    for k in n..=p - n - 1 {
        let kt = k.min(p - 1 - k);
        let b = binomial(kt + n, kt - n);
        let mut t = (quantum_int(ring, 2 * k + 1) * CycloNumber::xi_pow(ring, (k * k + k) / 2 * f)).scale_int(&b);
        if k % 2 == 1 {
            t = -t;
        }
        acc = acc + t;
    }
    Ok(acc)
}

/// C_n(g) = Σ_{k=n}^{(p-1)/2} (-1)^k [2k] s^{(4k²-1)g} binom(k+n-1, k-n), checked
/// against the form with ξ-powers only; a mismatch is an internal error.
pub fn c_term(n: i64, g: i64, ring: &Ring) -> Result<CycloNumber, InvariantError> {
    let direct = c_term_direct(n, g, ring)?;
    if direct != c_term_rewritten(n, g, ring)? {
        return Err(InvariantError::FormMismatch { n, g });
    }
    Ok(direct)
}

pub(crate) fn c_term_direct(n: i64, g: i64, ring: &Ring) -> Result<CycloNumber, InvariantError> {
    check_n(n, 1, ring)?;
    let mut acc = CycloNumber::zero(ring);
    for k in n..=half(ring) {
        let b = binomial(k + n - 1, k - n);
        let mut t = (quantum_int(ring, 2 * k) * CycloNumber::s_pow(ring, (4 * k * k - 1) * g)).scale_int(&b);
        if k % 2 == 1 {
            t = -t;
        }
        acc = acc + t;
    }
    Ok(acc)
}

/// √−1^{-ε(g+1)} ξ^{εug} / (ξ^u+ξ^{-u}) · Σ_k (ξ^{-2εuk} - ξ^{2εuk}) ξ^{gk²} binom(k+n-1, k-n).
pub(crate) fn c_term_rewritten(n: i64, g: i64, ring: &Ring) -> Result<CycloNumber, InvariantError> {
    check_n(n, 1, ring)?;
    let u = ring.u() as i64;
    let eps = ring.epsilon() as i64;
    let mut acc = CycloNumber::zero(ring);
    for k in n..=half(ring) {
        let b = binomial(k + n - 1, k - n);
        let diff = CycloNumber::xi_pow(ring, -2 * eps * u * k) - CycloNumber::xi_pow(ring, 2 * eps * u * k);
        acc = acc + (diff * CycloNumber::xi_pow(ring, g * k * k)).scale_int(&b);
    }
    let pre = CycloNumber::i_pow(ring, -eps * (g + 1)) * CycloNumber::xi_pow(ring, eps * u * g);
    let den = CycloNumber::xi_pow(ring, u) + CycloNumber::xi_pow(ring, -u);
    Ok((pre * acc).div(&den)?)
}
