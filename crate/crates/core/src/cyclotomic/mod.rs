//! Exact arithmetic in the cyclotomic field Q(ζ), ζ a primitive 8p-th root of
//! unity, together with the subfield Q(ξ), ξ = ζ⁸, and divisibility by the
//! prime element ξ - 1.
//!
//! All the roots of unity the invariant needs live here:
//! ξ = ζ⁸, q = ζ⁴, s = ζ², √−1 = ζ^{2p} and the bracket variable A = ζ^{-1}.

mod linalg;
mod number;
mod poly;
mod ring;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub use number::CycloNumber;
pub use ring::{Ring, RingParams};


#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycloError {
    #[error("p = {0} is not an odd prime")]
    BadPrime(i64),
    #[error("division by zero in the cyclotomic field")]
    DivisionByZero,
    #[error("infinite valuation: the element is zero")]
    InfiniteValuation,
    #[error("element is not in Z[1/2, xi]")]
    NotInZHalfXi,
    #[error("valuation search exceeded the safety cap of {0} divisions")]
    ValuationCap(u32),
}

/// Initializes the field for the odd prime `p`.
pub fn init_ring(p: u32) -> Result<Ring, CycloError> {
    RingParams::new(p)
}

/// Quantum integer [n] = (sⁿ - s⁻ⁿ) / (s - s⁻¹) = (A^{2n} - A^{-2n}) / (A² - A⁻²).
///
/// Evaluated as the finite geometric sum s^{n-1} + s^{n-3} + … + s^{1-n}, so no
/// inversion is needed. [2p] = 0 and [n] = -[-n].
pub fn quantum_int(ring: &Ring, n: i64) -> CycloNumber {
    if n == 0 {
        return CycloNumber::zero(ring);
    }
    if n < 0 {
        return -quantum_int(ring, -n);
    }
    let mut acc = CycloNumber::zero(ring);
    for j in 0..n {
        acc = acc + CycloNumber::s_pow(ring, n - 1 - 2 * j);
    }
    acc
}

/// Gaussian sum Σ_{k=0}^{p-1} ξ^{k²}.
pub fn gauss_sum(ring: &Ring) -> CycloNumber {
    let p = ring.p() as i64;
    (0..p).fold(CycloNumber::zero(ring), |acc, k| acc + CycloNumber::xi_pow(ring, (k * k) % p))
}

/// Binomial coefficient, zero outside 0 ≤ b ≤ a.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

/// Coordinates over {1, ξ, …, ξ^{p-2}} when `a` lies in Q(ξ).
pub fn to_xi_basis(a: &CycloNumber) -> Option<Vec<BigRational>> {
    a.ring().xi_projector().solve(a.coeffs())
}

/// Coordinates over Q(ξ) of a decomposition a = x + √−1·y, when `a` lies in Q(ξ, √−1).
pub fn split_gaussian(a: &CycloNumber) -> Option<(Vec<BigRational>, Vec<BigRational>)> {
    let coords = a.ring().gaussian_projector().solve(a.coeffs())?;
    let n = a.ring().p() as usize - 1;
    let (x, y) = coords.split_at(n);
    Some((x.to_vec(), y.to_vec()))
}

/// Membership in Z[1/2, ξ]: a lies in Q(ξ) and every coordinate over the integral
/// basis {ξ^a} has a power-of-two denominator.
pub fn in_z_half_xi(a: &CycloNumber) -> bool {
    match to_xi_basis(a) {
        Some(c) => c.iter().all(|r| RingParams::is_power_of_two(r.denom())),
        None => false,
    }
}

/// Membership in Z[ξ].
pub fn in_z_xi(a: &CycloNumber) -> bool {
    match to_xi_basis(a) {
        Some(c) => c.iter().all(|r| r.is_integer()),
        None => false,
    }
}

/// Largest k with a / (ξ - 1)^k ∈ Z[1/2, ξ].
pub fn valuation_xi_minus_1(a: &CycloNumber) -> Result<u32, CycloError> {
    if a.is_zero() {
        return Err(CycloError::InfiniteValuation);
    }
    if !in_z_half_xi(a) {
        return Err(CycloError::NotInZHalfXi);
    }
    let ring = a.ring();
    let cap = 8 * (ring.p() - 1);
    let step = ring.xi_minus_one_inverse();
    let mut cur = a.clone();
    for k in 0..=cap {
        let next = &cur * &step;
        if !in_z_half_xi(&next) {
            return Ok(k);
        }
        cur = next;
    }
    Err(CycloError::ValuationCap(cap))
}

/// Rendering over {ξ^a} or {√−1·ξ^a} when the element lies in one of those spans.
pub fn render_xi(a: &CycloNumber) -> Option<String> {
    fn join(coords: &[BigRational], unit: &str) -> Vec<String> {
        coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("{}/{} * {}xi^{}", c.numer(), c.denom(), unit, k))
            .collect()
    }
    let (x, y) = split_gaussian(a)?;
    let mut terms = join(&x, "");
    terms.extend(join(&y, "sqrt(-1)*"));
    Some(if terms.is_empty() { "0".to_string() } else { terms.join(" + ") })
}
