use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::linalg::Projector;
use super::{CycloError, CycloNumber};

/// Shared handle to the parameters of one cyclotomic field.
pub type Ring = Arc<RingParams>;

/// Parameters of Q(ζ) where ζ = exp(2πi / 8p) for an odd prime p.
///
/// Elements are stored in the power basis ζ⁰..ζ^{4p-5} modulo the cyclotomic
/// polynomial Φ₈ₚ(x) = (x^{4p} + 1) / (x⁴ + 1).
pub struct RingParams {
    p: u32,
    u: u32,
    epsilon: i32,
    eight_bar: u32,
    degree: usize,
    /// Φ₈ₚ, lowest coefficient first, monic.
    modulus: Vec<BigInt>,
    /// `reduce_table[j]` holds the coordinates of x^{degree + j} mod Φ₈ₚ.
    reduce_table: Vec<Vec<BigInt>>,
    /// Coordinates of ζ^k for k in 0..8p.
    zeta_pows: Vec<Vec<BigInt>>,
    xi_basis: OnceLock<Projector>,
    gaussian_basis: OnceLock<Projector>,
    xi_minus_one_inv: OnceLock<Vec<BigRational>>,
}

impl fmt::Debug for RingParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingParams")
            .field("p", &self.p)
            .field("u", &self.u)
            .field("epsilon", &self.epsilon)
            .field("degree", &self.degree)
            .finish()
    }
}

impl PartialEq for RingParams {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
    }
}

impl Eq for RingParams {}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Exact quotient of x^{4p} + 1 by x⁴ + 1.
pub(crate) fn cyclotomic_8p(p: u32) -> Vec<BigInt> {
    let n = 4 * p as usize;
    let mut rem: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    rem[0] = BigInt::one();
    rem[n] = BigInt::one();
    let mut quot = vec![BigInt::zero(); n - 3];
    for top in (4..=n).rev() {
        let c = rem[top].clone();
        if c.is_zero() {
            continue;
        }
        quot[top - 4] = c.clone();
        rem[top] -= &c;
        rem[top - 4] -= &c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

impl RingParams {
    /// Builds the field for the odd prime `p`.
    pub fn new(p: u32) -> Result<Ring, CycloError> {
        if p < 3 || p % 2 == 0 || !is_prime(p as u64) {
            return Err(CycloError::BadPrime(p as i64));
        }
        let (u, epsilon) = if p % 4 == 1 { ((p - 1) / 4, 1) } else { ((p + 1) / 4, -1) };
        let eight_bar = (1..p).find(|x| (8 * x) % p == 1).expect("8 is invertible mod odd p");
        let modulus = cyclotomic_8p(p);
        let degree = modulus.len() - 1;
        debug_assert_eq!(degree, 4 * (p as usize - 1));

        // x^degree = -(modulus without its leading term); build successive powers.
        let mut reduce_table = Vec::with_capacity(degree);
        let mut cur: Vec<BigInt> = modulus[..degree].iter().map(|c| -c).collect();
        for _ in 0..degree {
            reduce_table.push(cur.clone());
            // multiply by x
            let top = cur[degree - 1].clone();
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = BigInt::zero();
            if !top.is_zero() {
                for i in 0..degree {
                    cur[i] -= &top * &modulus[i];
                }
            }
        }

        let order = 8 * p as usize;
        let mut zeta_pows: Vec<Vec<BigInt>> = Vec::with_capacity(order);
        for k in 0..order {
            let v = if k < degree {
                let mut v = vec![BigInt::zero(); degree];
                v[k] = BigInt::one();
                v
            } else if k < order / 2 {
                reduce_table[k - degree].clone()
            } else {
                zeta_pows[k - order / 2].iter().map(|c: &BigInt| -c).collect()
            };
            zeta_pows.push(v);
        }

        Ok(Arc::new(RingParams {
            p,
            u,
            epsilon,
            eight_bar,
            degree,
            modulus,
            reduce_table,
            zeta_pows,
            xi_basis: OnceLock::new(),
            gaussian_basis: OnceLock::new(),
            xi_minus_one_inv: OnceLock::new(),
        }))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// The u in p = 4u + ε.
    pub fn u(&self) -> u32 {
        self.u
    }

    /// The ε in p = 4u + ε, always ±1.
    pub fn epsilon(&self) -> i32 {
        self.epsilon
    }

    /// Inverse of 8 in Z/pZ.
    pub fn eight_bar(&self) -> u32 {
        self.eight_bar
    }

    /// Dimension of the field over Q, 4(p-1).
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Order of ζ, 8p.
    pub fn order(&self) -> i64 {
        8 * self.p as i64
    }

    /// Coefficients of Φ₈ₚ, lowest degree first.
    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    /// (p - 1) / 2.
    pub fn half(&self) -> u32 {
        (self.p - 1) / 2
    }

    pub(crate) fn zeta_pow_coords(&self, k: i64) -> &[BigInt] {
        let idx = k.rem_euclid(self.order()) as usize;
        &self.zeta_pows[idx]
    }

    /// Reduces an integer polynomial of degree < 2·degree - 1 modulo Φ₈ₚ.
    pub(crate) fn reduce_integral(&self, mut v: Vec<BigInt>) -> Vec<BigInt> {
        let d = self.degree;
        if v.len() <= d {
            v.resize(d, BigInt::zero());
            return v;
        }
        let (low, high) = v.split_at_mut(d);
        for (j, c) in high.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (slot, r) in low.iter_mut().zip(&self.reduce_table[j]) {
                if !r.is_zero() {
                    *slot += c * r;
                }
            }
        }
        v.truncate(d);
        v
    }

    pub(crate) fn xi_projector(&self) -> &Projector {
        self.xi_basis.get_or_init(|| {
            let cols: Vec<Vec<BigInt>> = (0..self.p as i64 - 1)
                .map(|a| self.zeta_pow_coords(8 * a).to_vec())
                .collect();
            Projector::new(self.degree, cols)
        })
    }

    pub(crate) fn gaussian_projector(&self) -> &Projector {
        self.gaussian_basis.get_or_init(|| {
            let i_exp = 2 * self.p as i64;
            let mut cols: Vec<Vec<BigInt>> = (0..self.p as i64 - 1)
                .map(|a| self.zeta_pow_coords(8 * a).to_vec())
                .collect();
            cols.extend((0..self.p as i64 - 1).map(|a| self.zeta_pow_coords(8 * a + i_exp).to_vec()));
            Projector::new(self.degree, cols)
        })
    }

    pub(crate) fn xi_minus_one_inverse(self: &Ring) -> CycloNumber {
        let coeffs = self.xi_minus_one_inv.get_or_init(|| {
            let t = CycloNumber::xi(self) - CycloNumber::one(self);
            t.inverse().expect("ξ - 1 is nonzero").coeffs().to_vec()
        });
        CycloNumber::from_coeffs(self, coeffs.clone())
    }

    /// Whether `den` is a power of two (including 1).
    pub(crate) fn is_power_of_two(den: &BigInt) -> bool {
        let d = den.abs();
        !d.is_zero() && (&d & (&d - BigInt::one())).is_zero()
    }
}
