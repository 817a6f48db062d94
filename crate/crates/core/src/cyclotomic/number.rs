use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ring::Ring;
use super::CycloError;

/// An exact element of Q(ζ), ζ = exp(2πi / 8p).
#[derive(Clone)]
pub struct CycloNumber {
    ring: Ring,
    coeffs: Vec<BigRational>,
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        self.ring.p() == other.ring.p() && self.coeffs == other.coeffs
    }
}

impl Eq for CycloNumber {}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNumber(p={}; {})", self.ring.p(), self)
    }
}

/// Renders as `num/den * zeta^k` terms in ascending k, zero terms omitted.
impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("{}/{} * zeta^{}", c.numer(), c.denom(), k))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

fn integral_form(coeffs: &[BigRational]) -> (Vec<BigInt>, BigInt) {
    let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let nums = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    (nums, den)
}

impl CycloNumber {
    pub(crate) fn from_coeffs(ring: &Ring, coeffs: Vec<BigRational>) -> Self {
        debug_assert_eq!(coeffs.len(), ring.degree());
        CycloNumber { ring: ring.clone(), coeffs }
    }

    pub(crate) fn from_integers(ring: &Ring, nums: Vec<BigInt>) -> Self {
        debug_assert_eq!(nums.len(), ring.degree());
        CycloNumber { ring: ring.clone(), coeffs: nums.into_iter().map(BigRational::from_integer).collect() }
    }

    fn from_integral(ring: &Ring, nums: Vec<BigInt>, den: &BigInt) -> Self {
        let coeffs = nums.into_iter().map(|n| BigRational::new(n, den.clone())).collect();
        CycloNumber { ring: ring.clone(), coeffs }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Power-basis coordinates over ζ⁰..ζ^{4p-5}.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn zero(ring: &Ring) -> Self {
        CycloNumber { ring: ring.clone(), coeffs: vec![BigRational::zero(); ring.degree()] }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::from_integer(ring, 1)
    }

    pub fn from_integer(ring: &Ring, n: i64) -> Self {
        Self::from_rational(ring, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(ring: &Ring, n: BigInt) -> Self {
        Self::from_rational(ring, BigRational::from_integer(n))
    }

    pub fn from_rational(ring: &Ring, r: BigRational) -> Self {
        let mut z = Self::zero(ring);
        z.coeffs[0] = r;
        z
    }

    /// ζ^k for any integer k.
    pub fn zeta_pow(ring: &Ring, k: i64) -> Self {
        let coords = ring.zeta_pow_coords(k);
        CycloNumber {
            ring: ring.clone(),
            coeffs: coords.iter().map(|c| BigRational::from_integer(c.clone())).collect(),
        }
    }

    /// ξ = ζ⁸ = exp(2πi/p).
    pub fn xi(ring: &Ring) -> Self {
        Self::zeta_pow(ring, 8)
    }

    pub fn xi_pow(ring: &Ring, k: i64) -> Self {
        Self::zeta_pow(ring, 8 * k)
    }

    /// q = ζ⁴ = exp(πi/p).
    pub fn q(ring: &Ring) -> Self {
        Self::zeta_pow(ring, 4)
    }

    /// s = ζ² = exp(πi/2p).
    pub fn s(ring: &Ring) -> Self {
        Self::zeta_pow(ring, 2)
    }

    pub fn s_pow(ring: &Ring, k: i64) -> Self {
        Self::zeta_pow(ring, 2 * k)
    }

    /// √−1 = ζ^{2p}.
    pub fn sqrt_minus_one(ring: &Ring) -> Self {
        Self::zeta_pow(ring, 2 * ring.p() as i64)
    }

    /// √−1 raised to `k`, for any integer k.
    pub fn i_pow(ring: &Ring, k: i64) -> Self {
        Self::zeta_pow(ring, 2 * ring.p() as i64 * k)
    }

    /// The bracket variable A = ζ^{-1} = s^{-1/2}.
    pub fn bracket_var(ring: &Ring) -> Self {
        Self::zeta_pow(ring, -1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// True when every power-basis coordinate is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    fn check_ring(&self, other: &Self) {
        assert_eq!(self.ring.p(), other.ring.p(), "mixing elements of different cyclotomic fields");
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        CycloNumber { ring: self.ring.clone(), coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    pub fn scale_int(&self, n: &BigInt) -> Self {
        let r = BigRational::from_integer(n.clone());
        self.scale(&r)
    }

    /// Multiplication by ζ^k.
    pub fn mul_zeta_pow(&self, k: i64) -> Self {
        self * &Self::zeta_pow(&self.ring, k)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power, negative exponents through the inverse.
    pub fn powi(&self, e: i64) -> Result<Self, CycloError> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inverse()?.pow(e.unsigned_abs()))
        }
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against Φ₈ₚ.
    pub fn inverse(&self) -> Result<Self, CycloError> {
        if self.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        let modulus: Vec<BigRational> =
            self.ring.modulus().iter().map(|c| BigRational::from_integer(c.clone())).collect();
        let inv = super::poly::inverse_mod(&self.coeffs, &modulus);
        let mut coeffs = inv;
        coeffs.resize(self.ring.degree(), BigRational::zero());
        Ok(CycloNumber { ring: self.ring.clone(), coeffs })
    }

    pub fn div(&self, other: &Self) -> Result<Self, CycloError> {
        self.check_ring(other);
        Ok(self * &other.inverse()?)
    }

    /// Image under the Galois automorphism ζ ↦ ζ^t (t coprime to 8p).
    pub fn galois(&self, t: i64) -> Self {
        let mut nums = vec![BigRational::zero(); self.ring.degree()];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (slot, z) in nums.iter_mut().zip(self.ring.zeta_pow_coords(k as i64 * t)) {
                if !z.is_zero() {
                    *slot += c * BigRational::from_integer(z.clone());
                }
            }
        }
        CycloNumber { ring: self.ring.clone(), coeffs: nums }
    }

    /// Floating-point value under ζ ↦ exp(2πi/8p). Test and diagnostics use only.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.ring.order() as f64;
        self.coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (k, c)| {
            let v = ratio_to_f64(c);
            let ang = 2.0 * std::f64::consts::PI * k as f64 / n;
            (re + v * ang.cos(), im + v * ang.sin())
        })
    }
}

pub(crate) fn ratio_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // Fall back on scaled division for very large parts.
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

impl<'a> Add<&'a CycloNumber> for &'a CycloNumber {
    type Output = CycloNumber;
    fn add(self, rhs: &'a CycloNumber) -> CycloNumber {
        self.check_ring(rhs);
        CycloNumber {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a CycloNumber> for &'a CycloNumber {
    type Output = CycloNumber;
    fn sub(self, rhs: &'a CycloNumber) -> CycloNumber {
        self.check_ring(rhs);
        CycloNumber {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Mul<&'a CycloNumber> for &'a CycloNumber {
    type Output = CycloNumber;
    fn mul(self, rhs: &'a CycloNumber) -> CycloNumber {
        self.check_ring(rhs);
        let (na, da) = integral_form(&self.coeffs);
        let (nb, db) = integral_form(&rhs.coeffs);
        let d = self.ring.degree();
        let mut prod = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in na.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in nb.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let reduced = self.ring.reduce_integral(prod);
        CycloNumber::from_integral(&self.ring, reduced, &(da * db))
    }
}

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        CycloNumber { ring: self.ring.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycloNumber> for CycloNumber {
            type Output = CycloNumber;
            fn $m(self, rhs: CycloNumber) -> CycloNumber {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CycloNumber> for CycloNumber {
            type Output = CycloNumber;
            fn $m(self, rhs: &'a CycloNumber) -> CycloNumber {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        -&self
    }
}

