use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cyclotomic::{CycloNumber, Ring};

/// Integer Laurent polynomial in the bracket variable A.
///
/// Canonical form: `coeffs[0]` is the coefficient of A^`low`, first and last
/// coefficients are nonzero; the zero polynomial has no coefficients and low 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn new(low: i64, coeffs: Vec<BigInt>) -> LaurentPoly {
        let mut p = LaurentPoly { low, coeffs };
        p.normalize();
        p
    }

    pub fn from_ints(low: i64, coeffs: &[i64]) -> LaurentPoly {
        LaurentPoly::new(low, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn zero() -> LaurentPoly {
        LaurentPoly::default()
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::monomial(BigInt::one(), 0)
    }

    /// c·A^e.
    pub fn monomial(c: BigInt, e: i64) -> LaurentPoly {
        LaurentPoly::new(e, vec![c])
    }

    /// Loop value δ = -A² - A⁻².
    pub fn delta() -> LaurentPoly {
        LaurentPoly::from_ints(-2, &[-1, 0, 0, 0, -1])
    }

    /// A² + A⁻².
    pub fn a2_plus_a_minus2() -> LaurentPoly {
        LaurentPoly::from_ints(-2, &[1, 0, 0, 0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low(&self) -> i64 {
        self.low
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of A^e.
    pub fn coeff(&self, e: i64) -> BigInt {
        let i = e - self.low;
        if i < 0 || i >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Multiplication by A^k.
    pub fn shift(&self, k: i64) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn pow(&self, e: u32) -> LaurentPoly {
        (0..e).fold(LaurentPoly::one(), |acc, _| &acc * self)
    }

    /// Adds c·A^shift·other into self without reallocating when possible.
    pub(crate) fn add_shifted(&mut self, other: &LaurentPoly, shift: i64, negate: bool) {
        if other.is_zero() {
            return;
        }
        let olow = other.low + shift;
        let ohigh = olow + other.coeffs.len() as i64 - 1;
        if self.is_zero() {
            self.low = olow;
            self.coeffs = if negate { other.coeffs.iter().map(|c| -c).collect() } else { other.coeffs.clone() };
            return;
        }
        let new_low = self.low.min(olow);
        let new_high = self.high().max(ohigh);
        if new_low < self.low {
            let pad = (self.low - new_low) as usize;
            let mut v = vec![BigInt::zero(); pad];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.low = new_low;
        }
        let len = (new_high - new_low + 1) as usize;
        if self.coeffs.len() < len {
            self.coeffs.resize(len, BigInt::zero());
        }
        let off = (olow - self.low) as usize;
        for (slot, c) in self.coeffs[off..].iter_mut().zip(&other.coeffs) {
            if negate {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        self.normalize();
    }

    /// Exact quotient, or `None` when `divisor` does not divide self.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        // Long division from the top coefficient down.
        let dl = divisor.coeffs.len();
        if self.coeffs.len() < dl {
            return None;
        }
        let lead = divisor.coeffs.last().expect("nonzero");
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dl + 1;
        let mut q = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = &rem[i + dl - 1];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            q[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(LaurentPoly::new(self.low - divisor.low, q))
    }

    /// Largest e with divisor^e dividing self; `None` for the zero polynomial.
    pub fn divisibility(&self, divisor: &LaurentPoly) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let mut e = 0;
        let mut cur = self.clone();
        while let Some(q) = cur.div_exact(divisor) {
            e += 1;
            cur = q;
        }
        Some(e)
    }

    /// Substitutes A = ζ⁻¹ (so A² = s⁻¹).
    pub fn evaluate_at_a(&self, ring: &Ring) -> CycloNumber {
        let mut acc = vec![BigInt::zero(); ring.degree()];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.low + i as i64;
            for (slot, z) in acc.iter_mut().zip(ring.zeta_pow_coords(-e)) {
                if !z.is_zero() {
                    *slot += c * z;
                }
            }
        }
        CycloNumber::from_integers(ring, acc)
    }

    /// Cache record: "low <n>" line and "coeffs <c0> <c1> ..." line.
    pub fn to_record(&self) -> String {
        let cs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("low {}\ncoeffs {}\n", self.low, cs.join(" "))
    }

    pub fn from_record(text: &str) -> Option<LaurentPoly> {
        let mut lines = text.lines();
        let low = lines.next()?.strip_prefix("low ")?.trim().parse().ok()?;
        let cs = lines.next()?.strip_prefix("coeffs")?;
        let coeffs: Option<Vec<BigInt>> = cs.split_whitespace().map(|t| t.parse().ok()).collect();
        let p = LaurentPoly::new(low, coeffs?);
        Some(p)
    }
}

/// Renders as e.g. "-A^4 - A^-4", highest exponent first; "0" for zero.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let e = self.low + i as i64;
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let var = match e {
                0 => String::new(),
                1 => "A".to_string(),
                _ => format!("A^{e}"),
            };
            if var.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_shifted(rhs, 0, false);
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_shifted(rhs, 0, true);
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        LaurentPoly::new(self.low + rhs.low, out)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}
