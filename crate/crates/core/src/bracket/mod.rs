//! Kauffman bracket of link diagrams over integer Laurent polynomials in A,
//! evaluated by Temperley-Lieb contraction, and the Jones polynomial at
//! A = s^{-1/2}.
//!
//! Smoothing convention: ⟨X[a,b,c,d]⟩ = A⟨(a,d)(b,c)⟩ + A⁻¹⟨(a,b)(c,d)⟩, so a
//! positive curl contributes -A⁻³.

mod cache;
mod engine;
mod laurent;

use std::path::PathBuf;
use std::sync::Mutex;
use std::collections::HashMap;

use thiserror::Error;

use crate::cyclotomic::{CycloError, CycloNumber, Ring};
use crate::link::{cable, LinkError, PdCode};

pub use engine::{contract, naive_bracket, slice, Event, SlicedDiagram};
pub use laurent::LaurentPoly;

/// Default bound on the number of open boundary points during contraction.
pub const DEFAULT_WIDTH_LIMIT: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BracketError {
    #[error("slice width {width} at event {event} exceeds the limit {limit}")]
    WidthLimit { event: usize, width: usize, limit: usize },
    #[error("naive state sum is limited to 20 crossings, diagram has {0}")]
    TooManyCrossings(usize),
    #[error(transparent)]
    Link(#[from] LinkError),
    #[error(transparent)]
    Cyclo(#[from] CycloError),
    #[error("(A^2+A^-2)-divisibility {found} is below the required {need}")]
    Divisibility { found: u32, need: u32 },
    #[error("internal bracket error: {0}")]
    Internal(String),
}

/// Bracket evaluator with an in-memory memo and an optional disk cache.
///
/// Results are keyed by the SHA-256 of the diagram's canonical text. The cache
/// only ever short-cuts recomputation; a missing or unreadable record is
/// recomputed.
#[derive(Debug)]
pub struct BracketEngine {
    width_limit: usize,
    cache_dir: Option<PathBuf>,
    memo: Mutex<HashMap<String, LaurentPoly>>,
}

impl Default for BracketEngine {
    fn default() -> Self {
        BracketEngine::new(DEFAULT_WIDTH_LIMIT, None)
    }
}

impl BracketEngine {
    pub fn new(width_limit: usize, cache_dir: Option<PathBuf>) -> BracketEngine {
        BracketEngine { width_limit, cache_dir, memo: Mutex::new(HashMap::new()) }
    }

    pub fn width_limit(&self) -> usize {
        self.width_limit
    }

    /// Bracket with every loop weighted δ; the empty diagram gives 1.
    pub fn bracket_mult(&self, diagram: &PdCode) -> Result<LaurentPoly, BracketError> {
        let key = cache::key(diagram);
        if let Some(p) = self.memo.lock().expect("memo lock").get(&key) {
            return Ok(p.clone());
        }
        if let Some(p) = self.cache_dir.as_deref().and_then(|d| cache::load(d, &key)) {
            self.memo.lock().expect("memo lock").insert(key, p.clone());
            return Ok(p);
        }
        let p = contract(&slice(diagram), self.width_limit)?;
        if let Some(dir) = self.cache_dir.as_deref() {
            // A failed write only costs a later recomputation.
            let _ = cache::store(dir, &key, &p);
        }
        self.memo.lock().expect("memo lock").insert(key, p.clone());
        Ok(p)
    }

    /// Bracket normalized by ⟨trivial knot⟩ = 1; the empty diagram gives 1.
    pub fn kauffman_bracket(&self, diagram: &PdCode) -> Result<LaurentPoly, BracketError> {
        if diagram.is_empty() {
            return Ok(LaurentPoly::one());
        }
        self.bracket_mult(diagram)?
            .div_exact(&LaurentPoly::delta())
            .ok_or_else(|| BracketError::Internal("bracket of a nonempty diagram is not divisible by delta".into()))
    }

    /// V(L) = (-1)^{♯L+1}⟨L⟩ at A = s^{-1/2}, with the writhe correction
    /// (-A⁻³)^{-w}; V(trivial knot) = 1 and V(empty) = 1/[2].
    pub fn jones_v(&self, diagram: &PdCode, ring: &Ring) -> Result<CycloNumber, BracketError> {
        let w = diagram.writhe();
        let corrected = self.bracket_mult(diagram)?.shift(3 * w);
        let mut v = corrected.evaluate_at_a(ring).div(&LaurentPoly::delta().evaluate_at_a(ring))?;
        if (diagram.num_components() as i64 + 1 + w) % 2 != 0 {
            v = -v;
        }
        Ok(v)
    }

    /// Checks qV(L+) - q⁻¹V(L-) = (s - s⁻¹)V(L0) exactly.
    pub fn skein_check(&self, plus: &PdCode, minus: &PdCode, zero: &PdCode, ring: &Ring) -> Result<bool, BracketError> {
        let q = CycloNumber::q(ring);
        let qinv = CycloNumber::zeta_pow(ring, -4);
        let s = CycloNumber::s(ring);
        let sinv = CycloNumber::s_pow(ring, -1);
        let lhs = &q * &self.jones_v(plus, ring)? - &qinv * &self.jones_v(minus, ring)?;
        let rhs = (&s - &sinv) * self.jones_v(zero, ring)?;
        Ok(lhs == rhs)
    }

    /// ⟨L1 ∪ L2²⟩ (L2 doubled, other components dropped) and the largest e
    /// with (A²+A⁻²)^e dividing it; errors when e < ♯L2.
    pub fn double_parallel_divisibility(
        &self,
        diagram: &PdCode,
        l1: &[usize],
        l2: &[usize],
    ) -> Result<(LaurentPoly, u32), BracketError> {
        let m = diagram.num_components();
        let mut d = vec![0usize; m];
        for &i in l1 {
            *d.get_mut(i).ok_or(LinkError::IndexOut { index: i, m })? = 1;
        }
        for &i in l2 {
            *d.get_mut(i).ok_or(LinkError::IndexOut { index: i, m })? = 2;
        }
        let cabled = cable(diagram, &d)?;
        let poly = self.kauffman_bracket(&cabled)?;
        let found = poly
            .divisibility(&LaurentPoly::a2_plus_a_minus2())
            .ok_or_else(|| BracketError::Internal("bracket vanished".into()))?;
        let need = l2.len() as u32;
        if found < need {
            return Err(BracketError::Divisibility { found, need });
        }
        Ok((poly, found))
    }
}

/// Bracket normalized by ⟨trivial knot⟩ = 1, with the default engine settings.
pub fn kauffman_bracket(diagram: &PdCode) -> Result<LaurentPoly, BracketError> {
    BracketEngine::default().kauffman_bracket(diagram)
}

/// Substitutes A = ζ⁻¹.
pub fn evaluate_at_a(poly: &LaurentPoly, ring: &Ring) -> CycloNumber {
    poly.evaluate_at_a(ring)
}

#[cfg(test)]
mod tests;
