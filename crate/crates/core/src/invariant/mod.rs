//! τ₂ₚ(M, θ) = α(L)·Σ(L) for algebraically split surgery presentations, by the
//! Lemma 2.3 reformulation and by the Kirby-Melvin colored Jones sum, with
//! exact membership verdicts and lemma verification.

mod sums;
mod terms;
mod verify;

use std::fmt;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::bracket::{BracketEngine, BracketError};
use crate::cyclotomic::{in_z_half_xi, render_xi, split_gaussian, valuation_xi_minus_1, CycloError, CycloNumber, Ring};
use crate::link::{cup_cubed_parity, CohomClass, FramedLink, LinkError, SurgeryPresentation};

pub use sums::{colored_jones_km, km_colors, lemma_cable, lemma_grid, sigma_km, sigma_lemma23};
pub use terms::{alpha, alpha_numeric, c_term, s_term, sigma_stats};
pub use verify::{parallels_instances, verify_lemmas, LemmaEntry, LemmaKind, LemmaRanges, LemmaReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("component {0} has framing 0")]
    ZeroFraming(usize),
    #[error("index n = {n} outside [{low}, {high}]")]
    IndexOutOfRange { n: i64, low: i64, high: i64 },
    #[error("color {color} of component {component} outside (0, {p}]")]
    ColorOutOfRange { component: usize, color: i64, p: i64 },
    #[error("color vector has length {got}, link has {m} components")]
    ColorLength { got: usize, m: usize },
    #[error("the two forms of C_{n}({g}) disagree")]
    FormMismatch { n: i64, g: i64 },
    #[error("routes disagree for theta = {0}")]
    RouteMismatch(String),
    #[error("ring has p = {ring}, presentation has p = {pres}")]
    RingMismatch { ring: u32, pres: u32 },
    #[error(transparent)]
    Bracket(#[from] BracketError),
    #[error(transparent)]
    Link(#[from] LinkError),
    #[error(transparent)]
    Cyclo(#[from] CycloError),
}

/// Which formula computes Σ(L).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Lemma,
    Km,
    Both,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::Lemma => "lemma",
            Route::Km => "km",
            Route::Both => "both",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Ideal predicted for τ(M, θ).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ideal {
    /// Z[1/2, ξ], for θ = 0.
    ZHalfXi,
    /// (ξ-1)Z[1/2, ξ], for θ ≠ 0 with θ∪θ∪θ = 0.
    XiMinusOne,
    /// √−1(ξ-1)Z[1/2, ξ], for θ∪θ∪θ ≠ 0.
    SqrtMinusOneXiMinusOne,
}

impl Ideal {
    pub fn name(self) -> &'static str {
        match self {
            Ideal::ZHalfXi => "Z[1/2,xi]",
            Ideal::XiMinusOne => "(xi-1)Z[1/2,xi]",
            Ideal::SqrtMinusOneXiMinusOne => "sqrt(-1)(xi-1)Z[1/2,xi]",
        }
    }

    pub fn for_class(theta: &CohomClass) -> Ideal {
        if theta.is_trivial() {
            Ideal::ZHalfXi
        } else if cup_cubed_parity(theta) == 0 {
            Ideal::XiMinusOne
        } else {
            Ideal::SqrtMinusOneXiMinusOne
        }
    }

    /// Exact membership test.
    pub fn contains(self, a: &CycloNumber) -> bool {
        let ring = a.ring();
        let t = CycloNumber::xi(ring) - CycloNumber::one(ring);
        let reduced = match self {
            Ideal::ZHalfXi => a.clone(),
            Ideal::XiMinusOne => a.div(&t).expect("xi - 1 is invertible"),
            Ideal::SqrtMinusOneXiMinusOne => {
                a.div(&(CycloNumber::sqrt_minus_one(ring) * t)).expect("sqrt(-1)(xi - 1) is invertible")
            }
        };
        in_z_half_xi(&reduced)
    }
}

/// Coordinates of τ over {ξ^a} (unit 1) or {√−1·ξ^a} (unit √−1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XiCoords {
    pub imaginary: bool,
    pub coords: Vec<BigRational>,
}

impl XiCoords {
    pub fn of(a: &CycloNumber) -> Option<XiCoords> {
        let (x, y) = split_gaussian(a)?;
        if y.iter().all(Zero::is_zero) {
            Some(XiCoords { imaginary: false, coords: x })
        } else if x.iter().all(Zero::is_zero) {
            Some(XiCoords { imaginary: true, coords: y })
        } else {
            None
        }
    }
}

/// τ(M, θ) with its exact verdict.
#[derive(Debug, Clone)]
pub struct ThetaReport {
    pub theta: CohomClass,
    pub tau: CycloNumber,
    pub xi_coords: Option<XiCoords>,
    /// (ξ-1)-valuation of τ, or of τ/√−1 when the coordinates are imaginary;
    /// absent when τ = 0 or lies outside both spans.
    pub valuation: Option<u32>,
    pub parity: u8,
    pub ideal: Ideal,
    pub verdict: bool,
    pub route: Route,
    pub elapsed: Duration,
}

impl ThetaReport {
    /// Structured record: 1-based θ, parity, ideal, verdict, route, valuation,
    /// ξ-basis coordinates as "num/den" strings and a rendering of τ.
    pub fn to_json(&self) -> serde_json::Value {
        let coords = self.xi_coords.as_ref().map(|c| {
            serde_json::json!({
                "unit": if c.imaginary { "sqrt(-1)" } else { "1" },
                "coords": c.coords.iter().map(|r| format!("{}/{}", r.numer(), r.denom())).collect::<Vec<_>>(),
            })
        });
        serde_json::json!({
            "theta": self.theta.members().iter().map(|i| i + 1).collect::<Vec<_>>(),
            "label": self.theta.label(),
            "g": self.theta.g_values(),
            "parity": self.parity,
            "ideal": self.ideal.name(),
            "verdict": self.verdict,
            "route": self.route.name(),
            "valuation": self.valuation,
            "xi_basis": coords,
            "tau": self.tau_text(),
        })
    }

    /// τ over {ξ^a, √−1·ξ^a} when possible, otherwise over powers of ζ.
    pub fn tau_text(&self) -> String {
        render_xi(&self.tau).unwrap_or_else(|| self.tau.to_string())
    }
}

/// Σ(L) by the chosen route; `Both` requires exact agreement.
pub fn sigma(
    link: &FramedLink,
    theta: &CohomClass,
    ring: &Ring,
    route: Route,
    engine: &BracketEngine,
) -> Result<CycloNumber, InvariantError> {
    match route {
        Route::Lemma => sigma_lemma23(link, theta, ring, engine),
        Route::Km => sigma_km(link, theta, ring, engine),
        Route::Both => {
            let a = sigma_lemma23(link, theta, ring, engine)?;
            if a != sigma_km(link, theta, ring, engine)? {
                return Err(InvariantError::RouteMismatch(theta.label()));
            }
            Ok(a)
        }
    }
}

/// τ for a framed link without the presentation checks; the verdict is still
/// the one predicted for a Z/pZ-homology sphere.
pub fn tau_link(
    link: &FramedLink,
    theta: &CohomClass,
    ring: &Ring,
    route: Route,
    engine: &BracketEngine,
) -> Result<ThetaReport, InvariantError> {
    let start = Instant::now();
    let value = alpha(link.framings(), ring)? * sigma(link, theta, ring, route, engine)?;
    let xi_coords = XiCoords::of(&value);
    let valuation = match &xi_coords {
        Some(c) if !value.is_zero() => {
            let base = if c.imaginary { value.div(&CycloNumber::sqrt_minus_one(ring))? } else { value.clone() };
            valuation_xi_minus_1(&base).ok()
        }
        _ => None,
    };
    let ideal = Ideal::for_class(theta);
    Ok(ThetaReport {
        theta: theta.clone(),
        verdict: ideal.contains(&value),
        tau: value,
        xi_coords,
        valuation,
        parity: cup_cubed_parity(theta),
        ideal,
        route,
        elapsed: start.elapsed(),
    })
}

/// τ₂ₚ(M, θ) = α(L)Σ(L) for a validated presentation.
pub fn tau(
    pres: &SurgeryPresentation,
    theta: &CohomClass,
    ring: &Ring,
    route: Route,
    engine: &BracketEngine,
) -> Result<ThetaReport, InvariantError> {
    if ring.p() != pres.p() {
        return Err(InvariantError::RingMismatch { ring: ring.p(), pres: pres.p() });
    }
    tau_link(pres.link(), theta, ring, route, engine)
}
