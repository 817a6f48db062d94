use crate::bracket::BracketEngine;
use crate::cyclotomic::{in_z_xi, quantum_int, valuation_xi_minus_1, CycloNumber, Ring};
use crate::link::{cable, enumerate_classes, validate_presentation, zero_frame_normalize, CohomClass, FramedLink};

use super::sums::{grid, lemma_cable};
use super::terms::{c_term_direct, c_term_rewritten, s_term};
use super::{sigma_km, sigma_lemma23, tau_link, InvariantError, Route};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LemmaKind {
    /// S_n(f) ∈ Z[ξ] with valuation ≥ (p-1)/2 - n.
    SValuation,
    /// √−1^{g+1} C_n(g) ∈ Z[ξ] with valuation ≥ (p-1)/2 - n + 1.
    CValuation,
    /// The two forms of C_n(g) agree.
    CForms,
    /// √−1^{c+1} V(L^{cable}) ∈ Z[ξ] with valuation ≥ Σn - c.
    Parallels,
    /// √−1·[2] ∈ Z[ξ] with valuation ≥ 1.
    SqrtMinusOneTwo,
    /// Lemma 2.3 sum equals the Kirby-Melvin sum.
    RouteEquality,
    /// τ lies in the predicted ideal.
    Theorem,
}

impl LemmaKind {
    pub fn name(self) -> &'static str {
        match self {
            LemmaKind::SValuation => "S_n valuation",
            LemmaKind::CValuation => "C_n valuation",
            LemmaKind::CForms => "C_n forms",
            LemmaKind::Parallels => "parallels valuation",
            LemmaKind::SqrtMinusOneTwo => "sqrt(-1)[2] valuation",
            LemmaKind::RouteEquality => "route equality",
            LemmaKind::Theorem => "theorem verdict",
        }
    }
}

/// One checked instance. `valuation` and `bound` are absent for checks that
/// are plain equalities or verdicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaEntry {
    pub kind: LemmaKind,
    pub instance: String,
    pub valuation: Option<u32>,
    pub bound: Option<i64>,
    pub ok: bool,
}

#[derive(Debug, Clone, Default)]
pub struct LemmaReport {
    pub entries: Vec<LemmaEntry>,
}

impl LemmaReport {
    pub fn all_ok(&self) -> bool {
        self.entries.iter().all(|e| e.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LemmaEntry> {
        self.entries.iter().filter(|e| !e.ok)
    }
}

/// Grids for `verify_lemmas`. `bound_offset` is added to every valuation bound.
#[derive(Debug, Clone, Default)]
pub struct LemmaRanges {
    pub f_values: Vec<i64>,
    pub g_values: Vec<i64>,
    /// Links for the parallels lemma.
    pub parallels: Vec<(String, FramedLink)>,
    /// Framed links for route equality and theorem verdicts, over every class.
    pub presentations: Vec<(String, FramedLink)>,
    pub bound_offset: i64,
}

impl LemmaRanges {
    /// f and g in [-6, 6] without 0 and multiples of p.
    pub fn standard_values(p: u32) -> Vec<i64> {
        (-6i64..=6).filter(|v| v.rem_euclid(p as i64) != 0).collect()
    }
}

fn valuation_entry(kind: LemmaKind, instance: String, value: &CycloNumber, bound: i64) -> LemmaEntry {
    let valuation = if value.is_zero() { None } else { valuation_xi_minus_1(value).ok() };
    let ok = in_z_xi(value) && (value.is_zero() || valuation.is_some_and(|v| v as i64 >= bound));
    LemmaEntry { kind, instance, valuation, bound: Some(bound), ok }
}

/// Instances of the parallels lemma for an m-component link: every sublink θ
/// and every grid point with a nonempty cable. Yields (θ, n, cable).
pub fn parallels_instances(m: usize, ring: &Ring) -> Vec<(CohomClass, Vec<i64>, Vec<i64>)> {
    let half = ring.half() as i64;
    let mut out = Vec::new();
    for mask in 0u64..1 << m {
        let members: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
        let theta = CohomClass::new(&vec![0; m], &members).expect("zero framings are even");
        let ranges: Vec<Vec<i64>> =
            (0..m).map(|i| if theta.contains(i) { (1..=half).collect() } else { (0..=half).collect() }).collect();
        for n in grid(&ranges) {
            let d = lemma_cable(&n, &theta);
            if d.iter().any(|&x| x > 0) {
                out.push((theta.clone(), n, d));
            }
        }
    }
    out
}

/// Checks every lemma instance in the ranges; failures are report entries.
pub fn verify_lemmas(ring: &Ring, ranges: &LemmaRanges, engine: &BracketEngine) -> Result<LemmaReport, InvariantError> {
    let p = ring.p();
    let half = ring.half() as i64;
    let off = ranges.bound_offset;
    let mut entries = Vec::new();

    for &f in &ranges.f_values {
        for n in 1..=half {
            let v = s_term(n, f, ring)?;
            entries.push(valuation_entry(LemmaKind::SValuation, format!("p={p} n={n} f={f}"), &v, half - n + off));
        }
    }
    for &g in &ranges.g_values {
        for n in 1..=half {
            let direct = c_term_direct(n, g, ring)?;
            let rewritten = c_term_rewritten(n, g, ring)?;
            entries.push(LemmaEntry {
                kind: LemmaKind::CForms,
                instance: format!("p={p} n={n} g={g}"),
                valuation: None,
                bound: None,
                ok: direct == rewritten,
            });
            let v = CycloNumber::i_pow(ring, g + 1) * direct;
            entries.push(valuation_entry(LemmaKind::CValuation, format!("p={p} n={n} g={g}"), &v, half - n + 1 + off));
        }
    }
    let two = CycloNumber::sqrt_minus_one(ring) * quantum_int(ring, 2);
    entries.push(valuation_entry(LemmaKind::SqrtMinusOneTwo, format!("p={p}"), &two, 1 + off));

    for (name, link) in &ranges.parallels {
        let z = zero_frame_normalize(link.diagram());
        for (theta, n, d) in parallels_instances(link.num_components(), ring) {
            let cabled = cable(&z, &d.iter().map(|&x| x as usize).collect::<Vec<_>>())?;
            let v = CycloNumber::i_pow(ring, theta.c() as i64 + 1) * engine.jones_v(&cabled, ring)?;
            let bound = n.iter().sum::<i64>() - theta.c() as i64 + off;
            let instance = format!("p={p} {name} theta={} cable={d:?}", theta.label());
            entries.push(valuation_entry(LemmaKind::Parallels, instance, &v, bound));
        }
    }

    for (name, link) in &ranges.presentations {
        let classes = match validate_presentation(link, p) {
            Ok(pres) => enumerate_classes(&pres),
            Err(e) => {
                entries.push(LemmaEntry {
                    kind: LemmaKind::Theorem,
                    instance: format!("p={p} {name}: {e}"),
                    valuation: None,
                    bound: None,
                    ok: false,
                });
                continue;
            }
        };
        for theta in classes {
            let instance = format!("p={p} {name} f={:?} theta={}", link.framings(), theta.label());
            let lemma = sigma_lemma23(link, &theta, ring, engine)?;
            let km = sigma_km(link, &theta, ring, engine)?;
            entries.push(LemmaEntry {
                kind: LemmaKind::RouteEquality,
                instance: instance.clone(),
                valuation: None,
                bound: None,
                ok: lemma == km,
            });
            let report = tau_link(link, &theta, ring, Route::Lemma, engine)?;
            let bound = if theta.is_trivial() { 0 } else { 1 };
            let ok = report.verdict && (off == 0 || report.valuation.is_some_and(|v| v as i64 >= bound + off));
            entries.push(LemmaEntry { kind: LemmaKind::Theorem, instance, valuation: report.valuation, bound: Some(bound + off), ok });
        }
    }
    Ok(LemmaReport { entries })
}
