//! Framed link diagrams: PD codes, linking numbers, surgery-presentation
//! checks, zero-framed blackboard cabling and mod-2 cohomology classes.

mod cable;
pub mod catalog;
mod pd;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

pub use cable::{cable, cable_with_origins};
pub use pd::{LinkDocument, PdCode};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinkError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("crossing {crossing}: edge label {label} is not a positive integer")]
    BadLabel { label: i64, crossing: usize },
    #[error("crossing {crossing}: edge {label} appears {count} times (expected 2)")]
    EdgeCount { label: u32, count: usize, crossing: usize },
    #[error("inconsistent diagram: {0}")]
    Inconsistent(String),
    #[error("expected {expected} framings, got {got}")]
    FramingLength { expected: usize, got: usize },
    #[error("component index {index} out of range (link has {m} components)")]
    IndexOut { index: usize, m: usize },
    #[error("cable vector has length {got}, link has {m} components")]
    CableLength { got: usize, m: usize },
    #[error("diagram is not zero-framed: component {component} has self-writhe {writhe}")]
    NotNormalized { component: usize, writhe: i64 },
    #[error("invalid surgery presentation: {}", .0.join("; "))]
    Presentation(Vec<String>),
    #[error("component {0} has odd framing and cannot carry a cohomology class")]
    OddMember(usize),
}

/// A link diagram with one integer framing per component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FramedLink {
    diagram: PdCode,
    framings: Vec<i64>,
}

impl FramedLink {
    pub fn new(diagram: PdCode, framings: Vec<i64>) -> Result<FramedLink, LinkError> {
        if framings.len() != diagram.num_components() {
            return Err(LinkError::FramingLength { expected: diagram.num_components(), got: framings.len() });
        }
        Ok(FramedLink { diagram, framings })
    }

    pub fn empty() -> FramedLink {
        FramedLink { diagram: PdCode::unlink(0), framings: Vec::new() }
    }

    pub fn diagram(&self) -> &PdCode {
        &self.diagram
    }

    pub fn framings(&self) -> &[i64] {
        &self.framings
    }

    pub fn num_components(&self) -> usize {
        self.framings.len()
    }

    /// Parses an interchange document; `framings` must be present.
    pub fn from_document(doc: &LinkDocument) -> Result<FramedLink, LinkError> {
        let diagram = PdCode::from_document(doc)?;
        let framings = doc.framings.clone().ok_or_else(|| LinkError::Parse("missing field `framings`".into()))?;
        FramedLink::new(diagram, framings)
    }

    pub fn to_document(&self) -> LinkDocument {
        let mut doc = self.diagram.to_document();
        doc.framings = Some(self.framings.clone());
        doc
    }
}

/// Parses the JSON interchange format.
pub fn parse_document(text: &str) -> Result<LinkDocument, LinkError> {
    serde_json::from_str(text).map_err(|e| LinkError::Parse(e.to_string()))
}

/// Parses a diagram from JSON text.
pub fn parse_pd(text: &str) -> Result<PdCode, LinkError> {
    PdCode::from_document(&parse_document(text)?)
}

/// Pairwise linking numbers with zero diagonal.
pub fn linking_numbers(diagram: &PdCode) -> Vec<Vec<i64>> {
    let m = diagram.num_components();
    let mut twice = vec![vec![0i64; m]; m];
    for (x, (u, o)) in diagram.crossing_components().into_iter().enumerate() {
        if u != o {
            twice[u][o] += diagram.sign(x);
            twice[o][u] += diagram.sign(x);
        }
    }
    twice.into_iter().map(|row| row.into_iter().map(|v| v / 2).collect()).collect()
}

/// Linking matrix: framings on the diagonal, linking numbers off it.
pub fn linking_matrix(link: &FramedLink) -> Vec<Vec<i64>> {
    let mut lk = linking_numbers(&link.diagram);
    for (i, &f) in link.framings.iter().enumerate() {
        lk[i][i] = f;
    }
    lk
}

pub fn is_algebraically_split(diagram: &PdCode) -> bool {
    linking_numbers(diagram).iter().flatten().all(|&v| v == 0)
}

/// Signed count of the crossings of component `i` with itself.
pub fn self_writhe(diagram: &PdCode, i: usize) -> Result<i64, LinkError> {
    let m = diagram.num_components();
    if i >= m {
        return Err(LinkError::IndexOut { index: i, m });
    }
    Ok(diagram
        .crossing_components()
        .into_iter()
        .enumerate()
        .filter(|(_, (u, o))| *u == i && *o == i)
        .map(|(x, _)| diagram.sign(x))
        .sum())
}

pub fn is_zero_framed(diagram: &PdCode) -> bool {
    first_nonzero_writhe(diagram).is_none()
}

pub(crate) fn first_nonzero_writhe(diagram: &PdCode) -> Option<(usize, i64)> {
    let mut w = vec![0i64; diagram.num_components()];
    for (x, (u, o)) in diagram.crossing_components().into_iter().enumerate() {
        if u == o {
            w[u] += diagram.sign(x);
        }
    }
    w.into_iter().enumerate().find(|(_, v)| *v != 0)
}

/// Inserts |w| curls of sign -sign(w) on every component of self-writhe w,
/// then relabels edges along the components.
pub fn zero_frame_normalize(diagram: &PdCode) -> PdCode {
    if is_zero_framed(diagram) {
        return diagram.clone();
    }
    let mut crossings = diagram.crossings().to_vec();
    let mut forward = diagram.over_forward().to_vec();
    let mut next = crossings.iter().flatten().copied().max().unwrap_or(0) + 1;
    let starts: Vec<u32> = diagram.components().iter().map(|c| c[0]).collect();
    for (i, comp) in diagram.components().iter().enumerate() {
        let w = self_writhe(diagram, i).expect("index in range");
        let edge = comp[0];
        for _ in 0..w.abs() {
            let pd = PdCode::from_oriented(crossings.clone(), forward.clone(), &starts, 0)
                .expect("diagram stays consistent under curl insertion");
            let (x, s) = pd.head_of(edge).expect("every edge has a head");
            let (loop_edge, out_edge) = (next, next + 1);
            next += 2;
            crossings[x][s] = out_edge;
            if w < 0 {
                crossings.push([edge, out_edge, loop_edge, loop_edge]);
                forward.push(true);
            } else {
                crossings.push([edge, loop_edge, loop_edge, out_edge]);
                forward.push(false);
            }
        }
    }
    PdCode::from_oriented(crossings, forward, &starts, diagram.free_loops())
        .expect("diagram stays consistent under curl insertion")
        .relabeled()
}

/// Validated surgery presentation of a Z/pZ-homology sphere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurgeryPresentation {
    link: FramedLink,
    p: u32,
}

impl SurgeryPresentation {
    pub fn link(&self) -> &FramedLink {
        &self.link
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn framings(&self) -> &[i64] {
        self.link.framings()
    }

    pub fn num_components(&self) -> usize {
        self.link.num_components()
    }
}

fn determinant(mat: &[Vec<i64>]) -> BigInt {
    // Bareiss fraction-free elimination.
    let n = mat.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut a: Vec<Vec<BigInt>> = mat.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let mut sign = 1;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    &a[n - 1][n - 1] * sign
}

/// Checks algebraic splitness, f_i != 0 mod p and det != 0 mod p; every
/// violated condition is reported.
pub fn validate_presentation(link: &FramedLink, p: u32) -> Result<SurgeryPresentation, LinkError> {
    let mut problems = Vec::new();
    let lk = linking_numbers(link.diagram());
    let m = link.num_components();
    for i in 0..m {
        for j in i + 1..m {
            if lk[i][j] != 0 {
                problems.push(format!(
                    "not algebraically split: lk(L{}, L{}) = {}",
                    i + 1,
                    j + 1,
                    lk[i][j]
                ));
            }
        }
    }
    for (i, &f) in link.framings().iter().enumerate() {
        if f.rem_euclid(p as i64) == 0 {
            problems.push(format!("framing f{} = {} is 0 mod {}", i + 1, f, p));
        }
    }
    let det = determinant(&linking_matrix(link));
    if (&det % BigInt::from(p)).is_zero() {
        problems.push(format!("det of linking matrix = {} is 0 mod {}", det, p));
    }
    if problems.is_empty() {
        Ok(SurgeryPresentation { link: link.clone(), p })
    } else {
        Err(LinkError::Presentation(problems))
    }
}

/// A mod-2 cohomology class, presented by a sublink of even-framed components.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CohomClass {
    members: Vec<usize>,
    g: Vec<i64>,
}

impl CohomClass {
    pub fn trivial() -> CohomClass {
        CohomClass { members: Vec::new(), g: Vec::new() }
    }

    /// Class of the sublink `members` (0-based indices) of `framings`.
    pub fn new(framings: &[i64], members: &[usize]) -> Result<CohomClass, LinkError> {
        let mut ms = members.to_vec();
        ms.sort_unstable();
        ms.dedup();
        let mut g = Vec::with_capacity(ms.len());
        for &i in &ms {
            let f = *framings.get(i).ok_or(LinkError::IndexOut { index: i, m: framings.len() })?;
            if f % 2 != 0 {
                return Err(LinkError::OddMember(i));
            }
            g.push(f / 2);
        }
        Ok(CohomClass { members: ms, g })
    }

    /// Sorted 0-based component indices.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// g_l = f_l / 2 for each member, in member order.
    pub fn g_values(&self) -> &[i64] {
        &self.g
    }

    pub fn c(&self) -> usize {
        self.members.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    /// 1-based rendering such as "{1,3}".
    pub fn label(&self) -> String {
        let parts: Vec<String> = self.members.iter().map(|i| (i + 1).to_string()).collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// All classes: every subset of the even-framed components, by ascending bitmask.
pub fn enumerate_classes(pres: &SurgeryPresentation) -> Vec<CohomClass> {
    let framings = pres.framings();
    let even: Vec<usize> = (0..framings.len()).filter(|&i| framings[i] % 2 == 0).collect();
    (0u64..1 << even.len())
        .map(|mask| {
            let members: Vec<usize> =
                even.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &i)| i).collect();
            CohomClass::new(framings, &members).expect("members are even-framed")
        })
        .collect()
}

/// θ∪θ∪θ evaluated as Σ g_l mod 2.
pub fn cup_cubed_parity(theta: &CohomClass) -> u8 {
    (theta.g.iter().sum::<i64>().rem_euclid(2)) as u8
}

#[cfg(test)]
mod tests;
