//! Built-in diagrams: standard knot-table PD codes, braid closures, skein
//! triples and Reidemeister move pairs.

use super::{is_algebraically_split, FramedLink, LinkError, PdCode};

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub diagram: PdCode,
    pub framings: Vec<i64>,
    pub split: bool,
    pub notes: &'static str,
}

impl CatalogEntry {
    pub fn framed(&self) -> FramedLink {
        FramedLink::new(self.diagram.clone(), self.framings.clone()).expect("catalog framings match")
    }

    pub fn with_framings(&self, framings: &[i64]) -> Result<FramedLink, LinkError> {
        FramedLink::new(self.diagram.clone(), framings.to_vec())
    }
}

fn pd(crossings: &[[u32; 4]]) -> PdCode {
    PdCode::new(crossings.to_vec(), None, 0).expect("catalog PD codes are valid")
}

enum Source {
    Free(usize),
    Pd(&'static [[u32; 4]]),
    Braid(usize, &'static [i32]),
}

const TABLE: &[(&str, Source, &[i64], &str)] = &[
    ("unknot", Source::Free(1), &[1], "round circle"),
    ("unlink2", Source::Free(2), &[1, 1], "two round circles"),
    ("hopf", Source::Pd(&[[4, 1, 3, 2], [2, 3, 1, 4]]), &[2, 2], "linking number -1"),
    ("trefoil", Source::Pd(&[[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]]), &[1], "3_1"),
    ("figure8", Source::Pd(&[[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]]), &[1], "4_1"),
    (
        "whitehead",
        Source::Pd(&[[6, 1, 7, 2], [10, 7, 5, 8], [4, 5, 1, 6], [2, 10, 3, 9], [8, 4, 9, 3]]),
        &[2, 2],
        "5^2_1, linking number 0",
    ),
    (
        "borromean",
        Source::Braid(3, &[1, -2, 1, -2, 1, -2]),
        &[2, 2, 2],
        "6^3_2 as the closure of (s1 s2^-1)^3, pairwise linking numbers 0",
    ),
];

/// Every catalog entry, in a fixed order.
pub fn catalog() -> Vec<CatalogEntry> {
    TABLE
        .iter()
        .map(|(name, source, framings, notes)| {
            let diagram = match source {
                Source::Free(n) => PdCode::unlink(*n),
                Source::Pd(crossings) => pd(crossings),
                Source::Braid(strands, word) => braid_closure(*strands, word),
            };
            let split = is_algebraically_split(&diagram);
            CatalogEntry { name, diagram, framings: framings.to_vec(), split, notes }
        })
        .collect()
}

pub fn lookup(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}

/// Closure of a braid on `strands` strands. Generator `i` (1-based) is σ_i,
/// `-i` is its inverse; strands run upward and σ_i is a positive crossing.
pub fn braid_closure(strands: usize, word: &[i32]) -> PdCode {
    let mut next = strands as u32 + 1;
    let mut top: Vec<u32> = (1..=strands as u32).collect();
    let mut crossings = Vec::new();
    let mut forward = Vec::new();
    for &g in word {
        let i = g.unsigned_abs() as usize - 1;
        assert!(i + 1 < strands, "generator {g} out of range for {strands} strands");
        let (bl, br) = (top[i], top[i + 1]);
        let (tl, tr) = (next, next + 1);
        next += 2;
        if g > 0 {
            crossings.push([br, tr, tl, bl]);
            forward.push(true);
        } else {
            crossings.push([bl, br, tr, tl]);
            forward.push(false);
        }
        top[i] = tl;
        top[i + 1] = tr;
    }
    // Close up: the top label at each position is identified with the bottom one.
    let mut rename: Vec<u32> = (0..next).collect();
    let mut free = 0;
    for pos in 0..strands {
        let bottom = pos as u32 + 1;
        if top[pos] == bottom {
            free += 1;
        } else {
            rename[top[pos] as usize] = bottom;
        }
    }
    let crossings: Vec<[u32; 4]> = crossings.iter().map(|c| c.map(|l| rename[l as usize])).collect();
    let starts: Vec<u32> = (1..=strands as u32).filter(|&b| top[b as usize - 1] != b).collect();
    PdCode::from_oriented(crossings, forward, &starts, free).expect("braid closures are consistent").relabeled()
}

/// A skein triple (L+, L-, L0) differing at a final letter σ_i^{±1} appended to
/// a braid word.
#[derive(Debug, Clone)]
pub struct SkeinTriple {
    pub name: &'static str,
    pub plus: PdCode,
    pub minus: PdCode,
    pub zero: PdCode,
}

fn triple(name: &'static str, strands: usize, prefix: &[i32], gen: i32) -> SkeinTriple {
    let gen = gen.abs();
    let with = |g: Option<i32>| {
        let mut w = prefix.to_vec();
        w.extend(g);
        braid_closure(strands, &w)
    };
    SkeinTriple { name, plus: with(Some(gen)), minus: with(Some(-gen)), zero: with(None) }
}

pub fn skein_triples() -> Vec<SkeinTriple> {
    vec![
        triple("hopf", 2, &[1], 1),
        triple("trefoil", 2, &[1, 1], 1),
        triple("figure8", 3, &[1, -2, 1], 2),
        triple("five-crossing", 3, &[1, 1, -2, 1], 2),
    ]
}

/// Pairs of diagrams related by a Reidemeister II or III move.
pub fn reidemeister_pairs() -> Vec<(&'static str, PdCode, PdCode)> {
    vec![
        ("R2 unlink", braid_closure(2, &[1, -1]), braid_closure(2, &[])),
        ("R2 in trefoil", braid_closure(2, &[1, 1, -1, 1, 1]), braid_closure(2, &[1, 1, 1])),
        ("R2 three strands", braid_closure(3, &[1, 2, -2, 1]), braid_closure(3, &[1, 1])),
        ("R3 plain", braid_closure(3, &[1, 2, 1]), braid_closure(3, &[2, 1, 2])),
        ("R3 with tail", braid_closure(3, &[1, 2, 1, -2, -1]), braid_closure(3, &[2, 1, 2, -2, -1])),
        (
            "R2 hand-built",
            PdCode::new(vec![[1, 4, 2, 3], [2, 4, 1, 3]], None, 0).expect("valid"),
            PdCode::unlink(2),
        ),
    ]
}
