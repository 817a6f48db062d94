use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::LinkError;

/// Planar diagram code of an oriented link.
///
/// Crossings are 4-tuples of edge labels listed counterclockwise from the
/// incoming under-strand, so the under-strand runs from slot 0 to slot 2.
/// `over_forward[x]` records whether the over-strand of crossing `x` runs from
/// slot 3 to slot 1; such crossings are positive. Components are oriented edge
/// cycles; components without crossings are counted in `free_loops` and indexed
/// after the crossing components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PdCode {
    crossings: Vec<[u32; 4]>,
    over_forward: Vec<bool>,
    components: Vec<Vec<u32>>,
    free_loops: usize,
}

/// Interchange document for a framed diagram.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkDocument {
    pub pd: Vec<[i64; 4]>,
    #[serde(default)]
    pub free_loops: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub framings: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
}

type Slot = (usize, usize);

/// Slot through which a strand entering at `slot` leaves the crossing.
fn opposite(slot: usize) -> usize {
    (slot + 2) % 4
}

fn incoming_slots(forward: bool) -> [usize; 2] {
    if forward {
        [0, 3]
    } else {
        [0, 1]
    }
}

fn slot_table(crossings: &[[u32; 4]]) -> Result<HashMap<u32, Vec<Slot>>, LinkError> {
    let mut slots: HashMap<u32, Vec<Slot>> = HashMap::new();
    for (x, c) in crossings.iter().enumerate() {
        for (s, &l) in c.iter().enumerate() {
            slots.entry(l).or_default().push((x, s));
        }
    }
    let mut bad: Vec<(u32, usize)> =
        slots.iter().filter(|(_, v)| v.len() != 2).map(|(&l, v)| (l, v.len())).collect();
    bad.sort();
    if let Some(&(label, count)) = bad.first() {
        let at = slots[&label][0].0;
        return Err(LinkError::EdgeCount { label, count, crossing: at });
    }
    Ok(slots)
}

impl PdCode {
    /// Builds a diagram from unoriented crossing data.
    ///
    /// Strand cycles are traced through opposite slots. Each cycle is oriented
    /// by its under-passes (slot 0 to slot 2); a cycle that is over everywhere
    /// is oriented so that its smallest label is followed by the next integer
    /// when possible. When `components` is given it fixes component order and
    /// orientation and must agree with the traced cycles.
    pub fn new(
        crossings: Vec<[u32; 4]>,
        components: Option<Vec<Vec<u32>>>,
        free_loops: usize,
    ) -> Result<PdCode, LinkError> {
        let slots = slot_table(&crossings)?;
        let other = |l: u32, here: Slot| -> Slot {
            let v = &slots[&l];
            if v[0] == here {
                v[1]
            } else {
                v[0]
            }
        };

        let mut labels: Vec<u32> = slots.keys().copied().collect();
        labels.sort_unstable();
        let mut seen: BTreeMap<u32, bool> = labels.iter().map(|&l| (l, false)).collect();
        let mut cycles: Vec<Cycle> = Vec::new();
        for &start in &labels {
            if seen[&start] {
                continue;
            }
            // `arrive` is the slot at which the current edge ends.
            let mut cycle = Cycle::default();
            let mut label = start;
            let mut arrive = slots[&start][0];
            let mut has_forward_under = false;
            let mut has_backward_under = false;
            loop {
                seen.insert(label, true);
                cycle.labels.push(label);
                match arrive.1 {
                    0 => has_forward_under = true,
                    2 => has_backward_under = true,
                    s => cycle.over.push((arrive.0, s == 3)),
                }
                let exit = (arrive.0, opposite(arrive.1));
                let next = crossings[exit.0][exit.1];
                let next_arrive = other(next, exit);
                if next == start && next_arrive == slots[&start][0] {
                    break;
                }
                if cycle.labels.len() > 2 * crossings.len() + 2 {
                    return Err(LinkError::Inconsistent(format!("edge {start} does not close up")));
                }
                label = next;
                arrive = next_arrive;
            }
            if has_forward_under && has_backward_under {
                return Err(LinkError::Inconsistent(format!(
                    "component through edge {start} runs against an under-strand"
                )));
            }
            cycle.has_under = has_forward_under || has_backward_under;
            let reverse = if cycle.has_under {
                has_backward_under
            } else {
                let n = cycle.labels.len();
                let succ = cycle.labels[1 % n];
                let pred = cycle.labels[n - 1];
                succ != start + 1 && pred == start + 1
            };
            if reverse {
                cycle.reverse();
            }
            cycles.push(cycle);
        }

        let ordered = match components {
            None => cycles,
            Some(given) => match_components(&given, cycles)?,
        };

        let mut over_forward = vec![false; crossings.len()];
        for c in &ordered {
            for &(x, f) in &c.over {
                over_forward[x] = f;
            }
        }
        let components = ordered.into_iter().map(|c| c.labels).collect();
        Ok(PdCode { crossings, over_forward, components, free_loops })
    }

    /// Builds a diagram whose orientation is already known per crossing.
    ///
    /// Components are traced from `starts` in order; any remaining cycles
    /// follow, ordered by smallest label.
    pub(crate) fn from_oriented(
        crossings: Vec<[u32; 4]>,
        over_forward: Vec<bool>,
        starts: &[u32],
        free_loops: usize,
    ) -> Result<PdCode, LinkError> {
        let mut incoming: HashMap<u32, Slot> = HashMap::new();
        for (x, c) in crossings.iter().enumerate() {
            for s in incoming_slots(over_forward[x]) {
                if incoming.insert(c[s], (x, s)).is_some() {
                    return Err(LinkError::Inconsistent(format!("edge {} enters twice", c[s])));
                }
            }
        }
        let total = crossings.len() * 2;
        if incoming.len() != total {
            return Err(LinkError::Inconsistent("edge incidences do not pair up".into()));
        }
        let mut done: HashMap<u32, bool> = HashMap::new();
        let mut components = Vec::new();
        let mut rest: Vec<u32> = incoming.keys().copied().collect();
        rest.sort_unstable();
        for &start in starts.iter().chain(rest.iter()) {
            if done.contains_key(&start) {
                continue;
            }
            let mut cycle = Vec::new();
            let mut label = start;
            loop {
                if done.insert(label, true).is_some() {
                    return Err(LinkError::Inconsistent(format!("edge {label} visited twice")));
                }
                cycle.push(label);
                let &(x, s) = incoming
                    .get(&label)
                    .ok_or_else(|| LinkError::Inconsistent(format!("edge {label} has no head")))?;
                label = crossings[x][opposite(s)];
                if label == start {
                    break;
                }
            }
            components.push(cycle);
        }
        Ok(PdCode { crossings, over_forward, components, free_loops })
    }

    /// The diagram of `n` disjoint round circles.
    pub fn unlink(n: usize) -> PdCode {
        PdCode { crossings: Vec::new(), over_forward: Vec::new(), components: Vec::new(), free_loops: n }
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn over_forward(&self) -> &[bool] {
        &self.over_forward
    }

    /// Oriented edge cycles of the components that have crossings.
    pub fn components(&self) -> &[Vec<u32>] {
        &self.components
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn num_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn num_components(&self) -> usize {
        self.components.len() + self.free_loops
    }

    pub fn num_edges(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.num_components() == 0
    }

    /// Sign of crossing `x`: +1 when the over-strand runs from slot 3 to slot 1.
    pub fn sign(&self, x: usize) -> i64 {
        if self.over_forward[x] {
            1
        } else {
            -1
        }
    }

    /// Component index of every edge label.
    pub fn edge_components(&self) -> HashMap<u32, usize> {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.iter().map(move |&l| (l, i)))
            .collect()
    }

    /// (under component, over component) of each crossing.
    pub fn crossing_components(&self) -> Vec<(usize, usize)> {
        let comp = self.edge_components();
        self.crossings.iter().map(|c| (comp[&c[0]], comp[&c[1]])).collect()
    }

    /// Sum of all crossing signs.
    pub fn writhe(&self) -> i64 {
        (0..self.crossings.len()).map(|x| self.sign(x)).sum()
    }

    /// Slot at which edge `label` ends.
    pub(crate) fn head_of(&self, label: u32) -> Option<Slot> {
        self.crossings.iter().enumerate().find_map(|(x, c)| {
            incoming_slots(self.over_forward[x]).into_iter().find(|&s| c[s] == label).map(|s| (x, s))
        })
    }

    /// Relabels edges 1, 2, … along the components in order.
    pub fn relabeled(&self) -> PdCode {
        let mut map: HashMap<u32, u32> = HashMap::new();
        let mut next = 1u32;
        for c in &self.components {
            for &l in c {
                map.insert(l, next);
                next += 1;
            }
        }
        PdCode {
            crossings: self.crossings.iter().map(|c| c.map(|l| map[&l])).collect(),
            over_forward: self.over_forward.clone(),
            components: self.components.iter().map(|c| c.iter().map(|l| map[l]).collect()).collect(),
            free_loops: self.free_loops,
        }
    }

    /// Split union: `other` is placed beside `self` with shifted labels.
    /// Crossing components of both come first, then all free loops.
    pub fn disjoint_union(&self, other: &PdCode) -> PdCode {
        let off = self.crossings.iter().flatten().copied().max().unwrap_or(0);
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|c| c.map(|l| l + off)));
        let mut over_forward = self.over_forward.clone();
        over_forward.extend(&other.over_forward);
        let mut components = self.components.clone();
        components.extend(other.components.iter().map(|c| c.iter().map(|l| l + off).collect()));
        PdCode { crossings, over_forward, components, free_loops: self.free_loops + other.free_loops }
    }

    /// Parses an interchange document.
    pub fn from_document(doc: &LinkDocument) -> Result<PdCode, LinkError> {
        let label = |v: i64, x: usize| -> Result<u32, LinkError> {
            u32::try_from(v)
                .ok()
                .filter(|&l| l > 0)
                .ok_or(LinkError::BadLabel { label: v, crossing: x })
        };
        let mut crossings = Vec::with_capacity(doc.pd.len());
        for (x, c) in doc.pd.iter().enumerate() {
            crossings.push([label(c[0], x)?, label(c[1], x)?, label(c[2], x)?, label(c[3], x)?]);
        }
        let components = match &doc.components {
            None => None,
            Some(cs) => {
                let mut out = Vec::with_capacity(cs.len());
                for (i, c) in cs.iter().enumerate() {
                    let mut comp = Vec::with_capacity(c.len());
                    for &v in c {
                        comp.push(u32::try_from(v).ok().filter(|&l| l > 0).ok_or_else(|| {
                            LinkError::Parse(format!("component {i}: bad edge label {v}"))
                        })?);
                    }
                    out.push(comp);
                }
                Some(out)
            }
        };
        PdCode::new(crossings, components, doc.free_loops)
    }

    pub fn to_document(&self) -> LinkDocument {
        LinkDocument {
            pd: self.crossings.iter().map(|c| c.map(i64::from)).collect(),
            free_loops: self.free_loops,
            components: Some(
                self.components.iter().map(|c| c.iter().map(|&l| i64::from(l)).collect()).collect(),
            ),
            framings: None,
            p: None,
        }
    }

    /// Canonical text used for hashing: crossings, orientations and free loops.
    pub fn canonical_text(&self) -> String {
        let mut s = String::new();
        for (c, f) in self.crossings.iter().zip(&self.over_forward) {
            s.push_str(&format!("X{},{},{},{}{};", c[0], c[1], c[2], c[3], if *f { "+" } else { "-" }));
        }
        s.push_str(&format!("O{}", self.free_loops));
        s
    }
}

#[derive(Default)]
struct Cycle {
    labels: Vec<u32>,
    /// Over-passes as (crossing, runs from slot 3 to slot 1).
    over: Vec<(usize, bool)>,
    has_under: bool,
}

impl Cycle {
    fn reverse(&mut self) {
        reverse_cycle(&mut self.labels);
        for o in self.over.iter_mut() {
            o.1 = !o.1;
        }
    }
}

fn reverse_cycle(cycle: &mut [u32]) {
    // Keep the first label in place so the start edge is stable.
    cycle[1..].reverse();
}

fn cyclic_match(a: &[u32], b: &[u32]) -> bool {
    if a.len() != b.len() || a.is_empty() {
        return false;
    }
    match b.iter().position(|&l| l == a[0]) {
        None => false,
        Some(off) => (0..a.len()).all(|i| a[i] == b[(off + i) % b.len()]),
    }
}

fn match_components(given: &[Vec<u32>], cycles: Vec<Cycle>) -> Result<Vec<Cycle>, LinkError> {
    let mut pool: Vec<Option<Cycle>> = cycles.into_iter().map(Some).collect();
    let mut out = Vec::with_capacity(given.len());
    for (i, g) in given.iter().enumerate() {
        let mut rev = g.clone();
        reverse_cycle(&mut rev);
        let j = pool
            .iter()
            .position(|c| {
                c.as_ref().is_some_and(|c| cyclic_match(g, &c.labels) || cyclic_match(&rev, &c.labels))
            })
            .ok_or_else(|| {
                LinkError::Inconsistent(format!("component {i} is not a closed strand of the diagram"))
            })?;
        let mut c = pool[j].take().expect("present");
        if !cyclic_match(g, &c.labels) {
            if c.has_under {
                return Err(LinkError::Inconsistent(format!("component {i} runs against an under-strand")));
            }
            c.reverse();
        }
        c.labels = g.clone();
        out.push(c);
    }
    if let Some(c) = pool.into_iter().flatten().next() {
        return Err(LinkError::Inconsistent(format!(
            "edge {} is not covered by the listed components",
            c.labels[0]
        )));
    }
    Ok(out)
}
