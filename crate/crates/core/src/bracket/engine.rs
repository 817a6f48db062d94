use std::collections::HashMap;

use super::{BracketError, LaurentPoly};
use crate::link::PdCode;

/// One step of a sliced diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Event {
    /// Insert crossing `x` of the diagram.
    Crossing(usize),
    /// Open a free loop: two new boundary points joined by an arc.
    Cup,
    /// Close the most recent free loop.
    Cap,
}

/// A diagram together with an evaluation order and its width profile.
#[derive(Debug, Clone)]
pub struct SlicedDiagram {
    crossings: Vec<[u32; 4]>,
    events: Vec<Event>,
    widths: Vec<usize>,
}

impl SlicedDiagram {
    pub fn events(&self) -> &[Event] {
        &self.events
    }

    /// Number of open boundary points after each event.
    pub fn widths(&self) -> &[usize] {
        &self.widths
    }

    pub fn max_width(&self) -> usize {
        self.widths.iter().copied().max().unwrap_or(0)
    }
}

fn width_delta(count: &HashMap<u32, u8>, c: &[u32; 4]) -> i64 {
    let mut seen: [(u32, u8); 4] = [(0, 0); 4];
    let mut n = 0;
    let mut delta = 0i64;
    for &l in c {
        let before = count.get(&l).copied().unwrap_or(0)
            + seen[..n].iter().filter(|(s, _)| *s == l).map(|(_, k)| *k).sum::<u8>();
        delta += if before == 0 { 1 } else { -1 };
        seen[n] = (l, 1);
        n += 1;
    }
    delta
}

/// Greedy order starting from crossing `start`: each step takes the crossing
/// giving the smallest next width, ties to the smallest index.
fn greedy_order(crossings: &[[u32; 4]], start: usize) -> (Vec<usize>, Vec<usize>) {
    let n = crossings.len();
    let mut count: HashMap<u32, u8> = HashMap::new();
    let mut used = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut widths = Vec::with_capacity(n);
    let mut width: i64 = 0;
    let mut pick = start;
    for _ in 0..n {
        used[pick] = true;
        width += width_delta(&count, &crossings[pick]);
        for &l in &crossings[pick] {
            *count.entry(l).or_insert(0) += 1;
        }
        order.push(pick);
        widths.push(width as usize);
        let mut best: Option<(i64, usize)> = None;
        for (x, c) in crossings.iter().enumerate() {
            if used[x] {
                continue;
            }
            let d = width_delta(&count, c);
            if best.is_none_or(|(bd, _)| d < bd) {
                best = Some((d, x));
            }
        }
        match best {
            Some((_, x)) => pick = x,
            None => break,
        }
    }
    (order, widths)
}

fn catalan_cost(w: usize) -> u128 {
    // Number of crossingless matchings on w points bounds the state count.
    let k = (w / 2) as u128;
    let mut c: u128 = 1;
    for i in 0..k {
        c = c.saturating_mul(2 * (2 * i + 1)) / (i + 2);
    }
    c
}

/// Chooses an event order for the contraction engine.
///
/// Every crossing is tried as the start of a greedy minimum-width order; the
/// order with the smallest maximum width wins, then the smallest total state
/// bound, then the smallest start index. Free loops come last as cup/cap pairs.
pub fn slice(diagram: &PdCode) -> SlicedDiagram {
    let crossings = diagram.crossings().to_vec();
    let mut best: Option<((usize, u128), Vec<usize>, Vec<usize>)> = None;
    for start in 0..crossings.len() {
        let (order, widths) = greedy_order(&crossings, start);
        let key = (
            widths.iter().copied().max().unwrap_or(0),
            widths.iter().map(|&w| catalan_cost(w)).fold(0u128, |a, b| a.saturating_add(b)),
        );
        if best.as_ref().is_none_or(|(k, _, _)| key < *k) {
            best = Some((key, order, widths));
        }
    }
    let (mut events, mut widths): (Vec<Event>, Vec<usize>) = match best {
        Some((_, order, widths)) => (order.into_iter().map(Event::Crossing).collect(), widths),
        None => (Vec::new(), Vec::new()),
    };
    for _ in 0..diagram.free_loops() {
        events.push(Event::Cup);
        widths.push(2);
        events.push(Event::Cap);
        widths.push(0);
    }
    SlicedDiagram { crossings, events, widths }
}

#[derive(Clone, Copy)]
enum Link {
    Slot(usize),
    Term(u8),
}

/// A-smoothing pairs (a,d)(b,c) and A⁻¹-smoothing pairs (a,b)(c,d), as the
/// partner of each slot.
const SMOOTHINGS: [([usize; 4], i64); 2] = [([3, 2, 1, 0], 1), ([1, 0, 3, 2], -1)];

fn mul_delta_pow(p: &LaurentPoly, k: usize) -> LaurentPoly {
    let mut cur = p.clone();
    for _ in 0..k {
        let mut next = cur.shift(2);
        next.add_shifted(&cur, -2, false);
        cur = -next;
    }
    cur
}

/// Temperley-Lieb contraction of a sliced diagram with every loop weighted δ
/// (the empty diagram gives 1).
pub fn contract(sliced: &SlicedDiagram, width_limit: usize) -> Result<LaurentPoly, BracketError> {
    if let Some((event, &width)) = sliced.widths.iter().enumerate().find(|(_, &w)| w > width_limit) {
        return Err(BracketError::WidthLimit { event, width, limit: width_limit });
    }
    let mut boundary: Vec<u32> = Vec::new();
    let mut states: HashMap<Vec<u8>, LaurentPoly> = HashMap::new();
    states.insert(Vec::new(), LaurentPoly::one());
    let mut loops = 0usize;

    for ev in &sliced.events {
        let x = match *ev {
            Event::Crossing(x) => x,
            Event::Cup => continue,
            Event::Cap => {
                loops += 1;
                continue;
            }
        };
        let c = sliced.crossings[x];
        let index: HashMap<u32, usize> = boundary.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let open: [Option<usize>; 4] = c.map(|l| index.get(&l).copied());
        let closing: Vec<bool> = (0..boundary.len()).map(|i| open.contains(&Some(i))).collect();
        let mut new_boundary: Vec<u32> = boundary.iter().enumerate().filter(|(i, _)| !closing[*i]).map(|(_, &l)| l).collect();
        let mut old_to_new: Vec<Option<u8>> = vec![None; boundary.len()];
        let mut k = 0u8;
        for (i, slot) in old_to_new.iter_mut().enumerate() {
            if !closing[i] {
                *slot = Some(k);
                k += 1;
            }
        }
        // Outside link of a slot whose label is new to the boundary.
        let mut fresh: [Option<Link>; 4] = [None; 4];
        for s in 0..4 {
            if open[s].is_some() {
                continue;
            }
            if let Some(t) = (0..4).find(|&t| t != s && c[t] == c[s]) {
                fresh[s] = Some(Link::Slot(t));
            } else {
                fresh[s] = Some(Link::Term(new_boundary.len() as u8));
                new_boundary.push(c[s]);
            }
        }
        let slot_of_old: HashMap<usize, usize> = (0..4).filter_map(|s| open[s].map(|i| (i, s))).collect();

        let mut next_states: HashMap<Vec<u8>, LaurentPoly> = HashMap::with_capacity(states.len() * 2);
        for (key, weight) in states.drain() {
            let outside: [Link; 4] = std::array::from_fn(|s| match (fresh[s], open[s]) {
                (Some(l), _) => l,
                (None, Some(i)) => {
                    let j = key[i] as usize;
                    match slot_of_old.get(&j) {
                        Some(&t) => Link::Slot(t),
                        None => Link::Term(old_to_new[j].expect("partner survives")),
                    }
                }
                (None, None) => unreachable!("slot is either fresh or open"),
            });
            let mut base: Vec<u8> = vec![u8::MAX; new_boundary.len()];
            for (i, &pi) in key.iter().enumerate() {
                if let (Some(a), Some(b)) = (old_to_new[i], old_to_new[pi as usize]) {
                    base[a as usize] = b;
                }
            }
            for (partner, exp) in SMOOTHINGS {
                let mut nk = base.clone();
                let mut visited = [false; 4];
                for s in 0..4 {
                    let Link::Term(t0) = outside[s] else { continue };
                    if visited[s] {
                        continue;
                    }
                    let mut cur = s;
                    loop {
                        visited[cur] = true;
                        let other = partner[cur];
                        visited[other] = true;
                        match outside[other] {
                            Link::Term(t1) => {
                                nk[t0 as usize] = t1;
                                nk[t1 as usize] = t0;
                                break;
                            }
                            Link::Slot(n) => cur = n,
                        }
                    }
                }
                let mut cycles = 0;
                for s in 0..4 {
                    if visited[s] {
                        continue;
                    }
                    let mut cur = s;
                    loop {
                        visited[cur] = true;
                        let other = partner[cur];
                        visited[other] = true;
                        let Link::Slot(n) = outside[other] else {
                            return Err(BracketError::Internal("open path in closed cycle".into()));
                        };
                        if n == s {
                            break;
                        }
                        cur = n;
                    }
                    cycles += 1;
                }
                let term = mul_delta_pow(&weight, cycles);
                next_states.entry(nk).or_default().add_shifted(&term, exp, false);
            }
        }
        next_states.retain(|_, w| !w.is_zero());
        states = next_states;
        boundary = new_boundary;
    }
    if !boundary.is_empty() {
        return Err(BracketError::Internal("boundary not closed after all events".into()));
    }
    let result = states.remove(&Vec::new()).unwrap_or_default();
    Ok(mul_delta_pow(&result, loops))
}

/// Exhaustive 2ⁿ state sum, every loop weighted δ. Test oracle only.
pub fn naive_bracket(diagram: &PdCode) -> Result<LaurentPoly, BracketError> {
    let c = diagram.crossings();
    let n = c.len();
    if n > 20 {
        return Err(BracketError::TooManyCrossings(n));
    }
    // Slot s of crossing x is node 4x + s; edges join the two slots of a label.
    let mut ends: HashMap<u32, Vec<usize>> = HashMap::new();
    for (x, cr) in c.iter().enumerate() {
        for (s, &l) in cr.iter().enumerate() {
            ends.entry(l).or_default().push(4 * x + s);
        }
    }
    let edges: Vec<(usize, usize)> = ends.values().map(|v| (v[0], v[1])).collect();
    // tally[(a-count, loops)]
    let mut tally: HashMap<(usize, usize), i64> = HashMap::new();
    let mut parent = vec![0usize; 4 * n];
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for mask in 0u32..(1u32 << n) {
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i;
        }
        let mut comps = 4 * n;
        let mut join = |parent: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(parent, a), find(parent, b));
            if ra != rb {
                parent[ra] = rb;
                comps -= 1;
            }
        };
        for x in 0..n {
            let b = 4 * x;
            if mask >> x & 1 == 0 {
                join(&mut parent, b, b + 3);
                join(&mut parent, b + 1, b + 2);
            } else {
                join(&mut parent, b, b + 1);
                join(&mut parent, b + 2, b + 3);
            }
        }
        for &(a, b) in &edges {
            join(&mut parent, a, b);
        }
        let a_count = n - mask.count_ones() as usize;
        *tally.entry((a_count, comps)).or_insert(0) += 1;
    }
    let mut total = LaurentPoly::zero();
    let delta = LaurentPoly::delta();
    let mut keys: Vec<_> = tally.into_iter().collect();
    keys.sort();
    for ((a, loops), count) in keys {
        let exp = a as i64 - (n - a) as i64;
        let term = &LaurentPoly::monomial(count.into(), exp) * &delta.pow((loops + diagram.free_loops()) as u32);
        total = &total + &term;
    }
    Ok(total)
}
