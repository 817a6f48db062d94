use std::collections::HashMap;

use super::{first_nonzero_writhe, LinkError, PdCode};

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn fresh(&mut self) -> u32 {
        let id = self.parent.len() as u32;
        self.parent.push(id);
        id
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let up = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = up;
            x = up;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb) as usize] = ra.min(rb);
        }
    }
}

/// Blackboard `d_i`-parallel of every component of a zero-framed diagram.
pub fn cable(diagram: &PdCode, d: &[usize]) -> Result<PdCode, LinkError> {
    cable_with_origins(diagram, d).map(|(pd, _)| pd)
}

/// Like [`cable`], also returning the (original component, copy) of each
/// output component.
///
/// Copy t of a strand sits t units to its left. At a crossing, with the
/// under-strand running west to east, under copies are the rows y = t and over
/// copies are the columns x = r (over-strand running south) or x = -r (running
/// north); every grid point is a crossing with the original orientation.
pub fn cable_with_origins(diagram: &PdCode, d: &[usize]) -> Result<(PdCode, Vec<(usize, usize)>), LinkError> {
    let m = diagram.num_components();
    if d.len() != m {
        return Err(LinkError::CableLength { got: d.len(), m });
    }
    if let Some((component, writhe)) = first_nonzero_writhe(diagram) {
        return Err(LinkError::NotNormalized { component, writhe });
    }
    let ncross = diagram.components().len();
    let comp_of = diagram.edge_components();
    let mut uf = UnionFind { parent: Vec::new() };
    let mut copy_ids: HashMap<(u32, usize), u32> = HashMap::new();
    for (i, comp) in diagram.components().iter().enumerate() {
        for &e in comp {
            for t in 1..=d[i] {
                let id = uf.fresh();
                copy_ids.insert((e, t), id);
            }
        }
    }
    let copy = |e: u32, t: usize| copy_ids[&(e, t)];

    let mut crossings: Vec<[u32; 4]> = Vec::new();
    let mut forward: Vec<bool> = Vec::new();
    let mut touched = vec![false; ncross];
    for (x, c) in diagram.crossings().iter().enumerate() {
        let (iu, io) = (comp_of[&c[0]], comp_of[&c[1]]);
        let (du, dov) = (d[iu], d[io]);
        let fwd = diagram.over_forward()[x];
        match (du, dov) {
            (0, 0) => {}
            (0, _) => {
                for r in 1..=dov {
                    uf.union(copy(c[3], r), copy(c[1], r));
                }
            }
            (_, 0) => {
                for t in 1..=du {
                    uf.union(copy(c[0], t), copy(c[2], t));
                }
            }
            _ => {
                touched[iu] = true;
                touched[io] = true;
                // Column order west to east.
                let cols: Vec<usize> = if fwd { (1..=dov).collect() } else { (1..=dov).rev().collect() };
                let horiz: Vec<Vec<u32>> = (0..du).map(|_| (1..dov).map(|_| uf.fresh()).collect()).collect();
                let vert: Vec<Vec<u32>> = (0..dov).map(|_| (1..du).map(|_| uf.fresh()).collect()).collect();
                for t in 1..=du {
                    for (pos, &r) in cols.iter().enumerate() {
                        let west = if pos == 0 { copy(c[0], t) } else { horiz[t - 1][pos - 1] };
                        let east = if pos + 1 == dov { copy(c[2], t) } else { horiz[t - 1][pos] };
                        let north = if t == du { copy(c[3], r) } else { vert[r - 1][t - 1] };
                        let south = if t == 1 { copy(c[1], r) } else { vert[r - 1][t - 2] };
                        crossings.push([west, south, east, north]);
                        forward.push(fwd);
                    }
                }
            }
        }
    }
    for c in crossings.iter_mut() {
        for l in c.iter_mut() {
            *l = uf.find(*l) + 1;
        }
    }

    let mut starts = Vec::new();
    let mut origins = Vec::new();
    let mut free = 0;
    let mut free_origins = Vec::new();
    for (i, comp) in diagram.components().iter().enumerate() {
        for t in 1..=d[i] {
            if touched[i] {
                starts.push(uf.find(copy(comp[0], t)) + 1);
                origins.push((i, t));
            } else {
                free += 1;
                free_origins.push((i, t));
            }
        }
    }
    for j in 0..diagram.free_loops() {
        let i = ncross + j;
        for t in 1..=d[i] {
            free += 1;
            free_origins.push((i, t));
        }
    }
    let pd = PdCode::from_oriented(crossings, forward, &starts, free)?;
    if pd.components().len() != starts.len() {
        return Err(LinkError::Inconsistent("cable produced unexpected components".into()));
    }
    origins.extend(free_origins);
    Ok((pd.relabeled(), origins))
}
