use crate::enumeration::count::CountConfig;
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::graphicality::is_graphic;
use crate::sequence::DegreeSequence;

/// Every labeled realization of `d`, each exactly once. Vertex `i` receives
/// degree `d_{i+1}`.
pub fn enumerate_realizations(
    d: &DegreeSequence,
    limit: Option<usize>,
    config: &CountConfig,
) -> Result<std::iter::Take<Realizations>> {
    if d.len() > config.max_vertices {
        return Err(Error::TooLarge(format!(
            "{} vertices exceeds the limit of {}",
            d.len(),
            config.max_vertices
        )));
    }
    Ok(Realizations::new(d).take(limit.unwrap_or(usize::MAX)))
}

struct Frame {
    vertex: usize,
    candidates: Vec<usize>,
    combo: Vec<usize>,
    fresh: bool,
    applied: bool,
}

/// Depth-first stream over realizations. Vertices are processed in label
/// order; vertex `v` picks its remaining neighbors among later vertices, and
/// a branch is cut as soon as the residual degrees of the later vertices
/// stop being graphic.
pub struct Realizations {
    n: usize,
    residual: Vec<u32>,
    graph: LabeledGraph,
    stack: Vec<Frame>,
}

impl Realizations {
    pub fn new(d: &DegreeSequence) -> Self {
        let n = d.len();
        let mut it = Self {
            n,
            residual: d.degrees().to_vec(),
            graph: LabeledGraph::empty(n),
            stack: Vec::new(),
        };
        if is_graphic(d).graphic {
            let f = it.frame(0);
            it.stack.push(f);
        }
        it
    }

    fn frame(&self, vertex: usize) -> Frame {
        let candidates: Vec<usize> =
            (vertex + 1..self.n).filter(|&u| self.residual[u] > 0).collect();
        Frame { vertex, candidates, combo: Vec::new(), fresh: true, applied: false }
    }

    fn apply(&mut self, top: usize, on: bool) {
        let f = &self.stack[top];
        let v = f.vertex;
        let picked: Vec<usize> = f.combo.iter().map(|&c| f.candidates[c]).collect();
        for u in picked {
            if on {
                self.graph.add_edge(v, u);
                self.residual[u] -= 1;
            } else {
                self.graph.remove_edge(v, u);
                self.residual[u] += 1;
            }
        }
        self.stack[top].applied = on;
    }

    fn later_graphic(&self, v: usize) -> bool {
        if v + 1 >= self.n {
            return true;
        }
        let rest = DegreeSequence::new(self.residual[v + 1..].to_vec()).expect("non-empty");
        is_graphic(&rest).graphic
    }
}

/// Advances `combo` to the next k-subset of `0..m` in lexicographic order.
fn next_combination(combo: &mut Vec<usize>, m: usize, k: usize, fresh: bool) -> bool {
    if fresh {
        if k > m {
            return false;
        }
        combo.clear();
        combo.extend(0..k);
        return true;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < m - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

impl Iterator for Realizations {
    type Item = LabeledGraph;

    fn next(&mut self) -> Option<LabeledGraph> {
        loop {
            let top = self.stack.len().checked_sub(1)?;
            if self.stack[top].applied {
                self.apply(top, false);
            }
            let v = self.stack[top].vertex;
            let need = self.residual[v] as usize;
            let f = &mut self.stack[top];
            let m = f.candidates.len();
            let advanced = next_combination(&mut f.combo, m, need, f.fresh);
            f.fresh = false;
            if !advanced {
                self.stack.pop();
                continue;
            }
            self.apply(top, true);
            if !self.later_graphic(v) {
                continue;
            }
            if v + 1 == self.n {
                return Some(self.graph.clone());
            }
            let next = self.frame(v + 1);
            self.stack.push(next);
        }
    }
}
