//! Text forms accepted on the command line.

use degseq::{DegreeSequence, LabeledGraph};

/// Degrees as written by the user, before sorting.
#[derive(Debug, Clone)]
pub struct RawDegrees(pub Vec<u32>);

impl RawDegrees {
    /// The sorted sequence, and whether sorting changed the order.
    pub fn normalize(&self) -> Result<(DegreeSequence, bool), degseq::Error> {
        let d = DegreeSequence::new(self.0.clone())?;
        Ok((d.clone(), d.degrees() != &self.0[..]))
    }
}

pub fn degrees(s: &str) -> Result<RawDegrees, String> {
    let v = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u32>().map_err(|e| format!("bad degree {t:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    if v.is_empty() {
        return Err("empty degree sequence".into());
    }
    Ok(RawDegrees(v))
}

/// `N:u-v,u-v,...`, vertices `0..N`. `N:` alone is the empty graph.
pub fn graph(s: &str) -> Result<LabeledGraph, String> {
    let (n, rest) = s.split_once(':').ok_or_else(|| format!("expected N:u-v,..., got {s:?}"))?;
    let n: usize = n.trim().parse().map_err(|e| format!("bad vertex count {n:?}: {e}"))?;
    let mut edges = Vec::new();
    for e in rest.split(',').map(str::trim).filter(|e| !e.is_empty()) {
        let (u, v) = e.split_once('-').ok_or_else(|| format!("bad edge {e:?}"))?;
        let u = u.trim().parse().map_err(|_| format!("bad edge {e:?}"))?;
        let v = v.trim().parse().map_err(|_| format!("bad edge {e:?}"))?;
        edges.push((u, v));
    }
    LabeledGraph::from_edges(n, edges).map_err(|e| e.to_string())
}

pub fn format_edges(edges: &[(usize, usize)]) -> String {
    edges.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(",")
}

pub fn format_graph(g: &LabeledGraph) -> String {
    format!("{}:{}", g.vertex_count(), format_edges(&g.edges()))
}
