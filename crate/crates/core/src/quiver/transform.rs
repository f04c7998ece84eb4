use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use serde::Serialize;

use super::path::enumerate_paths_capped;
use super::{Arrow, Quiver};
use crate::error::Result;

/// Q°: repeatedly delete every sink and every source until none remain.
pub fn core(q: &Quiver) -> Quiver {
    let mut current = q.clone();
    loop {
        let keep: Vec<bool> = (0..current.vertex_count())
            .map(|i| !current.is_sink(i) && !current.is_source(i))
            .collect();
        if keep.iter().all(|&k| k) {
            return current;
        }
        current = current.full_subquiver(&keep);
    }
}

/// Number of rounds of simultaneous sink deletion before the quiver stops
/// changing. A vertex survives `k` rounds iff some path of length `k` starts
/// there, so this is also the number of extra embedding steps after which
/// the tower's embeddings become injective.
pub fn sink_deletion_rounds(q: &Quiver) -> usize {
    let mut current = q.clone();
    let mut rounds = 0;
    loop {
        let keep: Vec<bool> = (0..current.vertex_count())
            .map(|i| !current.is_sink(i))
            .collect();
        if keep.iter().all(|&k| k) {
            return rounds;
        }
        current = current.full_subquiver(&keep);
        rounds += 1;
    }
}

/// The Q⁰ / Q^∞ split of a quiver: `finite_start_vertices` are the vertices
/// from which only finitely many paths start.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionReport {
    pub finite_start_vertices: Vec<usize>,
    pub infinite_vertices: Vec<usize>,
    pub infinite_subquiver: Quiver,
}

#[derive(Serialize)]
struct TorsionJson<'a> {
    finite_start_vertices: Vec<&'a str>,
    infinite_vertices: Vec<&'a str>,
    infinite_subquiver: super::QuiverFile,
}

impl TorsionReport {
    pub fn to_json_value(&self, q: &Quiver) -> serde_json::Value {
        let names = |v: &[usize]| v.iter().map(|&i| q.vertex_name(i)).collect::<Vec<_>>();
        serde_json::to_value(TorsionJson {
            finite_start_vertices: names(&self.finite_start_vertices),
            infinite_vertices: names(&self.infinite_vertices),
            infinite_subquiver: self.infinite_subquiver.to_file(),
        })
        .expect("torsion report serializes")
    }
}

/// A vertex is in I^∞ iff a cycle (including a loop) is reachable from it.
pub fn torsion_classification(q: &Quiver) -> TorsionReport {
    let n = q.vertex_count();
    let mut g = DiGraph::<(), ()>::with_capacity(n, q.arrow_count());
    let nodes: Vec<_> = (0..n).map(|_| g.add_node(())).collect();
    for a in q.arrows() {
        g.add_edge(nodes[a.source], nodes[a.target], ());
    }
    let mut on_cycle = vec![false; n];
    for component in tarjan_scc(&g) {
        let cyclic = component.len() > 1
            || q.arrows_from(component[0].index())
                .iter()
                .any(|&k| q.arrow(k).target == component[0].index());
        if cyclic {
            for v in component {
                on_cycle[v.index()] = true;
            }
        }
    }
    // walk arrows backwards from cyclic vertices
    let mut infinite = on_cycle.clone();
    let mut stack: Vec<usize> = (0..n).filter(|&i| on_cycle[i]).collect();
    while let Some(v) = stack.pop() {
        for &k in q.arrows_into(v) {
            let s = q.arrow(k).source;
            if !infinite[s] {
                infinite[s] = true;
                stack.push(s);
            }
        }
    }
    TorsionReport {
        finite_start_vertices: (0..n).filter(|&i| !infinite[i]).collect(),
        infinite_vertices: (0..n).filter(|&i| infinite[i]).collect(),
        infinite_subquiver: q.full_subquiver(&infinite),
    }
}

/// Q^(m): same vertices, one arrow per length-`m` path, named by its word.
pub fn veronese(q: &Quiver, m: u32, cap: usize) -> Result<Quiver> {
    assert!(m >= 1, "veronese degree must be at least 1");
    let paths = enumerate_paths_capped(q, m, cap)?;
    let arrows = paths
        .iter()
        .flatten()
        .map(|p| Arrow {
            name: p.render(q),
            source: p.start(),
            target: p.end(),
        })
        .collect();
    Ok(Quiver::from_parts(q.vertices().to_vec(), arrows))
}
