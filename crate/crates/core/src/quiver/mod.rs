//! Finite quivers, their incidence matrices and paths.
//!
//! Composition follows the path-algebra convention: the path `pq` means
//! "`q` followed by `p`". A [`Path`] stores its arrows first-applied-first
//! and renders right-to-left.

mod parse;
mod path;
mod transform;

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{QgrError, Result};
use crate::linalg::IntMatrix;

pub use parse::{parse_edge_list, parse_json, parse_quiver};
pub use path::{
    enumerate_paths, enumerate_paths_capped, path_counts, path_counts_usize, paths_from, Path,
    DEFAULT_PATH_CAP,
};
pub use transform::{core, sink_deletion_rounds, torsion_classification, veronese, TorsionReport};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver with named vertices and named arrows.
///
/// Vertex order is the declared order and fixes every matrix indexing in
/// the crate. Arrows into a vertex are kept sorted by (source index, name);
/// this is the canonical arrow order.
#[derive(Clone, Debug)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    index: HashMap<String, usize>,
    into: Vec<Vec<usize>>,
    out: Vec<Vec<usize>>,
}

impl PartialEq for Quiver {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.arrows == other.arrows
    }
}

impl Eq for Quiver {}

impl Quiver {
    /// Build a quiver from vertex names and `(name, from, to)` triples.
    pub fn new<V, A, S>(vertices: V, arrows: A) -> Result<Quiver>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        A: IntoIterator<Item = (S, S, S)>,
        S: Into<String>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut index = HashMap::new();
        for (k, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), k).is_some() {
                return Err(QgrError::parse(
                    format!("vertices[{k}]"),
                    format!("duplicate vertex `{v}`"),
                ));
            }
        }
        let mut seen = HashMap::new();
        let mut list = Vec::new();
        for (k, (name, from, to)) in arrows.into_iter().enumerate() {
            let (name, from, to) = (name.into(), from.into(), to.into());
            if seen.insert(name.clone(), k).is_some() {
                return Err(QgrError::parse(
                    format!("arrows[{k}]"),
                    format!("duplicate arrow `{name}`"),
                ));
            }
            let lookup = |v: &String| {
                index.get(v).copied().ok_or_else(|| {
                    QgrError::parse(
                        format!("arrows[{k}]"),
                        format!("arrow `{name}` uses undeclared vertex `{v}`"),
                    )
                })
            };
            list.push(Arrow {
                source: lookup(&from)?,
                target: lookup(&to)?,
                name,
            });
        }
        Ok(Self::from_parts(vertices, list))
    }

    pub(crate) fn from_parts(vertices: Vec<String>, arrows: Vec<Arrow>) -> Quiver {
        let n = vertices.len();
        let index = vertices.iter().cloned().enumerate().map(|(k, v)| (v, k)).collect();
        let mut into = vec![Vec::new(); n];
        let mut out = vec![Vec::new(); n];
        for (k, a) in arrows.iter().enumerate() {
            into[a.target].push(k);
            out[a.source].push(k);
        }
        for list in &mut into {
            list.sort_by(|&x, &y| {
                (arrows[x].source, &arrows[x].name).cmp(&(arrows[y].source, &arrows[y].name))
            });
        }
        for list in &mut out {
            list.sort_by(|&x, &y| {
                (arrows[x].target, &arrows[x].name).cmp(&(arrows[y].target, &arrows[y].name))
            });
        }
        Quiver {
            vertices,
            arrows,
            index,
            into,
            out,
        }
    }

    pub fn empty() -> Quiver {
        Self::from_parts(Vec::new(), Vec::new())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, k: usize) -> &Arrow {
        &self.arrows[k]
    }

    pub fn vertex_name(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Arrows ending at `j`, in canonical order.
    pub fn arrows_into(&self, j: usize) -> &[usize] {
        &self.into[j]
    }

    /// Arrows starting at `i`, sorted by (target index, name).
    pub fn arrows_from(&self, i: usize) -> &[usize] {
        &self.out[i]
    }

    pub fn is_sink(&self, i: usize) -> bool {
        self.out[i].is_empty()
    }

    pub fn is_source(&self, i: usize) -> bool {
        self.into[i].is_empty()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&i| self.is_sink(i)).collect()
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&i| self.is_source(i)).collect()
    }

    /// `c[i][j]` = number of arrows from `j` to `i`.
    pub fn incidence_matrix(&self) -> IntMatrix {
        let n = self.vertex_count();
        let mut c = IntMatrix::zeros(n, n);
        for a in &self.arrows {
            let v = c.get(a.target, a.source) + BigInt::from(1);
            c.set(a.target, a.source, v);
        }
        c
    }

    /// Same counts as [`incidence_matrix`](Self::incidence_matrix), as machine integers.
    pub fn incidence_counts(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut c = vec![vec![0usize; n]; n];
        for a in &self.arrows {
            c[a.target][a.source] += 1;
        }
        c
    }

    pub fn is_acyclic(&self) -> bool {
        torsion_classification(self).infinite_vertices.is_empty()
    }

    /// The full subquiver on the vertices with `keep[i]`, with arrows
    /// between kept vertices. Declared orders are preserved.
    pub fn full_subquiver(&self, keep: &[bool]) -> Quiver {
        let mut new_index = vec![usize::MAX; self.vertex_count()];
        let mut vertices = Vec::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if keep[i] {
                new_index[i] = vertices.len();
                vertices.push(v.clone());
            }
        }
        let arrows = self
            .arrows
            .iter()
            .filter(|a| keep[a.source] && keep[a.target])
            .map(|a| Arrow {
                name: a.name.clone(),
                source: new_index[a.source],
                target: new_index[a.target],
            })
            .collect();
        Self::from_parts(vertices, arrows)
    }

    /// Remove a single vertex and its incident arrows.
    pub fn without_vertex(&self, v: usize) -> Quiver {
        let keep: Vec<bool> = (0..self.vertex_count()).map(|i| i != v).collect();
        self.full_subquiver(&keep)
    }

    /// Reorder vertices: position `k` of the result holds vertex `order[k]`.
    pub fn relabeled(&self, order: &[usize]) -> Result<Quiver> {
        let n = self.vertex_count();
        let mut inverse = vec![usize::MAX; n];
        if order.len() != n {
            return Err(QgrError::InvalidInput("vertex order has wrong length".into()));
        }
        for (k, &v) in order.iter().enumerate() {
            if v >= n || inverse[v] != usize::MAX {
                return Err(QgrError::InvalidInput("vertex order is not a permutation".into()));
            }
            inverse[v] = k;
        }
        let vertices = order.iter().map(|&v| self.vertices[v].clone()).collect();
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow {
                name: a.name.clone(),
                source: inverse[a.source],
                target: inverse[a.target],
            })
            .collect();
        Ok(Self::from_parts(vertices, arrows))
    }

    /// Reorder vertices by name.
    pub fn with_vertex_order(&self, names: &[String]) -> Result<Quiver> {
        let order = names
            .iter()
            .map(|n| {
                self.vertex_index(n)
                    .ok_or_else(|| QgrError::InvalidInput(format!("unknown vertex `{n}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        self.relabeled(&order)
    }

    /// Separator used when writing paths: empty if every arrow name is a
    /// single character, otherwise `·`.
    pub(crate) fn word_separator(&self) -> &'static str {
        if self.arrows.iter().all(|a| a.name.chars().count() == 1) {
            ""
        } else {
            "·"
        }
    }

    pub fn to_file(&self) -> QuiverFile {
        QuiverFile {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowRecord {
                    name: a.name.clone(),
                    from: self.vertices[a.source].clone(),
                    to: self.vertices[a.target].clone(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("quiver serializes")
    }

    pub fn to_dot(&self) -> String {
        crate::dot::quiver_dot(self)
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vertices.is_empty() {
            return writeln!(f, "vertices: (none)");
        }
        writeln!(f, "vertices: {}", self.vertices.join(" "))?;
        for a in &self.arrows {
            writeln!(
                f,
                "{}: {} -> {}",
                a.name, self.vertices[a.source], self.vertices[a.target]
            )?;
        }
        Ok(())
    }
}

/// On-disk JSON shape of a quiver.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct QuiverFile {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowRecord>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ArrowRecord {
    pub name: String,
    pub from: String,
    pub to: String,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn incidence_of_cyclic_three() {
        let c = fixtures::cyclic(3).incidence_matrix();
        assert_eq!(
            c,
            IntMatrix::from_rows(&[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]])
        );
    }

    #[test]
    fn incidence_of_fibonacci_and_compact_plus_scalar() {
        assert_eq!(
            fixtures::fibonacci().incidence_matrix(),
            IntMatrix::from_rows(&[vec![1, 1], vec![1, 0]])
        );
        let c = fixtures::compact_plus_scalar().incidence_matrix();
        assert_eq!(c, IntMatrix::from_rows(&[vec![1, 1], vec![0, 1]]));
        for n in 0..6u32 {
            assert_eq!(
                c.pow(n),
                IntMatrix::from_rows(&[vec![1, n as i64], vec![0, 1]])
            );
        }
    }

    #[test]
    fn duplicates_are_rejected_with_position() {
        let err = Quiver::new(["1", "1"], Vec::<(&str, &str, &str)>::new()).unwrap_err();
        assert!(err.to_string().contains("vertices[1]"), "{err}");
        let err = Quiver::new(["1"], [("x", "1", "1"), ("x", "1", "1")]).unwrap_err();
        assert!(err.to_string().contains("arrows[1]"), "{err}");
        let err = Quiver::new(["1"], [("x", "1", "2")]).unwrap_err();
        assert!(matches!(err, QgrError::Parse { .. }));
    }

    #[test]
    fn canonical_arrow_order_into_a_vertex() {
        let q = Quiver::new(
            ["a", "b"],
            [("z", "b", "a"), ("y", "a", "a"), ("c", "b", "a")],
        )
        .unwrap();
        let names: Vec<&str> = q
            .arrows_into(0)
            .iter()
            .map(|&k| q.arrow(k).name.as_str())
            .collect();
        assert_eq!(names, ["y", "c", "z"]);
    }

    #[test]
    fn relabel_conjugates_incidence() {
        let q = fixtures::compact_plus_scalar();
        let r = q.relabeled(&[1, 0]).unwrap();
        assert_eq!(r.incidence_matrix(), q.incidence_matrix().permute(&[1, 0]));
        assert!(q.relabeled(&[0, 0]).is_err());
    }

    #[test]
    fn empty_quiver_is_legal() {
        let q = Quiver::empty();
        assert_eq!(q.incidence_matrix().rows(), 0);
        assert!(q.sinks().is_empty());
        assert!(q.is_acyclic());
    }
}
