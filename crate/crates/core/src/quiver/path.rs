use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use super::Quiver;
use crate::error::{QgrError, Result};

/// Default cap on the number of explicitly materialized paths.
pub const DEFAULT_PATH_CAP: usize = 1_000_000;

/// A path in a quiver. Arrows are stored first-applied-first; a path of
/// length zero is the trivial path `e_i` at its base vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    start: usize,
    end: usize,
    arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(vertex: usize) -> Path {
        Path {
            start: vertex,
            end: vertex,
            arrows: Vec::new(),
        }
    }

    /// Build from arrow indices listed in the order they are traversed.
    pub fn from_arrows(q: &Quiver, start: usize, arrows: &[usize]) -> Result<Path> {
        let mut p = Path::trivial(start);
        for &a in arrows {
            if a >= q.arrow_count() {
                return Err(QgrError::InvalidInput(format!("no arrow with index {a}")));
            }
            if q.arrow(a).source != p.end {
                return Err(QgrError::InvalidInput(format!(
                    "arrow `{}` does not start where the path ends",
                    q.arrow(a).name
                )));
            }
            p = p.then(q, a);
        }
        Ok(p)
    }

    /// Build from arrow names listed in traversal order (first-applied-first).
    pub fn from_names(q: &Quiver, start: &str, names: &[&str]) -> Result<Path> {
        let s = q
            .vertex_index(start)
            .ok_or_else(|| QgrError::InvalidInput(format!("unknown vertex `{start}`")))?;
        let idx = names
            .iter()
            .map(|n| {
                q.arrow_index(n)
                    .ok_or_else(|| QgrError::InvalidInput(format!("unknown arrow `{n}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Path::from_arrows(q, s, &idx)
    }

    /// Extend by arrow `a`, applied after the existing arrows (the product `a·self`).
    pub fn then(&self, q: &Quiver, a: usize) -> Path {
        let arrow = q.arrow(a);
        debug_assert_eq!(arrow.source, self.end);
        let mut arrows = self.arrows.clone();
        arrows.push(a);
        Path {
            start: self.start,
            end: arrow.target,
            arrows,
        }
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> usize {
        self.end
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Arrow indices, first-applied-first.
    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    /// The path minus its last-applied arrow, together with that arrow.
    pub fn split_last(&self, q: &Quiver) -> Option<(Path, usize)> {
        let (&last, rest) = self.arrows.split_last()?;
        let end = rest.last().map_or(self.start, |&a| q.arrow(a).target);
        Some((
            Path {
                start: self.start,
                end,
                arrows: rest.to_vec(),
            },
            last,
        ))
    }

    /// Written right-to-left: `xw` is "w, then x".
    pub fn render(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e_{}", q.vertex_name(self.start));
        }
        let sep = q.word_separator();
        self.arrows
            .iter()
            .rev()
            .map(|&a| q.arrow(a).name.as_str())
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Canonical order: lexicographic on the written word, arrows ranked by
    /// (source index, name); trivial paths by vertex.
    pub fn canonical_cmp(&self, other: &Path, q: &Quiver) -> Ordering {
        let key = |a: usize| (q.arrow(a).source, q.arrow(a).name.as_str());
        let lhs = self.arrows.iter().rev().map(|&a| key(a));
        let rhs = other.arrows.iter().rev().map(|&a| key(a));
        lhs.cmp(rhs)
            .then(self.start.cmp(&other.start))
            .then(self.end.cmp(&other.end))
    }
}

fn check_cap(total: &BigInt, cap: usize, what: &str) -> Result<()> {
    if *total > BigInt::from(cap) {
        return Err(QgrError::limit(what.to_string(), total, cap));
    }
    Ok(())
}

/// `p_n = Cⁿ·𝟙`: the number of length-`n` paths ending at each vertex.
pub fn path_counts(q: &Quiver, n: u32) -> Vec<BigInt> {
    let ones = vec![BigInt::one(); q.vertex_count()];
    q.incidence_matrix().pow(n).mul_vec(&ones)
}

/// [`path_counts`] as machine integers, for sizing explicit bases.
pub fn path_counts_usize(q: &Quiver, n: u32) -> Result<Vec<usize>> {
    path_counts(q, n)
        .iter()
        .map(|c| {
            c.to_usize()
                .ok_or_else(|| QgrError::limit("path count", c, usize::MAX))
        })
        .collect()
}

/// Length-`n` paths grouped by end vertex, each group in canonical order.
pub fn enumerate_paths(q: &Quiver, n: u32) -> Result<Vec<Vec<Path>>> {
    enumerate_paths_capped(q, n, DEFAULT_PATH_CAP)
}

pub fn enumerate_paths_capped(q: &Quiver, n: u32, cap: usize) -> Result<Vec<Vec<Path>>> {
    let total: BigInt = path_counts(q, n).iter().sum();
    check_cap(&total, cap, &format!("paths of length {n}"))?;
    let seeds = (0..q.vertex_count())
        .map(|i| vec![Path::trivial(i)])
        .collect();
    Ok(grow(q, seeds, n))
}

/// Length-`n` paths starting at `start`, grouped by end vertex in canonical order.
pub fn paths_from(q: &Quiver, start: usize, n: u32, cap: usize) -> Result<Vec<Vec<Path>>> {
    let column = q.incidence_matrix().pow(n);
    let total: BigInt = (0..q.vertex_count()).map(|j| column.get(j, start)).sum();
    check_cap(&total, cap, &format!("paths of length {n} from a vertex"))?;
    let mut seeds = vec![Vec::new(); q.vertex_count()];
    seeds[start].push(Path::trivial(start));
    Ok(grow(q, seeds, n))
}

// Each step prepends every arrow into j, in canonical order, to the
// existing paths ending at that arrow's source; this realizes the canonical
// order without sorting.
fn grow(q: &Quiver, mut layer: Vec<Vec<Path>>, n: u32) -> Vec<Vec<Path>> {
    for _ in 0..n {
        layer = (0..q.vertex_count())
            .map(|j| {
                q.arrows_into(j)
                    .iter()
                    .flat_map(|&a| {
                        let src = q.arrow(a).source;
                        layer[src].iter().map(move |r| r.then(q, a))
                    })
                    .collect()
            })
            .collect();
    }
    layer
}
