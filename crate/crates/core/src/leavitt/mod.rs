//! Graded components of the Leavitt path algebra L(Q) of a quiver with no
//! sinks and no sources, realized as path-indexed block matrices.
//!
//! A homogeneous component of degree `m` at level `n` has, for each vertex
//! `i`, a block with rows indexed by `e_iQ_n` and columns by `e_iQ_{n+m}`;
//! the entry at `(p, q)` is the coefficient of the monomial `p*q`. The
//! relation `e_i = Σ_{s(a)=i} a*a` becomes [`LeavittAlgebra::embed_level`],
//! which moves a component to the next level without changing the element.

mod element;
mod phi;
mod section;

use crate::error::{QgrError, Result};
use crate::quiver::{Path, Quiver};
use crate::tower::Tower;

pub use element::{GradedComponentMatrix, LeavittElement, Monomial};
pub use phi::PhiReport;
pub use section::{
    strongly_graded_certificate, ArrowSection, SectionReport, SpanReport, StrongGradingCertificate,
};

/// Largest block side (rows or columns) the module will build.
pub const BLOCK_SIDE_LIMIT: usize = 10_000;

/// Fails unless `q` has no sinks and no sources.
pub fn require_core(q: &Quiver) -> Result<()> {
    if let Some(&v) = q.sinks().first() {
        return Err(QgrError::SinkPresent(q.vertex_name(v).to_string()));
    }
    if let Some(&v) = q.sources().first() {
        return Err(QgrError::SourcePresent(q.vertex_name(v).to_string()));
    }
    Ok(())
}

/// L(Q) for a validated quiver.
#[derive(Clone, Debug)]
pub struct LeavittAlgebra {
    quiver: Quiver,
    tower: Tower,
}

impl LeavittAlgebra {
    pub fn new(q: &Quiver) -> Result<LeavittAlgebra> {
        require_core(q)?;
        Ok(LeavittAlgebra {
            quiver: q.clone(),
            tower: Tower::new(q),
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    /// `|e_iQ_len|` for every vertex, refusing oversized blocks.
    pub fn counts(&self, len: usize) -> Result<Vec<usize>> {
        let sizes = self.tower.sizes(len);
        if let Some((i, &s)) = sizes.iter().enumerate().find(|(_, &s)| s > BLOCK_SIDE_LIMIT) {
            return Err(QgrError::limit(
                format!(
                    "block side at vertex {} and level {len}",
                    self.quiver.vertex_name(i)
                ),
                s,
                BLOCK_SIDE_LIMIT,
            ));
        }
        Ok(sizes)
    }

    /// Where the group of paths `a·r` starts inside `e_{t(a)}Q_{len+1}`,
    /// given `counts = |e_jQ_len|`.
    pub(crate) fn arrow_offset(&self, a: usize, counts: &[usize]) -> usize {
        let target = self.quiver.arrow(a).target;
        self.quiver
            .arrows_into(target)
            .iter()
            .take_while(|&&b| b != a)
            .map(|&b| counts[self.quiver.arrow(b).source])
            .sum()
    }

    /// Index of `p` in the canonical list `e_{t(p)}Q_{|p|}`.
    pub fn path_index(&self, p: &Path) -> Result<usize> {
        let mut index = 0;
        let mut current = p.clone();
        while let Some((rest, a)) = current.split_last(&self.quiver) {
            let counts = self.counts(rest.len())?;
            index += self.arrow_offset(a, &counts);
            current = rest;
        }
        Ok(index)
    }

    /// Inverse of [`path_index`](Self::path_index).
    pub fn path_at(&self, vertex: usize, len: usize, mut index: usize) -> Result<Path> {
        let mut arrows_rev = Vec::with_capacity(len);
        let mut v = vertex;
        for l in (0..len).rev() {
            let counts = self.counts(l)?;
            let mut chosen = None;
            for &b in self.quiver.arrows_into(v) {
                let size = counts[self.quiver.arrow(b).source];
                if index < size {
                    chosen = Some(b);
                    break;
                }
                index -= size;
            }
            let b = chosen.ok_or_else(|| {
                QgrError::InvalidInput(format!("path index out of range at vertex {vertex}"))
            })?;
            arrows_rev.push(b);
            v = self.quiver.arrow(b).source;
        }
        if index != 0 {
            return Err(QgrError::InvalidInput("path index out of range".into()));
        }
        arrows_rev.reverse();
        Path::from_arrows(&self.quiver, v, &arrows_rev)
    }
}
