//! Moving representations along the deletion of one sink or source, and
//! back by extension by zero.

use super::GradedRepresentation;
use crate::error::{QgrError, Result};
use crate::linalg::QMatrix;
use crate::quiver::Quiver;
use crate::tower::K0Class;

/// A single deletion step, naming a vertex of the larger quiver.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Deletion {
    Sink(usize),
    Source(usize),
}

impl Deletion {
    pub fn vertex(self) -> usize {
        match self {
            Deletion::Sink(v) | Deletion::Source(v) => v,
        }
    }

    pub fn check(self, q: &Quiver) -> Result<()> {
        match self {
            Deletion::Sink(v) if !q.is_sink(v) => {
                Err(QgrError::NotASink(q.vertex_name(v).to_string()))
            }
            Deletion::Source(v) if !q.is_source(v) => {
                Err(QgrError::NotASource(q.vertex_name(v).to_string()))
            }
            _ => Ok(()),
        }
    }
}

/// Restriction to the quiver without the deleted vertex. For a sink this
/// forgets the space there; for a source it keeps `{m : e_s m = 0}`, which
/// in a representation is again everything away from `s`.
pub fn transport(m: &GradedRepresentation, step: Deletion) -> Result<GradedRepresentation> {
    let q = m.quiver();
    step.check(q)?;
    let v = step.vertex();
    let smaller = q.without_vertex(v);
    let dims = m
        .dims
        .iter()
        .map(|d| d.iter().enumerate().filter(|&(i, _)| i != v).map(|(_, &x)| x).collect())
        .collect();
    let actions = smaller
        .arrows()
        .iter()
        .map(|a| m.actions[q.arrow_index(&a.name).expect("subquiver arrow")].clone())
        .collect();
    GradedRepresentation::new(&smaller, m.window(), dims, actions)
}

/// Extend a representation of a full subquiver of `q` by zero spaces.
pub fn extend_by_zero(m: &GradedRepresentation, q: &Quiver) -> Result<GradedRepresentation> {
    let sub = m.quiver();
    let embed = sub
        .vertices()
        .iter()
        .map(|name| {
            q.vertex_index(name)
                .ok_or_else(|| QgrError::InvalidInput(format!("vertex {name} is not in the target quiver")))
        })
        .collect::<Result<Vec<_>>>()?;
    let (d0, d1) = m.window();
    let len = (d1 - d0) as usize;
    let dims: Vec<Vec<usize>> = m
        .dims
        .iter()
        .map(|d| {
            let mut full = vec![0; q.vertex_count()];
            for (k, &i) in embed.iter().enumerate() {
                full[i] = d[k];
            }
            full
        })
        .collect();
    let actions = q
        .arrows()
        .iter()
        .map(|arrow| match sub.arrow_index(&arrow.name) {
            Some(b) => {
                let sb = sub.arrow(b);
                if embed[sb.source] != arrow.source || embed[sb.target] != arrow.target {
                    return Err(QgrError::InvalidInput(format!(
                        "arrow {} has different endpoints in the two quivers",
                        arrow.name
                    )));
                }
                Ok(m.actions[b].clone())
            }
            None => Ok((0..len)
                .map(|k| QMatrix::zeros(dims[k + 1][arrow.target], dims[k][arrow.source]))
                .collect()),
        })
        .collect::<Result<Vec<_>>>()?;
    GradedRepresentation::new(q, m.window(), dims, actions)
}

/// The K₀ map matching [`transport`]: `(n, v) ↦ (n+1, (Cv)|_{I′})`.
/// One step up is what makes it respect source deletion, where degree-`n`
/// mass at the source only becomes visible in degree `n+1`.
pub fn transport_class(q: &Quiver, step: Deletion, x: &K0Class) -> Result<K0Class> {
    step.check(q)?;
    if x.vector.len() != q.vertex_count() {
        return Err(QgrError::DimensionMismatch("class does not match the quiver".into()));
    }
    let image = q.incidence_matrix().mul_vec(&x.vector);
    Ok(K0Class {
        level: x.level + 1,
        vector: image
            .into_iter()
            .enumerate()
            .filter(|&(i, _)| i != step.vertex())
            .map(|(_, c)| c)
            .collect(),
    })
}
