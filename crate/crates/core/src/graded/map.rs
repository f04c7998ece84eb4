use std::collections::HashMap;

use num_traits::One;

use super::{GradedRepresentation, TailDecomposition};
use crate::error::{QgrError, Result};
use crate::linalg::{QMatrix, Rational};
use crate::quiver::{paths_from, Path, Quiver, DEFAULT_PATH_CAP};

/// A degree-preserving module map between two representations on the same
/// window, one matrix per degree and vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    source: GradedRepresentation,
    target: GradedRepresentation,
    // components[d - d0][vertex]: target dim × source dim
    components: Vec<Vec<QMatrix>>,
}

impl GradedMap {
    /// Checks shapes and that every arrow action commutes with the map.
    pub fn new(
        source: &GradedRepresentation,
        target: &GradedRepresentation,
        components: Vec<Vec<QMatrix>>,
    ) -> Result<GradedMap> {
        if source.window() != target.window()
            || source.quiver().vertices() != target.quiver().vertices()
        {
            return Err(QgrError::DimensionMismatch(
                "maps need the same quiver and window on both sides".into(),
            ));
        }
        let (d0, d1) = source.window();
        let q = source.quiver();
        if components.len() != (d1 - d0 + 1) as usize {
            return Err(QgrError::DimensionMismatch("one component per degree".into()));
        }
        for (k, layer) in components.iter().enumerate() {
            let d = d0 + k as i64;
            if layer.len() != q.vertex_count() {
                return Err(QgrError::DimensionMismatch("one component per vertex".into()));
            }
            for (i, m) in layer.iter().enumerate() {
                if m.shape() != (target.dim(d, i), source.dim(d, i)) {
                    return Err(QgrError::DimensionMismatch(format!(
                        "component at degree {d}, vertex {} has the wrong shape",
                        q.vertex_name(i)
                    )));
                }
            }
        }
        for (a, arrow) in q.arrows().iter().enumerate() {
            for d in d0..d1 {
                let k = (d - d0) as usize;
                let lhs = components[k + 1][arrow.target].mul(source.action(a, d));
                let rhs = target.action(a, d).mul(&components[k][arrow.source]);
                if lhs != rhs {
                    return Err(QgrError::InvalidInput(format!(
                        "map does not commute with arrow {} in degree {d}",
                        arrow.name
                    )));
                }
            }
        }
        Ok(GradedMap {
            source: source.clone(),
            target: target.clone(),
            components,
        })
    }

    pub fn identity(m: &GradedRepresentation) -> GradedMap {
        let components = m
            .dims
            .iter()
            .map(|d| d.iter().map(|&x| QMatrix::identity(x)).collect())
            .collect();
        GradedMap {
            source: m.clone(),
            target: m.clone(),
            components,
        }
    }

    /// `Pₜ₍ₐ₎(−1) → Pₛ₍ₐ₎`, `p ↦ p·a` (first `a`, then `p`).
    pub fn right_multiplication(q: &Quiver, a: usize, window: (i64, i64)) -> Result<GradedMap> {
        let arrow = q.arrow(a).clone();
        let source = super::projective(q, arrow.target, -1, window)?;
        let target = super::projective(q, arrow.source, 0, window)?;
        let mut components = Vec::new();
        for d in window.0..=window.1 {
            let mut layer: Vec<QMatrix> = (0..q.vertex_count())
                .map(|j| QMatrix::zeros(target.dim(d, j), source.dim(d, j)))
                .collect();
            if d >= 1 {
                let from = paths_from(q, arrow.target, (d - 1) as u32, DEFAULT_PATH_CAP)?;
                let to = paths_from(q, arrow.source, d as u32, DEFAULT_PATH_CAP)?;
                let index: HashMap<&Path, usize> = to
                    .iter()
                    .flat_map(|l| l.iter().enumerate().map(|(k, p)| (p, k)))
                    .collect();
                for (j, list) in from.iter().enumerate() {
                    for (c, p) in list.iter().enumerate() {
                        let mut arrows = vec![a];
                        arrows.extend_from_slice(p.arrows());
                        let pa = Path::from_arrows(q, arrow.source, &arrows)?;
                        layer[j].set(index[&pa], c, Rational::one());
                    }
                }
            }
            components.push(layer);
        }
        GradedMap::new(&source, &target, components)
    }

    pub fn source(&self) -> &GradedRepresentation {
        &self.source
    }

    pub fn target(&self) -> &GradedRepresentation {
        &self.target
    }

    pub fn component(&self, d: i64, i: usize) -> &QMatrix {
        &self.components[(d - self.source.window().0) as usize][i]
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &GradedMap) -> Result<GradedMap> {
        if first.target != self.source {
            return Err(QgrError::DimensionMismatch("maps do not compose".into()));
        }
        let components = self
            .components
            .iter()
            .zip(&first.components)
            .map(|(g, f)| g.iter().zip(f).map(|(x, y)| x.mul(y)).collect())
            .collect();
        Ok(GradedMap {
            source: first.source.clone(),
            target: self.target.clone(),
            components,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.components.iter().flatten().all(QMatrix::is_identity)
    }

    /// Restriction to the window `[n, d₁]`.
    pub fn truncate(&self, n: i64) -> Result<GradedMap> {
        let k = (n - self.source.window().0) as usize;
        Ok(GradedMap {
            source: self.source.truncate(n)?,
            target: self.target.truncate(n)?,
            components: self.components[k..].to_vec(),
        })
    }
}

/// A left inverse of `f` on the tails from degree `n`: split the degree-`n`
/// layer vertex by vertex, then push the splitting up through the
/// invertible assembled maps,
/// `g_{j+1,i} = A^P_{j,i} · (⊕ₐ g_{j,s(a)}) · (A^{P′}_{j,i})⁻¹`.
pub fn split_tail(f: &GradedMap, n: i64) -> Result<GradedMap> {
    let (p, p2) = (f.source(), f.target());
    let q = p.quiver();
    for m in [p, p2] {
        let TailDecomposition { verified, .. } = m.tail_decomposition(n)?;
        if !verified {
            return Err(QgrError::UnverifiedTail(n));
        }
    }
    let d1 = p.window().1;
    let mut layers: Vec<Vec<QMatrix>> = Vec::new();
    let first = (0..q.vertex_count())
        .map(|i| {
            f.component(n, i).left_inverse().ok_or_else(|| QgrError::NotInjective {
                degree: n,
                vertex: q.vertex_name(i).to_string(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    layers.push(first);
    for j in n..d1 {
        let prev = layers.last().expect("seeded");
        let next = (0..q.vertex_count())
            .map(|i| {
                let into = q.arrows_into(i);
                let rows: usize = into.iter().map(|&a| p.dim(j, q.arrow(a).source)).sum();
                let cols: usize = into.iter().map(|&a| p2.dim(j, q.arrow(a).source)).sum();
                let mut diag = QMatrix::zeros(rows, cols);
                let (mut r, mut c) = (0, 0);
                for &a in into {
                    let g = &prev[q.arrow(a).source];
                    diag.place(r, c, g);
                    r += g.rows();
                    c += g.cols();
                }
                let back = p2
                    .assembled_map(j, i)
                    .inverse()
                    .expect("verified tails have invertible assembled maps");
                p.assembled_map(j, i).mul(&diag).mul(&back)
            })
            .collect();
        layers.push(next);
    }
    GradedMap::new(&p2.truncate(n)?, &p.truncate(n)?, layers)
}
