//! Graded representations of a quiver over a finite window of degrees: the
//! finitely presented graded kQ-modules as seen through their tails.
//!
//! In degree `d` the module has a space at every vertex; an arrow `a` acts
//! from degree `d` at `s(a)` to degree `d+1` at `t(a)`. The window only
//! certifies what it can see: a tail is projective "at `n`" when every
//! assembled map `⊕_{t(a)=i} M_{j,s(a)} → M_{j+1,i}` with `n ≤ j < d₁` is
//! invertible.

mod json;
mod map;
mod transport;

use std::collections::HashMap;

use num_traits::One;
use serde_json::json;

use crate::error::{QgrError, Result};
use crate::linalg::{QMatrix, Rational};
use crate::quiver::{paths_from, Path, Quiver, DEFAULT_PATH_CAP};
use crate::tower::{K0Class, K0Group};

pub use map::{split_tail, GradedMap};
pub use transport::{extend_by_zero, transport, transport_class, Deletion};

/// Dimensions and action matrices over the inclusive window `[d₀, d₁]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedRepresentation {
    quiver: Quiver,
    window: (i64, i64),
    // dims[d - d0][vertex]
    dims: Vec<Vec<usize>>,
    // actions[arrow][d - d0] for d < d1
    actions: Vec<Vec<QMatrix>>,
    generated_by: Option<i64>,
}

/// Result of [`GradedRepresentation::tail_decomposition`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TailDecomposition {
    pub degree: i64,
    /// `mᵢ` with `M_{≥n} ≅ ⊕ Pᵢ(−n)^{mᵢ}` when verified.
    pub multiplicities: Vec<usize>,
    pub verified: bool,
}

impl GradedRepresentation {
    /// Build and validate. `actions[a][k]` maps degree `d₀+k`.
    pub fn new(
        quiver: &Quiver,
        window: (i64, i64),
        dims: Vec<Vec<usize>>,
        actions: Vec<Vec<QMatrix>>,
    ) -> Result<GradedRepresentation> {
        let (d0, d1) = window;
        if d1 < d0 {
            return Err(QgrError::InvalidInput(format!("empty window [{d0}, {d1}]")));
        }
        let len = (d1 - d0) as usize;
        if dims.len() != len + 1 || dims.iter().any(|v| v.len() != quiver.vertex_count()) {
            return Err(QgrError::DimensionMismatch(
                "dimension table does not match window and vertex count".into(),
            ));
        }
        if actions.len() != quiver.arrow_count() || actions.iter().any(|a| a.len() != len) {
            return Err(QgrError::DimensionMismatch(
                "one action matrix is needed per arrow and degree below the window end".into(),
            ));
        }
        for (k, arrow) in quiver.arrows().iter().enumerate() {
            for (j, m) in actions[k].iter().enumerate() {
                let want = (dims[j + 1][arrow.target], dims[j][arrow.source]);
                if m.shape() != want {
                    return Err(QgrError::DimensionMismatch(format!(
                        "arrow {} in degree {} must be {}x{}, got {}x{}",
                        arrow.name,
                        d0 + j as i64,
                        want.0,
                        want.1,
                        m.rows(),
                        m.cols()
                    )));
                }
            }
        }
        Ok(GradedRepresentation {
            quiver: quiver.clone(),
            window,
            dims,
            actions,
            generated_by: None,
        })
    }

    /// The zero representation.
    pub fn zero(quiver: &Quiver, window: (i64, i64)) -> Result<GradedRepresentation> {
        let len = (window.1 - window.0).max(0) as usize;
        Self::new(
            quiver,
            window,
            vec![vec![0; quiver.vertex_count()]; len + 1],
            quiver
                .arrows()
                .iter()
                .map(|_| vec![QMatrix::zeros(0, 0); len])
                .collect(),
        )
    }

    /// Assert that the module is generated in degrees `≤ g`; checked.
    pub fn with_generated_by(mut self, g: i64) -> Result<GradedRepresentation> {
        let (d0, d1) = self.window;
        if g < d0 || g > d1 - 1 {
            return Err(QgrError::InvalidInput(format!(
                "generated_by {g} must lie in [{d0}, {}]",
                d1 - 1
            )));
        }
        for d in g..d1 {
            for i in 0..self.quiver.vertex_count() {
                if self.assembled_map(d, i).rank() != self.dim(d + 1, i) {
                    return Err(QgrError::InvalidInput(format!(
                        "not generated by degree {g}: nothing reaches all of degree {} at vertex {}",
                        d + 1,
                        self.quiver.vertex_name(i)
                    )));
                }
            }
        }
        self.generated_by = Some(g);
        Ok(self)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn window(&self) -> (i64, i64) {
        self.window
    }

    pub fn generated_by(&self) -> Option<i64> {
        self.generated_by
    }

    fn offset(&self, d: i64) -> usize {
        assert!(
            (self.window.0..=self.window.1).contains(&d),
            "degree {d} outside window"
        );
        (d - self.window.0) as usize
    }

    pub fn dim(&self, d: i64, i: usize) -> usize {
        self.dims[self.offset(d)][i]
    }

    pub fn dim_vector(&self, d: i64) -> &[usize] {
        &self.dims[self.offset(d)]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().flatten().sum()
    }

    /// Matrix of arrow `a` from degree `d` to `d+1`.
    pub fn action(&self, a: usize, d: i64) -> &QMatrix {
        assert!(d < self.window.1, "no action out of the last degree");
        &self.actions[a][self.offset(d)]
    }

    /// `⊕_{a: t(a)=i} M_{d,s(a)} → M_{d+1,i}`, summands in canonical
    /// arrow order.
    pub fn assembled_map(&self, d: i64, i: usize) -> QMatrix {
        let into = self.quiver.arrows_into(i);
        let width = into.iter().map(|&a| self.dim(d, self.quiver.arrow(a).source)).sum();
        let mut out = QMatrix::zeros(self.dim(d + 1, i), width);
        let mut col = 0;
        for &a in into {
            out.place(0, col, self.action(a, d));
            col += self.dim(d, self.quiver.arrow(a).source);
        }
        out
    }

    fn check_tail_degree(&self, n: i64) -> Result<()> {
        let (d0, d1) = self.window;
        if n < d0 || n + 1 > d1 {
            return Err(QgrError::WindowTooShort {
                start: d0,
                end: d1,
                degree: n,
            });
        }
        Ok(())
    }

    /// Whether every assembled map from degree `j ≥ n` is invertible.
    pub fn tail_verified(&self, n: i64) -> Result<bool> {
        self.check_tail_degree(n)?;
        for j in n..self.window.1 {
            for i in 0..self.quiver.vertex_count() {
                if self.assembled_map(j, i).inverse().is_none() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn tail_decomposition(&self, n: i64) -> Result<TailDecomposition> {
        let verified = self.tail_verified(n)?;
        Ok(TailDecomposition {
            degree: n,
            multiplicities: self.dim_vector(n).to_vec(),
            verified,
        })
    }

    /// The K₀ datum `(n, dim M_n)` of a verified tail.
    pub fn qgr_class(&self, n: i64) -> Result<K0Class> {
        let t = self.tail_decomposition(n)?;
        if !t.verified {
            return Err(QgrError::UnverifiedTail(n));
        }
        let level = usize::try_from(n).map_err(|_| {
            QgrError::InvalidInput(format!("class level {n} must be non-negative"))
        })?;
        K0Group::new(&self.quiver).class(
            t.multiplicities.iter().map(|&m| m.into()).collect(),
            level,
        )
    }

    /// `M(j)`, with `M(j)_d = M_{d+j}`.
    pub fn twist(&self, j: i64) -> GradedRepresentation {
        GradedRepresentation {
            window: (self.window.0 - j, self.window.1 - j),
            generated_by: self.generated_by.map(|g| g - j),
            ..self.clone()
        }
    }

    /// `M_{≥n}` on the window `[n, d₁]`.
    pub fn truncate(&self, n: i64) -> Result<GradedRepresentation> {
        let (d0, d1) = self.window;
        if n < d0 || n > d1 {
            return Err(QgrError::WindowTooShort {
                start: d0,
                end: d1,
                degree: n,
            });
        }
        let k = (n - d0) as usize;
        Ok(GradedRepresentation {
            quiver: self.quiver.clone(),
            window: (n, d1),
            dims: self.dims[k..].to_vec(),
            actions: self.actions.iter().map(|a| a[k..].to_vec()).collect(),
            generated_by: None,
        })
    }

    pub fn direct_sum(&self, other: &GradedRepresentation) -> Result<GradedRepresentation> {
        if self.window != other.window || self.quiver.vertices() != other.quiver.vertices() {
            return Err(QgrError::DimensionMismatch(
                "direct sums need the same quiver and window".into(),
            ));
        }
        let dims = self
            .dims
            .iter()
            .zip(&other.dims)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        let actions = self
            .actions
            .iter()
            .zip(&other.actions)
            .map(|(xs, ys)| {
                xs.iter()
                    .zip(ys)
                    .map(|(x, y)| {
                        let mut m = QMatrix::zeros(x.rows() + y.rows(), x.cols() + y.cols());
                        m.place(0, 0, x);
                        m.place(x.rows(), x.cols(), y);
                        m
                    })
                    .collect()
            })
            .collect();
        GradedRepresentation::new(&self.quiver, self.window, dims, actions)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        json::to_value(self)
    }

    pub fn from_json(quiver: &Quiver, text: &str) -> Result<GradedRepresentation> {
        json::parse(quiver, text)
    }

    pub fn summary_json(&self) -> serde_json::Value {
        json!({"window": [self.window.0, self.window.1], "total_dim": self.total_dim()})
    }
}

/// Index of each path in its end-vertex list.
fn index_paths(layer: &[Vec<Path>]) -> HashMap<&Path, usize> {
    layer
        .iter()
        .flat_map(|l| l.iter().enumerate().map(|(k, p)| (p, k)))
        .collect()
}

/// `Pᵢ(twist)`: the degree-`d` space at `j` has as basis the paths from `i`
/// of length `d + twist` ending at `j`; arrows act by left concatenation.
pub fn projective(
    q: &Quiver,
    i: usize,
    twist: i64,
    window: (i64, i64),
) -> Result<GradedRepresentation> {
    let (d0, d1) = window;
    if d1 < d0 {
        return Err(QgrError::InvalidInput(format!("empty window [{d0}, {d1}]")));
    }
    let layers = (d0..=d1)
        .map(|d| {
            let len = d + twist;
            if len < 0 {
                Ok(vec![Vec::new(); q.vertex_count()])
            } else {
                paths_from(q, i, len as u32, DEFAULT_PATH_CAP)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let dims = layers
        .iter()
        .map(|l| l.iter().map(Vec::len).collect())
        .collect();
    let mut actions = vec![Vec::new(); q.arrow_count()];
    for k in 0..layers.len() - 1 {
        let next = index_paths(&layers[k + 1]);
        for (a, arrow) in q.arrows().iter().enumerate() {
            let src = &layers[k][arrow.source];
            let mut m = QMatrix::zeros(layers[k + 1][arrow.target].len(), src.len());
            for (c, p) in src.iter().enumerate() {
                let r = next[&p.then(q, a)];
                m.set(r, c, Rational::one());
            }
            actions[a].push(m);
        }
    }
    GradedRepresentation::new(q, window, dims, actions)
}

/// The simple module `Eᵢ` sitting in the first degree of the window.
pub fn simple(q: &Quiver, i: usize, window: (i64, i64)) -> Result<GradedRepresentation> {
    let mut m = GradedRepresentation::zero(q, window)?;
    m.dims[0][i] = 1;
    for (a, arrow) in q.arrows().iter().enumerate() {
        if let Some(first) = m.actions[a].first_mut() {
            *first = QMatrix::zeros(m.dims[1][arrow.target], m.dims[0][arrow.source]);
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::quiver::path_counts;
    use num_bigint::BigInt;

    #[test]
    fn projective_degree_zero_is_a_point() {
        let q = fixtures::fibonacci();
        for i in 0..2 {
            let p = projective(&q, i, 0, (0, 4)).unwrap();
            let mut e = vec![0; 2];
            e[i] = 1;
            assert_eq!(p.dim_vector(0), e.as_slice());
        }
    }

    #[test]
    fn fibonacci_projective_dims_are_columns_of_powers() {
        let q = fixtures::fibonacci();
        let c = q.incidence_matrix();
        let p = projective(&q, 0, 0, (0, 6)).unwrap();
        for n in 0..=6 {
            let col: Vec<usize> = (0..2)
                .map(|j| usize::try_from(c.pow(n).get(j, 0)).unwrap())
                .collect();
            assert_eq!(p.dim_vector(n as i64), col.as_slice());
        }
        let total: BigInt = path_counts(&q, 3).iter().sum();
        let both = projective(&q, 0, 0, (3, 3)).unwrap().total_dim()
            + projective(&q, 1, 0, (3, 3)).unwrap().total_dim();
        assert_eq!(BigInt::from(both), total);
    }

    #[test]
    fn projectives_are_their_own_tails() {
        for f in fixtures::all() {
            for i in 0..f.quiver.vertex_count() {
                let p = projective(&f.quiver, i, 0, (0, 4)).unwrap();
                for n in 0..4 {
                    assert!(p.tail_verified(n).unwrap(), "{} P_{i} at {n}", f.name);
                }
                let t = p.tail_decomposition(0).unwrap();
                let mut delta = vec![0; f.quiver.vertex_count()];
                delta[i] = 1;
                assert_eq!(t.multiplicities, delta);
            }
        }
    }

    #[test]
    fn source_projective_tail() {
        let q = fixtures::source_into_loop();
        let (s, v) = (q.vertex_index("s").unwrap(), q.vertex_index("v").unwrap());
        let ps = projective(&q, s, 0, (0, 5)).unwrap();
        let t = ps.tail_decomposition(1).unwrap();
        assert!(t.verified);
        assert_eq!(t.multiplicities[v], 1);
        assert_eq!(t.multiplicities[s], 0);
        let pv = projective(&q, v, 0, (0, 4)).unwrap();
        assert_eq!(ps.truncate(1).unwrap().twist(1), pv);
    }

    #[test]
    fn simple_has_zero_class() {
        let q = fixtures::fibonacci();
        assert!(simple(&q, 0, (0, 1)).unwrap().tail_decomposition(1).is_err());
        let e = simple(&q, 0, (0, 2)).unwrap();
        let t = e.tail_decomposition(1).unwrap();
        assert!(t.verified);
        assert_eq!(t.multiplicities, [0, 0]);
        let g = K0Group::new(&q);
        assert!(g.is_zero(&e.qgr_class(1).unwrap()));
        assert!(!e.tail_verified(0).unwrap());
    }

    #[test]
    fn window_too_short() {
        let q = fixtures::fibonacci();
        let p = projective(&q, 0, 0, (0, 2)).unwrap();
        assert!(matches!(p.tail_decomposition(2), Err(QgrError::WindowTooShort { .. })));
        assert!(matches!(p.tail_decomposition(-1), Err(QgrError::WindowTooShort { .. })));
    }

    #[test]
    fn class_is_stable_under_raising() {
        let q = fixtures::fibonacci();
        let g = K0Group::new(&q);
        let p = projective(&q, 1, -1, (0, 5)).unwrap();
        let a = p.qgr_class(1).unwrap();
        assert_eq!(a.vector, [BigInt::from(0), BigInt::from(1)]);
        for n in 2..5 {
            assert!(g.equal(&a, &p.qgr_class(n).unwrap()));
        }
    }

    #[test]
    fn direct_sum_adds_classes() {
        let q = fixtures::fibonacci();
        let g = K0Group::new(&q);
        let a = projective(&q, 0, 0, (0, 3)).unwrap();
        let b = projective(&q, 1, -1, (0, 3)).unwrap();
        let s = a.direct_sum(&b).unwrap();
        let lhs = s.qgr_class(1).unwrap();
        let rhs = g.add(&a.qgr_class(1).unwrap(), &b.qgr_class(1).unwrap());
        assert!(g.equal(&lhs, &rhs));
    }

    #[test]
    fn generated_by_is_checked() {
        let q = fixtures::fibonacci();
        let p = projective(&q, 0, 0, (0, 3)).unwrap();
        assert!(p.clone().with_generated_by(0).is_ok());
        let e = simple(&q, 0, (0, 2)).unwrap();
        assert!(e.with_generated_by(0).is_ok());
        let mut bad = GradedRepresentation::zero(&q, (0, 1)).unwrap();
        bad.dims[1][0] = 1;
        for (a, arrow) in q.arrows().iter().enumerate() {
            bad.actions[a][0] = QMatrix::zeros(bad.dims[1][arrow.target], 0);
        }
        assert!(bad.with_generated_by(0).is_err());
    }

    #[test]
    fn twist_shifts_window() {
        let q = fixtures::fibonacci();
        let p = projective(&q, 0, 0, (0, 3)).unwrap();
        let t = p.twist(-1);
        assert_eq!(t.window(), (1, 4));
        assert_eq!(t.dim_vector(1), p.dim_vector(0));
        assert_eq!(projective(&q, 0, -1, (1, 4)).unwrap(), t);
    }
}
