use std::fmt;

use num_traits::One;

use crate::error::{QgrError, Result};
use crate::linalg::{fmt_rational, QMatrix, Rational};
use crate::quiver::{sink_deletion_rounds, Quiver};

/// An element of some level `Sₙ`: one square block per vertex, sized
/// `p_{n,i}`. Size-zero blocks are legal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TowerElement {
    level: usize,
    blocks: Vec<QMatrix>,
}

impl TowerElement {
    pub fn level(&self) -> usize {
        self.level
    }

    pub fn blocks(&self) -> &[QMatrix] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &QMatrix {
        &self.blocks[i]
    }

    pub fn is_zero_at_level(&self) -> bool {
        self.blocks.iter().all(QMatrix::is_zero)
    }
}

impl fmt::Display for TowerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "level {}:", self.level)?;
        for (i, b) in self.blocks.iter().enumerate() {
            write!(f, " [{i}]")?;
            if b.is_zero() {
                write!(f, " 0_{}", b.rows())?;
            } else {
                let entries: Vec<String> = b
                    .iter()
                    .map(|(r, c, v)| format!("({r},{c})={}", fmt_rational(v)))
                    .collect();
                write!(f, " {}", entries.join(" "))?;
            }
        }
        Ok(())
    }
}

/// The directed system `S₀ → S₁ → ⋯` of a fixed quiver.
#[derive(Clone, Debug)]
pub struct Tower {
    quiver: Quiver,
    incidence: Vec<Vec<usize>>,
    extra_steps: usize,
}

impl Tower {
    pub fn new(q: &Quiver) -> Tower {
        Tower {
            quiver: q.clone(),
            incidence: q.incidence_counts(),
            extra_steps: sink_deletion_rounds(q),
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn vertex_count(&self) -> usize {
        self.incidence.len()
    }

    /// Number of θ applications after which θ is injective on everything
    /// that survives in the limit.
    pub fn stabilization_steps(&self) -> usize {
        self.extra_steps
    }

    /// Block sizes `p_n` at level `n`.
    ///
    /// Panics if a size overflows `usize`; such a level cannot be
    /// materialized anyway.
    pub fn sizes(&self, n: usize) -> Vec<usize> {
        let m = self.vertex_count();
        let mut p = vec![1usize; m];
        for _ in 0..n {
            p = (0..m)
                .map(|j| {
                    (0..m).fold(0usize, |acc, i| {
                        self.incidence[j][i]
                            .checked_mul(p[i])
                            .and_then(|x| acc.checked_add(x))
                            .expect("level size overflows usize")
                    })
                })
                .collect();
        }
        p
    }

    /// Assemble an element from explicit blocks, checking their shapes.
    pub fn element(&self, level: usize, blocks: Vec<QMatrix>) -> Result<TowerElement> {
        let sizes = self.sizes(level);
        if blocks.len() != sizes.len() {
            return Err(QgrError::DimensionMismatch(format!(
                "expected {} blocks, got {}",
                sizes.len(),
                blocks.len()
            )));
        }
        for (i, (b, &s)) in blocks.iter().zip(&sizes).enumerate() {
            if b.shape() != (s, s) {
                return Err(QgrError::DimensionMismatch(format!(
                    "block {i} at level {level} must be {s}x{s}, got {}x{}",
                    b.rows(),
                    b.cols()
                )));
            }
        }
        Ok(TowerElement { level, blocks })
    }

    pub fn zero(&self, level: usize) -> TowerElement {
        TowerElement {
            level,
            blocks: self.sizes(level).into_iter().map(|s| QMatrix::zeros(s, s)).collect(),
        }
    }

    pub fn unit(&self, level: usize) -> TowerElement {
        TowerElement {
            level,
            blocks: self.sizes(level).into_iter().map(QMatrix::identity).collect(),
        }
    }

    /// The matrix unit `E_{r,c}` in block `i` at `level`.
    pub fn matrix_unit(&self, level: usize, i: usize, r: usize, c: usize) -> TowerElement {
        let mut e = self.zero(level);
        let s = e.blocks[i].rows();
        e.blocks[i] = QMatrix::unit(s, s, r, c);
        e
    }

    /// Every matrix unit at `level`, block by block.
    pub fn matrix_units(&self, level: usize) -> Vec<TowerElement> {
        let sizes = self.sizes(level);
        let mut out = Vec::new();
        for (i, &s) in sizes.iter().enumerate() {
            for r in 0..s {
                for c in 0..s {
                    out.push(self.matrix_unit(level, i, r, c));
                }
            }
        }
        out
    }

    /// Identity of block `i` only.
    pub fn block_idempotent(&self, level: usize, i: usize) -> TowerElement {
        let mut e = self.zero(level);
        e.blocks[i] = QMatrix::identity(e.blocks[i].rows());
        e
    }

    /// θₙ: block `j` of the image stacks, for each source vertex `i` in
    /// declared order, `c_{ji}` diagonal copies of block `i`.
    pub fn theta(&self, e: &TowerElement) -> TowerElement {
        let sizes = self.sizes(e.level);
        let next = self.sizes(e.level + 1);
        let blocks = (0..self.vertex_count())
            .map(|j| {
                let mut out = QMatrix::zeros(next[j], next[j]);
                let mut offset = 0;
                for i in 0..self.vertex_count() {
                    for _ in 0..self.incidence[j][i] {
                        out.place(offset, offset, &e.blocks[i]);
                        offset += sizes[i];
                    }
                }
                debug_assert_eq!(offset, next[j]);
                out
            })
            .collect();
        TowerElement {
            level: e.level + 1,
            blocks,
        }
    }

    pub fn raise_to_level(&self, e: &TowerElement, level: usize) -> TowerElement {
        assert!(level >= e.level, "cannot lower an element from level {} to {level}", e.level);
        let mut out = e.clone();
        while out.level < level {
            out = self.theta(&out);
        }
        out
    }

    fn common(&self, a: &TowerElement, b: &TowerElement) -> (TowerElement, TowerElement) {
        let level = a.level.max(b.level);
        (self.raise_to_level(a, level), self.raise_to_level(b, level))
    }

    fn zip_blocks(
        &self,
        a: &TowerElement,
        b: &TowerElement,
        op: impl Fn(&QMatrix, &QMatrix) -> QMatrix,
    ) -> TowerElement {
        let (a, b) = self.common(a, b);
        TowerElement {
            level: a.level,
            blocks: a.blocks.iter().zip(&b.blocks).map(|(x, y)| op(x, y)).collect(),
        }
    }

    pub fn add(&self, a: &TowerElement, b: &TowerElement) -> TowerElement {
        self.zip_blocks(a, b, QMatrix::add)
    }

    pub fn sub(&self, a: &TowerElement, b: &TowerElement) -> TowerElement {
        self.zip_blocks(a, b, QMatrix::sub)
    }

    pub fn mul(&self, a: &TowerElement, b: &TowerElement) -> TowerElement {
        self.zip_blocks(a, b, QMatrix::mul)
    }

    pub fn scalar_mul(&self, s: &Rational, a: &TowerElement) -> TowerElement {
        TowerElement {
            level: a.level,
            blocks: a.blocks.iter().map(|b| b.scale(s)).collect(),
        }
    }

    /// Zero in the direct limit: after [`stabilization_steps`](Self::stabilization_steps)
    /// further embeddings every block at a vertex without long paths has
    /// been annihilated and θ is injective on the rest.
    pub fn limit_is_zero(&self, e: &TowerElement) -> bool {
        let raised = self.raise_to_level(e, e.level + self.extra_steps);
        raised.is_zero_at_level()
    }

    pub fn limit_equal(&self, a: &TowerElement, b: &TowerElement) -> bool {
        let (a, b) = self.common(a, b);
        if a == b {
            return true;
        }
        self.limit_is_zero(&self.sub(&a, &b))
    }

    pub fn is_unit(&self, e: &TowerElement) -> bool {
        self.limit_equal(e, &self.unit(0))
    }

    pub fn neg(&self, e: &TowerElement) -> TowerElement {
        self.scalar_mul(&-Rational::one(), e)
    }
}
