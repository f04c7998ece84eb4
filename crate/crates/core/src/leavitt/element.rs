use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::LeavittAlgebra;
use crate::error::{QgrError, Result};
use crate::linalg::{fmt_rational, QMatrix, Rational};
use crate::quiver::Path;

/// One homogeneous component: degree `m`, level `n ≥ max(0, -m)`, and per
/// vertex `i` a `|e_iQ_n| × |e_iQ_{n+m}|` coefficient matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedComponentMatrix {
    degree: i64,
    level: usize,
    blocks: Vec<QMatrix>,
}

impl GradedComponentMatrix {
    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// Length of the paths indexing the columns.
    pub fn column_length(&self) -> usize {
        (self.level as i64 + self.degree) as usize
    }

    pub fn blocks(&self) -> &[QMatrix] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &QMatrix {
        &self.blocks[i]
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(QMatrix::is_zero)
    }

    /// Number of basis monomials `p*q` at this degree and level.
    pub fn basis_size(&self) -> usize {
        self.blocks.iter().map(|b| b.rows() * b.cols()).sum()
    }

    fn map_blocks(&self, f: impl Fn(&QMatrix) -> QMatrix) -> Self {
        GradedComponentMatrix {
            degree: self.degree,
            level: self.level,
            blocks: self.blocks.iter().map(f).collect(),
        }
    }
}

/// A finite sum of homogeneous components, at most one per degree, with
/// zero components dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LeavittElement {
    components: BTreeMap<i64, GradedComponentMatrix>,
}

impl LeavittElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn homogeneous(c: GradedComponentMatrix) -> Self {
        let mut e = Self::zero();
        if !c.is_zero() {
            e.components.insert(c.degree, c);
        }
        e
    }

    pub fn components(&self) -> impl Iterator<Item = &GradedComponentMatrix> {
        self.components.values()
    }

    pub fn component(&self, degree: i64) -> Option<&GradedComponentMatrix> {
        self.components.get(&degree)
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.components.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }
}

/// Result of [`LeavittAlgebra::monomial`]; `mismatch` is set when the two
/// paths end at different vertices and the product is therefore zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub element: LeavittElement,
    pub mismatch: Option<String>,
}

impl LeavittAlgebra {
    fn check_level(&self, degree: i64, level: usize) -> Result<()> {
        if (level as i64) + degree < 0 {
            return Err(QgrError::InvalidInput(format!(
                "level {level} is too low for degree {degree}"
            )));
        }
        Ok(())
    }

    pub fn zero_component(&self, degree: i64, level: usize) -> Result<GradedComponentMatrix> {
        self.check_level(degree, level)?;
        let rows = self.counts(level)?;
        let cols = self.counts((level as i64 + degree) as usize)?;
        Ok(GradedComponentMatrix {
            degree,
            level,
            blocks: rows.iter().zip(&cols).map(|(&r, &c)| QMatrix::zeros(r, c)).collect(),
        })
    }

    /// Build a component from explicit blocks, checking shapes.
    pub fn component(
        &self,
        degree: i64,
        level: usize,
        blocks: Vec<QMatrix>,
    ) -> Result<GradedComponentMatrix> {
        let zero = self.zero_component(degree, level)?;
        if blocks.len() != zero.blocks.len() {
            return Err(QgrError::DimensionMismatch("wrong number of blocks".into()));
        }
        for (i, (b, z)) in blocks.iter().zip(&zero.blocks).enumerate() {
            if b.shape() != z.shape() {
                return Err(QgrError::DimensionMismatch(format!(
                    "block {i} must be {}x{}, got {}x{}",
                    z.rows(),
                    z.cols(),
                    b.rows(),
                    b.cols()
                )));
            }
        }
        Ok(GradedComponentMatrix {
            degree,
            level,
            blocks,
        })
    }

    /// The identity of L₀, written at `level`.
    pub fn unit_component(&self, level: usize) -> Result<GradedComponentMatrix> {
        let rows = self.counts(level)?;
        Ok(GradedComponentMatrix {
            degree: 0,
            level,
            blocks: rows.into_iter().map(QMatrix::identity).collect(),
        })
    }

    pub fn one(&self) -> LeavittElement {
        LeavittElement::homogeneous(self.unit_component(0).expect("level 0 always fits"))
    }

    /// `p*q`, of degree `|q| - |p|` at level `|p|`.
    pub fn monomial(&self, p: &Path, q: &Path) -> Result<Monomial> {
        let degree = q.len() as i64 - p.len() as i64;
        if p.end() != q.end() {
            return Ok(Monomial {
                element: LeavittElement::zero(),
                mismatch: Some(format!(
                    "{} and {} end at different vertices; the monomial is zero",
                    p.render(&self.quiver),
                    q.render(&self.quiver)
                )),
            });
        }
        let mut c = self.zero_component(degree, p.len())?;
        let (r, col) = (self.path_index(p)?, self.path_index(q)?);
        c.blocks[p.end()].set(r, col, Rational::one());
        Ok(Monomial {
            element: LeavittElement::homogeneous(c),
            mismatch: None,
        })
    }

    /// Every basis monomial of degree `degree` at `level`, as components.
    pub fn basis(&self, degree: i64, level: usize) -> Result<Vec<GradedComponentMatrix>> {
        let zero = self.zero_component(degree, level)?;
        let mut out = Vec::with_capacity(zero.basis_size());
        for (i, b) in zero.blocks.iter().enumerate() {
            for r in 0..b.rows() {
                for c in 0..b.cols() {
                    let mut u = zero.clone();
                    u.blocks[i].set(r, c, Rational::one());
                    out.push(u);
                }
            }
        }
        Ok(out)
    }

    /// Move a component one level up: `p*q ↦ Σ_{s(a)=t(q)} (ap)*(aq)`.
    /// Needs the quiver to have no sinks, which [`LeavittAlgebra::new`] ensures.
    pub fn embed_level(&self, x: &GradedComponentMatrix) -> Result<GradedComponentMatrix> {
        let mut out = self.zero_component(x.degree, x.level + 1)?;
        let row_counts = self.counts(x.level)?;
        let col_counts = self.counts(x.column_length())?;
        for (i, block) in x.blocks.iter().enumerate() {
            for (r, c, v) in block.iter() {
                for &a in self.quiver.arrows_from(i) {
                    let j = self.quiver.arrow(a).target;
                    let row = self.arrow_offset(a, &row_counts) + r;
                    let col = self.arrow_offset(a, &col_counts) + c;
                    out.blocks[j].add_to(row, col, v);
                }
            }
        }
        Ok(out)
    }

    pub fn raise_component(
        &self,
        x: &GradedComponentMatrix,
        level: usize,
    ) -> Result<GradedComponentMatrix> {
        if level < x.level {
            return Err(QgrError::InvalidInput(format!(
                "cannot lower a component from level {} to {level}",
                x.level
            )));
        }
        let mut out = x.clone();
        while out.level < level {
            out = self.embed_level(&out)?;
        }
        Ok(out)
    }

    /// Product of two homogeneous components: embed until the column paths
    /// of `x` and the row paths of `y` have equal length, then multiply
    /// blockwise, using `(p*q)(q'*y) = δ_{q,q'} p*y`.
    pub fn multiply_components(
        &self,
        x: &GradedComponentMatrix,
        y: &GradedComponentMatrix,
    ) -> Result<GradedComponentMatrix> {
        let inner_x = x.column_length();
        let inner_y = y.level;
        let (x, y) = if inner_x < inner_y {
            (self.raise_component(x, x.level + inner_y - inner_x)?, y.clone())
        } else {
            (x.clone(), self.raise_component(y, inner_x)?)
        };
        Ok(GradedComponentMatrix {
            degree: x.degree + y.degree,
            level: x.level,
            blocks: x.blocks.iter().zip(&y.blocks).map(|(a, b)| a.mul(b)).collect(),
        })
    }

    fn add_component(
        &self,
        into: &mut BTreeMap<i64, GradedComponentMatrix>,
        c: GradedComponentMatrix,
    ) -> Result<()> {
        let merged = match into.remove(&c.degree) {
            None => c,
            Some(old) => {
                let level = old.level.max(c.level);
                let (a, b) = (self.raise_component(&old, level)?, self.raise_component(&c, level)?);
                GradedComponentMatrix {
                    degree: a.degree,
                    level,
                    blocks: a.blocks.iter().zip(&b.blocks).map(|(p, q)| p.add(q)).collect(),
                }
            }
        };
        if !merged.is_zero() {
            into.insert(merged.degree, merged);
        }
        Ok(())
    }

    pub fn add(&self, x: &LeavittElement, y: &LeavittElement) -> Result<LeavittElement> {
        let mut out = x.components.clone();
        for c in y.components() {
            self.add_component(&mut out, c.clone())?;
        }
        Ok(LeavittElement { components: out })
    }

    pub fn scale(&self, s: &Rational, x: &LeavittElement) -> LeavittElement {
        if s.is_zero() {
            return LeavittElement::zero();
        }
        LeavittElement {
            components: x
                .components
                .iter()
                .map(|(&d, c)| (d, c.map_blocks(|b| b.scale(s))))
                .collect(),
        }
    }

    pub fn sub(&self, x: &LeavittElement, y: &LeavittElement) -> Result<LeavittElement> {
        self.add(x, &self.scale(&-Rational::one(), y))
    }

    pub fn multiply(&self, x: &LeavittElement, y: &LeavittElement) -> Result<LeavittElement> {
        let mut out = BTreeMap::new();
        for a in x.components() {
            for b in y.components() {
                let p = self.multiply_components(a, b)?;
                self.add_component(&mut out, p)?;
            }
        }
        Ok(LeavittElement { components: out })
    }

    pub fn pow(&self, x: &LeavittElement, n: u32) -> Result<LeavittElement> {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.multiply(&acc, x)?;
        }
        Ok(acc)
    }

    /// Equality in L(Q): componentwise after raising to a common level,
    /// which is sound because embedding is injective without sinks.
    pub fn equal(&self, x: &LeavittElement, y: &LeavittElement) -> Result<bool> {
        Ok(self.sub(x, y)?.is_zero())
    }

    /// `Σ coeff·p*q` in canonical path order.
    pub fn render(&self, x: &LeavittElement) -> Result<String> {
        if x.is_zero() {
            return Ok("0".into());
        }
        let mut out = String::new();
        for c in x.components() {
            for (i, block) in c.blocks.iter().enumerate() {
                for (r, col, v) in block.iter() {
                    let p = self.path_at(i, c.level, r)?;
                    let q = self.path_at(i, c.column_length(), col)?;
                    if !out.is_empty() {
                        out.push_str(" + ");
                    }
                    if !v.is_one() {
                        write!(out, "{}·", fmt_rational(v)).unwrap();
                    }
                    out.push_str(&self.render_monomial(&p, &q));
                }
            }
        }
        Ok(out)
    }

    /// `p*q` with trivial sides dropped: `e_1`, `x`, `(ba)*`, `x*(ba)`.
    fn render_monomial(&self, p: &Path, q: &Path) -> String {
        let wrap = |r: &Path| {
            let s = r.render(&self.quiver);
            if r.len() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        match (p.is_trivial(), q.is_trivial()) {
            (true, true) => p.render(&self.quiver),
            (true, false) => wrap(q),
            (false, true) => format!("{}*", wrap(p)),
            (false, false) => format!("{}*{}", wrap(p), wrap(q)),
        }
    }

    pub fn to_json_value(&self, x: &LeavittElement) -> Value {
        let comps: Vec<Value> = x
            .components()
            .map(|c| {
                let blocks: Vec<Value> = c
                    .blocks
                    .iter()
                    .enumerate()
                    .map(|(i, b)| {
                        let entries: Vec<Value> = b
                            .iter()
                            .map(|(r, col, v)| json!([r, col, fmt_rational(v)]))
                            .collect();
                        json!({
                            "vertex": self.quiver.vertex_name(i),
                            "rows": b.rows(),
                            "cols": b.cols(),
                            "entries": entries,
                        })
                    })
                    .collect();
                json!({"degree": c.degree, "level": c.level, "blocks": blocks})
            })
            .collect();
        json!({ "components": comps })
    }
}
