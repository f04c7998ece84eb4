use std::collections::BTreeMap;

use num_traits::One;
use serde_json::{json, Value};

use super::{require_core, GradedComponentMatrix, LeavittAlgebra, LeavittElement};
use crate::error::{QgrError, Result};
use crate::linalg::{Rational, SparseBasis};
use crate::quiver::{Path, Quiver};

/// One chosen incoming arrow per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowSection {
    arrows: Vec<usize>,
}

impl ArrowSection {
    pub fn new(q: &Quiver, arrows: Vec<usize>) -> Result<ArrowSection> {
        if arrows.len() != q.vertex_count() {
            return Err(QgrError::InvalidInput(format!(
                "a section needs one arrow per vertex, got {} for {}",
                arrows.len(),
                q.vertex_count()
            )));
        }
        for (i, &a) in arrows.iter().enumerate() {
            if a >= q.arrow_count() || q.arrow(a).target != i {
                return Err(QgrError::InvalidInput(format!(
                    "section arrow for vertex {} does not end there",
                    q.vertex_name(i)
                )));
            }
        }
        Ok(ArrowSection { arrows })
    }

    pub fn from_names(q: &Quiver, names: &[&str]) -> Result<ArrowSection> {
        let arrows = names
            .iter()
            .map(|n| {
                q.arrow_index(n)
                    .ok_or_else(|| QgrError::InvalidInput(format!("unknown arrow {n}")))
            })
            .collect::<Result<Vec<_>>>()?;
        ArrowSection::new(q, arrows)
    }

    /// The canonically first arrow into each vertex.
    pub fn first_incoming(q: &Quiver) -> Result<ArrowSection> {
        let arrows = (0..q.vertex_count())
            .map(|i| {
                q.arrows_into(i).first().copied().ok_or_else(|| {
                    QgrError::SourcePresent(q.vertex_name(i).to_string())
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ArrowSection { arrows })
    }

    pub fn arrow_for(&self, vertex: usize) -> usize {
        self.arrows[vertex]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionReport {
    pub plus_minus_is_one: bool,
    pub minus_plus_idempotent: bool,
    pub minus_plus_is_one: bool,
}

impl SectionReport {
    pub fn verified(&self) -> bool {
        self.plus_minus_is_one && self.minus_plus_idempotent
    }
}

/// Two factorizations of 1, one through `L₋₁L₁` and one through `L₁L₋₁`.
#[derive(Clone, Debug)]
pub struct StrongGradingCertificate {
    /// `(a*, a)` for every arrow; `Σ a*·a = 1`.
    pub ghost_pairs: Vec<(LeavittElement, LeavittElement)>,
    pub ghost_sum_is_one: bool,
    pub t_plus: LeavittElement,
    pub t_minus: LeavittElement,
    pub plus_minus_is_one: bool,
}

impl StrongGradingCertificate {
    pub fn verified(&self) -> bool {
        self.ghost_sum_is_one && self.plus_minus_is_one
    }
}

/// Outcome of a span check for a homogeneous component at one level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanReport {
    pub degree: i64,
    pub level: usize,
    pub generators: usize,
    pub rank: usize,
    pub dimension: usize,
}

impl SpanReport {
    pub fn spans(&self) -> bool {
        self.rank == self.dimension
    }
}

impl LeavittAlgebra {
    /// `t₊ = Σᵢ aᵢ`, degree 1.
    pub fn t_plus(&self, s: &ArrowSection) -> Result<LeavittElement> {
        let mut c = self.zero_component(1, 0)?;
        let mut blocks = c.blocks().to_vec();
        for (i, block) in blocks.iter_mut().enumerate() {
            let col = self.path_index(&self.arrow_path(s.arrow_for(i))?)?;
            block.set(0, col, Rational::one());
        }
        c = self.component(1, 0, blocks)?;
        Ok(LeavittElement::homogeneous(c))
    }

    /// `t₋ = Σᵢ aᵢ*`, degree −1.
    pub fn t_minus(&self, s: &ArrowSection) -> Result<LeavittElement> {
        let mut out = LeavittElement::zero();
        for i in 0..self.vertex_count() {
            let a = s.arrow_for(i);
            out = self.add(&out, &self.ghost(a)?)?;
        }
        Ok(out)
    }

    /// The arrow `a` as the monomial `e_{t(a)}* a`.
    pub fn arrow_element(&self, a: usize) -> Result<LeavittElement> {
        let p = self.arrow_path(a)?;
        Ok(self.monomial(&Path::trivial(p.end()), &p)?.element)
    }

    /// The ghost arrow `a* = a* e_{t(a)}`.
    pub fn ghost(&self, a: usize) -> Result<LeavittElement> {
        let p = self.arrow_path(a)?;
        Ok(self.monomial(&p, &Path::trivial(p.end()))?.element)
    }

    fn arrow_path(&self, a: usize) -> Result<Path> {
        Path::from_arrows(&self.quiver, self.quiver.arrow(a).source, &[a])
    }

    pub fn verify_section_identities(&self, s: &ArrowSection) -> Result<SectionReport> {
        let (tp, tm) = (self.t_plus(s)?, self.t_minus(s)?);
        let one = self.one();
        let pm = self.multiply(&tp, &tm)?;
        let mp = self.multiply(&tm, &tp)?;
        Ok(SectionReport {
            plus_minus_is_one: self.equal(&pm, &one)?,
            minus_plus_idempotent: self.equal(&self.multiply(&mp, &mp)?, &mp)?,
            minus_plus_is_one: self.equal(&mp, &one)?,
        })
    }

    /// Every degree-`d` monomial at `level` factors as `t₊ᵈ·y` (for `d ≥ 0`)
    /// or `y·t₋⁻ᵈ` (for `d < 0`) with `y` of degree 0. Returns how many
    /// monomials were checked, or the first failure.
    pub fn verify_section_factorization(
        &self,
        s: &ArrowSection,
        degree: i64,
        level: usize,
    ) -> Result<std::result::Result<usize, String>> {
        let k = degree.unsigned_abs() as u32;
        let tp = self.pow(&self.t_plus(s)?, k)?;
        let tm = self.pow(&self.t_minus(s)?, k)?;
        let basis = self.basis(degree, level)?;
        for b in &basis {
            let x = LeavittElement::homogeneous(b.clone());
            let rebuilt = if degree >= 0 {
                let y = self.multiply(&tm, &x)?;
                debug_assert!(y.degrees().iter().all(|&d| d == 0));
                self.multiply(&tp, &y)?
            } else {
                let y = self.multiply(&x, &tp)?;
                self.multiply(&y, &tm)?
            };
            if !self.equal(&rebuilt, &x)? {
                return Ok(Err(self.render(&x)?));
            }
        }
        Ok(Ok(basis.len()))
    }

    /// Rank of the span of all `n`-fold products of degree-1 monomials
    /// taken at `level`, against the dimension of the degree-`n` component
    /// at that level.
    pub fn degree_one_power_span(&self, n: u32, level: usize) -> Result<SpanReport> {
        let ones = self.basis(1, level)?;
        let target = self.zero_component(n as i64, level)?;
        let mut products: Vec<GradedComponentMatrix> = vec![self.unit_component(level)?];
        for _ in 0..n {
            let mut next = Vec::with_capacity(products.len() * ones.len());
            for p in &products {
                for o in &ones {
                    next.push(self.multiply_components(p, o)?);
                }
            }
            products = next;
        }
        let mut span = SparseBasis::new();
        for p in &products {
            let p = self.raise_component(p, level)?;
            span.insert(flatten(&p));
        }
        Ok(SpanReport {
            degree: n as i64,
            level,
            generators: products.len(),
            rank: span.rank(),
            dimension: target.basis_size(),
        })
    }
}

fn flatten(c: &GradedComponentMatrix) -> BTreeMap<usize, Rational> {
    let mut out = BTreeMap::new();
    let mut offset = 0;
    for b in c.blocks() {
        for (r, col, v) in b.iter() {
            out.insert(offset + r * b.cols() + col, v.clone());
        }
        offset += b.rows() * b.cols();
    }
    out
}

/// Certifies `1 ∈ L₋₁L₁` and `1 ∈ L₁L₋₁`.
pub fn strongly_graded_certificate(q: &Quiver) -> Result<StrongGradingCertificate> {
    require_core(q)?;
    let l = LeavittAlgebra::new(q)?;
    let one = l.one();
    let mut ghost_pairs = Vec::with_capacity(q.arrow_count());
    let mut sum = LeavittElement::zero();
    for a in 0..q.arrow_count() {
        let (g, x) = (l.ghost(a)?, l.arrow_element(a)?);
        sum = l.add(&sum, &l.multiply(&g, &x)?)?;
        ghost_pairs.push((g, x));
    }
    let s = ArrowSection::first_incoming(q)?;
    let (t_plus, t_minus) = (l.t_plus(&s)?, l.t_minus(&s)?);
    let pm = l.multiply(&t_plus, &t_minus)?;
    Ok(StrongGradingCertificate {
        ghost_sum_is_one: l.equal(&sum, &one)?,
        plus_minus_is_one: l.equal(&pm, &one)?,
        ghost_pairs,
        t_plus,
        t_minus,
    })
}

impl StrongGradingCertificate {
    pub fn to_json_value(&self, l: &LeavittAlgebra) -> Result<Value> {
        let pairs = self
            .ghost_pairs
            .iter()
            .map(|(g, x)| Ok(json!([l.render(g)?, l.render(x)?])))
            .collect::<Result<Vec<_>>>()?;
        Ok(json!({
            "ghost_pairs": pairs,
            "ghost_sum_is_one": self.ghost_sum_is_one,
            "t_plus": l.render(&self.t_plus)?,
            "t_minus": l.render(&self.t_minus)?,
            "plus_minus_is_one": self.plus_minus_is_one,
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn single_loop_section() {
        let q = fixtures::loops(1);
        let l = LeavittAlgebra::new(&q).unwrap();
        let s = ArrowSection::first_incoming(&q).unwrap();
        assert_eq!(l.render(&l.t_plus(&s).unwrap()).unwrap(), "x");
        let r = l.verify_section_identities(&s).unwrap();
        assert!(r.plus_minus_is_one && r.minus_plus_is_one);
    }

    #[test]
    fn fibonacci_section_is_strict() {
        let q = fixtures::fibonacci();
        let l = LeavittAlgebra::new(&q).unwrap();
        let s = ArrowSection::from_names(&q, &["x", "a"]).unwrap();
        let r = l.verify_section_identities(&s).unwrap();
        assert!(r.plus_minus_is_one);
        assert!(r.minus_plus_idempotent);
        assert!(!r.minus_plus_is_one);
    }

    #[test]
    fn invalid_section() {
        let q = fixtures::fibonacci();
        assert!(ArrowSection::from_names(&q, &["a", "x"]).is_err());
        assert!(ArrowSection::from_names(&q, &["x"]).is_err());
    }

    #[test]
    fn certificates() {
        for q in [fixtures::fibonacci(), fixtures::loops(1), fixtures::loops(2)] {
            assert!(strongly_graded_certificate(&q).unwrap().verified());
        }
        assert!(matches!(
            strongly_graded_certificate(&fixtures::loop_with_sink()),
            Err(QgrError::SinkPresent(v)) if v == "2"
        ));
    }

    #[test]
    fn factorization_through_t_powers() {
        let q = fixtures::fibonacci();
        let l = LeavittAlgebra::new(&q).unwrap();
        let s = ArrowSection::first_incoming(&q).unwrap();
        for d in -2..=2i64 {
            let level = if d < 0 { 2 } else { 1 };
            assert!(l.verify_section_factorization(&s, d, level).unwrap().is_ok());
        }
    }

    #[test]
    fn powers_of_degree_one_span() {
        let l = LeavittAlgebra::new(&fixtures::fibonacci()).unwrap();
        for n in 1..=3 {
            for level in 0..=1 {
                let r = l.degree_one_power_span(n, level).unwrap();
                assert!(r.spans(), "{r:?}");
            }
        }
    }
}
