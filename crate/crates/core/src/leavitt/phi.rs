use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::{GradedComponentMatrix, LeavittAlgebra};
use crate::error::{QgrError, Result};
use crate::linalg::{QMatrix, Rational};
use crate::quiver::enumerate_paths;
use crate::tower::TowerElement;

/// Above this dimension the anti-multiplicativity check samples instead of
/// running over all basis pairs.
const EXHAUSTIVE_DIM_LIMIT: usize = 400;

const RANDOM_PAIRS: usize = 8;
const SEED: u64 = 0x5eed_f1ea;

/// What [`LeavittAlgebra::verify_phi`] checked at one level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiReport {
    pub level: usize,
    /// `Σᵢ |e_iQₙ|²`, with the path lists enumerated explicitly.
    pub leavitt_dim: usize,
    /// `Σᵢ p_{n,i}²` from the tower.
    pub tower_dim: usize,
    pub exhaustive: bool,
    pub pairs_checked: usize,
    pub anti_multiplicative: bool,
    pub bijective: bool,
    pub intertwines: bool,
    pub random_pairs_checked: usize,
    pub random_ok: bool,
}

impl PhiReport {
    pub fn verified(&self) -> bool {
        self.leavitt_dim == self.tower_dim
            && self.anti_multiplicative
            && self.bijective
            && self.intertwines
            && self.random_ok
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "level": self.level,
            "leavitt_dim": self.leavitt_dim,
            "tower_dim": self.tower_dim,
            "exhaustive": self.exhaustive,
            "pairs_checked": self.pairs_checked,
            "anti_multiplicative": self.anti_multiplicative,
            "bijective": self.bijective,
            "intertwines": self.intertwines,
            "random_pairs_checked": self.random_pairs_checked,
            "random_ok": self.random_ok,
            "verified": self.verified(),
        })
    }
}

impl fmt::Display for PhiReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.verified() {
            write!(f, "n={}: anti-isomorphism verified, dim {}", self.level, self.leavitt_dim)?;
            let how = if self.exhaustive { "exhaustive" } else { "sampled" };
            write!(
                f,
                " ({} basis pairs {how}, {} random pairs)",
                self.pairs_checked, self.random_pairs_checked
            )
        } else {
            write!(
                f,
                "n={}: anti-isomorphism FAILED (dims {} vs {}, anti-mult {}, bijective {}, intertwines {}, random {})",
                self.level,
                self.leavitt_dim,
                self.tower_dim,
                self.anti_multiplicative,
                self.bijective,
                self.intertwines,
                self.random_ok
            )
        }
    }
}

impl LeavittAlgebra {
    /// `Φₙ(p*q) = E_{q,p}`: each block is transposed.
    pub fn phi(&self, x: &GradedComponentMatrix) -> Result<TowerElement> {
        if x.degree() != 0 {
            return Err(QgrError::InvalidInput(format!(
                "phi is defined on degree 0, got degree {}",
                x.degree()
            )));
        }
        self.tower
            .element(x.level(), x.blocks().iter().map(QMatrix::transpose).collect())
    }

    pub fn phi_inverse(&self, e: &TowerElement) -> Result<GradedComponentMatrix> {
        self.component(0, e.level(), e.blocks().iter().map(QMatrix::transpose).collect())
    }

    /// Checks that Φₙ is an anti-isomorphism `L_{0,n} → Sₙ` compatible with
    /// the embeddings on both sides.
    pub fn verify_phi(&self, n: usize) -> Result<PhiReport> {
        let sizes = self.counts(n)?;
        self.counts(n + 1)?;
        let leavitt_dim = enumerate_paths(&self.quiver, n as u32)?
            .iter()
            .map(|l| l.len() * l.len())
            .sum();
        let tower_dim = sizes.iter().map(|s| s * s).sum();

        let basis = self.basis(0, n)?;
        let images = basis.iter().map(|b| self.phi(b)).collect::<Result<Vec<_>>>()?;

        // Φ sends the basis to distinct matrix units, covering all of them.
        let mut seen: Vec<(usize, usize, usize)> = images
            .iter()
            .filter_map(|e| {
                let nz: Vec<_> = e
                    .blocks()
                    .iter()
                    .enumerate()
                    .flat_map(|(i, b)| b.iter().map(move |(r, c, v)| (i, r, c, v.clone())))
                    .collect();
                match nz.as_slice() {
                    [(i, r, c, v)] if v == &Rational::from_integer(1.into()) => Some((*i, *r, *c)),
                    _ => None,
                }
            })
            .collect();
        seen.sort_unstable();
        seen.dedup();
        let mut bijective = seen.len() == images.len() && images.len() == tower_dim;
        for (b, e) in basis.iter().zip(&images) {
            bijective &= &self.phi_inverse(e)? == b;
        }

        let exhaustive = basis.len() <= EXHAUSTIVE_DIM_LIMIT;
        let mut pairs_checked = 0;
        let mut anti_multiplicative = true;
        if exhaustive {
            for (x, fx) in basis.iter().zip(&images) {
                for (y, fy) in basis.iter().zip(&images) {
                    anti_multiplicative &= self.anti_product_holds(x, y, fx, fy)?;
                    pairs_checked += 1;
                }
            }
        }

        let mut intertwines = true;
        for (b, e) in basis.iter().zip(&images) {
            let up = self.phi(&self.embed_level(b)?)?;
            intertwines &= up == self.tower.theta(e);
        }

        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ n as u64);
        let mut random_ok = true;
        for _ in 0..RANDOM_PAIRS {
            let x = self.random_degree_zero(&mut rng, n)?;
            let y = self.random_degree_zero(&mut rng, n)?;
            let (fx, fy) = (self.phi(&x)?, self.phi(&y)?);
            random_ok &= self.anti_product_holds(&x, &y, &fx, &fy)?;
        }
        if !exhaustive {
            anti_multiplicative = random_ok;
        }

        Ok(PhiReport {
            level: n,
            leavitt_dim,
            tower_dim,
            exhaustive,
            pairs_checked,
            anti_multiplicative,
            bijective,
            intertwines,
            random_pairs_checked: RANDOM_PAIRS,
            random_ok,
        })
    }

    fn anti_product_holds(
        &self,
        x: &GradedComponentMatrix,
        y: &GradedComponentMatrix,
        fx: &TowerElement,
        fy: &TowerElement,
    ) -> Result<bool> {
        let lhs = self.phi(&self.multiply_components(x, y)?)?;
        Ok(lhs == self.tower.mul(fy, fx))
    }

    fn random_degree_zero(&self, rng: &mut impl Rng, n: usize) -> Result<GradedComponentMatrix> {
        let mut c = self.zero_component(0, n)?;
        let blocks = c
            .blocks()
            .iter()
            .map(|b| {
                let mut m = b.clone();
                for r in 0..b.rows() {
                    for col in 0..b.cols() {
                        if rng.gen_bool(0.5) {
                            let num: i64 = rng.gen_range(-5..=5);
                            let den: i64 = rng.gen_range(1..=3);
                            m.set(r, col, Rational::new(num.into(), den.into()));
                        }
                    }
                }
                m
            })
            .collect();
        c = self.component(0, n, blocks)?;
        Ok(c)
    }
}
