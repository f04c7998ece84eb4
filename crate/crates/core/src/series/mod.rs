//! Hilbert series of the path algebra: `H(t) = Σₙ pₙ tⁿ = (I − tC)⁻¹·𝟙`,
//! one rational function per vertex over a shared denominator.

mod poly;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

pub use poly::IntPolynomial;

use crate::linalg::{json_int, IntMatrix};
use crate::quiver::Quiver;

/// Determinant over ℤ[t] by fraction-free (Bareiss) elimination.
pub fn determinant(mut m: Vec<Vec<IntPolynomial>>) -> IntPolynomial {
    let n = m.len();
    if n == 0 {
        return IntPolynomial::one();
    }
    let mut sign = false;
    let mut prev = IntPolynomial::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = !sign;
                }
                None => return IntPolynomial::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = IntPolynomial::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        -&det
    } else {
        det
    }
}

/// `det(xI − C)`.
pub fn char_poly(c: &IntMatrix) -> IntPolynomial {
    let n = c.rows();
    let m = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let diag = if i == j { BigInt::one() } else { BigInt::zero() };
                    IntPolynomial::new(vec![-c.get(i, j), diag])
                })
                .collect()
        })
        .collect();
    determinant(m)
}

fn one_minus_tc(c: &IntMatrix) -> Vec<Vec<IntPolynomial>> {
    let n = c.rows();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let diag = if i == j { BigInt::one() } else { BigInt::zero() };
                    IntPolynomial::new(vec![diag, -c.get(i, j)])
                })
                .collect()
        })
        .collect()
}

/// `det(I − tC)`.
pub fn det_one_minus_tc(c: &IntMatrix) -> IntPolynomial {
    determinant(one_minus_tc(c))
}

/// Per-vertex numerators over a shared denominator with `den(0) = 1`
/// and no common factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunctionVector {
    pub vertex_names: Vec<String>,
    pub numerators: Vec<IntPolynomial>,
    pub denominator: IntPolynomial,
}

impl RationalFunctionVector {
    /// Reduce `nums / den` to canonical form. `den(0)` must be ±1.
    pub fn reduced(
        vertex_names: Vec<String>,
        numerators: Vec<IntPolynomial>,
        denominator: IntPolynomial,
    ) -> RationalFunctionVector {
        let g = numerators.iter().fold(denominator.clone(), |g, n| g.gcd(n));
        let divide = |p: &IntPolynomial| p.div_exact(&g).expect("gcd divides");
        let mut den = divide(&denominator);
        let mut nums: Vec<_> = numerators.iter().map(divide).collect();
        let c0 = den.coeff(0);
        assert!(c0.abs().is_one(), "denominator constant term must be a unit");
        if c0.is_negative() {
            den = -&den;
            nums = nums.iter().map(|n| -n).collect();
        }
        RationalFunctionVector {
            vertex_names,
            numerators: nums,
            denominator: den,
        }
    }

    /// Power-series coefficients of degrees `0..=n`, one vector per degree.
    pub fn expand(&self, n: usize) -> Vec<Vec<BigInt>> {
        let per_vertex: Vec<Vec<BigInt>> = self
            .numerators
            .iter()
            .map(|num| expand_one(num, &self.denominator, n))
            .collect();
        (0..=n)
            .map(|k| per_vertex.iter().map(|s| s[k].clone()).collect())
            .collect()
    }

    pub fn to_json_value(&self) -> Value {
        let coeffs = |p: &IntPolynomial| Value::Array(p.coeffs().iter().map(json_int).collect());
        let nums: serde_json::Map<String, Value> = self
            .vertex_names
            .iter()
            .zip(&self.numerators)
            .map(|(v, p)| (v.clone(), coeffs(p)))
            .collect();
        json!({
            "denominator": coeffs(&self.denominator),
            "numerators": nums,
        })
    }
}

// Long division in ℤ[[t]], exact because den(0) = 1.
fn expand_one(num: &IntPolynomial, den: &IntPolynomial, n: usize) -> Vec<BigInt> {
    let d = den.coeffs();
    let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut c = num.coeff(k);
        for j in 1..d.len().min(k + 1) {
            c -= &d[j] * &out[k - j];
        }
        out.push(c);
    }
    out
}

impl fmt::Display for RationalFunctionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, num) in self.vertex_names.iter().zip(&self.numerators) {
            writeln!(f, "{v}: ({num}) / ({})", self.denominator)?;
        }
        Ok(())
    }
}

/// `(I − tC)⁻¹·𝟙` by Cramer's rule, reduced.
pub fn hilbert_series(q: &Quiver) -> RationalFunctionVector {
    let c = q.incidence_matrix();
    let a = one_minus_tc(&c);
    let den = determinant(a.clone());
    let nums = (0..q.vertex_count())
        .map(|i| {
            let mut ai = a.clone();
            for row in ai.iter_mut() {
                row[i] = IntPolynomial::one();
            }
            determinant(ai)
        })
        .collect();
    RationalFunctionVector::reduced(q.vertices().to_vec(), nums, den)
}

/// Checks `(I − tC)·num = den·𝟙` as a polynomial identity.
pub fn satisfies_defining_identity(q: &Quiver, h: &RationalFunctionVector) -> bool {
    let a = one_minus_tc(&q.incidence_matrix());
    a.iter().all(|row| {
        let lhs = row
            .iter()
            .zip(&h.numerators)
            .fold(IntPolynomial::zero(), |acc, (x, y)| &acc + &(x * y));
        lhs == h.denominator
    })
}
