use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{QgrError, Result};
use crate::linalg::{all_nonnegative, IntMatrix};
use crate::quiver::Quiver;

/// A class in K₀(S(Q)) = lim (ℤ^I, C), represented at some level.
/// `(n, v)` and `(n+1, C·v)` name the same class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct K0Class {
    pub level: usize,
    pub vector: Vec<BigInt>,
}

impl fmt::Display for K0Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vector.iter().map(ToString::to_string).collect();
        write!(f, "({})@{}", parts.join(","), self.level)
    }
}

/// Outcome of the positivity semi-decision.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Positivity {
    /// `C^steps · v ≥ 0` componentwise.
    Positive { steps: u32 },
    /// No non-negative image within the given number of steps.
    NotPositiveYet(u32),
}

/// The ordered dimension group of a quiver's tower.
#[derive(Clone, Debug)]
pub struct K0Group {
    transition: IntMatrix,
}

impl K0Group {
    pub fn new(q: &Quiver) -> K0Group {
        K0Group {
            transition: q.incidence_matrix(),
        }
    }

    pub fn rank(&self) -> usize {
        self.transition.rows()
    }

    pub fn class(&self, vector: Vec<BigInt>, level: usize) -> Result<K0Class> {
        if vector.len() != self.rank() {
            return Err(QgrError::DimensionMismatch(format!(
                "K0 vector has {} entries, the quiver has {} vertices",
                vector.len(),
                self.rank()
            )));
        }
        Ok(K0Class { level, vector })
    }

    pub fn class_i64(&self, vector: &[i64], level: usize) -> Result<K0Class> {
        self.class(vector.iter().map(|&x| BigInt::from(x)).collect(), level)
    }

    pub fn zero(&self, level: usize) -> K0Class {
        K0Class {
            level,
            vector: vec![BigInt::zero(); self.rank()],
        }
    }

    /// `[S(Q)]`, the class of the all-ones vector at level 0.
    pub fn order_unit(&self) -> K0Class {
        K0Class {
            level: 0,
            vector: vec![BigInt::one(); self.rank()],
        }
    }

    pub fn raise(&self, x: &K0Class, level: usize) -> K0Class {
        assert!(level >= x.level, "cannot lower a K0 class");
        let mut v = x.vector.clone();
        for _ in x.level..level {
            v = self.transition.mul_vec(&v);
        }
        K0Class { level, vector: v }
    }

    pub fn add(&self, x: &K0Class, y: &K0Class) -> K0Class {
        let level = x.level.max(y.level);
        let (a, b) = (self.raise(x, level), self.raise(y, level));
        K0Class {
            level,
            vector: a.vector.iter().zip(&b.vector).map(|(p, q)| p + q).collect(),
        }
    }

    pub fn neg(&self, x: &K0Class) -> K0Class {
        K0Class {
            level: x.level,
            vector: x.vector.iter().map(|v| -v).collect(),
        }
    }

    /// Zero in the limit iff `C^k` kills it for `k = |I|`, where the
    /// kernels of the powers of `C` have stopped growing.
    pub fn is_zero(&self, x: &K0Class) -> bool {
        let mut v = x.vector.clone();
        for _ in 0..=self.rank() {
            if v.iter().all(Zero::is_zero) {
                return true;
            }
            v = self.transition.mul_vec(&v);
        }
        false
    }

    pub fn equal(&self, x: &K0Class, y: &K0Class) -> bool {
        self.is_zero(&self.add(x, &self.neg(y)))
    }

    /// Semi-decides positivity: looks for `k ≤ max_iter` with `C^k v ≥ 0`.
    pub fn positive(&self, x: &K0Class, max_iter: u32) -> Positivity {
        let mut v = x.vector.clone();
        for k in 0..=max_iter {
            if all_nonnegative(&v) {
                return Positivity::Positive { steps: k };
            }
            v = self.transition.mul_vec(&v);
        }
        Positivity::NotPositiveYet(max_iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fibonacci_identification() {
        let g = K0Group::new(&fixtures::fibonacci());
        let a = g.class_i64(&[1, 0], 0).unwrap();
        let b = g.class_i64(&[1, 1], 1).unwrap();
        assert!(g.equal(&a, &b));
        assert!(!g.equal(&a, &g.class_i64(&[1, 0], 1).unwrap()));
    }

    #[test]
    fn fibonacci_positivity_after_one_step() {
        let g = K0Group::new(&fixtures::fibonacci());
        let x = g.class_i64(&[1, -1], 0).unwrap();
        assert_eq!(g.positive(&x, 5), Positivity::Positive { steps: 1 });
        assert_eq!(g.positive(&x, 0), Positivity::NotPositiveYet(0));
        let y = g.class_i64(&[-1, 0], 0).unwrap();
        assert_eq!(g.positive(&y, 20), Positivity::NotPositiveYet(20));
    }

    #[test]
    fn order_unit_is_stable() {
        for f in fixtures::all() {
            let g = K0Group::new(&f.quiver);
            let u = g.order_unit();
            assert!(g.equal(&u, &g.raise(&u, 1)), "{}", f.name);
        }
    }

    #[test]
    fn sink_coordinates_vanish() {
        let g = K0Group::new(&fixtures::loop_with_sink());
        let x = g.class_i64(&[0, 7], 2).unwrap();
        assert!(g.is_zero(&x));
        assert!(!g.is_zero(&g.class_i64(&[1, 0], 2).unwrap()));
    }

    #[test]
    fn wrong_length_is_rejected() {
        let g = K0Group::new(&fixtures::fibonacci());
        assert!(g.class_i64(&[1, 2, 3], 0).is_err());
    }
}
