use std::fmt;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::linalg::json_int;
use crate::quiver::{path_counts, Quiver};

/// Stationary Bratteli diagram of S(Q), truncated at a finite level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BratteliDiagram {
    pub vertex_names: Vec<String>,
    /// `vertex_sizes[n][i] = p_{n,i}` for `n` in `0..=N`.
    pub vertex_sizes: Vec<Vec<BigInt>>,
    /// `edge_multiplicities[j][i] = c_{ji}`: edges from `(n, i)` to `(n+1, j)`.
    pub edge_multiplicities: Vec<Vec<usize>>,
}

/// The diagram through level `levels` (inclusive).
pub fn bratteli(q: &Quiver, levels: u32) -> BratteliDiagram {
    let mut vertex_sizes = Vec::with_capacity(levels as usize + 1);
    let c = q.incidence_matrix();
    let mut current: Vec<BigInt> = vec![BigInt::from(1); q.vertex_count()];
    for _ in 0..=levels {
        vertex_sizes.push(current.clone());
        current = c.mul_vec(&current);
    }
    debug_assert_eq!(vertex_sizes.last(), Some(&path_counts(q, levels)));
    BratteliDiagram {
        vertex_names: q.vertices().to_vec(),
        vertex_sizes,
        edge_multiplicities: q.incidence_counts(),
    }
}

impl BratteliDiagram {
    pub fn levels(&self) -> usize {
        self.vertex_sizes.len()
    }

    /// `{top_level, sizes, edges}`; `sizes[n][i]` is the block at vertex `i`, level `n`.
    pub fn to_json_value(&self) -> Value {
        let sizes: Vec<Vec<Value>> = self
            .vertex_sizes
            .iter()
            .map(|row| row.iter().map(json_int).collect())
            .collect();
        json!({
            "top_level": self.levels().saturating_sub(1),
            "sizes": sizes,
            "edges": self.edge_multiplicities,
        })
    }

    pub fn to_dot(&self) -> String {
        crate::dot::bratteli_dot(self)
    }
}

impl fmt::Display for BratteliDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .vertex_names
            .iter()
            .map(|s| s.len())
            .max()
            .unwrap_or(0);
        writeln!(f, "sizes (one row per vertex, levels 0..{}):", self.levels().saturating_sub(1))?;
        for (i, name) in self.vertex_names.iter().enumerate() {
            let row: Vec<String> = self.vertex_sizes.iter().map(|s| s[i].to_string()).collect();
            writeln!(f, "  {name:>width$}: {}", row.join(" "))?;
        }
        writeln!(f, "edges (n,i) -> (n+1,j), multiplicity c_ji:")?;
        for (j, row) in self.edge_multiplicities.iter().enumerate() {
            for (i, &c) in row.iter().enumerate() {
                if c > 0 {
                    writeln!(f, "  {} -> {}: {}", self.vertex_names[i], self.vertex_names[j], c)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn small(d: &BratteliDiagram) -> Vec<Vec<u64>> {
        d.vertex_sizes
            .iter()
            .map(|r| r.iter().map(|x| u64::try_from(x).unwrap()).collect())
            .collect()
    }

    #[test]
    fn fibonacci_rows() {
        let d = bratteli(&fixtures::fibonacci(), 4);
        assert_eq!(small(&d), [[1, 1], [2, 1], [3, 2], [5, 3], [8, 5]]);
        assert_eq!(d.edge_multiplicities, [[1, 1], [1, 0]]);
    }

    #[test]
    fn cyclic_is_all_ones() {
        let d = bratteli(&fixtures::cyclic(4), 6);
        assert!(small(&d).iter().all(|r| r.iter().all(|&x| x == 1)));
    }

    #[test]
    fn free_algebra_doubles() {
        let d = bratteli(&fixtures::loops(2), 3);
        assert_eq!(small(&d), [[1], [2], [4], [8]]);
        assert_eq!(d.edge_multiplicities, [[2]]);
    }

    #[test]
    fn json_shape() {
        let v = bratteli(&fixtures::fibonacci(), 2).to_json_value();
        assert_eq!(v["top_level"], 2);
        assert_eq!(v["sizes"], json!([[1, 1], [2, 1], [3, 2]]));
        assert_eq!(v["edges"], json!([[1, 1], [1, 0]]));
    }
}
