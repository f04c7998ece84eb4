use crate::error::{QgrError, Result};
use crate::quiver::Quiver;

/// Largest vertex count the permutation search accepts.
pub const MORITA_VERTEX_LIMIT: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MoritaVerdict {
    /// Vertex `i` of the first quiver corresponds to `permutation[i]` of the second.
    Equivalent { permutation: Vec<usize> },
    /// The sufficient criterion failed; this is not a proof of inequivalence.
    Unknown,
}

/// Morita equivalence of the two stationary ultramatricial algebras, via
/// the sufficient criterion that their incidence matrices are conjugate by
/// a vertex permutation (same unlabelled Bratteli diagram).
pub fn morita_equivalent_stationary(q1: &Quiver, q2: &Quiver) -> Result<MoritaVerdict> {
    let n = q1.vertex_count();
    for q in [q1, q2] {
        if q.vertex_count() > MORITA_VERTEX_LIMIT {
            return Err(QgrError::limit(
                "vertices for the permutation search",
                q.vertex_count(),
                MORITA_VERTEX_LIMIT,
            ));
        }
    }
    if n != q2.vertex_count() {
        return Ok(MoritaVerdict::Unknown);
    }
    let c1 = q1.incidence_counts();
    let c2 = q2.incidence_counts();
    let mut sigma = Vec::with_capacity(n);
    let mut used = vec![false; n];
    if search(&c1, &c2, &mut sigma, &mut used) {
        Ok(MoritaVerdict::Equivalent { permutation: sigma })
    } else {
        Ok(MoritaVerdict::Unknown)
    }
}

// Depth-first over partial permutations, pruning as soon as an entry
// between two assigned vertices disagrees. Tries images in increasing
// order, so the identity is found first when it works.
fn search(c1: &[Vec<usize>], c2: &[Vec<usize>], sigma: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let k = sigma.len();
    if k == c1.len() {
        return true;
    }
    for image in 0..c1.len() {
        if used[image] {
            continue;
        }
        let consistent = c1[k][k] == c2[image][image]
            && (0..k).all(|i| {
                c1[k][i] == c2[image][sigma[i]] && c1[i][k] == c2[sigma[i]][image]
            });
        if !consistent {
            continue;
        }
        sigma.push(image);
        used[image] = true;
        if search(c1, c2, sigma, used) {
            return true;
        }
        sigma.pop();
        used[image] = false;
    }
    false
}
