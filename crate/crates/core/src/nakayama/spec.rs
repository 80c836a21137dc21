use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// The algebra `N(e, ℓ) = kQ_e / J^ℓ` on the cyclic quiver with `e` vertices.
///
/// `ℓ = μ e + ℓ'` with `0 <= ℓ' <= e - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NakayamaSpec {
    e: usize,
    ell: usize,
    mu: usize,
    ell_prime: usize,
}

/// Euclidean division `ℓ = μ e + ℓ'`.
pub fn decompose_ell(e: usize, ell: usize) -> Result<(usize, usize)> {
    if e == 0 {
        return Err(Error::Domain("the quiver needs at least one vertex".into()));
    }
    if ell < 2 {
        return Err(Error::Domain(format!("Loewy length {ell} < 2 gives a semisimple algebra")));
    }
    Ok((ell / e, ell % e))
}

impl NakayamaSpec {
    pub fn new(e: usize, ell: usize) -> Result<Self> {
        let (mu, ell_prime) = decompose_ell(e, ell)?;
        Ok(NakayamaSpec { e, ell, mu, ell_prime })
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    pub fn ell_prime(&self) -> usize {
        self.ell_prime
    }

    /// Reduces an integer vertex label to `1..=e`.
    pub fn vertex(&self, v: i64) -> usize {
        (v - 1).rem_euclid(self.e as i64) as usize + 1
    }

    /// Number of indecomposable modules, `e * ℓ`.
    pub fn indecomposable_count(&self) -> usize {
        self.e * self.ell
    }

    /// Every vertex, 1-based.
    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.e
    }
}

impl fmt::Display for NakayamaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N({}, {})", self.e, self.ell)
    }
}

/// `θ(v, n, i)`: `n + 1` for `v <= i`, else `n`.
pub fn theta(v: usize, n: usize, i: usize) -> usize {
    if v <= i {
        n + 1
    } else {
        n
    }
}

/// The block sizes `θ(1..=e, n, i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaProfile {
    pub n: usize,
    pub i: usize,
    pub sizes: Vec<usize>,
}

impl ThetaProfile {
    pub fn new(e: usize, n: usize, i: usize) -> Self {
        ThetaProfile {
            n,
            i,
            sizes: (1..=e).map(|v| theta(v, n, i)).collect(),
        }
    }

    /// Size of block `v` (1-based).
    pub fn size(&self, v: usize) -> usize {
        self.sizes[v - 1]
    }

    /// First coordinate of block `v`.
    pub fn offset(&self, v: usize) -> usize {
        self.sizes[..v - 1].iter().sum()
    }

    pub fn total(&self) -> usize {
        self.sizes.iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division() {
        assert_eq!(decompose_ell(3, 7).unwrap(), (2, 1));
        assert_eq!(decompose_ell(1, 5).unwrap(), (5, 0));
        assert_eq!(decompose_ell(4, 8).unwrap(), (2, 0));
        assert!(decompose_ell(2, 1).is_err());
    }

    #[test]
    fn theta_sums() {
        for e in 1..=8 {
            for n in 0..=8 {
                for i in 0..e {
                    assert_eq!(ThetaProfile::new(e, n, i).total(), n * e + i);
                }
            }
        }
    }

    #[test]
    fn vertex_wraps() {
        let s = NakayamaSpec::new(3, 7).unwrap();
        assert_eq!(s.vertex(4), 1);
        assert_eq!(s.vertex(0), 3);
        assert_eq!(s.vertex(-2), 1);
    }
}
