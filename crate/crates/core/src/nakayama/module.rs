use super::spec::NakayamaSpec;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// The indecomposable module with the given top vertex and length.
///
/// Its composition factors descend cyclically: `S_top, S_{top+1}, ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UniserialModule {
    spec: NakayamaSpec,
    top: usize,
    len: usize,
}

/// Outcome of moving a module to the normalized position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Normalization {
    pub module: UniserialModule,
    pub applied_omega: bool,
    /// Vertex shift applied so that the top becomes `S_1`.
    pub rotation: usize,
}

impl UniserialModule {
    pub fn new(spec: NakayamaSpec, top: usize, len: usize) -> Result<Self> {
        if top == 0 || top > spec.e() {
            return Err(Error::Domain(format!("top vertex {top} outside 1..={}", spec.e())));
        }
        if len == 0 {
            return Err(Error::ZeroModule);
        }
        if len > spec.ell() {
            return Err(Error::Domain(format!("length {len} exceeds the Loewy length {}", spec.ell())));
        }
        Ok(UniserialModule { spec, top, len })
    }

    /// `V_{n,i}`: top `S_1` and dimension `ne + i`.
    pub fn standard(spec: NakayamaSpec, n: usize, i: usize) -> Result<Self> {
        if i >= spec.e() {
            return Err(Error::Domain(format!("i = {i} must be below e = {}", spec.e())));
        }
        Self::new(spec, 1, n * spec.e() + i)
    }

    /// The projective cover `P_j` of `S_j`.
    pub fn projective(spec: NakayamaSpec, j: usize) -> Result<Self> {
        Self::new(spec, j, spec.ell())
    }

    pub fn spec(&self) -> NakayamaSpec {
        self.spec
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_projective(&self) -> bool {
        self.len == self.spec.ell()
    }

    /// `ℓ_V = min(len, ℓ - len)`.
    pub fn ell_v(&self) -> usize {
        self.len.min(self.spec.ell() - self.len)
    }

    /// `n` in `ℓ_V = n e + i`.
    pub fn n(&self) -> usize {
        self.ell_v() / self.spec.e()
    }

    /// `i` in `ℓ_V = n e + i`.
    pub fn i(&self) -> usize {
        self.ell_v() % self.spec.e()
    }

    /// Vertex of the `k`-th composition factor from the top, `k` 0-based.
    pub fn factor(&self, k: usize) -> usize {
        self.spec.vertex((self.top + k) as i64)
    }

    /// Composition factors from top to socle.
    pub fn composition_factors(&self) -> Vec<usize> {
        (0..self.len).map(|k| self.factor(k)).collect()
    }

    /// Vertex of the socle.
    pub fn socle(&self) -> usize {
        self.factor(self.len - 1)
    }

    /// Multiplicity of `S_v` as a composition factor.
    pub fn multiplicity(&self, v: usize) -> usize {
        (0..self.len).filter(|&k| self.factor(k) == v).count()
    }

    fn require_nonprojective(&self) -> Result<()> {
        if self.is_projective() {
            Err(Error::Projective)
        } else {
            Ok(())
        }
    }

    /// `Ω(V)`: top `top + len`, length `ℓ - len`.
    pub fn syzygy(&self) -> Result<Self> {
        self.require_nonprojective()?;
        Ok(UniserialModule {
            spec: self.spec,
            top: self.spec.vertex((self.top + self.len) as i64),
            len: self.spec.ell() - self.len,
        })
    }

    /// The same module with every vertex shifted by `-shift`.
    pub fn rotate(&self, shift: usize) -> Self {
        UniserialModule {
            spec: self.spec,
            top: self.spec.vertex(self.top as i64 - shift as i64),
            len: self.len,
        }
    }

    /// Replaces `V` by `Ω(V)` when `len > ℓ/2`, then rotates the top to `S_1`.
    pub fn normalize(&self) -> Result<Normalization> {
        self.require_nonprojective()?;
        let applied_omega = 2 * self.len > self.spec.ell();
        let m = if applied_omega { self.syzygy()? } else { *self };
        let rotation = m.top - 1;
        Ok(Normalization {
            module: m.rotate(rotation),
            applied_omega,
            rotation,
        })
    }

    /// `d_V = ℓ_V - 1`, the distance from the boundary of the stable component.
    pub fn ar_distance(&self) -> Result<usize> {
        self.require_nonprojective()?;
        Ok(self.ell_v() - 1)
    }
}

impl fmt::Display for UniserialModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} module (top S{}, length {})", self.spec, self.top, self.len)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: usize, ell: usize, top: usize, len: usize) -> UniserialModule {
        UniserialModule::new(NakayamaSpec::new(e, ell).unwrap(), top, len).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let a = m(2, 5, 1, 4).normalize().unwrap();
        assert_eq!((a.module.len(), a.applied_omega), (1, true));
        let b = m(2, 5, 2, 2).normalize().unwrap();
        assert_eq!((b.module.top(), b.rotation, b.applied_omega), (1, 1, false));
        let c = m(3, 7, 1, 3).normalize().unwrap();
        assert_eq!((c.module, c.applied_omega, c.rotation), (m(3, 7, 1, 3), false, 0));
        let half = m(2, 6, 1, 3).normalize().unwrap();
        assert!(!half.applied_omega);
    }

    #[test]
    fn syzygy_examples() {
        assert_eq!(m(2, 5, 1, 2).syzygy().unwrap(), m(2, 5, 1, 3));
        assert_eq!(m(1, 3, 1, 1).syzygy().unwrap().len(), 2);
        assert!(matches!(m(2, 5, 1, 5).syzygy(), Err(Error::Projective)));
    }

    #[test]
    fn distance_examples() {
        assert_eq!(m(2, 5, 1, 1).ar_distance().unwrap(), 0);
        assert_eq!(m(2, 6, 1, 3).ar_distance().unwrap(), 2);
        assert_eq!(m(3, 8, 2, 7).ar_distance().unwrap(), 0);
    }

    #[test]
    fn factors_descend() {
        assert_eq!(m(3, 7, 2, 5).composition_factors(), vec![2, 3, 1, 2, 3]);
        assert_eq!(m(3, 7, 2, 5).multiplicity(2), 2);
    }
}
