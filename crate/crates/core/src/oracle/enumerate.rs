use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::nakayama::rep::MatrixRep;
use crate::ring::artin::{ArtinTestRing, Elem};

/// Limits on the brute-force search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleCaps {
    /// Largest number of candidate tuples one enumeration may visit.
    pub candidates: u64,
    /// Largest congruence group the orbit computation may touch.
    pub group: u64,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps { candidates: 1 << 24, group: 1 << 16 }
    }
}

/// Entries `(arrow, row, col)` that a lift with pinned idempotents may change:
/// the rows of vertex `v+1` against the columns of vertex `v` in arrow `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    pub positions: Vec<(usize, usize, usize)>,
}

impl Frame {
    pub fn of(base: &MatrixRep<u64>) -> Result<Self> {
        let spec = base.spec();
        let d = base.dim();
        let mut block = vec![0usize; d];
        for v in spec.vertices() {
            let ev = base.vertex(v);
            for r in 0..d {
                for c in 0..d {
                    let x = *ev.get(r, c);
                    if r != c && x != 0 || r == c && x > 1 {
                        return Err(Error::Domain("base idempotents must be diagonal 0/1 matrices".into()));
                    }
                }
                if *ev.get(r, r) == 1 {
                    block[r] = v;
                }
            }
        }
        if block.contains(&0) {
            return Err(Error::Domain("base idempotents do not sum to the identity".into()));
        }
        let mut positions = Vec::new();
        for v in spec.vertices() {
            let w = spec.vertex(v as i64 + 1);
            for r in (0..d).filter(|&r| block[r] == w) {
                for c in (0..d).filter(|&c| block[c] == v) {
                    positions.push((v, r, c));
                }
            }
        }
        Ok(Frame { positions })
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }
}

/// A lift of the base over a test ring, stored by its frame entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftCandidate {
    /// Arrow matrices over the test ring.
    pub arrows: Vec<Matrix<Elem>>,
    /// Frame entries in enumeration order; the sort key of the lift.
    pub key: Vec<Elem>,
}

/// Every lift of a base representation over one test ring.
#[derive(Clone, Debug)]
pub struct LiftEnumeration {
    pub base: MatrixRep<u64>,
    pub frame: Frame,
    /// Sorted by key, which is also the enumeration order.
    pub lifts: Vec<LiftCandidate>,
    pub visited: u64,
}

/// The base with entries moved into the test ring.
pub fn base_over(base: &MatrixRep<u64>, ring: &ArtinTestRing) -> MatrixRep<Elem> {
    base.map(|&x| ring.scalar(x))
}

/// Arrow matrices obtained by writing `key` into the frame of `base`.
pub fn arrows_from_key(base: &MatrixRep<Elem>, frame: &Frame, key: &[Elem]) -> Vec<Matrix<Elem>> {
    let mut arrows = base.arrows().to_vec();
    for (&(v, r, c), &x) in frame.positions.iter().zip(key) {
        arrows[v - 1].set(r, c, x);
    }
    arrows
}

/// Whether every path of length `ℓ` vanishes.
pub fn relations_hold(ring: &ArtinTestRing, base: &MatrixRep<Elem>, arrows: &[Matrix<Elem>]) -> Result<bool> {
    let spec = base.spec();
    for v in spec.vertices() {
        let mut acc = arrows[v - 1].clone();
        for step in 1..spec.ell() {
            let w = spec.vertex(v as i64 - step as i64);
            acc = acc.mul(ring, &arrows[w - 1])?;
            if acc.is_zero(ring) {
                break;
            }
        }
        if !acc.is_zero(ring) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of candidates an enumeration over `frame` visits, if within `cap`.
pub fn candidate_count(ring: &ArtinTestRing, free: usize, cap: u64) -> Result<u64> {
    let m = ring.max_ideal_elements().len() as u64;
    m.checked_pow(free as u32)
        .filter(|&t| t <= cap)
        .ok_or_else(|| Error::cap("lift candidates", format!("{m}^{free} ({free} free entries)"), cap))
}

/// Calls `visit` on every key `base + m_R` perturbation of `frame`, in
/// increasing lexicographic order of keys.
pub(crate) fn for_each_key(
    ring: &ArtinTestRing,
    base: &MatrixRep<Elem>,
    frame: &Frame,
    mut visit: impl FnMut(&[Elem]) -> Result<()>,
) -> Result<()> {
    let m = ring.max_ideal_elements();
    let start: Vec<Elem> = frame.positions.iter().map(|&(v, r, c)| *base.arrow(v).get(r, c)).collect();
    let mut digits = vec![0usize; frame.len()];
    let mut key = start.clone();
    loop {
        visit(&key)?;
        // Odometer: the last position is least significant.
        let mut k = frame.len();
        loop {
            if k == 0 {
                return Ok(());
            }
            k -= 1;
            digits[k] += 1;
            if digits[k] < m.len() {
                key[k] = ring.add(start[k], m[digits[k]]);
                break;
            }
            digits[k] = 0;
            key[k] = start[k];
        }
    }
}

/// All lifts of `base` over `ring` with idempotents held at the base ones.
pub fn enumerate_lifts(base: &MatrixRep<u64>, ring: &ArtinTestRing, cap: u64) -> Result<LiftEnumeration> {
    let frame = Frame::of(base)?;
    let visited = candidate_count(ring, frame.len(), cap)?;
    let over = base_over(base, ring);
    let mut lifts = Vec::new();
    for_each_key(ring, &over, &frame, |key| {
        let arrows = arrows_from_key(&over, &frame, key);
        if relations_hold(ring, &over, &arrows)? {
            lifts.push(LiftCandidate { arrows, key: key.to_vec() });
        }
        Ok(())
    })?;
    Ok(LiftEnumeration { base: base.clone(), frame, lifts, visited })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::PrimeField;
    use crate::nakayama::rep::uniserial_rep;
    use crate::nakayama::{NakayamaSpec, UniserialModule};

    fn base(e: usize, ell: usize, len: usize) -> MatrixRep<u64> {
        let m = UniserialModule::new(NakayamaSpec::new(e, ell).unwrap(), 1, len).unwrap();
        uniserial_rep(&PrimeField(2), &m)
    }

    #[test]
    fn simple_modules_over_dual_numbers() {
        let r = ArtinTestRing::dual_numbers(2).unwrap();
        for ell in [2, 3] {
            let lifts = enumerate_lifts(&base(1, ell, 1), &r, 1 << 10).unwrap();
            assert_eq!(lifts.lifts.len(), 2);
            let keys: Vec<Vec<Elem>> = lifts.lifts.iter().map(|l| l.key.clone()).collect();
            assert_eq!(keys, vec![vec![0], vec![r.basis_element(1)]]);
        }
    }

    #[test]
    fn trivial_ring_has_only_the_base() {
        let f = ArtinTestRing::field(2).unwrap();
        let lifts = enumerate_lifts(&base(2, 5, 3), &f, 1 << 10).unwrap();
        assert_eq!(lifts.lifts.len(), 1);
    }

    #[test]
    fn frame_follows_vertex_blocks() {
        // N(2,5), top 1, length 3: vertex 1 has two chain vectors, vertex 2 one.
        let f = Frame::of(&base(2, 5, 3)).unwrap();
        assert_eq!(f.len(), 4);
    }

    #[test]
    fn cap_is_enforced() {
        let r = ArtinTestRing::truncated_polynomial(2, 3, "u").unwrap();
        let err = enumerate_lifts(&base(1, 4, 3), &r, 100).unwrap_err();
        assert!(matches!(err, Error::ResourceCap { .. }));
    }

    #[test]
    fn keys_are_sorted() {
        let r = ArtinTestRing::truncated_polynomial(2, 3, "u").unwrap();
        let lifts = enumerate_lifts(&base(1, 4, 2), &r, 1 << 12).unwrap();
        assert!(lifts.lifts.windows(2).all(|w| w[0].key < w[1].key));
    }
}
