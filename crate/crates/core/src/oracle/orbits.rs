use super::enumerate::{arrows_from_key, base_over, relations_hold, Frame, LiftEnumeration, OracleCaps};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::nakayama::rep::MatrixRep;
use crate::ring::artin::{ArtinTestRing, Elem};
use crate::ring::linalg::{Echelon, ModP};
use serde::Serialize;

/// One strict equivalence class of lifts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrictEquivClass {
    /// Frame entries of the lexicographically smallest member.
    pub representative: Vec<Elem>,
    pub orbit_size: u64,
}

/// How the classes were obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrbitMode {
    /// Union-find over the enumerated lifts, one edge per group generator.
    UnionFind,
    /// `m^2 = 0`: orbits are cosets of a linear space of translations.
    Affine,
}

/// The set of strict equivalence classes of lifts over one test ring.
#[derive(Clone, Debug, Serialize)]
pub struct ClassSummary {
    pub mode: OrbitMode,
    pub classes: Vec<StrictEquivClass>,
    /// Number of enumerated candidates.
    pub visited: u64,
}

impl ClassSummary {
    pub fn count(&self) -> u64 {
        self.classes.len() as u64
    }
}

/// Block-diagonal `I + r E_ij` and its inverse, for every `r` among the
/// ring generators and every pair `i, j` inside one vertex block.
fn generators(ring: &ArtinTestRing, base: &MatrixRep<u64>) -> Vec<(Matrix<Elem>, Matrix<Elem>)> {
    let d = base.dim();
    let block = |r: usize| base.spec().vertices().find(|&v| *base.vertex(v).get(r, r) == 1);
    let mut out = Vec::new();
    for i in 0..d {
        for j in (0..d).filter(|&j| block(i) == block(j)) {
            for &r in ring.max_ideal_generators() {
                let mut g = Matrix::identity(ring, d);
                let mut g_inv = Matrix::identity(ring, d);
                if i == j {
                    let u = ring.add(1, r);
                    g.set(i, i, u);
                    g_inv.set(i, i, ring.inv(u).expect("1 + m is a unit"));
                } else {
                    g.set(i, j, r);
                    g_inv.set(i, j, ring.neg(r));
                }
                out.push((g, g_inv));
            }
        }
    }
    out
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// For every enumerated lift, the index of the smallest lift in its orbit
/// under the congruence subgroup.
///
/// Conjugation preserves the pinned idempotents exactly when the conjugating
/// matrix is block diagonal, so those generators suffice.
pub fn orbit_labels(lifts: &LiftEnumeration, ring: &ArtinTestRing) -> Result<Vec<usize>> {
    let gens = generators(ring, &lifts.base);
    let frame = &lifts.frame;
    let n = lifts.lifts.len();
    let mut parent: Vec<usize> = (0..n).collect();
    for (a, lift) in lifts.lifts.iter().enumerate() {
        for (g, g_inv) in &gens {
            let mut key = Vec::with_capacity(frame.len());
            let mut conj = Vec::with_capacity(lift.arrows.len());
            for m in &lift.arrows {
                conj.push(g.mul(ring, m)?.mul(ring, g_inv)?);
            }
            for &(v, r, c) in &frame.positions {
                key.push(*conj[v - 1].get(r, c));
            }
            let b = lifts
                .lifts
                .binary_search_by(|l| l.key.cmp(&key))
                .map_err(|_| Error::Internal(format!("conjugate of lift {:?} left the enumerated set", lift.key)))?;
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                // The smaller index is the lexicographically smaller key.
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    Ok((0..n).map(|a| find(&mut parent, a)).collect())
}

/// Partitions enumerated lifts into strict equivalence classes.
pub fn strict_equiv_classes(lifts: &LiftEnumeration, ring: &ArtinTestRing) -> Result<Vec<StrictEquivClass>> {
    let labels = orbit_labels(lifts, ring)?;
    let mut size = vec![0u64; labels.len()];
    for &r in &labels {
        size[r] += 1;
    }
    Ok((0..labels.len())
        .filter(|&a| labels[a] == a)
        .map(|a| StrictEquivClass { representative: lifts.lifts[a].key.clone(), orbit_size: size[a] })
        .collect())
}

/// Coordinates of the frame over `F_p`: for each position the coordinates of
/// its `m_R` part from the most significant down, so that lexicographic order
/// on vectors matches the order of keys.
fn affine_index(ring: &ArtinTestRing, pos: usize, k: usize) -> usize {
    let r = ring.rank() - 1;
    pos * r + (r - k)
}

/// Classes when `m^2 = 0`. There `(I + Y)(A + X)(I - Y) = A + X + [Y, A]`, so
/// orbits are cosets of `W = {[Y, A]}`. The element of a coset with zeros at
/// the pivots of `W` is its lexicographically smallest member, and only those
/// candidates are enumerated.
pub fn affine_classes(base: &MatrixRep<u64>, ring: &ArtinTestRing, cap: u64) -> Result<ClassSummary> {
    if ring.loewy_length() > 2 {
        return Err(Error::Domain(format!("{} has m^2 != 0", ring.name())));
    }
    let p = ring.characteristic();
    let frame = Frame::of(base)?;
    let r = ring.rank() - 1;
    let dim = frame.len() * r;
    let mut w = Echelon::new(ModP(p), dim);
    let d = base.dim();
    let block = |x: usize| base.spec().vertices().find(|&v| *base.vertex(v).get(x, x) == 1);
    for i in 0..d {
        for j in (0..d).filter(|&j| block(i) == block(j)) {
            // [E_ij, A] on the frame, then scaled by each basis vector of m.
            let mut comm = vec![0u64; frame.len()];
            for (pos, &(v, row, col)) in frame.positions.iter().enumerate() {
                let a = base.arrow(v);
                let mut x = 0;
                if row == i {
                    x += a.get(j, col);
                }
                if col == j {
                    x += p - a.get(row, i) % p;
                }
                comm[pos] = x % p;
            }
            for k in 1..=r {
                let mut vec = vec![0u64; dim];
                for (pos, &x) in comm.iter().enumerate() {
                    vec[affine_index(ring, pos, k)] = x;
                }
                w.insert_dense(vec);
            }
        }
    }
    let free: Vec<usize> = (0..dim).filter(|&c| !w.is_pivot(c)).collect();
    let total = p
        .checked_pow(free.len() as u32)
        .filter(|&t| t <= cap)
        .ok_or_else(|| Error::cap("transversal candidates", format!("{p}^{}", free.len()), cap))?;
    let orbit_size = p.pow(w.rank() as u32);
    let over = base_over(base, ring);
    let starts: Vec<Elem> = frame.positions.iter().map(|&(v, r0, c0)| *over.arrow(v).get(r0, c0)).collect();
    let mut classes = Vec::new();
    let mut coords = vec![0u64; dim];
    for code in 0..total {
        // The first free coordinate is most significant.
        let mut c = code;
        for &f in free.iter().rev() {
            coords[f] = c % p;
            c /= p;
        }
        let key: Vec<Elem> = (0..frame.len())
            .map(|pos| {
                let mut full = vec![0u64; ring.rank()];
                for k in 1..=r {
                    full[k] = coords[affine_index(ring, pos, k)];
                }
                ring.add(starts[pos], ring.encode(&full))
            })
            .collect();
        let arrows = arrows_from_key(&over, &frame, &key);
        if relations_hold(ring, &over, &arrows)? {
            classes.push(StrictEquivClass { representative: key, orbit_size });
        }
    }
    Ok(ClassSummary { mode: OrbitMode::Affine, classes, visited: total })
}

/// Strict equivalence classes of lifts of `base` over `ring`, by the affine
/// transversal when `m^2 = 0` and by union-find otherwise.
pub fn deformation_classes(base: &MatrixRep<u64>, ring: &ArtinTestRing, caps: OracleCaps) -> Result<ClassSummary> {
    if ring.loewy_length() <= 2 {
        return affine_classes(base, ring, caps.candidates);
    }
    union_find_classes(base, ring, caps)
}

/// Enumeration followed by union-find, regardless of the ring.
pub fn union_find_classes(base: &MatrixRep<u64>, ring: &ArtinTestRing, caps: OracleCaps) -> Result<ClassSummary> {
    let lifts = super::enumerate::enumerate_lifts(base, ring, caps.candidates)?;
    let classes = strict_equiv_classes(&lifts, ring)?;
    Ok(ClassSummary { mode: OrbitMode::UnionFind, classes, visited: lifts.visited })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::PrimeField;
    use crate::nakayama::rep::uniserial_rep;
    use crate::nakayama::{NakayamaSpec, UniserialModule};
    use crate::oracle::enumerate::enumerate_lifts;

    fn base(e: usize, ell: usize, top: usize, len: usize, p: u64) -> MatrixRep<u64> {
        let m = UniserialModule::new(NakayamaSpec::new(e, ell).unwrap(), top, len).unwrap();
        uniserial_rep(&PrimeField(p), &m)
    }

    #[test]
    fn one_by_one_classes_are_lifts() {
        let r = ArtinTestRing::dual_numbers(2).unwrap();
        let b = base(1, 3, 1, 1, 2);
        let lifts = enumerate_lifts(&b, &r, 1 << 10).unwrap();
        let classes = strict_equiv_classes(&lifts, &r).unwrap();
        assert_eq!(classes.len(), 2);
        assert!(classes.iter().all(|c| c.orbit_size == 1));
    }

    #[test]
    fn hand_conjugate_lands_in_the_same_class() {
        let r = ArtinTestRing::truncated_polynomial(2, 3, "u").unwrap();
        let b = base(1, 4, 1, 2, 2);
        let lifts = enumerate_lifts(&b, &r, 1 << 12).unwrap();
        let labels = orbit_labels(&lifts, &r).unwrap();
        let u = r.basis_element(1);
        let c = Matrix::from_rows(vec![vec![1, u], vec![0, 1]]);
        let c_inv = Matrix::from_rows(vec![vec![1, r.neg(u)], vec![0, 1]]);
        let a = base_over(&b, &r).arrow(1).clone();
        let conj = c.mul(&r, &a).unwrap().mul(&r, &c_inv).unwrap();
        assert_ne!(conj, a);
        let index = |m: &Matrix<Elem>| lifts.lifts.iter().position(|l| l.arrows[0] == *m).unwrap();
        assert_eq!(labels[index(&a)], labels[index(&conj)]);
        let classes = strict_equiv_classes(&lifts, &r).unwrap();
        let total: u64 = classes.iter().map(|c| c.orbit_size).sum();
        assert_eq!(total, lifts.lifts.len() as u64);
    }

    #[test]
    fn affine_agrees_with_union_find() {
        let caps = OracleCaps::default();
        let mut compared = 0;
        for p in [2, 3] {
            for name in ["dual-numbers", "xy2"] {
                let r = ArtinTestRing::by_name(name, p).unwrap();
                for (e, ell, top, len) in [(1, 3, 1, 1), (1, 4, 1, 2), (2, 5, 1, 2), (2, 6, 2, 3), (3, 7, 1, 3), (1, 5, 1, 2)] {
                    let b = base(e, ell, top, len, p);
                    let Ok(uf) = union_find_classes(&b, &r, OracleCaps { candidates: 1 << 16, ..caps }) else {
                        continue;
                    };
                    let af = affine_classes(&b, &r, caps.candidates).unwrap();
                    assert_eq!(af.classes, uf.classes, "p={p} {name} N({e},{ell}) top {top} len {len}");
                    compared += 1;
                }
            }
        }
        assert!(compared >= 20, "{compared} cases compared");
    }

    #[test]
    fn orbit_sizes_are_powers_of_p() {
        let r = ArtinTestRing::truncated_polynomial(3, 3, "u").unwrap();
        let lifts = enumerate_lifts(&base(1, 4, 1, 2, 3), &r, 1 << 16).unwrap();
        for c in strict_equiv_classes(&lifts, &r).unwrap() {
            let mut s = c.orbit_size;
            while s % 3 == 0 {
                s /= 3;
            }
            assert_eq!(s, 1);
        }
    }
}
