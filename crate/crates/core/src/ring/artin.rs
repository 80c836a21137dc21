//! Finite commutative local `F_p`-algebras given by structure constants.
//!
//! Elements are encoded as integers: the element with coordinates
//! `(c_0, ..., c_{r-1})` in the basis is `sum c_k p^k`. Basis vector 0 is the
//! unit, and the remaining basis vectors span the maximal ideal.

use super::coefficient::{is_prime, CoefficientMode};
use super::linalg::{Echelon, ModP};
use super::quotient::QuotientModel;
use crate::error::{Error, Result};

/// Largest ring for which full addition and multiplication tables are built.
pub const MAX_RING_SIZE: usize = 1024;

/// Encoded element of an [`ArtinTestRing`].
pub type Elem = u32;

#[derive(Clone, Debug)]
pub struct ArtinTestRing {
    name: String,
    p: u64,
    labels: Vec<String>,
    structure: Vec<u64>,
    size: usize,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    generators: Vec<Elem>,
    loewy: u32,
}

impl PartialEq for ArtinTestRing {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.structure == other.structure && self.labels.len() == other.labels.len()
    }
}

impl ArtinTestRing {
    /// Builds and verifies a ring from structure constants
    /// `e_i * e_j = sum_k c[i][j][k] e_k`.
    pub fn from_structure(name: &str, p: u64, labels: Vec<String>, c: Vec<Vec<Vec<u64>>>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        let r = labels.len();
        if r == 0 || c.len() != r || c.iter().any(|row| row.len() != r || row.iter().any(|v| v.len() != r)) {
            return Err(Error::InvalidRing("structure constants have the wrong shape".into()));
        }
        let size = (p as usize).checked_pow(r as u32).filter(|&s| s <= MAX_RING_SIZE).ok_or_else(|| {
            Error::cap("test ring elements", format!("{p}^{r}"), MAX_RING_SIZE)
        })?;
        let mut structure = vec![0u64; r * r * r];
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    structure[(i * r + j) * r + k] = c[i][j][k] % p;
                }
            }
        }
        let st = |i: usize, j: usize, k: usize| structure[(i * r + j) * r + k];
        for j in 0..r {
            for k in 0..r {
                if st(0, j, k) != u64::from(j == k) {
                    return Err(Error::InvalidRing("basis vector 0 is not the unit".into()));
                }
            }
        }
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    if st(i, j, k) != st(j, i, k) {
                        return Err(Error::InvalidRing("not commutative".into()));
                    }
                }
                if i > 0 && st(i, j, 0) != 0 {
                    return Err(Error::InvalidRing("maximal ideal is not closed under multiplication".into()));
                }
            }
        }
        // (e_a e_b) e_c = e_a (e_b e_c)
        for a in 0..r {
            for b in 0..r {
                for cc in 0..r {
                    for k in 0..r {
                        let mut lhs = 0;
                        let mut rhs = 0;
                        for m in 0..r {
                            lhs += st(a, b, m) * st(m, cc, k);
                            rhs += st(b, cc, m) * st(a, m, k);
                        }
                        if lhs % p != rhs % p {
                            return Err(Error::InvalidRing("not associative".into()));
                        }
                    }
                }
            }
        }

        let mut ring = ArtinTestRing {
            name: name.to_string(),
            p,
            labels,
            structure,
            size,
            add: Vec::new(),
            mul: Vec::new(),
            neg: Vec::new(),
            generators: Vec::new(),
            loewy: 0,
        };
        ring.build_tables();
        ring.analyse_radical()?;
        Ok(ring)
    }

    fn build_tables(&mut self) {
        let s = self.size;
        let r = self.labels.len();
        let coords: Vec<Vec<u64>> = (0..s).map(|e| self.coords(e as Elem)).collect();
        self.add = vec![0; s * s];
        self.mul = vec![0; s * s];
        self.neg = vec![0; s];
        for a in 0..s {
            self.neg[a] = self.encode(&coords[a].iter().map(|x| (self.p - x) % self.p).collect::<Vec<_>>());
            for b in 0..s {
                let sum: Vec<u64> = coords[a].iter().zip(&coords[b]).map(|(x, y)| (x + y) % self.p).collect();
                self.add[a * s + b] = self.encode(&sum);
                let mut prod = vec![0u64; r];
                for i in 0..r {
                    if coords[a][i] == 0 {
                        continue;
                    }
                    for j in 0..r {
                        if coords[b][j] == 0 {
                            continue;
                        }
                        let f = coords[a][i] * coords[b][j] % self.p;
                        for (k, slot) in prod.iter_mut().enumerate() {
                            *slot = (*slot + f * self.structure[(i * r + j) * r + k]) % self.p;
                        }
                    }
                }
                self.mul[a * s + b] = self.encode(&prod);
            }
        }
    }

    /// Computes the powers of the maximal ideal, checks nilpotency, and
    /// collects a basis of each power as group generators.
    fn analyse_radical(&mut self) -> Result<()> {
        let r = self.labels.len();
        let f = ModP(self.p);
        let mut power: Vec<Elem> = (1..r).map(|k| self.basis_element(k)).collect();
        let m_basis = power.clone();
        let mut gens = Vec::new();
        let mut k = 1;
        while !power.is_empty() {
            gens.extend(power.iter().copied());
            if k > r {
                return Err(Error::InvalidRing("maximal ideal is not nilpotent".into()));
            }
            let mut ech = Echelon::new(f, r);
            let mut next = Vec::new();
            for &a in &power {
                for &b in &m_basis {
                    let c = self.mul(a, b);
                    if ech.insert_dense(self.coords(c)) {
                        next.push(c);
                    }
                }
            }
            power = next;
            k += 1;
        }
        gens.sort();
        gens.dedup();
        self.generators = gens;
        self.loewy = k as u32;
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `F_p`-dimension of the ring.
    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    /// Number of elements.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Smallest `k` with `m^k = 0`.
    pub fn loewy_length(&self) -> u32 {
        self.loewy
    }

    /// Structure constant `c[i][j][k]`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> u64 {
        let r = self.rank();
        self.structure[(i * r + j) * r + k]
    }

    pub fn coords(&self, e: Elem) -> Vec<u64> {
        let mut e = e as u64;
        (0..self.rank())
            .map(|_| {
                let c = e % self.p;
                e /= self.p;
                c
            })
            .collect()
    }

    pub fn encode(&self, coords: &[u64]) -> Elem {
        coords.iter().rev().fold(0u64, |acc, &c| acc * self.p + c % self.p) as Elem
    }

    pub fn basis_element(&self, k: usize) -> Elem {
        (self.p as usize).pow(k as u32) as Elem
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        1
    }

    pub fn scalar(&self, c: u64) -> Elem {
        (c % self.p) as Elem
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.size + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.size + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// Image in the residue field.
    pub fn residue(&self, a: Elem) -> u64 {
        a as u64 % self.p
    }

    pub fn in_max_ideal(&self, a: Elem) -> bool {
        self.residue(a) == 0
    }

    /// Inverse of a unit.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if self.in_max_ideal(a) {
            return None;
        }
        (0..self.size as Elem).find(|&b| self.mul(a, b) == 1)
    }

    /// All elements of the maximal ideal in increasing encoding order.
    pub fn max_ideal_elements(&self) -> Vec<Elem> {
        (0..self.size as Elem).filter(|&a| self.in_max_ideal(a)).collect()
    }

    /// A spanning set of the maximal ideal containing a basis of every power
    /// `m^k`; conjugation by `I + r E_ij` for these `r` generates the
    /// congruence subgroup.
    pub fn max_ideal_generators(&self) -> &[Elem] {
        &self.generators
    }

    /// Coordinates of a maximal-ideal element, dropping the unit coordinate.
    pub fn max_ideal_coords(&self, a: Elem) -> Vec<u64> {
        self.coords(a)[1..].to_vec()
    }

    pub fn format(&self, a: Elem) -> String {
        let c = self.coords(a);
        let parts: Vec<String> = c
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(k, &x)| match (k, x) {
                (0, _) => x.to_string(),
                (_, 1) => self.labels[k].clone(),
                _ => format!("{x}*{}", self.labels[k]),
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// `F_p`.
    pub fn field(p: u64) -> Result<Self> {
        Self::from_structure(&format!("F{p}"), p, vec!["1".into()], vec![vec![vec![1]]])
    }

    /// `F_p[eps] / (eps^2)`.
    pub fn dual_numbers(p: u64) -> Result<Self> {
        Self::truncated_polynomial(p, 2, "eps")
            .map(|r| r.renamed(&format!("F{p}[eps]")))
    }

    /// `F_p[u] / (u^k)`.
    pub fn truncated_polynomial(p: u64, k: usize, var: &str) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidRing("u^0 = 0 is the zero ring".into()));
        }
        let labels = (0..k)
            .map(|a| match a {
                0 => "1".to_string(),
                1 => var.to_string(),
                _ => format!("{var}^{a}"),
            })
            .collect();
        let mut c = vec![vec![vec![0; k]; k]; k];
        for i in 0..k {
            for j in 0..k {
                if i + j < k {
                    c[i][j][i + j] = 1;
                }
            }
        }
        Self::from_structure(&format!("F{p}[{var}]/({var}^{k})"), p, labels, c)
    }

    /// `F_p[x_1..x_r] / (x_1..x_r)^2`, written out by hand.
    pub fn square_zero(p: u64, r: usize) -> Result<Self> {
        let names: Vec<String> = match r {
            2 => vec!["x".into(), "y".into()],
            _ => (1..=r).map(|k| format!("x{k}")).collect(),
        };
        let mut labels = vec!["1".to_string()];
        labels.extend(names.iter().cloned());
        let d = r + 1;
        let mut c = vec![vec![vec![0; d]; d]; d];
        for j in 0..d {
            c[0][j][j] = 1;
            c[j][0][j] = 1;
        }
        Self::from_structure(&format!("F{p}[{}]/({})^2", names.join(","), names.join(",")), p, labels, c)
    }

    /// The ring described by a certified quotient model over `F_p`, in the
    /// basis of standard monomials.
    pub fn from_quotient(name: &str, model: &QuotientModel) -> Result<Self> {
        let CoefficientMode::Prime(p) = model.context().mode() else {
            return Err(Error::InvalidRing("quotient model must be over a prime field".into()));
        };
        if !model.is_certified() {
            return Err(Error::InvalidRing("quotient model is not certified finite".into()));
        }
        let basis = model.standard_monomials();
        if basis.first().map(|m| !m.is_one()).unwrap_or(true) {
            return Err(Error::InvalidRing("quotient is not local with unit first".into()));
        }
        let r = basis.len();
        let mut c = vec![vec![vec![0; r]; r]; r];
        for i in 0..r {
            for j in 0..r {
                for (k, v) in model.reduce_monomial(&basis[i].mul(&basis[j])) {
                    let super::coefficient::Coefficient::Modular(v) = v else { unreachable!() };
                    c[i][j][k] = v;
                }
            }
        }
        let labels = basis.iter().map(|m| m.to_string()).collect();
        Self::from_structure(name, p, labels, c)
    }

    fn renamed(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    /// Looks up a catalog ring by its short name.
    pub fn by_name(name: &str, p: u64) -> Result<Self> {
        match name {
            "field" | "fp" => Self::field(p),
            "dual-numbers" | "dual" | "eps" => Self::dual_numbers(p),
            "u3" => Self::truncated_polynomial(p, 3, "u"),
            "u4" => Self::truncated_polynomial(p, 4, "u"),
            "xy2" | "plane" => Self::square_zero(p, 2),
            "xy-squares" => Self::xy_squares(p),
            other => Err(Error::InvalidRing(format!(
                "unknown test ring '{other}' (expected field, dual-numbers, u3, u4, xy2, xy-squares)"
            ))),
        }
    }

    /// `F_p[x,y] / (x^2, xy, y^2)` computed through a quotient model. It is
    /// the same ring as [`ArtinTestRing::square_zero`] with `r = 2`.
    pub fn xy_squares(p: u64) -> Result<Self> {
        use super::poly::{PolyContext, TruncatedPolynomial};
        use super::quotient::IdealBasis;
        let ctx = PolyContext::new(2, 4, CoefficientMode::Prime(p).validate()?);
        let gens = [[2, 0], [1, 1], [0, 2]]
            .iter()
            .map(|e| TruncatedPolynomial::from_int_terms(&ctx, &[(&e[..], 1)]))
            .collect();
        let model = QuotientModel::build(&IdealBasis::new(&ctx, gens)?, 4)?;
        Self::from_quotient(&format!("F{p}[x,y]/(x^2,xy,y^2)"), &model)
    }

    /// The built-in catalog: `F_p`, `F_p[eps]`, `F_p[u]/(u^3)`,
    /// `F_p[x,y]/(x,y)^2` and `F_p[x,y]/(x^2,xy,y^2)`.
    pub fn catalog(p: u64) -> Result<Vec<Self>> {
        Ok(vec![
            Self::field(p)?,
            Self::dual_numbers(p)?,
            Self::truncated_polynomial(p, 3, "u")?,
            Self::square_zero(p, 2)?,
            Self::xy_squares(p)?,
        ])
    }
}

/// A surjection `A1 -> A0` whose kernel is `k * t` with `m_{A1} t = 0`.
#[derive(Clone, Debug)]
pub struct SmallExtension {
    pub upper: ArtinTestRing,
    pub lower: ArtinTestRing,
    map: Vec<Elem>,
    kernel_generator: Elem,
}

impl SmallExtension {
    /// `images[k]` is the image of basis vector `k` of `upper`.
    pub fn new(upper: ArtinTestRing, lower: ArtinTestRing, images: &[Elem]) -> Result<Self> {
        if upper.characteristic() != lower.characteristic() || images.len() != upper.rank() {
            return Err(Error::InvalidRing("map does not match the rings".into()));
        }
        let map: Vec<Elem> = (0..upper.size() as Elem)
            .map(|a| {
                upper
                    .coords(a)
                    .iter()
                    .zip(images)
                    .fold(lower.zero(), |acc, (&c, &img)| lower.add(acc, lower.mul(lower.scalar(c), img)))
            })
            .collect();
        if map[1] != lower.one() {
            return Err(Error::InvalidRing("map does not preserve the unit".into()));
        }
        for i in 0..upper.rank() {
            for j in 0..upper.rank() {
                let (a, b) = (upper.basis_element(i), upper.basis_element(j));
                if map[upper.mul(a, b) as usize] != lower.mul(map[a as usize], map[b as usize]) {
                    return Err(Error::InvalidRing("map is not multiplicative".into()));
                }
            }
        }
        let mut hit = vec![false; lower.size()];
        for &x in &map {
            hit[x as usize] = true;
        }
        if hit.iter().any(|h| !h) {
            return Err(Error::InvalidRing("map is not surjective".into()));
        }
        let kernel: Vec<Elem> = (0..upper.size() as Elem).filter(|&a| map[a as usize] == 0).collect();
        if kernel.len() as u64 != upper.characteristic() {
            return Err(Error::InvalidRing("kernel is not one dimensional".into()));
        }
        let t = kernel[1];
        for m in upper.max_ideal_elements() {
            if upper.mul(m, t) != 0 {
                return Err(Error::InvalidRing("maximal ideal does not annihilate the kernel".into()));
            }
        }
        Ok(SmallExtension {
            upper,
            lower,
            map,
            kernel_generator: t,
        })
    }

    pub fn apply(&self, a: Elem) -> Elem {
        self.map[a as usize]
    }

    pub fn kernel_generator(&self) -> Elem {
        self.kernel_generator
    }

    pub fn name(&self) -> String {
        format!("{} -> {}", self.upper.name(), self.lower.name())
    }

    /// `F_p[u]/(u^3) -> F_p[u]/(u^2)`, `F_p[eps] -> F_p`,
    /// `F_p[x,y]/(x,y)^2 -> F_p[eps]` (x to eps, y to 0) and
    /// `F_p[u]/(u^4) -> F_p[u]/(u^3)`.
    pub fn catalog(p: u64) -> Result<Vec<Self>> {
        let u3 = ArtinTestRing::truncated_polynomial(p, 3, "u")?;
        let u2 = ArtinTestRing::truncated_polynomial(p, 2, "u")?;
        let u4 = ArtinTestRing::truncated_polynomial(p, 4, "u")?;
        let dual = ArtinTestRing::dual_numbers(p)?;
        let field = ArtinTestRing::field(p)?;
        let plane = ArtinTestRing::square_zero(p, 2)?;
        let e = dual.basis_element(1);
        Ok(vec![
            Self::new(u3.clone(), u2.clone(), &[1, u2.basis_element(1), 0])?,
            Self::new(dual.clone(), field, &[1, 0])?,
            Self::new(plane, dual, &[1, e, 0])?,
            Self::new(u4, u3.clone(), &[1, u3.basis_element(1), u3.basis_element(2), 0])?,
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_rings_verify() {
        for p in [2, 3] {
            let rings = ArtinTestRing::catalog(p).unwrap();
            let sizes: Vec<usize> = rings.iter().map(|r| r.size()).collect();
            let q = p as usize;
            assert_eq!(sizes, vec![q, q * q, q * q * q, q * q * q, q * q * q]);
            assert_eq!(rings[3], rings[4], "the two presentations of (x,y)^2 agree");
        }
    }

    #[test]
    fn loewy_lengths() {
        assert_eq!(ArtinTestRing::field(2).unwrap().loewy_length(), 1);
        assert_eq!(ArtinTestRing::dual_numbers(2).unwrap().loewy_length(), 2);
        assert_eq!(ArtinTestRing::truncated_polynomial(3, 3, "u").unwrap().loewy_length(), 3);
    }

    #[test]
    fn bad_structure_is_rejected() {
        // u^2 = 1 is not local
        let c = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 0]]];
        assert!(ArtinTestRing::from_structure("bad", 2, vec!["1".into(), "u".into()], c).is_err());
    }

    #[test]
    fn small_extensions_verify() {
        for p in [2, 3] {
            assert_eq!(SmallExtension::catalog(p).unwrap().len(), 4);
        }
    }

    #[test]
    fn arithmetic() {
        let r = ArtinTestRing::truncated_polynomial(2, 3, "u").unwrap();
        let u = r.basis_element(1);
        let u2 = r.mul(u, u);
        assert_eq!(u2, r.basis_element(2));
        assert_eq!(r.mul(u2, u), 0);
        let one_plus_u = r.add(1, u);
        let inv = r.inv(one_plus_u).unwrap();
        assert_eq!(r.mul(inv, one_plus_u), 1);
        assert_eq!(r.format(r.add(u, u2)), "u + u^2");
    }
}
