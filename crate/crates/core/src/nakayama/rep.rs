use super::module::UniserialModule;
use super::spec::{NakayamaSpec, ThetaProfile};
use crate::error::{Error, Result};
use crate::matrix::{CommRing, Matrix};
use crate::report::Report;

/// Matrices for the vertex idempotents and arrows of `N(e, ℓ)`.
///
/// `vertices[v-1]` represents `e_v`; `arrows[v-1]` represents `α_v: v -> v+1`.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixRep<E> {
    spec: NakayamaSpec,
    dim: usize,
    vertices: Vec<Matrix<E>>,
    arrows: Vec<Matrix<E>>,
}

impl<E: Clone> MatrixRep<E> {
    pub fn new(spec: NakayamaSpec, vertices: Vec<Matrix<E>>, arrows: Vec<Matrix<E>>) -> Result<Self> {
        if vertices.len() != spec.e() || arrows.len() != spec.e() {
            return Err(Error::DimensionMismatch(format!(
                "{} vertex and {} arrow matrices for e = {}",
                vertices.len(),
                arrows.len(),
                spec.e()
            )));
        }
        let dim = vertices[0].rows();
        if vertices.iter().chain(&arrows).any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch(format!("matrices are not all {dim}x{dim}")));
        }
        Ok(MatrixRep { spec, dim, vertices, arrows })
    }

    pub fn spec(&self) -> NakayamaSpec {
        self.spec
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Matrix of `e_v`, `v` 1-based.
    pub fn vertex(&self, v: usize) -> &Matrix<E> {
        &self.vertices[v - 1]
    }

    /// Matrix of `α_v`, `v` 1-based.
    pub fn arrow(&self, v: usize) -> &Matrix<E> {
        &self.arrows[v - 1]
    }

    pub fn vertices(&self) -> &[Matrix<E>] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Matrix<E>] {
        &self.arrows
    }

    /// Vertex matrices followed by arrow matrices.
    pub fn generators(&self) -> impl Iterator<Item = &Matrix<E>> {
        self.vertices.iter().chain(&self.arrows)
    }

    pub fn set_arrow(&mut self, v: usize, m: Matrix<E>) -> Result<()> {
        if m.rows() != self.dim || m.cols() != self.dim {
            return Err(Error::DimensionMismatch(format!("arrow matrix must be {0}x{0}", self.dim)));
        }
        self.arrows[v - 1] = m;
        Ok(())
    }

    /// Applies `f` entrywise, for base change along a ring map.
    pub fn map<T: Clone>(&self, f: impl Fn(&E) -> T) -> MatrixRep<T> {
        MatrixRep {
            spec: self.spec,
            dim: self.dim,
            vertices: self.vertices.iter().map(|m| m.map(&f)).collect(),
            arrows: self.arrows.iter().map(|m| m.map(&f)).collect(),
        }
    }

    pub fn try_map<T: Clone>(&self, f: impl Fn(&E) -> Result<T>) -> Result<MatrixRep<T>> {
        Ok(MatrixRep {
            spec: self.spec,
            dim: self.dim,
            vertices: self.vertices.iter().map(|m| m.try_map(&f)).collect::<Result<_>>()?,
            arrows: self.arrows.iter().map(|m| m.try_map(&f)).collect::<Result<_>>()?,
        })
    }

    /// `C ρ C^{-1}` given `C` and its inverse.
    pub fn conjugate<R: CommRing<Elem = E>>(&self, ring: &R, c: &Matrix<E>, c_inv: &Matrix<E>) -> Result<Self> {
        let conj = |m: &Matrix<E>| c.mul(ring, m)?.mul(ring, c_inv);
        Ok(MatrixRep {
            spec: self.spec,
            dim: self.dim,
            vertices: self.vertices.iter().map(conj).collect::<Result<_>>()?,
            arrows: self.arrows.iter().map(conj).collect::<Result<_>>()?,
        })
    }

    /// `ρ(α_v) ρ(α_{v-1}) ... ρ(α_{v-k+1})`.
    pub fn path<R: CommRing<Elem = E>>(&self, ring: &R, v: usize, k: usize) -> Result<Matrix<E>> {
        let mut acc = Matrix::identity(ring, self.dim);
        for step in 0..k {
            let w = self.spec.vertex(v as i64 - step as i64);
            acc = acc.mul(ring, self.arrow(w))?;
        }
        Ok(acc)
    }
}

/// Checks that the matrices define a module over `N(e, ℓ)`.
pub fn verify_rep<R: CommRing>(ring: &R, rep: &MatrixRep<R::Elem>) -> Result<Report> {
    let spec = rep.spec();
    let id = Matrix::identity(ring, rep.dim());
    let mut report = Report::new();
    let mut sum = Matrix::zeros(ring, rep.dim(), rep.dim());
    for v in spec.vertices() {
        let ev = rep.vertex(v);
        report.push(
            format!("idempotent e{v}"),
            ev.mul(ring, ev)? == *ev,
            "e_v^2 = e_v",
        );
        for w in spec.vertices().filter(|&w| w != v) {
            report.push(
                format!("orthogonal e{v} e{w}"),
                ev.mul(ring, rep.vertex(w))?.is_zero(ring),
                "e_v e_w = 0",
            );
        }
        sum = sum.add(ring, ev)?;
    }
    report.push("idempotents sum to 1", sum == id, format!("dimension {}", rep.dim()));
    for v in spec.vertices() {
        let a = rep.arrow(v);
        let next = rep.vertex(spec.vertex(v as i64 + 1));
        let framed = next.mul(ring, a)?.mul(ring, rep.vertex(v))?;
        report.push(
            format!("arrow a{v} frame"),
            framed == *a,
            format!("e{} a{v} e{v} = a{v}", spec.vertex(v as i64 + 1)),
        );
    }
    for v in spec.vertices() {
        let p = rep.path(ring, v, spec.ell())?;
        report.push(
            format!("relation E{v}"),
            p.is_zero(ring),
            format!("path of length {} ending at a{v}", spec.ell()),
        );
    }
    Ok(report)
}

/// Coordinate of the `k`-th chain vector of `m` in the block basis.
///
/// The chain vector `b_k` spans the `k`-th composition factor. Coordinates
/// are grouped by vertex and ordered by depth inside each vertex block.
pub fn chain_coordinate(m: &UniserialModule, k: usize) -> usize {
    let e = m.spec().e();
    let v = m.factor(k);
    let before: usize = (1..v).map(|u| block_size(m, u)).sum();
    before + k / e
}

/// Number of composition factors of `m` isomorphic to `S_v`.
pub fn block_size(m: &UniserialModule, v: usize) -> usize {
    m.multiplicity(v)
}

/// The matrix representation of a uniserial module in its chain basis.
///
/// `α_v` sends every chain vector at vertex `v` to the next one down.
pub fn uniserial_rep<R: CommRing>(ring: &R, m: &UniserialModule) -> MatrixRep<R::Elem> {
    let spec = m.spec();
    let d = m.len();
    let mut vertices = vec![Matrix::zeros(ring, d, d); spec.e()];
    let mut arrows = vec![Matrix::zeros(ring, d, d); spec.e()];
    for k in 0..d {
        let v = m.factor(k);
        let c = chain_coordinate(m, k);
        vertices[v - 1].set(c, c, ring.one());
        if k + 1 < d {
            arrows[v - 1].set(chain_coordinate(m, k + 1), c, ring.one());
        }
    }
    MatrixRep { spec, dim: d, vertices, arrows }
}

/// `Id^r_{x×y}`: `x × y` with `I_r` in the bottom-left corner.
pub fn id_block<R: CommRing>(ring: &R, r: usize, x: usize, y: usize) -> Matrix<R::Elem> {
    let mut m = Matrix::zeros(ring, x, y);
    for k in 0..r {
        m.set(x - r + k, k, ring.one());
    }
    m
}

/// `ρ_{n,i}` built literally from its block description.
///
/// For `n = 0` this is the `i`-dimensional representation with diagonal
/// idempotents and a subdiagonal arrow pattern. For `n >= 1` the arrow `α_v`
/// has the single nonzero block `A_{v,n,i}` in block position `(v+1, v)`.
pub fn build_rho<R: CommRing>(ring: &R, spec: NakayamaSpec, n: usize, i: usize) -> Result<MatrixRep<R::Elem>> {
    let e = spec.e();
    if i >= e {
        return Err(Error::Domain(format!("i = {i} must be below e = {e}")));
    }
    let dim = n * e + i;
    if dim == 0 {
        return Err(Error::ZeroModule);
    }
    if dim > spec.ell() {
        return Err(Error::Domain(format!("dimension {dim} exceeds the Loewy length {}", spec.ell())));
    }
    let mut vertices = Vec::with_capacity(e);
    let mut arrows = Vec::with_capacity(e);
    if n == 0 {
        for v in 1..=e {
            let mut ev = Matrix::zeros(ring, dim, dim);
            let mut av = Matrix::zeros(ring, dim, dim);
            if v <= i {
                ev.set(v - 1, v - 1, ring.one());
                if v < i {
                    av.set(v, v - 1, ring.one());
                }
            }
            vertices.push(ev);
            arrows.push(av);
        }
        return MatrixRep::new(spec, vertices, arrows);
    }
    let theta = ThetaProfile::new(e, n, i);
    for v in 1..=e {
        let mut ev = Matrix::zeros(ring, dim, dim);
        let off = theta.offset(v);
        for k in 0..theta.size(v) {
            ev.set(off + k, off + k, ring.one());
        }
        vertices.push(ev);
        let mut av = Matrix::zeros(ring, dim, dim);
        let block = a_block(ring, &theta, v, e);
        let target = if v < e { v + 1 } else { 1 };
        av.put_block(theta.offset(target), off, &block);
        arrows.push(av);
    }
    MatrixRep::new(spec, vertices, arrows)
}

/// `A_{v,n,i}`: the block of `ρ_{n,i}(α_v)`.
pub fn a_block<R: CommRing>(ring: &R, theta: &ThetaProfile, v: usize, e: usize) -> Matrix<R::Elem> {
    if v < e {
        let (x, y) = (theta.size(v + 1), theta.size(v));
        id_block(ring, x.min(y), x, y)
    } else {
        let (x, y) = (theta.size(1), theta.size(e));
        id_block(ring, theta.size(1) - 1, x, y)
    }
}

/// The vertex `v` in `1..=e` with `v ≡ i (mod e)`.
pub fn deformed_vertex(e: usize, i: usize) -> usize {
    if i == 0 {
        e
    } else {
        i
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::PrimeField;

    const F2: PrimeField = PrimeField(2);

    #[test]
    fn literal_examples() {
        let s = NakayamaSpec::new(2, 5).unwrap();
        let r = build_rho(&F2, s, 1, 0).unwrap();
        assert_eq!(*r.arrow(1), Matrix::from_rows(vec![vec![0, 0], vec![1, 0]]));
        assert!(r.arrow(2).is_zero(&F2));

        let s = NakayamaSpec::new(1, 5).unwrap();
        let r = build_rho(&F2, s, 2, 0).unwrap();
        assert_eq!(*r.arrow(1), Matrix::from_rows(vec![vec![0, 0], vec![1, 0]]));

        let s = NakayamaSpec::new(3, 7).unwrap();
        let r = build_rho(&F2, s, 0, 2).unwrap();
        assert_eq!(*r.arrow(1), Matrix::from_rows(vec![vec![0, 0], vec![1, 0]]));
        assert!(r.arrow(2).is_zero(&F2));
    }

    #[test]
    fn literal_matches_chain_basis() {
        for e in 1..=4 {
            for ell in 2..=10 {
                let s = NakayamaSpec::new(e, ell).unwrap();
                for len in 1..=ell {
                    let (n, i) = (len / e, len % e);
                    let m = UniserialModule::standard(s, n, i).unwrap();
                    let chain = uniserial_rep(&F2, &m);
                    assert_eq!(build_rho(&F2, s, n, i).unwrap(), chain, "e={e} ell={ell} len={len}");
                    assert!(verify_rep(&F2, &chain).unwrap().passed());
                }
            }
        }
    }

    #[test]
    fn every_top_is_a_module() {
        let s = NakayamaSpec::new(3, 8).unwrap();
        for top in 1..=3 {
            for len in 1..=8 {
                let m = UniserialModule::new(s, top, len).unwrap();
                assert!(verify_rep(&F2, &uniserial_rep(&F2, &m)).unwrap().passed());
            }
        }
    }

    #[test]
    fn perturbation_is_caught() {
        let s = NakayamaSpec::new(2, 4).unwrap();
        let mut r = build_rho(&F2, s, 2, 0).unwrap();
        let mut a = r.arrow(2).clone();
        a.set(0, 3, 1);
        r.set_arrow(2, a).unwrap();
        let report = verify_rep(&F2, &r).unwrap();
        assert!(!report.passed());
        assert!(report.failures().any(|c| c.name.starts_with("relation")));
    }
}
