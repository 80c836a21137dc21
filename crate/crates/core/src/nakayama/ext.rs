use super::rep::{build_rho, deformed_vertex, MatrixRep};
use super::spec::{theta, NakayamaSpec, ThetaProfile};
use super::hom::to_rows;
use crate::error::{Error, Result};
use crate::matrix::{Matrix, PrimeField};
use crate::report::Report;
use crate::ring::artin::{ArtinTestRing, Elem};
use crate::ring::linalg::{self, ModP};

/// Dimension of `V_{c,i}` (zero allowed).
fn ell_of(e: usize, c: usize, i: usize) -> usize {
    c * e + i
}

/// Block coordinate of the `k`-th chain vector of `V_{c,i}`.
fn coordinate(e: usize, c: usize, i: usize, k: usize) -> usize {
    let profile = ThetaProfile::new(e, c, i);
    profile.offset(k % e + 1) + k / e
}

/// Representation of `V_{c,i}`, or the zero representation when `ce + i = 0`.
fn rep_of(spec: NakayamaSpec, c: usize, i: usize, p: u64) -> Result<MatrixRep<u64>> {
    if ell_of(spec.e(), c, i) == 0 {
        let z = Matrix::filled(0, 0, 0u64);
        return MatrixRep::new(spec, vec![z.clone(); spec.e()], vec![z; spec.e()]);
    }
    build_rho(&PrimeField(p), spec, c, i)
}

/// `β_{c,d}: V_{c,i} -> V_{d,i}` sending the top element `b_{c,i,1,1}` to
/// `b_{d,i,1,θ(1,d,i) - j + 1}` with `j = min(θ(1,c,i), θ(1,d,i))`.
pub fn beta(e: usize, i: usize, c: usize, d: usize) -> Matrix<u64> {
    let (lc, ld) = (ell_of(e, c, i), ell_of(e, d, i));
    let mut m = Matrix::filled(ld, lc, 0u64);
    let j = theta(1, c, i).min(theta(1, d, i));
    if j == 0 {
        return m;
    }
    // b_{d,i,1,w} is the chain vector at depth (w - 1) e.
    let offset = (theta(1, d, i) - j) * e;
    for k in 0..lc {
        if k + offset < ld {
            m.set(coordinate(e, d, i, k + offset), coordinate(e, c, i, k), 1);
        }
    }
    m
}

fn stack(top: &Matrix<u64>, bottom: &Matrix<u64>) -> Matrix<u64> {
    let mut m = Matrix::filled(top.rows() + bottom.rows(), top.cols(), 0u64);
    m.put_block(0, 0, top);
    m.put_block(top.rows(), 0, bottom);
    m
}

fn side_by_side(left: &Matrix<u64>, right: &Matrix<u64>) -> Matrix<u64> {
    let mut m = Matrix::filled(left.rows(), left.cols() + right.cols(), 0u64);
    m.put_block(0, 0, left);
    m.put_block(0, left.cols(), right);
    m
}

fn block_diagonal(a: &Matrix<u64>, b: &Matrix<u64>) -> Matrix<u64> {
    let mut m = Matrix::filled(a.rows() + b.rows(), a.cols() + b.cols(), 0u64);
    m.put_block(0, 0, a);
    m.put_block(a.rows(), a.cols(), b);
    m
}

/// The sequence `0 -> V_{n,i} -> V_{n+s,i} ⊕ V_{n-s,i} -> V_{n,i} -> 0`.
#[derive(Clone, Debug)]
pub struct ExtSequence {
    pub spec: NakayamaSpec,
    pub n: usize,
    pub i: usize,
    pub s: usize,
    pub base: MatrixRep<u64>,
    pub middle: MatrixRep<u64>,
    pub iota: Matrix<u64>,
    pub pi: Matrix<u64>,
    /// `ε_s = ι_s ∘ π_s` on the middle term.
    pub epsilon: Matrix<u64>,
    p: u64,
}

impl ExtSequence {
    /// Builds `ℰ_s` over `F_p`.
    pub fn new(spec: NakayamaSpec, n: usize, i: usize, s: usize, p: u64) -> Result<Self> {
        let e = spec.e();
        if n == 0 || s == 0 || s > n {
            return Err(Error::OutOfRange(format!("s = {s} outside 1..={n}")));
        }
        if i >= e || 2 * ell_of(e, n, i) > spec.ell() {
            return Err(Error::Domain(format!(
                "V_(n={n},i={i}) is not in the normalized range of {spec}"
            )));
        }
        let f = PrimeField(p);
        let base = rep_of(spec, n, i, p)?;
        let up = rep_of(spec, n + s, i, p)?;
        let down = rep_of(spec, n - s, i, p)?;
        let vertices = up.vertices().iter().zip(down.vertices()).map(|(a, b)| block_diagonal(a, b)).collect();
        let arrows = up.arrows().iter().zip(down.arrows()).map(|(a, b)| block_diagonal(a, b)).collect();
        let middle = MatrixRep::new(spec, vertices, arrows)?;
        let minus = beta(e, i, n, n - s).map(|&x| (p - x) % p);
        let iota = stack(&beta(e, i, n, n + s), &minus);
        let pi = side_by_side(&beta(e, i, n + s, n), &beta(e, i, n - s, n));
        let epsilon = iota.mul(&f, &pi)?;
        Ok(ExtSequence { spec, n, i, s, base, middle, iota, pi, epsilon, p })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// Homomorphism, exactness and `ε_s^2 = 0` checks by rank computations.
    pub fn verify(&self) -> Result<Report> {
        let f = PrimeField(self.p);
        let mut r = Report::new();
        let mut iota_hom = true;
        let mut pi_hom = true;
        let mut eps_hom = true;
        for (g, h) in self.base.generators().zip(self.middle.generators()) {
            iota_hom &= self.iota.mul(&f, g)? == h.mul(&f, &self.iota)?;
            pi_hom &= self.pi.mul(&f, h)? == g.mul(&f, &self.pi)?;
            eps_hom &= self.epsilon.mul(&f, h)? == h.mul(&f, &self.epsilon)?;
        }
        r.push("iota is a module map", iota_hom, "commutes with every generator");
        r.push("pi is a module map", pi_hom, "commutes with every generator");
        r.push("epsilon is a module map", eps_hom, "commutes with every generator");
        let dim = self.base.dim();
        let ri = super::hom::matrix_rank(self.p, &self.iota);
        let rp = super::hom::matrix_rank(self.p, &self.pi);
        r.push("iota injective", ri == dim, format!("rank {ri} of {dim}"));
        r.push("pi surjective", rp == dim, format!("rank {rp} of {dim}"));
        r.push(
            "pi iota = 0",
            self.pi.mul(&f, &self.iota)?.is_zero(&f),
            "image inside kernel",
        );
        r.push(
            "middle dimension",
            self.middle.dim() == 2 * dim,
            format!("{} = 2 * {dim}", self.middle.dim()),
        );
        r.push(
            "epsilon squares to zero",
            self.epsilon.mul(&f, &self.epsilon)?.is_zero(&f),
            "epsilon o epsilon = 0",
        );
        Ok(r)
    }

    /// Recovers the `k[ε]`-matrices of the middle term on the basis
    /// `{b_{n+s,i,v,w} : w <= θ(v,n,i)}`, with `ε` acting as `ε_s`.
    pub fn derived_lift(&self) -> Result<FirstOrderLift> {
        let f = PrimeField(self.p);
        let e = self.spec.e();
        let (n, i, s) = (self.n, self.i, self.s);
        let d = self.base.dim();
        let big = self.middle.dim();
        // Columns: the basis vectors, then their images under ε.
        let mut basis = Matrix::filled(big, 2 * d, 0u64);
        for k in 0..d {
            let q = coordinate(e, n, i, k);
            basis.set(coordinate(e, n + s, i, k), q, 1);
        }
        let eps_part = self.epsilon.mul(&f, &basis.block(0, 0, big, d))?;
        basis.put_block(0, d, &eps_part);
        let rows = to_rows(&basis);
        if linalg::rank(&ModP(self.p), &rows, 2 * d) != 2 * d {
            return Err(Error::Internal(format!(
                "middle term of the sequence for s = {s} is not free over the dual numbers"
            )));
        }
        let express = |m: &Matrix<u64>| -> Result<(Matrix<u64>, Matrix<u64>)> {
            let images = m.mul(&f, &basis.block(0, 0, big, d))?;
            let mut x = Matrix::filled(d, d, 0u64);
            let mut y = Matrix::filled(d, d, 0u64);
            for q in 0..d {
                let b: Vec<u64> = (0..big).map(|r| *images.get(r, q)).collect();
                let sol = linalg::solve(&ModP(self.p), &rows, 2 * d, &b)
                    .ok_or_else(|| Error::Internal("image outside the middle term".into()))?;
                for r in 0..d {
                    x.set(r, q, sol[r]);
                    y.set(r, q, sol[d + r]);
                }
            }
            Ok((x, y))
        };
        let mut vertex_perturbation = Vec::new();
        let mut arrow_base = Vec::new();
        let mut arrow_perturbation = Vec::new();
        let mut vertex_base = Vec::new();
        for v in self.spec.vertices() {
            let (x, y) = express(self.middle.vertex(v))?;
            vertex_base.push(x);
            vertex_perturbation.push(y);
            let (x, y) = express(self.middle.arrow(v))?;
            arrow_base.push(x);
            arrow_perturbation.push(y);
        }
        if vertex_perturbation.iter().any(|m| !m.is_zero(&f)) {
            return Err(Error::Internal("vertex idempotents acquired a perturbation".into()));
        }
        Ok(FirstOrderLift {
            base: MatrixRep::new(self.spec, vertex_base, arrow_base)?,
            perturbation: arrow_perturbation,
            p: self.p,
        })
    }
}

/// A lift `ρ + ε X` over the dual numbers `F_p[ε]` with unperturbed idempotents.
#[derive(Clone, Debug, PartialEq)]
pub struct FirstOrderLift {
    pub base: MatrixRep<u64>,
    /// `X` for each arrow `α_v`, index `v - 1`.
    pub perturbation: Vec<Matrix<u64>>,
    p: u64,
}

impl FirstOrderLift {
    pub fn new(base: MatrixRep<u64>, perturbation: Vec<Matrix<u64>>, p: u64) -> Result<Self> {
        if perturbation.len() != base.spec().e()
            || perturbation.iter().any(|m| m.rows() != base.dim() || m.cols() != base.dim())
        {
            return Err(Error::DimensionMismatch("one perturbation matrix per arrow".into()));
        }
        Ok(FirstOrderLift { base, perturbation, p })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// The lift as matrices over the dual numbers test ring.
    pub fn to_dual_numbers(&self, ring: &ArtinTestRing) -> Result<MatrixRep<Elem>> {
        if ring.characteristic() != self.p || ring.rank() != 2 || ring.loewy_length() != 2 {
            return Err(Error::InvalidRing(format!("{} is not F_{}[eps]", ring.name(), self.p)));
        }
        let mut rep = self.base.map(|&a| ring.encode(&[a, 0]));
        for v in self.base.spec().vertices() {
            let a = self.base.arrow(v);
            let x = &self.perturbation[v - 1];
            let mut m = Matrix::filled(a.rows(), a.cols(), 0 as Elem);
            for r in 0..a.rows() {
                for c in 0..a.cols() {
                    m.set(r, c, ring.encode(&[*a.get(r, c), *x.get(r, c)]));
                }
            }
            rep.set_arrow(v, m)?;
        }
        Ok(rep)
    }
}

/// `T_s`: zero except the last column of block `(i+1, v)` with `v ≡ i`,
/// whose `(n-s+1)`-th entry is `1` (the coefficient of `ε`).
pub fn t_matrix(spec: NakayamaSpec, n: usize, i: usize, s: usize) -> Matrix<u64> {
    let e = spec.e();
    let profile = ThetaProfile::new(e, n, i);
    let d = profile.total();
    let mut t = Matrix::filled(d, d, 0u64);
    let b = deformed_vertex(e, i);
    let a = i + 1;
    let col = profile.offset(b) + profile.size(b) - 1;
    t.set(profile.offset(a) + n - s, col, 1);
    t
}

/// `ρ_{n,i,s} = ρ_{n,i} + ε T_s` on the arrow `α_v`, `v ≡ i (mod e)`.
pub fn dual_number_lift(spec: NakayamaSpec, n: usize, i: usize, s: usize, p: u64) -> Result<FirstOrderLift> {
    if n == 0 || s == 0 || s > n {
        return Err(Error::OutOfRange(format!("s = {s} outside 1..={n}")));
    }
    let base = build_rho(&PrimeField(p), spec, n, i)?;
    let d = base.dim();
    let mut perturbation = vec![Matrix::filled(d, d, 0u64); spec.e()];
    perturbation[deformed_vertex(spec.e(), i) - 1] = t_matrix(spec, n, i, s);
    FirstOrderLift::new(base, perturbation, p)
}

/// The tuple `(Y ρ(g) - ρ(g) Y)_g` for the elementary matrix `Y = E_{rc}`,
/// flattened over vertices then arrows.
fn commutator_vector(base: &MatrixRep<u64>, r: usize, c: usize, p: u64) -> Vec<u64> {
    let d = base.dim();
    let mut out = Vec::with_capacity(2 * base.spec().e() * d * d);
    for g in base.generators() {
        let mut m = vec![0u64; d * d];
        // (E_rc g)[r][k] = g[c][k]; (g E_rc)[k][c] = g[k][r].
        for k in 0..d {
            let x = *g.get(c, k);
            m[r * d + k] = (m[r * d + k] + x) % p;
            let y = *g.get(k, r);
            m[k * d + c] = (m[k * d + c] + p - y) % p;
        }
        out.extend(m);
    }
    out
}

fn perturbation_vector(lift: &FirstOrderLift) -> Vec<u64> {
    let d = lift.base.dim();
    let e = lift.base.spec().e();
    let mut out = vec![0u64; e * d * d];
    for x in &lift.perturbation {
        out.extend_from_slice(x.entries());
    }
    out
}

/// Ranks of the coboundary space and of the coboundaries together with the lifts.
///
/// The lifts define independent tangent classes exactly when the second rank
/// exceeds the first by the number of lifts.
pub fn tangent_ranks(lifts: &[FirstOrderLift]) -> Result<(usize, usize)> {
    let first = lifts.first().ok_or_else(|| Error::Domain("no lifts given".into()))?;
    let p = first.p;
    let base = &first.base;
    if lifts.iter().any(|l| l.base != *base || l.p != p) {
        return Err(Error::DimensionMismatch("lifts of different representations".into()));
    }
    let d = base.dim();
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for r in 0..d {
        for c in 0..d {
            rows.push(commutator_vector(base, r, c, p));
        }
    }
    let ncols = rows[0].len();
    let coboundary = linalg::rank(&ModP(p), &rows, ncols);
    rows.extend(lifts.iter().map(perturbation_vector));
    Ok((coboundary, linalg::rank(&ModP(p), &rows, ncols)))
}

/// Whether two first-order lifts of the same representation are strictly
/// equivalent, by solving `X' - X = Y ρ - ρ Y` for `Y`.
pub fn strictly_equivalent_first_order(a: &FirstOrderLift, b: &FirstOrderLift) -> Result<bool> {
    if a.base != b.base || a.p != b.p {
        return Err(Error::DimensionMismatch("lifts of different representations".into()));
    }
    let p = a.p;
    let d = a.base.dim();
    let columns: Vec<Vec<u64>> = (0..d * d).map(|k| commutator_vector(&a.base, k / d, k % d, p)).collect();
    let len = columns[0].len();
    let rows: Vec<Vec<u64>> = (0..len).map(|j| columns.iter().map(|c| c[j]).collect()).collect();
    let va = perturbation_vector(a);
    let vb = perturbation_vector(b);
    let rhs: Vec<u64> = vb.iter().zip(&va).map(|(x, y)| (x + p - y) % p).collect();
    Ok(linalg::solve(&ModP(p), &rows, d * d, &rhs).is_some())
}

/// All checks for the `n` sequences and lifts of `V_{n,i}` over `F_p`.
pub fn verify_ext_sequences(spec: NakayamaSpec, n: usize, i: usize, p: u64) -> Result<Report> {
    let mut report = Report::new();
    let mut lifts = Vec::new();
    for s in 1..=n {
        let seq = ExtSequence::new(spec, n, i, s, p)?;
        report.extend_prefixed(&format!("s={s}"), seq.verify()?);
        let derived = seq.derived_lift()?;
        let literal = dual_number_lift(spec, n, i, s, p)?;
        report.push(
            format!("s={s}/middle term matches rho_n,i,s"),
            derived == literal,
            "matrices over the dual numbers recovered from the sequence",
        );
        lifts.push(literal);
    }
    if !lifts.is_empty() {
        let (cob, total) = tangent_ranks(&lifts)?;
        report.push(
            "lifts independent modulo coboundaries",
            total == cob + n,
            format!("coboundary rank {cob}, with lifts {total}"),
        );
        let mut pairwise = true;
        for a in 0..lifts.len() {
            for b in a + 1..lifts.len() {
                pairwise &= !strictly_equivalent_first_order(&lifts[a], &lifts[b])?;
            }
        }
        report.push("lifts pairwise inequivalent", pairwise, format!("{n} lifts"));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn beta_special_cases() {
        // Identity, projection and inclusion for e = 2, i = 1.
        let id = beta(2, 1, 1, 1);
        assert_eq!(id, Matrix::identity(&PrimeField(2), 3));
        let proj = beta(2, 1, 2, 1);
        assert_eq!(super::super::hom::matrix_rank(2, &proj), 3);
        let incl = beta(2, 1, 1, 2);
        assert_eq!(super::super::hom::matrix_rank(2, &incl), 3);
        assert!(beta(2, 0, 1, 0).rows() == 0);
    }

    #[test]
    fn sequences_on_grid() {
        for e in 1..=3 {
            for ell in 2..=9 {
                let spec = NakayamaSpec::new(e, ell).unwrap();
                for n in 1..=ell / e {
                    for i in 0..e {
                        if 2 * (n * e + i) > ell {
                            continue;
                        }
                        let r = verify_ext_sequences(spec, n, i, 2).unwrap();
                        assert!(r.passed(), "e={e} ell={ell} n={n} i={i}\n{r}");
                    }
                }
            }
        }
    }

    #[test]
    fn odd_characteristic() {
        let spec = NakayamaSpec::new(2, 9).unwrap();
        assert!(verify_ext_sequences(spec, 2, 0, 3).unwrap().passed());
        assert!(verify_ext_sequences(spec, 1, 1, 5).unwrap().passed());
    }

    #[test]
    fn dual_numbers_encoding() {
        let spec = NakayamaSpec::new(2, 5).unwrap();
        let lift = dual_number_lift(spec, 1, 0, 1, 2).unwrap();
        let ring = ArtinTestRing::dual_numbers(2).unwrap();
        let rep = lift.to_dual_numbers(&ring).unwrap();
        let report = super::super::rep::verify_rep(&ring, &rep).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(ring.coords(*rep.arrow(2).get(0, 1)), vec![0, 1]);
    }
}
