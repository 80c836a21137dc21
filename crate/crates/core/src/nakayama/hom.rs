use super::module::UniserialModule;
use super::rep::{chain_coordinate, uniserial_rep, MatrixRep};
use super::spec::NakayamaSpec;
use crate::error::{Error, Result};
use crate::matrix::{Matrix, PrimeField};
use crate::report::Report;
use crate::ring::linalg::{self, ModP};

/// Rows of a matrix over `F_p`.
pub fn to_rows(m: &Matrix<u64>) -> Vec<Vec<u64>> {
    (0..m.rows()).map(|r| m.row(r).to_vec()).collect()
}

pub fn matrix_rank(p: u64, m: &Matrix<u64>) -> usize {
    linalg::rank(&ModP(p), &to_rows(m), m.cols())
}

/// Rank of a family of matrices viewed as vectors.
pub fn span_rank(p: u64, ms: &[Matrix<u64>]) -> usize {
    let ncols = ms.first().map(|m| m.entries().len()).unwrap_or(0);
    let rows: Vec<Vec<u64>> = ms.iter().map(|m| m.entries().to_vec()).collect();
    linalg::rank(&ModP(p), &rows, ncols)
}

/// `dim Hom(U, W)` from the uniserial structure.
///
/// The image of a map is a quotient of `U` of length `r` that is also the
/// submodule of `W` of length `r`; each admissible `r` contributes one map.
pub fn hom_dim_combinatorial(u: &UniserialModule, w: &UniserialModule) -> usize {
    let e = u.spec().e() as i64;
    let (a, p) = (u.top() as i64, u.len() as i64);
    let (b, q) = (w.top() as i64, w.len() as i64);
    (1..=p.min(q)).filter(|r| (a - (b + q - r)).rem_euclid(e) == 0).count()
}

/// Basis of the intertwiners `X` with `X ρ_U(g) = ρ_W(g) X` for every generator.
pub fn hom_basis(p: u64, u: &MatrixRep<u64>, w: &MatrixRep<u64>) -> Result<Vec<Matrix<u64>>> {
    if u.spec() != w.spec() {
        return Err(Error::DimensionMismatch(format!("{} against {}", u.spec(), w.spec())));
    }
    let (du, dw) = (u.dim(), w.dim());
    let nvars = dw * du;
    let mut rows = Vec::new();
    for (ug, wg) in u.generators().zip(w.generators()) {
        for r in 0..dw {
            for c in 0..du {
                let mut row = vec![0u64; nvars];
                for k in 0..du {
                    let x = *ug.get(k, c);
                    if x != 0 {
                        row[r * du + k] = (row[r * du + k] + x) % p;
                    }
                }
                for k in 0..dw {
                    let y = *wg.get(r, k);
                    if y != 0 {
                        row[k * du + c] = (row[k * du + c] + p - y) % p;
                    }
                }
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
    }
    Ok(linalg::kernel(&ModP(p), &rows, nvars)
        .into_iter()
        .map(|v| Matrix::from_rows(v.chunks(du).map(|c| c.to_vec()).collect()))
        .collect())
}

/// `dim Hom(U, W)` computed both combinatorially and by solving for
/// intertwiners over `F_p`; disagreement is an internal error.
pub fn hom_dim(u: &UniserialModule, w: &UniserialModule, p: u64) -> Result<usize> {
    let comb = hom_dim_combinatorial(u, w);
    let ru = uniserial_rep(&PrimeField(p), u);
    let rw = uniserial_rep(&PrimeField(p), w);
    let solved = hom_basis(p, &ru, &rw)?.len();
    if comb != solved {
        return Err(Error::Internal(format!(
            "Hom({u}, {w}): multiplicity count {comb}, intertwiner solve {solved}"
        )));
    }
    Ok(comb)
}

/// The projective cover `P(W) -> W`, identity on the first `len(W)` chain vectors.
pub fn projective_cover(w: &UniserialModule) -> Result<(UniserialModule, Matrix<u64>)> {
    let spec = w.spec();
    let pw = UniserialModule::new(spec, w.top(), spec.ell())?;
    let mut pi = Matrix::filled(w.len(), pw.len(), 0u64);
    for k in 0..w.len() {
        pi.set(chain_coordinate(w, k), chain_coordinate(&pw, k), 1);
    }
    Ok((pw, pi))
}

/// Dimension of the maps `M -> W` factoring through a projective module.
///
/// Every such map factors through the projective cover of `W`.
pub fn projective_factoring_dim(m: &UniserialModule, w: &UniserialModule, p: u64) -> Result<usize> {
    let f = PrimeField(p);
    let (pw, pi) = projective_cover(w)?;
    let through = hom_basis(p, &uniserial_rep(&f, m), &uniserial_rep(&f, &pw))?;
    let composed: Vec<Matrix<u64>> = through
        .iter()
        .map(|g| pi.mul(&f, g))
        .collect::<Result<_>>()?;
    Ok(span_rank(p, &composed))
}

/// `dim Ext^1(V, V) = n`, cross-checked against the stable maps `Ω(V) -> V`.
pub fn ext1_dim(v: &UniserialModule, p: u64) -> Result<usize> {
    let report = ext1_report(v, p)?;
    if !report.passed() {
        return Err(Error::Internal(format!("Ext^1 cross-check failed for {v}:\n{report}")));
    }
    Ok(v.n())
}

/// The individual Ext^1 cross-checks for a non-projective module.
pub fn ext1_report(v: &UniserialModule, p: u64) -> Result<Report> {
    let omega = v.syzygy()?;
    let n = v.n();
    let full = hom_dim(&omega, v, p)?;
    let factoring = projective_factoring_dim(&omega, v, p)?;
    let mut report = Report::new();
    report.push(
        "stable Hom(Omega V, V)",
        full - factoring == n,
        format!("{full} intertwiners, {factoring} through projectives, n = {n}"),
    );
    if 2 * v.len() <= v.spec().ell() {
        report.push(
            "no map factors through a projective",
            factoring == 0,
            format!("{factoring}-dimensional projective-factoring subspace"),
        );
        report.push(
            "multiplicity of the top of Omega V",
            v.multiplicity(omega.top()) == n,
            format!("S{} occurs {} times in V", omega.top(), v.multiplicity(omega.top())),
        );
    }
    Ok(report)
}

/// Subspace spanned by the columns of `basis` images under all arrows.
fn radical_of(rep: &MatrixRep<u64>, basis: &[Vec<u64>], p: u64) -> Result<Vec<Vec<u64>>> {
    let f = PrimeField(p);
    let mut out = Vec::new();
    for a in rep.arrows() {
        for x in basis {
            let col = Matrix::from_rows(x.iter().map(|&c| vec![c]).collect());
            out.push(a.mul(&f, &col)?.entries().to_vec());
        }
    }
    Ok(out)
}

/// `Ω(V)` computed as the kernel of the projective cover, by linear algebra.
pub fn syzygy_by_kernel(v: &UniserialModule, p: u64) -> Result<UniserialModule> {
    if v.is_projective() {
        return Err(Error::Projective);
    }
    let f = PrimeField(p);
    let (pv, pi) = projective_cover(v)?;
    let prep = uniserial_rep(&f, &pv);
    let k = linalg::kernel(&ModP(p), &to_rows(&pi), pv.len());
    let rad = radical_of(&prep, &k, p)?;
    let rad_rank = linalg::rank(&ModP(p), &rad, pv.len());
    if k.len() - rad_rank != 1 {
        return Err(Error::Internal(format!(
            "kernel of the cover of {v} has a {}-dimensional top",
            k.len() - rad_rank
        )));
    }
    let mut top = None;
    for u in v.spec().vertices() {
        let mut rows = rad.clone();
        for x in &k {
            let col = Matrix::from_rows(x.iter().map(|&c| vec![c]).collect());
            rows.push(prep.vertex(u).mul(&f, &col)?.entries().to_vec());
        }
        if linalg::rank(&ModP(p), &rows, pv.len()) > rad_rank {
            top = Some(u);
        }
    }
    let top = top.ok_or_else(|| Error::Internal("kernel top not found".into()))?;
    UniserialModule::new(v.spec(), top, k.len())
}

/// Multiplicity of each simple in the socle `∩ ker ρ(α_v)`.
pub fn socle_pattern(rep: &MatrixRep<u64>, p: u64) -> Result<Vec<usize>> {
    let f = PrimeField(p);
    let d = rep.dim();
    let rows: Vec<Vec<u64>> = rep.arrows().iter().flat_map(to_rows).collect();
    let soc = linalg::kernel(&ModP(p), &rows, d);
    let mut out = Vec::new();
    for v in rep.spec().vertices() {
        let images: Vec<Vec<u64>> = soc
            .iter()
            .map(|x| {
                let col = Matrix::from_rows(x.iter().map(|&c| vec![c]).collect());
                rep.vertex(v).mul(&f, &col).map(|m| m.entries().to_vec())
            })
            .collect::<Result<_>>()?;
        out.push(linalg::rank(&ModP(p), &images, d));
    }
    Ok(out)
}

/// Socles of the indecomposable projectives, from their matrix representations.
///
/// `soc(P_j)` should be `S_{j-1+ℓ'}`, and every socle equals its top exactly
/// when `ℓ' ≡ 1 (mod e)`.
pub fn projective_check(spec: NakayamaSpec, p: u64) -> Result<Report> {
    let f = PrimeField(p);
    let mut report = Report::new();
    let mut all_equal_top = true;
    for j in spec.vertices() {
        let pj = UniserialModule::projective(spec, j)?;
        let pattern = socle_pattern(&uniserial_rep(&f, &pj), p)?;
        let expected = spec.vertex((j + spec.ell_prime()) as i64 - 1);
        let found: Vec<usize> = spec.vertices().filter(|&v| pattern[v - 1] > 0).collect();
        let simple = pattern.iter().sum::<usize>() == 1;
        report.push(
            format!("socle P{j}"),
            simple && found == [expected],
            format!("found {found:?} with multiplicities {pattern:?}, expected S{expected}"),
        );
        all_equal_top &= found == [j];
    }
    let symmetric = spec.ell_prime() % spec.e() == 1 % spec.e();
    report.push(
        "socle equals top iff l' = 1 mod e",
        all_equal_top == symmetric,
        format!("l' = {}, socles equal tops: {all_equal_top}", spec.ell_prime()),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: usize, ell: usize, top: usize, len: usize) -> UniserialModule {
        UniserialModule::new(NakayamaSpec::new(e, ell).unwrap(), top, len).unwrap()
    }

    #[test]
    fn hom_examples() {
        let v = m(2, 5, 1, 2);
        assert_eq!(hom_dim(&v.syzygy().unwrap(), &v, 2).unwrap(), 1);
        assert_eq!(hom_dim(&m(3, 4, 1, 1), &m(3, 4, 2, 1), 2).unwrap(), 0);
        assert_eq!(hom_dim(&m(2, 7, 2, 5), &m(2, 7, 2, 5), 3).unwrap(), 3);
    }

    #[test]
    fn hom_grid_agrees() {
        for e in 1..=3 {
            for ell in 2..=6 {
                let s = NakayamaSpec::new(e, ell).unwrap();
                for (a, p) in (1..=e).flat_map(|a| (1..=ell).map(move |p| (a, p))) {
                    for (b, q) in (1..=e).flat_map(|b| (1..=ell).map(move |q| (b, q))) {
                        let u = UniserialModule::new(s, a, p).unwrap();
                        let w = UniserialModule::new(s, b, q).unwrap();
                        hom_dim(&u, &w, 2).unwrap();
                    }
                }
            }
        }
    }

    #[test]
    fn ext_examples() {
        assert_eq!(ext1_dim(&m(2, 5, 1, 2), 2).unwrap(), 1);
        assert_eq!(ext1_dim(&m(3, 7, 1, 2), 2).unwrap(), 0);
        assert_eq!(ext1_dim(&m(1, 7, 1, 3), 2).unwrap(), 3);
        assert_eq!(ext1_dim(&m(2, 9, 2, 7), 3).unwrap(), 1);
    }

    #[test]
    fn kernel_syzygy_matches() {
        assert_eq!(syzygy_by_kernel(&m(2, 5, 1, 2), 2).unwrap(), m(2, 5, 1, 3));
        for e in 1..=3 {
            for ell in 2..=7 {
                let s = NakayamaSpec::new(e, ell).unwrap();
                for top in 1..=e {
                    for len in 1..ell {
                        let v = UniserialModule::new(s, top, len).unwrap();
                        assert_eq!(syzygy_by_kernel(&v, 2).unwrap(), v.syzygy().unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn projective_socles() {
        let r = projective_check(NakayamaSpec::new(3, 7).unwrap(), 2).unwrap();
        assert!(r.passed(), "{r}");
        let s = NakayamaSpec::new(2, 4).unwrap();
        let pattern = socle_pattern(&uniserial_rep(&PrimeField(2), &UniserialModule::projective(s, 1).unwrap()), 2).unwrap();
        assert_eq!(pattern, vec![0, 1]);
        assert!(projective_check(s, 2).unwrap().passed());
        assert!(projective_check(NakayamaSpec::new(1, 5).unwrap(), 2).unwrap().passed());
    }
}
