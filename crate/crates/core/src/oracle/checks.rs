use super::enumerate::{arrows_from_key, base_over, Frame, OracleCaps};
use super::orbits::{deformation_classes, union_find_classes, ClassSummary};
use crate::deformation::DeformationPresentation;
use crate::error::{Error, Result};
use crate::matrix::{Matrix, PrimeField};
use crate::nakayama::rep::{uniserial_rep, MatrixRep};
use crate::nakayama::{ext1_dim, UniserialModule};
use crate::report::Report;
use crate::ring::artin::{ArtinTestRing, Elem, SmallExtension};
use crate::ring::linalg::{kernel, rank, ModP};

/// Below this many candidates the affine orbit count is cross-checked by
/// union-find.
const CROSS_CHECK_LIMIT: u64 = 1 << 14;

/// The chain-basis representation of `v` over `F_p`.
pub fn base_rep(v: &UniserialModule, p: u64) -> MatrixRep<u64> {
    uniserial_rep(&PrimeField(p), v)
}

/// `|Def(V, R)|` by brute force.
pub fn def_classes(v: &UniserialModule, ring: &ArtinTestRing, caps: OracleCaps) -> Result<ClassSummary> {
    deformation_classes(&base_rep(v, ring.characteristic()), ring, caps)
}

/// The lift classes over `ring` are in bijection with `Hom(R(V), ring)`.
pub fn check_representability(
    v: &UniserialModule,
    pres: &DeformationPresentation,
    ring: &ArtinTestRing,
    caps: OracleCaps,
) -> Result<Report> {
    let base = base_rep(v, ring.characteristic());
    let classes = deformation_classes(&base, ring, caps)?;
    let homs = pres.count_homs(ring, caps.candidates)?;
    let mut report = Report::new();
    report.push(
        "lift classes equal local homomorphisms",
        classes.count() == homs,
        format!("{} classes of lifts, {homs} homomorphisms into {}", classes.count(), ring.name()),
    );
    if classes.visited <= CROSS_CHECK_LIMIT && classes.mode != super::orbits::OrbitMode::UnionFind {
        let uf = union_find_classes(&base, ring, caps)?;
        report.push(
            "orbit methods agree",
            uf.classes == classes.classes,
            format!("union-find finds {} classes", uf.count()),
        );
    }
    Ok(report)
}

/// `log_p |Def(V, F_p[ε])|`.
pub fn tangent_dimension(v: &UniserialModule, p: u64, caps: OracleCaps) -> Result<usize> {
    let ring = ArtinTestRing::dual_numbers(p)?;
    let count = def_classes(v, &ring, caps)?.count();
    let mut rest = count;
    let mut dim = 0;
    while rest > 1 && rest % p == 0 {
        rest /= p;
        dim += 1;
    }
    if rest != 1 {
        return Err(Error::Internal(format!("{count} first-order classes is not a power of {p}")));
    }
    Ok(dim)
}

/// The brute-force tangent dimension agrees with `dim Ext^1(V, V)`.
pub fn tangent_report(v: &UniserialModule, p: u64, caps: OracleCaps) -> Result<Report> {
    let t = tangent_dimension(v, p, caps)?;
    let ext = ext1_dim(v, p)?;
    let mut report = Report::new();
    report.push(
        "tangent dimension equals dim Ext^1",
        t == ext,
        format!("log_{p} |Def(V, F{p}[eps])| = {t}, dim Ext^1(V,V) = {ext}"),
    );
    Ok(report)
}

/// Basis over `F_p` of `{Y in M_d(m) : Y τ(g) = τ(g) Y for all g}`, the Lie
/// algebra of `Z(τ) ∩ G_R`. Coordinates are `(row, col, k)` with `k` running
/// over the basis of `m`.
pub fn centralizer_kernel(ring: &ArtinTestRing, gens: &[Matrix<Elem>]) -> Vec<Vec<u64>> {
    let d = gens.first().map(|g| g.rows()).unwrap_or(0);
    let rk = ring.rank();
    let mr = rk - 1;
    let ncols = d * d * mr;
    let mut rows = Vec::new();
    for g in gens {
        // Row index (r, c, coordinate t) of [Y, g].
        let mut block = vec![vec![0u64; ncols]; d * d * rk];
        for a in 0..d {
            for b in 0..d {
                for k in 1..rk {
                    let col = (a * d + b) * mr + (k - 1);
                    let y = ring.basis_element(k);
                    // (Y g)_{a c} gains y g_{b c}; (g Y)_{r b} gains g_{r a} y.
                    for c in 0..d {
                        let coords = ring.coords(ring.mul(y, *g.get(b, c)));
                        for (t, x) in coords.into_iter().enumerate() {
                            let row = &mut block[(a * d + c) * rk + t][col];
                            *row = (*row + x) % ring.characteristic();
                        }
                    }
                    for r in 0..d {
                        let coords = ring.coords(ring.mul(*g.get(r, a), y));
                        for (t, x) in coords.into_iter().enumerate() {
                            let p = ring.characteristic();
                            let row = &mut block[(r * d + b) * rk + t][col];
                            *row = (*row + p - x) % p;
                        }
                    }
                }
            }
        }
        rows.extend(block.into_iter().filter(|r| r.iter().any(|&x| x != 0)));
    }
    kernel(&ModP(ring.characteristic()), &rows, ncols)
}

fn kernel_element(ring: &ArtinTestRing, d: usize, v: &[u64]) -> Vec<Elem> {
    let mr = ring.rank() - 1;
    (0..d * d)
        .map(|e| {
            let mut full = vec![0u64; ring.rank()];
            full[1..].copy_from_slice(&v[e * mr..(e + 1) * mr]);
            ring.encode(&full)
        })
        .collect()
}

fn kernel_coords(ring: &ArtinTestRing, y: &[Elem]) -> Vec<u64> {
    y.iter().flat_map(|&x| ring.max_ideal_coords(x)).collect()
}

/// For every lift `τ_1` over `A_1` up to strict equivalence, the map
/// `Z(τ_1) ∩ G_{A_1} -> Z(τ_0) ∩ G_{A_0}` is onto.
///
/// Both groups are `I + K` with `K` an `F_p`-space because `Y` commutes with
/// every `τ(g)` exactly when `I + Y` does; the map is onto when it is onto
/// on `K`.
pub fn check_centralizer_lifting(v: &UniserialModule, ext: &SmallExtension, caps: OracleCaps) -> Result<Report> {
    let (a1, a0) = (&ext.upper, &ext.lower);
    let p = a1.characteristic();
    let base = base_rep(v, p);
    let frame = Frame::of(&base)?;
    let over1 = base_over(&base, a1);
    let classes = deformation_classes(&base, a1, caps)?;
    let d = base.dim();
    let f = ModP(p);
    let mut failures = Vec::new();
    for class in &classes.classes {
        let arrows1 = arrows_from_key(&over1, &frame, &class.representative);
        let mut gens1: Vec<Matrix<Elem>> = over1.vertices().to_vec();
        gens1.extend(arrows1.iter().cloned());
        let gens0: Vec<Matrix<Elem>> = gens1.iter().map(|m| m.map(|&x| ext.apply(x))).collect();
        let k1 = centralizer_kernel(a1, &gens1);
        let k0 = centralizer_kernel(a0, &gens0);
        let images: Vec<Vec<u64>> = k1
            .iter()
            .map(|y| {
                let y1 = kernel_element(a1, d, y);
                let y0: Vec<Elem> = y1.iter().map(|&x| ext.apply(x)).collect();
                kernel_coords(a0, &y0)
            })
            .collect();
        let ncols = d * d * (a0.rank() - 1);
        let image_rank = rank(&f, &images, ncols);
        let mut joint = k0.clone();
        joint.extend(images.iter().cloned());
        let contained = rank(&f, &joint, ncols) == k0.len();
        if image_rank != k0.len() || !contained {
            failures.push(format!(
                "tau_1 = {:?}: image rank {image_rank}, target dimension {}",
                class.representative.iter().map(|&x| a1.format(x)).collect::<Vec<_>>(),
                k0.len()
            ));
        }
    }
    let mut report = Report::new();
    report.push(
        format!("centralizer lifting {}", ext.name()),
        failures.is_empty(),
        if failures.is_empty() {
            format!("{} lift classes, every centralizer map onto", classes.count())
        } else {
            failures.into_iter().take(3).collect::<Vec<_>>().join("; ")
        },
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deformation::udr_presentation;
    use crate::nakayama::NakayamaSpec;
    use crate::ring::CoefficientMode;

    fn module(e: usize, ell: usize, top: usize, len: usize) -> UniserialModule {
        UniserialModule::new(NakayamaSpec::new(e, ell).unwrap(), top, len).unwrap()
    }

    #[test]
    fn representability_examples() {
        let caps = OracleCaps::default();
        let v = module(1, 3, 1, 1);
        let pres = udr_presentation(&v, CoefficientMode::Prime(2)).unwrap();
        for (name, expect) in [("dual-numbers", 2), ("u3", 4)] {
            let r = ArtinTestRing::by_name(name, 2).unwrap();
            assert_eq!(def_classes(&v, &r, caps).unwrap().count(), expect);
            let rep = check_representability(&v, &pres, &r, caps).unwrap();
            assert!(rep.passed(), "{rep}");
        }
        let z = module(3, 7, 2, 2);
        let pres = udr_presentation(&z, CoefficientMode::Prime(2)).unwrap();
        for name in ["dual-numbers", "u3", "xy2"] {
            let r = ArtinTestRing::by_name(name, 2).unwrap();
            assert_eq!(def_classes(&z, &r, caps).unwrap().count(), 1);
            assert!(check_representability(&z, &pres, &r, caps).unwrap().passed());
        }
    }

    #[test]
    fn tangent_examples() {
        let caps = OracleCaps::default();
        assert_eq!(tangent_dimension(&module(2, 5, 1, 2), 2, caps).unwrap(), 1);
        assert_eq!(tangent_dimension(&module(3, 7, 1, 2), 2, caps).unwrap(), 0);
        assert_eq!(tangent_dimension(&module(1, 4, 1, 2), 2, caps).unwrap(), 2);
        assert!(tangent_report(&module(1, 7, 1, 3), 3, caps).unwrap().passed());
    }

    #[test]
    fn centralizer_lifting_examples() {
        let caps = OracleCaps::default();
        for ext in SmallExtension::catalog(2).unwrap() {
            for v in [module(1, 3, 1, 1), module(1, 4, 1, 2), module(2, 5, 1, 2)] {
                let r = check_centralizer_lifting(&v, &ext, caps).unwrap();
                assert!(r.passed(), "{}: {r}", ext.name());
            }
        }
    }

    #[test]
    fn full_centralizer_of_a_scalar_rep() {
        // One-dimensional: every Y in m commutes.
        let r = ArtinTestRing::truncated_polynomial(2, 3, "u").unwrap();
        let g = vec![Matrix::from_rows(vec![vec![1]]), Matrix::from_rows(vec![vec![r.basis_element(1)]])];
        assert_eq!(centralizer_kernel(&r, &g).len(), 2);
    }
}
