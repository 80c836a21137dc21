use crate::error::{Error, Result};
use crate::nakayama::{NakayamaSpec, UniserialModule};
use crate::ring::artin::ArtinTestRing;
use crate::ring::homs::count_homs;
use crate::ring::{quotient_dimension_stabilized, CoefficientMode, IdealBasis, TruncatedPolynomial};
use crate::structured::{j_ideal, presentation_context, PRESENTATION_TRUNCATION};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// `m_V`: `μ` when `0 <= i <= ℓ'`, else `μ - 1`.
pub fn m_v(mu: usize, ell_prime: usize, i: usize) -> usize {
    if i <= ell_prime {
        mu
    } else {
        mu - 1
    }
}

/// How a module was reduced to the normalized position, plus its invariants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Provenance {
    pub e: usize,
    pub ell: usize,
    pub mu: usize,
    pub ell_prime: usize,
    pub ell_v: usize,
    pub i: usize,
    pub d_v: Option<usize>,
    pub applied_omega: bool,
    pub rotation: usize,
    pub original_top: usize,
    pub original_len: usize,
}

/// `k[[t_1..t_n]] / J_n(m_V)` together with its computed `k`-dimension.
#[derive(Clone, Debug)]
pub struct DeformationPresentation {
    pub n: usize,
    /// `None` for projective modules.
    pub m_v: Option<usize>,
    pub ideal: IdealBasis,
    pub k_dimension: usize,
    pub provenance: Provenance,
    pub projective: bool,
    /// The normalized module `V_{n,i}` (the input itself when projective).
    pub normalized: UniserialModule,
}

impl DeformationPresentation {
    pub fn generators(&self) -> &[TruncatedPolynomial] {
        self.ideal.generators()
    }

    pub fn generator_strings(&self) -> Vec<String> {
        self.generators().iter().map(|g| g.to_string()).collect()
    }

    /// `k[[t_1, ..., t_n]]/(...)`, or `k` when `n = 0`.
    pub fn ring_string(&self) -> String {
        if self.n == 0 {
            return "k".into();
        }
        let vars: Vec<String> = (1..=self.n).map(|j| format!("t{j}")).collect();
        format!("k[[{}]]/({})", vars.join(","), self.generator_strings().join(", "))
    }

    /// Number of local homomorphisms from the presented ring into `r`.
    pub fn count_homs(&self, r: &ArtinTestRing, cap: u64) -> Result<u64> {
        count_homs(&self.ideal, r, cap)
    }

    /// Whether two presentations emit identical data.
    pub fn same_presentation(&self, other: &Self) -> bool {
        self.n == other.n
            && self.m_v == other.m_v
            && self.k_dimension == other.k_dimension
            && self.generator_strings() == other.generator_strings()
    }
}

/// Sorts generators by descending leading term; in a field mode also makes
/// every leading coefficient 1.
pub fn canonicalize(ideal: &IdealBasis) -> Result<IdealBasis> {
    let mode = ideal.context().mode();
    let mut gens: Vec<TruncatedPolynomial> = ideal.generators().to_vec();
    if mode.is_field() {
        gens = gens
            .into_iter()
            .map(|g| {
                let lead = g.leading_term().map(|(_, c)| c.clone()).expect("nonzero generator");
                Ok(g.scale(&mode.inv(&lead)?))
            })
            .collect::<Result<_>>()?;
    }
    gens.sort_by(|a, b| match b.cmp_leading(a) {
        Ordering::Equal => b.to_string().cmp(&a.to_string()),
        o => o,
    });
    IdealBasis::new(ideal.context(), gens)
}

/// `k`-dimension of `k[[t]]/J` over the field of `mode` (over `Q` for the
/// integer mode).
pub fn stabilized_dimension(ideal: &IdealBasis) -> Result<usize> {
    if ideal.nvars() == 0 {
        return Ok(1);
    }
    let mode = match ideal.context().mode() {
        CoefficientMode::Integer => CoefficientMode::Rational,
        m => m,
    };
    let ctx = ideal.context().derive(ideal.context().truncation(), mode);
    let field_ideal = ideal.convert(&ctx)?;
    let n = ideal.nvars() as u32;
    let dmax = PRESENTATION_TRUNCATION;
    let d0 = (n + 2).min(dmax - 1);
    Ok(quotient_dimension_stabilized(&field_ideal, d0, dmax)?.0)
}

/// The universal deformation ring of `v`, with generators in `mode`.
pub fn udr_presentation(v: &UniserialModule, mode: CoefficientMode) -> Result<DeformationPresentation> {
    let mode = mode.validate()?;
    let spec: NakayamaSpec = v.spec();
    let mut provenance = Provenance {
        e: spec.e(),
        ell: spec.ell(),
        mu: spec.mu(),
        ell_prime: spec.ell_prime(),
        ell_v: v.ell_v(),
        i: v.i(),
        d_v: None,
        applied_omega: false,
        rotation: 0,
        original_top: v.top(),
        original_len: v.len(),
    };
    if v.is_projective() {
        let ctx = presentation_context(0, mode);
        return Ok(DeformationPresentation {
            n: 0,
            m_v: None,
            ideal: IdealBasis::zero(&ctx),
            k_dimension: 1,
            provenance,
            projective: true,
            normalized: *v,
        });
    }
    let norm = v.normalize()?;
    provenance.applied_omega = norm.applied_omega;
    provenance.rotation = norm.rotation;
    provenance.d_v = Some(v.ar_distance()?);
    let (n, i) = (norm.module.n(), norm.module.i());
    let m = m_v(spec.mu(), spec.ell_prime(), i);
    let ctx = presentation_context(n, mode);
    let ideal = if n == 0 { IdealBasis::zero(&ctx) } else { canonicalize(&j_ideal(&ctx, m)?)? };
    if n >= 1 && m < 2 {
        return Err(Error::Internal(format!("m_V = {m} below 2 for n = {n}")));
    }
    let k_dimension = stabilized_dimension(&ideal)?;
    Ok(DeformationPresentation {
        n,
        m_v: Some(m),
        ideal,
        k_dimension,
        provenance,
        projective: false,
        normalized: norm.module,
    })
}
