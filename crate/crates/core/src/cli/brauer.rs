use crate::deformation::udr_presentation;
use crate::error::{Error, Result};
use crate::nakayama::{NakayamaSpec, UniserialModule};
use crate::report::Report;
use crate::ring::CoefficientMode;
use serde::{Deserialize, Serialize};

/// A Brauer tree with `e` edges and exceptional multiplicity `m`. Only these
/// two numbers matter for deformation rings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrauerTreeSpec {
    pub e: usize,
    pub m: usize,
}

impl BrauerTreeSpec {
    pub fn new(e: usize, m: usize) -> Result<Self> {
        if e == 0 || m == 0 {
            return Err(Error::Domain(format!("Brauer tree needs e >= 1 and m >= 1, got e = {e}, m = {m}")));
        }
        Ok(BrauerTreeSpec { e, m })
    }

    /// The stably equivalent Nakayama algebra `N(e, me + 1)`.
    pub fn nakayama(&self) -> NakayamaSpec {
        NakayamaSpec::new(self.e, self.m * self.e + 1).expect("me + 1 >= 2")
    }

    /// Largest valid distance: `ℓ_V = d_V + 1 <= ⌊(me + 1)/2⌋`.
    pub fn max_distance(&self) -> usize {
        (self.m * self.e + 1) / 2 - 1
    }

    /// A module at distance `d_V`: top `S_1`, length `d_V + 1`.
    pub fn module_at(&self, d_v: usize) -> Result<UniserialModule> {
        self.check_distance(d_v)?;
        UniserialModule::new(self.nakayama(), 1, d_v + 1)
    }

    fn check_distance(&self, d_v: usize) -> Result<()> {
        if d_v > self.max_distance() {
            return Err(Error::Domain(format!(
                "distance {d_v} is out of range for e = {}, m = {} (at most {})",
                self.e,
                self.m,
                self.max_distance()
            )));
        }
        Ok(())
    }
}

/// `(n, i, m_V)` for a module at distance `d_V` from the boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrauerMv {
    pub n: usize,
    pub i: usize,
    /// `None` when `n = 0` and the ring is `k`.
    pub m_v: Option<usize>,
}

/// `ℓ_V = ne + i` and `m_V = m + 1` if `e = 1`, `m` if `i ∈ {0, 1}`,
/// `m - 1` otherwise.
pub fn brauer_mv(e: usize, m: usize, d_v: usize) -> Result<BrauerMv> {
    let tree = BrauerTreeSpec::new(e, m)?;
    tree.check_distance(d_v)?;
    let ell_v = d_v + 1;
    let (n, i) = (ell_v / e, ell_v % e);
    let m_v = match (n, e, i) {
        (0, _, _) => None,
        (_, 1, _) => Some(m + 1),
        (_, _, 0 | 1) => Some(m),
        _ => Some(m - 1),
    };
    Ok(BrauerMv { n, i, m_v })
}

fn show(m: Option<usize>) -> String {
    m.map(|m| m.to_string()).unwrap_or_else(|| "-".into())
}

/// The three-branch `m_V` rule against the general presentation on `N(e, me + 1)`.
pub fn brauer_check(e: usize, m: usize, d_v: usize) -> Result<Report> {
    let b = brauer_mv(e, m, d_v)?;
    let tree = BrauerTreeSpec::new(e, m)?;
    let pres = udr_presentation(&tree.module_at(d_v)?, CoefficientMode::Integer)?;
    // With n = 0 the ring is k and m_V plays no role.
    let pres_m_v = if pres.n == 0 { None } else { pres.m_v };
    let mut report = Report::new();
    report.push(
        "Brauer m_V matches the presentation",
        b.n == pres.n && b.m_v == pres_m_v,
        format!("rule (n, m_V) = ({}, {}), presentation ({}, {})", b.n, show(b.m_v), pres.n, show(pres_m_v)),
    );
    let spec = tree.nakayama();
    report.push(
        "Brauer algebra parameters",
        spec.mu() == m && spec.ell_prime() == 1 || e == 1 && spec.mu() == m + 1 && spec.ell_prime() == 0,
        format!("mu = {}, l' = {}", spec.mu(), spec.ell_prime()),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m_v_rule_examples() {
        assert_eq!(brauer_mv(1, 2, 0).unwrap(), BrauerMv { n: 1, i: 0, m_v: Some(3) });
        assert_eq!(brauer_mv(3, 1, 0).unwrap(), BrauerMv { n: 0, i: 1, m_v: None });
        assert_eq!(brauer_mv(2, 2, 1).unwrap(), BrauerMv { n: 1, i: 0, m_v: Some(2) });
        assert!(brauer_mv(2, 2, 2).is_err());
    }

    #[test]
    fn m_v_rule_agrees_everywhere() {
        for e in 1..=4 {
            for m in 1..=3 {
                let tree = BrauerTreeSpec::new(e, m).unwrap();
                for d in 0..=tree.max_distance() {
                    let r = brauer_check(e, m, d).unwrap();
                    assert!(r.passed(), "e={e} m={m} d={d}\n{r}");
                }
            }
        }
    }
}
