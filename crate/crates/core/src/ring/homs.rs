//! Counting local homomorphisms `k[[t1..tn]]/J -> R` into finite test rings.

use super::artin::{ArtinTestRing, Elem};
use super::quotient::IdealBasis;
use super::TruncatedPolynomial;
use crate::error::{Error, Result};

/// Default cap on the number of assignments tried.
pub const DEFAULT_HOM_CAP: u64 = 1 << 24;

/// Evaluates `p` at `t_j -> values[j-1]` inside `r`.
pub fn evaluate(p: &TruncatedPolynomial, r: &ArtinTestRing, values: &[Elem]) -> Result<Elem> {
    let mode = p.mode();
    let mut acc = r.zero();
    for (m, c) in p.terms() {
        let mut term = r.scalar(mode.residue(c, r.characteristic())?);
        for (j, &e) in m.exponents().iter().enumerate() {
            for _ in 0..e {
                term = r.mul(term, values[j]);
                if term == 0 {
                    break;
                }
            }
        }
        acc = r.add(acc, term);
    }
    Ok(acc)
}

/// Number of assignments `t_j -> m_R` killing every generator of `j`. Each
/// such assignment is exactly one local homomorphism out of the quotient.
pub fn count_homs(j: &IdealBasis, r: &ArtinTestRing, cap: u64) -> Result<u64> {
    let n = j.nvars();
    let m = r.max_ideal_elements();
    let total = (m.len() as u64)
        .checked_pow(n as u32)
        .filter(|&t| t <= cap)
        .ok_or_else(|| Error::cap("hom assignments", format!("{}^{n}", m.len()), cap))?;
    let mut count = 0;
    let mut values = vec![0 as Elem; n];
    for code in 0..total {
        let mut c = code;
        for v in values.iter_mut() {
            *v = m[(c % m.len() as u64) as usize];
            c /= m.len() as u64;
        }
        let mut ok = true;
        for g in j.generators() {
            if evaluate(g, r, &values)? != 0 {
                ok = false;
                break;
            }
        }
        if ok {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{CoefficientMode, PolyContext};

    fn power_ideal(k: u32) -> IdealBasis {
        let ctx = PolyContext::new(1, 16, CoefficientMode::Integer);
        IdealBasis::new(&ctx, vec![TruncatedPolynomial::from_int_terms(&ctx, &[(&[k], 1)])]).unwrap()
    }

    #[test]
    fn examples() {
        let dual = ArtinTestRing::dual_numbers(2).unwrap();
        assert_eq!(count_homs(&power_ideal(2), &dual, DEFAULT_HOM_CAP).unwrap(), 2);
        let u3 = ArtinTestRing::truncated_polynomial(2, 3, "u").unwrap();
        assert_eq!(count_homs(&power_ideal(3), &u3, DEFAULT_HOM_CAP).unwrap(), 4);
        assert_eq!(count_homs(&power_ideal(2), &u3, DEFAULT_HOM_CAP).unwrap(), 2);
        let k = PolyContext::new(0, 1, CoefficientMode::Integer);
        assert_eq!(count_homs(&IdealBasis::zero(&k), &u3, DEFAULT_HOM_CAP).unwrap(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        let u3 = ArtinTestRing::truncated_polynomial(2, 3, "u").unwrap();
        assert!(matches!(count_homs(&power_ideal(3), &u3, 3), Err(Error::ResourceCap { .. })));
    }
}
