use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

/// A monomial `t1^e1 * ... * tn^en`.
///
/// The derived order compares exponents starting from the last variable, so
/// that `t2 > t1^k` for every `k`. Graded comparisons go through
/// [`Grading::cmp`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n].into_boxed_slice())
    }

    /// The variable `t_j`, with `j` counted from 1.
    pub fn var(n: usize, j: usize) -> Self {
        assert!(j >= 1 && j <= n, "variable index {j} out of range 1..={n}");
        let mut e = vec![0; n];
        e[j - 1] = 1;
        Monomial(e.into_boxed_slice())
    }

    pub fn from_exponents(e: impl Into<Vec<u32>>) -> Self {
        Monomial(e.into().into_boxed_slice())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of `t_j` (1-based).
    pub fn exponent(&self, j: usize) -> u32 {
        self.0[j - 1]
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// Multiplies by `t_j` (1-based).
    pub fn times_var(&self, j: usize) -> Monomial {
        let mut e = self.0.clone();
        e[j - 1] += 1;
        Monomial(e)
    }

    /// Divides by `t_j` if possible.
    pub fn div_var(&self, j: usize) -> Option<Monomial> {
        if self.0[j - 1] == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[j - 1] -= 1;
        Some(Monomial(e))
    }

    /// Smallest `j` with `t_j` dividing this monomial.
    pub fn first_var(&self) -> Option<usize> {
        self.0.iter().position(|&e| e > 0).map(|k| k + 1)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (k, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "t{}", k + 1)?;
            } else {
                write!(f, "t{}^{}", k + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Positive integer weights on the variables. The grade of a monomial is the
/// weighted sum of its exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Grading {
    weights: Vec<u32>,
}

impl Grading {
    /// All weights 1: grade is total degree.
    pub fn standard(n: usize) -> Self {
        Grading { weights: vec![1; n] }
    }

    /// Weight of `t_j` is `j`. The ideals `J_n(m)` are homogeneous for this grading.
    pub fn weighted(n: usize) -> Self {
        Grading { weights: (1..=n as u32).collect() }
    }

    pub fn from_weights(weights: Vec<u32>) -> Self {
        assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
        Grading { weights }
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, j: usize) -> u32 {
        self.weights[j - 1]
    }

    pub fn max_weight(&self) -> u32 {
        self.weights.iter().copied().max().unwrap_or(1)
    }

    pub fn is_standard(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    pub fn grade(&self, m: &Monomial) -> u32 {
        m.exponents().iter().zip(&self.weights).map(|(e, w)| e * w).sum()
    }

    /// Grade first, then the monomial order.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.grade(a).cmp(&self.grade(b)).then_with(|| a.cmp(b))
    }

    /// All monomials of exactly the given grade, in increasing monomial order.
    pub fn monomials_of_grade(&self, grade: u32) -> Vec<Monomial> {
        let n = self.weights.len();
        let mut out = Vec::new();
        let mut e = vec![0u32; n];
        fn rec(g: &Grading, k: usize, left: u32, e: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if k == 0 {
                if left == 0 {
                    out.push(Monomial::from_exponents(e.clone()));
                }
                return;
            }
            let w = g.weights[k - 1];
            if k == 1 {
                if left % w == 0 {
                    e[0] = left / w;
                    out.push(Monomial::from_exponents(e.clone()));
                    e[0] = 0;
                }
                return;
            }
            for x in 0..=left / w {
                e[k - 1] = x;
                rec(g, k - 1, left - x * w, e, out);
            }
            e[k - 1] = 0;
        }
        if n == 0 {
            if grade == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(self, n, grade, &mut e, &mut out);
        out.sort();
        out
    }
}
