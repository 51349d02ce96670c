//! Euler characteristics of moduli of abelian varieties with a polarization
//! of type δ = (d_1, ..., d_g), d_i | d_{i+1}.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::eulerhodge::chi_product;
use crate::exactnum::Rational;

/// A divisibility chain d_1 | d_2 | ... | d_g of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolarizationType {
    degrees: Vec<u64>,
}

impl PolarizationType {
    pub fn new(degrees: &[i64]) -> Result<Self> {
        validate_type(degrees)
    }

    pub fn principal(g: usize) -> Self {
        PolarizationType {
            degrees: vec![1; g],
        }
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn genus(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_principal(&self) -> bool {
        self.degrees.iter().all(|&d| d == 1)
    }

    /// Order of the kernel (Z/d_1 × ... × Z/d_g)^2 of the polarization.
    pub fn kernel_order(&self) -> u128 {
        self.degrees
            .iter()
            .map(|&d| (d as u128) * (d as u128))
            .product()
    }
}

impl fmt::Display for PolarizationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.degrees.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for PolarizationType {
    type Err = Error;

    /// Comma-separated integers, e.g. `1,2,4`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::EmptyType);
        }
        let degrees = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad polarization entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        validate_type(&degrees)
    }
}

/// Checks positivity and the divisibility chain, naming the first bad pair.
pub fn validate_type(degrees: &[i64]) -> Result<PolarizationType> {
    if degrees.is_empty() {
        return Err(Error::EmptyType);
    }
    if let Some((i, &d)) = degrees.iter().enumerate().find(|(_, &d)| d <= 0) {
        return Err(Error::NonPositiveEntry {
            index: i + 1,
            value: d,
        });
    }
    let degrees: Vec<u64> = degrees.iter().map(|&d| d as u64).collect();
    for (i, w) in degrees.windows(2).enumerate() {
        if w[1] % w[0] != 0 {
            return Err(Error::Divisibility {
                index: i + 1,
                left: w[0],
                right: w[1],
            });
        }
    }
    Ok(PolarizationType { degrees })
}

/// Distinct prime divisors by trial division on a 2·3 wheel.
pub fn distinct_primes(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for p in [2u64, 3] {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
    }
    let mut f = 5u64;
    let mut step = 2u64;
    while f * f <= n {
        if n.is_multiple_of(f) {
            out.push(f);
            while n.is_multiple_of(f) {
                n /= f;
            }
        }
        f += step;
        step = 6 - step;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Exponent of d_i (1-based) in the leading monomial: 2g-2 for d_g down to
/// -(2g-2) for d_1 in steps of 4.
pub fn leading_exponent(g: usize, i: usize) -> i64 {
    4 * i as i64 - 2 * g as i64 - 2
}

/// deg(φ_δ)/deg(π_δ) = prod_i d_i^{4i-2g-2}
///   · prod_{i<j} prod_{p | d_j/d_i} (1 - p^{-2(j-i+1)}) / (1 - p^{-2(j-i)}).
pub fn degree_ratio(delta: &PolarizationType) -> Rational {
    let g = delta.genus();
    let d = delta.degrees();
    let mut ratio = Rational::one();
    for (i, &di) in d.iter().enumerate() {
        ratio *= &Rational::from_int(di).pow(leading_exponent(g, i + 1) as i32);
    }
    for i in 0..g {
        for j in i + 1..g {
            let gap = (j - i) as i32;
            for p in distinct_primes(d[j] / d[i]) {
                let p = Rational::from_int(p);
                let num = Rational::one() - p.pow(-2 * (gap + 1));
                let den = Rational::one() - p.pow(-2 * gap);
                ratio *= &(num / den);
            }
        }
    }
    ratio
}

/// χ(A_{g,δ}) = degree_ratio(δ) · χ(A_g).
pub fn chi_level(delta: &PolarizationType) -> Result<Rational> {
    Ok(degree_ratio(delta) * chi_product(delta.genus())?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(d: &[i64]) -> PolarizationType {
        PolarizationType::new(d).unwrap()
    }

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn validation() {
        assert!(PolarizationType::new(&[1, 2, 4]).is_ok());
        assert!(t(&[1, 1, 1]).is_principal());
        assert_eq!(
            PolarizationType::new(&[1, 3, 2]),
            Err(Error::Divisibility { index: 2, left: 3, right: 2 })
        );
        assert_eq!(PolarizationType::new(&[]), Err(Error::EmptyType));
        assert_eq!(
            PolarizationType::new(&[1, 0]),
            Err(Error::NonPositiveEntry { index: 2, value: 0 })
        );
        let err = "2,3".parse::<PolarizationType>().unwrap_err();
        assert_eq!(err.to_string(), "2 does not divide 3 (pair d_1, d_2)");
        assert_eq!("1, 2,4".parse::<PolarizationType>().unwrap(), t(&[1, 2, 4]));
        assert!("1,x".parse::<PolarizationType>().is_err());
    }

    #[test]
    fn exponent_endpoints() {
        for g in 1..=8 {
            assert_eq!(leading_exponent(g, g), 2 * g as i64 - 2);
            assert_eq!(leading_exponent(g, 1), -(2 * g as i64) + 2);
            let total: i64 = (1..=g).map(|i| leading_exponent(g, i)).sum();
            assert_eq!(total, 0);
        }
        assert_eq!(leading_exponent(4, 3), 2 * 4 - 6);
    }

    #[test]
    fn primes() {
        assert_eq!(distinct_primes(1), Vec::<u64>::new());
        assert_eq!(distinct_primes(12), vec![2, 3]);
        assert_eq!(distinct_primes(49), vec![7]);
        assert_eq!(distinct_primes(2 * 5 * 5 * 11 * 97), vec![2, 5, 11, 97]);
        assert_eq!(distinct_primes(1_000_003), vec![1_000_003]);
    }

    #[test]
    fn ratio_examples() {
        assert_eq!(degree_ratio(&t(&[1, 2])), q("5"));
        assert_eq!(degree_ratio(&t(&[1, 1, 2])), q("21"));
        assert_eq!(degree_ratio(&t(&[3, 3, 3])), Rational::one());
        for g in 1..=12 {
            assert_eq!(degree_ratio(&PolarizationType::principal(g)), Rational::one());
        }
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi_level(&t(&[1, 1])).unwrap(), q("-1/1440"));
        assert_eq!(chi_level(&t(&[1, 2])).unwrap(), q("-1/288"));
        assert_eq!(chi_level(&t(&[1, 1, 2])).unwrap(), q("1/17280"));
        assert_eq!(q("21/362880"), q("1/17280"));
    }

    #[test]
    fn constant_types_collapse() {
        for d in 1..=50 {
            for g in 1..=8 {
                assert_eq!(degree_ratio(&t(&vec![d; g])), Rational::one(), "d={d} g={g}");
            }
        }
    }

    #[test]
    fn kernel_order() {
        assert_eq!(t(&[1, 2, 4]).kernel_order(), 64);
    }

    #[test]
    fn ratio_factors_over_primes() {
        // chains of powers of 2 and of 3, multiplied entrywise
        let twos: [&[i64]; 4] = [&[1, 2, 4], &[1, 1, 2], &[2, 2, 8], &[1, 4, 4]];
        let threes: [&[i64]; 4] = [&[1, 3, 9], &[1, 1, 1], &[3, 9, 9], &[1, 1, 3]];
        for a in twos {
            for b in threes {
                let ab: Vec<i64> = a.iter().zip(b).map(|(x, y)| x * y).collect();
                assert_eq!(
                    degree_ratio(&t(&ab)),
                    degree_ratio(&t(a)) * degree_ratio(&t(b)),
                    "{a:?} x {b:?}"
                );
            }
        }
    }

    #[test]
    fn ratio_is_positive_and_integral_when_d1_is_one() {
        // Observed, not a theorem: recorded here so a regression is visible.
        let chains: [&[i64]; 6] = [&[1, 2], &[1, 6], &[1, 2, 4], &[1, 3, 6], &[1, 1, 5], &[1, 2, 12, 24]];
        for c in chains {
            let r = degree_ratio(&t(c));
            assert!(r.signum() > 0);
            assert!(r.is_integer(), "{c:?} -> {r}");
        }
    }
}
