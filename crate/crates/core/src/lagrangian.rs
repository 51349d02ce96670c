//! Integration on the Lagrangian Grassmannian LG_g.
//!
//! The cohomology ring is the Mumford quotient in the variables x_i = c_i(S),
//! S the tautological subbundle. The integration functional is fixed by
//! Gauss–Bonnet: the tangent bundle is Sym²(S^∨), and the integral of its top
//! Chern class must equal χ(LG_g).

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::hodgering::{quotient_ring, strict_partition_counts, GradedQuotientRing};
use crate::poly::Exponent;
use crate::symlambda::{ctop_sym2, top_degree, weighted_degree, LambdaPoly};

/// Betti numbers b_{2d}, d = 0..=g(g+1)/2, read off the quotient ring.
pub fn lg_betti(g: usize) -> Result<Vec<u64>> {
    let ring = quotient_ring(g)?;
    Ok(ring.graded_dimensions().iter().map(|&d| d as u64).collect())
}

/// χ(LG_g) as the sum of the ring's Betti numbers.
pub fn lg_euler_char(g: usize) -> Result<u64> {
    Ok(lg_betti(g)?.iter().sum())
}

/// χ(LG_g) by counting Schubert cells, which are indexed by strict
/// partitions with parts at most g. Needs no ring construction.
pub fn lg_euler_char_cells(g: usize) -> Result<u64> {
    if g == 0 {
        return Err(Error::InvalidGenus { g, min: 1 });
    }
    Ok(strict_partition_counts(g).iter().sum())
}

pub fn is_poincare_symmetric(dims: &[u64]) -> bool {
    dims.iter().eq(dims.iter().rev())
}

/// Normalized integration functional on LG_g.
#[derive(Debug, Clone)]
pub struct LGIntegrator {
    genus: usize,
    ring: Arc<GradedQuotientRing>,
    top_basis_monomial: Exponent,
    top_scale: Rational,
}

impl LGIntegrator {
    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn ring(&self) -> &GradedQuotientRing {
        &self.ring
    }

    pub fn top_basis_monomial(&self) -> &[u32] {
        &self.top_basis_monomial
    }

    /// Integral of the top basis monomial.
    pub fn top_scale(&self) -> &Rational {
        &self.top_scale
    }

    /// ∫ x_1^{a_1} ... x_g^{a_g}; zero unless the monomial has top degree.
    pub fn integrate(&self, a: &[u32]) -> Result<Rational> {
        if a.len() != self.genus {
            return Err(Error::ExponentLength {
                expected: self.genus,
                got: a.len(),
            });
        }
        if weighted_degree(a) != top_degree(self.genus) {
            return Ok(Rational::zero());
        }
        self.integrate_poly(&LambdaPoly::monomial(a.to_vec(), Rational::one()))
    }

    /// Integral of the top-degree part of `p`.
    pub fn integrate_poly(&self, p: &LambdaPoly) -> Result<Rational> {
        if p.genus() != self.genus {
            return Err(Error::GenusMismatch {
                left: self.genus,
                right: p.genus(),
            });
        }
        let top = top_degree(self.genus);
        let mut top_part = LambdaPoly::zero(self.genus);
        for (e, c) in p.terms() {
            if weighted_degree(e) == top {
                top_part.add_term(e.clone(), c.clone());
            }
        }
        Ok(self.ring.top_coefficient(&top_part)? * &self.top_scale)
    }
}

/// Fixes the integration functional so that ∫ c_top(T LG_g) = χ(LG_g).
pub fn lg_normalize(g: usize) -> Result<LGIntegrator> {
    let ring = quotient_ring(g)?;
    let top = ring
        .pieces()
        .last()
        .ok_or_else(|| Error::Inconsistent("empty ring".into()))?;
    if top.dimension() != 1 {
        return Err(Error::Inconsistent(format!(
            "top piece of LG_{g} has dimension {}",
            top.dimension()
        )));
    }
    let top_basis_monomial = top.basis()[0].clone();
    // T = Sym²(S^∨), so c_top(T) is the dualized symmetric-square class.
    let tangent_top = ctop_sym2(g, true)?;
    let coeff = ring.top_coefficient(&tangent_top)?;
    if coeff.is_zero() {
        return Err(Error::DegenerateNormalization);
    }
    let chi = Rational::from_int(lg_euler_char(g)?);
    Ok(LGIntegrator {
        genus: g,
        ring,
        top_basis_monomial,
        top_scale: chi.checked_div(&coeff)?,
    })
}

/// Shared, memoized integrator for genus g.
pub fn lg_integrator(g: usize) -> Result<Arc<LGIntegrator>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<LGIntegrator>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(i) = cache.lock().expect("integrator cache poisoned").get(&g) {
        return Ok(i.clone());
    }
    let integ = Arc::new(lg_normalize(g)?);
    Ok(cache
        .lock()
        .expect("integrator cache poisoned")
        .entry(g)
        .or_insert(integ)
        .clone())
}

/// ∫_{LG_g} x^a using the shared integrator.
pub fn lg_integrate(g: usize, a: &[u32]) -> Result<Rational> {
    lg_integrator(g)?.integrate(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn betti_profiles() {
        assert_eq!(lg_betti(1).unwrap(), vec![1, 1]);
        assert_eq!(lg_betti(2).unwrap(), vec![1, 1, 1, 1]);
        assert_eq!(lg_betti(3).unwrap(), vec![1, 1, 1, 2, 1, 1, 1]);
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(lg_euler_char(1).unwrap(), 2);
        assert_eq!(lg_euler_char(3).unwrap(), 8);
        assert_eq!(lg_euler_char(5).unwrap(), 32);
        for g in 1..=5 {
            assert_eq!(lg_euler_char_cells(g).unwrap(), lg_euler_char(g).unwrap());
            assert!(is_poincare_symmetric(&lg_betti(g).unwrap()));
        }
        assert_eq!(lg_euler_char_cells(12).unwrap(), 4096);
        assert!(lg_euler_char_cells(0).is_err());
    }

    #[test]
    fn normalization() {
        let i1 = lg_normalize(1).unwrap();
        assert_eq!(i1.integrate(&[1]).unwrap(), q(-1));
        // c_top(T) = -2 x1 integrates to χ = 2
        assert_eq!(i1.integrate_poly(&ctop_sym2(1, true).unwrap()).unwrap(), q(2));
        assert_eq!(lg_integrate(2, &[1, 1]).unwrap(), q(-1));
        assert_eq!(lg_integrate(3, &[1, 1, 1]).unwrap(), q(1));
    }

    #[test]
    fn integrals_in_genus_two() {
        assert_eq!(lg_integrate(2, &[3, 0]).unwrap(), q(-2));
        assert_eq!(lg_integrate(2, &[1, 0]).unwrap(), q(0));
        assert!(lg_integrate(2, &[1]).is_err());
    }

    #[test]
    fn lambda_product_sign() {
        for g in 1..=5 {
            let expected = if top_degree(g).is_multiple_of(2) { 1 } else { -1 };
            assert_eq!(lg_integrate(g, &vec![1; g]).unwrap(), q(expected), "g = {g}");
        }
    }

    #[test]
    fn non_top_monomials_integrate_to_zero() {
        let integ = lg_integrator(3).unwrap();
        for d in 0..top_degree(3) {
            for m in crate::hodgering::monomials_of_degree(3, d) {
                assert!(integ.integrate(&m).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn gauss_bonnet_holds_after_normalization() {
        for g in 1..=4 {
            let integ = lg_integrator(g).unwrap();
            let chi = integ.integrate_poly(&ctop_sym2(g, true).unwrap()).unwrap();
            assert_eq!(chi, q(1 << g));
        }
    }
}
