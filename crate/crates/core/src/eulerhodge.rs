//! Euler characteristic of A_g by three routes, the proportionality factor
//! τ(g) between λ_g and the boundary locus B_g, and λ-monomial integrals on
//! a toroidal compactification via proportionality with LG_g.
//!
//! Routes:
//! * product: ζ(-1) ζ(-3) ... ζ(1-2g);
//! * recursive: χ(A_1) = -2 ∫ψ on M̄_{1,1}, then χ(A_g) = (-1)^g τ(g) χ(A_{g-1})
//!   with τ(g) the ratio of two closed-form Hodge integrals;
//! * Gauss–Bonnet: (-1)^{g(g+1)/2} 2^g ∫ λ_1...λ_g. This one goes through
//!   K(g), which is itself defined from the product route, so it checks the
//!   ring machinery and sign conventions rather than deriving χ independently.

use crate::error::{Error, Result};
use crate::exactnum::{abs_bernoulli_over_index, bernoulli, factorial, zeta_neg, Rational};
use crate::lagrangian::{lg_euler_char_cells, lg_integrate};
use crate::symlambda::top_degree;

/// The two intersection numbers taken as inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeConstants {
    /// ∫ψ over M̄_{1,1}.
    pub psi_m11: Rational,
    /// Volume of the genus-1 one-pointed cycle locus, a point with Z/2
    /// automorphisms.
    pub half: Rational,
}

impl Default for HodgeConstants {
    fn default() -> Self {
        HodgeConstants {
            psi_m11: Rational::new(1, 24),
            half: Rational::new(1, 2),
        }
    }
}

fn require_genus(g: usize, min: usize) -> Result<()> {
    if g < min {
        return Err(Error::InvalidGenus { g, min });
    }
    Ok(())
}

fn sign(exp: usize) -> Rational {
    if exp.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// ∫_{M̄_g} λ_g λ_{g-1} λ_{g-2}
///   = |B_{2g-2}|/(2g-2) · |B_{2g}|/(2g) · 1/(2 (2g-2)!).
pub fn hodge_triple_integral(g: usize) -> Result<Rational> {
    require_genus(g, 2)?;
    let lower = abs_bernoulli_over_index(g - 1)?;
    let upper = abs_bernoulli_over_index(g)?;
    let denom = Rational::from_int(factorial(2 * g as u64 - 2) * 2);
    Ok(lower * upper / denom)
}

/// The λ_{g-1}-evaluation of λ_{g-2}[B_g]·[J_g], using `consts.half` for the
/// cycle-locus volume.
pub fn epsilon_bg_evaluation_with(g: usize, consts: &HodgeConstants) -> Result<Rational> {
    require_genus(g, 2)?;
    let lower = abs_bernoulli_over_index(g - 1)?;
    let fact = Rational::from_int(factorial(2 * g as u64 - 2));
    Ok(&consts.half * lower / fact)
}

pub fn epsilon_bg_evaluation(g: usize) -> Result<Rational> {
    epsilon_bg_evaluation_with(g, &HodgeConstants::default())
}

/// τ(g) with λ_g = τ(g) [B_g], as the ratio of the two evaluations.
pub fn tau(g: usize) -> Result<Rational> {
    hodge_triple_integral(g)?.checked_div(&epsilon_bg_evaluation(g)?)
}

/// ζ(-1) · ζ(-3) · ... · ζ(1-2g).
pub fn chi_product(g: usize) -> Result<Rational> {
    require_genus(g, 1)?;
    (1..=g).map(zeta_neg).product()
}

pub fn chi_recursive_with(g: usize, consts: &HodgeConstants) -> Result<Rational> {
    require_genus(g, 1)?;
    let mut chi = -Rational::from_int(2) * &consts.psi_m11;
    for h in 2..=g {
        chi = sign(h) * tau(h)? * chi;
    }
    Ok(chi)
}

/// χ(A_g) = (-1)^g τ(g) χ(A_{g-1}) from χ(A_1) = -2 ∫ψ.
pub fn chi_recursive(g: usize) -> Result<Rational> {
    chi_recursive_with(g, &HodgeConstants::default())
}

/// K(g) = χ(A_g) / χ(LG_g).
pub fn proportionality_k(g: usize) -> Result<Rational> {
    let chi = chi_product(g)?;
    chi.checked_div(&Rational::from_int(lg_euler_char_cells(g)?))
}

/// ∫_{Ā_g} λ^a = K(g) ∫_{LG_g} x^a. Builds the genus-g ring on first use.
pub fn integrate_abar(g: usize, a: &[u32]) -> Result<Rational> {
    let k = proportionality_k(g)?;
    Ok(k * lg_integrate(g, a)?)
}

/// (-1)^{g(g+1)/2} 2^g ∫_{Ā_g} λ_1 ... λ_g.
pub fn chi_gaussbonnet(g: usize) -> Result<Rational> {
    require_genus(g, 1)?;
    let integral = integrate_abar(g, &vec![1; g])?;
    Ok(sign(top_degree(g) as usize) * Rational::from_int(1u64 << g) * integral)
}

/// ∫_{Ā_g} λ_1...λ_g = (-1)^{g(g+1)/2} 2^{-g} χ(A_g), no ring needed.
pub fn lambda_top_product_integral(g: usize) -> Result<Rational> {
    let chi = chi_product(g)?;
    Ok(sign(top_degree(g) as usize) * chi / Rational::from_int(1u64 << g))
}

/// λ_1 ... λ_{g-1} is nonzero because its λ_g-evaluation is nonzero.
pub fn lambda_product_nonvanishing(g: usize) -> Result<bool> {
    Ok(!lambda_top_product_integral(g)?.is_zero())
}

/// All χ(A_g) routes plus τ and K for one genus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiReport {
    pub g: usize,
    pub chi_product: Rational,
    pub chi_recursive: Rational,
    /// Consistency route; reuses K(g).
    pub chi_gaussbonnet: Rational,
    pub k: Rational,
    /// Undefined for g = 1.
    pub tau: Option<Rational>,
}

impl ChiReport {
    pub fn routes_agree(&self) -> bool {
        self.chi_product == self.chi_recursive && self.chi_product == self.chi_gaussbonnet
    }
}

/// Evaluates the three routes, the ring-based one on its own thread.
pub fn chi_report(g: usize) -> Result<ChiReport> {
    require_genus(g, 1)?;
    std::thread::scope(|s| {
        let gb = s.spawn(|| chi_gaussbonnet(g));
        let chi_product = chi_product(g)?;
        let chi_recursive = chi_recursive(g)?;
        let k = proportionality_k(g)?;
        let tau = if g >= 2 { Some(tau(g)?) } else { None };
        let chi_gaussbonnet = gb
            .join()
            .map_err(|_| Error::Inconsistent("Gauss-Bonnet route panicked".into()))??;
        Ok(ChiReport {
            g,
            chi_product,
            chi_recursive,
            chi_gaussbonnet,
            k,
            tau,
        })
    })
}

/// |B_{2g}|/(2g), the closed form τ(g) must match.
pub fn tau_closed_form(g: usize) -> Result<Rational> {
    require_genus(g, 2)?;
    Ok(bernoulli(2 * g).abs() / Rational::from_int(2 * g as u64))
}
