//! Named invariant suites over a range of genera, each producing a list of
//! pass/fail checks with the values involved.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::eulerhodge::{
    chi_gaussbonnet, chi_product, chi_recursive, lambda_product_nonvanishing, tau, tau_closed_form,
};
use crate::exactnum::Rational;
use crate::hodgering::{
    ctop_identity, direct_sum_cg2_vanishing, mumford_square_monomial, quotient_ring,
    strict_partition_counts,
};
use crate::lagrangian::{is_poincare_symmetric, lg_betti, lg_euler_char, lg_integrate};
use crate::strata::{partitions_of, verify_closure_lemma, xi_domain_dimension};
use crate::symlambda::{ctop_sym2, giambelli_det, top_degree, two_pow_lambda_product, LambdaPoly};

/// Environment variable capping the genus of any quotient-ring build.
pub const RING_CAP_VAR: &str = "SIEGEL_CHI_MAX_G";
pub const DEFAULT_RING_CAP: usize = 6;

/// Largest genus for which the quotient ring may be built.
pub fn ring_genus_cap() -> usize {
    std::env::var(RING_CAP_VAR)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_RING_CAP)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub gmax: usize,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn new(name: &str, gmax: usize) -> Self {
        SuiteReport {
            name: name.to_string(),
            gmax,
            checks: Vec::new(),
        }
    }

    fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    /// Records a failure instead of propagating the error.
    fn check_result(&mut self, name: impl Into<String>, r: Result<(bool, String)>) {
        match r {
            Ok((passed, detail)) => self.check(name, passed, detail),
            Err(e) => self.check(name, false, format!("error: {e}")),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} (gmax = {})", self.name, self.gmax)?;
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "  {tag} {}: {}", c.name, c.detail)?;
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(
            f,
            "{verdict} {} ({} checks, {} failed)",
            self.name,
            self.checks.len(),
            self.failures()
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Mumford,
    Giambelli,
    Lg,
    Recursion,
    Strata,
    All,
}

impl Suite {
    pub const INDIVIDUAL: [Suite; 5] = [
        Suite::Mumford,
        Suite::Giambelli,
        Suite::Lg,
        Suite::Recursion,
        Suite::Strata,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Mumford => "mumford",
            Suite::Giambelli => "giambelli",
            Suite::Lg => "lg",
            Suite::Recursion => "recursion",
            Suite::Strata => "strata",
            Suite::All => "all",
        }
    }

    pub fn default_gmax(self) -> usize {
        match self {
            Suite::Mumford | Suite::Lg => 6,
            Suite::Giambelli | Suite::Strata => 5,
            Suite::Recursion => 12,
            Suite::All => 12,
        }
    }

    /// Largest accepted gmax. Ring-based suites follow the ring cap.
    pub fn max_gmax(self) -> usize {
        match self {
            Suite::Mumford | Suite::Giambelli | Suite::Lg => ring_genus_cap(),
            Suite::Recursion => 60,
            Suite::Strata => 7,
            Suite::All => 60,
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "mumford" => Suite::Mumford,
            "giambelli" => Suite::Giambelli,
            "lg" => Suite::Lg,
            "recursion" => Suite::Recursion,
            "strata" => Suite::Strata,
            "all" => Suite::All,
            _ => return Err(Error::Parse(format!("unknown suite {s:?}"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Runs `suite` up to `gmax` (its default when `None`). With `All`, an
/// explicit gmax is clamped to each suite's own limit.
pub fn run_suite(suite: Suite, gmax: Option<usize>) -> Result<Vec<SuiteReport>> {
    if let Some(g) = gmax {
        if g == 0 {
            return Err(Error::InvalidGenus { g, min: 1 });
        }
        if g > suite.max_gmax() {
            return Err(Error::OutOfBounds {
                what: format!("gmax for suite {suite}"),
                value: g,
                max: suite.max_gmax(),
            });
        }
    }
    let one = |s: Suite, g: usize| match s {
        Suite::Mumford => mumford_suite(g),
        Suite::Giambelli => giambelli_suite(g),
        Suite::Lg => lg_suite(g),
        Suite::Recursion => recursion_suite(g),
        Suite::Strata => strata_suite(g),
        Suite::All => unreachable!(),
    };
    Ok(match suite {
        Suite::All => Suite::INDIVIDUAL
            .iter()
            .map(|&s| {
                let g = gmax.map_or(s.default_gmax(), |g| g.min(s.max_gmax()));
                one(s, g)
            })
            .collect(),
        s => vec![one(s, gmax.unwrap_or(s.default_gmax()))],
    })
}

fn sign_of_top(g: usize) -> i64 {
    if top_degree(g).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn mumford_suite(gmax: usize) -> SuiteReport {
    let mut r = SuiteReport::new("mumford", gmax);
    for g in 1..=gmax {
        let ring = match quotient_ring(g) {
            Ok(ring) => ring,
            Err(e) => {
                r.check(format!("g={g} ring"), false, format!("error: {e}"));
                continue;
            }
        };
        let dims: Vec<u64> = ring.graded_dimensions().iter().map(|&d| d as u64).collect();
        let expected = strict_partition_counts(g);
        r.check(
            format!("g={g} graded dimensions"),
            dims == expected,
            format!("{dims:?} vs strict partitions {expected:?}"),
        );
        let total = ring.total_dimension();
        r.check(format!("g={g} total dimension"), total == 1 << g, format!("{total} = 2^{g}"));
        let top = dims.last().copied().unwrap_or(0);
        r.check(format!("g={g} top piece"), top == 1, format!("dimension {top}"));
        for k in 0..g {
            r.check_result(
                format!("g={g} k={k} square vanishing"),
                mumford_square_monomial(g, k).and_then(|m| {
                    let nf = ring.normal_form(&m)?;
                    Ok((nf.is_zero(), format!("{m} -> {nf}")))
                }),
            );
        }
        r.check_result(
            format!("g={g} c_top identity"),
            ctop_identity(&ring).map(|id| {
                (id.holds(), format!("all three reduce to {}", id.lambda_product))
            }),
        );
        if g >= 3 {
            for mu in partitions_of(g as u32 - 1).into_iter().filter(|m| m.len() >= 2) {
                r.check_result(
                    format!("g={g} c_(g-2) of sum over {mu:?}"),
                    direct_sum_cg2_vanishing(&mu).map(|v| (v, "vanishes modulo top classes".into())),
                );
            }
        }
    }
    r
}

pub fn giambelli_suite(gmax: usize) -> SuiteReport {
    let mut r = SuiteReport::new("giambelli", gmax);
    let mono = |e: &[u32], c: i64| LambdaPoly::monomial(e.to_vec(), Rational::from_int(c));
    for g in 1..=gmax {
        r.check_result(
            format!("g={g} congruence mod Mumford ideal"),
            quotient_ring(g).and_then(|ring| {
                let id = ctop_identity(&ring)?;
                Ok((
                    id.holds(),
                    format!(
                        "c_top -> {}, 2^g v_1..v_g -> {}, det -> {}",
                        id.ctop, id.lambda_product, id.giambelli
                    ),
                ))
            }),
        );
        r.check_result(
            format!("g={g} homogeneity"),
            (|| {
                let d = giambelli_det(g)?.homogeneous_degree();
                let c = ctop_sym2(g, false)?.homogeneous_degree();
                let top = Some(top_degree(g));
                Ok((d == top && c == top, format!("degrees {d:?}, {c:?}")))
            })(),
        );
        r.check_result(
            format!("g={g} dual sign"),
            (|| {
                let plain = ctop_sym2(g, false)?;
                let dual = ctop_sym2(g, true)?;
                let ok = dual == plain.scale(&Rational::from_int(sign_of_top(g)));
                Ok((ok, format!("(-1)^{}", top_degree(g))))
            })(),
        );
    }
    for g in 1..=gmax.min(2) {
        r.check_result(
            format!("g={g} exact equality"),
            (|| {
                let det = giambelli_det(g)?;
                let ctop = ctop_sym2(g, false)?;
                let prod = two_pow_lambda_product(g);
                Ok((det == ctop && ctop == prod, format!("{det}")))
            })(),
        );
    }
    if gmax >= 3 {
        r.check_result(
            "g=3 determinant before reduction",
            giambelli_det(3).and_then(|det| {
                let expected = mono(&[1, 1, 1], 8).sub(&mono(&[0, 0, 2], 8))?;
                Ok((det == expected, format!("{det}")))
            }),
        );
    }
    r
}

pub fn lg_suite(gmax: usize) -> SuiteReport {
    let mut r = SuiteReport::new("lg", gmax);
    for g in 1..=gmax {
        r.check_result(
            format!("g={g} Betti profile"),
            lg_betti(g).map(|b| (is_poincare_symmetric(&b), format!("{b:?}"))),
        );
        r.check_result(
            format!("g={g} Euler characteristic"),
            lg_euler_char(g).map(|e| (e == 1 << g, format!("{e}"))),
        );
        r.check_result(
            format!("g={g} integral of x_1..x_g"),
            lg_integrate(g, &vec![1; g]).map(|v| {
                let expected = Rational::from_int(sign_of_top(g));
                (v == expected, format!("{v}, expected {expected}"))
            }),
        );
        r.check_result(
            format!("g={g} integral of c_top(T)"),
            (|| {
                let integ = crate::lagrangian::lg_integrator(g)?;
                let v = integ.integrate_poly(&ctop_sym2(g, true)?)?;
                let expected = Rational::from_int(1i64 << g);
                Ok((v == expected, format!("{v}")))
            })(),
        );
    }
    r
}

pub fn recursion_suite(gmax: usize) -> SuiteReport {
    let mut r = SuiteReport::new("recursion", gmax);
    for g in 1..=gmax {
        r.check_result(
            format!("g={g} recursive = product"),
            (|| {
                let p = chi_product(g)?;
                let rec = chi_recursive(g)?;
                Ok((p == rec, format!("{rec}")))
            })(),
        );
        r.check_result(
            format!("g={g} sign of chi"),
            chi_product(g).map(|p| {
                let s = sign_of_top(g) as i32;
                (p.signum() == s, format!("{p}"))
            }),
        );
        if g >= 2 {
            r.check_result(
                format!("g={g} tau closed form"),
                (|| {
                    let t = tau(g)?;
                    Ok((t == tau_closed_form(g)?, format!("{t}")))
                })(),
            );
        }
        r.check_result(
            format!("g={g} lambda_1..lambda_g nonvanishing"),
            lambda_product_nonvanishing(g).map(|v| (v, String::new())),
        );
    }
    let cap = ring_genus_cap().min(gmax);
    for g in 1..=cap {
        r.check_result(
            format!("g={g} Gauss-Bonnet = product"),
            (|| {
                let gb = chi_gaussbonnet(g)?;
                Ok((gb == chi_product(g)?, format!("{gb}")))
            })(),
        );
    }
    r
}

pub fn strata_suite(gmax: usize) -> SuiteReport {
    let mut r = SuiteReport::new("strata", gmax);
    let dim_bound = gmax.max(20) as u32;
    let mut count = 0;
    let mut bad = Vec::new();
    for g in 2..=dim_bound {
        for mu in partitions_of(g - 1) {
            count += 1;
            if xi_domain_dimension(g, &mu).is_err() {
                bad.push((g, mu));
            }
        }
    }
    r.check(
        format!("dimension identity g<={dim_bound}"),
        bad.is_empty(),
        format!("{count} partitions, failures {bad:?}"),
    );
    let left = crate::strata::figure_one_left();
    let right = crate::strata::figure_one_right();
    r.check_result(
        "genus-11 examples",
        (|| {
            let pl = left.extract_partition()?;
            let pr = right.extract_partition()?;
            let ok = left.in_z()
                && right.in_z()
                && left.total_genus() == 11
                && right.total_genus() == 11
                && pl == [1, 2, 3, 4]
                && pr == [10];
            Ok((ok, format!("{pl:?} and {pr:?}")))
        })(),
    );
    for g in 2..=gmax.max(2) as u32 {
        match verify_closure_lemma(g) {
            Ok(rep) => {
                let table = rep
                    .outcomes
                    .iter()
                    .map(|(t, c)| {
                        format!("{t} same={} finer={} outside={} other={}", c.same, c.finer, c.outside, c.other)
                    })
                    .collect::<Vec<_>>()
                    .join("; ");
                let root = rep
                    .refining_root_type
                    .map_or("undetermined".to_string(), |t| t.to_string());
                r.check(
                    format!("g={g} closure"),
                    rep.passed(),
                    format!(
                        "{} graphs, {} contractions; {table}; refining root type {root}; violations {:?}",
                        rep.graphs_checked, rep.contractions_checked, rep.violations
                    ),
                );
            }
            Err(e) => r.check(format!("g={g} closure"), false, format!("error: {e}")),
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_at_small_bounds() {
        for s in Suite::INDIVIDUAL {
            for rep in run_suite(s, Some(3)).unwrap() {
                assert!(rep.passed(), "{rep}");
                assert!(!rep.checks.is_empty());
            }
        }
    }

    #[test]
    fn bounds() {
        assert!(run_suite(Suite::Strata, Some(8)).is_err());
        assert!(run_suite(Suite::Recursion, Some(0)).is_err());
        assert!(matches!(
            run_suite(Suite::Mumford, Some(99)),
            Err(Error::OutOfBounds { .. })
        ));
        assert_eq!("lg".parse::<Suite>().unwrap(), Suite::Lg);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn report_lines() {
        let rep = recursion_suite(2);
        let text = rep.to_string();
        assert!(text.contains("PASS g=2 recursive = product: -1/1440"));
        assert!(text.ends_with("PASS recursion (9 checks, 0 failed)\n"), "{text}");
    }
}
