//! Weighted polynomial ring Q[v_1, ..., v_g] with deg v_i = i, the bridge from
//! symmetric polynomials in Chern roots, and the Giambelli determinant for the
//! top Chern class of a symmetric square.
//!
//! The same ring hosts the lambda classes (v_i = λ_i) and the Chern classes
//! of the tautological bundle on the Lagrangian Grassmannian (v_i = x_i).

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::poly::{Exponent, SparsePoly};

/// Polynomial in v_1..v_g. Variable index `i` (0-based) stands for v_{i+1}.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LambdaPoly {
    genus: usize,
    poly: SparsePoly,
}

/// Weighted degree sum_i i * a_i of an exponent vector (a_1, ..., a_g).
pub fn weighted_degree(exp: &[u32]) -> u32 {
    exp.iter()
        .enumerate()
        .map(|(i, &a)| (i as u32 + 1) * a)
        .sum()
}

/// Top degree g(g+1)/2 of the quotient ring, also dim LG_g.
pub fn top_degree(g: usize) -> u32 {
    (g * (g + 1) / 2) as u32
}

impl LambdaPoly {
    pub fn zero(genus: usize) -> Self {
        LambdaPoly {
            genus,
            poly: SparsePoly::zero(genus),
        }
    }

    pub fn one(genus: usize) -> Self {
        LambdaPoly {
            genus,
            poly: SparsePoly::one(genus),
        }
    }

    pub fn constant(genus: usize, c: Rational) -> Self {
        LambdaPoly {
            genus,
            poly: SparsePoly::constant(genus, c),
        }
    }

    /// v_k with v_0 = 1 and v_k = 0 outside 0..=g.
    pub fn generator(genus: usize, k: i64) -> Self {
        if k == 0 {
            LambdaPoly::one(genus)
        } else if k < 0 || k as usize > genus {
            LambdaPoly::zero(genus)
        } else {
            LambdaPoly {
                genus,
                poly: SparsePoly::var(genus, k as usize - 1),
            }
        }
    }

    pub fn monomial(exp: Exponent, c: Rational) -> Self {
        LambdaPoly {
            genus: exp.len(),
            poly: SparsePoly::monomial(exp, c),
        }
    }

    /// Product v_{k_1} v_{k_2} ... of generators (indices may repeat).
    pub fn product_of_generators(genus: usize, indices: &[usize]) -> Result<Self> {
        let mut exp = vec![0u32; genus];
        for &k in indices {
            if k == 0 || k > genus {
                return Err(Error::Inconsistent(format!(
                    "generator v_{k} outside 1..={genus}"
                )));
            }
            exp[k - 1] += 1;
        }
        Ok(LambdaPoly::monomial(exp, Rational::one()))
    }

    pub fn from_sparse(genus: usize, poly: SparsePoly) -> Result<Self> {
        if poly.nvars() != genus {
            return Err(Error::GenusMismatch {
                left: genus,
                right: poly.nvars(),
            });
        }
        Ok(LambdaPoly { genus, poly })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn as_sparse(&self) -> &SparsePoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.poly.terms()
    }

    pub fn num_terms(&self) -> usize {
        self.poly.len()
    }

    pub fn coeff(&self, exp: &[u32]) -> Rational {
        self.poly.coeff(exp)
    }

    /// Weighted degree if homogeneous; the zero polynomial has none.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.poly.terms().map(|(e, _)| weighted_degree(e));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.poly.terms().map(|(e, _)| weighted_degree(e)).max()
    }

    /// Splits into homogeneous pieces keyed by weighted degree.
    pub fn homogeneous_components(&self) -> BTreeMap<u32, LambdaPoly> {
        let mut out: BTreeMap<u32, LambdaPoly> = BTreeMap::new();
        for (e, c) in self.poly.terms() {
            out.entry(weighted_degree(e))
                .or_insert_with(|| LambdaPoly::zero(self.genus))
                .poly
                .add_term(e.clone(), c.clone());
        }
        out
    }

    fn check(&self, other: &LambdaPoly) -> Result<()> {
        if self.genus != other.genus {
            return Err(Error::GenusMismatch {
                left: self.genus,
                right: other.genus,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &LambdaPoly) -> Result<LambdaPoly> {
        self.check(other)?;
        Ok(LambdaPoly {
            genus: self.genus,
            poly: &self.poly + &other.poly,
        })
    }

    pub fn sub(&self, other: &LambdaPoly) -> Result<LambdaPoly> {
        self.check(other)?;
        Ok(LambdaPoly {
            genus: self.genus,
            poly: &self.poly - &other.poly,
        })
    }

    pub fn mul(&self, other: &LambdaPoly) -> Result<LambdaPoly> {
        self.check(other)?;
        Ok(LambdaPoly {
            genus: self.genus,
            poly: &self.poly * &other.poly,
        })
    }

    pub fn scale(&self, c: &Rational) -> LambdaPoly {
        LambdaPoly {
            genus: self.genus,
            poly: self.poly.scale(c),
        }
    }

    pub fn div_exact(&self, other: &LambdaPoly) -> Result<LambdaPoly> {
        self.check(other)?;
        Ok(LambdaPoly {
            genus: self.genus,
            poly: self.poly.div_exact(&other.poly)?,
        })
    }

    pub(crate) fn add_term(&mut self, exp: Exponent, c: Rational) {
        self.poly.add_term(exp, c);
    }

    /// Renders with variable names `{prefix}1`, `{prefix}2`, ...
    pub fn render(&self, prefix: &str) -> String {
        self.poly.render(|i| format!("{prefix}{}", i + 1))
    }
}

impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("v"))
    }
}

impl fmt::Debug for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LambdaPoly(g={}, {})", self.genus, self)
    }
}

/// Sum of two polynomials of the same genus.
pub fn poly_add(p: &LambdaPoly, q: &LambdaPoly) -> Result<LambdaPoly> {
    p.add(q)
}

/// Product of two polynomials of the same genus.
pub fn poly_mul(p: &LambdaPoly, q: &LambdaPoly) -> Result<LambdaPoly> {
    p.mul(q)
}

/// Polynomial in commuting Chern roots r_1..r_g.
#[derive(Clone, PartialEq, Eq)]
pub struct SymRootPoly {
    genus: usize,
    poly: SparsePoly,
}

impl SymRootPoly {
    pub fn new(genus: usize, poly: SparsePoly) -> Result<Self> {
        if poly.nvars() != genus {
            return Err(Error::GenusMismatch {
                left: genus,
                right: poly.nvars(),
            });
        }
        Ok(SymRootPoly { genus, poly })
    }

    /// The root r_{i+1}.
    pub fn root(genus: usize, i: usize) -> Self {
        SymRootPoly {
            genus,
            poly: SparsePoly::var(genus, i),
        }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn as_sparse(&self) -> &SparsePoly {
        &self.poly
    }

    /// Invariance under the adjacent transpositions, which generate S_g.
    pub fn is_symmetric(&self) -> bool {
        (0..self.genus.saturating_sub(1)).all(|i| {
            let swapped = self.poly.map_exponents(self.genus, |e| {
                let mut e = e.to_vec();
                e.swap(i, i + 1);
                e
            });
            swapped == self.poly
        })
    }
}

impl fmt::Debug for SymRootPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SymRootPoly(g={}, {})",
            self.genus,
            self.poly.render(|i| format!("r{}", i + 1))
        )
    }
}

/// Elementary symmetric polynomial e_k(r_1..r_g).
pub fn elementary_symmetric(genus: usize, k: usize) -> SparsePoly {
    let mut out = SparsePoly::zero(genus);
    if k > genus {
        return out;
    }
    // walk all 0/1 vectors of weight k
    let mut chosen = vec![0u32; genus];
    fn rec(pos: usize, left: usize, chosen: &mut Vec<u32>, out: &mut SparsePoly) {
        if left == 0 {
            out.add_term(chosen.clone(), Rational::one());
            return;
        }
        if chosen.len() - pos < left {
            return;
        }
        chosen[pos] = 1;
        rec(pos + 1, left - 1, chosen, out);
        chosen[pos] = 0;
        rec(pos + 1, left, chosen, out);
    }
    rec(0, k, &mut chosen, &mut out);
    out
}

/// Products e^β = e_1^{β_1} ... e_g^{β_g}, memoized by β.
struct ElementaryProducts {
    genus: usize,
    singles: Vec<SparsePoly>,
    cache: HashMap<Exponent, SparsePoly>,
}

impl ElementaryProducts {
    fn new(genus: usize) -> Self {
        let singles = (1..=genus).map(|k| elementary_symmetric(genus, k)).collect();
        ElementaryProducts {
            genus,
            singles,
            cache: HashMap::new(),
        }
    }

    fn get(&mut self, beta: &[u32]) -> SparsePoly {
        if let Some(p) = self.cache.get(beta) {
            return p.clone();
        }
        let p = match beta.iter().position(|&b| b > 0) {
            None => SparsePoly::one(self.genus),
            Some(i) => {
                let mut smaller = beta.to_vec();
                smaller[i] -= 1;
                let base = self.get(&smaller);
                &base * &self.singles[i]
            }
        };
        self.cache.insert(beta.to_vec(), p.clone());
        p
    }
}

/// Rewrites a symmetric root polynomial in e_1..e_g and substitutes e_i -> v_i.
///
/// Classical leading-term algorithm: the lex-leading monomial r^α of a
/// symmetric polynomial has α weakly decreasing, and e^β with
/// β_i = α_i - α_{i+1} has the same leading monomial with coefficient 1.
pub fn elementary_to_lambda(s: &SymRootPoly) -> Result<LambdaPoly> {
    let g = s.genus;
    let mut products = ElementaryProducts::new(g);
    let mut rem = s.poly.clone();
    let mut out = LambdaPoly::zero(g);
    while let Some((alpha, c)) = rem.leading_term() {
        if alpha.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSymmetric);
        }
        let beta: Exponent = (0..g)
            .map(|i| alpha[i] - alpha.get(i + 1).copied().unwrap_or(0))
            .collect();
        let c = c.clone();
        let e_beta = products.get(&beta);
        rem = &rem - &e_beta.scale(&c);
        out.add_term(beta, c);
    }
    Ok(out)
}

/// c_top(Sym² E) for a rank-g bundle E, i.e. prod_{i<=j} (r_i + r_j) in the
/// Chern roots, expressed in v_i = c_i(E). With `dualize`, the bundle is
/// Sym² E^∨ and the factors are -(r_i + r_j).
pub fn ctop_sym2(g: usize, dualize: bool) -> Result<LambdaPoly> {
    if g == 0 {
        return Err(Error::InvalidGenus { g, min: 1 });
    }
    let sign = if dualize { -Rational::one() } else { Rational::one() };
    let mut prod = SparsePoly::one(g);
    for i in 0..g {
        for j in i..g {
            let factor = &SparsePoly::var(g, i) + &SparsePoly::var(g, j);
            prod = &prod * &factor.scale(&sign);
        }
    }
    elementary_to_lambda(&SymRootPoly::new(g, prod)?)
}

/// The g x g Giambelli matrix with entries v_{g - 2i + j} (0-based i, j).
pub fn giambelli_matrix(g: usize) -> Vec<Vec<LambdaPoly>> {
    (0..g)
        .map(|i| {
            (0..g)
                .map(|j| LambdaPoly::generator(g, g as i64 - 2 * i as i64 + j as i64))
                .collect()
        })
        .collect()
}

/// Laplace expansion along the first row.
pub fn det_cofactor(m: &[Vec<LambdaPoly>], genus: usize) -> Result<LambdaPoly> {
    let n = m.len();
    if n == 0 {
        return Ok(LambdaPoly::one(genus));
    }
    let mut acc = LambdaPoly::zero(genus);
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<LambdaPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = entry.mul(&det_cofactor(&minor, genus)?)?;
        acc = if j % 2 == 0 { acc.add(&term)? } else { acc.sub(&term)? };
    }
    Ok(acc)
}

/// Fraction-free Bareiss elimination; every division is exact in the
/// polynomial ring.
pub fn det_bareiss(m: &[Vec<LambdaPoly>], genus: usize) -> Result<LambdaPoly> {
    let n = m.len();
    if n == 0 {
        return Ok(LambdaPoly::one(genus));
    }
    let mut a: Vec<Vec<LambdaPoly>> = m.to_vec();
    let mut prev = LambdaPoly::one(genus);
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(LambdaPoly::zero(genus)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[k][k].mul(&a[i][j])?.sub(&a[i][k].mul(&a[k][j])?)?;
                a[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate {
        det.scale(&-Rational::one())
    } else {
        det
    })
}

/// 2^g det(giambelli_matrix(g)). Cofactor expansion up to g = 4, Bareiss above.
pub fn giambelli_det(g: usize) -> Result<LambdaPoly> {
    if g == 0 {
        return Err(Error::InvalidGenus { g, min: 1 });
    }
    let m = giambelli_matrix(g);
    let det = if g <= 4 {
        det_cofactor(&m, g)?
    } else {
        det_bareiss(&m, g)?
    };
    Ok(det.scale(&Rational::from_int(1u64 << g)))
}

/// 2^g v_1 v_2 ... v_g.
pub fn two_pow_lambda_product(g: usize) -> LambdaPoly {
    LambdaPoly::monomial(vec![1; g], Rational::from_int(1u64 << g))
}
