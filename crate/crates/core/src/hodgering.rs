//! The graded ring Q[v_1..v_g] / (Mumford relations), where the relations are
//! the positive-degree components of (1 + v_1 + ... + v_g)(1 - v_1 + ... ± v_g).
//!
//! Each degree is handled independently: the degree-d part of the ideal is
//! spanned by monomial multiples of the relation generators, row-reduced over
//! the rationals, and the non-pivot monomials form the basis of the quotient.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::poly::{Exponent, SparsePoly};
use crate::symlambda::{
    ctop_sym2, giambelli_det, top_degree, two_pow_lambda_product, weighted_degree, LambdaPoly,
};

/// The homogeneous relation R_{2m} = sum_{i+j=2m} (-1)^j v_i v_j, with v_0 = 1.
pub fn mumford_relation(g: usize, m: usize) -> LambdaPoly {
    let mut out = LambdaPoly::zero(g);
    let two_m = 2 * m as i64;
    for i in 0..=two_m {
        let j = two_m - i;
        if i as usize > g || j as usize > g {
            continue;
        }
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let term = LambdaPoly::generator(g, i)
            .mul(&LambdaPoly::generator(g, j))
            .expect("same genus")
            .scale(&Rational::from_int(sign));
        out = out.add(&term).expect("same genus");
    }
    out
}

/// All exponent vectors of weighted degree `d` in g variables, lex ascending.
pub fn monomials_of_degree(g: usize, d: u32) -> Vec<Exponent> {
    fn rec(var: usize, left: u32, exp: &mut Exponent, out: &mut Vec<Exponent>) {
        if var == 0 {
            if left == 0 {
                out.push(exp.clone());
            }
            return;
        }
        let w = var as u32;
        for a in 0..=left / w {
            exp[var - 1] = a;
            rec(var - 1, left - a * w, exp, out);
        }
        exp[var - 1] = 0;
    }
    let mut out = Vec::new();
    if g == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(g, d, &mut vec![0; g], &mut out);
    out.sort();
    out
}

/// Number of strict partitions of each d = 0..=g(g+1)/2 with parts <= g.
pub fn strict_partition_counts(g: usize) -> Vec<u64> {
    let top = top_degree(g) as usize;
    let mut counts = vec![0u64; top + 1];
    counts[0] = 1;
    for part in 1..=g {
        for d in (part..=top).rev() {
            counts[d] += counts[d - part];
        }
    }
    counts
}

fn is_square_free(exp: &[u32]) -> bool {
    exp.iter().all(|&a| a <= 1)
}

/// One graded piece of the quotient.
#[derive(Debug, Clone)]
pub struct GradedPiece {
    degree: u32,
    basis: Vec<Exponent>,
    reduction: HashMap<Exponent, Vec<(usize, Rational)>>,
}

impl GradedPiece {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Exponent] {
        &self.basis
    }

    /// Coordinates of a degree-d monomial in the basis.
    pub fn reduce_monomial(&self, exp: &[u32]) -> Option<&[(usize, Rational)]> {
        self.reduction.get(exp).map(Vec::as_slice)
    }

    pub fn num_monomials(&self) -> usize {
        self.reduction.len()
    }
}

type SparseRow = BTreeMap<usize, Rational>;

/// Incremental reduced row echelon form over sparse rows.
struct Echelon {
    rows: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    fn new() -> Self {
        Echelon {
            rows: BTreeMap::new(),
        }
    }

    fn insert(&mut self, mut row: SparseRow) {
        // Pivot rows only have entries at columns >= their pivot, so clearing
        // pivot columns in increasing order never revisits one.
        let mut cursor = 0usize;
        loop {
            let next = row
                .range(cursor..)
                .map(|(&c, _)| c)
                .find(|c| self.rows.contains_key(c));
            let Some(col) = next else { break };
            let factor = row[&col].clone();
            for (c, a) in &self.rows[&col] {
                let entry = row.entry(*c).or_default();
                *entry -= &(&factor * a);
                if entry.is_zero() {
                    row.remove(c);
                }
            }
            cursor = col + 1;
        }
        let Some((&pivot, lead)) = row.iter().next() else {
            return;
        };
        let inv = lead.recip().expect("nonzero pivot");
        for a in row.values_mut() {
            *a *= &inv;
        }
        for other in self.rows.values_mut() {
            if let Some(factor) = other.get(&pivot).cloned() {
                for (c, a) in &row {
                    let entry = other.entry(*c).or_default();
                    *entry -= &(&factor * a);
                    if entry.is_zero() {
                        other.remove(c);
                    }
                }
            }
        }
        self.rows.insert(pivot, row);
    }
}

fn build_piece(g: usize, generators: &[(u32, LambdaPoly)], d: u32) -> GradedPiece {
    let mut monomials = monomials_of_degree(g, d);
    // Non-square-free monomials first so they become pivots; the square-free
    // ones are left over as the basis whenever possible.
    monomials.sort_by(|a, b| (is_square_free(a), a).cmp(&(is_square_free(b), b)));
    let column: HashMap<&Exponent, usize> =
        monomials.iter().enumerate().map(|(i, e)| (e, i)).collect();

    let mut ech = Echelon::new();
    for (gen_deg, gen) in generators {
        if *gen_deg > d {
            continue;
        }
        for mult in monomials_of_degree(g, d - gen_deg) {
            let mut row = SparseRow::new();
            for (e, c) in gen.terms() {
                let prod: Exponent = e.iter().zip(&mult).map(|(a, b)| a + b).collect();
                let entry = row.entry(column[&prod]).or_default();
                *entry += c;
            }
            row.retain(|_, c| !c.is_zero());
            if !row.is_empty() {
                ech.insert(row);
            }
        }
    }

    let basis_cols: Vec<usize> = (0..monomials.len())
        .filter(|c| !ech.rows.contains_key(c))
        .collect();
    let basis_index: HashMap<usize, usize> =
        basis_cols.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let mut reduction = HashMap::new();
    for (col, exp) in monomials.iter().enumerate() {
        let coords = match ech.rows.get(&col) {
            Some(row) => row
                .iter()
                .filter(|(&c, _)| c != col)
                .map(|(c, a)| (basis_index[c], -a))
                .collect(),
            None => vec![(basis_index[&col], Rational::one())],
        };
        reduction.insert(exp.clone(), coords);
    }
    let mut basis: Vec<Exponent> = basis_cols.iter().map(|&c| monomials[c].clone()).collect();
    // keep coordinates aligned with a lex-sorted basis
    let mut order: Vec<usize> = (0..basis.len()).collect();
    order.sort_by(|&a, &b| basis[a].cmp(&basis[b]));
    let remap: HashMap<usize, usize> = order.iter().enumerate().map(|(new, &old)| (old, new)).collect();
    basis = order.iter().map(|&k| basis[k].clone()).collect();
    for coords in reduction.values_mut() {
        for (k, _) in coords.iter_mut() {
            *k = remap[k];
        }
        coords.sort_by_key(|(k, _)| *k);
    }
    GradedPiece {
        degree: d,
        basis,
        reduction,
    }
}

fn relation_generators(g: usize) -> Vec<(u32, LambdaPoly)> {
    (1..=g)
        .map(|m| (2 * m as u32, mumford_relation(g, m)))
        .collect()
}

/// Dimension of the degree-d piece for any d, including d above the top
/// degree.
pub fn graded_piece_dimension(g: usize, d: u32) -> usize {
    build_piece(g, &relation_generators(g), d).dimension()
}

/// Q[v_1..v_g] modulo the Mumford relations, degrees 0..=g(g+1)/2.
#[derive(Debug, Clone)]
pub struct GradedQuotientRing {
    genus: usize,
    generators: Vec<LambdaPoly>,
    pieces: Vec<GradedPiece>,
}

/// Normal form together with whether any component above the top degree was
/// discarded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub poly: LambdaPoly,
    pub dropped_above_top: bool,
}

impl GradedQuotientRing {
    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn top_degree(&self) -> u32 {
        top_degree(self.genus)
    }

    pub fn generators(&self) -> &[LambdaPoly] {
        &self.generators
    }

    pub fn pieces(&self) -> &[GradedPiece] {
        &self.pieces
    }

    pub fn piece(&self, d: u32) -> Option<&GradedPiece> {
        self.pieces.get(d as usize)
    }

    pub fn graded_dimensions(&self) -> Vec<usize> {
        self.pieces.iter().map(GradedPiece::dimension).collect()
    }

    pub fn total_dimension(&self) -> usize {
        self.pieces.iter().map(GradedPiece::dimension).sum()
    }

    /// Normal form, flagging discarded components above the top degree (the
    /// quotient vanishes there).
    pub fn normal_form_flagged(&self, p: &LambdaPoly) -> Result<NormalForm> {
        if p.genus() != self.genus {
            return Err(Error::GenusMismatch {
                left: self.genus,
                right: p.genus(),
            });
        }
        let mut out = LambdaPoly::zero(self.genus);
        let mut dropped = false;
        for (e, c) in p.terms() {
            let d = weighted_degree(e);
            let Some(piece) = self.pieces.get(d as usize) else {
                dropped = true;
                continue;
            };
            let coords = piece.reduce_monomial(e).ok_or_else(|| {
                Error::Inconsistent(format!("monomial {e:?} missing from degree {d}"))
            })?;
            for (k, a) in coords {
                out.add_term(piece.basis[*k].clone(), c * a);
            }
        }
        Ok(NormalForm {
            poly: out,
            dropped_above_top: dropped,
        })
    }

    pub fn normal_form(&self, p: &LambdaPoly) -> Result<LambdaPoly> {
        Ok(self.normal_form_flagged(p)?.poly)
    }

    /// Coefficient of the (unique) top-degree basis monomial.
    pub fn top_coefficient(&self, p: &LambdaPoly) -> Result<Rational> {
        let top = self
            .pieces
            .last()
            .ok_or_else(|| Error::Inconsistent("empty ring".into()))?;
        if top.dimension() != 1 {
            return Err(Error::Inconsistent(format!(
                "top piece has dimension {}",
                top.dimension()
            )));
        }
        let nf = self.normal_form(p)?;
        Ok(nf.coeff(&top.basis[0]))
    }
}

/// Builds the quotient ring degree by degree.
pub fn build_quotient(g: usize) -> Result<GradedQuotientRing> {
    if g == 0 {
        return Err(Error::InvalidGenus { g, min: 1 });
    }
    let gens = relation_generators(g);
    let pieces = (0..=top_degree(g))
        .map(|d| build_piece(g, &gens, d))
        .collect();
    Ok(GradedQuotientRing {
        genus: g,
        generators: gens.into_iter().map(|(_, p)| p).collect(),
        pieces,
    })
}

/// Shared, memoized quotient ring for genus g.
pub fn quotient_ring(g: usize) -> Result<Arc<GradedQuotientRing>> {
    static RINGS: OnceLock<Mutex<HashMap<usize, Arc<GradedQuotientRing>>>> = OnceLock::new();
    let rings = RINGS.get_or_init(Default::default);
    if let Some(r) = rings.lock().expect("ring cache poisoned").get(&g) {
        return Ok(r.clone());
    }
    let ring = Arc::new(build_quotient(g)?);
    Ok(rings
        .lock()
        .expect("ring cache poisoned")
        .entry(g)
        .or_insert(ring)
        .clone())
}

/// The monomial v_g v_{g-1} ... v_{g-k+1} v_{g-k}^2.
pub fn mumford_square_monomial(g: usize, k: usize) -> Result<LambdaPoly> {
    if k >= g {
        return Err(Error::Inconsistent(format!("k = {k} must be < g = {g}")));
    }
    let mut idx: Vec<usize> = (g - k + 1..=g).collect();
    idx.push(g - k);
    idx.push(g - k);
    LambdaPoly::product_of_generators(g, &idx)
}

/// Whether v_g ... v_{g-k+1} v_{g-k}^2 reduces to zero.
pub fn mumford_square_vanishing(ring: &GradedQuotientRing, k: usize) -> Result<bool> {
    let m = mumford_square_monomial(ring.genus, k)?;
    Ok(ring.normal_form(&m)?.is_zero())
}

/// Normal forms of the three expressions for c_top(Sym² E).
#[derive(Debug, Clone)]
pub struct CtopIdentity {
    pub ctop: LambdaPoly,
    pub lambda_product: LambdaPoly,
    pub giambelli: LambdaPoly,
}

impl CtopIdentity {
    pub fn holds(&self) -> bool {
        self.ctop == self.lambda_product && self.lambda_product == self.giambelli
    }
}

pub fn ctop_identity(ring: &GradedQuotientRing) -> Result<CtopIdentity> {
    let g = ring.genus;
    Ok(CtopIdentity {
        ctop: ring.normal_form(&ctop_sym2(g, false)?)?,
        lambda_product: ring.normal_form(&two_pow_lambda_product(g))?,
        giambelli: ring.normal_form(&giambelli_det(g)?)?,
    })
}

/// c_top(Sym² E) ≡ 2^g v_1...v_g ≡ Giambelli determinant in the quotient.
pub fn verify_ctop_identity(ring: &GradedQuotientRing) -> Result<bool> {
    Ok(ctop_identity(ring)?.holds())
}

/// Formal Chern classes of a direct sum E_1 ⊕ ... ⊕ E_l of bundles with ranks
/// `ranks`. Variables are c_{i,k} for summand i and 1 <= k <= rank_i, laid
/// out summand by summand.
#[derive(Debug, Clone)]
pub struct DirectSumChern {
    ranks: Vec<u32>,
    offsets: Vec<usize>,
    nvars: usize,
}

impl DirectSumChern {
    pub fn new(ranks: &[u32]) -> Self {
        let mut offsets = Vec::with_capacity(ranks.len());
        let mut n = 0usize;
        for &r in ranks {
            offsets.push(n);
            n += r as usize;
        }
        DirectSumChern {
            ranks: ranks.to_vec(),
            offsets,
            nvars: n,
        }
    }

    fn weight(&self, var: usize) -> u32 {
        let i = self.offsets.iter().rposition(|&o| o <= var).expect("var in range");
        (var - self.offsets[i] + 1) as u32
    }

    /// c_k(E_i) with c_0 = 1 and c_k = 0 above the rank.
    pub fn class(&self, summand: usize, k: u32) -> SparsePoly {
        if k == 0 {
            SparsePoly::one(self.nvars)
        } else if k > self.ranks[summand] {
            SparsePoly::zero(self.nvars)
        } else {
            SparsePoly::var(self.nvars, self.offsets[summand] + k as usize - 1)
        }
    }

    /// c_d of the direct sum by the Whitney product formula.
    pub fn total_class(&self, d: u32) -> SparsePoly {
        let mut total = SparsePoly::one(self.nvars);
        for (i, &r) in self.ranks.iter().enumerate() {
            let mut c = SparsePoly::zero(self.nvars);
            for k in 0..=r {
                c = &c + &self.class(i, k);
            }
            total = &total * &c;
        }
        let mut out = SparsePoly::zero(self.nvars);
        for (e, a) in total.terms() {
            let w: u32 = e.iter().enumerate().map(|(v, &x)| self.weight(v) * x).sum();
            if w == d {
                out.add_term(e.clone(), a.clone());
            }
        }
        out
    }

    /// sum_i c_{r_i - 1}(E_i) prod_{j != i} c_{r_j}(E_j).
    pub fn corank_one_expansion(&self) -> SparsePoly {
        let mut out = SparsePoly::zero(self.nvars);
        for i in 0..self.ranks.len() {
            let mut term = self.class(i, self.ranks[i] - 1);
            for (j, &r) in self.ranks.iter().enumerate() {
                if j != i {
                    term = &term * &self.class(j, r);
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Sets every top class c_{r_i}(E_i) to zero.
    pub fn kill_top_classes(&self, p: &SparsePoly) -> SparsePoly {
        let tops: Vec<usize> = self
            .ranks
            .iter()
            .zip(&self.offsets)
            .map(|(&r, &o)| o + r as usize - 1)
            .collect();
        let mut out = SparsePoly::zero(self.nvars);
        for (e, a) in p.terms() {
            if tops.iter().all(|&t| e[t] == 0) {
                out.add_term(e.clone(), a.clone());
            }
        }
        out
    }
}

/// Whether c_{g-2}(E_{g_1} ⊕ ... ⊕ E_{g_l}) vanishes once every top class
/// c_{g_i}(E_{g_i}) is set to zero, for a partition μ of g-1 with l >= 2.
///
/// Also checks that c_{g-2} of the sum equals the corank-one expansion
/// term by term; a mismatch is reported as an error.
pub fn direct_sum_cg2_vanishing(mu: &[u32]) -> Result<bool> {
    if mu.len() < 2 {
        return Err(Error::InvalidPartition(format!(
            "{mu:?} needs at least two parts"
        )));
    }
    if mu.contains(&0) {
        return Err(Error::InvalidPartition(format!("{mu:?} has a zero part")));
    }
    let ds = DirectSumChern::new(mu);
    let rank: u32 = mu.iter().sum();
    let c = ds.total_class(rank - 1);
    if c != ds.corank_one_expansion() {
        return Err(Error::Inconsistent(format!(
            "c_(g-2) expansion mismatch for {mu:?}"
        )));
    }
    Ok(ds.kill_top_classes(&c).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(exp: &[u32], c: i64) -> LambdaPoly {
        LambdaPoly::monomial(exp.to_vec(), Rational::from_int(c))
    }

    #[test]
    fn relations_for_genus_two() {
        // R_2 = 2 v2 - v1^2, R_4 = v2^2
        assert_eq!(mumford_relation(2, 1), mono(&[0, 1], 2).add(&mono(&[2, 0], -1)).unwrap());
        assert_eq!(mumford_relation(2, 2), mono(&[0, 2], 1));
    }

    #[test]
    fn relations_are_components_of_the_product() {
        for g in 1..=5 {
            let mut plus = LambdaPoly::one(g);
            let mut minus = LambdaPoly::one(g);
            for i in 1..=g as i64 {
                plus = plus.add(&LambdaPoly::generator(g, i)).unwrap();
                let s = if i % 2 == 0 { 1 } else { -1 };
                minus = minus
                    .add(&LambdaPoly::generator(g, i).scale(&Rational::from_int(s)))
                    .unwrap();
            }
            let comps = plus.mul(&minus).unwrap().homogeneous_components();
            for (d, comp) in comps {
                if d == 0 {
                    assert_eq!(comp, LambdaPoly::one(g));
                } else if d % 2 == 1 {
                    assert!(comp.is_zero(), "odd degree {d} survives for g={g}");
                } else {
                    assert_eq!(comp, mumford_relation(g, d as usize / 2));
                }
            }
        }
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_of_degree(2, 3), vec![vec![1, 1], vec![3, 0]]);
        assert_eq!(monomials_of_degree(3, 0), vec![vec![0, 0, 0]]);
        assert_eq!(monomials_of_degree(3, 4).len(), 4);
    }

    #[test]
    fn strict_partition_counts_small() {
        assert_eq!(strict_partition_counts(1), vec![1, 1]);
        assert_eq!(strict_partition_counts(2), vec![1, 1, 1, 1]);
        assert_eq!(strict_partition_counts(3), vec![1, 1, 1, 2, 1, 1, 1]);
    }

    #[test]
    fn graded_dimensions_small() {
        assert_eq!(build_quotient(1).unwrap().graded_dimensions(), vec![1, 1]);
        assert_eq!(build_quotient(2).unwrap().graded_dimensions(), vec![1, 1, 1, 1]);
        assert_eq!(
            build_quotient(3).unwrap().graded_dimensions(),
            vec![1, 1, 1, 2, 1, 1, 1]
        );
        assert!(build_quotient(0).is_err());
    }

    #[test]
    fn graded_dimensions_match_strict_partitions() {
        for g in 1..=5 {
            let ring = quotient_ring(g).unwrap();
            let dims: Vec<u64> = ring.graded_dimensions().iter().map(|&d| d as u64).collect();
            assert_eq!(dims, strict_partition_counts(g), "g = {g}");
            assert_eq!(ring.total_dimension(), 1 << g);
            assert_eq!(*dims.last().unwrap(), 1);
        }
    }

    #[test]
    fn basis_is_square_free() {
        for g in 1..=4 {
            let ring = quotient_ring(g).unwrap();
            for piece in ring.pieces() {
                assert!(piece.basis().iter().all(|e| is_square_free(e)), "g={g}");
            }
            assert_eq!(ring.pieces().last().unwrap().basis(), &[vec![1; g]]);
        }
    }

    #[test]
    fn nothing_survives_above_the_top_degree() {
        // Degrees top+1 ..= top+g cover a divisor of every higher monomial.
        for g in 1..=4 {
            let top = top_degree(g);
            for d in top + 1..=top + g as u32 {
                assert_eq!(graded_piece_dimension(g, d), 0, "g={g}, d={d}");
            }
        }
    }

    #[test]
    fn normal_form_examples() {
        let ring = quotient_ring(2).unwrap();
        assert_eq!(ring.normal_form(&mono(&[2, 0], 1)).unwrap(), mono(&[0, 1], 2));
        let nf = ring.normal_form_flagged(&mono(&[0, 2], 1)).unwrap();
        assert!(nf.poly.is_zero());
        assert!(nf.dropped_above_top);
        assert_eq!(ring.normal_form(&LambdaPoly::one(2)).unwrap(), LambdaPoly::one(2));
        assert!(ring.normal_form(&LambdaPoly::zero(2)).unwrap().is_zero());
        assert!(ring.normal_form(&LambdaPoly::one(3)).is_err());
        // x1^3 = 2 x1 x2
        assert_eq!(ring.normal_form(&mono(&[3, 0], 1)).unwrap(), mono(&[1, 1], 2));
    }

    #[test]
    fn square_vanishing_examples() {
        assert!(mumford_square_vanishing(&quotient_ring(1).unwrap(), 0).unwrap());
        let r3 = quotient_ring(3).unwrap();
        assert!(mumford_square_vanishing(&r3, 0).unwrap());
        // v3^2 lies in degree 6 = top, so the vanishing is a genuine reduction
        let nf = r3.normal_form_flagged(&mumford_square_monomial(3, 0).unwrap()).unwrap();
        assert!(!nf.dropped_above_top && nf.poly.is_zero());
        assert!(mumford_square_vanishing(&quotient_ring(4).unwrap(), 2).unwrap());
        assert!(mumford_square_vanishing(&r3, 3).is_err());
    }

    #[test]
    fn ctop_identity_small() {
        for g in 1..=4 {
            assert!(verify_ctop_identity(&quotient_ring(g).unwrap()).unwrap(), "g = {g}");
        }
    }

    #[test]
    fn direct_sum_examples() {
        assert!(direct_sum_cg2_vanishing(&[1, 1]).unwrap());
        assert!(direct_sum_cg2_vanishing(&[1, 2]).unwrap());
        assert!(direct_sum_cg2_vanishing(&[1, 1, 2, 3]).unwrap());
        assert!(direct_sum_cg2_vanishing(&[3]).is_err());
        assert!(direct_sum_cg2_vanishing(&[0, 2]).is_err());
    }

    #[test]
    fn single_summand_does_not_vanish() {
        // Without a second summand c_{g-2} = c_{g_1 - 1} has no top factor.
        let ds = DirectSumChern::new(&[3]);
        let c = ds.total_class(2);
        assert!(!ds.kill_top_classes(&c).is_zero());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn homogeneous(g: usize) -> impl Strategy<Value = LambdaPoly> {
            let top = top_degree(g);
            (0..=top).prop_flat_map(move |d| {
                let monos = monomials_of_degree(g, d);
                let n = monos.len();
                prop::collection::vec((0..n, -4i64..5), 1..4).prop_map(move |terms| {
                    let mut p = LambdaPoly::zero(g);
                    for (k, c) in terms {
                        p.add_term(monos[k].clone(), Rational::from_int(c));
                    }
                    p
                })
            })
        }

        fn pair() -> impl Strategy<Value = (LambdaPoly, LambdaPoly)> {
            (1usize..=4).prop_flat_map(|g| (homogeneous(g), homogeneous(g)))
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(40))]
            #[test]
            fn normal_form_is_a_ring_retraction((p, q) in pair()) {
                let ring = quotient_ring(p.genus()).unwrap();
                let np = ring.normal_form(&p).unwrap();
                let nq = ring.normal_form(&q).unwrap();
                prop_assert_eq!(ring.normal_form(&np).unwrap(), np.clone());
                prop_assert_eq!(ring.normal_form(&p.add(&q).unwrap()).unwrap(), np.add(&nq).unwrap());
                prop_assert_eq!(
                    ring.normal_form(&p.mul(&q).unwrap()).unwrap(),
                    ring.normal_form(&np.mul(&nq).unwrap()).unwrap()
                );
            }
        }
    }
}
