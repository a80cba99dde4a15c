//! Kostka-Foulkes polynomials by three independent routes (stable KL of
//! type A, the charge statistic on semistandard tableaux, and the type-A
//! one-dimensional sum), the cocharge variants, Littlewood-Richardson
//! coefficients through exact character products, and the K-polynomials.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::{CharRing, QPoly, SeriesCap};
use crate::error::{Error, Result};
use crate::lusztig::{diamond_partitions, stable_kl_partitions, Kostant};
use crate::weights::{
    dominance_geq, norms, ClassicalType, Diamond, DominantWeight, Family, Partition,
};

/// Littlewood-Richardson coefficients, computed lazily as coefficients of
/// Schur products in the character ring and cached per (λ, γ) pair.
pub struct LrCache {
    rings: HashMap<usize, CharRing>,
    products: HashMap<(Vec<i64>, Vec<i64>, usize), BTreeMap<Vec<i64>, i64>>,
}

impl Default for LrCache {
    fn default() -> Self {
        Self::new()
    }
}

impl LrCache {
    pub fn new() -> Self {
        LrCache { rings: HashMap::new(), products: HashMap::new() }
    }

    fn product_expansion(
        &mut self,
        a: &[i64],
        b: &[i64],
        n: usize,
    ) -> Result<&BTreeMap<Vec<i64>, i64>> {
        let key = (a.to_vec(), b.to_vec(), n);
        if !self.products.contains_key(&key) {
            let ring = self.rings.entry(n).or_insert_with(|| CharRing::new(n));
            let pa = ring.schur(a)?;
            let pb = ring.schur(b)?;
            let prod = pa.mul(&pb, &SeriesCap::exact());
            let mut out = BTreeMap::new();
            for (nu, coeff) in ring.schur_expand(&prod)? {
                let c = coeff.coeff_half(0);
                if coeff != QPoly::constant(c) {
                    return Err(Error::internal("schur product with non-constant coefficient"));
                }
                if c != 0 {
                    out.insert(nu, c);
                }
            }
            self.products.insert(key.clone(), out);
        }
        Ok(&self.products[&key])
    }

    /// c^ν_{λγ}: the coefficient of s_ν in s_λ · s_γ (all partitions).
    pub fn lr_coefficient(
        &mut self,
        lambda: &Partition,
        gamma: &Partition,
        nu: &Partition,
    ) -> Result<i64> {
        if nu.size() != lambda.size() + gamma.size() {
            return Ok(0);
        }
        if !nu.contains(lambda) || !nu.contains(gamma) {
            return Ok(0);
        }
        let n = (lambda.len() + gamma.len()).max(nu.len()).max(2);
        let exp = self.product_expansion(&lambda.padded(n), &gamma.padded(n), n)?;
        Ok(exp.get(&nu.padded(n)).copied().unwrap_or(0))
    }

    /// Rational gl_n tensor coefficient c^λ_{γν} for dominant weights ν and
    /// λ of equal length and a partition γ, via translation to partitions.
    pub fn tensor_coefficient(
        &mut self,
        gamma: &Partition,
        nu: &DominantWeight,
        lambda: &DominantWeight,
    ) -> Result<i64> {
        let n = nu.len();
        if lambda.len() != n {
            return Err(Error::invalid("tensor coefficient needs equal-length weights"));
        }
        let shift = nu
            .coords()
            .iter()
            .chain(lambda.coords())
            .min()
            .copied()
            .unwrap_or(0)
            .min(0);
        let to_partition = |w: &DominantWeight| {
            Partition::new(w.coords().iter().map(|&c| c - shift).collect()).unwrap()
        };
        let lam_p = to_partition(lambda);
        let nu_p = to_partition(nu);
        if lam_p.len() > n || nu_p.len() > n {
            return Ok(0);
        }
        // c^{λ+(k^n)}_{γ, ν+(k^n)} with partitions of at most n parts is a
        // plain Littlewood-Richardson coefficient
        if gamma.len() > n {
            return Ok(0);
        }
        self.lr_coefficient(&nu_p, gamma, &lam_p)
    }
}

/// Semistandard tableaux of the given shape and content, as row lists.
pub fn ssyt(shape: &Partition, content: &Partition) -> Vec<Vec<Vec<u8>>> {
    if shape.size() != content.size() {
        return Vec::new();
    }
    let rows: Vec<usize> = shape.parts().iter().map(|&p| p as usize).collect();
    let nvals = content.len();
    let mut counts: Vec<i64> = content.parts().to_vec();
    let mut tab: Vec<Vec<u8>> = rows.iter().map(|&r| vec![0u8; r]).collect();
    let mut out = Vec::new();
    fn rec(
        rows: &[usize],
        nvals: usize,
        counts: &mut Vec<i64>,
        tab: &mut Vec<Vec<u8>>,
        r: usize,
        c: usize,
        out: &mut Vec<Vec<Vec<u8>>>,
    ) {
        if r == rows.len() {
            out.push(tab.clone());
            return;
        }
        if c == rows[r] {
            rec(rows, nvals, counts, tab, r + 1, 0, out);
            return;
        }
        let min_left = if c > 0 { tab[r][c - 1] } else { 1 };
        let min_up = if r > 0 && c < rows[r - 1] { tab[r - 1][c] + 1 } else { 1 };
        let lo = min_left.max(min_up).max((r + 1) as u8);
        for v in lo..=(nvals as u8) {
            if counts[(v - 1) as usize] == 0 {
                continue;
            }
            counts[(v - 1) as usize] -= 1;
            tab[r][c] = v;
            rec(rows, nvals, counts, tab, r, c + 1, out);
            counts[(v - 1) as usize] += 1;
        }
    }
    rec(&rows, nvals, &mut counts, &mut tab, 0, 0, &mut out);
    out
}

/// Reading word: rows bottom to top, each left to right.
pub fn reading_word(tab: &[Vec<u8>]) -> Vec<u8> {
    tab.iter().rev().flatten().copied().collect()
}

/// Charge of a word of partition content, by repeated extraction of
/// standard subwords (scan right to left cyclically for the next needed
/// value) and the index statistic on each.
pub fn charge(word: &[u8]) -> i64 {
    let mut w: Vec<u8> = word.to_vec();
    let mut total = 0i64;
    while !w.is_empty() {
        let max_val = *w.iter().max().unwrap();
        let mut positions: Vec<usize> = Vec::with_capacity(max_val as usize);
        let mut from: Option<usize> = None;
        for v in 1..=max_val {
            let start = from.unwrap_or(w.len());
            let mut found = None;
            for step in 1..=w.len() {
                let idx = (start + w.len() - step) % w.len();
                if w[idx] == v {
                    found = Some(idx);
                    break;
                }
            }
            let idx = found.unwrap_or_else(|| panic!("charge: content is not a partition"));
            positions.push(idx);
            from = Some(idx);
        }
        let mut index = 0i64;
        for i in 1..positions.len() {
            if positions[i] > positions[i - 1] {
                index += 1;
            }
            total += index;
        }
        let mut remove: Vec<usize> = positions.clone();
        remove.sort_unstable();
        for idx in remove.into_iter().rev() {
            w.remove(idx);
        }
    }
    total
}

/// Kostka-Foulkes polynomial K_{λ,μ}(q), default route: the type-A stable
/// KL polynomial. Zero when |λ| ≠ |μ| or λ does not dominate μ.
pub fn kostka_foulkes(lambda: &Partition, mu: &Partition) -> Result<QPoly> {
    let n = lambda.len().max(mu.len()).max(2);
    let t = ClassicalType::new(Family::A, n)?;
    let mut kostant = Kostant::standard(t);
    stable_kl_partitions(lambda, mu, &mut kostant)
}

/// Route 2: Σ q^{charge(T)} over semistandard tableaux of shape λ and
/// content μ.
pub fn kf_charge(lambda: &Partition, mu: &Partition) -> QPoly {
    let mut out = QPoly::zero();
    for t in ssyt(lambda, mu) {
        out += &QPoly::monomial(charge(&reading_word(&t)), 1);
    }
    out
}

/// Route 3: K_{λ,μ}(q) = q^{||μ||} X̄^∅_{λ,μ}(q^{−1}) through the type-A
/// crystal one-dimensional sum.
pub fn kf_from_one_dim(lambda: &Partition, mu: &Partition) -> Result<QPoly> {
    let n = (mu.len() + 1).max(lambda.len()).max(2);
    let x = crate::onedim::x_sum(lambda, mu, crate::onedim::Kind::Empty, n)?;
    let (_, nn) = norms(mu.parts());
    Ok(x.value.bar().shift(nn))
}

/// Cocharge Kostka-Foulkes polynomial K̄_{λ,μ}(q) = q^{||μ||} K_{λ,μ}(q^{−1}).
pub fn cocharge_kf(lambda: &Partition, mu: &Partition) -> Result<QPoly> {
    let (_, nn) = norms(mu.parts());
    Ok(kostka_foulkes(lambda, mu)?.bar().shift(nn))
}

/// Partitions ν of |μ| dominating μ in the type-A order (the only ν with
/// K̄_{ν,μ} ≠ 0).
pub fn dominating_partitions(mu: &Partition) -> Vec<Partition> {
    let size = mu.size();
    let n = mu.len().max(1);
    let t = ClassicalType::new(Family::A, n.max(2)).unwrap();
    Partition::all_of_size(size, n)
        .into_iter()
        .filter(|nu| {
            let maxlen = n.max(2);
            nu.len() <= n && dominance_geq(&nu.padded(maxlen), &mu.padded(maxlen), t)
        })
        .collect()
}

/// K-polynomial K̄^⋄_{λ,μ}(q) = q^{(|μ|−|λ|)/2} Σ_ν K̄_{ν,μ}(q)
/// Σ_{γ ∈ P^⋄} c^ν_{λγ}, the sum over partitions ν of |μ| dominating μ and
/// ⋄-tileable γ of size |ν| − |λ|.
pub fn k_polynomial(
    lambda: &Partition,
    mu: &Partition,
    diamond: Diamond,
    lr: &mut LrCache,
) -> Result<QPoly> {
    let mut total = QPoly::zero();
    let gsize = mu.size() - lambda.size();
    if gsize < 0 {
        return Ok(QPoly::zero());
    }
    for nu in dominating_partitions(mu) {
        let mut mult = 0i64;
        for gamma in diamond_partitions(diamond, gsize, nu.len()) {
            mult += lr.lr_coefficient(lambda, &gamma, &nu)?;
        }
        if mult == 0 {
            continue;
        }
        total += &cocharge_kf(&nu, mu)?.scale(mult);
    }
    // the prefactor q^{(|μ|−|λ|)/2} lives in half-units
    Ok(total.shift_half(gsize))
}

/// Littlewood branching sum Σ_{γ even columns} c^ν_{λγ}, the multiplicity
/// of the A_{n−1}-module of highest weight λ in the restriction of the
/// D_n-module of highest weight ν.
pub fn branching_check(nu: &Partition, lambda: &Partition, lr: &mut LrCache) -> Result<i64> {
    let gsize = nu.size() - lambda.size();
    if gsize < 0 {
        return Ok(0);
    }
    let mut total = 0i64;
    for gamma in diamond_partitions(Diamond::OneOne, gsize, nu.len()) {
        total += lr.lr_coefficient(lambda, &gamma, nu)?;
    }
    Ok(total)
}
