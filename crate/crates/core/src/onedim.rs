//! One-dimensional sums X̄ of kinds ∅ and (1,1), rank stability, and the
//! full verification pipeline for the X = K identity of kind (1,1): the θ
//! bijection F → E, the coenergy matching conditions, the combinatorial
//! identity relating both graded counts, and the polynomial comparison
//! against the K-polynomial.

use std::fmt;

use crate::algebra::QPoly;
use crate::crystal::{
    e_set, highest_weight_vertices, is_hw_for, theta, CrystalFamily, CrystalType, LetterCrystal,
};
use crate::energy::Energy;
use crate::error::{Error, Result};
use crate::kostka::{k_polynomial, LrCache};
use crate::weights::{Diamond, Partition};

/// Kind of stable one-dimensional sum computed on the crystal side: ∅ uses
/// type-A crystals, (1,1) uses type-C crystals.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Kind {
    Empty,
    OneOne,
}

impl Kind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "empty" | "" => Ok(Kind::Empty),
            "11" => Ok(Kind::OneOne),
            _ => Err(Error::invalid(format!("unknown kind {s:?} (use empty|11)"))),
        }
    }

    pub fn diamond(&self) -> Diamond {
        match self {
            Kind::Empty => Diamond::Empty,
            Kind::OneOne => Diamond::OneOne,
        }
    }

    fn crystal_family(&self) -> CrystalFamily {
        match self {
            Kind::Empty => CrystalFamily::A,
            Kind::OneOne => CrystalFamily::C,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Empty => write!(f, "empty"),
            Kind::OneOne => write!(f, "11"),
        }
    }
}

/// A computed one-dimensional sum.
#[derive(Clone, Debug)]
pub struct OneDimSum {
    pub lambda: Partition,
    pub mu: Partition,
    pub kind: Kind,
    pub rank: usize,
    pub value: QPoly,
    pub vertices: usize,
}

/// The smallest rank at which both the F- and E-side computations are
/// defined for shapes with `m` parts.
pub fn default_rank(m: usize) -> usize {
    (m + 1).max(2)
}

fn shape_of(mu: &Partition) -> Vec<usize> {
    mu.parts().iter().map(|&p| p as usize).collect()
}

/// X̄_{λ,μ}(q) = Σ_{b ∈ F_{λ,μ}} q^{D̄(b)}.
pub fn x_sum(lambda: &Partition, mu: &Partition, kind: Kind, n: usize) -> Result<OneDimSum> {
    if n < mu.len() || n < lambda.len() {
        return Err(Error::RankTooSmall(format!(
            "rank {n} too small for λ={lambda}, μ={mu}"
        )));
    }
    if n < 2 {
        return Err(Error::RankTooSmall("rank must be at least 2".into()));
    }
    let ct = CrystalType::new(kind.crystal_family(), n)?;
    let lc = LetterCrystal::new(ct);
    let mut energy = Energy::new(ct);
    let shape = shape_of(mu);
    let f = highest_weight_vertices(&lc, &shape, Some(lambda));
    let mut value = QPoly::zero();
    let (_, nn_mu) = crate::weights::norms(mu.parts());
    for b in &f {
        let d = energy.coenergy(b)?;
        if d < 0 || d > 2 * nn_mu {
            return Err(Error::internal(format!(
                "coenergy {d} out of [0, {}] at {b}",
                2 * nn_mu
            )));
        }
        value += &QPoly::monomial(d, 1);
    }
    debug_assert_eq!(value.eval_one(), f.len() as i64);
    debug_assert!(value.has_nonnegative_coeffs() || value.is_zero());
    Ok(OneDimSum {
        lambda: lambda.clone(),
        mu: mu.clone(),
        kind,
        rank: n,
        value,
        vertices: f.len(),
    })
}

/// Report of one X = K verification cell for kind (1,1).
#[derive(Clone, Debug)]
pub struct Theorem4Report {
    pub lambda: Partition,
    pub mu: Partition,
    pub rank: usize,
    pub x: QPoly,
    pub k: QPoly,
    pub f_count: usize,
    pub e_count: usize,
    pub pass: bool,
    pub failures: Vec<String>,
}

/// Run the entire kind-(1,1) pipeline for one (λ, μ):
/// 1. θ restricts to a bijection F_{λ,μ} → E_{λ,μ};
/// 2. D̃ agrees with D̄^A on the unbarred index vertices and is constant on
///    the collected component members, and D̄(v) = D̃(θ(v)) + (|μ|−|λ|)/2;
/// 3. the graded identity X̄ = q^{(|μ|−|λ|)/2} Σ_b q^{D̄^A(b)} |E_{λ,μ,b}|;
/// 4. the polynomial identity X̄ = K̄^{(1,1)}.
pub fn verify_theorem4(
    lambda: &Partition,
    mu: &Partition,
    n: usize,
    lr: &mut LrCache,
) -> Result<Theorem4Report> {
    if mu.len() >= n {
        return Err(Error::RankTooSmall(format!(
            "need n > parts(μ): n = {n}, μ = {mu}"
        )));
    }
    let mut failures = Vec::new();
    let shape = shape_of(mu);
    let ct_c = CrystalType::new(CrystalFamily::C, n)?;
    let ct_d = CrystalType::new(CrystalFamily::Ddag, n)?;
    let lc_c = LetterCrystal::new(ct_c);
    let lc_d = LetterCrystal::new(ct_d);
    let mut en_c = Energy::new(ct_c);
    let mut en_d = Energy::new(ct_d);
    let mut en_a = Energy::new(CrystalType::new(CrystalFamily::A, n)?);

    let f = highest_weight_vertices(&lc_c, &shape, Some(lambda));
    let e = e_set(&shape, lambda, n)?;

    // (1) θ maps F into E injectively and the counts agree
    let mut images = std::collections::BTreeSet::new();
    for v in &f {
        let img = theta(v, n)?;
        if !is_hw_for(&lc_d, &img, &ct_d.a_colors()) {
            failures.push(format!("θ({v}) = {img} is not an A-highest weight vertex"));
        }
        if img.weight(n) != lambda.padded(n) {
            failures.push(format!("θ({v}) = {img} has wrong weight"));
        }
        if !e.contains(&img) {
            failures.push(format!("θ({v}) = {img} lies outside E"));
        }
        if !images.insert(img.encode()) {
            failures.push(format!("θ is not injective at {v}"));
        }
    }
    if f.len() != e.len() {
        failures.push(format!("|F| = {} but |E| = {}", f.len(), e.len()));
    }

    // (2) coenergy matching
    let diff = mu.size() - lambda.size();
    for v in &f {
        let dbar = en_c.coenergy(v)?;
        let dtilde = en_d.coenergy_tilde(&theta(v, n)?)?;
        if 2 * dbar != 2 * dtilde + diff {
            failures.push(format!(
                "D̄({v}) = {dbar} but D̃(θ) = {dtilde} with |μ|−|λ| = {diff}"
            ));
        }
    }
    let mut rhs = QPoly::zero();
    for (b, members) in &e.per_component {
        let da = en_a.coenergy(b)?;
        let dtilde_b = en_d.coenergy_tilde(b)?;
        if da != dtilde_b {
            failures.push(format!("D̃({b}) = {dtilde_b} differs from D̄^A = {da}"));
        }
        for c in members {
            let dtilde_c = en_d.coenergy_tilde(c)?;
            if dtilde_c != dtilde_b {
                failures.push(format!(
                    "D̃ not constant on the component of {b}: {c} gives {dtilde_c} ≠ {dtilde_b}"
                ));
            }
        }
        rhs += &QPoly::monomial(da, 1).scale(members.len() as i64);
    }

    // (3) the graded identity, with the q^{(|μ|−|λ|)/2} prefactor
    let x = x_sum(lambda, mu, Kind::OneOne, n)?;
    let rhs_shifted = rhs.shift_half(diff);
    if x.value != rhs_shifted {
        failures.push(format!(
            "graded identity fails: X̄ = {} vs {}",
            x.value, rhs_shifted
        ));
    }

    // (4) X = K
    let k = k_polynomial(lambda, mu, Diamond::OneOne, lr)?;
    if x.value != k {
        failures.push(format!("X̄ = {} but K̄ = {}", x.value, k));
    }

    Ok(Theorem4Report {
        lambda: lambda.clone(),
        mu: mu.clone(),
        rank: n,
        x: x.value,
        k,
        f_count: f.len(),
        e_count: e.len(),
        pass: failures.is_empty(),
        failures,
    })
}

/// X̄ computed at several ranks must give the same polynomial.
pub fn verify_stability(
    lambda: &Partition,
    mu: &Partition,
    kind: Kind,
    ranks: &[usize],
) -> Result<(bool, Vec<OneDimSum>)> {
    let sums: Vec<OneDimSum> = ranks
        .iter()
        .map(|&n| x_sum(lambda, mu, kind, n))
        .collect::<Result<_>>()?;
    let pass = sums.windows(2).all(|w| w[0].value == w[1].value);
    Ok((pass, sums))
}
