//! The rational gl_n character ring: multivariate Laurent polynomials in
//! x_1..x_n with [`QPoly`] coefficients, the antisymmetrizer J, the Demazure
//! operator E given by the bialternant, and Schur expansion.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use super::qpoly::QPoly;
use crate::error::{Error, Result};

/// Truncation caps for series operations. `None` means exact.
#[derive(Clone, Copy, Debug, Default)]
pub struct SeriesCap {
    /// Keep q-exponents ≤ this many half-units.
    pub q_half_max: Option<i64>,
    /// Keep monomials with total x-degree ≤ this.
    pub x_total_max: Option<i64>,
}

impl SeriesCap {
    pub fn exact() -> Self {
        SeriesCap::default()
    }

    pub fn q_half(half: i64) -> Self {
        SeriesCap { q_half_max: Some(half), x_total_max: None }
    }

    pub fn x_total(deg: i64) -> Self {
        SeriesCap { q_half_max: None, x_total_max: Some(deg) }
    }

    fn admits(&self, exps: &[i64]) -> bool {
        match self.x_total_max {
            Some(cap) => exps.iter().sum::<i64>() <= cap,
            None => true,
        }
    }

    fn clip(&self, p: QPoly) -> QPoly {
        match self.q_half_max {
            Some(cap) => p.truncate_half(cap),
            None => p,
        }
    }
}

/// Multivariate Laurent polynomial over `QPoly`. Exponent vectors all have
/// length `nvars`; no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq)]
pub struct CharPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, QPoly>,
}

impl CharPoly {
    pub fn zero(nvars: usize) -> Self {
        CharPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        CharPoly::monomial(vec![0; nvars], QPoly::one())
    }

    pub fn monomial(exps: Vec<i64>, coeff: QPoly) -> Self {
        let nvars = exps.len();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        CharPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[i64]) -> QPoly {
        self.terms.get(exps).cloned().unwrap_or_else(QPoly::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i64>, &QPoly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exps: Vec<i64>, coeff: &QPoly) {
        debug_assert_eq!(exps.len(), self.nvars);
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, coeff.clone());
            }
        }
    }

    pub fn add(&self, rhs: &CharPoly) -> CharPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn sub(&self, rhs: &CharPoly) -> CharPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), &-c);
        }
        out
    }

    pub fn scale_q(&self, c: &QPoly) -> CharPoly {
        let mut out = CharPoly::zero(self.nvars);
        for (e, k) in &self.terms {
            out.add_term(e.clone(), &(k * c));
        }
        out
    }

    /// Product truncated by `cap`; pass `SeriesCap::exact()` for the exact
    /// ring product.
    pub fn mul(&self, rhs: &CharPoly, cap: &SeriesCap) -> CharPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = CharPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let exps: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                if !cap.admits(&exps) {
                    continue;
                }
                let c = cap.clip(c1 * c2);
                out.add_term(exps, &c);
            }
        }
        out
    }

    /// Drop terms outside the cap (used after sums of capped products).
    pub fn truncated(&self, cap: &SeriesCap) -> CharPoly {
        let mut out = CharPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if cap.admits(e) {
                out.add_term(e.clone(), &cap.clip(c.clone()));
            }
        }
        out
    }

    fn permuted(&self, perm: &[usize], sign: i64) -> CharPoly {
        let mut out = CharPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let exps: Vec<i64> = perm.iter().map(|&i| e[i]).collect();
            out.add_term(exps, &c.scale(sign));
        }
        out
    }

    /// Lexicographically largest exponent vector.
    pub fn leading(&self) -> Option<(&Vec<i64>, &QPoly)> {
        self.terms.iter().next_back()
    }
}

impl fmt::Debug for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| format!("({c})*x^{e:?}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn perm_sign(perm: &[usize]) -> i64 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1i64;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// Character-ring context for a fixed number of variables. Caches the
/// Vandermonde alternant and Schur polynomials.
pub struct CharRing {
    n: usize,
    rho: Vec<i64>,
    perms: Vec<(Vec<usize>, i64)>,
    vandermonde: CharPoly,
    schur_cache: std::cell::RefCell<std::collections::HashMap<Vec<i64>, CharPoly>>,
}

impl CharRing {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        let rho: Vec<i64> = (0..n).map(|i| (n - 1 - i) as i64).collect();
        let perms: Vec<(Vec<usize>, i64)> = (0..n)
            .permutations(n)
            .map(|p| {
                let s = perm_sign(&p);
                (p, s)
            })
            .collect();
        let mut ring = CharRing {
            n,
            rho,
            perms,
            vandermonde: CharPoly::zero(n),
            schur_cache: Default::default(),
        };
        let rho_mono = CharPoly::monomial(ring.rho.clone(), QPoly::one());
        ring.vandermonde = ring.antisymmetrize(&rho_mono);
        ring
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn rho(&self) -> &[i64] {
        &self.rho
    }

    /// J(f) = Σ_{w ∈ S_n} (−1)^{ℓ(w)} w·f, permuting exponent vectors.
    pub fn antisymmetrize(&self, f: &CharPoly) -> CharPoly {
        assert_eq!(f.nvars(), self.n);
        let mut out = CharPoly::zero(self.n);
        for (perm, sign) in &self.perms {
            out = out.add(&f.permuted(perm, *sign));
        }
        out
    }

    /// Demazure operator E(f) = J(x^ρ)⁻¹ J(x^ρ f), computed by iterated
    /// leading-term elimination against the Vandermonde alternant. The
    /// division must be exact; a nonzero remainder is an internal error.
    pub fn demazure_e(&self, f: &CharPoly) -> Result<CharPoly> {
        assert_eq!(f.nvars(), self.n);
        let shifted = f.mul(
            &CharPoly::monomial(self.rho.clone(), QPoly::one()),
            &SeriesCap::exact(),
        );
        let mut num = self.antisymmetrize(&shifted);
        // Quotient exponents stay inside the numerator's bounding box shifted
        // by rho; leaving it means the division does not terminate.
        let mut lo = vec![i64::MAX; self.n];
        let mut hi = vec![i64::MIN; self.n];
        for (e, _) in num.iter() {
            for i in 0..self.n {
                lo[i] = lo[i].min(e[i]);
                hi[i] = hi[i].max(e[i]);
            }
        }
        let mut quot = CharPoly::zero(self.n);
        while let Some((beta, c)) = num.leading() {
            let beta = beta.clone();
            let c = c.clone();
            let gamma: Vec<i64> = beta.iter().zip(&self.rho).map(|(b, r)| b - r).collect();
            let in_box = gamma
                .iter()
                .enumerate()
                .all(|(i, &g)| g + self.rho[i] >= lo[i] && g + self.rho[i] <= hi[i]);
            if !in_box {
                return Err(Error::internal(format!(
                    "alternant division left a remainder at x^{beta:?}"
                )));
            }
            quot.add_term(gamma.clone(), &c);
            for (wrho, sign) in self.vandermonde.iter() {
                let e: Vec<i64> = gamma.iter().zip(wrho).map(|(g, w)| g + w).collect();
                num.add_term(e, &-&(sign * &c));
            }
        }
        Ok(quot)
    }

    /// Rational Schur character s_λ[X] for a dominant weight λ (parts may be
    /// negative). Computed as E(x^λ) and cached.
    pub fn schur(&self, lambda: &[i64]) -> Result<CharPoly> {
        if lambda.len() > self.n {
            return Err(Error::invalid(format!(
                "weight {lambda:?} has more than {} parts",
                self.n
            )));
        }
        let mut lam = lambda.to_vec();
        lam.resize(self.n, 0);
        if lam.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(format!("weight {lambda:?} is not dominant")));
        }
        if let Some(s) = self.schur_cache.borrow().get(&lam) {
            return Ok(s.clone());
        }
        let mono = CharPoly::monomial(lam.clone(), QPoly::one());
        let s = self.demazure_e(&mono)?;
        self.schur_cache.borrow_mut().insert(lam, s.clone());
        Ok(s)
    }

    /// Expand a symmetric polynomial in the Schur basis by repeatedly
    /// stripping the lexicographically leading monomial. Returns the map
    /// dominant weight ↦ coefficient.
    pub fn schur_expand(&self, f: &CharPoly) -> Result<BTreeMap<Vec<i64>, QPoly>> {
        let mut rest = f.clone();
        let mut out = BTreeMap::new();
        while let Some((lead, c)) = rest.leading() {
            let lam = lead.clone();
            let c = c.clone();
            if lam.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::internal(format!(
                    "schur expansion hit non-dominant leading term x^{lam:?}"
                )));
            }
            let s = self.schur(&lam)?;
            rest = rest.sub(&s.scale_q(&c));
            out.insert(lam, c);
        }
        Ok(out)
    }
}
