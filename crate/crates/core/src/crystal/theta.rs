//! The θ map: the A_{n−1}-crystal isomorphism from the n̄n-free subcrystal
//! B̂_μ^{C_n} onto B_μ^{D_n^†}, applied factor by factor.
//!
//! Each factor map θ_{α,β} is computed through the canonical isomorphism of
//! A-crystals: raise the factor to its A-highest weight vertex n̄^α 1^β,
//! transport to the D† highest weight partner 1^β n̄^α, and replay the
//! recorded lowering path. It restricts to the identity on all-unbarred
//! factors.

use super::*;
use crate::error::{Error, Result};

/// Apply θ_μ to a vertex of B̂_μ^{C_n}. Errors if some factor contains both
/// n and n̄ (such vertices lie outside the domain).
pub fn theta(v: &TensorVertex, n: usize) -> Result<TensorVertex> {
    let ct_c = CrystalType::new(CrystalFamily::C, n)?;
    let ct_d = CrystalType::new(CrystalFamily::Ddag, n)?;
    let lc_c = LetterCrystal::new(ct_c);
    let lc_d = LetterCrystal::new(ct_d);
    let a_colors = ct_c.a_colors();

    let mut out_letters = Vec::with_capacity(v.letters.len());
    for w in v.factors() {
        let has_n = w.iter().any(|l| *l == Letter::unbarred(n as u8));
        let has_nbar = w.iter().any(|l| *l == Letter::barred(n as u8));
        if has_n && has_nbar {
            return Err(Error::invalid(format!(
                "factor contains both {n} and {n}~ (outside the n\u{0304}n-free subcrystal)"
            )));
        }
        let factor = TensorVertex::single(w.to_vec());
        let (hw, path) = raise_to_hw(&lc_c, &factor, &a_colors);
        // A-hw vertices of the n̄n-free subcrystal are exactly n̄^α 1^β
        let s = w.len();
        let alpha = hw
            .letters
            .iter()
            .take_while(|l| **l == Letter::barred(n as u8))
            .count();
        let beta = s - alpha;
        let expect: Vec<Letter> = std::iter::repeat(Letter::barred(n as u8))
            .take(alpha)
            .chain(std::iter::repeat(Letter::unbarred(1)).take(beta))
            .collect();
        if hw.letters != expect {
            return Err(Error::internal(format!(
                "A-highest weight vertex {hw} of a n̄n-free factor is not of the form n̄^a 1^b"
            )));
        }
        let target: Vec<Letter> = std::iter::repeat(Letter::unbarred(1))
            .take(beta)
            .chain(std::iter::repeat(Letter::barred(n as u8)).take(alpha))
            .collect();
        let image = lower_along(&lc_d, &TensorVertex::single(target), &path);
        out_letters.extend(image.letters);
    }
    Ok(TensorVertex::new(v.shape.clone(), out_letters))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ub(i: u8) -> Letter {
        Letter::unbarred(i)
    }
    fn bd(i: u8) -> Letter {
        Letter::barred(i)
    }

    /// Rewriting-rule oracle: q̄p ↦ pq̄ for p ≠ q and p̄p ↦ (p+1)(p+1)-bar
    /// for p ≠ n, applied at the leftmost position where the word fails to
    /// be weakly decreasing in the D† order, until it is one.
    fn theta_by_rewriting(word: &[Letter], n: usize) -> Vec<Letter> {
        let ct_d = CrystalType::new(CrystalFamily::Ddag, n).unwrap();
        let mut w = word.to_vec();
        let mut steps = 0;
        loop {
            let bad = (0..w.len().saturating_sub(1))
                .find(|&i| !letter_ge(ct_d, w[i], w[i + 1]));
            let Some(i) = bad else {
                return w;
            };
            let (x, y) = (w[i], w[i + 1]);
            if x.barred && !y.barred && x.idx != y.idx {
                w.swap(i, i + 1);
            } else if x.barred && !y.barred && x.idx == y.idx {
                assert_ne!(x.idx as usize, n, "n̄n pair outside the domain");
                w[i] = ub(x.idx + 1);
                w[i + 1] = bd(x.idx + 1);
            } else {
                panic!("no rewriting rule applies to {x} {y} in {w:?}");
            }
            steps += 1;
            assert!(steps < 10_000, "rewriting did not terminate");
        }
    }

    #[test]
    fn theta_moves_barred_block_right() {
        // n̄^α 1^β ↦ 1^β n̄^α
        let n = 3;
        for alpha in 0..=3usize {
            for beta in 0..=3usize {
                if alpha + beta == 0 {
                    continue;
                }
                let word: Vec<Letter> = std::iter::repeat(bd(3))
                    .take(alpha)
                    .chain(std::iter::repeat(ub(1)).take(beta))
                    .collect();
                let v = TensorVertex::single(word);
                let img = theta(&v, n).unwrap();
                let expect: Vec<Letter> = std::iter::repeat(ub(1))
                    .take(beta)
                    .chain(std::iter::repeat(bd(3)).take(alpha))
                    .collect();
                assert_eq!(img.letters, expect);
            }
        }
    }

    #[test]
    fn theta_commuting_square_vertex() {
        // 1 ⊗ 1̄ n̄^{α−1} 1^β with β = 1 maps to 1 ⊗ 2 2̄ n̄^{α−1}
        let n = 3;
        let alpha = 2;
        let v = TensorVertex::new(
            vec![1, 3],
            vec![ub(1), bd(1), bd(3), ub(1)],
        );
        let img = theta(&v, n).unwrap();
        assert_eq!(img.letters, vec![ub(1), ub(2), bd(2), bd(3)]);
        let _ = alpha;
    }

    #[test]
    fn theta_is_identity_on_unbarred() {
        let v = TensorVertex::new(vec![1, 2], vec![ub(1), ub(2), ub(1)]);
        assert_eq!(theta(&v, 3).unwrap(), v);
    }

    #[test]
    fn theta_rejects_nbar_n_pairs() {
        let v = TensorVertex::single(vec![bd(3), ub(3)]);
        assert!(theta(&v, 3).is_err());
    }

    #[test]
    fn theta_matches_rewriting_oracle_on_single_factors() {
        // exhaustive over the n̄n-free vertices of B_s^{C_3}, s ≤ 4
        let n = 3;
        let ct_c = CrystalType::new(CrystalFamily::C, n).unwrap();
        let lc_c = LetterCrystal::new(ct_c);
        for s in 1..=4usize {
            for word in row_words(ct_c, s, &letters_desc(&lc_c)) {
                let has_n = word.contains(&ub(n as u8));
                let has_nbar = word.contains(&bd(n as u8));
                if has_n && has_nbar {
                    continue;
                }
                let v = TensorVertex::single(word.clone());
                let img = theta(&v, n).unwrap();
                let rewritten = theta_by_rewriting(&word, n);
                assert_eq!(img.letters, rewritten, "word {v}");
            }
        }
    }

    #[test]
    fn theta_commutes_with_a_crystal_operators() {
        // θ ∘ f̃_i = f̃_i ∘ θ and likewise for ẽ_i on B̂_μ^{C_3}, μ = (2,1)
        let n = 3;
        let ct_c = CrystalType::new(CrystalFamily::C, n).unwrap();
        let ct_d = CrystalType::new(CrystalFamily::Ddag, n).unwrap();
        let lc_c = LetterCrystal::new(ct_c);
        let lc_d = LetterCrystal::new(ct_d);
        for v in enumerate_b_mu(&lc_c, &[2, 1]) {
            let in_domain = v.factors().iter().all(|w| {
                !(w.contains(&ub(n as u8)) && w.contains(&bd(n as u8)))
            });
            if !in_domain {
                continue;
            }
            let tv = theta(&v, n).unwrap();
            for c in ct_c.a_colors() {
                let lhs = tensor_f(&lc_c, &v, c).map(|fv| theta(&fv, n).unwrap());
                let rhs = tensor_f(&lc_d, &tv, c);
                assert_eq!(lhs, rhs, "f_{c} at {v}");
                let lhs = tensor_e(&lc_c, &v, c).map(|ev| theta(&ev, n).unwrap());
                let rhs = tensor_e(&lc_d, &tv, c);
                assert_eq!(lhs, rhs, "e_{c} at {v}");
            }
        }
    }

    #[test]
    fn theta_pairs_a_components() {
        // the hw of θ(b)'s A-component equals θ(hw of b's A-component)
        let n = 3;
        let ct_c = CrystalType::new(CrystalFamily::C, n).unwrap();
        let ct_d = CrystalType::new(CrystalFamily::Ddag, n).unwrap();
        let lc_c = LetterCrystal::new(ct_c);
        let lc_d = LetterCrystal::new(ct_d);
        let a = ct_c.a_colors();
        for word in row_words(ct_c, 3, &letters_desc(&lc_c)) {
            if word.contains(&ub(n as u8)) && word.contains(&bd(n as u8)) {
                continue;
            }
            let v = TensorVertex::single(word);
            let (hw_c, _) = raise_to_hw(&lc_c, &v, &a);
            let (hw_d, _) = raise_to_hw(&lc_d, &theta(&v, n).unwrap(), &a);
            assert_eq!(theta(&hw_c, n).unwrap(), hw_d);
        }
    }
}
