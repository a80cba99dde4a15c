//! Classical crystal graphs: letters of B_1 for types A_{n−1}, C_n and the
//! daggered D_n^†, row words for B_s, tensor vertices of B_μ, and the
//! Kashiwara operators via the signature rule.
//!
//! D_n^† is the standard D_n crystal relabeled through the diagram flip
//! i ↦ n−i on colors and j ↦ (n+1−j)-bar on letters, so its color set is
//! {0, 1, …, n−1} and its letter order is n̄ < … < 2̄ < {1, 1̄} < 2 < … < n
//! with 1 and 1̄ incomparable.

mod sets;
mod theta;

pub use sets::{e_set, f_a_set, highest_weight_vertices, ESet};
pub use theta::theta;

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// One of the three crystal families used on the X side. Type B enters the
/// artifact only on the KL side, which is crystal-free.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CrystalFamily {
    A,
    C,
    Ddag,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct CrystalType {
    pub family: CrystalFamily,
    pub n: usize,
}

impl CrystalType {
    pub fn new(family: CrystalFamily, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid("crystal rank must be at least 2"));
        }
        Ok(CrystalType { family, n })
    }

    /// The full (classical) color set: J^A = {1..n−1}, J = {1..n},
    /// J^† = {0..n−1}.
    pub fn colors(&self) -> Vec<u8> {
        match self.family {
            CrystalFamily::A => (1..self.n as u8).collect(),
            CrystalFamily::C => (1..=self.n as u8).collect(),
            CrystalFamily::Ddag => (0..self.n as u8).collect(),
        }
    }

    /// The A_{n−1} sub-colors {1..n−1} (remove node n for C, node 0 for D†).
    pub fn a_colors(&self) -> Vec<u8> {
        (1..self.n as u8).collect()
    }

    /// The highest weight letter of B_1 (the full-color source vertex).
    pub fn hw_letter(&self) -> Letter {
        match self.family {
            CrystalFamily::A | CrystalFamily::C => Letter::unbarred(1),
            CrystalFamily::Ddag => Letter::barred(self.n as u8),
        }
    }
}

/// A letter of B_1: index 1..n, optionally barred. Weight is +ε_i or −ε_i.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter {
    pub idx: u8,
    pub barred: bool,
}

impl Letter {
    pub fn unbarred(idx: u8) -> Self {
        Letter { idx, barred: false }
    }

    pub fn barred(idx: u8) -> Self {
        Letter { idx, barred: true }
    }

    pub fn byte(&self) -> u8 {
        self.idx | if self.barred { 0x80 } else { 0 }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.idx, if self.barred { "~" } else { "" })
    }
}

/// Rank of a letter in the reachability order of its B_1 graph. For D† the
/// letters 1 and 1̄ share a rank and are incomparable.
fn order_rank(ct: CrystalType, x: Letter) -> i32 {
    let n = ct.n as i32;
    let j = x.idx as i32;
    match ct.family {
        CrystalFamily::A => j,
        CrystalFamily::C => {
            if x.barred {
                2 * n + 1 - j
            } else {
                j
            }
        }
        CrystalFamily::Ddag => {
            if x.barred {
                n + 1 - j
            } else {
                n - 1 + j
            }
        }
    }
}

/// x ≤ y in the letter order of `ct` (partial for D†).
pub fn letter_le(ct: CrystalType, x: Letter, y: Letter) -> bool {
    x == y || order_rank(ct, x) < order_rank(ct, y)
}

pub fn letter_ge(ct: CrystalType, x: Letter, y: Letter) -> bool {
    letter_le(ct, y, x)
}

/// The B_1 crystal graph: per-color arrow maps on letters.
pub struct LetterCrystal {
    pub ct: CrystalType,
    // indexed by color as usize
    f_arrows: Vec<Vec<(Letter, Letter)>>,
}

impl LetterCrystal {
    pub fn new(ct: CrystalType) -> Self {
        let n = ct.n as u8;
        let mut f_arrows: Vec<Vec<(Letter, Letter)>> = vec![Vec::new(); ct.n + 1];
        match ct.family {
            CrystalFamily::A => {
                for i in 1..n {
                    f_arrows[i as usize].push((Letter::unbarred(i), Letter::unbarred(i + 1)));
                }
            }
            CrystalFamily::C => {
                for i in 1..n {
                    f_arrows[i as usize].push((Letter::unbarred(i), Letter::unbarred(i + 1)));
                    f_arrows[i as usize].push((Letter::barred(i + 1), Letter::barred(i)));
                }
                f_arrows[n as usize].push((Letter::unbarred(n), Letter::barred(n)));
            }
            CrystalFamily::Ddag => {
                f_arrows[0].push((Letter::barred(2), Letter::unbarred(1)));
                f_arrows[0].push((Letter::barred(1), Letter::unbarred(2)));
                for i in 1..n {
                    f_arrows[i as usize].push((Letter::unbarred(i), Letter::unbarred(i + 1)));
                    f_arrows[i as usize].push((Letter::barred(i + 1), Letter::barred(i)));
                }
            }
        }
        LetterCrystal { ct, f_arrows }
    }

    pub fn arrows(&self, color: u8) -> &[(Letter, Letter)] {
        &self.f_arrows[color as usize]
    }

    pub fn f_letter(&self, color: u8, x: Letter) -> Option<Letter> {
        self.f_arrows[color as usize]
            .iter()
            .find(|(a, _)| *a == x)
            .map(|(_, b)| *b)
    }

    pub fn e_letter(&self, color: u8, x: Letter) -> Option<Letter> {
        self.f_arrows[color as usize]
            .iter()
            .find(|(_, b)| *b == x)
            .map(|(a, _)| *a)
    }

    fn phi_letter(&self, color: u8, x: Letter) -> bool {
        self.f_arrows[color as usize].iter().any(|(a, _)| *a == x)
    }

    fn eps_letter(&self, color: u8, x: Letter) -> bool {
        self.f_arrows[color as usize].iter().any(|(_, b)| *b == x)
    }

    /// All letters, ascending in the reachability order (the tied D† pair is
    /// listed barred first).
    pub fn letters(&self) -> Vec<Letter> {
        let n = self.ct.n as u8;
        let mut out: Vec<Letter> = match self.ct.family {
            CrystalFamily::A => (1..=n).map(Letter::unbarred).collect(),
            _ => (1..=n)
                .map(Letter::unbarred)
                .chain((1..=n).map(Letter::barred))
                .collect(),
        };
        out.sort_by_key(|&x| (order_rank(self.ct, x), x.barred as u8));
        out
    }
}

/// A vertex of B_μ = B_{μ1} ⊗ ⋯ ⊗ B_{μm}, stored as the flat letter list
/// with the shape alongside.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TensorVertex {
    pub shape: Vec<usize>,
    pub letters: Vec<Letter>,
}

impl TensorVertex {
    pub fn new(shape: Vec<usize>, letters: Vec<Letter>) -> Self {
        debug_assert_eq!(shape.iter().sum::<usize>(), letters.len());
        TensorVertex { shape, letters }
    }

    pub fn num_factors(&self) -> usize {
        self.shape.len()
    }

    /// The letters of factor `i`.
    pub fn factor(&self, i: usize) -> &[Letter] {
        let start: usize = self.shape[..i].iter().sum();
        &self.letters[start..start + self.shape[i]]
    }

    pub fn factors(&self) -> Vec<&[Letter]> {
        (0..self.shape.len()).map(|i| self.factor(i)).collect()
    }

    pub fn single(word: Vec<Letter>) -> Self {
        TensorVertex { shape: vec![word.len()], letters: word }
    }

    /// Weight in ℤ^n: sum of ±ε over letters.
    pub fn weight(&self, n: usize) -> Vec<i64> {
        let mut wt = vec![0i64; n];
        for l in &self.letters {
            let i = (l.idx - 1) as usize;
            wt[i] += if l.barred { -1 } else { 1 };
        }
        wt
    }

    pub fn is_all_unbarred(&self) -> bool {
        self.letters.iter().all(|l| !l.barred)
    }

    pub fn encode(&self) -> Vec<u8> {
        self.letters.iter().map(|l| l.byte()).collect()
    }

    /// Every factor weakly decreasing in the letter order of `ct`.
    pub fn is_valid(&self, ct: CrystalType) -> bool {
        self.factors()
            .iter()
            .all(|w| w.windows(2).all(|p| letter_ge(ct, p[0], p[1])))
    }
}

impl fmt::Display for TensorVertex {
    /// Word string: factors separated by `|`, letters space-separated,
    /// barred letters with a trailing `~`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors()
            .iter()
            .map(|w| w.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", parts.join("|"))
    }
}

/// Signature-rule action of f̃_i or ẽ_i on a tensor vertex, computed on the
/// fully chopped letter sequence (the letterwise splitting is a strict
/// embedding, so this agrees with the action on B_μ) and re-read as row
/// words.
pub fn tensor_f(lc: &LetterCrystal, v: &TensorVertex, color: u8) -> Option<TensorVertex> {
    let pos = signature(lc, &v.letters, color).act_f?;
    let mut out = v.clone();
    out.letters[pos] = lc.f_letter(color, out.letters[pos]).unwrap();
    debug_assert!(out.is_valid(lc.ct), "f_{} broke row word: {} -> {}", color, v, out);
    Some(out)
}

pub fn tensor_e(lc: &LetterCrystal, v: &TensorVertex, color: u8) -> Option<TensorVertex> {
    let pos = signature(lc, &v.letters, color).act_e?;
    let mut out = v.clone();
    out.letters[pos] = lc.e_letter(color, out.letters[pos]).unwrap();
    debug_assert!(out.is_valid(lc.ct), "e_{} broke row word: {} -> {}", color, v, out);
    Some(out)
}

pub fn eps(lc: &LetterCrystal, v: &TensorVertex, color: u8) -> usize {
    signature(lc, &v.letters, color).eps
}

pub fn phi(lc: &LetterCrystal, v: &TensorVertex, color: u8) -> usize {
    signature(lc, &v.letters, color).phi
}

struct Signature {
    eps: usize,
    phi: usize,
    /// Position of the leftmost unmatched plus (where f̃ acts).
    act_f: Option<usize>,
    /// Position of the rightmost unmatched minus (where ẽ acts).
    act_e: Option<usize>,
}

fn signature(lc: &LetterCrystal, letters: &[Letter], color: u8) -> Signature {
    let mut plus_stack: Vec<usize> = Vec::new();
    let mut eps = 0usize;
    let mut act_e = None;
    for (pos, &x) in letters.iter().enumerate() {
        if lc.eps_letter(color, x) {
            if plus_stack.pop().is_none() {
                eps += 1;
                act_e = Some(pos);
            }
        }
        if lc.phi_letter(color, x) {
            plus_stack.push(pos);
        }
    }
    Signature { eps, phi: plus_stack.len(), act_f: plus_stack.first().copied(), act_e }
}

/// True iff ε_i(v) = 0 for every color in `colors`.
pub fn is_hw_for(lc: &LetterCrystal, v: &TensorVertex, colors: &[u8]) -> bool {
    colors.iter().all(|&c| eps(lc, v, c) == 0)
}

/// Raise `v` to the highest weight vertex of its component under the given
/// colors, always applying the smallest applicable color first. Returns the
/// highest weight vertex and the sequence of colors raised.
pub fn raise_to_hw(lc: &LetterCrystal, v: &TensorVertex, colors: &[u8]) -> (TensorVertex, Vec<u8>) {
    let mut cur = v.clone();
    let mut path = Vec::new();
    'outer: loop {
        for &c in colors {
            if let Some(next) = tensor_e(lc, &cur, c) {
                cur = next;
                path.push(c);
                continue 'outer;
            }
        }
        return (cur, path);
    }
}

/// Replay a recorded raising path downward from `hw` (lowering in reverse
/// order). Panics if the path does not apply, which indicates a broken
/// isomorphism transport.
pub fn lower_along(lc: &LetterCrystal, hw: &TensorVertex, path: &[u8]) -> TensorVertex {
    let mut cur = hw.clone();
    for &c in path.iter().rev() {
        cur = tensor_f(lc, &cur, c)
            .unwrap_or_else(|| panic!("lowering path broke at color {c} on {cur}"));
    }
    cur
}

/// All weakly decreasing words of length `len` over `allowed` (which must be
/// sorted descending in the letter order).
pub fn row_words(ct: CrystalType, len: usize, allowed: &[Letter]) -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    let mut cur: Vec<Letter> = Vec::with_capacity(len);
    fn rec(
        ct: CrystalType,
        len: usize,
        allowed: &[Letter],
        cur: &mut Vec<Letter>,
        out: &mut Vec<Vec<Letter>>,
    ) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for &x in allowed {
            if cur.last().map_or(true, |&prev| letter_ge(ct, prev, x)) {
                cur.push(x);
                rec(ct, len, allowed, cur, out);
                cur.pop();
            }
        }
    }
    rec(ct, len, allowed, &mut cur, &mut out);
    out
}

/// Letters of B_1 sorted descending (the enumeration order for row words).
pub fn letters_desc(lc: &LetterCrystal) -> Vec<Letter> {
    let mut ls = lc.letters();
    ls.sort_by_key(|&x| std::cmp::Reverse(order_rank(lc.ct, x)));
    ls
}

/// Every vertex of B_μ (cartesian product of per-factor row words). Meant
/// for desk-scale shapes only.
pub fn enumerate_b_mu(lc: &LetterCrystal, shape: &[usize]) -> Vec<TensorVertex> {
    let allowed = letters_desc(lc);
    let per_factor: Vec<Vec<Vec<Letter>>> = shape
        .iter()
        .map(|&s| row_words(lc.ct, s, &allowed))
        .collect();
    let mut out = vec![TensorVertex::new(vec![], vec![])];
    for (i, words) in per_factor.iter().enumerate() {
        let mut next = Vec::with_capacity(out.len() * words.len());
        for v in &out {
            for w in words {
                let mut shape2 = v.shape.clone();
                shape2.push(shape[i]);
                let mut letters2 = v.letters.clone();
                letters2.extend_from_slice(w);
                next.push(TensorVertex::new(shape2, letters2));
            }
        }
        out = next;
    }
    out
}

/// Connected component of `seed` under the given colors (BFS over f̃ and ẽ).
pub fn component(lc: &LetterCrystal, seed: &TensorVertex, colors: &[u8]) -> Vec<TensorVertex> {
    let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();
    let mut queue = std::collections::VecDeque::new();
    let mut out = Vec::new();
    seen.insert(seed.encode());
    queue.push_back(seed.clone());
    while let Some(v) = queue.pop_front() {
        for &c in colors {
            for next in [tensor_f(lc, &v, c), tensor_e(lc, &v, c)].into_iter().flatten() {
                if seen.insert(next.encode()) {
                    queue.push_back(next.clone());
                }
            }
        }
        out.push(v);
    }
    out
}

/// DOT export of B_μ restricted to `colors`, arrows labeled by color.
pub fn dot_graph(lc: &LetterCrystal, shape: &[usize], colors: &[u8]) -> String {
    use std::fmt::Write as _;
    let mut s = String::from("digraph crystal {\n  rankdir=TB;\n");
    let vertices = enumerate_b_mu(lc, shape);
    for v in &vertices {
        writeln!(s, "  \"{v}\";").unwrap();
    }
    for v in &vertices {
        for &c in colors {
            if let Some(w) = tensor_f(lc, v, c) {
                writeln!(s, "  \"{v}\" -> \"{w}\" [label=\"{c}\"];").unwrap();
            }
        }
    }
    s.push_str("}\n");
    s
}
