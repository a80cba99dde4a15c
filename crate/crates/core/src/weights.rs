//! Partitions, dominant weights, classical root systems with length-class
//! weights L, Weyl groups as signed permutations, and the weight
//! transformations (norms, hat twist, star involution, dominance order).
//!
//! Half-integers (type B ρ and L values) are stored in half-units: the value
//! v is stored as the integer 2v.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// Partition: weakly decreasing positive parts, trailing zeros normalized
/// away. The empty partition is `Partition(vec![])`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Partition(Vec<i64>);

impl Partition {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.iter().any(|&p| p < 0) {
            return Err(Error::invalid(format!("negative part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(format!("{parts:?} is not weakly decreasing")));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(vec![])
    }

    /// Parse a comma-separated part list; the empty string and "0" both give
    /// the empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let parts: Vec<i64> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::invalid(format!("bad partition entry {t:?}")))
            })
            .collect::<Result<_>>()?;
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn part(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// |λ| = Σ λ_i.
    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn padded(&self, n: usize) -> Vec<i64> {
        let mut v = self.0.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// All partitions of `size` with at most `max_parts` parts.
    pub fn all_of_size(size: i64, max_parts: usize) -> Vec<Partition> {
        fn rec(remaining: i64, max_part: i64, slots: usize, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if slots == 0 {
                return;
            }
            let hi = max_part.min(remaining);
            for p in (1..=hi).rev() {
                cur.push(p);
                rec(remaining - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if size >= 0 {
            rec(size, size.max(0), max_parts, &mut Vec::new(), &mut out);
        }
        out
    }

    /// All partitions of size ≤ `max_size` with at most `max_parts` parts,
    /// in lexicographic order (the grid enumeration order for reports).
    pub fn all_up_to(max_size: i64, max_parts: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        for s in 0..=max_size {
            out.extend(Partition::all_of_size(s, max_parts));
        }
        out.sort();
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().map(|p| p.to_string()).join(","))
    }
}

/// The four kinds of stable one-dimensional sums, labeled by the partitions
/// of size at most 2. A partition is ⋄-tileable when ⋄ = ∅ only if empty,
/// always for (1), for even rows under (2), for even columns under (1,1).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Diamond {
    Empty,
    One,
    Two,
    OneOne,
}

impl Diamond {
    pub const ALL: [Diamond; 4] = [Diamond::Empty, Diamond::One, Diamond::Two, Diamond::OneOne];

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "empty" | "" => Ok(Diamond::Empty),
            "1" => Ok(Diamond::One),
            "2" => Ok(Diamond::Two),
            "11" => Ok(Diamond::OneOne),
            _ => Err(Error::invalid(format!("unknown diamond {s:?} (use empty|1|2|11)"))),
        }
    }

    pub fn admits(&self, gamma: &Partition) -> bool {
        match self {
            Diamond::Empty => gamma.is_empty(),
            Diamond::One => true,
            Diamond::Two => gamma.parts().iter().all(|&p| p % 2 == 0),
            // even columns: parts come in equal pairs
            Diamond::OneOne => {
                gamma.len() % 2 == 0
                    && gamma.parts().chunks(2).all(|c| c[0] == c[1])
            }
        }
    }

    /// The classical family whose stable KL polynomials this kind matches.
    pub fn family(&self) -> Family {
        match self {
            Diamond::Empty => Family::A,
            Diamond::One => Family::B,
            Diamond::Two => Family::C,
            Diamond::OneOne => Family::D,
        }
    }
}

impl fmt::Display for Diamond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diamond::Empty => write!(f, "empty"),
            Diamond::One => write!(f, "1"),
            Diamond::Two => write!(f, "2"),
            Diamond::OneOne => write!(f, "11"),
        }
    }
}

/// (|μ|, ||μ||) with ||μ|| = Σ (i−1) μ_i.
pub fn norms(mu: &[i64]) -> (i64, i64) {
    let size = mu.iter().sum();
    let nn = mu.iter().enumerate().map(|(i, &p)| i as i64 * p).sum();
    (size, nn)
}

/// Dominant weight: weakly decreasing integer vector, parts may be negative.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DominantWeight(Vec<i64>);

impl DominantWeight {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(format!("{coords:?} is not weakly decreasing")));
        }
        Ok(DominantWeight(coords))
    }

    pub fn from_partition(p: &Partition, n: usize) -> Result<Self> {
        if p.len() > n {
            return Err(Error::RankTooSmall(format!(
                "partition {p} needs rank >= {}, got {n}",
                p.len()
            )));
        }
        Ok(DominantWeight(p.padded(n)))
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn translate(&self, k: i64) -> DominantWeight {
        DominantWeight(self.0.iter().map(|&c| c + k).collect())
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().map(|p| p.to_string()).join(","))
    }
}

/// β ↦ β* : reversal and negation. An involution preserving dominance.
pub fn star(beta: &[i64]) -> Vec<i64> {
    beta.iter().rev().map(|&b| -b).collect()
}

/// Box-complement pair of Eq-style hat weights. Pads λ, μ to `m` parts,
/// picks the minimal integer M ≥ max(λ1, μ1) + (|μ|−|λ|)/2 and returns
/// (M−λ_m, …, M−λ_1), (M−μ_m, …, M−μ_1) and M.
pub fn hat_pair(lambda: &Partition, mu: &Partition, m: usize) -> (DominantWeight, DominantWeight, i64) {
    hat_pair_with_excess(lambda, mu, m, 0)
}

/// Same as [`hat_pair`] with M replaced by M + excess (the result must not
/// depend on the excess once the bound is met).
pub fn hat_pair_with_excess(
    lambda: &Partition,
    mu: &Partition,
    m: usize,
    excess: i64,
) -> (DominantWeight, DominantWeight, i64) {
    assert!(m >= lambda.len() && m >= mu.len());
    let d = mu.size() - lambda.size();
    let base = lambda.part(0).max(mu.part(0));
    let m_val = base + div_ceil(d, 2) + excess;
    let hat = |p: &Partition| -> DominantWeight {
        let padded = p.padded(m);
        DominantWeight(padded.iter().rev().map(|&x| m_val - x).collect())
    };
    (hat(lambda), hat(mu), m_val)
}

fn div_ceil(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    if a >= 0 {
        (a + b - 1) / b
    } else {
        -((-a) / b)
    }
}

/// The four classical families.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::B => write!(f, "B"),
            Family::C => write!(f, "C"),
            Family::D => write!(f, "D"),
        }
    }
}

/// A classical type with its rank parameter n. For family A this means
/// A_{n−1} realized in n coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ClassicalType {
    pub family: Family,
    pub n: usize,
}

impl ClassicalType {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid(format!("rank {n} too small (need n >= 2)")));
        }
        Ok(ClassicalType { family, n })
    }

    /// ρ in half-units: A: (n−1,…,0), B: ½(2n−1,…,1), C: (n,…,1),
    /// D: (n−1,…,0).
    pub fn rho_half(&self) -> Vec<i64> {
        let n = self.n as i64;
        match self.family {
            Family::A | Family::D => (0..n).map(|i| 2 * (n - 1 - i)).collect(),
            Family::B => (0..n).map(|i| 2 * n - 1 - 2 * i).collect(),
            Family::C => (0..n).map(|i| 2 * (n - i)).collect(),
        }
    }

    pub fn weyl_order(&self) -> u64 {
        let n = self.n as u32;
        let fact: u64 = (1..=n as u64).product();
        match self.family {
            Family::A => fact,
            Family::B | Family::C => fact << n,
            Family::D => fact << (n - 1),
        }
    }
}

impl fmt::Display for ClassicalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A{}", self.n - 1),
            _ => write!(f, "{}{}", self.family, self.n),
        }
    }
}

/// A positive root with its L-value (in half-units of the exponent of q).
#[derive(Clone, Debug)]
pub struct Root {
    pub vec: Vec<i64>,
    pub l_half: i64,
}

/// L as a function on W-orbits of positive roots, in half-units.
/// `short_half` applies to the short length class (B: ε_i, C: ε_i ± ε_j);
/// for the simply-laced A and D only `long_half` is used.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LValues {
    pub long_half: i64,
    pub short_half: i64,
}

impl LValues {
    /// L ≡ 1 on every root.
    pub fn const_one() -> Self {
        LValues { long_half: 2, short_half: 2 }
    }

    /// L ≡ 1 except L = 1/2 on short roots in type B.
    pub fn standard(family: Family) -> Self {
        match family {
            Family::B => LValues { long_half: 2, short_half: 1 },
            _ => LValues::const_one(),
        }
    }
}

/// Positive roots of a classical type with per-root L-values and the
/// designated A_{n−1} sub-list ε_i − ε_j, i < j.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub ctype: ClassicalType,
    pub roots: Vec<Root>,
    /// Indices into `roots` of the ε_i − ε_j sub-list.
    pub a_sub: Vec<usize>,
}

impl RootSystem {
    pub fn new(ctype: ClassicalType, l: LValues) -> Self {
        // Roots are grouped by their leading coordinate so that partition
        // function evaluation can zero out one coordinate per group.
        let n = ctype.n;
        let mut roots = Vec::new();
        let mut a_sub = Vec::new();
        let mk = |entries: &[(usize, i64)]| -> Vec<i64> {
            let mut v = vec![0i64; n];
            for &(i, c) in entries {
                v[i] = c;
            }
            v
        };
        for i in 0..n {
            for j in (i + 1)..n {
                a_sub.push(roots.len());
                roots.push(Root { vec: mk(&[(i, 1), (j, -1)]), l_half: l.long_half });
            }
            match ctype.family {
                Family::A => {}
                Family::B => {
                    for j in (i + 1)..n {
                        roots.push(Root { vec: mk(&[(i, 1), (j, 1)]), l_half: l.long_half });
                    }
                    roots.push(Root { vec: mk(&[(i, 1)]), l_half: l.short_half });
                }
                Family::C => {
                    for j in (i + 1)..n {
                        roots.push(Root { vec: mk(&[(i, 1), (j, 1)]), l_half: l.short_half });
                    }
                    roots.push(Root { vec: mk(&[(i, 2)]), l_half: l.long_half });
                }
                Family::D => {
                    for j in (i + 1)..n {
                        roots.push(Root { vec: mk(&[(i, 1), (j, 1)]), l_half: l.long_half });
                    }
                }
            }
        }
        RootSystem { ctype, roots, a_sub }
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    /// Roots outside the A_{n−1} sub-list (the Littlewood product range).
    pub fn non_a_roots(&self) -> Vec<&Root> {
        let a: std::collections::HashSet<usize> = self.a_sub.iter().copied().collect();
        self.roots
            .iter()
            .enumerate()
            .filter(|(i, _)| !a.contains(i))
            .map(|(_, r)| r)
            .collect()
    }
}

/// Signed permutation: acts on v by (w·v)_i = sign_i · v_{perm_i}.
/// `parity` caches (−1)^{ℓ(w)}.
#[derive(Clone, Debug)]
pub struct WeylElement {
    pub perm: Vec<usize>,
    pub neg: Vec<bool>,
    pub parity: i64,
}

impl WeylElement {
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        self.perm
            .iter()
            .zip(&self.neg)
            .map(|(&p, &s)| if s { -v[p] } else { v[p] })
            .collect()
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

/// All |W| elements of the Weyl group: n! for A, 2ⁿ n! for B and C,
/// 2^{n−1} n! for D (even number of sign flips).
pub fn weyl_group(t: ClassicalType) -> Vec<WeylElement> {
    let n = t.n;
    let mut out = Vec::new();
    for perm in (0..n).permutations(n) {
        let psign = perm_sign(&perm);
        match t.family {
            Family::A => out.push(WeylElement { perm: perm.clone(), neg: vec![false; n], parity: psign }),
            Family::B | Family::C | Family::D => {
                for mask in 0..(1u32 << n) {
                    let neg: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
                    let flips = mask.count_ones();
                    if t.family == Family::D && flips % 2 == 1 {
                        continue;
                    }
                    let parity = if flips % 2 == 1 { -psign } else { psign };
                    out.push(WeylElement { perm: perm.clone(), neg, parity });
                }
            }
        }
    }
    out
}

/// λ ≥ μ iff λ − μ is a nonnegative integer combination of the simple roots
/// of `t`.
pub fn dominance_geq(lambda: &[i64], mu: &[i64], t: ClassicalType) -> bool {
    assert_eq!(lambda.len(), mu.len());
    assert_eq!(lambda.len(), t.n);
    let delta: Vec<i64> = lambda.iter().zip(mu).map(|(a, b)| a - b).collect();
    let mut prefix = Vec::with_capacity(t.n);
    let mut acc = 0i64;
    for &d in &delta {
        acc += d;
        prefix.push(acc);
    }
    let total = acc;
    let n = t.n;
    match t.family {
        // c_k = prefix_k for k < n plus a type-specific tail condition
        Family::A => prefix[..n - 1].iter().all(|&p| p >= 0) && total == 0,
        Family::B => prefix.iter().all(|&p| p >= 0),
        Family::C => {
            prefix[..n - 1].iter().all(|&p| p >= 0) && total >= 0 && total % 2 == 0
        }
        Family::D => {
            let ok_head = prefix[..n.saturating_sub(2)].iter().all(|&p| p >= 0);
            let c_n = total;
            let c_n1 = total - 2 * delta[n - 1];
            ok_head && total % 2 == 0 && c_n >= 0 && c_n1 >= 0
        }
    }
}
