//! Skew representations of the super Yangian `Y(gl(m|n))` in Drinfeld
//! form: ℓ-weights, the currents `d_k(u)`, `x_k^±(u)` on the GT basis, and
//! the checks built on them.

mod oracle;
pub(crate) mod verify;

use std::collections::BTreeMap;

use serde::Serialize;

pub use oracle::{evaluation_currents, matrix_units};
pub use verify::{check_nonvanishing, verify_central_series, verify_drinfeld_relations, VerifyOptions};

use crate::error::{Error, Result};
use crate::exactmath::{Field, Matrix, RatFn, Rational};
use crate::glrep::{assemble, transitions_with, Classical, Sign, TransitionElement};
use crate::tableaux::{enumerate_tableaux, is_admissible, parity_sign, ContentTable, GtTableau, SkewShape};

/// `γ_1, …, γ_{m+n}`: `γ_1 = 0` if `m > 0`, else `-1`, then
/// `γ_k = γ_{k-1} + (s_{k-1} + s_k)/2`.
pub fn gamma_sequence(m: usize, n: usize) -> Vec<Rational> {
    let mut g = Vec::with_capacity(m + n);
    let mut cur: i64 = if m > 0 { 0 } else { -1 };
    for k in 1..=m + n {
        if k > 1 {
            cur += (parity_sign(m, k - 1) + parity_sign(m, k)) / 2;
        }
        g.push(Rational::from_i64(cur));
    }
    g
}

pub(crate) fn gamma_int(m: usize, k: usize) -> i64 {
    // γ_k is always an integer: steps are 0 or ±1.
    let first = if m > 0 { 0 } else { -1 };
    (2..=k).fold(first, |acc, j| acc + (parity_sign(m, j - 1) + parity_sign(m, j)) / 2)
}

/// `s^+_{ki}`: `(s_k+1)/2` for `i ≤ m'`, `-1` otherwise.
pub fn s_plus(shape: &SkewShape, k: usize, i: usize) -> i64 {
    if i <= shape.m_prime() {
        (shape.s(k) + 1) / 2
    } else {
        -1
    }
}

/// `s^-_{ki}`: `(s_k-1)/2` for `i ≤ m'`, `0` otherwise.
pub fn s_minus(shape: &SkewShape, k: usize, i: usize) -> i64 {
    if i <= shape.m_prime() {
        (shape.s(k) - 1) / 2
    } else {
        0
    }
}

fn ratio(a: i64, b: i64) -> RatFn {
    RatFn::linear_ratio(Rational::from_i64(a), Rational::from_i64(b))
}

fn powi(f: RatFn, e: i64) -> RatFn {
    f.pow(e).expect("ℓ-weight factors are nonzero")
}

/// `𝒴_{Λ,k}(u) = Π_{i≤r} (u+l_{ki})/(u+r-i+1) · Π_{j≤k} ((u+l_{kj'})/(u-γ_j))^{s_j}`,
/// the eigenvalue of the series `𝒜_k(u)` on `ξ_Λ`.
pub fn script_y(shape: &SkewShape, t: &GtTableau, k: usize) -> RatFn {
    script_y_from(shape, &ContentTable::new(shape, t), k)
}

fn script_y_from(shape: &SkewShape, l: &ContentTable, k: usize) -> RatFn {
    let r = shape.r();
    let mut y = RatFn::one();
    for i in 1..=r {
        y = y * ratio(l.l(k, i), (r - i + 1) as i64);
    }
    for j in 1..=k {
        let f = ratio(l.l(k, r + j), -gamma_int(shape.m(), j));
        y = y * powi(f, shape.s(j));
    }
    y
}

/// `𝒴_β(u) = Π_i ((u + s_i β_i - γ_i)/(u - γ_i))^{s_i}` for a `gl(m|n)`
/// weight `β`.
pub fn script_y_weight(beta: &[i64], m: usize) -> RatFn {
    beta.iter().enumerate().fold(RatFn::one(), |acc, (idx, &b)| {
        let i = idx + 1;
        let s = parity_sign(m, i);
        let g = gamma_int(m, i);
        acc * powi(ratio(s * b - g, -g), s)
    })
}

/// An ℓ-weight `(ζ_1(u), …, ζ_{m+n}(u))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
#[serde(transparent)]
pub struct LWeight(pub Vec<RatFn>);

impl std::fmt::Display for LWeight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|z| z.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `ζ_{Λ,k}(u) = (𝒴_{Λ,k}(u+γ_k) / 𝒴_{Λ,k-1}(u+γ_k))^{s_k}` for all `k`.
pub fn l_weight(shape: &SkewShape, t: &GtTableau) -> LWeight {
    let l = ContentTable::new(shape, t);
    let ys: Vec<RatFn> = (0..=shape.rank()).map(|k| script_y_from(shape, &l, k)).collect();
    LWeight(
        (1..=shape.rank())
            .map(|k| {
                let g = Rational::from_i64(gamma_int(shape.m(), k));
                let q = ys[k].shift(&g) / ys[k - 1].shift(&g);
                powi(q, shape.s(k))
            })
            .collect(),
    )
}

/// Drinfeld currents on a module with a distinguished basis: `d_k(u)`
/// diagonal, `x_k^±(u)` matrices of rational functions.
#[derive(Clone, Debug, Serialize)]
pub struct CurrentRep {
    pub shape: SkewShape,
    pub basis: Vec<GtTableau>,
    /// Diagonal of `d_k(u)`, `k = 1..m+n`, at index `k-1`.
    pub d: Vec<Vec<RatFn>>,
    /// `x_k^+(u)`, `k = 1..m+n-1`, at index `k-1`.
    pub x_plus: Vec<Matrix<RatFn>>,
    pub x_minus: Vec<Matrix<RatFn>>,
}

/// The currents on the GT basis:
/// `x_k^+` sends `ξ_Λ` to `s_k ℰ^+_{Λ,ki} / (u + l_{ki} + s^+_{ki} + γ_k) · ξ_{Λ+δ_{ki}}`,
/// `x_k^-` to `s_{k+1} ℰ^-_{Λ,ki} / (u + l_{ki} + s^-_{ki} + γ_k) · ξ_{Λ-δ_{ki}}`.
pub fn build_current_rep(shape: &SkewShape) -> Result<CurrentRep> {
    let basis = enumerate_tableaux(shape);
    let contents: Vec<ContentTable> = basis.iter().map(|t| ContentTable::new(shape, t)).collect();
    let ts = transitions_with(shape, &basis, &Classical)?;
    let currents: Vec<_> = ts
        .into_iter()
        .map(|t| {
            let (coeff, shift) = match t.sign {
                Sign::Plus => (shape.s(t.k), s_plus(shape, t.k, t.i)),
                Sign::Minus => (shape.s(t.k + 1), s_minus(shape, t.k, t.i)),
            };
            let pole = contents[t.from].l(t.k, t.i) + shift + gamma_int(shape.m(), t.k);
            let c = t.value * Rational::from_i64(coeff);
            TransitionElement {
                from: t.from,
                to: t.to,
                k: t.k,
                i: t.i,
                sign: t.sign,
                value: RatFn::constant(c) / RatFn::linear(Rational::from_i64(pole)),
            }
        })
        .collect();
    let (x_plus, x_minus) = assemble(basis.len(), shape.rank(), &currents);
    let weights: Vec<LWeight> = basis.iter().map(|t| l_weight(shape, t)).collect();
    let d = (0..shape.rank())
        .map(|k| weights.iter().map(|w| w.0[k].clone()).collect())
        .collect();
    Ok(CurrentRep {
        shape: shape.clone(),
        basis,
        d,
        x_plus,
        x_minus,
    })
}

impl CurrentRep {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn rank(&self) -> usize {
        self.d.len()
    }

    pub fn m(&self) -> usize {
        self.shape.m()
    }

    /// Parity of `x_k^±`.
    pub fn is_odd(&self, k: usize) -> bool {
        self.shape.s(k) != self.shape.s(k + 1)
    }

    pub fn d_matrix(&self, k: usize) -> Matrix<RatFn> {
        Matrix::diagonal(self.d[k - 1].clone())
    }

    pub fn l_weights(&self) -> Vec<LWeight> {
        (0..self.dim())
            .map(|b| LWeight(self.d.iter().map(|dk| dk[b].clone()).collect()))
            .collect()
    }

    /// Block direct sum, used to build reducible fixtures.
    pub fn direct_sum(&self, other: &CurrentRep) -> CurrentRep {
        let n = self.dim() + other.dim();
        let sum = |a: &Matrix<RatFn>, b: &Matrix<RatFn>| {
            Matrix::from_fn(n, n, |i, j| match (i < self.dim(), j < self.dim()) {
                (true, true) => a.get(i, j).clone(),
                (false, false) => b.get(i - self.dim(), j - self.dim()).clone(),
                _ => RatFn::zero(),
            })
        };
        CurrentRep {
            shape: self.shape.clone(),
            basis: self.basis.iter().chain(&other.basis).cloned().collect(),
            d: self.d.iter().zip(&other.d).map(|(a, b)| a.iter().chain(b).cloned().collect()).collect(),
            x_plus: self.x_plus.iter().zip(&other.x_plus).map(|(a, b)| sum(a, b)).collect(),
            x_minus: self.x_minus.iter().zip(&other.x_minus).map(|(a, b)| sum(a, b)).collect(),
        }
    }
}

/// `χ(M)`: distinct ℓ-weights with multiplicities, in canonical order.
pub fn q_character(rep: &CurrentRep) -> Vec<(LWeight, usize)> {
    multiset(rep.l_weights())
}

pub fn multiset(weights: Vec<LWeight>) -> Vec<(LWeight, usize)> {
    let mut m: BTreeMap<LWeight, usize> = BTreeMap::new();
    for w in weights {
        *m.entry(w).or_default() += 1;
    }
    m.into_iter().collect()
}

/// Thin iff all ℓ-weights are pairwise distinct (structural comparison of
/// canonical forms).
pub fn is_thin(rep: &CurrentRep) -> bool {
    weights_distinct(&rep.l_weights())
}

pub fn weights_distinct(weights: &[LWeight]) -> bool {
    let mut sorted: Vec<&LWeight> = weights.iter().collect();
    sorted.sort();
    sorted.windows(2).all(|w| w[0] != w[1])
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct CurrentEdge {
    pub from: usize,
    pub to: usize,
    pub k: usize,
    pub sign: Sign,
}

/// Why a module is irreducible: it is thin, and every basis vector is
/// reached from the first one (and reaches it) through nonzero current
/// matrix entries. The trees list one generating transformation per vertex.
#[derive(Clone, Debug, Serialize)]
pub struct IrreducibilityCertificate {
    pub irreducible: bool,
    pub thin: bool,
    pub strongly_connected: bool,
    pub forward_tree: Vec<CurrentEdge>,
    pub backward_tree: Vec<CurrentEdge>,
}

pub fn is_irreducible(rep: &CurrentRep) -> IrreducibilityCertificate {
    let mut edges = Vec::new();
    for (sign, xs) in [(Sign::Plus, &rep.x_plus), (Sign::Minus, &rep.x_minus)] {
        for (idx, x) in xs.iter().enumerate() {
            for (to, from, _) in x.nonzero_entries() {
                edges.push(CurrentEdge {
                    from,
                    to,
                    k: idx + 1,
                    sign,
                });
            }
        }
    }
    certificate(rep.dim(), &edges, is_thin(rep))
}

/// Irreducibility certificate for a thin (or not) module of dimension `n`
/// whose nonzero current entries are `edges`.
pub(crate) fn certificate(n: usize, edges: &[CurrentEdge], thin: bool) -> IrreducibilityCertificate {
    let forward_tree = bfs_tree(n, edges, false);
    let backward_tree = bfs_tree(n, edges, true);
    let strongly_connected = n == 0 || (forward_tree.len() + 1 == n && backward_tree.len() + 1 == n);
    IrreducibilityCertificate {
        irreducible: n > 0 && thin && strongly_connected,
        thin,
        strongly_connected,
        forward_tree,
        backward_tree,
    }
}

/// Breadth-first tree from vertex 0 along edges (reversed if `reverse`).
fn bfs_tree(n: usize, edges: &[CurrentEdge], reverse: bool) -> Vec<CurrentEdge> {
    if n == 0 {
        return Vec::new();
    }
    let mut adj = vec![Vec::new(); n];
    for e in edges {
        let (a, b) = if reverse { (e.to, e.from) } else { (e.from, e.to) };
        adj[a].push((b, *e));
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = std::collections::VecDeque::from([0]);
    let mut tree = Vec::new();
    while let Some(v) = queue.pop_front() {
        for &(w, e) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                tree.push(e);
                queue.push_back(w);
            }
        }
    }
    tree
}

/// `A_{i,a}`: `(A_{i,a})_j(u) = (u-a)/(u-a-(α_i,ε_j))`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SimpleLRoot {
    pub i: usize,
    #[serde(with = "crate::exactmath::ratio_str")]
    pub a: Rational,
}

impl SimpleLRoot {
    pub fn components(&self, m: usize, rank: usize) -> LWeight {
        let i = self.i;
        LWeight(
            (1..=rank)
                .map(|j| {
                    let pairing = if j == i {
                        parity_sign(m, i)
                    } else if j == i + 1 {
                        -parity_sign(m, i + 1)
                    } else {
                        0
                    };
                    let a = self.a.clone();
                    RatFn::linear_ratio(-a.clone(), -a - Rational::from_i64(pairing))
                })
                .collect(),
        )
    }
}

/// The simple ℓ-root relating `ξ_Λ` and `ξ_{Λ±δ_{ki}}`:
/// `a = -l_{ki} - s^±_{ki} - γ_k`, with `ζ_{Λ+δ} = ζ_Λ · A_{k,a}` for `+`
/// and `ζ_Λ = ζ_{Λ-δ} · A_{k,a}` for `-`. The identity is verified.
pub fn simple_l_root_ratio(shape: &SkewShape, t: &GtTableau, k: usize, i: usize, sign: Sign) -> Result<SimpleLRoot> {
    if k == 0 || k >= shape.rank() || i == 0 || i > shape.r() + k {
        return Err(Error::OutOfRange(format!("(k, i) = ({k}, {i})")));
    }
    let target = t.shifted(k, i, sign.delta());
    if !is_admissible(shape, t) || !is_admissible(shape, &target) {
        return Err(Error::InvalidShape(format!("{t} → {target}: both tableaux must be admissible")));
    }
    let l = ContentTable::new(shape, t);
    let shift = match sign {
        Sign::Plus => s_plus(shape, k, i),
        Sign::Minus => s_minus(shape, k, i),
    };
    let a = -(l.l(k, i) + shift + gamma_int(shape.m(), k));
    let root = SimpleLRoot {
        i: k,
        a: Rational::from_i64(a),
    };
    let (hi, lo) = match sign {
        Sign::Plus => (l_weight(shape, &target), l_weight(shape, t)),
        Sign::Minus => (l_weight(shape, t), l_weight(shape, &target)),
    };
    let expected = root.components(shape.m(), shape.rank());
    for (j, ((h, l), e)) in hi.0.iter().zip(&lo.0).zip(&expected.0).enumerate() {
        if &(h.clone() / l.clone()) != e {
            return Err(Error::NotSimpleRoot(format!(
                "component {}: ratio {} differs from {}",
                j + 1,
                h.clone() / l.clone(),
                e
            )));
        }
    }
    Ok(root)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;

    fn vector() -> (SkewShape, Vec<GtTableau>) {
        let s = SkewShape::straight(1, 1, vec![1, 0]).unwrap();
        let b = enumerate_tableaux(&s);
        (s, b)
    }

    fn rf(s: &str) -> RatFn {
        // tiny parser for (u+a)/(u+b) style fixtures
        let parse = |t: &str| -> RatFn {
            let t = t.trim().trim_matches(|c| c == '(' || c == ')');
            if t == "1" {
                return RatFn::one();
            }
            let off = t.trim_start_matches('u').replace(' ', "");
            let c: i64 = if off.is_empty() { 0 } else { off.parse().unwrap() };
            RatFn::linear(int(c))
        };
        match s.split_once('/') {
            Some((a, b)) => parse(a) / parse(b),
            None => parse(s),
        }
    }

    #[test]
    fn gammas() {
        assert_eq!(gamma_sequence(1, 1), vec![int(0), int(0)]);
        assert_eq!(gamma_sequence(2, 1), vec![int(0), int(1), int(1)]);
        assert_eq!(gamma_sequence(0, 2), vec![int(-1), int(-2)]);
    }

    #[test]
    fn script_y_examples() {
        let (s, b) = vector();
        assert_eq!(script_y(&s, &b[0], 1), rf("(u+1)/(u)"));
        assert_eq!(script_y(&s, &b[0], 2), rf("(u+1)/(u)"));
        assert_eq!(script_y(&s, &b[0], 0), RatFn::one());
    }

    #[test]
    fn l_weight_examples() {
        let (s, b) = vector();
        assert_eq!(l_weight(&s, &b[0]).0, vec![rf("(u+1)/(u)"), RatFn::one()]);
        assert_eq!(l_weight(&s, &b[1]).0, vec![RatFn::one(), rf("(u)/(u+1)")]);
        let z = SkewShape::straight(1, 1, vec![0, 0]).unwrap();
        assert_eq!(l_weight(&z, &enumerate_tableaux(&z)[0]).0, vec![RatFn::one(); 2]);
    }

    #[test]
    fn currents_of_vector_module() {
        let (s, _) = vector();
        let rep = build_current_rep(&s).unwrap();
        let nz: Vec<_> = rep.x_plus[0].nonzero_entries().map(|(i, j, f)| (i, j, f.clone())).collect();
        assert_eq!(nz, vec![(0, 1, rf("1/(u+1)"))]);
        let nz: Vec<_> = rep.x_minus[0].nonzero_entries().map(|(i, j, f)| (i, j, f.clone())).collect();
        assert_eq!(nz, vec![(1, 0, -rf("1/(u+1)"))]);
        assert!(is_thin(&rep));
        assert!(is_irreducible(&rep).irreducible);
        let q = q_character(&rep);
        assert_eq!(q.len(), 2);
        assert!(q.iter().all(|(_, m)| *m == 1));
    }

    #[test]
    fn reducible_fixtures() {
        let (s, _) = vector();
        let rep = build_current_rep(&s).unwrap();
        let two = rep.direct_sum(&rep);
        assert!(!is_thin(&two));
        let c = is_irreducible(&two);
        assert!(!c.irreducible && !c.strongly_connected);
        let dup = vec![l_weight(&s, &rep.basis[0]); 2];
        assert!(!weights_distinct(&dup));
    }

    #[test]
    fn trivial_module() {
        let z = SkewShape::straight(1, 1, vec![0, 0]).unwrap();
        let rep = build_current_rep(&z).unwrap();
        assert_eq!(rep.dim(), 1);
        assert!(rep.x_plus[0].is_zero() && rep.x_minus[0].is_zero());
        assert!(is_irreducible(&rep).irreducible);
        assert_eq!(q_character(&rep), vec![(LWeight(vec![RatFn::one(); 2]), 1)]);
    }

    #[test]
    fn simple_roots() {
        let (s, b) = vector();
        assert_eq!(simple_l_root_ratio(&s, &b[1], 1, 1, Sign::Plus).unwrap().a, int(-1));
        assert_eq!(simple_l_root_ratio(&s, &b[0], 1, 1, Sign::Minus).unwrap().a, int(-1));
        assert!(simple_l_root_ratio(&s, &b[0], 1, 1, Sign::Plus).is_err());
    }

    #[test]
    fn weight_series_examples() {
        // 𝒴_β for gl(1|1): β = (1, 0) gives (u+1)/u
        assert_eq!(script_y_weight(&[1, 0], 1), rf("(u+1)/(u)"));
        assert_eq!(script_y_weight(&[0, 0], 1), RatFn::one());
    }
}
