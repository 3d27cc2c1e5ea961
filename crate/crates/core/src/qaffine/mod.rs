//! Skew representations of `U_q(ĝl(m|n))` over `ℚ(q)`: the quantum GT
//! action of `U_q(gl(m|n))`, quantum ℓ-weights, and the currents
//! `x_k^±(u)`, which act by delta functions `δ(c/u) = Σ_n c^n u^{-n}` and
//! so are stored through their modes.

mod oracle;
mod qnum;
mod rmatrix;
mod verify;

use std::collections::BTreeSet;

use serde::Serialize;

pub use oracle::{evaluation_q_currents, QEvaluationCurrents};
pub use qnum::{
    classical_limit, fmt_q, fmt_qfn, q_at, q_number, q_sign, qconst, qfn_at, qfn_eval, qpow, uvar, QBracket, QElement,
    QFn, QFnJson, QNum,
};
pub use rmatrix::{build_q_r_matrix, ybe_spot_check, QRMatrix, QRMatrixJson, RTerm};
pub use verify::{verify_q_relations, QVerifyOptions};

use crate::error::{Error, Result};
use crate::exactmath::{Field, Matrix, Rational};
use crate::glrep::{assemble, build_generator_matrices, matrix_element_with, transitions_with, Sign};
use crate::report::Report;
use crate::tableaux::{enumerate_tableaux, is_admissible, ContentTable, GtTableau, SkewShape};
use crate::yangian::{self, gamma_int, s_minus, s_plus, CurrentEdge, IrreducibilityCertificate};

/// `[ℰ^±_{Λ,ki}]`: the classical matrix element with every integer factor
/// replaced by its q-number; zero when the target is not admissible.
pub fn q_matrix_element(shape: &SkewShape, t: &GtTableau, k: usize, i: usize, sign: Sign) -> Result<QNum> {
    Ok(matrix_element_with(shape, t, k, i, sign, &QBracket)?.0)
}

/// `U_q(gl(m|n))` on the GT basis: `t_k = q^{h_k}` and `e_k^±`.
#[derive(Clone, Debug)]
pub struct QGtAction {
    pub shape: SkewShape,
    pub basis: Vec<GtTableau>,
    /// Exponents of `t_k` (diagonal), `k = 1..m+n`, at index `k-1`.
    pub t_exp: Vec<Vec<i64>>,
    /// `e_k^+`, `k = 1..m+n-1`, at index `k-1`.
    pub e_plus: Vec<Matrix<QNum>>,
    pub e_minus: Vec<Matrix<QNum>>,
}

pub fn q_gt_action(shape: &SkewShape) -> Result<QGtAction> {
    let basis = enumerate_tableaux(shape);
    let ts = transitions_with(shape, &basis, &QBracket)?;
    let (e_plus, e_minus) = assemble(basis.len(), shape.rank(), &ts);
    let t_exp = (1..=shape.rank())
        .map(|k| basis.iter().map(|t| t.row_sum(k) - t.row_sum(k - 1)).collect())
        .collect();
    Ok(QGtAction {
        shape: shape.clone(),
        basis,
        t_exp,
        e_plus,
        e_minus,
    })
}

impl QGtAction {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `t_k^p`.
    pub fn t_pow(&self, k: usize, p: i64) -> Matrix<QNum> {
        Matrix::diagonal(self.t_exp[k - 1].iter().map(|&e| qpow(p * e)).collect())
    }

    pub fn is_odd(&self, k: usize) -> bool {
        self.shape.s(k) != self.shape.s(k + 1)
    }

    fn e(&self, k: usize, sign: Sign) -> &Matrix<QNum> {
        match sign {
            Sign::Plus => &self.e_plus[k - 1],
            Sign::Minus => &self.e_minus[k - 1],
        }
    }
}

/// `[a, b]_c = ab - (-1)^{|a||b|} c ba`, with the parity of the result.
fn qbracket(a: (&Matrix<QNum>, bool), b: (&Matrix<QNum>, bool), c: &QNum) -> (Matrix<QNum>, bool) {
    let sign = if a.1 && b.1 { -c.clone() } else { c.clone() };
    (&(a.0 * b.0) - &(b.0 * a.0).scale(&sign), a.1 ^ b.1)
}

/// The defining relations of `U_q(gl(m|n))` on the generator matrices:
/// Cartan conjugation, `[e_j^+, e_k^-]`, far commutation, `(e_m^±)^2 = 0`,
/// the cubic Serre relations (`j ≠ m`) and, when `m, n > 1`, the quartic
/// one.
pub fn check_q_superalgebra_relations(g: &QGtAction) -> Report {
    let mut report = Report::new();
    let n = g.shape.rank();
    let m = g.shape.m();
    let one = QNum::one();
    let mut fails = Vec::new();
    for i in 1..=n {
        for j in 1..n {
            for sign in [Sign::Plus, Sign::Minus] {
                let e = g.e(j, sign);
                let pairing = i64::from(i == j) - i64::from(i == j + 1);
                let lhs = &(&g.t_pow(i, 1) * e) * &g.t_pow(i, -1);
                if lhs != e.scale(&qpow(sign.delta() * pairing)) {
                    fails.push(format!("t_{i} e_{j}^{} t_{i}^-1", sign.symbol()));
                }
            }
        }
    }
    report.all("t_i e_j^± t_i^-1 = q^±(ε_i,α_j) e_j^±", fails);

    let mut fails = Vec::new();
    for j in 1..n {
        for k in 1..n {
            let lhs = g.e_plus[j - 1].supercommutator(g.is_odd(j), &g.e_minus[k - 1], g.is_odd(k));
            let rhs = if j == k {
                let (sj, sj1) = (g.shape.s(j), g.shape.s(j + 1));
                let a = &g.t_pow(j, sj) * &g.t_pow(j + 1, -sj1);
                let b = &g.t_pow(j, -sj) * &g.t_pow(j + 1, sj1);
                (&a - &b).scale(&(QNum::one() / (q_sign(sj) - q_sign(-sj))))
            } else {
                Matrix::zeros(g.dim(), g.dim())
            };
            if lhs != rhs {
                fails.push(format!("[e_{j}^+, e_{k}^-]"));
            }
        }
    }
    report.all("[e_j^+, e_k^-]", fails);

    let mut fails = Vec::new();
    for sign in [Sign::Plus, Sign::Minus] {
        for i in 1..n {
            for j in i..n {
                let far = j > i + 1 || (i == j && !g.is_odd(i));
                if far {
                    let c = g.e(i, sign).supercommutator(g.is_odd(i), g.e(j, sign), g.is_odd(j));
                    if !c.is_zero() {
                        fails.push(format!("[e_{i}^{s}, e_{j}^{s}]", s = sign.symbol()));
                    }
                }
            }
        }
        if m >= 1 && m < n {
            let e = g.e(m, sign);
            if !(e * e).is_zero() {
                fails.push(format!("(e_{m}^{})^2", sign.symbol()));
            }
        }
    }
    report.all("[e_i^±, e_j^±] = 0 for |i-j| ≠ 1 and (e_m^±)^2 = 0", fails);

    let qi = qpow(-1);
    let qq = qpow(1);
    let mut fails = Vec::new();
    for sign in [Sign::Plus, Sign::Minus] {
        for j in (1..n).filter(|&j| j != m) {
            for other in [j.wrapping_sub(1), j + 1] {
                if other == 0 || other >= n {
                    continue;
                }
                let ej = (g.e(j, sign), g.is_odd(j));
                let eo = (g.e(other, sign), g.is_odd(other));
                let inner = qbracket(ej, eo, &qi);
                let outer = qbracket(ej, (&inner.0, inner.1), &qq);
                if !outer.0.is_zero() {
                    fails.push(format!("j = {j}, j' = {other}, {}", sign.symbol()));
                }
            }
        }
    }
    report.all("cubic Serre relations", fails);

    if m > 1 && n - m > 1 {
        let mut fails = Vec::new();
        for sign in [Sign::Plus, Sign::Minus] {
            let e = |k: usize| (g.e(k, sign), g.is_odd(k));
            let a = qbracket(e(m - 1), e(m), &qq);
            let b = qbracket((&a.0, a.1), e(m + 1), &qi);
            let c = qbracket((&b.0, b.1), e(m), &one);
            if !c.0.is_zero() {
                fails.push(format!("sign {}", sign.symbol()));
            }
        }
        report.all("quartic Serre relation", fails);
    }
    report
}

/// Whether the generator matrices at `q = 1` are the classical ones.
pub fn q_gt_classical_limit(g: &QGtAction) -> Result<bool> {
    let c = build_generator_matrices(&g.shape)?;
    let lim = |m: &Matrix<QNum>| m.try_map(classical_limit);
    for k in 1..g.shape.rank() {
        if lim(&g.e_plus[k - 1])? != c.e[k - 1] || lim(&g.e_minus[k - 1])? != c.f[k - 1] {
            return Ok(false);
        }
    }
    let h_match = (0..g.shape.rank()).all(|k| {
        g.t_exp[k]
            .iter()
            .zip(&c.h[k])
            .all(|(&e, h)| Rational::from_i64(e) == *h)
    });
    Ok(h_match)
}

/// `𝒴_{Λ,k}(u) = Π_{i≤r} q^{λ_{k'i}}(1-uq^{-2l_{ki}})/(1-uq^{-2(r-i+1)})
///   · Π_{j≤k} (q_j^{λ_{k'j'}}(1-uq^{-2l_{kj'}})/(1-uq^{2γ_j}))^{s_j}`.
fn q_script_y(shape: &SkewShape, t: &GtTableau, l: &ContentTable, k: usize) -> QFn {
    let r = shape.r();
    let u = uvar();
    let factor = |lam: i64, l: i64, den_exp: i64| {
        (QFn::one() - u.clone() * qconst(qpow(-2 * l))) * qconst(qpow(lam))
            / (QFn::one() - u.clone() * qconst(qpow(den_exp)))
    };
    let mut y = QFn::one();
    for i in 1..=r {
        y = y * factor(t.row(k)[i - 1], l.l(k, i), -2 * (r - i + 1) as i64);
    }
    for j in 1..=k {
        let s = shape.s(j);
        let f = factor(s * t.row(k)[r + j - 1], l.l(k, r + j), 2 * gamma_int(shape.m(), j));
        y = y * f.pow(s).expect("nonzero factor");
    }
    y
}

/// `ζ_{Λ,k}(u) = (𝒴_{Λ,k}(uq^{-2γ_k}) / 𝒴_{Λ,k-1}(uq^{-2γ_k}))^{s_k}`.
pub fn q_l_weight(shape: &SkewShape, t: &GtTableau) -> Vec<QFn> {
    let l = ContentTable::new(shape, t);
    let ys: Vec<QFn> = (0..=shape.rank()).map(|k| q_script_y(shape, t, &l, k)).collect();
    (1..=shape.rank())
        .map(|k| {
            let c = qpow(-2 * gamma_int(shape.m(), k));
            let ratio = ys[k].scale_var(&c) / ys[k - 1].scale_var(&c);
            ratio.pow(shape.s(k)).expect("nonzero ℓ-weight")
        })
        .collect()
}

/// One transformation `ξ_from → ξ_to` of `x_k^±(u)`: coefficient of
/// `δ(c/u)` with `c = q^pole`, so mode `a` carries `coeff · c^{-a}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QTransition {
    pub from: usize,
    pub to: usize,
    pub k: usize,
    pub i: usize,
    pub sign: Sign,
    pub coeff: QNum,
    pub pole: i64,
}

impl QTransition {
    pub fn mode(&self, a: i64) -> QNum {
        self.coeff.clone() * qpow(-a * self.pole)
    }
}

#[derive(Clone, Debug)]
pub struct QCurrentRep {
    pub shape: SkewShape,
    pub basis: Vec<GtTableau>,
    /// Diagonal of `d_k(u)` as rational functions, `k = 1..m+n`, index
    /// `k-1`; `d_k^+` and `d_k^-` are its expansions at `0` and `∞`.
    pub d: Vec<Vec<QFn>>,
    pub transitions: Vec<QTransition>,
}

/// `x_k^±(u) ξ_Λ = (1 - q_k^{∓2}) Σ_i [ℰ^±_{Λ,ki}] δ(q^{2(l_{ki}+s^±_{ki}+γ_k)}/u) ξ_{Λ±δ_{ki}}`.
pub fn build_q_current_rep(shape: &SkewShape) -> Result<QCurrentRep> {
    let basis = enumerate_tableaux(shape);
    let ts = transitions_with(shape, &basis, &QBracket)?;
    let contents: Vec<ContentTable> = basis.iter().map(|t| ContentTable::new(shape, t)).collect();
    let transitions = ts
        .into_iter()
        .map(|t| {
            let shift = match t.sign {
                Sign::Plus => s_plus(shape, t.k, t.i),
                Sign::Minus => s_minus(shape, t.k, t.i),
            };
            let pole = 2 * (contents[t.from].l(t.k, t.i) + shift + gamma_int(shape.m(), t.k));
            let pref = QNum::one() - qpow(-2 * t.sign.delta() * shape.s(t.k));
            QTransition {
                from: t.from,
                to: t.to,
                k: t.k,
                i: t.i,
                sign: t.sign,
                coeff: pref * t.value,
                pole,
            }
        })
        .collect();
    let weights: Vec<Vec<QFn>> = basis.iter().map(|t| q_l_weight(shape, t)).collect();
    let d = (0..shape.rank())
        .map(|k| weights.iter().map(|w| w[k].clone()).collect())
        .collect();
    Ok(QCurrentRep {
        shape: shape.clone(),
        basis,
        d,
        transitions,
    })
}

impl QCurrentRep {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn rank(&self) -> usize {
        self.d.len()
    }

    /// Parity of `x_k^±`.
    pub fn is_odd(&self, k: usize) -> bool {
        self.shape.s(k) != self.shape.s(k + 1)
    }

    pub fn d_matrix(&self, k: usize) -> Matrix<QFn> {
        Matrix::diagonal(self.d[k - 1].clone())
    }

    pub fn l_weights(&self) -> Vec<Vec<QFn>> {
        (0..self.dim())
            .map(|b| self.d.iter().map(|dk| dk[b].clone()).collect())
            .collect()
    }

    pub fn transitions_of(&self, k: usize, sign: Sign) -> impl Iterator<Item = &QTransition> {
        self.transitions.iter().filter(move |t| t.k == k && t.sign == sign)
    }

    /// `x_{k,a}^±`.
    pub fn x_mode(&self, k: usize, sign: Sign, a: i64) -> Matrix<QNum> {
        let mut x: Matrix<QNum> = Matrix::zeros(self.dim(), self.dim());
        for t in self.transitions_of(k, sign) {
            let v = x.get(t.to, t.from).clone() + t.mode(a);
            x.set(t.to, t.from, v);
        }
        x
    }

    /// All mode matrices with `|a| ≤ window`, for output.
    pub fn x_modes(&self, window: i64) -> Vec<QModeMatrix> {
        let mut out = Vec::new();
        for k in 1..self.rank() {
            for sign in [Sign::Plus, Sign::Minus] {
                for a in -window..=window {
                    let x = self.x_mode(k, sign, a);
                    out.push(QModeMatrix {
                        k,
                        sign,
                        mode: a,
                        entries: x.nonzero_entries().map(|(i, j, v)| (i, j, QElement::from(v))).collect(),
                    });
                }
            }
        }
        out
    }
}

/// Sparse `x_{k,a}^±`: `(row, column, value)` triples.
#[derive(Clone, Debug, Serialize)]
pub struct QModeMatrix {
    pub k: usize,
    pub sign: Sign,
    pub mode: i64,
    pub entries: Vec<(usize, usize, QElement)>,
}

/// Column of `x_{k,a}^±` at `ξ_t` over the GT basis of `shape`.
pub fn q_mode_action(shape: &SkewShape, t: &GtTableau, k: usize, sign: Sign, a: i64) -> Result<Vec<QNum>> {
    if !is_admissible(shape, t) {
        return Err(Error::InvalidShape(format!("source tableau {t} is not admissible")));
    }
    if k == 0 || k >= shape.rank() {
        return Err(Error::OutOfRange(format!("k = {k} outside 1..{}", shape.rank())));
    }
    let rep = build_q_current_rep(shape)?;
    let from = rep
        .basis
        .iter()
        .position(|b| b == t)
        .ok_or_else(|| Error::Internal("admissible tableau missing from the basis".into()))?;
    let mut col = vec![QNum::zero(); rep.dim()];
    for tr in rep.transitions_of(k, sign).filter(|tr| tr.from == from) {
        col[tr.to] = col[tr.to].clone() + tr.mode(a);
    }
    Ok(col)
}

pub fn is_q_thin(rep: &QCurrentRep) -> bool {
    let all = rep.l_weights();
    all.iter().collect::<BTreeSet<_>>().len() == all.len()
}

/// Every transformation between admissible tableaux has a nonzero
/// coefficient.
pub fn check_q_nonvanishing(rep: &QCurrentRep) -> Report {
    let index: std::collections::HashMap<_, _> = rep.basis.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut fails = Vec::new();
    for (from, t) in rep.basis.iter().enumerate() {
        for k in 1..rep.rank() {
            for i in 1..=rep.shape.r() + k {
                for sign in [Sign::Plus, Sign::Minus] {
                    if let Some(&to) = index.get(&t.shifted(k, i, sign.delta())) {
                        let hit = rep
                            .transitions
                            .iter()
                            .any(|tr| tr.from == from && tr.to == to && tr.k == k && tr.sign == sign && !tr.coeff.is_zero());
                        if !hit {
                            fails.push(format!("{t}: x_{k}^{} along (k, i) = ({k}, {i})", sign.symbol()));
                        }
                    }
                }
            }
        }
    }
    let mut r = Report::new();
    r.all("transformation coefficients nonvanishing", fails);
    r
}

/// Thin plus strong connectivity along nonzero transitions (nonzero at
/// every mode, since `c ≠ 0`).
pub fn is_q_irreducible(rep: &QCurrentRep) -> IrreducibilityCertificate {
    let edges: Vec<CurrentEdge> = rep
        .transitions
        .iter()
        .filter(|t| !t.coeff.is_zero())
        .map(|t| CurrentEdge {
            from: t.from,
            to: t.to,
            k: t.k,
            sign: t.sign,
        })
        .collect();
    yangian::certificate(rep.dim(), &edges, is_q_thin(rep))
}

/// `Π_j (d_j(uq^{2γ_j}))^{s_j}` on every basis vector; `Some` of the
/// common value when it acts by a scalar.
pub fn q_central_series(rep: &QCurrentRep) -> Option<QFn> {
    let m = rep.shape.m();
    let values: Vec<QFn> = (0..rep.dim())
        .map(|b| {
            (1..=rep.rank()).fold(QFn::one(), |acc, j| {
                let z = rep.d[j - 1][b].scale_var(&qpow(2 * gamma_int(m, j)));
                acc * z.pow(rep.shape.s(j)).expect("nonzero ℓ-weight")
            })
        })
        .collect();
    let first = values.first().cloned().unwrap_or_else(QFn::one);
    values.iter().all(|v| *v == first).then_some(first)
}

/// Outcome of comparing `ζ^q_k(u)` at `u = q^{2εx}`, `q → 1`, with the
/// Yangian `ζ_k(x)`, for `ε = ±1`. Informational.
#[derive(Clone, Debug, Serialize)]
pub struct Degeneration {
    pub points: Vec<i64>,
    /// `ε` values for which every component agrees at every point.
    pub matching_exponent_signs: Vec<i64>,
}

pub fn classical_degeneration(shape: &SkewShape, t: &GtTableau, points: &[i64]) -> Result<Degeneration> {
    let quantum = q_l_weight(shape, t);
    let classical = yangian::l_weight(shape, t);
    let mut matching = Vec::new();
    for eps in [1i64, -1] {
        let mut ok = true;
        'outer: for &x in points {
            for (zq, zc) in quantum.iter().zip(&classical.0) {
                let at = zq.try_eval(&qpow(2 * eps * x));
                let lim = at.map(|v| classical_limit(&v));
                let expected = zc.try_eval(&Rational::from_i64(x));
                match (lim, expected) {
                    (Some(Ok(a)), Some(b)) if a == b => {}
                    _ => {
                        ok = false;
                        break 'outer;
                    }
                }
            }
        }
        if ok {
            matching.push(eps);
        }
    }
    Ok(Degeneration {
        points: points.to_vec(),
        matching_exponent_signs: matching,
    })
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

    #[test]
    fn vector_module_elements() {
        let (s, b) = vector();
        // basis: bottom (1) first, then bottom (0)
        assert_eq!(b[0].row(1), &[1]);
        assert!(q_matrix_element(&s, &b[1], 1, 1, Sign::Plus).unwrap().is_one());
        assert!(q_matrix_element(&s, &b[0], 1, 1, Sign::Minus).unwrap().is_one());
        assert!(q_matrix_element(&s, &b[0], 1, 1, Sign::Plus).unwrap().is_zero());
    }

    #[test]
    fn vector_module_action() {
        let (s, _) = vector();
        let g = q_gt_action(&s).unwrap();
        assert_eq!(g.t_exp, vec![vec![1, 0], vec![0, 1]]);
        assert!(check_q_superalgebra_relations(&g).passed());
        assert!(q_gt_classical_limit(&g).unwrap());
    }

    #[test]
    fn highest_l_weight_of_vector_module() {
        let (s, b) = vector();
        let z = q_l_weight(&s, &b[0]);
        let u = uvar();
        let expected = (qconst(qpow(1)) - u.clone() * qconst(qpow(-1))) / (QFn::one() - u);
        assert_eq!(z[0], expected);
        let trivial = SkewShape::straight(1, 1, vec![0, 0]).unwrap();
        let t = &enumerate_tableaux(&trivial)[0];
        assert!(q_l_weight(&trivial, t).iter().all(|z| z.is_one()));
    }

    #[test]
    fn mode_law() {
        let (s, b) = vector();
        let col0 = q_mode_action(&s, &b[1], 1, Sign::Plus, 0).unwrap();
        let col1 = q_mode_action(&s, &b[1], 1, Sign::Plus, 1).unwrap();
        let pref = QNum::one() - qpow(-2);
        assert_eq!(col0[0], pref);
        assert_eq!(col1[0], pref * qpow(-2));
        assert!(col0[1].is_zero());
        // the highest vector is killed at every mode
        for a in -3..=3 {
            assert!(q_mode_action(&s, &b[0], 1, Sign::Plus, a).unwrap().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn thin_irreducible_central() {
        let s = SkewShape::straight(2, 1, vec![2, 1, 0]).unwrap();
        let rep = build_q_current_rep(&s).unwrap();
        assert!(is_q_irreducible(&rep).irreducible);
        assert!(q_central_series(&rep).is_some());
    }

    #[test]
    fn degeneration_is_reported() {
        let (s, b) = vector();
        let d = classical_degeneration(&s, &b[1], &[17, 23, 31]).unwrap();
        assert_eq!(d.points.len(), 3);
        let _ = int(0);
    }
}
