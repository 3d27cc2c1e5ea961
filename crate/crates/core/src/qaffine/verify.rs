//! The relations between `d_k^±(u)` and `x_k^±(u)` on a [`QCurrentRep`].
//!
//! Each current `x_i^±(w)` is `Σ_t A_t E_t δ(c_t/w)` over transformations
//! `t`, and `f(w) δ(c/w) = f(c) δ(c/w)`, so every relation becomes a
//! finite family of identities in `ℚ(q)(u)` that hold for all modes at
//! once. Three independent detectors are run:
//! - the exact identities over `ℚ(q)(u)`;
//! - the same identities at sampled rational `q`, checked at enough `u`
//!   points to cover their degree;
//! - the mode-by-mode comparison of the coefficients of `u^a w^b` for all
//!   modes in a window, using mode matrices and the series of `d^+`
//!   (at zero) and `d^-` (at infinity).

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactmath::{Expansion, Field, Matrix, RatFn, Rational, SamplePoints};
use crate::glrep::Sign;
use crate::report::Report;

use super::qnum::{q_sign, qconst, qfn_at, qpow, uvar, QFn, QNum};
use super::{QCurrentRep, QTransition};

#[derive(Clone, Debug)]
pub struct QVerifyOptions {
    /// Modes `-window..=window`.
    pub window: i64,
    /// Sampled values of `q`.
    pub samples: usize,
    pub seed: u64,
}

impl Default for QVerifyOptions {
    fn default() -> Self {
        QVerifyOptions {
            window: 4,
            samples: 20,
            seed: 0,
        }
    }
}

/// `g(u, c)` with `d_j(u) x_i^±(w) = g(u,w)^{∓1} x_i^±(w) d_j(u)`, or `None`
/// when `d_j` commutes with `x_i`: `(αu + βc)/(u - c)`.
fn exchange_factor(rep: &QCurrentRep, j: usize, i: usize) -> Option<(QNum, QNum)> {
    if j == i {
        let qi = q_sign(rep.shape.s(i));
        Some((qi.clone(), -(QNum::one() / qi)))
    } else if j == i + 1 {
        let qj = q_sign(rep.shape.s(i + 1));
        Some((QNum::one() / qj.clone(), -qj))
    } else {
        None
    }
}

/// `ζ_j(Λ')(u) / ζ_j(Λ)(u)` predicted for a transformation `Λ → Λ'` of
/// `x_i^±` with pole `c`.
fn predicted_ratio(rep: &QCurrentRep, j: usize, t: &QTransition) -> QFn {
    let Some((alpha, beta)) = exchange_factor(rep, j, t.k) else {
        return QFn::one();
    };
    let c = qconst(qpow(t.pole));
    let u = uvar();
    let g = (u.clone() * qconst(alpha) + c.clone() * qconst(beta)) / (u - c);
    match t.sign {
        Sign::Plus => QFn::one() / g,
        Sign::Minus => g,
    }
}

fn active(rep: &QCurrentRep) -> impl Iterator<Item = &QTransition> {
    rep.transitions.iter().filter(|t| !t.coeff.is_zero())
}

/// The `d`–`x^±` exchange relations exactly: `ζ_j(Λ') = predicted · ζ_j(Λ)` for
/// every transformation.
fn dx_exact(rep: &QCurrentRep) -> Vec<String> {
    let mut fails = Vec::new();
    for t in active(rep) {
        for j in 1..=rep.rank() {
            let lhs = rep.d[j - 1][t.to].clone();
            let rhs = predicted_ratio(rep, j, t) * rep.d[j - 1][t.from].clone();
            if lhs != rhs {
                fails.push(format!(
                    "d_{j} and x_{}^{} on {} → {}",
                    t.k,
                    t.sign.symbol(),
                    rep.basis[t.from],
                    rep.basis[t.to]
                ));
            }
        }
    }
    fails
}

fn deg(f: &RatFn) -> usize {
    f.num().deg0().max(f.den().deg0())
}

/// The same identities with `q` specialized to sampled rationals (never 0
/// or ±1, hence not roots of unity), each checked at `deg + 1` values of
/// `u`, which decides it for that `q`.
fn dx_sampled(rep: &QCurrentRep, opts: &QVerifyOptions) -> Vec<String> {
    let mut points = SamplePoints::new(opts.seed);
    let bad_q = |x: &Rational| x.is_zero() || x.clone() * x.clone() == Rational::one();
    let qs = points.distinct(opts.samples, bad_q);
    let mut fails = Vec::new();
    for q0 in &qs {
        let spec = |f: &QFn| qfn_at(f, q0);
        for t in active(rep) {
            for j in 1..=rep.rank() {
                let (Some(to), Some(from), Some(ratio)) = (
                    spec(&rep.d[j - 1][t.to]),
                    spec(&rep.d[j - 1][t.from]),
                    spec(&predicted_ratio(rep, j, t)),
                ) else {
                    // q0 hit a pole of a coefficient; another sample covers it
                    continue;
                };
                let n = deg(&to) + deg(&from) + deg(&ratio) + 1;
                let us = points.distinct(n, |u| {
                    to.try_eval(u).is_none() || from.try_eval(u).is_none() || ratio.try_eval(u).is_none()
                });
                for u0 in us {
                    let l = to.eval(&u0).expect("pole avoided");
                    let r = ratio.eval(&u0).expect("pole avoided") * from.eval(&u0).expect("pole avoided");
                    if l != r {
                        fails.push(format!("d_{j}, x_{}^{} at q = {q0}, u = {u0}", t.k, t.sign.symbol()));
                    }
                }
            }
        }
    }
    fails
}

/// `X_a(u) X_b(w)` as coefficients of `E_{to,from} δ(c_1/u) δ(c_2/w)`,
/// keyed `(to, from, pole_u, pole_w)`; `second` acts after `first`.
type DeltaProduct = BTreeMap<(usize, usize, i64, i64), QNum>;

fn delta_product(
    first: &[&QTransition],
    second: &[&QTransition],
    first_is_u: bool,
    out: &mut DeltaProduct,
    scale: &QNum,
) {
    for a in first {
        for b in second.iter().filter(|b| b.from == a.to) {
            let (pu, pw) = if first_is_u { (a.pole, b.pole) } else { (b.pole, a.pole) };
            let e = out.entry((b.to, a.from, pu, pw)).or_insert_with(QNum::zero);
            *e = e.clone() + a.coeff.clone() * b.coeff.clone() * scale.clone();
        }
    }
}

fn super_sign(rep: &QCurrentRep, i: usize, l: usize) -> QNum {
    if rep.is_odd(i) && rep.is_odd(l) {
        QNum::one()
    } else {
        -QNum::one()
    }
}

/// `[x_i^σ(u), x_l^τ(w)]` in delta form.
fn commutator(rep: &QCurrentRep, (i, si): (usize, Sign), (l, sl): (usize, Sign)) -> DeltaProduct {
    let xi: Vec<&QTransition> = rep.transitions_of(i, si).filter(|t| !t.coeff.is_zero()).collect();
    let xl: Vec<&QTransition> = rep.transitions_of(l, sl).filter(|t| !t.coeff.is_zero()).collect();
    let mut out = DeltaProduct::new();
    // x_i(u) x_l(w): x_l first
    delta_product(&xl, &xi, false, &mut out, &QNum::one());
    // ∓ x_l(w) x_i(u): x_i first
    delta_product(&xi, &xl, true, &mut out, &super_sign(rep, i, l));
    out.retain(|_, v| !v.is_zero());
    out
}

/// `[x_i^±(u), x_l^±(w)] = 0` for `|i - l| ≥ 2`, exactly.
fn xx_far_exact(rep: &QCurrentRep) -> Vec<String> {
    let mut fails = Vec::new();
    for sign in [Sign::Plus, Sign::Minus] {
        for i in 1..rep.rank() {
            for l in i + 2..rep.rank() {
                if let Some(((to, from, _, _), _)) = commutator(rep, (i, sign), (l, sign)).into_iter().next() {
                    fails.push(format!("[x_{i}^{s}, x_{l}^{s}] at ({to}, {from})", s = sign.symbol()));
                }
            }
        }
    }
    fails
}

/// `d_{i+1}(u)/d_i(u)` on basis vector `b`.
fn ratio(rep: &QCurrentRep, i: usize, b: usize) -> QFn {
    rep.d[i][b].clone() / rep.d[i - 1][b].clone()
}

/// `[x_i^+(u), x_l^-(w)]` exactly. With `F = d_{i+1}/d_i = K + Σ_p R_p/(1 - u/p)`,
/// `F^+(u) - F^-(u) = Σ_p R_p δ(u/p)`, so the commutator must be diagonal,
/// supported on `δ(p/u)δ(p/w)`, with `L_p = (q_i - q_i^{-1}) R_p` and no
/// other poles in `F`.
fn xx_exact(rep: &QCurrentRep) -> Vec<String> {
    let mut fails = Vec::new();
    for i in 1..rep.rank() {
        for l in 1..rep.rank() {
            let c = commutator(rep, (i, Sign::Plus), (l, Sign::Minus));
            let mut residues: BTreeMap<usize, Vec<(i64, QNum)>> = BTreeMap::new();
            for ((to, from, pu, pw), v) in c {
                if i != l || to != from || pu != pw {
                    fails.push(format!("[x_{i}^+, x_{l}^-]: stray term at ({to}, {from}), poles q^{pu}, q^{pw}"));
                } else {
                    residues.entry(to).or_default().push((pu, v));
                }
            }
            if i != l {
                continue;
            }
            let qi = q_sign(rep.shape.s(i));
            let norm = QNum::one() / (qi.clone() - QNum::one() / qi);
            for b in 0..rep.dim() {
                let mut g = ratio(rep, i, b);
                for (p, lp) in residues.remove(&b).unwrap_or_default() {
                    let simple = QFn::one() / (QFn::one() - uvar() * qconst(qpow(-p)));
                    g = g - simple * qconst(lp * norm.clone());
                }
                if g.as_constant().is_none() {
                    fails.push(format!("[x_{i}^+, x_{i}^-] on {}: d_{}/d_{i} has unmatched poles", rep.basis[b], i + 1));
                }
            }
        }
    }
    fails
}

/// Coefficient of `u^a` in the expansion of `f` at zero (`a ≥ 0`) or at
/// infinity (`a ≤ 0`), from precomputed series.
struct Expansions {
    at_zero: Vec<QNum>,
    at_infinity: Vec<QNum>,
}

impl Expansions {
    fn new(f: &QFn, order: usize) -> Result<Self> {
        Ok(Expansions {
            at_zero: f.series(Expansion::AtZero, order)?.coefficients().to_vec(),
            at_infinity: f.series(Expansion::AtInfinity, order)?.coefficients().to_vec(),
        })
    }

    /// `d^⋆` coefficient of `u^a`.
    fn coeff(&self, plus: bool, a: i64) -> QNum {
        let get = |v: &[QNum], i: i64| v.get(i as usize).cloned().unwrap_or_else(QNum::zero);
        match (plus, a) {
            (true, a) if a >= 0 => get(&self.at_zero, a),
            (false, a) if a <= 0 => get(&self.at_infinity, -a),
            _ => QNum::zero(),
        }
    }
}

/// Exchange relations mode by mode: for `σ = +`, `(αu + βw) d(u) x(w) = (u - w) x(w) d(u)`;
/// for `σ = -` the two factors swap. The `u^A w^B` coefficient only
/// involves `d_{A-1}, d_A, x_{B-1}, x_B`, so it is checked per entry.
fn dx_modes(rep: &QCurrentRep, w: i64, series: &[Vec<Expansions>]) -> Vec<String> {
    let mut fails = Vec::new();
    for t in active(rep) {
        for j in 1..=rep.rank() {
            let (alpha, beta) = exchange_factor(rep, j, t.k).unwrap_or((QNum::one(), -QNum::one()));
            for plus in [true, false] {
                let d_to = |a: i64| series[j - 1][t.to].coeff(plus, a);
                let d_from = |a: i64| series[j - 1][t.from].coeff(plus, a);
                for a in -w..=w {
                    for b in -w + 1..=w {
                        let (x_b, x_b1) = (t.mode(b), t.mode(b - 1));
                        // (αu + βw) D X and (u - w) X D at u^a w^b
                        let lin_dx = alpha.clone() * d_to(a - 1) * x_b.clone() + beta.clone() * d_to(a) * x_b1.clone();
                        let diff_xd = x_b.clone() * d_from(a - 1) - x_b1.clone() * d_from(a);
                        let diff_dx = d_to(a - 1) * x_b.clone() - d_to(a) * x_b1.clone();
                        let plain = d_to(a) * x_b.clone() == x_b.clone() * d_from(a);
                        let lin_xd = alpha.clone() * x_b * d_from(a - 1) + beta.clone() * x_b1 * d_from(a);
                        let ok = match (exchange_factor(rep, j, t.k).is_some(), t.sign) {
                            (false, _) => plain,
                            (true, Sign::Plus) => lin_dx == diff_xd,
                            (true, Sign::Minus) => diff_dx == lin_xd,
                        };
                        if !ok {
                            fails.push(format!(
                                "d_{j}^{} x_{}^{} at u^{a} w^{b} on {}",
                                if plus { '+' } else { '-' },
                                t.k,
                                t.sign.symbol(),
                                rep.basis[t.from]
                            ));
                        }
                    }
                }
            }
        }
    }
    fails
}

fn sparse_mul(a: &Matrix<QNum>, b: &Matrix<QNum>) -> Matrix<QNum> {
    let mut out: Matrix<QNum> = Matrix::zeros(a.rows(), b.cols());
    let bn: Vec<(usize, usize, QNum)> = b.nonzero_entries().map(|(i, j, v)| (i, j, v.clone())).collect();
    for (i, k, x) in a.nonzero_entries() {
        for (_, j, y) in bn.iter().filter(|(r, _, _)| *r == k) {
            let v = out.get(i, *j).clone() + x.clone() * y.clone();
            out.set(i, *j, v);
        }
    }
    out
}

/// `[x^+, x^-]` mode by mode: `[x_{i,a}^+, x_{l,b}^-] = δ_il (q_i - q_i^{-1})
/// (F^+_{a+b} - F^-_{a+b})` with `F^± = d_{i+1}^±/d_i^±`, `F^+_N = 0` for
/// `N < 0` and `F^-_N = 0` for `N > 0`.
fn xx_modes(rep: &QCurrentRep, w: i64) -> Result<Vec<String>> {
    let mut fails = Vec::new();
    let order = (2 * w) as usize;
    let n = rep.rank();
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for i in 1..n {
        plus.push((-w..=w).map(|a| rep.x_mode(i, Sign::Plus, a)).collect::<Vec<_>>());
        minus.push((-w..=w).map(|a| rep.x_mode(i, Sign::Minus, a)).collect::<Vec<_>>());
    }
    for i in 1..n {
        let ratios = (0..rep.dim())
            .map(|b| Expansions::new(&ratio(rep, i, b), order))
            .collect::<Result<Vec<_>>>()?;
        let qi = q_sign(rep.shape.s(i));
        let pref = qi.clone() - QNum::one() / qi;
        for l in 1..n {
            for a in -w..=w {
                for b in -w..=w {
                    let xp = &plus[i - 1][(a + w) as usize];
                    let xm = &minus[l - 1][(b + w) as usize];
                    let sign = super_sign(rep, i, l);
                    let lhs = &sparse_mul(xp, xm) + &sparse_mul(xm, xp).scale(&sign);
                    let rhs = if i == l {
                        let nn = a + b;
                        Matrix::diagonal(
                            ratios
                                .iter()
                                .map(|f| (f.coeff(true, nn) - f.coeff(false, nn)) * pref.clone())
                                .collect(),
                        )
                    } else {
                        Matrix::zeros(rep.dim(), rep.dim())
                    };
                    if lhs != rhs {
                        fails.push(format!("[x_{{{i},{a}}}^+, x_{{{l},{b}}}^-]"));
                    }
                }
            }
        }
    }
    Ok(fails)
}

/// `[x_{i,a}^±, x_{l,b}^±] = 0` for `|i - l| ≥ 2` within the window.
fn xx_far_modes(rep: &QCurrentRep, w: i64) -> Vec<String> {
    let mut fails = Vec::new();
    for sign in [Sign::Plus, Sign::Minus] {
        for i in 1..rep.rank() {
            for l in i + 2..rep.rank() {
                for a in -w..=w {
                    for b in -w..=w {
                        let (x, y) = (rep.x_mode(i, sign, a), rep.x_mode(l, sign, b));
                        let c = &sparse_mul(&x, &y) + &sparse_mul(&y, &x).scale(&super_sign(rep, i, l));
                        if !c.is_zero() {
                            fails.push(format!("[x_{{{i},{a}}}^{s}, x_{{{l},{b}}}^{s}]", s = sign.symbol()));
                        }
                    }
                }
            }
        }
    }
    fails
}

/// The full current relation suite. The window must contain at least the modes
/// `-1, 0, 1`, the smallest window in which every term of the mode
/// identities appears.
pub fn verify_q_relations(rep: &QCurrentRep, opts: &QVerifyOptions) -> Result<Report> {
    if opts.window < 1 {
        return Err(Error::InvalidSpec(format!("mode window {} < 1", opts.window)));
    }
    let w = opts.window;
    let mut report = Report::new();

    let diagonal = (1..=rep.rank()).all(|k| rep.d_matrix(k).is_diagonal());
    report.record("[d_j(u), d_k(w)] = 0 (diagonal on the GT basis)", diagonal, None);

    report.all("d_j x_i^± exchange relations, exact in ℚ(q)(u)", dx_exact(rep));
    report.all(
        format!("d_j x_i^± exchange relations at {} sampled q", opts.samples),
        dx_sampled(rep, opts),
    );
    let series = rep
        .d
        .iter()
        .map(|dk| dk.iter().map(|f| Expansions::new(f, (w + 1) as usize)).collect())
        .collect::<Result<Vec<Vec<_>>>>()?;
    report.all(format!("d_j^± x_i^± exchange relations, modes |a| ≤ {w}"), dx_modes(rep, w, &series));

    report.all("[x_i^±(u), x_l^±(w)] = 0 for |i-l| ≥ 2, exact", xx_far_exact(rep));
    report.all(format!("[x_i^±, x_l^±] = 0 for |i-l| ≥ 2, modes |a| ≤ {w}"), xx_far_modes(rep, w));

    report.all("[x_i^+(u), x_l^-(w)], exact", xx_exact(rep));
    report.all(format!("[x_i^+, x_l^-], modes |a|, |b| ≤ {w}"), xx_modes(rep, w)?);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qaffine::build_q_current_rep;
    use crate::tableaux::SkewShape;

    #[test]
    fn vector_module() {
        let s = SkewShape::straight(1, 1, vec![1, 0]).unwrap();
        let rep = build_q_current_rep(&s).unwrap();
        let r = verify_q_relations(&rep, &QVerifyOptions::default()).unwrap();
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn trivial_module() {
        let s = SkewShape::straight(1, 1, vec![0, 0]).unwrap();
        let rep = build_q_current_rep(&s).unwrap();
        assert!(verify_q_relations(&rep, &QVerifyOptions::default()).unwrap().passed());
    }

    #[test]
    fn window_must_be_positive() {
        let s = SkewShape::straight(1, 1, vec![1, 0]).unwrap();
        let rep = build_q_current_rep(&s).unwrap();
        let opts = QVerifyOptions {
            window: 0,
            ..Default::default()
        };
        assert!(verify_q_relations(&rep, &opts).is_err());
    }
}
