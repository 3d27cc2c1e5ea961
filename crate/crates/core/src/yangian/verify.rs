//! Relation checks for the Drinfeld currents.
//!
//! Each two-variable relation is checked two ways:
//!
//! * sampled: `v` is fixed at enough distinct rational points and the
//!   relation is compared exactly as matrices over `ℚ(u)`. After clearing
//!   denominators the difference is a polynomial in `v` of degree at most
//!   `D_v` (from [`degree_bound`]), so `D_v + 1` points prove it; the count
//!   used is `max(samples, D_v + 1)`. Fully numeric `(u, v)` pairs are
//!   evaluated as well.
//! * series: coefficients of `u^{-a} v^{-b}` of the expansions at infinity
//!   up to the truncation order.

use crate::exactmath::{degree_bound, Expansion, Field, Matrix, RatFn, Rational, SamplePoints};
use crate::glrep::Sign;
use crate::report::Report;
use crate::Result;

use super::CurrentRep;

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub samples: usize,
    pub order: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            samples: 20,
            order: 6,
            seed: 0x5eed,
        }
    }
}

pub(crate) fn eval_matrix(m: &Matrix<RatFn>, x: &Rational) -> Option<Matrix<Rational>> {
    m.try_map(|f| f.try_eval(x).ok_or(())).ok()
}

pub(crate) fn constants(m: &Matrix<Rational>) -> Matrix<RatFn> {
    m.map(|c| RatFn::constant(c.clone()))
}

pub(crate) fn has_pole(ms: &[&Matrix<RatFn>], x: &Rational) -> bool {
    ms.iter().any(|m| m.nonzero_entries().any(|(_, _, f)| f.den().eval(x).is_zero()))
}

// The relations, written once over any field. `u`, `v` are the values (or
// the variable) at which the matrices were taken.

/// `(u-v)[d_i(u), x_j^+(v)] - c d_i(u)(x_j^+(v) - x_j^+(u))`
fn rel_plus<F: Field>(c: i64, du: &Matrix<F>, xu: &Matrix<F>, xv: &Matrix<F>, u: &F, v: &F) -> bool {
    let lhs = du.commutator(xv).scale(&(u.clone() - v.clone()));
    let rhs = (du * &(xv - xu)).scale(&F::from_i64(c));
    lhs == rhs
}

/// `(u-v)[d_i(u), x_j^-(v)] - c (x_j^-(u) - x_j^-(v)) d_i(u)`
fn rel_minus<F: Field>(c: i64, du: &Matrix<F>, xu: &Matrix<F>, xv: &Matrix<F>, u: &F, v: &F) -> bool {
    let lhs = du.commutator(xv).scale(&(u.clone() - v.clone()));
    let rhs = (&(xu - xv) * du).scale(&F::from_i64(c));
    lhs == rhs
}

/// Coefficient `s_i δ_ij - s_i δ_{i,j+1}`.
fn coefficient(rep: &CurrentRep, i: usize, j: usize) -> i64 {
    let s = rep.shape.s(i);
    s * (i64::from(i == j) - i64::from(i == j + 1))
}

pub(crate) struct Sampler {
    pub(crate) points: SamplePoints,
    pub(crate) samples: usize,
}

impl Sampler {
    /// Checks `check(u-side matrices, v0)` exactly over `ℚ(u)` at enough
    /// `v0` to cover the degree bound of the `v`-side matrices plus `extra`.
    pub(crate) fn exact_in_u(
        &mut self,
        v_side: &[&Matrix<RatFn>],
        extra: usize,
        mut check: impl FnMut(&Rational) -> bool,
    ) -> std::result::Result<usize, String> {
        let bound = v_side.iter().map(|m| degree_bound(m)).sum::<usize>() + extra;
        let count = self.samples.max(bound + 1);
        let pts = self.points.distinct(count, |x| has_pole(v_side, x));
        for v in &pts {
            if !check(v) {
                return Err(format!("fails at v = {v} (degree bound {bound})"));
            }
        }
        Ok(count)
    }

    pub(crate) fn pairs(&mut self, all: &[&Matrix<RatFn>]) -> Vec<(Rational, Rational)> {
        (0..self.samples)
            .map(|_| {
                let u = self.points.next(|x| has_pole(all, x));
                let v = self.points.next(|x| has_pole(all, x) || *x == u);
                (u, v)
            })
            .collect()
    }
}

pub(crate) fn series(m: &Matrix<RatFn>, order: usize) -> Result<Vec<Matrix<Rational>>> {
    let mut out = vec![Matrix::zeros(m.rows(), m.cols()); order + 1];
    for (i, j, f) in m.nonzero_entries() {
        for (a, c) in f.series(Expansion::AtInfinity, order)?.coefficients().iter().enumerate() {
            out[a].set(i, j, c.clone());
        }
    }
    Ok(out)
}

/// Checks the Drinfeld relations (a)–(d): commuting `d`'s, the `d`–`x^±` exchange
/// relations and supercommutation of distant `x`'s.
pub fn verify_drinfeld_relations(rep: &CurrentRep, opts: &VerifyOptions) -> Result<Report> {
    let mut report = Report::new();
    let n = rep.rank();
    let gens = 1..n;
    let dims = rep.dim();
    let mut sampler = Sampler {
        points: SamplePoints::new(opts.seed),
        samples: opts.samples,
    };
    let u = RatFn::var();
    let ds: Vec<Matrix<RatFn>> = (1..=n).map(|k| rep.d_matrix(k)).collect();
    let all: Vec<&Matrix<RatFn>> = ds.iter().chain(&rep.x_plus).chain(&rep.x_minus).collect();

    // ---- sampled, exact in u
    let mut fails = Vec::new();
    for i in 1..=n {
        for k in 1..=n {
            let r = sampler.exact_in_u(&[&ds[k - 1]], 0, |v| {
                let dv = constants(&eval_matrix(&ds[k - 1], v).expect("pole avoided"));
                ds[i - 1].commutator(&dv).is_zero()
            });
            if let Err(e) = r {
                fails.push(format!("[d_{i}(u), d_{k}(v)] {e}"));
            }
        }
    }
    report.all("(a) [d_i(u), d_k(v)] = 0, sampled", fails);

    for (name, xs, plus) in [("(b)", &rep.x_plus, true), ("(c)", &rep.x_minus, false)] {
        let mut fails = Vec::new();
        for i in 1..=n {
            for j in gens.clone() {
                let c = coefficient(rep, i, j);
                let x = &xs[j - 1];
                let r = sampler.exact_in_u(&[x], 1, |v| {
                    let xv = constants(&eval_matrix(x, v).expect("pole avoided"));
                    let vv = RatFn::constant(v.clone());
                    if plus {
                        rel_plus(c, &ds[i - 1], x, &xv, &u, &vv)
                    } else {
                        rel_minus(c, &ds[i - 1], x, &xv, &u, &vv)
                    }
                });
                if let Err(e) = r {
                    fails.push(format!("i={i}, j={j}: {e}"));
                }
            }
        }
        let sym = if plus { '+' } else { '-' };
        report.all(format!("{name} (u-v)[d_i(u), x_j^{sym}(v)], sampled"), fails);
    }

    let mut fails = Vec::new();
    for (sym, xs) in [('+', &rep.x_plus), ('-', &rep.x_minus)] {
        for j in gens.clone() {
            for l in gens.clone().filter(|&l| l.abs_diff(j) > 1) {
                let (xj, xl) = (&xs[j - 1], &xs[l - 1]);
                let (pj, pl) = (rep.is_odd(j), rep.is_odd(l));
                let r = sampler.exact_in_u(&[xl], 0, |v| {
                    let xv = constants(&eval_matrix(xl, v).expect("pole avoided"));
                    xj.supercommutator(pj, &xv, pl).is_zero()
                });
                if let Err(e) = r {
                    fails.push(format!("[x_{j}^{sym}(u), x_{l}^{sym}(v)] {e}"));
                }
            }
        }
    }
    report.all("(d) [x_j^±(u), x_l^±(v)] = 0 for |j-l| > 1, sampled", fails);

    // ---- numeric pairs
    let mut fails = Vec::new();
    for (u0, v0) in sampler.pairs(&all) {
        let at = |m: &Matrix<RatFn>, x: &Rational| eval_matrix(m, x).expect("pole avoided");
        for i in 1..=n {
            let du = at(&ds[i - 1], &u0);
            for k in 1..=n {
                if !du.commutator(&at(&ds[k - 1], &v0)).is_zero() {
                    fails.push(format!("(a) i={i} k={k} at ({u0}, {v0})"));
                }
            }
            for j in gens.clone() {
                let c = coefficient(rep, i, j);
                let (xu, xv) = (at(&rep.x_plus[j - 1], &u0), at(&rep.x_plus[j - 1], &v0));
                if !rel_plus(c, &du, &xu, &xv, &u0, &v0) {
                    fails.push(format!("(b) i={i} j={j} at ({u0}, {v0})"));
                }
                let (xu, xv) = (at(&rep.x_minus[j - 1], &u0), at(&rep.x_minus[j - 1], &v0));
                if !rel_minus(c, &du, &xu, &xv, &u0, &v0) {
                    fails.push(format!("(c) i={i} j={j} at ({u0}, {v0})"));
                }
            }
        }
    }
    report.all(format!("(a)-(c) at {} random (u, v) pairs", opts.samples), fails);

    // ---- series at infinity
    let order = opts.order;
    let dser: Vec<Vec<Matrix<Rational>>> = ds.iter().map(|d| series(d, order + 1)).collect::<Result<_>>()?;
    let xp: Vec<Vec<Matrix<Rational>>> = rep.x_plus.iter().map(|x| series(x, order + 1)).collect::<Result<_>>()?;
    let xm: Vec<Vec<Matrix<Rational>>> = rep.x_minus.iter().map(|x| series(x, order + 1)).collect::<Result<_>>()?;
    let zero = Matrix::<Rational>::zeros(dims, dims);

    let mut fails = Vec::new();
    for i in 0..n {
        for k in 0..n {
            for a in 0..=order {
                for b in 0..=order {
                    if !dser[i][a].commutator(&dser[k][b]).is_zero() {
                        fails.push(format!("[D_{}^({a}), D_{}^({b})]", i + 1, k + 1));
                    }
                }
            }
        }
    }
    report.all(format!("(a) series to order {order}"), fails);

    for (name, xs, plus) in [("(b)", &xp, true), ("(c)", &xm, false)] {
        let mut fails = Vec::new();
        for i in 1..=n {
            let d = &dser[i - 1];
            for j in gens.clone() {
                let c = Rational::from_i64(coefficient(rep, i, j));
                let x = &xs[j - 1];
                for a in 0..=order {
                    for b in 0..=order {
                        let lhs = &d[a + 1].commutator(&x[b]) - &d[a].commutator(&x[b + 1]);
                        let conv = if b == 0 {
                            (0..=a).fold(zero.clone(), |acc, a1| {
                                let term = if plus { &d[a1] * &x[a - a1] } else { &x[a - a1] * &d[a1] };
                                &acc + &term
                            })
                        } else {
                            zero.clone()
                        };
                        let rhs = if plus {
                            &(&d[a] * &x[b]) - &conv
                        } else {
                            &conv - &(&x[b] * &d[a])
                        };
                        if lhs != rhs.scale(&c) {
                            fails.push(format!("i={i}, j={j}, u^-{a} v^-{b}"));
                        }
                    }
                }
            }
        }
        report.all(format!("{name} series to order {order}"), fails);
    }

    let mut fails = Vec::new();
    for (sym, xs) in [('+', &xp), ('-', &xm)] {
        for j in gens.clone() {
            for l in gens.clone().filter(|&l| l.abs_diff(j) > 1) {
                for a in 0..=order {
                    for b in 0..=order {
                        let c = xs[j - 1][a].supercommutator(rep.is_odd(j), &xs[l - 1][b], rep.is_odd(l));
                        if !c.is_zero() {
                            fails.push(format!("x_{j}^{sym}, x_{l}^{sym} at u^-{a} v^-{b}"));
                        }
                    }
                }
            }
        }
    }
    report.all(format!("(d) series to order {order}"), fails);
    Ok(report)
}

/// The diagonal of `Π_j d_j(u - γ_j)^{s_j}`, which must be scalar.
pub fn central_series_diagonal(rep: &CurrentRep) -> Vec<RatFn> {
    let m = rep.m();
    let gammas = super::gamma_sequence(m, rep.rank() - m);
    (0..rep.dim())
        .map(|b| {
            (1..=rep.rank()).fold(RatFn::one(), |acc, j| {
                let f = rep.d[j - 1][b].shift(&-gammas[j - 1].clone());
                acc * f.pow(rep.shape.s(j)).expect("ℓ-weights are nonzero")
            })
        })
        .collect()
}

/// Scalarity of the central series, exactly and on its expansion to
/// `order`. Returns the report and, when scalar, the common value.
pub fn verify_central_series(rep: &CurrentRep, order: usize) -> Result<(Report, Option<RatFn>)> {
    let mut report = Report::new();
    let diag = central_series_diagonal(rep);
    let scalar = diag.first().cloned().filter(|c| diag.iter().all(|x| x == c));
    match &scalar {
        Some(_) => report.pass("central series is scalar"),
        None => report.fail("central series is scalar", "diagonal entries differ"),
    }
    let mut fails = Vec::new();
    let first = diag.first().map(|f| f.series(Expansion::AtInfinity, order)).transpose()?;
    for (b, f) in diag.iter().enumerate() {
        if Some(f.series(Expansion::AtInfinity, order)?) != first {
            fails.push(format!("basis vector {b}"));
        }
    }
    report.all(format!("central series coefficients agree to order {order}"), fails);
    Ok((report, scalar))
}

/// Every transformation `ξ_Λ → ξ_{Λ±δ_{ki}}` with both ends admissible
/// has a nonzero coefficient in `x_k^±(u)`.
pub fn check_nonvanishing(rep: &CurrentRep) -> Report {
    let index: std::collections::HashMap<_, _> = rep.basis.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let shape = &rep.shape;
    let mut fails = Vec::new();
    for (from, t) in rep.basis.iter().enumerate() {
        for k in 1..shape.rank() {
            for i in 1..=shape.r() + k {
                for (sign, xs) in [(Sign::Plus, &rep.x_plus), (Sign::Minus, &rep.x_minus)] {
                    if let Some(&to) = index.get(&t.shifted(k, i, sign.delta())) {
                        if xs[k - 1].get(to, from).is_zero() {
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
