//! Independent construction of the currents for rank two (`m + n = 2`,
//! `r = 0`): the quantum GT action, the evaluation morphism
//! `t_ij^±(u) ↦ (t_ij^± - u^{±1} t_ij^∓)/(1 - u^{±1})`, and the graded
//! Gauss decomposition of `T(u)`. Both `T^±(u)` are expansions of the same
//! rational operator matrix, so everything is computed over `ℚ(q)(u)` and
//! expanded at zero (`+`) or infinity (`-`) at the end.

use crate::error::{Error, Result};
use crate::exactmath::{kron, Expansion, Field, Matrix, Rational, SamplePoints};
use crate::report::Report;
use crate::glrep::Sign;
use crate::tableaux::SkewShape;

use super::qnum::{qconst, qfn_at, qpow, uvar, QFn, QNum};
use super::rmatrix::build_q_r_matrix;
use super::{q_gt_action, QGtAction};

#[derive(Clone, Debug)]
pub struct QEvaluationCurrents {
    pub action: QGtAction,
    /// `d_1(u)`, `d_2(u)` as rational operator matrices.
    pub d: [Matrix<QFn>; 2],
    /// `e_12(u)` and `f_21(u)`.
    pub e: Matrix<QFn>,
    pub f: Matrix<QFn>,
    /// `T(u)` itself, `t[i-1][j-1] = t_ij(u)`.
    pub t: [[Matrix<QFn>; 2]; 2],
}

fn lift(m: &Matrix<QNum>) -> Matrix<QFn> {
    m.map(|x| qconst(x.clone()))
}

pub fn evaluation_q_currents(shape: &SkewShape) -> Result<QEvaluationCurrents> {
    if shape.rank() != 2 || shape.r() != 0 {
        return Err(Error::InvalidShape("the quantum evaluation oracle needs m + n = 2 and r = 0".into()));
    }
    let g = q_gt_action(shape)?;
    let dim = g.dim();
    let (s1, s2) = (shape.s(1), shape.s(2));
    let t11p = g.t_pow(1, s1);
    let t11m = g.t_pow(1, -s1);
    let t22p = g.t_pow(2, s2);
    let t22m = g.t_pow(2, -s2);
    let t12p = (&t11p * &g.e_plus[0]).scale(&(QNum::one() - qpow(-2 * s1)));
    let t21m = (&g.e_minus[0] * &t11m).scale(&(QNum::one() - qpow(2 * s1)));

    let u = uvar();
    let inv = QFn::one() / (QFn::one() - u.clone());
    let ev = |plus: &Matrix<QNum>, minus: &Matrix<QNum>| {
        (&lift(plus) - &lift(minus).scale(&u)).scale(&inv)
    };
    let zero = Matrix::zeros(dim, dim);
    let t11 = ev(&t11p, &t11m);
    let t12 = ev(&t12p, &zero);
    let t21 = ev(&zero, &t21m);
    let t22 = ev(&t22p, &t22m);
    let d1_inv = t11
        .inverse()
        .ok_or_else(|| Error::Singular("T_11(u) is not invertible".into()))?;
    let e = &d1_inv * &t12;
    let f = &t21 * &d1_inv;
    // T = F·D·E in End V ⊗ U: (E_21⊗f)(E_11⊗d_1)(E_12⊗e) = (-1)^{|f|} E_22⊗f d_1 e
    let cross = &(&t21 * &d1_inv) * &t12;
    let d2 = if shape.s(1) != shape.s(2) { &t22 + &cross } else { &t22 - &cross };
    let (t11c, t22c) = (t11.clone(), t22);
    Ok(QEvaluationCurrents {
        action: g,
        d: [t11, d2],
        e,
        f,
        t: [[t11c, t12], [t21, t22c]],
    })
}

/// Coefficient of `u^a` of each entry expanded at zero minus at infinity.
fn jump(m: &Matrix<QFn>, a: i64) -> Result<Matrix<QNum>> {
    let order = a.unsigned_abs() as usize;
    m.try_map(|x| {
        let z = if a >= 0 {
            x.series(Expansion::AtZero, order)?.coeff(order)
        } else {
            QNum::zero()
        };
        let i = if a <= 0 {
            x.series(Expansion::AtInfinity, order)?.coeff(order)
        } else {
            QNum::zero()
        };
        Ok(z - i)
    })
}

impl QEvaluationCurrents {
    /// `x_{1,a}^+ = [u^a](e^+ - e^-)`, `x_{1,a}^- = [u^a](f^- - f^+)`.
    pub fn x_mode(&self, sign: Sign, a: i64) -> Result<Matrix<QNum>> {
        match sign {
            Sign::Plus => jump(&self.e, a),
            Sign::Minus => Ok(jump(&self.f, a)?.scale(&-QNum::one())),
        }
    }
}

impl QEvaluationCurrents {
    /// `ℛ(u/v) T_1(u) T_2(v) = T_2(v) T_1(u) ℛ(u/v)` on `V⊗V⊗M` at sampled
    /// `(q, u, v)`, with `t_ij` of parity `|i|+|j|` and Koszul signs.
    pub fn rtt_spot_check(&self, samples: usize, seed: u64) -> Result<Report> {
        let shape = &self.action.shape;
        let (m, n) = (shape.m(), shape.n());
        let r = build_q_r_matrix(m, n)?;
        let odd = |i: usize| i >= m;
        let dim = self.action.dim();
        let mut pts = SamplePoints::new(seed);
        let mut fails = Vec::new();
        let mut done = 0;
        while done < samples {
            let xs = pts.distinct(3, |x| x.is_zero() || x.is_one() || *x == -Rational::one());
            let (q0, u0, v0) = (&xs[0], &xs[1], &xs[2]);
            let at = |x: &Rational| -> Option<Vec<Vec<Matrix<Rational>>>> {
                self.t
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|e| e.try_map(|f| qfn_at(f, q0).and_then(|g| g.try_eval(x)).ok_or(())).ok())
                            .collect()
                    })
                    .collect()
            };
            let (Some(tu), Some(tv), Some(rop)) = (at(u0), at(v0), r.operator(q0, &(u0.clone() / v0.clone()))) else {
                continue;
            };
            let big = 4 * dim;
            let embed = |t: &Vec<Vec<Matrix<Rational>>>, slot: usize| {
                let mut out: Matrix<Rational> = Matrix::zeros(big, big);
                for i in 0..2 {
                    for j in 0..2 {
                        let p = odd(i) ^ odd(j);
                        for other in 0..2 {
                            let (src, dst, sign) = if slot == 0 {
                                ((j, other), (i, other), p && (odd(j) ^ odd(other)))
                            } else {
                                ((other, j), (other, i), p && odd(j))
                            };
                            for (a, b, v) in t[i][j].nonzero_entries() {
                                let row = (dst.0 * 2 + dst.1) * dim + a;
                                let col = (src.0 * 2 + src.1) * dim + b;
                                let v = if sign { -v.clone() } else { v.clone() };
                                let cur = out.get(row, col).clone() + v;
                                out.set(row, col, cur);
                            }
                        }
                    }
                }
                out
            };
            let r12 = kron(&rop, &Matrix::identity(dim));
            let (t1, t2) = (embed(&tu, 0), embed(&tv, 1));
            if &(&r12 * &t1) * &t2 != &(&t2 * &t1) * &r12 {
                fails.push(format!("(q, u, v) = ({q0}, {u0}, {v0})"));
            }
            done += 1;
        }
        let mut report = Report::new();
        report.all(format!("RTT relation for the evaluation module at {samples} points"), fails);
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rtt_holds() {
        for (m, n, l) in [(2, 0, vec![1, 0]), (0, 2, vec![2, 0]), (1, 1, vec![1, 0]), (1, 1, vec![2, 1])] {
            let s = SkewShape::straight(m, n, l).unwrap();
            let rep = evaluation_q_currents(&s).unwrap().rtt_spot_check(3, 5).unwrap();
            assert!(rep.passed(), "{s:?}: {:?}", rep.failures().collect::<Vec<_>>());
        }
    }
}
