//! Relation checks on RTT modules. Two-variable identities are checked
//! exactly in `u` at enough sampled `x` to cover their degree in `x`, and
//! at random numeric pairs.

use crate::error::{Error, Result};
use crate::exactmath::{Field, Matrix, RatFn, Rational, SamplePoints};
use crate::report::Report;
use crate::yangian::verify::{constants, eval_matrix, Sampler};
use crate::yangian::{LWeight, VerifyOptions};

use super::{gauss_d1, gauss_d2, RttRep};

const PAIRS: [(usize, usize); 4] = [(1, 1), (1, 2), (2, 1), (2, 2)];

fn rtt_sign(rep: &RttRep, i: usize, j: usize, k: usize) -> i64 {
    let p = |a: usize| u8::from(rep.index_parity[a - 1]);
    if (p(i) * p(j) + p(i) * p(k) + p(j) * p(k)) % 2 == 1 {
        -1
    } else {
        1
    }
}

/// `(u-v)[t_ij(u), t_kl(v)] = ± (t_kj(u) t_il(v) - t_kj(v) t_il(u))`
#[allow(clippy::too_many_arguments)]
fn rtt<F: Field>(rep: &RttRep, (i, j, k, l): (usize, usize, usize, usize), at_u: &dyn Fn(usize, usize) -> Matrix<F>, at_v: &dyn Fn(usize, usize) -> Matrix<F>, u: &F, v: &F) -> bool {
    let lhs = at_u(i, j)
        .supercommutator(rep.operator_parity(i, j), &at_v(k, l), rep.operator_parity(k, l))
        .scale(&(u.clone() - v.clone()));
    let rhs = &(&at_u(k, j) * &at_v(i, l)) - &(&at_v(k, j) * &at_u(i, l));
    lhs == rhs.scale(&F::from_i64(rtt_sign(rep, i, j, k)))
}

fn all_t(rep: &RttRep) -> Vec<&Matrix<RatFn>> {
    PAIRS.iter().map(|&(i, j)| rep.t(i, j)).collect()
}

fn at(m: &Matrix<RatFn>, x: &Rational) -> Matrix<Rational> {
    eval_matrix(m, x).expect("pole avoided")
}

/// The RTT relation for all sixteen index quadruples.
pub fn verify_rtt(rep: &RttRep, opts: &VerifyOptions) -> Result<Report> {
    let mut report = Report::new();
    let mut sampler = Sampler {
        points: SamplePoints::new(opts.seed),
        samples: opts.samples,
    };
    let u = RatFn::var();
    let mut fails = Vec::new();
    for (i, j) in PAIRS {
        for (k, l) in PAIRS {
            let v_side = [rep.t(k, l), rep.t(k, j), rep.t(i, l)];
            let r = sampler.exact_in_u(&v_side, 1, |v| {
                let vv = RatFn::constant(v.clone());
                let at_u = |a: usize, b: usize| rep.t(a, b).clone();
                let at_v = |a: usize, b: usize| constants(&at(rep.t(a, b), v));
                rtt(rep, (i, j, k, l), &at_u, &at_v, &u, &vv)
            });
            if let Err(e) = r {
                fails.push(format!("(i,j,k,l) = ({i},{j},{k},{l}): {e}"));
            }
        }
    }
    report.all("RTT relation, sampled", fails);

    let mut fails = Vec::new();
    for (u0, v0) in sampler.pairs(&all_t(rep)) {
        let at_u = |a: usize, b: usize| at(rep.t(a, b), &u0);
        let at_v = |a: usize, b: usize| at(rep.t(a, b), &v0);
        for (i, j) in PAIRS {
            for (k, l) in PAIRS {
                if !rtt(rep, (i, j, k, l), &at_u, &at_v, &u0, &v0) {
                    fails.push(format!("({i},{j},{k},{l}) at ({u0}, {v0})"));
                }
            }
        }
    }
    report.all(format!("RTT relation at {} random pairs", opts.samples), fails);
    Ok(report)
}

/// `(u-x) t11(u) t21(x) = (u-x-1) t21(x) t11(u) + t21(u) t11(x)`
fn exchange<F: Field>(t11u: &Matrix<F>, t21u: &Matrix<F>, t11x: &Matrix<F>, t21x: &Matrix<F>, u: &F, x: &F) -> bool {
    let d = u.clone() - x.clone();
    let lhs = (t11u * t21x).scale(&d);
    let rhs = &(t21x * t11u).scale(&(d - F::one())) + &(t21u * t11x);
    lhs == rhs
}

/// The `x`-derivative of [`exchange`], multiplied through by `(u-x)^2`.
#[allow(clippy::too_many_arguments)]
fn exchange_derivative<F: Field>(
    t11u: &Matrix<F>,
    t21u: &Matrix<F>,
    t11x: &Matrix<F>,
    t21x: &Matrix<F>,
    dt11x: &Matrix<F>,
    dt21x: &Matrix<F>,
    u: &F,
    x: &F,
) -> bool {
    let d = u.clone() - x.clone();
    let lhs = (t11u * dt21x).scale(&(d.clone() * d.clone()));
    let rhs = &(&(dt21x * t11u).scale(&(d.clone() * (d.clone() - F::one()))) + &(t21u * dt11x).scale(&d))
        - &(&(t21x * t11u) - &(t21u * t11x));
    lhs == rhs
}

fn derivative(m: &Matrix<RatFn>) -> Matrix<RatFn> {
    m.map(|f| f.derivative())
}

fn shifted(m: &Matrix<RatFn>, c: i64) -> Matrix<RatFn> {
    m.map(|f| f.shift(&Rational::from_i64(c)))
}

/// `t12(u+1) t21(u) = -t22(u+1) t11(u) + d2(u) d1(u)^{-1} t11(u) t11(u+1)`
/// over `ℚ(u)`.
fn shift_identity(rep: &RttRep) -> Result<bool> {
    let d1 = gauss_d1(rep);
    let d2 = gauss_d2(rep)?;
    let d1_inv = d1
        .inverse()
        .ok_or_else(|| Error::Singular("d_1(u) is not invertible".into()))?;
    let t11 = rep.t(1, 1);
    let lhs = &shifted(rep.t(1, 2), 1) * rep.t(2, 1);
    let rhs = &(&(&(&d2 * &d1_inv) * t11) * &shifted(t11, 1)) - &(&shifted(rep.t(2, 2), 1) * t11);
    Ok(lhs == rhs)
}

/// The `gl(1|1)` identities used for the tameness criterion: the
/// `t11`–`t21` exchange relation, its `x`-derivative, and the shifted
/// product formula for `t12(u+1) t21(u)`. Standard parity sequence only.
pub fn verify_gl11_identities(rep: &RttRep, opts: &VerifyOptions) -> Result<Report> {
    if rep.index_parity != [false, true] {
        return Err(Error::InvalidSpec("identities are stated for the parity sequence (0, 1)".into()));
    }
    let mut report = Report::new();
    let mut sampler = Sampler {
        points: SamplePoints::new(opts.seed),
        samples: opts.samples,
    };
    let (t11, t21) = (rep.t(1, 1), rep.t(2, 1));
    let (dt11, dt21) = (derivative(t11), derivative(t21));
    let u = RatFn::var();

    let r = sampler.exact_in_u(&[t21, t11], 1, |x| {
        let xx = RatFn::constant(x.clone());
        exchange(t11, t21, &constants(&at(t11, x)), &constants(&at(t21, x)), &u, &xx)
    });
    report.all("t11-t21 exchange relation, sampled", r.err());

    let r = sampler.exact_in_u(&[t21, t11, &dt21, &dt11], 2, |x| {
        let xx = RatFn::constant(x.clone());
        let c = |m: &Matrix<RatFn>| constants(&at(m, x));
        exchange_derivative(t11, t21, &c(t11), &c(t21), &c(&dt11), &c(&dt21), &u, &xx)
    });
    report.all("its x-derivative, sampled", r.err());

    let mut fails = Vec::new();
    let all = [t11, t21, &dt11, &dt21];
    for (u0, x0) in sampler.pairs(&all) {
        let (a, b) = (|m: &Matrix<RatFn>| at(m, &u0), |m: &Matrix<RatFn>| at(m, &x0));
        if !exchange(&a(t11), &a(t21), &b(t11), &b(t21), &u0, &x0) {
            fails.push(format!("exchange at ({u0}, {x0})"));
        }
        if !exchange_derivative(&a(t11), &a(t21), &b(t11), &b(t21), &b(&dt11), &b(&dt21), &u0, &x0) {
            fails.push(format!("derivative at ({u0}, {x0})"));
        }
    }
    report.all(format!("both at {} random pairs", opts.samples), fails);

    if shift_identity(rep)? {
        report.pass("t12(u+1)t21(u) product formula, exact");
    } else {
        report.fail("t12(u+1)t21(u) product formula, exact", "matrices differ");
    }
    Ok(report)
}

fn trace(m: &Matrix<RatFn>) -> RatFn {
    m.diag().into_iter().fold(RatFn::zero(), |a, b| a + b)
}

/// Whether the joint spectrum of `(d_1(u), d_2(u))` is the multiset
/// `weights`: power traces `tr(M^p)`, `p ≤ dim`, of `d_1`, `d_2` and
/// `d_1 + 2 d_2` agree with those of the predicted eigenvalues.
pub fn spectrum_matches(rep: &RttRep, weights: &[LWeight]) -> Result<bool> {
    let dim = rep.dim();
    if weights.len() != dim {
        return Ok(false);
    }
    let d1 = gauss_d1(rep);
    let d2 = gauss_d2(rep)?;
    let two = RatFn::constant(Rational::from_i64(2));
    let combos: [(Matrix<RatFn>, RatFn); 3] = [
        (d1.clone(), RatFn::zero()),
        (d2.clone(), RatFn::one()),
        (&d1 + &d2.scale(&two), two.clone()),
    ];
    for (idx, (m, c)) in combos.iter().enumerate() {
        let eig: Vec<RatFn> = weights
            .iter()
            .map(|w| match idx {
                0 => w.0[0].clone(),
                1 => w.0[1].clone(),
                _ => w.0[0].clone() + c.clone() * w.0[1].clone(),
            })
            .collect();
        let mut power = Matrix::identity(dim);
        let mut eig_power = vec![RatFn::one(); dim];
        for _ in 1..=dim {
            power = &power * m;
            for (e, base) in eig_power.iter_mut().zip(&eig) {
                *e = e.clone() * base.clone();
            }
            let predicted = eig_power.iter().cloned().fold(RatFn::zero(), |a, b| a + b);
            if trace(&power) != predicted {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gl11::{evaluation_module_gl11, qchar_gl11, tensor_rep, Gl11ModuleSpec};
    use crate::exactmath::int;

    #[test]
    fn vector_module_relations() {
        let rep = evaluation_module_gl11(&int(1), &int(0)).unwrap();
        let opts = VerifyOptions::default();
        assert!(verify_rtt(&rep, &opts).unwrap().passed());
        let r = verify_gl11_identities(&rep, &opts).unwrap();
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn example_relations_and_spectrum() {
        let spec = Gl11ModuleSpec::from_ints(&[(3, 0), (-1, 0)]).unwrap();
        let rep = tensor_rep(&spec).unwrap();
        let opts = VerifyOptions::default();
        let r = verify_rtt(&rep, &opts).unwrap();
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        let r = verify_gl11_identities(&rep, &opts).unwrap();
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        assert!(spectrum_matches(&rep, &qchar_gl11(&spec)).unwrap());
    }

    #[test]
    fn trivial_module() {
        let rep = RttRep::trivial();
        let opts = VerifyOptions::default();
        assert!(verify_rtt(&rep, &opts).unwrap().passed());
        assert!(verify_gl11_identities(&rep, &opts).unwrap().passed());
    }
}
