//! Independent construction of the currents for `r = 0`: the evaluation
//! map `t_ij(u) ↦ δ_ij + s_i e_ij u^{-1}` followed by block Gauss
//! decomposition of the operator-valued matrix `T(u)` over `ℚ(u)`.

use crate::error::{Error, Result};
use crate::exactmath::{Field, Matrix, RatFn, Rational};
use crate::glrep::{build_generator_matrices, GeneratorMatrices};
use crate::tableaux::SkewShape;

use super::CurrentRep;

/// All matrix units `e_ij` acting on the module, `units[i-1][j-1]`, built
/// from the Chevalley generators by supercommutators:
/// `e_ij = [e_{i,j-1}, e_{j-1,j}]` and `e_ji = [e_{j,j-1}, e_{j-1,i}]`.
pub fn matrix_units(g: &GeneratorMatrices) -> Vec<Vec<Matrix<Rational>>> {
    let n = g.shape.rank();
    let m = g.shape.m();
    let odd = |i: usize| i > m;
    let parity = |i: usize, j: usize| odd(i) ^ odd(j);
    let dim = g.dim();
    let mut e = vec![vec![Matrix::zeros(dim, dim); n]; n];
    for k in 1..=n {
        e[k - 1][k - 1] = g.h_matrix(k);
    }
    for k in 1..n {
        e[k - 1][k] = g.e[k - 1].clone();
        e[k][k - 1] = g.f[k - 1].clone();
    }
    for gap in 2..n {
        for i in 1..=n - gap {
            let j = i + gap;
            e[i - 1][j - 1] = e[i - 1][j - 2].supercommutator(parity(i, j - 1), &e[j - 2][j - 1], parity(j - 1, j));
            e[j - 1][i - 1] = e[j - 1][j - 2].supercommutator(parity(j, j - 1), &e[j - 2][i - 1], parity(j - 1, i));
        }
    }
    e
}

/// Currents of `L(λ)` (`r = 0`) from the evaluation module by Gauss
/// decomposition: `d_k` is the `k`-th pivot, `x_k^+ = d_k^{-1} S_{k,k+1}`,
/// `x_k^- = S_{k+1,k} d_k^{-1}` with `S` the running Schur complement.
pub fn evaluation_currents(shape: &SkewShape) -> Result<CurrentRep> {
    if shape.r() != 0 {
        return Err(Error::InvalidShape("the evaluation oracle needs r = 0".into()));
    }
    let g = build_generator_matrices(shape)?;
    let n = shape.rank();
    let units = matrix_units(&g);
    let inv_u = RatFn::one() / RatFn::var();
    let mut s: Vec<Vec<Matrix<RatFn>>> = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    let si = Rational::from_i64(shape.s(i));
                    let mut t = units[i - 1][j - 1].map(|x| RatFn::constant(x.clone() * si.clone()) * inv_u.clone());
                    if i == j {
                        t = &t + &Matrix::identity(g.dim());
                    }
                    t
                })
                .collect()
        })
        .collect();

    let mut d = Vec::with_capacity(n);
    let mut x_plus = Vec::with_capacity(n.saturating_sub(1));
    let mut x_minus = Vec::with_capacity(n.saturating_sub(1));
    for k in 0..n {
        let pivot = s[k][k].clone();
        let inv = pivot
            .inverse()
            .ok_or_else(|| Error::Singular(format!("Gauss pivot d_{} is singular", k + 1)))?;
        if !pivot.is_diagonal() {
            return Err(Error::Disagreement(format!(
                "d_{}(u) from the Gauss decomposition is not diagonal in the GT basis",
                k + 1
            )));
        }
        d.push(pivot.diag());
        if k + 1 < n {
            x_plus.push(&inv * &s[k][k + 1]);
            x_minus.push(&s[k + 1][k] * &inv);
        }
        for i in k + 1..n {
            let left = &s[i][k] * &inv;
            for j in k + 1..n {
                let upd = &left * &s[k][j];
                s[i][j] = &s[i][j] - &upd;
            }
        }
    }
    Ok(CurrentRep {
        shape: shape.clone(),
        basis: g.basis,
        d,
        x_plus,
        x_minus,
    })
}
