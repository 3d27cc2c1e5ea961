//! The `gl(m|n)` action on `L(λ/μ)` in the Gelfand-Tsetlin basis.

mod elements;

use serde::Serialize;

pub use elements::{element_with, regime, Bracket, Classical, Regime, Sign};

use crate::error::{Error, Result};
use crate::exactmath::{rational_to_string, Field, Matrix, Rational};
use crate::report::Report;
use crate::tableaux::{basis_index, enumerate_tableaux, is_admissible, ContentTable, GtTableau, SkewShape};

/// Eigenvalue of `e_{kk}` on `ξ_Λ`: the row-sum difference of rows `k'` and
/// `k'-1`.
pub fn cartan_eigenvalue(shape: &SkewShape, t: &GtTableau, k: usize) -> Result<Rational> {
    if k == 0 || k > shape.rank() {
        return Err(Error::OutOfRange(format!("k = {k} outside 1..={}", shape.rank())));
    }
    Ok(Rational::from_i64(t.row_sum(k) - t.row_sum(k - 1)))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatrixElement {
    pub value: Rational,
    pub k: usize,
    pub i: usize,
    pub sign: Sign,
    /// `Λ ± δ_{ki}`, or `None` when it is not admissible (the value is 0).
    pub target: Option<GtTableau>,
}

/// `ℰ^±_{Λ,ki}`: coefficient of `ξ_{Λ±δ_{ki}}` in `e_k ξ_Λ` or `f_k ξ_Λ`.
pub fn matrix_element(shape: &SkewShape, t: &GtTableau, k: usize, i: usize, sign: Sign) -> Result<MatrixElement> {
    let (value, target) = matrix_element_with(shape, t, k, i, sign, &Classical)?;
    Ok(MatrixElement {
        value,
        k,
        i,
        sign,
        target,
    })
}

/// The matrix element under bracket `b`, with the target tableau; zero and
/// `None` when the target is not admissible.
pub fn matrix_element_with<B: Bracket>(
    shape: &SkewShape,
    t: &GtTableau,
    k: usize,
    i: usize,
    sign: Sign,
    b: &B,
) -> Result<(B::F, Option<GtTableau>)> {
    elements::check_range(shape, k, i)?;
    if !is_admissible(shape, t) {
        return Err(Error::InvalidShape(format!("source tableau {t} is not admissible")));
    }
    let target = t.shifted(k, i, sign.delta());
    if !is_admissible(shape, &target) {
        return Ok((B::F::zero(), None));
    }
    let l = ContentTable::new(shape, t);
    Ok((element_with(shape, t, &l, k, i, sign, b)?, Some(target)))
}

/// One nonzero-able entry `ξ_from → ξ_to` of `e_k` (sign +) or `f_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TransitionElement<F> {
    pub from: usize,
    pub to: usize,
    pub k: usize,
    pub i: usize,
    pub sign: Sign,
    pub value: F,
}

/// Every admissible transformation `Λ → Λ ± δ_{ki}` inside `basis` with its
/// matrix element under `b`.
pub fn transitions_with<B: Bracket>(
    shape: &SkewShape,
    basis: &[GtTableau],
    b: &B,
) -> Result<Vec<TransitionElement<B::F>>> {
    let index = basis_index(basis);
    let mut out = Vec::new();
    for (from, t) in basis.iter().enumerate() {
        let l = ContentTable::new(shape, t);
        for k in 1..shape.rank() {
            for i in 1..=shape.r() + k {
                for sign in [Sign::Plus, Sign::Minus] {
                    if let Some(&to) = index.get(&t.shifted(k, i, sign.delta())) {
                        let value = element_with(shape, t, &l, k, i, sign, b)?;
                        out.push(TransitionElement {
                            from,
                            to,
                            k,
                            i,
                            sign,
                            value,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `e_k` and `f_k` matrices (index `k-1`) assembled from transitions;
/// entry `(to, from)` so columns are images of basis vectors.
pub fn assemble<F: Field>(dim: usize, rank: usize, ts: &[TransitionElement<F>]) -> (Vec<Matrix<F>>, Vec<Matrix<F>>) {
    let n = rank.saturating_sub(1);
    let mut e: Vec<Matrix<F>> = vec![Matrix::zeros(dim, dim); n];
    let mut f = vec![Matrix::zeros(dim, dim); n];
    for t in ts {
        let target = match t.sign {
            Sign::Plus => &mut e[t.k - 1],
            Sign::Minus => &mut f[t.k - 1],
        };
        let v = target.get(t.to, t.from).clone() + t.value.clone();
        target.set(t.to, t.from, v);
    }
    (e, f)
}

#[derive(Clone, Debug)]
pub struct GeneratorMatrices {
    pub shape: SkewShape,
    pub basis: Vec<GtTableau>,
    /// `e_k`, `k = 1..m+n-1`, at index `k-1`.
    pub e: Vec<Matrix<Rational>>,
    pub f: Vec<Matrix<Rational>>,
    /// Diagonal of `e_{kk}`, `k = 1..m+n`, at index `k-1`.
    pub h: Vec<Vec<Rational>>,
}

pub fn build_generator_matrices(shape: &SkewShape) -> Result<GeneratorMatrices> {
    let basis = enumerate_tableaux(shape);
    let ts = transitions_with(shape, &basis, &Classical)?;
    let (e, f) = assemble(basis.len(), shape.rank(), &ts);
    let h = (1..=shape.rank())
        .map(|k| basis.iter().map(|t| cartan_eigenvalue(shape, t, k)).collect())
        .collect::<Result<_>>()?;
    Ok(GeneratorMatrices {
        shape: shape.clone(),
        basis,
        e,
        f,
        h,
    })
}

impl GeneratorMatrices {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn h_matrix(&self, k: usize) -> Matrix<Rational> {
        Matrix::diagonal(self.h[k - 1].clone())
    }

    /// Parity of `e_k` and `f_k`.
    pub fn is_odd(&self, k: usize) -> bool {
        self.shape.s(k) != self.shape.s(k + 1)
    }
}

#[derive(Serialize)]
struct GeneratorJson<'a> {
    shape: &'a SkewShape,
    basis: &'a [GtTableau],
    e: Vec<Vec<Vec<String>>>,
    f: Vec<Vec<Vec<String>>>,
    h: Vec<Vec<String>>,
}

pub(crate) fn matrix_strings(m: &Matrix<Rational>) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(rational_to_string).collect())
        .collect()
}

impl Serialize for GeneratorMatrices {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GeneratorJson {
            shape: &self.shape,
            basis: &self.basis,
            e: self.e.iter().map(matrix_strings).collect(),
            f: self.f.iter().map(matrix_strings).collect(),
            h: self
                .h
                .iter()
                .map(|d| d.iter().map(rational_to_string).collect())
                .collect(),
        }
        .serialize(s)
    }
}

/// Supercommutator of two homogeneous operators, with the parity of the
/// result.
fn bracket(a: (&Matrix<Rational>, bool), b: (&Matrix<Rational>, bool)) -> (Matrix<Rational>, bool) {
    (a.0.supercommutator(a.1, b.0, b.1), a.1 ^ b.1)
}

/// Checks the defining relations of `gl(m|n)` in Chevalley form as exact
/// matrix identities.
pub fn check_superalgebra_relations(g: &GeneratorMatrices) -> Report {
    let mut report = Report::new();
    let rank = g.shape.rank();
    let s = |k: usize| g.shape.s(k);
    let gens = 1..rank;

    let mut fails = Vec::new();
    for k in gens.clone() {
        for l in gens.clone() {
            let (lhs, _) = bracket((&g.e[k - 1], g.is_odd(k)), (&g.f[l - 1], g.is_odd(l)));
            let rhs = if k == l {
                &g.h_matrix(k) - &g.h_matrix(k + 1).scale(&Rational::from_i64(s(k) * s(k + 1)))
            } else {
                Matrix::zeros(g.dim(), g.dim())
            };
            if lhs != rhs {
                fails.push(format!("[e_{k}, f_{l}]"));
            }
        }
    }
    report.all("[e_k, f_l] = δ_kl (e_kk - s_k s_k+1 e_k+1,k+1)", fails);

    let mut fails = Vec::new();
    for j in 1..=rank {
        let hj = g.h_matrix(j);
        for k in gens.clone() {
            let c = Rational::from_i64(i64::from(j == k) - i64::from(j == k + 1));
            if hj.commutator(&g.e[k - 1]) != g.e[k - 1].scale(&c) {
                fails.push(format!("[e_{j}{j}, e_{k}]"));
            }
            if hj.commutator(&g.f[k - 1]) != g.f[k - 1].scale(&-c) {
                fails.push(format!("[e_{j}{j}, f_{k}]"));
            }
        }
    }
    report.all("weights: [e_jj, e_k] = (δ_jk - δ_j,k+1) e_k and dually", fails);

    let mut fails = Vec::new();
    for k in gens.clone().filter(|&k| g.is_odd(k)) {
        if !(&g.e[k - 1] * &g.e[k - 1]).is_zero() {
            fails.push(format!("e_{k}^2"));
        }
        if !(&g.f[k - 1] * &g.f[k - 1]).is_zero() {
            fails.push(format!("f_{k}^2"));
        }
    }
    report.all("odd generators square to zero", fails);

    let mut fails = Vec::new();
    for (name, x) in [("e", &g.e), ("f", &g.f)] {
        for k in gens.clone() {
            for l in gens.clone().filter(|&l| l > k) {
                let (c, _) = bracket((&x[k - 1], g.is_odd(k)), (&x[l - 1], g.is_odd(l)));
                if l > k + 1 && !c.is_zero() {
                    fails.push(format!("[{name}_{k}, {name}_{l}]"));
                }
            }
            if g.is_odd(k) {
                continue;
            }
            for l in [k.wrapping_sub(1), k + 1].into_iter().filter(|l| gens.contains(l)) {
                let inner = bracket((&x[l - 1], g.is_odd(l)), (&x[k - 1], false));
                let (outer, _) = bracket((&x[k - 1], false), (&inner.0, inner.1));
                if !outer.is_zero() {
                    fails.push(format!("[{name}_{k}, [{name}_{k}, {name}_{l}]]"));
                }
            }
        }
        let m = g.shape.m();
        if m >= 2 && g.shape.n() >= 2 {
            let p = |k: usize| (&x[k - 1], g.is_odd(k));
            let a = bracket(p(m - 1), p(m));
            let b = bracket((&a.0, a.1), p(m + 1));
            let (c, _) = bracket((&b.0, b.1), p(m));
            if !c.is_zero() {
                fails.push(format!("quartic Serre for {name}"));
            }
        }
    }
    report.all("Serre relations", fails);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;

    fn shape(m: usize, n: usize, lambda: &[i64]) -> SkewShape {
        SkewShape::straight(m, n, lambda.to_vec()).unwrap()
    }

    #[test]
    fn vector_rep_elements() {
        let s = shape(1, 1, &[1, 0]);
        let b = enumerate_tableaux(&s);
        assert_eq!(b[0].row(1), [1]);
        let e = matrix_element(&s, &b[1], 1, 1, Sign::Plus).unwrap();
        assert_eq!(e.value, int(1));
        let f = matrix_element(&s, &b[0], 1, 1, Sign::Minus).unwrap();
        assert_eq!(f.value, int(1));
        // raising the top tableau leaves the module
        let z = matrix_element(&s, &b[0], 1, 1, Sign::Plus).unwrap();
        assert!(z.target.is_none() && z.value == int(0));
        assert_eq!(cartan_eigenvalue(&s, &b[0], 1).unwrap(), int(1));
        assert_eq!(cartan_eigenvalue(&s, &b[0], 2).unwrap(), int(0));
        assert_eq!(cartan_eigenvalue(&s, &b[1], 2).unwrap(), int(1));
        assert!(cartan_eigenvalue(&s, &b[1], 3).is_err());
        assert!(matrix_element(&s, &b[1], 2, 1, Sign::Plus).is_err());
    }

    #[test]
    fn vector_rep_matrices() {
        let g = build_generator_matrices(&shape(1, 1, &[1, 0])).unwrap();
        let m = |rows: [[i64; 2]; 2]| Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect());
        assert_eq!(g.e[0], m([[0, 1], [0, 0]]));
        assert_eq!(g.f[0], m([[0, 0], [1, 0]]));
        assert!(check_superalgebra_relations(&g).passed());
    }

    #[test]
    fn trivial_and_small_shapes_pass() {
        for (m, n, l) in [(1, 1, vec![0, 0]), (1, 1, vec![2, 1]), (2, 0, vec![2, 1]), (0, 2, vec![2, 1])] {
            let g = build_generator_matrices(&shape(m, n, &l)).unwrap();
            let rep = check_superalgebra_relations(&g);
            assert!(rep.passed(), "{m} {n} {l:?}: {rep:?}");
        }
    }
}
