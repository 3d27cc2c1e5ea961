//! The `Y(gl(1|1))` laboratory: tensor products of evaluation modules in
//! the RTT presentation, their Gauss decomposition, q-characters and the
//! thin/tame criteria.

mod tame;
mod verify;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{kron, parse_rational, rational_to_string, Field, Matrix, Poly, RatFn, Rational};
use crate::yangian::LWeight;

pub use tame::{analyze_tameness, d_coefficients, parity_flip_tameness, semisimplicity, Semisimplicity, TamenessVerdict};
pub use verify::{spectrum_matches, verify_gl11_identities, verify_rtt};

/// Parameters `(a_i, b_i)` of `⊗ L(a_i, b_i)`; `φ(u) = Π(u + a_i)`,
/// `ψ(u) = Π(u - b_j)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<[String; 2]>", into = "Vec<[String; 2]>")]
pub struct Gl11ModuleSpec {
    pairs: Vec<(Rational, Rational)>,
}

impl Gl11ModuleSpec {
    /// Requires `a_i + b_j ≠ 0` for all `i, j`, which makes the tensor
    /// product irreducible.
    pub fn new(pairs: Vec<(Rational, Rational)>) -> Result<Self> {
        for (i, (a, _)) in pairs.iter().enumerate() {
            for (j, (_, b)) in pairs.iter().enumerate() {
                if (a.clone() + b.clone()).is_zero() {
                    return Err(Error::InvalidSpec(format!(
                        "a_{} + b_{} = {} + {} = 0",
                        i + 1,
                        j + 1,
                        rational_to_string(a),
                        rational_to_string(b)
                    )));
                }
            }
        }
        Ok(Gl11ModuleSpec { pairs })
    }

    pub fn from_ints(pairs: &[(i64, i64)]) -> Result<Self> {
        Self::new(
            pairs
                .iter()
                .map(|&(a, b)| (Rational::from_i64(a), Rational::from_i64(b)))
                .collect(),
        )
    }

    pub fn pairs(&self) -> &[(Rational, Rational)] {
        &self.pairs
    }

    pub fn k(&self) -> usize {
        self.pairs.len()
    }

    pub fn phi(&self) -> Poly<Rational> {
        self.pairs.iter().fold(Poly::one(), |acc, (a, _)| &acc * &Poly::linear(a.clone()))
    }

    pub fn psi(&self) -> Poly<Rational> {
        self.pairs.iter().fold(Poly::one(), |acc, (_, b)| &acc * &Poly::linear(-b.clone()))
    }

    /// Highest ℓ-weight `(φ(u)/u^k, ψ(u)/u^k)`.
    pub fn highest_l_weight(&self) -> LWeight {
        let uk = Poly::monomial(Rational::one(), self.k());
        LWeight(vec![
            RatFn::from_poly(self.phi()) / RatFn::from_poly(uk.clone()),
            RatFn::from_poly(self.psi()) / RatFn::from_poly(uk),
        ])
    }
}

impl TryFrom<Vec<[String; 2]>> for Gl11ModuleSpec {
    type Error = Error;
    fn try_from(v: Vec<[String; 2]>) -> Result<Self> {
        let parse = |s: &str| parse_rational(s).ok_or_else(|| Error::InvalidSpec(format!("bad rational `{s}`")));
        Self::new(v.iter().map(|[a, b]| Ok((parse(a)?, parse(b)?))).collect::<Result<_>>()?)
    }
}

impl From<Gl11ModuleSpec> for Vec<[String; 2]> {
    fn from(s: Gl11ModuleSpec) -> Self {
        s.pairs
            .iter()
            .map(|(a, b)| [rational_to_string(a), rational_to_string(b)])
            .collect()
    }
}

/// A module in the RTT presentation: `t[i][j]` is `t_{i+1,j+1}(u)`.
/// `index_parity` is the parity sequence `(|1|, |2|)`; the basis vectors
/// carry their own parities.
#[derive(Clone, Debug, Serialize)]
pub struct RttRep {
    pub index_parity: [bool; 2],
    pub parity: Vec<bool>,
    pub t: [[Matrix<RatFn>; 2]; 2],
}

impl RttRep {
    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    /// `t_{ij}(u)`, 1-based.
    pub fn t(&self, i: usize, j: usize) -> &Matrix<RatFn> {
        &self.t[i - 1][j - 1]
    }

    pub fn operator_parity(&self, i: usize, j: usize) -> bool {
        self.index_parity[i - 1] ^ self.index_parity[j - 1]
    }

    /// The trivial module: `t_{ij} = δ_{ij}`.
    pub fn trivial() -> Self {
        let one = Matrix::identity(1);
        let zero = Matrix::zeros(1, 1);
        RttRep {
            index_parity: [false, true],
            parity: vec![false],
            t: [[one.clone(), zero.clone()], [zero, one]],
        }
    }

    /// The same module seen through the opposite parity sequence:
    /// `t̃_{ij}(u) = t_{3-i,3-j}(u)`.
    pub fn flipped(&self) -> Self {
        let [[t11, t12], [t21, t22]] = self.t.clone();
        RttRep {
            index_parity: [self.index_parity[1], self.index_parity[0]],
            parity: self.parity.clone(),
            t: [[t22, t21], [t12, t11]],
        }
    }

    /// Zero modes `e_11, e_22` (coefficients of `u^{-1}` in `s_i t_ii`).
    /// Both are diagonal on tensor products of evaluation modules.
    pub fn weights(&self) -> Result<Vec<(Rational, Rational)>> {
        let e = |i: usize| -> Result<Matrix<Rational>> {
            let s = if self.index_parity[i - 1] { -1 } else { 1 };
            Ok(zero_mode(self.t(i, i))?.scale(&Rational::from_i64(s)))
        };
        let (e11, e22) = (e(1)?, e(2)?);
        if !e11.is_diagonal() || !e22.is_diagonal() {
            return Err(Error::Internal("zero modes e_11, e_22 are not diagonal".into()));
        }
        Ok(e11.diag().into_iter().zip(e22.diag()).collect())
    }

    /// Weights of the `gl(1|1)` highest weight vectors (the kernel of `e_12`),
    /// with multiplicity.
    pub fn highest_weights(&self) -> Result<Vec<(Rational, Rational)>> {
        let weights = self.weights()?;
        let e12 = zero_mode(self.t(1, 2))?;
        let mut distinct = weights.clone();
        distinct.sort();
        distinct.dedup();
        let mut out = Vec::new();
        for w in distinct {
            let cols: Vec<usize> = (0..self.dim()).filter(|&b| weights[b] == w).collect();
            let restricted = Matrix::from_fn(self.dim(), cols.len(), |i, j| e12.get(i, cols[j]).clone());
            let kernel = cols.len() - restricted.rank();
            out.extend(std::iter::repeat_n(w, kernel));
        }
        Ok(out)
    }
}

fn zero_mode(m: &Matrix<RatFn>) -> Result<Matrix<Rational>> {
    Ok(crate::yangian::verify::series(m, 1)?.swap_remove(1))
}

fn odd_sign(parity: &[bool]) -> Matrix<Rational> {
    Matrix::diagonal(
        parity
            .iter()
            .map(|&p| Rational::from_i64(if p { -1 } else { 1 }))
            .collect(),
    )
}

/// The evaluation module `L(a, b)`: basis `v, e_21 v` with `v` even of
/// weight `(a, b)`, and `t_ij(u) = δ_ij + s_i e_ij u^{-1}`.
pub fn evaluation_module_gl11(a: &Rational, b: &Rational) -> Result<RttRep> {
    if (a.clone() + b.clone()).is_zero() {
        return Err(Error::InvalidSpec(format!(
            "L({}, {}) is atypical (a + b = 0) and one-dimensional",
            rational_to_string(a),
            rational_to_string(b)
        )));
    }
    let one = Rational::one();
    let zero = Rational::zero();
    let e11 = Matrix::diagonal(vec![a.clone(), a.clone() - one.clone()]);
    let e22 = Matrix::diagonal(vec![b.clone(), b.clone() + one.clone()]);
    let e12 = Matrix::from_rows(vec![vec![zero.clone(), a.clone() + b.clone()], vec![zero.clone(), zero.clone()]]);
    let e21 = Matrix::from_rows(vec![vec![zero.clone(), zero.clone()], vec![one, zero]]);
    let inv_u = RatFn::one() / RatFn::var();
    let t = |e: &Matrix<Rational>, s: i64, diag: bool| {
        let m = e.map(|x| RatFn::constant(x.clone() * Rational::from_i64(s)) * inv_u.clone());
        if diag {
            &m + &Matrix::identity(2)
        } else {
            m
        }
    };
    Ok(RttRep {
        index_parity: [false, true],
        parity: vec![false, true],
        t: [[t(&e11, 1, true), t(&e12, 1, false)], [t(&e21, -1, false), t(&e22, -1, true)]],
    })
}

/// `M ⊗ N` through `Δ(t_ij) = Σ_k t_ik ⊗ t_kj`, with
/// `(X ⊗ Y)(v ⊗ w) = (-1)^{|Y||v|} Xv ⊗ Yw`.
pub fn tensor_product(m: &RttRep, n: &RttRep) -> RttRep {
    assert_eq!(m.index_parity, n.index_parity, "parity sequences differ");
    let sign = odd_sign(&m.parity).map(|c| RatFn::constant(c.clone()));
    let dim = m.dim() * n.dim();
    let t = std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            (0..2).fold(Matrix::zeros(dim, dim), |acc, k| {
                let left = if m.operator_parity(k + 1, j + 1) {
                    &m.t[i][k] * &sign
                } else {
                    m.t[i][k].clone()
                };
                &acc + &kron(&left, &n.t[k][j])
            })
        })
    });
    let parity = m
        .parity
        .iter()
        .flat_map(|&p| n.parity.iter().map(move |&q| p ^ q))
        .collect();
    RttRep {
        index_parity: m.index_parity,
        parity,
        t,
    }
}

/// `⊗_i L(a_i, b_i)` in the order given; dimension `2^k`.
pub fn tensor_rep(spec: &Gl11ModuleSpec) -> Result<RttRep> {
    let mut rep = RttRep::trivial();
    for (a, b) in spec.pairs() {
        rep = tensor_product(&rep, &evaluation_module_gl11(a, b)?);
    }
    if rep.dim() != 1 << spec.k() {
        return Err(Error::Internal(format!("dimension {} ≠ 2^{}", rep.dim(), spec.k())));
    }
    Ok(rep)
}

/// `d_1(u) = t_11(u)`.
pub fn gauss_d1(rep: &RttRep) -> Matrix<RatFn> {
    rep.t(1, 1).clone()
}

/// `d_2(u) = t_22(u) - t_21(u) t_11(u)^{-1} t_12(u)`.
pub fn gauss_d2(rep: &RttRep) -> Result<Matrix<RatFn>> {
    let inv = rep
        .t(1, 1)
        .inverse()
        .ok_or_else(|| Error::Singular("t_11(u) is not invertible".into()))?;
    Ok(rep.t(2, 2) - &(&(rep.t(2, 1) * &inv) * rep.t(1, 2)))
}

/// `χ(L(ζ)) = Σ_J [ζ]·[(φ_J(u-1)/φ_J(u), φ_J(u-1)/φ_J(u))]` over all
/// subsets `J`, listed by the bitmask of `J`.
pub fn qchar_gl11(spec: &Gl11ModuleSpec) -> Vec<LWeight> {
    let top = spec.highest_l_weight();
    (0..1usize << spec.k())
        .map(|mask| {
            let f = spec
                .pairs()
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .fold(RatFn::one(), |acc, (_, (a, _))| {
                    acc * RatFn::linear_ratio(a.clone() - Rational::one(), a.clone())
                });
            LWeight(top.0.iter().map(|z| z.clone() * f.clone()).collect())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};

    fn rf(num: &[i64], den: &[i64]) -> RatFn {
        let p = |c: &[i64]| Poly::from_coeffs(c.iter().map(|&x| int(x)).collect());
        RatFn::new(p(num), p(den)).unwrap()
    }

    #[test]
    fn vector_module() {
        let rep = evaluation_module_gl11(&int(1), &int(0)).unwrap();
        assert_eq!(rep.t(1, 1).diag(), vec![rf(&[1, 1], &[0, 1]), RatFn::one()]);
        assert_eq!(rep.t(2, 2).diag(), vec![RatFn::one(), rf(&[-1, 1], &[0, 1])]);
        let d2 = gauss_d2(&rep).unwrap();
        assert!(d2.is_diagonal());
        assert_eq!(d2.diag(), vec![RatFn::one(), rf(&[0, 1], &[1, 1])]);
    }

    #[test]
    fn atypical_input_is_rejected() {
        assert!(evaluation_module_gl11(&int(0), &int(0)).is_err());
        assert!(evaluation_module_gl11(&rat(1, 2), &rat(-1, 2)).is_err());
        assert!(Gl11ModuleSpec::from_ints(&[(1, 0), (2, -1)]).is_err());
    }

    #[test]
    fn example_highest_vector() {
        let spec = Gl11ModuleSpec::from_ints(&[(3, 0), (-1, 0)]).unwrap();
        let rep = tensor_rep(&spec).unwrap();
        assert_eq!(rep.dim(), 4);
        assert_eq!(rep.t(1, 1).get(0, 0), &rf(&[-3, 2, 1], &[0, 0, 1]));
        assert_eq!(gauss_d2(&rep).unwrap().get(0, 0), &RatFn::one());
        assert_eq!(evaluation_module_gl11(&int(3), &int(0)).unwrap().t(1, 1).get(0, 0), &rf(&[3, 1], &[0, 1]));
    }

    #[test]
    fn empty_spec() {
        let spec = Gl11ModuleSpec::new(vec![]).unwrap();
        let rep = tensor_rep(&spec).unwrap();
        assert_eq!(rep.dim(), 1);
        assert_eq!(gauss_d2(&rep).unwrap(), Matrix::identity(1));
        assert_eq!(qchar_gl11(&spec), vec![LWeight(vec![RatFn::one(), RatFn::one()])]);
    }

    #[test]
    fn qchar_of_vector_module() {
        let spec = Gl11ModuleSpec::from_ints(&[(1, 0)]).unwrap();
        assert_eq!(
            qchar_gl11(&spec),
            vec![
                LWeight(vec![rf(&[1, 1], &[0, 1]), RatFn::one()]),
                LWeight(vec![RatFn::one(), rf(&[0, 1], &[1, 1])]),
            ]
        );
    }

    #[test]
    fn spec_json_round_trip() {
        let spec = Gl11ModuleSpec::new(vec![(rat(1, 2), int(3)), (int(-1), int(0))]).unwrap();
        let s = serde_json::to_string(&spec).unwrap();
        assert_eq!(s, r#"[["1/2","3"],["-1","0"]]"#);
        assert_eq!(serde_json::from_str::<Gl11ModuleSpec>(&s).unwrap(), spec);
        assert!(serde_json::from_str::<Gl11ModuleSpec>(r#"[["1","-1"]]"#).is_err());
    }
}
