//! Brute-force semisimplicity of the Gelfand-Tsetlin action, checked
//! against the closed-form criteria (`φ`, resp. `ψ`, squarefree).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{degree_bound, is_squarefree, Matrix, RatFn, Rational};
use crate::yangian::weights_distinct;

use super::{gauss_d1, gauss_d2, qchar_gl11, tensor_rep, Gl11ModuleSpec, RttRep};

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TamenessVerdict {
    pub thin: bool,
    pub tame: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// What the brute force sees: the commutative algebra generated by the
/// coefficients `d_{i,j}`.
#[derive(Clone, Debug)]
pub struct Semisimplicity {
    /// every generator has a squarefree minimal polynomial
    pub tame: bool,
    /// dimension of the generated algebra
    pub algebra_dim: usize,
    /// tame with one-dimensional joint eigenspaces, i.e. the algebra is
    /// the full diagonal algebra
    pub thin: bool,
    pub witness: Option<String>,
}

/// Coefficients `d_{i,j}` of `u^{-j}`, `1 ≤ j ≤ 2·dim`, labelled
/// `(i, j)`. Later coefficients are linear combinations of these as long
/// as the common denominator of `d_i(u)` has degree at most `2·dim`,
/// which is checked.
pub fn d_coefficients(ds: &[Matrix<RatFn>], dim: usize) -> Result<Vec<(usize, usize, Matrix<Rational>)>> {
    let order = 2 * dim;
    let mut out = Vec::new();
    for (idx, d) in ds.iter().enumerate() {
        let bound = degree_bound(d);
        if bound > order {
            return Err(Error::Internal(format!(
                "d_{}(u) has denominator degree {bound} > 2·dim = {order}",
                idx + 1
            )));
        }
        let coeffs = crate::yangian::verify::series(d, order)?;
        out.extend(coeffs.into_iter().enumerate().skip(1).map(|(j, c)| (idx + 1, j, c)));
    }
    Ok(out)
}

fn flat(m: &Matrix<Rational>) -> Vec<Rational> {
    m.to_rows().concat()
}

/// Adds `v` to `span` (rows) if it is independent; returns whether it was.
fn extend_span(span: &mut Vec<Vec<Rational>>, v: Vec<Rational>) -> bool {
    span.push(v);
    if Matrix::from_rows(span.clone()).rank() == span.len() {
        true
    } else {
        span.pop();
        false
    }
}

pub fn semisimplicity(rep: &RttRep) -> Result<Semisimplicity> {
    let dim = rep.dim();
    let ds = [gauss_d1(rep), gauss_d2(rep)?];
    let gens = d_coefficients(&ds, dim)?;
    let mut witness = None;
    for (i, j, g) in &gens {
        let p = g.minimal_polynomial();
        if !is_squarefree(&p)? {
            witness = Some(format!("d_{{{i},{j}}} has minimal polynomial {p} with a repeated root"));
            break;
        }
    }
    // span closure of the identity under multiplication by the generators
    let mut span = Vec::new();
    let mut basis = vec![Matrix::<Rational>::identity(dim)];
    extend_span(&mut span, flat(&basis[0]));
    let mut independent: Vec<&Matrix<Rational>> = Vec::new();
    let mut gspan = Vec::new();
    for (_, _, g) in &gens {
        if extend_span(&mut gspan, flat(g)) {
            independent.push(g);
        }
    }
    let mut next = 0;
    while next < basis.len() {
        let b = basis[next].clone();
        for g in &independent {
            let p = &b * *g;
            if extend_span(&mut span, flat(&p)) {
                basis.push(p);
            }
        }
        next += 1;
    }
    let tame = witness.is_none();
    Ok(Semisimplicity {
        tame,
        algebra_dim: basis.len(),
        thin: tame && basis.len() == dim,
        witness,
    })
}

fn verdict(bf: Semisimplicity, closed: bool, criterion: &str) -> Result<TamenessVerdict> {
    for (what, value) in [("thin", bf.thin), ("tame", bf.tame)] {
        if value != closed {
            return Err(Error::Disagreement(format!(
                "brute force says {what} = {value}, but {criterion} squarefree = {closed}"
            )));
        }
    }
    Ok(TamenessVerdict {
        thin: bf.thin,
        tame: bf.tame,
        witness: bf.witness,
    })
}

/// Thin/tame verdict for `⊗ L(a_i, b_i)`: brute force, cross-checked
/// against `φ` squarefree and against distinctness of the q-character.
pub fn analyze_tameness(spec: &Gl11ModuleSpec) -> Result<TamenessVerdict> {
    let closed = is_squarefree(&spec.phi())?;
    let distinct = weights_distinct(&qchar_gl11(spec));
    if distinct != closed {
        return Err(Error::Disagreement(format!(
            "q-character distinct = {distinct}, φ squarefree = {closed}"
        )));
    }
    verdict(semisimplicity(&tensor_rep(spec)?)?, closed, "φ")
}

/// The same for the opposite parity sequence, against `ψ` squarefree.
pub fn parity_flip_tameness(spec: &Gl11ModuleSpec) -> Result<TamenessVerdict> {
    let closed = is_squarefree(&spec.psi())?;
    verdict(semisimplicity(&tensor_rep(spec)?.flipped())?, closed, "ψ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_is_thin_and_tame() {
        let spec = Gl11ModuleSpec::from_ints(&[(3, 0), (-1, 0)]).unwrap();
        let v = analyze_tameness(&spec).unwrap();
        assert!(v.thin && v.tame && v.witness.is_none());
    }

    #[test]
    fn double_root_is_not_tame() {
        let spec = Gl11ModuleSpec::from_ints(&[(2, 0), (2, 1)]).unwrap();
        let v = analyze_tameness(&spec).unwrap();
        assert!(!v.thin && !v.tame);
        assert!(v.witness.unwrap().starts_with("d_{1,"));
    }

    #[test]
    fn single_factor() {
        let spec = Gl11ModuleSpec::from_ints(&[(1, 0)]).unwrap();
        let v = analyze_tameness(&spec).unwrap();
        assert!(v.thin && v.tame);
    }

    #[test]
    fn parity_flip() {
        let yes = Gl11ModuleSpec::from_ints(&[(0, 3), (0, -1)]).unwrap();
        assert!(parity_flip_tameness(&yes).unwrap().tame);
        let no = Gl11ModuleSpec::from_ints(&[(0, 2), (1, 2)]).unwrap();
        assert!(!parity_flip_tameness(&no).unwrap().tame);
        let empty = Gl11ModuleSpec::new(vec![]).unwrap();
        assert!(parity_flip_tameness(&empty).unwrap().tame);
    }
}
