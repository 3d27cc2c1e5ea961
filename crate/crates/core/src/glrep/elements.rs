//! The matrix elements `ℰ^±_{Λ,ki}`, one function per formula regime.
//!
//! Every factor of every formula is an integer built from the `l_{ki}`; a
//! [`Bracket`] decides what integer `ℓ` turns into (`ℓ` itself classically,
//! the q-number `[ℓ]` in the quantum case). Signs `(-1)^…` and the θ-gates
//! are never bracketed.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{Field, Rational};
use crate::tableaux::{ContentTable, GtTableau, SkewShape};

/// Image of an integer factor in the coefficient field.
pub trait Bracket {
    type F: Field;
    fn bracket(&self, l: i64) -> Self::F;
}

/// Integers as rationals.
#[derive(Clone, Copy, Debug, Default)]
pub struct Classical;

impl Bracket for Classical {
    type F = Rational;
    fn bracket(&self, l: i64) -> Rational {
        Rational::from_i64(l)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn delta(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// Which closed formula applies to `e_k`, `f_k`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Regime {
    /// `1 ≤ k ≤ m-1`, the classical `gl_m` formulas.
    Even,
    /// `k = m`, the odd simple root.
    Odd,
    /// `m+1 ≤ k ≤ m+n-1`.
    Mixed,
}

pub fn regime(shape: &SkewShape, k: usize) -> Regime {
    let m = shape.m();
    if k < m {
        Regime::Even
    } else if k == m {
        Regime::Odd
    } else {
        Regime::Mixed
    }
}

/// A signed ratio of integer products, kept unevaluated until the bracket is
/// known.
#[derive(Clone, Debug, Default)]
pub(crate) struct Term {
    negative: bool,
    zero: bool,
    num: Vec<i64>,
    den: Vec<i64>,
}

impl Term {
    fn sign_exp(mut self, e: i64) -> Self {
        self.negative ^= e.rem_euclid(2) == 1;
        self
    }

    /// θ-gate: a factor that is 0 or 1 and is not bracketed.
    fn gate(mut self, g: i64) -> Self {
        debug_assert!(g == 0 || g == 1, "θ-gate {g}");
        self.zero |= g == 0;
        self
    }

    fn num(&mut self, f: i64) {
        self.num.push(f);
    }

    fn den(&mut self, f: i64) {
        self.den.push(f);
    }

    /// Every factor has the form `c - l_{ki}`, so a `0/0` is read as the
    /// limit in `l_{ki}`: zero factors cancel in pairs (each ratio tends to
    /// 1, also for q-numbers). Leftover zeros in the denominator give `None`.
    fn evaluate<B: Bracket>(&self, b: &B) -> Option<B::F> {
        if self.zero {
            return Some(B::F::zero());
        }
        let zn = self.num.iter().filter(|&&f| f == 0).count();
        let zd = self.den.iter().filter(|&&f| f == 0).count();
        if zd > zn {
            return None;
        }
        if zn > zd {
            return Some(B::F::zero());
        }
        let mut n = B::F::one();
        for &f in self.num.iter().filter(|&&f| f != 0) {
            n = n * b.bracket(f);
        }
        let mut d = B::F::one();
        for &f in self.den.iter().filter(|&&f| f != 0) {
            d = d * b.bracket(f);
        }
        let v = n / d;
        Some(if self.negative { -v } else { v })
    }

    #[cfg(test)]
    /// Number of `0/0` pairs cancelled by [`Term::evaluate`].
    pub(crate) fn cancelled_pairs(&self) -> usize {
        let zn = self.num.iter().filter(|&&f| f == 0).count();
        let zd = self.den.iter().filter(|&&f| f == 0).count();
        zn.min(zd)
    }
}

struct Ctx<'a> {
    shape: &'a SkewShape,
    t: &'a GtTableau,
    l: &'a ContentTable,
}

impl Ctx<'_> {
    fn kp(&self, k: usize) -> usize {
        self.shape.r() + k
    }

    fn mp(&self) -> usize {
        self.shape.m_prime()
    }

    /// `θ_{K,i}`, absolute row index.
    fn theta(&self, big_k: usize, i: usize) -> i64 {
        self.t.theta(big_k, i)
    }

    /// `ϑ_{K,i} = θ_{K1}+…+θ_{K,i-1} + θ_{K-1,i+1}+…+θ_{K-1,m'}`.
    fn vartheta(&self, big_k: usize, i: usize) -> i64 {
        let mp = self.mp();
        let a: i64 = (1..i).map(|j| self.theta(big_k, j)).sum();
        let b: i64 = (i + 1..=mp).map(|j| self.theta(big_k - 1, j)).sum();
        a + b
    }

    // k ≤ m-1
    fn even_raise(&self, k: usize, i: usize) -> Term {
        let kp = self.kp(k);
        let li = self.l.l(k, i);
        let mut t = Term::default().sign_exp(1);
        for j in 1..=kp + 1 {
            t.num(self.l.l(k + 1, j) - li);
        }
        for j in (1..=kp).filter(|&j| j != i) {
            t.den(self.l.l(k, j) - li);
        }
        t
    }

    fn even_lower(&self, k: usize, i: usize) -> Term {
        let kp = self.kp(k);
        let li = self.l.l(k, i);
        let mut t = Term::default();
        for j in 1..kp {
            t.num(self.l.l(k - 1, j) - li);
        }
        for j in (1..=kp).filter(|&j| j != i) {
            t.den(self.l.l(k, j) - li);
        }
        t
    }

    // k = m
    fn odd_sign(&self, i: usize) -> i64 {
        let mp = self.mp();
        (i as i64 - 1) + (1..i).map(|j| self.theta(mp, j)).sum::<i64>()
    }

    fn odd_raise(&self, k: usize, i: usize) -> Term {
        let mp = self.mp();
        let li = self.l.l(k, i);
        let mut t = Term::default().gate(self.theta(mp, i)).sign_exp(self.odd_sign(i));
        for j in 1..i {
            t.num(self.l.l(k, j) - li - 1);
        }
        for j in i + 1..=mp {
            t.den(self.l.l(k, j) - li);
        }
        for j in (1..=mp).filter(|&j| j != i) {
            t.den(self.l.l(k + 1, j) - li - 1);
        }
        t
    }

    fn odd_lower(&self, k: usize, i: usize) -> Term {
        let mp = self.mp();
        let li = self.l.l(k, i);
        let mut t = Term::default().gate(1 - self.theta(mp, i)).sign_exp(self.odd_sign(i));
        t.num(li - self.l.l(k + 1, mp + 1));
        for j in i + 1..=mp {
            t.num(self.l.l(k, j) - li + 1);
        }
        for j in 1..mp {
            t.num(self.l.l(k - 1, j) - li);
        }
        for j in 1..i {
            t.den(self.l.l(k, j) - li);
        }
        t
    }

    // m+1 ≤ k ≤ m+n-1
    fn mixed_raise(&self, k: usize, i: usize) -> Term {
        let mp = self.mp();
        let kp = self.kp(k);
        let li = self.l.l(k, i);
        if i <= mp {
            let mut t = Term::default()
                .gate(self.theta(kp, i))
                .gate(1 - self.theta(kp - 1, i))
                .sign_exp(self.vartheta(kp, i));
            for j in (1..=mp).filter(|&j| j != i) {
                t.num(self.l.l(k, j) - li - 1);
                t.den(self.l.l(k + 1, j) - li - 1);
            }
            t
        } else {
            let mut t = Term::default().sign_exp(1);
            for j in 1..=mp {
                let d = self.l.l(k, j) - li;
                t.num(d);
                t.num(d + 1);
                t.den(self.l.l(k + 1, j) - li);
                t.den(self.l.l(k - 1, j) - li + 1);
            }
            for j in mp + 1..=kp + 1 {
                t.num(self.l.l(k + 1, j) - li);
            }
            for j in (mp + 1..=kp).filter(|&j| j != i) {
                t.den(self.l.l(k, j) - li);
            }
            t
        }
    }

    fn mixed_lower(&self, k: usize, i: usize) -> Term {
        let mp = self.mp();
        let kp = self.kp(k);
        let li = self.l.l(k, i);
        if i <= mp {
            let mut t = Term::default()
                .gate(self.theta(kp - 1, i))
                .gate(1 - self.theta(kp, i))
                .sign_exp(self.vartheta(kp, i));
            for j in mp + 1..=kp + 1 {
                t.num(self.l.l(k + 1, j) - li);
            }
            for j in mp + 1..kp {
                t.num(self.l.l(k - 1, j) - li + 1);
            }
            for j in mp + 1..=kp {
                let d = self.l.l(k, j) - li;
                t.den(d);
                t.den(d + 1);
            }
            for j in (1..=mp).filter(|&j| j != i) {
                t.num(self.l.l(k, j) - li + 1);
                t.den(self.l.l(k - 1, j) - li + 1);
            }
            t
        } else {
            let mut t = Term::default();
            for j in mp + 1..kp {
                t.num(self.l.l(k - 1, j) - li);
            }
            for j in (mp + 1..=kp).filter(|&j| j != i) {
                t.den(self.l.l(k, j) - li);
            }
            t
        }
    }
}

/// `ℰ^±_{Λ,ki}` assuming `Λ ± δ_{ki}` is admissible: a vanishing
/// denominator is then an error, never a silent zero.
pub fn element_with<B: Bracket>(
    shape: &SkewShape,
    t: &GtTableau,
    l: &ContentTable,
    k: usize,
    i: usize,
    sign: Sign,
    b: &B,
) -> Result<B::F> {
    check_range(shape, k, i)?;
    let ctx = Ctx { shape, t, l };
    let term = match (regime(shape, k), sign) {
        (Regime::Even, Sign::Plus) => ctx.even_raise(k, i),
        (Regime::Even, Sign::Minus) => ctx.even_lower(k, i),
        (Regime::Odd, Sign::Plus) => ctx.odd_raise(k, i),
        (Regime::Odd, Sign::Minus) => ctx.odd_lower(k, i),
        (Regime::Mixed, Sign::Plus) => ctx.mixed_raise(k, i),
        (Regime::Mixed, Sign::Minus) => ctx.mixed_lower(k, i),
    };
    term.evaluate(b).ok_or_else(|| {
        Error::VanishingDenominator(format!(
            "E{}_(k={k}, i={i}) on {t}: a denominator factor vanishes although the target is admissible",
            sign.symbol()
        ))
    })
}

pub(crate) fn check_range(shape: &SkewShape, k: usize, i: usize) -> Result<()> {
    if k == 0 || k >= shape.rank() {
        return Err(Error::OutOfRange(format!(
            "k = {k} outside 1..={}",
            shape.rank().saturating_sub(1)
        )));
    }
    if i == 0 || i > shape.r() + k {
        return Err(Error::OutOfRange(format!("i = {i} outside 1..={}", shape.r() + k)));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;
    use crate::tableaux::enumerate_tableaux;

    #[test]
    fn removable_zero_in_mixed_lowering() {
        // gl(1|2) vector module: f_2 sends the middle basis vector to the
        // lowest one through a 0/0 in the mixed formula.
        let s = SkewShape::straight(1, 2, vec![1, 0, 0]).unwrap();
        let b = enumerate_tableaux(&s);
        let t = b.iter().find(|t| t.row(1) == [0] && t.row(2) == [1, 0]).unwrap();
        let l = ContentTable::new(&s, t);
        let term = Ctx { shape: &s, t, l: &l }.mixed_lower(2, 1);
        assert_eq!(term.cancelled_pairs(), 1);
        assert_eq!(element_with(&s, t, &l, 2, 1, Sign::Minus, &Classical).unwrap(), int(1));
    }

    #[test]
    fn uncancelled_zero_denominator_is_an_error() {
        let t = Term {
            num: vec![2],
            den: vec![0],
            ..Term::default()
        };
        assert!(t.evaluate(&Classical).is_none());
        let t = Term {
            num: vec![0, 0],
            den: vec![0, 3],
            ..Term::default()
        };
        assert_eq!(t.evaluate(&Classical), Some(int(0)));
    }
}
