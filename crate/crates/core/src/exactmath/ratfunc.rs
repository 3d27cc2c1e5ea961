use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::field::Field;
use super::poly::Poly;
use super::series::{Expansion, TruncatedSeries};
use crate::error::{Error, Result};

/// Quotient of two polynomials in canonical form: the denominator is monic
/// and coprime to the numerator. Zero is `0/1`.
///
/// Because the form is canonical, equality of rational functions is
/// structural equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc<F: Field> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RatFunc<F> {
    /// Reduces `num/den` to canonical form.
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly<F>, den: Poly<F>) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.exact_div(&g).expect("gcd divides"),
                    den.exact_div(&g).expect("gcd divides"),
                )
            }
        };
        let lead = den.leading().expect("nonzero denominator").clone();
        if lead.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lead.inv().expect("nonzero");
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        RatFunc {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    /// The variable `u`.
    pub fn var() -> Self {
        Self::from_poly(Poly::var())
    }

    /// `u + c`
    pub fn linear(c: F) -> Self {
        Self::from_poly(Poly::linear(c))
    }

    /// `(u + a)/(u + b)`
    pub fn linear_ratio(a: F, b: F) -> Self {
        Self::reduce(Poly::linear(a), Poly::linear(b))
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<F> {
        (self.den.is_constant() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    /// `max(deg num, deg den)`
    pub fn height(&self) -> usize {
        self.num.deg0().max(self.den.deg0())
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::reduce(self.den.clone(), self.num.clone()))
        }
    }

    pub fn pow(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs() as u32;
        // num and den stay coprime under powers
        Some(RatFunc {
            num: base.num.pow(k),
            den: base.den.pow(k),
        })
    }

    /// Value at `point`; a pole is an error that carries the point.
    pub fn eval(&self, point: &F) -> Result<F> {
        let d = self.den.eval(point);
        match d.inv() {
            Some(dinv) => Ok(self.num.eval(point) * dinv),
            None => Err(Error::Pole(format!("{point:?}"))),
        }
    }

    /// Value at `point` or `None` at a pole.
    pub fn try_eval(&self, point: &F) -> Option<F> {
        self.den.eval(point).inv().map(|d| self.num.eval(point) * d)
    }

    /// `f(u + c)`
    pub fn shift(&self, c: &F) -> Self {
        Self::reduce(self.num.shift(c), self.den.shift(c))
    }

    /// `f(c·u)`, `c` nonzero.
    pub fn scale_var(&self, c: &F) -> Self {
        Self::reduce(self.num.scale_var(c), self.den.scale_var(c))
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::reduce(n, &self.den * &self.den)
    }

    pub fn scale(&self, c: &F) -> Self {
        RatFunc {
            num: self.num.scale(c),
            den: if c.is_zero() { Poly::one() } else { self.den.clone() },
        }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Result<RatFunc<G>> {
        RatFunc::new(self.num.map(&f), self.den.map(&f))
    }

    /// Truncated Laurent expansion around infinity (in powers of `u^{-1}`)
    /// or around zero (in powers of `u`).
    pub fn series(&self, direction: Expansion, order: usize) -> Result<TruncatedSeries<F>> {
        let len = order + 1;
        match direction {
            Expansion::AtInfinity => {
                let dn = self.num.degree();
                let dd = self.den.deg0();
                let Some(dn) = dn else {
                    return Ok(TruncatedSeries::new(direction, vec![F::zero(); len]));
                };
                if dn > dd {
                    return Err(Error::SeriesPole("at-infinity"));
                }
                // f = x^(dd-dn) * rev(num)(x) / rev(den)(x) with x = 1/u
                let shift = dd - dn;
                let n = self.num.reversed();
                let d = self.den.reversed();
                let mut c = power_series_quotient(&n, &d, len);
                c.splice(0..0, std::iter::repeat_n(F::zero(), shift));
                c.truncate(len);
                Ok(TruncatedSeries::new(direction, c))
            }
            Expansion::AtZero => {
                if self.den.coeff(0).is_zero() {
                    return Err(Error::SeriesPole("at-zero"));
                }
                Ok(TruncatedSeries::new(
                    direction,
                    power_series_quotient(&self.num, &self.den, len),
                ))
            }
        }
    }

    pub fn fmt_with(&self, var: &str) -> String
    where
        F: fmt::Display,
    {
        let n = self.num.fmt_with(var);
        if self.den.is_one() {
            return n;
        }
        let wrap = |s: String, p: &Poly<F>| {
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        format!("{}/{}", wrap(n, &self.num), wrap(self.den.fmt_with(var), &self.den))
    }
}

/// First `len` coefficients of `n/d` as a power series, `d(0) != 0`.
fn power_series_quotient<F: Field>(n: &Poly<F>, d: &Poly<F>, len: usize) -> Vec<F> {
    let d0inv = d.coeff(0).inv().expect("constant term nonzero");
    let mut out: Vec<F> = Vec::with_capacity(len);
    for k in 0..len {
        let mut acc = n.coeff(k);
        for j in 1..=k.min(d.deg0()) {
            let dj = d.coeff(j);
            if !dj.is_zero() {
                acc = acc - dj * out[k - j].clone();
            }
        }
        out.push(acc * d0inv.clone());
    }
    out
}

impl<F: Field> Field for RatFunc<F> {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn is_one(&self) -> bool {
        RatFunc::is_one(self)
    }
    fn from_i64(v: i64) -> Self {
        RatFunc::constant(F::from_i64(v))
    }
    fn inv(&self) -> Option<Self> {
        RatFunc::inv(self)
    }
}

impl<F: Field + Ord> Ord for RatFunc<F> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.den.cmp(&other.den).then_with(|| self.num.cmp(&other.num))
    }
}

impl<F: Field + Ord> PartialOrd for RatFunc<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a, F: Field> Add<&'a RatFunc<F>> for &'a RatFunc<F> {
    type Output = RatFunc<F>;
    fn add(self, rhs: &RatFunc<F>) -> RatFunc<F> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::reduce(&self.num + &rhs.num, self.den.clone());
        }
        if self.den.is_one() {
            return RatFunc {
                num: &(&self.num * &rhs.den) + &rhs.num,
                den: rhs.den.clone(),
            };
        }
        if rhs.den.is_one() {
            return RatFunc {
                num: &self.num + &(&rhs.num * &self.den),
                den: self.den.clone(),
            };
        }
        let n = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::reduce(n, &self.den * &rhs.den)
    }
}

impl<'a, F: Field> Sub<&'a RatFunc<F>> for &'a RatFunc<F> {
    type Output = RatFunc<F>;
    fn sub(self, rhs: &RatFunc<F>) -> RatFunc<F> {
        self + &(-rhs)
    }
}

impl<'a, F: Field> Mul<&'a RatFunc<F>> for &'a RatFunc<F> {
    type Output = RatFunc<F>;
    fn mul(self, rhs: &RatFunc<F>) -> RatFunc<F> {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc {
                num: &self.num * &rhs.num,
                den: Poly::one(),
            };
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        // cross-cancel first to keep degrees small
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.exact_div(&g1).expect("gcd divides");
        let d2 = rhs.den.exact_div(&g1).expect("gcd divides");
        let n2 = rhs.num.exact_div(&g2).expect("gcd divides");
        let d1 = self.den.exact_div(&g2).expect("gcd divides");
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let lead = den.leading().expect("nonzero").clone();
        if lead.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lead.inv().expect("nonzero");
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }
}

impl<'a, F: Field> Div<&'a RatFunc<F>> for &'a RatFunc<F> {
    type Output = RatFunc<F>;
    fn div(self, rhs: &RatFunc<F>) -> RatFunc<F> {
        self * &rhs.inv().expect("division by the zero rational function")
    }
}

impl<F: Field> Neg for &RatFunc<F> {
    type Output = RatFunc<F>;
    fn neg(self) -> RatFunc<F> {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<F: Field> Neg for RatFunc<F> {
    type Output = RatFunc<F>;
    fn neg(self) -> RatFunc<F> {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<F: Field> $tr for RatFunc<F> {
            type Output = RatFunc<F>;
            fn $m(self, rhs: RatFunc<F>) -> RatFunc<F> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl<F: Field + fmt::Display> fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with("u"))
    }
}

/// `{"num": [...], "den": [...]}`, coefficients ascending.
impl serde::Serialize for RatFunc<super::field::Rational> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("RatFunc", 2)?;
        st.serialize_field("num", &self.num)?;
        st.serialize_field("den", &self.den)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::field::{int, rat, Rational};

    fn p(c: &[i64]) -> Poly<Rational> {
        Poly::from_coeffs(c.iter().map(|&x| int(x)).collect())
    }

    fn rf(n: &[i64], d: &[i64]) -> RatFunc<Rational> {
        RatFunc::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn normalize_examples() {
        // (u^2-1)/(u-1) -> (u+1)/1
        let f = rf(&[-1, 0, 1], &[-1, 1]);
        assert_eq!(f.num(), &p(&[1, 1]));
        assert!(f.den().is_one());
        // 0/(u+3) -> 0/1
        let z = rf(&[], &[3, 1]);
        assert!(z.is_zero());
        assert!(z.den().is_one());
        // (2u+2)/(2u) -> (u+1)/u
        let g = rf(&[2, 2], &[0, 2]);
        assert_eq!(g.num(), &p(&[1, 1]));
        assert_eq!(g.den(), &p(&[0, 1]));
    }

    #[test]
    fn zero_denominator_is_error() {
        assert!(matches!(
            RatFunc::new(p(&[1]), Poly::zero()),
            Err(Error::ZeroDenominator)
        ));
    }

    #[test]
    fn series_examples() {
        let f = rf(&[1, 1], &[0, 1]);
        let s = f.series(Expansion::AtInfinity, 3).unwrap();
        assert_eq!(s.coefficients(), &[int(1), int(1), int(0), int(0)]);

        let g = rf(&[1], &[2, 1]);
        let s = g.series(Expansion::AtInfinity, 3).unwrap();
        assert_eq!(s.coefficients(), &[int(0), int(1), int(-2), int(4)]);

        let h = rf(&[0, 1], &[1, 1]);
        let s = h.series(Expansion::AtZero, 2).unwrap();
        assert_eq!(s.coefficients(), &[int(0), int(1), int(-1)]);
    }

    #[test]
    fn series_pole_errors() {
        assert!(matches!(
            rf(&[0, 0, 1], &[1, 1]).series(Expansion::AtInfinity, 2),
            Err(Error::SeriesPole("at-infinity"))
        ));
        assert!(matches!(
            rf(&[1], &[0, 1]).series(Expansion::AtZero, 2),
            Err(Error::SeriesPole("at-zero"))
        ));
    }

    #[test]
    fn evaluate_examples() {
        let f = rf(&[1, 1], &[0, 1]);
        assert_eq!(f.eval(&int(1)).unwrap(), int(2));
        assert!(matches!(f.eval(&int(0)), Err(Error::Pole(_))));
        // removable singularity is gone after reduction
        assert_eq!(rf(&[-1, 0, 1], &[-1, 1]).eval(&int(1)).unwrap(), int(2));
    }

    #[test]
    fn shift_and_derivative() {
        let f = rf(&[1, 1], &[0, 1]); // (u+1)/u
        assert_eq!(f.shift(&int(-1)), rf(&[0, 1], &[-1, 1]));
        assert_eq!(f.derivative(), rf(&[-1], &[0, 0, 1]));
        assert_eq!(f.scale_var(&rat(1, 2)), rf(&[2, 1], &[0, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(rf(&[1, 1], &[0, 1]).to_string(), "(u + 1)/u");
    }
}
