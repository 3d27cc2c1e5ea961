//! The field `ℚ(q)` (rational functions in the formal variable `q`) and
//! rational functions of `u` over it.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{parse_rational, rational_to_string, Field, Poly, RatFn, RatFunc, Rational};
use crate::glrep::Bracket;

/// An element of `ℚ(q)`; the variable of the underlying [`RatFn`] is `q`.
pub type QNum = RatFn;

/// A rational function of `u` with coefficients in `ℚ(q)`.
pub type QFn = RatFunc<QNum>;

/// `q^e` for any integer `e`.
pub fn qpow(e: i64) -> QNum {
    let mono = RatFn::from_poly(Poly::monomial(Rational::from_i64(1), e.unsigned_abs() as usize));
    if e >= 0 {
        mono
    } else {
        RatFn::one() / mono
    }
}

/// `q_i = q^{s_i}`.
pub fn q_sign(s: i64) -> QNum {
    qpow(s)
}

/// The q-integer `[k] = (q^k - q^{-k})/(q - q^{-1})`.
pub fn q_number(k: i64) -> QNum {
    if k == 0 {
        return QNum::zero();
    }
    (qpow(k) - qpow(-k)) / (qpow(1) - qpow(-1))
}

/// Value at a rational `q0`, `None` at a pole.
pub fn q_at(x: &QNum, q0: &Rational) -> Option<Rational> {
    x.try_eval(q0)
}

/// Value at `q = 1` of the reduced form. Every q-integer has a finite
/// nonzero value there, so a pole means the element is not a classical
/// deformation.
pub fn classical_limit(x: &QNum) -> Result<Rational> {
    x.eval(&Rational::from_i64(1))
}

/// `f` with `q` specialized to `q0`; `None` if a coefficient has a pole
/// there or the denominator vanishes identically.
pub fn qfn_at(f: &QFn, q0: &Rational) -> Option<RatFn> {
    let spec = |p: &Poly<QNum>| -> Option<Poly<Rational>> {
        Some(Poly::from_coeffs(
            p.coeffs().iter().map(|c| q_at(c, q0)).collect::<Option<Vec<_>>>()?,
        ))
    };
    RatFn::new(spec(f.num())?, spec(f.den())?).ok()
}

/// `f(u0)` at `q = q0`.
pub fn qfn_eval(f: &QFn, q0: &Rational, u0: &Rational) -> Option<Rational> {
    qfn_at(f, q0)?.try_eval(u0)
}

/// The constant `c ∈ ℚ(q)` as a function of `u`.
pub fn qconst(c: QNum) -> QFn {
    QFn::constant(c)
}

/// `u` over `ℚ(q)`.
pub fn uvar() -> QFn {
    QFn::var()
}

/// `(num, den, e)` with `x = q^e num/den`, `num(0), den(0) ≠ 0`.
fn split_qpower(x: &QNum) -> (Poly<Rational>, Poly<Rational>, i64) {
    let strip = |p: &Poly<Rational>| {
        let low = p.coeffs().iter().position(|c| !c.is_zero()).unwrap_or(0);
        (Poly::from_coeffs(p.coeffs()[low..].to_vec()), low as i64)
    };
    if x.is_zero() {
        return (Poly::zero(), Poly::one(), 0);
    }
    let (n, a) = strip(x.num());
    let (d, b) = strip(x.den());
    (n, d, a - b)
}

/// Human form: a Laurent polynomial `q^2 + 1 + q^-2` when the denominator
/// is a power of `q`, otherwise `(…)/(…)` with a `q^e` prefactor.
pub fn fmt_q(x: &QNum) -> String {
    let (n, d, e) = split_qpower(x);
    let terms = |p: &Poly<Rational>, shift: i64| -> Vec<String> {
        p.coeffs()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let exp = i as i64 + shift;
                let mono = match exp {
                    0 => String::new(),
                    1 => "q".into(),
                    _ => format!("q^{exp}"),
                };
                let cs = rational_to_string(c);
                match (mono.is_empty(), cs.as_str()) {
                    (true, _) => cs,
                    (false, "1") => mono,
                    (false, "-1") => format!("-{mono}"),
                    _ => format!("{cs}*{mono}"),
                }
            })
            .collect()
    };
    let join = |v: Vec<String>| v.join(" + ").replace("+ -", "- ");
    if x.is_zero() {
        return "0".into();
    }
    if d.is_one() {
        return join(terms(&n, e));
    }
    let wrap = |v: Vec<String>| if v.len() > 1 { format!("({})", join(v)) } else { join(v) };
    format!("{}/{}", wrap(terms(&n, e)), wrap(terms(&d, 0)))
}

/// A rational function of `u` with coefficients printed by [`fmt_q`].
pub fn fmt_qfn(f: &QFn) -> String {
    let poly = |p: &Poly<QNum>| -> String {
        let parts: Vec<String> = p
            .coeffs()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let cs = fmt_q(c);
                let cs = if cs.contains(' ') { format!("({cs})") } else { cs };
                match i {
                    0 => cs,
                    _ => {
                        let mono = if i == 1 { "u".to_string() } else { format!("u^{i}") };
                        if c.is_one() {
                            mono
                        } else {
                            format!("{cs}*{mono}")
                        }
                    }
                }
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ").replace("+ -", "- ")
        }
    };
    let n = poly(f.num());
    if f.den().is_one() {
        return n;
    }
    format!("({n})/({})", poly(f.den()))
}

/// Serialized form of a [`QNum`]: `q^qshift · num(q)/den(q)` with
/// ascending coefficient strings and `num(0), den(0) ≠ 0`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct QElement {
    pub num: Vec<String>,
    pub den: Vec<String>,
    pub qshift: i64,
}

impl From<&QNum> for QElement {
    fn from(x: &QNum) -> Self {
        let (n, d, e) = split_qpower(x);
        let s = |p: &Poly<Rational>| p.coeffs().iter().map(rational_to_string).collect();
        QElement {
            num: s(&n),
            den: s(&d),
            qshift: e,
        }
    }
}

impl QElement {
    pub fn to_qnum(&self) -> Result<QNum> {
        let p = |v: &[String]| -> Result<Poly<Rational>> {
            v.iter()
                .map(|c| parse_rational(c).ok_or_else(|| Error::InvalidSpec(format!("bad coefficient {c:?}"))))
                .collect::<Result<Vec<_>>>()
                .map(Poly::from_coeffs)
        };
        Ok(RatFn::new(p(&self.num)?, p(&self.den)?)? * qpow(self.qshift))
    }
}

/// Serialized form of a [`QFn`]: coefficient lists in `u`, ascending.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct QFnJson {
    pub num: Vec<QElement>,
    pub den: Vec<QElement>,
}

impl From<&QFn> for QFnJson {
    fn from(f: &QFn) -> Self {
        let s = |p: &Poly<QNum>| p.coeffs().iter().map(QElement::from).collect();
        QFnJson {
            num: s(f.num()),
            den: s(f.den()),
        }
    }
}

/// Integers to q-integers.
#[derive(Clone, Copy, Debug, Default)]
pub struct QBracket;

impl Bracket for QBracket {
    type F = QNum;
    fn bracket(&self, l: i64) -> QNum {
        q_number(l)
    }
}
