use serde::{Deserialize, Serialize};

use super::hook::{hook_diagram, Partition};
use crate::error::{Error, Result};

/// The datum `(m, n, r, λ, μ)` defining a skew representation.
///
/// `λ` is a covariant weight of `gl(m'|n)` with `m' = r + m`, `μ` a
/// partition with `r` parts, and the hook diagram of `μ` sits inside that of
/// `λ`. Construction validates all of this; a `SkewShape` in hand is always
/// usable.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawShape", into = "RawShape")]
pub struct SkewShape {
    m: usize,
    n: usize,
    r: usize,
    lambda: Vec<i64>,
    mu: Vec<i64>,
}

#[derive(Clone, Serialize, Deserialize)]
struct RawShape {
    m: usize,
    n: usize,
    r: usize,
    lambda: Vec<i64>,
    #[serde(default)]
    mu: Vec<i64>,
}

impl TryFrom<RawShape> for SkewShape {
    type Error = Error;
    fn try_from(s: RawShape) -> Result<Self> {
        SkewShape::new(s.m, s.n, s.r, s.lambda, s.mu)
    }
}

impl From<SkewShape> for RawShape {
    fn from(s: SkewShape) -> Self {
        RawShape {
            m: s.m,
            n: s.n,
            r: s.r,
            lambda: s.lambda,
            mu: s.mu,
        }
    }
}

/// Checks that `weight` is a covariant `gl(m|n)` weight, naming the first
/// failed condition.
pub fn check_covariant(weight: &[i64], m: usize, n: usize) -> Result<()> {
    let bad = |msg: String| Err(Error::InvalidShape(msg));
    if weight.len() != m + n {
        return bad(format!("weight {weight:?} has length {}, expected {}", weight.len(), m + n));
    }
    if let Some(x) = weight.iter().find(|&&x| x < 0) {
        return bad(format!("weight {weight:?} has negative entry {x}"));
    }
    if weight[..m].windows(2).any(|w| w[0] < w[1]) {
        return bad(format!("even part of {weight:?} is not weakly decreasing"));
    }
    if weight[m..].windows(2).any(|w| w[0] < w[1]) {
        return bad(format!("odd part of {weight:?} is not weakly decreasing"));
    }
    if m > 0 {
        let l = weight[m..].iter().filter(|&&x| x > 0).count() as i64;
        if l > weight[m - 1] {
            return bad(format!(
                "weight {weight:?}: {l} nonzero odd entries exceed the last even entry {}",
                weight[m - 1]
            ));
        }
    }
    Ok(())
}

impl SkewShape {
    pub fn new(m: usize, n: usize, r: usize, lambda: Vec<i64>, mu: Vec<i64>) -> Result<Self> {
        if m + n == 0 {
            return Err(Error::InvalidShape("m + n must be at least 1".into()));
        }
        let mp = r + m;
        if lambda.len() != mp + n {
            return Err(Error::InvalidShape(format!(
                "lambda has {} entries, expected r + m + n = {}",
                lambda.len(),
                mp + n
            )));
        }
        if mu.len() != r {
            return Err(Error::InvalidShape(format!(
                "mu has {} entries, expected r = {r}",
                mu.len()
            )));
        }
        check_covariant(&lambda, mp, n)?;
        check_covariant(&mu, r, 0)?;
        let outer = hook_diagram(&lambda, mp, n)?;
        let inner = hook_diagram(&mu, r, 0)?;
        if !inner.is_contained_in(&outer) {
            return Err(Error::InvalidShape(format!(
                "hook diagram {inner} of mu is not contained in {outer} of lambda (the module is zero)"
            )));
        }
        Ok(SkewShape { m, n, r, lambda, mu })
    }

    /// Shape with `r = 0`.
    pub fn straight(m: usize, n: usize, lambda: Vec<i64>) -> Result<Self> {
        Self::new(m, n, 0, lambda, Vec::new())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn lambda(&self) -> &[i64] {
        &self.lambda
    }

    pub fn mu(&self) -> &[i64] {
        &self.mu
    }

    /// `m' = r + m`
    pub fn m_prime(&self) -> usize {
        self.r + self.m
    }

    /// `m + n`, the rank of the acting `gl(m|n)`.
    pub fn rank(&self) -> usize {
        self.m + self.n
    }

    /// Absolute index of the top row, `m' + n`.
    pub fn top(&self) -> usize {
        self.m_prime() + self.n
    }

    /// Parity sign `s_i` of `gl(m|n)`, `1 ≤ i ≤ m + n`.
    pub fn s(&self, i: usize) -> i64 {
        parity_sign(self.m, i)
    }

    pub fn outer_diagram(&self) -> Partition {
        hook_diagram(&self.lambda, self.m_prime(), self.n).expect("validated")
    }

    pub fn inner_diagram(&self) -> Partition {
        hook_diagram(&self.mu, self.r, 0).expect("validated")
    }

    /// `|λ| - |μ|`, the number of boxes of the skew diagram.
    pub fn size(&self) -> i64 {
        self.lambda.iter().sum::<i64>() - self.mu.iter().sum::<i64>()
    }
}

/// `s_i = 1` for `i ≤ m`, `-1` otherwise.
pub fn parity_sign(m: usize, i: usize) -> i64 {
    if i <= m {
        1
    } else {
        -1
    }
}

/// All valid skew shapes with the given `(m, n, r)` and `|λ| ≤ max_size`,
/// over every `μ` that fits.
pub fn shapes_up_to(m: usize, n: usize, r: usize, max_size: i64) -> Vec<SkewShape> {
    let mp = r + m;
    let mut out = Vec::new();
    for lambda in weights(mp + n, max_size) {
        if check_covariant(&lambda, mp, n).is_err() {
            continue;
        }
        for mu in weights(r, max_size) {
            if let Ok(s) = SkewShape::new(m, n, r, lambda.clone(), mu) {
                out.push(s);
            }
        }
    }
    out
}

/// Weakly decreasing halves are checked by the caller; this lists every
/// nonnegative tuple of length `len` with sum at most `max`.
fn weights(len: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w: Vec<i64>| {
                let used: i64 = w.iter().sum();
                (0..=max - used).map(move |x| {
                    let mut v = w.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_shapes() {
        assert!(SkewShape::straight(1, 1, vec![0, 1]).is_err()); // l = 1 > λ_1 = 0
        assert!(SkewShape::straight(1, 1, vec![1]).is_err());
        assert!(SkewShape::new(1, 1, 1, vec![1, 0, 0], vec![2]).is_err()); // not contained
        assert!(SkewShape::straight(2, 0, vec![0, 1]).is_err());
        assert!(SkewShape::straight(0, 0, vec![]).is_err());
    }

    #[test]
    fn accepts_good_shapes() {
        let s = SkewShape::new(1, 1, 1, vec![2, 1, 1], vec![1]).unwrap();
        assert_eq!(s.m_prime(), 2);
        assert_eq!(s.top(), 3);
        assert_eq!(s.size(), 3);
        assert!(SkewShape::straight(0, 2, vec![3, 1]).is_ok());
    }

    #[test]
    fn json_round_trip_validates() {
        let s = SkewShape::straight(1, 1, vec![2, 1]).unwrap();
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"m":1,"n":1,"r":0,"lambda":[2,1],"mu":[]}"#);
        assert_eq!(serde_json::from_str::<SkewShape>(&j).unwrap(), s);
        assert!(serde_json::from_str::<SkewShape>(r#"{"m":1,"n":1,"r":0,"lambda":[0,1]}"#).is_err());
    }
}
