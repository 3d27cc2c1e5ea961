use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{Field, Rational};
use super::matrix::Matrix;
use super::poly::Poly;
use super::ratfunc::RatFunc;

/// Seeded source of exact rational sample points.
pub struct SamplePoints {
    rng: ChaCha8Rng,
}

impl SamplePoints {
    pub fn new(seed: u64) -> Self {
        SamplePoints {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// A random `p/q` with small height that `avoid` does not reject.
    pub fn next(&mut self, avoid: impl Fn(&Rational) -> bool) -> Rational {
        loop {
            let p: i64 = self.rng.gen_range(-60..=60);
            let q: i64 = self.rng.gen_range(1..=7);
            let x = Rational::new(BigInt::from(p), BigInt::from(q));
            if !avoid(&x) {
                return x;
            }
        }
    }

    /// `count` pairwise distinct points, none rejected by `avoid`.
    pub fn distinct(&mut self, count: usize, avoid: impl Fn(&Rational) -> bool) -> Vec<Rational> {
        let mut out: Vec<Rational> = Vec::with_capacity(count);
        while out.len() < count {
            let x = self.next(&avoid);
            if !out.contains(&x) {
                out.push(x);
            }
        }
        out
    }
}

/// Degree of the polynomial matrix `L(u)·M(u)`, where `L` is the lcm of
/// all entry denominators. Multiplying an identity between such matrices
/// through by the `L`s turns it into a polynomial identity, and this is a
/// bound for its degree contribution.
pub fn degree_bound<F: Field>(m: &Matrix<RatFunc<F>>) -> usize {
    let mut lcm = Poly::<F>::one();
    let mut excess = 0usize;
    for (_, _, f) in m.nonzero_entries() {
        let d = f.den();
        if !d.is_constant() {
            let g = lcm.gcd(d);
            lcm = &lcm * &d.exact_div(&g).expect("gcd divides");
        }
        excess = excess.max(f.num().deg0().saturating_sub(d.deg0()));
    }
    lcm.deg0() + excess
}
