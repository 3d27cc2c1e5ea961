use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition, stored as its nonzero row lengths.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut rows: Vec<usize>) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("{rows:?} is not a partition")));
        }
        Ok(Partition(rows))
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    /// Length of row `i` (0-based); 0 past the end.
    pub fn row(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Length of column `j` (0-based).
    pub fn col(&self, j: usize) -> usize {
        self.0.iter().take_while(|&&r| r > j).count()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.row(0);
        Partition((0..w).map(|j| self.col(j)).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The `(m|n)`-hook Young diagram of a covariant weight: the first `m` rows
/// are `β_1..β_m` and the first `l` columns have lengths `β_{m+c} + m`,
/// where `l` counts the nonzero odd entries.
pub fn hook_diagram(weight: &[i64], m: usize, n: usize) -> Result<Partition> {
    super::shape::check_covariant(weight, m, n)?;
    let odd: Vec<usize> = weight[m..].iter().map(|&x| x as usize).collect();
    let mut rows: Vec<usize> = weight[..m].iter().map(|&x| x as usize).collect();
    let depth = odd.first().copied().unwrap_or(0);
    for t in 0..depth {
        rows.push(odd.iter().filter(|&&b| b > t).count());
    }
    Partition::new(rows)
}

/// Inverse of [`hook_diagram`]: reads a covariant `gl(m|n)` weight off a
/// diagram, failing if the diagram does not fit in the `(m|n)` hook.
pub fn weight_of_hook(diagram: &Partition, m: usize, n: usize) -> Result<Vec<i64>> {
    if diagram.row(m) > n {
        return Err(Error::InvalidShape(format!(
            "diagram {diagram} does not fit in the ({m}|{n}) hook"
        )));
    }
    let mut w: Vec<i64> = (0..m).map(|i| diagram.row(i) as i64).collect();
    for c in 0..n {
        w.push(diagram.col(c).saturating_sub(m) as i64);
    }
    check_covariant_hook(&w, m, n, diagram)?;
    Ok(w)
}

fn check_covariant_hook(w: &[i64], m: usize, n: usize, d: &Partition) -> Result<()> {
    super::shape::check_covariant(w, m, n)?;
    if hook_diagram(w, m, n)? != *d {
        return Err(Error::InvalidShape(format!("diagram {d} is not an ({m}|{n}) hook diagram")));
    }
    Ok(())
}
