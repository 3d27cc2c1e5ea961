use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::shape::SkewShape;
use crate::error::{Error, Result};

/// A Gelfand-Tsetlin tableau: rows `λ_{K·}` for `r ≤ K ≤ m'+n`, row `K`
/// having `K` entries.
///
/// Rows are stored bottom-up (index `k = K - r`) but serialized top-down as
/// they are usually drawn.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GtTableau {
    r: usize,
    rows: Vec<Vec<i64>>,
}

impl GtTableau {
    /// Builds a tableau from rows listed top-down, checking only the
    /// triangular dimensions.
    pub fn from_rows_top_down(shape: &SkewShape, rows: Vec<Vec<i64>>) -> Result<Self> {
        let expected = shape.rank() + 1;
        if rows.len() != expected {
            return Err(Error::Dimension(format!(
                "{} rows given, expected {expected}",
                rows.len()
            )));
        }
        let mut rows = rows;
        rows.reverse();
        for (k, row) in rows.iter().enumerate() {
            if row.len() != shape.r() + k {
                return Err(Error::Dimension(format!(
                    "row {} has {} entries, expected {}",
                    shape.r() + k,
                    row.len(),
                    shape.r() + k
                )));
            }
        }
        Ok(GtTableau { r: shape.r(), rows })
    }

    pub(crate) fn from_rows_bottom_up(r: usize, rows: Vec<Vec<i64>>) -> Self {
        GtTableau { r, rows }
    }

    /// Row `k' = r + k`, for `0 ≤ k ≤ m + n`.
    pub fn row(&self, k: usize) -> &[i64] {
        &self.rows[k]
    }

    /// Rows listed top-down.
    pub fn rows_top_down(&self) -> Vec<Vec<i64>> {
        self.rows.iter().rev().cloned().collect()
    }

    /// Number of rows, `m + n + 1`.
    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// `λ_{K,i}` with absolute row index `K` and 1-based column `i`.
    pub fn at(&self, big_k: usize, i: usize) -> i64 {
        self.rows[big_k - self.r][i - 1]
    }

    /// `θ_{K,i} = λ_{K+1,i} - λ_{K,i}` (absolute row index).
    pub fn theta(&self, big_k: usize, i: usize) -> i64 {
        self.at(big_k + 1, i) - self.at(big_k, i)
    }

    /// Sum of row `k' = r + k`.
    pub fn row_sum(&self, k: usize) -> i64 {
        self.rows[k].iter().sum()
    }

    /// `Λ ± δ_{ki}`: entry `λ_{k'i}` shifted by `delta`.
    pub fn shifted(&self, k: usize, i: usize, delta: i64) -> GtTableau {
        let mut t = self.clone();
        t.rows[k][i - 1] += delta;
        t
    }

    fn cmp_top_down(&self, other: &Self) -> Ordering {
        self.rows.iter().rev().cmp(other.rows.iter().rev())
    }
}

/// Canonical basis order: descending lexicographic order of the rows read
/// top-down, so the highest tableau comes first.
impl Ord for GtTableau {
    fn cmp(&self, other: &Self) -> Ordering {
        other.cmp_top_down(self)
    }
}

impl PartialOrd for GtTableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GtTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .rev()
            .map(|r| {
                let v: Vec<String> = r.iter().map(ToString::to_string).collect();
                format!("({})", v.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(" "))
    }
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    rows: Vec<Vec<i64>>,
}

impl Serialize for GtTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableauJson {
            rows: self.rows_top_down(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GtTableau {
    /// Reads `{"rows": [...]}` top-down. The bottom row length fixes `r`.
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = TableauJson::deserialize(d)?;
        let mut rows = j.rows;
        rows.reverse();
        let r = rows.first().map_or(0, Vec::len);
        if rows.iter().enumerate().any(|(k, row)| row.len() != r + k) {
            return Err(serde::de::Error::custom("rows are not triangular"));
        }
        Ok(GtTableau { r, rows })
    }
}

/// How to read the lower end of the counting range in condition A(3).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum A3Reading {
    /// Count nonzero odd entries, `m'+1 ≤ i ≤ K`: the covariance condition
    /// for row `K`. This is what the SSYT count confirms.
    #[default]
    Covariant,
    /// Count from `i = m'`, including the last even entry.
    Literal,
}

/// The first violated admissibility condition.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Violation {
    /// Condition label, `1..=6` for A(1)..A(6).
    pub condition: u8,
    pub location: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A({}) violated at {}", self.condition, self.location)
    }
}

/// Checks A(1)–A(6); `Ok(None)` means admissible.
pub fn check_admissible(shape: &SkewShape, t: &GtTableau) -> Result<Option<Violation>> {
    check_admissible_with(shape, t, A3Reading::Covariant)
}

pub fn is_admissible(shape: &SkewShape, t: &GtTableau) -> bool {
    matches!(check_admissible(shape, t), Ok(None))
}

pub fn check_admissible_with(
    shape: &SkewShape,
    t: &GtTableau,
    reading: A3Reading,
) -> Result<Option<Violation>> {
    let r = shape.r();
    if t.r != r || t.height() != shape.rank() + 1 {
        return Err(Error::Dimension(format!(
            "tableau with {} rows from {} does not match shape with rows {}..={}",
            t.height(),
            t.r,
            r,
            shape.top()
        )));
    }
    for (k, row) in t.rows.iter().enumerate() {
        if row.len() != r + k {
            return Err(Error::Dimension(format!("row {} has {} entries", r + k, row.len())));
        }
    }
    let v = |c: u8, loc: String| Ok(Some(Violation { condition: c, location: loc }));
    let mp = shape.m_prime();
    let top = shape.top();

    if t.rows[top - r] != shape.lambda() {
        return v(1, format!("top row {:?} != lambda {:?}", t.rows[top - r], shape.lambda()));
    }
    if t.rows[0] != shape.mu() {
        return v(1, format!("bottom row {:?} != mu {:?}", t.rows[0], shape.mu()));
    }
    for big_k in (mp + 1)..=top {
        for i in 1..=mp {
            let th = t.at(big_k, i) - t.at(big_k - 1, i);
            if th != 0 && th != 1 {
                return v(2, format!("theta[{},{i}] = {th}", big_k - 1));
            }
        }
    }
    if mp > 0 {
        for big_k in (mp + 1)..=top {
            let lo = match reading {
                A3Reading::Covariant => mp + 1,
                A3Reading::Literal => mp,
            };
            let count = (lo..=big_k).filter(|&i| t.at(big_k, i) > 0).count() as i64;
            if t.at(big_k, mp) < count {
                return v(
                    3,
                    format!("row {big_k}: lambda[{big_k},{mp}] = {} < {count}", t.at(big_k, mp)),
                );
            }
        }
        if shape.n() > 0 && t.at(mp + 1, mp) == 0 && t.theta(mp, mp) != 0 {
            return v(4, format!("lambda[{},{mp}] = 0 but theta[{mp},{mp}] != 0", mp + 1));
        }
    }
    for big_k in (mp + 1)..=top {
        for i in 1..mp {
            if t.at(big_k, i) < t.at(big_k, i + 1) {
                return v(5, format!("row {big_k}: even part increases at column {i}"));
            }
        }
    }
    let interlace = |k: usize, i: usize| t.at(k + 1, i) >= t.at(k, i) && t.at(k, i) >= t.at(k + 1, i + 1);
    for k in r.max(1)..mp {
        for i in 1..=k {
            if !interlace(k, i) {
                return v(6, format!("rows {k}/{} at column {i}", k + 1));
            }
        }
    }
    for k in (mp + 1)..top {
        for i in (mp + 1)..=k {
            if !interlace(k, i) {
                return v(6, format!("rows {k}/{} at column {i}", k + 1));
            }
        }
    }
    Ok(None)
}

/// All `λ/μ`-admissible tableaux in canonical order.
///
/// Rows are generated top-down: below an even/odd row each even entry may
/// drop by at most one (A(2)) and the odd entries interlace (A(6)); below
/// the wall row `m'` classical interlacing applies. Every candidate is then
/// run through the full admissibility check.
pub fn enumerate_tableaux(shape: &SkewShape) -> Vec<GtTableau> {
    enumerate_tableaux_with(shape, A3Reading::Covariant)
}

pub fn enumerate_tableaux_with(shape: &SkewShape, reading: A3Reading) -> Vec<GtTableau> {
    let top = shape.top();
    let mut out = Vec::new();
    let mut stack: Vec<Vec<i64>> = vec![shape.lambda().to_vec()];
    descend(shape, reading, top, &mut stack, &mut out);
    out.sort();
    out
}

fn descend(
    shape: &SkewShape,
    reading: A3Reading,
    big_k: usize,
    stack: &mut Vec<Vec<i64>>,
    out: &mut Vec<GtTableau>,
) {
    let r = shape.r();
    if big_k == r {
        let mut rows = stack.clone();
        rows.reverse();
        let t = GtTableau::from_rows_bottom_up(r, rows);
        if matches!(check_admissible_with(shape, &t, reading), Ok(None)) {
            out.push(t);
        }
        return;
    }
    let upper = stack.last().expect("nonempty").clone();
    let mp = shape.m_prime();
    let len = big_k - 1;
    // candidate ranges per entry of row K-1
    let ranges: Vec<(i64, i64)> = (1..=len)
        .map(|i| {
            if big_k > mp && i <= mp {
                (upper[i - 1] - 1, upper[i - 1])
            } else {
                (upper[i], upper[i - 1])
            }
        })
        .collect();
    let mu = shape.mu();
    let mut row = vec![0i64; len];
    fill(0, &ranges, mu, &mut row, &mut |row: &[i64]| {
        stack.push(row.to_vec());
        descend(shape, reading, big_k - 1, stack, out);
        stack.pop();
    });
}

fn fill(
    pos: usize,
    ranges: &[(i64, i64)],
    mu: &[i64],
    row: &mut Vec<i64>,
    emit: &mut dyn FnMut(&[i64]),
) {
    if pos == ranges.len() {
        emit(row);
        return;
    }
    let (lo, hi) = ranges[pos];
    // entries in the first r columns never fall below mu
    let lo = if pos < mu.len() { lo.max(mu[pos]) } else { lo };
    for x in lo.max(-1)..=hi {
        row[pos] = x;
        fill(pos + 1, ranges, mu, row, emit);
    }
}

/// The values `l_{ki}` of a tableau for `0 ≤ k ≤ m+n`, `1 ≤ i ≤ k'`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ContentTable {
    r: usize,
    values: Vec<Vec<i64>>,
}

impl ContentTable {
    pub fn new(shape: &SkewShape, t: &GtTableau) -> Self {
        let r = shape.r() as i64;
        let mp = shape.m_prime();
        let values = (0..t.height())
            .map(|k| {
                t.row(k)
                    .iter()
                    .enumerate()
                    .map(|(idx, &lam)| {
                        let i = idx as i64 + 1;
                        if idx < mp {
                            lam + r - i + 1
                        } else {
                            -lam + r + i - 2 * mp as i64
                        }
                    })
                    .collect()
            })
            .collect();
        ContentTable {
            r: shape.r(),
            values,
        }
    }

    /// `l_{ki}`; `k` is the relative row index, `i` 1-based.
    pub fn l(&self, k: usize, i: usize) -> i64 {
        self.values[k][i - 1]
    }

    pub fn row(&self, k: usize) -> &[i64] {
        &self.values[k]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(m: usize, n: usize, lambda: &[i64]) -> SkewShape {
        SkewShape::straight(m, n, lambda.to_vec()).unwrap()
    }

    fn tab(s: &SkewShape, rows: &[&[i64]]) -> GtTableau {
        GtTableau::from_rows_top_down(s, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn admissibility_examples() {
        let s = shape(1, 1, &[1, 0]);
        assert!(is_admissible(&s, &tab(&s, &[&[1, 0], &[1], &[]])));
        assert!(is_admissible(&s, &tab(&s, &[&[1, 0], &[0], &[]])));
        let bad = check_admissible(&s, &tab(&s, &[&[1, 0], &[2], &[]])).unwrap().unwrap();
        assert_eq!(bad.condition, 2);
        let z = shape(1, 1, &[0, 0]);
        assert!(is_admissible(&z, &tab(&z, &[&[0, 0], &[0], &[]])));
    }

    #[test]
    fn dimension_mismatch_is_error() {
        let s = shape(1, 1, &[1, 0]);
        let other = shape(2, 1, &[1, 0, 0]);
        let t = tab(&other, &[&[1, 0, 0], &[1, 0], &[1], &[]]);
        assert!(check_admissible(&s, &t).is_err());
        assert!(GtTableau::from_rows_top_down(&s, vec![vec![1, 0], vec![1, 0], vec![]]).is_err());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_tableaux(&shape(1, 1, &[1, 0])).len(), 2);
        assert_eq!(enumerate_tableaux(&shape(1, 1, &[2, 1])).len(), 2);
        assert_eq!(enumerate_tableaux(&shape(1, 1, &[0, 0])).len(), 1);
        // canonical order puts the highest tableau first
        let ts = enumerate_tableaux(&shape(1, 1, &[1, 0]));
        assert_eq!(ts[0].row(1), &[1]);
        assert_eq!(ts[1].row(1), &[0]);
    }

    #[test]
    fn literal_a3_reading_loses_tableaux() {
        // λ = (1,1) for gl(1|1): the top row itself fails the literal reading
        let s = shape(1, 1, &[1, 1]);
        assert_eq!(enumerate_tableaux(&s).len(), 2);
        assert_eq!(enumerate_tableaux_with(&s, A3Reading::Literal).len(), 0);
    }

    #[test]
    fn content_examples() {
        let s = shape(1, 1, &[1, 0]);
        let ts = enumerate_tableaux(&s);
        let c = ContentTable::new(&s, &ts[0]);
        assert_eq!((c.l(1, 1), c.l(2, 1), c.l(2, 2)), (1, 1, 0));
        assert_eq!(ContentTable::new(&s, &ts[1]).l(1, 1), 0);
        let s2 = SkewShape::new(1, 1, 2, vec![1, 0, 0, 0], vec![0, 0]).unwrap();
        for t in enumerate_tableaux(&s2) {
            let c = ContentTable::new(&s2, &t);
            // offset r - i + 1 = 2 for i = 1
            assert_eq!(c.l(0, 1), t.at(2, 1) + 2);
        }
    }

    #[test]
    fn json_is_top_down() {
        let s = shape(1, 1, &[1, 0]);
        let t = &enumerate_tableaux(&s)[0];
        let j = serde_json::to_string(t).unwrap();
        assert_eq!(j, r#"{"rows":[[1,0],[1],[]]}"#);
        assert_eq!(&serde_json::from_str::<GtTableau>(&j).unwrap(), t);
    }
}
