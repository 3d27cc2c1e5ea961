use serde::{Deserialize, Serialize};

use super::gt::{check_admissible, GtTableau};
use super::hook::{hook_diagram, weight_of_hook, Partition};
use super::shape::SkewShape;
use crate::error::{Error, Result};

/// A filling of the skew diagram `outer / inner` with entries in
/// `1..=m+n`. `filling[row]` lists the entries of that row from the first
/// box outside `inner` to the end of `outer`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Ssyt {
    pub outer: Partition,
    pub inner: Partition,
    pub filling: Vec<Vec<usize>>,
}

impl Ssyt {
    /// Entry at (row, column), 0-based, if that box belongs to the skew shape.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        let start = self.inner.row(row);
        if col < start || col >= self.outer.row(row) {
            return None;
        }
        self.filling.get(row).and_then(|r| r.get(col - start)).copied()
    }

    /// Checks the three semistandard conditions for the alphabet split at `m`.
    pub fn check_semistandard(&self, m: usize, n: usize) -> Result<()> {
        let bad = |msg: String| Err(Error::NotSemistandard(msg));
        if !self.inner.is_contained_in(&self.outer) {
            return bad("inner diagram is not contained in the outer one".into());
        }
        for row in 0..self.outer.rows().len().max(self.filling.len()) {
            let want = self.outer.row(row) - self.inner.row(row).min(self.outer.row(row));
            if self.filling.get(row).map_or(0, Vec::len) != want {
                return bad(format!("row {row} has the wrong number of boxes"));
            }
        }
        for row in 0..self.outer.rows().len() {
            for col in self.inner.row(row)..self.outer.row(row) {
                let x = self.entry(row, col).expect("in shape");
                if x == 0 || x > m + n {
                    return bad(format!("entry {x} at ({row},{col}) outside 1..={}", m + n));
                }
                if let Some(right) = self.entry(row, col + 1) {
                    if right < x || (x > m && right == x) {
                        return bad(format!("row condition fails at ({row},{col})"));
                    }
                }
                if let Some(below) = self.entry(row + 1, col) {
                    if below < x || (x <= m && below == x) {
                        return bad(format!("column condition fails at ({row},{col})"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// The covariant algebra `(m_k | n_k)` that row `k' = r + k` is a weight of.
fn row_algebra(shape: &SkewShape, k: usize) -> (usize, usize) {
    if k <= shape.m() {
        (shape.r() + k, 0)
    } else {
        (shape.m_prime(), k - shape.m())
    }
}

/// Writes `k` into the boxes of `Γ_{λ^(k)} / Γ_{λ^(k-1)}`.
pub fn tableau_to_ssyt(shape: &SkewShape, t: &GtTableau) -> Result<Ssyt> {
    if let Some(v) = check_admissible(shape, t)? {
        return Err(Error::InvalidShape(format!("tableau is not admissible: {v}")));
    }
    let outer = shape.outer_diagram();
    let inner = shape.inner_diagram();
    let mut filling: Vec<Vec<usize>> = (0..outer.rows().len())
        .map(|row| vec![0; outer.row(row) - inner.row(row)])
        .collect();
    let mut prev = inner.clone();
    for k in 1..=shape.rank() {
        let (mk, nk) = row_algebra(shape, k);
        let cur = hook_diagram(t.row(k), mk, nk)?;
        for (row, slot) in filling.iter_mut().enumerate() {
            for col in prev.row(row)..cur.row(row) {
                slot[col - inner.row(row)] = k;
            }
        }
        prev = cur;
    }
    Ok(Ssyt {
        outer,
        inner,
        filling,
    })
}

/// Reads the chain of hook diagrams back off a semistandard filling.
pub fn ssyt_to_tableau(s: &Ssyt, shape: &SkewShape) -> Result<GtTableau> {
    if s.outer != shape.outer_diagram() || s.inner != shape.inner_diagram() {
        return Err(Error::NotSemistandard("filling has the wrong skew shape".into()));
    }
    s.check_semistandard(shape.m(), shape.n())?;
    let mut rows = vec![shape.mu().to_vec()];
    for k in 1..=shape.rank() {
        let sub: Vec<usize> = (0..s.outer.rows().len())
            .map(|row| {
                s.inner.row(row)
                    + s.filling[row].iter().take_while(|&&x| x <= k).count()
            })
            .collect();
        let diagram = Partition::new(sub)
            .map_err(|e| Error::NotSemistandard(format!("entries <= {k} do not form a diagram: {e}")))?;
        let (mk, nk) = row_algebra(shape, k);
        rows.push(
            weight_of_hook(&diagram, mk, nk)
                .map_err(|e| Error::NotSemistandard(format!("entries <= {k}: {e}")))?,
        );
    }
    let t = GtTableau::from_rows_bottom_up(shape.r(), rows);
    if let Some(v) = check_admissible(shape, &t)? {
        return Err(Error::NotSemistandard(format!("recovered tableau is not admissible: {v}")));
    }
    Ok(t)
}

/// All semistandard fillings of `Γ_λ / Γ_μ` with entries `1..=m+n`, by
/// direct backtracking over the boxes (row-major), using only the row and
/// column rules. Independent of the GT conditions, so its count checks
/// [`enumerate_tableaux`](super::enumerate_tableaux).
pub fn enumerate_ssyt(shape: &SkewShape) -> Vec<Ssyt> {
    let outer = shape.outer_diagram();
    let inner = shape.inner_diagram();
    let (m, top) = (shape.m(), shape.m() + shape.n());
    let boxes: Vec<(usize, usize)> = (0..outer.rows().len())
        .flat_map(|row| (inner.row(row)..outer.row(row)).map(move |col| (row, col)))
        .collect();
    let mut grid: Vec<Vec<usize>> = (0..outer.rows().len()).map(|row| vec![0; outer.row(row)]).collect();
    let mut out = Vec::new();
    fn go(
        idx: usize,
        boxes: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        inner: &Partition,
        m: usize,
        top: usize,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        let Some(&(row, col)) = boxes.get(idx) else {
            out.push(grid.clone());
            return;
        };
        for x in 1..=top {
            if col > inner.row(row) {
                let left = grid[row][col - 1];
                if x < left || (left > m && x == left) {
                    continue;
                }
            }
            if row > 0 && col >= inner.row(row - 1) {
                let above = grid[row - 1][col];
                if x < above || (above <= m && x == above) {
                    continue;
                }
            }
            grid[row][col] = x;
            go(idx + 1, boxes, grid, inner, m, top, out);
        }
        grid[row][col] = 0;
    }
    go(0, &boxes, &mut grid, &inner, m, top, &mut out);
    out.into_iter()
        .map(|g| Ssyt {
            outer: outer.clone(),
            inner: inner.clone(),
            filling: g.iter().enumerate().map(|(row, r)| r[inner.row(row)..].to_vec()).collect(),
        })
        .collect()
}
