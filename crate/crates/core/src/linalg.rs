//! Exact linear algebra over Q and over Q(k).
//!
//! Matrices here are small or very sparse (adjoint operators, weight-space
//! constraint systems), so rows are kept as ordered sparse maps and reduced
//! incrementally into reduced row echelon form.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::Result;
use crate::rational::{LevelPoly, Q};

pub type SparseRow = BTreeMap<usize, Q>;

/// Incrementally built reduced row echelon form.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    /// pivot column -> row normalized to 1 at the pivot, zero in every other pivot column
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let hits: Vec<usize> = row
            .keys()
            .filter(|c| self.pivots.contains_key(c))
            .copied()
            .collect();
        for c in hits {
            let Some(f) = row.get(&c).cloned() else { continue };
            for (col, v) in &self.pivots[&c] {
                let entry = row.entry(*col).or_insert_with(Q::zero);
                *entry -= &f * v;
                if entry.is_zero() {
                    row.remove(col);
                }
            }
        }
        row
    }

    /// Adds a row; returns true if it increased the rank.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row = self.reduce(row);
        let Some((&pc, pv)) = row.iter().next() else {
            return false;
        };
        let inv = pv.recip();
        let row: SparseRow = row.into_iter().map(|(c, v)| (c, v * &inv)).collect();
        for other in self.pivots.values_mut() {
            if let Some(f) = other.get(&pc).cloned() {
                for (col, v) in &row {
                    let entry = other.entry(*col).or_insert_with(Q::zero);
                    *entry -= &f * v;
                    if entry.is_zero() {
                        other.remove(col);
                    }
                }
            }
        }
        self.pivots.insert(pc, row);
        true
    }

    /// Basis of the null space in `ncols` unknowns, one vector per free column.
    pub fn nullspace(&self, ncols: usize) -> Vec<Vec<Q>> {
        let mut out = Vec::new();
        for free in 0..ncols {
            if self.pivots.contains_key(&free) {
                continue;
            }
            let mut v = vec![Q::zero(); ncols];
            v[free] = Q::one();
            for (pc, row) in &self.pivots {
                if let Some(x) = row.get(&free) {
                    v[*pc] = -x.clone();
                }
            }
            out.push(v);
        }
        out
    }
}

pub fn rank(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

pub fn nullspace(rows: impl IntoIterator<Item = SparseRow>, ncols: usize) -> Vec<Vec<Q>> {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.nullspace(ncols)
}

/// Result of eliminating a matrix with entries in Q[k] over the field Q(k).
#[derive(Clone, Debug)]
pub struct PolyKernel {
    pub generic_rank: usize,
    /// Kernel basis over Q(k), scaled to polynomial entries.
    pub generic_kernel: Vec<Vec<LevelPoly>>,
    /// Rational values of k at which the rank is strictly smaller than the generic rank.
    pub jumps: Vec<Q>,
}

fn row_content(row: &[LevelPoly]) -> LevelPoly {
    row.iter()
        .filter(|p| !p.is_zero())
        .fold(LevelPoly::zero(), |g, p| g.gcd(p))
}

/// Fraction-free elimination of a dense polynomial matrix. Every level at which
/// the rank can drop is among the rational roots of the pivots, multipliers and
/// removed row contents; each candidate is confirmed by exact substitution.
pub fn poly_kernel(matrix: &[Vec<LevelPoly>], ncols: usize) -> Result<PolyKernel> {
    let mut rows: Vec<Vec<LevelPoly>> = matrix.to_vec();
    let mut suspects: Vec<LevelPoly> = Vec::new();
    let mut pivot_cols: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut next_row = 0;
    for col in 0..ncols {
        let Some(p) = (next_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, p);
        let piv = rows[next_row][col].clone();
        suspects.push(piv.clone());
        for r in 0..rows.len() {
            if r == next_row || rows[r][col].is_zero() {
                continue;
            }
            let a = rows[r][col].clone();
            let new: Vec<LevelPoly> = rows[r]
                .iter()
                .zip(&rows[next_row])
                .map(|(x, y)| &(&piv * x) - &(&a * y))
                .collect();
            let g = row_content(&new);
            let new = if g.is_zero() || g.degree() == Some(0) {
                new
            } else {
                suspects.push(g.clone());
                new.iter().map(|x| x.exact_div(&g)).collect()
            };
            rows[r] = new;
        }
        pivot_cols.push((next_row, col));
        next_row += 1;
    }
    let generic_rank = pivot_cols.len();
    for (r, c) in &pivot_cols {
        suspects.push(rows[*r][*c].clone());
    }

    // kernel over Q(k): x_free = prod(pivots), x_pc = -row[free] * prod(other pivots)
    let mut generic_kernel = Vec::new();
    let pivot_set: Vec<usize> = pivot_cols.iter().map(|(_, c)| *c).collect();
    for free in (0..ncols).filter(|c| !pivot_set.contains(c)) {
        let mut v = vec![LevelPoly::zero(); ncols];
        let all = pivot_cols
            .iter()
            .fold(LevelPoly::constant(Q::one()), |acc, (r, c)| &acc * &rows[*r][*c]);
        v[free] = all;
        for (i, (r, c)) in pivot_cols.iter().enumerate() {
            let others = pivot_cols
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .fold(LevelPoly::constant(Q::one()), |acc, (_, (rr, cc))| {
                    &acc * &rows[*rr][*cc]
                });
            v[*c] = -&(&rows[*r][free] * &others);
        }
        let g = row_content(&v);
        if !g.is_zero() {
            v = v.iter().map(|x| x.exact_div(&g)).collect();
        }
        generic_kernel.push(v);
    }

    let mut candidates: Vec<Q> = Vec::new();
    for s in &suspects {
        if s.degree().unwrap_or(0) == 0 {
            continue;
        }
        for r in s.rational_roots()? {
            if !candidates.contains(&r) {
                candidates.push(r);
            }
        }
    }
    candidates.sort();
    let jumps = candidates
        .into_iter()
        .filter(|k0| {
            let eval_rows = matrix.iter().map(|row| {
                row.iter()
                    .enumerate()
                    .filter_map(|(c, p)| {
                        let v = p.eval(k0);
                        (!v.is_zero()).then_some((c, v))
                    })
                    .collect::<SparseRow>()
            });
            rank(eval_rows) < generic_rank
        })
        .collect();
    Ok(PolyKernel {
        generic_rank,
        generic_kernel,
        jumps,
    })
}

/// Evaluates a polynomial matrix at `k0` and returns its null space over Q.
pub fn nullspace_at(matrix: &[Vec<LevelPoly>], ncols: usize, k0: &Q) -> Vec<Vec<Q>> {
    let rows = matrix.iter().map(|row| {
        row.iter()
            .enumerate()
            .filter_map(|(c, p)| {
                let v = p.eval(k0);
                (!v.is_zero()).then_some((c, v))
            })
            .collect::<SparseRow>()
    });
    nullspace(rows, ncols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};

    fn row(entries: &[(usize, i64)]) -> SparseRow {
        entries.iter().map(|(c, v)| (*c, q(*v))).collect()
    }

    #[test]
    fn rank_and_nullspace() {
        let rows = vec![row(&[(0, 1), (1, 2), (2, 3)]), row(&[(0, 2), (1, 4), (2, 6)]), row(&[(1, 1), (2, 1)])];
        assert_eq!(rank(rows.clone()), 2);
        let ns = nullspace(rows.clone(), 3);
        assert_eq!(ns.len(), 1);
        for r in &rows {
            let dot: Q = r.iter().map(|(c, v)| v * &ns[0][*c]).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn polynomial_kernel_jumps() {
        // [[k+2, 1], [0, 2k-1]] drops rank at k = -2? no: det = (k+2)(2k-1)
        let m = vec![
            vec![LevelPoly::affine(q(1), q(2)), LevelPoly::constant(q(1))],
            vec![LevelPoly::zero(), LevelPoly::affine(q(2), q(-1))],
        ];
        let pk = poly_kernel(&m, 2).unwrap();
        assert_eq!(pk.generic_rank, 2);
        assert_eq!(pk.jumps, vec![q(-2), qf(1, 2)]);
        assert_eq!(nullspace_at(&m, 2, &q(-2)).len(), 1);
    }

    #[test]
    fn polynomial_kernel_generic_deficiency() {
        // columns proportional over Q(k): second = k * first
        let m = vec![
            vec![LevelPoly::constant(q(1)), LevelPoly::k()],
            vec![LevelPoly::affine(q(1), q(1)), &LevelPoly::k() * &LevelPoly::affine(q(1), q(1))],
        ];
        let pk = poly_kernel(&m, 2).unwrap();
        assert_eq!(pk.generic_rank, 1);
        assert_eq!(pk.generic_kernel.len(), 1);
        let v = &pk.generic_kernel[0];
        for r in &m {
            let s = &(&r[0] * &v[0]) + &(&r[1] * &v[1]);
            assert!(s.is_zero());
        }
        assert!(pk.jumps.is_empty());
    }
}
