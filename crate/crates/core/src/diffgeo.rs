//! Formal Jacobians, minors and ranks: the computational side of Serre's
//! reducedness criterion.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::ideal::{Budget, Ideal, IdealError};
use crate::poly::{PolyError, Polynomial, Rational, Ring};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiffGeoError {
    #[error("empty polynomial list")]
    Empty,
    #[error("matrix needs {expected} entries, got {got}")]
    Shape { expected: usize, got: usize },
    #[error("minor size {r} out of range 1..={max}")]
    MinorSize { r: usize, max: usize },
    #[error("the variety is empty")]
    EmptyVariety,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// Row-major matrix of polynomials over a common ring.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(ring: &Ring, rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<PolyMatrix, DiffGeoError> {
        if entries.len() != rows * cols {
            return Err(DiffGeoError::Shape {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        if entries.iter().any(|e| e.ring() != ring) {
            return Err(PolyError::RingMismatch.into());
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Polynomial] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Vec<Vec<Rational>>, PolyError> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|e| e.eval(point)).collect())
            .collect()
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let entries = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        PolyMatrix {
            ring: self.ring.clone(),
            rows: rows.len(),
            cols: cols.len(),
            entries,
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination with exact
    /// polynomial division. Panics on non-square input.
    pub fn determinant(&self) -> Polynomial {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Polynomial::one(&self.ring);
        }
        let mut a: Vec<Vec<Polynomial>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut negate = false;
        let mut prev = Polynomial::one(&self.ring);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return Polynomial::zero(&self.ring),
                }
            }
            for r in k + 1..n {
                for c in k + 1..n {
                    let num = &(&a[r][c] * &a[k][k]) - &(&a[r][k] * &a[k][c]);
                    a[r][c] = num.exact_div(&prev).expect("Bareiss division is exact");
                }
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        if negate {
            -det
        } else {
            det
        }
    }
}

/// `|fs| × n` matrix of first partials; row `i` is the gradient of `fs[i]`.
pub fn jacobian(fs: &[Polynomial]) -> Result<PolyMatrix, DiffGeoError> {
    let ring = fs.first().ok_or(DiffGeoError::Empty)?.ring().clone();
    if fs.iter().any(|f| f.ring() != &ring) {
        return Err(PolyError::RingMismatch.into());
    }
    let n = ring.arity();
    let entries = fs
        .iter()
        .flat_map(|f| (0..n).map(move |j| f.derivative_index(j)))
        .collect();
    PolyMatrix::new(&ring, fs.len(), n, entries)
}

/// Exact rank of the matrix evaluated at `point`.
pub fn rank_at(m: &PolyMatrix, point: &[Rational]) -> Result<usize, PolyError> {
    if point.len() != m.ring.arity() {
        return Err(PolyError::ArityMismatch {
            expected: m.ring.arity(),
            got: point.len(),
        });
    }
    Ok(rational_rank(&m.evaluate(point)?))
}

/// Rank of a rational matrix by fraction-free Gaussian elimination over the
/// integers (rows are cleared of denominators first).
pub fn rational_rank(rows: &[Vec<Rational>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..a.len() {
            for c in col + 1..cols {
                let num = &a[r][c] * &a[rank][col] - &a[r][col] * &a[rank][c];
                a[r][c] = num / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    rank
}

/// Increasing `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// An `r × r` minor with its row and column index sets.
#[derive(Clone, Debug, PartialEq)]
pub struct Minor {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub value: Polynomial,
}

/// All `r × r` minors, enumerated lexicographically by row set, then column
/// set. Zero minors are included.
pub fn minors(m: &PolyMatrix, r: usize) -> Result<Vec<Minor>, DiffGeoError> {
    let max = m.rows.min(m.cols);
    if r == 0 || r > max {
        return Err(DiffGeoError::MinorSize { r, max });
    }
    let col_sets = combinations(m.cols, r);
    let mut out = Vec::new();
    for rows in combinations(m.rows, r) {
        for cols in &col_sets {
            let value = m.submatrix(&rows, cols).determinant();
            out.push(Minor {
                rows: rows.clone(),
                cols: cols.clone(),
                value,
            });
        }
    }
    Ok(out)
}

/// The ideal generated by all `r × r` minors.
pub fn minors_ideal(m: &PolyMatrix, r: usize) -> Result<Ideal, DiffGeoError> {
    let gens = minors(m, r)?.into_iter().map(|mi| mi.value).collect();
    Ok(Ideal::new(&m.ring, gens)?)
}

/// Outcome of [`rank_on_variety`], including every minor tested.
#[derive(Clone, Debug)]
pub struct VarietyRank {
    pub rank: usize,
    /// Minors of size `rank + 1` found to vanish on the variety.
    pub vanishing: Vec<Minor>,
    /// A `rank × rank` minor that does not vanish on the variety.
    pub nonvanishing: Option<Minor>,
}

/// The largest `r` such that some `r × r` minor of the Jacobian of `fs` is not
/// in `√Y`; `0` when every entry vanishes on `Y`.
pub fn rank_on_variety(fs: &[Polynomial], y: &Ideal, budget: Budget) -> Result<VarietyRank, DiffGeoError> {
    if !y.is_proper(budget)? {
        return Err(DiffGeoError::EmptyVariety);
    }
    let jac = jacobian(fs)?;
    if jac.ring() != y.ring() {
        return Err(PolyError::RingMismatch.into());
    }
    let max = jac.rows.min(jac.cols);
    let mut vanishing = Vec::new();
    for r in (1..=max).rev() {
        let mut level = Vec::new();
        for minor in minors(&jac, r)? {
            if !y.rad_member(&minor.value, budget)? {
                return Ok(VarietyRank {
                    rank: r,
                    vanishing,
                    nonvanishing: Some(minor),
                });
            }
            level.push(minor);
        }
        vanishing = level;
    }
    Ok(VarietyRank {
        rank: 0,
        vanishing,
        nonvanishing: None,
    })
}
