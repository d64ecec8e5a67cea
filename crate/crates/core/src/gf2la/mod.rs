//! Dense linear algebra over GF(2) and the truncated monomial basis of `R`.
//!
//! Matrices are stored as packed columns: every operator this crate builds
//! is naturally produced column by column (the image of one basis monomial
//! per column), and elimination inserts columns into a pivot table keyed by
//! their highest set bit.

mod basis;
mod bitvec;

pub use basis::BasisIndex;
pub use bitvec::BitVec;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<BitVec>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BitMatrix {
            rows,
            cols,
            columns: vec![BitVec::zeros(rows); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from row-major 0/1 entries.
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            for (j, &bit) in row.iter().enumerate() {
                m.set(i, j, bit & 1 == 1);
            }
        }
        Ok(m)
    }

    pub fn from_columns(rows: usize, columns: Vec<BitVec>) -> Result<Self> {
        if let Some(bad) = columns.iter().find(|c| c.len() != rows) {
            return Err(Error::Dimension(format!(
                "column of length {} in a matrix with {rows} rows",
                bad.len()
            )));
        }
        Ok(BitMatrix {
            rows,
            cols: columns.len(),
            columns,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &BitVec {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[BitVec] {
        &self.columns
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.columns[c].get(r)
    }

    pub fn set(&mut self, r: usize, c: usize, bit: bool) {
        self.columns[c].set(r, bit);
    }

    pub fn mul_vec(&self, v: &BitVec) -> Result<BitVec> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        let mut out = BitVec::zeros(self.rows);
        for j in v.ones() {
            out.xor_assign(&self.columns[j]);
        }
        Ok(out)
    }

    /// Block concatenation `[self | other]`.
    pub fn hconcat(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.rows != other.rows {
            return Err(Error::Dimension(format!(
                "row counts differ: {} vs {}",
                self.rows, other.rows
            )));
        }
        let mut columns = self.columns.clone();
        columns.extend(other.columns.iter().cloned());
        BitMatrix::from_columns(self.rows, columns)
    }

    pub fn rank(&self) -> usize {
        let mut elim = Eliminator::new(self.rows, None);
        self.columns
            .iter()
            .filter(|c| elim.insert((*c).clone(), None).is_none())
            .count()
    }
}

/// Incremental Gaussian elimination on column vectors. Each stored pivot
/// optionally carries the combination of inserted columns that produced it.
pub(crate) struct Eliminator {
    pivot_at: Vec<u32>,
    pivots: Vec<(BitVec, Option<BitVec>)>,
    combo_len: Option<usize>,
}

const NO_PIVOT: u32 = u32::MAX;

impl Eliminator {
    pub(crate) fn new(rows: usize, combo_len: Option<usize>) -> Self {
        Eliminator {
            pivot_at: vec![NO_PIVOT; rows],
            pivots: Vec::new(),
            combo_len,
        }
    }

    fn reduce(&self, v: &mut BitVec, mut combo: Option<&mut BitVec>) {
        while let Some(h) = v.highest_one() {
            let p = self.pivot_at[h];
            if p == NO_PIVOT {
                return;
            }
            let (pv, pc) = &self.pivots[p as usize];
            v.xor_assign(pv);
            if let (Some(c), Some(pc)) = (combo.as_deref_mut(), pc) {
                c.xor_assign(pc);
            }
        }
    }

    /// Inserts `v`; returns the (tracked) combination if `v` was dependent.
    pub(crate) fn insert(
        &mut self,
        mut v: BitVec,
        mut combo: Option<BitVec>,
    ) -> Option<Option<BitVec>> {
        debug_assert_eq!(combo.as_ref().map(BitVec::len), self.combo_len);
        self.reduce(&mut v, combo.as_mut());
        match v.highest_one() {
            None => Some(combo),
            Some(h) => {
                self.pivot_at[h] = self.pivots.len() as u32;
                self.pivots.push((v, combo));
                None
            }
        }
    }

    /// Reduces `v` against the pivots; `Some(combo)` if it lies in the span.
    pub(crate) fn express(&self, v: &BitVec) -> Option<BitVec> {
        let mut v = v.clone();
        let mut combo = BitVec::zeros(self.combo_len.unwrap_or(0));
        self.reduce(&mut v, Some(&mut combo));
        v.is_zero().then_some(combo)
    }

    pub(crate) fn contains(&self, v: &BitVec) -> bool {
        let mut v = v.clone();
        self.reduce(&mut v, None);
        v.is_zero()
    }

    pub(crate) fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub(crate) fn into_basis(self) -> Vec<BitVec> {
        self.pivots.into_iter().map(|(v, _)| v).collect()
    }
}

/// Basis of the right null space `{v : M v = 0}`.
pub fn kernel(m: &BitMatrix) -> Vec<BitVec> {
    let mut elim = Eliminator::new(m.rows, Some(m.cols));
    let mut out = Vec::new();
    for (j, col) in m.columns.iter().enumerate() {
        let unit = BitVec::unit(m.cols, j);
        if let Some(Some(combo)) = elim.insert(col.clone(), Some(unit)) {
            out.push(combo);
        }
    }
    out
}

/// Some `v` with `M v = rhs`, or `None` if the system is inconsistent.
pub fn solve(m: &BitMatrix, rhs: &BitVec) -> Result<Option<BitVec>> {
    if rhs.len() != m.rows {
        return Err(Error::Dimension(format!(
            "right-hand side of length {} against {} rows",
            rhs.len(),
            m.rows
        )));
    }
    let mut elim = Eliminator::new(m.rows, Some(m.cols));
    for (j, col) in m.columns.iter().enumerate() {
        elim.insert(col.clone(), Some(BitVec::unit(m.cols, j)));
    }
    Ok(elim.express(rhs))
}

/// Basis of `col(M1) ∩ col(M2)`, read off the kernel of `[M1 | M2]`.
pub fn image_intersection(m1: &BitMatrix, m2: &BitMatrix) -> Result<Vec<BitVec>> {
    let stacked = m1.hconcat(m2)?;
    let mut elim = Eliminator::new(m1.rows, None);
    for v in kernel(&stacked) {
        let head = v.slice(0, m1.cols);
        let y = m1.mul_vec(&head)?;
        elim.insert(y, None);
    }
    Ok(elim.into_basis())
}

/// An echelon basis of the span of `vectors`, all of length `len`.
pub fn span_basis(len: usize, vectors: &[BitVec]) -> Vec<BitVec> {
    let mut elim = Eliminator::new(len, None);
    for v in vectors {
        elim.insert(v.clone(), None);
    }
    elim.into_basis()
}

pub fn span_rank(len: usize, vectors: &[BitVec]) -> usize {
    span_basis(len, vectors).len()
}

/// Whether two families span the same subspace of `GF(2)^len`.
pub fn same_span(len: usize, a: &[BitVec], b: &[BitVec]) -> bool {
    let mut ea = Eliminator::new(len, None);
    for v in a {
        ea.insert(v.clone(), None);
    }
    let mut eb = Eliminator::new(len, None);
    for v in b {
        eb.insert(v.clone(), None);
    }
    ea.rank() == eb.rank() && b.iter().all(|v| ea.contains(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(bits: &[u8]) -> BitVec {
        BitVec::from_bits(bits)
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel(&BitMatrix::identity(3)).is_empty());
        assert_eq!(kernel(&BitMatrix::zeros(2, 3)).len(), 3);
        let m = BitMatrix::from_rows(&[vec![1, 1], vec![0, 0]]).unwrap();
        assert_eq!(kernel(&m), vec![v(&[1, 1])]);
    }

    #[test]
    fn solve_examples() {
        let id = BitMatrix::identity(3);
        assert_eq!(solve(&id, &v(&[1, 0, 1])).unwrap(), Some(v(&[1, 0, 1])));
        assert_eq!(solve(&BitMatrix::zeros(2, 2), &v(&[0, 1])).unwrap(), None);
        let m = BitMatrix::from_rows(&[vec![1, 1]]).unwrap();
        let sol = solve(&m, &v(&[1])).unwrap().unwrap();
        assert_eq!(m.mul_vec(&sol).unwrap(), v(&[1]));
        assert!(matches!(solve(&m, &v(&[1, 0])), Err(Error::Dimension(_))));
    }

    #[test]
    fn image_intersection_examples() {
        let id = BitMatrix::identity(2);
        assert_eq!(image_intersection(&id, &id).unwrap().len(), 2);
        let e1 = BitMatrix::from_columns(2, vec![v(&[1, 0])]).unwrap();
        let e2 = BitMatrix::from_columns(2, vec![v(&[0, 1])]).unwrap();
        assert!(image_intersection(&e1, &e2).unwrap().is_empty());
        let m1 = BitMatrix::from_columns(2, vec![v(&[1, 0]), v(&[1, 1])]).unwrap();
        assert_eq!(image_intersection(&m1, &e2).unwrap(), vec![v(&[0, 1])]);
        assert!(image_intersection(&m1, &BitMatrix::zeros(3, 1)).is_err());
    }

    #[test]
    fn same_span_ignores_presentation() {
        let a = [v(&[1, 1, 0]), v(&[0, 1, 1])];
        let b = [v(&[1, 0, 1]), v(&[1, 1, 0])];
        assert!(same_span(3, &a, &b));
        assert!(!same_span(3, &a, &[v(&[1, 0, 0])]));
    }
}
