//! Exact rational matrices and canonical subspaces.
//!
//! Everything downstream (forms, group actions, homology, certificates)
//! runs on [`RationalMatrix`] and [`Subspace`]. Vectors are rows and a
//! bilinear form `B` evaluates as `v · B · wᵀ`. Subspaces are stored in
//! reduced row-echelon form, so set equality is structural equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Exact rational scalar. `num_rational` keeps values reduced with a
/// positive denominator, which is exactly the entry invariant we need.
pub type Rat = BigRational;

/// Shorthand for small rational constants.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for small integer constants.
pub fn rint(num: i64) -> Rat {
    Rat::from_integer(BigInt::from(num))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {context} ({left} vs {right})")]
    DimensionMismatch {
        context: &'static str,
        left: usize,
        right: usize,
    },
    #[error("matrix is singular")]
    Singular,
    #[error("subspace is not contained in the other operand")]
    NotContained,
}

/// Dense matrix of exact rationals, row-major. `0×n` and `n×0` are legal.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RationalMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Integer-entry convenience, mostly for tests and fixed constants.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rint(x)).collect())
                .collect(),
        )
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Rat> {
        self.row(i).to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| -self[(i, j)].clone())
    }

    pub fn scale(&self, s: &Rat) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| s * &self[(i, j)])
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &other[(i, j)])
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &other[(i, j)])
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "matrix product shape {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    /// `v · M` for a row vector `v`.
    pub fn act_on_row(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![Rat::zero(); self.cols];
        for (k, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                let b = &self[(k, j)];
                if !b.is_zero() {
                    out[j] += a * b;
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Rat {
        assert!(self.is_square());
        (0..self.rows).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        RationalMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn block_diag(blocks: &[&Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn submatrix(&self, row_range: std::ops::Range<usize>, col_range: std::ops::Range<usize>) -> Self {
        Self::from_fn(row_range.len(), col_range.len(), |i, j| {
            self[(row_range.start + i, col_range.start + j)].clone()
        })
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self[(i, j)] == -self[(j, i)].clone()))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i..self.cols).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Reduced row-echelon form together with the pivot column indices.
    ///
    /// The RREF is unique, so it doubles as the canonical representative
    /// of the row space.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = {
                let piv = m[(r, c)].clone();
                Rat::one() / piv
            };
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let factor = m[(i, c)].clone();
                    for j in c..m.cols {
                        let v = &m[(i, j)] - &factor * &m[(r, j)];
                        m[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Right kernel `{v : M · vᵀ = 0}`, returned canonically.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let mut free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.sort_unstable();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Rat::zero(); self.cols];
            v[f] = Rat::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[(row, f)].clone();
            }
            basis.push(v);
        }
        Subspace::from_rows(self.cols, basis)
    }

    /// Inverse via Gauss-Jordan on the augmented matrix.
    pub fn inverse(&self) -> Result<Self, LinalgError> {
        assert!(self.is_square());
        let n = self.rows;
        let (red, pivots) = self.hstack(&Self::identity(n)).rref();
        if pivots.len() < n || pivots[..n] != (0..n).collect::<Vec<_>>()[..] {
            return Err(LinalgError::Singular);
        }
        Ok(red.submatrix(0..n, n..2 * n))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Largest absolute numerator/denominator over all entries; a cheap
    /// size measure used by search heuristics and reports.
    pub fn height(&self) -> BigInt {
        let mut h = BigInt::from(0);
        for x in &self.data {
            let n = x.numer().abs();
            let d = x.denom().abs();
            if n > h {
                h = n;
            }
            if d > h {
                h = d;
            }
        }
        h
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Linear subspace of `Q^n`, stored as an RREF basis with zero rows
/// dropped. Construction canonicalizes eagerly, so two values are equal
/// as sets iff they are equal as structs.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: RationalMatrix,
}

impl Subspace {
    pub fn from_rows(ambient: usize, rows: Vec<Vec<Rat>>) -> Self {
        for r in &rows {
            assert_eq!(r.len(), ambient, "row length != ambient dimension");
        }
        let m = RationalMatrix::from_rows(rows);
        Self::from_matrix_rows(ambient, &m)
    }

    /// Row space of `m`, canonicalized.
    pub fn from_matrix_rows(ambient: usize, m: &RationalMatrix) -> Self {
        if m.rows() == 0 {
            return Self::zero(ambient);
        }
        assert_eq!(m.cols(), ambient);
        let (r, pivots) = m.rref();
        let basis = r.submatrix(0..pivots.len(), 0..ambient);
        Subspace { ambient, basis }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: RationalMatrix::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: RationalMatrix::identity(ambient),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// Canonical RREF basis; rows are the basis vectors.
    pub fn basis(&self) -> &RationalMatrix {
        &self.basis
    }

    fn check_ambient(&self, other: &Subspace, context: &'static str) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch {
                context,
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    /// Express `v` in the RREF basis. `None` when `v` is outside.
    pub fn coordinates_of(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(v.len(), self.ambient);
        let mut rem = v.to_vec();
        let mut coords = Vec::with_capacity(self.dim());
        for i in 0..self.dim() {
            let pivot = self
                .basis
                .row(i)
                .iter()
                .position(|x| !x.is_zero())
                .expect("canonical basis has no zero rows");
            let c = rem[pivot].clone();
            if !c.is_zero() {
                for j in 0..self.ambient {
                    let v = &rem[j] - &c * &self.basis[(i, j)];
                    rem[j] = v;
                }
            }
            coords.push(c);
        }
        if rem.iter().all(|x| x.is_zero()) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains_vector(&self, v: &[Rat]) -> bool {
        self.coordinates_of(v).is_some()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient
            && (0..other.dim()).all(|i| self.contains_vector(other.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other, "subspace sum")?;
        Ok(Self::from_matrix_rows(
            self.ambient,
            &self.basis.vstack(&other.basis),
        ))
    }

    /// Intersection via the left kernel of the stacked basis: a row
    /// combination `x·A = y·B` is exactly a kernel vector of
    /// `[A; -B]ᵀ`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other, "subspace intersection")?;
        let a = &self.basis;
        let b = &other.basis;
        if a.rows() == 0 || b.rows() == 0 {
            return Ok(Subspace::zero(self.ambient));
        }
        let stacked = a.vstack(&b.neg());
        let left_kernel = stacked.transpose().kernel();
        let mut rows = Vec::new();
        for i in 0..left_kernel.dim() {
            let xy = left_kernel.basis().row(i);
            let x = &xy[..a.rows()];
            rows.push(a.act_on_row(x));
        }
        Ok(Subspace::from_rows(self.ambient, rows))
    }

    /// Image of the row space under `v ↦ v · m`.
    pub fn apply(&self, m: &RationalMatrix) -> Subspace {
        assert_eq!(m.rows(), self.ambient);
        Subspace::from_matrix_rows(m.cols(), &self.basis.mul(m))
    }

    /// Direct-sum embedding helpers: pad basis rows with zero blocks.
    pub fn embed(&self, total: usize, offset: usize) -> Subspace {
        assert!(offset + self.ambient <= total);
        let rows = (0..self.dim())
            .map(|i| {
                let mut v = vec![Rat::zero(); total];
                v[offset..offset + self.ambient].clone_from_slice(self.basis.row(i));
                v
            })
            .collect();
        Subspace::from_rows(total, rows)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} in Q^{}) {:?}",
            self.dim(),
            self.ambient,
            self.basis
        )
    }
}

/// Result of `subspace_ops`: sum, intersection, containment flag and,
/// when `b ⊆ a`, a surjection from `a` onto coordinates with kernel `b`.
pub struct SubspacePair {
    pub sum: Subspace,
    pub intersection: Subspace,
    pub b_contained_in_a: bool,
    pub quotient_map: Option<Subquotient>,
}

pub fn subspace_ops(a: &Subspace, b: &Subspace) -> Result<SubspacePair, LinalgError> {
    let sum = a.sum(b)?;
    let intersection = a.intersect(b)?;
    let contained = a.contains(b);
    let quotient_map = if contained {
        Some(subquotient(a, b)?)
    } else {
        None
    };
    Ok(SubspacePair {
        sum,
        intersection,
        b_contained_in_a: contained,
        quotient_map,
    })
}

/// Coordinates for a quotient `Z/B` of nested subspaces `B ⊆ Z ⊆ Q^n`.
///
/// `section` (k×n) lifts quotient coordinates to representative vectors in
/// `Z`; `projection` (n×k) maps `v ∈ Z` to its class: `v · projection`.
/// The identities `section · projection = I` and `B · projection = 0`
/// hold by construction, and classes of `Z`'s vectors cover `Q^k`.
#[derive(Clone, Debug)]
pub struct Subquotient {
    pub section: RationalMatrix,
    pub projection: RationalMatrix,
}

impl Subquotient {
    pub fn dim(&self) -> usize {
        self.section.rows()
    }
}

pub fn subquotient(z: &Subspace, b: &Subspace) -> Result<Subquotient, LinalgError> {
    if z.ambient_dim() != b.ambient_dim() {
        return Err(LinalgError::DimensionMismatch {
            context: "subquotient",
            left: z.ambient_dim(),
            right: b.ambient_dim(),
        });
    }
    if !z.contains(b) {
        return Err(LinalgError::NotContained);
    }
    let n = z.ambient_dim();
    let k = z.dim() - b.dim();

    // Greedy complement of B inside Z from Z's canonical basis rows.
    let mut complement_rows: Vec<Vec<Rat>> = Vec::with_capacity(k);
    let mut span = b.clone();
    for i in 0..z.dim() {
        if complement_rows.len() == k {
            break;
        }
        let row = z.basis().row(i).to_vec();
        if !span.contains_vector(&row) {
            span = span.sum(&Subspace::from_rows(n, vec![row.clone()]))?;
            complement_rows.push(row);
        }
    }
    debug_assert_eq!(complement_rows.len(), k);
    let section = if complement_rows.is_empty() {
        RationalMatrix::zeros(0, n)
    } else {
        RationalMatrix::from_rows(complement_rows.clone())
    };

    // Complete (B-basis, section rows) to a basis of Q^n with standard
    // vectors, invert, and read off the quotient coordinates.
    let mut full_rows: Vec<Vec<Rat>> = Vec::with_capacity(n);
    for i in 0..b.dim() {
        full_rows.push(b.basis().row(i).to_vec());
    }
    full_rows.extend(complement_rows);
    let mut span = z.clone();
    for e in 0..n {
        if full_rows.len() == n {
            break;
        }
        let mut v = vec![Rat::zero(); n];
        v[e] = Rat::one();
        if !span.contains_vector(&v) {
            span = span.sum(&Subspace::from_rows(n, vec![v.clone()]))?;
            full_rows.push(v);
        }
    }
    let t = RationalMatrix::from_rows(full_rows);
    let t_inv = t.inverse().expect("completed basis is invertible");
    let projection = t_inv.submatrix(0..n, b.dim()..b.dim() + k);
    Ok(Subquotient {
        section,
        projection,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rref_identity() {
        let m = RationalMatrix::identity(3);
        let (r, pivots) = m.rref();
        assert_eq!(r, m);
        assert_eq!(pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_rank_one() {
        let m = RationalMatrix::from_i64(&[&[2, 4], &[1, 2]]);
        let (r, pivots) = m.rref();
        assert_eq!(r, RationalMatrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(pivots, vec![0]);
    }

    #[test]
    fn rref_zero() {
        let m = RationalMatrix::zeros(2, 2);
        let (r, pivots) = m.rref();
        assert_eq!(r, m);
        assert!(pivots.is_empty());
    }

    #[test]
    fn kernel_of_row() {
        let m = RationalMatrix::from_i64(&[&[1, 2]]);
        let k = m.kernel();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis().row(0), &[rint(1), rat(-1, 2)][..]);
    }

    #[test]
    fn kernel_identity_and_zero() {
        assert_eq!(RationalMatrix::identity(4).kernel().dim(), 0);
        let full = RationalMatrix::zeros(2, 2).kernel();
        assert_eq!(full, Subspace::full(2));
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let m = RationalMatrix::from_i64(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        let k = m.kernel();
        assert_eq!(m.rank() + k.dim(), 3);
        for i in 0..k.dim() {
            let v = RationalMatrix::from_rows(vec![k.basis().row_vec(i)]);
            assert!(m.mul(&v.transpose()).is_zero());
        }
    }

    #[test]
    fn subspace_ops_examples() {
        let e1 = Subspace::from_rows(2, vec![vec![rint(1), rint(0)]]);
        let e2 = Subspace::from_rows(2, vec![vec![rint(0), rint(1)]]);
        let pair = subspace_ops(&e1, &e2).unwrap();
        assert_eq!(pair.sum, Subspace::full(2));
        assert_eq!(pair.intersection.dim(), 0);
        assert!(!pair.b_contained_in_a);

        let pair = subspace_ops(&e1, &e1).unwrap();
        assert_eq!(pair.sum, e1);
        assert_eq!(pair.intersection, e1);
        assert!(pair.b_contained_in_a);

        let a = Subspace::from_rows(
            3,
            vec![
                vec![rint(1), rint(1), rint(0)],
                vec![rint(0), rint(0), rint(1)],
            ],
        );
        let b = Subspace::from_rows(3, vec![vec![rint(1), rint(1), rint(1)]]);
        let pair = subspace_ops(&a, &b).unwrap();
        assert!(pair.b_contained_in_a);
        assert_eq!(pair.intersection, b);
        let q = pair.quotient_map.unwrap();
        assert_eq!(q.dim(), 1);
        // Kernel of the quotient map restricted to A is exactly B.
        let img_b = b.basis().mul(&q.projection);
        assert!(img_b.is_zero());
        let img_a = a.basis().mul(&q.projection);
        assert_eq!(img_a.rank(), 1);
    }

    #[test]
    fn ambient_mismatch_is_reported() {
        let a = Subspace::full(2);
        let b = Subspace::full(3);
        assert!(matches!(
            subspace_ops(&a, &b),
            Err(LinalgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn inverse_round_trip() {
        let m = RationalMatrix::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), RationalMatrix::identity(2));
        let s = RationalMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(s.inverse(), Err(LinalgError::Singular));
    }

    #[test]
    fn subquotient_identities() {
        let z = Subspace::from_rows(
            4,
            vec![
                vec![rint(1), rint(0), rint(1), rint(0)],
                vec![rint(0), rint(1), rint(0), rint(0)],
                vec![rint(0), rint(0), rint(0), rint(1)],
            ],
        );
        let b = Subspace::from_rows(4, vec![vec![rint(0), rint(1), rint(0), rint(0)]]);
        let q = subquotient(&z, &b).unwrap();
        assert_eq!(q.dim(), 2);
        assert_eq!(
            q.section.mul(&q.projection),
            RationalMatrix::identity(2)
        );
        assert!(b.basis().mul(&q.projection).is_zero());
    }

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-4i64..=4, 1i64..=3).prop_map(|(n, d)| rat(n, d))
    }

    fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = RationalMatrix> {
        proptest::collection::vec(small_rat(), rows * cols).prop_map(move |data| {
            RationalMatrix {
                rows,
                cols,
                data,
            }
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rref_is_idempotent(m in matrix(4, 5)) {
            let (r, pivots) = m.rref();
            let (r2, pivots2) = r.rref();
            prop_assert_eq!(r, r2);
            prop_assert_eq!(pivots, pivots2);
        }

        #[test]
        fn rank_nullity(m in matrix(4, 6)) {
            prop_assert_eq!(m.rank() + m.kernel().dim(), m.cols());
        }

        #[test]
        fn canonical_under_row_operations(m in matrix(3, 5), t in matrix(3, 3)) {
            prop_assume!(t.rank() == 3);
            let a = Subspace::from_matrix_rows(5, &m);
            let b = Subspace::from_matrix_rows(5, &t.mul(&m));
            prop_assert_eq!(a, b);
        }

        #[test]
        fn grassmann_identity(a in matrix(3, 6), b in matrix(3, 6)) {
            let a = Subspace::from_matrix_rows(6, &a);
            let b = Subspace::from_matrix_rows(6, &b);
            let sum = a.sum(&b).unwrap();
            let int = a.intersect(&b).unwrap();
            prop_assert_eq!(sum.dim() + int.dim(), a.dim() + b.dim());
            prop_assert!(a.contains(&int) && b.contains(&int));
            prop_assert!(sum.contains(&a) && sum.contains(&b));
        }
    }
}
