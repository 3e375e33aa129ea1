//! Bit-packed linear algebra over GF(2) and mod-2 quadratic spaces.
//!
//! Vectors pack 64 coordinates per word and all arithmetic is word-parallel.
//! A [`QuadSpace`] couples a symmetric, zero-diagonal Gram matrix (the
//! polarized pairing ⟨·,·⟩) with the diagonal of values q(eᵢ); the quadratic
//! form extends to the whole space by
//!
//! ```text
//! q(v) = Σ_{i∈supp v} qᵢ  +  Σ_{i<j∈supp v} Gᵢⱼ ,
//! ```
//!
//! equivalently by the polarization identity q(u+v) = q(u) + q(v) + ⟨u,v⟩.
//!
//! The Arf invariant is computed along two independent routes — exhaustive
//! zero counting (dimension ≤ 16) and reduction to a symplectic basis — and
//! the two must agree wherever both run.

use std::fmt;

use crate::{Error, Result};

const WORD_BITS: usize = 64;

#[inline]
fn words_for(dim: usize) -> usize {
    dim.div_ceil(WORD_BITS)
}

/// Bit-packed vector over GF(2). Coordinates are 0-based. Bits at positions
/// ≥ `dim` are kept zero, so derived equality and hashing are coordinatewise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Vec {
    dim: usize,
    words: Vec<u64>,
}

impl F2Vec {
    pub fn zeros(dim: usize) -> Self {
        F2Vec {
            dim,
            words: vec![0; words_for(dim)],
        }
    }

    /// Standard basis vector e_i.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.set(i, true);
        v
    }

    /// Indicator vector of `support`.
    pub fn from_support(dim: usize, support: &[usize]) -> Self {
        let mut v = Self::zeros(dim);
        for &i in support {
            v.set(i, true);
        }
        v
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.dim, "coordinate {i} out of range for dimension {}", self.dim);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.dim, "coordinate {i} out of range for dimension {}", self.dim);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    /// self += other; GF(2) addition is XOR.
    pub fn xor_in(&mut self, other: &F2Vec) {
        assert_eq!(self.dim, other.dim, "dimension mismatch in vector sum");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Parity of the common support (the standard dot product).
    pub fn dot(&self, other: &F2Vec) -> bool {
        assert_eq!(self.dim, other.dim, "dimension mismatch in dot product");
        let mut acc = 0u32;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= (a & b).count_ones();
        }
        acc & 1 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of the set bits, ascending.
    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for (w, &bits) in self.words.iter().enumerate() {
            let mut b = bits;
            while b != 0 {
                out.push(w * WORD_BITS + b.trailing_zeros() as usize);
                b &= b - 1;
            }
        }
        out
    }

    pub fn first_set(&self) -> Option<usize> {
        for (w, &bits) in self.words.iter().enumerate() {
            if bits != 0 {
                return Some(w * WORD_BITS + bits.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn last_set(&self) -> Option<usize> {
        for (w, &bits) in self.words.iter().enumerate().rev() {
            if bits != 0 {
                return Some(w * WORD_BITS + (WORD_BITS - 1 - bits.leading_zeros() as usize));
            }
        }
        None
    }

    /// Dense encoding for orbit enumeration; requires dim ≤ 32.
    pub fn to_u32(&self) -> u32 {
        assert!(self.dim <= 32, "to_u32 needs dim ≤ 32, got {}", self.dim);
        self.words.first().copied().unwrap_or(0) as u32
    }

    pub fn from_u32(dim: usize, bits: u32) -> Self {
        assert!(dim <= 32, "from_u32 needs dim ≤ 32, got {dim}");
        assert!(dim == 32 || bits >> dim == 0, "bits set beyond dimension {dim}");
        let mut v = Self::zeros(dim);
        if dim > 0 {
            v.words[0] = bits as u64;
        }
        v
    }
}

impl fmt::Display for F2Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

impl fmt::Debug for F2Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Vec({self})")
    }
}

/// Dense GF(2) matrix stored as bit-packed rows. Acts on column vectors:
/// `mul_vec` computes x ↦ Mx.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Mat {
    nrows: usize,
    ncols: usize,
    data: Vec<F2Vec>,
}

impl F2Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        F2Mat {
            nrows: rows,
            ncols: cols,
            data: vec![F2Vec::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: Vec<F2Vec>) -> Self {
        assert!(!rows.is_empty(), "from_rows needs at least one row");
        let cols = rows[0].dim();
        assert!(rows.iter().all(|r| r.dim() == cols), "rows of unequal dimension");
        F2Mat {
            nrows: rows.len(),
            ncols: cols,
            data: rows,
        }
    }

    /// Parse rows of '0'/'1' characters; fixture convenience.
    pub fn parse(rows: &[&str]) -> Self {
        assert!(!rows.is_empty(), "parse needs at least one row");
        let cols = rows[0].len();
        let mut data = Vec::with_capacity(rows.len());
        for r in rows {
            assert_eq!(r.len(), cols, "rows of unequal length");
            let mut v = F2Vec::zeros(cols);
            for (j, ch) in r.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => v.set(j, true),
                    _ => panic!("matrix rows must contain only '0'/'1', got {ch:?}"),
                }
            }
            data.push(v);
        }
        F2Mat {
            nrows: rows.len(),
            ncols: cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.nrows
    }

    pub fn cols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.nrows, "row {i} out of range for {} rows", self.nrows);
        self.data[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.nrows, "row {i} out of range for {} rows", self.nrows);
        self.data[i].set(j, value);
    }

    pub fn row(&self, i: usize) -> &F2Vec {
        &self.data[i]
    }

    pub fn row_vectors(&self) -> &[F2Vec] {
        &self.data
    }

    /// Matrix product; row i of AB is the XOR of the B-rows selected by row i of A.
    pub fn mul(&self, rhs: &F2Mat) -> F2Mat {
        assert_eq!(self.ncols, rhs.nrows, "dimension mismatch in matrix product");
        let mut out = F2Mat::zeros(self.nrows, rhs.ncols);
        for i in 0..self.nrows {
            let acc = &mut out.data[i];
            for (w, &bits) in self.data[i].words.iter().enumerate() {
                let mut b = bits;
                while b != 0 {
                    let k = w * WORD_BITS + b.trailing_zeros() as usize;
                    acc.xor_in(&rhs.data[k]);
                    b &= b - 1;
                }
            }
        }
        out
    }

    /// x ↦ Mx.
    pub fn mul_vec(&self, v: &F2Vec) -> F2Vec {
        assert_eq!(self.ncols, v.dim(), "dimension mismatch in matrix-vector product");
        let mut out = F2Vec::zeros(self.nrows);
        for i in 0..self.nrows {
            if self.data[i].dot(v) {
                out.set(i, true);
            }
        }
        out
    }

    pub fn transpose(&self) -> F2Mat {
        let mut out = F2Mat::zeros(self.ncols, self.nrows);
        for i in 0..self.nrows {
            for (w, &bits) in self.data[i].words.iter().enumerate() {
                let mut b = bits;
                while b != 0 {
                    let j = w * WORD_BITS + b.trailing_zeros() as usize;
                    out.set(j, i, true);
                    b &= b - 1;
                }
            }
        }
        out
    }

    /// Entrywise sum (XOR).
    pub fn xor(&self, other: &F2Mat) -> F2Mat {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols), "dimension mismatch in matrix sum");
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            a.xor_in(b);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.nrows == self.ncols && *self == Self::identity(self.nrows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F2Vec::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.nrows == self.ncols && *self == self.transpose()
    }

    pub fn diag(&self) -> F2Vec {
        let n = self.nrows.min(self.ncols);
        let mut d = F2Vec::zeros(n);
        for i in 0..n {
            if self.get(i, i) {
                d.set(i, true);
            }
        }
        d
    }

    /// Reduced row-echelon form over GF(2).
    pub fn rref(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.ncols {
            if r == m.nrows {
                break;
            }
            let Some(i) = (r..m.nrows).find(|&i| m.data[i].get(c)) else {
                continue;
            };
            m.data.swap(r, i);
            let pivot_row = m.data[r].clone();
            for (j, row) in m.data.iter_mut().enumerate() {
                if j != r && row.get(c) {
                    row.xor_in(&pivot_row);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { mat: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of {x : Mx = 0}, one vector per free column of the RREF, in
    /// ascending free-column order.
    pub fn kernel_basis(&self) -> Vec<F2Vec> {
        let ech = self.rref();
        let mut basis = Vec::with_capacity(self.ncols - ech.pivots.len());
        for f in 0..self.ncols {
            if ech.pivots.binary_search(&f).is_ok() {
                continue;
            }
            let mut v = F2Vec::zeros(self.ncols);
            v.set(f, true);
            for (r, &p) in ech.pivots.iter().enumerate() {
                if ech.mat.get(r, f) {
                    v.set(p, true);
                }
            }
            basis.push(v);
        }
        basis
    }

    pub fn inverse(&self) -> Option<F2Mat> {
        if self.nrows != self.ncols {
            return None;
        }
        let n = self.nrows;
        // row-reduce [A | I]; A invertible iff the left half reaches I
        let mut aug = F2Mat::zeros(n, 2 * n);
        for i in 0..n {
            for j in self.data[i].support() {
                aug.set(i, j, true);
            }
            aug.set(i, n + i, true);
        }
        let ech = aug.rref();
        if ech.pivots.len() < n || ech.pivots[n - 1] >= n {
            return None;
        }
        let mut inv = F2Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                if ech.mat.get(i, n + j) {
                    inv.set(i, j, true);
                }
            }
        }
        Some(inv)
    }
}

impl fmt::Display for F2Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.data.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{row}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for F2Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Mat[{}x{}]", self.nrows, self.ncols)?;
        write!(f, "{self}")
    }
}

/// Reduced row-echelon form: `pivots[r]` is the pivot column of row `r`;
/// rows at index ≥ `pivots.len()` are zero.
pub struct Echelon {
    pub mat: F2Mat,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Arf invariant as a sign: `Plus` means q vanishes on 2^{2n-1} + 2^{n-1}
/// vectors, `Minus` on 2^{2n-1} − 2^{n-1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arf {
    Plus,
    Minus,
}

impl Arf {
    pub fn sign(self) -> i64 {
        match self {
            Arf::Plus => 1,
            Arf::Minus => -1,
        }
    }
}

impl fmt::Display for Arf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Arf::Plus => "+1",
            Arf::Minus => "-1",
        })
    }
}

/// Mod-2 quadratic space: an alternating pairing (symmetric Gram matrix with
/// zero diagonal) refined by the values q(eᵢ).
#[derive(Clone, PartialEq, Eq)]
pub struct QuadSpace {
    gram: F2Mat,
    qdiag: F2Vec,
}

impl fmt::Debug for QuadSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QuadSpace(dim {}, qdiag {})", self.dim(), self.qdiag)?;
        write!(f, "{}", self.gram)
    }
}

/// Parity of |{j > i : rowⱼ = vⱼ = 1}|; the strictly-upper-triangular slice
/// of a Gram row used by `QuadSpace::q`.
fn parity_above(row: &F2Vec, v: &F2Vec, i: usize) -> bool {
    let w0 = i / WORD_BITS;
    let shift = i % WORD_BITS;
    let mut acc = 0u32;
    for w in w0..row.words.len() {
        let mut m = row.words[w] & v.words[w];
        if w == w0 {
            m &= if shift + 1 == WORD_BITS { 0 } else { !0u64 << (shift + 1) };
        }
        acc ^= m.count_ones();
    }
    acc & 1 == 1
}

impl QuadSpace {
    pub fn new(gram: F2Mat, qdiag: F2Vec) -> Result<Self> {
        if gram.rows() != gram.cols() {
            return Err(Error::Form("Gram matrix must be square"));
        }
        if !gram.is_symmetric() {
            return Err(Error::Form("Gram matrix must be symmetric"));
        }
        if !gram.diag().is_zero() {
            return Err(Error::Form("mod-2 pairing must have zero diagonal"));
        }
        if qdiag.dim() != gram.rows() {
            return Err(Error::Form("q diagonal length must match Gram dimension"));
        }
        Ok(QuadSpace { gram, qdiag })
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &F2Mat {
        &self.gram
    }

    pub fn qdiag(&self) -> &F2Vec {
        &self.qdiag
    }

    /// ⟨u, v⟩ = uᵀ G v.
    pub fn pairing(&self, u: &F2Vec, v: &F2Vec) -> bool {
        u.dot(&self.gram.mul_vec(v))
    }

    /// q(v) = Σ_{i∈supp} qᵢ + Σ_{i<j∈supp} Gᵢⱼ.
    pub fn q(&self, v: &F2Vec) -> bool {
        assert_eq!(v.dim(), self.dim(), "dimension mismatch in q");
        let mut acc = v.dot(&self.qdiag);
        for i in v.support() {
            acc ^= parity_above(self.gram.row(i), v, i);
        }
        acc
    }

    /// Kernel of the pairing, in reduced row-echelon order.
    pub fn radical(&self) -> Vec<F2Vec> {
        self.gram.kernel_basis()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.gram.rank() == self.dim()
    }

    /// Arf invariant of a nondegenerate even-dimensional space. Dimension
    /// ≤ 16 additionally cross-checks the symplectic-basis value against an
    /// exhaustive zero count; disagreement is reported as a self-check
    /// failure, never patched over.
    pub fn arf(&self) -> Result<Arf> {
        let n2 = self.dim();
        if n2 == 0 || n2 % 2 != 0 {
            return Err(Error::Form("Arf invariant needs positive even dimension"));
        }
        if !self.is_nondegenerate() {
            return Err(Error::Form("Arf invariant needs a nondegenerate pairing"));
        }
        let by_basis = self.arf_by_symplectic_basis()?;
        if n2 <= 16 {
            let by_count = self.arf_by_count();
            if by_count != by_basis {
                return Err(Error::SelfCheck(format!(
                    "Arf mismatch: zero count gives {by_count}, symplectic basis gives {by_basis}"
                )));
            }
        }
        Ok(by_basis)
    }

    /// Count zeros of q over all 2^dim vectors; dim ≤ 16 only.
    fn arf_by_count(&self) -> Arf {
        let n2 = self.dim();
        debug_assert!((2..=16).contains(&n2) && n2 % 2 == 0);
        let rows: Vec<u32> = (0..n2).map(|i| self.gram.row(i).to_u32()).collect();
        let qd = self.qdiag.to_u32();
        let mut zeros = 0u64;
        for x in 0u32..1 << n2 {
            let mut acc = (x & qd).count_ones();
            let mut y = x;
            while y != 0 {
                let i = y.trailing_zeros() as usize;
                y &= y - 1;
                // bits still in y are exactly the support above i
                acc += (rows[i] & y).count_ones();
            }
            if acc & 1 == 0 {
                zeros += 1;
            }
        }
        let half = 1u64 << (n2 - 1);
        let off = 1u64 << (n2 / 2 - 1);
        match zeros {
            z if z == half + off => Arf::Plus,
            z if z == half - off => Arf::Minus,
            z => unreachable!("zero count {z} matches neither Arf class in dimension {n2}"),
        }
    }

    fn arf_by_symplectic_basis(&self) -> Result<Arf> {
        let pairs = self.symplectic_basis()?;
        let mut sum = false;
        for (a, b) in &pairs {
            sum ^= self.q(a) & self.q(b);
        }
        Ok(if sum { Arf::Minus } else { Arf::Plus })
    }

    /// Hyperbolic pairs (aᵢ, bᵢ) with ⟨aᵢ,bⱼ⟩ = δᵢⱼ and aᵢ ⊥ aⱼ, bᵢ ⊥ bⱼ.
    /// Deterministic: always splits off the first remaining basis vector.
    pub fn symplectic_basis(&self) -> Result<Vec<(F2Vec, F2Vec)>> {
        if self.dim() % 2 != 0 || !self.is_nondegenerate() {
            return Err(Error::Form("symplectic basis needs an even-dimensional nondegenerate pairing"));
        }
        let mut pool: Vec<F2Vec> = (0..self.dim()).map(|i| F2Vec::basis(self.dim(), i)).collect();
        let mut pairs = Vec::with_capacity(self.dim() / 2);
        while !pool.is_empty() {
            let u = pool.remove(0);
            let k = pool
                .iter()
                .position(|w| self.pairing(&u, w))
                .ok_or_else(|| Error::SelfCheck("pairing failed to split off a hyperbolic plane".into()))?;
            let v = pool.remove(k);
            for w in pool.iter_mut() {
                let a = self.pairing(w, &v);
                let b = self.pairing(w, &u);
                if a {
                    w.xor_in(&u);
                }
                if b {
                    w.xor_in(&v);
                }
            }
            pairs.push((u, v));
        }
        Ok(pairs)
    }

    /// Collapse the radical. `rad` must be an independent family spanning the
    /// kernel of the pairing, with q ≡ 0 on it. The dropped coordinates are
    /// the highest-index ones expressible through `rad`; every kept ambient
    /// coordinate passes through unchanged, so quotient coordinate `a` is
    /// ambient coordinate `kept[a]`.
    pub fn quotient_by_radical(&self, rad: &[F2Vec]) -> Result<Quotient> {
        let n = self.dim();
        for r in rad {
            if r.dim() != n {
                return Err(Error::Form("radical vector dimension mismatch"));
            }
            if !self.gram.mul_vec(r).is_zero() {
                return Err(Error::Form("alleged radical vector does not pair trivially"));
            }
            if self.q(r) {
                return Err(Error::Form("q is nonzero on an alleged radical vector"));
            }
        }
        if rad.len() != n - self.gram.rank() {
            return Err(Error::Form("given vectors do not span the radical"));
        }

        // Echelonize from the highest coordinate down; each reduced vector
        // then owns a distinct top index and contains no other vector's top.
        let mut reduced: Vec<F2Vec> = Vec::with_capacity(rad.len());
        for r in rad {
            let mut v = r.clone();
            loop {
                let Some(top) = v.last_set() else {
                    return Err(Error::Form("radical generators are linearly dependent"));
                };
                match reduced.iter().position(|w| w.last_set() == Some(top)) {
                    Some(k) => {
                        let w = reduced[k].clone();
                        v.xor_in(&w);
                    }
                    None => break,
                }
            }
            let top = v.last_set().expect("nonzero after reduction");
            // clear lower pivots from v, then clear top from everyone else
            let lower: Vec<F2Vec> = reduced
                .iter()
                .filter(|w| v.get(w.last_set().expect("reduced rows are nonzero")))
                .cloned()
                .collect();
            for w in &lower {
                v.xor_in(w);
            }
            debug_assert_eq!(v.last_set(), Some(top));
            for w in reduced.iter_mut() {
                if w.get(top) {
                    w.xor_in(&v);
                }
            }
            reduced.push(v);
        }

        let mut dropped: Vec<usize> = reduced
            .iter()
            .map(|v| v.last_set().expect("reduced rows are nonzero"))
            .collect();
        dropped.sort_unstable();
        let kept: Vec<usize> = (0..n).filter(|i| !dropped.contains(i)).collect();
        let qdim = kept.len();

        // Kept coordinates pass through; a dropped coordinate maps to the
        // kept support of its radical relation.
        let mut projection = F2Mat::zeros(qdim, n);
        for (a, &j) in kept.iter().enumerate() {
            projection.set(a, j, true);
        }
        for v in &reduced {
            let top = v.last_set().expect("reduced rows are nonzero");
            for j in v.support() {
                if j == top {
                    continue;
                }
                let a = kept
                    .binary_search(&j)
                    .expect("reduced radical vector supported on a dropped coordinate");
                projection.set(a, top, true);
            }
        }

        let mut gram = F2Mat::zeros(qdim, qdim);
        let mut qdiag = F2Vec::zeros(qdim);
        for (a, &i) in kept.iter().enumerate() {
            if self.qdiag.get(i) {
                qdiag.set(a, true);
            }
            for (b, &j) in kept.iter().enumerate() {
                if self.gram.get(i, j) {
                    gram.set(a, b, true);
                }
            }
        }
        let space = QuadSpace::new(gram, qdiag)?;
        debug_assert!(space.is_nondegenerate());
        debug_assert!(rad.iter().all(|r| projection.mul_vec(r).is_zero()));
        Ok(Quotient {
            space,
            projection,
            kept,
            dropped,
        })
    }
}

/// Result of collapsing the radical of a [`QuadSpace`].
pub struct Quotient {
    /// The nondegenerate quotient form.
    pub space: QuadSpace,
    /// (dim − k) × dim matrix sending an ambient vector to its class.
    pub projection: F2Mat,
    /// Ambient coordinates that survive, ascending; quotient coordinate `a`
    /// is ambient coordinate `kept[a]`.
    pub kept: Vec<usize>,
    /// Ambient coordinates eliminated (the highest-index expressible ones).
    pub dropped: Vec<usize>,
}
