//! Integer Gram matrices, the lattice blocks E8 / U / D4, Milnor lattices of
//! the curve singularities behind the two diagrams, and Smith normal form.
//!
//! All arithmetic is checked 64-bit: an overflow surfaces as
//! [`Error::Overflow`] rather than a wrong answer. Smith reduction picks the
//! minimal-absolute-value entry as pivot at every step, which keeps
//! coefficient growth tame on everything this crate ever feeds it.

use std::fmt;

use crate::f2::F2Mat;
use crate::{Error, Result};

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMat {
    nrows: usize,
    ncols: usize,
    data: Vec<i64>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat {
            nrows: rows,
            ncols: cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[&[i64]]) -> Self {
        assert!(!rows.is_empty(), "from_rows needs at least one row");
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols), "rows of unequal length");
        IntMat {
            nrows: rows.len(),
            ncols: cols,
            data: rows.concat(),
        }
    }

    pub fn rows(&self) -> usize {
        self.nrows
    }

    pub fn cols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        assert!(i < self.nrows && j < self.ncols, "index ({i},{j}) out of range");
        self.data[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: i64) {
        assert!(i < self.nrows && j < self.ncols, "index ({i},{j}) out of range");
        self.data[i * self.ncols + j] = value;
    }

    /// Direct sum along the diagonal.
    pub fn block_diag(blocks: &[IntMat]) -> IntMat {
        assert!(!blocks.is_empty(), "block_diag needs at least one block");
        let rows = blocks.iter().map(IntMat::rows).sum();
        let cols = blocks.iter().map(IntMat::cols).sum();
        let mut out = IntMat::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.nrows {
                for j in 0..b.ncols {
                    out.set(r0 + i, c0 + j, b.get(i, j));
                }
            }
            r0 += b.nrows;
            c0 += b.ncols;
        }
        out
    }

    /// Entrywise reduction to GF(2).
    pub fn mod2(&self) -> F2Mat {
        let mut out = F2Mat::zeros(self.nrows, self.ncols);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                if self.get(i, j).rem_euclid(2) == 1 {
                    out.set(i, j, true);
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.ncols {
            self.data.swap(a * self.ncols + j, b * self.ncols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.nrows {
            self.data.swap(i * self.ncols + a, i * self.ncols + b);
        }
    }
}

impl fmt::Display for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.nrows {
            if i > 0 {
                writeln!(f)?;
            }
            for j in 0..self.ncols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMat[{}x{}]", self.nrows, self.ncols)?;
        write!(f, "{self}")
    }
}

/// The Gram blocks that assemble every lattice in this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeBlock {
    /// Even unimodular rank-8 block on the standard 8-node diagram
    /// (chain 1–…–7 with node 8 hanging off the branch vertex).
    E8,
    /// Hyperbolic plane [[0,1],[1,0]].
    U,
    /// Rank-4 block on the star-shaped diagram (center joined to 3 leaves);
    /// determinant 4, mod-2 rank 2.
    D4,
    /// Rank-1 zero block.
    Zero1,
}

impl LatticeBlock {
    pub fn rank(self) -> usize {
        match self {
            LatticeBlock::E8 => 8,
            LatticeBlock::U => 2,
            LatticeBlock::D4 => 4,
            LatticeBlock::Zero1 => 1,
        }
    }

    pub fn gram(self) -> IntMat {
        match self {
            LatticeBlock::E8 => {
                // simply laced: 2 on the diagonal, −1 on diagram edges;
                // branch vertex 4 carries arms {5,6}, {3,2,1,0}, {7}
                let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)];
                let mut m = IntMat::zeros(8, 8);
                for i in 0..8 {
                    m.set(i, i, 2);
                }
                for (a, b) in edges {
                    m.set(a, b, -1);
                    m.set(b, a, -1);
                }
                m
            }
            LatticeBlock::U => IntMat::from_rows(&[&[0, 1], &[1, 0]]),
            LatticeBlock::D4 => {
                let mut m = IntMat::zeros(4, 4);
                for i in 0..4 {
                    m.set(i, i, 2);
                }
                for leaf in 1..4 {
                    m.set(0, leaf, -1);
                    m.set(leaf, 0, -1);
                }
                m
            }
            LatticeBlock::Zero1 => IntMat::zeros(1, 1),
        }
    }
}

impl fmt::Display for LatticeBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LatticeBlock::E8 => "E8",
            LatticeBlock::U => "U",
            LatticeBlock::D4 => "D4",
            LatticeBlock::Zero1 => "<0>",
        })
    }
}

/// An ordered orthogonal sum of [`LatticeBlock`]s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBlocks {
    blocks: Vec<LatticeBlock>,
}

impl LatticeBlocks {
    pub fn new(blocks: Vec<LatticeBlock>) -> Self {
        assert!(!blocks.is_empty(), "a lattice needs at least one block");
        LatticeBlocks { blocks }
    }

    pub fn blocks(&self) -> &[LatticeBlock] {
        &self.blocks
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(|b| b.rank()).sum()
    }

    pub fn gram(&self) -> IntMat {
        let grams: Vec<IntMat> = self.blocks.iter().map(|b| b.gram()).collect();
        IntMat::block_diag(&grams)
    }
}

impl fmt::Display for LatticeBlocks {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // run-length summary in block order, e.g. "2*E8 + 4*U + D4"
        let mut first = true;
        let mut i = 0;
        while i < self.blocks.len() {
            let mut j = i;
            while j < self.blocks.len() && self.blocks[j] == self.blocks[i] {
                j += 1;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if j - i > 1 {
                write!(f, "{}*{}", j - i, self.blocks[i])?;
            } else {
                write!(f, "{}", self.blocks[i])?;
            }
            i = j;
        }
        Ok(())
    }
}

/// Milnor lattice of the singularity with Maroni-type invariant `m` ≥ 1:
/// odd m = 2l+1 gives l·E8 ⊕ 2l·U ⊕ D4, even m = 2l gives
/// l·E8 ⊕ (2l−2)·U ⊕ ⟨0⟩ ⊕ ⟨0⟩. Total rank is 6m−2 = 2g+2 with g = 3m−2,
/// and the mod-2 radical has dimension 2 in both parities.
pub fn milnor_lattice(m: i64) -> Result<LatticeBlocks> {
    if m < 1 {
        return Err(Error::InvalidMaroni {
            m,
            reason: "Milnor lattice needs m ≥ 1",
        });
    }
    let mut blocks = Vec::new();
    if m % 2 == 1 {
        let l = (m - 1) / 2;
        blocks.extend(std::iter::repeat_n(LatticeBlock::E8, l as usize));
        blocks.extend(std::iter::repeat_n(LatticeBlock::U, 2 * l as usize));
        blocks.push(LatticeBlock::D4);
    } else {
        let l = m / 2;
        blocks.extend(std::iter::repeat_n(LatticeBlock::E8, l as usize));
        blocks.extend(std::iter::repeat_n(LatticeBlock::U, (2 * l - 2) as usize));
        blocks.push(LatticeBlock::Zero1);
        blocks.push(LatticeBlock::Zero1);
    }
    Ok(LatticeBlocks::new(blocks))
}

/// Invariant factors d₁ | d₂ | … of an integer matrix, zeros last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    rows: usize,
    cols: usize,
    invariant_factors: Vec<i64>,
}

impl SmithForm {
    pub fn invariant_factors(&self) -> &[i64] {
        &self.invariant_factors
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors.iter().filter(|&&d| d != 0).count()
    }

    /// Factors > 1: the torsion of the cokernel.
    pub fn torsion(&self) -> Vec<i64> {
        self.invariant_factors.iter().copied().filter(|&d| d > 1).collect()
    }

    /// Rank of the free part of coker(ℤ^cols → ℤ^rows).
    pub fn cokernel_free_rank(&self) -> usize {
        self.rows - self.rank()
    }

    /// Human-readable cokernel, e.g. "Z/3", "Z", "Z + Z/2", or "0".
    pub fn cokernel_desc(&self) -> String {
        let mut parts = Vec::new();
        match self.cokernel_free_rank() {
            0 => {}
            1 => parts.push("Z".to_string()),
            k => parts.push(format!("Z^{k}")),
        }
        for d in self.torsion() {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

fn checked_abs(x: i64) -> Result<i64> {
    x.checked_abs().ok_or(Error::Overflow("Smith normal form"))
}

/// Smith normal form by elementary row/column operations. The pivot is
/// always a minimal-absolute-value nonzero entry of the trailing submatrix;
/// every multiply/subtract is overflow-checked.
pub fn smith_normal_form(m: &IntMat) -> Result<SmithForm> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let nmin = rows.min(cols);
    let overflow = || Error::Overflow("Smith normal form");

    let row_sub = |a: &mut IntMat, dst: usize, src: usize, q: i64, from: usize| -> Result<()> {
        for j in from..cols {
            let v = q
                .checked_mul(a.get(src, j))
                .and_then(|p| a.get(dst, j).checked_sub(p))
                .ok_or_else(overflow)?;
            a.set(dst, j, v);
        }
        Ok(())
    };
    let col_sub = |a: &mut IntMat, dst: usize, src: usize, q: i64, from: usize| -> Result<()> {
        for i in from..rows {
            let v = q
                .checked_mul(a.get(i, src))
                .and_then(|p| a.get(i, dst).checked_sub(p))
                .ok_or_else(overflow)?;
            a.set(i, dst, v);
        }
        Ok(())
    };

    let mut t = 0;
    while t < nmin {
        // minimal |entry| over the trailing submatrix
        let mut best: Option<(usize, usize, u64)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = a.get(i, j);
                if x != 0 {
                    let mag = x.unsigned_abs();
                    if best.map_or(true, |(_, _, b)| mag < b) {
                        best = Some((i, j, mag));
                    }
                }
            }
        }
        let Some((bi, bj, _)) = best else {
            break; // trailing submatrix is zero
        };
        a.swap_rows(t, bi);
        a.swap_cols(t, bj);

        let pivot = a.get(t, t);
        let mut clean = true;
        for i in t + 1..rows {
            let q = a.get(i, t) / pivot;
            if q != 0 {
                row_sub(&mut a, i, t, q, t)?;
            }
            if a.get(i, t) != 0 {
                clean = false; // a remainder strictly smaller than the pivot
            }
        }
        for j in t + 1..cols {
            let q = a.get(t, j) / pivot;
            if q != 0 {
                col_sub(&mut a, j, t, q, t)?;
            }
            if a.get(t, j) != 0 {
                clean = false;
            }
        }
        if !clean {
            continue; // re-select: the minimum dropped
        }

        // pivot must divide the rest of the submatrix for the chain to hold
        let offender = (t + 1..rows)
            .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
            .find(|&(i, j)| a.get(i, j) % pivot != 0);
        if let Some((i, _)) = offender {
            // fold that row into row t; the next sweep shrinks the pivot
            row_sub(&mut a, t, i, -1, t)?;
            continue;
        }
        t += 1;
    }

    let mut factors = Vec::with_capacity(nmin);
    for k in 0..nmin {
        factors.push(checked_abs(a.get(k, k))?);
    }
    debug_assert!(factors
        .windows(2)
        .all(|w| w[1] == 0 || (w[0] != 0 && w[1] % w[0] == 0)));
    Ok(SmithForm {
        rows,
        cols,
        invariant_factors: factors,
    })
}

/// Invariant factors of the 2×2 relation matrix [[−m, −n], [m+1, n+1]] for a
/// scroll of type (m, n), n ≥ m ≥ 1. The determinant is n − m, so the
/// torsion is ℤ/(n−m) (trivial when n = m+1, all of ℤ when n = m).
///
/// The same data embeds in the 3×3 bordered matrix
/// [[−m, −n, a], [m+1, n+1, b], [0, 0, 1]]; the cokernel must not depend on
/// (a, b), and this is re-verified here on a fixed sample of borders.
pub fn maroni_cokernel(m: i64, n: i64) -> Result<SmithForm> {
    if m < 1 || n < m {
        return Err(Error::InvalidMaroni {
            m: n - m,
            reason: "scroll type needs n ≥ m ≥ 1",
        });
    }
    let ovf = || Error::Overflow("scroll relation matrix");
    let m1 = m.checked_add(1).ok_or_else(ovf)?;
    let n1 = n.checked_add(1).ok_or_else(ovf)?;
    let base = smith_normal_form(&IntMat::from_rows(&[&[-m, -n], &[m1, n1]]))?;
    for (a, b) in [(0, 0), (1, 0), (0, 1), (2, 3), (-1, 4), (5, -2)] {
        let ext = smith_normal_form(&IntMat::from_rows(&[&[-m, -n, a], &[m1, n1, b], &[0, 0, 1]]))?;
        if ext.torsion() != base.torsion() || ext.rank() != base.rank() + 1 {
            return Err(Error::SelfCheck(format!(
                "bordered scroll matrix with (a,b)=({a},{b}) changed the cokernel"
            )));
        }
    }
    Ok(base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Independent oracle: determinant by recursive minor expansion.
    fn det_minors(m: &IntMat) -> i128 {
        let n = m.rows();
        assert_eq!(n, m.cols());
        if n == 1 {
            return m.get(0, 0) as i128;
        }
        let mut acc: i128 = 0;
        for j in 0..n {
            let x = m.get(0, j) as i128;
            if x == 0 {
                continue;
            }
            let mut sub = IntMat::zeros(n - 1, n - 1);
            for i in 1..n {
                let mut jj = 0;
                for k in 0..n {
                    if k == j {
                        continue;
                    }
                    sub.set(i - 1, jj, m.get(i, k));
                    jj += 1;
                }
            }
            let term = x * det_minors(&sub);
            acc += if j % 2 == 0 { term } else { -term };
        }
        acc
    }

    #[test]
    fn block_determinants() {
        assert_eq!(det_minors(&LatticeBlock::E8.gram()), 1);
        assert_eq!(det_minors(&LatticeBlock::D4.gram()), 4);
        assert_eq!(det_minors(&LatticeBlock::U.gram()), -1);
    }

    #[test]
    fn block_mod2_ranks() {
        assert_eq!(LatticeBlock::E8.gram().mod2().rank(), 8);
        assert_eq!(LatticeBlock::D4.gram().mod2().rank(), 2);
        assert_eq!(LatticeBlock::U.gram().mod2().rank(), 2);
        assert_eq!(LatticeBlock::Zero1.gram().mod2().rank(), 0);
    }

    #[test]
    fn snf_frozen_cases() {
        let f = |rows: &[&[i64]]| smith_normal_form(&IntMat::from_rows(rows)).unwrap();
        assert_eq!(f(&[&[1, 0], &[0, 1]]).invariant_factors(), &[1, 1]);
        assert_eq!(f(&[&[2, 0], &[0, 4]]).invariant_factors(), &[2, 4]);
        assert_eq!(f(&[&[2, 0], &[0, 3]]).invariant_factors(), &[1, 6]);
        assert_eq!(f(&[&[-3, -5], &[4, 6]]).invariant_factors(), &[1, 2]);
        assert_eq!(f(&[&[0, 0], &[0, 0]]).invariant_factors(), &[0, 0]);
        assert_eq!(f(&[&[6, 0, 0], &[0, 10, 0], &[0, 0, 15]]).invariant_factors(), &[1, 30, 30]);
    }

    #[test]
    fn snf_overflow_reported() {
        let m = IntMat::from_rows(&[&[2, i64::MAX], &[i64::MAX, 2]]);
        match smith_normal_form(&m) {
            Err(Error::Overflow(_)) => {}
            other => panic!("expected overflow, got {other:?}"),
        }
    }

    #[test]
    fn maroni_cokernel_cases() {
        assert_eq!(maroni_cokernel(3, 5).unwrap().torsion(), vec![2]);
        assert_eq!(maroni_cokernel(3, 5).unwrap().cokernel_desc(), "Z/2");
        assert_eq!(maroni_cokernel(2, 3).unwrap().torsion(), Vec::<i64>::new());
        assert_eq!(maroni_cokernel(2, 3).unwrap().cokernel_desc(), "0");
        // degenerate m = n: rank drops, cokernel picks up a free summand
        let even = maroni_cokernel(4, 4).unwrap();
        assert_eq!(even.invariant_factors(), &[1, 0]);
        assert_eq!(even.cokernel_desc(), "Z");
        assert!(maroni_cokernel(0, 2).is_err());
        assert!(maroni_cokernel(3, 2).is_err());
    }

    #[test]
    fn milnor_block_lists() {
        use LatticeBlock::*;
        assert_eq!(milnor_lattice(1).unwrap().blocks(), &[D4]);
        assert_eq!(milnor_lattice(2).unwrap().blocks(), &[E8, Zero1, Zero1]);
        assert_eq!(milnor_lattice(3).unwrap().blocks(), &[E8, U, U, D4]);
        assert_eq!(milnor_lattice(4).unwrap().blocks(), &[E8, E8, U, U, Zero1, Zero1]);
        assert!(milnor_lattice(0).is_err());
        assert!(milnor_lattice(-3).is_err());
    }

    #[test]
    fn milnor_rank_and_radical() {
        for m in 1..=8 {
            let lat = milnor_lattice(m).unwrap();
            assert_eq!(lat.rank() as i64, 6 * m - 2, "rank at m={m}");
            let gram2 = lat.gram().mod2();
            assert_eq!(gram2.cols() - gram2.rank(), 2, "mod-2 radical at m={m}");
        }
    }

    #[test]
    fn blocks_display() {
        assert_eq!(milnor_lattice(4).unwrap().to_string(), "2*E8 + 2*U + 2*<0>");
        assert_eq!(milnor_lattice(1).unwrap().to_string(), "D4");
    }

    proptest! {
        #[test]
        fn snf_matches_determinant_oracle(entries in proptest::collection::vec(-9i64..=9, 9)) {
            let m = IntMat::from_rows(&[&entries[0..3], &entries[3..6], &entries[6..9]]);
            let snf = smith_normal_form(&m).unwrap();
            let det = det_minors(&m);
            let product: i128 = snf.invariant_factors().iter().map(|&d| d as i128).product();
            if det != 0 {
                prop_assert_eq!(product, det.abs());
                prop_assert_eq!(snf.rank(), 3);
            } else {
                prop_assert!(snf.rank() < 3);
            }
            // divisibility chain, zeros trailing
            let fs = snf.invariant_factors();
            for w in fs.windows(2) {
                prop_assert!(w[1] == 0 || (w[0] != 0 && w[1] % w[0] == 0));
                prop_assert!(w[0] >= 0 && w[1] >= 0);
            }
        }

        #[test]
        fn snf_invariant_under_transpose(entries in proptest::collection::vec(-20i64..=20, 12)) {
            let m = IntMat::from_rows(&[&entries[0..4], &entries[4..8], &entries[8..12]]);
            let mut tr = IntMat::zeros(4, 3);
            for i in 0..3 {
                for j in 0..4 {
                    tr.set(j, i, m.get(i, j));
                }
            }
            let a = smith_normal_form(&m).unwrap();
            let b = smith_normal_form(&tr).unwrap();
            prop_assert_eq!(a.invariant_factors(), b.invariant_factors());
        }
    }
}
