//! Mod-2 monodromy: generators act as transvections on the quotient of the
//! diagram's quadratic space by its radical, and the group they generate is
//! measured by a deterministic Schreier–Sims run and compared against the
//! closed-form orthogonal-group order.
//!
//! Conventions: matrices act on column vectors, words evaluate left to right
//! (ρ(uv) = ρ(u)ρ(v)), and every generator is its own inverse, so a word and
//! its inverse evaluate identically letter by letter.

use std::collections::HashMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::diagram::{chain_diagram, radical_generators, DiagramStyle};
use crate::f2::{Arf, F2Mat, F2Vec, QuadSpace};
use crate::words::{delta_words, generator_change, Presentation, Word};
use crate::{Error, Result, DEFAULT_SEED};

/// Matrix of x ↦ x + ⟨x,v⟩v. Fixes v, is an involution, preserves the
/// pairing, and preserves q exactly when q(v) = 1. A radical v yields the
/// identity.
pub fn transvection_matrix(qs: &QuadSpace, v: &F2Vec) -> F2Mat {
    assert_eq!(v.dim(), qs.dim(), "vector/space dimension mismatch");
    assert!(!v.is_zero(), "transvection vector must be nonzero");
    let gv = qs.gram().mul_vec(v);
    let rows: Vec<F2Vec> = (0..qs.dim())
        .map(|i| {
            let mut row = F2Vec::basis(qs.dim(), i);
            if v.get(i) {
                row.xor_in(&gv);
            }
            row
        })
        .collect();
    F2Mat::from_rows(rows)
}

fn mat_pow(m: &F2Mat, k: usize) -> F2Mat {
    let mut out = F2Mat::identity(m.rows());
    for _ in 0..k {
        out = out.mul(m);
    }
    out
}

/// The generators of a diagram acting by transvections on a quadratic space:
/// either the full space of the diagram or its quotient by the radical.
///
/// `vectors[i]` is the image of the i-th basis vector, `matrices[i]` the
/// transvection at it; both are indexed 1-based through [`Self::vector`] and
/// [`Self::generator`] to match word letters.
#[derive(Clone, Debug)]
pub struct TransvectionRep {
    style: DiagramStyle,
    g: u64,
    space: QuadSpace,
    projection: F2Mat,
    vectors: Vec<F2Vec>,
    matrices: Vec<F2Mat>,
}

impl TransvectionRep {
    fn from_parts(style: DiagramStyle, g: u64, space: QuadSpace, projection: F2Mat) -> Self {
        let vectors: Vec<F2Vec> = (0..projection.cols())
            .map(|i| projection.mul_vec(&F2Vec::basis(projection.cols(), i)))
            .collect();
        let matrices: Vec<F2Mat> = vectors.iter().map(|v| transvection_matrix(&space, v)).collect();
        for (v, m) in vectors.iter().zip(&matrices) {
            debug_assert!(space.q(v), "generator vector must have q = 1");
            debug_assert!(m.mul(m).is_identity(), "transvections are involutions");
        }
        TransvectionRep {
            style,
            g,
            space,
            projection,
            vectors,
            matrices,
        }
    }

    pub fn style(&self) -> DiagramStyle {
        self.style
    }

    pub fn g(&self) -> u64 {
        self.g
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn ngens(&self) -> usize {
        self.vectors.len()
    }

    pub fn space(&self) -> &QuadSpace {
        &self.space
    }

    /// Matrix projecting the diagram's full space onto this one (identity
    /// for an ambient representation).
    pub fn projection(&self) -> &F2Mat {
        &self.projection
    }

    /// Image of the i-th basis vector, 1-based.
    pub fn vector(&self, i: usize) -> &F2Vec {
        assert!((1..=self.vectors.len()).contains(&i), "generator index {i} out of range");
        &self.vectors[i - 1]
    }

    /// Transvection at [`Self::vector`], 1-based.
    pub fn generator(&self, i: usize) -> &F2Mat {
        assert!((1..=self.matrices.len()).contains(&i), "generator index {i} out of range");
        &self.matrices[i - 1]
    }

    pub fn generators(&self) -> &[F2Mat] {
        &self.matrices
    }

    /// ρ(w), multiplying letter images left to right. Inverse letters map to
    /// the same involution as their generators.
    pub fn evaluate(&self, w: &Word) -> F2Mat {
        let mut out = F2Mat::identity(self.dim());
        for &l in w.letters() {
            let i = l.unsigned_abs() as usize;
            assert!((1..=self.matrices.len()).contains(&i), "letter {l} out of range");
            out = out.mul(&self.matrices[i - 1]);
        }
        out
    }

    /// Evaluate every relator; a relator passes iff its image is the
    /// identity. Failures carry the offending matrix — they are results,
    /// not errors.
    pub fn verify_presentation(&self, p: &Presentation) -> Vec<RelatorCheck> {
        assert_eq!(p.ngens, self.ngens(), "presentation/representation generator count mismatch");
        p.relators
            .iter()
            .map(|r| {
                let image = self.evaluate(&r.word);
                let ok = image.is_identity();
                RelatorCheck {
                    name: r.name.clone(),
                    ok,
                    witness: (!ok).then_some(image),
                }
            })
            .collect()
    }
}

/// Outcome of evaluating one relator.
#[derive(Clone, Debug)]
pub struct RelatorCheck {
    pub name: String,
    pub ok: bool,
    /// The non-identity image when the relator fails.
    pub witness: Option<F2Mat>,
}

/// Representation on the quotient of the diagram space by its radical
/// (dimension 2g). For the chain style the radical is spanned by the two
/// closed-form generators and the dropped coordinates are the last two; the
/// ladder style uses its computed radical.
pub fn monodromy_rep(g: u64, style: DiagramStyle) -> Result<TransvectionRep> {
    let d = style.build(g)?;
    let ambient = d.quad_space();
    if ambient.dim() - ambient.gram().rank() != 2 {
        return Err(Error::Form("diagram radical is not two-dimensional"));
    }
    let rad = match style {
        DiagramStyle::Trigonal => {
            let (r1, r2) = radical_generators(g)?;
            vec![r1, r2]
        }
        DiagramStyle::Weierstrass => ambient.radical(),
    };
    let quot = ambient.quotient_by_radical(&rad)?;
    debug_assert_eq!(quot.space.dim(), 2 * g as usize);
    Ok(TransvectionRep::from_parts(style, g, quot.space, quot.projection))
}

/// Representation on the full diagram space (dimension 2g+2), no quotient.
/// The radical acts trivially here, so only relations not involving the
/// central elements can be expected to hold.
pub fn ambient_rep(g: u64, style: DiagramStyle) -> Result<TransvectionRep> {
    let d = style.build(g)?;
    let space = d.quad_space();
    let n = d.n();
    Ok(TransvectionRep::from_parts(style, g, space, F2Mat::identity(n)))
}

/// One named commutation/identity fact about the central words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralityCheck {
    pub name: String,
    pub ok: bool,
}

/// In the chain-style quotient representation: ρ(δ0) and ρ(δ1) commute, and
/// ρ(δ0³δ1³), ρ(δ0^{2g+2}), ρ(δ1^{2g+2}) commute with every generator. At
/// g = 1 the stronger facts ρ(δ0) = ρ(δ1) and ρ(δ0)³ = I are also recorded.
pub fn centrality_checks(g: u64) -> Result<Vec<CentralityCheck>> {
    let rep = monodromy_rep(g, DiagramStyle::Trigonal)?;
    let dw = delta_words(g)?;
    let d0 = rep.evaluate(&dw.delta0);
    let d1 = rep.evaluate(&dw.delta1);
    let n = 2 * g as usize + 2;

    let mut checks = vec![CentralityCheck {
        name: "commute(delta0,delta1)".to_string(),
        ok: d0.mul(&d1) == d1.mul(&d0),
    }];
    let central = |m: &F2Mat| rep.generators().iter().all(|t| m.mul(t) == t.mul(m));
    let candidates = [
        ("central(delta0^3*delta1^3)".to_string(), mat_pow(&d0, 3).mul(&mat_pow(&d1, 3))),
        (format!("central(delta0^{n})"), mat_pow(&d0, n)),
        (format!("central(delta1^{n})"), mat_pow(&d1, n)),
    ];
    for (name, m) in candidates {
        checks.push(CentralityCheck { name, ok: central(&m) });
    }
    if g == 1 {
        checks.push(CentralityCheck {
            name: "equal(delta0,delta1)".to_string(),
            ok: d0 == d1,
        });
        checks.push(CentralityCheck {
            name: "identity(delta0^3)".to_string(),
            ok: mat_pow(&d0, 3).is_identity(),
        });
    }
    Ok(checks)
}

/// Largest matrix dimension the group-order machinery accepts; the point
/// action is packed into u32 bit patterns.
pub const BSGS_MAX_DIM: usize = 24;

/// Row-packed square matrix over GF(2); bit j of `rows[i]` is entry (i,j).
#[derive(Clone, PartialEq, Eq)]
struct PMat {
    rows: Vec<u32>,
}

impl PMat {
    fn identity(n: usize) -> PMat {
        PMat {
            rows: (0..n).map(|i| 1u32 << i).collect(),
        }
    }

    fn from_f2(m: &F2Mat) -> PMat {
        PMat {
            rows: m.row_vectors().iter().map(F2Vec::to_u32).collect(),
        }
    }

    fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, &r)| r == 1u32 << i)
    }

    /// x ↦ Mx on packed column vectors.
    fn apply(&self, x: u32) -> u32 {
        let mut out = 0u32;
        for (i, &row) in self.rows.iter().enumerate() {
            out |= ((row & x).count_ones() & 1) << i;
        }
        out
    }

    /// Matrix product: (self · rhs)(x) = self(rhs(x)).
    fn mul(&self, rhs: &PMat) -> PMat {
        let rows = self
            .rows
            .iter()
            .map(|&r| {
                let mut acc = 0u32;
                let mut bits = r;
                while bits != 0 {
                    let j = bits.trailing_zeros() as usize;
                    acc ^= rhs.rows[j];
                    bits &= bits - 1;
                }
                acc
            })
            .collect();
        PMat { rows }
    }

    /// Gauss–Jordan on [self | I] rows packed into u64.
    fn inverse(&self) -> Option<PMat> {
        let n = self.rows.len();
        let mut aug: Vec<u64> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, &r)| r as u64 | 1u64 << (n + i))
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| aug[r] >> col & 1 == 1)?;
            aug.swap(col, pivot);
            let row = aug[col];
            for (r, other) in aug.iter_mut().enumerate() {
                if r != col && *other >> col & 1 == 1 {
                    *other ^= row;
                }
            }
        }
        Some(PMat {
            rows: aug.iter().map(|&r| (r >> n) as u32).collect(),
        })
    }
}

/// One stabilizer level: a base point, the strong generators first stuck at
/// this level, and the orbit/transversal of the point. The group acting at
/// level l is generated by the `gens` of ALL levels ≥ l — deeper generators
/// fix longer base prefixes, so they belong to every shallower stabilizer.
struct Level {
    point: u32,
    /// (generator, inverse) pairs assigned to exactly this level.
    gens: Vec<(PMat, PMat)>,
    /// Orbit in BFS discovery order.
    orbit: Vec<u32>,
    /// point ↦ (u, u⁻¹) with u(base point) = point.
    transversal: HashMap<u32, (PMat, PMat)>,
}

impl Level {
    fn new(point: u32) -> Level {
        Level {
            point,
            gens: Vec::new(),
            orbit: Vec::new(),
            transversal: HashMap::new(),
        }
    }
}

/// Base and strong generating set for a group of GF(2) matrices acting on
/// packed nonzero vectors. The group order is the product of the orbit
/// lengths, one per base point.
pub struct Bsgs {
    dim: usize,
    levels: Vec<Level>,
    order: u128,
}

impl Bsgs {
    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn base(&self) -> Vec<F2Vec> {
        self.levels.iter().map(|l| F2Vec::from_u32(self.dim, l.point)).collect()
    }

    pub fn sifts_to_identity(&self, m: &F2Mat) -> bool {
        assert_eq!(m.rows(), self.dim);
        assert_eq!(m.cols(), self.dim);
        let (residue, _) = self.sift_from(PMat::from_f2(m), 0);
        residue.is_identity()
    }

    /// Divide off transversal representatives level by level; returns the
    /// residue and the level at which sifting stopped.
    fn sift_from(&self, mut h: PMat, from: usize) -> (PMat, usize) {
        for l in from..self.levels.len() {
            let p = h.apply(self.levels[l].point);
            match self.levels[l].transversal.get(&p) {
                None => return (h, l),
                Some((_, u_inv)) => h = u_inv.mul(&h),
            }
        }
        let stuck = self.levels.len();
        (h, stuck)
    }

    /// All strong generators acting at level l: those of levels ≥ l.
    fn acting_gens(&self, l: usize) -> Vec<(PMat, PMat)> {
        self.levels[l..].iter().flat_map(|lv| lv.gens.iter().cloned()).collect()
    }

    /// BFS orbit of the level's base point under its acting generators.
    fn rebuild_orbit(&mut self, l: usize) {
        let gens = self.acting_gens(l);
        let n = self.dim;
        let level = &mut self.levels[l];
        level.orbit.clear();
        level.transversal.clear();
        level.orbit.push(level.point);
        level.transversal.insert(level.point, (PMat::identity(n), PMat::identity(n)));
        let mut head = 0;
        while head < level.orbit.len() {
            let p = level.orbit[head];
            head += 1;
            let (u_p, u_p_inv) = level.transversal[&p].clone();
            for (s, s_inv) in &gens {
                let q = s.apply(p);
                if !level.transversal.contains_key(&q) {
                    level.transversal.insert(q, (s.mul(&u_p), u_p_inv.mul(s_inv)));
                    level.orbit.push(q);
                }
            }
        }
    }

    /// Test every Schreier generator of level l against the deeper levels.
    /// On the first failure the residue is installed as a strong generator
    /// at its stuck level (extending the base if needed) and that level is
    /// returned; `None` means the level is closed.
    fn closure_pass(&mut self, l: usize) -> Option<usize> {
        self.rebuild_orbit(l);
        let orbit = self.levels[l].orbit.clone();
        let gens = self.acting_gens(l);
        for &p in &orbit {
            let u_p = self.levels[l].transversal[&p].0.clone();
            for (s, _) in &gens {
                let q = s.apply(p);
                let u_q_inv = self.levels[l].transversal[&q].1.clone();
                let schreier = u_q_inv.mul(&s.mul(&u_p));
                debug_assert_eq!(schreier.apply(self.levels[l].point), self.levels[l].point);
                if schreier.is_identity() {
                    continue;
                }
                let (residue, stuck) = self.sift_from(schreier, l + 1);
                if !residue.is_identity() {
                    if stuck == self.levels.len() {
                        let bp = first_moved_basis_point(&residue, self.dim)
                            .expect("non-identity invertible matrix moves a basis vector");
                        self.levels.push(Level::new(bp));
                    }
                    let inv = residue.inverse().expect("residues of invertibles are invertible");
                    self.levels[stuck].gens.push((residue, inv));
                    return Some(stuck);
                }
            }
        }
        None
    }
}

fn first_moved_basis_point(m: &PMat, dim: usize) -> Option<u32> {
    (0..dim).map(|i| 1u32 << i).find(|&e| m.apply(e) != e)
}

/// Deterministic Schreier–Sims over the action on F2^dim \ {0}. Base points
/// are the first standard basis vectors moved at each level; the reported
/// order is exact, and every input generator is re-sifted to identity before
/// returning.
pub fn schreier_sims(gens: &[F2Mat], dim: usize) -> Result<Bsgs> {
    if dim > BSGS_MAX_DIM {
        return Err(Error::DimTooLarge {
            dim,
            max: BSGS_MAX_DIM,
        });
    }
    let mut packed = Vec::with_capacity(gens.len());
    for m in gens {
        assert_eq!(m.rows(), dim, "generator row count mismatch");
        assert_eq!(m.cols(), dim, "generator column count mismatch");
        let p = PMat::from_f2(m);
        let inv = p.inverse().ok_or(Error::NotInvertible)?;
        packed.push((p, inv));
    }

    let mut bsgs = Bsgs {
        dim,
        levels: Vec::new(),
        order: 1,
    };
    let nontrivial: Vec<(PMat, PMat)> = packed.iter().filter(|(p, _)| !p.is_identity()).cloned().collect();
    if !nontrivial.is_empty() {
        let bp = (0..dim)
            .map(|i| 1u32 << i)
            .find(|&e| nontrivial.iter().any(|(p, _)| p.apply(e) != e))
            .expect("some generator moves a basis vector");
        let mut level = Level::new(bp);
        level.gens = nontrivial;
        bsgs.levels.push(level);

        // Work upward from the deepest dirty level; a clean pass at level 0
        // means every level is closed.
        let mut l = 0usize;
        loop {
            match bsgs.closure_pass(l) {
                Some(j) => l = j,
                None => {
                    if l == 0 {
                        break;
                    }
                    l -= 1;
                }
            }
        }
    }

    let mut order: u128 = 1;
    for level in &bsgs.levels {
        order = order
            .checked_mul(level.orbit.len() as u128)
            .ok_or(Error::Overflow("group order exceeds u128"))?;
    }
    bsgs.order = order;

    for (p, _) in &packed {
        let (residue, _) = bsgs.sift_from(p.clone(), 0);
        if !residue.is_identity() {
            return Err(Error::SelfCheck("input generator does not sift to identity".to_string()));
        }
    }
    Ok(bsgs)
}

/// |O^ε(2n, 2)| = 2 · 2^{n(n−1)} · (2^n − ε) · ∏_{i=1}^{n−1} (4^i − 1).
pub fn orthogonal_group_order(n: u64, eps: Arf) -> Result<u128> {
    assert!(n >= 1, "the form must have positive dimension");
    let overflow = || Error::Overflow("orthogonal group order exceeds u128");
    let shift = n.checked_mul(n - 1).filter(|&s| s < 127).ok_or_else(overflow)?;
    let mut order: u128 = 2u128 << shift;
    let two_n = u32::try_from(n)
        .ok()
        .and_then(|n| 1u128.checked_shl(n))
        .ok_or_else(overflow)?;
    let middle = match eps {
        Arf::Plus => two_n - 1,
        Arf::Minus => two_n + 1,
    };
    order = order.checked_mul(middle).ok_or_else(overflow)?;
    for i in 1..n {
        let term = 1u128.checked_shl(2 * i as u32).ok_or_else(overflow)? - 1;
        order = order.checked_mul(term).ok_or_else(overflow)?;
    }
    Ok(order)
}

/// Comparison of the generated matrix group against the full orthogonal
/// group of the quotient form.
#[derive(Clone, Debug)]
pub struct OrthogonalOutcome {
    pub arf: Arf,
    pub group_order: u128,
    pub formula_order: u128,
    pub orders_match: bool,
    pub q_preserved: bool,
    /// Order after adjoining a pairing-preserving, non-q-preserving
    /// transvection; `None` when no q = 0 vector exists (the anisotropic
    /// g = 1 case, where the symplectic and orthogonal groups coincide).
    pub control_order: Option<u128>,
}

impl OrthogonalOutcome {
    pub fn ok(&self) -> bool {
        let control_ok = match self.control_order {
            Some(order) => order > self.formula_order,
            None => true,
        };
        self.orders_match && self.q_preserved && control_ok
    }
}

/// Does m preserve q? Exhaustive for dim ≤ 10, otherwise a 1024-vector
/// sample drawn from `seed`.
fn preserves_q_seeded(qs: &QuadSpace, m: &F2Mat, seed: u64) -> bool {
    let dim = qs.dim();
    if dim <= 10 {
        (1u32..1 << dim).all(|bits| {
            let v = F2Vec::from_u32(dim, bits);
            qs.q(&m.mul_vec(&v)) == qs.q(&v)
        })
    } else {
        let mut rng = StdRng::seed_from_u64(seed);
        (0..1024).all(|_| {
            let v = F2Vec::from_u32(dim, rng.random_range(0..1u32 << dim.min(31)));
            qs.q(&m.mul_vec(&v)) == qs.q(&v)
        })
    }
}

fn preserves_q(qs: &QuadSpace, m: &F2Mat) -> bool {
    preserves_q_seeded(qs, m, DEFAULT_SEED)
}

/// Every generator of the representation preserves the quadratic form;
/// exhaustive when the space is small enough, sampled from `seed` otherwise.
pub fn generators_preserve_q(rep: &TransvectionRep, seed: u64) -> bool {
    rep.generators().iter().all(|m| preserves_q_seeded(rep.space(), m, seed))
}

/// The generated group must be the full orthogonal group of the quotient
/// form: its Schreier–Sims order equals the closed-form order for the
/// form's Arf type, every generator preserves q, and (where the form is not
/// anisotropic) adjoining a symplectic non-q-preserving transvection makes
/// the group strictly larger.
pub fn full_orthogonal_check(g: u64) -> Result<OrthogonalOutcome> {
    let rep = monodromy_rep(g, DiagramStyle::Trigonal)?;
    let qs = rep.space();
    let dim = qs.dim();
    let arf = qs.arf()?;
    let bsgs = schreier_sims(rep.generators(), dim)?;
    let formula_order = orthogonal_group_order(g, arf)?;
    let q_preserved = rep.generators().iter().all(|m| preserves_q(qs, m));

    // q = 0 vectors give pairing-preserving transvections that move q.
    let control_vector = (1u32..1 << dim)
        .map(|bits| F2Vec::from_u32(dim, bits))
        .find(|v| !qs.q(v));
    let control_order = match control_vector {
        None => None,
        Some(v) => {
            let mut gens: Vec<F2Mat> = rep.generators().to_vec();
            gens.push(transvection_matrix(qs, &v));
            Some(schreier_sims(&gens, dim)?.order())
        }
    };

    Ok(OrthogonalOutcome {
        arf,
        group_order: bsgs.order(),
        formula_order,
        orders_match: bsgs.order() == formula_order,
        q_preserved,
        control_order,
    })
}

/// Transvection data extracted from the image of one chain generator under
/// the dictionary into the ladder representation.
#[derive(Clone, Debug)]
pub struct BridgeOutcome {
    /// w_i for each chain generator, in the ladder quotient space.
    pub vectors: Vec<F2Vec>,
    pub q_all_one: bool,
    pub gram_matches_chain: bool,
}

impl BridgeOutcome {
    pub fn ok(&self) -> bool {
        self.q_all_one && self.gram_matches_chain
    }
}

/// Push every chain generator through the dictionary into the ladder
/// representation. Each image must be a transvection; the extracted vectors
/// must all have q = 1 and reproduce the chain diagram's adjacency as their
/// Gram matrix. A non-transvection image is an error, not a failure — it
/// means the two diagrams were wired together incorrectly.
pub fn bridge_check(g: u64) -> Result<BridgeOutcome> {
    let rep = monodromy_rep(g, DiagramStyle::Weierstrass)?;
    let subst = generator_change(g)?;
    let chain = chain_diagram(g)?;
    let n = chain.n();
    let dim = rep.dim();

    let mut vectors = Vec::with_capacity(n);
    for i in 1..=n {
        let image = rep.evaluate(subst.image(i));
        let displacement = image.xor(&F2Mat::identity(dim));
        if displacement.rank() != 1 {
            return Err(Error::SelfCheck(format!(
                "image of generator {i} is not a transvection (rank {} ≠ 1)",
                displacement.rank()
            )));
        }
        // every nonzero column of x ↦ ⟨x,w⟩w is w itself
        let columns = displacement.transpose();
        let w = columns
            .row_vectors()
            .iter()
            .find(|c| !c.is_zero())
            .expect("rank-one matrix has a nonzero column")
            .clone();
        if image != transvection_matrix(rep.space(), &w) {
            return Err(Error::SelfCheck(format!(
                "image of generator {i} is rank-one but not the transvection at its column"
            )));
        }
        vectors.push(w);
    }

    let q_all_one = vectors.iter().all(|w| rep.space().q(w));
    let mut gram_matches_chain = true;
    for i in 1..=n {
        for j in i + 1..=n {
            let paired = rep.space().pairing(&vectors[i - 1], &vectors[j - 1]);
            if paired != chain.has_edge(i, j) {
                gram_matches_chain = false;
            }
        }
    }
    Ok(BridgeOutcome {
        vectors,
        q_all_one,
        gram_matches_chain,
    })
}
