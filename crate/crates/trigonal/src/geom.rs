//! Numerology of trigonal curves on scrolls and of their branch curves:
//! Maroni strata, splitting types, branch-curve characteristics from Chern
//! data, the classical Plücker transform of a plane curve with nodes and
//! cusps, and the applicability predicate for the dual-pair argument.
//!
//! Everything here is exact integer arithmetic. Intermediate half-integer
//! expressions are checked for evenness before dividing; a failed check is
//! reported, never rounded.

use serde::Serialize;

use crate::{Error, Result};

/// One Maroni stratum of the trigonal locus: genus `g`, Maroni invariant
/// `maroni`, scroll splitting type `(m, n)`, the offset `c` with
/// 2c = g + 2 − 3·maroni, and the projective dimension of the relevant
/// linear system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TrigonalData {
    pub g: u64,
    pub maroni: u64,
    pub m: u64,
    pub n: u64,
    pub c: u64,
    pub proj_dim: u64,
}

impl TrigonalData {
    /// Validates parity and range, then fills in the derived quantities:
    /// m + n = g + 2, n − m = maroni, 2c = g + 2 − 3·maroni, N = 2g + 7.
    pub fn new(g: u64, maroni: u64) -> Result<Self> {
        if g < 1 {
            return Err(Error::InvalidGenus {
                g,
                reason: "trigonal data needs g ≥ 1",
            });
        }
        if maroni % 2 != g % 2 {
            return Err(Error::InvalidMaroni {
                m: maroni as i64,
                reason: "Maroni invariant must have the parity of g",
            });
        }
        if 3 * maroni > g + 2 {
            return Err(Error::InvalidMaroni {
                m: maroni as i64,
                reason: "Maroni invariant exceeds (g+2)/3",
            });
        }
        // parity makes g + 2 − maroni even; the range check keeps c ≥ 0
        Ok(TrigonalData {
            g,
            maroni,
            m: (g + 2 - maroni) / 2,
            n: (g + 2 + maroni) / 2,
            c: (g + 2 - 3 * maroni) / 2,
            proj_dim: 2 * g + 7,
        })
    }

    /// The stratum is maximal exactly when 3·maroni = g + 2 (so c = 0),
    /// which forces g ≡ 1 mod 3.
    pub fn is_maximal(&self) -> bool {
        3 * self.maroni == self.g + 2
    }
}

/// All strata of genus `g` in increasing Maroni order: the invariant runs
/// over the values of the parity of g from 0 or 1 up to ⌊(g+2)/3⌋.
pub fn maroni_strata(g: u64) -> Result<Vec<TrigonalData>> {
    if g < 1 {
        return Err(Error::InvalidGenus {
            g,
            reason: "Maroni strata need g ≥ 1",
        });
    }
    let top = (g + 2) / 3;
    Ok((g % 2..=top)
        .step_by(2)
        .map(|m| TrigonalData::new(g, m).expect("stratum in range"))
        .collect())
}

/// Cross-check of the two dimension counts attached to a maximal stratum
/// with Maroni invariant `maroni` (so g = 3·maroni − 2): the coefficient
/// space of u₀y³ + u₁y² + u₂y + u₃ has dimension 6·maroni + 4, and the
/// linear system on the scroll has projective dimension 2g + 7.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DimCrosscheck {
    pub maroni: u64,
    pub g: u64,
    pub dim_v: u64,
    pub proj_dim: u64,
    pub consistent: bool,
}

pub fn dim_crosscheck(maroni: u64) -> Result<DimCrosscheck> {
    if maroni < 1 {
        return Err(Error::InvalidMaroni {
            m: maroni as i64,
            reason: "dimension cross-check needs maroni ≥ 1",
        });
    }
    let g = 3 * maroni - 2;
    let dim_v = 6 * maroni + 4;
    let proj_dim = 2 * g + 7;
    Ok(DimCrosscheck {
        maroni,
        g,
        dim_v,
        proj_dim,
        consistent: dim_v == proj_dim + 1,
    })
}

/// Chern data of a projected surface: K², topological Euler number, the
/// degree d = H² of the projection polarization, and K·H.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceChern {
    pub k2: i64,
    pub e: i64,
    pub d: i64,
    pub kh: i64,
}

impl SurfaceChern {
    /// The trigonal family: a rational normal scroll blow-up with K² = 8,
    /// e = 4, polarized by H with H² = 3g + 6 and K·H = 2g − 2 − H²
    /// (adjunction for the genus-g curve in |H|).
    pub fn trigonal(g: u64) -> Self {
        let d = 3 * g as i64 + 6;
        SurfaceChern {
            k2: 8,
            e: 4,
            d,
            kh: 2 * g as i64 - 2 - d,
        }
    }

    /// The Veronese control surface: P² with H = 2L, so K² = 9, e = 3,
    /// d = 4, K·H = −6. Its projection branch curve is classical.
    pub fn veronese() -> Self {
        SurfaceChern {
            k2: 9,
            e: 3,
            d: 4,
            kh: -6,
        }
    }
}

/// Characteristics of the branch curve of a generic projection of a surface
/// with the given Chern data: degree, cusp count, the node count by the
/// verbatim source formula, the node count by the adjunction oracle, and the
/// geometric genus used by the oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BranchCurve {
    pub b: i64,
    pub cusps: i64,
    pub nodes_formula: i64,
    pub nodes_oracle: i64,
    pub genus: i64,
}

impl BranchCurve {
    /// The two node counts agree. They are both reported either way; this
    /// flag is what reports surface as the discrepancy marker.
    pub fn nodes_agree(&self) -> bool {
        self.nodes_formula == self.nodes_oracle
    }
}

fn half(x: i64, what: &str) -> Result<i64> {
    if x % 2 != 0 {
        return Err(Error::Plucker(format!("{what} = {x} is odd")));
    }
    Ok(x / 2)
}

/// Branch-curve characteristics from raw Chern data.
///
/// b = 3d + K·H, cusps = 2K² − e − 15d + 9b, formula nodes
/// = e − 3K² + 24d + b(b−15)/2. The oracle instead computes the geometric
/// genus of the branch curve as 1 + (9d + 9K·H + 2K²)/2 — the genus of a
/// curve in |3H + K| — and recovers the nodes from the genus–degree formula
/// minus the cusps.
pub fn branch_characteristics_from(chern: &SurfaceChern) -> Result<BranchCurve> {
    let ovf = || Error::Overflow("branch-curve characteristics");
    let SurfaceChern { k2, e, d, kh } = *chern;
    let b = 3i64.checked_mul(d).and_then(|x| x.checked_add(kh)).ok_or_else(ovf)?;
    let cusps = 2 * k2 - e - 15 * d + 9 * b;
    let nodes_formula = e - 3 * k2 + 24 * d
        + half(b.checked_mul(b - 15).ok_or_else(ovf)?, "b(b-15)")?;
    let genus = 1 + half(9 * d + 9 * kh + 2 * k2, "(3H+K)·(3H+2K)")?;
    let nodes_oracle =
        half((b - 1).checked_mul(b - 2).ok_or_else(ovf)?, "(b-1)(b-2)")? - genus - cusps;
    Ok(BranchCurve {
        b,
        cusps,
        nodes_formula,
        nodes_oracle,
        genus,
    })
}

/// Branch-curve characteristics of the genus-g trigonal family. These are
/// functions of g alone: b = 8g + 10, cusps = 27g + 12.
pub fn branch_characteristics(g: u64) -> BranchCurve {
    branch_characteristics_from(&SurfaceChern::trigonal(g))
        .expect("trigonal Chern data keeps every intermediate even")
}

/// A plane curve with only nodes and cusps, carrying the degree/singularity
/// counts the Plücker formulas exchange. The genus is pinned by the other
/// three fields: p = (b−1)(b−2)/2 − δ − κ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PluckerCurve {
    degree: i64,
    nodes: i64,
    cusps: i64,
    genus: i64,
}

impl PluckerCurve {
    pub fn new(degree: i64, nodes: i64, cusps: i64) -> Result<Self> {
        if degree < 1 || nodes < 0 || cusps < 0 {
            return Err(Error::Plucker(format!(
                "not a plane-curve datum: degree {degree}, {nodes} nodes, {cusps} cusps"
            )));
        }
        let genus = (degree - 1) * (degree - 2) / 2 - nodes - cusps;
        if genus < 0 {
            return Err(Error::Plucker(format!(
                "degree-{degree} curve cannot carry {nodes} nodes and {cusps} cusps"
            )));
        }
        Ok(PluckerCurve {
            degree,
            nodes,
            cusps,
            genus,
        })
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn nodes(&self) -> i64 {
        self.nodes
    }

    pub fn cusps(&self) -> i64 {
        self.cusps
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }
}

/// Classical Plücker transform: the dual curve has degree
/// b̂ = b(b−1) − 2δ − 3κ, cusps κ̂ = 3b(b−2) − 6δ − 8κ, the same geometric
/// genus, and nodes δ̂ recovered from the genus–degree formula. Applying it
/// twice returns the input — this biduality is what the tests pin down.
/// Fails when the numbers cannot belong to a node-cusp dual (the hypothesis
/// of the formulas is violated).
pub fn plucker_dual(c: &PluckerCurve) -> Result<PluckerCurve> {
    let ovf = || Error::Overflow("Plücker transform");
    let (b, d, k) = (c.degree, c.nodes, c.cusps);
    let dual_degree = b
        .checked_mul(b - 1)
        .and_then(|x| x.checked_sub(2 * d))
        .and_then(|x| x.checked_sub(3 * k))
        .ok_or_else(ovf)?;
    let dual_cusps = 3i64
        .checked_mul(b)
        .and_then(|x| x.checked_mul(b - 2))
        .and_then(|x| x.checked_sub(6 * d))
        .and_then(|x| x.checked_sub(8 * k))
        .ok_or_else(ovf)?;
    if dual_degree < 1 || dual_cusps < 0 {
        return Err(Error::Plucker(format!(
            "dual of degree-{b} curve with ({d}, {k}) singularities is not a plane curve"
        )));
    }
    let dual_nodes =
        half((dual_degree - 1).checked_mul(dual_degree - 2).ok_or_else(ovf)?, "(b̂-1)(b̂-2)")?
            - c.genus
            - dual_cusps;
    if dual_nodes < 0 {
        return Err(Error::Plucker(format!(
            "dual node count {dual_nodes} is negative: input is no node-cusp curve"
        )));
    }
    PluckerCurve::new(dual_degree, dual_nodes, dual_cusps)
}

/// Whether the dual-pair degeneration argument applies to the stratum
/// (g, maroni): it needs c ≥ 3, and the exceptional hyperplane family then
/// sits in codimension c + 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Applicability {
    pub c: u64,
    pub applies: bool,
    pub codim_sigma_inf: u64,
}

pub fn plucker_applicability(g: u64, maroni: u64) -> Result<Applicability> {
    let data = TrigonalData::new(g, maroni)?;
    Ok(Applicability {
        c: data.c,
        applies: data.c >= 3,
        codim_sigma_inf: data.c + 1,
    })
}
