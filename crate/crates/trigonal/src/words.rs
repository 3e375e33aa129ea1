//! Free-group words and the two finite presentations built on the diagrams.
//!
//! A [`Word`] is a sequence of nonzero letters: +i is generator i, −i its
//! inverse (1-based, matching diagram vertices). Composition is read left to
//! right everywhere, and a representation evaluates ρ(uv) = ρ(u)·ρ(v).
//!
//! Relators are stored as explicit difference words w₁·w₂⁻¹, freely reduced,
//! so "w₁ = w₂" holds in a group iff the relator dies there.
//!
//! The distinguished elements:
//!
//! ```text
//! δ0 = t1 t2 ⋯ t(2g+2)                    (ascending product)
//! δ1 = t(2g+1) t(2g+2) ⋯ t1 t2            (descending pair blocks)
//! A  = t(2g+1) t(2g−1) ⋯ t3 t1            (odd indices, descending)
//! B  = t(2g+2) t(2g) ⋯ t4 t2              (even indices, descending)
//! Δ  = T(2g+2) T(2g+1) ⋯ T2 T1            (ladder generators, descending)
//! ```
//!
//! [`generator_change`] is the mod-6 dictionary rewriting each chain
//! generator t_i as a word in the ladder generators T_j; under it the paired
//! products t(2i−1)t(2i) collapse to two-letter words T(g+1+j)T(j) with
//! j = g+2−i ([`bridge_pairs`]), and the image of δ0 is exactly
//! [`reorder_word`].

use serde::{Deserialize, Serialize};

use crate::diagram::{chain_diagram, ladder_graph};
use crate::{Error, Result};

/// Freely composable word; +i is generator i, −i its inverse.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word {
    letters: Vec<i32>,
}

impl Word {
    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn gen(i: usize) -> Self {
        Word {
            letters: vec![to_letter(i)],
        }
    }

    pub fn from_letters(letters: Vec<i32>) -> Self {
        assert!(letters.iter().all(|&l| l != 0), "words cannot contain the letter 0");
        Word { letters }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index mentioned.
    pub fn max_generator(&self) -> usize {
        self.letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> Word {
        let mut letters = Vec::with_capacity(self.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        Word { letters }
    }

    /// Cancel adjacent inverse pairs until none remain. Confluent, so a
    /// single stack pass computes the normal form.
    pub fn free_reduce(&self) -> Word {
        let mut stack: Vec<i32> = Vec::with_capacity(self.len());
        for &l in &self.letters {
            debug_assert!(l != 0);
            if stack.last() == Some(&-l) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Word { letters: stack }
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != -w[1])
    }
}

impl std::fmt::Debug for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Word{:?}", self.letters)
    }
}

fn to_letter(i: usize) -> i32 {
    assert!(i >= 1, "generator indices are 1-based");
    i32::try_from(i).expect("generator index fits in i32")
}

/// u v u⁻¹ v⁻¹, freely reduced.
pub fn commutator(u: &Word, v: &Word) -> Word {
    u.concat(v).concat(&u.inverse()).concat(&v.inverse()).free_reduce()
}

/// Named relator of a [`Presentation`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relator {
    pub name: String,
    pub word: Word,
}

/// Finite presentation: generator count plus named relators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub ngens: usize,
    pub relators: Vec<Relator>,
}

impl Presentation {
    pub fn new(ngens: usize, relators: Vec<Relator>) -> Self {
        for r in &relators {
            assert!(
                r.word.max_generator() <= ngens,
                "relator {} mentions generator beyond ngens={ngens}",
                r.name
            );
        }
        let mut names: Vec<&str> = relators.iter().map(|r| r.name.as_str()).collect();
        names.sort_unstable();
        assert!(names.windows(2).all(|w| w[0] != w[1]), "relator names must be unique");
        Presentation { ngens, relators }
    }
}

/// The four distinguished words over the chain generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaWords {
    pub delta0: Word,
    pub delta1: Word,
    /// Descending product of the odd-index generators (centralized by δ0).
    pub odds: Word,
    /// Descending product of the even-index generators (centralized by δ0).
    pub evens: Word,
}

fn require_chain_genus(g: u64) -> Result<usize> {
    if g < 1 || g % 3 != 1 {
        return Err(Error::InvalidGenus {
            g,
            reason: "chain presentation needs g ≡ 1 (mod 3), g ≥ 1",
        });
    }
    Ok(g as usize)
}

pub fn delta_words(g: u64) -> Result<DeltaWords> {
    let g = require_chain_genus(g)?;
    let n = 2 * g + 2;
    let delta0 = Word::from_letters((1..=n).map(to_letter).collect());
    let mut pairs = Vec::with_capacity(n);
    for k in (1..=g + 1).rev() {
        pairs.push(to_letter(2 * k - 1));
        pairs.push(to_letter(2 * k));
    }
    let delta1 = Word::from_letters(pairs);
    let odds = Word::from_letters((1..=n).rev().filter(|i| i % 2 == 1).map(to_letter).collect());
    let evens = Word::from_letters((1..=n).rev().filter(|i| i % 2 == 0).map(to_letter).collect());
    debug_assert_eq!(odds.len(), g + 1);
    debug_assert_eq!(evens.len(), g + 1);
    Ok(DeltaWords {
        delta0,
        delta1,
        odds,
        evens,
    })
}

/// Braid difference word x y x (y x y)⁻¹.
fn braid_relator(i: usize, j: usize) -> Word {
    let (i, j) = (to_letter(i), to_letter(j));
    Word::from_letters(vec![i, j, i, -j, -i, -j])
}

/// Presentation on the chain diagram: braid on edges, commuting off edges,
/// the chain relators [tᵢ tᵢ₊₁ tᵢ⁻¹, tᵢ₊₂], the two centralizing relators
/// [δ0, A] and [δ0, B], and the power relators (δ0δ1)³ and δ0^{g+2}.
pub fn trigonal_presentation(g: u64) -> Result<Presentation> {
    let d = chain_diagram(g)?;
    let dw = delta_words(g)?;
    let g = g as usize;
    let n = 2 * g + 2;
    let mut rels = Vec::new();
    for (i, j) in d.edges() {
        rels.push(Relator {
            name: format!("braid({i},{j})"),
            word: braid_relator(i, j),
        });
    }
    for i in 1..=n {
        for j in i + 1..=n {
            if !d.has_edge(i, j) {
                rels.push(Relator {
                    name: format!("comm({i},{j})"),
                    word: commutator(&Word::gen(i), &Word::gen(j)),
                });
            }
        }
    }
    for i in 1..=2 * g {
        // conjugate of t_{i+1} by t_i must commute with t_{i+2}
        let conj = Word::from_letters(vec![to_letter(i), to_letter(i + 1), -to_letter(i)]);
        rels.push(Relator {
            name: format!("chain({i})"),
            word: commutator(&conj, &Word::gen(i + 2)),
        });
    }
    rels.push(Relator {
        name: "central(odd)".to_string(),
        word: commutator(&dw.delta0, &dw.odds),
    });
    rels.push(Relator {
        name: "central(even)".to_string(),
        word: commutator(&dw.delta0, &dw.evens),
    });
    rels.push(Relator {
        name: "power(delta0*delta1,3)".to_string(),
        word: dw.delta0.concat(&dw.delta1).pow(3).free_reduce(),
    });
    rels.push(Relator {
        name: format!("power(delta0,{})", g + 2),
        word: dw.delta0.pow(g + 2).free_reduce(),
    });
    Ok(Presentation::new(n, rels))
}

/// Descending full product Δ = T(2g+2) T(2g+1) ⋯ T1 over the ladder
/// generators.
pub fn full_twist_word(g: u64) -> Result<Word> {
    if g < 1 {
        return Err(Error::InvalidGenus {
            g,
            reason: "ladder presentation needs g ≥ 1",
        });
    }
    let n = 2 * g as usize + 2;
    Ok(Word::from_letters((1..=n).rev().map(to_letter).collect()))
}

/// Presentation on the ladder graph: commuting off edges, braid on edges,
/// the triangle relators TᵢTⱼTₖTᵢ = TⱼTₖTᵢTⱼ, and for every j the relator
/// (Tⱼ⁻¹Δ)^{g+1} = (ΔTⱼ⁻¹)^{g+1}.
pub fn weierstrass_presentation(g: u64) -> Result<Presentation> {
    let d = ladder_graph(g)?;
    let delta = full_twist_word(g)?;
    let g = g as usize;
    let n = 2 * g + 2;
    let mut rels = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if !d.has_edge(i, j) {
                rels.push(Relator {
                    name: format!("comm({i},{j})"),
                    word: commutator(&Word::gen(i), &Word::gen(j)),
                });
            }
        }
    }
    for (i, j) in d.edges() {
        rels.push(Relator {
            name: format!("braid({i},{j})"),
            word: braid_relator(i, j),
        });
    }
    for (i, j, k) in d.triangles() {
        let lhs = Word::from_letters(vec![to_letter(i), to_letter(j), to_letter(k), to_letter(i)]);
        let rhs = Word::from_letters(vec![to_letter(j), to_letter(k), to_letter(i), to_letter(j)]);
        rels.push(Relator {
            name: format!("triangle({i},{j},{k})"),
            word: lhs.concat(&rhs.inverse()).free_reduce(),
        });
    }
    for j in 1..=n {
        let tj_inv = Word::from_letters(vec![-to_letter(j)]);
        let lhs = tj_inv.concat(&delta).pow(g + 1);
        let rhs = delta.concat(&tj_inv).pow(g + 1);
        rels.push(Relator {
            name: format!("slide({j})"),
            word: lhs.concat(&rhs.inverse()).free_reduce(),
        });
    }
    Ok(Presentation::new(n, rels))
}

/// Homomorphism of free groups given by generator images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    images: Vec<Word>,
}

impl Substitution {
    pub fn new(images: Vec<Word>) -> Self {
        Substitution { images }
    }

    pub fn identity(n: usize) -> Self {
        Substitution {
            images: (1..=n).map(Word::gen).collect(),
        }
    }

    pub fn domain(&self) -> usize {
        self.images.len()
    }

    /// Image of generator i (1-based).
    pub fn image(&self, i: usize) -> &Word {
        assert!((1..=self.images.len()).contains(&i), "generator {i} outside domain");
        &self.images[i - 1]
    }

    /// Homomorphic image, freely reduced.
    pub fn apply(&self, w: &Word) -> Word {
        let mut out = Vec::new();
        for &l in w.letters() {
            let img = self.image(l.unsigned_abs() as usize);
            if l > 0 {
                out.extend_from_slice(img.letters());
            } else {
                out.extend(img.letters().iter().rev().map(|x| -x));
            }
        }
        Word::from_letters(out).free_reduce()
    }
}

/// The mod-6 dictionary t_i ↦ word in T-generators, with M = (g+2)/3:
///
/// * i ≡ 1: T_j, j = 6M − (i+3)/2
/// * i ≡ 2: T_j, j = 3M − i/2
/// * i ≡ 3: T_j, j = 3M − (i+1)/2
/// * i ≡ 4: t_{i−1}⁻¹ T_j t_{i−1}, j = 6M − (i+2)/2 (t_{i−1} is a direct case)
/// * i ≡ 5: t_{i+1} T_j t_{i+1}⁻¹, j = 3M − (i+1)/2 (t_{i+1} is a direct case)
/// * i ≡ 0: T_j, j = 6M − (i+2)/2
pub fn generator_change(g: u64) -> Result<Substitution> {
    require_chain_genus(g)?;
    let m = (g as usize + 2) / 3;
    let n = 2 * g as usize + 2;
    // direct single-letter cases (i ≡ 1, 2, 3, 0 mod 6)
    let direct = |i: usize| -> usize {
        match i % 6 {
            1 => 6 * m - (i + 3) / 2,
            2 => 3 * m - i / 2,
            3 => 3 * m - (i + 1) / 2,
            0 => 6 * m - (i + 2) / 2,
            r => panic!("generator {i} (≡ {r} mod 6) is not a direct case"),
        }
    };
    let mut images = Vec::with_capacity(n);
    for i in 1..=n {
        let w = match i % 6 {
            1 | 2 | 3 | 0 => Word::gen(direct(i)),
            4 => {
                let j = to_letter(6 * m - (i + 2) / 2);
                let c = to_letter(direct(i - 1));
                Word::from_letters(vec![-c, j, c])
            }
            5 => {
                let j = to_letter(3 * m - (i + 1) / 2);
                let c = to_letter(direct(i + 1));
                Word::from_letters(vec![c, j, -c])
            }
            _ => unreachable!(),
        };
        debug_assert!(w.max_generator() <= n, "image of t{i} leaves the generator range");
        images.push(w);
    }
    Ok(Substitution::new(images))
}

/// One paired-letter identity t(2i−1)·t(2i) = T(g+1+j)·T(j), j = g+2−i.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BridgePair {
    /// Chain-side generator indices (2i−1, 2i).
    pub left: (usize, usize),
    /// Ladder-side generator indices (g+1+j, j).
    pub right: (usize, usize),
}

/// The g+1 paired-letter identities; each side covers its 2g+2 generators
/// exactly once.
pub fn bridge_pairs(g: u64) -> Result<Vec<BridgePair>> {
    require_chain_genus(g)?;
    let g = g as usize;
    let pairs: Vec<BridgePair> = (1..=g + 1)
        .map(|i| {
            let j = g + 2 - i;
            BridgePair {
                left: (2 * i - 1, 2 * i),
                right: (g + 1 + j, j),
            }
        })
        .collect();
    debug_assert_eq!(pairs.len(), g + 1);
    Ok(pairs)
}

/// The image of δ0 in ladder generators, written pairwise:
/// T(2g+2)T(g+1) · T(2g+1)T(g) ⋯ T(g+3)T(2) · T(g+2)T(1).
pub fn reorder_word(g: u64) -> Result<Word> {
    require_chain_genus(g)?;
    let g = g as usize;
    let mut letters = Vec::with_capacity(2 * g + 2);
    for j in (1..=g + 1).rev() {
        letters.push(to_letter(g + 1 + j));
        letters.push(to_letter(j));
    }
    Ok(Word::from_letters(letters))
}
