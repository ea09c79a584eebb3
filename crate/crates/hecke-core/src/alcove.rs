//! The affine Weyl group as pairs (finite part, coroot translation),
//! alcove walks, crossing signs, and heights.
//!
//! Points of the level-1 hyperplane are stored as a classical coweight
//! part plus the level; Λ_0^∨ contributes level only. The affine
//! generator s_0 acts through the highest root: s_0 = s_θ · t_{−θ^∨}.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::cartan::{AffineCartanDatum, ClassicalDatum, RootVector};
use crate::exactmath::{rat, Matrix, Rat};
use crate::level0;
use crate::weyl::{ElemId, GroupTable};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlcoveError {
    #[error("greedy wall-crossing did not terminate within {0} steps (convention bug)")]
    NonTerminating(usize),
    #[error("vector is not in the coroot lattice")]
    NotInCorootLattice,
}

/// Element w = finite · t_λ of W̊ ⋉ Q̊^∨; the translation is stored on
/// the simple-coroot basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineElement {
    pub finite: ElemId,
    pub translation: Vec<i64>,
}

/// A point of the level-ℓ hyperplane: classical coweight part plus
/// level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Level1Point {
    pub classical: RootVector,
    pub level: Rat,
}

/// An alcove walk: wall indices and their crossing signs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlcoveWalk {
    pub word: Vec<usize>,
    pub signs: Vec<i8>,
}

/// Expand an integer coroot-basis vector into a coweight-side vector.
pub fn coroot_combination(cl: &ClassicalDatum, lambda: &[i64]) -> RootVector {
    assert_eq!(lambda.len(), cl.rank);
    let mut acc = RootVector::new(vec![Rat::zero(); cl.ambient_dim], cl.realization);
    for (i, &c) in lambda.iter().enumerate() {
        if c != 0 {
            acc = acc.add(&cl.simple_coroots[i].scale(&rat(c)));
        }
    }
    acc
}

/// Integer coordinates of a coroot-lattice vector on the simple-coroot
/// basis.
pub fn expand_integer(cl: &ClassicalDatum, x: &RootVector) -> Result<Vec<i64>, AlcoveError> {
    let coeffs = cl.expand_in_coroots(x).ok_or(AlcoveError::NotInCorootLattice)?;
    coeffs
        .iter()
        .map(|c| {
            if c.is_integer() {
                i64::try_from(c.to_integer()).map_err(|_| AlcoveError::NotInCorootLattice)
            } else {
                Err(AlcoveError::NotInCorootLattice)
            }
        })
        .collect()
}

/// Height ht(λ) = ⟨λ, ρ̊⟩ of a coroot-basis vector: the coefficient sum.
pub fn height(lambda: &[i64]) -> i64 {
    lambda.iter().sum()
}

impl AffineElement {
    pub fn identity(rank: usize) -> Self {
        Self {
            finite: ElemId(0),
            translation: vec![0; rank],
        }
    }

    pub fn from_finite(w: ElemId, rank: usize) -> Self {
        Self {
            finite: w,
            translation: vec![0; rank],
        }
    }

    pub fn translation(lambda: Vec<i64>) -> Self {
        Self {
            finite: ElemId(0),
            translation: lambda,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.finite == ElemId(0) && self.translation.iter().all(|&c| c == 0)
    }

    /// The affine simple reflection s_i, i ∈ 0..=n.
    pub fn simple_reflection(table: &GroupTable, i: usize) -> Self {
        let cl = &table.datum;
        if i >= 1 {
            Self::from_finite(table.right(table.identity(), i), cl.rank)
        } else {
            // s_0 = s_θ · t_{−θ^∨}.
            let s_theta = level0::cl_s0(table);
            let theta_vee = expand_integer(cl, &cl.theta_vee).expect("θ^∨ is a coroot");
            Self {
                finite: s_theta,
                translation: theta_vee.iter().map(|c| -c).collect(),
            }
        }
    }

    /// Product (u, λ)·(v, μ) = (uv, v^{−1}(λ) + μ).
    pub fn mul(&self, table: &GroupTable, other: &AffineElement) -> AffineElement {
        let cl = &table.datum;
        let uv = table.mul(self.finite, other.finite);
        let lam = coroot_combination(cl, &self.translation);
        let pulled = table.apply(table.inverse(other.finite), &lam);
        let mut coords = expand_integer(cl, &pulled).expect("coroot lattice is W-stable");
        for (c, &m) in coords.iter_mut().zip(&other.translation) {
            *c += m;
        }
        AffineElement {
            finite: uv,
            translation: coords,
        }
    }

    /// Left multiplication by the affine generator s_i.
    pub fn left_simple(&self, table: &GroupTable, i: usize) -> AffineElement {
        AffineElement::simple_reflection(table, i).mul(table, self)
    }

    /// Apply to a point: (u, λ)(x) = u(x_cl + ℓ(x)·λ) at the same level.
    pub fn apply(&self, table: &GroupTable, x: &Level1Point) -> Level1Point {
        let cl = &table.datum;
        let lam = coroot_combination(cl, &self.translation);
        let shifted = x.classical.add(&lam.scale(&x.level));
        Level1Point {
            classical: table.apply(self.finite, &shifted),
            level: x.level.clone(),
        }
    }
}

/// Pairing ⟨x, α_i⟩ of a level-ℓ point with an affine simple root.
pub fn pair_affine_root(cl: &ClassicalDatum, x: &Level1Point, i: usize) -> Rat {
    if i >= 1 {
        x.classical.pair(cl.alpha(i))
    } else {
        // α_0 = δ − θ for the untwisted types (a_0 = 1).
        let theta = cl.cl_alpha0.neg();
        x.level.clone() - x.classical.pair(&theta)
    }
}

/// Interior representative of the fundamental alcove at level 1:
/// (Λ_0^∨ + … + Λ_n^∨)/h with h the sum of the marks, so every wall
/// pairing equals 1/h.
pub fn fundamental_alcove_point(affine: &AffineCartanDatum, cl: &ClassicalDatum) -> Level1Point {
    let h: i64 = affine.marks.iter().sum();
    let n = cl.rank;
    let target = rat(1) / rat(h);
    let classical = match cl.realization {
        crate::cartan::Realization::SimpleBasis => {
            RootVector::new(vec![target.clone(); n], cl.realization)
        }
        crate::cartan::Realization::Ambient => {
            // Minimum-norm exact solution of ⟨v, α_i⟩ = 1/h, i = 1..n.
            let d = cl.ambient_dim;
            let a = Matrix::from_fn(n, d, |r, c| cl.alpha(r + 1).coords[c].clone());
            let at = a.transpose();
            let gram = &a * &at;
            let inv = gram.inverse().expect("simple roots are independent");
            let sol = &at * &inv;
            let coords = (0..d)
                .map(|r| {
                    let mut acc = Rat::zero();
                    for k in 0..n {
                        acc += sol[(r, k)].clone() * target.clone();
                    }
                    acc
                })
                .collect();
            RootVector::new(coords, cl.realization)
        }
    };
    let point = Level1Point {
        classical,
        level: Rat::one(),
    };
    for i in 0..=n {
        debug_assert_eq!(pair_affine_root(cl, &point, i), target);
    }
    point
}

/// Reduced word for an affine element by greedy wall-crossing: while
/// g ≠ 1, left-multiply by the smallest s_i whose wall has g(ρ_A)
/// strictly on the negative side.
pub fn affine_reduced_word(
    affine: &AffineCartanDatum,
    table: &GroupTable,
    g: &AffineElement,
) -> Result<Vec<usize>, AlcoveError> {
    let cl = &table.datum;
    let rho_a = fundamental_alcove_point(affine, cl);
    let norm1: i64 = g.translation.iter().map(|c| c.abs()).sum();
    let cap = 10 * (norm1 as usize + 1) * (table.size() + 1);
    let mut word = Vec::new();
    let mut cur = g.clone();
    for _ in 0..cap {
        if cur.is_identity() {
            return Ok(word);
        }
        let image = cur.apply(table, &rho_a);
        let i = (0..=cl.rank)
            .find(|&i| pair_affine_root(cl, &image, i).is_negative())
            .ok_or(AlcoveError::NonTerminating(cap))?;
        cur = cur.left_simple(table, i);
        word.push(i);
    }
    if cur.is_identity() {
        Ok(word)
    } else {
        Err(AlcoveError::NonTerminating(cap))
    }
}

/// Crossing signs of a walk starting at the fundamental alcove:
/// ε_k = +1 iff i_k is an affine descent of cl(s_{i_1}⋯s_{i_{k−1}}).
pub fn crossing_signs(table: &GroupTable, word: &[usize]) -> Vec<i8> {
    let mut signs = Vec::with_capacity(word.len());
    let mut u = table.identity();
    for &i in word {
        signs.push(if level0::is_affine_descent(table, u, i) { 1 } else { -1 });
        u = level0::level0_s(table, u, i);
    }
    signs
}

/// Pick rule for greedy descents in translation walks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DescentPick {
    Smallest,
    Largest,
}

/// Alcove walk from A to t_λ(A), with crossing signs.
pub fn translation_walk(
    affine: &AffineCartanDatum,
    table: &GroupTable,
    lambda: &[i64],
    pick: DescentPick,
) -> Result<AlcoveWalk, AlcoveError> {
    let g = AffineElement::translation(lambda.to_vec());
    let word = match pick {
        DescentPick::Smallest => affine_reduced_word(affine, table, &g)?,
        DescentPick::Largest => affine_reduced_word_by(affine, table, &g, true)?,
    };
    let signs = crossing_signs(table, &word);
    Ok(AlcoveWalk { word, signs })
}

fn affine_reduced_word_by(
    affine: &AffineCartanDatum,
    table: &GroupTable,
    g: &AffineElement,
    largest: bool,
) -> Result<Vec<usize>, AlcoveError> {
    let cl = &table.datum;
    let rho_a = fundamental_alcove_point(affine, cl);
    let norm1: i64 = g.translation.iter().map(|c| c.abs()).sum();
    let cap = 10 * (norm1 as usize + 1) * (table.size() + 1);
    let mut word = Vec::new();
    let mut cur = g.clone();
    for _ in 0..cap {
        if cur.is_identity() {
            return Ok(word);
        }
        let image = cur.apply(table, &rho_a);
        let mut found = None;
        let indices: Vec<usize> = if largest {
            (0..=cl.rank).rev().collect()
        } else {
            (0..=cl.rank).collect()
        };
        for i in indices {
            if pair_affine_root(cl, &image, i).is_negative() {
                found = Some(i);
                break;
            }
        }
        let i = found.ok_or(AlcoveError::NonTerminating(cap))?;
        cur = cur.left_simple(table, i);
        word.push(i);
    }
    if cur.is_identity() {
        Ok(word)
    } else {
        Err(AlcoveError::NonTerminating(cap))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{build_affine_datum, Family};
    use crate::weyl::enumerate_group;

    fn setup(fam: Family, rank: usize) -> (AffineCartanDatum, GroupTable) {
        let affine = build_affine_datum(fam, rank).unwrap();
        let table = enumerate_group(&affine.classical(), None).unwrap();
        (affine, table)
    }

    #[test]
    fn affine_apply_examples() {
        let (affine, table) = setup(Family::A, 2);
        let cl = &table.datum;
        let rho_a = fundamental_alcove_point(&affine, cl);
        // Identity fixes everything.
        let id = AffineElement::identity(2);
        assert_eq!(id.apply(&table, &rho_a), rho_a);
        // t_{α_1^∨} shifts by α_1^∨ at level 1.
        let t = AffineElement::translation(vec![1, 0]);
        let moved = t.apply(&table, &rho_a);
        assert_eq!(moved.level, rho_a.level);
        assert_eq!(
            moved.classical,
            rho_a.classical.add(cl.alpha_vee(1))
        );
        // s_0 keeps the level and flips the sign of the α_0-pairing.
        let s0 = AffineElement::simple_reflection(&table, 0);
        let refl = s0.apply(&table, &rho_a);
        assert_eq!(refl.level, rho_a.level);
        assert_eq!(
            pair_affine_root(cl, &refl, 0),
            -pair_affine_root(cl, &rho_a, 0)
        );
    }

    #[test]
    fn affine_generators_are_involutions() {
        for (fam, rank) in [(Family::A, 2), (Family::C, 2), (Family::G, 2)] {
            let (_, table) = setup(fam, rank);
            for i in 0..=rank {
                let s = AffineElement::simple_reflection(&table, i);
                assert!(s.mul(&table, &s).is_identity(), "{fam}{rank} s_{i}");
            }
        }
    }

    #[test]
    fn composition_law_against_rank1_geometry() {
        // In A1 affine, t_{α_1^∨} = s_1 s_0 (or s_0 s_1 depending on
        // orientation); verify the semidirect composition reproduces
        // the translation action on points.
        let (affine, table) = setup(Family::A, 1);
        let cl = &table.datum;
        let s0 = AffineElement::simple_reflection(&table, 0);
        let s1 = AffineElement::simple_reflection(&table, 1);
        let prod = s1.mul(&table, &s0);
        let rho_a = fundamental_alcove_point(&affine, cl);
        let image = prod.apply(&table, &rho_a);
        // s1·s0 is a translation: trivial finite part.
        assert_eq!(prod.finite, table.identity());
        let lam = coroot_combination(cl, &prod.translation);
        assert_eq!(image.classical, rho_a.classical.add(&lam));
    }

    #[test]
    fn affine_reduced_word_examples() {
        let (affine, table) = setup(Family::A, 1);
        assert!(affine_reduced_word(&affine, &table, &AffineElement::identity(1))
            .unwrap()
            .is_empty());
        let word = affine_reduced_word(&affine, &table, &AffineElement::translation(vec![1]))
            .unwrap();
        assert_eq!(word.len(), 2, "translation by α_1^∨ crosses two walls");
        assert!(word == vec![1, 0] || word == vec![0, 1]);
    }

    #[test]
    fn translation_walk_length_is_twice_height_for_dominant() {
        // For dominant λ the number of separating hyperplanes is
        // Σ_{α>0} ⟨λ,α⟩ = 2·ht(λ) only in rank-1; in general compare
        // against the brute-force separating count.
        let (affine, table) = setup(Family::C, 2);
        let walk = translation_walk(&affine, &table, &[1, 1], DescentPick::Smallest).unwrap();
        let oracle = separating_hyperplanes(&affine, &table, &[1, 1]);
        assert_eq!(walk.word.len(), oracle);
    }

    /// Brute-force count of affine hyperplanes separating ρ_A from
    /// t_λ(ρ_A): for each positive classical root, integers strictly
    /// between the two pairings.
    fn separating_hyperplanes(
        affine: &AffineCartanDatum,
        table: &GroupTable,
        lambda: &[i64],
    ) -> usize {
        let cl = &table.datum;
        let rho_a = fundamental_alcove_point(affine, cl);
        let g = AffineElement::translation(lambda.to_vec());
        let moved = g.apply(&table, &rho_a);
        positive_roots(table)
            .iter()
            .map(|alpha| {
                let a = rho_a.classical.pair(alpha);
                let b = moved.classical.pair(alpha);
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                let lo = lo.ceil().to_integer();
                let hi = hi.floor().to_integer();
                let mut count = 0usize;
                let mut m = lo;
                while m <= hi {
                    count += 1;
                    m += num_bigint::BigInt::from(1);
                }
                count
            })
            .sum()
    }

    fn positive_roots(table: &GroupTable) -> Vec<RootVector> {
        let cl = &table.datum;
        let mut seen = std::collections::BTreeSet::new();
        // Saturate the simple roots under the dual number game
        // s_i(y) = y − ⟨α_i^∨, y⟩ α_i and keep the positive ones.
        let mut frontier: Vec<RootVector> = (1..=cl.rank).map(|i| cl.alpha(i).clone()).collect();
        let mut all: std::collections::BTreeSet<RootVector> = frontier.iter().cloned().collect();
        while let Some(y) = frontier.pop() {
            for i in 1..=cl.rank {
                let c = cl.alpha_vee(i).pair(&y);
                let img = y.sub(&cl.alpha(i).scale(&c));
                if all.insert(img.clone()) {
                    frontier.push(img);
                }
            }
        }
        for y in &all {
            if cl.root_is_positive(y) {
                seen.insert(y.clone());
            }
        }
        seen.into_iter().collect()
    }

    #[test]
    fn walk_length_matches_hyperplane_count_rank_le_2() {
        for (fam, rank) in [(Family::A, 1), (Family::A, 2), (Family::C, 2), (Family::G, 2)] {
            let (affine, table) = setup(fam, rank);
            let boxes: Vec<Vec<i64>> = lattice_box(rank, 2);
            for lam in boxes {
                let walk =
                    translation_walk(&affine, &table, &lam, DescentPick::Smallest).unwrap();
                let oracle = separating_hyperplanes(&affine, &table, &lam);
                assert_eq!(walk.word.len(), oracle, "{fam}{rank} λ={lam:?}");
            }
        }
    }

    fn lattice_box(rank: usize, radius: i64) -> Vec<Vec<i64>> {
        let mut out = vec![vec![]];
        for _ in 0..rank {
            let mut next = Vec::new();
            for v in &out {
                for c in -radius..=radius {
                    let mut w = v.clone();
                    w.push(c);
                    next.push(w);
                }
            }
            out = next;
        }
        out
    }

    #[test]
    fn height_bridge_small() {
        // ½Σε_k over the translation walk equals ⟨λ, ρ̊⟩.
        let (affine, table) = setup(Family::A, 2);
        for lam in lattice_box(2, 2) {
            let walk = translation_walk(&affine, &table, &lam, DescentPick::Smallest).unwrap();
            let total: i64 = walk.signs.iter().map(|&s| s as i64).sum();
            assert_eq!(total, 2 * height(&lam), "λ={lam:?}");
        }
    }

    #[test]
    fn crossing_sign_examples() {
        let (_, table) = setup(Family::A, 2);
        assert!(crossing_signs(&table, &[]).is_empty());
        assert_eq!(crossing_signs(&table, &[1]), vec![-1]);
        assert_eq!(crossing_signs(&table, &[2]), vec![-1]);
        assert_eq!(crossing_signs(&table, &[0]), vec![1]);
    }

    #[test]
    fn translation_walks_have_trivial_classical_part() {
        let (affine, table) = setup(Family::C, 2);
        for lam in lattice_box(2, 1) {
            let walk = translation_walk(&affine, &table, &lam, DescentPick::Smallest).unwrap();
            for w in table.elements() {
                let mut u = w;
                for &i in &walk.word {
                    u = level0::level0_s(&table, u, i);
                }
                assert_eq!(u, w, "cl kills translations");
            }
        }
    }

    #[test]
    fn fundamental_point_is_interior_level_one() {
        for (fam, rank) in [(Family::A, 3), (Family::B, 3), (Family::G, 2)] {
            let (affine, table) = setup(fam, rank);
            let p = fundamental_alcove_point(&affine, &table.datum);
            assert!(p.level.is_one());
            for i in 0..=rank {
                assert!(pair_affine_root(&table.datum, &p, i).is_positive());
            }
            assert_eq!(p.classical.realization, table.datum.realization);
        }
    }
}
