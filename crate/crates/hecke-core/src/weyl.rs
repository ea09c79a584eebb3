//! The finite Weyl group: enumeration, descents, lengths, reduced
//! words, and the 0-Hecke projections on the geometric realization.
//!
//! Elements are fingerprinted by their action on the regular dominant
//! point ρ^∨; since ρ^∨ is regular, the orbit map is injective. The
//! group is enumerated breadth-first by right multiplication, layers
//! sorted by fingerprint, so indices form a deterministic linear
//! extension of the Bruhat order by (length, fingerprint).
//!
//! Elements print as signed one-line words for the ambient types. The
//! label is read off the fingerprint of the *inverse*: with that
//! convention the right 0-Hecke action on elements is literally the
//! bubble-antisort of the printed word, matching the usual pictures.

use std::collections::{BTreeMap, HashMap};

use num_traits::Signed;

use crate::cartan::{ClassicalDatum, Realization, RootVector};
use crate::exactmath::{rat, Matrix, Rat};

/// Index of a Weyl group element in its [`GroupTable`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElemId(pub u32);

impl ElemId {
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeylError {
    #[error("group larger than the configured cap of {0} elements")]
    GroupTooLarge(usize),
    #[error("not an element label of this group: {0}")]
    BadElement(String),
}

/// Default cap on group enumeration.
pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Fully tabulated finite Weyl group.
#[derive(Debug, Clone)]
pub struct GroupTable {
    pub datum: ClassicalDatum,
    /// Base point ρ^∨ of the fingerprinting orbit.
    pub rho: RootVector,
    fingerprints: Vec<RootVector>,
    /// Linear action of each element on the coweight side.
    mats: Vec<Matrix<Rat>>,
    right: Vec<Vec<u32>>,
    inv: Vec<u32>,
    length: Vec<u32>,
    dr: Vec<u32>,
    dl: Vec<u32>,
    w0: u32,
    index: HashMap<Vec<Rat>, u32>,
}

/// Enumerate the group by BFS from the identity, generators in index
/// order, layer ties broken by fingerprint lexicographic order.
pub fn enumerate_group(datum: &ClassicalDatum, cap: Option<usize>) -> Result<GroupTable, WeylError> {
    let cap = cap.unwrap_or(DEFAULT_GROUP_CAP);
    let n = datum.rank;
    let d = datum.ambient_dim;
    let rho = crate::cartan::rho_vee(datum);

    // Generator matrices: columns are s_i(e_j).
    let gen_mats: Vec<Matrix<Rat>> = (1..=n)
        .map(|i| {
            Matrix::from_fn(d, d, |r, c| {
                let mut e = vec![Rat::from_integer(0.into()); d];
                e[c] = rat(1);
                let col = datum.act_simple(&RootVector::new(e, datum.realization), i);
                col.coords[r].clone()
            })
        })
        .collect();

    let mut fingerprints: Vec<RootVector> = vec![rho.clone()];
    let mut mats: Vec<Matrix<Rat>> = vec![Matrix::identity(d)];
    let mut length: Vec<u32> = vec![0];
    let mut index: HashMap<Vec<Rat>, u32> = HashMap::new();
    index.insert(rho.coords.clone(), 0);
    let mut right: Vec<Vec<u32>> = Vec::new();

    let mut layer: Vec<u32> = vec![0];
    let mut depth = 0u32;
    while !layer.is_empty() {
        depth += 1;
        // Discover the next layer deterministically.
        let mut pending: BTreeMap<Vec<Rat>, Matrix<Rat>> = BTreeMap::new();
        for &w in &layer {
            for g in &gen_mats {
                let m = &mats[w as usize] * g;
                let f = m.apply_cols(&rho.coords);
                if !index.contains_key(&f) && !pending.contains_key(&f) {
                    pending.insert(f, m);
                }
            }
        }
        let mut next_layer = Vec::new();
        for (f, m) in pending {
            let id = fingerprints.len() as u32;
            if fingerprints.len() >= cap {
                return Err(WeylError::GroupTooLarge(cap));
            }
            index.insert(f.clone(), id);
            fingerprints.push(RootVector::new(f, datum.realization));
            mats.push(m);
            length.push(depth);
            next_layer.push(id);
        }
        layer = next_layer;
    }

    let size = fingerprints.len();
    // Right multiplication table.
    right.resize(size, vec![0; n]);
    for w in 0..size {
        for (i, g) in gen_mats.iter().enumerate() {
            let m = &mats[w] * g;
            let f = m.apply_cols(&rho.coords);
            right[w][i] = *index.get(&f).expect("closed under generators");
        }
    }
    // Inverses by replaying reversed reduced words.
    let mut inv: Vec<u32> = vec![0; size];
    for w in 0..size {
        let mut u = w as u32;
        let mut acc = 0u32;
        // Strip right descents; accumulate the inverse as we go:
        // if w = v s_i then w^{-1} = s_i v^{-1}.
        let mut word = Vec::new();
        while length[u as usize] > 0 {
            let i = (0..n)
                .find(|&i| length[right[u as usize][i] as usize] < length[u as usize])
                .expect("non-identity elements have a descent");
            word.push(i);
            u = right[u as usize][i];
        }
        for &i in word.iter() {
            acc = right[acc as usize][i];
        }
        inv[w] = acc;
    }
    // Descents.
    let mut dr = vec![0u32; size];
    let mut dl = vec![0u32; size];
    for w in 0..size {
        for i in 0..n {
            if length[right[w][i] as usize] < length[w] {
                dr[w] |= 1 << i;
            }
        }
    }
    for w in 0..size {
        dl[w] = dr[inv[w] as usize];
    }
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let w0s: Vec<u32> = (0..size as u32).filter(|&w| dr[w as usize] == full).collect();
    assert_eq!(w0s.len(), 1, "unique maximal element");
    let w0 = w0s[0];

    Ok(GroupTable {
        datum: datum.clone(),
        rho,
        fingerprints,
        mats,
        right,
        inv,
        length,
        dr,
        dl,
        w0,
        index,
    })
}

impl GroupTable {
    pub fn size(&self) -> usize {
        self.fingerprints.len()
    }

    pub fn rank(&self) -> usize {
        self.datum.rank
    }

    pub fn identity(&self) -> ElemId {
        ElemId(0)
    }

    pub fn w0(&self) -> ElemId {
        ElemId(self.w0)
    }

    pub fn elements(&self) -> impl Iterator<Item = ElemId> {
        (0..self.size() as u32).map(ElemId)
    }

    pub fn fingerprint(&self, w: ElemId) -> &RootVector {
        &self.fingerprints[w.idx()]
    }

    pub fn length(&self, w: ElemId) -> usize {
        self.length[w.idx()] as usize
    }

    pub fn inverse(&self, w: ElemId) -> ElemId {
        ElemId(self.inv[w.idx()])
    }

    /// w · s_i for a classical generator index 1..=n.
    pub fn right(&self, w: ElemId, i: usize) -> ElemId {
        ElemId(self.right[w.idx()][i - 1])
    }

    /// s_i · w.
    pub fn left(&self, i: usize, w: ElemId) -> ElemId {
        let f = self.datum.act_simple(self.fingerprint(w), i);
        self.element_by_fingerprint(&f).expect("orbit is closed")
    }

    /// Product u·v.
    pub fn mul(&self, u: ElemId, v: ElemId) -> ElemId {
        let f = self.mats[u.idx()].apply_cols(&self.fingerprint(v).coords);
        ElemId(*self.index.get(&f).expect("group is closed"))
    }

    /// Apply the element to an arbitrary coweight-side vector.
    pub fn apply(&self, w: ElemId, x: &RootVector) -> RootVector {
        RootVector::new(self.mats[w.idx()].apply_cols(&x.coords), x.realization)
    }

    pub fn element_by_fingerprint(&self, f: &RootVector) -> Option<ElemId> {
        self.index.get(&f.coords).copied().map(ElemId)
    }

    /// Descent set as a bitmask over classical indices (bit i−1 ⇔ i).
    pub fn descent_mask(&self, w: ElemId, side: Side) -> u32 {
        match side {
            Side::Right => self.dr[w.idx()],
            Side::Left => self.dl[w.idx()],
        }
    }

    pub fn has_descent(&self, w: ElemId, i: usize, side: Side) -> bool {
        self.descent_mask(w, side) & (1 << (i - 1)) != 0
    }

    pub fn descents(&self, w: ElemId, side: Side) -> Vec<usize> {
        (1..=self.rank())
            .filter(|&i| self.has_descent(w, i, side))
            .collect()
    }

    /// Reduced word by greedy descent stripping, smallest descent
    /// first; deterministic.
    pub fn reduced_word(&self, w: ElemId) -> Vec<usize> {
        let mut suffix = Vec::with_capacity(self.length(w));
        let mut u = w;
        while self.length(u) > 0 {
            let i = (1..=self.rank())
                .find(|&i| self.has_descent(u, i, Side::Right))
                .expect("non-identity element has a right descent");
            suffix.push(i);
            u = self.right(u, i);
        }
        suffix.reverse();
        suffix
    }

    /// The reflection s_β for a root/coroot pair, as a group element.
    pub fn reflection(&self, beta: &RootVector, beta_vee: &RootVector) -> ElemId {
        let f = self.datum.reflect(&self.rho, beta, beta_vee);
        self.element_by_fingerprint(&f)
            .expect("reflections lie in the group")
    }

    /// Printable label: signed one-line word for ambient types, reduced
    /// word for the generic realization. Read from the inverse
    /// fingerprint so that the right 0-Hecke action sorts the label.
    pub fn label(&self, w: ElemId) -> String {
        match self.datum.realization {
            Realization::Ambient => {
                let y = self.fingerprint(self.inverse(w));
                one_line_from_orbit_point(&self.datum, y)
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            }
            Realization::SimpleBasis => {
                if self.length(w) == 0 {
                    "e".to_string()
                } else {
                    self.reduced_word(w)
                        .iter()
                        .map(|i| i.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                }
            }
        }
    }

    /// Parse a signed one-line label back to an element (ambient
    /// realizations only).
    pub fn parse_label(&self, s: &str) -> Result<ElemId, WeylError> {
        if self.datum.realization != Realization::Ambient {
            return Err(WeylError::BadElement(
                "one-line labels exist only for ambient types".into(),
            ));
        }
        let d = self.datum.ambient_dim;
        let vals: Vec<i64> = s
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|_| WeylError::BadElement(s.to_string()))?;
        if vals.len() != d {
            return Err(WeylError::BadElement(format!(
                "expected {d} entries, got {}",
                vals.len()
            )));
        }
        let y = orbit_point_from_one_line(&self.datum, &vals)
            .ok_or_else(|| WeylError::BadElement(s.to_string()))?;
        let inv = self
            .element_by_fingerprint(&y)
            .ok_or_else(|| WeylError::BadElement(s.to_string()))?;
        Ok(self.inverse(inv))
    }
}

/// Label letters from an orbit point of ρ^∨ (ambient realizations).
pub fn one_line_from_orbit_point(datum: &ClassicalDatum, y: &RootVector) -> Vec<i64> {
    let d = datum.ambient_dim;
    y.coords
        .iter()
        .map(|c| {
            assert!(c.is_integer(), "orbit points of ρ^∨ are integral");
            let v = i64::try_from(c.to_integer()).expect("small coordinates");
            match datum.family {
                crate::cartan::Family::A => (d as i64 + 1) - v,
                _ => {
                    let sign = if v < 0 { -1 } else { 1 };
                    sign * ((d as i64 + 1) - v.abs())
                }
            }
        })
        .collect()
}

fn orbit_point_from_one_line(datum: &ClassicalDatum, vals: &[i64]) -> Option<RootVector> {
    let d = datum.ambient_dim as i64;
    let mut coords = Vec::with_capacity(vals.len());
    for &v in vals {
        if v == 0 || v.abs() > d {
            return None;
        }
        let c = match datum.family {
            crate::cartan::Family::A => {
                if v < 0 {
                    return None;
                }
                d + 1 - v
            }
            _ => {
                let sign = if v < 0 { -1 } else { 1 };
                sign * (d + 1 - v.abs())
            }
        };
        coords.push(rat(c));
    }
    Some(RootVector::new(coords, Realization::Ambient))
}

/// The 0-Hecke projection π_α on the coweight side: reflect across the
/// wall when strictly on its positive side, fix otherwise. With
/// `barred`, the mirror projection onto the positive half-space.
pub fn project_pi(
    datum: &ClassicalDatum,
    x: &RootVector,
    alpha: &RootVector,
    alpha_vee: &RootVector,
    barred: bool,
) -> RootVector {
    let c = x.pair(alpha);
    let moves = if barred { c.is_negative() } else { c.is_positive() };
    if moves {
        datum.reflect(x, alpha, alpha_vee)
    } else {
        x.clone()
    }
}

impl Matrix<Rat> {
    /// Matrix times column vector, returned as coordinates.
    pub fn apply_cols(&self, x: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols(), x.len());
        let mut out = vec![Rat::from_integer(0.into()); self.rows()];
        for (i, o) in out.iter_mut().enumerate() {
            let mut acc = Rat::from_integer(0.into());
            for (j, xj) in x.iter().enumerate() {
                if !num_traits::Zero::is_zero(xj) && !num_traits::Zero::is_zero(&self[(i, j)]) {
                    acc += self[(i, j)].clone() * xj.clone();
                }
            }
            *o = acc;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{build_affine_datum, Family};

    fn group(fam: Family, rank: usize) -> GroupTable {
        enumerate_group(&build_affine_datum(fam, rank).unwrap().classical(), None).unwrap()
    }

    #[test]
    fn group_orders() {
        assert_eq!(group(Family::A, 2).size(), 6);
        assert_eq!(group(Family::C, 2).size(), 8);
        assert_eq!(group(Family::B, 3).size(), 48);
        assert_eq!(group(Family::D, 4).size(), 192);
        assert_eq!(group(Family::G, 2).size(), 12);
    }

    #[test]
    fn a2_w0_fingerprint() {
        let g = group(Family::A, 2);
        assert_eq!(
            g.fingerprint(g.w0()),
            &RootVector::from_ints(&[1, 2, 3], Realization::Ambient)
        );
    }

    #[test]
    fn act_simple_examples() {
        let a2 = build_affine_datum(Family::A, 2).unwrap().classical();
        let x = RootVector::from_ints(&[3, 2, 1], Realization::Ambient);
        assert_eq!(
            a2.act_simple(&x, 1),
            RootVector::from_ints(&[2, 3, 1], Realization::Ambient)
        );
        let c2 = build_affine_datum(Family::C, 2).unwrap().classical();
        let x = RootVector::from_ints(&[2, 1], Realization::Ambient);
        assert_eq!(
            c2.act_simple(&x, 2),
            RootVector::from_ints(&[2, -1], Realization::Ambient)
        );
        // Fixed hyperplane.
        let y = RootVector::from_ints(&[1, 1, 0], Realization::Ambient);
        assert_eq!(a2.act_simple(&y, 1), y);
        // Involutive.
        let z = RootVector::from_ints(&[5, -2, 7], Realization::Ambient);
        assert_eq!(a2.act_simple(&a2.act_simple(&z, 2), 2), z);
    }

    #[test]
    fn project_pi_examples() {
        let a2 = build_affine_datum(Family::A, 2).unwrap().classical();
        let x = RootVector::from_ints(&[3, 2, 1], Realization::Ambient);
        let once = project_pi(&a2, &x, a2.alpha(1), a2.alpha_vee(1), false);
        assert_eq!(once, RootVector::from_ints(&[2, 3, 1], Realization::Ambient));
        let twice = project_pi(&a2, &once, a2.alpha(1), a2.alpha_vee(1), false);
        assert_eq!(twice, once, "idempotent");
        // Image lies in the closed negative half-space.
        assert!(!once.pair(a2.alpha(1)).is_positive());

        let c2 = build_affine_datum(Family::C, 2).unwrap().classical();
        let y = RootVector::from_ints(&[2, 1], Realization::Ambient);
        assert_eq!(
            project_pi(&c2, &y, c2.alpha(2), c2.alpha_vee(2), false),
            RootVector::from_ints(&[2, -1], Realization::Ambient)
        );

        // The barred projection mirrors the first example.
        let back = project_pi(&a2, &once, a2.alpha(1), a2.alpha_vee(1), true);
        assert_eq!(back, x);
    }

    #[test]
    fn pi_projection_algebra_on_fingerprints() {
        // π π̄ π = π and π̄ π π̄ = π̄ on the whole orbit.
        for (fam, rank) in [(Family::A, 2), (Family::C, 2), (Family::G, 2)] {
            let g = group(fam, rank);
            let d = &g.datum;
            for w in g.elements() {
                let x = g.fingerprint(w);
                for i in 1..=rank {
                    let (a, av) = (d.alpha(i), d.alpha_vee(i));
                    let pi = |v: &RootVector| project_pi(d, v, a, av, false);
                    let bar = |v: &RootVector| project_pi(d, v, a, av, true);
                    assert_eq!(pi(&bar(&pi(x))), pi(x));
                    assert_eq!(bar(&pi(&bar(x))), bar(x));
                }
            }
        }
    }

    #[test]
    fn braid_relations_on_fingerprints() {
        for (fam, rank) in [(Family::A, 3), (Family::B, 3), (Family::C, 2), (Family::G, 2)] {
            let aff = build_affine_datum(fam, rank).unwrap();
            let g = group(fam, rank);
            for i in 1..=rank {
                for j in (i + 1)..=rank {
                    let m = aff.braid_order(i, j).expect("finite type");
                    for w in g.elements() {
                        let mut a = w;
                        let mut b = w;
                        for k in 0..m {
                            a = g.right(a, if k % 2 == 0 { i } else { j });
                            b = g.right(b, if k % 2 == 0 { j } else { i });
                        }
                        assert_eq!(a, b, "{fam}{rank} braid ({i},{j})");
                    }
                }
            }
        }
    }

    #[test]
    fn reduced_words() {
        let g = group(Family::A, 2);
        assert!(g.reduced_word(g.identity()).is_empty());
        assert_eq!(g.reduced_word(g.w0()), vec![1, 2, 1]);
        for i in 1..=2 {
            let s = g.right(g.identity(), i);
            assert_eq!(g.reduced_word(s), vec![i]);
        }
        // Words multiply back and have length ℓ(w).
        for w in g.elements() {
            let word = g.reduced_word(w);
            assert_eq!(word.len(), g.length(w));
            let mut u = g.identity();
            for i in word {
                u = g.right(u, i);
            }
            assert_eq!(u, w);
        }
    }

    #[test]
    fn descent_examples() {
        let g = group(Family::A, 2);
        assert_eq!(g.descent_mask(g.identity(), Side::Left), 0);
        assert_eq!(g.descent_mask(g.identity(), Side::Right), 0);
        assert_eq!(g.descents(g.w0(), Side::Left), vec![1, 2]);
        assert_eq!(g.descents(g.w0(), Side::Right), vec![1, 2]);
        // s1·s2 (reduced word [1,2]): dr = {2}, dl = {1}.
        let w = g.right(g.right(g.identity(), 1), 2);
        assert_eq!(g.descents(w, Side::Right), vec![2]);
        assert_eq!(g.descents(w, Side::Left), vec![1]);
    }

    #[test]
    fn descent_pairing_characterization() {
        // i ∈ D_R(w) ⇔ ⟨w^{-1}(ρ^∨), α_i⟩ < 0, in every realization.
        for (fam, rank) in [(Family::A, 3), (Family::C, 2), (Family::G, 2)] {
            let g = group(fam, rank);
            for w in g.elements() {
                let y = g.fingerprint(g.inverse(w));
                for i in 1..=rank {
                    let lhs = g.has_descent(w, i, Side::Right);
                    let rhs = y.pair(g.datum.alpha(i)).is_negative();
                    assert_eq!(lhs, rhs, "{fam}{rank}");
                }
            }
        }
    }

    #[test]
    fn group_structure_sanity() {
        for (fam, rank) in [(Family::A, 2), (Family::B, 3), (Family::G, 2)] {
            let g = group(fam, rank);
            let n = g.rank();
            let w0len = g.length(g.w0());
            let mut no_descents = 0;
            for w in g.elements() {
                // Involution and permutation facts about the right table.
                for i in 1..=n {
                    assert_eq!(g.right(g.right(w, i), i), w);
                    let diff =
                        (g.length(g.right(w, i)) as i64 - g.length(w) as i64).abs();
                    assert_eq!(diff, 1);
                }
                // dl(w) = dr(w^{-1}).
                assert_eq!(
                    g.descent_mask(w, Side::Left),
                    g.descent_mask(g.inverse(w), Side::Right)
                );
                // Inverses multiply to the identity.
                assert_eq!(g.mul(w, g.inverse(w)), g.identity());
                // ℓ(w) + ℓ(w·w0) = ℓ(w0).
                assert_eq!(g.length(w) + g.length(g.mul(w, g.w0())), w0len);
                if g.descent_mask(w, Side::Right) == 0 {
                    no_descents += 1;
                }
            }
            assert_eq!(no_descents, 1, "only the identity is descent-free");
        }
    }

    #[test]
    fn labels_round_trip_and_match_convention() {
        let g = group(Family::A, 2);
        assert_eq!(g.label(g.identity()), "1,2,3");
        assert_eq!(g.label(g.w0()), "3,2,1");
        for w in g.elements() {
            let lab = g.label(w);
            assert_eq!(g.parse_label(&lab).unwrap(), w);
        }
        let c2 = group(Family::C, 2);
        assert_eq!(c2.label(c2.identity()), "1,2");
        assert_eq!(c2.label(c2.w0()), "-1,-2");
        for w in c2.elements() {
            let lab = c2.label(w);
            assert_eq!(c2.parse_label(&lab).unwrap(), w);
        }
    }

    #[test]
    fn enumeration_is_length_sorted() {
        let g = group(Family::B, 3);
        for w in 0..g.size() - 1 {
            let (a, b) = (ElemId(w as u32), ElemId(w as u32 + 1));
            assert!(
                g.length(a) < g.length(b)
                    || (g.length(a) == g.length(b) && g.fingerprint(a) < g.fingerprint(b))
            );
        }
    }
}
