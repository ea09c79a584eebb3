//! Affine Cartan/Dynkin data for the untwisted families and their
//! classical sub-data.
//!
//! Each supported family carries a hard-coded affine Cartan matrix with
//! marks and comarks (the canonical annihilators of columns and rows),
//! plus an explicit realization of the classical root/coroot system:
//! ambient coordinates for A/B/C/D (signed permutation groups), the
//! simple-basis number game for G2.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::exactmath::{rat, Matrix, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    G,
}

impl std::str::FromStr for Family {
    type Err = CartanError;
    fn from_str(s: &str) -> Result<Self, CartanError> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "G" => Ok(Family::G),
            other => Err(CartanError::UnsupportedType(format!("unknown family {other:?}"))),
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::G => "G",
        };
        write!(f, "{c}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CartanError {
    #[error("unsupported type: {0}")]
    UnsupportedType(String),
}

/// Which coordinates a vector is expressed in.
///
/// `Ambient`: coordinates on the ε-basis of Q^d, both for roots and
/// coweights (types A/B/C/D). `SimpleBasis`: root-side vectors on the
/// simple-root basis, coweight-side vectors on the fundamental-coweight
/// basis; the pairing is the dot product in both realizations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Realization {
    Ambient,
    SimpleBasis,
}

/// An exact-rational vector in the chosen realization.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVector {
    pub coords: Vec<Rat>,
    pub realization: Realization,
}

impl RootVector {
    pub fn new(coords: Vec<Rat>, realization: Realization) -> Self {
        Self { coords, realization }
    }

    pub fn from_ints(coords: &[i64], realization: Realization) -> Self {
        Self::new(coords.iter().map(|&c| rat(c)).collect(), realization)
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Pairing of a coweight-side vector with a root-side vector.
    pub fn pair(&self, root: &RootVector) -> Rat {
        assert_eq!(self.coords.len(), root.coords.len(), "pairing dimension mismatch");
        self.coords
            .iter()
            .zip(&root.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn add(&self, other: &RootVector) -> RootVector {
        assert_eq!(self.coords.len(), other.coords.len());
        RootVector::new(
            self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
            self.realization,
        )
    }

    pub fn sub(&self, other: &RootVector) -> RootVector {
        assert_eq!(self.coords.len(), other.coords.len());
        RootVector::new(
            self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
            self.realization,
        )
    }

    pub fn scale(&self, c: &Rat) -> RootVector {
        RootVector::new(self.coords.iter().map(|x| x * c).collect(), self.realization)
    }

    pub fn neg(&self) -> RootVector {
        RootVector::new(self.coords.iter().map(|x| -x).collect(), self.realization)
    }
}

/// Affine Cartan datum for an untwisted family, indices 0..=n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AffineCartanDatum {
    pub family: Family,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub marks: Vec<i64>,
    pub comarks: Vec<i64>,
}

/// Classical (finite) sub-datum with its chosen realization.
#[derive(Debug, Clone)]
pub struct ClassicalDatum {
    pub family: Family,
    pub rank: usize,
    /// Rows/columns 1..=n of the affine Cartan matrix.
    pub cartan: Vec<Vec<i64>>,
    pub realization: Realization,
    pub ambient_dim: usize,
    /// Simple roots α_1..α_n, root-side coordinates.
    pub simple_roots: Vec<RootVector>,
    /// Simple coroots α_1^∨..α_n^∨, coweight-side coordinates.
    pub simple_coroots: Vec<RootVector>,
    /// Classical projection of α_0, equal to −θ (θ the highest root).
    pub cl_alpha0: RootVector,
    /// θ^∨ on the coweight side (classical comark combination).
    pub theta_vee: RootVector,
    /// Expansion operator: coweight-side vector ↦ coefficients on the
    /// simple-coroot basis (exact; defined on the coroot span).
    coroot_expand: Matrix<Rat>,
}

/// Build the affine Cartan matrix, marks, and comarks for a family.
pub fn build_affine_datum(family: Family, rank: usize) -> Result<AffineCartanDatum, CartanError> {
    let n = rank;
    let bounds_ok = match family {
        Family::A => n >= 1,
        // B2 coincides with C2 up to relabeling but is kept so that the
        // type-B sorting base cases have a home.
        Family::B => n >= 2,
        Family::C => n >= 2,
        Family::D => n >= 4,
        Family::G => n == 2,
    };
    if !bounds_ok {
        return Err(CartanError::UnsupportedType(format!(
            "family {family} does not support rank {n}"
        )));
    }
    let size = n + 1;
    let mut m = vec![vec![0i64; size]; size];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let chain = |m: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        m[i][j] = -1;
        m[j][i] = -1;
    };
    let (marks, comarks): (Vec<i64>, Vec<i64>) = match family {
        Family::A => {
            if n == 1 {
                m[0][1] = -2;
                m[1][0] = -2;
            } else {
                for i in 1..n {
                    chain(&mut m, i, i + 1);
                }
                chain(&mut m, 0, 1);
                chain(&mut m, 0, n);
            }
            (vec![1; size], vec![1; size])
        }
        Family::B => {
            for i in 1..n.saturating_sub(1) {
                chain(&mut m, i, i + 1);
            }
            m[n - 1][n] = -1;
            m[n][n - 1] = -2;
            if n >= 3 {
                chain(&mut m, 0, 2);
            } else {
                m[0][2] = -1;
                m[2][0] = -2;
            }
            let mut marks = vec![2; size];
            marks[0] = 1;
            marks[1] = 1;
            let mut comarks = vec![2; size];
            comarks[0] = 1;
            comarks[1] = 1;
            comarks[n] = 1;
            (marks, comarks)
        }
        Family::C => {
            for i in 1..n.saturating_sub(1) {
                chain(&mut m, i, i + 1);
            }
            m[0][1] = -1;
            m[1][0] = -2;
            m[n - 1][n] = -2;
            m[n][n - 1] = -1;
            let mut marks = vec![2; size];
            marks[0] = 1;
            marks[n] = 1;
            (marks, vec![1; size])
        }
        Family::D => {
            for i in 1..n - 1 {
                chain(&mut m, i, i + 1);
            }
            m[n - 1][n] = 0;
            m[n][n - 1] = 0;
            chain(&mut m, n - 2, n);
            chain(&mut m, 0, 2);
            let mut marks = vec![2; size];
            marks[0] = 1;
            marks[1] = 1;
            marks[n - 1] = 1;
            marks[n] = 1;
            (marks.clone(), marks)
        }
        Family::G => {
            m[0][1] = -1;
            m[1][0] = -1;
            m[1][2] = -1;
            m[2][1] = -3;
            (vec![1, 2, 3], vec![1, 2, 1])
        }
    };
    let datum = AffineCartanDatum {
        family,
        rank,
        cartan: m,
        marks,
        comarks,
    };
    datum.validate();
    Ok(datum)
}

impl AffineCartanDatum {
    /// Check the structural invariants; the tables are hard-coded, so a
    /// failure here is a table bug.
    fn validate(&self) {
        let size = self.rank + 1;
        for i in 0..size {
            assert_eq!(self.cartan[i][i], 2, "diagonal entry");
            for j in 0..size {
                if i != j {
                    assert!(self.cartan[i][j] <= 0, "off-diagonal sign");
                    assert_eq!(
                        self.cartan[i][j] == 0,
                        self.cartan[j][i] == 0,
                        "zero symmetry"
                    );
                }
            }
        }
        for j in 0..size {
            let col: i64 = (0..size).map(|i| self.cartan[i][j] * self.marks[i]).sum();
            let _ = col;
        }
        for i in 0..size {
            let row: i64 = (0..size).map(|j| self.cartan[i][j] * self.marks[j]).sum();
            assert_eq!(row, 0, "marks must annihilate the columns (row {i})");
        }
        for j in 0..size {
            let col: i64 = (0..size).map(|i| self.comarks[i] * self.cartan[i][j]).sum();
            assert_eq!(col, 0, "comarks must annihilate the rows (column {j})");
        }
        let gcd = self.marks.iter().fold(0i64, |g, &a| num_integer::gcd(g, a));
        assert_eq!(gcd, 1, "marks must be primitive");
        assert_eq!(self.marks[0], 1, "a_0 = 1 for untwisted types");
    }

    /// Braid order m(i, j) between two affine nodes; `None` encodes the
    /// infinite bond (A1 affine).
    pub fn braid_order(&self, i: usize, j: usize) -> Option<usize> {
        match self.cartan[i][j] * self.cartan[j][i] {
            0 => Some(2),
            1 => Some(3),
            2 => Some(4),
            3 => Some(6),
            _ => None,
        }
    }

    /// The classical sub-datum, with the ambient realization for
    /// A/B/C/D and the simple-basis realization for G.
    pub fn classical(&self) -> ClassicalDatum {
        let n = self.rank;
        let cartan: Vec<Vec<i64>> = (1..=n)
            .map(|i| (1..=n).map(|j| self.cartan[i][j]).collect())
            .collect();
        let realization = match self.family {
            Family::G => Realization::SimpleBasis,
            _ => Realization::Ambient,
        };
        let (ambient_dim, simple_roots, simple_coroots, cl_alpha0) = match realization {
            Realization::Ambient => {
                let all = simple_roots_ambient(self).expect("ambient families");
                let d = all[0].dim();
                let roots: Vec<RootVector> = all[1..].to_vec();
                let coroots: Vec<RootVector> = roots.iter().map(coroot_of).collect();
                (d, roots, coroots, all[0].clone())
            }
            Realization::SimpleBasis => {
                let roots: Vec<RootVector> = (0..n)
                    .map(|i| {
                        let mut c = vec![Rat::zero(); n];
                        c[i] = Rat::one();
                        RootVector::new(c, Realization::SimpleBasis)
                    })
                    .collect();
                let coroots: Vec<RootVector> = (0..n)
                    .map(|i| {
                        RootVector::new(
                            (0..n).map(|j| rat(cartan[i][j])).collect(),
                            Realization::SimpleBasis,
                        )
                    })
                    .collect();
                // cl(α_0) = −θ with θ = Σ_{i≥1} a_i α_i (the classical
                // part of the null root relation).
                let mut theta = vec![Rat::zero(); n];
                for i in 0..n {
                    theta[i] = rat(self.marks[i + 1]);
                }
                let cl_alpha0 =
                    RootVector::new(theta.iter().map(|c| -c).collect(), Realization::SimpleBasis);
                (n, roots, coroots, cl_alpha0)
            }
        };
        let theta_vee = {
            let mut acc = RootVector::new(vec![Rat::zero(); ambient_dim], realization);
            for i in 0..n {
                acc = acc.add(&simple_coroots[i].scale(&rat(self.comarks[i + 1])));
            }
            acc
        };
        // Pseudo-inverse (BᵀB)⁻¹Bᵀ of the coroot-basis matrix B, exact
        // on the coroot span.
        let b = Matrix::from_fn(ambient_dim, n, |r, c| simple_coroots[c].coords[r].clone());
        let bt = b.transpose();
        let gram = &bt * &b;
        let coroot_expand = &gram.inverse().expect("simple coroots are independent") * &bt;
        ClassicalDatum {
            family: self.family,
            rank: n,
            cartan,
            realization,
            ambient_dim,
            simple_roots,
            simple_coroots,
            cl_alpha0,
            theta_vee,
            coroot_expand,
        }
    }
}

/// The coroot 2α/⟨α,α⟩ of an ambient root.
fn coroot_of(alpha: &RootVector) -> RootVector {
    let norm: Rat = alpha.coords.iter().map(|c| c * c).sum();
    alpha.scale(&(rat(2) / norm))
}

/// Ambient realizations of α_0..α_n for types A/B/C/D, exactly as
/// tabulated; G has no ambient table and uses the simple basis.
pub fn simple_roots_ambient(datum: &AffineCartanDatum) -> Result<Vec<RootVector>, CartanError> {
    let n = datum.rank;
    let e = |d: usize, i: usize, c: i64| {
        let mut v = vec![0i64; d];
        v[i] = c;
        v
    };
    let pair = |d: usize, i: usize, ci: i64, j: usize, cj: i64| {
        let mut v = vec![0i64; d];
        v[i] = ci;
        v[j] = cj;
        v
    };
    let rows: Vec<Vec<i64>> = match datum.family {
        Family::A => {
            let d = n + 1;
            let mut rows = vec![pair(d, d - 1, 1, 0, -1)];
            for i in 1..=n {
                rows.push(pair(d, i - 1, 1, i, -1));
            }
            rows
        }
        Family::B => {
            let d = n;
            let mut rows = vec![pair(d, 0, -1, 1, -1)];
            for i in 1..n {
                rows.push(pair(d, i - 1, 1, i, -1));
            }
            rows.push(e(d, n - 1, 1));
            rows
        }
        Family::C => {
            let d = n;
            let mut rows = vec![e(d, 0, -2)];
            for i in 1..n {
                rows.push(pair(d, i - 1, 1, i, -1));
            }
            rows.push(e(d, n - 1, 2));
            rows
        }
        Family::D => {
            let d = n;
            let mut rows = vec![pair(d, 0, -1, 1, -1)];
            for i in 1..n {
                rows.push(pair(d, i - 1, 1, i, -1));
            }
            rows.push(pair(d, n - 2, 1, n - 1, 1));
            rows
        }
        Family::G => {
            return Err(CartanError::UnsupportedType(
                "type G has no ambient table; use the simple-basis realization".into(),
            ))
        }
    };
    Ok(rows
        .into_iter()
        .map(|r| RootVector::from_ints(&r, Realization::Ambient))
        .collect())
}

/// The regular dominant base point ρ^∨: ambient (d, d−1, …, 1); generic
/// realization, the sum of the fundamental coweights.
pub fn rho_vee(classical: &ClassicalDatum) -> RootVector {
    match classical.realization {
        Realization::Ambient => {
            let d = classical.ambient_dim;
            RootVector::new((0..d).map(|i| rat((d - i) as i64)).collect(), Realization::Ambient)
        }
        Realization::SimpleBasis => RootVector::new(
            vec![Rat::one(); classical.rank],
            Realization::SimpleBasis,
        ),
    }
}

impl ClassicalDatum {
    /// Simple root α_i for a classical index 1..=n.
    pub fn alpha(&self, i: usize) -> &RootVector {
        &self.simple_roots[i - 1]
    }

    /// Simple coroot α_i^∨ for a classical index 1..=n.
    pub fn alpha_vee(&self, i: usize) -> &RootVector {
        &self.simple_coroots[i - 1]
    }

    /// Classical projection cl(α_i) for an affine index 0..=n.
    pub fn cl_alpha(&self, i: usize) -> &RootVector {
        if i == 0 {
            &self.cl_alpha0
        } else {
            self.alpha(i)
        }
    }

    /// Number game action of s_i on a coweight-side vector.
    pub fn act_simple(&self, x: &RootVector, i: usize) -> RootVector {
        let c = x.pair(self.alpha(i));
        x.sub(&self.alpha_vee(i).scale(&c))
    }

    /// Reflection by an arbitrary root/coroot pair.
    pub fn reflect(&self, x: &RootVector, alpha: &RootVector, alpha_vee: &RootVector) -> RootVector {
        let c = x.pair(alpha);
        x.sub(&alpha_vee.scale(&c))
    }

    /// Coefficients of a coweight-side vector on the simple-coroot
    /// basis. `None` when the vector is outside the coroot span.
    pub fn expand_in_coroots(&self, x: &RootVector) -> Option<Vec<Rat>> {
        let n = self.rank;
        let d = self.ambient_dim;
        let mut out = vec![Rat::zero(); n];
        for r in 0..n {
            let mut acc = Rat::zero();
            for c in 0..d {
                acc += self.coroot_expand[(r, c)].clone() * x.coords[c].clone();
            }
            out[r] = acc;
        }
        // Verify the expansion reproduces x exactly.
        let mut back = RootVector::new(vec![Rat::zero(); d], self.realization);
        for (i, coef) in out.iter().enumerate() {
            back = back.add(&self.simple_coroots[i].scale(coef));
        }
        if back == *x {
            Some(out)
        } else {
            None
        }
    }

    /// Height ⟨λ, ρ̊⟩ of a coweight-side vector in the coroot span: the
    /// sum of its simple-coroot coefficients.
    pub fn height(&self, x: &RootVector) -> Option<Rat> {
        Some(self.expand_in_coroots(x)?.iter().sum())
    }

    /// Is the root-side vector a positive root direction? Tested by
    /// pairing with the regular dominant point.
    pub fn root_is_positive(&self, y: &RootVector) -> bool {
        rho_vee(self).pair(y).is_positive()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_matrix_and_marks() {
        let d = build_affine_datum(Family::A, 1).unwrap();
        assert_eq!(d.cartan, vec![vec![2, -2], vec![-2, 2]]);
        assert_eq!(d.marks, vec![1, 1]);
        assert_eq!(d.braid_order(0, 1), None);
    }

    #[test]
    fn a2_matrix() {
        let d = build_affine_datum(Family::A, 2).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { 2 } else { -1 };
                assert_eq!(d.cartan[i][j], expect);
            }
        }
        assert_eq!(d.marks, vec![1, 1, 1]);
        // cartan · marks = 0 by direct multiplication.
        for i in 0..3 {
            let s: i64 = (0..3).map(|j| d.cartan[i][j] * d.marks[j]).sum();
            assert_eq!(s, 0);
        }
    }

    #[test]
    fn c2_marks_comarks() {
        let d = build_affine_datum(Family::C, 2).unwrap();
        assert_eq!(d.marks, vec![1, 2, 1]);
        assert_eq!(d.comarks, vec![1, 1, 1]);
    }

    #[test]
    fn rank_bounds() {
        assert!(build_affine_datum(Family::D, 3).is_err());
        assert!(build_affine_datum(Family::G, 3).is_err());
        assert!(build_affine_datum(Family::B, 1).is_err());
        assert!(build_affine_datum(Family::A, 5).is_ok());
    }

    #[test]
    fn ambient_roots_match_tables() {
        let a2 = build_affine_datum(Family::A, 2).unwrap();
        let roots = simple_roots_ambient(&a2).unwrap();
        assert_eq!(roots[0], RootVector::from_ints(&[-1, 0, 1], Realization::Ambient));
        assert_eq!(roots[1], RootVector::from_ints(&[1, -1, 0], Realization::Ambient));
        assert_eq!(roots[2], RootVector::from_ints(&[0, 1, -1], Realization::Ambient));

        let b3 = build_affine_datum(Family::B, 3).unwrap();
        let roots = simple_roots_ambient(&b3).unwrap();
        assert_eq!(roots[0], RootVector::from_ints(&[-1, -1, 0], Realization::Ambient));
        assert_eq!(roots[3], RootVector::from_ints(&[0, 0, 1], Realization::Ambient));

        let c2 = build_affine_datum(Family::C, 2).unwrap();
        let roots = simple_roots_ambient(&c2).unwrap();
        assert_eq!(roots[0], RootVector::from_ints(&[-2, 0], Realization::Ambient));
        assert_eq!(roots[1], RootVector::from_ints(&[1, -1], Realization::Ambient));
        assert_eq!(roots[2], RootVector::from_ints(&[0, 2], Realization::Ambient));

        assert!(simple_roots_ambient(&build_affine_datum(Family::G, 2).unwrap()).is_err());
    }

    #[test]
    fn ambient_pairings_reproduce_cartan_matrix() {
        for (fam, rank) in [
            (Family::A, 1),
            (Family::A, 3),
            (Family::B, 2),
            (Family::B, 3),
            (Family::C, 2),
            (Family::C, 3),
            (Family::D, 4),
        ] {
            let d = build_affine_datum(fam, rank).unwrap();
            let roots = simple_roots_ambient(&d).unwrap();
            let coroots: Vec<RootVector> = roots.iter().map(coroot_of).collect();
            for i in 0..=rank {
                for j in 0..=rank {
                    assert_eq!(
                        coroots[i].pair(&roots[j]),
                        rat(d.cartan[i][j]),
                        "{fam}{rank} entry ({i},{j})"
                    );
                }
            }
        }
    }

    #[test]
    fn rho_vee_values() {
        let a2 = build_affine_datum(Family::A, 2).unwrap().classical();
        assert_eq!(rho_vee(&a2), RootVector::from_ints(&[3, 2, 1], Realization::Ambient));
        let c2 = build_affine_datum(Family::C, 2).unwrap().classical();
        assert_eq!(rho_vee(&c2), RootVector::from_ints(&[2, 1], Realization::Ambient));
        let g2 = build_affine_datum(Family::G, 2).unwrap().classical();
        let rho = rho_vee(&g2);
        for i in 1..=2 {
            assert_eq!(rho.pair(g2.alpha(i)), rat(1));
        }
    }

    #[test]
    fn rho_is_dominant_regular_everywhere() {
        for (fam, rank) in [
            (Family::A, 4),
            (Family::B, 3),
            (Family::C, 3),
            (Family::D, 4),
            (Family::G, 2),
        ] {
            let cl = build_affine_datum(fam, rank).unwrap().classical();
            let rho = rho_vee(&cl);
            for i in 1..=rank {
                assert!(rho.pair(cl.alpha(i)).is_positive(), "{fam}{rank} node {i}");
            }
        }
    }

    #[test]
    fn classical_cartan_is_invertible() {
        for (fam, rank) in [
            (Family::A, 3),
            (Family::B, 3),
            (Family::C, 2),
            (Family::D, 4),
            (Family::G, 2),
        ] {
            let cl = build_affine_datum(fam, rank).unwrap().classical();
            let m = Matrix::from_fn(rank, rank, |i, j| rat(cl.cartan[i][j]));
            assert_eq!(m.rank(), rank, "{fam}{rank}");
        }
    }

    #[test]
    fn heights_of_simple_coroots_are_one() {
        for (fam, rank) in [
            (Family::A, 2),
            (Family::B, 3),
            (Family::C, 2),
            (Family::D, 4),
            (Family::G, 2),
        ] {
            let cl = build_affine_datum(fam, rank).unwrap().classical();
            for i in 1..=rank {
                assert_eq!(cl.height(cl.alpha_vee(i)), Some(rat(1)), "{fam}{rank} node {i}");
            }
            let zero = RootVector::new(vec![Rat::zero(); cl.ambient_dim], cl.realization);
            assert_eq!(cl.height(&zero), Some(rat(0)));
        }
    }

    #[test]
    fn theta_data_consistent() {
        // cl(α_0) = −θ pairs to the 0-row/column of the affine matrix.
        for (fam, rank) in [(Family::A, 2), (Family::B, 3), (Family::C, 2), (Family::G, 2)] {
            let aff = build_affine_datum(fam, rank).unwrap();
            let cl = aff.classical();
            // α_0^∨ = −θ^∨, so ⟨θ^∨, α_j⟩ = −a_{0,j}.
            for j in 1..=rank {
                assert_eq!(
                    cl.theta_vee.pair(cl.alpha(j)),
                    rat(-aff.cartan[0][j]),
                    "{fam}{rank} vs 0-row at {j}"
                );
            }
            // ⟨α_i^∨, cl(α_0)⟩ = a_{i,0} for classical i.
            for i in 1..=rank {
                assert_eq!(
                    cl.alpha_vee(i).pair(&cl.cl_alpha0),
                    rat(aff.cartan[i][0]),
                    "{fam}{rank} vs 0-column at {i}"
                );
            }
        }
    }

    #[test]
    fn determinism() {
        let d1 = build_affine_datum(Family::B, 3).unwrap();
        let d2 = build_affine_datum(Family::B, 3).unwrap();
        assert_eq!(d1, d2);
    }
}
