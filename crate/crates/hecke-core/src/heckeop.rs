//! Matrices of the level-0 operators cl(s_i), cl(π_i), cl(π̄_i), T_i,
//! T̄_i, and Y^λ on the group algebra of W̊, over an exact coefficient
//! ring: Laurent polynomials in q1, q2 for symbolic identities, or
//! rationals at a specialization.
//!
//! Operators act on the right of row vectors indexed by the group in
//! table order; applying f then g multiplies M_f · M_g.

use crate::alcove::{height, translation_walk, DescentPick};
use crate::cartan::AffineCartanDatum;
use crate::exactmath::{Matrix, Scalar};
use crate::level0::ActionGraph;
use crate::weyl::GroupTable;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HeckeOpError {
    #[error("q1·q2 must be invertible for Y operators")]
    ZeroParameter,
    #[error("relation failed: {0}")]
    RelationFailure(String),
    #[error("walk construction failed: {0}")]
    Walk(String),
}

/// Permutation matrix of w ↦ w·cl(s_i), i ∈ 0..=n.
pub fn matrix_s<R: Scalar>(graph: &ActionGraph, i: usize) -> Matrix<R> {
    let size = graph.size();
    let mut m = Matrix::zero(size, size);
    for w in 0..size {
        let img = graph.s(crate::weyl::ElemId(w as u32), i);
        m[(w, img.idx())] = R::one();
    }
    m
}

/// 0/1 idempotent matrix of the level-0 π_i (π̄_i when `barred`).
pub fn matrix_pi<R: Scalar>(graph: &ActionGraph, i: usize, barred: bool) -> Matrix<R> {
    let size = graph.size();
    let mut m = Matrix::zero(size, size);
    for w in 0..size {
        let e = crate::weyl::ElemId(w as u32);
        let img = if barred { graph.pi_bar(e, i) } else { graph.pi(e, i) };
        m[(w, img.idx())] = R::one();
    }
    m
}

/// T_i = (q1+q2)·π_i − q1·s_i.
pub fn matrix_t<R: Scalar>(graph: &ActionGraph, i: usize, q1: &R, q2: &R) -> Matrix<R> {
    let size = graph.size();
    let mut m = Matrix::zero(size, size);
    let sum = q1.clone() + q2.clone();
    for w in 0..size {
        let e = crate::weyl::ElemId(w as u32);
        let pi = graph.pi(e, i).idx();
        let s = graph.s(e, i).idx();
        m[(w, pi)] += sum.clone();
        m[(w, s)] -= q1.clone();
    }
    m
}

/// T̄_i = (q1+q2)·π̄_i − q2·s_i, the partner with T_i + T̄_i = q1+q2.
pub fn matrix_t_bar<R: Scalar>(graph: &ActionGraph, i: usize, q1: &R, q2: &R) -> Matrix<R> {
    let size = graph.size();
    let mut m = Matrix::zero(size, size);
    let sum = q1.clone() + q2.clone();
    for w in 0..size {
        let e = crate::weyl::ElemId(w as u32);
        let pi = graph.pi_bar(e, i).idx();
        let s = graph.s(e, i).idx();
        m[(w, pi)] += sum.clone();
        m[(w, s)] -= q2.clone();
    }
    m
}

/// T_i^{-1} = T̄_i / (q1·q2); requires q1·q2 to be a unit.
pub fn matrix_t_inv<R: Scalar>(
    graph: &ActionGraph,
    i: usize,
    q1: &R,
    q2: &R,
) -> Result<Matrix<R>, HeckeOpError> {
    let unit = q1.clone() * q2.clone();
    let inv = unit.inv_unit().ok_or(HeckeOpError::ZeroParameter)?;
    Ok(matrix_t_bar(graph, i, q1, q2).scale(&inv))
}

/// Integer power of a unit scalar.
fn pow_unit<R: Scalar>(x: &R, k: i64) -> Result<R, HeckeOpError> {
    if k == 0 {
        return Ok(R::one());
    }
    let base = if k > 0 {
        x.clone()
    } else {
        x.inv_unit().ok_or(HeckeOpError::ZeroParameter)?
    };
    let mut acc = R::one();
    for _ in 0..k.unsigned_abs() {
        acc = acc * base.clone();
    }
    Ok(acc)
}

/// Y^λ = (−q1q2)^{−ht(λ)} · T_{i_1}^{ε_1} ⋯ T_{i_r}^{ε_r} along an
/// alcove walk from A to t_λ(A).
pub fn matrix_y<R: Scalar>(
    affine: &AffineCartanDatum,
    table: &GroupTable,
    graph: &ActionGraph,
    lambda: &[i64],
    q1: &R,
    q2: &R,
) -> Result<Matrix<R>, HeckeOpError> {
    matrix_y_walked(affine, table, graph, lambda, q1, q2, DescentPick::Smallest)
}

/// Like [`matrix_y`] but with an explicit walk-construction rule, for
/// walk-independence checks.
pub fn matrix_y_walked<R: Scalar>(
    affine: &AffineCartanDatum,
    table: &GroupTable,
    graph: &ActionGraph,
    lambda: &[i64],
    q1: &R,
    q2: &R,
    pick: DescentPick,
) -> Result<Matrix<R>, HeckeOpError> {
    let walk = translation_walk(affine, table, lambda, pick)
        .map_err(|e| HeckeOpError::Walk(e.to_string()))?;
    let size = graph.size();
    let mut acc = Matrix::<R>::identity(size);
    for (&i, &sign) in walk.word.iter().zip(&walk.signs) {
        let factor = if sign > 0 {
            matrix_t(graph, i, q1, q2)
        } else {
            matrix_t_inv(graph, i, q1, q2)?
        };
        acc = &acc * &factor;
    }
    let minus_q1q2 = -(q1.clone() * q2.clone());
    let scalar = pow_unit(&minus_q1q2, -height(lambda))?;
    Ok(acc.scale(&scalar))
}

/// Symbolic relation checks over the Laurent ring: quadratic relations
/// for every affine generator, braid relations for every finite bond,
/// and T_i·T̄_i = q1q2. Returns the names of the verified relations.
pub fn check_relations(
    affine: &AffineCartanDatum,
    graph: &ActionGraph,
) -> Result<Vec<String>, HeckeOpError> {
    use crate::exactmath::LaurentQQ;
    let n = affine.rank;
    let size = graph.size();
    let q1 = LaurentQQ::q1();
    let q2 = LaurentQQ::q2();
    let id = Matrix::<LaurentQQ>::identity(size);
    let ts: Vec<Matrix<LaurentQQ>> = (0..=n).map(|i| matrix_t(graph, i, &q1, &q2)).collect();
    let mut passed = Vec::new();
    for (i, t) in ts.iter().enumerate() {
        let lhs = &(t - &id.scale(&q1)) * &(t - &id.scale(&q2));
        if !lhs.is_zero_matrix() {
            return Err(HeckeOpError::RelationFailure(format!(
                "quadratic relation for T_{i}"
            )));
        }
        passed.push(format!("quadratic T_{i}"));
        let tbar = matrix_t_bar(graph, i, &q1, &q2);
        if t * &tbar != id.scale(&(q1.clone() * q2.clone())) {
            return Err(HeckeOpError::RelationFailure(format!(
                "T_{i}·T̄_{i} = q1q2"
            )));
        }
        passed.push(format!("T_{i}·T̄_{i} = q1q2"));
    }
    for i in 0..=n {
        for j in (i + 1)..=n {
            let Some(m) = affine.braid_order(i, j) else {
                passed.push(format!("bond ({i},{j}) is infinite; no braid relation"));
                continue;
            };
            let mut a = id.clone();
            let mut b = id.clone();
            for k in 0..m {
                a = &a * &ts[if k % 2 == 0 { i } else { j }];
                b = &b * &ts[if k % 2 == 0 { j } else { i }];
            }
            if a != b {
                return Err(HeckeOpError::RelationFailure(format!(
                    "braid relation of order {m} for ({i},{j})"
                )));
            }
            passed.push(format!("braid ({i},{j}) order {m}"));
        }
    }
    Ok(passed)
}
