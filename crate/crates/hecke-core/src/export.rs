//! JSON and DOT emitters for the external interfaces.
//!
//! Rationals and Laurent polynomials serialize as exact strings
//! ("3/2", "q1^2*q2^-1 - 1"); all maps iterate in deterministic order
//! so reruns are byte-identical.

use serde_json::{json, Value};

use crate::calibrated::Eigenbasis;
use crate::cartan::AffineCartanDatum;
use crate::exactmath::{Matrix, Scalar};
use crate::weyl::GroupTable;

/// Matrix export with a ring tag; entries as exact strings.
pub fn matrix_json<R: Scalar>(m: &Matrix<R>, ring: &str) -> Value {
    let entries: Vec<Vec<String>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m[(i, j)].to_string()).collect())
        .collect();
    json!({
        "ring": ring,
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": entries,
    })
}

/// Affine Cartan datum export.
pub fn datum_json(datum: &AffineCartanDatum) -> Value {
    json!({
        "family": datum.family.to_string(),
        "rank": datum.rank,
        "cartan": datum.cartan,
        "marks": datum.marks,
        "comarks": datum.comarks,
    })
}

/// Eigenbasis export: rows of E_w with leading data.
pub fn eigenbasis_json(table: &GroupTable, eigen: &Eigenbasis) -> Value {
    let vectors: Vec<Value> = table
        .elements()
        .map(|w| {
            let row = eigen.vector(w);
            let lead = table.mul(table.w0(), w);
            json!({
                "w": table.label(w),
                "coords": row.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "leading_position": table.label(lead),
                "leading_coefficient": row[lead.idx()].to_string(),
            })
        })
        .collect();
    json!({
        "q1": eigen.q1.to_string(),
        "q2": eigen.q2.to_string(),
        "q": eigen.q.to_string(),
        "basis": vectors,
    })
}

/// Calibration graph in DOT: arrows labeled by the generator index.
pub fn calibration_graph_dot(table: &GroupTable, arrows: &[Vec<bool>]) -> String {
    let mut out = String::from("digraph calibration {\n");
    for w in table.elements() {
        out.push_str(&format!("  n{} [label=\"{}\"];\n", w.0, table.label(w)));
    }
    for w in table.elements() {
        for i in 1..=table.rank() {
            if arrows[w.idx()][i - 1] {
                out.push_str(&format!(
                    "  n{} -> n{} [label=\"{}\"];\n",
                    w.0,
                    table.right(w, i).0,
                    i
                ));
            }
        }
    }
    out.push_str("}\n");
    out
}
