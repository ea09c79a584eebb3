use hecke_core::calibrated::*;
use hecke_core::cartan::{build_affine_datum, Family};
use hecke_core::exactmath::rat;
use hecke_core::hga::realize;

fn main() {
    for (fam, rank) in [(Family::B, 3), (Family::C, 3), (Family::A, 3)] {
        let affine = build_affine_datum(fam, rank).unwrap();
        let (table, graph) = realize(&affine);
        let (q1, q2) = (rat(2), rat(-1));
        let t0 = std::time::Instant::now();
        let eigen = build_eigenbasis(&affine, &table, &graph, &q1, &q2).unwrap();
        println!("{fam}{rank}: eigenbasis in {:?}", t0.elapsed());
        let t0 = std::time::Instant::now();
        let ys = simple_y_matrices(&affine, &table, &graph, &q1, &q2).unwrap();
        let ps = idempotent_decomposition(&table, &eigen, &ys).unwrap();
        println!("  idempotents ({}) in {:?}", ps.len(), t0.elapsed());
        let t0 = std::time::Instant::now();
        let r = calibrated_family_check(&affine, &table, &graph, &q1, &q2, Membership::Skip).unwrap();
        println!("  family size={} target={} independent={} arrows_ok={} in {:?}",
            r.family_size, r.target_dim, r.independent, r.arrows_match_descent_criterion, t0.elapsed());
    }
}
