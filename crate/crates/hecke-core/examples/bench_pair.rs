use hecke_core::cartan::{build_affine_datum, Family};
use hecke_core::hga::{family_rank, pair_basis_matrices, realize};

fn main() {
    let affine = build_affine_datum(Family::B, 3).unwrap();
    let (table, graph) = realize(&affine);
    let t0 = std::time::Instant::now();
    let fam = pair_basis_matrices(&table, &graph);
    println!("built {} pair matrices in {:?}", fam.len(), t0.elapsed());
    let t0 = std::time::Instant::now();
    let rank = family_rank(&fam);
    println!("rank = {} in {:?}", rank, t0.elapsed());
}
