use hecke_core::cartan::{build_affine_datum, Family};
use hecke_core::exactmath::{parse_rat};
use hecke_core::hga::{hga_dimension, realize, verify_surjectivity};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let which = args.get(1).map(|s| s.as_str()).unwrap_or("B3");
    let q1 = parse_rat(args.get(2).map(|s| s.as_str()).unwrap_or("2")).unwrap();
    let q2 = parse_rat(args.get(3).map(|s| s.as_str()).unwrap_or("-1")).unwrap();
    let (fam, rank) = match which {
        "A1" => (Family::A, 1), "A2" => (Family::A, 2), "A3" => (Family::A, 3),
        "C2" => (Family::C, 2), "C3" => (Family::C, 3),
        "B3" => (Family::B, 3), "G2" => (Family::G, 2), "D4" => (Family::D, 4),
        _ => panic!(),
    };
    let affine = build_affine_datum(fam, rank).unwrap();
    let (table, graph) = realize(&affine);
    let t0 = std::time::Instant::now();
    let r = verify_surjectivity(&affine, &table, &graph, &q1, &q2).unwrap();
    println!("{fam}{rank} at ({q1},{q2}): generated={} target={} |W|={} branch={} in {:?}",
        r.generated_dim, r.target_dim, table.size(), r.branch, t0.elapsed());
    let _ = hga_dimension(&table);
}
