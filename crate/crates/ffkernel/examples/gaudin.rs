//! Gaudin algebras: ρ_z̄ images of the centre, quadratic Hamiltonians and the
//! two-point generators.
use ffkernel::{invariants, special, Q};

fn main() {
    let z: Vec<Q> = [1, 2, 4].iter().map(|&x| Q::int(x)).collect();
    let list = special::complete_set("A", 2).unwrap();
    let g = list[0].g.clone();
    let mut elems = special::gaudin_generators(&list, &z).unwrap();
    for k in 1..=3 {
        elems.push(special::gaudin_quadratic(&g, k, &z).unwrap());
    }
    println!("sl2, z = (1,2,4): {}", special::commute_report(elems.len(), &special::commute_check(&g, &elems)));
    println!("H_1 = {}", special::gaudin_quadratic(&g, 1, &z).unwrap().display(&g));

    let (g, d2) = invariants::delta_sl(3, 2).unwrap();
    let (_, d3) = invariants::delta_sl(3, 3).unwrap();
    let gens = special::two_point_generators(&g, &[d2, d3]);
    println!("sl3 two-point: {}", special::commute_report(gens.len(), &special::commute_check(&g, &gens)));
}
