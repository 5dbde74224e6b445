//! Build the classical algebras and G2, check the axioms, and look at the
//! Casimir tensor in dual bases.
use ffkernel::liealg::{build, Family};

fn main() {
    for (family, n) in [(Family::Sl, 3), (Family::Sp, 4), (Family::So, 7), (Family::SoSkew, 8), (Family::G2, 7)] {
        let g = build(family, n).expect("algebra");
        let (jacobi, invariant) = g.check_axioms();
        let casimir = g.casimir_terms();
        println!(
            "{:<8} dim {:>2} rank {} jacobi {} invariant form {} casimir terms {}",
            g.name,
            g.dim(),
            g.rank,
            jacobi,
            invariant,
            casimir.len()
        );
    }
    let g = build(Family::Sl, 2).unwrap();
    let e = g.parse_label("E[1,2]").unwrap();
    let f = g.parse_label("E[2,1]").unwrap();
    println!("[E12, E21] = {:?}", g.bracket(e, f).iter().map(|(i, c)| (g.label(*i).to_string(), c.to_string())).collect::<Vec<_>>());
}
