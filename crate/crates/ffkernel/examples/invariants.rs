//! The basic symmetric invariants: characteristic-polynomial coefficients,
//! the permanent-type Φ_2k, the Pfaffian, and the G2 pair Δ₂, H̃.
use ffkernel::invariants;

fn main() {
    let cases = [("DeltaTilde", 4, 3), ("DeltaSp", 6, 2), ("Phi", 7, 2), ("Pf", 8, 0), ("G2Delta2", 7, 0), ("G2Htilde", 7, 0)];
    for (name, n, k) in cases {
        let (g, p) = invariants::named(name, n, k).expect("invariant");
        println!(
            "{name:<11} on {:<8} degree {} terms {:>5} invariant {}",
            g.name,
            p.degree().unwrap_or(0),
            p.len(),
            invariants::is_invariant(&p, &g)
        );
    }
    let (g, d2) = invariants::delta_sl(2, 2).unwrap();
    println!("Δ̃₂(sl₂) = {}", d2.display(&g));
}
