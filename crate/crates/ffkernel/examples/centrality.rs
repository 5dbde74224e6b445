//! Build Segal–Sugawara vectors of every type and verify [H[-1], S] = 0.
use ffkernel::ssvec;
use std::time::Instant;

fn main() {
    let built = [
        ssvec::ss_type_a(4, 4),
        ssvec::ss_type_c(6, 3),
        ssvec::ss_type_bd(7, 2),
        ssvec::ss_type_bd(8, 2),
        ssvec::ss_pfaffian(8),
        ssvec::ss_g2(),
    ];
    for s in built {
        let s = s.expect("vector");
        let t = Instant::now();
        let rem = ssvec::verify_central(&s);
        let terms: Vec<String> = s.terms.iter().map(|t| format!("{}·τ^{}·{}", t.coeff, 2 * t.r, t.invariant)).collect();
        println!(
            "{:<3} n={} k={} terms {:>5} central {} ({:.2?})  {}",
            s.family,
            s.n,
            s.k,
            s.value.len(),
            rem.is_zero(),
            t.elapsed(),
            terms.join(" + ")
        );
    }
    let set: Vec<_> = (1..=3).map(|k| ssvec::ss_type_c(6, k).unwrap()).collect();
    println!("sp6 complete set: {}", ssvec::verify_complete_set(&set));
}
