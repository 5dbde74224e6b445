//! The commutator expansion of X_Y: fitted constants c_{2,3}, c_{3,2}, the
//! 𝗆-shaped symbol of X, and the universal relations between W-elements.
use ffkernel::invariants;
use ffkernel::ssvec;

fn main() {
    for m in 3..=5 {
        let p = ssvec::c_constants_probe(m).unwrap();
        println!("m = {m}: free parameters {}, orientation {}, c23(1,2) = {}", p.ambiguity, p.orientation, p.constants.c23(1, 2));
    }
    let k = ssvec::CConstants::transport(6);
    println!("m = 6: {}  symmetric {} signs {}", k.to_json(), k.symmetric(), k.signs_ok());

    let (g, d2) = invariants::delta_sl(2, 2).unwrap();
    for e in [2, 3] {
        println!("sl2, F = Δ̃₂^{e}: gr X_F[-1] = κ·(𝗆-shape) with κ = {:?}", ssvec::msym_shape(&g, &d2.pow(e)).map(|q| q.to_string()));
    }
    let (g3, d3) = invariants::delta_sl(3, 3).unwrap();
    let alpha = [(-1, 2), (-2, 1), (-3, 1)];
    let w = |p| ssvec::w_element(&g3, &d3, &alpha, p).unwrap().value;
    println!("sl3, s = 3: W(1,2) = -W(1,3) = W(2,3): {}", w((0, 1)) == w((0, 2)).neg() && w((0, 1)) == w((1, 2)));
}
