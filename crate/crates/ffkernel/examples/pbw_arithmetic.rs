//! Normal ordering in U(t⁻¹g[t⁻¹]), symmetrisation, the derivation τ and the
//! antipode ω.
use ffkernel::invariants;
use ffkernel::uea::{NCPoly, Uea};
use ffkernel::var::Var;

fn main() {
    let (g, d2) = invariants::delta_sl(2, 2).unwrap();
    let u = Uea::new(&g);
    let e = g.parse_label("E[1,2]").unwrap();
    let f = g.parse_label("E[2,1]").unwrap();
    let word = [Var::loop_var(f, -1), Var::loop_var(e, -2)];
    println!("f[-1]·e[-2] = {}", u.normal_order(&word).display(&g));
    let s = u.symmetrize(&d2.at_tdeg(-1));
    println!("ϖ(Δ̃₂[-1]) = {}", s.display(&g));
    println!("τ·ϖ(Δ̃₂[-1]) = {}", u.tau_derivation(&s).display(&g));
    println!("ϖ(τ²Δ̃₂[-1])·1 = {}", u.sym_tau_apply(&d2, 2).display(&g));
    let x = NCPoly::var(Var::loop_var(e, -1));
    println!("ω(e[-1]·ϖ(Δ̃₂[-1])) = {}", u.antipode(&u.mul(&x, &s)).display(&g));
    println!("[H[-1], e[-1]] = {}", u.commutator_with_casimir(-1, -1, &x).display(&g));
}
