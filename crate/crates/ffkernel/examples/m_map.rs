//! The map 𝗆: lifts back to S(g) and the scalar chains it produces.
use ffkernel::invariants;
use ffkernel::mmap::{self, Mmap};

fn main() {
    let (g, d4) = invariants::delta_sl(4, 4).unwrap();
    let (_, d2) = invariants::delta_sl(4, 2).unwrap();
    let m = Mmap::new(&g).m_sym(&d4).unwrap();
    println!("sl4: 𝗆(Δ̃_4) = {}·Δ̃_2", mmap::identify_scalar(&m, &d2).unwrap());

    let (g, p6) = invariants::phi_so(8, 3).unwrap();
    let (_, p4) = invariants::phi_so(8, 2).unwrap();
    let m = Mmap::new(&g).m_sym(&p6).unwrap();
    println!("so8: 𝗆(Φ_6) = {}·Φ_4 (closed form {})", mmap::identify_scalar(&m, &p4).unwrap(), mmap::so_r(8, 3));

    let (g, d6) = invariants::delta_sp(6, 3).unwrap();
    let (_, d2) = invariants::delta_sp(6, 1).unwrap();
    let m = Mmap::new(&g).m_power(&d6, 2).unwrap();
    println!("sp6: 𝗆²(Δ_6) = {}·Δ_2 (closed form {})", mmap::identify_scalar(&m, &d2).unwrap(), mmap::type_c_scalar(3, 3, 2));

    let (g, pf) = invariants::pfaffian(8).unwrap();
    println!("so8: 𝗆(Pf) = 0: {}", Mmap::new(&g).m_sym(&pf).unwrap().is_zero());
}
