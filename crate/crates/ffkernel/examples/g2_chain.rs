//! The G2 constants: why Δ₂³ needs a partner, the value b = 25/108, and the
//! resulting degree-six vector.
use ffkernel::invariants;
use ffkernel::mmap::{self, Mmap};
use ffkernel::ssvec;

fn main() {
    let (g, d2, d6) = invariants::g2_invariants().unwrap();
    let mm = Mmap::new(&g);
    println!("𝗆(Δ₂³): {:?}", mm.m_sym(&d2.pow(3)).err());
    for p in mmap::g2_probe_suite(&g) {
        println!("{:<22} {:>8}  expected {:>8}", p.name, p.value.to_string(), p.expected.to_string());
    }
    let ht = invariants::g2_htilde(&g).unwrap();
    let m = mm.m_sym(&ht).unwrap();
    println!("𝗆(H̃) = {}·Δ₂²", mmap::identify_scalar(&m, &d2.pow(2)).unwrap());
    let generic = ssvec::ss_generic(&g, &ht, "H").unwrap();
    let s = ssvec::ss_g2().unwrap();
    println!("generic chain equals the explicit vector: {}", generic.value == s.value);
    println!("Δ₆ terms {}, vector terms {}, central {}", d6.len(), s.value.len(), ssvec::verify_central(&s).is_zero());
}
