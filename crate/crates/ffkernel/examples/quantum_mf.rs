//! Quantum shift-of-argument subalgebras: ϱ_{μ,u} images and the G2 generators.
use ffkernel::invariants;
use ffkernel::liealg::build_g2;
use ffkernel::special;
use ffkernel::Q;

fn main() {
    let (g, d2) = invariants::delta_sl(3, 2).unwrap();
    let (_, d3) = invariants::delta_sl(3, 3).unwrap();
    let diag = |d: [i64; 3]| {
        let mut m = vec![vec![Q::zero(); 3]; 3];
        for i in 0..3 {
            m[i][i] = Q::int(d[i]);
        }
        g.coords_of_matrix(&m).unwrap()
    };
    let mu = diag([1, 2, -3]);
    let gens = special::qmf_generators(&g, &mu, &[d2, d3.clone()]).unwrap();
    let certs = special::commute_check(&g, &gens);
    println!("sl3: {}", special::commute_report(gens.len(), &certs));
    println!("sl3: images of ϖ(Δ̃₃)[-1,-1,-2] span the μ-shifts: {}", special::mf_span_check(&g, &d3, &[-1, -1, -2], &mu).unwrap());

    let g2 = build_g2().unwrap();
    let r = special::g2_qmf(&special::g2_cartan(&g2, 1, 3)).unwrap();
    println!("g2: {}", r.to_json());
}
