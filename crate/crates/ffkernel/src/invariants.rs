//! Symmetric invariants: `Δ_k` for gl and sl, `Δ_2k` for sp, `Φ_2k` for so,
//! the Pfaffian, and the G2 pair `(Δ₂, Δ₆)`.

use crate::field::{Field, QSqrt2};
use crate::liealg::{
    build_g2, build_gl, build_sl, build_so, build_so_skew, build_sp, g2_index, g2_matrices, so_canonical,
    sp_canonical, BasisLabel, G2Letter, LieAlgebra,
};
use crate::linalg::{self, Mat};
use crate::rational::Q;
use crate::sympoly::CommPoly;
use crate::var::Var;
use rustc_hash::FxHashMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum InvariantError {
    #[error("degree {k} out of range 1..={max} for {name}")]
    Range { name: String, k: usize, max: usize },
    #[error("unknown invariant {0}")]
    Unknown(String),
    #[error("projected coefficients are not rational")]
    Irrational,
    #[error("{0}")]
    Lie(String),
}

fn range(name: &str, k: usize, lo: usize, hi: usize) -> Result<(), InvariantError> {
    if k < lo || k > hi {
        Err(InvariantError::Range { name: name.into(), k, max: hi })
    } else {
        Ok(())
    }
}

fn lie<T>(r: Result<T, crate::liealg::LieError>) -> Result<T, InvariantError> {
    r.map_err(|e| InvariantError::Lie(format!("{:?}", e)))
}

fn var(i: usize) -> CommPoly {
    CommPoly::var(Var::finite(i))
}

/// Sum of the principal `k`-minors of a square matrix of polynomials.
pub fn principal_minors(m: &[Vec<CommPoly>], k: usize) -> CommPoly {
    let n = m.len();
    let mut memo: FxHashMap<(u32, u32), CommPoly> = FxHashMap::default();
    let mut total = CommPoly::zero();
    for s in 0u32..(1 << n) {
        if s.count_ones() as usize == k {
            total.add_assign(&minor(m, s, s, &mut memo));
        }
    }
    total
}

/// Determinant of the submatrix on row set `r` and column set `c`, by
/// expansion along the first row, memoized on `(r, c)`.
fn minor(m: &[Vec<CommPoly>], r: u32, c: u32, memo: &mut FxHashMap<(u32, u32), CommPoly>) -> CommPoly {
    if r == 0 {
        return CommPoly::one();
    }
    if let Some(p) = memo.get(&(r, c)) {
        return p.clone();
    }
    let i = r.trailing_zeros() as usize;
    let rest = r & !(1 << i);
    let mut out = CommPoly::zero();
    let mut sign = 1i64;
    for j in 0..m.len() {
        if c & (1 << j) == 0 {
            continue;
        }
        if !m[i][j].is_zero() {
            let sub = minor(m, rest, c & !(1 << j), memo);
            if !sub.is_zero() {
                out.add_assign(&m[i][j].mul(&sub).scale(&Q::int(sign)));
            }
        }
        sign = -sign;
    }
    memo.insert((r, c), out.clone());
    out
}

/// Generic matrix `(E_ij)` of gl_n.
pub fn gl_matrix(g: &LieAlgebra) -> Vec<Vec<CommPoly>> {
    let n = g.n;
    (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| var(g.index_of(&BasisLabel::E(i as u8, j as u8)).expect("gl basis")))
                .collect()
        })
        .collect()
}

/// `(E_ij)` with `E_ii` replaced by its traceless part `E_ii - (1/n)I`
/// written in the basis of sl_n.
pub fn sl_matrix(g: &LieAlgebra) -> Vec<Vec<CommPoly>> {
    let n = g.n;
    let mut out = vec![vec![CommPoly::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                out[i][j] = var(g.index_of(&BasisLabel::E(i as u8 + 1, j as u8 + 1)).expect("sl basis"));
            } else {
                let mut m = linalg::zeros::<Q>(n, n);
                for (k, row) in m.iter_mut().enumerate() {
                    row[k] = Q::new(-1, n as i64);
                }
                m[i][i] += Q::one();
                let c = g.coords_of_matrix(&m).expect("traceless diagonal");
                out[i][i] = CommPoly::linear(&c);
            }
        }
    }
    out
}

/// `(F_ij)` for sp_2n, each entry a signed basis element.
pub fn sp_matrix(g: &LieAlgebra) -> Vec<Vec<CommPoly>> {
    let n = g.n;
    (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    let (s, a, b) = sp_canonical(n, i, j);
                    var(g.index_of(&BasisLabel::F(a as u8, b as u8)).expect("sp basis")).scale(&Q::int(s))
                })
                .collect()
        })
        .collect()
}

/// `(F_ij)` for so_N.
pub fn so_matrix(g: &LieAlgebra) -> Vec<Vec<CommPoly>> {
    let n = g.n;
    (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| match so_canonical(n, i, j) {
                    None => CommPoly::zero(),
                    Some((s, a, b)) => {
                        var(g.index_of(&BasisLabel::F(a as u8, b as u8)).expect("so basis")).scale(&Q::int(s))
                    }
                })
                .collect()
        })
        .collect()
}

/// Generic skew matrix `(Fo_ij)` with `Fo_ji = -Fo_ij`.
pub fn skew_matrix(g: &LieAlgebra) -> Vec<Vec<CommPoly>> {
    let n = g.n;
    let mut out = vec![vec![CommPoly::zero(); n]; n];
    for i in 1..=n {
        for j in (i + 1)..=n {
            let v = var(g.index_of(&BasisLabel::Fo(i as u8, j as u8)).expect("skew basis"));
            out[j - 1][i - 1] = v.neg();
            out[i - 1][j - 1] = v;
        }
    }
    out
}

/// Matrix `Σ_a ρ(x_a) x^a` of a rational realization.
pub fn dual_matrix(g: &LieAlgebra) -> Vec<Vec<CommPoly>> {
    let n = g.n;
    let mut out = vec![vec![CommPoly::zero(); n]; n];
    for a in 0..g.dim() {
        let dual = CommPoly::linear(&dense(&g.dual(a), g.dim()));
        for i in 0..n {
            for j in 0..n {
                let c = &g.rep[a][i][j];
                if !c.is_zero() {
                    out[i][j].add_scaled(&dual, c);
                }
            }
        }
    }
    out
}

fn dense(v: &[(usize, Q)], d: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); d];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

/// `Δ_k` of gl_n: sum of principal `k`-minors of `(E_ij)`.
pub fn delta_gl(n: usize, k: usize) -> Result<(LieAlgebra, CommPoly), InvariantError> {
    range("Delta", k, 1, n)?;
    let g = lie(build_gl(n))?;
    let p = principal_minors(&gl_matrix(&g), k);
    Ok((g, p))
}

/// `Δ̃_k`: restriction of `Δ_k` to sl_n.
pub fn delta_sl(n: usize, k: usize) -> Result<(LieAlgebra, CommPoly), InvariantError> {
    range("DeltaTilde", k, 1, n)?;
    let g = lie(build_sl(n))?;
    let p = principal_minors(&sl_matrix(&g), k);
    Ok((g, p))
}

/// `Δ_2k` of sp_2n.
pub fn delta_sp(two_n: usize, k: usize) -> Result<(LieAlgebra, CommPoly), InvariantError> {
    let g = lie(build_sp(two_n))?;
    range("DeltaSp", k, 1, two_n / 2)?;
    let p = principal_minors(&sp_matrix(&g), 2 * k);
    Ok((g, p))
}

/// Coefficients `Φ_0, …, Φ_{2k}` of `det(I - qF)^{-1}` for a matrix `F`.
pub fn permanent_series(m: &[Vec<CommPoly>], top: usize) -> Vec<CommPoly> {
    let n = m.len();
    // d_j = (-1)^j Δ_j
    let d: Vec<CommPoly> = (0..=top.min(n))
        .map(|j| {
            if j == 0 {
                CommPoly::one()
            } else {
                principal_minors(m, j).scale(&Q::int(if j % 2 == 0 { 1 } else { -1 }))
            }
        })
        .collect();
    let mut phi = vec![CommPoly::one()];
    for s in 1..=top {
        let mut acc = CommPoly::zero();
        for j in 1..=s.min(d.len() - 1) {
            if !d[j].is_zero() && !phi[s - j].is_zero() {
                acc.add_assign(&d[j].mul(&phi[s - j]));
            }
        }
        phi.push(acc.neg());
    }
    phi
}

/// `Φ_2k` of so_N.
pub fn phi_so(size: usize, k: usize) -> Result<(LieAlgebra, CommPoly), InvariantError> {
    range("Phi", k, 1, usize::MAX)?;
    let g = lie(build_so(size))?;
    let mut s = permanent_series(&so_matrix(&g), 2 * k);
    Ok((g, s.swap_remove(2 * k)))
}

/// Pfaffian of a skew matrix of polynomials, by expansion along the first row.
pub fn pfaffian_of(m: &[Vec<CommPoly>]) -> CommPoly {
    let idx: Vec<usize> = (0..m.len()).collect();
    let mut memo: FxHashMap<u64, CommPoly> = FxHashMap::default();
    pf_rec(m, &idx, &mut memo)
}

fn pf_rec(m: &[Vec<CommPoly>], idx: &[usize], memo: &mut FxHashMap<u64, CommPoly>) -> CommPoly {
    if idx.is_empty() {
        return CommPoly::one();
    }
    if idx.len() % 2 == 1 {
        return CommPoly::zero();
    }
    let key: u64 = idx.iter().map(|&i| 1u64 << i).sum();
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let i = idx[0];
    let mut out = CommPoly::zero();
    for (pos, &j) in idx.iter().enumerate().skip(1) {
        if m[i][j].is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx.iter().copied().filter(|&t| t != i && t != j).collect();
        let sub = pf_rec(m, &rest, memo);
        let sign = if pos % 2 == 1 { 1 } else { -1 };
        out.add_assign(&m[i][j].mul(&sub).scale(&Q::int(sign)));
    }
    memo.insert(key, out.clone());
    out
}

/// Pfaffian on so_2n in the skew realization, normalized by `Pf(J) = 1`.
pub fn pfaffian(two_n: usize) -> Result<(LieAlgebra, CommPoly), InvariantError> {
    let g = lie(build_so_skew(two_n))?;
    let p = pfaffian_of(&skew_matrix(&g));
    Ok((g, p))
}

/// `Δ₂` of G2, term by term.
pub fn g2_delta2() -> CommPoly {
    use G2Letter::*;
    let x = |l: G2Letter| var(g2_index(l));
    let mut p = CommPoly::zero();
    for (u, v) in [(E1, F1), (E2, F2), (E3, F3)] {
        p.add_assign(&x(u).mul(&x(v)).scale(&Q::int(2)));
    }
    p.add_assign(&x(H1).pow(2).scale(&Q::new(1, 2)));
    p.add_assign(&x(H2).pow(2).scale(&Q::new(1, 6)));
    for (u, v) in [(A, Alpha), (B, Beta), (C, Gamma)] {
        p.add_assign(&x(u).mul(&x(v)).scale(&Q::new(-2, 3)));
    }
    p
}

/// Projections `pr(F_ij)` of so_7 onto G2, as coordinate vectors over `Q(√2)`,
/// where `F_ij = E_ij - E_{σ(j)σ(i)}`.
pub fn g2_projection(g: &LieAlgebra) -> Vec<Vec<Vec<QSqrt2>>> {
    let mats = g2_matrices();
    let d = g.dim();
    let mut out = vec![vec![vec![QSqrt2::zero(); d]; 7]; 7];
    // pr(F_ij) = Σ_a ρ(x_a)_{ji} x^a
    for (a, m) in mats.iter().enumerate() {
        let dual = g.dual(a);
        for i in 0..7 {
            for j in 0..7 {
                let c = &m[j][i];
                if c.is_zero() {
                    continue;
                }
                for (b, cb) in &dual {
                    let t = c.mul(&QSqrt2::from_q(cb.clone()));
                    out[i][j][*b] = out[i][j][*b].add(&t);
                }
            }
        }
    }
    out
}

/// `Δ₆` of G2: the degree-6 coefficient of the characteristic polynomial of
/// `(pr(F_ij))`, computed in the rational conjugate realization where every
/// principal minor is unchanged.
pub fn g2_delta6(g: &LieAlgebra) -> Result<CommPoly, InvariantError> {
    let rat = dual_matrix(g);
    // pr(F_ij) = d_j R_ji / d_i with R the rational matrix and d = (1,…,1,1/√2)
    let pr = g2_projection(g);
    let d = |i: usize| if i == 6 { QSqrt2::new(Q::zero(), Q::new(1, 2)) } else { QSqrt2::one() };
    for i in 0..7 {
        for j in 0..7 {
            let f = d(j).mul(&d(i).inv());
            for b in 0..g.dim() {
                let r = QSqrt2::from_q(rat[j][i].coeff(&[Var::finite(b)]));
                if pr[i][j][b] != r.mul(&f) {
                    return Err(InvariantError::Irrational);
                }
            }
        }
    }
    Ok(principal_minors(&rat, 6))
}

pub fn g2_invariants() -> Result<(LieAlgebra, CommPoly, CommPoly), InvariantError> {
    let g = lie(build_g2())?;
    let d2 = g2_delta2();
    let d6 = g2_delta6(&g)?;
    Ok((g, d2, d6))
}

pub const G2_B: (i64, i64) = (25, 108);

/// `H̃ = Δ₆ - (25/108)Δ₂³`.
pub fn g2_htilde(g: &LieAlgebra) -> Result<CommPoly, InvariantError> {
    let d2 = g2_delta2();
    let d6 = g2_delta6(g)?;
    Ok(d6.sub(&d2.pow(3).scale(&Q::new(G2_B.0, G2_B.1))))
}

/// Embedding of `S(sl_3)` into `S(g2)` through `E_ij ↦ ι(E_ij)`.
pub fn sl3_into_g2(f: &CommPoly, sl3: &LieAlgebra) -> CommPoly {
    use G2Letter::*;
    let img = |i: usize| -> CommPoly {
        let x = |l: G2Letter| var(g2_index(l));
        match sl3.label(i) {
            BasisLabel::E(1, 2) => x(E1),
            BasisLabel::E(2, 3) => x(E2),
            BasisLabel::E(1, 3) => x(E3),
            BasisLabel::E(2, 1) => x(F1),
            BasisLabel::E(3, 2) => x(F2),
            BasisLabel::E(3, 1) => x(F3),
            BasisLabel::H(1) => x(H1),
            // E22 - E33 = (h2 - h1)/2
            BasisLabel::H(2) => x(H2).sub(&x(H1)).scale(&Q::new(1, 2)),
            l => panic!("not an sl3 label: {}", l),
        }
    };
    f.substitute(|v| img(v.index()))
}

/// Kill every variable outside `keep`.
pub fn restrict(f: &CommPoly, keep: &[usize]) -> CommPoly {
    f.filter(|m| m.iter().all(|v| keep.contains(&v.index())))
}

/// `∂_μ^m F`, with `∂_μ x = B(μ, x)`.
pub fn mu_shift(f: &CommPoly, mu: &[Q], m: usize, g: &LieAlgebra) -> CommPoly {
    let dir: Vec<(Var, Q)> = (0..g.dim())
        .map(|a| (Var::finite(a), g.form_vec(mu, &g.basis_vec(a))))
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let mut p = f.clone();
    for _ in 0..m {
        p = p.derivative_along(&dir);
    }
    p
}

/// `{x_a, H} = 0` for every basis element.
pub fn is_invariant(f: &CommPoly, g: &LieAlgebra) -> bool {
    (0..g.dim()).all(|a| var(a).poisson(f, g).is_zero())
}

/// Commutative Casimir `Σ_a x_a x^a`.
pub fn casimir(g: &LieAlgebra) -> CommPoly {
    let mut p = CommPoly::zero();
    for (a, b, c) in g.casimir_terms() {
        p.add_assign(&var(a).mul(&var(b)).scale(&c));
    }
    p
}

/// Invariant by CLI name: `Delta`, `DeltaTilde`, `DeltaSp`, `Phi`, `Pf`,
/// `G2Delta2`, `G2Delta6`, `G2Htilde`. `n` is the matrix size.
pub fn named(name: &str, n: usize, k: usize) -> Result<(LieAlgebra, CommPoly), InvariantError> {
    match name {
        "Delta" => delta_gl(n, k),
        "DeltaTilde" => delta_sl(n, k),
        "DeltaSp" => delta_sp(n, k),
        "Phi" => phi_so(n, k),
        "Pf" => pfaffian(n),
        "G2Delta2" => {
            let g = lie(build_g2())?;
            let p = g2_delta2();
            Ok((g, p))
        }
        "G2Delta6" => {
            let g = lie(build_g2())?;
            let p = g2_delta6(&g)?;
            Ok((g, p))
        }
        "G2Htilde" => {
            let g = lie(build_g2())?;
            let p = g2_htilde(&g)?;
            Ok((g, p))
        }
        _ => Err(InvariantError::Unknown(name.into())),
    }
}

/// The dense rational matrix of an element in the G2 √2-realization.
pub fn g2_sqrt2_matrix(x: &[Q]) -> Mat<QSqrt2> {
    let mats = g2_matrices();
    let mut m = linalg::zeros::<QSqrt2>(7, 7);
    for (a, c) in x.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let cq = QSqrt2::from_q(c.clone());
        for i in 0..7 {
            for j in 0..7 {
                m[i][j] = m[i][j].add(&mats[a][i][j].mul(&cq));
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_determinants() {
        let (g, d) = delta_gl(2, 2).unwrap();
        let e = |s: &str| var(g.parse_label(s).unwrap());
        let expected = e("E[1,1]").mul(&e("E[2,2]")).sub(&e("E[1,2]").mul(&e("E[2,1]")));
        assert_eq!(d, expected);
        let (g, t) = delta_gl(3, 1).unwrap();
        let e = |s: &str| var(g.parse_label(s).unwrap());
        assert_eq!(t, e("E[1,1]").add(&e("E[2,2]")).add(&e("E[3,3]")));
    }

    #[test]
    fn sl_trace_vanishes() {
        let (_, d1) = delta_sl(3, 1).unwrap();
        assert!(d1.is_zero());
    }

    #[test]
    fn pfaffian_four() {
        let (g, p) = pfaffian(4).unwrap();
        let f = |s: &str| var(g.parse_label(s).unwrap());
        let expected = f("Fo[1,2]")
            .mul(&f("Fo[3,4]"))
            .sub(&f("Fo[1,3]").mul(&f("Fo[2,4]")))
            .add(&f("Fo[1,4]").mul(&f("Fo[2,3]")));
        assert_eq!(p, expected);
    }

    #[test]
    fn g2_projection_values() {
        use G2Letter::*;
        let g = build_g2().unwrap();
        let pr = g2_projection(&g);
        let q = |a: i64, b: i64| QSqrt2::from_q(Q::new(a, b));
        let r = |a: i64, b: i64| QSqrt2::new(Q::zero(), Q::new(a, b));
        let at = |i: usize, j: usize, l: G2Letter| pr[i - 1][j - 1][g2_index(l)].clone();
        assert_eq!(at(1, 1, H1), q(1, 2));
        assert_eq!(at(1, 1, H2), q(1, 6));
        assert_eq!(at(2, 2, H1), q(-1, 2));
        assert_eq!(at(3, 3, H2), q(-1, 3));
        assert_eq!(at(1, 4, Beta), q(-1, 3));
        assert_eq!(at(1, 5, Gamma), q(1, 3));
        assert_eq!(at(1, 7, A), r(1, 3));
        assert_eq!(at(7, 1, Alpha), r(-1, 3));
    }

    #[test]
    fn g2_delta2_is_casimir() {
        let g = build_g2().unwrap();
        assert_eq!(g2_delta2(), casimir(&g));
    }

    #[test]
    fn g2_delta6_recorded_terms() {
        use G2Letter::*;
        let (g, _, d6) = g2_invariants().unwrap();
        let v = |l: G2Letter| Var::finite(g2_index(l));
        let c = |ls: &[G2Letter]| {
            let mut m: Vec<Var> = ls.iter().map(|&l| v(l)).collect();
            m.sort();
            d6.coeff(&m)
        };
        assert_eq!(c(&[C, C, C, E3, E3, F1]), Q::new(-4, 27));
        assert_eq!(c(&[C, Beta, F3, E3, E3, F1]), Q::new(-4, 9));
        assert_eq!(c(&[C, Alpha, F2, E3, E3, F1]), Q::new(2, 3));
        assert_eq!(c(&[C, Alpha, H1, F3, E3, E3]), Q::new(1, 9));
        assert_eq!(c(&[C, Alpha, H2, F3, E3, E3]), Q::new(-1, 27));
        assert_eq!(c(&[B, Alpha, F2, F3, E3, E3]), Q::new(-4, 9));
        let sl3_part: Vec<usize> = [E1, E2, E3, F1, F2, F3, H1, H2].iter().map(|&l| g2_index(l)).collect();
        let (sl3, d3) = delta_sl(3, 3).unwrap();
        let sq = sl3_into_g2(&d3, &sl3).pow(2).neg();
        assert_eq!(restrict(&d6, &sl3_part), sq);
        assert!(is_invariant(&d6, &g));
    }

    #[test]
    fn trace_shift_identity() {
        for n in 2..=4 {
            let gl = build_gl(n).unwrap();
            let sl = build_sl(n).unwrap();
            // sl basis element as an element of gl
            let emb = |i: usize| -> CommPoly {
                let m = sl.matrix_of(&sl.basis_vec(i));
                CommPoly::linear(&gl.coords_of_matrix(&m).unwrap())
            };
            let mut z = CommPoly::zero();
            for i in 1..=n {
                z.add_assign(&var(gl.index_of(&BasisLabel::E(i as u8, i as u8)).unwrap()));
            }
            let z = z.scale(&Q::new(1, n as i64));
            for k in 2..=n {
                let (_, dk) = delta_gl(n, k).unwrap();
                let mut rhs = CommPoly::zero();
                for j in 0..=k {
                    let m = k - j;
                    let dt = if m == 0 { CommPoly::one() } else { delta_sl(n, m).unwrap().1.substitute(|v| emb(v.index())) };
                    rhs.add_assign(&z.pow(j as u32).mul(&dt).scale(&Q::binomial((n - k + j) as i64, j as i64)));
                }
                assert_eq!(dk, rhs, "n={} k={}", n, k);
            }
        }
    }

    #[test]
    fn pfaffian_squares_to_determinant() {
        for two_n in [4, 6] {
            let (g, p) = pfaffian(two_n).unwrap();
            let det = principal_minors(&skew_matrix(&g), two_n);
            assert_eq!(p.pow(2), det);
            assert!(is_invariant(&p, &g));
        }
        assert_eq!(pfaffian(8).unwrap().1.len(), 105);
    }

    #[test]
    fn permanents_on_cartan() {
        let (g, phi4) = phi_so(7, 2).unwrap();
        let cart: Vec<CommPoly> = g.cartan.iter().map(|&i| var(i)).collect();
        let mut prod = CommPoly::one();
        for h in &cart {
            prod = prod.mul(&CommPoly::one().add(&h.pow(2)).add(&h.pow(4)));
        }
        assert_eq!(restrict(&phi4, &g.cartan), prod.homogeneous_part(4));
        assert!(is_invariant(&phi4, &g));
        // series identity through order 6
        let m = so_matrix(&g);
        let phi = permanent_series(&m, 6);
        for s in 1..=6 {
            let mut acc = phi[s].clone();
            for j in 1..=s {
                let dj = principal_minors(&m, j).scale(&Q::int(if j % 2 == 0 { 1 } else { -1 }));
                acc.add_assign(&dj.mul(&phi[s - j]));
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn symplectic_invariants() {
        let g = build_sp(4).unwrap();
        assert!(principal_minors(&sp_matrix(&g), 3).is_zero());
        let (g, d4) = delta_sp(4, 2).unwrap();
        assert!(is_invariant(&d4, &g));
        let (g, d2) = delta_sp(2, 1).unwrap();
        let c = casimir(&g);
        assert!(!d2.is_zero() && is_invariant(&d2, &g) && d2.len() == c.len());
    }
}
