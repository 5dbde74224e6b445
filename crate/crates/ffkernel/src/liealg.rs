//! Finite-dimensional Lie algebras given by structure constants in a fixed
//! basis, together with a nondegenerate invariant form.
//!
//! Every algebra is built from an explicit matrix realization; brackets are
//! matrix commutators read back in the basis.

use crate::field::{Field, QSqrt2, QI};
use crate::linalg::{self, Mat};
use crate::rational::Q;
use std::fmt;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Gl,
    Sl,
    Sp,
    So,
    SoSkew,
    G2,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum G2Letter {
    E1,
    E2,
    E3,
    F1,
    F2,
    F3,
    H1,
    H2,
    A,
    B,
    C,
    Alpha,
    Beta,
    Gamma,
}

impl G2Letter {
    pub const ALL: [G2Letter; 14] = [
        G2Letter::E1,
        G2Letter::E2,
        G2Letter::E3,
        G2Letter::F1,
        G2Letter::F2,
        G2Letter::F3,
        G2Letter::H1,
        G2Letter::H2,
        G2Letter::A,
        G2Letter::B,
        G2Letter::C,
        G2Letter::Alpha,
        G2Letter::Beta,
        G2Letter::Gamma,
    ];

    pub fn name(self) -> &'static str {
        match self {
            G2Letter::E1 => "e1",
            G2Letter::E2 => "e2",
            G2Letter::E3 => "e3",
            G2Letter::F1 => "f1",
            G2Letter::F2 => "f2",
            G2Letter::F3 => "f3",
            G2Letter::H1 => "h1",
            G2Letter::H2 => "h2",
            G2Letter::A => "a",
            G2Letter::B => "b",
            G2Letter::C => "c",
            G2Letter::Alpha => "alpha",
            G2Letter::Beta => "beta",
            G2Letter::Gamma => "gamma",
        }
    }
}

/// Basis element names. Matrix indices are 1-based, as in the labels.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisLabel {
    /// Matrix unit of gl_n, or an off-diagonal one of sl_n.
    E(u8, u8),
    /// `E_ii - E_{i+1,i+1}` in sl_n.
    H(u8),
    /// `E_ij - ε E_{j'i'}` in sp or so.
    F(u8, u8),
    /// `E_ij - E_ji` in the skew realization of so_{2n}.
    Fo(u8, u8),
    G2(G2Letter),
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::E(i, j) => write!(f, "E[{},{}]", i, j),
            BasisLabel::H(i) => write!(f, "H[{}]", i),
            BasisLabel::F(i, j) => write!(f, "F[{},{}]", i, j),
            BasisLabel::Fo(i, j) => write!(f, "Fo[{},{}]", i, j),
            BasisLabel::G2(l) => write!(f, "g2:{}", l.name()),
        }
    }
}

impl std::str::FromStr for BasisLabel {
    type Err = LieError;
    fn from_str(s: &str) -> Result<BasisLabel, LieError> {
        let bad = || LieError::BadLabel(s.to_string());
        if let Some(name) = s.strip_prefix("g2:") {
            return G2Letter::ALL
                .iter()
                .find(|l| l.name() == name)
                .map(|&l| BasisLabel::G2(l))
                .ok_or_else(bad);
        }
        let open = s.find('[').ok_or_else(bad)?;
        let inner = s[open + 1..].strip_suffix(']').ok_or_else(bad)?;
        let nums: Vec<u8> = inner
            .split(',')
            .map(|t| t.trim().parse::<u8>().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        match (&s[..open], nums.as_slice()) {
            ("E", [i, j]) => Ok(BasisLabel::E(*i, *j)),
            ("H", [i]) => Ok(BasisLabel::H(*i)),
            ("F", [i, j]) => Ok(BasisLabel::F(*i, *j)),
            ("Fo", [i, j]) => Ok(BasisLabel::Fo(*i, *j)),
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("unsupported rank or size: {0}")]
    BadSize(String),
    #[error("unknown basis label {0:?}")]
    BadLabel(String),
    #[error("matrix is not in the span of the basis")]
    NotInSpan,
    #[error("realization produced irrational structure constants")]
    Irrational,
}

/// Sparse vector in basis coordinates.
pub type SparseVec = Vec<(usize, Q)>;

#[derive(Clone, Debug)]
pub struct LieAlgebra {
    pub name: String,
    pub family: Family,
    /// Size of the defining matrices.
    pub n: usize,
    pub basis: Vec<BasisLabel>,
    /// `brackets[i][j]` = coordinates of `[x_i, x_j]`.
    brackets: Vec<Vec<SparseVec>>,
    form: Mat<Q>,
    form_inv: Mat<Q>,
    pub cartan: Vec<usize>,
    pub rank: usize,
    /// Rational defining representation, one matrix per basis element.
    pub rep: Vec<Mat<Q>>,
}

/// Reads coordinates of matrices in a fixed spanning family.
struct Coords<F: Field> {
    basis: Vec<Vec<F>>,
    pivots: Vec<usize>,
    inv: Mat<F>,
}

impl<F: Field> Coords<F> {
    fn new(mats: &[Mat<F>]) -> Result<Self, LieError> {
        let basis: Vec<Vec<F>> = mats.iter().map(|m| m.iter().flatten().cloned().collect()).collect();
        let mut r = basis.clone();
        let pivots = linalg::rref(&mut r);
        if pivots.len() != basis.len() {
            return Err(LieError::BadSize("basis matrices are linearly dependent".into()));
        }
        let sub: Mat<F> = basis.iter().map(|v| pivots.iter().map(|&p| v[p].clone()).collect()).collect();
        let inv = linalg::inverse(&sub).ok_or(LieError::NotInSpan)?;
        Ok(Coords { basis, pivots, inv })
    }

    fn of(&self, m: &Mat<F>) -> Result<Vec<F>, LieError> {
        let flat: Vec<F> = m.iter().flatten().cloned().collect();
        let d = self.basis.len();
        let mut c = vec![F::zero(); d];
        for (k, &p) in self.pivots.iter().enumerate() {
            if flat[p].is_zero() {
                continue;
            }
            for (a, ca) in c.iter_mut().enumerate() {
                *ca = ca.add(&flat[p].mul(&self.inv[k][a]));
            }
        }
        for (pos, val) in flat.iter().enumerate() {
            let mut s = F::zero();
            for (a, ca) in c.iter().enumerate() {
                if !ca.is_zero() && !self.basis[a][pos].is_zero() {
                    s = s.add(&ca.mul(&self.basis[a][pos]));
                }
            }
            if s != *val {
                return Err(LieError::NotInSpan);
            }
        }
        Ok(c)
    }
}

fn unit<F: Field>(n: usize, i: usize, j: usize, c: F) -> Mat<F> {
    let mut m = linalg::zeros(n, n);
    m[i][j] = c;
    m
}

fn add_mat<F: Field>(a: &Mat<F>, b: &Mat<F>) -> Mat<F> {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x.add(y)).collect()).collect()
}

fn sub_mat<F: Field>(a: &Mat<F>, b: &Mat<F>) -> Mat<F> {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x.sub(y)).collect()).collect()
}

fn commutator<F: Field>(a: &Mat<F>, b: &Mat<F>) -> Mat<F> {
    sub_mat(&linalg::mat_mul(a, b), &linalg::mat_mul(b, a))
}

fn trace<F: Field>(a: &Mat<F>) -> F {
    (0..a.len()).fold(F::zero(), |s, i| s.add(&a[i][i]))
}

fn to_q(v: &[QSqrt2]) -> Result<Vec<Q>, LieError> {
    v.iter().map(|x| x.as_q().ok_or(LieError::Irrational)).collect()
}

/// Structure constants and `scale * tr(xy)` from a realization.
fn structure_from<F: Field>(
    mats: &[Mat<F>],
    scale: &Q,
) -> Result<(Vec<Vec<SparseVec>>, Mat<Q>), LieError> {
    let coords = Coords::new(mats)?;
    let d = mats.len();
    let mut brackets = vec![vec![Vec::new(); d]; d];
    for i in 0..d {
        for j in (i + 1)..d {
            let c = coords.of(&commutator(&mats[i], &mats[j]))?;
            let mut sv = Vec::new();
            for (k, ck) in c.iter().enumerate() {
                if !ck.is_zero() {
                    sv.push((k, ck.as_q().ok_or(LieError::Irrational)?));
                }
            }
            brackets[j][i] = sv.iter().map(|(k, c)| (*k, -c)).collect();
            brackets[i][j] = sv;
        }
    }
    let mut form = linalg::zeros::<Q>(d, d);
    for i in 0..d {
        for j in i..d {
            let t = trace(&linalg::mat_mul(&mats[i], &mats[j]));
            let t = &t.as_q().ok_or(LieError::Irrational)? * scale;
            form[i][j] = t.clone();
            form[j][i] = t;
        }
    }
    Ok((brackets, form))
}

impl LieAlgebra {
    fn assemble(
        name: String,
        family: Family,
        n: usize,
        basis: Vec<BasisLabel>,
        rep: Vec<Mat<Q>>,
        brackets: Vec<Vec<SparseVec>>,
        form: Mat<Q>,
        cartan: Vec<usize>,
    ) -> Result<LieAlgebra, LieError> {
        let form_inv = linalg::inverse(&form)
            .ok_or_else(|| LieError::BadSize(format!("{}: degenerate form", name)))?;
        let rank = cartan.len();
        Ok(LieAlgebra { name, family, n, basis, brackets, form, form_inv, cartan, rank, rep })
    }

    fn from_rational_rep(
        name: String,
        family: Family,
        n: usize,
        basis: Vec<BasisLabel>,
        rep: Vec<Mat<Q>>,
        cartan: Vec<usize>,
    ) -> Result<LieAlgebra, LieError> {
        let (brackets, form) = structure_from(&rep, &Q::one())?;
        LieAlgebra::assemble(name, family, n, basis, rep, brackets, form, cartan)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `[x_i, x_j]`.
    pub fn bracket(&self, i: usize, j: usize) -> &[(usize, Q)] {
        &self.brackets[i][j]
    }

    pub fn bracket_vec(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim()];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (k, s) in &self.brackets[i][j] {
                    out[*k] += &c * s;
                }
            }
        }
        out
    }

    pub fn form(&self, i: usize, j: usize) -> &Q {
        &self.form[i][j]
    }

    pub fn form_matrix(&self) -> &Mat<Q> {
        &self.form
    }

    pub fn form_vec(&self, x: &[Q], y: &[Q]) -> Q {
        let mut s = Q::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() && !self.form[i][j].is_zero() {
                    s += &(xi * yj) * &self.form[i][j];
                }
            }
        }
        s
    }

    /// Coordinates of the dual basis element `x^a`, with `B(x_b, x^a) = δ_ab`.
    pub fn dual(&self, a: usize) -> SparseVec {
        self.form_inv[a]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(b, c)| (b, c.clone()))
            .collect()
    }

    /// Pairs `(a, b, c)` with `Σ_a x_a ⊗ x^a = Σ c x_a ⊗ x_b`.
    pub fn casimir_terms(&self) -> Vec<(usize, usize, Q)> {
        let mut out = Vec::new();
        for a in 0..self.dim() {
            for (b, c) in self.dual(a) {
                out.push((a, b, c));
            }
        }
        out
    }

    pub fn index_of(&self, label: &BasisLabel) -> Option<usize> {
        self.basis.iter().position(|l| l == label)
    }

    pub fn label(&self, i: usize) -> BasisLabel {
        self.basis[i]
    }

    pub fn parse_label(&self, s: &str) -> Result<usize, LieError> {
        let l: BasisLabel = s.parse()?;
        self.index_of(&l).ok_or_else(|| LieError::BadLabel(s.to_string()))
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        v[i] = Q::one();
        v
    }

    /// Matrix of `ad(x)`: column `j` holds `[x, x_j]`.
    pub fn ad_matrix(&self, x: &[Q]) -> Mat<Q> {
        let d = self.dim();
        let mut m = linalg::zeros::<Q>(d, d);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..d {
                for (k, c) in &self.brackets[i][j] {
                    m[*k][j] += xi * c;
                }
            }
        }
        m
    }

    pub fn killing(&self) -> Mat<Q> {
        let ads: Vec<Mat<Q>> = (0..self.dim()).map(|i| self.ad_matrix(&self.basis_vec(i))).collect();
        let d = self.dim();
        let mut k = linalg::zeros::<Q>(d, d);
        for i in 0..d {
            for j in i..d {
                let t = trace(&linalg::mat_mul(&ads[i], &ads[j]));
                k[i][j] = t.clone();
                k[j][i] = t;
            }
        }
        k
    }

    /// Coordinates of a matrix in the defining representation.
    pub fn coords_of_matrix(&self, m: &Mat<Q>) -> Result<Vec<Q>, LieError> {
        Coords::new(&self.rep)?.of(m)
    }

    pub fn matrix_of(&self, x: &[Q]) -> Mat<Q> {
        let mut m = linalg::zeros::<Q>(self.n, self.n);
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for i in 0..self.n {
                for j in 0..self.n {
                    if !self.rep[a][i][j].is_zero() {
                        m[i][j] += xa * &self.rep[a][i][j];
                    }
                }
            }
        }
        m
    }

    /// Dimension of the centralizer of `x`.
    pub fn centralizer_dim(&self, x: &[Q]) -> usize {
        self.dim() - linalg::rank(&self.ad_matrix(x))
    }

    pub fn is_regular(&self, x: &[Q]) -> bool {
        self.centralizer_dim(x) == self.rank
    }

    /// Largest deviation from the Jacobi identity and form invariance,
    /// reported as booleans.
    pub fn check_axioms(&self) -> (bool, bool) {
        let d = self.dim();
        let mut jacobi = true;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let (x, y, z) = (self.basis_vec(i), self.basis_vec(j), self.basis_vec(k));
                    let a = self.bracket_vec(&x, &self.bracket_vec(&y, &z));
                    let b = self.bracket_vec(&y, &self.bracket_vec(&z, &x));
                    let c = self.bracket_vec(&z, &self.bracket_vec(&x, &y));
                    if a.iter().zip(&b).zip(&c).any(|((p, q), r)| !(p + q + r).is_zero()) {
                        jacobi = false;
                    }
                }
            }
        }
        let mut invariant = true;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let (x, y, z) = (self.basis_vec(i), self.basis_vec(j), self.basis_vec(k));
                    let l = self.form_vec(&self.bracket_vec(&x, &y), &z);
                    let r = self.form_vec(&x, &self.bracket_vec(&y, &z));
                    if l != r {
                        invariant = false;
                    }
                }
            }
        }
        (jacobi, invariant)
    }

    /// `{name, dim, basis, bracket, form}` with sparse bracket and form entries.
    pub fn to_json(&self) -> serde_json::Value {
        let mut br = Vec::new();
        for i in 0..self.dim() {
            for j in (i + 1)..self.dim() {
                for (k, c) in &self.brackets[i][j] {
                    br.push(serde_json::json!([i, j, k, c.to_string()]));
                }
            }
        }
        let mut fm = Vec::new();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                if !self.form[i][j].is_zero() {
                    fm.push(serde_json::json!([i, j, self.form[i][j].to_string()]));
                }
            }
        }
        serde_json::json!({
            "name": self.name,
            "dim": self.dim(),
            "basis": self.basis.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
            "bracket": br,
            "form": fm,
        })
    }
}

pub fn build_gl(n: usize) -> Result<LieAlgebra, LieError> {
    if n == 0 {
        return Err(LieError::BadSize("gl_0".into()));
    }
    let mut basis = Vec::new();
    let mut rep = Vec::new();
    for i in 0..n {
        for j in 0..n {
            basis.push(BasisLabel::E(i as u8 + 1, j as u8 + 1));
            rep.push(unit(n, i, j, Q::one()));
        }
    }
    let cartan = (0..n).map(|i| i * n + i).collect();
    LieAlgebra::from_rational_rep(format!("gl{}", n), Family::Gl, n, basis, rep, cartan)
}

/// Weyl involution `θ(E_ij) = -E_ji` of gl_n, as a matrix acting on
/// coordinates.
pub fn weyl_involution_gl(n: usize) -> Mat<Q> {
    let mut m = vec![vec![Q::zero(); n * n]; n * n];
    for i in 0..n {
        for j in 0..n {
            m[j * n + i][i * n + j] = Q::int(-1);
        }
    }
    m
}

pub fn build_sl(n: usize) -> Result<LieAlgebra, LieError> {
    if n < 2 {
        return Err(LieError::BadSize(format!("sl_{} needs n >= 2", n)));
    }
    let mut basis = Vec::new();
    let mut rep = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                basis.push(BasisLabel::E(i as u8 + 1, j as u8 + 1));
                rep.push(unit(n, i, j, Q::one()));
            }
        }
    }
    let mut cartan = Vec::new();
    for i in 0..n - 1 {
        cartan.push(basis.len());
        basis.push(BasisLabel::H(i as u8 + 1));
        rep.push(sub_mat(&unit(n, i, i, Q::one()), &unit(n, i + 1, i + 1, Q::one())));
    }
    LieAlgebra::from_rational_rep(format!("sl{}", n), Family::Sl, n, basis, rep, cartan)
}

/// `sp_{2n}` from `F_ij = E_ij - ε_i ε_j E_{j'i'}`, `i' = 2n+1-i`, `ε_i = 1` for `i ≤ n`.
/// Representatives satisfy `j ≤ i'`.
pub fn build_sp(two_n: usize) -> Result<LieAlgebra, LieError> {
    if two_n < 2 || two_n % 2 == 1 {
        return Err(LieError::BadSize(format!("sp_{} needs an even size", two_n)));
    }
    let n = two_n / 2;
    let mut basis = Vec::new();
    let mut rep = Vec::new();
    let mut cartan = Vec::new();
    for i in 1..=two_n {
        for j in 1..=two_n {
            if j > two_n + 1 - i {
                continue;
            }
            let m = sp_f_matrix(two_n, i, j);
            if i == j {
                cartan.push(basis.len());
            }
            basis.push(BasisLabel::F(i as u8, j as u8));
            rep.push(m);
        }
    }
    debug_assert_eq!(basis.len(), n * (2 * n + 1));
    LieAlgebra::from_rational_rep(format!("sp{}", two_n), Family::Sp, two_n, basis, rep, cartan)
}

fn sp_eps(two_n: usize, i: usize) -> i64 {
    if i <= two_n / 2 {
        1
    } else {
        -1
    }
}

fn sp_f_matrix(two_n: usize, i: usize, j: usize) -> Mat<Q> {
    let (ip, jp) = (two_n + 1 - i, two_n + 1 - j);
    let s = sp_eps(two_n, i) * sp_eps(two_n, j);
    add_mat(&unit(two_n, i - 1, j - 1, Q::one()), &unit(two_n, jp - 1, ip - 1, Q::int(-s)))
}

/// Canonical form of `F_ij` in sp: `F_ij = sign · F_rep`.
pub fn sp_canonical(two_n: usize, i: usize, j: usize) -> (i64, usize, usize) {
    if j <= two_n + 1 - i {
        (1, i, j)
    } else {
        let (ip, jp) = (two_n + 1 - i, two_n + 1 - j);
        (-sp_eps(two_n, i) * sp_eps(two_n, j), jp, ip)
    }
}

/// `so_N` from `F_ij = E_ij - E_{j'i'}`, `i' = N+1-i`; representatives `i + j < N + 1`.
pub fn build_so(size: usize) -> Result<LieAlgebra, LieError> {
    if size < 3 {
        return Err(LieError::BadSize(format!("so_{} is not semisimple", size)));
    }
    let mut basis = Vec::new();
    let mut rep = Vec::new();
    let mut cartan = Vec::new();
    for i in 1..=size {
        for j in 1..=size {
            if i + j >= size + 1 {
                continue;
            }
            if i == j {
                cartan.push(basis.len());
            }
            basis.push(BasisLabel::F(i as u8, j as u8));
            rep.push(so_f_matrix(size, i, j));
        }
    }
    LieAlgebra::from_rational_rep(format!("so{}", size), Family::So, size, basis, rep, cartan)
}

fn so_f_matrix(size: usize, i: usize, j: usize) -> Mat<Q> {
    let (ip, jp) = (size + 1 - i, size + 1 - j);
    sub_mat(&unit(size, i - 1, j - 1, Q::one()), &unit(size, jp - 1, ip - 1, Q::one()))
}

/// Canonical form of `F_ij` in so: `None` when `F_ij = 0`.
pub fn so_canonical(size: usize, i: usize, j: usize) -> Option<(i64, usize, usize)> {
    if i + j == size + 1 {
        None
    } else if i + j < size + 1 {
        Some((1, i, j))
    } else {
        Some((-1, size + 1 - j, size + 1 - i))
    }
}

/// `so_{2n}` as skew-symmetric matrices, basis `Fo_ij = E_ij - E_ji`, `i < j`.
pub fn build_so_skew(size: usize) -> Result<LieAlgebra, LieError> {
    if size < 4 || size % 2 == 1 {
        return Err(LieError::BadSize(format!("skew so_{} needs an even size >= 4", size)));
    }
    let mut basis = Vec::new();
    let mut rep = Vec::new();
    let mut cartan = Vec::new();
    for i in 1..=size {
        for j in (i + 1)..=size {
            if j == i + 1 && i % 2 == 1 {
                cartan.push(basis.len());
            }
            basis.push(BasisLabel::Fo(i as u8, j as u8));
            rep.push(sub_mat(&unit(size, i - 1, j - 1, Q::one()), &unit(size, j - 1, i - 1, Q::one())));
        }
    }
    LieAlgebra::from_rational_rep(format!("so{}skew", size), Family::SoSkew, size, basis, rep, cartan)
}

/// The 7×7 matrices of the G2 basis, over `Q(√2)`.
pub fn g2_matrices() -> Vec<Mat<QSqrt2>> {
    use G2Letter::*;
    let r2 = QSqrt2::root();
    let one = QSqrt2::one();
    let q = |n: i64| QSqrt2::from_q(Q::int(n));
    let mut mats: Vec<Mat<QSqrt2>> = vec![linalg::zeros(7, 7); 14];
    let idx = |l: G2Letter| G2Letter::ALL.iter().position(|&m| m == l).unwrap();
    // sl3 part: iota(E_ij) = E_ij - E_{(7-j)(7-i)}
    let mut iota = |l: G2Letter, entries: &[(usize, usize, i64)]| {
        let m = &mut mats[idx(l)];
        for &(i, j, c) in entries {
            m[i - 1][j - 1] = m[i - 1][j - 1].add(&q(c));
            m[7 - j - 1][7 - i - 1] = m[7 - j - 1][7 - i - 1].sub(&q(c));
        }
    };
    iota(E1, &[(1, 2, 1)]);
    iota(E2, &[(2, 3, 1)]);
    iota(E3, &[(1, 3, 1)]);
    iota(F1, &[(2, 1, 1)]);
    iota(F2, &[(3, 2, 1)]);
    iota(F3, &[(3, 1, 1)]);
    iota(H1, &[(1, 1, 1), (2, 2, -1)]);
    iota(H2, &[(1, 1, 1), (2, 2, 1), (3, 3, -2)]);
    // the complement, read off the generic matrix entry by entry
    let table: [(usize, usize, G2Letter, QSqrt2); 24] = [
        (1, 4, Beta, one.neg()),
        (1, 5, Gamma, one.clone()),
        (1, 7, A, r2.clone()),
        (2, 4, Alpha, one.clone()),
        (2, 6, Gamma, one.neg()),
        (2, 7, B, r2.clone()),
        (3, 5, Alpha, one.neg()),
        (3, 6, Beta, one.clone()),
        (3, 7, C, r2.clone()),
        (4, 1, B, one.clone()),
        (4, 2, A, one.neg()),
        (4, 7, Gamma, r2.clone()),
        (5, 1, C, one.neg()),
        (5, 3, A, one.clone()),
        (5, 7, Beta, r2.clone()),
        (6, 2, C, one.clone()),
        (6, 3, B, one.neg()),
        (6, 7, Alpha, r2.clone()),
        (7, 1, Alpha, r2.neg()),
        (7, 2, Beta, r2.neg()),
        (7, 3, Gamma, r2.neg()),
        (7, 4, C, r2.neg()),
        (7, 5, B, r2.neg()),
        (7, 6, A, r2.neg()),
    ];
    for (i, j, l, c) in table {
        let m = &mut mats[idx(l)];
        m[i - 1][j - 1] = m[i - 1][j - 1].add(&c);
    }
    mats
}

/// Diagonal conjugation by `diag(1,…,1,1/√2)` makes every G2 matrix rational.
pub fn g2_rational_matrices() -> Result<Vec<Mat<Q>>, LieError> {
    let r2 = QSqrt2::root();
    let half_r2 = QSqrt2::new(Q::zero(), Q::new(1, 2));
    g2_matrices()
        .iter()
        .map(|m| {
            let mut out = Vec::with_capacity(7);
            for i in 0..7 {
                let mut row = Vec::with_capacity(7);
                for j in 0..7 {
                    // D^{-1} M D with D = diag(1,..,1, 1/√2)
                    let mut v = m[i][j].clone();
                    if j == 6 && i != 6 {
                        v = v.mul(&half_r2);
                    }
                    if i == 6 && j != 6 {
                        v = v.mul(&r2);
                    }
                    row.push(v);
                }
                out.push(to_q(&row)?);
            }
            Ok(out)
        })
        .collect()
}

/// G2 with the invariant form normalized so that the Casimir element equals Δ₂.
pub fn build_g2() -> Result<LieAlgebra, LieError> {
    let mats = g2_matrices();
    let (brackets, form) = structure_from(&mats, &Q::new(1, 2))?;
    let basis: Vec<BasisLabel> = G2Letter::ALL.iter().map(|&l| BasisLabel::G2(l)).collect();
    let rep = g2_rational_matrices()?;
    LieAlgebra::assemble("g2".into(), Family::G2, 7, basis, rep, brackets, form, vec![6, 7])
}

/// Index of a G2 letter in the basis of [`build_g2`].
pub fn g2_index(l: G2Letter) -> usize {
    G2Letter::ALL.iter().position(|&m| m == l).unwrap()
}

/// Build by family and matrix size; `G2` ignores the size.
pub fn build(family: Family, n: usize) -> Result<LieAlgebra, LieError> {
    match family {
        Family::Gl => build_gl(n),
        Family::Sl => build_sl(n),
        Family::Sp => build_sp(n),
        Family::So => build_so(n),
        Family::SoSkew => build_so_skew(n),
        Family::G2 => build_g2(),
    }
}

/// Images of the skew basis `Fo_ij` in the `F`-realization of `so_{2n}`.
///
/// The two forms are not equivalent over `Q` (one is definite), so the map is
/// defined over `Q(i)`: conjugation by the matrix pairing coordinates `k` and
/// `k' = 2n+1-k`.
pub fn so_skew_to_so(size: usize) -> Result<Vec<Vec<QI>>, LieError> {
    let skew = build_so_skew(size)?;
    let so = build_so(size)?;
    // w_k = v_k + i v_k', w_k' = (v_k - i v_k')/2 gives P^T J P = I
    let n = size;
    let i_unit = QI::root();
    let half = QI::from_q(Q::new(1, 2));
    let mut p: Mat<QI> = linalg::zeros(n, n);
    for k in 0..n / 2 {
        let kp = n - 1 - k;
        p[k][k] = QI::one();
        p[k][kp] = i_unit.clone();
        p[kp][k] = half.clone();
        p[kp][kp] = i_unit.neg().mul(&half);
    }
    let pinv = linalg::inverse(&p).ok_or(LieError::NotInSpan)?;
    let so_mats: Vec<Mat<QI>> = so
        .rep
        .iter()
        .map(|m| m.iter().map(|r| r.iter().map(|x| QI::from_q(x.clone())).collect()).collect())
        .collect();
    let coords = Coords::new(&so_mats)?;
    skew.rep
        .iter()
        .map(|m| {
            let mq: Mat<QI> = m.iter().map(|r| r.iter().map(|x| QI::from_q(x.clone())).collect()).collect();
            let conj = linalg::mat_mul(&linalg::mat_mul(&p, &mq), &pinv);
            coords.of(&conj)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coords(g: &LieAlgebra, terms: &[(&str, Q)]) -> Vec<Q> {
        let mut v = vec![Q::zero(); g.dim()];
        for (s, c) in terms {
            v[g.parse_label(s).unwrap()] += c;
        }
        v
    }

    #[test]
    fn weyl_involution() {
        let t = weyl_involution_gl(3);
        assert_eq!(t[0][0], Q::int(-1));
        assert_eq!(crate::linalg::mat_mul(&t, &t), crate::linalg::identity(9));
        let (_, d) = crate::invariants::delta_gl(3, 2).unwrap();
        let (_, d3) = crate::invariants::delta_gl(3, 3).unwrap();
        let theta = |f: &crate::sympoly::CommPoly| {
            f.substitute(|v| {
                let col: Vec<Q> = (0..9).map(|b| t[b][v.index()].clone()).collect();
                crate::sympoly::CommPoly::linear(&col)
            })
        };
        assert_eq!(theta(&d), d);
        assert_eq!(theta(&d3), d3.neg());
    }

    #[test]
    fn dimensions() {
        assert_eq!(build_gl(3).unwrap().dim(), 9);
        assert_eq!(build_sl(4).unwrap().dim(), 15);
        assert_eq!(build_sp(6).unwrap().dim(), 21);
        assert_eq!(build_so(7).unwrap().dim(), 21);
        assert_eq!(build_so(8).unwrap().dim(), 28);
        assert_eq!(build_so_skew(8).unwrap().dim(), 28);
        assert_eq!(build_g2().unwrap().dim(), 14);
        assert!(build_sl(1).is_err());
        assert!(build_sp(3).is_err());
    }

    #[test]
    fn so4_basis_labels() {
        let g = build_so(4).unwrap();
        let names: Vec<String> = g.basis.iter().map(|l| l.to_string()).collect();
        assert_eq!(names, ["F[1,1]", "F[1,2]", "F[1,3]", "F[2,1]", "F[2,2]", "F[3,1]"]);
    }

    #[test]
    fn sp2_is_scaled_sl2() {
        let g = build_sp(2).unwrap();
        let b = g.bracket_vec(&coords(&g, &[("F[1,2]", Q::one())]), &coords(&g, &[("F[2,1]", Q::one())]));
        assert_eq!(b, coords(&g, &[("F[1,1]", Q::int(4))]));
    }

    #[test]
    fn skew_bracket() {
        let g = build_so_skew(8).unwrap();
        let b = g.bracket_vec(&coords(&g, &[("Fo[1,2]", Q::one())]), &coords(&g, &[("Fo[2,3]", Q::one())]));
        assert_eq!(b, coords(&g, &[("Fo[1,3]", Q::one())]));
    }

    #[test]
    fn axioms_hold() {
        for g in [build_sl(3), build_sp(4), build_so(5), build_g2()] {
            let g = g.unwrap();
            assert_eq!(g.check_axioms(), (true, true), "{}", g.name);
        }
    }

    #[test]
    fn g2_recorded_brackets() {
        let g = build_g2().unwrap();
        let one = |s: &str| coords(&g, &[(s, Q::one())]);
        let br = |x: &str, y: &str| g.bracket_vec(&one(x), &one(y));
        // diag(-2,1,1) = -(3h1 + h2)/2, diag(1,-2,1) = (3h1 - h2)/2
        assert_eq!(br("g2:a", "g2:alpha"), coords(&g, &[("g2:h1", Q::new(-3, 2)), ("g2:h2", Q::new(-1, 2))]));
        assert_eq!(br("g2:b", "g2:beta"), coords(&g, &[("g2:h1", Q::new(3, 2)), ("g2:h2", Q::new(-1, 2))]));
        assert_eq!(br("g2:c", "g2:gamma"), one("g2:h2"));
        assert_eq!(br("g2:alpha", "g2:c"), coords(&g, &[("g2:f3", Q::int(3))]));
        assert_eq!(br("g2:beta", "g2:c"), coords(&g, &[("g2:f2", Q::int(3))]));
        assert_eq!(br("g2:a", "g2:b"), coords(&g, &[("g2:gamma", Q::int(-2))]));
        assert_eq!(br("g2:gamma", "g2:beta"), coords(&g, &[("g2:a", Q::int(2))]));
        assert_eq!(br("g2:b", "g2:c"), coords(&g, &[("g2:alpha", Q::int(-2))]));
        assert_eq!(br("g2:beta", "g2:a"), coords(&g, &[("g2:e1", Q::int(3))]));
    }

    #[test]
    fn g2_form_matches_casimir_normalization() {
        let g = build_g2().unwrap();
        let i = |s: &str| g.parse_label(s).unwrap();
        assert_eq!(*g.form(i("g2:e1"), i("g2:f1")), Q::one());
        assert_eq!(*g.form(i("g2:h1"), i("g2:h1")), Q::int(2));
        assert_eq!(*g.form(i("g2:h2"), i("g2:h2")), Q::int(6));
        assert_eq!(*g.form(i("g2:a"), i("g2:alpha")), Q::int(-3));
        assert_eq!(g.rank, 2);
        // same structure constants from the rational conjugate
        let (br, _) = structure_from(&g.rep, &Q::one()).unwrap();
        assert_eq!(br, g.brackets);
    }

    #[test]
    fn skew_and_split_so8_are_isomorphic_over_q_i() {
        let skew = build_so_skew(8).unwrap();
        let so = build_so(8).unwrap();
        let phi = so_skew_to_so(8).unwrap();
        let d = skew.dim();
        for i in 0..d {
            for j in 0..d {
                // phi([x_i, x_j]) = [phi x_i, phi x_j]
                let mut lhs = vec![QI::zero(); d];
                for (k, c) in skew.bracket(i, j) {
                    for (m, v) in phi[*k].iter().enumerate() {
                        lhs[m] = lhs[m].add(&v.mul(&QI::from_q(c.clone())));
                    }
                }
                let mut rhs = vec![QI::zero(); d];
                for (a, pa) in phi[i].iter().enumerate() {
                    for (b, pb) in phi[j].iter().enumerate() {
                        if pa.is_zero() || pb.is_zero() {
                            continue;
                        }
                        for (k, c) in so.bracket(a, b) {
                            rhs[*k] = rhs[*k].add(&pa.mul(pb).mul(&QI::from_q(c.clone())));
                        }
                    }
                }
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn labels_roundtrip() {
        for s in ["E[1,2]", "H[2]", "F[3,3]", "Fo[1,4]", "g2:alpha"] {
            assert_eq!(s.parse::<BasisLabel>().unwrap().to_string(), s);
        }
        assert!("g2:delta".parse::<BasisLabel>().is_err());
        assert!("Q[1]".parse::<BasisLabel>().is_err());
    }
}
