//! Scalar fields for matrix realizations: `Q` itself and quadratic
//! extensions `Q(√d)`.

use crate::rational::Q;
use std::fmt;

pub trait Field: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Self;
    fn from_q(q: Q) -> Self;
    /// `Some(q)` when the value lies in `Q`.
    fn as_q(&self) -> Option<Q>;
}

impl Field for Q {
    fn zero() -> Q {
        Q::zero()
    }
    fn one() -> Q {
        Q::one()
    }
    fn is_zero(&self) -> bool {
        Q::is_zero(self)
    }
    fn add(&self, o: &Q) -> Q {
        self + o
    }
    fn sub(&self, o: &Q) -> Q {
        self - o
    }
    fn mul(&self, o: &Q) -> Q {
        self * o
    }
    fn neg(&self) -> Q {
        -self
    }
    fn inv(&self) -> Q {
        self.recip()
    }
    fn from_q(q: Q) -> Q {
        q
    }
    fn as_q(&self) -> Option<Q> {
        Some(self.clone())
    }
}

/// `a + b√D` with `D` a non-square integer.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt<const D: i64> {
    pub a: Q,
    pub b: Q,
}

pub type QSqrt2 = QuadExt<2>;
/// Gaussian rationals.
pub type QI = QuadExt<-1>;

impl<const D: i64> QuadExt<D> {
    pub fn new(a: Q, b: Q) -> Self {
        QuadExt { a, b }
    }
    /// The generator `√D`.
    pub fn root() -> Self {
        QuadExt { a: Q::zero(), b: Q::one() }
    }
    pub fn conj(&self) -> Self {
        QuadExt { a: self.a.clone(), b: -&self.b }
    }
}

impl<const D: i64> fmt::Debug for QuadExt<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{}+{}*sqrt({})", self.a, self.b, D)
        }
    }
}

impl<const D: i64> Field for QuadExt<D> {
    fn zero() -> Self {
        QuadExt { a: Q::zero(), b: Q::zero() }
    }
    fn one() -> Self {
        QuadExt { a: Q::one(), b: Q::zero() }
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        QuadExt { a: &self.a + &o.a, b: &self.b + &o.b }
    }
    fn sub(&self, o: &Self) -> Self {
        QuadExt { a: &self.a - &o.a, b: &self.b - &o.b }
    }
    fn mul(&self, o: &Self) -> Self {
        let d = Q::int(D);
        QuadExt {
            a: &self.a * &o.a + &(&d * &(&self.b * &o.b)),
            b: &self.a * &o.b + &(&self.b * &o.a),
        }
    }
    fn neg(&self) -> Self {
        QuadExt { a: -&self.a, b: -&self.b }
    }
    fn inv(&self) -> Self {
        // (a - b√D) / (a² - D b²)
        let n = &(&self.a * &self.a) - &(&Q::int(D) * &(&self.b * &self.b));
        assert!(!n.is_zero(), "inverse of zero");
        let ni = n.recip();
        QuadExt { a: &self.a * &ni, b: -(&self.b * &ni) }
    }
    fn from_q(q: Q) -> Self {
        QuadExt { a: q, b: Q::zero() }
    }
    fn as_q(&self) -> Option<Q> {
        if self.b.is_zero() {
            Some(self.a.clone())
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt2_arithmetic() {
        let r = QSqrt2::root();
        assert_eq!(r.mul(&r), QSqrt2::from_q(Q::int(2)));
        let x = QSqrt2::new(Q::int(3), Q::new(1, 2));
        assert_eq!(x.mul(&x.inv()), QSqrt2::one());
        let i = QI::root();
        assert_eq!(i.mul(&i), QI::from_q(Q::int(-1)));
    }
}
