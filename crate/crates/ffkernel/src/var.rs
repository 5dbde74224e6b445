//! Packed loop variables `x_i[d]` on a chosen tensor component.
//!
//! The packed `u32` compares in PBW order: t-degree ascending, then
//! component, then basis index. The derivation `τ` is the largest key.

use std::fmt;

#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(u32);

pub const MAX_COMPONENTS: u8 = 64;
pub const MAX_INDEX: u16 = 1024;

impl Var {
    pub const TAU: Var = Var(u32::MAX);

    pub fn new(component: u8, index: u16, tdeg: i16) -> Var {
        assert!(component < MAX_COMPONENTS && index < MAX_INDEX);
        assert!(tdeg <= 0, "only non-positive t-degrees occur");
        let t = (tdeg as i32 + 0x8000) as u32;
        Var((t << 16) | ((component as u32) << 10) | index as u32)
    }

    /// Basis element `index` of the component-0 copy, at t-degree `tdeg`.
    pub fn loop_var(index: usize, tdeg: i16) -> Var {
        Var::new(0, index as u16, tdeg)
    }

    /// Degree-zero variable (an element of `g` itself).
    pub fn finite(index: usize) -> Var {
        Var::new(0, index as u16, 0)
    }

    /// Element `index` of the `site`-th copy of `g` (sites count from 1).
    pub fn site(site: usize, index: usize) -> Var {
        Var::new(site as u8, index as u16, 0)
    }

    pub fn is_tau(self) -> bool {
        self == Var::TAU
    }

    pub fn tdeg(self) -> i16 {
        ((self.0 >> 16) as i32 - 0x8000) as i16
    }

    pub fn component(self) -> u8 {
        ((self.0 >> 10) & 0x3f) as u8
    }

    pub fn index(self) -> usize {
        (self.0 & 0x3ff) as usize
    }

    pub fn with_tdeg(self, tdeg: i16) -> Var {
        Var::new(self.component(), self.index() as u16, tdeg)
    }

    pub fn with_component(self, c: u8) -> Var {
        Var::new(c, self.index() as u16, self.tdeg())
    }

    pub fn raw(self) -> u32 {
        self.0
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_tau() {
            return write!(f, "tau");
        }
        write!(f, "x{}", self.index())?;
        if self.component() != 0 {
            write!(f, "^({})", self.component())?;
        }
        if self.tdeg() != 0 {
            write!(f, "[{}]", self.tdeg())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packing_order() {
        let a = Var::new(0, 5, -2);
        let b = Var::new(0, 1, -1);
        let c = Var::new(1, 0, -1);
        assert!(a < b && b < c && c < Var::TAU);
        assert_eq!((a.tdeg(), a.component(), a.index()), (-2, 0, 5));
        assert_eq!(c.with_tdeg(-7).tdeg(), -7);
        assert!(Var::finite(3) > Var::loop_var(900, -1));
    }
}
