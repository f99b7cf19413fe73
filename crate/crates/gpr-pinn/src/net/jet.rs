//! Second-order forward-mode scalar: value plus first and second derivative
//! with respect to one seed variable. Used as the reference algebra for the
//! batched network propagation and directly by tests.

use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet2 {
    pub v: f64,
    pub d: f64,
    pub dd: f64,
}

impl Jet2 {
    /// The seed variable itself: derivative 1, curvature 0.
    pub fn var(v: f64) -> Self {
        Self { v, d: 1.0, dd: 0.0 }
    }

    pub fn constant(v: f64) -> Self {
        Self { v, d: 0.0, dd: 0.0 }
    }

    pub fn scale(self, c: f64) -> Self {
        Self {
            v: c * self.v,
            d: c * self.d,
            dd: c * self.dd,
        }
    }

    pub fn tanh(self) -> Self {
        let t = self.v.tanh();
        let t1 = 1.0 - t * t;
        let t2 = -2.0 * t * t1;
        Self {
            v: t,
            d: t1 * self.d,
            dd: t2 * self.d * self.d + t1 * self.dd,
        }
    }

    pub fn exp(self) -> Self {
        let e = self.v.exp();
        Self {
            v: e,
            d: e * self.d,
            dd: e * (self.d * self.d + self.dd),
        }
    }
}

impl Add for Jet2 {
    type Output = Jet2;
    fn add(self, rhs: Jet2) -> Jet2 {
        Jet2 {
            v: self.v + rhs.v,
            d: self.d + rhs.d,
            dd: self.dd + rhs.dd,
        }
    }
}

impl Sub for Jet2 {
    type Output = Jet2;
    fn sub(self, rhs: Jet2) -> Jet2 {
        Jet2 {
            v: self.v - rhs.v,
            d: self.d - rhs.d,
            dd: self.dd - rhs.dd,
        }
    }
}

impl Mul for Jet2 {
    type Output = Jet2;
    fn mul(self, rhs: Jet2) -> Jet2 {
        Jet2 {
            v: self.v * rhs.v,
            d: self.d * rhs.v + self.v * rhs.d,
            dd: self.dd * rhs.v + 2.0 * self.d * rhs.d + self.v * rhs.dd,
        }
    }
}

impl Neg for Jet2 {
    type Output = Jet2;
    fn neg(self) -> Jet2 {
        Jet2 {
            v: -self.v,
            d: -self.d,
            dd: -self.dd,
        }
    }
}
