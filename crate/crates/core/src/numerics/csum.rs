//! Kahan compensated summation for real and complex accumulations.

use crate::Scalar;
use num_complex::Complex;

/// Compensated accumulator for one real component.
///
/// The running error stays at a few ulps of the accumulated magnitude
/// regardless of the number of terms, instead of growing linearly as with a
/// naive sum.
#[derive(Debug, Clone, Copy)]
pub struct Kahan<T: Scalar> {
    sum: T,
    comp: T,
}

impl<T: Scalar> Default for Kahan<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Scalar> Kahan<T> {
    pub fn new() -> Self {
        Kahan { sum: T::zero(), comp: T::zero() }
    }

    #[inline]
    pub fn add(&mut self, x: T) {
        let y = x - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> T {
        self.sum
    }
}

/// Componentwise compensated accumulator for complex terms.
#[derive(Debug, Clone, Copy)]
pub struct ComplexKahan<T: Scalar> {
    re: Kahan<T>,
    im: Kahan<T>,
}

impl<T: Scalar> Default for ComplexKahan<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Scalar> ComplexKahan<T> {
    pub fn new() -> Self {
        ComplexKahan { re: Kahan::new(), im: Kahan::new() }
    }

    #[inline]
    pub fn add(&mut self, z: Complex<T>) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    #[inline]
    pub fn value(&self) -> Complex<T> {
        Complex::new(self.re.value(), self.im.value())
    }
}

/// Compensated sum of a sequence of complex terms in iteration order.
pub fn kahan_sum<T, I>(terms: I) -> Complex<T>
where
    T: Scalar,
    I: IntoIterator<Item = Complex<T>>,
{
    let mut acc = ComplexKahan::new();
    for t in terms {
        acc.add(t);
    }
    acc.value()
}
