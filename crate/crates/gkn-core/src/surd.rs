//! Exact arithmetic for values of the form `(t ± sqrt(s)) / 8`.
//!
//! The node-count bound and the roots of the instability quadratic are all
//! quadratic surds over 8. Comparing an integer `m` against such a value is
//! done by sign analysis and squaring, never by floating point:
//! `m < (t + sqrt(s))/8  ⇔  8m − t < 0  ∨  (8m − t)² < s`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// `(t + sqrt(s))/8` or `(t − sqrt(s))/8`, with `s ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurdOver8 {
    t: BigInt,
    s: BigInt,
    minus: bool,
}

impl SurdOver8 {
    /// `(t + sqrt(s))/8`. Panics if `s < 0`.
    pub fn plus(t: BigInt, s: BigInt) -> Self {
        assert!(!s.is_negative(), "radicand must be nonnegative");
        Self { t, s, minus: false }
    }

    /// `(t − sqrt(s))/8`. Panics if `s < 0`.
    pub fn minus(t: BigInt, s: BigInt) -> Self {
        assert!(!s.is_negative(), "radicand must be nonnegative");
        Self { t, s, minus: true }
    }

    pub fn offset(&self) -> &BigInt {
        &self.t
    }

    pub fn radicand(&self) -> &BigInt {
        &self.s
    }

    /// Compares the exact value against the integer `m`.
    pub fn cmp_int(&self, m: &BigInt) -> Ordering {
        // Compare ±sqrt(s) against d = 8m − t.
        let d: BigInt = m * BigInt::from(8) - &self.t;
        if self.minus {
            // −sqrt(s) vs d
            match d.sign() {
                num_bigint::Sign::Plus => Ordering::Less,
                num_bigint::Sign::NoSign => {
                    if self.s.is_zero() {
                        Ordering::Equal
                    } else {
                        Ordering::Less
                    }
                }
                num_bigint::Sign::Minus => (&d * &d).cmp(&self.s),
            }
        } else {
            // sqrt(s) vs d
            if d.is_negative() {
                Ordering::Greater
            } else {
                self.s.cmp(&(&d * &d))
            }
        }
    }

    /// Largest integer strictly below the value.
    pub fn max_int_strictly_below(&self) -> BigInt {
        let root = self.s.sqrt();
        let base = if self.minus {
            &self.t - root
        } else {
            &self.t + root
        };
        let mut m = base.div_floor(&BigInt::from(8));
        while self.cmp_int(&m) != Ordering::Greater {
            m -= 1;
        }
        while self.cmp_int(&(&m + 1)) == Ordering::Greater {
            m += 1;
        }
        m
    }

    /// Smallest integer strictly above the value.
    pub fn min_int_strictly_above(&self) -> BigInt {
        let root = self.s.sqrt();
        let base = if self.minus {
            &self.t - root
        } else {
            &self.t + root
        };
        let mut m = base.div_floor(&BigInt::from(8)) + 1;
        while self.cmp_int(&m) != Ordering::Less {
            m += 1;
        }
        while self.cmp_int(&(&m - 1)) == Ordering::Less {
            m -= 1;
        }
        m
    }

    /// The exact rational value when `s` is a perfect square.
    pub fn as_rational(&self) -> Option<BigRational> {
        let root = self.s.sqrt();
        if &root * &root != self.s {
            return None;
        }
        let numer = if self.minus {
            &self.t - root
        } else {
            &self.t + root
        };
        Some(BigRational::new(numer, BigInt::from(8)))
    }

    /// Floating-point approximation; never used in verdict logic.
    pub fn approx_f64(&self) -> f64 {
        let t = self.t.to_f64().unwrap_or(f64::NAN);
        let s = self.s.to_f64().unwrap_or(f64::NAN).sqrt();
        if self.minus {
            (t - s) / 8.0
        } else {
            (t + s) / 8.0
        }
    }

    /// Rational approximation with `bits` bits of precision on the root,
    /// computed as `floor(2^bits · sqrt(s)) / 2^bits`.
    pub fn approx_rational(&self, bits: u32) -> BigRational {
        let scale = BigInt::from(1) << bits;
        let scaled_root = (&self.s * &scale * &scale).sqrt();
        let signed_root = if self.minus {
            -scaled_root
        } else {
            scaled_root
        };
        BigRational::new(&self.t * &scale + signed_root, scale * 8)
    }
}

impl fmt::Display for SurdOver8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.minus { '-' } else { '+' };
        write!(f, "({}{}sqrt({}))/8", self.t, sign, self.s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn exact_integer_value() {
        // (192 + sqrt(36864))/8 = 48
        let f = SurdOver8::plus(int(192), int(36864));
        assert_eq!(f.cmp_int(&int(48)), Ordering::Equal);
        assert_eq!(f.cmp_int(&int(47)), Ordering::Greater);
        assert_eq!(f.cmp_int(&int(49)), Ordering::Less);
        assert_eq!(f.max_int_strictly_below(), int(47));
        assert_eq!(f.min_int_strictly_above(), int(49));
        assert_eq!(f.as_rational(), Some(BigRational::from(int(48))));
        assert_eq!(f.to_string(), "(192+sqrt(36864))/8");
    }

    #[test]
    fn non_square_radicand() {
        // (6 + sqrt(40))/8 ≈ 1.5406
        let f = SurdOver8::plus(int(6), int(40));
        assert_eq!(f.cmp_int(&int(1)), Ordering::Greater);
        assert_eq!(f.cmp_int(&int(2)), Ordering::Less);
        assert_eq!(f.max_int_strictly_below(), int(1));
        assert_eq!(f.min_int_strictly_above(), int(2));
        assert_eq!(f.as_rational(), None);
    }

    #[test]
    fn minus_branch() {
        // (6 - sqrt(36))/8 = 0
        let a = SurdOver8::minus(int(6), int(36));
        assert_eq!(a.cmp_int(&int(0)), Ordering::Equal);
        assert_eq!(a.min_int_strictly_above(), int(1));
        // (6 - sqrt(40))/8 < 0
        let b = SurdOver8::minus(int(6), int(40));
        assert_eq!(b.cmp_int(&int(0)), Ordering::Less);
        assert_eq!(b.min_int_strictly_above(), int(0));
        assert_eq!(b.max_int_strictly_below(), int(-1));
    }

    #[test]
    fn zero_radicand_is_rational() {
        let f = SurdOver8::plus(int(12), int(0));
        assert_eq!(f.as_rational(), Some(BigRational::new(int(3), int(2))));
        assert_eq!(f.max_int_strictly_below(), int(1));
    }

    #[test]
    fn negative_offset() {
        // (-20 + sqrt(9))/8 = -17/8
        let f = SurdOver8::plus(int(-20), int(9));
        assert_eq!(f.max_int_strictly_below(), int(-3));
        assert_eq!(f.min_int_strictly_above(), int(-2));
    }

    proptest! {
        // cmp_int must agree with a high-precision rational approximation
        // whenever the approximation is not borderline.
        #[test]
        fn cmp_matches_approximation(t in -10_000i64..10_000, s in 0i64..100_000_000, m in -2_000i64..2_000, minus in any::<bool>()) {
            let surd = if minus {
                SurdOver8::minus(int(t), int(s))
            } else {
                SurdOver8::plus(int(t), int(s))
            };
            let approx = surd.approx_rational(64);
            let m_big = int(m);
            let diff = BigRational::from(m_big.clone()) - &approx;
            // 2^-64 slack on the root translates to 2^-67 on the value.
            let slack = BigRational::new(BigInt::from(1), BigInt::from(1) << 60);
            if diff.abs() > slack {
                let expected = if diff.is_positive() { Ordering::Less } else { Ordering::Greater };
                prop_assert_eq!(surd.cmp_int(&m_big), expected);
            }
        }

        #[test]
        fn strict_neighbours_bracket_value(t in -10_000i64..10_000, s in 0i64..100_000_000, minus in any::<bool>()) {
            let surd = if minus {
                SurdOver8::minus(int(t), int(s))
            } else {
                SurdOver8::plus(int(t), int(s))
            };
            let below = surd.max_int_strictly_below();
            let above = surd.min_int_strictly_above();
            prop_assert_eq!(surd.cmp_int(&below), Ordering::Greater);
            prop_assert_eq!(surd.cmp_int(&above), Ordering::Less);
            // The bracket is tight: width 1 when the value is non-integral, 2 when integral.
            let width = &above - &below;
            if surd.as_rational().is_none_or(|q| !q.is_integer()) {
                prop_assert_eq!(width, int(1));
            } else {
                prop_assert_eq!(width, int(2));
            }
        }
    }
}
