//! Exact scalar arithmetic and the factorial-type primitives everything else
//! is built from.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q` as a reduced rational. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn from_usize(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p"` or `"p/q"`. Decimal points are rejected on purpose: every
/// parameter is an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    if s.contains('.') || s.contains('e') || s.contains('E') {
        return Err(Error::Parse(format!("`{s}`: decimal input is not accepted, write p/q")));
    }
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim().parse::<BigInt>().map_err(|_| Error::Parse(format!("`{s}` is not an integer or p/q")))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(Error::Parse(format!("`{s}`: zero denominator")));
            }
            Ok(Rational::new(parse_int(p)?, q))
        }
    }
}

/// `"p/q"`, with `/q` omitted when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Serde adapter that writes a rational as its `"p/q"` string. Integers in
/// the input are also accepted.
pub mod serde_rational {
    use serde::de::{self, Deserializer, Visitor};
    use serde::Serializer;

    use super::{format_rational, parse_rational, rat, Rational};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        d.deserialize_any(RationalVisitor)
    }

    pub(crate) struct RationalVisitor;

    impl<'de> Visitor<'de> for RationalVisitor {
        type Value = Rational;

        fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
            f.write_str("an integer or a \"p/q\" string")
        }

        fn visit_i64<E: de::Error>(self, v: i64) -> Result<Rational, E> {
            Ok(rat(v))
        }

        fn visit_u64<E: de::Error>(self, v: u64) -> Result<Rational, E> {
            i64::try_from(v).map(rat).map_err(E::custom)
        }

        fn visit_f64<E: de::Error>(self, v: f64) -> Result<Rational, E> {
            Err(E::custom(format!("{v}: decimal input is not accepted, write p/q")))
        }

        fn visit_str<E: de::Error>(self, v: &str) -> Result<Rational, E> {
            parse_rational(v).map_err(E::custom)
        }
    }

    /// Same adapter for `Vec<Rational>`.
    pub mod vec {
        use serde::de::{Deserializer, SeqAccess, Visitor};
        use serde::ser::{SerializeSeq, Serializer};

        use super::super::{format_rational, Rational};

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for r in v {
                seq.serialize_element(&format_rational(r))?;
            }
            seq.end()
        }

        struct Wrapped(Rational);

        impl<'de> serde::Deserialize<'de> for Wrapped {
            fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
                d.deserialize_any(super::RationalVisitor).map(Wrapped)
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            struct SeqVisitor;
            impl<'de> Visitor<'de> for SeqVisitor {
                type Value = Vec<Rational>;
                fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                    f.write_str("a list of rationals")
                }
                fn visit_seq<A: SeqAccess<'de>>(self, mut a: A) -> Result<Self::Value, A::Error> {
                    let mut out = Vec::new();
                    while let Some(Wrapped(r)) = a.next_element()? {
                        out.push(r);
                    }
                    Ok(out)
                }
            }
            d.deserialize_seq(SeqVisitor)
        }
    }
}

/// Lossy conversion for reports and quadrature.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Generalized factorial `(t|alpha)_n = prod_{k<n} (t - k*alpha)`.
pub fn gff(t: &Rational, alpha: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    let mut factor = t.clone();
    for _ in 0..n {
        acc *= &factor;
        factor -= alpha;
    }
    acc
}

pub fn factorial(n: usize) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    Rational::from_integer(acc)
}

/// Generalized binomial coefficient `C(a, k) = (a|1)_k / k!`.
pub fn binom(a: &Rational, k: usize) -> Rational {
    gff(a, &Rational::one(), k) / factorial(k)
}

/// Binomial coefficient for nonnegative integers.
pub fn binom_usize(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    binom(&from_usize(n), k)
}

/// Rising factorial `x (x+1) ... (x+k-1)`.
pub fn rising(x: &Rational, k: usize) -> Rational {
    gff(x, &rat(-1), k)
}

/// Falling factorial `x (x-1) ... (x-k+1)`.
pub fn falling(x: &Rational, k: usize) -> Rational {
    gff(x, &Rational::one(), k)
}

/// `C(k + lambda - 1, k)`, the bar-insertion count. Equals 1 at `k = 0`
/// for every lambda and 0 for `k >= 1` when `lambda = 0`.
pub fn bar_binom(k: usize, lambda: u32) -> Rational {
    let top = Rational::from_integer(BigInt::from(k as i64 + lambda as i64 - 1));
    binom(&top, k)
}

pub fn pow(base: &Rational, k: usize) -> Rational {
    num_traits::pow::pow(base.clone(), k)
}

pub fn neg_one_pow(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// True if `r` is a nonnegative integer; returns it as `u64` when it fits.
pub fn as_nonneg_int(r: &Rational) -> Option<u64> {
    if !r.is_integer() || r.is_negative() {
        return None;
    }
    r.to_integer().to_string().parse().ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gff_examples() {
        let g = ratio(7, 3);
        let a = ratio(-2, 5);
        assert_eq!(gff(&g, &a, 0), rat(1));
        assert_eq!(gff(&rat(5), &rat(1), 3), rat(60));
        assert_eq!(gff(&g, &rat(0), 4), pow(&g, 4));
    }

    #[test]
    fn gff_step() {
        let t = ratio(3, 7);
        let a = ratio(5, 2);
        for n in 0..12 {
            let step = &t - &a * from_usize(n);
            assert_eq!(gff(&t, &a, n + 1), gff(&t, &a, n) * step);
        }
    }

    #[test]
    fn binom_examples() {
        assert_eq!(binom(&rat(5), 2), rat(10));
        assert_eq!(binom(&ratio(7, 9), 0), rat(1));
        // (-1/2)(-3/2)/2
        assert_eq!(binom(&ratio(-1, 2), 2), ratio(3, 8));
    }

    #[test]
    fn bar_binom_lambda_zero() {
        assert_eq!(bar_binom(0, 0), rat(1));
        for k in 1..6 {
            assert_eq!(bar_binom(k, 0), rat(0));
        }
        assert_eq!(bar_binom(3, 2), rat(4));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("3").unwrap(), rat(3));
        assert_eq!(parse_rational("-6/4").unwrap(), ratio(-3, 2));
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&ratio(-3, 2)), "-3/2");
        assert_eq!(format_rational(&rat(4)), "4");
    }

    #[test]
    fn float_conversion_of_huge_values() {
        let big = factorial(400) / factorial(398);
        assert!((to_f64(&big) - 159600.0).abs() < 1e-6);
        assert!((to_f64(&ratio(1, 3)) - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn nonneg_int_detection() {
        assert_eq!(as_nonneg_int(&rat(4)), Some(4));
        assert_eq!(as_nonneg_int(&rat(-1)), None);
        assert_eq!(as_nonneg_int(&ratio(1, 2)), None);
    }
}
