//! Rendering of exact rationals: the canonical `p/q` form and a decimal
//! approximation with a fixed number of significant digits. The decimal is
//! the only place floating-style output exists and is always labelled
//! approximate by callers.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Canonical exact rendering: `p/q` in lowest terms, or just `p` when the
/// denominator is 1.
pub fn rational_exact(r: &BigRational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Decimal rendering with `sig` significant digits (round half away from
/// zero). Deterministic; intended for human-facing columns next to the
/// exact value.
pub fn rational_decimal(r: &BigRational, sig: usize) -> String {
    assert!(sig > 0);
    if r.is_zero() {
        return "0".into();
    }
    let negative = r.is_negative();
    let p = r.numer().abs().to_biguint().expect("abs");
    let q = r.denom().abs().to_biguint().expect("abs");

    // exponent e with 10^e <= p/q < 10^(e+1)
    let mut exp: i64 = (p.to_string().len() as i64) - (q.to_string().len() as i64) + 1;
    loop {
        let check = scaled_compare(&p, &q, exp);
        match check {
            std::cmp::Ordering::Less => exp -= 1,
            _ => {
                if scaled_compare(&p, &q, exp + 1) == std::cmp::Ordering::Less {
                    break;
                }
                exp += 1;
            }
        }
    }

    // digits = round(p/q * 10^(sig-1-exp))
    let shift = sig as i64 - 1 - exp;
    let (num, den) = if shift >= 0 {
        (p * BigUint::from(10u32).pow(shift as u32), q)
    } else {
        (p, q * BigUint::from(10u32).pow((-shift) as u32))
    };
    let (mut digits, rem) = num.div_rem(&den);
    if &rem * 2u32 >= den {
        digits += 1u32;
    }
    let mut ds = digits.to_string();
    if ds.len() > sig {
        // rounding overflowed into an extra digit (e.g. 999.5 -> 1000)
        exp += 1;
        ds.truncate(sig);
    }

    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if exp >= 0 && (exp as usize) < sig {
        let point = exp as usize + 1;
        out.push_str(&ds[..point]);
        let frac = ds[point..].trim_end_matches('0');
        if !frac.is_empty() {
            out.push('.');
            out.push_str(frac);
        }
    } else if (-4..0).contains(&exp) {
        out.push_str("0.");
        for _ in 0..(-exp - 1) {
            out.push('0');
        }
        out.push_str(ds.trim_end_matches('0'));
    } else {
        // scientific notation
        out.push_str(&ds[..1]);
        let frac = ds[1..].trim_end_matches('0');
        if !frac.is_empty() {
            out.push('.');
            out.push_str(frac);
        }
        out.push('e');
        out.push_str(&exp.to_string());
    }
    out
}

fn scaled_compare(p: &BigUint, q: &BigUint, exp: i64) -> std::cmp::Ordering {
    // compares p/q with 10^exp
    if exp >= 0 {
        p.cmp(&(q * BigUint::from(10u32).pow(exp as u32)))
    } else {
        (p * BigUint::from(10u32).pow((-exp) as u32)).cmp(q)
    }
}

/// Lossy double rendering for summary statistics; callers must tag it
/// approximate.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Serde helper: big counts go out as decimal strings so that emitted
/// numbers stay exact regardless of magnitude.
pub fn serialize_biguint_string<S: serde::Serializer>(
    v: &BigUint,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}
