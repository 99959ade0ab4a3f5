//! Parsing of exact parameter values from configuration text.
//!
//! Scalars are written as exact rationals and Gaussian rationals, never
//! floats: `"1/3"`, `"-2"`, `"1/2+1/3i"`, `"-i"`, `"2/5i"`. Unit-modulus
//! phases are given as Pythagorean pairs `"m=2,n=1"`, which produce
//! `w = ((m²-n²) + 2mn·i)/(m²+n²)` with `|w| = 1` exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::families::{family, Binding, FamilyId};
use crate::scalar::Scalar;

fn config_err(message: impl Into<String>) -> Error {
    Error::Config { message: message.into() }
}

fn parse_big_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    if text.is_empty() {
        return Err(config_err("empty rational"));
    }
    let (num_text, den_text) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num_text
        .parse()
        .map_err(|_| config_err(format!("bad integer `{num_text}`")))?;
    let den: BigInt = den_text
        .parse()
        .map_err(|_| config_err(format!("bad integer `{den_text}`")))?;
    if den.is_zero() {
        return Err(config_err(format!("zero denominator in `{text}`")));
    }
    Ok(BigRational::new(num, den))
}

/// Parses `"p/q"`, `"p"`, `"p/q+r/si"`, `"i"`, `"-2i"`, `"1-i"` …
pub fn parse_scalar(input: &str) -> Result<Scalar> {
    let text: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if text.is_empty() {
        return Err(config_err("empty scalar"));
    }
    if !text.ends_with('i') {
        return Ok(Scalar::new(parse_big_rational(&text)?, BigRational::zero()));
    }
    let body = &text[..text.len() - 1];
    // find the sign separating the real part from the imaginary part
    // (skipping a leading sign and signs inside are impossible for rationals)
    let split = body
        .char_indices()
        .skip(1)
        .find(|(_, c)| *c == '+' || *c == '-')
        .map(|(i, _)| i);
    let (re_text, im_text) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let re = parse_big_rational(re_text)?;
    let im = match im_text {
        "" | "+" => BigRational::from_integer(1.into()),
        "-" => BigRational::from_integer((-1).into()),
        other => {
            let stripped = other.strip_prefix('+').unwrap_or(other);
            parse_big_rational(stripped)?
        }
    };
    Ok(Scalar::new(re, im))
}

/// Parses a `"m=2,n=1"` Pythagorean pair into the phase
/// `((m²-n²) + 2mn·i)/(m²+n²)`.
pub fn parse_phase(input: &str) -> Result<Scalar> {
    let mut m: Option<i64> = None;
    let mut n: Option<i64> = None;
    for part in input.split(',') {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| config_err(format!("bad phase component `{part}`")))?;
        let value: i64 = value
            .trim()
            .parse()
            .map_err(|_| config_err(format!("bad phase integer `{value}`")))?;
        match key.trim() {
            "m" => m = Some(value),
            "n" => n = Some(value),
            other => return Err(config_err(format!("unknown phase key `{other}`"))),
        }
    }
    let (m, n) = (
        m.ok_or_else(|| config_err("phase needs m="))?,
        n.ok_or_else(|| config_err("phase needs n="))?,
    );
    if m == 0 && n == 0 {
        return Err(config_err("phase pair must be nonzero"));
    }
    Ok(crate::families::bindings::pythagorean_phase(m, n))
}

/// Parses one slot value; the phase slot `w` accepts either a Pythagorean
/// pair or a literal Gaussian rational of unit modulus.
pub fn parse_slot_value(slot: &str, value: &str) -> Result<Scalar> {
    if slot == "w" && value.contains('=') {
        return parse_phase(value);
    }
    parse_scalar(value)
}

/// Builds and validates a binding from `(slot, value-string)` pairs.
pub fn binding_from_entries(id: FamilyId, entries: &[(String, String)]) -> Result<Binding> {
    let spec = family(id);
    let mut expected: Vec<&str> = spec.slots.to_vec();
    if spec.needs_s {
        expected.push("s");
    }
    if spec.needs_w {
        expected.push("w");
    }
    let mut pairs: Vec<(&str, Scalar)> = Vec::new();
    for (slot, value) in entries {
        let Some(canon) = expected.iter().find(|e| **e == slot.as_str()) else {
            return Err(config_err(format!(
                "family {id} does not take a parameter `{slot}` (expected {expected:?})"
            )));
        };
        pairs.push((canon, parse_slot_value(slot, value)?));
    }
    for e in &expected {
        if !pairs.iter().any(|(slot, _)| slot == e) {
            return Err(config_err(format!("family {id} is missing parameter `{e}`")));
        }
    }
    let binding = Binding::new(id, &pairs);
    (spec.validate)(&binding).map_err(|e| config_err(format!("{id}: {e}")))?;
    Ok(binding)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_forms() {
        assert_eq!(parse_scalar("1/3").unwrap(), Scalar::ratio(1, 3));
        assert_eq!(parse_scalar("-2").unwrap(), Scalar::int(-2));
        assert_eq!(parse_scalar("1/2+1/3i").unwrap(), Scalar::gaussian(1, 2, 1, 3));
        assert_eq!(parse_scalar("1/2 - 1/3 i").unwrap(), Scalar::gaussian(1, 2, -1, 3));
        assert_eq!(parse_scalar("i").unwrap(), Scalar::i());
        assert_eq!(parse_scalar("-i").unwrap(), -Scalar::i());
        assert_eq!(parse_scalar("2/5i").unwrap(), Scalar::gaussian(0, 1, 2, 5));
        assert_eq!(parse_scalar("-3/4i").unwrap(), Scalar::gaussian(0, 1, -3, 4));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("").is_err());
    }

    #[test]
    fn phase_pairs_have_unit_modulus() {
        let w = parse_phase("m=2,n=1").unwrap();
        assert!((&w * &w.conj()).is_one());
        assert_eq!(w, Scalar::gaussian(3, 5, 4, 5));
        assert!(parse_phase("m=0,n=0").is_err());
    }

    #[test]
    fn binding_construction() {
        let entries = vec![
            ("a".to_string(), "1".to_string()),
            ("w".to_string(), "m=1,n=1".to_string()),
        ];
        let b = binding_from_entries(FamilyId::MP, &entries).unwrap();
        assert_eq!(b.get("a").unwrap(), &Scalar::one());
        assert_eq!(b.w().unwrap(), &Scalar::i());
        // missing slot
        let missing = vec![("a".to_string(), "1".to_string())];
        assert!(binding_from_entries(FamilyId::MP, &missing).is_err());
        // unknown slot
        let unknown = vec![
            ("a".to_string(), "1".to_string()),
            ("w".to_string(), "m=1,n=1".to_string()),
            ("zz".to_string(), "1".to_string()),
        ];
        assert!(binding_from_entries(FamilyId::MP, &unknown).is_err());
    }
}
