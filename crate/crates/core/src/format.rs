//! `SUBGAME/1` text format.
//!
//! ```text
//! SUBGAME/1
//! n=<decimal>
//! bits=<HEX>
//! ```
//!
//! The payload is the flat row-major bit string (row `j = 1` first, `i`
//! ascending within a row), zero-padded to a whole byte, first bit in the
//! most significant position of the first byte, rendered as uppercase hex.
//! Every line ends with a single `\n`.

use crate::error::{Error, Result};
use crate::game::{bit_count, Game};

pub const MAGIC: &str = "SUBGAME/1";

const HEX: &[u8; 16] = b"0123456789ABCDEF";

pub fn serialize(game: &Game) -> String {
    let bits = game.bit_count();
    let mut bytes = vec![0u8; bits.div_ceil(8)];
    for (idx, bit) in game.flat_bits().enumerate() {
        if bit {
            bytes[idx / 8] |= 0x80 >> (idx % 8);
        }
    }
    let mut out = String::with_capacity(32 + 2 * bytes.len());
    out.push_str(MAGIC);
    out.push('\n');
    out.push_str(&format!("n={}\n", game.n()));
    out.push_str("bits=");
    for b in bytes {
        out.push(HEX[(b >> 4) as usize] as char);
        out.push(HEX[(b & 0xF) as usize] as char);
    }
    out.push('\n');
    out
}

fn hex_value(c: u8) -> Option<u8> {
    match c {
        b'0'..=b'9' => Some(c - b'0'),
        b'A'..=b'F' => Some(c - b'A' + 10),
        _ => None,
    }
}

fn take_line<'a>(rest: &mut &'a str, what: &str) -> Result<&'a str> {
    match rest.find('\n') {
        Some(pos) => {
            let line = &rest[..pos];
            *rest = &rest[pos + 1..];
            Ok(line)
        }
        None => Err(Error::MalformedHeader(format!(
            "{what} line missing or not terminated by a line feed"
        ))),
    }
}

fn parse_n(line: &str) -> Result<usize> {
    let digits = line
        .strip_prefix("n=")
        .ok_or_else(|| Error::MalformedHeader(format!("expected `n=<decimal>`, got {line:?}")))?;
    let canonical = !digits.is_empty()
        && digits.bytes().all(|b| b.is_ascii_digit())
        && (digits == "0" || !digits.starts_with('0'));
    if !canonical {
        return Err(Error::MalformedHeader(format!(
            "`n=` value {digits:?} is not a canonical decimal"
        )));
    }
    digits
        .parse()
        .map_err(|_| Error::MalformedHeader(format!("`n=` value {digits:?} overflows")))
}

pub fn deserialize(text: &str) -> Result<Game> {
    let mut rest = text;
    let magic = take_line(&mut rest, "magic")?;
    if magic != MAGIC {
        return Err(Error::MalformedHeader(format!(
            "expected {MAGIC:?}, got {magic:?}"
        )));
    }
    let n = parse_n(take_line(&mut rest, "`n=`")?)?;
    let bits_line = take_line(&mut rest, "`bits=`")?;
    let payload = bits_line.strip_prefix("bits=").ok_or_else(|| {
        Error::MalformedHeader(format!("expected `bits=<hex>`, got {bits_line:?}"))
    })?;
    if !rest.is_empty() {
        return Err(Error::TrailingGarbage);
    }

    let total = n
        .checked_add(1)
        .and_then(|m| m.checked_mul(n))
        .map(|x| x / 2)
        .ok_or_else(|| Error::MalformedHeader(format!("n = {n} is too large")))?;
    let expected = 2 * total.div_ceil(8);
    // Count characters, not bytes, so a multibyte char reports a hex error
    // rather than a length error.
    let found = payload.chars().count();
    if found != expected {
        return Err(Error::BadLength { expected, found });
    }
    if let Some((offset, found)) = payload.chars().enumerate().find(|(_, c)| {
        !c.is_ascii() || hex_value(*c as u8).is_none()
    }) {
        return Err(Error::NonHexDigit { offset, found });
    }

    let bytes: Vec<u8> = payload
        .as_bytes()
        .chunks(2)
        .map(|pair| (hex_value(pair[0]).unwrap() << 4) | hex_value(pair[1]).unwrap())
        .collect();
    let bit_at = |idx: usize| bytes[idx / 8] & (0x80 >> (idx % 8)) != 0;
    if (total..bytes.len() * 8).any(bit_at) {
        return Err(Error::NonZeroPadding);
    }
    debug_assert_eq!(total, bit_count(n));
    let mut idx = 0;
    Ok(Game::from_fn(n, |_, _| {
        let b = bit_at(idx);
        idx += 1;
        b
    }))
}
