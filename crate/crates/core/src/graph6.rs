//! graph6 codec.
//!
//! One ASCII line per graph: a size header followed by the upper adjacency
//! triangle in column-major bit order (pairs (0,1), (0,2), (1,2), (0,3), …),
//! packed into 6-bit groups biased by 63. Orders 1–62 use a single header
//! byte `n+63`; orders 63–64 use the `~` long form with three 6-bit groups.

use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 input")]
    Empty,
    #[error("malformed graph6 header byte 0x{0:02x}")]
    MalformedHeader(u8),
    #[error("graph6 order {0} outside supported range 1..={MAX_VERTICES}")]
    OrderOutOfRange(usize),
    #[error("graph6 data byte 0x{0:02x} outside 63..=126")]
    DataByteOutOfRange(u8),
    #[error("graph6 line too short: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("graph6 line too long: expected {expected} data bytes, found {found}")]
    TrailingBytes { expected: usize, found: usize },
    #[error("nonzero padding bits at end of graph6 line")]
    TrailingBits,
}

/// Decode one graph6 line (surrounding whitespace and the optional
/// `>>graph6<<` prefix are accepted).
pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let line = text.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }

    let (n, data) = decode_order(bytes)?;
    if n == 0 || n > MAX_VERTICES {
        return Err(Graph6Error::OrderOutOfRange(n));
    }

    let pair_bits = n * (n - 1) / 2;
    let expected = pair_bits.div_ceil(6);
    match data.len() {
        found if found < expected => {
            return Err(Graph6Error::Truncated { expected, found });
        }
        found if found > expected => {
            return Err(Graph6Error::TrailingBytes { expected, found });
        }
        _ => {}
    }

    let mut g = Graph::empty(n).expect("order already validated");
    let mut bit_index = 0usize;
    for &b in data {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::DataByteOutOfRange(b));
        }
        let group = b - 63;
        for k in 0..6 {
            let bit = group >> (5 - k) & 1;
            if bit_index >= pair_bits {
                if bit != 0 {
                    return Err(Graph6Error::TrailingBits);
                }
            } else if bit == 1 {
                let (i, j) = unrank_pair(bit_index);
                g.add_edge_unchecked(i, j);
            }
            bit_index += 1;
        }
    }
    Ok(g)
}

/// Encode a graph as a graph6 line (no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(63 + n as u8);
    } else {
        bytes.push(b'~');
        bytes.push(63 + ((n >> 12) & 63) as u8);
        bytes.push(63 + ((n >> 6) & 63) as u8);
        bytes.push(63 + (n & 63) as u8);
    }

    let pair_bits = n * (n - 1) / 2;
    let mut group = 0u8;
    let mut filled = 0u8;
    for t in 0..pair_bits {
        let (i, j) = unrank_pair(t);
        group = group << 1 | g.has_edge(i, j) as u8;
        filled += 1;
        if filled == 6 {
            bytes.push(63 + group);
            group = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        bytes.push(63 + (group << (6 - filled)));
    }
    String::from_utf8(bytes).expect("all bytes in ASCII range")
}

fn decode_order(bytes: &[u8]) -> Result<(usize, &[u8]), Graph6Error> {
    let head = bytes[0];
    if head == b'~' {
        // Long form: `~` + three groups (18-bit order), or `~~` + six
        // groups (36-bit order). Both far exceed our cap; decode the order
        // so the range error reports it.
        let (groups, rest) = if bytes.get(1) == Some(&b'~') {
            if bytes.len() < 8 {
                return Err(Graph6Error::MalformedHeader(head));
            }
            (&bytes[2..8], &bytes[8..])
        } else {
            if bytes.len() < 4 {
                return Err(Graph6Error::MalformedHeader(head));
            }
            (&bytes[1..4], &bytes[4..])
        };
        let mut n = 0usize;
        for &b in groups {
            if !(63..=126).contains(&b) {
                return Err(Graph6Error::MalformedHeader(b));
            }
            n = n << 6 | (b - 63) as usize;
        }
        Ok((n, rest))
    } else {
        if !(63..=126).contains(&head) {
            return Err(Graph6Error::MalformedHeader(head));
        }
        Ok(((head - 63) as usize, &bytes[1..]))
    }
}

/// Pair for a column-major upper-triangle bit index:
/// index t ↦ (i, j) with i < j and t = j(j−1)/2 + i.
pub(crate) fn unrank_pair(t: usize) -> (usize, usize) {
    // j is the largest value with j(j−1)/2 ≤ t; solve by the quadratic and
    // correct for rounding.
    let mut j = ((1.0 + 8.0 * t as f64).sqrt() as usize + 1) / 2;
    while j * (j - 1) / 2 > t {
        j -= 1;
    }
    while (j + 1) * j / 2 <= t {
        j += 1;
    }
    (t - j * (j - 1) / 2, j)
}

/// Column-major upper-triangle bit index of a pair (i < j).
pub(crate) fn rank_pair(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_ranking_round_trips() {
        for t in 0..2016 {
            let (i, j) = unrank_pair(t);
            assert!(i < j);
            assert_eq!(rank_pair(i, j), t);
        }
    }

    #[test]
    fn decode_star_example() {
        // 'D' → n=5; data '?{' → 000000 111100: bits 6..=9 are the pairs
        // (0,4), (1,4), (2,4), (3,4): the star K{1,4}.
        let g = from_graph6("D?{").unwrap();
        let want = Graph::from_edge_list(5, [(0, 4), (1, 4), (2, 4), (3, 4)]).unwrap();
        assert_eq!(g, want);
    }

    #[test]
    fn decode_single_vertex() {
        let g = from_graph6("@").unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(to_graph6(&g), "@");
    }

    #[test]
    fn k4_is_c_tilde() {
        // Upper triangle of K4 is all ones: 111111 → 63+63 = '~'.
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(to_graph6(&k4), "C~");
        assert_eq!(from_graph6("C~").unwrap(), k4);
    }

    #[test]
    fn p3_bit_pattern() {
        // P3 has pairs (0,1) and (1,2) set: bits 101 padded → 101000 = 'g'.
        let p3 = Graph::path(3).unwrap();
        assert_eq!(to_graph6(&p3), "Bg");
        let back = from_graph6("Bg").unwrap();
        assert!(back.has_edge(0, 1) && back.has_edge(1, 2) && !back.has_edge(0, 2));
    }

    #[test]
    fn long_form_orders() {
        for n in [63usize, 64] {
            let g = Graph::path(n).unwrap();
            let enc = to_graph6(&g);
            assert!(enc.starts_with('~'));
            assert_eq!(from_graph6(&enc).unwrap(), g);
        }
    }

    #[test]
    fn header_errors() {
        assert_eq!(from_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(from_graph6("\x20abc"), Err(Graph6Error::MalformedHeader(0x61)));
        // '?' is order 0.
        assert_eq!(from_graph6("?"), Err(Graph6Error::OrderOutOfRange(0)));
        // Order 65 paths are rejected even when well-formed.
        let mut g65 = String::from("~");
        g65.push((63 + 0) as char);
        g65.push((63 + 1) as char);
        g65.push((63 + 1) as char);
        for _ in 0..(65 * 64 / 2usize).div_ceil(6) {
            g65.push('?');
        }
        assert_eq!(from_graph6(&g65), Err(Graph6Error::OrderOutOfRange(65)));
    }

    #[test]
    fn data_length_errors() {
        assert_eq!(
            from_graph6("D?"),
            Err(Graph6Error::Truncated { expected: 2, found: 1 })
        );
        assert_eq!(
            from_graph6("D???"),
            Err(Graph6Error::TrailingBytes { expected: 2, found: 3 })
        );
    }

    #[test]
    fn trailing_bit_errors() {
        // n=2: one pair bit, five padding bits; 'A' + data with a padding
        // bit set must be rejected. '_' = 63+32 = bit pattern 100000 (valid:
        // edge bit set); '@' = 000001 ... wait: '@' = 64-63 = 1 = 000001 sets
        // the last padding bit.
        assert!(from_graph6("A_").is_ok());
        assert_eq!(from_graph6("A@"), Err(Graph6Error::TrailingBits));
        // Data byte below '?' rejected.
        assert_eq!(from_graph6("A\x3e"), Err(Graph6Error::DataByteOutOfRange(0x3e)));
    }
}
