//! graph6 codec, single-byte order form only (`n <= 62`).
//!
//! Layout: one byte `n + 63`, then the upper triangle read column by column,
//! `(0,1), (0,2), (1,2), (0,3), ...`, packed six bits per byte, most
//! significant bit first, zero-padded, each group emitted as `value + 63`.

use super::{bit, Graph};
use crate::error::{Error, Result};

pub const MAX_GRAPH6_ORDER: usize = 62;

pub fn encode(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::OrderTooLarge { n, max: MAX_GRAPH6_ORDER });
    }
    let total = n * n.saturating_sub(1) / 2;
    let mut out = String::with_capacity(1 + total.div_ceil(6));
    out.push(char::from(n as u8 + 63));

    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(char::from(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(char::from((group << (6 - filled)) + 63));
    }
    Ok(out)
}

pub fn decode(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let bytes = text.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(Error::MalformedGraph6("empty input".into()));
    };
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::MalformedGraph6(format!(
            "byte {:#04x} at offset {pos} outside [63, 126]",
            bytes[pos]
        )));
    }
    if first == 126 {
        return Err(Error::OrderTooLarge { n: MAX_GRAPH6_ORDER + 1, max: MAX_GRAPH6_ORDER });
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(Error::MalformedGraph6("order 0".into()));
    }
    let total = n * (n - 1) / 2;
    let body = &bytes[1..];
    if body.len() != total.div_ceil(6) {
        return Err(Error::MalformedGraph6(format!(
            "expected {} data bytes for order {n}, found {}",
            total.div_ceil(6),
            body.len()
        )));
    }

    let bit_at = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit_at(k) {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
            k += 1;
        }
    }
    if (total..body.len() * 6).any(bit_at) {
        return Err(Error::MalformedGraph6("nonzero padding bits".into()));
    }
    Ok(Graph::from_rows_unchecked(rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn known_strings() {
        let c3 = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(encode(&c3).unwrap(), "Bw");
        assert_eq!(encode(&complete(4)).unwrap(), "C~");
        assert_eq!(encode(&Graph::empty(1).unwrap()).unwrap(), "@");
        assert_eq!(decode("Bw").unwrap(), c3);
        assert_eq!(decode("C~\n").unwrap(), complete(4));
    }

    #[test]
    fn order_limits() {
        assert_eq!(encode(&complete(62)).unwrap().len(), 1 + (62 * 61 / 2usize).div_ceil(6));
        assert!(matches!(encode(&complete(63)), Err(Error::OrderTooLarge { .. })));
        assert!(matches!(decode("~?@~"), Err(Error::OrderTooLarge { .. })));
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(decode(""), Err(Error::MalformedGraph6(_))));
        assert!(matches!(decode("C"), Err(Error::MalformedGraph6(_))));
        assert!(matches!(decode("C~~"), Err(Error::MalformedGraph6(_))));
        assert!(matches!(decode("B w"), Err(Error::MalformedGraph6(_))));
        // 'x' = 111001: last three bits are padding and must be zero.
        assert!(matches!(decode("Bx"), Err(Error::MalformedGraph6(_))));
    }
}
