//! graph6 encoding: one header byte `63 + n`, then the upper triangle in
//! column-major order (`(0,1), (0,2), (1,2), (0,3), ...`) packed six bits per
//! byte, most significant first, each byte offset by 63 and zero padded.
//! Only the short header (`n <= 62`) is supported; the vertex cap is 32.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const BIAS: u8 = 63;

fn fail<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Graph6(msg.into()))
}

impl Graph {
    pub fn from_graph6(text: &str) -> Result<Graph> {
        let bytes = text.as_bytes();
        let Some((&head, body)) = bytes.split_first() else {
            return fail("empty input");
        };
        if let Some(b) = bytes.iter().find(|&&b| !(BIAS..=126).contains(&b)) {
            return fail(format!("byte {b} outside 63..=126"));
        }
        if head == 126 {
            return fail("extended header (n > 62) not supported");
        }
        let n = (head - BIAS) as usize;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                requested: n,
                cap: MAX_VERTICES,
            });
        }
        let nbits = n * n.saturating_sub(1) / 2;
        let nbytes = nbits.div_ceil(6);
        if body.len() != nbytes {
            return fail(format!(
                "expected {nbytes} edge bytes for n = {n}, found {}",
                body.len()
            ));
        }
        let mut g = Graph::new(n);
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                let byte = body[k / 6] - BIAS;
                if byte >> (5 - k % 6) & 1 == 1 {
                    g.link(i, j);
                }
                k += 1;
            }
        }
        if !nbits.is_multiple_of(6) {
            let last = body[nbytes - 1] - BIAS;
            let pad = 6 - nbits % 6;
            if last & ((1 << pad) - 1) != 0 {
                return fail("nonzero padding bits");
            }
        }
        Ok(g)
    }

    pub fn to_graph6(&self) -> String {
        let n = self.n();
        let nbits = n * n.saturating_sub(1) / 2;
        let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
        out.push(BIAS + n as u8);
        let mut acc = 0u8;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                acc = acc << 1 | self.has_edge(i, j) as u8;
                k += 1;
                if k % 6 == 0 {
                    out.push(BIAS + acc);
                    acc = 0;
                }
            }
        }
        if k % 6 != 0 {
            out.push(BIAS + (acc << (6 - k % 6)));
        }
        String::from_utf8(out).expect("graph6 bytes are ASCII")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_strings() {
        assert_eq!(Graph::from_graph6("@").unwrap(), Graph::new(1));
        assert_eq!(Graph::from_graph6("A_").unwrap(), Graph::complete(2));
        assert_eq!(Graph::complete(2).to_graph6(), "A_");
        assert_eq!(Graph::new(1).to_graph6(), "@");
        assert_eq!(Graph::new(0).to_graph6(), "?");
        assert_eq!(Graph::from_graph6("?").unwrap(), Graph::new(0));
        // P3 0-1-2: bits (0,1)=1 (0,2)=0 (1,2)=1 -> 101000 = 40
        assert_eq!(Graph::path(3).to_graph6(), "Bg");
        assert_eq!(Graph::complete(4).to_graph6(), "C~");
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(Graph::from_graph6(""), Err(Error::Graph6(_))));
        assert!(matches!(Graph::from_graph6("A"), Err(Error::Graph6(_))));
        assert!(matches!(Graph::from_graph6("A__"), Err(Error::Graph6(_))));
        assert!(matches!(Graph::from_graph6("A "), Err(Error::Graph6(_))));
        assert!(matches!(Graph::from_graph6("A`"), Err(Error::Graph6(_))));
        assert!(matches!(Graph::from_graph6("~?@?"), Err(Error::Graph6(_))));
        // header for n = 33
        let s = format!("{}", (63 + 33) as u8 as char);
        assert!(matches!(
            Graph::from_graph6(&s),
            Err(Error::TooManyVertices { requested: 33, .. })
        ));
    }

    #[test]
    fn round_trip_32() {
        let g = Graph::cycle(32);
        assert_eq!(Graph::from_graph6(&g.to_graph6()).unwrap(), g);
    }
}
