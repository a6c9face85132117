use std::cmp::Ordering;
use std::fmt;

use super::Monomial;

/// Total, multiplicative well-orders on monomials of a fixed ring.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    GrevLex,
    /// Grevlex on the first `k` variables, ties broken by grevlex on the rest.
    /// An elimination order for the first block.
    Block(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match *self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::Block(k) => {
                let k = k.min(a.len());
                grevlex(&a[..k], &b[..k]).then_with(|| grevlex(&a[k..], &b[k..]))
            }
        }
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| u64::from(e)).sum();
    let db: u64 = b.iter().map(|&e| u64::from(e)).sum();
    da.cmp(&db).then_with(|| {
        // Smaller exponent in the last differing variable wins.
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => f.write_str("lex"),
            MonomialOrder::GrevLex => f.write_str("grevlex"),
            MonomialOrder::Block(k) => write!(f, "block({k})"),
        }
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "grevlex" => Ok(MonomialOrder::GrevLex),
            _ => s
                .strip_prefix("block(")
                .and_then(|r| r.strip_suffix(')'))
                .and_then(|k| k.parse().ok())
                .map(MonomialOrder::Block)
                .ok_or_else(|| format!("unknown monomial order `{s}`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn grevlex_textbook_cases() {
        let o = MonomialOrder::GrevLex;
        // Equal degree: the smaller power of the last variable is larger.
        assert_eq!(o.cmp(&m(&[2, 1, 1]), &m(&[1, 1, 2])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 5, 0]), &m(&[3, 0, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[1, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn lex_and_block() {
        assert_eq!(
            MonomialOrder::Lex.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])),
            Ordering::Greater
        );
        let b = MonomialOrder::Block(1);
        assert_eq!(b.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(b.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 1])), Ordering::Greater);
    }

    #[test]
    fn parse_round_trip() {
        for o in [MonomialOrder::Lex, MonomialOrder::GrevLex, MonomialOrder::Block(3)] {
            assert_eq!(o.to_string().parse::<MonomialOrder>().unwrap(), o);
        }
        assert!("revlex".parse::<MonomialOrder>().is_err());
    }
}
