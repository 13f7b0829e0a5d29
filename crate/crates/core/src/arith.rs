//! Checked u64 arithmetic. Every overflow carries a short context string.

use crate::error::{Error, Result};

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn add(a: u64, b: u64, what: &str) -> Result<u64> {
    a.checked_add(b).ok_or_else(|| Error::Overflow(format!("{what} ({a} + {b})")))
}

pub(crate) fn mul(a: u64, b: u64, what: &str) -> Result<u64> {
    a.checked_mul(b).ok_or_else(|| Error::Overflow(format!("{what} ({a} * {b})")))
}

/// u64 -> usize for allocation sizes; only fails on 32-bit hosts.
pub(crate) fn as_len(n: u64, what: &str) -> Result<usize> {
    usize::try_from(n).map_err(|_| Error::Overflow(format!("{what} ({n} entries)")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(24, 90), 6);
        assert_eq!(gcd(6, 94), 2);
        assert_eq!(gcd(2, 103), 1);
        assert_eq!(gcd(0, 7), 7);
        assert_eq!(gcd(7, 0), 7);
        assert_eq!(gcd(1, 1), 1);
    }

    #[test]
    fn checked_ops_overflow() {
        assert!(add(u64::MAX, 1, "sum").is_err());
        assert!(mul(u64::MAX, 2, "product").is_err());
        assert_eq!(add(3, 4, "sum").unwrap(), 7);
        assert_eq!(mul(3, 4, "product").unwrap(), 12);
    }
}
