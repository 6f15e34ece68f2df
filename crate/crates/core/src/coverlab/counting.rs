use crate::error::{Error, Result};

/// Parameters of the inequality `(n·d·m + p·m1)^d < (n+1)^d·(p+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountingParams {
    pub d: u64,
    pub m: u64,
    pub m1: u64,
    pub p: u64,
    pub n: u64,
}

impl CountingParams {
    pub fn new(d: u64, m: u64, m1: u64, p: u64, n: u64) -> Result<Self> {
        if d == 0 || m == 0 || m1 == 0 || p == 0 {
            return Err(Error::InvalidParams("d, m, m1 and p must be at least 1".into()));
        }
        Ok(CountingParams { d, m, m1, p, n })
    }

    /// `p + 1 > (m·d)^d`, the condition under which some `n` eventually works.
    pub fn p_is_large_enough(&self) -> Result<bool> {
        let md = checked(u128::from(self.m).checked_mul(u128::from(self.d)))?;
        let rhs = checked(md.checked_pow(exponent(self.d)?))?;
        Ok(u128::from(self.p) + 1 > rhs)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountingReport {
    /// `(n·d·m + p·m1)^d`: size of a good joint refinement the witness allows.
    pub lhs: u128,
    /// `(n+1)^d·(p+1)`: the number of pairwise separated grid points.
    pub rhs: u128,
    pub holds: bool,
}

fn checked(v: Option<u128>) -> Result<u128> {
    v.ok_or(Error::Overflow("counting inequality"))
}

fn exponent(d: u64) -> Result<u32> {
    u32::try_from(d).map_err(|_| Error::Overflow("counting inequality"))
}

/// Exact evaluation of both sides; `holds` is the strict inequality.
///
/// ```
/// use freedim::coverlab::{counting_check, CountingParams};
/// let r = counting_check(&CountingParams::new(2, 1, 1, 4, 8).unwrap()).unwrap();
/// assert_eq!((r.lhs, r.rhs, r.holds), (400, 405, true));
/// ```
pub fn counting_check(params: &CountingParams) -> Result<CountingReport> {
    let CountingParams { d, m, m1, p, n } = *params;
    let (d, m, m1, p, n) = (d as u128, m as u128, m1 as u128, p as u128, n as u128);
    let e = exponent(params.d)?;
    let base = checked(
        n.checked_mul(d)
            .and_then(|x| x.checked_mul(m))
            .and_then(|x| x.checked_add(p.checked_mul(m1)?)),
    )?;
    let lhs = checked(base.checked_pow(e))?;
    let rhs = checked((n + 1).checked_pow(e).and_then(|x| x.checked_mul(p + 1)))?;
    Ok(CountingReport {
        lhs,
        rhs,
        holds: lhs < rhs,
    })
}

/// Smallest `n` in `1..=limit` for which the inequality holds.
pub fn find_min_n(d: u64, m: u64, m1: u64, p: u64, limit: u64) -> Result<Option<u64>> {
    if limit == 0 {
        return Err(Error::InvalidParams("limit must be at least 1".into()));
    }
    let mut params = CountingParams::new(d, m, m1, p, 1)?;
    for n in 1..=limit {
        params.n = n;
        if counting_check(&params)?.holds {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(d: u64, m: u64, m1: u64, p: u64, n: u64) -> CountingReport {
        counting_check(&CountingParams::new(d, m, m1, p, n).unwrap()).unwrap()
    }

    #[test]
    fn counting_examples() {
        assert_eq!(check(2, 1, 1, 4, 8), CountingReport { lhs: 400, rhs: 405, holds: true });
        assert_eq!(check(2, 1, 1, 4, 7), CountingReport { lhs: 324, rhs: 320, holds: false });
        for n in 1..200 {
            let r = check(2, 2, 1, 4, n);
            assert!(!r.holds);
            assert_eq!(r.lhs, (4 * n as u128 + 4).pow(2));
            assert_eq!(r.rhs, 5 * (n as u128 + 1).pow(2));
        }
    }

    #[test]
    fn find_n_examples() {
        assert_eq!(find_min_n(2, 1, 1, 4, 100), Ok(Some(8)));
        assert_eq!(find_min_n(2, 1, 1, 4, 7), Ok(None));
        assert_eq!(find_min_n(1, 1, 1, 1, 10), Ok(Some(1)));
        assert_eq!(find_min_n(2, 2, 1, 4, 1_000_000), Ok(None));
    }

    #[test]
    fn params_validation_and_overflow() {
        assert!(CountingParams::new(0, 1, 1, 1, 1).is_err());
        assert!(find_min_n(1, 1, 1, 1, 0).is_err());
        let huge = CountingParams::new(40, 1000, 1000, 1000, 1000).unwrap();
        assert_eq!(counting_check(&huge), Err(Error::Overflow("counting inequality")));
    }

    #[test]
    fn threshold() {
        assert!(CountingParams::new(2, 1, 1, 4, 1).unwrap().p_is_large_enough().unwrap());
        assert!(!CountingParams::new(2, 2, 1, 4, 1).unwrap().p_is_large_enough().unwrap());
        assert!(!CountingParams::new(2, 1, 1, 3, 1).unwrap().p_is_large_enough().unwrap());
    }
}
