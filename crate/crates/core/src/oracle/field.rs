use super::OracleError;

/// The integers modulo a prime `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self, OracleError> {
        if !is_prime(p as u64) || p >= 1 << 31 {
            return Err(OracleError::NotPrime(p as u64));
        }
        Ok(PrimeField { p })
    }

    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, a: i64) -> u32 {
        a.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.p as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.p as u64 - b as u64) % self.p as u64) as u32
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(self, mut a: u32, mut k: u64) -> u32 {
        let mut r = 1 % self.p;
        while k > 0 {
            if k & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            k >>= 1;
        }
        r
    }

    pub fn inv(self, a: u32) -> Option<u32> {
        (a % self.p != 0).then(|| self.pow(a, self.p as u64 - 2))
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(self, a: u32) -> u64 {
        let mut x = a % self.p;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// The smallest element of exact multiplicative order `n`.
    pub fn element_of_order(self, n: u64) -> Option<u32> {
        if n == 0 || (self.p as u64 - 1) % n != 0 {
            return None;
        }
        (1..self.p).find(|&a| self.order(a) == n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.inv(3), Some(5));
        assert_eq!(f.inv(0), None);
        assert_eq!(f.sub(2, 5), 4);
        assert_eq!(f.element_of_order(3), Some(2));
        assert_eq!(f.element_of_order(4), None);
        assert!(PrimeField::new(9).is_err());
    }
}
