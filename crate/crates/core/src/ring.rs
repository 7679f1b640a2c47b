//! Arithmetic in `Z_n` for `n = p^α` or `n = 2p^α`, where the unit group is
//! cyclic, together with a canonical generator and a full discrete-log table.

use crate::error::{Error, Result};

/// Largest modulus we are willing to tabulate.
pub const MAX_MODULUS: u64 = 1 << 26;

const NON_UNIT: u32 = u32::MAX;

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = base as u128 % m;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// The cyclic group `Z_n^*` with its canonical (smallest) generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitGroup {
    n: u64,
    p: u64,
    alpha: u32,
    doubled: bool,
    generator: u64,
    phi: u64,
    /// `dlog[x]` is `k` with `g^k = x`, or `NON_UNIT`.
    dlog: Vec<u32>,
    /// `powers[k] = g^k mod n`.
    powers: Vec<u32>,
}

impl UnitGroup {
    /// Builds `Z_n^*` for `n = p^alpha` (or `2p^alpha` when `doubled`).
    ///
    /// The generator is the smallest positive unit of full order.
    pub fn new(p: u64, alpha: u32, doubled: bool) -> Result<Self> {
        if p.is_multiple_of(2) {
            return Err(Error::Validation(format!("p = {p} must be an odd prime")));
        }
        if !is_prime(p) {
            return Err(Error::Validation(format!("p = {p} is not prime")));
        }
        if alpha == 0 {
            return Err(Error::Validation("alpha must be at least 1".into()));
        }
        let too_large = || {
            Error::Validation(format!(
                "modulus {}{p}^{alpha} exceeds the supported bound {MAX_MODULUS}",
                if doubled { "2*" } else { "" }
            ))
        };
        let q = p.checked_pow(alpha).ok_or_else(too_large)?;
        let n = if doubled {
            q.checked_mul(2).ok_or_else(too_large)?
        } else {
            q
        };
        if n > MAX_MODULUS {
            return Err(too_large());
        }
        let phi = q / p * (p - 1);
        let cofactors: Vec<u64> = prime_factors(phi).into_iter().map(|r| phi / r).collect();

        let generator = (1..n)
            .find(|&a| gcd(a, n) == 1 && cofactors.iter().all(|&c| pow_mod(a, c, n) != 1))
            .ok_or_else(|| Error::Consistency(format!("no generator found for Z_{n}^*")))?;

        let mut dlog = vec![NON_UNIT; n as usize];
        let mut powers = Vec::with_capacity(phi as usize);
        let mut x = 1u64;
        for k in 0..phi {
            if dlog[x as usize] != NON_UNIT {
                return Err(Error::Consistency(format!(
                    "generator {generator} repeats before exhausting Z_{n}^*"
                )));
            }
            dlog[x as usize] = k as u32;
            powers.push(x as u32);
            x = x * generator % n;
        }
        if x != 1 {
            return Err(Error::Consistency(format!("{generator}^phi != 1 mod {n}")));
        }

        Ok(Self {
            n,
            p,
            alpha,
            doubled,
            generator,
            phi,
            dlog,
            powers,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn is_doubled(&self) -> bool {
        self.doubled
    }

    pub fn generator(&self) -> u64 {
        self.generator
    }

    /// Order of the unit group, `p^(alpha-1) (p-1)`.
    pub fn phi(&self) -> u64 {
        self.phi
    }

    /// `p^(alpha-1)`, the number of non-units in each residue class mod `p`.
    pub fn p_pow_alpha_minus_one(&self) -> u64 {
        self.phi / (self.p - 1)
    }

    /// Reduces any integer into `0..n`.
    #[inline]
    pub fn reduce(&self, x: i64) -> u64 {
        x.rem_euclid(self.n as i64) as u64
    }

    /// Discrete log of `x` to base `g`, or `None` when `x` is not a unit.
    #[inline]
    pub fn dlog(&self, x: u64) -> Option<u64> {
        match self.dlog[(x % self.n) as usize] {
            NON_UNIT => None,
            k => Some(k as u64),
        }
    }

    #[inline]
    pub fn is_unit(&self, x: u64) -> bool {
        self.dlog[(x % self.n) as usize] != NON_UNIT
    }

    /// `g^k mod n`.
    #[inline]
    pub fn power(&self, k: u64) -> u64 {
        self.powers[(k % self.phi) as usize] as u64
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.n as u128) as u64
    }

    pub fn inverse(&self, x: u64) -> Option<u64> {
        self.dlog(x).map(|k| self.power(self.phi - k))
    }

    /// Multiplicative order of the unit `x`.
    pub fn order(&self, x: u64) -> Option<u64> {
        self.dlog(x).map(|k| self.phi / gcd(k, self.phi))
    }

    /// All units in increasing order.
    pub fn units(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.n).filter(|&x| self.is_unit(x))
    }

    /// Every generator of `Z_n^*` in increasing order.
    pub fn generators(&self) -> Vec<u64> {
        let mut gens: Vec<u64> = (0..self.phi)
            .filter(|&k| gcd(k, self.phi) == 1)
            .map(|k| self.power(k))
            .collect();
        gens.sort_unstable();
        gens
    }
}
