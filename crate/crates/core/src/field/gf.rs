use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{Field, FieldDesc};
use crate::error::{Error, Result};

/// Largest field size accepted by [`Gf::new`].
pub const MAX_FIELD_SIZE: u64 = 1 << 16;

/// The finite field `GF(p^m)`.
///
/// An element is encoded as the integer `Σ c_i p^i` of its coefficient vector
/// with respect to the power basis of a root `γ` of the defining polynomial.
/// The defining polynomial is the lexicographically smallest primitive monic
/// polynomial of degree `m`, so `γ` generates the multiplicative group; for
/// `m = 1`, `γ` is the smallest primitive root modulo `p`.
#[derive(Clone, Debug)]
pub struct Gf {
    p: u32,
    m: u32,
    q: u32,
    tables: Arc<Tables>,
}

#[derive(Debug)]
struct Tables {
    poly: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    add: Vec<u32>,
    neg: Vec<u32>,
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
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

// digit-wise arithmetic on encoded polynomials
fn digits(mut a: u32, p: u32, m: u32) -> Vec<u32> {
    (0..m)
        .map(|_| {
            let d = a % p;
            a /= p;
            d
        })
        .collect()
}

fn encode(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

// multiply the encoded element by x modulo the monic polynomial `poly`
fn times_x(a: &[u32], poly: &[u32], p: u32) -> Vec<u32> {
    let m = a.len();
    let top = a[m - 1];
    let mut out = alloc::vec![0u32; m];
    for i in (1..m).rev() {
        out[i] = a[i - 1];
    }
    for i in 0..m {
        out[i] = (out[i] + (p - top) * poly[i]) % p;
    }
    out
}

impl Gf {
    pub fn new(p: u32, m: u32) -> Result<Self> {
        if !is_prime(p as u64) || m == 0 {
            return Err(Error::UnsupportedField(format!("GF({p}^{m})")));
        }
        let q = (p as u64).checked_pow(m).filter(|&q| q <= MAX_FIELD_SIZE);
        let q = q.ok_or_else(|| Error::UnsupportedField(format!("GF({p}^{m}) exceeds {MAX_FIELD_SIZE} elements")))?
            as u32;
        let order = (q - 1) as u64;
        let factors = prime_factors(order);
        let (poly, exp) = if m == 1 {
            let g = (1..p.max(2))
                .find(|&g| {
                    factors.iter().all(|&r| powmod(g as u64, order / r, p as u64) != 1) || p == 2
                })
                .expect("primitive root exists");
            let mut exp = Vec::with_capacity(order as usize);
            let mut x = 1u64;
            for _ in 0..order {
                exp.push(x as u32);
                x = x * g as u64 % p as u64;
            }
            (alloc::vec![(p - g) % p, 1], exp)
        } else {
            let mut found = None;
            // non-leading coefficients enumerated in increasing encoded order
            for code in 0..q {
                let mut poly = digits(code, p, m);
                if poly[0] == 0 {
                    continue;
                }
                let exp = powers_of_x(&poly, p, m, order as usize);
                if let Some(exp) = exp {
                    poly.push(1);
                    found = Some((poly, exp));
                    break;
                }
            }
            found.expect("primitive polynomial exists")
        };
        let mut log = alloc::vec![u32::MAX; q as usize];
        for (i, &e) in exp.iter().enumerate() {
            log[e as usize] = i as u32;
        }
        let (add, neg) = if m == 1 {
            (Vec::new(), Vec::new())
        } else {
            let mut add = alloc::vec![0u32; (q * q) as usize];
            let dig: Vec<Vec<u32>> = (0..q).map(|a| digits(a, p, m)).collect();
            for a in 0..q as usize {
                for b in 0..q as usize {
                    let s: Vec<u32> = dig[a].iter().zip(&dig[b]).map(|(x, y)| (x + y) % p).collect();
                    add[a * q as usize + b] = encode(&s, p);
                }
            }
            let neg = dig.iter().map(|d| encode(&d.iter().map(|&c| (p - c) % p).collect::<Vec<_>>(), p)).collect();
            (add, neg)
        };
        Ok(Gf { p, m, q, tables: Arc::new(Tables { poly, exp, log, add, neg }) })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Monic defining polynomial, constant term first.
    pub fn poly(&self) -> &[u32] {
        &self.tables.poly
    }

    /// The fixed multiplicative generator `γ`.
    pub fn generator(&self) -> u32 {
        if self.q == 2 {
            1
        } else {
            self.tables.exp[1]
        }
    }

    /// `k` with `a = γ^k`, for nonzero `a`.
    pub fn log(&self, a: u32) -> Option<u32> {
        if a == 0 {
            None
        } else {
            Some(self.tables.log[a as usize])
        }
    }

    /// `γ^k`.
    pub fn exp(&self, k: u64) -> u32 {
        self.tables.exp[(k % (self.q as u64 - 1)) as usize]
    }

    /// The fixed primitive `n`-th root of unity `γ^((q-1)/n)`, if `n | q-1`.
    pub fn root_of_unity(&self, n: u64) -> Option<u32> {
        let order = self.q as u64 - 1;
        if n == 0 || order % n != 0 {
            None
        } else {
            Some(self.exp(order / n))
        }
    }
}

fn powmod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

// powers of x modulo a monic polynomial with the given lower coefficients;
// Some only when x has multiplicative order exactly `order`
fn powers_of_x(lower: &[u32], p: u32, m: u32, order: usize) -> Option<Vec<u32>> {
    let mut exp = Vec::with_capacity(order);
    let mut cur = alloc::vec![0u32; m as usize];
    cur[0] = 1;
    for i in 0..order {
        let code = encode(&cur, p);
        if i > 0 && code == 1 {
            return None;
        }
        exp.push(code);
        cur = times_x(&cur, lower, p);
    }
    if encode(&cur, p) == 1 {
        Some(exp)
    } else {
        None
    }
}

impl Field for Gf {
    type Elt = u32;

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1
    }

    fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        if self.m == 1 {
            let s = a + b;
            if s >= self.p {
                s - self.p
            } else {
                s
            }
        } else {
            self.tables.add[(*a * self.q + *b) as usize]
        }
    }

    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if self.m == 1 {
            if *a == 0 {
                0
            } else {
                self.p - a
            }
        } else {
            self.tables.neg[*a as usize]
        }
    }

    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        self.add(a, &self.neg(b))
    }

    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        if *a == 0 || *b == 0 {
            return 0;
        }
        if self.m == 1 {
            return ((*a as u64 * *b as u64) % self.p as u64) as u32;
        }
        let t = &self.tables;
        let s = t.log[*a as usize] + t.log[*b as usize];
        let order = self.q - 1;
        t.exp[if s >= order { s - order } else { s } as usize]
    }

    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        let t = &self.tables;
        let order = self.q - 1;
        let l = t.log[*a as usize];
        Some(t.exp[((order - l) % order) as usize])
    }

    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }

    fn characteristic(&self) -> u64 {
        self.p as u64
    }

    fn size(&self) -> Option<u64> {
        Some(self.q as u64)
    }

    fn desc(&self) -> FieldDesc {
        if self.m == 1 {
            FieldDesc::Prime(self.p)
        } else {
            FieldDesc::Extension { p: self.p, m: self.m, poly: self.tables.poly.clone() }
        }
    }

    fn elements(&self) -> Option<Vec<u32>> {
        Some((0..self.q).collect())
    }

    fn render(&self, a: &u32) -> String {
        if self.m == 1 || *a == 0 {
            format!("{a}")
        } else {
            format!("g^{}", self.tables.log[*a as usize])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_polynomials_are_fixed() {
        // x^2 + x + 1 over GF(2), x^2 + x + 2 over GF(3), x^3 + x + 1 over GF(2)
        assert_eq!(Gf::new(2, 2).unwrap().poly(), [1, 1, 1]);
        assert_eq!(Gf::new(3, 2).unwrap().poly(), [2, 1, 1]);
        assert_eq!(Gf::new(2, 3).unwrap().poly(), [1, 1, 0, 1]);
    }

    #[test]
    fn generator_has_full_order() {
        for (p, m) in [(2, 1), (2, 2), (3, 1), (3, 2), (5, 1), (7, 1), (2, 4), (13, 1)] {
            let f = Gf::new(p, m).unwrap();
            let g = f.generator();
            let order = f.q() as u64 - 1;
            assert_eq!(f.pow(&g, order), 1);
            for k in 1..order {
                if order % k == 0 {
                    assert_ne!(f.pow(&g, k), 1, "GF({p}^{m})");
                }
            }
        }
    }

    #[test]
    fn roots_of_unity_are_compatible() {
        let f = Gf::new(7, 1).unwrap();
        let w6 = f.root_of_unity(6).unwrap();
        assert_eq!(f.pow(&w6, 2), f.root_of_unity(3).unwrap());
        assert_eq!(f.root_of_unity(4), None);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(Gf::new(4, 1).is_err());
        assert!(Gf::new(2, 0).is_err());
        assert!(Gf::new(2, 17).is_err());
    }
}
