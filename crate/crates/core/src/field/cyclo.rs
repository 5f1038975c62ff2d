use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::poly;
use super::rational::{Rationals, Q};

/// Arithmetic in the cyclotomic field `Q(z)`, `z` a primitive `n`-th root of
/// unity. Elements are coefficient vectors in the basis `1, z, …, z^(φ(n)-1)`,
/// always reduced modulo the `n`-th cyclotomic polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cyclo {
    n: usize,
    phi: Vec<Q>,
    // reduced form of z^k for k in 0..n
    powers: Vec<Vec<Q>>,
}

/// The `n`-th cyclotomic polynomial with rational coefficients.
pub fn cyclotomic_poly(n: usize) -> Vec<Q> {
    let q = Rationals;
    let mut xn = alloc::vec![Q::zero(); n + 1];
    xn[0] = -Q::one();
    xn[n] = Q::one();
    let mut out = xn;
    for d in 1..n {
        if n % d == 0 {
            out = poly::divrem(&q, &out, &cyclotomic_poly(d)).0;
        }
    }
    out
}

impl Cyclo {
    pub fn new(n: usize) -> Self {
        let n = n.max(1);
        let q = Rationals;
        let phi = cyclotomic_poly(n);
        let deg = phi.len() - 1;
        let mut powers = Vec::with_capacity(n);
        for k in 0..n {
            let mut mono = alloc::vec![Q::zero(); k + 1];
            mono[k] = Q::one();
            let mut r = poly::rem(&q, &mono, &phi);
            r.resize(deg, Q::zero());
            powers.push(r);
        }
        Cyclo { n, phi, powers }
    }

    pub fn conductor(&self) -> usize {
        self.n
    }

    /// `φ(n)`, the dimension over `Q`.
    pub fn dim(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn zero(&self) -> Vec<Q> {
        alloc::vec![Q::zero(); self.dim()]
    }

    pub fn from_int(&self, a: i64) -> Vec<Q> {
        self.from_rational(Q::from_integer(a as i128))
    }

    pub fn from_rational(&self, a: Q) -> Vec<Q> {
        let mut v = self.zero();
        v[0] = a;
        v
    }

    /// `z^k`.
    pub fn root(&self, k: i64) -> Vec<Q> {
        self.powers[k.rem_euclid(self.n as i64) as usize].clone()
    }

    /// `Σ m_k z^k` from multiplicities of the powers of `z`.
    pub fn from_multiplicities(&self, mult: &[i64]) -> Vec<Q> {
        let mut v = self.zero();
        for (k, &m) in mult.iter().enumerate() {
            if m != 0 {
                self.add_scaled(&mut v, &self.powers[k % self.n], &Q::from_integer(m as i128));
            }
        }
        v
    }

    pub fn add(&self, a: &[Q], b: &[Q]) -> Vec<Q> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(&self, a: &[Q], b: &[Q]) -> Vec<Q> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn scale(&self, a: &[Q], c: &Q) -> Vec<Q> {
        a.iter().map(|x| x * c).collect()
    }

    fn add_scaled(&self, acc: &mut [Q], v: &[Q], c: &Q) {
        for (a, x) in acc.iter_mut().zip(v) {
            *a += x * c;
        }
    }

    pub fn mul(&self, a: &[Q], b: &[Q]) -> Vec<Q> {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                self.add_scaled(&mut out, &self.powers[(i + j) % self.n], &(x * y));
            }
        }
        out
    }

    /// Complex conjugation `z ↦ z^-1`.
    pub fn conj(&self, a: &[Q]) -> Vec<Q> {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if !x.is_zero() {
                self.add_scaled(&mut out, &self.powers[(self.n - i) % self.n], x);
            }
        }
        out
    }

    /// The Galois action `z ↦ z^k` for `k` coprime to `n`.
    pub fn galois(&self, a: &[Q], k: usize) -> Vec<Q> {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if !x.is_zero() {
                self.add_scaled(&mut out, &self.powers[i * k % self.n], x);
            }
        }
        out
    }

    pub fn as_rational(&self, a: &[Q]) -> Option<Q> {
        if a.iter().skip(1).all(Q::is_zero) {
            Some(a[0])
        } else {
            None
        }
    }

    pub fn is_zero(&self, a: &[Q]) -> bool {
        a.iter().all(Q::is_zero)
    }

    /// Renders as `a0 + a1*z^1 + …`, omitting zero terms.
    pub fn render(&self, a: &[Q]) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (k, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            parts.push(match k {
                0 => format!("{c}"),
                _ if c.is_one() => format!("z^{k}"),
                _ if (-c).is_one() => format!("-z^{k}"),
                _ => format!("{c}*z^{k}"),
            });
        }
        if parts.is_empty() {
            return "0".into();
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        let ints = |v: Vec<Q>| v.iter().map(|c| c.to_integer() as i64).collect::<Vec<_>>();
        assert_eq!(ints(cyclotomic_poly(1)), [-1, 1]);
        assert_eq!(ints(cyclotomic_poly(3)), [1, 1, 1]);
        assert_eq!(ints(cyclotomic_poly(4)), [1, 0, 1]);
        assert_eq!(ints(cyclotomic_poly(12)), [1, 0, -1, 0, 1]);
    }

    #[test]
    fn sum_of_primitive_cube_roots() {
        let c = Cyclo::new(3);
        let s = c.add(&c.root(1), &c.root(2));
        assert_eq!(c.as_rational(&s), Some(Q::from_integer(-1)));
        assert_eq!(c.mul(&c.root(1), &c.conj(&c.root(1))), c.from_int(1));
    }

    #[test]
    fn render() {
        let c = Cyclo::new(4);
        assert_eq!(c.render(&c.sub(&c.from_int(2), &c.root(1))), "2 - z^1");
        assert_eq!(c.render(&c.zero()), "0");
    }
}
