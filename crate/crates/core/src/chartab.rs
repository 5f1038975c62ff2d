//! Ordinary character tables with exact cyclotomic values, Brauer-character
//! lifting from finite fields, and characters of lifted p-permutation
//! modules.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::field::{Cyclo, Field, Gf, Q};
use crate::grp::GroupTable;
use crate::linalg::{self, Mat};
use crate::modrep::{brauer_quotient, ModuleRep};

/// Cyclotomic values of a class function, one per conjugacy class.
pub type ClassFunction = Vec<Vec<Q>>;

/// Conjugacy classes of a group: representatives are the smallest elements;
/// the identity class comes first, then classes by element order and
/// representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClasses {
    pub reps: Vec<usize>,
    pub sizes: Vec<usize>,
    pub class_of: Vec<usize>,
}

impl ConjugacyClasses {
    pub fn new(g: &GroupTable) -> Self {
        let n = g.order();
        let mut raw = alloc::vec![usize::MAX; n];
        let mut found: Vec<(usize, usize, usize)> = Vec::new();
        for x in 0..n {
            if raw[x] != usize::MAX {
                continue;
            }
            let mut size = 0;
            for y in 0..n {
                let c = g.conj(y, x);
                if raw[c] == usize::MAX {
                    raw[c] = found.len();
                    size += 1;
                }
            }
            found.push((g.element_order(x), x, size));
        }
        let mut order: Vec<usize> = (0..found.len()).collect();
        order.sort_by_key(|&i| (found[i].0, found[i].1));
        let mut rank = alloc::vec![0; found.len()];
        for (r, &i) in order.iter().enumerate() {
            rank[i] = r;
        }
        ConjugacyClasses {
            reps: order.iter().map(|&i| found[i].1).collect(),
            sizes: order.iter().map(|&i| found[i].2).collect(),
            class_of: raw.iter().map(|&c| rank[c]).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }
}

/// Irreducible characters of a finite group with exact values in the
/// cyclotomic field of conductor `exp(G)`.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub order: usize,
    pub classes: ConjugacyClasses,
    pub cyclo: Cyclo,
    /// `chars[i][k]` is the value of the `i`-th irreducible on class `k`.
    pub chars: Vec<ClassFunction>,
    /// For each prime dividing the order, the class of `g^p` for each class.
    pub powermap: Vec<(u64, Vec<usize>)>,
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
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

/// Simultaneous eigenvectors of the class matrices over GF(ℓ), normalized
/// to 1 at the identity class.
fn central_characters(f: &Gf, mats: &[Mat<u32>], r: usize) -> Result<Vec<Vec<u32>>> {
    // each space is a basis of column vectors
    let mut spaces: Vec<Vec<Vec<u32>>> = alloc::vec![(0..r).map(|i| {
        let mut v = alloc::vec![0u32; r];
        v[i] = 1;
        v
    })
    .collect()];
    for m in mats {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for s in spaces {
            if s.len() == 1 {
                next.push(s);
                continue;
            }
            let images: Vec<Vec<u32>> = s.iter().map(|v| linalg::mat_vec(f, m, v)).collect();
            let mut covered = 0;
            for lambda in 0..f.q() {
                // combinations c with Σ c_i (M v_i - λ v_i) = 0
                let cols: Vec<Vec<u32>> =
                    images.iter().zip(&s).map(|(mv, v)| linalg::vsub(f, mv, &linalg::vscale(f, v, &lambda))).collect();
                let sys = linalg::transpose(&cols);
                let kernel = linalg::nullspace(f, &sys, s.len());
                if kernel.is_empty() {
                    continue;
                }
                covered += kernel.len();
                let sub: Vec<Vec<u32>> = kernel
                    .iter()
                    .map(|c| {
                        let mut v = alloc::vec![0u32; r];
                        for (ci, vi) in c.iter().zip(&s) {
                            linalg::axpy(f, &mut v, ci, vi);
                        }
                        v
                    })
                    .collect();
                next.push(sub);
            }
            if covered != s.len() {
                return Err(Error::Certification("class matrices are not simultaneously diagonalizable".into()));
            }
        }
        spaces = next;
    }
    if spaces.len() != r {
        return Err(Error::Certification("class matrices do not separate the characters".into()));
    }
    spaces
        .into_iter()
        .map(|mut s| {
            let v = s.pop().expect("one-dimensional");
            let inv = f.inv(&v[0]).ok_or_else(|| Error::Certification("eigenvector vanishes at 1".into()))?;
            Ok(linalg::vscale(f, &v, &inv))
        })
        .collect()
}

impl CharacterTable {
    /// Computes the table by simultaneous diagonalization of the class
    /// multiplication matrices over a prime field `GF(ℓ)` with
    /// `ℓ ≡ 1 (mod exp G)` and `ℓ > 2|G|`, then lifts values to cyclotomic
    /// numbers through eigenvalue multiplicities; orthogonality is certified
    /// exactly.
    pub fn new(g: &GroupTable) -> Result<Self> {
        let n = g.order();
        let e = g.exponent();
        let classes = ConjugacyClasses::new(g);
        let r = classes.len();
        let ell = (1..)
            .map(|k| k * e as u64 + 1)
            .find(|&l| l > 2 * n as u64 && is_prime(l))
            .expect("primes in arithmetic progression");
        let f = Gf::new(ell as u32, 1)?;
        // a[i][j][k] = #{x ∈ C_i : x⁻¹ g_k ∈ C_j}
        let mut mats: Vec<Mat<u32>> = alloc::vec![linalg::zeros(&f, r, r); r];
        for (k, &gk) in classes.reps.iter().enumerate() {
            for x in 0..n {
                let i = classes.class_of[x];
                let j = classes.class_of[g.mul(g.inv(x), gk)];
                mats[i][j][k] = f.add(&mats[i][j][k], &1);
            }
        }
        let omegas = central_characters(&f, &mats, r)?;
        let inv_class: Vec<usize> = classes.reps.iter().map(|&x| classes.class_of[g.inv(x)]).collect();
        let cyclo = Cyclo::new(e);
        let zeta = f.root_of_unity(e as u64).expect("ℓ ≡ 1 mod exp");
        let mut chars = Vec::with_capacity(r);
        for w in omegas {
            // χ(1)² = |G| / Σ_k w_k w_{k*} / |C_k|
            let mut s = 0u32;
            for k in 0..r {
                let t = f.mul(&w[k], &w[inv_class[k]]);
                s = f.add(&s, &f.div(&t, &f.from_int(classes.sizes[k] as i64)).expect("class size invertible"));
            }
            let d2 = f.div(&f.from_int(n as i64), &s).ok_or_else(|| Error::Certification("zero norm".into()))?;
            let d = (1..=n)
                .take_while(|d| d * d <= n)
                .find(|&d| f.from_int((d * d) as i64) == d2)
                .ok_or_else(|| Error::Certification("degree is not an integer".into()))?;
            let values_mod: Vec<u32> = (0..r)
                .map(|k| f.div(&f.mul(&f.from_int(d as i64), &w[k]), &f.from_int(classes.sizes[k] as i64)).unwrap())
                .collect();
            let mut chi = Vec::with_capacity(r);
            for &x in &classes.reps {
                let o = g.element_order(x);
                let zo = f.pow(&zeta, (e / o) as u64);
                let inv_o = f.inv(&f.from_int(o as i64)).expect("order invertible");
                let mut mult = alloc::vec![0i64; e];
                for i in 0..o {
                    // m_i = (1/o) Σ_j χ(x^j) ζ_o^{-ij}
                    let mut acc = 0u32;
                    for j in 0..o {
                        let val = values_mod[classes.class_of[g.pow(x, j as u64)]];
                        let root = f.pow(&zo, ((o - (i * j) % o) % o) as u64);
                        acc = f.mul_add(&acc, &val, &root);
                    }
                    let m = f.mul(&acc, &inv_o) as usize;
                    if m > d {
                        return Err(Error::Certification("eigenvalue multiplicity out of range".into()));
                    }
                    mult[(e / o) * i] = m as i64;
                }
                chi.push(cyclo.from_multiplicities(&mult));
            }
            chars.push(chi);
        }
        chars.sort_by(|a, b| {
            let key = |c: &ClassFunction| {
                let trivial = c.iter().all(|v| *v == cyclo.from_int(1));
                (cyclo.as_rational(&c[0]), !trivial, c.iter().map(|v| format!("{v:?}")).collect::<Vec<_>>())
            };
            key(a).cmp(&key(b))
        });
        let powermap = prime_divisors(n as u64)
            .into_iter()
            .map(|p| (p, classes.reps.iter().map(|&x| classes.class_of[g.pow(x, p)]).collect()))
            .collect();
        let table = CharacterTable { order: n, classes, cyclo, chars, powermap };
        table.certify()?;
        Ok(table)
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn degree(&self, i: usize) -> i64 {
        let d = self.cyclo.as_rational(&self.chars[i][0]).expect("degrees are rational");
        d.to_integer() as i64
    }

    /// `⟨a, b⟩ = |G|⁻¹ Σ_g a(g) conj(b(g))`.
    pub fn inner_product(&self, a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Q> {
        let c = &self.cyclo;
        let mut acc = c.zero();
        for k in 0..self.classes.len() {
            let t = c.mul(&a[k], &c.conj(&b[k]));
            acc = c.add(&acc, &c.scale(&t, &Q::from_integer(self.classes.sizes[k] as i128)));
        }
        c.scale(&acc, &Q::new(1, self.order as i128))
    }

    /// Multiplicities of the irreducibles in a class function; fails unless
    /// all are non-negative integers.
    pub fn decompose(&self, psi: &[Vec<Q>]) -> Result<Vec<i64>> {
        let mut out = Vec::with_capacity(self.len());
        for chi in &self.chars {
            let ip = self.inner_product(psi, chi);
            let q = self
                .cyclo
                .as_rational(&ip)
                .ok_or_else(|| Error::Certification("inner product is not rational".into()))?;
            if !q.is_integer() || q.is_negative() {
                return Err(Error::Certification(format!("multiplicity {q} is not a non-negative integer")));
            }
            out.push(q.to_integer() as i64);
        }
        Ok(out)
    }

    fn certify(&self) -> Result<()> {
        let c = &self.cyclo;
        let sum: i64 = (0..self.len()).map(|i| self.degree(i) * self.degree(i)).sum();
        if sum != self.order as i64 {
            return Err(Error::Certification(format!("squared degrees sum to {sum}")));
        }
        for (i, a) in self.chars.iter().enumerate() {
            for (j, b) in self.chars.iter().enumerate() {
                let ip = self.inner_product(a, b);
                let want = if i == j { c.from_int(1) } else { c.zero() };
                if ip != want {
                    return Err(Error::Certification(format!("characters {i} and {j} are not orthonormal")));
                }
            }
        }
        Ok(())
    }

    /// One line per character, values as `a0 + a1*z^k` with the conductor
    /// in the header.
    pub fn render(&self) -> String {
        let mut s = format!("conductor {}\nclasses", self.cyclo.conductor());
        for (r, size) in self.classes.reps.iter().zip(&self.classes.sizes) {
            s.push_str(&format!(" {r}[{size}]"));
        }
        s.push('\n');
        for chi in &self.chars {
            let vals: Vec<String> = chi.iter().map(|v| self.cyclo.render(v)).collect();
            s.push_str(&vals.join(" | "));
            s.push('\n');
        }
        s
    }
}

/// Lift of the Brauer character of a `p'`-element acting by `m`: each
/// eigenvalue `γ^(k(q-1)/o)` in `GF(q)` maps to `z^(k·n/o)` in `Q(z_n)`.
pub fn lift_brauer_character(f: &Gf, m: &Mat<u32>, order: usize, cyclo: &Cyclo) -> Result<Vec<Q>> {
    let dim = m.len();
    let n = cyclo.conductor();
    if order % f.p() as usize == 0 {
        return Err(Error::NotPRegular(order));
    }
    if n % order != 0 {
        return Err(Error::InvalidArgument(format!("conductor {n} is not a multiple of {order}")));
    }
    let w = f.root_of_unity(order as u64).ok_or(Error::NeedsExtension(0))?;
    let mut mult = alloc::vec![0i64; n];
    let mut total = 0;
    for k in 0..order {
        let lambda = f.pow(&w, k as u64);
        let mut a = m.clone();
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = f.sub(&row[i], &lambda);
        }
        let d = dim - linalg::rank(f, &a);
        mult[k * (n / order)] = d as i64;
        total += d;
    }
    if total != dim {
        return Err(Error::Certification("p'-element does not act semisimply with eigenvalues in the field".into()));
    }
    Ok(cyclo.from_multiplicities(&mult))
}

/// Splits `x` into commuting `p`-part and `p'`-part.
pub fn p_decomposition(g: &GroupTable, x: usize, p: usize) -> (usize, usize) {
    let n = g.element_order(x);
    let mut pp = 1;
    while n % (pp * p) == 0 {
        pp *= p;
    }
    let m = n / pp;
    // u = x^(m a) with m a ≡ 1 mod pp; s = x^(pp b) with pp b ≡ 1 mod m
    let a = (0..pp).find(|a| (m * a) % pp == 1 % pp).unwrap_or(0);
    let b = (0..m.max(1)).find(|b| (pp * b) % m.max(1) == 1 % m.max(1)).unwrap_or(0);
    (g.pow(x, (m * a) as u64), g.pow(x, (pp * b) as u64))
}

/// Character of the lift to characteristic 0 of a p-permutation module `w`:
/// at `g = us` it is the lifted Brauer character of `s` on `W[⟨u⟩]`. The
/// result is certified to be a character of `table`.
pub fn character_of_lift(w: &ModuleRep<Gf>, table: &CharacterTable) -> Result<ClassFunction> {
    let f = &w.field;
    let p = f.p() as usize;
    let t = w.table();
    let lat = &w.group().lattice;
    let mut out = Vec::with_capacity(table.classes.len());
    for &x in &table.classes.reps {
        let (u, s) = p_decomposition(t, x, p);
        let q = lat
            .id_of(&t.closure(&[u]))
            .ok_or_else(|| Error::Certification("cyclic subgroup missing from the lattice".into()))?;
        let bq = brauer_quotient(w, q, p as u64)?;
        let value = if bq.dim() == 0 {
            table.cyclo.zero()
        } else {
            let m = bq.action(w, s)?;
            lift_brauer_character(f, &m, t.element_order(s), &table.cyclo)?
        };
        out.push(value);
    }
    table.decompose(&out)?;
    Ok(out)
}

/// Rational values of a class function, when all are rational.
pub fn rational_values(table: &CharacterTable, psi: &[Vec<Q>]) -> Option<Vec<Q>> {
    psi.iter().map(|v| table.cyclo.as_rational(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::{builtin, Group};
    use crate::gset::GSet;
    use crate::modrep::coset_module;
    use alloc::sync::Arc;

    #[test]
    fn small_tables() {
        let c2 = CharacterTable::new(&builtin("C2").unwrap()).unwrap();
        let vals: Vec<Vec<Q>> = c2.chars.iter().map(|c| rational_values(&c2, c).unwrap()).collect();
        let q = |n: i128| Q::from_integer(n);
        assert_eq!(vals, [[q(1), q(1)], [q(1), q(-1)]]);
        for (name, degrees) in [
            ("S3", alloc::vec![1, 1, 2]),
            ("SL(2,3)", alloc::vec![1, 1, 1, 2, 2, 2, 3]),
            ("Q8", alloc::vec![1, 1, 1, 1, 2]),
            ("A4", alloc::vec![1, 1, 1, 3]),
        ] {
            let t = CharacterTable::new(&builtin(name).unwrap()).unwrap();
            let d: Vec<i64> = (0..t.len()).map(|i| t.degree(i)).collect();
            assert_eq!(d, degrees, "{name}");
        }
    }

    #[test]
    fn brauer_lift_of_the_two_dimensional_simple() {
        // S3 acting on the augmentation quotient of GF(4)^3 restricted to the
        // 2-dim simple: the 3-cycle has eigenvalues the primitive cube roots
        let f = Gf::new(2, 2).unwrap();
        let w = f.root_of_unity(3).unwrap();
        let w2 = f.mul(&w, &w);
        let m = alloc::vec![alloc::vec![w, 0], alloc::vec![0, w2]];
        let cyclo = Cyclo::new(6);
        let v = lift_brauer_character(&f, &m, 3, &cyclo).unwrap();
        assert_eq!(cyclo.as_rational(&v), Some(Q::from_integer(-1)));
        let id = linalg::identity(&f, 2);
        assert_eq!(cyclo.as_rational(&lift_brauer_character(&f, &id, 1, &cyclo).unwrap()), Some(Q::from_integer(2)));
        assert!(lift_brauer_character(&f, &id, 2, &cyclo).is_err());
    }

    #[test]
    fn lifts_of_permutation_modules_count_fixed_points() {
        for (name, p, m) in [("S3", 2, 2), ("S3", 3, 1), ("A4", 2, 2), ("SL(2,3)", 3, 2), ("D4", 2, 1)] {
            let g = Arc::new(Group::builtin(name).unwrap());
            let f = Gf::new(p, m).unwrap();
            let table = CharacterTable::new(&g.table).unwrap();
            for h in g.lattice.class_reps() {
                let w = coset_module(&f, g.clone(), h);
                let psi = character_of_lift(&w, &table).unwrap();
                let x = GSet::cosets(&g.table, &g.lattice, h);
                for (k, &rep) in table.classes.reps.iter().enumerate() {
                    let fixed = x.fixed_points(&g.table.closure(&[rep])).len();
                    assert_eq!(table.cyclo.as_rational(&psi[k]), Some(Q::from_integer(fixed as i128)), "{name} {h}");
                }
            }
        }
    }

    #[test]
    fn p_parts_commute_and_multiply_back() {
        let g = builtin("SL(2,3)").unwrap();
        for x in 0..g.order() {
            for p in [2, 3] {
                let (u, s) = p_decomposition(&g, x, p);
                assert_eq!(g.mul(u, s), x);
                assert_eq!(g.mul(u, s), g.mul(s, u));
                assert!(crate::grp::is_power_of(g.element_order(u), p));
                assert_ne!(g.element_order(s) % p, 0);
            }
        }
    }
}
