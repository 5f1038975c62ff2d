use std::sync::Arc;

use mackey_core::chartab::{character_of_lift, CharacterTable};
use mackey_core::exalg::permutation_match;
use mackey_core::field::{Cyclo, Field, Gf, Q};
use mackey_core::grp::{builtin, Group, GroupTable};
use mackey_core::mackey::MackeyAlgebra;
use mackey_core::modrep::{brauer_quotient, coset_module};
use proptest::prelude::*;
use proptest::sample::select;

const SMALL: [&str; 7] = ["C2", "C3", "C4", "C6", "S3", "D4", "Q8"];

/// Cosets `xH` fixed by every element of `q`, counted directly.
fn fixed_cosets(t: &GroupTable, h: &[usize], q: &[usize]) -> usize {
    let fixing = (0..t.order())
        .filter(|&x| q.iter().all(|&y| h.contains(&t.mul(t.mul(t.inv(x), y), x))))
        .count();
    fixing / h.len()
}

fn prime_dividing(order: usize, pick: bool) -> u64 {
    let ps: Vec<u64> = [2, 3].into_iter().filter(|&p| order as u64 % p == 0).collect();
    if pick && ps.len() > 1 {
        ps[1]
    } else {
        ps[0]
    }
}

fn field() -> impl Strategy<Value = Gf> {
    (select(vec![2u32, 3, 5, 7]), 1u32..4).prop_map(|(p, m)| Gf::new(p, m).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn finite_field_laws(f in field(), xs in proptest::collection::vec(any::<u32>(), 3)) {
        let [a, b, c] = [xs[0] % f.q(), xs[1] % f.q(), xs[2] % f.q()];
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        prop_assert!(f.is_zero(&f.add(&a, &f.neg(&a))));
        if !f.is_zero(&a) {
            let inv = f.inv(&a).unwrap();
            prop_assert!(f.is_one(&f.mul(&a, &inv)));
            // Frobenius: a^q = a and a^(q-1) = 1
            prop_assert!(f.is_one(&f.pow(&a, u64::from(f.q()) - 1)));
        }
        prop_assert_eq!(f.pow(&a, u64::from(f.q())), a);
        // the Frobenius map is additive
        let p = u64::from(f.p());
        prop_assert_eq!(f.pow(&f.add(&a, &b), p), f.add(&f.pow(&a, p), &f.pow(&b, p)));
    }

    #[test]
    fn cyclotomic_laws(
        n in select(vec![1usize, 2, 3, 4, 6, 8, 12]),
        xs in proptest::collection::vec(-3i64..4, 12),
        ys in proptest::collection::vec(-3i64..4, 12),
        j in 0i64..24,
        k in 0i64..24,
    ) {
        let c = Cyclo::new(n);
        let x = c.from_multiplicities(&xs[..n]);
        let y = c.from_multiplicities(&ys[..n]);
        prop_assert_eq!(c.mul(&c.root(j), &c.root(k)), c.root(j + k));
        prop_assert_eq!(c.conj(&c.conj(&x)), x.clone());
        prop_assert_eq!(c.conj(&c.mul(&x, &y)), c.mul(&c.conj(&x), &c.conj(&y)));
        for g in (1..n.max(2)).filter(|&g| num_gcd(g, n) == 1) {
            prop_assert_eq!(c.galois(&c.mul(&x, &y), g), c.mul(&c.galois(&x, g), &c.galois(&y, g)));
        }
        // x times its conjugate is real
        let norm = c.mul(&x, &c.conj(&x));
        prop_assert_eq!(c.conj(&norm), norm);
        prop_assert_eq!(c.as_rational(&c.from_int(j)), Some(Q::from_integer(j.into())));
    }

    #[test]
    fn permutation_match_finds_conjugating_permutation(
        n in 1usize..6,
        raw in proptest::collection::vec(0usize..4, 36),
        keys in proptest::collection::vec(any::<u32>(), 6),
    ) {
        let m: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| raw[i.min(j) * 6 + i.max(j)]).collect()).collect();
        let mut sigma: Vec<usize> = (0..n).collect();
        sigma.sort_by_key(|&i| keys[i]);
        // b[i][j] = m[σi][σj]
        let b: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| m[sigma[i]][sigma[j]]).collect()).collect();
        let found = permutation_match(&m, &b);
        prop_assert!(found.is_some());
        let tau = found.unwrap();
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(m[tau[i]][tau[j]], b[i][j]);
            }
        }
    }

    #[test]
    fn relabeling_preserves_lattice_and_dimension(name in select(SMALL.to_vec()), keys in proptest::collection::vec(any::<u32>(), 8)) {
        let g = builtin(name).unwrap();
        let n = g.order();
        let mut relabel: Vec<usize> = (0..n).collect();
        relabel.sort_by_key(|&i| keys[i]);
        let mut table = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                table[relabel[a]][relabel[b]] = relabel[g.mul(a, b)];
            }
        }
        let h = Group::new(GroupTable::from_table("relabeled", table).unwrap()).unwrap();
        let g = Group::new(g).unwrap();
        prop_assert_eq!(h.lattice.len(), g.lattice.len());
        prop_assert_eq!(h.lattice.classes().len(), g.lattice.classes().len());
        let dim = |g: Group| MackeyAlgebra::build(Arc::new(g), None).unwrap().dim();
        prop_assert_eq!(dim(h), dim(g));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn brauer_quotient_counts_fixed_cosets(name in select(SMALL.to_vec()), pick in any::<bool>(), hi in any::<usize>(), qi in any::<usize>()) {
        let g = Arc::new(Group::builtin(name).unwrap());
        let p = prime_dividing(g.order(), pick);
        let f = Gf::new(p as u32, 1).unwrap();
        let reps = g.lattice.class_reps();
        let h = reps[hi % reps.len()];
        let qs = g.lattice.p_subgroups(p as usize);
        let q = qs[qi % qs.len()];
        let w = coset_module(&f, g.clone(), h);
        let bq = brauer_quotient(&w, q, p).unwrap();
        let want = fixed_cosets(&g.table, &g.lattice.get(h).members, &g.lattice.get(q).members);
        prop_assert_eq!(bq.complement.dim(), want);
    }

    #[test]
    fn lifted_permutation_character_counts_fixed_cosets(name in select(vec!["C4", "C6", "S3", "D4", "Q8", "A4"]), pick in any::<bool>(), hi in any::<usize>()) {
        let g = Arc::new(Group::builtin(name).unwrap());
        let p = prime_dividing(g.order(), pick);
        let table = CharacterTable::new(&g.table).unwrap();
        let reps = g.lattice.class_reps();
        let h = reps[hi % reps.len()];
        let w = coset_module(&Gf::new(p as u32, 2).unwrap(), g.clone(), h);
        let psi = character_of_lift(&w, &table).unwrap();
        for (k, &x) in table.classes.reps.iter().enumerate() {
            let want = fixed_cosets(&g.table, &g.lattice.get(h).members, &g.table.closure(&[x])) as i128;
            prop_assert_eq!(table.cyclo.as_rational(&psi[k]), Some(Q::from_integer(want)));
        }
        // multiplicities of the irreducibles are nonnegative integers
        prop_assert!(table.decompose(&psi).unwrap().iter().all(|&m| m >= 0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn sampled_associativity(name in select(vec!["S3", "C6", "A4"]), local in any::<bool>(), seed in any::<u64>()) {
        let g = Arc::new(Group::builtin(name).unwrap());
        let p = local.then_some(2);
        let mu = MackeyAlgebra::build(g, p).unwrap();
        prop_assert!(mu.check_associative_sampled(2_000, seed).is_ok());
    }
}

fn num_gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}
