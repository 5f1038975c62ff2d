use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::GroupTable;
use crate::error::{Error, Result};

/// Builds a named group.
///
/// Accepted names: `Cn`, `Dn` (dihedral of order `2n`), `Sn`, `An`, `Q8`,
/// `SL(2,3)`, direct products `AxB` of any of these, and semidirect products
/// `Cn:Cm[k]` where the generator of `Cm` acts on `Cn` by `x ↦ x^k`.
pub fn builtin(spec: &str) -> Result<GroupTable> {
    let spec = spec.trim();
    let parts = split_product(spec);
    if parts.len() > 1 {
        let mut acc = builtin(parts[0])?;
        for p in &parts[1..] {
            acc = direct_product(&acc, &builtin(p)?)?;
        }
        acc.set_name(spec);
        return Ok(acc);
    }
    let unknown = || Error::UnknownGroup(spec.to_string());
    if spec == "Q8" {
        return quaternion8();
    }
    if spec.eq_ignore_ascii_case("SL(2,3)") {
        return sl23();
    }
    if let Some((left, right)) = spec.split_once(':') {
        let n = parse_cyclic(left).ok_or_else(unknown)?;
        let (cm, k) = right.split_once('[').ok_or_else(unknown)?;
        let m = parse_cyclic(cm).ok_or_else(unknown)?;
        let k: usize = k.strip_suffix(']').and_then(|k| k.parse().ok()).ok_or_else(unknown)?;
        return semidirect_cyclic(spec, n, m, k);
    }
    let (head, num) = spec.split_at(spec.find(|c: char| c.is_ascii_digit()).ok_or_else(unknown)?);
    let n: usize = num.parse().map_err(|_| unknown())?;
    match head {
        "C" if n >= 1 => cyclic(n),
        "D" if n >= 1 => dihedral(n),
        "S" if n >= 1 => symmetric(n),
        "A" if n >= 1 => alternating(n),
        _ => Err(unknown()),
    }
}

fn parse_cyclic(s: &str) -> Option<usize> {
    s.trim().strip_prefix('C')?.parse().ok().filter(|&n| n >= 1)
}

// splits on 'x' outside parentheses
fn split_product(spec: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in spec.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            'x' | 'X' | '×' if depth == 0 => {
                parts.push(spec[start..i].trim());
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(spec[start..].trim());
    parts
}

pub fn cyclic(n: usize) -> Result<GroupTable> {
    let gens: Vec<usize> = if n > 1 { alloc::vec![1] } else { Vec::new() };
    GroupTable::from_closure(&format!("C{n}"), 0usize, &gens, |a, b| (a + b) % n)
}

/// Dihedral group of order `2n`; elements `r^a s^f` stored as `(a, f)`.
pub fn dihedral(n: usize) -> Result<GroupTable> {
    let mul = |x: &(usize, u8), y: &(usize, u8)| {
        let b = if x.1 == 0 { y.0 } else { (n - y.0) % n };
        ((x.0 + b) % n, x.1 ^ y.1)
    };
    let mut gens = Vec::new();
    if n > 1 {
        gens.push((1 % n, 0u8));
    }
    gens.push((0, 1u8));
    GroupTable::from_closure(&format!("D{n}"), (0usize, 0u8), &gens, mul)
}

pub fn symmetric(n: usize) -> Result<GroupTable> {
    let mut gens = Vec::new();
    if n >= 2 {
        let mut t: Vec<usize> = (0..n).collect();
        t.swap(0, 1);
        gens.push(t);
    }
    if n >= 3 {
        gens.push((0..n).map(|i| (i + 1) % n).collect());
    }
    if gens.is_empty() {
        gens.push(alloc::vec![0]);
    }
    let mut g = GroupTable::from_permutations(&format!("S{n}"), &gens)?;
    g.set_name(&format!("S{n}"));
    Ok(g)
}

pub fn alternating(n: usize) -> Result<GroupTable> {
    // 3-cycles (0 1 k) generate A_n
    let mut gens = Vec::new();
    for k in 2..n {
        let mut c: Vec<usize> = (0..n).collect();
        c[0] = 1;
        c[1] = k;
        c[k] = 0;
        gens.push(c);
    }
    if gens.is_empty() {
        gens.push((0..n.max(1)).collect());
    }
    GroupTable::from_permutations(&format!("A{n}"), &gens)
}

type Mat2 = [u8; 4];

fn mat_mul3(a: &Mat2, b: &Mat2) -> Mat2 {
    [
        (a[0] * b[0] + a[1] * b[2]) % 3,
        (a[0] * b[1] + a[1] * b[3]) % 3,
        (a[2] * b[0] + a[3] * b[2]) % 3,
        (a[2] * b[1] + a[3] * b[3]) % 3,
    ]
}

/// `SL(2,3)`, generated by `[[1,1],[0,1]]` and `[[0,2],[1,0]]`.
pub fn sl23() -> Result<GroupTable> {
    GroupTable::from_closure("SL(2,3)", [1, 0, 0, 1], &[[1, 1, 0, 1], [0, 2, 1, 0]], mat_mul3)
}

/// The quaternion group, realised inside `SL(2,3)`.
pub fn quaternion8() -> Result<GroupTable> {
    GroupTable::from_closure("Q8", [1, 0, 0, 1], &[[0, 2, 1, 0], [1, 1, 1, 2]], mat_mul3)
}

pub fn direct_product(a: &GroupTable, b: &GroupTable) -> Result<GroupTable> {
    let mut gens: Vec<(usize, usize)> = a.generators().iter().map(|&x| (x, 0)).collect();
    gens.extend(b.generators().iter().map(|&y| (0, y)));
    let name = format!("{}x{}", a.name(), b.name());
    GroupTable::from_closure(&name, (0, 0), &gens, |x, y| (a.mul(x.0, y.0), b.mul(x.1, y.1)))
}

/// `Cn ⋊ Cm` with the generator of `Cm` acting by `x ↦ x^k`.
pub fn semidirect_cyclic(name: &str, n: usize, m: usize, k: usize) -> Result<GroupTable> {
    let k = k % n.max(1);
    let mut kp = 1 % n.max(1);
    for _ in 0..m {
        kp = kp * k % n.max(1);
    }
    if kp != 1 % n.max(1) {
        return Err(Error::InvalidArgument(format!("{k}^{m} is not 1 modulo {n}")));
    }
    let powk = |e: usize| -> usize {
        let mut r = 1 % n;
        for _ in 0..e {
            r = r * k % n;
        }
        r
    };
    // (a, b)(c, d) = (a + k^b c, b + d)
    let mul = |x: &(usize, usize), y: &(usize, usize)| ((x.0 + powk(x.1) * y.0) % n, (x.1 + y.1) % m);
    let gens = [(1 % n, 0), (0, 1 % m)];
    GroupTable::from_closure(name, (0, 0), &gens, mul)
}

/// Names of the groups used throughout the test suite.
pub fn suite_names() -> Vec<String> {
    ["C2", "C3", "C4", "C6", "S3", "D4", "Q8", "A4", "SL(2,3)"].iter().map(|s| s.to_string()).collect()
}
