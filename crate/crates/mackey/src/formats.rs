//! Text formats: Cayley-table and permutation-generator group files, algebra
//! and module dumps.
//!
//! Cayley files start with the order `n` followed by `n` rows of `n`
//! 0-based indices; a `# name: ...` comment sets the group name and other
//! `#` lines are ignored. Permutation files hold one generator per line in
//! 1-based cycle notation, e.g. `(1,2,3)(4,5)`; `()` is the identity.

use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use mackey_core::exalg::Algebra;
use mackey_core::field::{Field, Gf};
use mackey_core::grp::{builtin, Group, GroupTable};
use mackey_core::modrep::ModuleRep;

use crate::error::{AppError, Result};

fn parse_err(origin: &str, line: usize, msg: impl Into<String>) -> AppError {
    AppError::Parse { origin: origin.to_string(), line, msg: msg.into() }
}

/// Content lines with their 1-based numbers, and the `# name:` value if any.
fn content_lines(text: &str) -> (Vec<(usize, &str)>, Option<String>) {
    let mut name = None;
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(n) = comment.trim().strip_prefix("name:") {
                name = Some(n.trim().to_string());
            }
        } else if !line.is_empty() {
            lines.push((i + 1, line));
        }
    }
    (lines, name)
}

pub fn parse_cayley(text: &str, origin: &str) -> Result<GroupTable> {
    let (lines, name) = content_lines(text);
    let (first_no, first) = *lines.first().ok_or_else(|| parse_err(origin, 1, "empty file"))?;
    let n: usize = first.parse().map_err(|_| parse_err(origin, first_no, format!("expected the order, found `{first}`")))?;
    if lines.len() != n + 1 {
        return Err(parse_err(origin, first_no, format!("expected {n} table rows, found {}", lines.len() - 1)));
    }
    let mut table = Vec::with_capacity(n);
    for &(no, line) in &lines[1..] {
        let row = line
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| parse_err(origin, no, format!("bad entry `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        table.push(row);
    }
    Ok(GroupTable::from_table(name.as_deref().unwrap_or(origin), table)?)
}

/// Parses one permutation in 1-based cycle notation into 0-based images.
pub fn parse_cycles(s: &str) -> std::result::Result<Vec<usize>, String> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(|| format!("expected `(` at `{rest}`"))?;
        let end = body.find(')').ok_or("unclosed cycle")?;
        let points = body[..end]
            .split([',', ' '])
            .filter(|t| !t.is_empty())
            .map(|t| match t.parse::<usize>() {
                Ok(0) | Err(_) => Err(format!("bad point `{t}`")),
                Ok(v) => Ok(v - 1),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        cycles.push(points);
        rest = body[end + 1..].trim_start();
    }
    let degree = cycles.iter().flatten().map(|&x| x + 1).max().unwrap_or(0);
    let mut img: Vec<usize> = (0..degree).collect();
    let mut moved = vec![false; degree];
    for c in &cycles {
        for (i, &x) in c.iter().enumerate() {
            if moved[x] {
                return Err(format!("point {} repeated", x + 1));
            }
            moved[x] = true;
            img[x] = c[(i + 1) % c.len()];
        }
    }
    Ok(img)
}

pub fn parse_permutations(text: &str, origin: &str) -> Result<GroupTable> {
    let (lines, name) = content_lines(text);
    let mut gens = Vec::with_capacity(lines.len());
    for &(no, line) in &lines {
        gens.push(parse_cycles(line).map_err(|m| parse_err(origin, no, m))?);
    }
    let degree = gens.iter().map(Vec::len).max().unwrap_or(0);
    for g in &mut gens {
        let len = g.len();
        g.extend(len..degree);
    }
    Ok(GroupTable::from_permutations(name.as_deref().unwrap_or(origin), &gens)?)
}

/// Resolves a group specifier: a path to a Cayley or permutation file
/// (told apart by the first content line), or a builtin name.
pub fn load_group(spec: &str) -> Result<GroupTable> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|source| AppError::Read { path: path.into(), source })?;
        let (lines, _) = content_lines(&text);
        let is_cayley = lines.first().is_some_and(|(_, l)| l.parse::<usize>().is_ok());
        return if is_cayley { parse_cayley(&text, spec) } else { parse_permutations(&text, spec) };
    }
    Ok(builtin(spec)?)
}

pub fn group_from_spec(spec: &str) -> Result<Arc<Group>> {
    Ok(Arc::new(Group::new(load_group(spec)?)?))
}

pub fn write_cayley(g: &GroupTable) -> String {
    let mut out = format!("# name: {}\n{}\n", g.name(), g.order());
    for row in g.table_rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// Header (group, field, p-local prime, dimension) followed by one
/// `i j k c` line per nonzero structure constant.
pub fn algebra_dump<F: Field>(a: &Algebra<F>, group: &str, p_local: Option<usize>) -> String {
    let mut out = String::new();
    let local = p_local.map_or("none".to_string(), |p| p.to_string());
    let _ = writeln!(out, "# group: {group}\n# field: {}\n# p_local: {local}\n# dim: {}", a.field.desc(), a.dim());
    for (i, j, k, c) in a.structure_constants() {
        let _ = writeln!(out, "{i} {j} {k} {}", a.field.render(&c));
    }
    out
}

/// Field, dimension, then one row-major matrix per group generator, with
/// entries as the integer encodings of field elements.
pub fn module_dump(w: &ModuleRep<Gf>) -> String {
    let mut out = format!("field {} {}\ndim {}\n", w.field.p(), w.field.degree(), w.dim());
    for (i, m) in w.generator_matrices().iter().enumerate() {
        let _ = writeln!(out, "gen {i}");
        for row in m {
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
    }
    out
}

pub fn parse_module_dump(text: &str, group: Arc<Group>, origin: &str) -> Result<ModuleRep<Gf>> {
    let (lines, _) = content_lines(text);
    let mut it = lines.into_iter();
    let mut next = |what: &str| it.next().ok_or_else(|| parse_err(origin, 0, format!("missing {what}")));
    let (no, l) = next("field line")?;
    let nums = |no: usize, l: &str, skip: usize| -> Result<Vec<u32>> {
        l.split_whitespace()
            .skip(skip)
            .map(|t| t.parse::<u32>().map_err(|_| parse_err(origin, no, format!("bad number `{t}`"))))
            .collect()
    };
    let f = match nums(no, l, 1)?[..] {
        [p, m] if l.starts_with("field") => Gf::new(p, m)?,
        _ => return Err(parse_err(origin, no, "expected `field p m`")),
    };
    let (no, l) = next("dim line")?;
    let dim = match nums(no, l, 1)?[..] {
        [d] if l.starts_with("dim") => d as usize,
        _ => return Err(parse_err(origin, no, "expected `dim n`")),
    };
    let mut gens = Vec::new();
    for _ in 0..group.table.generators().len() {
        let (no, l) = next("generator header")?;
        if !l.starts_with("gen") {
            return Err(parse_err(origin, no, "expected `gen i`"));
        }
        let mut m = Vec::with_capacity(dim);
        for _ in 0..dim {
            let (no, l) = next("matrix row")?;
            let row = nums(no, l, 0)?;
            if row.len() != dim || row.iter().any(|&x| x >= f.q()) {
                return Err(parse_err(origin, no, "malformed matrix row"));
            }
            m.push(row);
        }
        gens.push(m);
    }
    Ok(ModuleRep::with_dim(f, group, dim, gens)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use mackey_core::modrep::coset_module;

    #[test]
    fn cycles() {
        assert_eq!(parse_cycles("(1,2,3)(4,5)").unwrap(), [1, 2, 0, 4, 3]);
        assert_eq!(parse_cycles("()").unwrap(), Vec::<usize>::new());
        assert_eq!(parse_cycles("(1 3)").unwrap(), [2, 1, 0]);
        assert!(parse_cycles("(1,2)(2,3)").is_err());
        assert!(parse_cycles("(0,1)").is_err());
        assert!(parse_cycles("1,2").is_err());
    }

    #[test]
    fn permutation_file_builds_s3() {
        let g = parse_permutations("# name: S3\n(1,2,3)\n(1,2)\n", "test").unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.name(), "S3");
        assert!(!g.is_abelian());
    }

    #[test]
    fn cayley_round_trip() {
        let g = builtin("D4").unwrap();
        let back = parse_cayley(&write_cayley(&g), "test").unwrap();
        assert_eq!(back.table_rows(), g.table_rows());
        assert_eq!(back.name(), "D4");
    }

    #[test]
    fn cayley_errors_carry_line_numbers() {
        let err = parse_cayley("2\n0 1\n1 x\n", "f").unwrap_err();
        assert!(matches!(err, AppError::Parse { line: 3, .. }), "{err}");
        assert!(parse_cayley("3\n0 1 2\n", "f").is_err());
        assert!(matches!(parse_cayley("2\n0 1\n1 1\n", "f").unwrap_err(), AppError::Core(_)));
    }

    fn cycle_notation(img: &[usize]) -> String {
        let mut seen = vec![false; img.len()];
        let mut out = String::new();
        for start in 0..img.len() {
            if seen[start] || img[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push((x + 1).to_string());
                x = img[x];
            }
            let _ = write!(out, "({})", cycle.join(","));
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }

    proptest::proptest! {
        #[test]
        fn cycle_notation_round_trip(keys in proptest::collection::vec(proptest::prelude::any::<u32>(), 1..9)) {
            let mut img: Vec<usize> = (0..keys.len()).collect();
            img.sort_by_key(|&i| keys[i]);
            let parsed = parse_cycles(&cycle_notation(&img)).unwrap();
            // trailing fixed points are implicit in cycle notation
            let mut padded = parsed.clone();
            padded.extend(parsed.len()..img.len());
            proptest::prop_assert_eq!(padded, img);
        }

        #[test]
        fn cayley_text_round_trip(name in proptest::sample::select(vec!["C5", "S3", "Q8", "A4", "C2xC2"])) {
            let g = builtin(name).unwrap();
            let back = parse_cayley(&write_cayley(&g), "prop").unwrap();
            proptest::prop_assert_eq!(back.table_rows(), g.table_rows());
        }
    }

    #[test]
    fn module_dump_round_trip() {
        let g = Arc::new(Group::builtin("S3").unwrap());
        let f = Gf::new(2, 2).unwrap();
        let w = coset_module(&f, g.clone(), 0);
        let back = parse_module_dump(&module_dump(&w), g, "test").unwrap();
        assert_eq!(back.generator_matrices(), w.generator_matrices());
    }
}
