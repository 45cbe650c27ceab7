//! Text forms of groups: `perm: (1,2)(3,4); (1,3)` or a preset name.

use super::{FiniteGroup, GroupError, Perm, DEFAULT_ORDER_CAP};

fn cycles(specs: &[&str], degree: usize) -> Vec<Perm> {
    specs
        .iter()
        .map(|s| Perm::from_cycles(s, degree).expect("preset generator"))
        .collect()
}

/// Generators for a named preset: `Z1`…`Z60`, `S1`…`S6`, `D4`, `Q8`.
pub fn preset_generators(name: &str) -> Result<Vec<Perm>, GroupError> {
    let unknown = || GroupError::UnknownPreset(name.to_string());
    let upper = name.trim().to_ascii_uppercase();
    match upper.as_str() {
        "D4" => return Ok(cycles(&["(1,2,3,4)", "(1,3)"], 4)),
        "Q8" => return Ok(cycles(&["(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"], 8)),
        _ => {}
    }
    let (kind, n) = upper.split_at(1);
    let n: usize = n.parse().map_err(|_| unknown())?;
    match kind {
        "Z" | "C" if (1..=60).contains(&n) => {
            if n == 1 {
                return Ok(vec![Perm::identity(1)]);
            }
            let c: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
            Ok(vec![Perm(c)])
        }
        "S" if (1..=6).contains(&n) => {
            if n == 1 {
                return Ok(vec![Perm::identity(1)]);
            }
            let mut t: Vec<u32> = (0..n as u32).collect();
            t.swap(0, 1);
            let c: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
            Ok(vec![Perm(t), Perm(c)])
        }
        _ => Err(unknown()),
    }
}

/// Parse a group description and enumerate it.
pub fn parse_group(spec: &str) -> Result<FiniteGroup, GroupError> {
    let spec = spec.trim();
    if let Some(body) = spec.strip_prefix("perm:") {
        let gens: Vec<&str> = body
            .split(';')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .collect();
        if gens.is_empty() {
            return Err(GroupError::Parse(spec.to_string()));
        }
        let degree = gens
            .iter()
            .map(|g| Perm::max_point_in(g))
            .max()
            .unwrap_or(1)
            .max(1);
        let perms = gens
            .iter()
            .map(|g| Perm::from_cycles(g, degree))
            .collect::<Result<Vec<_>, _>>()?;
        FiniteGroup::enumerate(spec, &perms, DEFAULT_ORDER_CAP)
    } else {
        let gens = preset_generators(spec)?;
        FiniteGroup::enumerate(&spec.to_ascii_uppercase(), &gens, DEFAULT_ORDER_CAP)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets() {
        for (name, n) in [
            ("Z1", 1),
            ("Z2", 2),
            ("Z4", 4),
            ("Z6", 6),
            ("S3", 6),
            ("S4", 24),
            ("S5", 120),
            ("D4", 8),
            ("Q8", 8),
        ] {
            assert_eq!(parse_group(name).unwrap().order(), n, "{name}");
        }
        assert!(parse_group("S9").is_err());
        assert!(parse_group("X3").is_err());
    }

    #[test]
    fn perm_text() {
        let g = parse_group("perm: (1,2)(3,4); (1,3)").unwrap();
        assert_eq!(g.order(), 8);
        assert!(parse_group("perm:").is_err());
        assert!(parse_group("perm: (1,2").is_err());
    }

    #[test]
    fn q8_has_one_involution() {
        let q8 = parse_group("Q8").unwrap();
        let invols = (1..8).filter(|&i| q8.element_order(i) == 2).count();
        assert_eq!(invols, 1);
    }
}
