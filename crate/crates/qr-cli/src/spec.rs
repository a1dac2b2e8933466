//! The quandle specifier grammar.
//!
//! `R:<n>` dihedral, `C:<odd>` commutative, `T:<m>` trivial, `X6` the
//! order-6 involutory quandle, `core:Z<n>` / `conj:Z<n>` over the cyclic
//! group, `alex:Z<n>:<u>` the Alexander quandle `x*y = u x + (1-u) y`
//! with `gcd(u, n) = 1`, `prod:(<spec>,<spec>)` direct products, and
//! `file:<path>` for operation-table files.

use quandle_rings::quandle::{FiniteGroup, Quandle};
use std::fmt;
use std::path::PathBuf;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuandleSpec {
    Dihedral(usize),
    Commutative(usize),
    Trivial(usize),
    X6,
    CoreZ(usize),
    ConjZ(usize),
    AlexZ { n: usize, unit: usize },
    Prod(Box<QuandleSpec>, Box<QuandleSpec>),
    File(PathBuf),
}

impl fmt::Display for QuandleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuandleSpec::Dihedral(n) => write!(f, "R:{n}"),
            QuandleSpec::Commutative(n) => write!(f, "C:{n}"),
            QuandleSpec::Trivial(m) => write!(f, "T:{m}"),
            QuandleSpec::X6 => write!(f, "X6"),
            QuandleSpec::CoreZ(n) => write!(f, "core:Z{n}"),
            QuandleSpec::ConjZ(n) => write!(f, "conj:Z{n}"),
            QuandleSpec::AlexZ { n, unit } => write!(f, "alex:Z{n}:{unit}"),
            QuandleSpec::Prod(a, b) => write!(f, "prod:({a},{b})"),
            QuandleSpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

fn parse_usize(s: &str, what: &str) -> Result<usize, String> {
    s.parse::<usize>()
        .map_err(|_| format!("invalid {what}: {s:?}"))
}

impl std::str::FromStr for QuandleSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s == "X6" || s == "x6" {
            return Ok(QuandleSpec::X6);
        }
        if let Some(rest) = s.strip_prefix("R:") {
            return Ok(QuandleSpec::Dihedral(parse_usize(rest, "dihedral order")?));
        }
        if let Some(rest) = s.strip_prefix("C:") {
            return Ok(QuandleSpec::Commutative(parse_usize(rest, "commutative order")?));
        }
        if let Some(rest) = s.strip_prefix("T:") {
            return Ok(QuandleSpec::Trivial(parse_usize(rest, "trivial order")?));
        }
        if let Some(rest) = s.strip_prefix("core:Z") {
            return Ok(QuandleSpec::CoreZ(parse_usize(rest, "cyclic order")?));
        }
        if let Some(rest) = s.strip_prefix("conj:Z") {
            return Ok(QuandleSpec::ConjZ(parse_usize(rest, "cyclic order")?));
        }
        if let Some(rest) = s.strip_prefix("alex:Z") {
            let (n, u) = rest
                .split_once(':')
                .ok_or_else(|| format!("expected alex:Z<n>:<unit>, got {s:?}"))?;
            return Ok(QuandleSpec::AlexZ {
                n: parse_usize(n, "cyclic order")?,
                unit: parse_usize(u, "unit")?,
            });
        }
        if let Some(rest) = s.strip_prefix("prod:") {
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| format!("expected prod:(<spec>,<spec>), got {s:?}"))?;
            // split on the comma at parenthesis depth zero
            let mut depth = 0usize;
            let mut split = None;
            for (i, ch) in inner.char_indices() {
                match ch {
                    '(' => depth += 1,
                    ')' => depth = depth.saturating_sub(1),
                    ',' if depth == 0 => {
                        split = Some(i);
                        break;
                    }
                    _ => {}
                }
            }
            let i = split.ok_or_else(|| format!("missing comma in {s:?}"))?;
            let a: QuandleSpec = inner[..i].parse()?;
            let b: QuandleSpec = inner[i + 1..].parse()?;
            return Ok(QuandleSpec::Prod(Box::new(a), Box::new(b)));
        }
        if let Some(rest) = s.strip_prefix("file:") {
            return Ok(QuandleSpec::File(PathBuf::from(rest)));
        }
        Err(format!(
            "unrecognized quandle spec {s:?} (expected R:<n>, C:<odd>, T:<m>, X6, \
             core:Z<n>, conj:Z<n>, alex:Z<n>:<u>, prod:(<spec>,<spec>) or file:<path>)"
        ))
    }
}

impl QuandleSpec {
    /// Build the quandle this specifier denotes.
    pub fn build(&self) -> Result<Quandle, String> {
        match self {
            QuandleSpec::Dihedral(n) => {
                if *n == 0 {
                    return Err("dihedral order must be positive".into());
                }
                Ok(Quandle::dihedral(*n))
            }
            QuandleSpec::Commutative(n) => {
                Quandle::commutative(*n).map_err(|e| e.to_string())
            }
            QuandleSpec::Trivial(m) => {
                if *m == 0 {
                    return Err("trivial order must be positive".into());
                }
                Ok(Quandle::trivial(*m))
            }
            QuandleSpec::X6 => Ok(Quandle::x6()),
            QuandleSpec::CoreZ(n) => {
                if *n == 0 {
                    return Err("cyclic order must be positive".into());
                }
                Ok(Quandle::core(&FiniteGroup::cyclic(*n)))
            }
            QuandleSpec::ConjZ(n) => {
                if *n == 0 {
                    return Err("cyclic order must be positive".into());
                }
                Ok(Quandle::conj(&FiniteGroup::cyclic(*n)))
            }
            QuandleSpec::AlexZ { n, unit } => {
                if *n == 0 {
                    return Err("cyclic order must be positive".into());
                }
                if gcd(*unit, *n) != 1 {
                    return Err(format!("unit {unit} is not invertible mod {n}"));
                }
                let g = FiniteGroup::cyclic(*n);
                let f: Vec<usize> = (0..*n).map(|x| (x * unit) % n).collect();
                Quandle::alexander(&g, &f)
                    .map(|q| q.with_label(format!("Alex(Z{n};{unit})")))
                    .map_err(|e| e.to_string())
            }
            QuandleSpec::Prod(a, b) => Ok(Quandle::product(&a.build()?, &b.build()?)),
            QuandleSpec::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
                Quandle::from_table_str(&text)
                    .map(|q| q.with_label(format!("file:{}", path.display())))
                    .map_err(|e| e.to_string())
            }
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_canonical_forms() {
        for s in [
            "R:3",
            "C:5",
            "T:2",
            "X6",
            "core:Z4",
            "conj:Z6",
            "alex:Z5:2",
            "prod:(R:3,T:2)",
            "prod:(prod:(R:3,T:2),X6)",
            "file:/tmp/q.txt",
        ] {
            let spec: QuandleSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
    }

    #[test]
    fn build_shapes() {
        let q: QuandleSpec = "prod:(R:3,T:2)".parse().unwrap();
        assert_eq!(q.build().unwrap().order(), 6);
        let q: QuandleSpec = "alex:Z5:4".parse().unwrap();
        // unit -1 gives the dihedral table
        assert_eq!(q.build().unwrap().table(), Quandle::dihedral(5).table());
        assert!("alex:Z6:2".parse::<QuandleSpec>().unwrap().build().is_err());
        assert!("C:4".parse::<QuandleSpec>().unwrap().build().is_err());
        assert!("bogus".parse::<QuandleSpec>().is_err());
    }
}
